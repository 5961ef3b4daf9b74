//! Timing of the exhaustive BP poset against the type A pattern algorithm.

use std::fmt;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bp::MAX_SWEEP_RANK;
use crate::error::Result;
use crate::perm::format_one_line;
use crate::system::CoxeterSystem;

pub const DEFAULT_SEED: u64 = 20250601;

/// Largest `n` for which the exhaustive path runs by default.
pub const NAIVE_LIMIT: usize = 14;

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub permutation: String,
    pub naive_ms: Option<f64>,
    pub fast_ms: f64,
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub naive_limit: usize,
    pub rows: Vec<BenchRow>,
    pub naive_total_ms: Option<f64>,
    pub fast_total_ms: f64,
    pub speedup: Option<f64>,
    pub notice: Option<String>,
}

impl BenchReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree != Some(false))
    }
}

/// Uniform random permutations of `1..=n` from a seeded stream.
pub fn random_permutations(n: usize, samples: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let mut p: Vec<usize> = (1..=n).collect();
            p.shuffle(&mut rng);
            p
        })
        .collect()
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Times `bp_poset` (sweep over all `2^(n-1)` subsets) and `typea_bp_poset` on the same
/// random permutations of `S_n`. The sweep is skipped above `naive_limit`.
pub fn bench_bp_poset(n: usize, samples: usize, seed: u64, naive_limit: usize) -> Result<BenchReport> {
    let sys = CoxeterSystem::build("A", Some(n.max(2) - 1))?;
    let run_naive = n <= naive_limit.min(MAX_SWEEP_RANK + 1);
    let mut rows = Vec::new();
    for p in random_permutations(n.max(2), samples, seed) {
        let w = sys.from_permutation(&p)?;
        let t = Instant::now();
        let fast = sys.typea_bp_poset(&w)?;
        let fast_ms = ms(t);
        let (naive_ms, agree) = if run_naive {
            let t = Instant::now();
            let naive = sys.bp_poset(&w)?;
            (Some(ms(t)), Some(naive == fast))
        } else {
            (None, None)
        };
        let shown: Vec<i64> = p.iter().map(|&x| x as i64).collect();
        rows.push(BenchRow {
            permutation: format_one_line(&shown),
            naive_ms,
            fast_ms,
            agree,
        });
    }
    let fast_total_ms = rows.iter().map(|r| r.fast_ms).sum();
    let naive_total_ms: Option<f64> = run_naive.then(|| rows.iter().filter_map(|r| r.naive_ms).sum());
    Ok(BenchReport {
        n,
        samples,
        seed,
        naive_limit,
        speedup: naive_total_ms.map(|t| t / f64::max(fast_total_ms, 1e-9)),
        naive_total_ms,
        fast_total_ms,
        notice: (!run_naive).then(|| format!("exhaustive sweep skipped: n = {n} exceeds the limit {naive_limit}")),
        rows,
    })
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}, samples = {}, seed = {}", self.n, self.samples, self.seed)?;
        let width = self.n.max(11) + if self.n > 9 { self.n } else { 0 };
        writeln!(f, "{:<width$}  {:>12}  {:>12}  agree", "permutation", "naive (ms)", "fast (ms)")?;
        for r in &self.rows {
            let naive = r.naive_ms.map_or("-".to_string(), |t| format!("{t:.3}"));
            let agree = r.agree.map_or("-", |a| if a { "yes" } else { "NO" });
            writeln!(f, "{:<width$}  {naive:>12}  {:>12.3}  {agree}", r.permutation, r.fast_ms)?;
        }
        let naive = self.naive_total_ms.map_or("-".to_string(), |t| format!("{t:.3}"));
        writeln!(f, "{:<width$}  {naive:>12}  {:>12.3}", "total", self.fast_total_ms)?;
        if let Some(s) = self.speedup {
            writeln!(f, "speedup: {s:.1}x")?;
        }
        if let Some(n) = &self.notice {
            writeln!(f, "{n}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_agreeing() {
        assert_eq!(random_permutations(6, 3, 7), random_permutations(6, 3, 7));
        let r = bench_bp_poset(7, 5, DEFAULT_SEED, NAIVE_LIMIT).unwrap();
        assert!(r.all_agree());
        assert_eq!(r.rows.len(), 5);
        let r = bench_bp_poset(4, 3, 1, 2).unwrap();
        assert!(r.notice.is_some() && r.speedup.is_none());
    }
}
