//! Backtracking search for a code of an arbitrary interval.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{chain_product, positions, CodeEntry, LehmerCode};
use crate::bruhat::{BruhatInterval, Poly};
use crate::system::CoxeterSystem;

/// Limits for [`CoxeterSystem::search_code`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Wall-clock budget shared by all candidate chain multisets.
    pub budget: Duration,
    /// Try candidate multisets in parallel.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Duration::from_secs(60),
            parallel: true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { code: LehmerCode },
    /// Every chain multiset matching the Poincare polynomial was refuted.
    NoneExists { candidates: Vec<Vec<usize>> },
    /// The budget ran out; `refuted` lists multisets that were fully ruled out.
    Unknown { candidates: Vec<Vec<usize>>, refuted: Vec<Vec<usize>> },
}

impl SearchOutcome {
    pub fn code(&self) -> Option<&LehmerCode> {
        match self {
            SearchOutcome::Found { code } => Some(code),
            _ => None,
        }
    }
}

/// Nonincreasing sequences `a_1 >= ... >= a_k >= 2` with `prod [a_i]_q = p`.
pub fn chain_candidates(p: &Poly) -> Vec<Vec<usize>> {
    fn rec(target: u64, max: usize, rank: usize, acc: &mut Vec<usize>, p: &Poly, out: &mut Vec<Vec<usize>>) {
        if target == 1 {
            if rank == 0 && &Poly::q_product(acc) == p {
                out.push(acc.clone());
            }
            return;
        }
        for a in (2..=max.min(rank + 1)).rev() {
            if target % a as u64 == 0 {
                acc.push(a);
                rec(target / a as u64, a, rank - (a - 1), acc, p, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    let n = p.value_at_one();
    rec(n, n as usize, p.degree(), &mut Vec::new(), p, &mut out);
    out
}

struct Poset {
    covers_up: Vec<Vec<u32>>,
    cover: Vec<Vec<u64>>,
    down: Vec<usize>,
    up: Vec<usize>,
}

impl Poset {
    fn new(sys: &CoxeterSystem, interval: &BruhatInterval) -> Poset {
        let n = interval.len();
        let words = n.div_ceil(64);
        let mut covers_up = vec![Vec::new(); n];
        let mut covers_down = vec![Vec::new(); n];
        let mut cover = vec![vec![0u64; words]; n];
        for [lo, hi] in interval.covers(sys) {
            covers_up[lo].push(hi as u32);
            covers_down[hi].push(lo);
            cover[lo][hi / 64] |= 1 << (hi % 64);
        }
        let close = |adj: &Vec<Vec<usize>>, order: &mut dyn Iterator<Item = usize>| {
            let mut sets = vec![vec![0u64; words]; n];
            for v in order {
                sets[v][v / 64] |= 1 << (v % 64);
                for &x in &adj[v] {
                    let (a, b) = if x < v { sets.split_at_mut(v) } else { let (b, a) = sets.split_at_mut(x); (a, b) };
                    let (src, dst) = if x < v { (&a[x], &mut b[0]) } else { (&a[0], &mut b[v]) };
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d |= s;
                    }
                }
            }
            sets.iter().map(|s| s.iter().map(|w| w.count_ones() as usize).sum()).collect::<Vec<_>>()
        };
        let covers_up_usize: Vec<Vec<usize>> = covers_up.iter().map(|v| v.iter().map(|&x| x as usize).collect()).collect();
        let down = close(&covers_down, &mut (0..n));
        let up = close(&covers_up_usize, &mut (0..n).rev());
        Poset { covers_up, cover, down, up }
    }

    fn covers(&self, lo: usize, hi: usize) -> bool {
        self.cover[lo][hi / 64] >> (hi % 64) & 1 == 1
    }
}

struct Layout {
    tuples: Vec<Vec<usize>>,
    preds: Vec<Vec<usize>>,
    need_down: Vec<usize>,
    need_up: Vec<usize>,
    /// For `e_(i-1)` with `a_(i-1) = a_i`: position of `e_i`, which comes earlier and must
    /// get a smaller image (swapping equal chains gives another code).
    after: Vec<Option<usize>>,
}

impl Layout {
    fn new(chains: &[usize]) -> Layout {
        let mut tuples = chain_product(chains);
        tuples.sort_by_key(|t| (t.iter().sum::<usize>(), t.clone()));
        let pos: std::collections::HashMap<Vec<usize>, usize> =
            tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let unit = |i: usize| {
            let mut t = vec![0; chains.len()];
            t[i] = 1;
            t
        };
        let mut preds = Vec::new();
        let mut after = Vec::new();
        for t in &tuples {
            preds.push(
                (0..chains.len())
                    .filter(|&i| t[i] > 0)
                    .map(|i| {
                        let mut s = t.clone();
                        s[i] -= 1;
                        pos[&s]
                    })
                    .collect(),
            );
            let single = (1..chains.len()).find(|&i| *t == unit(i - 1) && chains[i - 1] == chains[i]);
            after.push(single.map(|i| pos[&unit(i)]));
        }
        let need_down = tuples.iter().map(|t| t.iter().map(|x| x + 1).product()).collect();
        let need_up = tuples
            .iter()
            .map(|t| t.iter().zip(chains).map(|(x, a)| a - x).product())
            .collect();
        Layout {
            tuples,
            preds,
            need_down,
            need_up,
            after,
        }
    }
}

enum Step {
    Done,
    Dead,
    Timeout,
}

struct Search<'a> {
    poset: &'a Poset,
    layout: &'a Layout,
    image: Vec<usize>,
    used: Vec<bool>,
    deadline: Instant,
    stop: &'a AtomicBool,
    nodes: u64,
    prune: bool,
}

impl Search<'_> {
    fn run(&mut self, k: usize) -> Step {
        if k == self.layout.tuples.len() {
            return Step::Done;
        }
        self.nodes += 1;
        if self.nodes % 1024 == 0 && (Instant::now() > self.deadline || self.stop.load(Ordering::Relaxed)) {
            return Step::Timeout;
        }
        let preds = &self.layout.preds[k];
        let candidates: Vec<usize> = if preds.is_empty() {
            vec![0]
        } else {
            let first = self.image[preds[0]];
            self.poset.covers_up[first]
                .iter()
                .map(|&v| v as usize)
                .filter(|&v| {
                    !self.used[v]
                        && preds[1..].iter().all(|&q| self.poset.covers(self.image[q], v))
                        && (!self.prune
                            || self.poset.down[v] >= self.layout.need_down[k]
                                && self.poset.up[v] >= self.layout.need_up[k]
                                && self.layout.after[k].is_none_or(|q| self.image[q] < v))
                })
                .collect()
        };
        for v in candidates {
            self.image[k] = v;
            self.used[v] = true;
            match self.run(k + 1) {
                Step::Dead => {}
                other => return other,
            }
            self.used[v] = false;
        }
        Step::Dead
    }
}

enum Attempt {
    Found(Vec<usize>),
    Refuted,
    Timeout,
}

fn attempt(poset: &Poset, chains: &[usize], n: usize, deadline: Instant, stop: &AtomicBool, prune: bool) -> Attempt {
    let layout = Layout::new(chains);
    let mut s = Search {
        poset,
        layout: &layout,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        deadline,
        stop,
        nodes: 0,
        prune,
    };
    match s.run(0) {
        Step::Done => Attempt::Found(s.image),
        Step::Dead => Attempt::Refuted,
        Step::Timeout => Attempt::Timeout,
    }
}

pub(super) fn search(sys: &CoxeterSystem, interval: &BruhatInterval, options: &SearchOptions) -> SearchOutcome {
    search_with(sys, interval, options, true)
}

/// `prune = false` drops the down/up-set bounds and the symmetry breaking.
fn search_with(sys: &CoxeterSystem, interval: &BruhatInterval, options: &SearchOptions, prune: bool) -> SearchOutcome {
    let candidates = chain_candidates(&interval.poincare());
    let deadline = Instant::now() + options.budget;
    let poset = Poset::new(sys, interval);
    let n = interval.len();
    let stop = AtomicBool::new(false);
    let run = |chains: &Vec<usize>| {
        let r = attempt(&poset, chains, n, deadline, &stop, prune);
        if matches!(r, Attempt::Found(_)) {
            stop.store(true, Ordering::Relaxed);
        }
        r
    };
    let results: Vec<Attempt> = if options.parallel {
        candidates.par_iter().map(run).collect()
    } else {
        let mut out = Vec::new();
        for c in &candidates {
            let r = run(c);
            let found = matches!(r, Attempt::Found(_));
            out.push(r);
            if found {
                break;
            }
        }
        out
    };
    let elements: Vec<_> = interval.elements().cloned().collect();
    debug_assert_eq!(positions(interval).len(), elements.len());
    let mut refuted = Vec::new();
    let mut timed_out = false;
    for (chains, r) in candidates.iter().zip(results) {
        match r {
            Attempt::Found(image) => {
                let layout = Layout::new(chains);
                let entries = layout
                    .tuples
                    .into_iter()
                    .zip(image)
                    .map(|(tuple, v)| CodeEntry {
                        tuple,
                        element: elements[v].clone(),
                    })
                    .collect();
                return SearchOutcome::Found {
                    code: LehmerCode::new(chains.clone(), entries),
                };
            }
            Attempt::Refuted => refuted.push(chains.clone()),
            Attempt::Timeout => timed_out = true,
        }
    }
    if timed_out {
        SearchOutcome::Unknown { candidates, refuted }
    } else {
        SearchOutcome::NoneExists { candidates }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genset::GenSet;

    fn full(tag: &str, rank: usize) -> (CoxeterSystem, BruhatInterval) {
        let sys = CoxeterSystem::build(tag, Some(rank)).unwrap();
        let w0 = sys.longest_element(sys.all()).unwrap();
        let iv = sys.interval(&w0, GenSet::EMPTY).unwrap();
        (sys, iv)
    }

    #[test]
    fn candidates_from_poincare() {
        assert_eq!(chain_candidates(&Poly::q_product(&[4, 2])), vec![vec![4, 2]]);
        assert_eq!(chain_candidates(&Poly::q_product(&[3, 2, 3])), vec![vec![3, 3, 2]]);
        assert!(chain_candidates(&Poly::new(vec![1, 2, 1, 1])).is_empty());
    }

    #[test]
    fn b2_has_chains_two_and_four() {
        let (sys, iv) = full("B", 2);
        let out = sys.search_code(&iv, &SearchOptions::default());
        let code = out.code().expect("B2 admits a code");
        assert_eq!(code.chains, vec![4, 2]);
        assert!(code.verify(&sys, &iv));
    }

    #[test]
    fn h3_longest_element() {
        let (sys, iv) = full("H", 3);
        let out = sys.search_code(&iv, &SearchOptions::default());
        let code = out.code().expect("H3 admits a code");
        assert_eq!(code.chains, vec![10, 6, 2]);
        assert!(code.verify(&sys, &iv));
    }

    #[test]
    fn pruning_does_not_change_verdicts() {
        let f4 = CoxeterSystem::build("F", Some(4)).unwrap();
        let w0 = f4.longest_element(f4.all()).unwrap();
        let iv = f4.interval_capped(&w0, GenSet::EMPTY, 24).unwrap();
        let opts = SearchOptions::default();
        assert!(matches!(search_with(&f4, &iv, &opts, true), SearchOutcome::NoneExists { .. }));
        assert!(matches!(search_with(&f4, &iv, &opts, false), SearchOutcome::NoneExists { .. }));
        let b3 = CoxeterSystem::build("B", Some(3)).unwrap();
        for w in b3.elements(None).unwrap() {
            let iv = b3.interval(&w, GenSet::EMPTY).unwrap();
            let a = search_with(&b3, &iv, &opts, true).code().map(|c| c.chains.clone());
            let b = search_with(&b3, &iv, &opts, false).code().map(|c| c.chains.clone());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn equal_chains() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w = a2.from_permutation(&[2, 3, 1]).unwrap();
        let iv = a2.interval(&w, GenSet::EMPTY).unwrap();
        let code = a2.search_code(&iv, &SearchOptions::default()).code().cloned().unwrap();
        assert_eq!(code.chains, vec![2, 2]);
        assert!(code.verify(&a2, &iv));
    }

    #[test]
    fn non_palindromic_interval_has_no_candidates() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
        let iv = a3.interval(&w, GenSet::EMPTY).unwrap();
        let out = a3.search_code(&iv, &SearchOptions::default());
        assert!(matches!(out, SearchOutcome::NoneExists { ref candidates } if candidates.is_empty()));
    }
}
