//! Named end-to-end checks reproducing the worked examples and verifying the main
//! theorems exhaustively on small groups. Drives `verify-paper` and the acceptance tests.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::bench::{bench_bp_poset, random_permutations};
use crate::bruhat::Poly;
use crate::element::{Element, Side};
use crate::error::Result;
use crate::genset::GenSet;
use crate::lehmer::{SearchOptions, SearchOutcome};
use crate::perm::{all_permutations, is_smooth_permutation};
use crate::roots::RootSystem;
use crate::schubert::SchubertCalculus;
use crate::system::CoxeterSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub summary: &'static str,
    pub status: Status,
    /// What was examined, and any failures.
    pub details: Vec<String>,
    pub seconds: f64,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random permutations of `S_8` compared against the exhaustive BP poset.
    pub random_samples: usize,
    /// Budget for each Lehmer code search.
    pub search_budget: Duration,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: crate::bench::DEFAULT_SEED,
            random_samples: 1000,
            search_budget: Duration::from_secs(600),
        }
    }
}

/// Collects observations and failures for one check.
#[derive(Default)]
pub struct Log {
    details: Vec<String>,
    failed: bool,
}

impl Log {
    pub fn note(&mut self, s: impl Into<String>) {
        self.details.push(s.into());
    }
    pub fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failed = true;
            self.details.push(format!("FAILED: {}", what.into()));
        }
    }
}

type Body = fn(&SuiteOptions, &mut Log) -> Result<()>;

pub struct Check {
    pub name: &'static str,
    pub summary: &'static str,
    /// Run only when requested by name.
    pub long: bool,
    /// Wall-clock limit; exceeding it fails the check.
    pub limit: Duration,
    body: Body,
}

const fn check(name: &'static str, summary: &'static str, long: bool, secs: u64, body: Body) -> Check {
    Check {
        name,
        summary,
        long,
        limit: Duration::from_secs(secs),
        body,
    }
}

pub static CHECKS: &[Check] = &[
    check("c2-counterexample", "affine C2: srstrsr is rationally smooth with no Grassmannian BP decomposition", false, 5, c2_counterexample),
    check("bp-oracles", "J-star test, definition and Poincare factorization agree on A3 A4 B3 C3 D4 G2", false, 600, bp_oracles),
    check("bp-lattice", "BP(w) is closed under union and intersection, including rank-3 affine groups", false, 600, bp_lattice),
    check("bp-posets", "BP posets of 4231, 3412, 65178432 and the seven-factor linear extension", false, 60, bp_posets),
    check("type-a-fast-path", "pattern algorithm equals the exhaustive BP poset; speedup at n = 12", false, 600, type_a_fast_path),
    check("degrees", "P(w0) is the product of [d_i]_q over the degrees", false, 60, degrees),
    check("lemmas", "simple-root and union lemmas on A4 B4 C4 D5 F4 G2", false, 900, lemmas),
    check("lehmer", "five-element quotient code, constructive codes on S5, searched codes on S5 B3 H3", false, 600, lehmer),
    check("schubert", "structure matrices of smooth w in S5 are unitriangular with a unique transversal", false, 600, schubert),
    check("propositions", "singleton, totally disconnected, order ideal, factor smoothness, product map laws", false, 600, propositions),
    check("f4-lehmer", "no generalized Lehmer code exists for [e, w0] in F4", true, 3600, f4_lehmer),
    check("e6-lemma", "simple-root lemma on E6", true, 3600, e6_lemma),
];

/// Runs the selected checks: `only` restricts to the named ones (running them even if long);
/// otherwise every non-long check runs, plus the long ones named in `include_long`.
pub fn run(only: &[String], include_long: &[String], options: &SuiteOptions) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .filter(|c| {
            if only.is_empty() {
                !c.long || include_long.iter().any(|n| n == c.name || n == "all")
            } else {
                only.iter().any(|n| n == c.name)
            }
        })
        .map(|c| run_check(c, options))
        .collect()
}

pub fn find(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

pub fn run_check(check: &Check, options: &SuiteOptions) -> CheckResult {
    let mut log = Log::default();
    let start = Instant::now();
    let outcome = (check.body)(options, &mut log);
    let elapsed = start.elapsed();
    if let Err(e) = outcome {
        log.expect(false, format!("error: {e}"));
    }
    log.expect(
        elapsed <= check.limit,
        format!("took {:.1}s, limit {}s", elapsed.as_secs_f64(), check.limit.as_secs()),
    );
    CheckResult {
        name: check.name,
        summary: check.summary,
        status: if log.failed { Status::Fail } else { Status::Pass },
        details: log.details,
        seconds: elapsed.as_secs_f64(),
    }
}

fn sys(tag: &str, rank: usize) -> Result<CoxeterSystem> {
    CoxeterSystem::build(tag, Some(rank))
}

const SMALL: [(&str, usize); 6] = [("A", 3), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G", 2)];
const PROPERTY_GROUPS: [(&str, usize); 4] = [("A", 3), ("A", 4), ("B", 3), ("D", 4)];

fn c2_counterexample(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    let c = CoxeterSystem::build("affineC2", None)?;
    let w = c.parse_word("srstrsr")?;
    log.expect(w.length() == 7, "length 7");
    log.expect(w.right_descents() == c.parse_genset("r")?, "right descent set {r}");
    for (j, left, right) in [("rs", "srst", "rsr"), ("rt", "srstrs", "r"), ("st", "srstrsr", "e")] {
        let jset = c.parse_genset(j)?;
        let d = c.parabolic_decompose(&w, jset, Side::Right)?;
        log.expect(
            d.quotient_part == c.parse_word(left)? && d.parabolic_part == c.parse_word(right)?,
            format!("w = {left} * {right} for J = {{{j}}}"),
        );
        log.expect(!c.is_bp(&w, jset)?, format!("{{{j}}} is not in BP(w)"));
    }
    let r = c.parse_genset("r")?;
    let wr = c.quotient_part(&w, r);
    let p = c.poincare(&wr, r)?;
    log.note(format!("P^{{r}}(w^{{r}}) = {p}"));
    log.expect(p == Poly::new(vec![1, 2, 3, 4, 3, 2, 1]), "P^{r}(w^{r}) = 1+2q+3q^2+4q^3+3q^4+2q^5+q^6");
    log.expect(c.is_bp(&w, r)?, "{r} in BP(w)");
    log.expect(c.is_rationally_smooth(&w, GenSet::EMPTY)?, "P(w) palindromic");
    log.expect(c.grassmannian_bp(&w)?.is_none(), "no Grassmannian BP decomposition");
    Ok(())
}

fn bp_oracles(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    for (t, r) in SMALL {
        let sys = sys(t, r)?;
        let roots = RootSystem::new(&sys)?;
        let elements = sys.elements(None)?;
        let subsets: Vec<GenSet> = sys.all().subsets().collect();
        let disagreements: Vec<String> = elements
            .par_iter()
            .flat_map_iter(|w| {
                let (sys, roots) = (&sys, &roots);
                subsets.iter().filter_map(move |&j| {
                    let a = roots.jstar_bp_test(w, j).ok()?;
                    let b = sys.is_bp(w, j).ok()?;
                    let c = sys.is_bp_poincare(w, j).ok()?;
                    (a != b || b != c).then(|| format!("{} J={j}: jstar={a} def={b} poincare={c}", w.display(sys)))
                })
            })
            .collect();
        log.note(format!("{t}{r}: {} pairs, {} disagreements", elements.len() * subsets.len(), disagreements.len()));
        for d in disagreements.iter().take(5) {
            log.expect(false, d.clone());
        }
    }
    Ok(())
}

fn bp_lattice(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    for (t, r) in SMALL {
        let sys = sys(t, r)?;
        let elements = sys.elements(None)?;
        let bad: Vec<Element> = elements
            .par_iter()
            .filter(|w| !sys.bp_family(w).map(|f| f.is_lattice()).unwrap_or(false))
            .cloned()
            .collect();
        log.note(format!("{t}{r}: {} elements", elements.len()));
        log.expect(bad.is_empty(), format!("{t}{r}: {} families not closed", bad.len()));
    }
    for tag in ["affineC2", "affineA2", "affineG2"] {
        let sys = CoxeterSystem::build(tag, None)?;
        let elements = sys.elements(Some(12))?;
        let bad = elements
            .par_iter()
            .filter(|w| !sys.bp_family(w).map(|f| f.is_lattice()).unwrap_or(false))
            .count();
        log.note(format!("{tag}: {} elements of length <= 12", elements.len()));
        log.expect(bad == 0, format!("{tag}: {bad} families not closed"));
    }
    Ok(())
}

fn labelled_covers(p: &crate::bp::BpPoset) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out: Vec<_> = p
        .covers()
        .into_iter()
        .map(|[a, b]| (p.blocks[a].labels(), p.blocks[b].labels()))
        .collect();
    out.sort();
    out
}

fn bp_posets(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    let a3 = sys("A", 3)?;
    let p = a3.bp_poset(&a3.from_permutation(&[4, 2, 3, 1])?)?;
    log.expect(
        labelled_covers(&p) == vec![(vec![1], vec![2]), (vec![3], vec![2])] && p.all_singletons(),
        "bp(4231): 1 < 2 > 3",
    );
    let p = a3.bp_poset(&a3.from_permutation(&[3, 4, 1, 2])?)?;
    log.expect(
        labelled_covers(&p) == vec![(vec![2], vec![1, 3])] && p.blocks.len() == 2,
        "bp(3412): block {2} below block {1,3}",
    );
    let a7 = sys("A", 7)?;
    let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2])?;
    let p = a7.bp_poset(&w)?;
    let expected: Vec<(Vec<usize>, Vec<usize>)> =
        [(1, 3), (2, 3), (4, 3), (5, 4), (6, 4), (7, 4)].iter().map(|&(a, b)| (vec![a], vec![b])).collect();
    log.expect(labelled_covers(&p) == expected, "bp(65178432) covers 1,2,4 < 3 and 5,6,7 < 4");
    let order: Vec<usize> = [3, 1, 4, 6, 2, 7, 5].iter().map(|x| x - 1).collect();
    let factors: Vec<String> = a7
        .linear_extension_factorization(&w, &order)?
        .iter()
        .map(|x| a7.format_element(x))
        .collect();
    log.note(format!("factors: {}", factors.join(" ")));
    log.expect(
        factors == ["15623478", "31245678", "12374568", "12347856", "13245678", "12345687", "12346578"],
        "seven factors along (3,1,4,6,2,7,5)",
    );
    Ok(())
}

fn type_a_fast_path(options: &SuiteOptions, log: &mut Log) -> Result<()> {
    let a5 = sys("A", 5)?;
    let bad = all_permutations(6)
        .par_iter()
        .filter(|p| {
            let w = a5.from_permutation(p).expect("permutation");
            a5.typea_bp_poset(&w).ok() != a5.bp_poset(&w).ok()
        })
        .count();
    log.note("S6: all 720 permutations");
    log.expect(bad == 0, format!("S6: {bad} disagreements"));
    let a7 = sys("A", 7)?;
    let perms = random_permutations(8, options.random_samples, options.seed);
    let bad = perms
        .par_iter()
        .filter(|p| {
            let w = a7.from_permutation(p).expect("permutation");
            a7.typea_bp_poset(&w).ok() != a7.bp_poset(&w).ok()
        })
        .count();
    log.note(format!("S8: {} random permutations, seed {}", perms.len(), options.seed));
    log.expect(bad == 0, format!("S8: {bad} disagreements"));
    let report = bench_bp_poset(12, 10, options.seed, 12)?;
    let speedup = report.speedup.unwrap_or(0.0);
    let slowest = report.rows.iter().map(|r| r.fast_ms).fold(0.0, f64::max);
    log.note(format!("n = 12: speedup {speedup:.0}x, slowest fast path {slowest:.3} ms"));
    log.expect(report.all_agree(), "n = 12: fast and exhaustive posets agree");
    log.expect(speedup >= 10.0, "n = 12: speedup at least 10x");
    log.expect(slowest < 1000.0, "n = 12: under 1 s per element");
    Ok(())
}

fn degrees(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    for (t, r) in [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("D", 4), ("G", 2)] {
        let sys = sys(t, r)?;
        let w0 = sys.longest_element(sys.all())?;
        let p = sys.poincare(&w0, GenSet::EMPTY)?;
        let d = sys.degrees().expect("finite type");
        log.note(format!("{t}{r}: degrees {d:?}"));
        log.expect(p == Poly::q_product(&d), format!("{t}{r}: P(w0) = {p}"));
    }
    Ok(())
}

fn lemma_systems(log: &mut Log, systems: &[(&str, usize)], union: bool) -> Result<()> {
    for &(t, r) in systems {
        let rs = RootSystem::build(t, Some(r))?;
        let a = rs.verify_simple_root_lemma_all();
        log.note(format!("{t}{r}: simple-root lemma, {} cases", a.checked));
        log.expect(a.passed(), format!("{t}{r}: {} simple-root violations", a.violations.len()));
        if union {
            let b = rs.verify_union_lemma_all();
            log.note(format!("{t}{r}: union lemma, {} cases", b.checked));
            log.expect(b.passed(), format!("{t}{r}: {} union violations", b.violations.len()));
        }
    }
    Ok(())
}

fn lemmas(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    lemma_systems(log, &[("A", 4), ("B", 4), ("C", 4), ("D", 5), ("F", 4), ("G", 2)], true)
}

fn e6_lemma(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    lemma_systems(log, &[("E", 6)], false)
}

fn search_all_smooth(sys: &CoxeterSystem, options: &SuiteOptions, log: &mut Log) -> Result<()> {
    let search = SearchOptions {
        budget: options.search_budget,
        parallel: false,
    };
    let smooth: Vec<Element> = sys
        .elements(None)?
        .into_iter()
        .filter(|w| sys.is_rationally_smooth(w, GenSet::EMPTY).unwrap_or(false))
        .collect();
    let failures: Vec<String> = smooth
        .par_iter()
        .filter_map(|w| {
            let iv = sys.interval(w, GenSet::EMPTY).ok()?;
            match sys.search_code(&iv, &search) {
                SearchOutcome::Found { code } if code.verify(sys, &iv) => None,
                _ => Some(sys.format_element(w)),
            }
        })
        .collect();
    log.note(format!("{}: codes for {} rationally smooth elements", sys.name(), smooth.len()));
    log.expect(failures.is_empty(), format!("{}: no code for {}", sys.name(), failures.join(", ")));
    Ok(())
}

fn lehmer(options: &SuiteOptions, log: &mut Log) -> Result<()> {
    let a4 = sys("A", 4)?;
    let code = a4.quotient_lehmer_code(&a4.from_permutation(&[5, 2, 1, 3, 4])?, GenSet::from_labels([4]))?;
    let expected = [
        ("000", "12345"), ("100", "12435"), ("010", "13245"), ("001", "21345"), ("200", "12534"),
        ("110", "14235"), ("101", "21435"), ("002", "23145"), ("011", "31245"), ("210", "15234"),
        ("201", "21534"), ("102", "24135"), ("012", "32145"), ("111", "41235"), ("202", "25134"),
        ("112", "42135"), ("211", "51234"), ("212", "52134"),
    ];
    let matches = code.chains == [3, 2, 3]
        && code.entries.len() == expected.len()
        && expected.iter().all(|(t, p)| {
            let tuple: Vec<usize> = t.bytes().map(|b| (b - b'0') as usize).collect();
            code.get(&tuple).map(|v| a4.format_element(v)) == Some(p.to_string())
        });
    log.expect(matches, "[e,52134]^{s4}: all 18 entries");
    let mut admissible = 0;
    for start in 1..=5usize {
        let j = if start == 5 { GenSet::EMPTY } else { GenSet::range(start - 1, 3) };
        for p in all_permutations(5) {
            let w = a4.from_permutation(&p)?;
            if a4.is_minimal_in_coset(&w, j) && a4.is_rationally_smooth(&w, j)? {
                admissible += 1;
                if let Err(e) = a4.quotient_lehmer_code(&w, j) {
                    log.expect(false, format!("{} J={j}: {e}", a4.format_element(&w)));
                }
            }
        }
    }
    log.note(format!("S5: {admissible} admissible (w, J) with constructive codes"));
    search_all_smooth(&a4, options, log)?;
    search_all_smooth(&sys("B", 3)?, options, log)?;
    let h3 = sys("H", 3)?;
    let w0 = h3.longest_element(h3.all())?;
    let iv = h3.interval(&w0, GenSet::EMPTY)?;
    let out = h3.search_code(&iv, &SearchOptions { budget: options.search_budget, parallel: true });
    let chains = out.code().map(|c| c.chains.clone());
    log.note(format!("H3 w0: chains {chains:?}"));
    log.expect(
        out.code().is_some_and(|c| c.verify(&h3, &iv)) && chains == Some(vec![10, 6, 2]),
        "H3 w0: code with chains 2, 6, 10",
    );
    Ok(())
}

fn f4_lehmer(options: &SuiteOptions, log: &mut Log) -> Result<()> {
    let f4 = sys("F", 4)?;
    let w0 = f4.longest_element(f4.all())?;
    let iv = f4.interval_capped(&w0, GenSet::EMPTY, w0.length())?;
    let out = f4.search_code(&iv, &SearchOptions { budget: options.search_budget, parallel: true });
    match &out {
        SearchOutcome::NoneExists { candidates } => {
            log.note(format!("F4 w0: {} elements, refuted chain multisets {candidates:?}", iv.len()))
        }
        SearchOutcome::Found { code } => log.expect(false, format!("F4 w0: found a code with chains {:?}", code.chains)),
        SearchOutcome::Unknown { .. } => log.expect(false, "F4 w0: search budget exhausted"),
    }
    Ok(())
}

fn schubert(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    let calc = SchubertCalculus::new();
    // Monk's rule: S_u S_{s_r} = sum S_{u t_ab}, a <= r < b, l(u t_ab) = l(u) + 1.
    let monk = |u: &[usize], r: usize, w: &[usize]| -> u64 {
        let mut count = 0;
        for a in 0..r {
            for b in r..w.len() {
                let mut t = u.to_vec();
                t.swap(a, b);
                if crate::perm::inversions(&t) == crate::perm::inversions(u) + 1 && t == w {
                    count += 1;
                }
            }
        }
        count
    };
    let (s1, s2, w231) = ([2, 1, 3], [1, 3, 2], [2, 3, 1]);
    log.expect(calc.structure_constant(&s1, &s2, &w231) == 1 && monk(&s1, 2, &w231) == 1, "c_{s1,s2}^{231} = 1");
    log.expect(calc.structure_constant(&s1, &s1, &w231) == 0 && monk(&s1, 1, &w231) == 0, "c_{s1,s1}^{231} = 0");
    let a2 = sys("A", 2)?;
    let w0 = a2.longest_element(a2.all())?;
    for k in 0..=3 {
        let m = a2.structure_matrix_with(&calc, &w0, k)?;
        let perm_matrix = m.entries.iter().all(|r| r.iter().sum::<u64>() == 1)
            && m.rows.iter().zip(&m.cols).all(|(u, v)| a2.mul(&w0, u) == *v);
        log.expect(perm_matrix, format!("w0 in S3, k = {k}: identity pattern pairing u with w0 u"));
    }
    let a4 = sys("A", 4)?;
    let smooth: Vec<Vec<usize>> = all_permutations(5).into_iter().filter(|p| is_smooth_permutation(p)).collect();
    let mut matrices = 0;
    for p in &smooth {
        let w = a4.from_permutation(p)?;
        for k in 0..=w.length() {
            let m = a4.structure_matrix_with(&calc, &w, k)?;
            matrices += 1;
            log.expect(m.is_upper_unitriangular(), format!("{} k = {k}: not unitriangular", a4.format_element(&w)));
            log.expect(m.transversal_count() == 1, format!("{} k = {k}: transversal not unique", a4.format_element(&w)));
        }
    }
    log.note(format!("S5: {} smooth elements, {matrices} matrices", smooth.len()));
    Ok(())
}

fn propositions(_: &SuiteOptions, log: &mut Log) -> Result<()> {
    for (t, r) in PROPERTY_GROUPS {
        let sys = sys(t, r)?;
        let elements = sys.elements(None)?;
        let failures: Vec<String> = elements
            .par_iter()
            .flat_map_iter(|w| property_failures(&sys, w).unwrap_or_else(|e| vec![e.to_string()]))
            .collect();
        log.note(format!("{t}{r}: {} elements", elements.len()));
        for f in failures.iter().take(5) {
            log.expect(false, format!("{t}{r}: {f}"));
        }
    }
    Ok(())
}

fn property_failures(sys: &CoxeterSystem, w: &Element) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let name = sys.format_element(w);
    let family = sys.bp_family(w)?;
    for s in 0..sys.rank() {
        let expected = w.is_right_descent(s) || !w.support().contains(s);
        if family.contains(GenSet::singleton(s)) != expected {
            out.push(format!("{name}: singleton law at s{}", s + 1));
        }
    }
    for j in sys.all().subsets() {
        for k in sys.all().difference(j).subsets() {
            if j.0 < k.0 && sys.totally_disconnected(j, k)
                && family.contains(j.union(k)) != (family.contains(j) && family.contains(k))
            {
                out.push(format!("{name}: totally disconnected law at {j}, {k}"));
            }
        }
    }
    let smooth = sys.is_rationally_smooth(w, GenSet::EMPTY)?;
    let full = sys.interval(w, GenSet::EMPTY)?;
    for &j in &family.members {
        let d = sys.parabolic_decompose(w, j, Side::Right)?;
        let restricted = sys.bp_family_in(&d.parabolic_part, j)?;
        let mut meets: Vec<GenSet> = family.members.iter().map(|k| k.intersection(j)).collect();
        meets.sort_by_key(|g| g.0);
        meets.dedup();
        if restricted.members != meets {
            out.push(format!("{name}: BP_J(w_J) is not the restriction for J = {j}"));
        }
        if smooth && !sys.is_rationally_smooth(&d.quotient_part, j)? {
            out.push(format!("{name}: w^J not J-rationally smooth for J = {j}"));
        }
        let map = sys.bp_product_map(w, j)?;
        if !map.is_bijective(&full) || !map.is_order_preserving(sys) {
            out.push(format!("{name}: product map fails for J = {j}"));
        }
    }
    if smooth {
        for j in sys.all().subsets() {
            if !sys.is_rationally_smooth(&sys.parabolic_part(w, j), GenSet::EMPTY)? {
                out.push(format!("{name}: w_J not rationally smooth for J = {j}"));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = CHECKS.iter().map(|c| c.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), CHECKS.len());
        assert!(find("c2-counterexample").is_some());
    }

    #[test]
    fn quick_checks_pass() {
        for name in ["c2-counterexample", "bp-posets", "degrees"] {
            let r = run_check(find(name).unwrap(), &SuiteOptions::default());
            assert_eq!(r.status, Status::Pass, "{name}: {:?}", r.details);
        }
    }
}
