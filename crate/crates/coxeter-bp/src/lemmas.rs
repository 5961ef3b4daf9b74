//! Finite verifiers for two root-system lemmas behind the J-star characterization.
//!
//! *Simple-root lemma*: for `alpha` in `Delta_J` and `tau` in `Phi^+ \ Phi_J^+`
//! supported on `alpha`, either some `alpha_j` in `Delta_J` has `tau - alpha_j`
//! a positive root still supported on `alpha`, or `(alpha, tau)` is a non-BP
//! witness for `J`.
//!
//! *Union lemma*: for connected `J1`, `J2` and a witness `(beta, tau)` for
//! `J = J1 ∪ J2` with `beta` outside `Phi_{J1}^+ ∪ Phi_{J2}^+`, `beta` splits as
//! a sum of two or three positive roots each forming a witness with `tau` for
//! `J`, `J1` or `J2`.

use rayon::prelude::*;
use serde::Serialize;

use crate::genset::GenSet;
use crate::roots::{Root, RootSystem};

#[derive(Clone, Debug, Serialize)]
pub struct SimpleRootViolation {
    #[serde(rename = "J")]
    pub j: GenSet,
    pub alpha: usize,
    pub tau: Root,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnionViolation {
    pub j1: GenSet,
    pub j2: GenSet,
    pub beta: Root,
    pub tau: Root,
}

/// Outcome of a verification sweep; an empty violation list means the statement holds.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport<V> {
    pub system: String,
    /// Number of `(J, alpha, tau)` or `(J1, J2, beta, tau)` cases examined.
    pub checked: usize,
    pub violations: Vec<V>,
}

impl<V> LemmaReport<V> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl RootSystem {
    /// Checks the simple-root lemma for one `J`.
    pub fn verify_simple_root_lemma(&self, j: GenSet) -> LemmaReport<SimpleRootViolation> {
        let phi_j = self.phi_plus(j);
        let mut checked = 0;
        let mut violations = Vec::new();
        for a in j.iter() {
            let alpha = self.simple_root(a);
            for tau in 0..self.len() {
                if phi_j.contains(tau) || self.root(tau).coefficient(a) == 0 {
                    continue;
                }
                checked += 1;
                let shortcut = j.iter().any(|s| {
                    self.difference(tau, self.simple_root(s))
                        .is_some_and(|d| self.root(d).coefficient(a) > 0)
                });
                if !shortcut && !self.is_witness(j, alpha, tau) {
                    violations.push(SimpleRootViolation {
                        j,
                        alpha: a,
                        tau: self.root(tau).clone(),
                    });
                }
            }
        }
        LemmaReport {
            system: self.system().name(),
            checked,
            violations,
        }
    }

    /// Checks the simple-root lemma for every `J ⊆ S`.
    pub fn verify_simple_root_lemma_all(&self) -> LemmaReport<SimpleRootViolation> {
        let reports: Vec<_> = self
            .system()
            .all()
            .subsets()
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|j| self.verify_simple_root_lemma(j))
            .collect();
        merge(self, reports)
    }

    /// Checks the union lemma for one pair of connected sets.
    pub fn verify_union_lemma(&self, j1: GenSet, j2: GenSet) -> LemmaReport<UnionViolation> {
        let j = j1.union(j2);
        let (p1, p2) = (self.phi_plus(j1), self.phi_plus(j2));
        let tables = [self.star_table(j), self.star_table(j1), self.star_table(j2)];
        let witness = |b: usize, t: usize| tables.iter().any(|tb| tb.heads[t].contains(b));
        let mut checked = 0;
        let mut violations = Vec::new();
        for &(beta, tau) in &tables[0].witnesses {
            if p1.contains(beta) || p2.contains(beta) {
                continue;
            }
            checked += 1;
            let pair = (0..self.len()).any(|b1| {
                witness(b1, tau) && self.difference(beta, b1).is_some_and(|b2| witness(b2, tau))
            });
            let split = pair || self.split_into_three(beta, tau, &witness);
            if !split {
                violations.push(UnionViolation {
                    j1,
                    j2,
                    beta: self.root(beta).clone(),
                    tau: self.root(tau).clone(),
                });
            }
        }
        LemmaReport {
            system: self.system().name(),
            checked,
            violations,
        }
    }

    fn split_into_three(&self, beta: usize, tau: usize, witness: &dyn Fn(usize, usize) -> bool) -> bool {
        let n = self.len();
        let target = &self.root(beta).0;
        (0..n).filter(|&b1| witness(b1, tau)).any(|b1| {
            (b1..n).filter(|&b2| witness(b2, tau)).any(|b2| {
                let v: Vec<i64> = target
                    .iter()
                    .zip(&self.root(b1).0)
                    .zip(&self.root(b2).0)
                    .map(|((x, y), z)| x - y - z)
                    .collect();
                self.index_of(&v).is_some_and(|b3| witness(b3, tau))
            })
        })
    }

    /// Checks the union lemma for all pairs of nonempty connected subsets.
    pub fn verify_union_lemma_all(&self) -> LemmaReport<UnionViolation> {
        let sys = self.system();
        let connected: Vec<GenSet> = sys
            .all()
            .subsets()
            .filter(|j| !j.is_empty() && sys.is_connected(*j))
            .collect();
        let pairs: Vec<(GenSet, GenSet)> = connected
            .iter()
            .flat_map(|&a| connected.iter().filter(move |b| a.0 < b.0).map(move |&b| (a, b)))
            .collect();
        let reports: Vec<_> = pairs.into_par_iter().map(|(a, b)| self.verify_union_lemma(a, b)).collect();
        merge(self, reports)
    }
}

fn merge<V>(rs: &RootSystem, reports: Vec<LemmaReport<V>>) -> LemmaReport<V> {
    let mut out = LemmaReport {
        system: rs.system().name(),
        checked: 0,
        violations: Vec::new(),
    };
    for r in reports {
        out.checked += r.checked;
        out.violations.extend(r.violations);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_systems_pass() {
        for (t, r) in [("A", Some(3)), ("G2", None), ("B", Some(3)), ("C", Some(3))] {
            let rs = RootSystem::build(t, r).unwrap();
            let a = rs.verify_simple_root_lemma_all();
            assert!(a.passed(), "{t}: {:?}", a.violations);
            assert!(a.checked > 0);
            let b = rs.verify_union_lemma_all();
            assert!(b.passed(), "{t}: {:?}", b.violations);
        }
    }

    #[test]
    fn type_a_splits_into_two_parabolic_roots() {
        let rs = RootSystem::build("A", Some(4)).unwrap();
        let sys = rs.system();
        for j1 in sys.all().subsets().filter(|j| !j.is_empty() && sys.is_connected(*j)) {
            for j2 in sys.all().subsets().filter(|j| !j.is_empty() && sys.is_connected(*j)) {
                let j = j1.union(j2);
                let (p1, p2) = (rs.phi_plus(j1), rs.phi_plus(j2));
                for &(beta, tau) in &rs.star_table(j).witnesses {
                    if p1.contains(beta) || p2.contains(beta) {
                        continue;
                    }
                    let ok = p1.iter().any(|b1| {
                        rs.difference(beta, b1).is_some_and(|b2| {
                            p2.contains(b2) && rs.is_witness(j1, b1, tau) && rs.is_witness(j2, b2, tau)
                        })
                    });
                    assert!(ok, "{j1} {j2} {:?} {:?}", rs.root(beta), rs.root(tau));
                }
            }
        }
    }
}
