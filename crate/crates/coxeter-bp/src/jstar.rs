//! J-stars and non-BP witnesses.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::element::Element;
use crate::error::Result;
use crate::genset::GenSet;
use crate::roots::{Root, RootSet, RootSystem};

/// A configuration `(beta, c_1 gamma_1, ..., c_k gamma_k)` with `beta` in
/// `Phi_J^+`, each `gamma_i` in `Phi^+ \ Phi_J^+`, and every partial sum
/// `beta + sum_{i in I} c_i gamma_i` a positive root. Roots are stored as
/// indices into the positive roots of the root system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JStar {
    pub beta: usize,
    /// `(c_i, gamma_i)` with strictly increasing `gamma_i`.
    pub arms: Vec<(u32, usize)>,
    /// `beta + sum c_i gamma_i`.
    pub tau: usize,
}

impl JStar {
    /// Sorted multiset of the arm coefficients.
    pub fn coefficients(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.arms.iter().map(|a| a.0).collect();
        c.sort_unstable();
        c
    }
}

/// A J-star written out with explicit root coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct JStarJson {
    pub beta: Root,
    pub arms: Vec<(u32, Root)>,
    pub tau: Root,
}

/// All J-stars for one `J`, with their witness pairs indexed by `tau`.
#[derive(Debug)]
pub struct StarTable {
    pub stars: Vec<JStar>,
    /// Distinct non-BP witnesses `(beta, tau)`, sorted.
    pub witnesses: Vec<(usize, usize)>,
    /// `heads[tau]`: set of `beta` with `(beta, tau)` a witness.
    pub heads: Vec<RootSet>,
}

/// Coefficient multisets that J-stars in finite crystallographic root systems can have.
pub const ALLOWED_COEFFICIENTS: [&[u32]; 6] = [&[1], &[2], &[3], &[1, 1], &[1, 2], &[1, 1, 1]];

fn add_scaled(a: &[i64], c: i64, b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + c * y).collect()
}

fn enumerate(rs: &RootSystem, j: GenSet) -> StarTable {
    let phi_j = rs.phi_plus(j);
    let outside: Vec<usize> = (0..rs.len()).filter(|&i| !phi_j.contains(i)).collect();
    let mut stars = Vec::new();
    for beta in phi_j.iter() {
        // Single arms (c, gamma) with beta + c gamma a root; root strings are unbroken.
        let mut singles: Vec<(u32, usize)> = Vec::new();
        for &g in &outside {
            let mut c = 1;
            while rs.index_of(&add_scaled(&rs.root(beta).0, c, &rs.root(g).0)).is_some() {
                singles.push((c as u32, g));
                c += 1;
            }
        }
        let mut arms = Vec::new();
        let mut sums = vec![rs.root(beta).0.clone()];
        extend(rs, beta, &singles, 0, &mut arms, &mut sums, &mut stars);
    }
    let mut witnesses: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut heads = vec![RootSet::EMPTY; rs.len()];
    for st in &stars {
        witnesses.insert((st.beta, st.tau));
        heads[st.tau].insert(st.beta);
    }
    StarTable {
        stars,
        witnesses: witnesses.into_iter().collect(),
        heads,
    }
}

fn extend(
    rs: &RootSystem,
    beta: usize,
    singles: &[(u32, usize)],
    from: usize,
    arms: &mut Vec<(u32, usize)>,
    sums: &mut Vec<Vec<i64>>,
    out: &mut Vec<JStar>,
) {
    for k in from..singles.len() {
        let (c, g) = singles[k];
        if arms.last().is_some_and(|&(_, last)| last >= g) {
            continue;
        }
        let added: Vec<Vec<i64>> = sums.iter().map(|s| add_scaled(s, c as i64, &rs.root(g).0)).collect();
        if !added.iter().all(|v| rs.index_of(v).is_some()) {
            continue;
        }
        let tau = rs.index_of(added.last().unwrap()).unwrap();
        let before = sums.len();
        sums.extend(added);
        arms.push((c, g));
        out.push(JStar {
            beta,
            arms: arms.clone(),
            tau,
        });
        extend(rs, beta, singles, k + 1, arms, sums, out);
        arms.pop();
        sums.truncate(before);
    }
}

impl RootSystem {
    /// The J-stars for `J` (memoized; safe to call concurrently).
    pub fn star_table(&self, j: GenSet) -> Arc<StarTable> {
        let j = j.intersection(self.system().all());
        self.stars[j.0 as usize].get_or_init(|| Arc::new(enumerate(self, j))).clone()
    }

    /// All J-stars in a deterministic order: by head, then by arms.
    pub fn enumerate_jstars(&self, j: GenSet) -> Vec<JStar> {
        self.star_table(j).stars.clone()
    }

    pub fn jstar_json(&self, st: &JStar) -> JStarJson {
        JStarJson {
            beta: self.root(st.beta).clone(),
            arms: st.arms.iter().map(|&(c, g)| (c, self.root(g).clone())).collect(),
            tau: self.root(st.tau).clone(),
        }
    }

    /// True if `(beta, tau)` is a non-BP witness for `J`.
    pub fn is_witness(&self, j: GenSet, beta: usize, tau: usize) -> bool {
        self.star_table(j).heads[tau].contains(beta)
    }

    /// `w` contains the star: `beta` is not an inversion of `w` but the full sum is.
    pub fn contains_jstar(&self, w: &Element, star: &JStar) -> bool {
        let inv = self.inversion_set(w);
        !inv.contains(star.beta) && inv.contains(star.tau)
    }

    /// BP test by J-star avoidance.
    pub fn jstar_bp_test(&self, w: &Element, j: GenSet) -> Result<bool> {
        self.system().check(w)?;
        Ok(self.jstar_bp_test_inv(self.inversion_set(w), j))
    }

    /// BP test by J-star avoidance, given the inversion set of `w`.
    pub fn jstar_bp_test_inv(&self, inv: RootSet, j: GenSet) -> bool {
        let table = self.star_table(j);
        inv.iter().all(|tau| table.heads[tau].difference(inv).is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_single_star() {
        let a2 = RootSystem::build("A", Some(2)).unwrap();
        let stars = a2.enumerate_jstars(GenSet::from_labels([1]));
        assert_eq!(stars.len(), 1);
        let json = a2.jstar_json(&stars[0]);
        assert_eq!(json.beta, Root(vec![1, 0]));
        assert_eq!(json.arms, vec![(1, Root(vec![0, 1]))]);
        assert!(a2.enumerate_jstars(GenSet::EMPTY).is_empty());
    }

    #[test]
    fn coefficient_multisets_are_restricted() {
        for (t, r) in [("B", Some(4)), ("C", Some(4)), ("D", Some(5)), ("G2", None), ("F4", None), ("E6", None)] {
            let rs = RootSystem::build(t, r).unwrap();
            for j in rs.system().all().subsets() {
                for st in rs.enumerate_jstars(j) {
                    let c = st.coefficients();
                    assert!(ALLOWED_COEFFICIENTS.contains(&c.as_slice()), "{t} {j} {c:?}");
                }
            }
        }
    }

    #[test]
    fn type_a_star_shapes() {
        // In A_{n-1}, roots e_i - e_j; stars are (e_i-e_j; e_j-e_k), (e_j-e_k; e_i-e_j),
        // (e_j-e_k; e_i-e_j, e_k-e_l) with i<j<k<l.
        let n = 5;
        let rs = RootSystem::build("A", Some(n - 1)).unwrap();
        let pair = |r: &Root| {
            let i = r.0.iter().position(|&c| c != 0).unwrap();
            let j = i + r.0.iter().filter(|&&c| c != 0).count();
            (i, j + 1 - 1)
        };
        for j in rs.system().all().subsets() {
            for st in rs.enumerate_jstars(j) {
                let b = pair(rs.root(st.beta));
                let g: Vec<_> = st.arms.iter().map(|&(c, g)| {
                    assert_eq!(c, 1);
                    pair(rs.root(g))
                }).collect();
                let ok = match g.as_slice() {
                    [x] => x.0 == b.1 || x.1 == b.0,
                    [x, y] => {
                        let (l, r) = if x.1 == b.0 { (x, y) } else { (y, x) };
                        l.1 == b.0 && r.0 == b.1
                    }
                    _ => false,
                };
                assert!(ok, "unexpected star shape {:?}", rs.jstar_json(&st));
            }
        }
    }

    #[test]
    fn containment() {
        let a2 = RootSystem::build("A", Some(2)).unwrap();
        let sys = a2.system().clone();
        let star = &a2.enumerate_jstars(GenSet::from_labels([1]))[0];
        let w = sys.from_permutation(&[2, 3, 1]).unwrap();
        assert!(a2.contains_jstar(&w, star));
        assert!(!a2.contains_jstar(&sys.identity(), star));
    }
}
