//! Finite crystallographic root systems in the simple-root basis.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::jstar::StarTable;
use crate::system::{CoxeterSystem, Representation};

/// A set of positive roots, as a bitmask over the indices of [`RootSystem::positive_roots`].
/// Every finite root system handled here has at most 120 positive roots.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn union(self, o: RootSet) -> RootSet {
        RootSet(self.0 | o.0)
    }
    pub fn intersection(self, o: RootSet) -> RootSet {
        RootSet(self.0 & o.0)
    }
    pub fn difference(self, o: RootSet) -> RootSet {
        RootSet(self.0 & !o.0)
    }
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in it {
            s.insert(i);
        }
        s
    }
}

/// Coefficient vector of a root in the simple-root basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }
    pub fn support(&self) -> GenSet {
        self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }
    pub fn coefficient(&self, s: usize) -> i64 {
        self.0[s]
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("a{}", i + 1) } else { format!("{c}a{}", i + 1) })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// Positive roots of a finite crystallographic system with the simple reflection action.
pub struct RootSystem {
    sys: CoxeterSystem,
    cartan: Vec<i64>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    simple: Vec<usize>,
    /// `action[s][i]`: image of root `i` under `s_s`, encoded `+(j+1)` or `-(j+1)`.
    action: Vec<Vec<i32>>,
    /// `sums[i * n + j]`: index of `roots[i] + roots[j]` if it is a positive root.
    sums: Vec<Option<u8>>,
    pub(crate) stars: Vec<OnceLock<Arc<StarTable>>>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}, {} positive roots)", self.sys.name(), self.roots.len())
    }
}

impl RootSystem {
    pub fn new(sys: &CoxeterSystem) -> Result<RootSystem> {
        if !sys.kind().is_finite_crystallographic() {
            return Err(Error::NotCrystallographic(sys.name()));
        }
        let Representation::Int(cartan) = &sys.rep else {
            return Err(Error::NotCrystallographic(sys.name()));
        };
        let r = sys.rank();
        let cartan = cartan.clone();
        let reflect = |s: usize, v: &[i64]| -> Vec<i64> {
            let pairing: i64 = (0..r).map(|t| cartan[s * r + t] * v[t]).sum();
            let mut out = v.to_vec();
            out[s] -= pairing;
            out
        };
        let mut roots: Vec<Vec<i64>> = (0..r)
            .map(|s| {
                let mut v = vec![0; r];
                v[s] = 1;
                v
            })
            .collect();
        let mut index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let mut k = 0;
        while k < roots.len() {
            for s in 0..r {
                let img = reflect(s, &roots[k]);
                if img.iter().all(|&c| c >= 0) && !index.contains_key(&img) {
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            k += 1;
        }
        if roots.len() > 128 {
            return Err(Error::Invariant("more than 128 positive roots".into()));
        }
        roots.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let n = roots.len();
        let simple: Vec<usize> = (0..r)
            .map(|s| {
                let mut v = vec![0; r];
                v[s] = 1;
                index[&v]
            })
            .collect();
        let mut action = vec![vec![0i32; n]; r];
        for s in 0..r {
            for (i, root) in roots.iter().enumerate() {
                let img = reflect(s, root);
                action[s][i] = match index.get(&img) {
                    Some(&j) => j as i32 + 1,
                    None => {
                        let neg: Vec<i64> = img.iter().map(|c| -c).collect();
                        let j = *index.get(&neg).ok_or_else(|| {
                            Error::Invariant(format!("reflection of a root is not a root in {}", sys.name()))
                        })?;
                        -(j as i32 + 1)
                    }
                };
            }
        }
        let mut sums = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                let v: Vec<i64> = roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).collect();
                sums[i * n + j] = index.get(&v).map(|&k| k as u8);
            }
        }
        let stars = (0..1usize << r).map(|_| OnceLock::new()).collect();
        Ok(RootSystem {
            sys: sys.clone(),
            cartan,
            roots: roots.into_iter().map(Root).collect(),
            index,
            simple,
            action,
            sums,
            stars,
        })
    }

    pub fn build(tag: &str, rank: Option<usize>) -> Result<RootSystem> {
        RootSystem::new(&CoxeterSystem::build(tag, rank)?)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }
    pub fn rank(&self) -> usize {
        self.sys.rank()
    }
    /// Positive roots ordered by height, then reverse-lexicographically by coefficients
    /// (so the simple roots come first, in generator order).
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }
    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }
    pub fn len(&self) -> usize {
        self.roots.len()
    }
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
    pub fn all_roots(&self) -> RootSet {
        if self.roots.len() == 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << self.roots.len()) - 1)
        }
    }
    /// Index of a positive root given by its coefficients.
    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }
    /// Index of the simple root `alpha_s`.
    pub fn simple_root(&self, s: usize) -> usize {
        self.simple[s]
    }
    pub fn cartan(&self, s: usize, t: usize) -> i64 {
        self.cartan[s * self.rank() + t]
    }
    /// Index of `roots[i] + roots[j]` when that sum is a positive root.
    pub fn sum(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i * self.roots.len() + j].map(usize::from)
    }
    /// Index of `roots[i] - roots[j]` when that difference is a positive root.
    pub fn difference(&self, i: usize, j: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[i].0.iter().zip(&self.roots[j].0).map(|(a, b)| a - b).collect();
        self.index_of(&v)
    }
    /// Root poset: `roots[i] <= roots[j]` iff the difference is a nonnegative combination of simple roots.
    pub fn root_leq(&self, i: usize, j: usize) -> bool {
        self.roots[i].0.iter().zip(&self.roots[j].0).all(|(a, b)| a <= b)
    }

    /// Image of positive root `i` under `s_s`: `(is_positive, index)`.
    pub fn reflect(&self, s: usize, i: usize) -> (bool, usize) {
        let v = self.action[s][i];
        (v > 0, v.unsigned_abs() as usize - 1)
    }

    /// Image of `sign * roots[i]` under `w`, as `(is_positive, index)`.
    pub fn apply(&self, w: &Element, positive: bool, i: usize) -> (bool, usize) {
        let (mut pos, mut idx) = (positive, i);
        for &s in w.word().iter().rev() {
            let (p, j) = self.reflect(s as usize, idx);
            pos = pos == p;
            idx = j;
        }
        (pos, idx)
    }

    /// Right inversion set `I(w) = { beta > 0 : w beta < 0 }`.
    pub fn inversion_set(&self, w: &Element) -> RootSet {
        // I(ws) = s I(w) + {alpha_s} whenever l(ws) > l(w).
        let mut inv = RootSet::EMPTY;
        for &s in w.word() {
            let s = s as usize;
            let mut next = RootSet::EMPTY;
            for i in inv.iter() {
                let (p, j) = self.reflect(s, i);
                debug_assert!(p);
                next.insert(j);
            }
            next.insert(self.simple[s]);
            inv = next;
        }
        inv
    }

    /// `Phi_J^+`: positive roots supported on `Delta_J`.
    pub fn phi_plus(&self, j: GenSet) -> RootSet {
        self.roots
            .iter()
            .enumerate()
            .filter(|(_, r)| r.support().is_subset(j))
            .map(|(i, _)| i)
            .collect()
    }

    /// True if `R` and its complement in `Phi^+` are both closed under root addition.
    pub fn is_biclosed(&self, r: RootSet) -> bool {
        self.is_closed(r) && self.is_closed(self.all_roots().difference(r))
    }

    pub fn is_closed(&self, r: RootSet) -> bool {
        r.iter().all(|i| r.iter().all(|j| self.sum(i, j).is_none_or(|k| r.contains(k))))
    }

    pub fn roots_of(&self, set: RootSet) -> Vec<Root> {
        set.iter().map(|i| self.roots[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(t: &str, r: Option<usize>) -> RootSystem {
        RootSystem::build(t, r).unwrap()
    }

    #[test]
    fn a2_roots() {
        let a2 = rs("A", Some(2));
        let v: Vec<Vec<i64>> = a2.positive_roots().iter().map(|r| r.0.clone()).collect();
        assert_eq!(v, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn root_counts_match_longest_elements() {
        for (t, r, n) in [
            ("A", Some(4), 10),
            ("B", Some(3), 9),
            ("C", Some(4), 16),
            ("D", Some(5), 20),
            ("E6", None, 36),
            ("E7", None, 63),
            ("E8", None, 120),
            ("F4", None, 24),
            ("G2", None, 6),
        ] {
            let root_sys = rs(t, r);
            assert_eq!(root_sys.len(), n, "{t}");
            let sys = root_sys.system();
            assert_eq!(sys.longest_element(sys.all()).unwrap().length(), n);
        }
    }

    #[test]
    fn type_b_roots_match_euclidean_description() {
        // B3: e_i - e_j, e_i + e_j (i<j), e_i; in the simple-root basis with
        // alpha_1 = e1 - e2, alpha_2 = e2 - e3, alpha_3 = e3.
        let b3 = rs("B", Some(3));
        let to_euclid = |c: &[i64]| vec![c[0], c[1] - c[0], c[2] - c[1]];
        let mut got: Vec<Vec<i64>> = b3.positive_roots().iter().map(|r| to_euclid(&r.0)).collect();
        got.sort();
        let mut want = Vec::new();
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 1;
            want.push(e);
            for j in i + 1..3 {
                let mut a = vec![0; 3];
                a[i] = 1;
                a[j] = -1;
                want.push(a.clone());
                a[j] = 1;
                want.push(a);
            }
        }
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn inversion_sets() {
        let a2 = rs("A", Some(2));
        let sys = a2.system().clone();
        let s1 = sys.generator(0).unwrap();
        assert_eq!(a2.roots_of(a2.inversion_set(&s1)), vec![Root(vec![1, 0])]);
        let w0 = sys.longest_element(sys.all()).unwrap();
        assert_eq!(a2.inversion_set(&w0), a2.all_roots());
        // 231: w(e_i) = e_{w(i)}; alpha_2 = e2 - e3 -> e3 - e1 < 0, alpha_1 + alpha_2 = e1 - e3 -> e2 - e1 < 0.
        let w = sys.from_permutation(&[2, 3, 1]).unwrap();
        assert_eq!(a2.roots_of(a2.inversion_set(&w)), vec![Root(vec![0, 1]), Root(vec![1, 1])]);
    }

    #[test]
    fn biclosed_examples() {
        let a2 = rs("A", Some(2));
        assert!(a2.is_biclosed(RootSet::EMPTY));
        assert!(a2.is_biclosed(RootSet::from_iter([1, 2])));
        assert!(!a2.is_biclosed(RootSet::from_iter([2])));
    }

    #[test]
    fn parabolic_roots() {
        let a3 = rs("A", Some(3));
        assert_eq!(a3.phi_plus(GenSet::from_labels([1, 2])).len(), 3);
        assert!(a3.phi_plus(GenSet::EMPTY).is_empty());
        let a2 = rs("A", Some(2));
        assert_eq!(a2.roots_of(a2.phi_plus(GenSet::from_labels([1]))), vec![Root(vec![1, 0])]);
    }

    #[test]
    fn minimal_roots_are_simple() {
        for (t, r) in [("B", Some(4)), ("F4", None), ("E6", None)] {
            let root_sys = rs(t, r);
            let minimal: Vec<usize> = (0..root_sys.len())
                .filter(|&i| (0..root_sys.len()).all(|j| j == i || !root_sys.root_leq(j, i)))
                .collect();
            let simple: Vec<usize> = (0..root_sys.rank()).map(|s| root_sys.simple_root(s)).collect();
            assert_eq!(minimal, simple);
        }
    }

    fn systems() -> Vec<RootSystem> {
        vec![rs("A", Some(4)), rs("B", Some(3)), rs("C", Some(3)), rs("D", Some(4)), rs("G2", None), rs("F4", None)]
    }

    proptest! {
        #[test]
        fn inversion_set_laws(k in 0usize..6, raw in proptest::collection::vec(0usize..4, 0..30), mask in 0u32..16) {
            let root_sys = &systems()[k];
            let sys = root_sys.system();
            let w = sys.element(&raw.iter().map(|s| s % sys.rank()).collect::<Vec<_>>()).unwrap();
            let inv = root_sys.inversion_set(&w);
            prop_assert_eq!(inv.len(), w.length());
            prop_assert!(root_sys.is_biclosed(inv));
            for i in 0..root_sys.len() {
                let (p, _) = root_sys.apply(&w, true, i);
                prop_assert_eq!(!p, inv.contains(i));
            }
            // I(w^-1) = -w I(w)
            let winv = sys.inverse(&w);
            let image: RootSet = inv.iter().map(|i| {
                let (p, j) = root_sys.apply(&w, true, i);
                assert!(!p);
                j
            }).collect();
            prop_assert_eq!(root_sys.inversion_set(&winv), image);
            let j = GenSet(mask).intersection(sys.all());
            let wj = sys.quotient_part(&w, j);
            prop_assert!(root_sys.inversion_set(&wj).intersection(root_sys.phi_plus(j)).is_empty());
        }
    }
}
