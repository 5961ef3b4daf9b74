//! Bruhat order, lower intervals and their rank generating functions.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::Mul;

use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::system::CoxeterSystem;

/// Largest `l(w)` for which intervals are enumerated unless a cap is given explicitly.
pub const DEFAULT_LENGTH_CAP: usize = 22;

/// Polynomial in `q` with nonnegative integer coefficients, `coeffs[k]` the coefficient of `q^k`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Poly {
    pub coeffs: Vec<u64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<u64>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }
    pub fn one() -> Poly {
        Poly { coeffs: vec![1] }
    }
    /// `[d]_q = 1 + q + ... + q^{d-1}`.
    pub fn q_integer(d: usize) -> Poly {
        Poly { coeffs: vec![1; d] }
    }
    /// `prod_i [d_i]_q`.
    pub fn q_product(ds: &[usize]) -> Poly {
        ds.iter().fold(Poly::one(), |acc, &d| &acc * &Poly::q_integer(d))
    }
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
    pub fn value_at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Poly::default();
        }
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".into(),
                (1, c) => format!("{c}q"),
                (k, 1) => format!("q^{k}"),
                (k, c) => format!("{c}q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The lower interval `[e, w]^J = { v in W^J : v <= w }`, stratified by length.
#[derive(Clone, Debug)]
pub struct BruhatInterval {
    pub top: Element,
    pub j: GenSet,
    /// `ranks[k]`: elements of length `k`, sorted.
    pub ranks: Vec<Vec<Element>>,
    index: HashMap<Element, usize>,
}

/// Serialized form of an interval: words are 1-based generator indices, cover pairs
/// `[i, j]` index into the concatenation of `ranks` with `i` covered by `j`.
#[derive(Serialize)]
pub struct IntervalJson {
    pub top: Element,
    #[serde(rename = "J")]
    pub j: GenSet,
    pub ranks: Vec<Vec<Element>>,
    pub covers: Vec<[usize; 2]>,
}

impl BruhatInterval {
    pub fn len(&self) -> usize {
        self.index.len()
    }
    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }
    pub fn rank_sizes(&self) -> Vec<usize> {
        self.ranks.iter().map(Vec::len).collect()
    }
    pub fn poincare(&self) -> Poly {
        Poly::new(self.ranks.iter().map(|r| r.len() as u64).collect())
    }
    pub fn contains(&self, v: &Element) -> bool {
        self.index.contains_key(v)
    }
    /// Elements in rank order; positions match [`BruhatInterval::position`].
    pub fn elements(&self) -> impl Iterator<Item = &Element> {
        self.ranks.iter().flatten()
    }
    /// Position of `v` in the rank-ordered list.
    pub fn position(&self, v: &Element) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Hasse diagram edges `(lower, upper)` as positions.
    pub fn covers(&self, sys: &CoxeterSystem) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for v in self.elements() {
            let hi = self.index[v];
            let word = v.word();
            let mut seen = HashSet::new();
            for k in 0..word.len() {
                let mut sub: Vec<usize> = word.iter().map(|&s| s as usize).collect();
                sub.remove(k);
                let x = sys.element(&sub).expect("subword of a valid word");
                if x.length() + 1 == v.length() {
                    if let Some(&lo) = self.index.get(&x) {
                        if seen.insert(lo) {
                            out.push([lo, hi]);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn to_json(&self, sys: &CoxeterSystem) -> IntervalJson {
        IntervalJson {
            top: self.top.clone(),
            j: self.j,
            ranks: self.ranks.clone(),
            covers: self.covers(sys),
        }
    }
}

impl CoxeterSystem {
    /// Bruhat order `u <= w`.
    ///
    /// Peels the first letter `s` of `w` (a left descent): if `s` is a left
    /// descent of `u` compare `su` with `sw`, otherwise compare `u` with `sw`.
    pub fn bruhat_leq(&self, u: &Element, w: &Element) -> Result<bool> {
        self.check(u)?;
        self.check(w)?;
        Ok(self.leq(u, w))
    }

    pub(crate) fn leq(&self, u: &Element, w: &Element) -> bool {
        if u.length() > w.length() {
            return false;
        }
        if u.length() == w.length() {
            return u == w;
        }
        if u.is_identity() {
            return true;
        }
        let mut st = self.state_of(u.word());
        let mut len = u.length();
        let word = w.word();
        for (k, &s) in word.iter().enumerate() {
            if len == 0 {
                return true;
            }
            if len > word.len() - k {
                return false;
            }
            if self.state_is_left_descent(&st, s as usize) {
                self.state_left_mul(&mut st, s as usize);
                len -= 1;
            }
        }
        len == 0
    }

    /// `[e, w]^J` with the default length cap.
    pub fn interval(&self, w: &Element, j: GenSet) -> Result<BruhatInterval> {
        self.interval_capped(w, j, DEFAULT_LENGTH_CAP)
    }

    /// `[e, w]^J`, refusing tops longer than `cap`. Requires `w` in `W^J`.
    pub fn interval_capped(&self, w: &Element, j: GenSet, cap: usize) -> Result<BruhatInterval> {
        self.check(w)?;
        if w.length() > cap {
            return Err(Error::LengthCap { length: w.length(), cap });
        }
        if !self.is_minimal_in_coset(w, j) {
            return Err(Error::Usage(format!(
                "{} is not a minimal coset representative for J = {j}",
                w.display(self)
            )));
        }
        // Subword products of one reduced word, deduplicated after each letter.
        let mut seen: HashSet<Element> = HashSet::new();
        let mut all = vec![self.identity()];
        seen.insert(self.identity());
        for &s in w.word() {
            let mut new = Vec::new();
            for x in &all {
                let y = self.mul_gen(x, s as usize);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    new.push(y);
                }
            }
            all.extend(new);
        }
        let mut ranks = vec![Vec::new(); w.length() + 1];
        for v in all {
            if self.is_minimal_in_coset(&v, j) {
                ranks[v.length()].push(v);
            }
        }
        for r in &mut ranks {
            r.sort();
        }
        let index = ranks.iter().flatten().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(BruhatInterval {
            top: w.clone(),
            j,
            ranks,
            index,
        })
    }

    /// `P^J(w) = sum_{v in [e,w]^J} q^{l(v)}`.
    pub fn poincare(&self, w: &Element, j: GenSet) -> Result<Poly> {
        Ok(self.interval(w, j)?.poincare())
    }

    /// `w` is (J-)rationally smooth iff `P^J(w)` is palindromic.
    pub fn is_rationally_smooth(&self, w: &Element, j: GenSet) -> Result<bool> {
        Ok(self.poincare(w, j)?.is_palindromic())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Side;
    use crate::perm::{all_permutations, is_smooth_permutation};
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w0 = a2.longest_element(a2.all()).unwrap();
        let iv = a2.interval(&w0, GenSet::EMPTY).unwrap();
        assert_eq!(iv.rank_sizes(), vec![1, 2, 2, 1]);
        assert_eq!(iv.poincare(), Poly::q_product(&[2, 3]));
        assert_eq!(iv.covers(&a2).len(), 8);
        assert_eq!(a2.poincare(&a2.identity(), GenSet::EMPTY).unwrap(), Poly::one());
        let x = a2.element(&[0, 1]).unwrap();
        let y = a2.element(&[1, 0]).unwrap();
        assert!(!a2.bruhat_leq(&x, &y).unwrap());
        assert!(!a2.bruhat_leq(&y, &x).unwrap());
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let u = a3.from_permutation(&[1, 3, 2, 4]).unwrap();
        let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
        assert!(a3.bruhat_leq(&u, &w).unwrap());
        assert!(!a3.is_rationally_smooth(&a3.from_permutation(&[3, 4, 1, 2]).unwrap(), GenSet::EMPTY).unwrap());
    }

    #[test]
    fn quotient_interval_of_52134() {
        let a4 = CoxeterSystem::build("A", Some(4)).unwrap();
        let w = a4.from_permutation(&[5, 2, 1, 3, 4]).unwrap();
        let iv = a4.interval(&w, GenSet::from_labels([4])).unwrap();
        assert_eq!(iv.len(), 18);
        assert_eq!(iv.poincare(), &(&Poly::q_integer(3) * &Poly::q_integer(2)) * &Poly::q_integer(3));
    }

    #[test]
    fn length_cap_is_enforced() {
        let a5 = CoxeterSystem::build("A", Some(5)).unwrap();
        let w0 = a5.longest_element(a5.all()).unwrap();
        assert_eq!(
            a5.interval_capped(&w0, GenSet::EMPTY, 10).unwrap_err(),
            Error::LengthCap { length: 15, cap: 10 }
        );
    }

    #[test]
    fn affine_counterexample_polynomial() {
        let c = CoxeterSystem::build("affineC2", None).unwrap();
        let w = c.parse_word("srstrsr").unwrap();
        let r = c.parse_genset("r").unwrap();
        let wr = c.quotient_part(&w, r);
        let p = c.poincare(&wr, r).unwrap();
        assert_eq!(p.coeffs, vec![1, 2, 3, 4, 3, 2, 1]);
        assert!(c.is_rationally_smooth(&w, GenSet::EMPTY).unwrap());
    }

    #[test]
    fn smoothness_matches_pattern_avoidance() {
        for n in 2..=5 {
            let sys = CoxeterSystem::build("A", Some(n - 1)).unwrap();
            for p in all_permutations(n) {
                let w = sys.from_permutation(&p).unwrap();
                assert_eq!(sys.is_rationally_smooth(&w, GenSet::EMPTY).unwrap(), is_smooth_permutation(&p), "{p:?}");
            }
        }
    }

    #[test]
    fn leq_matches_subword_criterion() {
        let b3 = CoxeterSystem::build("B", Some(3)).unwrap();
        let elems = b3.elements(None).unwrap();
        for w in &elems {
            let iv = b3.interval(w, GenSet::EMPTY).unwrap();
            for u in &elems {
                assert_eq!(b3.leq(u, w), iv.contains(u));
            }
        }
    }

    #[test]
    fn poincare_display() {
        assert_eq!(Poly::new(vec![1, 2, 0, 1]).to_string(), "1 + 2q + q^3");
    }

    proptest! {
        #[test]
        fn parabolic_factorization_of_lower_intervals(raw in proptest::collection::vec(0usize..4, 0..14), mask in 0u32..16) {
            // P(w) = P^J(w^J) P(w_J) whenever the decomposition is BP; here only the
            // total count over all of W is checked: P(w0) = P^J(w0^J) P(w0(J)).
            let d4 = CoxeterSystem::build("D", Some(4)).unwrap();
            let _ = d4.element(&raw).unwrap();
            let j = GenSet(mask);
            let w0 = d4.longest_element(d4.all()).unwrap();
            let d = d4.parabolic_decompose(&w0, j, Side::Right).unwrap();
            let lhs = d4.poincare(&w0, GenSet::EMPTY).unwrap();
            let rhs = &d4.poincare(&d.quotient_part, j).unwrap() * &d4.poincare(&d.parabolic_part, GenSet::EMPTY).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
