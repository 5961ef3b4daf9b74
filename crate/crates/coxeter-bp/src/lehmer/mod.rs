//! Lehmer codes: order-preserving bijections from products of chains onto Bruhat intervals.

mod quotient;
mod search;

pub use search::{SearchOptions, SearchOutcome};

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::bruhat::BruhatInterval;
use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::perm::{all_permutations, classical_code};
use crate::system::{CoxeterSystem, CoxeterType};

/// One point of a code: a tuple of the chain product and its image.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeEntry {
    pub tuple: Vec<usize>,
    #[serde(rename = "word")]
    pub element: Element,
}

/// A map `C_{a_1} x ... x C_{a_k} -> [e, w]^J`, stored explicitly.
/// Chains have at least two elements; coordinate `i` ranges over `0..chains[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LehmerCode {
    pub chains: Vec<usize>,
    pub entries: Vec<CodeEntry>,
}

impl LehmerCode {
    /// Builds a code from its entries, sorting them by tuple.
    pub fn new(chains: Vec<usize>, mut entries: Vec<CodeEntry>) -> LehmerCode {
        entries.sort_by(|a, b| a.tuple.cmp(&b.tuple));
        LehmerCode { chains, entries }
    }

    /// Image of a tuple.
    pub fn get(&self, tuple: &[usize]) -> Option<&Element> {
        self.entries
            .binary_search_by(|e| e.tuple.as_slice().cmp(tuple))
            .ok()
            .map(|i| &self.entries[i].element)
    }

    /// Tuple mapped to `v`.
    pub fn tuple_of(&self, v: &Element) -> Option<&[usize]> {
        self.entries.iter().find(|e| &e.element == v).map(|e| e.tuple.as_slice())
    }

    pub fn size(&self) -> usize {
        self.chains.iter().product()
    }

    /// Checks bijectivity onto `interval`, rank compatibility, and order preservation
    /// on every cover `t < t + e_i` of the chain product.
    pub fn verify(&self, sys: &CoxeterSystem, interval: &BruhatInterval) -> bool {
        self.defects(sys, interval).is_empty()
    }

    /// Human-readable reasons the code fails [`LehmerCode::verify`] (empty if it passes).
    pub fn defects(&self, sys: &CoxeterSystem, interval: &BruhatInterval) -> Vec<String> {
        let mut out = Vec::new();
        if self.chains.iter().any(|&a| a < 2) {
            out.push("chain of size less than 2".into());
        }
        if self.entries.len() != self.size() || self.size() != interval.len() {
            out.push(format!(
                "{} entries, chain product of size {}, interval of size {}",
                self.entries.len(),
                self.size(),
                interval.len()
            ));
        }
        let mut tuples = HashSet::new();
        let mut images = HashSet::new();
        for e in &self.entries {
            if e.tuple.len() != self.chains.len() || e.tuple.iter().zip(&self.chains).any(|(t, a)| t >= a) {
                out.push(format!("tuple {:?} out of range", e.tuple));
            }
            if !tuples.insert(e.tuple.clone()) {
                out.push(format!("tuple {:?} repeated", e.tuple));
            }
            if !images.insert(e.element.clone()) {
                out.push(format!("{} hit twice", e.element.display(sys)));
            }
            if !interval.contains(&e.element) {
                out.push(format!("{} not in the interval", e.element.display(sys)));
            }
            if e.tuple.iter().sum::<usize>() != e.element.length() {
                out.push(format!("tuple {:?} has the wrong rank", e.tuple));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for e in &self.entries {
            for i in 0..self.chains.len() {
                if e.tuple[i] + 1 < self.chains[i] {
                    let mut up = e.tuple.clone();
                    up[i] += 1;
                    let v = self.get(&up).expect("tuples are complete");
                    if !sys.leq(&e.element, v) {
                        out.push(format!("{:?} -> {:?} is not order-preserving", e.tuple, up));
                    }
                }
            }
        }
        out
    }
}

/// All tuples of the chain product in lexicographic order.
pub fn chain_product(chains: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &a in chains {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..a).map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// The multiplication map `[e, w^J]^J x [e, w_J] -> [e, w]`, materialized.
#[derive(Clone, Debug)]
pub struct ProductMap {
    pub j: GenSet,
    pub outer: BruhatInterval,
    pub inner: BruhatInterval,
    /// `images[a][b] = outer[a] * inner[b]`, positions in rank order.
    pub images: Vec<Vec<Element>>,
}

impl ProductMap {
    /// The map is a bijection onto `[e, w]`.
    pub fn is_bijective(&self, full: &BruhatInterval) -> bool {
        let mut seen = HashSet::new();
        self.images.iter().flatten().all(|v| full.contains(v) && seen.insert(v.clone())) && seen.len() == full.len()
    }

    /// Covers in either factor map to comparable images.
    pub fn is_order_preserving(&self, sys: &CoxeterSystem) -> bool {
        let outer_covers = self.outer.covers(sys);
        let inner_covers = self.inner.covers(sys);
        let n_in = self.inner.len();
        outer_covers
            .iter()
            .all(|&[a, b]| (0..n_in).all(|k| sys.leq(&self.images[a][k], &self.images[b][k])))
            && inner_covers
                .iter()
                .all(|&[a, b]| self.images.iter().all(|row| sys.leq(&row[a], &row[b])))
    }

    /// Product of a code for the quotient factor and one for the parabolic factor.
    pub fn compose(&self, sys: &CoxeterSystem, outer: &LehmerCode, inner: &LehmerCode) -> LehmerCode {
        let mut entries = Vec::new();
        for a in &outer.entries {
            for b in &inner.entries {
                let mut tuple = a.tuple.clone();
                tuple.extend(&b.tuple);
                entries.push(CodeEntry {
                    tuple,
                    element: sys.mul(&a.element, &b.element),
                });
            }
        }
        let mut chains = outer.chains.clone();
        chains.extend(&inner.chains);
        LehmerCode::new(chains, entries)
    }
}

impl CoxeterSystem {
    /// The classical code `C_n x ... x C_2 -> S_n`, tuple `(c_1, ..., c_{n-1})` with
    /// `c_i = #{j > i : w(i) > w(j)}`.
    pub fn classical_lehmer_code(&self) -> Result<LehmerCode> {
        let CoxeterType::A(r) = *self.kind() else {
            return Err(Error::NotTypeA(self.name()));
        };
        let n = r + 1;
        let entries = all_permutations(n)
            .into_iter()
            .map(|p| {
                let mut tuple = classical_code(&p);
                tuple.pop();
                Ok(CodeEntry {
                    tuple,
                    element: self.from_permutation(&p)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LehmerCode::new((2..=n).rev().collect(), entries))
    }

    /// The multiplication map for `J` in `BP(w)`.
    pub fn bp_product_map(&self, w: &Element, j: GenSet) -> Result<ProductMap> {
        if !self.is_bp(w, j)? {
            return Err(Error::Usage(format!("{j} is not in BP({})", w.display(self))));
        }
        let d = self.parabolic_decompose(w, j, Side::Right)?;
        let outer = self.interval(&d.quotient_part, j)?;
        let inner = self.interval(&d.parabolic_part, GenSet::EMPTY)?;
        let images = outer
            .elements()
            .map(|x| inner.elements().map(|y| self.mul(x, y)).collect())
            .collect();
        Ok(ProductMap { j, outer, inner, images })
    }

    /// Searches for a code of `interval`; see [`SearchOptions`].
    pub fn search_code(&self, interval: &BruhatInterval, options: &SearchOptions) -> SearchOutcome {
        search::search(self, interval, options)
    }
}

/// Position lookup for the elements of an interval.
pub(crate) fn positions(interval: &BruhatInterval) -> HashMap<Element, usize> {
    interval.elements().cloned().enumerate().map(|(i, v)| (v, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_code_is_a_code() {
        for n in 2..=5 {
            let sys = CoxeterSystem::build("A", Some(n - 1)).unwrap();
            let code = sys.classical_lehmer_code().unwrap();
            let w0 = sys.longest_element(sys.all()).unwrap();
            let iv = sys.interval(&w0, GenSet::EMPTY).unwrap();
            assert!(code.verify(&sys, &iv), "{:?}", code.defects(&sys, &iv));
        }
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let code = a2.classical_lehmer_code().unwrap();
        assert_eq!(a2.permutation(code.get(&[2, 1]).unwrap()).unwrap(), vec![3, 2, 1]);
        assert!(code.get(&[0, 0]).unwrap().is_identity());
    }

    #[test]
    fn broken_codes_are_rejected() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w0 = a2.longest_element(a2.all()).unwrap();
        let iv = a2.interval(&w0, GenSet::EMPTY).unwrap();
        let mut code = a2.classical_lehmer_code().unwrap();
        code.entries[1].element = code.entries[2].element.clone();
        assert!(!code.verify(&a2, &iv));
    }

    #[test]
    fn product_map_of_w0_in_s3() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w0 = a2.longest_element(a2.all()).unwrap();
        let m = a2.bp_product_map(&w0, GenSet::from_labels([1])).unwrap();
        assert_eq!((m.outer.len(), m.inner.len()), (3, 2));
        let full = a2.interval(&w0, GenSet::EMPTY).unwrap();
        assert!(m.is_bijective(&full));
        assert!(m.is_order_preserving(&a2));
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
        assert!(a3.bp_product_map(&w, GenSet::from_labels([2])).is_err());
        let m = a3.bp_product_map(&w, a3.all()).unwrap();
        assert_eq!(m.outer.len(), 1);
    }

    #[test]
    fn chain_product_order() {
        assert_eq!(chain_product(&[2, 2]), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(chain_product(&[]), vec![Vec::<usize>::new()]);
    }
}
