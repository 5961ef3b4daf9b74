//! Billey-Postnikov decompositions: tests, families, closures and posets.

pub mod type_a;

use std::collections::HashMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::bruhat::Poly;
use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::system::CoxeterSystem;

/// Largest rank for which `2^|S|` subsets are swept.
pub const MAX_SWEEP_RANK: usize = 20;

/// The members of `BP(w)` (restricted to subsets of `universe`), sorted by bitmask.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BpFamily {
    pub w: Element,
    pub universe: GenSet,
    pub members: Vec<GenSet>,
}

impl BpFamily {
    pub fn contains(&self, j: GenSet) -> bool {
        self.members.binary_search_by_key(&j.0, |m| m.0).is_ok()
    }

    /// True if the family is closed under union and intersection.
    pub fn is_lattice(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.contains(a.union(b)) && self.contains(a.intersection(b)))
        })
    }

    /// Smallest member containing `a` (intersection of all members containing it).
    pub fn closure(&self, a: GenSet) -> GenSet {
        self.members
            .iter()
            .filter(|m| a.is_subset(**m))
            .fold(self.universe, |acc, &m| acc.intersection(m))
    }
}

/// The BP poset: blocks of generators ordered so that unions of order ideals are
/// exactly the members of `BP(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpPoset {
    pub universe: GenSet,
    /// Blocks sorted by least element.
    pub blocks: Vec<GenSet>,
    /// `leq[a][b]`: block `a` is below or equal to block `b`.
    pub leq: Vec<Vec<bool>>,
    /// `closures[i] = cl_w(i)` for generators `i` in the universe (empty otherwise);
    /// the preposet relation is `i <=_w j` iff `i` is in `closures[j]`.
    pub closures: Vec<GenSet>,
}

/// `{blocks, relations}` with 1-based generator labels and cover relations
/// `[lower, upper]` between block positions.
#[derive(Serialize)]
pub struct BpPosetJson {
    pub blocks: Vec<GenSet>,
    pub relations: Vec<[usize; 2]>,
}

impl BpPoset {
    /// Builds the poset from the singleton closures `cl_w(i)`.
    pub fn from_closures(universe: GenSet, closures: Vec<GenSet>) -> BpPoset {
        let mut blocks: Vec<GenSet> = Vec::new();
        for i in universe.iter() {
            if blocks.iter().any(|b| b.contains(i)) {
                continue;
            }
            let block: GenSet = universe
                .iter()
                .filter(|&j| closures[i].contains(j) && closures[j].contains(i))
                .collect();
            blocks.push(block);
        }
        let rep = |b: GenSet| b.min().unwrap();
        let leq = blocks
            .iter()
            .map(|&a| blocks.iter().map(|&b| closures[rep(b)].contains(rep(a))).collect())
            .collect();
        BpPoset {
            universe,
            blocks,
            leq,
            closures,
        }
    }

    pub fn preposet_leq(&self, i: usize, j: usize) -> bool {
        self.closures[j].contains(i)
    }

    /// Cover relations `(lower, upper)` between block positions.
    pub fn covers(&self) -> Vec<[usize; 2]> {
        let n = self.blocks.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]) {
                    out.push([a, b]);
                }
            }
        }
        out
    }

    pub fn all_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    /// Unions of blocks over all order ideals, sorted by bitmask.
    pub fn ideals(&self) -> Vec<GenSet> {
        let n = self.blocks.len();
        let mut out = Vec::new();
        for mask in 0u32..1 << n {
            let down = (0..n).all(|b| mask >> b & 1 == 0 || (0..n).all(|a| !self.leq[a][b] || mask >> a & 1 == 1));
            if down {
                out.push((0..n).filter(|b| mask >> b & 1 == 1).fold(GenSet::EMPTY, |acc, b| acc.union(self.blocks[b])));
            }
        }
        out.sort_by_key(|g| g.0);
        out
    }

    /// The induced subposet on the generators of `j` (meaningful when `j` is a union of an order ideal).
    pub fn restrict(&self, j: GenSet) -> BpPoset {
        let closures = self
            .closures
            .iter()
            .enumerate()
            .map(|(i, c)| if j.contains(i) { c.intersection(j) } else { GenSet::EMPTY })
            .collect();
        BpPoset::from_closures(j, closures)
    }

    /// Largest number of blocks covering a single block.
    pub fn max_up_degree(&self) -> usize {
        let covers = self.covers();
        (0..self.blocks.len())
            .map(|a| covers.iter().filter(|c| c[0] == a).count())
            .max()
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> BpPosetJson {
        BpPosetJson {
            blocks: self.blocks.clone(),
            relations: self.covers(),
        }
    }
}

/// Memo of Poincare polynomials `P^J(w)`, shared across threads.
#[derive(Default)]
pub struct PoincareCache {
    map: Mutex<HashMap<(Element, GenSet), Poly>>,
}

impl PoincareCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, sys: &CoxeterSystem, w: &Element, j: GenSet) -> Result<Poly> {
        if let Some(p) = self.map.lock().unwrap().get(&(w.clone(), j)) {
            return Ok(p.clone());
        }
        let p = sys.poincare(w, j)?;
        self.map.lock().unwrap().insert((w.clone(), j), p.clone());
        Ok(p)
    }
}

impl CoxeterSystem {
    /// `Supp(w^J) ∩ J ⊆ D_L(w_J)`.
    pub fn is_bp(&self, w: &Element, j: GenSet) -> Result<bool> {
        self.check(w)?;
        let d = self.parabolic_decompose(w, j, Side::Right)?;
        Ok(d.quotient_part
            .support()
            .intersection(j)
            .is_subset(d.parabolic_part.left_descents()))
    }

    /// `P(w) = P^J(w^J) P(w_J)`.
    pub fn is_bp_poincare(&self, w: &Element, j: GenSet) -> Result<bool> {
        self.is_bp_poincare_cached(w, j, &PoincareCache::new())
    }

    pub fn is_bp_poincare_cached(&self, w: &Element, j: GenSet, cache: &PoincareCache) -> Result<bool> {
        let d = self.parabolic_decompose(w, j, Side::Right)?;
        let whole = cache.get(self, w, GenSet::EMPTY)?;
        let top = cache.get(self, &d.quotient_part, j)?;
        let fiber = cache.get(self, &d.parabolic_part, GenSet::EMPTY)?;
        Ok(whole == &top * &fiber)
    }

    /// `BP(w)` by testing all `2^|S|` subsets.
    pub fn bp_family(&self, w: &Element) -> Result<BpFamily> {
        self.bp_family_in(w, self.all())
    }

    /// `BP(w)` within the parabolic subgroup `W_U` (for `w` in `W_U`).
    pub fn bp_family_in(&self, w: &Element, universe: GenSet) -> Result<BpFamily> {
        self.check(w)?;
        if universe.len() > MAX_SWEEP_RANK {
            let hint = match self.kind() {
                crate::CoxeterType::A(_) => " (the type A pattern algorithm has no such limit)",
                _ => "",
            };
            return Err(Error::SweepTooLarge {
                rank: universe.len(),
                limit: MAX_SWEEP_RANK,
                hint,
            });
        }
        if !w.support().is_subset(universe) {
            return Err(Error::Usage(format!("{} does not lie in W_{universe}", w.display(self))));
        }
        let mut members = Vec::new();
        for j in universe.subsets() {
            if self.is_bp(w, j)? {
                members.push(j);
            }
        }
        members.sort_by_key(|g| g.0);
        Ok(BpFamily {
            w: w.clone(),
            universe,
            members,
        })
    }

    /// `cl_w(A)`: the smallest member of `BP(w)` containing `A`.
    pub fn closure(&self, w: &Element, a: GenSet) -> Result<GenSet> {
        Ok(self.bp_family(w)?.closure(a))
    }

    /// The BP poset of `w` computed from the full family.
    pub fn bp_poset(&self, w: &Element) -> Result<BpPoset> {
        self.bp_poset_in(w, self.all())
    }

    /// The BP poset of `w` as an element of `W_U`.
    pub fn bp_poset_in(&self, w: &Element, universe: GenSet) -> Result<BpPoset> {
        let fam = self.bp_family_in(w, universe)?;
        let closures = (0..self.rank())
            .map(|i| {
                if universe.contains(i) {
                    fam.closure(GenSet::singleton(i))
                } else {
                    GenSet::EMPTY
                }
            })
            .collect();
        Ok(BpPoset::from_closures(universe, closures))
    }

    /// Some `s` with `S \ {s}` in `BP(w)` (the least such), if any.
    pub fn grassmannian_bp(&self, w: &Element) -> Result<Option<usize>> {
        for s in 0..self.rank() {
            if self.is_bp(w, self.all().without(s))? {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// Factors `w^(i) = (w_{J^(i-1)})^{J^(i)}` for `J^(0) = S`, `J^(i) = J^(i-1) \ {a_i}`,
    /// where `order = (a_1, ..., a_r)` lists the generators from the top of the BP poset
    /// down (each `a_i` maximal among those not yet removed).
    pub fn linear_extension_factorization(&self, w: &Element, order: &[usize]) -> Result<Vec<Element>> {
        self.check(w)?;
        let mut seen = GenSet::EMPTY;
        for &a in order {
            if a >= self.rank() || seen.contains(a) {
                return Err(Error::Usage("order must list every generator exactly once".into()));
            }
            seen.insert(a);
        }
        if seen != self.all() {
            return Err(Error::Usage("order must list every generator exactly once".into()));
        }
        if !self.is_rationally_smooth(w, GenSet::EMPTY)? {
            return Err(Error::Usage(format!("{} is not rationally smooth", w.display(self))));
        }
        let poset = self.bp_poset(w)?;
        if !poset.all_singletons() {
            return Err(Error::Usage("BP poset has a block with more than one generator".into()));
        }
        let mut j = self.all();
        let mut current = w.clone();
        let mut factors = Vec::new();
        for &a in order {
            let next = j.without(a);
            if !self.is_bp(w, next)? {
                return Err(Error::Usage(format!(
                    "generator {} is not maximal among the remaining ones",
                    self.label(a)
                )));
            }
            let d = self.decompose(&current, next, Side::Right);
            factors.push(d.quotient_part);
            current = d.parabolic_part;
            j = next;
        }
        debug_assert!(current.is_identity());
        Ok(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use crate::roots::RootSystem;

    fn a(n: usize) -> CoxeterSystem {
        CoxeterSystem::build("A", Some(n)).unwrap()
    }

    fn sets(v: &[&[usize]]) -> Vec<GenSet> {
        let mut out: Vec<GenSet> = v.iter().map(|s| GenSet::from_labels(s.iter().copied())).collect();
        out.sort_by_key(|g| g.0);
        out
    }

    #[test]
    fn families_of_4231_and_3412() {
        let a3 = a(3);
        let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
        let fam = a3.bp_family(&w).unwrap();
        assert_eq!(fam.members, sets(&[&[], &[1], &[3], &[1, 3], &[1, 2, 3]]));
        assert!(fam.is_lattice());
        assert!(a3.is_bp(&w, GenSet::from_labels([1])).unwrap());
        assert!(!a3.is_bp(&w, GenSet::from_labels([2])).unwrap());
        assert_eq!(a3.closure(&w, GenSet::from_labels([2])).unwrap(), a3.all());
        let p = a3.bp_poset(&w).unwrap();
        assert_eq!(p.blocks, sets(&[&[1], &[2], &[3]]));
        assert_eq!(p.covers(), vec![[0, 1], [2, 1]]);
        assert_eq!(p.ideals(), fam.members);

        let v = a3.from_permutation(&[3, 4, 1, 2]).unwrap();
        let fam = a3.bp_family(&v).unwrap();
        assert_eq!(fam.members, sets(&[&[], &[2], &[1, 2, 3]]));
        assert!(a3.is_bp_poincare(&v, GenSet::from_labels([2])).unwrap());
        assert_eq!(a3.closure(&v, GenSet::from_labels([1])).unwrap(), a3.all());
        let p = a3.bp_poset(&v).unwrap();
        assert_eq!(p.blocks, vec![GenSet::from_labels([1, 3]), GenSet::from_labels([2])]);
        assert_eq!(p.covers(), vec![[1, 0]]);
        assert!(p.preposet_leq(0, 2) && p.preposet_leq(2, 0));
    }

    #[test]
    fn identity_family_is_everything() {
        let a3 = a(3);
        assert_eq!(a3.bp_family(&a3.identity()).unwrap().members.len(), 8);
    }

    #[test]
    fn poset_of_65178432() {
        let a7 = a(7);
        let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2]).unwrap();
        let p = a7.bp_poset(&w).unwrap();
        assert!(p.all_singletons());
        let lbl = |b: usize| p.blocks[b].labels()[0];
        let mut covers: Vec<(usize, usize)> = p.covers().iter().map(|c| (lbl(c[0]), lbl(c[1]))).collect();
        covers.sort();
        assert_eq!(covers, vec![(1, 3), (2, 3), (4, 3), (5, 4), (6, 4), (7, 4)]);
    }

    #[test]
    fn example_factorization() {
        let a7 = a(7);
        let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2]).unwrap();
        let order: Vec<usize> = [3, 1, 4, 6, 2, 7, 5].iter().map(|x| x - 1).collect();
        let f = a7.linear_extension_factorization(&w, &order).unwrap();
        let got: Vec<String> = f.iter().map(|x| a7.format_element(x)).collect();
        assert_eq!(
            got,
            ["15623478", "31245678", "12374568", "12347856", "13245678", "12345687", "12346578"]
        );
        let bad: Vec<usize> = [1, 3, 4, 6, 2, 7, 5].iter().map(|x| x - 1).collect();
        assert!(a7.linear_extension_factorization(&w, &bad).is_err());
    }

    #[test]
    fn affine_counterexample() {
        let c = CoxeterSystem::build("affineC2", None).unwrap();
        let w = c.parse_word("srstrsr").unwrap();
        assert!(!c.is_bp(&w, c.parse_genset("rs").unwrap()).unwrap());
        assert!(!c.is_bp(&w, c.parse_genset("rt").unwrap()).unwrap());
        assert!(!c.is_bp(&w, c.parse_genset("st").unwrap()).unwrap());
        assert!(c.is_bp(&w, c.parse_genset("r").unwrap()).unwrap());
        assert_eq!(c.grassmannian_bp(&w).unwrap(), None);
    }

    #[test]
    fn three_tests_agree_on_a3() {
        let a3 = a(3);
        let rs = RootSystem::new(&a3).unwrap();
        let cache = PoincareCache::new();
        for p in all_permutations(4) {
            let w = a3.from_permutation(&p).unwrap();
            for j in a3.all().subsets() {
                let d = a3.is_bp(&w, j).unwrap();
                assert_eq!(d, a3.is_bp_poincare_cached(&w, j, &cache).unwrap());
                assert_eq!(d, rs.jstar_bp_test(&w, j).unwrap());
            }
        }
    }
}
