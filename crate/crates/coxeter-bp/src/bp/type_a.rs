//! Pattern-based BP computations for permutations.
//!
//! For `J = {s_a, ..., s_{b-1}}`, a permutation is BP at `J` iff, with positions
//! `[a, b]` marked, it avoids the marked patterns `23|1` (first two marked),
//! `3|12` (last two marked) and `3|14|2` (middle two marked). Positions and
//! generators are 1-based in the public functions.

use serde::Serialize;

use super::BpPoset;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::system::{CoxeterSystem, CoxeterType};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MarkedPattern {
    /// `2̲3̲1`
    P231,
    /// `3 1̲2̲`
    P312,
    /// `3 1̲4̲2`
    P3142,
}

/// An occurrence of a marked pattern at 1-based positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub pattern: MarkedPattern,
    pub positions: Vec<usize>,
}

/// First occurrence of a bad marked pattern in `(p, [a, b])`, if any.
pub fn find_bad_pattern(p: &[usize], a: usize, b: usize) -> Option<Occurrence> {
    let n = p.len();
    assert!(1 <= a && a < b && b <= n, "need 1 <= a < b <= n");
    let (lo, hi) = (a - 1, b - 1);
    let found = |pattern, pos: &[usize]| {
        Some(Occurrence {
            pattern,
            positions: pos.iter().map(|i| i + 1).collect(),
        })
    };
    for i1 in lo..=hi {
        for i2 in i1 + 1..=hi {
            if p[i1] > p[i2] {
                continue;
            }
            for i3 in hi + 1..n {
                if p[i3] < p[i1] {
                    return found(MarkedPattern::P231, &[i1, i2, i3]);
                }
            }
        }
    }
    for i1 in 0..lo {
        for i2 in lo..=hi {
            if p[i2] > p[i1] {
                continue;
            }
            for i3 in i2 + 1..=hi {
                if p[i2] < p[i3] && p[i3] < p[i1] {
                    return found(MarkedPattern::P312, &[i1, i2, i3]);
                }
            }
        }
    }
    for i1 in 0..lo {
        for i2 in lo..=hi {
            if p[i2] > p[i1] {
                continue;
            }
            for i3 in i2 + 1..=hi {
                if p[i3] < p[i1] {
                    continue;
                }
                for i4 in hi + 1..n {
                    if p[i2] < p[i4] && p[i4] < p[i1] {
                        return found(MarkedPattern::P3142, &[i1, i2, i3, i4]);
                    }
                }
            }
        }
    }
    None
}

/// BP test at the connected set `{s_a, ..., s_{b-1}}`.
pub fn is_bp_interval(p: &[usize], a: usize, b: usize) -> bool {
    find_bad_pattern(p, a, b).is_none()
}

/// Maximal runs of consecutive generators of `j` as position intervals `[a, b]` (1-based).
fn runs(j: GenSet) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for s in j.iter() {
        match out.last_mut() {
            Some((_, b)) if *b == s + 1 => *b = s + 2,
            _ => out.push((s + 1, s + 2)),
        }
    }
    out
}

/// BP test at an arbitrary `J` (0-based generator set), component by component.
pub fn is_bp(p: &[usize], j: GenSet) -> bool {
    runs(j).into_iter().all(|(a, b)| is_bp_interval(p, a, b))
}

/// `cl_w([a, b])` for a connected generator interval, returned as a position interval.
/// Each bad occurrence at `i_1 < ... < i_k` forces the closure to contain
/// `[i_1, i_k]`, so the interval is widened until no bad pattern remains.
pub fn closure_interval(p: &[usize], mut a: usize, mut b: usize) -> (usize, usize) {
    while let Some(occ) = find_bad_pattern(p, a, b) {
        a = a.min(occ.positions[0]);
        b = b.max(*occ.positions.last().unwrap());
    }
    (a, b)
}

/// `cl_w(A)` for a connected (or empty) generator set `A` (0-based).
pub fn closure(p: &[usize], a: GenSet) -> Result<GenSet> {
    match runs(a).as_slice() {
        [] => Ok(GenSet::EMPTY),
        [(lo, hi)] => {
            let (c, d) = closure_interval(p, *lo, *hi);
            Ok(GenSet::range(c - 1, d - 2))
        }
        _ => Err(Error::Usage(format!("{a} is not connected"))),
    }
}

/// The BP poset from the singleton closures.
pub fn bp_poset(p: &[usize]) -> BpPoset {
    let r = p.len().saturating_sub(1);
    let closures = (0..r)
        .map(|i| {
            let (c, d) = closure_interval(p, i + 1, i + 2);
            GenSet::range(c - 1, d - 2)
        })
        .collect();
    BpPoset::from_closures(GenSet::full(r), closures)
}

impl CoxeterSystem {
    fn type_a_perm(&self, w: &Element) -> Result<Vec<usize>> {
        self.check(w)?;
        match self.kind() {
            CoxeterType::A(_) => self.permutation(w),
            _ => Err(Error::NotTypeA(self.name())),
        }
    }

    /// BP test by marked-pattern avoidance (type A).
    pub fn typea_is_bp(&self, w: &Element, j: GenSet) -> Result<bool> {
        Ok(is_bp(&self.type_a_perm(w)?, j))
    }

    /// `cl_w(A)` for connected `A` by pattern widening (type A).
    pub fn typea_closure(&self, w: &Element, a: GenSet) -> Result<GenSet> {
        closure(&self.type_a_perm(w)?, a)
    }

    /// BP poset by pattern widening (type A), without enumerating `BP(w)`.
    pub fn typea_bp_poset(&self, w: &Element) -> Result<BpPoset> {
        Ok(bp_poset(&self.type_a_perm(w)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    #[test]
    fn examples() {
        let w = [4, 2, 3, 1];
        let occ = find_bad_pattern(&w, 2, 3).unwrap();
        assert_eq!(occ.pattern, MarkedPattern::P231);
        assert_eq!(occ.positions, vec![2, 3, 4]);
        assert!(is_bp_interval(&w, 1, 2));
        assert!(is_bp_interval(&[1, 2, 3, 4], 1, 4));
        assert_eq!(closure(&[3, 4, 1, 2], GenSet::from_labels([1])).unwrap(), GenSet::from_labels([1, 2, 3]));
        assert!(closure(&[3, 4, 1, 2], GenSet::from_labels([1, 3])).is_err());
    }

    #[test]
    fn agrees_with_definition_on_s5() {
        let a4 = CoxeterSystem::build("A", Some(4)).unwrap();
        for p in all_permutations(5) {
            let w = a4.from_permutation(&p).unwrap();
            for j in a4.all().subsets() {
                assert_eq!(is_bp(&p, j), a4.is_bp(&w, j).unwrap(), "{p:?} {j}");
            }
            assert_eq!(bp_poset(&p), a4.bp_poset(&w).unwrap(), "{p:?}");
        }
    }
}
