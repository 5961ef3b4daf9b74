//! Explicit codes for `[e, w]^J` in type A when `J = {s_j, ..., s_(n-1)}`.

use super::{CodeEntry, LehmerCode};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::perm::inverse_permutation;
use crate::system::{CoxeterSystem, CoxeterType};

type Table = (Vec<usize>, Vec<(Vec<usize>, Vec<usize>)>);

fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| u[i - 1]).collect()
}

/// `(k, 1, 2, ..., n)` with `k` removed from the tail: the minimal representatives
/// of `S_n / S_(n-1)` on positions `2..n`.
fn cycle_front(n: usize, k: usize) -> Vec<usize> {
    std::iter::once(k).chain((1..=n).filter(|&x| x != k)).collect()
}

/// `s_1 s_2 ... s_(q-1)` in one-line notation: `2, 3, ..., q, 1, q+1, ..., n`.
fn cycle_back(n: usize, q: usize) -> Vec<usize> {
    (2..=q).chain(std::iter::once(1)).chain(q + 1..=n).collect()
}

/// Restriction of a permutation fixing 1 to positions `2..n`.
fn restrict(p: &[usize]) -> Vec<usize> {
    p[1..].iter().map(|&x| x - 1).collect()
}

fn embed(p: &[usize]) -> Vec<usize> {
    std::iter::once(1).chain(p.iter().map(|&x| x + 1)).collect()
}

/// Minimal representative modulo the tail parabolic starting at position `j`.
fn tail_quotient(p: &[usize], j: usize) -> Vec<usize> {
    let mut q = p.to_vec();
    if j <= q.len() {
        q[j - 1..].sort_unstable();
    }
    q
}

fn code_rec(w: &[usize], j: usize) -> Result<Table> {
    let n = w.len();
    if j <= 2 {
        let size = w[0];
        let entries: Vec<_> = (0..size)
            .map(|t| (if size > 1 { vec![t] } else { vec![] }, cycle_front(n, t + 1)))
            .collect();
        let chains = if size > 1 { vec![size] } else { vec![] };
        return Ok((chains, entries));
    }
    let mut u = w.to_vec();
    u[j - 1..].reverse();
    let p = u.iter().position(|&x| x == 1).expect("permutation") + 1;
    let head = u[0];
    let b1_empty = u[p..].iter().all(|&x| x > head);
    let b2_empty = || u[1..p - 1].iter().all(|&x| x < head);
    if b1_empty {
        let x = cycle_front(n, head);
        let u_k = compose(&inverse_permutation(&x), &u);
        let (inner_chains, inner) = code_rec(&tail_quotient(&restrict(&u_k), j - 1), j - 1)?;
        let mut chains = Vec::new();
        if head > 1 {
            chains.push(head);
        }
        chains.extend(inner_chains);
        let mut entries = Vec::new();
        for t in 0..head {
            let x = cycle_front(n, t + 1);
            for (tuple, y) in &inner {
                let mut tup = if head > 1 { vec![t] } else { vec![] };
                tup.extend(tuple);
                entries.push((tup, compose(&x, &embed(y))));
            }
        }
        Ok((chains, entries))
    } else if b2_empty() {
        if j <= p {
            return Err(Error::Invariant(format!(
                "{w:?}: B2 empty with j <= u^-1(1) forces u = w0, which has B1 empty"
            )));
        }
        let y = cycle_back(n, p);
        let k_u = compose(&u, &inverse_permutation(&y));
        let (inner_chains, inner) = code_rec(&tail_quotient(&restrict(&k_u), j - 1), j - 1)?;
        let mut chains = inner_chains;
        if p > 1 {
            chains.push(p);
        }
        let mut entries = Vec::new();
        for (tuple, x) in &inner {
            let x = embed(x);
            for t in 0..p {
                let mut tup = tuple.clone();
                if p > 1 {
                    tup.push(t);
                }
                entries.push((tup, compose(&x, &cycle_back(n, t + 1))));
            }
        }
        Ok((chains, entries))
    } else {
        Err(Error::Usage(format!("{w:?} is not J-rationally smooth")))
    }
}

impl CoxeterSystem {
    /// Explicit code for `[e, w]^J` in `S_n`, for `J = {s_j, ..., s_(n-1)}` (any `1 <= j <= n`,
    /// `j = n` meaning `J` empty) and `w` in `W^J` with palindromic Poincare polynomial.
    /// The result is checked before it is returned.
    pub fn quotient_lehmer_code(&self, w: &Element, j: GenSet) -> Result<LehmerCode> {
        let CoxeterType::A(r) = *self.kind() else {
            return Err(Error::NotTypeA(self.name()));
        };
        self.check(w)?;
        let n = r + 1;
        let start = match j.min() {
            None => n,
            Some(lo) => lo + 1,
        };
        if !j.is_empty() && j != GenSet::range(start - 1, n - 2) {
            return Err(Error::Usage(format!(
                "J = {j} must be a tail {{s_j, ..., s_{}}} of the Dynkin diagram",
                n - 1
            )));
        }
        if !self.is_minimal_in_coset(w, j) {
            return Err(Error::Usage(format!("{} is not in W^J for J = {j}", w.display(self))));
        }
        if !self.is_rationally_smooth(w, j)? {
            return Err(Error::Usage(format!(
                "{} is not J-rationally smooth for J = {j}",
                w.display(self)
            )));
        }
        let perm = self.permutation(w)?;
        let (chains, table) = code_rec(&perm, start)?;
        let entries = table
            .into_iter()
            .map(|(tuple, p)| {
                Ok(CodeEntry {
                    tuple,
                    element: self.from_permutation(&p)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let code = LehmerCode::new(chains, entries);
        let interval = self.interval(w, j)?;
        let defects = code.defects(self, &interval);
        if !defects.is_empty() {
            return Err(Error::Invariant(format!("constructed code failed: {}", defects.join("; "))));
        }
        Ok(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, format_one_line};

    fn one_line(sys: &CoxeterSystem, v: &Element) -> String {
        let p: Vec<i64> = sys.permutation(v).unwrap().into_iter().map(|x| x as i64).collect();
        format_one_line(&p)
    }

    #[test]
    fn quotient_code_of_52134() {
        let a4 = CoxeterSystem::build("A", Some(4)).unwrap();
        let w = a4.from_permutation(&[5, 2, 1, 3, 4]).unwrap();
        let code = a4.quotient_lehmer_code(&w, GenSet::from_labels([4])).unwrap();
        assert_eq!(code.chains, vec![3, 2, 3]);
        let expected = [
            ("000", "12345"), ("100", "12435"), ("010", "13245"), ("001", "21345"),
            ("200", "12534"), ("110", "14235"), ("101", "21435"), ("002", "23145"),
            ("011", "31245"), ("210", "15234"), ("201", "21534"), ("102", "24135"),
            ("012", "32145"), ("111", "41235"), ("202", "25134"), ("112", "42135"),
            ("211", "51234"), ("212", "52134"),
        ];
        assert_eq!(code.entries.len(), expected.len());
        for (t, p) in expected {
            let tuple: Vec<usize> = t.bytes().map(|b| (b - b'0') as usize).collect();
            assert_eq!(one_line(&a4, code.get(&tuple).unwrap()), p, "tuple {t}");
        }
    }

    #[test]
    fn empty_j_recovers_classical_chain_sizes() {
        for n in 2..=5 {
            let sys = CoxeterSystem::build("A", Some(n - 1)).unwrap();
            let w0 = sys.longest_element(sys.all()).unwrap();
            let code = sys.quotient_lehmer_code(&w0, GenSet::EMPTY).unwrap();
            assert_eq!(code.chains, (2..=n).rev().collect::<Vec<_>>());
            assert_eq!(code, sys.classical_lehmer_code().unwrap());
        }
    }

    #[test]
    fn every_smooth_quotient_in_s5_gets_a_code() {
        let a4 = CoxeterSystem::build("A", Some(4)).unwrap();
        for start in 1..=5usize {
            let j = if start == 5 { GenSet::EMPTY } else { GenSet::range(start - 1, 3) };
            for p in all_permutations(5) {
                let w = a4.from_permutation(&p).unwrap();
                if !a4.is_minimal_in_coset(&w, j) || !a4.is_rationally_smooth(&w, j).unwrap() {
                    continue;
                }
                a4.quotient_lehmer_code(&w, j).unwrap();
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let w = a3.from_permutation(&[3, 4, 1, 2]).unwrap();
        assert!(a3.quotient_lehmer_code(&w, GenSet::EMPTY).is_err());
        let w = a3.from_permutation(&[2, 1, 4, 3]).unwrap();
        assert!(a3.quotient_lehmer_code(&w, GenSet::from_labels([1, 3])).is_err());
    }
}
