//! Permutation and signed-permutation models for the classical types.
//!
//! One-line notation `w = w(1) w(2) ... w(n)`, composition `(uv)(i) = u(v(i))`,
//! so right multiplication by `s_i` swaps the entries in positions `i, i+1`.
//! For types B and C the last generator negates the entry in position `n`;
//! for type D it swaps positions `n-1, n` and negates both.

use std::str::FromStr;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::system::{CoxeterSystem, CoxeterType};

/// How to read an element given as text.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum ElementFormat {
    /// One-line notation if the text is a valid (signed) permutation, otherwise a word.
    #[default]
    Auto,
    OneLine,
    Word,
}

impl FromStr for ElementFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Self::Auto),
            "one-line" | "oneline" | "perm" => Ok(Self::OneLine),
            "word" | "letters" => Ok(Self::Word),
            _ => Err(Error::Usage(format!("unknown element format {s:?}"))),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Model {
    A,
    B,
    D,
}

fn model(sys: &CoxeterSystem) -> Option<(Model, usize)> {
    match *sys.kind() {
        CoxeterType::A(n) => Some((Model::A, n + 1)),
        CoxeterType::B(n) | CoxeterType::C(n) => Some((Model::B, n)),
        CoxeterType::D(n) => Some((Model::D, n)),
        _ => None,
    }
}

/// Position of a signed value in the order `1 < 2 < ... < n < -n < ... < -1`,
/// under which `e_x - e_y` is a positive root iff `x` precedes `y`.
fn key(x: i64, n: usize) -> i64 {
    if x > 0 {
        x
    } else {
        2 * n as i64 + 1 + x
    }
}

fn act(m: Model, p: &mut [i64], s: usize) {
    let n = p.len();
    match m {
        Model::B if s == n - 1 => p[n - 1] = -p[n - 1],
        Model::D if s == n - 1 => {
            let (x, y) = (p[n - 2], p[n - 1]);
            p[n - 2] = -y;
            p[n - 1] = -x;
        }
        _ => p.swap(s, s + 1),
    }
}

fn is_descent(m: Model, p: &[i64], s: usize) -> bool {
    let n = p.len();
    let k = |x| key(x, n);
    match m {
        Model::B if s == n - 1 => p[n - 1] < 0,
        Model::D if s == n - 1 => k(p[n - 2]) > k(-p[n - 1]),
        _ => k(p[s]) > k(p[s + 1]),
    }
}

fn validate(m: Model, p: &[i64], n: usize) -> Result<()> {
    let bad = |reason: &str| Error::Parse {
        input: format!("{p:?}"),
        reason: reason.into(),
    };
    if p.len() != n {
        return Err(bad(&format!("expected {n} entries")));
    }
    let mut seen = vec![false; n + 1];
    for &x in p {
        let a = x.unsigned_abs() as usize;
        if a == 0 || a > n || seen[a] {
            return Err(bad("not a (signed) permutation"));
        }
        seen[a] = true;
        if x < 0 && m == Model::A {
            return Err(bad("negative entry in a permutation"));
        }
    }
    if m == Model::D && p.iter().filter(|&&x| x < 0).count() % 2 == 1 {
        return Err(bad("type D needs an even number of sign changes"));
    }
    Ok(())
}

impl CoxeterSystem {
    /// Number of letters in the one-line notation, if the system has a permutation model.
    pub fn permutation_degree(&self) -> Option<usize> {
        model(self).map(|(_, n)| n)
    }

    /// Element with the given one-line notation (signed for types B, C, D).
    pub fn from_one_line(&self, p: &[i64]) -> Result<Element> {
        let (m, n) = model(self).ok_or_else(|| Error::NotTypeA(self.name()))?;
        validate(m, p, n)?;
        let mut p = p.to_vec();
        let mut word = Vec::new();
        'outer: loop {
            for s in 0..self.rank() {
                if is_descent(m, &p, s) {
                    act(m, &mut p, s);
                    word.push(s);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        self.element(&word)
    }

    /// Element of type A from an unsigned one-line permutation.
    pub fn from_permutation(&self, p: &[usize]) -> Result<Element> {
        self.from_one_line(&p.iter().map(|&x| x as i64).collect::<Vec<_>>())
    }

    /// One-line notation (signed for types B, C, D).
    pub fn one_line(&self, w: &Element) -> Result<Vec<i64>> {
        let (m, n) = model(self).ok_or_else(|| Error::NotTypeA(self.name()))?;
        let mut p: Vec<i64> = (1..=n as i64).collect();
        for &s in w.word() {
            act(m, &mut p, s as usize);
        }
        Ok(p)
    }

    /// One-line notation of a type A element.
    pub fn permutation(&self, w: &Element) -> Result<Vec<usize>> {
        match self.kind() {
            CoxeterType::A(_) => Ok(self.one_line(w)?.into_iter().map(|x| x as usize).collect()),
            _ => Err(Error::NotTypeA(self.name())),
        }
    }

    /// Parses an element as one-line notation or as a word in the generators.
    pub fn parse_element(&self, text: &str, format: ElementFormat) -> Result<Element> {
        match format {
            ElementFormat::Word => self.parse_word(text),
            ElementFormat::OneLine => self.from_one_line(&parse_one_line(text, self.permutation_degree())?),
            ElementFormat::Auto => {
                if let Some(n) = self.permutation_degree() {
                    if let Ok(p) = parse_one_line(text, Some(n)) {
                        if let Ok(w) = self.from_one_line(&p) {
                            return Ok(w);
                        }
                    }
                }
                self.parse_word(text)
            }
        }
    }

    /// Formats an element as compact one-line notation when a permutation model exists,
    /// otherwise as a word.
    pub fn format_element(&self, w: &Element) -> String {
        match self.one_line(w) {
            Ok(p) => format_one_line(&p),
            Err(_) => w.display(self),
        }
    }
}

/// Reads `"4231"`, `"4 2 3 1"`, `"[4,2,3,1]"` or `"-2,1"`. Undelimited digit
/// strings are split into single digits.
pub fn parse_one_line(text: &str, n: Option<usize>) -> Result<Vec<i64>> {
    let t = text.trim().trim_start_matches('[').trim_end_matches(']');
    let err = |reason: &str| Error::Parse {
        input: text.into(),
        reason: reason.into(),
    };
    let p: Vec<i64> = if t.contains([',', ' ']) {
        t.split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.parse().map_err(|_| err("bad entry")))
            .collect::<Result<_>>()?
    } else {
        let mut out = Vec::new();
        let mut neg = false;
        for c in t.chars() {
            match c {
                '-' => neg = true,
                d if d.is_ascii_digit() => {
                    let v = d.to_digit(10).unwrap() as i64;
                    out.push(if neg { -v } else { v });
                    neg = false;
                }
                _ => return Err(err("unexpected character")),
            }
        }
        out
    };
    if let Some(n) = n {
        if p.len() != n {
            return Err(err(&format!("expected {n} entries")));
        }
    }
    Ok(p)
}

/// Compact one-line notation: digits run together when all entries are single digits.
pub fn format_one_line(p: &[i64]) -> String {
    if p.iter().all(|x| x.abs() < 10) {
        p.iter().map(|x| x.to_string()).collect()
    } else {
        p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Classical Lehmer code `c_i = #{j > i : w(i) > w(j)}`.
pub fn classical_code(p: &[usize]) -> Vec<usize> {
    (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .collect()
}

/// Inverse of [`classical_code`].
pub fn from_classical_code(code: &[usize]) -> Result<Vec<usize>> {
    let n = code.len();
    let mut avail: Vec<usize> = (1..=n).collect();
    let mut out = Vec::with_capacity(n);
    for (i, &c) in code.iter().enumerate() {
        if c >= n - i {
            return Err(Error::Usage(format!("code entry {c} too large at position {}", i + 1)));
        }
        out.push(avail.remove(c));
    }
    Ok(out)
}

/// Inverse permutation.
pub fn inverse_permutation(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        q[x - 1] = i + 1;
    }
    q
}

/// Number of inversions.
pub fn inversions(p: &[usize]) -> usize {
    classical_code(p).iter().sum()
}

/// True if `p` contains `pattern` (both one-line, 1-based values).
pub fn contains_pattern(p: &[usize], pattern: &[usize]) -> bool {
    fn rec(p: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pat.len() {
            return true;
        }
        let k = chosen.len();
        for i in start..p.len() {
            let ok = chosen
                .iter()
                .enumerate()
                .all(|(j, &c)| (pat[j] < pat[k]) == (p[c] < p[i]));
            if ok {
                chosen.push(i);
                if rec(p, pat, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(p, pattern, 0, &mut Vec::new())
}

/// Smoothness of the type A Schubert variety: avoids 3412 and 4231.
pub fn is_smooth_permutation(p: &[usize]) -> bool {
    !contains_pattern(p, &[3, 4, 1, 2]) && !contains_pattern(p, &[4, 2, 3, 1])
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (1..=n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Side;
    use crate::genset::GenSet;
    use proptest::prelude::*;

    #[test]
    fn one_line_round_trip_in_s4() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        for p in all_permutations(4) {
            let w = a3.from_permutation(&p).unwrap();
            assert_eq!(w.length(), inversions(&p));
            assert_eq!(a3.permutation(&w).unwrap(), p);
        }
        assert_eq!(a3.elements(None).unwrap().len(), 24);
    }

    #[test]
    fn decomposition_of_4231() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let w = a3.from_permutation(&[4, 2, 3, 1]).unwrap();
        let d = a3.parabolic_decompose(&w, GenSet::from_labels([1, 2]), Side::Right).unwrap();
        assert_eq!(a3.permutation(&d.quotient_part).unwrap(), vec![2, 3, 4, 1]);
        assert_eq!(a3.permutation(&d.parabolic_part).unwrap(), vec![3, 1, 2, 4]);
        // independent check: w^J has no descent at positions 1,2 and lengths add up
        let q = [2usize, 3, 4, 1];
        assert!(q[0] < q[1] && q[1] < q[2]);
        assert_eq!(inversions(&q) + inversions(&[3, 1, 2, 4]), inversions(&[4, 2, 3, 1]));
    }

    #[test]
    fn signed_models_cover_the_groups() {
        for (t, n, order) in [("B", 3, 48), ("C", 3, 48), ("D", 4, 192)] {
            let sys = CoxeterSystem::build(t, Some(n)).unwrap();
            let elems = sys.elements(None).unwrap();
            assert_eq!(elems.len(), order);
            let mut seen = std::collections::HashSet::new();
            for w in &elems {
                let p = sys.one_line(w).unwrap();
                assert!(seen.insert(p.clone()));
                assert_eq!(&sys.from_one_line(&p).unwrap(), w);
            }
        }
    }

    #[test]
    fn parsing_formats() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let w = a3.parse_element("4231", ElementFormat::Auto).unwrap();
        assert_eq!(w.length(), 5);
        assert_eq!(a3.parse_element("[4,2,3,1]", ElementFormat::OneLine).unwrap(), w);
        assert_eq!(a3.parse_element("121", ElementFormat::Auto).unwrap().length(), 3);
        assert_eq!(a3.format_element(&w), "4231");
        let b2 = CoxeterSystem::build("B", Some(2)).unwrap();
        let w0 = b2.parse_element("-1-2", ElementFormat::OneLine).unwrap();
        assert_eq!(w0.length(), 4);
    }

    #[test]
    fn codes() {
        assert_eq!(classical_code(&[3, 2, 1]), vec![2, 1, 0]);
        assert_eq!(classical_code(&[1, 2, 3, 4]), vec![0, 0, 0, 0]);
        assert_eq!(from_classical_code(&[2, 1, 0]).unwrap(), vec![3, 2, 1]);
    }

    #[test]
    fn patterns() {
        assert!(contains_pattern(&[4, 2, 3, 1], &[4, 2, 3, 1]));
        assert!(!is_smooth_permutation(&[3, 4, 1, 2]));
        assert!(is_smooth_permutation(&[6, 5, 1, 7, 8, 4, 3, 2]));
        assert_eq!(all_permutations(5).len(), 120);
    }

    proptest! {
        #[test]
        fn products_match_composition(a in proptest::collection::vec(0usize..5, 0..20),
                                      b in proptest::collection::vec(0usize..5, 0..20)) {
            let a5 = CoxeterSystem::build("A", Some(5)).unwrap();
            let u = a5.element(&a).unwrap();
            let v = a5.element(&b).unwrap();
            let pu = a5.permutation(&u).unwrap();
            let pv = a5.permutation(&v).unwrap();
            let composed: Vec<usize> = pv.iter().map(|&i| pu[i - 1]).collect();
            prop_assert_eq!(a5.permutation(&a5.mul(&u, &v)).unwrap(), composed);
            prop_assert_eq!(a5.permutation(&a5.inverse(&u)).unwrap(), inverse_permutation(&pu));
        }
    }
}
