//! Group elements in lexicographically least reduced-word normal form.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::scalar::{Ring, ZPhi};
use crate::system::{CoxeterSystem, Representation, INFINITE};

/// An element of a Coxeter group, stored as its lexicographically least
/// reduced word (0-based generator indices) with cached descents and support.
#[derive(Clone)]
pub struct Element {
    pub(crate) sys: u64,
    word: Box<[u8]>,
    left: GenSet,
    right: GenSet,
    support: GenSet,
}

impl Element {
    /// The normal-form reduced word, 0-based.
    pub fn word(&self) -> &[u8] {
        &self.word
    }
    /// The normal-form reduced word with 1-based generator labels.
    pub fn labels(&self) -> Vec<usize> {
        self.word.iter().map(|&s| s as usize + 1).collect()
    }
    pub fn length(&self) -> usize {
        self.word.len()
    }
    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
    pub fn left_descents(&self) -> GenSet {
        self.left
    }
    pub fn right_descents(&self) -> GenSet {
        self.right
    }
    pub fn support(&self) -> GenSet {
        self.support
    }
    pub fn is_right_descent(&self, s: usize) -> bool {
        self.right.contains(s)
    }
    pub fn is_left_descent(&self, s: usize) -> bool {
        self.left.contains(s)
    }

    /// Renders the word with the system's generator labels, e.g. `s1s2s1` or `srst`.
    pub fn display(&self, sys: &CoxeterSystem) -> String {
        if self.word.is_empty() {
            return "e".into();
        }
        let numeric = sys.labels().iter().all(|l| l.chars().all(|c| c.is_ascii_digit()));
        self.word
            .iter()
            .map(|&s| {
                if numeric {
                    format!("s{}", sys.label(s as usize))
                } else {
                    sys.label(s as usize).to_string()
                }
            })
            .collect()
    }
}

impl PartialEq for Element {
    fn eq(&self, o: &Self) -> bool {
        self.sys == o.sys && self.word == o.word
    }
}
impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, h: &mut H) {
        self.word.hash(h);
    }
}

/// Graded order: by length, then lexicographically by normal form.
impl Ord for Element {
    fn cmp(&self, o: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&o.word.len())
            .then_with(|| self.word.cmp(&o.word))
            .then_with(|| self.sys.cmp(&o.sys))
    }
}
impl PartialOrd for Element {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for &s in self.word.iter() {
            write!(f, "s{}", s + 1)?;
        }
        Ok(())
    }
}

/// Serializes as the array of 1-based generator indices of the reduced word.
impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(ser)
    }
}

/// Which side the parabolic factor sits on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `w = w^J * w_J`
    Right,
    /// `w = _J w * ^J w`
    Left,
}

/// A length-additive factorization of `w` into a minimal coset representative
/// and an element of the parabolic subgroup `W_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicDecomposition {
    pub side: Side,
    #[serde(rename = "J")]
    pub j: GenSet,
    /// `w^J` (right) or `^J w` (left).
    pub quotient_part: Element,
    /// `w_J` (right) or `_J w` (left).
    pub parabolic_part: Element,
}

// ---------------------------------------------------------------------------
// Arithmetic engine

/// Matrices of `w` and `w^{-1}` in the simple-root basis; column `s` of `m`
/// is `w(alpha_s)`, column `s` of `minv` is `w^{-1}(alpha_s)`.
#[derive(Clone)]
pub(crate) struct Geo<T> {
    r: usize,
    m: Vec<T>,
    minv: Vec<T>,
}

impl<T: Ring> Geo<T> {
    fn identity(r: usize) -> Self {
        let mut m = vec![T::zero(); r * r];
        for i in 0..r {
            m[i * r + i] = T::one();
        }
        Geo { r, minv: m.clone(), m }
    }

    /// `x <- x * sigma_s`: column t becomes col_t - a[s][t] col_s.
    fn col_op(r: usize, x: &mut [T], a: &[T], s: usize) {
        for t in 0..r {
            let c = a[s * r + t];
            if t == s || c.is_zero() {
                continue;
            }
            for i in 0..r {
                let v = x[i * r + s];
                x[i * r + t] = x[i * r + t] - c * v;
            }
        }
        for i in 0..r {
            x[i * r + s] = -x[i * r + s];
        }
    }

    /// `x <- sigma_s * x`: row s becomes row_s - sum_t a[s][t] row_t.
    fn row_op(r: usize, x: &mut [T], a: &[T], s: usize) {
        for col in 0..r {
            let mut acc = T::zero();
            for t in 0..r {
                let c = a[s * r + t];
                if !c.is_zero() {
                    acc = acc + c * x[t * r + col];
                }
            }
            x[s * r + col] = x[s * r + col] - acc;
        }
    }

    fn right_mul(&mut self, a: &[T], s: usize) {
        Self::col_op(self.r, &mut self.m, a, s);
        Self::row_op(self.r, &mut self.minv, a, s);
    }

    fn left_mul(&mut self, a: &[T], s: usize) {
        Self::row_op(self.r, &mut self.m, a, s);
        Self::col_op(self.r, &mut self.minv, a, s);
    }

    fn column_negative(r: usize, x: &[T], s: usize) -> bool {
        for i in 0..r {
            match x[i * r + s].signum() {
                Ordering::Less => return true,
                Ordering::Greater => return false,
                Ordering::Equal => {}
            }
        }
        unreachable!("zero column in reflection representation")
    }

    fn is_right_descent(&self, s: usize) -> bool {
        Self::column_negative(self.r, &self.m, s)
    }

    fn is_left_descent(&self, s: usize) -> bool {
        Self::column_negative(self.r, &self.minv, s)
    }

    /// Lexicographically least reduced word; only `minv` is needed and consumed.
    fn normal_form(mut self, a: &[T]) -> Vec<u8> {
        let mut out = Vec::new();
        'outer: loop {
            for s in 0..self.r {
                if self.is_left_descent(s) {
                    out.push(s as u8);
                    Self::col_op(self.r, &mut self.minv, a, s);
                    continue 'outer;
                }
            }
            return out;
        }
    }
}

/// Alternating word `first, other, first, ...` of length `len` in `I2(m)`.
#[derive(Clone, Copy)]
pub(crate) struct Dih {
    m: u32,
    first: u8,
    len: u32,
}

impl Dih {
    fn last(&self) -> u8 {
        if self.len % 2 == 1 {
            self.first
        } else {
            1 - self.first
        }
    }
    fn is_top(&self) -> bool {
        self.m != INFINITE && self.len == self.m
    }
    fn is_right_descent(&self, s: usize) -> bool {
        self.len > 0 && (self.is_top() || self.last() as usize == s)
    }
    fn is_left_descent(&self, s: usize) -> bool {
        self.len > 0 && (self.is_top() || self.first as usize == s)
    }
    fn right_mul(&mut self, s: usize) {
        let s = s as u8;
        if self.len == 0 {
            *self = Dih { m: self.m, first: s, len: 1 };
        } else if self.is_top() {
            // w0 = alternating word ending in s; drop that letter.
            let first = if self.m % 2 == 1 { s } else { 1 - s };
            *self = Dih { m: self.m, first, len: self.m - 1 };
        } else if self.last() == s {
            self.len -= 1;
        } else {
            self.len += 1;
        }
    }
    fn left_mul(&mut self, s: usize) {
        let s = s as u8;
        if self.len == 0 {
            *self = Dih { m: self.m, first: s, len: 1 };
        } else if self.is_top() {
            *self = Dih { m: self.m, first: 1 - s, len: self.m - 1 };
        } else if self.first == s {
            self.first = 1 - s;
            self.len -= 1;
        } else {
            self.first = s;
            self.len += 1;
        }
    }
    fn normal_form(&self) -> Vec<u8> {
        let first = if self.is_top() { 0 } else { self.first };
        (0..self.len).map(|i| if i % 2 == 0 { first } else { 1 - first }).collect()
    }
}

#[derive(Clone)]
pub(crate) enum State {
    Int(Geo<i64>),
    Gold(Geo<ZPhi>),
    Dih(Dih),
}

impl CoxeterSystem {
    pub(crate) fn fresh_state(&self) -> State {
        match &self.rep {
            Representation::Int(_) => State::Int(Geo::identity(self.rank())),
            Representation::Golden(_) => State::Gold(Geo::identity(self.rank())),
            Representation::Dihedral(m) => State::Dih(Dih { m: *m, first: 0, len: 0 }),
        }
    }

    pub(crate) fn state_of(&self, word: &[u8]) -> State {
        let mut st = self.fresh_state();
        for &s in word {
            self.state_right_mul(&mut st, s as usize);
        }
        st
    }

    pub(crate) fn state_right_mul(&self, st: &mut State, s: usize) {
        match (st, &self.rep) {
            (State::Int(g), Representation::Int(a)) => g.right_mul(a, s),
            (State::Gold(g), Representation::Golden(a)) => g.right_mul(a, s),
            (State::Dih(d), _) => d.right_mul(s),
            _ => unreachable!("state does not match representation"),
        }
    }

    pub(crate) fn state_left_mul(&self, st: &mut State, s: usize) {
        match (st, &self.rep) {
            (State::Int(g), Representation::Int(a)) => g.left_mul(a, s),
            (State::Gold(g), Representation::Golden(a)) => g.left_mul(a, s),
            (State::Dih(d), _) => d.left_mul(s),
            _ => unreachable!("state does not match representation"),
        }
    }

    pub(crate) fn state_is_right_descent(&self, st: &State, s: usize) -> bool {
        match st {
            State::Int(g) => g.is_right_descent(s),
            State::Gold(g) => g.is_right_descent(s),
            State::Dih(d) => d.is_right_descent(s),
        }
    }

    pub(crate) fn state_is_left_descent(&self, st: &State, s: usize) -> bool {
        match st {
            State::Int(g) => g.is_left_descent(s),
            State::Gold(g) => g.is_left_descent(s),
            State::Dih(d) => d.is_left_descent(s),
        }
    }

    pub(crate) fn element_from_state(&self, st: State) -> Element {
        let r = self.rank();
        let mut left = GenSet::EMPTY;
        let mut right = GenSet::EMPTY;
        for s in 0..r {
            if self.state_is_left_descent(&st, s) {
                left.insert(s);
            }
            if self.state_is_right_descent(&st, s) {
                right.insert(s);
            }
        }
        let word = match (st, &self.rep) {
            (State::Int(g), Representation::Int(a)) => g.normal_form(a),
            (State::Gold(g), Representation::Golden(a)) => g.normal_form(a),
            (State::Dih(d), _) => d.normal_form(),
            _ => unreachable!("state does not match representation"),
        };
        let support = word.iter().map(|&s| s as usize).collect();
        Element {
            sys: self.id,
            word: word.into_boxed_slice(),
            left,
            right,
            support,
        }
    }

    /// Errors unless `w` was produced by this system.
    pub fn check(&self, w: &Element) -> Result<()> {
        if w.sys == self.id {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    fn check_gen(&self, s: usize) -> Result<()> {
        if s < self.rank() {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { index: s, rank: self.rank() })
        }
    }

    fn check_set(&self, j: GenSet) -> Result<()> {
        if j.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                index: j.max().unwrap_or(0),
                rank: self.rank(),
            })
        }
    }

    pub fn identity(&self) -> Element {
        self.element_from_state(self.fresh_state())
    }

    /// The simple reflection with 0-based index `s`.
    pub fn generator(&self, s: usize) -> Result<Element> {
        self.check_gen(s)?;
        Ok(self.element_from_state(self.state_of(&[s as u8])))
    }

    /// Product of the given generators (0-based), in normal form. The word need not be reduced.
    pub fn element(&self, word: &[usize]) -> Result<Element> {
        for &s in word {
            self.check_gen(s)?;
        }
        let w: Vec<u8> = word.iter().map(|&s| s as u8).collect();
        Ok(self.element_from_state(self.state_of(&w)))
    }

    /// Product of the given generators with 1-based labels.
    pub fn element_from_labels(&self, word: &[usize]) -> Result<Element> {
        if word.contains(&0) {
            return Err(Error::Usage("generator labels are 1-based".into()));
        }
        self.element(&word.iter().map(|&s| s - 1).collect::<Vec<_>>())
    }

    /// Parses a word written with generator labels, e.g. `"srstrsr"`, `"s1s2s1"`, `"1 2 1"` or `"e"`.
    pub fn parse_word(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(self.identity());
        }
        let numeric = self.labels().iter().all(|l| l.chars().all(|c| c.is_ascii_digit()));
        let mut word = Vec::new();
        if numeric {
            let cleaned = t.replace(['s', '[', ']'], " ").replace(',', " ");
            let tokens: Vec<&str> = cleaned.split_whitespace().collect();
            let split_digits = tokens.len() == 1 && self.rank() <= 9 && t.starts_with(|c: char| c.is_ascii_digit()) && !t.contains(['s', ' ', ',']);
            let tokens: Vec<String> = if split_digits {
                tokens[0].chars().map(String::from).collect()
            } else if t.contains('s') && !t.contains([' ', ',']) {
                t.split('s').filter(|p| !p.is_empty()).map(String::from).collect()
            } else {
                tokens.iter().map(|s| s.to_string()).collect()
            };
            for tok in tokens {
                word.push(self.generator_index(&tok).map_err(|_| Error::Parse {
                    input: text.into(),
                    reason: format!("unknown generator {tok:?}"),
                })?);
            }
        } else {
            for ch in t.chars().filter(|c| !c.is_whitespace() && *c != ',') {
                word.push(self.generator_index(&ch.to_string()).map_err(|_| Error::Parse {
                    input: text.into(),
                    reason: format!("unknown generator {ch:?}"),
                })?);
            }
        }
        self.element(&word)
    }

    /// `w * s`.
    pub fn mul_gen(&self, w: &Element, s: usize) -> Element {
        let mut st = self.state_of(&w.word);
        self.state_right_mul(&mut st, s);
        self.element_from_state(st)
    }

    /// `s * w`.
    pub fn gen_mul(&self, s: usize, w: &Element) -> Element {
        let mut st = self.state_of(&w.word);
        self.state_left_mul(&mut st, s);
        self.element_from_state(st)
    }

    /// Normal form of the product `w * v`.
    pub fn multiply(&self, w: &Element, v: &Element) -> Result<Element> {
        self.check(w)?;
        self.check(v)?;
        Ok(self.mul(w, v))
    }

    pub(crate) fn mul(&self, w: &Element, v: &Element) -> Element {
        let mut st = self.state_of(&w.word);
        for &s in v.word.iter() {
            self.state_right_mul(&mut st, s as usize);
        }
        self.element_from_state(st)
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let rev: Vec<u8> = w.word.iter().rev().copied().collect();
        self.element_from_state(self.state_of(&rev))
    }

    /// Unique parabolic decomposition of `w` with respect to `J` on the given side.
    pub fn parabolic_decompose(&self, w: &Element, j: GenSet, side: Side) -> Result<ParabolicDecomposition> {
        self.check(w)?;
        self.check_set(j)?;
        Ok(self.decompose(w, j, side))
    }

    pub(crate) fn decompose(&self, w: &Element, j: GenSet, side: Side) -> ParabolicDecomposition {
        let mut st = self.state_of(&w.word);
        let mut stripped: Vec<u8> = Vec::new();
        let descent = |sys: &Self, st: &State, s: usize| match side {
            Side::Right => sys.state_is_right_descent(st, s),
            Side::Left => sys.state_is_left_descent(st, s),
        };
        'outer: loop {
            for s in j.iter() {
                if descent(self, &st, s) {
                    match side {
                        Side::Right => self.state_right_mul(&mut st, s),
                        Side::Left => self.state_left_mul(&mut st, s),
                    }
                    stripped.push(s as u8);
                    continue 'outer;
                }
            }
            break;
        }
        let quotient_part = self.element_from_state(st);
        // Right: w = w^J * (s_k ... s_1); left: w = (s_1 ... s_k) * ^J w.
        if side == Side::Right {
            stripped.reverse();
        }
        let parabolic_part = self.element_from_state(self.state_of(&stripped));
        ParabolicDecomposition {
            side,
            j,
            quotient_part,
            parabolic_part,
        }
    }

    /// `w^J`, the minimal-length representative of `w W_J`.
    pub fn quotient_part(&self, w: &Element, j: GenSet) -> Element {
        self.decompose(w, j, Side::Right).quotient_part
    }

    /// `w_J`, the parabolic factor in `w = w^J w_J`.
    pub fn parabolic_part(&self, w: &Element, j: GenSet) -> Element {
        self.decompose(w, j, Side::Right).parabolic_part
    }

    /// True if `w` has no right descents in `J`.
    pub fn is_minimal_in_coset(&self, w: &Element, j: GenSet) -> bool {
        w.right_descents().intersection(j).is_empty()
    }

    /// The longest element `w_0(J)` of the parabolic subgroup `W_J`.
    pub fn longest_element(&self, j: GenSet) -> Result<Element> {
        self.check_set(j)?;
        let max_m = j
            .iter()
            .flat_map(|s| j.iter().map(move |t| (s, t)))
            .map(|(s, t)| self.m(s, t))
            .max()
            .unwrap_or(1);
        if j.iter().any(|s| j.iter().any(|t| self.m(s, t) == INFINITE)) {
            return Err(Error::InfiniteParabolic(j));
        }
        let bound = j.len() * j.len() + 120 + max_m as usize;
        let mut st = self.fresh_state();
        let mut len = 0usize;
        'outer: loop {
            for s in j.iter() {
                if !self.state_is_right_descent(&st, s) {
                    self.state_right_mul(&mut st, s);
                    len += 1;
                    if len > bound {
                        return Err(Error::InfiniteParabolic(j));
                    }
                    continue 'outer;
                }
            }
            break;
        }
        Ok(self.element_from_state(st))
    }

    /// All elements of length at most `max_len` (all elements if `None`,
    /// which requires a finite group), sorted by length then normal form.
    pub fn elements(&self, max_len: Option<usize>) -> Result<Vec<Element>> {
        self.elements_in(self.all(), max_len)
    }

    /// Elements of the parabolic subgroup `W_J` of length at most `max_len`.
    pub fn elements_in(&self, j: GenSet, max_len: Option<usize>) -> Result<Vec<Element>> {
        self.check_set(j)?;
        if max_len.is_none() {
            self.longest_element(j)?;
        }
        let mut out = vec![self.identity()];
        let mut seen: HashSet<Element> = out.iter().cloned().collect();
        let mut layer = out.clone();
        let mut len = 0;
        while !layer.is_empty() && max_len.is_none_or(|m| len < m) {
            let mut next = Vec::new();
            for w in &layer {
                for s in j.iter() {
                    if !w.is_right_descent(s) {
                        let ws = self.mul_gen(w, s);
                        if seen.insert(ws.clone()) {
                            next.push(ws);
                        }
                    }
                }
            }
            next.sort();
            out.extend(next.iter().cloned());
            layer = next;
            len += 1;
        }
        Ok(out)
    }

    /// Elements of the quotient `W^J` (no right descents in `J`) of length at most `max_len`.
    pub fn quotient_elements(&self, j: GenSet, max_len: Option<usize>) -> Result<Vec<Element>> {
        Ok(self
            .elements(max_len)?
            .into_iter()
            .filter(|w| self.is_minimal_in_coset(w, j))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(t: &str, r: Option<usize>) -> CoxeterSystem {
        CoxeterSystem::build(t, r).unwrap()
    }

    #[test]
    fn involution_and_braid() {
        let a2 = sys("A", Some(2));
        let s1 = a2.generator(0).unwrap();
        assert!(a2.multiply(&s1, &s1).unwrap().is_identity());
        let x = a2.element(&[0, 1, 0]).unwrap();
        let y = a2.element(&[1, 0, 1]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.word(), &[0, 1, 0]);
    }

    #[test]
    fn affine_c2_word_is_reduced() {
        let c = sys("affineC2", None);
        let w = c.parse_word("srstrsr").unwrap();
        assert_eq!(w.length(), 7);
        assert_eq!(w.right_descents(), GenSet::singleton(c.generator_index("r").unwrap()));
    }

    #[test]
    fn group_orders() {
        for (t, r) in [
            ("A", Some(1)),
            ("A", Some(2)),
            ("A", Some(3)),
            ("A", Some(4)),
            ("B", Some(2)),
            ("B", Some(3)),
            ("C", Some(3)),
            ("D", Some(4)),
            ("G2", None),
            ("F4", None),
            ("H3", None),
            ("I2", Some(5)),
            ("I2", Some(7)),
        ] {
            let s = sys(t, r);
            let n = s.elements(None).unwrap().len() as u128;
            assert_eq!(Some(n), s.classical_order(), "{t}{r:?}");
        }
    }

    #[test]
    fn longest_elements() {
        let a2 = sys("A", Some(2));
        let w0 = a2.longest_element(a2.all()).unwrap();
        assert_eq!(w0.labels(), vec![1, 2, 1]);
        assert!(a2.longest_element(GenSet::EMPTY).unwrap().is_identity());
        let b3 = sys("B", Some(3));
        let w0 = b3.longest_element(b3.all()).unwrap();
        assert_eq!(w0.length(), 9);
        assert_eq!(w0.left_descents(), b3.all());
        assert_eq!(w0.right_descents(), b3.all());
        let h4 = sys("H4", None);
        assert_eq!(h4.longest_element(h4.all()).unwrap().length(), 60);
        let e8 = sys("E8", None);
        assert_eq!(e8.longest_element(e8.all()).unwrap().length(), 120);
        let c = sys("affineC2", None);
        assert!(matches!(c.longest_element(c.all()), Err(Error::InfiniteParabolic(_))));
        assert_eq!(c.longest_element(GenSet::from_indices([0, 1])).unwrap().length(), 4);
    }

    #[test]
    fn decomposition_of_affine_counterexample() {
        let c = sys("affineC2", None);
        let w = c.parse_word("srstrsr").unwrap();
        let st = c.parse_genset("st").unwrap();
        let d = c.parabolic_decompose(&w, st, Side::Right).unwrap();
        assert_eq!(d.quotient_part, w);
        assert!(d.parabolic_part.is_identity());
        let rs = c.parse_genset("rs").unwrap();
        let d = c.parabolic_decompose(&w, rs, Side::Right).unwrap();
        assert_eq!(d.quotient_part, c.parse_word("srst").unwrap());
        assert_eq!(d.parabolic_part, c.parse_word("rsr").unwrap());
        let rt = c.parse_genset("rt").unwrap();
        let d = c.parabolic_decompose(&w, rt, Side::Right).unwrap();
        assert_eq!(d.quotient_part, c.parse_word("srstrs").unwrap());
        assert_eq!(d.parabolic_part, c.parse_word("r").unwrap());
    }

    #[test]
    fn mixed_systems_are_rejected() {
        let a2 = sys("A", Some(2));
        let b2 = sys("B", Some(2));
        let x = a2.generator(0).unwrap();
        let y = b2.generator(0).unwrap();
        assert_eq!(a2.multiply(&x, &y), Err(Error::MixedSystems));
    }

    #[test]
    fn parse_words() {
        let a3 = sys("A", Some(3));
        let w = a3.parse_word("s1s2s1").unwrap();
        assert_eq!(w, a3.parse_word("121").unwrap());
        assert_eq!(w, a3.parse_word("2 1 2").unwrap());
        assert!(a3.parse_word("s5").is_err());
    }

    #[test]
    fn dihedral_symbolic_matches_golden_representation() {
        let sym = sys("I2", Some(5));
        let geo = CoxeterSystem::from_matrix("I2(5) via Z[phi]", vec![vec![1, 5, 2], vec![5, 1, 2], vec![2, 2, 1]]).unwrap();
        let a: Vec<_> = sym.elements(None).unwrap().iter().map(|w| w.word().to_vec()).collect();
        let b: Vec<_> = geo
            .elements_in(GenSet::from_indices([0, 1]), None)
            .unwrap()
            .iter()
            .map(|w| w.word().to_vec())
            .collect();
        assert_eq!(a, b);
    }

    fn systems() -> Vec<CoxeterSystem> {
        vec![
            sys("A", Some(4)),
            sys("B", Some(3)),
            sys("D", Some(4)),
            sys("H3", None),
            sys("I2", Some(7)),
            sys("affineC2", None),
            sys("affineA2", None),
        ]
    }

    fn word_strategy() -> impl Strategy<Value = (usize, Vec<usize>)> {
        (0usize..7, proptest::collection::vec(0usize..4, 0..24))
    }

    proptest! {
        #[test]
        fn generator_append_changes_length_by_one((k, raw) in word_strategy()) {
            let sys = &systems()[k];
            let word: Vec<usize> = raw.into_iter().map(|s| s % sys.rank()).collect();
            let w = sys.element(&word).unwrap();
            for s in 0..sys.rank() {
                let ws = sys.mul_gen(&w, s);
                let expect = if w.is_right_descent(s) { w.length() - 1 } else { w.length() + 1 };
                prop_assert_eq!(ws.length(), expect);
                prop_assert_eq!(sys.mul_gen(&ws, s), w.clone());
                let sw = sys.gen_mul(s, &w);
                let expect = if w.is_left_descent(s) { w.length() - 1 } else { w.length() + 1 };
                prop_assert_eq!(sw.length(), expect);
            }
        }

        #[test]
        fn decompositions_are_unique_and_dual((k, raw) in word_strategy(), mask in 0u32..16) {
            let sys = &systems()[k];
            let word: Vec<usize> = raw.into_iter().map(|s| s % sys.rank()).collect();
            let w = sys.element(&word).unwrap();
            let j = GenSet(mask).intersection(sys.all());
            let d = sys.parabolic_decompose(&w, j, Side::Right).unwrap();
            prop_assert_eq!(sys.mul(&d.quotient_part, &d.parabolic_part), w.clone());
            prop_assert_eq!(d.quotient_part.length() + d.parabolic_part.length(), w.length());
            prop_assert!(d.parabolic_part.support().is_subset(j));
            prop_assert!(sys.is_minimal_in_coset(&d.quotient_part, j));
            let again = sys.decompose(&d.quotient_part, j, Side::Right);
            prop_assert!(again.parabolic_part.is_identity());
            let winv = sys.inverse(&w);
            let l = sys.decompose(&winv, j, Side::Left);
            prop_assert_eq!(sys.inverse(&l.quotient_part), d.quotient_part);
            prop_assert_eq!(sys.inverse(&l.parabolic_part), d.parabolic_part);
        }
    }
}
