//! Type A Schubert calculus: Schubert polynomials, structure constants `c_{u,v}^w`
//! (`S_u S_v = sum_w c_{u,v}^w S_w`), and the unitriangular structure matrices of smooth `w`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::perm::{classical_code, from_classical_code, inversions};
use crate::system::{CoxeterSystem, CoxeterType};

/// Largest `n` accepted by [`schubert_polynomial`].
pub const MAX_POLYNOMIAL_DEGREE_N: usize = 7;
/// Largest `n` accepted by the structure matrix routines.
pub const MAX_MATRIX_N: usize = 6;

/// Integer polynomial in `x_1, x_2, ...`; exponent vectors carry no trailing zeros,
/// so key order is lexicographic order of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Vec<u8>, i64>,
}

fn trim(mut e: Vec<u8>) -> Vec<u8> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn monomial(exponents: &[u8], coeff: i64) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(exponents.to_vec(), coeff);
        p
    }

    fn add_term(&mut self, e: Vec<u8>, c: i64) {
        if c == 0 {
            return;
        }
        let e = trim(e);
        let slot = self.terms.entry(e.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u8]) -> i64 {
        self.terms.get(&trim(exponents.to_vec())).copied().unwrap_or(0)
    }

    /// Lexicographically smallest monomial (comparing the exponent of `x_1` first): for a
    /// Schubert polynomial this is `x^code(w)`.
    pub fn leading(&self) -> Option<(&[u8], i64)> {
        self.terms.iter().next().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Degree if every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        let d = degs.next().unwrap_or(0);
        degs.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, c: i64) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, &x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: i64) {
        for (e, &x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let n = a.len().max(b.len());
                let e = (0..n)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    /// Divided difference `(f - s_i f) / (x_i - x_{i+1})`, `i` 1-based.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (e, &c) in &self.terms {
            let mut e = e.clone();
            if e.len() < i + 1 {
                e.resize(i + 1, 0);
            }
            let (p, q) = (e[i - 1], e[i]);
            if p == q {
                continue;
            }
            let (lo, hi, sign) = if p > q { (q, p, c) } else { (p, q, -c) };
            for k in 0..hi - lo {
                let mut m = e.clone();
                m[i - 1] = hi - 1 - k;
                m[i] = lo + k;
                out.add_term(m, sign);
            }
        }
        out
    }

    /// Value at `x_1 = ... = 1`.
    pub fn value_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, &c)) in self.terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if n > 0 { "+" } else { "" };
            let sep = if n > 0 { " " } else { "" };
            write!(f, "{sep}{sign}{}", if n > 0 && c > 0 || c < 0 { " " } else { "" })?;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                .collect();
            match (c.abs(), mono.is_empty()) {
                (a, true) => write!(f, "{a}")?,
                (1, false) => write!(f, "{}", mono.join("*"))?,
                (a, false) => write!(f, "{a}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A Schubert polynomial together with its permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchubertPolynomial {
    pub w: Vec<usize>,
    pub poly: Polynomial,
}

/// Schubert polynomial of `w` in `S_n`, `n <= 7`: start from `x_1^{n-1} x_2^{n-2} ... x_{n-1}`
/// for `w0` and apply `S_w = d_i S_{w s_i}` along ascents.
pub fn schubert_polynomial(w: &[usize]) -> Result<SchubertPolynomial> {
    let n = w.len();
    if n > MAX_POLYNOMIAL_DEGREE_N {
        return Err(Error::Usage(format!(
            "Schubert polynomials are limited to n <= {MAX_POLYNOMIAL_DEGREE_N}"
        )));
    }
    check_perm(w)?;
    fn rec(w: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, Polynomial>) -> Polynomial {
        if let Some(p) = memo.get(w.as_slice()) {
            return p.clone();
        }
        let n = w.len();
        let p = match (0..n.saturating_sub(1)).find(|&i| w[i] < w[i + 1]) {
            None => {
                let e: Vec<u8> = (0..n).map(|i| (n - 1 - i) as u8).collect();
                Polynomial::monomial(&e, 1)
            }
            Some(i) => {
                w.swap(i, i + 1);
                let up = rec(w, memo);
                w.swap(i, i + 1);
                up.divided_difference(i + 1)
            }
        };
        memo.insert(w.clone(), p.clone());
        p
    }
    let poly = rec(&mut w.to_vec(), &mut HashMap::new());
    Ok(SchubertPolynomial { w: w.to_vec(), poly })
}

fn check_perm(w: &[usize]) -> Result<()> {
    let mut seen = vec![false; w.len()];
    for &x in w {
        if x == 0 || x > w.len() || std::mem::replace(&mut seen[x - 1], true) {
            return Err(Error::Parse {
                input: format!("{w:?}"),
                reason: "not a permutation".into(),
            });
        }
    }
    Ok(())
}

/// Permutation with the given (trimmed) code, in the smallest `S_N` containing it.
pub fn permutation_of_code(code: &[u8]) -> Vec<usize> {
    let n = code.iter().enumerate().map(|(i, &c)| i + 1 + c as usize).max().unwrap_or(1);
    let mut c: Vec<usize> = code.iter().map(|&x| x as usize).collect();
    c.resize(n, 0);
    let mut p = from_classical_code(&c).expect("padded code is valid");
    while p.len() > 1 && p[p.len() - 1] == p.len() {
        p.pop();
    }
    p
}

fn code_key(w: &[usize]) -> Vec<u8> {
    trim(classical_code(w).into_iter().map(|c| c as u8).collect())
}

/// Memoized Schubert polynomials and product expansions.
#[derive(Default)]
pub struct SchubertCalculus {
    by_code: Mutex<HashMap<Vec<u8>, Arc<Polynomial>>>,
    products: Mutex<HashMap<(Vec<u8>, Vec<u8>), Arc<BTreeMap<Vec<u8>, u64>>>>,
}

impl SchubertCalculus {
    pub fn new() -> Self {
        Self::default()
    }

    /// Schubert polynomial for a code: a weakly decreasing code gives the monomial `x^code`,
    /// otherwise `S_c = d_i S_{c'}` at the first ascent `c_i < c_{i+1}`, where `c'` swaps the
    /// two entries and adds one to the new `c_i`.
    pub fn from_code(&self, code: &[u8]) -> Arc<Polynomial> {
        let code = trim(code.to_vec());
        if let Some(p) = self.by_code.lock().unwrap().get(&code) {
            return p.clone();
        }
        let p = match (0..code.len().saturating_sub(1)).find(|&i| code[i] < code[i + 1]) {
            None => Polynomial::monomial(&code, 1),
            Some(i) => {
                let mut up = code.clone();
                up[i] = code[i + 1] + 1;
                up[i + 1] = code[i];
                self.from_code(&up).divided_difference(i + 1)
            }
        };
        let p = Arc::new(p);
        self.by_code.lock().unwrap().insert(code, p.clone());
        p
    }

    pub fn polynomial(&self, w: &[usize]) -> Arc<Polynomial> {
        self.from_code(&code_key(w))
    }

    /// Expansion of `f` in the Schubert basis, keyed by code: repeatedly subtract
    /// `c * S_v` where `x^code(v)` is the leading remaining monomial.
    pub fn expand(&self, f: &Polynomial) -> Result<BTreeMap<Vec<u8>, u64>> {
        let mut rest = f.clone();
        let mut out = BTreeMap::new();
        while let Some((lead, c)) = rest.leading() {
            let lead = lead.to_vec();
            if c < 0 {
                return Err(Error::Invariant(format!(
                    "negative Schubert coefficient {c} at code {lead:?}"
                )));
            }
            rest.add_scaled(&self.from_code(&lead), -c);
            out.insert(lead, c as u64);
        }
        Ok(out)
    }

    /// Expansion of `S_u S_v`.
    pub fn product(&self, u: &[usize], v: &[usize]) -> Arc<BTreeMap<Vec<u8>, u64>> {
        let key = (code_key(u), code_key(v));
        if let Some(p) = self.products.lock().unwrap().get(&key) {
            return p.clone();
        }
        let f = self.from_code(&key.0).mul(&self.from_code(&key.1));
        let e = Arc::new(self.expand(&f).expect("products of Schubert polynomials are Schubert-positive"));
        self.products.lock().unwrap().insert(key, e.clone());
        e
    }

    /// `c_{u,v}^w`; zero whenever `l(u) + l(v) != l(w)`.
    pub fn structure_constant(&self, u: &[usize], v: &[usize], w: &[usize]) -> u64 {
        if inversions(u) + inversions(v) != inversions(w) {
            return 0;
        }
        self.product(u, v).get(&code_key(w)).copied().unwrap_or(0)
    }
}

/// Convenience wrapper around a fresh [`SchubertCalculus`].
pub fn structure_constant(u: &[usize], v: &[usize], w: &[usize]) -> u64 {
    SchubertCalculus::new().structure_constant(u, v, w)
}

/// `(c_{u,v}^w)` for `u` of length `k` and `v` of length `l(w) - k`, both below `w`,
/// with rows and columns in the order built from a linear extension of the BP poset.
#[derive(Clone, Debug, Serialize)]
pub struct StructureMatrix {
    pub w: Element,
    pub k: usize,
    pub rows: Vec<Element>,
    pub cols: Vec<Element>,
    pub entries: Vec<Vec<u64>>,
    /// Generators (0-based) removed one at a time, top of the BP poset first.
    #[serde(serialize_with = "labels")]
    pub order: Vec<usize>,
}

fn labels<S: serde::Serializer>(order: &[usize], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(order.iter().map(|a| a + 1))
}

impl StructureMatrix {
    pub fn is_upper_unitriangular(&self) -> bool {
        self.rows.len() == self.cols.len()
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, &c)| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => c == 1,
                    std::cmp::Ordering::Greater => c == 0,
                    std::cmp::Ordering::Less => true,
                })
            })
    }

    /// Number of transversals (permutations `phi` with every `c_{i,phi(i)} != 0`), capped at 2.
    pub fn transversal_count(&self) -> usize {
        transversal_count(&self.entries)
    }
}

/// Number of nonzero transversals of a square matrix, reported as 0, 1, or 2 (meaning "at least 2").
/// Finds one perfect matching, then looks for an alternating cycle.
pub fn transversal_count(m: &[Vec<u64>]) -> usize {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return 0;
    }
    let mut match_col = vec![usize::MAX; n];
    fn augment(r: usize, m: &[Vec<u64>], seen: &mut [bool], match_col: &mut [usize]) -> bool {
        for c in 0..m.len() {
            if m[r][c] != 0 && !seen[c] {
                seen[c] = true;
                if match_col[c] == usize::MAX || augment(match_col[c], m, seen, match_col) {
                    match_col[c] = r;
                    return true;
                }
            }
        }
        false
    }
    for r in 0..n {
        if !augment(r, m, &mut vec![false; n], &mut match_col) {
            return 0;
        }
    }
    let mut match_row = vec![0; n];
    for (c, &r) in match_col.iter().enumerate() {
        match_row[r] = c;
    }
    // Row r -> row r' when r can take r''s column; a cycle gives a second matching.
    let succ = |r: usize| -> Vec<usize> {
        (0..n).filter(|&c| m[r][c] != 0 && c != match_row[r]).map(|c| match_col[c]).collect()
    };
    let mut state = vec![0u8; n];
    fn dfs(r: usize, state: &mut [u8], succ: &dyn Fn(usize) -> Vec<usize>) -> bool {
        state[r] = 1;
        for t in succ(r) {
            if state[t] == 1 || (state[t] == 0 && dfs(t, state, succ)) {
                return true;
            }
        }
        state[r] = 2;
        false
    }
    for r in 0..n {
        if state[r] == 0 && dfs(r, &mut state, &succ) {
            return 2;
        }
    }
    1
}

/// Result of [`CoxeterSystem::poincare_dual`].
#[derive(Clone, Debug, Serialize)]
pub struct DualFactors {
    pub u_factors: Vec<Element>,
    pub v_factors: Vec<Element>,
    pub image: Element,
}

type RankOrders = Vec<(Vec<Element>, Vec<Element>)>;

impl CoxeterSystem {
    fn smooth_type_a(&self, w: &Element) -> Result<()> {
        let CoxeterType::A(r) = *self.kind() else {
            return Err(Error::NotTypeA(self.name()));
        };
        if r + 1 > MAX_MATRIX_N {
            return Err(Error::Usage(format!("structure matrices are limited to n <= {MAX_MATRIX_N}")));
        }
        self.check(w)?;
        if !self.is_rationally_smooth(w, GenSet::EMPTY)? {
            return Err(Error::Usage(format!("{} is not smooth", w.display(self))));
        }
        Ok(())
    }

    /// Generator orders `(a_1, ..., a_r)` removing a maximal element of the BP poset each time.
    pub fn bp_linear_extensions(&self, w: &Element, limit: usize) -> Result<Vec<Vec<usize>>> {
        let poset = self.bp_poset(w)?;
        if !poset.all_singletons() {
            return Err(Error::Usage("BP poset has a block with more than one generator".into()));
        }
        let gens: Vec<usize> = poset.blocks.iter().map(|&b| GenSet::min(b).expect("nonempty block")).collect();
        let mut out = Vec::new();
        fn rec(poset: &crate::bp::BpPoset, gens: &[usize], left: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
            if out.len() >= limit {
                return;
            }
            if left.is_empty() {
                out.push(acc.clone());
                return;
            }
            for idx in 0..left.len() {
                let i = left[idx];
                if left.iter().any(|&j| j != i && poset.leq[i][j]) {
                    continue;
                }
                left.remove(idx);
                acc.push(gens[i]);
                rec(poset, gens, left, acc, out, limit);
                acc.pop();
                left.insert(idx, i);
            }
        }
        rec(&poset, &gens, &mut (0..gens.len()).collect(), &mut Vec::new(), &mut out, limit);
        Ok(out)
    }

    /// Row and column orders for every `k`, following one generator order.
    fn constructive_orders(&self, w: &Element, order: &[usize]) -> Result<RankOrders> {
        let Some((&a, rest)) = order.split_first() else {
            if !w.is_identity() {
                return Err(Error::Invariant("generator order exhausted before w".into()));
            }
            let e = self.identity();
            return Ok(vec![(vec![e.clone()], vec![e])]);
        };
        let universe = GenSet::from_indices(order.iter().copied());
        let j = universe.without(a);
        let d = self.parabolic_decompose(w, j, Side::Right)?;
        let (x, wj) = (d.quotient_part, d.parabolic_part);
        let sub = self.constructive_orders(&wj, rest)?;
        let i = x.support();
        let w0i = self.longest_element(i)?;
        if self.quotient_part(&w0i, i.intersection(j)) != x {
            return Err(Error::Usage(format!(
                "{} is not the maximal element of a parabolic quotient",
                x.display(self)
            )));
        }
        let w0ij = self.longest_element(i.intersection(j))?;
        let quotient: Vec<Element> = self.interval(&x, j)?.elements().cloned().collect();
        let mut linear = quotient.clone();
        linear.sort();
        let pos: HashMap<&Element, usize> = linear.iter().enumerate().map(|(p, y)| (y, p)).collect();
        let dual = |y: &Element| self.mul(&self.mul(&w0i, y), &w0ij);
        let top = w.length();
        let mut out = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut rows = Vec::new();
            let mut cols = Vec::new();
            for y in &quotient {
                let ly = y.length();
                if ly <= k && k - ly < sub.len() {
                    rows.push((pos[&dual(y)], k - ly, y));
                }
                if ly <= top - k && top - k - ly < sub.len() {
                    cols.push((pos[y], sub.len() - 1 - (top - k - ly), y));
                }
            }
            // c_{u,v}^w = 0 unless v^J <= (u^J)^dual.
            rows.sort_by_key(|t| std::cmp::Reverse(t.0));
            cols.sort_by_key(|t| std::cmp::Reverse(t.0));
            let expand = |blocks: Vec<(usize, usize, &Element)>, pick: fn(&(Vec<Element>, Vec<Element>)) -> &Vec<Element>| {
                blocks
                    .into_iter()
                    .flat_map(|(_, r, y)| pick(&sub[r]).iter().map(move |z| self.mul(y, z)))
                    .collect::<Vec<_>>()
            };
            out.push((expand(rows, |p| &p.0), expand(cols, |p| &p.1)));
        }
        Ok(out)
    }

    fn matrix_for_order(&self, calc: &SchubertCalculus, w: &Element, k: usize, order: &[usize]) -> Result<StructureMatrix> {
        let orders = self.constructive_orders(w, order)?;
        let (rows, cols) = orders.into_iter().nth(k).ok_or_else(|| {
            Error::Usage(format!("k = {k} exceeds the length of {}", w.display(self)))
        })?;
        let wp = self.permutation(w)?;
        let rp: Vec<Vec<usize>> = rows.iter().map(|u| self.permutation(u)).collect::<Result<_>>()?;
        let cp: Vec<Vec<usize>> = cols.iter().map(|v| self.permutation(v)).collect::<Result<_>>()?;
        let entries = rp
            .par_iter()
            .map(|u| cp.iter().map(|v| calc.structure_constant(u, v, &wp)).collect())
            .collect();
        Ok(StructureMatrix {
            w: w.clone(),
            k,
            rows,
            cols,
            entries,
            order: order.to_vec(),
        })
    }

    /// The structure matrix of a smooth `w` in `S_n` (`n <= 6`) at rank `k`, in the
    /// constructive order. Linear extensions of the BP poset are tried in turn until one
    /// gives an upper unitriangular matrix; if none does, the first attempt is returned.
    pub fn structure_matrix(&self, w: &Element, k: usize) -> Result<StructureMatrix> {
        self.structure_matrix_with(&SchubertCalculus::new(), w, k)
    }

    /// [`CoxeterSystem::structure_matrix`] with a shared cache.
    pub fn structure_matrix_with(&self, calc: &SchubertCalculus, w: &Element, k: usize) -> Result<StructureMatrix> {
        self.smooth_type_a(w)?;
        let mut first = None;
        for order in self.bp_linear_extensions(w, 24)? {
            let m = self.matrix_for_order(calc, w, k, &order)?;
            if m.is_upper_unitriangular() {
                return Ok(m);
            }
            first.get_or_insert(m);
        }
        first.ok_or_else(|| Error::Invariant("BP poset has no linear extension".into()))
    }

    /// The duality `u -> phi(u)` read off the factorization along `order` (see
    /// [`CoxeterSystem::linear_extension_factorization`]): each factor `u^(i)` of `u` is sent to
    /// `w0(I_i) u^(i) w0(I_i \ {a_i})` with `I_i = Supp(w^(i))`. Returns the factors of `u`,
    /// the factors of the image, and the image. Needs no Schubert polynomials, so any `n` works.
    pub fn poincare_dual(&self, w: &Element, u: &Element, order: &[usize]) -> Result<DualFactors> {
        let w_factors = self.linear_extension_factorization(w, order)?;
        if !self.leq(u, w) {
            return Err(Error::Usage(format!("{} is not below {}", u.display(self), w.display(self))));
        }
        let mut j = self.all();
        let mut rest = u.clone();
        let mut u_factors = Vec::new();
        let mut v_factors = Vec::new();
        for (&a, wi) in order.iter().zip(&w_factors) {
            let next = j.without(a);
            let d = self.parabolic_decompose(&rest, next, Side::Right)?;
            let i = wi.support();
            let w0i = self.longest_element(i)?;
            let w0ij = self.longest_element(i.without(a))?;
            if !wi.is_identity() && self.quotient_part(&w0i, i.without(a)) != *wi {
                return Err(Error::Usage(format!(
                    "{} is not the maximal element of a parabolic quotient",
                    wi.display(self)
                )));
            }
            v_factors.push(self.mul(&self.mul(&w0i, &d.quotient_part), &w0ij));
            u_factors.push(d.quotient_part);
            rest = d.parabolic_part;
            j = next;
        }
        let image = v_factors.iter().fold(self.identity(), |acc, f| self.mul(&acc, f));
        Ok(DualFactors { u_factors, v_factors, image })
    }

    /// The unique `phi: [e,w]_k -> [e,w]_{l(w)-k}` with every `c_{u,phi(u)}^w != 0`.
    pub fn canonical_bijection(&self, w: &Element, k: usize) -> Result<Vec<(Element, Element)>> {
        let m = self.structure_matrix(w, k)?;
        match m.transversal_count() {
            1 => {}
            c => {
                return Err(Error::Invariant(format!(
                    "structure matrix of {} at rank {k} has {} nonzero transversals",
                    w.display(self),
                    if c == 0 { "no" } else { "several" }
                )))
            }
        }
        let n = m.rows.len();
        let mut used = vec![false; n];
        let mut phi = vec![usize::MAX; n];
        // The transversal is unique, so greedy search with backtracking finds exactly it.
        fn rec(i: usize, m: &[Vec<u64>], used: &mut [bool], phi: &mut [usize]) -> bool {
            if i == m.len() {
                return true;
            }
            for j in 0..m.len() {
                if m[i][j] != 0 && !used[j] {
                    used[j] = true;
                    phi[i] = j;
                    if rec(i + 1, m, used, phi) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        rec(0, &m.entries, &mut used, &mut phi);
        Ok(m.rows
            .iter()
            .zip(phi)
            .map(|(u, j)| (u.clone(), m.cols[j].clone()))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{all_permutations, is_smooth_permutation};

    fn x(e: &[u8]) -> Polynomial {
        Polynomial::monomial(e, 1)
    }

    #[test]
    fn small_schubert_polynomials() {
        assert_eq!(schubert_polynomial(&[2, 1, 3]).unwrap().poly, x(&[1]));
        let mut p = x(&[1]);
        p.add_scaled(&x(&[0, 1]), 1);
        assert_eq!(schubert_polynomial(&[1, 3, 2]).unwrap().poly, p);
        assert_eq!(schubert_polynomial(&[4, 3, 2, 1]).unwrap().poly, x(&[3, 2, 1]));
        assert!(schubert_polynomial(&[1, 2, 3, 4, 5, 6, 7, 8]).is_err());
        assert_eq!(p.to_string(), "x1 + x2");
    }

    #[test]
    fn code_recursion_matches_staircase() {
        let calc = SchubertCalculus::new();
        for w in all_permutations(5) {
            let s = schubert_polynomial(&w).unwrap().poly;
            assert_eq!(*calc.polynomial(&w), s, "{w:?}");
            assert_eq!(s.homogeneous_degree(), Some(inversions(&w)));
            let code: Vec<u8> = classical_code(&w).into_iter().map(|c| c as u8).collect();
            assert_eq!(s.leading().unwrap(), (trim(code).as_slice(), 1));
        }
    }

    /// `d_w f` at zero extracts the coefficient of `S_w`.
    fn extract(f: &Polynomial, w: &[usize]) -> i64 {
        let mut w = w.to_vec();
        let mut f = f.clone();
        while let Some(i) = (0..w.len() - 1).find(|&i| w[i] > w[i + 1]) {
            f = f.divided_difference(i + 1);
            w.swap(i, i + 1);
        }
        f.coefficient(&[])
    }

    /// Monk: `S_u S_{s_r} = sum S_{u t_{ab}}` over `a <= r < b` with `l(u t_{ab}) = l(u) + 1`.
    fn monk(u: &[usize], r: usize, w: &[usize]) -> u64 {
        let n = w.len();
        let mut u = u.to_vec();
        u.resize(n, 0);
        for (i, slot) in u.iter_mut().enumerate() {
            if *slot == 0 {
                *slot = i + 1;
            }
        }
        let mut count = 0;
        for a in 0..r {
            for b in r..n {
                let mut t = u.clone();
                t.swap(a, b);
                if inversions(&t) == inversions(&u) + 1 && t == w {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn s3_hand_examples() {
        let calc = SchubertCalculus::new();
        assert_eq!(calc.structure_constant(&[2, 1, 3], &[1, 3, 2], &[2, 3, 1]), 1);
        assert_eq!(calc.structure_constant(&[2, 1, 3], &[2, 1, 3], &[2, 3, 1]), 0);
        assert_eq!(calc.structure_constant(&[2, 1, 3], &[2, 1, 3], &[3, 1, 2]), 1);
        assert_eq!(calc.structure_constant(&[2, 1, 3], &[2, 1, 3], &[1, 2, 3]), 0);
        assert_eq!(monk(&[2, 1, 3], 2, &[2, 3, 1]), 1);
        assert_eq!(monk(&[2, 1, 3], 1, &[2, 3, 1]), 0);
    }

    #[test]
    fn expansion_agrees_with_extraction_and_monk() {
        let calc = SchubertCalculus::new();
        let s4 = all_permutations(4);
        for u in &s4 {
            for v in &s4 {
                let f = calc.polynomial(u).mul(&calc.polynomial(v));
                let exp = calc.product(u, v);
                for (code, &c) in exp.iter() {
                    let w = permutation_of_code(code);
                    assert_eq!(extract(&f, &w), c as i64);
                }
                let total: u64 = exp
                    .iter()
                    .map(|(code, &c)| c * calc.from_code(code).value_at_ones() as u64)
                    .sum();
                assert_eq!(total as i64, f.value_at_ones());
                assert_eq!(*exp, *calc.product(v, u));
                if inversions(v) == 1 {
                    let r = (0..3).find(|&i| v[i] > v[i + 1]).unwrap() + 1;
                    for w in all_permutations(5) {
                        let c = exp.get(&code_key(&w)).copied().unwrap_or(0);
                        assert_eq!(c, monk(u, r, &w), "{u:?} * s{r} -> {w:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn duality_at_w0() {
        let calc = SchubertCalculus::new();
        let w0 = [4, 3, 2, 1];
        for u in all_permutations(4) {
            for v in all_permutations(4) {
                let dual: Vec<usize> = u.iter().map(|&x| 5 - x).collect();
                let expect = u64::from(v == dual);
                assert_eq!(calc.structure_constant(&u, &v, &w0) * expect, expect);
                if inversions(&u) + inversions(&v) == 6 {
                    assert_eq!(calc.structure_constant(&u, &v, &w0), expect);
                }
            }
        }
    }

    #[test]
    fn matrix_for_231() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w = a2.from_permutation(&[2, 3, 1]).unwrap();
        let m = a2.structure_matrix(&w, 1).unwrap();
        let s1 = a2.generator(0).unwrap();
        let s2 = a2.generator(1).unwrap();
        assert_eq!(m.rows, vec![s2.clone(), s1.clone()]);
        assert_eq!(m.cols, vec![s1.clone(), s2.clone()]);
        assert_eq!(m.entries, vec![vec![1, 1], vec![0, 1]]);
        let phi = a2.canonical_bijection(&w, 1).unwrap();
        assert_eq!(phi, vec![(s2.clone(), s1.clone()), (s1, s2)]);
    }

    #[test]
    fn matrix_at_w0_is_a_permutation_matrix() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        let w0 = a2.longest_element(a2.all()).unwrap();
        for k in 0..=3 {
            let m = a2.structure_matrix(&w0, k).unwrap();
            for row in &m.entries {
                assert_eq!(row.iter().sum::<u64>(), 1);
            }
            for (u, v) in a2.canonical_bijection(&w0, k).unwrap() {
                assert_eq!(a2.mul(&w0, &u), v);
            }
        }
    }

    #[test]
    fn duality_example_in_s8() {
        let a7 = CoxeterSystem::build("A", Some(7)).unwrap();
        let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2]).unwrap();
        let u = a7.from_permutation(&[3, 6, 1, 5, 2, 7, 8, 4]).unwrap();
        let order: Vec<usize> = [3, 1, 4, 6, 2, 7, 5].iter().map(|x| x - 1).collect();
        let d = a7.poincare_dual(&w, &u, &order).unwrap();
        let show = |v: &[Element]| v.iter().map(|x| a7.format_element(x)).collect::<Vec<_>>();
        assert_eq!(
            show(&d.u_factors),
            ["13624578", "21345678", "12364578", "12345768", "13245678", "12345687", "12345678"]
        );
        assert_eq!(
            show(&d.v_factors),
            ["12534678", "21345678", "12354678", "12346857", "12345678", "12345678", "12346578"]
        );
        assert_eq!(a7.format_element(&d.image), "21548637");
        assert_eq!(u.length(), 10);
        assert_eq!(d.image.length() + 10, w.length());
    }

    #[test]
    fn duality_matches_canonical_bijection() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        for p in all_permutations(4) {
            if !is_smooth_permutation(&p) {
                continue;
            }
            let w = a3.from_permutation(&p).unwrap();
            for k in 0..=w.length() {
                let m = a3.structure_matrix(&w, k).unwrap();
                for (u, v) in a3.canonical_bijection(&w, k).unwrap() {
                    assert_eq!(a3.poincare_dual(&w, &u, &m.order).unwrap().image, v);
                }
            }
        }
    }

    #[test]
    fn example_pair_in_s8_is_out_of_range() {
        let a7 = CoxeterSystem::build("A", Some(7)).unwrap();
        let w = a7.from_permutation(&[6, 5, 1, 7, 8, 4, 3, 2]).unwrap();
        assert!(a7.structure_matrix(&w, 10).is_err());
    }

    #[test]
    fn transversal_counting() {
        assert_eq!(transversal_count(&[vec![1, 1], vec![0, 1]]), 1);
        assert_eq!(transversal_count(&[vec![1, 1], vec![1, 1]]), 2);
        assert_eq!(transversal_count(&[vec![1, 1], vec![0, 0]]), 0);
        let tri: Vec<Vec<u64>> = (0..6).map(|i| (0..6).map(|j| u64::from(j >= i) * 3).collect()).collect();
        assert_eq!(transversal_count(&tri), 1);
    }

    #[test]
    fn smooth_s4_matrices_are_unitriangular() {
        let a3 = CoxeterSystem::build("A", Some(3)).unwrap();
        let calc = SchubertCalculus::new();
        for p in all_permutations(4) {
            let w = a3.from_permutation(&p).unwrap();
            if !is_smooth_permutation(&p) {
                assert!(a3.structure_matrix(&w, 0).is_err());
                continue;
            }
            for k in 0..=w.length() {
                let m = a3.structure_matrix_with(&calc, &w, k).unwrap();
                assert!(m.is_upper_unitriangular(), "{p:?} k={k}: {:?}", m.entries);
            }
        }
    }
}
