//! Coxeter systems: Coxeter matrices, diagram numbering and reflection data.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::scalar::ZPhi;

/// Order of `st` meaning "infinity" in a Coxeter matrix.
pub const INFINITE: u32 = 0;

/// The family a system belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H3,
    H4,
    I2(u32),
    AffineA2,
    AffineC2,
    AffineG2,
    Custom(String),
}

impl CoxeterType {
    /// True for the finite crystallographic families, which carry a root system.
    pub fn is_finite_crystallographic(&self) -> bool {
        matches!(
            self,
            CoxeterType::A(_)
                | CoxeterType::B(_)
                | CoxeterType::C(_)
                | CoxeterType::D(_)
                | CoxeterType::E(_)
                | CoxeterType::F4
                | CoxeterType::G2
        )
    }

    pub fn is_finite(&self) -> bool {
        self.is_finite_crystallographic()
            || matches!(self, CoxeterType::H3 | CoxeterType::H4 | CoxeterType::I2(_))
    }

    /// Short tag such as `A3`, `E8`, `I2(7)` or `affineC2`.
    pub fn tag(&self) -> String {
        match self {
            CoxeterType::A(n) => format!("A{n}"),
            CoxeterType::B(n) => format!("B{n}"),
            CoxeterType::C(n) => format!("C{n}"),
            CoxeterType::D(n) => format!("D{n}"),
            CoxeterType::E(n) => format!("E{n}"),
            CoxeterType::F4 => "F4".into(),
            CoxeterType::G2 => "G2".into(),
            CoxeterType::H3 => "H3".into(),
            CoxeterType::H4 => "H4".into(),
            CoxeterType::I2(m) => format!("I2({m})"),
            CoxeterType::AffineA2 => "affineA2".into(),
            CoxeterType::AffineC2 => "affineC2".into(),
            CoxeterType::AffineG2 => "affineG2".into(),
            CoxeterType::Custom(name) => name.clone(),
        }
    }

    /// The family letter used in serialized systems.
    pub fn family(&self) -> String {
        match self {
            CoxeterType::A(_) => "A".into(),
            CoxeterType::B(_) => "B".into(),
            CoxeterType::C(_) => "C".into(),
            CoxeterType::D(_) => "D".into(),
            CoxeterType::I2(_) => "I2".into(),
            other => other.tag(),
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// Exact reflection data used for element arithmetic.
#[derive(Clone, Debug)]
pub(crate) enum Representation {
    /// Integer generalized Cartan matrix, row-major; `a[s*r+t] = <alpha_s^vee, alpha_t>`.
    Int(Vec<i64>),
    /// Cartan-type matrix over Z[phi], row-major.
    Golden(Vec<ZPhi>),
    /// Dihedral group of the given order `m` (`0` = infinite), handled symbolically.
    Dihedral(u32),
}

/// A Coxeter system `(W, S)` together with an exact representation.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    kind: CoxeterType,
    rank: usize,
    matrix: Vec<Vec<u32>>,
    labels: Vec<String>,
    pub(crate) rep: Representation,
    pub(crate) id: u64,
}

/// Serialized form `{type, rank, coxeter_matrix}`; infinite orders are written as `null`.
#[derive(Serialize)]
pub struct SystemJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub coxeter_matrix: Vec<Vec<Option<u32>>>,
    pub generators: Vec<String>,
}

fn chain_matrix(n: usize) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
        if i + 1 < n {
            row[i + 1] = 3;
        }
        if i > 0 {
            row[i - 1] = 3;
        }
    }
    m
}

fn set_m(m: &mut [Vec<u32>], i: usize, j: usize, v: u32) {
    m[i][j] = v;
    m[j][i] = v;
}

fn unsupported(family: &str, rank: impl fmt::Display, reason: &str) -> Error {
    Error::UnsupportedSystem {
        family: family.into(),
        rank: rank.to_string(),
        reason: reason.into(),
    }
}

/// Euclidean simple roots (integer coordinates, possibly scaled) for the
/// finite crystallographic types, in diagram numbering.
pub(crate) fn euclidean_simple_roots(kind: &CoxeterType) -> Option<Vec<Vec<i64>>> {
    let unit = |dim: usize, i: usize, c: i64| {
        let mut v = vec![0; dim];
        v[i] = c;
        v
    };
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = vec![0; dim];
        v[i] = 1;
        v[j] = -1;
        v
    };
    Some(match *kind {
        CoxeterType::A(n) => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        CoxeterType::B(n) => {
            let mut v: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            v.push(unit(n, n - 1, 1));
            v
        }
        CoxeterType::C(n) => {
            let mut v: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            v.push(unit(n, n - 1, 2));
            v
        }
        CoxeterType::D(n) => {
            let mut v: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![0; n];
            last[n - 2] = 1;
            last[n - 1] = 1;
            v.push(last);
            v
        }
        CoxeterType::E(n) => {
            // Even coordinate system for E8 with doubled coordinates; E6 and E7
            // are spanned by subsets of its simple roots.
            let b = e8_standard_simple_roots();
            let order: &[usize] = match n {
                6 => &[0, 2, 3, 4, 5, 1],
                7 => &[0, 2, 3, 4, 5, 6, 1],
                8 => &[7, 6, 5, 4, 3, 2, 0, 1],
                _ => return None,
            };
            order.iter().map(|&i| b[i].clone()).collect()
        }
        CoxeterType::F4 => vec![
            vec![0, 2, -2, 0],
            vec![0, 0, 2, -2],
            vec![0, 0, 0, 2],
            vec![1, -1, -1, -1],
        ],
        CoxeterType::G2 => vec![vec![1, -1, 0], vec![-2, 1, 1]],
        _ => return None,
    })
}

/// E8 simple roots in the even coordinate system (doubled), standard order
/// `alpha_1..alpha_8` with alpha_2 attached to alpha_4.
fn e8_standard_simple_roots() -> Vec<Vec<i64>> {
    let mut roots = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
    let mut a2 = vec![0; 8];
    a2[0] = 2;
    a2[1] = 2;
    roots.push(a2);
    for i in 0..6 {
        let mut v = vec![0; 8];
        v[i] = -2;
        v[i + 1] = 2;
        roots.push(v);
    }
    roots
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn cartan_from_euclidean(roots: &[Vec<i64>]) -> Vec<i64> {
    let r = roots.len();
    let mut a = vec![0; r * r];
    for i in 0..r {
        let ii = dot(&roots[i], &roots[i]);
        for j in 0..r {
            let num = 2 * dot(&roots[i], &roots[j]);
            assert_eq!(num % ii, 0, "non-crystallographic simple roots");
            a[i * r + j] = num / ii;
        }
    }
    a
}

/// Integer Cartan entries `(a_st, a_ts)` realizing the order `m`, if possible.
fn integer_pair(m: u32) -> Option<(i64, i64)> {
    match m {
        2 => Some((0, 0)),
        3 => Some((-1, -1)),
        4 => Some((-1, -2)),
        6 => Some((-1, -3)),
        INFINITE => Some((-2, -2)),
        _ => None,
    }
}

impl CoxeterSystem {
    /// Builds a system from a type tag (`A`, `B`, `C`, `D`, `E6`, `E7`, `E8`,
    /// `F4`, `G2`, `H3`, `H4`, `I2`, `affineC2`, `affineA2`, `affineG2`) and
    /// the rank (or the dihedral order `m` for `I2`).
    pub fn build(tag: &str, rank_or_m: Option<usize>) -> Result<CoxeterSystem> {
        let need = |what: &str| {
            rank_or_m.ok_or_else(|| unsupported(tag, "?", &format!("{what} required")))
        };
        let kind = match tag {
            "A" => CoxeterType::A(need("rank")?),
            "B" => CoxeterType::B(need("rank")?),
            "C" => CoxeterType::C(need("rank")?),
            "D" => CoxeterType::D(need("rank")?),
            "E" => CoxeterType::E(need("rank")?),
            "E6" => CoxeterType::E(6),
            "E7" => CoxeterType::E(7),
            "E8" => CoxeterType::E(8),
            "F4" => CoxeterType::F4,
            "G2" => CoxeterType::G2,
            "H3" => CoxeterType::H3,
            "H4" => CoxeterType::H4,
            "F" | "G" | "H" => match (tag, need("rank")?) {
                ("F", 4) => CoxeterType::F4,
                ("G", 2) => CoxeterType::G2,
                ("H", 3) => CoxeterType::H3,
                ("H", 4) => CoxeterType::H4,
                (_, r) => return Err(unsupported(tag, r, "no finite Coxeter group of this type and rank")),
            },
            "I2" => CoxeterType::I2(need("dihedral order m")? as u32),
            "affineC2" | "C~2" => CoxeterType::AffineC2,
            "affineA2" | "A~2" => CoxeterType::AffineA2,
            "affineG2" | "G~2" => CoxeterType::AffineG2,
            _ => return Err(unsupported(tag, rank_or_m.map_or("-".into(), |r| r.to_string()), "unknown type tag")),
        };
        if let (Some(r), CoxeterType::E(_) | CoxeterType::F4 | CoxeterType::G2 | CoxeterType::H3 | CoxeterType::H4) =
            (rank_or_m, &kind)
        {
            if tag.len() == 2 && r != tag[1..].parse::<usize>().unwrap_or(r) {
                return Err(unsupported(tag, r, "rank does not match the type"));
            }
        }
        CoxeterSystem::from_type(kind)
    }

    /// Builds a system from a parsed type.
    pub fn from_type(kind: CoxeterType) -> Result<CoxeterSystem> {
        let numeric = |n: usize| (1..=n).map(|i| i.to_string()).collect::<Vec<_>>();
        match kind.clone() {
            CoxeterType::A(n) => {
                if n == 0 || n > 31 {
                    return Err(unsupported("A", n, "rank must be between 1 and 31"));
                }
                Self::crystallographic(kind, chain_matrix(n))
            }
            CoxeterType::B(n) | CoxeterType::C(n) => {
                if !(2..=31).contains(&n) {
                    return Err(unsupported(&kind.family(), n, "rank must be between 2 and 31"));
                }
                let mut m = chain_matrix(n);
                set_m(&mut m, n - 2, n - 1, 4);
                Self::crystallographic(kind, m)
            }
            CoxeterType::D(n) => {
                if !(3..=31).contains(&n) {
                    return Err(unsupported("D", n, "rank must be between 3 and 31"));
                }
                let mut m = chain_matrix(n);
                set_m(&mut m, n - 2, n - 1, 2);
                set_m(&mut m, n - 3, n - 1, 3);
                Self::crystallographic(kind, m)
            }
            CoxeterType::E(n) => {
                if !(6..=8).contains(&n) {
                    return Err(unsupported("E", n, "rank must be 6, 7 or 8"));
                }
                let branch = if n == 8 { 4 } else { 2 };
                let mut m = chain_matrix(n - 1);
                for row in m.iter_mut() {
                    row.push(2);
                }
                let mut last = vec![2; n];
                last[n - 1] = 1;
                m.push(last);
                set_m(&mut m, branch, n - 1, 3);
                Self::crystallographic(kind, m)
            }
            CoxeterType::F4 => {
                let mut m = chain_matrix(4);
                set_m(&mut m, 1, 2, 4);
                Self::crystallographic(kind, m)
            }
            CoxeterType::G2 => {
                let mut m = chain_matrix(2);
                set_m(&mut m, 0, 1, 6);
                Self::crystallographic(kind, m)
            }
            CoxeterType::H3 | CoxeterType::H4 => {
                let n = if kind == CoxeterType::H3 { 3 } else { 4 };
                let mut m = chain_matrix(n);
                set_m(&mut m, n - 2, n - 1, 5);
                Self::assemble(kind, m, numeric(n))
            }
            CoxeterType::I2(mm) => {
                if mm == 1 {
                    return Err(unsupported("I2", mm, "dihedral order must be at least 2"));
                }
                let m = vec![vec![1, mm], vec![mm, 1]];
                let sys = CoxeterSystem {
                    id: 0,
                    kind,
                    rank: 2,
                    matrix: m,
                    labels: numeric(2),
                    rep: Representation::Dihedral(mm),
                };
                Ok(sys.with_id())
            }
            CoxeterType::AffineC2 => {
                let mut m = chain_matrix(3);
                set_m(&mut m, 0, 1, 4);
                set_m(&mut m, 1, 2, 4);
                Self::assemble(kind, m, vec!["r".into(), "s".into(), "t".into()])
            }
            CoxeterType::AffineA2 => {
                let mut m = chain_matrix(3);
                set_m(&mut m, 0, 2, 3);
                Self::assemble(kind, m, numeric(3))
            }
            CoxeterType::AffineG2 => {
                let mut m = chain_matrix(3);
                set_m(&mut m, 1, 2, 6);
                Self::assemble(kind, m, numeric(3))
            }
            CoxeterType::Custom(name) => Err(unsupported(
                &name,
                "-",
                "custom systems are built with CoxeterSystem::from_matrix",
            )),
        }
    }

    /// Builds a system from an arbitrary Coxeter matrix (`0` = infinity).
    ///
    /// Supported orders are 2, 3, 4, 5, 6 and infinity; rank 2 accepts any order.
    pub fn from_matrix(name: &str, matrix: Vec<Vec<u32>>) -> Result<CoxeterSystem> {
        let r = matrix.len();
        if r == 2 {
            validate_matrix(&matrix)?;
            let mut sys = CoxeterSystem::from_type(CoxeterType::I2(matrix[0][1]))?;
            sys.kind = CoxeterType::Custom(name.into());
            return Ok(sys.with_id());
        }
        let labels = (1..=r).map(|i| i.to_string()).collect();
        Self::assemble(CoxeterType::Custom(name.into()), matrix, labels)
    }

    fn crystallographic(kind: CoxeterType, matrix: Vec<Vec<u32>>) -> Result<CoxeterSystem> {
        validate_matrix(&matrix)?;
        let roots = euclidean_simple_roots(&kind).expect("crystallographic type");
        let cartan = cartan_from_euclidean(&roots);
        let r = matrix.len();
        for s in 0..r {
            for t in 0..r {
                if s != t {
                    let p = cartan[s * r + t] * cartan[t * r + s];
                    let expect = match matrix[s][t] {
                        2 => 0,
                        3 => 1,
                        4 => 2,
                        6 => 3,
                        _ => -1,
                    };
                    if p != expect {
                        return Err(Error::InvalidMatrix(format!(
                            "simple roots of {kind} do not realize m({},{})={}",
                            s + 1,
                            t + 1,
                            matrix[s][t]
                        )));
                    }
                }
            }
        }
        let sys = CoxeterSystem {
            id: 0,
            labels: (1..=r).map(|i| i.to_string()).collect(),
            kind,
            rank: r,
            matrix,
            rep: Representation::Int(cartan),
        };
        Ok(sys.with_id())
    }

    fn assemble(kind: CoxeterType, matrix: Vec<Vec<u32>>, labels: Vec<String>) -> Result<CoxeterSystem> {
        validate_matrix(&matrix)?;
        let r = matrix.len();
        let all_int = (0..r).all(|s| (0..r).all(|t| s == t || integer_pair(matrix[s][t]).is_some()));
        let rep = if all_int {
            let mut a = vec![0i64; r * r];
            for s in 0..r {
                a[s * r + s] = 2;
                for t in s + 1..r {
                    let (x, y) = integer_pair(matrix[s][t]).unwrap();
                    a[s * r + t] = x;
                    a[t * r + s] = y;
                }
            }
            Representation::Int(a)
        } else {
            let mut a = vec![ZPhi::new(0, 0); r * r];
            let mut asymmetric = false;
            for s in 0..r {
                a[s * r + s] = ZPhi::new(2, 0);
                for t in s + 1..r {
                    let (x, y) = match matrix[s][t] {
                        5 => (ZPhi::new(0, -1), ZPhi::new(0, -1)),
                        m => {
                            let (x, y) = integer_pair(m).ok_or_else(|| {
                                Error::InvalidMatrix(format!(
                                    "order {m} has no exact representation here (supported: 2,3,4,5,6,inf)"
                                ))
                            })?;
                            asymmetric |= x != y;
                            (ZPhi::new(x, 0), ZPhi::new(y, 0))
                        }
                    };
                    a[s * r + t] = x;
                    a[t * r + s] = y;
                }
            }
            if asymmetric && has_cycle(&matrix) {
                return Err(Error::InvalidMatrix(
                    "mixing order 5 with orders 4/6/inf on a cyclic diagram is not supported".into(),
                ));
            }
            Representation::Golden(a)
        };
        let sys = CoxeterSystem {
            id: 0,
            kind,
            rank: r,
            matrix,
            labels,
            rep,
        };
        Ok(sys.with_id())
    }

    fn with_id(mut self) -> CoxeterSystem {
        let mut h = DefaultHasher::new();
        self.kind.tag().hash(&mut h);
        self.matrix.hash(&mut h);
        self.id = h.finish();
        self
    }

    pub fn kind(&self) -> &CoxeterType {
        &self.kind
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    /// Coxeter matrix entry `m(s,t)` (0-based indices; `0` means infinity).
    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.matrix[s][t]
    }
    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }
    /// Label of generator `s` (0-based index), e.g. `"3"` or `"r"`.
    pub fn label(&self, s: usize) -> &str {
        &self.labels[s]
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    /// The full generating set `S`.
    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank)
    }
    pub fn name(&self) -> String {
        self.kind.tag()
    }

    /// True if `s` and `t` do not commute.
    pub fn adjacent(&self, s: usize, t: usize) -> bool {
        s != t && self.matrix[s][t] != 2
    }

    /// Connected components of the Coxeter diagram restricted to `j`.
    pub fn components(&self, j: GenSet) -> Vec<GenSet> {
        let mut left = j;
        let mut out = Vec::new();
        while let Some(start) = left.min() {
            let mut comp = GenSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(s) = frontier.pop() {
                for t in left.iter() {
                    if !comp.contains(t) && self.adjacent(s, t) {
                        comp.insert(t);
                        frontier.push(t);
                    }
                }
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, j: GenSet) -> bool {
        self.components(j).len() <= 1
    }

    /// True if `j` and `k` are disjoint and every generator of one commutes with every generator of the other.
    pub fn totally_disconnected(&self, j: GenSet, k: GenSet) -> bool {
        j.intersection(k).is_empty() && j.iter().all(|s| k.iter().all(|t| !self.adjacent(s, t)))
    }

    /// Leaves of the Coxeter diagram (vertices of degree at most one).
    pub fn leaves(&self) -> GenSet {
        (0..self.rank)
            .filter(|&s| (0..self.rank).filter(|&t| self.adjacent(s, t)).count() <= 1)
            .collect()
    }

    /// The classical order of the group for finite types.
    pub fn classical_order(&self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        Some(match self.kind {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) | CoxeterType::C(n) => (1u128 << n) * fact(n),
            CoxeterType::D(n) => (1u128 << (n - 1)) * fact(n),
            CoxeterType::E(6) => 51_840,
            CoxeterType::E(7) => 2_903_040,
            CoxeterType::E(8) => 696_729_600,
            CoxeterType::F4 => 1152,
            CoxeterType::G2 => 12,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14_400,
            CoxeterType::I2(m) if m != INFINITE => 2 * m as u128,
            _ => return None,
        })
    }

    /// The degrees of the basic invariants, for finite irreducible types.
    pub fn degrees(&self) -> Option<Vec<usize>> {
        Some(match self.kind {
            CoxeterType::A(n) => (2..=n + 1).collect(),
            CoxeterType::B(n) | CoxeterType::C(n) => (1..=n).map(|i| 2 * i).collect(),
            CoxeterType::D(n) => {
                let mut d: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            CoxeterType::E(6) => vec![2, 5, 6, 8, 9, 12],
            CoxeterType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            CoxeterType::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            CoxeterType::F4 => vec![2, 6, 8, 12],
            CoxeterType::G2 => vec![2, 6],
            CoxeterType::H3 => vec![2, 6, 10],
            CoxeterType::H4 => vec![2, 12, 20, 30],
            CoxeterType::I2(m) if m != INFINITE => vec![2, m as usize],
            _ => return None,
        })
    }

    /// Serializable description.
    pub fn to_json(&self) -> SystemJson {
        SystemJson {
            kind: self.kind.family(),
            rank: self.rank,
            coxeter_matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|&m| (m != INFINITE).then_some(m)).collect())
                .collect(),
            generators: self.labels.clone(),
        }
    }

    /// Resolves a generator given by label (`"2"`, `"s"`) to its 0-based index.
    pub fn generator_index(&self, label: &str) -> Result<usize> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Ok(i);
        }
        Err(Error::Parse {
            input: label.into(),
            reason: format!("no generator with this label in {}", self.name()),
        })
    }

    /// Parses a generator set such as `"1,3"`, `"13"`, `"rs"` or `"{}"`.
    pub fn parse_genset(&self, text: &str) -> Result<GenSet> {
        let t = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut out = GenSet::EMPTY;
        if t.is_empty() || t == "-" {
            return Ok(out);
        }
        let pieces: Vec<String> = if t.contains(',') || t.contains(' ') {
            t.split([',', ' ']).filter(|p| !p.is_empty()).map(String::from).collect()
        } else {
            t.chars().map(String::from).collect()
        };
        for p in pieces {
            out.insert(self.generator_index(&p)?);
        }
        Ok(out)
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn validate_matrix(m: &[Vec<u32>]) -> Result<()> {
    let r = m.len();
    if r == 0 || r > 31 {
        return Err(Error::InvalidMatrix(format!("rank {r} out of range 1..=31")));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != r {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        if row[i] != 1 {
            return Err(Error::InvalidMatrix(format!("diagonal entry ({},{}) is not 1", i + 1, i + 1)));
        }
        for j in 0..r {
            if m[i][j] != m[j][i] {
                return Err(Error::InvalidMatrix(format!("not symmetric at ({},{})", i + 1, j + 1)));
            }
            if i != j && m[i][j] == 1 {
                return Err(Error::InvalidMatrix(format!(
                    "off-diagonal entry ({},{}) must be at least 2",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

fn has_cycle(m: &[Vec<u32>]) -> bool {
    let r = m.len();
    let edges = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).filter(|&(i, j)| m[i][j] != 2).count();
    let sys_components = {
        let mut seen = vec![false; r];
        let mut count = 0;
        for start in 0..r {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for w in 0..r {
                    if !seen[w] && v != w && m[v][w] != 2 {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    };
    edges + sys_components > r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_matrix() {
        let a2 = CoxeterSystem::build("A", Some(2)).unwrap();
        assert_eq!(a2.m(0, 1), 3);
        assert_eq!(a2.rank(), 2);
    }

    #[test]
    fn affine_c2_matrix() {
        let c = CoxeterSystem::build("affineC2", None).unwrap();
        let r = c.generator_index("r").unwrap();
        let s = c.generator_index("s").unwrap();
        let t = c.generator_index("t").unwrap();
        assert_eq!(c.m(r, s), 4);
        assert_eq!(c.m(s, t), 4);
        assert_eq!(c.m(r, t), 2);
    }

    #[test]
    fn h3_and_h4_labels_follow_the_diagram() {
        let h3 = CoxeterSystem::build("H3", None).unwrap();
        assert_eq!((h3.m(0, 1), h3.m(1, 2), h3.m(0, 2)), (3, 5, 2));
        let h4 = CoxeterSystem::build("H4", None).unwrap();
        assert_eq!((h4.m(0, 1), h4.m(1, 2), h4.m(2, 3)), (3, 3, 5));
    }

    #[test]
    fn exceptional_diagrams() {
        let e6 = CoxeterSystem::build("E6", None).unwrap();
        assert_eq!(e6.m(2, 5), 3);
        assert_eq!(e6.m(4, 5), 2);
        let e7 = CoxeterSystem::build("E7", None).unwrap();
        assert_eq!(e7.m(2, 6), 3);
        let e8 = CoxeterSystem::build("E8", None).unwrap();
        assert_eq!(e8.m(4, 7), 3);
        assert_eq!(e8.m(6, 7), 2);
        let f4 = CoxeterSystem::build("F4", None).unwrap();
        assert_eq!(f4.m(1, 2), 4);
        let d5 = CoxeterSystem::build("D", Some(5)).unwrap();
        assert_eq!(d5.m(2, 4), 3);
        assert_eq!(d5.m(3, 4), 2);
        assert_eq!(d5.m(2, 3), 3);
    }

    #[test]
    fn leaves_and_components() {
        let d4 = CoxeterSystem::build("D", Some(4)).unwrap();
        assert_eq!(d4.leaves(), GenSet::from_labels([1, 3, 4]));
        let a5 = CoxeterSystem::build("A", Some(5)).unwrap();
        assert_eq!(a5.components(GenSet::from_labels([1, 2, 4])).len(), 2);
        assert!(a5.totally_disconnected(GenSet::from_labels([1]), GenSet::from_labels([3, 4])));
        assert!(!a5.totally_disconnected(GenSet::from_labels([1]), GenSet::from_labels([2])));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CoxeterSystem::build("Q", Some(3)).is_err());
        assert!(CoxeterSystem::build("A", Some(0)).is_err());
        assert!(CoxeterSystem::build("D", Some(2)).is_err());
        assert!(CoxeterSystem::from_matrix("bad", vec![vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterSystem::from_matrix("bad", vec![vec![1, 7, 2], vec![7, 1, 3], vec![2, 3, 1]]).is_err());
    }

    #[test]
    fn parse_generator_sets() {
        let c = CoxeterSystem::build("affineC2", None).unwrap();
        assert_eq!(c.parse_genset("rs").unwrap(), GenSet::from_indices([0, 1]));
        let a = CoxeterSystem::build("A", Some(4)).unwrap();
        assert_eq!(a.parse_genset("1,3").unwrap(), GenSet::from_labels([1, 3]));
        assert_eq!(a.parse_genset("{}").unwrap(), GenSet::EMPTY);
    }

    #[test]
    fn degrees_multiply_to_order() {
        for (t, r) in [("A", Some(4)), ("B", Some(3)), ("D", Some(4)), ("E6", None), ("F4", None), ("H4", None), ("G2", None)] {
            let s = CoxeterSystem::build(t, r).unwrap();
            let p: u128 = s.degrees().unwrap().iter().map(|&d| d as u128).product();
            assert_eq!(Some(p), s.classical_order(), "{t}");
        }
    }
}
