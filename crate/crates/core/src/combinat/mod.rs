//! Partitions, standard tableaux, residues, degrees and blocks.

mod partition;
mod perm;
mod residue;
mod tableau;

pub use partition::{conjugate, dominates, is_e_restricted, partitions, Partition};
pub use perm::{all_perms, Perm};
pub use residue::{Quantum, ResidueClass, ResidueSeq};
pub use tableau::{standard_tableaux, StdTableau};

use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

pub fn residue_sequence(t: &StdTableau, e: Quantum) -> ResidueSeq {
    t.residues(e)
}

/// Addable minus removable `i`-nodes of `λ` strictly below (`below = true`) or above row `row`.
fn node_balance(lambda: &Partition, row: usize, i: i64, e: Quantum, below: bool) -> i64 {
    let side = |r: usize| if below { r > row } else { r < row };
    let res = |(r, c): (usize, usize)| e.reduce(c as i64 - r as i64);
    let add = lambda.addable().into_iter().filter(|&b| side(b.0) && res(b) == i).count() as i64;
    let rem = lambda.removable().into_iter().filter(|&b| side(b.0) && res(b) == i).count() as i64;
    add - rem
}

/// Brundan–Kleshchev–Wang degree and codegree, with base value 0 on the empty tableau.
pub fn degrees(t: &StdTableau, e: Quantum) -> (i64, i64) {
    let mut deg = 0;
    let mut codeg = 0;
    for m in 1..=t.n() {
        let lambda = t.restrict(m).shape();
        let (row, col) = t.position(m);
        let i = e.reduce(col as i64 - row as i64);
        deg += node_balance(&lambda, row, i, e, true);
        codeg += node_balance(&lambda, row, i, e, false);
    }
    (deg, codeg)
}

pub fn deg(t: &StdTableau, e: Quantum) -> i64 {
    degrees(t, e).0
}

pub fn codeg(t: &StdTableau, e: Quantum) -> i64 {
    degrees(t, e).1
}

/// Residue multiplicities `α = Σ m_i α_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct BlockAlpha {
    e: Quantum,
    mult: BTreeMap<i64, u32>,
}

impl BlockAlpha {
    pub fn of(i: &ResidueSeq) -> Self {
        let mut mult = BTreeMap::new();
        for &c in i.entries() {
            *mult.entry(c).or_insert(0) += 1;
        }
        BlockAlpha { e: i.e(), mult }
    }

    pub fn e(&self) -> Quantum {
        self.e
    }

    pub fn mult(&self, i: i64) -> u32 {
        self.mult.get(&self.e.reduce(i)).copied().unwrap_or(0)
    }

    pub fn height(&self) -> u32 {
        self.mult.values().sum()
    }

    /// `α′` with `m′_i = m_{−i}`.
    pub fn conjugate(&self) -> BlockAlpha {
        let mult = self.mult.iter().map(|(&i, &m)| (self.e.reduce(-i), m)).collect();
        BlockAlpha { e: self.e, mult }
    }

    /// `(Λ_0, α) − ½(α, α) = m_0 − Σ m_i² + Σ m_i m_{i+1}`.
    pub fn defect(&self) -> i64 {
        let m0 = self.mult(0) as i64;
        let sq: i64 = self.mult.values().map(|&m| (m as i64) * (m as i64)).sum();
        let adj: i64 = self.mult.iter().map(|(&i, &m)| m as i64 * self.mult(i + 1) as i64).sum();
        m0 - sq + adj
    }

    /// Multiplicity vector `(m_0, …, m_{e−1})` for finite `e`.
    pub fn vector(&self) -> Vec<u32> {
        match self.e {
            Quantum::Finite(e) => (0..e as i64).map(|i| self.mult(i)).collect(),
            Quantum::Infinite => self.mult.values().copied().collect(),
        }
    }

    pub fn contains(&self, i: &ResidueSeq) -> bool {
        &BlockAlpha::of(i) == self
    }
}

impl fmt::Display for BlockAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            Quantum::Finite(_) => {
                let v: Vec<String> = self.vector().iter().map(|m| m.to_string()).collect();
                write!(f, "[{}]", v.join(","))
            }
            Quantum::Infinite => {
                let v: Vec<String> = self.mult.iter().map(|(i, m)| format!("{i}:{m}")).collect();
                write!(f, "{{{}}}", v.join(","))
            }
        }
    }
}

impl Serialize for BlockAlpha {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.e {
            Quantum::Finite(_) => self.vector().serialize(s),
            Quantum::Infinite => self.mult.serialize(s),
        }
    }
}

/// Unordered pair `γ = {α, α′}`, stored with the smaller element first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct BlockGamma {
    pub first: BlockAlpha,
    pub second: BlockAlpha,
}

impl BlockGamma {
    pub fn of_alpha(a: &BlockAlpha) -> Self {
        let b = a.conjugate();
        if *a <= b {
            BlockGamma { first: a.clone(), second: b }
        } else {
            BlockGamma { first: b, second: a.clone() }
        }
    }

    pub fn of(i: &ResidueSeq) -> Self {
        Self::of_alpha(&BlockAlpha::of(i))
    }

    /// `|γ|`: 1 when `α = α′`, else 2.
    pub fn size(&self) -> usize {
        if self.first == self.second {
            1
        } else {
            2
        }
    }

    pub fn contains(&self, i: &ResidueSeq) -> bool {
        let a = BlockAlpha::of(i);
        a == self.first || a == self.second
    }

    pub fn defect(&self) -> i64 {
        self.first.defect()
    }
}

impl fmt::Display for BlockGamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.size() == 1 {
            write!(f, "{{{}}}", self.first)
        } else {
            write!(f, "{{{},{}}}", self.first, self.second)
        }
    }
}

/// Block data of a residue sequence.
#[derive(Clone, Debug, Serialize)]
pub struct BlockData {
    pub alpha: BlockAlpha,
    pub alpha_conj: BlockAlpha,
    pub gamma: BlockGamma,
    pub defect: i64,
}

pub fn block_data(i: &ResidueSeq) -> BlockData {
    let alpha = BlockAlpha::of(i);
    BlockData {
        alpha_conj: alpha.conjugate(),
        gamma: BlockGamma::of_alpha(&alpha),
        defect: alpha.defect(),
        alpha,
    }
}

/// Laurent polynomial in `q` with nonnegative integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, u64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exp: i64, c: u64) {
        if c == 0 {
            return;
        }
        *self.coeffs.entry(exp).or_insert(0) += c;
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, u64> {
        &self.coeffs
    }

    pub fn from_pairs(pairs: &[(i64, u64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, &c) in &o.coeffs {
            p.add_term(e, c);
        }
        p
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&e, &c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (e, 1) => format!("q^{e}"),
                (1, c) => format!("{c}q"),
                (e, c) => format!("{c}q^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, u64> = self.coeffs.iter().map(|(e, c)| (e.to_string(), *c)).collect();
        m.serialize(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum AlgebraKind {
    S,
    A,
}

impl AlgebraKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(AlgebraKind::S),
            "A" | "a" => Ok(AlgebraKind::A),
            _ => Err(Error::Domain(format!("algebra must be S or A, got `{s}`"))),
        }
    }
}

/// Graded dimension of `R(S_n)` or `R(A_n)`, optionally restricted to one block.
///
/// For `A` with `n ≤ 1` the sign automorphism acts trivially and the answer is `1`.
pub fn graded_dim(n: usize, e: Quantum, algebra: AlgebraKind, gamma: Option<&BlockGamma>) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    if algebra == AlgebraKind::A && n <= 1 {
        p.add_term(0, 1);
        return p;
    }
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        let degs: Vec<i64> = tabs.iter().map(|t| deg(t, e)).collect();
        for (s, ds) in tabs.iter().zip(&degs) {
            if algebra == AlgebraKind::A && !s.is_plus() {
                continue;
            }
            if let Some(g) = gamma {
                if !g.contains(&s.residues(e)) {
                    continue;
                }
            }
            for dt in &degs {
                p.add_term(ds + dt, 1);
            }
        }
    }
    p
}

/// Permutations `d(t)`, `d′(t)` with `t = d(t)·t^λ = d′(t)·t_λ`, and their canonical reduced words.
#[derive(Clone, Debug)]
pub struct TableauPerms {
    pub d: Perm,
    pub dprime: Perm,
    pub word: Vec<usize>,
    pub word_prime: Vec<usize>,
}

pub fn perms_of(t: &StdTableau) -> TableauPerms {
    let lambda = t.shape();
    let to_perm = |base: &StdTableau| {
        let mut v = vec![0u8; t.n()];
        for m in 1..=t.n() {
            let (r, c) = base.position(m);
            v[m - 1] = (t.rows()[r][c] - 1) as u8;
        }
        Perm::from_images(v)
    };
    let d = to_perm(&StdTableau::row_tableau(&lambda));
    let dprime = to_perm(&StdTableau::col_tableau(&lambda));
    TableauPerms { word: d.reduced_word(), word_prime: dprime.reduced_word(), d, dprime }
}

/// `Std₊(λ)`: standard tableaux with 2 in the first row.
pub fn plus_tableaux(lambda: &Partition) -> Vec<StdTableau> {
    standard_tableaux(lambda).into_iter().filter(|t| t.is_plus()).collect()
}

/// `(Σ_λ |Std₊(λ)|·|Std(λ)|, n!/2)`; the right side is rounded down for `n < 2`.
pub fn counting_identity(n: usize) -> (u64, u64) {
    let lhs = partitions(n)
        .iter()
        .map(|l| {
            let all = standard_tableaux(l);
            (all.iter().filter(|t| t.is_plus()).count() * all.len()) as u64
        })
        .sum();
    let fact: u64 = (1..=n as u64).product();
    (lhs, fact / 2)
}

/// Tableau-realizable residue sequences of length `n`, sorted.
pub fn realizable_residues(n: usize, e: Quantum) -> Vec<ResidueSeq> {
    let mut v: Vec<ResidueSeq> =
        partitions(n).iter().flat_map(standard_tableaux).map(|t| t.residues(e)).collect();
    v.sort();
    v.dedup();
    v
}

/// Blocks `γ` of `R(S_n)` met by standard tableaux, sorted.
pub fn blocks(n: usize, e: Quantum) -> Vec<BlockGamma> {
    let mut v: Vec<BlockGamma> = realizable_residues(n, e).iter().map(BlockGamma::of).collect();
    v.sort();
    v.dedup();
    v
}
