//! Homogeneous cellular bases `ψ_st`, `ψ′_st`, their sign-symmetrizations
//! `Ψ±_st`, independence checks, trace forms and Gram matrices.

use crate::combinat::{
    blocks, codeg, deg, graded_dim, partitions, perms_of, plus_tableaux, standard_tableaux, AlgebraKind, BlockGamma,
    LaurentPoly, Partition, Perm, Quantum, StdTableau,
};
use crate::error::{Error, Result};
use crate::klrgen::{Flavor, KlrGenerators, Token, Word};
use crate::linalg::{determinant, Echelon};
use crate::seminormal::{AlgebraElement, SeminormalModel};
use crate::specialize::{Fe, SpecElement, SpecializedGenerators};
use rayon::prelude::*;
use serde::Serialize;
use std::cmp::Reverse;
use std::sync::Arc;

/// Label of a homogeneous basis element.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CellularIndex {
    pub lambda: Partition,
    pub s: StdTableau,
    pub t: StdTableau,
    pub primed: bool,
    pub degree: i64,
    pub z2degree: u8,
}

/// Sign of a `Ψ` combination: `+` is even, `−` is odd.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    fn z2(self) -> u8 {
        match self {
            Parity::Plus => 0,
            Parity::Minus => 1,
        }
    }

    fn sign(self) -> i64 {
        match self {
            Parity::Plus => 1,
            Parity::Minus => -1,
        }
    }
}

fn finite_e(e: Quantum) -> Result<u32> {
    let k = e.require_finite()?;
    if k < 3 {
        return Err(Error::Domain(format!("graded bases need e ≥ 3, got {k}")));
    }
    Ok(k)
}

/// Positions `m` of the factors `y_m` in `y_λ` (columns of `t^λ` divisible
/// by `e`) or in `y′_λ` (rows of `t_λ` divisible by `e`).
pub fn y_word(lambda: &Partition, e: Quantum, primed: bool) -> Result<Vec<usize>> {
    let k = finite_e(e)? as usize;
    let out = if primed {
        let t = StdTableau::col_tableau(lambda);
        (1..=t.n()).filter(|&m| t.row_of(m).is_multiple_of(k)).collect()
    } else {
        let t = StdTableau::row_tableau(lambda);
        (1..=t.n()).filter(|&m| t.col_of(m).is_multiple_of(k)).collect()
    };
    Ok(out)
}

fn same_shape(s: &StdTableau, t: &StdTableau) -> Result<Partition> {
    let lambda = s.shape();
    if t.shape() != lambda {
        return Err(Error::SizeMismatch(format!("tableaux {s} and {t} have different shapes")));
    }
    Ok(lambda)
}

/// `ψ_st = ψ_{d(s)} y_λ e(i^λ) ψ_{d(t)}^*`, or the primed analogue built
/// from `t_λ`, `d′` and `y′_λ`.
pub fn cellular_element(s: &StdTableau, t: &StdTableau, e: Quantum, primed: bool) -> Result<(Word, CellularIndex)> {
    let lambda = same_shape(s, t)?;
    let (ps, pt) = (perms_of(s), perms_of(t));
    let (ws, wt, base) = if primed {
        (ps.word_prime, pt.word_prime, StdTableau::col_tableau(&lambda))
    } else {
        (ps.word, pt.word, StdTableau::row_tableau(&lambda))
    };
    let mut word = Word::default();
    for r in ws {
        word.push(Token::Psi(r));
    }
    for m in y_word(&lambda, e, primed)? {
        word.push(Token::Y(m));
    }
    word.push(Token::E(base.residues(e)));
    for r in wt.into_iter().rev() {
        word.push(Token::Psi(r));
    }
    let degree = if primed { codeg(s, e) + codeg(t, e) } else { deg(s, e) + deg(t, e) };
    let index = CellularIndex { lambda, s: s.clone(), t: t.clone(), primed, degree, z2degree: 0 };
    Ok((word, index))
}

/// `(−1)^{ℓ(d(s)) + ℓ(d(t)) + deg t^λ}`, relating `ψ_st^sgn` to `ψ′_{s′t′}`.
pub fn sgn_sign(s: &StdTableau, t: &StdTableau, e: Quantum) -> Result<i64> {
    let lambda = same_shape(s, t)?;
    finite_e(e)?;
    let exp = perms_of(s).d.length() as i64 + perms_of(t).d.length() as i64 + deg(&StdTableau::row_tableau(&lambda), e);
    Ok(if exp % 2 == 0 { 1 } else { -1 })
}

/// `Ψ±_st = ψ_st ± sgn_sign(s, t)·ψ′_{s′t′}` as a signed sum of words.
#[derive(Clone, Debug)]
pub struct PsiCombination {
    pub index: CellularIndex,
    pub parity: Parity,
    pub terms: Vec<(i64, Word)>,
}

pub fn psi_pm(s: &StdTableau, t: &StdTableau, e: Quantum, parity: Parity) -> Result<PsiCombination> {
    let (w, mut index) = cellular_element(s, t, e, false)?;
    let (w2, _) = cellular_element(&s.conjugate(), &t.conjugate(), e, true)?;
    index.z2degree = parity.z2();
    let c = parity.sign() * sgn_sign(s, t, e)?;
    Ok(PsiCombination { index, parity, terms: vec![(1, w), (c, w2)] })
}

/// All `ψ_st` (or `ψ′_st`) indices for `n`, by partition then tableau order.
pub fn cellular_indices(n: usize, e: Quantum, primed: bool) -> Result<Vec<CellularIndex>> {
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for s in &tabs {
            for t in &tabs {
                out.push(cellular_element(s, t, e, primed)?.1);
            }
        }
    }
    Ok(out)
}

/// Indices of `Ψ±_st` with `s ∈ Std₊(λ)` and `t ∈ Std(λ)`.
pub fn psi_indices(n: usize, e: Quantum, parity: Parity) -> Result<Vec<CellularIndex>> {
    let mut out = Vec::new();
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for s in plus_tableaux(&lambda) {
            for t in &tabs {
                out.push(psi_pm(&s, t, e, parity)?.index);
            }
        }
    }
    Ok(out)
}

/// `Σ q^{degree}` over a list of indices.
pub fn index_qdim(indices: &[CellularIndex]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for x in indices {
        p.add_term(x.degree, 1);
    }
    p
}

/// `Θ(ψ_st)` in the seminormal model, using the combined generators.
pub fn theta_cellular(g: &KlrGenerators, s: &StdTableau, t: &StdTableau, primed: bool) -> Result<AlgebraElement> {
    let (w, _) = cellular_element(s, t, g.e(), primed)?;
    g.word_image(&w, Flavor::Circ)
}

/// `Θ(Ψ±_st) = Θ(ψ_st) ± Θ(ψ_st)^#`.
pub fn theta_psi(g: &KlrGenerators, s: &StdTableau, t: &StdTableau, parity: Parity) -> Result<AlgebraElement> {
    let x = theta_cellular(g, s, t, false)?;
    let h = g.model().hash(&x);
    Ok(match parity {
        Parity::Plus => x + h,
        Parity::Minus => x - h,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    pub n: usize,
    pub e: Quantum,
    pub rank_all: usize,
    pub rank_plus: usize,
    pub expected_all: usize,
    pub expected_plus: usize,
}

impl IndependenceReport {
    pub fn passed(&self) -> bool {
        self.rank_all == self.expected_all && self.rank_plus == self.expected_plus
    }
}

/// Ranks of the flattened images of `{Ψ±_st}` and of `{Ψ⁺_st}` over the generic field.
pub fn independence_check(n: usize, e: Quantum) -> Result<IndependenceReport> {
    finite_e(e)?;
    if n < 2 {
        return Err(Error::Domain("independence check needs n ≥ 2".into()));
    }
    let g = KlrGenerators::new(Arc::new(SeminormalModel::alternating(n, e)))?;
    independence_check_with(&g)
}

pub fn independence_check_with(g: &KlrGenerators) -> Result<IndependenceReport> {
    let n = g.n();
    let mut pairs = Vec::new();
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for s in plus_tableaux(&lambda) {
            for t in &tabs {
                pairs.push((s.clone(), t.clone()));
            }
        }
    }
    let images = pairs
        .par_iter()
        .map(|(s, t)| {
            let x = theta_cellular(g, s, t, false)?;
            let h = g.model().hash(&x);
            Ok((x.add_ref(&h), x.sub_ref(&h)))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut ech = Echelon::new();
    for (p, _) in &images {
        ech.insert(p.flatten());
    }
    let rank_plus = ech.rank();
    for (_, m) in &images {
        ech.insert(m.flatten());
    }
    let fact: usize = (1..=n).product();
    Ok(IndependenceReport { n, e: g.e(), rank_all: ech.rank(), rank_plus, expected_all: fact, expected_plus: fact / 2 })
}

/// Ranks of the specialized images of `{Ψ±_st}` and `{Ψ⁺_st}` over the target of `sg`.
pub fn specialized_independence(sg: &SpecializedGenerators) -> Result<IndependenceReport> {
    let n = sg.n();
    let e = Quantum::new(sg.target().e())?;
    let tgt = sg.target();
    let mut pairs = Vec::new();
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for s in plus_tableaux(&lambda) {
            for t in &tabs {
                pairs.push((s.clone(), t.clone()));
            }
        }
    }
    let images = pairs
        .par_iter()
        .map(|(s, t)| {
            let x = sg.word_image(&cellular_element(s, t, e, false)?.0)?;
            let h = x.hash(tgt);
            Ok((x.add(&h), x.sub(&h)))
        })
        .collect::<Result<Vec<_>>>()?;
    let perms = crate::combinat::all_perms(n);
    let mut ech = Echelon::new();
    for (p, _) in &images {
        ech.insert(p.to_vec(&perms, tgt));
    }
    let rank_plus = ech.rank();
    for (_, m) in &images {
        ech.insert(m.to_vec(&perms, tgt));
    }
    let fact: usize = (1..=n).product();
    Ok(IndependenceReport { n, e, rank_all: ech.rank(), rank_plus, expected_all: fact, expected_plus: fact / 2 })
}

/// Coefficient of `T_1`.
pub fn tau(x: &SpecElement, sg: &SpecializedGenerators) -> Fe {
    x.coeff(&Perm::identity(sg.n())).cloned().unwrap_or_else(|| sg.target().zero())
}

/// `τ_γ(h) = ½(τ(f_γ h) + τ(f_γ h^#))`, a sign-invariant trace on the block.
pub fn tau_gamma(x: &SpecElement, gamma: &BlockGamma, sg: &SpecializedGenerators) -> Fe {
    let tgt = sg.target();
    let f = sg
        .realizable()
        .iter()
        .filter(|i| gamma.contains(i))
        .fold(SpecElement::zero(sg.n()), |acc, i| acc.add(&sg.f(i)));
    let y = sg.mul(&f, x);
    let sum = tau(&y, sg).add(&tau(&y.hash(tgt), sg));
    let half = Fe::from_int(tgt.field(), 2).inv().expect("characteristic is not 2");
    sum.mul(&half)
}

/// Gram matrix of the trace pairing on `R(A_n)_γ`.
///
/// Rows are `Ψ⁺_st` with `s ∈ Std₊`, `res(s) ∈ γ`, in decreasing pair
/// dominance. Column `j` is `Ψ⁺_uv` with `(u, v)` the conjugate of row `j`,
/// so the matched pairs lie on the diagonal. The entry in row `(s,t)` and
/// column `(u,v)` is `τ_γ(Θ(Ψ⁺_st)Θ(Ψ⁺_vu))`, set to zero unless the degrees
/// add up to `2·defect(γ)`.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub gamma: BlockGamma,
    pub defect: i64,
    pub target: String,
    pub rows: Vec<CellularIndex>,
    pub cols: Vec<CellularIndex>,
    pub entries: Vec<Vec<Fe>>,
    /// Nonzero trace values removed by the degree truncation.
    pub truncated: usize,
}

fn dominance_key(t: &StdTableau) -> Vec<Vec<usize>> {
    (1..=t.n()).map(|m| t.restrict(m).shape().parts().to_vec()).collect()
}

/// Componentwise tableau dominance `(a, b) ⊵ (s, t)`.
pub fn pair_dominates(a: (&StdTableau, &StdTableau), b: (&StdTableau, &StdTableau)) -> bool {
    a.0.dominates(b.0) && a.1.dominates(b.1)
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn diagonal_nonzero(&self) -> bool {
        (0..self.dim()).all(|k| !self.entries[k][k].is_zero())
    }

    /// Nonzero entries at `(row (s,t), col (u,v))` with `(u′,v′) ⋭ (s,t)`.
    pub fn zero_pattern_violations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, r) in self.rows.iter().enumerate() {
            for (b, c) in self.cols.iter().enumerate() {
                let (u, v) = (c.s.conjugate(), c.t.conjugate());
                if !self.entries[a][b].is_zero() && !pair_dominates((&u, &v), (&r.s, &r.t)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn determinant(&self) -> Option<Fe> {
        let first = self.entries.first()?.first()?;
        Some(determinant(&self.entries, Fe::one(first.field())))
    }

    pub fn is_nonsingular(&self) -> bool {
        self.determinant().is_none_or(|d| !d.is_zero())
    }

    fn label(x: &CellularIndex) -> String {
        format!("({}|{})", x.s, x.t)
    }

    /// CSV with `#` header lines describing the ordering.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = format!(
            "# block {} defect {} over {}\n# rows: Psi+(s|t), s in Std+, decreasing pair dominance\n# column j: Psi+(u|v) with (u,v) the conjugate of row j\n",
            self.gamma, self.defect, self.target
        );
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["row".to_string()];
        header.extend(self.cols.iter().map(Self::label));
        w.write_record(&header).map_err(csv_err)?;
        for (r, row) in self.rows.iter().zip(&self.entries) {
            let mut rec = vec![Self::label(r)];
            rec.extend(row.iter().map(|x| x.to_string()));
            w.write_record(&rec).map_err(csv_err)?;
        }
        out.push_str(&String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).expect("csv output is UTF-8"));
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "block": self.gamma.to_string(),
            "defect": self.defect,
            "target": self.target,
            "ordering": "rows by decreasing pair dominance; column j is the conjugate of row j",
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "truncated": self.truncated,
            "diagonal_nonzero": self.diagonal_nonzero(),
            "zero_pattern_violations": self.zero_pattern_violations(),
            "determinant": self.determinant().map(|d| d.to_string()),
        })
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

/// Gram matrix of `R(A_n)_γ` over the target of `sg` (combined flavor).
pub fn gram_matrix(gamma: &BlockGamma, sg: &SpecializedGenerators) -> Result<GramMatrix> {
    let n = sg.n();
    let e = Quantum::new(sg.target().e())?;
    let mut rows = Vec::new();
    for lambda in partitions(n) {
        let tabs = standard_tableaux(&lambda);
        for s in plus_tableaux(&lambda).into_iter().filter(|s| gamma.contains(&s.residues(e))) {
            for t in &tabs {
                rows.push((s.clone(), t.clone()));
            }
        }
    }
    rows.sort_by_key(|(s, t)| Reverse((dominance_key(s), dominance_key(t))));
    let cols: Vec<(StdTableau, StdTableau)> = rows.iter().map(|(s, t)| (s.conjugate(), t.conjugate())).collect();
    let tgt = sg.target();
    let image = |s: &StdTableau, t: &StdTableau| -> Result<SpecElement> {
        let (w, _) = cellular_element(s, t, e, false)?;
        let x = sg.word_image(&w)?;
        Ok(x.add(&x.hash(tgt)))
    };
    let left = rows.par_iter().map(|(s, t)| image(s, t)).collect::<Result<Vec<_>>>()?;
    // Θ(Ψ⁺_vu) for column (u, v).
    let right = cols.par_iter().map(|(u, v)| image(v, u)).collect::<Result<Vec<_>>>()?;
    let index = |(s, t): &(StdTableau, StdTableau)| psi_pm(s, t, e, Parity::Plus).map(|c| c.index);
    let row_idx = rows.iter().map(index).collect::<Result<Vec<_>>>()?;
    let col_idx = cols.iter().map(index).collect::<Result<Vec<_>>>()?;
    let defect = gamma.defect();
    let cells: Vec<(Fe, bool)> = (0..rows.len() * cols.len())
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / cols.len(), k % cols.len());
            let value = tau_gamma(&sg.mul(&left[a], &right[b]), gamma, sg);
            if row_idx[a].degree + col_idx[b].degree == 2 * defect {
                (value, false)
            } else {
                let dropped = !value.is_zero();
                (tgt.zero(), dropped)
            }
        })
        .collect();
    let truncated = cells.iter().filter(|c| c.1).count();
    let entries = cells.chunks(cols.len().max(1)).map(|r| r.iter().map(|c| c.0.clone()).collect()).collect();
    Ok(GramMatrix {
        gamma: gamma.clone(),
        defect,
        target: tgt.descriptor().to_string(),
        rows: row_idx,
        cols: col_idx,
        entries,
        truncated,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub gamma: BlockGamma,
    pub defect: i64,
    pub size: usize,
    pub partitions: Vec<Partition>,
    pub qdim_s: LaurentPoly,
    pub qdim_a: LaurentPoly,
    pub classifier: &'static str,
}

/// One row per block `γ` of `R(S_n)`.
pub fn block_report(n: usize, e: Quantum) -> Result<Vec<BlockReport>> {
    finite_e(e)?;
    Ok(blocks(n, e)
        .into_iter()
        .map(|gamma| {
            let parts = partitions(n)
                .into_iter()
                .filter(|l| gamma.contains(&StdTableau::row_tableau(l).residues(e)))
                .collect();
            let defect = gamma.defect();
            let size = gamma.size();
            let classifier = if size == 1 && defect == 0 { "splits into two matrix algebras" } else { "indecomposable" };
            BlockReport {
                qdim_s: graded_dim(n, e, AlgebraKind::S, Some(&gamma)),
                qdim_a: graded_dim(n, e, AlgebraKind::A, Some(&gamma)),
                gamma,
                defect,
                size,
                partitions: parts,
                classifier,
            }
        })
        .collect())
}

#[derive(Serialize)]
struct BasisRow {
    lambda: String,
    s: String,
    t: String,
    primed: bool,
    degree: i64,
    z2degree: u8,
}

/// Basis table with columns `lambda,s,t,primed,degree,z2degree`, in the given order.
pub fn basis_table_csv(indices: &[CellularIndex]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for x in indices {
        w.serialize(BasisRow {
            lambda: x.lambda.to_string(),
            s: x.s.to_string(),
            t: x.t.to_string(),
            primed: x.primed,
            degree: x.degree,
            z2degree: x.z2degree,
        })
        .map_err(csv_err)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| Error::Io(e.to_string()))?).expect("csv output is UTF-8"))
}
