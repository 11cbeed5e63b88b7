//! Seminormal matrix model of `H(S_n)` over the coefficient tower, with the
//! star and hash involutions, Jucys–Murphy elements, idempotents and the
//! `T_w`-basis converters.

mod coeff;
mod matrix;
mod tw;

pub use coeff::{coefficient_systems, validate_coeff_system, Alternating, CoeffFailure, CoeffReport, CoeffSystem, FlippedSign, HashConjugate, Plain};
pub use matrix::{AlgebraElement, Matrix};
pub use tw::TwElement;

use crate::combinat::{partitions, standard_tableaux, BlockAlpha, BlockGamma, Partition, Quantum, ResidueSeq, StdTableau};
use crate::error::{Error, Result};
use crate::exactfield::{ensure_degree_cap, ExtScalar};
use std::collections::{HashMap, VecDeque};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

/// Tableau data of one partition.
#[derive(Clone, Debug)]
pub struct ShapeBlock {
    pub lambda: Partition,
    pub tableaux: Vec<StdTableau>,
    index: HashMap<StdTableau, usize>,
    /// Position of `λ′` in the partition list.
    pub conj_block: usize,
    /// `conj_index[k]` is the index of `t_k′` inside the block of `λ′`.
    pub conj_index: Vec<usize>,
    pub residues: Vec<ResidueSeq>,
}

impl ShapeBlock {
    pub fn index_of(&self, t: &StdTableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }
}

/// Spanning-tree scalars for one block, with the edges that disagree.
#[derive(Clone, Debug)]
struct TreeScalars {
    values: Vec<ExtScalar>,
    inconsistent: Vec<(usize, usize)>,
}

pub struct SeminormalModel {
    n: usize,
    e: Quantum,
    system: Arc<dyn CoeffSystem>,
    blocks: Vec<ShapeBlock>,
    t_gens: Vec<AlgebraElement>,
    gammas: Vec<TreeScalars>,
    hash_scales: Vec<TreeScalars>,
    hash_generators_ok: bool,
    cache_dir: Option<PathBuf>,
    tw_data: OnceLock<tw::TwData>,
}

impl std::fmt::Debug for SeminormalModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SeminormalModel(n={}, e={}, system={})", self.n, self.e, self.system.name())
    }
}

impl SeminormalModel {
    /// Build the matrices of `T_1, …, T_{n−1}` for a coefficient system.
    pub fn new(n: usize, e: Quantum, system: Arc<dyn CoeffSystem>) -> Self {
        ensure_degree_cap(4 * n.max(1) * e.finite().unwrap_or(8) as usize);
        let parts = partitions(n);
        let pos: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(k, l)| (l, k)).collect();
        let mut blocks: Vec<ShapeBlock> = parts
            .iter()
            .map(|l| {
                let tableaux = standard_tableaux(l);
                let index = tableaux.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
                let residues = tableaux.iter().map(|t| t.residues(e)).collect();
                ShapeBlock { lambda: l.clone(), tableaux, index, conj_block: pos[&l.conjugate()], conj_index: vec![], residues }
            })
            .collect();
        for k in 0..blocks.len() {
            let cb = blocks[k].conj_block;
            let ci = blocks[k].tableaux.iter().map(|t| blocks[cb].index_of(&t.conjugate()).unwrap()).collect();
            blocks[k].conj_index = ci;
        }
        let t_gens = (1..n)
            .map(|r| {
                AlgebraElement::from_blocks(
                    blocks
                        .iter()
                        .map(|b| {
                            let mut m = Matrix::zero(b.dim());
                            for (j, s) in b.tableaux.iter().enumerate() {
                                let rho = s.rho(r);
                                m.set(j, j, -ExtScalar::qint(rho).inv().expect("nonzero axial distance"));
                                if let Some(u) = s.swap(r) {
                                    m.set(b.index_of(&u).unwrap(), j, system.alpha(r, s));
                                }
                            }
                            m
                        })
                        .collect(),
                )
            })
            .collect();
        let mut model = SeminormalModel {
            n,
            e,
            system,
            blocks,
            t_gens,
            gammas: vec![],
            hash_scales: vec![],
            hash_generators_ok: false,
            cache_dir: None,
            tw_data: OnceLock::new(),
        };
        model.gammas = (0..model.blocks.len()).map(|k| model.tree_scalars(k, |r, s, u| {
            let sys = &model.system;
            sys.alpha(r, u).div(&sys.alpha(r, s)).ok()
        })).collect();
        model.hash_scales = (0..model.blocks.len()).map(|k| model.tree_scalars(k, |r, s, _u| {
            let sys = &model.system;
            (-sys.alpha(r, &s.conjugate())).div(&sys.alpha(r, s)).ok()
        })).collect();
        model.hash_generators_ok = (1..n).all(|r| {
            let lhs = model.hash(model.t(r));
            let rhs = model.t(r).neg_ref() + model.scalar(&(ExtScalar::t_pow(1) - ExtScalar::one()));
            lhs == rhs
        });
        model
    }

    /// Model with the alternating coefficient system.
    pub fn alternating(n: usize, e: Quantum) -> Self {
        Self::new(n, e, Arc::new(Alternating))
    }

    /// Directory used to persist trace data between runs.
    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn e(&self) -> Quantum {
        self.e
    }

    pub fn system(&self) -> &Arc<dyn CoeffSystem> {
        &self.system
    }

    pub fn blocks(&self) -> &[ShapeBlock] {
        &self.blocks
    }

    pub fn block_of(&self, lambda: &Partition) -> Option<usize> {
        self.blocks.iter().position(|b| &b.lambda == lambda)
    }

    /// Locate a tableau as `(block, index)`.
    pub fn locate(&self, t: &StdTableau) -> Option<(usize, usize)> {
        let b = self.block_of(&t.shape())?;
        Some((b, self.blocks[b].index_of(t)?))
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim()).collect()
    }

    /// `Σ_λ |Std(λ)|²`.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.dim() * b.dim()).sum()
    }

    /// Whether `hash(T_r) = −T_r + (t−1)` held for every generator at build time.
    pub fn hash_generators_ok(&self) -> bool {
        self.hash_generators_ok
    }

    /// BFS from `t^λ` along standard transpositions with edge ratios `ratio(r, s, s_r·s)`.
    fn tree_scalars(&self, k: usize, ratio: impl Fn(usize, &StdTableau, &StdTableau) -> Option<ExtScalar>) -> TreeScalars {
        let b = &self.blocks[k];
        let d = b.dim();
        let mut values: Vec<Option<ExtScalar>> = vec![None; d];
        let mut inconsistent = Vec::new();
        if d == 0 {
            return TreeScalars { values: vec![], inconsistent };
        }
        values[0] = Some(ExtScalar::one());
        let mut queue = VecDeque::from([0usize]);
        let mut edges = Vec::new();
        while let Some(j) = queue.pop_front() {
            let s = &b.tableaux[j];
            for r in 1..self.n {
                if let Some(u) = s.swap(r) {
                    let ju = b.index_of(&u).unwrap();
                    let step = ratio(r, s, &u);
                    edges.push((j, ju, step.clone()));
                    if values[ju].is_none() {
                        match step {
                            Some(x) => values[ju] = Some(values[j].as_ref().unwrap() * &x),
                            None => inconsistent.push((j, ju)),
                        }
                        queue.push_back(ju);
                    }
                }
            }
        }
        let values: Vec<ExtScalar> = values.into_iter().map(|v| v.unwrap_or_else(ExtScalar::zero)).collect();
        for (j, ju, step) in edges {
            match step {
                Some(x) if values[ju] == &values[j] * &x => {}
                _ => inconsistent.push((j, ju)),
            }
        }
        inconsistent.sort();
        inconsistent.dedup();
        TreeScalars { values, inconsistent }
    }

    /// `γ_t` for every tableau of block `k`, anchored at `γ_{t^λ} = 1`.
    pub fn gamma_scalars(&self, k: usize) -> Result<&[ExtScalar]> {
        let g = &self.gammas[k];
        if let Some(&(a, b)) = g.inconsistent.first() {
            let bl = &self.blocks[k];
            return Err(Error::PathDependence(format!("γ between {} and {}", bl.tableaux[a], bl.tableaux[b])));
        }
        Ok(&g.values)
    }

    /// Scalars `p_s` of the monomial intertwiner for the hash involution.
    pub fn hash_scalars(&self, k: usize) -> Result<&[ExtScalar]> {
        let g = &self.hash_scales[k];
        if let Some(&(a, b)) = g.inconsistent.first() {
            let bl = &self.blocks[k];
            return Err(Error::PathDependence(format!("hash scalar between {} and {}", bl.tableaux[a], bl.tableaux[b])));
        }
        Ok(&g.values)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero_like(&self.dims())
    }

    pub fn identity(&self) -> AlgebraElement {
        AlgebraElement::from_blocks(self.blocks.iter().map(|b| Matrix::identity(b.dim())).collect())
    }

    /// `c · 1`.
    pub fn scalar(&self, c: &ExtScalar) -> AlgebraElement {
        self.diag(|_, _| c.clone())
    }

    /// Diagonal element with entry `f(block, index)` on `F_t`.
    pub fn diag(&self, f: impl Fn(usize, usize) -> ExtScalar) -> AlgebraElement {
        AlgebraElement::from_blocks(
            self.blocks.iter().enumerate().map(|(k, b)| Matrix::diagonal((0..b.dim()).map(|j| f(k, j)).collect())).collect(),
        )
    }

    /// Matrix of `T_r`.
    pub fn t(&self, r: usize) -> &AlgebraElement {
        &self.t_gens[r - 1]
    }

    /// Jucys–Murphy element `L_k`.
    pub fn jm(&self, k: usize) -> AlgebraElement {
        self.diag(|b, j| ExtScalar::qint(self.blocks[b].tableaux[j].content(k)))
    }

    /// `M_r = 1 − L_r + t L_{r+1}`, acting by `t^{c_r(s)}[1−ρ_r(s)]`.
    pub fn m_elem(&self, r: usize) -> AlgebraElement {
        self.diag(|b, j| {
            let s = &self.blocks[b].tableaux[j];
            ExtScalar::t_pow(s.content(r)) * ExtScalar::qint(1 - s.rho(r))
        })
    }

    /// `(1/M_r) f_i`; requires `i_r ≠ i_{r+1} + 1`.
    pub fn inv_m_on(&self, r: usize, i: &ResidueSeq) -> Result<AlgebraElement> {
        if i.arrow_left(r) {
            return Err(Error::Domain(format!("M_{r} is not invertible on f_{i}")));
        }
        Ok(self.diag(|b, j| {
            if &self.blocks[b].residues[j] != i {
                return ExtScalar::zero();
            }
            let s = &self.blocks[b].tableaux[j];
            (ExtScalar::t_pow(s.content(r)) * ExtScalar::qint(1 - s.rho(r))).inv().expect("M_r invertible on f_i")
        }))
    }

    /// Residue idempotent `f_i`.
    pub fn residue_idempotent(&self, i: &ResidueSeq) -> AlgebraElement {
        self.diag(|b, j| if &self.blocks[b].residues[j] == i { ExtScalar::one() } else { ExtScalar::zero() })
    }

    /// `f_α = Σ_{i ∈ I^α} f_i`.
    pub fn f_alpha(&self, alpha: &BlockAlpha) -> AlgebraElement {
        self.diag(|b, j| if alpha.contains(&self.blocks[b].residues[j]) { ExtScalar::one() } else { ExtScalar::zero() })
    }

    /// `f_γ = Σ_{i ∈ I^γ} f_i`.
    pub fn f_gamma(&self, gamma: &BlockGamma) -> AlgebraElement {
        self.diag(|b, j| if gamma.contains(&self.blocks[b].residues[j]) { ExtScalar::one() } else { ExtScalar::zero() })
    }

    /// Residue sequences `i` with `f_i ≠ 0`, sorted.
    pub fn realizable(&self) -> Vec<ResidueSeq> {
        let mut v: Vec<ResidueSeq> = self.blocks.iter().flat_map(|b| b.residues.iter().cloned()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Primitive idempotent `F_t = E_{tt}`.
    pub fn f_tt(&self, t: &StdTableau) -> Result<AlgebraElement> {
        let (b, j) = self.locate(t).ok_or_else(|| Error::Domain(format!("{t} is not a tableau of size {}", self.n)))?;
        Ok(self.diag(|k, l| if k == b && l == j { ExtScalar::one() } else { ExtScalar::zero() }))
    }

    /// Seminormal basis element `f_{st} = γ_t E_{st}`.
    pub fn f_st(&self, s: &StdTableau, t: &StdTableau) -> Result<AlgebraElement> {
        let (b, js) = self.locate(s).ok_or_else(|| Error::Domain(format!("{s} not found")))?;
        let (b2, jt) = self.locate(t).ok_or_else(|| Error::Domain(format!("{t} not found")))?;
        if b != b2 {
            return Err(Error::SizeMismatch(format!("{s} and {t} have different shapes")));
        }
        let mut h = self.zero();
        h.block_mut(b).set(js, jt, self.gamma_scalars(b)?[jt].clone());
        Ok(h)
    }

    /// Anti-involution fixing each `T_r`: blockwise `D^{-1} Bᵀ D` with `D = diag(γ)`.
    pub fn star(&self, h: &AlgebraElement) -> AlgebraElement {
        let blocks = h
            .blocks()
            .iter()
            .enumerate()
            .map(|(k, m)| {
                let g = &self.gammas[k].values;
                let d = m.dim();
                let mut out = Matrix::zero(d);
                for i in 0..d {
                    for j in 0..d {
                        let x = m.get(j, i);
                        if !x.is_zero() {
                            out.set(i, j, x * &g[j] * g[i].inv().expect("γ nonzero"));
                        }
                    }
                }
                out
            })
            .collect();
        AlgebraElement::from_blocks(blocks)
    }

    /// Automorphism with `T_r ↦ −T_r + (t−1)`, by monomial conjugation `λ → λ′`.
    pub fn hash(&self, h: &AlgebraElement) -> AlgebraElement {
        let mut out = self.zero();
        for (k, m) in h.blocks().iter().enumerate() {
            let b = &self.blocks[k];
            let p = &self.hash_scales[k].values;
            let target = out.block_mut(b.conj_block);
            for x in 0..b.dim() {
                for y in 0..b.dim() {
                    let v = m.get(x, y);
                    if !v.is_zero() {
                        let w = if x == y { v.clone() } else { v * &p[x] * p[y].inv().expect("hash scalar nonzero") };
                        target.set(b.conj_index[x], b.conj_index[y], w);
                    }
                }
            }
        }
        out
    }
}
