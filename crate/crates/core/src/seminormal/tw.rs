use super::{AlgebraElement, SeminormalModel};
use crate::combinat::{all_perms, partitions, Perm};
use crate::error::{Error, Result};
use crate::exactfield::{BaseScalar, ExtScalar, RawBase};
use crate::linalg;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// Linear combination of `T_w`, `w ∈ S_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwElement {
    n: usize,
    coeffs: BTreeMap<Perm, ExtScalar>,
}

impl TwElement {
    pub fn zero(n: usize) -> Self {
        TwElement { n, coeffs: BTreeMap::new() }
    }

    pub fn basis(w: Perm) -> Self {
        let n = w.n();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w, ExtScalar::one());
        TwElement { n, coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, w: Perm, c: ExtScalar) {
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    pub fn coeff(&self, w: &Perm) -> ExtScalar {
        self.coeffs.get(w).cloned().unwrap_or_else(ExtScalar::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Perm, ExtScalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl fmt::Display for TwElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(w, c)| format!("({c})·T[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Matrices of all `T_w` and the trace weights `τ = Σ_λ w_λ tr_λ`.
pub(super) struct TwData {
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    matrices: Vec<AlgebraElement>,
    weights: Vec<ExtScalar>,
}

/// Coxeter element of the Young subgroup for the composition `mu`.
fn coxeter_element(n: usize, mu: &[usize]) -> Perm {
    let mut word = Vec::new();
    let mut start = 1;
    for &m in mu {
        word.extend(start..start + m - 1);
        start += m;
    }
    Perm::from_word(n, &word)
}

impl SeminormalModel {
    fn tw_data(&self) -> Result<&TwData> {
        if let Some(d) = self.tw_data.get() {
            return Ok(d);
        }
        let d = self.build_tw_data()?;
        Ok(self.tw_data.get_or_init(|| d))
    }

    fn build_tw_data(&self) -> Result<TwData> {
        let n = self.n;
        let mut perms = all_perms(n);
        perms.sort_by_key(|w| (w.length(), w.clone()));
        let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(k, w)| (w, k)).collect();
        let mut matrices: Vec<AlgebraElement> = Vec::with_capacity(perms.len());
        for w in &perms {
            if w.is_identity() {
                matrices.push(self.identity());
                continue;
            }
            let r = (1..n).find(|&r| !w.right_ascent(r)).unwrap();
            let shorter = &matrices[index[&w.mul_simple_right(r)]];
            matrices.push(shorter.mul_ref(self.t(r)));
        }
        let weights = match self.load_weights() {
            Some(w) => w,
            None => {
                let w = self.solve_weights(&index, &matrices)?;
                self.store_weights(&w);
                w
            }
        };
        Ok(TwData { perms, index, matrices, weights })
    }

    fn solve_weights(&self, index: &HashMap<Perm, usize>, matrices: &[AlgebraElement]) -> Result<Vec<ExtScalar>> {
        let n = self.n;
        let classes = partitions(n);
        let rows: Vec<Vec<ExtScalar>> = classes
            .iter()
            .map(|mu| {
                let w = coxeter_element(n, mu.parts());
                matrices[index[&w]].blocks().iter().map(|b| b.trace()).collect()
            })
            .collect();
        let rhs: Vec<ExtScalar> =
            classes.iter().map(|mu| if mu.parts().iter().all(|&p| p == 1) { ExtScalar::one() } else { ExtScalar::zero() }).collect();
        linalg::solve(&rows, &rhs).ok_or_else(|| Error::Domain("singular character matrix".into()))
    }

    fn cache_file(&self) -> Option<std::path::PathBuf> {
        let dir = self.cache_dir.as_ref()?;
        let sys: String = self.system.name().chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
        Some(dir.join(format!("trace-weights-n{}-e{}-{}-v1.json", self.n, self.e, sys)))
    }

    fn load_weights(&self) -> Option<Vec<ExtScalar>> {
        let text = std::fs::read_to_string(self.cache_file()?).ok()?;
        let raw: Vec<RawBase> = serde_json::from_str(&text).ok()?;
        let w: Option<Vec<ExtScalar>> = raw.iter().map(|r| BaseScalar::from_raw(r).map(ExtScalar::from_base)).collect();
        w.filter(|w| w.len() == self.blocks.len())
    }

    fn store_weights(&self, w: &[ExtScalar]) {
        let Some(path) = self.cache_file() else { return };
        let raw: Option<Vec<RawBase>> = w.iter().map(|x| x.as_base().map(|b| b.to_raw())).collect();
        if let (Some(raw), Some(dir)) = (raw, path.parent()) {
            let _ = std::fs::create_dir_all(dir);
            if let Ok(text) = serde_json::to_string(&raw) {
                let _ = std::fs::write(&path, text);
            }
        }
    }

    /// Trace weights `w_λ` with `τ(h) = Σ_λ w_λ tr B_λ(h)`.
    pub fn trace_weights(&self) -> Result<&[ExtScalar]> {
        Ok(&self.tw_data()?.weights)
    }

    /// Matrix of `T_w`.
    pub fn tw_matrix(&self, w: &Perm) -> Result<&AlgebraElement> {
        let d = self.tw_data()?;
        let k = d.index.get(w).ok_or_else(|| Error::Domain(format!("{w} is not in S_{}", self.n)))?;
        Ok(&d.matrices[*k])
    }

    /// Symmetrizing trace: coefficient of `T_1`.
    pub fn tau(&self, h: &AlgebraElement) -> Result<ExtScalar> {
        let w = self.trace_weights()?;
        Ok(h.blocks().iter().zip(w).fold(ExtScalar::zero(), |acc, (b, x)| {
            let tr = b.trace();
            if tr.is_zero() {
                acc
            } else {
                acc + tr * x.clone()
            }
        }))
    }

    /// Expand `h` in the `T_w` basis using `τ(T_w T_{v^{-1}}) = δ_{wv} t^{ℓ(w)}`.
    pub fn to_tw(&self, h: &AlgebraElement) -> Result<TwElement> {
        let d = self.tw_data()?;
        let coeffs: Vec<(Perm, ExtScalar)> = d
            .perms
            .par_iter()
            .map(|w| {
                let winv = &d.matrices[d.index[&w.inverse()]];
                let tr = h
                    .blocks()
                    .iter()
                    .zip(winv.blocks())
                    .zip(&d.weights)
                    .fold(ExtScalar::zero(), |acc, ((a, b), x)| {
                        let t = a.trace_product(b);
                        if t.is_zero() {
                            acc
                        } else {
                            acc + t * x.clone()
                        }
                    });
                (w.clone(), tr * ExtScalar::t_pow(-(w.length() as i64)))
            })
            .collect();
        let mut out = TwElement::zero(self.n);
        for (w, c) in coeffs {
            out.insert(w, c);
        }
        Ok(out)
    }

    pub fn from_tw(&self, x: &TwElement) -> Result<AlgebraElement> {
        let mut acc = self.zero();
        for (w, c) in x.coeffs() {
            acc = acc + self.tw_matrix(w)?.scale(c);
        }
        Ok(acc)
    }
}
