//! Specialization `t ↦ ξ` of `T_w`-expansions into concrete fields, Hecke
//! arithmetic over the target, and the undeformed KLR relations there.

mod field;
mod target;

pub use field::{is_prime, Fe, FieldSpec, PrimeField};
pub use target::{parse_target, target_families, SpecTarget, TargetFamily};

use crate::combinat::{Perm, ResidueSeq};
use crate::error::{Error, Result};
use crate::klrgen::{Failure, Flavor, KlrGenerators, RelationReport, Token, Word};
use crate::seminormal::{AlgebraElement, SeminormalModel};
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Linear combination of `T_w` over a target field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecElement {
    n: usize,
    coeffs: BTreeMap<Perm, Fe>,
}

impl SpecElement {
    pub fn zero(n: usize) -> Self {
        SpecElement { n, coeffs: BTreeMap::new() }
    }

    pub fn basis(w: Perm, c: Fe) -> Self {
        let mut x = Self::zero(w.n());
        x.insert(w, c);
        x
    }

    pub fn one(n: usize, tgt: &SpecTarget) -> Self {
        Self::basis(Perm::identity(n), tgt.one())
    }

    /// `T_{s_{r_1}} ⋯ T_{s_{r_k}}` written in the word `s_{r_1} ⋯ s_{r_k}`,
    /// which is a single `T_w` when the word is reduced.
    pub fn from_word(n: usize, word: &[usize], tgt: &SpecTarget) -> Self {
        word.iter().fold(Self::one(n, tgt), |x, &r| x.mul_simple(r, tgt))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Perm, Fe> {
        &self.coeffs
    }

    pub fn coeff(&self, w: &Perm) -> Option<&Fe> {
        self.coeffs.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.coeffs.len()
    }

    fn add_term(&mut self, w: Perm, c: Fe) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&w) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.coeffs.remove(&w);
                }
            }
            None => {
                self.coeffs.insert(w, c);
            }
        }
    }

    pub fn insert(&mut self, w: Perm, c: Fe) {
        if c.is_zero() {
            self.coeffs.remove(&w);
        } else {
            self.coeffs.insert(w, c);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut x = self.clone();
        for (w, c) in &o.coeffs {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        SpecElement { n: self.n, coeffs: self.coeffs.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, k: &Fe) -> Self {
        let mut x = Self::zero(self.n);
        for (w, c) in &self.coeffs {
            x.add_term(w.clone(), c.mul(k));
        }
        x
    }

    /// Right multiplication by `T_r`: `T_w T_r = T_{ws_r}` if the length grows,
    /// otherwise `(ξ−1)T_w + ξT_{ws_r}`.
    pub fn mul_simple(&self, r: usize, tgt: &SpecTarget) -> Self {
        let xi = tgt.xi();
        let xi1 = xi.sub(&tgt.one());
        let mut out = Self::zero(self.n);
        for (w, c) in &self.coeffs {
            let ws = w.mul_simple_right(r);
            if w.right_ascent(r) {
                out.add_term(ws, c.clone());
            } else {
                out.add_term(w.clone(), c.mul(&xi1));
                out.add_term(ws, c.mul(xi));
            }
        }
        out
    }

    pub fn mul(&self, o: &Self, tgt: &SpecTarget) -> Self {
        let mut acc = Self::zero(self.n);
        for (v, c) in &o.coeffs {
            let mut x = self.scale(c);
            for r in v.reduced_word() {
                x = x.mul_simple(r, tgt);
            }
            acc = acc.add(&x);
        }
        acc
    }

    pub fn pow(&self, k: u32, tgt: &SpecTarget) -> Self {
        (0..k).fold(Self::one(self.n, tgt), |acc, _| acc.mul(self, tgt))
    }

    /// Image under `T_r ↦ −T_r + (ξ − 1)`.
    pub fn hash(&self, tgt: &SpecTarget) -> Self {
        let xi1 = tgt.xi().sub(&tgt.one());
        let mut acc = Self::zero(self.n);
        for (w, c) in &self.coeffs {
            let mut img = Self::basis(Perm::identity(self.n), c.clone());
            for r in w.reduced_word() {
                img = img.mul_simple(r, tgt).neg().add(&img.scale(&xi1));
            }
            acc = acc.add(&img);
        }
        acc
    }

    /// Dense coefficient vector over `perms`.
    pub fn to_vec(&self, perms: &[Perm], tgt: &SpecTarget) -> Vec<Fe> {
        perms.iter().map(|w| self.coeffs.get(w).cloned().unwrap_or_else(|| tgt.zero())).collect()
    }
}

/// `T_w T_v` over the target.
pub fn tw_product(a: &SpecElement, b: &SpecElement, tgt: &SpecTarget) -> SpecElement {
    a.mul(b, tgt)
}

impl fmt::Display for SpecElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Perm, &Fe)> = self.coeffs.iter().collect();
        terms.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
        let parts: Vec<String> = terms
            .iter()
            .map(|(w, c)| match (c.is_one(), w.is_identity()) {
                (_, true) => format!("{c}"),
                (true, false) => format!("[{w}]"),
                (false, false) => format!("({c})[{w}]"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct Term {
    perm: String,
    coeff: String,
}

impl Serialize for SpecElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<(&Perm, &Fe)> = self.coeffs.iter().collect();
        terms.sort_by_key(|(w, _)| (w.length(), (*w).clone()));
        let mut seq = s.serialize_seq(Some(terms.len()))?;
        for (w, c) in terms {
            seq.serialize_element(&Term { perm: w.word_string(), coeff: c.to_string() })?;
        }
        seq.end()
    }
}

/// Expand `h` in the `T_w` basis and specialize every coefficient; success
/// certifies that `h` is integral at `ξ`.
pub fn specialize_element(model: &SeminormalModel, h: &AlgebraElement, tgt: &SpecTarget) -> Result<SpecElement> {
    let tw = model.to_tw(h)?;
    let terms: Vec<(Perm, Fe)> = tw
        .coeffs()
        .par_iter()
        .map(|(w, c)| {
            tgt.specialize_scalar(c)
                .map(|x| (w.clone(), x))
                .map_err(|err| match err {
                    Error::Pole(msg) => Error::Pole(format!("coefficient of T[{w}]: {msg}")),
                    other => other,
                })
        })
        .collect::<Result<_>>()?;
    let mut out = SpecElement::zero(model.n());
    for (w, c) in terms {
        out.insert(w, c);
    }
    Ok(out)
}

/// Specialized images of `ψ_r`, `y_s` and `f_i` for one flavor.
pub struct SpecializedGenerators {
    target: SpecTarget,
    n: usize,
    flavor: Flavor,
    realizable: Vec<ResidueSeq>,
    psi: Vec<SpecElement>,
    y: Vec<SpecElement>,
    f: BTreeMap<ResidueSeq, SpecElement>,
}

impl SpecializedGenerators {
    pub fn new(g: &KlrGenerators, flavor: Flavor, target: SpecTarget) -> Result<Self> {
        if g.e().finite() != Some(target.e()) {
            return Err(Error::InvalidTarget(format!("{} has e = {}, the model has e = {}", target.descriptor(), target.e(), g.e())));
        }
        let m = g.model();
        let n = g.n();
        let spec = |x: &AlgebraElement| specialize_element(m, x, &target);
        let psi = (1..n).map(|r| spec(g.psi(flavor, r))).collect::<Result<Vec<_>>>()?;
        let y = (1..=n).map(|s| spec(g.y(flavor, s))).collect::<Result<Vec<_>>>()?;
        let realizable = g.realizable().to_vec();
        let f = realizable.iter().map(|i| Ok((i.clone(), spec(g.f(i))?))).collect::<Result<BTreeMap<_, _>>>()?;
        Ok(SpecializedGenerators { target, n, flavor, realizable, psi, y, f })
    }

    pub fn target(&self) -> &SpecTarget {
        &self.target
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn realizable(&self) -> &[ResidueSeq] {
        &self.realizable
    }

    pub fn psi(&self, r: usize) -> &SpecElement {
        &self.psi[r - 1]
    }

    pub fn y(&self, s: usize) -> &SpecElement {
        &self.y[s - 1]
    }

    /// Image of `e(i)`, zero when `i` is not realizable.
    pub fn f(&self, i: &ResidueSeq) -> SpecElement {
        self.f.get(i).cloned().unwrap_or_else(|| SpecElement::zero(self.n))
    }

    pub fn one(&self) -> SpecElement {
        SpecElement::one(self.n, &self.target)
    }

    pub fn mul(&self, a: &SpecElement, b: &SpecElement) -> SpecElement {
        a.mul(b, &self.target)
    }

    /// Product of a sequence of factors.
    pub fn product(&self, factors: &[&SpecElement]) -> SpecElement {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// Evaluate a word of tokens as a product of specialized generators.
    pub fn word_image(&self, word: &Word) -> Result<SpecElement> {
        let n = self.n;
        let mut acc = self.one();
        for tok in word.tokens() {
            let x = match tok {
                Token::Psi(r) if (1..n).contains(r) => self.psi(*r).clone(),
                Token::Y(s) if (1..=n).contains(s) => self.y(*s).clone(),
                Token::E(i) | Token::Eps(_, i) if i.len() != n || i.e().finite() != Some(self.target.e()) => {
                    return Err(Error::InvalidToken(format!("{tok} does not match n = {n}, e = {}", self.target.e())));
                }
                Token::E(i) => self.f(i),
                Token::Eps(a, i) if a % 2 == 0 => self.f(i).add(&self.f(&i.neg())),
                Token::Eps(_, i) => self.f(i).sub(&self.f(&i.neg())),
                _ => return Err(Error::InvalidToken(format!("{tok} is out of range for n = {n}"))),
            };
            acc = self.mul(&acc, &x);
        }
        Ok(acc)
    }
}

type Check<'a> = (String, String, Box<dyn Fn() -> (SpecElement, SpecElement) + Send + Sync + 'a>);

fn label(parts: &[(&str, String)]) -> String {
    parts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

/// The undeformed cyclotomic KLR relations on the specialized generators,
/// plus the hash intertwining for the combined flavor.
pub fn verify_specialized_klr<'a>(sg: &'a SpecializedGenerators) -> RelationReport {
    let n = sg.n;
    let zero = SpecElement::zero(n);
    let mut checks: Vec<Check<'a>> = Vec::new();
    let mut push = |rel: &str, idx: String, f: Box<dyn Fn() -> (SpecElement, SpecElement) + Send + Sync + 'a>| {
        checks.push((rel.to_string(), idx, f));
    };
    push(
        "idempotent-sum",
        String::new(),
        Box::new(move || (sg.realizable.iter().fold(SpecElement::zero(n), |acc, i| acc.add(&sg.f(i))), sg.one())),
    );
    for i in &sg.realizable {
        let si = i.to_string();
        if i.at(1) == 0 {
            push("cyclotomic", label(&[("i", si.clone())]), Box::new(move || (sg.mul(sg.y(1), &sg.f(i)), SpecElement::zero(n))));
        }
        for j in &sg.realizable {
            let z = zero.clone();
            push(
                "idempotent",
                label(&[("i", si.clone()), ("j", j.to_string())]),
                Box::new(move || (sg.mul(&sg.f(i), &sg.f(j)), if i == j { sg.f(i) } else { z.clone() })),
            );
        }
        for s in 1..=n {
            push(
                "y-e",
                label(&[("s", s.to_string()), ("i", si.clone())]),
                Box::new(move || (sg.mul(sg.y(s), &sg.f(i)), sg.mul(&sg.f(i), sg.y(s)))),
            );
            for s2 in s + 1..=n {
                push(
                    "y-y",
                    label(&[("r", s.to_string()), ("s", s2.to_string()), ("i", si.clone())]),
                    Box::new(move || (sg.product(&[sg.y(s), sg.y(s2), &sg.f(i)]), sg.product(&[sg.y(s2), sg.y(s), &sg.f(i)]))),
                );
            }
        }
        for r in 1..n {
            let ri = label(&[("r", r.to_string()), ("i", si.clone())]);
            push("psi-e", ri.clone(), Box::new(move || (sg.mul(sg.psi(r), &sg.f(i)), sg.mul(&sg.f(&i.swap(r)), sg.psi(r)))));
            for s in (1..=n).filter(|&s| s != r && s != r + 1) {
                push(
                    "psi-y-far",
                    label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                    Box::new(move || (sg.product(&[sg.psi(r), sg.y(s), &sg.f(i)]), sg.product(&[sg.y(s), sg.psi(r), &sg.f(i)]))),
                );
            }
            for s in r + 2..n {
                push(
                    "psi-psi-far",
                    label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                    Box::new(move || (sg.product(&[sg.psi(r), sg.psi(s), &sg.f(i)]), sg.product(&[sg.psi(s), sg.psi(r), &sg.f(i)]))),
                );
            }
            let equal = i.at(r) == i.at(r + 1);
            push(
                "psi-y",
                ri.clone(),
                Box::new(move || {
                    let f = sg.f(i);
                    let rhs = sg.product(&[sg.y(r), sg.psi(r), &f]);
                    (sg.product(&[sg.psi(r), sg.y(r + 1), &f]), if equal { rhs.add(&f) } else { rhs })
                }),
            );
            push(
                "y-psi",
                ri.clone(),
                Box::new(move || {
                    let f = sg.f(i);
                    let rhs = sg.product(&[sg.psi(r), sg.y(r), &f]);
                    (sg.product(&[sg.y(r + 1), sg.psi(r), &f]), if equal { rhs.add(&f) } else { rhs })
                }),
            );
            push(
                "quadratic",
                ri.clone(),
                Box::new(move || {
                    let f = sg.f(i);
                    let lhs = sg.product(&[sg.psi(r), sg.psi(r), &f]);
                    let (yr, yr1) = (sg.mul(sg.y(r), &f), sg.mul(sg.y(r + 1), &f));
                    let rhs = if equal {
                        SpecElement::zero(n)
                    } else if i.arrow_right(r) {
                        yr.sub(&yr1)
                    } else if i.arrow_left(r) {
                        yr1.sub(&yr)
                    } else {
                        f
                    };
                    (lhs, rhs)
                }),
            );
            if r + 1 < n {
                push(
                    "braid",
                    ri,
                    Box::new(move || {
                        let f = sg.f(i);
                        let (a, b) = (sg.psi(r), sg.psi(r + 1));
                        let lhs = sg.product(&[b, a, b, &f]).sub(&sg.product(&[a, b, a, &f]));
                        let rhs = if i.at(r) != i.at(r + 2) {
                            SpecElement::zero(n)
                        } else if i.arrow_right(r) {
                            f
                        } else if i.arrow_left(r) {
                            f.neg()
                        } else {
                            SpecElement::zero(n)
                        };
                        (lhs, rhs)
                    }),
                );
            }
        }
        if sg.flavor == Flavor::Circ {
            push("hash-e", label(&[("i", si.clone())]), Box::new(move || (sg.f(i).hash(&sg.target), sg.f(&i.neg()))));
        }
    }
    if sg.flavor == Flavor::Circ {
        for r in 1..n {
            push("hash-psi", label(&[("r", r.to_string())]), Box::new(move || (sg.psi(r).hash(&sg.target), sg.psi(r).neg())));
        }
        for s in 1..=n {
            push("hash-y", label(&[("s", s.to_string())]), Box::new(move || (sg.y(s).hash(&sg.target), sg.y(s).neg())));
        }
    }
    let outcomes: Vec<(bool, bool, usize)> = checks
        .par_iter()
        .map(|(_, _, f)| {
            let (lhs, rhs) = f();
            let diff = lhs.sub(&rhs);
            (diff.is_zero(), lhs.is_zero() && rhs.is_zero(), diff.support())
        })
        .collect();
    let mut report = RelationReport {
        suite: format!("specialized-klr@{}", sg.target.descriptor()),
        n,
        e: sg.target.e().to_string(),
        total: checks.len(),
        passed: 0,
        vacuous: 0,
        failures: vec![],
    };
    for ((rel, idx, _), (ok, vac, norm)) in checks.iter().zip(outcomes) {
        if ok {
            report.passed += 1;
            report.vacuous += vac as usize;
        } else {
            report.failures.push(Failure { relation: rel.clone(), indices: idx.clone(), witness_norm: norm });
        }
    }
    report
}
