//! Relation suites: each yields exact matrix identities `lhs = rhs`.

use super::{class_sign, Flavor, KlrGenerators};
use crate::combinat::{BlockGamma, ResidueSeq};
use crate::error::Result;
use crate::exactfield::ExtScalar;
use crate::registry::Registry;
use crate::seminormal::AlgebraElement;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// One relation evaluated at fixed indices.
#[derive(Clone, Debug)]
pub struct Instance {
    pub relation: String,
    pub indices: String,
    /// Indices `r` of every `ψ_r` occurring in the relation.
    pub psi: Vec<usize>,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

impl Instance {
    pub fn new(relation: &str, indices: String, psi: &[usize], lhs: AlgebraElement, rhs: AlgebraElement) -> Self {
        Instance { relation: relation.to_string(), indices, psi: psi.to_vec(), lhs, rhs }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub relation: String,
    pub indices: String,
    /// Number of nonzero entries of `lhs − rhs`.
    pub witness_norm: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub suite: String,
    pub n: usize,
    pub e: String,
    pub total: usize,
    /// Includes the vacuous instances.
    pub passed: usize,
    pub vacuous: usize,
    pub failures: Vec<Failure>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Failure counts per relation id.
    pub fn failure_histogram(&self) -> BTreeMap<String, usize> {
        let mut h = BTreeMap::new();
        for f in &self.failures {
            *h.entry(f.relation.clone()).or_insert(0) += 1;
        }
        h
    }
}

pub trait RelationSuite: Send + Sync {
    fn name(&self) -> &str;
    fn description(&self) -> &str;
    fn instances(&self, g: &KlrGenerators) -> Result<Vec<Instance>>;
}

/// Evaluate every instance of a suite.
pub fn run_suite(g: &KlrGenerators, suite: &dyn RelationSuite) -> Result<RelationReport> {
    let inst = suite.instances(g)?;
    let outcomes: Vec<(bool, bool, usize)> = inst
        .par_iter()
        .map(|x| {
            let diff = &x.lhs - &x.rhs;
            let vacuous = x.lhs.is_zero() && x.rhs.is_zero();
            (diff.is_zero(), vacuous, diff.nnz())
        })
        .collect();
    let mut report = RelationReport {
        suite: suite.name().to_string(),
        n: g.n(),
        e: g.e().to_string(),
        total: inst.len(),
        passed: 0,
        vacuous: 0,
        failures: vec![],
    };
    for (x, (ok, vac, norm)) in inst.iter().zip(outcomes) {
        if ok {
            report.passed += 1;
            if vac {
                report.vacuous += 1;
            }
        } else {
            report.failures.push(Failure { relation: x.relation.clone(), indices: x.indices.clone(), witness_norm: norm });
        }
    }
    Ok(report)
}

fn tpow(d: i64) -> ExtScalar {
    ExtScalar::t_pow(d)
}

/// Label for an index tuple.
fn label(parts: &[(&str, String)]) -> String {
    parts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

fn ri(r: usize, i: &ResidueSeq) -> String {
    label(&[("r", r.to_string()), ("i", i.to_string())])
}

/// Sign `σ` of the quadratic shift `t^d y_r + σ[d]` and the effective
/// `ρ_r`: for the minus flavor and on `I⁻` both are read from `−i`, as the
/// hash image of the plus relations.
fn quad_data(fl: Flavor, r: usize, i: &ResidueSeq) -> Option<(i64, i64)> {
    let minus_side = match fl {
        Flavor::Plus => false,
        Flavor::Minus => true,
        Flavor::Circ => class_sign(i)? == -1,
    };
    let rho = if minus_side { -i.neg().rho(r) } else { i.rho(r) };
    let sigma = if fl == Flavor::Circ && minus_side { -1 } else { 1 };
    Some((sigma, rho))
}

fn quad_shift(g: &KlrGenerators, fl: Flavor, sigma: i64, d: i64, r: usize, i: &ResidueSeq) -> AlgebraElement {
    let f = g.f(i);
    (g.y(fl, r) * f).scale(&tpow(d)) + f.scale(&(ExtScalar::qint(d) * ExtScalar::from_int(sigma)))
}

/// Expected `ψ_r² f_i`.
pub(crate) fn quadratic_rhs(g: &KlrGenerators, fl: Flavor, r: usize, i: &ResidueSeq) -> AlgebraElement {
    let f = g.f(i);
    let y = |s: usize| g.y(fl, s) * f;
    if i.at(r) == i.at(r + 1) {
        return g.zero().clone();
    }
    let (right, left) = (i.arrow_right(r), i.arrow_left(r));
    if !right && !left {
        return f.clone();
    }
    let Some((sigma, rho)) = quad_data(fl, r, i) else { return g.zero().clone() };
    let q = |d: i64, s: usize| quad_shift(g, fl, sigma, d, s, i);
    match fl {
        Flavor::Plus => {
            if right {
                q(1 + rho, r) - y(r + 1)
            } else {
                q(1 - rho, r + 1) - y(r)
            }
        }
        Flavor::Minus => {
            if left {
                q(1 - rho, r) - y(r + 1)
            } else {
                q(1 + rho, r + 1) - y(r)
            }
        }
        Flavor::Circ => {
            let Some(sigma) = class_sign(i) else { return g.zero().clone() };
            match (r <= 2, sigma, right) {
                (true, _, true) => y(r) - y(r + 1),
                (true, _, false) => y(r + 1) - y(r),
                (false, 1, true) => q(1 + rho, r) - y(r + 1),
                (false, 1, false) => q(1 - rho, r + 1) - y(r),
                (false, _, true) => y(r) - q(1 + rho, r + 1),
                (false, _, false) => y(r + 1) - q(1 - rho, r),
            }
        }
    }
}

/// Scalar `c` with `(ψ_{r+1}ψ_rψ_{r+1} − ψ_rψ_{r+1}ψ_r) f_i = c f_i`.
pub(crate) fn braid_constant(fl: Flavor, r: usize, i: &ResidueSeq) -> ExtScalar {
    if i.at(r) != i.at(r + 2) {
        return ExtScalar::zero();
    }
    let (right, left) = (i.arrow_right(r), i.arrow_left(r));
    if !right && !left {
        return ExtScalar::zero();
    }
    let Some((_, rho)) = quad_data(fl, r, i) else { return ExtScalar::zero() };
    let one = ExtScalar::one();
    match fl {
        Flavor::Plus => if right { tpow(1 + rho) } else { -one },
        Flavor::Minus => if left { tpow(1 - rho) } else { -one },
        Flavor::Circ => match (r <= 2, class_sign(i), right) {
            (_, None, _) => ExtScalar::zero(),
            (true, _, true) => one,
            (true, _, false) => -one,
            (false, Some(1), true) => tpow(1 + rho),
            (false, Some(1), false) => -one,
            (false, _, true) => one,
            (false, _, false) => -tpow(1 - rho),
        },
    }
}

fn braid_lhs(g: &KlrGenerators, fl: Flavor, r: usize, j: &ResidueSeq) -> AlgebraElement {
    let (a, b) = (g.psi(fl, r), g.psi(fl, r + 1));
    let f = g.f(j);
    &(&(b * a) * &(b * f)) - &(&(a * b) * &(a * f))
}

/// The `ψ_r y_{r+1}` and `y_{r+1} ψ_r` right-hand sides, deformed at `r = 2`
/// for the combined flavor by `⟨−e⟩_2`.
pub(crate) fn mixed_rhs(g: &KlrGenerators, fl: Flavor, r: usize, i: &ResidueSeq) -> (AlgebraElement, AlgebraElement) {
    let f = g.f(i);
    let psi = g.psi(fl, r);
    let delta = if i.at(r) == i.at(r + 1) { f.clone() } else { g.zero().clone() };
    let deformed = fl == Flavor::Circ && r == 2;
    let e = g.e().finite();
    match (deformed, e) {
        (true, Some(e)) => {
            let d = -(e as i64);
            let j = i.swap(r);
            let left = &(&g.shifted(fl, d, r, &j) * psi) * f + delta.clone();
            let right = psi * &g.shifted(fl, d, r, i) + delta;
            (left, right)
        }
        _ => {
            let y = g.y(fl, r);
            (&(y * psi) * f + delta.clone(), &(psi * y) * f + delta)
        }
    }
}

/// Every defining relation of the chosen flavor over the index set `domain`.
pub(crate) fn klr_relations(g: &KlrGenerators, fl: Flavor, domain: &[ResidueSeq]) -> Vec<Instance> {
    let n = g.n();
    let mut out = Vec::new();
    for i in domain {
        let f = g.f(i);
        let si = i.to_string();
        out.push(Instance::new("cyclotomic", si.clone(), &[], g.y(fl, 1) * f, g.zero().clone()));
        out.push(Instance::new("idempotent", si.clone(), &[], f * f, f.clone()));
        for s in 1..=n {
            let y = g.y(fl, s);
            out.push(Instance::new("y-e", label(&[("s", s.to_string()), ("i", si.clone())]), &[], y * f, f * y));
            for t in s + 1..=n {
                let z = g.y(fl, t);
                out.push(Instance::new(
                    "y-y",
                    label(&[("r", s.to_string()), ("s", t.to_string()), ("i", si.clone())]),
                    &[],
                    &(y * z) * f,
                    &(z * y) * f,
                ));
            }
        }
        for r in 1..n {
            let psi = g.psi(fl, r);
            out.push(Instance::new("psi-e", ri(r, i), &[r], psi * f, g.f(&i.swap(r)) * psi));
            for s in 1..=n {
                if s == r || s == r + 1 {
                    continue;
                }
                let y = g.y(fl, s);
                out.push(Instance::new(
                    "psi-y-far",
                    label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                    &[r],
                    &(psi * y) * f,
                    &(y * psi) * f,
                ));
            }
            for s in r + 2..n {
                let q = g.psi(fl, s);
                out.push(Instance::new(
                    "psi-psi-far",
                    label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                    &[r, s],
                    &(psi * q) * f,
                    &(q * psi) * f,
                ));
            }
            let (left, right) = mixed_rhs(g, fl, r, i);
            out.push(Instance::new("psi-y", ri(r, i), &[r], &(psi * g.y(fl, r + 1)) * f, left));
            out.push(Instance::new("y-psi", ri(r, i), &[r], &(g.y(fl, r + 1) * psi) * f, right));
            out.push(Instance::new("quadratic", ri(r, i), &[r], &(psi * psi) * f, quadratic_rhs(g, fl, r, i)));
            if r + 1 < n {
                out.push(Instance::new(
                    "braid",
                    ri(r, i),
                    &[r, r + 1],
                    braid_lhs(g, fl, r, i),
                    f.scale(&braid_constant(fl, r, i)),
                ));
            }
        }
    }
    for (a, i) in domain.iter().enumerate() {
        for j in domain[a + 1..].iter().filter(|j| BlockGamma::of(j) == BlockGamma::of(i)) {
            out.push(Instance::new(
                "orthogonal",
                label(&[("i", i.to_string()), ("j", j.to_string())]),
                &[],
                g.f(i) * g.f(j),
                g.zero().clone(),
            ));
        }
    }
    let mut by_gamma: BTreeMap<BlockGamma, AlgebraElement> = BTreeMap::new();
    for i in domain {
        let acc = by_gamma.entry(BlockGamma::of(i)).or_insert_with(|| g.zero().clone());
        *acc = &*acc + g.f(i);
    }
    for (gamma, sum) in by_gamma {
        out.push(Instance::new("idempotent-sum", format!("gamma={gamma}"), &[], sum, g.model().f_gamma(&gamma)));
    }
    out
}

/// Suite that filters the relations of one flavor.
struct FilteredSuite {
    name: &'static str,
    description: &'static str,
    flavor: Flavor,
    keep: fn(&Instance) -> bool,
}

impl RelationSuite for FilteredSuite {
    fn name(&self) -> &str {
        self.name
    }
    fn description(&self) -> &str {
        self.description
    }
    fn instances(&self, g: &KlrGenerators) -> Result<Vec<Instance>> {
        let domain = match self.flavor {
            Flavor::Circ => g.signed_realizable(),
            _ => g.realizable().to_vec(),
        };
        Ok(klr_relations(g, self.flavor, &domain).into_iter().filter(|x| (self.keep)(x)).collect())
    }
}

fn all(_: &Instance) -> bool {
    true
}

/// The hash maps each combined generator to its negative and `f_i` to `f_{−i}`.
struct HashIntertwine;

impl RelationSuite for HashIntertwine {
    fn name(&self) -> &str {
        "hash-intertwine"
    }
    fn description(&self) -> &str {
        "(ψ°_r)^# = −ψ°_r, (y°_s)^# = −y°_s, f_i^# = f_{−i}"
    }
    fn instances(&self, g: &KlrGenerators) -> Result<Vec<Instance>> {
        let m = g.model();
        let mut out = Vec::new();
        for r in 1..g.n() {
            let x = g.psi(Flavor::Circ, r);
            out.push(Instance::new("psi-hash", format!("r={r}"), &[r], m.hash(x), -x));
            let p = g.psi(Flavor::Plus, r);
            out.push(Instance::new("psi-plus-minus", format!("r={r}"), &[r], m.hash(g.psi(Flavor::Minus, r)), p.clone()));
        }
        for s in 1..=g.n() {
            let x = g.y(Flavor::Circ, s);
            out.push(Instance::new("y-hash", format!("s={s}"), &[], m.hash(x), -x));
        }
        for i in g.realizable() {
            out.push(Instance::new("e-hash", format!("i={i}"), &[], m.hash(g.f(i)), g.f(&i.neg()).clone()));
        }
        Ok(out)
    }
}

/// Order of `y°_s` near the start of a sequence.
struct YOrder;

impl RelationSuite for YOrder {
    fn name(&self) -> &str {
        "yorder"
    }
    fn description(&self) -> &str {
        "y°_1 = y°_2 = 0 on I^±, and the order of y°_3 on f_i"
    }
    fn instances(&self, g: &KlrGenerators) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        let z = g.zero().clone();
        let Some(e) = g.e().finite() else { return Ok(out) };
        let e = e as i64;
        for i in g.signed_realizable() {
            let f = g.f(&i);
            out.push(Instance::new("y1", format!("i={i}"), &[], g.y(Flavor::Circ, 1) * f, z.clone()));
            if g.n() >= 2 {
                out.push(Instance::new("y2", format!("i={i}"), &[], g.y(Flavor::Circ, 2) * f, z.clone()));
            }
            if g.n() < 3 {
                continue;
            }
            let y3 = g.y(Flavor::Circ, 3) * f;
            // `(y°_3 − σ[−e]) f_i`
            let sigma = class_sign(&i).unwrap();
            let shifted = &y3 - &f.scale(&(ExtScalar::qint(-e) * ExtScalar::from_int(sigma)));
            let right = if sigma == 1 { i.arrow_right(2) } else { i.arrow_left(2) };
            let left = if sigma == 1 { i.arrow_left(2) } else { i.arrow_right(2) };
            if left {
                out.push(Instance::new("y3-zero", format!("i={i}"), &[], y3, z.clone()));
            } else if right {
                out.push(Instance::new("y3-quadratic", format!("i={i}"), &[], &shifted * g.y(Flavor::Circ, 3), z.clone()));
            } else {
                out.push(Instance::new("y3-shift", format!("i={i}"), &[], shifted, z.clone()));
            }
        }
        Ok(out)
    }
}

/// The super presentation with generators `ψ_r`, `y_s`, `ε_a(i)`.
struct SuperSuite;

impl RelationSuite for SuperSuite {
    fn name(&self) -> &str {
        "super"
    }
    fn description(&self) -> &str {
        "super-presentation relations in ψ°_r, y°_s, ε_a(i), deformed over O"
    }
    fn instances(&self, g: &KlrGenerators) -> Result<Vec<Instance>> {
        let fl = Flavor::Circ;
        let n = g.n();
        let dom = g.signed_realizable();
        let mut out = Vec::new();
        let z = g.zero().clone();
        let sign = |a: u8| if a == 0 { ExtScalar::one() } else { -ExtScalar::one() };
        for i in &dom {
            let si = i.to_string();
            let m = i.neg();
            let eps = [g.eps(0, i), g.eps(1, i)];
            out.push(Instance::new("cyclotomic", si.clone(), &[], g.y(fl, 1) * &eps[0], z.clone()));
            for a in 0..2u8 {
                let la = |extra: &[(&str, String)]| {
                    let mut v = vec![("a", a.to_string())];
                    v.extend(extra.iter().cloned());
                    v.push(("i", si.clone()));
                    label(&v)
                };
                for b in 0..2u8 {
                    out.push(Instance::new(
                        "eps-product",
                        label(&[("a", a.to_string()), ("b", b.to_string()), ("i", si.clone())]),
                        &[],
                        &eps[a as usize] * &eps[b as usize],
                        eps[((a + b) % 2) as usize].clone(),
                    ));
                }
                out.push(Instance::new("eps-neg", la(&[]), &[], eps[a as usize].clone(), g.eps(a, &m).scale(&sign(a))));
                for s in 1..=n {
                    let y = g.y(fl, s);
                    out.push(Instance::new("y-eps", la(&[("s", s.to_string())]), &[], y * &eps[a as usize], &eps[a as usize] * y));
                }
                for r in 1..n {
                    let psi = g.psi(fl, r);
                    out.push(Instance::new(
                        "psi-eps",
                        la(&[("r", r.to_string())]),
                        &[r],
                        psi * &eps[a as usize],
                        &g.eps(a, &i.swap(r)) * psi,
                    ));
                }
            }
            // Deformed relations on ε_1(i) are the signed sum of the idempotent forms at i and −i.
            let combine = |x: AlgebraElement, y: AlgebraElement| x - y;
            for r in 1..n {
                let psi = g.psi(fl, r);
                let e1 = &eps[1];
                let (li, ri_) = mixed_rhs(g, fl, r, i);
                let (lm, rm) = mixed_rhs(g, fl, r, &m);
                out.push(Instance::new("psi-y", ri(r, i), &[r], &(psi * g.y(fl, r + 1)) * e1, combine(li, lm)));
                out.push(Instance::new("y-psi", ri(r, i), &[r], &(g.y(fl, r + 1) * psi) * e1, combine(ri_, rm)));
                out.push(Instance::new(
                    "quadratic",
                    ri(r, i),
                    &[r],
                    &(psi * psi) * e1,
                    combine(quadratic_rhs(g, fl, r, i), quadratic_rhs(g, fl, r, &m)),
                ));
                if r + 1 < n {
                    let a = g.psi(fl, r);
                    let b = g.psi(fl, r + 1);
                    let lhs = &(&(&(b * a) * b) - &(&(a * b) * a)) * e1;
                    let rhs = combine(g.f(i).scale(&braid_constant(fl, r, i)), g.f(&m).scale(&braid_constant(fl, r, &m)));
                    out.push(Instance::new("braid", ri(r, i), &[r, r + 1], lhs, rhs));
                }
                for s in 1..=n {
                    if s != r && s != r + 1 {
                        let y = g.y(fl, s);
                        out.push(Instance::new(
                            "psi-y-far",
                            label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                            &[r],
                            &(psi * y) * e1,
                            &(y * psi) * e1,
                        ));
                    }
                }
                for s in r + 2..n {
                    let q = g.psi(fl, s);
                    out.push(Instance::new(
                        "psi-psi-far",
                        label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                        &[r, s],
                        &(psi * q) * e1,
                        &(q * psi) * e1,
                    ));
                }
            }
            for s in 1..=n {
                for t in s + 1..=n {
                    let (y, w) = (g.y(fl, s), g.y(fl, t));
                    out.push(Instance::new(
                        "y-y",
                        label(&[("r", s.to_string()), ("s", t.to_string()), ("i", si.clone())]),
                        &[],
                        &(y * w) * &eps[1],
                        &(w * y) * &eps[1],
                    ));
                }
            }
        }
        for (gamma, sum) in half_eps_sums(g, &dom) {
            out.push(Instance::new("idempotent-sum", format!("gamma={gamma}"), &[], sum, g.model().f_gamma(&gamma)));
        }
        Ok(out)
    }
}

/// `Σ_{i ∈ I^γ} ½ ε_0(i)` for each `γ` met by `dom`.
fn half_eps_sums(g: &KlrGenerators, dom: &[ResidueSeq]) -> BTreeMap<BlockGamma, AlgebraElement> {
    let half = ExtScalar::one().div(&ExtScalar::from_int(2)).unwrap();
    let mut out: BTreeMap<BlockGamma, AlgebraElement> = BTreeMap::new();
    for i in dom {
        let acc = out.entry(BlockGamma::of(i)).or_insert_with(|| g.zero().clone());
        *acc = &*acc + &g.eps(0, i).scale(&half);
    }
    out
}

/// The presentation of the alternating block algebra in `Ψ_r(i)`, `Y_s(i)`, `E(i)`.
struct MainRelations;

impl MainRelations {
    fn similar(i: &ResidueSeq, j: &ResidueSeq) -> bool {
        i == j || *i == j.neg()
    }
}

impl RelationSuite for MainRelations {
    fn name(&self) -> &str {
        "main-relations"
    }
    fn description(&self) -> &str {
        "presentation of the alternating subalgebra in Ψ_r(i), Y_s(i), ε(i), deformed over O"
    }
    fn instances(&self, g: &KlrGenerators) -> Result<Vec<Instance>> {
        let n = g.n();
        let dom = g.signed_realizable();
        let z = g.zero().clone();
        let mut out = Vec::new();
        for (gamma, sum) in half_eps_sums(g, &dom) {
            out.push(Instance::new("idempotent-sum", format!("gamma={gamma}"), &[], sum, g.model().f_gamma(&gamma)));
        }
        for i in &dom {
            let si = i.to_string();
            let m = i.neg();
            let e = g.big_e(i);
            out.push(Instance::new("cyclotomic", si.clone(), &[], g.big_y(1, i), z.clone()));
            out.push(Instance::new("e-neg", si.clone(), &[], g.big_e(&m), e.clone()));
            let same: Vec<&ResidueSeq> = dom.iter().filter(|j| BlockGamma::of(j) == BlockGamma::of(i)).collect();
            for j in &same {
                let sim = Self::similar(i, j);
                let pair = label(&[("i", si.clone()), ("j", j.to_string())]);
                let rhs = if sim { e.clone() } else { z.clone() };
                out.push(Instance::new("e-e", pair.clone(), &[], &e * &g.big_e(j), rhs));
                for r in 1..=n {
                    let y = g.big_y(r, i);
                    let lab = label(&[("r", r.to_string()), ("i", si.clone()), ("j", j.to_string())]);
                    let keep = if sim { y.clone() } else { z.clone() };
                    out.push(Instance::new("e-y", lab.clone(), &[], &g.big_e(j) * &y, keep.clone()));
                    out.push(Instance::new("y-e", lab.clone(), &[], &y * &g.big_e(j), keep));
                    for s in r..=n {
                        let lhs = &y * &g.big_y(s, j);
                        let rhs = if sim { &g.big_y(s, i) * &g.big_y(r, j) } else { z.clone() };
                        let lab = label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone()), ("j", j.to_string())]);
                        out.push(Instance::new("y-y", lab, &[], lhs, rhs));
                    }
                }
                for r in 1..n {
                    let psi = g.big_psi(r, i);
                    let lab = label(&[("r", r.to_string()), ("i", si.clone()), ("j", j.to_string())]);
                    let left = if Self::similar(&i.swap(r), j) { psi.clone() } else { z.clone() };
                    let right = if sim { psi.clone() } else { z.clone() };
                    out.push(Instance::new("e-psi", lab.clone(), &[r], &g.big_e(j) * &psi, left));
                    out.push(Instance::new("psi-e", lab, &[r], &psi * &g.big_e(j), right));
                }
            }
            for s in 1..=n {
                let y = g.big_y(s, i);
                out.push(Instance::new("y-neg", ri(s, i), &[], g.big_y(s, &m), -&y));
            }
            for r in 1..n {
                let psi = g.big_psi(r, i);
                let j = i.swap(r);
                out.push(Instance::new("psi-neg", ri(r, i), &[r], g.big_psi(r, &m), -&psi));
                out.push(Instance::new("e-psi-e", ri(r, i), &[r], &(&g.big_e(&j) * &psi) * &e, psi.clone()));
                let delta = if i.at(r) == i.at(r + 1) { e.clone() } else { z.clone() };
                // Mixed relations.
                let (left, right) = if r == 2 && g.e().finite().is_some() {
                    let d = -(g.e().finite().unwrap() as i64);
                    (&g.big_y_shifted(d, r, &j) * &psi, &psi * &g.big_y_shifted(d, r, i))
                } else {
                    (&g.big_y(r, &j) * &psi, &psi * &g.big_y(r, i))
                };
                out.push(Instance::new("psi-y", ri(r, i), &[r], &psi * &g.big_y(r + 1, i), left + delta.clone()));
                out.push(Instance::new("y-psi", ri(r, i), &[r], &g.big_y(r + 1, &j) * &psi, right + delta));
                for s in 1..=n {
                    if s != r && s != r + 1 {
                        out.push(Instance::new(
                            "psi-y-far",
                            label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                            &[r],
                            &psi * &g.big_y(s, i),
                            &g.big_y(s, &j) * &psi,
                        ));
                    }
                }
                for s in r + 2..n {
                    let k = i.swap(s);
                    out.push(Instance::new(
                        "psi-psi-far",
                        label(&[("r", r.to_string()), ("s", s.to_string()), ("i", si.clone())]),
                        &[r, s],
                        &g.big_psi(r, &k) * &g.big_psi(s, i),
                        &g.big_psi(s, &j) * &g.big_psi(r, i),
                    ));
                }
                out.push(Instance::new("quadratic", ri(r, i), &[r], &g.big_psi(r, &j) * &psi, self.quadratic(g, r, i)));
                if r + 1 < n {
                    let a = i.swap(r + 1);
                    let b = a.swap(r);
                    let lhs_b = &(&g.big_psi(r + 1, &b) * &g.big_psi(r, &a)) * &g.big_psi(r + 1, i);
                    let a2 = i.swap(r);
                    let b2 = a2.swap(r + 1);
                    let lhs_a = &(&g.big_psi(r, &b2) * &g.big_psi(r + 1, &a2)) * &g.big_psi(r, i);
                    let c = braid_constant(Flavor::Circ, r, i);
                    out.push(Instance::new("braid", ri(r, i), &[r, r + 1], lhs_b - lhs_a, e.scale(&c)));
                }
            }
        }
        Ok(out)
    }
}

impl MainRelations {
    /// `Ψ_r(s_r i) Ψ_r(i)` in terms of `Y` and `E`.
    fn quadratic(&self, g: &KlrGenerators, r: usize, i: &ResidueSeq) -> AlgebraElement {
        let e = g.big_e(i);
        if i.at(r) == i.at(r + 1) {
            return g.zero().clone();
        }
        let (right, left) = (i.arrow_right(r), i.arrow_left(r));
        if !right && !left {
            return e;
        }
        let Some((sigma, rho)) = quad_data(Flavor::Circ, r, i) else { return g.zero().clone() };
        let y = |s| g.big_y(s, i);
        let q = |d: i64, s: usize| y(s).scale(&tpow(d)) + e.scale(&(ExtScalar::qint(d) * ExtScalar::from_int(sigma)));
        match (r <= 2, sigma == 1, right) {
            (true, _, true) => y(r) - y(r + 1),
            (true, _, false) => y(r + 1) - y(r),
            (false, true, true) => q(1 + rho, r) - y(r + 1),
            (false, true, false) => q(1 - rho, r + 1) - y(r),
            (false, false, true) => y(r) - q(1 + rho, r + 1),
            (false, false, false) => y(r + 1) - q(1 - rho, r),
        }
    }
}

fn touches_only_above_two(x: &Instance) -> bool {
    x.psi.iter().all(|&r| r > 2)
}

fn touches_one(x: &Instance) -> bool {
    x.psi.contains(&1)
}

fn simple_psi2(x: &Instance) -> bool {
    x.psi.contains(&2)
        && match x.relation.as_str() {
            "psi-psi-far" | "psi-y-far" => true,
            _ => false,
        }
}

fn psi2_intertwiner(x: &Instance) -> bool {
    x.relation == "psi-e" && x.psi == [2]
}

fn mixed_two(x: &Instance) -> bool {
    (x.relation == "psi-y" || x.relation == "y-psi") && x.psi == [2]
}

fn quadratic_two(x: &Instance) -> bool {
    x.relation == "quadratic" && x.psi == [2]
}

fn braid_two(x: &Instance) -> bool {
    x.relation == "braid" && x.psi.contains(&2)
}

/// All built-in relation suites.
pub fn relation_suites() -> Registry<dyn RelationSuite> {
    let mut reg: Registry<dyn RelationSuite> = Registry::new("relation suite");
    let filtered: [(&'static str, &'static str, Flavor, fn(&Instance) -> bool); 10] = [
        ("hm-plus", "graded relations of ψ⁺, y⁺ over every realizable i", Flavor::Plus, all),
        ("hm-minus", "graded relations of ψ⁻, y⁻ with constants read from −i", Flavor::Minus, all),
        ("RO", "master list: every relation of the deformed algebra in ψ°, y°, f_i", Flavor::Circ, all),
        ("automatic", "relations involving only ψ°_r with r > 2 and y°", Flavor::Circ, touches_only_above_two),
        ("psi-one", "relations involving ψ°_1", Flavor::Circ, touches_one),
        ("simple-psi2", "ψ°_2 commutes with distant ψ°_r and y°_s", Flavor::Circ, simple_psi2),
        ("psi2-intertwiner", "ψ°_2 f_i = f_{s_2 i} ψ°_2", Flavor::Circ, psi2_intertwiner),
        ("mixed", "ψ°_2 y°_3 and y°_3 ψ°_2 with the ⟨−e⟩ shift", Flavor::Circ, mixed_two),
        ("quadratic", "(ψ°_2)² f_i", Flavor::Circ, quadratic_two),
        ("braid-psi2", "braid relations involving ψ°_2", Flavor::Circ, braid_two),
    ];
    for (name, description, flavor, keep) in filtered {
        reg.register(name, description, move || Arc::new(FilteredSuite { name, description, flavor, keep }));
    }
    reg.register("hash-intertwine", "hash negates ψ°, y° and maps f_i to f_{−i}", || Arc::new(HashIntertwine));
    reg.register("super", "super-presentation relations in ψ°, y°, ε_a(i)", || Arc::new(SuperSuite));
    reg.register("main-relations", "alternating presentation in Ψ_r(i), Y_s(i), ε(i)", || Arc::new(MainRelations));
    reg.register("yorder", "vanishing and order of y°_1, y°_2, y°_3", || Arc::new(YOrder));
    reg
}
