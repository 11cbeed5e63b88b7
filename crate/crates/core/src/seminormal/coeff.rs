use crate::combinat::{partitions, standard_tableaux, StdTableau};
use crate::exactfield::{sqrt_bracket, ExtScalar};
use serde::Serialize;
use std::sync::Arc;

/// Scalars `α_r(t)` governing the action of `T_r` on a seminormal basis.
pub trait CoeffSystem: Send + Sync {
    fn name(&self) -> String;

    /// `α_r(t)`; must vanish when `s_r·t` is not standard.
    fn alpha(&self, r: usize, t: &StdTableau) -> ExtScalar;

    /// Whether `α_r(t) = −α_r(t′)` is claimed.
    fn is_alternating(&self) -> bool {
        false
    }
}

fn bracket(k: i64) -> ExtScalar {
    ExtScalar::qint(k)
}

fn bracket_inv(k: i64) -> ExtScalar {
    ExtScalar::qint(k).inv().expect("axial distance of a standard pair is nonzero")
}

/// The alternating system `t^{ρ/2}√[1+ρ]√[1−ρ]/[ρ]` on `I⁺`, extended by `−α_r(t′)` on `I⁻`.
#[derive(Default, Clone, Copy)]
pub struct Alternating;

impl CoeffSystem for Alternating {
    fn name(&self) -> String {
        "alternating".into()
    }

    fn alpha(&self, r: usize, t: &StdTableau) -> ExtScalar {
        if t.swap(r).is_none() {
            return ExtScalar::zero();
        }
        if !t.is_plus() {
            if t.n() < 2 {
                return ExtScalar::zero();
            }
            return -self.alpha(r, &t.conjugate());
        }
        let rho = t.rho(r);
        let roots = sqrt_bracket(1 + rho).unwrap() * sqrt_bracket(1 - rho).unwrap();
        ExtScalar::u_pow(rho) * roots * bracket_inv(rho)
    }

    fn is_alternating(&self) -> bool {
        true
    }
}

/// Root-free system `α_r(t) = [1+ρ_r(t)]/[ρ_r(t)]`.
#[derive(Default, Clone, Copy)]
pub struct Plain;

impl CoeffSystem for Plain {
    fn name(&self) -> String {
        "plain".into()
    }

    fn alpha(&self, r: usize, t: &StdTableau) -> ExtScalar {
        if t.swap(r).is_none() {
            return ExtScalar::zero();
        }
        let rho = t.rho(r);
        bracket(1 + rho) * bracket_inv(rho)
    }
}

/// The hash-conjugate system `α_r(t) ↦ −α_r(t′)` of another system.
pub struct HashConjugate(pub Arc<dyn CoeffSystem>);

impl CoeffSystem for HashConjugate {
    fn name(&self) -> String {
        format!("hash-conjugate({})", self.0.name())
    }

    fn alpha(&self, r: usize, t: &StdTableau) -> ExtScalar {
        -self.0.alpha(r, &t.conjugate())
    }

    fn is_alternating(&self) -> bool {
        self.0.is_alternating()
    }
}

/// Fault injection: negate a single coefficient `α_r(t)` of another system.
pub struct FlippedSign {
    pub base: Arc<dyn CoeffSystem>,
    pub r: usize,
    pub tableau: StdTableau,
}

impl FlippedSign {
    /// Flip the first nonzero coefficient found for `n`.
    pub fn first_nonzero(base: Arc<dyn CoeffSystem>, n: usize) -> Option<Self> {
        for lambda in partitions(n) {
            for t in standard_tableaux(&lambda) {
                for r in 1..n {
                    if !base.alpha(r, &t).is_zero() {
                        return Some(FlippedSign { base, r, tableau: t });
                    }
                }
            }
        }
        None
    }
}

impl CoeffSystem for FlippedSign {
    fn name(&self) -> String {
        format!("{}-flipped@{}:{}", self.base.name(), self.r, self.tableau)
    }

    fn alpha(&self, r: usize, t: &StdTableau) -> ExtScalar {
        let a = self.base.alpha(r, t);
        if r == self.r && *t == self.tableau {
            -a
        } else {
            a
        }
    }

    fn is_alternating(&self) -> bool {
        self.base.is_alternating()
    }
}

/// One violated condition of a coefficient system.
#[derive(Clone, Debug, Serialize)]
pub struct CoeffFailure {
    pub condition: String,
    pub r: usize,
    pub tableau: StdTableau,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoeffReport {
    pub system: String,
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<CoeffFailure>,
}

impl CoeffReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check conditions (a)–(d) of a seminormal coefficient system and, if claimed, the alternating condition.
pub fn validate_coeff_system(sys: &dyn CoeffSystem, n: usize) -> CoeffReport {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut fail = |cond: &str, r: usize, t: &StdTableau| {
        failures.push(CoeffFailure { condition: cond.into(), r, tableau: t.clone() });
    };
    // α along a chain of transpositions; zero once a step leaves the standard tableaux
    let chain = |t: &StdTableau, steps: &[usize]| -> ExtScalar {
        let mut acc = ExtScalar::one();
        let mut cur = t.clone();
        for &r in steps.iter().rev() {
            let a = sys.alpha(r, &cur);
            if a.is_zero() {
                return ExtScalar::zero();
            }
            acc = acc * a;
            cur = match cur.swap(r) {
                Some(v) => v,
                None => return ExtScalar::zero(),
            };
        }
        acc
    };
    for lambda in partitions(n) {
        for t in standard_tableaux(&lambda) {
            for r in 1..n {
                checked += 1;
                let a = sys.alpha(r, &t);
                match t.swap(r) {
                    None => {
                        if !a.is_zero() {
                            fail("a", r, &t);
                        }
                    }
                    Some(v) => {
                        let (rt, rv) = (t.rho(r), v.rho(r));
                        let lhs = a.clone() * sys.alpha(r, &v);
                        let rhs = bracket(1 + rt) * bracket(1 + rv) * bracket_inv(rt) * bracket_inv(rv);
                        if lhs != rhs {
                            fail("d", r, &t);
                        }
                    }
                }
                for k in 1..n {
                    if r.abs_diff(k) > 1 && chain(&t, &[k, r]) != chain(&t, &[r, k]) {
                        fail("b", r, &t);
                    }
                }
                if r + 1 < n && chain(&t, &[r, r + 1, r]) != chain(&t, &[r + 1, r, r + 1]) {
                    fail("c", r, &t);
                }
                if sys.is_alternating() && a != -sys.alpha(r, &t.conjugate()) {
                    fail("alternating", r, &t);
                }
            }
        }
    }
    CoeffReport { system: sys.name(), n, checked, failures }
}

/// Built-in coefficient systems by name.
pub fn coefficient_systems() -> crate::registry::Registry<dyn CoeffSystem> {
    let mut reg: crate::registry::Registry<dyn CoeffSystem> = crate::registry::Registry::new("coefficient system");
    reg.register("alternating", "alternating square-root system (hash-compatible)", || Arc::new(Alternating) as Arc<dyn CoeffSystem>);
    reg.register("plain", "root-free system [1+ρ]/[ρ]", || Arc::new(Plain) as Arc<dyn CoeffSystem>);
    reg.register("hash-plain", "hash conjugate of the plain system", || Arc::new(HashConjugate(Arc::new(Plain))) as Arc<dyn CoeffSystem>);
    reg
}
