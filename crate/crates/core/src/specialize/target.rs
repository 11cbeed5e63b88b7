//! Specialization targets `(F, ξ)` and evaluation of generic scalars.

use super::field::{is_prime, Fe, FieldSpec, PrimeField};
use crate::error::{Error, Result};
use crate::exactfield::{ExtScalar, GaussRat, UPoly};
use crate::registry::Registry;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

/// A field `F` with `ξ ∈ F` of quantum characteristic `e` and the square
/// roots needed to evaluate generic scalars.
#[derive(Clone, Debug)]
pub struct SpecTarget {
    descriptor: String,
    e: u32,
    field: Arc<FieldSpec>,
    xi: Fe,
    /// `a` with `a² = ξ`, the image of `u`.
    sqrt_xi: Option<Fe>,
    /// `b` with `b² = 1 + ξ + ξ²`, the image of `√[3]`.
    sqrt_three: Option<Fe>,
    /// Image of the Gaussian unit `i`.
    iota: Option<Fe>,
}

impl SpecTarget {
    /// Validate `ξ` and find the roots inside `field`; `sqrt_xi` overrides the search.
    pub fn new(descriptor: &str, e: u32, field: Arc<FieldSpec>, xi: Fe, sqrt_xi: Option<Fe>) -> Result<Self> {
        let bad = |msg: String| Error::InvalidTarget(format!("{descriptor}: {msg}"));
        if field.characteristic() == 2 {
            return Err(bad("characteristic 2 is excluded".into()));
        }
        if e < 3 {
            return Err(bad(format!("e = {e} is not supported")));
        }
        match xi.quantum_characteristic(e) {
            Some(k) if k == e => {}
            Some(k) => return Err(bad(format!("ξ = {xi} has quantum characteristic {k}, not {e}"))),
            None => return Err(bad(format!("ξ = {xi} does not have quantum characteristic {e}"))),
        }
        let sqrt_xi = sqrt_xi.or_else(|| xi.sqrt());
        let three = xi.quantum_int(3);
        let sqrt_three = three.sqrt();
        let iota = Fe::from_int(&field, -1).sqrt();
        if e > 3 && (sqrt_xi.is_none() || sqrt_three.is_none()) {
            return Err(bad(format!("{} is not large enough: it lacks √ξ or √(1+ξ+ξ²)", field.name)));
        }
        Ok(SpecTarget { descriptor: descriptor.to_string(), e, field, xi, sqrt_xi, sqrt_three, iota })
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn xi(&self) -> &Fe {
        &self.xi
    }

    pub fn sqrt_xi(&self) -> Option<&Fe> {
        self.sqrt_xi.as_ref()
    }

    pub fn sqrt_three(&self) -> Option<&Fe> {
        self.sqrt_three.as_ref()
    }

    pub fn zero(&self) -> Fe {
        Fe::zero(&self.field)
    }

    pub fn one(&self) -> Fe {
        Fe::one(&self.field)
    }

    /// Image of `√[h]`: zero when `[h]_ξ = 0`, `b` for `h = 3`, otherwise unsupported.
    fn sqrt_bracket(&self, h: u32) -> Result<Fe> {
        if self.xi.quantum_int(h as i64).is_zero() {
            return Ok(self.zero());
        }
        match (h, &self.sqrt_three) {
            (3, Some(b)) => Ok(b.clone()),
            _ => Err(Error::UnsupportedRoot(format!("√[{h}] over {}", self.descriptor))),
        }
    }

    fn gauss(&self, c: &GaussRat, ctx: &ExtScalar) -> Result<Fe> {
        let pole = || Error::Pole(format!("{ctx}: coefficient {c} has a denominator divisible by the characteristic"));
        let re = Fe::from_rational(&self.field, &c.re).ok_or_else(pole)?;
        if c.im.is_zero() {
            return Ok(re);
        }
        let iota = self.iota.as_ref().ok_or_else(|| Error::UnsupportedRoot(format!("i over {}", self.descriptor)))?;
        let im = Fe::from_rational(&self.field, &c.im).ok_or_else(pole)?;
        Ok(re.add(&iota.mul(&im)))
    }

    /// Evaluate `num / den` with `u ↦ u_val`, clearing rational denominators
    /// and common factors of the characteristic first.
    fn ratio(&self, num: &UPoly, den: &UPoly, u_pow: &dyn Fn(usize) -> Result<Fe>, ctx: &ExtScalar) -> Result<Fe> {
        let mut l = BigInt::one();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            l = l.lcm(c.re.denom()).lcm(c.im.denom());
        }
        let mut scale = BigRational::from_integer(l);
        if let PrimeField::Modular(p) = self.field.prime {
            let p = BigInt::from(p);
            let all_div = |s: &BigRational| {
                num.coeffs().iter().chain(den.coeffs()).all(|c| {
                    let (re, im) = (&c.re * s, &c.im * s);
                    (re.numer() % &p).is_zero() && (im.numer() % &p).is_zero()
                })
            };
            while !scale.is_zero() && all_div(&scale) {
                scale /= BigRational::from_integer(p.clone());
            }
        }
        let eval = |poly: &UPoly| -> Result<Fe> {
            let mut acc = self.zero();
            for (k, c) in poly.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let scaled = GaussRat::new(&c.re * &scale, &c.im * &scale);
                acc = acc.add(&self.gauss(&scaled, ctx)?.mul(&u_pow(k)?));
            }
            Ok(acc)
        };
        let d = eval(den)?;
        let inv = d.inv().ok_or_else(|| Error::Pole(format!("{ctx}: denominator vanishes at ξ = {}", self.xi)))?;
        Ok(eval(num)?.mul(&inv))
    }

    /// Exact image of a generic scalar under `t ↦ ξ`.
    pub fn specialize_scalar(&self, x: &ExtScalar) -> Result<Fe> {
        let mut acc = self.zero();
        for (mask, b) in x.terms() {
            let mut root = self.one();
            for h in (2..32).filter(|h| mask & (1 << h) != 0) {
                root = root.mul(&self.sqrt_bracket(h)?);
            }
            let even = b.is_function_of_t();
            let u_pow = |k: usize| -> Result<Fe> {
                if even {
                    Ok(self.xi.pow((k / 2) as u64))
                } else {
                    let a = self.sqrt_xi.as_ref().ok_or_else(|| Error::UnsupportedRoot(format!("√ξ over {}", self.descriptor)))?;
                    Ok(a.pow(k as u64))
                }
            };
            let shift = if even {
                self.xi.powi(b.shift() / 2)
            } else {
                self.sqrt_xi.as_ref().and_then(|a| a.powi(b.shift()))
            }
            .ok_or_else(|| Error::UnsupportedRoot(format!("√ξ over {}", self.descriptor)))?;
            let v = self.ratio(b.num(), b.den(), &u_pow, x)?;
            acc = acc.add(&v.mul(&shift).mul(&root));
        }
        Ok(acc)
    }
}

/// A named family of targets, built from descriptor arguments.
pub trait TargetFamily: Send + Sync {
    fn build(&self, e: u32, args: &[&str]) -> Result<SpecTarget>;
}

fn parse_int(s: &str, what: &str) -> Result<i64> {
    s.trim().parse().map_err(|_| Error::InvalidTarget(format!("{what} `{s}` is not an integer")))
}

/// `fp:p[:ξ]`: the prime field, or its quadratic extension when the prime
/// field has no suitable `ξ` or lacks the required roots.
struct PrimeFamily;

impl PrimeFamily {
    fn non_residue(p: u64) -> u64 {
        let pb = BigInt::from(p);
        (2..p).find(|r| BigInt::from(*r).modpow(&BigInt::from((p - 1) / 2), &pb) == &pb - 1).expect("odd prime")
    }
}

impl TargetFamily for PrimeFamily {
    fn build(&self, e: u32, args: &[&str]) -> Result<SpecTarget> {
        let p = parse_int(args.first().ok_or_else(|| Error::InvalidTarget("fp needs a prime: fp:p[:xi]".into()))?, "prime")?;
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::InvalidTarget(format!("{p} is not an odd prime")));
        }
        let p = p as u64;
        let fields = [FieldSpec::prime_field(p), FieldSpec::quadratic_extension(p, Self::non_residue(p))];
        if let Some(xs) = args.get(1) {
            let xi = parse_int(xs, "ξ")?;
            let desc = format!("fp:{p}:{xi}");
            let mut last = None;
            for f in &fields {
                match SpecTarget::new(&desc, e, f.clone(), Fe::from_int(f, xi), None) {
                    Ok(t) => return Ok(t),
                    Err(err) => last = Some(err),
                }
            }
            return Err(last.unwrap());
        }
        let desc = format!("fp:{p}");
        for f in &fields {
            let candidates = Fe::all_elements(f).ok_or_else(|| Error::InvalidTarget(format!("{} is too large to search", f.name)))?;
            for xi in candidates {
                if xi.quantum_characteristic(e) == Some(e) {
                    if let Ok(t) = SpecTarget::new(&desc, e, f.clone(), xi, None) {
                        return Ok(t);
                    }
                }
            }
        }
        Err(Error::InvalidTarget(format!("no ξ of quantum characteristic {e} in F_{p} or F_{}", p * p)))
    }
}

/// `cyclotomic`: `Q(ζ_e)` with `ξ = ζ_e` for odd `e`, `Q(ζ_{2e})` with
/// `ξ = ζ_{2e}²` for even `e`, so that `√ξ` is available.
struct CyclotomicFamily;

impl TargetFamily for CyclotomicFamily {
    fn build(&self, e: u32, _args: &[&str]) -> Result<SpecTarget> {
        let m = if e % 2 == 1 { e } else { 2 * e };
        let f = FieldSpec::cyclotomic(m);
        let z = Fe::gen(&f);
        let (xi, a) = if e % 2 == 1 { (z.clone(), z.pow(e.div_ceil(2) as u64)) } else { (z.pow(2), z) };
        let mut t = SpecTarget::new("cyclotomic", e, f.clone(), xi, Some(a))?;
        if m % 4 == 0 {
            t.iota = Some(Fe::gen(&f).pow((m / 4) as u64));
        }
        Ok(t)
    }
}

/// `rational:ξ`: `ξ ∈ Q`; only `ξ = −1` has finite quantum characteristic,
/// so this family exists for completeness and reports the obstruction.
struct RationalFamily;

impl TargetFamily for RationalFamily {
    fn build(&self, e: u32, args: &[&str]) -> Result<SpecTarget> {
        let xi: BigRational = args
            .first()
            .map(|s| s.parse().map_err(|_| Error::InvalidTarget(format!("`{s}` is not a rational"))))
            .transpose()?
            .unwrap_or_else(BigRational::one);
        let f = FieldSpec::rationals();
        let x = Fe::from_rational(&f, &xi).expect("char 0");
        SpecTarget::new(&format!("rational:{xi}"), e, f, x, None)
    }
}

/// Registry of target families: `fp`, `cyclotomic`, `rational`.
pub fn target_families() -> Registry<dyn TargetFamily> {
    let mut r: Registry<dyn TargetFamily> = Registry::new("specialization target");
    r.register("fp", "prime field F_p (or F_p²), `fp:p` searches ξ, `fp:p:xi` fixes it", || {
        Arc::new(PrimeFamily) as Arc<dyn TargetFamily>
    });
    r.register("cyclotomic", "Q(ζ_e) with ξ = ζ_e (Q(ζ_2e) for even e)", || Arc::new(CyclotomicFamily) as Arc<dyn TargetFamily>);
    r.register("rational", "Q with `rational:xi`; no ξ ∈ Q has finite quantum characteristic ≥ 3", || {
        Arc::new(RationalFamily) as Arc<dyn TargetFamily>
    });
    r
}

/// Parse a descriptor such as `fp:3:1`, `fp:7` or `cyclotomic`.
pub fn parse_target(descriptor: &str, e: u32) -> Result<SpecTarget> {
    let mut parts = descriptor.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    target_families().get(family)?.build(e, &args)
}
