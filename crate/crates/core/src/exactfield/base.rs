use super::gauss::GaussRat;
use super::poly::UPoly;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

static DEGREE_CAP: AtomicUsize = AtomicUsize::new(96);

/// Current cap on the `t`-degree of numerators and denominators.
pub fn degree_cap() -> usize {
    DEGREE_CAP.load(Ordering::Relaxed)
}

/// Overwrite the degree cap (in powers of `t`).
pub fn set_degree_cap(cap: usize) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

/// Raise the degree cap to at least `cap`; the default for a model is `4·n·e`.
pub fn ensure_degree_cap(cap: usize) {
    DEGREE_CAP.fetch_max(cap, Ordering::Relaxed);
}

/// Element of `Frac(Q(i)[u])` stored as `u^shift · num / den`.
///
/// Normal form: `num(0) ≠ 0`, `den(0) ≠ 0`, `den` monic, `gcd(num, den) = 1`.
/// Zero is `num = 0, shift = 0, den = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BaseScalar {
    shift: i64,
    num: UPoly,
    den: UPoly,
}

impl BaseScalar {
    pub fn zero() -> Self {
        BaseScalar { shift: 0, num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_gauss(GaussRat::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_gauss(GaussRat::from_int(v))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BaseScalar { shift: 0, num: UPoly::constant(c), den: UPoly::one() }
    }

    /// The Gaussian unit `i`.
    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    /// `u^k` for any integer `k`.
    pub fn u_pow(k: i64) -> Self {
        BaseScalar { shift: k, num: UPoly::one(), den: UPoly::one() }
    }

    /// `t^k = u^{2k}`.
    pub fn t_pow(k: i64) -> Self {
        Self::u_pow(2 * k)
    }

    /// Polynomial in `t` with integer coefficients (low degree first).
    pub fn t_poly(coeffs: &[i64]) -> Self {
        let mut v = vec![0i64; coeffs.len() * 2];
        for (k, c) in coeffs.iter().enumerate() {
            v[2 * k] = *c;
        }
        Self::from_parts(0, UPoly::from_ints(&v), UPoly::one())
    }

    /// Build from raw parts and normalize.
    pub fn from_parts(shift: i64, num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let ln = num.low_order();
        let ld = den.low_order();
        let mut num = num.shift_down(ln);
        let mut den = den.shift_down(ld);
        let shift = shift + ln as i64 - ld as i64;
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.divrem(&g).0;
                den = den.divrem(&g).0;
            }
            let lead = den.lead().unwrap().clone();
            if !lead.is_one() {
                let inv = lead.inv().unwrap();
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        let cap = 2 * degree_cap();
        let dn = num.degree().unwrap_or(0);
        let dd = den.degree().unwrap_or(0);
        if dn > cap || dd > cap {
            panic!("degree cap exceeded: u-degrees {dn}/{dd} above {cap}");
        }
        BaseScalar { shift, num, den }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// Constant Gaussian rational, if this element is one.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.shift == 0 && self.den.is_one() && self.num.degree() == Some(0) {
            return Some(self.num.coeffs()[0].clone());
        }
        None
    }

    pub fn add(&self, o: &BaseScalar) -> BaseScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let m = self.shift.min(o.shift);
        let a = shift_up(&self.num, (self.shift - m) as usize);
        let b = shift_up(&o.num, (o.shift - m) as usize);
        if self.den == o.den {
            return Self::from_parts(m, a.add(&b), self.den.clone());
        }
        let num = a.mul(&o.den).add(&b.mul(&self.den));
        Self::from_parts(m, num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> BaseScalar {
        BaseScalar { shift: self.shift, num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &BaseScalar) -> BaseScalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &BaseScalar) -> BaseScalar {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + o.shift;
        if self.den.is_one() && o.den.is_one() {
            return BaseScalar { shift, num: self.num.mul(&o.num), den: UPoly::one() }.capped();
        }
        // cross-cancel before multiplying so the product is already reduced
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() { (self.num.clone(), o.den.clone()) } else { (self.num.divrem(&g1).0, o.den.divrem(&g1).0) };
        let (n2, d1) = if g2.is_one() { (o.num.clone(), self.den.clone()) } else { (o.num.divrem(&g2).0, self.den.divrem(&g2).0) };
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lead = den.lead().unwrap().clone();
        let (num, den) = if lead.is_one() {
            (num, den)
        } else {
            let inv = lead.inv().unwrap();
            (num.scale(&inv), den.scale(&inv))
        };
        BaseScalar { shift, num, den }.capped()
    }

    fn capped(self) -> Self {
        let cap = 2 * degree_cap();
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        if dn > cap || dd > cap {
            panic!("degree cap exceeded: u-degrees {dn}/{dd} above {cap}");
        }
        self
    }

    pub fn scale(&self, c: &GaussRat) -> BaseScalar {
        if c.is_zero() {
            return Self::zero();
        }
        BaseScalar { shift: self.shift, num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<BaseScalar> {
        if self.is_zero() {
            return None;
        }
        let lead = self.num.lead().unwrap().inv().unwrap();
        Some(BaseScalar {
            shift: -self.shift,
            num: self.den.scale(&lead),
            den: self.num.scale(&lead),
        })
    }

    pub fn pow(&self, k: u32) -> BaseScalar {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// True if only even powers of `u` occur (a function of `t`).
    pub fn is_function_of_t(&self) -> bool {
        self.shift % 2 == 0 && self.num.is_even() && self.den.is_even()
    }

    pub fn is_gaussian_free(&self) -> bool {
        self.num.is_gaussian_free() && self.den.is_gaussian_free()
    }

    /// Numerator including the `u`-shift when nonnegative, as a string in `u`.
    fn parts_with_shift(&self) -> (UPoly, UPoly) {
        if self.shift >= 0 {
            (shift_up(&self.num, self.shift as usize), self.den.clone())
        } else {
            (self.num.clone(), shift_up(&self.den, (-self.shift) as usize))
        }
    }

    /// Numerator and denominator as strings (the `u`-power absorbed into one of them).
    pub fn num_den_strings(&self) -> (String, String) {
        let (n, d) = self.parts_with_shift();
        (n.to_string(), d.to_string())
    }
}

fn shift_up(p: &UPoly, k: usize) -> UPoly {
    if k == 0 || p.is_zero() {
        return p.clone();
    }
    let mut v = vec![super::gauss::GaussRat::zero(); k];
    v.extend_from_slice(p.coeffs());
    UPoly::from_coeffs(v)
}

impl fmt::Display for BaseScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = self.num_den_strings();
        if d == "1" {
            if n.contains(' ') {
                write!(f, "({n})")
            } else {
                write!(f, "{n}")
            }
        } else {
            write!(f, "({n})/({d})")
        }
    }
}

/// Quantum integer `[k] = (t^k − 1)/(t − 1)`.
pub fn quantum_int(k: i64) -> BaseScalar {
    if k == 0 {
        return BaseScalar::zero();
    }
    if k > 0 {
        return BaseScalar::t_poly(&vec![1; k as usize]);
    }
    // [k] = −(t^{−1} + … + t^{k}) = −t^{k}(1 + … + t^{−k−1})
    BaseScalar::t_pow(k).mul(&BaseScalar::t_poly(&vec![1; (-k) as usize])).neg()
}

/// Poincaré polynomial `[1][2]⋯[n]`.
pub fn poincare(n: usize) -> BaseScalar {
    (1..=n as i64).fold(BaseScalar::one(), |acc, k| acc.mul(&quantum_int(k)))
}

/// Lossless serde form of a [`BaseScalar`]: coefficient pairs `(re, im)` as fraction strings.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct RawBase {
    pub shift: i64,
    pub num: Vec<(String, String)>,
    pub den: Vec<(String, String)>,
}

fn raw_poly(p: &UPoly) -> Vec<(String, String)> {
    p.coeffs().iter().map(|c| (c.re.to_string(), c.im.to_string())).collect()
}

fn parse_poly(v: &[(String, String)]) -> Option<UPoly> {
    let coeffs = v
        .iter()
        .map(|(re, im)| Some(GaussRat::new(BigRational::from_str(re).ok()?, BigRational::from_str(im).ok()?)))
        .collect::<Option<Vec<_>>>()?;
    Some(UPoly::from_coeffs(coeffs))
}

impl BaseScalar {
    pub fn to_raw(&self) -> RawBase {
        RawBase { shift: self.shift, num: raw_poly(&self.num), den: raw_poly(&self.den) }
    }

    pub fn from_raw(raw: &RawBase) -> Option<BaseScalar> {
        let den = parse_poly(&raw.den)?;
        if den.is_zero() {
            return None;
        }
        Some(Self::from_parts(raw.shift, parse_poly(&raw.num)?, den))
    }
}
