//! Exact arithmetic in simple extensions `K₀[z]/(m)` with `K₀ = Q` or `F_p`.

use crate::linalg::FieldScalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

/// Prime subfield.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PrimeField {
    Rational,
    Modular(u64),
}

/// Arithmetic of a prime field on its coefficient type.
trait Base {
    type T: Clone + PartialEq + fmt::Debug;
    fn zero(&self) -> Self::T;
    fn from_int(&self, v: i64) -> Self::T;
    fn is_zero(&self, x: &Self::T) -> bool;
    fn add(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn sub(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn mul(&self, a: &Self::T, b: &Self::T) -> Self::T;
    fn inv(&self, a: &Self::T) -> Self::T;
}

struct Rat;

impl Base for Rat {
    type T = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

struct Modp(u64);

impl Base for Modp {
    type T = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut acc, mut base, mut k) = (1u64, *a, self.0 - 2);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }
}

fn trim<B: Base>(b: &B, mut v: Vec<B::T>) -> Vec<B::T> {
    while v.last().is_some_and(|x| b.is_zero(x)) {
        v.pop();
    }
    v
}

fn poly_sub<B: Base>(b: &B, x: &[B::T], y: &[B::T]) -> Vec<B::T> {
    let n = x.len().max(y.len());
    let z = b.zero();
    trim(b, (0..n).map(|k| b.sub(x.get(k).unwrap_or(&z), y.get(k).unwrap_or(&z))).collect())
}

fn poly_mul<B: Base>(b: &B, x: &[B::T], y: &[B::T]) -> Vec<B::T> {
    if x.is_empty() || y.is_empty() {
        return vec![];
    }
    let mut v = vec![b.zero(); x.len() + y.len() - 1];
    for (i, p) in x.iter().enumerate() {
        if b.is_zero(p) {
            continue;
        }
        for (j, q) in y.iter().enumerate() {
            v[i + j] = b.add(&v[i + j], &b.mul(p, q));
        }
    }
    trim(b, v)
}

fn poly_divrem<B: Base>(b: &B, x: &[B::T], y: &[B::T]) -> (Vec<B::T>, Vec<B::T>) {
    let mut r = trim(b, x.to_vec());
    let lead_inv = b.inv(y.last().expect("nonzero divisor"));
    let mut q = vec![b.zero(); r.len().saturating_sub(y.len()) + 1];
    while r.len() >= y.len() && !r.is_empty() {
        let k = r.len() - y.len();
        let c = b.mul(r.last().unwrap(), &lead_inv);
        for (j, yj) in y.iter().enumerate() {
            r[k + j] = b.sub(&r[k + j], &b.mul(&c, yj));
        }
        q[k] = c;
        r = trim(b, r);
    }
    (trim(b, q), r)
}

/// Reduce modulo the monic `m`, padding to `deg m` coefficients.
fn reduce_mod<B: Base>(b: &B, m: &[B::T], v: Vec<B::T>) -> Vec<B::T> {
    let d = m.len() - 1;
    let mut v = if v.len() > d { poly_divrem(b, &v, m).1 } else { v };
    v.resize(d, b.zero());
    v
}

fn mul_mod<B: Base>(b: &B, m: &[B::T], x: &[B::T], y: &[B::T]) -> Vec<B::T> {
    if x.len() == 1 {
        return vec![b.mul(&x[0], &y[0])];
    }
    reduce_mod(b, m, poly_mul(b, x, y))
}

/// Inverse modulo an irreducible `m` by the extended Euclidean algorithm.
fn inv_mod<B: Base>(b: &B, m: &[B::T], x: &[B::T]) -> Option<Vec<B::T>> {
    let (mut r0, mut r1) = (trim(b, m.to_vec()), trim(b, x.to_vec()));
    if r1.is_empty() {
        return None;
    }
    let (mut s0, mut s1) = (Vec::new(), vec![b.from_int(1)]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(b, &r0, &r1);
        let s2 = poly_sub(b, &s0, &poly_mul(b, &q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let k = b.inv(&r0[0]);
    Some(reduce_mod(b, m, s0.iter().map(|x| b.mul(x, &k)).collect()))
}

/// Coefficient vectors over the prime field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Coeffs {
    Rat(Vec<BigRational>),
    Mod(Vec<u64>),
}

/// `K₀[z]/(m)` for a monic irreducible `m`; degree 1 is the prime field itself.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldSpec {
    pub prime: PrimeField,
    /// Coefficients of `m`, low degree first, monic.
    modulus: Coeffs,
    /// Display name, e.g. `F_7`, `F_25`, `Q(ζ_3)`.
    pub name: String,
    /// Symbol used for `z` when printing.
    pub var: String,
}

impl FieldSpec {
    pub fn new(prime: PrimeField, modulus: Vec<i64>, name: &str, var: &str) -> Arc<Self> {
        assert!(modulus.len() >= 2 && *modulus.last().unwrap() == 1, "modulus must be monic of degree ≥ 1");
        let modulus = match prime {
            PrimeField::Rational => Coeffs::Rat(modulus.iter().map(|&c| Rat.from_int(c)).collect()),
            PrimeField::Modular(p) => Coeffs::Mod(modulus.iter().map(|&c| Modp(p).from_int(c)).collect()),
        };
        Arc::new(FieldSpec { prime, modulus, name: name.to_string(), var: var.to_string() })
    }

    pub fn rationals() -> Arc<Self> {
        Self::new(PrimeField::Rational, vec![0, 1], "Q", "z")
    }

    pub fn prime_field(p: u64) -> Arc<Self> {
        Self::new(PrimeField::Modular(p), vec![0, 1], &format!("F_{p}"), "z")
    }

    /// `F_p[z]/(z² − r)` for a non-residue `r`.
    pub fn quadratic_extension(p: u64, r: u64) -> Arc<Self> {
        Self::new(PrimeField::Modular(p), vec![-(r as i64), 0, 1], &format!("F_{}", p * p), "z")
    }

    /// `Q[z]/Φ_m(z)`.
    pub fn cyclotomic(m: u32) -> Arc<Self> {
        Self::new(PrimeField::Rational, cyclotomic_poly(m), &format!("Q(ζ_{m})"), &format!("ζ{m}"))
    }

    pub fn degree(&self) -> usize {
        match &self.modulus {
            Coeffs::Rat(v) => v.len() - 1,
            Coeffs::Mod(v) => v.len() - 1,
        }
    }

    /// Number of elements, `None` in characteristic zero.
    pub fn size(&self) -> Option<u128> {
        match self.prime {
            PrimeField::Rational => None,
            PrimeField::Modular(p) => (p as u128).checked_pow(self.degree() as u32),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self.prime {
            PrimeField::Rational => 0,
            PrimeField::Modular(p) => p,
        }
    }
}

/// Element of a [`FieldSpec`], coefficients in the basis `1, z, …, z^{d−1}`.
#[derive(Clone, Debug)]
pub struct Fe {
    field: Arc<FieldSpec>,
    c: Coeffs,
}

impl PartialEq for Fe {
    fn eq(&self, o: &Fe) -> bool {
        self.c == o.c && (Arc::ptr_eq(&self.field, &o.field) || self.field == o.field)
    }
}

impl Eq for Fe {}

impl Fe {
    fn with(&self, c: Coeffs) -> Fe {
        Fe { field: self.field.clone(), c }
    }

    fn constant(field: &Arc<FieldSpec>, c0: Coeffs) -> Fe {
        let d = field.degree();
        let c = match c0 {
            Coeffs::Rat(mut v) => {
                v.resize(d, BigRational::zero());
                Coeffs::Rat(v)
            }
            Coeffs::Mod(mut v) => {
                v.resize(d, 0);
                Coeffs::Mod(v)
            }
        };
        Fe { field: field.clone(), c }
    }

    pub fn zero(field: &Arc<FieldSpec>) -> Fe {
        Self::from_int(field, 0)
    }

    pub fn one(field: &Arc<FieldSpec>) -> Fe {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<FieldSpec>, v: i64) -> Fe {
        match field.prime {
            PrimeField::Rational => Self::constant(field, Coeffs::Rat(vec![Rat.from_int(v)])),
            PrimeField::Modular(p) => Self::constant(field, Coeffs::Mod(vec![Modp(p).from_int(v)])),
        }
    }

    /// Image of a rational; `None` if its denominator vanishes in the field.
    pub fn from_rational(field: &Arc<FieldSpec>, q: &BigRational) -> Option<Fe> {
        match field.prime {
            PrimeField::Rational => Some(Self::constant(field, Coeffs::Rat(vec![q.clone()]))),
            PrimeField::Modular(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().expect("residue fits");
                let den = q.denom().mod_floor(&pb).to_u64().expect("residue fits");
                if den == 0 {
                    return None;
                }
                let b = Modp(p);
                Some(Self::constant(field, Coeffs::Mod(vec![b.mul(&num, &b.inv(&den))])))
            }
        }
    }

    /// The generator `z`.
    pub fn gen(field: &Arc<FieldSpec>) -> Fe {
        let c = match &field.modulus {
            Coeffs::Rat(m) => Coeffs::Rat(reduce_mod(&Rat, m, vec![Rat.zero(), Rat.from_int(1)])),
            Coeffs::Mod(m) => Coeffs::Mod(reduce_mod(&Modp(field.characteristic()), m, vec![0, 1])),
        };
        x_with(field, c)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.c {
            Coeffs::Rat(v) => v.iter().all(|x| x.is_zero()),
            Coeffs::Mod(v) => v.iter().all(|x| *x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.c {
            Coeffs::Rat(v) => v[0].is_one() && v[1..].iter().all(|x| x.is_zero()),
            Coeffs::Mod(v) => v[0] == 1 && v[1..].iter().all(|x| *x == 0),
        }
    }

    /// Whether the element lies in the prime field.
    pub fn is_prime_field_element(&self) -> bool {
        match &self.c {
            Coeffs::Rat(v) => v[1..].iter().all(|x| x.is_zero()),
            Coeffs::Mod(v) => v[1..].iter().all(|x| *x == 0),
        }
    }

    fn zip(&self, o: &Fe, fr: impl Fn(&BigRational, &BigRational) -> BigRational, fm: impl Fn(&u64, &u64) -> u64) -> Fe {
        match (&self.c, &o.c) {
            (Coeffs::Rat(a), Coeffs::Rat(b)) => self.with(Coeffs::Rat(a.iter().zip(b).map(|(x, y)| fr(x, y)).collect())),
            (Coeffs::Mod(a), Coeffs::Mod(b)) => self.with(Coeffs::Mod(a.iter().zip(b).map(|(x, y)| fm(x, y)).collect())),
            _ => panic!("elements of different fields"),
        }
    }

    pub fn add(&self, o: &Fe) -> Fe {
        let p = self.field.characteristic();
        self.zip(o, |x, y| x + y, |x, y| (x + y) % p)
    }

    pub fn sub(&self, o: &Fe) -> Fe {
        let p = self.field.characteristic();
        self.zip(o, |x, y| x - y, |x, y| (x + p - y) % p)
    }

    pub fn neg(&self) -> Fe {
        Fe::zero(&self.field).sub(self)
    }

    pub fn mul(&self, o: &Fe) -> Fe {
        match (&self.field.modulus, &self.c, &o.c) {
            (Coeffs::Rat(m), Coeffs::Rat(a), Coeffs::Rat(b)) => self.with(Coeffs::Rat(mul_mod(&Rat, m, a, b))),
            (Coeffs::Mod(m), Coeffs::Mod(a), Coeffs::Mod(b)) => {
                self.with(Coeffs::Mod(mul_mod(&Modp(self.field.characteristic()), m, a, b)))
            }
            _ => panic!("elements of different fields"),
        }
    }

    pub fn pow(&self, k: u64) -> Fe {
        let mut acc = Fe::one(&self.field);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// `self^k` for any integer `k`; `None` for a negative power of zero.
    pub fn powi(&self, k: i64) -> Option<Fe> {
        if k >= 0 {
            Some(self.pow(k as u64))
        } else {
            Some(self.inv()?.pow(k.unsigned_abs()))
        }
    }

    pub fn inv(&self) -> Option<Fe> {
        match (&self.field.modulus, &self.c) {
            (Coeffs::Rat(m), Coeffs::Rat(a)) => inv_mod(&Rat, m, a).map(|v| self.with(Coeffs::Rat(v))),
            (Coeffs::Mod(m), Coeffs::Mod(a)) => {
                inv_mod(&Modp(self.field.characteristic()), m, a).map(|v| self.with(Coeffs::Mod(v)))
            }
            _ => unreachable!("coefficient kind follows the field"),
        }
    }

    /// A square root inside the field, if one exists and can be found.
    /// Finite fields are searched exhaustively (up to 4·10⁶ elements);
    /// in characteristic zero only squares of rationals are recognised.
    pub fn sqrt(&self) -> Option<Fe> {
        if self.is_zero() || self.is_one() {
            return Some(self.clone());
        }
        match &self.c {
            Coeffs::Mod(_) => Fe::all_elements(&self.field)?.into_iter().find(|x| x.mul(x) == *self),
            Coeffs::Rat(v) => {
                if !self.is_prime_field_element() || v[0] < BigRational::zero() {
                    return None;
                }
                let (n, d) = (v[0].numer(), v[0].denom());
                let (rn, rd) = (n.sqrt(), d.sqrt());
                if &rn * &rn != *n || &rd * &rd != *d {
                    return None;
                }
                let mut w = v.clone();
                w[0] = BigRational::new(rn, rd);
                Some(self.with(Coeffs::Rat(w)))
            }
        }
    }

    /// Every element of a finite field, in base-`p` digit order.
    pub fn all_elements(f: &Arc<FieldSpec>) -> Option<Vec<Fe>> {
        let size = f.size().filter(|&s| s <= 4_000_000)? as u64;
        let p = f.characteristic();
        let d = f.degree();
        Some(
            (0..size)
                .map(|mut k| {
                    let c = (0..d)
                        .map(|_| {
                            let x = k % p;
                            k /= p;
                            x
                        })
                        .collect();
                    x_with(f, Coeffs::Mod(c))
                })
                .collect(),
        )
    }

    /// `1 + x + … + x^{k−1}`, with `[−k] = −x^{−k}[k]`.
    pub fn quantum_int(&self, k: i64) -> Fe {
        if k >= 0 {
            let mut acc = Fe::zero(&self.field);
            let mut p = Fe::one(&self.field);
            for _ in 0..k {
                acc = acc.add(&p);
                p = p.mul(self);
            }
            acc
        } else {
            let inv = self.inv().expect("nonzero");
            inv.pow(k.unsigned_abs()).mul(&self.quantum_int(-k)).neg()
        }
    }

    /// Least `e ≥ 1` with `[e] = 0`, searched up to `limit`.
    pub fn quantum_characteristic(&self, limit: u32) -> Option<u32> {
        let mut acc = Fe::zero(&self.field);
        let mut p = Fe::one(&self.field);
        for k in 1..=limit {
            acc = acc.add(&p);
            if acc.is_zero() {
                return Some(k);
            }
            p = p.mul(self);
        }
        None
    }

    /// Coefficients as strings, low degree first.
    fn coeff_strings(&self) -> Vec<String> {
        match &self.c {
            Coeffs::Rat(v) => v.iter().map(|x| x.to_string()).collect(),
            Coeffs::Mod(v) => v.iter().map(|x| x.to_string()).collect(),
        }
    }
}

fn x_with(field: &Arc<FieldSpec>, c: Coeffs) -> Fe {
    Fe { field: field.clone(), c }
}

/// Integer coefficients of `Φ_m`, low degree first.
fn cyclotomic_poly(m: u32) -> Vec<i64> {
    let mut num = vec![Rat.zero(); m as usize + 1];
    num[0] = Rat.from_int(-1);
    num[m as usize] = Rat.from_int(1);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi: Vec<BigRational> = cyclotomic_poly(d).into_iter().map(|c| Rat.from_int(c)).collect();
        num = poly_divrem(&Rat, &num, &phi).0;
    }
    num.iter().map(|c| c.to_integer().to_i64().expect("small coefficients")).collect()
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeff_strings()
            .into_iter()
            .enumerate()
            .filter(|(_, x)| x != "0")
            .map(|(k, x)| match k {
                0 => x,
                _ => {
                    let var = if k == 1 { self.field.var.clone() } else { format!("{}^{k}", self.field.var) };
                    if x == "1" {
                        var
                    } else {
                        format!("{x}*{var}")
                    }
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FieldScalar for Fe {
    fn is_zero(&self) -> bool {
        Fe::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Fe::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Fe::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Fe::mul(self, o)
    }
    fn inv(&self) -> Option<Self> {
        Fe::inv(self)
    }
}

/// Whether `p` is prime (trial division; targets use small primes).
pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
