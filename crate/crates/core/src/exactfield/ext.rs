use super::base::{quantum_int, BaseScalar};
use super::gauss::GaussRat;
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

/// Largest `h` for which a formal root `√[h]` may be adjoined.
pub const MAX_ROOT: u32 = 31;

fn bracket(h: u32) -> &'static BaseScalar {
    static TABLE: OnceLock<Vec<BaseScalar>> = OnceLock::new();
    &TABLE.get_or_init(|| (0..=MAX_ROOT as i64).map(quantum_int).collect())[h as usize]
}

/// Element of `K = Frac(Q(i)[u])[√[2], √[3], …]`.
///
/// Stored as a sorted list of `(mask, coefficient)` where bit `h` of the mask
/// stands for the factor `√[h]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ExtScalar {
    terms: Vec<(u32, BaseScalar)>,
}

impl ExtScalar {
    pub fn zero() -> Self {
        ExtScalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_base(BaseScalar::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_base(BaseScalar::from_int(v))
    }

    pub fn from_base(b: BaseScalar) -> Self {
        Self::monomial(0, b)
    }

    /// `c · ∏_{h ∈ mask} √[h]`.
    pub fn monomial(mask: u32, c: BaseScalar) -> Self {
        assert!(mask & 0b11 == 0, "roots of [0] and [1] are not adjoined");
        if c.is_zero() {
            Self::zero()
        } else {
            ExtScalar { terms: vec![(mask, c)] }
        }
    }

    pub fn i() -> Self {
        Self::from_base(BaseScalar::i())
    }

    pub fn u_pow(k: i64) -> Self {
        Self::from_base(BaseScalar::u_pow(k))
    }

    pub fn t_pow(k: i64) -> Self {
        Self::from_base(BaseScalar::t_pow(k))
    }

    pub fn qint(k: i64) -> Self {
        Self::from_base(quantum_int(k))
    }

    pub fn terms(&self) -> &[(u32, BaseScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Union of all root masks in the support.
    pub fn support_mask(&self) -> u32 {
        self.terms.iter().fold(0, |m, (k, _)| m | k)
    }

    /// Root-free part, if the element has no root components.
    pub fn as_base(&self) -> Option<BaseScalar> {
        match self.terms.as_slice() {
            [] => Some(BaseScalar::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    fn from_terms(mut terms: Vec<(u32, BaseScalar)>) -> Self {
        terms.sort_by_key(|(m, _)| *m);
        let mut out: Vec<(u32, BaseScalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ExtScalar { terms: out }
    }

    pub fn add_ref(&self, o: &ExtScalar) -> ExtScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), o.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => {
                    if ma < mb {
                        out.push((*ma, ca.clone()));
                        a.next();
                    } else if mb < ma {
                        out.push((*mb, cb.clone()));
                        b.next();
                    } else {
                        let s = ca.add(cb);
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ma, ca)), None) => {
                    out.push((*ma, ca.clone()));
                    a.next();
                }
                (None, Some((mb, cb))) => {
                    out.push((*mb, cb.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        ExtScalar { terms: out }
    }

    pub fn neg_ref(&self) -> ExtScalar {
        ExtScalar { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub_ref(&self, o: &ExtScalar) -> ExtScalar {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &ExtScalar) -> ExtScalar {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let mut c = ca.mul(cb);
                let mut common = ma & mb;
                while common != 0 {
                    let h = common.trailing_zeros();
                    c = c.mul(bracket(h));
                    common &= common - 1;
                }
                terms.push((ma ^ mb, c));
            }
        }
        if terms.len() == 1 {
            return ExtScalar { terms };
        }
        Self::from_terms(terms)
    }

    pub fn scale_base(&self, c: &BaseScalar) -> ExtScalar {
        if c.is_zero() {
            return Self::zero();
        }
        ExtScalar { terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect() }
    }

    /// Multiplicative inverse by norm descent over the adjoined roots.
    pub fn inv(&self) -> Result<ExtScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let [(mask, c)] = self.terms.as_slice() {
            // (c √S)^{-1} = c^{-1} √S / ∏_{h∈S} [h]
            let mut d = c.clone();
            let mut m = *mask;
            while m != 0 {
                let h = m.trailing_zeros();
                d = d.mul(bracket(h));
                m &= m - 1;
            }
            return Ok(ExtScalar { terms: vec![(*mask, d.inv().unwrap())] });
        }
        let support = self.support_mask();
        let h = 31 - support.leading_zeros();
        let bit = 1u32 << h;
        let conj = ExtScalar {
            terms: self.terms.iter().map(|(m, c)| (*m, if m & bit != 0 { c.neg() } else { c.clone() })).collect(),
        };
        let norm = self.mul_ref(&conj);
        debug_assert!(norm.support_mask() & bit == 0);
        Ok(conj.mul_ref(&norm.inv()?))
    }

    pub fn div(&self, o: &ExtScalar) -> Result<ExtScalar> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, k: u32) -> ExtScalar {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Galois conjugate negating `√[h]`.
    pub fn conj_root(&self, h: u32) -> ExtScalar {
        let bit = 1u32 << h;
        ExtScalar {
            terms: self.terms.iter().map(|(m, c)| (*m, if m & bit != 0 { c.neg() } else { c.clone() })).collect(),
        }
    }

    /// JSON-friendly component list.
    pub fn components(&self) -> Vec<Component> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let (num, den) = c.num_den_strings();
                Component { subset: mask_to_vec(*m), num, den }
            })
            .collect()
    }
}

/// One `{subset, num, den}` component of the JSON form.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub subset: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl Serialize for ExtScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.components().serialize(s)
    }
}

fn mask_to_vec(m: u32) -> Vec<u32> {
    (0..32).filter(|h| m & (1 << h) != 0).collect()
}

/// The formal root `√[h]`, with `√[−h] = i·u^{−h}·√[h]` for `h > 0`.
pub fn sqrt_bracket(h: i64) -> Result<ExtScalar> {
    if h == 0 {
        return Err(Error::Domain("√[0] is not defined".into()));
    }
    let a = h.unsigned_abs() as u32;
    if a > MAX_ROOT {
        return Err(Error::Domain(format!("√[{h}] exceeds the supported root range")));
    }
    let root = if a == 1 { ExtScalar::one() } else { ExtScalar::monomial(1 << a, BaseScalar::one()) };
    if h > 0 {
        Ok(root)
    } else {
        let c = BaseScalar::i().mul(&BaseScalar::u_pow(h));
        Ok(root.scale_base(&c))
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    c.to_string()
                } else {
                    let roots: Vec<String> = mask_to_vec(*m).iter().map(|h| format!("sqrt[{h}]")).collect();
                    if c.is_one() {
                        roots.join("*")
                    } else {
                        format!("{c}*{}", roots.join("*"))
                    }
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl<'a> $tr<&'a ExtScalar> for &'a ExtScalar {
            type Output = ExtScalar;
            fn $m(self, o: &ExtScalar) -> ExtScalar {
                self.$inner(o)
            }
        }
        impl $tr<ExtScalar> for ExtScalar {
            type Output = ExtScalar;
            fn $m(self, o: ExtScalar) -> ExtScalar {
                self.$inner(&o)
            }
        }
    };
}
forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        self.neg_ref()
    }
}

impl Neg for &ExtScalar {
    type Output = ExtScalar;
    fn neg(self) -> ExtScalar {
        self.neg_ref()
    }
}

impl From<BaseScalar> for ExtScalar {
    fn from(b: BaseScalar) -> Self {
        ExtScalar::from_base(b)
    }
}

impl From<GaussRat> for ExtScalar {
    fn from(g: GaussRat) -> Self {
        ExtScalar::from_base(BaseScalar::from_gauss(g))
    }
}
