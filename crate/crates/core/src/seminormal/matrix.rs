use crate::exactfield::ExtScalar;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense square matrix over `ExtScalar`, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    dim: usize,
    data: Vec<ExtScalar>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Self {
        Matrix { dim, data: vec![ExtScalar::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| ExtScalar::one()).collect())
    }

    pub fn diagonal(d: Vec<ExtScalar>) -> Self {
        let mut m = Self::zero(d.len());
        for (k, x) in d.into_iter().enumerate() {
            m.set(k, k, x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &ExtScalar {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: ExtScalar) {
        self.data[i * self.dim + j] = x;
    }

    pub fn entries(&self) -> &[ExtScalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        let d = self.dim;
        let mut m = Self::zero(d);
        for i in 0..d {
            for j in 0..d {
                m.data[j * d + i] = self.data[i * d + j].clone();
            }
        }
        m
    }

    pub fn scale(&self, c: &ExtScalar) -> Matrix {
        if c.is_one() {
            return self.clone();
        }
        Matrix { dim: self.dim, data: self.data.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect() }
    }

    pub fn trace(&self) -> ExtScalar {
        (0..self.dim).fold(ExtScalar::zero(), |acc, k| acc + self.get(k, k).clone())
    }

    /// `tr(self · o)` without forming the product.
    pub fn trace_product(&self, o: &Matrix) -> ExtScalar {
        let d = self.dim;
        let mut acc = ExtScalar::zero();
        for i in 0..d {
            for j in 0..d {
                let a = &self.data[i * d + j];
                let b = &o.data[j * d + i];
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a * b;
                }
            }
        }
        acc
    }

    pub fn mul_ref(&self, o: &Matrix) -> Matrix {
        let d = self.dim;
        assert_eq!(d, o.dim, "matrix size mismatch");
        let mut out = Self::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = &self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &o.data[k * d + j];
                    if !b.is_zero() {
                        let p = a * b;
                        let slot = &mut out.data[i * d + j];
                        *slot = &*slot + &p;
                    }
                }
            }
        }
        out
    }

    fn zip(&self, o: &Matrix, f: impl Fn(&ExtScalar, &ExtScalar) -> ExtScalar) -> Matrix {
        assert_eq!(self.dim, o.dim, "matrix size mismatch");
        Matrix { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }
}

/// Element of `H(S_n)` in the seminormal model: one matrix per partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    blocks: Vec<Matrix>,
}

impl AlgebraElement {
    pub fn from_blocks(blocks: Vec<Matrix>) -> Self {
        AlgebraElement { blocks }
    }

    pub fn zero_like(dims: &[usize]) -> Self {
        AlgebraElement { blocks: dims.iter().map(|&d| Matrix::zero(d)).collect() }
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &Matrix {
        &self.blocks[k]
    }

    pub fn block_mut(&mut self, k: usize) -> &mut Matrix {
        &mut self.blocks[k]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn nnz(&self) -> usize {
        self.blocks.iter().map(|b| b.nnz()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim()).collect()
    }

    pub fn scale(&self, c: &ExtScalar) -> Self {
        AlgebraElement { blocks: self.blocks.iter().map(|b| b.scale(c)).collect() }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        AlgebraElement { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.mul_ref(b)).collect() }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        AlgebraElement { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.zip(b, |x, y| x + y)).collect() }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        AlgebraElement { blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.zip(b, |x, y| x - y)).collect() }
    }

    pub fn neg_ref(&self) -> Self {
        self.scale(&ExtScalar::from_int(-1))
    }

    /// `self · o − o · self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul_ref(o).sub_ref(&o.mul_ref(self))
    }

    /// All entries in a fixed order (block by block, row-major).
    pub fn flatten(&self) -> Vec<ExtScalar> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub fn pow(&self, k: u32, one: &Self) -> Self {
        (0..k).fold(one.clone(), |acc, _| acc.mul_ref(self))
    }
}

macro_rules! elem_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl<'a> $tr<&'a AlgebraElement> for &'a AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, o: &AlgebraElement) -> AlgebraElement {
                self.$inner(o)
            }
        }
        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, o: AlgebraElement) -> AlgebraElement {
                self.$inner(&o)
            }
        }
    };
}
elem_binop!(Add, add, add_ref);
elem_binop!(Sub, sub, sub_ref);
elem_binop!(Mul, mul, mul_ref);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}
