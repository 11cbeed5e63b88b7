//! Gaussian elimination over any exact field.

use crate::exactfield::ExtScalar;

/// Minimal field interface for elimination.
pub trait FieldScalar: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
}

impl FieldScalar for ExtScalar {
    fn is_zero(&self) -> bool {
        ExtScalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn sub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn inv(&self) -> Option<Self> {
        ExtScalar::inv(self).ok()
    }
}

/// Row-reduce in place; returns pivot columns.
fn eliminate<S: FieldScalar>(rows: &mut [Vec<S>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot is invertible");
        let pivot_row: Vec<S> = rows[r].iter().map(|x| if x.is_zero() { x.clone() } else { x.mul(&inv) }).collect();
        rows[r] = pivot_row;
        for k in 0..rows.len() {
            if k == r || rows[k][c].is_zero() {
                continue;
            }
            let f = rows[k][c].clone();
            for j in c..ncols {
                if !rows[r][j].is_zero() {
                    let v = rows[k][j].sub(&f.mul(&rows[r][j]));
                    rows[k][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of row vectors.
pub fn rank<S: FieldScalar>(rows: &[Vec<S>]) -> usize {
    let mut m = rows.to_vec();
    eliminate(&mut m).len()
}

/// Solve `A x = b` for square nonsingular `A` (rows of `A` given); `None` if singular.
pub fn solve<S: FieldScalar>(a: &[Vec<S>], b: &[S]) -> Option<Vec<S>> {
    let n = a.len();
    let mut m: Vec<Vec<S>> = a.iter().zip(b).map(|(row, x)| {
        let mut r = row.clone();
        r.push(x.clone());
        r
    }).collect();
    let pivots = eliminate(&mut m);
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    Some(m.iter().map(|r| r[n].clone()).collect())
}

/// Determinant of a square matrix.
pub fn determinant<S: FieldScalar>(a: &[Vec<S>], one: S) -> S {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = one;
    for c in 0..n {
        let Some(p) = (c..n).find(|&k| !m[k][c].is_zero()) else {
            return det.sub(&det);
        };
        if p != c {
            m.swap(p, c);
            det = det.sub(&det).sub(&det);
        }
        det = det.mul(&m[c][c]);
        let inv = m[c][c].inv().unwrap();
        for k in c + 1..n {
            if m[k][c].is_zero() {
                continue;
            }
            let f = m[k][c].mul(&inv);
            for j in c..n {
                let v = m[k][j].sub(&f.mul(&m[c][j]));
                m[k][j] = v;
            }
        }
    }
    det
}

/// Incrementally grown row-echelon basis, for span and closure computations.
#[derive(Clone, Debug, Default)]
pub struct Echelon<S> {
    /// `(pivot column, row normalised to 1 at the pivot)`.
    rows: Vec<(usize, Vec<S>)>,
}

impl<S: FieldScalar> Echelon<S> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` modulo the current span; returns the residue.
    pub fn reduce(&self, mut v: Vec<S>) -> Vec<S> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        v
    }

    /// Add `v` if it is outside the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<S>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[p].inv().expect("nonzero pivot is invertible");
        let row: Vec<S> = v.iter().map(|x| if x.is_zero() { x.clone() } else { x.mul(&inv) }).collect();
        for (_, other) in self.rows.iter_mut() {
            if other[p].is_zero() {
                continue;
            }
            let f = other[p].clone();
            for (x, y) in other.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        self.rows.push((p, row));
        true
    }
}
