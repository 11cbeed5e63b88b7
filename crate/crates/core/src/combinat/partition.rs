use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row(0);
        let parts = (0..cols).map(|c| self.parts.iter().filter(|&&l| l > c).count()).collect();
        Partition { parts }
    }

    /// Dominance order; errors on size mismatch.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!("|{self}| ≠ |{other}|")));
        }
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Partition) -> bool {
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for r in 0..k {
            a += self.row(r);
            b += other.row(r);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `μ_r − μ_{r+1} < e` for all rows.
    pub fn is_e_restricted(&self, e: u32) -> bool {
        (0..self.len()).all(|r| self.row(r) - self.row(r + 1) < e as usize)
    }

    /// Boxes `(row, col)` where a node can be added.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (0..=self.len())
            .filter(|&r| r == 0 || self.row(r - 1) > self.row(r))
            .map(|r| (r, self.row(r)))
            .collect()
    }

    /// Boxes `(row, col)` that can be removed.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (0..self.len()).filter(|&r| self.row(r) > self.row(r + 1)).map(|r| (r, self.row(r) - 1)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Free-function form of [`Partition::conjugate`].
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// Free-function form of [`Partition::dominates`].
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    lambda.dominates(mu)
}

/// Free-function form of [`Partition::is_e_restricted`].
pub fn is_e_restricted(mu: &Partition, e: u32) -> bool {
    mu.is_e_restricted(e)
}
