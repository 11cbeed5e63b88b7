use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

/// Quantum characteristic: a finite `e ≥ 3` or `∞`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Quantum {
    Finite(u32),
    Infinite,
}

impl Quantum {
    pub fn new(e: u32) -> Result<Self> {
        if e < 3 {
            return Err(Error::Domain(format!("quantum characteristic {e} < 3 is not supported")));
        }
        Ok(Quantum::Finite(e))
    }

    /// Parse `"3"`, `"inf"` or `"∞"`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "oo" => Ok(Quantum::Infinite),
            v => v.parse::<u32>().map_err(|_| Error::Domain(format!("bad e `{v}`"))).and_then(Quantum::new),
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Quantum::Finite(e) => Some(e),
            Quantum::Infinite => None,
        }
    }

    pub fn require_finite(self) -> Result<u32> {
        self.finite().ok_or_else(|| Error::Domain("operation requires finite e".into()))
    }

    /// Reduce an integer to its residue.
    pub fn reduce(self, c: i64) -> i64 {
        match self {
            Quantum::Finite(e) => c.rem_euclid(e as i64),
            Quantum::Infinite => c,
        }
    }
}

impl fmt::Display for Quantum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantum::Finite(e) => write!(f, "{e}"),
            Quantum::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Quantum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantum::Finite(e) => s.serialize_u32(*e),
            Quantum::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum ResidueClass {
    Plus,
    Minus,
    Neither,
}

/// Sequence of residues `(i_1, …, i_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ResidueSeq {
    e: Quantum,
    entries: Vec<i64>,
}

impl ResidueSeq {
    pub fn new(e: Quantum, entries: Vec<i64>) -> Self {
        let entries = entries.into_iter().map(|c| e.reduce(c)).collect();
        ResidueSeq { e, entries }
    }

    /// Parse a compact digit string such as `"012"` (finite `e ≤ 10`) or a comma list.
    pub fn parse(e: Quantum, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Vec<i64> = if s.contains(',') {
            s.split(',').map(|x| x.trim().parse::<i64>()).collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidToken(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as i64).ok_or_else(|| Error::InvalidToken(s.to_string())))
                .collect::<Result<_>>()?
        };
        Ok(Self::new(e, v))
    }

    pub fn e(&self) -> Quantum {
        self.e
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry `i_k` (1-based).
    pub fn at(&self, k: usize) -> i64 {
        self.entries[k - 1]
    }

    pub fn class(&self) -> ResidueClass {
        if self.entries.len() < 2 || self.entries[0] != 0 {
            return ResidueClass::Neither;
        }
        if self.entries[1] == self.e.reduce(1) {
            ResidueClass::Plus
        } else if self.entries[1] == self.e.reduce(-1) {
            ResidueClass::Minus
        } else {
            ResidueClass::Neither
        }
    }

    pub fn neg(&self) -> ResidueSeq {
        ResidueSeq::new(self.e, self.entries.iter().map(|c| -c).collect())
    }

    /// `s_r · i`: swap entries `r` and `r+1` (1-based).
    pub fn swap(&self, r: usize) -> ResidueSeq {
        let mut v = self.entries.clone();
        v.swap(r - 1, r);
        ResidueSeq { e: self.e, entries: v }
    }

    /// Hat lift `î_k`: least nonnegative representative (the entry itself for `e = ∞`).
    pub fn hat(&self, k: usize) -> i64 {
        self.entries[k - 1]
    }

    /// `ρ_r(i) = î_r − î_{r+1}`.
    pub fn rho(&self, r: usize) -> i64 {
        self.hat(r) - self.hat(r + 1)
    }

    /// Quiver edge `a → b` (that is `b = a + 1`).
    pub fn arrow(&self, a: i64, b: i64) -> bool {
        self.e.reduce(a + 1) == b
    }

    /// `i_r → i_{r+1}`.
    pub fn arrow_right(&self, r: usize) -> bool {
        self.arrow(self.at(r), self.at(r + 1))
    }

    /// `i_r ← i_{r+1}`.
    pub fn arrow_left(&self, r: usize) -> bool {
        self.arrow(self.at(r + 1), self.at(r))
    }

    /// Cartan matrix entry `c_{ab}` of the quiver.
    pub fn cartan(&self, a: i64, b: i64) -> i64 {
        if a == b {
            2
        } else if self.arrow(a, b) || self.arrow(b, a) {
            -1
        } else {
            0
        }
    }

    pub fn compact(&self) -> String {
        let small = matches!(self.e, Quantum::Finite(e) if e <= 10);
        if small {
            self.entries.iter().map(|c| c.to_string()).collect()
        } else {
            let v: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
            v.join(",")
        }
    }
}

impl fmt::Display for ResidueSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.compact())
    }
}

impl Serialize for ResidueSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}
