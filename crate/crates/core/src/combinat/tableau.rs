use super::partition::Partition;
use super::perm::Perm;
use super::residue::{Quantum, ResidueSeq};
use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::fmt;

/// Standard tableau stored by rows, with a position lookup per entry.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StdTableau {
    rows: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
}

impl StdTableau {
    /// Build from rows, checking standardness.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut pos = vec![(usize::MAX, usize::MAX); n];
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() || (r > 0 && row.len() > rows[r - 1].len()) {
                return Err(Error::Domain(format!("{rows:?}: rows do not form a partition")));
            }
            for (c, &k) in row.iter().enumerate() {
                if k == 0 || k > n || pos[k - 1].0 != usize::MAX {
                    return Err(Error::Domain(format!("{rows:?}: not a bijective filling")));
                }
                pos[k - 1] = (r, c);
            }
        }
        let t = StdTableau { rows, pos };
        for (r, row) in t.rows.iter().enumerate() {
            for c in 0..row.len() {
                if (c > 0 && row[c - 1] > row[c]) || (r > 0 && t.rows[r - 1][c] > row[c]) {
                    return Err(Error::Domain(format!("{:?} is not standard", t.rows)));
                }
            }
        }
        Ok(t)
    }

    fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut pos = vec![(0, 0); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &k) in row.iter().enumerate() {
                pos[k - 1] = (r, c);
            }
        }
        StdTableau { rows, pos }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("tableau rows form a partition")
    }

    /// `(row, col)` of entry `m`, 0-based.
    pub fn position(&self, m: usize) -> (usize, usize) {
        self.pos[m - 1]
    }

    /// 1-based row index of `m`.
    pub fn row_of(&self, m: usize) -> usize {
        self.pos[m - 1].0 + 1
    }

    /// 1-based column index of `m`.
    pub fn col_of(&self, m: usize) -> usize {
        self.pos[m - 1].1 + 1
    }

    /// Content `c_m(t) = col − row`.
    pub fn content(&self, m: usize) -> i64 {
        let (r, c) = self.pos[m - 1];
        c as i64 - r as i64
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.n()).map(|m| self.content(m)).collect()
    }

    /// Axial distance `ρ_r(t) = c_r(t) − c_{r+1}(t)`.
    pub fn rho(&self, r: usize) -> i64 {
        self.content(r) - self.content(r + 1)
    }

    pub fn residues(&self, e: Quantum) -> ResidueSeq {
        ResidueSeq::new(e, self.contents())
    }

    /// Transposed tableau `t′`.
    pub fn conjugate(&self) -> StdTableau {
        let cols = self.rows.first().map_or(0, |r| r.len());
        let rows = (0..cols).map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect()).collect();
        StdTableau::from_rows_unchecked(rows)
    }

    /// Restriction `t↓m` to the entries `1..m`.
    pub fn restrict(&self, m: usize) -> StdTableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&k| k <= m).collect::<Vec<_>>())
            .filter(|r| !r.is_empty())
            .collect();
        StdTableau::from_rows_unchecked(rows)
    }

    /// `s_r · t` when standard.
    pub fn swap(&self, r: usize) -> Option<StdTableau> {
        let (a, b) = (self.pos[r - 1], self.pos[r]);
        if a.0 == b.0 || a.1 == b.1 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[a.0][a.1] = r + 1;
        rows[b.0][b.1] = r;
        let mut pos = self.pos.clone();
        pos.swap(r - 1, r);
        Some(StdTableau { rows, pos })
    }

    /// `w · t`: replace each entry `k` by `w(k)`; `None` if the result is not standard.
    pub fn act(&self, w: &Perm) -> Option<StdTableau> {
        let rows = self.rows.iter().map(|r| r.iter().map(|&k| w.apply(k)).collect()).collect();
        StdTableau::from_rows(rows).ok()
    }

    /// Row-reading word.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Tableau dominance: `shape(s↓m) ⊵ shape(t↓m)` for every `m`.
    pub fn dominates(&self, other: &StdTableau) -> bool {
        (1..=self.n()).all(|m| self.restrict(m).shape().dominates_unchecked(&other.restrict(m).shape()))
    }

    /// Row-filled tableau `t^λ`.
    pub fn row_tableau(lambda: &Partition) -> StdTableau {
        let mut k = 0;
        let rows = lambda
            .parts()
            .iter()
            .map(|&l| {
                (0..l)
                    .map(|_| {
                        k += 1;
                        k
                    })
                    .collect()
            })
            .collect();
        StdTableau::from_rows_unchecked(rows)
    }

    /// Column-filled tableau `t_λ`.
    pub fn col_tableau(lambda: &Partition) -> StdTableau {
        Self::row_tableau(&lambda.conjugate()).conjugate()
    }

    /// 2 lies in the first row (`res(t) ∈ I⁺` for `e ≥ 3`).
    pub fn is_plus(&self) -> bool {
        self.n() >= 2 && self.pos[1].0 == 0
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl Serialize for StdTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

/// Standard tableaux of shape `λ`, sorted by row-reading word.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StdTableau> {
    let n = lambda.n();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|_| Vec::new()).collect();
    fn rec(k: usize, n: usize, lambda: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StdTableau>) {
        if k > n {
            out.push(StdTableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            if len < lambda.row(r) && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                rec(k + 1, n, lambda, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(1, n, lambda, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}
