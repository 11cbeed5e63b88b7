use serde::{Serialize, Serializer};
use std::fmt;

/// Permutation of `{1..n}` stored 0-based in one-line notation: `w[i] = w(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// Simple transposition `s_r = (r, r+1)`, 1-based `r`.
    pub fn simple(n: usize, r: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(r - 1, r);
        p
    }

    pub fn from_images(v: Vec<u8>) -> Self {
        Perm(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Image of `k` (1-based in, 1-based out).
    pub fn apply(&self, k: usize) -> usize {
        self.0[k - 1] as usize + 1
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    /// `(self ∘ o)(i) = self(o(i))`.
    pub fn compose(&self, o: &Perm) -> Perm {
        Perm(o.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u8; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w as usize] = i as u8;
        }
        Perm(v)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i as u8 == w)
    }

    /// Coxeter length (number of inversions).
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// `w ∘ s_r`.
    pub fn mul_simple_right(&self, r: usize) -> Perm {
        let mut v = self.0.clone();
        v.swap(r - 1, r);
        Perm(v)
    }

    /// `s_r ∘ w`.
    pub fn mul_simple_left(&self, r: usize) -> Perm {
        Perm(self.0.iter().map(|&x| if x as usize == r - 1 { r as u8 } else if x as usize == r { (r - 1) as u8 } else { x }).collect())
    }

    /// `ℓ(w s_r) > ℓ(w)`.
    pub fn right_ascent(&self, r: usize) -> bool {
        self.0[r - 1] < self.0[r]
    }

    /// `ℓ(s_r w) < ℓ(w)`.
    pub fn left_descent(&self, r: usize) -> bool {
        let inv = self.inverse();
        inv.0[r - 1] > inv.0[r]
    }

    /// Lexicographically least reduced word `[r_1, …, r_k]` with `w = s_{r_1}⋯s_{r_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let inv = w.inverse();
            let r = (1..w.n()).find(|&r| inv.0[r - 1] > inv.0[r]).expect("non-identity has a descent");
            word.push(r);
            w = w.mul_simple_left(r);
        }
        word
    }

    /// Product of simple transpositions `s_{r_1}⋯s_{r_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Perm {
        word.iter().fold(Self::identity(n), |w, &r| w.mul_simple_right(r))
    }

    pub fn word_string(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(|r| format!("s{r}")).collect::<Vec<_>>().join(" ")
        }
    }
}

/// All permutations of `{1..n}` in lexicographic order of one-line notation.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(Perm(cur.clone()));
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k as u8);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.word_string())
    }
}
