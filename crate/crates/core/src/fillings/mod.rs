//! Admissible fillings and the dictionary between sequences
//! `σ ∈ {0, ..., r}^N` and pairs of binary sequences.

mod filling;
mod lemma;

use std::fmt;

use thiserror::Error;

pub use filling::{Cell, Filling};
pub use lemma::{verify_lemma53, Identity, IdentityCheck, Lemma53Report};

use crate::recursion::{eval_p, MemoTable};
use crate::ring::GradedSeries;
use crate::sequences::{inversions, BitString, SeqPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillingError {
    #[error("inadmissible filling: {0}")]
    Admissibility(String),
    #[error("cannot reconstruct filling: {0}")]
    Reconstruction(String),
    #[error("rotation: {0}")]
    FillArg(String),
    #[error("entry {entry} is outside [0, {r}]")]
    Range { entry: u32, r: u32 },
    #[error("the number of rows r must be positive")]
    NoRows,
}

/// A sequence `σ ∈ {0, ..., r}^N`; `σ_i` is the number of zeros above the
/// `1` in column `i` (`σ_i = r` for an empty column).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaSeq {
    r: u32,
    entries: Vec<u32>,
}

impl SigmaSeq {
    pub fn new(r: u32, entries: Vec<u32>) -> Result<Self, FillingError> {
        if r == 0 {
            return Err(FillingError::NoRows);
        }
        if let Some(&entry) = entries.iter().find(|&&e| e > r) {
            return Err(FillingError::Range { entry, r });
        }
        Ok(SigmaSeq { r, entries })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `σ k`. Panics if `k > r`.
    pub fn push(&self, k: u32) -> SigmaSeq {
        assert!(k <= self.r);
        let mut e = self.entries.clone();
        e.push(k);
        SigmaSeq { r: self.r, entries: e }
    }

    /// `k σ`. Panics if `k > r`.
    pub fn prepend(&self, k: u32) -> SigmaSeq {
        assert!(k <= self.r);
        let mut e = Vec::with_capacity(self.len() + 1);
        e.push(k);
        e.extend_from_slice(&self.entries);
        SigmaSeq { r: self.r, entries: e }
    }

    pub fn rev(&self) -> SigmaSeq {
        SigmaSeq {
            r: self.r,
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// Number of occupied columns, `#{i : σ_i < r}`.
    pub fn occupied(&self) -> usize {
        self.entries.iter().filter(|&&e| e < self.r).count()
    }

    pub fn inversions(&self) -> usize {
        inversions(&self.entries)
    }

    /// Every sequence in `{0, ..., r}^n`, lexicographically.
    pub fn all(r: u32, n: usize) -> impl Iterator<Item = SigmaSeq> {
        let total = (r as usize + 1).pow(n as u32);
        (0..total).map(move |mut x| {
            let mut e = vec![0; n];
            for slot in e.iter_mut().rev() {
                *slot = (x % (r as usize + 1)) as u32;
                x /= r as usize + 1;
            }
            SigmaSeq { r, entries: e }
        })
    }
}

impl fmt::Display for SigmaSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn filling_from_sigma(s: &SigmaSeq) -> Filling {
    Filling::from_sigma(s)
}

pub fn sigma_from_filling(t: &Filling) -> SigmaSeq {
    t.sigma()
}

pub fn v_of_sigma(s: &SigmaSeq) -> BitString {
    BitString::new(s.entries.iter().map(|&e| e < s.r).collect())
}

pub fn w_of_sigma(s: &SigmaSeq) -> BitString {
    Filling::from_sigma(s).w()
}

/// `(v(σ), w(σ))`, always of equal weight.
pub fn pair_of_sigma(s: &SigmaSeq) -> SeqPair {
    SeqPair::new(v_of_sigma(s), w_of_sigma(s)).expect("occupied columns match the ones of w")
}

/// `inv(σ) + Σ_{k=1}^{r} C(#{i : k ≤ σ_i ≤ r}, 2)`.
pub fn c_statistic(s: &SigmaSeq) -> usize {
    let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
    let tail: usize = (1..=s.r)
        .map(|k| choose2(s.entries.iter().filter(|&&e| k <= e && e <= s.r).count()))
        .sum();
    s.inversions() + tail
}

/// `f(σ) = p(v(σ), w(σ))`.
pub fn f_sigma(s: &SigmaSeq, memo: &MemoTable) -> GradedSeries {
    eval_p(&pair_of_sigma(s), memo)
}

/// `g(σ) = p(v(σ), w(σ)0)`.
pub fn g_sigma(s: &SigmaSeq, memo: &MemoTable) -> GradedSeries {
    let p = pair_of_sigma(s);
    let q = SeqPair::new(p.v().clone(), p.w().append(false)).expect("appending 0 keeps the weight");
    eval_p(&q, memo)
}
