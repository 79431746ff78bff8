use std::fmt;

use super::{BitString, SequenceError};

/// A permutation of `{1, ..., n}` in one-line notation.
///
/// Products compose right to left: `(x * y)(i) = x(y(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} is not in S_{n}");
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// Checked constructor from one-line images.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self * other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation(other.0.iter().map(|&i| self.apply(i)).collect())
    }

    /// `self ⊔ 1`: fixes the new last point.
    pub fn extend(&self) -> Permutation {
        let mut v = self.0.clone();
        v.push(v.len() + 1);
        Permutation(v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

fn word_product(word: &[usize], n: usize) -> Permutation {
    word.iter()
        .fold(Permutation::identity(n), |acc, &i| acc.compose(&Permutation::simple(i, n)))
}

/// The shuffle permutation of `v`, built letter by letter:
/// `π_{u1} = π_u ⊔ 1` and `π_{u0} = (π_u ⊔ 1) s_{r-1} ⋯ s_{r-l}` where
/// `r = ℓ(u0)` and `l = |u|`.
pub fn shuffle_permutation(v: &BitString) -> Result<Permutation, SequenceError> {
    let bits = v.bits();
    if bits.is_empty() {
        return Err(SequenceError::EmptyInput);
    }
    let mut pi = Permutation::identity(1);
    let mut ones = usize::from(bits[0]);
    for (idx, &b) in bits.iter().enumerate().skip(1) {
        let r = idx + 1;
        pi = pi.extend();
        if !b {
            let cycle: Vec<usize> = (r - ones..r).rev().collect();
            pi = pi.compose(&word_product(&cycle, r));
        } else {
            ones += 1;
        }
    }
    Ok(pi)
}

/// Word of the closed formula `∏_j (s_{i_j - 1} ⋯ s_j)` over the zero
/// positions `i_1 < ⋯ < i_k`; the `j`-th factor is empty when `i_j = j`.
pub fn shuffle_word(v: &BitString) -> Vec<usize> {
    let zeros = v
        .bits()
        .iter()
        .enumerate()
        .filter(|(_, b)| !**b)
        .map(|(i, _)| i + 1);
    let mut word = Vec::new();
    for (j, i) in zeros.enumerate() {
        let j = j + 1;
        word.extend((j..i).rev());
    }
    word
}

/// Evaluates the closed formula for the shuffle permutation.
pub fn shuffle_permutation_closed(v: &BitString) -> Result<Permutation, SequenceError> {
    if v.is_empty() {
        return Err(SequenceError::EmptyInput);
    }
    Ok(word_product(&shuffle_word(v), v.len()))
}

/// Positive braid words (as text) lifting `π_v` and `π_v^{-1}`.
pub fn shuffle_braid_words(v: &BitString) -> (String, String) {
    let word = shuffle_word(v);
    let show = |w: &mut dyn Iterator<Item = &usize>| {
        let s: Vec<String> = w.map(|i| format!("s{i}")).collect();
        if s.is_empty() {
            "1".to_string()
        } else {
            s.join(" ")
        }
    };
    (show(&mut word.iter()), show(&mut word.iter().rev()))
}
