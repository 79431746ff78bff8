//! Binary sequences, the pairs `(v, w)` indexing the recursion, and shuffle
//! permutations.

mod bits;
mod shuffle;

use thiserror::Error;

pub use bits::{inversions, pair_precedes, parse_int_seq, seq_precedes, BitString, SeqPair};
pub use shuffle::{
    shuffle_braid_words, shuffle_permutation, shuffle_permutation_closed, shuffle_word, Permutation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("weights differ: |v| = {v}, |w| = {w}")]
    WeightMismatch { v: usize, w: usize },
    #[error("empty sequence")]
    EmptyInput,
    #[error("{0}")]
    Parse(String),
}
