//! Enumeration and seeded sampling of recursion inputs.

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::fillings::SigmaSeq;
use crate::sequences::{BitString, SeqPair};

fn bits_of(x: u64, len: usize) -> BitString {
    BitString::new((0..len).map(|i| x >> (len - 1 - i) & 1 == 1).collect())
}

/// All binary strings of length `len`.
pub fn all_strings(len: usize) -> impl Iterator<Item = BitString> {
    (0..1u64 << len).map(move |x| bits_of(x, len))
}

/// Every valid pair with `|v| <= max_v` and `|w| <= max_w` (lengths), in a
/// fixed order.
pub fn all_pairs(max_v: usize, max_w: usize) -> Vec<SeqPair> {
    let mut out = Vec::new();
    for a in 0..=max_v {
        for b in 0..=max_w {
            for v in all_strings(a) {
                for w in all_strings(b).filter(|w| w.weight() == v.weight()) {
                    out.push(SeqPair::new(v.clone(), w).expect("weights match"));
                }
            }
        }
    }
    out
}

/// Every valid pair with `ℓ(v) + ℓ(w) <= total`.
pub fn pairs_with_total_length(total: usize) -> Vec<SeqPair> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            for v in all_strings(a) {
                for w in all_strings(b).filter(|w| w.weight() == v.weight()) {
                    out.push(SeqPair::new(v.clone(), w).expect("weights match"));
                }
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

fn with_ones(rng: &mut ChaCha8Rng, len: usize, ones: usize) -> BitString {
    let mut bits = vec![false; len];
    for i in sample(rng, len, ones).iter() {
        bits[i] = true;
    }
    BitString::new(bits)
}

/// A random valid pair: lengths uniform in `0..=max_len`, then a pair drawn
/// uniformly among the valid pairs of those lengths.
pub fn random_pair(rng: &mut ChaCha8Rng, max_len: usize) -> SeqPair {
    let a = rng.gen_range(0..=max_len);
    let b = rng.gen_range(0..=max_len);
    let weights: Vec<f64> = (0..=a.min(b)).map(|k| binomial(a, k) * binomial(b, k)).collect();
    let mut x = rng.gen::<f64>() * weights.iter().sum::<f64>();
    let mut k = 0;
    while k + 1 < weights.len() && x >= weights[k] {
        x -= weights[k];
        k += 1;
    }
    let v = with_ones(rng, a, k);
    let w = with_ones(rng, b, k);
    SeqPair::new(v, w).expect("both sides carry k ones")
}

/// A random `σ`: `r` uniform in `1..=max_r`, length uniform in `0..=max_len`,
/// entries uniform in `0..=r`.
pub fn random_sigma(rng: &mut ChaCha8Rng, max_r: u32, max_len: usize) -> SigmaSeq {
    let r = rng.gen_range(1..=max_r);
    let len = rng.gen_range(0..=max_len);
    let entries = (0..len).map(|_| rng.gen_range(0..=r)).collect();
    SigmaSeq::new(r, entries).expect("entries drawn from 0..=r")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn counts() {
        assert_eq!(all_strings(3).count(), 8);
        // lengths 0..=1 each: (,) (0,0) (1,1) (0,) (,0)
        assert_eq!(all_pairs(1, 1).len(), 5);
        assert_eq!(pairs_with_total_length(1).len(), 3);
    }

    #[test]
    fn random_inputs_are_valid_and_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let p = random_pair(&mut a, 16);
            assert!(p.v().len() <= 16 && p.w().len() <= 16);
            assert_eq!(p, random_pair(&mut b, 16));
            let s = random_sigma(&mut a, 5, 6);
            assert!(s.r() <= 5 && s.len() <= 6);
            assert_eq!(s, random_sigma(&mut b, 5, 6));
        }
    }
}
