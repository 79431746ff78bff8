use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use super::SequenceError;

/// A finite word over `{0, 1}`, read left to right (index 1 first).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    pub fn zeros(n: usize) -> Self {
        BitString(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        BitString(vec![true; n])
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    /// Pairs `i < j` with `v_i = 1`, `v_j = 0`.
    pub fn inversions(&self) -> usize {
        let mut ones = 0;
        let mut inv = 0;
        for &b in &self.0 {
            if b {
                ones += 1;
            } else {
                inv += ones;
            }
        }
        inv
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|b| !*b)
    }

    pub fn last(&self) -> Option<bool> {
        self.0.last().copied()
    }

    /// `self` with its last bit removed.
    pub fn init(&self) -> BitString {
        let mut bits = self.0.clone();
        bits.pop();
        BitString(bits)
    }

    /// `b` followed by `self`.
    pub fn prepend(&self, b: bool) -> BitString {
        let mut bits = Vec::with_capacity(self.len() + 1);
        bits.push(b);
        bits.extend_from_slice(&self.0);
        BitString(bits)
    }

    /// `self` followed by `b`.
    pub fn append(&self, b: bool) -> BitString {
        let mut bits = self.0.clone();
        bits.push(b);
        BitString(bits)
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut bits = self.0.clone();
        bits.extend_from_slice(&other.0);
        BitString(bits)
    }
}

impl FromStr for BitString {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(SequenceError::Parse(format!(
                    "bit strings contain only 0 and 1, found `{other}` in `{s}`"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Pairs `i < j` with `s_i > s_j`.
pub fn inversions<T: Ord>(s: &[T]) -> usize {
    let mut inv = 0;
    for (i, x) in s.iter().enumerate() {
        inv += s[i + 1..].iter().filter(|y| x > *y).count();
    }
    inv
}

/// Parses a comma separated list of non-negative integers. The empty string
/// is the empty sequence.
pub fn parse_int_seq(s: &str) -> Result<Vec<u32>, SequenceError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| SequenceError::Parse(format!("expected a non-negative integer, found `{x}`")))
        })
        .collect()
}

/// A pair `(v, w)` with `|v| = |w|`: the state of the recursion.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeqPair {
    v: BitString,
    w: BitString,
}

impl SeqPair {
    /// Checks the weight condition.
    pub fn new(v: BitString, w: BitString) -> Result<Self, SequenceError> {
        let (a, b) = (v.weight(), w.weight());
        if a != b {
            return Err(SequenceError::WeightMismatch { v: a, w: b });
        }
        Ok(SeqPair { v, w })
    }

    /// Caller guarantees `|v| = |w|`.
    pub(crate) fn new_unchecked(v: BitString, w: BitString) -> Self {
        debug_assert_eq!(v.weight(), w.weight());
        SeqPair { v, w }
    }

    pub fn parse(v: &str, w: &str) -> Result<Self, SequenceError> {
        Self::new(v.parse()?, w.parse()?)
    }

    /// `(0^m, 0^n)`.
    pub fn torus(m: usize, n: usize) -> Self {
        SeqPair {
            v: BitString::zeros(m),
            w: BitString::zeros(n),
        }
    }

    pub fn v(&self) -> &BitString {
        &self.v
    }

    pub fn w(&self) -> &BitString {
        &self.w
    }

    /// The common weight `l`.
    pub fn l(&self) -> usize {
        self.v.weight()
    }

    /// Number of zeros of `v`.
    pub fn m(&self) -> usize {
        self.v.len() - self.l()
    }

    /// Number of zeros of `w`.
    pub fn n(&self) -> usize {
        self.w.len() - self.l()
    }

    pub fn swapped(&self) -> SeqPair {
        SeqPair {
            v: self.w.clone(),
            w: self.v.clone(),
        }
    }

    /// A key that strictly decreases along every edge of the recursion:
    /// total length, then total weight (larger first), then total inversions.
    pub fn descent_key(&self) -> (usize, Reverse<usize>, usize) {
        (
            self.v.len() + self.w.len(),
            Reverse(2 * self.l()),
            self.v.inversions() + self.w.inversions(),
        )
    }
}

impl fmt::Display for SeqPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.v, self.w)
    }
}

impl FromStr for SeqPair {
    type Err = SequenceError;

    /// Parses `"v|w"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (v, w) = s
            .split_once('|')
            .ok_or_else(|| SequenceError::Parse(format!("expected `v|w`, found `{s}`")))?;
        Self::parse(v, w)
    }
}

/// The order on single sequences used for well-foundedness: shorter first,
/// then heavier first, then fewer inversions. Reflexive and transitive.
pub fn seq_precedes(v: &BitString, v2: &BitString) -> bool {
    match v.len().cmp(&v2.len()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => match v.weight().cmp(&v2.weight()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => v.inversions() <= v2.inversions(),
        },
    }
}

/// Componentwise [`seq_precedes`].
pub fn pair_precedes(p: &SeqPair, q: &SeqPair) -> bool {
    seq_precedes(&p.v, &q.v) && seq_precedes(&p.w, &q.w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(bs("").weight(), 0);
        assert_eq!(bs("0101").weight(), 2);
        assert_eq!(bs("1111").weight(), 4);
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(bs("10").inversions(), 1);
        assert_eq!(bs("0011").inversions(), 0);
        // (3,0,1,5): pairs (3,0), (3,1)
        assert_eq!(inversions(&[3, 0, 1, 5]), 2);
        assert_eq!(inversions(&[true, false]), 1);
    }

    #[test]
    fn pair_validation() {
        let p = SeqPair::parse("0101", "0011").unwrap();
        assert_eq!(p.l(), 2);
        assert_eq!(
            SeqPair::parse("1", "0").unwrap_err(),
            SequenceError::WeightMismatch { v: 1, w: 0 }
        );
        let p = SeqPair::parse("", "000").unwrap();
        assert_eq!((p.l(), p.m(), p.n()), (0, 0, 3));
    }

    #[test]
    fn parse_rejects_other_chars() {
        assert!(matches!("012".parse::<BitString>(), Err(SequenceError::Parse(_))));
        assert_eq!("|".parse::<SeqPair>().unwrap(), SeqPair::default());
        assert!("01".parse::<SeqPair>().is_err());
    }

    #[test]
    fn precedes_examples() {
        let p = |a: &str, b: &str| SeqPair::parse(a, b).unwrap();
        assert!(pair_precedes(&p("", ""), &p("0", "0")));
        assert!(pair_precedes(&p("11", "11"), &p("00", "00")));
        assert!(!pair_precedes(&p("00", "00"), &p("11", "11")));
        assert!(pair_precedes(&p("01", "01"), &p("10", "10")));
        assert!(!pair_precedes(&p("10", "10"), &p("01", "01")));
    }

    #[test]
    fn int_sequences() {
        assert_eq!(parse_int_seq("3,0,1,5").unwrap(), vec![3, 0, 1, 5]);
        assert_eq!(parse_int_seq("").unwrap(), Vec::<u32>::new());
        assert!(parse_int_seq("3,-1").is_err());
    }

    #[test]
    fn sorted_iff_no_inversions() {
        for len in 0..8usize {
            for x in 0u32..(1 << len) {
                let v = BitString::new((0..len).map(|i| x >> i & 1 == 1).collect());
                let mut sorted = v.bits().to_vec();
                sorted.sort();
                assert_eq!(v.inversions() == 0, sorted == v.bits());
            }
        }
    }
}
