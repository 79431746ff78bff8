//! Link invariants assembled from the recursion: positive torus links,
//! shuffled links, `Sym^l`-colored torus links and the normalization shift.

use thiserror::Error;

use crate::recursion::{eval_p, MemoTable};
use crate::ring::{DenomVector, GradedSeries, LaurentPoly, Monomial};
use crate::sequences::{BitString, SeqPair, SequenceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("{0}")]
    Domain(String),
    #[error("shuffled links need |v| = |w| = 1, got |v| = {v}, |w| = {w}")]
    Color { v: usize, w: usize },
    #[error("writhe {writhe} + components {components} - strands {strands} is odd")]
    Parity {
        writhe: i64,
        components: i64,
        strands: i64,
    },
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

/// The positive torus link `T(m, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusLinkSpec {
    m: usize,
    n: usize,
}

impl TorusLinkSpec {
    pub fn new(m: i64, n: i64) -> Result<Self, LinkError> {
        if m < 1 || n < 1 {
            return Err(LinkError::Domain(format!(
                "T({m},{n}): only positive torus links are supported (m, n >= 1)"
            )));
        }
        Ok(TorusLinkSpec {
            m: m as usize,
            n: n as usize,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of components, `gcd(m, n)`.
    pub fn components(&self) -> usize {
        gcd(self.m, self.n)
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Braid data entering the normalization `(Q^-4 A T)^((e + c - n)/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizationData {
    pub writhe: i64,
    pub components: i64,
    pub strands: i64,
}

impl NormalizationData {
    /// The braid `X_{m,n}` on `m + n` strands has `m n` positive crossings.
    pub fn torus(spec: TorusLinkSpec) -> Self {
        NormalizationData {
            writhe: (spec.m * spec.n) as i64,
            components: spec.components() as i64,
            strands: (spec.m + spec.n) as i64,
        }
    }

    pub fn shift(&self) -> Result<Monomial, LinkError> {
        let e = self.writhe + self.components - self.strands;
        if e % 2 != 0 {
            return Err(LinkError::Parity {
                writhe: self.writhe,
                components: self.components,
                strands: self.strands,
            });
        }
        let s = (e / 2) as i32;
        Ok(Monomial::new(-4, 1, 1).pow(s))
    }
}

pub fn normalization_shift(spec: TorusLinkSpec) -> Result<Monomial, LinkError> {
    NormalizationData::torus(spec).shift()
}

/// Poincaré series of the homology of `T(m, n)`: `p(0^m, 0^n)`.
pub fn torus_link_homology(spec: TorusLinkSpec, memo: &MemoTable) -> GradedSeries {
    eval_p(&SeqPair::torus(spec.m, spec.n), memo)
}

/// [`torus_link_homology`] shifted by the normalization monomial. The result
/// generally leaves the `(q, a, t)` sublattice.
pub fn normalized_homology(spec: TorusLinkSpec, memo: &MemoTable) -> Result<GradedSeries, LinkError> {
    let shift = normalization_shift(spec)?;
    Ok(torus_link_homology(spec, memo).scale(shift))
}

/// Homology of the link obtained from `T(m, n)` by the shuffle braids of `v`
/// and `w`: `p(v, w) / (1 - q)`, defined for `|v| = |w| = 1`.
pub fn shuffled_link_homology(v: &BitString, w: &BitString, memo: &MemoTable) -> Result<GradedSeries, LinkError> {
    let (a, b) = (v.weight(), w.weight());
    if a != 1 || b != 1 {
        return Err(LinkError::Color { v: a, w: b });
    }
    let p = SeqPair::new(v.clone(), w.clone())?;
    Ok(&eval_p(&p, memo) * &GradedSeries::geometric(1))
}

/// `∏_{i=1}^{l} 1 / (1 - q t^(1-i))`.
pub fn colored_prefactor(l: usize) -> GradedSeries {
    let mut den = DenomVector::empty();
    for i in 1..=l as u32 {
        den.insert(i, 1);
    }
    GradedSeries::new(LaurentPoly::one(), den)
}

/// Which arrangement of the colored strands feeds the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorOrder {
    /// `(1^l 0^(ml-l), 1^l 0^(nl-l))`
    OnesFirst,
    /// `(0^(ml-l) 1^l, 0^(nl-l) 1^l)`
    OnesLast,
}

impl std::fmt::Display for ColorOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ColorOrder::OnesFirst => "ones first",
            ColorOrder::OnesLast => "ones last",
        })
    }
}

impl ColorOrder {
    pub fn pair(self, m: usize, n: usize, l: usize) -> SeqPair {
        let ones = BitString::ones(l);
        let (zm, zn) = (BitString::zeros(m * l - l), BitString::zeros(n * l - l));
        let (v, w) = match self {
            ColorOrder::OnesFirst => (ones.concat(&zm), ones.concat(&zn)),
            ColorOrder::OnesLast => (zm.concat(&ones), zn.concat(&ones)),
        };
        SeqPair::new(v, w).expect("both sides carry l ones")
    }
}

/// Colored invariant in both strand orders, each multiplied by
/// [`colored_prefactor`]. The ones-first order is the primary result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredHomology {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    pub ones_first: GradedSeries,
    pub ones_last: GradedSeries,
}

impl ColoredHomology {
    /// `Some(x)` when `ones_last = x * ones_first` for a monomial `x`.
    pub fn orders_agree_up_to_monomial(&self) -> Option<Monomial> {
        self.ones_last.monomial_ratio(&self.ones_first)
    }

    pub fn get(&self, order: ColorOrder) -> &GradedSeries {
        match order {
            ColorOrder::OnesFirst => &self.ones_first,
            ColorOrder::OnesLast => &self.ones_last,
        }
    }
}

/// `T(m, n)` with one component colored by `Sym^l`, up to an overall
/// monomial (framing is not tracked).
pub fn colored_torus_homology(m: i64, n: i64, l: i64, memo: &MemoTable) -> Result<ColoredHomology, LinkError> {
    if l < 1 {
        return Err(LinkError::Domain(format!("color l = {l} must be at least 1")));
    }
    let spec = TorusLinkSpec::new(m, n)?;
    let (m, n, l) = (spec.m, spec.n, l as usize);
    let pre = colored_prefactor(l);
    let eval = |o: ColorOrder| &pre * &eval_p(&o.pair(m, n, l), memo);
    Ok(ColoredHomology {
        m,
        n,
        l,
        ones_first: eval(ColorOrder::OnesFirst),
        ones_last: eval(ColorOrder::OnesLast),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::unknot;

    fn spec(m: i64, n: i64) -> TorusLinkSpec {
        TorusLinkSpec::new(m, n).unwrap()
    }

    #[test]
    fn rejects_non_positive() {
        assert!(matches!(TorusLinkSpec::new(0, 5), Err(LinkError::Domain(_))));
        assert!(matches!(TorusLinkSpec::new(3, -2), Err(LinkError::Domain(_))));
    }

    #[test]
    fn unknot_value() {
        assert_eq!(torus_link_homology(spec(1, 1), &MemoTable::new()), unknot());
    }

    #[test]
    fn trefoil_value() {
        // t^-1 (1+a)(t + a + q) / (1-q)
        let num = LaurentPoly::from_qat_terms([(0, 0, 1, 1), (0, 1, 0, 1), (1, 0, 0, 1)]);
        let one_plus_a = LaurentPoly::from_qat_terms([(0, 0, 0, 1), (0, 1, 0, 1)]);
        let want = GradedSeries::new(
            (&num * &one_plus_a).scale(Monomial::from_qat(0, 0, -1)),
            DenomVector::factor(1, 1),
        );
        assert_eq!(torus_link_homology(spec(2, 3), &MemoTable::new()), want);
    }

    #[test]
    fn shift_arithmetic() {
        assert_eq!(normalization_shift(spec(2, 3)).unwrap(), Monomial::new(-4, 1, 1));
        assert_eq!(normalization_shift(spec(1, 1)).unwrap(), Monomial::ONE);
        assert_eq!(normalization_shift(spec(2, 2)).unwrap(), Monomial::new(-4, 1, 1));
        // T(4,6): e = 24, c = 2, strands 10 -> s = 8
        assert_eq!(normalization_shift(spec(4, 6)).unwrap(), Monomial::new(-32, 8, 8));
    }

    #[test]
    fn parity_guard() {
        let bad = NormalizationData {
            writhe: 2,
            components: 1,
            strands: 2,
        };
        assert!(matches!(bad.shift(), Err(LinkError::Parity { .. })));
    }

    #[test]
    fn normalized_values() {
        let memo = MemoTable::new();
        assert_eq!(normalized_homology(spec(1, 1), &memo).unwrap(), unknot());
        let tref = torus_link_homology(spec(2, 3), &memo);
        assert_eq!(
            normalized_homology(spec(2, 3), &memo).unwrap(),
            tref.scale(Monomial::new(-4, 1, 1))
        );
        let hopf = torus_link_homology(spec(2, 2), &memo);
        assert_eq!(
            normalized_homology(spec(2, 2), &memo).unwrap(),
            hopf.scale(Monomial::new(-4, 1, 1))
        );
    }

    #[test]
    fn shuffled_examples() {
        let memo = MemoTable::new();
        let bs = |s: &str| s.parse::<BitString>().unwrap();
        assert_eq!(
            shuffled_link_homology(&bs("10"), &bs("10"), &memo).unwrap(),
            torus_link_homology(spec(2, 2), &memo)
        );
        let u = unknot();
        assert_eq!(shuffled_link_homology(&bs("01"), &bs("01"), &memo).unwrap(), &u * &u);
        assert_eq!(
            shuffled_link_homology(&bs("0101"), &bs("01"), &memo),
            Err(LinkError::Color { v: 2, w: 1 })
        );
    }

    #[test]
    fn uncolored_case_matches_torus() {
        let memo = MemoTable::new();
        for (m, n) in [(1, 1), (2, 3), (3, 4), (2, 5)] {
            let c = colored_torus_homology(m, n, 1, &memo).unwrap();
            assert_eq!(c.ones_first, torus_link_homology(spec(m, n), &memo));
        }
    }

    #[test]
    fn colored_unknot() {
        let memo = MemoTable::new();
        for l in 1..=4 {
            let c = colored_torus_homology(1, 1, l, &memo).unwrap();
            let mut want = GradedSeries::one();
            for i in 1..=l as u32 {
                let num = crate::recursion::t_pow_plus_a(i as usize - 1);
                want = &want * &GradedSeries::new(num, DenomVector::factor(i, 1));
            }
            assert_eq!(c.ones_first, want);
            assert_eq!(c.ones_last, want);
        }
        assert!(colored_torus_homology(1, 1, 0, &memo).is_err());
    }

    #[test]
    fn color_orders_have_expected_pairs() {
        assert_eq!(ColorOrder::OnesFirst.pair(2, 3, 2).to_string(), "1100|110000");
        assert_eq!(ColorOrder::OnesLast.pair(2, 3, 2).to_string(), "0011|000011");
    }
}
