use crate::ring::{DenomVector, GradedSeries, LaurentPoly, Monomial};
use crate::sequences::{BitString, SeqPair};

/// Which defining relation determines `p(v, w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleTag {
    /// `p(∅, 0^n) = ((1+a)/(1-q))^n`
    BaseEmptyLeft,
    /// `p(0^m, ∅) = ((1+a)/(1-q))^m`
    BaseEmptyRight,
    /// `p(v1, w1) = (t^l + a) p(v, w)`
    BothEndOne,
    /// `p(v0, w1) = p(v, 1w)`
    ZeroOne,
    /// `p(v1, w0) = p(1v, w)`
    OneZero,
    /// `p(v0, w0) = t^-l p(1v, 1w) + q t^-l p(0v, 0w)`, `l >= 1`
    BothEndZero,
    /// `p(0^m, 0^n) = p(10^(m-1), 10^(n-1)) / (1 - q)`
    AllZeros,
}

pub fn classify_rule(p: &SeqPair) -> RuleTag {
    let (v, w) = (p.v(), p.w());
    match (v.last(), w.last()) {
        (None, _) => RuleTag::BaseEmptyLeft,
        (_, None) => RuleTag::BaseEmptyRight,
        (Some(true), Some(true)) => RuleTag::BothEndOne,
        (Some(false), Some(true)) => RuleTag::ZeroOne,
        (Some(true), Some(false)) => RuleTag::OneZero,
        (Some(false), Some(false)) if v.is_all_zero() && w.is_all_zero() => RuleTag::AllZeros,
        (Some(false), Some(false)) => RuleTag::BothEndZero,
    }
}

/// How a value is assembled from the values of its children.
pub(crate) enum Step {
    Leaf(GradedSeries),
    /// `factor * child`
    Times(LaurentPoly, SeqPair),
    /// `t^-l (c1 + q c2)`
    Split { l: usize, one: SeqPair, zero: SeqPair },
    /// `child / (1 - q)`
    OverOneMinusQ(SeqPair),
}

impl Step {
    pub(crate) fn children(&self) -> Vec<&SeqPair> {
        match self {
            Step::Leaf(_) => vec![],
            Step::Times(_, c) | Step::OverOneMinusQ(c) => vec![c],
            Step::Split { one, zero, .. } => vec![one, zero],
        }
    }
}

/// `(1 + a) / (1 - q)`
pub fn unknot() -> GradedSeries {
    GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1))
}

fn one_plus_a() -> LaurentPoly {
    &LaurentPoly::one() + &LaurentPoly::from(Monomial::var_a())
}

fn unknot_power(n: usize) -> GradedSeries {
    GradedSeries::new(one_plus_a().pow(n as u32), DenomVector::factor(1, n as u32))
}

/// `t^l + a`
pub fn t_pow_plus_a(l: usize) -> LaurentPoly {
    &LaurentPoly::from(Monomial::var_t().pow(l as i32)) + &LaurentPoly::from(Monomial::var_a())
}

pub(crate) fn step(p: &SeqPair) -> Step {
    let (v, w) = (p.v(), p.w());
    match classify_rule(p) {
        RuleTag::BaseEmptyLeft => Step::Leaf(unknot_power(w.len())),
        RuleTag::BaseEmptyRight => Step::Leaf(unknot_power(v.len())),
        RuleTag::BothEndOne => {
            let child = SeqPair::new_unchecked(v.init(), w.init());
            Step::Times(t_pow_plus_a(child.l()), child)
        }
        RuleTag::ZeroOne => Step::Times(
            LaurentPoly::one(),
            SeqPair::new_unchecked(v.init(), w.init().prepend(true)),
        ),
        RuleTag::OneZero => Step::Times(
            LaurentPoly::one(),
            SeqPair::new_unchecked(v.init().prepend(true), w.init()),
        ),
        RuleTag::BothEndZero => {
            let (vi, wi) = (v.init(), w.init());
            Step::Split {
                l: vi.weight(),
                one: SeqPair::new_unchecked(vi.prepend(true), wi.prepend(true)),
                zero: SeqPair::new_unchecked(vi.prepend(false), wi.prepend(false)),
            }
        }
        RuleTag::AllZeros => Step::OverOneMinusQ(SeqPair::new_unchecked(
            BitString::zeros(v.len() - 1).prepend(true),
            BitString::zeros(w.len() - 1).prepend(true),
        )),
    }
}

impl Step {
    /// Combines child values, looked up through `get`.
    pub(crate) fn combine(&self, get: impl Fn(&SeqPair) -> GradedSeries) -> GradedSeries {
        match self {
            Step::Leaf(s) => s.clone(),
            Step::Times(f, c) => {
                let child = get(c);
                if f.is_one() {
                    child
                } else {
                    &child * f
                }
            }
            Step::Split { l, one, zero } => {
                let shift = Monomial::var_t().pow(-(*l as i32));
                let first = get(one);
                let second = get(zero).scale(Monomial::var_q());
                (&first + &second).scale(shift)
            }
            Step::OverOneMinusQ(c) => &get(c) * &GradedSeries::geometric(1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(v: &str, w: &str) -> SeqPair {
        SeqPair::parse(v, w).unwrap()
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_rule(&pair("0000", "000000")), RuleTag::AllZeros);
        assert_eq!(classify_rule(&pair("01", "01")), RuleTag::BothEndOne);
        assert_eq!(classify_rule(&pair("10", "100")), RuleTag::BothEndZero);
        assert_eq!(classify_rule(&pair("", "")), RuleTag::BaseEmptyLeft);
        assert_eq!(classify_rule(&pair("00", "")), RuleTag::BaseEmptyRight);
        assert_eq!(classify_rule(&pair("10", "01")), RuleTag::ZeroOne);
        assert_eq!(classify_rule(&pair("01", "10")), RuleTag::OneZero);
    }

    #[test]
    fn split_has_positive_weight() {
        let p = pair("10", "100");
        match step(&p) {
            Step::Split { l, one, zero } => {
                assert_eq!(l, 1);
                assert_eq!(one, pair("11", "110"));
                assert_eq!(zero, pair("01", "010"));
            }
            _ => panic!("expected a split"),
        }
    }

    #[test]
    fn children_strictly_descend() {
        for len in 0..=8usize {
            for x in 0u32..(1 << len) {
                for cut in 0..=len {
                    let bits: Vec<bool> = (0..len).map(|i| x >> i & 1 == 1).collect();
                    let v = BitString::new(bits[..cut].to_vec());
                    let w = BitString::new(bits[cut..].to_vec());
                    let Ok(p) = SeqPair::new(v, w) else { continue };
                    let s = step(&p);
                    for c in s.children() {
                        assert!(c.descent_key() < p.descent_key(), "{c} !< {p}");
                    }
                }
            }
        }
    }
}
