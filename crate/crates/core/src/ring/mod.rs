//! Exact arithmetic for graded dimensions.
//!
//! Everything lives on the `(Q, A, T)` exponent lattice with arbitrary
//! precision integer coefficients. The variables `q, a, t` are a presentation
//! layer on top of it.

mod monomial;
mod parse;
mod poly;
pub mod render;
mod series;

use thiserror::Error;

pub use monomial::Monomial;
pub use parse::{parse_poly, ParseError};
pub use poly::LaurentPoly;
pub use render::{from_json, render, to_json, Format};
pub use series::{divide_by_one_minus, DenomVector, GradedSeries};

/// A term that has no `(q, a, t)` presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("monomial {monomial} is off the (q,a,t) sublattice (odd Q or T exponent)")]
pub struct LatticeError {
    pub monomial: Monomial,
}

/// Direction of [`grading_convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradingDirection {
    /// `(Q, A, T)` exponents to `(q, a, t)` exponents.
    ToQat,
    /// `(q, a, t)` exponents to `(Q, A, T)` exponents.
    ToCaps,
}

/// Relabels exponent triples `(x, y, z, coeff)` between the two gradings.
pub fn grading_convert(
    terms: &[(i32, i32, i32, num_bigint::BigInt)],
    direction: GradingDirection,
) -> Result<Vec<(i32, i32, i32, num_bigint::BigInt)>, LatticeError> {
    terms
        .iter()
        .map(|(x, y, z, c)| {
            let (u, v, w) = match direction {
                GradingDirection::ToQat => Monomial::new(*x, *y, *z).to_qat()?,
                GradingDirection::ToCaps => {
                    let m = Monomial::from_qat(*x, *y, *z);
                    (m.q, m.a, m.t)
                }
            };
            Ok((u, v, w, c.clone()))
        })
        .collect()
}

/// Exponent list of a polynomial in `(Q, A, T)` form.
pub fn caps_terms(p: &LaurentPoly) -> Vec<(i32, i32, i32, num_bigint::BigInt)> {
    p.terms().map(|(m, c)| (m.q, m.a, m.t, c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn convert_single_variables() {
        let one = BigInt::from(1);
        let to_caps = |i, j, k| grading_convert(&[(i, j, k, one.clone())], GradingDirection::ToCaps).unwrap()[0].clone();
        assert_eq!(to_caps(1, 0, 0), (2, 0, 0, one.clone()));
        assert_eq!(to_caps(0, 1, 0), (-2, 1, 0, one.clone()));
        assert_eq!(to_caps(0, 0, 1), (-2, 0, 2, one.clone()));
    }

    #[test]
    fn convert_rejects_odd_exponents() {
        let one = BigInt::from(1);
        let err = grading_convert(&[(-4, 1, 1, one)], GradingDirection::ToQat).unwrap_err();
        assert_eq!(err.monomial, Monomial::new(-4, 1, 1));
    }
}
