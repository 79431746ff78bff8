use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LatticeError, Monomial};

/// Sparse Laurent polynomial in `Q, A, T` with exact integer coefficients.
///
/// No stored coefficient is ever zero, so structural equality is value
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE, BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        LaurentPoly { terms }
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (m, c) in iter {
            p.add_term(m, c.into());
        }
        p
    }

    /// Builds from `(i, j, k, coeff)` tuples meaning `coeff * q^i a^j t^k`.
    pub fn from_qat_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i32, i32, i32, C)>,
        C: Into<BigInt>,
    {
        Self::from_terms(
            iter.into_iter()
                .map(|(i, j, k, c)| (Monomial::from_qat(i, j, k), c)),
        )
    }

    /// `1 - m`.
    pub fn one_minus(m: Monomial) -> Self {
        let mut p = Self::one();
        p.add_term(m, BigInt::from(-1));
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn add_term_ref(&mut self, m: Monomial, c: &BigInt, negate: bool) {
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(if negate { -c } else { c.clone() });
            }
            Entry::Occupied(mut e) => {
                if negate {
                    *e.get_mut() -= c;
                } else {
                    *e.get_mut() += c;
                }
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    /// Multiplies by a monomial (a pure exponent shift).
    pub fn scale(&self, m: Monomial) -> Self {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    pub fn scale_coeff(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Every exponent of `T` is even.
    pub fn has_even_t_exponents(&self) -> bool {
        self.terms.keys().all(|m| m.t % 2 == 0)
    }

    pub fn on_qat_lattice(&self) -> bool {
        self.terms.keys().all(Monomial::on_qat_lattice)
    }

    /// Terms relabelled as `(i, j, k, coeff)` for `coeff * q^i a^j t^k`.
    pub fn to_qat_terms(&self) -> Result<Vec<(i32, i32, i32, BigInt)>, LatticeError> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let (i, j, k) = m.to_qat()?;
                Ok((i, j, k, c.clone()))
            })
            .collect()
    }

    pub fn min_doubled_q_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::doubled_q_degree).min()
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `Some(m)` when `self == m * other` for a monomial `m`.
    pub fn monomial_ratio(&self, other: &LaurentPoly) -> Option<Monomial> {
        if self.len() != other.len() {
            return None;
        }
        let (m0, _) = self.terms.iter().next()?;
        let (n0, _) = other.terms.iter().next()?;
        let shift = *m0 * n0.inv();
        // shifting preserves the lexicographic order, so terms pair up in order
        let same = self
            .terms
            .iter()
            .zip(other.terms.iter())
            .all(|((m, c), (n, d))| *m == *n * shift && c == d);
        same.then_some(shift)
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(*m, c, false);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term_ref(*m, c, true);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big += small;
        big
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (outer, inner) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (m, c) in &outer.terms {
            for (n, d) in &inner.terms {
                out.add_term(*m * *n, c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m, 1)
    }
}
