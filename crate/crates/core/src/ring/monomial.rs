use std::fmt;
use std::ops::Mul;

use super::LatticeError;

/// A monomial `Q^q A^a T^t` on the trigrading lattice.
///
/// The derived variables are `q = Q^2`, `a = A Q^-2` and `t = T^2 Q^-2`, so
/// `q^i a^j t^k` sits at `(2i - 2j - 2k, j, 2k)`. Ordering is lexicographic on
/// `(q, a, t)`, which is also the order used by the JSON encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: i32,
    pub a: i32,
    pub t: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, a: 0, t: 0 };

    pub const fn new(q: i32, a: i32, t: i32) -> Self {
        Monomial { q, a, t }
    }

    /// The lattice point of `q^i a^j t^k`.
    pub const fn from_qat(i: i32, j: i32, k: i32) -> Self {
        Monomial {
            q: 2 * i - 2 * j - 2 * k,
            a: j,
            t: 2 * k,
        }
    }

    /// `q`, i.e. `Q^2`.
    pub const fn var_q() -> Self {
        Self::from_qat(1, 0, 0)
    }

    /// `a`, i.e. `A Q^-2`.
    pub const fn var_a() -> Self {
        Self::from_qat(0, 1, 0)
    }

    /// `t`, i.e. `T^2 Q^-2`.
    pub const fn var_t() -> Self {
        Self::from_qat(0, 0, 1)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    /// Whether the point lies on the `(q,a,t)` sublattice.
    pub fn on_qat_lattice(&self) -> bool {
        self.q % 2 == 0 && self.t % 2 == 0
    }

    /// Exponents `(i, j, k)` with `self = q^i a^j t^k`.
    pub fn to_qat(&self) -> Result<(i32, i32, i32), LatticeError> {
        if !self.on_qat_lattice() {
            return Err(LatticeError { monomial: *self });
        }
        Ok((self.q / 2 + self.a + self.t / 2, self.a, self.t / 2))
    }

    /// Twice the `q`-degree, `q + 2a + t`. Every `(q,a,t)` monomial has an even
    /// value here; doubling keeps shifted (normalized) monomials integral.
    pub fn doubled_q_degree(&self) -> i64 {
        self.q as i64 + 2 * self.a as i64 + self.t as i64
    }

    pub fn pow(&self, k: i32) -> Self {
        Monomial::new(self.q * k, self.a * k, self.t * k)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.q + rhs.q, self.a + rhs.a, self.t + rhs.t)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q^{} A^{} T^{}", self.q, self.a, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_variables() {
        assert_eq!(Monomial::var_q(), Monomial::new(2, 0, 0));
        assert_eq!(Monomial::var_a(), Monomial::new(-2, 1, 0));
        assert_eq!(Monomial::var_t(), Monomial::new(-2, 0, 2));
    }

    #[test]
    fn qat_roundtrip() {
        for i in -3..4 {
            for j in -3..4 {
                for k in -3..4 {
                    let m = Monomial::from_qat(i, j, k);
                    assert_eq!(m.to_qat().unwrap(), (i, j, k));
                    assert_eq!(m.doubled_q_degree(), 2 * i as i64);
                }
            }
        }
    }

    #[test]
    fn odd_t_is_off_lattice() {
        let m = Monomial::new(-4, 1, 1);
        assert!(m.to_qat().is_err());
        assert_eq!(m.doubled_q_degree(), -1);
    }
}
