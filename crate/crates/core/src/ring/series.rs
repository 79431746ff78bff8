use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly, Monomial};

/// Multiset of denominator factors. Factor `i >= 1` stands for
/// `1 - q t^(1-i)`, which is `1 - Q^(2i) T^(2-2i)` on the lattice.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DenomVector {
    mult: BTreeMap<u32, u32>,
}

impl DenomVector {
    pub fn empty() -> Self {
        DenomVector::default()
    }

    /// `(1 - q t^(1-i))^mult`.
    ///
    /// Panics if `i == 0`.
    pub fn factor(i: u32, mult: u32) -> Self {
        let mut d = DenomVector::empty();
        d.insert(i, mult);
        d
    }

    /// Adds `mult` copies of factor `i`.
    pub fn insert(&mut self, i: u32, mult: u32) {
        assert!(i >= 1, "denominator factors are indexed from 1");
        if mult > 0 {
            *self.mult.entry(i).or_insert(0) += mult;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn multiplicity(&self, i: u32) -> u32 {
        self.mult.get(&i).copied().unwrap_or(0)
    }

    /// `(factor index, multiplicity)` pairs in ascending factor order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.mult.iter().map(|(i, d)| (*i, *d))
    }

    /// The monomial `M_i = q t^(1-i)` of factor `i`.
    pub fn factor_monomial(i: u32) -> Monomial {
        Monomial::from_qat(1, 0, 1 - i as i32)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &DenomVector) -> DenomVector {
        let mut out = self.clone();
        for (i, d) in other.iter() {
            let e = out.mult.entry(i).or_insert(0);
            *e = (*e).max(d);
        }
        out
    }

    /// Componentwise sum.
    pub fn product(&self, other: &DenomVector) -> DenomVector {
        let mut out = self.clone();
        for (i, d) in other.iter() {
            out.insert(i, d);
        }
        out
    }

    /// Factors needed to bring `self` up to `target`. `target` must dominate.
    fn deficit(&self, target: &DenomVector) -> DenomVector {
        let mut out = DenomVector::empty();
        for (i, d) in target.iter() {
            out.insert(i, d - self.multiplicity(i));
        }
        out
    }

    /// The expanded product of all factors.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (i, d) in self.iter() {
            let f = LaurentPoly::one_minus(Self::factor_monomial(i));
            for _ in 0..d {
                acc = &acc * &f;
            }
        }
        acc
    }

    fn decrement(&mut self, i: u32) {
        if let Some(d) = self.mult.get_mut(&i) {
            *d -= 1;
            if *d == 0 {
                self.mult.remove(&i);
            }
        }
    }
}

/// `num / den` with `den` a product of factors `1 - q t^(1-i)`.
///
/// Values built through the public constructors are canonical: `num` is not
/// divisible by any factor present in `den`, and zero carries an empty
/// denominator. Canonical forms are unique, so derived equality is value
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedSeries {
    num: LaurentPoly,
    den: DenomVector,
}

impl GradedSeries {
    /// Canonicalizing constructor.
    pub fn new(num: LaurentPoly, den: DenomVector) -> Self {
        GradedSeries { num, den }.canonicalize()
    }

    pub fn zero() -> Self {
        GradedSeries::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        GradedSeries {
            num,
            den: DenomVector::empty(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(m.into())
    }

    /// `1 / (1 - q t^(1-i))`.
    pub fn geometric(i: u32) -> Self {
        GradedSeries {
            num: LaurentPoly::one(),
            den: DenomVector::factor(i, 1),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &DenomVector {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divides out every active denominator factor that divides the numerator.
    pub fn canonicalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den = DenomVector::empty();
            return self;
        }
        let active: Vec<u32> = self.den.iter().map(|(i, _)| i).collect();
        for i in active {
            let m = DenomVector::factor_monomial(i);
            while self.den.multiplicity(i) > 0 {
                match divide_by_one_minus(&self.num, m) {
                    Some(quot) => {
                        self.num = quot;
                        self.den.decrement(i);
                    }
                    None => break,
                }
            }
        }
        self
    }

    pub fn scale(&self, m: Monomial) -> Self {
        GradedSeries {
            num: self.num.scale(m),
            den: self.den.clone(),
        }
    }

    /// Numerator over `target`, which must dominate `self.den`.
    fn numerator_over(&self, target: &DenomVector) -> LaurentPoly {
        let extra = self.den.deficit(target);
        if extra.is_empty() {
            self.num.clone()
        } else {
            &self.num * &extra.to_poly()
        }
    }

    /// Equality by cross-multiplication; agrees with `==` on canonical values
    /// and also holds across different representations.
    pub fn value_eq(&self, other: &GradedSeries) -> bool {
        &self.num * &other.den.to_poly() == &other.num * &self.den.to_poly()
    }

    /// `Some(m)` when `self == m * other` for a monomial `m`.
    pub fn monomial_ratio(&self, other: &GradedSeries) -> Option<Monomial> {
        if self.den != other.den {
            return None;
        }
        self.num.monomial_ratio(&other.num)
    }

    pub fn has_even_t_exponents(&self) -> bool {
        self.num.has_even_t_exponents()
    }

    /// Geometric-series expansion, keeping every term of `q`-degree at most
    /// `max_q_degree`.
    pub fn expand(&self, max_q_degree: u32) -> LaurentPoly {
        let limit = 2 * max_q_degree as i64;
        let Some(low) = self.num.min_doubled_q_degree() else {
            return LaurentPoly::zero();
        };
        if low > limit {
            return LaurentPoly::zero();
        }
        // each denominator monomial has q-degree exactly one
        let steps = ((limit - low) / 2) as u32;
        let mut series = LaurentPoly::one();
        for (i, d) in self.den.iter() {
            let m = DenomVector::factor_monomial(i);
            let factor = LaurentPoly::from_terms(
                (0..=steps).map(|k| (m.pow(k as i32), binomial(k + d - 1, d - 1))),
            );
            series = (&series * &factor).filter(|x| x.doubled_q_degree() <= 2 * steps as i64);
        }
        (&self.num * &series).filter(|x| x.doubled_q_degree() <= limit)
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Exact quotient `num / (1 - m)`, or `None` when `1 - m` does not divide.
///
/// Terms are grouped into lines `base + k*m`. Along each line the numerator
/// coefficients must sum to zero and the quotient coefficients are their
/// prefix sums.
pub fn divide_by_one_minus(num: &LaurentPoly, m: Monomial) -> Option<LaurentPoly> {
    if m.is_one() {
        return None;
    }
    let axis = |x: &Monomial| -> (i32, i32) {
        if m.q != 0 {
            (x.q, m.q)
        } else if m.a != 0 {
            (x.a, m.a)
        } else {
            (x.t, m.t)
        }
    };
    let mut lines: HashMap<Monomial, Vec<(i32, &BigInt)>> = HashMap::new();
    for (x, c) in num.terms() {
        let (xc, mc) = axis(x);
        let k = xc.div_euclid(mc);
        let base = *x * m.pow(-k);
        lines.entry(base).or_default().push((k, c));
    }
    let mut quot = LaurentPoly::zero();
    for (base, mut pts) in lines {
        pts.sort_unstable_by_key(|(k, _)| *k);
        let mut running = BigInt::zero();
        for (w, (k, c)) in pts.iter().enumerate() {
            running += *c;
            match pts.get(w + 1) {
                None if !running.is_zero() => return None,
                None => {}
                Some((next, _)) if !running.is_zero() => {
                    for j in *k..*next {
                        quot.add_term(base * m.pow(j), running.clone());
                    }
                }
                Some(_) => {}
            }
        }
    }
    Some(quot)
}

impl Add for &GradedSeries {
    type Output = GradedSeries;

    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let den = self.den.lcm(&rhs.den);
        let mut num = self.numerator_over(&den);
        num += &rhs.numerator_over(&den);
        GradedSeries::new(num, den)
    }
}

impl Add for GradedSeries {
    type Output = GradedSeries;

    fn add(self, rhs: GradedSeries) -> GradedSeries {
        &self + &rhs
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;

    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries::new(&self.num * &rhs.num, self.den.product(&rhs.den))
    }
}

impl Mul for GradedSeries {
    type Output = GradedSeries;

    fn mul(self, rhs: GradedSeries) -> GradedSeries {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for &GradedSeries {
    type Output = GradedSeries;

    fn mul(self, rhs: &LaurentPoly) -> GradedSeries {
        GradedSeries::new(&self.num * rhs, self.den.clone())
    }
}

impl Neg for &GradedSeries {
    type Output = GradedSeries;

    fn neg(self) -> GradedSeries {
        GradedSeries {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for GradedSeries {
    type Output = GradedSeries;

    fn neg(self) -> GradedSeries {
        -&self
    }
}

impl From<LaurentPoly> for GradedSeries {
    fn from(p: LaurentPoly) -> Self {
        GradedSeries::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_a() -> LaurentPoly {
        LaurentPoly::from_qat_terms([(0, 0, 0, 1), (0, 1, 0, 1)])
    }

    #[test]
    fn additive_identity() {
        let x = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        assert_eq!(&x + &GradedSeries::zero(), x);
    }

    #[test]
    fn cancellation_empties_denominator() {
        let x = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        let z = &x + &(-&x);
        assert!(z.is_zero());
        assert!(z.den().is_empty());
    }

    #[test]
    fn multiplicities_add() {
        let x = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        let sq = &x * &x;
        assert_eq!(sq.den(), &DenomVector::factor(1, 2));
        assert_eq!(sq.num(), &(&one_plus_a() * &one_plus_a()));
    }

    #[test]
    fn exact_factor_cancels() {
        let num = &LaurentPoly::one_minus(Monomial::var_q()) * &one_plus_a();
        let s = GradedSeries::new(num, DenomVector::factor(1, 1));
        assert_eq!(s, GradedSeries::from_poly(one_plus_a()));
    }

    #[test]
    fn coprime_numerator_is_untouched() {
        let s = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        assert_eq!(s.num(), &one_plus_a());
        assert_eq!(s.den().multiplicity(1), 1);
    }

    #[test]
    fn quotient_fills_gaps_along_a_line() {
        // (1 - q^4) / (1 - q) = 1 + q + q^2 + q^3
        let q = Monomial::var_q();
        let num = LaurentPoly::one_minus(q.pow(4));
        let quot = divide_by_one_minus(&num, q).unwrap();
        let expect = LaurentPoly::from_qat_terms((0..4).map(|i| (i, 0, 0, 1)));
        assert_eq!(quot, expect);
        assert!(divide_by_one_minus(&one_plus_a(), q).is_none());
    }

    #[test]
    fn partial_cancellation_keeps_remaining_factor() {
        // (1 - q) / ((1 - q)^2 (1 - q t^-1)) -> 1 / ((1 - q)(1 - q t^-1))
        let mut den = DenomVector::factor(1, 2);
        den.insert(2, 1);
        let s = GradedSeries::new(LaurentPoly::one_minus(Monomial::var_q()), den);
        let mut want = DenomVector::factor(1, 1);
        want.insert(2, 1);
        assert_eq!(s.den(), &want);
        assert!(s.num().is_one());
    }

    #[test]
    fn geometric_expansion() {
        let s = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        let got = s.expand(2);
        let geo = LaurentPoly::from_qat_terms((0..3).map(|i| (i, 0, 0, 1)));
        assert_eq!(got, &one_plus_a() * &geo);
        assert!(GradedSeries::zero().expand(5).is_zero());
    }

    #[test]
    fn expansion_with_multiplicity_two() {
        // 1/(1-q)^2 = sum (k+1) q^k
        let s = GradedSeries::new(LaurentPoly::one(), DenomVector::factor(1, 2));
        let want = LaurentPoly::from_qat_terms((0..5).map(|k| (k, 0, 0, k + 1)));
        assert_eq!(s.expand(4), want);
    }

    #[test]
    fn value_eq_ignores_representation() {
        let s = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        let raw = GradedSeries {
            num: &one_plus_a() * &LaurentPoly::one_minus(Monomial::var_q()),
            den: DenomVector::factor(1, 2),
        };
        assert!(s.value_eq(&raw));
        assert_ne!(s, raw);
        assert_eq!(s, raw.canonicalize());
    }
}
