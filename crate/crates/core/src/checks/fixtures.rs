//! Published values, transcribed term by term. Each polynomial is stored as
//! its `a`-degree blocks so the text lines up with the printed layout.

use crate::links::{colored_prefactor, ColorOrder};
use crate::recursion::t_pow_plus_a;
use crate::ring::{parse_poly, DenomVector, GradedSeries, LaurentPoly, Monomial};

/// `p(0000, 000000) = t^-8 (1+a) / (1-q)^2 * (B0 + a B1 + a^2 B2 + a^3 B3)`.
pub const T46_BLOCKS: [&str; 4] = [
    "- q^8 t - q^7 t^2 - q^6 t^3 - q^5 t^4 - q^4 t^5 - q^3 t^6 - q^2 t^7 - q t^8 \
     + q^8 + q^7 t + q t^7 + t^8 \
     + q^6 t - q^4 t^3 - q^3 t^4 + q t^6 \
     + q^5 t + 2 q^4 t^2 + 2 q^3 t^3 + 2 q^2 t^4 + q t^5",
    "-q^7 t - q^6 t^2 - q^5 t^3 - q^4 t^4 - q^3 t^5 - q^2 t^6 - q t^7 \
     + q^7 - q^5 t^2 - q^4 t^3 - q^3 t^4 - q^2 t^5 + t^7 \
     + q^6 + q^5 t - q^4 t^2 - 2 q^3 t^3 - q^2 t^4 + q t^5 + t^6 \
     + q^5 + 3 q^4 t + 3 q^3 t^2 + 3 q^2 t^3 + 3 q t^4 + t^5 \
     + q^3 t + q^2 t^2 + q t^3",
    "-q^5 t - q^4 t^2 - q^3 t^3 - q^2 t^4 - q t^5 \
     + q^5 - q^3 t^2 - q^2 t^3 + t^5 \
     + q^4 + q^3 t + q t^3 + t^4 \
     + q^3 + 2 q^2 t + 2 q t^2 + t^3",
    "-q^2 t - q t^2 + q^2 + q t + t^2",
];

/// `Sym^2`-colored trefoil, up to a monomial:
/// `t^-5 (1+a)(t+a) / ((1-q)(1-q t^-1)) * (B0 + a B1 + a^2 B2)`.
pub const TREFOIL_SYM2_BLOCKS: [&str; 3] = ["t^5 + q t^3 + q^2 t + q t^2", "t^3 + q t + t^2 + q", "1"];

/// The configuration that reproduces the colored trefoil display: strand
/// order and whether the `∏ (1 - q t^(1-i))^-1` prefactor is applied.
pub const TREFOIL_SYM2_MATCH: (ColorOrder, bool) = (ColorOrder::OnesFirst, true);

/// `σ = (3,0,1,5)` with `r = 5`.
pub struct SigmaExample {
    pub r: u32,
    pub sigma: &'static [u32],
    pub v: &'static str,
    pub w: &'static str,
}

pub const SIGMA_EXAMPLE: SigmaExample = SigmaExample {
    r: 5,
    sigma: &[3, 0, 1, 5],
    v: "1110",
    w: "010000100100",
};

fn from_blocks(blocks: &[&str]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (k, b) in blocks.iter().enumerate() {
        let p = parse_poly(b).expect("fixture text parses");
        out += &p.scale(Monomial::var_a().pow(k as i32));
    }
    out
}

fn lit(s: &str) -> LaurentPoly {
    parse_poly(s).expect("fixture text parses")
}

pub fn t46_display() -> GradedSeries {
    let num = &(&lit("t^-8") * &lit("1 + a")) * &from_blocks(&T46_BLOCKS);
    GradedSeries::new(num, DenomVector::factor(1, 2))
}

pub fn colored_trefoil_display() -> GradedSeries {
    let pre = &(&lit("t^-5") * &lit("1 + a")) * &lit("t + a");
    let mut den = DenomVector::factor(1, 1);
    den.insert(2, 1);
    GradedSeries::new(&pre * &from_blocks(&TREFOIL_SYM2_BLOCKS), den)
}

/// `∏_{i=1}^{l} (t^(i-1) + a) / (1 - q t^(1-i))`.
pub fn colored_unknot_formula(l: usize) -> GradedSeries {
    let mut num = LaurentPoly::one();
    for i in 0..l {
        num = &num * &t_pow_plus_a(i);
    }
    &colored_prefactor(l) * &GradedSeries::from_poly(num)
}
