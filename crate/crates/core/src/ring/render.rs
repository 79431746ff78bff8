//! Text encodings of graded series.
//!
//! Human and LaTeX output use the `(q, a, t)` variables whenever every term
//! lies on that sublattice, and fall back to `(Q, A, T)` otherwise (normalized
//! invariants can carry odd powers of `T`). Terms are grouped by `a`-degree,
//! then `t`-degree, then `q`-degree.
//!
//! The JSON encoding is the machine contract:
//! `{"num":[[Q,A,T,coeff],...],"den":[[i,mult],...]}`, numerator sorted
//! lexicographically by `(Q,A,T)`, no whitespace.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::Value;
use thiserror::Error;

use super::{DenomVector, GradedSeries, LaurentPoly, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(Format::Human),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected human, latex or json)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("malformed series json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed series json: {0}")]
    Shape(String),
}

pub fn render(s: &GradedSeries, format: Format) -> String {
    match format {
        Format::Human => render_human(s),
        Format::Latex => render_latex(s),
        Format::Json => to_json(s),
    }
}

/// Exponents of one term in the chosen presentation, listed in the order
/// `(grouping variable, second key, third key)`.
struct Term {
    group: i32,
    mid: i32,
    low: i32,
    coeff: BigInt,
}

#[derive(Clone, Copy)]
struct Vars {
    /// grouping variable, middle, lowest; printed in order low, mid, group
    names: [&'static str; 3],
    qat: bool,
}

const QAT: Vars = Vars {
    names: ["a", "t", "q"],
    qat: true,
};
const CAPS: Vars = Vars {
    names: ["A", "T", "Q"],
    qat: false,
};

fn presentation(p: &LaurentPoly, den: &DenomVector) -> Vars {
    let den_ok = den.iter().all(|(i, _)| DenomVector::factor_monomial(i).on_qat_lattice());
    if p.on_qat_lattice() && den_ok {
        QAT
    } else {
        CAPS
    }
}

fn terms_of(p: &LaurentPoly, vars: Vars) -> Vec<Term> {
    let mut out: Vec<Term> = p
        .terms()
        .map(|(m, c)| {
            let (group, mid, low) = exps(m, vars);
            Term {
                group,
                mid,
                low,
                coeff: c.clone(),
            }
        })
        .collect();
    out.sort_by_key(|t| (t.group, t.mid, t.low));
    out
}

fn exps(m: &Monomial, vars: Vars) -> (i32, i32, i32) {
    if vars.qat {
        let (i, j, k) = m.to_qat().expect("presentation checked the lattice");
        (j, k, i)
    } else {
        (m.a, m.t, m.q)
    }
}

fn power(out: &mut String, name: &str, e: i32, latex: bool, sep: &mut bool) {
    if e == 0 {
        return;
    }
    if *sep && !latex {
        out.push(' ');
    }
    out.push_str(name);
    if e != 1 {
        if latex {
            let _ = write!(out, "^{{{e}}}");
        } else {
            let _ = write!(out, "^{e}");
        }
    }
    *sep = true;
}

/// Writes `|coeff| * monomial` (sign handled by the caller).
fn write_term(out: &mut String, coeff: &BigInt, exps: [i32; 3], vars: Vars, latex: bool) {
    let mag = coeff.abs();
    let is_const = exps.iter().all(|e| *e == 0);
    let mut sep = false;
    if !mag.is_one() || is_const {
        let _ = write!(out, "{mag}");
        sep = true;
    }
    // printed order: lowest key, middle, grouping variable
    power(out, vars.names[2], exps[2], latex, &mut sep);
    power(out, vars.names[1], exps[1], latex, &mut sep);
    power(out, vars.names[0], exps[0], latex, &mut sep);
}

fn join_terms<'a>(terms: impl Iterator<Item = (&'a BigInt, [i32; 3])>, vars: Vars, latex: bool) -> String {
    let mut out = String::new();
    for (n, (c, e)) in terms.enumerate() {
        match (n, c.is_negative()) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        write_term(&mut out, c, e, vars, latex);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn den_factor(i: u32, vars: Vars, latex: bool) -> String {
    let m = DenomVector::factor_monomial(i);
    let (g, mid, low) = exps(&m, vars);
    let mut body = String::new();
    write_term(&mut body, &BigInt::one(), [g, mid, low], vars, latex);
    if latex {
        format!("(1-{body})")
    } else {
        format!("(1 - {body})")
    }
}

fn render_den(den: &DenomVector, vars: Vars, latex: bool) -> String {
    let mut out = String::new();
    for (i, d) in den.iter() {
        out.push_str(&den_factor(i, vars, latex));
        if d > 1 {
            if latex {
                let _ = write!(out, "^{{{d}}}");
            } else {
                let _ = write!(out, "^{d}");
            }
        }
    }
    out
}

pub fn render_poly(p: &LaurentPoly) -> String {
    let vars = presentation(p, &DenomVector::empty());
    let terms = terms_of(p, vars);
    join_terms(terms.iter().map(|t| (&t.coeff, [t.group, t.mid, t.low])), vars, false)
}

fn render_human(s: &GradedSeries) -> String {
    let vars = presentation(s.num(), s.den());
    let terms = terms_of(s.num(), vars);
    let num = join_terms(terms.iter().map(|t| (&t.coeff, [t.group, t.mid, t.low])), vars, false);
    if s.den().is_empty() {
        return num;
    }
    let num = if terms.len() > 1 { format!("({num})") } else { num };
    let den = render_den(s.den(), vars, false);
    if s.den().iter().count() > 1 {
        format!("{num}/({den})")
    } else {
        format!("{num}/{den}")
    }
}

fn render_latex(s: &GradedSeries) -> String {
    let vars = presentation(s.num(), s.den());
    let terms = terms_of(s.num(), vars);
    let mut groups: Vec<(i32, Vec<&Term>)> = Vec::new();
    for t in &terms {
        match groups.last_mut() {
            Some((g, v)) if *g == t.group => v.push(t),
            _ => groups.push((t.group, vec![t])),
        }
    }
    let mut num = String::new();
    for (n, (g, ts)) in groups.iter().enumerate() {
        let body = join_terms(ts.iter().map(|t| (&t.coeff, [0, t.mid, t.low])), vars, true);
        if n > 0 {
            num.push_str(" + ");
        }
        if *g == 0 {
            num.push_str(&body);
            continue;
        }
        let mut var = String::new();
        let mut sep = false;
        power(&mut var, vars.names[0], *g, true, &mut sep);
        if body == "1" {
            num.push_str(&var);
        } else {
            let _ = write!(num, "{var}\\left({body}\\right)");
        }
    }
    if num.is_empty() {
        num.push('0');
    }
    if s.den().is_empty() {
        num
    } else {
        format!("\\frac{{{num}}}{{{}}}", render_den(s.den(), vars, true))
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> String {
    let mut out = String::from("[");
    for (n, (m, c)) in p.terms().enumerate() {
        if n > 0 {
            out.push(',');
        }
        let _ = write!(out, "[{},{},{},{}]", m.q, m.a, m.t, c);
    }
    out.push(']');
    out
}

pub fn to_json(s: &GradedSeries) -> String {
    let mut out = String::from("{\"num\":");
    out.push_str(&poly_to_json(s.num()));
    out.push_str(",\"den\":[");
    for (n, (i, d)) in s.den().iter().enumerate() {
        if n > 0 {
            out.push(',');
        }
        let _ = write!(out, "[{i},{d}]");
    }
    out.push_str("]}");
    out
}

fn int_of(v: &Value) -> Result<BigInt, DecodeError> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| DecodeError::Shape(format!("not an integer: {n}"))),
        other => Err(DecodeError::Shape(format!("expected integer, got {other}"))),
    }
}

fn small_of<T: TryFrom<i64>>(v: &Value) -> Result<T, DecodeError> {
    v.as_i64()
        .and_then(|x| T::try_from(x).ok())
        .ok_or_else(|| DecodeError::Shape(format!("exponent out of range: {v}")))
}

fn rows(v: &Value, width: usize) -> Result<&Vec<Value>, DecodeError> {
    let arr = v
        .as_array()
        .ok_or_else(|| DecodeError::Shape("expected an array".into()))?;
    for row in arr {
        match row.as_array() {
            Some(r) if r.len() == width => {}
            _ => return Err(DecodeError::Shape(format!("expected rows of length {width}"))),
        }
    }
    Ok(arr)
}

pub fn from_json(text: &str) -> Result<GradedSeries, DecodeError> {
    let v: Value = serde_json::from_str(text)?;
    let num_rows = rows(
        v.get("num").ok_or_else(|| DecodeError::Shape("missing `num`".into()))?,
        4,
    )?;
    let den_rows = rows(
        v.get("den").ok_or_else(|| DecodeError::Shape("missing `den`".into()))?,
        2,
    )?;
    let mut num = LaurentPoly::zero();
    for row in num_rows {
        let r = row.as_array().expect("checked");
        let m = Monomial::new(small_of(&r[0])?, small_of(&r[1])?, small_of(&r[2])?);
        num.add_term(m, int_of(&r[3])?);
    }
    let mut den = DenomVector::empty();
    for row in den_rows {
        let r = row.as_array().expect("checked");
        let i: u32 = small_of(&r[0])?;
        if i == 0 {
            return Err(DecodeError::Shape("denominator index 0".into()));
        }
        den.insert(i, small_of(&r[1])?);
    }
    Ok(GradedSeries::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_a() -> LaurentPoly {
        LaurentPoly::from_qat_terms([(0, 0, 0, 1), (0, 1, 0, 1)])
    }

    #[test]
    fn human_polynomial() {
        assert_eq!(render(&GradedSeries::from_poly(one_plus_a()), Format::Human), "1 + a");
    }

    #[test]
    fn human_unknot() {
        let s = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        assert_eq!(render(&s, Format::Human), "(1 + a)/(1 - q)");
    }

    #[test]
    fn json_unknot_bytes() {
        let s = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1));
        assert_eq!(to_json(&s), r#"{"num":[[-2,1,0,1],[0,0,0,1]],"den":[[1,1]]}"#);
        assert_eq!(from_json(&to_json(&s)).unwrap(), s);
    }

    #[test]
    fn json_zero() {
        assert_eq!(to_json(&GradedSeries::zero()), r#"{"num":[],"den":[]}"#);
    }

    #[test]
    fn json_big_coefficients_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let s = GradedSeries::from_poly(LaurentPoly::monomial(Monomial::var_t(), big.clone()));
        let back = from_json(&to_json(&s)).unwrap();
        assert_eq!(back.num().coeff(&Monomial::var_t()), big);
    }

    #[test]
    fn json_rejects_bad_shapes() {
        assert!(from_json(r#"{"num":[[1,2,3]],"den":[]}"#).is_err());
        assert!(from_json(r#"{"num":[],"den":[[0,1]]}"#).is_err());
        assert!(from_json("nope").is_err());
    }

    #[test]
    fn human_mixed_signs_and_denominators() {
        // t^-1 (q - q t) / ((1 - q)^2 (1 - q t^-1))
        let num = LaurentPoly::from_qat_terms([(1, 0, -1, 1), (1, 0, 0, -2)]);
        let mut den = DenomVector::factor(1, 2);
        den.insert(2, 1);
        let s = GradedSeries::new(num, den);
        assert_eq!(render(&s, Format::Human), "(q t^-1 - 2 q)/((1 - q)^2(1 - q t^-1))");
    }

    #[test]
    fn off_lattice_uses_capital_variables() {
        let s = GradedSeries::new(one_plus_a(), DenomVector::factor(1, 1)).scale(Monomial::new(-4, 1, 1));
        assert_eq!(render(&s, Format::Human), "(Q^-4 T A + Q^-6 T A^2)/(1 - Q^2)");
    }

    #[test]
    fn latex_groups_by_a() {
        let num = LaurentPoly::from_qat_terms([(0, 0, 1, 1), (1, 0, 0, 1), (0, 1, 0, 1), (0, 2, 0, 1)]);
        let s = GradedSeries::new(num, DenomVector::factor(1, 1));
        assert_eq!(
            render(&s, Format::Latex),
            "\\frac{q + t + a + a^{2}}{(1-q)}"
        );
        let num = LaurentPoly::from_qat_terms([(0, 1, 1, 1), (1, 1, 0, -1)]);
        assert_eq!(render(&GradedSeries::from_poly(num), Format::Latex), "a\\left(-q + t\\right)");
    }
}
