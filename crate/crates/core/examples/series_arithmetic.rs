//! Exact arithmetic with graded series: parsing, canonical forms, power
//! series expansion and the JSON encoding.
//!
//! ```sh
//! cargo run -p tlh --example series_arithmetic
//! ```

use tlh::ring::{from_json, parse_poly, render, to_json, DenomVector, Format, GradedSeries};

fn main() {
    let num = parse_poly("1 - q^2").unwrap();
    let s = GradedSeries::new(num, DenomVector::factor(1, 2));
    // (1 - q^2)/(1 - q)^2 reduces to (1 + q)/(1 - q)
    println!("{}", render(&s, Format::Human));

    let unknot = GradedSeries::new(parse_poly("1 + a").unwrap(), DenomVector::factor(1, 1));
    let two = &unknot * &unknot;
    let sum = &two + &unknot;
    println!("u^2     = {}", render(&two, Format::Human));
    println!("u^2 + u = {}", render(&sum, Format::Human));
    println!("u^2 + u = {}", render(&sum, Format::Latex));

    let second = GradedSeries::new(parse_poly("t + a").unwrap(), DenomVector::factor(2, 1));
    println!("\n(t + a)/(1 - q t^-1) to q^3: {}", tlh::ring::render::render_poly(&second.expand(3)));

    let text = to_json(&sum);
    println!("\njson: {text}");
    assert_eq!(from_json(&text).unwrap(), sum);
}
