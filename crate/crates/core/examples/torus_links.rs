//! Poincaré series of a few positive torus links in each output format.
//!
//! ```sh
//! cargo run -p tlh --example torus_links
//! ```

use tlh::links::{normalization_shift, normalized_homology, torus_link_homology, TorusLinkSpec};
use tlh::recursion::MemoTable;
use tlh::ring::{render, Format, GradedSeries};

fn main() {
    let memo = MemoTable::new();

    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 4)] {
        let spec = TorusLinkSpec::new(m, n).unwrap();
        let p = torus_link_homology(spec, &memo);
        println!("T({m},{n}), {} component(s):", spec.components());
        println!("  {}", render(&p, Format::Human));
    }

    // the first case beyond earlier tables
    let t46 = TorusLinkSpec::new(4, 6).unwrap();
    let p = torus_link_homology(t46, &memo);
    println!("\nT(4,6) as LaTeX:\n{}", render(&p, Format::Latex));
    println!("\nT(4,6) as JSON:\n{}", render(&p, Format::Json));

    // the first few coefficients of the power series
    println!("\nT(2,3) up to q^3: {}", tlh::ring::render::render_poly(&torus_link_homology(TorusLinkSpec::new(2, 3).unwrap(), &memo).expand(3)));

    // normalized invariants live on the finer (Q, A, T) lattice
    let spec = TorusLinkSpec::new(2, 3).unwrap();
    let shift = normalization_shift(spec).unwrap();
    println!("\nnormalization of T(2,3): {}", render(&GradedSeries::monomial(shift), Format::Human));
    println!("normalized: {}", render(&normalized_homology(spec, &memo).unwrap(), Format::Human));

    println!("\n{}", memo.stats());
}
