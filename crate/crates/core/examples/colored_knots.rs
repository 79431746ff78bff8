//! Sym^l-colored torus knots. Both strand orders are computed; for the
//! trefoil they are compared against each other.
//!
//! ```sh
//! cargo run -p tlh --example colored_knots
//! ```

use tlh::links::{colored_torus_homology, ColorOrder};
use tlh::recursion::MemoTable;
use tlh::ring::{render, Format};

fn main() {
    let memo = MemoTable::new();

    for l in 1..=3 {
        let c = colored_torus_homology(1, 1, l, &memo).unwrap();
        println!("unknot, l = {l}: {}", render(&c.ones_first, Format::Human));
    }

    let c = colored_torus_homology(2, 3, 2, &memo).unwrap();
    for order in [ColorOrder::OnesFirst, ColorOrder::OnesLast] {
        println!("\ntrefoil, l = 2, {order} {}:", order.pair(2, 3, 2));
        println!("  {}", render(c.get(order), Format::Human));
    }
    match c.orders_agree_up_to_monomial() {
        Some(m) => println!("\nthe orders differ by the monomial {m}"),
        None => println!("\nthe orders are not related by a monomial"),
    }

    println!("\n{}", memo.stats());
}
