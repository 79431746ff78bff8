//! Admissible fillings, the words v(σ) and w(σ), rotation, and a scan of the
//! rotation identities for f and g.
//!
//! ```sh
//! cargo run -p tlh --example fillings
//! ```

use tlh::fillings::{c_statistic, f_sigma, verify_lemma53, Filling, SigmaSeq};
use tlh::recursion::MemoTable;
use tlh::ring::{render, Format};

fn main() {
    let sigma = SigmaSeq::new(5, vec![3, 0, 1, 5]).unwrap();
    let t = Filling::from_sigma(&sigma);
    println!("σ = {sigma}, r = 5\n{t}");
    println!("v = {}  w = {}", t.v(), t.w());
    println!("inv = {}  c = {}  rev = {}", sigma.inversions(), c_statistic(&sigma), sigma.rev());

    // w alone determines the filling
    assert_eq!(Filling::from_w(5, 4, &t.w()).unwrap(), t);

    // the right-most column is empty, so rotation needs a fill bit
    let (zero, one) = t.rotate_both().unwrap();
    println!("\nrotate, fill 0 -> {}\n{zero}", zero.sigma());
    println!("rotate, fill 1 -> {}\n{one}", one.sigma());

    let memo = MemoTable::new();
    let small = SigmaSeq::new(2, vec![1, 0]).unwrap();
    println!("f{small} = {}", render(&f_sigma(&small, &memo), Format::Human));

    let mut checked = 0;
    for r in 1..=2 {
        for n in 0..=3 {
            for s in SigmaSeq::all(r, n) {
                let report = verify_lemma53(&s, &memo);
                assert!(report.all_hold());
                checked += report.checks.len();
            }
        }
    }
    println!("\n{checked} rotation identities hold for r <= 2, N <= 3");
}
