//! Running the built-in check suites from code.
//!
//! ```sh
//! cargo run -p tlh --release --example check_suites
//! ```

use tlh::checks::{run_suite, Suite, SuiteParams};
use tlh::recursion::MemoTable;

fn main() {
    let memo = MemoTable::new();
    let params = SuiteParams {
        seed: 7,
        ..SuiteParams::default()
    };
    let mut ok = true;
    for suite in Suite::ALL {
        let report = run_suite(suite, &params, &memo);
        print!("{report}");
        ok &= report.all_pass();
    }
    println!("\n{}", if ok { "all suites pass" } else { "some suites FAILED" });
    std::process::exit(if ok { 0 } else { 1 });
}
