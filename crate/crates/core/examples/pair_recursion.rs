//! Direct access to p(v, w): rule dispatch, the symmetry p(v,w) = p(w,v),
//! and the shuffle permutations attached to a sequence.
//!
//! ```sh
//! cargo run -p tlh --example pair_recursion
//! ```

use tlh::recursion::{classify_rule, eval_p, eval_p_recursive, MemoTable};
use tlh::ring::{render, Format};
use tlh::sequences::{shuffle_braid_words, shuffle_permutation, SeqPair};

fn main() {
    let memo = MemoTable::new();
    let pairs = [("", ""), ("1", "1"), ("0", "0"), ("10", "10"), ("01", "01"), ("0110", "101"), ("00", "000")];
    for (v, w) in pairs {
        let p = SeqPair::parse(v, w).unwrap();
        let value = eval_p(&p, &memo);
        println!("p({v:?}, {w:?}) [{:?}] = {}", classify_rule(&p), render(&value, Format::Human));
        assert_eq!(value, eval_p(&p.swapped(), &memo));
    }

    // the stack-based evaluator and plain recursion agree
    let p = SeqPair::parse("10010", "0101").unwrap();
    assert_eq!(eval_p(&p, &memo), eval_p_recursive(&p));

    // pairs must carry the same number of ones
    match SeqPair::parse("1", "0") {
        Ok(_) => unreachable!(),
        Err(e) => println!("\n(1, 0): {e}"),
    }

    println!();
    for v in ["1", "10", "01", "0101", "0011"] {
        let bits = v.parse().unwrap();
        let pi = shuffle_permutation(&bits).unwrap();
        let (word, inverse) = shuffle_braid_words(&bits);
        println!("π_{v} = {pi}   braid {word}   inverse {inverse}");
    }

    println!("\n{}", memo.stats());
}
