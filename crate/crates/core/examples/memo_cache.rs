//! Sharing one memo table between computations, persisting it to disk, and
//! controlling the worker pool.
//!
//! ```sh
//! TLH_THREADS=4 cargo run -p tlh --release --example memo_cache
//! ```

use std::time::Instant;

use tlh::links::{torus_link_homology, TorusLinkSpec};
use tlh::recursion::{build_pool, MemoTable};

fn main() {
    let pool = build_pool();
    println!("{} worker threads", pool.current_num_threads());

    let memo = MemoTable::new();
    pool.install(|| {
        for k in 2..=7 {
            let start = Instant::now();
            torus_link_homology(TorusLinkSpec::new(k, k).unwrap(), &memo);
            println!("T({k},{k}) in {:?}: {}", start.elapsed(), memo.stats());
        }
    });

    let path = std::env::temp_dir().join("tlh-example-memo.txt");
    memo.save(&path).unwrap();
    let reloaded = MemoTable::new();
    let n = reloaded.load(&path).unwrap();
    println!("\nsaved and reloaded {n} entries from {}", path.display());

    // everything below T(7,7) is now a lookup
    let start = Instant::now();
    let again = torus_link_homology(TorusLinkSpec::new(7, 7).unwrap(), &reloaded);
    assert_eq!(again, torus_link_homology(TorusLinkSpec::new(7, 7).unwrap(), &memo));
    println!("T(7,7) from the cache in {:?}: {}", start.elapsed(), reloaded.stats());
    let _ = std::fs::remove_file(path);
}
