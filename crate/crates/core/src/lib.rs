//! Exact Poincaré series of the triply graded Khovanov–Rozansky homology of
//! positive torus links, computed with a recursion on pairs of binary
//! sequences.
//!
//! ```
//! use tlh::links::{torus_link_homology, TorusLinkSpec};
//! use tlh::recursion::MemoTable;
//! use tlh::ring::{render, Format};
//!
//! let memo = MemoTable::new();
//! let trefoil = torus_link_homology(TorusLinkSpec::new(2, 3).unwrap(), &memo);
//! println!("{}", render(&trefoil, Format::Human));
//! ```

pub mod checks;
pub mod cli;
pub mod fillings;
pub mod links;
pub mod recursion;
pub mod ring;
pub mod sequences;
