//! Exact combinatorics for the Yokonuma–Temperley–Lieb algebra `YTL_{d,n}(u)`.
//!
//! * [`partitions`]: partitions, skew shapes, multipartitions, Catalan numbers.
//! * [`tableaux`]: skew semistandard tableaux and the Littlewood–Richardson
//!   condition, checked by companion tableaux and by lattice words.
//! * [`lr`]: Littlewood–Richardson coefficients, Schur products, Pieri's rule.
//! * [`branching`]: restriction from `G(d,1,n)` to `S_n`, the set `R(d,n)` of
//!   labels of irreducible `YTL_{d,n}` representations, and the dimension of
//!   `YTL_{d,n}`.
//! * [`cli`]: the `ytl` command line.

pub mod branching;
pub mod cli;
pub mod error;
pub mod lr;
pub mod partitions;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{Multipartition, Node, Partition, SkewShape};
