//! Exact combinatorics and transforms for ℤ_n-graded noncommutative
//! probability.
//!
//! - [`cyclo`]: exact arithmetic in cyclotomic fields ℚ(ζ_N).
//! - [`partitions`]: set-partition enumeration, crossing statistics and the
//!   cyclic actions whose orbit sums vanish at roots of unity.
//! - [`cumulants`]: the moment/cumulant engine for classical, free and
//!   q-cumulants.
//! - [`series`]: truncated formal power series and the R-type transforms.
//! - [`algebra`]: q-commuting monomial algebras (rotation, generalized
//!   Clifford, graded tensor products) with expectation and grading.
//! - [`cli`]: the `zngraded` command line and its verification suites.
//!
//! Runnable walkthroughs live in `examples/`.

pub mod algebra;
pub mod cli;
pub mod cumulants;
pub mod cyclo;
pub mod io;
pub mod partitions;
pub mod poly;
pub mod scalar;
pub mod series;

pub use cyclo::{root_of_unity, CycloNum};
pub use scalar::{Field, Rational, Ring};
