//! Exact enumeration of 132-avoiding permutations whose adjacent entries
//! differ by at most `m`.
//!
//! The engine builds a finite system of endpoint states indexed by pairs of
//! thresholds in `{0, .., m-1, ∞}`, solves it exactly over `Q(x)` to obtain
//! the rational generating function `A^(m)(x)`, reads off a linear
//! recurrence, and computes exponential growth constants from the Perron
//! spectral radius of the two large cyclic components of the dependency
//! graph. A brute-force enumerator serves as an independent oracle.
//!
//! ```
//! use bounded_catalan::solver::generating_function;
//!
//! let gf = generating_function(2).unwrap();
//! let terms = gf.series_integers(11).unwrap();
//! assert_eq!(terms.last().unwrap().to_string(), "109");
//! ```

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod growth;
pub mod poly;
pub mod solver;
pub mod system;
pub mod threshold;

pub use error::{Error, Result};
pub use threshold::{StatePair, Threshold};
