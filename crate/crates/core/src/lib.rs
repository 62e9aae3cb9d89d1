//! Exact solution counts and density lower bounds for systems
//! `x ≡ a (mod m)`, `x ≡ b (mod n)` where `a` and `b` range over collections
//! of residue classes, plus two-runner witness times on a circular track.
//!
//! ```
//! use density_crt::collections::{exact_count, CyclicInterval};
//! use density_crt::bounds::bound_intervals;
//!
//! let a = CyclicInterval::new(9, 2, 4).unwrap();
//! let b = CyclicInterval::new(12, 7, 5).unwrap();
//! let h = exact_count(&a.into(), &b.into()).unwrap();
//! assert!(h >= bound_intervals(9, 12, 4, 5).unwrap());
//! ```

pub mod bounds;
pub mod cli;
pub mod collections;
pub mod congruence;
pub mod error;
pub mod runner;

pub use error::{Error, Result};
