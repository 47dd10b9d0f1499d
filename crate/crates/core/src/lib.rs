//! Distributions of ascents, descents, double ascents, double descents,
//! peaks and valleys over pattern-avoiding permutations.
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! * [`perm`]: permutations, reduction, pattern containment and the
//!   reverse/complement/sum constructions.
//! * [`stats`]: the six consecutive-pattern statistics.
//! * [`dyck`]: Dyck words with the `st` / `st*` statistics.
//! * [`bijections`]: the maps between pattern classes, Dyck words and
//!   binary words, each with its inverse.
//! * [`generators`]: exhaustive streams of permutations, classes, Dyck
//!   words and binary words.
//! * [`formulas`]: closed forms and exact truncated bivariate series.
//! * [`distributions`]: the brute-force distribution engine and symmetry
//!   checks.
//! * [`verify`]: the registry of checks tying every closed form, series
//!   and bijection to the brute-force oracle.
#![no_std]

extern crate alloc;

pub mod bijections;
pub mod distributions;
pub mod dyck;
pub mod error;
pub mod formulas;
pub mod generators;
pub mod numbers;
pub mod perm;
pub mod series;
pub mod stats;
pub mod verify;

pub use bijections::Bits;
pub use distributions::{DistRow, DistTable, Method};
pub use dyck::{DyckWord, IndecomposableWord, Step};
pub use error::{Error, Result};
pub use formulas::FormulaId;
pub use generators::{Caps, ClassSpec, GenMethod};
pub use perm::{reduce, PatternSet, Perm};
pub use series::BivariateSeries;
pub use stats::StatKind;
pub use verify::VerifyReport;
