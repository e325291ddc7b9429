//! Exact computation of semi-invariant weight cones of acyclic quivers.
//!
//! The crate computes generic `ext`/`hom` between dimension vectors by
//! Schofield's recursion, decides the generic subdimension relation, and uses
//! both to test membership in the cone `Σ(Q, α)` of weights `σ` for which the
//! semi-invariants of weight `σ` on representations of dimension `α` do not
//! all vanish. For quivers with an involution it also produces the reduced
//! inequality system describing the anti-invariant weights (`σ = −τσ`) of the
//! cone, and removes redundant inequalities with an exact rational simplex.
//!
//! The `examples/` directory has one runnable program per capability:
//! `euler_form`, `generic_ext`, `membership`, `d5hat_inequalities`,
//! `sun_counts` and `redundancy`. The `quiver-cones` binary exposes the same
//! operations on quiver files (see [`cli`]).
//!
//! ```
//! use quiver_cones::{cone, zoo, DimVector, ExtTable};
//!
//! let (q, tau) = zoo::make_d5hat().unwrap();
//! let table = ExtTable::new(&q);
//! let alpha = DimVector::new(vec![1, 1, 1, 1, 1, 1]);
//! let c = cone::counts(&table, &alpha, &[&tau]).unwrap();
//! assert_eq!((c.n1, c.n2, c.n3[0]), (9, 9, 5));
//! ```

pub mod cli;
pub mod cone;
pub mod error;
pub mod io;
pub mod quiver;
pub mod reduce;
pub mod schofield;
pub mod zoo;

pub use error::{Error, Result};
pub use quiver::{DimVector, Involution, OrbitBasis, Quiver, Weight};
pub use schofield::ExtTable;
