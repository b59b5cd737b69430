//! Exact combinatorics of genus-one open books and their fillings.
//!
//! Everything here is exact integer / rational arithmetic:
//!
//! * [`farey`] — slopes as reduced fractions, the mediant and determinant
//!   pairings, edges of the Farey graph, clockwise arcs on the boundary of
//!   the hyperbolic disk, and exact enumeration of the neighbors of a slope
//!   inside an arc.
//! * [`mcg`] — words in the two standard twists of the once-punctured torus,
//!   evaluation to integer matrices, the trichotomy of mapping classes, the
//!   fractional twisting number of the boundary computed by exact circle
//!   dynamics, right-veering detection, and recognition of the six normal
//!   forms.
//! * [`surgery`] — solid-torus slope bookkeeping: admissible slopes, the
//!   topological surgery coefficient, transverse framing updates, binding
//!   neighborhood slopes, candidate slopes between a mixed pair, and the
//!   lens-space and small Seifert coefficient conversions.
//! * [`fillability`] — the filling hierarchy (tight, weak, strong,
//!   Liouville, Stein), coefficient windows, and the verdict rules for
//!   surgeries on mixed knots, torsion, fibered knots, and rotative torus
//!   bundles.
//! * [`brieskorn`] — the triangular atlases of tight structures on the two
//!   integer-indexed families of Seifert-fibered homology spheres, with a
//!   fillability status for every cell.

pub mod brieskorn;
mod circle;
pub mod error;
pub mod farey;
pub mod fillability;
pub mod mcg;
pub mod surgery;

pub use error::{Error, Result};
pub use farey::Slope;
pub use mcg::Word;
