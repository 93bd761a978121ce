//! Jumping numbers, inner jumping multiplicities, and the (0,1] part of the
//! Hodge spectrum of a central hyperplane arrangement with multiplicities.
//!
//! The computation is purely combinatorial: the arrangement is coned to a
//! projective one, the intersection lattice and a building set give a
//! presentation of the cohomology ring of the wonderful model, and each
//! candidate number is decided by an exact ideal-membership test in the top
//! graded piece. An independent oracle re-derives the jumping set from the
//! affine characterization of multiplier ideals of arrangements
//! (intersections of powers of linear-form ideals with a degree bound), so
//! the two routes can be cross-validated.
//!
//! All arithmetic is exact rational; there is no floating point in the crate.

pub mod arrangement;
pub mod building;
pub mod error;
pub mod jump;
pub mod lattice;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod series;
pub mod subspace;

pub use arrangement::{parse_arrangement, ArrangementInput};
pub use building::{BuildingKind, BuildingSet, Model, NestedSet};
pub use error::Error;
pub use jump::{analyze, AnalyzeOptions, Analysis, JumpReport};
pub use rational::Rat;
