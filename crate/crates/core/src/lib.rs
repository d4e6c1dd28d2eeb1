//! Exact dimensions and graded characters of Zhu's algebra `A(g; k)` and the
//! C₂-algebra `A₍₂₎(g; k)` for classical Lie algebras.
//!
//! - [`partition`]: partitions and Littlewood-Richardson coefficients
//! - [`root_system`]: classical root data, levels, Weyl dimensions
//! - [`oracle`]: brute-force Laurent characters used as ground truth
//! - [`folding`]: Koike-Terada folding and the `GL_{2m} → Sp_{2m}` rule
//! - [`algebra`]: Zhu / C₂-algebra decompositions and branching formulas
//! - [`verify`]: runnable identity checks with machine-readable reports
//!
//! Heavy sweeps take an [`exec::Strategy`]; the `parallel` feature (on by
//! default) backs [`exec::Strategy::Parallel`] with rayon.

pub mod algebra;
pub mod error;
pub mod exec;
pub mod folding;
pub mod isotypic;
pub mod oracle;
pub mod partition;
pub mod root_system;
pub mod verify;

pub use error::{Error, Result};
pub use exec::Strategy;
pub use isotypic::{Dimensioned, Isotypic, WeightPair};
pub use partition::Partition;
pub use root_system::{BigCount, DominantWeight, Family, RootSystem};
