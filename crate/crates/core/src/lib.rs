//! Graph k-coalescences: construction, structural invariants, exact A_α
//! characteristic polynomials and spectra, and topological indices, together
//! with checkers that compare closed-form predictions against brute force.

pub mod coalescence;
pub mod error;
pub mod graph;
pub mod indices;
pub mod random;
pub mod spectra;
pub mod structural;
pub mod verify;

pub use coalescence::{build_family, coalesce, CliqueSpec, CoalescenceFamily, CoalescenceRecord};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, FamilyKind, Graph};
pub use indices::{IndexKind, IndexReport};
pub use spectra::{Alpha, RationalMatrix, RationalPolynomial, SpectrumReport};
pub use structural::{SearchLimits, StructureReport};
pub use verify::{RowStatus, VerificationRow};
