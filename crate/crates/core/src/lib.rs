//! Finite projective planes and magic labelings over finite Abelian groups.
//!
//! The crate builds the classical plane of order `q = p^k` from homogeneous
//! coordinates over GF(q), runs exact integer/rational linear algebra on its
//! incidence matrix, and constructs labelings of the points by elements of a
//! finite Abelian group so that every line has the same sum.  Small moduli are
//! additionally swept exhaustively so that the structural claims about cyclic
//! groups can be confirmed rather than trusted.

pub mod acceptance;
pub mod error;
pub mod geometry;
pub mod gf;
pub mod groups;
pub mod incidence;
pub mod magic;
pub mod oracle;

pub use error::{Error, Result};
pub use geometry::{build_plane, AxiomReport, AxiomViolation, Plane};
pub use gf::{FieldElement, FieldSpec};
pub use groups::{AbelianGroup, Classification, GroupElement, Labeling, VerifyReport, Witness};
pub use incidence::{GramDeterminant, IncidenceMatrix};
pub use magic::{
    build_frame, magic_general, magic_labeling, product_magic, v_line, MagicConstruction,
    SubgroupBound, PlaneFrame,
};
pub use oracle::{
    cyclic_exhaustive, enumerate_line_invariant, spot_checks, CyclicVerdict, Enumeration,
    SpotCheck,
};
