//! Constructors for concrete structures.

pub mod affine;
pub mod builtin;
pub mod enumerate;
pub mod group;

pub use affine::{
    affine_quadratic_disingquandle, force_affine_quadratic, AffineQuadraticParams, ParamViolation, QuadraticPoly,
};
pub use builtin::{builtin, Builtin, R2Audit};
pub use enumerate::{collect_disingquandles, enumerate_disingquandles, enumerate_quandles, EnumerationSummary};
pub use group::{conjugation_constraint_violation, conjugation_singquandle, ConjugationVariant, GroupTable};
