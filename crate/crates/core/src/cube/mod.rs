//! Central sections of the cube: the section function `σ`, criticality, the
//! bordered Hessian at diagonal directions, and the three-dimensional case.

pub mod checks;
pub mod hessian;
pub mod hexagon;
pub mod quadnum;
pub mod quadrature;
pub mod sigma;

pub use hessian::{
    classify_diagonal, hessian_diag_entries, minor_direct, minor_sequence, minor_value, Classification,
    DiagEntries, MinorSequence, Verdict, Witness,
};
pub use hexagon::{hexagon_area, hexagon_derivatives, HexagonDerivatives};
pub use quadnum::QuadNum;
pub use quadrature::{
    critical_residual, diagonal_direction, grad_sigma_quadrature, hessian_entries_numeric, sigma_quadrature,
};
pub use sigma::{sigma_exact, DirectionQ};
