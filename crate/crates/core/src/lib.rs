//! Exact arithmetic for the Laplace–Pólya integral
//! `J_n(r) = (1/π) ∫ sincⁿ(t) cos(rt) dt` at integer `r`, its two-step ratio
//! bounds, Eulerian numbers and the normalised row maxima `f(m)`, and central
//! sections of the unit cube through the section function `σ`.
//!
//! Every claim is checked by an exact sweep that produces a
//! [`report::VerificationReport`]; floating point is used only for quadrature
//! and auxiliary columns.

pub mod bounds;
pub mod cli;
pub mod cube;
pub mod error;
pub mod eulerian;
pub mod figures;
pub mod fsequence;
pub mod laplace;
pub mod rational;
pub mod report;

pub use error::{Error, Result};
pub use laplace::{jn, jn_explicit, JTable};
pub use rational::Rat;
