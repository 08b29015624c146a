//! Discretized Hermitian geometry on complex tori: spectral calculus of
//! periodic fields, curvature and torsion, astheno-Ricci curvature,
//! Chern-Ricci and Bismut-Ricci forms, balancedness diagnostics.

mod astheno;
pub mod backgrounds;
mod curvature;
mod fields;
mod grid;
mod spectral;

pub use astheno::{
    astheno_ricci, astheno_ricci_oracle, balanced_defect, bismut_ricci, chern_ricci_form,
    metric_codifferential,
};
pub use curvature::{chern_curvature, CurvaturePack};
pub use fields::{FormField, HermitianField, ScalarField};
pub use grid::{GridError, TorusGrid};

use crate::forms::FormsError;
use crate::linalg::LinalgError;

#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("metric field is not positive definite")]
    NotPositiveMetric,
    #[error("dimension {n} too small: operation requires n ≥ {min}")]
    DimensionTooSmall { n: usize, min: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[cfg(test)]
mod tests;
