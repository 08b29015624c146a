//! Numerical kernel, solver and diagnostics for the form-type Calabi-Yau
//! equation on discretized complex tori.
//!
//! The library is organized in layers:
//!
//! * [`forms`] — pointwise multilinear exterior algebra over ℂⁿ with a
//!   Hermitian inner product: wedge products, the Hodge star from first
//!   principles, and closed-form specializations of the star on
//!   (2,2)- and (3,3)-forms wedged with metric powers.
//! * [`geometry`] — periodic fields on a complex torus, Fourier-spectral
//!   differentiation, Chern curvature and torsion, astheno-Ricci
//!   curvature (closed form and oracle), Chern-Ricci and Bismut-Ricci
//!   forms, balancedness checks.
//! * [`operator`] — the algebraic core of the PDE: the trace transform
//!   and its inverse, the eigenvalue map, the concave operator F and its
//!   derivative coefficients, gradient-coupling coefficients, and the
//!   linearized operator.
//! * [`solver`] — damped Newton continuation in t ∈ [0, 1] for the pair
//!   (φ, b) under the L¹ normalization constraint, and recovery of the
//!   solved metric.
//! * [`diagnostics`] — manufactured solutions, scaling scans in the
//!   normalization mass, curvature prescription certificates and report
//!   records.
//! * [`io`] / [`cli`] — binary field snapshots, run configuration,
//!   structured trace output and the command-line front end.

pub mod cli;
pub mod diagnostics;
pub mod forms;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod operator;
pub mod solver;

pub use forms::{ExteriorAlgebra, HermitianMatrix, MultiIndexForm};
