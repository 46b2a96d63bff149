//! Exact symbolic workbench for lattice W-algebras over Cartan matrix data.
//!
//! The crate builds, from the Cartan matrix A_{n-1} of sl_n alone: the
//! log-canonical Poisson structure on the colored variable chain, the
//! screening-derived annihilating operators D and the grading operators H,
//! the canonical generators tau_k (exact rational functions), the bracket
//! family F_j = {tau_1, tau_j}, and exact Laurent-polynomial decompositions
//! of the brackets in the generators, certified symbolically or by exact
//! random evaluation.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating-point modes. See the `examples/` directory for one runnable
//! example per capability, and the `wlattice` binary for a scriptable
//! front-end (`wlattice reproduce` runs the whole verification table).

pub mod bracket;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod lattice;
pub mod operators;
pub mod reference;
pub mod reproduce;
pub mod ring;

pub use bracket::{bracket_family, gamma, poisson_bracket, BracketResult};
pub use decompose::{build_system, solve_decomposition, verify_identity, DecompConfig, DecompResult, LaurentBasis, LinearSystem, Verification, VerifyCert, VerifyMode};
pub use error::{Error, Result};
pub use generators::{
    annihilators_for, check_symmetry, tau, tau_closed_form, tau_family, Orientation, TauGenerator,
};
pub use lattice::{ChainShift, LatticeSpec};
pub use operators::{screening_operator, weight_operator, DiffOperator, DEFAULT_WINDOW};
pub use ring::{poly_gcd, MultiPoly, Monomial, RatFunc, Scalar, VarId};
