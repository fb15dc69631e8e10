//! Exact intersection theory on moduli spaces of stable curves.
//!
//! This crate computes top intersections of psi, omega and kappa classes in
//! exact rational arithmetic, and expands omega-class monomials symbolically
//! into signed sums of psi-decorated pinwheel strata (one genus-g spine with
//! a rational tail per non-singleton part of a set partition of the marks).
//!
//! The pieces fit together like this:
//!
//! - [`partition`] enumerates and canonicalizes the set partitions indexing
//!   the strata;
//! - [`psi`] evaluates `<tau_{k_1} ... tau_{k_n}>_g` through the
//!   Dijkgraaf-Verlinde-Verlinde recursion with memoization, seeded by
//!   `<tau_0^3>_0 = 1`;
//! - [`expansion`] produces the decorated-term expansion of an omega
//!   monomial and integrates it term by term;
//! - [`omega_kappa`] evaluates the same integrals by a direct signed
//!   partition sum, plus top kappa intersections on unmarked spaces;
//! - [`selftest`] cross-checks all of the above against each other and
//!   against frozen known values.
//!
//! Everything is exact; there is no floating point in this crate.

pub mod error;
pub mod expansion;
pub mod omega_kappa;
pub mod partition;
pub mod psi;
pub mod rational;
pub mod render;
pub mod selftest;
pub mod vectors;

pub use error::{Error, Result};
pub use expansion::{
    evaluate_pinwheel_term, expand_graph_formula, expand_graph_formula_simplified,
    integrate_expansion, OmegaMonomial, PinwheelTerm,
};
pub use omega_kappa::{check_pushforward_identity, kappa_top, omega_top, KappaMonomial};
pub use partition::{enumerate_set_partitions, SetPartition};
pub use psi::{psi_top_genus0_closed, IntersectionKey, PsiCache, PsiOracle};
pub use rational::Rational;
pub use render::OutputFormat;
