//! Exact computation of Carlitz's degenerate Bernoulli numbers and
//! polynomials β_n(x|λ), with verifiers that check the identities they
//! satisfy as exact polynomial equalities in `x` and `λ`.
//!
//! Layers, bottom up:
//!
//! - [`arith`]: rationals, univariate/bivariate polynomials, truncated
//!   exponential generating functions, cyclotomic field elements.
//! - [`stirling`]: Stirling triangles and the generalized falling factorial
//!   `(x|λ)_n`.
//! - [`classical`]: ordinary Bernoulli numbers and polynomials, the λ → 0
//!   reference.
//! - [`degenerate`]: β_n(x|λ) by three independent routes and the identity
//!   verifiers.
//! - [`dirichlet`]: Dirichlet characters with cyclotomic values and the
//!   character-twisted numbers β_{n,χ}(λ).
//! - [`padic`]: the finite-level distribution built from β_k and its
//!   character integrals.
//! - [`report`] and [`suite`]: structured identity reports and the runner
//!   behind `degbern verify`.

pub mod arith;
pub mod classical;
pub mod degenerate;
pub mod dirichlet;
mod error;
pub mod padic;
pub mod report;
pub mod stirling;
pub mod suite;

pub use error::{Error, Result};
