//! Exact arithmetic for the lattice of subspaces of `GF(q)^n`.
//!
//! The crate enumerates the rank-1 and rank-(n-1) level sets of the subspace
//! lattice, builds the 0/1 incidence matrix between them together with the
//! Gorenstein multiplication and Hessian matrices attached to the lattice,
//! and checks every closed-form count and determinant against independent
//! brute-force computation. All arithmetic is exact: field elements live in
//! `GF(q)`, determinants and counts in arbitrary-precision integers. There is
//! no floating point anywhere in the evaluation path.
//!
//! Modules:
//! - [`field`]: `GF(p^k)` arithmetic with table-backed extension fields.
//! - [`lattice`]: points, echelon-form subspaces, duals, chain counting.
//! - [`counting`]: q-integers, Gaussian binomials, basis counts.
//! - [`matrix`]: dense big-integer matrices and the constant-diagonal
//!   `Phi(nu, alpha, beta)` family.
//! - [`det`]: two independent exact determinant engines (fraction-free
//!   elimination and multi-modular CRT).
//! - [`factor`]: small-prime factorization used for table output.
//! - [`incidence`]: the incidence pair `(A, B)` and its determinant formulas.
//! - [`gorenstein`]: basis sets, the evaluated Hessian, and the degree-1
//!   multiplication matrices of the associated graded algebra.
//! - [`report`] / [`table`]: verification suites and table rendering used by
//!   the `qlattice` CLI.

pub mod counting;
pub mod det;
pub mod factor;
pub mod field;
pub mod gorenstein;
pub mod incidence;
pub mod lattice;
pub mod matrix;
pub mod report;
pub mod table;

pub use field::{FieldCtx, FieldElement};
pub use lattice::{ProjPoint, Subspace};
pub use matrix::{IntMatrix, PhiSpec};

use thiserror::Error;

/// Errors surfaced by construction and enumeration entry points.
///
/// Pure formula evaluation (q-integers, closed-form determinants) panics on
/// precondition misuse instead; those functions document `errors: none`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {q} exceeds the supported limit 2^20")]
    FieldTooLarge { q: u64 },
    #[error("no irreducible degree-{k} polynomial found over GF({p})")]
    NoIrreducible { p: u64, k: u32 },
    #[error("division by zero in GF({q})")]
    DivisionByZero { q: u64 },
    #[error("element representative {rep} out of range for GF({q})")]
    ElementOutOfRange { rep: u64, q: u64 },
    #[error("vectors have mixed lengths or come from different fields")]
    MixedContext,
    #[error("level {j} out of range for ambient dimension {n}")]
    LevelOutOfRange { j: usize, n: usize },
    #[error("ambient dimension must be at least 2, got {n}")]
    AmbientTooSmall { n: u32 },
    #[error("matrix dimensions {a} and {b} do not match")]
    DimensionMismatch { a: usize, b: usize },
    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,
    #[error("estimated cost {needed} exceeds budget {budget} for {what}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },
    #[error("malformed matrix text: {0}")]
    ParseMatrix(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

/// Uniform cost ceiling for the brute-force paths, in the unit each
/// operation documents (tuple tests, chain extensions, elimination steps).
pub const DEFAULT_BUDGET: u64 = 100_000_000;
