//! Exact invariants of Galois representations of local fields.
//!
//! Everything here computes with exact arithmetic: arbitrary-precision
//! rationals, elements of cyclotomic fields `Q(zeta_n)` in reduced power-basis
//! form, and finite fields `F_{p^k}` with a deterministic choice of modulus.
//! The polynomial and power-series layers are generic over the coefficient
//! ring through the num-traits operator bounds (see [`exact::RingScalar`]),
//! with the concrete instantiations used throughout the crate re-exported as
//! type aliases below.
//!
//! The layers build on each other in order:
//!
//! * [`exact`]: cyclotomic numbers, generic polynomials, truncated series,
//!   finite fields, and polynomial factorization degree data mod p.
//! * [`groups`]: finite groups as Cayley tables, conjugacy classes,
//!   subgroups, quotients.
//! * [`chars`]: class functions, character tables (computed exactly via the
//!   modular lifting method), induction and restriction.
//! * [`localgal`]: ramification filtrations of local Galois groups and their
//!   invariants: local polynomials, conductor exponents, Swan pairings,
//!   discriminant valuations, Frobenius classes of unramified primes.
//! * [`weildeligne`]: representations with monodromy operator (`sp(n)`
//!   components and unramified twists), elliptic-curve local data, point
//!   counting.
//! * [`lseries`]: global Dirichlet series assembled from local data, global
//!   conductors, functional-equation parameters, zeta-factorization checks.

pub mod chars;
pub mod exact;
pub mod groups;
pub mod localgal;
pub mod lseries;
pub mod weildeligne;

/// Arbitrary-precision rational scalar used everywhere.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Dense univariate polynomial over the rationals.
pub type RatPoly = exact::UniPoly<Rat>;
/// Dense univariate polynomial with cyclotomic coefficients.
pub type CycloPoly = exact::UniPoly<exact::Cyclotomic>;
/// Truncated power series with cyclotomic coefficients.
pub type CycloSeries = exact::TruncatedSeries<exact::Cyclotomic>;

pub use exact::Cyclotomic;
