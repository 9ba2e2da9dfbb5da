//! Exact scalar arithmetic: cyclotomic numbers, generic polynomials and
//! truncated series, and finite fields.

mod cyclotomic;
mod finitefield;
mod poly;
mod series;

pub use cyclotomic::{parse_cyclo, sqrt_prime, CycloError, Cyclotomic};
pub(crate) use cyclotomic::is_prime_u64;
pub use finitefield::{
    ff_factor_degrees, ff_is_squarefree, ff_orbit_resolvent, FFElem, FFError, FiniteField,
};
pub use poly::{newton_charpoly, CharPoly, UniPoly};
pub use series::{series_invert, SeriesError, TruncatedSeries};

use num_traits::{FromPrimitive, One, Zero};
use std::ops::{Div, Neg, Sub};

/// Commutative-ring scalar: what the generic polynomial and series layers
/// need from a coefficient type. Blanket-implemented, so any type with the
/// num-traits operator surface (BigRational, [`Cyclotomic`], nested
/// polynomials, ...) qualifies automatically.
pub trait RingScalar:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> RingScalar for T where
    T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Field scalar: a [`RingScalar`] with exact division and embedded small
/// integers, enough for Newton's identities and series manipulation over a
/// field of characteristic zero.
pub trait FieldScalar: RingScalar + Div<Output = Self> + FromPrimitive {}

impl<T> FieldScalar for T where T: RingScalar + Div<Output = T> + FromPrimitive {}
