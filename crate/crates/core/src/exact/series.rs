//! Truncated power series over a generic coefficient ring.

use super::{RingScalar, UniPoly};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series inversion needs constant term 1, found {0}")]
    NotUnitConstant(String),
}

/// Power series truncated at a fixed order: coefficients of `T^0..=T^order`
/// are all stored, including zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: RingScalar> TruncatedSeries<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &UniPoly<T>, order: usize) -> Self {
        Self::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![T::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }
}

/// Invert a polynomial with constant term 1 as a power series to the given
/// order: the result satisfies `p * invert(p) = 1 + O(T^{order+1})`.
pub fn series_invert<T: RingScalar + std::fmt::Display>(
    p: &UniPoly<T>,
    order: usize,
) -> Result<TruncatedSeries<T>, SeriesError> {
    let c0 = p.coeff(0);
    if !c0.is_one() {
        return Err(SeriesError::NotUnitConstant(c0.to_string()));
    }
    let deg = p.degree().unwrap_or(0);
    let mut b = Vec::with_capacity(order + 1);
    b.push(T::one());
    for k in 1..=order {
        let mut acc = T::zero();
        for j in 1..=deg.min(k) {
            acc = acc + p.coeff(j) * b[k - j].clone();
        }
        b.push(-acc);
    }
    Ok(TruncatedSeries { coeffs: b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn rp(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(cs.iter().map(|&c| Rat::from_integer(BigInt::from(c))).collect())
    }

    #[test]
    fn invert_times_original_is_one() {
        let p = rp(&[1, 2, 2]);
        let inv = series_invert(&p, 8).unwrap();
        let prod = inv.mul(&TruncatedSeries::from_poly(&p, 8));
        assert!(prod.coeff(0).is_one());
        for i in 1..=8 {
            assert!(prod.coeff(i).is_zero(), "coefficient {i} not killed");
        }
    }

    #[test]
    fn invert_geometric() {
        // 1/(1 - T) = 1 + T + T^2 + ...
        let inv = series_invert(&rp(&[1, -1]), 5).unwrap();
        for i in 0..=5 {
            assert!(inv.coeff(i).is_one());
        }
    }

    #[test]
    fn invert_rejects_bad_constant() {
        assert!(series_invert(&rp(&[2, 1]), 3).is_err());
    }

    proptest::proptest! {
        #[test]
        fn invert_is_a_two_sided_inverse(
            tail in proptest::collection::vec(-6i64..=6, 0..6),
            order in 4usize..12,
        ) {
            let mut cs = vec![1];
            cs.extend(tail);
            let p = rp(&cs);
            let inv = series_invert(&p, order).unwrap();
            let prod = inv.mul(&TruncatedSeries::from_poly(&p, order));
            proptest::prop_assert!(prod.coeff(0).is_one());
            for i in 1..=order {
                proptest::prop_assert!(prod.coeff(i).is_zero(), "coefficient {} not killed", i);
            }
        }
    }
}
