//! Dense univariate polynomials, generic over the coefficient ring.

use super::{FieldScalar, RingScalar};
use num_traits::{FromPrimitive, One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with coefficients stored constant term first and no trailing
/// zeros; the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: RingScalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    pub fn var() -> Self {
        UniPoly::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, One::is_one)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn scale(&self, c: &T) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Substitute `x -> c*x`: coefficient `a_i` becomes `a_i * c^i`.
    pub fn scale_arg(&self, c: &T) -> Self {
        let mut pw = T::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pw.clone());
            pw = pw * c.clone();
        }
        UniPoly::new(out)
    }

    /// Substitute `x -> x^k` (`k >= 1`).
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k >= 1, "inflate needs a positive exponent");
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i * k] = a.clone();
        }
        UniPoly { coeffs: out }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    pub fn map<U: RingScalar>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Render with an explicit variable name, ascending powers.
    pub fn to_string_var(&self, var: &str) -> String
    where
        T: fmt::Display,
    {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let needs_parens = s[1..].contains('+') || s[1..].contains('-');
            let body = if i == 0 {
                if needs_parens {
                    format!("({s})")
                } else {
                    s.clone()
                }
            } else {
                let var_part = if i == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{i}")
                };
                if needs_parens {
                    format!("({s})*{var_part}")
                } else if s == "1" {
                    var_part
                } else if s == "-1" {
                    format!("-{var_part}")
                } else {
                    format!("{s}*{var_part}")
                }
            };
            if out.is_empty() {
                out.push_str(&body);
            } else if let Some(rest) = body.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
        out
    }
}

impl<T: RingScalar> Add for UniPoly<T> {
    type Output = UniPoly<T>;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] = long[i].clone() + c;
        }
        UniPoly::new(long)
    }
}

impl<T: RingScalar> Sub for UniPoly<T> {
    type Output = UniPoly<T>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: RingScalar> Neg for UniPoly<T> {
    type Output = UniPoly<T>;
    fn neg(self) -> Self {
        UniPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: RingScalar> Mul for UniPoly<T> {
    type Output = UniPoly<T>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<T: RingScalar> Zero for UniPoly<T> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: RingScalar> One for UniPoly<T> {
    fn one() -> Self {
        UniPoly::one()
    }
}

impl<T: RingScalar + FromPrimitive> FromPrimitive for UniPoly<T> {
    fn from_i64(n: i64) -> Option<Self> {
        T::from_i64(n).map(UniPoly::constant)
    }
    fn from_u64(n: u64) -> Option<Self> {
        T::from_u64(n).map(UniPoly::constant)
    }
}

impl<T: FieldScalar> UniPoly<T> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = T::one() / d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c.clone();
            for i in 0..=dd {
                rem[k - dd + i] = rem[k - dd + i].clone() - c.clone() * d.coeffs[i].clone();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd together with a Bezout cofactor: returns `(g, u)` with
    /// `u*a = g (mod b)` and `g = gcd(a, b)` monic.
    pub fn ext_gcd_mod(a: &Self, b: &Self) -> (Self, Self) {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut u0 = UniPoly::one();
        let mut u1 = UniPoly::zero();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let u = u0 - q * u1.clone();
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
        }
        if let Some(lc) = r0.leading().cloned() {
            let inv = T::one() / lc;
            r0 = r0.scale(&inv);
            u0 = u0.scale(&inv);
        }
        (r0, u0)
    }
}

/// Monic characteristic polynomial together with its reversed
/// `det(1 - F*T)` form.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly<T> {
    /// Monic in `x`, constant term first.
    pub monic: UniPoly<T>,
    /// `det(1 - F*T)`: degree-`d` polynomial in `T` with constant term 1.
    pub det_form: UniPoly<T>,
}

/// Recover the characteristic polynomial of a `d x d` matrix from the power
/// sums `s_k = tr(F^k)`, `k = 1..=d`, by Newton's identities (characteristic
/// zero). Returns both the monic polynomial and `det(1 - F*T)`.
pub fn newton_charpoly<T: FieldScalar>(power_sums: &[T]) -> CharPoly<T> {
    let d = power_sums.len();
    let mut e = Vec::with_capacity(d + 1);
    e.push(T::one());
    for k in 1..=d {
        let mut acc = T::zero();
        let mut sign = T::one();
        for i in 1..=k {
            acc = acc + sign.clone() * power_sums[i - 1].clone() * e[k - i].clone();
            sign = -sign;
        }
        let kk = T::from_usize(k).expect("small integer embeds in the scalar field");
        e.push(acc / kk);
    }
    let mut monic = vec![T::zero(); d + 1];
    let mut det = vec![T::zero(); d + 1];
    let mut sign = T::one();
    for k in 0..=d {
        monic[d - k] = sign.clone() * e[k].clone();
        det[k] = sign.clone() * e[k].clone();
        sign = -sign;
    }
    CharPoly {
        monic: UniPoly::new(monic),
        det_form: UniPoly::new(det),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use num_bigint::BigInt;

    fn r(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn rp(cs: &[i64]) -> UniPoly<Rat> {
        UniPoly::new(cs.iter().map(|&c| r(c)).collect())
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = rp(&[3, 0, -2, 7, 1]);
        let b = rp(&[1, 2, 1]);
        let (q, rem) = a.div_rem(&b);
        assert_eq!(q * b + rem, a);
    }

    #[test]
    fn newton_reconstructs_x2_plus_5() {
        // tr F = 0, tr F^2 = -10 for eigenvalues +-sqrt(-5)
        let cp = newton_charpoly(&[r(0), r(-10)]);
        assert_eq!(cp.monic, rp(&[5, 0, 1]));
        assert_eq!(cp.det_form, rp(&[1, 0, 5]));
    }

    #[test]
    fn newton_degree_zero() {
        let cp = newton_charpoly::<Rat>(&[]);
        assert_eq!(cp.monic, UniPoly::one());
        assert_eq!(cp.det_form, UniPoly::one());
    }

    #[test]
    fn newton_matches_direct_expansion() {
        // roots 2, -3, 1/2: compare against the expanded product
        let roots = [r(2), r(-3), Rat::new(BigInt::from(1), BigInt::from(2))];
        let sums: Vec<Rat> = (1..=3)
            .map(|k| {
                roots
                    .iter()
                    .map(|x| {
                        let mut p = r(1);
                        for _ in 0..k {
                            p *= x.clone();
                        }
                        p
                    })
                    .sum()
            })
            .collect();
        let mut direct = UniPoly::one();
        for root in &roots {
            direct = direct * UniPoly::new(vec![-root.clone(), r(1)]);
        }
        assert_eq!(newton_charpoly(&sums).monic, direct);
    }

    #[test]
    fn display_ascending_with_signs() {
        assert_eq!(rp(&[1, -1]).to_string_var("T"), "1 - T");
        assert_eq!(rp(&[1, 0, 5]).to_string_var("T"), "1 + 5*T^2");
        assert_eq!(rp(&[]).to_string_var("T"), "0");
        assert_eq!(rp(&[0, -1]).to_string_var("T"), "-T");
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = rp(&[1, 0, 1]);
        let m = rp(&[2, 0, 0, 1]);
        let (g, u) = UniPoly::ext_gcd_mod(&a, &m);
        assert_eq!(g, UniPoly::one());
        let (_, rem) = (u * a).div_rem(&m);
        assert_eq!(rem, UniPoly::one());
    }
}
