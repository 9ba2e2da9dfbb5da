//! Elements of cyclotomic fields `Q(zeta_n)` in exact reduced form.
//!
//! An element of level `n` is stored on the power basis
//! `1, zeta_n, ..., zeta_n^{phi(n)-1}`, always reduced modulo the n-th
//! cyclotomic polynomial, with arbitrary-precision rational coordinates.
//! Elements of different levels compare and combine through the compositum
//! `Q(zeta_lcm)`; representation on the power basis is unique, so equality is
//! coordinate equality after embedding. Rational elements are detected
//! eagerly and kept at level 1.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

use super::UniPoly;

#[derive(Debug, Error, PartialEq)]
pub enum CycloError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("root-of-unity level must be at least 1")]
    BadLevel,
}

fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Euler's totient by trial-division factorization.
pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut phi = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            phi = phi / d * (d - 1);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        phi = phi / m * (m - 1);
    }
    phi
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Cyclotomic polynomial `Phi_n`, cached and shared.
fn cyclotomic_poly(n: u64) -> Arc<UniPoly<Rat>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<UniPoly<Rat>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let result = if n == 1 {
        UniPoly::new(vec![rat_i64(-1), rat_i64(1)])
    } else {
        // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d
        let mut num = vec![rat_i64(0); n as usize + 1];
        num[0] = rat_i64(-1);
        num[n as usize] = rat_i64(1);
        let mut den = UniPoly::one();
        for d in divisors(n) {
            if d < n {
                den = den * (*cyclotomic_poly(d)).clone();
            }
        }
        let (q, r) = UniPoly::new(num).div_rem(&den);
        debug_assert!(r.is_zero(), "cyclotomic division must be exact");
        q
    };
    let arc = Arc::new(result);
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&arc));
    arc
}

/// An exact element of `Q(zeta_level)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    level: u64,
    /// Length exactly `phi(level)`; reduced mod `Phi_level`.
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    /// Reduce an arbitrary coefficient vector (exponents of `zeta_n`) into
    /// the power basis of length `phi(n)`.
    fn reduced_coords(n: u64, raw: Vec<Rat>) -> Vec<Rat> {
        let phi = euler_phi(n) as usize;
        let poly = UniPoly::new(raw);
        let reduced = if poly.degree().map_or(false, |d| d >= phi) {
            let (_, r) = poly.div_rem(&cyclotomic_poly(n));
            r
        } else {
            poly
        };
        let mut coeffs = reduced.coeffs().to_vec();
        coeffs.resize(phi, Rat::zero());
        coeffs
    }

    fn reduce(n: u64, raw: Vec<Rat>) -> Self {
        Cyclotomic {
            level: n,
            coeffs: Self::reduced_coords(n, raw),
        }
        .drop_if_rational()
    }

    /// Full-length (`phi(m)`) power-basis coordinates at level `m`;
    /// `m` must be a multiple of the level. Unlike [`Self::embed`] the
    /// result is never collapsed, so it is safe to zip coordinatewise.
    fn coords_at(&self, m: u64) -> Vec<Rat> {
        assert!(
            m % self.level == 0,
            "coordinate target must be a multiple of the level"
        );
        if m == self.level {
            return self.coeffs.clone();
        }
        let step = (m / self.level) as usize;
        let mut raw = vec![Rat::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::reduced_coords(m, raw)
    }

    /// Power-basis representation is unique, so an element is rational
    /// exactly when every coordinate past the constant vanishes.
    fn drop_if_rational(self) -> Self {
        if self.level > 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            Cyclotomic {
                level: 1,
                coeffs: vec![self.coeffs[0].clone()],
            }
        } else {
            self
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclotomic {
            level: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_i64(n))
    }

    /// `zeta_n^k` (k may be negative; reduced mod n).
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::BadLevel);
        }
        let e = k.rem_euclid(n as i64) as usize;
        let mut raw = vec![Rat::zero(); e + 1];
        raw[e] = Rat::one();
        Ok(Self::reduce(n, raw))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.level == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.level == 1
    }

    /// Rational integer value, when the element is one.
    pub fn as_int(&self) -> Option<Int> {
        self.as_rat()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Embed into `Q(zeta_m)` for `level | m` (result in canonical form, so
    /// a rational value comes back at level 1).
    pub fn embed(&self, m: u64) -> Self {
        if m == self.level {
            return self.clone();
        }
        Cyclotomic {
            level: m,
            coeffs: self.coords_at(m),
        }
        .drop_if_rational()
    }

    /// Coordinates of `self` in `Q(zeta_d)` if it lies there (`d | level`).
    fn descend(&self, d: u64) -> Option<Self> {
        if d == self.level {
            return Some(self.clone());
        }
        debug_assert!(self.level % d == 0);
        let phi_d = euler_phi(d) as usize;
        let phi_n = euler_phi(self.level) as usize;
        // columns: embeddings of zeta_d^j, j < phi(d)
        let mut cols = Vec::with_capacity(phi_d);
        for j in 0..phi_d {
            let mut raw = vec![Rat::zero(); j + 1];
            raw[j] = Rat::one();
            let col = Cyclotomic {
                level: d,
                coeffs: Cyclotomic::reduced_coords(d, raw),
            };
            cols.push(col.coords_at(self.level));
        }
        // solve the phi(n) x phi(d) system by Gaussian elimination
        let mut aug: Vec<Vec<Rat>> = (0..phi_n)
            .map(|row| {
                let mut r: Vec<Rat> = cols.iter().map(|c| c[row].clone()).collect();
                r.push(self.coeffs[row].clone());
                r
            })
            .collect();
        let mut pivot_of_col = vec![usize::MAX; phi_d];
        let mut row = 0;
        for col in 0..phi_d {
            let Some(p) = (row..phi_n).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let inv = aug[row][col].clone().recip();
            for x in aug[row].iter_mut() {
                *x *= inv.clone();
            }
            for r in 0..phi_n {
                if r != row && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c2 in 0..=phi_d {
                        let delta = f.clone() * aug[row][c2].clone();
                        aug[r][c2] -= delta;
                    }
                }
            }
            pivot_of_col[col] = row;
            row += 1;
        }
        // inconsistent rows mean the element is not in the subfield
        for r in row..phi_n {
            if !aug[r][phi_d].is_zero() {
                return None;
            }
        }
        let mut coeffs = vec![Rat::zero(); phi_d];
        for (col, &pr) in pivot_of_col.iter().enumerate() {
            if pr != usize::MAX {
                coeffs[col] = aug[pr][phi_d].clone();
            }
        }
        Some(Cyclotomic { level: d, coeffs }.drop_if_rational())
    }

    /// Canonical form: the representation at the least level containing the
    /// element. Idempotent.
    pub fn minimized(&self) -> Self {
        if self.level == 1 {
            return self.clone();
        }
        for d in divisors(self.level) {
            if d == self.level {
                break;
            }
            if let Some(r) = self.descend(d) {
                return r;
            }
        }
        self.clone()
    }

    fn common_level(&self, other: &Self) -> u64 {
        self.level.lcm(&other.level)
    }

    /// Galois twist `zeta -> zeta^k`; requires `gcd(k, level) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.level;
        if n == 1 {
            return self.clone();
        }
        let e = k.rem_euclid(n as i64) as u64;
        assert!(e.gcd(&n) == 1, "Galois exponent must be coprime to the level");
        let mut raw = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let idx = (i as u64 * e % n) as usize;
            raw[idx] += c.clone();
        }
        Self::reduce(n, raw)
    }

    /// Complex conjugation `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        if self.level == 1 {
            return self.clone();
        }
        self.galois(self.level as i64 - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplicative inverse; panics on zero (mirrors integer division).
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.level == 1 {
            return Cyclotomic::from_rat(self.coeffs[0].clone().recip());
        }
        let a = UniPoly::new(self.coeffs.clone());
        let m = cyclotomic_poly(self.level);
        // Phi_level is irreducible, so gcd(a, Phi) = 1 and u*a = 1 mod Phi
        let (g, u) = UniPoly::ext_gcd_mod(&a, &m);
        debug_assert!(g.is_one());
        Self::reduce(self.level, u.coeffs().to_vec())
    }

    /// Deterministic total order on canonical forms, used only to fix
    /// orderings in reports and tables (not a field-compatible order).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let a = self.minimized();
        let b = other.minimized();
        match a.level.cmp(&b.level) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            // larger coordinate sorts first so that 1 precedes -1
            match y.cmp(x) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let m = self.common_level(other);
        self.coords_at(m) == other.coords_at(m)
    }
}

impl Eq for Cyclotomic {}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        let m = self.common_level(&rhs);
        let coeffs = self
            .coords_at(m)
            .into_iter()
            .zip(rhs.coords_at(m))
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic { level: m, coeffs }.drop_if_rational()
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Self {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        let m = self.common_level(&rhs);
        let a = self.coords_at(m);
        let b = rhs.coords_at(m);
        let mut raw = vec![Rat::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                raw[i + j] += x.clone() * y.clone();
            }
        }
        Cyclotomic::reduce(m, raw)
    }
}

impl Div for Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inv();
        self * inv
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rat(Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.level == 1 && self.coeffs[0].is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rat(Rat::one())
    }
}

impl FromPrimitive for Cyclotomic {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Cyclotomic::from_int(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Rat::from_u64(n).map(Cyclotomic::from_rat)
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    /// Canonical literal, parseable by [`parse_cyclo`]: compact, no
    /// whitespace, minimal level, ascending powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimized();
        if m.level == 1 {
            return write!(f, "{}", m.coeffs[0]);
        }
        let mut out = String::new();
        for (i, c) in m.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                format!("{c}")
            } else {
                let z = if i == 1 {
                    format!("z({})", m.level)
                } else {
                    format!("z({})^{}", m.level, i)
                };
                if c.is_one() {
                    z
                } else if (-c.clone()).is_one() {
                    format!("-{z}")
                } else {
                    format!("{c}*{z}")
                }
            };
            if out.is_empty() {
                out.push_str(&term);
            } else if term.starts_with('-') {
                out.push_str(&term);
            } else {
                out.push('+');
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CycloError> {
        Err(CycloError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> Result<(), CycloError> {
        match self.bump() {
            Some(x) if x == b => Ok(()),
            _ => self.err(format!("expected '{}'", b as char)),
        }
    }

    fn uint(&mut self) -> Result<Int, CycloError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a digit");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<Int>().unwrap())
    }

    fn int(&mut self) -> Result<Int, CycloError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v = self.uint()?;
        Ok(if neg { -v } else { v })
    }

    fn rational(&mut self) -> Result<Rat, CycloError> {
        let num = self.uint()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.uint()?;
            if den.is_zero() {
                return self.err("zero denominator");
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    /// `z(N)[^K]`, returning `zeta_N^K`.
    fn zeta(&mut self) -> Result<Cyclotomic, CycloError> {
        self.eat(b'z')?;
        self.eat(b'(')?;
        let n = self.uint()?;
        self.eat(b')')?;
        let n: u64 = match n.to_string().parse() {
            Ok(v) if v >= 1 => v,
            _ => return self.err("level out of range"),
        };
        let k = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.int()?;
            match e.to_string().parse::<i64>() {
                Ok(v) => v,
                Err(_) => return self.err("exponent out of range"),
            }
        } else {
            1
        };
        Cyclotomic::root_of_unity(n, k).map_err(|_| CycloError::Parse {
            pos: self.pos,
            msg: "level out of range".into(),
        })
    }

    /// One signed term: `[sign] rational ["*" zeta] | [sign] zeta`.
    fn term(&mut self, sign: i64) -> Result<Cyclotomic, CycloError> {
        let negate = sign < 0;
        let v = match self.peek() {
            Some(b'z') => self.zeta()?,
            Some(b) if b.is_ascii_digit() => {
                let q = self.rational()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    let z = self.zeta()?;
                    Cyclotomic::from_rat(q) * z
                } else {
                    Cyclotomic::from_rat(q)
                }
            }
            _ => return self.err("expected a term"),
        };
        Ok(if negate { -v } else { v })
    }

    fn expr(&mut self) -> Result<Cyclotomic, CycloError> {
        let mut sign = 1i64;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                self.pos += 1;
                sign = -1;
            }
            _ => {}
        }
        let mut acc = self.term(sign)?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term(1)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc + self.term(-1)?;
                }
                None => return Ok(acc),
                _ => return self.err("expected '+', '-', or end of input"),
            }
        }
    }
}

/// Parse a cyclotomic literal (`-1/2+3*z(5)^2`, `z(8)`, `7/3`, ...) into the
/// canonical reduced element. Composing with [`fmt::Display`] round-trips.
pub fn parse_cyclo(s: &str) -> Result<Cyclotomic, CycloError> {
    let mut p = Parser {
        bytes: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    Ok(v.minimized())
}

/// The positive square root of a prime as an exact cyclotomic element
/// (levels: 8 for p = 2, p for p = 1 mod 4, 4p for p = 3 mod 4), with sign
/// fixed by the standard embedding `zeta_n = exp(2*pi*i/n)`.
pub fn sqrt_prime(p: u64) -> Cyclotomic {
    assert!(is_prime_u64(p), "sqrt_prime needs a prime");
    if p == 2 {
        // zeta_8 + zeta_8^{-1} = 2 cos(pi/4)
        let z = Cyclotomic::root_of_unity(8, 1).unwrap();
        return z.clone() + z.conj();
    }
    // quadratic Gauss sum: sum of legendre(a)*zeta_p^a is sqrt(p) for
    // p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4
    let mut g = Cyclotomic::zero();
    for a in 1..p {
        let ls = legendre(a, p);
        let z = Cyclotomic::root_of_unity(p, a as i64).unwrap();
        g = if ls == 1 { g + z } else { g - z };
    }
    if p % 4 == 1 {
        g
    } else {
        let minus_i = Cyclotomic::root_of_unity(4, -1).unwrap();
        minus_i * g
    }
}

pub(crate) fn legendre(a: u64, p: u64) -> i64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else if r == p - 1 {
        -1
    } else {
        0
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(euler_phi(97), 96);
    }

    #[test]
    fn level_two_is_minus_one() {
        assert_eq!(z(2, 1), Cyclotomic::from_int(-1));
        assert!(z(2, 1).is_rational());
    }

    #[test]
    fn cross_level_equality() {
        // zeta_6 = -zeta_3^2
        assert_eq!(z(6, 1), -z(3, 2));
        // zeta_4^2 = -1 at any ambient level
        assert_eq!(z(4, 2), z(2, 1));
        assert_eq!(z(12, 4), z(3, 1));
    }

    #[test]
    fn primitive_root_sums_to_minus_one() {
        for n in [3u64, 5, 7, 11] {
            let s: Cyclotomic = (1..n).map(|k| z(n, k as i64)).sum();
            assert_eq!(s, Cyclotomic::from_int(-1));
        }
    }

    #[test]
    fn embedding_roundtrip_is_identity() {
        let x = z(5, 2) + Cyclotomic::from_int(3);
        let up = x.embed(20);
        assert_eq!(up.descend(5).unwrap(), x);
        assert_eq!(up.minimized(), x);
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let x = z(7, 3) + Cyclotomic::from_int(2);
        assert!((x.clone() * x.inv()).is_one());
        let y = z(12, 1) - z(12, 5);
        assert!((y.clone() / y).is_one());
    }

    #[test]
    fn conjugation_is_an_involution() {
        let x = z(5, 1) + Cyclotomic::from_rat(Rat::new(Int::from(1), Int::from(2)));
        assert_eq!(x.conj().conj(), x);
        // x * conj(x) of a root of unity is 1
        assert!((z(7, 2) * z(7, 2).conj()).is_one());
    }

    #[test]
    fn display_parse_roundtrip() {
        let cases = [
            Cyclotomic::from_int(0),
            Cyclotomic::from_int(-3),
            Cyclotomic::from_rat(Rat::new(Int::from(5), Int::from(6))),
            z(5, 1) + z(5, 4),
            -z(8, 3) + Cyclotomic::from_int(1),
            z(7, 1) * Cyclotomic::from_rat(Rat::new(Int::from(-2), Int::from(3))),
        ];
        for x in cases {
            let printed = x.to_string();
            let back = parse_cyclo(&printed).unwrap();
            assert_eq!(back, x, "round-trip failed for {printed}");
        }
    }

    #[test]
    fn parse_is_idempotent_on_canonical_output() {
        let v = parse_cyclo("1/2 - 3*z(12)^5 + z(12)").unwrap();
        let printed = v.to_string();
        assert_eq!(parse_cyclo(&printed).unwrap().to_string(), printed);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_cyclo("").is_err());
        assert!(parse_cyclo("z(0)").is_err());
        assert!(parse_cyclo("1 + + 2").is_err());
        assert!(parse_cyclo("2 ** z(3)").is_err());
        assert!(parse_cyclo("1/0").is_err());
    }

    #[test]
    fn sqrt_prime_squares_back() {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29] {
            let s = sqrt_prime(p);
            assert_eq!(
                s.clone() * s.clone(),
                Cyclotomic::from_int(p as i64),
                "sqrt({p})^2 != {p}"
            );
            // the square root of a rational is real
            assert!(s.is_real());
        }
    }

    #[test]
    fn canonical_cmp_puts_one_before_minus_one() {
        let one = Cyclotomic::one();
        let minus = Cyclotomic::from_int(-1);
        assert_eq!(one.canonical_cmp(&minus), Ordering::Less);
        // rationals precede irrationals
        assert_eq!(one.canonical_cmp(&z(5, 1)), Ordering::Less);
    }

    #[test]
    fn galois_permutes_conjugates() {
        let x = z(5, 1);
        assert_eq!(x.galois(2), z(5, 2));
        assert_eq!(x.galois(2).galois(3), z(5, 6 % 5));
    }
}
