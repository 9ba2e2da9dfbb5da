//! Finite fields `F_{p^k}` with deterministic moduli, plus factorization
//! shape and orbit-resolvent computations for integer polynomials mod p.
//!
//! The field modulus is the least monic irreducible of degree `k` over
//! `F_p`, where "least" orders the non-leading coefficient tuple
//! `(c_{k-1}, ..., c_1, c_0)` lexicographically (equivalently, by the base-p
//! integer whose digit at place `i` is the coefficient of `x^i`). This
//! depends on no external tables and reproduces the familiar small moduli
//! (`x^2+x+1` for F_4, `x^5+x^2+1` for F_32).
//!
//! Polynomials over `F_p` are coefficient vectors, constant term first.

use crate::Int;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FFError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field order {p}^{k} does not fit in 64 bits")]
    OrderOverflow { p: u64, k: usize },
    #[error("polynomial vanishes identically mod {p}")]
    ZeroPolynomial { p: u64 },
    #[error("polynomial is reducible mod {p}; factor degrees must be 1")]
    Reducible { p: u64 },
    #[error("stride {stride} out of range for degree {degree} (need 1 <= stride < degree)")]
    BadStride { stride: usize, degree: usize },
}

// --- arithmetic on F_p[x], constant-first coefficient vectors ---

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn deg(v: &[u64]) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

fn add_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + y) % p;
    }
    trim(out)
}

fn sub_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(out)
}

fn mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x as u128 * y as u128;
        }
    }
    trim(acc.into_iter().map(|v| (v % p as u128) as u64).collect())
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // Fermat; p prime and a nonzero mod p
    debug_assert!(a % p != 0);
    pow_mod_u64(a % p, p - 2, p)
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

fn make_monic(v: &[u64], p: u64) -> Vec<u64> {
    match v.last() {
        None => Vec::new(),
        Some(&lc) if lc == 1 => v.to_vec(),
        Some(&lc) => {
            let s = inv_mod_p(lc, p);
            v.iter()
                .map(|&c| ((c as u128 * s as u128) % p as u128) as u64)
                .collect()
        }
    }
}

/// Remainder of `a` by monic `m`.
fn rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1);
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let t = (lead as u128 * mc as u128 % p as u128) as u64;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

/// Quotient of `a` by monic divisor `m` (remainder discarded).
fn quot_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1);
    let dm = m.len() - 1;
    if a.len() <= dm {
        return Vec::new();
    }
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - dm];
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        q[shift] = lead;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate() {
                let t = (lead as u128 * mc as u128 % p as u128) as u64;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    trim(q)
}

/// Monic gcd; `gcd(0, b) = monic(b)`.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let ym = make_monic(&y, p);
        let r = rem_monic(&x, &ym, p);
        x = y;
        y = r;
    }
    make_monic(&x, p)
}

fn deriv_mod(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return Vec::new();
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u128 % p as u128 * c as u128 % p as u128) as u64)
            .collect(),
    )
}

/// `base^e mod m` with monic `m` of degree >= 1.
fn powmod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = rem_monic(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem_monic(&mul_mod(&result, &b, p), m, p);
        }
        b = rem_monic(&mul_mod(&b, &b, p), m, p);
        e >>= 1;
    }
    result
}

/// `x^(p^e) mod m` by iterated p-th powers.
fn frobenius_power_x(e: usize, m: &[u64], p: u64) -> Vec<u64> {
    let x = vec![0u64, 1];
    let mut cur = rem_monic(&x, m, p);
    for _ in 0..e {
        cur = powmod_poly(&cur, p, m, p);
    }
    cur
}

/// Rabin irreducibility test for monic `f` of degree >= 1 over `F_p`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = match deg(f) {
        None | Some(0) => return false,
        Some(d) => d,
    };
    if d == 1 {
        return true;
    }
    let f = make_monic(f, p);
    // x^(p^d) = x mod f
    let x = vec![0u64, 1];
    if frobenius_power_x(d, &f, p) != rem_monic(&x, &f, p) {
        return false;
    }
    // no factor of degree d/l for prime l | d
    let mut n = d;
    let mut l = 2;
    let mut prime_divs = Vec::new();
    while l * l <= n {
        if n % l == 0 {
            prime_divs.push(l);
            while n % l == 0 {
                n /= l;
            }
        }
        l += 1;
    }
    if n > 1 {
        prime_divs.push(n);
    }
    for l in prime_divs {
        let h = frobenius_power_x(d / l, &f, p);
        let g = gcd_mod(&sub_mod(&h, &x, p), &f, p);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn check_prime(p: u64) -> Result<(), FFError> {
    if super::cyclotomic::is_prime_u64(p) {
        Ok(())
    } else {
        Err(FFError::NotPrime(p))
    }
}

fn reduce_int_poly(f: &[Int], p: u64) -> Vec<u64> {
    let pm = Int::from(p);
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&pm);
                debug_assert!(!r.is_negative());
                r.to_u64().expect("residue fits u64")
            })
            .collect(),
    )
}

/// Whether `f` stays squarefree of full degree modulo `p`: the leading
/// coefficient must remain a unit and `gcd(f, f')` must be constant.
pub fn ff_is_squarefree(f: &[Int], p: u64) -> Result<bool, FFError> {
    check_prime(p)?;
    let red = reduce_int_poly(f, p);
    if red.is_empty() {
        return Err(FFError::ZeroPolynomial { p });
    }
    let int_deg = f.iter().rposition(|c| !c.is_zero());
    if deg(&red) != int_deg {
        return Ok(false);
    }
    let g = gcd_mod(&red, &deriv_mod(&red, p), p);
    Ok(deg(&g) == Some(0))
}

/// Degrees of the irreducible factors of `f` mod `p`, with multiplicity,
/// as sorted `(degree, count)` pairs.
///
/// Uses squarefree decomposition followed by distinct-degree splitting;
/// the factors themselves are never materialized.
pub fn ff_factor_degrees(f: &[Int], p: u64) -> Result<Vec<(usize, usize)>, FFError> {
    check_prime(p)?;
    let red = reduce_int_poly(f, p);
    if red.is_empty() {
        return Err(FFError::ZeroPolynomial { p });
    }
    let total_deg = deg(&red).unwrap();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for (part, mult) in squarefree_parts(make_monic(&red, p), p) {
        for (d, n) in distinct_degrees(part, p) {
            *counts.entry(d).or_insert(0) += n * mult;
        }
    }
    let out: Vec<(usize, usize)> = counts.into_iter().collect();
    debug_assert_eq!(
        out.iter().map(|&(d, n)| d * n).sum::<usize>(),
        total_deg,
        "factor degrees must sum to the degree mod p"
    );
    Ok(out)
}

/// Squarefree decomposition in characteristic p: pairs `(g_i, m_i)` with
/// `f = prod g_i^{m_i}`, each `g_i` squarefree and the `m_i` distinct.
fn squarefree_parts(f: Vec<u64>, p: u64) -> Vec<(Vec<u64>, usize)> {
    if deg(&f) == Some(0) {
        return Vec::new();
    }
    let fp = deriv_mod(&f, p);
    if fp.is_empty() {
        // f = g(x^p); over F_p the p-th root keeps every coefficient
        let root: Vec<u64> = f.iter().step_by(p as usize).copied().collect();
        return squarefree_parts(trim(root), p)
            .into_iter()
            .map(|(g, m)| (g, m * p as usize))
            .collect();
    }
    let mut out = Vec::new();
    let mut c = gcd_mod(&f, &fp, p);
    let mut w = quot_monic(&f, &c, p);
    let mut i = 1usize;
    while deg(&w) > Some(0) {
        let y = gcd_mod(&w, &c, p);
        let z = quot_monic(&w, &y, p);
        if deg(&z) > Some(0) {
            out.push((z, i));
        }
        c = quot_monic(&c, &y, p);
        w = y;
        i += 1;
    }
    if deg(&c) > Some(0) {
        let root: Vec<u64> = c.iter().step_by(p as usize).copied().collect();
        for (g, m) in squarefree_parts(trim(root), p) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Distinct-degree factor counts of a squarefree monic polynomial.
fn distinct_degrees(g: Vec<u64>, p: u64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut rem = g;
    let x = vec![0u64, 1];
    let mut h = rem_monic(&x, &rem, p);
    let mut d = 0usize;
    while deg(&rem).map_or(false, |dr| dr >= 2 * (d + 1)) {
        d += 1;
        h = powmod_poly(&h, p, &rem, p);
        let blk = gcd_mod(&sub_mod(&h, &x, p), &rem, p);
        if deg(&blk) > Some(0) {
            let bd = deg(&blk).unwrap();
            debug_assert_eq!(bd % d, 0);
            out.push((d, bd / d));
            rem = quot_monic(&rem, &blk, p);
            if deg(&rem) > Some(0) {
                h = rem_monic(&h, &rem, p);
            }
        }
    }
    if let Some(dr) = deg(&rem) {
        if dr > 0 {
            out.push((dr, 1));
        }
    }
    out
}

/// `sum beta_i beta_{i+s}` over `i = 1..d` (indices mod d), where
/// `beta_1` is the residue of `x` in `F_p[x]/(f)` and `beta_{i+1} = beta_i^p`.
///
/// Requires `f` irreducible mod `p` of degree `d` and `1 <= s < d`. The sum
/// is fixed by Frobenius, hence a prime-field scalar; this is asserted, and
/// the scalar is returned as a residue in `0..p`.
pub fn ff_orbit_resolvent(f: &[Int], p: u64, stride: usize) -> Result<u64, FFError> {
    check_prime(p)?;
    let red = reduce_int_poly(f, p);
    if red.is_empty() {
        return Err(FFError::ZeroPolynomial { p });
    }
    let m = make_monic(&red, p);
    if !is_irreducible(&m, p) {
        return Err(FFError::Reducible { p });
    }
    let d = deg(&m).unwrap();
    if stride == 0 || stride >= d {
        return Err(FFError::BadStride { stride, degree: d });
    }
    let mut betas = Vec::with_capacity(d);
    let x = vec![0u64, 1];
    let mut cur = rem_monic(&x, &m, p);
    for _ in 0..d {
        betas.push(cur.clone());
        cur = powmod_poly(&cur, p, &m, p);
    }
    // sum beta_i beta_{i+s} over the distinct unordered pairs {i, i+s};
    // when 2s = 0 mod d the cycle traverses each pair twice and the
    // intended value (for d = 2 the norm) counts it once
    let mut pairs: Vec<(usize, usize)> = (0..d)
        .map(|i| {
            let j = (i + stride) % d;
            (i.min(j), i.max(j))
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut sum: Vec<u64> = Vec::new();
    for (i, j) in pairs {
        let prod = rem_monic(&mul_mod(&betas[i], &betas[j], p), &m, p);
        sum = add_mod(&sum, &prod, p);
    }
    assert!(
        deg(&sum).map_or(true, |ds| ds == 0),
        "orbit resolvent must be Frobenius-stable"
    );
    Ok(sum.first().copied().unwrap_or(0))
}

// --- the field type ---

#[derive(Debug)]
struct FieldData {
    p: u64,
    k: usize,
    order: u64,
    modulus: Vec<u64>,
}

/// The finite field `F_{p^k}`, cheap to clone and share.
#[derive(Clone, Debug)]
pub struct FiniteField {
    inner: Arc<FieldData>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        // modulus is determined by (p, k)
        self.inner.p == other.inner.p && self.inner.k == other.inner.k
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(p: u64, k: usize) -> Result<Self, FFError> {
        check_prime(p)?;
        if k == 0 {
            return Err(FFError::BadDegree);
        }
        let mut order = 1u64;
        for _ in 0..k {
            order = order
                .checked_mul(p)
                .ok_or(FFError::OrderOverflow { p, k })?;
        }
        let modulus = least_irreducible(p, k);
        Ok(FiniteField {
            inner: Arc::new(FieldData {
                p,
                k,
                order,
                modulus,
            }),
        })
    }

    /// The field of order `q`, factoring `q` as a prime power.
    pub fn of_order(q: u64) -> Result<Self, FFError> {
        if q < 2 {
            return Err(FFError::NotPrimePower(q));
        }
        let mut p = 2;
        while p * p <= q {
            if q % p == 0 {
                break;
            }
            p += 1;
        }
        if p * p > q {
            p = q;
        }
        let mut rest = q;
        let mut k = 0usize;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(FFError::NotPrimePower(q));
        }
        Self::new(p, k)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.k
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FFElem {
        FFElem {
            field: self.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(&self) -> FFElem {
        self.from_prime_field(1)
    }

    pub fn from_prime_field(&self, c: u64) -> FFElem {
        let c = c % self.inner.p;
        FFElem {
            field: self.clone(),
            coeffs: trim(vec![c]),
        }
    }

    /// Residue class of `x`, a generator of the extension over `F_p`.
    pub fn gen(&self) -> FFElem {
        if self.inner.k == 1 {
            // x reduces to the negated constant term of the degree-1 modulus
            let c = (self.inner.p - self.inner.modulus[0]) % self.inner.p;
            return self.from_prime_field(c);
        }
        FFElem {
            field: self.clone(),
            coeffs: vec![0, 1],
        }
    }

    /// Element with base-p digit expansion `idx`; inverse of [`FFElem::index`].
    pub fn elem_from_index(&self, idx: u64) -> FFElem {
        assert!(idx < self.inner.order, "index out of range");
        let mut coeffs = Vec::with_capacity(self.inner.k);
        let mut v = idx;
        while v > 0 {
            coeffs.push(v % self.inner.p);
            v /= self.inner.p;
        }
        FFElem {
            field: self.clone(),
            coeffs: trim(coeffs),
        }
    }
}

/// Least monic irreducible of degree `k` over `F_p` (see module docs for
/// the ordering).
fn least_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1]; // x itself
    }
    let mut tail = 0u64;
    loop {
        let mut f = Vec::with_capacity(k + 1);
        let mut v = tail;
        for _ in 0..k {
            f.push(v % p);
            v /= p;
        }
        assert!(v == 0, "no irreducible found below p^k, impossible");
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        tail += 1;
    }
}

/// An element of a [`FiniteField`], stored as a reduced residue.
#[derive(Clone, Debug)]
pub struct FFElem {
    field: FiniteField,
    /// Constant-first, degree < k, trailing zeros trimmed.
    coeffs: Vec<u64>,
}

impl PartialEq for FFElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FFElem {}

impl FFElem {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Base-p digit encoding; elements of `F_q` biject with `0..q`.
    pub fn index(&self) -> u64 {
        let p = self.field.inner.p;
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    fn check_same_field(&self, other: &Self) {
        assert!(
            self.field == other.field,
            "arithmetic between different finite fields"
        );
    }

    pub fn pow(&self, mut e: u64) -> FFElem {
        let mut result = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        result
    }

    /// The p-power Frobenius `x -> x^p`.
    pub fn frobenius(&self) -> FFElem {
        self.pow(self.field.inner.p)
    }

    /// Multiplicative inverse by extended Euclid against the modulus;
    /// panics on zero.
    pub fn inv(&self) -> FFElem {
        assert!(!self.is_zero(), "inverse of zero field element");
        let p = self.field.inner.p;
        let m = &self.field.inner.modulus;
        // invariant: old_r = old_u * a (mod modulus), ditto r = u * a
        let mut old_r = self.coeffs.clone();
        let mut r = m.clone();
        let mut old_u = vec![1u64];
        let mut u: Vec<u64> = Vec::new();
        while !r.is_empty() {
            let lc = inv_mod_p(*r.last().unwrap(), p);
            let rm = make_monic(&r, p);
            let q = quot_monic(&old_r, &rm, p);
            let q_scaled = mul_mod(&q, &[lc], p);
            let new_r = sub_mod(&old_r, &mul_mod(&q_scaled, &r, p), p);
            let new_u = sub_mod(&old_u, &mul_mod(&q_scaled, &u, p), p);
            old_r = r;
            old_u = u;
            r = new_r;
            u = new_u;
        }
        // old_r is a nonzero constant gcd
        debug_assert_eq!(deg(&old_r), Some(0));
        let scale = inv_mod_p(old_r[0], p);
        let coeffs = rem_monic(&mul_mod(&old_u, &[scale], p), m, p);
        FFElem {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// Trace to the prime field: `sum of x^(p^i)` for `i < k`, returned as
    /// a residue in `0..p`.
    pub fn trace(&self) -> u64 {
        let mut acc = self.field.zero();
        let mut cur = self.clone();
        for _ in 0..self.field.inner.k {
            acc = acc + cur.clone();
            cur = cur.frobenius();
        }
        assert!(acc.coeffs.len() <= 1, "trace must land in the prime field");
        acc.coeffs.first().copied().unwrap_or(0)
    }
}

impl Add for FFElem {
    type Output = FFElem;
    fn add(self, rhs: Self) -> Self {
        self.check_same_field(&rhs);
        let coeffs = add_mod(&self.coeffs, &rhs.coeffs, self.field.inner.p);
        FFElem {
            field: self.field,
            coeffs,
        }
    }
}

impl Sub for FFElem {
    type Output = FFElem;
    fn sub(self, rhs: Self) -> Self {
        self.check_same_field(&rhs);
        let coeffs = sub_mod(&self.coeffs, &rhs.coeffs, self.field.inner.p);
        FFElem {
            field: self.field,
            coeffs,
        }
    }
}

impl Neg for FFElem {
    type Output = FFElem;
    fn neg(self) -> Self {
        let p = self.field.inner.p;
        let coeffs = trim(self.coeffs.iter().map(|&c| (p - c) % p).collect());
        FFElem {
            field: self.field,
            coeffs,
        }
    }
}

impl Mul for FFElem {
    type Output = FFElem;
    fn mul(self, rhs: Self) -> Self {
        self.check_same_field(&rhs);
        let p = self.field.inner.p;
        let prod = mul_mod(&self.coeffs, &rhs.coeffs, p);
        let coeffs = rem_monic(&prod, &self.field.inner.modulus, p);
        FFElem {
            field: self.field,
            coeffs,
        }
    }
}
