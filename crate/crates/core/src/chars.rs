//! Class functions with exact cyclotomic values: inner products, induction,
//! restriction, tensor products, and full character tables.
//!
//! Character tables are computed by the Burnside class-sum method with
//! Dixon's modular lifting: simultaneous eigenvectors of the class-sum
//! structure matrices over a prime field `F_l` (with `l = 1 mod exponent`
//! and `l > 2 sqrt(|G|)`) give the central characters, dimensions are
//! recovered mod `l`, and values lift to `Q(zeta)` through a discrete
//! Fourier inversion on each element's cyclic group. Every table is then
//! verified orthonormal with exact arithmetic before it is returned.

use crate::exact::Cyclotomic;
use crate::groups::{FiniteGroup, Subgroup, DEFAULT_GROUP_BOUND};
use crate::{Int, Rat};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CharError {
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("expected {expected} class values, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("the class function is not defined on that subgroup")]
    WrongParent,
    #[error("multiplicity of row {row} is {value}, not a non-negative integer")]
    BadMultiplicity { row: usize, value: String },
    #[error("multiplicity of row {row} is {value}, not an integer")]
    NonIntegralMultiplicity { row: usize, value: String },
    #[error("rows {i} and {j} have inner product {value}, table is not orthonormal")]
    NotOrthonormal { i: usize, j: usize, value: String },
    #[error("squared dimensions sum to {got} but the group order is {order}")]
    DimensionMismatch { got: String, order: usize },
    #[error("table needs one row per conjugacy class: {rows} rows, {classes} classes")]
    WrongRowCount { rows: usize, classes: usize },
    #[error("group order {order} exceeds the table bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
}

/// A cyclotomic-valued class function, one value per conjugacy class in
/// the group's canonical class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: FiniteGroup,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self, CharError> {
        let classes = group.conjugacy_classes().len();
        if values.len() != classes {
            return Err(CharError::BadLength {
                expected: classes,
                got: values.len(),
            });
        }
        Ok(ClassFunction { group, values })
    }

    /// Build from a per-element rule (the rule must be constant on classes;
    /// the representative's value is taken).
    pub fn from_elements(group: FiniteGroup, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let values = group
            .conjugacy_classes()
            .classes()
            .iter()
            .map(|c| f(c[0]))
            .collect();
        ClassFunction { group, values }
    }

    pub fn trivial(group: FiniteGroup) -> Self {
        let classes = group.conjugacy_classes().len();
        ClassFunction {
            group,
            values: vec![Cyclotomic::one(); classes],
        }
    }

    /// Character of the regular representation: `|G|` at the identity,
    /// `0` elsewhere.
    pub fn regular(group: FiniteGroup) -> Self {
        let classes = group.conjugacy_classes().len();
        let mut values = vec![Cyclotomic::zero(); classes];
        values[0] = Cyclotomic::from_int(group.order() as i64);
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at_class(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn value_at_element(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.conjugacy_classes().class_of(g)]
    }

    /// Value at the identity.
    pub fn dim(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn dim_usize(&self) -> Option<usize> {
        let r = self.dim().as_rat()?;
        if !r.is_integer() {
            return None;
        }
        let i = r.to_integer();
        (i >= Int::zero()).then(|| {
            use num_traits::ToPrimitive;
            i.to_usize().expect("dimension fits usize")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    pub fn scale(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| c.clone() * v.clone()).collect(),
        }
    }

    /// Pointwise product, the character of the tensor product.
    pub fn tensor(&self, other: &ClassFunction) -> Result<ClassFunction, CharError> {
        if self.group != other.group {
            return Err(CharError::GroupMismatch);
        }
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.clone() * b.clone())
                .collect(),
        })
    }

    /// Complex-conjugate class function (the dual character).
    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// `(1/|G|) sum over g of self(g) * conj(other(g))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic, CharError> {
        if self.group != other.group {
            return Err(CharError::GroupMismatch);
        }
        let cc = self.group.conjugacy_classes();
        let mut sum = Cyclotomic::zero();
        for (i, class) in cc.classes().iter().enumerate() {
            let size = Cyclotomic::from_int(class.len() as i64);
            sum = sum + size * self.values[i].clone() * other.values[i].conj();
        }
        let inv_order = Cyclotomic::from_rat(Rat::new(Int::one(), Int::from(self.group.order())));
        Ok(sum * inv_order)
    }

    /// Restriction to a subgroup, as a class function on `H.as_group()`.
    pub fn restrict(&self, h: &Subgroup) -> Result<ClassFunction, CharError> {
        if *h.parent() != self.group {
            return Err(CharError::WrongParent);
        }
        let hg = h.as_group().clone();
        let elements = h.elements().to_vec();
        Ok(ClassFunction::from_elements(hg, |i| {
            self.value_at_element(elements[i]).clone()
        }))
    }
}

/// Frobenius induction of a class function on `H.as_group()` up to the
/// parent: `(Ind chi)(g) = (1/|H|) sum over x in G with x^-1 g x in H of
/// chi(x^-1 g x)`.
pub fn induce(h: &Subgroup, chi: &ClassFunction) -> Result<ClassFunction, CharError> {
    if chi.group() != h.as_group() {
        return Err(CharError::WrongParent);
    }
    let g = h.parent().clone();
    let cc = g.conjugacy_classes();
    let hg = h.as_group();
    let hcc = hg.conjugacy_classes();
    let inv_h = Cyclotomic::from_rat(Rat::new(Int::one(), Int::from(h.order())));
    let mut values = Vec::with_capacity(cc.len());
    for class in cc.classes() {
        let rep = class[0];
        let mut sum = Cyclotomic::zero();
        for x in 0..g.order() {
            let y = g.conjugate(g.inv(x), rep);
            if let Some(pos) = h.position(y) {
                sum = sum + chi.value_at_class(hcc.class_of(pos)).clone();
            }
        }
        values.push(sum * inv_h.clone());
    }
    Ok(ClassFunction { group: g, values })
}

impl Add for ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: Self) -> Self {
        assert!(self.group == rhs.group, "class functions on different groups");
        ClassFunction {
            group: self.group,
            values: self
                .values
                .into_iter()
                .zip(rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> Self {
        ClassFunction {
            group: self.group,
            values: self.values.into_iter().map(|v| -v).collect(),
        }
    }
}

/// A complete verified table of irreducible characters, rows in canonical
/// order (ascending dimension, then lexicographic value order).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    rows: Vec<ClassFunction>,
}

impl CharacterTable {
    /// Accept externally supplied rows after full verification:
    /// one row per class, pairwise orthonormal, squared dimensions summing
    /// to the group order. Rows are put into canonical order.
    pub fn from_rows(group: FiniteGroup, rows: Vec<ClassFunction>) -> Result<Self, CharError> {
        let classes = group.conjugacy_classes().len();
        if rows.len() != classes {
            return Err(CharError::WrongRowCount {
                rows: rows.len(),
                classes,
            });
        }
        for r in &rows {
            if *r.group() != group {
                return Err(CharError::GroupMismatch);
            }
        }
        let mut rows = rows;
        sort_rows(&mut rows);
        verify_orthonormal(&rows)?;
        let dim_sq: Cyclotomic = rows
            .iter()
            .map(|r| r.dim().clone() * r.dim().clone())
            .sum();
        if dim_sq != Cyclotomic::from_int(group.order() as i64) {
            return Err(CharError::DimensionMismatch {
                got: dim_sq.to_string(),
                order: group.order(),
            });
        }
        Ok(CharacterTable { group, rows })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn rows(&self) -> &[ClassFunction] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.dim_usize().expect("irreducible dimensions are integers"))
            .collect()
    }

    /// Multiplicities `<chi, row_i>`, required to be non-negative integers.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<usize>, CharError> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let m = chi.inner_product(row)?;
            let ok = m.as_rat().filter(|r| r.is_integer()).map(|r| r.to_integer());
            match ok {
                Some(v) if v >= Int::zero() => {
                    use num_traits::ToPrimitive;
                    out.push(v.to_usize().expect("multiplicity fits usize"));
                }
                _ => {
                    return Err(CharError::BadMultiplicity {
                        row: i,
                        value: m.to_string(),
                    })
                }
            }
        }
        Ok(out)
    }

    /// Signed integer multiplicities, for virtual characters.
    pub fn decompose_virtual(&self, chi: &ClassFunction) -> Result<Vec<Int>, CharError> {
        let mut out = Vec::with_capacity(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            let m = chi.inner_product(row)?;
            match m.as_rat().filter(|r| r.is_integer()) {
                Some(r) => out.push(r.to_integer()),
                None => {
                    return Err(CharError::NonIntegralMultiplicity {
                        row: i,
                        value: m.to_string(),
                    })
                }
            }
        }
        Ok(out)
    }
}

fn sort_rows(rows: &mut [ClassFunction]) {
    rows.sort_by(|a, b| {
        let da = a.dim_usize().unwrap_or(usize::MAX);
        let db = b.dim_usize().unwrap_or(usize::MAX);
        da.cmp(&db).then_with(|| {
            for (x, y) in a.values().iter().zip(b.values()) {
                match x.canonical_cmp(y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    });
}

fn verify_orthonormal(rows: &[ClassFunction]) -> Result<(), CharError> {
    for i in 0..rows.len() {
        for j in i..rows.len() {
            let ip = rows[i].inner_product(&rows[j])?;
            let expected = if i == j {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            };
            if ip != expected {
                return Err(CharError::NotOrthonormal {
                    i,
                    j,
                    value: ip.to_string(),
                });
            }
        }
    }
    Ok(())
}

// --- modular linear algebra over F_l for the Dixon lift ---

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn mod_inv(a: u64, l: u64) -> u64 {
    mod_pow(a, l - 2, l)
}

/// Basis of the nullspace of a square matrix over F_l.
fn nullspace(mat: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut m: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        let inv = mod_inv(m[row][col], l);
        for x in m[row].iter_mut() {
            *x = *x * inv % l;
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..n {
                    m[r][c] = (m[r][c] + (l - f) * m[row][c]) % l;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![0u64; n];
        v[fc] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = (l - m[r][fc]) % l;
        }
        basis.push(v);
    }
    basis
}

/// Coordinates of each target vector in terms of a full-column-rank basis:
/// returns `coords` with `target_j = sum_i coords[j][i] * basis[i]`.
fn solve_in_basis(basis: &[Vec<u64>], targets: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let n = basis[0].len();
    let s = basis.len();
    let t = targets.len();
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[r]).collect();
            row.extend(targets.iter().map(|tg| tg[r]));
            row
        })
        .collect();
    let mut row = 0;
    let mut pivot_row_of_col = vec![usize::MAX; s];
    for col in 0..s {
        let p = (row..n)
            .find(|&r| m[r][col] != 0)
            .expect("basis has full column rank");
        m.swap(row, p);
        let inv = mod_inv(m[row][col], l);
        for x in m[row].iter_mut() {
            *x = *x * inv % l;
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..s + t {
                    m[r][c] = (m[r][c] + (l - f) * m[row][c]) % l;
                }
            }
        }
        pivot_row_of_col[col] = row;
        row += 1;
    }
    for r in row..n {
        for c in s..s + t {
            debug_assert_eq!(m[r][c], 0, "target outside the subspace");
        }
    }
    (0..t)
        .map(|j| {
            (0..s)
                .map(|i| m[pivot_row_of_col[i]][s + j])
                .collect::<Vec<u64>>()
        })
        .collect()
}

fn mat_vec(mat: &[Vec<u64>], v: &[u64], l: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + a * b) % l)
        })
        .collect()
}

/// Smallest prime `l = 1 mod e` with `l > floor(2 sqrt(order))`.
fn dixon_prime(exponent: usize, order: usize) -> u64 {
    let e = exponent as u64;
    let bound = (2.0 * (order as f64).sqrt()).floor() as u64;
    let mut l = e + 1;
    loop {
        if l > bound && crate::exact::is_prime_u64(l) {
            return l;
        }
        l += e;
    }
}

/// Compute the table of irreducible characters with exact values.
pub fn character_table(group: &FiniteGroup) -> Result<CharacterTable, CharError> {
    character_table_bounded(group, DEFAULT_GROUP_BOUND)
}

pub fn character_table_bounded(
    group: &FiniteGroup,
    bound: usize,
) -> Result<CharacterTable, CharError> {
    if group.order() > bound {
        return Err(CharError::BoundExceeded {
            order: group.order(),
            bound,
        });
    }
    let cc = group.conjugacy_classes().clone();
    let r = cc.len();
    let e = group.exponent() as u64;
    let l = dixon_prime(group.exponent(), group.order());

    // class-sum structure matrices: B_i[j][k] = #{u in C_i : u^-1 t_k in C_j}
    let mut mats: Vec<Vec<Vec<u64>>> = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for k in 0..r {
            let t_k = cc.representative(k);
            for &u in &cc.classes()[i] {
                let j = cc.class_of(group.mul(group.inv(u), t_k));
                mats[i][j][k] += 1;
            }
        }
    }
    for m in mats.iter_mut().flatten().flatten() {
        *m %= l;
    }

    // split F_l^r into common eigenspaces of the B_i
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let images: Vec<Vec<u64>> = space.iter().map(|v| mat_vec(mat, v, l)).collect();
            let coords = solve_in_basis(&space, &images, l);
            let s = space.len();
            // c[a][b]: coefficient of basis a in the image of basis b
            let c: Vec<Vec<u64>> = (0..s)
                .map(|a| (0..s).map(|b| coords[b][a]).collect())
                .collect();
            let mut captured = 0;
            for lambda in 0..l {
                let shifted: Vec<Vec<u64>> = (0..s)
                    .map(|a| {
                        (0..s)
                            .map(|b| {
                                if a == b {
                                    (c[a][b] + l - lambda) % l
                                } else {
                                    c[a][b]
                                }
                            })
                            .collect()
                    })
                    .collect();
                let ker = nullspace(&shifted, l);
                if ker.is_empty() {
                    continue;
                }
                captured += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|w| {
                        let mut v = vec![0u64; r];
                        for (i, &wi) in w.iter().enumerate() {
                            for (slot, &bi) in v.iter_mut().zip(&space[i]) {
                                *slot = (*slot + wi * bi) % l;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(sub);
                if captured == s {
                    break;
                }
            }
            debug_assert_eq!(captured, s, "class algebra must split completely");
        }
        spaces = next;
    }
    debug_assert!(spaces.len() == r && spaces.iter().all(|s| s.len() == 1));

    // normalize central characters: identity-class entry is 1
    let mut omegas: Vec<Vec<u64>> = Vec::with_capacity(r);
    for space in spaces {
        let v = &space[0];
        assert!(v[0] != 0, "central character vanishes on the identity class");
        let inv = mod_inv(v[0], l);
        omegas.push(v.iter().map(|&x| x * inv % l).collect());
    }

    // inverse-class pairing and dimensions
    let inv_class: Vec<usize> = (0..r)
        .map(|j| cc.class_of(group.inv(cc.representative(j))))
        .collect();
    let order_mod = (group.order() as u64) % l;
    let mut rows_mod: Vec<Vec<u64>> = Vec::with_capacity(r);
    let mut dims: Vec<u64> = Vec::with_capacity(r);
    for omega in &omegas {
        let mut s = 0u64;
        for j in 0..r {
            let nj = (cc.size(j) as u64) % l;
            s = (s + omega[j] * omega[inv_class[j]] % l * mod_inv(nj, l)) % l;
        }
        let d_sq = order_mod * mod_inv(s, l) % l;
        let d = (1..l.div_ceil(2))
            .find(|&d| d * d % l == d_sq)
            .expect("dimension must have a small square root mod l");
        dims.push(d);
        let row: Vec<u64> = (0..r)
            .map(|j| {
                let nj = (cc.size(j) as u64) % l;
                d * omega[j] % l * mod_inv(nj, l) % l
            })
            .collect();
        rows_mod.push(row);
    }

    // lift each value through the cyclic group it lives on:
    // chi(t) = sum_u n_u zeta_o^u with n_u the multiplicity of the
    // eigenvalue zeta_o^u, recovered by Fourier inversion mod l
    let w = {
        // fixed primitive e-th root of unity mod l, from the least
        // primitive root of l
        let mut divs = Vec::new();
        let mut n = l - 1;
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                divs.push(d);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            divs.push(n);
        }
        let g = (2..l)
            .find(|&g| divs.iter().all(|&q| mod_pow(g, (l - 1) / q, l) != 1))
            .expect("prime has a primitive root");
        mod_pow(g, (l - 1) / e, l)
    };
    let mut rows: Vec<ClassFunction> = Vec::with_capacity(r);
    for (row_mod, &d) in rows_mod.iter().zip(&dims) {
        let mut values = Vec::with_capacity(r);
        for j in 0..r {
            let t = cc.representative(j);
            let o = group.element_order(t) as u64;
            let z = mod_pow(w, e / o, l); // primitive o-th root mod l
            let inv_o = mod_inv(o % l, l);
            let mut value = Cyclotomic::zero();
            let mut total = 0u64;
            for u in 0..o {
                // n_u = (1/o) sum_v chi(t^v) z^{-uv}
                let mut acc = 0u64;
                for v in 0..o {
                    let cls = cc.class_of(group.pow(t, v as i64));
                    let zi = mod_inv(mod_pow(z, u * v % (l - 1), l), l);
                    acc = (acc + row_mod[cls] * zi) % l;
                }
                let n_u = acc * inv_o % l;
                assert!(n_u <= d, "eigenvalue multiplicity exceeds the dimension");
                total += n_u;
                if n_u > 0 {
                    let root = Cyclotomic::root_of_unity(o, u as i64).unwrap();
                    value = value + Cyclotomic::from_int(n_u as i64) * root;
                }
            }
            assert_eq!(total, d, "eigenvalue multiplicities must sum to the dimension");
            values.push(value);
        }
        rows.push(ClassFunction {
            group: group.clone(),
            values,
        });
    }

    sort_rows(&mut rows);
    verify_orthonormal(&rows)?;
    let table = CharacterTable {
        group: group.clone(),
        rows,
    };
    debug_assert_eq!(
        table.dims().iter().map(|d| d * d).sum::<usize>(),
        group.order()
    );
    debug_assert!(table.rows[0] == ClassFunction::trivial(group.clone()));
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    fn d10() -> FiniteGroup {
        FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap()
    }

    fn a5() -> FiniteGroup {
        FiniteGroup::from_permutations(5, &[vec![1, 2, 0, 3, 4], vec![0, 1, 3, 4, 2]]).unwrap()
    }

    fn zeta(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn s3_table_matches_known_values() {
        let g = s3();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dims(), vec![1, 1, 2]);
        // class order: identity, 3-cycles (size 2), transpositions (size 3)
        let rho2 = t.row(2);
        assert_eq!(
            rho2.values(),
            &[
                Cyclotomic::from_int(2),
                Cyclotomic::from_int(-1),
                Cyclotomic::zero()
            ]
        );
        assert_eq!(t.row(0), &ClassFunction::trivial(g.clone()));
    }

    #[test]
    fn d10_table_has_golden_ratio_values() {
        let g = d10();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dims(), vec![1, 1, 2, 2]);
        let phi_a = zeta(5, 1) + zeta(5, 4);
        let phi_b = zeta(5, 2) + zeta(5, 3);
        // the two 2-dim rows carry phi_a and phi_b on the rotation classes
        let vals2: Vec<&Cyclotomic> = t.row(2).values().iter().collect();
        let vals3: Vec<&Cyclotomic> = t.row(3).values().iter().collect();
        assert_eq!(*vals2[0], Cyclotomic::from_int(2));
        assert_eq!(*vals3[0], Cyclotomic::from_int(2));
        let pair = (vals2[1].clone(), vals2[2].clone());
        assert!(
            pair == (phi_a.clone(), phi_b.clone()) || pair == (phi_b.clone(), phi_a.clone()),
            "rotation values must be the conjugate golden sums"
        );
        assert_eq!(*vals2[3], Cyclotomic::zero());
        assert_eq!(*vals3[3], Cyclotomic::zero());
    }

    #[test]
    fn a5_dimensions() {
        let t = character_table(&a5()).unwrap();
        assert_eq!(t.dims(), vec![1, 3, 3, 4, 5]);
    }

    #[test]
    fn inner_product_examples() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let trivial = t.row(0);
        let eps = t.row(1);
        let rho2 = t.row(2);
        assert!(trivial.inner_product(eps).unwrap().is_zero());
        assert!(rho2.inner_product(rho2).unwrap().is_one());
        let reg = ClassFunction::regular(g.clone());
        for row in t.rows() {
            assert_eq!(reg.inner_product(row).unwrap(), row.dim().clone());
        }
    }

    #[test]
    fn induce_trivial_from_c2_and_from_e() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let transposition = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let c2 = g.subgroup_generated(&[transposition]);
        let ind = induce(&c2, &ClassFunction::trivial(c2.as_group().clone())).unwrap();
        assert_eq!(t.decompose(&ind).unwrap(), vec![1, 0, 1]);
        let e = g.trivial_subgroup();
        let reg = induce(&e, &ClassFunction::trivial(e.as_group().clone())).unwrap();
        assert_eq!(t.decompose(&reg).unwrap(), vec![1, 1, 2]);
        assert_eq!(reg, ClassFunction::regular(g.clone()));
    }

    #[test]
    fn restriction_examples() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let s = g.index_of_permutation(&[1, 2, 0]).unwrap();
        let c3 = g.subgroup_generated(&[s]);
        let res = t.row(2).restrict(&c3).unwrap();
        assert_eq!(
            res.values(),
            &[
                Cyclotomic::from_int(2),
                Cyclotomic::from_int(-1),
                Cyclotomic::from_int(-1)
            ]
        );
        let res_eps = t.row(1).restrict(&c3).unwrap();
        assert_eq!(res_eps, ClassFunction::trivial(c3.as_group().clone()));
        let e = g.trivial_subgroup();
        let res_e = t.row(2).restrict(&e).unwrap();
        assert_eq!(res_e.values(), &[Cyclotomic::from_int(2)]);
    }

    #[test]
    fn tensor_examples() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let eps = t.row(1);
        let rho2 = t.row(2);
        assert_eq!(eps.tensor(eps).unwrap(), t.row(0).clone());
        assert_eq!(rho2.tensor(eps).unwrap(), rho2.clone());
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let mut vals = vec![Cyclotomic::zero(); 3];
        vals[0] = Cyclotomic::one();
        vals[1] = Cyclotomic::zero();
        vals[2] = Cyclotomic::zero();
        let chi = ClassFunction::new(g.clone(), vals).unwrap();
        assert!(matches!(
            t.decompose(&chi),
            Err(CharError::BadMultiplicity { .. })
        ));
    }

    #[test]
    fn decompose_roundtrips_on_random_sums() {
        let g = d10();
        let t = character_table(&g).unwrap();
        for mults in [[1usize, 0, 2, 1], [0, 3, 1, 0], [2, 2, 0, 0]] {
            let mut chi = ClassFunction::new(
                g.clone(),
                vec![Cyclotomic::zero(); t.len()],
            )
            .unwrap();
            for (m, row) in mults.iter().zip(t.rows()) {
                chi = chi + row.scale(&Cyclotomic::from_int(*m as i64));
            }
            assert_eq!(t.decompose(&chi).unwrap(), mults.to_vec());
        }
    }

    #[test]
    fn column_orthogonality() {
        for g in [s3(), d10(), a5()] {
            let t = character_table(&g).unwrap();
            let cc = g.conjugacy_classes();
            for i in 0..cc.len() {
                for j in 0..cc.len() {
                    let mut s = Cyclotomic::zero();
                    for row in t.rows() {
                        s = s + row.value_at_class(i).clone() * row.value_at_class(j).conj();
                    }
                    if i == j {
                        let centralizer = g.order() / cc.size(i);
                        assert_eq!(s, Cyclotomic::from_int(centralizer as i64));
                    } else {
                        assert!(s.is_zero(), "columns {i},{j} not orthogonal");
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_reciprocity_on_s4() {
        let s4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        let tg = character_table(&s4).unwrap();
        for h in s4.all_subgroups() {
            let th = character_table(h.as_group()).unwrap();
            for chi in th.rows() {
                let ind = induce(&h, chi).unwrap();
                for psi in tg.rows() {
                    let lhs = ind.inner_product(psi).unwrap();
                    let rhs = chi.inner_product(&psi.restrict(&h).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "reciprocity fails for {h}");
                }
            }
        }
    }

    #[test]
    fn from_rows_rejects_corrupted_table() {
        let g = s3();
        let t = character_table(&g).unwrap();
        let mut rows = t.rows().to_vec();
        // corrupt one value
        let mut vals = rows[2].values().to_vec();
        vals[1] = Cyclotomic::from_int(1);
        rows[2] = ClassFunction::new(g.clone(), vals).unwrap();
        assert!(matches!(
            CharacterTable::from_rows(g.clone(), rows),
            Err(CharError::NotOrthonormal { .. })
        ));
        // row count mismatch
        let short = t.rows()[..2].to_vec();
        assert!(matches!(
            CharacterTable::from_rows(g, short),
            Err(CharError::WrongRowCount { .. })
        ));
    }

    #[test]
    fn from_rows_accepts_and_reorders_valid_rows() {
        let g = d10();
        let t = character_table(&g).unwrap();
        let mut rows = t.rows().to_vec();
        rows.reverse();
        let rebuilt = CharacterTable::from_rows(g, rows).unwrap();
        for (a, b) in rebuilt.rows().iter().zip(t.rows()) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn induced_d10_character_lands_in_a5() {
        let g = a5();
        let five_cycle = g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap();
        let flip = g.index_of_permutation(&[0, 4, 3, 2, 1]).unwrap();
        let h = g.subgroup_generated(&[five_cycle, flip]);
        assert_eq!(h.order(), 10);
        let th = character_table(h.as_group()).unwrap();
        let tg = character_table(&g).unwrap();
        // 2-dim rows sit at indices 2 and 3
        let ind2 = induce(&h, th.row(2)).unwrap();
        let ind3 = induce(&h, th.row(3)).unwrap();
        assert_eq!(ind2.dim_usize().unwrap(), 12);
        assert_eq!(ind3.dim_usize().unwrap(), 12);
        let m2 = tg.decompose(&ind2).unwrap();
        let m3 = tg.decompose(&ind3).unwrap();
        // each induction contains the 4- and 5-dim rows once and one of
        // the two 3-dim rows; together they cover both 3-dims
        assert_eq!(m2[0], 0);
        assert_eq!(m3[0], 0);
        assert_eq!(m2[3], 1);
        assert_eq!(m2[4], 1);
        assert_eq!(m3[3], 1);
        assert_eq!(m3[4], 1);
        let threes = (m2[1], m2[2], m3[1], m3[2]);
        assert!(threes == (1, 0, 0, 1) || threes == (0, 1, 1, 0));
    }
}
