//! Finite groups as explicit multiplication tables, with optional
//! permutation realizations.
//!
//! A group is a validated Cayley table with the identity at index 0.
//! Groups built from permutation generators keep their permutations and
//! label elements in cycle notation. All values are immutable after
//! construction and cheap to clone (shared via `Arc`).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};
use thiserror::Error;

/// Closure bound for [`FiniteGroup::from_permutations`].
pub const DEFAULT_GROUP_BOUND: usize = 10080;

#[derive(Debug, Error, PartialEq)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    Empty,
    #[error("row {row} has length {len}, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry at ({row},{col}) is {value}, out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("index 0 is not a two-sided identity: 0*{g} = {left} and {g}*0 = {right}")]
    NoIdentity { g: usize, left: usize, right: usize },
    #[error("associativity fails at ({a},{b},{c}): ({a}*{b})*{c} = {lhs} but {a}*({b}*{c}) = {rhs}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        lhs: usize,
        rhs: usize,
    },
    #[error("element {g} has no inverse")]
    NoInverse { g: usize },
    #[error("{got} labels supplied for a group of order {order}")]
    BadLabels { got: usize, order: usize },
    #[error("generator {perm:?} is not a bijection on 0..{degree}")]
    NotBijection { perm: Vec<usize>, degree: usize },
    #[error("permutation closure exceeded the bound of {bound} elements")]
    ClosureExceeded { bound: usize },
    #[error("element set is not closed: {a}*{b} = {c} lies outside")]
    NotClosed { a: usize, b: usize, c: usize },
    #[error("subgroup does not contain the identity")]
    MissingIdentity,
    #[error("subgroup is not normal: conjugating {n} by {g} gives {out}, which lies outside")]
    NotNormal { g: usize, n: usize, out: usize },
    #[error("group was not built from permutations")]
    NoPermutationData,
}

#[derive(Debug)]
struct GroupData {
    order: usize,
    /// `table[g][h]` is the index of `g * h`.
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
    /// 0-based image vectors when built from permutations.
    perms: Option<Vec<Vec<usize>>>,
    classes: OnceLock<ConjugacyPartition>,
}

/// A finite group; clones share the underlying table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.table == other.inner.table
    }
}

impl Eq for FiniteGroup {}

/// The partition of a group into conjugacy classes, in the canonical
/// order: ascending class size, ties broken by least element index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    /// Least element of each class, the canonical representative.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    pub fn size(&self, class: usize) -> usize {
        self.classes[class].len()
    }
}

impl FiniteGroup {
    /// Validate a Cayley table (`table[g][h] = g*h`, identity at index 0).
    ///
    /// Labels default to `g0, g1, ...` when not supplied.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            for (col, &v) in r.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(GroupError::NoIdentity {
                    g,
                    left: table[0][g],
                    right: table[g][0],
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    let lhs = table[ab][c];
                    let rhs = table[a][table[b][c]];
                    if lhs != rhs {
                        return Err(GroupError::NotAssociative { a, b, c, lhs, rhs });
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0) {
                Some(h) => inverse[g] = h,
                None => return Err(GroupError::NoInverse { g }),
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(GroupError::BadLabels {
                    got: l.len(),
                    order: n,
                })
            }
            Some(l) => l,
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup {
            inner: Arc::new(GroupData {
                order: n,
                table,
                inverse,
                labels,
                perms: None,
                classes: OnceLock::new(),
            }),
        })
    }

    pub fn trivial() -> Self {
        Self::from_table(vec![vec![0]], None).unwrap()
    }

    /// Close a set of permutation generators (0-based image vectors on
    /// `0..degree`) under composition, with the default size bound.
    ///
    /// Elements are indexed in breadth-first discovery order starting from
    /// the identity and are labeled in 1-based cycle notation.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutations_bounded(degree, generators, DEFAULT_GROUP_BOUND)
    }

    pub fn from_permutations_bounded(
        degree: usize,
        generators: &[Vec<usize>],
        bound: usize,
    ) -> Result<Self, GroupError> {
        for g in generators {
            let mut seen = vec![false; degree];
            let ok = g.len() == degree
                && g.iter().all(|&i| {
                    if i < degree && !seen[i] {
                        seen[i] = true;
                        true
                    } else {
                        false
                    }
                });
            if !ok {
                return Err(GroupError::NotBijection {
                    perm: g.clone(),
                    degree,
                });
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for gen in generators {
                let prod = compose(gen, &elems[i]);
                if !index.contains_key(&prod) {
                    if elems.len() >= bound {
                        return Err(GroupError::ClosureExceeded { bound });
                    }
                    index.insert(prod.clone(), elems.len());
                    elems.push(prod);
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[a][b] = index[&compose(&elems[a], &elems[b])];
            }
        }
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a][b] == 0).unwrap();
        }
        let labels = elems.iter().map(|p| cycle_label(p)).collect();
        Ok(FiniteGroup {
            inner: Arc::new(GroupData {
                order: n,
                table,
                inverse,
                labels,
                perms: Some(elems),
                classes: OnceLock::new(),
            }),
        })
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverse[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g x g^{-1}
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut e = k.unsigned_abs();
        let mut acc = 0usize;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1usize, |acc, g| {
            let o = self.element_order(g);
            acc / gcd(acc, o) * o
        })
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, g: usize) -> &str {
        &self.inner.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    /// The permutation realizing `g`, when the group was built from
    /// permutations.
    pub fn permutation(&self, g: usize) -> Option<&[usize]> {
        self.inner.perms.as_ref().map(|ps| ps[g].as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.inner.perms.as_ref().map(|ps| ps[0].len())
    }

    /// Index of the element realized by a 0-based image vector.
    pub fn index_of_permutation(&self, perm: &[usize]) -> Option<usize> {
        let ps = self.inner.perms.as_ref()?;
        ps.iter().position(|p| p == perm)
    }

    /// Cycle lengths of `g` including fixed points, sorted descending.
    pub fn cycle_type(&self, g: usize) -> Result<Vec<usize>, GroupError> {
        let ps = self
            .inner
            .perms
            .as_ref()
            .ok_or(GroupError::NoPermutationData)?;
        Ok(cycle_lengths(&ps[g]))
    }

    /// Conjugacy classes in the canonical order, computed once per group.
    pub fn conjugacy_classes(&self) -> &ConjugacyPartition {
        self.inner.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for g in 0..n {
                if class_of[g] != usize::MAX {
                    continue;
                }
                let mut members: BTreeSet<usize> = BTreeSet::new();
                for x in 0..n {
                    members.insert(self.conjugate(x, g));
                }
                let members: Vec<usize> = members.into_iter().collect();
                for &m in &members {
                    class_of[m] = classes.len();
                }
                classes.push(members);
            }
            // canonical order: (size, least element)
            let mut order: Vec<usize> = (0..classes.len()).collect();
            order.sort_by_key(|&i| (classes[i].len(), classes[i][0]));
            let mut renumber = vec![0usize; classes.len()];
            for (new, &old) in order.iter().enumerate() {
                renumber[old] = new;
            }
            let classes: Vec<Vec<usize>> = order.iter().map(|&i| classes[i].clone()).collect();
            for c in class_of.iter_mut() {
                *c = renumber[*c];
            }
            ConjugacyPartition { classes, class_of }
        })
    }

    /// Wrap a set of element indices as a subgroup, checking closure.
    pub fn subgroup(&self, elements: Vec<usize>) -> Result<Subgroup, GroupError> {
        let mut elems: Vec<usize> = elements;
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(GroupError::MissingIdentity);
        }
        let member: BTreeSet<usize> = elems.iter().copied().collect();
        for &a in &elems {
            for &b in &elems {
                let c = self.mul(a, b);
                if !member.contains(&c) {
                    return Err(GroupError::NotClosed { a, b, c });
                }
            }
        }
        Ok(Subgroup::build(self.clone(), elems))
    }

    /// Subgroup generated by a set of elements.
    pub fn subgroup_generated(&self, generators: &[usize]) -> Subgroup {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut stack: Vec<usize> = vec![0];
        while let Some(x) = stack.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    stack.push(y);
                }
            }
        }
        // finite closure under one-sided products contains inverses
        let elems: Vec<usize> = (0..self.order()).filter(|&i| member[i]).collect();
        Subgroup::build(self.clone(), elems)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::build(self.clone(), vec![0])
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::build(self.clone(), (0..self.order()).collect())
    }

    /// Every subgroup, as the closure of the cyclic subgroups under
    /// pairwise join; sorted by (order, element list).
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(vec![0]);
        for g in 0..self.order() {
            found.insert(self.subgroup_generated(&[g]).elements().to_vec());
        }
        loop {
            let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
            let before = found.len();
            for i in 0..snapshot.len() {
                for j in i + 1..snapshot.len() {
                    let gens: Vec<usize> = snapshot[i]
                        .iter()
                        .chain(snapshot[j].iter())
                        .copied()
                        .collect();
                    found.insert(self.subgroup_generated(&gens).elements().to_vec());
                }
            }
            if found.len() == before {
                break;
            }
        }
        let mut sets: Vec<Vec<usize>> = found.into_iter().collect();
        sets.sort_by_key(|s| (s.len(), s.clone()));
        sets.into_iter()
            .map(|s| Subgroup::build(self.clone(), s))
            .collect()
    }

    /// Quotient by a normal subgroup: the coset group (cosets ordered by
    /// least member, so the trivial coset is index 0) and the projection
    /// map, verified to be a homomorphism on every pair.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        n.check_normal()?;
        let order = self.order();
        let mut coset_of = vec![usize::MAX; order];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for g in 0..order {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = n.elements().iter().map(|&h| self.mul(g, h)).collect();
            members.sort_unstable();
            for &m in &members {
                coset_of[m] = cosets.len();
            }
            cosets.push(members);
        }
        // iteration above scans g ascending, so cosets are already ordered
        // by least member and the identity coset is first
        let q = cosets.len();
        let mut table = vec![vec![0usize; q]; q];
        for (i, ci) in cosets.iter().enumerate() {
            for (j, cj) in cosets.iter().enumerate() {
                table[i][j] = coset_of[self.mul(ci[0], cj[0])];
            }
        }
        let labels = cosets
            .iter()
            .map(|c| format!("[{}]", self.label(c[0])))
            .collect();
        let group = FiniteGroup::from_table(table, Some(labels))?;
        for a in 0..order {
            for b in 0..order {
                debug_assert_eq!(
                    coset_of[self.mul(a, b)],
                    group.mul(coset_of[a], coset_of[b]),
                    "projection failed to be a homomorphism at ({a},{b})"
                );
            }
        }
        Ok((group, coset_of))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(f . g)(x) = f(g(x))`.
fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

fn cycle_lengths(perm: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// 1-based cycle notation; fixed points omitted, identity is `()`.
fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x + 1);
            x = perm[x];
        }
        out.push('(');
        out.push_str(
            &cycle
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[derive(Debug)]
struct SubgroupData {
    parent: FiniteGroup,
    /// Sorted parent indices; always starts with 0.
    elements: Vec<usize>,
    /// Parent index -> position in `elements`.
    position: HashMap<usize, usize>,
    as_group: OnceLock<FiniteGroup>,
}

/// A subgroup of a [`FiniteGroup`], holding sorted parent indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    inner: Arc<SubgroupData>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.inner.parent == other.inner.parent && self.inner.elements == other.inner.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn build(parent: FiniteGroup, elements: Vec<usize>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        let position = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Subgroup {
            inner: Arc::new(SubgroupData {
                parent,
                elements,
                position,
                as_group: OnceLock::new(),
            }),
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.inner.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.inner.elements
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn index(&self) -> usize {
        self.inner.parent.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.inner.position.contains_key(&g)
    }

    /// Position of a parent element inside this subgroup's element list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.inner.position.get(&g).copied()
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.inner.parent.order()
    }

    /// The subgroup as a standalone group; element `i` of the result is
    /// `self.elements()[i]`. Computed once, so repeated calls return the
    /// identical group.
    pub fn as_group(&self) -> &FiniteGroup {
        self.inner.as_group.get_or_init(|| {
            let n = self.order();
            let p = &self.inner.parent;
            let mut table = vec![vec![0usize; n]; n];
            for i in 0..n {
                for j in 0..n {
                    let prod = p.mul(self.inner.elements[i], self.inner.elements[j]);
                    table[i][j] = self.position(prod).expect("subgroup is closed");
                }
            }
            let labels = self
                .inner
                .elements
                .iter()
                .map(|&e| p.label(e).to_string())
                .collect();
            FiniteGroup::from_table(table, Some(labels)).expect("subgroup table is a group")
        })
    }

    pub fn conjugate_by(&self, g: usize) -> Subgroup {
        let p = &self.inner.parent;
        let mut elems: Vec<usize> = self
            .inner
            .elements
            .iter()
            .map(|&x| p.conjugate(g, x))
            .collect();
        elems.sort_unstable();
        Subgroup::build(p.clone(), elems)
    }

    pub fn is_normal(&self) -> bool {
        self.check_normal().is_ok()
    }

    fn check_normal(&self) -> Result<(), GroupError> {
        let p = &self.inner.parent;
        for g in 0..p.order() {
            for &n in &self.inner.elements {
                let out = p.conjugate(g, n);
                if !self.contains(out) {
                    return Err(GroupError::NotNormal { g, n, out });
                }
            }
        }
        Ok(())
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        assert!(self.inner.parent == other.inner.parent, "parent mismatch");
        let elems: Vec<usize> = self
            .inner
            .elements
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect();
        Subgroup::build(self.inner.parent.clone(), elems)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &e) in self.inner.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.inner.parent.label(e))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    fn d10() -> FiniteGroup {
        // (1 2 3 4 5) and (2 5)(3 4)
        FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap()
    }

    fn a5() -> FiniteGroup {
        // (1 2 3) and (3 4 5)
        FiniteGroup::from_permutations(5, &[vec![1, 2, 0, 3, 4], vec![0, 1, 3, 4, 2]]).unwrap()
    }

    #[test]
    fn s3_has_order_6_and_validates() {
        let g = s3();
        assert_eq!(g.order(), 6);
        // revalidate its own table through the table constructor
        let table: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| g.mul(a, b)).collect())
            .collect();
        let h = FiniteGroup::from_table(table, None).unwrap();
        assert_eq!(h.order(), 6);
        assert!(g == h);
    }

    #[test]
    fn corrupted_table_names_a_triple() {
        let g = s3();
        let mut table: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| g.mul(a, b)).collect())
            .collect();
        // swap two entries deep in the table
        table[3].swap(4, 5);
        match FiniteGroup::from_table(table, None) {
            Err(GroupError::NotAssociative { .. }) => {}
            other => panic!("expected an associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn trivial_group_is_valid() {
        let g = FiniteGroup::trivial();
        assert_eq!(g.order(), 1);
        assert_eq!(g.exponent(), 1);
    }

    #[test]
    fn identity_misplacement_is_reported() {
        // C2 with the identity at index 1
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_table(t, None),
            Err(GroupError::NoIdentity { .. })
        ));
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(d10().order(), 10);
        let c3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(c3.order(), 3);
        let e = FiniteGroup::from_permutations(4, &[]).unwrap();
        assert_eq!(e.order(), 1);
        assert_eq!(a5().order(), 60);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let r = FiniteGroup::from_permutations_bounded(5, &[vec![1, 2, 3, 4, 0]], 3);
        assert_eq!(r, Err(GroupError::ClosureExceeded { bound: 3 }));
    }

    #[test]
    fn identity_label_and_position() {
        let g = d10();
        assert_eq!(g.label(0), "()");
        assert_eq!(g.label(g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap()), "(1 2 3 4 5)");
    }

    #[test]
    fn class_sizes_s3_d10_a5() {
        let sizes = |g: &FiniteGroup| -> Vec<usize> {
            g.conjugacy_classes()
                .classes()
                .iter()
                .map(|c| c.len())
                .collect()
        };
        assert_eq!(sizes(&s3()), vec![1, 2, 3]);
        assert_eq!(sizes(&d10()), vec![1, 2, 2, 5]);
        assert_eq!(sizes(&a5()), vec![1, 12, 12, 15, 20]);
    }

    #[test]
    fn classes_partition_and_identity_is_alone() {
        for g in [s3(), d10(), a5()] {
            let cc = g.conjugacy_classes();
            let total: usize = cc.classes().iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order());
            assert_eq!(cc.classes()[0], vec![0]);
            for (i, class) in cc.classes().iter().enumerate() {
                assert_eq!(g.order() % class.len(), 0);
                for &m in class {
                    assert_eq!(cc.class_of(m), i);
                }
            }
        }
    }

    #[test]
    fn one_class_one_cycle_type() {
        let g = d10();
        for class in g.conjugacy_classes().classes() {
            let t0 = g.cycle_type(class[0]).unwrap();
            for &m in class {
                assert_eq!(g.cycle_type(m).unwrap(), t0);
            }
        }
    }

    #[test]
    fn cycle_types_in_s5() {
        let s5 =
            FiniteGroup::from_permutations(5, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]]).unwrap();
        assert_eq!(s5.order(), 120);
        let five = s5.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(s5.cycle_type(five).unwrap(), vec![5]);
        let double = s5.index_of_permutation(&[0, 4, 3, 2, 1]).unwrap();
        assert_eq!(s5.cycle_type(double).unwrap(), vec![2, 2, 1]);
        assert_eq!(s5.cycle_type(0).unwrap(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn quotient_s4_by_v4() {
        let s4 =
            FiniteGroup::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(s4.order(), 24);
        let a = s4.index_of_permutation(&[1, 0, 3, 2]).unwrap();
        let b = s4.index_of_permutation(&[2, 3, 0, 1]).unwrap();
        let v4 = s4.subgroup_generated(&[a, b]);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_normal());
        let (q, proj) = s4.quotient(&v4).unwrap();
        assert_eq!(q.order(), 6);
        let sizes: Vec<usize> = q
            .conjugacy_classes()
            .classes()
            .iter()
            .map(|c| c.len())
            .collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        for x in 0..s4.order() {
            for y in 0..s4.order() {
                assert_eq!(proj[s4.mul(x, y)], q.mul(proj[x], proj[y]));
            }
        }
    }

    #[test]
    fn quotient_c6_by_c3() {
        let c6 = FiniteGroup::from_permutations(6, &[vec![1, 2, 3, 4, 5, 0]]).unwrap();
        let g = c6.index_of_permutation(&[2, 3, 4, 5, 0, 1]).unwrap();
        let c3 = c6.subgroup_generated(&[g]);
        assert_eq!(c3.order(), 3);
        let (q, _) = c6.quotient(&c3).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_by_non_normal_fails() {
        let g = s3();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let c2 = g.subgroup_generated(&[t]);
        assert_eq!(c2.order(), 2);
        assert!(matches!(
            g.quotient(&c2),
            Err(GroupError::NotNormal { .. })
        ));
    }

    #[test]
    fn subgroup_checks_closure() {
        let g = s3();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let r = g.index_of_permutation(&[1, 2, 0]).unwrap();
        assert!(g.subgroup(vec![0, t]).is_ok());
        assert!(matches!(
            g.subgroup(vec![0, t, r]),
            Err(GroupError::NotClosed { .. })
        ));
        assert!(matches!(
            g.subgroup(vec![1, 2]),
            Err(GroupError::MissingIdentity)
        ));
    }

    #[test]
    fn subgroup_lattice_sizes() {
        // S3: trivial, three C2, one C3, full
        assert_eq!(s3().all_subgroups().len(), 6);
        // D10: trivial, five C2, C5, full
        assert_eq!(d10().all_subgroups().len(), 8);
    }

    #[test]
    fn subgroup_as_group_roundtrip() {
        let g = d10();
        let r = g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap();
        let c5 = g.subgroup_generated(&[r]);
        let h = c5.as_group();
        assert_eq!(h.order(), 5);
        assert!(h.is_abelian());
        // identical group on repeated calls
        assert!(std::ptr::eq(h, c5.as_group()));
        // element i of h is elements()[i] of the subgroup
        for i in 0..5 {
            for j in 0..5 {
                let parent_prod = g.mul(c5.elements()[i], c5.elements()[j]);
                assert_eq!(c5.elements()[h.mul(i, j)], parent_prod);
            }
        }
    }

    #[test]
    fn element_orders_and_exponent() {
        let g = d10();
        assert_eq!(g.element_order(0), 1);
        let r = g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(g.element_order(r), 5);
        assert_eq!(g.exponent(), 10);
        assert_eq!(g.pow(r, 5), 0);
        assert_eq!(g.pow(r, -1), g.inv(r));
    }
}
