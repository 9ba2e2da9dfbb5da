//! Ramification data for a finite Galois extension of a p-adic field:
//! local polynomials, conductor exponents computed two independent ways,
//! discriminant valuations, restriction to subextensions, and
//! Frobenius-class probing of unramified primes.
//!
//! The Frobenius convention is geometric throughout: `det(1 - Phi*T)` is
//! formed with `Phi` the inverse of the stored arithmetic Frobenius lift,
//! and every result is independent of which coset representative was
//! stored.

use crate::chars::{induce, CharError, ClassFunction};
use crate::exact::{
    ff_factor_degrees, ff_is_squarefree, ff_orbit_resolvent, newton_charpoly, Cyclotomic, FFError,
    UniPoly,
};
use crate::groups::{FiniteGroup, GroupError, Subgroup};
use crate::{Int, Rat};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LocalError {
    #[error("ramification chain is empty")]
    EmptyChain,
    #[error("ramification subgroup I_{k} is not normal in the Galois group")]
    NotNormal { k: usize },
    #[error("ramification chain is not descending at I_{k}")]
    NotDescending { k: usize },
    #[error("ramification chain must end with the trivial group, I_{k} has order {order}")]
    ChainNotClosed { k: usize, order: usize },
    #[error("I_1 has order {got}, but the Sylow-{p} subgroup of inertia has order {expected}")]
    WildPartWrong { p: u64, got: usize, expected: usize },
    #[error("tame quotient I_0/I_1 of order {order} is not cyclic")]
    TameNotCyclic { order: usize },
    #[error("frobenius image does not generate the residue quotient G/I_0 of order {order}")]
    FrobeniusNotGenerator { order: usize },
    #[error("{q} is not a positive power of the residue characteristic {p}")]
    BadResidueSize { q: u64, p: u64 },
    #[error("residue characteristic {p} is not prime")]
    NotPrime { p: u64 },
    #[error("a chain subgroup does not belong to the stated Galois group")]
    ForeignSubgroup,
    #[error("element index {g} is out of range for a group of order {order}")]
    BadElement { g: usize, order: usize },
    #[error("residue size overflows 64 bits: {q}^{f}")]
    ResidueOverflow { q: u64, f: usize },
    #[error("class function with value {value} at the identity is not a character")]
    NotACharacter { value: String },
    #[error("conductor total {value} is not an integer; the ramification data is inconsistent")]
    NonIntegralConductor { value: String },
    #[error("polynomial degree {poly} does not match the permutation domain of size {domain}")]
    DegreeMismatch { poly: usize, domain: usize },
    #[error("polynomial is not squarefree modulo {p}; the prime is ramified or degenerate")]
    NotSquarefree { p: u64 },
    #[error("no conjugacy class has cycle type {0:?}")]
    NoMatchingClass(Vec<usize>),
    #[error("cycle type {ct:?} matches {count} classes and no discriminator applies")]
    AmbiguousClass { ct: Vec<usize>, count: usize },
    #[error("resolvent values {r1} and {r2} coincide modulo {p}; class stays ambiguous")]
    ResolventCollision { r1: Int, r2: Int, p: u64 },
    #[error("orbit resolvent {m} matches neither {r1} nor {r2} modulo {p}")]
    ResolventMismatch { m: u64, r1: Int, r2: Int, p: u64 },
    #[error("numerical resolvent {value} is not within 0.25 of an integer")]
    RoundingFailure { value: f64 },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    FiniteField(#[from] FFError),
}

/// Ramification breaks of the non-identity inertia elements:
/// `break(g) = max{k : g in I_k}`, a class function under conjugation by
/// the full Galois group.
#[derive(Clone, Debug, PartialEq)]
pub struct BreakFunction {
    entries: Vec<(usize, usize)>,
}

impl BreakFunction {
    /// `(element, break)` pairs, ascending by element index.
    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn break_of(&self, g: usize) -> Option<usize> {
        self.entries
            .iter()
            .find(|(e, _)| *e == g)
            .map(|(_, b)| *b)
    }

    /// Sum of all breaks, the value the Swan pairing assigns to the
    /// identity with a positive sign.
    pub fn total(&self) -> usize {
        self.entries.iter().map(|(_, b)| b).sum()
    }
}

/// Validated ramification data: group, lower-numbered chain
/// `I_0 >= I_1 >= ... >= I_m = 1`, a Frobenius lift, and residue data.
#[derive(Clone, Debug)]
pub struct RamificationData {
    group: FiniteGroup,
    chain: Vec<Subgroup>,
    frobenius: usize,
    p: u64,
    q: u64,
    breaks: BreakFunction,
}

fn is_cyclic(g: &FiniteGroup) -> bool {
    (0..g.order()).any(|x| g.element_order(x) == g.order())
}

fn p_part(mut n: usize, p: u64) -> usize {
    let mut out = 1;
    while n % (p as usize) == 0 {
        out *= p as usize;
        n /= p as usize;
    }
    out
}

impl RamificationData {
    /// Validate raw fields and precompute the break function. Every
    /// violated structural invariant is reported by name.
    pub fn new(
        group: FiniteGroup,
        chain: Vec<Subgroup>,
        frobenius: usize,
        p: u64,
        q: u64,
    ) -> Result<Self, LocalError> {
        if !crate::exact::is_prime_u64(p) {
            return Err(LocalError::NotPrime { p });
        }
        {
            let mut m = q;
            if m < p {
                return Err(LocalError::BadResidueSize { q, p });
            }
            while m % p == 0 {
                m /= p;
            }
            if m != 1 {
                return Err(LocalError::BadResidueSize { q, p });
            }
        }
        if chain.is_empty() {
            return Err(LocalError::EmptyChain);
        }
        if frobenius >= group.order() {
            return Err(LocalError::BadElement {
                g: frobenius,
                order: group.order(),
            });
        }
        for (k, sub) in chain.iter().enumerate() {
            if *sub.parent() != group {
                return Err(LocalError::ForeignSubgroup);
            }
            if !sub.is_normal() {
                return Err(LocalError::NotNormal { k });
            }
        }
        for k in 1..chain.len() {
            if !chain[k]
                .elements()
                .iter()
                .all(|&g| chain[k - 1].contains(g))
            {
                return Err(LocalError::NotDescending { k });
            }
        }
        let last = chain.len() - 1;
        if chain[last].order() != 1 {
            return Err(LocalError::ChainNotClosed {
                k: last,
                order: chain[last].order(),
            });
        }

        let inertia = &chain[0];
        let wild = if chain.len() > 1 {
            &chain[1]
        } else {
            &chain[last]
        };
        let sylow = p_part(inertia.order(), p);
        if wild.order() != sylow {
            return Err(LocalError::WildPartWrong {
                p,
                got: wild.order(),
                expected: sylow,
            });
        }

        // tame quotient I_0/I_1 must be cyclic
        let i0g = inertia.as_group().clone();
        let wild_in_i0: Vec<usize> = wild
            .elements()
            .iter()
            .map(|&g| inertia.position(g).expect("wild inertia sits inside inertia"))
            .collect();
        let wild_sub = i0g.subgroup(wild_in_i0)?;
        let (tame, _) = i0g.quotient(&wild_sub)?;
        if !is_cyclic(&tame) {
            return Err(LocalError::TameNotCyclic { order: tame.order() });
        }

        // G/I_0 must be cyclic with the frobenius image as a generator
        let (residue, proj) = group.quotient(inertia)?;
        if residue.element_order(proj[frobenius]) != residue.order() {
            return Err(LocalError::FrobeniusNotGenerator {
                order: residue.order(),
            });
        }

        let mut entries = Vec::new();
        for &g in inertia.elements() {
            if g == 0 {
                continue;
            }
            let brk = (0..chain.len())
                .rev()
                .find(|&k| chain[k].contains(g))
                .expect("inertia element lies in I_0");
            entries.push((g, brk));
        }
        let breaks = BreakFunction { entries };
        #[cfg(debug_assertions)]
        for &(g, b) in &breaks.entries {
            for x in 0..group.order() {
                let c = group.conjugate(x, g);
                debug_assert_eq!(
                    breaks.break_of(c),
                    Some(b),
                    "breaks must be constant on conjugacy classes"
                );
            }
        }
        Ok(RamificationData {
            group,
            chain,
            frobenius,
            p,
            q,
            breaks,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn inertia(&self) -> &Subgroup {
        &self.chain[0]
    }

    pub fn chain(&self) -> &[Subgroup] {
        &self.chain
    }

    pub fn frobenius(&self) -> usize {
        self.frobenius
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn breaks(&self) -> &BreakFunction {
        &self.breaks
    }

    pub fn is_unramified(&self) -> bool {
        self.chain[0].order() == 1
    }

    /// Residue degree of the subextension fixed by `H`: the index of the
    /// image of `H` in the cyclic residue quotient `G/I_0`.
    pub fn relative_residue_degree(&self, h: &Subgroup) -> Result<usize, LocalError> {
        if *h.parent() != self.group {
            return Err(LocalError::ForeignSubgroup);
        }
        let (residue, proj) = self.group.quotient(&self.chain[0])?;
        let mut image: Vec<usize> = h.elements().iter().map(|&g| proj[g]).collect();
        image.sort_unstable();
        image.dedup();
        Ok(residue.order() / image.len())
    }

    /// Ramification data of the same big field over the subextension fixed
    /// by `H`: the chain intersects with `H` (lower numbering is preserved
    /// under passage to a subgroup), the residue field grows by the
    /// relative residue degree, and the new Frobenius is any element of
    /// `H` in the right `I_0`-coset.
    pub fn restrict(&self, h: &Subgroup) -> Result<RamificationData, LocalError> {
        if *h.parent() != self.group {
            return Err(LocalError::ForeignSubgroup);
        }
        let f = self.relative_residue_degree(h)?;
        let q = self
            .q
            .checked_pow(f.try_into().unwrap_or(u32::MAX))
            .ok_or(LocalError::ResidueOverflow { q: self.q, f })?;
        let hg = h.as_group().clone();
        let mut chain = Vec::with_capacity(self.chain.len());
        for sub in &self.chain {
            let inter = sub.intersect(h);
            let elems: Vec<usize> = inter
                .elements()
                .iter()
                .map(|&g| h.position(g).expect("intersection lies inside H"))
                .collect();
            chain.push(hg.subgroup(elems)?);
        }
        let phi_f = self.group.pow(self.frobenius, f as i64);
        let target_inv = self.group.inv(phi_f);
        let frob_in_g = h
            .elements()
            .iter()
            .copied()
            .find(|&x| self.chain[0].contains(self.group.mul(target_inv, x)))
            .expect("H meets the Frobenius^f coset of inertia");
        let frobenius = h.position(frob_in_g).expect("element of H");
        RamificationData::new(hg, chain, frobenius, self.p, q)
    }
}

/// `det(1 - Phi*T)` on the inertia invariants of `chi`: constant term 1,
/// degree equal to the invariant dimension.
///
/// The power sums are `tr(Phi^k) = (1/|I_0|) sum_h chi(phi^{-k} h)`,
/// averaging over inertia so the answer does not depend on the stored
/// Frobenius lift.
pub fn local_polynomial(
    chi: &ClassFunction,
    data: &RamificationData,
) -> Result<UniPoly<Cyclotomic>, LocalError> {
    if chi.group() != data.group() {
        return Err(CharError::GroupMismatch.into());
    }
    let inertia = data.inertia();
    let d = invariants_dim(chi, inertia)?;
    if d == 0 {
        return Ok(UniPoly::one());
    }
    let inv_size = Cyclotomic::from_rat(Rat::new(Int::one(), Int::from(inertia.order())));
    let mut sums = Vec::with_capacity(d);
    for k in 1..=d {
        let phi_k = data.group().pow(data.frobenius(), -(k as i64));
        let mut s = Cyclotomic::zero();
        for &h in inertia.elements() {
            s = s + chi.value_at_element(data.group().mul(phi_k, h)).clone();
        }
        sums.push(s * inv_size.clone());
    }
    Ok(newton_charpoly(&sums).det_form)
}

/// `<Res_S chi, 1>`: the invariant dimension of `chi` on the subgroup `S`,
/// demanded to be a non-negative integer.
fn invariants_dim(chi: &ClassFunction, s: &Subgroup) -> Result<usize, LocalError> {
    let mut sum = Cyclotomic::zero();
    for &g in s.elements() {
        sum = sum + chi.value_at_element(g).clone();
    }
    let avg = sum * Cyclotomic::from_rat(Rat::new(Int::one(), Int::from(s.order())));
    let bad = || LocalError::NotACharacter {
        value: avg.to_string(),
    };
    let r = avg.as_rat().ok_or_else(bad)?;
    if !r.is_integer() || r.is_negative() {
        return Err(bad());
    }
    r.to_integer().to_usize().ok_or_else(bad)
}

/// Conductor exponent split into its tame and wild parts.
#[derive(Clone, Debug, PartialEq)]
pub struct ConductorExponent {
    pub tame: i64,
    pub wild: Rat,
    pub total: Rat,
    pub integral: bool,
}

impl ConductorExponent {
    pub fn total_int(&self) -> i64 {
        debug_assert!(self.integral);
        self.total.to_integer().to_i64().expect("conductor fits i64")
    }
}

/// Tame part `dim chi - dim chi^{I_0}` plus the wild sum
/// `sum_k (1/[I_0:I_k]) (dim chi - dim chi^{I_k})` over the stored chain.
/// A non-integral total is rejected: it signals inconsistent data.
pub fn conductor_exponent(
    chi: &ClassFunction,
    data: &RamificationData,
) -> Result<ConductorExponent, LocalError> {
    if chi.group() != data.group() {
        return Err(CharError::GroupMismatch.into());
    }
    let dim = chi.dim_usize().ok_or_else(|| LocalError::NotACharacter {
        value: chi.dim().to_string(),
    })? as i64;
    let tame = dim - invariants_dim(chi, data.inertia())? as i64;
    let i0 = data.inertia().order() as i64;
    let mut wild = Rat::zero();
    for sub in data.chain().iter().skip(1) {
        let codim = dim - invariants_dim(chi, sub)? as i64;
        let index = i0 / sub.order() as i64;
        wild += Rat::new(Int::from(codim), Int::from(index));
    }
    let total = Rat::from_integer(Int::from(tame)) + wild.clone();
    if !total.is_integer() {
        return Err(LocalError::NonIntegralConductor {
            value: total.to_string(),
        });
    }
    Ok(ConductorExponent {
        tame,
        wild,
        total,
        integral: true,
    })
}

/// The wild conductor through the break pairing: `<Res chi, b>` over
/// inertia, with `b = -break` off the identity and the compensating
/// positive total at the identity. Must agree with the wild part of
/// [`conductor_exponent`]; the cross-check is the reason this exists.
pub fn swan_pairing(chi: &ClassFunction, data: &RamificationData) -> Result<Rat, LocalError> {
    if chi.group() != data.group() {
        return Err(CharError::GroupMismatch.into());
    }
    let breaks = data.breaks();
    let mut sum = chi.value_at_element(0).clone()
        * Cyclotomic::from_int(breaks.total() as i64);
    for &(g, b) in breaks.entries() {
        sum = sum + chi.value_at_element(g).clone() * Cyclotomic::from_int(-(b as i64));
    }
    let avg = sum * Cyclotomic::from_rat(Rat::new(Int::one(), Int::from(data.inertia().order())));
    avg.as_rat().ok_or_else(|| LocalError::NotACharacter {
        value: avg.to_string(),
    })
}

/// Valuation of the discriminant of the subextension fixed by `H`: the
/// conductor of the induction of the trivial character.
pub fn discriminant_valuation(data: &RamificationData, h: &Subgroup) -> Result<i64, LocalError> {
    if *h.parent() != *data.group() {
        return Err(LocalError::ForeignSubgroup);
    }
    let ind = induce(h, &ClassFunction::trivial(h.as_group().clone()))?;
    Ok(conductor_exponent(&ind, data)?.total_int())
}

/// Outcome of probing the Frobenius class of an unramified prime.
#[derive(Clone, Debug)]
pub struct FrobeniusReport {
    /// Conjugacy class index in the supplied group.
    pub class: usize,
    /// A representative element of that class.
    pub representative: usize,
    pub cycle_type: Vec<usize>,
    pub order: usize,
    /// Whether the pentagon resolvent discriminator was needed.
    pub via_resolvent: bool,
}

/// Identify the conjugacy class of Frobenius at `p` from the factorization
/// shape of `f` mod `p`, for a permutation group acting on the roots.
///
/// When the shape pins down a unique class, that settles it. The one
/// discriminator implemented beyond shape is the degree-5 dihedral case
/// with its two classes of 5-cycles: the exact pair of pentagon resolvent
/// values is compared against the stride-1 orbit resolvent mod `p`. Root
/// indices are matched to the convex-hull cyclic order of the complex
/// roots, so "class of (1 2 3 4 5)" means Frobenius steps one vertex along
/// that pentagon.
pub fn frobenius_class(
    f: &[Int],
    p: u64,
    group: &FiniteGroup,
) -> Result<FrobeniusReport, LocalError> {
    let deg = f
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or(FFError::ZeroPolynomial { p })?;
    let domain = group.degree().ok_or(GroupError::NoPermutationData)?;
    if deg != domain {
        return Err(LocalError::DegreeMismatch {
            poly: deg,
            domain,
        });
    }
    if !ff_is_squarefree(f, p)? {
        return Err(LocalError::NotSquarefree { p });
    }
    let mut ct: Vec<usize> = Vec::new();
    for (d, count) in ff_factor_degrees(f, p)? {
        ct.extend(std::iter::repeat(d).take(count));
    }
    ct.sort_unstable_by(|a, b| b.cmp(a));

    let cc = group.conjugacy_classes();
    let mut matches = Vec::new();
    for c in 0..cc.len() {
        if group.cycle_type(cc.representative(c))? == ct {
            matches.push(c);
        }
    }
    let report = |class: usize, via_resolvent: bool| {
        let representative = cc.representative(class);
        FrobeniusReport {
            class,
            representative,
            cycle_type: ct.clone(),
            order: group.element_order(representative),
            via_resolvent,
        }
    };
    match matches.len() {
        0 => Err(LocalError::NoMatchingClass(ct)),
        1 => Ok(report(matches[0], false)),
        2 if deg == 5 && ct == [5] => {
            let rho = group.index_of_permutation(&[1, 2, 3, 4, 0]);
            let rho2 = group.index_of_permutation(&[2, 3, 4, 0, 1]);
            let (Some(rho), Some(rho2)) = (rho, rho2) else {
                return Err(LocalError::AmbiguousClass { ct, count: 2 });
            };
            let (c1, c2) = (cc.class_of(rho), cc.class_of(rho2));
            let mut found = [c1, c2];
            found.sort_unstable();
            let mut want = matches.clone();
            want.sort_unstable();
            if found.as_slice() != want.as_slice() {
                return Err(LocalError::AmbiguousClass { ct, count: 2 });
            }
            let (r1, r2) = pentagon_resolvent_pair(f)?;
            let pm = Int::from(p);
            let u = r1.mod_floor(&pm).to_u64().expect("residue fits u64");
            let v = r2.mod_floor(&pm).to_u64().expect("residue fits u64");
            if u == v {
                return Err(LocalError::ResolventCollision { r1, r2, p });
            }
            let m = ff_orbit_resolvent(f, p, 1)?;
            if m == u {
                Ok(report(c1, true))
            } else if m == v {
                Ok(report(c2, true))
            } else {
                Err(LocalError::ResolventMismatch { m, r1, r2, p })
            }
        }
        count => Err(LocalError::AmbiguousClass { ct, count }),
    }
}

// --- exact pentagon resolvents via certified numerics ---

#[derive(Clone, Debug)]
struct Gaussian {
    re: Rat,
    im: Rat,
}

impl Gaussian {
    fn from_c64(z: Complex64) -> Option<Gaussian> {
        Some(Gaussian {
            re: Rat::from_float(z.re)?,
            im: Rat::from_float(z.im)?,
        })
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn add(&self, o: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Gaussian) -> Gaussian {
        Gaussian {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn div(&self, o: &Gaussian) -> Gaussian {
        let n = &o.re * &o.re + &o.im * &o.im;
        Gaussian {
            re: (&self.re * &o.re + &self.im * &o.im) / &n,
            im: (&self.im * &o.re - &self.re * &o.im) / &n,
        }
    }

    /// Round both parts to the nearest multiple of `2^-bits`, keeping the
    /// representation small between Newton steps.
    fn round(&self, bits: u32) -> Gaussian {
        Gaussian {
            re: round_rat(&self.re, bits),
            im: round_rat(&self.im, bits),
        }
    }
}

fn round_rat(x: &Rat, bits: u32) -> Rat {
    let scale = Int::one() << bits;
    let half = Rat::new(Int::one(), Int::from(2));
    let n = (x * Rat::from_integer(scale.clone()) + half).floor();
    Rat::new(n.to_integer(), scale)
}

fn eval_gaussian(coeffs: &[Rat], z: &Gaussian) -> Gaussian {
    let mut acc = Gaussian {
        re: Rat::zero(),
        im: Rat::zero(),
    };
    for c in coeffs.iter().rev() {
        acc = acc.mul(z);
        acc.re += c;
    }
    acc
}

fn durand_kerner(monic: &[f64]) -> Vec<Complex64> {
    let d = monic.len() - 1;
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|i| seed.powu(i as u32 + 1)).collect();
    let eval = |x: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            acc = acc * x + c;
        }
        acc
    };
    for _ in 0..500 {
        let mut worst = 0.0f64;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            worst = worst.max(step.norm());
        }
        if worst < 1e-13 {
            break;
        }
    }
    z
}

/// Integer round of a certified-rational value: the imaginary part and the
/// distance to the nearest integer must both be at most 1/4.
fn certified_int(z: &Gaussian) -> Result<Int, LocalError> {
    let quarter = Rat::new(Int::one(), Int::from(4));
    let fail = || LocalError::RoundingFailure {
        value: z.re.to_f64().unwrap_or(f64::NAN),
    };
    if z.im.abs() > quarter {
        return Err(fail());
    }
    let half = Rat::new(Int::one(), Int::from(2));
    let n = (&z.re + half).floor().to_integer();
    if (&z.re - Rat::from_integer(n.clone())).abs() > quarter {
        return Err(fail());
    }
    Ok(n)
}

/// For a degree-5 integer polynomial whose Galois group preserves the
/// convex-hull pentagon of its roots: the exact pair
/// `(sum of adjacent-root products, sum of diagonal-root products)`.
///
/// Roots come from Durand-Kerner in doubles, get refined by exact Newton
/// steps over the Gaussian rationals at doubling precision, and the two
/// sums are accepted only when both certify to integers adding up to the
/// second elementary symmetric function read off the coefficients.
pub fn pentagon_resolvent_pair(f: &[Int]) -> Result<(Int, Int), LocalError> {
    let deg = f.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    assert_eq!(deg, 5, "pentagon resolvents need a quintic");
    let lead = Rat::from_integer(f[deg].clone());
    let coeffs: Vec<Rat> = f[..=deg]
        .iter()
        .map(|c| Rat::from_integer(c.clone()) / lead.clone())
        .collect();
    let e2 = coeffs[3].clone();
    let deriv: Vec<Rat> = (1..=5)
        .map(|i| coeffs[i].clone() * Rat::from_integer(Int::from(i)))
        .collect();

    let monic_f64: Vec<f64> = coeffs.iter().map(|c| c.to_f64().unwrap()).collect();
    let rough = durand_kerner(&monic_f64);
    let cx = rough.iter().map(|z| z.re).sum::<f64>() / 5.0;
    let cy = rough.iter().map(|z| z.im).sum::<f64>() / 5.0;
    let mut hull: Vec<usize> = (0..5).collect();
    hull.sort_by(|&a, &b| {
        let ta = (rough[a].im - cy).atan2(rough[a].re - cx);
        let tb = (rough[b].im - cy).atan2(rough[b].re - cx);
        ta.partial_cmp(&tb).expect("finite angles")
    });

    let mut roots = Vec::with_capacity(5);
    for &z in &rough {
        let g = Gaussian::from_c64(z)
            .ok_or(LocalError::RoundingFailure { value: f64::NAN })?;
        roots.push(g);
    }
    let mut last_err = None;
    for bits in [96u32, 192, 384] {
        for z in roots.iter_mut() {
            for _ in 0..2 {
                let fp = eval_gaussian(&deriv, z);
                if (&fp.re * &fp.re + &fp.im * &fp.im).is_zero() {
                    return Err(LocalError::RoundingFailure { value: f64::NAN });
                }
                let step = eval_gaussian(&coeffs, z).div(&fp);
                *z = z.sub(&step).round(bits);
            }
        }
        let mut r1 = Gaussian {
            re: Rat::zero(),
            im: Rat::zero(),
        };
        let mut r2 = r1.clone();
        for i in 0..5 {
            r1 = r1.add(&roots[hull[i]].mul(&roots[hull[(i + 1) % 5]]));
            r2 = r2.add(&roots[hull[i]].mul(&roots[hull[(i + 2) % 5]]));
        }
        match (certified_int(&r1), certified_int(&r2)) {
            (Ok(a), Ok(b)) => {
                if Rat::from_integer(&a + &b) == e2 {
                    return Ok((a, b));
                }
                last_err = Some(LocalError::RoundingFailure {
                    value: r1.to_c64().re,
                });
            }
            (Err(e), _) | (_, Err(e)) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one refinement attempt"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{character_table, CharacterTable};

    /// Totally ramified tame C3 under a quadratic residue extension:
    /// G = S3, inertia the 3-cycles, Frobenius a transposition, p = q = 5.
    fn s3_fixture() -> (RamificationData, CharacterTable) {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let s = g.index_of_permutation(&[1, 2, 0]).unwrap();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let inertia = g.subgroup_generated(&[s]);
        let trivial = g.trivial_subgroup();
        let table = character_table(&g).unwrap();
        let data = RamificationData::new(g, vec![inertia, trivial], t, 5, 5).unwrap();
        (data, table)
    }

    /// Wildly ramified quadratic at 2 with a single break at 1.
    fn c2_fixture() -> (RamificationData, CharacterTable) {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let full = g.subgroup(vec![0, 1]).unwrap();
        let trivial = g.trivial_subgroup();
        let table = character_table(&g).unwrap();
        let data =
            RamificationData::new(g, vec![full.clone(), full, trivial], 0, 2, 2).unwrap();
        (data, table)
    }

    /// Unramified quadratic: cyclic group, trivial inertia.
    fn unramified_fixture() -> (RamificationData, CharacterTable) {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let trivial = g.trivial_subgroup();
        let table = character_table(&g).unwrap();
        let data = RamificationData::new(g, vec![trivial], 1, 3, 3).unwrap();
        (data, table)
    }

    fn rp(cs: &[i64]) -> UniPoly<Cyclotomic> {
        UniPoly::new(cs.iter().map(|&c| Cyclotomic::from_int(c)).collect())
    }

    #[test]
    fn fixtures_validate() {
        let (s3, _) = s3_fixture();
        assert_eq!(s3.breaks().entries().len(), 2);
        assert!(s3.breaks().entries().iter().all(|&(_, b)| b == 0));
        let (c2, _) = c2_fixture();
        assert_eq!(c2.breaks().entries(), &[(1, 1)]);
        assert_eq!(c2.breaks().total(), 1);
    }

    #[test]
    fn validation_names_each_violation() {
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        let s = g.index_of_permutation(&[1, 2, 0]).unwrap();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let c3 = g.subgroup_generated(&[s]);
        let c2 = g.subgroup_generated(&[t]);
        let trivial = g.trivial_subgroup();

        let r = RamificationData::new(g.clone(), vec![c3.clone(), c3.clone(), trivial.clone()], t, 5, 5);
        assert!(matches!(r, Err(LocalError::WildPartWrong { .. })));

        let r = RamificationData::new(g.clone(), vec![c2.clone(), trivial.clone()], s, 5, 5);
        assert!(matches!(r, Err(LocalError::NotNormal { k: 0 })));

        let r = RamificationData::new(g.clone(), vec![trivial.clone(), c3.clone()], t, 5, 5);
        assert!(matches!(r, Err(LocalError::NotDescending { k: 1 })));

        let r = RamificationData::new(g.clone(), vec![c3.clone()], t, 5, 5);
        assert!(matches!(r, Err(LocalError::ChainNotClosed { .. })));

        let r = RamificationData::new(g.clone(), vec![c3.clone(), trivial.clone()], 0, 5, 5);
        assert!(matches!(r, Err(LocalError::FrobeniusNotGenerator { order: 2 })));

        let r = RamificationData::new(g.clone(), vec![c3.clone(), trivial.clone()], t, 5, 10);
        assert!(matches!(r, Err(LocalError::BadResidueSize { .. })));

        let r = RamificationData::new(g.clone(), vec![c3.clone(), trivial.clone()], t, 4, 4);
        assert!(matches!(r, Err(LocalError::NotPrime { p: 4 })));

        // Klein four-group as inertia away from 2: tame quotient not cyclic
        let v4 = FiniteGroup::from_permutations(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap();
        let full = v4.subgroup((0..4).collect()).unwrap();
        let triv4 = v4.trivial_subgroup();
        let r = RamificationData::new(v4, vec![full, triv4], 0, 3, 3);
        assert!(matches!(r, Err(LocalError::TameNotCyclic { order: 4 })));
    }

    #[test]
    fn local_polynomials_of_the_tame_cubic() {
        let (data, table) = s3_fixture();
        assert_eq!(
            local_polynomial(table.row(0), &data).unwrap(),
            rp(&[1, -1])
        );
        assert_eq!(local_polynomial(table.row(1), &data).unwrap(), rp(&[1, 1]));
        assert_eq!(local_polynomial(table.row(2), &data).unwrap(), rp(&[1]));
    }

    #[test]
    fn conductor_examples() {
        let (data, table) = s3_fixture();
        let n = conductor_exponent(table.row(2), &data).unwrap();
        assert_eq!((n.tame, n.wild.clone(), n.total_int()), (2, Rat::zero(), 2));

        let (u, ut) = unramified_fixture();
        for row in ut.rows() {
            assert_eq!(conductor_exponent(row, &u).unwrap().total_int(), 0);
        }

        let (c2, c2t) = c2_fixture();
        let n = conductor_exponent(c2t.row(1), &c2).unwrap();
        assert_eq!(n.tame, 1);
        assert_eq!(n.wild, Rat::from_integer(Int::from(1)));
        assert_eq!(n.total_int(), 2);
    }

    #[test]
    fn swan_pairing_matches_wild_part() {
        let (s3, s3t) = s3_fixture();
        let (c2, c2t) = c2_fixture();
        let (un, unt) = unramified_fixture();
        for (data, table) in [(&s3, &s3t), (&c2, &c2t), (&un, &unt)] {
            for row in table.rows() {
                let wild = conductor_exponent(row, data).unwrap().wild;
                assert_eq!(swan_pairing(row, data).unwrap(), wild);
            }
        }
        assert_eq!(
            swan_pairing(c2t.row(1), &c2).unwrap(),
            Rat::from_integer(Int::from(1))
        );
        assert!(swan_pairing(s3t.row(2), &s3).unwrap().is_zero());
    }

    #[test]
    fn discriminant_valuations() {
        let (data, _) = s3_fixture();
        let g = data.group().clone();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        assert_eq!(
            discriminant_valuation(&data, &g.trivial_subgroup()).unwrap(),
            4
        );
        assert_eq!(
            discriminant_valuation(&data, &g.subgroup_generated(&[t])).unwrap(),
            2
        );
        let full = g.subgroup((0..g.order()).collect()).unwrap();
        assert_eq!(discriminant_valuation(&data, &full).unwrap(), 0);
    }

    #[test]
    fn frobenius_lift_independence() {
        let (s3, s3t) = s3_fixture();
        for &h in s3.inertia().elements() {
            let phi = s3.group().mul(s3.frobenius(), h);
            let alt = RamificationData::new(
                s3.group().clone(),
                s3.chain().to_vec(),
                phi,
                s3.p(),
                s3.q(),
            )
            .unwrap();
            for row in s3t.rows() {
                assert_eq!(
                    local_polynomial(row, &s3).unwrap(),
                    local_polynomial(row, &alt).unwrap()
                );
            }
        }
        let (c2, c2t) = c2_fixture();
        for &h in c2.inertia().elements() {
            let phi = c2.group().mul(c2.frobenius(), h);
            let alt = RamificationData::new(
                c2.group().clone(),
                c2.chain().to_vec(),
                phi,
                c2.p(),
                c2.q(),
            )
            .unwrap();
            for row in c2t.rows() {
                assert_eq!(
                    local_polynomial(row, &c2).unwrap(),
                    local_polynomial(row, &alt).unwrap()
                );
            }
        }
    }

    #[test]
    fn additivity_of_polynomials_and_conductors() {
        let (data, table) = s3_fixture();
        for a in table.rows() {
            for b in table.rows() {
                let sum = a.clone() + b.clone();
                assert_eq!(
                    local_polynomial(&sum, &data).unwrap(),
                    local_polynomial(a, &data).unwrap() * local_polynomial(b, &data).unwrap()
                );
                assert_eq!(
                    conductor_exponent(&sum, &data).unwrap().total,
                    conductor_exponent(a, &data).unwrap().total
                        + conductor_exponent(b, &data).unwrap().total
                );
            }
        }
    }

    #[test]
    fn degree_equals_invariant_dimension() {
        let (data, table) = s3_fixture();
        for row in table.rows() {
            let p = local_polynomial(row, &data).unwrap();
            let d = invariants_dim(row, data.inertia()).unwrap();
            assert_eq!(p.degree(), Some(d));
            assert!(d <= row.dim_usize().unwrap());
        }
    }

    #[test]
    fn restriction_examples() {
        let (data, _) = s3_fixture();
        let g = data.group().clone();
        let t = g.index_of_permutation(&[1, 0, 2]).unwrap();
        let s = g.index_of_permutation(&[1, 2, 0]).unwrap();

        let full = g.subgroup((0..g.order()).collect()).unwrap();
        let same = data.restrict(&full).unwrap();
        assert_eq!(same.q(), 5);
        assert_eq!(same.inertia().order(), 3);
        assert_eq!(same.chain().len(), 2);

        let ht = g.subgroup_generated(&[t]);
        assert_eq!(data.relative_residue_degree(&ht).unwrap(), 1);
        let res_t = data.restrict(&ht).unwrap();
        assert_eq!(res_t.q(), 5);
        assert!(res_t.is_unramified());

        let hs = g.subgroup_generated(&[s]);
        assert_eq!(data.relative_residue_degree(&hs).unwrap(), 2);
        let res_s = data.restrict(&hs).unwrap();
        assert_eq!(res_s.q(), 25);
        assert_eq!(res_s.inertia().order(), 3);
    }

    #[test]
    fn induction_identity_over_all_subgroups() {
        let (data, _) = s3_fixture();
        for h in data.group().all_subgroups() {
            let f = data.relative_residue_degree(&h).unwrap();
            let restricted = data.restrict(&h).unwrap();
            let th = character_table(h.as_group()).unwrap();
            for chi in th.rows() {
                let below = local_polynomial(chi, &restricted).unwrap().inflate(f);
                let above = local_polynomial(&induce(&h, chi).unwrap(), &data).unwrap();
                assert_eq!(below, above, "induction identity fails under {h}");
            }
        }
    }

    #[test]
    fn conductor_discriminant_formula() {
        let (data, _) = s3_fixture();
        for h in data.group().all_subgroups() {
            let f = data.relative_residue_degree(&h).unwrap() as i64;
            let v = discriminant_valuation(&data, &h).unwrap();
            let restricted = data.restrict(&h).unwrap();
            let th = character_table(h.as_group()).unwrap();
            for chi in th.rows() {
                let above = conductor_exponent(&induce(&h, chi).unwrap(), &data)
                    .unwrap()
                    .total_int();
                let below = conductor_exponent(chi, &restricted).unwrap().total_int();
                let dim = chi.dim_usize().unwrap() as i64;
                assert_eq!(above, dim * v + f * below);
            }
        }
    }

    fn quintic() -> Vec<Int> {
        // x^5 + 2x^4 - 3x^3 + 1
        [1i64, 0, 0, -3, 2, 1].iter().map(|&c| Int::from(c)).collect()
    }

    fn d10_on_roots() -> FiniteGroup {
        FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap()
    }

    #[test]
    fn pentagon_resolvents_are_frozen() {
        let (r1, r2) = pentagon_resolvent_pair(&quintic()).unwrap();
        assert_eq!((&r1 + &r2), Int::from(-3));
        assert_eq!((r1, r2), (Int::from(2), Int::from(-5)));
    }

    #[test]
    fn dihedral_quintic_frobenius_at_two() {
        let g = d10_on_roots();
        let report = frobenius_class(&quintic(), 2, &g).unwrap();
        assert_eq!(report.order, 5);
        assert_eq!(report.cycle_type, vec![5]);
        assert!(report.via_resolvent);
        let rho = g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(report.class, g.conjugacy_classes().class_of(rho));
    }

    #[test]
    fn frobenius_unique_shape_needs_no_resolvent() {
        // mod 11: x^5+2x^4-3x^3+1 has the single root 7, shape (1)(2)(2):
        // the reflection class, unique for that shape
        let g = d10_on_roots();
        let report = frobenius_class(&quintic(), 11, &g).unwrap();
        assert_eq!(report.cycle_type, vec![2, 2, 1]);
        assert_eq!(report.order, 2);
        assert!(!report.via_resolvent);
    }

    #[test]
    fn frobenius_rejects_bad_inputs() {
        let g = d10_on_roots();
        // x^5 - x^3 reduces with a repeated root everywhere
        let f: Vec<Int> = [0i64, 0, 0, -1, 0, 1].iter().map(|&c| Int::from(c)).collect();
        assert!(matches!(
            frobenius_class(&f, 3, &g),
            Err(LocalError::NotSquarefree { p: 3 })
        ));
        let quartic: Vec<Int> = [1i64, 1, 0, 0, 1].iter().map(|&c| Int::from(c)).collect();
        assert!(matches!(
            frobenius_class(&quartic, 3, &g),
            Err(LocalError::DegreeMismatch { .. })
        ));
    }
}
