//! Global L-series over Q assembled from per-prime local data: Euler
//! factors, Dirichlet coefficients, global conductors, functional-equation
//! parameters, and Dedekind-zeta identities checked through induction.
//!
//! Ramified primes always take supplied local polynomials; unramified
//! primes resolve a Frobenius conjugacy class, either from an explicit
//! table or by factoring a defining polynomial modulo p. Elliptic
//! configurations hold a Weierstrass equation and count points for their
//! good factors. Everything downstream is exact cyclotomic arithmetic.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::chars::{CharError, ClassFunction};
use crate::exact::{newton_charpoly, series_invert, SeriesError, UniPoly};
use crate::groups::FiniteGroup;
use crate::localgal::{frobenius_class, LocalError};
use crate::weildeligne::{ec_point_count_bruteforce, WDError};
use crate::{Cyclotomic, Int, Rat};

#[derive(Debug, Error)]
pub enum LsError {
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("limit must be at least 1")]
    BadLimit,
    #[error("dimension of the character is not a positive integer: {value}")]
    BadDimension { value: String },
    #[error("euler factor at {p} has degree {got}, exceeding the dimension {dim}")]
    DegreeTooBig { p: u64, got: usize, dim: usize },
    #[error("euler factor at {p} must have constant term 1")]
    BadConstantTerm { p: u64 },
    #[error("ramified exponent at {p} must be positive")]
    BadExponent { p: u64 },
    #[error("class index {class} out of range: the group has {classes} classes")]
    BadClass { class: usize, classes: usize },
    #[error("prime {p} ramifies but no local data was supplied")]
    RamifiedAbsent { p: u64 },
    #[error("no Frobenius class known for the unramified prime {p}")]
    UnresolvedPrime { p: u64 },
    #[error("Frobenius class at {p} is ambiguous: {source}")]
    AmbiguousFrobenius { p: u64, source: LocalError },
    #[error("functional equation data needs the class of complex conjugation")]
    MissingConjugation,
    #[error("conjugation acts with trace {value}, which is not an integer of the parity of the dimension")]
    BadConjugationValue { value: String },
    #[error("the two sides differ as virtual characters; difference on classes: {diff}")]
    IdentityFails { diff: String },
    #[error("series coefficients differ first at n = {n}")]
    SeriesMismatch { n: u64 },
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Elliptic(#[from] WDError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// How unramified primes get their Frobenius conjugacy class.
#[derive(Clone, Debug)]
pub enum ClassResolver {
    /// Explicit table prime -> class index.
    Explicit(BTreeMap<u64, usize>),
    /// Factor this defining polynomial modulo p and match cycle types,
    /// with the resolvent tie-break for ambiguous shapes.
    Splitting { poly: Vec<Int> },
}

impl ClassResolver {
    fn class_of(&self, p: u64, group: &FiniteGroup) -> Result<usize, LsError> {
        match self {
            ClassResolver::Explicit(map) => {
                map.get(&p).copied().ok_or(LsError::UnresolvedPrime { p })
            }
            ClassResolver::Splitting { poly } => match frobenius_class(poly, p, group) {
                Ok(report) => Ok(report.class),
                Err(e @ LocalError::AmbiguousClass { .. })
                | Err(e @ LocalError::ResolventCollision { .. })
                | Err(e @ LocalError::ResolventMismatch { .. })
                | Err(e @ LocalError::RoundingFailure { .. }) => {
                    Err(LsError::AmbiguousFrobenius { p, source: e })
                }
                Err(LocalError::NotSquarefree { .. }) => Err(LsError::RamifiedAbsent { p }),
                Err(e) => Err(e.into()),
            },
        }
    }
}

/// Everything needed to expand one global L-series over Q.
#[derive(Clone, Debug)]
pub enum GlobalKind {
    Artin {
        chi: ClassFunction,
        resolver: ClassResolver,
        conjugation_class: Option<usize>,
    },
    Elliptic {
        /// Weierstrass coefficients a1, a2, a3, a4, a6.
        coefficients: [Int; 5],
    },
}

#[derive(Clone, Debug)]
pub struct GlobalConfig {
    dim: usize,
    ramified: BTreeMap<u64, (UniPoly<Cyclotomic>, u32)>,
    kind: GlobalKind,
}

impl GlobalConfig {
    pub fn new(
        ramified: BTreeMap<u64, (UniPoly<Cyclotomic>, u32)>,
        kind: GlobalKind,
    ) -> Result<Self, LsError> {
        let dim = match &kind {
            GlobalKind::Artin {
                chi,
                resolver,
                conjugation_class,
            } => {
                let dim = chi.dim_usize().filter(|&d| d > 0).ok_or_else(|| {
                    LsError::BadDimension {
                        value: chi.dim().to_string(),
                    }
                })?;
                let classes = chi.group().conjugacy_classes().len();
                if let Some(c) = conjugation_class {
                    if *c >= classes {
                        return Err(LsError::BadClass {
                            class: *c,
                            classes,
                        });
                    }
                }
                if let ClassResolver::Explicit(map) = resolver {
                    for (&p, &c) in map {
                        if !crate::exact::is_prime_u64(p) {
                            return Err(LsError::NotPrime { p });
                        }
                        if c >= classes {
                            return Err(LsError::BadClass { class: c, classes });
                        }
                    }
                }
                dim
            }
            GlobalKind::Elliptic { .. } => 2,
        };
        for (&p, (poly, exponent)) in &ramified {
            if !crate::exact::is_prime_u64(p) {
                return Err(LsError::NotPrime { p });
            }
            if *exponent == 0 {
                return Err(LsError::BadExponent { p });
            }
            if !poly.coeff(0).is_one() {
                return Err(LsError::BadConstantTerm { p });
            }
            if poly.degree().unwrap_or(0) > dim {
                return Err(LsError::DegreeTooBig {
                    p,
                    got: poly.degree().unwrap_or(0),
                    dim,
                });
            }
        }
        Ok(GlobalConfig {
            dim,
            ramified,
            kind,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ramified(&self) -> &BTreeMap<u64, (UniPoly<Cyclotomic>, u32)> {
        &self.ramified
    }

    pub fn kind(&self) -> &GlobalKind {
        &self.kind
    }
}

/// `det(1 - rho(Frob^{-1}) T)` from character values at powers of the
/// inverse of a class representative.
fn charpoly_at_class(
    chi: &ClassFunction,
    class: usize,
    dim: usize,
) -> UniPoly<Cyclotomic> {
    let group = chi.group();
    let g = group.conjugacy_classes().representative(class);
    let sums: Vec<Cyclotomic> = (1..=dim)
        .map(|k| chi.value_at_element(group.pow(g, -(k as i64))).clone())
        .collect();
    newton_charpoly(&sums).det_form
}

/// The local Euler polynomial at p: stored data for ramified primes,
/// the Frobenius characteristic polynomial otherwise.
pub fn euler_factor(config: &GlobalConfig, p: u64) -> Result<UniPoly<Cyclotomic>, LsError> {
    if !crate::exact::is_prime_u64(p) {
        return Err(LsError::NotPrime { p });
    }
    if let Some((poly, _)) = config.ramified.get(&p) {
        return Ok(poly.clone());
    }
    match &config.kind {
        GlobalKind::Artin { chi, resolver, .. } => {
            let class = resolver.class_of(p, chi.group())?;
            Ok(charpoly_at_class(chi, class, config.dim))
        }
        GlobalKind::Elliptic { coefficients } => {
            let count = match ec_point_count_bruteforce(coefficients, p) {
                Ok(c) => c,
                Err(WDError::SingularCurve { .. }) => {
                    return Err(LsError::RamifiedAbsent { p })
                }
                Err(e) => return Err(e.into()),
            };
            let a = Int::from(p) + Int::one() - Int::from(count);
            Ok(UniPoly::new(vec![
                Cyclotomic::one(),
                Cyclotomic::from_rat(Rat::from_integer(-a)),
                Cyclotomic::from_rat(Rat::from_integer(Int::from(p))),
            ]))
        }
    }
}

/// Coefficients `a_1 .. a_N` of a Dirichlet series, exact cyclotomics.
#[derive(Clone, Debug, PartialEq)]
pub struct DirichletSeries {
    coefficients: Vec<Cyclotomic>,
}

impl DirichletSeries {
    pub fn limit(&self) -> u64 {
        self.coefficients.len() as u64
    }

    /// 1-based coefficient access.
    pub fn get(&self, n: u64) -> &Cyclotomic {
        &self.coefficients[(n - 1) as usize]
    }

    pub fn coefficients(&self) -> &[Cyclotomic] {
        &self.coefficients
    }
}

/// Dirichlet convolution `c_n = sum over d | n of a_d b_{n/d}`, cut to
/// the shorter limit.
pub fn dirichlet_convolve(a: &DirichletSeries, b: &DirichletSeries) -> DirichletSeries {
    let n = a.limit().min(b.limit()) as usize;
    let mut out = vec![Cyclotomic::zero(); n];
    for d in 1..=n {
        let ad = a.get(d as u64);
        if ad.is_zero() {
            continue;
        }
        for m in 1..=(n / d) {
            let term = ad.clone() * b.get(m as u64).clone();
            out[d * m - 1] = out[d * m - 1].clone() + term;
        }
    }
    DirichletSeries { coefficients: out }
}

/// Expand a product of per-prime Euler factors into Dirichlet
/// coefficients up to `n`. Factors for every prime up to `n` must be
/// present; each local series is the inverse of its polynomial.
pub fn expand_euler_product(
    factors: &BTreeMap<u64, UniPoly<Cyclotomic>>,
    n: u64,
) -> Result<DirichletSeries, LsError> {
    if n == 0 {
        return Err(LsError::BadLimit);
    }
    let size = n as usize;
    let mut coeffs = vec![Cyclotomic::zero(); size];
    coeffs[0] = Cyclotomic::one();
    for (&p, poly) in factors {
        if p > n {
            continue;
        }
        let mut order = 0;
        let mut pk = p;
        while pk <= n {
            order += 1;
            pk = pk.saturating_mul(p);
        }
        let local = series_invert(poly, order)?;
        // convolve the existing coefficients with the p-supported series
        let mut next = vec![Cyclotomic::zero(); size];
        let mut step = 1u64;
        for k in 0..=order {
            let c = local.coeff(k);
            if !c.is_zero() {
                for u in 1..=(n / step) {
                    let src = &coeffs[(u - 1) as usize];
                    if !src.is_zero() {
                        let idx = (u * step - 1) as usize;
                        next[idx] = next[idx].clone() + src.clone() * c.clone();
                    }
                }
            }
            step = step.saturating_mul(p);
        }
        coeffs = next;
    }
    Ok(DirichletSeries {
        coefficients: coeffs,
    })
}

fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; (n + 1) as usize];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2u64;
    while p * p <= n {
        if sieve[p as usize] {
            let mut m = p * p;
            while m <= n {
                sieve[m as usize] = false;
                m += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&k| sieve[k as usize]).collect()
}

/// The first `n` Dirichlet coefficients of the configured L-series.
pub fn dirichlet_coefficients(
    config: &GlobalConfig,
    n: u64,
) -> Result<DirichletSeries, LsError> {
    if n == 0 {
        return Err(LsError::BadLimit);
    }
    let mut factors = BTreeMap::new();
    for p in primes_up_to(n) {
        factors.insert(p, euler_factor(config, p)?);
    }
    expand_euler_product(&factors, n)
}

/// `prod p^{n_p}` over the stored ramified exponents.
pub fn global_conductor(config: &GlobalConfig) -> Int {
    let mut out = Int::one();
    for (&p, &(_, exponent)) in &config.ramified {
        out *= Int::from(p).pow(exponent);
    }
    out
}

/// Shape of the Gamma factors at the one archimedean place of Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GammaShape {
    /// `d_plus` factors Gamma_R(s) and `d_minus` factors Gamma_R(s+1).
    RealPair { d_plus: usize, d_minus: usize },
    /// Complex-pair factors Gamma_C(s), as for elliptic curves.
    ComplexCount { gamma_c: usize },
}

/// Parameters of the completed series: the constant `A`, the Gamma
/// shape, and a root-number marker. The root number itself is out of
/// scope; only `|w| = 1` is asserted.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalEquationData {
    pub a_constant: Int,
    pub conductor: Int,
    pub shape: GammaShape,
    pub self_dual: bool,
    pub root_number: String,
}

/// Over Q the discriminant contribution is trivial, so `A` is the
/// conductor. Artin kinds split the dimension by the eigenvalues of
/// complex conjugation; elliptic kinds get a single complex Gamma
/// factor. Non-self-dual characters are flagged: their functional
/// equation pairs the series with its conjugate.
pub fn functional_equation_data(
    config: &GlobalConfig,
) -> Result<FunctionalEquationData, LsError> {
    let conductor = global_conductor(config);
    let (shape, self_dual) = match &config.kind {
        GlobalKind::Artin {
            chi,
            conjugation_class,
            ..
        } => {
            let class = conjugation_class.ok_or(LsError::MissingConjugation)?;
            let value = chi.value_at_class(class);
            let bad = || LsError::BadConjugationValue {
                value: value.to_string(),
            };
            let t = value.as_rat().ok_or_else(bad)?;
            if !t.is_integer() {
                return Err(bad());
            }
            let t = t.to_integer().to_i64().ok_or_else(bad)?;
            let dim = config.dim as i64;
            if t.abs() > dim || (dim + t) % 2 != 0 {
                return Err(bad());
            }
            (
                GammaShape::RealPair {
                    d_plus: ((dim + t) / 2) as usize,
                    d_minus: ((dim - t) / 2) as usize,
                },
                *chi == chi.conj(),
            )
        }
        GlobalKind::Elliptic { .. } => (GammaShape::ComplexCount { gamma_c: 1 }, true),
    };
    Ok(FunctionalEquationData {
        a_constant: conductor.clone(),
        conductor,
        shape,
        self_dual,
        root_number: "unknown, |w| = 1".to_string(),
    })
}

/// Outcome of a verified zeta identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaIdentityReport {
    pub checked_to: u64,
    pub primes_resolved: usize,
    /// Unramified primes whose Frobenius class could not be separated;
    /// they contribute the factor 1 on both sides.
    pub ambiguous_skipped: Vec<u64>,
}

/// Verify that two formal sums of characters agree, first exactly as
/// virtual characters, then coefficientwise as products of L-series up
/// to `n`. Primes in `skip` contribute the trivial factor 1 on both
/// sides (their local data is not modeled), and primes the resolver
/// reports as ambiguous are treated the same way, since the identity
/// compares the sides at whatever local data is actually determined.
/// Each class is resolved once and shared by every term.
pub fn zeta_identity_check(
    left: &[(ClassFunction, usize)],
    right: &[(ClassFunction, usize)],
    resolver: &ClassResolver,
    skip: &[u64],
    n: u64,
) -> Result<ZetaIdentityReport, LsError> {
    if n == 0 {
        return Err(LsError::BadLimit);
    }
    let first = left
        .first()
        .or_else(|| right.first())
        .map(|(chi, _)| chi.group().clone())
        .ok_or(LsError::BadLimit)?;
    for (chi, _) in left.iter().chain(right) {
        if *chi.group() != first {
            return Err(CharError::GroupMismatch.into());
        }
    }

    let combine = |terms: &[(ClassFunction, usize)]| {
        let mut acc = ClassFunction::trivial(first.clone()).scale(&Cyclotomic::zero());
        for (chi, mult) in terms {
            acc = acc + chi.scale(&Cyclotomic::from_int(*mult as i64));
        }
        acc
    };
    let difference = combine(left) - combine(right);
    if !difference.is_zero() {
        let diff = difference
            .values()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        return Err(LsError::IdentityFails { diff });
    }

    // resolve every needed prime once, then reuse the table per term
    let mut classes = BTreeMap::new();
    let mut ambiguous_skipped = Vec::new();
    for p in primes_up_to(n) {
        if skip.contains(&p) {
            continue;
        }
        match resolver.class_of(p, &first) {
            Ok(class) => {
                classes.insert(p, class);
            }
            Err(LsError::AmbiguousFrobenius { .. }) => ambiguous_skipped.push(p),
            Err(e) => return Err(e),
        }
    }
    let primes_resolved = classes.len();
    let shared = ClassResolver::Explicit(classes);
    let trivial_at: BTreeMap<u64, (UniPoly<Cyclotomic>, u32)> = skip
        .iter()
        .filter(|&&p| p <= n)
        .chain(ambiguous_skipped.iter())
        .map(|&p| (p, (UniPoly::one(), 1)))
        .collect();

    let delta = || {
        let mut v = vec![Cyclotomic::zero(); n as usize];
        v[0] = Cyclotomic::one();
        DirichletSeries { coefficients: v }
    };
    let side = |terms: &[(ClassFunction, usize)]| -> Result<DirichletSeries, LsError> {
        let mut acc: Option<DirichletSeries> = None;
        for (chi, mult) in terms {
            let config = GlobalConfig::new(
                trivial_at.clone(),
                GlobalKind::Artin {
                    chi: chi.clone(),
                    resolver: shared.clone(),
                    conjugation_class: None,
                },
            )?;
            let series = dirichlet_coefficients(&config, n)?;
            for _ in 0..*mult {
                acc = Some(match &acc {
                    None => series.clone(),
                    Some(prev) => dirichlet_convolve(prev, &series),
                });
            }
        }
        Ok(acc.unwrap_or_else(|| delta()))
    };
    let lhs = side(left)?;
    let rhs = side(right)?;
    for i in 1..=n {
        if lhs.get(i) != rhs.get(i) {
            return Err(LsError::SeriesMismatch { n: i });
        }
    }
    Ok(ZetaIdentityReport {
        checked_to: n,
        primes_resolved,
        ambiguous_skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{character_table, induce};
    use crate::groups::Subgroup;

    fn cy(n: i64) -> Cyclotomic {
        Cyclotomic::from_int(n)
    }

    fn rp(cs: &[i64]) -> UniPoly<Cyclotomic> {
        UniPoly::new(cs.iter().map(|&c| cy(c)).collect())
    }

    /// Quadratic character of conductor 3: the group is C2, classes are
    /// resolved by p mod 3.
    fn chi3_config(limit: u64) -> GlobalConfig {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let table = character_table(&g).unwrap();
        let eps = table.row(1).clone();
        let mut classes = BTreeMap::new();
        for p in primes_up_to(limit) {
            if p != 3 {
                classes.insert(p, if p % 3 == 1 { 0 } else { 1 });
            }
        }
        let mut ramified = BTreeMap::new();
        ramified.insert(3, (UniPoly::one(), 1));
        GlobalConfig::new(
            ramified,
            GlobalKind::Artin {
                chi: eps,
                resolver: ClassResolver::Explicit(classes),
                conjugation_class: Some(1),
            },
        )
        .unwrap()
    }

    fn e11_config() -> GlobalConfig {
        let mut ramified = BTreeMap::new();
        ramified.insert(11, (rp(&[1, -1]), 1));
        GlobalConfig::new(
            ramified,
            GlobalKind::Elliptic {
                coefficients: std::array::from_fn(|i| Int::from([0i64, -1, 1, 0, 0][i])),
            },
        )
        .unwrap()
    }

    fn d10() -> FiniteGroup {
        FiniteGroup::from_permutations(5, &[vec![1, 2, 3, 4, 0], vec![0, 4, 3, 2, 1]]).unwrap()
    }

    fn quintic() -> Vec<Int> {
        // x^5 + 2x^4 - 3x^3 + 1
        [1i64, 0, 0, -3, 2, 1].iter().map(|&c| Int::from(c)).collect()
    }

    #[test]
    fn quadratic_euler_factors_follow_the_residue() {
        let config = chi3_config(50);
        assert_eq!(euler_factor(&config, 3).unwrap(), UniPoly::one());
        assert_eq!(euler_factor(&config, 7).unwrap(), rp(&[1, -1]));
        assert_eq!(euler_factor(&config, 13).unwrap(), rp(&[1, -1]));
        assert_eq!(euler_factor(&config, 2).unwrap(), rp(&[1, 1]));
        assert_eq!(euler_factor(&config, 5).unwrap(), rp(&[1, 1]));
        assert!(matches!(
            euler_factor(&config, 4),
            Err(LsError::NotPrime { p: 4 })
        ));
        assert!(matches!(
            euler_factor(&chi3_config(10), 31),
            Err(LsError::UnresolvedPrime { p: 31 })
        ));
    }

    #[test]
    fn quadratic_coefficients_alternate() {
        let series = dirichlet_coefficients(&chi3_config(20), 20).unwrap();
        let want: Vec<i64> = vec![1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1, 0, 1, -1];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(series.get(i as u64 + 1), &cy(*w), "n = {}", i + 1);
        }
    }

    #[test]
    fn trivial_character_gives_the_constant_series() {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let mut classes = BTreeMap::new();
        for p in primes_up_to(30) {
            classes.insert(p, 0);
        }
        let config = GlobalConfig::new(
            BTreeMap::new(),
            GlobalKind::Artin {
                chi: ClassFunction::trivial(g),
                resolver: ClassResolver::Explicit(classes),
                conjugation_class: Some(0),
            },
        )
        .unwrap();
        let series = dirichlet_coefficients(&config, 30).unwrap();
        assert!(series.coefficients().iter().all(|c| c == &cy(1)));
        assert_eq!(global_conductor(&config), Int::one());
        let fe = functional_equation_data(&config).unwrap();
        assert_eq!(fe.a_constant, Int::one());
        assert_eq!(
            fe.shape,
            GammaShape::RealPair {
                d_plus: 1,
                d_minus: 0
            }
        );
        assert!(fe.self_dual);
    }

    #[test]
    fn quadratic_functional_equation_data() {
        let config = chi3_config(10);
        assert_eq!(global_conductor(&config), Int::from(3));
        let fe = functional_equation_data(&config).unwrap();
        assert_eq!(fe.a_constant, Int::from(3));
        assert_eq!(
            fe.shape,
            GammaShape::RealPair {
                d_plus: 0,
                d_minus: 1
            }
        );
        assert!(fe.self_dual);
        assert_eq!(fe.root_number, "unknown, |w| = 1");
    }

    #[test]
    fn elliptic_coefficients_start_as_frozen() {
        let config = e11_config();
        let series = dirichlet_coefficients(&config, 5).unwrap();
        let want = [1i64, -2, -1, 2, 1];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(series.get(i as u64 + 1), &cy(*w), "n = {}", i + 1);
        }
        assert_eq!(global_conductor(&config), Int::from(11));
        let fe = functional_equation_data(&config).unwrap();
        assert_eq!(fe.a_constant, Int::from(11));
        assert_eq!(fe.shape, GammaShape::ComplexCount { gamma_c: 1 });
    }

    #[test]
    fn elliptic_traces_respect_the_hasse_bound() {
        let config = e11_config();
        for p in primes_up_to(100) {
            if p == 11 {
                continue;
            }
            let factor = euler_factor(&config, p).unwrap();
            let a = -factor.coeff(1).as_rat().unwrap();
            assert!(a.is_integer());
            let a = a.to_integer();
            assert!(a.clone() * a <= Int::from(4 * p), "p = {p}");
        }
    }

    #[test]
    fn coefficients_are_multiplicative() {
        for series in [
            dirichlet_coefficients(&chi3_config(200), 200).unwrap(),
            dirichlet_coefficients(&e11_config(), 200).unwrap(),
        ] {
            for (m, n) in [(2u64, 3u64), (3, 4), (4, 5), (5, 6), (9, 10), (8, 25), (7, 27)] {
                assert_eq!(
                    series.get(m * n),
                    &(series.get(m).clone() * series.get(n).clone()),
                    "m = {m}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn direct_sums_convolve() {
        // regular character of C2 = trivial + sign: the zeta function of
        // the quadratic field of conductor 3
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let table = character_table(&g).unwrap();
        let trivial = table.row(0).clone();
        let eps = table.row(1).clone();
        let sum = trivial.clone() + eps.clone();
        let mut classes = BTreeMap::new();
        for p in primes_up_to(60) {
            if p != 3 {
                classes.insert(p, if p % 3 == 1 { 0 } else { 1 });
            }
        }
        let resolver = ClassResolver::Explicit(classes);
        let build = |chi: ClassFunction, factor_at_3: UniPoly<Cyclotomic>| {
            let mut ramified = BTreeMap::new();
            ramified.insert(3, (factor_at_3, 1));
            GlobalConfig::new(
                ramified,
                GlobalKind::Artin {
                    chi,
                    resolver: resolver.clone(),
                    conjugation_class: None,
                },
            )
            .unwrap()
        };
        // inertia acts through the sign: invariants of the trivial part
        // survive, so the local factor of the sum at 3 is 1 - T
        let s_triv = dirichlet_coefficients(&build(trivial, rp(&[1, -1])), 60).unwrap();
        let s_eps = dirichlet_coefficients(&build(eps, rp(&[1])), 60).unwrap();
        let s_sum = dirichlet_coefficients(&build(sum, rp(&[1, -1])), 60).unwrap();
        assert_eq!(dirichlet_convolve(&s_triv, &s_eps), s_sum);
    }

    fn stabilizer_of_zero(g: &FiniteGroup) -> Subgroup {
        let fixing: Vec<usize> = (0..g.order())
            .filter(|&x| g.permutation(x).unwrap()[0] == 0)
            .collect();
        g.subgroup(fixing).unwrap()
    }

    #[test]
    fn dihedral_zeta_identity_holds() {
        let g = d10();
        let h_l = stabilizer_of_zero(&g);
        let h_k = g.subgroup_generated(&[g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap()]);
        assert_eq!(h_l.order(), 2);
        assert_eq!(h_k.order(), 5);
        let regular = induce(&g.trivial_subgroup(), &ClassFunction::trivial(FiniteGroup::trivial())).unwrap();
        let ind_l = induce(&h_l, &ClassFunction::trivial(h_l.as_group().clone())).unwrap();
        let ind_k = induce(&h_k, &ClassFunction::trivial(h_k.as_group().clone())).unwrap();
        let one = ClassFunction::trivial(g.clone());
        let report = zeta_identity_check(
            &[(regular, 1), (one, 2)],
            &[(ind_l, 2), (ind_k, 1)],
            &ClassResolver::Splitting { poly: quintic() },
            &[5, 47],
            200,
        )
        .unwrap();
        assert_eq!(report.checked_to, 200);
        // 46 primes below 200, minus the two ramified ones and minus 7,
        // where the two exact resolvent values 2 and -5 differ by exactly
        // 7 and so can never separate the rotation classes
        assert_eq!(report.primes_resolved, 43);
        assert_eq!(report.ambiguous_skipped, vec![7]);
    }

    #[test]
    fn quadratic_zeta_identity_holds() {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let table = character_table(&g).unwrap();
        let regular = induce(
            &g.trivial_subgroup(),
            &ClassFunction::trivial(FiniteGroup::trivial()),
        )
        .unwrap();
        let mut classes = BTreeMap::new();
        for p in primes_up_to(60) {
            if p != 3 {
                classes.insert(p, if p % 3 == 1 { 0 } else { 1 });
            }
        }
        let report = zeta_identity_check(
            &[(regular, 1)],
            &[(table.row(0).clone(), 1), (table.row(1).clone(), 1)],
            &ClassResolver::Explicit(classes),
            &[3],
            60,
        )
        .unwrap();
        assert_eq!(report.checked_to, 60);
        assert!(report.ambiguous_skipped.is_empty());
    }

    #[test]
    fn wrong_subgroup_fails_before_any_series_work() {
        // cyclic group of order 10 with its index-5 and index-2 subgroups
        let g = FiniteGroup::from_permutations(
            10,
            &[vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 0]],
        )
        .unwrap();
        let gen = g.index_of_permutation(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 0]).unwrap();
        let h2 = g.subgroup_generated(&[g.pow(gen, 5)]);
        let h5 = g.subgroup_generated(&[g.pow(gen, 2)]);
        assert_eq!(h2.order(), 2);
        assert_eq!(h5.order(), 5);
        let regular = induce(
            &g.trivial_subgroup(),
            &ClassFunction::trivial(FiniteGroup::trivial()),
        )
        .unwrap();
        let ind2 = induce(&h2, &ClassFunction::trivial(h2.as_group().clone())).unwrap();
        let ind5 = induce(&h5, &ClassFunction::trivial(h5.as_group().clone())).unwrap();
        let one = ClassFunction::trivial(g.clone());
        let err = zeta_identity_check(
            &[(regular, 1), (one, 2)],
            &[(ind2, 2), (ind5, 1)],
            &ClassResolver::Explicit(BTreeMap::new()),
            &[],
            10,
        );
        assert!(matches!(err, Err(LsError::IdentityFails { .. })));
    }

    /// Euler factor of an induced character through the orbit
    /// factorization: each orbit of Frobenius on the cosets is a prime of
    /// the subfield with residue degree the orbit size, contributing the
    /// subgroup-level characteristic polynomial in T^size.
    fn induced_factor_via_orbits(
        h: &Subgroup,
        chi_h: &ClassFunction,
        frob: usize,
    ) -> UniPoly<Cyclotomic> {
        let g = h.parent().clone();
        let coset_of = |x: usize| -> usize {
            h.elements().iter().map(|&s| g.mul(x, s)).min().unwrap()
        };
        let mut reps: Vec<usize> = (0..g.order()).map(coset_of).collect();
        reps.sort_unstable();
        reps.dedup();
        let dim_h = chi_h.dim_usize().unwrap();
        let mut seen = vec![false; reps.len()];
        let mut out = UniPoly::one();
        for start in 0..reps.len() {
            if seen[start] {
                continue;
            }
            let mut size = 0usize;
            let mut x = reps[start];
            loop {
                seen[reps.binary_search(&coset_of(x)).unwrap()] = true;
                size += 1;
                x = g.mul(frob, x);
                if coset_of(x) == reps[start] {
                    break;
                }
            }
            // x returned to the starting coset: x = frob^size * x0
            let frob_prime = g.mul(g.inv(reps[start]), x);
            debug_assert!(h.position(frob_prime).is_some());
            let sums: Vec<Cyclotomic> = (1..=dim_h)
                .map(|k| {
                    let idx = h.position(g.pow(frob_prime, -(k as i64))).unwrap();
                    chi_h.value_at_element(idx).clone()
                })
                .collect();
            out = out * newton_charpoly(&sums).det_form.inflate(size);
        }
        out
    }

    #[test]
    fn induction_preserves_euler_factors_and_coefficients() {
        let g = d10();
        let resolver = ClassResolver::Splitting { poly: quintic() };
        let h_l = stabilizer_of_zero(&g);
        let h_k = g.subgroup_generated(&[g.index_of_permutation(&[1, 2, 3, 4, 0]).unwrap()]);
        let table_k = character_table(h_k.as_group()).unwrap();
        let cases: Vec<(Subgroup, ClassFunction)> = vec![
            (h_l.clone(), ClassFunction::trivial(h_l.as_group().clone())),
            (h_k.clone(), ClassFunction::trivial(h_k.as_group().clone())),
            (h_k.clone(), table_k.row(1).clone()),
        ];
        // resolve once up front; ramified primes and the mod-7 resolvent
        // collision are handed the trivial factor on both sides
        let mut trivial_primes = vec![5u64, 47];
        let mut resolved = BTreeMap::new();
        for p in primes_up_to(200) {
            if trivial_primes.contains(&p) {
                continue;
            }
            match resolver.class_of(p, &g) {
                Ok(class) => {
                    resolved.insert(p, class);
                }
                Err(LsError::AmbiguousFrobenius { p: q, .. }) => trivial_primes.push(q),
                Err(e) => panic!("unexpected resolution failure: {e}"),
            }
        }
        assert_eq!(trivial_primes, vec![5, 47, 7]);
        for (h, chi_h) in cases {
            let ind = induce(&h, &chi_h).unwrap();
            let ramified: BTreeMap<u64, (UniPoly<Cyclotomic>, u32)> = trivial_primes
                .iter()
                .map(|&p| (p, (UniPoly::one(), 1)))
                .collect();
            let config = GlobalConfig::new(
                ramified,
                GlobalKind::Artin {
                    chi: ind,
                    resolver: ClassResolver::Explicit(resolved.clone()),
                    conjugation_class: None,
                },
            )
            .unwrap();
            let mut orbit_factors = BTreeMap::new();
            for p in primes_up_to(200) {
                let Some(&class) = resolved.get(&p) else {
                    orbit_factors.insert(p, UniPoly::one());
                    continue;
                };
                let frob = g.conjugacy_classes().representative(class);
                let via_orbits = induced_factor_via_orbits(&h, &chi_h, frob);
                assert_eq!(
                    euler_factor(&config, p).unwrap(),
                    via_orbits,
                    "p = {p}, subgroup order {}",
                    h.order()
                );
                orbit_factors.insert(p, via_orbits);
            }
            assert_eq!(
                dirichlet_coefficients(&config, 200).unwrap(),
                expand_euler_product(&orbit_factors, 200).unwrap()
            );
        }
    }

    #[test]
    fn ambiguity_and_ramification_errors_name_the_prime() {
        let g = d10();
        let chi = ClassFunction::trivial(g);
        let mut ramified = BTreeMap::new();
        ramified.insert(47, (UniPoly::one(), 1));
        let config = GlobalConfig::new(
            ramified,
            GlobalKind::Artin {
                chi,
                resolver: ClassResolver::Splitting { poly: quintic() },
                conjugation_class: None,
            },
        )
        .unwrap();
        // 5 divides the discriminant: the reduction is not squarefree
        assert!(matches!(
            euler_factor(&config, 5),
            Err(LsError::RamifiedAbsent { p: 5 })
        ));
        // at 7 both resolvent values reduce to 2: the class stays open
        assert!(matches!(
            euler_factor(&config, 7),
            Err(LsError::AmbiguousFrobenius { p: 7, .. })
        ));
        assert!(euler_factor(&config, 47).is_ok());
        // elliptic configs report missing bad primes the same way
        let bad = GlobalConfig::new(BTreeMap::new(), e11_config().kind().clone()).unwrap();
        assert!(matches!(
            euler_factor(&bad, 11),
            Err(LsError::RamifiedAbsent { p: 11 })
        ));
    }

    #[test]
    fn config_validation_names_each_defect() {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]]).unwrap();
        let table = character_table(&g).unwrap();
        let eps = table.row(1).clone();
        let artin = |ramified| {
            GlobalConfig::new(
                ramified,
                GlobalKind::Artin {
                    chi: eps.clone(),
                    resolver: ClassResolver::Explicit(BTreeMap::new()),
                    conjugation_class: None,
                },
            )
        };
        let mut m = BTreeMap::new();
        m.insert(4u64, (UniPoly::one(), 1u32));
        assert!(matches!(artin(m), Err(LsError::NotPrime { p: 4 })));
        let mut m = BTreeMap::new();
        m.insert(3u64, (UniPoly::one(), 0u32));
        assert!(matches!(artin(m), Err(LsError::BadExponent { p: 3 })));
        let mut m = BTreeMap::new();
        m.insert(3u64, (rp(&[2, 1]), 1u32));
        assert!(matches!(artin(m), Err(LsError::BadConstantTerm { p: 3 })));
        let mut m = BTreeMap::new();
        m.insert(3u64, (rp(&[1, 1, 1]), 1u32));
        assert!(matches!(
            artin(m),
            Err(LsError::DegreeTooBig { p: 3, got: 2, dim: 1 })
        ));
        let bad_class = GlobalConfig::new(
            BTreeMap::new(),
            GlobalKind::Artin {
                chi: eps.clone(),
                resolver: ClassResolver::Explicit(BTreeMap::new()),
                conjugation_class: Some(7),
            },
        );
        assert!(matches!(
            bad_class,
            Err(LsError::BadClass {
                class: 7,
                classes: 2
            })
        ));
        let missing = GlobalConfig::new(
            BTreeMap::new(),
            GlobalKind::Artin {
                chi: eps,
                resolver: ClassResolver::Explicit(BTreeMap::new()),
                conjugation_class: None,
            },
        )
        .unwrap();
        assert!(matches!(
            functional_equation_data(&missing),
            Err(LsError::MissingConjugation)
        ));
    }

    #[test]
    fn rational_characters_have_integer_coefficients() {
        let series = dirichlet_coefficients(&chi3_config(100), 100).unwrap();
        for c in series.coefficients() {
            let r = c.as_rat().expect("rational");
            assert!(r.is_integer());
        }
    }
}
