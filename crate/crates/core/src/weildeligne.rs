//! Weil-Deligne representations over a local field: Artin parts tensored
//! with unramified twists and sp factors, a tensor-product calculus, and
//! the local dictionary for elliptic curves backed by exact point counts.
//!
//! Frobenius eigenvalues of good reduction are stored as cyclotomic units
//! times half-integer powers of q when they have that shape (the trace is
//! 0 or a*a is one of q, 2q, 3q, 4q), and as the integer trace otherwise.
//! No floating point enters at any stage.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::chars::{character_table, CharError, ClassFunction};
use crate::exact::{sqrt_prime, FFError, FiniteField, UniPoly};
use crate::groups::FiniteGroup;
use crate::localgal::{conductor_exponent, local_polynomial, LocalError, RamificationData};
use crate::{Cyclotomic, Int, Rat};

#[derive(Debug, Error)]
pub enum WDError {
    #[error("twist unit must be nonzero")]
    ZeroTwist,
    #[error("sp factor needs a positive dimension")]
    BadSp,
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },
    #[error("components live over different ramification data")]
    MixedData,
    #[error("tensor products need exact components on both sides")]
    NonExactTensor,
    #[error("trace {a} violates the Hasse bound over F_{q}")]
    HasseViolation { a: Int, q: u64 },
    #[error("singular curve over F_{q}")]
    SingularCurve { q: u64 },
    #[error("field size {q} exceeds the enumeration bound {bound}")]
    FieldTooLarge { q: u64, bound: u64 },
    #[error("residue size {got} does not match the ramification data ({want})")]
    ResidueMismatch { got: u64, want: u64 },
    #[error("an elliptic local representation must have dimension 2, got {got}")]
    BadDimension { got: usize },
    #[error("additive reduction at p = {p} >= 5 must act tamely")]
    WildAdditive { p: u64 },
    #[error("inertia acts with order {order}; at p >= 5 only orders 1, 2, 3, 4, 6 occur")]
    BadInertiaOrder { order: usize },
    #[error("character values give non-integral eigenvalue multiplicities")]
    BadEigenvalues,
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Field(#[from] FFError),
}

/// One-dimensional unramified character, sending Frobenius to
/// `unit * q^(weight/2)`. Weights are genuine integers; half-integer
/// powers of q arise only through odd weights.
#[derive(Clone, Debug, PartialEq)]
pub struct UnramifiedTwist {
    unit: Cyclotomic,
    weight: i64,
}

impl UnramifiedTwist {
    pub fn new(unit: Cyclotomic, weight: i64) -> Result<Self, WDError> {
        if unit.is_zero() {
            return Err(WDError::ZeroTwist);
        }
        Ok(UnramifiedTwist { unit, weight })
    }

    pub fn one() -> Self {
        UnramifiedTwist {
            unit: Cyclotomic::one(),
            weight: 0,
        }
    }

    pub fn unit(&self) -> &Cyclotomic {
        &self.unit
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn product(&self, other: &Self) -> Self {
        UnramifiedTwist {
            unit: self.unit.clone() * other.unit.clone(),
            weight: self.weight + other.weight,
        }
    }

    /// The scalar on Frobenius. `sqrt(q)` for odd total exponent lives in
    /// `Q(zeta_{4p})`, so the value is always an exact cyclotomic.
    pub fn value(&self, q: u64) -> Result<Cyclotomic, WDError> {
        let (p, k) = prime_power(q).ok_or(WDError::NotPrimePower { q })?;
        let e = k as i64 * self.weight;
        let mut v = self.unit.clone() * Cyclotomic::from_rat(rat_pow(p, e.div_euclid(2)));
        if e.rem_euclid(2) == 1 {
            v = v * sqrt_prime(p);
        }
        Ok(v)
    }
}

fn rat_pow(b: u64, e: i64) -> Rat {
    let mag = Int::from(b).pow(e.unsigned_abs() as u32);
    if e < 0 {
        Rat::new(Int::one(), mag)
    } else {
        Rat::from_integer(mag)
    }
}

/// Least prime factor and exponent when `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            p = d;
            break;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut m = q;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    if m == 1 {
        Some((p, k))
    } else {
        None
    }
}

/// One indecomposable-with-multiplier piece: an Artin part twisted
/// unramifiedly and tensored with `sp(n)`. A direct summand whose
/// Frobenius eigenvalues are not cyclotomic multiples of `sqrt(q)` is
/// kept as the quadratic `x^2 - trace*x + q` instead.
#[derive(Clone, Debug, PartialEq)]
pub enum WDComponent {
    Exact {
        artin: ClassFunction,
        twist: UnramifiedTwist,
        sp: usize,
    },
    FrobeniusQuadratic {
        trace: Int,
        sp: usize,
    },
}

impl WDComponent {
    pub fn sp(&self) -> usize {
        match self {
            WDComponent::Exact { sp, .. } | WDComponent::FrobeniusQuadratic { sp, .. } => *sp,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            WDComponent::Exact { artin, sp, .. } => {
                artin.dim_usize().expect("validated character") * sp
            }
            WDComponent::FrobeniusQuadratic { sp, .. } => 2 * sp,
        }
    }
}

/// A formal sum of components over one shared [`RamificationData`].
/// Equality is as unordered sums.
#[derive(Clone, Debug)]
pub struct WDRep {
    data: RamificationData,
    components: Vec<WDComponent>,
}

impl WDRep {
    /// Checks every sp factor and verifies each exact Artin part is a
    /// genuine character by decomposing it against the character table.
    pub fn new(data: RamificationData, components: Vec<WDComponent>) -> Result<Self, WDError> {
        let mut table = None;
        for comp in &components {
            if comp.sp() == 0 {
                return Err(WDError::BadSp);
            }
            if let WDComponent::Exact { artin, .. } = comp {
                if artin.group() != data.group() {
                    return Err(CharError::GroupMismatch.into());
                }
                if table.is_none() {
                    table = Some(character_table(data.group())?);
                }
                table.as_ref().unwrap().decompose(artin)?;
            }
        }
        Ok(WDRep { data, components })
    }

    pub fn data(&self) -> &RamificationData {
        &self.data
    }

    pub fn components(&self) -> &[WDComponent] {
        &self.components
    }

    pub fn dim(&self) -> usize {
        self.components.iter().map(|c| c.dim()).sum()
    }

    pub fn direct_sum(&self, other: &WDRep) -> Result<WDRep, WDError> {
        if !same_data(&self.data, &other.data) {
            return Err(WDError::MixedData);
        }
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Ok(WDRep {
            data: self.data.clone(),
            components,
        })
    }
}

impl PartialEq for WDRep {
    fn eq(&self, other: &Self) -> bool {
        if !same_data(&self.data, &other.data) {
            return false;
        }
        let mut rest: Vec<&WDComponent> = other.components.iter().collect();
        for comp in &self.components {
            match rest.iter().position(|c| *c == comp) {
                Some(i) => {
                    rest.swap_remove(i);
                }
                None => return false,
            }
        }
        rest.is_empty()
    }
}

fn same_data(a: &RamificationData, b: &RamificationData) -> bool {
    a.group() == b.group()
        && a.frobenius() == b.frobenius()
        && a.p() == b.p()
        && a.q() == b.q()
        && a.chain().len() == b.chain().len()
        && a
            .chain()
            .iter()
            .zip(b.chain())
            .all(|(x, y)| x.elements() == y.elements())
}

/// Matrix model of `sp(n)`: inertia parameter `t` acts by `exp(t N)` with
/// `(i,j)` entry `t^(j-i)/(j-i)!`, Frobenius by `diag(1, q, .., q^(n-1))`.
/// The parameter stays symbolic; entries are polynomials in `t`.
pub fn sp_matrices(n: usize, q: u64) -> (Vec<Vec<UniPoly<Rat>>>, Vec<Vec<Rat>>) {
    assert!(n >= 1, "sp needs a positive dimension");
    let mut fact = vec![Rat::one()];
    for k in 1..n {
        let last = fact[k - 1].clone();
        fact.push(last * Rat::from_integer(Int::from(k as i64)));
    }
    let inertia: Vec<Vec<UniPoly<Rat>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < i {
                        UniPoly::zero()
                    } else {
                        UniPoly::monomial(fact[j - i].recip(), j - i)
                    }
                })
                .collect()
        })
        .collect();
    let frobenius: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        rat_pow(q, i as i64)
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    (inertia, frobenius)
}

/// `det(1 - Phi T)` on the inertia invariants. Invariants of an exact
/// component are (Artin invariants) tensor (kernel of N), where Frobenius
/// scales by the twist value; so each factor is the Artin local polynomial
/// with `T` rescaled, independent of the sp dimension.
pub fn wd_local_polynomial(w: &WDRep) -> Result<UniPoly<Cyclotomic>, WDError> {
    let q = w.data().q();
    let mut out = UniPoly::one();
    for comp in w.components() {
        let factor = match comp {
            WDComponent::Exact { artin, twist, .. } => {
                let base = local_polynomial(artin, w.data())?;
                base.scale_arg(&twist.value(q)?)
            }
            WDComponent::FrobeniusQuadratic { trace, .. } => UniPoly::new(vec![
                Cyclotomic::one(),
                Cyclotomic::from_rat(Rat::from_integer(-trace.clone())),
                Cyclotomic::from_rat(Rat::from_integer(Int::from(q))),
            ]),
        };
        out = out * factor;
    }
    Ok(out)
}

/// Conductor exponent of the whole representation:
/// `sum_i n_i*dim(rho_i) - dim(rho_i invariants) + n_i*wild(rho_i)`,
/// where `n_i` is the sp dimension. Unramified twists change nothing.
pub fn wd_conductor(w: &WDRep) -> Result<i64, WDError> {
    let mut total = 0i64;
    for comp in w.components() {
        match comp {
            WDComponent::Exact { artin, sp, .. } => {
                let ce = conductor_exponent(artin, w.data())?;
                let dim = artin.dim_usize().expect("validated character") as i64;
                let wild = ce.wild.to_integer().to_i64().expect("small wild part");
                let n = *sp as i64;
                total += n * dim - (dim - ce.tame) + n * wild;
            }
            WDComponent::FrobeniusQuadratic { sp, .. } => {
                total += 2 * (*sp as i64 - 1);
            }
        }
    }
    Ok(total)
}

/// Tensor product via the Clebsch-Gordan rule
/// `sp(n) (x) sp(m) = sum over 0 <= i < min(n,m) of sp(n+m-1-2i)` twisted
/// by weight `2i`; Artin parts multiply, twists multiply. Quadratic
/// components carry no exact eigenvalue data and are rejected.
pub fn wd_tensor(a: &WDRep, b: &WDRep) -> Result<WDRep, WDError> {
    if !same_data(a.data(), b.data()) {
        return Err(WDError::MixedData);
    }
    let mut components = Vec::new();
    for ca in a.components() {
        for cb in b.components() {
            let (chi_a, tw_a, n) = match ca {
                WDComponent::Exact { artin, twist, sp } => (artin, twist, *sp),
                WDComponent::FrobeniusQuadratic { .. } => return Err(WDError::NonExactTensor),
            };
            let (chi_b, tw_b, m) = match cb {
                WDComponent::Exact { artin, twist, sp } => (artin, twist, *sp),
                WDComponent::FrobeniusQuadratic { .. } => return Err(WDError::NonExactTensor),
            };
            let artin = chi_a.tensor(chi_b)?;
            let twist = tw_a.product(tw_b);
            for i in 0..n.min(m) {
                let shift = UnramifiedTwist::new(Cyclotomic::one(), 2 * i as i64)?;
                components.push(WDComponent::Exact {
                    artin: artin.clone(),
                    twist: twist.product(&shift),
                    sp: n + m - 1 - 2 * i,
                });
            }
        }
    }
    WDRep::new(a.data().clone(), components)
}

/// Reduction type of an elliptic curve over the local field, with the
/// residue size. Additive reduction carries its own Weil-Deligne data.
#[derive(Clone, Debug)]
pub enum EllipticKind {
    Good { trace: Int },
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive { rep: WDRep },
}

#[derive(Clone, Debug)]
pub struct EllipticLocalData {
    kind: EllipticKind,
    q: u64,
}

impl EllipticLocalData {
    /// Good reduction must satisfy the Hasse bound. Additive data must be
    /// two-dimensional over the stated residue size; for residue
    /// characteristic at least 5 the inertia action must be tame of order
    /// 1, 2, 3, 4 or 6.
    pub fn new(kind: EllipticKind, q: u64) -> Result<Self, WDError> {
        let (p, _) = prime_power(q).ok_or(WDError::NotPrimePower { q })?;
        match &kind {
            EllipticKind::Good { trace } => {
                if trace.clone() * trace.clone() > Int::from(4) * Int::from(q) {
                    return Err(WDError::HasseViolation {
                        a: trace.clone(),
                        q,
                    });
                }
            }
            EllipticKind::Additive { rep } => {
                if rep.data().q() != q {
                    return Err(WDError::ResidueMismatch {
                        got: q,
                        want: rep.data().q(),
                    });
                }
                if rep.dim() != 2 {
                    return Err(WDError::BadDimension { got: rep.dim() });
                }
                if p >= 5 {
                    check_tame_inertia_order(rep)?;
                }
            }
            _ => {}
        }
        Ok(EllipticLocalData { kind, q })
    }

    pub fn kind(&self) -> &EllipticKind {
        &self.kind
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// Tameness (no wild conductor in any component) plus the order of the
/// inertia image, computed as the lcm of matrix orders of inertia
/// elements; the allowed orders are exactly 1, 2, 3, 4, 6.
fn check_tame_inertia_order(rep: &WDRep) -> Result<(), WDError> {
    let data = rep.data();
    let mut order = 1usize;
    for comp in rep.components() {
        let artin = match comp {
            WDComponent::Exact { artin, .. } => artin,
            WDComponent::FrobeniusQuadratic { .. } => continue,
        };
        let ce = conductor_exponent(artin, data)?;
        if !ce.wild.is_zero() {
            return Err(WDError::WildAdditive { p: data.p() });
        }
        for &g in data.inertia().elements() {
            order = order.lcm(&matrix_order_on_cyclic(artin, data.group(), g)?);
        }
    }
    if !matches!(order, 1 | 2 | 3 | 4 | 6) {
        return Err(WDError::BadInertiaOrder { order });
    }
    Ok(())
}

/// Order of `rho(g)` for a character `rho`: Fourier-analyze the
/// restriction to `<g>` into eigenvalue multiplicities and take the lcm
/// of the orders of the roots of unity that occur.
fn matrix_order_on_cyclic(
    chi: &ClassFunction,
    group: &FiniteGroup,
    g: usize,
) -> Result<usize, WDError> {
    let o = group.element_order(g);
    let inv_o = Cyclotomic::from_rat(Rat::new(Int::one(), Int::from(o as i64)));
    let mut order = 1usize;
    for u in 0..o {
        let mut m = Cyclotomic::zero();
        for v in 0..o {
            let z = Cyclotomic::root_of_unity(o as u64, -((u * v) as i64))
                .expect("positive level");
            m = m + chi.value_at_element(group.pow(g, v as i64)).clone() * z;
        }
        let m = (m * inv_o.clone()).as_rat().ok_or(WDError::BadEigenvalues)?;
        if m.is_negative() || !m.is_integer() {
            return Err(WDError::BadEigenvalues);
        }
        if !m.is_zero() {
            order = order.lcm(&(o / u.gcd(&o)));
        }
    }
    Ok(order)
}

/// Ramification data of an unramified local field: trivial Galois group,
/// trivial chain. Hosts the good and multiplicative components.
fn unramified_data(q: u64) -> Result<RamificationData, WDError> {
    let (p, _) = prime_power(q).ok_or(WDError::NotPrimePower { q })?;
    let g = FiniteGroup::trivial();
    let chain = vec![g.trivial_subgroup()];
    Ok(RamificationData::new(g, chain, 0, p, q)?)
}

/// Frobenius eigenvalue pair of `x^2 - ax + q` as exact twists, when the
/// roots are roots of unity times `sqrt(q)`.
fn exact_good_twists(a: &Int, q: u64) -> Option<(UnramifiedTwist, UnramifiedTwist)> {
    let tw = |n: u64, k: i64| {
        UnramifiedTwist::new(
            Cyclotomic::root_of_unity(n, k).expect("positive level"),
            1,
        )
        .expect("unit twist")
    };
    let a2 = a.clone() * a.clone();
    let qi = Int::from(q);
    let pair = if a.is_zero() {
        (tw(4, 1), tw(4, -1))
    } else if a2 == qi {
        if a.is_positive() {
            (tw(6, 1), tw(6, -1))
        } else {
            (tw(3, 1), tw(3, -1))
        }
    } else if a2 == Int::from(2) * qi.clone() {
        if a.is_positive() {
            (tw(8, 1), tw(8, -1))
        } else {
            (tw(8, 3), tw(8, -3))
        }
    } else if a2 == Int::from(3) * qi.clone() {
        if a.is_positive() {
            (tw(12, 1), tw(12, -1))
        } else {
            (tw(12, 5), tw(12, -5))
        }
    } else if a2 == Int::from(4) * qi {
        let s = if a.is_positive() {
            Cyclotomic::one()
        } else {
            -Cyclotomic::one()
        };
        (
            UnramifiedTwist::new(s.clone(), 1).expect("unit twist"),
            UnramifiedTwist::new(s, 1).expect("unit twist"),
        )
    } else {
        return None;
    };
    Some(pair)
}

/// The local Weil-Deligne representation of an elliptic curve: split
/// multiplicative is `sp(2)`, nonsplit twists it by the unit -1, good
/// reduction contributes the Frobenius eigenvalue pair, additive carries
/// user-supplied data.
pub fn ec_local_wd(data: &EllipticLocalData) -> Result<WDRep, WDError> {
    if let EllipticKind::Additive { rep } = &data.kind {
        return Ok(rep.clone());
    }
    let rdata = unramified_data(data.q)?;
    let trivial = ClassFunction::trivial(rdata.group().clone());
    let components = match &data.kind {
        EllipticKind::Good { trace } => match exact_good_twists(trace, data.q) {
            Some((alpha, beta)) => vec![
                WDComponent::Exact {
                    artin: trivial.clone(),
                    twist: alpha,
                    sp: 1,
                },
                WDComponent::Exact {
                    artin: trivial,
                    twist: beta,
                    sp: 1,
                },
            ],
            None => vec![WDComponent::FrobeniusQuadratic {
                trace: trace.clone(),
                sp: 1,
            }],
        },
        EllipticKind::SplitMultiplicative => vec![WDComponent::Exact {
            artin: trivial,
            twist: UnramifiedTwist::one(),
            sp: 2,
        }],
        EllipticKind::NonsplitMultiplicative => vec![WDComponent::Exact {
            artin: trivial,
            twist: UnramifiedTwist::new(-Cyclotomic::one(), 0)?,
            sp: 2,
        }],
        EllipticKind::Additive { .. } => unreachable!(),
    };
    WDRep::new(rdata, components)
}

const BRUTE_FORCE_BOUND: u64 = 1_000_000;

/// Count points of `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over
/// `F_q` by enumeration, including the point at infinity. Coefficients
/// in order `a1, a2, a3, a4, a6`. In odd characteristic the substitution
/// `y -> y - (a1 x + a3)/2` reduces to counting square roots, tabulated
/// once; in characteristic 2 the Artin-Schreier trace test decides
/// solvability per x.
pub fn ec_point_count_bruteforce(coeffs: &[Int; 5], q: u64) -> Result<u64, WDError> {
    if q > BRUTE_FORCE_BOUND {
        return Err(WDError::FieldTooLarge {
            q,
            bound: BRUTE_FORCE_BOUND,
        });
    }
    let field = FiniteField::of_order(q)?;
    let p = field.p();
    let emb = |c: &Int| {
        let r = c.mod_floor(&Int::from(p));
        field.from_prime_field(r.to_u64().expect("reduced residue"))
    };
    let small = |k: i64| {
        let r = k.rem_euclid(p as i64) as u64;
        field.from_prime_field(r)
    };
    let [a1, a2, a3, a4, a6] = [
        emb(&coeffs[0]),
        emb(&coeffs[1]),
        emb(&coeffs[2]),
        emb(&coeffs[3]),
        emb(&coeffs[4]),
    ];

    let b2 = a1.clone() * a1.clone() + small(4) * a2.clone();
    let b4 = small(2) * a4.clone() + a1.clone() * a3.clone();
    let b6 = a3.clone() * a3.clone() + small(4) * a6.clone();
    let b8 = a1.clone() * a1.clone() * a6.clone() + small(4) * a2.clone() * a6.clone()
        - a1.clone() * a3.clone() * a4.clone()
        + a2.clone() * a3.clone() * a3.clone()
        - a4.clone() * a4.clone();
    let disc = -(b2.clone() * b2.clone() * b8) - small(8) * b4.clone() * b4.clone() * b4.clone()
        - small(27) * b6.clone() * b6.clone()
        + small(9) * b2 * b4 * b6;
    if disc.is_zero() {
        return Err(WDError::SingularCurve { q });
    }

    let rhs = |x: &crate::exact::FFElem| {
        x.clone() * x.clone() * x.clone()
            + a2.clone() * x.clone() * x.clone()
            + a4.clone() * x.clone()
            + a6.clone()
    };
    let mut count = 0u64;
    if p == 2 {
        for xi in 0..q {
            let x = field.elem_from_index(xi);
            let c = a1.clone() * x.clone() + a3.clone();
            if c.is_zero() {
                // squaring is bijective: y^2 = rhs has exactly one root
                count += 1;
            } else {
                let d = rhs(&x) * (c.clone() * c).inv();
                if d.trace() == 0 {
                    count += 2;
                }
            }
        }
    } else {
        let mut squares = vec![0u32; q as usize];
        for yi in 0..q {
            let y = field.elem_from_index(yi);
            squares[(y.clone() * y).index() as usize] += 1;
        }
        let inv4 = small(4).inv();
        for xi in 0..q {
            let x = field.elem_from_index(xi);
            let c = a1.clone() * x.clone() + a3.clone();
            let g = rhs(&x) + c.clone() * c * inv4.clone();
            count += u64::from(squares[g.index() as usize]);
        }
    }
    Ok(count + 1)
}

/// Point count over `F_{q^n}` from the trace over `F_q`: the power sums
/// `s_k` of the Frobenius eigenvalues satisfy `s_0 = 2`, `s_1 = a`,
/// `s_k = a s_{k-1} - q s_{k-2}`, and the count is `q^n + 1 - s_n`.
pub fn ec_count_extension(a: &Int, q: u64, n: u32) -> Result<Int, WDError> {
    if a.clone() * a.clone() > Int::from(4) * Int::from(q) {
        return Err(WDError::HasseViolation { a: a.clone(), q });
    }
    let qi = Int::from(q);
    let mut prev = Int::from(2);
    let mut cur = a.clone();
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let next = a.clone() * cur.clone() - qi.clone() * prev;
        prev = cur;
        cur = next;
    }
    Ok(qi.pow(n) + Int::one() - cur)
}
