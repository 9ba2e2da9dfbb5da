//! From parsed fixtures to core objects, with every failure classified
//! for the exit-code contract: parse and validation problems versus
//! genuine mathematical ambiguity.

use std::collections::BTreeMap;

use artin_core::chars::{character_table, CharError, ClassFunction};
use artin_core::exact::{CycloError, FFError, SeriesError, UniPoly};
use artin_core::groups::{FiniteGroup, GroupError, Subgroup};
use artin_core::localgal::{LocalError, RamificationData};
use artin_core::lseries::{ClassResolver, GlobalConfig, GlobalKind, LsError};
use artin_core::weildeligne::{
    ec_point_count_bruteforce, EllipticKind, EllipticLocalData, UnramifiedTwist, WDComponent,
    WDError, WDRep,
};
use artin_core::{Cyclotomic, Int};
use thiserror::Error;

use crate::fixture::{
    CharactersSpec, Diagnostic, EllipticKindSpec, Fixture, GlobalKindSpec, GroupSpec, WdCompSpec,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(Diagnostic),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Ambiguous(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Validation(_) => 1,
            CliError::Ambiguous(_) => 2,
        }
    }

    fn validation(context: &str, err: impl std::fmt::Display) -> CliError {
        CliError::Validation(format!("{context}: {err}"))
    }
}

// Not derived via #[from]: the diagnostic is the message itself, not a
// source to repeat below it.
impl From<Diagnostic> for CliError {
    fn from(diag: Diagnostic) -> Self {
        CliError::Parse(diag)
    }
}

fn local_is_ambiguous(err: &LocalError) -> bool {
    matches!(
        err,
        LocalError::AmbiguousClass { .. }
            | LocalError::ResolventCollision { .. }
            | LocalError::ResolventMismatch { .. }
            | LocalError::RoundingFailure { .. }
    )
}

pub fn classify_local(context: &str, err: LocalError) -> CliError {
    if local_is_ambiguous(&err) {
        CliError::Ambiguous(format!("{context}: {err}"))
    } else {
        CliError::validation(context, err)
    }
}

pub fn classify_ls(context: &str, err: LsError) -> CliError {
    match err {
        LsError::AmbiguousFrobenius { .. } => CliError::Ambiguous(format!("{context}: {err}")),
        LsError::Local(e) => classify_local(context, e),
        other => CliError::validation(context, other),
    }
}

macro_rules! validation_from {
    ($($ty:ty),*) => {$(
        impl From<$ty> for CliError {
            fn from(err: $ty) -> Self {
                CliError::Validation(err.to_string())
            }
        }
    )*};
}

validation_from!(GroupError, CharError, WDError, CycloError, FFError, SeriesError);

fn missing(section: &str) -> CliError {
    CliError::Validation(format!("fixture has no [{section}] section"))
}

pub fn group(fixture: &Fixture) -> Result<FiniteGroup, CliError> {
    match fixture.group.as_ref().ok_or_else(|| missing("group"))? {
        GroupSpec::Permutations { degree, generators } => {
            Ok(FiniteGroup::from_permutations(*degree, generators)?)
        }
        GroupSpec::Table { rows } => Ok(FiniteGroup::from_table(rows.clone(), None)?),
    }
}

pub fn subgroup(fixture: &Fixture, group: &FiniteGroup, name: &str) -> Result<Subgroup, CliError> {
    let elements = fixture
        .subgroups
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, e)| e.clone())
        .ok_or_else(|| CliError::Validation(format!("no subgroup named `{name}` in fixture")))?;
    group
        .subgroup(elements)
        .map_err(|e| CliError::validation(&format!("subgroup `{name}`"), e))
}

/// Named characters on the fixture group, in fixture order; `compute =
/// true` yields the table rows as `chi0`, `chi1`, ...
pub fn characters(
    fixture: &Fixture,
    group: &FiniteGroup,
) -> Result<Vec<(String, ClassFunction)>, CliError> {
    match fixture
        .characters
        .as_ref()
        .ok_or_else(|| missing("characters"))?
    {
        CharactersSpec::Compute => {
            let table = character_table(group)?;
            Ok(table
                .rows()
                .iter()
                .enumerate()
                .map(|(i, row)| (format!("chi{i}"), row.clone()))
                .collect())
        }
        CharactersSpec::Named(rows) => rows
            .iter()
            .map(|(name, values)| {
                ClassFunction::new(group.clone(), values.clone())
                    .map(|chi| (name.clone(), chi))
                    .map_err(|e| CliError::validation(&format!("character `{name}`"), e))
            })
            .collect(),
    }
}

pub fn character(
    fixture: &Fixture,
    group: &FiniteGroup,
    name: &str,
) -> Result<ClassFunction, CliError> {
    characters(fixture, group)?
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, chi)| chi)
        .ok_or_else(|| CliError::Validation(format!("no character named `{name}` in fixture")))
}

pub fn ramification(
    fixture: &Fixture,
    group: &FiniteGroup,
) -> Result<RamificationData, CliError> {
    let spec = fixture
        .ramification
        .as_ref()
        .ok_or_else(|| missing("ramification"))?;
    let chain = spec
        .chain
        .iter()
        .enumerate()
        .map(|(k, elements)| {
            group
                .subgroup(elements.clone())
                .map_err(|e| CliError::validation(&format!("chain group I_{k}"), e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    RamificationData::new(group.clone(), chain, spec.frobenius, spec.p, spec.q)
        .map_err(|e| classify_local("ramification data", e))
}

pub fn wd_rep(fixture: &Fixture) -> Result<WDRep, CliError> {
    let comps = fixture.wd.as_ref().ok_or_else(|| missing("wd"))?;
    let group = group(fixture)?;
    let data = ramification(fixture, &group)?;
    let components = comps
        .iter()
        .map(|comp| match comp {
            WdCompSpec::Exact {
                rep,
                unit,
                weight,
                sp,
            } => Ok(WDComponent::Exact {
                artin: character(fixture, &group, rep)?,
                twist: UnramifiedTwist::new(unit.clone(), *weight)?,
                sp: *sp,
            }),
            WdCompSpec::Quad { trace, sp } => Ok(WDComponent::FrobeniusQuadratic {
                trace: trace.clone(),
                sp: *sp,
            }),
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    WDRep::new(data, components).map_err(CliError::from)
}

pub fn elliptic(fixture: &Fixture) -> Result<EllipticLocalData, CliError> {
    let spec = fixture
        .elliptic
        .as_ref()
        .ok_or_else(|| missing("elliptic"))?;
    let kind = match spec.kind {
        EllipticKindSpec::Good => {
            let coeffs = elliptic_coefficients(fixture)?;
            let count = ec_point_count_bruteforce(&coeffs, spec.q)?;
            EllipticKind::Good {
                trace: Int::from(spec.q) + Int::from(1) - Int::from(count),
            }
        }
        EllipticKindSpec::Split => EllipticKind::SplitMultiplicative,
        EllipticKindSpec::Nonsplit => EllipticKind::NonsplitMultiplicative,
        EllipticKindSpec::Additive => EllipticKind::Additive {
            rep: wd_rep(fixture)?,
        },
    };
    EllipticLocalData::new(kind, spec.q).map_err(CliError::from)
}

pub fn elliptic_coefficients(fixture: &Fixture) -> Result<[Int; 5], CliError> {
    fixture
        .elliptic
        .as_ref()
        .ok_or_else(|| missing("elliptic"))?
        .coefficients
        .clone()
        .ok_or_else(|| {
            CliError::Validation("[elliptic] has no `coefficients` entry".to_string())
        })
}

pub fn resolver(fixture: &Fixture) -> Result<ClassResolver, CliError> {
    let spec = fixture.global.as_ref().ok_or_else(|| missing("global"))?;
    match (&spec.splitting, spec.classes.is_empty()) {
        (Some(_), false) => Err(CliError::Validation(
            "[global] must use either `splitting` or `class` entries, not both".to_string(),
        )),
        (Some(poly), true) => Ok(ClassResolver::Splitting { poly: poly.clone() }),
        (None, _) => Ok(ClassResolver::Explicit(
            spec.classes.iter().copied().collect::<BTreeMap<_, _>>(),
        )),
    }
}

fn ramified_map(
    fixture: &Fixture,
) -> Result<BTreeMap<u64, (UniPoly<Cyclotomic>, u32)>, CliError> {
    let spec = fixture.global.as_ref().ok_or_else(|| missing("global"))?;
    let mut map = BTreeMap::new();
    for (p, exponent, coeffs) in &spec.ramified {
        if map
            .insert(*p, (UniPoly::new(coeffs.clone()), *exponent))
            .is_some()
        {
            return Err(CliError::Validation(format!(
                "duplicate `ram` entry for prime {p}"
            )));
        }
    }
    Ok(map)
}

pub fn global_config(fixture: &Fixture) -> Result<GlobalConfig, CliError> {
    let spec = fixture.global.as_ref().ok_or_else(|| missing("global"))?;
    let kind = match spec.kind {
        GlobalKindSpec::Artin => {
            let group = group(fixture)?;
            let rep = spec.rep.as_ref().ok_or_else(|| {
                CliError::Validation("[global] artin kind needs a `rep` entry".to_string())
            })?;
            GlobalKind::Artin {
                chi: character(fixture, &group, rep)?,
                resolver: resolver(fixture)?,
                conjugation_class: spec.conjugation,
            }
        }
        GlobalKindSpec::Elliptic => GlobalKind::Elliptic {
            coefficients: elliptic_coefficients(fixture)?,
        },
    };
    GlobalConfig::new(ramified_map(fixture)?, kind)
        .map_err(|e| classify_ls("global configuration", e))
}

/// The primes whose local data the global section supplies; the zeta
/// identity hands these the trivial factor.
pub fn ramified_primes(fixture: &Fixture) -> Vec<u64> {
    fixture
        .global
        .as_ref()
        .map(|spec| spec.ramified.iter().map(|(p, _, _)| *p).collect())
        .unwrap_or_default()
}
