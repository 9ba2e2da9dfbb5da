//! Line-oriented fixture documents and their canonical serialization.
//!
//! A fixture is a UTF-8 text file of `[section]` headers and `name = value`
//! entries. Arrays are bracketed, comma-separated; a few keys repeat and
//! accumulate in order (`perm`, `row`, `chain`, `comp`, `class`, `ram`).
//! Every parse failure carries the line it came from.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use artin_core::exact::parse_cyclo;
use artin_core::{Cyclotomic, Int};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {message}")]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

fn diag(line: usize, message: impl Into<String>) -> Diagnostic {
    Diagnostic {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GroupSpec {
    Permutations {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        rows: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub enum CharactersSpec {
    /// `compute = true`: rows of the computed table, named `chi0`, `chi1`, ...
    Compute,
    /// Named rows of values listed in the canonical conjugacy-class order.
    Named(Vec<(String, Vec<Cyclotomic>)>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RamificationSpec {
    pub p: u64,
    pub q: u64,
    pub frobenius: usize,
    /// The groups `I_0, I_1, ...` as element-index lists, outermost first.
    pub chain: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum WdCompSpec {
    Exact {
        rep: String,
        unit: Cyclotomic,
        weight: i64,
        sp: usize,
    },
    Quad {
        trace: Int,
        sp: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllipticKindSpec {
    Good,
    Split,
    Nonsplit,
    Additive,
}

impl EllipticKindSpec {
    pub fn as_str(self) -> &'static str {
        match self {
            EllipticKindSpec::Good => "good",
            EllipticKindSpec::Split => "split",
            EllipticKindSpec::Nonsplit => "nonsplit",
            EllipticKindSpec::Additive => "additive",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EllipticSpec {
    pub kind: EllipticKindSpec,
    /// Weierstrass coefficients `a1, a2, a3, a4, a6`.
    pub coefficients: Option<[Int; 5]>,
    pub q: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalKindSpec {
    Artin,
    Elliptic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GlobalSpec {
    pub kind: GlobalKindSpec,
    pub rep: Option<String>,
    pub conjugation: Option<usize>,
    /// Defining polynomial for the splitting rule, constant term first.
    pub splitting: Option<Vec<Int>>,
    /// Explicit rule entries `(prime, class index)`.
    pub classes: Vec<(u64, usize)>,
    /// Ramified entries `(prime, exponent, Euler coefficients)`.
    pub ramified: Vec<(u64, u32, Vec<Cyclotomic>)>,
    pub zeta_index5: Option<String>,
    pub zeta_index2: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Fixture {
    pub group: Option<GroupSpec>,
    pub subgroups: Vec<(String, Vec<usize>)>,
    pub characters: Option<CharactersSpec>,
    pub ramification: Option<RamificationSpec>,
    pub wd: Option<Vec<WdCompSpec>>,
    pub elliptic: Option<EllipticSpec>,
    pub global: Option<GlobalSpec>,
}

struct RawEntry {
    line: usize,
    key: String,
    value: String,
}

struct RawSection {
    line: usize,
    name: String,
    entries: Vec<RawEntry>,
}

fn split_raw(text: &str) -> Result<Vec<RawSection>, Diagnostic> {
    let mut sections: Vec<RawSection> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(inner) = trimmed.strip_prefix('[') {
            let name = inner
                .strip_suffix(']')
                .ok_or_else(|| diag(line, "unterminated section header"))?
                .trim();
            if name.is_empty() {
                return Err(diag(line, "empty section name"));
            }
            sections.push(RawSection {
                line,
                name: name.to_string(),
                entries: Vec::new(),
            });
            continue;
        }
        let (key, value) = trimmed
            .split_once('=')
            .ok_or_else(|| diag(line, "expected `name = value` or a [section] header"))?;
        let key = key.trim();
        if key.is_empty() {
            return Err(diag(line, "entry has an empty key"));
        }
        let section = sections
            .last_mut()
            .ok_or_else(|| diag(line, "entry appears before any [section] header"))?;
        section.entries.push(RawEntry {
            line,
            key: key.to_string(),
            value: value.trim().to_string(),
        });
    }
    Ok(sections)
}

fn array_items(value: &str, line: usize) -> Result<Vec<String>, Diagnostic> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| diag(line, "expected a bracketed array `[a, b, ...]`"))?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|item| {
            let item = item.trim();
            if item.is_empty() {
                Err(diag(line, "array has an empty item"))
            } else {
                Ok(item.to_string())
            }
        })
        .collect()
}

fn parse_num<T: std::str::FromStr>(
    value: &str,
    line: usize,
    key: &str,
    want: &str,
) -> Result<T, Diagnostic> {
    value
        .parse()
        .map_err(|_| diag(line, format!("value of `{key}` must be {want}, got `{value}`")))
}

fn parse_index_array(value: &str, line: usize, key: &str) -> Result<Vec<usize>, Diagnostic> {
    array_items(value, line)?
        .iter()
        .map(|item| parse_num(item, line, key, "a list of element indices"))
        .collect()
}

fn parse_cyclo_value(value: &str, line: usize, key: &str) -> Result<Cyclotomic, Diagnostic> {
    parse_cyclo(value).map_err(|e| diag(line, format!("value of `{key}`: {e}")))
}

fn check_name(name: &str, line: usize) -> Result<(), Diagnostic> {
    let mut chars = name.chars();
    let head_ok = chars
        .next()
        .map(|c| c.is_ascii_alphabetic() || c == '_')
        .unwrap_or(false);
    if head_ok && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        Ok(())
    } else {
        Err(diag(line, format!("`{name}` is not a valid name")))
    }
}

fn parse_group(section: &RawSection) -> Result<GroupSpec, Diagnostic> {
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    let mut rows = Vec::new();
    for entry in &section.entries {
        match entry.key.as_str() {
            "degree" => {
                if degree.is_some() {
                    return Err(diag(entry.line, "duplicate key `degree`"));
                }
                degree = Some(parse_num(&entry.value, entry.line, "degree", "an integer")?);
            }
            "perm" => generators.push(parse_index_array(&entry.value, entry.line, "perm")?),
            "row" => rows.push(parse_index_array(&entry.value, entry.line, "row")?),
            other => {
                return Err(diag(entry.line, format!("unknown key `{other}` in [group]")));
            }
        }
    }
    match (degree, generators.is_empty(), rows.is_empty()) {
        (Some(d), false, true) => Ok(GroupSpec::Permutations {
            degree: d,
            generators,
        }),
        (None, true, false) => Ok(GroupSpec::Table { rows }),
        _ => Err(diag(
            section.line,
            "[group] needs either `degree` with `perm` generators or `row` table lines",
        )),
    }
}

fn parse_named_lists(
    section: &RawSection,
) -> Result<Vec<(String, Vec<usize>)>, Diagnostic> {
    let mut out: Vec<(String, Vec<usize>)> = Vec::new();
    for entry in &section.entries {
        check_name(&entry.key, entry.line)?;
        if out.iter().any(|(name, _)| *name == entry.key) {
            return Err(diag(entry.line, format!("duplicate subgroup `{}`", entry.key)));
        }
        out.push((
            entry.key.clone(),
            parse_index_array(&entry.value, entry.line, &entry.key)?,
        ));
    }
    Ok(out)
}

fn parse_characters(section: &RawSection) -> Result<CharactersSpec, Diagnostic> {
    let compute = section.entries.iter().find(|e| e.key == "compute");
    if let Some(entry) = compute {
        if section.entries.len() > 1 {
            return Err(diag(
                entry.line,
                "`compute = true` cannot be combined with named rows",
            ));
        }
        return match entry.value.as_str() {
            "true" => Ok(CharactersSpec::Compute),
            other => Err(diag(
                entry.line,
                format!("value of `compute` must be `true`, got `{other}`"),
            )),
        };
    }
    let mut rows: Vec<(String, Vec<Cyclotomic>)> = Vec::new();
    for entry in &section.entries {
        check_name(&entry.key, entry.line)?;
        if rows.iter().any(|(name, _)| *name == entry.key) {
            return Err(diag(entry.line, format!("duplicate character `{}`", entry.key)));
        }
        let values = array_items(&entry.value, entry.line)?
            .iter()
            .map(|item| parse_cyclo_value(item, entry.line, &entry.key))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((entry.key.clone(), values));
    }
    if rows.is_empty() {
        return Err(diag(
            section.line,
            "[characters] needs `compute = true` or at least one named row",
        ));
    }
    Ok(CharactersSpec::Named(rows))
}

fn parse_ramification(section: &RawSection) -> Result<RamificationSpec, Diagnostic> {
    let mut p = None;
    let mut q = None;
    let mut frobenius = None;
    let mut chain = Vec::new();
    for entry in &section.entries {
        match entry.key.as_str() {
            "p" => {
                if p.is_some() {
                    return Err(diag(entry.line, "duplicate key `p`"));
                }
                p = Some(parse_num(&entry.value, entry.line, "p", "a prime")?);
            }
            "q" => {
                if q.is_some() {
                    return Err(diag(entry.line, "duplicate key `q`"));
                }
                q = Some(parse_num(&entry.value, entry.line, "q", "a prime power")?);
            }
            "frobenius" => {
                if frobenius.is_some() {
                    return Err(diag(entry.line, "duplicate key `frobenius`"));
                }
                frobenius = Some(parse_num(
                    &entry.value,
                    entry.line,
                    "frobenius",
                    "an element index",
                )?);
            }
            "chain" => chain.push(parse_index_array(&entry.value, entry.line, "chain")?),
            other => {
                return Err(diag(
                    entry.line,
                    format!("unknown key `{other}` in [ramification]"),
                ));
            }
        }
    }
    let missing = |field: &str| diag(section.line, format!("[ramification] is missing `{field}`"));
    if chain.is_empty() {
        return Err(missing("chain"));
    }
    Ok(RamificationSpec {
        p: p.ok_or_else(|| missing("p"))?,
        q: q.ok_or_else(|| missing("q"))?,
        frobenius: frobenius.ok_or_else(|| missing("frobenius"))?,
        chain,
    })
}

fn parse_wd(section: &RawSection) -> Result<Vec<WdCompSpec>, Diagnostic> {
    let mut comps = Vec::new();
    for entry in &section.entries {
        if entry.key != "comp" {
            return Err(diag(
                entry.line,
                format!("unknown key `{}` in [wd]", entry.key),
            ));
        }
        let tokens: Vec<&str> = entry.value.split_whitespace().collect();
        let comp = match tokens.as_slice() {
            ["exact", rep, unit, weight, sp] => {
                check_name(rep, entry.line)?;
                WdCompSpec::Exact {
                    rep: rep.to_string(),
                    unit: parse_cyclo_value(unit, entry.line, "comp")?,
                    weight: parse_num(weight, entry.line, "comp", "an integer weight")?,
                    sp: parse_num(sp, entry.line, "comp", "a positive sp dimension")?,
                }
            }
            ["quad", trace, sp] => WdCompSpec::Quad {
                trace: parse_num(trace, entry.line, "comp", "an integer trace")?,
                sp: parse_num(sp, entry.line, "comp", "a positive sp dimension")?,
            },
            _ => {
                return Err(diag(
                    entry.line,
                    "`comp` must be `exact REP UNIT WEIGHT SP` or `quad TRACE SP`",
                ));
            }
        };
        comps.push(comp);
    }
    if comps.is_empty() {
        return Err(diag(section.line, "[wd] needs at least one `comp`"));
    }
    Ok(comps)
}

fn parse_elliptic(section: &RawSection) -> Result<EllipticSpec, Diagnostic> {
    let mut kind = None;
    let mut coefficients = None;
    let mut q = None;
    for entry in &section.entries {
        match entry.key.as_str() {
            "kind" => {
                if kind.is_some() {
                    return Err(diag(entry.line, "duplicate key `kind`"));
                }
                kind = Some(match entry.value.as_str() {
                    "good" => EllipticKindSpec::Good,
                    "split" => EllipticKindSpec::Split,
                    "nonsplit" => EllipticKindSpec::Nonsplit,
                    "additive" => EllipticKindSpec::Additive,
                    other => {
                        return Err(diag(
                            entry.line,
                            format!(
                                "`kind` must be good, split, nonsplit, or additive, got `{other}`"
                            ),
                        ));
                    }
                });
            }
            "coefficients" => {
                if coefficients.is_some() {
                    return Err(diag(entry.line, "duplicate key `coefficients`"));
                }
                let items = array_items(&entry.value, entry.line)?;
                if items.len() != 5 {
                    return Err(diag(
                        entry.line,
                        "`coefficients` must list exactly a1, a2, a3, a4, a6",
                    ));
                }
                let parsed: Vec<Int> = items
                    .iter()
                    .map(|item| parse_num(item, entry.line, "coefficients", "an integer"))
                    .collect::<Result<_, _>>()?;
                coefficients = Some([
                    parsed[0].clone(),
                    parsed[1].clone(),
                    parsed[2].clone(),
                    parsed[3].clone(),
                    parsed[4].clone(),
                ]);
            }
            "q" => {
                if q.is_some() {
                    return Err(diag(entry.line, "duplicate key `q`"));
                }
                q = Some(parse_num(&entry.value, entry.line, "q", "a prime power")?);
            }
            other => {
                return Err(diag(
                    entry.line,
                    format!("unknown key `{other}` in [elliptic]"),
                ));
            }
        }
    }
    let missing = |field: &str| diag(section.line, format!("[elliptic] is missing `{field}`"));
    Ok(EllipticSpec {
        kind: kind.ok_or_else(|| missing("kind"))?,
        coefficients,
        q: q.ok_or_else(|| missing("q"))?,
    })
}

fn parse_global(section: &RawSection) -> Result<GlobalSpec, Diagnostic> {
    let mut kind = None;
    let mut rep = None;
    let mut conjugation = None;
    let mut splitting = None;
    let mut classes = Vec::new();
    let mut ramified = Vec::new();
    let mut zeta_index5 = None;
    let mut zeta_index2 = None;
    let mut seen = BTreeSet::new();
    let mut once = |key: &str, line: usize| -> Result<(), Diagnostic> {
        if seen.insert(key.to_string()) {
            Ok(())
        } else {
            Err(diag(line, format!("duplicate key `{key}`")))
        }
    };
    for entry in &section.entries {
        match entry.key.as_str() {
            "kind" => {
                once("kind", entry.line)?;
                kind = Some(match entry.value.as_str() {
                    "artin" => GlobalKindSpec::Artin,
                    "elliptic" => GlobalKindSpec::Elliptic,
                    other => {
                        return Err(diag(
                            entry.line,
                            format!("`kind` must be artin or elliptic, got `{other}`"),
                        ));
                    }
                });
            }
            "rep" => {
                once("rep", entry.line)?;
                check_name(&entry.value, entry.line)?;
                rep = Some(entry.value.clone());
            }
            "conjugation" => {
                once("conjugation", entry.line)?;
                conjugation = Some(parse_num(
                    &entry.value,
                    entry.line,
                    "conjugation",
                    "a class index",
                )?);
            }
            "splitting" => {
                once("splitting", entry.line)?;
                let coeffs = array_items(&entry.value, entry.line)?
                    .iter()
                    .map(|item| parse_num(item, entry.line, "splitting", "an integer"))
                    .collect::<Result<Vec<Int>, _>>()?;
                splitting = Some(coeffs);
            }
            "class" => {
                let items = array_items(&entry.value, entry.line)?;
                if items.len() != 2 {
                    return Err(diag(entry.line, "`class` must be `[prime, class index]`"));
                }
                classes.push((
                    parse_num(&items[0], entry.line, "class", "a prime")?,
                    parse_num(&items[1], entry.line, "class", "a class index")?,
                ));
            }
            "ram" => {
                let items = array_items(&entry.value, entry.line)?;
                if items.len() < 3 {
                    return Err(diag(
                        entry.line,
                        "`ram` must be `[prime, exponent, c0, c1, ...]`",
                    ));
                }
                let p = parse_num(&items[0], entry.line, "ram", "a prime")?;
                let e = parse_num(&items[1], entry.line, "ram", "a positive exponent")?;
                let coeffs = items[2..]
                    .iter()
                    .map(|item| parse_cyclo_value(item, entry.line, "ram"))
                    .collect::<Result<Vec<_>, _>>()?;
                ramified.push((p, e, coeffs));
            }
            "zeta_index5" => {
                once("zeta_index5", entry.line)?;
                check_name(&entry.value, entry.line)?;
                zeta_index5 = Some(entry.value.clone());
            }
            "zeta_index2" => {
                once("zeta_index2", entry.line)?;
                check_name(&entry.value, entry.line)?;
                zeta_index2 = Some(entry.value.clone());
            }
            other => {
                return Err(diag(
                    entry.line,
                    format!("unknown key `{other}` in [global]"),
                ));
            }
        }
    }
    Ok(GlobalSpec {
        kind: kind.ok_or_else(|| diag(section.line, "[global] is missing `kind`"))?,
        rep,
        conjugation,
        splitting,
        classes,
        ramified,
        zeta_index5,
        zeta_index2,
    })
}

pub fn parse_fixture(text: &str) -> Result<Fixture, Diagnostic> {
    let sections = split_raw(text)?;
    let mut fixture = Fixture::default();
    let mut seen = BTreeSet::new();
    for section in &sections {
        if !seen.insert(section.name.clone()) {
            return Err(diag(
                section.line,
                format!("duplicate section [{}]", section.name),
            ));
        }
        match section.name.as_str() {
            "group" => fixture.group = Some(parse_group(section)?),
            "subgroups" => fixture.subgroups = parse_named_lists(section)?,
            "characters" => fixture.characters = Some(parse_characters(section)?),
            "ramification" => fixture.ramification = Some(parse_ramification(section)?),
            "wd" => fixture.wd = Some(parse_wd(section)?),
            "elliptic" => fixture.elliptic = Some(parse_elliptic(section)?),
            "global" => fixture.global = Some(parse_global(section)?),
            other => {
                return Err(diag(section.line, format!("unknown section [{other}]")));
            }
        }
    }
    Ok(fixture)
}

fn write_index_array(out: &mut String, key: &str, items: &[usize]) {
    let joined = items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    let _ = writeln!(out, "{key} = [{joined}]");
}

/// Canonical text form: fixed section order, one entry per line, arrays
/// spaced after commas. Parsing the output reproduces the fixture.
pub fn serialize_fixture(fixture: &Fixture) -> String {
    let mut out = String::new();
    if let Some(group) = &fixture.group {
        out.push_str("[group]\n");
        match group {
            GroupSpec::Permutations { degree, generators } => {
                let _ = writeln!(out, "degree = {degree}");
                for g in generators {
                    write_index_array(&mut out, "perm", g);
                }
            }
            GroupSpec::Table { rows } => {
                for row in rows {
                    write_index_array(&mut out, "row", row);
                }
            }
        }
    }
    if !fixture.subgroups.is_empty() {
        out.push_str("\n[subgroups]\n");
        for (name, elements) in &fixture.subgroups {
            write_index_array(&mut out, name, elements);
        }
    }
    if let Some(characters) = &fixture.characters {
        out.push_str("\n[characters]\n");
        match characters {
            CharactersSpec::Compute => out.push_str("compute = true\n"),
            CharactersSpec::Named(rows) => {
                for (name, values) in rows {
                    let joined = values
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    let _ = writeln!(out, "{name} = [{joined}]");
                }
            }
        }
    }
    if let Some(ram) = &fixture.ramification {
        out.push_str("\n[ramification]\n");
        let _ = writeln!(out, "p = {}", ram.p);
        let _ = writeln!(out, "q = {}", ram.q);
        let _ = writeln!(out, "frobenius = {}", ram.frobenius);
        for subgroup in &ram.chain {
            write_index_array(&mut out, "chain", subgroup);
        }
    }
    if let Some(comps) = &fixture.wd {
        out.push_str("\n[wd]\n");
        for comp in comps {
            match comp {
                WdCompSpec::Exact {
                    rep,
                    unit,
                    weight,
                    sp,
                } => {
                    let _ = writeln!(out, "comp = exact {rep} {unit} {weight} {sp}");
                }
                WdCompSpec::Quad { trace, sp } => {
                    let _ = writeln!(out, "comp = quad {trace} {sp}");
                }
            }
        }
    }
    if let Some(elliptic) = &fixture.elliptic {
        out.push_str("\n[elliptic]\n");
        let _ = writeln!(out, "kind = {}", elliptic.kind.as_str());
        if let Some(coeffs) = &elliptic.coefficients {
            let joined = coeffs
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "coefficients = [{joined}]");
        }
        let _ = writeln!(out, "q = {}", elliptic.q);
    }
    if let Some(global) = &fixture.global {
        out.push_str("\n[global]\n");
        let _ = writeln!(
            out,
            "kind = {}",
            match global.kind {
                GlobalKindSpec::Artin => "artin",
                GlobalKindSpec::Elliptic => "elliptic",
            }
        );
        if let Some(rep) = &global.rep {
            let _ = writeln!(out, "rep = {rep}");
        }
        if let Some(c) = global.conjugation {
            let _ = writeln!(out, "conjugation = {c}");
        }
        if let Some(coeffs) = &global.splitting {
            let joined = coeffs
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let _ = writeln!(out, "splitting = [{joined}]");
        }
        for (p, class) in &global.classes {
            let _ = writeln!(out, "class = [{p}, {class}]");
        }
        for (p, e, coeffs) in &global.ramified {
            let mut items = vec![p.to_string(), e.to_string()];
            items.extend(coeffs.iter().map(|c| c.to_string()));
            let _ = writeln!(out, "ram = [{}]", items.join(", "));
        }
        if let Some(name) = &global.zeta_index5 {
            let _ = writeln!(out, "zeta_index5 = {name}");
        }
        if let Some(name) = &global.zeta_index2 {
            let _ = writeln!(out, "zeta_index2 = {name}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# a comment
[group]
degree = 3
perm = [1, 2, 0]
perm = [1, 0, 2]

[subgroups]
inertia = [0, 1, 2]

[characters]
rho = [2, -1, 0]

[ramification]
p = 5
q = 5
frobenius = 3
chain = [0, 1, 2]
chain = [0]

[wd]
comp = exact rho z(4) 1 1
comp = quad -2 1

[elliptic]
kind = good
coefficients = [0, -1, 1, 0, 0]
q = 2

[global]
kind = artin
rep = rho
class = [2, 1]
ram = [3, 1, 1]
";

    #[test]
    fn sample_parses_and_round_trips() {
        let fixture = parse_fixture(SAMPLE).unwrap();
        assert!(matches!(
            fixture.group,
            Some(GroupSpec::Permutations { degree: 3, .. })
        ));
        assert_eq!(fixture.subgroups.len(), 1);
        let ram = fixture.ramification.as_ref().unwrap();
        assert_eq!((ram.p, ram.q, ram.frobenius), (5, 5, 3));
        assert_eq!(ram.chain.len(), 2);
        let text = serialize_fixture(&fixture);
        let again = parse_fixture(&text).unwrap();
        assert_eq!(fixture, again);
        // canonical text is a fixed point of parse -> serialize
        assert_eq!(serialize_fixture(&again), text);
    }

    #[test]
    fn missing_frobenius_names_the_field() {
        let text = "[ramification]\np = 5\nq = 5\nchain = [0]\n";
        let err = parse_fixture(text).unwrap_err();
        assert!(err.to_string().contains("frobenius"), "{err}");
    }

    #[test]
    fn bad_cyclotomic_literal_is_a_parse_error() {
        let text = "[characters]\nchi = [z(0)]\n";
        let err = parse_fixture(text).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.to_string().contains("chi"), "{err}");
    }

    #[test]
    fn unknown_keys_and_sections_are_rejected_with_lines() {
        let err = parse_fixture("[group]\ndegree = 2\nperm = [1, 0]\nfoo = 1\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = parse_fixture("[nonsense]\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_fixture("x = 1\n").unwrap_err();
        assert!(err.to_string().contains("before any"), "{err}");
    }

    #[test]
    fn wd_component_grammar_is_checked() {
        let ok = parse_fixture("[wd]\ncomp = quad 3 2\n").unwrap();
        assert_eq!(
            ok.wd.unwrap()[0],
            WdCompSpec::Quad {
                trace: Int::from(3),
                sp: 2
            }
        );
        let err = parse_fixture("[wd]\ncomp = exact rho\n").unwrap_err();
        assert!(err.to_string().contains("comp"), "{err}");
    }

    #[test]
    fn duplicate_scalar_keys_are_rejected() {
        let err = parse_fixture("[ramification]\np = 5\np = 7\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err =
            parse_fixture("[characters]\na = [1]\n\n[characters]\nb = [1]\n").unwrap_err();
        assert!(err.to_string().contains("duplicate section"), "{err}");
    }
}
