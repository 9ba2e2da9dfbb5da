//! The command implementations: each takes a parsed fixture plus its
//! arguments and produces a [`Report`].

use artin_core::chars::{character_table, induce, ClassFunction};
use artin_core::exact::{ff_orbit_resolvent, Cyclotomic, UniPoly};
use artin_core::localgal::{
    conductor_exponent, discriminant_valuation, frobenius_class, local_polynomial,
    pentagon_resolvent_pair, swan_pairing,
};
use artin_core::lseries::{
    dirichlet_coefficients, functional_equation_data, zeta_identity_check, GammaShape,
};
use artin_core::weildeligne::{
    ec_count_extension, ec_local_wd, ec_point_count_bruteforce, wd_conductor,
    wd_local_polynomial, wd_tensor, EllipticKind, WDComponent, WDRep,
};
use artin_core::Int;
use num_traits::Zero;

use crate::assemble::{self, classify_local, classify_ls, CliError};
use crate::fixture::Fixture;
use crate::report::Report;

/// Comma-joined cyclotomic literals; `", "` in text mode, `","` in
/// record values, which must stay free of spaces.
fn cyclo_list(values: &[Cyclotomic], spaced: bool) -> String {
    let sep = if spaced { ", " } else { "," };
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn usize_list(values: &[usize]) -> String {
    let inner = values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("[{inner}]")
}

/// A cyclotomic literal that cannot be glued to `*T^k` as a single
/// factor without parentheses.
fn composite_literal(lit: &str) -> bool {
    lit.contains('+') || lit[1..].contains('-')
}

/// Render a polynomial in the indeterminate `T`, ascending powers.
/// Spaced form reads `1 - T + 2*T^2`; the compact form drops every
/// space so it can live inside a record value.
pub fn poly_string(poly: &UniPoly<Cyclotomic>, spaced: bool) -> String {
    let Some(degree) = poly.degree() else {
        return "0".to_string();
    };
    let mut terms: Vec<String> = Vec::new();
    for i in 0..=degree {
        let c = poly.coeff(i);
        if c.is_zero() {
            continue;
        }
        let lit = c.to_string();
        let term = if i == 0 {
            lit
        } else {
            let t = if i == 1 {
                "T".to_string()
            } else {
                format!("T^{i}")
            };
            if lit == "1" {
                t
            } else if lit == "-1" {
                format!("-{t}")
            } else if composite_literal(&lit) {
                format!("({lit})*{t}")
            } else {
                format!("{lit}*{t}")
            }
        };
        terms.push(term);
    }
    let mut out = String::new();
    for term in terms {
        if out.is_empty() {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(if spaced { " - " } else { "-" });
            out.push_str(rest);
        } else {
            out.push_str(if spaced { " + " } else { "+" });
            out.push_str(&term);
        }
    }
    out
}

fn missing(section: &str) -> CliError {
    CliError::Validation(format!("fixture has no [{section}] section"))
}

fn kind_name(kind: &EllipticKind) -> &'static str {
    match kind {
        EllipticKind::Good { .. } => "good",
        EllipticKind::SplitMultiplicative => "split",
        EllipticKind::NonsplitMultiplicative => "nonsplit",
        EllipticKind::Additive { .. } => "additive",
    }
}

fn trivial_of(h: &artin_core::groups::Subgroup) -> Result<ClassFunction, CliError> {
    Ok(ClassFunction::trivial(h.as_group().clone()))
}

pub fn validate(fixture: &Fixture) -> Result<Report, CliError> {
    let mut report = Report::new("validate");
    let mut checked = 0usize;
    let mut parent = None;
    if fixture.group.is_some() {
        let g = assemble::group(fixture)?;
        report.line(format!(
            "group: ok (order {}, {} classes)",
            g.order(),
            g.conjugacy_classes().len()
        ));
        report.record(&[
            ("section", "group".to_string()),
            ("status", "ok".to_string()),
            ("order", g.order().to_string()),
            ("classes", g.conjugacy_classes().len().to_string()),
        ]);
        parent = Some(g);
        checked += 1;
    }
    let need_group = |parent: &Option<_>, section: &str| match parent {
        Some(_) => Ok(()),
        None => Err(CliError::Validation(format!(
            "[{section}] needs a [group] section"
        ))),
    };
    for (name, _) in &fixture.subgroups {
        need_group(&parent, "subgroups")?;
        let h = assemble::subgroup(fixture, parent.as_ref().unwrap(), name)?;
        report.line(format!("subgroup {name}: ok (order {})", h.order()));
        report.record(&[
            ("section", "subgroups".to_string()),
            ("name", name.clone()),
            ("status", "ok".to_string()),
            ("order", h.order().to_string()),
        ]);
        checked += 1;
    }
    if fixture.characters.is_some() {
        need_group(&parent, "characters")?;
        let rows = assemble::characters(fixture, parent.as_ref().unwrap())?;
        report.line(format!("characters: ok ({} rows)", rows.len()));
        report.record(&[
            ("section", "characters".to_string()),
            ("status", "ok".to_string()),
            ("rows", rows.len().to_string()),
        ]);
        checked += 1;
    }
    if fixture.ramification.is_some() {
        need_group(&parent, "ramification")?;
        let data = assemble::ramification(fixture, parent.as_ref().unwrap())?;
        report.line(format!(
            "ramification: ok (p={}, q={}, inertia order {})",
            data.p(),
            data.q(),
            data.inertia().order()
        ));
        report.record(&[
            ("section", "ramification".to_string()),
            ("status", "ok".to_string()),
            ("p", data.p().to_string()),
            ("q", data.q().to_string()),
            ("inertia", data.inertia().order().to_string()),
        ]);
        checked += 1;
    }
    if fixture.wd.is_some() {
        let rep = assemble::wd_rep(fixture)?;
        report.line(format!(
            "wd: ok (dim {}, {} components)",
            rep.dim(),
            rep.components().len()
        ));
        report.record(&[
            ("section", "wd".to_string()),
            ("status", "ok".to_string()),
            ("dim", rep.dim().to_string()),
            ("components", rep.components().len().to_string()),
        ]);
        checked += 1;
    }
    if fixture.elliptic.is_some() {
        let data = assemble::elliptic(fixture)?;
        report.line(format!(
            "elliptic: ok (kind {}, q={})",
            kind_name(data.kind()),
            data.q()
        ));
        report.record(&[
            ("section", "elliptic".to_string()),
            ("status", "ok".to_string()),
            ("kind", kind_name(data.kind()).to_string()),
            ("q", data.q().to_string()),
        ]);
        checked += 1;
    }
    if fixture.global.is_some() {
        let config = assemble::global_config(fixture)?;
        report.line(format!(
            "global: ok (dim {}, {} ramified primes)",
            config.dim(),
            config.ramified().len()
        ));
        report.record(&[
            ("section", "global".to_string()),
            ("status", "ok".to_string()),
            ("dim", config.dim().to_string()),
            ("ramified", config.ramified().len().to_string()),
        ]);
        checked += 1;
    }
    if checked == 0 {
        return Err(CliError::Validation("fixture has no sections".to_string()));
    }
    Ok(report)
}

pub fn table(fixture: &Fixture) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let t = character_table(&g)?;
    let mut report = Report::new("table");
    let classes = g.conjugacy_classes();
    for c in 0..classes.len() {
        report.line(format!(
            "class {c}: size {}, rep {}",
            classes.size(c),
            classes.representative(c)
        ));
        report.record(&[
            ("kind", "class".to_string()),
            ("index", c.to_string()),
            ("size", classes.size(c).to_string()),
            ("rep", classes.representative(c).to_string()),
        ]);
    }
    for (i, row) in t.rows().iter().enumerate() {
        report.line(format!("chi{i} = {}", cyclo_list(row.values(), true)));
        report.record(&[
            ("kind", "row".to_string()),
            ("index", i.to_string()),
            ("values", cyclo_list(row.values(), false)),
        ]);
    }
    Ok(report)
}

/// Multiplicity vector against the table rows, as `chi0 + 2*chi2`.
fn decomposition_string(mults: &[usize], spaced: bool) -> String {
    let terms: Vec<String> = mults
        .iter()
        .enumerate()
        .filter(|(_, m)| **m > 0)
        .map(|(i, m)| {
            if *m == 1 {
                format!("chi{i}")
            } else {
                format!("{m}*chi{i}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(if spaced { " + " } else { "+" })
    }
}

pub fn induce_trivial(fixture: &Fixture, subgroup_name: &str) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let h = assemble::subgroup(fixture, &g, subgroup_name)?;
    let chi = induce(&h, &trivial_of(&h)?)?;
    let t = character_table(&g)?;
    let mults = t.decompose(&chi)?;
    let mut report = Report::new("induce");
    report.line(format!("values = {}", cyclo_list(chi.values(), true)));
    report.line(format!(
        "decomposition = {}",
        decomposition_string(&mults, true)
    ));
    report.record(&[
        ("subgroup", subgroup_name.to_string()),
        ("values", cyclo_list(chi.values(), false)),
        ("decomposition", decomposition_string(&mults, false)),
    ]);
    Ok(report)
}

pub fn local_poly(fixture: &Fixture, rep: &str) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let data = assemble::ramification(fixture, &g)?;
    let chi = assemble::character(fixture, &g, rep)?;
    let poly =
        local_polynomial(&chi, &data).map_err(|e| classify_local("local polynomial", e))?;
    let mut report = Report::new("local-poly");
    report.line(format!("P = {}", poly_string(&poly, true)));
    report.record(&[
        ("rep", rep.to_string()),
        ("poly", poly_string(&poly, false)),
    ]);
    Ok(report)
}

pub fn conductor(fixture: &Fixture, rep: &str) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let data = assemble::ramification(fixture, &g)?;
    let chi = assemble::character(fixture, &g, rep)?;
    let ce =
        conductor_exponent(&chi, &data).map_err(|e| classify_local("conductor exponent", e))?;
    let swan = swan_pairing(&chi, &data).map_err(|e| classify_local("Swan pairing", e))?;
    let check = if swan == ce.wild { "ok" } else { "mismatch" };
    let mut report = Report::new("conductor");
    report.line(format!(
        "tame={} wild={} total={} swan_check={}",
        ce.tame, ce.wild, ce.total, check
    ));
    report.record(&[
        ("rep", rep.to_string()),
        ("tame", ce.tame.to_string()),
        ("wild", ce.wild.to_string()),
        ("total", ce.total.to_string()),
        ("swan_check", check.to_string()),
    ]);
    Ok(report)
}

pub fn disc(fixture: &Fixture, subgroup_name: Option<&str>) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let data = assemble::ramification(fixture, &g)?;
    let h = match subgroup_name {
        Some(name) => assemble::subgroup(fixture, &g, name)?,
        None => g.trivial_subgroup(),
    };
    let v = discriminant_valuation(&data, &h)
        .map_err(|e| classify_local("discriminant valuation", e))?;
    let mut report = Report::new("disc");
    report.line(format!("v(disc) = {v}"));
    report.record(&[
        (
            "subgroup",
            subgroup_name.unwrap_or("trivial").to_string(),
        ),
        ("v", v.to_string()),
    ]);
    Ok(report)
}

fn component_lines(report: &mut Report, rep: &WDRep) {
    for (i, comp) in rep.components().iter().enumerate() {
        match comp {
            WDComponent::Exact { artin, twist, sp } => {
                report.line(format!(
                    "comp {i}: sp={sp} weight={} unit={} artin=[{}]",
                    twist.weight(),
                    twist.unit(),
                    cyclo_list(artin.values(), false)
                ));
                report.record(&[
                    ("comp", i.to_string()),
                    ("kind", "exact".to_string()),
                    ("sp", sp.to_string()),
                    ("weight", twist.weight().to_string()),
                    ("unit", twist.unit().to_string()),
                    (
                        "artin",
                        format!("[{}]", cyclo_list(artin.values(), false)),
                    ),
                ]);
            }
            WDComponent::FrobeniusQuadratic { trace, sp } => {
                report.line(format!("comp {i}: quad trace={trace} sp={sp}"));
                report.record(&[
                    ("comp", i.to_string()),
                    ("kind", "quad".to_string()),
                    ("sp", sp.to_string()),
                    ("trace", trace.to_string()),
                ]);
            }
        }
    }
}

pub fn wd_poly(fixture: &Fixture) -> Result<Report, CliError> {
    let rep = assemble::wd_rep(fixture)?;
    let poly = wd_local_polynomial(&rep)?;
    let mut report = Report::new("wd-poly");
    report.line(format!("P = {}", poly_string(&poly, true)));
    report.record(&[("poly", poly_string(&poly, false))]);
    Ok(report)
}

pub fn wd_cond(fixture: &Fixture) -> Result<Report, CliError> {
    let rep = assemble::wd_rep(fixture)?;
    let n = wd_conductor(&rep)?;
    let mut report = Report::new("wd-cond");
    report.line(format!("conductor = {n}"));
    report.record(&[("conductor", n.to_string())]);
    Ok(report)
}

pub fn wd_tensor_square(fixture: &Fixture) -> Result<Report, CliError> {
    let rep = assemble::wd_rep(fixture)?;
    let square = wd_tensor(&rep, &rep)?;
    let mut report = Report::new("wd-tensor");
    report.line(format!("dim = {}", square.dim()));
    report.record(&[
        ("kind", "summary".to_string()),
        ("dim", square.dim().to_string()),
        ("components", square.components().len().to_string()),
    ]);
    component_lines(&mut report, &square);
    Ok(report)
}

pub fn ec_count(fixture: &Fixture, prime: Option<u64>) -> Result<Report, CliError> {
    let spec = fixture.elliptic.as_ref().ok_or_else(|| missing("elliptic"))?;
    let q = prime.unwrap_or(spec.q);
    let coeffs = assemble::elliptic_coefficients(fixture)?;
    let count = ec_point_count_bruteforce(&coeffs, q)?;
    let mut report = Report::new("ec-count");
    report.line(format!("count = {count}"));
    report.record(&[("q", q.to_string()), ("count", count.to_string())]);
    Ok(report)
}

pub fn ec_extension(
    fixture: &Fixture,
    degree: u32,
    prime: Option<u64>,
) -> Result<Report, CliError> {
    let spec = fixture.elliptic.as_ref().ok_or_else(|| missing("elliptic"))?;
    let q = prime.unwrap_or(spec.q);
    let coeffs = assemble::elliptic_coefficients(fixture)?;
    let base = ec_point_count_bruteforce(&coeffs, q)?;
    let a = Int::from(q) + Int::from(1) - Int::from(base);
    let count = ec_count_extension(&a, q, degree)?;
    let mut report = Report::new("ec-extension");
    report.line(format!("a = {a}"));
    report.line(format!("count = {count}"));
    report.record(&[
        ("q", q.to_string()),
        ("degree", degree.to_string()),
        ("a", a.to_string()),
        ("count", count.to_string()),
    ]);
    Ok(report)
}

pub fn ec_wd(fixture: &Fixture) -> Result<Report, CliError> {
    let data = assemble::elliptic(fixture)?;
    let rep = ec_local_wd(&data)?;
    let poly = wd_local_polynomial(&rep)?;
    let n = wd_conductor(&rep)?;
    let mut report = Report::new("ec-wd");
    report.line(format!("kind = {}", kind_name(data.kind())));
    report.line(format!("P = {}", poly_string(&poly, true)));
    report.line(format!("conductor = {n}"));
    report.record(&[
        ("kind", kind_name(data.kind()).to_string()),
        ("poly", poly_string(&poly, false)),
        ("conductor", n.to_string()),
        ("dim", rep.dim().to_string()),
    ]);
    component_lines(&mut report, &rep);
    Ok(report)
}

fn splitting_poly(fixture: &Fixture) -> Result<Vec<Int>, CliError> {
    fixture
        .global
        .as_ref()
        .and_then(|spec| spec.splitting.clone())
        .ok_or_else(|| {
            CliError::Validation(
                "fixture has no [global] `splitting` polynomial".to_string(),
            )
        })
}

pub fn frobenius(
    fixture: &Fixture,
    prime: u64,
    stride: Option<usize>,
) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let f = splitting_poly(fixture)?;
    let class = frobenius_class(&f, prime, &g).map_err(|e| classify_local("Frobenius class", e))?;
    let mut report = Report::new("frobenius");
    report.line(format!("class = {}", class.class));
    report.line(format!("representative = {}", class.representative));
    report.line(format!("cycle_type = {}", usize_list(&class.cycle_type)));
    report.line(format!("order = {}", class.order));
    report.line(format!("via_resolvent = {}", class.via_resolvent));
    let mut pairs = vec![
        ("p", prime.to_string()),
        ("class", class.class.to_string()),
        ("representative", class.representative.to_string()),
        ("cycle_type", usize_list(&class.cycle_type)),
        ("order", class.order.to_string()),
        ("via_resolvent", class.via_resolvent.to_string()),
    ];
    // For monic quintics the two resolvent values sum to the second
    // elementary symmetric function of the roots, read off the T^3
    // coefficient; failure would mean the exact pipeline miscomputed.
    if f.len() == 6 && f[5] == Int::from(1) {
        let (r1, r2) =
            pentagon_resolvent_pair(&f).map_err(|e| classify_local("pentagon resolvent", e))?;
        let e2 = f[3].clone();
        if r1.clone() + r2.clone() != e2 {
            return Err(CliError::Validation(format!(
                "pentagon resolvent witness failed: r1 + r2 = {} but e2 = {}",
                r1 + r2,
                e2
            )));
        }
        report.line(format!("r1 = {r1}"));
        report.line(format!("r2 = {r2}"));
        report.line("witness = ok".to_string());
        pairs.push(("r1", r1.to_string()));
        pairs.push(("r2", r2.to_string()));
        pairs.push(("witness", "ok".to_string()));
    }
    if let Some(s) = stride {
        let m = ff_orbit_resolvent(&f, prime, s)?;
        report.line(format!("resolvent(stride {s}) = {m}"));
        pairs.push(("stride", s.to_string()));
        pairs.push(("resolvent", m.to_string()));
    }
    report.record(&pairs);
    Ok(report)
}

pub fn lseries(fixture: &Fixture, limit: u64) -> Result<Report, CliError> {
    let config = assemble::global_config(fixture)?;
    let series = dirichlet_coefficients(&config, limit)
        .map_err(|e| classify_ls("Dirichlet coefficients", e))?;
    let mut report = Report::new("lseries");
    report.line(format!(
        "coefficients = {}",
        cyclo_list(series.coefficients(), false)
    ));
    report.record(&[
        ("limit", limit.to_string()),
        ("coefficients", cyclo_list(series.coefficients(), false)),
    ]);
    Ok(report)
}

pub fn fe_data(fixture: &Fixture) -> Result<Report, CliError> {
    let config = assemble::global_config(fixture)?;
    let fe = functional_equation_data(&config)
        .map_err(|e| classify_ls("functional equation", e))?;
    let mut report = Report::new("fe-data");
    report.line(format!("A = {}", fe.a_constant));
    report.line(format!("conductor = {}", fe.conductor));
    let mut pairs = vec![
        ("a", fe.a_constant.to_string()),
        ("conductor", fe.conductor.to_string()),
    ];
    match fe.shape {
        GammaShape::RealPair { d_plus, d_minus } => {
            report.line(format!("d_plus = {d_plus}"));
            report.line(format!("d_minus = {d_minus}"));
            pairs.push(("d_plus", d_plus.to_string()));
            pairs.push(("d_minus", d_minus.to_string()));
        }
        GammaShape::ComplexCount { gamma_c } => {
            report.line(format!("gamma_c = {gamma_c}"));
            pairs.push(("gamma_c", gamma_c.to_string()));
        }
    }
    report.line(format!("self_dual = {}", fe.self_dual));
    report.line(format!("root_number = {}", fe.root_number));
    pairs.push(("self_dual", fe.self_dual.to_string()));
    pairs.push(("root_number", "unknown(|w|=1)".to_string()));
    report.record(&pairs);
    Ok(report)
}

pub fn zeta_identity(fixture: &Fixture, limit: u64) -> Result<Report, CliError> {
    let g = assemble::group(fixture)?;
    let spec = fixture.global.as_ref().ok_or_else(|| missing("global"))?;
    let (name5, name2) = match (&spec.zeta_index5, &spec.zeta_index2) {
        (Some(a), Some(b)) => (a.as_str(), b.as_str()),
        _ => {
            return Err(CliError::Validation(
                "[global] needs `zeta_index5` and `zeta_index2` subgroup names".to_string(),
            ))
        }
    };
    let h5 = assemble::subgroup(fixture, &g, name5)?;
    let h2 = assemble::subgroup(fixture, &g, name2)?;
    let ind5 = induce(&h5, &trivial_of(&h5)?)?;
    let ind2 = induce(&h2, &trivial_of(&h2)?)?;
    let left = [
        (ClassFunction::regular(g.clone()), 1),
        (ClassFunction::trivial(g.clone()), 2),
    ];
    let right = [(ind5, 2), (ind2, 1)];
    let resolver = assemble::resolver(fixture)?;
    let skip = assemble::ramified_primes(fixture);
    let outcome = zeta_identity_check(&left, &right, &resolver, &skip, limit)
        .map_err(|e| classify_ls("zeta identity", e))?;
    let ambiguous = if outcome.ambiguous_skipped.is_empty() {
        "none".to_string()
    } else {
        outcome
            .ambiguous_skipped
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut report = Report::new("zeta-identity");
    report.line("identity = ok".to_string());
    report.line(format!("checked_to = {}", outcome.checked_to));
    report.line(format!("resolved = {}", outcome.primes_resolved));
    report.line(format!("ambiguous = {ambiguous}"));
    report.record(&[
        ("identity", "ok".to_string()),
        ("checked_to", outcome.checked_to.to_string()),
        ("resolved", outcome.primes_resolved.to_string()),
        ("ambiguous", ambiguous),
    ]);
    Ok(report)
}
