//! Command implementations. Each returns rendered output or a [`CliError`].

use std::path::Path;

use design_lines_core::enumeration::{
    annotate, integer_points, AdmissibilityFilter, Annotation, Bound, Catalog, CatalogStatus,
};
use design_lines_core::families::{
    self, difference_family_line, DifferenceFamilyKind, FamilyAPoint, ParentKind,
};
use design_lines_core::lines::lines_through;
use design_lines_core::pseudo::{self, Strategy};
use design_lines_core::sieve::{self, Verdict};
use design_lines_core::variety::plane_intersection;
use design_lines_core::{rational, DesignPoint, LineDescriptor, PlaneId, Rational};

use crate::output::{Cell, Format, Report};
use crate::{catalog, mf, Cli, CliError, Command, DfKind, FamiliesCommand, FilterArg, PseudoCommand, TableName};

pub fn dispatch(cli: Cli) -> Result<String, CliError> {
    let format = cli.format;
    let report = match &cli.command {
        Command::Classify { point } => classify(&parse_point(point)?)?,
        Command::Lines { point } => lines(&parse_point(point)?)?,
        Command::Enumerate { line } => {
            let catalog = load_catalog(&cli)?;
            enumerate(&parse_line(line)?, &bound(&cli)?, &filter(cli.filter), catalog.as_ref())?
        }
        Command::Sieve { point, line } => {
            let catalog = load_catalog(&cli)?;
            match (point, line) {
                (Some(p), None) => sieve_one(&parse_point(p)?, catalog.as_ref())?,
                (None, Some(l)) => {
                    sieve_line(&parse_line(l)?, &bound(&cli)?, &filter(cli.filter), catalog.as_ref())?
                }
                _ => return Err(CliError::Usage("sieve needs a point or --line".into())),
            }
        }
        Command::Families(sub) => families(sub)?,
        Command::Pell { count } => pell(*count),
        Command::Pseudo(PseudoCommand::Solve { v, k, lambda, full_only }) => {
            let strategy = if *full_only { Strategy::FullOnly } else { Strategy::CyclicThenFull };
            let found = pseudo::solve_with(*v, *k, *lambda, strategy)?;
            if format == Format::Table {
                let point = found
                    .verify()
                    .map_err(|e| CliError::Internal(format!("solver produced an unbalanced function: {e}")))?;
                return Ok(format!("# pseudo-design {}\n{}", show(&point), mf::render(&found)));
            }
            pseudo_rows(&found)
        }
        Command::Pseudo(PseudoCommand::Verify { file }) => pseudo_verify(file)?,
        Command::Tables(args) => match args.name {
            TableName::Table1 => table1()?,
            TableName::Table4 => table4(&parse_rational(&args.f)?, &parse_rational(&args.p)?)?,
            TableName::Table6 => pell(9),
            TableName::F0List => {
                let catalog = load_catalog(&cli)?.unwrap_or_else(catalog::bundled);
                f0_list(&catalog)?
            }
        },
    };
    Ok(report.render(format))
}

fn parse_point(s: &str) -> Result<DesignPoint, CliError> {
    s.parse().map_err(CliError::from)
}

fn parse_line(s: &str) -> Result<LineDescriptor, CliError> {
    s.parse().map_err(CliError::from)
}

fn parse_rational(s: &str) -> Result<Rational, CliError> {
    rational::parse(s).map_err(CliError::from)
}

/// A point as `(v,b,r,k,λ)`; re-parses to the same value.
pub fn show(p: &DesignPoint) -> String {
    format!("({p})")
}

fn dash() -> Cell {
    "-".into()
}

fn load_catalog(cli: &Cli) -> Result<Option<Catalog>, CliError> {
    catalog::resolve_path(cli.catalog.clone())
        .map(|path| catalog::load_catalog_file(&path))
        .transpose()
}

fn bound(cli: &Cli) -> Result<Bound, CliError> {
    match (cli.max_r, cli.max_v) {
        (Some(r), None) => Ok(Bound::r(r)),
        (None, Some(v)) => Ok(Bound::v(v)),
        (Some(_), Some(_)) => Err(CliError::Usage("give only one of --max-r and --max-v".into())),
        (None, None) => Err(CliError::Usage("a bound is required: --max-r N or --max-v N".into())),
    }
}

fn filter(arg: FilterArg) -> AdmissibilityFilter {
    match arg {
        FilterArg::Default => AdmissibilityFilter::default(),
        FilterArg::StrictFisher => AdmissibilityFilter::strict_fisher(),
        FilterArg::None => AdmissibilityFilter::none(),
    }
}

pub fn classify(p: &DesignPoint) -> Result<Report, CliError> {
    if !p.on_variety() {
        let (a, b) = p.residuals();
        return Err(CliError::Domain(format!(
            "{} is not on the variety: vr - bk = {a}, r(k-1) - λ(v-1) = {b}",
            show(p)
        )));
    }
    let planes = p.planes_containing()?;
    let tags = families::classify(p)?;
    Ok(Report::record(vec![
        ("point", show(p).into()),
        ("on_variety", "true".into()),
        ("Q", p.q_value().to_string().into()),
        ("order", p.order().to_string().into()),
        ("planes", planes.iter().map(|x| x.to_string()).collect::<Vec<_>>().into()),
        ("kind", if planes.is_empty() { "bumpy" } else { "flat" }.into()),
        ("tags", tags.iter().map(|t| t.token().to_string()).collect::<Vec<_>>().into()),
    ]))
}

pub fn lines(p: &DesignPoint) -> Result<Report, CliError> {
    let mut report = Report::new(&["family", "line", "parameter"]);
    for line in lines_through(p)? {
        let t = line.parametrization()?.parameter_of(p).map(|t| t.to_string());
        report.push(vec![
            line.family().token().into(),
            line.to_string().into(),
            t.map_or_else(dash, Cell::from),
        ]);
    }
    Ok(report)
}

fn status_cell(a: &Annotation) -> Cell {
    a.to_string().into()
}

pub fn enumerate(
    line: &LineDescriptor,
    bound: &Bound,
    filter: &AdmissibilityFilter,
    catalog: Option<&Catalog>,
) -> Result<Report, CliError> {
    let points = integer_points(line, bound, filter)?;
    let mut report = match catalog {
        Some(_) => Report::new(&["point", "Q", "order", "status"]),
        None => Report::new(&["point", "Q", "order"]),
    };
    let statuses = catalog.map(|c| annotate(&points, c));
    for (i, p) in points.iter().enumerate() {
        let mut row = vec![show(p).into(), p.q_value().to_string().into(), p.order().to_string().into()];
        if let Some(s) = &statuses {
            row.push(status_cell(&s[i].1));
        }
        report.push(row);
    }
    Ok(report)
}

fn reason_text(v: &Verdict) -> String {
    v.primary_reason().map_or_else(String::new, |r| r.text.clone())
}

pub fn sieve_one(p: &DesignPoint, catalog: Option<&Catalog>) -> Result<Report, CliError> {
    let verdict = sieve::sieve_point(p, catalog)?;
    let reasons: Vec<String> = verdict
        .reasons
        .iter()
        .map(|r| format!("[{}/{}] {}", r.tag.token(), r.outcome.token(), r.text))
        .collect();
    Ok(Report::record(vec![
        ("point", show(p).into()),
        ("outcome", verdict.outcome.token().into()),
        ("reason", reason_text(&verdict).into()),
        ("reasons", Cell::List(reasons)),
        ("certificate", verdict.certificate.as_ref().map_or_else(dash, |c| c.to_string().into())),
        ("catalog", verdict.catalog.map_or_else(dash, |s| s.token().into())),
    ]))
}

/// Sieves every enumerated point of the line. Points are split across
/// threads and reassembled in enumeration order.
pub fn sieve_line(
    line: &LineDescriptor,
    bound: &Bound,
    filter: &AdmissibilityFilter,
    catalog: Option<&Catalog>,
) -> Result<Report, CliError> {
    let points = integer_points(line, bound, filter)?;
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(points.len().max(1));
    let chunk = points.len().div_ceil(workers).max(1);
    let verdicts: Vec<Result<Verdict, CliError>> = std::thread::scope(|s| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|p| sieve::sieve_point(p, catalog).map_err(CliError::from))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sieve worker panicked"))
            .collect()
    });
    let mut report = Report::new(&["point", "outcome", "test", "reason", "catalog"]);
    for (p, verdict) in points.iter().zip(verdicts) {
        let verdict = verdict?;
        report.push(vec![
            show(p).into(),
            verdict.outcome.token().into(),
            verdict.primary_reason().map_or_else(dash, |r| r.tag.token().into()),
            reason_text(&verdict).into(),
            verdict.catalog.map_or_else(dash, |s| s.token().into()),
        ]);
    }
    Ok(report)
}

fn ok_or_dash<T, E>(r: Result<T, E>, f: impl FnOnce(T) -> String) -> Cell {
    r.map_or_else(|_| dash(), |x| f(x).into())
}

fn families(cmd: &FamiliesCommand) -> Result<Report, CliError> {
    match cmd {
        FamiliesCommand::Point { point } => {
            let p = parse_point(point)?;
            let tags = families::classify(&p)?;
            let witness = families::three_design_witness(&p)?;
            Ok(Report::record(vec![
                ("point", show(&p).into()),
                ("tags", tags.iter().map(|t| t.token().to_string()).collect::<Vec<_>>().into()),
                ("residual_parent", ok_or_dash(families::residual_parent(&p), |x| show(&x))),
                ("derived_parent", ok_or_dash(families::derived_parent(&p), |x| show(&x))),
                ("lambda3", ok_or_dash(families::lambda3(&p), |x| x.to_string())),
                ("three_design_line", witness.map_or_else(dash, |l| l.to_string().into())),
                ("hadamard3_derive", ok_or_dash(families::hadamard3_derive(&p), |x| show(&x))),
            ]))
        }
        FamiliesCommand::Line { line } => {
            let line = parse_line(line)?;
            let fa = match families::family_a_point(&line)? {
                FamilyAPoint::Point(p) => show(&p),
                FamilyAPoint::WholeLine => "whole line".into(),
                FamilyAPoint::None => "none".into(),
            };
            Ok(Report::record(vec![
                ("line", line.to_string().into()),
                ("family_a_point", fa.into()),
                (
                    "residual_parent_line",
                    ok_or_dash(families::parent_line_image(&line, ParentKind::Residual), |l| l.to_string()),
                ),
                (
                    "derived_parent_line",
                    ok_or_dash(families::parent_line_image(&line, ParentKind::Derived), |l| l.to_string()),
                ),
                ("three_design_line", ok_or_dash(families::three_design_line(&line), |b| b.to_string())),
            ]))
        }
        FamiliesCommand::Cb { m } => {
            let design = families::cb_design(*m)?;
            let verdict = sieve::cb_parent_check(*m)?;
            let parent = families::residual_parent(&design)
                .or_else(|_| families::derived_parent(&design))
                .map_or_else(|_| dash(), |p| show(&p).into());
            Ok(Report::record(vec![
                ("m", m.to_string().into()),
                ("design", show(&design).into()),
                ("parent", parent),
                ("parent_outcome", verdict.outcome.token().into()),
                ("reason", reason_text(&verdict).into()),
                ("certificate", verdict.certificate.as_ref().map_or_else(dash, |c| c.to_string().into())),
            ]))
        }
        FamiliesCommand::Df { kind, f, p, ks } => {
            let kind = match kind {
                DfKind::F0 => DifferenceFamilyKind::F0,
                DfKind::F1 => DifferenceFamilyKind::F1,
            };
            let df = difference_family_line(kind, parse_rational(f)?, parse_rational(p)?)?;
            if ks.is_empty() {
                return Ok(Report::record(vec![
                    ("line", df.line.to_string().into()),
                    ("two_p_integral", df.two_p_integral.to_string().into()),
                    ("f_integral", df.f_integral.to_string().into()),
                    ("flags_pass", df.flags_pass().to_string().into()),
                ]));
            }
            let mut report = Report::new(&["k", "point", "wilson", "reason"]);
            for &k in ks {
                let point = df.point_for_k(&Rational::from_integer(k.into()));
                let verdict = df.wilson_handoff(k);
                report.push(vec![
                    k.to_string().into(),
                    show(&point).into(),
                    verdict.as_ref().map_or_else(|| "non-integral".into(), |v| v.outcome.token().into()),
                    verdict.as_ref().map_or_else(dash, |v| reason_text(v).into()),
                ]);
            }
            Ok(report)
        }
    }
}

pub fn pell(count: usize) -> Report {
    let mut report = Report::new(&["j", "l", "m"]);
    for (j, (l, m)) in sieve::pell_solutions(count).into_iter().enumerate() {
        report.push(vec![j.to_string().into(), l.to_string().into(), m.to_string().into()]);
    }
    report
}

fn pseudo_rows(found: &pseudo::MultiplicityFunction) -> Report {
    let mut report = Report::new(&["subset", "c"]);
    for (subset, c) in found.entries() {
        report.push(vec![
            Cell::List(subset.iter().map(u32::to_string).collect()),
            c.to_string().into(),
        ]);
    }
    report
}

fn pseudo_verify(file: &Path) -> Result<Report, CliError> {
    let text = if file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Usage(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(file).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?
    };
    let found = mf::parse(&text)?;
    let point = found.verify().map_err(|e| CliError::Domain(format!("not a pseudo-design: {e}")))?;
    Ok(Report::record(vec![
        ("point", show(&point).into()),
        ("support", found.support_size().to_string().into()),
        ("total", found.total().to_string().into()),
    ]))
}

/// Row and column order of the plane-intersection table.
const TABLE1_ORDER: [PlaneId; 7] = [
    PlaneId::Pi1,
    PlaneId::Pi2,
    PlaneId::Pi3,
    PlaneId::Pi4,
    PlaneId::Pi5,
    PlaneId::Pi6,
    PlaneId::Pi0,
];

pub fn table1() -> Result<Report, CliError> {
    let mut report = Report::new(&["plane", "other", "intersection"]);
    for (i, &a) in TABLE1_ORDER.iter().enumerate() {
        for &b in &TABLE1_ORDER[i + 1..] {
            let flat = plane_intersection(a, b)?;
            report.push(vec![a.to_string().into(), b.to_string().into(), flat.condensed().into()]);
        }
    }
    Ok(report)
}

pub fn table4(f: &Rational, p: &Rational) -> Result<Report, CliError> {
    let mut report = Report::new(&["line", "flat_q0", "plane_q0", "flat_q", "plane_q"]);
    for line in [
        LineDescriptor::P { f: f.clone(), p: p.clone() },
        LineDescriptor::F0 { f: f.clone(), p: p.clone() },
        LineDescriptor::F1 { f: f.clone(), p: p.clone() },
    ] {
        let flats = line.flat_points()?;
        let [(z, zp), (nz, nzp)] = flats.as_slice() else {
            return Err(CliError::Internal(format!("{line}: expected two flat points")));
        };
        report.push(vec![
            line.to_string().into(),
            show(z).into(),
            zp.to_string().into(),
            show(nz).into(),
            nzp.to_string().into(),
        ]);
    }
    Ok(report)
}

/// Marks used in printed design lists.
pub fn mark(status: CatalogStatus) -> &'static str {
    match status {
        CatalogStatus::Exists => "",
        CatalogStatus::Nonexistent => "∄",
        CatalogStatus::Open => "?",
        CatalogStatus::ExistsNoSymmetricParent => "⋪",
    }
}

/// F₀(3/2,1/2) up to r = 39 with catalog marks.
pub fn f0_list(catalog: &Catalog) -> Result<Report, CliError> {
    let line = LineDescriptor::F0 {
        f: rational::frac(3, 2),
        p: rational::frac(1, 2),
    };
    let points = integer_points(&line, &Bound::r(39), &AdmissibilityFilter::default())?;
    let mut report = Report::new(&["point", "status", "mark"]);
    for (p, a) in annotate(&points, catalog) {
        let m = match &a {
            Annotation::Cataloged(s) => mark(*s),
            Annotation::Uncataloged => "",
        };
        report.push(vec![show(&p).into(), status_cell(&a), m.into()]);
    }
    Ok(report)
}
