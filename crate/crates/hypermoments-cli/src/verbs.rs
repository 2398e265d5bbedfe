//! One function per command verb. Each returns the text it printed to
//! stdout only through side effects; errors carry the exit status.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use rayon::prelude::*;

use hypermoments::counting::{count_cycles, count_paths, count_pattern, count_q, count_w};
use hypermoments::families::{enumerate_linear_bicyclic, power_star};
use hypermoments::moments::moment_sequence;
use hypermoments::order::{s_compare, verify_theorem, ExtremalClaim, SRelation, VerifyReport, VerifyStatus};
use hypermoments::{canonical_form, CostGuard, UniformHypergraph};

use crate::io::{
    classes_csv, counts_csv, emit_hypergraph, from_count, from_family, from_moment, from_order,
    input_error, moment_rows, moments_csv, parse_family, pretty, read_hypergraph, ClassDto,
    CliError, CompareDto, CountCheckDto, CountRow, EnumerateDto, MomentTableDto, MomentsDto,
    VerifyDto, VerifyParams,
};

/// Output encoding for the tabular verbs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Cost-guard budget: explicit flag, then the HYPERMOMENTS_MAX_UNITS
/// environment variable, then the built-in default.
fn resolve_limit(max_units: Option<u64>) -> Result<u64, CliError> {
    if let Some(limit) = max_units {
        return Ok(limit);
    }
    match std::env::var("HYPERMOMENTS_MAX_UNITS") {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Input(format!(
                "HYPERMOMENTS_MAX_UNITS must be a non-negative integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(CostGuard::DEFAULT_LIMIT),
        Err(e) => Err(CliError::Input(format!("HYPERMOMENTS_MAX_UNITS: {e}"))),
    }
}

fn log_guard(guard: &CostGuard) {
    eprintln!("cost guard: {} of {} units used", guard.used(), guard.limit());
}

fn host_from(
    input: Option<PathBuf>,
    family: Option<String>,
) -> Result<UniformHypergraph, CliError> {
    match (input, family) {
        (Some(path), None) => read_hypergraph(&path),
        (None, Some(text)) => parse_family("--family", &text)?
            .build()
            .map_err(|e| from_family("--family", e)),
        _ => Err(CliError::Input(
            "give exactly one of --in or --family".into(),
        )),
    }
}

pub fn build(family: String) -> Result<(), CliError> {
    let spec = parse_family("--family", &family)?;
    let h = spec.build().map_err(|e| from_family("--family", e))?;
    print!("{}", emit_hypergraph(&h));
    Ok(())
}

pub fn moments(
    input: Option<PathBuf>,
    family: Option<String>,
    d_max: usize,
    format: Format,
    max_units: Option<u64>,
) -> Result<(), CliError> {
    let h = host_from(input, family)?;
    let mut guard = CostGuard::new(resolve_limit(max_units)?);
    let entries = moment_sequence(&h, d_max, &mut guard).map_err(|e| from_moment("moments", e))?;
    let rows = moment_rows(&entries);
    match format {
        Format::Csv => print!("{}", moments_csv(&rows)),
        Format::Json => print!(
            "{}",
            pretty(&MomentsDto {
                k: h.k(),
                n: h.n(),
                m: h.m(),
                d_max,
                moments: rows,
            })
        ),
    }
    log_guard(&guard);
    Ok(())
}

fn counted_pattern(
    h: &UniformHypergraph,
    selector: &str,
) -> Result<CountRow, CliError> {
    let context = format!("--pattern {selector:?}");
    let (name, t_text) = selector.split_once(':').ok_or_else(|| {
        input_error(&context, "expected NAME:T, e.g. path:3 or cycle:4")
    })?;
    let t: usize = t_text
        .parse()
        .map_err(|_| input_error(&context, "T must be a non-negative integer"))?;
    let count = match name {
        "path" => count_paths(h, t),
        "cycle" => count_cycles(h, t),
        "star" => power_star(t, h.k())
            .map_err(hypermoments::counting::CountError::Pattern)
            .and_then(|pattern| count_pattern(h, &pattern)),
        "q" => count_q(h, t),
        "w" => count_w(h, t),
        other => {
            return Err(input_error(
                &context,
                format!("unknown pattern {other:?} (use path, cycle, star, q, or w)"),
            ))
        }
    }
    .map_err(|e| from_count(&context, e))?;
    Ok(CountRow {
        pattern: name.to_string(),
        t,
        count,
    })
}

pub fn count(
    input: PathBuf,
    selectors: Vec<String>,
    pattern_files: Vec<PathBuf>,
    format: Format,
) -> Result<(), CliError> {
    let h = read_hypergraph(&input)?;
    let selectors = if selectors.is_empty() && pattern_files.is_empty() {
        ["path:1", "path:2", "path:3", "star:3", "cycle:3"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        selectors
    };
    let mut rows = Vec::new();
    for selector in &selectors {
        rows.push(counted_pattern(&h, selector)?);
    }
    for path in &pattern_files {
        rows.push(counted_file_pattern(&h, path)?);
    }
    match format {
        Format::Csv => print!("{}", counts_csv(&rows)),
        Format::Json => print!("{}", pretty(&rows)),
    }
    Ok(())
}

fn counted_file_pattern(h: &UniformHypergraph, path: &Path) -> Result<CountRow, CliError> {
    let pattern = read_hypergraph(path)?;
    let count = count_pattern(h, &pattern)
        .map_err(|e| from_count(&path.display().to_string(), e))?;
    Ok(CountRow {
        pattern: path.display().to_string(),
        t: pattern.m(),
        count,
    })
}

pub fn compare(
    inputs: Vec<PathBuf>,
    d_max: usize,
    max_units: Option<u64>,
) -> Result<(), CliError> {
    let [first, second]: [PathBuf; 2] = inputs
        .try_into()
        .map_err(|_| CliError::Input("give --in exactly twice".into()))?;
    let a = read_hypergraph(&first)?;
    let b = read_hypergraph(&second)?;
    let mut guard = CostGuard::new(resolve_limit(max_units)?);
    let outcome = s_compare(&a, &b, d_max, &mut guard).map_err(|e| from_order("compare", e))?;
    let dto = CompareDto {
        relation: match outcome.relation {
            SRelation::Precedes => "precedes",
            SRelation::Succeeds => "succeeds",
            SRelation::EqualUpTo => "equal_up_to_d_max",
        },
        first_diff: outcome.first_difference,
        d_max: outcome.d_max,
    };
    print!("{}", pretty(&dto));
    log_guard(&guard);
    Ok(())
}

pub fn enumerate(
    k: usize,
    m: usize,
    girth: Option<usize>,
    d_max: Option<usize>,
    format: Format,
    threads: usize,
    max_units: Option<u64>,
) -> Result<(), CliError> {
    if threads == 0 {
        return Err(CliError::Input("--threads must be at least 1".into()));
    }
    if d_max.is_some() && format == Format::Csv {
        return Err(CliError::Input(
            "moment tables need --format json; the CSV schema has no moment columns".into(),
        ));
    }
    let limit = resolve_limit(max_units)?;
    let mut guard = CostGuard::new(limit);
    let members =
        enumerate_linear_bicyclic(k, m, girth, &mut guard).map_err(|e| from_family("enumerate", e))?;
    let mut used = guard.used();

    // Each member gets its own guard with the full budget, so the rows
    // (and any guard trip) cannot depend on evaluation order or on the
    // thread count.
    let tables: Vec<Option<Vec<crate::io::MomentRow>>> = match d_max {
        None => members.iter().map(|_| None).collect(),
        Some(d_max) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Input(format!("--threads: {e}")))?;
            let results: Vec<Result<_, _>> = pool.install(|| {
                members
                    .par_iter()
                    .map(|h| {
                        let mut local = CostGuard::new(limit);
                        moment_sequence(h, d_max, &mut local)
                            .map(|entries| (moment_rows(&entries), local.used()))
                    })
                    .collect()
            });
            let mut tables = Vec::with_capacity(results.len());
            for result in results {
                let (rows, local_used) = result.map_err(|e| from_moment("enumerate", e))?;
                used += local_used;
                tables.push(Some(rows));
            }
            tables
        }
    };

    let classes: Vec<ClassDto> = members
        .iter()
        .zip(tables)
        .map(|(h, moments)| {
            Ok(ClassDto {
                canonical_form: canonical_form(h).to_string(),
                girth: h.girth().map_err(|e| input_error("enumerate", e))?,
                hypergraph: h.into(),
                moments,
            })
        })
        .collect::<Result<_, CliError>>()?;
    match format {
        Format::Csv => print!("{}", classes_csv(&classes, m)),
        Format::Json => print!(
            "{}",
            pretty(&EnumerateDto {
                k,
                m,
                girth,
                class_count: classes.len(),
                classes,
            })
        ),
    }
    eprintln!("cost guard: {used} units used (budget {limit} per computation)");
    Ok(())
}

pub fn verify(
    theorem: String,
    k: usize,
    m: usize,
    girth: usize,
    d_max: usize,
    max_units: Option<u64>,
) -> Result<(), CliError> {
    let claim = ExtremalClaim::from_token(&theorem).ok_or_else(|| {
        CliError::Input(format!("unknown theorem token {theorem:?} (use T1, T2, T3, or T4)"))
    })?;
    let mut guard = CostGuard::new(resolve_limit(max_units)?);
    let report =
        verify_theorem(claim, k, m, girth, d_max, &mut guard).map_err(|e| from_order("verify", e))?;
    print!("{}", pretty(&verify_dto(&report)));
    log_guard(&guard);
    let checks_ok = report.count_checks.iter().all(|c| c.matches());
    if report.status == VerifyStatus::Match && checks_ok {
        Ok(())
    } else {
        Err(CliError::Unverified)
    }
}

fn verify_dto(report: &VerifyReport) -> VerifyDto {
    let survivors: Vec<String> = report
        .found
        .iter()
        .map(|h| canonical_form(h).to_string())
        .collect();
    VerifyDto {
        theorem: report.claim.token().to_string(),
        params: VerifyParams {
            k: report.k,
            m: report.m,
            girth: report.girth,
            d_max: report.d_max,
        },
        claimed: report.claimed,
        class_size: report.class_size,
        status: report.status.to_string(),
        expected_canonical_form: report
            .expected
            .as_ref()
            .map(|h| canonical_form(h).to_string()),
        found_canonical_form: match survivors.as_slice() {
            [only] => Some(only.clone()),
            _ => None,
        },
        survivors,
        first_diff_index: report.resolved_at,
        survivor_trace: report.survivor_trace.clone(),
        moment_tables: report
            .found
            .iter()
            .zip(&report.found_tables)
            .map(|(h, entries)| MomentTableDto {
                canonical_form: canonical_form(h).to_string(),
                rows: moment_rows(entries),
            })
            .collect(),
        count_checks: report
            .count_checks
            .iter()
            .map(|c| CountCheckDto {
                instance: c.instance.clone(),
                pattern: c.pattern.clone(),
                expected: c.expected,
                found: c.found,
                matches: c.matches(),
            })
            .collect(),
        count_checks_ok: checks_ok_for(report),
    }
}

fn checks_ok_for(report: &VerifyReport) -> bool {
    report.count_checks.iter().all(|c| c.matches())
}
