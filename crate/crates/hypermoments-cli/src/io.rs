//! Input parsing and output shaping: the JSON and CSV formats the
//! commands speak, plus the mapping from failures to exit codes.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use hypermoments::counting::CountError;
use hypermoments::families::{AttachSite, Attachment, FamilyError, FamilyKind, FamilySpec};
use hypermoments::moments::{MomentEntry, MomentError, MomentMethod};
use hypermoments::order::OrderError;
use hypermoments::UniformHypergraph;

/// What went wrong, bucketed by exit status: bad input (2), an
/// exhausted cost guard (3), or a verification run that finished
/// cleanly without confirming the claim (1).
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Guard(String),
    Unverified,
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Unverified => 1,
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Guard(msg) => f.write_str(msg),
            CliError::Unverified => f.write_str("verification did not confirm the claim"),
        }
    }
}

pub fn input_error(context: &str, detail: impl fmt::Display) -> CliError {
    CliError::Input(format!("{context}: {detail}"))
}

pub fn from_family(context: &str, e: FamilyError) -> CliError {
    match e {
        FamilyError::Guard(g) => CliError::Guard(g.to_string()),
        other => input_error(context, other),
    }
}

pub fn from_moment(context: &str, e: MomentError) -> CliError {
    match e {
        MomentError::Guard(g) => CliError::Guard(g.to_string()),
        other => input_error(context, other),
    }
}

pub fn from_count(context: &str, e: CountError) -> CliError {
    match e {
        CountError::Pattern(FamilyError::Guard(g)) => CliError::Guard(g.to_string()),
        other => input_error(context, other),
    }
}

pub fn from_order(context: &str, e: OrderError) -> CliError {
    match e {
        OrderError::Moment(inner) => from_moment(context, inner),
        OrderError::Family(inner) => from_family(context, inner),
        OrderError::Count(inner) => from_count(context, inner),
        other => input_error(context, other),
    }
}

/// The hypergraph interchange format: `{"k":…,"n":…,"edges":[[…],…]}`
/// with vertex ids in `0..n` and every edge of exactly k distinct ids.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphDto {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&UniformHypergraph> for HypergraphDto {
    fn from(h: &UniformHypergraph) -> Self {
        HypergraphDto {
            k: h.k(),
            n: h.n(),
            edges: h.edges().to_vec(),
        }
    }
}

pub fn parse_hypergraph(source: &str, text: &str) -> Result<UniformHypergraph, CliError> {
    let dto: HypergraphDto =
        serde_json::from_str(text).map_err(|e| input_error(source, e))?;
    UniformHypergraph::new(dto.k, dto.n, dto.edges).map_err(|e| input_error(source, e))
}

pub fn read_hypergraph(path: &Path) -> Result<UniformHypergraph, CliError> {
    let source = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| input_error(&source, e))?;
    parse_hypergraph(&source, &text)
}

pub fn emit_hypergraph(h: &UniformHypergraph) -> String {
    pretty(&HypergraphDto::from(h))
}

/// Stable pretty JSON with a trailing newline; key order follows the
/// struct declarations, so output is byte-identical across runs.
pub fn pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output types serialize");
    text.push('\n');
    text
}

/// Family description, e.g. `{"kind":"B","i":3,"k":3,"p":3,"q":3,"l":0}`
/// optionally with `"attach":[{"site":4,"path_len":2}]`. A site is a
/// vertex id or the string `"max-degree"`; `pendant_edges` hangs that
/// many single edges instead of one path.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpecDto {
    kind: String,
    k: usize,
    #[serde(default)]
    i: Option<usize>,
    #[serde(default)]
    p: Option<usize>,
    #[serde(default)]
    q: Option<usize>,
    #[serde(default)]
    l: Option<usize>,
    #[serde(default)]
    t: Option<usize>,
    #[serde(default)]
    attach: Vec<AttachDto>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AttachDto {
    site: SiteDto,
    #[serde(default)]
    path_len: Option<usize>,
    #[serde(default)]
    pendant_edges: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SiteDto {
    Vertex(usize),
    Named(String),
}

fn need(
    source: &str,
    kind: &str,
    field: &str,
    value: Option<usize>,
) -> Result<usize, CliError> {
    value.ok_or_else(|| {
        input_error(source, format!("family kind {kind:?} needs field {field:?}"))
    })
}

impl FamilySpecDto {
    pub fn into_spec(self, source: &str) -> Result<FamilySpec, CliError> {
        let kind = match self.kind.as_str() {
            "path" => FamilyKind::Path {
                q: need(source, "path", "q", self.q)?,
            },
            "cycle" => FamilyKind::Cycle {
                q: need(source, "cycle", "q", self.q)?,
            },
            "star" => FamilyKind::Star {
                q: need(source, "star", "q", self.q)?,
            },
            "B" | "b" => FamilyKind::B {
                i: need(source, "B", "i", self.i)?,
                p: need(source, "B", "p", self.p)?,
                l: self.l.unwrap_or(0),
                q: need(source, "B", "q", self.q)?,
            },
            "C" | "c" => FamilyKind::C {
                i: need(source, "C", "i", self.i)?,
                p: need(source, "C", "p", self.p)?,
                q: need(source, "C", "q", self.q)?,
                l: need(source, "C", "l", self.l)?,
            },
            "Q" | "q" => FamilyKind::Q {
                t: need(source, "Q", "t", self.t)?,
            },
            "W" | "w" => FamilyKind::W {
                t: need(source, "W", "t", self.t)?,
            },
            other => {
                return Err(input_error(
                    source,
                    format!("unknown family kind {other:?} (use path, cycle, star, B, C, Q, or W)"),
                ))
            }
        };
        let mut attachments = Vec::new();
        for (idx, attach) in self.attach.into_iter().enumerate() {
            let site = match attach.site {
                SiteDto::Vertex(v) => AttachSite::Vertex(v),
                SiteDto::Named(name) if name == "max-degree" => AttachSite::MaxDegree,
                SiteDto::Named(name) => {
                    return Err(input_error(
                        source,
                        format!(
                            "attachment {idx}: unknown site {name:?} (use a vertex id or \"max-degree\")"
                        ),
                    ))
                }
            };
            match (attach.path_len, attach.pendant_edges) {
                (Some(len), None) => attachments.push(Attachment { site, path_len: len }),
                (None, Some(count)) => {
                    for _ in 0..count {
                        attachments.push(Attachment {
                            site: site.clone(),
                            path_len: 1,
                        });
                    }
                }
                _ => {
                    return Err(input_error(
                        source,
                        format!(
                            "attachment {idx}: give exactly one of \"path_len\" or \"pendant_edges\""
                        ),
                    ))
                }
            }
        }
        Ok(FamilySpec {
            kind,
            k: self.k,
            attachments,
        })
    }
}

pub fn parse_family(source: &str, text: &str) -> Result<FamilySpec, CliError> {
    let dto: FamilySpecDto =
        serde_json::from_str(text).map_err(|e| input_error(source, e))?;
    dto.into_spec(source)
}

/// One row of a moment table; numerator and denominator are decimal
/// strings because the exact values outgrow machine integers.
#[derive(Debug, Serialize)]
pub struct MomentRow {
    pub d: usize,
    pub numerator: String,
    pub denominator: String,
    pub method: &'static str,
}

pub fn moment_rows(entries: &[MomentEntry]) -> Vec<MomentRow> {
    entries
        .iter()
        .map(|e| MomentRow {
            d: e.d,
            numerator: e.value.numer().to_string(),
            denominator: e.value.denom().to_string(),
            method: match e.method {
                MomentMethod::Closed => "closed",
                MomentMethod::Enumerated => "enumerated",
            },
        })
        .collect()
}

pub fn moments_csv(rows: &[MomentRow]) -> String {
    let mut out = String::from("d,numerator,denominator,method\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            row.d, row.numerator, row.denominator, row.method
        ));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct MomentsDto {
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub d_max: usize,
    pub moments: Vec<MomentRow>,
}

#[derive(Debug, Serialize)]
pub struct CountRow {
    pub pattern: String,
    pub t: usize,
    pub count: u64,
}

pub fn counts_csv(rows: &[CountRow]) -> String {
    let mut out = String::from("pattern,t,count\n");
    for row in rows {
        out.push_str(&format!("{},{},{}\n", row.pattern, row.t, row.count));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct CompareDto {
    pub relation: &'static str,
    pub first_diff: Option<usize>,
    pub d_max: usize,
}

#[derive(Debug, Serialize)]
pub struct ClassDto {
    pub canonical_form: String,
    pub girth: Option<usize>,
    pub hypergraph: HypergraphDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moments: Option<Vec<MomentRow>>,
}

#[derive(Debug, Serialize)]
pub struct EnumerateDto {
    pub k: usize,
    pub m: usize,
    pub girth: Option<usize>,
    pub class_count: usize,
    pub classes: Vec<ClassDto>,
}

pub fn classes_csv(classes: &[ClassDto], m: usize) -> String {
    let mut out = String::from("index,n,m,girth,canonical_form\n");
    for (index, class) in classes.iter().enumerate() {
        let girth = class
            .girth
            .map(|g| g.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            index, class.hypergraph.n, m, girth, class.canonical_form
        ));
    }
    out
}

#[derive(Debug, Serialize)]
pub struct VerifyParams {
    pub k: usize,
    pub m: usize,
    pub girth: usize,
    pub d_max: usize,
}

#[derive(Debug, Serialize)]
pub struct MomentTableDto {
    pub canonical_form: String,
    pub rows: Vec<MomentRow>,
}

#[derive(Debug, Serialize)]
pub struct CountCheckDto {
    pub instance: String,
    pub pattern: String,
    pub expected: u64,
    pub found: u64,
    pub matches: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyDto {
    pub theorem: String,
    pub params: VerifyParams,
    pub claimed: bool,
    pub class_size: usize,
    pub status: String,
    pub expected_canonical_form: Option<String>,
    pub found_canonical_form: Option<String>,
    pub survivors: Vec<String>,
    pub first_diff_index: Option<usize>,
    pub survivor_trace: Vec<(usize, usize)>,
    pub moment_tables: Vec<MomentTableDto>,
    pub count_checks: Vec<CountCheckDto>,
    pub count_checks_ok: bool,
}
