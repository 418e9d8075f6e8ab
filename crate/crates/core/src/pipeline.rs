//! End-to-end evaluation of flag-domain cases and report rendering.
//!
//! Node indices in [`CaseSpec`] and [`Report`] are 1-based, matching the
//! command line; everything below this module is 0-based.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{classify, Classification, Containment, CrossCheck};
use crate::cycle::{neutral_fiber, parabolic_data, NeutralFiber, ParabolicData};
use crate::error::{Error, Result};
use crate::par::Parallelism;
use crate::realform::{
    grade_roots, hermitian_data, identify_real_form, CompactnessGrading, HermitianData,
};
use crate::rootsys::{DynkinType, RootId, RootSystem, DEFAULT_WEYL_CAP};
use crate::snow::{
    ampleness, lambda_max_closed_form, AmplenessInput, AmplenessOptions, AmplenessResult, Method,
};

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "bruteforce" => Ok(Method::BruteForce),
            "fast" => Ok(Method::Fast),
            _ => Err(Error::BadInput(format!("unknown method {s:?}"))),
        }
    }
}

/// One (type, marking, parabolic) triple plus evaluation options.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseSpec {
    pub dynkin: DynkinType,
    /// Noncompact simple nodes, 1-based.
    pub noncompact: Vec<usize>,
    /// Levi nodes of the parabolic, 1-based; empty for the full flag.
    pub levi: Vec<usize>,
    pub method: Method,
    pub verify: bool,
    pub cap: usize,
}

impl CaseSpec {
    pub fn new(dynkin: DynkinType, noncompact: &[usize], levi: &[usize]) -> Self {
        let norm = |v: &[usize]| {
            let mut v = v.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        CaseSpec {
            dynkin,
            noncompact: norm(noncompact),
            levi: norm(levi),
            method: Method::Auto,
            verify: false,
            cap: DEFAULT_WEYL_CAP,
        }
    }

    fn zero_based(&self, nodes: &[usize]) -> Result<Vec<usize>> {
        let rank = self.dynkin.rank();
        nodes
            .iter()
            .map(|&i| {
                if i == 0 || i > rank {
                    Err(Error::BadNode { node: i, rank })
                } else {
                    Ok(i - 1)
                }
            })
            .collect()
    }
}

/// Every intermediate object of one pipeline run.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub rs: RootSystem,
    pub grading: CompactnessGrading,
    pub hermitian: HermitianData,
    pub real_form: String,
    pub parabolic: ParabolicData,
    pub fiber: NeutralFiber,
    pub ampleness: AmplenessResult,
    pub classification: Classification,
}

/// Runs the whole pipeline. Internal checks (closed-form Λ_max, oracle
/// agreement, range of `a(E)`) surface as [`Error::InternalInconsistency`];
/// a failed classification cross-check is recorded, not raised.
pub fn analyze(spec: &CaseSpec, par: Parallelism) -> Result<Analysis> {
    let marked = spec.zero_based(&spec.noncompact)?;
    let levi = spec.zero_based(&spec.levi)?;
    let rs = RootSystem::new(spec.dynkin);
    let grading = grade_roots(&rs, &marked)?;
    let hermitian = hermitian_data(&rs, &grading)?;
    let real_form = identify_real_form(&rs, &grading, &hermitian);
    let parabolic = parabolic_data(&rs, &grading, &levi)?;
    let fiber = neutral_fiber(&parabolic, &grading)?;
    if parabolic.dim_z != parabolic.dim_c + fiber.rank() {
        return Err(Error::InternalInconsistency(
            "dim Z differs from dim C + rank E".into(),
        ));
    }
    if hermitian.lambda_max_s.len() != 1 + hermitian.center_dim {
        return Err(Error::InternalInconsistency(format!(
            "{} maximal weights in s with center of dimension {}",
            hermitian.lambda_max_s.len(),
            hermitian.center_dim
        )));
    }
    let input = AmplenessInput {
        rs: &rs,
        k_simples: hermitian.k_simples.clone(),
        fiber: fiber.clone(),
        levi_correction: parabolic.levi_correction,
        dim_c: parabolic.dim_c,
    };
    let opts = AmplenessOptions {
        method: spec.method,
        verify: spec.verify,
        cap: spec.cap,
        parallelism: par,
    };
    let amp = ampleness(&input, &opts)?;
    let closed = lambda_max_closed_form(&hermitian, &parabolic);
    if closed != amp.lambda_max {
        return Err(Error::InternalInconsistency(format!(
            "Λ_max(E0) {:?} differs from the closed form {:?}",
            amp.lambda_max, closed
        )));
    }
    let classification = classify(&amp, &parabolic, &grading, &hermitian);
    Ok(Analysis {
        rs,
        grading,
        hermitian,
        real_form,
        parabolic,
        fiber,
        ampleness: amp,
        classification,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub series: String,
    pub rank: usize,
    pub noncompact: Vec<usize>,
    pub levi: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormInfo {
    pub name: String,
    pub k_type: String,
    pub center_dim: usize,
    pub hermitian: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    #[serde(rename = "dim_Z")]
    pub dim_z: usize,
    #[serde(rename = "dim_C")]
    pub dim_c: usize,
    #[serde(rename = "rank_E")]
    pub rank_e: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weights {
    #[serde(rename = "E0")]
    pub e0: Vec<Vec<i32>>,
    pub lambda_max: Vec<Vec<i32>>,
    /// Simple roots of 𝔨; witness words index into this list (1-based).
    pub k_simples: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnowInfo {
    pub w0_max_length: usize,
    pub witness_word: Vec<usize>,
    pub witness_mu: Vec<i32>,
    pub witness_nu: Vec<i32>,
    pub levi_correction: usize,
    pub ampleness: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationInfo {
    pub kind: String,
    pub concavity_degree: usize,
    pub cross_check: String,
    /// `s_minus` or `s_plus` in the product case.
    pub contained_in: Option<String>,
}

/// Result of one case, as emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputEcho,
    /// `ok`, or the error that stopped the pipeline.
    pub status: String,
    pub realform: Option<RealFormInfo>,
    pub dims: Option<Dims>,
    pub weights: Option<Weights>,
    pub snow: Option<SnowInfo>,
    pub classification: Option<ClassificationInfo>,
}

impl Report {
    fn echo(spec: &CaseSpec) -> InputEcho {
        InputEcho {
            series: spec.dynkin.series().letter().to_string(),
            rank: spec.dynkin.rank(),
            noncompact: spec.noncompact.clone(),
            levi: spec.levi.clone(),
        }
    }

    pub fn from_analysis(spec: &CaseSpec, a: &Analysis) -> Report {
        let coords = |ids: &[RootId]| -> Vec<Vec<i32>> {
            ids.iter().map(|&r| a.rs.root(r).0.clone()).collect()
        };
        let amp = &a.ampleness;
        Report {
            input: Self::echo(spec),
            status: "ok".into(),
            realform: Some(RealFormInfo {
                name: a.real_form.clone(),
                k_type: a.hermitian.k_type.to_string(),
                center_dim: a.hermitian.center_dim,
                hermitian: a.hermitian.is_hermitian(),
            }),
            dims: Some(Dims {
                dim_z: a.parabolic.dim_z,
                dim_c: a.parabolic.dim_c,
                rank_e: a.fiber.rank(),
            }),
            weights: Some(Weights {
                e0: coords(&a.fiber.weights),
                lambda_max: coords(&amp.lambda_max),
                k_simples: coords(&a.hermitian.k_simples),
            }),
            snow: Some(SnowInfo {
                w0_max_length: amp.max_w0_length,
                witness_word: amp.witness.word().iter().map(|&i| i as usize + 1).collect(),
                witness_mu: a.rs.root(amp.mu).0.clone(),
                witness_nu: a.rs.root(amp.nu).0.clone(),
                levi_correction: a.parabolic.levi_correction,
                ampleness: amp.ampleness,
            }),
            classification: Some(ClassificationInfo {
                kind: a.classification.kind.to_string(),
                concavity_degree: a.classification.concavity_degree,
                cross_check: a.classification.cross_check.to_string(),
                contained_in: a.classification.containment.map(|c| {
                    match c {
                        Containment::SMinus => "s_minus",
                        Containment::SPlus => "s_plus",
                    }
                    .to_string()
                }),
            }),
        }
    }

    pub fn from_error(spec: &CaseSpec, err: &Error) -> Report {
        let status = match err.exit_code() {
            2 => format!("degenerate: {err}"),
            3 => format!("internal: {err}"),
            _ => format!("error: {err}"),
        };
        Report {
            input: Self::echo(spec),
            status,
            realform: None,
            dims: None,
            weights: None,
            snow: None,
            classification: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }

    /// Exit code this report warrants on its own.
    pub fn exit_code(&self) -> i32 {
        if self.status.starts_with("degenerate") {
            return 2;
        }
        if self.status.starts_with("internal") {
            return 3;
        }
        if !self.is_ok() {
            return 1;
        }
        match &self.classification {
            Some(c) if c.cross_check == CrossCheck::Failed.to_string() => 3,
            _ => 0,
        }
    }
}

/// Runs one case end to end.
pub fn run_compute(spec: &CaseSpec, par: Parallelism) -> Result<Report> {
    let a = analyze(spec, par)?;
    Ok(Report::from_analysis(spec, &a))
}

#[derive(Debug, Clone, Copy)]
pub struct TableOptions {
    pub method: Method,
    pub verify: bool,
    pub cap: usize,
    /// Keep one representative per diagram-automorphism class.
    pub dedupe: bool,
    pub parallelism: Parallelism,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            method: Method::Auto,
            verify: false,
            cap: DEFAULT_WEYL_CAP,
            dedupe: false,
            parallelism: Parallelism::default(),
        }
    }
}

/// All subsets of `1..=n` as sorted lists, in lexicographic order.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..(1 << n))
        .map(|mask| (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    all.sort();
    all
}

/// The (marking, levi) pairs a table sweep visits, in output order.
pub fn table_cases(dynkin: DynkinType, dedupe: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = dynkin.rank();
    let subs = subsets(n);
    let autos = dynkin.diagram_automorphisms();
    let image = |sigma: &[usize], v: &[usize]| -> Vec<usize> {
        let mut out: Vec<usize> = v.iter().map(|&i| sigma[i - 1] + 1).collect();
        out.sort_unstable();
        out
    };
    let mut cases = Vec::new();
    for m in subs.iter().filter(|s| !s.is_empty()) {
        for l in subs.iter().filter(|s| s.len() < n) {
            if dedupe {
                let canonical = autos
                    .iter()
                    .map(|s| (image(s, m), image(s, l)))
                    .min()
                    .expect("identity automorphism");
                if canonical != (m.clone(), l.clone()) {
                    continue;
                }
            }
            cases.push((m.clone(), l.clone()));
        }
    }
    cases
}

/// Sweeps every nonempty marking against every proper parabolic.
/// Cases run concurrently under `Parallelism::Parallel`; rows come back in
/// enumeration order either way.
pub fn run_table(dynkin: DynkinType, opts: &TableOptions) -> Vec<Report> {
    let specs: Vec<CaseSpec> = table_cases(dynkin, opts.dedupe)
        .into_iter()
        .map(|(m, l)| CaseSpec {
            method: opts.method,
            verify: opts.verify,
            cap: opts.cap,
            ..CaseSpec::new(dynkin, &m, &l)
        })
        .collect();
    // inner scans stay serial; the sweep is the unit of parallel work
    opts.parallelism
        .map(&specs, |s| match run_compute(s, Parallelism::Serial) {
            Ok(r) => r,
            Err(e) => Report::from_error(s, &e),
        })
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Tsv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "tsv" => Ok(Format::Tsv),
            "json" => Ok(Format::Json),
            _ => Err(Error::BadInput(format!("unknown format {s:?}"))),
        }
    }
}

fn nodes(v: &[usize]) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn vectors(v: &[Vec<i32>]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|w| {
            let c: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!("({})", c.join(","))
        })
        .collect();
    format!("{{{}}}", parts.join(" "))
}

const COLUMNS: [&str; 15] = [
    "type",
    "noncompact",
    "levi",
    "real_form",
    "k_type",
    "dim_Z",
    "dim_C",
    "rank_E",
    "w0_max",
    "levi_corr",
    "a(E)",
    "kind",
    "degree",
    "cross_check",
    "status",
];

fn row_cells(r: &Report) -> Vec<String> {
    let mut cells = vec![
        format!("{}{}", r.input.series, r.input.rank),
        nodes(&r.input.noncompact),
        nodes(&r.input.levi),
    ];
    let dash = || "-".to_string();
    cells.push(r.realform.as_ref().map_or_else(dash, |f| f.name.clone()));
    cells.push(r.realform.as_ref().map_or_else(dash, |f| f.k_type.clone()));
    match &r.dims {
        Some(d) => cells.extend([d.dim_z, d.dim_c, d.rank_e].map(|x| x.to_string())),
        None => cells.extend([dash(), dash(), dash()]),
    }
    match &r.snow {
        Some(s) => {
            cells.extend([s.w0_max_length, s.levi_correction, s.ampleness].map(|x| x.to_string()))
        }
        None => cells.extend([dash(), dash(), dash()]),
    }
    match &r.classification {
        Some(c) => cells.extend([
            c.kind.clone(),
            c.concavity_degree.to_string(),
            c.cross_check.clone(),
        ]),
        None => cells.extend([dash(), dash(), dash()]),
    }
    cells.push(r.status.clone());
    cells
}

/// Renders a table sweep.
pub fn render_table(rows: &[Report], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => {
            let mut s = COLUMNS.join("\t");
            s.push('\n');
            for r in rows {
                s.push_str(&row_cells(r).join("\t"));
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = rows.iter().map(row_cells).collect();
            let widths: Vec<usize> = (0..COLUMNS.len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r[c].chars().count())
                        .chain([COLUMNS[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |row: &[String]| -> String {
                let padded: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(x, &w)| format!("{x}{}", " ".repeat(w - x.chars().count())))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let header: Vec<String> = COLUMNS.iter().map(|s| s.to_string()).collect();
            let mut s = line(&header);
            s.push('\n');
            for r in &cells {
                s.push_str(&line(r));
                s.push('\n');
            }
            s
        }
    }
}

/// Renders a single case.
pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Tsv => render_table(std::slice::from_ref(r), Format::Tsv),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "case            {}{}  noncompact {}  levi {}",
                r.input.series,
                r.input.rank,
                nodes(&r.input.noncompact),
                nodes(&r.input.levi)
            );
            let _ = writeln!(s, "status          {}", r.status);
            if let Some(f) = &r.realform {
                let _ = writeln!(s, "real form       {}", f.name);
                let _ = writeln!(
                    s,
                    "k               {}  (center dim {}, {})",
                    f.k_type,
                    f.center_dim,
                    if f.hermitian {
                        "Hermitian"
                    } else {
                        "non-Hermitian"
                    }
                );
            }
            if let Some(d) = &r.dims {
                let _ = writeln!(
                    s,
                    "dimensions      dim Z = {}, dim C = {}, rank E = {}",
                    d.dim_z, d.dim_c, d.rank_e
                );
            }
            if let Some(w) = &r.weights {
                let _ = writeln!(s, "Λ(E0)           {}", vectors(&w.e0));
                let _ = writeln!(s, "Λ_max(E0)       {}", vectors(&w.lambda_max));
                let _ = writeln!(s, "simple roots k  {}", vectors(&w.k_simples));
            }
            if let Some(sn) = &r.snow {
                let _ = writeln!(
                    s,
                    "W0              max length {}, witness word [{}], μ = {}, ν = {}",
                    sn.w0_max_length,
                    sn.witness_word
                        .iter()
                        .map(|i| i.to_string())
                        .collect::<Vec<_>>()
                        .join(" "),
                    vectors(std::slice::from_ref(&sn.witness_mu)),
                    vectors(std::slice::from_ref(&sn.witness_nu)),
                );
                let _ = writeln!(s, "levi correction {}", sn.levi_correction);
                let _ = writeln!(s, "a(E)            {}", sn.ampleness);
            }
            if let Some(c) = &r.classification {
                let _ = writeln!(
                    s,
                    "classification  {} (concavity degree {}), cross-check {}",
                    c.kind, c.concavity_degree, c.cross_check
                );
            }
            s
        }
    }
}
