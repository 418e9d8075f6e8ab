use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use flagcycle::pipeline::{
    render_report, render_table, run_compute, run_table, CaseSpec, Format, TableOptions,
};
use flagcycle::rootsys::{DynkinType, DEFAULT_WEYL_CAP};
use flagcycle::snow::Method;
use flagcycle::{Error, Parallelism};

#[derive(Parser)]
#[command(
    name = "flagcycle",
    version,
    about = "Ampleness of the normal bundle of the base cycle in a flag domain"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one (type, marking, parabolic) case.
    Compute(CaseArgs),
    /// Sweep all markings and proper parabolics of a type.
    Table(TableArgs),
}

#[derive(Args, Default)]
struct CommonArgs {
    /// Dynkin type, e.g. A2, B3, G2.
    #[arg(long = "type")]
    dynkin: Option<String>,
    /// Method for the W0 maximum: auto, bruteforce or fast.
    #[arg(long)]
    method: Option<String>,
    /// Run both W0 routes and require agreement.
    #[arg(long)]
    verify: bool,
    /// Output format: text, tsv or json.
    #[arg(long)]
    format: Option<String>,
    /// Cap on the number of Weyl group elements a scan may visit.
    #[arg(long = "max-weyl")]
    max_weyl: Option<usize>,
    /// Run on the calling thread only.
    #[arg(long)]
    serial: bool,
    /// TOML case file; flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct CaseArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Noncompact simple nodes, 1-based, comma separated.
    #[arg(long, value_delimiter = ',')]
    noncompact: Option<Vec<usize>>,
    /// Levi nodes of the parabolic, 1-based; omit for the full flag.
    #[arg(long, value_delimiter = ',')]
    levi: Option<Vec<usize>>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Keep one case per Dynkin diagram automorphism class.
    #[arg(long)]
    dedupe: bool,
}

/// Case file schema; field names mirror the flags.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct ConfigFile {
    #[serde(rename = "type")]
    dynkin: Option<String>,
    noncompact: Option<Vec<usize>>,
    levi: Option<Vec<usize>>,
    method: Option<String>,
    verify: Option<bool>,
    format: Option<String>,
    max_weyl: Option<usize>,
    dedupe: Option<bool>,
    serial: Option<bool>,
}

struct Resolved {
    dynkin: DynkinType,
    method: Method,
    verify: bool,
    format: Format,
    cap: usize,
    parallelism: Parallelism,
}

fn load_config(path: &Option<PathBuf>) -> Result<ConfigFile, Error> {
    let Some(path) = path else {
        return Ok(ConfigFile::default());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::BadInput(format!("{}: {e}", path.display())))
}

fn resolve(common: &CommonArgs, cfg: &ConfigFile) -> Result<Resolved, Error> {
    let dynkin = common
        .dynkin
        .clone()
        .or_else(|| cfg.dynkin.clone())
        .ok_or_else(|| Error::BadInput("--type is required".into()))?
        .parse()?;
    let method = match common.method.as_ref().or(cfg.method.as_ref()) {
        Some(m) => m.parse()?,
        None => Method::Auto,
    };
    let format = match common.format.as_ref().or(cfg.format.as_ref()) {
        Some(f) => f.parse()?,
        None => Format::Text,
    };
    let serial = common.serial || cfg.serial.unwrap_or(false);
    Ok(Resolved {
        dynkin,
        method,
        verify: common.verify || cfg.verify.unwrap_or(false),
        format,
        cap: common.max_weyl.or(cfg.max_weyl).unwrap_or(DEFAULT_WEYL_CAP),
        parallelism: if serial {
            Parallelism::Serial
        } else {
            Parallelism::Parallel
        },
    })
}

fn compute(args: CaseArgs) -> Result<i32, Error> {
    let cfg = load_config(&args.common.config)?;
    let r = resolve(&args.common, &cfg)?;
    let noncompact = args.noncompact.or(cfg.noncompact).unwrap_or_default();
    let levi = args.levi.or(cfg.levi).unwrap_or_default();
    let spec = CaseSpec {
        method: r.method,
        verify: r.verify,
        cap: r.cap,
        ..CaseSpec::new(r.dynkin, &noncompact, &levi)
    };
    let report = run_compute(&spec, r.parallelism)?;
    print!("{}", render_report(&report, r.format));
    Ok(report.exit_code())
}

fn table(args: TableArgs) -> Result<i32, Error> {
    let cfg = load_config(&args.common.config)?;
    let r = resolve(&args.common, &cfg)?;
    let opts = TableOptions {
        method: r.method,
        verify: r.verify,
        cap: r.cap,
        dedupe: args.dedupe || cfg.dedupe.unwrap_or(false),
        parallelism: r.parallelism,
    };
    let rows = run_table(r.dynkin, &opts);
    print!("{}", render_table(&rows, r.format));
    // degenerate rows are data in a sweep; only inconsistencies fail it
    Ok(rows
        .iter()
        .map(|row| row.exit_code())
        .filter(|&c| c != 2)
        .max()
        .unwrap_or(0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // malformed flags are bad input (exit 1), not clap's default 2
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Table(a) => table(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("flagcycle: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
