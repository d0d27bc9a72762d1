//! Batch front end. Every subcommand writes JSON (or CSV) to stdout or a file.
//!
//! Exit codes: 0 success, 2 usage or domain error, 3 verification failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize, Serializer};

use crate::branching::{branching_table, free_field_partition, l2_nuclearity_double_cone};
use crate::characters::{
    bw_asymptotic_bound, bw_nuclearity_bound, character, log_character, log_ellipticity_fit,
    MultiplicitySpectrum,
};
use crate::geometry::{inner_distance, second_inner_distance, translation_decomposition, Interval};
use crate::rep::{
    verify_glw, verify_m1_truncated, verify_operator_inequality, verify_t2_equals_t1, Inequality,
    TruncationGrid, DEFAULT_IDENTITY_TOLERANCE,
};
use crate::report::{format_f64, serialize_extended_f64, to_json_string, VerificationReport};
use crate::sl2::{
    verify_bch_identity, verify_euclidean_factorization, verify_half_turn,
    verify_rotation_factorization,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_FAIL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "nuclearity",
    version,
    about = "Inner distances, operator identities, characters and free-field branching"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inner distances and translation decomposition of an inclusion.
    Geom(GeomArgs),
    /// Run an identity or inequality check over a truncation grid.
    Verify(VerifyArgs),
    /// Characters, nuclearity chain and log-ellipticity fit.
    Char(CharArgs),
    /// Free-field branching table, partition function and double-cone norms.
    Branch(BranchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// JSON settings file; explicit flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GeomArgs {
    /// Outer interval `a,b` (line coordinates; `inf` allowed).
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub outer: (f64, f64),
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub inner: (f64, f64),
    /// Read endpoints as circle angles instead.
    #[arg(long)]
    pub angles: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Identity {
    Bch,
    Rotation,
    HalfTurn,
    Euclidean,
    M1,
    T2,
    M2,
    Kdc,
    Ko,
    Glw,
}

impl Identity {
    fn name(self) -> &'static str {
        match self {
            Identity::Bch => "bch",
            Identity::Rotation => "rotation",
            Identity::HalfTurn => "half_turn",
            Identity::Euclidean => "euclidean",
            Identity::M1 => "m1",
            Identity::T2 => "t2",
            Identity::M2 => "m2",
            Identity::Kdc => "kdc",
            Identity::Ko => "ko",
            Identity::Glw => "glw",
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub identity: Identity,
    /// Lowest weight; the target weight for `glw`.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    /// `s` for bch, rotation, euclidean, m1, t2 and m2; `lambda` for kdc.
    #[arg(long, allow_hyphen_values = true)]
    pub param: Option<f64>,
    /// Second BCH parameter.
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub t: f64,
    #[arg(long, value_delimiter = ',')]
    pub dims: Option<Vec<usize>>,
    /// Leading block size; number of eigenvalues for `glw`.
    #[arg(long)]
    pub block: Option<usize>,
    #[arg(long)]
    pub tolerance: Option<f64>,
    /// CSV of (dim, residual).
    #[arg(long)]
    pub emit_plot_data: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CharArgs {
    /// Spectrum JSON file.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    /// Single lowest weight, used when no spectrum file is given.
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
    /// Nuclearity chain for `--inner` inside `--outer` at `--lambda`.
    #[arg(long)]
    pub chain: bool,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub outer: Option<(f64, f64)>,
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub inner: Option<(f64, f64)>,
    /// Also evaluate the small-time bound at this BW time.
    #[arg(long)]
    pub bw_time: Option<f64>,
    /// Log-ellipticity fit on `--grid` and the KMS verdict.
    #[arg(long)]
    pub kms: bool,
    /// CSV of (s, value).
    #[arg(long)]
    pub emit_plot_data: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    /// Odd spacetime dimension.
    #[arg(long)]
    pub d: u32,
    #[arg(long, default_value_t = 20)]
    pub kmax: u64,
    /// One-particle partition function on `--grid` instead of the table.
    #[arg(long)]
    pub partition: bool,
    #[arg(long, value_delimiter = ',')]
    pub grid: Option<Vec<f64>>,
    /// Norm data for the double cones `O_1 ⋐ O_r`.
    #[arg(long)]
    pub double_cone: Option<f64>,
    /// CSV of (k, multiplicity) or (s, partition function).
    #[arg(long)]
    pub emit_plot_data: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// Settings read from `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub truncation_dims: Option<Vec<usize>>,
    pub block: Option<usize>,
    /// Tolerances keyed by identity name.
    pub tolerance_overrides: BTreeMap<String, f64>,
    pub output_format: Option<Format>,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = read(path)?;
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn parse_pair(text: &str) -> Result<(f64, f64), String> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let [a, b] = parts.as_slice() else {
        return Err(format!("expected `a,b`, got `{text}`"));
    };
    let num = |x: &str| x.parse::<f64>().map_err(|e| format!("`{x}`: {e}"));
    Ok((num(a)?, num(b)?))
}

/// Parses `args` (program name first) and runs the command. Returns the exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn execute(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Geom(a) => cmd_geom(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Char(a) => cmd_char(a),
        Command::Branch(a) => cmd_branch(a),
    }
}

/// Output settings after merging flags over the config file.
struct Sink {
    format: Format,
    path: Option<PathBuf>,
}

impl Sink {
    fn new(out: &OutputArgs, cfg: &RunConfig) -> Self {
        Self {
            format: out.format.or(cfg.output_format).unwrap_or(Format::Json),
            path: out.output.clone().or_else(|| cfg.output_path.clone()),
        }
    }

    fn emit<T: Serialize>(&self, value: &T, table: Table) -> Result<(), CliError> {
        let text = match self.format {
            Format::Json => to_json_string(value).map_err(|e| CliError::Io(e.to_string()))?,
            Format::Csv => table.to_csv()?,
        };
        match &self.path {
            Some(p) => write(p, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

/// A CSV rendering.
struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&'static str]) -> Self {
        Self {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Io(e.to_string());
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    fn save(&self, path: &Path) -> Result<(), CliError> {
        write(path, &self.to_csv()?)
    }
}

fn plot(
    path: Option<&Path>,
    header: [&'static str; 2],
    points: &[(f64, f64)],
) -> Result<(), CliError> {
    let Some(path) = path else {
        return Ok(());
    };
    let mut t = Table::new(&header);
    for &(x, y) in points {
        t.push(vec![format_f64(x), format_f64(y)]);
    }
    t.save(path)
}

/// An `f64` that serializes `inf` as a string.
#[derive(Clone, Copy, Debug)]
struct Ext(f64);

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_extended_f64(&self.0, s)
    }
}

fn interval(pair: (f64, f64), angles: bool) -> crate::Result<Interval> {
    if angles {
        Interval::from_angles(pair.0, pair.1)
    } else {
        Interval::from_line(pair.0, pair.1)
    }
}

#[derive(Serialize)]
struct GeomReport {
    outer: [Ext; 2],
    inner: [Ext; 2],
    coordinates: &'static str,
    ell: f64,
    ell_prime: f64,
    a: f64,
    a_prime: f64,
    sinh_half_ell: f64,
}

fn cmd_geom(args: GeomArgs) -> Result<u8, CliError> {
    let cfg = RunConfig::load(args.out.config.as_deref())?;
    let outer = interval(args.outer, args.angles)?;
    let inner = interval(args.inner, args.angles)?;
    let ell = inner_distance(&outer, &inner)?;
    let (a, a_prime) = translation_decomposition(&outer, &inner)?;
    let report = GeomReport {
        outer: [Ext(args.outer.0), Ext(args.outer.1)],
        inner: [Ext(args.inner.0), Ext(args.inner.1)],
        coordinates: if args.angles { "angle" } else { "line" },
        ell,
        ell_prime: second_inner_distance(&outer, &inner)?,
        a,
        a_prime,
        sinh_half_ell: (ell / 2.0).sinh(),
    };
    let mut t = Table::new(&["quantity", "value"]);
    for (k, v) in [
        ("ell", report.ell),
        ("ell_prime", report.ell_prime),
        ("a", a),
        ("a_prime", a_prime),
        ("sinh_half_ell", report.sinh_half_ell),
    ] {
        t.push(vec![k.to_string(), format_f64(v)]);
    }
    Sink::new(&args.out, &cfg).emit(&report, t)?;
    Ok(EXIT_OK)
}

fn require(param: Option<f64>, what: &str, id: Identity) -> Result<f64, CliError> {
    param.ok_or_else(|| CliError::Usage(format!("--param ({what}) is required for {}", id.name())))
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let cfg = RunConfig::load(args.out.config.as_deref())?;
    let id = args.identity;
    let tolerance = args
        .tolerance
        .or_else(|| cfg.tolerance_overrides.get(id.name()).copied());
    let grid = || -> Result<TruncationGrid, CliError> {
        let (dims, block) = if id == Identity::Glw {
            (vec![200, 400, 800], 5)
        } else {
            (vec![50, 100, 200], 10)
        };
        let dims = args
            .dims
            .clone()
            .or_else(|| cfg.truncation_dims.clone())
            .unwrap_or(dims);
        let block = args.block.or(cfg.block).unwrap_or(block);
        Ok(TruncationGrid::new(
            dims,
            block,
            tolerance.unwrap_or(DEFAULT_IDENTITY_TOLERANCE),
        )?)
    };
    let mut report = match id {
        Identity::Bch => verify_bch_identity(require(args.param, "s", id)?, args.t),
        Identity::Rotation => verify_rotation_factorization(require(args.param, "s", id)?)?,
        Identity::HalfTurn => verify_half_turn(),
        Identity::Euclidean => verify_euclidean_factorization(require(args.param, "s", id)?),
        Identity::M1 => verify_m1_truncated(args.alpha, require(args.param, "s", id)?, &grid()?)?,
        Identity::T2 => verify_t2_equals_t1(args.alpha, require(args.param, "s", id)?, &grid()?)?,
        Identity::M2 => verify_operator_inequality(
            args.alpha,
            require(args.param, "s", id)?,
            &grid()?,
            Inequality::M2,
        )?,
        Identity::Kdc => verify_operator_inequality(
            args.alpha,
            require(args.param, "lambda", id)?,
            &grid()?,
            Inequality::KdcVector,
        )?,
        Identity::Ko => verify_operator_inequality(args.alpha, 0.0, &grid()?, Inequality::KoBound)?,
        Identity::Glw => {
            let g = grid()?;
            verify_glw(args.alpha, g.block, &g)?
        }
    };
    if let Some(tol) = tolerance {
        report.tolerance = tol;
        report = report.finish();
    }
    let points: Vec<(f64, f64)> = report
        .dims_tested
        .iter()
        .zip(&report.residuals)
        .map(|(&n, &r)| (n as f64, r))
        .collect();
    plot(args.emit_plot_data.as_deref(), ["dim", "residual"], &points)?;
    Sink::new(&args.out, &cfg).emit(&report, verify_table(&report))?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn verify_table(r: &VerificationReport) -> Table {
    let mut t = Table::new(&["identity", "dim", "residual", "tolerance", "verdict"]);
    let verdict = if r.passed() { "pass" } else { "fail" };
    for (n, res) in r.dims_tested.iter().zip(&r.residuals) {
        t.push(vec![
            r.identity_name.clone(),
            n.to_string(),
            format_f64(*res),
            format_f64(r.tolerance),
            verdict.to_string(),
        ]);
    }
    t
}

#[derive(Serialize)]
struct CharValue {
    s: f64,
    character: Ext,
    log_character: Ext,
}

fn cmd_char(args: CharArgs) -> Result<u8, CliError> {
    let cfg = RunConfig::load(args.out.config.as_deref())?;
    let sink = Sink::new(&args.out, &cfg);
    let spec = match &args.spectrum {
        Some(p) => MultiplicitySpectrum::from_json(&read(p)?)?,
        None => MultiplicitySpectrum::single(args.alpha),
    };
    if args.chain && args.kms {
        return Err(CliError::Usage("--chain and --kms are exclusive".into()));
    }
    if args.chain {
        let missing = |f: &str| CliError::Usage(format!("--chain needs --{f}"));
        let lambda = args.lambda.ok_or_else(|| missing("lambda"))?;
        let outer = interval(args.outer.ok_or_else(|| missing("outer"))?, false)?;
        let inner = interval(args.inner.ok_or_else(|| missing("inner"))?, false)?;
        let mut report = bw_nuclearity_bound(&spec, &outer, &inner, lambda)?;
        if let Some(a) = args.bw_time {
            report.asymptotic = Some(bw_asymptotic_bound(&spec, &outer, &inner, a)?);
        }
        let mut t = Table::new(&["lhs", "relation", "rhs", "value", "upper_bound"]);
        for step in &report.steps {
            t.push(vec![
                step.lhs.to_string(),
                step.relation.to_string(),
                step.rhs.to_string(),
                step.value.map(format_f64).unwrap_or_default(),
                format_f64(step.upper_bound),
            ]);
        }
        sink.emit(&report, t)?;
        return Ok(EXIT_OK);
    }
    let grid = match (args.s, &args.grid) {
        (Some(s), None) => vec![s],
        (None, Some(g)) => g.clone(),
        (Some(_), Some(_)) => return Err(CliError::Usage("give --s or --grid, not both".into())),
        (None, None) => return Err(CliError::Usage("--s or --grid is required".into())),
    };
    if args.kms {
        let fit = log_ellipticity_fit(&spec, &grid)?;
        let points: Vec<(f64, f64)> = fit
            .grid
            .iter()
            .copied()
            .zip(fit.log_traces.iter().copied())
            .collect();
        plot(args.emit_plot_data.as_deref(), ["s", "log_trace"], &points)?;
        let mut t = Table::new(&["s", "log_trace", "alpha", "constant", "kms_criterion_met"]);
        for (s, lt) in &points {
            t.push(vec![
                format_f64(*s),
                format_f64(*lt),
                format_f64(fit.alpha),
                format_f64(fit.constant),
                fit.kms_criterion_met.to_string(),
            ]);
        }
        sink.emit(&fit, t)?;
        return Ok(EXIT_OK);
    }
    let mut values = Vec::with_capacity(grid.len());
    for &s in &grid {
        let chi = character(&spec, s)?;
        if !chi.is_finite() {
            return Err(crate::Error::DivergentSpectrum { s }.into());
        }
        values.push(CharValue {
            s,
            character: Ext(chi),
            log_character: Ext(log_character(&spec, s)?),
        });
    }
    let points: Vec<(f64, f64)> = values.iter().map(|v| (v.s, v.character.0)).collect();
    plot(args.emit_plot_data.as_deref(), ["s", "character"], &points)?;
    let mut t = Table::new(&["s", "character", "log_character"]);
    for v in &values {
        t.push(vec![
            format_f64(v.s),
            format_f64(v.character.0),
            format_f64(v.log_character.0),
        ]);
    }
    sink.emit(&values, t)?;
    Ok(EXIT_OK)
}

fn cmd_branch(args: BranchArgs) -> Result<u8, CliError> {
    let cfg = RunConfig::load(args.out.config.as_deref())?;
    let sink = Sink::new(&args.out, &cfg);
    if let Some(r) = args.double_cone {
        let norm = l2_nuclearity_double_cone(r, args.d)?;
        let mut t = Table::new(&["quantity", "value"]);
        for (k, v) in [
            ("s", norm.s),
            ("one_particle_trace", norm.one_particle_trace),
            ("one_particle_asymptotic", norm.one_particle_asymptotic),
            ("fock_log_trace", norm.fock_log_trace),
            ("fock_log_asymptotic", norm.fock_log_asymptotic),
        ] {
            t.push(vec![k.to_string(), format_f64(v)]);
        }
        sink.emit(&norm, t)?;
        return Ok(EXIT_OK);
    }
    if args.partition {
        let grid = args
            .grid
            .ok_or_else(|| CliError::Usage("--partition needs --grid".into()))?;
        let rows = grid
            .iter()
            .map(|&s| free_field_partition(args.d, s))
            .collect::<crate::Result<Vec<_>>>()?;
        let points: Vec<(f64, f64)> = rows.iter().map(|p| (p.s, p.series.value)).collect();
        plot(args.emit_plot_data.as_deref(), ["s", "partition"], &points)?;
        let mut t = Table::new(&[
            "d",
            "s",
            "series",
            "tail_bound",
            "closed_form",
            "relative_difference",
        ]);
        for p in &rows {
            t.push(vec![
                p.d.to_string(),
                format_f64(p.s),
                format_f64(p.series.value),
                format_f64(p.series.tail_bound),
                format_f64(p.closed_form),
                format_f64(p.relative_difference),
            ]);
        }
        sink.emit(&rows, t)?;
        return Ok(EXIT_OK);
    }
    let rows = branching_table(args.d, args.kmax)?;
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.k as f64, r.multiplicity as f64))
        .collect();
    plot(
        args.emit_plot_data.as_deref(),
        ["k", "multiplicity"],
        &points,
    )?;
    let mut t = Table::new(&["d", "k", "weight", "monomials", "multiplicity"]);
    for r in &rows {
        t.push(vec![
            r.d.to_string(),
            r.k.to_string(),
            r.weight.to_string(),
            r.monomials.to_string(),
            r.multiplicity.to_string(),
        ]);
    }
    sink.emit(&rows, t)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_accept_infinity() {
        assert_eq!(parse_pair("0,inf").unwrap(), (0.0, f64::INFINITY));
        assert_eq!(parse_pair("-2, 2").unwrap(), (-2.0, 2.0));
        assert!(parse_pair("1").is_err());
        assert!(parse_pair("1,2,3").is_err());
        assert!(parse_pair("a,1").is_err());
    }

    #[test]
    fn config_rejects_unknown_keys() {
        let cfg: Result<RunConfig, _> = serde_json::from_str(r#"{"blocks": 3}"#);
        assert!(cfg.is_err());
        let cfg: RunConfig =
            serde_json::from_str(r#"{"block": 3, "tolerance_overrides": {"m1": 1e-9}}"#).unwrap();
        assert_eq!(cfg.block, Some(3));
        assert_eq!(cfg.tolerance_overrides["m1"], 1e-9);
    }

    #[test]
    fn flags_win_over_config() {
        let cfg = RunConfig {
            output_format: Some(Format::Csv),
            ..Default::default()
        };
        let out = OutputArgs {
            format: Some(Format::Json),
            output: None,
            config: None,
        };
        assert_eq!(Sink::new(&out, &cfg).format, Format::Json);
        let out = OutputArgs {
            format: None,
            ..out
        };
        assert_eq!(Sink::new(&out, &cfg).format, Format::Csv);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["nuclearity", "geom", "--outer", "-1,1"]), EXIT_USAGE);
        assert_eq!(run(["nuclearity", "frobnicate"]), EXIT_USAGE);
        assert_eq!(
            run(["nuclearity", "verify", "--identity", "m1"]),
            EXIT_USAGE
        );
    }

    #[test]
    fn csv_table_round_trips() {
        let mut t = Table::new(&["x", "y"]);
        t.push(vec!["1".into(), "a,b".into()]);
        let text = t.to_csv().unwrap();
        assert_eq!(text, "x,y\n1,\"a,b\"\n");
    }
}
