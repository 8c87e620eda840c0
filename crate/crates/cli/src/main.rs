use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arrexp::error::{Error, Result};
use arrexp::model::ArrangementFile;
use arrexp::padic::{check_min_valuation, valuation};
use arrexp::sweep::{delta_h_violations, sweep, write_records, OutputFormat, Parity, SweepConfig};
use arrexp::symbolic::{det_wy_polynomial, rational_roots, SymbolicTemplate};
use arrexp::theorems::{
    b2_equal_gap_delta_zero, b2_zero_gap_classification, finite_zero_locus, main_theorem_applies,
    B2Spec,
};
use arrexp::tuples::{wronskian_closed, NNTuple};
use arrexp::wy::{build_p, build_square_wy, build_w, build_wy};
use arrexp::{exponents, exponents_bruteforce, exponents_wy, Multiarrangement, QMatrix, Rational};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

/// Exact exponents of 2-dimensional multiarrangements of lines
#[derive(Parser, Debug)]
#[command(name = "arrexp", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// Arrangement JSON file: {"lines": [[a,b],...], "mults": [m,...]}
    #[arg(value_name = "PATH")]
    path: Option<PathBuf>,

    /// Same as the positional PATH
    #[arg(long = "input", value_name = "PATH", conflicts_with = "path")]
    input: Option<PathBuf>,
}

impl InputArgs {
    fn resolve(&self) -> Option<&Path> {
        self.path.as_deref().or(self.input.as_deref())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute exp(A, m) = (d1, d2)
    Exponents {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Print the Wakefield-Yuzvinsky matrix
    WyMatrix {
        #[command(flatten)]
        input: InputArgs,
        /// Degree e (defaults to |m|/2 - 1)
        #[arg(long)]
        degree: Option<usize>,
        /// Also print the power and Wronski components
        #[arg(long)]
        factors: bool,
        #[arg(long)]
        json: bool,
    },
    /// Determinant of the square WY matrix as a polynomial in one slope
    SymbolicDet {
        #[command(flatten)]
        input: InputArgs,
        /// 1-based index (at least 3) of the line whose slope becomes z
        #[arg(long, value_name = "K")]
        symbolic: usize,
        /// Also list the rational roots
        #[arg(long)]
        roots: bool,
    },
    /// Test theorem hypotheses and compare with the exact exponents
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// m1,m2,m3,m4 for the B2 and zero-locus checks
        #[arg(long, value_delimiter = ',')]
        mults: Option<Vec<usize>>,
        /// Fixed slope of the third line for the zero-locus check
        #[arg(long, default_value = "1")]
        s3: String,
    },
    /// Exponents over a box of multiplicities
    Sweep(SweepArgs),
    /// Wronskian of a strictly descending tuple, e.g. 5,4,2,0
    Wronskian {
        #[arg(value_delimiter = ',', required = true)]
        entries: Vec<usize>,
    },
    /// p-adic valuation of an integer or a Wronskian
    Padic {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "tuple", required_unless_present = "tuple")]
        value: Option<String>,
        #[arg(long, value_delimiter = ',')]
        tuple: Option<Vec<usize>>,
    },
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    input: InputArgs,
    /// TOML file with any of: lines, min, max, balanced_only, parity, out,
    /// workers, format, timing
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    min: Option<usize>,
    #[arg(long)]
    max: Option<usize>,
    #[arg(long)]
    balanced_only: bool,
    #[arg(long, conflicts_with = "odd_size_only")]
    even_size_only: bool,
    #[arg(long)]
    odd_size_only: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Defaults to $ARREXP_WORKERS, then 1
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Fill the ms column with wall-clock times
    #[arg(long)]
    timing: bool,
    /// Fail if adjacent records violate |Δ − Δ'| = 1
    #[arg(long)]
    check_delta_h: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Wy,
    Brute,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    Main,
    B2EqualGap,
    B2ZeroGap,
    ZeroLocus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FormatArg {
    Csv,
    Jsonl,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    lines: Option<Vec<[i64; 2]>>,
    min: Option<usize>,
    max: Option<usize>,
    balanced_only: Option<bool>,
    parity: Option<String>,
    out: Option<PathBuf>,
    workers: Option<usize>,
    format: Option<FormatArg>,
    timing: Option<bool>,
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load(input: &InputArgs) -> Result<Multiarrangement> {
    let Some(path) = input.resolve() else {
        Cli::command()
            .error(ErrorKind::MissingRequiredArgument, "an arrangement file is required")
            .exit()
    };
    Multiarrangement::from_json(&read_file(path)?)
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>().map_err(|_| Error::Parse(format!("not a rational number: {s}")))
}

fn b2_spec(a: Option<&Multiarrangement>, mults: &Option<Vec<usize>>) -> Result<B2Spec> {
    if let Some(m) = mults {
        if m.len() != 4 {
            return Err(Error::Parse(format!("expected 4 multiplicities, got {}", m.len())));
        }
        return Ok(B2Spec::new(m[0], m[1], m[2], m[3]));
    }
    let a = a.ok_or_else(|| Error::Parse("give an arrangement file or --mults".into()))?;
    let m = a.mults();
    let expected = B2Spec::new(1, 1, 1, 1).arrangement()?;
    if a.lines() != expected.lines() {
        return Err(Error::NotApplicable("lines must be x, y, x-y, x+y in this order".into()));
    }
    Ok(B2Spec::new(m[0], m[1], m[2], m[3]))
}

fn matrix_json(m: &QMatrix) -> serde_json::Value {
    let rows: Vec<Vec<String>> =
        (0..m.rows()).map(|r| m.row(r).iter().map(|v| v.to_string()).collect()).collect();
    json!(rows)
}

#[derive(Serialize)]
struct ExponentsOut {
    d1: usize,
    d2: usize,
    delta: usize,
    method: String,
    witness: Vec<String>,
}

fn cmd_exponents(input: &InputArgs, method: MethodArg) -> Result<String> {
    let a = load(input)?;
    let r = match method {
        MethodArg::Auto => exponents(&a)?,
        MethodArg::Wy => exponents_wy(&a)?,
        MethodArg::Brute => exponents_bruteforce(&a)?,
    };
    let witness = r
        .witness
        .as_ref()
        .map(|w| w.f.iter().chain(&w.g).map(|c| c.to_string()).collect())
        .unwrap_or_default();
    let out = ExponentsOut {
        d1: r.pair.d1,
        d2: r.pair.d2,
        delta: r.delta(),
        method: r.method.to_string(),
        witness,
    };
    Ok(serde_json::to_string(&out)?)
}

fn cmd_wy_matrix(input: &InputArgs, degree: Option<usize>, factors: bool, as_json: bool) -> Result<String> {
    let a = load(input)?;
    let (norm, _) = a.normalize_to_xy()?;
    let inst = match degree {
        Some(e) => build_wy(&norm, e)?,
        None => build_square_wy(&norm)?,
    };
    let square = degree.is_none() || inst.matrix.is_square() && norm.size() == 2 * (inst.e + 1);
    let components = if factors && square { Some((build_p(&norm)?, build_w(&norm)?)) } else { None };
    if as_json {
        let mut out = json!({
            "e": inst.e,
            "rows": inst.matrix.rows(),
            "cols": inst.matrix.cols(),
            "f_cols": inst.shape.f_cols,
            "g_cols": inst.shape.g_cols,
            "blocks": inst.shape.row_blocks,
            "slopes": inst.slopes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            "matrix": matrix_json(&inst.matrix),
        });
        if let Some((p, w)) = &components {
            out["p"] = matrix_json(p);
            out["w"] = matrix_json(w);
        }
        return Ok(serde_json::to_string_pretty(&out)?);
    }
    let mut text = format!(
        "{norm}\ne = {}, {} x {} (f {} | g {})\n{}",
        inst.e,
        inst.matrix.rows(),
        inst.matrix.cols(),
        inst.shape.f_cols,
        inst.shape.g_cols,
        inst.render()
    );
    if let Some((p, w)) = &components {
        text.push_str(&format!("P =\n{p}W =\n{w}"));
    }
    Ok(text.trim_end().to_string())
}

fn cmd_symbolic(input: &InputArgs, k: usize, roots: bool) -> Result<String> {
    let a = load(input)?;
    let (norm, _) = a.normalize_to_xy()?;
    let t = SymbolicTemplate::from_arrangement(&norm, k)?;
    let p = det_wy_polynomial(&t)?;
    let mut out = if p.is_zero() { "0".to_string() } else { format!("{p} = {}", p.factored()?) };
    if roots && !p.is_zero() {
        let list: Vec<String> = rational_roots(&p)?
            .into_iter()
            .map(|(r, m)| if m == 1 { r.to_string() } else { format!("{r} (x{m})") })
            .collect();
        out.push_str(&format!("\nrational roots: {}", list.join(", ")));
    }
    Ok(out)
}

fn mismatch(what: &str, predicted: usize, actual: usize) -> Error {
    Error::PredictionFailed(format!("{what}: predicted delta {predicted}, computed {actual}"))
}

fn cmd_check(input: &InputArgs, theorem: TheoremArg, mults: &Option<Vec<usize>>, s3: &str) -> Result<String> {
    // The B2 checks take their multiplicities from --mults when given.
    let needs_file = mults.is_none() || matches!(theorem, TheoremArg::Main);
    let arrangement = match input.resolve() {
        Some(_) if needs_file => Some(load(input)?),
        _ => None,
    };
    let out = match theorem {
        TheoremArg::Main => {
            let a = arrangement.ok_or_else(|| Error::Parse("the main check needs an arrangement file".into()))?;
            let (norm, _) = a.normalize_to_xy()?;
            let cert = main_theorem_applies(&norm);
            let delta = exponents(&norm)?.delta();
            if cert.is_some() && delta != 0 {
                return Err(mismatch("main", 0, delta));
            }
            json!({ "applies": cert.is_some(), "certificate": cert, "delta": delta })
        }
        TheoremArg::B2EqualGap => {
            let spec = b2_spec(arrangement.as_ref(), mults)?;
            let applies = b2_equal_gap_delta_zero(&spec);
            let delta = exponents(&spec.arrangement()?)?.delta();
            if applies && delta != 0 {
                return Err(mismatch("b2-equal-gap", 0, delta));
            }
            json!({ "applies": applies, "n1": spec.n1(), "n2": spec.n2(), "delta": delta })
        }
        TheoremArg::B2ZeroGap => {
            let spec = b2_spec(arrangement.as_ref(), mults)?;
            let predicted = b2_zero_gap_classification(&spec)?;
            let delta = exponents(&spec.arrangement()?)?.delta();
            if predicted != delta {
                return Err(mismatch("b2-zero-gap", predicted, delta));
            }
            json!({ "predicted_delta": predicted, "delta": delta })
        }
        TheoremArg::ZeroLocus => {
            let m: [usize; 4] = match (mults, &arrangement) {
                (Some(m), _) => m
                    .as_slice()
                    .try_into()
                    .map_err(|_| Error::Parse(format!("expected 4 multiplicities, got {}", m.len())))?,
                (None, Some(a)) if a.len() == 4 => [a.mults()[0], a.mults()[1], a.mults()[2], a.mults()[3]],
                _ => return Err(Error::Parse("give --mults m1,m2,m3,m4 or a 4-line arrangement".into())),
            };
            let s3 = parse_rational(s3)?;
            let z = finite_zero_locus(m, &s3)?;
            let roots: Vec<_> = z
                .roots
                .iter()
                .map(|(r, k)| json!({ "value": r.to_string(), "multiplicity": k }))
                .collect();
            json!({
                "polynomial": z.polynomial.to_string(),
                "factored": z.polynomial.factored()?,
                "roots": roots,
                "valid_slopes": z.valid_slopes.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "irrational_parts": z.irrational_parts,
            })
        }
    };
    Ok(serde_json::to_string(&out)?)
}

fn env_workers() -> Result<Option<usize>> {
    match std::env::var("ARREXP_WORKERS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidConfig(format!("ARREXP_WORKERS is not a count: {v}"))),
        Err(_) => Ok(None),
    }
}

fn cmd_sweep(args: &SweepArgs) -> Result<Option<String>> {
    let file: SweepFile = match &args.config {
        Some(p) => toml::from_str(&read_file(p)?).map_err(|e| Error::InvalidConfig(e.to_string()))?,
        None => SweepFile::default(),
    };
    let lines = match (args.input.resolve(), &file.lines) {
        (Some(p), _) => serde_json::from_str::<ArrangementFile>(&read_file(p)?)?.line_forms()?,
        (None, Some(raw)) => ArrangementFile { lines: raw.clone(), mults: vec![] }.line_forms()?,
        (None, None) => return Err(Error::InvalidConfig("no lines: give an arrangement file or config".into())),
    };
    let parity = if args.even_size_only {
        Parity::Even
    } else if args.odd_size_only {
        Parity::Odd
    } else {
        match file.parity.as_deref() {
            None | Some("any") => Parity::Any,
            Some("even") => Parity::Even,
            Some("odd") => Parity::Odd,
            Some(other) => return Err(Error::InvalidConfig(format!("unknown parity {other}"))),
        }
    };
    let config = SweepConfig {
        lines,
        min: args.min.or(file.min).unwrap_or(1),
        max: args.max.or(file.max).ok_or_else(|| Error::InvalidConfig("--max is required".into()))?,
        balanced_only: args.balanced_only || file.balanced_only.unwrap_or(false),
        parity,
        workers: match args.workers.or(file.workers) {
            Some(w) => w,
            None => env_workers()?.unwrap_or(1),
        },
        timing: args.timing || file.timing.unwrap_or(false),
    };
    let format = match args.format.or(file.format).unwrap_or(FormatArg::Csv) {
        FormatArg::Csv => OutputFormat::Csv,
        FormatArg::Jsonl => OutputFormat::Jsonl,
    };
    let records = sweep(&config)?;
    if args.check_delta_h {
        let bad = delta_h_violations(&records);
        if let Some(&(i, j)) = bad.first() {
            return Err(Error::NotApplicable(format!(
                "{} adjacent pairs violate the step property, first {:?} -> {:?}",
                bad.len(),
                records[i].mults,
                records[j].mults
            )));
        }
    }
    let n = config.lines.len();
    match args.out.clone().or(file.out) {
        Some(path) => {
            let mut f = io::BufWriter::new(
                fs::File::create(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
            );
            write_records(&mut f, &records, n, format)?;
            f.flush()?;
            Ok(None)
        }
        None => {
            let mut buf = Vec::new();
            write_records(&mut buf, &records, n, format)?;
            Ok(Some(String::from_utf8(buf).expect("ascii output").trim_end().to_string()))
        }
    }
}

fn cmd_padic(p: u64, value: &Option<String>, tuple: &Option<Vec<usize>>) -> Result<String> {
    if let Some(t) = tuple {
        let check = check_min_valuation(&NNTuple::new(t.clone()), p)?;
        return Ok(serde_json::to_string(&check)?);
    }
    let raw = value.as_deref().unwrap_or_default();
    let n: BigInt = raw.parse().map_err(|_| Error::Parse(format!("not an integer: {raw}")))?;
    Ok(valuation(&n, p)?.to_string())
}

fn run(cli: Cli) -> Result<Option<String>> {
    Ok(Some(match &cli.command {
        Command::Exponents { input, method } => cmd_exponents(input, *method)?,
        Command::WyMatrix { input, degree, factors, json } => cmd_wy_matrix(input, *degree, *factors, *json)?,
        Command::SymbolicDet { input, symbolic, roots } => cmd_symbolic(input, *symbolic, *roots)?,
        Command::Check { input, theorem, mults, s3 } => cmd_check(input, *theorem, mults, s3)?,
        Command::Sweep(args) => return cmd_sweep(args),
        Command::Wronskian { entries } => wronskian_closed(&NNTuple::new(entries.clone()))?.to_string(),
        Command::Padic { p, value, tuple } => cmd_padic(*p, value, tuple)?,
    }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Some(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
