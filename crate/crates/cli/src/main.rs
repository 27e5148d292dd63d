use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use slocc_core::invariants::compare_signatures;
use slocc_core::report::{FamilyId, InvariantReport};
use slocc_core::stateio::{parse_state, write_state, StateFile};
use slocc_core::{
    all_invariants, canonical_state, completeness_table_with, enumerate_partitions,
    random_invertible_chain, verify_slocc_equation, CanonicalKind, Complex64, Error, EvalConfig,
    GaussRational, PureState, Scalar, Verdict, ZeroTest,
};

const EXIT_MALFORMED: u8 = 2;
const EXIT_BAD_N: u8 = 3;
const EXIT_NON_INVERTIBLE: u8 = 4;
const EXIT_INEQUIVALENT: u8 = 10;

#[derive(Parser)]
#[command(
    name = "slocc",
    version,
    about = "Determinant SLOCC invariants of even-n qubit states"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Arithmetic mode. Defaults to exact for rational-only input, else float.
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Relative zero threshold for float determinants.
    #[arg(long, global = true, default_value_t = slocc_core::detengine::DEFAULT_ZERO_FACTOR)]
    zero_factor: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Override the largest qubit count accepted.
    #[arg(long, global = true)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Subcommand)]
enum Command {
    /// List the row/column splits in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Evaluate every invariant of a state file (`-` for stdin).
    Invariants { file: String },
    /// Print the zero-pattern signature and family id.
    Signature { file: String },
    /// Compare the zero patterns of two states.
    EquivalenceCheck { file_a: String, file_b: String },
    /// Check the determinant equation under random invertible local operators.
    VerifySlocc {
        file: String,
        #[arg(long, default_value_t = 10)]
        trials: u64,
    },
    /// Action of the transpositions (1,i) on the invariants.
    Completeness {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = slocc_core::completeness::DEFAULT_PROBES)]
        probes: usize,
    },
    /// Write a named state: ghz, w, dicke:k or chi6.
    Canonical {
        kind: CanonicalKind,
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

/// An error carrying the process exit code it should produce.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::OddQubitCount(_)
            | Error::QubitCountOutOfRange { .. }
            | Error::ChiRequiresSix(_) => EXIT_BAD_N,
            Error::NonInvertible { .. } => EXIT_NON_INVERTIBLE,
            Error::Parse { .. }
            | Error::DecimalInExactMode
            | Error::IndexOutOfRange { .. }
            | Error::AmplitudeCount { .. }
            | Error::SizeMismatch { .. } => EXIT_MALFORMED,
            _ => 1,
        };
        Failure {
            code,
            err: e.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        match err.downcast::<Error>() {
            Ok(e) => e.into(),
            Err(err) => Failure { code: 1, err },
        }
    }
}

type CliResult<T> = Result<T, Failure>;

impl GlobalOpts {
    fn eval_config(&self) -> EvalConfig {
        EvalConfig {
            zero: ZeroTest {
                factor: self.zero_factor,
            },
            max_n: self.max_n,
        }
    }

    fn hard_max(&self) -> usize {
        self.max_n.unwrap_or(slocc_core::qstate::HARD_MAX_QUBITS)
    }
}

/// A state loaded in whichever mode the flags and file contents select.
enum Loaded {
    Exact(PureState<GaussRational>),
    Float(PureState<Complex64>),
}

fn read_input(file: &str) -> CliResult<String> {
    let mut text = String::new();
    if file == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")
            .map_err(|err| Failure {
                code: EXIT_MALFORMED,
                err,
            })?;
    } else {
        text = fs::read_to_string(file)
            .with_context(|| format!("reading {file}"))
            .map_err(|err| Failure {
                code: EXIT_MALFORMED,
                err,
            })?;
    }
    Ok(text)
}

fn parse_file(file: &str, opts: &GlobalOpts) -> CliResult<StateFile> {
    parse_state(&read_input(file)?, opts.hard_max()).map_err(|e| {
        let f = Failure::from(e);
        Failure {
            code: f.code,
            err: f.err.context(file.to_string()),
        }
    })
}

/// Exact unless `--mode` says otherwise or some file holds decimals.
fn pick_mode(files: &[&StateFile], opts: &GlobalOpts) -> ModeArg {
    opts.mode.unwrap_or(if files.iter().all(|f| f.is_exact()) {
        ModeArg::Exact
    } else {
        ModeArg::Float
    })
}

fn convert(parsed: &StateFile, mode: ModeArg) -> CliResult<Loaded> {
    Ok(match mode {
        ModeArg::Exact => Loaded::Exact(parsed.to_exact()?),
        ModeArg::Float => Loaded::Float(parsed.to_float()?),
    })
}

fn load(file: &str, opts: &GlobalOpts) -> CliResult<Loaded> {
    let parsed = parse_file(file, opts)?;
    convert(&parsed, pick_mode(&[&parsed], opts))
}

fn emit(out: &mut impl Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .context("writing output")
        .map_err(Failure::from)
}

fn to_json(value: &impl Serialize) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Failure::from(anyhow!(e)))?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct PartitionJson {
    index: usize,
    sigma: String,
    row_bits: Vec<usize>,
    col_bits: Vec<usize>,
}

fn braces(bits: &[usize]) -> String {
    let inner: Vec<String> = bits.iter().map(|b| b.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn cmd_enumerate(n: usize, opts: &GlobalOpts) -> CliResult<String> {
    slocc_core::qstate::check_qubit_count(n, opts.hard_max())?;
    let parts = enumerate_partitions(n)?;
    if opts.json {
        let rows: Vec<PartitionJson> = parts
            .iter()
            .map(|p| PartitionJson {
                index: p.index(),
                sigma: p.sigma().cycle_string(),
                row_bits: p.row_bits().to_vec(),
                col_bits: p.col_bits().to_vec(),
            })
            .collect();
        return to_json(&rows);
    }
    let mut out = String::new();
    for p in &parts {
        out.push_str(&format!(
            "{}  {}  rows={} cols={}\n",
            p.index(),
            p.sigma().cycle_string(),
            braces(p.row_bits()),
            braces(p.col_bits())
        ));
    }
    Ok(out)
}

fn report_of(state: &Loaded, cfg: &EvalConfig) -> CliResult<InvariantReport> {
    Ok(match state {
        Loaded::Exact(s) => InvariantReport::new(&all_invariants(s, cfg)?)?,
        Loaded::Float(s) => InvariantReport::new(&all_invariants(s, cfg)?)?,
    })
}

fn cmd_invariants(file: &str, opts: &GlobalOpts) -> CliResult<String> {
    let report = report_of(&load(file, opts)?, &opts.eval_config())?;
    if opts.json {
        to_json(&report)
    } else {
        Ok(report.render_text())
    }
}

#[derive(Serialize)]
struct SignatureJson {
    signature: String,
    family_id: FamilyId,
}

fn cmd_signature(file: &str, opts: &GlobalOpts) -> CliResult<String> {
    let report = report_of(&load(file, opts)?, &opts.eval_config())?;
    let out = SignatureJson {
        signature: report.signature,
        family_id: report.family_id,
    };
    if opts.json {
        return to_json(&out);
    }
    let fid = match &out.family_id {
        FamilyId::Small(v) => v.to_string(),
        FamilyId::Big(s) => s.clone(),
    };
    Ok(format!("signature {}\nfamily_id {}\n", out.signature, fid))
}

#[derive(Serialize)]
struct VerdictJson {
    verdict: String,
    witnesses: Vec<usize>,
    signature_a: String,
    signature_b: String,
}

fn cmd_equivalence(a: &str, b: &str, opts: &GlobalOpts) -> CliResult<(String, u8)> {
    let cfg = opts.eval_config();
    let fa = parse_file(a, opts)?;
    let fb = parse_file(b, opts)?;
    let mode = pick_mode(&[&fa, &fb], opts);
    let (sa, sb) = match (convert(&fa, mode)?, convert(&fb, mode)?) {
        (Loaded::Exact(x), Loaded::Exact(y)) => pair_signatures(&x, &y, &cfg)?,
        (Loaded::Float(x), Loaded::Float(y)) => pair_signatures(&x, &y, &cfg)?,
        _ => unreachable!("both files converted in one mode"),
    };
    let verdict = compare_signatures(&sa, &sb);
    let witnesses = match &verdict {
        Verdict::Inequivalent { witnesses } => witnesses.clone(),
        Verdict::Undecided => Vec::new(),
    };
    let code = if verdict.is_inequivalent() {
        EXIT_INEQUIVALENT
    } else {
        0
    };
    let text = if opts.json {
        to_json(&VerdictJson {
            verdict: verdict.to_string(),
            witnesses,
            signature_a: sa.delta_string(),
            signature_b: sb.delta_string(),
        })?
    } else if witnesses.is_empty() {
        format!("{verdict}\n")
    } else {
        let w: Vec<String> = witnesses.iter().map(|w| w.to_string()).collect();
        format!("{verdict}\nwitnesses {}\n", w.join(","))
    };
    Ok((text, code))
}

fn pair_signatures<S: Scalar>(
    a: &PureState<S>,
    b: &PureState<S>,
    cfg: &EvalConfig,
) -> CliResult<(slocc_core::Signature, slocc_core::Signature)> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            found: b.n(),
        }
        .into());
    }
    Ok((
        all_invariants(a, cfg)?.signature(),
        all_invariants(b, cfg)?.signature(),
    ))
}

#[derive(Serialize)]
struct TrialJson {
    trial: u64,
    seed: u64,
    pass: bool,
    max_rel_err: Option<f64>,
}

#[derive(Serialize)]
struct VerifyJson {
    n: usize,
    mode: slocc_core::Mode,
    exponent: u64,
    trials: Vec<TrialJson>,
    passed: bool,
}

fn run_trials<S: Scalar>(
    state: &PureState<S>,
    trials: u64,
    opts: &GlobalOpts,
) -> CliResult<VerifyJson> {
    let cfg = opts.eval_config();
    let mut rows = Vec::new();
    let mut exponent = slocc_core::invariants::slocc_exponent(state.n());
    for t in 0..trials {
        let seed = opts.seed.wrapping_add(t);
        let chain = random_invertible_chain::<S>(state.n(), seed)?;
        let report = verify_slocc_equation(state, &chain, &cfg)?;
        exponent = report.exponent;
        rows.push(TrialJson {
            trial: t + 1,
            seed,
            pass: report.passed(),
            max_rel_err: report.max_rel_err(),
        });
    }
    Ok(VerifyJson {
        n: state.n(),
        mode: S::MODE,
        exponent,
        passed: rows.iter().all(|r| r.pass),
        trials: rows,
    })
}

fn cmd_verify(file: &str, trials: u64, opts: &GlobalOpts) -> CliResult<(String, u8)> {
    let result = match load(file, opts)? {
        Loaded::Exact(s) => run_trials(&s, trials, opts)?,
        Loaded::Float(s) => run_trials(&s, trials, opts)?,
    };
    let code = if result.passed { 0 } else { 1 };
    if opts.json {
        return Ok((to_json(&result)?, code));
    }
    let mut out = format!(
        "n={} mode={} exponent={}\n",
        result.n, result.mode, result.exponent
    );
    for t in &result.trials {
        let err = match (result.mode, t.max_rel_err) {
            (slocc_core::Mode::Exact, _) => "exact".to_string(),
            (_, Some(e)) => format!("max_rel_err={e:.3e}"),
            (_, None) => "max_rel_err=0 (all entries zero)".to_string(),
        };
        let status = if t.pass { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "trial {}  seed={}  {}  {}\n",
            t.trial, t.seed, err, status
        ));
    }
    out.push_str(if result.passed {
        "all trials passed\n"
    } else {
        "some trials FAILED\n"
    });
    Ok((out, code))
}

fn cmd_completeness(n: usize, probes: usize, opts: &GlobalOpts) -> CliResult<String> {
    let table = completeness_table_with(n, probes, opts.seed, &opts.eval_config())?;
    if opts.json {
        to_json(&table)
    } else {
        Ok(table.render_text())
    }
}

fn cmd_canonical(kind: CanonicalKind, n: usize, opts: &GlobalOpts) -> CliResult<String> {
    slocc_core::qstate::check_qubit_count(n, opts.hard_max())?;
    Ok(match opts.mode.unwrap_or(ModeArg::Exact) {
        ModeArg::Exact => write_state(&canonical_state::<GaussRational>(kind, n)?),
        ModeArg::Float => write_state(&canonical_state::<Complex64>(kind, n)?),
    })
}

fn run(cli: Cli) -> CliResult<u8> {
    let opts = &cli.global;
    let (text, code) = match &cli.command {
        Command::Enumerate { n } => (cmd_enumerate(*n, opts)?, 0),
        Command::Invariants { file } => (cmd_invariants(file, opts)?, 0),
        Command::Signature { file } => (cmd_signature(file, opts)?, 0),
        Command::EquivalenceCheck { file_a, file_b } => cmd_equivalence(file_a, file_b, opts)?,
        Command::VerifySlocc { file, trials } => cmd_verify(file, *trials, opts)?,
        Command::Completeness { n, probes } => (cmd_completeness(*n, *probes, opts)?, 0),
        Command::Canonical { kind, n, output } => {
            let text = cmd_canonical(*kind, *n, opts)?;
            if let Some(path) = output {
                fs::write(path, &text)
                    .with_context(|| format!("writing {}", path.display()))
                    .map_err(Failure::from)?;
                return Ok(0);
            }
            (text, 0)
        }
    };
    emit(&mut io::stdout().lock(), &text)?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
