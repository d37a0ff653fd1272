//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a census counterexample or a failed `--expect`,
//! 2 any input or usage error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::enumerate::{canonical_form, survey, SurveyMode, SurveyReport};
use crate::format::{parse_relation, serialize_relation, Form};
use crate::mahavier::{
    count_threads, thread_order_profile, threads_naive, threads_propagate_parallel, Bonding,
    ThreadSet,
};
use crate::relation::{PropertyReport, Relation, Subset};
use crate::witness::{gamma_witness, lemma1_witness, lemma2_witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const SURVEY_CSV_HEADER: &str = "n,full,idempotent,nontrivial,trivial,gamma,counterexamples";

#[derive(Debug, Parser)]
#[command(
    name = "idemrel",
    version,
    about = "Idempotent relations on finite carriers: property checks, condition-Γ witnesses, census, Mahavier products",
    after_help = "Relation files are JSON {\"n\": k, \"pairs\": [[x,y], ...]} or a 0/1 matrix of k lines \
                  with k characters each; row x, column y is 1 iff <x,y> is in the relation. Use - for stdin."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the property report of a relation as JSON.
    Check {
        file: PathBuf,
        /// Assert a property, e.g. `--expect trivial=true`; exits 1 on mismatch.
        #[arg(long, value_name = "FLAG=BOOL")]
        expect: Vec<String>,
    },
    /// Run the constructive witness chains and print the trace as JSON.
    Witness {
        file: PathBuf,
        #[arg(long, default_value = "theorem", value_parser = ["1", "2", "theorem"])]
        lemma: String,
        /// Seed pair `x,y` for the second chain (defaults to the least two-point witness).
        #[arg(long, value_name = "X,Y")]
        seed: Option<String>,
    },
    /// Exhaustively classify every full relation on n points.
    Survey {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        #[arg(long)]
        json: bool,
    },
    /// Threads of the Mahavier product over the chain 0 < 1 < … < M-1.
    Mahavier {
        file: PathBuf,
        #[arg(long)]
        length: usize,
        /// Filter all n^M tuples instead of propagating.
        #[arg(long)]
        naive: bool,
        /// Use the inverse relation (opposite bonding orientation).
        #[arg(long)]
        transpose: bool,
        /// Constrain consecutive coordinates only.
        #[arg(long)]
        adjacent: bool,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Relation algebra operations.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
}

#[derive(Debug, Args)]
struct OutputForm {
    #[arg(long, default_value = "json", value_parser = ["json", "matrix"])]
    format: String,
}

impl OutputForm {
    fn form(&self) -> Form {
        if self.format == "matrix" {
            Form::Matrix
        } else {
            Form::Json
        }
    }
}

#[derive(Debug, Subcommand)]
enum OpCommand {
    /// `g ∘ f`: x ↦ g[f(x)].
    Compose {
        f: PathBuf,
        g: PathBuf,
        #[command(flatten)]
        out: OutputForm,
    },
    Inverse {
        f: PathBuf,
        #[command(flatten)]
        out: OutputForm,
    },
    /// Keep only the rows of points in `--set`.
    Restrict {
        f: PathBuf,
        #[arg(long, value_name = "X,Y,...", allow_hyphen_values = false)]
        set: String,
        #[command(flatten)]
        out: OutputForm,
    },
    /// Least relabeling (n ≤ 8).
    Canonical {
        f: PathBuf,
        #[command(flatten)]
        out: OutputForm,
    },
}

/// A failure to report: message plus exit code.
struct Failure(i32, String);

fn input(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

fn load(path: &Path) -> Result<Relation, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?
    };
    parse_relation(&text)
        .map_err(|e| input(format!("{}: error[{}]: {e}", path.display(), e.kind())))
}

fn parse_points(s: &str) -> Result<Vec<usize>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| input(format!("not a point: {p:?}")))
        })
        .collect()
}

#[derive(Serialize)]
struct CheckOutput {
    n: usize,
    full: bool,
    idempotent: bool,
    surjective: bool,
    single_valued: bool,
    trivial: Option<bool>,
    nontrivial: Option<bool>,
    gamma: Option<[usize; 2]>,
    two_point: Option<[usize; 2]>,
    nontriviality_witness: Option<[usize; 2]>,
}

impl From<&PropertyReport> for CheckOutput {
    fn from(r: &PropertyReport) -> Self {
        let arr = |p: Option<(usize, usize)>| p.map(|(a, b)| [a, b]);
        CheckOutput {
            n: r.n,
            full: r.full,
            idempotent: r.idempotent,
            surjective: r.surjective,
            single_valued: r.single_valued,
            trivial: r.trivial,
            nontrivial: r.trivial.map(|t| !t),
            gamma: arr(r.gamma_witness),
            two_point: arr(r.two_point_witness),
            nontriviality_witness: arr(r.nontriviality_witness),
        }
    }
}

fn expectation_value(r: &PropertyReport, key: &str) -> Result<Option<bool>, Failure> {
    Ok(match key {
        "full" => Some(r.full),
        "idempotent" => Some(r.idempotent),
        "surjective" => Some(r.surjective),
        "single_valued" => Some(r.single_valued),
        "trivial" => r.trivial,
        "nontrivial" => r.trivial.map(|t| !t),
        "gamma" => Some(r.gamma),
        "two_point" => Some(r.two_point_witness.is_some()),
        other => return Err(input(format!("unknown --expect flag {other:?}"))),
    })
}

fn cmd_check(
    file: &Path,
    expect: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let f = load(file)?;
    let report = f.report();
    let mut failures = Vec::new();
    for e in expect {
        let (key, val) = e
            .split_once('=')
            .ok_or_else(|| input(format!("--expect needs FLAG=BOOL, got {e:?}")))?;
        let want: bool = val
            .parse()
            .map_err(|_| input(format!("--expect value must be true or false, got {val:?}")))?;
        let got = expectation_value(&report, key)?;
        if got != Some(want) {
            let shown = got.map_or("undefined".to_string(), |g| g.to_string());
            failures.push(format!("expectation failed: {key}={want} (actual {shown})"));
        }
    }
    write_json(out, &CheckOutput::from(&report))?;
    for msg in &failures {
        let _ = writeln!(err, "{msg}");
    }
    Ok(if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn cmd_witness(
    file: &Path,
    lemma: &str,
    seed: Option<&str>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let f = load(file)?;
    let seed = match seed {
        Some(s) => match parse_points(s)?.as_slice() {
            &[x, y] => Some((x, y)),
            _ => return Err(input(format!("--seed needs two points x,y, got {s:?}"))),
        },
        None => None,
    };
    let fail = |e: crate::witness::WitnessError| input(e.to_string());
    match lemma {
        "1" => write_json(out, &lemma1_witness(&f).map_err(fail)?)?,
        "2" => {
            let (x, y) = seed
                .or_else(|| f.two_point_witness())
                .ok_or_else(|| input("no seed given and the relation has no ⟨x,x⟩,⟨x,y⟩ pair"))?;
            write_json(out, &lemma2_witness(&f, x, y).map_err(fail)?)?
        }
        _ => write_json(out, &gamma_witness(&f).map_err(fail)?)?,
    }
    Ok(EXIT_OK)
}

pub fn render_survey_csv(r: &SurveyReport) -> String {
    let mode = match r.mode {
        SurveyMode::All => "all",
        SurveyMode::UpToIso => "up_to_iso",
    };
    let c = &r.counts;
    format!(
        "# idemrel survey csv v1; mode={mode}\n{SURVEY_CSV_HEADER}\n{},{},{},{},{},{},{}\n",
        r.n,
        c.full,
        c.idempotent_full,
        c.nontrivial_idempotent,
        c.trivial_idempotent,
        c.gamma_idempotent,
        r.counterexamples.len()
    )
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn cmd_survey(
    n: usize,
    up_to_iso: bool,
    workers: Option<usize>,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let mode = if up_to_iso {
        SurveyMode::UpToIso
    } else {
        SurveyMode::All
    };
    let report = survey(n, mode, workers.unwrap_or_else(default_workers))
        .map_err(|e| input(e.to_string()))?;
    if json {
        write_json(out, &report)?;
    } else {
        write_out(out, &render_survey_csv(&report))?;
    }
    let _ = writeln!(err, "survey n={n}: {:.3}s", report.elapsed.as_secs_f64());
    for c in &report.counterexamples {
        let _ = writeln!(
            err,
            "counterexample: {} ({})",
            serialize_relation(&c.relation, Form::Json).trim_end(),
            c.reason
        );
    }
    Ok(if report.counterexamples.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

pub fn render_threads_text(ts: &ThreadSet) -> String {
    let sep = if ts.n <= 10 { "" } else { "," };
    let mut s = String::new();
    for t in &ts.threads {
        let coords: Vec<String> = t.coords().iter().map(|c| c.to_string()).collect();
        s.push_str(&coords.join(sep));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct ThreadsOutput<'a> {
    n: usize,
    m: usize,
    count: usize,
    is_coordinatewise_chain: bool,
    threads: &'a [crate::mahavier::Thread],
}

#[allow(clippy::too_many_arguments)]
fn cmd_mahavier(
    file: &Path,
    length: usize,
    naive: bool,
    transpose: bool,
    adjacent: bool,
    count_only: bool,
    json: bool,
    workers: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let mut f = load(file)?;
    if transpose {
        f = f.inverse();
    }
    let bonding = if adjacent {
        Bonding::Adjacent
    } else {
        Bonding::AllPairs
    };
    let fail = |e: crate::mahavier::MahavierError| input(e.to_string());
    if count_only && !naive {
        let c = count_threads(&f, length, bonding).map_err(fail)?;
        write_out(out, &format!("{c}\n"))?;
        return Ok(EXIT_OK);
    }
    let ts = if naive {
        threads_naive(&f, length, bonding).map_err(fail)?
    } else {
        threads_propagate_parallel(&f, length, bonding, workers.unwrap_or(1)).map_err(fail)?
    };
    if count_only {
        write_out(out, &format!("{}\n", ts.len()))?;
    } else if json {
        let profile = thread_order_profile(&ts);
        write_json(
            out,
            &ThreadsOutput {
                n: ts.n,
                m: ts.m,
                count: ts.len(),
                is_coordinatewise_chain: profile.is_coordinatewise_chain,
                threads: &ts.threads,
            },
        )?;
    } else {
        write_out(out, &render_threads_text(&ts))?;
    }
    Ok(EXIT_OK)
}

fn cmd_op(op: &OpCommand, out: &mut dyn Write) -> Result<i32, Failure> {
    let (result, form) = match op {
        OpCommand::Compose { f, g, out } => {
            let (f, g) = (load(f)?, load(g)?);
            (f.compose(&g).map_err(|e| input(e.to_string()))?, out.form())
        }
        OpCommand::Inverse { f, out } => (load(f)?.inverse(), out.form()),
        OpCommand::Restrict { f, set, out } => {
            let f = load(f)?;
            let points = parse_points(set)?;
            if let Some(&p) = points.iter().find(|&&p| p >= f.n()) {
                return Err(input(format!("point {p} out of range 0..{}", f.n())));
            }
            let a: Subset = points.into_iter().collect();
            (f.restrict(a).map_err(|e| input(e.to_string()))?, out.form())
        }
        OpCommand::Canonical { f, out } => (
            canonical_form(&load(f)?).map_err(|e| input(e.to_string()))?,
            out.form(),
        ),
    };
    write_out(out, &serialize_relation(&result, form))?;
    Ok(EXIT_OK)
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes())
        .map_err(|e| Failure(EXIT_INPUT, format!("write failed: {e}")))
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    write_out(out, &s)
}

/// Runs the CLI against explicit output streams and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Check { file, expect } => cmd_check(file, expect, out, err),
        Command::Witness { file, lemma, seed } => cmd_witness(file, lemma, seed.as_deref(), out),
        Command::Survey {
            n,
            up_to_iso,
            workers,
            csv: _,
            json,
        } => cmd_survey(*n, *up_to_iso, *workers, *json, out, err),
        Command::Mahavier {
            file,
            length,
            naive,
            transpose,
            adjacent,
            count_only,
            json,
            workers,
        } => cmd_mahavier(
            file,
            *length,
            *naive,
            *transpose,
            *adjacent,
            *count_only,
            *json,
            *workers,
            out,
        ),
        Command::Op { op } => cmd_op(op, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run_with(argv, &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}
