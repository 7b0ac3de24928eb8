use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pearl_core::rational::Rational;
use pearl_core::{
    count_data, embedding_type_from_local, enumerate_data, local_type_direct, local_type_geometric,
    run_verify, CycMatrix, CycVec, EmbeddingDatum, LocalType, VerifyRange,
};
use serde::Serialize;
use serde_json::{json, Value};

/// Embedding types and local types in an apartment of the building of GL_m(D).
///
/// Every argument and every result is JSON. A positional JSON argument may be
/// omitted or given as `-` to read it from standard input.
#[derive(Parser)]
#[command(name = "pearl", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical rotation of a cyclic vector: {"canonical": [...], "shift": k}.
    Canon { vector: Option<String> },
    /// Pairs form [[value, gap], ...] of a cyclic vector.
    Pairs { vector: Option<String> },
    /// Complement class of a cyclic vector, as its canonical rotation.
    Complement { vector: Option<String> },
    /// Row-major flattening of a matrix given as a list of rows.
    Flatten { matrix: Option<String> },
    /// Ordered μ of an embedding datum and the local type from both pipelines.
    LocalType {
        /// {"f":..,"r":..,"m":..,"rows":[[..],..]} or just the list of rows.
        #[arg(long)]
        datum: String,
    },
    /// The embedding type determined by a local type.
    EmbeddingType {
        /// Coordinates as [n, d] pairs, integers or "n/d" strings.
        #[arg(long)]
        mu: String,
        #[arg(long)]
        f: usize,
        #[arg(long)]
        r: usize,
    },
    /// Checks the correspondence on every datum in a range.
    Verify {
        #[arg(long)]
        f_max: usize,
        #[arg(long)]
        r_max: usize,
        #[arg(long)]
        m_max: u32,
        #[arg(long)]
        fr_max: usize,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Writes every per-datum report to this file.
        #[arg(long)]
        report: Option<String>,
    },
    /// Lists M(f, r; m) in lexicographic order of the flattened matrix.
    Enumerate {
        #[arg(long)]
        f: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        count_only: bool,
    },
}

enum Failure {
    Input(String),
    Verify,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn read_arg(arg: Option<String>) -> Result<String, Failure> {
    match arg.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
        Some(s) => Ok(s.to_owned()),
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("invalid {what}: {e}")))
}

fn emit<T: Serialize>(value: &T) -> CliResult {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn parse_datum(text: &str) -> Result<EmbeddingDatum, Failure> {
    let value: Value = parse(text, "datum")?;
    if value.is_array() {
        let rows: Vec<Vec<u32>> = serde_json::from_value(value)
            .map_err(|e| Failure::Input(format!("invalid datum: {e}")))?;
        let m = rows.iter().flatten().sum();
        Ok(EmbeddingDatum::from_rows(&rows, m)?)
    } else {
        serde_json::from_value(value).map_err(|e| Failure::Input(format!("invalid datum: {e}")))
    }
}

fn canon(vector: Option<String>) -> CliResult {
    let v: CycVec = parse(&read_arg(vector)?, "vector")?;
    let class = v.canonical();
    emit(&json!({ "canonical": class.canonical(), "shift": class.shift() }))
}

fn pairs(vector: Option<String>) -> CliResult {
    let v: CycVec = parse(&read_arg(vector)?, "vector")?;
    emit(&v.pairs()?)
}

fn complement(vector: Option<String>) -> CliResult {
    let v: CycVec = parse(&read_arg(vector)?, "vector")?;
    emit(&v.canonical().complement()?)
}

fn flatten(matrix: Option<String>) -> CliResult {
    let rows: Vec<Vec<u32>> = parse(&read_arg(matrix)?, "matrix")?;
    emit(&CycMatrix::from_rows(&rows)?.flatten())
}

fn local_type_cmd(datum: &str) -> CliResult {
    let datum = parse_datum(datum)?;
    let mu = local_type_direct(&datum);
    let direct = LocalType::from_coordinates(&mu)?;
    let geometric = local_type_geometric(&datum);
    let mu: Vec<Rational> = mu.into_iter().map(Rational).collect();
    emit(&json!({
        "datum": datum,
        "mu": mu,
        "direct": direct,
        "geometric": geometric,
        "agree": direct == geometric,
    }))
}

fn embedding_type(mu: &str, f: usize, r: usize) -> CliResult {
    let mu: Vec<Rational> = parse(mu, "mu")?;
    let mu: Vec<_> = mu.into_iter().map(|x| x.0).collect();
    let lt = LocalType::from_coordinates(&mu)?;
    emit(&embedding_type_from_local(&lt, f, r)?)
}

fn verify(range: VerifyRange, report: Option<String>) -> CliResult {
    let outcome = run_verify(&range, report.is_some())?;
    if let (Some(path), Some(reports)) = (report, &outcome.reports) {
        let mut file = BufWriter::new(
            File::create(&path).map_err(|e| Failure::Input(format!("{path}: {e}")))?,
        );
        serde_json::to_writer(&mut file, reports)?;
        writeln!(file)?;
        file.flush()?;
    }
    emit(&outcome.summary)?;
    if outcome.summary.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn enumerate(f: usize, r: usize, m: u32, count_only: bool) -> CliResult {
    if f == 0 || r == 0 || m == 0 {
        return Err(Failure::Input("f, r and m must be positive".into()));
    }
    if count_only {
        return emit(&json!({ "f": f, "r": r, "m": m, "count": count_data(f, r, m) }));
    }
    let mut out = BufWriter::new(io::stdout().lock());
    out.write_all(b"[")?;
    for (k, datum) in enumerate_data(f, r, m).enumerate() {
        if k > 0 {
            out.write_all(b",")?;
        }
        out.write_all(b"\n")?;
        serde_json::to_writer(&mut out, &datum)?;
    }
    out.write_all(b"\n]\n")?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Canon { vector } => canon(vector),
        Command::Pairs { vector } => pairs(vector),
        Command::Complement { vector } => complement(vector),
        Command::Flatten { matrix } => flatten(matrix),
        Command::LocalType { datum } => local_type_cmd(&datum),
        Command::EmbeddingType { mu, f, r } => embedding_type(&mu, f, r),
        Command::Verify {
            f_max,
            r_max,
            m_max,
            fr_max,
            jobs,
            report,
        } => verify(VerifyRange::new(f_max, r_max, m_max, fr_max, jobs)?, report),
        Command::Enumerate {
            f,
            r,
            m,
            count_only,
        } => enumerate(f, r, m, count_only),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("{}", json!({ "error": msg }));
            ExitCode::from(2)
        }
    }
}
