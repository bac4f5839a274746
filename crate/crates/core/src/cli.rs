//! Command-line front end. Exit codes: 0 success, 1 a verification failed,
//! 2 bad usage or input outside the domain.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::family::{
    build_i, cayley_ball, reduce, relation_a, relation_b, relation_general, word_problem,
    CayleyBlock, GeneratorWord,
};
use crate::growth::{ball_and_word_growth, GrowthLimits, GrowthTable};
use crate::madic::act_integer;
use crate::series::{
    check_gamma_delta_identity, check_multisection, delta_recurrence, ln_big, ln_mahler_estimate,
    ln_mahler_f_estimate, limit_growth_s, limit_growth_sprime, mahler_bracket, partitions_table,
    second_diff_repetition_check, series_coeffs, slope_from_table,
};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mealy-growth", version, about = "Growth, normal forms and series of the automata I_m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Growth table of I_m by BFS, recurrence or series expansion
    Growth(GrowthArgs),
    /// Normal form of a word over f0, f1
    Reduce {
        #[arg(long)]
        m: usize,
        /// e.g. "f0 f1^2 f0"; the empty string is the identity
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two words define the same element (exit 1 if not)
    Wordproblem {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Check the defining relations as transducer identities
    Relations(RelationsArgs),
    /// Coefficients of the growth series S, Delta or Gamma
    Series(SeriesArgs),
    /// Partitions into sequential powers of m
    Partitions {
        #[arg(long)]
        m: usize,
        /// Single value; otherwise a table up to --max-n
        #[arg(long, conflicts_with = "max_n")]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Integer action of a word: f1 adds one, f0 maps q to q &_m (q+1)
    Act {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        word: String,
        #[arg(long)]
        input: BigUint,
    },
    /// Cayley graph ball or block E_i as DOT
    Cayley(CayleyArgs),
    /// Limit monoid growth against BFS of I_{n+2}
    Limits {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Slope diagnostic and Mahler estimates
    Asymptotics {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        /// Also evaluate the Mahler estimate of f at z
        #[arg(long)]
        z: Option<f64>,
    },
    /// Run the whole verification sweep
    VerifyAll {
        /// Restrict to these check numbers
        #[arg(long, value_delimiter = ',')]
        only: Vec<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Bfs,
    Recurrence,
    Series,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Ball,
    Word,
}

#[derive(Args, Debug)]
struct GrowthArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 10)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Method::Bfs)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Kind::Ball)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Budget of distinct elements for BFS
    #[arg(long, default_value_t = crate::growth::DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
}

#[derive(Args, Debug)]
struct RelationsArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    max_k: usize,
    /// General relation parameters p_{k+2},p_{k+1},p_k,...,p_1
    #[arg(long, value_delimiter = ',')]
    general: Option<Vec<BigUint>>,
    /// An arbitrary identity "lhs = rhs" to check as well
    #[arg(long)]
    custom: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    S,
    Delta,
    Gamma,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = Which::Gamma)]
    which: Which,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also check the exact identities up to --max-n (exit 1 on failure)
    #[arg(long)]
    identities: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "target")]
struct CayleyTarget {
    #[arg(long)]
    radius: Option<usize>,
    #[arg(long)]
    block: Option<usize>,
}

#[derive(Args, Debug)]
struct CayleyArgs {
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    target: CayleyTarget,
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::GrowthLimit { partial, .. } = &e {
                let _ = writeln!(err, "completed levels: {partial}");
            }
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("write failed: {e}"))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Growth(args) => growth(args, out),
        Command::Reduce { m, word } => {
            let w = GeneratorWord::parse(m, &word)?;
            crate::family::check_m(m)?;
            let nf = reduce(&w);
            writeln!(out, "{}", nf.to_json()).map_err(io)?;
            writeln!(out, "{nf}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Wordproblem { m, left, right } => {
            crate::family::check_m(m)?;
            let (l, r) = (GeneratorWord::parse(m, &left)?, GeneratorWord::parse(m, &right)?);
            let equal = word_problem(&l, &r)?;
            writeln!(out, "{}", if equal { "equal" } else { "different" }).map_err(io)?;
            writeln!(out, "left: {}", reduce(&l).to_json()).map_err(io)?;
            writeln!(out, "right: {}", reduce(&r).to_json()).map_err(io)?;
            Ok(if equal { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Relations(args) => relations(args, out),
        Command::Series(args) => series(args, out),
        Command::Partitions { m, n, max_n, format } => {
            let table = partitions_table(m, n.unwrap_or(max_n))?;
            match n {
                Some(0) => return Err(Error::Domain("partitions are counted for n >= 1".into())),
                Some(n) => writeln!(out, "{}", table[n]).map_err(io)?,
                None => {
                    let t = GrowthTable::new(
                        m,
                        crate::growth::GrowthKind::Word,
                        crate::growth::Provenance::Recurrence,
                        table,
                    );
                    write_table(&t, format, out)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Act { m, word, input } => {
            crate::family::check_m(m)?;
            let w = GeneratorWord::parse(m, &word)?;
            writeln!(out, "{}", act_integer(&w, &input)).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Cayley(args) => {
            let dot = match (args.target.radius, args.target.block) {
                (Some(r), _) => cayley_ball(args.m, r, GrowthLimits::default())?.to_dot(),
                (_, Some(i)) => CayleyBlock::build(args.m, i)?.to_dot(),
                _ => unreachable!("clap requires one target"),
            };
            out.write_all(dot.as_bytes()).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Limits { max_n } => limits(max_n, out),
        Command::Asymptotics { m, n, z } => asymptotics(m, n, z, out),
        Command::VerifyAll { only } => {
            let ids: Vec<usize> = if only.is_empty() {
                (1..=verify::CHECKS.len()).collect()
            } else {
                only
            };
            let mut failed = false;
            for id in ids {
                let outcome = verify::run(id)?;
                failed |= !outcome.passed;
                writeln!(
                    out,
                    "{} {:>2} {}: {}",
                    if outcome.passed { "PASS" } else { "FAIL" },
                    outcome.id,
                    outcome.title,
                    outcome.detail
                )
                .map_err(io)?;
            }
            Ok(if failed { EXIT_FAILED } else { EXIT_OK })
        }
    }
}

fn write_table(t: &GrowthTable, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{t}"),
        Format::Csv => write!(out, "{}", t.to_csv()),
        Format::Json => writeln!(out, "{}", t.to_json()),
    }
    .map_err(io)
}

fn growth(args: GrowthArgs, out: &mut dyn Write) -> Result<i32> {
    let GrowthArgs {
        m,
        max_n,
        method,
        kind,
        format,
        max_elements,
    } = args;
    crate::family::check_m(m)?;
    let pick = |ball: GrowthTable, word: GrowthTable| if kind == Kind::Ball { ball } else { word };
    let bfs = || -> Result<GrowthTable> {
        let (ball, word) = ball_and_word_growth(&build_i(m)?, &[0, 1, 2], max_n, GrowthLimits { max_elements })?;
        Ok(pick(ball, word))
    };
    let recurrence = || -> Result<GrowthTable> {
        let word = delta_recurrence(m, max_n)?;
        Ok(pick(word.partial_sums(), word))
    };
    let series = || -> Result<GrowthTable> {
        let s = series_coeffs(m, max_n)?;
        Ok(pick(s.gamma.to_table(), s.delta.to_table()))
    };
    let tables = match method {
        Method::Bfs => vec![bfs()?],
        Method::Recurrence => vec![recurrence()?],
        Method::Series => vec![series()?],
        Method::All => vec![bfs()?, recurrence()?, series()?],
    };
    let mismatch = tables[1..].iter().find_map(|t| tables[0].first_mismatch(t));
    match format {
        Format::Text if tables.len() == 1 => writeln!(out, "{}", tables[0]).map_err(io)?,
        Format::Text => {
            for t in &tables {
                writeln!(out, "{}: {t}", t.provenance.as_str()).map_err(io)?;
            }
        }
        Format::Csv if tables.len() == 1 => write!(out, "{}", tables[0].to_csv()).map_err(io)?,
        Format::Csv => {
            writeln!(out, "n,bfs,recurrence,series").map_err(io)?;
            for n in 0..=max_n {
                let row: Vec<String> = tables.iter().map(|t| t.values[n].to_string()).collect();
                writeln!(out, "{n},{}", row.join(",")).map_err(io)?;
            }
        }
        Format::Json if tables.len() == 1 => writeln!(out, "{}", tables[0].to_json()).map_err(io)?,
        Format::Json => {
            let json = serde_json::json!({
                "tables": tables.iter().map(GrowthTable::to_json).collect::<Vec<_>>(),
                "agree": mismatch.is_none(),
            });
            writeln!(out, "{json}").map_err(io)?;
        }
    }
    if tables.len() > 1 && format == Format::Text {
        match mismatch {
            None => writeln!(out, "agree").map_err(io)?,
            Some(n) => writeln!(out, "mismatch at n = {n}").map_err(io)?,
        }
    }
    Ok(if mismatch.is_some() { EXIT_FAILED } else { EXIT_OK })
}

fn check_pair(label: &str, pair: (GeneratorWord, GeneratorWord), out: &mut dyn Write) -> Result<bool> {
    let (lhs, rhs) = pair;
    let ok = lhs.to_transformation()?.key() == rhs.to_transformation()?.key();
    writeln!(out, "{label}: {lhs} = {rhs}: {}", if ok { "ok" } else { "FAILED" }).map_err(io)?;
    Ok(ok)
}

fn relations(args: RelationsArgs, out: &mut dyn Write) -> Result<i32> {
    let m = args.m;
    crate::family::check_m(m)?;
    let mut ok = true;
    for k in 0..=args.max_k {
        for p in 1..m {
            ok &= check_pair(&format!("R_A(k={k},p={p})"), relation_a(m, k, p)?, out)?;
        }
        ok &= check_pair(&format!("R_B(k={k})"), relation_b(m, k)?, out)?;
    }
    if let Some(params) = &args.general {
        let list: Vec<String> = params.iter().map(ToString::to_string).collect();
        ok &= check_pair(&format!("general({})", list.join(",")), relation_general(m, params)?, out)?;
    }
    if let Some(custom) = &args.custom {
        let (l, r) = custom
            .split_once('=')
            .ok_or_else(|| Error::Parse("custom relation must look like \"lhs = rhs\"".into()))?;
        let pair = (GeneratorWord::parse(m, l)?, GeneratorWord::parse(m, r)?);
        ok &= check_pair("custom", pair, out)?;
    }
    writeln!(out, "{}", if ok { "all relations hold" } else { "some relation failed" }).map_err(io)?;
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn series(args: SeriesArgs, out: &mut dyn Write) -> Result<i32> {
    let s = series_coeffs(args.m, args.max_n)?;
    let coeffs = match args.which {
        Which::S => &s.s,
        Which::Delta => &s.delta,
        Which::Gamma => &s.gamma,
    };
    write_table(&coeffs.to_table(), args.format, out)?;
    if !args.identities {
        return Ok(EXIT_OK);
    }
    let checks = [
        ("gamma-delta", check_gamma_delta_identity(args.m, args.max_n)?),
        ("multisection", check_multisection(args.m, args.max_n)?),
        ("repetition", second_diff_repetition_check(args.m, args.max_n)?),
    ];
    let mut ok = true;
    for (name, verdict) in &checks {
        ok &= verdict.holds();
        writeln!(out, "{name}: {verdict}").map_err(io)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn limits(max_n: usize, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "n,bfs_I_(n+2),S,S_prime").map_err(io)?;
    let mut ok = true;
    for n in 0..=max_n {
        let (ball, _) = ball_and_word_growth(&build_i(n + 2)?, &[0, 1, 2], n, GrowthLimits::default())?;
        let s = limit_growth_s(n as u64);
        ok &= ball.values[n] == s;
        writeln!(out, "{n},{},{s},{}", ball.values[n], limit_growth_sprime(n as u64)).map_err(io)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn asymptotics(m: usize, n: usize, z: Option<f64>, out: &mut dyn Write) -> Result<i32> {
    let delta = delta_recurrence(m, n)?.values;
    let ln_estimate = ln_mahler_estimate(m, n as f64)?;
    writeln!(out, "m = {m}, N = {n}").map_err(io)?;
    writeln!(out, "ln delta(N) = {:.6}", ln_big(&delta[n])).map_err(io)?;
    writeln!(out, "ln N^(ln N / 2 ln m) = {ln_estimate:.6}").map_err(io)?;
    writeln!(out, "slope = {:.6}", slope_from_table(m, &delta, n)).map_err(io)?;
    if let Some(z) = z {
        let bracket = mahler_bracket(m, z)?;
        writeln!(out, "bracket n at z = {z}: {bracket}").map_err(io)?;
        writeln!(out, "ln f(z) estimate = {:.6}", ln_mahler_f_estimate(m, z)?).map_err(io)?;
    }
    Ok(EXIT_OK)
}
