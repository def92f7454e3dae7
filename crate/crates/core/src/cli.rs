//! Command-line front end. `run` returns the process exit code:
//! 0 on success, 1 when a verification suite fails, 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::colored::{gamma_of, key_rep, rep_key, CanonicalKey};
use crate::corr::{enumerate_shapes, rep_to_shape};
use crate::enumerate::{embed_l2, embed_rank2, enumerate_reps, f_reduce, growth_table, indecomposables};
use crate::error::{Error, Result};
use crate::hall::{coproduct_of, HallAlgebra, HallElement};
use crate::quiver::{classify, Quiver};
use crate::rep::{is_indecomposable, Representation};
use crate::verify::{run_suite, Params, ASYMPTOTIC_NOTE};

#[derive(Parser, Debug)]
#[command(name = "f1rep", version, about = "Quiver representations over F1")]
pub struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List isomorphism classes up to a total dimension.
    Enumerate {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Include non-nilpotent classes.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Rows `n,NI` (and `I` with `--all`).
    NiTable {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Indecomposable classes up to a total dimension.
    Indecomposables {
        #[arg(long)]
        quiver: String,
        #[arg(long, default_value_t = 4)]
        max: usize,
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Hall product of two classes (hex keys or inline JSON representations).
    HallMul {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        dim_cap: Option<usize>,
        x: String,
        y: String,
    },
    /// Hall coproduct of one class.
    HallComul {
        #[arg(long)]
        quiver: String,
        x: String,
    },
    /// Shape of the underlying graph: tree, cycle, proper pseudotree or other.
    Classify {
        #[arg(long)]
        quiver: String,
    },
    /// The gluing functor `L_n -> L_{n-1}`.
    Reduce {
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Embed into a loop quiver, or with `--quiver` transport an `L_2`
    /// representation to a quiver of cycle rank at least 2.
    Embed {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        quiver: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Skew shapes with a given cell count, or the shape of a representation.
    Skew {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        cells: Option<usize>,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite and print a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        quiver: Option<String>,
        #[arg(long)]
        dim_cap: Option<usize>,
        #[arg(long)]
        max: Option<usize>,
        /// Include optional long-running checks.
        #[arg(long)]
        long: bool,
    },
    /// DOT for a representation's colored quiver, or for a quiver.
    Dot {
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        quiver: Option<String>,
    },
}

/// A quiver name, a JSON file, or inline JSON.
pub fn parse_quiver(s: &str) -> Result<Quiver> {
    if s.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(s)?);
    }
    if let Ok(q) = Quiver::named(s) {
        return Ok(q);
    }
    let text = std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
    Ok(serde_json::from_str(&text)?)
}

/// A representation from a JSON file or inline JSON.
pub fn parse_rep(s: &str) -> Result<Representation> {
    if s.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(s)?);
    }
    let text = std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
    Ok(serde_json::from_str(&text)?)
}

/// A class given by hex key or representation JSON.
fn parse_class(s: &str, q: &Quiver) -> Result<Representation> {
    if s.chars().all(|c| c.is_ascii_hexdigit()) && !s.is_empty() {
        return key_rep(&CanonicalKey::from_hex(s)?, q);
    }
    let r = parse_rep(s)?;
    if r.quiver() != q {
        return Err(Error::QuiverMismatch);
    }
    Ok(r)
}

fn warn_large(max: usize, err: &mut dyn Write) {
    if max > 8 {
        let _ = writeln!(err, "warning: total dimension {max} is above 8; enumeration is exponential");
    }
}

fn rep_output(r: &Representation, format: Format) -> Result<String> {
    Ok(match format {
        Format::Dot => gamma_of(r).to_dot(),
        Format::Json => serde_json::to_string_pretty(r)? + "\n",
        Format::Csv => return Err(Error::Parse("csv output is not available for a single representation".into())),
    })
}

fn dims_string(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

enum Outcome {
    Done(String),
    Verified(String, bool),
}

fn execute(cmd: Command, err: &mut dyn Write) -> Result<Outcome> {
    use Outcome::Done;
    match cmd {
        Command::Enumerate { quiver, max, all, format } => {
            let q = parse_quiver(&quiver)?;
            warn_large(max, err);
            let mut rows = Vec::new();
            for n in 0..=max {
                for d in q.dim_vectors(n) {
                    for r in enumerate_reps(&q, &d, !all)? {
                        rows.push((d.clone(), rep_key(&r), is_indecomposable(&r), r));
                    }
                }
            }
            match format {
                Format::Csv => {
                    let mut s = String::from("dims,key,indecomposable\n");
                    for (d, k, ind, _) in &rows {
                        writeln!(s, "{},{},{}", dims_string(d), k, ind).unwrap();
                    }
                    Ok(Done(s))
                }
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(d, k, ind, r)| json!({"dims": d, "key": k, "indecomposable": ind, "representative": r}))
                        .collect();
                    Ok(Done(serde_json::to_string_pretty(&v)? + "\n"))
                }
                Format::Dot => {
                    let mut s = String::new();
                    for (_, _, _, r) in &rows {
                        s += &gamma_of(r).to_dot();
                    }
                    Ok(Done(s))
                }
            }
        }
        Command::NiTable { quiver, max, all, format } => {
            let q = parse_quiver(&quiver)?;
            warn_large(max, err);
            let table = growth_table(&q, max, all);
            match format {
                Format::Json => {
                    let v: Vec<_> = table.iter().map(|(n, ni, i)| json!({"n": n, "ni": ni, "i": i})).collect();
                    Ok(Done(serde_json::to_string_pretty(&v)? + "\n"))
                }
                Format::Csv => {
                    let mut s = String::from(if all { "n,NI,I\n" } else { "n,NI\n" });
                    for (n, ni, i) in table {
                        match i {
                            Some(i) => writeln!(s, "{n},{ni},{i}").unwrap(),
                            None => writeln!(s, "{n},{ni}").unwrap(),
                        }
                    }
                    Ok(Done(s))
                }
                Format::Dot => Err(Error::Parse("dot output is not available for ni-table".into())),
            }
        }
        Command::Indecomposables { quiver, max, all, format } => {
            let q = parse_quiver(&quiver)?;
            warn_large(max, err);
            let mut reps = Vec::new();
            for n in 1..=max {
                for k in indecomposables(&q, n, !all) {
                    let r = key_rep(&k, &q)?;
                    reps.push((k, r));
                }
            }
            match format {
                Format::Json => {
                    let v: Vec<_> =
                        reps.iter().map(|(k, r)| json!({"key": k, "dims": r.dims(), "representative": r})).collect();
                    Ok(Done(serde_json::to_string_pretty(&v)? + "\n"))
                }
                Format::Csv => {
                    let mut s = String::from("dims,key\n");
                    for (k, r) in &reps {
                        writeln!(s, "{},{}", dims_string(r.dims()), k).unwrap();
                    }
                    Ok(Done(s))
                }
                Format::Dot => Ok(Done(reps.iter().map(|(_, r)| gamma_of(r).to_dot()).collect())),
            }
        }
        Command::HallMul { quiver, dim_cap, x, y } => {
            let q = parse_quiver(&quiver)?;
            let (a, b) = (parse_class(&x, &q)?, parse_class(&y, &q)?);
            let cap = dim_cap.unwrap_or(a.total_dim() + b.total_dim());
            warn_large(cap, err);
            let h = HallAlgebra::new(&q, cap)?;
            let p = h.product(&HallElement::basis(h.key_of(&a)?), &HallElement::basis(h.key_of(&b)?))?;
            Ok(Done(serde_json::to_string_pretty(&p.to_json())? + "\n"))
        }
        Command::HallComul { quiver, x } => {
            let q = parse_quiver(&quiver)?;
            let r = parse_class(&x, &q)?;
            if !crate::rep::is_nilpotent_rep(&r) {
                return Err(Error::NotNilpotent);
            }
            Ok(Done(serde_json::to_string_pretty(&coproduct_of(&r)?.to_json())? + "\n"))
        }
        Command::Classify { quiver } => {
            let q = parse_quiver(&quiver)?;
            Ok(Done(serde_json::to_string_pretty(&classify(&q)?)? + "\n"))
        }
        Command::Reduce { rep, format } => Ok(Done(rep_output(&f_reduce(&parse_rep(&rep)?)?, format)?)),
        Command::Embed { rep, quiver, format } => {
            let m = parse_rep(&rep)?;
            let out = match quiver {
                Some(q) => embed_rank2(&m, &parse_quiver(&q)?)?,
                None => embed_l2(&m)?,
            };
            Ok(Done(rep_output(&out, format)?))
        }
        Command::Skew { n, cells, rep, format } => {
            let shapes = match (cells, rep) {
                (Some(c), None) => enumerate_shapes(n, c),
                (None, Some(r)) => vec![rep_to_shape(&parse_rep(&r)?)?],
                _ => return Err(Error::Parse("give exactly one of --cells and --rep".into())),
            };
            match format {
                Format::Json => Ok(Done(serde_json::to_string_pretty(&shapes)? + "\n")),
                Format::Csv => Err(Error::Parse("csv output is not available for skew".into())),
                Format::Dot => Err(Error::Parse("dot output is not available for skew".into())),
            }
            .map(|o| match o {
                Done(s) if n == 2 && format == Format::Json => {
                    for sh in &shapes {
                        let _ = writeln!(err, "{}", sh.ascii());
                    }
                    Done(s)
                }
                o => o,
            })
        }
        Command::Verify { suite, quiver, dim_cap, max, long } => {
            let params = Params { quiver: quiver.as_deref().map(parse_quiver).transpose()?, dim_cap, max, long };
            if let Some(m) = max.or(dim_cap) {
                warn_large(m, err);
            }
            let reports = run_suite(&suite, &params)?;
            let pass = reports.iter().all(|r| r.pass);
            let _ = writeln!(err, "note: {ASYMPTOTIC_NOTE}");
            let body = json!({"pass": pass, "reports": reports});
            Ok(Outcome::Verified(serde_json::to_string_pretty(&body)? + "\n", pass))
        }
        Command::Dot { rep, quiver } => match (rep, quiver) {
            (Some(r), None) => Ok(Done(gamma_of(&parse_rep(&r)?).to_dot())),
            (None, Some(q)) => Ok(Done(parse_quiver(&q)?.to_dot())),
            _ => Err(Error::Parse("give exactly one of --rep and --quiver".into())),
        },
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("F1REP_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call fails harmlessly when the pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    configure_threads();
    let (text, code) = match execute(cli.command, err) {
        Ok(Outcome::Done(s)) => (s, 0),
        Ok(Outcome::Verified(s, pass)) => (s, if pass { 0 } else { 1 }),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    code
}
