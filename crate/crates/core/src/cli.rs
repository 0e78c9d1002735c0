//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on malformed
//! input. Data goes to `out`, diagnostics to `err`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::autos::{abelianization, gama_phi1_det, induced_map, jac_det, map_to_json, NielsenWord};
use crate::error::{Error, Result};
use crate::ideal::ideal_generators;
use crate::numerics::{fmt12, verify, witness, VerifyKind};
use crate::trace::TraceEngine;
use crate::words::Word;
use crate::{basis, check_rank, MAX_IDEAL_RANK};

#[derive(Debug, Parser)]
#[command(
    name = "fricke",
    version,
    about = "Trace coordinates for SL(2,C) characters of free groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the basic words of rank N in coordinate order.
    BasicWords {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Print the trace polynomial of a word such as `A^-1B^2C`.
    Trace {
        #[arg(short = 'n')]
        n: usize,
        word: String,
        /// Expand without memoizing intermediate traces.
        #[arg(long)]
        no_cache: bool,
    },
    /// Print the generators of the ideal of relations, one per line.
    Ideal {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the map induced by a Nielsen word over T, T', P, R, I.
    ///
    /// Moves apply left to right to group elements; `TP` twists, then swaps.
    Map {
        #[arg(short = 'n')]
        n: usize,
        nielsen: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the Jacobian determinant of the map induced by a Nielsen word.
    Jacdet {
        #[arg(short = 'n')]
        n: usize,
        nielsen: String,
    },
    /// Print the action of a Nielsen word on the abelianization and its determinant.
    Abelianize {
        #[arg(short = 'n')]
        n: usize,
        nielsen: String,
    },
    /// Run numeric checks and print a JSON report.
    Verify {
        /// One of ideal, equivariance, magnus, jacobian-rank.
        #[arg(long)]
        kind: String,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Evaluate the completion conditions and the rank-four Jacobian rank at the witness matrices.
    Witness {
        /// Seed for the fourth matrix appended for the rank check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Jacobian determinant of the twist after eliminating `abcd` at rank four.
    GamaControl,
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure { input, error }) => {
            let _ = writeln!(err, "error: {error}");
            if let (Some(text), Error::Parse { pos, .. }) = (input, &error) {
                let _ = writeln!(err, "  {text}");
                let col = text.get(..*pos).map_or(*pos, |p| p.chars().count());
                let _ = writeln!(err, "  {}^", " ".repeat(col));
            }
            2
        }
    }
}

struct Failure {
    input: Option<String>,
    error: Error,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure { input: None, error }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            input: None,
            error: Error::Unsupported(format!("output failed: {e}")),
        }
    }
}

fn with_input<T>(text: &str, r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|error| Failure {
        input: Some(text.to_string()),
        error,
    })
}

fn json_line(out: &mut dyn Write, v: &serde_json::Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json value serializes")
    )
}

fn execute(cmd: Command, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match cmd {
        Command::BasicWords { n } => {
            check_rank(n)?;
            let b = basis(n);
            for (i, name) in b.names().iter().enumerate() {
                let role = if i < b.foundation_len() {
                    "foundation"
                } else {
                    "target"
                };
                writeln!(out, "{} {} {}", i + 1, name, role)?;
            }
        }
        Command::Trace { n, word, no_cache } => {
            check_rank(n)?;
            let w = with_input(&word, Word::parse(n, &word))?;
            let mut engine = if no_cache {
                TraceEngine::uncached(n)?
            } else {
                TraceEngine::new(n)?
            };
            writeln!(out, "{}", engine.trace(&w)?)?;
        }
        Command::Ideal { n, json } => {
            check_rank(n)?;
            if n > MAX_IDEAL_RANK {
                return Err(Error::Unsupported(format!(
                    "ideal generators are built up to rank {MAX_IDEAL_RANK}"
                ))
                .into());
            }
            let ideal = ideal_generators(n)?;
            if json {
                json_line(out, &ideal.to_json())?;
            } else {
                for p in ideal.polynomials() {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Map { n, nielsen, json } => {
            let w = with_input(&nielsen, NielsenWord::parse(&nielsen))?;
            let m = induced_map(&w, n)?;
            if json {
                json_line(out, &map_to_json(&w, &m))?;
            } else {
                write!(out, "{m}")?;
            }
        }
        Command::Jacdet { n, nielsen } => {
            let w = with_input(&nielsen, NielsenWord::parse(&nielsen))?;
            writeln!(out, "{}", jac_det(&induced_map(&w, n)?)?)?;
        }
        Command::Abelianize { n, nielsen } => {
            let w = with_input(&nielsen, NielsenWord::parse(&nielsen))?;
            let m = abelianization(&w, n)?;
            write!(out, "{m}")?;
            writeln!(out, "det {}", m.det())?;
        }
        Command::Verify {
            kind,
            n,
            samples,
            seed,
            tol,
        } => {
            let kind: VerifyKind = kind.parse()?;
            if let Some(t) = tol.filter(|t| t.is_nan() || *t <= 0.0) {
                return Err(
                    Error::Unsupported(format!("tolerance must be positive, got {t}")).into(),
                );
            }
            let report = verify(kind, n, samples, tol, seed)?;
            json_line(
                out,
                &serde_json::to_value(&report).expect("report serializes"),
            )?;
            if !report.pass {
                return Ok(1);
            }
        }
        Command::Witness { seed, json } => {
            let w = witness(seed)?;
            if json {
                json_line(out, &serde_json::to_value(&w).expect("report serializes"))?;
            } else {
                writeln!(out, "tr[A1,A2] = {}", fmt12(w.commutator))?;
                writeln!(out, "discriminant = {}", fmt12(w.discriminant))?;
                writeln!(out, "commutator_ok = {}", w.commutator_ok)?;
                writeln!(out, "discriminant_ok = {}", w.discriminant_ok)?;
                writeln!(out, "rank = {}", w.rank)?;
                writeln!(out, "dimension = {}", w.dimension)?;
                for (label, r) in &w.decomposition_ranks {
                    writeln!(out, "rank[{label}] = {r}")?;
                }
            }
            if !(w.commutator_ok && w.discriminant_ok) {
                return Ok(1);
            }
        }
        Command::GamaControl => {
            let d = gama_phi1_det()?;
            writeln!(out, "{d}")?;
            writeln!(out, "integral = {}", d.is_integral())?;
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("fricke").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn trace_square() {
        assert_eq!(
            call(&["trace", "-n", "2", "A^2"]),
            (0, "a^2 - 2\n".into(), String::new())
        );
        assert_eq!(
            call(&["trace", "-n", "2", "--no-cache", "A^2"]).1,
            "a^2 - 2\n"
        );
    }

    #[test]
    fn jacdet_twist() {
        assert_eq!(call(&["jacdet", "-n", "4", "T"]).1, "1\n");
    }

    #[test]
    fn malformed_word_points_at_position() {
        let (code, out, err) = call(&["trace", "-n", "2", "AB?"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("position 2"), "{err}");
        assert!(err.ends_with("  AB?\n    ^\n"), "{err}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["trace"]).0, 2);
        assert_eq!(call(&["trace", "-n", "11", "A"]).0, 2);
        assert_eq!(call(&["map", "-n", "3", "TQ"]).0, 2);
        assert_eq!(call(&["verify", "--kind", "volume", "-n", "3"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("gama-control"));
    }

    #[test]
    fn ideal_rank_three_round_trips() {
        let (code, out, _) = call(&["ideal", "-n", "3"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 1);
        let p = crate::Polynomial::parse(3, lines[0]).unwrap();
        assert_eq!(p.to_string(), lines[0]);
    }

    #[test]
    fn abelianize_prints_matrix_and_det() {
        assert_eq!(
            call(&["abelianize", "-n", "2", "P"]).1,
            "0 1\n1 0\ndet -1\n"
        );
    }
}
