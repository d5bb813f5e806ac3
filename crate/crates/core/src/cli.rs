//! The `ordo` command line.
//!
//! Exit codes: 0 on success, 1 when a cross-check or selftest fails, 2 on
//! usage and parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::algebra::{multiply_basis, MonomialIndex};
use crate::bench::{run_bench, BenchConfig};
use crate::oracle::{Rewriter, DEFAULT_REWRITE_LIMIT};
use crate::parser::{parse, ParseError};
use crate::render::render_board;
use crate::rook::rook_numbers;
use crate::selftest::selftest;
use crate::word_path::{FerrersBoard, Word};

pub const LIMIT_ENV: &str = "ORDO_REWRITE_LIMIT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ordo",
    version,
    about = "Normal ordering in the Heisenberg-Weyl algebra via rook numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Emit CSV (bench only).
    #[arg(long, global = true)]
    pub csv: bool,

    /// Word-length cap for the naive rewriter; overrides ORDO_REWRITE_LIMIT.
    #[arg(long, global = true, value_name = "N")]
    pub limit: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal-order an expression such as "aAaAAAaAa" or "(a+A)^2".
    Normalize {
        expr: String,
        /// Also run the naive rewriter on plain words and compare.
        #[arg(long)]
        check: bool,
    },
    /// Rook numbers of a word's board, or of "heights:h1,h2,...".
    Rook { spec: String },
    /// Draw a word's staircase path and Ferrers board.
    Board { word: String },
    /// Product A^r a^s * A^k a^l with its structure constants.
    Mul {
        #[arg(allow_hyphen_values = true)]
        r: i64,
        #[arg(allow_hyphen_values = true)]
        s: i64,
        #[arg(allow_hyphen_values = true)]
        k: i64,
        #[arg(allow_hyphen_values = true)]
        l: i64,
    },
    /// Time the rook route against naive rewriting on random words.
    Bench {
        max_len: usize,
        trials: usize,
        #[arg(long, default_value_t = BenchConfig::default().seed)]
        seed: u64,
    },
    /// Exhaustive oracle sweep plus the golden cases.
    Selftest,
}

/// `--limit` wins over the environment, which wins over the default.
pub fn resolve_limit(flag: Option<usize>, env: Option<&str>) -> Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match env {
        None => Ok(DEFAULT_REWRITE_LIMIT),
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("invalid {LIMIT_ENV} value {v:?}")),
    }
}

fn parse_diagnostic(input: &str, err: &ParseError) -> String {
    let column = input[..err.offset().min(input.len())].chars().count();
    format!("error: {err}\n  {input}\n  {}^\n", " ".repeat(column))
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn fail(&mut self, code: i32, msg: &str) -> i32 {
        let _ = write!(self.err, "{msg}");
        if !msg.ends_with('\n') {
            let _ = writeln!(self.err);
        }
        code
    }

    fn print(&mut self, text: &str) -> i32 {
        let _ = write!(self.out, "{text}");
        if !text.ends_with('\n') {
            let _ = writeln!(self.out);
        }
        EXIT_OK
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env = std::env::var(LIMIT_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

pub fn run_with_env<I, T>(
    args: I,
    limit_env: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                io.print(&text)
            } else {
                io.fail(code, &text)
            };
        }
    };
    let limit = match resolve_limit(cli.limit, limit_env) {
        Ok(n) => n,
        Err(msg) => return io.fail(EXIT_USAGE, &format!("error: {msg}")),
    };
    let rewriter = Rewriter::with_limit(limit);

    match cli.command {
        Command::Normalize { expr, check } => normalize(&mut io, &expr, check, cli.json, &rewriter),
        Command::Rook { spec } => rook(&mut io, &spec, cli.json),
        Command::Board { word } => board(&mut io, &word, cli.json),
        Command::Mul { r, s, k, l } => mul(&mut io, [r, s, k, l], cli.json),
        Command::Bench {
            max_len,
            trials,
            seed,
        } => {
            let config = BenchConfig {
                max_len,
                trials,
                seed,
                rewriter,
            };
            match run_bench(&config) {
                Err(e) => io.fail(EXIT_USAGE, &format!("error: {e}")),
                Ok(report) => {
                    let text = if cli.csv {
                        report.to_csv()
                    } else {
                        report.to_text()
                    };
                    io.print(&text);
                    if report.mismatches() > 0 {
                        io.fail(EXIT_MISMATCH, "error: rook route and rewriter disagree")
                    } else {
                        EXIT_OK
                    }
                }
            }
        }
        Command::Selftest => {
            let report = selftest();
            io.print(&report.to_string());
            if report.passed() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
    }
}

fn normalize(io: &mut Io<'_>, input: &str, check: bool, json: bool, rewriter: &Rewriter) -> i32 {
    let expr = match parse(input) {
        Ok(e) => e,
        Err(e) => return io.fail(EXIT_USAGE, &parse_diagnostic(input, &e)),
    };
    let nf = expr.eval();
    if check {
        match expr.as_word() {
            None => {
                let _ = writeln!(io.err, "note: --check applies to plain words only");
            }
            Some(word) => match rewriter.rewrite(&word) {
                Err(e) => return io.fail(EXIT_USAGE, &format!("error: {e}")),
                Ok(oracle) if oracle != nf => {
                    return io.fail(
                        EXIT_MISMATCH,
                        &format!("error: rewriter gives {oracle}, rook route gives {nf}"),
                    )
                }
                Ok(_) => {}
            },
        }
    }
    if json {
        io.print(&nf.to_json().to_string())
    } else {
        io.print(&nf.to_string())
    }
}

fn rook(io: &mut Io<'_>, spec: &str, json: bool) -> i32 {
    let board = if let Some(heights) = spec.strip_prefix("heights:") {
        match heights.parse::<FerrersBoard>() {
            Ok(b) => b,
            Err(e) => return io.fail(EXIT_USAGE, &format!("error: malformed spec: {e}")),
        }
    } else {
        match spec.parse::<Word>() {
            Ok(w) => w.board(),
            Err(e) => {
                return io.fail(
                    EXIT_USAGE,
                    &format!("error: malformed spec: expected a word or heights:h1,h2,...: {e}"),
                )
            }
        }
    };
    let rv = rook_numbers(&board);
    if json {
        let doc = json!({
            "board": board.to_string(),
            "rook_numbers": rv.to_json(),
            "polynomial": rv.to_polynomial_string(),
        });
        io.print(&doc.to_string())
    } else {
        io.print(&format!(
            "{}\n{}\n",
            rv.to_list_string(),
            rv.to_polynomial_string()
        ))
    }
}

fn board(io: &mut Io<'_>, input: &str, json: bool) -> i32 {
    let word: Word = match input.parse() {
        Ok(w) => w,
        Err(e) => return io.fail(EXIT_USAGE, &format!("error: not a word: {e}")),
    };
    if json {
        let b = word.board();
        let doc = json!({
            "word": word.to_string(),
            "path": word.encode_path().to_string(),
            "board": b.to_string(),
            "cells": b.cell_count(),
        });
        io.print(&doc.to_string())
    } else {
        io.print(&render_board(&word))
    }
}

fn mul(io: &mut Io<'_>, args: [i64; 4], json: bool) -> i32 {
    let mut idx = [0usize; 4];
    for (slot, (v, name)) in idx
        .iter_mut()
        .zip(args.into_iter().zip(["r", "s", "k", "l"]))
    {
        match usize::try_from(v) {
            Ok(n) => *slot = n,
            Err(_) => {
                return io.fail(
                    EXIT_USAGE,
                    &format!("error: {name} must be nonnegative, got {v}"),
                )
            }
        }
    }
    let [r, s, k, l] = idx;
    let product = multiply_basis(MonomialIndex::new(r, s), MonomialIndex::new(k, l));
    // terms() ascends, so reversing lists i = 0, 1, ...
    let gammas: Vec<(usize, MonomialIndex, String)> = product
        .terms()
        .rev()
        .enumerate()
        .map(|(i, (m, c))| (i, m, c.to_string()))
        .collect();
    if json {
        let mut doc = product.to_json();
        doc["gammas"] = gammas
            .iter()
            .map(|(i, m, c)| json!({"i": i, "r": m.r, "s": m.s, "gamma": c}))
            .collect();
        io.print(&doc.to_string())
    } else {
        let mut text = format!("{product}\n");
        for (i, m, c) in gammas {
            text.push_str(&format!("  i={i}  gamma = {c}  {m}\n"));
        }
        io.print(&text)
    }
}
