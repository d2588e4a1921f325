//! `socle`: enumeration, tables, drawings and self-checks for the penultimate
//! cell and bigrassmannian permutations of `S_n`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use socle_core::bigrass::bigrassmannian_rows;
use socle_core::cells::{cell_bruhat_adjacent, cell_rows, penultimate_cell};
use socle_core::fulton::{essential_set, rank_table, render_coranks, render_diagram};
use socle_core::hecke::KlTable;
use socle_core::homology::{ext1_table, socle_between, socle_graded, GradedSimple, WallSet};
use socle_core::perm::parse_permutation;
use socle_core::tetrahedron::Tetrahedron;
use socle_core::verify::{self, Suite, ORACLE_MAX_N};
use socle_core::Permutation;

const MIN_N: usize = 2;
const MAX_N: usize = 9;

#[derive(Debug, Parser)]
#[command(name = "socle", version, about = "Socles of Verma quotients in type A, computed combinatorially")]
struct Cli {
    /// Rank n of S_n
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Output format (each command supports a subset)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
    /// Singular walls, e.g. 1,3
    #[arg(long, global = true, value_name = "LIST")]
    walls: Option<String>,
    /// Lift the size guard on oracle verification
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    Svg,
    Tikz,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the bigrassmannian permutations b(i,j,k)
    Bigrassmannian,
    /// List the penultimate cell w_{i,j} with closed-form p_{e,w_{i,j}}
    Cell {
        /// List Bruhat-adjacent pairs instead
        #[arg(long)]
        edges: bool,
    },
    /// KL polynomial p_{x,w}, or the full table of S_n
    Kl {
        x: Option<String>,
        w: Option<String>,
    },
    /// Essential set, co-rank table and diagram of w
    Essential { w: String },
    /// Graded socle of Δ_e/Δ_w, or of Δ_v/Δ_w with --from v
    Socle {
        w: String,
        #[arg(long, value_name = "V")]
        from: Option<String>,
    },
    /// Table of dim Ext^1(L_x, Δ_y)
    Ext,
    /// Tetrahedron of J-subquotients
    Tetrahedron {
        /// Color the points for Δ_e/Δ_w
        #[arg(long, value_name = "W")]
        highlight: Option<String>,
    },
    /// Run self-check suites
    Verify {
        #[arg(long, default_value = "all", value_parser = ["all", "counting", "oracle", "socle", "ext"])]
        suite: String,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<socle_core::Error> for Failure {
    fn from(e: socle_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(report)) => {
            let _ = emit(&cli, &report);
            eprintln!("socle: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("socle: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| usage(format!("cannot write output: {e}")))
        }
    }
}

fn run(cli: &Cli) -> CliResult<()> {
    let text = match &cli.command {
        Command::Bigrassmannian => cmd_bigrassmannian(cli)?,
        Command::Cell { edges } => cmd_cell(cli, *edges)?,
        Command::Kl { x, w } => cmd_kl(cli, x.as_deref(), w.as_deref())?,
        Command::Essential { w } => cmd_essential(cli, w)?,
        Command::Socle { w, from } => cmd_socle(cli, w, from.as_deref())?,
        Command::Ext => cmd_ext(cli)?,
        Command::Tetrahedron { highlight } => cmd_tetrahedron(cli, highlight.as_deref())?,
        Command::Verify { suite } => return cmd_verify(cli, suite),
    };
    emit(cli, &text)
}

fn rank(cli: &Cli, min: usize) -> CliResult<usize> {
    let n = cli.n.ok_or_else(|| usage("--n is required for this command"))?;
    if !(min..=MAX_N).contains(&n) {
        return Err(usage(format!("--n must lie in {min}..={MAX_N}, got {n}")));
    }
    Ok(n)
}

fn permutation(cli: &Cli, s: &str) -> CliResult<Permutation> {
    Ok(parse_permutation(s, cli.n)?)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> CliResult<Format> {
    let f = cli.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(format!("format {f:?} is not supported by this command").to_lowercase()))
    }
}

fn json_string(value: &impl serde::Serialize) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> CliResult<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| usage(e.to_string());
    writer.write_record(header).map_err(io_err)?;
    for row in rows {
        writer.write_record(row).map_err(io_err)?;
    }
    let bytes = writer.into_inner().map_err(|e| usage(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| usage(e.to_string()))
}

/// Left-aligned columns separated by two spaces.
fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ");
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn tabular(format: Format, header: &[&str], rows: &[Vec<String>], json_value: impl serde::Serialize) -> CliResult<String> {
    match format {
        Format::Json => json_string(&json_value),
        Format::Csv => csv_string(header, rows),
        _ => Ok(text_table(header, rows)),
    }
}

const TABLE_FORMATS: &[Format] = &[Format::Json, Format::Csv, Format::Text];

fn cmd_bigrassmannian(cli: &Cli) -> CliResult<String> {
    let n = rank(cli, MIN_N)?;
    let format = format_or(cli, Format::Text, TABLE_FORMATS)?;
    let data = bigrassmannian_rows(n);
    let header = ["i", "j", "k", "perm", "length", "left_descent", "right_descent", "phi"];
    let rows: Vec<Vec<String>> = data
        .iter()
        .map(|r| {
            vec![
                r.i.to_string(),
                r.j.to_string(),
                r.k.to_string(),
                r.perm.to_string(),
                r.length.to_string(),
                r.left_descent.to_string(),
                r.right_descent.to_string(),
                r.phi.as_ref().map(ToString::to_string).unwrap_or_default(),
            ]
        })
        .collect();
    tabular(format, &header, &rows, &data)
}

fn cmd_cell(cli: &Cli, edges: bool) -> CliResult<String> {
    let n = rank(cli, 3)?;
    let format = format_or(cli, Format::Text, TABLE_FORMATS)?;
    if edges {
        let cell = penultimate_cell(n)?;
        let mut pairs = Vec::new();
        for (a_idx, a) in cell.elements().iter().enumerate() {
            for b in &cell.elements()[a_idx + 1..] {
                if cell_bruhat_adjacent(a, b)? {
                    pairs.push(vec![a.i.to_string(), a.j.to_string(), b.i.to_string(), b.j.to_string()]);
                }
            }
        }
        let value: Vec<_> = pairs
            .iter()
            .map(|p| json!({"from": [p[0].parse::<usize>().unwrap(), p[1].parse::<usize>().unwrap()],
                            "to": [p[2].parse::<usize>().unwrap(), p[3].parse::<usize>().unwrap()]}))
            .collect();
        return tabular(format, &["i", "j", "i2", "j2"], &pairs, value);
    }
    let data = cell_rows(n)?;
    let rows: Vec<Vec<String>> = data
        .iter()
        .map(|r| vec![r.i.to_string(), r.j.to_string(), r.perm.to_string(), r.length.to_string(), r.p.to_string()])
        .collect();
    tabular(format, &["i", "j", "perm", "length", "p"], &rows, &data)
}

fn cmd_kl(cli: &Cli, x: Option<&str>, w: Option<&str>) -> CliResult<String> {
    let format = format_or(cli, Format::Text, TABLE_FORMATS)?;
    match (x, w) {
        (Some(x), Some(w)) => {
            let (x, w) = (permutation(cli, x)?, permutation(cli, w)?);
            if x.rank() != w.rank() {
                return Err(usage(format!("rank mismatch: {} vs {}", x.rank(), w.rank())));
            }
            guard_oracle(cli, x.rank())?;
            let table = KlTable::new(x.rank())?;
            let p = table.kl_polynomial(&x, &w)?;
            let mu = table.mu(&x, &w)?;
            let rows = vec![vec![x.to_string(), w.to_string(), p.to_string(), mu.to_string()]];
            tabular(format, &["x", "w", "p", "mu"], &rows, json!({"x": x, "w": w, "p": p, "mu": mu}))
        }
        (None, None) => {
            let n = rank(cli, MIN_N)?;
            guard_oracle(cli, n)?;
            let dump = KlTable::new(n)?.dump();
            let rows: Vec<Vec<String>> = dump
                .iter()
                .map(|r| vec![r.x.to_string(), r.w.to_string(), r.p.to_string()])
                .collect();
            tabular(format, &["x", "w", "p"], &rows, &dump)
        }
        _ => Err(usage("kl takes either no permutations or both x and w")),
    }
}

fn guard_oracle(cli: &Cli, n: usize) -> CliResult<()> {
    if n > ORACLE_MAX_N && !cli.force {
        return Err(socle_core::Error::RankAboveLimit {
            what: "the KL table",
            n,
            max: ORACLE_MAX_N,
        }
        .into());
    }
    Ok(())
}

fn cmd_essential(cli: &Cli, w: &str) -> CliResult<String> {
    let w = permutation(cli, w)?;
    let format = format_or(cli, Format::Text, &[Format::Json, Format::Text])?;
    let ess = essential_set(&w);
    match format {
        Format::Json => {
            let table = rank_table(&w);
            let n = w.rank();
            let coranks: Vec<Vec<usize>> = (1..=n).map(|i| (1..=n).map(|j| table.corank(i, j)).collect()).collect();
            json_string(&json!({"w": w, "essential": ess, "coranks": coranks}))
        }
        _ => {
            let mut out = format!("w = {w}\nessential set (i, j, t):");
            for c in &ess {
                out.push_str(&format!(" ({}, {}, {})", c.i, c.j, c.corank));
            }
            out.push_str("\n\ndiagram:\n");
            out.push_str(&render_diagram(&w));
            out.push_str("\nco-ranks:\n");
            out.push_str(&render_coranks(&w));
            Ok(out)
        }
    }
}

#[derive(serde::Serialize)]
struct SocleReport<'a> {
    w: &'a Permutation,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<&'a Permutation>,
    socle: &'a [GradedSimple],
}

fn cmd_socle(cli: &Cli, w: &str, from: Option<&str>) -> CliResult<String> {
    let w = permutation(cli, w)?;
    if w.rank() < 3 {
        return Err(usage("socle needs n >= 3"));
    }
    let format = format_or(cli, Format::Text, TABLE_FORMATS)?;
    let (v, socle): (Option<Permutation>, Vec<GradedSimple>) = match from {
        Some(v) => {
            let v = parse_permutation(v, Some(w.rank()))?;
            let s = socle_between(&v, &w)?;
            (Some(v), s)
        }
        None => (None, socle_graded(&w)?),
    };
    let rows: Vec<Vec<String>> = socle
        .iter()
        .map(|g| vec![g.i().to_string(), g.j().to_string(), g.shift.to_string(), g.cell.perm.to_string()])
        .collect();
    let value = SocleReport { w: &w, v: v.as_ref(), socle: &socle };
    tabular(format, &["i", "j", "shift", "perm"], &rows, value)
}

fn cmd_ext(cli: &Cli) -> CliResult<String> {
    let n = rank(cli, 3)?;
    let format = format_or(cli, Format::Csv, TABLE_FORMATS)?;
    let walls = match &cli.walls {
        Some(s) => WallSet::parse(n, s)?,
        None => WallSet::empty(n),
    };
    let table = ext1_table(n, &walls)?;
    let header_cells: Vec<String> = std::iter::once("x".to_string())
        .chain(table.cols.iter().map(ToString::to_string))
        .collect();
    let header: Vec<&str> = header_cells.iter().map(String::as_str).collect();
    let rows: Vec<Vec<String>> = table
        .rows
        .iter()
        .zip(&table.entries)
        .map(|(x, row)| std::iter::once(x.to_string()).chain(row.iter().map(ToString::to_string)).collect())
        .collect();
    let walls_list: Vec<usize> = walls.iter().collect();
    tabular(format, &header, &rows, json!({"n": n, "walls": walls_list, "rows": table.rows, "cols": table.cols, "entries": table.entries}))
}

fn cmd_tetrahedron(cli: &Cli, highlight: Option<&str>) -> CliResult<String> {
    let n = rank(cli, 3)?;
    let format = format_or(cli, Format::Svg, &[Format::Svg, Format::Tikz, Format::Json, Format::Text])?;
    let tet = match highlight {
        Some(w) => Tetrahedron::highlighted(n, &parse_permutation(w, Some(n))?)?,
        None => Tetrahedron::new(n)?,
    };
    match format {
        Format::Svg => Ok(tet.to_svg()),
        Format::Tikz => Ok(tet.to_tikz()),
        Format::Json => json_string(&tet),
        _ => Ok(tet.to_text()),
    }
}

fn cmd_verify(cli: &Cli, suite: &str) -> CliResult<()> {
    let n = cli.n.ok_or_else(|| usage("--n is required for verify"))?;
    if n < MIN_N {
        return Err(usage(format!("--n must be at least {MIN_N}")));
    }
    let format = format_or(cli, Format::Text, &[Format::Json, Format::Text])?;
    let suite: Suite = suite.parse()?;
    let results = verify::run(n, suite, cli.force)?;
    let report = match format {
        Format::Json => json_string(&results)?,
        _ => {
            let mut s: String = results.iter().map(|r| format!("{r}\n")).collect();
            let passed = results.iter().filter(|r| r.passed).count();
            s.push_str(&format!("{passed}/{} checks passed at n = {n}\n", results.len()));
            s
        }
    };
    if verify::failures(&results).is_empty() {
        emit(cli, &report)
    } else {
        Err(Failure::Verification(report))
    }
}
