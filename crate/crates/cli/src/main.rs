use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use crystal_rmatrix::crystal::{enumerate, indices};
use crystal_rmatrix::insertion::Inserter;
use crystal_rmatrix::oracle::verify;
use crystal_rmatrix::{r_apply, Affine, Crystal, Element, Family, Letter, Tableau, TensorElement};

#[derive(Parser)]
#[command(name = "crystal-rmatrix", version, about = "Combinatorial R matrix and energy for one-row affine crystals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FamArgs {
    /// Affine family tag: A2, D2, C1, B1 or D1.
    #[arg(long)]
    fam: Affine,
    /// Rank of the classical part.
    #[arg(long)]
    n: u8,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply the R matrix to b1 ⊗ b2 in B_l ⊗ B_k.
    Apply {
        #[command(flatten)]
        fam: FamArgs,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: u32,
        /// Coordinates of b1, e.g. "[0,0,2,o=1,2,0,0]".
        #[arg(long, allow_hyphen_values = true)]
        b1: String,
        #[arg(long, allow_hyphen_values = true)]
        b2: String,
        #[arg(long)]
        json: bool,
    },
    /// List every element of B_l, one per line.
    Enumerate {
        #[command(flatten)]
        fam: FamArgs,
        #[arg(long)]
        l: u32,
    },
    /// Crystal graph of B_l, or of B_l ⊗ B_k when --k is given, in DOT.
    Graph {
        #[command(flatten)]
        fam: FamArgs,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: Option<u32>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check the R matrix against the oracle and the property suites.
    Verify {
        #[command(flatten)]
        fam: FamArgs,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        json: bool,
        /// Also write the PASS/FAIL lines to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Trace one insertion of a letter into a tableau.
    Insert {
        #[command(flatten)]
        fam: FamArgs,
        /// Rows separated by " / ", boxes by spaces.
        #[arg(long, allow_hyphen_values = true)]
        tableau: String,
        #[arg(long, allow_hyphen_values = true)]
        letter: String,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn family(args: &FamArgs) -> Result<Family, Failure> {
    Family::new(args.fam, args.n).map_err(usage)
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| runtime(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn apply(fam: Family, l: u32, k: u32, b1: &str, b2: &str, json: bool) -> Result<ExitCode, Failure> {
    let b1 = Element::parse_coords(fam, l, b1).map_err(usage)?;
    let b2 = Element::parse_coords(fam, k, b2).map_err(usage)?;
    let t = TensorElement::pair(b1, b2).map_err(usage)?;
    let res = r_apply(&t).map_err(runtime)?;
    let view = res.view();
    if json {
        println!("{}", serde_json::to_string_pretty(&view).map_err(runtime)?);
        return Ok(ExitCode::SUCCESS);
    }
    println!("b2' = {}", view.image.b2);
    println!("b1' = {}", view.image.b1);
    println!("tableaux: {} (x) {}", view.image.b2_tableau, view.image.b1_tableau);
    println!("H = {}", view.energy);
    let d = &view.diag;
    println!("z={} l'={} k'={} m={}", d.z, d.l_prime, d.k_prime, d.m);
    println!("t0: {}", d.t0);
    println!("bumped: {}", d.bumped.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn dot_graph<T>(nodes: &[T], idx: impl Iterator<Item = u8> + Clone) -> Result<String, Failure>
where
    T: Crystal + ToString + Eq + std::hash::Hash,
{
    let ids: std::collections::HashMap<&T, usize> = nodes.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut out = String::from("digraph crystal {\n");
    for (i, x) in nodes.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{}\"];", x.to_string().replace('"', "\\\""));
    }
    for (a, x) in nodes.iter().enumerate() {
        for i in idx.clone() {
            if let Some(y) = x.f(i).map_err(runtime)? {
                let b = ids.get(&y).ok_or_else(|| runtime("operator left the enumerated set"))?;
                let style = if i == 0 { ", style=dashed" } else { "" };
                let _ = writeln!(out, "  v{a} -> v{b} [label=\"{i}\"{style}];");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

fn graph(fam: Family, l: u32, k: Option<u32>, dot: Option<&PathBuf>) -> Result<ExitCode, Failure> {
    let text = match k {
        None => dot_graph(&enumerate(fam, l), indices(fam))?,
        Some(k) => dot_graph(&crystal_rmatrix::crystal::enumerate_pairs(fam, l, k), indices(fam))?,
    };
    emit(&text, dot)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(fam: Family, l: u32, k: u32, json: bool, report: Option<&PathBuf>) -> Result<ExitCode, Failure> {
    let rep = verify(fam, l, k);
    let mut lines = rep.lines().join("\n");
    lines.push('\n');
    if json {
        println!("{}", serde_json::to_string_pretty(&rep).map_err(runtime)?);
    } else {
        print!("{lines}");
    }
    if let Some(p) = report {
        emit(&lines, Some(p))?;
    }
    Ok(if rep.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn insert(fam: Family, tableau: &str, letter: &str) -> Result<ExitCode, Failure> {
    let alphabet = fam.alphabet();
    let t = Tableau::parse(tableau, alphabet).map_err(usage)?;
    let a: Letter = letter.trim().parse().map_err(usage)?;
    alphabet.check(a).map_err(usage)?;
    let (out, route) = Inserter::new(alphabet).insert(&t, a).map_err(runtime)?;
    for s in &route.steps {
        let bumped = s.outgoing.map_or_else(|| "-".to_string(), |b| b.to_string());
        println!("col={} case={} in={} out={}", s.column, s.case, s.incoming, bumped);
    }
    println!("result: {}", out.render());
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Apply { fam, l, k, b1, b2, json } => apply(family(&fam)?, l, k, &b1, &b2, json),
        Cmd::Enumerate { fam, l } => {
            let mut text = String::new();
            for x in enumerate(family(&fam)?, l) {
                let _ = writeln!(text, "{x}");
            }
            emit(&text, None)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Graph { fam, l, k, dot } => graph(family(&fam)?, l, k, dot.as_ref()),
        Cmd::Verify { fam, l, k, json, report } => run_verify(family(&fam)?, l, k, json, report.as_ref()),
        Cmd::Insert { fam, tableau, letter } => insert(family(&fam)?, &tableau, &letter),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
