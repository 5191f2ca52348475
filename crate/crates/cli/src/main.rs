//! `disq`: verify, build and count with oriented disingquandles.
//!
//! Exit statuses: 0 success, 1 structural or parse error, 2 axiom failure,
//! 3 parameter rejection, 4 mismatch under `audit --strict`.

mod inputs;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use disingquandle::families::enumerate::enumerate_disingquandles;
use disingquandle::invariants::{count_colorings_exhaustive_with, count_colorings_with, enumerate_colorings_with};
use disingquandle::{
    audit_tables, catalog, find_isomorphism, validate_presentation_matrix, AffineQuadraticParams, Builtin,
    ColoringOptions, Error, OrientedDisingquandle, ReferenceTable,
};
use serde_json::json;

use inputs::{load_link, load_matrix, load_structure, NamedStructure};

#[derive(Debug, Parser)]
#[command(name = "disq", version, about = "Oriented disingquandles and coloring invariants of singular links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every axiom of a presentation-matrix file or builtin.
    Verify {
        structure: String,
        #[command(flatten)]
        out: Output,
    },
    /// Build an affine-quadratic structure and write its presentation matrix.
    Build {
        /// Parameters such as "n=10 a=3 alpha=0 beta=4 gamma=2 lambda=0 mu=0 delta=5".
        #[arg(required_unless_present = "builtin", conflicts_with = "builtin")]
        params: Option<String>,
        /// Export a builtin instead.
        #[arg(long)]
        builtin: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Count colorings of a catalog link, relation file or diagram file.
    Count {
        link: String,
        /// Builtin structure name.
        #[arg(long, required_unless_present = "structure", conflicts_with = "structure")]
        builtin: Option<String>,
        /// Presentation-matrix file.
        #[arg(long)]
        structure: Option<PathBuf>,
        /// Count by walking every assignment.
        #[arg(long)]
        oracle: bool,
        /// Also list the colorings.
        #[arg(long)]
        enumerate: bool,
        /// Assignment ceiling for --oracle, coloring ceiling for --enumerate.
        #[arg(long)]
        ceiling: Option<u128>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Compare catalog counts with reference table 1, 2 or 3.
    Audit {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        table: u8,
        /// Structure for tables 1 and 2.
        #[arg(long, conflicts_with = "builtins")]
        builtin: Option<String>,
        /// Comma-separated structures for table 3.
        #[arg(long, value_delimiter = ',')]
        builtins: Option<Vec<String>>,
        /// Exit with status 4 on any mismatch.
        #[arg(long)]
        strict: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Stream every structure of order n as presentation matrices.
    Enumerate {
        n: usize,
        /// Search-node budget.
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Smallest sub-structure containing the seed elements.
    Closure {
        structure: String,
        #[arg(long, value_delimiter = ',', required = true)]
        seed: Vec<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Search for an isomorphism between two structures.
    Iso {
        first: String,
        second: String,
        #[command(flatten)]
        out: Output,
    },
}

enum Failure {
    Structural(String),
    Axioms(String),
    Parameter(String),
    StrictMismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Structural(_) => 1,
            Failure::Axioms(_) => 2,
            Failure::Parameter(_) => 3,
            Failure::StrictMismatch(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Structural(m) | Failure::Axioms(m) | Failure::Parameter(m) | Failure::StrictMismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Axioms(_) | Error::Internal(_) => Failure::Axioms(e.to_string()),
            Error::Parameter(_) => Failure::Parameter(e.to_string()),
            _ => Failure::Structural(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn emit(out: &Output, text: &str) -> Outcome {
    match &out.output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Structural(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
    s.push('\n');
    s
}

fn verify(structure: &str, out: &Output) -> Outcome {
    let (name, matrix) = load_matrix(structure)?;
    let report = validate_presentation_matrix(&matrix);
    let text = match out.format {
        Format::Text => format!("{report}\n{name}: {}\n", report.summary()),
        Format::Csv => {
            let mut s = String::from("axiom,passed,counterexample\n");
            for r in &report.results {
                let cx = r.counterexample.as_ref().map(|c| format!("{c:?}")).unwrap_or_default();
                let _ = writeln!(s, "{},{},\"{cx}\"", r.id, r.passed);
            }
            s
        }
        Format::Json => pretty(json!({ "structure": name, "passed": report.passed(), "report": report })),
    };
    emit(out, &text)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Axioms(format!("{name}: {}", report.summary())))
    }
}

fn build(params: Option<&str>, builtin: Option<&str>, out: &Output) -> Outcome {
    let (label, params, printed) = match builtin {
        Some(name) => {
            let b: Builtin = name.parse()?;
            (b.name().to_string(), b.params(), Some(b.r2_audit()))
        }
        None => {
            let text = params.unwrap_or_default();
            let p: AffineQuadraticParams = text.parse()?;
            (p.to_string(), p, None)
        }
    };
    let d = disingquandle::affine_quadratic_disingquandle(&params)?;
    eprintln!("{label}");
    eprintln!("R1 = {}", params.r1_poly());
    eprintln!("R2 = {} (derived as R1(y, x*y))", params.r2_poly());
    if let Some(audit) = printed.filter(|a| !a.consistent()) {
        eprintln!("{audit}");
    }
    let matrix = d.to_presentation_matrix().to_string();
    let text = match out.format {
        Format::Json => {
            let blocks: Vec<Vec<Vec<usize>>> = d.to_presentation_matrix().blocks.iter().map(rows).collect();
            pretty(json!({ "n": d.size(), "blocks": blocks, "r2": params.r2_poly().to_string() }))
        }
        _ => matrix,
    };
    emit(out, &text)
}

fn rows(t: &disingquandle::Table) -> Vec<Vec<usize>> {
    t.rows().map(<[usize]>::to_vec).collect()
}

#[allow(clippy::too_many_arguments)]
fn count(
    link: &str,
    builtin: Option<&str>,
    structure: Option<&PathBuf>,
    oracle: bool,
    enumerate: bool,
    ceiling: Option<u128>,
    threads: usize,
    out: &Output,
) -> Outcome {
    let (link_name, system) = load_link(link)?;
    let target = match (builtin, structure) {
        (Some(b), _) => b.to_string(),
        (None, Some(p)) => p.display().to_string(),
        (None, None) => unreachable!("clap requires one of --builtin and --structure"),
    };
    let NamedStructure { name, structure: d } = load_structure(&target, builtin.is_some())?;
    let mut options = ColoringOptions { threads: threads.max(1), ..Default::default() };
    if let Some(c) = ceiling {
        options.oracle_ceiling = c;
        options.materialization_ceiling = c;
    }
    let result = if enumerate {
        let listed = enumerate_colorings_with(&system, &d, &options)?;
        if oracle {
            let check = count_colorings_exhaustive_with(&system, &d, &options)?;
            if check.count != listed.count {
                return Err(Failure::Structural(format!(
                    "solver listed {} colorings, exhaustive count is {}",
                    listed.count, check.count
                )));
            }
        }
        listed
    } else if oracle {
        count_colorings_exhaustive_with(&system, &d, &options)?
    } else {
        count_colorings_with(&system, &d, &options)
    }
    .with_ids(link_name.clone(), name.clone());

    let mode = if oracle { "exhaustive" } else { "solver" };
    let text = match out.format {
        Format::Text => {
            let mut s = format!("{link_name} under {name}: {} colorings\n", result.count);
            if let Some(colorings) = &result.colorings {
                let _ = writeln!(s, "({})", system.variables.join(", "));
                for c in colorings {
                    let values: Vec<String> = c.iter().map(usize::to_string).collect();
                    let _ = writeln!(s, "({})", values.join(", "));
                }
            }
            s
        }
        Format::Csv => {
            let mut s = format!("link,structure,count\n{link_name},{name},{}\n", result.count);
            if let Some(colorings) = &result.colorings {
                let _ = writeln!(s, "\n{}", system.variables.join(","));
                for c in colorings {
                    let values: Vec<String> = c.iter().map(usize::to_string).collect();
                    let _ = writeln!(s, "{}", values.join(","));
                }
            }
            s
        }
        Format::Json => pretty(json!({
            "link": link_name,
            "structure": name,
            "mode": mode,
            "count": result.count,
            "variables": system.variables,
            "colorings": result.colorings,
        })),
    };
    emit(out, &text)
}

fn audit(
    table: u8,
    builtin: Option<&str>,
    builtins: Option<&[String]>,
    strict: bool,
    threads: usize,
    out: &Output,
) -> Outcome {
    let table = ReferenceTable::from_id(table).expect("clap restricts the table id");
    let names: Vec<String> = match (builtin, builtins) {
        (Some(b), _) => vec![b.to_string()],
        (None, Some(list)) => list.to_vec(),
        (None, None) => table.default_structures().iter().map(|b| b.name().to_string()).collect(),
    };
    let structures: Vec<NamedStructure> = names.iter().map(|n| load_structure(n, false)).collect::<Result<_, _>>()?;
    let refs: Vec<(&str, &OrientedDisingquandle)> =
        structures.iter().map(|s| (s.name.as_str(), &s.structure)).collect();
    let options = ColoringOptions { threads: threads.max(1), ..Default::default() };
    let report = audit_tables(table, &catalog(), &refs, &options)?;
    let text = match out.format {
        Format::Text => format!("{report}\n"),
        Format::Csv => report.to_csv(),
        Format::Json => pretty(report.to_json()),
    };
    emit(out, &text)?;
    let mismatches = report.mismatches().count();
    if strict && mismatches > 0 {
        return Err(Failure::StrictMismatch(format!("{mismatches} row(s) differ from table {}", table.id())));
    }
    Ok(())
}

fn enumerate(n: usize, budget: u64, out: &Output) -> Outcome {
    if n == 0 {
        return Err(Error::EmptyCarrier.into());
    }
    let mut text = String::new();
    let mut blocks = Vec::new();
    let summary = enumerate_disingquandles(n, budget, |d| match out.format {
        Format::Json => blocks.push(d.to_presentation_matrix().blocks.iter().map(rows).collect::<Vec<_>>()),
        _ => {
            if !text.is_empty() {
                text.push('\n');
            }
            text.push_str(&d.to_presentation_matrix().to_string());
        }
    });
    if out.format == Format::Json {
        text = pretty(json!({
            "n": n,
            "structures": blocks,
            "emitted": summary.emitted,
            "truncated": summary.truncated,
        }));
    }
    eprintln!(
        "{} structure(s) of order {n}{}",
        summary.emitted,
        if summary.truncated { " (budget exhausted, list incomplete)" } else { "" }
    );
    emit(out, &text)
}

fn closure(structure: &str, seed: &[usize], out: &Output) -> Outcome {
    let NamedStructure { structure: d, .. } = load_structure(structure, false)?;
    let closed: Vec<usize> = d.closure(seed)?.into_iter().collect();
    let listed: Vec<String> = closed.iter().map(usize::to_string).collect();
    let text = match out.format {
        Format::Text => format!("{{{}}}\n", listed.join(", ")),
        Format::Csv => format!("element\n{}\n", listed.join("\n")),
        Format::Json => pretty(json!({ "seed": seed, "closure": closed })),
    };
    emit(out, &text)
}

fn iso(first: &str, second: &str, out: &Output) -> Outcome {
    let a = load_structure(first, false)?;
    let b = load_structure(second, false)?;
    let found = find_isomorphism(&a.structure, &b.structure);
    let text = match (&found, out.format) {
        (None, Format::Json) => pretty(json!({ "isomorphism": null })),
        (None, _) => "none\n".to_string(),
        (Some(f), Format::Text) => {
            let pairs: Vec<String> = f.mapping.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
            format!("{}\n", pairs.join(" "))
        }
        (Some(f), Format::Csv) => {
            let rows: Vec<String> = f.mapping.iter().enumerate().map(|(x, y)| format!("{x},{y}")).collect();
            format!("from,to\n{}\n", rows.join("\n"))
        }
        (Some(f), Format::Json) => pretty(json!({ "isomorphism": f.mapping })),
    };
    emit(out, &text)
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Verify { structure, out } => verify(structure, out),
        Command::Build { params, builtin, out } => build(params.as_deref(), builtin.as_deref(), out),
        Command::Count { link, builtin, structure, oracle, enumerate, ceiling, threads, out } => {
            count(link, builtin.as_deref(), structure.as_ref(), *oracle, *enumerate, *ceiling, *threads, out)
        }
        Command::Audit { table, builtin, builtins, strict, threads, out } => {
            audit(*table, builtin.as_deref(), builtins.as_deref(), *strict, *threads, out)
        }
        Command::Enumerate { n, budget, out } => enumerate(*n, *budget, out),
        Command::Closure { structure, seed, out } => closure(structure, seed, out),
        Command::Iso { first, second, out } => iso(first, second, out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
