//! Command-line surface: generate constructed matrices and designs, verify
//! documents, convert between representations, and print the solution-count
//! table behind the cross-group agreement argument.
//!
//! Exit codes: 0 success / valid, 1 domain failure (failed check, conversion
//! precondition), 2 usage or parse error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use gbtd::{
    build_mp, gbtd_to_matrix, lemma3_counts, matrix_to_gbtd, normalize_columns, verify_gbtd,
    verify_matrix, DesignDocument, PrimeModulus,
};

#[derive(Parser)]
#[command(name = "gbtd", version, about = "Generalized balanced tournament designs GBTD(p,p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Matrix,
    Design,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Grid,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToDesign,
    ToMatrix,
    Normalize,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the matrix and/or design for an odd prime p
    Generate {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value = "matrix")]
        kind: Kind,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output path (default stdout)
        #[arg(long = "out")]
        out: Option<String>,
    },
    /// Verify a matrix or design document
    Verify {
        /// Input path (default stdin)
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Convert between the matrix and design representations
    Convert {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long = "out")]
        out: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the agreement-equation solution counts for every m in Z_p
    Lemma3 {
        #[arg(long)]
        p: u64,
    },
}

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    eprintln!("run with --help for usage");
    ExitCode::from(EXIT_USAGE)
}

fn read_input(path: &Option<String>) -> std::io::Result<String> {
    match path {
        Some(path) => fs::read_to_string(path),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn write_output(path: &Option<String>, text: &str) -> std::io::Result<()> {
    match path {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// JSON documents start with '{'; anything else is tried as a grid.
fn parse_any(text: &str) -> Result<DesignDocument, gbtd::Error> {
    if text.trim_start().starts_with('{') {
        gbtd::parse(text)
    } else {
        let m = gbtd::parse_grid(text)?;
        Ok(DesignDocument::from_matrix(&m))
    }
}

fn render(doc: &DesignDocument, format: Format) -> Result<String, gbtd::Error> {
    match format {
        Format::Json => Ok(gbtd::emit(doc)),
        Format::Grid => {
            let m = doc
                .to_matrix()
                .map_err(|_| gbtd::Error::Parse("grid format only applies to matrices".into()))?;
            Ok(gbtd::emit_grid(&m))
        }
    }
}

fn run_generate(p: u64, kind: Kind, format: Format, out: Option<String>) -> ExitCode {
    let p = match PrimeModulus::new(p) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let m = build_mp(p);
    let mut text = String::new();
    if matches!(kind, Kind::Matrix | Kind::Both) {
        match render(&DesignDocument::from_matrix(&m), format) {
            Ok(s) => text.push_str(&s),
            Err(e) => return usage_error(e),
        }
    }
    if matches!(kind, Kind::Design | Kind::Both) {
        let design = matrix_to_gbtd(&m).expect("constructed matrix converts");
        match render(&DesignDocument::from_design(&design), format) {
            Ok(s) => text.push_str(&s),
            Err(e) => return usage_error(e),
        }
    }
    match write_output(&out, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(e),
    }
}

fn run_verify(input: Option<String>) -> ExitCode {
    let text = match read_input(&input) {
        Ok(text) => text,
        Err(e) => return usage_error(e),
    };
    let doc = match parse_any(&text) {
        Ok(doc) => doc,
        Err(e) => return usage_error(e),
    };
    let report = match &doc {
        DesignDocument::Matrix { .. } => verify_matrix(&doc.to_matrix().expect("validated")),
        DesignDocument::Design { .. } => verify_gbtd(&doc.to_design().expect("validated")),
    };
    print!("{report}");
    if report.overall() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DOMAIN)
    }
}

fn run_convert(
    direction: Direction,
    input: Option<String>,
    out: Option<String>,
    format: Format,
) -> ExitCode {
    let text = match read_input(&input) {
        Ok(text) => text,
        Err(e) => return usage_error(e),
    };
    let doc = match parse_any(&text) {
        Ok(doc) => doc,
        Err(e) => return usage_error(e),
    };
    let converted = match direction {
        Direction::ToDesign => doc
            .to_matrix()
            .and_then(|m| matrix_to_gbtd(&m))
            .map(|r| DesignDocument::from_design(&r)),
        Direction::ToMatrix => doc
            .to_design()
            .and_then(|r| gbtd_to_matrix(&r))
            .map(|m| DesignDocument::from_matrix(&m)),
        Direction::Normalize => doc
            .to_matrix()
            .and_then(|m| normalize_columns(&m).map(|(m, _)| m))
            .map(|m| DesignDocument::from_matrix(&m)),
    };
    let converted = match converted {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    let rendered = match render(&converted, format) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    match write_output(&out, &rendered) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => usage_error(e),
    }
}

fn run_lemma3(p: u64) -> ExitCode {
    let p = match PrimeModulus::new(p) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let expected = (p.as_usize() - 1, (p.as_usize() - 1) / 2);
    let mut all_match = true;
    for m in p.residues() {
        let (total, y_ge_x) = lemma3_counts(p, m);
        println!("{total} {y_ge_x}");
        all_match &= (total, y_ge_x) == expected;
    }
    if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DOMAIN)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate {
            p,
            kind,
            format,
            out,
        } => run_generate(p, kind, format, out),
        Command::Verify { input } => run_verify(input),
        Command::Convert {
            direction,
            input,
            out,
            format,
        } => run_convert(direction, input, out, format),
        Command::Lemma3 { p } => run_lemma3(p),
    }
}
