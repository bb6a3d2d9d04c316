//! Command-line interface. Every subcommand delegates to the library; no
//! algebra lives here.
//!
//! Exit codes: 0 success or a true relation, 1 a false relation or an
//! invalid element, 2 a parse or read failure, 3 a usage error.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use po2_core::{
    compose, d_class, d_related, h_related, j_related, l_related, meet, r_related, random_element,
    raw_grid_report, validate, CanonicalElement, GreenReport, Point, RawElement,
};

use crate::textfmt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE_OR_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "po2",
    about = "Exact algebra of monotone injective partial selfmaps of the positive quadrant \
             with cofinite domain and image",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that FILE denotes a monoid element
    Validate { file: PathBuf },
    /// Apply the element in FILE to the point (I, J)
    Eval {
        file: PathBuf,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        i: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        j: u32,
    },
    /// Compose two elements (apply FILE1 first, then FILE2) and write the result
    Compose {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compare two elements as partial maps
    Eq { file1: PathBuf, file2: PathBuf },
    /// Print the classification record of an element
    Classify { file: PathBuf },
    /// Decide a Green relation between two elements
    Relate {
        relation: Relation,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Write the members of the D-class of FILE into a directory
    Dclass {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Meet of two idempotents; rejects non-idempotent inputs
    Meet {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Project FILE onto a finite grid and run the brute-force checks
    OracleCheck {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        grid: u32,
    },
    /// Generate a seeded pseudo-random element and write it
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        len: u32,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Relation {
    L,
    R,
    H,
    D,
    /// Decided exactly like d: the two relations coincide in this monoid
    J,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure { code, message: message.into() }
    }
}

/// Runs the CLI on the given argument list and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            load(&file)?;
            println!("valid=true");
            Ok(EXIT_OK)
        }
        Command::Eval { file, i, j } => {
            let a = load(&file)?;
            match a.eval(Point::new(i, j)) {
                Some(q) => println!("{}", textfmt::format_point(q)),
                None => println!("undefined"),
            }
            Ok(EXIT_OK)
        }
        Command::Compose { file1, file2, output } => {
            let a = load(&file1)?;
            let b = load(&file2)?;
            write_element(&output, &compose(&a, &b))?;
            Ok(EXIT_OK)
        }
        Command::Eq { file1, file2 } => {
            let equal = load(&file1)?.semantic_eq(&load(&file2)?);
            println!("equal={equal}");
            Ok(if equal { EXIT_OK } else { EXIT_FALSE_OR_INVALID })
        }
        Command::Classify { file } => {
            let report = GreenReport::of(&load(&file)?);
            println!("{}", textfmt::format_report(&report));
            Ok(EXIT_OK)
        }
        Command::Relate { relation, file1, file2 } => {
            let a = load(&file1)?;
            let b = load(&file2)?;
            let related = match relation {
                Relation::L => l_related(&a, &b),
                Relation::R => r_related(&a, &b),
                Relation::H => h_related(&a, &b),
                Relation::D => d_related(&a, &b),
                Relation::J => j_related(&a, &b),
            };
            println!("related={related}");
            Ok(if related { EXIT_OK } else { EXIT_FALSE_OR_INVALID })
        }
        Command::Dclass { file, output } => {
            let members = d_class(&load(&file)?);
            fs::create_dir_all(&output).map_err(|e| {
                Failure::new(EXIT_USAGE, format!("cannot create {}: {e}", output.display()))
            })?;
            for (k, member) in members.iter().enumerate() {
                write_element(&output.join(format!("member_{}.po2", k + 1)), member)?;
            }
            println!("d_class_size={}", members.len());
            Ok(EXIT_OK)
        }
        Command::Meet { file1, file2, output } => {
            let e1 = load(&file1)?;
            let e2 = load(&file2)?;
            let m = meet(&e1, &e2)
                .map_err(|e| Failure::new(EXIT_FALSE_OR_INVALID, e.to_string()))?;
            write_element(&output, &m)?;
            Ok(EXIT_OK)
        }
        Command::OracleCheck { file, grid } => {
            let raw = load_raw(&file)?;
            let report = raw_grid_report(&raw, grid);
            let validation = validate(raw);
            let oracle_ok = report.accepted();
            let validator_ok = validation.is_ok();
            println!(
                "grid={grid} structure={} tails={} in_box={} monotone={} injective={} \
                 oracle={} validate={} agree={}",
                report.structure_ok,
                report.tails_ok,
                report.images_in_box,
                report.monotone,
                report.injective,
                verdict(oracle_ok),
                verdict(validator_ok),
                oracle_ok == validator_ok
            );
            if let Err(e) = &validation {
                eprintln!("invalid: {e}");
            }
            if oracle_ok != validator_ok {
                eprintln!("warning: validator and grid oracle disagree at this grid size");
            }
            Ok(if oracle_ok && validator_ok { EXIT_OK } else { EXIT_FALSE_OR_INVALID })
        }
        Command::Random { seed, len, output } => {
            write_element(&output, &random_element(seed, len))?;
            Ok(EXIT_OK)
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "accept"
    } else {
        "reject"
    }
}

fn load_raw(path: &Path) -> Result<RawElement, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
    textfmt::parse(&text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<CanonicalElement, Failure> {
    validate(load_raw(path)?).map_err(|e| {
        Failure::new(EXIT_FALSE_OR_INVALID, format!("{}: invalid element: {e}", path.display()))
    })
}

fn write_element(path: &Path, a: &CanonicalElement) -> Result<(), Failure> {
    fs::write(path, textfmt::format(a))
        .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))
}
