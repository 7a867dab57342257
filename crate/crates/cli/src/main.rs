use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rightkey::demazure::{self, KeyEngine};
use rightkey::verify::{self, SweepOptions};
use rightkey::{jdt, parse_tableau, scanning, tableaux, Shape, SparsePolynomial, Tableau};

const EXIT_INPUT: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_COUNTEREXAMPLE: u8 = 3;

/// Right and left keys of semistandard tableaux, and Demazure characters.
///
/// Tableaux are read as text: one row per line, entries separated by
/// spaces, with an optional first line `n=<bound>`.
#[derive(Debug, Parser)]
#[command(name = "rightkey", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the right key of a tableau.
    RightKey {
        /// Tableau file; standard input when omitted.
        file: Option<PathBuf>,
        /// Write every EWIS pass to standard error.
        #[arg(long)]
        explain: bool,
        /// Also compute the key by jeu de taquin and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the left key of a tableau.
    LeftKey {
        file: Option<PathBuf>,
        /// Also compute the key by complementation and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare scanning against jeu de taquin on every small tableau.
    Verify {
        #[arg(long)]
        max_boxes: usize,
        #[arg(long)]
        max_entry: u32,
        /// Worker threads; all cores when omitted.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a Demazure character, one `coefficient exponents...` line per term.
    Demazure {
        /// Partition as comma-separated row lengths, e.g. 2,1.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        mu: Vec<usize>,
        /// Permutation in one-line notation, e.g. 2,1,3.
        #[arg(long, value_delimiter = ',')]
        w: Vec<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Engine::Scan, conflicts_with = "all_engines")]
        engine: Engine,
        /// Run every engine and report whether they agree.
        #[arg(long)]
        all_engines: bool,
    },
    /// Print a Schur polynomial.
    Schur {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        mu: Vec<usize>,
        #[arg(long)]
        n: usize,
    },
    /// Print every tableau of a shape, separated by blank lines.
    Enumerate {
        /// Column lengths, e.g. 2,1,1.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        shape: Vec<usize>,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Scan,
    Oracle,
    Recursion,
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

fn read_tableau(file: Option<&PathBuf>) -> Result<Tableau, Failure> {
    let mut text = String::new();
    match file {
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?
        }
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(input_error)?;
        }
    }
    parse_tableau(&text).map_err(input_error)
}

fn compare(label: &str, ours: &Tableau, oracle: &Tableau) -> Result<(), Failure> {
    eprintln!("{label}:\n{oracle}");
    if ours == oracle {
        eprintln!("AGREE");
        Ok(())
    } else {
        eprintln!("DISAGREE");
        Err(Failure {
            code: EXIT_DISAGREE,
            message: format!("{label} disagrees with the scanning result"),
        })
    }
}

fn right_key(file: Option<PathBuf>, explain: bool, oracle: bool) -> Result<(), Failure> {
    let t = read_tableau(file.as_ref())?;
    let key = scanning::scanning_tableau(&t);
    println!("{key}");
    if explain {
        for start in 0..t.num_columns() {
            let (_, passes) = scanning::scan_column_traced(&t, start);
            for (i, pass) in passes.iter().enumerate() {
                eprintln!("column {} pass {}: {pass}", start + 1, i + 1);
            }
        }
    }
    if oracle {
        let mut columns = Vec::with_capacity(t.num_columns());
        for i in 0..t.num_columns() {
            let (column, steps) = jdt::right_key_column_traced(&t, i);
            if explain {
                for step in &steps {
                    eprintln!("column {}: {step}", i + 1);
                    for slide in &step.slides {
                        eprintln!("  {slide}");
                    }
                }
            }
            columns.push(column);
        }
        let oracle_key = Tableau::from_columns(columns, t.bound()).map_err(input_error)?;
        compare("jeu de taquin right key", &key, &oracle_key)?;
    }
    Ok(())
}

fn left_key(file: Option<PathBuf>, oracle: bool) -> Result<(), Failure> {
    let t = read_tableau(file.as_ref())?;
    let key = scanning::left_key(&t);
    println!("{key}");
    if oracle {
        compare("complement left key", &key, &jdt::left_key(&t))?;
    }
    Ok(())
}

fn run_verify(max_boxes: usize, max_entry: u32, jobs: Option<usize>) -> Result<(), Failure> {
    if max_entry == 0 {
        return Err(input_error("--max-entry must be positive"));
    }
    let options = SweepOptions {
        max_boxes,
        max_entry,
        swap_checks: true,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = jobs {
        builder = builder.num_threads(jobs.max(1));
    }
    let pool = builder.build().map_err(input_error)?;
    let report = pool.install(|| verify::sweep(options));
    println!("shapes: {}", report.shapes);
    println!("tableaux: {}", report.tableaux);
    println!("keys: {}", report.keys);
    println!("length swaps: {}", report.swaps);
    println!("{} counterexamples", report.total_failures());
    for (check, count) in &report.failures {
        println!("  {check}: {count}");
    }
    for example in &report.counterexamples {
        println!("first failure of \"{}\":\n{}\n", example.check, example.tableau);
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_COUNTEREXAMPLE,
            message: "counterexamples found".into(),
        })
    }
}

fn character(mu: &[usize], w: &[usize], n: usize, engine: Engine) -> Result<SparsePolynomial, Failure> {
    match engine {
        Engine::Scan => demazure::demazure_character(mu, w, n, KeyEngine::Scan),
        Engine::Oracle => demazure::demazure_character(mu, w, n, KeyEngine::Oracle),
        Engine::Recursion => demazure::demazure_operator_recursion(mu, w, n),
    }
    .map_err(input_error)
}

fn run_demazure(mu: &[usize], w: &[usize], n: usize, engine: Engine, all: bool) -> Result<(), Failure> {
    if !all {
        println!("{}", character(mu, w, n, engine)?);
        return Ok(());
    }
    let mut out = String::new();
    let mut results = Vec::new();
    for engine in [Engine::Scan, Engine::Oracle, Engine::Recursion] {
        let p = character(mu, w, n, engine)?;
        let name = engine.to_possible_value().expect("no skipped variants");
        let _ = writeln!(out, "engine {}:\n{p}\n", name.get_name());
        results.push(p);
    }
    print!("{out}");
    if results.windows(2).all(|pair| pair[0] == pair[1]) {
        println!("ENGINES AGREE");
        Ok(())
    } else {
        println!("ENGINES DISAGREE");
        Err(Failure {
            code: EXIT_DISAGREE,
            message: "engines disagree".into(),
        })
    }
}

fn run_enumerate(lengths: Vec<usize>, n: u32) -> Result<(), Failure> {
    let shape = Shape::new(lengths).map_err(input_error)?;
    // The bound is given on the command line, so blocks carry no header.
    let blocks: Vec<String> = tableaux(&shape, n)
        .map(|t| {
            t.rows()
                .iter()
                .map(|row| row.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n")
        })
        .collect();
    if !blocks.is_empty() {
        println!("{}", blocks.join("\n\n"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::RightKey { file, explain, oracle } => right_key(file, explain, oracle),
        Command::LeftKey { file, oracle } => left_key(file, oracle),
        Command::Verify {
            max_boxes,
            max_entry,
            jobs,
        } => run_verify(max_boxes, max_entry, jobs),
        Command::Demazure {
            mu,
            w,
            n,
            engine,
            all_engines,
        } => run_demazure(&mu, &w, n, engine, all_engines),
        Command::Schur { mu, n } => {
            println!("{}", demazure::schur_polynomial(&mu, n).map_err(input_error)?);
            Ok(())
        }
        Command::Enumerate { shape, n } => run_enumerate(shape, n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
