//! Command-line frontend: generate, verify, transform, compose, and search
//! over grid files.
//!
//! Exit codes: 0 on success (and when a verified property holds), 1 when a
//! verified property fails, 2 on parse, usage, capacity, or unsupported-order
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use latinsq::construct::{self, OrthogonalPair};
use latinsq::dihedral::{dihedral_witness, orbit_report, DihedralElement, ELEMENTS};
use latinsq::io::{self, Document, GridKind};
use latinsq::search;
use latinsq::{repeated_pairs, Error, Grid, LatinSquare, MagicSquare, PairGrid};

#[derive(Parser)]
#[command(
    name = "latinsq",
    version,
    about = "Latin squares: generation, orthogonality checks, symmetries, composition, magic squares, and exhaustive search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for generated grids and reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to FILE instead of stdout (pair targets write FILE.1 and FILE.2)
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Allow the long-running order-5 census
    #[arg(long, global = true)]
    long: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a built-in square, a constructed pair, or a magic square
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Check a property of grid files; exits 0 when it holds, 1 when it fails
    Verify {
        #[command(subcommand)]
        kind: VerifyKind,
    },
    /// Apply one of the eight square symmetries (r0..r3, s0..s3) to a grid file
    Transform {
        /// Symmetry tag: r0, r1, r2, r3, s0, s1, s2, s3
        sigma: String,
        file: PathBuf,
    },
    /// Combine two grid files
    Compose {
        #[command(subcommand)]
        op: ComposeOp,
    },
    /// Generate a magic square of the given order (shorthand for `gen magic`)
    Magic { n: usize },
    /// Exhaustive checks over all squares of a small order
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Parse a grid file and describe what it contains
    Show { file: PathBuf },
}

#[derive(Subcommand)]
enum GenTarget {
    /// First of the classical order-9 orthogonal squares
    ChoiL,
    /// Second of the classical order-9 orthogonal squares
    ChoiN,
    /// The classical order-9 pair, superimposed
    ChoiK,
    /// Order-3 seed square whose self-composition gives choi-l
    A3,
    /// Order-3 seed square whose self-composition gives choi-n
    B3,
    /// Circulant orthogonal pair of odd order N
    OddPair { n: usize },
    /// Kronecker-built orthogonal pair of order N divisible by 4
    EvenPair { n: usize },
    /// Orthogonal pair for any supported order
    Pair { n: usize },
    /// Magic square of any supported order
    Magic { n: usize },
}

#[derive(Subcommand)]
enum VerifyKind {
    /// Every row and column is a permutation of 1..=n
    Latin { file: PathBuf },
    /// The two squares superimpose to all n^2 distinct pairs
    Orthogonal { first: PathBuf, second: PathBuf },
    /// Latin with pairwise-distinct main diagonal and antidiagonal
    Diagonal { file: PathBuf },
    /// Cells are 1..=n^2 and all 2n+2 line sums agree
    Magic { file: PathBuf },
    /// Latin and orthogonal to one of its nontrivial symmetry images
    Dihedral { file: PathBuf },
}

#[derive(Subcommand)]
enum ComposeOp {
    /// Kronecker product as a pair grid
    Kron { first: PathBuf, second: PathBuf },
    /// Substituted Kronecker product (order mn Latin square)
    SubstKron { first: PathBuf, second: PathBuf },
    /// Cellwise n(a-1)+b over two same-order Latin squares
    PlusS { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum SearchKind {
    /// Orbit statistics over every square of order N
    Census { n: usize },
    /// Check that no order-N square is orthogonal to its half-turn image
    R2Lemma { n: usize },
    /// Check that no even-order-N square is orthogonal to its horizontal or vertical reflection
    EvenLemma { n: usize },
    /// Orbit orthogonality report for the square in FILE
    Orbit { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = Output {
        format: cli.format,
        out: cli.out.clone(),
    };
    match run(cli.command, &output, cli.long) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout, treating a closed pipe as a normal early exit so the
/// 0/1/2 exit-code contract survives `| head` and friends.
fn print_out(content: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout();
    if let Err(e) = stdout.write_all(content.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

fn print_line(content: &str) {
    print_out(content);
    print_out("\n");
}

/// Where and how grid output goes.
struct Output {
    format: Format,
    out: Option<PathBuf>,
}

impl Output {
    fn emit(&self, content: &str) -> Result<(), Error> {
        match &self.out {
            Some(path) => write_file(path, content),
            None => {
                print_out(content);
                Ok(())
            }
        }
    }

    fn grid(&self, grid: &Grid, kind: GridKind) -> String {
        match self.format {
            Format::Text => io::grid_to_text(grid),
            Format::Json => io::grid_to_json(grid, Some(kind)) + "\n",
        }
    }

    fn pairs(&self, grid: &PairGrid) -> String {
        match self.format {
            Format::Text => io::pairs_to_text(grid),
            Format::Json => io::pairs_to_json(grid) + "\n",
        }
    }

    /// Writes an orthogonal pair: FILE.1/FILE.2 with --out, a two-document
    /// stream on stdout otherwise.
    fn pair(&self, pair: &OrthogonalPair) -> Result<(), Error> {
        let first = self.grid(pair.first().grid(), GridKind::Latin);
        let second = self.grid(pair.second().grid(), GridKind::Latin);
        match &self.out {
            Some(path) => {
                let (p1, p2) = pair_paths(path);
                write_file(&p1, &first)?;
                write_file(&p2, &second)
            }
            None => match self.format {
                Format::Text => {
                    print_out(&format!("{first}\n{second}"));
                    Ok(())
                }
                Format::Json => {
                    print_line(&format!("[{},{}]", first.trim_end(), second.trim_end()));
                    Ok(())
                }
            },
        }
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), Error> {
    fs::write(path, content).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn pair_paths(path: &Path) -> (PathBuf, PathBuf) {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) => (
            path.with_extension(format!("1.{ext}")),
            path.with_extension(format!("2.{ext}")),
        ),
        None => {
            let mut p1 = path.as_os_str().to_owned();
            let mut p2 = p1.clone();
            p1.push(".1");
            p2.push(".2");
            (PathBuf::from(p1), PathBuf::from(p2))
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_document(path: &Path) -> Result<Document, Error> {
    io::parse_document(&read_file(path)?)
}

fn load_grid(path: &Path) -> Result<Grid, Error> {
    match load_document(path)? {
        Document::Ints(grid, _) => Ok(grid),
        Document::Pairs(_) => Err(Error::Parse(format!(
            "{}: expected an integer grid, found a pair grid",
            path.display()
        ))),
    }
}

fn load_latin(path: &Path) -> Result<LatinSquare, Error> {
    LatinSquare::certify(load_grid(path)?)
        .map_err(|e| Error::Parse(format!("{}: not a Latin square: {e}", path.display())))
}

fn run(command: Command, output: &Output, long: bool) -> Result<ExitCode, Error> {
    match command {
        Command::Gen { target } => gen(target, output),
        Command::Magic { n } => gen(GenTarget::Magic { n }, output),
        Command::Verify { kind } => verify(kind, output),
        Command::Transform { sigma, file } => transform(&sigma, &file, output),
        Command::Compose { op } => compose_cmd(op, output),
        Command::Search { kind } => search_cmd(kind, output, long),
        Command::Show { file } => show(&file, output),
    }
}

fn gen(target: GenTarget, output: &Output) -> Result<ExitCode, Error> {
    match target {
        GenTarget::ChoiL => output.emit(&output.grid(construct::choi_l().grid(), GridKind::Latin))?,
        GenTarget::ChoiN => output.emit(&output.grid(construct::choi_n().grid(), GridKind::Latin))?,
        GenTarget::ChoiK => output.emit(&output.pairs(&construct::choi_k()))?,
        GenTarget::A3 => output.emit(&output.grid(construct::seed_a3().grid(), GridKind::Latin))?,
        GenTarget::B3 => output.emit(&output.grid(construct::seed_b3().grid(), GridKind::Latin))?,
        GenTarget::OddPair { n } => output.pair(&construct::odd_pair(n)?)?,
        GenTarget::EvenPair { n } => output.pair(&construct::even_pair(n)?)?,
        GenTarget::Pair { n } => output.pair(&construct::pair_for(n)?)?,
        GenTarget::Magic { n } => {
            output.emit(&output.grid(construct::magic(n)?.grid(), GridKind::Magic))?
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(kind: VerifyKind, _output: &Output) -> Result<ExitCode, Error> {
    // a grid that parses but fails certification is a failed property
    // (exit 1), not invalid input (exit 2)
    let latin_input = |file: &Path, kind: &str| -> Result<std::result::Result<LatinSquare, String>, Error> {
        Ok(match LatinSquare::certify(load_grid(file)?) {
            Ok(square) => Ok(square),
            Err(e) => Err(format!("{kind}: FAIL — {}: not a Latin square: {e}", file.display())),
        })
    };
    let verdict = match kind {
        VerifyKind::Latin { file } => match LatinSquare::certify(load_grid(&file)?) {
            Ok(square) => Ok(format!("latin: OK (order {})", square.order())),
            Err(e) => Err(format!("latin: FAIL — {e}")),
        },
        VerifyKind::Orthogonal { first, second } => {
            let (a, b) = match (
                latin_input(&first, "orthogonal")?,
                latin_input(&second, "orthogonal")?,
            ) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(report), _) | (_, Err(report)) => return fail_verdict(report),
            };
            if a.is_orthogonal_to(&b)? {
                Ok(format!(
                    "orthogonal: OK ({} distinct pairs)",
                    a.order() * a.order()
                ))
            } else {
                let mut lines = vec!["orthogonal: FAIL".to_string()];
                for (pair, positions) in repeated_pairs(&a, &b)?.iter().take(5) {
                    let spots: Vec<String> = positions
                        .iter()
                        .map(|(r, c)| format!("({r},{c})"))
                        .collect();
                    lines.push(format!(
                        "  pair ({},{}) repeats at {}",
                        pair.0,
                        pair.1,
                        spots.join(" ")
                    ));
                }
                Err(lines.join("\n"))
            }
        }
        VerifyKind::Diagonal { file } => {
            let square = match latin_input(&file, "diagonal")? {
                Ok(square) => square,
                Err(report) => return fail_verdict(report),
            };
            if square.is_diagonal() {
                Ok(format!("diagonal: OK (order {})", square.order()))
            } else {
                Err("diagonal: FAIL — a diagonal repeats a symbol".to_string())
            }
        }
        VerifyKind::Magic { file } => match MagicSquare::certify(load_grid(&file)?) {
            Ok(m) => Ok(format!(
                "magic: OK (order {}, constant {})",
                m.order(),
                m.constant()
            )),
            Err(e) => Err(format!("magic: FAIL — {e}")),
        },
        VerifyKind::Dihedral { file } => {
            let square = match latin_input(&file, "dihedral")? {
                Ok(square) => square,
                Err(report) => return fail_verdict(report),
            };
            match dihedral_witness(&square) {
                Some(sigma) => Ok(format!("dihedral: OK (witness {sigma})")),
                None => Err("dihedral: FAIL — no symmetry image is orthogonal".to_string()),
            }
        }
    };
    match verdict {
        Ok(report) => {
            print_line(&report);
            Ok(ExitCode::SUCCESS)
        }
        Err(report) => fail_verdict(report),
    }
}

fn fail_verdict(report: String) -> Result<ExitCode, Error> {
    print_line(&report);
    Ok(ExitCode::from(1))
}

fn transform(sigma: &str, file: &Path, output: &Output) -> Result<ExitCode, Error> {
    let sigma = DihedralElement::from_str(sigma)?;
    match load_document(file)? {
        Document::Ints(grid, kind) => {
            let image = sigma.apply(&grid);
            output.emit(&output.grid(&image, kind.unwrap_or(GridKind::Grid)))?;
        }
        Document::Pairs(grid) => {
            let image = sigma.apply_pairs(&grid);
            output.emit(&output.pairs(&image))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn compose_cmd(op: ComposeOp, output: &Output) -> Result<ExitCode, Error> {
    match op {
        ComposeOp::Kron { first, second } => {
            let k = latinsq::compose::kron_pairs(&load_latin(&first)?, &load_latin(&second)?);
            output.emit(&output.pairs(&k))?;
        }
        ComposeOp::SubstKron { first, second } => {
            let s = latinsq::compose::subst_kron(&load_latin(&first)?, &load_latin(&second)?);
            output.emit(&output.grid(s.grid(), GridKind::Latin))?;
        }
        ComposeOp::PlusS { first, second } => {
            let g = latinsq::compose::plus_s(&load_latin(&first)?, &load_latin(&second)?)?;
            output.emit(&output.grid(&g, GridKind::Grid))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn search_cmd(kind: SearchKind, output: &Output, long: bool) -> Result<ExitCode, Error> {
    match kind {
        SearchKind::Census { n } => {
            if n == 5 && !long {
                return Err(Error::Domain(
                    "the order-5 census takes a while; pass --long to run it".into(),
                ));
            }
            let row = search::census(n)?;
            let bound = if n % 2 == 1 { 4 } else { 2 };
            match output.format {
                Format::Text => {
                    let mut lines = vec![
                        format!("order: {}", row.order),
                        format!("total squares: {}", row.total_squares),
                        format!("dihedral: {}", row.dihedral_count),
                        format!("self-orthogonal: {}", row.self_orthogonal_count),
                        "max-MOLS histogram:".to_string(),
                    ];
                    for (mols, count) in &row.max_mols_histogram {
                        lines.push(format!("  {mols}: {count}"));
                    }
                    lines.push(format!(
                        "bound: observed max {} <= {bound}",
                        row.max_observed()
                    ));
                    print_line(&lines.join("\n"));
                }
                Format::Json => {
                    let histogram: serde_json::Map<String, serde_json::Value> = row
                        .max_mols_histogram
                        .iter()
                        .map(|(k, v)| (k.to_string(), (*v).into()))
                        .collect();
                    let doc = serde_json::json!({
                        "order": row.order,
                        "total": row.total_squares,
                        "dihedral": row.dihedral_count,
                        "self_orthogonal": row.self_orthogonal_count,
                        "histogram": histogram,
                    });
                    print_line(&doc.to_string());
                }
            }
            Ok(exit_when(row.max_observed() <= bound))
        }
        SearchKind::R2Lemma { n } => {
            let holds = search::check_r2_lemma(n)?;
            let total = search::enumerate_latin(n)?.count();
            print_line(&format!(
                "r2-lemma: {} ({total} squares checked)",
                if holds { "holds" } else { "VIOLATED" }
            ));
            Ok(exit_when(holds))
        }
        SearchKind::EvenLemma { n } => {
            let holds = search::check_even_reflection_lemma(n)?;
            let total = search::enumerate_latin(n)?.count();
            print_line(&format!(
                "even-lemma: {} ({total} squares checked)",
                if holds { "holds" } else { "VIOLATED" }
            ));
            Ok(exit_when(holds))
        }
        SearchKind::Orbit { file } => {
            let square = load_latin(&file)?;
            let report = orbit_report(&square);
            let bound = if square.order() % 2 == 1 { 4 } else { 2 };
            let orth: Vec<&str> = report
                .orthogonal_to_base()
                .iter()
                .map(|e| e.tag())
                .collect();
            let non: Vec<&str> = ELEMENTS[1..]
                .iter()
                .filter(|e| !report.orthogonality[0][e.index()])
                .map(|e| e.tag())
                .collect();
            let witnesses: Vec<String> = report
                .witnesses
                .iter()
                .map(|set| {
                    let tags: Vec<&str> = set.iter().map(|e| e.tag()).collect();
                    format!("{{{}}}", tags.join(","))
                })
                .collect();
            match output.format {
                Format::Text => {
                    print_line(&format!("order: {}", square.order()));
                    print_line(&format!("orthogonal to base: {}", orth.join(" ")));
                    print_line(&format!("not orthogonal: {}", non.join(" ")));
                    print_line(&format!("max MOLS: {}", report.max_mols));
                    print_line(&format!("witnesses: {}", witnesses.join(" ")));
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "order": square.order(),
                        "orthogonal_to_base": orth,
                        "not_orthogonal": non,
                        "max_mols": report.max_mols,
                        "witnesses": report.witnesses.iter().map(|set| {
                            set.iter().map(|e| e.tag()).collect::<Vec<_>>()
                        }).collect::<Vec<_>>(),
                    });
                    print_line(&doc.to_string());
                }
            }
            Ok(exit_when(report.max_mols <= bound))
        }
    }
}

fn exit_when(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn show(file: &Path, output: &Output) -> Result<ExitCode, Error> {
    match load_document(file)? {
        Document::Ints(grid, kind) => {
            let mut satisfied: Vec<&str> = Vec::new();
            if LatinSquare::certify(grid.clone()).is_ok() {
                satisfied.push("latin");
            }
            if MagicSquare::certify(grid.clone()).is_ok() {
                satisfied.push("magic");
            }
            print_line(&format!(
                "integer grid, order {}{}{}",
                grid.order(),
                kind.map(|k| format!(", tagged {k}")).unwrap_or_default(),
                if satisfied.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", satisfied.join(", "))
                }
            ));
            print_out(&output.grid(&grid, kind.unwrap_or(GridKind::Grid)));
        }
        Document::Pairs(grid) => {
            print_line(&format!("pair grid, order {}", grid.order()));
            print_out(&output.pairs(&grid));
        }
    }
    Ok(ExitCode::SUCCESS)
}
