use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use galois_hull::golden::verify_examples;
use galois_hull::io::{format_field_header, read_code_file};
use galois_hull::{
    lcd_equivalent_search, mpc_generator, mpc_hull, mpc_hull_dim_bounds, Error, FieldSpec, LcdSearchConfig, LinearCode,
    Matrix, MatrixProductSpec, Result,
};

#[derive(Parser)]
#[command(
    name = "galois-hull",
    version,
    about = "Galois hulls, duals and LCD equivalence of linear codes over GF(p^e)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hull dimension, Gram matrix, hull generator and structured generator.
    Hull {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        ell: u32,
    },
    /// Generator of the ell-Galois dual.
    Dual {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        ell: u32,
    },
    /// LCD, self-orthogonal and self-dual predicates.
    Check {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        ell: u32,
    },
    /// Search for a monomially equivalent ell-Galois LCD code.
    LcdSearch {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum, default_value_t = Strategy::ExhaustiveUnits)]
        strategy: Strategy,
        /// Subfield degree for the restricted strategy.
        #[arg(long)]
        m: Option<u32>,
        /// Maximum draws for the random strategy.
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Matrix product code [C_1, ..., C_M] * A.
    Mpc {
        /// Comma-separated constituent code files.
        #[arg(long, value_delimiter = ',', required = true)]
        codes: Vec<PathBuf>,
        /// Outer matrix A, in the code file format.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        ell: u32,
        /// Hull from the diagonal outer Gram formula.
        #[arg(long)]
        hull: bool,
        /// Hull dimension bounds.
        #[arg(long)]
        bounds: bool,
    },
    /// Run the built-in worked examples.
    VerifyExamples,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    #[value(name = "exhaustive-units", alias = "exhaustive")]
    ExhaustiveUnits,
    #[value(name = "restricted-subfield-complement", alias = "restricted")]
    RestrictedSubfieldComplement,
    #[value(name = "seeded-random", alias = "random")]
    SeededRandom,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    match run(cli.command, &mut out) {
        Ok(code) => {
            print!("{out}");
            code
        }
        Err(e) => {
            print!("{out}");
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
    }
}

fn push_matrix(out: &mut String, label: &str, m: &Matrix) {
    out.push_str(label);
    out.push_str(":\n");
    if m.rows() == 0 {
        out.push_str("(empty)\n");
    } else {
        out.push_str(&m.to_string());
        out.push('\n');
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn load_code(path: &Path) -> Result<(FieldSpec, Matrix, LinearCode)> {
    let (field, rows) = read_code_file(path)?;
    let code = LinearCode::from_rows(&rows)?;
    Ok((field, rows, code))
}

fn run(cmd: Command, out: &mut String) -> Result<ExitCode> {
    match cmd {
        Command::Hull { code, ell } => {
            let (field, rows, code) = load_code(&code)?;
            let rep = code.hull(ell)?;
            out.push_str(&format!("{}\n", format_field_header(&field)));
            out.push_str(&format!(
                "n = {}\nk = {}\nell = {ell}\nh = {}\nr = {}\n",
                code.n(),
                code.k(),
                rep.h,
                rep.r
            ));
            if rows.rows() == code.k() {
                push_matrix(out, "gram", &rows.galois_gram(ell)?);
            }
            push_matrix(out, "canonical gram", &rep.gram);
            push_matrix(out, "hull generator", rep.hull.generator());
            push_matrix(out, "structured generator", &rep.structured_gen);
            push_matrix(out, "structured gram", &rep.structured_gram());
        }
        Command::Dual { code, ell } => {
            let (field, _, code) = load_code(&code)?;
            let dual = code.dual_galois(ell)?;
            out.push_str(&format!("{}\n", format_field_header(&field)));
            out.push_str(&format!("n = {}\nk = {}\n", dual.n(), dual.k()));
            push_matrix(out, "dual generator", dual.generator());
        }
        Command::Check { code, ell } => {
            let (_, _, code) = load_code(&code)?;
            out.push_str(&format!("lcd: {}\n", code.is_lcd(ell)?));
            out.push_str(&format!("self-orthogonal: {}\n", code.is_self_orthogonal(ell)?));
            out.push_str(&format!("self-dual: {}\n", code.is_self_dual(ell)?));
        }
        Command::LcdSearch {
            code,
            ell,
            strategy,
            m,
            budget,
            seed,
        } => {
            let (_, _, code) = load_code(&code)?;
            let cfg = match strategy {
                Strategy::ExhaustiveUnits => LcdSearchConfig::ExhaustiveUnits,
                Strategy::RestrictedSubfieldComplement => LcdSearchConfig::RestrictedSubfieldComplement {
                    m: m.ok_or_else(|| {
                        Error::InvalidSearchConfig("--m is required for the restricted strategy".into())
                    })?,
                },
                Strategy::SeededRandom => LcdSearchConfig::SeededRandom { budget, seed },
            };
            let res = lcd_equivalent_search(&code, ell, &cfg)?;
            out.push_str(&format!("strategy: {}\n", cfg.name()));
            out.push_str(&format!(
                "found: {}\nexhausted: {}\nevaluations: {}\n",
                res.found(),
                res.exhausted,
                res.evaluations
            ));
            match &res.witness {
                Some(w) => {
                    out.push_str(&format!("x: {}\n", join(&w.x)));
                    out.push_str(&format!("transform perm: {}\n", join(w.transform.perm())));
                    out.push_str(&format!("transform diag: {}\n", join(w.transform.diag())));
                    push_matrix(out, "generator", w.code.generator());
                }
                None => out.push_str("x: (none)\n"),
            }
        }
        Command::Mpc {
            codes,
            matrix,
            ell,
            hull,
            bounds,
        } => {
            let constituents = codes.iter().map(|p| Ok(load_code(p)?.2)).collect::<Result<Vec<_>>>()?;
            let (_, a) = read_code_file(&matrix)?;
            let spec = MatrixProductSpec::new(constituents, a)?;
            let g = mpc_generator(&spec)?;
            out.push_str(&format!("{}\n", format_field_header(spec.field())));
            out.push_str(&format!("n = {}\nk = {}\n", g.cols(), g.rows()));
            push_matrix(out, "generator", &g);
            push_matrix(out, "outer gram", &spec.outer_gram(ell)?);
            if hull {
                let h = mpc_hull(&spec, ell)?;
                let lambda = spec.lambda(ell)?.unwrap_or_default();
                out.push_str(&format!("lambda: {}\n", join(&lambda)));
                out.push_str(&format!("hull dimension = {}\n", h.k()));
                push_matrix(out, "hull generator", h.generator());
            }
            if bounds {
                let b = mpc_hull_dim_bounds(&spec, ell)?;
                out.push_str(&format!(
                    "bounds: lower = {} upper = {} triangular = {}\n",
                    b.lower, b.upper, b.triangular
                ));
            }
        }
        Command::VerifyExamples => {
            let checks = verify_examples();
            for c in &checks {
                out.push_str(&format!(
                    "{} {}: {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            if checks.iter().any(|c| !c.passed) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
