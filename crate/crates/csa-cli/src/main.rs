//! Command-line front end. Each subcommand wraps one library operation,
//! reading the JSON documents from `csa::doc` and writing one JSON value
//! (or, for `charpoly-check --explain`, a prose certificate) to standard
//! output.
//!
//! Exit codes compose in shells: 0 for success and yes verdicts, 2 when a
//! decision command answers no, 1 on errors with an {"error": ...}
//! diagnostic on standard error. Output is a pure function of the inputs,
//! flags, and seed.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use csa::brauer::{capacity_and_division_degree_over, SplittingOverride};
use csa::charpoly::{embeds, is_characteristic_polynomial, CharPolyVerdict};
use csa::classes::{
    class_count, classes_with_charpoly, enumerate_division_classes, rcf_structure,
    realizable_pair,
};
use csa::doc::{
    overrides_from_json, poly_from_doc, poly_to_doc, AlgebraDoc, ClassDoc, MatrixDoc,
    RcfDoc, SplittingDoc, VerdictDoc,
};
use csa::error::{Error, Result};
use csa::parse::parse_poly;
use csa::poly::RatPoly;
use csa::quat::{conjugate_test, invariants_of_element, search_realization};
use csa::splitting::{local_splitting, Place};

#[derive(Parser)]
#[command(
    name = "csa",
    about = "Characteristic polynomials and conjugacy classes of central simple algebras over Q"
)]
struct Cli {
    /// Output rendering: compact json or indented pretty
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a polynomial into monic irreducibles over Q
    Factor {
        #[arg(long)]
        poly: String,
    },
    /// Ramification indices and residue degrees of Q[t]/(g) at one place
    Splitting {
        #[arg(long)]
        poly: String,
        /// "inf" or a rational prime
        #[arg(long)]
        place: String,
    },
    /// Capacity and division degree of the division part tensored with Q[t]/(g)
    Capacity {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
    },
    /// Decide whether f is the characteristic polynomial of some element
    CharpolyCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
        /// Render the certificate as prose instead of JSON
        #[arg(long)]
        explain: bool,
    },
    /// Decide whether the field Q[t]/(g) embeds into the algebra
    EmbedCheck {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
    },
    /// Enumerate the conjugacy classes of invertible elements with characteristic polynomial f
    Classes {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
    },
    /// Rational canonical data of one conjugacy class
    Rcf {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        class: PathBuf,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
    },
    /// Decide whether characteristic polynomial f and minimal polynomial m occur together
    Realizable {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long = "min-poly")]
        min_poly: String,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
    },
    /// Characteristic polynomial of a matrix over a quaternion algebra
    QuatCharpoly {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Measured conjugacy invariants of a matrix over a quaternion division algebra
    QuatInvariants {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Decide whether two matrices over the same quaternion division algebra are conjugate
    QuatConjugate {
        /// Give this flag exactly twice
        #[arg(long = "matrix")]
        matrix: Vec<PathBuf>,
    },
    /// Search for a matrix with the given characteristic polynomial
    QuatSearch {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 3)]
        height: i64,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Filter candidate minimal polynomials of elements of a division algebra
    DivisionClasses {
        #[arg(long)]
        algebra: PathBuf,
        /// Candidate polynomial; repeat the flag, or give a file with a JSON list of coefficient lists
        #[arg(long = "poly", required = true)]
        poly: Vec<String>,
        #[arg(long = "override")]
        overrides: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("{}", serde_json::json!({ "error": err.to_string() }));
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Factor { poly } => {
            let f = read_poly(poly)?;
            let factorization = csa::factor::factor_over_q(&f)?;
            let out = FactorsOut {
                factors: factorization
                    .factors
                    .iter()
                    .map(|(p, a)| FactorEntry {
                        poly: poly_to_doc(p),
                        multiplicity: *a,
                    })
                    .collect(),
            };
            emit(cli.format, &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Splitting { poly, place } => {
            let g = read_poly(poly)?;
            let place = Place::from_str(place)?;
            let st = local_splitting(&g, &place)?;
            emit(cli.format, &SplittingDoc::new(&place, &st));
            Ok(ExitCode::SUCCESS)
        }
        Command::Capacity {
            algebra,
            poly,
            overrides,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let g = read_poly(poly)?;
            let overrides = read_overrides(overrides.as_deref())?;
            let (c, d) = capacity_and_division_degree_over(&algebra, &g, &overrides)?;
            emit(
                cli.format,
                &CapacityOut {
                    capacity: c,
                    division_degree: d,
                },
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::CharpolyCheck {
            algebra,
            poly,
            overrides,
            explain,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let f = read_poly(poly)?;
            let overrides = read_overrides(overrides.as_deref())?;
            let verdict = is_characteristic_polynomial(&algebra, &f, &overrides)?;
            if *explain {
                print!("{}", explain_verdict(&verdict, &f));
            } else {
                emit(cli.format, &VerdictDoc::from_verdict(&verdict));
            }
            Ok(verdict_code(verdict.answer))
        }
        Command::EmbedCheck {
            algebra,
            poly,
            overrides,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let g = read_poly(poly)?;
            let overrides = read_overrides(overrides.as_deref())?;
            let answer = embeds(&algebra, &g, &overrides)?;
            emit(cli.format, &EmbedsOut { embeds: answer });
            Ok(verdict_code(answer))
        }
        Command::Classes {
            algebra,
            poly,
            overrides,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let f = read_poly(poly)?;
            let overrides = read_overrides(overrides.as_deref())?;
            let classes = classes_with_charpoly(&algebra, &f, &overrides)?;
            let count = class_count(&algebra, &f, &overrides)?;
            let out = ClassesOut {
                count: count.to_string(),
                classes: classes.iter().map(ClassDoc::from_class).collect(),
            };
            emit(cli.format, &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Rcf {
            algebra,
            class,
            overrides,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let class = ClassDoc::from_json(&read_file(class)?)?.to_class()?;
            let overrides = read_overrides(overrides.as_deref())?;
            let rcf = rcf_structure(&algebra, &class, &overrides)?;
            emit(cli.format, &RcfDoc::from_structure(&rcf));
            Ok(ExitCode::SUCCESS)
        }
        Command::Realizable {
            algebra,
            poly,
            min_poly,
            overrides,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let f = read_poly(poly)?;
            let m = read_poly(min_poly)?;
            let overrides = read_overrides(overrides.as_deref())?;
            let answer = realizable_pair(&algebra, &f, &m, &overrides)?;
            emit(cli.format, &RealizableOut { realizable: answer });
            Ok(verdict_code(answer))
        }
        Command::QuatCharpoly { matrix } => {
            let m = read_matrix(matrix)?;
            let out = CharPolyOut {
                char_poly: poly_to_doc(&m.char_poly()),
            };
            emit(cli.format, &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::QuatInvariants { matrix } => {
            let m = read_matrix(matrix)?;
            let inv = invariants_of_element(&m, true)?;
            let out = InvariantsOut {
                char_poly: poly_to_doc(&inv.char_poly),
                min_poly: poly_to_doc(&inv.min_poly),
                class: inv.class.as_ref().map(ClassDoc::from_class),
                t_part: inv.t_part.as_ref().map(|p| p.parts().to_vec()),
            };
            emit(cli.format, &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::QuatConjugate { matrix } => {
            let [first, second] = matrix.as_slice() else {
                return Err(Error::Document(
                    "give --matrix exactly twice, one file per element".into(),
                ));
            };
            let m1 = read_matrix(first)?;
            let m2 = read_matrix(second)?;
            let answer = conjugate_test(&m1, &m2)?;
            emit(cli.format, &ConjugateOut { conjugate: answer });
            Ok(verdict_code(answer))
        }
        Command::QuatSearch {
            algebra,
            poly,
            height,
            trials,
            seed,
        } => {
            let (quat, n) = read_algebra(algebra)?.to_quaternion()?;
            let f = read_poly(poly)?;
            let witness = search_realization(&quat, n, &f, *height, *trials, *seed)?;
            let out = SearchOut {
                found: witness.as_ref().map(MatrixDoc::from_matrix),
            };
            let code = verdict_code(out.found.is_some());
            emit(cli.format, &out);
            Ok(code)
        }
        Command::DivisionClasses {
            algebra,
            poly,
            overrides,
        } => {
            let algebra = read_algebra(algebra)?.to_csa()?;
            let candidates = read_poly_list(poly)?;
            let overrides = read_overrides(overrides.as_deref())?;
            let qualified = enumerate_division_classes(&algebra, &candidates, &overrides)?;
            let out = DivisionClassesOut {
                classes: qualified
                    .iter()
                    .map(|g| {
                        ClassDoc::from_class(&csa::classes::ClassInvariant::new(
                            [(g.clone(), csa::classes::Partition::new(vec![1]).expect("the one-part partition"))]
                                .into_iter()
                                .collect(),
                        )
                        .expect("a single irreducible with partition (1)"))
                    })
                    .collect(),
            };
            emit(cli.format, &out);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verdict_code(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn emit<T: Serialize>(format: Format, value: &T) {
    let text = match format {
        Format::Json => serde_json::to_string(value),
        Format::Pretty => serde_json::to_string_pretty(value),
    }
    .expect("output serializes");
    println!("{text}");
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))
}

/// A polynomial argument: inline infix text, an inline JSON coefficient
/// list, or a path to a file holding either.
fn read_poly(arg: &str) -> Result<RatPoly> {
    let text = if Path::new(arg).is_file() {
        read_file(Path::new(arg))?
    } else {
        arg.to_string()
    };
    poly_from_text(&text)
}

fn poly_from_text(text: &str) -> Result<RatPoly> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let coeffs: Vec<String> =
            serde_json::from_str(trimmed).map_err(|e| Error::Document(e.to_string()))?;
        poly_from_doc(&coeffs)
    } else {
        parse_poly(trimmed)
    }
}

/// Candidate lists: each argument is a polynomial as in `read_poly`, and a
/// file may also hold a JSON list of coefficient lists.
fn read_poly_list(args: &[String]) -> Result<Vec<RatPoly>> {
    let mut out = Vec::new();
    for arg in args {
        let text = if Path::new(arg).is_file() {
            read_file(Path::new(arg))?
        } else {
            arg.clone()
        };
        let trimmed = text.trim();
        if let Ok(lists) = serde_json::from_str::<Vec<Vec<String>>>(trimmed) {
            for list in &lists {
                out.push(poly_from_doc(list)?);
            }
        } else {
            out.push(poly_from_text(trimmed)?);
        }
    }
    Ok(out)
}

fn read_algebra(path: &Path) -> Result<AlgebraDoc> {
    AlgebraDoc::from_json(&read_file(path)?)
}

fn read_matrix(path: &Path) -> Result<csa::quat::QuatMat> {
    MatrixDoc::from_json(&read_file(path)?)?.to_matrix()
}

fn read_overrides(path: Option<&Path>) -> Result<SplittingOverride> {
    match path {
        None => Ok(SplittingOverride::empty()),
        Some(p) => overrides_from_json(&read_file(p)?),
    }
}

/// Prose rendering of a characteristic-polynomial certificate. Condition
/// (a) asks that each factor's multiplicity times its degree be divisible
/// by the division degree d, so the factor can carry a module over the
/// division part; condition (b) asks that the factor's degree divide n*c,
/// where n is that module's dimension and c is the capacity of the
/// division part tensored with the factor's field.
fn explain_verdict(verdict: &CharPolyVerdict, f: &RatPoly) -> String {
    let algebra = &verdict.algebra;
    let d = algebra.division_degree();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "The algebra is Mat_{}(D) for a division algebra D of degree {} over Q; \
         its elements have characteristic polynomials of degree {}.",
        algebra.capacity(),
        d,
        algebra.degree()
    );
    let shown: Vec<String> = verdict
        .certificates
        .iter()
        .map(|cert| {
            if cert.multiplicity == 1 {
                format!("({})", cert.factor)
            } else {
                format!("({})^{}", cert.factor, cert.multiplicity)
            }
        })
        .collect();
    let _ = writeln!(out, "f = {} factors as {}.", f, shown.join(" "));
    for cert in &verdict.certificates {
        let _ = writeln!(
            out,
            "factor {} of degree {}, multiplicity {}:",
            cert.factor, cert.factor_degree, cert.multiplicity
        );
        let product = cert.multiplicity * cert.factor_degree;
        if cert.cond_a {
            let n = cert.component_dim.expect("set when condition (a) holds");
            let c = cert.tensor_capacity.expect("set when condition (a) holds");
            let _ = writeln!(
                out,
                "  (a) holds: {} * {} = {} is divisible by d = {}, giving a component of \
                 dimension n = {} over D.",
                cert.multiplicity, cert.factor_degree, product, d, n
            );
            if cert.cond_b == Some(true) {
                let _ = writeln!(
                    out,
                    "  (b) holds: D over the field of this factor has capacity c = {}, and \
                     deg = {} divides n*c = {}.",
                    c,
                    cert.factor_degree,
                    n * c
                );
            } else {
                let _ = writeln!(
                    out,
                    "  (b) fails: D over the field of this factor has capacity c = {}, and \
                     deg = {} does not divide n*c = {}.",
                    c,
                    cert.factor_degree,
                    n * c
                );
            }
        } else {
            let _ = writeln!(
                out,
                "  (a) fails: {} * {} = {} is not divisible by d = {}, so no element \
                 carries this factor with this multiplicity.",
                cert.multiplicity, cert.factor_degree, product, d
            );
            let _ = writeln!(out, "  (b) not evaluated.");
        }
    }
    let _ = writeln!(
        out,
        "answer: {}.",
        if verdict.answer { "yes" } else { "no" }
    );
    out
}

#[derive(Serialize)]
struct FactorEntry {
    poly: Vec<String>,
    multiplicity: usize,
}

#[derive(Serialize)]
struct FactorsOut {
    factors: Vec<FactorEntry>,
}

#[derive(Serialize)]
struct CapacityOut {
    capacity: usize,
    division_degree: usize,
}

#[derive(Serialize)]
struct EmbedsOut {
    embeds: bool,
}

#[derive(Serialize)]
struct ClassesOut {
    count: String,
    classes: Vec<ClassDoc>,
}

#[derive(Serialize)]
struct RealizableOut {
    realizable: bool,
}

#[derive(Serialize)]
struct CharPolyOut {
    char_poly: Vec<String>,
}

#[derive(Serialize)]
struct InvariantsOut {
    char_poly: Vec<String>,
    min_poly: Vec<String>,
    class: Option<ClassDoc>,
    t_part: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ConjugateOut {
    conjugate: bool,
}

#[derive(Serialize)]
struct SearchOut {
    found: Option<MatrixDoc>,
}

#[derive(Serialize)]
struct DivisionClassesOut {
    classes: Vec<ClassDoc>,
}
