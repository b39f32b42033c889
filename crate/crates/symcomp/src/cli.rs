//! Command-line pipeline: build, transform, and interrogate compositions
//! through JSON documents on stdin/stdout or files.
//!
//! Exit codes: `0` on success (including legitimately negative outcomes such
//! as a no-lift verdict), `1` when a mathematical verification fails, `2` on
//! usage, parse, or I/O errors. Commands that take `--composition` read the
//! document from standard input when the flag is omitted, so verbs compose
//! into shell pipelines: `symcomp build para-zorn --field prime:7 | symcomp
//! verify`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::clifford::{sample_improper_similarity, EvenCliffordRep};
use crate::composition::{SymmetricComposition, PARA_UNIT_BUDGET};
use crate::constructors;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::Matrix;
use crate::quadform::DIM;
use crate::serialize::{
    composition_from_doc, composition_to_doc, matrix_from_doc, parse_field_arg, triple_from_doc,
    triple_to_doc, CompositionFile, MatrixFile,
};
use crate::spin::{complete_triple, validate_triple};

/// Exact arithmetic for symmetric composition algebras and triality.
#[derive(Parser)]
#[command(name = "symcomp", version, about)]
struct Cli {
    /// Write the output document here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Seed for the sampled checks in `report`.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    seed: u64,

    /// Cap on the number of candidates a para-unit search may scan.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

/// The built-in composition families.
#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum Family {
    ParaZorn,
    ParaOctonion,
    SplitPetersson,
    OkuboMatrix,
    OkuboHermitian,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Construct one of the built-in composition families.
    Build {
        #[arg(value_enum)]
        family: Family,
        /// Base field: rational, prime:P, or omega-ext:BASE.
        #[arg(long)]
        field: String,
        /// First parameter (table and para-octonion families).
        #[arg(long)]
        a: Option<String>,
        /// Second parameter (table and para-octonion families).
        #[arg(long)]
        b: Option<String>,
        /// Third parameter (para-octonion family).
        #[arg(long)]
        c: Option<String>,
    },
    /// Re-check every axiom of a composition file and print its multiplier.
    Verify {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
    /// Pass to an isomorphic composition with multiplier λ = 1.
    Normalize {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
    /// Swap the two multiplication arguments.
    Opposite {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
    /// Multiply the product by a nonzero scalar.
    Scale {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
        /// The scalar ν in x ∘ y = ν·(x ⋆ y).
        #[arg(long)]
        nu: String,
    },
    /// Twist by an order-3 automorphism f: x ∘ y = f(x) ⋆ f⁻¹(y).
    Twist {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
        /// Matrix file holding the automorphism.
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Factor a similarity through the even Clifford algebra: companions
    /// g, h with λ·f(x⋆y) = g(x)⋆h(y) (proper) or h(y)⋆g(x) (improper).
    Triality {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
        /// Matrix file holding the similarity.
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Decide whether a similarity is proper or improper.
    Proper {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
        /// Matrix file holding the similarity.
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Dimension of the derivation Lie algebra.
    Derivations {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
    /// Evidence-based type verdict: I, II, or undetermined.
    Classify {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
    /// Exhaustive para-unit search over a small finite field.
    ParaUnit {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
    /// Complete a proper isometry f to a triple (f, f₁, f₂) with
    /// f(x⋆y) = f₁(x)⋆f₂(y), or report that no lift exists.
    SpinComplete {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
        /// Matrix file holding the proper isometry.
        #[arg(long, value_name = "FILE")]
        matrix: PathBuf,
    },
    /// Apply the cyclic shift (f, f₁, f₂) ↦ (f₁, f₂, f) to a triple file.
    SpinRho {
        #[arg(long, value_name = "FILE")]
        triple: Option<PathBuf>,
    },
    /// Full verification report with per-check pass/fail lines.
    Report {
        #[arg(long, value_name = "FILE")]
        composition: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct VerifyDoc {
    lambda: String,
    normalized: bool,
}

#[derive(Serialize)]
struct MapDoc {
    matrix: Vec<Vec<String>>,
    multiplier: String,
}

#[derive(Serialize)]
struct NormalizeDoc {
    composition: CompositionFile,
    map: MapDoc,
}

#[derive(Serialize)]
struct TrialityDoc {
    proper: bool,
    g: Vec<Vec<String>>,
    h: Vec<Vec<String>>,
    lambda: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nu: Option<String>,
}

#[derive(Serialize)]
struct DerivationsDoc {
    dimension: usize,
}

#[derive(Serialize)]
struct ParaUnitDoc {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    unit: Option<Vec<String>>,
    /// How far the search got: "found", "exhaustive-none",
    /// "budget-exceeded (needed N > budget M)", or "infinite-field".
    search: String,
}

#[derive(Serialize)]
struct ClassifyDoc {
    #[serde(rename = "type")]
    verdict: String,
    characteristic: u64,
    para_unit: ParaUnitDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    derivation_dimension: Option<usize>,
}

#[derive(Serialize)]
struct NoLiftDoc {
    no_lift: String,
}

#[derive(Debug, Serialize)]
struct CheckDoc {
    name: String,
    pass: bool,
    witness: String,
}

#[derive(Serialize)]
struct ReportDoc {
    /// SHA-256 of the canonical composition document.
    hash: String,
    field: String,
    lambda: String,
    derivation_dimension: usize,
    para_unit: ParaUnitDoc,
    #[serde(rename = "type")]
    verdict: String,
    checks: Vec<CheckDoc>,
}

/// Parse the process arguments, run the command, and return the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // `--help`/`--version` land here with a stdout payload; real
            // usage errors go to stderr with code 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            if let Err(e) = write_output(&cli.out, &output.text) {
                eprintln!("error: {e}");
                return 2;
            }
            if output.math_failure {
                1
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse(_) | Error::Io(_) => 2,
                _ => 1,
            }
        }
    }
}

struct CmdOutput {
    text: String,
    /// Set when the command completed but one of its verdicts is a failed
    /// mathematical check (currently only `report`).
    math_failure: bool,
}

fn ok(text: String) -> Result<CmdOutput> {
    Ok(CmdOutput {
        text,
        math_failure: false,
    })
}

fn doc_text<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents serialize");
    text.push('\n');
    text
}

fn write_output(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => {
            fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
        }
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Io(format!("stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn load_composition(path: &Option<PathBuf>) -> Result<SymmetricComposition> {
    let text = read_input(path)?;
    let doc: CompositionFile = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("composition document: {e}")))?;
    composition_from_doc(&doc)
}

fn load_matrix(path: &PathBuf, expected: &FieldSpec) -> Result<Matrix> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let doc: MatrixFile =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("matrix document: {e}")))?;
    matrix_from_doc(&doc, Some(expected))
}

fn require_param<'a>(name: &str, value: &'a Option<String>, family: &str) -> Result<&'a str> {
    value
        .as_deref()
        .ok_or_else(|| Error::Parse(format!("family {family} requires --{name}")))
}

fn forbid_params(family: &str, given: [&Option<String>; 3]) -> Result<()> {
    if given.iter().any(|v| v.is_some()) {
        return Err(Error::Parse(format!(
            "family {family} takes no --a/--b/--c parameters"
        )));
    }
    Ok(())
}

fn build_family(
    family: Family,
    field: FieldSpec,
    a: &Option<String>,
    b: &Option<String>,
    c: &Option<String>,
) -> Result<SymmetricComposition> {
    match family {
        Family::ParaZorn => {
            forbid_params("para-zorn", [a, b, c])?;
            constructors::para_zorn(field)
        }
        Family::SplitPetersson => {
            forbid_params("split-petersson", [a, b, c])?;
            constructors::split_petersson(field)
        }
        Family::OkuboMatrix => {
            forbid_params("okubo-matrix", [a, b, c])?;
            constructors::okubo_matrix(field)
        }
        Family::OkuboHermitian => {
            forbid_params("okubo-hermitian", [a, b, c])?;
            constructors::okubo_hermitian(field)
        }
        Family::ParaOctonion => {
            let a = field.parse(require_param("a", a, "para-octonion")?)?;
            let b = field.parse(require_param("b", b, "para-octonion")?)?;
            let c = field.parse(require_param("c", c, "para-octonion")?)?;
            constructors::para_octonion(field, &a, &b, &c)
        }
        Family::Table => {
            if c.is_some() {
                return Err(Error::Parse("family table takes only --a and --b".into()));
            }
            let a = field.parse(require_param("a", a, "table")?)?;
            let b = field.parse(require_param("b", b, "table")?)?;
            constructors::table_composition(field, &a, &b)
        }
    }
}

fn format_matrix(field: &FieldSpec, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|e| field.format(e)).collect())
        .collect()
}

fn format_vector(field: &FieldSpec, v: &[FieldElement]) -> Vec<String> {
    v.iter().map(|e| field.format(e)).collect()
}

/// Run the para-unit search and record how conclusive it was.
fn para_unit_evidence(comp: &SymmetricComposition, budget: u128) -> Result<ParaUnitDoc> {
    match comp.para_unit_search_with_budget(budget) {
        Ok(Some(unit)) => Ok(ParaUnitDoc {
            found: true,
            unit: Some(format_vector(comp.field(), &unit)),
            search: "found".into(),
        }),
        Ok(None) => Ok(ParaUnitDoc {
            found: false,
            unit: None,
            search: "exhaustive-none".into(),
        }),
        Err(Error::BudgetExceeded { needed, budget }) => Ok(ParaUnitDoc {
            found: false,
            unit: None,
            search: format!("budget-exceeded (needed {needed} > budget {budget})"),
        }),
        Err(Error::InfiniteField) => Ok(ParaUnitDoc {
            found: false,
            unit: None,
            search: "infinite-field".into(),
        }),
        Err(e) => Err(e),
    }
}

/// The type verdict from the gathered evidence. A para-unit pins type I. With
/// none found, an exhaustive search in characteristic 3 pins type II, and in
/// other characteristics derivation dimension 8 does — but only over finite
/// fields, where the para-unit alternative was genuinely searchable; over
/// infinite fields the verdict stays undetermined and the evidence is listed.
fn classify_verdict(
    comp: &SymmetricComposition,
    para_unit: &ParaUnitDoc,
) -> (String, Option<usize>) {
    if para_unit.found {
        return ("I".into(), None);
    }
    let characteristic = comp.field().characteristic();
    if characteristic == 3 && para_unit.search == "exhaustive-none" {
        return ("II".into(), None);
    }
    let (dimension, _) = comp.derivations();
    let finite = comp.field().size().is_some();
    if characteristic != 3 && dimension == 8 && finite {
        ("II".into(), Some(dimension))
    } else {
        ("undetermined".into(), Some(dimension))
    }
}

/// The sampled and structural checks behind `report`. Each check is pure
/// pass/fail with a witness string; the sampled ones draw from a stream
/// seeded by `--seed`, so a report is reproducible bit for bit.
fn report_checks(comp: &SymmetricComposition, seed: u64) -> Vec<CheckDoc> {
    let field = comp.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    // The composition axioms were re-verified on load; record that fact.
    checks.push(CheckDoc {
        name: "composition-axioms".into(),
        pass: true,
        witness: "n(x⋆y) = λ·n(x)·n(y) and polar associativity hold on all basis pairs".into(),
    });

    // r_x ∘ ℓ_x = λ·n(x)·Id on sampled vectors.
    let mut operator_pass = true;
    let mut operator_witness = String::from("r_x∘ℓ_x = λ·n(x)·Id for 5 sampled x");
    for _ in 0..5 {
        let x: Vec<FieldElement> = (0..DIM).map(|_| field.random(&mut rng)).collect();
        let n = comp.space().evaluate(&x).expect("full-length vector");
        let scale = field.mul(comp.multiplier(), &n);
        let product = comp.right_op(&x).mul(&comp.left_op(&x));
        let expected = Matrix::identity(field.clone(), DIM).scale(&scale);
        if product != expected {
            operator_pass = false;
            operator_witness = format!("failed at x = {:?}", format_vector(&field, &x));
            break;
        }
    }
    checks.push(CheckDoc {
        name: "left-right-operator-identity".into(),
        pass: operator_pass,
        witness: operator_witness,
    });

    // The even Clifford representation must reach full rank.
    let rep = match EvenCliffordRep::build(comp) {
        Ok(rep) => {
            checks.push(CheckDoc {
                name: "even-clifford-rank".into(),
                pass: true,
                witness: "degree-2 generator words span all of End(S)×End(S) (rank 128)".into(),
            });
            rep
        }
        Err(e) => {
            checks.push(CheckDoc {
                name: "even-clifford-rank".into(),
                pass: false,
                witness: e.to_string(),
            });
            return checks;
        }
    };

    // Left multiplications are improper; their products are proper.
    let mut parity_pass = true;
    let mut parity_witness =
        String::from("5 sampled ℓ_x improper and their pairwise products proper");
    for _ in 0..5 {
        let a = sample_improper_similarity(comp, &mut rng);
        let b = sample_improper_similarity(comp, &mut rng);
        let product = a.compose(&b);
        match (
            rep.is_proper(&a),
            rep.is_proper(&b),
            rep.is_proper(&product),
        ) {
            (Ok(false), Ok(false), Ok(true)) => {}
            other => {
                parity_pass = false;
                parity_witness = format!("parity outcome {other:?}");
                break;
            }
        }
    }
    checks.push(CheckDoc {
        name: "improper-sign-rule".into(),
        pass: parity_pass,
        witness: parity_witness,
    });

    // A sampled proper similarity factors with all three scalar relations.
    let f = sample_improper_similarity(comp, &mut rng)
        .compose(&sample_improper_similarity(comp, &mut rng));
    match rep.triality_triple(&f) {
        Ok(triple) => checks.push(CheckDoc {
            name: "triality-factorization".into(),
            pass: true,
            witness: format!(
                "λ·f(x⋆y) = g(x)⋆h(y) with λ = {}, μ = {}, ν = {} and λμ = μ(h), μν = μ(f), λν = μ(g)",
                field.format(&triple.lambda),
                field.format(&triple.mu),
                field.format(&triple.nu)
            ),
        }),
        Err(e) => checks.push(CheckDoc {
            name: "triality-factorization".into(),
            pass: false,
            witness: e.to_string(),
        }),
    }

    checks
}

fn execute(cli: &Cli) -> Result<CmdOutput> {
    let budget = cli.budget.unwrap_or(PARA_UNIT_BUDGET);
    match &cli.command {
        Command::Build {
            family,
            field,
            a,
            b,
            c,
        } => {
            let spec = parse_field_arg(field)?;
            let comp = build_family(*family, spec, a, b, c)?;
            ok(doc_text(&composition_to_doc(&comp)))
        }
        Command::Verify { composition } => {
            let comp = load_composition(composition)?;
            ok(doc_text(&VerifyDoc {
                lambda: comp.field().format(comp.multiplier()),
                normalized: comp.is_normalized(),
            }))
        }
        Command::Normalize { composition } => {
            let comp = load_composition(composition)?;
            let (normalized, map) = comp.normalize(None)?;
            ok(doc_text(&NormalizeDoc {
                composition: composition_to_doc(&normalized),
                map: MapDoc {
                    matrix: format_matrix(comp.field(), map.matrix()),
                    multiplier: comp.field().format(map.multiplier()),
                },
            }))
        }
        Command::Opposite { composition } => {
            let comp = load_composition(composition)?;
            ok(doc_text(&composition_to_doc(&comp.opposite())))
        }
        Command::Scale { composition, nu } => {
            let comp = load_composition(composition)?;
            let nu = comp.field().parse(nu)?;
            ok(doc_text(&composition_to_doc(&comp.scale(&nu)?)))
        }
        Command::Twist {
            composition,
            matrix,
        } => {
            let comp = load_composition(composition)?;
            let m = load_matrix(matrix, comp.field())?;
            ok(doc_text(&composition_to_doc(
                &comp.twist_by_automorphism(&m)?,
            )))
        }
        Command::Triality {
            composition,
            matrix,
        } => {
            let comp = load_composition(composition)?;
            let m = load_matrix(matrix, comp.field())?;
            let f = comp.space().similarity_from_matrix(&m)?;
            let rep = EvenCliffordRep::build(&comp)?;
            let field = comp.field();
            let doc = if rep.is_proper(&f)? {
                let triple = rep.triality_triple(&f)?;
                TrialityDoc {
                    proper: true,
                    g: format_matrix(field, triple.g.matrix()),
                    h: format_matrix(field, triple.h.matrix()),
                    lambda: field.format(&triple.lambda),
                    mu: Some(field.format(&triple.mu)),
                    nu: Some(field.format(&triple.nu)),
                }
            } else {
                let pair = rep.improper_pair(&f)?;
                TrialityDoc {
                    proper: false,
                    g: format_matrix(field, pair.g.matrix()),
                    h: format_matrix(field, pair.h.matrix()),
                    lambda: field.format(&pair.lambda),
                    mu: None,
                    nu: None,
                }
            };
            ok(doc_text(&doc))
        }
        Command::Proper {
            composition,
            matrix,
        } => {
            let comp = load_composition(composition)?;
            let m = load_matrix(matrix, comp.field())?;
            let f = comp.space().similarity_from_matrix(&m)?;
            let rep = EvenCliffordRep::build(&comp)?;
            let verdict = if rep.is_proper(&f)? {
                "proper"
            } else {
                "improper"
            };
            ok(format!("{verdict}\n"))
        }
        Command::Derivations { composition } => {
            let comp = load_composition(composition)?;
            let (dimension, _) = comp.derivations();
            ok(doc_text(&DerivationsDoc { dimension }))
        }
        Command::Classify { composition } => {
            let comp = load_composition(composition)?;
            let para_unit = para_unit_evidence(&comp, budget)?;
            let (verdict, derivation_dimension) = classify_verdict(&comp, &para_unit);
            ok(doc_text(&ClassifyDoc {
                verdict,
                characteristic: comp.field().characteristic(),
                para_unit,
                derivation_dimension,
            }))
        }
        Command::ParaUnit { composition } => {
            let comp = load_composition(composition)?;
            ok(doc_text(&para_unit_evidence(&comp, budget)?))
        }
        Command::SpinComplete {
            composition,
            matrix,
        } => {
            let comp = load_composition(composition)?;
            let m = load_matrix(matrix, comp.field())?;
            let f = comp.space().similarity_from_matrix(&m)?;
            let rep = EvenCliffordRep::build(&comp)?;
            match complete_triple(&rep, &f) {
                Ok(triple) => ok(doc_text(&triple_to_doc(&triple))),
                Err(Error::NoLift(reason)) => ok(doc_text(&NoLiftDoc { no_lift: reason })),
                Err(e) => Err(e),
            }
        }
        Command::SpinRho { triple } => {
            let text = read_input(triple)?;
            let doc = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("triple document: {e}")))?;
            let (comp, [f, f1, f2]) = triple_from_doc(&doc)?;
            let rep = EvenCliffordRep::build(&comp)?;
            let validated = validate_triple(&rep, &f, &f1, &f2)?;
            ok(doc_text(&triple_to_doc(&validated.rho_hat())))
        }
        Command::Report { composition } => {
            let comp = load_composition(composition)?;
            let canonical = doc_text(&composition_to_doc(&comp));
            let hash = Sha256::digest(canonical.as_bytes())
                .iter()
                .map(|b| format!("{b:02x}"))
                .collect::<String>();
            let para_unit = para_unit_evidence(&comp, budget)?;
            let (verdict, _) = classify_verdict(&comp, &para_unit);
            let (derivation_dimension, _) = comp.derivations();
            let checks = report_checks(&comp, cli.seed);
            let math_failure = checks.iter().any(|c| !c.pass);
            Ok(CmdOutput {
                text: doc_text(&ReportDoc {
                    hash,
                    field: comp.field().to_string(),
                    lambda: comp.field().format(comp.multiplier()),
                    derivation_dimension,
                    para_unit,
                    verdict,
                    checks,
                }),
                math_failure,
            })
        }
    }
}
