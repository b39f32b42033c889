//! JSON file formats for fields, compositions, matrices, and spin triples.
//!
//! Every scalar is stored as the canonical string produced by
//! [`FieldSpec::format`], so files are exact and independent of any binary
//! float representation. Serialization is deterministic: struct fields keep
//! their declaration order and re-serializing a parsed canonical file
//! reproduces it byte for byte.

use crate::composition::SymmetricComposition;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::linalg::Matrix;
use crate::quadform::{QuadraticSpace, DIM};
use crate::spin::SpinTriple;
use serde::{Deserialize, Serialize};

/// A base field: `{"kind":"rational"}`, `{"kind":"prime","p":7}`, or
/// `{"kind":"omega_ext","base":{...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldDoc {
    Rational,
    Prime { p: u64 },
    OmegaExt { base: Box<FieldDoc> },
}

impl FieldDoc {
    pub fn from_spec(spec: &FieldSpec) -> FieldDoc {
        match spec {
            FieldSpec::Rational => FieldDoc::Rational,
            FieldSpec::Prime(p) => FieldDoc::Prime { p: *p },
            FieldSpec::OmegaExt(base) => FieldDoc::OmegaExt {
                base: Box::new(FieldDoc::from_spec(base)),
            },
        }
    }

    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldDoc::Rational => Ok(FieldSpec::Rational),
            FieldDoc::Prime { p } => FieldSpec::prime(*p),
            FieldDoc::OmegaExt { base } => FieldSpec::omega_ext(base.to_spec()?),
        }
    }
}

/// The coefficient table of a quadratic form, upper-triangular, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuadformDoc {
    pub upper: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub quadform: QuadformDoc,
}

/// A symmetric composition: its quadratic space, the structure-constant
/// tensor `gamma[i][j][k]` with `(e_i ⋆ e_j)_k = γ_{ijk}`, and the norm
/// multiplier `λ` (stored for the reader; it is recomputed and checked on
/// load).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionDoc {
    pub space: SpaceDoc,
    pub gamma: Vec<Vec<Vec<String>>>,
    pub lambda: String,
}

/// Top-level composition file: `{"field": ..., "composition": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionFile {
    pub field: FieldDoc,
    pub composition: CompositionDoc,
}

/// Top-level matrix file: `{"field": ..., "matrix": [[...]]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub field: FieldDoc,
    pub matrix: Vec<Vec<String>>,
}

/// Top-level spin-triple file: the composition it lives over and the three
/// component matrices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleFile {
    pub field: FieldDoc,
    pub composition: CompositionDoc,
    pub f: Vec<Vec<String>>,
    pub f1: Vec<Vec<String>>,
    pub f2: Vec<Vec<String>>,
}

fn format_matrix(field: &FieldSpec, m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|e| field.format(e)).collect())
        .collect()
}

fn parse_matrix(field: &FieldSpec, rows: &[Vec<String>], what: &str) -> Result<Matrix> {
    if rows.len() != DIM || rows.iter().any(|r| r.len() != DIM) {
        return Err(Error::Parse(format!("{what} must be an 8×8 array")));
    }
    let mut parsed = Vec::with_capacity(DIM);
    for row in rows {
        let mut out = Vec::with_capacity(DIM);
        for cell in row {
            out.push(field.parse(cell)?);
        }
        parsed.push(out);
    }
    Matrix::from_rows(field.clone(), parsed)
}

/// Serialize a composition with canonical scalar strings.
pub fn composition_to_doc(c: &SymmetricComposition) -> CompositionFile {
    let field = c.field();
    let gamma = (0..DIM)
        .map(|i| {
            (0..DIM)
                .map(|j| {
                    (0..DIM)
                        .map(|k| field.format(c.gamma_at(i, j, k)))
                        .collect()
                })
                .collect()
        })
        .collect();
    CompositionFile {
        field: FieldDoc::from_spec(field),
        composition: CompositionDoc {
            space: SpaceDoc {
                quadform: QuadformDoc {
                    upper: format_matrix(field, c.space().upper()),
                },
            },
            gamma,
            lambda: field.format(c.multiplier()),
        },
    }
}

/// Parse and re-verify a composition file. The stored λ must match the
/// recomputed multiplier, so a tampered file cannot smuggle in a wrong
/// normalization claim.
pub fn composition_from_doc(doc: &CompositionFile) -> Result<SymmetricComposition> {
    let field = doc.field.to_spec()?;
    let upper = parse_matrix(&field, &doc.composition.space.quadform.upper, "quadform.upper")?;
    let space = QuadraticSpace::new(field.clone(), upper)?;
    let g = &doc.composition.gamma;
    if g.len() != DIM || g.iter().any(|p| p.len() != DIM || p.iter().any(|r| r.len() != DIM)) {
        return Err(Error::Parse("gamma must be an 8×8×8 array".into()));
    }
    let mut gamma = Vec::with_capacity(DIM * DIM * DIM);
    for plane in g {
        for row in plane {
            for cell in row {
                gamma.push(field.parse(cell)?);
            }
        }
    }
    let c = SymmetricComposition::verify(space, gamma)?;
    let stated = field.parse(&doc.composition.lambda)?;
    if &stated != c.multiplier() {
        return Err(Error::CompositionViolation {
            condition: 1,
            witness: format!(
                "stated multiplier {} but recomputed {}",
                doc.composition.lambda,
                field.format(c.multiplier())
            ),
        });
    }
    Ok(c)
}

/// Serialize a matrix over the given field.
pub fn matrix_to_doc(field: &FieldSpec, m: &Matrix) -> MatrixFile {
    MatrixFile {
        field: FieldDoc::from_spec(field),
        matrix: format_matrix(field, m),
    }
}

/// Parse a matrix file, requiring it to live over `expected` when given.
pub fn matrix_from_doc(doc: &MatrixFile, expected: Option<&FieldSpec>) -> Result<Matrix> {
    let field = doc.field.to_spec()?;
    if let Some(want) = expected {
        if &field != want {
            return Err(Error::FieldMismatch {
                expected: want.to_string(),
                found: field.to_string(),
            });
        }
    }
    parse_matrix(&field, &doc.matrix, "matrix")
}

/// Serialize a spin triple together with its composition.
pub fn triple_to_doc(t: &SpinTriple) -> TripleFile {
    let c = composition_to_doc(t.composition());
    let field = t.composition().field();
    TripleFile {
        field: c.field,
        composition: c.composition,
        f: format_matrix(field, t.f()),
        f1: format_matrix(field, t.f1()),
        f2: format_matrix(field, t.f2()),
    }
}

/// The composition and raw component matrices of a triple file; validation
/// against the spin invariants is the caller's job (it needs a Clifford
/// representation).
pub fn triple_from_doc(doc: &TripleFile) -> Result<(SymmetricComposition, [Matrix; 3])> {
    let comp_doc = CompositionFile {
        field: doc.field.clone(),
        composition: doc.composition.clone(),
    };
    let c = composition_from_doc(&comp_doc)?;
    let field = c.field().clone();
    Ok((
        c,
        [
            parse_matrix(&field, &doc.f, "f")?,
            parse_matrix(&field, &doc.f1, "f1")?,
            parse_matrix(&field, &doc.f2, "f2")?,
        ],
    ))
}

/// Parse a `--field` argument: `rational`, `prime:P`, or `omega-ext:BASE`.
pub fn parse_field_arg(s: &str) -> Result<FieldSpec> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("rational") || s == "Q" {
        return Ok(FieldSpec::Rational);
    }
    if let Some(rest) = s.strip_prefix("prime:") {
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime modulus {rest:?}")))?;
        return FieldSpec::prime(p);
    }
    if let Some(rest) = s.strip_prefix("omega-ext:") {
        return FieldSpec::omega_ext(parse_field_arg(rest)?);
    }
    Err(Error::Parse(format!(
        "unrecognized field {s:?}; expected rational, prime:P, or omega-ext:BASE"
    )))
}
