//! JSON file formats.
//!
//! A Laurent polynomial is a list of `{"coeff": "p/q", "exp": {"q": .., "eta": .., "u": .., "a": ..}}`
//! terms in the fixed monomial order (zero exponents omitted); a rational
//! function is `{"num": .., "den": ..}`. Matrices are dense row-major lists of
//! rows.

use std::collections::BTreeMap;
use std::str::FromStr;

use hecke_forge_core::drinfeld::DrinfeldianRep;
use hecke_forge_core::functor::{FunctorBuild, HeckeModule, QuotientSpace};
use hecke_forge_core::heckealg::{AhaElement, NormalMonomial, Permutation};
use hecke_forge_core::matrix::RepMatrix;
use hecke_forge_core::qrep::ChevalleyRep;
use hecke_forge_core::report::{Fact, RelationCheck, Status, VerificationReport, Witness};
use hecke_forge_core::scalar::Exponent;
use hecke_forge_core::{LaurentPoly, Matrix, RatFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::FormatError;

fn is_zero(x: &i32) -> bool {
    *x == 0
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpJson {
    #[serde(default, skip_serializing_if = "is_zero")]
    pub q: i32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub eta: i32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub u: i32,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub a: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    #[serde(default)]
    pub exp: ExpJson,
}

pub type PolyJson = Vec<TermJson>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

pub type MatrixJson = Vec<Vec<RatFuncJson>>;

pub fn parse_rational(s: &str) -> Result<BigRational, FormatError> {
    let bad = || FormatError::Value(format!("bad rational {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn poly_to_json(p: &LaurentPoly) -> PolyJson {
    p.terms()
        .iter()
        .map(|(e, c)| TermJson {
            coeff: c.to_string(),
            exp: ExpJson {
                q: e.0[0],
                eta: e.0[1],
                u: e.0[2],
                a: e.0[3],
            },
        })
        .collect()
}

pub fn poly_from_json(p: &PolyJson) -> Result<LaurentPoly, FormatError> {
    let mut terms = Vec::with_capacity(p.len());
    for t in p {
        let e = Exponent([t.exp.q, t.exp.eta, t.exp.u, t.exp.a]);
        if !e.is_admissible() {
            return Err(FormatError::Value(format!(
                "negative exponent of eta, u or a in {:?}",
                t.exp
            )));
        }
        terms.push((e, parse_rational(&t.coeff)?));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn ratfunc_to_json(x: &RatFunc) -> RatFuncJson {
    RatFuncJson {
        num: poly_to_json(x.numer()),
        den: poly_to_json(x.denom()),
    }
}

pub fn ratfunc_from_json(x: &RatFuncJson) -> Result<RatFunc, FormatError> {
    Ok(RatFunc::new(poly_from_json(&x.num)?, poly_from_json(&x.den)?)?)
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ratfunc_to_json).collect())
        .collect()
}

pub fn matrix_from_json(m: &MatrixJson) -> Result<Matrix, FormatError> {
    let rows = m
        .iter()
        .map(|r| r.iter().map(ratfunc_from_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    if rows.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Ok(Matrix::from_rows(rows)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepMatrixJson {
    pub n: usize,
    pub legs: usize,
    pub rows: MatrixJson,
}

pub fn rep_matrix_to_json(m: &RepMatrix) -> RepMatrixJson {
    RepMatrixJson {
        n: m.n,
        legs: m.legs,
        rows: matrix_to_json(&m.matrix),
    }
}

pub fn rep_matrix_from_json(m: &RepMatrixJson) -> Result<RepMatrix, FormatError> {
    Ok(RepMatrix::new(m.n, m.legs, matrix_from_json(&m.rows)?)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AhaTermJson {
    pub upows: Vec<u32>,
    pub word: Vec<usize>,
    pub coeff: RatFuncJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AhaElementJson {
    pub l: usize,
    pub terms: Vec<AhaTermJson>,
}

pub fn aha_to_json(x: &AhaElement) -> AhaElementJson {
    AhaElementJson {
        l: x.l(),
        terms: x
            .terms()
            .map(|(m, c)| AhaTermJson {
                upows: m.upows.clone(),
                word: m.perm.word(),
                coeff: ratfunc_to_json(c),
            })
            .collect(),
    }
}

pub fn aha_from_json(x: &AhaElementJson) -> Result<AhaElement, FormatError> {
    let mut terms = Vec::with_capacity(x.terms.len());
    for t in &x.terms {
        let perm = Permutation::from_word(x.l, &t.word)?;
        if perm.word() != t.word {
            return Err(FormatError::Value(format!(
                "word {:?} is not the canonical reduced word {:?}",
                t.word,
                perm.word()
            )));
        }
        terms.push((NormalMonomial::new(t.upows.clone(), perm)?, ratfunc_from_json(&t.coeff)?));
    }
    Ok(AhaElement::from_terms(x.l, terms)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HeckeModuleJson {
    pub l: usize,
    pub dim: usize,
    pub sigma: Vec<MatrixJson>,
    pub u: Vec<MatrixJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<RatFuncJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<RatFuncJson>,
}

pub fn module_to_json(m: &HeckeModule) -> HeckeModuleJson {
    let opt = |x: &RatFunc, sym: RatFunc| if *x == sym { None } else { Some(ratfunc_to_json(x)) };
    HeckeModuleJson {
        l: m.l,
        dim: m.dim,
        sigma: m.sigma.iter().map(matrix_to_json).collect(),
        u: m.u.iter().map(matrix_to_json).collect(),
        q: opt(&m.q, RatFunc::q()),
        eta: opt(&m.eta, RatFunc::eta()),
    }
}

pub fn module_from_json(m: &HeckeModuleJson) -> Result<HeckeModule, FormatError> {
    let mats = |v: &[MatrixJson]| v.iter().map(matrix_from_json).collect::<Result<Vec<_>, _>>();
    let q = m.q.as_ref().map(ratfunc_from_json).transpose()?.unwrap_or_else(RatFunc::q);
    let eta = m.eta.as_ref().map(ratfunc_from_json).transpose()?.unwrap_or_else(RatFunc::eta);
    let out = HeckeModule::with_params(m.l, mats(&m.sigma)?, mats(&m.u)?, q, eta)?;
    if out.dim != m.dim {
        return Err(FormatError::Value(format!(
            "declared dim {} but matrices are {}x{}",
            m.dim, out.dim, out.dim
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledMatrixJson {
    pub label: String,
    pub rows: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DrinfeldianRepJson {
    pub n: usize,
    pub dim: usize,
    pub eta: RatFuncJson,
    pub generators: Vec<LabeledMatrixJson>,
}

pub fn drinfeldian_to_json(r: &DrinfeldianRep) -> DrinfeldianRepJson {
    DrinfeldianRepJson {
        n: r.n(),
        dim: r.dim(),
        eta: ratfunc_to_json(&r.eta),
        generators: r
            .generators()
            .into_iter()
            .map(|(label, m)| LabeledMatrixJson {
                label,
                rows: matrix_to_json(m),
            })
            .collect(),
    }
}

pub fn drinfeldian_from_json(r: &DrinfeldianRepJson) -> Result<DrinfeldianRep, FormatError> {
    let mut by_label = BTreeMap::new();
    for g in &r.generators {
        let m = matrix_from_json(&g.rows)?;
        if m.rows() != r.dim || m.cols() != r.dim {
            return Err(FormatError::Value(format!("generator {} is not {}x{}", g.label, r.dim, r.dim)));
        }
        by_label.insert(g.label.clone(), m);
    }
    let mut take = |label: String| {
        by_label
            .remove(&label)
            .ok_or_else(|| FormatError::Value(format!("missing generator {label}")))
    };
    let n = r.n;
    let mut k_pos = Vec::new();
    let mut k_neg = Vec::new();
    for i in 1..=n + 1 {
        k_pos.push(take(format!("q^e{i}{i}"))?);
        k_neg.push(take(format!("q^-e{i}{i}"))?);
    }
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 1..=n {
        e.push(take(format!("e{}{}", i, i + 1))?);
        f.push(take(format!("e{}{}", i + 1, i))?);
    }
    let xi = take("xi".to_string())?;
    Ok(DrinfeldianRep {
        base: ChevalleyRep { n, k_pos, k_neg, e, f },
        xi,
        eta: ratfunc_from_json(&r.eta)?,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessJson {
    Matrix(MatrixJson),
    Element(AhaElementJson),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    #[serde(rename = "relation-id")]
    pub relation_id: String,
    pub context: String,
    pub status: String,
    pub instances: usize,
    pub witness: Option<WitnessJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactJson {
    pub id: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub subject: String,
    pub passed: bool,
    pub entries: Vec<EntryJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facts: Vec<FactJson>,
}

pub fn report_to_json(r: &VerificationReport) -> ReportJson {
    ReportJson {
        subject: r.subject.clone(),
        passed: r.passed(),
        entries: r
            .entries
            .iter()
            .map(|e| EntryJson {
                relation_id: e.id.clone(),
                context: e.context.clone(),
                status: e.status.as_str().to_string(),
                instances: e.instances,
                witness: e.witness.as_ref().map(|w| match w {
                    Witness::Matrix(m) => WitnessJson::Matrix(matrix_to_json(m)),
                    Witness::Element(x) => WitnessJson::Element(aha_to_json(x)),
                    Witness::Note(s) => WitnessJson::Note(s.clone()),
                }),
            })
            .collect(),
        facts: r
            .facts
            .iter()
            .map(|f| FactJson {
                id: f.id.clone(),
                holds: f.holds,
                detail: f.detail.clone(),
            })
            .collect(),
    }
}

pub fn report_from_json(r: &ReportJson) -> Result<VerificationReport, FormatError> {
    let mut out = VerificationReport::new(r.subject.clone());
    for e in &r.entries {
        let status = match e.status.as_str() {
            "PASS" => Status::Pass,
            "FAIL" => Status::Fail,
            s => return Err(FormatError::Value(format!("unknown status {s}"))),
        };
        let witness = match &e.witness {
            None => None,
            Some(WitnessJson::Matrix(m)) => Some(Witness::Matrix(matrix_from_json(m)?)),
            Some(WitnessJson::Element(x)) => Some(Witness::Element(aha_from_json(x)?)),
            Some(WitnessJson::Note(s)) => Some(Witness::Note(s.clone())),
        };
        out.push(RelationCheck {
            id: e.relation_id.clone(),
            context: e.context.clone(),
            status,
            instances: e.instances,
            witness,
        });
    }
    out.facts = r
        .facts
        .iter()
        .map(|f| Fact {
            id: f.id.clone(),
            holds: f.holds,
            detail: f.detail.clone(),
        })
        .collect();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub ambient_dim: usize,
    pub quotient_basis: Vec<usize>,
    pub relation_basis: MatrixJson,
    pub projection: MatrixJson,
    pub section: MatrixJson,
}

pub fn quotient_to_json(q: &QuotientSpace) -> QuotientJson {
    QuotientJson {
        ambient_dim: q.ambient_dim,
        quotient_basis: q.quotient_basis.clone(),
        relation_basis: matrix_to_json(&q.relation_basis),
        projection: matrix_to_json(&q.projection),
        section: matrix_to_json(&q.section),
    }
}

pub fn quotient_from_json(q: &QuotientJson) -> Result<QuotientSpace, FormatError> {
    Ok(QuotientSpace {
        ambient_dim: q.ambient_dim,
        quotient_basis: q.quotient_basis.clone(),
        relation_basis: matrix_from_json(&q.relation_basis)?,
        projection: matrix_from_json(&q.projection)?,
        section: matrix_from_json(&q.section)?,
    })
}

/// Output of `build-functor`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BundleJson {
    pub n: usize,
    pub l: usize,
    pub module: HeckeModuleJson,
    pub quotient_dim: usize,
    pub quotient: QuotientJson,
    pub rep: DrinfeldianRepJson,
    pub level: bool,
    pub warnings: Vec<String>,
    pub report: ReportJson,
}

pub fn bundle_to_json(m: &HeckeModule, b: &FunctorBuild, level: bool, report: &VerificationReport) -> BundleJson {
    BundleJson {
        n: b.n,
        l: b.l,
        module: module_to_json(m),
        quotient_dim: b.quotient.dim(),
        quotient: quotient_to_json(&b.quotient),
        rep: drinfeldian_to_json(&b.rep),
        level,
        warnings: b.warnings.clone(),
        report: report_to_json(report),
    }
}

/// Any document the CLI reads, recognised by its keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Bundle(Box<BundleJson>),
    Drinfeldian(DrinfeldianRepJson),
    Module(HeckeModuleJson),
    RepMatrix(RepMatrixJson),
    Element(AhaElementJson),
    RatFunc(RatFuncJson),
    Poly(PolyJson),
}
