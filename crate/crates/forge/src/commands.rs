//! One driver per CLI command. Each returns the payload the binary writes.

use hecke_forge_core::drinfeld::{self, eval_rep, DrinfeldianRep};
use hecke_forge_core::functor::{self, builtin_module, HeckeModule, ModuleKind};
use hecke_forge_core::heckealg::{verify_aha, AhaCheckOptions, AhaElement, HeckeMode};
use hecke_forge_core::qrep::{self, sigma_on_tensor, t_operator};
use hecke_forge_core::{Bindings, RatFunc, VerificationReport, Var};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ForgeError, Result};
use crate::format::*;

/// Runs the affine Hecke checks for every `(l, mode)` pair. Pairs run in
/// parallel; the merged report keeps the input order.
pub fn verify_hecke(ls: &[usize], modes: &[HeckeMode], opts: &AhaCheckOptions) -> Result<VerificationReport> {
    let jobs: Vec<(usize, HeckeMode)> = ls.iter().flat_map(|&l| modes.iter().map(move |&m| (l, m))).collect();
    let parts: Vec<_> = jobs
        .par_iter()
        .map(|&(l, mode)| verify_aha(l, mode, opts).map(|r| (l, mode, r)))
        .collect();
    if jobs.len() == 1 {
        let (_, _, r) = parts.into_iter().next().unwrap()?;
        return Ok(r);
    }
    let mut out = VerificationReport::new("affine Hecke algebra");
    for part in parts {
        let (l, mode, mut r) = part?;
        for e in &mut r.entries {
            e.context = format!("l={l} {}: {}", mode.name(), e.context);
        }
        out.extend(r);
    }
    Ok(out)
}

/// U_q(sl(n+1)) relations on V and V⊗V, followed by the Hopf axioms.
pub fn verify_uq(n: usize) -> Result<VerificationReport> {
    let (rel, hopf) = rayon::join(|| qrep::verify_uq(n), || qrep::verify_hopf(n));
    let mut out = rel?;
    out.extend(hopf?);
    Ok(out)
}

/// The evaluation representation with symbolic spectral parameter.
pub fn default_rep(n: usize) -> Result<DrinfeldianRep> {
    Ok(eval_rep(n, RatFunc::var(Var::U))?)
}

/// Drinfeldian relations on `rep`, optionally followed by the antipode and
/// counit axioms on ξ.
pub fn verify_drinfeldian(rep: &DrinfeldianRep, hopf: bool) -> Result<VerificationReport> {
    require_weights(rep)?;
    let mut out = drinfeld::verify_drinfeldian(rep)?;
    if hopf {
        out.extend(drinfeld::verify_xi_hopf(rep)?);
    }
    Ok(out)
}

pub fn verify_yangian(rep: &DrinfeldianRep) -> Result<VerificationReport> {
    require_weights(rep)?;
    Ok(drinfeld::verify_yangian(rep)?)
}

/// The checks read the Cartan action off the diagonal q^{e_ii} images. After
/// q has been specialized those no longer determine the weights, so such a
/// representation is refused rather than checked against the wrong Cartan.
pub fn require_weights(rep: &DrinfeldianRep) -> Result<()> {
    let w = rep.base.weights()?;
    let acts = rep.base.e.iter().chain(&rep.base.f).any(|m| !m.is_zero());
    if acts && w.windows(2).all(|p| p[0] == p[1]) {
        return Err(ForgeError::Usage(
            "the Cartan images carry no weights (q was specialized); pass the representation with symbolic q".into(),
        ));
    }
    Ok(())
}

pub fn verify_limits(n: usize) -> Result<VerificationReport> {
    Ok(drinfeld::verify_limits(n)?)
}

/// Where `build-functor` gets its module from.
#[derive(Clone, Debug)]
pub enum ModuleSource {
    Builtin { kind: ModuleKind, l: usize, a: Option<BigRational> },
    Given(HeckeModule),
}

impl ModuleSource {
    pub fn load(&self) -> Result<HeckeModule> {
        match self {
            ModuleSource::Builtin { kind, l, a } => {
                let a = a.clone().map(RatFunc::from_rational).unwrap_or_else(|| RatFunc::var(Var::A));
                Ok(builtin_module(*kind, *l, a)?)
            }
            ModuleSource::Given(m) => Ok(m.clone()),
        }
    }
}

/// Module validation, the Drinfeldian relations on the output and the
/// level-l weight condition.
pub fn functor_report(m: &HeckeModule, rep: &DrinfeldianRep) -> Result<VerificationReport> {
    let mut out = VerificationReport::new(format!("functor image, l={}, n={}", m.l, rep.n()));
    out.extend(functor::validate_module(m));
    out.extend(drinfeld::verify_drinfeldian(rep)?);
    let level = functor::level_check(rep, m.l);
    out.fact("level", level, format!("weights are non-negative and sum to {}", m.l));
    Ok(out)
}

pub fn build_functor(src: &ModuleSource, n: usize) -> Result<(BundleJson, VerificationReport)> {
    let m = src.load()?;
    let build = functor::build_functor(&m, n)?;
    let report = functor_report(&m, &build.rep)?;
    let level = functor::level_check(&build.rep, m.l);
    Ok((bundle_to_json(&m, &build, level, &report), report))
}

/// Checks on a specialized functor image. Every binding except q is applied
/// to the representation first; q = 1 then selects the Yangian checks, any
/// other q the Drinfeldian checks with q kept symbolic.
pub fn specialized_report(m: &HeckeModule, generic: &DrinfeldianRep, b: &Bindings) -> Result<VerificationReport> {
    let mut rest = Bindings::new();
    for (v, x) in b.iter().filter(|(v, _)| *v != Var::Q) {
        rest.set(v, x.clone());
    }
    let rep = generic.specialize(&rest)?;
    let q1 = b.get(Var::Q).is_some_and(|x| *x == BigRational::from_integer(1.into()));
    let mut out = VerificationReport::new(format!("functor image, l={}, n={}", m.l, rep.n()));
    out.extend(functor::validate_module(m));
    if q1 {
        out.extend(drinfeld::verify_yangian(&rep)?);
    } else {
        out.extend(drinfeld::verify_drinfeldian(&rep)?);
    }
    out.fact("level", functor::level_check(&rep, m.l), format!("weights are non-negative and sum to {}", m.l));
    Ok(out)
}

/// Substitutes values for some of q, η, u, a throughout a document.
/// Bundles are re-verified after specialization.
pub fn specialize(doc: &Document, b: &Bindings) -> Result<Document> {
    Ok(match doc {
        Document::Poly(p) => {
            let x = RatFunc::from_poly(poly_from_json(p)?).specialize(b)?;
            Document::RatFunc(ratfunc_to_json(&x))
        }
        Document::RatFunc(x) => Document::RatFunc(ratfunc_to_json(&ratfunc_from_json(x)?.specialize(b)?)),
        Document::Element(x) => Document::Element(aha_to_json(&aha_from_json(x)?.specialize(b)?)),
        Document::RepMatrix(m) => {
            let mut r = rep_matrix_from_json(m)?;
            r.matrix = r.matrix.specialize(b)?;
            Document::RepMatrix(rep_matrix_to_json(&r))
        }
        Document::Module(m) => Document::Module(module_to_json(&module_from_json(m)?.specialize(b)?)),
        Document::Drinfeldian(r) => Document::Drinfeldian(drinfeldian_to_json(&drinfeldian_from_json(r)?.specialize(b)?)),
        Document::Bundle(x) => {
            let m = module_from_json(&x.module)?.specialize(b)?;
            let mut q = quotient_from_json(&x.quotient)?;
            q.relation_basis = q.relation_basis.specialize(b)?;
            q.projection = q.projection.specialize(b)?;
            q.section = q.section.specialize(b)?;
            let generic = drinfeldian_from_json(&x.rep)?;
            let report = specialized_report(&m, &generic, b)?;
            let level = report.fact_holds("level").unwrap_or(false);
            let rep = generic.specialize(b)?;
            Document::Bundle(Box::new(BundleJson {
                n: x.n,
                l: x.l,
                module: module_to_json(&m),
                quotient_dim: q.dim(),
                quotient: quotient_to_json(&q),
                rep: drinfeldian_to_json(&rep),
                level,
                warnings: x.warnings.clone(),
                report: report_to_json(&report),
            }))
        }
    })
}

/// Objects `export` can write.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportKind {
    EvalRep,
    TOperator,
    Sigma,
    Module,
    AhaSigma,
    AhaU,
}

impl ExportKind {
    pub const ALL: [ExportKind; 6] = [
        ExportKind::EvalRep,
        ExportKind::TOperator,
        ExportKind::Sigma,
        ExportKind::Module,
        ExportKind::AhaSigma,
        ExportKind::AhaU,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExportKind::EvalRep => "eval-rep",
            ExportKind::TOperator => "t-operator",
            ExportKind::Sigma => "sigma",
            ExportKind::Module => "module",
            ExportKind::AhaSigma => "aha-sigma",
            ExportKind::AhaU => "aha-u",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, Default)]
pub struct ExportParams {
    pub n: Option<usize>,
    pub l: Option<usize>,
    /// Tensor position or generator index.
    pub i: Option<usize>,
    pub u: Option<BigRational>,
    pub a: Option<BigRational>,
    pub module: Option<ModuleKind>,
}

fn need<T: Copy>(x: Option<T>, flag: &str, kind: ExportKind) -> Result<T> {
    x.ok_or_else(|| ForgeError::Usage(format!("export {} needs --{flag}", kind.name())))
}

fn to_value<T: Serialize>(x: &T) -> Result<serde_json::Value> {
    Ok(serde_json::to_value(x)?)
}

pub fn export(kind: ExportKind, p: &ExportParams) -> Result<serde_json::Value> {
    let sym = |x: &Option<BigRational>, v: Var| x.clone().map(RatFunc::from_rational).unwrap_or_else(|| RatFunc::var(v));
    match kind {
        ExportKind::EvalRep => {
            let rep = eval_rep(need(p.n, "n", kind)?, sym(&p.u, Var::U))?;
            to_value(&drinfeldian_to_json(&rep))
        }
        ExportKind::TOperator => to_value(&rep_matrix_to_json(&t_operator(need(p.n, "n", kind)?)?)),
        ExportKind::Sigma => {
            let m = sigma_on_tensor(need(p.n, "n", kind)?, need(p.l, "l", kind)?, need(p.i, "i", kind)?)?;
            to_value(&rep_matrix_to_json(&m))
        }
        ExportKind::Module => {
            let kind_ = need(p.module, "module", kind)?;
            let m = builtin_module(kind_, need(p.l, "l", kind)?, sym(&p.a, Var::A))?;
            to_value(&module_to_json(&m))
        }
        ExportKind::AhaSigma => to_value(&aha_to_json(&AhaElement::sigma(need(p.l, "l", kind)?, need(p.i, "i", kind)?)?)),
        ExportKind::AhaU => to_value(&aha_to_json(&AhaElement::u(need(p.l, "l", kind)?, need(p.i, "i", kind)?)?)),
    }
}
