//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hecke_forge::commands;
use hecke_forge_core::drinfeld::{
    eval_rep, tensor_rep, verify_drinfeldian, verify_xi_hopf, verify_yangian, xi_coproduct, DrinfeldianRep,
};
use hecke_forge_core::functor::{build_functor, builtin_module, validate_module, HeckeModule, ModuleKind};
use hecke_forge_core::heckealg::{enumerate_basis, verify_aha, verify_algebra, AffineHecke, AhaCheckOptions, HeckeMode};
use hecke_forge_core::qrep::{natural_rep, sigma_on_tensor, t_operator, tensor, tensor_power, verify_hopf, verify_uq, verify_uq_on};
use hecke_forge_core::report::{RelationCheck, VerificationReport, Witness};
use hecke_forge_core::{Bindings, Matrix, RatFunc, Var};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(r: &VerificationReport) -> Result<(), String> {
    ensure(r.passed(), || format!("{r}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn q() -> RatFunc {
    RatFunc::q()
}

fn u() -> RatFunc {
    RatFunc::var(Var::U)
}

fn a() -> RatFunc {
    RatFunc::var(Var::A)
}

fn eta0() -> Bindings {
    Bindings::new().with_int(Var::Eta, 0)
}

fn factorial(l: usize) -> usize {
    (1..=l).product()
}

/// C(m, k) by Pascal's rule, independent of the library's binomial.
fn choose(m: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..m {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

fn hecke_relations() -> Outcome {
    let opts = AhaCheckOptions { seed: 0x5eed, triples: 100 };
    let mut slowest = Duration::ZERO;
    for l in [2, 3, 4] {
        for mode in HeckeMode::ALL {
            let t = Instant::now();
            let r = verify_aha(l, mode, &opts).map_err(err)?;
            let dt = t.elapsed();
            slowest = slowest.max(dt);
            passes(&r)?;
            let assoc = r.entry("associativity").ok_or("no associativity entry")?;
            ensure(assoc.instances >= 100, || format!("only {} triples", assoc.instances))?;
            ensure(dt < Duration::from_secs(30), || format!("l={l} {} took {dt:?}", mode.name()))?;
        }
    }
    Ok(format!("12 runs, slowest {slowest:.2?}"))
}

fn basis_counts() -> Outcome {
    for l in 1..=5 {
        let b = enumerate_basis(l, 0);
        ensure(b.len() == factorial(l), || format!("l={l}: {} monomials", b.len()))?;
        let mut perms: Vec<_> = b.iter().map(|m| m.perm.images()).collect();
        perms.sort();
        perms.dedup();
        ensure(perms.len() == b.len(), || format!("l={l}: repeated permutations"))?;
    }
    Ok("l! monomials for l = 1..5".into())
}

fn t_operator_checks() -> Outcome {
    let qq = &q() - &q().inv().map_err(err)?;
    for n in [1, 2] {
        let t = t_operator(n).map_err(err)?.matrix;
        let id = Matrix::identity(t.rows());
        ensure(&t * &t == &t.scale(&qq) + &id, || format!("n={n}: quadratic relation"))?;
        let s1 = sigma_on_tensor(n, 3, 1).map_err(err)?.matrix;
        let s2 = sigma_on_tensor(n, 3, 2).map_err(err)?.matrix;
        ensure(&(&s1 * &s2) * &s1 == &(&s2 * &s1) * &s2, || format!("n={n}: braid relation"))?;
    }
    let t = t_operator(1).map_err(err)?.matrix;
    let id = Matrix::identity(4);
    let plus = 4 - (&t - &id.scale(&q())).rank();
    let minus = 4 - (&t + &id.scale(&q().inv().map_err(err)?)).rank();
    ensure(plus == 3 && minus == 1, || format!("eigenspace dims {plus}, {minus}"))?;
    Ok("quadratic and braid for n = 1, 2; eigenspaces 3 + 1".into())
}

fn uq_relations() -> Outcome {
    let t = Instant::now();
    for n in 1..=3 {
        let r = verify_uq(n).map_err(err)?;
        passes(&r)?;
        ensure(r.entries.iter().any(|e| e.context.contains("coproduct")), || "no coproduct context".into())?;
        let h = verify_hopf(n).map_err(err)?;
        passes(&h)?;
        for id in ["coassociativity", "antipode", "counit"] {
            ensure(h.entry(id).is_some_and(|e| e.instances > 0), || format!("n={n}: {id} missing"))?;
        }
    }
    let dt = t.elapsed();
    ensure(dt < Duration::from_secs(60), || format!("took {dt:?}"))?;
    Ok(format!("n = 1..3 in {dt:.2?}"))
}

fn drinfeldian_relations() -> Outcome {
    for n in [2, 3] {
        let rep = eval_rep(n, u()).map_err(err)?;
        let r = verify_drinfeldian(&rep).map_err(err)?;
        passes(&r)?;
        ensure(r.entries.len() == 10, || format!("{} entries", r.entries.len()))?;
        for f in ["deformed-serre-first-sides-vanish", "deformed-serre-last-sides-vanish"] {
            ensure(r.fact_holds(f) == Some(true), || format!("n={n}: {f}"))?;
        }
        let h = verify_xi_hopf(&rep).map_err(err)?;
        let anti = h.entry("xi-antipode").ok_or("no xi-antipode entry")?;
        ensure(anti.passed() && anti.instances > 0, || format!("{h}"))?;
    }
    Ok("n = 2, 3 with both deformed Serre sides zero".into())
}

fn limit_square() -> Outcome {
    let n = 2;
    let at1 = Bindings::new().with_int(Var::Q, 1);
    let v = eval_rep(n, u()).map_err(err)?;
    let vv = tensor_rep(&v, &eval_rep(n, &u() + &RatFunc::one()).map_err(err)?).map_err(err)?;
    for (name, rep) in [("evaluation", &v), ("two-leg", &vv)] {
        // generic corner and the η = 0 corner
        passes(&verify_drinfeldian(rep).map_err(err)?).map_err(|e| format!("{name} generic: {e}"))?;
        let r0 = rep.specialize(&eta0()).map_err(err)?;
        passes(&verify_drinfeldian(&r0).map_err(err)?).map_err(|e| format!("{name} eta=0: {e}"))?;
        // q = 1 corner and the double limit
        passes(&verify_yangian(rep).map_err(err)?).map_err(|e| format!("{name} q=1: {e}"))?;
        passes(&verify_yangian(&r0).map_err(err)?).map_err(|e| format!("{name} q=1 eta=0: {e}"))?;
        // the two paths into the corner
        let p1 = r0.specialize(&at1).map_err(err)?;
        let p2 = rep.specialize(&at1).map_err(err)?.specialize(&eta0()).map_err(err)?;
        ensure(p1 == p2, || format!("{name}: paths differ"))?;
    }
    let r = commands::verify_limits(n).map_err(err)?;
    passes(&r)?;
    Ok("four corners on V and V(u)xV(u+1), paths agree".into())
}

fn functor_checks() -> Outcome {
    let t = Instant::now();
    let mut dims = Vec::new();
    for (l, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        for kind in [ModuleKind::Trivial, ModuleKind::Sign] {
            let ctx = format!("{} l={l} n={n}", kind.name());
            let m = builtin_module(kind, l, a()).map_err(err)?;
            let b = build_functor(&m, n).map_err(err)?;
            let expected = match kind {
                ModuleKind::Trivial => choose(n + l, l),
                ModuleKind::Sign => choose(n + 1, l),
            };
            ensure(b.quotient.dim() == expected, || format!("{ctx}: dim {} vs {expected}", b.quotient.dim()))?;
            dims.push(b.quotient.dim());
            r_invariance(&m, &b.quotient, &b.rep, n).map_err(|e| format!("{ctx}: {e}"))?;
            passes(&verify_drinfeldian(&b.rep).map_err(err)?).map_err(|e| format!("{ctx}: {e}"))?;
            passes(&verify_yangian(&b.rep).map_err(err)?).map_err(|e| format!("{ctx} q=1: {e}"))?;
            two_term_match(&m, n).map_err(|e| format!("{ctx} eta=0: {e}"))?;
        }
    }
    let dt = t.elapsed();
    ensure(dt < Duration::from_secs(300), || format!("took {dt:?}"))?;
    Ok(format!("dims {dims:?} in {dt:.2?}"))
}

/// Spectral parameters of a one-dimensional module.
fn scalars(m: &HeckeModule) -> Vec<RatFunc> {
    m.u.iter().map(|x| x.get(0, 0).clone()).collect()
}

/// Recomputes the relation subspace from the T operators and checks that
/// every ambient operator preserves it and induces the installed action.
fn r_invariance(
    m: &HeckeModule,
    qs: &hecke_forge_core::functor::QuotientSpace,
    rep: &DrinfeldianRep,
    n: usize,
) -> Result<(), String> {
    let l = m.l;
    let d = (n + 1).pow(l as u32);
    let mut gens = Vec::new();
    for i in 1..l {
        let c = m.sigma[i - 1].get(0, 0).clone();
        let ti = sigma_on_tensor(n, l, i).map_err(err)?.matrix;
        gens.push(&Matrix::identity(d).scale(&c) - &ti);
    }
    let span = Matrix::hstack(&gens).map_err(err)?;
    let r = &qs.relation_basis;
    let joint = Matrix::hstack(&[span.clone(), r.clone()]).map_err(err)?;
    ensure(r.rank() == span.rank() && joint.rank() == span.rank(), || "relation subspace differs".into())?;

    let v = tensor_power(n, l).map_err(err)?;
    let xi = xi_coproduct(n, l).map_err(err)?.eval(&scalars(m)).map_err(err)?;
    let mut ambient: Vec<(&Matrix, &Matrix)> = Vec::new();
    for (x, y) in [(&v.k_pos, &rep.base.k_pos), (&v.k_neg, &rep.base.k_neg), (&v.e, &rep.base.e), (&v.f, &rep.base.f)] {
        ambient.extend(x.iter().zip(y.iter()));
    }
    ambient.push((&xi, &rep.xi));
    for (amb, installed) in ambient {
        ensure((&(&qs.projection * amb) * r).is_zero(), || "operator leaves the relation subspace".into())?;
        ensure(&(&qs.projection * amb) * &qs.section == *installed, || "installed action differs".into())?;
    }
    Ok(())
}

/// At η = 0 the image must be V(u_1) ⊗ … ⊗ V(u_l) with ξ acting by the
/// two-term coproduct, pushed through the quotient.
fn two_term_match(m: &HeckeModule, n: usize) -> Result<(), String> {
    let m0 = m.specialize(&eta0()).map_err(err)?;
    let b = build_functor(&m0, n).map_err(err)?;
    let us = scalars(&m0);
    // direct ξ on V^{⊗l}: Σ_s K^{⊗(s-1)} ⊗ u_s ẽ ⊗ 1
    let v = natural_rep(n).map_err(err)?;
    let ev = eval_rep(n, RatFunc::one()).map_err(err)?;
    let kt = &v.k_pos[0] * &v.k_neg[n];
    let dim = v.dim();
    let l = us.len();
    let mut xi = Matrix::zeros(dim.pow(l as u32), dim.pow(l as u32));
    for (s, us) in us.iter().enumerate() {
        let mut legs = Vec::new();
        for k in 0..l {
            legs.push(match k.cmp(&s) {
                std::cmp::Ordering::Less => kt.clone(),
                std::cmp::Ordering::Equal => ev.xi.scale(us),
                std::cmp::Ordering::Greater => Matrix::identity(dim),
            });
        }
        xi = &xi + &Matrix::kron_all(legs.iter());
    }
    let qs = &b.quotient;
    ensure(&(&qs.projection * &xi) * &qs.section == b.rep.xi, || "xi differs".into())?;
    let rep_eta0 = build_functor(m, n).map_err(err)?.rep.specialize(&eta0()).map_err(err)?;
    ensure(rep_eta0 == b.rep, || "eta limit of generic output differs".into())?;
    Ok(())
}

fn nonzero_failure(r: &VerificationReport) -> bool {
    r.failures().any(|e| match &e.witness {
        Some(Witness::Matrix(m)) => !m.is_zero(),
        Some(Witness::Element(x)) => !x.is_zero(),
        _ => false,
    })
}

fn mutation_corpus() -> Outcome {
    let mut results: Vec<(&str, VerificationReport)> = Vec::new();
    let opts = AhaCheckOptions { seed: 0x5eed, triples: 20 };

    let mut h = AffineHecke::modified(3).map_err(err)?;
    h.rules.quadratic = -&h.rules.quadratic;
    results.push(("hecke quadratic sign", verify_algebra(&h, HeckeMode::Modified, &opts).map_err(err)?));

    let mut h = AffineHecke::modified(3).map_err(err)?;
    h.rules.cross_constant = -&h.rules.cross_constant;
    results.push(("hecke cross sign", verify_algebra(&h, HeckeMode::Modified, &opts).map_err(err)?));

    let mut v = natural_rep(2).map_err(err)?;
    v.e[0] = v.e[0].scale(&RatFunc::from_int(-1));
    results.push(("uq e12 sign", verify_uq_on(&v, "mutated")));

    let mut v = natural_rep(2).map_err(err)?;
    v.k_pos[0].set(0, 0, RatFunc::q_pow(2));
    results.push(("uq Cartan exponent", verify_uq_on(&v, "mutated")));

    let mut t = t_operator(1).map_err(err)?.matrix;
    let (i, j) = t.first_nonzero_below_diagonal().ok_or("no lower entry")?;
    t.set(i, j, -t.get(i, j));
    let qq = &q() - &q().inv().map_err(err)?;
    let mut tr = VerificationReport::new("T operator");
    tr.push(RelationCheck::from_residuals(
        "quadratic",
        "T^2 = (q - q^-1)T + 1",
        [&(&t * &t) - &(&t.scale(&qq) + &Matrix::identity(4))],
    ));
    results.push(("T entry sign", tr));

    let mut r = eval_rep(2, u()).map_err(err)?;
    let mut bad = Matrix::zeros(3, 3);
    bad.set(2, 1, u());
    r.xi = bad;
    results.push(("xi displaced", verify_drinfeldian(&r).map_err(err)?));

    let mut r = tensor_rep(&eval_rep(2, u()).map_err(err)?, &eval_rep(2, &u() + &RatFunc::one()).map_err(err)?).map_err(err)?;
    let mut exp = xi_coproduct(2, 2).map_err(err)?;
    for s in &mut exp.summands {
        if s.coeff.uses(Var::Eta) {
            s.coeff = -&s.coeff;
        }
    }
    r.xi = exp.eval(&[u(), &u() + &RatFunc::one()]).map_err(err)?;
    results.push(("tensor xi eta-term sign", verify_drinfeldian(&r).map_err(err)?));

    let mut r = eval_rep(2, u()).map_err(err)?;
    r.base.k_pos[0].set(0, 0, RatFunc::q_pow(2));
    r.base.k_neg[0].set(0, 0, RatFunc::q_pow(-2));
    results.push(("yangian Cartan exponent", verify_yangian(&r).map_err(err)?));

    let mut m = builtin_module(ModuleKind::Trivial, 3, a()).map_err(err)?;
    m.u.swap(0, 1);
    results.push(("module u swapped", validate_module(&m)));

    let v = natural_rep(2).map_err(err)?;
    let mut vv = tensor(&v, &v).map_err(err)?;
    vv.e[0] = &v.e[0].kron(&v.identity()) + &v.qh(1, 1).kron(&v.e[0]);
    results.push(("coproduct Cartan exponent", verify_uq_on(&vv, "mutated coproduct")));

    ensure(results.len() == 10, || format!("{} mutations", results.len()))?;
    let missed: Vec<_> = results.iter().filter(|(_, r)| !nonzero_failure(r)).map(|(n, _)| *n).collect();
    ensure(missed.is_empty(), || format!("undetected: {missed:?}"))?;
    Ok("10/10 mutations detected".into())
}

trait LowerEntry {
    fn first_nonzero_below_diagonal(&self) -> Option<(usize, usize)>;
}

impl LowerEntry for Matrix {
    fn first_nonzero_below_diagonal(&self) -> Option<(usize, usize)> {
        self.entries().find(|(i, j, x)| i > j && !x.is_zero()).map(|(i, j, _)| (i, j))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("hecke relations, l = 2..4, all modes", hecke_relations),
        ("basis counts", basis_counts),
        ("T operator", t_operator_checks),
        ("U_q relations and Hopf axioms", uq_relations),
        ("Drinfeldian relations", drinfeldian_relations),
        ("limit square", limit_square),
        ("duality functor", functor_checks),
        ("mutation sensitivity", mutation_corpus),
    ];
    let mut ok = true;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", k + 1),
            Err(why) => {
                ok = false;
                println!("FAIL criterion {}: {name}: {why}", k + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
