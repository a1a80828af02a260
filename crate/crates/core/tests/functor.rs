use hecke_forge_core::drinfeld::{eval_rep, tensor_rep, verify_drinfeldian, verify_yangian, DrinfeldianRep};
use hecke_forge_core::functor::{
    binomial, build_functor, builtin_module, induced_module, level_check, validate_module,
    HeckeModule, ModuleKind,
};
use hecke_forge_core::{Bindings, Error, Matrix, RatFunc, Var};

fn a() -> RatFunc {
    RatFunc::var(Var::A)
}

fn eta0() -> Bindings {
    Bindings::new().with_int(Var::Eta, 0)
}

#[test]
fn builtin_ladders() {
    let q = RatFunc::q();
    let eta = RatFunc::eta();
    let t = builtin_module(ModuleKind::Trivial, 2, a()).unwrap();
    let u2 = t.u[1].get(0, 0).clone();
    assert_eq!(u2, &(&RatFunc::q_pow(2) * &a()) - &(&q * &eta));
    let s = builtin_module(ModuleKind::Sign, 2, a()).unwrap();
    let u2 = s.u[1].get(0, 0).clone();
    assert_eq!(u2, &(&RatFunc::q_pow(-2) * &a()) + &(&RatFunc::q_pow(-1) * &eta));
    // −q⁻¹u_1 = −q u_2 + η
    assert_eq!(-(&RatFunc::q_pow(-1) * &a()), &(-(&q * &u2)) + &eta);
    let t0 = builtin_module(ModuleKind::Trivial, 4, a()).unwrap().specialize(&eta0()).unwrap();
    for j in 0..4 {
        assert_eq!(t0.u[j].get(0, 0), &(&RatFunc::q_pow(2 * j as i32) * &a()));
    }
}

#[test]
fn module_validation() {
    assert!(validate_module(&builtin_module(ModuleKind::Trivial, 3, a()).unwrap()).passed());
    let mut m = builtin_module(ModuleKind::Trivial, 3, a()).unwrap();
    m.u.swap(0, 1);
    let r = validate_module(&m);
    assert!(!r.entry("cross").unwrap().passed());

    let ind = induced_module(3, &[a(), RatFunc::var(Var::U), RatFunc::from_int(3)]).unwrap();
    assert_eq!(ind.dim, 6);
    let r = validate_module(&ind);
    assert!(r.passed(), "{r}");
    // the u matrices genuinely fail to commute with σ
    assert!(!ind.sigma[0].commutator(&ind.u[0]).is_zero());
}

#[test]
fn quotient_dimensions_small() {
    let t = build_functor(&builtin_module(ModuleKind::Trivial, 2, a()).unwrap(), 2).unwrap();
    assert_eq!(t.quotient.dim(), 6);
    let s = build_functor(&builtin_module(ModuleKind::Sign, 2, a()).unwrap(), 2).unwrap();
    assert_eq!(s.quotient.dim(), 3);
    let proj = &t.quotient.projection * &t.quotient.section;
    assert!(proj.is_identity());
    assert!(t.warnings.is_empty());
}

#[test]
fn functor_output_is_drinfeldian() {
    for (l, n) in [(2, 2), (3, 2), (2, 3)] {
        for kind in [ModuleKind::Trivial, ModuleKind::Sign] {
            let b = build_functor(&builtin_module(kind, l, a()).unwrap(), n).unwrap();
            let expected = match kind {
                ModuleKind::Trivial => binomial(n + l, l),
                ModuleKind::Sign => binomial(n + 1, l),
            };
            assert_eq!(b.quotient.dim(), expected, "{kind:?} l={l} n={n}");
            let r = verify_drinfeldian(&b.rep).unwrap();
            assert!(r.passed(), "{kind:?} l={l} n={n}\n{r}");
            assert!(level_check(&b.rep, l));
            assert_eq!(b.warnings.is_empty(), l <= n);
        }
    }
}

#[test]
fn eta_zero_matches_two_term_action() {
    // trivial, l = 2, n = 2, η = 0: ξ acts on the symmetric square through
    // ξ ⊗ 1 + K ⊗ ξ with spectral parameters a and q²a
    let m = builtin_module(ModuleKind::Trivial, 2, a()).unwrap().specialize(&eta0()).unwrap();
    let b = build_functor(&m, 2).unwrap();
    let u2 = &RatFunc::q_pow(2) * &a();
    let direct = tensor_rep(
        &eval_rep(2, a()).unwrap().specialize(&eta0()).unwrap(),
        &eval_rep(2, u2).unwrap().specialize(&eta0()).unwrap(),
    )
    .unwrap();
    let qs = &b.quotient;
    let pushed = &(&qs.projection * &direct.xi) * &qs.section;
    assert_eq!(b.rep.xi, pushed);
    assert_eq!(b.rep.base.e[0], &(&qs.projection * &direct.base.e[0]) * &qs.section);
}

#[test]
fn functor_commutes_with_eta_limit() {
    for kind in [ModuleKind::Trivial, ModuleKind::Sign] {
        let m = builtin_module(kind, 2, a()).unwrap();
        let generic = build_functor(&m, 2).unwrap().rep.specialize(&eta0()).unwrap();
        let direct = build_functor(&m.specialize(&eta0()).unwrap(), 2).unwrap().rep;
        assert_eq!(generic, direct);
    }
}

#[test]
fn functor_q_one_is_yangian() {
    for kind in [ModuleKind::Trivial, ModuleKind::Sign] {
        let b = build_functor(&builtin_module(kind, 2, a()).unwrap(), 2).unwrap();
        let r = verify_yangian(&b.rep).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn induced_module_gives_full_tensor_power() {
    let m = induced_module(2, &[a(), RatFunc::var(Var::U)]).unwrap();
    let b = build_functor(&m, 2).unwrap();
    assert_eq!(b.quotient.dim(), 9);
    assert!(verify_drinfeldian(&b.rep).unwrap().passed());
}

#[test]
fn invalid_inputs() {
    let m = builtin_module(ModuleKind::Trivial, 2, a()).unwrap();
    assert!(matches!(build_functor(&m, 1), Err(Error::RankTooSmall { .. })));
    let mut bad = m.clone();
    bad.u.swap(0, 1);
    assert!(build_functor(&bad, 2).is_err());
    assert!(HeckeModule::new(2, vec![], vec![Matrix::identity(1); 2]).is_err());
}

#[test]
fn level_check_rejects_foreign_weight() {
    let b = build_functor(&builtin_module(ModuleKind::Trivial, 2, a()).unwrap(), 2).unwrap();
    let mut rep: DrinfeldianRep = b.rep.clone();
    let d = rep.dim();
    let mut k = Matrix::identity(d);
    k.set(0, 0, RatFunc::q_pow(3));
    rep.base.k_pos[0] = k;
    assert!(!level_check(&rep, 2));
}

#[test]
fn largest_case_and_all_limits() {
    for (l, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
        for kind in [ModuleKind::Trivial, ModuleKind::Sign] {
            let m = builtin_module(kind, l, a()).unwrap();
            let b = build_functor(&m, n).unwrap();
            assert!(verify_drinfeldian(&b.rep).unwrap().passed(), "{kind:?} l={l} n={n}");
            let y = verify_yangian(&b.rep).unwrap();
            assert!(y.passed(), "{kind:?} l={l} n={n}\n{y}");
            let direct = build_functor(&m.specialize(&eta0()).unwrap(), n).unwrap().rep;
            assert_eq!(b.rep.specialize(&eta0()).unwrap(), direct);
        }
    }
}
