use hecke_forge_core::drinfeld::{
    drinfeld_antipode, eval_rep, tensor_rep, verify_current_limit, verify_drinfeldian,
    verify_limits, verify_xi_hopf, verify_yangian, xi_antipode, xi_coproduct,
    xi_coproduct_bracketed, xi_tilde, Bracketing, DrinfeldianRep,
};
use hecke_forge_core::qrep::{natural_rep, GenWord, RootData, Symbol};
use hecke_forge_core::{Bindings, Error, Matrix, RatFunc, Var};

fn u() -> RatFunc {
    RatFunc::var(Var::U)
}

fn a() -> RatFunc {
    RatFunc::var(Var::A)
}

const IDS: [&str; 10] = [
    "hdelta-central",
    "xi-weight-first",
    "xi-weight-inner",
    "xi-weight-last",
    "xi-commute-lower",
    "xi-commute-upper",
    "xi-serre-first",
    "xi-serre-last",
    "xi-deformed-serre-first",
    "xi-deformed-serre-last",
];

#[test]
fn eval_rep_examples() {
    let r = eval_rep(2, u()).unwrap();
    let mut expected = Matrix::zeros(3, 3);
    expected.set(2, 0, &u() * &RatFunc::q());
    assert_eq!(r.xi, expected);
    assert!(eval_rep(2, RatFunc::zero()).unwrap().xi.is_zero());
    let at0 = Bindings::new().with_int(Var::Eta, 0);
    assert_eq!(r.specialize(&at0).unwrap().xi, expected);
}

#[test]
fn eval_rep_relations_and_independent_vanishing() {
    for n in 2..=3 {
        let r = verify_drinfeldian(&eval_rep(n, u()).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
        let ids: Vec<&str> = r.entries.iter().map(|e| e.id.as_str()).collect();
        assert_eq!(ids, IDS);
        assert_eq!(r.fact_holds("deformed-serre-first-sides-vanish"), Some(true));
        assert_eq!(r.fact_holds("deformed-serre-last-sides-vanish"), Some(true));
    }
}

#[test]
fn substitution_into_uq() {
    // ξ ↦ ẽ_{−θ} itself, i.e. u = 1
    for n in 2..=3 {
        let r = verify_drinfeldian(&eval_rep(n, RatFunc::one()).unwrap()).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn two_leg_tensor_relations() {
    for n in 2..=3 {
        let v1 = eval_rep(n, u()).unwrap();
        let v2 = eval_rep(n, a()).unwrap();
        let r = verify_drinfeldian(&tensor_rep(&v1, &v2).unwrap()).unwrap();
        assert!(r.passed(), "n={n}\n{r}");
    }
}

#[test]
fn displaced_xi_is_detected() {
    let mut r = eval_rep(2, u()).unwrap();
    let mut bad = Matrix::zeros(3, 3);
    bad.set(2, 1, u());
    r.xi = bad;
    let rep = verify_drinfeldian(&r).unwrap();
    assert!(!rep.entry("xi-weight-first").unwrap().passed());
    assert!(rep.entry("xi-weight-first").unwrap().witness.is_some());
}

#[test]
fn xi_coproduct_shape_and_coassociativity() {
    let d = xi_coproduct(2, 2).unwrap();
    assert_eq!(d.summands.iter().filter(|s| s.xi_slot.is_some()).count(), 2);
    assert_eq!(d.summands.iter().filter(|s| s.xi_slot.is_none()).count(), 3);
    for s in &d.summands {
        if s.xi_slot.is_none() {
            assert!(s.coeff.uses(Var::Eta));
        }
    }
    let us = [u(), a(), &a() + &RatFunc::from_int(2)];
    for n in 2..=3 {
        let left = xi_coproduct_bracketed(n, 3, Bracketing::Left).unwrap().eval(&us).unwrap();
        let right = xi_coproduct_bracketed(n, 3, Bracketing::Right).unwrap().eval(&us).unwrap();
        assert_eq!(left, right, "n={n}");
        let reps: Vec<DrinfeldianRep> = us.iter().map(|x| eval_rep(n, x.clone()).unwrap()).collect();
        let nested = tensor_rep(&tensor_rep(&reps[0], &reps[1]).unwrap(), &reps[2]).unwrap();
        let other = tensor_rep(&reps[0], &tensor_rep(&reps[1], &reps[2]).unwrap()).unwrap();
        assert_eq!(nested.xi, left);
        assert_eq!(other.xi, left);
    }
}

#[test]
fn xi_antipode_shape() {
    // n = 2: the bracket term and one chain term carry η
    let s = xi_antipode(2).unwrap();
    assert_eq!(s.len(), 3);
    let at0 = Bindings::new().with_int(Var::Eta, 0);
    let mut surviving = Vec::new();
    for (w, c) in s.terms() {
        if !c.specialize(&at0).unwrap().is_zero() {
            surviving.push((w.clone(), c.clone()));
        }
    }
    let rd = RootData::new(2);
    let shift: Vec<i32> = rd.e_diag(3).iter().zip(rd.e_diag(1)).map(|(x, y)| x - y).collect();
    assert_eq!(surviving, vec![(vec![Symbol::QPow(shift), Symbol::Xi], RatFunc::from_int(-1))]);
    assert!(matches!(xi_antipode(1), Err(Error::RankTooSmall { .. })));
}

#[test]
fn xi_hopf_axioms() {
    for n in 2..=3 {
        let v = eval_rep(n, u()).unwrap();
        let r = verify_xi_hopf(&v).unwrap();
        assert!(r.passed(), "{r}");
        let vv = tensor_rep(&v, &eval_rep(n, a()).unwrap()).unwrap();
        let r = verify_xi_hopf(&vv).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn antipode_of_products_is_anti_multiplicative() {
    let n = 2;
    let v = eval_rep(n, u()).unwrap();
    let x = GenWord::e(n, 1, 2).mul(&GenWord::xi(n));
    let lhs = v.eval(&drinfeld_antipode(&x).unwrap()).unwrap();
    let rhs = &v.eval(&drinfeld_antipode(&GenWord::xi(n)).unwrap()).unwrap()
        * &v.eval(&drinfeld_antipode(&GenWord::e(n, 1, 2)).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn yangian_limit() {
    for n in 2..=3 {
        let v = eval_rep(n, u()).unwrap();
        let r = verify_yangian(&v).unwrap();
        assert!(r.passed(), "{r}");
        let vv = tensor_rep(&v, &eval_rep(n, a()).unwrap()).unwrap();
        let r = verify_yangian(&vv).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.entry("coproduct-limit").unwrap().instances == n + 3);
    }
}

#[test]
fn yangian_loop_limit_at_eta_zero() {
    let v = eval_rep(2, u()).unwrap();
    let vv = tensor_rep(&v, &eval_rep(2, a()).unwrap()).unwrap();
    let at0 = Bindings::new().with_int(Var::Eta, 0);
    let r = verify_yangian(&vv.specialize(&at0).unwrap()).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn current_and_square_limits() {
    for n in 2..=3 {
        let r = verify_current_limit(n).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_limits(n).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn eval_image_of_xi_tilde() {
    let v = natural_rep(3).unwrap();
    let m = v.eval(&xi_tilde(3), None).unwrap();
    let mut expected = Matrix::zeros(4, 4);
    expected.set(3, 0, RatFunc::q());
    assert_eq!(m, expected);
}
