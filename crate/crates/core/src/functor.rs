//! The duality functor: a finite-dimensional right module M of the modified
//! affine Hecke algebra goes to `W_M = M ⊗_{H_q(l)} V^{⊗l}` with the
//! Drinfeldian action
//!
//! ```text
//! π(x)(m ⊗ v) = m ⊗ Δ^{(l)}(x) v                  (x ∈ U_q)
//! π(ξ)(m ⊗ v) = m ⊗ Δ^{(l)}(ξ)|_{ξ_i = u_i} v
//! ```
//!
//! Module matrices act on coordinate columns: the coordinates of `m·x` are
//! `B_x · coords(m)`, so `B_{xy} = B_y B_x`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drinfeld::{xi_coproduct, xi_tilde, DrinfeldianRep};
use crate::error::{Error, Result};
use crate::heckealg::{AffineHecke, AhaElement, NormalMonomial, Permutation};
use crate::matrix::Matrix;
use crate::qrep::{natural_rep, sigma_on_tensor, tensor_power, ChevalleyRep};
use crate::report::{RelationCheck, VerificationReport};
use crate::scalar::{Bindings, RatFunc, Var};

/// A right module of H⁺_{qη}(l) given by the matrices of its generators.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeModule {
    pub l: usize,
    pub dim: usize,
    /// `σ_1 … σ_{l−1}`.
    pub sigma: Vec<Matrix>,
    /// `u_1 … u_l`.
    pub u: Vec<Matrix>,
    pub q: RatFunc,
    pub eta: RatFunc,
}

impl HeckeModule {
    /// Checks shapes only; relations are checked by [`validate_module`].
    pub fn new(l: usize, sigma: Vec<Matrix>, u: Vec<Matrix>) -> Result<Self> {
        Self::with_params(l, sigma, u, RatFunc::q(), RatFunc::eta())
    }

    pub fn with_params(l: usize, sigma: Vec<Matrix>, u: Vec<Matrix>, q: RatFunc, eta: RatFunc) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidInput(format!("module rank l = {l} must be at least 2")));
        }
        if sigma.len() != l - 1 {
            return Err(Error::DimensionMismatch {
                expected: l - 1,
                found: sigma.len(),
            });
        }
        if u.len() != l {
            return Err(Error::DimensionMismatch { expected: l, found: u.len() });
        }
        let dim = u[0].rows();
        for m in sigma.iter().chain(&u) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if m.rows() != dim { m.rows() } else { m.cols() },
                });
            }
        }
        Ok(HeckeModule {
            l,
            dim,
            sigma,
            u,
            q,
            eta,
        })
    }

    pub fn specialize(&self, b: &Bindings) -> Result<HeckeModule> {
        let sp = |v: &[Matrix]| v.iter().map(|m| m.specialize(b)).collect::<Result<Vec<_>>>();
        Ok(HeckeModule {
            l: self.l,
            dim: self.dim,
            sigma: sp(&self.sigma)?,
            u: sp(&self.u)?,
            q: self.q.specialize(b)?,
            eta: self.eta.specialize(b)?,
        })
    }

    /// Bindings for whichever of q and η are numeric in this module.
    fn param_bindings(&self) -> Bindings {
        let mut b = Bindings::new();
        if let Some(c) = self.q.as_constant() {
            b = b.with(Var::Q, c);
        }
        if let Some(c) = self.eta.as_constant() {
            b = b.with(Var::Eta, c);
        }
        b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Trivial,
    Sign,
}

impl ModuleKind {
    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Trivial => "trivial",
            ModuleKind::Sign => "sign",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "trivial" => Some(ModuleKind::Trivial),
            "sign" => Some(ModuleKind::Sign),
            _ => None,
        }
    }
}

/// One-dimensional modules: σ acts by an eigenvalue of the quadratic
/// relation and the u_j form the ladder forced by the cross relation.
///
/// trivial: `σ = q`, `u_{j+1} = q²u_j − qη`; sign: `σ = −q⁻¹`,
/// `u_{j+1} = q⁻²u_j + q⁻¹η`; both with `u_1 = a`.
pub fn builtin_module(kind: ModuleKind, l: usize, a: RatFunc) -> Result<HeckeModule> {
    if l < 2 {
        return Err(Error::InvalidInput(format!("module rank l = {l} must be at least 2")));
    }
    let q = RatFunc::q();
    let eta = RatFunc::eta();
    let (s, mul, add) = match kind {
        ModuleKind::Trivial => (q.clone(), RatFunc::q_pow(2), -(&q * &eta)),
        ModuleKind::Sign => (-RatFunc::q_pow(-1), RatFunc::q_pow(-2), &RatFunc::q_pow(-1) * &eta),
    };
    let mut us = vec![a];
    for j in 1..l {
        let next = &(&us[j - 1] * &mul) + &add;
        us.push(next);
    }
    let one = |x: RatFunc| Matrix::diag(vec![x]);
    let m = HeckeModule::new(l, vec![one(s); l - 1], us.into_iter().map(one).collect())?;
    let r = validate_module(&m);
    if !r.passed() {
        return Err(Error::InvalidInput(format!("builtin {} module failed validation", kind.name())));
    }
    Ok(m)
}

/// The principal series module `C_χ ⊗_{C[u]} H⁺(l)` with basis `1 ⊗ σ_w`,
/// where `χ(u_j) = chars[j]`. It has dimension l!.
pub fn induced_module(l: usize, chars: &[RatFunc]) -> Result<HeckeModule> {
    if chars.len() != l {
        return Err(Error::DimensionMismatch {
            expected: l,
            found: chars.len(),
        });
    }
    let alg = AffineHecke::modified(l)?;
    let perms = Permutation::all(l);
    let index = |p: &Permutation| perms.iter().position(|x| x == p).expect("all permutations");
    let action = |x: &AhaElement| -> Result<Matrix> {
        let mut m = Matrix::zeros(perms.len(), perms.len());
        for (col, w) in perms.iter().enumerate() {
            let basis = AhaElement::monomial(vec![0; l], w.clone(), RatFunc::one());
            let prod = alg.mul(&basis, x)?;
            for (mono, c) in prod.terms() {
                let NormalMonomial { upows, perm } = mono;
                let mut v = c.clone();
                for (j, &p) in upows.iter().enumerate() {
                    v = &v * &chars[j].pow(p as i32)?;
                }
                let row = index(perm);
                let cur = m.get(row, col) + &v;
                m.set(row, col, cur);
            }
        }
        Ok(m)
    };
    let sigma = (1..l).map(|i| action(&alg.sigma(i)?)).collect::<Result<Vec<_>>>()?;
    let u = (1..=l).map(|j| action(&alg.u(j)?)).collect::<Result<Vec<_>>>()?;
    HeckeModule::new(l, sigma, u)
}

/// The defining relations of H⁺_{qη}(l) in matrix form, with the order of
/// products reversed for the right action.
pub fn validate_module(m: &HeckeModule) -> VerificationReport {
    let l = m.l;
    let id = Matrix::identity(m.dim);
    let ctx = format!("right module, dim {}", m.dim);
    let mut out = VerificationReport::new(format!("H+(l = {l}) module relations"));
    let qq = match m.q.inv() {
        Ok(qi) => &m.q - &qi,
        Err(_) => {
            out.push(RelationCheck::fail(
                "quadratic",
                &ctx,
                0,
                crate::report::Witness::Note(String::from("q = 0")),
            ));
            return out;
        }
    };
    let s = &m.sigma;
    let u = &m.u;

    out.push(RelationCheck::from_residuals(
        "quadratic",
        &ctx,
        s.iter().map(|x| &(&(x * x) - &x.scale(&qq)) - &id),
    ));
    let mut braid = Vec::new();
    let mut distant = Vec::new();
    for i in 0..l - 1 {
        for j in i + 1..l - 1 {
            if j == i + 1 {
                braid.push(&(&(&s[i] * &s[j]) * &s[i]) - &(&(&s[j] * &s[i]) * &s[j]));
            } else {
                distant.push(s[i].commutator(&s[j]));
            }
        }
    }
    out.push(RelationCheck::from_residuals("braid", &ctx, braid));
    out.push(RelationCheck::from_residuals("distant", &ctx, distant));
    let mut comm = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            comm.push(u[i].commutator(&u[j]));
        }
    }
    out.push(RelationCheck::from_residuals("commuting", &ctx, comm));
    let mut mixed = Vec::new();
    for (i, si) in s.iter().enumerate() {
        for (j, uj) in u.iter().enumerate() {
            if j != i && j != i + 1 {
                mixed.push(si.commutator(uj));
            }
        }
    }
    out.push(RelationCheck::from_residuals("sigma-commute", &ctx, mixed));
    // σ_i u_i = u_{i+1} σ_i⁻¹ + η, read right to left
    let cross = (0..l - 1).map(|i| {
        let sinv = &s[i] - &id.scale(&qq);
        &(&(&u[i] * &s[i]) - &(&sinv * &u[i + 1])) - &id.scale(&m.eta)
    });
    out.push(RelationCheck::from_residuals("cross", &ctx, cross));
    out
}

/// `W_M` as a quotient of `M ⊗ V^{⊗l}` by the balancing relations R.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    /// Columns span R.
    pub relation_basis: Matrix,
    /// Ambient basis vectors whose classes form the quotient basis.
    pub quotient_basis: Vec<usize>,
    /// `dim W × ambient`, with kernel R.
    pub projection: Matrix,
    /// `ambient × dim W`, the chosen coset representatives.
    pub section: Matrix,
}

impl QuotientSpace {
    pub fn dim(&self) -> usize {
        self.quotient_basis.len()
    }

    /// The balancing relations `(m·σ_i) ⊗ v − m ⊗ (σ_i v)` as the columns of
    /// `B_{σ_i} ⊗ 1 − 1 ⊗ T_i`.
    fn relation_generators(m: &HeckeModule, n: usize, b: &Bindings) -> Result<Vec<Matrix>> {
        let idm = Matrix::identity(m.dim);
        let vdim = (n + 1).pow(m.l as u32);
        let idv = Matrix::identity(vdim);
        (1..m.l)
            .map(|i| {
                let t = sigma_on_tensor(n, m.l, i)?.matrix.specialize(b)?;
                Ok(&m.sigma[i - 1].kron(&idv) - &idm.kron(&t))
            })
            .collect()
    }

    fn from_generators(gens: &[Matrix]) -> Result<QuotientSpace> {
        let rel = Matrix::hstack(gens)?;
        let ambient = rel.rows();
        let (r, pivots) = rel.transpose().rref();
        let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let d = free.len();
        let mut proj = Matrix::zeros(d, ambient);
        let mut section = Matrix::zeros(ambient, d);
        for (k, &f) in free.iter().enumerate() {
            proj.set(k, f, RatFunc::one());
            section.set(f, k, RatFunc::one());
        }
        for (row, &p) in pivots.iter().enumerate() {
            for (k, &f) in free.iter().enumerate() {
                let x = r.get(row, f);
                if !x.is_zero() {
                    proj.set(k, p, -x);
                }
            }
        }
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose();
        Ok(QuotientSpace {
            ambient_dim: ambient,
            relation_basis: basis,
            quotient_basis: free,
            projection: proj,
            section,
        })
    }

    /// `π A s`, after checking `A(R) ⊆ R`.
    fn push(&self, a: &Matrix, label: &str) -> Result<Matrix> {
        let pa = &self.projection * a;
        if !(&pa * &self.relation_basis).is_zero() {
            return Err(Error::NotWellDefined {
                operator: String::from(label),
            });
        }
        Ok(&pa * &self.section)
    }
}

/// Output of [`build_functor`].
#[derive(Clone, Debug, PartialEq)]
pub struct FunctorBuild {
    pub n: usize,
    pub l: usize,
    pub quotient: QuotientSpace,
    pub rep: DrinfeldianRep,
    pub warnings: Vec<String>,
}

/// Rank of `B_σ ⊗ 1 − 1 ⊗ T` stacks at a random rational point.
fn random_rank(m: &HeckeModule, n: usize, rng: &mut ChaCha8Rng) -> Result<usize> {
    let mut pick = |avoid_unit: bool| loop {
        let num: i64 = rng.gen_range(-19..=19);
        let den: i64 = rng.gen_range(2..=13);
        if num == 0 || (avoid_unit && num.abs() == den) {
            continue;
        }
        break BigRational::new(BigInt::from(num), BigInt::from(den));
    };
    let mut b = Bindings::new()
        .with(Var::Q, pick(true))
        .with(Var::Eta, pick(false))
        .with(Var::A, pick(false))
        .with(Var::U, pick(false));
    for (v, x) in m.param_bindings().iter() {
        b = b.with(v, x.clone());
    }
    let sm = m.specialize(&b)?;
    let gens = QuotientSpace::relation_generators(&sm, n, &b)?;
    Ok(Matrix::hstack(&gens)?.rank())
}

/// Builds `W_M` and the Drinfeldian action on it.
pub fn build_functor(m: &HeckeModule, n: usize) -> Result<FunctorBuild> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let report = validate_module(m);
    if let Some(bad) = report.failures().next() {
        return Err(Error::InvalidInput(format!("module violates the {} relation", bad.id)));
    }
    let l = m.l;
    let pb = m.param_bindings();
    let mut warnings = Vec::new();
    if l > n {
        warnings.push(format!("l = {l} exceeds n = {n}; the equivalence statement assumes l <= n"));
    }

    let gens = QuotientSpace::relation_generators(m, n, &pb)?;
    let quotient = QuotientSpace::from_generators(&gens)?;
    let generic = quotient.ambient_dim - quotient.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(0xf00d);
    for _ in 0..3 {
        let r = random_rank(m, n, &mut rng)?;
        if r != generic {
            return Err(Error::NonGenericStratum {
                generic,
                specialized: r,
            });
        }
    }

    // U_q generators: 1_M ⊗ Δ^{(l)}(x)
    let vl = tensor_power(n, l)?;
    let idm = Matrix::identity(m.dim);
    let lift = |x: &Matrix, label: &str| -> Result<Matrix> {
        quotient.push(&idm.kron(&x.specialize(&pb)?), label)
    };
    let mut k_pos = Vec::new();
    let mut k_neg = Vec::new();
    for i in 0..=n {
        k_pos.push(lift(&vl.k_pos[i], &format!("q^e{}{}", i + 1, i + 1))?);
        k_neg.push(lift(&vl.k_neg[i], &format!("q^-e{}{}", i + 1, i + 1))?);
    }
    let mut e = Vec::new();
    let mut f = Vec::new();
    for i in 0..n {
        e.push(lift(&vl.e[i], &format!("e{}{}", i + 1, i + 2))?);
        f.push(lift(&vl.f[i], &format!("e{}{}", i + 2, i + 1))?);
    }

    // ξ: group the summands by the slot of the marker
    let exp = xi_coproduct(n, l)?;
    let v = natural_rep(n)?;
    let et = v.eval(&xi_tilde(n), None)?;
    let vdim = (n + 1).pow(l as u32);
    let mut by_slot = vec![Matrix::zeros(vdim, vdim); l + 1];
    for s in &exp.summands {
        let legs = s
            .legs
            .iter()
            .map(|w| v.eval(w, Some(&et)))
            .collect::<Result<Vec<_>>>()?;
        let c = s.coeff.specialize(&pb)?;
        if c.is_zero() {
            continue;
        }
        let k = s.xi_slot.unwrap_or(l);
        by_slot[k] = &by_slot[k] + &Matrix::kron_all(legs.iter()).scale(&c);
    }
    let mut xi = Matrix::zeros(quotient.ambient_dim, quotient.ambient_dim);
    for (k, x) in by_slot.iter().enumerate() {
        let x = x.specialize(&pb)?;
        let left = if k < l { &m.u[k] } else { &idm };
        xi = &xi + &left.kron(&x);
    }
    let xi = quotient.push(&xi, "xi")?;

    let rep = DrinfeldianRep {
        base: ChevalleyRep { n, k_pos, k_neg, e, f },
        xi,
        eta: m.eta.clone(),
    };
    Ok(FunctorBuild {
        n,
        l,
        quotient,
        rep,
        warnings,
    })
}

/// Whether every weight of the representation occurs in `V^{⊗l}`.
pub fn level_check(rep: &DrinfeldianRep, l: usize) -> bool {
    match rep.base.weights() {
        Ok(ws) => ws
            .iter()
            .all(|w| w.iter().all(|&x| x >= 0) && w.iter().sum::<i32>() == l as i32),
        Err(_) => false,
    }
}

/// `C(a, b)`.
pub fn binomial(a: usize, b: usize) -> usize {
    if b > a {
        return 0;
    }
    (0..b).fold(1, |acc, k| acc * (a - k) / (k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn trivial_ladder() {
        let a = RatFunc::var(Var::A);
        let m = builtin_module(ModuleKind::Trivial, 2, a.clone()).unwrap();
        let lhs = &RatFunc::q() * &a;
        let rhs = &(&RatFunc::q_pow(-1) * m.u[1].get(0, 0)) + &RatFunc::eta();
        assert_eq!(lhs, rhs);
    }
}
