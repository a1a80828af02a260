//! The modified affine Hecke algebra H⁺_{qη}(l) as a rewriting system.
//!
//! Elements are kept in the normal form `u_1^{n_1}…u_l^{n_l}·σ_w` with the
//! u-powers on the left and `w` given by its lexicographically smallest
//! reduced word. Products are straightened with
//!
//! * `σ_i σ_i = (q − q⁻¹)σ_i + 1`,
//! * `σ_i u_i = u_{i+1}σ_i + (q⁻¹ − q)u_{i+1} + η`,
//! * `σ_i u_{i+1} = u_iσ_i − (q⁻¹ − q)u_{i+1} − η`,
//! * `σ_i u_j = u_jσ_i` for `j ∉ {i, i+1}`.
//!
//! Setting η = 0 gives the affine Hecke algebra in the `z` presentation,
//! q = 1 the degenerate affine Hecke algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::{RelationCheck, VerificationReport};
use crate::scalar::{Bindings, RatFunc, Var};

/// A permutation of `{1..l}` with its canonical reduced word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u8>,
    word: Vec<u8>,
}

impl Permutation {
    pub fn identity(l: usize) -> Self {
        Permutation {
            images: (1..=l as u8).collect(),
            word: Vec::new(),
        }
    }

    /// `images[k-1]` is the image of `k`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let l = images.len();
        let mut seen = alloc::vec![false; l];
        for &x in images {
            if x == 0 || x > l || seen[x - 1] {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
            seen[x - 1] = true;
        }
        let images: Vec<u8> = images.iter().map(|&x| x as u8).collect();
        let word = canonical_word(&images);
        Ok(Permutation { images, word })
    }

    /// The product `s_{w_1} s_{w_2} … s_{w_k}`.
    pub fn from_word(l: usize, word: &[usize]) -> Result<Self> {
        let mut images: Vec<u8> = (1..=l as u8).collect();
        for &i in word {
            if i == 0 || i >= l {
                return Err(Error::PositionOutOfRange {
                    position: i,
                    max: l.saturating_sub(1),
                });
            }
            images.swap(i - 1, i);
        }
        let word = canonical_word(&images);
        Ok(Permutation { images, word })
    }

    /// All permutations of `{1..l}` in lexicographic order of images.
    pub fn all(l: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=l).collect();
        loop {
            out.push(Self::from_images(&cur).expect("valid permutation"));
            // next lexicographic permutation
            let Some(k) = (0..l.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let j = (k + 1..l).rev().find(|&j| cur[j] > cur[k]).expect("successor exists");
            cur.swap(k, j);
            cur[k + 1..].reverse();
        }
        out
    }

    pub fn l(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// Canonical reduced word as generator indices `1..l-1`.
    pub fn word(&self) -> Vec<usize> {
        self.word.iter().map(|&x| x as usize).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `l(s_i w) < l(w)`.
    fn has_left_descent(&self, i: usize) -> bool {
        left_descent(&self.images, i)
    }

    /// `s_i w`.
    fn left_mul(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        for x in images.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        let word = canonical_word(&images);
        Permutation { images, word }
    }
}

fn left_descent(images: &[u8], i: usize) -> bool {
    let pos = |v: usize| images.iter().position(|&x| x as usize == v).expect("bijection");
    pos(i) > pos(i + 1)
}

/// Lexicographically smallest reduced word: repeatedly strip the smallest
/// left descent.
fn canonical_word(images: &[u8]) -> Vec<u8> {
    let mut cur = images.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (1..cur.len()).find(|&i| left_descent(&cur, i)) {
        word.push(i as u8);
        for x in cur.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
    }
    word
}

/// `u_1^{n_1}…u_l^{n_l}·σ_w`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalMonomial {
    pub upows: Vec<u32>,
    pub perm: Permutation,
}

impl NormalMonomial {
    pub fn new(upows: Vec<u32>, perm: Permutation) -> Result<Self> {
        if upows.len() != perm.l() {
            return Err(Error::RankMismatch {
                left: upows.len(),
                right: perm.l(),
            });
        }
        Ok(NormalMonomial { upows, perm })
    }

    pub fn l(&self) -> usize {
        self.upows.len()
    }

    pub fn udegree(&self) -> u32 {
        self.upows.iter().sum()
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (j, &e) in self.upows.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("u{}", j + 1)),
                _ => parts.push(format!("u{}^{}", j + 1, e)),
            }
        }
        if !self.perm.is_identity() {
            let w: Vec<String> = self.perm.word().iter().map(|i| format!("{i}")).collect();
            parts.push(format!("s[{}]", w.join(",")));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Linear combination of normal monomials with non-zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AhaElement {
    l: usize,
    terms: BTreeMap<NormalMonomial, RatFunc>,
}

type Terms = BTreeMap<NormalMonomial, RatFunc>;

fn add_term(terms: &mut Terms, m: NormalMonomial, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&m) {
        Some(x) => {
            let s = &*x + &c;
            if s.is_zero() {
                terms.remove(&m);
            } else {
                *x = s;
            }
        }
        None => {
            terms.insert(m, c);
        }
    }
}

impl AhaElement {
    pub fn zero(l: usize) -> Self {
        AhaElement {
            l,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(l: usize, c: RatFunc) -> Self {
        Self::monomial(alloc::vec![0; l], Permutation::identity(l), c)
    }

    pub fn one(l: usize) -> Self {
        Self::scalar(l, RatFunc::one())
    }

    pub fn monomial(upows: Vec<u32>, perm: Permutation, c: RatFunc) -> Self {
        let l = perm.l();
        let mut terms = BTreeMap::new();
        let m = NormalMonomial::new(upows, perm).expect("consistent rank");
        add_term(&mut terms, m, c);
        AhaElement { l, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (NormalMonomial, RatFunc)>>(l: usize, it: I) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in it {
            if m.l() != l {
                return Err(Error::RankMismatch { left: l, right: m.l() });
            }
            add_term(&mut terms, m, c);
        }
        Ok(AhaElement { l, terms })
    }

    /// The generator σ_i, `1 ≤ i < l`.
    pub fn sigma(l: usize, i: usize) -> Result<Self> {
        Ok(Self::monomial(
            alloc::vec![0; l],
            Permutation::from_word(l, &[i])?,
            RatFunc::one(),
        ))
    }

    /// The generator u_j, `1 ≤ j ≤ l`.
    pub fn u(l: usize, j: usize) -> Result<Self> {
        if j == 0 || j > l {
            return Err(Error::PositionOutOfRange { position: j, max: l });
        }
        let mut p = alloc::vec![0; l];
        p[j - 1] = 1;
        Ok(Self::monomial(p, Permutation::identity(l), RatFunc::one()))
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &NormalMonomial) -> RatFunc {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &AhaElement) -> Result<Self> {
        self.check_rank(o)?;
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(AhaElement { l: self.l, terms })
    }

    pub fn sub(&self, o: &AhaElement) -> Result<Self> {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.l);
        }
        AhaElement {
            l: self.l,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn specialize(&self, b: &Bindings) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), c.specialize(b)?);
        }
        Ok(AhaElement { l: self.l, terms })
    }

    /// Multiplies every coefficient of `u^a σ_w` by `s^{|a|}`.
    pub fn rescale_u(&self, s: &RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let f = s.pow(m.udegree() as i32).expect("degree is non-negative");
            add_term(&mut terms, m.clone(), c * &f);
        }
        AhaElement { l: self.l, terms }
    }

    fn check_rank(&self, o: &AhaElement) -> Result<()> {
        if self.l != o.l {
            Err(Error::RankMismatch {
                left: self.l,
                right: o.l,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for AhaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

/// Coefficients of the straightening rules. Public so that tests can
/// corrupt them and check that the verifier notices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraighteningRules {
    /// `c` in `σ_i² = c·σ_i + 1`.
    pub quadratic: RatFunc,
    /// `c` in `σ_i u_i = u_{i+1}σ_i + c·u_{i+1} + d`.
    pub cross_linear: RatFunc,
    /// `d` in `σ_i u_i = u_{i+1}σ_i + c·u_{i+1} + d`.
    pub cross_constant: RatFunc,
}

/// Which presentation or limit of the algebra to work in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeckeMode {
    /// Generic q and η.
    Modified,
    /// η = 0, generators read as `z_j`.
    ClassicalZ,
    /// q = 1: the degenerate affine Hecke algebra.
    DegenerateQ1,
    /// q = 1 and η = 0: the affine symmetric group algebra.
    SymmetricQ1Eta0,
}

impl HeckeMode {
    pub const ALL: [HeckeMode; 4] = [
        HeckeMode::Modified,
        HeckeMode::ClassicalZ,
        HeckeMode::DegenerateQ1,
        HeckeMode::SymmetricQ1Eta0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HeckeMode::Modified => "modified",
            HeckeMode::ClassicalZ => "classical_z",
            HeckeMode::DegenerateQ1 => "degenerate_q1",
            HeckeMode::SymmetricQ1Eta0 => "symmetric_q1_eta0",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|m| m.name() == s)
    }

    /// Bindings that realise the mode from the generic algebra.
    pub fn bindings(self) -> Bindings {
        match self {
            HeckeMode::Modified => Bindings::new(),
            HeckeMode::ClassicalZ => Bindings::new().with_int(Var::Eta, 0),
            HeckeMode::DegenerateQ1 => Bindings::new().with_int(Var::Q, 1),
            HeckeMode::SymmetricQ1Eta0 => Bindings::new().with_int(Var::Q, 1).with_int(Var::Eta, 0),
        }
    }
}

/// H⁺_{qη}(l) with specific values (possibly symbolic) of q and η.
#[derive(Clone, Debug)]
pub struct AffineHecke {
    l: usize,
    q: RatFunc,
    eta: RatFunc,
    pub rules: StraighteningRules,
}

impl AffineHecke {
    pub fn new(l: usize, q: RatFunc, eta: RatFunc) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidInput("l must be at least 1".into()));
        }
        let qinv = q.inv()?;
        let rules = StraighteningRules {
            quadratic: &q - &qinv,
            cross_linear: &qinv - &q,
            cross_constant: eta.clone(),
        };
        Ok(AffineHecke { l, q, eta, rules })
    }

    /// Symbolic q and η.
    pub fn modified(l: usize) -> Result<Self> {
        Self::new(l, RatFunc::q(), RatFunc::eta())
    }

    pub fn with_mode(l: usize, mode: HeckeMode) -> Result<Self> {
        let b = mode.bindings();
        let q = RatFunc::q().specialize(&b)?;
        let eta = RatFunc::eta().specialize(&b)?;
        Self::new(l, q, eta)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn q(&self) -> &RatFunc {
        &self.q
    }

    pub fn eta(&self) -> &RatFunc {
        &self.eta
    }

    pub fn one(&self) -> AhaElement {
        AhaElement::one(self.l)
    }

    pub fn sigma(&self, i: usize) -> Result<AhaElement> {
        AhaElement::sigma(self.l, i)
    }

    /// `σ_i⁻¹ = σ_i − (q − q⁻¹)`, computed from q (not from the rules).
    pub fn sigma_inv(&self, i: usize) -> Result<AhaElement> {
        let c = &self.q - &self.q.inv()?;
        self.sigma(i)?.sub(&self.one().scale(&c))
    }

    pub fn u(&self, j: usize) -> Result<AhaElement> {
        AhaElement::u(self.l, j)
    }

    /// Normal-form product.
    pub fn mul(&self, x: &AhaElement, y: &AhaElement) -> Result<AhaElement> {
        if x.l != self.l || y.l != self.l {
            return Err(Error::RankMismatch {
                left: x.l,
                right: if x.l != self.l { self.l } else { y.l },
            });
        }
        let mut out: Terms = BTreeMap::new();
        for (mx, cx) in &x.terms {
            // σ_w · y, then u^a on the left
            let mut cur: Terms = y.terms.clone();
            for &i in mx.perm.word.iter().rev() {
                cur = self.left_sigma(i as usize, &cur);
            }
            for (m, c) in cur {
                let upows: Vec<u32> = m.upows.iter().zip(&mx.upows).map(|(a, b)| a + b).collect();
                add_term(&mut out, NormalMonomial { upows, perm: m.perm }, &c * cx);
            }
        }
        Ok(AhaElement { l: self.l, terms: out })
    }

    /// Product of several factors, left to right.
    pub fn mul_all(&self, factors: &[&AhaElement]) -> Result<AhaElement> {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `σ_i · Σ c u^a σ_x`.
    fn left_sigma(&self, i: usize, elem: &Terms) -> Terms {
        let mut out: Terms = BTreeMap::new();
        for (m, c) in elem {
            let mut swapped = m.upows.clone();
            swapped.swap(i - 1, i);
            // s_i(u^a) σ_i σ_x
            let sx = m.perm.left_mul(i);
            add_term(
                &mut out,
                NormalMonomial {
                    upows: swapped.clone(),
                    perm: sx,
                },
                c.clone(),
            );
            if m.perm.has_left_descent(i) {
                add_term(
                    &mut out,
                    NormalMonomial {
                        upows: swapped,
                        perm: m.perm.clone(),
                    },
                    c * &self.rules.quadratic,
                );
            }
            // B_i(u^a) σ_x
            for (upows, b) in self.correction(i, &m.upows) {
                add_term(
                    &mut out,
                    NormalMonomial {
                        upows,
                        perm: m.perm.clone(),
                    },
                    c * &b,
                );
            }
        }
        out
    }

    /// The polynomial `B_i(f)` in `σ_i f = s_i(f)σ_i + B_i(f)` for a
    /// monomial `f = u^a`.
    fn correction(&self, i: usize, a: &[u32]) -> BTreeMap<Vec<u32>, RatFunc> {
        let (p, r) = (a[i - 1], a[i]);
        let mut out: BTreeMap<Vec<u32>, RatFunc> = BTreeMap::new();
        let push = |out: &mut BTreeMap<Vec<u32>, RatFunc>, k: Vec<u32>, c: RatFunc| {
            if c.is_zero() {
                return;
            }
            let e = out.entry(k).or_default();
            *e = &*e + &c;
        };
        if p == 0 && r == 0 {
            return out;
        }
        let mut g = a.to_vec();
        // Peel one u_i (or u_{i+1}) off the front of f = u_k g.
        let (shift_to, sign) = if p > 0 {
            g[i - 1] -= 1;
            (i, RatFunc::one())
        } else {
            g[i] -= 1;
            (i - 1, RatFunc::from_int(-1))
        };
        for (mut k, c) in self.correction(i, &g) {
            k[shift_to] += 1;
            push(&mut out, k, c);
        }
        // ± (c·u_{i+1} + d)·g
        let mut gu = g.clone();
        gu[i] += 1;
        push(&mut out, gu, &sign * &self.rules.cross_linear);
        push(&mut out, g, &sign * &self.rules.cross_constant);
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// All normal monomials with total u-degree at most `max_udeg`, ordered by
/// degree, then exponent vector, then permutation.
pub fn enumerate_basis(l: usize, max_udeg: u32) -> Vec<NormalMonomial> {
    let perms = Permutation::all(l);
    let mut out = Vec::new();
    for d in 0..=max_udeg {
        for upows in compositions(l, d) {
            for p in &perms {
                out.push(NormalMonomial {
                    upows: upows.clone(),
                    perm: p.clone(),
                });
            }
        }
    }
    out
}

/// Exponent vectors of length `l` summing to `d`, in lexicographic order.
fn compositions(l: usize, d: u32) -> Vec<Vec<u32>> {
    if l == 0 {
        return if d == 0 { alloc::vec![Vec::new()] } else { Vec::new() };
    }
    if l == 1 {
        return alloc::vec![alloc::vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in compositions(l - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// An element of the η = 0 algebra written in the generators `z_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZElement(pub AhaElement);

/// `η/(q − q⁻¹)`.
pub fn shift_coefficient() -> RatFunc {
    RatFunc::eta()
        .div(&RatFunc::q_minus_qinv())
        .expect("q - 1/q is non-zero")
}

/// Substitutes `x_j = y_j + c` in the u-part of every monomial.
fn shift_u(e: &AhaElement, c: &RatFunc) -> AhaElement {
    let mut terms: Terms = BTreeMap::new();
    for (m, coeff) in &e.terms {
        // expand Π_j (y_j + c)^{a_j}
        let mut poly: BTreeMap<Vec<u32>, RatFunc> = BTreeMap::new();
        poly.insert(alloc::vec![0; e.l], coeff.clone());
        for (j, &a) in m.upows.iter().enumerate() {
            let mut next: BTreeMap<Vec<u32>, RatFunc> = BTreeMap::new();
            for (k, x) in &poly {
                let mut binom = RatFunc::one();
                for t in 0..=a {
                    // C(a, t) c^{a-t} y_j^t
                    let mut key = k.clone();
                    key[j] += t;
                    let cpow = c.pow((a - t) as i32).expect("non-negative power");
                    let v = &(x * &binom) * &cpow;
                    let slot = next.entry(key).or_default();
                    *slot = &*slot + &v;
                    binom = &(&binom * &RatFunc::from_int((a - t) as i64))
                        * &RatFunc::from_int(t as i64 + 1).inv().expect("non-zero");
                }
            }
            poly = next;
        }
        for (k, x) in poly {
            add_term(
                &mut terms,
                NormalMonomial {
                    upows: k,
                    perm: m.perm.clone(),
                },
                x,
            );
        }
    }
    AhaElement { l: e.l, terms }
}

/// `z_j ↦ u_j − η/(q − q⁻¹)`.
pub fn u_from_z(z: &ZElement) -> AhaElement {
    shift_u(&z.0, &-shift_coefficient())
}

/// `u_j ↦ z_j + η/(q − q⁻¹)`.
pub fn z_from_u(u: &AhaElement) -> ZElement {
    ZElement(shift_u(u, &shift_coefficient()))
}

/// Random monomial with u-degrees in `0..=max_pow` and a random permutation.
fn random_monomial(rng: &mut ChaCha8Rng, l: usize, max_pow: u32, perms: &[Permutation]) -> AhaElement {
    let upows: Vec<u32> = (0..l).map(|_| rng.gen_range(0..=max_pow)).collect();
    let p = perms[rng.gen_range(0..perms.len())].clone();
    let c = RatFunc::from_int(rng.gen_range(1..=3));
    AhaElement::monomial(upows, p, c)
}

/// Options for [`verify_aha`].
#[derive(Clone, Debug)]
pub struct AhaCheckOptions {
    pub seed: u64,
    /// Number of random triples for the associativity check.
    pub triples: usize,
}

impl Default for AhaCheckOptions {
    fn default() -> Self {
        AhaCheckOptions {
            seed: 0x5eed,
            triples: 100,
        }
    }
}

/// Checks the defining relations of the algebra in the given mode, plus
/// associativity on random triples and consistency with the generic
/// algebra.
pub fn verify_aha(l: usize, mode: HeckeMode, opts: &AhaCheckOptions) -> Result<VerificationReport> {
    let alg = AffineHecke::with_mode(l, mode)?;
    verify_algebra(&alg, mode, opts)
}

/// As [`verify_aha`] for an explicitly given (possibly corrupted) algebra.
pub fn verify_algebra(alg: &AffineHecke, mode: HeckeMode, opts: &AhaCheckOptions) -> Result<VerificationReport> {
    let l = alg.l;
    if !(2..=6).contains(&l) {
        return Err(Error::InvalidInput(format!("l = {l} outside 2..=6")));
    }
    let mut rep = VerificationReport::new(format!("affine Hecke algebra, l={l}, mode={}", mode.name()));
    let gen = if mode == HeckeMode::ClassicalZ { "z" } else { "u" };
    let s = |i| alg.sigma(i);
    let u = |j| alg.u(j);
    let m = |x: &AhaElement, y: &AhaElement| alg.mul(x, y);

    // σ_i σ_i⁻¹ = σ_i⁻¹ σ_i = 1
    let mut res = Vec::new();
    for i in 1..l {
        let (a, b) = (s(i)?, alg.sigma_inv(i)?);
        res.push(m(&a, &b)?.sub(&alg.one())?);
        res.push(m(&b, &a)?.sub(&alg.one())?);
    }
    rep.push(RelationCheck::from_elements("quadratic", "sigma - sigma^-1 = q - q^-1", res));

    let mut res = Vec::new();
    for i in 1..l.saturating_sub(1) {
        let lhs = alg.mul_all(&[&s(i)?, &s(i + 1)?, &s(i)?])?;
        let rhs = alg.mul_all(&[&s(i + 1)?, &s(i)?, &s(i + 1)?])?;
        res.push(lhs.sub(&rhs)?);
    }
    rep.push(RelationCheck::from_elements("braid", "s_i s_i+1 s_i = s_i+1 s_i s_i+1", res));

    let mut res = Vec::new();
    for i in 1..l {
        for j in i + 2..l {
            res.push(m(&s(i)?, &s(j)?)?.sub(&m(&s(j)?, &s(i)?)?)?);
        }
    }
    rep.push(RelationCheck::from_elements("distant", "s_i s_j = s_j s_i, |i-j|>1", res));

    let mut res = Vec::new();
    for j in 1..=l {
        for k in j + 1..=l {
            res.push(m(&u(j)?, &u(k)?)?.sub(&m(&u(k)?, &u(j)?)?)?);
        }
    }
    let ctx = format!("{gen}_j {gen}_k = {gen}_k {gen}_j");
    rep.push(RelationCheck::from_elements("commuting", &ctx, res));

    let mut res = Vec::new();
    for i in 1..l {
        for j in (1..=l).filter(|&j| j != i && j != i + 1) {
            res.push(m(&s(i)?, &u(j)?)?.sub(&m(&u(j)?, &s(i)?)?)?);
        }
    }
    let ctx = format!("s_i {gen}_j = {gen}_j s_i");
    rep.push(RelationCheck::from_elements("sigma-commute", &ctx, res));

    // σ_i u_i = u_{i+1} σ_i⁻¹ + η, and u_i σ_i − σ_i u_{i+1} = (q⁻¹ − q)u_{i+1} + η
    let mut res = Vec::new();
    let cl = &alg.q.inv()? - &alg.q;
    for i in 1..l {
        let eta = alg.one().scale(&alg.eta);
        let lhs = m(&s(i)?, &u(i)?)?;
        let rhs = m(&u(i + 1)?, &alg.sigma_inv(i)?)?.add(&eta)?;
        res.push(lhs.sub(&rhs)?);
        let lhs = m(&u(i)?, &s(i)?)?.sub(&m(&s(i)?, &u(i + 1)?)?)?;
        let rhs = u(i + 1)?.scale(&cl).add(&eta)?;
        res.push(lhs.sub(&rhs)?);
    }
    let ctx = if mode == HeckeMode::ClassicalZ {
        String::from("s_i z_i = z_i+1 s_i^-1")
    } else {
        String::from("s_i u_i = u_i+1 s_i^-1 + eta")
    };
    rep.push(RelationCheck::from_elements("cross", &ctx, res));

    // Associativity on random triples.
    let perms = Permutation::all(l);
    let max_pow = if l <= 3 { 2 } else { 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut res = Vec::new();
    for _ in 0..opts.triples {
        let a = random_monomial(&mut rng, l, max_pow, &perms);
        let b = random_monomial(&mut rng, l, max_pow, &perms);
        let c = random_monomial(&mut rng, l, max_pow, &perms);
        let left = m(&m(&a, &b)?, &c)?;
        let right = m(&a, &m(&b, &c)?)?;
        res.push(left.sub(&right)?);
    }
    rep.push(RelationCheck::from_elements("associativity", "(ab)c = a(bc), random triples", res));

    // Consistency with the neighbouring algebra of the limit diagram.
    let pairs: Vec<(AhaElement, AhaElement)> = (0..opts.triples.min(20))
        .map(|_| {
            (
                random_monomial(&mut rng, l, 1, &perms),
                random_monomial(&mut rng, l, 1, &perms),
            )
        })
        .collect();
    let mut res = Vec::new();
    let ctx = match mode {
        HeckeMode::Modified => {
            // η⁻¹u_j ↦ 3⁻¹u_j is an isomorphism onto the algebra with η = 3.
            let other = AffineHecke::new(l, alg.q.clone(), RatFunc::from_int(3))?;
            let sc = alg.eta.div(&RatFunc::from_int(3))?;
            for (a, b) in &pairs {
                let lhs = m(a, b)?.rescale_u(&sc);
                let rhs = other.mul(&a.rescale_u(&sc), &b.rescale_u(&sc))?;
                res.push(lhs.sub(&rhs)?);
            }
            "eta rescaling isomorphism"
        }
        HeckeMode::ClassicalZ => {
            // u_j = z_j + η/(q − q⁻¹) carries the z-algebra onto the u-algebra.
            let modified = AffineHecke::modified(l)?;
            for (a, b) in &pairs {
                let prod = u_from_z(&ZElement(m(a, b)?));
                let via = modified.mul(&u_from_z(&ZElement(a.clone())), &u_from_z(&ZElement(b.clone())))?;
                res.push(prod.sub(&via)?);
            }
            "z to u translation is multiplicative"
        }
        HeckeMode::DegenerateQ1 | HeckeMode::SymmetricQ1Eta0 => {
            let generic = AffineHecke::modified(l)?;
            let b = mode.bindings();
            for (x, y) in &pairs {
                let lim = generic.mul(x, y)?.specialize(&b)?;
                res.push(m(x, y)?.sub(&lim)?);
            }
            "agrees with the limit of the generic product"
        }
    };
    rep.push(RelationCheck::from_elements("limit", ctx, res));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qmq() -> RatFunc {
        RatFunc::q_minus_qinv()
    }

    #[test]
    fn canonical_words() {
        let w0 = Permutation::from_images(&[3, 2, 1]).unwrap();
        assert_eq!(w0.word(), alloc::vec![1, 2, 1]);
        let p = Permutation::from_word(3, &[2, 1, 2]).unwrap();
        assert_eq!(p, w0);
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn sigma_squared() {
        let h = AffineHecke::modified(2).unwrap();
        let s = h.sigma(1).unwrap();
        let got = h.mul(&s, &s).unwrap();
        let expected = h.one().add(&s.scale(&qmq())).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn sigma_past_u1() {
        let h = AffineHecke::modified(2).unwrap();
        let got = h.mul(&h.sigma(1).unwrap(), &h.u(1).unwrap()).unwrap();
        let u2s1 = h.mul(&h.u(2).unwrap(), &h.sigma(1).unwrap()).unwrap();
        let cl = &RatFunc::q().inv().unwrap() - &RatFunc::q();
        let expected = u2s1
            .add(&h.u(2).unwrap().scale(&cl))
            .unwrap()
            .add(&h.one().scale(&RatFunc::eta()))
            .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn u_commute_l3() {
        let h = AffineHecke::modified(3).unwrap();
        let a = h.mul(&h.u(1).unwrap(), &h.u(2).unwrap()).unwrap();
        let b = h.mul(&h.u(2).unwrap(), &h.u(1).unwrap()).unwrap();
        assert!(a.sub(&b).unwrap().is_zero());
    }

    #[test]
    fn basis_counts() {
        assert_eq!(enumerate_basis(3, 0).len(), 6);
        assert_eq!(enumerate_basis(1, 2).len(), 3);
        assert_eq!(enumerate_basis(2, 1).len(), 6);
    }

    #[test]
    fn z_u_round_trip() {
        let h = AffineHecke::modified(2).unwrap();
        let x = h.mul(&h.u(1).unwrap(), &h.sigma(1).unwrap()).unwrap();
        assert_eq!(u_from_z(&z_from_u(&x)), x);
        let z1 = ZElement(AhaElement::u(2, 1).unwrap());
        let expected = h.u(1).unwrap().sub(&h.one().scale(&shift_coefficient())).unwrap();
        assert_eq!(u_from_z(&z1), expected);
    }

    #[test]
    fn rank_mismatch() {
        let h = AffineHecke::modified(2).unwrap();
        let bad = AhaElement::one(3);
        assert!(matches!(h.mul(&bad, &bad), Err(Error::RankMismatch { .. })));
    }
}
