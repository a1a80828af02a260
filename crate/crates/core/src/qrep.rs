//! U_q(sl(n+1)) in its natural representation and tensor powers.
//!
//! Conventions: `e_{ij} v_k = δ_{jk} v_i`, `q^{e_ii} v_k = q^{δ_ik} v_k`,
//!
//! ```text
//! Δ(q^h) = q^h ⊗ q^h
//! Δ(e_i) = e_i ⊗ 1 + q^{-h_i} ⊗ e_i          (e_i = e_{i,i+1})
//! Δ(f_i) = f_i ⊗ q^{h_i} + 1 ⊗ f_i           (f_i = e_{i+1,i})
//! S(e_i) = −q^{h_i} e_i,  S(f_i) = −f_i q^{-h_i}
//! ```
//!
//! with `q^{h_i} = q^{e_ii − e_{i+1,i+1}}`. Composite root vectors are
//! nested q-commutators of Chevalley generators. Tensor factors are ordered
//! with the first leg most significant.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, RepMatrix};
use crate::report::{RelationCheck, VerificationReport};
use crate::scalar::{qnum_rf, RatFunc, Var};

/// Root system of type A_n realised in the weights ε_1..ε_{n+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootData {
    pub n: usize,
}

impl RootData {
    pub fn new(n: usize) -> Self {
        RootData { n }
    }

    /// `(α_i, α_j)` for simple roots.
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        match i.abs_diff(j) {
            0 => 2,
            1 => -1,
            _ => 0,
        }
    }

    /// Coordinates of `ε_i − ε_j` in the ε basis.
    pub fn root(&self, i: usize, j: usize) -> Vec<i32> {
        let mut v = alloc::vec![0; self.n + 1];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        v
    }

    /// `(ε_i − ε_j, ε_k − ε_l)` with `(ε_a, ε_b) = δ_ab`.
    pub fn pairing(&self, a: (usize, usize), b: (usize, usize)) -> i32 {
        let d = |x: usize, y: usize| i32::from(x == y);
        d(a.0, b.0) - d(a.0, b.1) - d(a.1, b.0) + d(a.1, b.1)
    }

    /// Positive roots `ε_i − ε_j`, `i < j`, in the normal ordering
    /// `(1,2) < (1,3) < … < (1,n+1) < (2,3) < …`.
    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n + 1 {
            for j in i + 1..=self.n + 1 {
                out.push((i, j));
            }
        }
        out
    }

    /// The maximal root θ = ε_1 − ε_{n+1}.
    pub fn theta(&self) -> Vec<i32> {
        self.root(1, self.n + 1)
    }

    /// Coefficients of `h_{α_i} = e_ii − e_{i+1,i+1}`.
    pub fn h(&self, i: usize) -> Vec<i32> {
        self.root(i, i + 1)
    }

    /// Coefficients of `e_ii`.
    pub fn e_diag(&self, i: usize) -> Vec<i32> {
        let mut v = alloc::vec![0; self.n + 1];
        v[i - 1] = 1;
        v
    }
}

/// Generator symbols of U_q(sl(n+1)) and the affine generator ξ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// `q^{Σ c_k e_kk}`.
    QPow(Vec<i32>),
    /// `e_{ij}`, 1-based, `i ≠ j`.
    Root(usize, usize),
    /// `[Σ c_k e_kk + c_0]_q`.
    QBracket(Vec<i32>, i32),
    /// ξ_{δ−θ}.
    Xi,
}

pub type Word = Vec<Symbol>;

fn write_cartan(f: &mut fmt::Formatter<'_>, c: &[i32], c0: i32) -> fmt::Result {
    let mut first = true;
    for (k, &x) in c.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let sign = if x < 0 { "-" } else if first { "" } else { "+" };
        let mag = x.unsigned_abs();
        if mag == 1 {
            write!(f, "{sign}e{}{}", k + 1, k + 1)?;
        } else {
            write!(f, "{sign}{mag}e{}{}", k + 1, k + 1)?;
        }
        first = false;
    }
    if c0 != 0 || first {
        if first {
            write!(f, "{c0}")?;
        } else {
            write!(f, "{c0:+}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::QPow(c) => {
                write!(f, "q^(")?;
                write_cartan(f, c, 0)?;
                write!(f, ")")
            }
            Symbol::Root(i, j) => write!(f, "e{i}{j}"),
            Symbol::QBracket(c, c0) => {
                write!(f, "[")?;
                write_cartan(f, c, *c0)?;
                write!(f, "]")
            }
            Symbol::Xi => write!(f, "xi"),
        }
    }
}

/// Formal linear combination of words in the generator symbols. Products
/// are never simplified; words are only evaluated as matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWord {
    n: usize,
    terms: BTreeMap<Word, RatFunc>,
}

fn add_word(terms: &mut BTreeMap<Word, RatFunc>, w: Word, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    let slot = terms.entry(w).or_default();
    *slot = &*slot + &c;
    if slot.is_zero() {
        terms.retain(|_, v| !v.is_zero());
    }
}

impl GenWord {
    pub fn zero(n: usize) -> Self {
        GenWord {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, RatFunc::one())
    }

    pub fn scalar(n: usize, c: RatFunc) -> Self {
        let mut g = Self::zero(n);
        add_word(&mut g.terms, Vec::new(), c);
        g
    }

    pub fn symbol(n: usize, s: Symbol) -> Self {
        let mut g = Self::zero(n);
        g.terms.insert(alloc::vec![s], RatFunc::one());
        g
    }

    pub fn word(n: usize, w: Word, c: RatFunc) -> Self {
        let mut g = Self::zero(n);
        add_word(&mut g.terms, w, c);
        g
    }

    /// `q^{Σ c_k e_kk}`.
    pub fn qpow(n: usize, c: Vec<i32>) -> Self {
        Self::symbol(n, Symbol::QPow(c))
    }

    /// The raw symbol `e_{ij}` (not expanded into Chevalley generators).
    pub fn e(n: usize, i: usize, j: usize) -> Self {
        Self::symbol(n, Symbol::Root(i, j))
    }

    pub fn qbracket(n: usize, c: Vec<i32>, c0: i32) -> Self {
        Self::symbol(n, Symbol::QBracket(c, c0))
    }

    pub fn xi(n: usize) -> Self {
        Self::symbol(n, Symbol::Xi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
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

    pub fn contains_xi(&self) -> bool {
        self.terms.keys().any(|w| w.contains(&Symbol::Xi))
    }

    pub fn add(&self, o: &GenWord) -> GenWord {
        let mut terms = self.terms.clone();
        for (w, c) in &o.terms {
            add_word(&mut terms, w.clone(), c.clone());
        }
        GenWord { n: self.n, terms }
    }

    pub fn sub(&self, o: &GenWord) -> GenWord {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> GenWord {
        let mut terms = BTreeMap::new();
        for (w, x) in &self.terms {
            add_word(&mut terms, w.clone(), x * c);
        }
        GenWord { n: self.n, terms }
    }

    pub fn mul(&self, o: &GenWord) -> GenWord {
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend(b.iter().cloned());
                add_word(&mut terms, w, x * y);
            }
        }
        GenWord { n: self.n, terms }
    }

    /// `self·o − c·o·self`.
    pub fn q_commutator(&self, o: &GenWord, c: &RatFunc) -> GenWord {
        self.mul(o).sub(&o.mul(self).scale(c))
    }

    /// Replaces every symbol by the image `f(symbol)` and multiplies out.
    pub fn substitute<F>(&self, mut f: F) -> Result<GenWord>
    where
        F: FnMut(&Symbol) -> Result<GenWord>,
    {
        let mut out = GenWord::zero(self.n);
        for (w, c) in &self.terms {
            let mut acc = GenWord::scalar(self.n, c.clone());
            for s in w {
                acc = acc.mul(&f(s)?);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() || w.is_empty() {
                write!(f, "({c})")?;
                if !w.is_empty() {
                    write!(f, "*")?;
                }
            }
            for (j, s) in w.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n + 1 || j > n + 1 || i == j {
        Err(Error::IndexOutOfRange { i, j, n })
    } else {
        Ok(())
    }
}

/// The default splitting index for a composite root vector.
fn default_split(i: usize, j: usize) -> usize {
    if i < j {
        i + 1
    } else {
        i - 1
    }
}

/// `e_{ij}` written in Chevalley generators, splitting at `k` on the
/// outermost level:
/// `e_{ij} = [e_{ik}, e_{kj}]_{q⁻¹} = e_{ik}e_{kj} − q e_{kj}e_{ik}` for
/// `i < k < j`, and `e_{ij} = [e_{ik}, e_{kj}]_q = e_{ik}e_{kj} − q⁻¹e_{kj}e_{ik}`
/// for `i > k > j`.
pub fn root_vector_split(n: usize, i: usize, j: usize, k: usize) -> Result<GenWord> {
    check_indices(n, i, j)?;
    if i.abs_diff(j) == 1 {
        return Ok(GenWord::e(n, i, j));
    }
    let between = if i < j { i < k && k < j } else { j < k && k < i };
    if !between {
        return Err(Error::IndexOutOfRange { i, j: k, n });
    }
    let a = root_vector(n, i, k)?;
    let b = root_vector(n, k, j)?;
    let c = if i < j { RatFunc::q() } else { RatFunc::q_pow(-1) };
    Ok(a.q_commutator(&b, &c))
}

/// `e_{ij}` in Chevalley generators with the default splittings.
pub fn root_vector(n: usize, i: usize, j: usize) -> Result<GenWord> {
    check_indices(n, i, j)?;
    if i.abs_diff(j) == 1 {
        return Ok(GenWord::e(n, i, j));
    }
    root_vector_split(n, i, j, default_split(i, j))
}

/// Matrices of the Chevalley generators on a weight representation:
/// `q^{±e_ii}` (i = 1..n+1), `e_i = e_{i,i+1}` and `f_i = e_{i+1,i}`
/// (i = 1..n).
#[derive(Clone, Debug, PartialEq)]
pub struct ChevalleyRep {
    pub n: usize,
    pub k_pos: Vec<Matrix>,
    pub k_neg: Vec<Matrix>,
    pub e: Vec<Matrix>,
    pub f: Vec<Matrix>,
}

impl ChevalleyRep {
    pub fn dim(&self) -> usize {
        self.k_pos.first().map_or(0, Matrix::rows)
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.dim())
    }

    /// Integer weights `(w_1..w_{n+1})` of every basis vector, read from the
    /// diagonal entries `q^{w_i}` of `q^{e_ii}`.
    pub fn weights(&self) -> Result<Vec<Vec<i32>>> {
        let d = self.dim();
        let mut out = alloc::vec![alloc::vec![0; self.n + 1]; d];
        for (i, k) in self.k_pos.iter().enumerate() {
            if !k.is_diagonal() {
                return Err(Error::NotWeightRepresentation);
            }
            for (b, w) in out.iter_mut().enumerate() {
                w[i] = q_exponent(k.get(b, b)).ok_or(Error::NotWeightRepresentation)?;
            }
        }
        Ok(out)
    }

    /// `q^{Σ c_k e_kk}` as a product of the stored Cartan matrices.
    pub fn qpow(&self, c: &[i32]) -> Matrix {
        let mut acc = self.identity();
        for (k, &x) in c.iter().enumerate() {
            let m = if x >= 0 { &self.k_pos[k] } else { &self.k_neg[k] };
            for _ in 0..x.unsigned_abs() {
                acc = &acc * m;
            }
        }
        acc
    }

    /// `q^{±h_{α_i}}`.
    pub fn qh(&self, i: usize, sign: i32) -> Matrix {
        let h: Vec<i32> = RootData::new(self.n).h(i).iter().map(|x| x * sign).collect();
        self.qpow(&h)
    }

    /// `[Σ c_k e_kk + c0]_q` as the diagonal of q-numbers of the weights.
    pub fn qbracket(&self, c: &[i32], c0: i32) -> Result<Matrix> {
        let ws = self.weights()?;
        Ok(Matrix::diag(
            ws.iter()
                .map(|w| {
                    let m: i32 = w.iter().zip(c).map(|(a, b)| a * b).sum::<i32>() + c0;
                    qnum_rf(m as i64)
                })
                .collect(),
        ))
    }

    /// Matrix of `e_{ij}` with the default splittings.
    pub fn root(&self, i: usize, j: usize) -> Result<Matrix> {
        check_indices(self.n, i, j)?;
        if j == i + 1 {
            return Ok(self.e[i - 1].clone());
        }
        if i == j + 1 {
            return Ok(self.f[j - 1].clone());
        }
        self.root_split(i, j, default_split(i, j))
    }

    /// Matrix of `e_{ij}` split at `k` on the outer level.
    pub fn root_split(&self, i: usize, j: usize, k: usize) -> Result<Matrix> {
        check_indices(self.n, i, j)?;
        let between = if i < j { i < k && k < j } else { j < k && k < i };
        if !between {
            return Err(Error::IndexOutOfRange { i, j: k, n: self.n });
        }
        let a = self.root(i, k)?;
        let b = self.root(k, j)?;
        let c = if i < j { RatFunc::q() } else { RatFunc::q_pow(-1) };
        Ok(a.q_commutator(&b, &c))
    }

    /// Image of a word in the symbols; `xi` is the image of ξ if allowed.
    pub fn eval(&self, x: &GenWord, xi: Option<&Matrix>) -> Result<Matrix> {
        let mut cache: BTreeMap<Symbol, Matrix> = BTreeMap::new();
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (w, c) in &x.terms {
            let mut acc: Option<Matrix> = None;
            for s in w {
                if !cache.contains_key(s) {
                    let m = match s {
                        Symbol::QPow(c) => self.qpow(c),
                        Symbol::Root(i, j) => self.root(*i, *j)?,
                        Symbol::QBracket(c, c0) => self.qbracket(c, *c0)?,
                        Symbol::Xi => xi.ok_or(Error::XiNotAllowed)?.clone(),
                    };
                    cache.insert(s.clone(), m);
                }
                let m = &cache[s];
                acc = Some(match acc {
                    None => m.clone(),
                    Some(a) => &a * m,
                });
            }
            let term = match acc {
                None => self.identity().scale(c),
                Some(a) => a.scale(c),
            };
            out = &out + &term;
        }
        Ok(out)
    }

    /// Specializes every matrix.
    pub fn specialize(&self, b: &crate::scalar::Bindings) -> Result<ChevalleyRep> {
        let sp = |v: &Vec<Matrix>| v.iter().map(|m| m.specialize(b)).collect::<Result<Vec<_>>>();
        Ok(ChevalleyRep {
            n: self.n,
            k_pos: sp(&self.k_pos)?,
            k_neg: sp(&self.k_neg)?,
            e: sp(&self.e)?,
            f: sp(&self.f)?,
        })
    }

    /// Applies `f` to every generator image.
    pub fn map_matrices<F: FnMut(&Matrix) -> Matrix>(&self, mut f: F) -> ChevalleyRep {
        ChevalleyRep {
            n: self.n,
            k_pos: self.k_pos.iter().map(&mut f).collect(),
            k_neg: self.k_neg.iter().map(&mut f).collect(),
            e: self.e.iter().map(&mut f).collect(),
            f: self.f.iter().map(&mut f).collect(),
        }
    }
}

/// The exponent `w` if `x = q^w`.
fn q_exponent(x: &RatFunc) -> Option<i32> {
    let p = x.as_poly()?;
    match p.terms() {
        [(e, c)] if e.is_q_only() && num_traits::One::is_one(c) => Some(e.get(Var::Q)),
        _ => None,
    }
}

/// The natural (n+1)-dimensional representation.
pub fn natural_rep(n: usize) -> Result<ChevalleyRep> {
    if n == 0 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let d = n + 1;
    let kdiag = |i: usize, e: i32| {
        Matrix::diag((0..d).map(|k| if k == i { RatFunc::q_pow(e) } else { RatFunc::one() }).collect())
    };
    Ok(ChevalleyRep {
        n,
        k_pos: (0..d).map(|i| kdiag(i, 1)).collect(),
        k_neg: (0..d).map(|i| kdiag(i, -1)).collect(),
        e: (0..n).map(|i| Matrix::unit(d, i, i + 1)).collect(),
        f: (0..n).map(|i| Matrix::unit(d, i + 1, i)).collect(),
    })
}

/// `a ⊗ b` with the action through the coproduct.
pub fn tensor(a: &ChevalleyRep, b: &ChevalleyRep) -> Result<ChevalleyRep> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    let (ia, ib) = (a.identity(), b.identity());
    let n = a.n;
    Ok(ChevalleyRep {
        n,
        k_pos: a.k_pos.iter().zip(&b.k_pos).map(|(x, y)| x.kron(y)).collect(),
        k_neg: a.k_neg.iter().zip(&b.k_neg).map(|(x, y)| x.kron(y)).collect(),
        e: (1..=n)
            .map(|i| &a.e[i - 1].kron(&ib) + &a.qh(i, -1).kron(&b.e[i - 1]))
            .collect(),
        f: (1..=n)
            .map(|i| &a.f[i - 1].kron(&b.qh(i, 1)) + &ia.kron(&b.f[i - 1]))
            .collect(),
    })
}

/// `V^{⊗l}` from the explicit l-fold coproduct
/// `Δ^{(l)}(e_i) = Σ_p (q^{-h_i})^{⊗p} ⊗ e_i ⊗ 1^{⊗(l-p-1)}` and its mirror
/// for `f_i`.
pub fn tensor_power(n: usize, l: usize) -> Result<ChevalleyRep> {
    if l == 0 {
        return Err(Error::InvalidInput("l must be at least 1".into()));
    }
    let v = natural_rep(n)?;
    let id = v.identity();
    let pow = |m: &Matrix| Matrix::kron_all(core::iter::repeat(m).take(l));
    let leg_sum = |before: &Matrix, mid: &Matrix, after: &Matrix| {
        let mut tot = Matrix::zeros((n + 1).pow(l as u32), (n + 1).pow(l as u32));
        for p in 0..l {
            let mut fs: Vec<&Matrix> = Vec::with_capacity(l);
            fs.extend(core::iter::repeat(before).take(p));
            fs.push(mid);
            fs.extend(core::iter::repeat(after).take(l - p - 1));
            tot = &tot + &Matrix::kron_all(fs);
        }
        tot
    };
    let e = (1..=n)
        .map(|i| leg_sum(&v.qh(i, -1), &v.e[i - 1], &id))
        .collect();
    let f = (1..=n)
        .map(|i| leg_sum(&id, &v.f[i - 1], &v.qh(i, 1)))
        .collect();
    Ok(ChevalleyRep {
        n,
        k_pos: v.k_pos.iter().map(pow).collect(),
        k_neg: v.k_neg.iter().map(pow).collect(),
        e,
        f,
    })
}

/// Image of a ξ-free word under the l-fold coproduct, on `V^{⊗l}`.
pub fn coproduct_power(x: &GenWord, l: usize) -> Result<RepMatrix> {
    if x.contains_xi() {
        return Err(Error::XiNotAllowed);
    }
    let rep = tensor_power(x.n, l)?;
    RepMatrix::new(x.n, l, rep.eval(x, None)?)
}

/// The operator `T` on `V ⊗ V`:
/// `T(v_r⊗v_s) = q v_r⊗v_s` (r = s), `v_s⊗v_r` (r < s),
/// `v_s⊗v_r + (q − q⁻¹) v_r⊗v_s` (r > s).
pub fn t_operator(n: usize) -> Result<RepMatrix> {
    if n == 0 {
        return Err(Error::RankTooSmall { n, min: 1 });
    }
    let d = n + 1;
    let mut t = Matrix::zeros(d * d, d * d);
    for r in 0..d {
        for s in 0..d {
            let col = r * d + s;
            if r == s {
                t.set(col, col, RatFunc::q());
            } else {
                t.set(s * d + r, col, RatFunc::one());
                if r > s {
                    t.set(col, col, RatFunc::q_minus_qinv());
                }
            }
        }
    }
    RepMatrix::new(n, 2, t)
}

/// `T` acting on legs `(i, i+1)` of `V^{⊗l}`.
pub fn sigma_on_tensor(n: usize, l: usize, i: usize) -> Result<RepMatrix> {
    if i == 0 || i + 1 > l {
        return Err(Error::PositionOutOfRange {
            position: i,
            max: l.saturating_sub(1),
        });
    }
    let t = t_operator(n)?.matrix;
    let id = Matrix::identity(n + 1);
    let mut fs: Vec<&Matrix> = Vec::new();
    fs.extend(core::iter::repeat(&id).take(i - 1));
    fs.push(&t);
    fs.extend(core::iter::repeat(&id).take(l - i - 1));
    RepMatrix::new(n, l, Matrix::kron_all(fs))
}

/// Formal sum of two-leg tensors of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorWord {
    pub n: usize,
    pub terms: Vec<(GenWord, GenWord)>,
}

impl TensorWord {
    pub fn mul(&self, o: &TensorWord) -> TensorWord {
        let mut terms = Vec::new();
        for (a, b) in &self.terms {
            for (c, d) in &o.terms {
                terms.push((a.mul(c), b.mul(d)));
            }
        }
        TensorWord { n: self.n, terms }
    }

    pub fn scale(&self, c: &RatFunc) -> TensorWord {
        TensorWord {
            n: self.n,
            terms: self.terms.iter().map(|(a, b)| (a.scale(c), b.clone())).collect(),
        }
    }

    pub fn add(&self, o: &TensorWord) -> TensorWord {
        let mut terms = self.terms.clone();
        terms.extend(o.terms.iter().cloned());
        TensorWord { n: self.n, terms }
    }

    /// `m ∘ (f ⊗ g)`.
    pub fn contract<F, G>(&self, mut f: F, mut g: G) -> Result<GenWord>
    where
        F: FnMut(&GenWord) -> Result<GenWord>,
        G: FnMut(&GenWord) -> Result<GenWord>,
    {
        let mut out = GenWord::zero(self.n);
        for (a, b) in &self.terms {
            out = out.add(&f(a)?.mul(&g(b)?));
        }
        Ok(out)
    }

    /// Image on `A ⊗ B`.
    pub fn eval(&self, a: &ChevalleyRep, b: &ChevalleyRep) -> Result<Matrix> {
        let mut out = Matrix::zeros(a.dim() * b.dim(), a.dim() * b.dim());
        for (x, y) in &self.terms {
            out = &out + &a.eval(x, None)?.kron(&b.eval(y, None)?);
        }
        Ok(out)
    }
}

/// Coproduct of a single ξ-free symbol.
pub fn symbol_coproduct(n: usize, s: &Symbol) -> Result<TensorWord> {
    let one = GenWord::one(n);
    let tw = |terms| TensorWord { n, terms };
    Ok(match s {
        Symbol::QPow(c) => tw(alloc::vec![(GenWord::qpow(n, c.clone()), GenWord::qpow(n, c.clone()))]),
        Symbol::Root(i, j) if *j == i + 1 => {
            let e = GenWord::e(n, *i, *j);
            let h: Vec<i32> = RootData::new(n).h(*i).iter().map(|x| -x).collect();
            tw(alloc::vec![(e.clone(), one), (GenWord::qpow(n, h), e)])
        }
        Symbol::Root(i, j) if *i == j + 1 => {
            let f = GenWord::e(n, *i, *j);
            let h = RootData::new(n).h(*j);
            tw(alloc::vec![(f.clone(), GenWord::qpow(n, h)), (one, f)])
        }
        Symbol::Root(i, j) => coproduct(&root_vector(n, *i, *j)?)?,
        Symbol::QBracket(c, c0) => {
            // (q^{c0} K ⊗ K − q^{-c0} K⁻¹ ⊗ K⁻¹)/(q − q⁻¹)
            let inv = RatFunc::q_minus_qinv().inv()?;
            let neg: Vec<i32> = c.iter().map(|x| -x).collect();
            let a = &RatFunc::q_pow(*c0) * &inv;
            let b = -(&RatFunc::q_pow(-*c0) * &inv);
            tw(alloc::vec![
                (GenWord::qpow(n, c.clone()).scale(&a), GenWord::qpow(n, c.clone())),
                (GenWord::qpow(n, neg.clone()).scale(&b), GenWord::qpow(n, neg)),
            ])
        }
        Symbol::Xi => return Err(Error::XiNotAllowed),
    })
}

/// Coproduct extended multiplicatively with a custom rule per symbol.
pub fn coproduct_with<F>(x: &GenWord, mut rule: F) -> Result<TensorWord>
where
    F: FnMut(&Symbol) -> Result<TensorWord>,
{
    let n = x.n;
    let mut out = TensorWord { n, terms: Vec::new() };
    for (w, c) in &x.terms {
        let mut acc = TensorWord {
            n,
            terms: alloc::vec![(GenWord::scalar(n, c.clone()), GenWord::one(n))],
        };
        for s in w {
            acc = acc.mul(&rule(s)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Coproduct of a ξ-free word.
pub fn coproduct(x: &GenWord) -> Result<TensorWord> {
    let n = x.n;
    coproduct_with(x, |s| symbol_coproduct(n, s))
}

/// Antipode of a single ξ-free symbol.
pub fn symbol_antipode(n: usize, s: &Symbol) -> Result<GenWord> {
    let rd = RootData::new(n);
    Ok(match s {
        Symbol::QPow(c) => GenWord::qpow(n, c.iter().map(|x| -x).collect()),
        Symbol::Root(i, j) if *j == i + 1 => GenWord::qpow(n, rd.h(*i))
            .mul(&GenWord::e(n, *i, *j))
            .scale(&RatFunc::from_int(-1)),
        Symbol::Root(i, j) if *i == j + 1 => {
            let h: Vec<i32> = rd.h(*j).iter().map(|x| -x).collect();
            GenWord::e(n, *i, *j)
                .mul(&GenWord::qpow(n, h))
                .scale(&RatFunc::from_int(-1))
        }
        Symbol::Root(i, j) => antipode_image(&root_vector(n, *i, *j)?)?,
        Symbol::QBracket(c, c0) => GenWord::qbracket(n, c.iter().map(|x| -x).collect(), *c0),
        Symbol::Xi => return Err(Error::XiNotAllowed),
    })
}

/// Antipode extended anti-multiplicatively with a custom rule per symbol.
pub fn antipode_with<F>(x: &GenWord, mut rule: F) -> Result<GenWord>
where
    F: FnMut(&Symbol) -> Result<GenWord>,
{
    let n = x.n;
    let mut out = GenWord::zero(n);
    for (w, c) in &x.terms {
        let mut acc = GenWord::scalar(n, c.clone());
        for s in w.iter().rev() {
            acc = acc.mul(&rule(s)?);
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Antipode of a ξ-free word.
pub fn antipode_image(x: &GenWord) -> Result<GenWord> {
    let n = x.n;
    antipode_with(x, |s| symbol_antipode(n, s))
}

/// Counit; ξ and all root vectors map to zero.
pub fn counit(x: &GenWord) -> RatFunc {
    let mut out = RatFunc::zero();
    for (w, c) in &x.terms {
        let mut v = c.clone();
        for s in w {
            match s {
                Symbol::QPow(_) => {}
                Symbol::Root(..) | Symbol::Xi => {
                    v = RatFunc::zero();
                    break;
                }
                Symbol::QBracket(_, c0) => v = &v * &qnum_rf(*c0 as i64),
            }
        }
        out = &out + &v;
    }
    out
}

/// The Chevalley generators `q^{±e_ii}`, `e_i`, `f_i` as words.
pub fn chevalley_generators(n: usize) -> Vec<(String, GenWord)> {
    let rd = RootData::new(n);
    let mut out = Vec::new();
    for i in 1..=n + 1 {
        out.push((format!("q^e{i}{i}"), GenWord::qpow(n, rd.e_diag(i))));
        out.push((
            format!("q^-e{i}{i}"),
            GenWord::qpow(n, rd.e_diag(i).iter().map(|x| -x).collect()),
        ));
    }
    for i in 1..=n {
        out.push((format!("e{}{}", i, i + 1), GenWord::e(n, i, i + 1)));
        out.push((format!("e{}{}", i + 1, i), GenWord::e(n, i + 1, i)));
    }
    out
}

/// The defining relations of U_q(sl(n+1)) as exact matrix identities on
/// the given representation.
pub fn verify_uq_on(rep: &ChevalleyRep, context: &str) -> VerificationReport {
    let n = rep.n;
    let id = rep.identity();
    let mut out = VerificationReport::new(format!("U_q(sl({})) on {context}", n + 1));
    let d = n + 1;

    let mut res = Vec::new();
    for i in 0..d {
        res.push(&(&rep.k_pos[i] * &rep.k_neg[i]) - &id);
        res.push(&(&rep.k_neg[i] * &rep.k_pos[i]) - &id);
    }
    out.push(RelationCheck::from_residuals("cartan-inverse", context, res));

    let mut res = Vec::new();
    let ks: Vec<&Matrix> = rep.k_pos.iter().chain(&rep.k_neg).collect();
    for a in 0..ks.len() {
        for b in a + 1..ks.len() {
            res.push(ks[a].commutator(ks[b]));
        }
    }
    out.push(RelationCheck::from_residuals("cartan-commute", context, res));

    // q^{e_jj} e_i q^{-e_jj} = q^{(ε_j, α_i)} e_i and the mirror for f_i
    let mut res = Vec::new();
    for j in 1..=d {
        for i in 1..=n {
            let p = i32::from(j == i) - i32::from(j == i + 1);
            let (kp, kn) = (&rep.k_pos[j - 1], &rep.k_neg[j - 1]);
            let e = &rep.e[i - 1];
            let f = &rep.f[i - 1];
            res.push(&(&(kp * e) * kn) - &e.scale(&RatFunc::q_pow(p)));
            res.push(&(&(kp * f) * kn) - &f.scale(&RatFunc::q_pow(-p)));
        }
    }
    out.push(RelationCheck::from_residuals("weight", context, res));

    // [e_i, f_j] = δ_ij (q^{h_i} − q^{-h_i})/(q − q⁻¹)
    let mut res = Vec::new();
    let inv = RatFunc::q_minus_qinv().inv().expect("non-zero");
    for i in 1..=n {
        for j in 1..=n {
            let lhs = rep.e[i - 1].commutator(&rep.f[j - 1]);
            let rhs = if i == j {
                (&rep.qh(i, 1) - &rep.qh(i, -1)).scale(&inv)
            } else {
                Matrix::zeros(id.rows(), id.cols())
            };
            res.push(&lhs - &rhs);
        }
    }
    out.push(RelationCheck::from_residuals("e-f-bracket", context, res));

    let mut res = Vec::new();
    for i in 1..=n {
        for j in i + 2..=n {
            res.push(rep.e[i - 1].commutator(&rep.e[j - 1]));
            res.push(rep.f[i - 1].commutator(&rep.f[j - 1]));
        }
    }
    out.push(RelationCheck::from_residuals("serre-distant", context, res));

    // x_i² x_j − [2]_q x_i x_j x_i + x_j x_i² = 0 for |i − j| = 1
    let mut res = Vec::new();
    let two = qnum_rf(2);
    let serre = |a: &Matrix, b: &Matrix| {
        let aa = a * a;
        &(&(&aa * b) - &(&(a * b) * a).scale(&two)) + &(b * &aa)
    };
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) == 1 {
                res.push(serre(&rep.e[i - 1], &rep.e[j - 1]));
                res.push(serre(&rep.f[i - 1], &rep.f[j - 1]));
            }
        }
    }
    out.push(RelationCheck::from_residuals("q-serre", context, res));
    out
}

/// The defining relations on `V` and on `V ⊗ V`.
pub fn verify_uq(n: usize) -> Result<VerificationReport> {
    if !(1..=4).contains(&n) {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..=4")));
    }
    let v = natural_rep(n)?;
    let mut out = VerificationReport::new(format!("U_q(sl({})) relations", n + 1));
    out.extend(verify_uq_on(&v, "natural"));
    out.extend(verify_uq_on(&tensor(&v, &v)?, "coproduct2"));
    Ok(out)
}

/// Coassociativity, antipode and counit axioms on the Chevalley generators,
/// plus agreement of the iterated and explicit l-fold coproducts.
pub fn verify_hopf(n: usize) -> Result<VerificationReport> {
    let v = natural_rep(n)?;
    let vv = tensor(&v, &v)?;
    let left = tensor(&vv, &v)?;
    let right = tensor(&v, &vv)?;
    let explicit = tensor_power(n, 3)?;
    let mut out = VerificationReport::new(format!("U_q(sl({})) Hopf structure", n + 1));

    let mut res = Vec::new();
    let pairs = [
        (&left.e, &right.e),
        (&left.f, &right.f),
        (&left.k_pos, &right.k_pos),
        (&left.k_neg, &right.k_neg),
        (&left.e, &explicit.e),
        (&left.f, &explicit.f),
    ];
    for (a, b) in pairs {
        for (x, y) in a.iter().zip(b.iter()) {
            res.push(x - y);
        }
    }
    out.push(RelationCheck::from_residuals("coassociativity", "triple coproduct", res));

    let mut anti = Vec::new();
    let mut unit = Vec::new();
    for (_, x) in chevalley_generators(n) {
        let d = coproduct(&x)?;
        let eps = counit(&x);
        let target = v.identity().scale(&eps);
        let sl = d.contract(antipode_image, |b| Ok(b.clone()))?;
        let sr = d.contract(|a| Ok(a.clone()), antipode_image)?;
        anti.push(&v.eval(&sl, None)? - &target);
        anti.push(&v.eval(&sr, None)? - &target);
        let el = d.terms.iter().fold(GenWord::zero(n), |acc, (a, b)| acc.add(&b.scale(&counit(a))));
        let er = d.terms.iter().fold(GenWord::zero(n), |acc, (a, b)| acc.add(&a.scale(&counit(b))));
        let xm = v.eval(&x, None)?;
        unit.push(&v.eval(&el, None)? - &xm);
        unit.push(&v.eval(&er, None)? - &xm);
    }
    out.push(RelationCheck::from_residuals("antipode", "m(S x id)D = m(id x S)D = e", anti));
    out.push(RelationCheck::from_residuals("counit", "(e x id)D = (id x e)D = id", unit));
    Ok(out)
}

/// Dimension of the kernel of `m − c·I`.
pub fn eigenspace_dim(m: &Matrix, c: &RatFunc) -> usize {
    let shifted = m - &Matrix::identity(m.rows()).scale(c);
    m.rows() - shifted.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_e12_n1() {
        let v = natural_rep(1).unwrap();
        assert_eq!(v.e[0], Matrix::unit(2, 0, 1));
        assert_eq!(v.k_pos[0], Matrix::diag(alloc::vec![RatFunc::q(), RatFunc::one()]));
    }

    #[test]
    fn commutator_on_weight_basis() {
        let v = natural_rep(2).unwrap();
        let c = v.e[0].commutator(&v.f[0]);
        let expected = Matrix::diag(alloc::vec![RatFunc::one(), RatFunc::from_int(-1), RatFunc::zero()]);
        assert_eq!(c, expected);
    }

    #[test]
    fn composite_roots_are_matrix_units() {
        let v = natural_rep(2).unwrap();
        assert_eq!(v.root(1, 3).unwrap(), Matrix::unit(3, 0, 2));
        assert_eq!(v.root(3, 1).unwrap(), Matrix::unit(3, 2, 0));
        let w = natural_rep(3).unwrap();
        assert_eq!(w.root_split(1, 4, 2).unwrap(), w.root_split(1, 4, 3).unwrap());
    }

    #[test]
    fn weights_of_natural_rep() {
        let v = natural_rep(2).unwrap();
        let w = v.weights().unwrap();
        assert_eq!(w, alloc::vec![alloc::vec![1, 0, 0], alloc::vec![0, 1, 0], alloc::vec![0, 0, 1]]);
    }

    #[test]
    fn t_quadratic_relation() {
        for n in 1..=3 {
            let t = t_operator(n).unwrap().matrix;
            let id = Matrix::identity(t.rows());
            let lhs = &t * &t;
            let rhs = &t.scale(&RatFunc::q_minus_qinv()) + &id;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn position_out_of_range() {
        assert!(matches!(
            sigma_on_tensor(1, 3, 3),
            Err(Error::PositionOutOfRange { .. })
        ));
        assert!(matches!(root_vector(2, 1, 1), Err(Error::IndexOutOfRange { .. })));
    }
}
