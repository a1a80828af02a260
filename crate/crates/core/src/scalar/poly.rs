use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The closed set of variables. `Q` may carry negative exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Q = 0,
    Eta = 1,
    U = 2,
    A = 3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::Eta, Var::U, Var::A];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::Eta => "eta",
            Var::U => "u",
            Var::A => "a",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }

    #[inline]
    pub(crate) fn idx(self) -> usize {
        self as usize
    }
}

/// Exponent vector over (q, η, u, a). The derived `Ord` is the fixed
/// lexicographic monomial order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(pub [i32; 4]);

impl Exponent {
    pub const ONE: Exponent = Exponent([0; 4]);

    pub fn of(var: Var, e: i32) -> Exponent {
        let mut x = [0; 4];
        x[var.idx()] = e;
        Exponent(x)
    }

    #[inline]
    pub fn get(&self, var: Var) -> i32 {
        self.0[var.idx()]
    }

    #[inline]
    pub fn add(&self, o: &Exponent) -> Exponent {
        let mut r = self.0;
        for (a, b) in r.iter_mut().zip(o.0.iter()) {
            *a += b;
        }
        Exponent(r)
    }

    #[inline]
    pub fn sub(&self, o: &Exponent) -> Exponent {
        let mut r = self.0;
        for (a, b) in r.iter_mut().zip(o.0.iter()) {
            *a -= b;
        }
        Exponent(r)
    }

    /// True when only the q exponent is non-zero.
    #[inline]
    pub fn is_q_only(&self) -> bool {
        self.0[1] == 0 && self.0[2] == 0 && self.0[3] == 0
    }

    /// η, u, a part of the exponent.
    #[inline]
    pub(crate) fn rest(&self) -> [i32; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }

    /// Non-q exponents are non-negative.
    pub fn is_admissible(&self) -> bool {
        self.0[1..].iter().all(|&e| e >= 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs() as u64).sum()
    }
}

/// Partial assignment of rational values to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    values: [Option<BigRational>; 4],
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: Var, value: BigRational) -> Self {
        self.values[var.idx()] = Some(value);
        self
    }

    pub fn with_int(self, var: Var, value: i64) -> Self {
        self.with(var, BigRational::from_integer(value.into()))
    }

    pub fn set(&mut self, var: Var, value: BigRational) {
        self.values[var.idx()] = Some(value);
    }

    pub fn get(&self, var: Var) -> Option<&BigRational> {
        self.values[var.idx()].as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &BigRational)> {
        Var::ALL
            .iter()
            .filter_map(move |&v| self.get(v).map(|x| (v, x)))
    }
}

/// Multivariate Laurent polynomial in (q, η, u, a) over ℚ.
///
/// Terms are kept sorted ascending in the monomial order, with unique
/// exponents and non-zero coefficients, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Exponent, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(Exponent::ONE, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Exponent::of(v, 1), BigRational::one())
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(Exponent::of(Var::Q, e), BigRational::one())
    }

    pub fn monomial(exp: Exponent, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly {
                terms: alloc::vec![(exp, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, BigRational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            let slot = acc.entry(e).or_insert_with(BigRational::zero);
            *slot += c;
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Exponent::ONE && self.terms[0].1.is_one()
    }

    /// The constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(e, c)] if *e == Exponent::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn terms(&self) -> &[(Exponent, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term in the monomial order.
    pub fn leading(&self) -> Option<&(Exponent, BigRational)> {
        self.terms.last()
    }

    pub fn is_q_only(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_q_only())
    }

    /// Every non-q exponent is non-negative.
    pub fn is_admissible(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_admissible())
    }

    pub fn min_exponent(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(e, _)| e.get(v)).min()
    }

    pub fn max_exponent(&self, v: Var) -> Option<i32> {
        self.terms.iter().map(|(e, _)| e.get(v)).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(e, _)| e.get(v) != 0)
    }

    /// Size measure used for pivot selection: total degree span plus term count.
    pub fn weight(&self) -> u64 {
        let deg = self
            .terms
            .iter()
            .map(|(e, _)| e.total_degree())
            .max()
            .unwrap_or(0);
        deg + self.terms.len() as u64
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, exp: &Exponent) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (e.add(exp), x.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes the bound variables. Binding `q` to zero when a negative
    /// power of q is present returns `None`.
    pub fn specialize(&self, b: &Bindings) -> Option<Self> {
        if b.is_empty() {
            return Some(self.clone());
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut exp = *e;
            let mut coeff = c.clone();
            for (v, val) in b.iter() {
                let k = exp.get(v);
                if k == 0 {
                    continue;
                }
                if k < 0 && val.is_zero() {
                    return None;
                }
                coeff *= rational_pow(val, k);
                exp.0[v.idx()] = 0;
            }
            out.push((exp, coeff));
        }
        Some(Self::from_terms(out))
    }

    /// Exact quotient `self / d` when `d` divides `self` in
    /// ℚ[q, q⁻¹, η, u, a]; `None` otherwise.
    pub fn divide_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (de, dc) = &d.terms[0];
            let inv = dc.recip();
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let ne = e.sub(de);
                if !ne.is_admissible() {
                    return None;
                }
                terms.push((ne, c * &inv));
            }
            return Some(LaurentPoly { terms });
        }
        // Shift both to ordinary polynomials; q is a unit, so divisibility is
        // decided after removing the q-power content of the divisor.
        let dq = d.min_exponent(Var::Q).unwrap_or(0);
        let d0 = d.mul_monomial(&Exponent::of(Var::Q, -dq));
        let sq = self.min_exponent(Var::Q).unwrap_or(0);
        let s0 = self.mul_monomial(&Exponent::of(Var::Q, -sq));
        let (lead_e, lead_c) = d0.leading().cloned()?;
        let lead_inv = lead_c.recip();
        let mut rem = s0;
        let mut quot: Vec<(Exponent, BigRational)> = Vec::new();
        // Each step strictly lowers the leading monomial of a polynomial with
        // non-negative exponents, so this terminates.
        while let Some((re, rc)) = rem.leading().cloned() {
            let qe = re.sub(&lead_e);
            if qe.0.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = &rc * &lead_inv;
            rem = &rem - &d0.mul_monomial(&qe).scale(&qc);
            quot.push((qe, qc));
        }
        let q = LaurentPoly::from_terms(quot);
        Some(q.mul_monomial(&Exponent::of(Var::Q, sq - dq)))
    }

    /// Groups terms by their (η, u, a) part; each group is a q-only polynomial.
    pub(crate) fn q_coefficients(&self) -> BTreeMap<[i32; 3], LaurentPoly> {
        let mut groups: BTreeMap<[i32; 3], Vec<(Exponent, BigRational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            groups
                .entry(e.rest())
                .or_default()
                .push((Exponent::of(Var::Q, e.get(Var::Q)), c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, v)| (k, LaurentPoly { terms: v }))
            .collect()
    }

    /// Multiplies by a q-only polynomial, treating `self` as a polynomial in
    /// (η, u, a) with q-only coefficients.
    pub(crate) fn map_q_coefficients<F>(&self, mut f: F) -> Option<LaurentPoly>
    where
        F: FnMut(&LaurentPoly) -> Option<LaurentPoly>,
    {
        let mut out = Vec::new();
        for (rest, coeff) in self.q_coefficients() {
            let mapped = f(&coeff)?;
            let shift = Exponent([0, rest[0], rest[1], rest[2]]);
            out.extend(mapped.terms.into_iter().map(|(e, c)| (e.add(&shift), c)));
        }
        Some(LaurentPoly::from_terms(out))
    }

    /// Gcd of the integer numerators and lcm of the denominators of the
    /// coefficients: the factor that makes the polynomial primitive over ℤ.
    pub(crate) fn primitive_factor(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_integer::Integer::gcd(&num_gcd, c.numer());
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        if num_gcd.is_zero() {
            return BigRational::one();
        }
        let mut f = BigRational::new(den_lcm, num_gcd);
        if let Some((_, lc)) = self.leading() {
            if lc.is_negative() {
                f = -f;
            }
        }
        f
    }
}

pub(crate) fn rational_pow(x: &BigRational, k: i32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= x;
    }
    if k < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn merge(a: &[(Exponent, BigRational)], b: &[(Exponent, BigRational)], negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    LaurentPoly { terms: out }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &'a LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &o.terms, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &'a LaurentPoly) -> LaurentPoly {
        merge(&self.terms, &o.terms, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if o.terms.len() == 1 {
            let (e, c) = &o.terms[0];
            return LaurentPoly {
                terms: self.terms.iter().map(|(x, y)| (x.add(e), y * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return o * self;
        }
        let mut acc: BTreeMap<Exponent, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let slot = acc.entry(ea.add(eb)).or_insert_with(BigRational::zero);
                *slot += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident, $ty:ty) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, o: $ty) -> $ty {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add, LaurentPoly);
owned_binop!(Sub, sub, LaurentPoly);
owned_binop!(Mul, mul, LaurentPoly);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exponent) -> Result<bool, fmt::Error> {
    let mut wrote = false;
    for v in Var::ALL {
        let k = e.get(v);
        if k == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        if k == 1 {
            write!(f, "{}", v.name())?;
        } else {
            write!(f, "{}^{}", v.name(), k)?;
        }
        wrote = true;
    }
    Ok(wrote)
}

impl fmt::Display for LaurentPoly {
    /// Leading term first, e.g. `q^2 - 2*q*eta + 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == Exponent::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::var(Var::Q)
    }

    #[test]
    fn zero_is_empty_map() {
        let p = &q() - &q();
        assert!(p.is_zero());
        assert_eq!(p.terms().len(), 0);
    }

    #[test]
    fn exact_division_in_laurent_ring() {
        // (q^2 - q^-2) / (q - q^-1) = q + q^-1
        let num = &LaurentPoly::q_pow(2) - &LaurentPoly::q_pow(-2);
        let den = &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1);
        let quo = num.divide_exact(&den).unwrap();
        assert_eq!(quo, &LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1));
        let eta = LaurentPoly::var(Var::Eta);
        assert!(eta.divide_exact(&(&q() + &eta)).is_none());
    }

    #[test]
    fn specialize_rejects_negative_power_at_zero() {
        let p = LaurentPoly::q_pow(-1);
        let b = Bindings::new().with_int(Var::Q, 0);
        assert!(p.specialize(&b).is_none());
    }

    #[test]
    fn display_leading_first() {
        let p = &(&LaurentPoly::q_pow(2) - &LaurentPoly::var(Var::Eta)) + &LaurentPoly::from_int(3);
        assert_eq!(p.to_text(), "q^2 - eta + 3");
    }
}
