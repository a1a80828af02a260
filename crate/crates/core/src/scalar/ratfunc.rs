use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::format;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Bindings, Exponent, LaurentPoly, Var};
use super::upoly;
use crate::error::{Error, Result};

/// Element of ℚ(q, η, u, a): a ratio of Laurent polynomials.
///
/// Normal form: `den` has q-free constant content, non-negative exponents
/// with no monomial factor shared with `num`, integer coprime coefficients
/// and a positive leading coefficient. Common factors are cancelled when
/// one side involves only q (or one side divides the other); a full
/// multivariate gcd is not attempted, so equality is decided by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn eta() -> Self {
        Self::var(Var::Eta)
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(e))
    }

    /// `q - q^{-1}`.
    pub fn q_minus_qinv() -> Self {
        Self::from_poly(&LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the denominator is 1 (a Laurent polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.is_polynomial() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    /// Pivot-selection size: smaller is cheaper to divide by.
    pub fn weight(&self) -> u64 {
        self.num.weight() + self.den.weight()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &RatFunc) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(RatFunc {
            num: base.num.pow(k.unsigned_abs()),
            den: base.den.pow(k.unsigned_abs()),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes rational values for the bound variables.
    pub fn specialize(&self, b: &Bindings) -> Result<Self> {
        if let Some(qv) = b.get(Var::Q) {
            if qv.is_zero() {
                return Err(Error::InvalidInput("q must not be bound to 0".into()));
            }
        }
        let num = self
            .num
            .specialize(b)
            .ok_or_else(|| Error::InvalidInput("q bound to 0".into()))?;
        let den = self
            .den
            .specialize(b)
            .ok_or_else(|| Error::InvalidInput("q bound to 0".into()))?;
        if den.is_zero() {
            return Err(Error::SingularSpecialization {
                detail: format!("denominator {} vanishes", self.den),
            });
        }
        Ok(normalize(num, den))
    }
}

/// Removes common monomial factors and makes `den` free of negative
/// exponents.
fn normalize_monomials(num: LaurentPoly, den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let mut shift = Exponent::ONE;
    for v in Var::ALL {
        let dmin = den.min_exponent(v).unwrap_or(0);
        shift.0[v as usize] = if v == Var::Q {
            dmin
        } else {
            dmin.min(num.min_exponent(v).unwrap_or(0))
        };
    }
    if shift == Exponent::ONE {
        return (num, den);
    }
    let neg = Exponent::ONE.sub(&shift);
    (num.mul_monomial(&neg), den.mul_monomial(&neg))
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    if let Some(c) = den.as_constant() {
        return RatFunc {
            num: if c.is_one() { num } else { num.scale(&c.recip()) },
            den: LaurentPoly::one(),
        };
    }
    let (mut num, mut den) = normalize_monomials(num, den);

    if den.is_q_only() {
        let groups = num.q_coefficients();
        let mut polys: alloc::vec::Vec<&LaurentPoly> = groups.values().collect();
        polys.push(&den);
        if let Some(g) = upoly::gcd_q(&polys) {
            if let (Some(n2), Some(d2)) = (
                num.map_q_coefficients(|c| upoly::div_q(c, &g)),
                upoly::div_q(&den, &g),
            ) {
                num = n2;
                den = d2;
            }
        }
    } else if num.is_q_only() {
        let groups = den.q_coefficients();
        let mut polys: alloc::vec::Vec<&LaurentPoly> = groups.values().collect();
        polys.push(&num);
        if let Some(g) = upoly::gcd_q(&polys) {
            if let (Some(d2), Some(n2)) = (
                den.map_q_coefficients(|c| upoly::div_q(c, &g)),
                upoly::div_q(&num, &g),
            ) {
                num = n2;
                den = d2;
            }
        }
    } else if let Some(quo) = num.divide_exact(&den) {
        num = quo;
        den = LaurentPoly::one();
    } else if let Some(quo) = den.divide_exact(&num) {
        num = LaurentPoly::one();
        den = quo;
    }

    if let Some(c) = den.as_constant() {
        return RatFunc {
            num: num.scale(&c.recip()),
            den: LaurentPoly::one(),
        };
    }
    let (num, den) = normalize_monomials(num, den);
    let f = den.primitive_factor();
    if f.is_one() {
        RatFunc { num, den }
    } else {
        RatFunc {
            num: num.scale(&f),
            den: den.scale(&f),
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &RatFunc) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Eq for RatFunc {}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &'a RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &o.num);
            }
            return normalize(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_q_only() && o.den.is_q_only() {
            if let Some(g) = upoly::gcd_q(&[&self.den, &o.den]) {
                if let (Some(a), Some(b)) = (upoly::div_q(&self.den, &g), upoly::div_q(&o.den, &g)) {
                    let num = &(&self.num * &b) + &(&o.num * &a);
                    let den = &(&a * &b) * &g;
                    return normalize(num, den);
                }
            }
        }
        normalize(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &'a RatFunc) -> RatFunc {
        if o.is_zero() {
            return self.clone();
        }
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &'a RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        if o.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return o.clone();
        }
        normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &'a RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                self.$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
