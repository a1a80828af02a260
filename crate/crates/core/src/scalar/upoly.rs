//! Dense univariate arithmetic in q over ℚ, used to cancel common factors
//! of rational functions whose denominator (or numerator) involves only q.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Exponent, LaurentPoly, Var};

/// Dense coefficients, ascending powers, no trailing zeros.
type Dense = Vec<BigRational>;

fn trim(mut a: Dense) -> Dense {
    while matches!(a.last(), Some(c) if c.is_zero()) {
        a.pop();
    }
    a
}

/// Splits a q-only Laurent polynomial into `q^shift * dense(q)` with
/// `dense(0) != 0`.
fn to_dense(p: &LaurentPoly) -> (i32, Dense) {
    let lo = p.min_exponent(Var::Q).unwrap_or(0);
    let hi = p.max_exponent(Var::Q).unwrap_or(0);
    let mut v = alloc::vec![BigRational::zero(); (hi - lo + 1) as usize];
    for (e, c) in p.terms() {
        v[(e.get(Var::Q) - lo) as usize] = c.clone();
    }
    (lo, trim(v))
}

fn from_dense(shift: i32, a: &[BigRational]) -> LaurentPoly {
    LaurentPoly::from_terms(
        a.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Exponent::of(Var::Q, shift + k as i32), c.clone())),
    )
}

fn divrem(a: &[BigRational], b: &[BigRational]) -> (Dense, Dense) {
    let mut rem: Dense = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (Vec::new(), trim(rem));
    }
    let mut quot = alloc::vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

fn monic(a: Dense) -> Dense {
    match a.last() {
        Some(l) if !l.is_one() => {
            let inv = l.recip();
            a.into_iter().map(|c| c * &inv).collect()
        }
        _ => a,
    }
}

fn gcd_dense(a: Dense, b: Dense) -> Dense {
    let (mut x, mut y) = (trim(a), trim(b));
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(x)
}

/// Monic gcd (up to a power of q) of q-only Laurent polynomials.
/// Returns `None` when the gcd is a unit.
pub(crate) fn gcd_q(polys: &[&LaurentPoly]) -> Option<LaurentPoly> {
    let mut g: Option<Dense> = None;
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let (_, d) = to_dense(p);
        let next = match g.take() {
            None => monic(d),
            Some(prev) => gcd_dense(prev, d),
        };
        if next.len() <= 1 {
            return None;
        }
        g = Some(next);
    }
    g.filter(|d| d.len() > 1).map(|d| from_dense(0, &d))
}

/// Exact division of a q-only polynomial by a q-only divisor.
pub(crate) fn div_q(p: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    let (sp, a) = to_dense(p);
    let (sd, b) = to_dense(d);
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(LaurentPoly::zero());
    }
    let (quo, rem) = divrem(&a, &b);
    if !rem.is_empty() {
        return None;
    }
    Some(from_dense(sp - sd, &quo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_q_numbers() {
        // q^4 - 1 and q^2 - 1 share q^2 - 1.
        let a = &LaurentPoly::q_pow(4) - &LaurentPoly::one();
        let b = &LaurentPoly::q_pow(2) - &LaurentPoly::one();
        let g = gcd_q(&[&a, &b]).unwrap();
        assert_eq!(g, b);
        assert_eq!(div_q(&a, &g).unwrap(), &LaurentPoly::q_pow(2) + &LaurentPoly::one());
    }

    #[test]
    fn coprime_gives_none() {
        let a = &LaurentPoly::q_pow(1) - &LaurentPoly::one();
        let b = &LaurentPoly::q_pow(1) + &LaurentPoly::one();
        assert!(gcd_q(&[&a, &b]).is_none());
    }
}
