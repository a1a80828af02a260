//! Exact scalars: Laurent polynomials in q and polynomials in η, u, a over ℚ,
//! and their field of fractions.

mod poly;
mod ratfunc;
mod upoly;

pub use poly::{Bindings, Exponent, LaurentPoly, Var};
pub use ratfunc::RatFunc;

use num_rational::BigRational;
use num_traits::One;

/// The q-number `[m]_q = q^{m-1} + q^{m-3} + … + q^{1-m}`, with
/// `[-m]_q = -[m]_q`.
pub fn qnum(m: i64) -> LaurentPoly {
    let k = m.unsigned_abs() as i32;
    let sign = if m < 0 {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    LaurentPoly::from_terms((0..k).map(|j| (Exponent::of(Var::Q, k - 1 - 2 * j), sign.clone())))
}

/// `[m]_q` as a rational function.
pub fn qnum_rf(m: i64) -> RatFunc {
    RatFunc::from_poly(qnum(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qnum_small_values() {
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        assert_eq!(qnum(2), &LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1));
        assert_eq!(qnum(-2), -qnum(2));
    }

    #[test]
    fn qnum_matches_quotient_definition() {
        for m in -6i64..=6 {
            let lhs = &RatFunc::from_poly(qnum(m)) * &RatFunc::q_minus_qinv();
            let rhs = RatFunc::from_poly(&LaurentPoly::q_pow(m as i32) - &LaurentPoly::q_pow(-m as i32));
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }

    #[test]
    fn qnum_at_one_is_integer() {
        let b = Bindings::new().with_int(Var::Q, 1);
        for m in -20i64..=20 {
            let v = RatFunc::from_poly(qnum(m)).specialize(&b).unwrap();
            assert_eq!(v, RatFunc::from_int(m));
        }
    }
}
