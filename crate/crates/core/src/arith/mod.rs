//! Exact arithmetic over `Q` and `Q(t)`.

mod cone;
mod poly;
mod ratfun;
pub mod text;

pub use cone::{
    cone_member, cone_member_with_bound, find_certificate, positive_on_open_half_line,
    positive_root_count, root_count_in, sturm_sequence, Certificate, ConeStatus,
    DEFAULT_CERTIFICATE_BOUND, integer_coefficients,
};
pub use poly::TauPoly;
pub use ratfun::{ratfun_arith, ArithOp, Extended, RatFun};

/// Arbitrary-precision rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn eval_at(f: &RatFun, t0: &Rational) -> crate::Result<Rational> {
    f.eval_at(t0)
}

pub fn limit_at_infinity(f: &RatFun) -> Extended {
    f.limit_at_infinity()
}
