//! Membership in the cone of rational functions `u/v` with `u, v` having
//! nonnegative integer coefficients.
//!
//! A nonzero `f` lies in the cone exactly when `f(t) > 0` for every real
//! `t > 0`:
//!
//! * If `f = u/v` with `u, v` nonnegative and `u` vanished at some `r > 0`,
//!   every coefficient of `u` would have to be zero, so `f > 0` on `(0, inf)`.
//! * Conversely, write the reduced numerator and denominator as `t^k q(t)`
//!   with `q(0) != 0`. If `f > 0` on `(0, inf)` then, after fixing a common
//!   sign, each `q` is strictly positive on `[0, inf)` with positive leading
//!   coefficient. By Polya's theorem `(1 + t)^N q` has nonnegative
//!   coefficients for some `N`; multiplying numerator and denominator by
//!   the same power of `(1 + t)` and clearing denominators yields `u/v`.
//!
//! The decision uses exact Sturm sequences on the numerator and denominator
//! plus a sign evaluation at `t = 1`. The `(1 + t)^N` search is run
//! independently and reported as a certificate when it succeeds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{RatFun, Rational, TauPoly};

/// Default bound on the exponent `N` of the `(1 + t)^N` certificate search.
pub const DEFAULT_CERTIFICATE_BOUND: u32 = 64;

/// Pair `(u, v)` of integer-coefficient polynomials with nonnegative
/// coefficients and `f = u / v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub num: TauPoly,
    pub den: TauPoly,
    /// Exponent of the `(1 + t)` multiplier that was needed.
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeStatus {
    Zero,
    MemberPositive { certificate: Option<Certificate> },
    NonMember,
}

impl ConeStatus {
    /// True for `Zero` and `MemberPositive`, i.e. membership in the closed cone.
    pub fn is_member(&self) -> bool {
        !matches!(self, ConeStatus::NonMember)
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, ConeStatus::MemberPositive { .. })
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            ConeStatus::MemberPositive { certificate } => certificate.as_ref(),
            _ => None,
        }
    }
}

/// Decides cone membership and searches for a certificate with the default bound.
pub fn cone_member(f: &RatFun) -> ConeStatus {
    cone_member_with_bound(f, DEFAULT_CERTIFICATE_BOUND)
}

pub fn cone_member_with_bound(f: &RatFun, bound: u32) -> ConeStatus {
    if f.is_zero() {
        return ConeStatus::Zero;
    }
    if !positive_on_open_half_line(f) {
        return ConeStatus::NonMember;
    }
    ConeStatus::MemberPositive {
        certificate: find_certificate(f, bound),
    }
}

/// `f > 0` on `(0, inf)`, decided exactly.
pub fn positive_on_open_half_line(f: &RatFun) -> bool {
    if f.is_zero() {
        return false;
    }
    if positive_root_count(f.num()) > 0 || positive_root_count(f.den()) > 0 {
        return false;
    }
    let one = Rational::one();
    let s = f.num().eval(&one) * f.den().eval(&one);
    s.is_positive()
}

/// Searches for `N <= bound` such that numerator and denominator of `f`
/// both acquire nonnegative coefficients after multiplication by `(1+t)^N`
/// (with a common sign flip if needed). Independent of the Sturm decision.
pub fn find_certificate(f: &RatFun, bound: u32) -> Option<Certificate> {
    if f.is_zero() {
        return None;
    }
    let (mut num, mut den) = (f.num().clone(), f.den().clone());
    if num.leading().is_negative() {
        num = -&num;
        den = -&den;
    }
    let one_plus_t = TauPoly::from_ints(&[1, 1]);
    let mut factor = TauPoly::one();
    for exponent in 0..=bound {
        let u = &num * &factor;
        let v = &den * &factor;
        if u.has_nonnegative_coeffs() && v.has_nonnegative_coeffs() {
            let scale = num_integer::Integer::lcm(&u.denominator_lcm(), &v.denominator_lcm());
            let s = Rational::from_integer(scale);
            return Some(Certificate {
                num: u.scale(&s),
                den: v.scale(&s),
                exponent,
            });
        }
        factor = &factor * &one_plus_t;
    }
    None
}

/// Sturm sequence `p, p', -rem(p, p'), ...` of a nonzero polynomial.
pub fn sturm_sequence(p: &TauPoly) -> Vec<TauPoly> {
    let mut seq = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_variations<I: IntoIterator<Item = Rational>>(values: I) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None;
    for v in values {
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if last.is_some_and(|l| l != pos) {
            count += 1;
        }
        last = Some(pos);
    }
    count
}

/// Number of distinct real roots of `p` in `(0, inf)`. Zero for constants;
/// panics on the zero polynomial.
pub fn positive_root_count(p: &TauPoly) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    let p = p.shift_down(p.t_valuation());
    if p.is_constant() {
        return 0;
    }
    let square_free = p.exact_div(&p.gcd(&p.derivative()));
    let seq = sturm_sequence(&square_free);
    let at_zero = sign_variations(seq.iter().map(|s| s.coeff(0)));
    let at_inf = sign_variations(seq.iter().map(|s| s.leading()));
    at_zero - at_inf
}

/// Number of distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn root_count_in(p: &TauPoly, a: &Rational, b: &Rational) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    if p.is_constant() {
        return 0;
    }
    let square_free = p.exact_div(&p.gcd(&p.derivative()));
    let seq = sturm_sequence(&square_free);
    let va = sign_variations(seq.iter().map(|s| s.eval(a)));
    let vb = sign_variations(seq.iter().map(|s| s.eval(b)));
    va.saturating_sub(vb)
}

/// Integer coefficients of a certificate polynomial.
pub fn integer_coefficients(p: &TauPoly) -> Vec<BigInt> {
    p.integer_coeffs(&BigInt::one())
}
