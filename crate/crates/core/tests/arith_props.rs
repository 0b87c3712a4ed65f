use jackpos::arith::{
    cone_member, positive_root_count, rat, root_count_in, ConeStatus, RatFun, Rational, TauPoly,
};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn poly(max_len: usize, lo: i64, hi: i64) -> impl Strategy<Value = TauPoly> {
    prop::collection::vec(lo..=hi, 0..=max_len).prop_map(|c| TauPoly::from_ints(&c))
}

fn nonzero_poly(max_len: usize, lo: i64, hi: i64) -> impl Strategy<Value = TauPoly> {
    poly(max_len, lo, hi).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(4, -6, 6), nonzero_poly(3, -6, 6)).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

/// Ratios of nonzero polynomials with nonnegative integer coefficients.
fn cone_element() -> impl Strategy<Value = RatFun> {
    (nonzero_poly(4, 0, 5), nonzero_poly(3, 0, 5)).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(a, b)| rat(a, b))
}

fn eval_ok(f: &RatFun, t0: &Rational) -> Option<Rational> {
    f.eval_at(t0).ok()
}

proptest! {
    #[test]
    fn canonical_form_is_unique(p in poly(3, -5, 5), q in nonzero_poly(3, -5, 5), r in nonzero_poly(2, -5, 5), c in 1i64..7) {
        let direct = RatFun::new(p.clone(), q.clone()).unwrap();
        let scaled = RatFun::new((&p * &r).scale(&rat(c, 1)), (&q * &r).scale(&rat(c, 1))).unwrap();
        prop_assert_eq!(&direct, &scaled);
        prop_assert!(direct.den().leading() == rat(1, 1));
        prop_assert!(direct.num().gcd(direct.den()).is_one() || direct.num().is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in ratfun(), g in ratfun(), t0 in small_rational()) {
        if let (Some(a), Some(b)) = (eval_ok(&f, &t0), eval_ok(&g, &t0)) {
            let sum = &f + &g;
            let prod = &f * &g;
            if let Some(s) = eval_ok(&sum, &t0) {
                prop_assert_eq!(s, &a + &b);
            }
            if let Some(m) = eval_ok(&prod, &t0) {
                prop_assert_eq!(m, &a * &b);
            }
        }
    }

    #[test]
    fn text_and_json_round_trip(f in ratfun()) {
        let parsed: RatFun = f.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &f);
        let json = serde_json::to_string(&f).unwrap();
        let back: RatFun = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn cone_is_closed(f in cone_element(), g in cone_element(), c in 0i64..9) {
        prop_assert!(cone_member(&f).is_positive());
        prop_assert!(cone_member(&(&f + &g)).is_positive());
        prop_assert!(cone_member(&(&f * &g)).is_positive());
        prop_assert!(cone_member(&f.scale(&rat(c, 3))).is_member());
    }

    #[test]
    fn certificates_are_sound(f in ratfun()) {
        if let Some(cert) = cone_member(&f).certificate() {
            prop_assert!(cert.num.has_nonnegative_coeffs() && cert.den.has_nonnegative_coeffs());
            prop_assert!(cert.num.coeffs().iter().chain(cert.den.coeffs()).all(|c| c.is_integer()));
            prop_assert_eq!(RatFun::new(cert.num.clone(), cert.den.clone()).unwrap(), f);
        }
    }

    #[test]
    fn membership_is_consistent(f in ratfun()) {
        let s = cone_member(&f);
        let neg = cone_member(&-&f);
        if f.is_zero() {
            prop_assert_eq!(&s, &ConeStatus::Zero);
        } else {
            prop_assert!(!(s.is_positive() && neg.is_positive()));
        }
        if s.is_positive() {
            for t0 in [rat(1, 7), rat(1, 1), rat(3, 2), rat(40, 1)] {
                if let Some(v) = eval_ok(&f, &t0) {
                    prop_assert!(v.is_positive());
                }
            }
        }
    }

    /// Products of `(t - r)` over distinct rational roots and `(t^2 + a)`
    /// with `a > 0`: the positive root count is known by construction.
    #[test]
    fn sturm_counts_constructed_roots(
        roots in prop::collection::btree_set((-8i64..=8, 1i64..=3).prop_map(|(a, b)| (a, b)), 0..5),
        mult in prop::collection::vec(1u32..=2, 5),
        quad in prop::collection::vec(1i64..=6, 0..2),
        lead in prop::sample::select(vec![-3i64, -1, 1, 2]),
    ) {
        let mut distinct: Vec<Rational> = roots.iter().map(|&(a, b)| rat(a, b)).collect();
        distinct.sort();
        distinct.dedup();
        let mut p = TauPoly::from_int(lead);
        for (i, r) in distinct.iter().enumerate() {
            let factor = TauPoly::from_coeffs(vec![-r.clone(), rat(1, 1)]);
            p = &p * &factor.pow(mult[i]);
        }
        for a in quad {
            p = &p * &TauPoly::from_ints(&[a, 0, 1]);
        }
        let positive = distinct.iter().filter(|r| r.is_positive()).count();
        prop_assert_eq!(positive_root_count(&p), positive);
        let (lo, hi) = (rat(-1, 2), rat(2, 1));
        let inside = distinct.iter().filter(|r| **r > lo && **r <= hi).count();
        prop_assert_eq!(root_count_in(&p, &lo, &hi), inside);
    }

    /// Grid-scan oracle: a sign change between consecutive rationals in
    /// `(0, 10]` means the function is not in the cone.
    #[test]
    fn sign_changes_exclude_membership(f in ratfun()) {
        let mut prev: Option<Rational> = None;
        let mut changed = false;
        for k in 1..=200 {
            let t0 = rat(k, 20);
            if let Some(v) = eval_ok(&f, &t0) {
                if v.is_zero() {
                    continue;
                }
                if let Some(p) = &prev {
                    if p.is_positive() != v.is_positive() {
                        changed = true;
                    }
                }
                prev = Some(v);
            }
        }
        if changed || prev.as_ref().is_some_and(|v| v.is_negative()) {
            prop_assert!(!cone_member(&f).is_positive());
        }
    }
}
