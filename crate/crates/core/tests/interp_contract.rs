use jackpos::arith::{cone_member, rat, RatFun};
use jackpos::interp::{
    binomial, extra_vanishing_check, h_normalizer, interp_linear, n_stability_check, BinomialTable, Normalization,
};
use jackpos::part;
use jackpos::partitions::enumerate;

#[test]
fn vanishing_grid_is_the_kronecker_delta() {
    for n in 1..=3 {
        for mu in enumerate(5, n) {
            let h = interp_linear(&mu, n, Normalization::Unital).unwrap();
            for lambda in enumerate(mu.size(), n) {
                let v = h.eval_shifted(&lambda).unwrap();
                let expected = if lambda == mu { RatFun::one() } else { RatFun::zero() };
                assert_eq!(v, expected, "h{mu} at {lambda}, n={n}");
            }
        }
    }
}

#[test]
fn unital_is_monic_over_positive_normalizer() {
    for n in 1..=3 {
        for mu in enumerate(5, n) {
            let unital = interp_linear(&mu, n, Normalization::Unital).unwrap().poly;
            let monic = interp_linear(&mu, n, Normalization::Monic).unwrap().poly;
            let h = h_normalizer(&mu, n).unwrap();
            assert!(cone_member(&h).is_positive(), "H{mu} = {h}");
            assert_eq!(unital.scale(&h), monic);
            assert_eq!(monic.coeff(&mu), RatFun::one());
        }
    }
}

#[test]
fn extra_vanishing_in_two_and_three_variables() {
    for n in 2..=3 {
        let r = extra_vanishing_check(5, n).unwrap();
        assert!(r.pass, "{:?}", r.counterexamples);
    }
}

#[test]
fn schur_side_coefficients_at_one() {
    // binom((3,1), ν) - binom((2), ν) at t = 1
    let expected = [
        (part![3, 1], rat(1, 1)),
        (part![3], rat(4, 3)),
        (part![2, 1], rat(8, 3)),
        (part![2], rat(3, 1)),
        (part![1, 1], rat(2, 1)),
        (part![1], rat(2, 1)),
        (part![], rat(0, 1)),
    ];
    for (nu, v) in expected {
        let d = &binomial(&part![3, 1], &nu, 2).unwrap() - &binomial(&part![2], &nu, 2).unwrap();
        assert_eq!(d.eval_at(&rat(1, 1)).unwrap(), v, "{nu}");
    }
}

#[test]
fn binomials_do_not_depend_on_the_number_of_variables() {
    // empirical: compared across every n that fits both partitions
    for lambda in enumerate(4, 2) {
        for mu in enumerate(4, 2).into_iter().filter(|m| lambda.contains(m)) {
            let r = n_stability_check(&lambda, &mu, &[2, 3, 4]).unwrap();
            assert!(r.stable, "{lambda},{mu}: {:?}", r.values);
        }
    }
}

#[test]
fn table_exports_are_deterministic_and_round_trip() {
    let a = BinomialTable::compute(4, 2).unwrap();
    let b = BinomialTable::compute(4, 2).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert!(a.to_csv().lines().any(|l| l == "(3,1),(3),2*t+2,t+2"));
    let back = BinomialTable::from_json(&a.to_json()).unwrap();
    assert_eq!(back.entries(), a.entries());
    for ((l, m), v) in a.entries() {
        assert_eq!(v.is_zero(), !l.contains(m));
    }
}
