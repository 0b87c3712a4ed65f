use jackpos::arith::{rat, RatFun};
use jackpos::partitions::{enumerate, Partition};
use jackpos::part;
use jackpos::symfunc::{hall_inner_tau, jack, principal_spec_jack, schur, Basis, SymPoly};
use proptest::prelude::*;

#[test]
fn jack_is_unitriangular_over_dominance() {
    for n in 1..=3 {
        for lambda in enumerate(6, n) {
            let p = jack(&lambda, n).unwrap();
            assert_eq!(p.coeff(&lambda), RatFun::one());
            for k in p.coeffs().keys() {
                assert!(lambda.dominates(k), "P{lambda} has m{k}");
            }
            assert!(p.to_mpoly().is_symmetric());
        }
    }
}

#[test]
fn jack_is_orthogonal_for_the_deformed_product() {
    for k in 1..=4 {
        let parts = Partition::of_size(k, k);
        for a in &parts {
            for b in &parts {
                let ip = hall_inner_tau(&jack(a, k).unwrap(), &jack(b, k).unwrap()).unwrap();
                assert_eq!(ip.is_zero(), a != b, "<P{a}, P{b}>");
            }
        }
    }
}

#[test]
fn principal_specialization_matches_evaluation() {
    for n in 1..=3 {
        for lambda in enumerate(5, n) {
            let ones = vec![RatFun::one(); n];
            let direct = jack(&lambda, n).unwrap().evaluate(&ones).unwrap();
            assert_eq!(principal_spec_jack(&lambda, n).unwrap(), direct, "{lambda}, n={n}");
        }
    }
}

#[test]
fn truncation_is_consistent_with_fewer_variables() {
    // setting x_3 = 0 in three variables gives the two-variable polynomial
    for lambda in enumerate(5, 2) {
        let three = jack(&lambda, 3).unwrap();
        let two = jack(&lambda, 2).unwrap();
        let restricted: Vec<_> = three
            .coeffs()
            .iter()
            .filter(|(k, _)| k.len() <= 2)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        assert_eq!(SymPoly::from_terms(2, Basis::Monomial, restricted), two);
    }
}

#[test]
fn basis_changes_round_trip() {
    let n = 3;
    for lambda in enumerate(3, n) {
        let f = schur(&lambda, n).unwrap().add(&jack(&lambda, n).unwrap().scale(&RatFun::t()));
        for basis in [Basis::Elementary, Basis::Powersum, Basis::Schur, Basis::Jack] {
            let g = f.convert(basis).unwrap();
            assert_eq!(g.basis(), basis);
            assert_eq!(g.to_monomial(), f, "{lambda} via {basis}");
        }
    }
}

proptest! {
    #[test]
    fn evaluation_is_multiplicative(
        a in prop::sample::select(enumerate(3, 2)),
        b in prop::sample::select(enumerate(3, 2)),
        x in prop::collection::vec((-5i64..=5, 1i64..=3), 2),
    ) {
        let f = jack(&a, 2).unwrap();
        let g = schur(&b, 2).unwrap();
        let point: Vec<RatFun> = x.iter().map(|&(p, q)| RatFun::from_rational(rat(p, q))).collect();
        let lhs = f.mul(&g).evaluate(&point).unwrap();
        let rhs = &f.evaluate(&point).unwrap() * &g.evaluate(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_matches_evaluation_at_shifted_point(
        a in prop::sample::select(enumerate(4, 2)),
        x in prop::collection::vec((-5i64..=5, 1i64..=3), 2),
    ) {
        let f = jack(&a, 2).unwrap();
        let point: Vec<RatFun> = x.iter().map(|&(p, q)| RatFun::from_rational(rat(p, q))).collect();
        let shifted: Vec<RatFun> = point.iter().map(|v| v + &RatFun::one()).collect();
        prop_assert_eq!(f.shift_vars().evaluate(&point).unwrap(), f.evaluate(&shifted).unwrap());
    }

    #[test]
    fn json_round_trip(a in prop::sample::select(enumerate(5, 3))) {
        let f = jack(&a, 3).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let back: SymPoly = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn two_variable_examples() {
    // in two variables m(3,2) is the only term of P(3,2)
    assert_eq!(jack(&part![3, 2], 2).unwrap().coeffs().len(), 1);
}
