//! Acceptance gate. Runs every criterion, prints one line each, and exits
//! nonzero if any fails or overruns its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use jackpos::arith::{cone_member, rat, Extended, RatFun, TauPoly};
use jackpos::interp::{binomial, interp_linear, interp_tableau, monotonicity_check, positivity_check, Normalization};
use jackpos::partitions::{enumerate, Partition};
use jackpos::positivity::{
    default_grid, difference_expansion, is_jack_positive, normalized_difference_symbolic, numeric_eval_check,
    shifted_expansion, verify_conj_cgs, verify_conj_kt, verify_thm1, GridDomain, Kind, TauValue,
    DEFAULT_GRID_VALUES,
};
use jackpos::symfunc::mpoly::MPoly;
use jackpos::symfunc::{jack, jack_tableau, schur, Basis, SymPoly};
use jackpos::{part, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn rf(num: &[i64], den: &[i64]) -> RatFun {
    RatFun::new(TauPoly::from_ints(num), TauPoly::from_ints(den)).unwrap()
}

fn x(i: usize) -> MPoly {
    MPoly::var(2, i)
}

fn c(f: RatFun) -> MPoly {
    MPoly::constant(2, f)
}

fn interp_golden() -> Outcome {
    // x1 x2 (x1 - 1)(x2 - 1)(x1 + x2 - t - 4)
    let one = c(RatFun::one());
    let last = x(0).add(&x(1)).sub(&c(rf(&[4, 1], &[1])));
    let expected = x(0)
        .mul(&x(1))
        .mul(&x(0).sub(&one))
        .mul(&x(1).sub(&one))
        .mul(&last);
    let expected = SymPoly::from_mpoly(&expected);
    let mu = part![3, 2];
    let linear = interp_linear(&mu, 2, Normalization::Monic).map_err(e)?.poly;
    let tableau = interp_tableau(&mu, 2).map_err(e)?.poly;
    ensure(linear == expected, || format!("linear solve gives {linear}"))?;
    ensure(tableau == expected, || format!("tableau sum gives {tableau}"))?;
    Ok("both constructions equal the factored form".into())
}

fn expansion_golden() -> Outcome {
    let diff = difference_expansion(&part![3, 1], &part![2], 2).map_err(e)?;
    let expected = [
        (part![3, 1], rf(&[1], &[1]), rat(1, 1)),
        (part![3], rf(&[2, 2], &[2, 1]), rat(4, 3)),
        (part![2, 1], rf(&[6, 2], &[2, 1]), rat(8, 3)),
        (part![2], rf(&[2, 4], &[1, 1]), rat(3, 1)),
        (part![1, 1], rf(&[3, 1], &[1, 1]), rat(2, 1)),
        (part![1], rf(&[2], &[1]), rat(2, 1)),
    ];
    ensure(diff.len() == expected.len(), || format!("{} nonzero coefficients", diff.len()))?;
    for (nu, f, at_one) in expected {
        let got = diff.get(&nu).cloned().unwrap_or_else(RatFun::zero);
        ensure(got == f, || format!("coefficient at {nu} is {got}, expected {f}"))?;
        let v = got.eval_at(&rat(1, 1)).map_err(e)?;
        ensure(v == at_one, || format!("coefficient at {nu} is {v} at t=1"))?;
        ensure(cone_member(&got).certificate().is_some(), || format!("no certificate at {nu}"))?;
    }
    Ok("six coefficients and their t=1 values match".into())
}

fn section4_golden() -> Outcome {
    let (l, m) = (part![4], part![3, 1]);
    let sq = x(0).sub(&x(1)).mul(&x(0).sub(&x(1)));
    let schur_expected = sq
        .mul(&x(0).mul(&x(0)).scale(&RatFun::from_int(3)).add(&x(0).mul(&x(1)).scale(&RatFun::from_int(4))).add(&x(1).mul(&x(1)).scale(&RatFun::from_int(3))))
        .scale(&RatFun::from_rational(rat(1, 15)));
    let got = normalized_difference_symbolic(Kind::Schur, &l, &m, 2).map_err(e)?;
    ensure(got == SymPoly::from_mpoly(&schur_expected), || format!("Schur difference {got}"))?;

    // (t+3)/(4(2t+1)(2t+3)) (x1-x2)^2 (t (x1+x2)^2 + 2(x1^2 + x1 x2 + x2^2))
    let s = x(0).add(&x(1));
    let q = x(0).mul(&x(0)).add(&x(0).mul(&x(1))).add(&x(1).mul(&x(1)));
    let inner = s.mul(&s).scale(&RatFun::t()).add(&q.scale(&RatFun::from_int(2)));
    let front = rf(&[3, 1], &[12, 32, 16]);
    let jack_expected = sq.mul(&inner).scale(&front);
    let got = normalized_difference_symbolic(Kind::Jack, &l, &m, 2).map_err(e)?;
    ensure(got == SymPoly::from_mpoly(&jack_expected), || format!("Jack difference {got}"))?;
    Ok("Schur and Jack differences equal the factored forms".into())
}

fn binomial_formula() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for lambda in enumerate(5, n) {
            let exp = shifted_expansion(&lambda, n).map_err(e)?;
            for nu in enumerate(5, n) {
                let direct = exp.coeffs.get(&nu).cloned().unwrap_or_else(RatFun::zero);
                let interp = binomial(&lambda, &nu, n).map_err(e)?;
                ensure(direct == interp, || format!("n={n} {lambda},{nu}: {direct} vs {interp}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} coefficients agree across both pipelines"))
}

fn monotonicity() -> Outcome {
    let r = monotonicity_check(6, 3).map_err(e)?;
    ensure(r.pass, || format!("{} counterexamples, first: {:?}", r.counterexamples.len(), r.counterexamples.first()))?;
    let (pos, cert) = (r.stat("positive"), r.stat("certified"));
    ensure(pos > 0 && cert * 100 >= pos * 95, || format!("certificates on {cert}/{pos} nonzero differences"))?;
    Ok(format!(
        "{} differences: {} zero, {pos} positive, {cert} certified",
        r.stat("differences"),
        r.stat("zero")
    ))
}

fn extra_and_positivity() -> Outcome {
    let mut pairs = 0;
    for n in 1..=3 {
        let r = positivity_check(6, n).map_err(e)?;
        ensure(r.pass, || format!("n={n}: {:?}", r.counterexamples.first()))?;
        pairs += r.stat("pairs");
    }
    for lambda in [part![6], part![5, 1]] {
        let b = binomial(&lambda, &part![3, 2], 2).map_err(e)?;
        ensure(b.is_zero(), || format!("binom({lambda},(3,2)) = {b}"))?;
    }
    Ok(format!("{pairs} pairs decided as containment predicts"))
}

fn containment_equivalence() -> Outcome {
    let r = verify_thm1(5, 3).map_err(e)?;
    ensure(r.pass, || format!("{:?}", r.counterexamples.first()))?;
    // explicit negative coefficient for every non-containing pair
    let parts = enumerate(5, 3);
    let mut exhibited = 0;
    for l in &parts {
        for m in parts.iter().filter(|m| !l.contains(m)) {
            let d = difference_expansion(l, m, 3).map_err(e)?;
            ensure(!is_jack_positive(&d), || format!("{l} vs {m} is positive"))?;
            let c = d.get(m).cloned().unwrap_or_else(RatFun::zero);
            ensure(c == RatFun::from_int(-1), || format!("{l} vs {m}: coefficient at {m} is {c}"))?;
            exhibited += 1;
        }
    }
    Ok(format!("{} pairs, {exhibited} non-containing pairs with coefficient -1", r.stat("pairs")))
}

fn specialization_chain() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for lambda in enumerate(5, n) {
            let p = jack(&lambda, n).map_err(e)?;
            let s = schur(&lambda, n).map_err(e)?.specialize(&rat(0, 1)).map_err(e)?;
            let at1 = p.specialize(&rat(1, 1)).map_err(e)?;
            ensure(strip(at1) == strip(s), || format!("t=1: {lambda}, n={n}"))?;
            let at0 = strip(p.specialize(&rat(0, 1)).map_err(e)?);
            ensure(at0 == [(lambda.clone(), rat(1, 1))].into(), || format!("t=0: {lambda}, n={n}"))?;
            let el = SymPoly::from_terms(n, Basis::Elementary, [(lambda.conjugate(), RatFun::one())])
                .to_monomial()
                .specialize(&rat(0, 1))
                .map_err(e)?;
            let mut limits = std::collections::BTreeMap::new();
            for (k, c) in p.coeffs() {
                match c.limit_at_infinity() {
                    Extended::Finite(v) => {
                        limits.insert(k.clone(), v);
                    }
                    other => return Err(format!("{lambda}: coefficient at {k} tends to {other:?}")),
                }
            }
            ensure(strip(limits) == strip(el), || format!("t=inf: {lambda}, n={n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (shape, n) cases"))
}

fn strip(m: std::collections::BTreeMap<Partition, Rational>) -> std::collections::BTreeMap<Partition, Rational> {
    m.into_iter().filter(|(_, v)| *v != rat(0, 1)).collect()
}

fn construction_equality() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for lambda in enumerate(6, n) {
            let gs = jack(&lambda, n).map_err(e)?;
            let tab = jack_tableau(&lambda, n).map_err(e)?;
            ensure(gs == tab, || format!("Jack {lambda}, n={n}"))?;
            let lin = interp_linear(&lambda, n, Normalization::Monic).map_err(e)?.poly;
            let tab = interp_tableau(&lambda, n).map_err(e)?.poly;
            ensure(lin == tab, || format!("interpolation {lambda}, n={n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (shape, n) cases"))
}

fn jack_inequality_probes() -> Outcome {
    let taus: Vec<TauValue> = ["0", "1/2", "1", "2", "inf"].iter().map(|s| s.parse().unwrap()).collect();
    let values: Vec<Rational> = DEFAULT_GRID_VALUES.iter().map(|s| jackpos::arith::text::parse_rational(s).unwrap()).collect();
    ensure(default_grid(2, GridDomain::NonNegative).len() >= 200, || "grid too small".into())?;
    let mut summary = Vec::new();
    for r in [
        verify_conj_cgs(4, 2, &taus, &values).map_err(e)?,
        verify_conj_kt(4, 2, &taus, &values).map_err(e)?,
    ] {
        ensure(r.pass, || format!("{}: {:?}", r.claim, r.counterexamples.first()))?;
        ensure(r.notes.iter().any(|n| n.contains("sampling probe")), || "report not labeled".into())?;
        summary.push(format!("{} {} pair-taus/{} points", r.claim, r.stat("pairs"), r.stat("points")));
    }
    // the Jack instance of the dominance example at each finite tau
    let grid = default_grid(2, GridDomain::NonNegative);
    for tau in &taus {
        let r = numeric_eval_check(Kind::Jack, &part![4], &part![3, 1], 2, tau, &grid).map_err(e)?;
        ensure(r.pass, || format!("(4) vs (3,1) at t={tau}"))?;
    }
    Ok(format!("no counterexample found (sampling probe): {}", summary.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("interpolation worked example", 1, interp_golden),
        ("binomial expansion worked example", 5, expansion_golden),
        ("dominance example differences", 5, section4_golden),
        ("binomial formula cross-check", 120, binomial_formula),
        ("monotonicity of binomial coefficients", 600, monotonicity),
        ("extra vanishing and positivity", 600, extra_and_positivity),
        ("containment equivalence", 600, containment_equivalence),
        ("specialization chain", 120, specialization_chain),
        ("construction equality", 600, construction_equality),
        ("Jack inequality probes", 600, jack_inequality_probes),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(msg), false) => ("PASS", msg.clone()),
            (Ok(msg), true) => ("FAIL", format!("over {limit}s limit; {msg}")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("[{status}] {:>2}. {name} ({:.2}s): {detail}", i + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {}/{} passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
