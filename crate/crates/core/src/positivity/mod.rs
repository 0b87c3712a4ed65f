//! Shifted-normalized Jack expansions and verification sweeps for the
//! containment characterizations.

mod probes;

use std::collections::BTreeMap;

use num_integer::binomial;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{cone_member, Rational, RatFun};
use crate::error::{Error, Result};
use crate::interp::BinomialTable;
use crate::partitions::{enumerate, Partition};
pub use crate::report::{Bounds, VerificationReport};
use crate::symfunc::{jack, principal_spec_jack, schur, Basis, SymPoly};

pub use probes::{
    default_grid, grid_from_values, normalized_difference_symbolic, normalized_family,
    numeric_eval_check, verify_cgs, verify_conj_cgs, verify_conj_kt, verify_cor_kt, verify_kt,
    GridDomain, Kind, TauValue, DEFAULT_GRID_VALUES,
};

/// `P_λ(x+1)/P_λ(1) = Σ_ν c_ν P_ν(x)/P_ν(1)`: the coefficients `c_ν`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedExpansion {
    pub shape: Partition,
    pub nvars: usize,
    pub coeffs: BTreeMap<Partition, RatFun>,
}

fn check_len(p: &Partition, n: usize) -> Result<()> {
    if p.len() > n {
        return Err(Error::TooLong { len: p.len(), n });
    }
    Ok(())
}

/// Direct pipeline: shift the variables of `P_λ`, expand in the Jack
/// basis by back-substitution, and renormalize by principal specializations.
pub fn shifted_expansion(lambda: &Partition, n: usize) -> Result<ShiftedExpansion> {
    check_len(lambda, n)?;
    let shifted = jack(lambda, n)?.shift_vars();
    let scale = principal_spec_jack(lambda, n)?.inv()?;
    let in_jack = shifted.scale(&scale).convert(Basis::Jack)?;
    let coeffs = in_jack
        .coeffs()
        .iter()
        .map(|(nu, c)| Ok((nu.clone(), c * &principal_spec_jack(nu, n)?)))
        .collect::<Result<_>>()?;
    Ok(ShiftedExpansion {
        shape: lambda.clone(),
        nvars: n,
        coeffs,
    })
}

/// Same expansion for Schur polynomials, built from bialternants only.
pub fn schur_shifted_expansion(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    let s = schur(lambda, n)?;
    let ones = vec![RatFun::one(); n];
    let norm = s.evaluate(&ones)?;
    let mut rem = s.shift_vars().scale(&norm.inv()?);
    let mut out = BTreeMap::new();
    while let Some((k, c)) = rem.coeffs().iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
        let sk = schur(&k, n)?;
        rem = rem.sub(&sk.scale(&c));
        let value = (&c * &sk.evaluate(&ones)?).as_constant().expect("Schur data is t-free");
        out.insert(k, value);
    }
    Ok(out)
}

fn difference_of(a: &BTreeMap<Partition, RatFun>, b: &BTreeMap<Partition, RatFun>) -> BTreeMap<Partition, RatFun> {
    let mut out = a.clone();
    for (k, c) in b {
        let v = out.get(k).cloned().unwrap_or_else(RatFun::zero) - c;
        if v.is_zero() {
            out.remove(k);
        } else {
            out.insert(k.clone(), v);
        }
    }
    out
}

/// Coefficientwise difference of the two shifted expansions (zero
/// coefficients omitted).
pub fn difference_expansion(lambda: &Partition, mu: &Partition, n: usize) -> Result<BTreeMap<Partition, RatFun>> {
    Ok(difference_of(
        &shifted_expansion(lambda, n)?.coeffs,
        &shifted_expansion(mu, n)?.coeffs,
    ))
}

/// Every coefficient lies in the closed cone.
pub fn is_jack_positive(diff: &BTreeMap<Partition, RatFun>) -> bool {
    diff.values().all(|c| cone_member(c).is_member())
}

/// Taus at which the symbolic statement is also checked numerically.
pub fn thm1_tau_samples() -> Vec<Rational> {
    ["0", "1/2", "1", "2"]
        .iter()
        .map(|s| crate::arith::text::parse_rational(s).unwrap())
        .collect()
}

fn all_shifted(d: usize, n: usize) -> Result<BTreeMap<Partition, ShiftedExpansion>> {
    let parts = enumerate(d, n);
    let v: Vec<_> = parts
        .par_iter()
        .map(|p| Ok((p.clone(), shifted_expansion(p, n)?)))
        .collect::<Result<_>>()?;
    Ok(v.into_iter().collect())
}

/// Containment ⇔ Jack positivity of the shifted difference, symbolically
/// and at each sample `t`, plus the Schur instance computed independently
/// from bialternants.
pub fn verify_thm1(d: usize, n: usize) -> Result<VerificationReport> {
    let taus = thm1_tau_samples();
    let mut bounds = Bounds::dn(d, n);
    bounds.tau = taus.iter().map(|t| t.to_string()).collect();
    let mut r = VerificationReport::builder("thm1", bounds);
    let expansions = all_shifted(d, n)?;
    let parts: Vec<&Partition> = expansions.keys().collect();
    let schur_exp: BTreeMap<&Partition, BTreeMap<Partition, Rational>> = parts
        .par_iter()
        .map(|p| Ok((*p, schur_shifted_expansion(p, n)?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();
    let pairs: Vec<(&Partition, &Partition)> = parts
        .iter()
        .flat_map(|l| parts.iter().map(move |m| (*l, *m)))
        .collect();
    let outcomes: Vec<Vec<String>> = pairs
        .par_iter()
        .map(|&(l, m)| {
            let mut bad = Vec::new();
            let diff = difference_of(&expansions[l].coeffs, &expansions[m].coeffs);
            let contained = l.contains(m);
            if is_jack_positive(&diff) != contained {
                bad.push(format!("{l} vs {m}: symbolic Jack positivity disagrees with containment {contained}"));
            }
            for t0 in &taus {
                let mut negative = None;
                for (nu, c) in &diff {
                    match c.eval_at(t0) {
                        Ok(v) if v.is_negative() => {
                            negative.get_or_insert((nu.clone(), v));
                        }
                        Ok(_) => {}
                        Err(e) => bad.push(format!("{l} vs {m}: coefficient at {nu} at t={t0}: {e}")),
                    }
                }
                match (&negative, contained) {
                    (Some((nu, v)), true) => bad.push(format!("{l} vs {m}: coefficient at {nu} is {v} at t={t0}")),
                    (None, false) => bad.push(format!("{l} vs {m}: no negative coefficient at t={t0}")),
                    _ => {}
                }
            }
            // Schur instance from bialternants must match the t = 1 specialization
            let sd = {
                let mut out = schur_exp[l].clone();
                for (k, c) in &schur_exp[m] {
                    let v = out.get(k).cloned().unwrap_or_else(Rational::zero) - c;
                    if v.is_zero() {
                        out.remove(k);
                    } else {
                        out.insert(k.clone(), v);
                    }
                }
                out
            };
            let one = Rational::from_integer(1.into());
            let at_one: BTreeMap<Partition, Rational> = diff
                .iter()
                .map(|(k, c)| (k.clone(), c.eval_at(&one).unwrap_or_else(|_| Rational::zero())))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if sd != at_one {
                bad.push(format!("{l} vs {m}: Schur expansion differs from the t=1 Jack expansion"));
            }
            if sd.values().all(|v| !v.is_negative()) != contained {
                bad.push(format!("{l} vs {m}: Schur positivity disagrees with containment {contained}"));
            }
            bad
        })
        .collect();
    for bad in outcomes {
        r.bump("pairs", 1);
        for b in bad {
            r.fail(b);
        }
    }
    Ok(r.finish())
}

/// Compares the shift-and-expand pipeline with interpolation-evaluated
/// binomial coefficients for every `λ` with `|λ| <= d`.
pub fn verify_binomial_formula(d: usize, n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::builder("binomial-formula", Bounds::dn(d, n));
    let table = BinomialTable::compute(d, n)?;
    let expansions = all_shifted(d, n)?;
    for (lambda, exp) in &expansions {
        for nu in enumerate(d, n) {
            r.bump("coefficients", 1);
            let direct = exp.coeffs.get(&nu).cloned().unwrap_or_else(RatFun::zero);
            let interp = table.get(lambda, &nu).expect("table covers the range");
            if &direct != interp {
                r.fail(format!("{lambda},{nu}: expansion gives {direct}, interpolation gives {interp}"));
            }
        }
    }
    Ok(r.finish())
}

/// Formal power-sum expansion, keyed by `ν`, of
/// `p_λ(x+1)/p_λ(1) - p_μ(x+1)/p_μ(1)`, using `p_k(x+1) = Σ_j C(k,j) p_j(x)`
/// with `p_0 = n`.
pub fn powersum_difference(lambda: &Partition, mu: &Partition, n: usize) -> Result<BTreeMap<Partition, Rational>> {
    let deg = lambda.size().max(mu.size());
    if deg > n {
        return Err(Error::UnsupportedRange(format!(
            "power-sum expansion of degree {deg} in {n} variables"
        )));
    }
    let shifted = |p: &Partition| -> BTreeMap<Partition, Rational> {
        let nn = Rational::from_integer(n.into());
        let mut acc: BTreeMap<Partition, Rational> = [(Partition::empty(), Rational::from_integer(1.into()))].into();
        for &k in p.parts() {
            let mut next = BTreeMap::new();
            for (base, c) in &acc {
                for j in 0..=k {
                    // p_0(x) = n
                    let p0 = if j == 0 { nn.clone() } else { Rational::from_integer(1.into()) };
                    let coef = Rational::from_integer(binomial(k.into(), j.into())) * p0 / &nn;
                    let mut parts = base.parts().to_vec();
                    if j > 0 {
                        parts.push(j);
                        parts.sort_unstable_by(|a, b| b.cmp(a));
                    }
                    let key = Partition::new(&parts).unwrap();
                    *next.entry(key).or_insert_with(Rational::zero) += c * coef;
                }
            }
            acc = next;
        }
        acc
    };
    let mut out = shifted(lambda);
    for (k, c) in shifted(mu) {
        *out.entry(k).or_insert_with(Rational::zero) -= c;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Power-sum positivity of the normalized shifted difference.
pub fn powersum_characterization(lambda: &Partition, mu: &Partition, n: usize) -> Result<bool> {
    Ok(powersum_difference(lambda, mu, n)?
        .values()
        .all(|c| cone_member(&RatFun::from_rational(c.clone())).is_member()))
}

/// Power-sum positivity ⇔ containment for all pairs of size at most `min(d, n)`.
pub fn verify_powersum(d: usize, n: usize) -> Result<VerificationReport> {
    let d = d.min(n);
    let mut r = VerificationReport::builder("powersum", Bounds::dn(d, n));
    let parts = enumerate(d, n);
    for l in &parts {
        for m in &parts {
            r.bump("pairs", 1);
            let positive = powersum_characterization(l, m, n)?;
            if positive != l.contains(m) {
                r.fail(format!("{l} vs {m}: power-sum positive {positive}, containment {}", l.contains(m)));
            }
        }
    }
    Ok(r.finish())
}

/// Jack expansion coefficients of a monomial-basis polynomial.
pub fn expand_in_jack(f: &SymPoly) -> Result<BTreeMap<Partition, RatFun>> {
    Ok(f.convert(Basis::Jack)?.coeffs().clone())
}
