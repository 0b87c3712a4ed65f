//! Interpolation Jack polynomials `h_μ`, generalized binomial coefficients
//! `binom(λ, μ) = h_μ(λ̄)`, and sweeps over their structural properties.
//!
//! `h_μ` is constructed two ways: by solving the vanishing conditions
//! `h_μ(λ̄) = δ_{λμ}` (`|λ| <= |μ|`) as an exact linear system, and by the
//! reverse-tableau sum for the monic normalization.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{cone_member, text, ConeStatus, RatFun, TauPoly};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::{enumerate, Partition};
use crate::report::{Bounds, VerificationReport};
use crate::symfunc::{monomial_eval, Basis, MPoly, SymPoly};
use crate::tableaux::{enumerate_rt, psi_weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    /// `h_μ(μ̄) = 1`.
    Unital,
    /// Coefficient of `m_μ` equal to 1.
    Monic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpPoly {
    pub poly: SymPoly,
    pub shape: Partition,
    pub normalization: Normalization,
}

impl InterpPoly {
    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    /// Value at the shifted point `λ̄`.
    pub fn eval_shifted(&self, lambda: &Partition) -> Result<RatFun> {
        let point = lambda.shifted_point(self.nvars())?;
        let point: Vec<RatFun> = point.into_iter().map(RatFun::from_poly).collect();
        let mut acc = RatFun::zero();
        for (k, c) in self.poly.coeffs() {
            acc = &acc + &(c * &monomial_eval(k, &point));
        }
        Ok(acc)
    }
}

type UnitalSet = BTreeMap<Partition, SymPoly>;
type Slot = Arc<OnceLock<Arc<UnitalSet>>>;

/// Solves the vanishing system for every `μ` of size `d` at once; the
/// nodes and unknowns are both indexed by `enumerate(d, n)`.
fn solve_unital(d: usize, n: usize) -> Result<UnitalSet> {
    let nodes = enumerate(d, n);
    let targets: Vec<Partition> = nodes.iter().filter(|p| p.size() == d).cloned().collect();
    let mut a = Vec::with_capacity(nodes.len());
    for lambda in &nodes {
        let point: Vec<RatFun> = lambda.shifted_point(n)?.into_iter().map(RatFun::from_poly).collect();
        a.push(nodes.iter().map(|nu| monomial_eval(nu, &point)).collect::<Vec<_>>());
    }
    let b: Vec<Vec<RatFun>> = nodes
        .iter()
        .map(|lambda| {
            targets
                .iter()
                .map(|mu| if lambda == mu { RatFun::one() } else { RatFun::zero() })
                .collect()
        })
        .collect();
    let x = linalg::solve(a, b)?;
    Ok(targets
        .iter()
        .enumerate()
        .map(|(col, mu)| {
            let poly = SymPoly::from_terms(
                n,
                Basis::Monomial,
                nodes.iter().zip(&x).map(|(nu, row)| (nu.clone(), row[col].clone())),
            );
            (mu.clone(), poly)
        })
        .collect())
}

fn unital_set(d: usize, n: usize) -> Result<Arc<UnitalSet>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Slot>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
        map.entry((d, n)).or_default().clone()
    };
    if let Some(v) = slot.get() {
        return Ok(v.clone());
    }
    let computed = Arc::new(solve_unital(d, n)?);
    Ok(slot.get_or_init(|| computed).clone())
}

fn check_len(p: &Partition, n: usize) -> Result<()> {
    if p.len() > n {
        return Err(Error::TooLong { len: p.len(), n });
    }
    Ok(())
}

/// `h_μ` from the vanishing conditions, in the requested normalization.
pub fn interp_linear(mu: &Partition, n: usize, normalization: Normalization) -> Result<InterpPoly> {
    check_len(mu, n)?;
    let set = unital_set(mu.size(), n)?;
    let unital = set.get(mu).expect("μ is one of the solved targets").clone();
    let poly = match normalization {
        Normalization::Unital => unital,
        Normalization::Monic => {
            let lead = unital.coeff(mu);
            assert!(!lead.is_zero(), "interpolation polynomial lacks its top monomial");
            unital.scale(&lead.inv()?)
        }
    };
    Ok(InterpPoly {
        poly,
        shape: mu.clone(),
        normalization,
    })
}

/// Monic `h_μ` as the sum over reverse tableaux `T` of shape `μ`, rank `n`,
/// of `ψ_T ∏_s (x_{T(s)} - (a'(s) + (n - T(s) - l'(s)) t))`.
pub fn interp_tableau(mu: &Partition, n: usize) -> Result<InterpPoly> {
    check_len(mu, n)?;
    let mut total = MPoly::zero(n);
    for t in enumerate_rt(mu, n) {
        let mut prod = MPoly::constant(n, psi_weight(&t)?);
        for (i, j) in mu.cells() {
            let (coarm, coleg) = mu.coarm_coleg(i, j)?;
            let entry = t.entry(i, j);
            let shift = TauPoly::linear(coarm as i64, n as i64 - entry as i64 - coleg as i64);
            let factor = MPoly::var(n, entry - 1).sub(&MPoly::constant(n, RatFun::from_poly(shift)));
            prod = prod.mul(&factor);
        }
        total = total.add(&prod);
    }
    Ok(InterpPoly {
        poly: SymPoly::from_mpoly(&total),
        shape: mu.clone(),
        normalization: Normalization::Monic,
    })
}

/// Generalized binomial coefficient `binom(λ, μ) = h_μ(λ̄)` (unital `h_μ`).
pub fn binomial(lambda: &Partition, mu: &Partition, n: usize) -> Result<RatFun> {
    check_len(lambda, n)?;
    interp_linear(mu, n, Normalization::Unital)?.eval_shifted(lambda)
}

/// `H_ν = h^monic_ν(ν̄)`.
pub fn h_normalizer(nu: &Partition, n: usize) -> Result<RatFun> {
    interp_linear(nu, n, Normalization::Monic)?.eval_shifted(nu)
}

/// Binomial coefficients `binom(λ, ν)` for all `λ, ν` of size at most
/// `bound` with at most `nvars` parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialTable {
    pub bound: usize,
    pub nvars: usize,
    entries: BTreeMap<(Partition, Partition), RatFun>,
}

impl BinomialTable {
    pub fn compute(bound: usize, nvars: usize) -> Result<Self> {
        let parts = enumerate(bound, nvars);
        let polys: Vec<InterpPoly> = parts
            .par_iter()
            .map(|nu| interp_linear(nu, nvars, Normalization::Unital))
            .collect::<Result<_>>()?;
        let rows: Vec<Vec<((Partition, Partition), RatFun)>> = parts
            .par_iter()
            .map(|lambda| {
                polys
                    .iter()
                    .map(|h| Ok(((lambda.clone(), h.shape.clone()), h.eval_shifted(lambda)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(BinomialTable {
            bound,
            nvars,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn get(&self, lambda: &Partition, nu: &Partition) -> Option<&RatFun> {
        self.entries.get(&(lambda.clone(), nu.clone()))
    }

    pub fn entries(&self) -> &BTreeMap<(Partition, Partition), RatFun> {
        &self.entries
    }

    /// Rows `λ,ν,num,den` with integer-cleared numerator and denominator.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda,nu,num,den\n");
        for ((l, v), f) in &self.entries {
            let (num, den) = text::render_num_den(f);
            out.push_str(&format!("{l},{v},{num},{den}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .entries
            .iter()
            .map(|((l, v), f)| {
                let (num, den) = text::render_num_den(f);
                serde_json::json!({"lambda": l, "nu": v, "num": num, "den": den, "value": f})
            })
            .collect();
        serde_json::json!({"bound": self.bound, "n": self.nvars, "entries": entries})
    }

    /// Reads the JSON form back.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("binomial table json: {what}"));
        let bound = v["bound"].as_u64().ok_or_else(|| bad("bound"))? as usize;
        let nvars = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let mut entries = BTreeMap::new();
        for e in v["entries"].as_array().ok_or_else(|| bad("entries"))? {
            let l: Partition = serde_json::from_value(e["lambda"].clone()).map_err(|_| bad("lambda"))?;
            let nu: Partition = serde_json::from_value(e["nu"].clone()).map_err(|_| bad("nu"))?;
            let num = text::parse_ratfun(e["num"].as_str().ok_or_else(|| bad("num"))?)?;
            let den = text::parse_ratfun(e["den"].as_str().ok_or_else(|| bad("den"))?)?;
            entries.insert((l, nu), num.checked_div(&den)?);
        }
        Ok(BinomialTable { bound, nvars, entries })
    }
}

/// Checks `binom(λ, μ) = 0 ⇔ λ ⊉ μ` and `binom(λ, μ) ∈ F_{>0} ⇔ λ ⊇ μ`
/// over every pair of size at most `d` in `n` variables.
pub fn extra_vanishing_check(d: usize, n: usize) -> Result<VerificationReport> {
    let table = BinomialTable::compute(d, n)?;
    Ok(containment_report("extra-vanishing", &table))
}

fn containment_report(claim: &str, table: &BinomialTable) -> VerificationReport {
    let mut r = VerificationReport::builder(claim, Bounds::dn(table.bound, table.nvars));
    let statuses: Vec<_> = table
        .entries
        .par_iter()
        .map(|((l, m), f)| (l, m, f, cone_member(f)))
        .collect();
    for (l, m, f, status) in statuses {
        r.bump("pairs", 1);
        let contained = l.contains(m);
        match (&status, contained) {
            (ConeStatus::MemberPositive { certificate }, true) => {
                r.bump("positive", 1);
                if certificate.is_some() {
                    r.bump("certified", 1);
                }
            }
            (ConeStatus::Zero, false) => r.bump("vanishing", 1),
            _ => r.fail(format!("binom({l},{m}) = {f}: containment {contained}, cone status {status:?}")),
        }
    }
    r.finish()
}

/// Positivity of binomial coefficients exactly on containing pairs.
pub fn positivity_check(d: usize, n: usize) -> Result<VerificationReport> {
    let table = BinomialTable::compute(d, n)?;
    Ok(containment_report("positivity", &table))
}

/// For every cover `μ ⊂ λ` (one added box) with `|λ| <= d` and every `ν`
/// with `|ν| <= d`, checks `binom(λ, ν) - binom(μ, ν)` lies in the closed
/// cone. Also records how many nonzero differences carried a `(1+t)^N`
/// certificate.
pub fn monotonicity_check(d: usize, n: usize) -> Result<VerificationReport> {
    let table = BinomialTable::compute(d, n)?;
    monotonicity_from_table(&table)
}

pub fn monotonicity_from_table(table: &BinomialTable) -> Result<VerificationReport> {
    let (d, n) = (table.bound, table.nvars);
    let mut r = VerificationReport::builder("thm2", Bounds::dn(d, n));
    let parts = enumerate(d, n);
    let covers: Vec<(Partition, Partition)> = parts
        .iter()
        .flat_map(|mu| {
            mu.add_one_box(n)
                .into_iter()
                .filter(|(l, _)| l.size() <= d)
                .map(move |(l, _)| (l, mu.clone()))
        })
        .collect();
    let jobs: Vec<(&Partition, &Partition, &Partition)> = covers
        .iter()
        .flat_map(|(l, m)| parts.iter().map(move |nu| (l, m, nu)))
        .collect();
    let results: Vec<_> = jobs
        .par_iter()
        .map(|&(l, m, nu)| {
            let diff = table.get(l, nu).unwrap() - table.get(m, nu).unwrap();
            let status = cone_member(&diff);
            (l, m, nu, diff, status)
        })
        .collect();
    r.bump("cover_pairs", covers.len() as u64);
    for (l, m, nu, diff, status) in results {
        r.bump("differences", 1);
        match status {
            ConeStatus::Zero => r.bump("zero", 1),
            ConeStatus::MemberPositive { certificate } => {
                r.bump("positive", 1);
                if certificate.is_some() {
                    r.bump("certified", 1);
                }
            }
            ConeStatus::NonMember => {
                r.fail(format!("binom({l},{nu}) - binom({m},{nu}) = {diff} is not in the cone"))
            }
        }
    }
    Ok(r.finish())
}

/// Outcome of comparing `binom(λ, μ)` across several variable counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub values: Vec<(usize, RatFun)>,
    pub stable: bool,
}

pub fn n_stability_check(lambda: &Partition, mu: &Partition, ns: &[usize]) -> Result<StabilityReport> {
    let values = ns
        .iter()
        .map(|&n| Ok((n, binomial(lambda, mu, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let stable = values.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(StabilityReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        values,
        stable,
    })
}
