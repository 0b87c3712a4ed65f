//! Exact evaluation of normalized differences on rational grids. Every
//! report from this module is a sampling probe, not a proof.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::text::parse_rational;
use crate::arith::{RatFun, Rational};
use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};
use crate::report::{Bounds, VerificationReport};
use crate::symfunc::{eval_rational, jack, schur, Basis, SymPoly};

pub const SAMPLING_NOTE: &str = "sampling probe: exact values at finitely many grid points, not a proof";

/// Coordinate values of the default grid on `[0,∞)`.
pub const DEFAULT_GRID_VALUES: [&str; 15] = [
    "0", "1/8", "1/4", "1/3", "1/2", "2/3", "3/4", "1", "5/4", "3/2", "2", "3", "5", "10", "20",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Monomial,
    Elementary,
    Powersum,
    Schur,
    Jack,
}

impl Kind {
    pub const CLASSICAL: [Kind; 4] = [Kind::Monomial, Kind::Elementary, Kind::Powersum, Kind::Schur];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Monomial => "monomial",
            Kind::Elementary => "elementary",
            Kind::Powersum => "powersum",
            Kind::Schur => "schur",
            Kind::Jack => "jack",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "monomial" | "m" => Kind::Monomial,
            "elementary" | "e" => Kind::Elementary,
            "powersum" | "p" => Kind::Powersum,
            "schur" | "s" => Kind::Schur,
            "jack" | "P" => Kind::Jack,
            _ => return Err(Error::Parse(format!("unknown kind {s:?}"))),
        })
    }
}

/// A point of `[0,∞]` for the Jack parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauValue {
    Finite(Rational),
    Infinity,
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauValue::Finite(q) => write!(f, "{q}"),
            TauValue::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for TauValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(TauValue::Infinity);
        }
        let q = parse_rational(s)?;
        if q.is_negative() {
            return Err(Error::Parse(format!("tau must be nonnegative, got {s}")));
        }
        Ok(TauValue::Finite(q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridDomain {
    /// `[0,∞)^n`
    NonNegative,
    /// `[1,∞)^n`, the nonnegative grid shifted by one.
    AtLeastOne,
}

/// Cartesian power of `values`, shifted by one for `AtLeastOne`.
pub fn grid_from_values(values: &[Rational], n: usize, domain: GridDomain) -> Vec<Vec<Rational>> {
    let shift = match domain {
        GridDomain::NonNegative => Rational::zero(),
        GridDomain::AtLeastOne => Rational::one(),
    };
    let coords: Vec<Rational> = values.iter().map(|v| v + &shift).collect();
    let mut points: Vec<Vec<Rational>> = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                coords.iter().map(move |c| {
                    let mut q = p.clone();
                    q.push(c.clone());
                    q
                })
            })
            .collect();
    }
    points
}

pub fn default_grid(n: usize, domain: GridDomain) -> Vec<Vec<Rational>> {
    let values: Vec<Rational> = DEFAULT_GRID_VALUES.iter().map(|s| parse_rational(s).unwrap()).collect();
    grid_from_values(&values, n, domain)
}

/// The unnormalized family member indexed by `λ`, over `Q(t)`, in the
/// monomial basis. `Elementary` means `e_{λ'}`.
fn family_member(kind: Kind, lambda: &Partition, n: usize) -> Result<SymPoly> {
    if lambda.len() > n {
        return Err(Error::TooLong { len: lambda.len(), n });
    }
    Ok(match kind {
        Kind::Monomial => SymPoly::from_terms(n, Basis::Monomial, [(lambda.clone(), RatFun::one())]),
        Kind::Elementary => {
            SymPoly::from_terms(n, Basis::Elementary, [(lambda.conjugate(), RatFun::one())]).to_monomial()
        }
        Kind::Powersum => SymPoly::from_terms(n, Basis::Powersum, [(lambda.clone(), RatFun::one())]).to_monomial(),
        Kind::Schur => schur(lambda, n)?,
        Kind::Jack => jack(lambda, n)?,
    })
}

/// Monomial coefficients of `f_λ(x)/f_λ(1)` with rational coefficients. For
/// `Jack` the parameter is specialized at `tau`; `∞` takes the `e_{λ'}` limit.
pub fn normalized_family(kind: Kind, lambda: &Partition, n: usize, tau: &TauValue) -> Result<BTreeMap<Partition, Rational>> {
    let coeffs = match (kind, tau) {
        (Kind::Jack, TauValue::Infinity) => family_member(Kind::Elementary, lambda, n)?.specialize(&Rational::zero())?,
        (Kind::Jack, TauValue::Finite(t0)) => family_member(kind, lambda, n)?.specialize(t0)?,
        _ => family_member(kind, lambda, n)?.specialize(&Rational::zero())?,
    };
    let at_one = eval_rational(&coeffs, &vec![Rational::one(); n]);
    if at_one.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(coeffs
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c / &at_one))
        .collect())
}

/// `f_λ(x)/f_λ(1) - f_μ(x)/f_μ(1)` over `Q(t)`, in the monomial basis.
pub fn normalized_difference_symbolic(kind: Kind, lambda: &Partition, mu: &Partition, n: usize) -> Result<SymPoly> {
    let normalized = |p: &Partition| -> Result<SymPoly> {
        let f = family_member(kind, p, n)?;
        let one = f.evaluate(&vec![RatFun::one(); n])?;
        Ok(f.scale(&one.inv()?))
    };
    Ok(normalized(lambda)?.sub(&normalized(mu)?))
}

fn difference_coeffs(kind: Kind, lambda: &Partition, mu: &Partition, n: usize, tau: &TauValue) -> Result<BTreeMap<Partition, Rational>> {
    let mut out = normalized_family(kind, lambda, n, tau)?;
    for (k, c) in normalized_family(kind, mu, n, tau)? {
        *out.entry(k).or_insert_with(Rational::zero) -= c;
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

fn render_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(|q| q.to_string()).collect();
    format!("({})", parts.join(","))
}

struct Scan {
    min: Option<Rational>,
    violation: Option<(Vec<Rational>, Rational)>,
}

fn scan(coeffs: &BTreeMap<Partition, Rational>, grid: &[Vec<Rational>]) -> Scan {
    let mut out = Scan { min: None, violation: None };
    for p in grid {
        let v = eval_rational(coeffs, p);
        if v.is_negative() && out.violation.is_none() {
            out.violation = Some((p.clone(), v.clone()));
        }
        if out.min.as_ref().is_none_or(|m| &v < m) {
            out.min = Some(v);
        }
    }
    out
}

/// Evaluates the normalized difference of `kind` at every grid point and
/// fails on the first negative value.
pub fn numeric_eval_check(
    kind: Kind,
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    tau: &TauValue,
    grid: &[Vec<Rational>],
) -> Result<VerificationReport> {
    let bounds = Bounds {
        n: Some(n),
        tau: if kind == Kind::Jack { vec![tau.to_string()] } else { Vec::new() },
        grid: Some(format!("{} points", grid.len())),
        ..Default::default()
    };
    let mut r = VerificationReport::builder("numeric-eval", bounds);
    r.note(SAMPLING_NOTE);
    let coeffs = difference_coeffs(kind, lambda, mu, n, tau)?;
    let s = scan(&coeffs, grid);
    r.bump("points", grid.len() as u64);
    if let Some(m) = s.min {
        r.note(format!("minimum value {m}"));
    }
    if let Some((p, v)) = s.violation {
        r.fail(format!("{kind} {lambda} vs {mu}: value {v} at {}", render_point(&p)));
    }
    Ok(r.finish())
}

struct PairJob {
    kind: Kind,
    tau: TauValue,
    lambda: Partition,
    mu: Partition,
    domain: GridDomain,
}

fn run_jobs(jobs: &[PairJob], grid0: &[Vec<Rational>], grid1: &[Vec<Rational>], r: &mut crate::report::ReportBuilder) -> Result<()> {
    let results: Vec<Result<Option<String>>> = jobs
        .par_iter()
        .map(|j| {
            let grid = match j.domain {
                GridDomain::NonNegative => grid0,
                GridDomain::AtLeastOne => grid1,
            };
            let coeffs = difference_coeffs(j.kind, &j.lambda, &j.mu, grid.first().map_or(0, Vec::len), &j.tau)?;
            Ok(scan(&coeffs, grid).violation.map(|(p, v)| {
                let tau = if j.kind == Kind::Jack { format!(" t={}", j.tau) } else { String::new() };
                format!("{}{tau} {} vs {}: value {v} at {}", j.kind, j.lambda, j.mu, render_point(&p))
            }))
        })
        .collect();
    for (j, res) in jobs.iter().zip(results) {
        r.bump("pairs", 1);
        let grid_len = match j.domain {
            GridDomain::NonNegative => grid0.len(),
            GridDomain::AtLeastOne => grid1.len(),
        };
        r.bump("points", grid_len as u64);
        if let Some(msg) = res? {
            r.fail(msg);
        }
    }
    Ok(())
}

fn grid_bounds(d: usize, n: usize, taus: &[TauValue], grid: &[Vec<Rational>]) -> Bounds {
    Bounds {
        tau: taus.iter().map(|t| t.to_string()).collect(),
        grid: Some(format!("{} points per pair", grid.len())),
        ..Bounds::dn(d, n)
    }
}

fn pairs(d: usize, n: usize, same_size: bool, rel: impl Fn(&Partition, &Partition) -> bool) -> Vec<(Partition, Partition)> {
    let parts = enumerate(d, n);
    let mut out = Vec::new();
    for l in &parts {
        for m in &parts {
            if l != m && (!same_size || l.size() == m.size()) && rel(l, m) {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}

/// Dominating pairs of equal size: the classical normalized differences
/// are nonnegative on `[0,∞)^n`. Non-dominating pairs are scanned too and
/// the number with a detected violation is recorded, without failing.
pub fn verify_cgs(d: usize, n: usize, values: &[Rational]) -> Result<VerificationReport> {
    let grid = grid_from_values(values, n, GridDomain::NonNegative);
    let mut r = VerificationReport::builder("cgs", grid_bounds(d, n, &[], &grid));
    r.note(SAMPLING_NOTE);
    let tau = TauValue::Finite(Rational::zero());
    let jobs: Vec<PairJob> = pairs(d, n, true, |l, m| l.dominates(m))
        .into_iter()
        .flat_map(|(l, m)| {
            let tau = tau.clone();
            Kind::CLASSICAL.into_iter().map(move |kind| PairJob {
                kind,
                tau: tau.clone(),
                lambda: l.clone(),
                mu: m.clone(),
                domain: GridDomain::NonNegative,
            })
        })
        .collect();
    run_jobs(&jobs, &grid, &grid, &mut r)?;
    for (l, m) in pairs(d, n, true, |l, m| !l.dominates(m)) {
        for kind in Kind::CLASSICAL {
            r.bump("non_dominating", 1);
            if scan(&difference_coeffs(kind, &l, &m, n, &tau)?, &grid).violation.is_some() {
                r.bump("non_dominating_violation_found", 1);
            }
        }
    }
    Ok(r.finish())
}

/// Weakly dominating pairs: the normalized Schur difference is
/// nonnegative on `[1,∞)^n`.
pub fn verify_kt(d: usize, n: usize, values: &[Rational]) -> Result<VerificationReport> {
    let grid = grid_from_values(values, n, GridDomain::AtLeastOne);
    let mut r = VerificationReport::builder("kt", grid_bounds(d, n, &[], &grid));
    r.note(SAMPLING_NOTE);
    let jobs: Vec<PairJob> = pairs(d, n, false, |l, m| l.weakly_dominates(m))
        .into_iter()
        .map(|(l, m)| PairJob {
            kind: Kind::Schur,
            tau: TauValue::Finite(Rational::zero()),
            lambda: l,
            mu: m,
            domain: GridDomain::AtLeastOne,
        })
        .collect();
    run_jobs(&jobs, &grid, &grid, &mut r)?;
    Ok(r.finish())
}

/// The intermediate partition `ν` with `λ ⊇ ν` and `ν` dominating `μ`,
/// taking `ν_i = min(λ_i, |μ| - ν_1 - ... - ν_{i-1})`.
pub fn interpolating_partition(lambda: &Partition, mu: &Partition) -> Option<Partition> {
    let mut remaining = mu.size();
    let mut parts = Vec::new();
    for &p in lambda.parts() {
        let v = p.min(remaining);
        parts.push(v);
        remaining -= v;
    }
    if remaining > 0 {
        return None;
    }
    let nu = Partition::new(&parts).ok()?;
    (lambda.contains(&nu) && nu.dominates(mu)).then_some(nu)
}

/// Splits each weakly dominating pair through an interpolating `ν` and
/// checks the containment leg on `[1,∞)^n`, the dominance leg on
/// `[0,∞)^n`, and the total on `[1,∞)^n`, for all four classical families.
pub fn verify_cor_kt(d: usize, n: usize, values: &[Rational]) -> Result<VerificationReport> {
    let grid0 = grid_from_values(values, n, GridDomain::NonNegative);
    let grid1 = grid_from_values(values, n, GridDomain::AtLeastOne);
    let mut r = VerificationReport::builder("cor-kt", grid_bounds(d, n, &[], &grid1));
    r.note(SAMPLING_NOTE);
    let mut jobs = Vec::new();
    for (l, m) in pairs(d, n, false, |l, m| l.weakly_dominates(m)) {
        let Some(nu) = interpolating_partition(&l, &m) else {
            r.fail(format!("{l} vs {m}: no interpolating partition"));
            continue;
        };
        r.bump("split_pairs", 1);
        for kind in Kind::CLASSICAL {
            let tau = TauValue::Finite(Rational::zero());
            let job = |a: &Partition, b: &Partition, domain| PairJob {
                kind,
                tau: tau.clone(),
                lambda: a.clone(),
                mu: b.clone(),
                domain,
            };
            if l != nu {
                jobs.push(job(&l, &nu, GridDomain::AtLeastOne));
            }
            if nu != m {
                jobs.push(job(&nu, &m, GridDomain::NonNegative));
            }
            jobs.push(job(&l, &m, GridDomain::AtLeastOne));
        }
    }
    run_jobs(&jobs, &grid0, &grid1, &mut r)?;
    Ok(r.finish())
}

fn conj_probe(claim: &str, d: usize, n: usize, taus: &[TauValue], values: &[Rational], domain: GridDomain) -> Result<VerificationReport> {
    let grid = grid_from_values(values, n, domain);
    let mut r = VerificationReport::builder(claim, grid_bounds(d, n, taus, &grid));
    r.note(SAMPLING_NOTE);
    let hyp = match domain {
        GridDomain::NonNegative => pairs(d, n, true, |l, m| l.dominates(m)),
        GridDomain::AtLeastOne => pairs(d, n, false, |l, m| l.weakly_dominates(m)),
    };
    let jobs: Vec<PairJob> = taus
        .iter()
        .flat_map(|tau| {
            hyp.iter().map(move |(l, m)| PairJob {
                kind: Kind::Jack,
                tau: tau.clone(),
                lambda: l.clone(),
                mu: m.clone(),
                domain,
            })
        })
        .collect();
    run_jobs(&jobs, &grid, &grid, &mut r)?;
    let r = r.finish();
    let mut r = r;
    if r.pass {
        r.notes.push("no counterexample found (sampling probe)".into());
    }
    Ok(r)
}

/// Jack analogue of the dominance inequality on `[0,∞)^n`, probed at each `τ0`.
pub fn verify_conj_cgs(d: usize, n: usize, taus: &[TauValue], values: &[Rational]) -> Result<VerificationReport> {
    conj_probe("conj-cgs", d, n, taus, values, GridDomain::NonNegative)
}

/// Jack analogue of the weak-dominance inequality on `[1,∞)^n`.
pub fn verify_conj_kt(d: usize, n: usize, taus: &[TauValue], values: &[Rational]) -> Result<VerificationReport> {
    conj_probe("conj-kt", d, n, taus, values, GridDomain::AtLeastOne)
}
