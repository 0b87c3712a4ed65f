//! Monic Jack polynomials `P_λ(x; t)`.
//!
//! The primary construction is Gram-Schmidt on the monomial basis of the
//! degree-`k` symmetric functions, using the deformed power-sum pairing.
//! It runs in "enough" variables (all partitions of `k` present) and the
//! result is truncated to `n` variables by dropping monomials with more
//! than `n` parts. The tableau sum is an independent second construction.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Basis, SymPoly};
use crate::arith::{RatFun, Rational, TauPoly};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partitions::Partition;
use crate::tableaux::{enumerate_rt, psi_weight};

/// All monic Jack polynomials of one degree, in the monomial basis of
/// symmetric functions (no bound on the number of variables).
#[derive(Debug)]
pub struct JackTable {
    degree: usize,
    polys: BTreeMap<Partition, BTreeMap<Partition, RatFun>>,
}

impl JackTable {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, lambda: &Partition) -> Option<&BTreeMap<Partition, RatFun>> {
        self.polys.get(lambda)
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.polys.keys()
    }
}

/// Coefficient of `m_μ` in `p_ρ`: the number of ways to distribute the
/// parts of `ρ` into the rows of `μ` so that every row sum matches.
fn power_sum_monomial_coeff(rho: &[usize], remaining: &mut [usize]) -> u64 {
    let Some((&first, rest)) = rho.split_first() else {
        return remaining.iter().all(|&r| r == 0) as u64;
    };
    let mut total = 0;
    for j in 0..remaining.len() {
        if remaining[j] >= first {
            remaining[j] -= first;
            total += power_sum_monomial_coeff(rest, remaining);
            remaining[j] += first;
        }
    }
    total
}

fn compute_table(k: usize) -> JackTable {
    let parts = Partition::of_size(k, k);
    let dim = parts.len();
    // p_ρ = sum_μ R[ρ][μ] m_μ
    let r: Vec<Vec<Rational>> = parts
        .iter()
        .map(|rho| {
            parts
                .iter()
                .map(|mu| {
                    let mut rem = mu.parts().to_vec();
                    Rational::from_integer(BigInt::from(power_sum_monomial_coeff(rho.parts(), &mut rem)))
                })
                .collect()
        })
        .collect();
    // m_μ = sum_ρ M[μ][ρ] p_ρ
    let m = linalg::inverse(r.clone()).expect("power sums are a basis in enough variables");
    // <p_ρ, p_ρ>_t scaled by t^k, which keeps every weight a polynomial
    let weights: Vec<RatFun> = parts
        .iter()
        .map(|rho| {
            RatFun::from_poly(TauPoly::monomial(rho.z_factor(), k - rho.len()))
        })
        .collect();
    let inner = |u: &[RatFun], v: &[RatFun]| {
        let mut acc = RatFun::zero();
        for ((a, b), w) in u.iter().zip(v).zip(&weights) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(&(a * b) * w);
            }
        }
        acc
    };

    let mut ortho: Vec<(Vec<RatFun>, RatFun)> = Vec::with_capacity(dim);
    for row in &m {
        let base: Vec<RatFun> = row.iter().cloned().map(RatFun::from_rational).collect();
        let mut v = base.clone();
        for (q, norm) in &ortho {
            let c = inner(&base, q).checked_div(norm).expect("nonzero norm");
            if c.is_zero() {
                continue;
            }
            for (vi, qi) in v.iter_mut().zip(q) {
                if !qi.is_zero() {
                    *vi = &*vi - &(&c * qi);
                }
            }
        }
        let norm = inner(&v, &v);
        ortho.push((v, norm));
    }

    let mut polys = BTreeMap::new();
    for (lambda, (v, _)) in parts.iter().zip(&ortho) {
        let mut coeffs = BTreeMap::new();
        for (j, mu) in parts.iter().enumerate() {
            let mut c = RatFun::zero();
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() && !r[i][j].is_zero() {
                    c = &c + &vi.scale(&r[i][j]);
                }
            }
            if !c.is_zero() {
                coeffs.insert(mu.clone(), c);
            }
        }
        polys.insert(lambda.clone(), coeffs);
    }
    JackTable { degree: k, polys }
}

type Slot = Arc<OnceLock<Arc<JackTable>>>;

/// The Jack polynomials of degree `k`, computed once per process and shared.
pub fn jack_in_infinitely_many(k: usize) -> Arc<JackTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Slot>>> = OnceLock::new();
    let slot = {
        let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
        map.entry(k).or_default().clone()
    };
    slot.get_or_init(|| Arc::new(compute_table(k))).clone()
}

/// Monic Jack polynomial `P_λ(x_1..x_n; t)` in the monomial basis.
pub fn jack(lambda: &Partition, n: usize) -> Result<SymPoly> {
    if lambda.len() > n {
        return Err(Error::TooLong { len: lambda.len(), n });
    }
    let table = jack_in_infinitely_many(lambda.size());
    let coeffs = table.get(lambda).expect("every partition of k is in the table");
    Ok(SymPoly::from_terms(
        n,
        Basis::Monomial,
        coeffs.iter().map(|(k, c)| (k.clone(), c.clone())),
    ))
}

/// `P_λ` as the weighted sum over reverse tableaux of shape `λ` and rank `n`.
pub fn jack_tableau(lambda: &Partition, n: usize) -> Result<SymPoly> {
    if lambda.len() > n {
        return Err(Error::TooLong { len: lambda.len(), n });
    }
    let mut out = SymPoly::zero(n, Basis::Monomial);
    for t in enumerate_rt(lambda, n) {
        let content = t.content();
        if content.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::new(&content)?, psi_weight(&t)?);
        }
    }
    Ok(out)
}

/// `P_λ(1, ..., 1; t)` by the hook-type product over the cells of `λ`.
pub fn principal_spec_jack(lambda: &Partition, n: usize) -> Result<RatFun> {
    if lambda.len() > n {
        return Err(Error::TooLong { len: lambda.len(), n });
    }
    let conj = lambda.conjugate();
    let mut num = TauPoly::one();
    let mut den = TauPoly::one();
    for (i, j) in lambda.cells() {
        num = &num * &TauPoly::linear(j as i64 - 1, (n - i + 1) as i64);
        den = &den * &TauPoly::linear(
            (lambda.part(i - 1) - j) as i64,
            (conj.part(j - 1) - i + 1) as i64,
        );
    }
    RatFun::new(num, den)
}
