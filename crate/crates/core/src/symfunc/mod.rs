//! Symmetric polynomials in `n` variables over `Q(t)`: the classical bases,
//! changes of basis, both Hall inner products, Jack polynomials, the shift
//! `x -> x + 1`, and principal specializations.

mod jack;
pub mod mpoly;
mod schur;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::arith::{RatFun, Rational, TauPoly};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::partitions::Partition;

pub use jack::{
    jack, jack_in_infinitely_many, jack_tableau, principal_spec_jack, JackTable,
};
pub use mpoly::{monomial_eval, MPoly};
pub use schur::schur;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Elementary,
    Powersum,
    Schur,
    Jack,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "monomial",
            Basis::Elementary => "elementary",
            Basis::Powersum => "powersum",
            Basis::Schur => "schur",
            Basis::Jack => "jack",
        })
    }
}

/// A symmetric polynomial in `nvars` variables, expanded in `basis`.
///
/// The elementary basis is indexed by the partitions `λ` of the products
/// `e_λ = e_{λ_1} e_{λ_2} ...`; every other basis by the usual `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, RatFun>,
}

impl SymPoly {
    pub fn zero(nvars: usize, basis: Basis) -> Self {
        SymPoly {
            nvars,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_terms(nvars, Basis::Monomial, [(Partition::empty(), RatFun::one())])
    }

    /// Collects terms, summing duplicates and dropping zeros. Keys that
    /// cannot index a basis element in `nvars` variables are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFun)>>(nvars: usize, basis: Basis, terms: I) -> Self {
        let mut p = Self::zero(nvars, basis);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn key_fits(&self, k: &Partition) -> bool {
        match self.basis {
            Basis::Elementary => k.part(0) <= self.nvars,
            _ => k.len() <= self.nvars,
        }
    }

    pub fn add_term(&mut self, k: Partition, c: RatFun) {
        if c.is_zero() || !self.key_fits(&k) {
            return;
        }
        let sum = match self.coeffs.get(&k) {
            Some(v) => v + &c,
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, RatFun> {
        &self.coeffs
    }

    pub fn coeff(&self, k: &Partition) -> RatFun {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest degree of a basis element present; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(Partition::size).max().unwrap_or(0)
    }

    fn check_same(&self, rhs: &SymPoly) {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        assert_eq!(self.basis, rhs.basis, "bases differ");
    }

    pub fn add(&self, rhs: &SymPoly) -> SymPoly {
        self.check_same(rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &SymPoly) -> SymPoly {
        self.add(&rhs.scale(&RatFun::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> SymPoly {
        Self::from_terms(self.nvars, self.basis, self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)))
    }

    /// Product, returned in the monomial basis.
    pub fn mul(&self, rhs: &SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable counts differ");
        let prod = self.to_mpoly().mul(&rhs.to_mpoly());
        Self::from_terms(self.nvars, Basis::Monomial, prod.monomial_coefficients())
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&RatFun) -> RatFun) -> SymPoly {
        Self::from_terms(self.nvars, self.basis, self.coeffs.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    /// Expansion as an explicit polynomial in the variables.
    pub fn to_mpoly(&self) -> MPoly {
        let m = self.to_monomial();
        let mut out = MPoly::zero(self.nvars);
        for (k, c) in &m.coeffs {
            for e in mpoly::distinct_permutations(&mpoly::exponent(k, self.nvars)) {
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Reads a symmetric explicit polynomial back as a monomial expansion.
    pub fn from_mpoly(p: &MPoly) -> SymPoly {
        debug_assert!(p.is_symmetric(), "polynomial is not symmetric");
        Self::from_terms(p.nvars(), Basis::Monomial, p.monomial_coefficients())
    }

    /// Expansion of one basis element in the monomial basis.
    fn element_to_monomial(basis: Basis, k: &Partition, n: usize) -> SymPoly {
        match basis {
            Basis::Monomial => Self::from_terms(n, Basis::Monomial, [(k.clone(), RatFun::one())]),
            Basis::Elementary | Basis::Powersum => {
                let mut prod = MPoly::one(n);
                for &r in k.parts() {
                    let factor = if basis == Basis::Elementary {
                        MPoly::monomial_symmetric(n, &Partition::column(r))
                    } else {
                        MPoly::monomial_symmetric(n, &Partition::row(r))
                    };
                    prod = prod.mul(&factor);
                }
                Self::from_terms(n, Basis::Monomial, prod.monomial_coefficients())
            }
            Basis::Schur => schur(k, n).expect("schur index fits"),
            Basis::Jack => jack(k, n).expect("jack index fits"),
        }
    }

    pub fn to_monomial(&self) -> SymPoly {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let mut out = SymPoly::zero(self.nvars, Basis::Monomial);
        for (k, c) in &self.coeffs {
            out = out.add(&Self::element_to_monomial(self.basis, k, self.nvars).scale(c));
        }
        out
    }

    /// Exact change of basis. The power-sum basis is only faithful in
    /// degree at most `nvars`; larger degrees are rejected.
    pub fn convert(&self, target: Basis) -> Result<SymPoly> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let m = self.to_monomial();
        if target == Basis::Monomial {
            return Ok(m);
        }
        if target == Basis::Powersum && m.degree() > self.nvars {
            return Err(Error::UnsupportedRange(format!(
                "power-sum expansion of degree {} in {} variables",
                m.degree(),
                self.nvars
            )));
        }
        let n = self.nvars;
        let mut rem = m;
        let mut out = SymPoly::zero(n, target);
        // Triangular back-substitution. Schur, Jack and e_{κ'} have leading
        // term m_κ and lower terms below κ in dominance; p_κ has lowest term
        // (prod m_i!) m_κ and higher terms above κ.
        while let Some((k, c)) = if target == Basis::Powersum {
            rem.coeffs.iter().next()
        } else {
            rem.coeffs.iter().next_back()
        }
        .map(|(k, c)| (k.clone(), c.clone()))
        {
            let (index, element) = match target {
                Basis::Elementary => {
                    let idx = k.conjugate();
                    (idx.clone(), Self::element_to_monomial(Basis::Elementary, &idx, n))
                }
                _ => (k.clone(), Self::element_to_monomial(target, &k, n)),
            };
            let lead = element.coeff(&k);
            let factor = c.checked_div(&lead)?;
            rem = rem.sub(&element.scale(&factor));
            debug_assert!(rem.coeff(&k).is_zero());
            out.add_term(index, factor);
        }
        Ok(out)
    }

    /// `f(x_1 + 1, ..., x_n + 1)` in the monomial basis.
    pub fn shift_vars(&self) -> SymPoly {
        let m = self.to_monomial();
        let n = self.nvars;
        let mut out = SymPoly::zero(n, Basis::Monomial);
        for (k, c) in &m.coeffs {
            for alpha in mpoly::distinct_permutations(&mpoly::exponent(k, n)) {
                // every partition-shaped beta <= alpha
                let mut betas: Vec<Vec<u32>> = vec![Vec::new()];
                for &top in &alpha {
                    betas = betas
                        .into_iter()
                        .flat_map(|b| {
                            let cap = b.last().copied().unwrap_or(u32::MAX).min(top);
                            (0..=cap).map(move |v| {
                                let mut nb = b.clone();
                                nb.push(v);
                                nb
                            })
                        })
                        .collect();
                }
                for beta in betas {
                    let mult: BigInt = alpha
                        .iter()
                        .zip(&beta)
                        .map(|(&a, &b)| binomial(BigInt::from(a), BigInt::from(b)))
                        .product();
                    let parts: Vec<usize> = beta.iter().map(|&b| b as usize).collect();
                    out.add_term(
                        Partition::new(&parts).unwrap(),
                        c.scale(&Rational::from_integer(mult)),
                    );
                }
            }
        }
        out
    }

    /// Exact evaluation at a point of `Q(t)^n`.
    pub fn evaluate(&self, point: &[RatFun]) -> Result<RatFun> {
        self.check_point(point.len())?;
        let m = self.to_monomial();
        let mut acc = RatFun::zero();
        for (k, c) in &m.coeffs {
            acc = &acc + &(c * &monomial_eval(k, point));
        }
        Ok(acc)
    }

    /// Evaluation at a point whose coordinates are polynomials in `t`.
    pub fn evaluate_tau(&self, point: &[TauPoly]) -> Result<RatFun> {
        let p: Vec<RatFun> = point.iter().cloned().map(RatFun::from_poly).collect();
        self.evaluate(&p)
    }

    fn check_point(&self, len: usize) -> Result<()> {
        if len != self.nvars {
            return Err(Error::UnsupportedRange(format!(
                "point has {len} coordinates, polynomial has {} variables",
                self.nvars
            )));
        }
        Ok(())
    }

    /// Specializes `t = t0` in every monomial coefficient.
    pub fn specialize(&self, t0: &Rational) -> Result<BTreeMap<Partition, Rational>> {
        let m = self.to_monomial();
        m.coeffs
            .iter()
            .map(|(k, c)| Ok((k.clone(), c.eval_at(t0)?)))
            .collect()
    }
}

/// Evaluates a monomial expansion with rational coefficients at a rational point.
pub fn eval_rational(coeffs: &BTreeMap<Partition, Rational>, point: &[Rational]) -> Rational {
    coeffs
        .iter()
        .map(|(k, c)| c * monomial_eval(k, point))
        .fold(<Rational as Field>::zero(), |a, b| a + b)
}

/// `m_λ`, `e_λ` or `p_λ` in `n` variables, tagged with its own basis.
/// `m_λ` with more than `n` parts and `e_λ` with `λ_1 > n` are zero.
pub fn basis_element(basis: Basis, lambda: &Partition, n: usize) -> SymPoly {
    SymPoly::from_terms(n, basis, [(lambda.clone(), RatFun::one())])
}

fn power_sum_weight(rho: &Partition, deformed: bool) -> RatFun {
    let z = RatFun::from_rational(rho.z_factor());
    if deformed {
        let t_len = RatFun::t().pow(rho.len() as u32);
        z.checked_div(&t_len).expect("t^l is nonzero")
    } else {
        z
    }
}

fn pairing(f: &SymPoly, g: &SymPoly, deformed: bool) -> Result<RatFun> {
    for h in [f, g] {
        if h.degree() > h.nvars {
            return Err(Error::UnsupportedRange(format!(
                "inner product in degree {} with {} variables",
                h.degree(),
                h.nvars
            )));
        }
    }
    let fp = f.convert(Basis::Powersum)?;
    let gp = g.convert(Basis::Powersum)?;
    let mut acc = RatFun::zero();
    for (k, c) in &fp.coeffs {
        if let Some(d) = gp.coeffs.get(k) {
            acc = &acc + &(&(c * d) * &power_sum_weight(k, deformed));
        }
    }
    Ok(acc)
}

/// Hall inner product `<p_λ, p_μ> = δ z_λ`, extended bilinearly.
pub fn hall_inner(f: &SymPoly, g: &SymPoly) -> Result<RatFun> {
    pairing(f, g, false)
}

/// Deformed product `<p_λ, p_μ>_t = δ z_λ t^{-l(λ)}`.
pub fn hall_inner_tau(f: &SymPoly, g: &SymPoly) -> Result<RatFun> {
    pairing(f, g, true)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct SymPolyJson {
    n: usize,
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymPolyJson {
            n: self.nvars,
            basis: self.basis,
            terms: self
                .coeffs
                .iter()
                .map(|(k, c)| TermJson {
                    partition: k.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymPolyJson::deserialize(d)?;
        Ok(SymPoly::from_terms(
            j.n,
            j.basis,
            j.terms.into_iter().map(|t| (t.partition, t.coeff)),
        ))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let sym = match self.basis {
            Basis::Monomial => "m",
            Basis::Elementary => "e",
            Basis::Powersum => "p",
            Basis::Schur => "s",
            Basis::Jack => "P",
        };
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{sym}{k}")?;
            } else {
                write!(f, "({c})*{sym}{k}")?;
            }
        }
        Ok(())
    }
}
