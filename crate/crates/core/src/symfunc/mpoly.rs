//! Dense-exponent multivariate polynomials over `Q(t)`; the workhorse
//! behind products, alternants and tableau sums.

use std::collections::BTreeMap;

use crate::arith::RatFun;
use crate::linalg::Field;
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, RatFun>,
}

/// Distinct rearrangements of `v`, in lexicographic order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Exponent vector of a partition padded to `n` entries.
pub fn exponent(p: &Partition, n: usize) -> Vec<u32> {
    p.padded(n).into_iter().map(|x| x as u32).collect()
}

/// `m_λ(point)` over any field; zero when `λ` has more parts than the point.
pub fn monomial_eval<F: Field>(lambda: &Partition, point: &[F]) -> F {
    if lambda.len() > point.len() {
        return F::zero();
    }
    let mut powers: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
    let max = lambda.part(0);
    for row in powers.iter_mut() {
        for e in 2..=max {
            let next = row[e - 1].mul(&row[1]);
            row.push(next);
        }
    }
    let mut acc = F::zero();
    for alpha in distinct_permutations(&exponent(lambda, point.len())) {
        let mut term = F::one();
        for (i, &a) in alpha.iter().enumerate() {
            if a > 0 {
                term = term.mul(&powers[i][a as usize]);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RatFun) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RatFun::one())
    }

    /// `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, RatFun::one());
        p
    }

    /// The monomial symmetric polynomial `m_λ`.
    pub fn monomial_symmetric(nvars: usize, lambda: &Partition) -> Self {
        let mut p = Self::zero(nvars);
        if lambda.len() <= nvars {
            for e in distinct_permutations(&exponent(lambda, nvars)) {
                p.add_term(e, RatFun::one());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, RatFun> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> RatFun {
        self.terms.get(e).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MPoly) -> MPoly {
        self.add(&rhs.scale(&RatFun::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Exact division by `x_i - x_j` (`i != j`). Panics in debug builds if
    /// the division leaves a remainder.
    pub fn div_by_difference(&self, i: usize, j: usize) -> MPoly {
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some(lead) = rem
            .terms
            .keys()
            .max_by(|a, b| a[i].cmp(&b[i]).then_with(|| a.cmp(b)))
            .cloned()
        {
            if lead[i] == 0 {
                debug_assert!(false, "inexact division by x_{i} - x_{j}");
                break;
            }
            let c = rem.terms[&lead].clone();
            let mut q = lead.clone();
            q[i] -= 1;
            let mut shifted = q.clone();
            shifted[j] += 1;
            rem.add_term(lead, -&c);
            rem.add_term(shifted, c.clone());
            quot.add_term(q, c);
        }
        quot
    }

    pub fn eval(&self, point: &[RatFun]) -> RatFun {
        let mut acc = RatFun::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    term = &term * &x.pow(k);
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// True when every coefficient is invariant under permuting exponents.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.terms.get(&sorted) == Some(c)
        })
    }

    /// Coefficients at weakly decreasing exponents, read as a monomial-basis
    /// expansion. Only meaningful for symmetric polynomials.
    pub fn monomial_coefficients(&self) -> BTreeMap<Partition, RatFun> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| {
                let parts: Vec<usize> = e.iter().map(|&x| x as usize).collect();
                (Partition::new(&parts).unwrap(), c.clone())
            })
            .collect()
    }
}
