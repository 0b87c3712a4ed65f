//! Exact dense linear algebra over a field.

use num_traits::{One, Zero};

use crate::arith::{RatFun, Rational};
use crate::error::{Error, Result};

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Panics on a zero divisor; callers pivot on nonzero entries.
    fn div(&self, rhs: &Self) -> Self;
    /// Size measure used to prefer small pivots.
    fn weight(&self) -> usize {
        0
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by a zero pivot")
    }
    fn weight(&self) -> usize {
        RatFun::weight(self)
    }
}

/// Solves `A X = B` for square `A` by Gauss-Jordan elimination, choosing
/// in each column the nonzero pivot of least weight. `b` holds the
/// right-hand sides as columns (row-major, one row per equation).
pub fn solve<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<Vec<F>>) -> Result<Vec<Vec<F>>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side has the wrong number of rows");
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].weight())
            .ok_or(Error::Singular)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = F::one().div(&a[col][col]);
        for v in a[col].iter_mut().skip(col) {
            *v = v.mul(&inv);
        }
        for v in b[col].iter_mut() {
            *v = v.mul(&inv);
        }
        let (prow_a, prow_b) = (a[col].clone(), b[col].clone());
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                if !prow_a[c].is_zero() {
                    a[r][c] = a[r][c].sub(&factor.mul(&prow_a[c]));
                }
            }
            for (c, pv) in prow_b.iter().enumerate() {
                if !pv.is_zero() {
                    b[r][c] = b[r][c].sub(&factor.mul(pv));
                }
            }
        }
    }
    Ok(b)
}

/// Inverse of a square matrix.
pub fn inverse<F: Field>(a: Vec<Vec<F>>) -> Result<Vec<Vec<F>>> {
    let n = a.len();
    let id = (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect();
    solve(a, id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn inverts_rational_matrix() {
        let a = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]];
        let inv = inverse(a).unwrap();
        assert_eq!(inv, vec![vec![rat(1, 1), rat(-1, 1)], vec![rat(-1, 1), rat(2, 1)]]);
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert_eq!(inverse(a), Err(Error::Singular));
    }

    #[test]
    fn solves_over_rational_functions() {
        let t = RatFun::t();
        let one = RatFun::one();
        // [t 1; 1 1] x = [t+1; 2]  =>  x = (1, 1)
        let a = vec![vec![t.clone(), one.clone()], vec![one.clone(), one.clone()]];
        let b = vec![vec![&t + &one], vec![RatFun::from_int(2)]];
        let x = solve(a, b).unwrap();
        assert_eq!(x, vec![vec![one.clone()], vec![one]]);
    }
}
