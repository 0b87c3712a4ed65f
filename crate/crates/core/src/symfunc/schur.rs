use super::mpoly::MPoly;
use super::{Basis, SymPoly};
use crate::arith::RatFun;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Alternant `det(x_i^{e_j})` as an explicit polynomial.
fn alternant(exponents: &[u32]) -> MPoly {
    let n = exponents.len();
    let mut out = MPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permutations(n, &mut perm, &mut |p, sign| {
        let mut e = vec![0; n];
        for (i, &j) in p.iter().enumerate() {
            e[i] = exponents[j];
        }
        out.add_term(e, RatFun::from_int(sign));
    });
    out
}

/// Visits every permutation with its sign (Heap's algorithm).
fn heap_permutations(n: usize, perm: &mut [usize], visit: &mut impl FnMut(&[usize], i64)) {
    let mut c = vec![0; n];
    let mut sign = 1;
    visit(perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Schur polynomial `s_λ` in `n` variables by the bialternant formula
/// `det(x_i^{λ_j + n - j}) / det(x_i^{n - j})`, in the monomial basis.
pub fn schur(lambda: &Partition, n: usize) -> Result<SymPoly> {
    if lambda.len() > n {
        return Err(Error::TooLong { len: lambda.len(), n });
    }
    if n == 0 {
        return Ok(SymPoly::from_terms(0, Basis::Monomial, [(Partition::empty(), RatFun::one())]));
    }
    let exps: Vec<u32> = (0..n).map(|j| (lambda.part(j) + n - 1 - j) as u32).collect();
    let mut q = alternant(&exps);
    for i in 0..n {
        for j in i + 1..n {
            q = q.div_by_difference(i, j);
        }
    }
    Ok(SymPoly::from_mpoly(&q))
}
