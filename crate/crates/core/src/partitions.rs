//! Integer partitions, their partial orders and diagram statistics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{Rational, TauPoly};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers with trailing
/// zeros removed.
///
/// Ordered by size first, then lexicographically on the parts; within a
/// fixed size this is a linear extension of the dominance order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates and trims trailing zeros, so `(4,0)` and `(4)` coincide.
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let len = parts.iter().take_while(|&&p| p > 0).count();
        Ok(Partition(parts[..len].to_vec()))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based); zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Parts padded with zeros to length `n` (`n >= len()`).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// `self_i >= other_i` for all `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(o, s)| s >= o)
    }

    /// Every prefix sum of `self` is at least the matching prefix sum of `other`.
    pub fn weakly_dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        (0..n).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a >= b
        })
    }

    /// Weak dominance together with equal sizes.
    pub fn dominates(&self, other: &Partition) -> bool {
        self.size() == other.size() && self.weakly_dominates(other)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `z = prod_i i^{m_i} m_i!`.
    pub fn z_factor(&self) -> Rational {
        let mut z = BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let m = self.multiplicity(part);
            for k in 1..=m {
                z *= BigInt::from(part) * BigInt::from(k);
            }
            i += m;
        }
        Rational::from_integer(z)
    }

    /// Cells `(i, j)` in row-major order, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.part(i - 1) >= j
    }

    /// Co-arm and co-leg `(j - 1, i - 1)` of the 1-based cell `(i, j)`.
    pub fn coarm_coleg(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        if !self.has_cell(i, j) {
            return Err(Error::CellOutside(i, j));
        }
        Ok((j - 1, i - 1))
    }

    /// Arm `λ_i - j` and leg `λ'_j - i` of the 1-based cell `(i, j)`.
    pub fn arm_leg(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        if !self.has_cell(i, j) {
            return Err(Error::CellOutside(i, j));
        }
        let leg = self.0.iter().skip(i).take_while(|&&p| p >= j).count();
        Ok((self.part(i - 1) - j, leg))
    }

    /// The point with coordinates `λ_i + (n - i) t`, `i = 1..n`.
    pub fn shifted_point(&self, n: usize) -> Result<Vec<TauPoly>> {
        if self.len() > n {
            return Err(Error::TooLong { len: self.len(), n });
        }
        Ok((0..n)
            .map(|i| TauPoly::linear(self.part(i) as i64, (n - 1 - i) as i64))
            .collect())
    }

    /// Partitions obtained by adding one box, each paired with the 0-based
    /// row that received it; only rows `< max_len` are used.
    pub fn add_one_box(&self, max_len: usize) -> Vec<(Partition, usize)> {
        (0..=self.len())
            .filter(|&i| i < max_len && (i == 0 || self.part(i - 1) > self.part(i)))
            .map(|i| {
                let mut v = self.padded(i + 1);
                v[i] += 1;
                (Partition(v), i)
            })
            .collect()
    }

    /// All partitions of `k` with at most `max_len` parts, ascending.
    pub fn of_size(k: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in 1..=max_part.min(rem) {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, k, max_len, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

/// All partitions of size at most `d` with at most `n` parts, sorted by
/// size and then lexicographically.
pub fn enumerate(d: usize, n: usize) -> Vec<Partition> {
    (0..=d).flat_map(|k| Partition::of_size(k, n)).collect()
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(&v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `3,2`, `(3,2)`, `[3,2]`, and the empty string for `()`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("{s:?}: bad part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

/// Builds a partition from literal parts; panics if they are not weakly decreasing.
#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(&[$($p),+]).expect("invalid partition literal")
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn containment() {
        assert!(part![3, 1].contains(&part![2]));
        assert!(!part![2].contains(&part![1, 1]));
        assert!(part![2, 2].contains(&part![2, 2]));
        assert!(part![1].contains(&part![]));
    }

    #[test]
    fn dominance() {
        assert!(part![4, 0].dominates(&part![3, 1]));
        assert!(part![3, 1].weakly_dominates(&part![2]));
        assert!(!part![2, 2].dominates(&part![3, 1]));
        assert!(!part![3, 1].dominates(&part![2]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(part![3, 2].conjugate(), part![2, 2, 1]);
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![4].conjugate(), Partition::column(4));
    }

    #[test]
    fn z_values() {
        assert_eq!(part![1].z_factor(), crate::arith::rat(1, 1));
        assert_eq!(part![1, 1].z_factor(), crate::arith::rat(2, 1));
        assert_eq!(part![2, 1].z_factor(), crate::arith::rat(2, 1));
        assert_eq!(part![2, 2, 1].z_factor(), crate::arith::rat(8, 1));
        assert_eq!(part![].z_factor(), crate::arith::rat(1, 1));
    }

    #[test]
    fn coarm_coleg_values() {
        let l = part![3, 2];
        assert_eq!(l.coarm_coleg(1, 1).unwrap(), (0, 0));
        assert_eq!(l.coarm_coleg(1, 3).unwrap(), (2, 0));
        assert_eq!(l.coarm_coleg(2, 2).unwrap(), (1, 1));
        assert_eq!(l.coarm_coleg(2, 3), Err(Error::CellOutside(2, 3)));
        assert_eq!(l.arm_leg(1, 1).unwrap(), (2, 1));
        assert_eq!(l.arm_leg(1, 3).unwrap(), (0, 0));
    }

    #[test]
    fn shifted_points() {
        assert_eq!(
            part![3, 2].shifted_point(2).unwrap(),
            vec![TauPoly::linear(3, 1), TauPoly::linear(2, 0)]
        );
        assert_eq!(
            part![].shifted_point(3).unwrap(),
            vec![TauPoly::linear(0, 2), TauPoly::linear(0, 1), TauPoly::zero()]
        );
        assert_eq!(part![1].shifted_point(1).unwrap(), vec![TauPoly::from_int(1)]);
        assert_eq!(part![1, 1].shifted_point(1), Err(Error::TooLong { len: 2, n: 1 }));
    }

    #[test]
    fn twelve_nodes_for_degree_five_in_two_variables() {
        let got: Vec<String> = enumerate(5, 2).iter().map(|p| format!("{:?}", p.padded(2))).collect();
        let want = [
            [0, 0], [1, 0], [1, 1], [2, 0], [2, 1], [3, 0], [2, 2], [3, 1], [4, 0], [3, 2], [4, 1], [5, 0],
        ];
        assert_eq!(got, want.iter().map(|w| format!("{:?}", w.to_vec())).collect::<Vec<_>>());
        assert_eq!(enumerate(0, 4), vec![part![]]);
        assert_eq!(enumerate(3, 1), vec![part![], part![1], part![2], part![3]]);
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!("3,2".parse::<Partition>().unwrap(), part![3, 2]);
        assert_eq!("(4,0)".parse::<Partition>().unwrap(), part![4]);
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), part![2, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(part![3, 2].to_string(), "(3,2)");
        assert_eq!(part![].to_string(), "()");
        assert_eq!(serde_json::to_string(&part![3, 2]).unwrap(), "[3,2]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn covers() {
        let got: Vec<_> = part![2, 1].add_one_box(3).into_iter().map(|(p, _)| p).collect();
        assert_eq!(got, vec![part![3, 1], part![2, 2], part![2, 1, 1]]);
        assert_eq!(part![2, 1].add_one_box(2).len(), 2);
    }
}
