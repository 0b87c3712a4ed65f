//! Semi-standard reverse tableaux and the Jack tableau weight.

use std::fmt;

use crate::arith::{RatFun, TauPoly};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A filling of a Young diagram with entries in `1..=rank`, strictly
/// decreasing down columns and weakly decreasing along rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReverseTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    rank: usize,
}

impl ReverseTableau {
    pub fn new(rows: Vec<Vec<usize>>, rank: usize) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(&lens)
            .map_err(|_| Error::InvalidTableau(format!("row lengths {lens:?}")))?;
        let t = ReverseTableau { shape, rows, rank };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > self.rank {
                    return Err(Error::InvalidTableau(format!("entry {v} outside 1..={}", self.rank)));
                }
                if j > 0 && row[j - 1] < v {
                    return Err(Error::InvalidTableau(format!("row {} increases", i + 1)));
                }
                if i > 0 && self.rows[i - 1][j] <= v {
                    return Err(Error::InvalidTableau(format!("column {} not strictly decreasing", j + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at the 1-based cell `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// `content[k]` = number of entries equal to `k + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut c = vec![0; self.rank];
        for v in self.rows.iter().flatten() {
            c[v - 1] += 1;
        }
        c
    }

    /// Shape formed by the entries `>= k`.
    pub fn shape_at_least(&self, k: usize) -> Partition {
        let lens: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().take_while(|&&v| v >= k).count())
            .collect();
        Partition::new(&lens).expect("entries >= k form a partition shape")
    }
}

impl fmt::Display for ReverseTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// All reverse tableaux of the given shape and rank, in lexicographic
/// order of their row-major entry sequences.
pub fn enumerate_rt(shape: &Partition, rank: usize) -> Vec<ReverseTableau> {
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fill(&cells, 0, rank, &mut rows, shape, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    rank: usize,
    rows: &mut Vec<Vec<usize>>,
    shape: &Partition,
    out: &mut Vec<ReverseTableau>,
) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(ReverseTableau {
            shape: shape.clone(),
            rows: rows.clone(),
            rank,
        });
        return;
    };
    let mut hi = rank;
    if j > 1 {
        hi = hi.min(rows[i - 1][j - 2]);
    }
    if i > 1 {
        hi = hi.min(rows[i - 2][j - 1].saturating_sub(1));
    }
    for v in 1..=hi {
        rows[i - 1].push(v);
        fill(cells, k + 1, rank, rows, shape, out);
        rows[i - 1].pop();
    }
}

/// `b_λ(s) = (a + (l + 1) t) / (a + 1 + l t)` for the cell with arm `a`, leg `l`.
fn hook_ratio(shape: &Partition, i: usize, j: usize) -> RatFun {
    let (a, l) = shape.arm_leg(i, j).expect("cell inside shape");
    let (a, l) = (a as i64, l as i64);
    RatFun::new(TauPoly::linear(a, l + 1), TauPoly::linear(a + 1, l)).expect("nonzero hook denominator")
}

/// Weight of the horizontal strip `outer / inner`: the product over cells
/// of `inner` lying in a row that meets the strip but in a column that
/// does not, of `b_inner(s) / b_outer(s)`.
pub fn strip_weight(outer: &Partition, inner: &Partition) -> RatFun {
    let mut w = RatFun::one();
    for (i, j) in inner.cells() {
        let row_meets = outer.part(i - 1) > inner.part(i - 1);
        let col_meets = outer.conjugate().part(j - 1) > inner.conjugate().part(j - 1);
        if row_meets && !col_meets {
            w = &w * &hook_ratio(inner, i, j);
            w = w.checked_div(&hook_ratio(outer, i, j)).expect("hook ratio is nonzero");
        }
    }
    w
}

/// The Jack weight of a reverse tableau: the product of strip weights
/// along the chain of shapes `{entries >= rank} ⊂ {entries >= rank-1} ⊂ ...`.
pub fn psi_weight(t: &ReverseTableau) -> Result<RatFun> {
    t.validate()?;
    let mut w = RatFun::one();
    let mut inner = Partition::empty();
    for k in (1..=t.rank).rev() {
        let outer = t.shape_at_least(k);
        if outer != inner {
            w = &w * &strip_weight(&outer, &inner);
        }
        inner = outer;
    }
    Ok(w)
}
