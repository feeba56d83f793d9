//! Partitions and skew shapes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. Trailing zeros are dropped on
/// construction, so `(2,1,0)` and `(2,1)` are the same partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Interpret a signed vector as a partition (used for weights).
    pub fn from_signed(v: &[i64]) -> Result<Self> {
        if v.iter().any(|&x| x < 0) || v.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(v.to_vec()));
        }
        Partition::new(v.iter().map(|&x| x as u32).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (1-based), zero past the length.
    #[inline]
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// `self ⊆ other` as Young diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (1..=self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// Add or remove a box in row `row` (1-based), if the result is a partition.
    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        let mut parts = self.0.clone();
        if row == 0 || row > parts.len() + 1 {
            return None;
        }
        if row == parts.len() + 1 {
            parts.push(0);
        }
        parts[row - 1] += 1;
        Partition::new(parts).ok()
    }

    pub fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row == 0 || self.part(row) == 0 {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row - 1] -= 1;
        Partition::new(parts).ok()
    }

    /// Dominance order on partitions of possibly different sizes: all partial sums of
    /// `self` bounded by those of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 1..=len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return false;
            }
        }
        true
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `size`, in reverse lexicographic order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    partitions_bounded(size, size, usize::MAX)
}

/// Partitions of `size` with parts at most `max_part` and at most `max_len` parts,
/// in reverse lexicographic order.
pub fn partitions_bounded(size: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    fn go(
        rem: usize,
        max_part: usize,
        len_left: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=max_part.min(rem)).rev() {
            cur.push(p as u32);
            go(rem - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(size, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions `ν` of `size` whose conjugate has only even parts, i.e. `ν = (2δ)'`.
pub fn even_conjugate_weights(size: usize) -> Result<Vec<Partition>> {
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    // ν = (2δ)' is exactly a partition whose distinct parts come in pairs of equal rows:
    // build it from δ ⊢ size/2 and conjugate.
    let mut out: Vec<Partition> = partitions_of(size / 2)
        .into_iter()
        .map(|d| Partition(d.0.iter().map(|&x| 2 * x).collect()).conjugate())
        .collect();
    out.sort_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Whether every part of the conjugate is even.
pub fn is_even_conjugate(p: &Partition) -> bool {
    p.conjugate().parts().iter().all(|&x| x % 2 == 0)
}

/// All partitions contained in `outer`, in reverse lexicographic order.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    fn go(outer: &Partition, row: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > outer.len() {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            return;
        }
        let top = outer.part(row).min(bound);
        for p in (0..=top).rev() {
            cur.push(p);
            go(outer, row + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// A skew shape `outer ∖ inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of skew cells in row `r`.
    pub fn row_len(&self, r: usize) -> usize {
        (self.outer.part(r) - self.inner.part(r)) as usize
    }

    /// First column of row `r` that belongs to the skew shape.
    pub fn row_start(&self, r: usize) -> usize {
        self.inner.part(r) as usize + 1
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && c > self.inner.part(r) as usize && c <= self.outer.part(r) as usize
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .flat_map(|r| (self.row_start(r)..=self.outer.part(r) as usize).map(move |c| (r, c)))
            .collect()
    }

    /// Cells in far-eastern reading order: columns right to left, each top to bottom.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let width = self.outer.part(1) as usize;
        let mut out = Vec::with_capacity(self.size());
        for c in (1..=width).rev() {
            for r in 1..=self.rows() {
                if self.contains(r, c) {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Last row holding a skew cell; the last cell of the reading lies in this row.
    pub fn last_skew_row(&self) -> Option<usize> {
        (1..=self.rows()).rev().find(|&r| self.row_len(r) > 0)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Position of a cell in the far-eastern reading, as a sortable key.
#[inline]
pub fn reading_key(cell: (usize, usize)) -> (std::cmp::Reverse<usize>, usize) {
    (std::cmp::Reverse(cell.1), cell.0)
}
