//! Tableaux on (skew) shapes, their readings, weights and the semistandard and
//! Littlewood-Richardson conditions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::{Letter, Word};
use crate::partition::{Partition, SkewShape};

/// A filling of a skew shape. A `None` entry is a hole; holes only appear while
/// cascading and every other public entry point rejects them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    /// `rows[r - 1]` holds the skew cells of row `r`, left to right.
    rows: Vec<Vec<Option<Letter>>>,
}

impl Tableau {
    /// Build a proper tableau from the skew cells of each row.
    pub fn new(shape: SkewShape, rows: Vec<Vec<Letter>>) -> Result<Self> {
        Self::with_holes(
            shape,
            rows.into_iter()
                .map(|r| r.into_iter().map(Some).collect())
                .collect(),
        )
    }

    pub fn with_holes(shape: SkewShape, mut rows: Vec<Vec<Option<Letter>>>) -> Result<Self> {
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(shape.rows(), Vec::new());
        for (k, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(k + 1) {
                return Err(Error::SizeMismatch {
                    expected: shape.row_len(k + 1),
                    found: row.len(),
                });
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Straight-shape tableau from signed rows (barred letters negative).
    pub fn from_signed_rows(rows: &[&[i32]]) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let letters = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Letter::from_signed(v))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(SkewShape::straight(outer), letters)
    }

    /// Skew tableau from signed rows holding only the skew cells.
    pub fn from_signed_skew(outer: &[u32], inner: &[u32], rows: &[&[i32]]) -> Result<Self> {
        let shape = SkewShape::new(
            Partition::new(outer.to_vec())?,
            Partition::new(inner.to_vec())?,
        )?;
        let letters = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| Letter::from_signed(v))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(shape, letters)
    }

    /// The empty tableau on `λ ∖ λ`.
    pub fn empty(shape: Partition) -> Self {
        let rows = vec![Vec::new(); shape.len()];
        Tableau {
            shape: SkewShape::new(shape.clone(), shape).expect("λ ⊆ λ"),
            rows,
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Option<Letter>>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Entry at 1-based `(row, col)`; `None` off the shape or at a hole.
    pub fn get(&self, r: usize, c: usize) -> Option<Letter> {
        if !self.shape.contains(r, c) {
            return None;
        }
        self.rows[r - 1][c - self.shape.row_start(r)]
    }

    pub(crate) fn slot_mut(&mut self, r: usize, c: usize) -> &mut Option<Letter> {
        let start = self.shape.row_start(r);
        &mut self.rows[r - 1][c - start]
    }

    pub fn is_proper(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Option::is_some))
    }

    pub fn first_hole(&self) -> Option<(usize, usize)> {
        self.shape
            .cells()
            .into_iter()
            .find(|&(r, c)| self.get(r, c).is_none())
    }

    pub fn ensure_proper(&self) -> Result<()> {
        match self.first_hole() {
            Some((r, c)) => Err(Error::Hole(r, c)),
            None => Ok(()),
        }
    }

    pub fn ensure_unbarred(&self) -> Result<()> {
        for (r, c) in self.shape.cells() {
            if let Some(l) = self.get(r, c) {
                if l.is_barred() {
                    return Err(Error::BarredLetter {
                        letter: l,
                        row: r,
                        col: c,
                    });
                }
            }
        }
        Ok(())
    }

    /// Filled cells in far-eastern reading order, with their letters.
    pub fn reading_entries(&self) -> Vec<((usize, usize), Letter)> {
        self.shape
            .reading_cells()
            .into_iter()
            .filter_map(|(r, c)| self.get(r, c).map(|l| ((r, c), l)))
            .collect()
    }

    /// Far-eastern reading: columns right to left, each read top to bottom. Holes are skipped.
    pub fn reading(&self) -> Word {
        Word(self.reading_entries().into_iter().map(|(_, l)| l).collect())
    }

    pub fn max_value(&self) -> u32 {
        self.letters().map(Letter::value).max().unwrap_or(0)
    }

    pub fn has_barred(&self) -> bool {
        self.letters().any(Letter::is_barred)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.rows.iter().flat_map(|r| r.iter().flatten().copied())
    }

    /// Row and column conditions under the letter order, skipping holes.
    pub fn satisfies_semistandard_condition(&self) -> bool {
        for (r, c) in self.shape.cells() {
            let Some(x) = self.get(r, c) else { continue };
            if let Some(right) = self.get(r, c + 1) {
                if x > right {
                    return false;
                }
            }
            if let Some(below) = self.get(r + 1, c) {
                if x >= below {
                    return false;
                }
            }
        }
        true
    }

    /// Refill `shape` from a far-eastern reading. Inverse of [`Tableau::reading`] on proper
    /// tableaux of a known shape.
    pub fn from_reading(shape: SkewShape, word: &Word) -> Result<Self> {
        let cells = shape.reading_cells();
        if cells.len() != word.len() {
            return Err(Error::SizeMismatch {
                expected: cells.len(),
                found: word.len(),
            });
        }
        let mut rows: Vec<Vec<Option<Letter>>> = (1..=shape.rows())
            .map(|r| vec![None; shape.row_len(r)])
            .collect();
        for (&(r, c), &l) in cells.iter().zip(word.letters()) {
            rows[r - 1][c - shape.row_start(r)] = Some(l);
        }
        Tableau::with_holes(shape, rows)
    }

    /// Semistandardness of a proper tableau.
    pub fn is_semistandard(&self) -> Result<bool> {
        self.ensure_proper()?;
        Ok(self.satisfies_semistandard_condition())
    }

    /// Semistandard with a lattice reading, skipping holes. Barred letters are rejected.
    pub fn satisfies_lr_condition(&self) -> Result<bool> {
        self.ensure_unbarred()?;
        Ok(self.satisfies_semistandard_condition() && is_lattice_word(&self.reading())?)
    }

    pub fn is_littlewood_richardson(&self) -> Result<bool> {
        self.ensure_proper()?;
        self.satisfies_lr_condition()
    }

    pub fn gl_weight(&self) -> GlWeight {
        let mut counts = BTreeMap::new();
        for l in self.letters() {
            *counts.entry(l).or_insert(0) += 1;
        }
        GlWeight(counts)
    }

    pub fn sp_weight(&self) -> SpWeight {
        SpWeight::of_letters(self.letters())
    }

    /// Signed rows, holes as `None`.
    pub fn to_signed_rows(&self) -> Vec<Vec<Option<i32>>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|l| l.map(Letter::to_signed)).collect())
            .collect()
    }
}

/// Whether every prefix has at least as many `i` as `i + 1`, for all `i`.
pub fn is_lattice_word(w: &Word) -> Result<bool> {
    let mut counts: Vec<usize> = vec![0; w.max_value() as usize + 2];
    for &l in w.letters() {
        if l.is_barred() {
            return Err(Error::BarredInWord(l));
        }
        let v = l.value() as usize;
        counts[v] += 1;
        if v > 1 && counts[v] > counts[v - 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Raw occurrence counts per letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GlWeight(pub BTreeMap<Letter, usize>);

impl GlWeight {
    pub fn count(&self, l: Letter) -> usize {
        self.0.get(&l).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Counts of `1, 2, ..., max` for an unbarred-only weight.
    pub fn unbarred_counts(&self) -> Option<Vec<u32>> {
        if self.0.keys().any(|l| l.is_barred()) {
            return None;
        }
        let max = self.0.keys().map(|l| l.value()).max().unwrap_or(0);
        Some(
            (1..=max)
                .map(|v| self.count(Letter::unbarred(v)) as u32)
                .collect(),
        )
    }

    /// The weight as a partition, when the counts of `1, 2, ...` are weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.unbarred_counts()?).ok()
    }

    pub fn from_partition(p: &Partition) -> Self {
        GlWeight(
            p.parts()
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(k, &c)| (Letter::unbarred(k as u32 + 1), c as usize))
                .collect(),
        )
    }
}

/// Coefficients of `ε_1, ε_2, ...`; trailing zeros are dropped so equal weights compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct SpWeight(Vec<i64>);

impl SpWeight {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        SpWeight(coeffs)
    }

    pub fn of_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut coeffs: Vec<i64> = Vec::new();
        for l in letters {
            let k = l.value() as usize;
            if coeffs.len() < k {
                coeffs.resize(k, 0);
            }
            coeffs[k - 1] += l.sp_sign() as i64;
        }
        SpWeight::new(coeffs)
    }

    pub fn of_word(w: &Word) -> Self {
        Self::of_letters(w.letters().iter().copied())
    }

    /// Coefficient of `ε_i` (1-based).
    pub fn coeff(&self, i: usize) -> i64 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn as_partition(&self) -> Option<Partition> {
        Partition::from_signed(&self.0).ok()
    }

    pub fn from_partition(p: &Partition) -> Self {
        SpWeight::new(p.parts().iter().map(|&x| x as i64).collect())
    }
}

impl From<Vec<i64>> for SpWeight {
    fn from(v: Vec<i64>) -> Self {
        SpWeight::new(v)
    }
}

impl From<SpWeight> for Vec<i64> {
    fn from(w: SpWeight) -> Vec<i64> {
        w.0
    }
}

impl fmt::Display for Tableau {
    /// Text block: one row per line, `.` for inner cells, `_` for holes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.shape.rows() {
            let mut tokens: Vec<String> =
                vec![".".to_string(); self.shape.inner().part(r) as usize];
            tokens.extend(self.rows[r - 1].iter().map(|l| match l {
                Some(l) => l.to_string(),
                None => "_".to_string(),
            }));
            writeln!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}
