//! Exhaustive enumeration of semistandard fillings.
//!
//! Cells are filled in far-eastern reading order, trying letters in increasing order, so
//! tableaux come out in lexicographic order of their readings. Reading order also makes
//! the row/column constraints one-sided: when a cell is filled its right neighbour and
//! the cell above are already known. Prefix conditions on the reading (lattice words,
//! sp-highest weight) and weight targets prune the search as it goes.

use crate::error::{Error, Result};
use crate::letter::{unbarred_alphabet, Letter};
use crate::partition::{Partition, SkewShape};
use crate::tableau::{GlWeight, SpWeight, Tableau};

/// Optional weight filter for [`enumerate_ssyt`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightFilter {
    Sp(SpWeight),
    Gl(GlWeight),
}

/// Builder for a pruned enumeration.
#[derive(Clone, Debug)]
pub struct Enumeration {
    shape: SkewShape,
    alphabet: Vec<Letter>,
    weight: Option<WeightFilter>,
    lattice: bool,
    sp_highest: bool,
}

impl Enumeration {
    pub fn new(shape: SkewShape, letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut alphabet: Vec<Letter> = letters.into_iter().collect();
        alphabet.sort();
        alphabet.dedup();
        Enumeration {
            shape,
            alphabet,
            weight: None,
            lattice: false,
            sp_highest: false,
        }
    }

    pub fn weight(mut self, w: WeightFilter) -> Self {
        self.weight = Some(w);
        self
    }

    /// Keep only lattice readings (unbarred alphabets only).
    pub fn lattice(mut self) -> Self {
        self.lattice = true;
        self
    }

    /// Keep only readings satisfying the sp-highest prefix condition.
    pub fn sp_highest(mut self) -> Self {
        self.sp_highest = true;
        self
    }

    pub fn iter(&self) -> SsytIter {
        SsytIter::new(self.clone())
    }
}

/// All semistandard tableaux of `shape` with entries in `letters`, optionally restricted to
/// a weight, in lexicographic order of their readings.
pub fn enumerate_ssyt(
    shape: SkewShape,
    letters: impl IntoIterator<Item = Letter>,
    weight_filter: Option<WeightFilter>,
) -> SsytIter {
    let mut e = Enumeration::new(shape, letters);
    e.weight = weight_filter;
    e.iter()
}

/// All Littlewood-Richardson tableaux of `shape` and weight `weight`.
pub fn enumerate_lr(shape: SkewShape, weight: &Partition) -> Result<SsytIter> {
    if shape.size() != weight.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            found: weight.size(),
        });
    }
    Ok(
        Enumeration::new(shape, unbarred_alphabet(weight.len() as u32))
            .weight(WeightFilter::Gl(GlWeight::from_partition(weight)))
            .lattice()
            .iter(),
    )
}

enum Pruner {
    Sp { target: Vec<i64>, cur: Vec<i64> },
    Gl { target: Vec<usize>, cur: Vec<usize> },
}

/// Iterator state of a depth-first search over cells in reading order.
pub struct SsytIter {
    shape: SkewShape,
    alphabet: Vec<Letter>,
    cells: Vec<(usize, usize)>,
    right: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    assign: Vec<usize>,
    cursor: Vec<usize>,
    weight: Option<Pruner>,
    lattice: Option<Vec<usize>>,
    balance: Option<Vec<i64>>,
    yielded: bool,
    done: bool,
}

impl SsytIter {
    fn new(e: Enumeration) -> Self {
        let cells = e.shape.reading_cells();
        let index_of = |cell: (usize, usize)| cells.iter().position(|&x| x == cell);
        let right = cells.iter().map(|&(r, c)| index_of((r, c + 1))).collect();
        let above = cells
            .iter()
            .map(|&(r, c)| if r > 1 { index_of((r - 1, c)) } else { None })
            .collect();
        let max_value = e.alphabet.iter().map(|l| l.value()).max().unwrap_or(0) as usize;
        let mut done = false;
        let weight = e.weight.map(|w| match w {
            WeightFilter::Sp(t) => {
                let mut target = t.coeffs().to_vec();
                if target.len() > max_value {
                    // a nonzero coefficient no letter can reach
                    done |= target[max_value..].iter().any(|&x| x != 0);
                }
                target.resize(max_value, 0);
                Pruner::Sp {
                    target,
                    cur: vec![0; max_value],
                }
            }
            WeightFilter::Gl(t) => {
                done |= t.0.keys().any(|l| !e.alphabet.contains(l));
                done |= t.total() != cells.len();
                let target = e.alphabet.iter().map(|&l| t.count(l)).collect::<Vec<_>>();
                let n = target.len();
                Pruner::Gl {
                    target,
                    cur: vec![0; n],
                }
            }
        });
        let lattice = e.lattice.then(|| vec![0; max_value + 2]);
        let balance = e.sp_highest.then(|| vec![0; max_value + 2]);
        let n = cells.len();
        let mut it = SsytIter {
            shape: e.shape,
            alphabet: e.alphabet,
            cells,
            right,
            above,
            assign: Vec::with_capacity(n),
            cursor: vec![0; n + 1],
            weight,
            lattice,
            balance,
            yielded: false,
            done,
        };
        if !it.done {
            it.cursor[0] = it.lower(0);
            it.done = !it.feasible(n);
        }
        it
    }

    fn lower(&self, k: usize) -> usize {
        match self.above.get(k).copied().flatten() {
            Some(a) => self.assign[a] + 1,
            None => 0,
        }
    }

    fn upper(&self, k: usize) -> usize {
        match self.right[k] {
            Some(r) => self.assign[r] + 1,
            None => self.alphabet.len(),
        }
    }

    /// Whether the weight target is still reachable with `remaining` cells left.
    fn feasible(&self, remaining: usize) -> bool {
        match &self.weight {
            None => true,
            Some(Pruner::Sp { target, cur }) => {
                let dist: i64 = target.iter().zip(cur).map(|(t, c)| (t - c).abs()).sum();
                dist <= remaining as i64 && (remaining as i64 - dist) % 2 == 0
            }
            Some(Pruner::Gl { target, cur }) => target.iter().zip(cur).all(|(t, c)| c <= t),
        }
    }

    /// Apply letter `idx`; returns false (with the state restored) if a prefix rule breaks.
    fn push(&mut self, idx: usize) -> bool {
        let l = self.alphabet[idx];
        let v = l.value() as usize;
        let mut ok = true;
        match &mut self.weight {
            Some(Pruner::Sp { cur, .. }) => cur[v - 1] += l.sp_sign() as i64,
            Some(Pruner::Gl { cur, .. }) => cur[idx] += 1,
            None => {}
        }
        if let Some(counts) = &mut self.lattice {
            counts[v] += 1;
            ok &= v == 1 || counts[v] <= counts[v - 1];
        }
        if let Some(bal) = &mut self.balance {
            if l.is_barred() {
                bal[v] -= 1;
                ok &= bal[v] >= 0;
                if v > 1 {
                    bal[v - 1] += 1;
                }
            } else {
                bal[v] += 1;
                if v > 1 {
                    bal[v - 1] -= 1;
                    ok &= bal[v - 1] >= 0;
                }
            }
        }
        self.assign.push(idx);
        ok &= self.feasible(self.cells.len() - self.assign.len());
        if !ok {
            self.pop();
        }
        ok
    }

    fn pop(&mut self) {
        let idx = self.assign.pop().expect("pop on empty assignment");
        let l = self.alphabet[idx];
        let v = l.value() as usize;
        match &mut self.weight {
            Some(Pruner::Sp { cur, .. }) => cur[v - 1] -= l.sp_sign() as i64,
            Some(Pruner::Gl { cur, .. }) => cur[idx] -= 1,
            None => {}
        }
        if let Some(counts) = &mut self.lattice {
            counts[v] -= 1;
        }
        if let Some(bal) = &mut self.balance {
            if l.is_barred() {
                bal[v] += 1;
                if v > 1 {
                    bal[v - 1] -= 1;
                }
            } else {
                bal[v] -= 1;
                if v > 1 {
                    bal[v - 1] += 1;
                }
            }
        }
    }

    fn build(&self) -> Tableau {
        let mut rows: Vec<Vec<Letter>> = (1..=self.shape.rows())
            .map(|r| Vec::with_capacity(self.shape.row_len(r)))
            .collect();
        let mut placed: Vec<((usize, usize), Letter)> = self
            .cells
            .iter()
            .zip(&self.assign)
            .map(|(&cell, &i)| (cell, self.alphabet[i]))
            .collect();
        placed.sort_by_key(|&(cell, _)| cell);
        for ((r, _), l) in placed {
            rows[r - 1].push(l);
        }
        Tableau::new(self.shape.clone(), rows).expect("cells come from the shape")
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let n = self.cells.len();
        if self.yielded {
            self.yielded = false;
            if n == 0 {
                self.done = true;
                return None;
            }
            self.pop();
        }
        loop {
            let d = self.assign.len();
            if d == n {
                self.yielded = true;
                return Some(self.build());
            }
            let hi = self.upper(d);
            let mut advanced = false;
            while self.cursor[d] < hi {
                let idx = self.cursor[d];
                self.cursor[d] += 1;
                if self.push(idx) {
                    self.cursor[d + 1] = if d + 1 < n { self.lower(d + 1) } else { 0 };
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
        }
    }
}
