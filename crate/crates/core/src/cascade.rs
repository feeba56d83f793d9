//! Cascading ordered sequences `1, 2, ..., m` of fillings, and the two injections that
//! strip one `{i, ī}` pair (`iota_sp`) or one cascaded sequence (`iota_lr`) off a tableau.
//!
//! Both injections remove the first skew cell of the last nonempty skew row: for a
//! highest weight tableau the skew shape is `λ ∖ μ` with `μ` its weight, for a
//! Littlewood-Richardson tableau it is the tableau's own shape. That cell is the last
//! one of the far-eastern reading. When `μ_{ℓ(λ)} = 0` it is the bottom-left cell
//! `(ℓ(λ), 1)`.

use std::fmt;

use crate::crystal::{is_sp_highest, Rank};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::partition::{is_even_conjugate, reading_key, Partition, SkewShape};
use crate::tableau::Tableau;

pub type Cell = (usize, usize);

/// Cells carrying the fillings `1, ..., m`: `cells[k - 1]` holds `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CascadeSequence {
    cells: Vec<Cell>,
}

impl CascadeSequence {
    pub fn new(cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidSequence("empty sequence".into()));
        }
        for (k, c) in cells.iter().enumerate() {
            if cells[..k].contains(c) {
                return Err(Error::InvalidSequence(format!("cell {c:?} repeated")));
            }
        }
        Ok(CascadeSequence { cells })
    }

    pub fn m(&self) -> u32 {
        self.cells.len() as u32
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Cell of filling `k` (1-based).
    pub fn cell(&self, k: u32) -> Cell {
        self.cells[k as usize - 1]
    }

    /// Check that the cells lie in `t`, carry `1, ..., m` and follow the reading order.
    pub fn validate(&self, t: &Tableau) -> Result<()> {
        if let Some(w) = self
            .cells
            .windows(2)
            .find(|w| reading_key(w[0]) >= reading_key(w[1]))
        {
            return Err(Error::InvalidSequence(format!(
                "{:?} does not precede {:?} in the reading",
                w[0], w[1]
            )));
        }
        for (k, &(r, c)) in self.cells.iter().enumerate() {
            let want = Letter::unbarred(k as u32 + 1);
            match t.get(r, c) {
                Some(l) if l == want => {}
                Some(l) => {
                    return Err(Error::InvalidSequence(format!(
                        "({r}, {c}) holds {l}, expected {want}"
                    )))
                }
                None => {
                    return Err(Error::InvalidSequence(format!(
                        "({r}, {c}) is not a filled cell"
                    )))
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CascadeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, (r, c)) in self.cells.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({r},{c})")?;
        }
        f.write_str("]")
    }
}

/// The three side conditions on a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conditions {
    /// (I) the 1 is the leftmost filled cell of its row.
    pub leftmost_one: bool,
    /// (II) no `i` strictly between `i ∈ s` and `i+1 ∈ s` in the reading.
    pub no_repeat_between: bool,
    /// (III) the `m` is the last `m` of the reading.
    pub last_m: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.leftmost_one && self.no_repeat_between && self.last_m
    }
}

pub fn check_conditions(t: &Tableau, s: &CascadeSequence) -> Result<Conditions> {
    s.validate(t)?;
    let entries = t.reading_entries();
    let pos = |cell: Cell| {
        entries
            .iter()
            .position(|&(c, _)| c == cell)
            .expect("validated cell")
    };

    let (r1, c1) = s.cell(1);
    let leftmost_one = (t.shape().row_start(r1)..c1).all(|c| t.get(r1, c).is_none());

    let mut no_repeat_between = true;
    for k in 1..s.m() {
        let (a, b) = (pos(s.cell(k)), pos(s.cell(k + 1)));
        let (lo, hi) = (a.min(b), a.max(b));
        let letter = Letter::unbarred(k);
        if entries[lo + 1..hi].iter().any(|&(_, l)| l == letter) {
            no_repeat_between = false;
        }
    }

    let m_letter = Letter::unbarred(s.m());
    let last_m = entries.iter().rposition(|&(_, l)| l == m_letter) == Some(pos(s.cell(s.m())));

    Ok(Conditions {
        leftmost_one,
        no_repeat_between,
        last_m,
    })
}

/// Delete the 1 (leaving a hole) and decrement `2, ..., m`. Other cells are untouched.
pub fn cascade(t: &Tableau, s: &CascadeSequence) -> Result<Tableau> {
    s.validate(t)?;
    let mut out = t.clone();
    let (r, c) = s.cell(1);
    *out.slot_mut(r, c) = None;
    for k in 2..=s.m() {
        let (r, c) = s.cell(k);
        *out.slot_mut(r, c) = Some(Letter::unbarred(k - 1));
    }
    Ok(out)
}

/// The sequence ending at the last letter `m` of the reading, where each `k` is the last
/// `k` before the chosen `k + 1`.
pub fn find_last_sequence(t: &Tableau) -> Result<CascadeSequence> {
    t.ensure_proper()?;
    t.ensure_unbarred()?;
    let entries = t.reading_entries();
    let Some(&(last_cell, last)) = entries.last() else {
        return Err(Error::EmptyTableau);
    };
    let m = last.value();
    if m == 1 {
        return Err(Error::SingletonSequence);
    }
    let mut cells = vec![last_cell];
    let mut at = entries.len() - 1;
    for k in (1..m).rev() {
        let want = Letter::unbarred(k);
        match entries[..at].iter().rposition(|&(_, l)| l == want) {
            Some(p) => {
                at = p;
                cells.push(entries[p].0);
            }
            None => {
                let (row, col) = entries[at].0;
                return Err(Error::IncompleteChain {
                    missing: k,
                    next: k + 1,
                    row,
                    col,
                });
            }
        }
    }
    cells.reverse();
    CascadeSequence::new(cells)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One step of a bijection trace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StepRecord {
    /// A barred letter removed from (or inserted into) a highest weight tableau.
    IotaSp {
        direction: Direction,
        letter: Letter,
        cell: Cell,
        shape_before: Partition,
        shape_after: Partition,
    },
    /// A sequence cascaded and its last cell deleted. Cells are in the coordinates of the
    /// larger tableau.
    IotaLr {
        direction: Direction,
        sequence: CascadeSequence,
        row_of_one: usize,
        deleted_cell: Cell,
        shape_before: SkewShape,
        shape_after: SkewShape,
    },
}

impl StepRecord {
    pub fn direction(&self) -> Direction {
        match self {
            StepRecord::IotaSp { direction, .. } | StepRecord::IotaLr { direction, .. } => {
                *direction
            }
        }
    }

    /// The same step seen from the other side.
    pub fn reversed(&self) -> StepRecord {
        let flip = |d: Direction| {
            if d == Direction::Forward {
                Direction::Inverse
            } else {
                Direction::Forward
            }
        };
        match self.clone() {
            StepRecord::IotaSp {
                direction,
                letter,
                cell,
                shape_before,
                shape_after,
            } => StepRecord::IotaSp {
                direction: flip(direction),
                letter,
                cell,
                shape_before: shape_after,
                shape_after: shape_before,
            },
            StepRecord::IotaLr {
                direction,
                sequence,
                row_of_one,
                deleted_cell,
                shape_before,
                shape_after,
            } => StepRecord::IotaLr {
                direction: flip(direction),
                sequence,
                row_of_one,
                deleted_cell,
                shape_before: shape_after,
                shape_after: shape_before,
            },
        }
    }

    pub fn row_of_one(&self) -> Option<usize> {
        match self {
            StepRecord::IotaLr { row_of_one, .. } => Some(*row_of_one),
            StepRecord::IotaSp { .. } => None,
        }
    }
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepRecord::IotaSp {
                direction: Direction::Forward,
                letter,
                cell,
                ..
            } => {
                write!(f, "iota_sp: deleted={letter} at ({},{})", cell.0, cell.1)
            }
            StepRecord::IotaSp {
                direction: Direction::Inverse,
                letter,
                cell,
                ..
            } => {
                write!(
                    f,
                    "iota_sp^-1: inserted={letter} at ({},{})",
                    cell.0, cell.1
                )
            }
            StepRecord::IotaLr {
                direction,
                sequence,
                row_of_one,
                ..
            } => {
                let name = if *direction == Direction::Forward {
                    "iota_lr"
                } else {
                    "iota_lr^-1"
                };
                write!(
                    f,
                    "{name}: s={sequence} m={} row_of_one={row_of_one}",
                    sequence.m()
                )
            }
        }
    }
}

/// Whether intermediate results are re-validated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Validation {
    #[default]
    Full,
    Off,
}

fn highest_weight_of(t: &Tableau) -> Result<Partition> {
    let wt = t.sp_weight();
    wt.as_partition()
        .ok_or_else(|| Error::NotDominant(wt.coeffs().to_vec()))
}

fn check_highest(t: &Tableau) -> Result<()> {
    if !t.is_semistandard()? {
        return Err(Error::NotSemistandard);
    }
    if !is_sp_highest(&t.reading(), Rank::Unbounded)? {
        return Err(Error::NotHighestWeight);
    }
    Ok(())
}

/// Delete the last barred letter of the reading and slide the rest of its row left.
pub fn iota_sp(t: &Tableau) -> Result<(Tableau, StepRecord)> {
    iota_sp_with(t, Validation::Full)
}

pub fn iota_sp_with(t: &Tableau, validation: Validation) -> Result<(Tableau, StepRecord)> {
    if !t.shape().is_straight() {
        return Err(Error::Validation(
            "highest weight tableaux have straight shape".into(),
        ));
    }
    if validation == Validation::Full {
        check_highest(t)?;
    } else {
        t.ensure_proper()?;
    }
    let lambda = t.shape().outer().clone();
    let mu = highest_weight_of(t)?;
    let Some((cell, letter)) = t
        .reading_entries()
        .into_iter()
        .rev()
        .find(|(_, l)| l.is_barred())
    else {
        return Err(Error::NoBarredLetter);
    };
    let skew = SkewShape::new(lambda.clone(), mu.clone()).map_err(|_| {
        Error::MalformedHighestWeight(format!("weight {mu} does not fit in {lambda}"))
    })?;
    let r = skew.last_skew_row().expect("a barred letter means λ ≠ μ");
    let expected = (r, skew.row_start(r));
    if cell != expected {
        return Err(Error::MalformedHighestWeight(format!(
            "last barred letter {letter} at ({}, {}), expected ({}, {})",
            cell.0, cell.1, expected.0, expected.1
        )));
    }
    let new_outer = lambda.with_box_removed(r).ok_or_else(|| {
        Error::MalformedHighestWeight(format!("cannot remove a box from row {r} of {lambda}"))
    })?;
    let mut rows: Vec<Vec<Letter>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|l| l.expect("proper")).collect())
        .collect();
    rows[r - 1].remove(cell.1 - 1);
    let out = Tableau::new(SkewShape::straight(new_outer.clone()), rows)?;
    if validation == Validation::Full {
        check_highest(&out).map_err(|e| Error::Validation(format!("iota_sp image: {e}")))?;
    }
    let record = StepRecord::IotaSp {
        direction: Direction::Forward,
        letter,
        cell,
        shape_before: lambda,
        shape_after: new_outer,
    };
    Ok((out, record))
}

/// Undo [`iota_sp`]: insert the barred letter `inserted` as the first skew cell of row `r`,
/// where `target_outer = sh(t) + ε_r`, shifting the rest of the row right.
pub fn iota_sp_inverse(t: &Tableau, target_outer: &Partition, inserted: Letter) -> Result<Tableau> {
    iota_sp_inverse_with(t, target_outer, inserted, Validation::Full).map(|(out, _)| out)
}

pub fn iota_sp_inverse_with(
    t: &Tableau,
    target_outer: &Partition,
    inserted: Letter,
    validation: Validation,
) -> Result<(Tableau, StepRecord)> {
    if !inserted.is_barred() {
        return Err(Error::Validation(format!(
            "inserted letter {inserted} is not barred"
        )));
    }
    t.ensure_proper()?;
    let outer = t.shape().outer();
    let r = single_added_row(outer, target_outer).ok_or_else(|| {
        Error::BadShapeDifference(format!("{target_outer} is not {outer} plus one box"))
    })?;
    let wt = t.sp_weight();
    let i = inserted.value() as usize;
    let mut coeffs = wt.coeffs().to_vec();
    coeffs.resize(coeffs.len().max(i), 0);
    coeffs[i - 1] -= 1;
    let mu = Partition::from_signed(&coeffs).map_err(|_| {
        Error::Validation(format!(
            "weight {coeffs:?} after inserting {inserted} is not dominant"
        ))
    })?;
    let col = mu.part(r) as usize + 1;
    let mut rows: Vec<Vec<Letter>> = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|l| l.expect("proper")).collect())
        .collect();
    rows.resize(target_outer.len(), Vec::new());
    if col - 1 > rows[r - 1].len() {
        return Err(Error::Validation(format!(
            "row {r} is too short to insert at column {col}"
        )));
    }
    rows[r - 1].insert(col - 1, inserted);
    let out = Tableau::new(SkewShape::straight(target_outer.clone()), rows)?;
    if validation == Validation::Full {
        check_highest(&out).map_err(|e| Error::Validation(format!("iota_sp inverse: {e}")))?;
        let (back, _) = iota_sp_with(&out, Validation::Off)
            .map_err(|e| Error::Validation(format!("iota_sp inverse does not round trip: {e}")))?;
        if &back != t {
            return Err(Error::Validation(
                "iota_sp inverse does not round trip".into(),
            ));
        }
    }
    let record = StepRecord::IotaSp {
        direction: Direction::Inverse,
        letter: inserted,
        cell: (r, col),
        shape_before: outer.clone(),
        shape_after: target_outer.clone(),
    };
    Ok((out, record))
}

fn single_added_row(small: &Partition, big: &Partition) -> Option<usize> {
    let len = small.len().max(big.len());
    let diffs: Vec<(usize, i64)> = (1..=len)
        .map(|k| (k, big.part(k) as i64 - small.part(k) as i64))
        .filter(|&(_, d)| d != 0)
        .collect();
    match diffs.as_slice() {
        [(k, 1)] => Some(*k),
        _ => None,
    }
}

/// Cascade the last sequence, delete its final cell and slide the rest of that row left.
pub fn iota_lr(t: &Tableau) -> Result<(Tableau, StepRecord)> {
    iota_lr_with(t, Validation::Full)
}

pub fn iota_lr_with(t: &Tableau, validation: Validation) -> Result<(Tableau, StepRecord)> {
    if t.is_empty() {
        return Err(Error::EmptyTableau);
    }
    t.ensure_proper()?;
    t.ensure_unbarred()?;
    if validation == Validation::Full {
        if !t.is_littlewood_richardson()? {
            return Err(Error::NotLittlewoodRichardson);
        }
        match t.gl_weight().as_partition() {
            Some(nu) if is_even_conjugate(&nu) => {}
            _ => {
                let counts = t.gl_weight().unbarred_counts().unwrap_or_default();
                return Err(Error::NotEvenConjugate(counts));
            }
        }
    }
    let s = find_last_sequence(t)?;
    if validation == Validation::Full {
        let cond = check_conditions(t, &s)?;
        if !cond.all() {
            return Err(Error::InvalidSequence(format!(
                "last sequence {s} violates {cond:?}"
            )));
        }
    }
    let shape = t.shape().clone();
    let (i, c1) = s.cell(1);
    if c1 != shape.row_start(i) {
        return Err(Error::InvalidSequence(format!(
            "the 1 at ({i}, {c1}) does not start its row"
        )));
    }
    let r = shape.last_skew_row().expect("nonempty");
    let deleted_cell = (r, shape.row_start(r));
    if s.cell(s.m()) != deleted_cell {
        return Err(Error::Internal(format!(
            "final cell of {s} is not the last cell {deleted_cell:?}"
        )));
    }
    let cascaded = cascade(t, &s)?;
    let new_outer = shape.outer().with_box_removed(r).ok_or_else(|| {
        Error::Internal(format!(
            "cannot remove a box from row {r} of {}",
            shape.outer()
        ))
    })?;
    let new_inner = shape.inner().with_box_added(i).ok_or_else(|| {
        Error::Internal(format!("cannot add a box to row {i} of {}", shape.inner()))
    })?;
    let new_shape = SkewShape::new(new_outer, new_inner)
        .map_err(|e| Error::Internal(format!("iota_lr shape: {e}")))?;
    let mut rows: Vec<Vec<Option<Letter>>> = cascaded.rows().to_vec();
    // the hole leaves row i from the left; the deleted cell leaves row r from the left and
    // the rest of row r slides one column over
    rows[i - 1].remove(0);
    rows[r - 1].remove(0);
    let out = Tableau::with_holes(new_shape.clone(), rows)?;
    out.ensure_proper()
        .map_err(|e| Error::Internal(format!("iota_lr image: {e}")))?;
    if validation == Validation::Full && !out.is_littlewood_richardson()? {
        return Err(Error::Validation(
            "iota_lr image is not Littlewood-Richardson".into(),
        ));
    }
    let record = StepRecord::IotaLr {
        direction: Direction::Forward,
        sequence: s,
        row_of_one: i,
        deleted_cell,
        shape_before: shape,
        shape_after: new_shape,
    };
    Ok((out, record))
}

/// Undo [`iota_lr`] given the shape before the step.
pub fn iota_lr_inverse(t: &Tableau, target_shape: &SkewShape) -> Result<Tableau> {
    iota_lr_inverse_with(t, target_shape, Validation::Full).map(|(out, _)| out)
}

pub fn iota_lr_inverse_with(
    t: &Tableau,
    target: &SkewShape,
    validation: Validation,
) -> Result<(Tableau, StepRecord)> {
    t.ensure_proper()?;
    t.ensure_unbarred()?;
    let shape = t.shape();
    let r = single_added_row(shape.outer(), target.outer()).ok_or_else(|| {
        Error::BadShapeDifference(format!(
            "outer {} is not {} plus one box",
            target.outer(),
            shape.outer()
        ))
    })?;
    let i = single_added_row(target.inner(), shape.inner()).ok_or_else(|| {
        Error::BadShapeDifference(format!(
            "inner {} is not {} plus one box",
            shape.inner(),
            target.inner()
        ))
    })?;
    if i >= r {
        return Err(Error::BadShapeDifference(format!(
            "row of the 1 ({i}) is not above the deleted row ({r})"
        )));
    }
    if target.last_skew_row() != Some(r) {
        return Err(Error::BadShapeDifference(format!(
            "row {r} is not the last skew row of {target}"
        )));
    }
    // Rebuild on the target shape: a hole where the 1 was, a placeholder for the deleted cell.
    let mut rows: Vec<Vec<Option<Letter>>> = t.rows().to_vec();
    rows.resize(target.rows(), Vec::new());
    rows[i - 1].insert(0, None);
    rows[r - 1].insert(0, None);
    let frame = Tableau::with_holes(target.clone(), rows)?;
    let hole = (i, target.row_start(i));
    let deleted = (r, target.row_start(r));

    let cells = target.reading_cells();
    let mut at = cells
        .iter()
        .position(|&c| c == hole)
        .expect("hole is a target cell");
    let mut chain = Vec::new();
    loop {
        let want = Letter::unbarred(chain.len() as u32 + 1);
        let next = cells[at + 1..]
            .iter()
            .position(|&(rr, cc)| frame.get(rr, cc) == Some(want));
        match next {
            Some(off) => {
                at += off + 1;
                chain.push(cells[at]);
            }
            None => break,
        }
    }
    let m = chain.len() as u32 + 2;
    let mut out = frame;
    *out.slot_mut(hole.0, hole.1) = Some(Letter::unbarred(1));
    for (k, &(rr, cc)) in chain.iter().enumerate() {
        *out.slot_mut(rr, cc) = Some(Letter::unbarred(k as u32 + 2));
    }
    *out.slot_mut(deleted.0, deleted.1) = Some(Letter::unbarred(m));
    if validation == Validation::Full {
        if !out.is_littlewood_richardson()? {
            return Err(Error::Validation(
                "iota_lr inverse is not Littlewood-Richardson".into(),
            ));
        }
        let (back, rec) = iota_lr_with(&out, Validation::Full)
            .map_err(|e| Error::Validation(format!("iota_lr inverse does not round trip: {e}")))?;
        if &back != t || rec.row_of_one() != Some(i) {
            return Err(Error::Validation(
                "iota_lr inverse does not round trip".into(),
            ));
        }
    }
    let mut cells = vec![hole];
    cells.extend(chain);
    cells.push(deleted);
    let record = StepRecord::IotaLr {
        direction: Direction::Inverse,
        sequence: CascadeSequence::new(cells)?,
        row_of_one: i,
        deleted_cell: deleted,
        shape_before: shape.clone(),
        shape_after: target.clone(),
    };
    Ok((out, record))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn skew(outer: &[u32], inner: &[u32], rows: &[&[i32]]) -> Tableau {
        Tableau::from_signed_skew(outer, inner, rows).unwrap()
    }

    fn straight(rows: &[&[i32]]) -> Tableau {
        Tableau::from_signed_rows(rows).unwrap()
    }

    fn seq(cells: &[Cell]) -> CascadeSequence {
        CascadeSequence::new(cells.to_vec()).unwrap()
    }

    fn three_cascades_host() -> Tableau {
        skew(
            &[5, 5, 4, 3, 1],
            &[4, 1],
            &[&[1], &[1, 1, 1, 2], &[2, 2, 2, 3], &[3, 3, 4], &[4]],
        )
    }

    #[test]
    fn three_cascades_conditions() {
        let y = three_cascades_host();
        assert!(y.is_littlewood_richardson().unwrap());
        let blue = seq(&[(1, 5), (3, 2), (4, 2), (5, 1)]);
        let red = seq(&[(2, 2), (3, 1), (4, 1)]);
        let purple = seq(&[(2, 3), (3, 3)]);
        let cb = check_conditions(&y, &blue).unwrap();
        assert_eq!(
            (cb.leftmost_one, cb.no_repeat_between, cb.last_m),
            (true, false, true)
        );
        assert!(check_conditions(&y, &red).unwrap().all());
        let cp = check_conditions(&y, &purple).unwrap();
        assert!(!cp.leftmost_one && !cp.last_m);
    }

    #[test]
    fn three_cascades_results() {
        let y = three_cascades_host();
        let h = None;
        let s = |v: i32| Some(Letter::from_signed(v).unwrap());
        let blue = cascade(&y, &seq(&[(1, 5), (3, 2), (4, 2), (5, 1)])).unwrap();
        assert_eq!(
            blue.rows(),
            &[
                vec![h],
                vec![s(1), s(1), s(1), s(2)],
                vec![s(2), s(1), s(2), s(3)],
                vec![s(3), s(2), s(4)],
                vec![s(3)]
            ]
        );
        assert!(!blue.satisfies_semistandard_condition());
        assert!(!blue.satisfies_lr_condition().unwrap());
        let red = cascade(&y, &seq(&[(2, 2), (3, 1), (4, 1)])).unwrap();
        assert_eq!(
            red.rows(),
            &[
                vec![s(1)],
                vec![h, s(1), s(1), s(2)],
                vec![s(1), s(2), s(2), s(3)],
                vec![s(2), s(3), s(4)],
                vec![s(4)]
            ]
        );
        assert!(red.satisfies_lr_condition().unwrap());
        let purple = cascade(&y, &seq(&[(2, 3), (3, 3)])).unwrap();
        assert!(!purple.satisfies_semistandard_condition());
        let word = crate::letter::Word::new(
            purple
                .reading_entries()
                .into_iter()
                .map(|(_, l)| l)
                .collect(),
        );
        assert!(crate::tableau::is_lattice_word(&word).unwrap());
    }

    #[test]
    fn cascade_small() {
        let y = straight(&[&[1, 1], &[2]]);
        let out = cascade(&y, &seq(&[(1, 1), (2, 1)])).unwrap();
        let one = Some(Letter::unbarred(1));
        assert_eq!(out.rows(), &[vec![None, one], vec![one]]);
        let single = cascade(&y, &seq(&[(1, 2)])).unwrap();
        assert_eq!(
            single.rows(),
            &[vec![one, None], vec![Some(Letter::unbarred(2))]]
        );
        assert!(cascade(&y, &seq(&[(2, 1)])).is_err());
        assert!(CascadeSequence::new(vec![(1, 1), (1, 1)]).is_err());
    }

    #[test]
    fn last_sequence_examples() {
        let y = skew(
            &[4, 4, 3, 3, 3, 2],
            &[3, 2, 1, 1],
            &[&[1], &[1, 2], &[1, 3], &[2, 4], &[2, 3, 5], &[4, 6]],
        );
        assert_eq!(
            find_last_sequence(&y).unwrap(),
            seq(&[(3, 2), (4, 2), (5, 2), (6, 1)])
        );
        assert_eq!(
            find_last_sequence(&straight(&[&[1, 1], &[2, 2]])).unwrap(),
            seq(&[(1, 1), (2, 1)])
        );
        assert_eq!(
            find_last_sequence(&straight(&[&[1]])),
            Err(Error::SingletonSequence)
        );
        assert!(matches!(
            find_last_sequence(&straight(&[&[2]])),
            Err(Error::IncompleteChain { .. })
        ));
    }

    #[test]
    fn iota_sp_examples() {
        let y = straight(&[
            &[1, 1, 1, 1],
            &[2, 2, 2, 2],
            &[3, 3, 3],
            &[4, 4, -3],
            &[-4, -2, -2],
            &[-3, -1],
        ]);
        let (out, rec) = iota_sp(&y).unwrap();
        assert_eq!(
            out,
            straight(&[
                &[1, 1, 1, 1],
                &[2, 2, 2, 2],
                &[3, 3, 3],
                &[4, 4, -3],
                &[-4, -2, -2],
                &[-1]
            ])
        );
        assert!(
            matches!(rec, StepRecord::IotaSp { letter, cell: (6, 1), .. } if letter == Letter::barred(3))
        );

        let (out, rec) = iota_sp(&straight(&[&[1, 1], &[-1, -1]])).unwrap();
        assert_eq!(out, straight(&[&[1, 1], &[-1]]));
        assert!(matches!(rec, StepRecord::IotaSp { letter, .. } if letter == Letter::barred(1)));

        assert_eq!(
            iota_sp(&straight(&[&[1, 1], &[2]])).unwrap_err(),
            Error::NoBarredLetter
        );
    }

    #[test]
    fn iota_sp_inverse_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let bar1 = Letter::barred(1);
        assert_eq!(
            iota_sp_inverse(&straight(&[&[1, 1], &[-1]]), &p(&[2, 2]), bar1).unwrap(),
            straight(&[&[1, 1], &[-1, -1]])
        );
        assert_eq!(
            iota_sp_inverse(&straight(&[&[1, 1]]), &p(&[2, 1]), bar1).unwrap(),
            straight(&[&[1, 1], &[-1]])
        );
        assert!(iota_sp_inverse(&straight(&[&[1, 1]]), &p(&[2, 1]), Letter::barred(2)).is_err());
    }

    #[test]
    fn iota_lr_examples() {
        let y = skew(
            &[4, 4, 3, 3, 3, 2],
            &[3, 2, 1, 1],
            &[&[1], &[1, 2], &[1, 3], &[2, 4], &[2, 3, 5], &[4, 6]],
        );
        let (out, rec) = iota_lr(&y).unwrap();
        let want = skew(
            &[4, 4, 3, 3, 3, 1],
            &[3, 2, 2, 1],
            &[&[1], &[1, 2], &[3], &[1, 4], &[2, 2, 5], &[6]],
        );
        assert_eq!(out, want);
        assert_eq!(rec.row_of_one(), Some(3));
        assert_eq!(iota_lr_inverse(&out, y.shape()).unwrap(), y);

        let sq = straight(&[&[1, 1], &[2, 2]]);
        let (out, rec) = iota_lr(&sq).unwrap();
        assert_eq!(out, skew(&[2, 1], &[1], &[&[1], &[2]]));
        assert_eq!(rec.row_of_one(), Some(1));
        assert_eq!(iota_lr_inverse(&out, sq.shape()).unwrap(), sq);

        assert_eq!(
            iota_lr(&Tableau::empty(Partition::empty())).unwrap_err(),
            Error::EmptyTableau
        );
    }

    #[test]
    fn iota_lr_inverse_rejects_bad_shapes() {
        let out = skew(&[2, 1], &[1], &[&[1], &[2]]);
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let target = SkewShape::new(p(&[2, 2]), p(&[])).unwrap();
        assert!(iota_lr_inverse(&out, &target).is_ok());
        let two_rows = SkewShape::new(p(&[3, 2]), p(&[])).unwrap();
        assert!(matches!(
            iota_lr_inverse(&out, &two_rows),
            Err(Error::BadShapeDifference(_))
        ));
    }
}
