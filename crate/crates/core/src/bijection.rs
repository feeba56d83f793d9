//! The bijection between Littlewood-Richardson tableaux of shape `λ ∖ μ` with weight
//! `(2δ)'` and sp-highest weight tableaux of shape `λ` and weight `μ`.
//!
//! `forward` strips sequences with `iota_lr` until the tableau is empty on `λ' ∖ λ'`,
//! starts from the canonical tableau of `λ'` and puts back one barred letter per step with
//! the inverse of `iota_sp`. The letter put back for a step is `ī` with `i` the row of the
//! 1 that step removed.

use crate::cascade::{
    iota_lr_inverse_with, iota_lr_with, iota_sp_inverse_with, iota_sp_with, Direction, StepRecord,
    Validation,
};
use crate::crystal::{canonical_tableau, is_sp_highest, Rank};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::partition::{is_even_conjugate, SkewShape};
use crate::tableau::Tableau;

/// Both sides of the bijection with the steps linking them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchPair {
    pub lr: Tableau,
    pub hw: Tableau,
    pub trace: Vec<StepRecord>,
}

impl BranchPair {
    /// Trace lines, one per step.
    pub fn trace_lines(&self) -> Vec<String> {
        self.trace.iter().map(|s| s.to_string()).collect()
    }

    /// Re-run the recorded steps literally, without searching for sequences, and check
    /// that they lead from one side to the other.
    pub fn replay(&self) -> Result<()> {
        let target = match self.trace.first() {
            None => {
                let ok =
                    self.lr.is_empty() && self.hw == canonical_tableau(self.lr.shape().outer());
                return if ok {
                    Ok(())
                } else {
                    Err(Error::Validation(
                        "empty trace between distinct sides".into(),
                    ))
                };
            }
            Some(StepRecord::IotaLr {
                direction: Direction::Forward,
                ..
            }) => &self.hw,
            Some(_) => &self.lr,
        };
        if self.stages()?.last() != Some(target) {
            return Err(Error::Validation(
                "replayed trace does not reach the recorded tableau".into(),
            ));
        }
        Ok(())
    }

    /// The tableau after each recorded step, starting from the side the trace begins on.
    /// Where the descent bottoms out the tableau switches sides.
    pub fn stages(&self) -> Result<Vec<Tableau>> {
        let mut cur = match self.trace.first() {
            Some(StepRecord::IotaLr {
                direction: Direction::Forward,
                ..
            })
            | None => self.lr.clone(),
            Some(_) => self.hw.clone(),
        };
        let mut out = Vec::with_capacity(self.trace.len());
        for step in &self.trace {
            cur = replay_step(&cur, step)?;
            out.push(cur.clone());
        }
        Ok(out)
    }
}

fn replay_step(t: &Tableau, step: &StepRecord) -> Result<Tableau> {
    match step {
        StepRecord::IotaLr {
            direction: Direction::Forward,
            sequence,
            row_of_one,
            deleted_cell,
            shape_after,
            ..
        } => {
            let mut rows = crate::cascade::cascade(t, sequence)?.rows().to_vec();
            rows[*row_of_one - 1].remove(0);
            rows[deleted_cell.0 - 1].remove(0);
            let out = Tableau::with_holes(shape_after.clone(), rows)?;
            if out.is_empty() {
                // the descent is over: switch to the highest weight side
                return Ok(canonical_tableau(shape_after.outer()));
            }
            Ok(out)
        }
        StepRecord::IotaLr {
            direction: Direction::Inverse,
            sequence,
            row_of_one,
            deleted_cell,
            shape_after,
            ..
        } => {
            let mut rows = t.rows().to_vec();
            rows.resize(shape_after.rows(), Vec::new());
            rows[*row_of_one - 1].insert(0, None);
            rows[deleted_cell.0 - 1].insert(0, None);
            let mut out = Tableau::with_holes(shape_after.clone(), rows)?;
            for (k, &(r, c)) in sequence.cells().iter().enumerate() {
                *out.slot_mut(r, c) = Some(Letter::unbarred(k as u32 + 1));
            }
            out.ensure_proper()?;
            Ok(out)
        }
        StepRecord::IotaSp {
            direction: Direction::Inverse,
            letter,
            cell,
            shape_after,
            ..
        } => {
            let mut rows = t.rows().to_vec();
            rows.resize(shape_after.len(), Vec::new());
            rows[cell.0 - 1].insert(cell.1 - 1, Some(*letter));
            Tableau::with_holes(SkewShape::straight(shape_after.clone()), rows)
        }
        StepRecord::IotaSp {
            direction: Direction::Forward,
            letter,
            cell,
            shape_after,
            ..
        } => {
            if t.get(cell.0, cell.1) != Some(*letter) {
                return Err(Error::Validation(format!(
                    "({}, {}) does not hold {letter}",
                    cell.0, cell.1
                )));
            }
            let mut rows = t.rows().to_vec();
            rows[cell.0 - 1].remove(cell.1 - 1);
            let out = Tableau::with_holes(SkewShape::straight(shape_after.clone()), rows)?;
            if !out.has_barred() {
                // the descent is over: switch to the empty tableau on the LR side
                return Ok(Tableau::empty(shape_after.clone()));
            }
            Ok(out)
        }
    }
}

fn check_lr_input(lr: &Tableau) -> Result<()> {
    lr.ensure_proper()?;
    lr.ensure_unbarred()?;
    if !lr.is_littlewood_richardson()? {
        return Err(Error::NotLittlewoodRichardson);
    }
    match lr.gl_weight().as_partition() {
        Some(nu) if is_even_conjugate(&nu) => Ok(()),
        _ => Err(Error::NotEvenConjugate(
            lr.gl_weight().unbarred_counts().unwrap_or_default(),
        )),
    }
}

fn check_hw_input(hw: &Tableau) -> Result<()> {
    if !hw.shape().is_straight() {
        return Err(Error::Validation(
            "highest weight tableaux have straight shape".into(),
        ));
    }
    hw.ensure_proper()?;
    let wt = hw.sp_weight();
    if wt.as_partition().is_none() {
        return Err(Error::NotDominant(wt.coeffs().to_vec()));
    }
    if !hw.is_semistandard()? {
        return Err(Error::NotSemistandard);
    }
    if !is_sp_highest(&hw.reading(), Rank::Unbounded)? {
        return Err(Error::NotHighestWeight);
    }
    Ok(())
}

pub fn forward(lr: &Tableau) -> Result<Tableau> {
    forward_with(lr, Validation::Full).map(|p| p.hw)
}

pub fn forward_traced(lr: &Tableau) -> Result<BranchPair> {
    forward_with(lr, Validation::Full)
}

/// [`forward`] with a choice of intermediate validation. The input is always checked.
pub fn forward_with(lr: &Tableau, validation: Validation) -> Result<BranchPair> {
    forward_using(lr, validation, &|t: &Tableau| iota_lr_with(t, validation))
}

/// [`forward_with`] with the `iota_lr` step supplied by the caller.
pub fn forward_using(
    lr: &Tableau,
    validation: Validation,
    step: &dyn Fn(&Tableau) -> Result<(Tableau, StepRecord)>,
) -> Result<BranchPair> {
    check_lr_input(lr)?;
    let mut trace = Vec::new();
    let mut cur = lr.clone();
    while !cur.is_empty() {
        let (next, rec) = step(&cur)?;
        trace.push(rec);
        cur = next;
    }
    let mut hw = canonical_tableau(cur.shape().outer());
    let descent: Vec<StepRecord> = trace.clone();
    for rec in descent.iter().rev() {
        let StepRecord::IotaLr {
            row_of_one,
            shape_before,
            ..
        } = rec
        else {
            return Err(Error::Internal(
                "descent produced a non-iota_lr step".into(),
            ));
        };
        let letter = Letter::barred(*row_of_one as u32);
        let (next, ins) = iota_sp_inverse_with(&hw, shape_before.outer(), letter, validation)?;
        trace.push(ins);
        hw = next;
    }
    if validation == Validation::Full {
        check_hw_input(&hw)
            .map_err(|e| Error::Validation(format!("image is not highest weight: {e}")))?;
        if hw.sp_weight().as_partition().as_ref() != Some(lr.shape().inner()) {
            return Err(Error::Validation(
                "image weight differs from the inner shape".into(),
            ));
        }
    }
    Ok(BranchPair {
        lr: lr.clone(),
        hw,
        trace,
    })
}

pub fn inverse(hw: &Tableau) -> Result<Tableau> {
    inverse_with(hw, Validation::Full).map(|p| p.lr)
}

pub fn inverse_traced(hw: &Tableau) -> Result<BranchPair> {
    inverse_with(hw, Validation::Full)
}

pub fn inverse_with(hw: &Tableau, validation: Validation) -> Result<BranchPair> {
    check_hw_input(hw)?;
    let mut trace = Vec::new();
    let mut targets = Vec::new();
    let mut cur = hw.clone();
    while cur.has_barred() {
        let mu = cur
            .sp_weight()
            .as_partition()
            .expect("highest weight tableaux have dominant weight");
        targets.push(SkewShape::new(cur.shape().outer().clone(), mu)?);
        let (next, rec) = iota_sp_with(&cur, validation)?;
        trace.push(rec);
        cur = next;
    }
    let lambda = cur.shape().outer().clone();
    if cur != canonical_tableau(&lambda) {
        return Err(Error::Validation(format!(
            "unbarred highest weight tableau of shape {lambda} is not canonical"
        )));
    }
    let mut lr = Tableau::empty(lambda);
    for target in targets.iter().rev() {
        let (next, rec) = iota_lr_inverse_with(&lr, target, validation)?;
        trace.push(rec);
        lr = next;
    }
    if validation == Validation::Full {
        check_lr_input(&lr)
            .map_err(|e| Error::Validation(format!("preimage is not a valid input: {e}")))?;
    }
    Ok(BranchPair {
        lr,
        hw: hw.clone(),
        trace,
    })
}

/// `Y(n + i, j) ≥ 2i` for every skew cell below row `n`.
pub fn is_n_symplectic(t: &Tableau, n: u32) -> Result<bool> {
    t.ensure_unbarred()?;
    t.ensure_proper()?;
    let n = n as usize;
    Ok(t.reading_entries()
        .iter()
        .all(|&((r, _), l)| r <= n || l.value() as usize >= 2 * (r - n)))
}

/// Whether `lr` or one of its `iota_lr` iterates has a 1 strictly below row `n`.
pub fn has_deep_one(lr: &Tableau, n: u32) -> Result<bool> {
    check_lr_input(lr)?;
    let deep = |t: &Tableau| {
        t.reading_entries()
            .iter()
            .any(|&((r, _), l)| r > n as usize && l == Letter::unbarred(1))
    };
    let mut cur = lr.clone();
    loop {
        if deep(&cur) {
            return Ok(true);
        }
        if cur.is_empty() {
            return Ok(false);
        }
        cur = iota_lr_with(&cur, Validation::Off)?.0;
    }
}

/// Every letter has value at most `n`.
pub fn fillings_within(t: &Tableau, n: u32) -> bool {
    t.letters().all(|l| l.value() <= n)
}
