//! Kashiwara operators on words by the signature rule, for the natural crystals of
//! `gl_2n` (letters `1..2n`) and `sp_2n` (letters of `A_n`).
//!
//! For a crystal index `i` each letter is marked `+`, `-` or neutral. Reading the word left
//! to right (first letter = first tensor factor), a `+` followed later by a `-` cancel.
//! What survives has the form `- ... - + ... +`: `ε_i` counts the minuses and `φ_i` the
//! pluses. `f̃_i` acts on the leftmost surviving `+`, `ẽ_i` on the rightmost surviving `-`.

use std::fmt;

use crate::error::{Error, Result};
use crate::letter::{Letter, Word};
use crate::partition::{Partition, SkewShape};
use crate::tableau::{SpWeight, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mark {
    Plus,
    Minus,
    Neutral,
}

/// Rank used by the highest weight test: a fixed `n`, or "arbitrarily big".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rank {
    Finite(u32),
    Unbounded,
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(n) => write!(f, "{n}"),
            Rank::Unbounded => f.write_str("inf"),
        }
    }
}

/// `sp` marks: `+` on `i` and `overline(i+1)`, `-` on `i+1` and `ī`.
///
/// At `i = n` the letters `n+1` and `overline(n+1)` never occur in `A_n`, so the same rule
/// gives the fold `n → n̄`.
pub fn sp_letter_marks(a: Letter, i: u32) -> Mark {
    let v = a.value();
    match (a.is_barred(), v) {
        (false, v) if v == i => Mark::Plus,
        (false, v) if v == i + 1 => Mark::Minus,
        (true, v) if v == i + 1 => Mark::Plus,
        (true, v) if v == i => Mark::Minus,
        _ => Mark::Neutral,
    }
}

/// `gl` marks on unbarred letters: `+` on `i`, `-` on `i+1`.
pub fn gl_letter_marks(a: u32, i: u32) -> Mark {
    if a == i {
        Mark::Plus
    } else if a == i + 1 {
        Mark::Minus
    } else {
        Mark::Neutral
    }
}

/// Unmatched positions after cancelling `+ ... -` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub unmatched_minus: Vec<usize>,
    pub unmatched_plus: Vec<usize>,
}

impl Signature {
    /// Single left-to-right stack pass.
    pub fn reduce(marks: impl IntoIterator<Item = Mark>) -> Self {
        let mut sig = Signature::default();
        for (k, m) in marks.into_iter().enumerate() {
            match m {
                Mark::Plus => sig.unmatched_plus.push(k),
                Mark::Minus => {
                    if sig.unmatched_plus.pop().is_none() {
                        sig.unmatched_minus.push(k);
                    }
                }
                Mark::Neutral => {}
            }
        }
        sig
    }

    pub fn epsilon(&self) -> usize {
        self.unmatched_minus.len()
    }

    pub fn phi(&self) -> usize {
        self.unmatched_plus.len()
    }

    /// Site of `ẽ_i`.
    pub fn raise_site(&self) -> Option<usize> {
        self.unmatched_minus.last().copied()
    }

    /// Site of `f̃_i`.
    pub fn lower_site(&self) -> Option<usize> {
        self.unmatched_plus.first().copied()
    }
}

pub fn sp_signature(w: &Word, i: u32) -> Signature {
    Signature::reduce(w.letters().iter().map(|&a| sp_letter_marks(a, i)))
}

fn check_rank(w: &Word, i: u32, n: u32) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!(
            "crystal index {i} is not in 1..={n}"
        )));
    }
    match w.letters().iter().find(|l| !l.within(n)) {
        Some(&letter) => Err(Error::OutsideAlphabet { letter, rank: n }),
        None => Ok(()),
    }
}

pub fn epsilon_i(w: &Word, i: u32) -> usize {
    sp_signature(w, i).epsilon()
}

pub fn phi_i(w: &Word, i: u32) -> usize {
    sp_signature(w, i).phi()
}

/// `ẽ_i` for `sp_2n`; `Ok(None)` when `ε_i = 0`.
pub fn sp_raise(w: &Word, i: u32, n: u32) -> Result<Option<Word>> {
    check_rank(w, i, n)?;
    let Some(k) = sp_signature(w, i).raise_site() else {
        return Ok(None);
    };
    let mut letters = w.letters().to_vec();
    let a = letters[k];
    letters[k] = if a.is_barred() {
        // ī → overline(i+1), or n̄ → n at the fold
        if i == n {
            Letter::unbarred(n)
        } else {
            Letter::barred(i + 1)
        }
    } else {
        Letter::unbarred(i)
    };
    Ok(Some(Word(letters)))
}

/// `f̃_i` for `sp_2n`; `Ok(None)` when `φ_i = 0`.
pub fn sp_lower(w: &Word, i: u32, n: u32) -> Result<Option<Word>> {
    check_rank(w, i, n)?;
    let Some(k) = sp_signature(w, i).lower_site() else {
        return Ok(None);
    };
    let mut letters = w.letters().to_vec();
    let a = letters[k];
    letters[k] = if a.is_barred() {
        Letter::barred(i)
    } else if i == n {
        Letter::barred(n)
    } else {
        Letter::unbarred(i + 1)
    };
    Ok(Some(Word(letters)))
}

fn gl_signature(w: &Word, i: u32) -> Result<Signature> {
    if i == 0 {
        return Err(Error::OutOfRange("crystal index 0".into()));
    }
    if let Some(&l) = w.letters().iter().find(|l| l.is_barred()) {
        return Err(Error::BarredInWord(l));
    }
    Ok(Signature::reduce(
        w.letters().iter().map(|a| gl_letter_marks(a.value(), i)),
    ))
}

/// `ẽ_i` for `gl` on a word of unbarred letters.
pub fn gl_raise(w: &Word, i: u32) -> Result<Option<Word>> {
    let sig = gl_signature(w, i)?;
    Ok(sig.raise_site().map(|k| {
        let mut letters = w.letters().to_vec();
        letters[k] = Letter::unbarred(i);
        Word(letters)
    }))
}

/// `f̃_i` for `gl` on a word of unbarred letters.
pub fn gl_lower(w: &Word, i: u32) -> Result<Option<Word>> {
    let sig = gl_signature(w, i)?;
    Ok(sig.lower_site().map(|k| {
        let mut letters = w.letters().to_vec();
        letters[k] = Letter::unbarred(i + 1);
        Word(letters)
    }))
}

pub fn gl_epsilon(w: &Word, i: u32) -> Result<usize> {
    Ok(gl_signature(w, i)?.epsilon())
}

pub fn gl_phi(w: &Word, i: u32) -> Result<usize> {
    Ok(gl_signature(w, i)?.phi())
}

/// `⟨h_i, wt⟩` for `sp_2n`: `c_i - c_{i+1}` for `i < n` and `c_n` at `i = n`.
pub fn sp_pairing(wt: &SpWeight, i: u32, n: u32) -> i64 {
    let i = i as usize;
    if i as u32 == n {
        wt.coeff(i)
    } else {
        wt.coeff(i) - wt.coeff(i + 1)
    }
}

/// The prefix criterion for `U_q(sp_2n)`-highest weight words: for every `i` and every
/// prefix, the `i` and `overline(i+1)` strictly before a position outnumber or equal the
/// `i+1` and `ī` up to and including it.
pub fn is_sp_highest(w: &Word, rank: Rank) -> Result<bool> {
    let top = match rank {
        Rank::Finite(n) => {
            if let Some(&letter) = w.letters().iter().find(|l| !l.within(n)) {
                return Err(Error::OutsideAlphabet { letter, rank: n });
            }
            n
        }
        Rank::Unbounded => w.max_value() + 1,
    };
    for i in 1..=top {
        let mut plus_before = 0usize;
        let mut minus_upto = 0usize;
        for &a in w.letters() {
            match sp_letter_marks(a, i) {
                Mark::Minus => {
                    minus_upto += 1;
                    if plus_before < minus_upto {
                        return Ok(false);
                    }
                }
                Mark::Plus => plus_before += 1,
                Mark::Neutral => {}
            }
        }
    }
    Ok(true)
}

/// Highest weight by the operators: every `ẽ_i`, `i ≤ n`, vanishes.
pub fn is_sp_highest_by_operators(w: &Word, n: u32) -> Result<bool> {
    for i in 1..=n {
        if sp_raise(w, i, n)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Y(i, j) = i` on `λ`.
pub fn canonical_tableau(lambda: &Partition) -> Tableau {
    let rows = (1..=lambda.len())
        .map(|r| vec![Letter::unbarred(r as u32); lambda.part(r) as usize])
        .collect();
    Tableau::new(SkewShape::straight(lambda.clone()), rows).expect("rows match λ")
}

/// Structural screen for sp-highest tableaux: the canonical filling `Y(i, j) = i` occupies
/// the diagram of the weight `μ`, every unbarred `i` sits in a row `≤ i`, and every barred
/// `ī` sits strictly below row `i`.
pub fn validate_sp_structure(t: &Tableau) -> bool {
    let Some(mu) = t.sp_weight().as_partition() else {
        return false;
    };
    for (r, c) in t.shape().cells() {
        let Some(a) = t.get(r, c) else { return false };
        let v = a.value() as usize;
        if a.is_barred() && r <= v {
            return false;
        }
        if !a.is_barred() && r > v {
            return false;
        }
        if c <= mu.part(r) as usize && a != Letter::unbarred(r as u32) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::symplectic_alphabet;
    use proptest::prelude::*;

    fn w(v: &[i32]) -> Word {
        Word::from_signed(v).unwrap()
    }

    fn l(v: i32) -> Letter {
        Letter::from_signed(v).unwrap()
    }

    #[test]
    fn letter_marks() {
        assert_eq!(sp_letter_marks(l(1), 1), Mark::Plus);
        assert_eq!(sp_letter_marks(l(-1), 1), Mark::Minus);
        assert_eq!(sp_letter_marks(l(-2), 1), Mark::Plus);
        assert_eq!(sp_letter_marks(l(2), 1), Mark::Minus);
        assert_eq!(sp_letter_marks(l(3), 1), Mark::Neutral);
        assert_eq!(sp_letter_marks(l(2), 2), Mark::Plus);
        assert_eq!(sp_letter_marks(l(-2), 2), Mark::Minus);
    }

    #[test]
    fn epsilon_phi_examples() {
        assert_eq!(
            (epsilon_i(&w(&[1, 1, 2]), 1), phi_i(&w(&[1, 1, 2]), 1)),
            (0, 1)
        );
        assert_eq!((epsilon_i(&w(&[-1]), 1), phi_i(&w(&[-1]), 1)), (1, 0));
        assert_eq!((epsilon_i(&w(&[]), 3), phi_i(&w(&[]), 3)), (0, 0));
    }

    #[test]
    fn sp_operator_examples() {
        assert_eq!(sp_raise(&w(&[-1]), 1, 2).unwrap(), Some(w(&[-2])));
        assert_eq!(sp_raise(&w(&[1, 1, 2]), 1, 2).unwrap(), None);
        assert_eq!(sp_lower(&w(&[1]), 1, 2).unwrap(), Some(w(&[2])));
        assert_eq!(sp_lower(&w(&[2]), 2, 2).unwrap(), Some(w(&[-2])));
        assert_eq!(sp_lower(&w(&[-2]), 1, 2).unwrap(), Some(w(&[-1])));
        assert_eq!(sp_raise(&w(&[-2]), 2, 2).unwrap(), Some(w(&[2])));
        assert!(sp_raise(&w(&[3]), 1, 2).is_err());
    }

    #[test]
    fn gl_operator_examples() {
        assert_eq!(gl_lower(&w(&[1]), 1).unwrap(), Some(w(&[2])));
        assert_eq!(gl_raise(&w(&[1, 2]), 1).unwrap(), None);
        assert_eq!(gl_raise(&w(&[2, 1]), 1).unwrap(), Some(w(&[1, 1])));
        // 11 → 21 → 22
        assert_eq!(gl_lower(&w(&[1, 1]), 1).unwrap(), Some(w(&[2, 1])));
        assert_eq!(gl_lower(&w(&[2, 1]), 1).unwrap(), Some(w(&[2, 2])));
        assert_eq!(gl_raise(&w(&[2, 2]), 1).unwrap(), Some(w(&[2, 1])));
        assert!(gl_raise(&w(&[-1]), 1).is_err());
    }

    #[test]
    fn highest_examples() {
        assert!(is_sp_highest(&w(&[1, 1, 2]), Rank::Unbounded).unwrap());
        assert!(!is_sp_highest(&w(&[-1]), Rank::Unbounded).unwrap());
        let y = Tableau::from_signed_rows(&[
            &[1, 1, 1, 1],
            &[2, 2, 2, 2],
            &[3, 3, 3],
            &[4, 4, -3],
            &[-4, -2, -2],
            &[-3, -1],
        ])
        .unwrap();
        assert!(is_sp_highest(&y.reading(), Rank::Unbounded).unwrap());
        assert!(is_sp_highest(&y.reading(), Rank::Finite(4)).unwrap());
        assert!(is_sp_highest(&y.reading(), Rank::Finite(3)).is_err());
    }

    #[test]
    fn structure_examples() {
        assert!(validate_sp_structure(&canonical_tableau(
            &Partition::new(vec![3, 1]).unwrap()
        )));
        assert!(validate_sp_structure(
            &Tableau::from_signed_rows(&[&[1, 1], &[-1, -1]]).unwrap()
        ));
        assert!(!validate_sp_structure(
            &Tableau::from_signed_rows(&[&[1, -1], &[2]]).unwrap()
        ));
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_tableau(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(c, Tableau::from_signed_rows(&[&[1, 1], &[2]]).unwrap());
        assert!(canonical_tableau(&Partition::empty()).is_empty());
        let big = canonical_tableau(&Partition::new(vec![4, 4, 3, 3, 3, 2]).unwrap());
        let mu = Partition::new(vec![3, 2, 1, 1]).unwrap();
        let y = Tableau::from_signed_rows(&[
            &[1, 1, 1, 1],
            &[2, 2, 2, 2],
            &[3, 3, 3],
            &[4, 4, -3],
            &[-4, -2, -2],
            &[-3, -1],
        ])
        .unwrap();
        for r in 1..=mu.len() {
            for c in 1..=mu.part(r) as usize {
                assert_eq!(big.get(r, c), y.get(r, c));
            }
        }
    }

    fn all_words(alpha: &[Letter], max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::default()];
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for &a in alpha {
                    let mut q: Vec<Letter> = p.clone();
                    q.push(a);
                    next.push(q);
                }
            }
            out.extend(next.iter().cloned().map(Word));
            layer = next;
        }
        out
    }

    #[test]
    fn adjointness_and_weight_pairing() {
        for n in 1..=3u32 {
            let alpha = symplectic_alphabet(n);
            let max_len = if n == 3 { 4 } else { 6 };
            for word in all_words(&alpha, max_len) {
                let wt = SpWeight::of_word(&word);
                for i in 1..=n {
                    if let Some(lower) = sp_lower(&word, i, n).unwrap() {
                        assert_eq!(sp_raise(&lower, i, n).unwrap().as_ref(), Some(&word));
                    }
                    if let Some(upper) = sp_raise(&word, i, n).unwrap() {
                        assert_eq!(sp_lower(&upper, i, n).unwrap().as_ref(), Some(&word));
                    }
                    let sig = sp_signature(&word, i);
                    assert_eq!(
                        sig.phi() as i64 - sig.epsilon() as i64,
                        sp_pairing(&wt, i, n),
                        "{word} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn prefix_criterion_matches_operators() {
        for n in 1..=3u32 {
            let alpha = symplectic_alphabet(n);
            let max_len = if n == 3 { 4 } else { 6 };
            for word in all_words(&alpha, max_len) {
                assert_eq!(
                    is_sp_highest(&word, Rank::Finite(n)).unwrap(),
                    is_sp_highest_by_operators(&word, n).unwrap(),
                    "{word}"
                );
            }
        }
    }

    fn arb_marks() -> impl Strategy<Value = Vec<Mark>> {
        proptest::collection::vec(
            prop_oneof![Just(Mark::Plus), Just(Mark::Minus), Just(Mark::Neutral)],
            0..16,
        )
    }

    proptest! {
        /// Cancelling adjacent `+ -` pairs (neutrals ignored) in any order leaves the same
        /// unmatched positions as the stack pass.
        #[test]
        fn reduction_is_confluent(marks in arb_marks(), picks in proptest::collection::vec(any::<usize>(), 16)) {
            let sig = Signature::reduce(marks.clone());
            let mut live: Vec<(usize, Mark)> = marks.iter().copied().enumerate().filter(|(_, m)| *m != Mark::Neutral).collect();
            let mut picks = picks.into_iter().cycle();
            loop {
                let pairs: Vec<usize> = (0..live.len().saturating_sub(1))
                    .filter(|&k| live[k].1 == Mark::Plus && live[k + 1].1 == Mark::Minus)
                    .collect();
                if pairs.is_empty() {
                    break;
                }
                let k = pairs[picks.next().unwrap() % pairs.len()];
                live.drain(k..k + 2);
            }
            let minus: Vec<usize> = live.iter().filter(|(_, m)| *m == Mark::Minus).map(|(k, _)| *k).collect();
            let plus: Vec<usize> = live.iter().filter(|(_, m)| *m == Mark::Plus).map(|(k, _)| *k).collect();
            prop_assert_eq!(sig.unmatched_minus, minus);
            prop_assert_eq!(sig.unmatched_plus, plus);
        }
    }
}
