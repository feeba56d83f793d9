//! Letters of the symplectic alphabet and words over it.
//!
//! The order is independent of any rank: every unbarred letter sits below
//! every barred one, so restricting to values `<= n` recovers
//! `1 < 2 < ... < n < n̄ < ... < 2̄ < 1̄`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A barred or unbarred positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub struct Letter {
    value: u32,
    barred: bool,
}

impl Letter {
    pub fn unbarred(value: u32) -> Self {
        assert!(value > 0, "letter values start at 1");
        Letter {
            value,
            barred: false,
        }
    }

    pub fn barred(value: u32) -> Self {
        assert!(value > 0, "letter values start at 1");
        Letter {
            value,
            barred: true,
        }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// Membership in the rank-`n` alphabet.
    #[inline]
    pub fn within(self, n: u32) -> bool {
        self.value <= n
    }

    /// Negative-integer convention: `k̄` is `-k`.
    pub fn to_signed(self) -> i32 {
        if self.barred {
            -(self.value as i32)
        } else {
            self.value as i32
        }
    }

    pub fn from_signed(v: i32) -> Result<Self> {
        match v.cmp(&0) {
            Ordering::Greater => Ok(Letter::unbarred(v as u32)),
            Ordering::Less => Ok(Letter::barred(v.unsigned_abs())),
            Ordering::Equal => Err(Error::Parse("0 is not a letter".into())),
        }
    }

    /// Contribution to the symplectic weight: `+ε_k` or `-ε_k`.
    #[inline]
    pub fn sp_sign(self) -> i32 {
        if self.barred {
            -1
        } else {
            1
        }
    }

    fn sort_key(self) -> (bool, i64) {
        if self.barred {
            (true, -(self.value as i64))
        } else {
            (false, self.value as i64)
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

impl TryFrom<i32> for Letter {
    type Error = Error;
    fn try_from(v: i32) -> Result<Self> {
        Letter::from_signed(v)
    }
}

impl From<Letter> for i32 {
    fn from(l: Letter) -> i32 {
        l.to_signed()
    }
}

/// The alphabet `A_n` in increasing order.
pub fn symplectic_alphabet(n: u32) -> Vec<Letter> {
    (1..=n)
        .map(Letter::unbarred)
        .chain((1..=n).rev().map(Letter::barred))
        .collect()
}

/// The alphabet `{1, ..., n}` in increasing order.
pub fn unbarred_alphabet(n: u32) -> Vec<Letter> {
    (1..=n).map(Letter::unbarred).collect()
}

/// Map `a ∈ [2n]` to `A_n`: values up to `n` stay, `a > n` becomes the bar of `2n - a + 1`.
pub fn translate(a: u32, n: u32) -> Result<Letter> {
    if a == 0 || a > 2 * n {
        return Err(Error::OutOfRange(format!(
            "letter {a} is not in [1, {}]",
            2 * n
        )));
    }
    Ok(if a <= n {
        Letter::unbarred(a)
    } else {
        Letter::barred(2 * n - a + 1)
    })
}

/// Inverse of [`translate`].
pub fn untranslate(l: Letter, n: u32) -> Result<u32> {
    if !l.within(n) {
        return Err(Error::OutOfRange(format!("letter {l} is not in A_{n}")));
    }
    Ok(if l.barred {
        2 * n + 1 - l.value
    } else {
        l.value
    })
}

/// A finite sequence of letters, first letter = first tensor factor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Build from the negative-integer convention.
    pub fn from_signed(values: &[i32]) -> Result<Self> {
        values
            .iter()
            .map(|&v| Letter::from_signed(v))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_value(&self) -> u32 {
        self.0.iter().map(|l| l.value()).max().unwrap_or(0)
    }

    pub fn has_barred(&self) -> bool {
        self.0.iter().any(|l| l.is_barred())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
