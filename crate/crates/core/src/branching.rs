//! Branching multiplicities `[V_{gl_{2n}}(λ) : V_{sp_{2n}}(μ)]` counted three ways on
//! tableaux, plus the character oracle for comparison.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::bijection::{forward_with, is_n_symplectic};
use crate::cascade::Validation;
use crate::crystal::Rank;
use crate::enumerate::{enumerate_lr, Enumeration, WeightFilter};
use crate::error::{Error, Result};
use crate::letter::symplectic_alphabet;
use crate::oracle::strip_decompose;
use crate::partition::{even_conjugate_weights, subpartitions, Partition, SkewShape};
use crate::tableau::{SpWeight, Tableau};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: Rank,
}

impl BranchingQuery {
    pub fn new(lambda: Partition, mu: Partition, n: Rank) -> Result<Self> {
        if let Rank::Finite(n) = n {
            if n == 0 {
                return Err(Error::RankViolation("rank must be positive".into()));
            }
            if lambda.len() > 2 * n as usize {
                return Err(Error::RankViolation(format!(
                    "{lambda} has more than {} parts",
                    2 * n
                )));
            }
            if mu.len() > n as usize {
                return Err(Error::RankViolation(format!(
                    "{mu} has more than {n} parts"
                )));
            }
        }
        Ok(BranchingQuery { lambda, mu, n })
    }

    fn skew(&self) -> Option<SkewShape> {
        SkewShape::new(self.lambda.clone(), self.mu.clone()).ok()
    }

    fn finite_n(&self) -> Result<u32> {
        match self.n {
            Rank::Finite(n) => Ok(n),
            Rank::Unbounded => Err(Error::RankViolation(
                "this method needs a finite rank".into(),
            )),
        }
    }
}

/// Largest letter an sp-highest tableau of shape `λ` can use when the rank is unbounded.
pub fn unbounded_letter_bound(lambda: &Partition) -> u32 {
    lambda.len() as u32
}

/// Visit the sp-highest tableaux of shape `λ`, sp-weight `μ` with letters up to `letters`.
pub fn visit_highest_weight(
    lambda: &Partition,
    mu: &Partition,
    letters: u32,
    mut sink: impl FnMut(Tableau),
) {
    if !mu.is_contained_in(lambda)
        || (lambda.size() - mu.size()) % 2 == 1
        || mu.len() > letters as usize
    {
        return;
    }
    Enumeration::new(
        SkewShape::straight(lambda.clone()),
        symplectic_alphabet(letters),
    )
    .weight(WeightFilter::Sp(SpWeight::from_partition(mu)))
    .sp_highest()
    .iter()
    .for_each(&mut sink);
}

fn crystal_letters(q: &BranchingQuery) -> u32 {
    match q.n {
        Rank::Finite(n) => n,
        Rank::Unbounded => unbounded_letter_bound(&q.lambda),
    }
}

/// Visit LR tableaux of shape `λ ∖ μ` with weight `(2δ)'`, keeping only n-symplectic ones
/// for finite `n`.
pub fn visit_lr(q: &BranchingQuery, mut sink: impl FnMut(Tableau)) -> Result<()> {
    let Some(shape) = q.skew() else { return Ok(()) };
    if shape.size() % 2 == 1 {
        return Ok(());
    }
    for nu in even_conjugate_weights(shape.size())? {
        for t in enumerate_lr(shape.clone(), &nu)? {
            let keep = match q.n {
                Rank::Finite(n) => is_n_symplectic(&t, n)?,
                Rank::Unbounded => true,
            };
            if keep {
                sink(t);
            }
        }
    }
    Ok(())
}

/// Number of sp-highest weight tableaux of shape `λ` and weight `μ` on `A_n`.
pub fn count_crystal(q: &BranchingQuery) -> u64 {
    let mut count = 0;
    visit_highest_weight(&q.lambda, &q.mu, crystal_letters(q), |_| count += 1);
    count
}

/// Number of n-symplectic LR tableaux of shape `λ ∖ μ` with weight `(2δ)'`.
pub fn count_sundaram(q: &BranchingQuery) -> Result<u64> {
    q.finite_n()?;
    let mut count = 0;
    visit_lr(q, |_| count += 1)?;
    Ok(count)
}

/// Number of LR tableaux of shape `λ ∖ μ` with weight `(2δ)'`.
pub fn count_stable(lambda: &Partition, mu: &Partition) -> Result<u64> {
    let q = BranchingQuery {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n: Rank::Unbounded,
    };
    let mut count = 0;
    visit_lr(&q, |_| count += 1)?;
    Ok(count)
}

/// `μ ↦ count_crystal(λ, μ, n)` for every `μ` with a nonzero count.
pub fn decompose(lambda: &Partition, n: u32) -> Result<BTreeMap<Partition, u64>> {
    BranchingQuery::new(lambda.clone(), Partition::empty(), Rank::Finite(n))?;
    let mut out = BTreeMap::new();
    for mu in subpartitions(lambda) {
        if mu.len() > n as usize {
            continue;
        }
        let c = count_crystal(&BranchingQuery {
            lambda: lambda.clone(),
            mu: mu.clone(),
            n: Rank::Finite(n),
        });
        if c > 0 {
            out.insert(mu, c);
        }
    }
    Ok(out)
}

/// Both enumerated sets and the matching between them given by the bijection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub hw: Vec<Tableau>,
    pub lr: Vec<Tableau>,
    /// `(index into lr, index into hw)`.
    pub pairs: Vec<(usize, usize)>,
}

pub fn witnesses(q: &BranchingQuery) -> Result<Witnesses> {
    let mut hw = Vec::new();
    visit_highest_weight(&q.lambda, &q.mu, crystal_letters(q), |t| hw.push(t));
    let mut lr = Vec::new();
    visit_lr(q, |t| lr.push(t))?;
    let mut pairs = Vec::with_capacity(lr.len());
    for (i, t) in lr.iter().enumerate() {
        let image = forward_with(t, Validation::Full)?.hw;
        let j = hw.iter().position(|h| *h == image).ok_or_else(|| {
            Error::Validation(format!(
                "image of\n{t}is not among the highest weight tableaux"
            ))
        })?;
        pairs.push((i, j));
    }
    Ok(Witnesses { hw, lr, pairs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Crystal,
    Sundaram,
    Stable,
    Character,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Crystal,
        Method::Sundaram,
        Method::Stable,
        Method::Character,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub n: Rank,
    pub crystal: Option<u64>,
    pub sundaram: Option<u64>,
    pub stable: Option<u64>,
    pub character: Option<u64>,
}

impl BranchingReport {
    /// Counts that should agree: all present ones, except `stable` below rank `ℓ(λ)`.
    pub fn consistent(&self) -> bool {
        let mut exact: Vec<u64> = [self.crystal, self.sundaram, self.character]
            .into_iter()
            .flatten()
            .collect();
        let stable_exact = match self.n {
            Rank::Finite(n) => n as usize >= self.lambda.len(),
            Rank::Unbounded => true,
        };
        if let Some(s) = self.stable {
            if stable_exact {
                exact.push(s);
            } else if exact.iter().any(|&c| c > s) {
                return false;
            }
        }
        exact.windows(2).all(|w| w[0] == w[1])
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("lambda".into(), json!(self.lambda.parts()));
        m.insert("mu".into(), json!(self.mu.parts()));
        m.insert(
            "n".into(),
            match self.n {
                Rank::Finite(n) => json!(n),
                Rank::Unbounded => json!("inf"),
            },
        );
        for (key, v) in [
            ("crystal", self.crystal),
            ("sundaram", self.sundaram),
            ("stable", self.stable),
            ("character", self.character),
        ] {
            if let Some(v) = v {
                m.insert(key.into(), json!(v));
            }
        }
        Value::Object(m)
    }
}

/// Run the requested methods. Methods that need a finite rank are skipped when it is
/// unbounded.
pub fn report(q: &BranchingQuery, methods: &[Method]) -> Result<BranchingReport> {
    let mut r = BranchingReport {
        lambda: q.lambda.clone(),
        mu: q.mu.clone(),
        n: q.n,
        crystal: None,
        sundaram: None,
        stable: None,
        character: None,
    };
    let finite = matches!(q.n, Rank::Finite(_));
    for m in methods {
        match m {
            Method::Crystal => r.crystal = Some(count_crystal(q)),
            Method::Sundaram if finite => r.sundaram = Some(count_sundaram(q)?),
            Method::Stable => r.stable = Some(count_stable(&q.lambda, &q.mu)?),
            Method::Character if finite => {
                let n = q.finite_n()?;
                r.character = Some(
                    strip_decompose(&q.lambda, n)?
                        .get(&q.mu)
                        .copied()
                        .unwrap_or(0),
                );
            }
            _ => {}
        }
    }
    Ok(r)
}
