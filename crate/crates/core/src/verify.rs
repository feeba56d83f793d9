//! Exhaustive cross-checks over all shapes within given bounds.
//!
//! Each check returns a [`CheckReport`] with the number of cases examined and, on failure,
//! the first counterexample rendered in the text tableau format. The bijection checks take
//! the forward map as a parameter so that a deliberately broken map can be run through the
//! same harness.

use std::collections::BTreeSet;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bijection::{fillings_within, forward, has_deep_one, inverse, is_n_symplectic};
use crate::branching::{
    count_crystal, count_stable, count_sundaram, decompose, unbounded_letter_bound,
    visit_highest_weight, visit_lr, BranchingQuery,
};
use crate::cascade::{iota_lr, CascadeSequence, StepRecord};
use crate::crystal::{is_sp_highest, is_sp_highest_by_operators, validate_sp_structure, Rank};
use crate::enumerate::enumerate_ssyt;
use crate::error::Result;
use crate::letter::symplectic_alphabet;
use crate::oracle::{restrict_gl_character, sp_dim, strip_decompose, strip_decompose_with};
use crate::partition::{partitions_bounded, reading_key, subpartitions, Partition, SkewShape};
use crate::tableau::{SpWeight, Tableau};

pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `|λ|`.
    pub max_cells: usize,
    /// Largest `ℓ(λ)`.
    pub max_rows: usize,
    pub ranks: Vec<u32>,
    /// Seed for the random tie-breaking of the character oracle.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_cells: 8,
            max_rows: 5,
            ranks: vec![2, 3],
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        CheckReport {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(describe());
        }
    }

    fn error(&mut self, e: impl fmt::Display, describe: impl FnOnce() -> String) {
        self.case(false, || format!("{}error: {e}\n", describe()));
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {:<22} cases={}", self.name, self.cases)
    }
}

pub type ForwardMap<'a> = &'a dyn Fn(&Tableau) -> Result<Tableau>;

fn shapes(max_cells: usize, max_rows: usize) -> Vec<Partition> {
    (0..=max_cells)
        .flat_map(|s| partitions_bounded(s, s, max_rows))
        .collect()
}

fn lr_tableaux(lambda: &Partition, mu: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    let q = BranchingQuery {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n: Rank::Unbounded,
    };
    visit_lr(&q, |t| out.push(t)).expect("shapes come from subpartitions");
    out
}

fn hw_tableaux(lambda: &Partition, mu: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    visit_highest_weight(lambda, mu, unbounded_letter_bound(lambda), |t| out.push(t));
    out
}

fn pair(lambda: &Partition, mu: &Partition) -> String {
    format!("λ={lambda} μ={mu}\n")
}

fn query(lambda: &Partition, mu: &Partition, n: u32) -> String {
    format!("λ={lambda} μ={mu} n={n}\n")
}

/// Crystal count equals the n-symplectic LR count.
pub fn check_main_theorem(cfg: &VerifyConfig) -> CheckReport {
    let mut r = CheckReport::new("counts");
    for &n in &cfg.ranks {
        for lambda in shapes(cfg.max_cells, cfg.max_rows.min(2 * n as usize)) {
            for mu in subpartitions(&lambda)
                .into_iter()
                .filter(|m| m.len() <= n as usize)
            {
                let q = BranchingQuery {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    n: Rank::Finite(n),
                };
                match count_sundaram(&q) {
                    Ok(s) => {
                        let c = count_crystal(&q);
                        r.case(c == s, || {
                            format!("{}crystal={c} sundaram={s}\n", query(&lambda, &mu, n))
                        });
                    }
                    Err(e) => r.error(e, || query(&lambda, &mu, n)),
                }
            }
        }
    }
    r
}

/// For `n ≥ ℓ(λ)` every count equals the stable LR count.
pub fn check_stability(cfg: &VerifyConfig) -> CheckReport {
    let mut r = CheckReport::new("stability");
    for lambda in shapes(cfg.max_cells, cfg.max_rows) {
        let l = lambda.len().max(1) as u32;
        let ranks: BTreeSet<u32> = cfg
            .ranks
            .iter()
            .copied()
            .filter(|&n| n >= l)
            .chain([l, l + 1])
            .collect();
        for mu in subpartitions(&lambda) {
            let stable = match count_stable(&lambda, &mu) {
                Ok(s) => s,
                Err(e) => {
                    r.error(e, || format!("λ={lambda} μ={mu}\n"));
                    continue;
                }
            };
            for &n in &ranks {
                let q = BranchingQuery {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    n: Rank::Finite(n),
                };
                let (c, s) = (count_crystal(&q), count_sundaram(&q).unwrap_or(u64::MAX));
                r.case(c == stable && s == stable, || {
                    format!(
                        "{}crystal={c} sundaram={s} stable={stable}\n",
                        query(&lambda, &mu, n)
                    )
                });
            }
        }
    }
    r
}

/// The forward map is a bijection onto the highest weight tableaux, inverted by `inverse`.
pub fn check_bijection(cfg: &VerifyConfig, f: ForwardMap) -> CheckReport {
    let mut r = CheckReport::new("bijection");
    for lambda in shapes(cfg.max_cells, cfg.max_rows) {
        for mu in subpartitions(&lambda) {
            let hws = hw_tableaux(&lambda, &mu);
            let expected: BTreeSet<&Tableau> = hws.iter().collect();
            let mut images = BTreeSet::new();
            let lrs = lr_tableaux(&lambda, &mu);
            for lr in &lrs {
                let image = match f(lr) {
                    Ok(t) => t,
                    Err(e) => {
                        r.error(e, || format!("{}{lr}", pair(&lambda, &mu)));
                        continue;
                    }
                };
                let valid = image.shape().outer() == &lambda
                    && image.sp_weight() == SpWeight::from_partition(&mu)
                    && image.is_semistandard().unwrap_or(false)
                    && is_sp_highest(&image.reading(), Rank::Unbounded).unwrap_or(false);
                r.case(valid, || {
                    format!("image is not a highest weight tableau of weight {mu}:\n{lr}\n{image}")
                });
                let back = inverse(&image);
                r.case(back.as_ref() == Ok(lr), || {
                    format!("inverse does not recover\n{lr}\nfrom\n{image}")
                });
                images.insert(image);
            }
            r.case(images.len() == lrs.len(), || {
                format!("{}forward map is not injective\n", pair(&lambda, &mu))
            });
            let same = images.len() == expected.len()
                && images.iter().zip(&expected).all(|(a, b)| a == *b);
            r.case(same, || {
                format!(
                    "{}image differs from the highest weight tableaux\n",
                    pair(&lambda, &mu)
                )
            });
            for hw in &hws {
                let ok = inverse(hw)
                    .and_then(|lr| f(&lr))
                    .map(|t| &t == hw)
                    .unwrap_or(false);
                r.case(ok, || {
                    format!("forward(inverse(hw)) differs from hw:\n{hw}")
                });
            }
        }
    }
    r
}

/// Image letters stay in `A_n` iff the LR tableau is n-symplectic iff no iterate has a deep 1.
pub fn check_symplectic_conditions(
    cfg: &VerifyConfig,
    f: ForwardMap,
) -> (CheckReport, CheckReport) {
    let mut nsymp = CheckReport::new("nsymp");
    let mut deep = CheckReport::new("1filling");
    for lambda in shapes(cfg.max_cells, cfg.max_rows) {
        for mu in subpartitions(&lambda) {
            for lr in lr_tableaux(&lambda, &mu) {
                let image = match f(&lr) {
                    Ok(t) => t,
                    Err(e) => {
                        nsymp.error(e, || lr.to_string());
                        continue;
                    }
                };
                for &n in &cfg.ranks {
                    if mu.len() > n as usize || lambda.len() > 2 * n as usize {
                        continue;
                    }
                    let within = fillings_within(&image, n);
                    let symp = is_n_symplectic(&lr, n).unwrap_or(!within);
                    nsymp.case(within == symp, || format!("n={n}\n{lr}\n{image}"));
                    let d = has_deep_one(&lr, n).unwrap_or(within);
                    deep.case(within != d, || format!("n={n}\n{lr}\n{image}"));
                }
            }
        }
    }
    (nsymp, deep)
}

/// Prefix criterion against the raising operators, and the structural screen on every
/// highest weight tableau.
pub fn check_highest_weight(cfg: &VerifyConfig) -> (CheckReport, CheckReport) {
    let mut prefix = CheckReport::new("hwtC");
    let mut screen = CheckReport::new("sptab");
    for &n in &cfg.ranks {
        for lambda in shapes(cfg.max_cells, cfg.max_rows.min(2 * n as usize)) {
            for t in enumerate_ssyt(
                SkewShape::straight(lambda.clone()),
                symplectic_alphabet(n),
                None,
            ) {
                let w = t.reading();
                let (a, b) = (
                    is_sp_highest(&w, Rank::Finite(n)),
                    is_sp_highest_by_operators(&w, n),
                );
                prefix.case(a.is_ok() && a == b, || format!("n={n}\n{t}"));
                if a == Ok(true) {
                    screen.case(validate_sp_structure(&t), || format!("n={n}\n{t}"));
                }
            }
        }
    }
    for lambda in shapes(cfg.max_cells, cfg.max_rows) {
        for mu in subpartitions(&lambda) {
            for t in hw_tableaux(&lambda, &mu) {
                screen.case(validate_sp_structure(&t), || t.to_string());
            }
        }
    }
    (prefix, screen)
}

/// Sequence and deleted cell of every `iota_lr` step down to the empty tableau.
pub fn lr_chain(t: &Tableau) -> Result<Vec<(CascadeSequence, Cell)>> {
    let mut out = Vec::new();
    let mut cur = t.clone();
    while !cur.is_empty() {
        let (next, rec) = iota_lr(&cur)?;
        if let StepRecord::IotaLr {
            sequence,
            deleted_cell,
            ..
        } = rec
        {
            out.push((sequence, deleted_cell));
        }
        cur = next;
    }
    Ok(out)
}

/// Carry a cell of the tableau after steps `from..to` of a chain back to the frame before
/// step `from`, undoing the slides.
pub fn lift(chain: &[(CascadeSequence, Cell)], from: usize, to: usize, cell: Cell) -> Cell {
    let mut c = cell;
    for (_, d) in chain[from..to].iter().rev() {
        if c.0 == d.0 && c.1 >= d.1 {
            c.1 += 1;
        }
    }
    c
}

fn before(a: Cell, b: Cell) -> bool {
    reading_key(a) < reading_key(b)
}

/// Order of consecutive sequences `s1` then `s2` given in a common frame: if `m1 ≤ m2` each
/// `k ∈ s1` comes strictly after `k ∈ s2`, otherwise weakly before.
pub fn consecutive_order_holds(s1: &CascadeSequence, s2: &[Cell]) -> bool {
    let (m1, m2) = (s1.m() as usize, s2.len());
    (1..=m1.min(m2)).all(|k| {
        let (a, b) = (s1.cell(k as u32), s2[k - 1]);
        if m1 <= m2 {
            before(b, a)
        } else {
            a == b || before(a, b)
        }
    })
}

/// With `r + 1` the length of the last row of `t` and the unimodal pattern
/// `m_1 ≤ … ≤ m_{r−1} > m_r ≤ … ≤ m_{2r−1}` on the chain, check
/// `m_i > m_{i+r}` ⇔ every `k ∈ s_i` strictly precedes `k ∈ s_{i+r}`. `None` when the
/// hypothesis does not apply.
pub fn pinned_order_check(t: &Tableau, chain: &[(CascadeSequence, Cell)]) -> Option<bool> {
    let lam = t.shape().outer();
    let r = (lam.part(lam.len()) as usize).checked_sub(1)?;
    let ms: Vec<u32> = chain.iter().map(|s| s.0.m()).collect();
    if r == 0 || 2 * r - 1 > ms.len() {
        return None;
    }
    let pattern = (0..r.saturating_sub(2)).all(|x| ms[x] <= ms[x + 1])
        && (r < 2 || ms[r - 2] > ms[r - 1])
        && (r - 1..2 * r - 2).all(|x| ms[x] <= ms[x + 1]);
    if !pattern {
        return None;
    }
    let mut ok = true;
    for i in 0..r {
        if i + r >= ms.len() {
            break;
        }
        let strictly_before = (1..=ms[i].min(ms[i + r])).all(|k| {
            let b = lift(chain, i, i + r, chain[i + r].0.cell(k));
            before(chain[i].0.cell(k), b)
        });
        ok &= (ms[i] > ms[i + r]) == strictly_before;
    }
    Some(ok)
}

/// Order properties of the sequences along every `iota_lr` chain.
pub fn check_cascade_order(cfg: &VerifyConfig) -> (CheckReport, CheckReport) {
    let mut first = CheckReport::new("cascades1");
    let mut second = CheckReport::new("cascades2");
    for lambda in shapes(cfg.max_cells, cfg.max_rows) {
        for mu in subpartitions(&lambda) {
            for lr in lr_tableaux(&lambda, &mu) {
                let chain = match lr_chain(&lr) {
                    Ok(c) => c,
                    Err(e) => {
                        first.error(e, || lr.to_string());
                        continue;
                    }
                };
                for j in 0..chain.len().saturating_sub(1) {
                    let s2: Vec<Cell> = chain[j + 1]
                        .0
                        .cells()
                        .iter()
                        .map(|&c| lift(&chain, j, j + 1, c))
                        .collect();
                    first.case(consecutive_order_holds(&chain[j].0, &s2), || {
                        format!("step {}\n{lr}", j + 1)
                    });
                }
                if let Some(ok) = pinned_order_check(&lr, &chain) {
                    second.case(ok, || lr.to_string());
                }
            }
        }
    }
    (first, second)
}

/// Character stripping against the crystal counts, with dimensions and random tie-breaks.
pub fn check_oracle(cfg: &VerifyConfig) -> CheckReport {
    let mut r = CheckReport::new("oracle");
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for &n in &cfg.ranks {
        for lambda in shapes(
            cfg.max_cells.min(6),
            cfg.max_rows.min(4).min(2 * n as usize),
        ) {
            let (strip, crystal) = match (strip_decompose(&lambda, n), decompose(&lambda, n)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => {
                    r.error(e, || format!("λ={lambda} n={n}\n"));
                    continue;
                }
            };
            r.case(strip == crystal, || {
                format!("λ={lambda} n={n}\ncharacter {strip:?}\ncrystal {crystal:?}\n")
            });
            let ssyt: u64 = restrict_gl_character(&lambda, n)
                .map(|c| c.values().sum())
                .unwrap_or(0);
            let dims: u64 = crystal
                .iter()
                .map(|(mu, m)| m * sp_dim(mu, n).unwrap_or(0))
                .sum();
            r.case(ssyt == dims, || {
                format!("λ={lambda} n={n}\n#SSYT={ssyt} Σ m·dim={dims}\n")
            });
            let shuffled = strip_decompose_with(&lambda, n, |c| rng.gen_range(0..c.len()));
            r.case(shuffled.as_ref() == Ok(&strip), || {
                format!("λ={lambda} n={n}\ntie-break changes the result\n")
            });
        }
    }
    r
}

/// Every check with the library's forward map.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckReport> {
    run_all_with(cfg, &forward)
}

pub fn run_all_with(cfg: &VerifyConfig, f: ForwardMap) -> Vec<CheckReport> {
    let (nsymp, deep) = check_symplectic_conditions(cfg, f);
    let (prefix, screen) = check_highest_weight(cfg);
    let (c1, c2) = check_cascade_order(cfg);
    vec![
        check_main_theorem(cfg),
        check_stability(cfg),
        check_bijection(cfg, f),
        nsymp,
        deep,
        prefix,
        screen,
        c1,
        c2,
        check_oracle(cfg),
    ]
}
