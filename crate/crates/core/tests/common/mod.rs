#![allow(dead_code)]

use spbranch::cascade::{check_conditions, CascadeSequence};
use spbranch::enumerate::{enumerate_lr, Enumeration};
use spbranch::letter::{symplectic_alphabet, Letter};
use spbranch::partition::{
    is_even_conjugate, partitions_of, reading_key, subpartitions, Partition, SkewShape,
};
use spbranch::tableau::Tableau;

pub type Cell = (usize, usize);

pub fn before(a: Cell, b: Cell) -> bool {
    reading_key(a) < reading_key(b)
}

/// All LR tableaux on skew shapes `λ ∖ μ` with `|λ| ≤ max_outer` and between 1 and
/// `max_cells` cells. With `even` only weights with even columns are kept.
pub fn lr_domain(max_cells: usize, max_outer: usize, even: bool) -> Vec<Tableau> {
    let mut out = Vec::new();
    for size in 1..=max_outer {
        for lambda in partitions_of(size) {
            for mu in subpartitions(&lambda) {
                let k = size - mu.size();
                if k == 0 || k > max_cells {
                    continue;
                }
                let shape = SkewShape::new(lambda.clone(), mu).unwrap();
                for nu in partitions_of(k) {
                    if even && !is_even_conjugate(&nu) {
                        continue;
                    }
                    out.extend(enumerate_lr(shape.clone(), &nu).unwrap());
                }
            }
        }
    }
    out
}

/// Highest weight tableaux of straight shape `λ`, any rank.
pub fn highest_weight_tableaux(lambda: &Partition) -> Vec<Tableau> {
    Enumeration::new(
        SkewShape::straight(lambda.clone()),
        symplectic_alphabet(lambda.len() as u32),
    )
    .sp_highest()
    .iter()
    .collect()
}

/// Every ordered sequence of `t` satisfying (I)-(III).
pub fn admissible_sequences(t: &Tableau) -> Vec<CascadeSequence> {
    let entries = t.reading_entries();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Cell>> = entries
        .iter()
        .filter(|(_, l)| *l == Letter::unbarred(1))
        .map(|(c, _)| vec![*c])
        .collect();
    while let Some(cells) = stack.pop() {
        let s = CascadeSequence::new(cells.clone()).unwrap();
        if check_conditions(t, &s).unwrap().all() {
            out.push(s);
        }
        let want = Letter::unbarred(cells.len() as u32 + 1);
        let last = *cells.last().unwrap();
        for &(c, l) in &entries {
            if l == want && before(last, c) {
                let mut next = cells.clone();
                next.push(c);
                stack.push(next);
            }
        }
    }
    out
}
