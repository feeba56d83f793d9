use std::collections::BTreeSet;

use spbranch::branching::*;
use spbranch::crystal::Rank;
use spbranch::enumerate::enumerate_ssyt;
use spbranch::letter::symplectic_alphabet;
use spbranch::oracle::sp_dim;
use spbranch::partition::{partitions_bounded, subpartitions, Partition, SkewShape};

fn shapes(max_size: usize, max_len: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_bounded(s, s, max_len))
        .collect()
}

fn raw(lambda: &Partition, mu: &Partition, n: Rank) -> BranchingQuery {
    BranchingQuery {
        lambda: lambda.clone(),
        mu: mu.clone(),
        n,
    }
}

#[test]
fn crystal_equals_sundaram_and_stable() {
    let mut nonzero = 0;
    for n in 2..=3u32 {
        for lambda in shapes(8, 5.min(2 * n as usize)) {
            for mu in subpartitions(&lambda)
                .into_iter()
                .filter(|m| m.len() <= n as usize)
            {
                let q = BranchingQuery::new(lambda.clone(), mu.clone(), Rank::Finite(n)).unwrap();
                let crystal = count_crystal(&q);
                assert_eq!(
                    crystal,
                    count_sundaram(&q).unwrap(),
                    "λ={lambda} μ={mu} n={n}"
                );
                if n as usize >= lambda.len() {
                    assert_eq!(
                        crystal,
                        count_stable(&lambda, &mu).unwrap(),
                        "λ={lambda} μ={mu} n={n}"
                    );
                }
                nonzero += usize::from(crystal > 0);
            }
        }
    }
    assert!(nonzero > 300);
}

#[test]
fn sundaram_grows_with_rank_until_stable() {
    for lambda in shapes(8, 5) {
        for mu in subpartitions(&lambda) {
            let counts: Vec<u64> = (1..=lambda.len().max(1) as u32)
                .map(|n| count_sundaram(&raw(&lambda, &mu, Rank::Finite(n))).unwrap())
                .collect();
            assert!(
                counts.windows(2).all(|w| w[0] <= w[1]),
                "λ={lambda} μ={mu} {counts:?}"
            );
            assert_eq!(*counts.last().unwrap(), count_stable(&lambda, &mu).unwrap());
        }
    }
}

#[test]
fn witnesses_pair_up() {
    for n in 2..=3u32 {
        for lambda in shapes(7, 5.min(2 * n as usize)) {
            for mu in subpartitions(&lambda)
                .into_iter()
                .filter(|m| m.len() <= n as usize)
            {
                let q = BranchingQuery::new(lambda.clone(), mu.clone(), Rank::Finite(n)).unwrap();
                let w = witnesses(&q).unwrap();
                assert_eq!(w.hw.len() as u64, count_crystal(&q));
                assert_eq!(w.lr.len(), w.hw.len());
                let lr: BTreeSet<usize> = w.pairs.iter().map(|p| p.0).collect();
                let hw: BTreeSet<usize> = w.pairs.iter().map(|p| p.1).collect();
                assert_eq!(
                    (lr.len(), hw.len()),
                    (w.lr.len(), w.hw.len()),
                    "λ={lambda} μ={mu} n={n}"
                );
            }
        }
    }
}

#[test]
fn unbounded_letter_bound_is_enough() {
    for lambda in shapes(8, 5) {
        for mu in subpartitions(&lambda) {
            let bound = unbounded_letter_bound(&lambda);
            let (mut narrow, mut wide) = (0, 0);
            visit_highest_weight(&lambda, &mu, bound, |_| narrow += 1);
            visit_highest_weight(&lambda, &mu, bound + 2, |_| wide += 1);
            assert_eq!(narrow, wide, "λ={lambda} μ={mu}");
        }
    }
}

#[test]
fn dimensions_add_up() {
    for n in 2..=3u32 {
        for lambda in shapes(6, 2 * n as usize) {
            let total: u64 = decompose(&lambda, n)
                .unwrap()
                .iter()
                .map(|(mu, m)| m * sp_dim(mu, n).unwrap())
                .sum();
            let ssyt = enumerate_ssyt(
                SkewShape::straight(lambda.clone()),
                symplectic_alphabet(n),
                None,
            )
            .count();
            assert_eq!(total, ssyt as u64, "λ={lambda} n={n}");
        }
    }
}
