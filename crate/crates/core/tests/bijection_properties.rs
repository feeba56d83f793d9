mod common;

use std::collections::BTreeSet;

use spbranch::bijection::*;
use spbranch::cascade::{iota_lr, iota_sp, Direction, StepRecord, Validation};
use spbranch::enumerate::{enumerate_lr, Enumeration, WeightFilter};
use spbranch::format::parse_text_blocks;
use spbranch::letter::{symplectic_alphabet, Letter};
use spbranch::partition::{
    even_conjugate_weights, partitions_bounded, subpartitions, Partition, SkewShape,
};
use spbranch::tableau::{SpWeight, Tableau};

fn fixture(name: &str) -> Vec<Tableau> {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_text_blocks(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn lr_side(lambda: &Partition, mu: &Partition) -> Vec<Tableau> {
    let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
    let k = shape.size();
    if k % 2 == 1 {
        return Vec::new();
    }
    even_conjugate_weights(k)
        .unwrap()
        .iter()
        .flat_map(|nu| enumerate_lr(shape.clone(), nu).unwrap())
        .collect()
}

fn hw_side(lambda: &Partition, mu: &Partition) -> Vec<Tableau> {
    Enumeration::new(
        SkewShape::straight(lambda.clone()),
        symplectic_alphabet(lambda.len() as u32),
    )
    .weight(WeightFilter::Sp(SpWeight::from_partition(mu)))
    .sp_highest()
    .iter()
    .collect()
}

fn sweep() -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for size in 0..=8 {
        for lambda in partitions_bounded(size, size, 5) {
            for mu in subpartitions(&lambda) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    out
}

#[test]
fn worked_chain() {
    let lr = fixture("chain_lr.txt");
    let hw = fixture("chain_hw.txt");
    assert_eq!((lr.len(), hw.len()), (7, 7));

    for k in 0..6 {
        let (next, rec) = iota_lr(&lr[k]).unwrap();
        assert_eq!(next, lr[k + 1], "stage {k}");
        let (prev, del) = iota_sp(&hw[k]).unwrap();
        assert_eq!(prev, hw[k + 1], "stage {k}");
        let (StepRecord::IotaLr { row_of_one, .. }, StepRecord::IotaSp { letter, .. }) = (rec, del)
        else {
            panic!()
        };
        assert_eq!(letter, Letter::barred(row_of_one as u32));
    }

    let pair = forward_traced(&lr[0]).unwrap();
    assert_eq!(pair.hw, hw[0]);
    let rows: Vec<usize> = pair.trace.iter().filter_map(|s| s.row_of_one()).collect();
    assert_eq!(rows, vec![3, 1, 4, 2, 2, 3]);
    let deleted: Vec<i32> = inverse_traced(&hw[0])
        .unwrap()
        .trace
        .iter()
        .filter_map(|s| match s {
            StepRecord::IotaSp { letter, .. } => Some(letter.to_signed()),
            _ => None,
        })
        .collect();
    assert_eq!(deleted, vec![-3, -1, -4, -2, -2, -3]);
    // the displayed part of the chain: five steps, ending at the pair with 3 and 3̄ in row 4
    assert_eq!(lr[5].size(), 2);
    assert_eq!(hw[5].get(4, 3), Some(Letter::barred(3)));
    for k in 0..7 {
        assert_eq!(forward(&lr[k]).unwrap(), hw[k], "stage {k}");
        assert_eq!(inverse(&hw[k]).unwrap(), lr[k], "stage {k}");
    }
}

#[test]
fn bijection_on_sweep() {
    let mut pairs = 0;
    for (lambda, mu) in sweep() {
        let lrs = lr_side(&lambda, &mu);
        let hws: BTreeSet<String> = hw_side(&lambda, &mu)
            .iter()
            .map(|t| t.to_string())
            .collect();
        let mut images = BTreeSet::new();
        for lr in &lrs {
            let pair = forward_traced(lr).unwrap();
            assert_eq!(pair.hw.shape().outer(), &lambda);
            assert_eq!(pair.hw.sp_weight(), SpWeight::from_partition(&mu));
            assert_eq!(&inverse(&pair.hw).unwrap(), lr);
            pair.replay().unwrap();
            assert_eq!(forward_with(lr, Validation::Off).unwrap().hw, pair.hw);
            images.insert(pair.hw.to_string());
            pairs += 1;
        }
        assert_eq!(images, hws, "λ={lambda} μ={mu}");
        assert_eq!(images.len(), lrs.len());
    }
    assert!(pairs > 150);
}

#[test]
fn inverse_on_sweep() {
    for (lambda, mu) in sweep() {
        for hw in hw_side(&lambda, &mu) {
            let back = inverse_traced(&hw).unwrap();
            assert_eq!(
                back.lr.shape(),
                &SkewShape::new(lambda.clone(), mu.clone()).unwrap()
            );
            assert_eq!(forward(&back.lr).unwrap(), hw);
            back.replay().unwrap();
            assert_eq!(inverse_with(&hw, Validation::Off).unwrap().lr, back.lr);
        }
    }
}

#[test]
fn inserted_letters_follow_rows_of_one() {
    for (lambda, mu) in sweep() {
        for lr in lr_side(&lambda, &mu) {
            let trace = forward_traced(&lr).unwrap().trace;
            let rows: Vec<usize> = trace.iter().filter_map(|s| s.row_of_one()).collect();
            let inserted: Vec<Letter> = trace
                .iter()
                .filter_map(|s| match s {
                    StepRecord::IotaSp {
                        direction: Direction::Inverse,
                        letter,
                        ..
                    } => Some(*letter),
                    _ => None,
                })
                .collect();
            assert_eq!(rows.len(), inserted.len());
            for (k, l) in inserted.iter().enumerate() {
                assert_eq!(*l, Letter::barred(rows[rows.len() - 1 - k] as u32));
            }
        }
    }
}

#[test]
fn symplectic_condition_matches_image_alphabet() {
    let mut split = 0;
    for (lambda, mu) in sweep() {
        for lr in lr_side(&lambda, &mu) {
            let hw = forward(&lr).unwrap();
            for n in 2..=4 {
                if mu.len() > n as usize || lambda.len() > 2 * n as usize {
                    continue;
                }
                let within = fillings_within(&hw, n);
                assert_eq!(within, is_n_symplectic(&lr, n).unwrap(), "{lr} n={n}");
                assert_eq!(within, !has_deep_one(&lr, n).unwrap(), "{lr} n={n}");
                split += usize::from(!within);
            }
        }
    }
    assert!(split > 0);
}

#[test]
fn trace_sp_steps_match_direct_calls() {
    let lr = fixture("chain_lr.txt");
    let pair = forward_traced(&lr[0]).unwrap();
    assert_eq!(pair.trace.len(), 12);
    assert!(pair.trace[..6].iter().all(|s| matches!(
        s,
        StepRecord::IotaLr {
            direction: Direction::Forward,
            ..
        }
    )));
    let lines = pair.trace_lines();
    assert_eq!(
        lines[0],
        "iota_lr: s=[(3,2),(4,2),(5,2),(6,1)] m=4 row_of_one=3"
    );
    assert_eq!(lines[6], "iota_sp^-1: inserted=-3 at (4,3)");
    assert_eq!(lines[11], "iota_sp^-1: inserted=-3 at (6,1)");
}
