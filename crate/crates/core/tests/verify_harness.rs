use spbranch::bijection::forward_using;
use spbranch::cascade::{iota_lr_with, StepRecord, Validation};
use spbranch::error::Result;
use spbranch::tableau::Tableau;
use spbranch::verify::{run_all, run_all_with, VerifyConfig};

fn small() -> VerifyConfig {
    VerifyConfig {
        max_cells: 6,
        max_rows: 4,
        ranks: vec![1, 2, 3],
        seed: 7,
    }
}

#[test]
fn all_checks_pass() {
    let reports = run_all(&small());
    for r in &reports {
        println!("{r}");
        assert!(
            r.passed(),
            "{}: {}",
            r.name,
            r.counterexample.as_deref().unwrap_or("")
        );
        assert!(r.cases > 0, "{} examined nothing", r.name);
    }
}

// iota_lr that reports the 1 one row lower than it was whenever that row exists.
fn mutated(t: &Tableau) -> Result<Tableau> {
    let step = |t: &Tableau| {
        let (next, mut rec) = iota_lr_with(t, Validation::Off)?;
        if let StepRecord::IotaLr {
            row_of_one,
            shape_before,
            ..
        } = &mut rec
        {
            if *row_of_one < shape_before.outer().len() {
                *row_of_one += 1;
            }
        }
        Ok((next, rec))
    };
    forward_using(t, Validation::Off, &step).map(|p| p.hw)
}

#[test]
fn broken_iota_lr_is_caught() {
    let reports = run_all_with(&small(), &mutated);
    let bij = reports.iter().find(|r| r.name == "bijection").unwrap();
    assert!(!bij.passed());
    let ce = bij.counterexample.as_deref().unwrap();
    assert!(ce.lines().count() >= 2, "{ce}");
    println!("{ce}");
}
