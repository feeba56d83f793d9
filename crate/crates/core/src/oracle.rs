//! Character-theoretic cross-check for the tableau counts: Freudenthal multiplicities for
//! `sp_{2n}` and branching by stripping highest weights off the restricted `gl_{2n}`
//! character. All arithmetic is in integers.

use std::collections::{BTreeMap, HashMap};

use crate::enumerate::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::letter::symplectic_alphabet;
use crate::partition::{Partition, SkewShape};

/// Weight (length `n`) to multiplicity.
pub type WeightMultiset = BTreeMap<Vec<i64>, u64>;

/// Type `C_n` data in ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemC {
    n: usize,
    positive_roots: Vec<Vec<i64>>,
    rho: Vec<i64>,
}

impl RootSystemC {
    pub fn new(n: u32) -> Self {
        let n = n as usize;
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let mut roots = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (unit(i), unit(j));
                roots.push(a.iter().zip(&b).map(|(x, y)| x - y).collect());
                roots.push(a.iter().zip(&b).map(|(x, y)| x + y).collect());
            }
            roots.push(unit(i).iter().map(|x| 2 * x).collect());
        }
        let rho = (1..=n as i64).rev().collect();
        RootSystemC {
            n,
            positive_roots: roots,
            rho,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    /// `‖v + ρ‖²`.
    pub fn shifted_norm(&self, v: &[i64]) -> i64 {
        v.iter()
            .zip(&self.rho)
            .map(|(a, r)| (a + r) * (a + r))
            .sum()
    }

    /// Dominance in the root order: `high − low` is a nonnegative combination of simple roots.
    pub fn dominates(&self, high: &[i64], low: &[i64]) -> bool {
        let mut partial = 0;
        for (h, l) in high.iter().zip(low) {
            partial += h - l;
            if partial < 0 {
                return false;
            }
        }
        partial % 2 == 0
    }
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The dominant representative of the signed-permutation orbit of `v`.
pub fn dominant_representative(v: &[i64]) -> Vec<i64> {
    let mut d: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

fn padded(mu: &Partition, n: u32) -> Result<Vec<i64>> {
    if mu.len() > n as usize {
        return Err(Error::RankViolation(format!(
            "{mu} has more than {n} parts"
        )));
    }
    let mut v: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
    v.resize(n as usize, 0);
    Ok(v)
}

/// Multiplicities of the dominant weights of the irreducible module with highest weight `mu`.
pub fn dominant_multiplicities(mu: &Partition, n: u32) -> Result<WeightMultiset> {
    let top = padded(mu, n)?;
    let roots = RootSystemC::new(n);
    let mut memo: HashMap<Vec<i64>, u64> = HashMap::new();
    let mut out = WeightMultiset::new();
    for nu in dominant_weights_below(&top) {
        let m = multiplicity(&roots, &top, &nu, &mut memo)?;
        if m > 0 {
            out.insert(nu, m);
        }
    }
    Ok(out)
}

/// Dominant weights `ν ≤ top` in the root order.
fn dominant_weights_below(top: &[i64]) -> Vec<Vec<i64>> {
    let n = top.len();
    let size: i64 = top.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(top: &[i64], size: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == top.len() {
            let total: i64 = cur.iter().sum();
            if (size - total) % 2 == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let (done, top_done): (i64, i64) = (cur.iter().sum(), top[..=cur.len()].iter().sum());
        for v in (0..=cap.min(top_done - done)).rev() {
            cur.push(v);
            rec(top, size, v, cur, out);
            cur.pop();
        }
    }
    rec(
        top,
        size,
        top.first().copied().unwrap_or(0),
        &mut cur,
        &mut out,
    );
    if n == 0 {
        out.push(Vec::new());
    }
    out
}

fn multiplicity(
    roots: &RootSystemC,
    top: &[i64],
    nu: &[i64],
    memo: &mut HashMap<Vec<i64>, u64>,
) -> Result<u64> {
    let dom = dominant_representative(nu);
    if !roots.dominates(top, &dom) {
        return Ok(0);
    }
    if dom == top {
        return Ok(1);
    }
    if let Some(&m) = memo.get(&dom) {
        return Ok(m);
    }
    let mut sum: i64 = 0;
    for alpha in roots.positive_roots() {
        let mut k = 1;
        loop {
            let shifted: Vec<i64> = dom.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
            let m = multiplicity(roots, top, &shifted, memo)?;
            if m == 0 {
                break;
            }
            sum += m as i64 * dot(&shifted, alpha);
            k += 1;
        }
    }
    let denom = roots.shifted_norm(top) - roots.shifted_norm(&dom);
    if denom <= 0 || (2 * sum) % denom != 0 || sum < 0 {
        return Err(Error::Internal(format!(
            "Freudenthal recursion breaks at {dom:?} below {top:?}"
        )));
    }
    let m = (2 * sum / denom) as u64;
    memo.insert(dom, m);
    Ok(m)
}

/// All signed permutations of `v`, without repeats.
pub fn orbit(v: &[i64]) -> Vec<Vec<i64>> {
    let mut out = std::collections::BTreeSet::new();
    let mut perm = dominant_representative(v);
    perm.sort_unstable();
    loop {
        let nonzero: Vec<usize> = (0..perm.len()).filter(|&i| perm[i] != 0).collect();
        for mask in 0..1u32 << nonzero.len() {
            let mut w = perm.clone();
            for (b, &i) in nonzero.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    w[i] = -w[i];
                }
            }
            out.insert(w);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.into_iter().collect()
}

fn next_permutation(v: &mut [i64]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub fn expand_orbits(dominant: &WeightMultiset) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (nu, &m) in dominant {
        for w in orbit(nu) {
            out.insert(w, m);
        }
    }
    out
}

/// The full character of the irreducible `sp_{2n}` module with highest weight `mu`.
pub fn freudenthal(mu: &Partition, n: u32) -> Result<WeightMultiset> {
    Ok(expand_orbits(&dominant_multiplicities(mu, n)?))
}

pub fn sp_dim(mu: &Partition, n: u32) -> Result<u64> {
    Ok(freudenthal(mu, n)?.values().sum())
}

/// Multiset of sp-weights of all tableaux of shape `lambda` on `A_n`.
pub fn restrict_gl_character(lambda: &Partition, n: u32) -> Result<WeightMultiset> {
    if lambda.len() > 2 * n as usize {
        return Err(Error::RankViolation(format!(
            "{lambda} has more than {} parts",
            2 * n
        )));
    }
    let mut out = WeightMultiset::new();
    for t in enumerate_ssyt(
        SkewShape::straight(lambda.clone()),
        symplectic_alphabet(n),
        None,
    ) {
        let wt = t.sp_weight();
        let v: Vec<i64> = (1..=n as usize).map(|i| wt.coeff(i)).collect();
        *out.entry(v).or_insert(0) += 1;
    }
    Ok(out)
}

/// Branching multiplicities by stripping, taking the lexicographically largest candidate.
pub fn strip_decompose(lambda: &Partition, n: u32) -> Result<BTreeMap<Partition, u64>> {
    strip_decompose_with(lambda, n, |candidates| candidates.len() - 1)
}

/// Stripping where `choose` picks among the dominance-maximal dominant weights still carrying
/// residual multiplicity (given in increasing lexicographic order).
pub fn strip_decompose_with(
    lambda: &Partition,
    n: u32,
    choose: impl FnMut(&[Vec<i64>]) -> usize,
) -> Result<BTreeMap<Partition, u64>> {
    strip_character(restrict_gl_character(lambda, n)?, n, choose)
}

/// Decompose a character of `sp_{2n}` into irreducibles.
pub fn strip_character(
    mut residual: WeightMultiset,
    n: u32,
    mut choose: impl FnMut(&[Vec<i64>]) -> usize,
) -> Result<BTreeMap<Partition, u64>> {
    let roots = RootSystemC::new(n);
    let mut out = BTreeMap::new();
    loop {
        let dominant: Vec<&Vec<i64>> = residual
            .keys()
            .filter(|v| v.windows(2).all(|w| w[0] >= w[1]) && v.iter().all(|&x| x >= 0))
            .collect();
        let maximal: Vec<Vec<i64>> = dominant
            .iter()
            .filter(|v| !dominant.iter().any(|w| w != *v && roots.dominates(w, v)))
            .map(|v| (*v).clone())
            .collect();
        if maximal.is_empty() {
            break;
        }
        let nu = maximal[choose(&maximal)].clone();
        let m = residual[&nu];
        let mu = Partition::from_signed(&nu)?;
        for (w, k) in freudenthal(&mu, n)? {
            let entry = residual
                .get_mut(&w)
                .filter(|e| **e >= m * k)
                .ok_or_else(|| {
                    Error::Internal(format!("negative residual at {w:?} while stripping {mu}"))
                })?;
            *entry -= m * k;
            if *entry == 0 {
                residual.remove(&w);
            }
        }
        *out.entry(mu).or_insert(0) += m;
    }
    if !residual.is_empty() {
        return Err(Error::Internal(
            "residual character left after stripping".into(),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn root_data() {
        for n in 1..=4 {
            let r = RootSystemC::new(n);
            assert_eq!(r.positive_roots().len(), (n * n) as usize);
        }
        let r = RootSystemC::new(2);
        assert!(r.positive_roots().iter().any(|a| dot(a, a) == 4));
        assert_eq!(r.rho(), &[2, 1]);
    }

    #[test]
    fn small_characters() {
        let nat = freudenthal(&p(&[1]), 2).unwrap();
        assert_eq!(nat.len(), 4);
        assert!(nat.values().all(|&m| m == 1));
        assert!(nat.contains_key(&vec![0, -1]));

        let wedge = freudenthal(&p(&[1, 1]), 2).unwrap();
        assert_eq!(wedge.values().sum::<u64>(), 5);
        assert_eq!(wedge[&vec![0, 0]], 1);
        assert_eq!(wedge[&vec![-1, 1]], 1);

        for n in 1..=3 {
            assert_eq!(
                freudenthal(&Partition::empty(), n).unwrap(),
                WeightMultiset::from([(vec![0; n as usize], 1)])
            );
        }
        assert_eq!(sp_dim(&p(&[1]), 2).unwrap(), 4);
        assert_eq!(sp_dim(&p(&[1, 1]), 2).unwrap(), 5);
        assert_eq!(sp_dim(&p(&[2]), 2).unwrap(), 10);
        assert_eq!(sp_dim(&p(&[2, 1]), 2).unwrap(), 16);
        assert_eq!(sp_dim(&p(&[1, 1, 1]), 3).unwrap(), 14);
        assert!(freudenthal(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn restriction_examples() {
        assert_eq!(
            restrict_gl_character(&p(&[1]), 1).unwrap(),
            WeightMultiset::from([(vec![1], 1), (vec![-1], 1)])
        );
        assert_eq!(
            restrict_gl_character(&p(&[1, 1]), 1).unwrap(),
            WeightMultiset::from([(vec![0], 1)])
        );
        assert_eq!(
            restrict_gl_character(&p(&[2]), 1).unwrap(),
            WeightMultiset::from([(vec![2], 1), (vec![0], 1), (vec![-2], 1)])
        );
        assert!(restrict_gl_character(&p(&[1, 1, 1]), 1).is_err());
    }

    #[test]
    fn stripping_examples() {
        assert_eq!(
            strip_decompose(&p(&[1, 1]), 1).unwrap(),
            BTreeMap::from([(Partition::empty(), 1)])
        );
        assert_eq!(
            strip_decompose(&p(&[1]), 2).unwrap(),
            BTreeMap::from([(p(&[1]), 1)])
        );
        assert_eq!(
            strip_decompose(&p(&[3, 2, 1, 1]), 2).unwrap()[&p(&[2, 1])],
            1
        );
        assert_eq!(
            strip_decompose(&p(&[3, 2, 1, 1]), 3).unwrap()[&p(&[2, 1])],
            2
        );
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit(&[1, 0]).len(), 4);
        assert_eq!(orbit(&[2, 1]).len(), 8);
        assert_eq!(orbit(&[1, 1, 0]).len(), 12);
        assert_eq!(orbit(&[0, 0]), vec![vec![0, 0]]);
    }
}
