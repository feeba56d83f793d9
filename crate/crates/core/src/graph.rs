//! Crystal graphs of `B_gl(2n)(λ)` with either the `gl_2n` or the `sp_2n` edges.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::crystal::{gl_lower, sp_lower};
use crate::enumerate::enumerate_ssyt;
use crate::error::{Error, Result};
use crate::letter::{symplectic_alphabet, translate, untranslate, Word};
use crate::partition::{Partition, SkewShape};
use crate::tableau::Tableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Gl,
    Sp,
}

/// Nodes sorted by reading; edges `(source, i, target)` with `target = f̃_i(source)`.
///
/// The set of tableaux is stable under the `gl_2n` operators but not under the `sp_2n`
/// ones: `f̃_i` can turn a reading into a word that is not the reading of a tableau. Such
/// arrows are kept in `dangling` as `(source, i, word)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub nodes: Vec<Tableau>,
    pub edges: Vec<(usize, u32, usize)>,
    pub dangling: Vec<(usize, u32, Word)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    nodes: Vec<Vec<Vec<i32>>>,
    edges: Vec<(usize, u32, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    dangling: Vec<(usize, u32, Vec<i32>)>,
}

fn to_gl_word(w: &Word, n: u32) -> Result<Word> {
    Ok(Word(
        w.letters()
            .iter()
            .map(|&l| untranslate(l, n).map(crate::letter::Letter::unbarred))
            .collect::<Result<_>>()?,
    ))
}

fn from_gl_word(w: &Word, n: u32) -> Result<Word> {
    Ok(Word(
        w.letters()
            .iter()
            .map(|&l| translate(l.value(), n))
            .collect::<Result<_>>()?,
    ))
}

/// All semistandard tableaux of shape `λ` over `[2n]` (written in `A_n`) with edges from
/// `gl_lower` (`i < 2n`) or `sp_lower` (`i ≤ n`) on readings.
pub fn crystal_graph(lambda: &Partition, n: u32, algebra: Algebra) -> Result<CrystalGraph> {
    if n == 0 || lambda.len() > 2 * n as usize {
        return Err(Error::RankViolation(format!(
            "ℓ({lambda}) = {} exceeds 2n = {}",
            lambda.len(),
            2 * n
        )));
    }
    let shape = SkewShape::straight(lambda.clone());
    let nodes: Vec<Tableau> = enumerate_ssyt(shape.clone(), symplectic_alphabet(n), None).collect();
    let index: HashMap<Word, usize> = nodes
        .iter()
        .enumerate()
        .map(|(k, t)| (t.reading(), k))
        .collect();
    let mut edges = Vec::new();
    let mut dangling = Vec::new();
    for (s, t) in nodes.iter().enumerate() {
        let word = t.reading();
        let targets: Vec<(u32, Word)> = match algebra {
            Algebra::Gl => {
                let glw = to_gl_word(&word, n)?;
                let mut out = Vec::new();
                for i in 1..2 * n {
                    if let Some(next) = gl_lower(&glw, i)? {
                        out.push((i, from_gl_word(&next, n)?));
                    }
                }
                out
            }
            Algebra::Sp => {
                let mut out = Vec::new();
                for i in 1..=n {
                    if let Some(next) = sp_lower(&word, i, n)? {
                        out.push((i, next));
                    }
                }
                out
            }
        };
        for (i, next) in targets {
            match index.get(&next) {
                Some(&target) => edges.push((s, i, target)),
                None if algebra == Algebra::Sp => dangling.push((s, i, next)),
                None => {
                    return Err(Error::Internal(format!(
                        "f̃_{i}({word}) = {next} is not the reading of a node"
                    )))
                }
            }
        }
    }
    Ok(CrystalGraph {
        nodes,
        edges,
        dangling,
    })
}

impl CrystalGraph {
    /// Nodes with no incoming edge.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for &(_, _, t) in &self.edges {
            has_in[t] = true;
        }
        (0..self.nodes.len()).filter(|&k| !has_in[k]).collect()
    }

    /// Connected components of the underlying undirected graph.
    pub fn component_count(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(s, _, t) in &self.edges {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a] = b;
            }
        }
        (0..self.nodes.len())
            .filter(|&k| find(&mut parent, k) == k)
            .count()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, t) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{k} [label=\"{}\"];", t.reading());
        }
        for &(s, i, t) in &self.edges {
            let _ = writeln!(out, "  n{s} -> n{t} [label=\"{i}\"];");
        }
        for (k, (s, i, w)) in self.dangling.iter().enumerate() {
            let _ = writeln!(out, "  d{k} [label=\"{w}\", style=dashed];");
            let _ = writeln!(out, "  n{s} -> d{k} [label=\"{i}\", style=dashed];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let j = GraphJson {
            nodes: self
                .nodes
                .iter()
                .map(|t| {
                    t.to_signed_rows()
                        .into_iter()
                        .map(|r| r.into_iter().flatten().collect())
                        .collect()
                })
                .collect(),
            edges: self.edges.clone(),
            dangling: self
                .dangling
                .iter()
                .map(|(s, i, w)| (*s, *i, w.letters().iter().map(|l| l.to_signed()).collect()))
                .collect(),
        };
        serde_json::to_string(&j).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn natural_gl2() {
        let g = crystal_graph(&p(&[1]), 1, Algebra::Gl).unwrap();
        assert_eq!(g.nodes.len(), 2);
        assert_eq!(g.edges, vec![(0, 1, 1)]);
        assert_eq!(g.to_json(), r#"{"nodes":[[[1]],[[-1]]],"edges":[[0,1,1]]}"#);
    }

    #[test]
    fn natural_sp4_path() {
        let g = crystal_graph(&p(&[1]), 2, Algebra::Sp).unwrap();
        let labels: Vec<String> = g.nodes.iter().map(|t| t.reading().to_string()).collect();
        assert_eq!(labels, vec!["1", "2", "-2", "-1"]);
        assert_eq!(g.edges, vec![(0, 1, 1), (1, 2, 2), (2, 1, 3)]);
        let dot = g.to_dot();
        assert!(dot.contains("n1 -> n2 [label=\"2\"]"));
    }

    #[test]
    fn column_over_gl2() {
        let g = crystal_graph(&p(&[1, 1]), 1, Algebra::Gl).unwrap();
        assert_eq!(
            g.nodes,
            vec![Tableau::from_signed_rows(&[&[1], &[-1]]).unwrap()]
        );
        assert!(g.edges.is_empty());
    }

    #[test]
    fn sp_arrows_can_leave_the_tableaux() {
        let g = crystal_graph(&p(&[2, 2]), 2, Algebra::Sp).unwrap();
        let from = Tableau::from_signed_rows(&[&[1, 1], &[-2, -1]]).unwrap();
        let k = g.nodes.iter().position(|t| *t == from).unwrap();
        assert!(g
            .dangling
            .iter()
            .any(|(s, i, w)| *s == k && *i == 1 && w.to_string() == "1 -1 2 -2"));
        assert!(g.to_json().contains("\"dangling\""));
        assert!(crystal_graph(&p(&[1]), 2, Algebra::Sp)
            .unwrap()
            .dangling
            .is_empty());
    }

    #[test]
    fn rank_guard() {
        assert!(matches!(
            crystal_graph(&p(&[2, 2, 2]), 1, Algebra::Gl),
            Err(Error::RankViolation(_))
        ));
    }
}
