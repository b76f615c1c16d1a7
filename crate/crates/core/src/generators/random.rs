use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::rng::{below, counter_u64, unit_f64, STREAM_ERDOS_RENYI, STREAM_TREE};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Uniform random labeled tree on `n` vertices.
///
/// Draws a Prüfer sequence of length `n − 2` (entry `i` is
/// `below(counter_u64(seed, STREAM_TREE, i), n)`) and decodes it, always
/// attaching the smallest current leaf.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    match n {
        0 => return Err(Error::InvalidParams("tree needs n ≥ 1".into())),
        1 => return Graph::empty(1),
        2 => return Graph::from_edges(2, [(0, 1)]),
        _ => {}
    }
    let sequence: Vec<usize> = (0..n - 2)
        .map(|i| below(counter_u64(seed, STREAM_TREE, i as u64), n as u64) as usize)
        .collect();
    Graph::from_edges(n, prufer_decode(n, &sequence))
}

fn prufer_decode(n: usize, sequence: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&u| degree[u] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two leaves remain");
    let Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

/// `G(n, p)`: pair `{i, j}` (`i < j`) of rank `k` in lexicographic order is
/// present iff `unit_f64(counter_u64(seed, STREAM_ERDOS_RENYI, k)) < p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParams("G(n, p) needs n ≥ 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("p = {p} is not in [0, 1]")));
    }
    let mut edges = Vec::new();
    let mut rank = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if unit_f64(counter_u64(seed, STREAM_ERDOS_RENYI, rank)) < p {
                edges.push((i, j));
            }
            rank += 1;
        }
    }
    Graph::from_edges(n, edges)
}
