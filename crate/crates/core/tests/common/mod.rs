//! Brute-force reference computations that share no code with the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use graph_boundary::Graph;
use num_rational::Ratio;

pub const UNREACHABLE: u64 = u64::MAX / 4;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut adj = vec![vec![false; n]; n];
    for (u, w) in g.edges() {
        adj[u][w] = true;
        adj[w][u] = true;
    }
    adj
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.n();
    let adj = adjacency(g);
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                d[i][j] = 0;
            } else if adj[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub struct Oracle {
    pub dist: Vec<Vec<u64>>,
    pub slices: Vec<Vec<usize>>,
    pub boundary: Vec<usize>,
    pub cejz: Vec<usize>,
}

/// Slice membership through the mean neighbor distance as an exact fraction,
/// and the CEJZ boundary straight from its definition.
pub fn oracle(g: &Graph) -> Oracle {
    let n = g.n();
    let adj = adjacency(g);
    let dist = floyd_warshall(g);
    let adj = &adj;
    let nbrs = move |u: usize| (0..n).filter(move |&w| adj[u][w]);
    let slices: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| {
                    let deg = nbrs(u).count() as i64;
                    deg > 0 && {
                        let total: i64 = nbrs(u).map(|w| dist[w][v] as i64).sum();
                        Ratio::new(total, deg) < Ratio::from_integer(dist[u][v] as i64)
                    }
                })
                .collect()
        })
        .collect();
    let boundary: BTreeSet<usize> = slices.iter().flatten().copied().collect();
    let cejz = (0..n)
        .filter(|&u| (0..n).any(|v| dist[u][v] > 0 && nbrs(u).all(|w| dist[w][v] <= dist[u][v])))
        .collect();
    Oracle {
        dist,
        slices,
        boundary: boundary.into_iter().collect(),
        cejz,
    }
}

pub fn degree_one(g: &Graph) -> Vec<usize> {
    let adj = adjacency(g);
    (0..g.n())
        .filter(|&u| adj[u].iter().filter(|&&x| x).count() == 1)
        .collect()
}
