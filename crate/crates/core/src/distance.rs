//! Breadth-first hop distances, eccentricities and the all-pairs cache.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;

const UNREACHED: u32 = u32::MAX;

/// Hop distances `d(w, source)` for every vertex `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceField {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceField {
    #[inline]
    pub fn get(&self, w: usize) -> u32 {
        self.dist[w]
    }

    pub fn eccentricity(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Checks the metric invariants of a BFS field on `g`: zero at the source,
    /// neighbors differ by at most one, and every other vertex has a neighbor
    /// one step closer.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.dist.len() != g.n() || self.dist[self.source] != 0 {
            return Err(Error::InvariantViolation(format!(
                "distance field from {} is malformed",
                self.source
            )));
        }
        for u in 0..g.n() {
            let du = self.dist[u];
            if u != self.source && du == 0 {
                return Err(Error::InvariantViolation(format!(
                    "vertex {u} has distance 0 from {}",
                    self.source
                )));
            }
            let mut has_parent = u == self.source;
            for &w in g.neighbors(u) {
                let dw = self.dist[w];
                if du.abs_diff(dw) > 1 {
                    return Err(Error::InvariantViolation(format!(
                        "adjacent vertices {u} and {w} differ by {} in distance",
                        du.abs_diff(dw)
                    )));
                }
                has_parent |= dw + 1 == du;
            }
            if !has_parent {
                return Err(Error::InvariantViolation(format!(
                    "vertex {u} has no neighbor closer to {}",
                    self.source
                )));
            }
        }
        Ok(())
    }
}

fn bfs_raw(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; g.n()];
    let mut queue = VecDeque::with_capacity(g.n());
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHED {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Exact hop distances from `source`. Fails if any vertex is unreachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<DistanceField> {
    g.check_vertex(source)?;
    let dist = bfs_raw(g, source);
    if let Some(unreachable) = dist.iter().position(|&d| d == UNREACHED) {
        return Err(Error::Disconnected {
            from: source,
            unreachable,
        });
    }
    Ok(DistanceField { source, dist })
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_raw(g, 0).iter().all(|&d| d != UNREACHED)
}

/// Number of connected components.
pub fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    bfs_distances(g, 0).map(|_| ())
}

/// All distances `d(u, v)`, one BFS per source. Row `v` is the field `f_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> Result<Self> {
        require_connected(g)?;
        let n = g.n();
        let rows = par::map_vertices(n, |v| bfs_raw(g, v));
        let mut dist = Vec::with_capacity(n * n);
        for row in rows {
            dist.extend(row);
        }
        Ok(Self { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn field(&self, v: usize) -> DistanceField {
        DistanceField {
            source: v,
            dist: self.row(v).to_vec(),
        }
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Unordered pairs `(u, v)`, `u < v`, realising the diameter.
    pub fn diametral_pairs(&self) -> Vec<(usize, usize)> {
        let diam = self.diameter();
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.get(u, v) == diam {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }
}

/// Largest hop distance between two vertices of the connected graph `g`.
pub fn diameter(g: &Graph) -> Result<u32> {
    require_connected(g)?;
    let ecc = par::map_vertices(g.n(), |v| bfs_raw(g, v).into_iter().max().unwrap_or(0));
    Ok(ecc.into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let id = r * cols + c;
                if c + 1 < cols {
                    edges.push((id, id + 1));
                }
                if r + 1 < rows {
                    edges.push((id, id + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, edges).unwrap()
    }

    /// Independent all-pairs oracle.
    fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
        let n = g.n();
        let inf = u64::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for u in 0..n {
            d[u][u] = 0;
            for &w in g.neighbors(u) {
                d[u][w] = 1;
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

    #[test]
    fn path_and_cycle_fields() {
        assert_eq!(bfs_distances(&path(3), 0).unwrap().dist, vec![0, 1, 2]);
        assert_eq!(bfs_distances(&cycle(4), 0).unwrap().dist, vec![0, 1, 2, 1]);
    }

    #[test]
    fn grid_corner_matches_floyd_warshall() {
        let g = grid(3, 3);
        let fw = floyd_warshall(&g);
        let field = bfs_distances(&g, 0).unwrap();
        for w in 0..9 {
            assert_eq!(field.get(w) as u64, fw[0][w]);
        }
        assert_eq!(field.eccentricity(), 4);
        field.validate(&g).unwrap();
    }

    #[test]
    fn diameters() {
        for n in 1..12 {
            assert_eq!(diameter(&path(n)).unwrap(), (n - 1) as u32);
        }
        for n in 3..12 {
            assert_eq!(diameter(&cycle(n)).unwrap(), (n / 2) as u32);
        }
        let k5 =
            Graph::from_edges(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        assert_eq!(diameter(&k5).unwrap(), 1);
        let g = grid(5, 5);
        let fw = floyd_warshall(&g);
        let brute = fw.iter().flatten().copied().max().unwrap();
        assert_eq!(brute, 8);
        assert_eq!(diameter(&g).unwrap() as u64, brute);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&Graph::empty(1).unwrap()));
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!is_connected(&two_edges));
        assert_eq!(component_count(&two_edges), 2);
        assert_eq!(
            bfs_distances(&two_edges, 0),
            Err(Error::Disconnected {
                from: 0,
                unreachable: 2
            })
        );
        assert!(matches!(
            diameter(&two_edges),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn matrix_is_symmetric_with_zero_diagonal() {
        let g = grid(4, 3);
        let dm = DistanceMatrix::compute(&g).unwrap();
        let fw = floyd_warshall(&g);
        for u in 0..g.n() {
            assert_eq!(dm.get(u, u), 0);
            for v in 0..g.n() {
                assert_eq!(dm.get(u, v), dm.get(v, u));
                assert_eq!(dm.get(u, v) as u64, fw[u][v]);
            }
            dm.field(u).validate(&g).unwrap();
        }
        assert_eq!(dm.diameter(), diameter(&g).unwrap());
        assert_eq!(dm.diametral_pairs(), vec![(0, 11), (2, 9)]);
    }
}
