//! Immutable simple undirected graphs in compressed adjacency form.

use crate::error::{Error, Result};

/// A finite simple undirected graph on the dense vertex set `0..n`.
///
/// Adjacency is stored as one flat array of neighbor ids with per-vertex
/// offsets; every neighbor list is sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Validates a raw edge list and builds the graph.
    ///
    /// Self-loops, repeated edges (in either orientation) and out-of-range
    /// endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, w) in edges {
            for vertex in [u, w] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if u == w {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(w);
            adjacency[w].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|pair| pair[0] == pair[1]) {
                return Err(Error::DuplicateEdge(u.min(pair[0]), u.max(pair[0])));
            }
        }
        Ok(Self::from_sorted_adjacency(adjacency))
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        let mut offsets = Vec::with_capacity(adjacency.len() + 1);
        offsets.push(0);
        let mut targets = Vec::with_capacity(adjacency.iter().map(Vec::len).sum());
        for list in adjacency {
            targets.extend(list);
            offsets.push(targets.len());
        }
        Self { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.n() && self.neighbors(u).binary_search(&w).is_ok()
    }

    /// Edges as `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&w| u < w)
                .map(move |w| (u, w))
        })
    }

    /// Vertices of degree one, ascending.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&u| self.degree(u) == 1).collect()
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex,
                n: self.n(),
            })
        }
    }
}

/// True iff the connected graph `g` is a path: `K_1`, `K_2`, or exactly two
/// vertices of degree one with every other vertex of degree two.
pub fn is_path_graph(g: &Graph) -> bool {
    match g.n() {
        1 => true,
        2 => g.m() == 1,
        _ => {
            let mut ends = 0;
            for u in 0..g.n() {
                match g.degree(u) {
                    1 => ends += 1,
                    2 => {}
                    _ => return false,
                }
            }
            ends == 2 && g.m() == g.n() - 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_smallest_connected_graph() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::from_edges(1, [(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_duplicate_in_either_orientation() {
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(2, 1), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
    }

    #[test]
    fn rejects_out_of_range_and_empty() {
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn neighbor_lists_are_sorted_and_symmetric() {
        let g = Graph::from_edges(5, [(4, 0), (2, 0), (3, 1), (0, 1), (2, 4)]).unwrap();
        for u in 0..g.n() {
            assert!(g.neighbors(u).windows(2).all(|p| p[0] < p[1]));
            for &w in g.neighbors(u) {
                assert!(g.has_edge(w, u));
            }
        }
        let total: usize = (0..g.n()).map(|u| g.degree(u)).sum();
        assert_eq!(total, 2 * g.m());
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 4), (1, 3), (2, 4)]
        );
    }

    #[test]
    fn path_detection() {
        let p7 = Graph::from_edges(7, (0..6).map(|i| (i, i + 1))).unwrap();
        let c7 = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(is_path_graph(&p7));
        assert!(!is_path_graph(&c7));
        assert!(!is_path_graph(&star));
        assert!(is_path_graph(&Graph::empty(1).unwrap()));
        assert!(is_path_graph(&Graph::from_edges(2, [(0, 1)]).unwrap()));
        // relabelled path
        let p = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(is_path_graph(&p));
    }
}
