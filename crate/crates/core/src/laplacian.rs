//! Combinatorial Laplacian `L = D - A` as an explicit sparse integer matrix.
//!
//! This is the second route to the boundary criterion: a vertex `u` lies in
//! the slice of `v` iff `(L f_v)(u) > 0` where `f_v` is the distance field
//! of `v`. It shares no code with the neighbor-sum comparison in
//! [`crate::boundary`].

use crate::distance::DistanceField;
use crate::graph::Graph;

/// Row-compressed `D - A`. Each row holds the diagonal entry `deg(u)` and a
/// `-1` for every neighbor, ordered by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laplacian {
    row_start: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<i64>,
}

impl Laplacian {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut row_start = Vec::with_capacity(n + 1);
        let mut cols = Vec::with_capacity(n + 2 * g.m());
        let mut vals = Vec::with_capacity(n + 2 * g.m());
        row_start.push(0);
        for u in 0..n {
            let degree = i64::try_from(g.degree(u)).expect("degree fits in i64");
            let mut diagonal_done = false;
            for &w in g.neighbors(u) {
                if !diagonal_done && w > u {
                    cols.push(u);
                    vals.push(degree);
                    diagonal_done = true;
                }
                cols.push(w);
                vals.push(-1);
            }
            if !diagonal_done {
                cols.push(u);
                vals.push(degree);
            }
            row_start.push(cols.len());
        }
        Self {
            row_start,
            cols,
            vals,
        }
    }

    pub fn n(&self) -> usize {
        self.row_start.len() - 1
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        let range = self.row_start[row]..self.row_start[row + 1];
        match self.cols[range.clone()].binary_search(&col) {
            Ok(k) => self.vals[range.start + k],
            Err(_) => 0,
        }
    }

    /// Matrix-vector product `L f`.
    pub fn apply(&self, f: &[i64]) -> Vec<i64> {
        assert_eq!(f.len(), self.n(), "vector length must match the matrix");
        (0..self.n())
            .map(|row| {
                (self.row_start[row]..self.row_start[row + 1])
                    .map(|k| self.vals[k] * f[self.cols[k]])
                    .sum()
            })
            .collect()
    }

    /// Vertices where `L f_v` is strictly positive.
    pub fn positive_support(&self, df: &DistanceField) -> Vec<usize> {
        let f: Vec<i64> = df.dist.iter().map(|&d| i64::from(d)).collect();
        self.apply(&f)
            .into_iter()
            .enumerate()
            .filter(|&(_, value)| value > 0)
            .map(|(u, _)| u)
            .collect()
    }
}

/// `{u : (L f_v)(u) > 0}` for the distance field `df` of source `v`.
pub fn laplacian_slice(g: &Graph, df: &DistanceField) -> Vec<usize> {
    Laplacian::new(g).positive_support(df)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::bfs_distances;

    #[test]
    fn rows_sum_to_zero_and_match_definition() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let lap = Laplacian::new(&g);
        for u in 0..4 {
            let row_sum: i64 = (0..4).map(|c| lap.entry(u, c)).sum();
            assert_eq!(row_sum, 0);
            for w in 0..4 {
                let expected = if u == w {
                    g.degree(u) as i64
                } else if g.has_edge(u, w) {
                    -1
                } else {
                    0
                };
                assert_eq!(lap.entry(u, w), expected);
            }
        }
    }

    #[test]
    fn path_three_from_endpoint() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let df = bfs_distances(&g, 0).unwrap();
        assert_eq!(laplacian_slice(&g, &df), vec![2]);
    }

    #[test]
    fn five_cycle_picks_the_two_far_vertices() {
        let g = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        for v in 0..5 {
            let df = bfs_distances(&g, v).unwrap();
            let mut expected = vec![(v + 2) % 5, (v + 3) % 5];
            expected.sort_unstable();
            assert_eq!(laplacian_slice(&g, &df), expected);
        }
    }
}
