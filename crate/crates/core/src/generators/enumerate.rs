use crate::distance::is_connected;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 6;

/// Every connected labeled simple graph on exactly `n` vertices.
///
/// Bit `k` of the mask selects the `k`-th pair `(i, j)`, `i < j`, in
/// lexicographic order.
pub fn connected_graphs_of_order(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParams(format!(
            "enumeration order must be in 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("enumerated edges are simple");
        is_connected(&g).then_some(g)
    }))
}

/// All connected labeled graphs on `1..=n_max` vertices, by increasing order.
pub fn enumerate_connected(n_max: usize) -> Result<impl Iterator<Item = Graph>> {
    let orders = (1..=n_max)
        .map(connected_graphs_of_order)
        .collect::<Result<Vec<_>>>()?;
    Ok(orders.into_iter().flatten())
}
