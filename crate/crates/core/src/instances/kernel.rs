use crate::graph::Graph;
use crate::recognize::{cobipartition, split_partition, twin_partition};

use super::InstanceError;

/// Equivalent instance of size at most `(k+1) + 2^(k+1) (M+1)` for a split
/// graph, where `M = kω - ω(ω-1)/2`.
pub fn split_kernel(g: &Graph, k: usize) -> Result<(Graph, usize), InstanceError> {
    let part = split_partition(g).map_err(|_| InstanceError::NotSplit)?;
    let omega = part.k.len();
    if omega >= k + 2 {
        return Ok((Graph::complete(k + 2), k));
    }
    let cap = k * omega - omega * omega.saturating_sub(1) / 2 + 1;
    let mut keep = part.k.clone();
    for class in twin_partition(g, &part.i) {
        keep.extend(class.into_iter().take(cap));
    }
    keep.sort_unstable();
    if keep.len() == g.n() {
        return Ok((g.clone(), k));
    }
    Ok((g.induced(&keep).0, k))
}

/// Equivalent instance on at most `2(k+1)` vertices for a cobipartite graph.
pub fn cobipartite_kernel(g: &Graph, k: usize) -> Result<(Graph, usize), InstanceError> {
    let (a, b) = cobipartition(g).ok_or(InstanceError::NotCobipartite)?;
    if a.len().max(b.len()) >= k + 2 || g.clique_number() >= k + 2 {
        return Ok((Graph::complete(k + 2), k));
    }
    Ok((g.clone(), k))
}
