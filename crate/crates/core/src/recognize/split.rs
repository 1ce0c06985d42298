use crate::graph::Graph;

use super::RecognizeError;

/// Clique `k` and independent set `i`, both sorted; `k` is a maximal clique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub k: Vec<usize>,
    pub i: Vec<usize>,
}

impl SplitPartition {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self.k.iter().chain(&self.i).copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len() == g.n()
            && self.k.len() + self.i.len() == g.n()
            && g.is_clique(&self.k)
            && g.is_independent(&self.i)
            && self.i.iter().all(|&v| g.degree(v) < self.k.len())
    }
}

/// Split recognition from the degree sequence.
pub fn split_partition(g: &Graph) -> Result<SplitPartition, RecognizeError> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n).filter(|&i| deg[i] >= i).map(|i| i + 1).max().unwrap_or(0);
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return Err(RecognizeError::NotSplit);
    }
    let mut k: Vec<usize> = order[..m].to_vec();
    let mut i: Vec<usize> = order[m..].to_vec();
    if let Some(pos) = i.iter().position(|&v| g.degree(v) == k.len() && k.iter().all(|&w| g.has_edge(v, w))) {
        k.push(i.remove(pos));
    }
    k.sort_unstable();
    i.sort_unstable();
    let part = SplitPartition { k, i };
    debug_assert!(part.is_valid(g));
    Ok(part)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_with_pendant() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert_eq!(p.k, vec![0, 1, 2]);
        assert_eq!(p.i, vec![3]);
    }

    #[test]
    fn cycles_are_not_split() {
        assert_eq!(split_partition(&Graph::cycle(4)), Err(RecognizeError::NotSplit));
        assert_eq!(split_partition(&Graph::cycle(5)), Err(RecognizeError::NotSplit));
    }

    #[test]
    fn edgeless_and_star() {
        let p = split_partition(&Graph::empty(3)).unwrap();
        assert_eq!(p.k.len(), 1);
        assert!(p.is_valid(&Graph::empty(3)));
        let s = Graph::star(4);
        let p = split_partition(&s).unwrap();
        assert!(p.is_valid(&s));
        assert_eq!(p.k.len(), 2);
    }
}
