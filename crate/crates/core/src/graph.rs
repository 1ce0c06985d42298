//! Undirected simple graphs over dense vertex ids.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph. Vertices are `0..n`, edges are stored canonically
/// as `(min, max)` in lexicographic order and indexed by their position in
/// [`Graph::edges`].
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    // edge id of adj[v][i], parallel to adj
    adj_eid: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges).finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], adj_eid: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph, rejecting loops, repeated edges and out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        let mut sorted = list;
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::build(n, sorted))
    }

    /// Like [`Graph::from_edges`] but silently drops loops and repeated edges.
    pub fn from_edges_lossy<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> =
            edges.into_iter().filter(|&(u, v)| u != v && u < n && v < n).map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Self::build(n, list)
    }

    fn build(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            pairs[u].push((v, id));
            pairs[v].push((u, id));
        }
        let mut adj = Vec::with_capacity(n);
        let mut adj_eid = Vec::with_capacity(n);
        for mut p in pairs {
            p.sort_unstable();
            adj.push(p.iter().map(|x| x.0).collect());
            adj_eid.push(p.iter().map(|x| x.1).collect());
        }
        Graph { adj, adj_eid, edges }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::build(n, edges.collect())
    }

    pub fn path(n: usize) -> Self {
        Self::build(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            e.push((0, n - 1));
        }
        Self::build(n, e)
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::build(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Neighbors of `v` paired with the id of the connecting edge.
    pub fn incident(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v].iter().copied().zip(self.adj_eid[v].iter().copied())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        self.adj[u].binary_search(&v).ok().map(|i| self.adj_eid[u][i])
    }

    /// Average degree ratio |E|/|V|.
    pub fn edge_density(&self) -> num_rational::Ratio<u64> {
        if self.n() == 0 {
            return num_rational::Ratio::from_integer(0);
        }
        num_rational::Ratio::new(self.m() as u64, self.n() as u64)
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// Induced subgraph on `vs` (in the given order). Returns the subgraph and
    /// the map from local ids back to ids of `self`.
    pub fn induced(&self, vs: &[usize]) -> (Graph, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if local[u] != usize::MAX && local[v] != usize::MAX {
                edges.push((local[u].min(local[v]), local[u].max(local[v])));
            }
        }
        edges.sort_unstable();
        (Self::build(vs.len(), edges), vs.to_vec())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::build(n, edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// BFS distances from `s`; unreachable vertices get `usize::MAX`.
    pub fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter of a connected graph, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs(s) {
                if d == usize::MAX {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Self::from_edges_lossy(self.n(), edges)
    }

    /// Exact clique number by Bron-Kerbosch with pivoting. Exponential; meant
    /// for small inputs and as a cross-check for the class-specific routines.
    pub fn clique_number(&self) -> usize {
        fn expand(g: &Graph, size: usize, cand: Vec<usize>, mut excl: Vec<usize>, best: &mut usize) {
            if cand.is_empty() {
                if excl.is_empty() {
                    *best = (*best).max(size);
                }
                return;
            }
            if size + cand.len() <= *best {
                return;
            }
            let pivot = cand
                .iter()
                .chain(excl.iter())
                .copied()
                .max_by_key(|&p| cand.iter().filter(|&&c| g.has_edge(p, c)).count())
                .unwrap();
            let branch: Vec<usize> = cand.iter().copied().filter(|&c| !g.has_edge(pivot, c)).collect();
            let mut cand = cand;
            for v in branch {
                let nc = cand.iter().copied().filter(|&c| g.has_edge(v, c)).collect();
                let ne = excl.iter().copied().filter(|&c| g.has_edge(v, c)).collect();
                expand(g, size + 1, nc, ne, best);
                cand.retain(|&c| c != v);
                excl.push(v);
            }
        }
        let mut best = 0;
        expand(self, 0, (0..self.n()).collect(), Vec::new(), &mut best);
        best
    }
}

/// Vertex-disjoint union; vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let edges = g1.edges().iter().copied().chain(g2.edges().iter().map(|&(u, v)| (u + off, v + off)));
    Graph::build(off + g2.n(), edges.collect())
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let mut edges: Vec<_> =
        g1.edges().iter().copied().chain(g2.edges().iter().map(|&(u, v)| (u + off, v + off))).collect();
    for u in 0..g1.n() {
        for v in 0..g2.n() {
            edges.push((u, v + off));
        }
    }
    edges.sort_unstable();
    Graph::build(off + g2.n(), edges)
}

/// The generic sandwich `ω - 1 <= χ→(G) <= Δ(G)` given the clique number.
pub fn generic_bounds(g: &Graph, omega: usize) -> (usize, usize) {
    (omega.saturating_sub(1), g.max_degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })));
    }

    #[test]
    fn handshake_and_lookup() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (1, 3)]).unwrap();
        let deg_sum: usize = (0..4).map(|v| g.degree(v)).sum();
        assert_eq!(deg_sum, 2 * g.m());
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_id(u, v), Some(id));
            assert_eq!(g.edge_id(v, u), Some(id));
        }
        assert_eq!(g.edge_id(0, 1), None);
    }

    #[test]
    fn union_and_join() {
        let k2 = Graph::complete(2);
        let u = disjoint_union(&k2, &k2);
        assert_eq!((u.n(), u.m()), (4, 2));
        assert_eq!(join(&Graph::complete(1), &Graph::complete(3)), Graph::complete(4));
        assert_eq!(join(&Graph::complete(3), &Graph::complete(4)), Graph::complete(7));
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(generic_bounds(&Graph::complete(5), 5), (4, 4));
        assert_eq!(generic_bounds(&Graph::star(4), 2), (1, 4));
        assert_eq!(generic_bounds(&Graph::cycle(4), 2), (1, 2));
    }

    #[test]
    fn clique_number_small() {
        assert_eq!(Graph::complete(5).clique_number(), 5);
        assert_eq!(Graph::cycle(5).clique_number(), 2);
        assert_eq!(Graph::empty(3).clique_number(), 1);
        assert_eq!(Graph::empty(0).clique_number(), 0);
    }

    #[test]
    fn diameter_of_path() {
        assert_eq!(Graph::path(5).diameter(), Some(4));
        assert_eq!(Graph::empty(2).diameter(), None);
    }
}
