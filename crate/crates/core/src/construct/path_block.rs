use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::orientation::Orientation;

use super::extend::source_orientation;
use super::ConstructError;

/// A chain of equal-size cliques `C_1, ..., C_q` where consecutive cliques
/// share one vertex (the connector) and connectors are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathBlockSequence {
    cliques: Vec<Vec<usize>>,
    connectors: Vec<usize>,
    n: usize,
}

impl PathBlockSequence {
    /// Vertex ids must be exactly `0..n` over the union of the cliques.
    pub fn new(cliques: Vec<Vec<usize>>) -> Result<Self, ConstructError> {
        let bad = ConstructError::BadShape;
        let k = cliques.first().map(Vec::len).ok_or(bad("empty clique sequence"))?;
        if k == 0 || cliques.iter().any(|c| c.len() != k) {
            return Err(bad("cliques differ in size"));
        }
        let mut seen = BTreeSet::new();
        for c in &cliques {
            let set: BTreeSet<usize> = c.iter().copied().collect();
            if set.len() != k {
                return Err(bad("repeated vertex inside a clique"));
            }
            seen.extend(set);
        }
        let mut connectors = Vec::with_capacity(cliques.len().saturating_sub(1));
        for w in cliques.windows(2) {
            let common: Vec<usize> = w[0].iter().copied().filter(|v| w[1].contains(v)).collect();
            if common.len() != 1 {
                return Err(bad("consecutive cliques must share exactly one vertex"));
            }
            if connectors.contains(&common[0]) {
                return Err(bad("connectors must be distinct"));
            }
            connectors.push(common[0]);
        }
        let n = seen.len();
        if n != cliques.len() * (k - 1) + 1 {
            return Err(bad("non-consecutive cliques intersect"));
        }
        if seen.iter().next_back() != Some(&(n - 1)) {
            return Err(bad("vertex ids must be 0..n"));
        }
        Ok(PathBlockSequence { cliques, connectors, n })
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn connectors(&self) -> &[usize] {
        &self.connectors
    }

    pub fn k(&self) -> usize {
        self.cliques[0].len()
    }

    /// The union of the cliques.
    pub fn graph(&self) -> Graph {
        Graph::from_edges_lossy(self.n, clique_edges(&self.cliques))
    }
}

fn clique_edges(cliques: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for c in cliques {
        for (i, &a) in c.iter().enumerate() {
            for &b in &c[i + 1..] {
                e.push((a, b));
            }
        }
    }
    e
}

/// Orientation of the path block graph compensated by `(c, d, u)` with
/// maximum indegree at most `max(c, 2k - 2)`. `u` must be a non-connector
/// vertex of the last clique.
pub fn path_block_compensated(
    seq: &PathBlockSequence,
    u: usize,
    c: usize,
    d: usize,
) -> Result<Orientation, ConstructError> {
    let g = seq.graph();
    let mut arcs = Vec::new();
    compensated_arcs(&seq.cliques, u, c, d, &mut arcs)?;
    Ok(Orientation::from_arcs(&g, arcs)?)
}

/// Appends the arcs of a compensated orientation of the clique chain, which
/// may use arbitrary vertex ids.
pub(crate) fn compensated_arcs(
    cliques: &[Vec<usize>],
    u: usize,
    c: usize,
    d: usize,
    out: &mut Vec<(usize, usize)>,
) -> Result<(), ConstructError> {
    let k = cliques[0].len();
    if k < 3 {
        return Err(ConstructError::UnsupportedK(k));
    }
    if !(c > k - 1 && k > d || c == k - 1 && d == k - 1) {
        return Err(ConstructError::BadCompensation { c, d, k });
    }
    let q = cliques.len();
    if !cliques[q - 1].contains(&u) || q > 1 && cliques[q - 2].contains(&u) {
        return Err(ConstructError::BadShape("u must be a non-connector vertex of the last clique"));
    }
    let (mut q, mut u, mut c, mut d) = (q, u, c, d);
    loop {
        let last = &cliques[q - 1];
        if q == 1 {
            transitive(last, &[(u, d)], out);
            return Ok(());
        }
        let prev = last
            .iter()
            .copied()
            .find(|v| cliques[q - 2].contains(v))
            .ok_or(ConstructError::BadShape("consecutive cliques must share a vertex"))?;
        if d >= 1 {
            transitive(last, &[(prev, 0), (u, d)], out);
            let (sub, map) = union_graph(&cliques[..q - 1]);
            let local = map.binary_search(&prev).expect("connector in prefix");
            let ds = source_orientation(&sub, local)?;
            out.extend(ds.arcs(&sub).map(|(a, b)| (map[a], map[b])));
            return Ok(());
        }
        if c != 2 * k - 2 {
            transitive(last, &[(u, 0), (prev, k - 1)], out);
            c = 2 * k - 2;
        } else {
            transitive(last, &[(u, 0), (prev, k - 2)], out);
            c = 2 * k - 3;
        }
        d = k - 1;
        u = prev;
        q -= 1;
    }
}

/// Transitive tournament on `clique` with the given vertices at fixed
/// positions; the rest fill the free positions in increasing id order.
pub(crate) fn transitive(clique: &[usize], fixed: &[(usize, usize)], out: &mut Vec<(usize, usize)>) {
    let order = transitive_order(clique, fixed);
    for (i, &a) in order.iter().enumerate() {
        for &b in &order[i + 1..] {
            out.push((a, b));
        }
    }
}

pub(crate) fn transitive_order(clique: &[usize], fixed: &[(usize, usize)]) -> Vec<usize> {
    let mut order = vec![usize::MAX; clique.len()];
    for &(v, pos) in fixed {
        order[pos] = v;
    }
    let mut rest: Vec<usize> = clique.iter().copied().filter(|v| !fixed.iter().any(|f| f.0 == *v)).collect();
    rest.sort_unstable();
    let mut it = rest.into_iter();
    for slot in order.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = it.next().expect("enough free vertices");
    }
    order
}

/// Union of cliques on local ids; the map sends local to global ids and is sorted.
pub(crate) fn union_graph(cliques: &[Vec<usize>]) -> (Graph, Vec<usize>) {
    let mut map: Vec<usize> = cliques.iter().flatten().copied().collect();
    map.sort_unstable();
    map.dedup();
    let local = |v: usize| map.binary_search(&v).expect("vertex in union");
    let edges: Vec<(usize, usize)> = clique_edges(cliques).into_iter().map(|(a, b)| (local(a), local(b))).collect();
    (Graph::from_edges_lossy(map.len(), edges), map)
}
