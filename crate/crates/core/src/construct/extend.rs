use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::Graph;
use crate::orientation::{Orientation, PartialOrientation};

use super::ConstructError;

/// Extends a proper orientation of `G[S]` to all of `g` with maximum indegree
/// at most `Δ(g)`. `ds` orients `g.induced(s)` with local ids in the order of
/// `s`. Every vertex of `S` keeps its indegree.
pub fn extend_partial(g: &Graph, s: &[usize], ds: &Orientation) -> Result<Orientation, ConstructError> {
    let (sub, map) = g.induced(s);
    if ds.directions().len() != sub.m() || !crate::orientation::is_proper(&sub, ds) {
        return Err(ConstructError::NotProperOnS);
    }
    let mut p = PartialOrientation::new(g);
    p.absorb(g, &sub, ds, &map)?;
    extend_partial_from(g, s, p)
}

/// Core of [`extend_partial`]: `p` orients exactly the edges inside `S`.
pub fn extend_partial_from(g: &Graph, s: &[usize], mut p: PartialOrientation) -> Result<Orientation, ConstructError> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let mut s_count = vec![0usize; n];
    for &u in s {
        for &v in g.neighbors(u) {
            s_count[v] += 1;
        }
    }
    for v in (0..n).filter(|&v| !in_s[v]) {
        for &u in g.neighbors(v) {
            if in_s[u] && s_count[v] <= p.indegree(u) {
                return Err(ConstructError::PreconditionViolated { v, u });
            }
        }
    }
    for &u in s {
        for &v in g.neighbors(u) {
            if !in_s[v] {
                p.orient(g, u, v)?;
            }
        }
    }
    potential_rule(g, &mut p, |v| !in_s[v])?;
    Ok(p.into_orientation()?)
}

/// Repeatedly takes the eligible vertex of largest potential (indegree plus
/// unoriented edges, ties to the smaller id) that still has an unoriented edge
/// and orients all its remaining edges toward it.
pub(crate) fn potential_rule<F>(g: &Graph, p: &mut PartialOrientation, eligible: F) -> Result<(), ConstructError>
where
    F: Fn(usize) -> bool,
{
    let pot = |p: &PartialOrientation, v: usize| p.indegree(v) + p.unoriented_at(v);
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> =
        (0..g.n()).filter(|&v| eligible(v) && p.unoriented_at(v) > 0).map(|v| (pot(p, v), Reverse(v))).collect();
    while let Some((key, Reverse(v))) = heap.pop() {
        if p.unoriented_at(v) == 0 || key != pot(p, v) {
            continue;
        }
        for &w in g.neighbors(v) {
            let id = g.edge_id(v, w).expect("neighbor");
            if p.direction(id).is_none() {
                p.orient(g, w, v)?;
                if eligible(w) && p.unoriented_at(w) > 0 {
                    heap.push((pot(p, w), Reverse(w)));
                }
            }
        }
    }
    if !p.is_complete() {
        return Err(ConstructError::BadShape("edges left outside the eligible vertices"));
    }
    Ok(())
}

/// Proper `Δ`-orientation in which `u` is a source.
pub fn source_orientation(g: &Graph, u: usize) -> Result<Orientation, ConstructError> {
    extend_partial_from(g, &[u], PartialOrientation::new(g))
}

/// Proper `c`-orientation when no two adjacent vertices have degree above `c`.
pub fn low_degree_orient(g: &Graph, c: usize) -> Result<Orientation, ConstructError> {
    if let Some(&(a, b)) = g.edges().iter().find(|&&(a, b)| g.degree(a) > c && g.degree(b) > c) {
        return Err(ConstructError::DegreeConditionViolated(a, b));
    }
    let s: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > c).collect();
    extend_partial_from(g, &s, PartialOrientation::new(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::{is_proper, max_indegree};

    #[test]
    fn source_has_indegree_zero() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (1, 4)]).unwrap();
        for u in 0..6 {
            let d = source_orientation(&g, u).unwrap();
            assert!(is_proper(&g, &d));
            assert_eq!(d.indegree(u), 0);
            assert!(max_indegree(&d) <= g.max_degree());
        }
    }

    #[test]
    fn keeps_indegrees_on_s() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (0, 4), (1, 4)]).unwrap();
        // S = {0,1}, 0 -> 1; every outside neighbor of S sees both of them
        let (sub, _) = g.induced(&[0, 1]);
        let ds = Orientation::from_arcs(&sub, [(0, 1)]).unwrap();
        let d = extend_partial(&g, &[0, 1], &ds).unwrap();
        assert!(is_proper(&g, &d));
        assert_eq!((d.indegree(0), d.indegree(1)), (0, 1));
    }

    #[test]
    fn precondition_reported() {
        // S = {0,1} with 0 -> 1; vertex 2 sees only 1 of S, but 1 has indegree 1
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (sub, _) = g.induced(&[0, 1]);
        let ds = Orientation::from_arcs(&sub, [(0, 1)]).unwrap();
        assert_eq!(extend_partial(&g, &[0, 1], &ds), Err(ConstructError::PreconditionViolated { v: 2, u: 1 }));
    }

    #[test]
    fn low_degree() {
        // spider: center of degree 3 with legs of length 2
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let d = low_degree_orient(&g, 2).unwrap();
        assert!(is_proper(&g, &d) && max_indegree(&d) <= 2);
        assert_eq!(low_degree_orient(&Graph::complete(3), 1), Err(ConstructError::DegreeConditionViolated(0, 1)));
    }
}
