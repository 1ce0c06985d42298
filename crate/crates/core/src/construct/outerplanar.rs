use std::collections::BTreeMap;

use crate::exact::{proper_orientation_number, SearchConfig};
use crate::graph::Graph;
use crate::orientation::{is_proper, max_indegree, Orientation, PartialOrientation};
use crate::recognize::{RecognizeError, TriangleStrip};

use super::alternating::{extend_to_path, PathContext};
use super::extend::extend_partial_from;
use super::ConstructError;

/// Node budget of the exact solver on small-degree pieces.
const BASE_BUDGET: u64 = 20_000;

/// Proper 13-orientation of a maximal outerplanar graph whose weak dual is a
/// path. Pieces of maximum degree at most 13 are solved directly; otherwise
/// the fan of a maximum-degree vertex is cut out, both sides are solved
/// recursively and the fan is oriented around them.
pub fn outerplanar_strip_orient(g: &Graph, strip: &TriangleStrip) -> Result<Orientation, ConstructError> {
    if !strip.is_valid_for(g) {
        return Err(RecognizeError::NotStrip("triangle sequence does not match the graph").into());
    }
    let mut p = PartialOrientation::new(g);
    let mut work = vec![(0, strip.triangles.len())];
    // Pieces are independent apart from the fan glue, which is applied once
    // both neighboring pieces are done; collect fans and apply them last,
    // innermost first.
    let mut fans = Vec::new();
    while let Some((lo, hi)) = work.pop() {
        let tris = &strip.triangles[lo..hi];
        match split_point(tris) {
            None => orient_piece(g, tris, &mut p)?,
            Some(f) => {
                work.push((lo, lo + f.first));
                work.push((lo + f.last + 1, hi));
                fans.push(f);
            }
        }
    }
    for f in fans.iter().rev() {
        glue_fan(g, &mut p, f)?;
    }
    let d = p.into_orientation()?;
    if !is_proper(g, &d) || max_indegree(&d) > 13 {
        return Err(ConstructError::HypothesisViolated("strip assembly is not a proper 13-orientation"));
    }
    Ok(d)
}

/// Fan of the hub `v` over triangles `first..=last` of a piece; `spokes`
/// lists `v_1, ..., v_Δ` in fan order.
struct Fan {
    first: usize,
    last: usize,
    hub: usize,
    spokes: Vec<usize>,
}

fn degrees(tris: &[[usize; 3]]) -> BTreeMap<usize, usize> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in tris {
        for (i, &a) in t.iter().enumerate() {
            for &b in &t[i + 1..] {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
    }
    adj.into_iter()
        .map(|(v, mut ns)| {
            ns.sort_unstable();
            ns.dedup();
            (v, ns.len())
        })
        .collect()
}

fn split_point(tris: &[[usize; 3]]) -> Option<Fan> {
    let deg = degrees(tris);
    let (&hub, &delta) = deg.iter().max_by_key(|&(&v, &d)| (d, std::cmp::Reverse(v)))?;
    if delta <= 13 {
        return None;
    }
    let first = tris.iter().position(|t| t.contains(&hub))?;
    let last = tris.iter().rposition(|t| t.contains(&hub))?;
    let other = |t: &[usize; 3], skip: &[usize]| t.iter().copied().find(|x| !skip.contains(x));
    let shared = |a: &[usize; 3], b: &[usize; 3]| a.iter().copied().find(|x| *x != hub && b.contains(x));
    let v2 = shared(&tris[first], &tris[first + 1])?;
    let mut spokes = vec![other(&tris[first], &[hub, v2])?, v2];
    for t in &tris[first + 1..=last] {
        let prev = *spokes.last()?;
        spokes.push(other(t, &[hub, prev])?);
    }
    debug_assert_eq!(spokes.len(), delta);
    Some(Fan { first, last, hub, spokes })
}

/// Orients a piece of maximum degree at most 13. An empty piece stands for a
/// single fan edge, oriented when the fan is glued.
fn orient_piece(g: &Graph, tris: &[[usize; 3]], p: &mut PartialOrientation) -> Result<(), ConstructError> {
    if tris.is_empty() {
        return Ok(());
    }
    let mut map: Vec<usize> = tris.iter().flatten().copied().collect();
    map.sort_unstable();
    map.dedup();
    let local = |v: usize| map.binary_search(&v).expect("vertex of piece");
    let edges = tris.iter().flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]).map(|(a, b)| (local(a), local(b)));
    let sub = Graph::from_edges_lossy(map.len(), edges);
    let config = SearchConfig::default().with_budget(BASE_BUDGET);
    let d = match proper_orientation_number(&sub, &config) {
        Ok(s) => s.witness,
        Err(_) => extend_partial_from(&sub, &[], PartialOrientation::new(&sub))?,
    };
    for (a, b) in d.arcs(&sub) {
        p.orient(g, map[a], map[b])?;
    }
    Ok(())
}

fn glue_fan(g: &Graph, p: &mut PartialOrientation, f: &Fan) -> Result<(), ConstructError> {
    let v = f.hub;
    let s = &f.spokes;
    let delta = s.len();
    // an empty side is just the edge v_1 v_2 (or v_{Δ-1} v_Δ)
    for (a, b) in [(s[0], s[1]), (s[delta - 2], s[delta - 1])] {
        if p.head(g, a, b).is_none() {
            p.orient(g, a, b)?;
        }
    }
    for &x in &[s[0], s[1], s[delta - 2], s[delta - 1]] {
        p.orient(g, x, v)?;
    }
    let taken: Vec<usize> = [s[0], s[1], s[delta - 2], s[delta - 1]].iter().map(|&x| p.indegree(x)).collect();
    p.orient(g, s[1], s[2])?;
    p.orient(g, s[delta - 2], s[delta - 3])?;
    let extra = (0..=4).find(|e| !taken.contains(&(4 + e))).expect("four values cannot block five");
    // spokes v_3 .. v_{2+extra} feed the hub, stepping along the path
    for i in 2..2 + extra {
        p.orient(g, s[i], v)?;
        let before = p.indegree(s[i - 1]);
        if p.indegree(s[i]) == before {
            p.orient(g, s[i + 1], s[i])?;
        } else {
            p.orient(g, s[i], s[i + 1])?;
        }
    }
    for &x in &s[2 + extra..delta - 2] {
        p.orient(g, v, x)?;
    }
    let ctx = PathContext { hub: v, path: s[1 + extra..delta - 1].to_vec() };
    extend_to_path(g, p, &ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::maximal_outerplane_weak_dual;

    fn run(g: &Graph) -> Orientation {
        let strip = maximal_outerplane_weak_dual(g).unwrap();
        let d = outerplanar_strip_orient(g, &strip).unwrap();
        assert!(is_proper(g, &d));
        assert!(max_indegree(&d) <= 13);
        d
    }

    /// Triangles `(0, i, i+1)` for `i = 1..=t`.
    fn fan_graph(t: usize) -> Graph {
        let mut e = Vec::new();
        for i in 1..=t {
            e.extend([(0, i), (i, i + 1)]);
        }
        e.push((0, t + 1));
        Graph::from_edges(t + 2, e).unwrap()
    }

    #[test]
    fn triangle() {
        assert_eq!(max_indegree(&run(&Graph::complete(3))), 2);
    }

    #[test]
    fn small_fan() {
        run(&fan_graph(11));
    }

    #[test]
    fn big_fans_recurse() {
        for t in 13..30 {
            run(&fan_graph(t));
        }
    }

    #[test]
    fn two_hubs() {
        // fan around 0 on 1..=17, then fan around 17 continuing to 18..=34
        let mut e = Vec::new();
        for i in 1..17 {
            e.extend([(0, i), (i, i + 1)]);
        }
        e.push((0, 17));
        let mut prev = 0;
        for j in 18..=34 {
            e.extend([(17, j), (prev, j)]);
            prev = j;
        }
        run(&Graph::from_edges(35, e).unwrap());
    }
}
