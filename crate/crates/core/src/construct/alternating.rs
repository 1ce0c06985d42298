use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::orientation::PartialOrientation;

use super::ConstructError;

/// Alternating orientations of a path, named by what happens at its ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlternatingMode {
    /// Both ends are sinks; needs an odd number of vertices.
    SinkEnds,
    /// Both ends are sources; needs an odd number of vertices.
    SourceEnds,
    /// Needs an even number of vertices.
    LeftSourceRightSink,
    /// Needs an even number of vertices.
    LeftSinkRightSource,
}

impl AlternatingMode {
    fn first_is_sink(self) -> bool {
        matches!(self, AlternatingMode::SinkEnds | AlternatingMode::LeftSinkRightSource)
    }

    fn wants_odd(self) -> bool {
        matches!(self, AlternatingMode::SinkEnds | AlternatingMode::SourceEnds)
    }
}

/// Arcs of the alternating orientation of `path` (a vertex sequence).
fn alternating_arcs(path: &[usize], first_is_sink: bool) -> Vec<(usize, usize)> {
    path.windows(2)
        .enumerate()
        .map(|(i, w)| if (i % 2 == 0) == first_is_sink { (w[1], w[0]) } else { (w[0], w[1]) })
        .collect()
}

/// Orients the edges of `path` so that no two consecutive arcs point the same way.
pub fn orient_alternating(
    g: &Graph,
    path: &[usize],
    mode: AlternatingMode,
) -> Result<PartialOrientation, ConstructError> {
    if path.len() < 2 {
        return Err(ConstructError::BadShape("a path needs at least two vertices"));
    }
    if (path.len() % 2 == 1) != mode.wants_odd() {
        return Err(ConstructError::HypothesisViolated("path parity does not match the mode"));
    }
    let mut p = PartialOrientation::new(g);
    for (a, b) in alternating_arcs(path, mode.first_is_sink()) {
        if !g.has_edge(a, b) {
            return Err(ConstructError::BadShape("consecutive path vertices are not adjacent"));
        }
        p.orient(g, a, b)?;
    }
    Ok(p)
}

/// A fan path `v_0, v_1, ..., v_l, v_{l+1}` around the hub `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathContext {
    pub hub: usize,
    pub path: Vec<usize>,
}

/// Orients the inner path edges `v_1 v_2, ..., v_{l-1} v_l` so that the
/// result is proper around the path.
///
/// Spokes must leave the hub, `v_{l+1} -> v_l` and `v_0 v_1` must be
/// oriented, and the current indegrees of the hub, `v_0` and `v_{l+1}` are
/// taken as final.
pub fn extend_to_path(g: &Graph, p: &mut PartialOrientation, ctx: &PathContext) -> Result<(), ConstructError> {
    let hv = ConstructError::HypothesisViolated;
    let (v, path) = (ctx.hub, &ctx.path);
    if path.len() < 8 {
        return Err(hv("at least six inner path vertices are required"));
    }
    let l = path.len() - 2;
    for i in 1..=l {
        let want: BTreeSet<usize> = [path[i - 1], v, path[i + 1]].into_iter().collect();
        let have: BTreeSet<usize> = g.neighbors(path[i]).iter().copied().collect();
        if want.len() != 3 || want != have {
            return Err(hv("inner path vertices must see exactly their two path neighbors and the hub"));
        }
        if p.head(g, v, path[i]) != Some(path[i]) {
            return Err(hv("spokes must be oriented away from the hub"));
        }
    }
    if (1..l).any(|i| p.head(g, path[i], path[i + 1]).is_some()) {
        return Err(hv("inner path edges must be unoriented"));
    }
    if p.head(g, path[l + 1], path[l]) != Some(path[l]) {
        return Err(hv("the last path edge must point into v_l"));
    }
    let first = p.head(g, path[0], path[1]).ok_or(hv("the first path edge must be oriented"))?;
    if p.indegree(v) < 4 {
        return Err(hv("the hub needs indegree at least four"));
    }
    let d1 = first == path[1];
    let (a, b) = (p.indegree(path[0]), p.indegree(path[l + 1]));
    for (x, y) in case_arcs(l, d1, a, b) {
        p.orient(g, path[x], path[y])?;
    }
    let ok = (0..=l).all(|i| p.indegree(path[i]) != p.indegree(path[i + 1]))
        && (1..=l).all(|i| p.indegree(path[i]) != p.indegree(v));
    if !ok {
        return Err(hv("endpoint indegrees fall outside the case analysis"));
    }
    Ok(())
}

/// Arcs by path index for the inner path, given whether `v_1` starts with
/// indegree two and the indegrees `a`, `b` of `v_0`, `v_{l+1}`.
fn case_arcs(l: usize, d1: bool, a: usize, b: usize) -> Vec<(usize, usize)> {
    let alt = |lo: usize, hi: usize, sink: bool| {
        let idx: Vec<usize> = (lo..=hi).collect();
        alternating_arcs(&idx, sink)
    };
    let even = l.is_multiple_of(2);
    let mut arcs = Vec::new();
    match (d1, even) {
        (true, true) => {
            if a != 2 && b != 3 {
                arcs = alt(1, l, false);
            } else if a != 3 && b != 2 {
                arcs = alt(1, l, true);
            } else if a == 2 {
                arcs.push((2, 1));
                arcs.extend(alt(2, l, true));
            } else {
                arcs.extend([(1, 2), (3, 2), (l - 2, l - 1), (l, l - 1)]);
                arcs.extend(alt(3, l - 2, false));
            }
        }
        (true, false) => {
            if a != 3 && b != 3 {
                arcs = alt(1, l, true);
            } else if a != 2 && b != 2 {
                arcs = alt(1, l, false);
            } else if a == 2 {
                arcs.push((2, 1));
                arcs.extend(alt(2, l, true));
            } else {
                arcs.push((l - 1, l));
                arcs.extend(alt(1, l - 1, false));
            }
        }
        (false, true) => {
            if a != 1 && b != 3 {
                arcs = alt(1, l, false);
            } else if a != 2 && b != 2 {
                arcs = alt(1, l, true);
            } else if a == 1 {
                arcs.push((l - 1, l));
                arcs.extend(alt(1, l - 1, true));
            } else {
                arcs.extend([(l - 2, l - 1), (l, l - 1)]);
                arcs.extend(alt(1, l - 2, false));
            }
        }
        (false, false) => {
            if a != 1 && b != 2 {
                arcs = alt(1, l, false);
            } else if a != 2 && b != 3 {
                arcs = alt(1, l, true);
            } else if a == 2 {
                arcs.push((l - 1, l));
                arcs.extend(alt(1, l - 1, false));
            } else {
                arcs.extend([(l - 2, l - 1), (l, l - 1)]);
                arcs.extend(alt(1, l - 2, true));
            }
        }
    }
    arcs
}
