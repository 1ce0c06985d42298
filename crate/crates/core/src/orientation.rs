//! Orientations, partial orientations and the properness checks.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edge {0}-{1} is already oriented the other way")]
    Conflict(usize, usize),
    #[error("edge {0}-{1} is given more than once")]
    Repeated(usize, usize),
    #[error("{0} edges left unoriented")]
    Incomplete(usize),
    #[error("orientation has {got} edges, graph has {expected}")]
    EdgeCount { got: usize, expected: usize },
}

/// A full orientation of a [`Graph`]. Edge `i` is `(a, b)` with `a < b`;
/// `toward_max[i]` means the arc is `a -> b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    toward_max: Vec<bool>,
    indegree: Vec<usize>,
}

impl Orientation {
    pub fn from_directions(g: &Graph, toward_max: Vec<bool>) -> Result<Self, OrientationError> {
        if toward_max.len() != g.m() {
            return Err(OrientationError::EdgeCount { got: toward_max.len(), expected: g.m() });
        }
        let indegree = recompute(g, &toward_max);
        Ok(Orientation { toward_max, indegree })
    }

    /// Builds an orientation from a list of arcs `tail -> head`, which must
    /// cover every edge exactly once.
    pub fn from_arcs<I>(g: &Graph, arcs: I) -> Result<Self, OrientationError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut p = PartialOrientation::new(g);
        for (t, h) in arcs {
            let id = g.edge_id(t, h).ok_or(OrientationError::NotAnEdge(t, h))?;
            if p.direction(id).is_some() {
                return Err(OrientationError::Repeated(t.min(h), t.max(h)));
            }
            p.orient(g, t, h)?;
        }
        p.into_orientation()
    }

    /// Orientation induced by a linear order: earlier vertices point to later ones.
    pub fn from_order(g: &Graph, order: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let dirs = g.edges().iter().map(|&(a, b)| pos[a] < pos[b]).collect();
        Self::from_directions(g, dirs).expect("edge count matches")
    }

    pub fn indegrees(&self) -> &[usize] {
        &self.indegree
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.indegree[v]
    }

    pub fn directions(&self) -> &[bool] {
        &self.toward_max
    }

    /// Arc of edge `id` as `(tail, head)`.
    pub fn arc(&self, g: &Graph, id: usize) -> (usize, usize) {
        let (a, b) = g.edges()[id];
        if self.toward_max[id] {
            (a, b)
        } else {
            (b, a)
        }
    }

    pub fn arcs<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = (usize, usize)> + 'a {
        (0..g.m()).map(move |id| self.arc(g, id))
    }

    /// Recomputes indegrees from the directions; the audit path for the cache.
    pub fn recomputed_indegrees(&self, g: &Graph) -> Vec<usize> {
        recompute(g, &self.toward_max)
    }

    pub fn into_partial(self) -> PartialOrientation {
        let unoriented = vec![0; self.indegree.len()];
        PartialOrientation {
            dir: self.toward_max.into_iter().map(Some).collect(),
            indegree: self.indegree,
            unoriented,
            pending: 0,
        }
    }

    /// Every arc reversed.
    pub fn reversed(&self, g: &Graph) -> Self {
        Self::from_directions(g, self.toward_max.iter().map(|d| !d).collect()).expect("same graph")
    }
}

fn recompute(g: &Graph, toward_max: &[bool]) -> Vec<usize> {
    let mut indeg = vec![0; g.n()];
    for (&(a, b), &d) in g.edges().iter().zip(toward_max) {
        indeg[if d { b } else { a }] += 1;
    }
    indeg
}

/// Orientation under construction: each edge is oriented or not yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOrientation {
    dir: Vec<Option<bool>>,
    indegree: Vec<usize>,
    unoriented: Vec<usize>,
    pending: usize,
}

impl PartialOrientation {
    pub fn new(g: &Graph) -> Self {
        PartialOrientation {
            dir: vec![None; g.m()],
            indegree: vec![0; g.n()],
            unoriented: (0..g.n()).map(|v| g.degree(v)).collect(),
            pending: g.m(),
        }
    }

    /// Orients the edge `tail-head` as `tail -> head`. Re-orienting in the same
    /// direction is a no-op.
    pub fn orient(&mut self, g: &Graph, tail: usize, head: usize) -> Result<(), OrientationError> {
        let id = g.edge_id(tail, head).ok_or(OrientationError::NotAnEdge(tail, head))?;
        let want = tail < head;
        match self.dir[id] {
            Some(d) if d == want => Ok(()),
            Some(_) => Err(OrientationError::Conflict(tail.min(head), tail.max(head))),
            None => {
                self.dir[id] = Some(want);
                self.indegree[head] += 1;
                self.unoriented[tail] -= 1;
                self.unoriented[head] -= 1;
                self.pending -= 1;
                Ok(())
            }
        }
    }

    /// Clears the direction of edge `u-v` if it was set.
    pub fn unorient(&mut self, g: &Graph, u: usize, v: usize) {
        let Some(id) = g.edge_id(u, v) else { return };
        if let Some(d) = self.dir[id].take() {
            let (a, b) = g.edges()[id];
            self.indegree[if d { b } else { a }] -= 1;
            self.unoriented[a] += 1;
            self.unoriented[b] += 1;
            self.pending += 1;
        }
    }

    pub fn direction(&self, id: usize) -> Option<bool> {
        self.dir[id]
    }

    /// Head of the edge `u-v` if it is oriented.
    pub fn head(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        let id = g.edge_id(u, v)?;
        let (a, b) = g.edges()[id];
        self.dir[id].map(|d| if d { b } else { a })
    }

    pub fn indegree(&self, v: usize) -> usize {
        self.indegree[v]
    }

    pub fn indegrees(&self) -> &[usize] {
        &self.indegree
    }

    pub fn unoriented_at(&self, v: usize) -> usize {
        self.unoriented[v]
    }

    pub fn is_complete(&self) -> bool {
        self.pending == 0
    }

    pub fn into_orientation(self) -> Result<Orientation, OrientationError> {
        if self.pending > 0 {
            return Err(OrientationError::Incomplete(self.pending));
        }
        Ok(Orientation { toward_max: self.dir.into_iter().map(|d| d.unwrap()).collect(), indegree: self.indegree })
    }

    /// Copies every oriented edge of `sub` (an orientation of an induced
    /// subgraph whose local ids map through `map`) into `self`.
    pub fn absorb(&mut self, g: &Graph, sub: &Graph, d: &Orientation, map: &[usize]) -> Result<(), OrientationError> {
        for (t, h) in d.arcs(sub) {
            self.orient(g, map[t], map[h])?;
        }
        Ok(())
    }
}

/// `(u, c, d)`: `u` must have indegree `d` but is colored `c` when checking
/// properness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompensationSpec {
    pub u: usize,
    pub c: usize,
    pub d: usize,
}

/// True iff adjacent vertices always receive different indegrees.
pub fn is_proper(g: &Graph, d: &Orientation) -> bool {
    let ind = d.indegrees();
    g.edges().iter().all(|&(a, b)| ind[a] != ind[b])
}

pub fn max_indegree(d: &Orientation) -> usize {
    d.indegrees().iter().copied().max().unwrap_or(0)
}

/// `indegree[u] == d` and the coloring that uses indegrees everywhere except
/// color `c` at `u` is proper.
pub fn is_compensated_proper(g: &Graph, d: &Orientation, spec: CompensationSpec) -> bool {
    if spec.u >= g.n() || d.indegree(spec.u) != spec.d {
        return false;
    }
    let color = |v: usize| if v == spec.u { spec.c } else { d.indegree(v) };
    g.edges().iter().all(|&(a, b)| color(a) != color(b))
}
