//! Search over indegree values. Each vertex gets a value distinct from its
//! neighbors; after every assignment two orientations are repaired, one whose
//! indegrees stay at most the upper bounds and one whose outdegrees stay at
//! most `deg - lower`. Both exist exactly when an orientation meeting the
//! bounds on both sides exists.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::orientation::Orientation;

use super::SolveError;

/// Orientation in which each edge is charged to one endpoint and every load
/// stays within its cap whenever `repair` succeeds.
struct Capped {
    /// `charged_max[e]`: edge `e` is charged to its larger endpoint.
    charged_max: Vec<bool>,
    load: Vec<usize>,
    /// Charged edges per vertex.
    charged: Vec<Vec<usize>>,
    /// BFS scratch.
    from: Vec<Option<(usize, usize)>>,
}

impl Capped {
    fn new(g: &Graph) -> Self {
        let mut c = Capped {
            charged_max: vec![true; g.m()],
            load: vec![0; g.n()],
            charged: vec![Vec::new(); g.n()],
            from: vec![None; g.n()],
        };
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let x = a.max(b);
            c.load[x] += 1;
            c.charged[x].push(e);
        }
        c
    }

    fn owner(&self, g: &Graph, e: usize) -> usize {
        let (a, b) = g.edges()[e];
        if self.charged_max[e] {
            a.max(b)
        } else {
            a.min(b)
        }
    }

    fn flip(&mut self, g: &Graph, e: usize) {
        let (a, b) = g.edges()[e];
        let old = self.owner(g, e);
        let new = if old == a { b } else { a };
        self.charged_max[e] = !self.charged_max[e];
        self.load[old] -= 1;
        self.load[new] += 1;
        let pos = self.charged[old].iter().position(|&f| f == e).expect("charged edge");
        self.charged[old].swap_remove(pos);
        self.charged[new].push(e);
    }

    /// Moves one unit of load away from `x` along a path to a vertex with
    /// spare capacity.
    fn push_one(&mut self, g: &Graph, x: usize, cap: &[usize]) -> bool {
        self.from.iter_mut().for_each(|f| *f = None);
        let mut queue = VecDeque::from([x]);
        self.from[x] = Some((x, usize::MAX));
        while let Some(y) = queue.pop_front() {
            for i in 0..self.charged[y].len() {
                let e = self.charged[y][i];
                let (a, b) = g.edges()[e];
                let z = if a == y { b } else { a };
                if self.from[z].is_some() {
                    continue;
                }
                self.from[z] = Some((y, e));
                if self.load[z] < cap[z] {
                    let mut cur = z;
                    while cur != x {
                        let (prev, e) = self.from[cur].expect("on path");
                        self.flip(g, e);
                        cur = prev;
                    }
                    return true;
                }
                queue.push_back(z);
            }
        }
        false
    }

    fn repair(&mut self, g: &Graph, cap: &[usize]) -> bool {
        for x in 0..g.n() {
            while self.load[x] > cap[x] {
                if !self.push_one(g, x, cap) {
                    return false;
                }
            }
        }
        true
    }
}

pub(super) struct ValueSearch<'g> {
    g: &'g Graph,
    /// `min(deg, k)`.
    top: Vec<usize>,
    value: Vec<Option<usize>>,
    upper: Capped,
    upper_cap: Vec<usize>,
    /// Charged edges are outgoing here.
    lower: Capped,
    lower_cap: Vec<usize>,
    twin: Vec<(Option<usize>, Option<usize>)>,
    pub(super) nodes: u64,
    budget: Option<u64>,
}

impl<'g> ValueSearch<'g> {
    pub(super) fn new(g: &'g Graph, k: usize, twin: Vec<(Option<usize>, Option<usize>)>, budget: Option<u64>) -> Self {
        let top: Vec<usize> = (0..g.n()).map(|v| g.degree(v).min(k)).collect();
        let mut lower = Capped::new(g);
        // charge every edge to its tail in the second orientation
        for e in 0..g.m() {
            lower.flip(g, e);
        }
        ValueSearch {
            g,
            upper_cap: top.clone(),
            top,
            value: vec![None; g.n()],
            upper: Capped::new(g),
            lower,
            lower_cap: (0..g.n()).map(|v| g.degree(v)).collect(),
            twin,
            nodes: 0,
            budget,
        }
    }

    fn feasible(&mut self) -> bool {
        self.upper.repair(self.g, &self.upper_cap) && self.lower.repair(self.g, &self.lower_cap)
    }

    /// Values still open for an unassigned vertex.
    fn candidates(&self, v: usize) -> Vec<usize> {
        let mut hi = self.top[v];
        let mut lo = 0;
        if let Some(Some(x)) = self.twin[v].0.map(|p| self.value[p]) {
            hi = hi.min(x);
        }
        if let Some(Some(x)) = self.twin[v].1.map(|s| self.value[s]) {
            lo = x;
        }
        if lo > hi {
            return Vec::new();
        }
        let mut open = vec![true; hi - lo + 1];
        for &w in self.g.neighbors(v) {
            if let Some(x) = self.value[w] {
                if (lo..=hi).contains(&x) {
                    open[x - lo] = false;
                }
            }
        }
        (lo..=hi).filter(|&x| open[x - lo]).collect()
    }

    fn assign(&mut self, v: usize, x: usize) {
        self.value[v] = Some(x);
        self.upper_cap[v] = x;
        self.lower_cap[v] = self.g.degree(v) - x;
    }

    fn clear(&mut self, v: usize) {
        self.value[v] = None;
        self.upper_cap[v] = self.top[v];
        self.lower_cap[v] = self.g.degree(v);
    }

    /// Unassigned vertex with the fewest candidates, ties to higher degree.
    fn pick(&self) -> Option<Result<(usize, Vec<usize>), ()>> {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for v in (0..self.g.n()).filter(|&v| self.value[v].is_none()) {
            let c = self.candidates(v);
            if c.is_empty() {
                return Some(Err(()));
            }
            let better = match &best {
                None => true,
                Some((b, bc)) => {
                    (c.len(), std::cmp::Reverse(self.g.degree(v))) < (bc.len(), std::cmp::Reverse(self.g.degree(*b)))
                }
            };
            if better {
                best = Some((v, c));
            }
        }
        best.map(Ok)
    }

    pub(super) fn run(&mut self) -> Result<Option<Orientation>, SolveError> {
        if !self.feasible() {
            return Ok(None);
        }
        self.dfs()
    }

    fn dfs(&mut self) -> Result<Option<Orientation>, SolveError> {
        let (v, mut cands) = match self.pick() {
            None => {
                let d = Orientation::from_directions(self.g, self.upper.charged_max.clone()).expect("complete");
                return Ok(Some(d));
            }
            Some(Err(())) => return Ok(None),
            Some(Ok(p)) => p,
        };
        let here = self.upper.load[v];
        cands.sort_by_key(|&x| (x.abs_diff(here), x));
        for x in cands {
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(SolveError::BudgetExceeded { nodes: self.nodes });
            }
            self.assign(v, x);
            if self.feasible() {
                if let Some(d) = self.dfs()? {
                    return Ok(Some(d));
                }
            }
            self.clear(v);
        }
        Ok(None)
    }
}
