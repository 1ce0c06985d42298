//! Exact branch-and-bound search for proper k-orientations.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::Graph;
use crate::orientation::{is_proper, max_indegree, Orientation};
use crate::recognize::{self, RecognizeError};

mod values;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("empty list of component values")]
    EmptyList,
    #[error(transparent)]
    Recognize(#[from] RecognizeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Vertices by decreasing number of earlier neighbors, edges by their
    /// later endpoint.
    #[default]
    Greedy,
    /// Edges in id order.
    Input,
}

/// How a single decision is searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Branch on indegree values per vertex, pruning with orientation
    /// feasibility.
    #[default]
    Values,
    /// Branch on edge directions.
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub strategy: Strategy,
    pub node_budget: Option<u64>,
    pub edge_order: EdgeOrder,
    /// Sorted indegrees within twin classes.
    pub symmetry_breaking: bool,
    /// Decide each connected component separately.
    pub split_components: bool,
    /// Worker threads used when components are solved separately.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            strategy: Strategy::Values,
            node_budget: None,
            edge_order: EdgeOrder::Greedy,
            symmetry_breaking: true,
            split_components: true,
            threads: 1,
        }
    }
}

impl SearchConfig {
    /// Plain search over all orientations: no symmetry breaking, no splitting.
    pub fn exhaustive() -> Self {
        SearchConfig { strategy: Strategy::Edges, symmetry_breaking: false, split_components: false, ..Self::default() }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = Some(budget);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    Yes(Orientation),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub value: usize,
    pub witness: Orientation,
    pub nodes: u64,
}

/// Classes of two or more pairwise twins (equal open or equal closed
/// neighborhoods), each sorted by id.
fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut open: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            continue;
        }
        open.entry(g.neighbors(v).to_vec()).or_default().push(v);
        let mut c = g.neighbors(v).to_vec();
        c.push(v);
        c.sort_unstable();
        closed.entry(c).or_default().push(v);
    }
    open.into_values().chain(closed.into_values()).filter(|c| c.len() > 1).collect()
}

fn vertex_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut back = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (back[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            back[w] += 1;
        }
    }
    order
}

fn edge_order(g: &Graph, how: EdgeOrder) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..g.m()).collect();
    if how == EdgeOrder::Greedy {
        let mut pos = vec![0; g.n()];
        for (i, v) in vertex_order(g).into_iter().enumerate() {
            pos[v] = i;
        }
        ids.sort_by_key(|&e| {
            let (a, b) = g.edges()[e];
            (pos[a].max(pos[b]), pos[a].min(pos[b]))
        });
    }
    ids
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    order: Vec<usize>,
    toward_max: Vec<bool>,
    indeg: Vec<usize>,
    rem: Vec<usize>,
    /// (predecessor, successor) within the vertex's twin class.
    twin: Vec<(Option<usize>, Option<usize>)>,
    nodes: u64,
    budget: Option<u64>,
    scratch: Vec<bool>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, cfg: &SearchConfig) -> Self {
        let n = g.n();
        let mut twin = vec![(None, None); n];
        if cfg.symmetry_breaking {
            for class in twin_classes(g) {
                for w in class.windows(2) {
                    twin[w[0]].1 = Some(w[1]);
                    twin[w[1]].0 = Some(w[0]);
                }
            }
        }
        Search {
            g,
            k,
            order: edge_order(g, cfg.edge_order),
            toward_max: vec![false; g.m()],
            indeg: vec![0; n],
            rem: (0..n).map(|v| g.degree(v)).collect(),
            twin,
            nodes: 0,
            budget: cfg.node_budget,
            scratch: Vec::new(),
        }
    }

    fn upper(&self, v: usize) -> usize {
        (self.indeg[v] + self.rem[v]).min(self.k)
    }

    /// Some value in `v`'s feasible interval avoids all settled neighbors.
    fn vertex_ok(&mut self, v: usize) -> bool {
        let lo = self.indeg[v];
        if lo > self.k {
            return false;
        }
        let g = self.g;
        if self.rem[v] == 0 {
            return g.neighbors(v).iter().all(|&w| self.rem[w] != 0 || self.indeg[w] != lo);
        }
        let hi = self.upper(v);
        let width = hi - lo + 1;
        if width > g.degree(v) {
            return true;
        }
        self.scratch.clear();
        self.scratch.resize(width, false);
        for &w in g.neighbors(v) {
            let x = self.indeg[w];
            if self.rem[w] == 0 && (lo..=hi).contains(&x) {
                self.scratch[x - lo] = true;
            }
        }
        self.scratch.iter().any(|&b| !b)
    }

    fn twins_ok(&self, v: usize) -> bool {
        let (p, s) = self.twin[v];
        p.is_none_or(|p| self.indeg[v] <= self.upper(p)) && s.is_none_or(|s| self.indeg[s] <= self.upper(v))
    }

    fn consistent(&mut self, a: usize, b: usize) -> bool {
        for x in [a, b] {
            if !self.vertex_ok(x) || !self.twins_ok(x) {
                return false;
            }
            if self.rem[x] == 0 {
                let g = self.g;
                for &y in g.neighbors(x) {
                    if self.rem[y] != 0 && !self.vertex_ok(y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn set(&mut self, e: usize, toward_max: bool) {
        let (a, b) = self.g.edges()[e];
        self.toward_max[e] = toward_max;
        self.indeg[if toward_max { b } else { a }] += 1;
        self.rem[a] -= 1;
        self.rem[b] -= 1;
    }

    fn unset(&mut self, e: usize) {
        let (a, b) = self.g.edges()[e];
        self.indeg[if self.toward_max[e] { b } else { a }] -= 1;
        self.rem[a] += 1;
        self.rem[b] += 1;
    }

    /// Visits every proper k-orientation (up to symmetry breaking).
    fn run<F>(&mut self, mut visit: F) -> Result<(), SolveError>
    where
        F: FnMut(&Orientation) -> ControlFlow<()>,
    {
        let m = self.order.len();
        if !(0..self.g.n()).all(|v| self.vertex_ok(v)) {
            return Ok(());
        }
        if m == 0 {
            let d = Orientation::from_directions(self.g, Vec::new()).expect("edgeless");
            let _ = visit(&d);
            return Ok(());
        }
        // tried[i]: number of directions already tried for the edge at depth i
        let mut tried = vec![0u8; m];
        let mut depth = 0usize;
        loop {
            let e = self.order[depth];
            if tried[depth] > 0 {
                self.unset(e);
            }
            if tried[depth] == 2 {
                tried[depth] = 0;
                if depth == 0 {
                    return Ok(());
                }
                depth -= 1;
                continue;
            }
            let (a, b) = self.g.edges()[e];
            let toward_max = (tried[depth] == 0) == self.prefer_max_head(a, b);
            tried[depth] += 1;
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(SolveError::BudgetExceeded { nodes: self.nodes });
            }
            self.set(e, toward_max);
            if !self.consistent(a, b) {
                continue;
            }
            if depth + 1 < m {
                depth += 1;
                continue;
            }
            let d = Orientation::from_directions(self.g, self.toward_max.clone()).expect("complete");
            debug_assert!(is_proper(self.g, &d) && max_indegree(&d) <= self.k);
            if visit(&d).is_break() {
                return Ok(());
            }
        }
    }

    /// First choice of head: the endpoint with fewer undecided edges.
    fn prefer_max_head(&self, a: usize, b: usize) -> bool {
        self.rem[b] <= self.rem[a]
    }
}

fn decide_connected(g: &Graph, k: usize, cfg: &SearchConfig) -> (Result<Decision, SolveError>, u64) {
    if cfg.strategy == Strategy::Values {
        let twin = Search::new(g, k, cfg).twin;
        let mut s = values::ValueSearch::new(g, k, twin, cfg.node_budget);
        let r = s.run().map(|d| d.map_or(Decision::No, Decision::Yes));
        return (r, s.nodes);
    }
    let mut s = Search::new(g, k, cfg);
    let mut found = None;
    let r = s.run(|d| {
        found = Some(d.clone());
        ControlFlow::Break(())
    });
    let out = r.map(|()| found.map_or(Decision::No, Decision::Yes));
    (out, s.nodes)
}

/// Decides whether `g` has a proper orientation with maximum indegree at most
/// `k`; also returns the number of search nodes.
pub fn decide_counting(g: &Graph, k: usize, cfg: &SearchConfig) -> (Result<Decision, SolveError>, u64) {
    if !cfg.split_components {
        return decide_connected(g, k, cfg);
    }
    let comps = g.components();
    if comps.len() <= 1 {
        return decide_connected(g, k, cfg);
    }
    let parts: Vec<(Graph, Vec<usize>)> = comps.iter().map(|c| g.induced(c)).collect();
    let results = solve_parts(&parts, cfg, |h, c| decide_connected(h, k, c));
    let mut nodes = 0;
    let mut dirs = vec![false; g.m()];
    for ((r, used), (h, map)) in results.into_iter().zip(&parts) {
        nodes += used;
        match r {
            Err(SolveError::BudgetExceeded { .. }) => return (Err(SolveError::BudgetExceeded { nodes }), nodes),
            Err(e) => return (Err(e), nodes),
            Ok(Decision::No) => return (Ok(Decision::No), nodes),
            Ok(Decision::Yes(d)) => lift(g, h, map, &d, &mut dirs),
        }
    }
    let d = Orientation::from_directions(g, dirs).expect("all components oriented");
    (Ok(Decision::Yes(d)), nodes)
}

fn lift(g: &Graph, h: &Graph, map: &[usize], d: &Orientation, dirs: &mut [bool]) {
    for (t, hd) in d.arcs(h) {
        let (t, hd) = (map[t], map[hd]);
        let e = g.edge_id(t, hd).expect("edge of component");
        dirs[e] = hd > t;
    }
}

/// Runs `f` on every part, splitting the parts over `cfg.threads` workers.
/// Each part gets the full node budget.
fn solve_parts<T, F>(parts: &[(Graph, Vec<usize>)], cfg: &SearchConfig, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&Graph, &SearchConfig) -> T + Sync,
{
    let threads = cfg.threads.max(1).min(parts.len().max(1));
    if threads == 1 {
        return parts.iter().map(|(h, _)| f(h, cfg)).collect();
    }
    let mut slots: Vec<Option<T>> = (0..parts.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let f = &f;
        let chunk = parts.len().div_ceil(threads);
        for (ps, out) in parts.chunks(chunk).zip(slots.chunks_mut(chunk)) {
            scope.spawn(move || {
                for ((h, _), slot) in ps.iter().zip(out) {
                    *slot = Some(f(h, cfg));
                }
            });
        }
    });
    slots.into_iter().map(|s| s.expect("worker finished")).collect()
}

pub fn decide_k_orientation(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Decision, SolveError> {
    decide_counting(g, k, cfg).0
}

fn optimum_connected(g: &Graph, cfg: &SearchConfig) -> Result<Solved, SolveError> {
    let lower = g.clique_number().saturating_sub(1);
    let mut nodes = 0;
    for k in lower..=g.max_degree() {
        let (r, used) = decide_connected(g, k, cfg);
        nodes += used;
        match r {
            Ok(Decision::Yes(witness)) => return Ok(Solved { value: k, witness, nodes }),
            Ok(Decision::No) => {}
            Err(SolveError::BudgetExceeded { .. }) => return Err(SolveError::BudgetExceeded { nodes }),
            Err(e) => return Err(e),
        }
    }
    unreachable!("every graph has a proper orientation of maximum indegree at most its maximum degree")
}

/// Exact proper orientation number with a witness, searching `k` upward
/// from `ω - 1`.
pub fn proper_orientation_number(g: &Graph, cfg: &SearchConfig) -> Result<Solved, SolveError> {
    let comps = g.components();
    if !cfg.split_components || comps.len() <= 1 {
        return optimum_connected(g, cfg);
    }
    let parts: Vec<(Graph, Vec<usize>)> = comps.iter().map(|c| g.induced(c)).collect();
    let results = solve_parts(&parts, cfg, optimum_connected);
    let mut dirs = vec![false; g.m()];
    let mut values = Vec::new();
    let mut nodes = 0;
    for (r, (h, map)) in results.into_iter().zip(&parts) {
        let s = r?;
        nodes += s.nodes;
        values.push(s.value);
        lift(g, h, map, &s.witness, &mut dirs);
    }
    let value = disjoint_union_rule(&values)?;
    let witness = Orientation::from_directions(g, dirs).expect("all components oriented");
    Ok(Solved { value, witness, nodes })
}

/// Every proper k-orientation, each exactly once.
pub fn enumerate_proper_k_orientations(
    g: &Graph,
    k: usize,
    node_budget: Option<u64>,
) -> Result<Vec<Orientation>, SolveError> {
    let mut out = Vec::new();
    for_each_proper_k_orientation(g, k, node_budget, |d| {
        out.push(d.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Streams every proper k-orientation to `visit` until it breaks.
pub fn for_each_proper_k_orientation<F>(
    g: &Graph,
    k: usize,
    node_budget: Option<u64>,
    visit: F,
) -> Result<(), SolveError>
where
    F: FnMut(&Orientation) -> ControlFlow<()>,
{
    let cfg = SearchConfig { node_budget, ..SearchConfig::exhaustive() };
    Search::new(g, k, &cfg).run(visit)
}

/// The proper orientation number of a disjoint union is the maximum over its
/// components.
pub fn disjoint_union_rule(values: &[usize]) -> Result<usize, SolveError> {
    values.iter().copied().max().ok_or(SolveError::EmptyList)
}

/// Decision for chordal graphs: a clique on `k + 2` vertices answers no
/// outright; otherwise the exact search decides.
pub fn fpt_chordal(g: &Graph, k: usize, cfg: &SearchConfig) -> Result<Decision, SolveError> {
    let peo = recognize::chordal_peo(g)?;
    let omega = recognize::clique_number_chordal(g, &peo)?;
    if omega >= k + 2 {
        return Ok(Decision::No);
    }
    decide_k_orientation(g, k, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn triangle_decisions() {
        let g = Graph::complete(3);
        assert_eq!(decide_k_orientation(&g, 1, &cfg()).unwrap(), Decision::No);
        let Decision::Yes(d) = decide_k_orientation(&g, 2, &cfg()).unwrap() else {
            panic!("K3 has a proper 2-orientation")
        };
        let mut ind = d.indegrees().to_vec();
        ind.sort_unstable();
        assert_eq!(ind, vec![0, 1, 2]);
    }

    #[test]
    fn small_optima() {
        for n in 1..=6 {
            assert_eq!(proper_orientation_number(&Graph::complete(n), &cfg()).unwrap().value, n - 1);
        }
        assert_eq!(proper_orientation_number(&Graph::star(3), &cfg()).unwrap().value, 1);
        assert_eq!(proper_orientation_number(&Graph::empty(4), &cfg()).unwrap().value, 0);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_proper_k_orientations(&Graph::path(2), 1, None).unwrap().len(), 2);
        assert_eq!(enumerate_proper_k_orientations(&Graph::complete(3), 2, None).unwrap().len(), 6);
    }

    #[test]
    fn union_rule() {
        assert_eq!(disjoint_union_rule(&[2, 3]), Ok(3));
        assert_eq!(disjoint_union_rule(&[0]), Ok(0));
        assert_eq!(disjoint_union_rule(&[4, 4, 1]), Ok(4));
        assert_eq!(disjoint_union_rule(&[]), Err(SolveError::EmptyList));
    }

    #[test]
    fn fpt_shortcut() {
        let tiny = SearchConfig::default().with_budget(0);
        assert_eq!(fpt_chordal(&Graph::complete(6), 3, &tiny), Ok(Decision::No));
        assert!(fpt_chordal(&Graph::complete(3), 2, &cfg()).unwrap().is_yes());
        assert!(matches!(fpt_chordal(&Graph::cycle(4), 2, &cfg()), Err(SolveError::Recognize(_))));
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::complete(6);
        let edges = SearchConfig { strategy: Strategy::Edges, ..SearchConfig::default() };
        let r = decide_k_orientation(&g, 4, &edges.with_budget(10));
        assert_eq!(r, Err(SolveError::BudgetExceeded { nodes: 11 }));
    }

    #[test]
    fn threads_agree() {
        let g = crate::graph::disjoint_union(&Graph::complete(4), &Graph::cycle(5));
        let one = proper_orientation_number(&g, &cfg()).unwrap();
        let four = proper_orientation_number(&g, &SearchConfig { threads: 4, ..cfg() }).unwrap();
        assert_eq!(one.value, 3);
        assert_eq!(four.value, 3);
    }
}
