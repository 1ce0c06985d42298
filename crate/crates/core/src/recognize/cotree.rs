use crate::graph::Graph;

use super::RecognizeError;

/// Union/join decomposition tree. Leaves carry vertex ids of the input graph.
///
/// Quasi-threshold cotrees only use joins of the shape `[Leaf(v), H]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().for_each(|c| c.collect(out)),
        }
    }

    /// Rebuilds the graph on `n` vertices described by the tree.
    pub fn evaluate(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.edges_into(&mut edges);
        Graph::from_edges_lossy(n, edges)
    }

    fn edges_into(&self, edges: &mut Vec<(usize, usize)>) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => ch.iter().for_each(|c| c.edges_into(edges)),
            Cotree::Join(ch) => {
                let parts: Vec<Vec<usize>> = ch.iter().map(Cotree::vertices).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for &x in a {
                            edges.extend(b.iter().map(|&y| (x, y)));
                        }
                    }
                }
                ch.iter().for_each(|c| c.edges_into(edges));
            }
        }
    }

    /// True iff every join has the form `[Leaf(v), H]`.
    pub fn is_quasi_threshold_form(&self) -> bool {
        match self {
            Cotree::Leaf(_) => true,
            Cotree::Union(ch) => ch.iter().all(Cotree::is_quasi_threshold_form),
            Cotree::Join(ch) => ch.len() == 2 && matches!(ch[0], Cotree::Leaf(_)) && ch[1].is_quasi_threshold_form(),
        }
    }
}

/// Connected components of `g[vs]`, or of its complement when `co` is set.
fn parts(g: &Graph, vs: &[usize], co: bool) -> Vec<Vec<usize>> {
    let mut inside = vec![false; g.n()];
    for &v in vs {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &s in vs {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            if co {
                for &y in vs {
                    if !seen[y] && y != x && !g.has_edge(x, y) {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            } else {
                for &y in g.neighbors(x) {
                    if inside[y] && !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// An induced path `a-b-c-d` or, with `want_cycle`, an induced 4-cycle inside `vs`.
fn find_p4_or_c4(g: &Graph, vs: &[usize], want_cycle: bool) -> Option<[usize; 4]> {
    let mut inside = vec![false; g.n()];
    for &v in vs {
        inside[v] = true;
    }
    for &b in vs {
        for &c in g.neighbors(b) {
            if !inside[c] {
                continue;
            }
            for &a in g.neighbors(b) {
                if !inside[a] || a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if !inside[d] || d == b || d == a || g.has_edge(d, b) {
                        continue;
                    }
                    if g.has_edge(a, d) == want_cycle {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

fn qt_rec(g: &Graph, vs: &[usize]) -> Result<Cotree, RecognizeError> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf(vs[0]));
    }
    let comps = parts(g, vs, false);
    if comps.len() > 1 {
        return comps.iter().map(|c| qt_rec(g, c)).collect::<Result<_, _>>().map(Cotree::Union);
    }
    let universal = vs.iter().copied().find(|&v| vs.iter().all(|&w| w == v || g.has_edge(v, w)));
    match universal {
        Some(v) => {
            let rest: Vec<usize> = vs.iter().copied().filter(|&w| w != v).collect();
            Ok(Cotree::Join(vec![Cotree::Leaf(v), qt_rec(g, &rest)?]))
        }
        None => {
            let (kind, w) = match find_p4_or_c4(g, vs, false) {
                Some(p) => ("P4", p),
                None => ("C4", find_p4_or_c4(g, vs, true).expect("connected graph without universal vertex")),
            };
            Err(RecognizeError::NotQuasiThreshold { kind, witness: w.to_vec() })
        }
    }
}

/// Cotree built from unions of components and joins with a universal vertex.
pub fn quasi_threshold_cotree(g: &Graph) -> Result<Cotree, RecognizeError> {
    if g.n() == 0 {
        return Ok(Cotree::Union(Vec::new()));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    qt_rec(g, &all)
}

fn cograph_rec(g: &Graph, vs: &[usize]) -> Result<Cotree, RecognizeError> {
    if vs.len() == 1 {
        return Ok(Cotree::Leaf(vs[0]));
    }
    let comps = parts(g, vs, false);
    if comps.len() > 1 {
        return comps.iter().map(|c| cograph_rec(g, c)).collect::<Result<_, _>>().map(Cotree::Union);
    }
    let co = parts(g, vs, true);
    if co.len() > 1 {
        return co.iter().map(|c| cograph_rec(g, c)).collect::<Result<_, _>>().map(Cotree::Join);
    }
    let p4 = find_p4_or_c4(g, vs, false).expect("connected and co-connected part contains a P4");
    Err(RecognizeError::NotCograph { p4 })
}

/// Canonical cotree: union children are connected, join children co-connected.
pub fn cograph_cotree(g: &Graph) -> Result<Cotree, RecognizeError> {
    if g.n() == 0 {
        return Ok(Cotree::Union(Vec::new()));
    }
    let all: Vec<usize> = (0..g.n()).collect();
    cograph_rec(g, &all)
}
