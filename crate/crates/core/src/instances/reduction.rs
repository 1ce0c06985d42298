use crate::graph::Graph;
use crate::orientation::Orientation;

use super::gadgets::{f_arcs, gen_f, gen_z, z_arcs, GadgetKind, GadgetMeta};
use super::InstanceError;

/// A gadget copy inside a larger graph: local vertex `x` is `offset + x`,
/// and the gadget hangs off `attach` by a single edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlacedGadget {
    pub meta: GadgetMeta,
    pub offset: usize,
    pub attach: usize,
}

impl PlacedGadget {
    /// Vertex of the gadget adjacent to `attach`.
    pub fn port(&self) -> usize {
        self.offset + self.meta.head.or(self.meta.center).expect("gadget has a port")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    /// Clique vertex standing for an input vertex.
    Clique {
        input: usize,
    },
    /// Independent vertex standing for an input edge.
    Edge {
        input: (usize, usize),
    },
    Gadget {
        index: usize,
        local: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub k: usize,
    pub k_prime: usize,
    pub input: Graph,
    /// Clique vertices; `clique[v]` stands for input vertex `v`.
    pub clique: Vec<usize>,
    /// `independent[j]` stands for input edge `input.edges()[j]`.
    pub independent: Vec<usize>,
    pub gadgets: Vec<PlacedGadget>,
    pub roles: Vec<VertexRole>,
}

/// Builds `(G', k')` with `k' = |V(G)| + 2` such that `G'` has a proper
/// `k'`-orientation iff the cubic graph `G` has a vertex cover of size `k`.
pub fn reduce_vertex_cover(g: &Graph, k: usize) -> Result<ReductionOutput, InstanceError> {
    let n = g.n();
    if n == 0 || (0..n).any(|v| g.degree(v) != 3) {
        return Err(InstanceError::NotCubic);
    }
    if !g.is_connected() {
        return Err(InstanceError::NotConnected);
    }
    if k < 3 {
        return Err(InstanceError::BadK { k, reason: "the gadget F(k-1, k') needs k >= 3" });
    }
    if k > n {
        return Err(InstanceError::BadK { k, reason: "k exceeds the number of vertices" });
    }
    let kp = n + 2;
    let m = g.m();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut roles: Vec<VertexRole> = (0..n).map(|v| VertexRole::Clique { input: v }).collect();
    for a in 0..n {
        edges.extend((a + 1..n).map(|b| (a, b)));
    }
    for (j, &(a, b)) in g.edges().iter().enumerate() {
        edges.extend([(a, n + j), (b, n + j)]);
        roles.push(VertexRole::Edge { input: (a, b) });
    }
    let mut gadgets = Vec::new();
    let mut next = n + m;
    let mut place = |graph: Graph,
                     meta: GadgetMeta,
                     attach: usize,
                     edges: &mut Vec<(usize, usize)>,
                     roles: &mut Vec<VertexRole>| {
        let placed = PlacedGadget { meta, offset: next, attach };
        edges.extend(graph.edges().iter().map(|&(a, b)| (a + next, b + next)));
        edges.push((attach, placed.port()));
        roles.extend((0..graph.n()).map(|local| VertexRole::Gadget { index: gadgets.len(), local }));
        next += graph.n();
        gadgets.push(placed);
    };
    for v in 0..n {
        for i in [k, k + 1] {
            let (f, meta) = gen_f(i, kp)?;
            place(f, meta, v, &mut edges, &mut roles);
        }
    }
    for j in 0..m {
        let u = n + j;
        let (f, meta) = gen_f(k - 1, kp)?;
        place(f, meta, u, &mut edges, &mut roles);
        for _ in 0..k - 1 {
            let (z, meta) = gen_z(kp)?;
            place(z, meta, u, &mut edges, &mut roles);
        }
    }
    let graph = Graph::from_edges(next, edges).expect("reduction edges are simple");
    Ok(ReductionOutput {
        graph,
        k,
        k_prime: kp,
        input: g.clone(),
        clique: (0..n).collect(),
        independent: (n..n + m).collect(),
        gadgets,
        roles,
    })
}

/// Proper `k'`-orientation of `G'` from a vertex cover of the input graph,
/// padded with the smallest remaining vertices to size exactly `k`.
pub fn build_vc_certificate(red: &ReductionOutput, cover: &[usize]) -> Result<Orientation, InstanceError> {
    let n = red.input.n();
    let mut in_s = vec![false; n];
    for &v in cover {
        if v >= n {
            return Err(InstanceError::NotACover);
        }
        in_s[v] = true;
    }
    let covered = red.input.edges().iter().all(|&(a, b)| in_s[a] || in_s[b]);
    if !covered || in_s.iter().filter(|&&x| x).count() > red.k {
        return Err(InstanceError::NotACover);
    }
    let mut missing = red.k - in_s.iter().filter(|&&x| x).count();
    for x in in_s.iter_mut() {
        if missing > 0 && !*x {
            *x = true;
            missing -= 1;
        }
    }
    // S first, then the rest, each by id; the clique is transitive in that order
    let mut order: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
    order.extend((0..n).filter(|&v| !in_s[v]));
    let mut arcs = Vec::new();
    for (i, &a) in order.iter().enumerate() {
        arcs.extend(order[i + 1..].iter().map(|&b| (red.clique[a], red.clique[b])));
    }
    for (j, &(a, b)) in red.input.edges().iter().enumerate() {
        let u = red.independent[j];
        for x in [a, b] {
            arcs.push(if in_s[x] { (red.clique[x], u) } else { (u, red.clique[x]) });
        }
    }
    for pg in &red.gadgets {
        let shift = |(a, b): (usize, usize)| (a + pg.offset, b + pg.offset);
        match pg.meta.kind {
            GadgetKind::F { i, k } => {
                arcs.extend(f_arcs(i, k).into_iter().map(shift));
                arcs.push((pg.attach, pg.port()));
            }
            GadgetKind::Z { k } => {
                arcs.extend(z_arcs(k).into_iter().map(shift));
                arcs.push((pg.port(), pg.attach));
            }
            GadgetKind::S { .. } => unreachable!("the reduction places no bare S gadgets"),
        }
    }
    Ok(Orientation::from_arcs(&red.graph, arcs).expect("certificate covers every edge once"))
}
