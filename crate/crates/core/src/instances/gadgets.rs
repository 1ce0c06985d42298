use crate::graph::Graph;

use super::InstanceError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    /// Forces `d(v_j) = j` in every proper `k`-orientation.
    S { k: usize },
    /// `S(k)` plus a head adjacent to `v_1, ..., v_{i-1}`.
    F { i: usize, k: usize },
    /// Two cliques on `k` vertices sharing one center.
    Z { k: usize },
}

/// Gadget description with its distinguished vertices (local ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMeta {
    pub kind: GadgetKind,
    pub n: usize,
    /// `v_0, ..., v_k` of the main clique (S and F only).
    pub spine: Vec<usize>,
    pub head: Option<usize>,
    pub center: Option<usize>,
}

/// Layout of `S(k)`: the spine is `0..=k`, then the private vertices of
/// `K^0, K^1, ..., K^{k-1}` in that order.
fn s_cliques(k: usize) -> Vec<Vec<usize>> {
    let mut next = k + 1;
    let mut cliques = vec![(0..=k).collect::<Vec<_>>()];
    for j in 0..k {
        let mut c = vec![j];
        c.extend(next..next + (k - j));
        next += k - j;
        cliques.push(c);
    }
    cliques
}

fn s_edges(k: usize) -> Vec<(usize, usize)> {
    let cliques = s_cliques(k);
    let mut e = Vec::new();
    for c in &cliques {
        for (i, &a) in c.iter().enumerate() {
            e.extend(c[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    // v_j sees all of K^l for j < l
    for j in 0..k.saturating_sub(1) {
        for c in &cliques[j + 2..] {
            e.extend(c[1..].iter().map(|&x| (j, x)));
        }
    }
    e
}

fn s_size(k: usize) -> usize {
    k + 1 + k * (k + 1) / 2
}

pub fn gen_s(k: usize) -> (Graph, GadgetMeta) {
    let n = s_size(k);
    let g = Graph::from_edges(n, s_edges(k)).expect("simple by construction");
    let meta = GadgetMeta { kind: GadgetKind::S { k }, n, spine: (0..=k).collect(), head: None, center: None };
    (g, meta)
}

pub fn gen_f(i: usize, k: usize) -> Result<(Graph, GadgetMeta), InstanceError> {
    if i < 2 || i > k {
        return Err(InstanceError::BadParams(format!("F(i, k) needs 2 <= i <= k, got i={i} k={k}")));
    }
    let head = s_size(k);
    let mut e = s_edges(k);
    e.extend((1..i).map(|j| (j, head)));
    let g = Graph::from_edges(head + 1, e).expect("simple by construction");
    let meta = GadgetMeta {
        kind: GadgetKind::F { i, k },
        n: head + 1,
        spine: (0..=k).collect(),
        head: Some(head),
        center: None,
    };
    Ok((g, meta))
}

pub fn gen_z(k: usize) -> Result<(Graph, GadgetMeta), InstanceError> {
    if k < 2 {
        return Err(InstanceError::BadParams(format!("Z(k) needs k >= 2, got {k}")));
    }
    let n = 2 * k - 1;
    let mut e = Vec::new();
    for c in z_cliques(k) {
        for (i, &a) in c.iter().enumerate() {
            e.extend(c[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    let meta = GadgetMeta { kind: GadgetKind::Z { k }, n, spine: Vec::new(), head: None, center: Some(0) };
    Ok((Graph::from_edges(n, e).expect("simple by construction"), meta))
}

fn z_cliques(k: usize) -> [Vec<usize>; 2] {
    let mut a = vec![0];
    a.extend(1..k);
    let mut b = vec![0];
    b.extend(k..2 * k - 1);
    [a, b]
}

/// Arcs of the canonical proper `k`-orientation of `S(k)` (local ids): each
/// clique is transitive, `v_j` sits at position `j` of the spine and is the
/// source of `K^j`, and cross edges leave the spine.
pub(crate) fn s_arcs(k: usize) -> Vec<(usize, usize)> {
    let cliques = s_cliques(k);
    let mut arcs = Vec::new();
    for c in &cliques {
        for (i, &a) in c.iter().enumerate() {
            arcs.extend(c[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    for j in 0..k.saturating_sub(1) {
        for c in &cliques[j + 2..] {
            arcs.extend(c[1..].iter().map(|&x| (j, x)));
        }
    }
    arcs
}

/// Canonical arcs of `F(i, k)` without the attaching edge: the head has
/// indegree `i - 1` from the spine.
pub(crate) fn f_arcs(i: usize, k: usize) -> Vec<(usize, usize)> {
    let head = s_size(k);
    let mut arcs = s_arcs(k);
    arcs.extend((1..i).map(|j| (j, head)));
    arcs
}

/// Canonical arcs of `Z(k)` with the center as a source.
pub(crate) fn z_arcs(k: usize) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for c in z_cliques(k) {
        for (i, &a) in c.iter().enumerate() {
            arcs.extend(c[i + 1..].iter().map(|&b| (a, b)));
        }
    }
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::enumerate_proper_k_orientations;
    use crate::orientation::{is_proper, max_indegree, Orientation};
    use crate::recognize::is_chordal;

    #[test]
    fn sizes() {
        assert_eq!(gen_s(0).0.n(), 1);
        assert_eq!(gen_s(4).0.n(), 15);
        assert_eq!(gen_z(2).unwrap().0, Graph::path(3).relabel(&[1, 0, 2]));
        assert_eq!(gen_z(3).unwrap().0.m(), 6);
        assert!(gen_f(5, 3).is_err());
        let (f, meta) = gen_f(2, 2).unwrap();
        assert_eq!(f.neighbors(meta.head.unwrap()), &[1]);
    }

    #[test]
    fn s_is_chordal() {
        for k in 0..=8 {
            assert!(is_chordal(&gen_s(k).0), "k={k}");
        }
    }

    #[test]
    fn canonical_orientations_are_proper() {
        for k in 1..=7 {
            let (g, meta) = gen_s(k);
            let d = Orientation::from_arcs(&g, s_arcs(k)).unwrap();
            assert!(is_proper(&g, &d));
            assert_eq!(max_indegree(&d), k);
            for (j, &v) in meta.spine.iter().enumerate() {
                assert_eq!(d.indegree(v), j);
            }
            let (z, _) = gen_z(k + 1).unwrap();
            let dz = Orientation::from_arcs(&z, z_arcs(k + 1)).unwrap();
            assert!(is_proper(&z, &dz));
            assert_eq!(dz.indegree(0), 0);
        }
    }

    /// Attaches a new vertex to `port` and returns the bigger graph.
    fn with_pendant(g: &Graph, port: usize) -> Graph {
        let mut e = g.edges().to_vec();
        e.push((port, g.n()));
        Graph::from_edges(g.n() + 1, e).unwrap()
    }

    #[test]
    fn s_forces_spine_indegrees() {
        for k in 1..=3 {
            let (g, meta) = gen_s(k);
            let all = enumerate_proper_k_orientations(&g, k, None).unwrap();
            assert!(!all.is_empty());
            for d in &all {
                for (j, &v) in meta.spine.iter().enumerate() {
                    assert_eq!(d.indegree(v), j, "k={k}");
                }
            }
        }
    }

    #[test]
    fn f_forces_head() {
        for (i, k) in [(2, 2), (2, 3), (3, 3)] {
            let (f, meta) = gen_f(i, k).unwrap();
            let head = meta.head.unwrap();
            let g = with_pendant(&f, head);
            let u = f.n();
            let all = enumerate_proper_k_orientations(&g, k, None).unwrap();
            assert!(!all.is_empty());
            for d in &all {
                assert_eq!(d.indegree(head), i);
                assert_eq!(d.indegree(u), 0, "the attaching edge points to the head");
            }
        }
    }

    #[test]
    fn z_center_is_source_or_full() {
        for k in 2..=4 {
            let (z, meta) = gen_z(k).unwrap();
            let s = meta.center.unwrap();
            let mut saw_full = false;
            for d in enumerate_proper_k_orientations(&z, k, None).unwrap() {
                assert!(d.indegree(s) == 0 || d.indegree(s) == k);
                saw_full |= d.indegree(s) == k;
            }
            assert!(saw_full);
        }
    }

    #[test]
    fn z_center_can_absorb_pendant_edge() {
        for k in 3..=4 {
            let (z, meta) = gen_z(k).unwrap();
            let s = meta.center.unwrap();
            let g = with_pendant(&z, s);
            let all = enumerate_proper_k_orientations(&g, k, None).unwrap();
            let inward: Vec<_> = all.iter().filter(|d| d.indegree(z.n()) == 0).collect();
            assert!(!inward.is_empty());
            assert!(inward.iter().all(|d| d.indegree(s) == k));
        }
    }
}
