//! Independent reference implementations used as test oracles. Nothing here
//! calls the solver or the recognizers of the library.
#![allow(dead_code)]

use orientkit::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Indegrees for the orientation encoded by `mask`: bit `e` set means edge
/// `e` points to its larger endpoint.
fn indegrees(n: usize, edges: &[(usize, usize)], mask: u64) -> Vec<usize> {
    let mut ind = vec![0; n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        if mask >> e & 1 == 1 {
            ind[a.max(b)] += 1;
        } else {
            ind[a.min(b)] += 1;
        }
    }
    ind
}

/// Proper orientation number by trying all `2^m` orientations.
pub fn brute_chi(g: &Graph) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 20, "brute force is limited to 20 edges");
    let mut best = usize::MAX;
    for mask in 0..1u64 << edges.len() {
        let ind = indegrees(g.n(), edges, mask);
        if edges.iter().all(|&(a, b)| ind[a] != ind[b]) {
            best = best.min(ind.iter().copied().max().unwrap_or(0));
        }
    }
    best
}

/// Largest clique by checking every vertex subset.
pub fn brute_omega(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = 0;
    for mask in 0u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() > best && vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b))) {
            best = vs.len();
        }
    }
    best
}

/// Chordality by repeatedly deleting any simplicial vertex.
pub fn greedy_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut alive = vec![true; n];
    for _ in 0..n {
        let simplicial = (0..n).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
                nb.iter().enumerate().all(|(i, &a)| nb[i + 1..].iter().all(|&b| g.has_edge(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Some vertex subset induces the path `a - b - c - d`.
pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for &b in g.neighbors(a) {
            for &c in g.neighbors(b) {
                if c == a || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && !g.has_edge(b, d) && !g.has_edge(a, d) && d != a {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                e.push((a, b));
            }
        }
    }
    Graph::from_edges(n, e).unwrap()
}

/// Random graph on `n` vertices with exactly `min(m, n(n-1)/2)` edges.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    all.shuffle(&mut rng);
    all.truncate(m);
    Graph::from_edges(n, all).unwrap()
}

pub fn k33() -> Graph {
    Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
}
