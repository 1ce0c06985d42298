use std::collections::HashMap;

use crate::graph::Graph;

use super::RecognizeError;

/// Inner faces of a maximal outerplane graph in weak-dual path order, plus the
/// Hamiltonian outer cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleStrip {
    /// Consecutive triangles share exactly one edge. Each triangle is sorted.
    pub triangles: Vec<[usize; 3]>,
    pub outer_cycle: Vec<usize>,
}

impl TriangleStrip {
    /// Checks the strip against `g`: triangles cover every edge, consecutive
    /// ones share an edge, and no other pair does.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.triangles.len() + 2 != g.n() || g.m() != 2 * g.n() - 3 {
            return false;
        }
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &self.triangles {
            for (a, b) in tri_edges(t) {
                if !g.has_edge(a, b) {
                    return false;
                }
                *count.entry((a, b)).or_default() += 1;
            }
        }
        if count.len() != g.m() || count.values().any(|&c| c > 2) {
            return false;
        }
        let shared = |x: &[usize; 3], y: &[usize; 3]| x.iter().filter(|v| y.contains(v)).count() == 2;
        let t = &self.triangles;
        (0..t.len()).all(|i| (i + 1..t.len()).all(|j| shared(&t[i], &t[j]) == (j == i + 1)))
    }
}

fn tri_edges(t: &[usize; 3]) -> [(usize, usize); 3] {
    [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
}

/// Recognizes maximal outerplanar graphs whose weak dual is a path by peeling
/// degree-2 ears down to a single edge.
pub fn maximal_outerplane_weak_dual(g: &Graph) -> Result<TriangleStrip, RecognizeError> {
    let n = g.n();
    if n < 3 {
        return Err(RecognizeError::NotStrip("fewer than three vertices"));
    }
    if g.m() != 2 * n - 3 {
        return Err(RecognizeError::NotStrip("edge count differs from 2n-3"));
    }
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] == 2).collect();
    let mut triangles = Vec::with_capacity(n - 2);
    let mut remaining = n;
    while remaining > 2 {
        let Some(v) = queue.pop() else {
            return Err(RecognizeError::NotStrip("not a 2-tree"));
        };
        if !alive[v] || deg[v] != 2 {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| alive[w]).collect();
        let (a, b) = (nb[0], nb[1]);
        if !g.has_edge(a, b) {
            return Err(RecognizeError::NotStrip("ear neighbors not adjacent"));
        }
        let mut t = [v, a, b];
        t.sort_unstable();
        triangles.push(t);
        alive[v] = false;
        remaining -= 1;
        for w in [a, b] {
            deg[w] -= 1;
            if deg[w] == 2 {
                queue.push(w);
            }
        }
    }
    let mut on_edge: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, t) in triangles.iter().enumerate() {
        for e in tri_edges(t) {
            on_edge.entry(e).or_default().push(i);
        }
    }
    if on_edge.values().any(|ts| ts.len() > 2) {
        return Err(RecognizeError::NotStrip("an edge lies on three triangles"));
    }
    let t = triangles.len();
    let mut dual = vec![Vec::new(); t];
    for ts in on_edge.values() {
        if let [x, y] = ts[..] {
            dual[x].push(y);
            dual[y].push(x);
        }
    }
    if dual.iter().any(|d| d.len() > 2) {
        return Err(RecognizeError::NotStrip("weak dual is not a path"));
    }
    let start = (0..t).find(|&i| dual[i].len() <= 1).expect("a tree has a leaf");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = dual[cur].iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    let triangles: Vec<[usize; 3]> = order.into_iter().map(|i| triangles[i]).collect();

    let mut ring = vec![Vec::new(); n];
    for (&(a, b), ts) in &on_edge {
        if ts.len() == 1 {
            ring[a].push(b);
            ring[b].push(a);
        }
    }
    let mut outer_cycle = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    for _ in 1..n {
        let next = *ring[cur].iter().filter(|&&x| x != prev).min().expect("outer cycle");
        outer_cycle.push(next);
        prev = cur;
        cur = next;
    }
    Ok(TriangleStrip { triangles, outer_cycle })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fan(n: usize) -> Graph {
        let mut e: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        e.extend((1..n - 1).map(|i| (i, i + 1)));
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn fan_on_six_vertices() {
        let g = fan(6);
        let s = maximal_outerplane_weak_dual(&g).unwrap();
        assert_eq!(s.triangles.len(), 4);
        assert!(s.is_valid_for(&g));
        let mut c = s.outer_cycle.clone();
        c.sort_unstable();
        assert_eq!(c, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_k4_and_octahedron() {
        assert!(maximal_outerplane_weak_dual(&Graph::complete(4)).is_err());
        let matching = [(0, 1), (2, 3), (4, 5)];
        let edges = Graph::complete(6).edges().iter().copied().filter(|e| !matching.contains(e)).collect::<Vec<_>>();
        let oct = Graph::from_edges(6, edges).unwrap();
        assert_eq!(oct.m(), 12);
        assert!(maximal_outerplane_weak_dual(&oct).is_err());
    }

    #[test]
    fn three_triangles_on_one_edge() {
        // K_2 joined with three independent vertices: a 2-tree but not outerplanar
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)]).unwrap();
        assert_eq!(maximal_outerplane_weak_dual(&g), Err(RecognizeError::NotStrip("an edge lies on three triangles")));
    }

    #[test]
    fn single_triangle() {
        let s = maximal_outerplane_weak_dual(&Graph::complete(3)).unwrap();
        assert_eq!(s.triangles, vec![[0, 1, 2]]);
    }
}
