use std::collections::VecDeque;

use crate::graph::Graph;

use super::RecognizeError;

/// Lex-BFS visiting order, ties broken by smallest vertex id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    let mut mark = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(v);
        for &w in g.neighbors(v) {
            mark[w] = true;
        }
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&x| mark[x]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
        for &w in g.neighbors(v) {
            mark[w] = false;
        }
    }
    order
}

/// Checks that `order` is a perfect elimination ordering: the neighbors of each
/// vertex appearing later in the order form a clique. On failure returns a
/// vertex together with two non-adjacent later neighbors of it.
pub fn check_peo(g: &Graph, order: &[usize]) -> Result<(), (usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != p && !g.has_edge(p, w)) {
            return Err((v, p, w));
        }
    }
    Ok(())
}

fn is_permutation(order: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    order.len() == n && order.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}

/// Shortest `a`-`b` path avoiding `N[v]` except `a` and `b`, closed through `v`
/// into a chordless cycle.
fn cycle_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = w != a && w != b;
    }
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[b] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut x = b;
    while x != a {
        cycle.push(x);
        x = prev[x];
    }
    cycle.push(a);
    Some(cycle)
}

/// Searches every vertex and every non-adjacent pair of its neighbors.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = cycle_through(g, v, a, b) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// A perfect elimination ordering, or a chordless cycle of length at least 4.
pub fn chordal_peo(g: &Graph) -> Result<Vec<usize>, RecognizeError> {
    let mut order = lex_bfs(g);
    order.reverse();
    match check_peo(g, &order) {
        Ok(()) => Ok(order),
        Err((v, a, b)) => {
            let cycle = cycle_through(g, v, a, b)
                .or_else(|| find_chordless_cycle(g))
                .expect("a failed elimination ordering implies a chordless cycle");
            Err(RecognizeError::NotChordal { cycle })
        }
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordal_peo(g).is_ok()
}

/// Clique number of a chordal graph from a perfect elimination ordering.
pub fn clique_number_chordal(g: &Graph, peo: &[usize]) -> Result<usize, RecognizeError> {
    if !is_permutation(peo, g.n()) || check_peo(g, peo).is_err() {
        return Err(RecognizeError::InvalidPeo);
    }
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    Ok(peo.iter().map(|&v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count() + 1).max().unwrap_or(0))
}

/// True iff `cycle` is a chordless cycle of length at least 4 in `g`.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            g.has_edge(cycle[i], cycle[j]) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_is_not_chordal() {
        match chordal_peo(&Graph::cycle(4)) {
            Err(RecognizeError::NotChordal { cycle }) => {
                assert!(is_chordless_cycle(&Graph::cycle(4), &cycle));
                assert_eq!(cycle.len(), 4);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complete_graph_any_order() {
        let g = Graph::complete(4);
        let peo = chordal_peo(&g).unwrap();
        assert_eq!(clique_number_chordal(&g, &peo).unwrap(), 4);
        assert_eq!(clique_number_chordal(&g, &[3, 1, 0, 2]).unwrap(), 4);
    }

    #[test]
    fn tree_has_clique_number_two() {
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (4, 5)]).unwrap();
        let peo = chordal_peo(&g).unwrap();
        assert_eq!(clique_number_chordal(&g, &peo).unwrap(), 2);
    }

    #[test]
    fn invalid_peo_rejected() {
        let g = Graph::path(3);
        // the middle vertex first: its later neighbors 0 and 2 are not adjacent
        assert_eq!(clique_number_chordal(&g, &[1, 0, 2]), Err(RecognizeError::InvalidPeo));
        assert_eq!(clique_number_chordal(&g, &[0, 1]), Err(RecognizeError::InvalidPeo));
    }

    #[test]
    fn long_cycle_with_pendant() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6)]).unwrap();
        let Err(RecognizeError::NotChordal { cycle }) = chordal_peo(&g) else { panic!("C_6 is not chordal") };
        assert!(is_chordless_cycle(&g, &cycle));
    }
}
