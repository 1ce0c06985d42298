use std::collections::BTreeMap;

use crate::graph::Graph;

/// No induced `K_{1,3}`.
pub fn is_claw_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| {
        let nb = g.neighbors(v);
        nb.iter().enumerate().all(|(i, &a)| {
            nb[i + 1..].iter().enumerate().all(|(j, &b)| {
                g.has_edge(a, b) || nb[i + j + 2..].iter().all(|&c| g.has_edge(a, c) || g.has_edge(b, c))
            })
        })
    })
}

/// Groups the vertices of `s` by identical open neighborhoods. Classes are
/// sorted internally and ordered by their smallest member.
pub fn twin_partition(g: &Graph, s: &[usize]) -> Vec<Vec<usize>> {
    let mut by_nb: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for &v in s {
        by_nb.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_nb
        .into_values()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    classes.sort();
    classes
}

/// Two cliques covering `V` if the complement is bipartite.
pub fn cobipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in 0..n {
                if y == x || g.has_edge(x, y) {
                    continue;
                }
                if side[y] == u8::MAX {
                    side[y] = 1 - side[x];
                    stack.push(y);
                } else if side[y] == side[x] {
                    return None;
                }
            }
        }
    }
    let a = (0..n).filter(|&v| side[v] == 0).collect();
    let b = (0..n).filter(|&v| side[v] == 1).collect();
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw() {
        assert!(!is_claw_free(&Graph::star(3)));
        assert!(is_claw_free(&Graph::complete(5)));
        assert!(is_claw_free(&Graph::path(5)));
    }

    #[test]
    fn twins_in_split_graph() {
        // triangle 0-1-2 with stable vertices 3, 4 both adjacent to 0 and 1
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 1)]).unwrap();
        assert_eq!(twin_partition(&g, &[3, 4]), vec![vec![3, 4]]);
    }

    #[test]
    fn cobipartite() {
        let (a, b) = cobipartition(&Graph::cycle(4)).unwrap();
        assert_eq!(a.len() + b.len(), 4);
        assert!(cobipartition(&Graph::empty(3)).is_none());
    }
}
