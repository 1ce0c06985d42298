use crate::graph::Graph;
use crate::orientation::{Orientation, PartialOrientation};
use crate::recognize::SplitPartition;

use super::extend::potential_rule;
use super::ConstructError;

/// Proper `(2ω - 2)`-orientation of a split graph with maximal clique `K`.
pub fn split_orient(g: &Graph, part: &SplitPartition) -> Result<Orientation, ConstructError> {
    if !part.is_valid(g) {
        return Err(ConstructError::Recognize(crate::recognize::RecognizeError::NotSplit));
    }
    let w = part.k.len();
    let n = g.n();
    let mut in_i = vec![false; n];
    for &v in &part.i {
        in_i[v] = true;
    }
    let kh: Vec<usize> = part.k.iter().copied().filter(|&v| g.degree(v) + 2 >= 2 * w).collect();
    let h = kh.len();
    let mut in_kh = vec![false; n];
    for &v in &kh {
        in_kh[v] = true;
    }
    let mut p = PartialOrientation::new(g);
    for &v in part.k.iter().filter(|&&v| !in_kh[v]) {
        for &x in &kh {
            p.orient(g, v, x)?;
        }
    }
    for (i, &vi) in kh.iter().enumerate() {
        if i > 0 || h < w {
            for &x in g.neighbors(vi).iter().filter(|&&x| in_i[x]).take(w - 1) {
                p.orient(g, x, vi)?;
            }
        }
        for &vj in &kh[..i] {
            p.orient(g, vj, vi)?;
        }
    }
    if h == w {
        for &vi in &kh {
            for &x in g.neighbors(vi) {
                if in_i[x] && p.head(g, vi, x).is_none() {
                    p.orient(g, vi, x)?;
                }
            }
        }
    }
    // Ordering the rest so that each vertex has maximum degree among the
    // remaining unoriented edges is the potential rule.
    potential_rule(g, &mut p, |v| !in_kh[v])?;
    Ok(p.into_orientation()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orientation::{is_proper, max_indegree};
    use crate::recognize::split_partition;

    fn run(g: &Graph) -> Orientation {
        let part = split_partition(g).unwrap();
        let d = split_orient(g, &part).unwrap();
        assert!(is_proper(g, &d));
        assert!(max_indegree(&d) <= (2 * part.k.len()).saturating_sub(2));
        d
    }

    #[test]
    fn clique_is_transitive() {
        assert_eq!(max_indegree(&run(&Graph::complete(5))), 4);
    }

    #[test]
    fn edgeless_and_star() {
        assert_eq!(max_indegree(&run(&Graph::empty(3))), 0);
        run(&Graph::star(6));
    }

    #[test]
    fn all_clique_vertices_heavy() {
        // K_3 where every clique vertex has three private pendants
        let mut e = vec![(0, 1), (0, 2), (1, 2)];
        for v in 0..3 {
            for j in 0..3 {
                e.push((v, 3 + 3 * v + j));
            }
        }
        run(&Graph::from_edges(12, e).unwrap());
    }

    #[test]
    fn rejects_bad_partition() {
        let g = Graph::complete(3);
        let bad = SplitPartition { k: vec![0, 1], i: vec![2] };
        assert!(split_orient(&g, &bad).is_err());
    }
}
