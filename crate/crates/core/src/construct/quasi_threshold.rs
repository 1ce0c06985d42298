use crate::graph::Graph;
use crate::orientation::{Orientation, PartialOrientation};
use crate::recognize::Cotree;

use super::ConstructError;

/// Proper `(ω - 1)`-orientation of a quasi-threshold graph: at every join
/// `v ∧ H` all edges point from `v` into `H`.
pub fn quasi_threshold_orient(g: &Graph, tree: &Cotree) -> Result<Orientation, ConstructError> {
    if !tree.is_quasi_threshold_form() {
        return Err(ConstructError::BadShape("cotree is not in quasi-threshold form"));
    }
    let mut p = PartialOrientation::new(g);
    let mut stack = vec![tree];
    while let Some(t) = stack.pop() {
        match t {
            Cotree::Leaf(_) => {}
            Cotree::Union(ch) => stack.extend(ch.iter()),
            Cotree::Join(ch) => {
                let Cotree::Leaf(v) = ch[0] else { unreachable!() };
                for w in ch[1].vertices() {
                    if !g.has_edge(v, w) {
                        return Err(ConstructError::BadShape("cotree does not match the graph"));
                    }
                    p.orient(g, v, w)?;
                }
                stack.push(&ch[1]);
            }
        }
    }
    if !p.is_complete() {
        return Err(ConstructError::BadShape("cotree does not match the graph"));
    }
    Ok(p.into_orientation()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::disjoint_union;
    use crate::orientation::{is_proper, max_indegree};
    use crate::recognize::quasi_threshold_cotree;

    fn run(g: &Graph) -> Orientation {
        let d = quasi_threshold_orient(g, &quasi_threshold_cotree(g).unwrap()).unwrap();
        assert!(is_proper(g, &d));
        d
    }

    #[test]
    fn single_vertex_and_clique() {
        assert_eq!(max_indegree(&run(&Graph::empty(1))), 0);
        assert_eq!(max_indegree(&run(&Graph::complete(4))), 3);
    }

    #[test]
    fn union_takes_the_max() {
        let g = disjoint_union(&Graph::complete(3), &Graph::complete(2));
        assert_eq!(max_indegree(&run(&g)), 2);
    }

    #[test]
    fn star_has_value_one() {
        assert_eq!(max_indegree(&run(&Graph::star(5))), 1);
    }
}
