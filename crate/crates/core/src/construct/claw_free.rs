use crate::graph::Graph;
use crate::recognize::{is_chordal, is_claw_free};

use super::ConstructError;

/// For a chordal claw-free graph returns `Δ`, after checking that every
/// neighborhood splits into at most three cliques and that `Δ <= 3ω`.
pub fn claw_free_chordal_bound(g: &Graph) -> Result<usize, ConstructError> {
    if !is_chordal(g) {
        return Err(ConstructError::NotApplicable("graph is not chordal"));
    }
    if !is_claw_free(g) {
        return Err(ConstructError::NotApplicable("graph contains a claw"));
    }
    for v in 0..g.n() {
        let cover = neighborhood_cover(g, v);
        if cover.len() > 3 || cover.iter().any(|c| !g.is_clique(c)) {
            return Err(ConstructError::HypothesisViolated("neighborhood is not covered by three cliques"));
        }
    }
    let delta = g.max_degree();
    if delta > 3 * g.clique_number() {
        return Err(ConstructError::HypothesisViolated("maximum degree exceeds three times the clique number"));
    }
    Ok(delta)
}

/// Splits `N(v)` around a non-adjacent pair `u, w`: the private common
/// neighbors of each, and the vertices seeing both.
fn neighborhood_cover(g: &Graph, v: usize) -> Vec<Vec<usize>> {
    let nv = g.neighbors(v);
    let pair =
        nv.iter().enumerate().find_map(|(i, &u)| nv[i + 1..].iter().find(|&&w| !g.has_edge(u, w)).map(|&w| (u, w)));
    let Some((u, w)) = pair else {
        return vec![nv.to_vec()];
    };
    let (mut cu, mut cw, mut both) = (vec![u], vec![w], Vec::new());
    for &z in nv.iter().filter(|&&z| z != u && z != w) {
        match (g.has_edge(z, u), g.has_edge(z, w)) {
            (true, false) => cu.push(z),
            (false, true) => cw.push(z),
            _ => both.push(z),
        }
    }
    [cu, cw, both].into_iter().filter(|c| !c.is_empty()).collect()
}
