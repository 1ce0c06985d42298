use crate::graph::Graph;
use crate::orientation::{is_proper, max_indegree, Orientation};
use crate::recognize::BlockCutTree;

use super::path_block::transitive_order;
use super::ConstructError;

/// Proper `(k + 1)`-orientation of a connected `k`-uniform block graph whose
/// blocks hold at most two cut vertices. Every block gets a transitive
/// orientation and every cut vertex ends with indegree 0, `k` or `k + 1`.
pub fn two_cut_block_orient(g: &Graph, bct: &BlockCutTree, k: usize) -> Result<Orientation, ConstructError> {
    if k < 3 {
        return Err(ConstructError::UnsupportedK(k));
    }
    if !g.is_connected() || !bct.is_k_uniform(g, k) {
        return Err(ConstructError::NotUniformBlock);
    }
    if bct.max_cut_vertices_per_block() > 2 {
        return Err(ConstructError::BadShape("a block holds more than two cut vertices"));
    }
    let cuts_in = |b: usize| bct.blocks[b].iter().copied().filter(|&v| bct.is_cut(v)).collect::<Vec<_>>();
    let root = (0..bct.blocks.len()).find(|&b| cuts_in(b).len() <= 1).expect("a leaf block exists");
    let tree = bct.rooted(root);
    let mut orders: Vec<Vec<usize>> = vec![Vec::new(); bct.blocks.len()];
    let mut arcs = Vec::new();
    for &b in &tree.order {
        let block = &bct.blocks[b];
        let mut fixed = Vec::new();
        match tree.parent_cut[b] {
            None => {
                if let Some(&r) = cuts_in(b).first() {
                    fixed.push((r, 0));
                }
            }
            Some(x) => {
                let parent = tree.parent_block[x].expect("cut vertex below the root");
                let a = orders[parent].iter().position(|&v| v == x).expect("x in parent");
                let leftmost = tree.child_blocks[x][0] == b;
                let other = tree.child_cuts[b].first().copied();
                if leftmost && a >= 1 {
                    fixed.push((x, k - 1));
                    if let Some(y) = other {
                        fixed.push((y, 0));
                    }
                } else {
                    fixed.push((x, 0));
                    if let Some(y) = other {
                        fixed.push((y, if a == 1 { 2 } else { 1 }));
                    }
                }
            }
        }
        let order = transitive_order(block, &fixed);
        for (i, &a) in order.iter().enumerate() {
            arcs.extend(order[i + 1..].iter().map(|&b| (a, b)));
        }
        orders[b] = order;
    }
    let d = Orientation::from_arcs(g, arcs)?;
    if !is_proper(g, &d) || max_indegree(&d) > k + 1 {
        return Err(ConstructError::HypothesisViolated("two-cut assembly is not a proper (k+1)-orientation"));
    }
    Ok(d)
}
