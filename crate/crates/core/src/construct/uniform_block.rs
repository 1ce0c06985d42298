use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::orientation::{is_proper, max_indegree, Orientation, PartialOrientation};
use crate::recognize::{BlockCutTree, RootedBlockCutTree};

use super::extend::{extend_partial_from, source_orientation};
use super::path_block::{compensated_arcs, transitive_order, union_graph};
use super::ConstructError;

/// A chain of blocks hanging from a cut vertex, listed outward.
type Chain = Vec<Vec<usize>>;

#[derive(Debug, Clone)]
enum Child {
    Path(Chain),
    /// A block whose other cut vertices each carry one or two chains.
    Cross {
        block: Vec<usize>,
        cuts: Vec<(usize, Vec<Chain>)>,
    },
}

#[derive(Debug, Clone)]
struct Peel {
    u: usize,
    children: Vec<Child>,
}

/// Proper `(3k - 2)`-orientation of a connected `k`-uniform block graph.
///
/// Subtrees are peeled bottom-up (path connectors with three or more chains
/// first, then the deepest cluster cut vertex) until only a graph of maximum
/// degree at most `3k - 3` remains. That core is oriented directly and the
/// peeled pieces are glued back in reverse order, each time choosing a new
/// indegree for the cut vertex that avoids its current neighbors.
pub fn uniform_block_orient(g: &Graph, bct: &BlockCutTree, k: usize) -> Result<Orientation, ConstructError> {
    if k < 3 {
        return Err(ConstructError::UnsupportedK(k));
    }
    if g.n() == 0 || !g.is_connected() || !bct.is_k_uniform(g, k) {
        return Err(ConstructError::NotUniformBlock);
    }
    let tree = bct.rooted(0);
    let mut state = Peeler { bct, tree: &tree, alive: vec![true; bct.blocks.len()] };
    let mut peels = Vec::new();
    while let Some(p) = state.next_peel() {
        peels.push(p);
    }

    let core: Vec<Vec<usize>> =
        (0..bct.blocks.len()).filter(|&b| state.alive[b]).map(|b| bct.blocks[b].clone()).collect();
    let (sub, map) = union_graph(&core);
    let dcore = extend_partial_from(&sub, &[], PartialOrientation::new(&sub))?;
    let mut glue = Glue { g, k, indeg: vec![0; g.n()], present: vec![false; g.n()], arcs: Vec::new() };
    for &v in &map {
        glue.present[v] = true;
    }
    glue.add(dcore.arcs(&sub).map(|(a, b)| (map[a], map[b])));
    for p in peels.iter().rev() {
        glue.apply(p)?;
    }
    let d = Orientation::from_arcs(g, glue.arcs)?;
    if !is_proper(g, &d) || max_indegree(&d) > 3 * k - 2 {
        return Err(ConstructError::HypothesisViolated("block assembly is not a proper (3k-2)-orientation"));
    }
    Ok(d)
}

struct Peeler<'a> {
    bct: &'a BlockCutTree,
    tree: &'a RootedBlockCutTree,
    alive: Vec<bool>,
}

impl Peeler<'_> {
    fn kids(&self, v: usize) -> Vec<usize> {
        self.tree.child_blocks[v].iter().copied().filter(|&b| self.alive[b]).collect()
    }

    fn cuts(&self, b: usize) -> Vec<usize> {
        self.tree.child_cuts[b].iter().copied().filter(|&v| !self.kids(v).is_empty()).collect()
    }

    fn path_flags(&self) -> Vec<bool> {
        let mut path = vec![false; self.bct.blocks.len()];
        for &b in self.tree.order.iter().rev().filter(|&&b| self.alive[b]) {
            let cuts = self.cuts(b);
            path[b] = match cuts.as_slice() {
                [] => true,
                [w] => matches!(self.kids(*w).as_slice(), [c] if path[*c]),
                _ => false,
            };
        }
        path
    }

    fn chain(&self, mut b: usize) -> Chain {
        let mut out = vec![self.bct.blocks[b].clone()];
        while let Some(&w) = self.cuts(b).first() {
            b = self.kids(w)[0];
            out.push(self.bct.blocks[b].clone());
        }
        out
    }

    fn kill_below(&mut self, u: usize) {
        let mut stack = self.kids(u);
        while let Some(b) = stack.pop() {
            for w in self.cuts(b) {
                stack.extend(self.kids(w));
            }
            self.alive[b] = false;
        }
    }

    fn next_peel(&mut self) -> Option<Peel> {
        let path = self.path_flags();
        let is_pc = |u: usize| self.kids(u).iter().all(|&c| path[c]);
        let mut cluster = None;
        for &b in self.tree.order.iter().rev().filter(|&&b| self.alive[b]) {
            for u in self.cuts(b) {
                if is_pc(u) && self.kids(u).len() >= 3 {
                    return Some(self.peel(u, &path));
                }
                if !is_pc(u) && cluster.is_none() {
                    cluster = Some(u);
                }
            }
        }
        cluster.map(|u| self.peel(u, &path))
    }

    fn peel(&mut self, u: usize, path: &[bool]) -> Peel {
        let children = self
            .kids(u)
            .into_iter()
            .map(|c| {
                if path[c] {
                    Child::Path(self.chain(c))
                } else {
                    let cuts = self
                        .cuts(c)
                        .into_iter()
                        .map(|w| (w, self.kids(w).into_iter().map(|x| self.chain(x)).collect()))
                        .collect();
                    Child::Cross { block: self.bct.blocks[c].clone(), cuts }
                }
            })
            .collect();
        self.kill_below(u);
        Peel { u, children }
    }
}

/// How one child is attached for a given color `t` of `u` and indegree `b`
/// that `u` receives from it.
enum Plan {
    Path,
    Cross { order: Vec<usize>, targets: Vec<usize> },
}

struct Glue<'a> {
    g: &'a Graph,
    k: usize,
    indeg: Vec<usize>,
    present: Vec<bool>,
    arcs: Vec<(usize, usize)>,
}

impl Glue<'_> {
    fn add<I: IntoIterator<Item = (usize, usize)>>(&mut self, arcs: I) {
        for (a, b) in arcs {
            self.indeg[b] += 1;
            self.present[a] = true;
            self.present[b] = true;
            self.arcs.push((a, b));
        }
    }

    fn apply(&mut self, p: &Peel) -> Result<(), ConstructError> {
        let k = self.k;
        let e = self.indeg[p.u];
        let forbidden: BTreeSet<usize> =
            self.g.neighbors(p.u).iter().filter(|&&x| self.present[x]).map(|&x| self.indeg[x]).collect();
        for t in (e..=3 * k - 2).filter(|t| !forbidden.contains(t)) {
            let options: Vec<Vec<usize>> =
                p.children.iter().map(|c| (0..k).filter(|&b| plan(k, p.u, c, t, b).is_some()).collect()).collect();
            if let Some(bs) = split_sum(&options, t - e, k) {
                for (c, &b) in p.children.iter().zip(&bs) {
                    let plan = plan(k, p.u, c, t, b).expect("feasible");
                    self.attach(p.u, c, t, b, plan)?;
                }
                return Ok(());
            }
        }
        Err(ConstructError::HypothesisViolated("no indegree extends the peeled subtree"))
    }

    fn attach(&mut self, u: usize, c: &Child, t: usize, b: usize, plan: Plan) -> Result<(), ConstructError> {
        let mut arcs = Vec::new();
        match (c, plan) {
            (Child::Path(chain), Plan::Path) => chain_arcs(chain, u, t, b, &mut arcs)?,
            (Child::Cross { cuts, .. }, Plan::Cross { order, targets }) => {
                for (i, &a) in order.iter().enumerate() {
                    arcs.extend(order[i + 1..].iter().map(|&x| (a, x)));
                }
                for ((w, chains), &tw) in cuts.iter().zip(&targets) {
                    let pos = order.iter().position(|x| x == w).expect("cut vertex in block");
                    let mut rest = tw - pos;
                    for ch in chains {
                        let d = rest.min(self.k - 1);
                        rest -= d;
                        chain_arcs(ch, *w, tw, d, &mut arcs)?;
                    }
                }
            }
            _ => unreachable!(),
        }
        self.add(arcs);
        Ok(())
    }
}

/// Compensated orientation of a chain hanging from `u`; a source orientation
/// when `u` keeps color zero.
fn chain_arcs(
    chain: &Chain,
    u: usize,
    c: usize,
    d: usize,
    out: &mut Vec<(usize, usize)>,
) -> Result<(), ConstructError> {
    if c == 0 {
        let (sub, map) = union_graph(chain);
        let local = map.binary_search(&u).expect("u in chain");
        let ds = source_orientation(&sub, local)?;
        out.extend(ds.arcs(&sub).map(|(a, b)| (map[a], map[b])));
        return Ok(());
    }
    let rev: Vec<Vec<usize>> = chain.iter().rev().cloned().collect();
    compensated_arcs(&rev, u, c, d, out)
}

fn compensable(k: usize, c: usize, d: usize) -> bool {
    c > k - 1 && d < k || c == k - 1 && d == k - 1
}

fn plan(k: usize, u: usize, c: &Child, t: usize, b: usize) -> Option<Plan> {
    match c {
        Child::Path(_) => (t == 0 && b == 0 || compensable(k, t, b)).then_some(Plan::Path),
        Child::Cross { block, cuts } => cross_plan(k, u, block, cuts, t, b),
    }
}

/// Transitive order of a cross block with `u` at position `b`, positions for
/// its cut vertices and their final colors.
fn cross_plan(k: usize, u: usize, block: &[usize], cuts: &[(usize, Vec<Chain>)], t: usize, b: usize) -> Option<Plan> {
    let q = cuts.len();
    let mut free: Vec<usize> = (0..k).filter(|&p| p != b).collect();
    let mut pos = Vec::with_capacity(q);
    if t < k && t != b {
        pos.push(t);
        free.retain(|&p| p != t);
    }
    while pos.len() < q {
        pos.push(free.pop()?);
    }
    if pos.len() > q {
        return None;
    }
    pos.sort_unstable();
    // chains count 2 take the low positions, count 1 the high ones
    let mut idx: Vec<usize> = (0..q).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(cuts[i].1.len()), cuts[i].0));
    let mut slot = vec![0; q];
    for (j, &i) in idx.iter().enumerate() {
        slot[i] = pos[j];
    }
    let range = |i: usize| {
        let p = slot[i];
        let ch = cuts[i].1.len();
        if ch == 1 && p == 0 {
            (k - 1, k - 1)
        } else {
            (k, (p + ch * (k - 1)).min(3 * k - 2))
        }
    };
    let mut by_end: Vec<usize> = (0..q).collect();
    by_end.sort_by_key(|&i| (range(i).1, cuts[i].0));
    let mut targets = vec![0; q];
    let mut used: BTreeSet<usize> = BTreeSet::from([t]);
    for &i in &by_end {
        let (lo, hi) = range(i);
        let v = (lo..=hi).find(|x| !used.contains(x))?;
        used.insert(v);
        targets[i] = v;
    }
    let mut fixed: Vec<(usize, usize)> = vec![(u, b)];
    fixed.extend((0..q).map(|i| (cuts[i].0, slot[i])));
    let order = transitive_order(block, &fixed);
    let plain_clash = (0..k).any(|p| p != b && !slot.contains(&p) && used.contains(&p));
    if plain_clash {
        return None;
    }
    Some(Plan::Cross { order, targets })
}

/// Picks one option per child so that the values sum to `target`.
fn split_sum(options: &[Vec<usize>], target: usize, k: usize) -> Option<Vec<usize>> {
    let max = options.len() * k;
    if target > max {
        return None;
    }
    let mut reach = vec![vec![false; target + 1]; options.len() + 1];
    reach[0][0] = true;
    for (j, opts) in options.iter().enumerate() {
        for s in 0..=target {
            if reach[j][s] {
                for &b in opts {
                    if s + b <= target {
                        reach[j + 1][s + b] = true;
                    }
                }
            }
        }
    }
    if !reach[options.len()][target] {
        return None;
    }
    let mut out = vec![0; options.len()];
    let mut s = target;
    for j in (0..options.len()).rev() {
        let b = *options[j].iter().find(|&&b| b <= s && reach[j][s - b])?;
        out[j] = b;
        s -= b;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::block_cut_tree;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn run(g: &Graph, k: usize) -> Orientation {
        let d = uniform_block_orient(g, &block_cut_tree(g), k).unwrap();
        assert!(is_proper(g, &d));
        assert!(max_indegree(&d) <= 3 * k - 2);
        d
    }

    fn random_blocks(k: usize, blocks: usize, seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        let mut n = 1;
        for _ in 0..blocks {
            let at = rng.gen_range(0..n);
            let mut b = vec![at];
            b.extend(n..n + k - 1);
            n += k - 1;
            for (i, &x) in b.iter().enumerate() {
                edges.extend(b[i + 1..].iter().map(|&y| (x, y)));
            }
        }
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn single_block() {
        assert_eq!(max_indegree(&run(&Graph::complete(4), 4)), 3);
    }

    #[test]
    fn path_block_graph_stays_low() {
        let mut e = Vec::new();
        for i in 0..3 {
            for x in 3 * i..3 * i + 4 {
                e.extend((x + 1..3 * i + 4).map(|y| (x, y)));
            }
        }
        let g = Graph::from_edges(10, e).unwrap();
        assert!(max_indegree(&run(&g, 4)) <= 6);
    }

    #[test]
    fn star_of_many_chains() {
        // one vertex carrying five triangles, each extended by a second triangle
        let mut e = Vec::new();
        let mut n = 1;
        for _ in 0..5 {
            e.extend([(0, n), (0, n + 1), (n, n + 1), (n + 1, n + 2), (n + 1, n + 3), (n + 2, n + 3)]);
            n += 4;
        }
        run(&Graph::from_edges(n, e).unwrap(), 3);
    }

    #[test]
    fn random_block_graphs() {
        for k in 3..=5 {
            for seed in 0..60 {
                run(&random_blocks(k, 2 + (seed as usize % 14), seed), k);
            }
        }
    }

    #[test]
    fn rejects_trees_and_mixed_blocks() {
        let t = Graph::path(4);
        assert_eq!(uniform_block_orient(&t, &block_cut_tree(&t), 2), Err(ConstructError::UnsupportedK(2)));
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(uniform_block_orient(&g, &block_cut_tree(&g), 3), Err(ConstructError::NotUniformBlock));
    }
}
