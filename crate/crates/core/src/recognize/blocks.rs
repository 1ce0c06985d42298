use std::collections::VecDeque;

use crate::graph::Graph;

/// Blocks (biconnected components, bridges, isolated vertices) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Sorted vertex lists.
    pub blocks: Vec<Vec<usize>>,
    /// Sorted.
    pub cut_vertices: Vec<usize>,
    /// Indices into `blocks` containing each vertex.
    pub blocks_of: Vec<Vec<usize>>,
}

/// The block-cut tree of one connected component rooted at a block. Children
/// are ordered by vertex id (cut vertices) and block index (blocks).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedBlockCutTree {
    pub root: usize,
    /// For each block: the cut vertex joining it to its parent block.
    pub parent_cut: Vec<Option<usize>>,
    /// For each block: cut vertices in it that lead to child blocks.
    pub child_cuts: Vec<Vec<usize>>,
    /// For each vertex: blocks hanging below it (empty unless a cut vertex).
    pub child_blocks: Vec<Vec<usize>>,
    /// For each vertex that is a cut vertex below the root: its parent block.
    pub parent_block: Vec<Option<usize>>,
    /// Blocks in breadth-first order from the root.
    pub order: Vec<usize>,
}

/// Iterative Tarjan biconnected decomposition.
pub fn block_cut_tree(g: &Graph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut estack: Vec<(usize, usize)> = Vec::new();
    for s in 0..n {
        if disc[s] != usize::MAX {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        if g.degree(s) == 0 {
            blocks.push(vec![s]);
            continue;
        }
        let mut stack: Vec<(usize, usize, usize)> = vec![(s, usize::MAX, 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < g.degree(v) {
                let w = g.neighbors(v)[top.2];
                top.2 += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    estack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = estack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort();
    let mut blocks_of = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            blocks_of[v].push(i);
        }
    }
    let cut_vertices = (0..n).filter(|&v| blocks_of[v].len() > 1).collect();
    BlockCutTree { blocks, cut_vertices, blocks_of }
}

impl BlockCutTree {
    pub fn is_cut(&self, v: usize) -> bool {
        self.blocks_of[v].len() > 1
    }

    /// Every block is a clique on exactly `k` vertices.
    pub fn is_k_uniform(&self, g: &Graph, k: usize) -> bool {
        self.blocks.iter().all(|b| b.len() == k && g.is_clique(b))
    }

    /// Every block is a clique.
    pub fn is_block_graph(&self, g: &Graph) -> bool {
        self.blocks.iter().all(|b| g.is_clique(b))
    }

    pub fn max_cut_vertices_per_block(&self) -> usize {
        self.blocks.iter().map(|b| b.iter().filter(|&&v| self.is_cut(v)).count()).max().unwrap_or(0)
    }

    /// Roots the component containing block `root`.
    pub fn rooted(&self, root: usize) -> RootedBlockCutTree {
        let n = self.blocks_of.len();
        let nb = self.blocks.len();
        let mut parent_cut = vec![None; nb];
        let mut child_cuts = vec![Vec::new(); nb];
        let mut child_blocks = vec![Vec::new(); n];
        let mut parent_block = vec![None; n];
        let mut seen = vec![false; nb];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(b) = queue.pop_front() {
            order.push(b);
            for &v in &self.blocks[b] {
                if !self.is_cut(v) || parent_cut[b] == Some(v) {
                    continue;
                }
                child_cuts[b].push(v);
                parent_block[v] = Some(b);
                for &c in &self.blocks_of[v] {
                    if !seen[c] {
                        seen[c] = true;
                        parent_cut[c] = Some(v);
                        child_blocks[v].push(c);
                        queue.push_back(c);
                    }
                }
            }
        }
        RootedBlockCutTree { root, parent_cut, child_cuts, child_blocks, parent_block, order }
    }
}

impl RootedBlockCutTree {
    /// Vertices of the subgraph hanging below cut vertex `u` (excluding `u`).
    pub fn below(&self, bct: &BlockCutTree, u: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack: Vec<usize> = self.child_blocks[u].clone();
        while let Some(b) = stack.pop() {
            for &v in &bct.blocks[b] {
                if v != u && self.parent_cut[b] != Some(v) {
                    out.push(v);
                }
                if self.parent_cut[b] != Some(v) {
                    stack.extend(self.child_blocks[v].iter().copied());
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}
