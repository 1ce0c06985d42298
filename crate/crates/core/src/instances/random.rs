use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

use super::InstanceError;

/// Graph classes with seeded generators. `size` counts vertices, except for
/// the block classes (blocks) and strips (triangles).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceClass {
    Split,
    QuasiThreshold,
    UniformBlock {
        k: usize,
    },
    TwoCutBlock {
        k: usize,
    },
    Strip,
    Cograph,
    /// Trees where vertices of degree above `c` are pairwise non-adjacent.
    LowDegreeTree {
        c: usize,
    },
    Cobipartite,
    UnitInterval,
}

impl FromStr for InstanceClass {
    type Err = InstanceError;

    /// `split`, `quasi-threshold`, `uniform-block:K`, `two-cut-block:K`,
    /// `strip`, `cograph`, `tree:C`, `cobipartite`, `unit-interval`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num = || -> Result<usize, InstanceError> {
            arg.ok_or_else(|| InstanceError::BadParams(format!("class {name} needs a parameter")))?
                .parse()
                .map_err(|_| InstanceError::BadParams(format!("bad parameter in {s}")))
        };
        Ok(match name {
            "split" => Self::Split,
            "quasi-threshold" => Self::QuasiThreshold,
            "uniform-block" => Self::UniformBlock { k: num()? },
            "two-cut-block" => Self::TwoCutBlock { k: num()? },
            "strip" => Self::Strip,
            "cograph" => Self::Cograph,
            "tree" => Self::LowDegreeTree { c: num()? },
            "cobipartite" => Self::Cobipartite,
            "unit-interval" => Self::UnitInterval,
            _ => return Err(InstanceError::BadParams(format!("unknown class {s}"))),
        })
    }
}

pub fn random_class_instance(class: InstanceClass, size: usize, seed: u64) -> Result<Graph, InstanceError> {
    if size == 0 {
        return Err(InstanceError::BadParams("size must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match class {
        InstanceClass::Split => shuffled(split(size, &mut rng), &mut rng),
        InstanceClass::QuasiThreshold => shuffled(quasi_threshold(size, &mut rng), &mut rng),
        InstanceClass::UniformBlock { k } | InstanceClass::TwoCutBlock { k } if k < 2 => {
            return Err(InstanceError::BadParams(format!("block size must be at least 2, got {k}")));
        }
        InstanceClass::UniformBlock { k } => uniform_block(k, size, &mut rng),
        InstanceClass::TwoCutBlock { k } => two_cut_block(k, size, &mut rng),
        InstanceClass::Strip => strip(size, &mut rng),
        InstanceClass::Cograph => shuffled(cograph(size, &mut rng), &mut rng),
        InstanceClass::LowDegreeTree { c: 0 } => {
            return Err(InstanceError::BadParams("tree degree threshold must be positive".into()));
        }
        InstanceClass::LowDegreeTree { c } => low_degree_tree(c, size, &mut rng),
        InstanceClass::Cobipartite => shuffled(cobipartite(size, &mut rng), &mut rng),
        InstanceClass::UnitInterval => unit_interval(size, &mut rng),
    };
    Ok(g)
}

fn shuffled(g: Graph, rng: &mut ChaCha8Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn clique_edges(vs: &[usize], e: &mut Vec<(usize, usize)>) {
    for (i, &a) in vs.iter().enumerate() {
        e.extend(vs[i + 1..].iter().map(|&b| (a, b)));
    }
}

fn split(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let c = rng.gen_range(1..=n.div_ceil(2));
    let mut e = Vec::new();
    clique_edges(&(0..c).collect::<Vec<_>>(), &mut e);
    for v in c..n {
        e.extend((0..c).filter(|_| rng.gen_bool(0.5)).map(|x| (x, v)));
    }
    Graph::from_edges_lossy(n, e)
}

/// Comparability graph of a random rooted forest.
fn quasi_threshold(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut e = Vec::new();
    for v in 1..n {
        if rng.gen_bool(0.8) {
            parent[v] = Some(rng.gen_range(0..v));
        }
        let mut a = parent[v];
        while let Some(x) = a {
            e.push((x, v));
            a = parent[x];
        }
    }
    Graph::from_edges_lossy(n, e)
}

fn uniform_block(k: usize, blocks: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut e = Vec::new();
    clique_edges(&(0..k).collect::<Vec<_>>(), &mut e);
    let mut n = k;
    for _ in 1..blocks {
        let x = rng.gen_range(0..n);
        let members: Vec<usize> = std::iter::once(x).chain(n..n + k - 1).collect();
        clique_edges(&members, &mut e);
        n += k - 1;
    }
    Graph::from_edges_lossy(n, e)
}

fn two_cut_block(k: usize, blocks: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut e = Vec::new();
    clique_edges(&(0..k).collect::<Vec<_>>(), &mut e);
    let mut home = vec![0; k];
    let mut cut = vec![false; k];
    let mut cuts_in = vec![0usize];
    for b in 1..blocks {
        let candidates: Vec<usize> = (0..home.len()).filter(|&v| cut[v] || cuts_in[home[v]] < 2).collect();
        let x = *candidates.choose(rng).expect("fresh blocks always offer candidates");
        if !cut[x] {
            cut[x] = true;
            cuts_in[home[x]] += 1;
        }
        let n = home.len();
        let members: Vec<usize> = std::iter::once(x).chain(n..n + k - 1).collect();
        clique_edges(&members, &mut e);
        home.extend(std::iter::repeat_n(b, k - 1));
        cut.extend(std::iter::repeat_n(false, k - 1));
        cuts_in.push(1);
    }
    Graph::from_edges_lossy(home.len(), e)
}

/// Triangles glued in a path; the pivot is kept with high probability so that
/// long fans appear.
fn strip(triangles: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut e = vec![(0, 1), (0, 2), (1, 2)];
    let (mut pivot, mut other, mut newest) = (0, 1, 2);
    for c in 3..triangles + 2 {
        if !rng.gen_bool(0.75) {
            std::mem::swap(&mut pivot, &mut other);
        }
        e.extend([(pivot, c), (newest, c)]);
        other = newest;
        newest = c;
    }
    Graph::from_edges_lossy(triangles + 2, e)
}

fn cograph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut e = Vec::new();
    while groups.len() > 1 {
        let a = groups.swap_remove(rng.gen_range(0..groups.len()));
        let b = groups.swap_remove(rng.gen_range(0..groups.len()));
        if rng.gen_bool(0.5) {
            for &x in &a {
                e.extend(b.iter().map(|&y| (x, y)));
            }
        }
        groups.push(a.into_iter().chain(b).collect());
    }
    Graph::from_edges_lossy(n, e)
}

fn low_degree_tree(c: usize, n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut deg = vec![0usize; n];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut e = Vec::new();
    for v in 1..n {
        let may_grow = |x: usize| deg[x] < c || nbrs[x].iter().all(|&y| deg[y] <= c);
        let allowed: Vec<usize> = (0..v).filter(|&x| may_grow(x)).collect();
        let hubs: Vec<usize> = allowed.iter().copied().filter(|&x| deg[x] >= c).collect();
        let x = match hubs.choose(rng) {
            Some(&h) if rng.gen_bool(0.5) => h,
            _ => *allowed.choose(rng).expect("leaves can always grow"),
        };
        deg[x] += 1;
        deg[v] += 1;
        nbrs[x].push(v);
        nbrs[v].push(x);
        e.push((x, v));
    }
    Graph::from_edges_lossy(n, e)
}

fn cobipartite(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let a = n / 2;
    let mut e = Vec::new();
    clique_edges(&(0..a).collect::<Vec<_>>(), &mut e);
    clique_edges(&(a..n).collect::<Vec<_>>(), &mut e);
    for x in 0..a {
        e.extend((a..n).filter(|_| rng.gen_bool(0.4)).map(|y| (x, y)));
    }
    Graph::from_edges_lossy(n, e)
}

/// Points on a line joined when at most a fixed distance apart.
fn unit_interval(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut pos: Vec<usize> = (0..n).map(|_| rng.gen_range(0..2 * n)).collect();
    pos.sort_unstable();
    let mut e = Vec::new();
    for i in 0..n {
        e.extend((i + 1..n).take_while(|&j| pos[j] - pos[i] <= 6).map(|j| (i, j)));
    }
    Graph::from_edges_lossy(n, e)
}
