use num_rational::Ratio;

use crate::graph::{join, Graph};
use crate::orientation::{max_indegree, Orientation};
use crate::recognize::Cotree;

use super::ConstructError;

/// Bounds on the proper orientation number of a cograph read off its cotree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CographBounds {
    pub lower: Ratio<u64>,
    pub upper: usize,
}

#[derive(Debug, Clone, Copy)]
struct Info {
    n: u64,
    m: u64,
    lower: Ratio<u64>,
    upper: usize,
}

fn leaf() -> Info {
    Info { n: 1, m: 0, lower: Ratio::from_integer(0), upper: 0 }
}

fn union(a: Info, b: Info) -> Info {
    Info { n: a.n + b.n, m: a.m + b.m, lower: a.lower.max(b.lower), upper: a.upper.max(b.upper) }
}

fn join_info(a: Info, b: Info) -> Info {
    let half = |x: u64| Ratio::new(x, 2);
    let ad = |i: Info| Ratio::new(i.m, i.n);
    Info {
        n: a.n + b.n,
        m: a.m + b.m + a.n * b.n,
        lower: (ad(a) + half(b.n)).min(ad(b) + half(a.n)),
        upper: (a.upper + b.n as usize).min(b.upper + a.n as usize),
    }
}

/// Joins and unions with more than two children are folded from the right.
fn fold<T, F: Fn(T, T) -> T>(mut items: Vec<T>, f: F) -> Option<T> {
    let mut acc = items.pop()?;
    while let Some(x) = items.pop() {
        acc = f(x, acc);
    }
    Some(acc)
}

fn info(t: &Cotree) -> Option<Info> {
    match t {
        Cotree::Leaf(_) => Some(leaf()),
        Cotree::Union(ch) => fold(ch.iter().map(info).collect::<Option<Vec<_>>>()?, union),
        Cotree::Join(ch) => fold(ch.iter().map(info).collect::<Option<Vec<_>>>()?, join_info),
    }
}

/// Lower bound from average degrees at every join and the upper bound of
/// orienting every join one way. An empty cotree gives `0 / 0`.
pub fn cograph_bounds(tree: &Cotree) -> CographBounds {
    match info(tree) {
        Some(i) => CographBounds { lower: i.lower, upper: i.upper },
        None => CographBounds { lower: Ratio::from_integer(0), upper: 0 },
    }
}

/// Orientation of `join(g1, g2)` from proper orientations of both sides: all
/// cross edges point to the side where that yields the smaller maximum.
pub fn cograph_join_orient(
    g1: &Graph,
    g2: &Graph,
    d1: &Orientation,
    d2: &Orientation,
) -> Result<Orientation, ConstructError> {
    let g = join(g1, g2);
    let (n1, n2) = (g1.n(), g2.n());
    let to_second = n1 + max_indegree(d2) <= n2 + max_indegree(d1);
    let mut arcs: Vec<(usize, usize)> = d1.arcs(g1).collect();
    arcs.extend(d2.arcs(g2).map(|(a, b)| (a + n1, b + n1)));
    for a in 0..n1 {
        for b in n1..n1 + n2 {
            arcs.push(if to_second { (a, b) } else { (b, a) });
        }
    }
    Ok(Orientation::from_arcs(&g, arcs)?)
}

struct Part {
    vertices: Vec<usize>,
    arcs: Vec<(usize, usize)>,
    max: usize,
}

fn orient_part(t: &Cotree) -> Option<Part> {
    let merge = |a: Part, b: Part, joined: bool| {
        let mut arcs = a.arcs;
        arcs.extend(b.arcs);
        let mut max = a.max.max(b.max);
        if joined {
            let to_b = a.vertices.len() + b.max <= b.vertices.len() + a.max;
            for &x in &a.vertices {
                for &y in &b.vertices {
                    arcs.push(if to_b { (x, y) } else { (y, x) });
                }
            }
            max = if to_b { a.vertices.len() + b.max } else { b.vertices.len() + a.max };
        }
        let mut vertices = a.vertices;
        vertices.extend(b.vertices);
        Part { vertices, arcs, max }
    };
    match t {
        Cotree::Leaf(v) => Some(Part { vertices: vec![*v], arcs: Vec::new(), max: 0 }),
        Cotree::Union(ch) => fold(ch.iter().map(orient_part).collect::<Option<Vec<_>>>()?, |a, b| merge(a, b, false)),
        Cotree::Join(ch) => fold(ch.iter().map(orient_part).collect::<Option<Vec<_>>>()?, |a, b| merge(a, b, true)),
    }
}

/// Proper orientation of a cograph attaining the upper bound of [`cograph_bounds`].
pub fn cograph_orient(g: &Graph, tree: &Cotree) -> Result<Orientation, ConstructError> {
    if tree.evaluate(g.n()) != *g {
        return Err(ConstructError::BadShape("cotree does not match the graph"));
    }
    let arcs = orient_part(tree).map(|p| p.arcs).unwrap_or_default();
    Ok(Orientation::from_arcs(g, arcs)?)
}
