use crate::graph::Graph;

use super::InstanceError;

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// Split graph on `K_ω` with `ω(ω-1)` copies of `I_j` for each `j < ω`, where
/// `I_j` has one vertex per `j`-subset of the clique.
pub fn gen_split_tight(omega: usize) -> Result<Graph, InstanceError> {
    if omega < 2 {
        return Err(InstanceError::BadParams(format!("tight split example needs omega >= 2, got {omega}")));
    }
    let mut e = Vec::new();
    for a in 0..omega {
        e.extend((a + 1..omega).map(|b| (a, b)));
    }
    let mut next = omega;
    for j in 1..omega {
        let sets = subsets(omega, j);
        for _ in 0..omega * (omega - 1) {
            for s in &sets {
                e.extend(s.iter().map(|&x| (x, next)));
                next += 1;
            }
        }
    }
    Ok(Graph::from_edges(next, e).expect("simple by construction"))
}

/// `k`-uniform block graph whose blocks have at most two cut vertices and
/// whose proper orientation number is at least `k + 1`.
pub fn gen_block_tight(k: usize) -> Result<Graph, InstanceError> {
    if k < 2 {
        return Err(InstanceError::BadParams(format!("tight block example needs k >= 2, got {k}")));
    }
    let mut e = Vec::new();
    let mut next = k;
    let mut clique_at = |w: usize, e: &mut Vec<(usize, usize)>| {
        let members: Vec<usize> = std::iter::once(w).chain(next..next + k - 1).collect();
        next += k - 1;
        for (i, &a) in members.iter().enumerate() {
            e.extend(members[i + 1..].iter().map(|&b| (a, b)));
        }
        members
    };
    for a in 0..k {
        e.extend((a + 1..k).map(|b| (a, b)));
    }
    for w in [0, 1] {
        for i in 0..=k {
            let c = clique_at(w, &mut e);
            if i >= 1 {
                clique_at(c[1], &mut e);
            }
        }
    }
    Ok(Graph::from_edges(next, e).expect("simple by construction"))
}
