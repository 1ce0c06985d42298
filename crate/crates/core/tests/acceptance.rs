//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use orientkit::construct::{
    cograph_bounds, low_degree_orient, outerplanar_strip_orient, quasi_threshold_orient, split_orient,
    two_cut_block_orient, uniform_block_orient,
};
use orientkit::exact::{
    decide_k_orientation, enumerate_proper_k_orientations, proper_orientation_number, Decision, SearchConfig,
    SolveError,
};
use orientkit::instances::{
    build_vc_certificate, cobipartite_kernel, gen_block_tight, gen_f, gen_s, gen_split_tight, random_class_instance,
    reduce_vertex_cover, split_kernel, InstanceClass,
};
use orientkit::recognize::{
    block_cut_tree, cograph_cotree, is_chordal, maximal_outerplane_weak_dual, quasi_threshold_cotree, split_partition,
};
use orientkit::{disjoint_union, is_proper, join, max_indegree, Graph};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn chi(g: &Graph) -> usize {
    proper_orientation_number(g, &SearchConfig::default()).expect("unbounded search").value
}

fn yes(g: &Graph, k: usize) -> bool {
    decide_k_orientation(g, k, &SearchConfig::default()).expect("unbounded search").is_yes()
}

fn with_pendant(g: &Graph, port: usize) -> Graph {
    let mut e = g.edges().to_vec();
    e.push((port, g.n()));
    Graph::from_edges(g.n() + 1, e).unwrap()
}

fn gadget_forcing() -> Check {
    let mut solutions = 0;
    for k in [2, 3] {
        let (s, meta) = gen_s(k);
        let all = enumerate_proper_k_orientations(&s, k, None).map_err(|e| e.to_string())?;
        ensure!(!all.is_empty(), "S({k}) has no proper {k}-orientation");
        for d in &all {
            for (j, &v) in meta.spine.iter().enumerate() {
                ensure!(d.indegree(v) == j, "S({k}): v_{j} has indegree {}", d.indegree(v));
            }
        }
        solutions += all.len();
        for i in 2..=k {
            let (f, meta) = gen_f(i, k).map_err(|e| e.to_string())?;
            let head = meta.head.unwrap();
            let host = with_pendant(&f, head);
            let u = f.n();
            let all = enumerate_proper_k_orientations(&host, k, None).map_err(|e| e.to_string())?;
            ensure!(!all.is_empty(), "F({i},{k}) host has no proper {k}-orientation");
            for d in &all {
                ensure!(d.indegree(head) == i, "F({i},{k}): head indegree {}", d.indegree(head));
                ensure!(d.indegree(u) == 0, "F({i},{k}): edge uu' points to u");
            }
            solutions += all.len();
        }
    }
    Ok(format!("{solutions} orientations enumerated"))
}

fn split_tightness() -> Check {
    let g = gen_split_tight(2).map_err(|e| e.to_string())?;
    let value = chi(&g);
    ensure!(value == 2, "exact value {value}, expected 2");
    let d = split_orient(&g, &split_partition(&g).unwrap()).map_err(|e| e.to_string())?;
    ensure!(is_proper(&g, &d) && max_indegree(&d) <= 2, "split_orient gave max indegree {}", max_indegree(&d));
    Ok("exact = 2".into())
}

fn split_upper_bound() -> Check {
    let mut small = 0;
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 39);
        let g = random_class_instance(InstanceClass::Split, n, seed).unwrap();
        let part = split_partition(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let d = split_orient(&g, &part).map_err(|e| format!("seed {seed}: {e}"))?;
        let omega = g.clique_number();
        ensure!(is_proper(&g, &d), "seed {seed}: not proper");
        ensure!(max_indegree(&d) <= (2 * omega).saturating_sub(2), "seed {seed}: {} > 2ω-2", max_indegree(&d));
        if n <= 14 {
            small += 1;
            ensure!(chi(&g) <= max_indegree(&d), "seed {seed}: exact above constructor");
        }
    }
    Ok(format!("200 graphs, {small} solved exactly"))
}

fn quasi_threshold_exact() -> Check {
    let mut small = 0;
    for seed in 0..100u64 {
        let n = 1 + (seed as usize % 30);
        let g = random_class_instance(InstanceClass::QuasiThreshold, n, seed).unwrap();
        let t = quasi_threshold_cotree(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let d = quasi_threshold_orient(&g, &t).map_err(|e| format!("seed {seed}: {e}"))?;
        let target = g.clique_number() - 1;
        ensure!(is_proper(&g, &d) && max_indegree(&d) == target, "seed {seed}: got {} want {target}", max_indegree(&d));
        if n <= 12 {
            small += 1;
            ensure!(chi(&g) == target, "seed {seed}: exact differs from ω-1");
        }
    }
    Ok(format!("100 graphs, {small} confirmed exactly"))
}

fn block_bounds() -> Check {
    for k in [3, 4] {
        for seed in 0..50u64 {
            let blocks = 1 + (seed as usize % 12);
            let g = random_class_instance(InstanceClass::UniformBlock { k }, blocks, seed).unwrap();
            let d = uniform_block_orient(&g, &block_cut_tree(&g), k).map_err(|e| format!("k={k} seed {seed}: {e}"))?;
            ensure!(
                is_proper(&g, &d) && max_indegree(&d) <= 3 * k - 2,
                "uniform k={k} seed {seed}: {}",
                max_indegree(&d)
            );
            let g = random_class_instance(InstanceClass::TwoCutBlock { k }, blocks, seed).unwrap();
            let bct = block_cut_tree(&g);
            let d = two_cut_block_orient(&g, &bct, k).map_err(|e| format!("two-cut k={k} seed {seed}: {e}"))?;
            ensure!(is_proper(&g, &d) && max_indegree(&d) <= k + 1, "two-cut k={k} seed {seed}: {}", max_indegree(&d));
            for &c in &bct.cut_vertices {
                ensure!(
                    [0, k, k + 1].contains(&d.indegree(c)),
                    "two-cut k={k} seed {seed}: cut vertex {c} has {}",
                    d.indegree(c)
                );
            }
        }
    }
    let t2 = gen_block_tight(2).unwrap();
    let v2 = chi(&t2);
    ensure!(v2 >= 3, "G(2) has exact value {v2}");
    let t3 = gen_block_tight(3).unwrap();
    let d = two_cut_block_orient(&t3, &block_cut_tree(&t3), 3).map_err(|e| e.to_string())?;
    ensure!(is_proper(&t3, &d) && max_indegree(&d) <= 4, "G(3): {}", max_indegree(&d));
    let below = match decide_k_orientation(&t3, 3, &SearchConfig::default().with_budget(2_000_000)) {
        Ok(Decision::No) => "G(3) has no proper 3-orientation",
        Ok(Decision::Yes(_)) => return Err("G(3) has a proper 3-orientation".into()),
        Err(SolveError::BudgetExceeded { .. }) => "G(3) optimality not settled within budget",
        Err(e) => return Err(e.to_string()),
    };
    Ok(format!("200 random graphs; exact G(2) = {v2}; G(3) at {}; {below}", max_indegree(&d)))
}

fn degree_corollaries() -> Check {
    for c in [2, 3] {
        for seed in 0..50u64 {
            let n = 2 + (seed as usize % 40);
            let g = random_class_instance(InstanceClass::LowDegreeTree { c }, n, seed).unwrap();
            let d = low_degree_orient(&g, c).map_err(|e| format!("c={c} seed {seed}: {e}"))?;
            ensure!(is_proper(&g, &d) && max_indegree(&d) <= c, "c={c} seed {seed}: {}", max_indegree(&d));
        }
    }
    Ok("100 trees".into())
}

fn outerplanar() -> Check {
    let mut big = 0;
    let mut small = 0;
    for seed in 0..50u64 {
        let t = 1 + (seed as usize * 7 % 60);
        let g = random_class_instance(InstanceClass::Strip, t, seed).unwrap();
        let strip = maximal_outerplane_weak_dual(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        let d = outerplanar_strip_orient(&g, &strip).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure!(is_proper(&g, &d) && max_indegree(&d) <= 13, "seed {seed}: {}", max_indegree(&d));
        big += usize::from(g.max_degree() >= 14);
        if g.n() <= 12 {
            small += 1;
            ensure!(yes(&g, max_indegree(&d)), "seed {seed}: exact solver rejects the constructor value");
        }
    }
    ensure!(big > 0, "no strip with maximum degree at least 14");
    Ok(format!("50 strips, {big} with Δ >= 14, {small} confirmed exactly"))
}

fn kernels() -> Check {
    let mut shrunk = 0;
    for seed in 0..50u64 {
        let n = 4 + (seed as usize % 11);
        let k = 2 + (seed as usize % 3);
        let g = random_class_instance(InstanceClass::Split, n, seed).unwrap();
        let (h, k2) = split_kernel(&g, k).map_err(|e| format!("seed {seed}: {e}"))?;
        shrunk += usize::from(h.n() < g.n());
        ensure!(yes(&g, k) == yes(&h, k2), "split seed {seed}: decisions differ");
    }
    let budget = SearchConfig::default().with_budget(500_000);
    let mut compared = 0;
    for seed in 0..50u64 {
        let n = 2 + (seed as usize % 13);
        let k = 2 + (seed as usize % 3);
        let g = random_class_instance(InstanceClass::Cobipartite, n, seed).unwrap();
        let (h, k2) = cobipartite_kernel(&g, k).map_err(|e| format!("cobipartite seed {seed}: {e}"))?;
        ensure!(h == Graph::complete(k + 2) || h.n() <= 2 * (k + 1), "cobipartite seed {seed}: {} vertices", h.n());
        if let (Ok(a), Ok(b)) = (decide_k_orientation(&g, k, &budget), decide_k_orientation(&h, k2, &budget)) {
            compared += 1;
            ensure!(a.is_yes() == b.is_yes(), "cobipartite seed {seed}: decisions differ");
        }
    }
    Ok(format!("50 split ({shrunk} shrunk), 50 cobipartite ({compared} decided both sides)"))
}

fn reduction_sanity() -> Check {
    let k33 = join(&Graph::empty(3), &Graph::empty(3));
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    for (name, g, cover) in [("K4", Graph::complete(4), vec![0, 1, 2]), ("K33", k33, vec![0, 1, 2])] {
        let red = reduce_vertex_cover(&g, 3).map_err(|e| e.to_string())?;
        ensure!(red.k_prime == g.n() + 2, "{name}: k' = {}", red.k_prime);
        ensure!(is_chordal(&red.graph), "{name}: output not chordal");
        let d = build_vc_certificate(&red, &cover).map_err(|e| e.to_string())?;
        ensure!(is_proper(&red.graph, &d) && max_indegree(&d) <= red.k_prime, "{name}: certificate fails");
        let diam = red.graph.diameter().unwrap_or(usize::MAX);
        notes.push(format!("{name}: n'={} diameter={diam}", red.graph.n()));
        if diam > 9 {
            failures.push(format!("{name}: diameter {diam} > 9"));
        }
    }
    if failures.is_empty() {
        Ok(notes.join(", "))
    } else {
        Err(failures.join(", "))
    }
}

fn union_and_cographs() -> Check {
    for seed in 0..50u64 {
        let g1 = common::gnp(2 + (seed as usize % 9), 0.35, 2 * seed);
        let g2 = common::gnp(2 + (seed as usize * 5 % 9), 0.35, 2 * seed + 1);
        let u = disjoint_union(&g1, &g2);
        let whole = proper_orientation_number(&u, &SearchConfig { split_components: false, ..SearchConfig::default() })
            .unwrap()
            .value;
        ensure!(whole == chi(&g1).max(chi(&g2)), "pair {seed}: union {whole}");
    }
    for seed in 0..50u64 {
        let g = random_class_instance(InstanceClass::Cograph, 1 + (seed as usize % 12), seed).unwrap();
        let b = cograph_bounds(&cograph_cotree(&g).map_err(|e| e.to_string())?);
        let x = chi(&g);
        ensure!(
            b.lower <= num_rational::Ratio::from_integer(x as u64) && x <= b.upper,
            "cograph seed {seed}: {x} outside bounds"
        );
    }
    for n in 1..=8 {
        let g = Graph::complete(n);
        let b = cograph_bounds(&cograph_cotree(&g).unwrap());
        ensure!(b.upper == chi(&g) && b.upper == n - 1, "K_{n}: upper {}", b.upper);
    }
    Ok("50 unions, 50 cographs, K_1..K_8".into())
}

fn oracle_self_check() -> Check {
    let mut count = 0;
    for seed in 0..400u64 {
        let n = 1 + (seed as usize % 9);
        let m = (seed as usize / 9) % 13;
        let g = common::gnm(n, m, seed);
        let brute = common::brute_chi(&g);
        let bb = chi(&g);
        ensure!(brute == bb, "seed {seed}: brute force {brute}, search {bb}");
        for k in 0..=g.max_degree() + 1 {
            ensure!(yes(&g, k) == (k >= brute), "seed {seed}: decision at k={k}");
        }
        count += 1;
    }
    Ok(format!("{count} graphs with m <= 12"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 11] = [
        ("gadget forcing", gadget_forcing),
        ("split tightness at omega=2", split_tightness),
        ("split upper bound", split_upper_bound),
        ("quasi-threshold exactness", quasi_threshold_exact),
        ("block-graph bounds", block_bounds),
        ("degree-condition corollaries", degree_corollaries),
        ("outerplanar strips", outerplanar),
        ("kernels", kernels),
        ("reduction sanity", reduction_sanity),
        ("disjoint union and cograph sandwich", union_and_cographs),
        ("oracle self-check", oracle_self_check),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
