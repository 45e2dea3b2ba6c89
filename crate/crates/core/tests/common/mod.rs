#![allow(dead_code)]

use chromatic_sudoku::{validate_coloring, Graph, PartialColoring};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn is_connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.vertex_count() + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(rng, n, p);
        if is_connected(&g) {
            return g;
        }
    }
}

/// Random raw assignment that is proper on `g`, with arbitrary labels.
pub fn random_raw_coloring<R: Rng>(rng: &mut R, g: &Graph) -> Vec<(usize, u64)> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.shuffle(rng);
    let take = rng.gen_range(0..=g.vertex_count());
    let palette: Vec<u64> = (0..rng.gen_range(1..=4))
        .map(|_| rng.gen_range(1..50))
        .collect();
    let mut chosen: Vec<(usize, u64)> = Vec::new();
    for &v in &order[..take] {
        let label = *palette.choose(rng).unwrap();
        if chosen.iter().all(|&(w, l)| l != label || !g.adjacent(v, w)) {
            chosen.push((v, label));
        }
    }
    chosen
}

pub fn random_coloring<R: Rng>(rng: &mut R, g: &Graph) -> PartialColoring {
    validate_coloring(g, random_raw_coloring(rng, g)).unwrap()
}

/// All set partitions of `1..=n`, by inserting each element into every
/// existing block or a new one.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut parts: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for v in 1..=n {
        let mut next = Vec::new();
        for p in &parts {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(v);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![v]);
            next.push(q);
        }
        parts = next;
    }
    parts
}

/// `m[r]` straight from the definition: filter all set partitions.
pub fn m_by_definition(g: &Graph, c: &PartialColoring) -> Vec<i64> {
    let l0 = c.lambda0();
    let mut m = vec![0i64; c.uncolored_count() + 1];
    for p in set_partitions(g.vertex_count()) {
        if !p.iter().all(|b| g.is_independent(b)) {
            continue;
        }
        let consistent = p.iter().all(|b| {
            let colors: std::collections::BTreeSet<_> =
                b.iter().filter_map(|&v| c.color(v)).collect();
            colors.len() <= 1
        }) && (1..=l0).all(|col| {
            let holders = p
                .iter()
                .filter(|b| b.iter().any(|&v| c.color(v) == Some(col)))
                .count();
            holders == 1
        });
        if consistent && p.len() >= l0 {
            m[p.len() - l0] += 1;
        }
    }
    m
}

/// `(x)(x-1)…(x-r+1)` over i128.
pub fn falling(x: i128, r: usize) -> i128 {
    (0..r as i128).map(|k| x - k).product()
}
