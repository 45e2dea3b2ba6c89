//! Restricted-growth enumeration of partitions into independent sets that
//! extend a partial coloring.
//!
//! The seed partition has one block per color class of the partial
//! coloring. Uncolored vertices are then placed in increasing order, each
//! either into an existing block with no neighbor in it or into a fresh
//! block. Every consistent partition is reached exactly once.

use rayon::prelude::*;

use super::{GenericColoring, PartialColoring};
use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::ExactInt;

const UNASSIGNED: usize = usize::MAX;

#[derive(Clone)]
struct Search<'g> {
    graph: &'g Graph,
    order: Vec<usize>,
    block_of: Vec<usize>,
    blocks: usize,
    stamp: Vec<u64>,
    generation: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, c: &PartialColoring) -> Self {
        assert_eq!(
            g.vertex_count(),
            c.vertex_count(),
            "coloring is for a different graph"
        );
        let block_of = (1..=g.vertex_count())
            .map(|v| c.color(v).map_or(UNASSIGNED, |color| color - 1))
            .collect();
        Search {
            graph: g,
            order: c.uncolored().collect(),
            block_of,
            blocks: c.lambda0(),
            stamp: vec![0; g.vertex_count() + 1],
            generation: 0,
        }
    }

    /// Blocks that `v` may join without meeting a neighbor.
    fn allowed_blocks(&mut self, v: usize) -> Vec<usize> {
        self.generation += 1;
        let gen = self.generation;
        for &w in self.graph.neighbors(v) {
            let b = self.block_of[w - 1];
            if b != UNASSIGNED {
                self.stamp[b] = gen;
            }
        }
        (0..self.blocks).filter(|&b| self.stamp[b] != gen).collect()
    }

    fn count(&mut self, depth: usize, lambda0: usize, counts: &mut [u128]) {
        if depth == self.order.len() {
            counts[self.blocks - lambda0] += 1;
            return;
        }
        let v = self.order[depth];
        let allowed = self.allowed_blocks(v);
        if depth + 1 == self.order.len() {
            counts[self.blocks - lambda0] += allowed.len() as u128;
            counts[self.blocks + 1 - lambda0] += 1;
            return;
        }
        for b in allowed {
            self.block_of[v - 1] = b;
            self.count(depth + 1, lambda0, counts);
        }
        self.block_of[v - 1] = self.blocks;
        self.blocks += 1;
        self.count(depth + 1, lambda0, counts);
        self.blocks -= 1;
        self.block_of[v - 1] = UNASSIGNED;
    }

    fn visit<F: FnMut(&GenericColoring)>(&mut self, depth: usize, f: &mut F) {
        if depth == self.order.len() {
            f(&GenericColoring::from_assignment(
                &self.block_of,
                self.blocks,
            ));
            return;
        }
        let v = self.order[depth];
        for b in self.allowed_blocks(v) {
            self.block_of[v - 1] = b;
            self.visit(depth + 1, f);
        }
        self.block_of[v - 1] = self.blocks;
        self.blocks += 1;
        self.visit(depth + 1, f);
        self.blocks -= 1;
        self.block_of[v - 1] = UNASSIGNED;
    }

    /// All one-step extensions of the current prefix.
    fn children(&mut self, depth: usize) -> Vec<(Vec<usize>, usize)> {
        let v = self.order[depth];
        let mut out = Vec::new();
        for b in self.allowed_blocks(v) {
            let mut block_of = self.block_of.clone();
            block_of[v - 1] = b;
            out.push((block_of, self.blocks));
        }
        let mut block_of = self.block_of.clone();
        block_of[v - 1] = self.blocks;
        out.push((block_of, self.blocks + 1));
        out
    }
}

fn convert<T: ExactInt>(counts: Vec<u128>) -> Result<Vec<T>> {
    counts.into_iter().map(T::try_from_u128).collect()
}

/// `m[r]` for `r = 0..=N-t`: the number of partitions of the vertices into
/// exactly `λ0 + r` independent sets that are consistent with `c`.
///
/// Panics if `c` was built for a graph of a different order. `c` must be
/// proper on `g` (as returned by `validate_coloring`).
pub fn count_consistent_partitions<T: ExactInt>(g: &Graph, c: &PartialColoring) -> Result<Vec<T>> {
    let mut search = Search::new(g, c);
    let mut counts = vec![0u128; c.uncolored_count() + 1];
    search.count(0, c.lambda0(), &mut counts);
    convert(counts)
}

/// Same result as [`count_consistent_partitions`], with the search tree
/// split across `threads` worker threads.
pub fn count_consistent_partitions_parallel<T: ExactInt>(
    g: &Graph,
    c: &PartialColoring,
    threads: usize,
) -> Result<Vec<T>> {
    if threads <= 1 {
        return count_consistent_partitions(g, c);
    }
    let lambda0 = c.lambda0();
    let len = c.uncolored_count() + 1;
    let root = Search::new(g, c);
    let target = threads * 16;

    let mut frontier = vec![(root.block_of.clone(), root.blocks)];
    let mut depth = 0;
    while frontier.len() < target && depth < root.order.len() {
        frontier = frontier
            .into_iter()
            .flat_map(|(block_of, blocks)| {
                let mut s = Search {
                    block_of,
                    blocks,
                    ..root.clone()
                };
                s.children(depth)
            })
            .collect();
        depth += 1;
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("failed to start worker threads");
    let counts = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|(block_of, blocks)| {
                let mut s = Search {
                    block_of,
                    blocks,
                    ..root.clone()
                };
                let mut counts = vec![0u128; len];
                s.count(depth, lambda0, &mut counts);
                counts
            })
            .reduce(
                || vec![0u128; len],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    });
    convert(counts)
}

/// Calls `f` once for every partition into independent sets consistent
/// with `c`.
pub fn for_each_consistent_partition<F>(g: &Graph, c: &PartialColoring, mut f: F)
where
    F: FnMut(&GenericColoring),
{
    Search::new(g, c).visit(0, &mut f);
}
