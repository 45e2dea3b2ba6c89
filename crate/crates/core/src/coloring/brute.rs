//! Completion counting by exhaustive search, independent of the partition
//! machinery.

use super::PartialColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::ExactInt;

struct Brute<'g> {
    graph: &'g Graph,
    order: Vec<usize>,
    colors: Vec<usize>,
    lambda: usize,
}

impl Brute<'_> {
    fn free_colors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let neighbors = self.graph.neighbors(v);
        (1..=self.lambda).filter(move |&col| neighbors.iter().all(|&w| self.colors[w - 1] != col))
    }

    fn run(&mut self, depth: usize) -> u128 {
        if depth == self.order.len() {
            return 1;
        }
        let v = self.order[depth];
        if depth + 1 == self.order.len() {
            return self.free_colors(v).count() as u128;
        }
        let choices: Vec<usize> = self.free_colors(v).collect();
        let mut total = 0;
        for col in choices {
            self.colors[v - 1] = col;
            total += self.run(depth + 1);
        }
        self.colors[v - 1] = 0;
        total
    }
}

/// Number of proper colorings of `g` with colors `1..=lambda` that agree
/// with `c` on its colored vertices.
///
/// Exponential in the number of uncolored vertices; fine for a couple of
/// dozen vertices.
pub fn count_completions_brute<T: ExactInt>(
    g: &Graph,
    c: &PartialColoring,
    lambda: u64,
) -> Result<T> {
    assert_eq!(
        g.vertex_count(),
        c.vertex_count(),
        "coloring is for a different graph"
    );
    if lambda < c.lambda0() as u64 {
        return Err(Error::LambdaBelowUsed {
            lambda,
            lambda0: c.lambda0(),
        });
    }
    let mut search = Brute {
        graph: g,
        order: c.uncolored().collect(),
        colors: g.vertices().map(|v| c.color(v).unwrap_or(0)).collect(),
        lambda: usize::try_from(lambda).map_err(|_| Error::Overflow)?,
    };
    T::try_from_u128(search.run(0))
}
