//! Partial proper colorings and the partition counts behind their
//! completion polynomial.

mod brute;
mod partitions;

pub use brute::count_completions_brute;
pub use partitions::{
    count_consistent_partitions, count_consistent_partitions_parallel,
    for_each_consistent_partition,
};

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A proper coloring of some of the vertices of a graph, in canonical form:
/// labels are `1..=lambda0`, numbered by first occurrence in increasing
/// vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    colors: Vec<Option<usize>>,
    colored: usize,
    lambda0: usize,
}

impl PartialColoring {
    /// Coloring with nothing colored.
    pub fn empty(vertex_count: usize) -> Self {
        PartialColoring {
            colors: vec![None; vertex_count],
            colored: 0,
            lambda0: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    /// Number of colored vertices (`t`).
    pub fn colored_count(&self) -> usize {
        self.colored
    }

    /// Number of distinct colors used (`λ0`).
    pub fn lambda0(&self) -> usize {
        self.lambda0
    }

    /// Degree of the completion polynomial, `N - t`.
    pub fn uncolored_count(&self) -> usize {
        self.colors.len() - self.colored
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.colors[v - 1]
    }

    pub fn is_total(&self) -> bool {
        self.colored == self.colors.len()
    }

    pub fn uncolored(&self) -> impl Iterator<Item = usize> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(k, _)| k + 1)
    }

    /// `(vertex, label)` pairs in vertex order.
    pub fn assignments(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.map(|c| (k + 1, c)))
    }

    /// Color classes; entry `k` holds the vertices labelled `k + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.lambda0];
        for (v, c) in self.assignments() {
            classes[c - 1].push(v);
        }
        classes
    }
}

/// Checks `assignments` against `g` and returns the canonical coloring.
pub fn validate_coloring<I>(g: &Graph, assignments: I) -> Result<PartialColoring>
where
    I: IntoIterator<Item = (usize, u64)>,
{
    let n = g.vertex_count();
    let mut raw: BTreeMap<usize, u64> = BTreeMap::new();
    for (v, label) in assignments {
        if !g.contains(v) {
            return Err(Error::ColoredVertexOutOfRange {
                vertex: v,
                vertex_count: n,
            });
        }
        if label == 0 {
            return Err(Error::ZeroColor(v));
        }
        if raw.insert(v, label).is_some() {
            return Err(Error::DuplicateVertex(v));
        }
    }
    for (&u, &cu) in &raw {
        if let Some(&w) = g
            .neighbors(u)
            .iter()
            .find(|&&w| w > u && raw.get(&w) == Some(&cu))
        {
            return Err(Error::Improper(u, w));
        }
    }
    let mut relabel: HashMap<u64, usize> = HashMap::new();
    let mut colors = vec![None; n];
    for (&v, &label) in &raw {
        let next = relabel.len() + 1;
        colors[v - 1] = Some(*relabel.entry(label).or_insert(next));
    }
    Ok(PartialColoring {
        colors,
        colored: raw.len(),
        lambda0: relabel.len(),
    })
}

/// Parses a coloring file: one `<vertex> <color>` pair per line, `#`
/// comments. Range checks happen in [`validate_coloring`].
pub fn read_coloring(text: &str) -> Result<Vec<(usize, u64)>> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [v, c] = fields[..] else {
            return Err(Error::parse(line_no, "expected \"<vertex> <color>\""));
        };
        let v: usize = v
            .parse()
            .map_err(|_| Error::parse(line_no, format!("vertex {v:?} is not an integer")))?;
        let c: u64 = c
            .parse()
            .map_err(|_| Error::parse(line_no, format!("color {c:?} is not an integer")))?;
        if c == 0 {
            return Err(Error::parse(line_no, "color labels must be positive"));
        }
        if let Some(first) = seen.insert(v, line_no) {
            return Err(Error::parse(
                line_no,
                format!("vertex {v} already colored on line {first}"),
            ));
        }
        out.push((v, c));
    }
    Ok(out)
}

/// A partition of all vertices into independent sets: a proper coloring
/// up to renaming of colors.
///
/// Blocks are kept sorted, and ordered by their smallest vertex, so two
/// partitions are equal exactly when their blocks are.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenericColoring {
    blocks: Vec<Vec<usize>>,
}

impl GenericColoring {
    /// Validates that `blocks` partition the vertices of `g` into
    /// nonempty independent sets. Returns `None` otherwise.
    pub fn new(g: &Graph, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut seen = vec![false; g.vertex_count()];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return None;
            }
            for &v in block.iter() {
                if !g.contains(v) || std::mem::replace(&mut seen[v - 1], true) {
                    return None;
                }
            }
            if !g.is_independent(block) {
                return None;
            }
            block.sort_unstable();
        }
        if seen.iter().any(|s| !s) {
            return None;
        }
        blocks.sort_unstable();
        Some(GenericColoring { blocks })
    }

    /// Builds from a block index per vertex (entry `v - 1`), indices `0..k`.
    pub(crate) fn from_assignment(block_of: &[usize], block_count: usize) -> Self {
        let mut blocks = vec![Vec::new(); block_count];
        for (k, &b) in block_of.iter().enumerate() {
            blocks[b].push(k + 1);
        }
        blocks.sort_unstable();
        GenericColoring { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Maps each color of `c` to the block holding its whole class, if the
    /// partition is consistent with `c`.
    pub fn consistency_witness(&self, c: &PartialColoring) -> Option<ConsistencyWitness> {
        let mut block_of_vertex = vec![0; c.vertex_count()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &v in block {
                block_of_vertex[v - 1] = b;
            }
        }
        let mut block_of_color: Vec<Option<usize>> = vec![None; c.lambda0()];
        let mut color_of_block: Vec<Option<usize>> = vec![None; self.blocks.len()];
        for (v, color) in c.assignments() {
            let b = block_of_vertex[v - 1];
            match block_of_color[color - 1] {
                None => block_of_color[color - 1] = Some(b),
                Some(prev) if prev != b => return None,
                _ => {}
            }
            match color_of_block[b] {
                None => color_of_block[b] = Some(color),
                Some(prev) if prev != color => return None,
                _ => {}
            }
        }
        Some(ConsistencyWitness {
            block_of_color: block_of_color.into_iter().map(Option::unwrap).collect(),
        })
    }
}

/// Evidence that a generic coloring extends a partial coloring: color
/// `k + 1` lives entirely in block `block_of_color[k]`, and distinct colors
/// use distinct blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyWitness {
    pub block_of_color: Vec<usize>,
}
