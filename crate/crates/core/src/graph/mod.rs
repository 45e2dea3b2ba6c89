//! Simple undirected graphs on vertices `1..=N` and the Sudoku graph family.

mod dimacs;

pub use dimacs::{read_graph, write_graph};

use crate::error::{Error, Result};

/// Simple undirected graph with 1-based vertices.
///
/// Immutable once built. Adjacency is a dense bit matrix, so `adjacent` is
/// O(1); neighbor lists are kept sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    matrix: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// merged.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Graph {
            vertex_count,
            matrix: vec![false; vertex_count * vertex_count],
            neighbors: vec![Vec::new(); vertex_count],
            edge_count: 0,
        };
        for (u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::VertexOutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert(u, v);
        }
        for list in &mut g.neighbors {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Graph with no edges.
    pub fn empty(vertex_count: usize) -> Result<Self> {
        Self::new(vertex_count, std::iter::empty())
    }

    fn insert(&mut self, u: usize, v: usize) {
        let n = self.vertex_count;
        let (a, b) = (u - 1, v - 1);
        if self.matrix[a * n + b] {
            return;
        }
        self.matrix[a * n + b] = true;
        self.matrix[b * n + a] = true;
        self.neighbors[a].push(v);
        self.neighbors[b].push(u);
        self.edge_count += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Vertices `1..=N`.
    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.vertex_count
    }

    /// Panics if either vertex is out of range.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        assert!(self.contains(u) && self.contains(v), "vertex out of range");
        self.matrix[(u - 1) * self.vertex_count + (v - 1)]
    }

    pub fn contains(&self, v: usize) -> bool {
        (1..=self.vertex_count).contains(&v)
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v - 1].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &u)| set[k + 1..].iter().all(|&v| u != v && !self.adjacent(u, v)))
    }

    /// True when `g` has every edge of `self` (same vertex set).
    pub fn is_subgraph_of(&self, g: &Graph) -> bool {
        self.vertex_count == g.vertex_count && self.edges().all(|(u, v)| g.adjacent(u, v))
    }
}

/// A cell of an `n² × n²` grid, with 1-based full-grid coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellId {
    pub rank: usize,
    pub row: usize,
    pub col: usize,
}

impl CellId {
    pub fn new(rank: usize, row: usize, col: usize) -> Self {
        let side = rank * rank;
        debug_assert!((1..=side).contains(&row) && (1..=side).contains(&col));
        CellId { rank, row, col }
    }

    /// Cell of the `(r, c)` entry in block `(i, j)`.
    pub fn from_block(rank: usize, i: usize, j: usize, r: usize, c: usize) -> Self {
        Self::new(rank, r + (i - 1) * rank, c + (j - 1) * rank)
    }

    /// Inverse of [`CellId::vertex`].
    pub fn from_vertex(rank: usize, vertex: usize) -> Self {
        let side = rank * rank;
        Self::new(rank, (vertex - 1) / side + 1, (vertex - 1) % side + 1)
    }

    pub fn side(&self) -> usize {
        self.rank * self.rank
    }

    /// Row-major vertex index in `1..=n⁴`.
    pub fn vertex(&self) -> usize {
        (self.row - 1) * self.side() + self.col
    }

    /// Block coordinates `(i, j)`.
    pub fn block(&self) -> (usize, usize) {
        (self.row.div_ceil(self.rank), self.col.div_ceil(self.rank))
    }

    /// Position `(r, c)` inside the block.
    pub fn within_block(&self) -> (usize, usize) {
        let (i, j) = self.block();
        (
            self.row - (i - 1) * self.rank,
            self.col - (j - 1) * self.rank,
        )
    }

    pub fn on_main_diagonal(&self) -> bool {
        self.row == self.col
    }

    pub fn on_anti_diagonal(&self) -> bool {
        self.row + self.col == self.side() + 1
    }
}

/// The Sudoku graph of rank `rank`: one vertex per cell of the `n² × n²`
/// grid, cells adjacent when they share a row, column or `n × n` block.
/// With `with_diagonals`, the main diagonal and the anti-diagonal are also
/// cliques.
pub fn sudoku_graph(rank: usize, with_diagonals: bool) -> Result<Graph> {
    if rank == 0 {
        return Err(Error::ZeroRank);
    }
    let side = rank * rank;
    let cells: Vec<CellId> = (1..=side)
        .flat_map(|row| (1..=side).map(move |col| CellId::new(rank, row, col)))
        .collect();
    let mut edges = Vec::new();
    for (k, a) in cells.iter().enumerate() {
        for b in &cells[k + 1..] {
            let linked = a.row == b.row
                || a.col == b.col
                || a.block() == b.block()
                || (with_diagonals
                    && ((a.on_main_diagonal() && b.on_main_diagonal())
                        || (a.on_anti_diagonal() && b.on_anti_diagonal())));
            if linked {
                edges.push((a.vertex(), b.vertex()));
            }
        }
    }
    Graph::new(side * side, edges)
}
