//! Sudoku squares whose two diagonals are also permutations, built from a
//! closed-form index formula over an `n × n` base block, plus a verifier
//! that checks every unit directly.

use std::fmt::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::CellId;

/// Least positive residue of `x` modulo `n`, in `1..=n`.
pub fn residue(x: i64, n: usize) -> usize {
    assert!(n > 0, "modulus must be positive");
    (x - 1).rem_euclid(n as i64) as usize + 1
}

/// An `n × n` arrangement `a(r, c)` of the symbols `1..=n²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseBlock {
    rank: usize,
    entries: Vec<usize>,
}

impl BaseBlock {
    /// `entries` is row-major and must be a permutation of `1..=rank²`.
    pub fn new(rank: usize, entries: Vec<usize>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let max = rank * rank;
        if entries.len() != max {
            return Err(Error::InvalidBase {
                max,
                reason: format!("expected {max} entries, got {}", entries.len()),
            });
        }
        let mut seen = vec![false; max + 1];
        for &e in &entries {
            if e == 0 || e > max {
                return Err(Error::InvalidBase {
                    max,
                    reason: format!("entry {e} out of range"),
                });
            }
            if std::mem::replace(&mut seen[e], true) {
                return Err(Error::InvalidBase {
                    max,
                    reason: format!("entry {e} repeated"),
                });
            }
        }
        Ok(BaseBlock { rank, entries })
    }

    /// `a(r, c) = (r - 1)·n + c`.
    pub fn row_major(rank: usize) -> Result<Self> {
        Self::new(rank, (1..=rank * rank).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a(r, c)` with `1 <= r, c <= n`.
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.entries[(r - 1) * self.rank + (c - 1)]
    }

    /// Parses `rank <n>` followed by `n` rows of `n` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let (rank, rows) = parse_square(text, |n| n)?;
        let entries = rows
            .into_iter()
            .map(|v| {
                usize::try_from(v).map_err(|_| Error::InvalidBase {
                    max: rank * rank,
                    reason: format!("entry {v} out of range"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, entries)
    }

    pub fn to_text(&self) -> String {
        write_square(self.rank, self.rank, self.entries.iter())
    }
}

/// An `n² × n²` grid with entries in `1..=n²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SudokuGrid {
    rank: usize,
    entries: Vec<u64>,
}

impl SudokuGrid {
    /// `entries` is row-major, `n⁴` values each in `1..=n²`.
    pub fn new(rank: usize, entries: Vec<u64>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        let side = rank * rank;
        if entries.len() != side * side {
            return Err(Error::parse(
                0,
                format!("expected {} entries, got {}", side * side, entries.len()),
            ));
        }
        if let Some(k) = entries.iter().position(|&e| e == 0 || e > side as u64) {
            return Err(Error::EntryOutOfRange {
                row: k / side + 1,
                col: k % side + 1,
                value: entries[k],
                max: side,
            });
        }
        Ok(SudokuGrid { rank, entries })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn side(&self) -> usize {
        self.rank * self.rank
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[(row - 1) * self.side() + (col - 1)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u64) -> Result<()> {
        let side = self.side();
        if value == 0 || value > side as u64 {
            return Err(Error::EntryOutOfRange {
                row,
                col,
                value,
                max: side,
            });
        }
        self.entries[(row - 1) * side + (col - 1)] = value;
        Ok(())
    }

    pub fn swap(&mut self, a: (usize, usize), b: (usize, usize)) {
        let side = self.side();
        self.entries
            .swap((a.0 - 1) * side + (a.1 - 1), (b.0 - 1) * side + (b.1 - 1));
    }

    /// Rows as vectors, top to bottom.
    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries
            .chunks(self.side())
            .map(<[u64]>::to_vec)
            .collect()
    }

    /// Parses `rank <n>` followed by `n²` rows of `n²` integers.
    pub fn parse(text: &str) -> Result<Self> {
        let (rank, entries) = parse_square(text, |n| n * n)?;
        Self::new(rank, entries)
    }

    pub fn to_text(&self) -> String {
        write_square(self.rank, self.side(), self.entries.iter())
    }
}

fn parse_square(text: &str, side_of: impl Fn(usize) -> usize) -> Result<(usize, Vec<u64>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing \"rank <n>\" line"))?;
    let rank = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["rank", n] => n.parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(|| {
            Error::parse(line_no, format!("rank {n:?} is not a positive integer"))
        })?,
        _ => return Err(Error::parse(line_no, "expected \"rank <n>\"")),
    };
    let side = side_of(rank);
    let mut entries = Vec::with_capacity(side * side);
    let mut rows = 0;
    for (line_no, line) in lines {
        rows += 1;
        if rows > side {
            return Err(Error::parse(line_no, format!("more than {side} rows")));
        }
        let before = entries.len();
        for field in line.split_whitespace() {
            let v = field.parse::<u64>().map_err(|_| {
                Error::parse(line_no, format!("{field:?} is not a nonnegative integer"))
            })?;
            entries.push(v);
        }
        if entries.len() - before != side {
            return Err(Error::parse(
                line_no,
                format!(
                    "row has {} entries, expected {side}",
                    entries.len() - before
                ),
            ));
        }
    }
    if rows != side {
        return Err(Error::parse(
            text.lines().count(),
            format!("{rows} rows, expected {side}"),
        ));
    }
    Ok((rank, entries))
}

fn write_square<'a, V: fmt::Display + 'a>(
    rank: usize,
    side: usize,
    values: impl Iterator<Item = &'a V>,
) -> String {
    let mut out = format!("rank {rank}\n");
    let values: Vec<_> = values.collect();
    for row in values.chunks(side) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

/// Symbol placed at the `(r, c)` entry of block `(i, j)`:
/// `a([r - i + j], [c + i - 1])`.
pub fn construct_entry(base: &BaseBlock, i: usize, j: usize, r: usize, c: usize) -> usize {
    let n = base.rank();
    debug_assert!([i, j, r, c].iter().all(|x| (1..=n).contains(x)));
    let row = residue(r as i64 - i as i64 + j as i64, n);
    let col = residue(c as i64 + i as i64 - 1, n);
    base.get(row, col)
}

/// Fills every block from `base` with [`construct_entry`].
pub fn construct_grid(base: &BaseBlock) -> SudokuGrid {
    let n = base.rank();
    let side = n * n;
    let mut entries = vec![0u64; side * side];
    for i in 1..=n {
        for j in 1..=n {
            for r in 1..=n {
                for c in 1..=n {
                    let cell = CellId::from_block(n, i, j, r, c);
                    entries[cell.vertex() - 1] = construct_entry(base, i, j, r, c) as u64;
                }
            }
        }
    }
    SudokuGrid { rank: n, entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Row,
    Column,
    Block,
    MainDiagonal,
    AntiDiagonal,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Row => "row",
            Family::Column => "column",
            Family::Block => "block",
            Family::MainDiagonal => "main diagonal",
            Family::AntiDiagonal => "anti-diagonal",
        })
    }
}

/// First repeated symbol in a unit. Rows, columns and blocks are indexed
/// `1..=n²` (blocks row-major); each diagonal has index 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub family: Family,
    pub index: usize,
    pub symbol: u64,
    /// Earlier and later occurrence, as `(row, col)`.
    pub cells: [(usize, usize); 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub rank: usize,
    pub diagonals_checked: bool,
    pub row_ok: bool,
    pub col_ok: bool,
    pub block_ok: bool,
    /// Vacuously true when diagonals were not checked.
    pub main_diag_ok: bool,
    pub anti_diag_ok: bool,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "ok" } else { "FAIL" };
        writeln!(f, "rank {}", self.rank)?;
        writeln!(f, "rows: {}", status(self.row_ok))?;
        writeln!(f, "columns: {}", status(self.col_ok))?;
        writeln!(f, "blocks: {}", status(self.block_ok))?;
        if self.diagonals_checked {
            writeln!(f, "main diagonal: {}", status(self.main_diag_ok))?;
            writeln!(f, "anti-diagonal: {}", status(self.anti_diag_ok))?;
        }
        for v in &self.violations {
            let [(r1, c1), (r2, c2)] = v.cells;
            writeln!(
                f,
                "{} {}: symbol {} at ({r1},{c1}) and ({r2},{c2})",
                v.family, v.index, v.symbol
            )?;
        }
        Ok(())
    }
}

type Unit = (Family, usize, Vec<(usize, usize)>);

/// Checks each row, column and block (and, optionally, both diagonals) for
/// repeated symbols. Units are reported in row, column, block, main
/// diagonal, anti-diagonal order.
pub fn verify_grid(grid: &SudokuGrid, check_diagonals: bool) -> VerificationReport {
    let n = grid.rank();
    let side = grid.side();
    let mut units: Vec<Unit> = Vec::new();
    for k in 1..=side {
        units.push((Family::Row, k, (1..=side).map(|c| (k, c)).collect()));
    }
    for k in 1..=side {
        units.push((Family::Column, k, (1..=side).map(|r| (r, k)).collect()));
    }
    for k in 1..=side {
        let (bi, bj) = ((k - 1) / n, (k - 1) % n);
        let cells = (1..=n)
            .flat_map(|r| (1..=n).map(move |c| (bi * n + r, bj * n + c)))
            .collect();
        units.push((Family::Block, k, cells));
    }
    if check_diagonals {
        units.push((
            Family::MainDiagonal,
            1,
            (1..=side).map(|k| (k, k)).collect(),
        ));
        units.push((
            Family::AntiDiagonal,
            1,
            (1..=side).map(|k| (k, side + 1 - k)).collect(),
        ));
    }

    let mut violations = Vec::new();
    let mut first_seen: Vec<Option<(usize, usize)>> = vec![None; side + 1];
    for (family, index, cells) in units {
        first_seen.iter_mut().for_each(|s| *s = None);
        for cell in cells {
            let symbol = grid.get(cell.0, cell.1);
            if let Some(prev) = first_seen[symbol as usize] {
                violations.push(Violation {
                    family,
                    index,
                    symbol,
                    cells: [prev, cell],
                });
                break;
            }
            first_seen[symbol as usize] = Some(cell);
        }
    }
    let ok = |fam: Family| violations.iter().all(|v| v.family != fam);
    VerificationReport {
        rank: n,
        diagonals_checked: check_diagonals,
        row_ok: ok(Family::Row),
        col_ok: ok(Family::Column),
        block_ok: ok(Family::Block),
        main_diag_ok: ok(Family::MainDiagonal),
        anti_diag_ok: ok(Family::AntiDiagonal),
        violations,
    }
}

/// Total coloring of the diagonal Sudoku graph: each cell's vertex gets
/// its symbol. Feed it to `validate_coloring` with
/// `sudoku_graph(n, true)`.
pub fn grid_as_coloring(grid: &SudokuGrid) -> Vec<(usize, u64)> {
    grid.entries
        .iter()
        .enumerate()
        .map(|(k, &s)| (k + 1, s))
        .collect()
}
