//! Dual Schensted insertion and its extension to row-strict composition
//! tableaux.
//!
//! [`dual_row_insert`] inserts into a reverse row-strict tableau: in each row,
//! the largest entry `y ≤ x` is replaced by `x` and bumped into the next row.
//!
//! [`rsct_insert`] (`F ⤙ x`) scans the modified reading word `read(F̃)` for
//! the first `y ≤ x` whose left neighbour exceeds `x`. It replaces `y`. A
//! virtual zero ends the insertion; otherwise the scan continues with `y`
//! from just after the replaced cell. Without such a `y`, `x` becomes a new
//! one-cell row directly below the last leftmost-column entry `≤ x`.
//!
//! The two commute with `ρ`: `ρ(T ← x) = ρ(T) ⤙ x`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bijections::rho_row;
use crate::error::{QsymError, Result};
use crate::tableaux::{reading_order, Cell, Filling, TableauKind};

/// One replacement performed by [`rsct_insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionStep {
    /// The value being inserted at this step.
    pub inserting: u32,
    /// The part of the modified reading word still to be scanned.
    pub remaining_word: Vec<u32>,
    pub cell: Cell,
    /// The entry that was displaced: 0 for a virtual cell or a new row.
    pub replaced: u32,
    /// Rows after the step.
    pub snapshot: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionResult {
    pub result: Filling,
    /// Affected cells in execution order; the last one is `new_cell`.
    pub path: Vec<Cell>,
    pub new_cell: Cell,
    /// Entries displaced along the way, in order.
    pub bumped: Vec<u32>,
    pub steps: Vec<InsertionStep>,
}

fn require(f: &Filling, kind: TableauKind) -> Result<()> {
    if f.kind() != kind {
        return Err(QsymError::WrongKind { expected: kind, found: f.kind() });
    }
    if !f.is_valid() {
        return Err(QsymError::InvalidFilling { kind });
    }
    Ok(())
}

/// `T ← x`.
pub fn dual_row_insert(t: &Filling, x: u32) -> Result<InsertionResult> {
    require(t, TableauKind::ReverseRowStrict)?;
    if x == 0 {
        return Err(QsymError::MalformedRow { row: 0 });
    }
    let mut rows = t.rows().to_vec();
    let mut path = Vec::new();
    let mut bumped = Vec::new();
    let mut x = x;
    let mut r = 0;
    let new_cell = loop {
        if r == rows.len() {
            rows.push(alloc::vec![x]);
            break Cell::new(r, 0);
        }
        // rows strictly decrease, so the largest y ≤ x is the leftmost one
        match rows[r].iter().position(|&y| y <= x) {
            Some(k) => {
                let y = core::mem::replace(&mut rows[r][k], x);
                path.push(Cell::new(r, k));
                bumped.push(y);
                x = y;
                r += 1;
            }
            None => {
                rows[r].push(x);
                break Cell::new(r, rows[r].len() - 1);
            }
        }
    };
    path.push(new_cell);
    Ok(InsertionResult {
        result: Filling::from_parts(TableauKind::ReverseRowStrict, rows),
        path,
        new_cell,
        bumped,
        steps: Vec::new(),
    })
}

/// `F ⤙ x`.
pub fn rsct_insert(f: &Filling, x: u32) -> Result<InsertionResult> {
    require(f, TableauKind::Rsct)?;
    if x == 0 {
        return Err(QsymError::MalformedRow { row: 0 });
    }
    let mut rows = f.rows().to_vec();
    // The diagram only changes at the final step, so the order is fixed.
    let order: Vec<Cell> = reading_order(&rows, true).into_iter().map(|(c, _)| c).collect();
    let value = |rows: &[Vec<u32>], c: Cell| rows[c.row].get(c.col).copied().unwrap_or(0);

    let mut path = Vec::new();
    let mut bumped = Vec::new();
    let mut steps = Vec::new();
    let mut x = x;
    let mut pos = 0;
    loop {
        let remaining_word: Vec<u32> = order[pos..].iter().map(|&c| value(&rows, c)).collect();
        let hit = order[pos..]
            .iter()
            .take_while(|c| c.col > 0)
            .position(|&c| value(&rows, c) <= x && rows[c.row][c.col - 1] > x)
            .map(|i| pos + i);

        let Some(idx) = hit else {
            let at = rows.iter().rposition(|r| r[0] <= x).map_or(0, |i| i + 1);
            rows.insert(at, alloc::vec![x]);
            let cell = Cell::new(at, 0);
            path.push(cell);
            steps.push(InsertionStep { inserting: x, remaining_word, cell, replaced: 0, snapshot: rows.clone() });
            return Ok(finish(rows, path, cell, bumped, steps));
        };

        let cell = order[idx];
        let y = value(&rows, cell);
        path.push(cell);
        if y == 0 {
            rows[cell.row].push(x);
            steps.push(InsertionStep { inserting: x, remaining_word, cell, replaced: 0, snapshot: rows.clone() });
            return Ok(finish(rows, path, cell, bumped, steps));
        }
        rows[cell.row][cell.col] = x;
        steps.push(InsertionStep { inserting: x, remaining_word, cell, replaced: y, snapshot: rows.clone() });
        bumped.push(y);
        x = y;
        pos = idx + 1;
    }
}

fn finish(
    rows: Vec<Vec<u32>>,
    path: Vec<Cell>,
    new_cell: Cell,
    bumped: Vec<u32>,
    steps: Vec<InsertionStep>,
) -> InsertionResult {
    InsertionResult { result: Filling::from_parts(TableauKind::Rsct, rows), path, new_cell, bumped, steps }
}

/// Does `ρ(T ← x) = ρ(T) ⤙ x` hold for this `T` and `x`?
pub fn check_commutation(t: &Filling, x: u32) -> Result<bool> {
    let lhs = rho_row(&dual_row_insert(t, x)?.result)?;
    let rhs = rsct_insert(&rho_row(t)?, x)?.result;
    Ok(lhs == rhs)
}

/// A finitely supported matrix of nonnegative integers indexed by pairs of
/// positive integers. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiwordMatrix {
    entries: BTreeMap<(u32, u32), u32>,
}

impl BiwordMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    /// Row `i` of `dense` becomes matrix row `i + 1`.
    pub fn from_dense(dense: &[Vec<u32>]) -> Self {
        let mut m = Self::new();
        for (i, row) in dense.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i as u32 + 1, j as u32 + 1, v);
            }
        }
        m
    }

    pub fn set(&mut self, row: u32, col: u32, value: u32) {
        assert!(row > 0 && col > 0, "indices are positive");
        if value == 0 {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: u32, col: u32) -> u32 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|&v| u64::from(v)).sum()
    }

    pub fn transpose(&self) -> Self {
        BiwordMatrix { entries: self.entries.iter().map(|(&(i, j), &v)| ((j, i), v)).collect() }
    }

    /// Biletters `(top, bottom)`, each repeated by its multiplicity, in
    /// lexicographic order: top weakly increasing, then bottom weakly
    /// increasing.
    pub fn biword(&self) -> Vec<(u32, u32)> {
        self.entries
            .iter()
            .flat_map(|(&pair, &count)| core::iter::repeat_n(pair, count as usize))
            .collect()
    }
}

/// Inserts the bottom line of the biword of `a`, left to right, into the
/// empty RSCT.
pub fn insertion_tableau(a: &BiwordMatrix) -> Result<Filling> {
    a.biword()
        .into_iter()
        .try_fold(Filling::empty(TableauKind::Rsct), |f, (_, bottom)| Ok(rsct_insert(&f, bottom)?.result))
}

/// `(F, G)` with `F` the insertion tableau of `a` and `G` that of `aᵀ`.
pub fn rsk_pair(a: &BiwordMatrix) -> Result<(Filling, Filling)> {
    Ok((insertion_tableau(a)?, insertion_tableau(&a.transpose())?))
}
