//! Fillings of composition and partition diagrams.
//!
//! Four kinds of filling are supported:
//!
//! * row-strict composition tableaux (RSCT): rows strictly decrease, the
//!   leftmost column weakly increases downwards, and the row-strict triple
//!   rule holds;
//! * column-strict composition tableaux (CSCT): rows weakly decrease, the
//!   leftmost column strictly increases, and the column-strict triple rule
//!   holds;
//! * reverse row-strict tableaux on partition shapes (rows strict, columns
//!   weakly decreasing);
//! * reverse column-strict tableaux on partition shapes (rows weak, columns
//!   strictly decreasing).
//!
//! The triple rules are stated on the zero-supplemented rectangle `F̂`. That
//! rectangle is never stored: [`Filling::hat`] reads out-of-shape cells as 0.
//!
//! Storage is 0-indexed; [`Cell`] prints 1-indexed `(row i, col k)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::compositions::{composition_from_subset, Composition, WeakComposition};
use crate::error::{QsymError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableauKind {
    Rsct,
    Csct,
    ReverseRowStrict,
    ReverseColumnStrict,
}

impl TableauKind {
    pub const ALL: [TableauKind; 4] = [
        TableauKind::Rsct,
        TableauKind::Csct,
        TableauKind::ReverseRowStrict,
        TableauKind::ReverseColumnStrict,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableauKind::Rsct => "RSCT",
            TableauKind::Csct => "CSCT",
            TableauKind::ReverseRowStrict => "ReverseRowStrict",
            TableauKind::ReverseColumnStrict => "ReverseColumnStrict",
        }
    }

    /// Reverse tableaux live on partition shapes only.
    pub fn needs_partition_shape(self) -> bool {
        matches!(self, TableauKind::ReverseRowStrict | TableauKind::ReverseColumnStrict)
    }
}

impl fmt::Display for TableauKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableauKind {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "rsct" => Ok(TableauKind::Rsct),
            "csct" => Ok(TableauKind::Csct),
            "rrs" | "reverserowstrict" | "reverse-row-strict" => Ok(TableauKind::ReverseRowStrict),
            "rcs" | "reversecolumnstrict" | "reverse-column-strict" => Ok(TableauKind::ReverseColumnStrict),
            _ => Err(alloc::format!("unknown tableau kind `{}`", s)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, col {})", self.row + 1, self.col + 1)
    }
}

/// A ragged array of positive entries together with the kind it claims to be.
///
/// [`Filling::new`] only checks the diagram (nonempty rows, positive entries,
/// partition shape for the reverse kinds); [`Filling::checked`] also runs the
/// kind's validity predicate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    kind: TableauKind,
    shape: Composition,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(kind: TableauKind, rows: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(row) = rows.iter().position(|r| r.is_empty() || r.contains(&0)) {
            return Err(QsymError::MalformedRow { row: row + 1 });
        }
        let shape = Composition::new(rows.iter().map(Vec::len).collect())?;
        if kind.needs_partition_shape() && !shape.is_partition() {
            return Err(QsymError::InvalidFilling { kind });
        }
        Ok(Filling { kind, shape, rows })
    }

    pub fn checked(kind: TableauKind, rows: Vec<Vec<u32>>) -> Result<Self> {
        let f = Self::new(kind, rows)?;
        if !f.is_valid() {
            return Err(QsymError::InvalidFilling { kind });
        }
        Ok(f)
    }

    pub fn empty(kind: TableauKind) -> Self {
        Filling { kind, shape: Composition::empty(), rows: Vec::new() }
    }

    /// Skips every check; callers guarantee the invariants.
    pub(crate) fn from_parts(kind: TableauKind, rows: Vec<Vec<u32>>) -> Self {
        let shape = Composition::new(rows.iter().map(Vec::len).collect()).expect("nonempty rows");
        Filling { kind, shape, rows }
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.degree()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.rows.get(cell.row).and_then(|r| r.get(cell.col)).copied()
    }

    /// Entry of the zero-supplemented diagram `F̂`.
    pub fn hat(&self, row: usize, col: usize) -> u32 {
        hat(&self.rows, row, col)
    }

    /// Entries of each column, top to bottom.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        columns_of(&self.rows)
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_valid(&self) -> bool {
        is_valid_as(&self.rows, self.kind)
    }

    pub fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for &e in self.rows.iter().flatten() {
            let e = e as usize;
            if e > n || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        true
    }

    pub fn weight(&self) -> WeakComposition {
        weight_of(&self.rows)
    }

    /// Applies `map` to every entry. `map` must be positive.
    pub fn map_entries(&self, mut map: impl FnMut(u32) -> u32) -> Filling {
        let rows = self.rows.iter().map(|r| r.iter().map(|&e| map(e)).collect()).collect();
        Filling { kind: self.kind, shape: self.shape.clone(), rows }
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind, self.rows)
    }
}

/// English-notation layout: left-justified rows, entries right-aligned to a
/// common width.
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let width = digits(self.max_entry());
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (k, e) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>w$}", e, w = width)?;
            }
        }
        Ok(())
    }
}

fn digits(mut x: u32) -> usize {
    let mut d = 1;
    while x >= 10 {
        x /= 10;
        d += 1;
    }
    d
}

pub(crate) fn hat(rows: &[Vec<u32>], row: usize, col: usize) -> u32 {
    rows.get(row).and_then(|r| r.get(col)).copied().unwrap_or(0)
}

pub(crate) fn columns_of(rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    (0..width).map(|k| rows.iter().filter_map(|r| r.get(k).copied()).collect()).collect()
}

pub(crate) fn weight_of(rows: &[Vec<u32>]) -> WeakComposition {
    let max = rows.iter().flatten().copied().max().unwrap_or(0) as usize;
    let mut w = vec![0; max];
    for &e in rows.iter().flatten() {
        w[e as usize - 1] += 1;
    }
    WeakComposition::new(w)
}

fn is_valid_as(rows: &[Vec<u32>], kind: TableauKind) -> bool {
    match kind {
        TableauKind::Rsct => rows_are_rsct(rows),
        TableauKind::Csct => rows_are_csct(rows),
        TableauKind::ReverseRowStrict => rows_are_reverse(rows, true),
        TableauKind::ReverseColumnStrict => rows_are_reverse(rows, false),
    }
}

fn rows_are_rsct(rows: &[Vec<u32>]) -> bool {
    if !rows.iter().all(|r| r.windows(2).all(|w| w[0] > w[1])) {
        return false;
    }
    if !rows.windows(2).all(|w| w[0][0] <= w[1][0]) {
        return false;
    }
    // (F̂(j,k) > F̂(i,k)) ⇒ F̂(j,k) ≥ F̂(i,k−1) for i < j, k ≥ 2.
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for j in 0..rows.len() {
        for i in 0..j {
            for k in 1..width {
                let b = hat(rows, j, k);
                if b > hat(rows, i, k) && b < hat(rows, i, k - 1) {
                    return false;
                }
            }
        }
    }
    true
}

fn rows_are_csct(rows: &[Vec<u32>]) -> bool {
    if !rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1])) {
        return false;
    }
    if !rows.windows(2).all(|w| w[0][0] < w[1][0]) {
        return false;
    }
    // (F̂(j,k) ≠ 0 and F̂(j,k) ≥ F̂(i,k)) ⇒ F̂(j,k) > F̂(i,k−1) for i < j, k ≥ 2.
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for j in 0..rows.len() {
        for i in 0..j {
            for k in 1..width {
                let b = hat(rows, j, k);
                if b != 0 && b >= hat(rows, i, k) && b <= hat(rows, i, k - 1) {
                    return false;
                }
            }
        }
    }
    true
}

fn rows_are_reverse(rows: &[Vec<u32>], row_strict: bool) -> bool {
    if !rows.windows(2).all(|w| w[0].len() >= w[1].len()) {
        return false;
    }
    let rows_ok = rows
        .iter()
        .all(|r| r.windows(2).all(|w| if row_strict { w[0] > w[1] } else { w[0] >= w[1] }));
    let cols_ok = rows.windows(2).all(|w| {
        w[1].iter().zip(&w[0]).all(|(&below, &above)| if row_strict { above >= below } else { above > below })
    });
    rows_ok && cols_ok
}

pub fn is_rsct(f: &Filling) -> bool {
    rows_are_rsct(f.rows())
}

pub fn is_csct(f: &Filling) -> bool {
    rows_are_csct(f.rows())
}

pub fn is_reverse_row_strict(f: &Filling) -> bool {
    rows_are_reverse(f.rows(), true)
}

pub fn is_reverse_column_strict(f: &Filling) -> bool {
    rows_are_reverse(f.rows(), false)
}

pub fn weight(f: &Filling) -> WeakComposition {
    f.weight()
}

/// Can `v` go into `(r, c)` given that every earlier cell in row-major order
/// is already filled? Each constraint of every kind involves cells no later
/// than its lowest-then-rightmost cell, so checking here is exact.
fn fits(rows: &[Vec<u32>], kind: TableauKind, r: usize, c: usize, v: u32) -> bool {
    let row = &rows[r];
    match kind {
        TableauKind::Rsct => {
            if c > 0 {
                if v >= row[c - 1] {
                    return false;
                }
                (0..r).all(|i| !(v > hat(rows, i, c) && v < hat(rows, i, c - 1)))
            } else {
                r == 0 || rows[r - 1][0] <= v
            }
        }
        TableauKind::Csct => {
            if c > 0 {
                if v > row[c - 1] {
                    return false;
                }
                (0..r).all(|i| !(v >= hat(rows, i, c) && v <= hat(rows, i, c - 1)))
            } else {
                r == 0 || rows[r - 1][0] < v
            }
        }
        TableauKind::ReverseRowStrict => {
            (c == 0 || v < row[c - 1]) && (r == 0 || v <= rows[r - 1][c])
        }
        TableauKind::ReverseColumnStrict => {
            (c == 0 || v <= row[c - 1]) && (r == 0 || v < rows[r - 1][c])
        }
    }
}

struct Search<'a, V> {
    shape: &'a [usize],
    kind: TableauKind,
    max_entry: u32,
    used: Option<Vec<bool>>,
    rows: Vec<Vec<u32>>,
    visit: V,
}

impl<V: FnMut(&[Vec<u32>])> Search<'_, V> {
    fn run(&mut self, r: usize, c: usize) {
        if r == self.shape.len() {
            (self.visit)(&self.rows);
            return;
        }
        let (nr, nc) = if c + 1 == self.shape[r] { (r + 1, 0) } else { (r, c + 1) };
        for v in 1..=self.max_entry {
            if let Some(used) = &self.used {
                if used[v as usize] {
                    continue;
                }
            }
            if !fits(&self.rows, self.kind, r, c, v) {
                continue;
            }
            self.rows[r].push(v);
            if let Some(used) = &mut self.used {
                used[v as usize] = true;
            }
            self.run(nr, nc);
            if let Some(used) = &mut self.used {
                used[v as usize] = false;
            }
            self.rows[r].pop();
        }
    }
}

/// Calls `visit` on every valid filling of `shape` of the given kind with
/// entries in `[1, max_entry]`, in row-major lexicographic order. With
/// `standard`, only fillings using each of `1..=|shape|` once are visited
/// (and `max_entry` is ignored).
pub fn for_each_filling(
    shape: &Composition,
    kind: TableauKind,
    max_entry: u32,
    standard: bool,
    visit: impl FnMut(&[Vec<u32>]),
) {
    if kind.needs_partition_shape() && !shape.is_partition() {
        return;
    }
    let n = shape.degree();
    let max_entry = if standard { n as u32 } else { max_entry };
    let mut search = Search {
        shape: shape.parts(),
        kind,
        max_entry,
        used: standard.then(|| vec![false; n + 1]),
        rows: shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect(),
        visit,
    };
    search.run(0, 0);
}

pub fn enumerate_fillings(shape: &Composition, kind: TableauKind, max_entry: u32) -> Vec<Filling> {
    let mut out = Vec::new();
    for_each_filling(shape, kind, max_entry, false, |rows| out.push(Filling::from_parts(kind, rows.to_vec())));
    out
}

pub fn enumerate_standard(shape: &Composition, kind: TableauKind) -> Vec<Filling> {
    let mut out = Vec::new();
    for_each_filling(shape, kind, 0, true, |rows| out.push(Filling::from_parts(kind, rows.to_vec())));
    out
}

/// Replaces equal entries by consecutive integers, smallest value first, in
/// the kind's tie order:
///
/// * reverse row-strict: bottom to top;
/// * reverse column-strict: right to left;
/// * RSCT: columns left to right, each column bottom to top except the
///   leftmost, which goes top to bottom;
/// * CSCT: columns right to left.
pub fn standardize(f: &Filling) -> Result<Filling> {
    if !f.is_valid() {
        return Err(QsymError::InvalidFilling { kind: f.kind() });
    }
    let mut cells: Vec<(u32, (usize, usize), Cell)> = Vec::with_capacity(f.size());
    for (r, row) in f.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let n = usize::MAX;
            let key = match f.kind() {
                TableauKind::ReverseRowStrict => (n - r, n - c),
                TableauKind::ReverseColumnStrict => (n - c, n - r),
                TableauKind::Rsct if c == 0 => (0, r),
                TableauKind::Rsct => (c, n - r),
                TableauKind::Csct => (n - c, r),
            };
            cells.push((v, key, Cell::new(r, c)));
        }
    }
    cells.sort_unstable();
    let mut rows: Vec<Vec<u32>> = f.rows().to_vec();
    for (label, (_, _, cell)) in cells.iter().enumerate() {
        rows[cell.row][cell.col] = label as u32 + 1;
    }
    Ok(Filling::from_parts(f.kind(), rows))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DescentFlavor {
    /// `i + 1` sits in a column weakly right of `i`.
    Descent,
    /// `i + 1` sits in a column strictly left of `i`.
    TransposeDescent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSet {
    pub flavor: DescentFlavor,
    pub size: usize,
    pub elements: Vec<usize>,
}

impl DescentSet {
    /// `β(D)`, the composition of `size` with partial-sum set `D`.
    pub fn composition(&self) -> Composition {
        composition_from_subset(&self.elements, self.size).expect("descents lie in [n-1]")
    }
}

pub fn descent_set(t: &Filling, flavor: DescentFlavor) -> Result<DescentSet> {
    let n = t.size();
    if !t.is_standard() {
        return Err(QsymError::NotStandard { cells: n });
    }
    let mut col_of = vec![0usize; n + 1];
    for row in t.rows() {
        for (c, &e) in row.iter().enumerate() {
            col_of[e as usize] = c;
        }
    }
    let elements = (1..n)
        .filter(|&i| match flavor {
            DescentFlavor::Descent => col_of[i + 1] >= col_of[i],
            DescentFlavor::TransposeDescent => col_of[i + 1] < col_of[i],
        })
        .collect();
    Ok(DescentSet { flavor, size: n, elements })
}

/// Cells in reading order: columns right to left, each column top to bottom.
/// With `modified`, each row also carries a virtual cell just past its
/// rightmost entry; those appear with value 0.
pub fn reading_order(rows: &[Vec<u32>], modified: bool) -> Vec<(Cell, u32)> {
    let extra = usize::from(modified);
    let width = rows.iter().map(|r| r.len() + extra).max().unwrap_or(0);
    let mut out = Vec::new();
    for k in (0..width).rev() {
        for (i, row) in rows.iter().enumerate() {
            if let Some(&e) = row.get(k) {
                out.push((Cell::new(i, k), e));
            } else if modified && k == row.len() {
                out.push((Cell::new(i, k), 0));
            }
        }
    }
    out
}

pub fn reading_word(f: &Filling, modified: bool) -> Vec<u32> {
    reading_order(f.rows(), modified).into_iter().map(|(_, e)| e).collect()
}
