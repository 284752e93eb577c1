//! Bijections between reverse tableaux and composition tableaux.
//!
//! * `ρ` ([`rho_row`]): reverse row-strict tableau → RSCT. The first column is
//!   sorted weakly increasing; each later column is placed largest entry
//!   first, into the highest free row whose left neighbour is strictly larger.
//! * `ρ_c` ([`rho_col`]): reverse column-strict tableau → CSCT, the same
//!   procedure with a weak left-neighbour test.
//! * The inverses sort every column into decreasing order.
//! * `τ` ([`transpose`]) reflects a reverse tableau in its main diagonal.
//! * `φ` ([`phi`]): CSCT → RSCT on the conjugate underlying partition, built
//!   from the collections of `j`-th largest column entries.
//!
//! All maps preserve the multiset of entries in every column.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{QsymError, Result};
use crate::tableaux::{columns_of, Cell, Filling, TableauKind};

/// One entry written into one cell of the output diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Placement {
    pub entry: u32,
    pub cell: Cell,
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry {} -> {}", self.entry, self.cell)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionTrace {
    pub input: Filling,
    pub output: Filling,
    pub steps: Vec<Placement>,
}

impl BijectionTrace {
    /// Rebuilds the output rows from the recorded placements alone.
    pub fn replay(&self) -> Result<Vec<Vec<u32>>> {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for step in &self.steps {
            let Cell { row, col } = step.cell;
            while rows.len() <= row {
                rows.push(Vec::new());
            }
            if rows[row].len() != col {
                return Err(QsymError::Invariant(format!("placement into non-adjacent cell {}", step.cell)));
            }
            rows[row].push(step.entry);
        }
        Ok(rows)
    }
}

/// The maps a trace can be requested for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BijectionMap {
    RhoRow,
    RhoRowInv,
    RhoCol,
    RhoColInv,
    Transpose,
    Phi,
    PhiInv,
}

fn expect(f: &Filling, kind: TableauKind) -> Result<()> {
    if f.kind() != kind {
        return Err(QsymError::WrongKind { expected: kind, found: f.kind() });
    }
    if !f.is_valid() {
        return Err(QsymError::InvalidFilling { kind });
    }
    Ok(())
}

/// Column-by-column insertion shared by `ρ` and `ρ_c`.
fn place_columns(
    columns: &[Vec<u32>],
    strict: bool,
    mut trace: Option<&mut Vec<Placement>>,
) -> Result<Vec<Vec<u32>>> {
    let Some(first) = columns.first() else {
        return Ok(Vec::new());
    };
    let mut first = first.clone();
    first.sort_unstable();
    let mut rows: Vec<Vec<u32>> = first.iter().map(|&e| alloc::vec![e]).collect();
    if let Some(t) = trace.as_deref_mut() {
        t.extend(first.iter().enumerate().map(|(i, &entry)| Placement { entry, cell: Cell::new(i, 0) }));
    }
    for (k, column) in columns.iter().enumerate().skip(1) {
        let mut column = column.clone();
        column.sort_unstable_by(|a, b| b.cmp(a));
        for e in column {
            let row = rows
                .iter()
                .position(|r| r.len() == k && if strict { r[k - 1] > e } else { r[k - 1] >= e })
                .ok_or_else(|| QsymError::Invariant(format!("no row accepts entry {} in column {}", e, k + 1)))?;
            rows[row].push(e);
            if let Some(t) = trace.as_deref_mut() {
                t.push(Placement { entry: e, cell: Cell::new(row, k) });
            }
        }
    }
    Ok(rows)
}

/// Sorts every column into decreasing order; the result is partition-shaped.
fn sort_columns(rows: &[Vec<u32>], mut trace: Option<&mut Vec<Placement>>) -> Vec<Vec<u32>> {
    let mut columns = columns_of(rows);
    let height = columns.first().map_or(0, Vec::len);
    let mut out: Vec<Vec<u32>> = alloc::vec![Vec::new(); height];
    for (k, column) in columns.iter_mut().enumerate() {
        column.sort_unstable_by(|a, b| b.cmp(a));
        for (i, &e) in column.iter().enumerate() {
            out[i].push(e);
            if let Some(t) = trace.as_deref_mut() {
                t.push(Placement { entry: e, cell: Cell::new(i, k) });
            }
        }
    }
    out
}

fn rho_row_with(t: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    expect(t, TableauKind::ReverseRowStrict)?;
    let rows = place_columns(&t.columns(), true, trace)?;
    Ok(Filling::from_parts(TableauKind::Rsct, rows))
}

fn rho_row_inv_with(f: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    expect(f, TableauKind::Rsct)?;
    Ok(Filling::from_parts(TableauKind::ReverseRowStrict, sort_columns(f.rows(), trace)))
}

fn rho_col_with(t: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    expect(t, TableauKind::ReverseColumnStrict)?;
    let rows = place_columns(&t.columns(), false, trace)?;
    Ok(Filling::from_parts(TableauKind::Csct, rows))
}

fn rho_col_inv_with(f: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    expect(f, TableauKind::Csct)?;
    Ok(Filling::from_parts(TableauKind::ReverseColumnStrict, sort_columns(f.rows(), trace)))
}

fn transpose_with(t: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    let kind = match t.kind() {
        TableauKind::ReverseRowStrict => TableauKind::ReverseColumnStrict,
        TableauKind::ReverseColumnStrict => TableauKind::ReverseRowStrict,
        other => return Err(QsymError::WrongKind { expected: TableauKind::ReverseRowStrict, found: other }),
    };
    expect(t, t.kind())?;
    let rows = t.columns();
    if let Some(tr) = trace {
        for (i, row) in rows.iter().enumerate() {
            tr.extend(row.iter().enumerate().map(|(k, &entry)| Placement { entry, cell: Cell::new(i, k) }));
        }
    }
    Ok(Filling::from_parts(kind, rows))
}

fn phi_with(f: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    expect(f, TableauKind::Csct)?;
    collections_with(f.rows(), trace)
}

fn collections_with(rows: &[Vec<u32>], mut trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    let mut columns = columns_of(rows);
    for column in &mut columns {
        column.sort_unstable_by(|a, b| b.cmp(a));
    }
    let depth = columns.first().map_or(0, Vec::len);
    // C_j: the j-th largest entry of every column long enough to have one.
    let collections: Vec<Vec<u32>> =
        (0..depth).map(|j| columns.iter().filter_map(|c| c.get(j).copied()).collect()).collect();

    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (j, collection) in collections.into_iter().enumerate() {
        let mut collection = collection;
        if j == 0 {
            collection.sort_unstable();
            for (i, &e) in collection.iter().enumerate() {
                rows.push(alloc::vec![e]);
                if let Some(t) = trace.as_deref_mut() {
                    t.push(Placement { entry: e, cell: Cell::new(i, 0) });
                }
            }
            continue;
        }
        collection.sort_unstable_by(|a, b| b.cmp(a));
        for e in collection {
            let row = rows
                .iter()
                .position(|r| r.len() == j && r[j - 1] > e)
                .ok_or_else(|| QsymError::Invariant(format!("phi: no position for {} in column {}", e, j + 1)))?;
            rows[row].push(e);
            if let Some(t) = trace.as_deref_mut() {
                t.push(Placement { entry: e, cell: Cell::new(row, j) });
            }
        }
    }
    Ok(Filling::from_parts(TableauKind::Rsct, rows))
}

fn phi_inv_with(f: &Filling, trace: Option<&mut Vec<Placement>>) -> Result<Filling> {
    let t = transpose(&rho_row_inv(f)?)?;
    rho_col_with(&t, trace)
}

pub fn rho_row(t: &Filling) -> Result<Filling> {
    rho_row_with(t, None)
}

pub fn rho_row_inv(f: &Filling) -> Result<Filling> {
    rho_row_inv_with(f, None)
}

pub fn rho_col(t: &Filling) -> Result<Filling> {
    rho_col_with(t, None)
}

pub fn rho_col_inv(f: &Filling) -> Result<Filling> {
    rho_col_inv_with(f, None)
}

/// Conjugates a reverse tableau; reverse row-strict and reverse
/// column-strict swap.
pub fn transpose(t: &Filling) -> Result<Filling> {
    transpose_with(t, None)
}

pub fn phi(f: &Filling) -> Result<Filling> {
    phi_with(f, None)
}

/// The collection insertion behind [`phi`], run on raw rows without checking
/// that they form a CSCT. Fails only when some entry has no admissible cell.
pub fn collection_insert(rows: &[Vec<u32>]) -> Result<Filling> {
    collections_with(rows, None)
}

/// `φ⁻¹ = ρ_c ∘ τ ∘ ρ⁻¹`.
pub fn phi_inv(f: &Filling) -> Result<Filling> {
    phi_inv_with(f, None)
}

/// `ρ ∘ τ ∘ ρ_c⁻¹`, the composite that the direct `φ` must agree with.
pub fn phi_composite(f: &Filling) -> Result<Filling> {
    rho_row(&transpose(&rho_col_inv(f)?)?)
}

pub fn trace(map: BijectionMap, input: &Filling) -> Result<BijectionTrace> {
    let mut steps = Vec::new();
    let s = Some(&mut steps);
    let output = match map {
        BijectionMap::RhoRow => rho_row_with(input, s),
        BijectionMap::RhoRowInv => rho_row_inv_with(input, s),
        BijectionMap::RhoCol => rho_col_with(input, s),
        BijectionMap::RhoColInv => rho_col_inv_with(input, s),
        BijectionMap::Transpose => transpose_with(input, s),
        BijectionMap::Phi => phi_with(input, s),
        BijectionMap::PhiInv => phi_inv_with(input, s),
    }?;
    Ok(BijectionTrace { input: input.clone(), output, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn fill(kind: TableauKind, rows: &[&[u32]]) -> Filling {
        Filling::checked(kind, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn ex_map() -> Filling {
        fill(TableauKind::ReverseRowStrict, &[&[7, 6, 5, 4, 2], &[7, 5, 3, 1], &[6, 4, 2, 1], &[2]])
    }

    #[test]
    fn rho_on_figure() {
        let f = rho_row(&ex_map()).unwrap();
        assert_eq!(f.rows(), &[vec![2], vec![6, 5, 3, 1], vec![7, 6, 5, 4, 2], vec![7, 4, 2, 1]]);
        assert!(f.is_valid());
        assert_eq!(rho_row_inv(&f).unwrap(), ex_map());
    }

    #[test]
    fn rho_small_cases() {
        let col = fill(TableauKind::ReverseRowStrict, &[&[3], &[2], &[1]]);
        assert_eq!(rho_row(&col).unwrap().rows(), &[vec![1], vec![2], vec![3]]);
        let row = fill(TableauKind::ReverseRowStrict, &[&[3, 2, 1]]);
        assert_eq!(rho_row(&row).unwrap().rows(), row.rows());
        let one = fill(TableauKind::Rsct, &[&[4]]);
        assert_eq!(rho_row_inv(&one).unwrap().rows(), one.rows());
        let fig_row = fill(TableauKind::Rsct, &[&[2, 1], &[2], &[3, 2], &[3]]);
        assert_eq!(rho_row_inv(&fig_row).unwrap().rows(), &[vec![3, 2], vec![3, 1], vec![2], vec![2]]);
        assert_eq!(rho_row(&Filling::empty(TableauKind::ReverseRowStrict)).unwrap().size(), 0);
    }

    #[test]
    fn rho_rejects_wrong_input() {
        let f = fill(TableauKind::Rsct, &[&[2, 1]]);
        assert!(matches!(rho_row(&f), Err(QsymError::WrongKind { .. })));
        let bad = Filling::new(TableauKind::ReverseRowStrict, vec![vec![1, 2]]).unwrap();
        assert!(matches!(rho_row(&bad), Err(QsymError::InvalidFilling { .. })));
    }

    #[test]
    fn rho_col_small_cases() {
        let row = fill(TableauKind::ReverseColumnStrict, &[&[3, 2, 2]]);
        assert_eq!(rho_col(&row).unwrap().rows(), row.rows());
        let col = fill(TableauKind::ReverseColumnStrict, &[&[3], &[2], &[1]]);
        assert_eq!(rho_col(&col).unwrap().rows(), &[vec![1], vec![2], vec![3]]);
        let csct = fill(TableauKind::Csct, &[&[2, 1, 1], &[5, 5, 5, 3, 1], &[6, 4, 3, 2]]);
        assert_eq!(rho_col(&rho_col_inv(&csct).unwrap()).unwrap(), csct);
    }

    #[test]
    fn transpose_cases() {
        let t = fill(TableauKind::ReverseRowStrict, &[&[2, 1], &[1]]);
        let tt = transpose(&t).unwrap();
        assert_eq!(tt.kind(), TableauKind::ReverseColumnStrict);
        assert_eq!(tt.rows(), t.rows());
        let row = fill(TableauKind::ReverseRowStrict, &[&[3, 2, 1]]);
        assert_eq!(transpose(&row).unwrap().rows(), &[vec![3], vec![2], vec![1]]);
        assert_eq!(transpose(&transpose(&row).unwrap()).unwrap(), row);
    }

    #[test]
    fn phi_on_figures() {
        // The printed input breaks the column-strict triple rule (rows 2 and 4,
        // column 2: 3 >= 0 but 3 < 4), so phi rejects it. The collection
        // insertion itself reproduces the printed output.
        let conj_rows = vec![vec![2, 1, 1], vec![4], vec![5, 5, 5, 3, 1], vec![6, 3, 2, 2]];
        let conj = Filling::new(TableauKind::Csct, conj_rows.clone()).unwrap();
        assert!(matches!(phi(&conj), Err(QsymError::InvalidFilling { .. })));
        let image = collection_insert(&conj_rows).unwrap();
        assert_eq!(image.rows(), &[vec![1], vec![3, 2, 1], vec![5, 3, 1], vec![5, 2], vec![6, 5, 4, 2]]);
        assert!(image.is_valid());
        let preimage = phi_inv(&image).unwrap();
        assert!(preimage.is_valid());
        assert_ne!(preimage, conj);
        assert_eq!(phi(&preimage).unwrap(), image);
        assert_eq!(phi_composite(&preimage).unwrap(), image);

        let left = fill(TableauKind::Csct, &[&[1], &[4, 3, 2]]);
        let right = fill(TableauKind::Csct, &[&[2], &[4, 3, 1]]);
        assert_eq!(phi(&left).unwrap().rows(), &[vec![2, 1], vec![3], vec![4]]);
        assert_eq!(phi(&right).unwrap().rows(), &[vec![1], vec![3, 2], vec![4]]);
        assert_eq!(phi_inv(&phi(&right).unwrap()).unwrap(), right);
        let one = fill(TableauKind::Csct, &[&[3]]);
        assert_eq!(phi(&one).unwrap().rows(), one.rows());
    }

    #[test]
    fn traces_replay() {
        let tr = trace(BijectionMap::RhoRow, &ex_map()).unwrap();
        assert_eq!(tr.steps.len(), 14);
        assert_eq!(tr.replay().unwrap(), tr.output.rows());
        assert_eq!(tr.steps[0].to_string(), "entry 2 -> (row 1, col 1)");
        let csct = fill(TableauKind::Csct, &[&[2, 1, 1], &[5, 5, 5, 3, 1], &[6, 4, 3, 2]]);
        for map in [BijectionMap::Phi, BijectionMap::RhoColInv] {
            let tr = trace(map, &csct).unwrap();
            assert_eq!(tr.replay().unwrap(), tr.output.rows());
        }
    }

    use alloc::string::ToString;
}
