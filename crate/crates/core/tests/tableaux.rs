use std::collections::BTreeMap;

use qsym_core::compositions::{compositions_of, partitions_of};
use qsym_core::expansions::{Expander, Tally};
use qsym_core::tableaux::{
    descent_set, enumerate_fillings, enumerate_standard, for_each_filling, standardize,
};
use qsym_core::{Composition, DescentFlavor, Filling, TableauKind};

/// Every filling of `shape` with entries in `[1, k]`, row-major lexicographic,
/// kept when the predicate accepts it.
fn naive(shape: &Composition, kind: TableauKind, k: u32) -> Vec<Vec<Vec<u32>>> {
    let n = shape.degree();
    let mut out = Vec::new();
    let mut digits = vec![1u32; n];
    loop {
        let mut it = digits.iter().copied();
        let rows: Vec<Vec<u32>> = shape.parts().iter().map(|&p| it.by_ref().take(p).collect()).collect();
        if Filling::new(kind, rows.clone()).map(|f| f.is_valid()).unwrap_or(false) {
            out.push(rows);
        }
        let Some(pos) = (0..n).rev().find(|&i| digits[i] < k) else { break };
        digits[pos] += 1;
        for d in digits.iter_mut().skip(pos + 1) {
            *d = 1;
        }
    }
    out
}

#[test]
fn backtracking_matches_brute_force() {
    for n in 0..=5 {
        for shape in compositions_of(n) {
            for kind in TableauKind::ALL {
                for k in 1..=4 {
                    let fast: Vec<Vec<Vec<u32>>> =
                        enumerate_fillings(&shape, kind, k).into_iter().map(Filling::into_rows).collect();
                    assert_eq!(fast, naive(&shape, kind, k), "{:?} {} k={}", shape, kind, k);
                }
            }
        }
    }
}

#[test]
fn standard_enumeration_matches_filter() {
    for n in 1..=6 {
        for shape in compositions_of(n) {
            for kind in TableauKind::ALL {
                let standard = enumerate_standard(&shape, kind);
                let filtered: Vec<Filling> =
                    enumerate_fillings(&shape, kind, n as u32).into_iter().filter(Filling::is_standard).collect();
                assert_eq!(standard, filtered);
            }
        }
    }
}

#[test]
fn standard_counts_match_hook_lengths() {
    // reverse row-strict standard tableaux of shape λ are counted by f^λ
    let f = |parts: &[usize]| -> usize {
        let lambda = qsym_core::Partition::new(parts.to_vec()).unwrap();
        enumerate_standard(lambda.as_composition(), TableauKind::ReverseRowStrict).len()
    };
    assert_eq!(f(&[3, 2]), 5);
    assert_eq!(f(&[2, 2, 1]), 5);
    assert_eq!(f(&[3, 2, 1]), 16);
    assert_eq!(f(&[4, 2]), 9);
    for n in 1..=6 {
        let total: usize = partitions_of(n)
            .iter()
            .map(|l| enumerate_standard(l.as_composition(), TableauKind::ReverseRowStrict).len().pow(2))
            .sum();
        assert_eq!(total, (1..=n).product::<usize>());
    }
}

#[test]
fn renumbering_preserves_validity() {
    for n in 1..=5 {
        for shape in compositions_of(n) {
            for kind in [TableauKind::Rsct, TableauKind::Csct] {
                for f in enumerate_fillings(&shape, kind, 5) {
                    let values: Vec<u32> =
                        f.rows().iter().flatten().copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
                    let squeeze: BTreeMap<u32, u32> =
                        values.iter().enumerate().map(|(i, &v)| (v, i as u32 + 1)).collect();
                    assert!(f.map_entries(|v| squeeze[&v]).is_valid());
                    assert!(f.map_entries(|v| 2 * v + 1).is_valid());
                    assert!(f.map_entries(|v| v + 3).is_valid());
                }
            }
        }
    }
}

#[test]
fn larger_entry_bound_gives_same_coefficients() {
    let mut x = Expander::new();
    for n in 1..=5 {
        for shape in compositions_of(n) {
            for kind in [TableauKind::Rsct, TableauKind::Csct] {
                let base = x.tally(&shape, kind, Tally::Weight { max_entry: n as u32 }).counts.clone();
                let wide = x.tally(&shape, kind, Tally::Weight { max_entry: n as u32 + 2 }).counts.clone();
                assert_eq!(base, wide, "{:?} {}", shape, kind);
            }
        }
    }
}

#[test]
fn standardization_is_standard_and_valid() {
    for n in 1..=5 {
        for shape in compositions_of(n) {
            for kind in TableauKind::ALL {
                for f in enumerate_fillings(&shape, kind, 4) {
                    let s = standardize(&f).unwrap();
                    assert!(s.is_standard() && s.is_valid(), "{:?}", f);
                    assert_eq!(s.shape(), f.shape());
                    // order of values is kept
                    for (a, b) in f.rows().iter().flatten().zip(s.rows().iter().flatten()) {
                        for (c, d) in f.rows().iter().flatten().zip(s.rows().iter().flatten()) {
                            if a < c {
                                assert!(b < d);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn descent_flavors_partition_the_gaps() {
    for n in 1..=5 {
        for shape in compositions_of(n) {
            for_each_filling(&shape, TableauKind::Rsct, 0, true, |rows| {
                let f = Filling::new(TableauKind::Rsct, rows.to_vec()).unwrap();
                let d = descent_set(&f, DescentFlavor::Descent).unwrap();
                let t = descent_set(&f, DescentFlavor::TransposeDescent).unwrap();
                let mut all = d.elements.clone();
                all.extend(&t.elements);
                all.sort_unstable();
                assert_eq!(all, (1..n).collect::<Vec<_>>());
                assert_eq!(d.composition().complement(), t.composition());
            });
        }
    }
}

#[test]
fn non_partition_shapes_have_no_reverse_fillings() {
    let shape = Composition::new(vec![1, 2]).unwrap();
    assert!(enumerate_fillings(&shape, TableauKind::ReverseRowStrict, 3).is_empty());
    assert!(enumerate_fillings(&shape, TableauKind::ReverseColumnStrict, 3).is_empty());
    assert!(!enumerate_fillings(&shape, TableauKind::Rsct, 3).is_empty());
}
