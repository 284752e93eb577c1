//! `QS_α`, `RS_α` and Schur functions in the `M` and `F` bases, computed by
//! tableau enumeration, and checks of the identities relating them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{
    classical_in_m, f_to_m, omega, reverse_variables, transition_matrix, Basis, MonomialCoordinates,
    QSymElement,
};
use crate::compositions::{compositions_of, partitions_of, Composition, Partition};
use crate::error::{QsymError, Result};
use crate::insertion::check_commutation;
use crate::tableaux::{descent_set, for_each_filling, weight_of, DescentFlavor, Filling, TableauKind};
use crate::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    QS,
    RS,
    Schur,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::QS => "QS",
            Family::RS => "RS",
            Family::Schur => "s",
        }
    }

    pub fn kind(self) -> TableauKind {
        match self {
            Family::QS => TableauKind::Csct,
            Family::RS => TableauKind::Rsct,
            Family::Schur => TableauKind::ReverseColumnStrict,
        }
    }

    /// Descent flavor whose compositions index the `F` expansion.
    pub fn flavor(self) -> DescentFlavor {
        match self {
            Family::RS => DescentFlavor::TransposeDescent,
            Family::QS | Family::Schur => DescentFlavor::Descent,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "qs" => Ok(Family::QS),
            "rs" => Ok(Family::RS),
            "s" | "schur" => Ok(Family::Schur),
            _ => Err(format!("unknown family `{}`", s)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionReport {
    pub family: Family,
    pub index: Composition,
    pub element: QSymElement,
    /// Number of tableaux enumerated to produce `element`.
    pub witness_count: u64,
}

impl ExpansionReport {
    pub fn target_basis(&self) -> Basis {
        self.element.basis()
    }
}

/// `RS(1,3) = F(2,1,1) + F(1,2,1)`
impl fmt::Display for ExpansionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}) = {}", self.family, self.index, self.element)
    }
}

/// What an enumeration pass tallies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tally {
    /// Fillings with entries in `[1, max_entry]`, keyed by type (weights
    /// with interior zeros are skipped).
    Weight { max_entry: u32 },
    /// Standard fillings, keyed by `β` of the descent set.
    Descents(DescentFlavor),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub shape: Composition,
    pub kind: TableauKind,
    pub tally: Tally,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheEntry {
    pub witnesses: u64,
    pub counts: BTreeMap<Composition, u64>,
}

/// Enumeration engine with a per-instance memo keyed by
/// `(shape, kind, tally)`. Separate instances never share state, so workers
/// can each own one.
#[derive(Clone, Debug, Default)]
pub struct Expander {
    memo: BTreeMap<CacheKey, CacheEntry>,
}

impl Expander {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    pub fn cache_entries(&self) -> impl Iterator<Item = (&CacheKey, &CacheEntry)> {
        self.memo.iter()
    }

    /// Loads entries, e.g. from a cache file. Existing keys are overwritten.
    pub fn import(&mut self, entries: impl IntoIterator<Item = (CacheKey, CacheEntry)>) {
        self.memo.extend(entries);
    }

    pub fn tally(&mut self, shape: &Composition, kind: TableauKind, tally: Tally) -> &CacheEntry {
        let key = CacheKey { shape: shape.clone(), kind, tally };
        self.memo.entry(key).or_insert_with(|| compute_tally(shape, kind, tally))
    }

    fn expand_counts(&mut self, family: Family, index: &Composition, tally: Tally, basis: Basis) -> ExpansionReport {
        let n = index.degree();
        let entry = self.tally(index, family.kind(), tally);
        let element = QSymElement::from_terms(
            basis,
            n,
            entry.counts.iter().map(|(b, &k)| (b.clone(), Coeff::from(k))),
        )
        .expect("tallies are indexed by compositions of the shape's degree");
        ExpansionReport { family, index: index.clone(), element, witness_count: entry.witnesses }
    }

    /// `Σ_β K(α,β) B_β` where `K` counts fillings of shape `index` and type
    /// `β` (for `M`) or standard fillings with descent composition `β` (for
    /// `F`).
    pub fn expand(&mut self, family: Family, index: &Composition, basis: Basis) -> Result<ExpansionReport> {
        if family == Family::Schur && !index.is_partition() {
            return Err(QsymError::NotAPartition {
                index: index.parts().windows(2).position(|w| w[0] < w[1]).map_or(0, |i| i + 1),
            });
        }
        match basis {
            Basis::M => {
                let max_entry = index.degree() as u32;
                Ok(self.expand_counts(family, index, Tally::Weight { max_entry }, Basis::M))
            }
            Basis::F => Ok(self.expand_counts(family, index, Tally::Descents(family.flavor()), Basis::F)),
            Basis::QS | Basis::RS => {
                let target = if basis == Basis::QS { Family::QS } else { Family::RS };
                if family == target {
                    return Ok(ExpansionReport {
                        family,
                        index: index.clone(),
                        element: QSymElement::basis_element(basis, index.clone()),
                        witness_count: 0,
                    });
                }
                let from = match family {
                    Family::QS => Basis::QS,
                    Family::RS => Basis::RS,
                    Family::Schur => {
                        let m = self.expand(Family::Schur, index, Basis::M)?;
                        let element = self.solve(&m.element, basis)?;
                        return Ok(ExpansionReport { element, ..m });
                    }
                };
                let matrix = transition_matrix(self, from, basis, index.degree(), None, None)?;
                let i = matrix.row_order.iter().position(|a| a == index).expect("every composition is listed");
                Ok(ExpansionReport { family, index: index.clone(), element: matrix.row_element(i), witness_count: 0 })
            }
        }
    }

    /// Rewrites an `M`-basis element in `basis`.
    fn solve(&mut self, m: &QSymElement, basis: Basis) -> Result<QSymElement> {
        let n = m.degree();
        let order = crate::algebra::default_order(n);
        let matrix = transition_matrix(self, Basis::M, basis, n, Some(&order), None)?;
        let mut out = QSymElement::zero(basis, n);
        for (alpha, c) in m.terms() {
            let i = order.iter().position(|a| a == alpha).expect("listed");
            out = out.add(&matrix.row_element(i).scale(c))?;
        }
        Ok(out)
    }

    pub fn rs_in_m(&mut self, alpha: &Composition) -> QSymElement {
        self.expand(Family::RS, alpha, Basis::M).expect("M expansion is infallible").element
    }

    pub fn qs_in_m(&mut self, alpha: &Composition) -> QSymElement {
        self.expand(Family::QS, alpha, Basis::M).expect("M expansion is infallible").element
    }

    pub fn rs_in_f(&mut self, alpha: &Composition) -> QSymElement {
        self.expand(Family::RS, alpha, Basis::F).expect("F expansion is infallible").element
    }

    pub fn qs_in_f(&mut self, alpha: &Composition) -> QSymElement {
        self.expand(Family::QS, alpha, Basis::F).expect("F expansion is infallible").element
    }

    pub fn schur_in_m(&mut self, lambda: &Partition) -> QSymElement {
        self.expand(Family::Schur, lambda.as_composition(), Basis::M).expect("partition index").element
    }

    pub fn schur_in_f(&mut self, lambda: &Partition) -> QSymElement {
        self.expand(Family::Schur, lambda.as_composition(), Basis::F).expect("partition index").element
    }

    /// For every `λ ⊢ n`: `s_λ = Σ_{λ(α)=λ} QS_α` and
    /// `s_λ = Σ_{λ(α)=λ'} RS_α`, compared in `M` coordinates.
    pub fn verify_schur_decompositions(&mut self, n: usize) -> VerificationReport {
        let mut report = VerificationReport::new("schur");
        for lambda in partitions_of(n) {
            let s = self.schur_in_m(&lambda);
            let qs_sum = self.sum_in_m(&lambda, Family::QS);
            let rs_sum = self.sum_in_m(&lambda.conjugate(), Family::RS);
            report.push(format!("s({}) = sum QS", lambda.as_composition()), qs_sum == s);
            report.push(format!("s({}) = sum RS", lambda.as_composition()), rs_sum == s);
        }
        report
    }

    fn sum_in_m(&mut self, lambda: &Partition, family: Family) -> QSymElement {
        let mut sum = QSymElement::zero(Basis::M, lambda.degree());
        for alpha in lambda.rearrangements() {
            let term = self.expand(family, &alpha, Basis::M).expect("M expansion").element;
            sum = sum.add(&term).expect("same basis and degree");
        }
        sum
    }

    /// For every `α ⊨ n`: `ω(QS_α) = RS_α` with the variables reversed.
    pub fn verify_omega_theorem(&mut self, n: usize) -> VerificationReport {
        let mut report = VerificationReport::new("omega");
        for alpha in compositions_of(n).into_iter().rev() {
            let lhs = omega(&self.qs_in_f(&alpha)).and_then(|e| f_to_m(&e));
            let rhs = reverse_variables(&self.rs_in_m(&alpha));
            let ok = matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r);
            report.push(format!("omega QS({}) = rev RS({})", alpha, alpha), ok);
        }
        report
    }

    /// `RS → F` at degree `n` is upper unitriangular with rows in descending
    /// revlex order and columns in descending revlex order of complements.
    pub fn verify_triangularity(&mut self, n: usize) -> VerificationReport {
        let mut report = VerificationReport::new("triangularity");
        let rows = crate::algebra::default_order(n);
        let cols: Vec<Composition> = rows.iter().map(Composition::complement).collect();
        let ok = transition_matrix(self, Basis::RS, Basis::F, n, Some(&rows), Some(&cols))
            .map(|m| m.is_upper_unitriangular())
            .unwrap_or(false);
        report.push(format!("RS->F unitriangular, n = {}", n), ok);
        report
    }

    /// Consistency of the `M` and `F` expansions: `f_to_m(B in F) = B in M`.
    pub fn verify_consistency(&mut self, n: usize) -> VerificationReport {
        let mut report = VerificationReport::new("consistency");
        for alpha in compositions_of(n).into_iter().rev() {
            for family in [Family::QS, Family::RS] {
                let f = self.expand(family, &alpha, Basis::F).map(|r| r.element);
                let m = self.expand(family, &alpha, Basis::M).map(|r| r.element);
                let ok = matches!((f, m), (Ok(f), Ok(m)) if f_to_m(&f).as_ref() == Ok(&m));
                report.push(format!("{}({}) F/M agree", family, alpha), ok);
            }
        }
        report
    }
}

impl MonomialCoordinates for Expander {
    fn basis_in_m(&mut self, basis: Basis, alpha: &Composition) -> Result<QSymElement> {
        if let Some(e) = classical_in_m(basis, alpha) {
            return e;
        }
        let family = if basis == Basis::QS { Family::QS } else { Family::RS };
        Ok(self.expand(family, alpha, Basis::M)?.element.relabel(Basis::M))
    }
}

fn compute_tally(shape: &Composition, kind: TableauKind, tally: Tally) -> CacheEntry {
    let mut entry = CacheEntry::default();
    match tally {
        Tally::Weight { max_entry } => {
            for_each_filling(shape, kind, max_entry, false, |rows| {
                entry.witnesses += 1;
                if let Some(beta) = weight_of(rows).as_leading_composition() {
                    *entry.counts.entry(beta).or_default() += 1;
                }
            });
        }
        Tally::Descents(flavor) => {
            for_each_filling(shape, kind, 0, true, |rows| {
                entry.witnesses += 1;
                let f = Filling::from_parts(kind, rows.to_vec());
                let beta = descent_set(&f, flavor).expect("standard").composition();
                *entry.counts.entry(beta).or_default() += 1;
            });
        }
    }
    entry
}

/// Every reverse row-strict tableau of degree at most `n` with entries at
/// most `n`, inserted with every `x ≤ n + 1`, satisfies
/// `ρ(T ← x) = ρ(T) ⤙ x`. One case per shape.
pub fn verify_commutation(n: usize) -> VerificationReport {
    let mut report = VerificationReport::new("commutation");
    for d in 0..=n {
        for lambda in partitions_of(d) {
            let mut ok = true;
            let mut count = 0u64;
            for_each_filling(lambda.as_composition(), TableauKind::ReverseRowStrict, n as u32, false, |rows| {
                let t = Filling::from_parts(TableauKind::ReverseRowStrict, rows.to_vec());
                for x in 1..=n as u32 + 1 {
                    count += 1;
                    ok &= check_commutation(&t, x).unwrap_or(false);
                }
            });
            report.push(format!("shape ({}), {} insertions", lambda.as_composition(), count), ok);
        }
    }
    report
}

/// A polynomial in `k` variables: exponent vectors of length `k`.
pub type Polynomial = BTreeMap<Vec<usize>, Coeff>;

/// `Σ x^T` over fillings of `shape` with entries in `[1, k]`.
pub fn fillings_polynomial(shape: &Composition, kind: TableauKind, k: usize) -> Polynomial {
    let mut poly = Polynomial::new();
    for_each_filling(shape, kind, k as u32, false, |rows| {
        let mut exps = vec_zeros(k);
        for &e in rows.iter().flatten() {
            exps[e as usize - 1] += 1;
        }
        *poly.entry(exps).or_default() += 1u32;
    });
    poly
}

/// Specializes an element to `x₁,…,x_k` (`M_β` becomes the sum of
/// `x_{i₁}^{β₁}⋯x_{i_ℓ}^{β_ℓ}` over `i₁ < ⋯ < i_ℓ ≤ k`).
pub fn specialize(e: &QSymElement, k: usize) -> Result<Polynomial> {
    let m = match e.basis() {
        Basis::M => e.clone(),
        Basis::F => f_to_m(e)?,
        other => return Err(QsymError::BasisMismatch { expected: Basis::M, found: other }),
    };
    let mut poly = Polynomial::new();
    for (beta, c) in m.terms() {
        let l = beta.len();
        if l > k {
            continue;
        }
        let mut idx: Vec<usize> = (0..l).collect();
        loop {
            let mut exps = vec_zeros(k);
            for (&i, &p) in idx.iter().zip(beta.parts()) {
                exps[i] = p;
            }
            *poly.entry(exps).or_default() += c;
            // next l-subset of [0, k)
            let Some(pos) = (0..l).rev().find(|&j| idx[j] < k - l + j) else { break };
            idx[pos] += 1;
            for j in pos + 1..l {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    poly.retain(|_, c| *c != Coeff::from(0));
    Ok(poly)
}

/// `f(x₁,…,x_k) ↦ f(x_k,…,x₁)`.
pub fn reverse_polynomial(p: &Polynomial) -> Polynomial {
    p.iter()
        .map(|(e, c)| (e.iter().rev().copied().collect(), c.clone()))
        .collect()
}

/// `x1 x2^3 x3^2 + 2 x1 x4`; monomials in descending lex order of exponents.
pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_empty() {
        return String::from("0");
    }
    let mut out = String::new();
    for (i, (exps, c)) in p.iter().rev().enumerate() {
        let neg = c < &Coeff::from(0);
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let mag = if neg { -c.clone() } else { c.clone() };
        let mut factors: Vec<String> = Vec::new();
        if mag != Coeff::from(1) {
            factors.push(format!("{}", mag));
        }
        for (v, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", v + 1)),
                _ => factors.push(format!("x{}^{}", v + 1, e)),
            }
        }
        if factors.is_empty() {
            factors.push(String::from("1"));
        }
        out.push_str(&factors.join(" "));
    }
    out
}

fn vec_zeros(k: usize) -> Vec<usize> {
    alloc::vec![0; k]
}

/// Named list of pass/fail cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub name: String,
    pub cases: Vec<(String, bool)>,
}

impl VerificationReport {
    pub fn new(name: &str) -> Self {
        VerificationReport { name: String::from(name), cases: Vec::new() }
    }

    pub fn push(&mut self, label: String, passed: bool) {
        self.cases.push((label, passed));
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.1)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.cases.iter().filter(|c| !c.1).map(|c| c.0.as_str())
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.cases.iter().filter(|c| !c.1).count();
        write!(f, "{}: {} cases, {} failed", self.name, self.cases.len(), failed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use num_bigint::BigInt;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn el(basis: Basis, terms: &[&[usize]]) -> QSymElement {
        let degree = terms[0].iter().sum();
        QSymElement::from_terms(basis, degree, terms.iter().map(|p| (c(p), BigInt::from(1)))).unwrap()
    }

    #[test]
    fn rs_in_m_examples() {
        let mut x = Expander::new();
        let rs2121 = x.rs_in_m(&c(&[2, 1, 2, 1]));
        let short = QSymElement::from_terms(
            Basis::M,
            6,
            rs2121.terms().filter(|(b, _)| b.len() <= 4).map(|(b, k)| (b.clone(), k.clone())),
        )
        .unwrap();
        assert_eq!(short, el(Basis::M, &[&[1, 3, 2], &[1, 3, 1, 1], &[1, 2, 1, 2], &[1, 1, 2, 2]]));
        assert_eq!(rs2121.len(), 8);
        assert_eq!(x.rs_in_m(&c(&[1])), el(Basis::M, &[&[1]]));
        assert_eq!(x.rs_in_m(&c(&[4])), el(Basis::M, &[&[1, 1, 1, 1]]));
    }

    #[test]
    fn qs_in_m_examples() {
        let mut x = Expander::new();
        let f1111 = f_to_m(&QSymElement::basis_element(Basis::F, c(&[1, 1, 1, 1]))).unwrap();
        assert_eq!(x.qs_in_m(&c(&[1, 1, 1, 1])), f1111);
        let f4 = f_to_m(&QSymElement::basis_element(Basis::F, c(&[4]))).unwrap();
        assert_eq!(x.qs_in_m(&c(&[4])), f4);
        assert_eq!(f4.len(), 8);
    }

    #[test]
    fn f_expansions() {
        let mut x = Expander::new();
        assert_eq!(x.rs_in_f(&c(&[1, 3])), el(Basis::F, &[&[2, 1, 1], &[1, 2, 1]]));
        assert_eq!(x.rs_in_f(&c(&[2, 2])), el(Basis::F, &[&[1, 2, 1], &[2, 2]]));
        assert_eq!(x.rs_in_f(&c(&[1, 1, 1, 1])), el(Basis::F, &[&[4]]));
        assert_eq!(x.qs_in_f(&c(&[1, 3])), el(Basis::F, &[&[1, 3], &[2, 2]]));
        assert_eq!(x.qs_in_f(&c(&[4])), el(Basis::F, &[&[4]]));
        assert_eq!(x.qs_in_f(&c(&[1, 1, 2])), el(Basis::F, &[&[1, 1, 2]]));
    }

    #[test]
    fn schur_examples() {
        let mut x = Expander::new();
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(x.schur_in_m(&p(&[1, 1])), el(Basis::M, &[&[1, 1]]));
        assert_eq!(x.schur_in_f(&p(&[1, 1])), el(Basis::F, &[&[1, 1]]));
        assert_eq!(x.schur_in_m(&p(&[2])), el(Basis::M, &[&[2], &[1, 1]]));
        assert_eq!(x.schur_in_f(&p(&[2])), el(Basis::F, &[&[2]]));
        assert_eq!(x.schur_in_f(&p(&[2, 1])), el(Basis::F, &[&[2, 1], &[1, 2]]));
        let s211 = x.schur_in_m(&p(&[2, 1, 1]));
        let sum = x.rs_in_m(&c(&[3, 1])).add(&x.rs_in_m(&c(&[1, 3]))).unwrap();
        assert_eq!(s211, sum);
        assert!(x.expand(Family::Schur, &c(&[1, 2]), Basis::M).is_err());
    }

    #[test]
    fn report_display() {
        let mut x = Expander::new();
        let r = x.expand(Family::RS, &c(&[1, 3]), Basis::F).unwrap();
        assert_eq!(r.to_string(), "RS(1,3) = F(2,1,1) + F(1,2,1)");
        assert_eq!(r.witness_count, 2);
    }

    #[test]
    fn small_verifications() {
        let mut x = Expander::new();
        for n in 1..=4 {
            assert!(x.verify_schur_decompositions(n).passed());
            assert!(x.verify_omega_theorem(n).passed());
            assert!(x.verify_triangularity(n).passed());
            assert!(x.verify_consistency(n).passed());
        }
        assert!(verify_commutation(3).passed());
    }

    #[test]
    fn cross_basis_expansion() {
        let mut x = Expander::new();
        let r = x.expand(Family::RS, &c(&[2, 1, 1]), Basis::QS).unwrap();
        let expected = QSymElement::from_terms(
            Basis::QS,
            4,
            [(c(&[1, 3]), BigInt::from(1)), (c(&[2, 2]), BigInt::from(-1)), (c(&[1, 2, 1]), BigInt::from(1))],
        )
        .unwrap();
        assert_eq!(r.element, expected);
        let s = x.expand(Family::Schur, &c(&[2, 1, 1]), Basis::RS).unwrap();
        assert_eq!(s.element.to_string(), "RS(3,1) + RS(1,3)");
    }

    #[test]
    fn polynomial_specialization() {
        let poly = fillings_polynomial(&c(&[2, 1, 2, 1]), TableauKind::Rsct, 4);
        assert_eq!(poly.len(), 7);
        let mut x = Expander::new();
        assert_eq!(specialize(&x.rs_in_m(&c(&[2, 1, 2, 1])), 4).unwrap(), poly);
        assert_eq!(
            format_polynomial(&specialize(&el(Basis::M, &[&[2, 1]]), 2).unwrap()),
            "x1^2 x2"
        );
        let f = specialize(&el(Basis::F, &[&[1, 1]]), 3).unwrap();
        assert_eq!(format_polynomial(&f), "x1 x2 + x1 x3 + x2 x3");
    }
}
