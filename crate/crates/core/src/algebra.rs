//! Sparse integer-coefficient elements of `QSym_n` and basis changes.
//!
//! `M` and `F` are handled here directly (`F_α = Σ_{β ⪯ α} M_β`). `QS` and
//! `RS` are only basis tags; their monomial coordinates come from a
//! [`MonomialCoordinates`] source, normally [`crate::Expander`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compositions::{compositions_of, revlex_cmp, Composition};
use crate::error::{QsymError, Result};
use crate::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial quasisymmetric functions.
    M,
    /// Gessel's fundamental quasisymmetric functions.
    F,
    /// Quasisymmetric Schur functions (column-strict composition tableaux).
    QS,
    /// Row-strict quasisymmetric Schur functions.
    RS,
}

impl Basis {
    pub const ALL: [Basis; 4] = [Basis::M, Basis::F, Basis::QS, Basis::RS];

    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::QS => "QS",
            Basis::RS => "RS",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "M" => Ok(Basis::M),
            "F" => Ok(Basis::F),
            "QS" => Ok(Basis::QS),
            "RS" => Ok(Basis::RS),
            _ => Err(alloc::format!("unknown basis `{}`", s)),
        }
    }
}

/// A homogeneous element `Σ c_α B_α` of degree `degree` in basis `B`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSymElement {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Composition, Coeff>,
}

impl QSymElement {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        QSymElement { basis, degree, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, alpha: Composition) -> Self {
        let degree = alpha.degree();
        let mut terms = BTreeMap::new();
        terms.insert(alpha, Coeff::one());
        QSymElement { basis, degree, terms }
    }

    pub fn from_terms(
        basis: Basis,
        degree: usize,
        terms: impl IntoIterator<Item = (Composition, Coeff)>,
    ) -> Result<Self> {
        let mut e = Self::zero(basis, degree);
        for (alpha, c) in terms {
            e.add_term(alpha, c)?;
        }
        Ok(e)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, alpha: &Composition) -> Coeff {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Coeff)> {
        self.terms.iter()
    }

    /// Terms in descending revlex order of their index.
    pub fn sorted_terms(&self) -> Vec<(&Composition, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| revlex_cmp(b.0, a.0).expect("single degree"));
        v
    }

    pub fn add_term(&mut self, alpha: Composition, c: Coeff) -> Result<()> {
        if alpha.degree() != self.degree {
            return Err(QsymError::DegreeMismatch { left: self.degree, right: alpha.degree() });
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(alpha).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.basis != other.basis {
            return Err(QsymError::BasisMismatch { expected: self.basis, found: other.basis });
        }
        if self.degree != other.degree {
            return Err(QsymError::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.add_term(alpha.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, k: &Coeff) -> Self {
        if k.is_zero() {
            return Self::zero(self.basis, self.degree);
        }
        QSymElement {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), c * k)).collect(),
        }
    }

    /// Reinterprets the coefficients in another basis.
    pub fn relabel(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    fn expect_basis(&self, basis: Basis) -> Result<()> {
        if self.basis != basis {
            return Err(QsymError::BasisMismatch { expected: basis, found: self.basis });
        }
        Ok(())
    }
}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}

/// `F(2,1,1) + F(1,2,1)`, `M(2,1) - M(1,1,1)`, `3QS(2,2)`; `0` for zero.
impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (alpha, c)) in self.sorted_terms().into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {} ", sign)?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            write!(f, "{}({})", self.basis, alpha)?;
        }
        Ok(())
    }
}

/// `F_α = Σ_{β ⪯ α} M_β`, extended linearly.
pub fn f_to_m(e: &QSymElement) -> Result<QSymElement> {
    e.expect_basis(Basis::F)?;
    let mut out = QSymElement::zero(Basis::M, e.degree);
    for (alpha, c) in &e.terms {
        for beta in alpha.refinements() {
            out.add_term(beta, c.clone())?;
        }
    }
    Ok(out)
}

/// `M_α = Σ_{β ⪯ α} (−1)^{ℓ(β)−ℓ(α)} F_β`, the Möbius inversion of
/// [`f_to_m`] on the Boolean lattice of subsets.
pub fn m_to_f(e: &QSymElement) -> Result<QSymElement> {
    e.expect_basis(Basis::M)?;
    let mut out = QSymElement::zero(Basis::F, e.degree);
    for (alpha, c) in &e.terms {
        for beta in alpha.refinements() {
            let odd = (beta.len() - alpha.len()) % 2 == 1;
            out.add_term(beta, if odd { -c.clone() } else { c.clone() })?;
        }
    }
    Ok(out)
}

/// `ω(F_α) = F_{rev(α̃)}`.
pub fn omega(e: &QSymElement) -> Result<QSymElement> {
    e.expect_basis(Basis::F)?;
    QSymElement::from_terms(
        Basis::F,
        e.degree,
        e.terms.iter().map(|(alpha, c)| (alpha.complement().reverse(), c.clone())),
    )
}

/// Reverses the order of the variables, `f(x₁,…,x_n) ↦ f(x_n,…,x₁)`. On the
/// `M` and `F` bases this is `B_β ↦ B_{rev(β)}`.
pub fn reverse_variables(e: &QSymElement) -> Result<QSymElement> {
    if !matches!(e.basis, Basis::M | Basis::F) {
        return Err(QsymError::BasisMismatch { expected: Basis::M, found: e.basis });
    }
    QSymElement::from_terms(e.basis, e.degree, e.terms.iter().map(|(a, c)| (a.reverse(), c.clone())))
}

/// Supplies the monomial expansion of single basis elements.
pub trait MonomialCoordinates {
    fn basis_in_m(&mut self, basis: Basis, alpha: &Composition) -> Result<QSymElement>;
}

/// `M` and `F` only; anything else is a basis error.
pub struct Classical;

impl MonomialCoordinates for Classical {
    fn basis_in_m(&mut self, basis: Basis, alpha: &Composition) -> Result<QSymElement> {
        classical_in_m(basis, alpha)
            .unwrap_or(Err(QsymError::BasisMismatch { expected: Basis::F, found: basis }))
    }
}

pub(crate) fn classical_in_m(basis: Basis, alpha: &Composition) -> Option<Result<QSymElement>> {
    match basis {
        Basis::M => Some(Ok(QSymElement::basis_element(Basis::M, alpha.clone()))),
        Basis::F => Some(f_to_m(&QSymElement::basis_element(Basis::F, alpha.clone()))),
        Basis::QS | Basis::RS => None,
    }
}

/// Expresses any element in the monomial basis.
pub fn to_monomial(e: &QSymElement, source: &mut impl MonomialCoordinates) -> Result<QSymElement> {
    let mut out = QSymElement::zero(Basis::M, e.degree);
    for (alpha, c) in &e.terms {
        let m = source.basis_in_m(e.basis, alpha)?;
        for (beta, d) in &m.terms {
            out.add_term(beta.clone(), c * d)?;
        }
    }
    Ok(out)
}

/// Square integer matrix whose row `i` expands `from_basis[row_order[i]]` in
/// `to_basis`, column `j` standing for `to_basis[col_order[j]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    pub from_basis: Basis,
    pub to_basis: Basis,
    pub degree: usize,
    pub row_order: Vec<Composition>,
    pub col_order: Vec<Composition>,
    pub entries: Vec<Vec<Coeff>>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.row_order.len()
    }

    pub fn entry(&self, row: &Composition, col: &Composition) -> Option<&Coeff> {
        let i = self.row_order.iter().position(|a| a == row)?;
        let j = self.col_order.iter().position(|b| b == col)?;
        Some(&self.entries[i][j])
    }

    /// Row `i` as an element of the target basis.
    pub fn row_element(&self, i: usize) -> QSymElement {
        QSymElement::from_terms(
            self.to_basis,
            self.degree,
            self.col_order.iter().cloned().zip(self.entries[i].iter().cloned()),
        )
        .expect("orders list compositions of the degree")
    }

    /// `self · other`: expands `self.from` in `other.to`. Requires the
    /// inner orderings to agree.
    pub fn compose(&self, other: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.to_basis != other.from_basis {
            return Err(QsymError::BasisMismatch { expected: self.to_basis, found: other.from_basis });
        }
        if self.col_order != other.row_order {
            return Err(QsymError::BadOrdering { expected: self.col_order.len(), found: other.row_order.len() });
        }
        let n = self.size();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| &self.entries[i][k] * &other.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(TransitionMatrix {
            from_basis: self.from_basis,
            to_basis: other.to_basis,
            degree: self.degree,
            row_order: self.row_order.clone(),
            col_order: other.col_order.clone(),
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.row_order == self.col_order
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, c)| if i == j { c.is_one() } else { c.is_zero() })
            })
    }

    /// Ones on the diagonal, zeros strictly below, in the stored orders.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row[i].is_one() && row[..i].iter().all(Zero::is_zero)
        })
    }
}

fn check_order(order: &[Composition], n: usize) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort();
    let mut all = compositions_of(n);
    all.sort();
    if sorted != all {
        return Err(QsymError::BadOrdering { expected: all.len(), found: order.len() });
    }
    Ok(())
}

/// Default ordering for matrices: descending revlex, `(n)` first.
pub fn default_order(n: usize) -> Vec<Composition> {
    let mut v = compositions_of(n);
    v.reverse();
    v
}

/// Expresses every `from` basis element of degree `n` in the `to` basis.
///
/// Both bases are written in monomial coordinates and the system is solved by
/// exact rational Gauss–Jordan elimination; a singular or non-integral
/// result is an error.
pub fn transition_matrix(
    source: &mut impl MonomialCoordinates,
    from: Basis,
    to: Basis,
    n: usize,
    row_order: Option<&[Composition]>,
    col_order: Option<&[Composition]>,
) -> Result<TransitionMatrix> {
    let row_order = row_order.map_or_else(|| default_order(n), <[_]>::to_vec);
    let col_order = col_order.map_or_else(|| default_order(n), <[_]>::to_vec);
    check_order(&row_order, n)?;
    check_order(&col_order, n)?;

    let m_index = compositions_of(n);
    let coords = |e: &QSymElement| -> Vec<BigInt> { m_index.iter().map(|b| e.coeff(b)).collect() };

    let target: Vec<Vec<BigInt>> = col_order
        .iter()
        .map(|b| source.basis_in_m(to, b).map(|e| coords(&e)))
        .collect::<Result<_>>()?;
    let inverse = invert(&target).ok_or(QsymError::SingularBasis { basis: to, degree: n })?;

    let mut entries = Vec::with_capacity(row_order.len());
    for alpha in &row_order {
        let v = coords(&source.basis_in_m(from, alpha)?);
        let mut row = Vec::with_capacity(v.len());
        for j in 0..v.len() {
            let x: BigRational = v.iter().zip(&inverse).map(|(vi, inv)| BigRational::from(vi.clone()) * &inv[j]).sum();
            if !x.is_integer() {
                return Err(QsymError::NonIntegral { basis: to });
            }
            row.push(x.to_integer());
        }
        // exactness check: row · target == v
        for (k, vk) in v.iter().enumerate() {
            let back: BigInt = row.iter().zip(&target).map(|(c, t)| c * &t[k]).sum();
            if &back != vk {
                return Err(QsymError::Invariant(alloc::format!("transition row for {:?} does not reproduce", alpha)));
            }
        }
        entries.push(row);
    }
    Ok(TransitionMatrix { from_basis: from, to_basis: to, degree: n, row_order, col_order, entries })
}

/// Gauss–Jordan inverse over the rationals; `None` when singular.
fn invert(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().cloned().map(BigRational::from).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let (pivot_row, row) = if r < col {
                    let (lo, hi) = a.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn el(basis: Basis, terms: &[(&[usize], i64)]) -> QSymElement {
        let degree = terms.first().map_or(0, |t| t.0.iter().sum());
        QSymElement::from_terms(basis, degree, terms.iter().map(|(p, k)| (c(p), BigInt::from(*k)))).unwrap()
    }

    #[test]
    fn f_to_m_examples() {
        let f21 = QSymElement::basis_element(Basis::F, c(&[2, 1]));
        assert_eq!(f_to_m(&f21).unwrap(), el(Basis::M, &[(&[2, 1], 1), (&[1, 1, 1], 1)]));
        let f4 = f_to_m(&QSymElement::basis_element(Basis::F, c(&[4]))).unwrap();
        assert_eq!(f4.len(), 8);
        assert!(f4.terms().all(|(_, k)| k.is_one()));
        let f0 = QSymElement::basis_element(Basis::F, Composition::empty());
        assert_eq!(f_to_m(&f0).unwrap(), QSymElement::basis_element(Basis::M, Composition::empty()));
        assert!(f_to_m(&el(Basis::M, &[(&[1], 1)])).is_err());
    }

    #[test]
    fn m_to_f_examples() {
        let m21 = QSymElement::basis_element(Basis::M, c(&[2, 1]));
        assert_eq!(m_to_f(&m21).unwrap(), el(Basis::F, &[(&[2, 1], 1), (&[1, 1, 1], -1)]));
        let m1 = QSymElement::basis_element(Basis::M, c(&[1]));
        assert_eq!(m_to_f(&m1).unwrap(), el(Basis::F, &[(&[1], 1)]));
    }

    #[test]
    fn omega_examples() {
        let e = QSymElement::basis_element(Basis::F, c(&[1, 4, 2]));
        assert_eq!(omega(&e).unwrap(), el(Basis::F, &[(&[1, 2, 1, 1, 2], 1)]));
        let ones = QSymElement::basis_element(Basis::F, Composition::ones(5));
        assert_eq!(omega(&ones).unwrap(), el(Basis::F, &[(&[5], 1)]));
    }

    #[test]
    fn element_arithmetic() {
        let a = el(Basis::F, &[(&[2, 1], 2), (&[1, 2], 1)]);
        let b = el(Basis::F, &[(&[2, 1], -2)]);
        let s = a.add(&b).unwrap();
        assert_eq!(s, el(Basis::F, &[(&[1, 2], 1)]));
        assert_eq!(a.sub(&a).unwrap(), QSymElement::zero(Basis::F, 3));
        assert!(a.add(&el(Basis::M, &[(&[3], 1)])).is_err());
        let mut z = QSymElement::zero(Basis::F, 3);
        assert!(z.add_term(c(&[2]), BigInt::one()).is_err());
        assert_eq!(a.to_string(), "2F(2,1) + F(1,2)");
        assert_eq!(el(Basis::QS, &[(&[1, 3], 1), (&[2, 2], -1)]).to_string(), "QS(1,3) - QS(2,2)");
        assert_eq!(QSymElement::zero(Basis::M, 2).to_string(), "0");
    }

    #[test]
    fn classical_matrices() {
        let mm = transition_matrix(&mut Classical, Basis::M, Basis::M, 4, None, None).unwrap();
        assert!(mm.is_identity());
        let order = compositions_of(3);
        let fm = transition_matrix(&mut Classical, Basis::F, Basis::M, 3, Some(&order), Some(&order)).unwrap();
        for (i, a) in order.iter().enumerate() {
            for (j, b) in order.iter().enumerate() {
                let expected = if b.refines(a) { 1 } else { 0 };
                assert_eq!(fm.entries[i][j], BigInt::from(expected));
            }
        }
        let mf = transition_matrix(&mut Classical, Basis::M, Basis::F, 3, Some(&order), Some(&order)).unwrap();
        assert!(fm.compose(&mf).unwrap().is_identity());
        assert!(transition_matrix(&mut Classical, Basis::QS, Basis::M, 2, None, None).is_err());
        let short = vec![c(&[2])];
        assert!(transition_matrix(&mut Classical, Basis::M, Basis::F, 2, Some(&short), None).is_err());
    }
}
