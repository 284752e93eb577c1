//! Compositions, partitions and the orders on them.
//!
//! A composition of `n` corresponds to a subset of `[n−1]` through its partial
//! sums; most operations here (complement, refinement) go through that
//! correspondence.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{QsymError, Result};

/// An ordered list of positive parts. The empty composition is the unique
/// composition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
    degree: usize,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(QsymError::ZeroPart { index });
        }
        let degree = parts.iter().sum();
        Ok(Composition { parts, degree })
    }

    pub fn empty() -> Self {
        Composition::default()
    }

    /// The one-part composition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition { parts: alloc::vec![n], degree: n }
        }
    }

    /// `(1,1,…,1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Composition { parts: alloc::vec![1; n], degree: n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Partial sums `α₁, α₁+α₂, …` excluding the total; strictly increasing.
    pub fn subset(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for &p in self.parts.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The composition `α̃` whose subset is the complement of `S(α)` in `[n−1]`.
    pub fn complement(&self) -> Composition {
        let n = self.degree;
        if n == 0 {
            return Composition::empty();
        }
        let subset = self.subset();
        let mut inside = subset.iter().peekable();
        let mut comp = Vec::new();
        for s in 1..n {
            if inside.peek() == Some(&&s) {
                inside.next();
            } else {
                comp.push(s);
            }
        }
        composition_from_subset(&comp, n).expect("complement stays inside [n-1]")
    }

    pub fn reverse(&self) -> Composition {
        let mut parts = self.parts.clone();
        parts.reverse();
        Composition { parts, degree: self.degree }
    }

    /// `λ(α)`: the parts sorted into weakly decreasing order.
    pub fn lambda(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(Composition { parts, degree: self.degree })
    }

    /// True when every part is weakly smaller than the one before it.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `self ⪯ other`: `other` is obtained by summing adjacent parts of `self`.
    /// Compositions of different degrees are never comparable.
    pub fn refines(&self, other: &Composition) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let mine = self.subset();
        other.subset().iter().all(|s| mine.binary_search(s).is_ok())
    }

    /// Every `β ⪯ self`, in ascending revlex order.
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.degree;
        if n == 0 {
            return alloc::vec![Composition::empty()];
        }
        let fixed = self.subset();
        let free: Vec<usize> = (1..n).filter(|s| fixed.binary_search(s).is_err()).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut set = fixed.clone();
            set.extend(free.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s));
            set.sort_unstable();
            out.push(composition_from_subset(&set, n).expect("subset of [n-1]"));
        }
        sort_revlex(&mut out);
        out
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Canonical form: parts joined by commas, e.g. `2,1,2,1`; the empty
/// composition prints as the empty string.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCompositionError(pub String);

impl fmt::Display for ParseCompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed composition `{}`: expected comma-separated positive integers", self.0)
    }
}

impl FromStr for Composition {
    type Err = ParseCompositionError;

    /// Accepts `2,1,2,1`, optionally wrapped in parentheses. The empty string
    /// (or `()`) is the empty composition.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let err = || ParseCompositionError(String::from(s));
        let body = s.trim();
        let body = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| err()))
            .collect::<core::result::Result<Vec<_>, _>>()?;
        Composition::new(parts).map_err(|_| err())
    }
}

/// A weakly decreasing composition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Composition);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(QsymError::NotAPartition { index: index + 1 });
        }
        Ok(Partition(Composition::new(parts)?))
    }

    pub fn parts(&self) -> &[usize] {
        self.0.parts()
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.0
    }

    /// `λ′ᵢ = #{j : λⱼ ≥ i}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts().first().copied().unwrap_or(0);
        let parts = (1..=first).map(|i| self.parts().iter().filter(|&&p| p >= i).count()).collect();
        Partition(Composition::new(parts).expect("column lengths are positive"))
    }

    /// `self ≤ other` in dominance order.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(QsymError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.parts().get(k).copied().unwrap_or(0);
            b += other.parts().get(k).copied().unwrap_or(0);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All distinct compositions `α` with `λ(α) = self`, ascending revlex.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let mut parts = self.parts().to_vec();
        parts.sort_unstable();
        let mut out = Vec::new();
        loop {
            out.push(Composition::new(parts.clone()).expect("positive parts"));
            if !next_permutation(&mut parts) {
                break;
            }
        }
        sort_revlex(&mut out);
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl TryFrom<Composition> for Partition {
    type Error = QsymError;

    fn try_from(c: Composition) -> Result<Self> {
        Partition::new(c.parts)
    }
}

/// Nonnegative parts; the type (content) of a filling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    /// Trailing zeros are dropped so that equal contents compare equal.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Drops every zero.
    pub fn collapse(&self) -> Composition {
        Composition::new(self.0.iter().copied().filter(|&p| p > 0).collect()).expect("zeros removed")
    }

    /// `Some(β)` when the nonzero entries form an initial segment, i.e. the
    /// monomial is the leading term `x₁^β₁ ⋯ x_k^β_k` of `M_β`.
    pub fn as_leading_composition(&self) -> Option<Composition> {
        Composition::new(self.0.clone()).ok()
    }
}

pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return alloc::vec![Composition::empty()];
    }
    let mut out: Vec<Composition> = (0u64..(1u64 << (n - 1)))
        .map(|mask| {
            let set: Vec<usize> = (1..n).filter(|s| mask >> (s - 1) & 1 == 1).collect();
            composition_from_subset(&set, n).expect("subset of [n-1]")
        })
        .collect();
    sort_revlex(&mut out);
    out
}

/// Partitions of `n` in descending lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::new(prefix.clone()).expect("built decreasing"));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn subset_of(alpha: &Composition) -> Vec<usize> {
    alpha.subset()
}

/// The composition of `n` whose partial-sum set is `subset`.
pub fn composition_from_subset(subset: &[usize], n: usize) -> Result<Composition> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&s| s == 0 || s >= n) {
        return Err(QsymError::SubsetOutOfRange { element: bad, max: n.saturating_sub(1) });
    }
    if n == 0 {
        return Ok(Composition::empty());
    }
    let mut parts = Vec::with_capacity(sorted.len() + 1);
    let mut prev = 0;
    for s in sorted {
        parts.push(s - prev);
        prev = s;
    }
    parts.push(n - prev);
    Composition::new(parts)
}

pub fn complement(alpha: &Composition) -> Composition {
    alpha.complement()
}

pub fn reverse(alpha: &Composition) -> Composition {
    alpha.reverse()
}

pub fn refinement_leq(alpha: &Composition, beta: &Composition) -> bool {
    alpha.refines(beta)
}

pub fn lambda_of(alpha: &Composition) -> Partition {
    alpha.lambda()
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    mu.dominated_by(lambda)
}

/// Total order on compositions of one degree: dominance of the underlying
/// partitions, lexicographic on the partitions when those are
/// dominance-incomparable, then lexicographic on the compositions.
pub fn revlex_cmp(alpha: &Composition, beta: &Composition) -> Result<Ordering> {
    if alpha.degree() != beta.degree() {
        return Err(QsymError::DegreeMismatch { left: alpha.degree(), right: beta.degree() });
    }
    Ok(revlex_cmp_same_degree(alpha, beta))
}

fn revlex_cmp_same_degree(alpha: &Composition, beta: &Composition) -> Ordering {
    let (la, lb) = (alpha.lambda(), beta.lambda());
    let by_shape = if la == lb {
        Ordering::Equal
    } else {
        match (la.dominated_by(&lb), lb.dominated_by(&la)) {
            (Ok(true), _) => Ordering::Less,
            (_, Ok(true)) => Ordering::Greater,
            _ => la.parts().cmp(lb.parts()),
        }
    };
    by_shape.then_with(|| alpha.parts().cmp(beta.parts()))
}

/// `α ≤_r β`.
pub fn revlex_leq(alpha: &Composition, beta: &Composition) -> Result<bool> {
    Ok(revlex_cmp(alpha, beta)? != Ordering::Greater)
}

/// Sorts compositions of a common degree into ascending revlex order.
pub fn sort_revlex(list: &mut [Composition]) {
    list.sort_by(revlex_cmp_same_degree);
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(compositions_of(0), vec![Composition::empty()]);
        assert_eq!(compositions_of(1), vec![c(&[1])]);
        assert_eq!(compositions_of(4).len(), 8);
        for n in 1..=10 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn revlex_order_at_four() {
        let order: Vec<_> = compositions_of(4).into_iter().rev().collect();
        let expected = [&[4][..], &[3, 1], &[1, 3], &[2, 2], &[2, 1, 1], &[1, 2, 1], &[1, 1, 2], &[1, 1, 1, 1]];
        assert_eq!(order, expected.iter().map(|p| c(p)).collect::<Vec<_>>());
        assert!(revlex_leq(&c(&[3, 1]), &c(&[4])).unwrap());
        assert!(revlex_leq(&c(&[1, 3]), &c(&[3, 1])).unwrap());
        assert!(compositions_of(4).iter().all(|a| revlex_leq(&c(&[1, 1, 1, 1]), a).unwrap()));
        assert!(revlex_cmp(&c(&[1]), &c(&[2])).is_err());
    }

    #[test]
    fn subsets_and_inverse() {
        assert_eq!(subset_of(&c(&[1, 4, 2])), vec![1, 5]);
        assert_eq!(subset_of(&c(&[6])), Vec::<usize>::new());
        assert_eq!(subset_of(&c(&[1, 1, 1, 1])), vec![1, 2, 3]);
        assert_eq!(composition_from_subset(&[1, 5], 7).unwrap(), c(&[1, 4, 2]));
        assert_eq!(composition_from_subset(&[], 5).unwrap(), c(&[5]));
        assert_eq!(composition_from_subset(&[2, 3, 4, 6], 7).unwrap(), c(&[2, 1, 1, 2, 1]));
        assert_eq!(
            composition_from_subset(&[7], 7),
            Err(QsymError::SubsetOutOfRange { element: 7, max: 6 })
        );
        assert!(composition_from_subset(&[0], 3).is_err());
    }

    #[test]
    fn complement_and_reverse() {
        assert_eq!(c(&[1, 4, 2]).complement(), c(&[2, 1, 1, 2, 1]));
        assert_eq!(c(&[2, 1, 1, 2, 1]).complement(), c(&[1, 4, 2]));
        assert_eq!(c(&[5]).complement(), Composition::ones(5));
        assert_eq!(c(&[1, 4, 2]).reverse(), c(&[2, 4, 1]));
        assert_eq!(Composition::empty().reverse(), Composition::empty());
        assert_eq!(c(&[2, 1, 1, 2, 1]).reverse(), c(&[1, 2, 1, 1, 2]));
    }

    #[test]
    fn refinement_examples() {
        assert!(refinement_leq(&c(&[3, 1, 1, 2, 1]), &c(&[3, 2, 3])));
        assert!(!refinement_leq(&c(&[3, 1, 2, 1, 1]), &c(&[3, 2, 3])));
        assert!(!refinement_leq(&c(&[3, 2, 3]), &c(&[3, 1, 2, 1, 1])));
        assert!(!refinement_leq(&c(&[1, 1]), &c(&[3])));
        let a = c(&[2, 3]);
        assert!(refinement_leq(&a, &a));
        assert_eq!(c(&[2, 1]).refinements(), vec![c(&[1, 1, 1]), c(&[2, 1])]);
    }

    #[test]
    fn partitions() {
        assert_eq!(c(&[1, 3, 2, 1]).lambda(), p(&[3, 2, 1, 1]));
        assert_eq!(Composition::empty().lambda(), Partition::default());
        assert_eq!(c(&[2, 2]).lambda(), p(&[2, 2]));
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert!(dominance_leq(&p(&[1, 1, 1, 1]), &p(&[2, 1, 1])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(dominance_leq(&p(&[3, 1]), &p(&[3, 1])).unwrap());
        assert!(dominance_leq(&p(&[3]), &p(&[2, 1, 1])).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Partition::default()]);
    }

    #[test]
    fn zero_parts_rejected() {
        assert_eq!(Composition::new(vec![2, 0, 1]), Err(QsymError::ZeroPart { index: 1 }));
    }

    #[test]
    fn parsing() {
        assert_eq!("2,1,2,1".parse::<Composition>().unwrap(), c(&[2, 1, 2, 1]));
        assert_eq!("(1, 3)".parse::<Composition>().unwrap(), c(&[1, 3]));
        assert_eq!("".parse::<Composition>().unwrap(), Composition::empty());
        assert!("1,x".parse::<Composition>().is_err());
        assert!("1,0".parse::<Composition>().is_err());
        assert_eq!(alloc::format!("{}", c(&[2, 1, 2, 1])), "2,1,2,1");
    }
}
