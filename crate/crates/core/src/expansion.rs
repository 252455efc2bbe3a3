//! Sparse homogeneous expansions indexed by partitions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Num;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Exact rational coefficient.
pub type Rational = BigRational;

/// A finite, homogeneous linear combination of basis elements indexed by
/// partitions. Zero coefficients are never stored and every key has the
/// same size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Expansion<C> {
    terms: BTreeMap<Partition, C>,
}

/// Integer combination of Schur functions (equivalently, a virtual
/// character of a symmetric group).
pub type SchurExpansion = Expansion<BigInt>;

/// Rational combination of power sums.
pub type PowerSumExpansion = Expansion<Rational>;

impl<C> Default for Expansion<C> {
    fn default() -> Self {
        Expansion {
            terms: BTreeMap::new(),
        }
    }
}

impl<C> Expansion<C>
where
    C: Num + Clone + Neg<Output = C>,
{
    pub fn zero() -> Self {
        Self::default()
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, C::one());
        Expansion { terms }
    }

    /// Collects `(partition, coefficient)` pairs, summing repeats and
    /// dropping zeros. Fails on mixed degrees.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
    {
        let mut out = Self::zero();
        for (lambda, c) in terms {
            out.check_degree(lambda.size())?;
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    /// Degree of the indexing partitions; `None` for the zero expansion.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Partition::size)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `lambda`, zero when absent.
    pub fn coefficient(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical (reverse-lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<Partition, C> {
        &self.terms
    }

    fn check_degree(&self, other: usize) -> Result<()> {
        match self.degree() {
            Some(d) if d != other => Err(Error::DegreeMismatch {
                left: d,
                right: other,
            }),
            _ => Ok(()),
        }
    }

    /// Adds `c` to the coefficient of `lambda`. Homogeneity is the caller's
    /// responsibility.
    pub(crate) fn add_term(&mut self, lambda: Partition, c: C) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.degree().is_none_or(|d| d == lambda.size()));
        match self.terms.get_mut(&lambda) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&lambda);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if let Some(d) = other.degree() {
            self.check_degree(d)?;
        }
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn subtract(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-C::one()))
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Expansion {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.clone() * factor.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every index partition, summing any collisions.
    pub fn map_partitions<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Partition) -> Partition,
    {
        let mut out = Self::zero();
        for (lambda, c) in &self.terms {
            out.add_term(f(lambda), c.clone());
        }
        out
    }
}

impl SchurExpansion {
    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.sign() != num_bigint::Sign::Minus)
    }

    /// `Σ mult(λ)·dim χ^λ`, the degree of the (virtual) character.
    pub fn character_degree(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(l, c)| c * BigInt::from(l.dimension()))
            .sum()
    }
}

impl<C: fmt::Display> fmt::Display for Expansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{lambda}")?;
        }
        Ok(())
    }
}

impl<C: fmt::Display> fmt::Debug for Expansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<C> FromIterator<(Partition, C)> for Expansion<C>
where
    C: Num + Clone + Neg<Output = C>,
{
    /// Panics on mixed degrees; use [`Expansion::from_terms`] to recover.
    fn from_iter<T: IntoIterator<Item = (Partition, C)>>(iter: T) -> Self {
        Self::from_terms(iter).expect("mixed-degree expansion")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(spec: &[(&str, i64)]) -> SchurExpansion {
        spec.iter()
            .map(|(l, c)| (l.parse().unwrap(), BigInt::from(*c)))
            .collect()
    }

    #[test]
    fn add_subtract_scale() {
        let f = s(&[("2", 1), ("1,1", 1)]);
        assert_eq!(f.subtract(&s(&[("1,1", 1)])).unwrap(), s(&[("2", 1)]));
        assert!(f.scale(&BigInt::from(0)).is_zero());
        assert_eq!(f.add(&SchurExpansion::zero()).unwrap(), f);
        assert_eq!(SchurExpansion::zero().add(&f).unwrap(), f);
        assert_eq!(f.subtract(&f).unwrap(), SchurExpansion::zero());
    }

    #[test]
    fn degree_mismatch() {
        let f = s(&[("2", 1)]);
        let g = s(&[("3", 1)]);
        assert_eq!(
            f.add(&g),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
        let mixed = SchurExpansion::from_terms(vec![
            ("2".parse().unwrap(), BigInt::from(1)),
            ("1".parse().unwrap(), BigInt::from(1)),
        ]);
        assert!(matches!(mixed, Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn zero_terms_are_pruned() {
        let f = s(&[("2", 1), ("2", -1), ("1,1", 3)]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient(&"2".parse().unwrap()), BigInt::from(0));
    }

    #[test]
    fn canonical_iteration_order() {
        let f = s(&[("1,1,1", 1), ("3", 2), ("2,1", 1)]);
        let keys: Vec<String> = f.iter().map(|(l, _)| l.to_text()).collect();
        assert_eq!(keys, ["3", "2,1", "1,1,1"]);
    }
}
