//! Integer partitions, the doubling constructions `2α` and `2[α]`, and the
//! part statistics used by the closed-form multiplicity formulas.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is reverse-lexicographic, so sorting (or iterating a `BTreeMap`
/// keyed by partitions) yields the canonical order `(4), (3,1), (2,2),
/// (2,1,1), (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-indexed, with zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// True if the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `2α`: every part doubled.
    pub fn double(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    /// Inverse of [`Partition::double`].
    pub fn halve_even(&self) -> Result<Partition> {
        if !self.all_parts_even() {
            return Err(Error::OddPart(self.clone()));
        }
        Ok(Partition {
            parts: self.parts.iter().map(|p| p / 2).collect(),
        })
    }

    /// `2[α]` for `α` with distinct parts: the partition with Frobenius
    /// coordinates `(α₁,…,α_k | α₁−1,…,α_k−1)`, so its `i`-th leading
    /// diagonal hook has length `2αᵢ` and its `i`-th part is `αᵢ + i`.
    pub fn double_hook(&self) -> Result<Partition> {
        if !self.has_distinct_parts() {
            return Err(Error::RepeatedParts(self.clone()));
        }
        let k = self.len();
        // column i (1-based) of the result has length α_i + i - 1
        let col_len: Vec<usize> = self.parts.iter().enumerate().map(|(i, a)| a + i).collect();
        let mut parts: Vec<usize> = self.parts.iter().enumerate().map(|(i, a)| a + i + 1).collect();
        let depth = col_len.first().copied().unwrap_or(0);
        for row in k + 1..=depth {
            parts.push(col_len.iter().filter(|&&c| c >= row).count());
        }
        Ok(Partition::from_sorted(parts))
    }

    /// Durfee size: the number of cells `(i, i)` on the main diagonal.
    pub fn durfee(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    /// Lengths `arm + leg + 1` of the leading diagonal hooks, top to bottom.
    pub fn diagonal_hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        (0..self.durfee())
            .map(|i| (self.parts[i] - i) + (conj.parts[i] - i) - 1)
            .collect()
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `a_λ`: the number of distinct part values.
    pub fn distinct_part_count(&self) -> usize {
        self.multiplicities().len()
    }

    /// `b_γ`: indices `i` with `γᵢ > γᵢ₊₁ + 1`, reading `γ_{k+1} = 0`.
    pub fn drop_count(&self) -> usize {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1) + 1)
            .count()
    }

    /// `r_λ`: the number of part values occurring at least twice.
    pub fn repeated_part_count(&self) -> usize {
        self.multiplicities().iter().filter(|(_, m)| *m >= 2).count()
    }

    /// `|N_λ(X|Y)|`: the number of `k ≥ 0` with `2k + x` a part of `λ` for
    /// every `x ∈ X` and `2k + y` not a part for every `y ∈ Y`.
    pub fn n_lambda(&self, x: &[usize], y: &[usize]) -> Result<usize> {
        let min_x = *x.iter().min().ok_or(Error::EmptyX)?;
        let values: BTreeSet<usize> = self.parts.iter().copied().collect();
        // 2k + min(X) must be a part, so k is bounded by the largest part
        let count = (0..)
            .take_while(|k| 2 * k + min_x <= self.first())
            .filter(|k| {
                x.iter().all(|v| values.contains(&(2 * k + v)))
                    && y.iter().all(|v| !values.contains(&(2 * k + v)))
            })
            .count();
        Ok(count)
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j) + (conj.parts[j] - i) - 1);
            }
        }
        hooks
    }

    /// Degree of the irreducible character `χ^λ`, by the hook length formula.
    pub fn dimension(&self) -> BigUint {
        let hooks: BigUint = self.hook_lengths().into_iter().map(BigUint::from).product();
        factorial(self.size()) / hooks
    }

    /// `z_λ = ∏ i^{mᵢ} mᵢ!`, the centralizer order of cycle type `λ`.
    pub fn z(&self) -> BigUint {
        self.multiplicities()
            .into_iter()
            .map(|(v, m)| BigUint::from(v).pow(m as u32) * factorial(m))
            .product()
    }

    /// Syntax accepted by [`FromStr`]: `6,4,4,1,1`, or `-` when empty.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            self.parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `6,4,4,1,1`, exponent shorthand such as `4^2,1`, and `-` or
    /// the empty string for the empty partition. Surrounding parentheses
    /// and whitespace are ignored.
    fn from_str(input: &str) -> Result<Self> {
        let err = |reason: String| Error::Parse {
            input: input.to_string(),
            reason,
        };
        let body = input.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let token = token.trim();
            let (value, reps) = match token.split_once('^') {
                Some((v, e)) => (v.trim(), e.trim()),
                None => (token, "1"),
            };
            let value: usize = value
                .parse()
                .map_err(|_| err(format!("bad part {token:?}")))?;
            let reps: usize = reps
                .parse()
                .map_err(|_| err(format!("bad exponent in {token:?}")))?;
            if value == 0 {
                return Err(err("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(value, reps));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(err("parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn generate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, false, &mut current, &mut out);
    out
}

/// All partitions of `n` into distinct parts, reverse-lexicographic.
pub fn generate_distinct_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, true, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    distinct: bool,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        if distinct && part * (part + 1) / 2 < remaining {
            // parts part, part-1, ..., 1 cannot reach `remaining`
            break;
        }
        current.push(part);
        let next_max = if distinct { part - 1 } else { part };
        fill(remaining - part, next_max, distinct, current, out);
        current.pop();
    }
}
