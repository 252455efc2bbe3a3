//! Closed decompositions of `s_ν ∘ s_(2)` (the twisted Foulkes characters
//! `φ^(2^n)_ν`) for one-row, one-column, two-row, two-column and hook `ν`.
//!
//! Every formula is an alternating sum of products `s_{2α} · s_{2[β]}`
//! expanded with the Littlewood–Richardson rule. Sums over partitions of a
//! negative integer are empty, and `s_∅ = 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::characters::omega_schur;
use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::lr::{is_horizontal_strip, schur_multiply};
use crate::partition::{generate_distinct_partitions, generate_partitions, Partition};

/// `Σ_{α ⊢ n} s_{2α}`: the decomposition of `φ^(2^n)_(n)`.
pub fn phi_one_row(n: usize) -> SchurExpansion {
    generate_partitions(n)
        .iter()
        .map(|a| (a.double(), BigInt::one()))
        .collect()
}

/// `Σ s_{2[α]}` over `α ⊢ n` with distinct parts: `φ^(2^n)_(1^n)`.
pub fn phi_one_column(n: usize) -> SchurExpansion {
    generate_distinct_partitions(n)
        .iter()
        .map(|a| (a.double_hook().expect("distinct parts"), BigInt::one()))
        .collect()
}

fn one_row(k: isize) -> SchurExpansion {
    usize::try_from(k).map_or_else(|_| SchurExpansion::zero(), phi_one_row)
}

fn one_column(k: isize) -> SchurExpansion {
    usize::try_from(k).map_or_else(|_| SchurExpansion::zero(), phi_one_column)
}

/// Induction from `S_{2(n−r)} × S_{2r}` to `S_{2n}` in the Schur basis:
/// the coefficient of `s_λ` is `Σ c^λ_{ν,μ} f(ν) g(μ)`.
///
/// Homogeneity of `f` and `g` is guaranteed by [`SchurExpansion`], so the
/// product is always well defined.
pub fn induce_product(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    schur_multiply(f, g)
}

fn alternating_sum(terms: impl IntoIterator<Item = (bool, SchurExpansion)>) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (negative, term) in terms {
        out = if negative {
            out.subtract(&term)
        } else {
            out.add(&term)
        }
        .expect("all terms share the degree 2n");
    }
    out
}

/// `φ^(2^n)_(n−r,r) = Σ_λ Σ (c^λ_{2α,2β} − c^λ_{2γ,2δ}) s_λ` over
/// `α ⊢ n−r`, `β ⊢ r`, `γ ⊢ n−r+1`, `δ ⊢ r−1`.
pub fn phi_two_row(n: usize, r: usize) -> Result<SchurExpansion> {
    if 2 * r > n {
        return Err(Error::InvalidShape(format!(
            "(n-r, r) = ({}, {r}) is not a partition",
            n as isize - r as isize
        )));
    }
    let (n, r) = (n as isize, r as isize);
    Ok(alternating_sum([
        (false, induce_product(&one_row(n - r), &one_row(r))),
        (true, induce_product(&one_row(n - r + 1), &one_row(r - 1))),
    ]))
}

/// `φ^(2^n)_(2^r,1^{n−2r})`: as [`phi_two_row`] with `2[·]` over
/// distinct-part partitions in place of `2·`.
pub fn phi_two_column(n: usize, r: usize) -> Result<SchurExpansion> {
    if 2 * r > n {
        return Err(Error::InvalidShape(format!(
            "(2^{r}, 1^{}) is not a partition",
            n as isize - 2 * r as isize
        )));
    }
    let (n, r) = (n as isize, r as isize);
    Ok(alternating_sum([
        (false, induce_product(&one_column(n - r), &one_column(r))),
        (true, induce_product(&one_column(n - r + 1), &one_column(r - 1))),
    ]))
}

/// Which of the two hook expansions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HookVariant {
    /// `Σ_{j=0}^{r} (−1)^j Σ c^λ_{2α,2[β]}`, `α ⊢ n−r+j`, `β ⊢ r−j`.
    #[default]
    First,
    /// `Σ_{j=1}^{n−r} (−1)^{j−1} Σ c^λ_{2γ,2[δ]}`, `γ ⊢ n−r−j`, `δ ⊢ r+j`.
    Second,
}

/// `φ^(2^n)_(n−r,1^r)` for a hook `ν`, `0 ≤ r ≤ n−1`.
pub fn phi_hook(n: usize, r: usize, variant: HookVariant) -> Result<SchurExpansion> {
    if r >= n {
        return Err(Error::InvalidShape(format!(
            "hook (n-r, 1^r) needs r < n; got n = {n}, r = {r}"
        )));
    }
    let (n, r) = (n as isize, r as isize);
    let out = match variant {
        HookVariant::First => alternating_sum((0..=r).map(|j| {
            (j % 2 == 1, induce_product(&one_row(n - r + j), &one_column(r - j)))
        })),
        HookVariant::Second => alternating_sum((1..=n - r).map(|j| {
            (j % 2 == 0, induce_product(&one_row(n - r - j), &one_column(r + j)))
        })),
    };
    Ok(out)
}

fn odd_parts(lambda: &Partition) -> Vec<usize> {
    lambda.parts().iter().copied().filter(|p| p % 2 == 1).collect()
}

/// `φ^(2^n)_(n−1,1)` in closed form: `Σ_{γ⊢n} (a_{2γ} − 1) s_{2γ}` plus
/// every `s_μ`, `μ ⊢ 2n`, whose odd parts are exactly two distinct values.
pub fn phi_hook_depth1_closed(n: usize) -> Result<SchurExpansion> {
    if n < 2 {
        return Err(Error::InvalidShape(format!("(n-1, 1) needs n >= 2; got {n}")));
    }
    let mut out = SchurExpansion::zero();
    for gamma in generate_partitions(n) {
        let even = gamma.double();
        let a = even.distinct_part_count() as i64;
        out.add_term(even, BigInt::from(a - 1));
    }
    for mu in generate_partitions(2 * n) {
        let odd = odd_parts(&mu);
        if odd.len() == 2 && odd[0] != odd[1] {
            out.add_term(mu, BigInt::one());
        }
    }
    Ok(out)
}

/// Partitions obtained from `base` by adding two cells in different
/// columns that are not the arm end and the leg end of one leading
/// diagonal hook of `base`.
fn two_node_extensions(base: &Partition) -> Vec<Partition> {
    let conj = base.conjugate();
    let target = base.size() + 2;
    let forbidden: Vec<[(usize, usize); 2]> = (0..base.durfee())
        .map(|i| [(i, base.part(i)), (conj.part(i), i)])
        .collect();
    generate_partitions(target)
        .into_iter()
        .filter(|mu| is_horizontal_strip(mu, base))
        .filter(|mu| {
            let mut added: Vec<(usize, usize)> = (0..mu.len())
                .flat_map(|i| (base.part(i)..mu.part(i)).map(move |j| (i, j)))
                .collect();
            added.sort_unstable();
            !forbidden.iter().any(|pair| {
                let mut pair = *pair;
                pair.sort_unstable();
                pair[..] == added[..]
            })
        })
        .collect()
}

/// `φ^(2^n)_(2,1^{n−2})` in closed form: `Σ_γ (b_γ − 1) s_{2[γ]}` over
/// distinct-part `γ ⊢ n`, plus `s_μ` once for every `μ` reachable from some
/// `2[α]`, `α ⊢ n−1` distinct, by [`two_node_extensions`].
pub fn phi_two_one_column_closed(n: usize) -> Result<SchurExpansion> {
    if n < 2 {
        return Err(Error::InvalidShape(format!(
            "(2, 1^(n-2)) needs n >= 2; got {n}"
        )));
    }
    let mut out = SchurExpansion::zero();
    for gamma in generate_distinct_partitions(n) {
        let b = gamma.drop_count() as i64;
        out.add_term(gamma.double_hook()?, BigInt::from(b - 1));
    }
    let reachable: BTreeSet<Partition> = generate_distinct_partitions(n - 1)
        .iter()
        .flat_map(|alpha| two_node_extensions(&alpha.double_hook().expect("distinct parts")))
        .collect();
    for mu in reachable {
        out.add_term(mu, BigInt::one());
    }
    Ok(out)
}

/// The two `ν` families tabulated in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// `ν = (n−2, 1, 1)`, defined for `n ≥ 3`.
    HookTwo,
    /// `ν = (n−2, 2)`, defined for `n ≥ 4`.
    TwoRowTwo,
}

impl TableKind {
    pub fn min_n(self) -> usize {
        match self {
            TableKind::HookTwo => 3,
            TableKind::TwoRowTwo => 4,
        }
    }

    pub fn nu(self, n: usize) -> Result<Partition> {
        if n < self.min_n() {
            return Err(Error::InvalidShape(format!(
                "{self} needs n >= {}; got {n}",
                self.min_n()
            )));
        }
        Ok(match self {
            TableKind::HookTwo => Partition::from_sorted(vec![n - 2, 1, 1]),
            TableKind::TwoRowTwo => Partition::from_sorted(vec![n - 2, 2]),
        })
    }

    /// The theorem-formula decomposition of the corresponding `φ`.
    pub fn formula(self, n: usize) -> Result<SchurExpansion> {
        self.nu(n)?;
        match self {
            TableKind::HookTwo => phi_hook(n, 2, HookVariant::First),
            TableKind::TwoRowTwo => phi_two_row(n, 2),
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::HookTwo => "n-2,1,1",
            TableKind::TwoRowTwo => "n-2,2",
        })
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "n-2,1,1" | "n-2,1^2" | "hook" => Ok(TableKind::HookTwo),
            "n-2,2" | "two-row" => Ok(TableKind::TwoRowTwo),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected n-2,1,1 or n-2,2".into(),
            }),
        }
    }
}

/// Classification of `λ` by the multiset of its odd parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table1Class {
    AllEven,
    TwoDistinctOdd,
    TwoEqualOdd,
    FourDistinctOdd,
    FourOddOnePair,
    FourOddTwoPairs,
    Other,
}

impl Table1Class {
    pub fn of(lambda: &Partition) -> Self {
        let odd = Partition::from_sorted(odd_parts(lambda));
        let mut mults: Vec<usize> = odd.multiplicities().iter().map(|(_, m)| *m).collect();
        mults.sort_unstable();
        match mults.as_slice() {
            [] => Table1Class::AllEven,
            [1, 1] => Table1Class::TwoDistinctOdd,
            [2] => Table1Class::TwoEqualOdd,
            [1, 1, 1, 1] => Table1Class::FourDistinctOdd,
            [1, 1, 2] => Table1Class::FourOddOnePair,
            [2, 2] => Table1Class::FourOddTwoPairs,
            _ => Table1Class::Other,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Table1Class::AllEven => "all-even",
            Table1Class::TwoDistinctOdd => "two-distinct-odd",
            Table1Class::TwoEqualOdd => "two-equal-odd",
            Table1Class::FourDistinctOdd => "four-distinct-odd",
            Table1Class::FourOddOnePair => "four-odd-one-pair",
            Table1Class::FourOddTwoPairs => "four-odd-two-pairs",
            Table1Class::Other => "other",
        }
    }
}

impl fmt::Display for Table1Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Closed-form multiplicity of `χ^λ` in `φ^(2^n)_ν` for
/// `ν ∈ {(n−2,1²), (n−2,2)}`, read off from the odd parts of `λ`.
pub fn table1_multiplicity(lambda: &Partition, kind: TableKind, n: usize) -> Result<i64> {
    kind.nu(n)?;
    if lambda.size() != 2 * n {
        return Err(Error::InvalidShape(format!(
            "{lambda} has size {}, expected {}",
            lambda.size(),
            2 * n
        )));
    }
    let nl = |x: &[usize], y: &[usize]| lambda.n_lambda(x, y).map(|v| v as i64);
    let a = lambda.distinct_part_count() as i64;
    let r = lambda.repeated_part_count() as i64;
    let value = match (Table1Class::of(lambda), kind) {
        (Table1Class::AllEven, TableKind::HookTwo) => a * (a - 1) / 2 - a + 1,
        (Table1Class::AllEven, TableKind::TwoRowTwo) => a * (a - 2) + nl(&[4], &[2])? + r,
        (Table1Class::TwoDistinctOdd, TableKind::HookTwo) => {
            nl(&[3], &[2])? + 2 * nl(&[2], &[1])? + nl(&[1, 2], &[])? - 1
        }
        (Table1Class::TwoDistinctOdd, TableKind::TwoRowTwo) => {
            2 * nl(&[2], &[1])? + nl(&[1, 2], &[])? + nl(&[3], &[1, 2])? - 1
        }
        (Table1Class::TwoEqualOdd, TableKind::HookTwo) => nl(&[3], &[2])? + nl(&[2], &[1])?,
        (Table1Class::TwoEqualOdd, TableKind::TwoRowTwo) => 0,
        (Table1Class::FourDistinctOdd, _) => 3,
        (Table1Class::FourOddOnePair, _) => 1,
        (Table1Class::FourOddTwoPairs, TableKind::HookTwo) => 0,
        (Table1Class::FourOddTwoPairs, TableKind::TwoRowTwo) => 1,
        (Table1Class::Other, _) => 0,
    };
    Ok(value)
}

/// `s_ν ∘ s_(1,1)` from `s_ν ∘ s_(2)`: apply `ω`, i.e. conjugate every
/// constituent.
pub fn omega_dual(f: &SchurExpansion) -> SchurExpansion {
    omega_schur(f)
}

/// Formula selector for [`decompose`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Pick by shape: two-row, then two-column, then hook.
    #[default]
    Auto,
    TwoRow,
    TwoColumn,
    HookFirst,
    HookSecond,
    /// One-row or one-column `ν`.
    Base,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::TwoRow => "two-row",
            Method::TwoColumn => "two-column",
            Method::HookFirst => "hook-first",
            Method::HookSecond => "hook-second",
            Method::Base => "base",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Method::Auto,
            "two-row" => Method::TwoRow,
            "two-column" => Method::TwoColumn,
            "hook-first" | "hook" => Method::HookFirst,
            "hook-second" => Method::HookSecond,
            "base" => Method::Base,
            other => {
                return Err(Error::Parse {
                    input: other.to_string(),
                    reason: "unknown method".into(),
                })
            }
        })
    }
}

fn is_two_row(nu: &Partition) -> bool {
    nu.len() <= 2
}

fn is_two_column(nu: &Partition) -> bool {
    nu.first() <= 2
}

fn is_hook(nu: &Partition) -> bool {
    !nu.is_empty() && nu.part(1) <= 1
}

/// Decomposes `s_ν ∘ s_(2)` with the named formula, returning the formula
/// that actually ran (never [`Method::Auto`]).
pub fn decompose(nu: &Partition, method: Method) -> Result<(Method, SchurExpansion)> {
    let n = nu.size();
    let resolved = match method {
        Method::Auto if is_two_row(nu) => Method::TwoRow,
        Method::Auto if is_two_column(nu) => Method::TwoColumn,
        Method::Auto if is_hook(nu) => Method::HookFirst,
        Method::Auto => return Err(Error::UnsupportedShape(nu.clone())),
        m => m,
    };
    let unsupported = || Error::UnsupportedShape(nu.clone());
    let result = match resolved {
        Method::TwoRow if is_two_row(nu) => phi_two_row(n, nu.part(1))?,
        Method::TwoColumn if is_two_column(nu) => {
            let twos = nu.parts().iter().filter(|&&p| p == 2).count();
            phi_two_column(n, twos)?
        }
        Method::HookFirst if is_hook(nu) => phi_hook(n, nu.len() - 1, HookVariant::First)?,
        Method::HookSecond if is_hook(nu) => phi_hook(n, nu.len() - 1, HookVariant::Second)?,
        Method::Base if nu.len() <= 1 => phi_one_row(n),
        Method::Base if nu.first() == 1 => phi_one_column(n),
        _ => return Err(unsupported()),
    };
    Ok((resolved, result))
}
