//! Littlewood–Richardson coefficients and products in the Schur basis.
//!
//! `c^λ_{μν}` is computed by filling the skew shape `λ/μ` cell by cell in
//! reverse reading order (rows top to bottom, each row right to left). Each
//! placement is checked against row weakness, column strictness and the
//! lattice condition on the partial reading word, so dead branches are cut
//! as soon as they appear.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::expansion::SchurExpansion;
use crate::partition::{generate_partitions, Partition};

/// The Littlewood–Richardson coefficient `c^λ_{μ,ν}`. Zero whenever the
/// sizes do not add up or `μ ⊄ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    LrSearch::new(lambda, mu, nu).count()
}

struct LrSearch<'a> {
    /// `(row, column)` of every skew cell in reverse reading order.
    cells: Vec<(usize, usize)>,
    lambda: &'a Partition,
    mu: &'a Partition,
    content: &'a [usize],
    filling: Vec<Vec<u8>>,
    counts: Vec<usize>,
}

impl<'a> LrSearch<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, nu: &'a Partition) -> Self {
        let cells = (0..lambda.len())
            .flat_map(|i| (mu.part(i)..lambda.part(i)).rev().map(move |j| (i, j)))
            .collect();
        let filling = (0..lambda.len()).map(|i| vec![0; lambda.part(i)]).collect();
        LrSearch {
            cells,
            lambda,
            mu,
            content: nu.parts(),
            filling,
            counts: vec![0; nu.len() + 1],
        }
    }

    fn count(mut self) -> u64 {
        self.descend(0)
    }

    fn descend(&mut self, idx: usize) -> u64 {
        let Some(&(i, j)) = self.cells.get(idx) else {
            return 1;
        };
        // rows weakly increase left to right: bounded by the cell to the right
        let mut hi = if j + 1 < self.lambda.part(i) {
            self.filling[i][j + 1] as usize
        } else {
            self.content.len()
        };
        // an LR tableau never holds a label larger than its row number
        hi = hi.min(i + 1);
        // columns strictly increase downwards
        let lo = if i > 0 && j >= self.mu.part(i - 1) {
            self.filling[i - 1][j] as usize + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            if self.counts[v] == self.content[v - 1] {
                continue;
            }
            if v > 1 && self.counts[v - 1] <= self.counts[v] {
                continue;
            }
            self.counts[v] += 1;
            self.filling[i][j] = v as u8;
            total += self.descend(idx + 1);
            self.counts[v] -= 1;
        }
        self.filling[i][j] = 0;
        total
    }
}

/// True if `lambda / mu` is a horizontal strip (no two cells in a column).
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i + 1) <= mu.part(i))
}

/// True if `lambda / mu` is a vertical strip (no two cells in a row).
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|i| lambda.part(i) <= mu.part(i) + 1)
}

/// Pieri fast path for a one-row `nu`; agrees with [`lr_coefficient`].
pub fn lr_coefficient_pieri_row(lambda: &Partition, mu: &Partition, row: usize) -> u64 {
    u64::from(lambda.size() == mu.size() + row && is_horizontal_strip(lambda, mu))
}

/// Dual Pieri fast path for a one-column `nu`.
pub fn lr_coefficient_pieri_column(lambda: &Partition, mu: &Partition, column: usize) -> u64 {
    u64::from(lambda.size() == mu.size() + column && is_vertical_strip(lambda, mu))
}

type ProductCache = RwLock<HashMap<(Partition, Partition), Arc<Vec<(Partition, u64)>>>>;

fn product_cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn partitions_cached(n: usize) -> Arc<Vec<Partition>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<Partition>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let parts = Arc::new(generate_partitions(n));
    cache
        .write()
        .unwrap()
        .entry(n)
        .or_insert(parts)
        .clone()
}

/// `s_μ · s_ν` as `(λ, c^λ_{μν})` pairs with nonzero coefficient, in
/// canonical order. Results are memoized for the life of the process.
pub fn schur_product(mu: &Partition, nu: &Partition) -> Arc<Vec<(Partition, u64)>> {
    // c^λ_{μν} = c^λ_{νμ}; cache under one orientation
    let key = if mu <= nu {
        (mu.clone(), nu.clone())
    } else {
        (nu.clone(), mu.clone())
    };
    if let Some(hit) = product_cache().read().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let (outer, inner) = &key;
    // enumerate fillings with the shorter factor as the content
    let (base, content) = if outer.size() >= inner.size() {
        (outer, inner)
    } else {
        (inner, outer)
    };
    let max_first = base.first() + content.first();
    let max_len = base.len() + content.len();
    let product: Vec<(Partition, u64)> = partitions_cached(base.size() + content.size())
        .iter()
        .filter(|l| l.first() <= max_first && l.len() <= max_len)
        .filter_map(|l| {
            let c = lr_coefficient(l, base, content);
            (c > 0).then(|| (l.clone(), c))
        })
        .collect();
    let product = Arc::new(product);
    product_cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(product)
        .clone()
}

/// Bilinear product of Schur expansions:
/// the coefficient of `s_λ` is `Σ f(μ) g(ν) c^λ_{μν}`.
pub fn schur_multiply(f: &SchurExpansion, g: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (mu, a) in f.iter() {
        for (nu, b) in g.iter() {
            let ab = a * b;
            for (lambda, c) in schur_product(mu, nu).iter() {
                out.add_term(lambda.clone(), &ab * BigInt::from(*c));
            }
        }
    }
    out
}
