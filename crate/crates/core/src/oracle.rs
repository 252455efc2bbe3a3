//! Brute-force plethysm `s_ν ∘ s_(2)` and `s_ν ∘ s_(1,1)` through the
//! power-sum basis.
//!
//! `s_ν = Σ_μ χ^ν(μ)/z_μ · p_μ`, plethysm by a fixed `g` is a ring map with
//! `p_r ∘ g = g(x_i ↦ x_i^r)`, so `p_μ ∘ h₂ = ∏ (p_{μᵢ}² + p_{2μᵢ})/2`.
//! Multiplying out and converting back to Schur functions gives the answer
//! without touching the Littlewood–Richardson engine.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::characters::{powersum_to_schur, schur_to_powersum};
use crate::error::{Error, Result};
use crate::expansion::{PowerSumExpansion, Rational, SchurExpansion};
use crate::partition::Partition;

/// Largest `|ν|` the oracle accepts unless overridden.
pub const DEFAULT_CAP: usize = 9;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "FOULKES_MAX_N";

/// The inner plethysm factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Inner {
    /// `s_(2) = h₂`
    S2,
    /// `s_(1,1) = e₂`
    E2,
}

impl Inner {
    pub fn name(self) -> &'static str {
        match self {
            Inner::S2 => "s2",
            Inner::E2 => "e2",
        }
    }
}

impl fmt::Display for Inner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

/// `p_r ∘ h₂ = ½ p_(r,r) + ½ p_(2r)`.
pub fn p_plethysm_h2(r: usize) -> PowerSumExpansion {
    assert!(r >= 1, "p_0 is not a power sum");
    let mut out = PowerSumExpansion::zero();
    out.add_term(Partition::from_sorted(vec![r, r]), half());
    out.add_term(Partition::row(2 * r), half());
    out
}

/// `p_r ∘ e₂ = ½ p_(r,r) − ½ p_(2r)`.
pub fn p_plethysm_e2(r: usize) -> PowerSumExpansion {
    assert!(r >= 1, "p_0 is not a power sum");
    let mut out = PowerSumExpansion::zero();
    out.add_term(Partition::from_sorted(vec![r, r]), half());
    out.add_term(Partition::row(2 * r), -half());
    out
}

/// Product in the power-sum basis: `p_μ p_ρ = p_{μ ∪ ρ}`.
pub fn powersum_multiply(f: &PowerSumExpansion, g: &PowerSumExpansion) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::zero();
    for (mu, a) in f.iter() {
        for (rho, b) in g.iter() {
            let mut parts: Vec<usize> = mu.parts().iter().chain(rho.parts()).copied().collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            out.add_term(Partition::from_sorted(parts), a * b);
        }
    }
    out
}

/// `p_μ ∘ g` for the chosen inner factor.
fn p_mu_plethysm(mu: &Partition, inner: Inner) -> PowerSumExpansion {
    let mut acc = PowerSumExpansion::basis(Partition::empty());
    for &r in mu.parts() {
        let factor = match inner {
            Inner::S2 => p_plethysm_h2(r),
            Inner::E2 => p_plethysm_e2(r),
        };
        acc = powersum_multiply(&acc, &factor);
    }
    acc
}

/// The resource cap in force: `FOULKES_MAX_N` if set and parseable,
/// otherwise [`DEFAULT_CAP`].
pub fn configured_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

type OracleCache = RwLock<HashMap<(Partition, Inner), Arc<SchurExpansion>>>;

fn cache() -> &'static OracleCache {
    static CACHE: OnceLock<OracleCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `s_ν ∘ g` in the Schur basis, refusing `|ν| > cap`.
///
/// Results are cached per `(ν, g)` for the life of the process. Two
/// threads may race to compute the same entry; both produce the same
/// value and the first insertion wins.
pub fn oracle_plethysm(nu: &Partition, inner: Inner, cap: usize) -> Result<Arc<SchurExpansion>> {
    if nu.size() > cap {
        return Err(Error::ResourceBound {
            size: nu.size(),
            cap,
        });
    }
    let key = (nu.clone(), inner);
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    let mut powersum = PowerSumExpansion::zero();
    for (mu, c) in schur_to_powersum(nu).iter() {
        let term = p_mu_plethysm(mu, inner).scale(c);
        powersum = powersum.add(&term)?;
    }
    let result = Arc::new(powersum_to_schur(&powersum)?);
    Ok(cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert(result)
        .clone())
}

/// `s_ν ∘ s_(2)` with the configured cap.
pub fn oracle_plethysm_s2(nu: &Partition) -> Result<SchurExpansion> {
    oracle_plethysm(nu, Inner::S2, configured_cap()).map(|f| (*f).clone())
}

/// `s_ν ∘ s_(1,1)` with the configured cap, computed from `p_r ∘ e₂`
/// directly rather than through `ω`.
pub fn oracle_plethysm_e2(nu: &Partition) -> Result<SchurExpansion> {
    oracle_plethysm(nu, Inner::E2, configured_cap()).map(|f| (*f).clone())
}
