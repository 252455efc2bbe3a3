use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use foulkes_core::oracle::{configured_cap, oracle_plethysm};
use foulkes_core::{decompose, omega_dual, Inner, Method, Partition, Result, SchurExpansion};

/// A formula result paired with the oracle, plus where they disagree.
#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub nu: Partition,
    pub inner: Inner,
    pub method: Method,
    pub formula_result: SchurExpansion,
    pub oracle_result: Option<SchurExpansion>,
    /// `λ ↦ (formula, oracle)` for every `λ` where the two differ.
    pub diff: BTreeMap<Partition, (BigInt, BigInt)>,
    pub timings: Vec<(&'static str, Duration)>,
}

impl DecompositionReport {
    /// Runs the chosen formula; with `dual` the result is transported by
    /// `ω` to `s_ν ∘ s_(1,1)`.
    pub fn formula(nu: &Partition, method: Method, dual: bool) -> Result<Self> {
        let start = Instant::now();
        let (method, mut result) = decompose(nu, method)?;
        if dual {
            result = omega_dual(&result);
        }
        Ok(DecompositionReport {
            nu: nu.clone(),
            inner: if dual { Inner::E2 } else { Inner::S2 },
            method,
            formula_result: result,
            oracle_result: None,
            diff: BTreeMap::new(),
            timings: vec![("formula", start.elapsed())],
        })
    }

    /// Runs both the formula and the oracle and records the differences.
    pub fn compare(nu: &Partition, method: Method, dual: bool) -> Result<Self> {
        let mut report = Self::formula(nu, method, dual)?;
        let start = Instant::now();
        let oracle = oracle_plethysm(nu, report.inner, configured_cap())?;
        report.timings.push(("oracle", start.elapsed()));
        report.diff = diff(&report.formula_result, &oracle);
        report.oracle_result = Some((*oracle).clone());
        Ok(report)
    }

    pub fn agrees(&self) -> bool {
        self.diff.is_empty()
    }
}

pub fn diff(left: &SchurExpansion, right: &SchurExpansion) -> BTreeMap<Partition, (BigInt, BigInt)> {
    let keys: std::collections::BTreeSet<&Partition> =
        left.terms().keys().chain(right.terms().keys()).collect();
    keys.into_iter()
        .filter_map(|lambda| {
            let (a, b) = (left.coefficient(lambda), right.coefficient(lambda));
            (a != b).then(|| (lambda.clone(), (a, b)))
        })
        .collect()
}
