//! Irreducible characters of symmetric groups and the Schur/power-sum
//! change of basis they induce.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expansion::{PowerSumExpansion, Rational, SchurExpansion};
use crate::partition::{generate_partitions, Partition};

type CharacterMemo = RwLock<HashMap<(Partition, Partition), BigInt>>;

fn memo() -> &'static CharacterMemo {
    static MEMO: OnceLock<CharacterMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `χ^λ(μ)`, the value of the irreducible character `χ^λ` on the class of
/// cycle type `μ`, by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::DegreeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    Ok(character(lambda, mu))
}

fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    if mu.is_empty() {
        return BigInt::one();
    }
    if lambda.len() == 1 {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = memo().read().unwrap().get(&key) {
        return v.clone();
    }
    let strip = mu.first();
    let rest = Partition::from_sorted(mu.parts()[1..].to_vec());
    let mut value = BigInt::zero();
    for (smaller, negative) in remove_rim_hooks(lambda, strip) {
        let chi = character(&smaller, &rest);
        if negative {
            value -= chi;
        } else {
            value += chi;
        }
    }
    memo().write().unwrap().insert(key, value.clone());
    value
}

/// Every partition obtained from `lambda` by removing a rim hook of
/// `length` cells, paired with `true` when the hook has odd leg length.
///
/// Works on the beta-set `{λᵢ + ℓ − i}`: a rim hook of length `r` is a
/// bead moved from `b` to the empty position `b − r`, and its leg length is
/// the number of beads strictly between.
pub(crate) fn remove_rim_hooks(lambda: &Partition, length: usize) -> Vec<(Partition, bool)> {
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + l - 1 - i).collect();
    let mut out = Vec::new();
    for &b in &beta {
        if b < length {
            continue;
        }
        let target = b - length;
        if beta.contains(&target) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved: Vec<usize> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((Partition::from_sorted(parts), between % 2 == 1));
    }
    out
}

/// `s_ν = Σ_μ (χ^ν(μ) / z_μ) p_μ`.
pub fn schur_to_powersum(nu: &Partition) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::zero();
    for mu in generate_partitions(nu.size()) {
        let chi = character(nu, &mu);
        if chi.is_zero() {
            continue;
        }
        let z = BigInt::from(mu.z());
        out.add_term(mu, Rational::new(chi, z));
    }
    out
}

/// `p_μ = Σ_λ χ^λ(μ) s_λ`, extended linearly. Every resulting coefficient
/// must be an integer.
pub fn powersum_to_schur(f: &PowerSumExpansion) -> Result<SchurExpansion> {
    let Some(n) = f.degree() else {
        return Ok(SchurExpansion::zero());
    };
    let mut out = SchurExpansion::zero();
    for lambda in generate_partitions(n) {
        let mut total = Rational::zero();
        for (mu, c) in f.iter() {
            let chi = character(&lambda, mu);
            if !chi.is_zero() {
                total += c * Rational::from_integer(chi);
            }
        }
        if !total.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                lambda,
                value: total.to_string(),
            });
        }
        out.add_term(lambda, total.to_integer());
    }
    Ok(out)
}

/// The involution `ω`: `s_λ ↦ s_λ'`.
pub fn omega_schur(f: &SchurExpansion) -> SchurExpansion {
    f.map_partitions(Partition::conjugate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn chi(l: &str, m: &str) -> i64 {
        mn_character(&p(l), &p(m)).unwrap().try_into().unwrap()
    }

    #[test]
    fn trivial_sign_and_degree() {
        for n in 1..=7 {
            for mu in generate_partitions(n) {
                assert_eq!(mn_character(&Partition::row(n), &mu).unwrap(), BigInt::one());
                let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(
                    mn_character(&Partition::column(n), &mu).unwrap(),
                    BigInt::from(sign)
                );
            }
        }
        assert_eq!(chi("2,1", "1,1,1"), 2);
        assert!(matches!(
            mn_character(&p("2,1"), &p("2")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn s4_character_table() {
        // rows (4),(3,1),(2,2),(2,1,1),(1^4); columns (1^4),(2,1,1),(2,2),(3,1),(4)
        let table = [
            [1, 1, 1, 1, 1],
            [3, 1, -1, 0, -1],
            [2, 0, 2, -1, 0],
            [3, -1, -1, 0, 1],
            [1, -1, 1, 1, -1],
        ];
        let rows = ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"];
        let cols = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"];
        for (r, row) in rows.iter().zip(table) {
            for (c, v) in cols.iter().zip(row) {
                assert_eq!(chi(r, c), v, "chi^{r}({c})");
            }
        }
    }

    #[test]
    fn dimension_matches_hook_length_formula() {
        for n in 0..=8 {
            let id = Partition::column(n);
            for lambda in generate_partitions(n) {
                let d = mn_character(&lambda, &id).unwrap();
                assert_eq!(d, BigInt::from(lambda.dimension()));
            }
        }
    }

    #[test]
    fn dimensions_square_sum_to_group_order() {
        for n in 0..=8 {
            let total: BigUint = generate_partitions(n)
                .iter()
                .map(|l| l.dimension().pow(2))
                .sum();
            assert_eq!(total, crate::partition::factorial(n));
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=6 {
            let parts = generate_partitions(n);
            for mu in &parts {
                for rho in &parts {
                    let sum: BigInt = parts
                        .iter()
                        .map(|l| character(l, mu) * character(l, rho))
                        .sum();
                    let expected = if mu == rho {
                        BigInt::from(mu.z())
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(sum, expected);
                }
            }
        }
    }

    #[test]
    fn schur_to_powersum_examples() {
        let h2 = schur_to_powersum(&p("2"));
        assert_eq!(h2.coefficient(&p("1,1")), q(1, 2));
        assert_eq!(h2.coefficient(&p("2")), q(1, 2));
        let e2 = schur_to_powersum(&p("1,1"));
        assert_eq!(e2.coefficient(&p("1,1")), q(1, 2));
        assert_eq!(e2.coefficient(&p("2")), q(-1, 2));
        let s21 = schur_to_powersum(&p("2,1"));
        assert_eq!(s21.coefficient(&p("1,1,1")), q(1, 3));
        assert_eq!(s21.coefficient(&p("3")), q(-1, 3));
        assert_eq!(s21.coefficient(&p("2,1")), q(0, 1));
        assert_eq!(s21.len(), 2);
    }

    #[test]
    fn powersum_to_schur_examples() {
        let one = |l: &str| PowerSumExpansion::basis(p(l));
        let s = |spec: &[(&str, i64)]| -> SchurExpansion {
            spec.iter().map(|(l, c)| (p(l), BigInt::from(*c))).collect()
        };
        assert_eq!(powersum_to_schur(&one("1,1")).unwrap(), s(&[("2", 1), ("1,1", 1)]));
        assert_eq!(powersum_to_schur(&one("2")).unwrap(), s(&[("2", 1), ("1,1", -1)]));
        let half = PowerSumExpansion::from_terms(vec![(p("2"), q(1, 2))]).unwrap();
        assert!(matches!(
            powersum_to_schur(&half),
            Err(Error::NonIntegerCoefficient { .. })
        ));
        assert_eq!(
            powersum_to_schur(&PowerSumExpansion::zero()).unwrap(),
            SchurExpansion::zero()
        );
    }

    #[test]
    fn basis_change_round_trip() {
        for n in 0..=6 {
            for nu in generate_partitions(n) {
                let back = powersum_to_schur(&schur_to_powersum(&nu)).unwrap();
                assert_eq!(back, SchurExpansion::basis(nu));
            }
        }
    }

    #[test]
    fn omega() {
        let s = |spec: &[(&str, i64)]| -> SchurExpansion {
            spec.iter().map(|(l, c)| (p(l), BigInt::from(*c))).collect()
        };
        assert_eq!(omega_schur(&s(&[("3,1", 1)])), s(&[("2,1,1", 1)]));
        assert_eq!(
            omega_schur(&s(&[("4", 1), ("2,2", 1)])),
            s(&[("1,1,1,1", 1), ("2,2", 1)])
        );
        let f = s(&[("3,2", 2), ("4,1", -1), ("2,2,1", 5)]);
        let g = s(&[("3,2", 1), ("1,1,1,1,1", 1)]);
        assert_eq!(omega_schur(&omega_schur(&f)), f);
        assert_eq!(
            omega_schur(&f.add(&g).unwrap()),
            omega_schur(&f).add(&omega_schur(&g)).unwrap()
        );
    }

    #[test]
    fn rim_hook_removal() {
        // (3,2) has a single 3-hook {(1,2),(1,3),(2,2)}, spanning two rows
        assert_eq!(remove_rim_hooks(&p("3,2"), 3), vec![(p("1,1"), true)]);
        assert_eq!(remove_rim_hooks(&p("3,2"), 2), vec![(p("3"), false)]);
    }
}
