//! Acceptance suite: every closed formula against the power-sum oracle,
//! the cross-formula identities, and the runtime envelope.
//!
//! All comparisons are exact. Runs as `cargo test -p foulkes-core --test
//! acceptance` and prints one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};

use foulkes_core::partition::factorial;
use foulkes_core::{
    generate_partitions, induce_product, lr_coefficient, omega_schur, oracle_plethysm_e2,
    oracle_plethysm_s2, phi_hook, phi_hook_depth1_closed, phi_one_column, phi_one_row,
    phi_two_column, phi_two_one_column_closed, phi_two_row, table1_multiplicity, HookVariant,
    Partition, SchurExpansion, TableKind,
};

/// Largest `n` swept by the oracle comparisons.
const FULL_N: usize = 8;
/// Largest `n` for the corollary cross-checks.
const COROLLARY_N: usize = 10;
/// Largest `|ν|` for the ω check.
const OMEGA_N: usize = 7;
/// Largest `|ν| + |μ|` for the induction harness.
const INDUCTION_N: usize = 6;
const SMALL_SUITE_LIMIT: Duration = Duration::from_secs(60);
const FULL_SUITE_LIMIT: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;

/// Every `φ` produced by the formula criteria, kept for the dimension and
/// nonnegativity sweeps.
#[derive(Default)]
struct Computed {
    entries: Vec<(String, Partition, SchurExpansion)>,
}

impl Computed {
    fn record(&mut self, label: String, nu: Partition, phi: &SchurExpansion) {
        self.entries.push((label, nu, phi.clone()));
    }
}

fn oracle(nu: &Partition) -> Result<SchurExpansion, String> {
    oracle_plethysm_s2(nu).map_err(|e| format!("oracle({nu}): {e}"))
}

fn expect_equal(label: &str, got: &SchurExpansion, want: &SchurExpansion) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: formula {got} != oracle {want}"))
    }
}

fn two_row_nu(n: usize, r: usize) -> Partition {
    Partition::new(vec![n - r, r]).unwrap()
}

fn two_column_nu(n: usize, r: usize) -> Partition {
    let mut parts = vec![2; r];
    parts.extend(vec![1; n - 2 * r]);
    Partition::new(parts).unwrap()
}

fn hook_nu(n: usize, r: usize) -> Partition {
    let mut parts = vec![n - r];
    parts.extend(vec![1; r]);
    Partition::new(parts).unwrap()
}

fn base_cases(max_n: usize, seen: &mut Computed) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        let row = phi_one_row(n);
        expect_equal(&format!("one-row n={n}"), &row, &oracle(&Partition::row(n))?)?;
        seen.record(format!("one-row n={n}"), Partition::row(n), &row);
        let col = phi_one_column(n);
        expect_equal(&format!("one-column n={n}"), &col, &oracle(&Partition::column(n))?)?;
        seen.record(format!("one-column n={n}"), Partition::column(n), &col);
        checked += 2;
    }
    Ok(format!("{checked} base cases"))
}

fn two_row(max_n: usize, seen: &mut Computed) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for r in 0..=n / 2 {
            let nu = two_row_nu(n, r);
            let phi = phi_two_row(n, r).map_err(|e| e.to_string())?;
            expect_equal(&format!("two-row {nu}"), &phi, &oracle(&nu)?)?;
            seen.record(format!("two-row {nu}"), nu, &phi);
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes"))
}

fn two_column(max_n: usize, seen: &mut Computed) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for r in 0..=n / 2 {
            let nu = two_column_nu(n, r);
            let phi = phi_two_column(n, r).map_err(|e| e.to_string())?;
            expect_equal(&format!("two-column {nu}"), &phi, &oracle(&nu)?)?;
            seen.record(format!("two-column {nu}"), nu, &phi);
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes"))
}

fn hooks(max_n: usize, seen: &mut Computed) -> Outcome {
    let mut checked = 0;
    for n in 1..=max_n {
        for r in 0..n {
            let nu = hook_nu(n, r);
            let first = phi_hook(n, r, HookVariant::First).map_err(|e| e.to_string())?;
            let second = phi_hook(n, r, HookVariant::Second).map_err(|e| e.to_string())?;
            expect_equal(&format!("hook {nu} first vs second"), &first, &second)?;
            expect_equal(&format!("hook {nu}"), &first, &oracle(&nu)?)?;
            seen.record(format!("hook-first {nu}"), nu.clone(), &first);
            seen.record(format!("hook-second {nu}"), nu, &second);
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes, both variants"))
}

fn corollaries(max_n: usize, seen: &mut Computed) -> Outcome {
    for n in 2..=max_n {
        let closed = phi_hook_depth1_closed(n).map_err(|e| e.to_string())?;
        let theorem = phi_two_row(n, 1).map_err(|e| e.to_string())?;
        expect_equal(&format!("(n-1,1) closed form n={n}"), &closed, &theorem)?;
        seen.record(format!("(n-1,1) closed n={n}"), two_row_nu(n, 1), &closed);

        let closed = phi_two_one_column_closed(n).map_err(|e| e.to_string())?;
        let theorem = phi_two_column(n, 1).map_err(|e| e.to_string())?;
        expect_equal(&format!("(2,1^(n-2)) closed form n={n}"), &closed, &theorem)?;
        seen.record(format!("(2,1^(n-2)) closed n={n}"), two_column_nu(n, 1), &closed);
    }
    Ok(format!("n = 2..={max_n}"))
}

fn table1(max_n: usize) -> Outcome {
    let mut rows = 0;
    for kind in [TableKind::HookTwo, TableKind::TwoRowTwo] {
        for n in kind.min_n()..=max_n {
            let formula = kind.formula(n).map_err(|e| e.to_string())?;
            for lambda in generate_partitions(2 * n) {
                let closed = table1_multiplicity(&lambda, kind, n).map_err(|e| e.to_string())?;
                let want = formula.coefficient(&lambda);
                if BigInt::from(closed) != want {
                    return Err(format!(
                        "nu={}, lambda={lambda}: table gives {closed}, theorem gives {want}",
                        kind.nu(n).unwrap()
                    ));
                }
                rows += 1;
            }
        }
    }
    Ok(format!("{rows} (lambda, nu) pairs"))
}

fn omega_duality(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 0..=max_n {
        for nu in generate_partitions(n) {
            let dual = omega_schur(&oracle(&nu)?);
            let direct = oracle_plethysm_e2(&nu).map_err(|e| e.to_string())?;
            expect_equal(&format!("omega {nu}"), &dual, &direct)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} shapes"))
}

fn dimensions(seen: &Computed) -> Outcome {
    for (label, nu, phi) in &seen.entries {
        let n = nu.size();
        let index = factorial(2 * n) / (BigUint::from(2u32).pow(n as u32) * factorial(n));
        let want = BigInt::from(index * nu.dimension());
        let got = phi.character_degree();
        if got != want {
            return Err(format!("{label}: degree {got}, expected {want}"));
        }
    }
    let spot = |nu: &str, f: SchurExpansion, want: u32| -> Result<(), String> {
        let got = f.character_degree();
        if got == BigInt::from(want) {
            Ok(())
        } else {
            Err(format!("spot value nu=({nu}): {got} != {want}"))
        }
    };
    spot("2,1", phi_two_row(3, 1).unwrap(), 30)?;
    spot("2,1,1", phi_two_column(4, 1).unwrap(), 315)?;
    spot("3,1", phi_two_row(4, 1).unwrap(), 315)?;
    Ok(format!("{} characters + 3 spot values", seen.entries.len()))
}

fn nonnegativity(seen: &Computed) -> Outcome {
    for (label, _, phi) in &seen.entries {
        if !phi.is_nonnegative() {
            return Err(format!("{label} has a negative multiplicity: {phi}"));
        }
    }
    Ok(format!("{} characters", seen.entries.len()))
}

fn induction(max_total: usize) -> Outcome {
    let mut checked = 0;
    for total in 0..=max_total {
        let lambdas = generate_partitions(total);
        for a in 0..=total {
            for nu in generate_partitions(a) {
                for mu in generate_partitions(total - a) {
                    let lhs = induce_product(&oracle(&nu)?, &oracle(&mu)?);
                    let mut rhs = SchurExpansion::zero();
                    for lambda in &lambdas {
                        let c = lr_coefficient(lambda, &nu, &mu);
                        if c > 0 {
                            rhs = rhs
                                .add(&oracle(lambda)?.scale(&BigInt::from(c)))
                                .map_err(|e| e.to_string())?;
                        }
                    }
                    expect_equal(&format!("induction nu={nu} mu={mu}"), &lhs, &rhs)?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} pairs"))
}

/// Criteria 1–10 up to the given bounds.
fn sweep(n: usize, report: &mut Vec<(String, Outcome)>) {
    let mut seen = Computed::default();
    let mut run = |name: &str, outcome: Outcome| report.push((name.to_string(), outcome));
    run("1 base cases = oracle", base_cases(n, &mut seen));
    run("2 two-row formula = oracle", two_row(n, &mut seen));
    run("3 two-column formula = oracle", two_column(n, &mut seen));
    run("4 hook formulas agree and = oracle", hooks(n, &mut seen));
    run(
        "5 closed corollaries = theorem formulas",
        corollaries(COROLLARY_N.min(n + 2), &mut seen),
    );
    run("6 Table 1 multiplicities = theorem formulas", table1(n));
    run("7 omega(s_nu o s_2) = s_nu o s_11", omega_duality(OMEGA_N.min(n)));
    run("8 dimension identity", dimensions(&seen));
    run("9 nonnegativity", nonnegativity(&seen));
    run("10 induction product identity", induction(INDUCTION_N.min(n)));
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut small = Vec::new();
    sweep(6, &mut small);
    let small_elapsed = start.elapsed();

    let mut full = Vec::new();
    sweep(FULL_N, &mut full);
    let full_elapsed = start.elapsed();

    let perf: Outcome = if small_elapsed > SMALL_SUITE_LIMIT {
        Err(format!("n <= 6 suite took {small_elapsed:.2?} (limit {SMALL_SUITE_LIMIT:?})"))
    } else if full_elapsed > FULL_SUITE_LIMIT {
        Err(format!("n <= 8 suite took {full_elapsed:.2?} (limit {FULL_SUITE_LIMIT:?})"))
    } else {
        Ok(format!("n <= 6 in {small_elapsed:.2?}, n <= 8 in {full_elapsed:.2?}"))
    };
    full.push(("11 performance envelope".to_string(), perf));

    let mut failed = 0;
    for (name, outcome) in &small {
        if let Err(msg) = outcome {
            println!("FAIL  [n<=6] {name}: {msg}");
            failed += 1;
        }
    }
    for (name, outcome) in &full {
        match outcome {
            Ok(detail) => println!("PASS  {name} ({detail})"),
            Err(msg) => {
                println!("FAIL  {name}: {msg}");
                failed += 1;
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all {} criteria passed", full.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} failure(s)");
        ExitCode::FAILURE
    }
}
