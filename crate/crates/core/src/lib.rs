//! Exact decompositions of the twisted Foulkes characters `φ^(2^n)_ν`,
//! equivalently the plethysms `s_ν ∘ s_(2)` (and, through `ω`,
//! `s_ν ∘ s_(1,1)`), into irreducible characters of `S_2n`.
//!
//! The closed formulas in [`formulas`] are built on the
//! Littlewood–Richardson engine in [`lr`]. The independent power-sum
//! computation in [`oracle`] shares no code with that engine and serves as
//! ground truth.

pub mod characters;
pub mod error;
pub mod expansion;
pub mod formulas;
pub mod lr;
pub mod oracle;
pub mod partition;

pub use characters::{mn_character, omega_schur, powersum_to_schur, schur_to_powersum};
pub use error::{Error, Result};
pub use expansion::{Expansion, PowerSumExpansion, Rational, SchurExpansion};
pub use formulas::{
    decompose, induce_product, omega_dual, phi_hook, phi_hook_depth1_closed, phi_one_column,
    phi_one_row, phi_two_column, phi_two_one_column_closed, phi_two_row, table1_multiplicity,
    HookVariant, Method, Table1Class, TableKind,
};
pub use lr::{lr_coefficient, schur_multiply};
pub use oracle::{oracle_plethysm, oracle_plethysm_e2, oracle_plethysm_s2, Inner};
pub use partition::{generate_distinct_partitions, generate_partitions, Partition};
