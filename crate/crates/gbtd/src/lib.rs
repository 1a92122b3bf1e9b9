//! Generalized balanced tournament designs GBTD(p,p) for odd primes p.
//!
//! A GBTD(p,p) is a (p², p, p-1)-BIBD whose p(p²-1) blocks fill a p x (p²-1)
//! array with every point exactly once per column and at most p times per row.
//! This crate builds one for every odd prime p from a closed-form p²×p² matrix
//! over Z_p, converts between the matrix and block-array representations, and
//! verifies every defining property by exhaustive brute force, cross-checked
//! against the analytic agreement predictions.
//!
//! ```
//! use gbtd::{build_mp, matrix_to_gbtd, verify_gbtd, PrimeModulus};
//!
//! let p = PrimeModulus::new(5).unwrap();
//! let design = matrix_to_gbtd(&build_mp(p)).unwrap();
//! assert!(verify_gbtd(&design).overall());
//! ```

pub mod design;
pub mod doc;
pub mod error;
pub mod fixtures;
pub mod matrix;
pub mod verify;
pub mod zp;

pub use design::{
    deficiency_profile, gbtd_to_matrix, infer_deficient_symbol, matrix_to_gbtd,
    normalize_columns, permute_points, permute_symbols, swap_design_columns, swap_design_rows,
    swap_matrix_columns, swap_matrix_rows, Block, DeficiencyProfile, GbtdArray,
};
pub use doc::{emit, emit_grid, parse, parse_grid, DesignDocument};
pub use error::{Error, Result};
pub use matrix::{build_mp, hblock_row, hstar_row, ColAddress, RowAddress, SymbolMatrix};
pub use verify::{
    agreement_count, deficient_tuples, lemma3_counts, solve_agreement, verify_bibd, verify_gbtd,
    verify_matrix, AgreementProfile, Check, VerificationReport,
};
pub use zp::{check_prime, const_vec, mod_inverse, prog_vec, PVector, PrimeModulus, Residue};
