//! Bundled reference documents: the 3x8 tournament array over nine points,
//! its 9x9 matrix encoding, and the 25x25 constructed matrix transcribed from
//! its vector-block table. Point labels and indices are 0-based; the metadata
//! in each file records the 1-based originals.

use crate::design::GbtdArray;
use crate::doc::{parse, DesignDocument};
use crate::matrix::SymbolMatrix;

pub const EXAMPLE1_DESIGN_JSON: &str = include_str!("../fixtures/example1_design.json");
pub const EXAMPLE2_MATRIX_JSON: &str = include_str!("../fixtures/example2_matrix.json");
pub const EXAMPLE3_MATRIX_JSON: &str = include_str!("../fixtures/example3_matrix.json");

pub fn example1_document() -> DesignDocument {
    parse(EXAMPLE1_DESIGN_JSON).expect("bundled fixture parses")
}

pub fn example2_document() -> DesignDocument {
    parse(EXAMPLE2_MATRIX_JSON).expect("bundled fixture parses")
}

pub fn example3_document() -> DesignDocument {
    parse(EXAMPLE3_MATRIX_JSON).expect("bundled fixture parses")
}

/// The 3x8 tournament array, a GBTD(3,3).
pub fn example1_design() -> GbtdArray {
    example1_document().to_design().expect("fixture is a design")
}

/// Its unnormalized 9x9 matrix encoding.
pub fn example2_matrix() -> SymbolMatrix {
    example2_document().to_matrix().expect("fixture is a matrix")
}

/// The 25x25 constructed matrix for p = 5.
pub fn example3_matrix() -> SymbolMatrix {
    example3_document().to_matrix().expect("fixture is a matrix")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::normalize_columns;
    use crate::verify::{verify_gbtd, verify_matrix};

    #[test]
    fn design_fixture_verifies() {
        assert!(verify_gbtd(&example1_design()).overall());
    }

    #[test]
    fn matrix_fixtures_have_expected_shape() {
        assert_eq!(example2_matrix().side(), 9);
        assert_eq!(example3_matrix().side(), 25);
        assert!(verify_matrix(&example3_matrix()).overall());
    }

    #[test]
    fn encoded_matrix_verifies_before_and_after_normalization() {
        let m = example2_matrix();
        assert!(verify_matrix(&m).overall());
        let (normalized, perm) = normalize_columns(&m).unwrap();
        assert!(verify_matrix(&normalized).overall());
        // group 0 collects the columns whose deficient symbol is 0: points 3, 5, 7
        assert_eq!(&perm[0..3], &[3, 5, 7]);
    }
}
