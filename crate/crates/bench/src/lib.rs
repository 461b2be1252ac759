//! Benchmark inputs shared by the criterion targets.

use quiverdt_core::{DimVector, QuiverMatrix};

/// Matrices of increasing density with a box bound for each.
pub fn extraction_cases() -> Vec<(&'static str, QuiverMatrix, DimVector)> {
    vec![
        (
            "loop3_d8",
            QuiverMatrix::from_rows([[3]]),
            DimVector::from([8]),
        ),
        (
            "kronecker3_1x6",
            QuiverMatrix::from_rows([[0, 3], [3, 0]]),
            DimVector::from([1, 6]),
        ),
        (
            "k2_ones_3x3",
            QuiverMatrix::from_rows([[1, 1], [1, 1]]),
            DimVector::from([3, 3]),
        ),
        (
            "full2_4x4x4",
            QuiverMatrix::from_rows([[2, 2, 2], [2, 2, 2], [2, 2, 2]]),
            DimVector::from([4, 4, 4]),
        ),
    ]
}
