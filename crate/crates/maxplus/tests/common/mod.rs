//! Shared fixtures and proptest strategies for the integration suites.
#![allow(dead_code)]

use proptest::prelude::*;

use maxplus::scalar::ratio;
use maxplus::{Matrix, MatrixMap, Scalar};

/// Forward 3-cycle with unit weights: irreducible, all-eps diagonal.
pub fn cycle_fwd() -> Matrix {
    Matrix::from_str_rows(&["eps 1 eps", "eps eps 1", "1 eps eps"])
}

/// Reverse 3-cycle with unit weights.
pub fn cycle_rev() -> Matrix {
    Matrix::from_str_rows(&["eps eps 1", "1 eps eps", "eps 1 eps"])
}

/// Pair whose product eigenvalue exceeds the sum of the factor eigenvalues.
pub fn super_a() -> Matrix {
    Matrix::from_str_rows(&["2 eps 3", "6 2 eps", "eps 4 3"])
}

pub fn super_b() -> Matrix {
    Matrix::from_str_rows(&["eps 3 eps", "eps eps 2", "4 eps eps"])
}

/// super_a ⊗ super_b, expanded by hand.
pub fn super_ab() -> Matrix {
    Matrix::from_str_rows(&["7 5 eps", "eps 9 4", "7 eps 6"])
}

/// Pair whose product eigenvalue falls below the sum of the factor
/// eigenvalues.
pub fn sub_a() -> Matrix {
    Matrix::from_str_rows(&["10 1 eps", "eps 1 1", "1 eps 1"])
}

pub fn sub_b() -> Matrix {
    Matrix::from_str_rows(&["1 1 eps", "eps 1 1", "1 eps 10"])
}

/// sub_a ⊗ sub_b, expanded by hand.
pub fn sub_ab() -> Matrix {
    Matrix::from_str_rows(&["11 11 2", "2 2 11", "2 2 11"])
}

/// Reducible pair whose product is nonetheless irreducible.
pub fn red_a() -> Matrix {
    Matrix::from_str_rows(&["eps 1", "eps 1"])
}

pub fn red_b() -> Matrix {
    Matrix::from_str_rows(&["eps eps", "1 1"])
}

pub fn bank(entries: &[(&str, &Matrix)]) -> MatrixMap {
    entries
        .iter()
        .map(|(name, m)| (name.to_string(), (*m).clone()))
        .collect()
}

/// Circuits are equal up to rotation of the node sequence.
pub fn same_circuit(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    (0..a.len()).any(|r| a.iter().cycle().skip(r).take(a.len()).eq(b.iter()))
}

/// Scalars: eps with weight 2, small exact rationals with weight 5.
pub fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        2 => Just(Scalar::eps()),
        5 => (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Scalar::Finite(ratio(p, q))),
    ]
}

/// Square matrices of the given dimension with mixed eps/rational entries.
pub fn matrix_strategy(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(scalar_strategy(), n * n).prop_map(move |entries| {
        let rows = entries.chunks(n).map(<[Scalar]>::to_vec).collect();
        Matrix::from_rows(rows)
    })
}

/// Pairs of same-dimension matrices, n in 1..=4.
pub fn matrix_pair_strategy() -> impl Strategy<Value = (Matrix, Matrix)> {
    (1usize..=4).prop_flat_map(|n| (matrix_strategy(n), matrix_strategy(n)))
}

/// Triples of same-dimension matrices, n in 1..=4.
pub fn matrix_triple_strategy() -> impl Strategy<Value = (Matrix, Matrix, Matrix)> {
    (1usize..=4)
        .prop_flat_map(|n| (matrix_strategy(n), matrix_strategy(n), matrix_strategy(n)))
}
