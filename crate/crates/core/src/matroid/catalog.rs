//! Small named matroids used by the verification suites.

use super::{matroid_of_matrix, Matroid, RationalMatrix, Subset};

/// Columns `e1, e1, e2, e2`: rank 2 on 4 elements, two components.
pub fn two_parallel_pairs() -> Matroid {
    matroid_of_matrix(&RationalMatrix::from_i64_rows(&[&[1, 1, 0, 0], &[0, 0, 1, 1]])).expect("full rank")
}

/// Three connected non-uniform rank-2 matroids on 5 elements, with labels.
pub fn rank2_nonuniform() -> Vec<(&'static str, Matroid)> {
    let one_pair = Matroid::from_bases(
        5,
        2,
        Subset::all_of_size(5, 2)
            .into_iter()
            .filter(|&b| b != Subset::from_elems([1, 2])),
    )
    .expect("valid matroid");
    let triple = matroid_of_matrix(&RationalMatrix::from_i64_rows(&[&[1, 1, 1, 0, 1], &[0, 1, 2, 1, 1]]))
        .expect("full rank");
    let two_pairs = matroid_of_matrix(&RationalMatrix::from_i64_rows(&[&[1, 0, 1, 0, 2], &[0, 1, 0, 1, 3]]))
        .expect("full rank");
    vec![
        ("parallel pair {1,2}", one_pair),
        ("parallel pair {2,5}, from a matrix", triple),
        ("parallel pairs {1,3} and {2,4}", two_pairs),
    ]
}
