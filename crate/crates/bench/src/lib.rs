//! Fixtures shared by the benchmarks.

use rightkey::{tableaux, Shape, Tableau};

/// The six-row example tableau used throughout the tests.
pub fn sample() -> Tableau {
    Tableau::from_rows(
        &[
            vec![1, 1, 3, 4, 6],
            vec![2, 3, 5, 7, 9],
            vec![4, 5, 6, 8],
            vec![5, 7, 9],
            vec![7],
            vec![8],
        ],
        9,
    )
    .expect("valid tableau")
}

/// Every tableau with exactly `boxes` boxes and entries at most `bound`.
pub fn all_tableaux(boxes: usize, bound: u32) -> Vec<Tableau> {
    Shape::all_of_size(boxes)
        .iter()
        .flat_map(|s| tableaux(s, bound))
        .collect()
}
