use proptest::prelude::*;

use rightkey::demazure::{self, KeyEngine};
use rightkey::jdt;
use rightkey::skew::SkewTableau;
use rightkey::{count_tableaux, left_key, scanning_tableau, tableaux, Composition, Shape, Tableau};

/// Random tableau: a random partition, each cell the least legal value
/// plus a small random step. The bound is the largest entry plus slack.
fn arb_tableau() -> impl Strategy<Value = Tableau> {
    (prop::collection::vec(1usize..=5, 1..=5), prop::collection::vec(0u32..3, 25), 0u32..3).prop_map(
        |(mut rows, steps, slack)| {
            rows.sort_unstable_by(|a, b| b.cmp(a));
            let mut filled: Vec<Vec<u32>> = Vec::new();
            let mut step = steps.iter().cycle();
            for (r, &len) in rows.iter().enumerate() {
                let mut row: Vec<u32> = Vec::with_capacity(len);
                for c in 0..len {
                    let above = filled.get(r.wrapping_sub(1)).map_or(1, |prev| prev[c] + 1);
                    let left = row.last().copied().unwrap_or(1);
                    row.push(above.max(left) + step.next().unwrap());
                }
                filled.push(row);
            }
            let max = filled.iter().flatten().copied().max().unwrap();
            Tableau::from_rows(&filled, max + slack).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn scanning_matches_jeu_de_taquin(t in arb_tableau()) {
        prop_assert_eq!(scanning_tableau(&t), jdt::right_key(&t));
        prop_assert_eq!(left_key(&t), jdt::left_key(&t));
    }

    #[test]
    fn keys_bracket_the_tableau(t in arb_tableau()) {
        let right = scanning_tableau(&t);
        let left = left_key(&t);
        prop_assert!(right.is_key() && left.is_key());
        prop_assert!(left.entrywise_leq(&t).unwrap());
        prop_assert!(t.entrywise_leq(&right).unwrap());
        prop_assert_eq!(right.weight().iter().sum::<u32>() as usize, t.size());
        prop_assert_eq!(scanning_tableau(&right), right.clone());
        prop_assert_eq!(left_key(&left), left);
    }

    #[test]
    fn complement_is_an_involution(t in arb_tableau()) {
        let c = t.complement();
        prop_assert_eq!(c.shape(), t.shape());
        prop_assert_eq!(c.complement(), t);
    }

    #[test]
    fn pull_down_keeps_rectification(t in arb_tableau(), columns in 1usize..=5, rows in 1usize..=3) {
        let u = SkewTableau::from_tableau(&t);
        let columns = columns.min(u.num_columns());
        let pulled = jdt::pull_down_columns(&u, columns, rows).unwrap();
        let rectified = jdt::rectify(&pulled);
        prop_assert_eq!(rectified.columns(), t.columns());
    }

    #[test]
    fn rectification_ignores_corner_order(t in arb_tableau(), columns in 1usize..=5, rows in 1usize..=3, seed: u64) {
        let u = SkewTableau::from_tableau(&t);
        let pulled = jdt::pull_down_columns(&u, columns.min(u.num_columns()), rows).unwrap();
        let mut state = seed;
        let shuffled = jdt::rectify_by(&pulled, |corners| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as usize % corners.len()
        });
        let rightmost = jdt::rectify_by(&pulled, |corners| corners.len() - 1);
        prop_assert_eq!(shuffled.columns(), t.columns());
        prop_assert_eq!(rightmost.columns(), t.columns());
    }
}

#[test]
fn enumeration_counts_match() {
    for size in 0..=7 {
        for shape in Shape::all_of_size(size) {
            for n in 1..=5 {
                let listed: Vec<Tableau> = tableaux(&shape, n).collect();
                assert_eq!(listed.len() as u64, count_tableaux(&shape, n));
                assert!(listed.iter().all(|t| t.shape() == shape && t.max_entry().unwrap_or(0) <= n));
            }
        }
    }
}

#[test]
fn characters_do_not_depend_on_the_reduced_word() {
    for size in 1..=4 {
        for mu in demazure::partitions(size).into_iter().filter(|mu| mu.len() <= 4) {
            for w in demazure::permutations(4) {
                let smallest = demazure::demazure_operator_with_word(&mu, &w, 4, false).unwrap();
                let largest = demazure::demazure_operator_with_word(&mu, &w, 4, true).unwrap();
                assert_eq!(smallest, largest, "mu={mu:?} w={w:?}");
            }
        }
    }
}

#[test]
fn characters_have_positive_coefficients() {
    for mu in [vec![1], vec![2, 1], vec![2, 2], vec![3, 1]] {
        for w in demazure::permutations(4) {
            let p = demazure::demazure_operator_recursion(&mu, &w, 4).unwrap();
            assert!(!p.is_zero());
            assert!(p.terms().all(|(_, c)| c > 0), "mu={mu:?} w={w:?}\n{p}");
        }
    }
}

#[test]
fn characters_grow_with_the_key() {
    for mu in [vec![1], vec![2, 1], vec![1, 1], vec![3, 1, 1]] {
        let perms = demazure::permutations(3);
        let cases: Vec<(Tableau, _)> = perms
            .iter()
            .map(|w| {
                let key = demazure::key_of_composition(&Composition::from_permutation(&mu, w, 3).unwrap()).unwrap();
                let p = demazure::demazure_character(&mu, w, 3, KeyEngine::Scan).unwrap();
                (key, p)
            })
            .collect();
        for (key_a, a) in &cases {
            for (key_b, b) in &cases {
                if key_a.entrywise_leq(key_b).unwrap() {
                    assert!(a.dominated_by(b), "mu={mu:?}\n{a}\nvs\n{b}");
                }
            }
        }
    }
}

#[test]
fn character_of_the_longest_element_is_schur() {
    for mu in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2, 1]] {
        let w0: Vec<usize> = (1..=3).rev().collect();
        let schur = demazure::schur_polynomial(&mu, 3).unwrap();
        assert_eq!(demazure::demazure_character(&mu, &w0, 3, KeyEngine::Scan).unwrap(), schur);
        assert!((0..2).all(|i| schur.is_symmetric_in(i, i + 1)));
    }
}
