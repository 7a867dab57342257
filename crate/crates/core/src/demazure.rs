//! Demazure characters (key polynomials).
//!
//! For a partition `mu` and a permutation `w`, the character is the sum of
//! `x^weight(T)` over tableaux `T` of shape `mu` whose right key is
//! entrywise at most the key of the composition `w . mu`. The same
//! polynomial is obtained independently by applying isobaric divided
//! differences along a reduced word of `w` to `x^mu`.

use rayon::prelude::*;
use thiserror::Error;

use crate::enumerate::tableaux;
use crate::jdt;
use crate::polynomial::SparsePolynomial;
use crate::scanning;
use crate::shape::Shape;
use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DemazureError {
    #[error("composition has no positive part")]
    EmptyComposition,
    #[error("{0}")]
    BadDimensions(String),
}

/// Which right key computation filters the tableaux.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum KeyEngine {
    #[default]
    Scan,
    Oracle,
}

/// A weak composition, typically `w . mu`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    /// The composition `w . mu` of length `n`: part `w(i)` is `mu_i`.
    /// `w` is in one-line notation with values `1..=w.len()`.
    pub fn from_permutation(mu: &[usize], w: &[usize], n: usize) -> Result<Self, DemazureError> {
        check_dimensions(mu, w, n)?;
        let w = embed(w, n);
        let mut parts = vec![0; n];
        for (i, &target) in w.iter().enumerate() {
            parts[target - 1] = mu.get(i).copied().unwrap_or(0);
        }
        Ok(Self(parts))
    }

    pub fn partition(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }
}

/// Key tableau of a composition: column `j` holds every `i` with
/// `parts[i-1] >= j`.
pub fn key_of_composition(c: &Composition) -> Result<Tableau, DemazureError> {
    if c.0.iter().all(|&p| p == 0) {
        return Err(DemazureError::EmptyComposition);
    }
    Ok(key_tableau(c))
}

fn key_tableau(c: &Composition) -> Tableau {
    let width = c.0.iter().copied().max().unwrap_or(0);
    let columns = (1..=width)
        .map(|j| (1..=c.0.len() as u32).filter(|&i| c.0[i as usize - 1] >= j).collect())
        .collect();
    Tableau::from_columns_unchecked(columns, c.0.len().max(1) as u32)
}

fn check_dimensions(mu: &[usize], w: &[usize], n: usize) -> Result<(), DemazureError> {
    if n == 0 {
        return Err(DemazureError::BadDimensions("n must be positive".into()));
    }
    if mu.windows(2).any(|p| p[0] < p[1]) {
        return Err(DemazureError::BadDimensions(format!("{mu:?} is not a partition")));
    }
    let rows = mu.iter().filter(|&&p| p > 0).count();
    if rows > n {
        return Err(DemazureError::BadDimensions(format!("{mu:?} has more than {n} parts")));
    }
    if w.len() > n {
        return Err(DemazureError::BadDimensions(format!("permutation longer than n = {n}")));
    }
    let mut seen = vec![false; w.len()];
    for &v in w {
        if v == 0 || v > w.len() || std::mem::replace(&mut seen[v - 1], true) {
            return Err(DemazureError::BadDimensions(format!("{w:?} is not a permutation")));
        }
    }
    Ok(())
}

/// Extends `w` by fixed points to a permutation of `1..=n`.
fn embed(w: &[usize], n: usize) -> Vec<usize> {
    w.iter().copied().chain(w.len() + 1..=n).collect()
}

fn monomial_of(mu: &[usize], n: usize) -> SparsePolynomial {
    let mut exponents = vec![0; n];
    for (e, &p) in exponents.iter_mut().zip(mu) {
        *e = p as u32;
    }
    SparsePolynomial::monomial(exponents, 1)
}

fn weight_sum(ts: impl ParallelIterator<Item = Tableau>, n: usize) -> SparsePolynomial {
    ts.map(|t| SparsePolynomial::monomial(t.weight(), 1))
        .reduce(|| SparsePolynomial::zero(n), |a, b| a + b)
}

/// Sum of weights of the tableaux of shape `mu` (row lengths) with right
/// key at most the key of `w . mu`.
pub fn demazure_character(
    mu: &[usize],
    w: &[usize],
    n: usize,
    engine: KeyEngine,
) -> Result<SparsePolynomial, DemazureError> {
    let target = key_tableau(&Composition::from_permutation(mu, w, n)?);
    let shape = Shape::from_row_lengths(mu);
    let all: Vec<Tableau> = tableaux(&shape, n as u32).collect();
    let passing = all.into_par_iter().filter(|t| {
        let key = match engine {
            KeyEngine::Scan => scanning::scanning_tableau(t),
            KeyEngine::Oracle => jdt::right_key(t),
        };
        key.entrywise_leq(&target).expect("same shape")
    });
    Ok(weight_sum(passing, n))
}

/// Sum of weights of all tableaux of shape `mu` with entries at most `n`.
pub fn schur_polynomial(mu: &[usize], n: usize) -> Result<SparsePolynomial, DemazureError> {
    check_dimensions(mu, &[], n)?;
    let shape = Shape::from_row_lengths(mu);
    let all: Vec<Tableau> = tableaux(&shape, n as u32).collect();
    Ok(weight_sum(all.into_par_iter(), n))
}

/// Isobaric divided difference `(x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})`
/// for the adjacent pair `(i, i + 1)`, 0-based.
pub fn isobaric_divided_difference(f: &SparsePolynomial, i: usize) -> SparsePolynomial {
    let numerator = &f.shift(i) - &f.swap_vars(i, i + 1).shift(i + 1);
    numerator
        .div_by_difference(i, i + 1)
        .expect("the numerator is antisymmetric, hence divisible")
}

/// Reduced word of `w` (one-line notation, values from 1) as 0-based
/// adjacent transposition indices, read left to right. `w` is peeled from
/// the right by repeatedly removing its smallest descent, or its largest
/// when `largest_first` is set.
pub fn reduced_word(w: &[usize], largest_first: bool) -> Vec<usize> {
    let mut w = w.to_vec();
    let mut word = Vec::new();
    loop {
        let mut descents = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
        let next = if largest_first { descents.next_back() } else { descents.next() };
        let Some(i) = next else { break };
        w.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

/// Applies the divided differences of a reduced word of `w` to `x^mu`:
/// `pi_{i_1} ... pi_{i_l} x^mu` for `w = s_{i_1} ... s_{i_l}`.
pub fn demazure_operator_recursion(mu: &[usize], w: &[usize], n: usize) -> Result<SparsePolynomial, DemazureError> {
    demazure_operator_with_word(mu, w, n, false)
}

pub fn demazure_operator_with_word(
    mu: &[usize],
    w: &[usize],
    n: usize,
    largest_first: bool,
) -> Result<SparsePolynomial, DemazureError> {
    check_dimensions(mu, w, n)?;
    let word = reduced_word(&embed(w, n), largest_first);
    let mut f = monomial_of(mu, n);
    for &i in word.iter().rev() {
        f = isobaric_divided_difference(&f, i);
    }
    Ok(f)
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

/// All partitions (row lengths, decreasing) of exactly `size`.
pub fn partitions(size: usize) -> Vec<Vec<usize>> {
    Shape::all_of_size(size).iter().map(Shape::row_lengths).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn longest(n: usize) -> Vec<usize> {
        (1..=n).rev().collect()
    }

    #[test]
    fn keys_of_compositions() {
        let key = key_of_composition(&Composition(vec![2, 1, 0])).unwrap();
        assert_eq!(key.columns(), &[vec![1, 2], vec![1]]);
        assert_eq!(key.weight(), vec![2, 1, 0]);
        let key = key_of_composition(&Composition(vec![3, 2, 2])).unwrap();
        assert_eq!(key.columns(), &[vec![1, 2, 3], vec![1, 2, 3], vec![1]]);
        let key = key_of_composition(&Composition(vec![0, 1])).unwrap();
        assert_eq!(key.columns(), &[vec![2]]);
        assert_eq!(
            key_of_composition(&Composition(vec![0, 0])),
            Err(DemazureError::EmptyComposition)
        );
    }

    #[test]
    fn composition_of_permutation() {
        assert_eq!(Composition::from_permutation(&[1], &[2, 1], 2).unwrap().0, vec![0, 1]);
        assert_eq!(Composition::from_permutation(&[2, 1], &[3, 1, 2], 3).unwrap().0, vec![1, 0, 2]);
        assert!(Composition::from_permutation(&[1, 2], &[1], 2).is_err());
        assert!(Composition::from_permutation(&[1, 1, 1], &[1], 2).is_err());
        assert!(Composition::from_permutation(&[1], &[1, 1], 2).is_err());
    }

    #[test]
    fn identity_gives_a_monomial() {
        for mu in [vec![2, 1], vec![3], vec![1, 1, 1]] {
            let p = demazure_character(&mu, &[1, 2, 3], 3, KeyEngine::Scan).unwrap();
            assert_eq!(p, monomial_of(&mu, 3));
            assert_eq!(demazure_operator_recursion(&mu, &[], 3).unwrap(), monomial_of(&mu, 3));
        }
    }

    #[test]
    fn single_box_in_two_variables() {
        let p = demazure_character(&[1], &[2, 1], 2, KeyEngine::Scan).unwrap();
        assert_eq!(p.to_lines(), "1 1 0\n1 0 1");
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_polynomial(&[1], 3).unwrap().to_lines(), "1 1 0 0\n1 0 1 0\n1 0 0 1");
        let e2 = schur_polynomial(&[1, 1], 3).unwrap();
        assert_eq!(e2.to_lines(), "1 1 1 0\n1 1 0 1\n1 0 1 1");
        let s = schur_polynomial(&[2, 1], 4).unwrap();
        for i in 0..3 {
            assert!(s.is_symmetric_in(i, i + 1));
        }
    }

    #[test]
    fn longest_element_gives_schur() {
        for mu in [vec![2, 1], vec![2, 2], vec![3, 1]] {
            let p = demazure_character(&mu, &longest(3), 3, KeyEngine::Scan).unwrap();
            assert_eq!(p, schur_polynomial(&mu, 3).unwrap());
        }
    }

    #[test]
    fn divided_difference_fixes_symmetric_polynomials() {
        let s = schur_polynomial(&[2, 1], 3).unwrap();
        assert_eq!(isobaric_divided_difference(&s, 0), s);
        let f = monomial_of(&[2, 0, 1], 3);
        let once = isobaric_divided_difference(&f, 1);
        assert_eq!(isobaric_divided_difference(&once, 1), once);
    }

    #[test]
    fn reduced_words() {
        assert_eq!(reduced_word(&[1, 2, 3], false), Vec::<usize>::new());
        assert_eq!(reduced_word(&[2, 1, 3], false), vec![0]);
        for w in permutations(4) {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
            for largest in [false, true] {
                let word = reduced_word(&w, largest);
                assert_eq!(word.len(), inversions);
                let mut product: Vec<usize> = (1..=4).collect();
                for &i in &word {
                    product.swap(i, i + 1);
                }
                assert_eq!(product, w);
            }
        }
    }

    #[test]
    fn engines_agree_on_small_cases() {
        for w in permutations(3) {
            for mu in [vec![2, 1], vec![1, 1], vec![3, 1, 1]] {
                let scan = demazure_character(&mu, &w, 3, KeyEngine::Scan).unwrap();
                let oracle = demazure_character(&mu, &w, 3, KeyEngine::Oracle).unwrap();
                let recursion = demazure_operator_recursion(&mu, &w, 3).unwrap();
                assert_eq!(scan, oracle);
                assert_eq!(scan, recursion, "mu={mu:?} w={w:?}");
            }
        }
    }

    #[test]
    fn empty_partition_gives_one() {
        let one = SparsePolynomial::monomial(vec![0; 3], 1);
        assert_eq!(demazure_character(&[], &[2, 1], 3, KeyEngine::Scan).unwrap(), one);
        assert_eq!(demazure_operator_recursion(&[], &[2, 1], 3).unwrap(), one);
    }
}
