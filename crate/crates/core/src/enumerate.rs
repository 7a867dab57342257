//! Enumeration of semistandard tableaux of a fixed shape.
//!
//! Tableaux are produced in lexicographic order of their column reading
//! word (each column top to bottom, columns left to right).

use std::collections::HashMap;

use crate::shape::Shape;
use crate::tableau::Tableau;

/// Iterator over all tableaux of `shape` with entries at most `bound`.
#[derive(Debug, Clone)]
pub struct Tableaux {
    lengths: Vec<usize>,
    bound: u32,
    /// Start of each column in `word`.
    starts: Vec<usize>,
    word: Vec<u32>,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

pub fn tableaux(shape: &Shape, bound: u32) -> Tableaux {
    let lengths = shape.column_lengths().to_vec();
    let mut starts = Vec::with_capacity(lengths.len());
    let mut total = 0;
    for &len in &lengths {
        starts.push(total);
        total += len;
    }
    let state = if shape.num_rows() > bound as usize {
        State::Done
    } else {
        State::Fresh
    };
    Tableaux {
        lengths,
        bound,
        starts,
        word: vec![0; total],
        state,
    }
}

impl Tableaux {
    fn cell_of(&self, index: usize) -> (usize, usize) {
        let column = self.starts.partition_point(|&s| s <= index) - 1;
        (column, index - self.starts[column])
    }

    /// Largest value a cell may hold and still leave room below it.
    fn ceiling(&self, column: usize, row: usize) -> u32 {
        self.bound - (self.lengths[column] - 1 - row) as u32
    }

    fn floor(&self, column: usize, row: usize) -> u32 {
        let above = if row > 0 {
            self.word[self.starts[column] + row - 1] + 1
        } else {
            1
        };
        let left = if column > 0 {
            self.word[self.starts[column - 1] + row]
        } else {
            1
        };
        above.max(left)
    }

    fn fill_minimal_from(&mut self, first: usize) {
        for index in first..self.word.len() {
            let (column, row) = self.cell_of(index);
            self.word[index] = self.floor(column, row);
        }
    }

    fn advance(&mut self) -> bool {
        for index in (0..self.word.len()).rev() {
            let (column, row) = self.cell_of(index);
            if self.word[index] < self.ceiling(column, row) {
                self.word[index] += 1;
                self.fill_minimal_from(index + 1);
                return true;
            }
        }
        false
    }

    fn current(&self) -> Tableau {
        let columns = self
            .starts
            .iter()
            .zip(&self.lengths)
            .map(|(&s, &len)| self.word[s..s + len].to_vec())
            .collect();
        Tableau::from_columns_unchecked(columns, self.bound)
    }
}

impl Iterator for Tableaux {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.fill_minimal_from(0);
                self.state = State::Running;
            }
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(self.current())
    }
}

/// Counts tableaux of `shape` with entries at most `bound` by dynamic
/// programming over columns, without materializing any tableau.
pub fn count_tableaux(shape: &Shape, bound: u32) -> u64 {
    fn columns_above(len: usize, bound: u32, floor: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let row = prefix.len();
        if row == len {
            out.push(prefix.clone());
            return;
        }
        let low = floor.get(row).copied().unwrap_or(1).max(prefix.last().map_or(1, |&x| x + 1));
        for v in low..=bound {
            prefix.push(v);
            columns_above(len, bound, floor, prefix, out);
            prefix.pop();
        }
    }

    fn count(lengths: &[usize], bound: u32, previous: &[u32], memo: &mut HashMap<(usize, Vec<u32>), u64>) -> u64 {
        let Some((&len, rest)) = lengths.split_first() else {
            return 1;
        };
        let key = (lengths.len(), previous.to_vec());
        if let Some(&n) = memo.get(&key) {
            return n;
        }
        let mut candidates = Vec::new();
        columns_above(len, bound, previous, &mut Vec::new(), &mut candidates);
        let total = candidates.iter().map(|c| count(rest, bound, c, memo)).sum();
        memo.insert(key, total);
        total
    }

    count(shape.column_lengths(), bound, &[], &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(lengths: &[usize]) -> Shape {
        Shape::new(lengths.to_vec()).unwrap()
    }

    #[test]
    fn two_single_boxes() {
        let rows: Vec<Vec<Vec<u32>>> = tableaux(&shape(&[1, 1]), 2).map(|t| t.rows()).collect();
        assert_eq!(rows, vec![vec![vec![1, 1]], vec![vec![1, 2]], vec![vec![2, 2]]]);
    }

    #[test]
    fn small_cases() {
        let all: Vec<Tableau> = tableaux(&shape(&[2]), 2).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].column(0), &[1, 2]);
        assert_eq!(tableaux(&shape(&[1]), 3).count(), 3);
        assert_eq!(tableaux(&shape(&[3]), 2).count(), 0);
        assert_eq!(tableaux(&Shape::empty(), 2).count(), 1);
    }

    #[test]
    fn order_is_lexicographic_by_reading_word() {
        let words: Vec<Vec<u32>> = tableaux(&shape(&[3, 2, 1]), 4)
            .map(|t| t.columns().concat())
            .collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn counts_agree_with_column_dp() {
        for size in 0..=8 {
            for s in Shape::all_of_size(size) {
                for n in 1..=6 {
                    assert_eq!(tableaux(&s, n).count() as u64, count_tableaux(&s, n), "{s} n={n}");
                }
            }
        }
    }

    #[test]
    fn hook_content_spot_checks() {
        // shape with rows (2,1) in three letters has dimension 8
        assert_eq!(count_tableaux(&Shape::from_row_lengths(&[2, 1]), 3), 8);
        // rows (2,2) in four letters: 20
        assert_eq!(count_tableaux(&Shape::from_row_lengths(&[2, 2]), 4), 20);
    }
}
