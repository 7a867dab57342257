//! Right and left keys read directly off a tableau.
//!
//! The right key column for column `i` is built bottom-up. Take the bottom
//! entries of columns `i, i+1, ...` as a sequence and find its earliest
//! weakly increasing subsequence (EWIS). Its last member is the next entry
//! of the key column. Remove the boxes it used and repeat until column `i`
//! is empty.

use thiserror::Error;

use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScanError {
    #[error("cannot take the EWIS of an empty sequence")]
    EmptySequence,
}

/// Earliest weakly increasing subsequence of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ewis {
    /// 0-based positions in the scanned sequence; always starts at 0.
    pub indices: Vec<usize>,
    pub values: Vec<u32>,
}

impl Ewis {
    pub fn last_value(&self) -> u32 {
        *self.values.last().expect("an EWIS is never empty")
    }
}

/// Starts at the first element and repeatedly takes the first later
/// element that is at least the current one.
pub fn ewis(seq: &[u32]) -> Result<Ewis, ScanError> {
    let (&first, rest) = seq.split_first().ok_or(ScanError::EmptySequence)?;
    let mut indices = vec![0];
    let mut values = vec![first];
    for (i, &x) in rest.iter().enumerate() {
        if x >= *values.last().unwrap() {
            indices.push(i + 1);
            values.push(x);
        }
    }
    Ok(Ewis { indices, values })
}

/// One scanning pass: the EWIS found and the boxes `(column, row)` it used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanPass {
    pub cells: Vec<(usize, usize)>,
    pub values: Vec<u32>,
}

impl ScanPass {
    pub fn last_value(&self) -> u32 {
        *self.values.last().expect("a pass is never empty")
    }
}

impl std::fmt::Display for ScanPass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let values: Vec<String> = self.values.iter().map(u32::to_string).collect();
        write!(f, "({})", values.join(","))
    }
}

/// Right key column for column `start` (0-based), top to bottom, together
/// with the passes in the order they were made.
pub fn scan_column_traced(t: &Tableau, start: usize) -> (Vec<u32>, Vec<ScanPass>) {
    let columns = &t.columns()[start..];
    let mut heights: Vec<usize> = columns.iter().map(Vec::len).collect();
    let mut passes = Vec::with_capacity(heights[0]);
    let mut sequence = Vec::with_capacity(columns.len());
    let mut owners = Vec::with_capacity(columns.len());
    while heights[0] > 0 {
        sequence.clear();
        owners.clear();
        for (c, &h) in heights.iter().enumerate() {
            if h > 0 {
                sequence.push(columns[c][h - 1]);
                owners.push(c);
            }
        }
        let found = ewis(&sequence).expect("column `start` is still nonempty");
        let cells = found
            .indices
            .iter()
            .map(|&i| {
                let c = owners[i];
                heights[c] -= 1;
                (start + c, heights[c])
            })
            .collect();
        passes.push(ScanPass {
            cells,
            values: found.values,
        });
    }
    let column = passes.iter().rev().map(ScanPass::last_value).collect();
    (column, passes)
}

pub fn scan_column(t: &Tableau, start: usize) -> Vec<u32> {
    scan_column_traced(t, start).0
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Scan only the rightmost of several equal-length columns and copy it.
    pub skip_equal_lengths: bool,
}

/// The scanning tableau of `t`, which is its right key.
pub fn scanning_tableau(t: &Tableau) -> Tableau {
    scanning_tableau_with(t, ScanOptions::default())
}

pub fn scanning_tableau_with(t: &Tableau, options: ScanOptions) -> Tableau {
    let k = t.num_columns();
    let mut columns: Vec<Vec<u32>> = vec![Vec::new(); k];
    for i in (0..k).rev() {
        columns[i] = if options.skip_equal_lengths && i + 1 < k && t.column(i + 1).len() == t.column(i).len() {
            columns[i + 1].clone()
        } else {
            scan_column(t, i)
        };
    }
    Tableau::from_columns_unchecked(columns, t.bound())
}

/// Largest entry among the first `height` entries of `column` that is at
/// most `limit`, with its row.
fn largest_at_most(column: &[u32], height: usize, limit: u32) -> Option<(usize, u32)> {
    let row = column[..height].partition_point(|&x| x <= limit).checked_sub(1)?;
    Some((row, column[row]))
}

/// Walks right to left from the bottom of `last_column` (0-based), taking
/// in each column the largest entry not exceeding the previous one.
pub fn left_scan_sequence(t: &Tableau, last_column: usize) -> Vec<u32> {
    let mut heights: Vec<usize> = t.columns()[..=last_column].iter().map(Vec::len).collect();
    left_pass(t, &mut heights)
}

/// One pass over columns `0..heights.len()`; shrinks each height to the row
/// of the entry taken, which excludes that box and every box below it.
fn left_pass(t: &Tableau, heights: &mut [usize]) -> Vec<u32> {
    let last = heights.len() - 1;
    let mut value = t.column(last)[heights[last] - 1];
    heights[last] -= 1;
    let mut sequence = vec![value];
    for c in (0..last).rev() {
        let (row, found) = largest_at_most(t.column(c), heights[c], value)
            .expect("the row condition guarantees a candidate in every column");
        heights[c] = row;
        value = found;
        sequence.push(value);
    }
    sequence
}

/// Left key of `t`. Columns are filled right to left, each from the
/// bottom up, with the final member of successive left scan sequences.
pub fn left_key(t: &Tableau) -> Tableau {
    let columns = (0..t.num_columns())
        .map(|j| {
            let mut heights: Vec<usize> = t.columns()[..=j].iter().map(Vec::len).collect();
            let mut column: Vec<u32> = (0..t.column(j).len())
                .map(|_| *left_pass(t, &mut heights).last().unwrap())
                .collect();
            column.reverse();
            column
        })
        .collect();
    Tableau::from_columns_unchecked(columns, t.bound())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::tableaux;
    use crate::shape::Shape;
    use crate::text::parse_tableau;

    fn sample() -> Tableau {
        parse_tableau("1 1 3 4 6\n2 3 5 7 9\n4 5 6 8\n5 7 9\n7\n8").unwrap()
    }

    #[test]
    fn ewis_examples() {
        let e = ewis(&[8, 7, 9, 8, 9]).unwrap();
        assert_eq!(e.values, vec![8, 9, 9]);
        assert_eq!(e.indices, vec![0, 2, 4]);
        let e = ewis(&[5, 4, 3]).unwrap();
        assert_eq!((e.values, e.indices), (vec![5], vec![0]));
        let e = ewis(&[1, 1, 2]).unwrap();
        assert_eq!((e.values, e.indices), (vec![1, 1, 2], vec![0, 1, 2]));
        assert_eq!(ewis(&[]), Err(ScanError::EmptySequence));
    }

    #[test]
    fn sample_first_column() {
        let (column, passes) = scan_column_traced(&sample(), 0);
        assert_eq!(column, vec![1, 4, 6, 7, 8, 9]);
        let listed: Vec<String> = passes.iter().map(ToString::to_string).collect();
        assert_eq!(
            listed,
            ["(8,9,9)", "(7,7,8)", "(5,5,6,7)", "(4,5,6)", "(2,3,3,4)", "(1,1)"]
        );
    }

    #[test]
    fn sample_later_columns() {
        let t = sample();
        let (column, passes) = scan_column_traced(&t, 2);
        assert_eq!(column, vec![6, 7, 8, 9]);
        let listed: Vec<String> = passes.iter().map(ToString::to_string).collect();
        assert_eq!(listed, ["(9,9)", "(6,8)", "(5,7)", "(3,4,6)"]);
        let (column, passes) = scan_column_traced(&t, 3);
        assert_eq!(column, vec![6, 7, 9]);
        let listed: Vec<String> = passes.iter().map(ToString::to_string).collect();
        assert_eq!(listed, ["(8,9)", "(7)", "(4,6)"]);
        assert_eq!(scan_column(&t, 4), t.column(4));
    }

    #[test]
    fn sample_right_key() {
        let expected = parse_tableau("1 6 6 6 6\n4 7 7 7 9\n6 8 8 9\n7 9 9\n8\n9").unwrap();
        assert_eq!(scanning_tableau(&sample()), expected);
    }

    #[test]
    fn single_columns_are_fixed() {
        let t = Tableau::from_columns(vec![vec![2, 3, 7]], 7).unwrap();
        assert_eq!(scanning_tableau(&t), t);
        assert_eq!(left_key(&t), t);
        assert_eq!(left_scan_sequence(&t, 0), vec![7]);
    }

    #[test]
    fn empty_tableau() {
        let t = Tableau::empty(3);
        assert_eq!(scanning_tableau(&t), t);
        assert_eq!(left_key(&t), t);
    }

    #[test]
    fn left_scan_examples() {
        let t = sample();
        assert_eq!(left_scan_sequence(&t, 1), vec![7, 7]);
        let equal = Tableau::from_columns(vec![vec![1, 4], vec![1, 4]], 4).unwrap();
        assert_eq!(left_scan_sequence(&equal, 1), vec![4, 4]);
        // last column of the left key by hand: passes 9,8,6,5,5 then 6,4,3,3,2
        assert_eq!(left_key(&t).column(4), &[2, 5]);
    }

    /// Direct transcription of the recursive definition, copying tableaux.
    fn reference_column(columns: &[Vec<u32>]) -> Vec<u32> {
        if columns.first().is_none_or(Vec::is_empty) {
            return Vec::new();
        }
        let live: Vec<usize> = (0..columns.len()).filter(|&c| !columns[c].is_empty()).collect();
        let bottoms: Vec<u32> = live.iter().map(|&c| *columns[c].last().unwrap()).collect();
        let e = ewis(&bottoms).unwrap();
        let mut rest = columns.to_vec();
        for &i in &e.indices {
            rest[live[i]].pop();
        }
        let mut column = reference_column(&rest);
        column.push(e.last_value());
        column
    }

    fn reference_scanning(t: &Tableau) -> Vec<Vec<u32>> {
        if t.is_empty() {
            return Vec::new();
        }
        let mut out = vec![reference_column(t.columns())];
        out.extend(reference_scanning(&t.without_first_column()));
        out
    }

    #[test]
    fn iterative_matches_recursive_definition() {
        for shape in Shape::all_up_to(7) {
            for t in tableaux(&shape, 4) {
                assert_eq!(scanning_tableau(&t).columns(), reference_scanning(&t).as_slice());
            }
        }
    }

    #[test]
    fn fast_path_matches() {
        let fast = ScanOptions {
            skip_equal_lengths: true,
        };
        for shape in Shape::all_up_to(7) {
            for t in tableaux(&shape, 4) {
                assert_eq!(scanning_tableau_with(&t, fast), scanning_tableau(&t));
            }
        }
    }

    #[test]
    fn passes_mark_every_box_once() {
        for shape in Shape::all_up_to(7) {
            for t in tableaux(&shape, 4) {
                for start in 0..t.num_columns() {
                    let (_, passes) = scan_column_traced(&t, start);
                    let mut cells: Vec<(usize, usize)> = passes.iter().flat_map(|p| p.cells.clone()).collect();
                    cells.sort_unstable();
                    let expected: Vec<(usize, usize)> = (start..t.num_columns())
                        .flat_map(|c| (0..t.column(c).len()).map(move |r| (c, r)))
                        .collect();
                    assert_eq!(cells, expected);
                    for pass in &passes {
                        for (&(c, r), &v) in pass.cells.iter().zip(&pass.values) {
                            assert_eq!(t.column(c)[r], v);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn keys_bracket_the_tableau() {
        for shape in Shape::all_up_to(7) {
            for t in tableaux(&shape, 4) {
                let right = scanning_tableau(&t);
                let left = left_key(&t);
                assert!(right.is_key() && left.is_key());
                assert_eq!(right.shape(), shape);
                assert_eq!(left.shape(), shape);
                assert!(t.entrywise_leq(&right).unwrap());
                assert!(left.entrywise_leq(&t).unwrap());
            }
        }
    }
}
