//! Semistandard tableaux stored column by column.

use std::fmt;

use thiserror::Error;

use crate::jdt;
use crate::shape::Shape;
use crate::skew::SkewTableau;

/// Violations found while validating a tableau. Positions are 1-based
/// `(row, column)` in the English convention.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("entry at row {row}, column {column} is not greater than the entry above it")]
    NonDecreasingColumn { row: usize, column: usize },
    #[error("entry at row {row}, column {column} is smaller than the entry to its left")]
    DecreasingRow { row: usize, column: usize },
    #[error("row {row} is longer than the row above it")]
    RaggedShape { row: usize },
    #[error("entry {entry} at row {row}, column {column} exceeds the bound {bound}")]
    EntryOutOfBound {
        row: usize,
        column: usize,
        entry: u32,
        bound: u32,
    },
    #[error("entry at row {row}, column {column} is not positive")]
    NonPositiveEntry { row: usize, column: usize },
    #[error("tableaux have different shapes")]
    ShapeMismatch,
}

/// A semistandard tableau with entries in `1..=bound`.
///
/// Columns are strictly increasing top to bottom, rows weakly increasing
/// left to right, and column lengths weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    columns: Vec<Vec<u32>>,
    bound: u32,
}

impl Tableau {
    pub fn empty(bound: u32) -> Self {
        Self {
            columns: Vec::new(),
            bound: bound.max(1),
        }
    }

    /// Validates a top-left-justified grid given row by row.
    pub fn from_rows(rows: &[Vec<u32>], bound: u32) -> Result<Self, TableauError> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() || (r > 0 && row.len() > rows[r - 1].len()) {
                return Err(TableauError::RaggedShape { row: r + 1 });
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                let (row_no, column) = (r + 1, c + 1);
                if entry == 0 {
                    return Err(TableauError::NonPositiveEntry { row: row_no, column });
                }
                if entry > bound {
                    return Err(TableauError::EntryOutOfBound {
                        row: row_no,
                        column,
                        entry,
                        bound,
                    });
                }
                if c > 0 && row[c - 1] > entry {
                    return Err(TableauError::DecreasingRow { row: row_no, column });
                }
                if r > 0 && rows[r - 1][c] >= entry {
                    return Err(TableauError::NonDecreasingColumn { row: row_no, column });
                }
            }
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width)
            .map(|c| rows.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect())
            .collect();
        Ok(Self {
            columns,
            bound: bound.max(1),
        })
    }

    pub fn from_columns(columns: Vec<Vec<u32>>, bound: u32) -> Result<Self, TableauError> {
        for (c, column) in columns.iter().enumerate() {
            if column.is_empty() {
                return Err(TableauError::RaggedShape { row: 1 });
            }
            if c > 0 && column.len() > columns[c - 1].len() {
                return Err(TableauError::RaggedShape {
                    row: columns[c - 1].len() + 1,
                });
            }
        }
        let rows = rows_of(&columns);
        Self::from_rows(&rows, bound)
    }

    /// Caller guarantees semistandardness; checked in debug builds.
    pub(crate) fn from_columns_unchecked(columns: Vec<Vec<u32>>, bound: u32) -> Self {
        debug_assert!(
            Self::from_columns(columns.clone(), bound).is_ok(),
            "invalid columns {columns:?} with bound {bound}"
        );
        Self { columns, bound }
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn column(&self, index: usize) -> &[u32] {
        &self.columns[index]
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Same filling with a different entry bound.
    pub fn with_bound(&self, bound: u32) -> Result<Self, TableauError> {
        Self::from_columns(self.columns.clone(), bound)
    }

    pub fn shape(&self) -> Shape {
        Shape::new(self.columns.iter().map(Vec::len).collect()).expect("tableau columns form a shape")
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        rows_of(&self.columns)
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.columns.iter().filter_map(|c| c.last().copied()).max()
    }

    /// The bottom entry of every column, left to right.
    pub fn bottom_entries(&self) -> Vec<u32> {
        self.columns.iter().map(|c| *c.last().expect("columns are nonempty")).collect()
    }

    /// The tableau with its first column removed.
    pub fn without_first_column(&self) -> Tableau {
        Self {
            columns: self.columns.iter().skip(1).cloned().collect(),
            bound: self.bound,
        }
    }

    /// True when every column's entries also appear in the column to its left.
    pub fn is_key(&self) -> bool {
        self.columns
            .windows(2)
            .all(|pair| pair[1].iter().all(|x| pair[0].binary_search(x).is_ok()))
    }

    pub fn entrywise_leq(&self, other: &Tableau) -> Result<bool, TableauError> {
        if self.shape() != other.shape() {
            return Err(TableauError::ShapeMismatch);
        }
        Ok(self
            .columns
            .iter()
            .zip(&other.columns)
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x <= y)))
    }

    /// Multiplicity of each value `1..=bound`.
    pub fn weight(&self) -> Vec<u32> {
        let mut weight = vec![0; self.bound as usize];
        for &entry in self.columns.iter().flatten() {
            weight[entry as usize - 1] += 1;
        }
        weight
    }

    /// Schützenberger's complement: rotate the diagram by 180 degrees,
    /// replace each entry `e` by `bound + 1 - e`, and rectify. The result has
    /// the same shape and the map is an involution.
    pub fn complement(&self) -> Tableau {
        let height = self.shape().num_rows();
        let flip = |e: u32| self.bound + 1 - e;
        let columns = self
            .columns
            .iter()
            .rev()
            .map(|column| {
                let entries: Vec<u32> = column.iter().rev().map(|&e| flip(e)).collect();
                (height - column.len(), entries)
            })
            .collect();
        let rotated = SkewTableau::new(columns).expect("rotated tableau is a skew tableau");
        jdt::rectify(&rotated).with_bound_unchecked(self.bound)
    }

    /// Replaces each entry `e` by `bound + 1 - e` and reverses each column in
    /// place. This is a tableau whenever `self` is a key, where it agrees with
    /// [`Tableau::complement`]; for other fillings rows may decrease.
    pub fn complement_columns(&self) -> Result<Tableau, TableauError> {
        let columns = self
            .columns
            .iter()
            .map(|column| column.iter().rev().map(|&e| self.bound + 1 - e).collect())
            .collect();
        Self::from_columns(columns, self.bound)
    }

    pub(crate) fn with_bound_unchecked(mut self, bound: u32) -> Self {
        self.bound = bound;
        self
    }
}

fn rows_of(columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let height = columns.first().map_or(0, Vec::len);
    (0..height)
        .map(|r| columns.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
        .collect()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_tableau(self))
    }
}
