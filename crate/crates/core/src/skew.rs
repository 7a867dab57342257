//! Skew tableaux as columns with vertical offsets.

use std::fmt;

use thiserror::Error;

use crate::tableau::Tableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("column {0} starts above the column to its right")]
    Offsets(usize),
    #[error("column {0} ends above the column to its right")]
    Bottoms(usize),
    #[error("column {column} is not strictly increasing at row {row}")]
    ColumnNotStrict { column: usize, row: usize },
    #[error("row {row} decreases between columns {column} and {}", column + 1)]
    RowDecreasing { column: usize, row: usize },
    #[error("column {0} contains a non-positive entry")]
    NonPositive(usize),
}

/// One column of a skew tableau: `offset` empty cells on top, then `entries`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewColumn {
    pub offset: usize,
    pub entries: Vec<u32>,
}

impl SkewColumn {
    pub fn bottom(&self) -> usize {
        self.offset + self.entries.len()
    }

    pub fn get(&self, row: usize) -> Option<u32> {
        row.checked_sub(self.offset).and_then(|i| self.entries.get(i).copied())
    }
}

/// A filling of a skew diagram `outer \ inner`. Rows and columns are
/// 0-based; row 0 is the top row.
///
/// Offsets (the inner shape) and bottoms (the outer shape) are both weakly
/// decreasing left to right. Column lengths need not be.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    pub(crate) columns: Vec<SkewColumn>,
}

impl SkewTableau {
    pub fn new(columns: Vec<(usize, Vec<u32>)>) -> Result<Self, SkewError> {
        let skew = Self {
            columns: columns
                .into_iter()
                .map(|(offset, entries)| SkewColumn { offset, entries })
                .collect(),
        };
        skew.check()?;
        Ok(skew)
    }

    pub fn from_tableau(t: &Tableau) -> Self {
        Self {
            columns: t
                .columns()
                .iter()
                .map(|c| SkewColumn {
                    offset: 0,
                    entries: c.clone(),
                })
                .collect(),
        }
    }

    pub(crate) fn check(&self) -> Result<(), SkewError> {
        for (c, column) in self.columns.iter().enumerate() {
            if column.entries.contains(&0) {
                return Err(SkewError::NonPositive(c));
            }
            if let Some(i) = column.entries.windows(2).position(|w| w[0] >= w[1]) {
                return Err(SkewError::ColumnNotStrict {
                    column: c,
                    row: column.offset + i + 1,
                });
            }
            let Some(next) = self.columns.get(c + 1) else {
                continue;
            };
            if column.offset < next.offset {
                return Err(SkewError::Offsets(c));
            }
            if column.bottom() < next.bottom() {
                return Err(SkewError::Bottoms(c));
            }
            for row in column.offset..column.bottom() {
                if let (Some(left), Some(right)) = (column.get(row), next.get(row)) {
                    if left > right {
                        return Err(SkewError::RowDecreasing { column: c, row });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn columns(&self) -> &[SkewColumn] {
        &self.columns
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, column: usize, row: usize) -> Option<u32> {
        self.columns.get(column).and_then(|c| c.get(row))
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.entries.len()).collect()
    }

    pub fn offsets(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.offset).collect()
    }

    pub fn size(&self) -> usize {
        self.columns.iter().map(|c| c.entries.len()).sum()
    }

    /// True when no column has an offset, i.e. the inner shape is empty.
    pub fn is_straight(&self) -> bool {
        self.columns.iter().all(|c| c.offset == 0)
    }

    /// Converts a straight skew tableau into a tableau, dropping trailing
    /// empty columns. The bound is the largest entry (at least 1).
    pub fn to_tableau(&self) -> Option<Tableau> {
        if !self.is_straight() {
            return None;
        }
        let columns: Vec<Vec<u32>> = self
            .columns
            .iter()
            .map(|c| c.entries.clone())
            .take_while(|c| !c.is_empty())
            .collect();
        let bound = columns.iter().filter_map(|c| c.last().copied()).max().unwrap_or(1);
        Some(Tableau::from_columns_unchecked(columns, bound))
    }
}

impl fmt::Display for SkewTableau {
    /// Rows of entries with `.` for cells of the inner shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let height = self.columns.iter().map(SkewColumn::bottom).max().unwrap_or(0);
        for row in 0..height {
            let mut cells = Vec::new();
            for column in &self.columns {
                if row >= column.bottom() {
                    break;
                }
                cells.push(column.get(row).map_or(".".to_string(), |v| v.to_string()));
            }
            if row > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
