//! Shapes, stored by column lengths.
//!
//! A shape `(5, 3, 3, 1)` is a Young diagram whose first column has five
//! boxes, the next two have three, and the last has one. Row lengths are
//! available through [`Shape::row_lengths`] and [`Shape::from_row_lengths`].

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("column length at position {0} is zero")]
    ZeroLength(usize),
    #[error("column lengths increase at position {0}")]
    NotDecreasing(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    lengths: Vec<usize>,
}

impl Shape {
    pub fn new(lengths: Vec<usize>) -> Result<Self, ShapeError> {
        for (i, &len) in lengths.iter().enumerate() {
            if len == 0 {
                return Err(ShapeError::ZeroLength(i));
            }
            if i > 0 && lengths[i - 1] < len {
                return Err(ShapeError::NotDecreasing(i));
            }
        }
        Ok(Self { lengths })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a shape from a partition given by row lengths. Zero parts are
    /// ignored; the parts need not be sorted.
    pub fn from_row_lengths(rows: &[usize]) -> Self {
        let mut rows: Vec<usize> = rows.iter().copied().filter(|&r| r > 0).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Self {
            lengths: conjugate(&rows),
        }
    }

    pub fn column_lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        conjugate(&self.lengths)
    }

    pub fn num_columns(&self) -> usize {
        self.lengths.len()
    }

    pub fn num_rows(&self) -> usize {
        self.lengths.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// All shapes with exactly `boxes` boxes, in reverse lexicographic order
    /// of their column lengths.
    pub fn all_of_size(boxes: usize) -> Vec<Shape> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_into(boxes, boxes, &mut current, &mut out);
        out.into_iter().map(|lengths| Shape { lengths }).collect()
    }

    /// All shapes with at most `max_boxes` boxes, the empty shape included.
    pub fn all_up_to(max_boxes: usize) -> Vec<Shape> {
        (0..=max_boxes).flat_map(Shape::all_of_size).collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, len) in self.lengths.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{len}")?;
        }
        write!(f, ")")
    }
}

/// Conjugate of a weakly decreasing sequence of positive integers.
pub fn conjugate(parts: &[usize]) -> Vec<usize> {
    let first = parts.first().copied().unwrap_or(0);
    (1..=first)
        .map(|j| parts.iter().take_while(|&&p| p >= j).count())
        .collect()
}

fn partitions_into(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        partitions_into(remaining - part, part, current, out);
        current.pop();
    }
}
