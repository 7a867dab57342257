//! Jeu de taquin: slides, rectification, and the frank-tableau description
//! of right and left keys.
//!
//! This module is the reference against which the scanning method in
//! [`crate::scanning`] is checked, so it shares no code with it.
//!
//! A right key column is found by moving a column of `T` to the far right
//! with a sequence of length swaps. Each swap first pulls the columns to its
//! left down out of the way, then performs reverse slides below the column
//! to its right until the two lengths have traded places. Every step is a
//! slide, so the rectification never changes; the lengths are only
//! permuted, so the result stays frank.

use std::fmt;

use thiserror::Error;

use crate::skew::{SkewColumn, SkewTableau};
use crate::tableau::Tableau;

const HOLE: u32 = 0;

/// A cell as `(column, row)`, both 0-based.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JdtError {
    #[error("cell {0:?} is not an inside corner")]
    NotAnInsideCorner(Cell),
    #[error("cell {0:?} is not an outside corner")]
    NotAnOutsideCorner(Cell),
    #[error("cannot pull down {columns} columns of a {available}-column tableau")]
    IllegalShift { columns: usize, available: usize },
    #[error("length swap {index} is not defined: {reason}")]
    BadIndex { index: usize, reason: &'static str },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// Cells visited by the hole during one slide, starting at the corner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideTrace {
    pub direction: Direction,
    pub path: Vec<Cell>,
}

impl SlideTrace {
    pub fn start(&self) -> Cell {
        self.path[0]
    }

    pub fn end(&self) -> Cell {
        *self.path.last().expect("path contains the start cell")
    }
}

impl fmt::Display for SlideTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.direction {
            Direction::Forward => "slide",
            Direction::Reverse => "reverse-slide",
        };
        write!(f, "{kind}")?;
        for (c, r) in &self.path {
            write!(f, " ({},{})", c + 1, r + 1)?;
        }
        Ok(())
    }
}

/// One length swap exchanging the lengths of columns `index` and
/// `index + 1` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSwapStep {
    pub index: usize,
    /// Difference of the two column lengths, i.e. the number of reverse slides.
    pub length_difference: usize,
    /// Rows the columns left of `index` were pulled down by.
    pub pull_down: usize,
    pub before: SkewTableau,
    pub after: SkewTableau,
    pub slides: Vec<SlideTrace>,
}

impl LengthSwapStep {
    /// The new bottom entry of column `index + 1` is its old bottom entry
    /// when that is at least the bottom entry of column `index`, and the
    /// bottom entry of column `index` otherwise.
    pub fn bottom_rule_holds(&self) -> bool {
        let bottom = |u: &SkewTableau, c: usize| u.columns()[c].entries.last().copied();
        let (left, right) = (bottom(&self.before, self.index), bottom(&self.before, self.index + 1));
        let expected = match (left, right) {
            (Some(l), Some(r)) if r >= l => Some(r),
            (Some(l), _) => Some(l),
            (None, r) => r,
        };
        bottom(&self.after, self.index + 1) == expected
    }
}

impl fmt::Display for LengthSwapStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lengths = |u: &SkewTableau| {
            u.lengths().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "swap {} pull-down={} slides={} lengths ({}) -> ({})",
            self.index + 1,
            self.pull_down,
            self.length_difference,
            lengths(&self.before),
            lengths(&self.after)
        )
    }
}

impl SkewTableau {
    fn set(&mut self, (column, row): Cell, value: u32) {
        let col = &mut self.columns[column];
        col.entries[row - col.offset] = value;
    }

    fn filled(&self, column: usize, row: usize) -> Option<u32> {
        self.get(column, row).filter(|&v| v != HOLE)
    }
}

/// Inside corners: removable cells of the inner shape with a filled cell
/// directly below or to the right.
pub fn inside_corners(u: &SkewTableau) -> Vec<Cell> {
    (0..u.num_columns())
        .filter_map(|c| {
            let offset = u.columns[c].offset;
            (offset > 0 && is_inside_corner(u, (c, offset - 1))).then(|| (c, offset - 1))
        })
        .collect()
}

fn is_inside_corner(u: &SkewTableau, (c, r): Cell) -> bool {
    let Some(column) = u.columns.get(c) else {
        return false;
    };
    if column.offset != r + 1 {
        return false;
    }
    let removable = u.columns.get(c + 1).is_none_or(|next| next.offset <= r);
    removable && (!column.entries.is_empty() || u.get(c + 1, r).is_some())
}

/// Slides the inside corner `corner` out through the tableau: at each step
/// the smaller of the neighbours below and to the right moves into the
/// hole, the one below winning ties.
pub fn forward_slide(u: &SkewTableau, corner: Cell) -> Result<(SkewTableau, SlideTrace), JdtError> {
    if !is_inside_corner(u, corner) {
        return Err(JdtError::NotAnInsideCorner(corner));
    }
    let mut out = u.clone();
    let c = corner.0;
    out.columns[c].offset -= 1;
    out.columns[c].entries.insert(0, HOLE);
    let mut hole = corner;
    let mut path = vec![hole];
    loop {
        let (hc, hr) = hole;
        let below = out.filled(hc, hr + 1).map(|v| (v, (hc, hr + 1)));
        let right = out.filled(hc + 1, hr).map(|v| (v, (hc + 1, hr)));
        let (value, source) = match (below, right) {
            (None, None) => break,
            (Some(b), None) => b,
            (None, Some(rt)) => rt,
            (Some(b), Some(rt)) => {
                if b.0 <= rt.0 {
                    b
                } else {
                    rt
                }
            }
        };
        out.set(hole, value);
        out.set(source, HOLE);
        hole = source;
        path.push(hole);
    }
    let column = &mut out.columns[hole.0];
    assert_eq!(column.entries.last(), Some(&HOLE), "slide ended inside column {}", hole.0);
    column.entries.pop();
    debug_assert_eq!(out.check(), Ok(()), "forward slide broke\n{out}");
    Ok((out, SlideTrace { direction: Direction::Forward, path }))
}

/// Slides the outside corner `corner` (the cell directly below a column)
/// back into the tableau: the larger of the neighbours above and to the
/// left moves into the hole, the one above winning ties.
pub fn reverse_slide(u: &SkewTableau, corner: Cell) -> Result<(SkewTableau, SlideTrace), JdtError> {
    let (c, r) = corner;
    let legal = c < u.num_columns()
        && u.columns[c].bottom() == r
        && (c == 0 || u.columns[c - 1].bottom() > r)
        && (!u.columns[c].entries.is_empty() || (c > 0 && u.get(c - 1, r).is_some()));
    if !legal {
        return Err(JdtError::NotAnOutsideCorner(corner));
    }
    let mut out = u.clone();
    out.columns[c].entries.push(HOLE);
    let mut hole = corner;
    let mut path = vec![hole];
    loop {
        let (hc, hr) = hole;
        let above = hr.checked_sub(1).and_then(|ar| out.filled(hc, ar)).map(|v| (v, (hc, hr - 1)));
        let left = hc.checked_sub(1).and_then(|lc| out.filled(lc, hr)).map(|v| (v, (hc - 1, hr)));
        let (value, source) = match (above, left) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(l)) => l,
            (Some(a), Some(l)) => {
                if a.0 >= l.0 {
                    a
                } else {
                    l
                }
            }
        };
        out.set(hole, value);
        out.set(source, HOLE);
        hole = source;
        path.push(hole);
    }
    let column = &mut out.columns[hole.0];
    assert_eq!(column.entries.first(), Some(&HOLE), "reverse slide ended inside column {}", hole.0);
    column.entries.remove(0);
    column.offset += 1;
    debug_assert_eq!(out.check(), Ok(()), "reverse slide broke\n{out}");
    Ok((out, SlideTrace { direction: Direction::Reverse, path }))
}

/// Moves each empty column as low as the diagram allows. Empty columns
/// carry no entries, so only their bookkeeping offset changes.
fn settle_empty_columns(u: &mut SkewTableau) {
    for c in (0..u.num_columns()).rev() {
        if u.columns[c].entries.is_empty() {
            u.columns[c].offset = u.columns.get(c + 1).map_or(0, SkewColumn::bottom);
        }
    }
}

/// Rectifies `u`, always sliding the leftmost available inside corner.
pub fn rectify(u: &SkewTableau) -> Tableau {
    rectify_by(u, |_| 0)
}

/// Rectifies `u`, letting `choose` pick which inside corner to slide next
/// from the candidates it is shown.
pub fn rectify_by(u: &SkewTableau, mut choose: impl FnMut(&[Cell]) -> usize) -> Tableau {
    let mut current = u.clone();
    loop {
        settle_empty_columns(&mut current);
        let corners = inside_corners(&current);
        if corners.is_empty() {
            break;
        }
        let pick = choose(&corners);
        current = forward_slide(&current, corners[pick]).expect("listed corner is valid").0;
    }
    current.to_tableau().expect("no inside corners left means straight shape")
}

/// Shifts every entry of the first `columns` columns down `rows` rows,
/// using only reverse slides started below each of those columns in turn.
pub fn pull_down_columns(u: &SkewTableau, columns: usize, rows: usize) -> Result<SkewTableau, JdtError> {
    if columns == 0 || columns > u.num_columns() {
        return Err(JdtError::IllegalShift {
            columns,
            available: u.num_columns(),
        });
    }
    let mut out = u.clone();
    for c in 0..columns {
        if out.columns[c].entries.is_empty() {
            out.columns[c].offset += rows;
            continue;
        }
        for _ in 0..rows {
            let corner = (c, out.columns[c].bottom());
            out = reverse_slide(&out, corner)?.0;
        }
    }
    let mut expected = u.clone();
    for column in &mut expected.columns[..columns] {
        column.offset += rows;
    }
    assert_eq!(out, expected, "pull-down disturbed entries of\n{u}");
    Ok(out)
}

/// Exchanges the lengths of columns `index` and `index + 1` (0-based). Both
/// columns must start in the top row and the left one must be the longer.
pub fn length_swap(u: &SkewTableau, index: usize) -> Result<LengthSwapStep, JdtError> {
    let bad = |reason| JdtError::BadIndex { index, reason };
    if index + 1 >= u.num_columns() {
        return Err(bad("no column to the right"));
    }
    let (left, right) = (&u.columns[index], &u.columns[index + 1]);
    if left.offset != 0 || right.offset != 0 {
        return Err(bad("swapped columns must start in the top row"));
    }
    let length_difference = left
        .entries
        .len()
        .checked_sub(right.entries.len())
        .ok_or(bad("right column is longer than the left one"))?;
    let pull_down = match index.checked_sub(1) {
        None => 0,
        Some(prev) => {
            let prev = &u.columns[prev];
            let top = prev.offset.max(left.offset);
            let bottom = prev.bottom().min(left.bottom());
            bottom.saturating_sub(top)
        }
    };
    let mut current = if pull_down > 0 {
        pull_down_columns(u, index, pull_down)?
    } else {
        u.clone()
    };
    let mut slides = Vec::with_capacity(length_difference);
    for _ in 0..length_difference {
        let corner = (index + 1, current.columns[index + 1].bottom());
        let (next, trace) = reverse_slide(&current, corner)?;
        current = next;
        slides.push(trace);
    }
    let mut expected = u.lengths();
    expected.swap(index, index + 1);
    assert_eq!(current.lengths(), expected, "length swap {index} did not exchange lengths");
    Ok(LengthSwapStep {
        index,
        length_difference,
        pull_down,
        before: u.clone(),
        after: current,
        slides,
    })
}

/// The right key column for column `column` of `t` (0-based), found by
/// swapping that column's length all the way to the right. Also returns
/// every swap performed.
pub fn right_key_column_traced(t: &Tableau, column: usize) -> (Vec<u32>, Vec<LengthSwapStep>) {
    assert!(column < t.num_columns(), "column {column} out of range");
    let mut current = SkewTableau::from_tableau(t);
    let mut steps = Vec::new();
    for index in column..t.num_columns() - 1 {
        let step = length_swap(&current, index).expect("swap indices stay in range");
        current = step.after.clone();
        steps.push(step);
    }
    let last = current.columns.last().expect("nonempty tableau");
    (last.entries.clone(), steps)
}

pub fn right_key_column(t: &Tableau, column: usize) -> Vec<u32> {
    right_key_column_traced(t, column).0
}

/// Right key of `t` assembled column by column from frank skew tableaux.
pub fn right_key(t: &Tableau) -> Tableau {
    let columns = (0..t.num_columns()).map(|i| right_key_column(t, i)).collect();
    Tableau::from_columns_unchecked(columns, t.bound())
}

/// Left key of `t` via complementation: `complement(right_key(complement(t)))`.
pub fn left_key(t: &Tableau) -> Tableau {
    right_key(&t.complement()).complement()
}

/// True when the nonzero column lengths of `u` rearrange the column
/// lengths of its rectification.
pub fn is_frank(u: &SkewTableau) -> bool {
    let mut lengths: Vec<usize> = u.lengths().into_iter().filter(|&l| l > 0).collect();
    lengths.sort_unstable();
    let mut target = rectify(u).shape().column_lengths().to_vec();
    target.sort_unstable();
    lengths == target
}

/// The tightest skew diagram with the given column lengths: built from the
/// right, each column starts as high as the diagram rules allow. Returns
/// `(offset, length)` per column.
pub fn compact_diagram(lengths: &[usize]) -> Vec<(usize, usize)> {
    let mut out = vec![(0, 0); lengths.len()];
    let (mut next_offset, mut next_bottom) = (0usize, 0usize);
    for (c, &len) in lengths.iter().enumerate().rev() {
        let offset = next_offset.max(next_bottom.saturating_sub(len));
        out[c] = (offset, len);
        next_offset = offset;
        next_bottom = offset + len;
    }
    out
}

/// Every semistandard filling of a skew diagram with entries at most
/// `bound`. Exponential; meant for tiny diagrams.
pub fn skew_fillings(diagram: &[(usize, usize)], bound: u32) -> Vec<SkewTableau> {
    fn fill(
        diagram: &[(usize, usize)],
        bound: u32,
        columns: &mut Vec<SkewColumn>,
        out: &mut Vec<SkewTableau>,
    ) {
        let c = columns.len() - 1;
        let (offset, len) = diagram[c];
        if columns[c].entries.len() == len {
            if c + 1 == diagram.len() {
                out.push(SkewTableau {
                    columns: columns.clone(),
                });
            } else {
                columns.push(SkewColumn {
                    offset: diagram[c + 1].0,
                    entries: Vec::new(),
                });
                fill(diagram, bound, columns, out);
                columns.pop();
            }
            return;
        }
        let row = offset + columns[c].entries.len();
        let above = columns[c].entries.last().map_or(1, |&v| v + 1);
        let left = c.checked_sub(1).and_then(|l| columns[l].get(row)).unwrap_or(1);
        for v in above.max(left)..=bound {
            columns[c].entries.push(v);
            fill(diagram, bound, columns, out);
            columns[c].entries.pop();
        }
    }

    if diagram.is_empty() {
        return vec![SkewTableau { columns: Vec::new() }];
    }
    let mut out = Vec::new();
    let mut columns = vec![SkewColumn {
        offset: diagram[0].0,
        entries: Vec::new(),
    }];
    fill(diagram, bound, &mut columns, &mut out);
    out
}
