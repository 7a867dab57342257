//! Exhaustive cross-checks of the scanning method against jeu de taquin.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::enumerate::tableaux;
use crate::jdt;
use crate::scanning;
use crate::shape::Shape;
use crate::tableau::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// Scanning tableau equals the jeu de taquin right key.
    RightKey,
    /// Scanning left key equals the complement-based left key.
    LeftKey,
    RightKeyIsKey,
    LeftKeyIsKey,
    BelowRightKey,
    AboveLeftKey,
    KeyFixedByRightKey,
    KeyFixedByLeftKey,
    EqualLengthColumns,
    /// Every length swap keeps the tableau frank and its rectification.
    SwapFrank,
    /// Every length swap obeys the two-case bottom entry rule.
    SwapBottomRule,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Check::RightKey => "scanning = jdt right key",
            Check::LeftKey => "left scan = complement left key",
            Check::RightKeyIsKey => "right key is a key",
            Check::LeftKeyIsKey => "left key is a key",
            Check::BelowRightKey => "T <= right key",
            Check::AboveLeftKey => "left key <= T",
            Check::KeyFixedByRightKey => "right key of a key is itself",
            Check::KeyFixedByLeftKey => "left key of a key is itself",
            Check::EqualLengthColumns => "equal-length right key columns agree",
            Check::SwapFrank => "length swaps stay frank",
            Check::SwapBottomRule => "length swap bottom entry rule",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: Check,
    pub tableau: Tableau,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub max_boxes: usize,
    pub max_entry: u32,
    /// Also check frankness and the bottom entry rule after every length swap.
    pub swap_checks: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub shapes: usize,
    pub tableaux: usize,
    pub keys: usize,
    pub swaps: usize,
    pub failures: BTreeMap<Check, usize>,
    /// First counterexample per failed check.
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    pub fn total_failures(&self) -> usize {
        self.failures.values().sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures_of(&self, check: Check) -> usize {
        self.failures.get(&check).copied().unwrap_or(0)
    }

    fn record(&mut self, check: Check, t: &Tableau) {
        let count = self.failures.entry(check).or_insert(0);
        *count += 1;
        if *count == 1 {
            self.counterexamples.push(Counterexample {
                check,
                tableau: t.clone(),
            });
        }
    }

    fn merge(mut self, other: SweepReport) -> SweepReport {
        self.shapes += other.shapes;
        self.tableaux += other.tableaux;
        self.keys += other.keys;
        self.swaps += other.swaps;
        for c in other.counterexamples {
            if !self.failures.contains_key(&c.check) {
                self.counterexamples.push(c);
            }
        }
        for (check, n) in other.failures {
            *self.failures.entry(check).or_insert(0) += n;
        }
        self.counterexamples.sort_by_key(|c| c.check);
        self
    }
}

/// Runs every check on one tableau.
pub fn check_tableau(t: &Tableau, swap_checks: bool) -> SweepReport {
    let mut report = SweepReport {
        tableaux: 1,
        ..SweepReport::default()
    };
    let right = scanning::scanning_tableau(t);
    let left = scanning::left_key(t);

    let mut oracle_columns = Vec::with_capacity(t.num_columns());
    for i in 0..t.num_columns() {
        let (column, steps) = jdt::right_key_column_traced(t, i);
        oracle_columns.push(column);
        report.swaps += steps.len();
        if swap_checks {
            if !steps.iter().all(|s| jdt::is_frank(&s.after) && jdt::rectify(&s.after).columns() == t.columns()) {
                report.record(Check::SwapFrank, t);
            }
            if !steps.iter().all(jdt::LengthSwapStep::bottom_rule_holds) {
                report.record(Check::SwapBottomRule, t);
            }
        }
    }
    if right.columns() != oracle_columns.as_slice() {
        report.record(Check::RightKey, t);
    }
    if left != jdt::left_key(t) {
        report.record(Check::LeftKey, t);
    }
    if !right.is_key() {
        report.record(Check::RightKeyIsKey, t);
    }
    if !left.is_key() {
        report.record(Check::LeftKeyIsKey, t);
    }
    if !t.entrywise_leq(&right).unwrap_or(false) {
        report.record(Check::BelowRightKey, t);
    }
    if !left.entrywise_leq(t).unwrap_or(false) {
        report.record(Check::AboveLeftKey, t);
    }
    if t.is_key() {
        report.keys = 1;
        if right != *t {
            report.record(Check::KeyFixedByRightKey, t);
        }
        if left != *t {
            report.record(Check::KeyFixedByLeftKey, t);
        }
    }
    let lengths = t.shape();
    let lengths = lengths.column_lengths();
    let equal_ok = (1..t.num_columns())
        .filter(|&i| lengths[i] == lengths[i - 1])
        .all(|i| right.column(i) == right.column(i - 1));
    if !equal_ok {
        report.record(Check::EqualLengthColumns, t);
    }
    report
}

/// Checks every tableau of every shape with at most `max_boxes` boxes and
/// entries at most `max_entry`, spread over the current rayon pool.
pub fn sweep(options: SweepOptions) -> SweepReport {
    let shapes: Vec<Shape> = Shape::all_up_to(options.max_boxes)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    shapes
        .par_iter()
        .map(|shape| {
            let mut report = SweepReport {
                shapes: 1,
                ..SweepReport::default()
            };
            for t in tableaux(shape, options.max_entry) {
                report = report.merge(check_tableau(&t, options.swap_checks));
            }
            report
        })
        .reduce(SweepReport::default, SweepReport::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sweep_is_vacuous() {
        let report = sweep(SweepOptions {
            max_boxes: 0,
            max_entry: 3,
            swap_checks: true,
        });
        assert_eq!(report.tableaux, 0);
        assert!(report.passed());
    }

    #[test]
    fn small_sweep_passes() {
        let report = sweep(SweepOptions {
            max_boxes: 5,
            max_entry: 4,
            swap_checks: true,
        });
        assert!(report.passed(), "{:?}", report.counterexamples);
        assert!(report.tableaux > 0 && report.keys > 0 && report.swaps > 0);
    }
}
