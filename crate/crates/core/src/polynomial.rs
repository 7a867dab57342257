//! Sparse multivariate polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Sub};

/// Map from exponent vectors to nonzero coefficients. All exponent
/// vectors have the same length, the number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePolynomial {
    vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl SparsePolynomial {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponents: Vec<u32>, coefficient: i64) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coefficient);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Terms in increasing lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coefficient: i64) {
        assert_eq!(exponents.len(), self.vars, "exponent vector has the wrong length");
        if coefficient == 0 {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by the variable with index `var` (0-based).
    pub fn shift(&self, var: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in self.terms() {
            let mut e = e.clone();
            e[var] += 1;
            out.terms.insert(e, c);
        }
        out
    }

    /// Exchanges variables `a` and `b`.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.vars);
        for (e, c) in self.terms() {
            let mut e = e.clone();
            e.swap(a, b);
            out.terms.insert(e, c);
        }
        out
    }

    /// Exact quotient by `x_a - x_b` with `a < b`, by long division on the
    /// lexicographic leading term. Returns `None` when the division leaves a
    /// remainder.
    pub fn div_by_difference(&self, a: usize, b: usize) -> Option<Self> {
        assert!(a < b && b < self.vars);
        let mut remainder = self.clone();
        let mut quotient = Self::zero(self.vars);
        while let Some((lead, &c)) = remainder.terms.iter().next_back() {
            if lead[a] == 0 {
                return None;
            }
            let mut q = lead.clone();
            q[a] -= 1;
            let mut other = q.clone();
            other[b] += 1;
            remainder.add_term(lead.clone(), -c);
            remainder.add_term(other, c);
            quotient.add_term(q, c);
        }
        Some(quotient)
    }

    pub fn is_symmetric_in(&self, a: usize, b: usize) -> bool {
        self.swap_vars(a, b) == *self
    }

    /// Every coefficient of `self` is at most the matching one in `other`.
    pub fn dominated_by(&self, other: &Self) -> bool {
        self.terms().all(|(e, c)| c <= other.coefficient(e))
    }

    /// One line per term, `coefficient e_1 ... e_n`, exponent vectors in
    /// decreasing lexicographic order.
    pub fn to_lines(&self) -> String {
        let lines: Vec<String> = self
            .terms()
            .rev()
            .map(|(e, c)| {
                let mut fields = vec![c.to_string()];
                fields.extend(e.iter().map(u32::to_string));
                fields.join(" ")
            })
            .collect();
        lines.join("\n")
    }
}

impl AddAssign<&SparsePolynomial> for SparsePolynomial {
    fn add_assign(&mut self, rhs: &SparsePolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e.clone(), c);
        }
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(mut self, rhs: SparsePolynomial) -> SparsePolynomial {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        self += &rhs;
        self
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_lines())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, &[u32])]) -> SparsePolynomial {
        let mut p = SparsePolynomial::zero(terms[0].1.len());
        for (c, e) in terms {
            p.add_term(e.to_vec(), *c);
        }
        p
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = poly(&[(2, &[1, 0])]);
        p.add_term(vec![1, 0], -2);
        assert!(p.is_zero());
    }

    #[test]
    fn exact_division() {
        // x^2 - y^2 = (x - y)(x + y)
        let p = poly(&[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(p.div_by_difference(0, 1), Some(poly(&[(1, &[1, 0]), (1, &[0, 1])])));
        // x is not divisible by x - y
        assert_eq!(poly(&[(1, &[1, 0])]).div_by_difference(0, 1), None);
    }

    #[test]
    fn line_format() {
        let p = poly(&[(1, &[0, 1]), (1, &[1, 0])]);
        assert_eq!(p.to_lines(), "1 1 0\n1 0 1");
    }
}
