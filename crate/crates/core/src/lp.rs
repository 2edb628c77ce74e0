//! Dense two-phase simplex over any [`Scalar`].
//!
//! Problems are given in equality form: maximize `c·x` subject to `A x = b`,
//! `x ≥ 0`. Rows with a negative right-hand side are negated on entry. Bland's
//! rule picks entering and leaving variables, so exact instantiations always
//! terminate.

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { value: T, x: Vec<T> },
    Infeasible,
    Unbounded,
}

impl<T> LpOutcome<T> {
    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    /// Reduced costs `z_j - c_j`; optimal once none is negative.
    reduced: Vec<T>,
    value: T,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            *x = x.clone() / p.clone();
        }
        self.rhs[r] = self.rhs[r].clone() / p;
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let f = self.rows[i][col].clone();
            if f.near_zero() {
                continue;
            }
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * y.clone();
            }
            self.rhs[i] = self.rhs[i].clone() - f * pivot_rhs.clone();
        }
        let f = self.reduced[col].clone();
        if !f.near_zero() {
            for (x, y) in self.reduced.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * y.clone();
            }
            self.value = self.value.clone() - f * pivot_rhs;
        }
        self.basis[r] = col;
    }

    /// Recomputes reduced costs for cost vector `c`.
    fn price(&mut self, c: &[T]) {
        let cols = self.rows.first().map_or(c.len(), Vec::len);
        let mut reduced: Vec<T> = (0..cols).map(|j| T::zero() - c[j].clone()).collect();
        let mut value = T::zero();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = c[self.basis[i]].clone();
            if cb.near_zero() {
                continue;
            }
            for (d, a) in reduced.iter_mut().zip(row) {
                *d = d.clone() + cb.clone() * a.clone();
            }
            value = value + cb * self.rhs[i].clone();
        }
        self.reduced = reduced;
        self.value = value;
    }

    /// Runs simplex iterations over columns `0..eligible`. False if unbounded.
    fn optimize(&mut self, eligible: usize) -> bool {
        loop {
            let Some(col) = (0..eligible).find(|&j| self.reduced[j].definitely_negative()) else {
                return true;
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.definitely_positive() {
                    continue;
                }
                let ratio = self.rhs[i].clone() / a.clone();
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        if ratio.approx_eq(br) {
                            self.basis[i] < self.basis[*bi]
                        } else {
                            ratio < *br
                        }
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

/// Maximizes `c·x` subject to `a x = b`, `x ≥ 0`.
///
/// Panics if the row lengths of `a` disagree with `c`.
pub fn maximize<T: Scalar>(a: &[Vec<T>], b: &[T], c: &[T]) -> LpOutcome<T> {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m, "one right-hand side per row");
    assert!(a.iter().all(|r| r.len() == n), "rows must have one entry per variable");

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.definitely_negative();
        let mut r: Vec<T> = row.iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
        r.extend((0..m).map(|j| if j == i { T::one() } else { T::zero() }));
        rows.push(r);
        rhs.push(if flip { -bi.clone() } else { bi.clone() });
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (n..n + m).collect(),
        reduced: Vec::new(),
        value: T::zero(),
    };

    // Phase one: drive the artificial variables to zero.
    let phase_one: Vec<T> = (0..n + m).map(|j| if j < n { T::zero() } else { -T::one() }).collect();
    t.price(&phase_one);
    t.optimize(n + m);
    if t.value.definitely_negative() {
        return LpOutcome::Infeasible;
    }
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].near_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    // redundant constraint
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in t.rows.iter_mut() {
        row.truncate(n);
    }

    t.price(c);
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![T::zero(); n];
    for (i, &bv) in t.basis.iter().enumerate() {
        x[bv] = t.rhs[i].clone();
    }
    LpOutcome::Optimal { value: t.value, x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rows(a: &[&[i64]]) -> Vec<Vec<Rational>> {
        a.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
    }

    #[test]
    fn textbook_max() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 (with slacks)
        let a = rows(&[&[1, 0, 1, 0, 0], &[0, 2, 0, 1, 0], &[3, 2, 0, 0, 1]]);
        let b = vec![q(4, 1), q(12, 1), q(18, 1)];
        let c = vec![q(3, 1), q(5, 1), q(0, 1), q(0, 1), q(0, 1)];
        match maximize(&a, &b, &c) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, q(36, 1));
                assert_eq!(x[0], q(2, 1));
                assert_eq!(x[1], q(6, 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible() {
        // x + y = 1, x + y = 2
        let a = rows(&[&[1, 1], &[1, 1]]);
        let b = vec![q(1, 1), q(2, 1)];
        assert_eq!(maximize(&a, &b, &[q(0, 1), q(0, 1)]), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unbounded() {
        // x - y = 1, maximize y
        let a = rows(&[&[1, -1]]);
        assert_eq!(maximize(&a, &[q(1, 1)], &[q(0, 1), q(1, 1)]), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows_and_negative_rhs() {
        // -x - y = -2 twice, maximize x
        let a = rows(&[&[-1, -1], &[-1, -1]]);
        let b = vec![q(-2, 1), q(-2, 1)];
        match maximize(&a, &b, &[q(1, 1), q(0, 1)]) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(2, 1)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn float_instantiation_agrees() {
        let a = vec![vec![1.0, 0.0, 1.0, 0.0, 0.0], vec![0.0, 2.0, 0.0, 1.0, 0.0], vec![3.0, 2.0, 0.0, 0.0, 1.0]];
        match maximize(&a, &[4.0, 12.0, 18.0], &[3.0, 5.0, 0.0, 0.0, 0.0]) {
            LpOutcome::Optimal { value, .. } => assert!((value - 36.0f64).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn no_rows() {
        match maximize::<Rational>(&[], &[], &[q(-1, 1)]) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, q(0, 1));
                assert_eq!(x, vec![q(0, 1)]);
            }
            other => panic!("{other:?}"),
        }
    }
}
