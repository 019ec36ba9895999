//! Dense integer matrices with exact rank computation.

use num_traits::Zero;
use serde_json::Value;

use crate::lincomb::{int_to_json, Int};

/// A dense matrix of exact integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            entries: vec![Int::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Int) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.entries[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn identity(n: usize) -> IntMatrix {
        IntMatrix::from_fn(n, n, |i, j| if i == j { Int::from(1) } else { Int::zero() })
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        IntMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * rhs.get(k, j)).sum()
        })
    }

    /// Exact rank over the rationals, by one-step fraction-free (Bareiss)
    /// elimination with row swaps and column skipping. All divisions are
    /// exact, so no fractions ever appear.
    pub fn rank(&self) -> usize {
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<Int>, i: usize, j: usize| a[i * cols + j].clone();
        let mut pivot_row = 0;
        let mut prev = Int::from(1);
        for col in 0..cols {
            if pivot_row == rows {
                break;
            }
            let Some(found) = (pivot_row..rows).find(|&i| !a[i * cols + col].is_zero()) else {
                continue;
            };
            if found != pivot_row {
                for j in 0..cols {
                    a.swap(found * cols + j, pivot_row * cols + j);
                }
            }
            let pivot = at(&a, pivot_row, col);
            for i in pivot_row + 1..rows {
                let lead = at(&a, i, col);
                for j in col + 1..cols {
                    let v = (&pivot * at(&a, i, j) - &lead * at(&a, pivot_row, j)) / &prev;
                    a[i * cols + j] = v;
                }
                a[i * cols + col] = Int::zero();
            }
            prev = pivot;
            pivot_row += 1;
        }
        pivot_row
    }

    /// Dense JSON array of arrays.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        (0..self.cols)
                            .map(|j| int_to_json(self.get(i, j)))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}
