//! Counting sequences and generating-series identities, over exact
//! integers.
//!
//! Tree counts come from the recursion forced by the cubic functional
//! equation `T³ − 2T² + T = x`; forest counts from `F = 1/(1 − T)`. The
//! dual counts are `n` trees and `n(n+1)/2` forests per degree. The
//! series of the two operads are compositional inverses up to signs.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::Int;

/// A truncated integer power series; `coeffs[i]` is the coefficient of
/// `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<Int>,
}

impl IntSeries {
    /// The zero series truncated at order `n`.
    pub fn zero(order: usize) -> IntSeries {
        IntSeries {
            coeffs: vec![Int::zero(); order + 1],
        }
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> IntSeries {
        let mut s = IntSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = Int::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<Int>) -> IntSeries {
        IntSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    pub fn add(&self, rhs: &IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        IntSeries::from_coeffs((0..=order).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        IntSeries::from_coeffs((0..=order).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &IntSeries) -> IntSeries {
        let order = self.order().min(rhs.order());
        let mut out = IntSeries::zero(order);
        for i in 0..=order {
            for j in 0..=order - i {
                out.coeffs[i + j] += self.coeff(i) * rhs.coeff(j);
            }
        }
        out
    }

    /// Composition `self ∘ g`; `g` must have zero constant term.
    pub fn compose(&self, g: &IntSeries) -> IntSeries {
        assert!(
            g.coeff(0).is_zero(),
            "composition needs a zero constant term"
        );
        let order = self.order().min(g.order());
        let mut out = IntSeries::zero(order);
        out.coeffs[0] = self.coeff(self.order());
        // Horner from the top coefficient down
        for i in (0..self.order()).rev() {
            out = out.mul(g);
            out.coeffs[0] += self.coeff(i);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Order bound for the counting recursions and series checks.
pub const MAX_SERIES_ORDER: usize = 30;

fn check_order(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::bound(format!("series order {n} exceeds {max}")))
    } else {
        Ok(())
    }
}

/// Tree counts `t₁ … t_N` from the recursion
/// `t_n = 2 Σ_{i+j=n} t_i t_j − Σ_{i+j+k=n} t_i t_j t_k`.
pub fn tree_counts(n: usize) -> Result<Vec<Int>> {
    check_order(n, MAX_SERIES_ORDER)?;
    let mut t = vec![Int::zero(); n + 1];
    if n >= 1 {
        t[1] = Int::one();
    }
    for m in 2..=n {
        let mut acc = Int::zero();
        for i in 1..m {
            acc += Int::from(2) * &t[i] * &t[m - i];
        }
        for i in 1..m {
            for j in 1..m - i {
                acc -= &t[i] * &t[j] * &t[m - i - j];
            }
        }
        t[m] = acc;
    }
    Ok(t[1..].to_vec())
}

/// Forest counts `f₁ … f_N`, the coefficients of `1/(1 − T) − 1`.
pub fn forest_counts(n: usize) -> Result<Vec<Int>> {
    check_order(n, MAX_SERIES_ORDER)?;
    let t = tree_series(n)?;
    let mut f = vec![Int::zero(); n + 1];
    for m in 1..=n {
        let mut acc = t.coeff(m);
        for i in 1..m {
            acc += t.coeff(i) * &f[m - i];
        }
        f[m] = acc;
    }
    Ok(f[1..].to_vec())
}

/// Dual tree counts: `t!₁ = 1` and `t!_n = n` for `n ≥ 2`.
pub fn dual_tree_counts(n: usize) -> Result<Vec<Int>> {
    check_order(n, 1000)?;
    Ok((1..=n).map(Int::from).collect())
}

/// Dual forest counts `f!_n = n(n+1)/2`.
pub fn dual_forest_counts(n: usize) -> Result<Vec<Int>> {
    check_order(n, 1000)?;
    Ok((1..=n).map(|m| Int::from(m * (m + 1) / 2)).collect())
}

/// The series `T(x) = Σ t_n x^n` truncated at order `n`.
pub fn tree_series(n: usize) -> Result<IntSeries> {
    let t = tree_counts(n)?;
    let mut coeffs = vec![Int::zero()];
    coeffs.extend(t);
    Ok(IntSeries::from_coeffs(coeffs))
}

/// The series `F(x) = Σ f_n x^n` truncated at order `n`.
pub fn forest_series(n: usize) -> Result<IntSeries> {
    let f = forest_counts(n)?;
    let mut coeffs = vec![Int::zero()];
    coeffs.extend(f);
    Ok(IntSeries::from_coeffs(coeffs))
}

/// Whether `F_BG(−F_BG!(−x)) = x` modulo `x^{N+1}`.
pub fn compose_identity_holds(n: usize) -> Result<bool> {
    check_order(n, MAX_SERIES_ORDER)?;
    let f = forest_series(n)?;
    // −F_BG!(−x) has coefficients (−1)^{m+1} m(m+1)/2
    let twisted = IntSeries::from_coeffs(
        (0..=n)
            .map(|m| {
                if m == 0 {
                    Int::zero()
                } else {
                    let v = Int::from(m * (m + 1) / 2);
                    if m % 2 == 1 {
                        v
                    } else {
                        -v
                    }
                }
            })
            .collect(),
    );
    Ok(f.compose(&twisted) == IntSeries::x(n))
}

/// Whether `T³ − 2T² + T = x` modulo `x^{N+1}`.
pub fn cubic_equation_holds(n: usize) -> Result<bool> {
    check_order(n, MAX_SERIES_ORDER)?;
    let t = tree_series(n)?;
    let t2 = t.mul(&t);
    let t3 = t2.mul(&t);
    let lhs = t3.sub(&t2).sub(&t2).add(&t);
    Ok(lhs == IntSeries::x(n))
}

/// Both series identities at once.
pub fn inverse_identity_check(n: usize) -> Result<bool> {
    Ok(compose_identity_holds(n)? && cubic_equation_holds(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(vals: &[i64]) -> Vec<Int> {
        vals.iter().map(|&v| Int::from(v)).collect()
    }

    #[test]
    fn tree_counts_table() {
        let t = tree_counts(10).unwrap();
        assert_eq!(
            t,
            ints(&[1, 2, 7, 30, 143, 728, 3876, 21318, 120175, 690690])
        );
        assert!(tree_counts(31).is_err());
    }

    #[test]
    fn forest_counts_table() {
        let f = forest_counts(10).unwrap();
        assert_eq!(
            f,
            ints(&[1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715])
        );
    }

    #[test]
    fn dual_counts() {
        assert_eq!(dual_tree_counts(5).unwrap(), ints(&[1, 2, 3, 4, 5]));
        assert_eq!(dual_forest_counts(5).unwrap(), ints(&[1, 3, 6, 10, 15]));
        assert_eq!(dual_forest_counts(10).unwrap()[9], Int::from(55));
    }

    #[test]
    fn identities() {
        assert!(compose_identity_holds(1).unwrap());
        assert!(compose_identity_holds(10).unwrap());
        assert!(cubic_equation_holds(10).unwrap());
        assert!(inverse_identity_check(10).unwrap());
        assert!(inverse_identity_check(30).unwrap());
    }

    #[test]
    fn composition_is_truncated_consistently() {
        // (x + x²) ∘ (x + x³) = x + x³ + x² + 2x⁴ + … truncated at 4
        let f = IntSeries::from_coeffs(ints(&[0, 1, 1, 0, 0]));
        let g = IntSeries::from_coeffs(ints(&[0, 1, 0, 1, 0]));
        let h = f.compose(&g);
        assert_eq!(h.coeff(1), Int::one());
        assert_eq!(h.coeff(2), Int::one());
        assert_eq!(h.coeff(3), Int::one());
        assert_eq!(h.coeff(4), Int::from(2));
    }
}
