//! Integer linear combinations of forests and of ordered forest pairs.
//!
//! Maps are normalized: zero coefficients are never stored, so equality
//! is term-wise. Coefficients are exact arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::text::{forest_to_json, render};

/// Exact scalar.
pub type Int = num_bigint::BigInt;

/// JSON encoding of a scalar: a number when it fits in `i64`, otherwise a
/// decimal string.
pub fn int_to_json(v: &Int) -> Value {
    match i64::try_from(v) {
        Ok(n) => Value::from(n),
        Err(_) => Value::from(v.to_string()),
    }
}

/// A finite integer combination of forests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinComb {
    terms: BTreeMap<Forest, Int>,
}

impl LinComb {
    pub fn zero() -> LinComb {
        LinComb::default()
    }

    /// The unit `1` (the empty forest with coefficient 1).
    pub fn unit() -> LinComb {
        LinComb::basis(Forest::unit())
    }

    pub fn basis(f: Forest) -> LinComb {
        let mut c = LinComb::zero();
        c.add_term(f, Int::one());
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Forest, Int)>) -> LinComb {
        let mut c = LinComb::zero();
        for (f, k) in terms {
            c.add_term(f, k);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: Forest, k: Int) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
        }
    }

    pub fn coefficient(&self, f: &Forest) -> Int {
        self.terms.get(f).cloned().unwrap_or_else(Int::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Forest, &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The unique term of a singleton combination.
    pub fn as_single(&self) -> Option<(&Forest, &Int)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }

    /// Fails unless every term lies in the augmentation ideal.
    pub fn require_augmentation_ideal(&self, what: &str) -> Result<()> {
        if self.terms.keys().any(Forest::is_unit) {
            Err(Error::domain(format!(
                "{what} is only defined on the augmentation ideal (no unit term)"
            )))
        } else {
            Ok(())
        }
    }

    /// Linear extension of a basis map.
    pub fn map_basis(&self, f: impl Fn(&Forest) -> LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (b, k) in &self.terms {
            for (g, c) in f(b).terms {
                out.add_term(g, c * k);
            }
        }
        out
    }

    pub fn scaled(mut self, k: &Int) -> LinComb {
        if k.is_zero() {
            return LinComb::zero();
        }
        for v in self.terms.values_mut() {
            *v = &*v * k;
        }
        self
    }

    /// Terms sorted by rendered text (the canonical display order).
    pub fn sorted_terms(&self) -> Vec<(&Forest, &Int)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_cached_key(|(f, _)| render(f));
        terms
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(f, k)| Value::Array(vec![forest_to_json(f), int_to_json(k)]))
                .collect(),
        )
    }
}

impl fmt::Display for LinComb {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(w, "0");
        }
        for (i, (f, k)) in self.sorted_terms().into_iter().enumerate() {
            write_signed_term(w, i == 0, k, &render(f))?;
        }
        Ok(())
    }
}

fn write_signed_term(w: &mut fmt::Formatter<'_>, first: bool, k: &Int, body: &str) -> fmt::Result {
    let neg = k.sign() == num_bigint::Sign::Minus;
    let mag = k.magnitude();
    if first {
        if neg {
            write!(w, "-")?;
        }
    } else if neg {
        write!(w, " - ")?;
    } else {
        write!(w, " + ")?;
    }
    if mag.is_one() {
        write!(w, "{body}")
    } else {
        write!(w, "{mag} {body}")
    }
}

impl Add for LinComb {
    type Output = LinComb;
    fn add(mut self, rhs: LinComb) -> LinComb {
        for (f, k) in rhs.terms {
            self.add_term(f, k);
        }
        self
    }
}

impl Sub for LinComb {
    type Output = LinComb;
    fn sub(self, rhs: LinComb) -> LinComb {
        self + (-rhs)
    }
}

impl Neg for LinComb {
    type Output = LinComb;
    fn neg(mut self) -> LinComb {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

impl Mul<i64> for LinComb {
    type Output = LinComb;
    fn mul(self, k: i64) -> LinComb {
        self.scaled(&Int::from(k))
    }
}

/// A finite integer combination of ordered forest pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tensor2 {
    terms: BTreeMap<(Forest, Forest), Int>,
}

impl Tensor2 {
    pub fn zero() -> Tensor2 {
        Tensor2::default()
    }

    pub fn basis(a: Forest, b: Forest) -> Tensor2 {
        let mut t = Tensor2::zero();
        t.add_term(a, b, Int::one());
        t
    }

    /// `x ⊗ y`, bilinear in both arguments.
    pub fn of(x: &LinComb, y: &LinComb) -> Tensor2 {
        let mut t = Tensor2::zero();
        for (a, j) in x.iter() {
            for (b, k) in y.iter() {
                t.add_term(a.clone(), b.clone(), j * k);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Forest, b: Forest, k: Int) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
        }
    }

    pub fn coefficient(&self, a: &Forest, b: &Forest) -> Int {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Forest, Forest), &Int)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Componentwise concatenation product.
    pub fn mul(&self, rhs: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), j) in &self.terms {
            for ((c, d), k) in &rhs.terms {
                out.add_term(
                    a.clone().concat(c.clone()),
                    b.clone().concat(d.clone()),
                    j * k,
                );
            }
        }
        out
    }

    pub fn flip(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), k) in &self.terms {
            out.add_term(b.clone(), a.clone(), k.clone());
        }
        out
    }

    /// Bilinear extension of a map on basis pairs.
    pub fn map_pairs(&self, f: impl Fn(&Forest, &Forest) -> Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), k) in &self.terms {
            for ((c, d), j) in f(a, b).terms {
                out.add_term(c, d, j * k);
            }
        }
        out
    }

    pub fn sorted_terms(&self) -> Vec<(&(Forest, Forest), &Int)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_cached_key(|((a, b), _)| (render(a), render(b)));
        terms
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|((a, b), k)| {
                    Value::Array(vec![forest_to_json(a), forest_to_json(b), int_to_json(k)])
                })
                .collect(),
        )
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(w, "0");
        }
        for (i, ((a, b), k)) in self.sorted_terms().into_iter().enumerate() {
            let body = format!("({}) (x) ({})", render(a), render(b));
            write_signed_term(w, i == 0, k, &body)?;
        }
        Ok(())
    }
}

impl Add for Tensor2 {
    type Output = Tensor2;
    fn add(mut self, rhs: Tensor2) -> Tensor2 {
        for ((a, b), k) in rhs.terms {
            self.add_term(a, b, k);
        }
        self
    }
}

impl Sub for Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: Tensor2) -> Tensor2 {
        self + (-rhs)
    }
}

impl Neg for Tensor2 {
    type Output = Tensor2;
    fn neg(mut self) -> Tensor2 {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

/// An integer combination of pairs in the extended tensor square
/// `A ⊗̄ A = (A ⊗ 𝕂) ⊕ (A ⊗ A) ⊕ (𝕂 ⊗ A)`; a unit slot is represented by
/// the empty forest, and the pair `(1, 1)` is banned.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BarTensor {
    terms: BTreeMap<(Forest, Forest), Int>,
}

impl BarTensor {
    pub fn zero() -> BarTensor {
        BarTensor::default()
    }

    pub fn basis(a: Forest, b: Forest) -> Result<BarTensor> {
        let mut t = BarTensor::zero();
        t.add_term(a, b, Int::one())?;
        Ok(t)
    }

    pub fn add_term(&mut self, a: Forest, b: Forest, k: Int) -> Result<()> {
        if a.is_unit() && b.is_unit() {
            return Err(Error::domain(
                "the component 1 ⊗ 1 does not exist in the extended tensor product",
            ));
        }
        if k.is_zero() {
            return Ok(());
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
        }
        Ok(())
    }

    /// Embeds an ordinary tensor (no unit slots allowed in `A ⊗ A` terms
    /// is automatic; `(1,1)` terms are rejected).
    pub fn from_tensor2(t: &Tensor2) -> Result<BarTensor> {
        let mut out = BarTensor::zero();
        for ((a, b), k) in t.iter() {
            out.add_term(a.clone(), b.clone(), k.clone())?;
        }
        Ok(out)
    }

    /// Forgets the ⊗̄ refinement.
    pub fn to_tensor2(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a, b), k) in &self.terms {
            out.add_term(a.clone(), b.clone(), k.clone());
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Forest, Forest), &Int)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for BarTensor {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "{}", self.to_tensor2())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    #[test]
    fn normalization() {
        let f = parse("o").unwrap();
        let mut c = LinComb::basis(f.clone());
        c.add_term(f.clone(), Int::from(-1));
        assert!(c.is_zero());
        assert_eq!(c, LinComb::zero());
    }

    #[test]
    fn display() {
        let o = LinComb::basis(parse("o").unwrap());
        let oo = LinComb::basis(parse("o o").unwrap());
        assert_eq!((o.clone() * 2 - oo).to_string(), "2 o - o o");
        assert_eq!((o.clone() - o).to_string(), "0");
    }

    #[test]
    fn tensor_product_is_componentwise() {
        let o = parse("o").unwrap();
        let t = Tensor2::basis(o.clone(), Forest::unit());
        let u = Tensor2::basis(Forest::unit(), o.clone());
        let prod = t.mul(&u);
        assert_eq!(prod, Tensor2::basis(o.clone(), o.clone()));
    }

    #[test]
    fn bar_tensor_bans_unit_unit() {
        assert!(BarTensor::basis(Forest::unit(), Forest::unit()).is_err());
        assert!(BarTensor::basis(parse("o").unwrap(), Forest::unit()).is_ok());
    }
}
