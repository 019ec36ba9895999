//! The graded connected Hopf algebra on decorated planar forests.
//!
//! The product is concatenation, the coproduct sums over admissible cuts
//! `Δ(F) = Σ Lea ⊗ Roo`, and the antipode is obtained from the
//! connected-graded recursion. The bilinear pairing `⟨-,-⟩` is computed by
//! the three-rule recursion: against the counit for the unit, against `Δ`
//! for products, and against `Γ` for trees.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{enumerate_forests, Forest};
use crate::linalg::IntMatrix;
use crate::lincomb::{Int, LinComb, Tensor2};

/// Bilinear extension of forest concatenation.
pub fn concat(x: &LinComb, y: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (f, j) in x.iter() {
        for (g, k) in y.iter() {
            out.add_term(f.clone().concat(g.clone()), j * k);
        }
    }
    out
}

/// Admissible-cut coproduct of a basis forest.
pub fn coproduct_forest(f: &Forest) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (_, lea, roo) in f.admissible_cuts() {
        out.add_term(lea, roo, Int::one());
    }
    out
}

/// Admissible-cut coproduct, extended linearly.
pub fn coproduct(x: &LinComb) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (f, k) in x.iter() {
        for ((a, b), c) in coproduct_forest(f).iter() {
            out.add_term(a.clone(), b.clone(), c * k);
        }
    }
    out
}

/// Coefficient of the empty forest.
pub fn counit(x: &LinComb) -> Int {
    x.coefficient(&Forest::unit())
}

/// `Δ̃(x) = Δ(x) − x ⊗ 1 − 1 ⊗ x`, defined on the augmentation ideal.
pub fn reduced_coproduct(x: &LinComb) -> Result<Tensor2> {
    if !counit(x).is_zero() {
        return Err(Error::domain("reduced coproduct requires counit zero"));
    }
    let mut out = coproduct(x);
    for (f, k) in x.iter() {
        out.add_term(f.clone(), Forest::unit(), -k);
        out.add_term(Forest::unit(), f.clone(), -k);
    }
    Ok(out)
}

/// Antipode, from the recursion `S(F) = −F − Σ S(F⁽¹⁾) F⁽²⁾` over the
/// reduced coproduct.
pub fn antipode(x: &LinComb) -> LinComb {
    let mut cache: HashMap<Forest, LinComb> = HashMap::new();
    let mut out = LinComb::zero();
    for (f, k) in x.iter() {
        for (g, c) in antipode_forest(f, &mut cache).iter() {
            out.add_term(g.clone(), c * k);
        }
    }
    out
}

fn antipode_forest(f: &Forest, cache: &mut HashMap<Forest, LinComb>) -> LinComb {
    if f.is_unit() {
        return LinComb::unit();
    }
    if let Some(hit) = cache.get(f) {
        return hit.clone();
    }
    let mut out = -LinComb::basis(f.clone());
    for (_, lea, roo) in f.admissible_cuts() {
        if lea.is_unit() || roo.is_unit() {
            continue;
        }
        let s_lea = antipode_forest(&lea, cache);
        out = out - concat(&s_lea, &LinComb::basis(roo));
    }
    cache.insert(f.clone(), out.clone());
    out
}

/// `γ(B(F ⊗ G)) = (−1)^{|G|} F ⊗ G`; defined on single trees only.
pub fn gamma(x: &LinComb) -> Result<Tensor2> {
    let mut out = Tensor2::zero();
    for (f, k) in x.iter() {
        let Some(t) = f.as_tree() else {
            return Err(Error::domain("gamma is defined on single trees"));
        };
        let (a, b) = t.b_minus();
        let sign = if b.degree() % 2 == 0 {
            k.clone()
        } else {
            -k.clone()
        };
        out.add_term(a, b, sign);
    }
    Ok(out)
}

/// `Γ(T₁ ⋯ T_n) = Δ(T₁) ⋯ Δ(T_{n−1}) γ(T_n)`, and `Γ(1) = 0`.
pub fn big_gamma(x: &LinComb) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (f, k) in x.iter() {
        for ((a, b), c) in big_gamma_forest(f).iter() {
            out.add_term(a.clone(), b.clone(), c * k);
        }
    }
    out
}

fn big_gamma_forest(f: &Forest) -> Tensor2 {
    let trees = f.trees();
    let Some((last, init)) = trees.split_last() else {
        return Tensor2::zero();
    };
    let last = LinComb::basis(Forest::tree(last.clone()));
    let mut acc = gamma(&last).expect("single tree");
    for t in init.iter().rev() {
        acc = coproduct_forest(&Forest::tree(t.clone())).mul(&acc);
    }
    acc
}

/// The pairing recursion with its memo cache. One instance per
/// computation; values are immutable so instances may be used from any
/// thread that owns them.
#[derive(Default)]
pub struct Pairing {
    cache: HashMap<(Forest, Forest), Int>,
}

impl Pairing {
    pub fn new() -> Pairing {
        Pairing::default()
    }

    /// `⟨F, G⟩` on basis forests.
    pub fn forests(&mut self, f: &Forest, g: &Forest) -> Int {
        if f.is_unit() {
            return if g.is_unit() { Int::one() } else { Int::zero() };
        }
        if g.is_unit() {
            return Int::zero();
        }
        let key = (f.clone(), g.clone());
        if let Some(hit) = self.cache.get(&key) {
            return hit.clone();
        }
        let trees = f.trees();
        let value = if trees.len() >= 2 {
            // ⟨xy, z⟩ = Σ ⟨x, z⁽¹⁾⟩⟨y, z⁽²⁾⟩ against the coproduct
            let head = Forest::tree(trees[0].clone());
            let tail = Forest::new(trees[1..].to_vec());
            let mut acc = Int::zero();
            for ((a, b), k) in coproduct_forest(g).iter() {
                let left = self.forests(&head, a);
                if left.is_zero() {
                    continue;
                }
                acc += left * self.forests(&tail, b) * k;
            }
            acc
        } else {
            // ⟨B(x ⊗ y), z⟩ = Σ ⟨x, z₍₁₎⟩⟨y, z₍₂₎⟩ against Γ
            let (x, y) = trees[0].b_minus();
            let mut acc = Int::zero();
            for ((a, b), k) in big_gamma_forest(g).iter() {
                let left = self.forests(&x, a);
                if left.is_zero() {
                    continue;
                }
                acc += left * self.forests(&y, b) * k;
            }
            acc
        };
        self.cache.insert(key, value.clone());
        value
    }

    /// Bilinear extension.
    pub fn lincombs(&mut self, x: &LinComb, y: &LinComb) -> Int {
        let mut acc = Int::zero();
        for (f, j) in x.iter() {
            for (g, k) in y.iter() {
                acc += self.forests(f, g) * j * k;
            }
        }
        acc
    }
}

/// `⟨F, G⟩` with a fresh cache.
pub fn pairing(f: &Forest, g: &Forest) -> Int {
    Pairing::new().forests(f, g)
}

/// Degree bound accepted by [`gram_matrix`].
pub const MAX_GRAM_DEGREE: usize = 5;

/// Pairing values over the degree-`n` basis in enumeration order.
pub fn gram_matrix(n: usize) -> Result<IntMatrix> {
    if n == 0 || n > MAX_GRAM_DEGREE {
        return Err(Error::bound(format!(
            "gram matrix degree must be between 1 and {MAX_GRAM_DEGREE}"
        )));
    }
    let basis = enumerate_forests(n, false)?;
    let mut pairing = Pairing::new();
    Ok(IntMatrix::from_fn(basis.len(), basis.len(), |i, j| {
        pairing.forests(&basis[i], &basis[j])
    }))
}

/// Deconcatenation coproduct `Δ_Ass(F) = Σ_{F₁F₂ = F} F₁ ⊗ F₂`.
pub fn coproduct_ass(x: &LinComb) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (f, k) in x.iter() {
        let trees = f.trees();
        for i in 0..=trees.len() {
            out.add_term(
                Forest::new(trees[..i].to_vec()),
                Forest::new(trees[i..].to_vec()),
                k.clone(),
            );
        }
    }
    out
}

/// Reduced deconcatenation: only the proper splittings.
pub fn reduced_coproduct_ass(x: &LinComb) -> Result<Tensor2> {
    if !counit(x).is_zero() {
        return Err(Error::domain(
            "reduced deconcatenation requires counit zero",
        ));
    }
    let mut out = coproduct_ass(x);
    for (f, k) in x.iter() {
        out.add_term(f.clone(), Forest::unit(), -k);
        out.add_term(Forest::unit(), f.clone(), -k);
    }
    Ok(out)
}

/// Kernel dimension of the reduced deconcatenation on the degree-`n`
/// component, paired with the number of degree-`n` trees it must equal.
pub fn primitive_rank_check(n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::domain("degree must be positive"));
    }
    let basis = enumerate_forests(n, false)?;
    let tree_count = basis.iter().filter(|f| f.length() == 1).count();
    // columns: basis forests; rows: the pairs appearing in any image
    let images: Vec<Tensor2> = basis
        .iter()
        .map(|f| reduced_coproduct_ass(&LinComb::basis(f.clone())).expect("basis has counit 0"))
        .collect();
    let mut row_index: Vec<(Forest, Forest)> = Vec::new();
    let mut lookup: HashMap<(Forest, Forest), usize> = HashMap::new();
    for img in &images {
        for (pair, _) in img.iter() {
            if !lookup.contains_key(pair) {
                lookup.insert(pair.clone(), row_index.len());
                row_index.push(pair.clone());
            }
        }
    }
    let mut m = IntMatrix::zeros(row_index.len(), basis.len());
    for (j, img) in images.iter().enumerate() {
        for (pair, k) in img.iter() {
            m.set(lookup[pair], j, k.clone());
        }
    }
    Ok((basis.len() - m.rank(), tree_count))
}
