//! The left and right graft products on the augmentation ideal, the six
//! bigraft relations, the extended tensor product, and the enveloping
//! products on words of primitive elements.
//!
//! On basis forests, `G ≻ F` grafts `G` on the root of the first tree of
//! `F` with `l`-edges, and `G ≺ F` grafts `F` on the root of the last
//! tree of `G` with `r`-edges. Neither product admits the empty forest;
//! the unit conventions exist only inside [`BarTensor`] values.

use crate::error::{Error, Result};
use crate::forest::{Forest, Tree};
use crate::hopf::concat;
use crate::lincomb::{BarTensor, LinComb, Tensor2};

/// Which graft.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraftOp {
    /// `≻`
    Left,
    /// `≺`
    Right,
}

/// `G ≻ F` or `G ≺ F` on nonempty basis forests.
pub fn graft_forest(g: &Forest, f: &Forest, op: GraftOp) -> Result<Forest> {
    if g.is_unit() || f.is_unit() {
        return Err(Error::domain(
            "grafts are defined on the augmentation ideal",
        ));
    }
    Ok(match op {
        GraftOp::Left => {
            let (head, tail) = f.trees().split_first().expect("nonempty");
            let (h1, h2) = head.b_minus();
            let grafted = Tree::b_plus(g.clone().concat(h1), h2);
            Forest::tree(grafted).concat(Forest::new(tail.to_vec()))
        }
        GraftOp::Right => {
            let (last, init) = g.trees().split_last().expect("nonempty");
            let (h1, h2) = last.b_minus();
            let grafted = Tree::b_plus(h1, h2.concat(f.clone()));
            Forest::new(init.to_vec()).concat(Forest::tree(grafted))
        }
    })
}

/// `x ≻ y`, bilinear on the augmentation ideal.
pub fn graft_left(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    graft(x, y, GraftOp::Left)
}

/// `x ≺ y`, bilinear on the augmentation ideal.
pub fn graft_right(x: &LinComb, y: &LinComb) -> Result<LinComb> {
    graft(x, y, GraftOp::Right)
}

pub fn graft(x: &LinComb, y: &LinComb, op: GraftOp) -> Result<LinComb> {
    x.require_augmentation_ideal("graft")?;
    y.require_augmentation_ideal("graft")?;
    let mut out = LinComb::zero();
    for (f, j) in x.iter() {
        for (g, k) in y.iter() {
            out.add_term(graft_forest(f, g, op)?, j * k);
        }
    }
    Ok(out)
}

/// Left-minus-right residuals of the six bigraft axioms, in the order:
/// associativity of `∗`, then `(x∗y)≻z − x≻(y≻z)`, `(x≻y)∗z − x≻(y∗z)`,
/// `(x≺y)≺z − x≺(y∗z)`, `(x∗y)≺z − x∗(y≺z)`, and the entanglement
/// relation `(x≻y)≺z − x≻(y≺z)`.
pub fn bg_residuals(x: &LinComb, y: &LinComb, z: &LinComb) -> Result<[LinComb; 6]> {
    let star = |a: &LinComb, b: &LinComb| concat(a, b);
    let l = |a: &LinComb, b: &LinComb| graft_left(a, b);
    let r = |a: &LinComb, b: &LinComb| graft_right(a, b);
    Ok([
        star(&star(x, y), z) - star(x, &star(y, z)),
        l(&star(x, y), z)? - l(x, &l(y, z)?)?,
        star(&l(x, y)?, z) - l(x, &star(y, z))?,
        r(&r(x, y)?, z)? - r(x, &star(y, z))?,
        r(&star(x, y), z)? - star(x, &r(y, z)?),
        r(&l(x, y)?, z)? - l(x, &r(y, z)?)?,
    ])
}

/// The two decorations of the extended tensor square: the one
/// compatible with the admissible-cut coproduct (grafts act in the
/// second slot) and the one compatible with deconcatenation (`≻` acts
/// in the first slot).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarRules {
    Coproduct,
    Deconcatenation,
}

/// Operation selector for [`bar_op`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarOp {
    Star,
    Graft(GraftOp),
}

// slot conventions: a ≻ 1 = 0, 1 ≻ a = a, a ≺ 1 = a, 1 ≺ a = 0
fn slot_graft(a: &Forest, b: &Forest, op: GraftOp) -> Result<Option<Forest>> {
    Ok(match (a.is_unit(), b.is_unit(), op) {
        (true, true, _) => {
            return Err(Error::domain("1 ≻ 1 and 1 ≺ 1 are undefined"));
        }
        (true, false, GraftOp::Left) => Some(b.clone()),
        (true, false, GraftOp::Right) => None,
        (false, true, GraftOp::Left) => None,
        (false, true, GraftOp::Right) => Some(a.clone()),
        (false, false, _) => Some(graft_forest(a, b, op)?),
    })
}

/// The products of `A ⊗̄ A`, extended bilinearly.
pub fn bar_op(x: &BarTensor, y: &BarTensor, op: BarOp, rules: BarRules) -> Result<BarTensor> {
    let mut out = BarTensor::zero();
    for ((a, b), j) in x.iter() {
        for ((a2, b2), k) in y.iter() {
            let coeff = j * k;
            match op {
                BarOp::Star => {
                    out.add_term(
                        a.clone().concat(a2.clone()),
                        b.clone().concat(b2.clone()),
                        coeff,
                    )?;
                }
                BarOp::Graft(g) => {
                    let pure_second = b.is_unit() && b2.is_unit();
                    let pure_first = a.is_unit() && a2.is_unit();
                    let first_slot_graft = match (rules, g) {
                        (BarRules::Coproduct, _) => pure_second,
                        (BarRules::Deconcatenation, GraftOp::Left) => !pure_first,
                        (BarRules::Deconcatenation, GraftOp::Right) => pure_second,
                    };
                    if first_slot_graft {
                        if let Some(v) = slot_graft(a, a2, g)? {
                            out.add_term(v, b.clone().concat(b2.clone()), coeff)?;
                        }
                    } else if let Some(v) = slot_graft(b, b2, g)? {
                        out.add_term(a.clone().concat(a2.clone()), v, coeff)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `ΔF ≻ ΔT ≺ ΔG` with the coproduct-side rules; the inputs are ordinary
/// tensors (coproduct values).
pub fn bar_sandwich(df: &Tensor2, dt: &Tensor2, dg: &Tensor2) -> Result<Tensor2> {
    let df = BarTensor::from_tensor2(df)?;
    let dt = BarTensor::from_tensor2(dt)?;
    let dg = BarTensor::from_tensor2(dg)?;
    let left = bar_op(&df, &dt, BarOp::Graft(GraftOp::Left), BarRules::Coproduct)?;
    let out = bar_op(
        &left,
        &dg,
        BarOp::Graft(GraftOp::Right),
        BarRules::Coproduct,
    )?;
    Ok(out.to_tensor2())
}

/// Grafts of primitive elements: trees are closed under both grafts.
pub fn primitive_graft(t: &Tree, u: &Tree, op: GraftOp) -> Tree {
    let grafted = graft_forest(&Forest::tree(t.clone()), &Forest::tree(u.clone()), op)
        .expect("nonempty trees");
    grafted
        .as_tree()
        .expect("grafts of trees are trees")
        .clone()
}

/// The enveloping products on nonempty words over primitive elements:
/// `(a₁ ⋯ a_p) ≻ (b₁ ⋯ b_q) = (a₁ ≻ (⋯ (a_p ≻ b₁)) ⋯) b₂ ⋯ b_q` and
/// `(a₁ ⋯ a_p) ≺ (b₁ ⋯ b_q) = a₁ ⋯ a_{p−1} ((⋯ (a_p ≺ b₁) ⋯) ≺ b_q)`.
pub fn enveloping_graft(a: &[Tree], b: &[Tree], op: GraftOp) -> Result<Forest> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::domain("enveloping products need nonempty words"));
    }
    Ok(match op {
        GraftOp::Left => {
            let mut nested = b[0].clone();
            for t in a.iter().rev() {
                nested = primitive_graft(t, &nested, GraftOp::Left);
            }
            Forest::tree(nested).concat(Forest::new(b[1..].to_vec()))
        }
        GraftOp::Right => {
            let mut nested = a[a.len() - 1].clone();
            for t in b {
                nested = primitive_graft(&nested, t, GraftOp::Right);
            }
            Forest::new(a[..a.len() - 1].to_vec()).concat(Forest::tree(nested))
        }
    })
}
