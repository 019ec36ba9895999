//! The chain complex of a bigraft algebra and its exact homology.
//!
//! Generators are restricted-basis skeletons whose vertices carry basis
//! forests of the augmentation ideal, read in the canonical vertex order.
//! The differential merges adjacent decorations with the sign
//! `(−1)^{i−1}`: inside the `l`-block and along the spine and inside the
//! `r`-block with the concatenation product, across the `l`-block/root
//! boundary with `≻`, and across the root/`r`-block boundary with `≺`.
//! It preserves the total decoration weight and lowers the arity by one,
//! so homology is computed per weight on finite components.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{enumerate_forests, Forest, Tree};
use crate::graft::{graft_forest, GraftOp};
use crate::linalg::IntMatrix;
use crate::lincomb::Int;
use crate::text::render;

/// A set-theoretic product triple on basis forests. The standard triple
/// is concatenation with the two grafts; a broken triple is the negative
/// control for the complex.
#[derive(Clone, Copy)]
pub struct ProductOps {
    pub star: fn(&Forest, &Forest) -> Forest,
    pub left: fn(&Forest, &Forest) -> Forest,
    pub right: fn(&Forest, &Forest) -> Forest,
}

fn star_op(a: &Forest, b: &Forest) -> Forest {
    a.clone().concat(b.clone())
}

fn left_op(a: &Forest, b: &Forest) -> Forest {
    graft_forest(a, b, GraftOp::Left).expect("nonempty")
}

fn right_op(a: &Forest, b: &Forest) -> Forest {
    graft_forest(a, b, GraftOp::Right).expect("nonempty")
}

/// The bigraft products of the augmentation ideal.
pub fn standard_ops() -> ProductOps {
    ProductOps {
        star: star_op,
        left: left_op,
        right: right_op,
    }
}

/// A deliberately non-bigraft triple (`≻` replaced by `≺`); some
/// squared-differential composite must fail to vanish with it.
pub fn broken_ops() -> ProductOps {
    ProductOps {
        star: star_op,
        left: right_op,
        right: right_op,
    }
}

/// A basis element of the complex: a restricted-basis skeleton with one
/// nonempty basis forest on each vertex, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedGenerator {
    skeleton: Forest,
    decorations: Vec<Forest>,
}

impl DecoratedGenerator {
    pub fn new(skeleton: Forest, decorations: Vec<Forest>) -> Result<DecoratedGenerator> {
        if !skeleton.is_dual_basis() || skeleton.is_unit() {
            return Err(Error::domain(
                "skeleton must be a nonempty restricted-basis forest",
            ));
        }
        if decorations.len() != skeleton.degree() {
            return Err(Error::domain("one decoration per skeleton vertex"));
        }
        if decorations.iter().any(Forest::is_unit) {
            return Err(Error::domain("decorations are nonempty basis forests"));
        }
        Ok(DecoratedGenerator {
            skeleton,
            decorations,
        })
    }

    pub fn skeleton(&self) -> &Forest {
        &self.skeleton
    }

    pub fn decorations(&self) -> &[Forest] {
        &self.decorations
    }

    /// Number of decorated vertices.
    pub fn arity(&self) -> usize {
        self.decorations.len()
    }

    /// Total degree of the decorations.
    pub fn weight(&self) -> usize {
        self.decorations.iter().map(Forest::degree).sum()
    }

    /// The block profile `(p, k, q)`: `p` leaves decorated `l` on the
    /// first tree, `k` trees, `q` leaves decorated `r` on the last tree.
    fn profile(&self) -> (usize, usize, usize) {
        let trees = self.skeleton.trees();
        let k = trees.len();
        let p = trees[0].left_children().len();
        let q = trees[k - 1].right_children().len();
        (p, k, q)
    }
}

impl fmt::Display for DecoratedGenerator {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "{} ⟨", render(&self.skeleton))?;
        for (i, d) in self.decorations.iter().enumerate() {
            if i > 0 {
                write!(w, "; ")?;
            }
            write!(w, "{}", render(d))?;
        }
        write!(w, "⟩")
    }
}

/// The canonical restricted-basis skeleton with block profile `(p, k, q)`.
pub fn dual_skeleton(p: usize, k: usize, q: usize) -> Forest {
    let corolla = |p: usize, q: usize| {
        Tree::b_plus(
            Forest::new(vec![Tree::leaf(); p]),
            Forest::new(vec![Tree::leaf(); q]),
        )
    };
    if k == 1 {
        return Forest::tree(corolla(p, q));
    }
    let mut ts = vec![corolla(p, 0)];
    ts.extend(vec![Tree::leaf(); k - 2]);
    ts.push(corolla(0, q));
    Forest::new(ts)
}

/// An integer combination of decorated generators.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GenComb {
    terms: BTreeMap<DecoratedGenerator, Int>,
}

impl GenComb {
    pub fn zero() -> GenComb {
        GenComb::default()
    }

    pub fn add_term(&mut self, g: DecoratedGenerator, k: Int) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&DecoratedGenerator, &Int)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The differential with the standard products.
pub fn differential(g: &DecoratedGenerator) -> GenComb {
    differential_with(g, standard_ops())
}

/// The differential with an arbitrary product triple.
pub fn differential_with(g: &DecoratedGenerator, ops: ProductOps) -> GenComb {
    let (p, k, q) = g.profile();
    let n = g.arity();
    let mut out = GenComb::zero();
    // merge the decorations at positions i, i+1 (1-based), sign (−1)^{i−1}
    for i in 1..n {
        let (merge, skeleton): (fn(&Forest, &Forest) -> Forest, Forest) = if i < p {
            (ops.star, dual_skeleton(p - 1, k, q))
        } else if i == p {
            (ops.left, dual_skeleton(p - 1, k, q))
        } else if i < p + k {
            (ops.star, dual_skeleton(p, k - 1, q))
        } else if i == p + k {
            (ops.right, dual_skeleton(p, k, q - 1))
        } else {
            (ops.star, dual_skeleton(p, k, q - 1))
        };
        let mut decorations = Vec::with_capacity(n - 1);
        decorations.extend_from_slice(&g.decorations[..i - 1]);
        decorations.push(merge(&g.decorations[i - 1], &g.decorations[i]));
        decorations.extend_from_slice(&g.decorations[i + 1..]);
        let sign = if (i - 1) % 2 == 0 {
            Int::one()
        } else {
            -Int::one()
        };
        out.add_term(
            DecoratedGenerator::new(skeleton, decorations).expect("valid merge"),
            sign,
        );
    }
    out
}

/// Weight bound accepted by the component and matrix constructors.
pub const MAX_WEIGHT: usize = 5;

/// The basis of the bidegree-`(k, w)` component (arity `k`, weight `w`)
/// for the free one-generator algebra truncated at weight `w`, in
/// deterministic order.
pub fn component_basis(k: usize, w: usize) -> Result<Vec<DecoratedGenerator>> {
    if w > MAX_WEIGHT {
        return Err(Error::bound(format!("weight {w} exceeds {MAX_WEIGHT}")));
    }
    if k == 0 || k > w {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for skeleton in enumerate_forests(k, true)? {
        let mut stack: Vec<Vec<Forest>> = vec![Vec::new()];
        for slot in 0..k {
            let remaining_slots = k - slot - 1;
            let mut next = Vec::new();
            for partial in &stack {
                let used: usize = partial.iter().map(Forest::degree).sum();
                let budget = w - used - remaining_slots;
                for d in 1..=budget {
                    for forest in enumerate_forests(d, false)? {
                        let mut partial = partial.clone();
                        partial.push(forest);
                        next.push(partial);
                    }
                }
            }
            stack = next;
        }
        for decorations in stack {
            if decorations.iter().map(Forest::degree).sum::<usize>() == w {
                out.push(DecoratedGenerator::new(skeleton.clone(), decorations)?);
            }
        }
    }
    Ok(out)
}

/// Matrix of the differential from bidegree `(k, w)` to `(k−1, w)`:
/// columns index the source basis, rows the target basis.
pub fn d_matrix(k: usize, w: usize) -> Result<IntMatrix> {
    d_matrix_with(k, w, standard_ops())
}

pub fn d_matrix_with(k: usize, w: usize, ops: ProductOps) -> Result<IntMatrix> {
    let source = component_basis(k, w)?;
    let target = component_basis(k.saturating_sub(1), w)?;
    let index: BTreeMap<&DecoratedGenerator, usize> = target.iter().zip(0..).collect();
    let mut m = IntMatrix::zeros(target.len(), source.len());
    for (j, g) in source.iter().enumerate() {
        for (image, coeff) in differential_with(g, ops).iter() {
            let i = *index
                .get(image)
                .unwrap_or_else(|| panic!("differential leaves the complex at {image}"));
            m.set(i, j, coeff.clone());
        }
    }
    Ok(m)
}

/// Exact homology of the weight-`w` slice, labeled by both the homology
/// index `n` and the component arity `n + 1`.
#[derive(Debug)]
pub struct HomologyReport {
    pub weight: usize,
    /// `(arity k, component dimension, rank of d on that component)`.
    pub components: Vec<(usize, usize, usize)>,
    /// `(n, arity n + 1, dim H_n)`.
    pub homology: Vec<(usize, usize, usize)>,
}

/// Component dimensions, differential ranks, and homology dimensions at
/// weight `w`.
pub fn homology_dims(w: usize) -> Result<HomologyReport> {
    if w == 0 || w > MAX_WEIGHT {
        return Err(Error::bound(format!(
            "homology weight must be between 1 and {MAX_WEIGHT}"
        )));
    }
    let mut dims = Vec::new();
    let mut ranks = Vec::new();
    for k in 1..=w {
        dims.push(component_basis(k, w)?.len());
        ranks.push(d_matrix(k, w)?.rank());
    }
    let mut homology = Vec::new();
    for n in 0..w {
        let k = n + 1;
        let kernel = dims[k - 1] - ranks[k - 1];
        let image = if k < w { ranks[k] } else { 0 };
        homology.push((n, k, kernel - image));
    }
    Ok(HomologyReport {
        weight: w,
        components: (1..=w).map(|k| (k, dims[k - 1], ranks[k - 1])).collect(),
        homology,
    })
}

/// One side of a splitting coproduct: a decorated generator or the
/// formal unit.
pub type SplitPart = Option<DecoratedGenerator>;

fn part(skeleton: Forest, decorations: &[Forest]) -> SplitPart {
    if skeleton.is_unit() {
        None
    } else {
        Some(DecoratedGenerator::new(skeleton, decorations.to_vec()).expect("valid split part"))
    }
}

/// Deconcatenation of the skeleton spine with the decorations split
/// accordingly.
pub fn split_spine(g: &DecoratedGenerator) -> Vec<(SplitPart, SplitPart)> {
    let trees = g.skeleton.trees();
    let mut out = Vec::new();
    for i in 0..=trees.len() {
        let prefix = Forest::new(trees[..i].to_vec());
        let cut = prefix.degree();
        let suffix = Forest::new(trees[i..].to_vec());
        out.push((
            part(prefix, &g.decorations[..cut]),
            part(suffix, &g.decorations[cut..]),
        ));
    }
    out
}

/// Peels `l`-leaves off the first tree: the `Δ_≻` splitting.
pub fn split_left(g: &DecoratedGenerator) -> Vec<(SplitPart, SplitPart)> {
    let (p, k, q) = g.profile();
    (0..=p)
        .map(|i| {
            let head = Forest::new(vec![Tree::leaf(); i]);
            (
                part(head, &g.decorations[..i]),
                part(dual_skeleton(p - i, k, q), &g.decorations[i..]),
            )
        })
        .collect()
}

/// Peels `r`-leaves off the last tree from the right: the `Δ_≺`
/// splitting.
pub fn split_right(g: &DecoratedGenerator) -> Vec<(SplitPart, SplitPart)> {
    let (p, k, q) = g.profile();
    let n = g.arity();
    (0..=q)
        .map(|i| {
            let tail = Forest::new(vec![Tree::leaf(); i]);
            (
                part(dual_skeleton(p, k, q - i), &g.decorations[..n - i]),
                part(tail, &g.decorations[n - i..]),
            )
        })
        .collect()
}
