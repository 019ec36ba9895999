//! Planar rooted forests with `{l, r}` edge decorations.
//!
//! At every vertex the `l`-decorated child edges precede the `r`-decorated
//! ones, so a [`Tree`] stores its children as two blocks and invalid
//! decoration orders are unrepresentable. The empty [`Forest`] is the unit
//! of the concatenation product and is written `1`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Edge decoration: `L` renders as `l`, `R` as `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Decoration {
    L,
    R,
}

impl Decoration {
    pub fn letter(self) -> char {
        match self {
            Decoration::L => 'l',
            Decoration::R => 'r',
        }
    }
}

/// A planar rooted tree whose child edges carry the decoration blocks
/// `l…l r…r`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    left: Vec<Tree>,
    right: Vec<Tree>,
}

/// An ordered sequence of trees. The empty sequence is the unit `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest(Vec<Tree>);

/// An admissible cut: the set of cut vertices, as positions in the
/// canonical vertex order of the forest (0-based).
pub type Cut = BTreeSet<usize>;

impl Tree {
    /// The single-vertex tree `o`.
    pub fn leaf() -> Tree {
        Tree::default()
    }

    /// Grafts the trees of `F` (via `l`-edges) and of `G` (via `r`-edges)
    /// on a new common root.
    pub fn b_plus(f: Forest, g: Forest) -> Tree {
        Tree {
            left: f.0,
            right: g.0,
        }
    }

    /// Inverse of [`Tree::b_plus`]: the `l`-children subforest and the
    /// `r`-children subforest.
    pub fn b_minus(&self) -> (Forest, Forest) {
        (Forest(self.left.clone()), Forest(self.right.clone()))
    }

    /// Number of vertices (always ≥ 1).
    pub fn degree(&self) -> usize {
        1 + self.left.iter().map(Tree::degree).sum::<usize>()
            + self.right.iter().map(Tree::degree).sum::<usize>()
    }

    /// Maximal number of edges on a root-to-vertex path.
    pub fn height(&self) -> usize {
        self.children()
            .map(|(_, c)| 1 + c.height())
            .max()
            .unwrap_or(0)
    }

    /// A corolla has height ≤ 1.
    pub fn is_corolla(&self) -> bool {
        self.height() <= 1
    }

    /// Child subtrees with their edge decorations, left to right.
    pub fn children(&self) -> impl Iterator<Item = (Decoration, &Tree)> {
        self.left
            .iter()
            .map(|c| (Decoration::L, c))
            .chain(self.right.iter().map(|c| (Decoration::R, c)))
    }

    pub fn left_children(&self) -> &[Tree] {
        &self.left
    }

    pub fn right_children(&self) -> &[Tree] {
        &self.right
    }

    /// Mirror image: children reversed, decorations swapped, recursively.
    pub fn dagger(&self) -> Tree {
        let (f, g) = self.b_minus();
        Tree::b_plus(g.dagger(), f.dagger())
    }

    fn collect_cuts(&self) -> Vec<(Cut, Forest, Forest)> {
        // Either the root is cut (the total cut of this tree), or the cut
        // lives in the child forests. Positions follow the vertex order:
        // left block, root, right block.
        let g = self.left.iter().map(Tree::degree).sum::<usize>();
        let mut out = Vec::new();
        let left_cuts = Forest(self.left.clone()).collect_cuts();
        let right_cuts = Forest(self.right.clone()).collect_cuts();
        for (cl, lea_l, roo_l) in &left_cuts {
            for (cr, lea_r, roo_r) in &right_cuts {
                let mut cut = cl.clone();
                cut.extend(cr.iter().map(|p| p + g + 1));
                let lea = lea_l.clone().concat(lea_r.clone());
                let roo = Forest::tree(Tree::b_plus(roo_l.clone(), roo_r.clone()));
                out.push((cut, lea, roo));
            }
        }
        let mut total = Cut::new();
        total.insert(g);
        out.push((total, Forest::tree(self.clone()), Forest::unit()));
        out
    }
}

impl Forest {
    /// The empty forest `1`.
    pub fn unit() -> Forest {
        Forest::default()
    }

    /// The forest with the single tree `o`.
    pub fn leaf() -> Forest {
        Forest::tree(Tree::leaf())
    }

    pub fn tree(t: Tree) -> Forest {
        Forest(vec![t])
    }

    pub fn new(trees: Vec<Tree>) -> Forest {
        Forest(trees)
    }

    pub fn trees(&self) -> &[Tree] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of trees.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// Total number of vertices.
    pub fn degree(&self) -> usize {
        self.0.iter().map(Tree::degree).sum()
    }

    pub fn height(&self) -> usize {
        self.0.iter().map(Tree::height).max().unwrap_or(0)
    }

    /// The single tree of a length-1 forest.
    pub fn as_tree(&self) -> Option<&Tree> {
        match self.0.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    /// Concatenation `F G`.
    pub fn concat(mut self, other: Forest) -> Forest {
        self.0.extend(other.0);
        self
    }

    /// `(F G)† = G† F†`, `B(F ⊗ G)† = B(G† ⊗ F†)`.
    pub fn dagger(&self) -> Forest {
        Forest(self.0.iter().rev().map(Tree::dagger).collect())
    }

    /// Parent position of each vertex, in the canonical vertex order
    /// (roots have no parent).
    pub fn vertex_parents(&self) -> Vec<Option<usize>> {
        fn walk(t: &Tree, base: usize, out: &mut Vec<Option<usize>>) {
            // vertex order: left block, root, right block
            let g: usize = t.left.iter().map(Tree::degree).sum();
            let root = base + g;
            let mut off = base;
            for c in &t.left {
                walk(c, off, out);
                out[off + c.left.iter().map(Tree::degree).sum::<usize>()] = Some(root);
                off += c.degree();
            }
            off = root + 1;
            for c in &t.right {
                walk(c, off, out);
                out[off + c.left.iter().map(Tree::degree).sum::<usize>()] = Some(root);
                off += c.degree();
            }
        }
        let mut out = vec![None; self.degree()];
        let mut off = 0;
        for t in &self.0 {
            walk(t, off, &mut out);
            off += t.degree();
        }
        out
    }

    /// Every admissible cut of the forest, as `(cut, Lea, Roo)` triples.
    /// Includes the empty cut `(∅, 1, F)` and, for nonempty forests, the
    /// total cut `(roots, F, 1)`.
    pub fn admissible_cuts(&self) -> Vec<(Cut, Forest, Forest)> {
        self.collect_cuts()
    }

    fn collect_cuts(&self) -> Vec<(Cut, Forest, Forest)> {
        let mut acc: Vec<(Cut, Forest, Forest)> =
            vec![(Cut::new(), Forest::unit(), Forest::unit())];
        let mut off = 0;
        for t in &self.0 {
            let tree_cuts = t.collect_cuts();
            let mut next = Vec::with_capacity(acc.len() * tree_cuts.len());
            for (c0, lea0, roo0) in &acc {
                for (c, lea, roo) in &tree_cuts {
                    let mut cut = c0.clone();
                    cut.extend(c.iter().map(|p| p + off));
                    next.push((
                        cut,
                        lea0.clone().concat(lea.clone()),
                        roo0.clone().concat(roo.clone()),
                    ));
                }
            }
            acc = next;
            off += t.degree();
        }
        acc
    }

    /// Membership in the restricted basis: every tree is a corolla,
    /// `l`-edges occur only in the first tree, `r`-edges only in the last.
    pub fn is_dual_basis(&self) -> bool {
        let n = self.0.len();
        self.0.iter().enumerate().all(|(i, t)| {
            t.is_corolla() && (t.left.is_empty() || i == 0) && (t.right.is_empty() || i + 1 == n)
        })
    }
}

/// Degree bound accepted by [`enumerate_forests`].
pub const MAX_ENUMERATION_DEGREE: usize = 10;

/// All degree-`n` forests of the basis (or of the restricted dual basis),
/// each exactly once, sorted by rendered text.
pub fn enumerate_forests(n: usize, dual_only: bool) -> Result<Vec<Forest>> {
    if n > MAX_ENUMERATION_DEGREE {
        return Err(Error::bound(format!(
            "enumeration degree {n} exceeds {MAX_ENUMERATION_DEGREE}"
        )));
    }
    let mut out = if dual_only {
        enumerate_dual(n)
    } else {
        enumerate_all(n)
    };
    out.sort_by_cached_key(crate::text::render);
    Ok(out)
}

fn enumerate_all(n: usize) -> Vec<Forest> {
    // forests[d] and trees[d], built bottom-up; a forest is determined by
    // its first tree and the rest, a tree by its B-decomposition.
    let mut trees: Vec<Vec<Tree>> = vec![Vec::new()];
    let mut forests: Vec<Vec<Forest>> = vec![vec![Forest::unit()]];
    for d in 1..=n {
        let mut td = Vec::new();
        for a in 0..d {
            for f in &forests[a] {
                for g in &forests[d - 1 - a] {
                    td.push(Tree::b_plus(f.clone(), g.clone()));
                }
            }
        }
        let mut fd = Vec::new();
        for a in 1..=d {
            let first_trees = if a == d { &td } else { &trees[a] };
            for t in first_trees {
                for rest in &forests[d - a] {
                    fd.push(Forest::tree(t.clone()).concat(rest.clone()));
                }
            }
        }
        trees.push(td);
        forests.push(fd);
    }
    forests.swap_remove(n)
}

fn enumerate_dual(n: usize) -> Vec<Forest> {
    if n == 0 {
        return vec![Forest::unit()];
    }
    let corolla = |p: usize, q: usize| {
        Tree::b_plus(Forest(vec![Tree::leaf(); p]), Forest(vec![Tree::leaf(); q]))
    };
    let mut out = Vec::new();
    for p in 0..n {
        out.push(Forest::tree(corolla(p, n - 1 - p)));
    }
    for k in 2..=n {
        for p in 0..=(n - k) {
            let q = n - k - p;
            let mut ts = vec![corolla(p, 0)];
            ts.extend(vec![Tree::leaf(); k - 2]);
            ts.push(corolla(0, q));
            out.push(Forest(ts));
        }
    }
    out
}
