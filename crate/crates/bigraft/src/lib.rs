//! Exact computer-algebra kernel for planar rooted forests with `{l, r}`
//! edge decorations and the bigraft operad built on them.
//!
//! The basis of everything is the set of planar rooted trees in which, at
//! every vertex, all `l`-decorated edges precede all `r`-decorated edges.
//! On the span of these forests the crate provides:
//!
//! * the graded Hopf algebra structure (concatenation product,
//!   admissible-cut coproduct, antipode) and the recursive bilinear
//!   pairing, with exact integer coefficients throughout ([`hopf`]);
//! * the left and right graft products `≻`, `≺`, the six bigraft-algebra
//!   relations, the extended tensor product, and the enveloping products
//!   on words of primitive elements ([`graft`]);
//! * the nonsymmetric bigraft operad on the forest basis: composition,
//!   the quotient onto the restricted corolla basis, and dual
//!   composition ([`operad`]);
//! * a rewriting engine for the free operad on `{≻, m, ≺}`: normal forms,
//!   critical-pair confluence, the weight-3 duality pairing, and
//!   normal-form counting ([`koszul`]);
//! * the chain complex of a bigraft algebra with its differential and
//!   exact homology ranks ([`homology`]);
//! * the counting sequences and generating-series identities ([`series`]).
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! and ranks are computed by fraction-free elimination. Values are
//! immutable and all operations are pure functions.

pub mod error;
pub mod forest;
pub mod graft;
pub mod homology;
pub mod hopf;
pub mod koszul;
pub mod linalg;
pub mod lincomb;
pub mod operad;
pub mod series;
pub mod text;

pub use error::{Error, Result};
pub use forest::{Decoration, Forest, Tree};
pub use lincomb::{BarTensor, Int, LinComb, Tensor2};
