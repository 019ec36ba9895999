//! The nonsymmetric bigraft operad on the forest basis.
//!
//! Degree-`n` forests are the arity-`n` operations; composition is
//! defined inductively: the single vertex is the unit, a forest splits
//! as a product, and `B(F ⊗ G) ∘ (…) = ((F ∘ …) ≻ H) ≺ (G ∘ …)`.
//! Composition of basis forests is set-theoretic: it always returns a
//! single basis forest. The dual operad acts on the restricted corolla
//! basis by composing and then projecting.

use num_traits::One;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::graft::{graft_forest, GraftOp};
use crate::lincomb::{Int, LinComb};

/// A homogeneous element of the operad: a combination of forests of one
/// fixed degree, the arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperadElt {
    arity: usize,
    value: LinComb,
}

impl OperadElt {
    /// Wraps a nonzero homogeneous combination.
    pub fn new(value: LinComb) -> Result<OperadElt> {
        let first = {
            let mut degrees = value.iter().map(|(f, _)| f.degree());
            let Some(first) = degrees.next() else {
                return Err(Error::domain("operad elements are nonzero"));
            };
            if first == 0 || degrees.any(|d| d != first) {
                return Err(Error::domain(
                    "operad elements are homogeneous of positive degree",
                ));
            }
            first
        };
        Ok(OperadElt {
            arity: first,
            value,
        })
    }

    pub fn basis(f: Forest) -> Result<OperadElt> {
        OperadElt::new(LinComb::basis(f))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn value(&self) -> &LinComb {
        &self.value
    }
}

/// Composition on basis forests.
pub fn compose_forest(f: &Forest, args: &[Forest]) -> Result<Forest> {
    if args.len() != f.degree() {
        return Err(Error::ArityMismatch {
            expected: f.degree(),
            got: args.len(),
        });
    }
    if args.iter().any(Forest::is_unit) {
        return Err(Error::domain("composition arguments must be nonempty"));
    }
    Ok(compose_inner(f, args))
}

fn compose_inner(f: &Forest, args: &[Forest]) -> Forest {
    debug_assert_eq!(f.degree(), args.len());
    let trees = f.trees();
    if trees.len() >= 2 {
        let (head, tail) = trees.split_first().expect("nonempty");
        let split = head.degree();
        let left = compose_inner(&Forest::tree(head.clone()), &args[..split]);
        let right = compose_inner(&Forest::new(tail.to_vec()), &args[split..]);
        return left.concat(right);
    }
    let (g, h) = trees[0].b_minus();
    let p = g.degree();
    let q = h.degree();
    if p == 0 && q == 0 {
        return args[0].clone();
    }
    let mut mid = args[p].clone();
    if p > 0 {
        let left = compose_inner(&g, &args[..p]);
        mid = graft_forest(&left, &mid, GraftOp::Left).expect("nonempty");
    }
    if q > 0 {
        let right = compose_inner(&h, &args[p + 1..]);
        mid = graft_forest(&mid, &right, GraftOp::Right).expect("nonempty");
    }
    mid
}

/// Multilinear operad composition.
pub fn compose(f: &OperadElt, args: &[OperadElt]) -> Result<OperadElt> {
    if args.len() != f.arity {
        return Err(Error::ArityMismatch {
            expected: f.arity,
            got: args.len(),
        });
    }
    let mut value = LinComb::zero();
    for (base, k) in f.value.iter() {
        let mut partial: Vec<(Vec<Forest>, Int)> = vec![(Vec::new(), k.clone())];
        for arg in args {
            let mut next = Vec::new();
            for (chosen, coeff) in &partial {
                for (g, c) in arg.value.iter() {
                    let mut chosen = chosen.clone();
                    chosen.push(g.clone());
                    next.push((chosen, coeff * c));
                }
            }
            partial = next;
        }
        for (chosen, coeff) in partial {
            value.add_term(compose_forest(base, &chosen)?, coeff);
        }
    }
    OperadElt::new(value)
}

/// Kills every forest outside the restricted corolla basis.
pub fn dual_project(x: &LinComb) -> LinComb {
    let mut out = LinComb::zero();
    for (f, k) in x.iter() {
        if f.is_dual_basis() {
            out.add_term(f.clone(), k.clone());
        }
    }
    out
}

/// Dual composition: compose, then project. On basis forests the result
/// is zero or a single restricted-basis forest.
pub fn dual_compose(f: &OperadElt, args: &[OperadElt]) -> Result<LinComb> {
    let in_dual = |e: &OperadElt| e.value.iter().all(|(f, _)| f.is_dual_basis());
    if !in_dual(f) || !args.iter().all(in_dual) {
        return Err(Error::domain(
            "dual composition requires supports inside the restricted basis",
        ));
    }
    Ok(dual_project(compose(f, args)?.value()))
}

/// Result of [`check_operad_axioms`]: any violated instances, expected
/// empty.
#[derive(Debug, Default)]
pub struct AxiomReport {
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every tuple of nonempty basis forests filling `slots` slots with total
/// degree `total`.
pub fn argument_tuples(slots: usize, total: usize) -> Result<Vec<Vec<Forest>>> {
    if slots == 0 {
        return Ok(if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        });
    }
    if total < slots {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for first in 1..=total - (slots - 1) {
        for f in crate::forest::enumerate_forests(first, false)? {
            for rest in argument_tuples(slots - 1, total - first)? {
                let mut tuple = vec![f.clone()];
                tuple.extend(rest);
                out.push(tuple);
            }
        }
    }
    Ok(out)
}

/// Verifies the unit law and sequential associativity of composition on
/// every basis choice with final degree up to `max_total_degree`.
pub fn check_operad_axioms(max_total_degree: usize) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    let unit = Forest::leaf();
    for d in 1..=max_total_degree {
        for f in crate::forest::enumerate_forests(d, false)? {
            let left = compose_forest(&unit, std::slice::from_ref(&f))?;
            if left != f {
                report.violations.push(format!("unit ∘ ({f:?}) ≠ {f:?}"));
            }
            let units = vec![Forest::leaf(); d];
            let right = compose_forest(&f, &units)?;
            if right != f {
                report.violations.push(format!("{f:?} ∘ (units) ≠ {f:?}"));
            }
        }
    }
    for c in 1..=max_total_degree {
        for b in 1..=c {
            for a in 1..=b {
                for f in crate::forest::enumerate_forests(a, false)? {
                    for gs in argument_tuples(a, b)? {
                        let fg = compose_forest(&f, &gs)?;
                        for hs in argument_tuples(b, c)? {
                            let sequential = compose_forest(&fg, &hs)?;
                            let mut inner = Vec::with_capacity(a);
                            let mut off = 0;
                            for g in &gs {
                                let take = g.degree();
                                inner.push(compose_forest(g, &hs[off..off + take])?);
                                off += take;
                            }
                            let nested = compose_forest(&f, &inner)?;
                            if sequential != nested {
                                report
                                    .violations
                                    .push(format!("associativity fails: {f:?} ∘ {gs:?} ∘ {hs:?}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// In the set-theoretic operad, a basis composition is a single basis
/// forest with coefficient 1.
pub fn is_set_theoretic_value(x: &LinComb) -> bool {
    match x.as_single() {
        Some((_, k)) => k == &Int::one(),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;

    fn f(s: &str) -> Forest {
        parse(s).unwrap()
    }

    #[test]
    fn unit_composition() {
        let h = f("o[l:o] o");
        assert_eq!(compose_forest(&f("o"), &[h.clone()]).unwrap(), h);
        assert_eq!(
            compose_forest(&f("o[l:o,r:o]"), &[f("o"), f("o"), f("o")]).unwrap(),
            f("o[l:o,r:o]")
        );
    }

    #[test]
    fn binary_generators_act_as_the_three_products() {
        let (a, b) = (f("o o"), f("o[r:o]"));
        assert_eq!(
            compose_forest(&f("o o"), &[a.clone(), b.clone()]).unwrap(),
            a.clone().concat(b.clone())
        );
        assert_eq!(
            compose_forest(&f("o[l:o]"), &[a.clone(), b.clone()]).unwrap(),
            graft_forest(&a, &b, GraftOp::Left).unwrap()
        );
        assert_eq!(
            compose_forest(&f("o[r:o]"), &[a.clone(), b.clone()]).unwrap(),
            graft_forest(&a, &b, GraftOp::Right).unwrap()
        );
    }

    #[test]
    fn forest_composition_splits() {
        assert_eq!(
            compose_forest(&f("o o"), &[f("o"), f("o o")]).unwrap(),
            f("o o o")
        );
    }

    #[test]
    fn degree_three_composition_table_row() {
        // (F₁ ≻ F₂) ≺ F₃ for the corolla with one l- and one r-edge
        let args = [f("o"), f("o o"), f("o")];
        let lhs = compose_forest(&f("o[l:o,r:o]"), &args).unwrap();
        let inner = graft_forest(&args[0], &args[1], GraftOp::Left).unwrap();
        assert_eq!(lhs, graft_forest(&inner, &args[2], GraftOp::Right).unwrap());
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(
            compose_forest(&f("o o"), &[f("o")]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        ));
        assert!(compose_forest(&f("o"), &[Forest::unit()]).is_err());
    }

    #[test]
    fn axioms_hold_up_to_degree_three() {
        let report = check_operad_axioms(3).unwrap();
        assert!(report.is_clean(), "{:?}", report.violations);
    }

    #[test]
    fn dual_projection() {
        assert!(dual_project(&LinComb::basis(f("o[l:o[l:o]]"))).is_zero());
        let keep = LinComb::basis(f("o[l:o] o"));
        assert_eq!(dual_project(&keep), keep);
        assert!(dual_project(&LinComb::basis(f("o o[l:o]"))).is_zero());
    }

    #[test]
    fn dual_composition_examples() {
        let e = |s: &str| OperadElt::basis(f(s)).unwrap();
        let zero = dual_compose(&e("o[l:o]"), &[e("o[l:o]"), e("o")]).unwrap();
        assert!(zero.is_zero());
        let corolla = dual_compose(&e("o[r:o]"), &[e("o[r:o]"), e("o")]).unwrap();
        assert_eq!(corolla, LinComb::basis(f("o[r:o,r:o]")));
        let killed = dual_compose(&e("o o"), &[e("o"), e("o[l:o]")]).unwrap();
        assert!(killed.is_zero());
        assert!(dual_compose(&e("o[l:o[l:o]]"), &[e("o"), e("o"), e("o")]).is_err());
    }

    #[test]
    fn compositions_are_set_theoretic() {
        for (f0, args) in [
            (f("o[l:o]"), vec![f("o o"), f("o[r:o]")]),
            (f("o o[r:o]"), vec![f("o"), f("o[l:o]"), f("o o")]),
        ] {
            let elt = OperadElt::basis(f0).unwrap();
            let args: Vec<OperadElt> = args
                .into_iter()
                .map(|a| OperadElt::basis(a).unwrap())
                .collect();
            let out = compose(&elt, &args).unwrap();
            assert!(is_set_theoretic_value(out.value()));
        }
    }
}
