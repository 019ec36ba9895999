//! Structural invariants beyond the acceptance criteria: text round
//! trips, involution laws, cut enumeration against a brute-force oracle,
//! coproduct compatibilities of the grafts, freeness reconstruction,
//! enveloping-word axioms, and the coderivation laws of the complex.

use std::collections::BTreeMap;

use proptest::prelude::*;

use bigraft::forest::enumerate_forests;
use bigraft::graft::{
    bar_op, bar_sandwich, bg_residuals, enveloping_graft, graft_forest, BarOp, BarRules, GraftOp,
};
use bigraft::homology::{
    component_basis, differential, split_left, split_right, split_spine, DecoratedGenerator,
    SplitPart,
};
use bigraft::hopf::{big_gamma, concat, coproduct, coproduct_ass, counit, Pairing};
use bigraft::koszul::{count_normal_forms, RuleSystem};
use bigraft::lincomb::{Int, Tensor2};
use bigraft::series::dual_forest_counts;
use bigraft::text::{parse, render};
use bigraft::{Forest, LinComb, Tree};

fn f(s: &str) -> Forest {
    parse(s).unwrap()
}

fn lc(s: &str) -> LinComb {
    LinComb::basis(f(s))
}

fn pairs_up_to(total: usize) -> Vec<(Forest, Forest)> {
    let mut out = Vec::new();
    for t in 2..=total {
        for a in 1..t {
            for x in enumerate_forests(a, false).unwrap() {
                for y in enumerate_forests(t - a, false).unwrap() {
                    out.push((x.clone(), y));
                }
            }
        }
    }
    out
}

// --- forest-core ---------------------------------------------------------

fn arb_tree(max_degree: usize) -> impl Strategy<Value = Tree> {
    let leaf = Just(Tree::leaf());
    leaf.prop_recursive(4, max_degree as u32, 4, |inner| {
        (
            proptest::collection::vec(inner.clone(), 0..3),
            proptest::collection::vec(inner, 0..3),
        )
            .prop_map(|(l, r)| Tree::b_plus(Forest::new(l), Forest::new(r)))
    })
}

fn arb_forest() -> impl Strategy<Value = Forest> {
    proptest::collection::vec(arb_tree(6), 0..4).prop_map(Forest::new)
}

proptest! {
    #[test]
    fn parse_render_roundtrip(forest in arb_forest()) {
        prop_assert_eq!(parse(&render(&forest)).unwrap(), forest);
    }

    #[test]
    fn dagger_is_a_degree_preserving_involution(forest in arb_forest()) {
        let mirrored = forest.dagger();
        prop_assert_eq!(mirrored.degree(), forest.degree());
        prop_assert_eq!(mirrored.dagger(), forest);
    }

    #[test]
    fn b_plus_b_minus_roundtrip(tree in arb_tree(6)) {
        let (a, b) = tree.b_minus();
        prop_assert_eq!(Tree::b_plus(a, b), tree);
    }
}

#[test]
fn dagger_preserves_the_restricted_basis() {
    for n in 0..=6 {
        for forest in enumerate_forests(n, true).unwrap() {
            assert!(forest.dagger().is_dual_basis(), "{forest:?}");
        }
    }
}

#[test]
fn cuts_are_exactly_the_vertex_antichains() {
    for n in 0..=5 {
        for forest in enumerate_forests(n, false).unwrap() {
            let parents = forest.vertex_parents();
            let is_ancestor = |mut v: usize, w: usize| loop {
                if v == w {
                    return true;
                }
                match parents[v] {
                    Some(p) => v = p,
                    None => return false,
                }
            };
            let mut expected: Vec<Vec<usize>> = Vec::new();
            for mask in 0..(1u32 << n) {
                let verts: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let antichain = verts.iter().all(|&v| {
                    verts
                        .iter()
                        .all(|&w| v == w || (!is_ancestor(v, w) && !is_ancestor(w, v)))
                });
                if antichain {
                    expected.push(verts);
                }
            }
            expected.sort();
            let mut got: Vec<Vec<usize>> = forest
                .admissible_cuts()
                .into_iter()
                .map(|(cut, _, _)| cut.into_iter().collect())
                .collect();
            got.sort();
            assert_eq!(got, expected, "cut set of {forest:?}");
        }
    }
}

// --- hopf ----------------------------------------------------------------

#[test]
fn gamma_satisfies_the_leibniz_type_law() {
    // Γ(xy) = Δ(x)Γ(y) + ε(y)Γ(x)
    let law = |x: &LinComb, y: &LinComb| {
        let lhs = big_gamma(&concat(x, y));
        let mut rhs = coproduct(x).mul(&big_gamma(y));
        let eps = counit(y);
        if eps != Int::from(0) {
            for ((a, b), k) in big_gamma(x).iter() {
                rhs.add_term(a.clone(), b.clone(), k * &eps);
            }
        }
        assert_eq!(lhs, rhs);
    };
    for (x, y) in pairs_up_to(4) {
        law(&LinComb::basis(x), &LinComb::basis(y));
    }
    law(&lc("o[l:o] o"), &LinComb::unit());
    law(&LinComb::unit(), &lc("o o"));
}

// --- bigraft -------------------------------------------------------------

#[test]
fn dagger_exchanges_the_two_grafts() {
    for (g, h) in pairs_up_to(5) {
        let left = graft_forest(&g, &h, GraftOp::Left).unwrap();
        let right = graft_forest(&h.dagger(), &g.dagger(), GraftOp::Right).unwrap();
        assert_eq!(left.dagger(), right, "(G ≻ F)† = F† ≺ G†");
        let right = graft_forest(&g, &h, GraftOp::Right).unwrap();
        let left = graft_forest(&h.dagger(), &g.dagger(), GraftOp::Left).unwrap();
        assert_eq!(right.dagger(), left, "(G ≺ F)† = F† ≻ G†");
    }
}

#[test]
fn coproduct_is_compatible_with_graft_sandwiches_around_trees() {
    for total in 3..=5 {
        for a in 1..=total - 2 {
            for b in 1..=total - a - 1 {
                let c = total - a - b;
                for x in enumerate_forests(a, false).unwrap() {
                    for t in enumerate_forests(b, false).unwrap() {
                        if t.length() != 1 {
                            continue;
                        }
                        for y in enumerate_forests(c, false).unwrap() {
                            let sandwich = bar_sandwich(
                                &coproduct(&LinComb::basis(x.clone())),
                                &coproduct(&LinComb::basis(t.clone())),
                                &coproduct(&LinComb::basis(y.clone())),
                            )
                            .unwrap();
                            let inner = graft_forest(&x, &t, GraftOp::Left).unwrap();
                            let grafted = graft_forest(&inner, &y, GraftOp::Right).unwrap();
                            assert_eq!(
                                sandwich,
                                coproduct(&LinComb::basis(grafted)),
                                "Δ(F ≻ T ≺ G) on {x:?}, {t:?}, {y:?}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn graft_sandwich_fails_for_some_forest_middle() {
    // the compatibility is specific to tree middles; search the smallest
    // degrees for a forest counterexample
    let mut found = None;
    'search: for total in 4..=5 {
        for a in 1..=total - 3 {
            for b in 2..=total - a - 1 {
                let c = total - a - b;
                if c == 0 {
                    continue;
                }
                for x in enumerate_forests(a, false).unwrap() {
                    for t in enumerate_forests(b, false).unwrap() {
                        if t.length() < 2 {
                            continue;
                        }
                        for y in enumerate_forests(c, false).unwrap() {
                            let sandwich = bar_sandwich(
                                &coproduct(&LinComb::basis(x.clone())),
                                &coproduct(&LinComb::basis(t.clone())),
                                &coproduct(&LinComb::basis(y.clone())),
                            )
                            .unwrap();
                            let inner = graft_forest(&x, &t, GraftOp::Left).unwrap();
                            let grafted = graft_forest(&inner, &y, GraftOp::Right).unwrap();
                            if sandwich != coproduct(&LinComb::basis(grafted)) {
                                found = Some((x.clone(), t.clone(), y.clone()));
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
    }
    let (x, t, y) = found.expect("a forest-middle counterexample must exist at low degree");
    assert!(
        t.length() >= 2,
        "counterexample middle is a forest: {x:?}, {t:?}, {y:?}"
    );
}

#[test]
fn every_forest_is_reachable_from_the_single_vertex() {
    fn rebuild(forest: &Forest) -> LinComb {
        if let Some(tree) = forest.as_tree() {
            let (a, b) = tree.b_minus();
            if a.is_unit() && b.is_unit() {
                return LinComb::basis(Forest::leaf());
            }
            // B(F¹ ⊗ F²) = (F¹ ≻ o) ≺ F², with the empty sides dropped
            let mut mid = LinComb::basis(Forest::leaf());
            if !a.is_unit() {
                mid = bigraft::graft::graft_left(&rebuild(&a), &mid).unwrap();
            }
            if !b.is_unit() {
                mid = bigraft::graft::graft_right(&mid, &rebuild(&b)).unwrap();
            }
            mid
        } else {
            let trees = forest.trees();
            let head = rebuild(&Forest::tree(trees[0].clone()));
            let tail = rebuild(&Forest::new(trees[1..].to_vec()));
            concat(&head, &tail)
        }
    }
    for n in 1..=5 {
        for forest in enumerate_forests(n, false).unwrap() {
            assert_eq!(rebuild(&forest), LinComb::basis(forest.clone()));
        }
    }
}

#[test]
fn enveloping_words_satisfy_the_bigraft_axioms() {
    // words of length ≤ 3 over trees of degree ≤ 2, with the enveloping
    // products computed by word nesting rather than by forest grafting
    let generators: Vec<Tree> = ["o", "o[l:o]", "o[r:o]"]
        .iter()
        .map(|s| f(s).as_tree().unwrap().clone())
        .collect();
    let mut words: Vec<Vec<Tree>> = Vec::new();
    for len in 1..=3usize {
        let mut stack: Vec<Vec<Tree>> = vec![Vec::new()];
        for _ in 0..len {
            stack = stack
                .into_iter()
                .flat_map(|w| {
                    generators.iter().map(move |g| {
                        let mut w = w.clone();
                        w.push(g.clone());
                        w
                    })
                })
                .collect();
        }
        words.extend(stack);
    }
    let star = |a: &[Tree], b: &[Tree]| {
        let mut out = a.to_vec();
        out.extend(b.to_vec());
        out
    };
    let left = |a: &[Tree], b: &[Tree]| {
        enveloping_graft(a, b, GraftOp::Left)
            .unwrap()
            .trees()
            .to_vec()
    };
    let right = |a: &[Tree], b: &[Tree]| {
        enveloping_graft(a, b, GraftOp::Right)
            .unwrap()
            .trees()
            .to_vec()
    };
    let small: Vec<&Vec<Tree>> = words.iter().filter(|w| w.len() <= 2).collect();
    for x in &small {
        for y in &small {
            for z in &small {
                let assoc = star(&star(x, y), z) == star(x, &star(y, z));
                let ax2 = left(&star(x, y), z) == left(x, &left(y, z));
                let ax3 = star(&left(x, y), z) == left(x, &star(y, z));
                let ax4 = right(&right(x, y), z) == right(x, &star(y, z));
                let ax5 = star(x, &right(y, z)) == right(&star(x, y), z);
                let ax6 = right(&left(x, y), z) == left(x, &right(y, z));
                assert!(
                    assoc && ax2 && ax3 && ax4 && ax5 && ax6,
                    "axioms fail on words {x:?}, {y:?}, {z:?}"
                );
            }
        }
    }
}

#[test]
fn residuals_match_between_word_and_forest_routes() {
    // the enveloping products on words coincide with the forest grafts
    for (x, y) in pairs_up_to(4) {
        for op in [GraftOp::Left, GraftOp::Right] {
            let via_words = enveloping_graft(x.trees(), y.trees(), op).unwrap();
            let via_forests = graft_forest(&x, &y, op).unwrap();
            assert_eq!(via_words, via_forests);
        }
    }
    let o = lc("o");
    for r in bg_residuals(&o, &o, &o).unwrap() {
        assert!(r.is_zero());
    }
}

// --- operad ---------------------------------------------------------------

#[test]
fn binary_generators_agree_with_the_three_products_up_to_degree_five() {
    for (x, y) in pairs_up_to(5) {
        let concat_result =
            bigraft::operad::compose_forest(&f("o o"), &[x.clone(), y.clone()]).unwrap();
        assert_eq!(concat_result, x.clone().concat(y.clone()));
        let left = bigraft::operad::compose_forest(&f("o[l:o]"), &[x.clone(), y.clone()]).unwrap();
        assert_eq!(left, graft_forest(&x, &y, GraftOp::Left).unwrap());
        let right = bigraft::operad::compose_forest(&f("o[r:o]"), &[x.clone(), y.clone()]).unwrap();
        assert_eq!(right, graft_forest(&x, &y, GraftOp::Right).unwrap());
    }
}

// --- koszul × enumeration -------------------------------------------------

#[test]
fn dual_normal_form_counts_match_the_closed_form() {
    let expected = dual_forest_counts(7).unwrap();
    for n in 1..=7 {
        assert_eq!(
            Int::from(count_normal_forms(n, RuleSystem::BgDual).unwrap() as i64),
            expected[n - 1]
        );
    }
}

// --- homology --------------------------------------------------------------

type PairComb = BTreeMap<(SplitPart, SplitPart), Int>;

fn add_pair(acc: &mut PairComb, key: (SplitPart, SplitPart), v: Int) {
    let e = acc.entry(key).or_default();
    *e += v;
    if *e == Int::from(0) {
        acc.retain(|_, v| v != &Int::from(0));
    }
}

fn coderivation_law(
    g: &DecoratedGenerator,
    split: fn(&DecoratedGenerator) -> Vec<(SplitPart, SplitPart)>,
) {
    // Δ(d x) = (d ⊗ id + θ ⊗ d) Δ(x) with θ = (−1)^arity
    let mut lhs: PairComb = BTreeMap::new();
    for (h, c) in differential(g).iter() {
        for (a, b) in split(h) {
            add_pair(&mut lhs, (a, b), c.clone());
        }
    }
    let mut rhs: PairComb = BTreeMap::new();
    for (a, b) in split(g) {
        if let Some(a_gen) = &a {
            for (da, c) in differential(a_gen).iter() {
                add_pair(&mut rhs, (Some(da.clone()), b.clone()), c.clone());
            }
        }
        if let Some(b_gen) = &b {
            let theta = match &a {
                Some(a_gen) if a_gen.arity() % 2 == 1 => Int::from(-1),
                _ => Int::from(1),
            };
            for (db, c) in differential(b_gen).iter() {
                add_pair(&mut rhs, (a.clone(), Some(db.clone())), c * &theta);
            }
        }
    }
    assert_eq!(lhs, rhs, "coderivation law fails on {g}");
}

#[test]
fn differential_is_a_coderivation_for_all_three_splittings() {
    for w in 1..=4 {
        for k in 1..=w {
            for g in component_basis(k, w).unwrap() {
                coderivation_law(&g, split_spine);
                coderivation_law(&g, split_left);
                coderivation_law(&g, split_right);
            }
        }
    }
}

#[test]
fn euler_characteristic_vanishes_per_weight() {
    for w in 2..=5 {
        let mut chi: i64 = 0;
        for k in 1..=w {
            let dim = component_basis(k, w).unwrap().len() as i64;
            chi += if k % 2 == 1 { dim } else { -dim };
        }
        assert_eq!(chi, 0, "Euler characteristic at weight {w}");
    }
}

// --- deconcatenation infinitesimal law -------------------------------------

#[test]
fn deconcatenation_infinitesimal_law_on_basis_pairs() {
    for (x, y) in pairs_up_to(4) {
        let xc = LinComb::basis(x.clone());
        let yc = LinComb::basis(y.clone());
        let lhs = bigraft::hopf::reduced_coproduct_ass(&concat(&xc, &yc)).unwrap();
        let dx = bigraft::hopf::reduced_coproduct_ass(&xc).unwrap();
        let dy = bigraft::hopf::reduced_coproduct_ass(&yc).unwrap();
        let mut rhs = Tensor2::basis(x.clone(), Forest::unit()).mul(&dy);
        rhs = rhs + dx.mul(&Tensor2::basis(Forest::unit(), y.clone()));
        rhs.add_term(x.clone(), y.clone(), Int::from(1));
        assert_eq!(lhs, rhs);
    }
}

// --- pairing extras ---------------------------------------------------------

#[test]
fn pairing_is_adjoint_to_grafting_through_gamma() {
    // Σ ⟨x₍₁₎, y⟩⟨x₍₂₎, z⟩ = ⟨x, B(y ⊗ z)⟩, an identity independent of
    // the recursion's own branching
    let mut p = Pairing::new();
    for total in 1..=4 {
        for x in enumerate_forests(total, false).unwrap() {
            for split_at in 0..total {
                for y in enumerate_forests(split_at, false).unwrap() {
                    for z in enumerate_forests(total - 1 - split_at, false).unwrap() {
                        let mut lhs = Int::from(0);
                        for ((a, b), k) in big_gamma(&LinComb::basis(x.clone())).iter() {
                            lhs += k * p.forests(a, &y) * p.forests(b, &z);
                        }
                        let grafted = Forest::tree(Tree::b_plus(y.clone(), z.clone()));
                        assert_eq!(lhs, p.forests(&x, &grafted), "on {x:?}, {y:?}, {z:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn bar_ops_unit_conventions() {
    let o = f("o");
    let left_unit = bar_op(
        &bigraft::BarTensor::basis(Forest::unit(), o.clone()).unwrap(),
        &bigraft::BarTensor::basis(o.clone(), Forest::unit()).unwrap(),
        BarOp::Graft(GraftOp::Right),
        BarRules::Coproduct,
    )
    .unwrap();
    // (1 ⊗ o) ≺ (o ⊗ 1) = (1·o) ⊗ (o ≺ 1) = o ⊗ o
    assert_eq!(
        left_unit,
        bigraft::BarTensor::basis(o.clone(), o.clone()).unwrap()
    );
    let zero = bar_op(
        &bigraft::BarTensor::basis(o.clone(), Forest::unit()).unwrap(),
        &bigraft::BarTensor::basis(Forest::unit(), o.clone()).unwrap(),
        BarOp::Graft(GraftOp::Right),
        BarRules::Coproduct,
    )
    .unwrap();
    // (o ⊗ 1) ≺ (1 ⊗ o) = (o·1) ⊗ (1 ≺ o) = 0
    assert!(zero.is_zero());
}

#[test]
fn deconcatenation_of_the_mirror() {
    // Δ_Ass(F†) = τ ∘ († ⊗ †) Δ_Ass(F)
    for n in 1..=4 {
        for forest in enumerate_forests(n, false).unwrap() {
            let direct = coproduct_ass(&LinComb::basis(forest.dagger()));
            let mut mirrored = Tensor2::zero();
            for ((a, b), k) in coproduct_ass(&LinComb::basis(forest.clone())).iter() {
                mirrored.add_term(b.dagger(), a.dagger(), k.clone());
            }
            assert_eq!(direct, mirrored, "on {forest:?}");
        }
    }
}
