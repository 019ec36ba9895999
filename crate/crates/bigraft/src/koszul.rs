//! Rewriting engine for the free nonsymmetric operad on `{≻, m, ≺}`.
//!
//! Monomials are planar binary trees with labeled internal nodes; leaves
//! are numbered `1..n` left to right. The twelve relations of the dual
//! operad orient into a terminating system under the degree-path order
//! with `≻ < m < ≺`. The printed quadratic rules alone are not confluent
//! (an overlap of `≺∘(≺,I)` and `≺∘(I,≺)` at a shared root is not
//! joinable), so the engine completes them: divergent overlaps are joined
//! by adding the oriented difference as a new rule, bounded by the
//! counting arity. Joinability of every critical monomial of the
//! completed system, together with the normal-form counts, is the
//! Koszulness certificate this kernel can check.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::graft::{graft_forest, GraftOp};
use crate::linalg::IntMatrix;
use crate::lincomb::Int;

/// Generator of the operad; the derived order is `≻ < m < ≺`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    Left,
    Mul,
    Right,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::Left, Gen::Mul, Gen::Right];

    pub fn name(self) -> &'static str {
        match self {
            Gen::Left => "succ",
            Gen::Mul => "m",
            Gen::Right => "prec",
        }
    }
}

/// A tree monomial of the free operad.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mono {
    Leaf,
    Node(Gen, Box<Mono>, Box<Mono>),
}

impl Mono {
    pub fn node(g: Gen, a: Mono, b: Mono) -> Mono {
        Mono::Node(g, Box::new(a), Box::new(b))
    }

    /// The weight-1 composite `g ∘ (x, y)` on leaves.
    pub fn binary(g: Gen) -> Mono {
        Mono::node(g, Mono::Leaf, Mono::Leaf)
    }

    /// Left comb `outer ∘ (inner, I)`.
    pub fn left_comb2(outer: Gen, inner: Gen) -> Mono {
        Mono::node(outer, Mono::binary(inner), Mono::Leaf)
    }

    /// Right comb `outer ∘ (I, inner)`.
    pub fn right_comb2(outer: Gen, inner: Gen) -> Mono {
        Mono::node(outer, Mono::Leaf, Mono::binary(inner))
    }

    pub fn arity(&self) -> usize {
        match self {
            Mono::Leaf => 1,
            Mono::Node(_, a, b) => a.arity() + b.arity(),
        }
    }

    pub fn weight(&self) -> usize {
        match self {
            Mono::Leaf => 0,
            Mono::Node(_, a, b) => 1 + a.weight() + b.weight(),
        }
    }

    /// Label words along the root-to-leaf paths, left to right.
    pub fn leaf_paths(&self) -> Vec<Vec<Gen>> {
        fn walk(m: &Mono, prefix: &mut Vec<Gen>, out: &mut Vec<Vec<Gen>>) {
            match m {
                Mono::Leaf => out.push(prefix.clone()),
                Mono::Node(g, a, b) => {
                    prefix.push(*g);
                    walk(a, prefix, out);
                    walk(b, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Evaluates the monomial on single-vertex arguments in the forest
    /// algebra.
    pub fn eval_on_leaves(&self) -> Forest {
        match self {
            Mono::Leaf => Forest::leaf(),
            Mono::Node(g, a, b) => {
                let x = a.eval_on_leaves();
                let y = b.eval_on_leaves();
                match g {
                    Gen::Mul => x.concat(y),
                    Gen::Left => graft_forest(&x, &y, GraftOp::Left).expect("nonempty"),
                    Gen::Right => graft_forest(&x, &y, GraftOp::Right).expect("nonempty"),
                }
            }
        }
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(m: &Mono, next: &mut usize, w: &mut fmt::Formatter<'_>) -> fmt::Result {
            match m {
                Mono::Leaf => {
                    let n = *next;
                    *next += 1;
                    write!(w, "{n}")
                }
                Mono::Node(g, a, b) => {
                    write!(w, "{}(", g.name())?;
                    go(a, next, w)?;
                    write!(w, ",")?;
                    go(b, next, w)?;
                    write!(w, ")")
                }
            }
        }
        go(self, &mut 1, w)
    }
}

/// Parses the textual monomial syntax, e.g. `m(succ(1,2),3)`. Leaves must
/// be numbered `1..n` left to right.
pub fn parse_monomial(text: &str) -> Result<Mono> {
    struct P<'a> {
        b: &'a [u8],
        pos: usize,
    }
    impl P<'_> {
        fn ws(&mut self) {
            while matches!(self.b.get(self.pos), Some(c) if c.is_ascii_whitespace()) {
                self.pos += 1;
            }
        }
        fn err(&self, msg: &str) -> Error {
            Error::Syntax {
                pos: self.pos,
                msg: msg.into(),
            }
        }
        fn mono(&mut self, next_leaf: &mut usize) -> Result<Mono> {
            self.ws();
            if matches!(self.b.get(self.pos), Some(c) if c.is_ascii_digit()) {
                let start = self.pos;
                while matches!(self.b.get(self.pos), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.b[start..self.pos]).expect("digits");
                let n: usize = text.parse().map_err(|_| Error::Syntax {
                    pos: start,
                    msg: "bad leaf number".into(),
                })?;
                if n != *next_leaf {
                    return Err(Error::Syntax {
                        pos: start,
                        msg: format!("expected leaf {next_leaf}, found {n}"),
                    });
                }
                *next_leaf += 1;
                return Ok(Mono::Leaf);
            }
            let gen = if self.b[self.pos..].starts_with(b"succ") {
                self.pos += 4;
                Gen::Left
            } else if self.b[self.pos..].starts_with(b"prec") {
                self.pos += 4;
                Gen::Right
            } else if self.b[self.pos..].starts_with(b"m") {
                self.pos += 1;
                Gen::Mul
            } else {
                return Err(self.err("expected 'm', 'succ', 'prec', or a leaf number"));
            };
            self.ws();
            if self.b.get(self.pos) != Some(&b'(') {
                return Err(self.err("expected '('"));
            }
            self.pos += 1;
            let a = self.mono(next_leaf)?;
            self.ws();
            if self.b.get(self.pos) != Some(&b',') {
                return Err(self.err("expected ','"));
            }
            self.pos += 1;
            let b = self.mono(next_leaf)?;
            self.ws();
            if self.b.get(self.pos) != Some(&b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
            Ok(Mono::node(gen, a, b))
        }
    }
    let mut p = P {
        b: text.as_bytes(),
        pos: 0,
    };
    let mut next_leaf = 1;
    let m = p.mono(&mut next_leaf)?;
    p.ws();
    if p.pos != p.b.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(m)
}

/// The degree-path order: compare the root-to-leaf label words leaf by
/// leaf, each pair of words first by length and then letterwise with
/// `≻ < m < ≺`. This order is stable under substitution, so a rewrite
/// anywhere inside a monomial strictly decreases it; the left comb is the
/// greatest monomial of its labeling.
pub fn monomial_cmp(a: &Mono, b: &Mono) -> Ordering {
    match a.arity().cmp(&b.arity()) {
        Ordering::Equal => {}
        other => return other,
    }
    for (pa, pb) in a.leaf_paths().into_iter().zip(b.leaf_paths()) {
        match pa.len().cmp(&pb.len()).then_with(|| pa.cmp(&pb)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

/// An integer combination of monomials.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpComb {
    terms: BTreeMap<Mono, Int>,
}

impl OpComb {
    pub fn zero() -> OpComb {
        OpComb::default()
    }

    pub fn basis(m: Mono) -> OpComb {
        let mut c = OpComb::zero();
        c.add_term(m, Int::one());
        c
    }

    pub fn add_term(&mut self, m: Mono, k: Int) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &Int)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::ops::Sub for OpComb {
    type Output = OpComb;
    fn sub(mut self, rhs: OpComb) -> OpComb {
        for (m, k) in rhs.terms {
            self.add_term(m, -k);
        }
        self
    }
}

impl fmt::Display for OpComb {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(w, "0");
        }
        for (i, (m, k)) in self.terms.iter().enumerate() {
            let neg = k < &Int::zero();
            if i == 0 {
                if neg {
                    write!(w, "-")?;
                }
            } else if neg {
                write!(w, " - ")?;
            } else {
                write!(w, " + ")?;
            }
            let mag = k.magnitude();
            if !mag.is_one() {
                write!(w, "{mag} ")?;
            }
            write!(w, "{m}")?;
        }
        Ok(())
    }
}

/// A rewriting rule `lhs → rhs` (`None` annihilates the match). The
/// pattern's leaves capture arbitrary subtrees; the seed rules have
/// weight-2 left-hand sides, completion rules may be bigger.
#[derive(Debug, Clone)]
pub struct Rule {
    pub name: String,
    pub lhs: Mono,
    pub rhs: Option<Mono>,
}

impl Rule {
    /// The relation `lhs − rhs` as a combination.
    pub fn relation(&self) -> OpComb {
        let mut c = OpComb::basis(self.lhs.clone());
        if let Some(rhs) = &self.rhs {
            c.add_term(rhs.clone(), -Int::one());
        }
        c
    }

    /// A seed rule: weight-2 left-hand side.
    pub fn is_quadratic(&self) -> bool {
        self.lhs.weight() == 2
    }
}

// (name, left-slot?, outer, inner, rhs as right comb)
type RuleRow = (&'static str, bool, Gen, Gen, Option<(Gen, Gen)>);

#[rustfmt::skip]
const QUADRATIC_TABLE: [RuleRow; 12] = [
    ("r1",  true,  Gen::Left,  Gen::Mul,   Some((Gen::Left,  Gen::Left))),
    ("r2",  true,  Gen::Mul,   Gen::Left,  Some((Gen::Left,  Gen::Mul))),
    ("r3",  true,  Gen::Right, Gen::Right, Some((Gen::Right, Gen::Mul))),
    ("r4",  true,  Gen::Right, Gen::Mul,   Some((Gen::Mul,   Gen::Right))),
    ("r5",  true,  Gen::Right, Gen::Left,  Some((Gen::Left,  Gen::Right))),
    ("r6",  true,  Gen::Mul,   Gen::Mul,   Some((Gen::Mul,   Gen::Mul))),
    ("r7",  true,  Gen::Left,  Gen::Left,  None),
    ("r8",  true,  Gen::Left,  Gen::Right, None),
    ("r9",  true,  Gen::Mul,   Gen::Right, None),
    ("r10", false, Gen::Right, Gen::Right, None),
    ("r11", false, Gen::Right, Gen::Left,  None),
    ("r12", false, Gen::Mul,   Gen::Left,  None),
];

/// The two fixed relation systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleSystem {
    /// The twelve dual-presentation rules.
    BgDual,
    /// The six orientations of the defining relations.
    Bg,
}

/// The printed quadratic rules of a system.
pub fn quadratic_rules(system: RuleSystem) -> Vec<Rule> {
    let take = match system {
        RuleSystem::BgDual => 12,
        RuleSystem::Bg => 6,
    };
    QUADRATIC_TABLE[..take]
        .iter()
        .map(|&(name, left_slot, outer, inner, rhs)| Rule {
            name: name.to_string(),
            lhs: if left_slot {
                Mono::left_comb2(outer, inner)
            } else {
                Mono::right_comb2(outer, inner)
            },
            rhs: rhs.map(|(o, i)| Mono::right_comb2(o, i)),
        })
        .collect()
}

/// Relation `rᵢ` of the dual presentation, `i` in `1..=12`.
pub fn bgdual_relation(i: usize) -> OpComb {
    quadratic_rules(RuleSystem::BgDual)[i - 1].relation()
}

/// Relation `rᵢ` of the defining presentation, `i` in `1..=6`.
pub fn bg_relation(i: usize) -> OpComb {
    quadratic_rules(RuleSystem::Bg)[i - 1].relation()
}

type Path = Vec<u8>;

fn match_captures<'a>(m: &'a Mono, pat: &Mono, out: &mut Vec<&'a Mono>) -> bool {
    match pat {
        Mono::Leaf => {
            out.push(m);
            true
        }
        Mono::Node(g, pa, pb) => match m {
            Mono::Node(h, a, b) if h == g => {
                match_captures(a, pa, out) && match_captures(b, pb, out)
            }
            _ => false,
        },
    }
}

fn instantiate(pat: &Mono, captures: &[&Mono], next: &mut usize) -> Mono {
    match pat {
        Mono::Leaf => {
            let m = captures[*next].clone();
            *next += 1;
            m
        }
        Mono::Node(g, a, b) => {
            let left = instantiate(a, captures, next);
            let right = instantiate(b, captures, next);
            Mono::node(*g, left, right)
        }
    }
}

/// All `(path, rule index)` sites where a rule matches, in preorder.
pub fn sites(m: &Mono, rules: &[Rule]) -> Vec<(Path, usize)> {
    fn walk(m: &Mono, path: &mut Path, rules: &[Rule], out: &mut Vec<(Path, usize)>) {
        if let Mono::Node(..) = m {
            for (i, rule) in rules.iter().enumerate() {
                let mut captures = Vec::new();
                if match_captures(m, &rule.lhs, &mut captures) {
                    out.push((path.clone(), i));
                }
            }
            let Mono::Node(_, a, b) = m else {
                unreachable!()
            };
            path.push(0);
            walk(a, path, rules, out);
            path.pop();
            path.push(1);
            walk(b, path, rules, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    walk(m, &mut Vec::new(), rules, &mut out);
    out
}

/// Rewrites the match of `rule` at `path`; `None` means the term
/// vanishes.
pub fn apply_rule(m: &Mono, path: &[u8], rule: &Rule) -> Option<Mono> {
    if path.is_empty() {
        let mut captures = Vec::new();
        assert!(
            match_captures(m, &rule.lhs, &mut captures),
            "rule does not match"
        );
        return rule
            .rhs
            .as_ref()
            .map(|rhs| instantiate(rhs, &captures, &mut 0));
    }
    let Mono::Node(g, x, y) = m else {
        panic!("path leaves the monomial")
    };
    let (step, rest) = (path[0], &path[1..]);
    if step == 0 {
        apply_rule(x, rest, rule).map(|nx| Mono::node(*g, nx, (**y).clone()))
    } else {
        apply_rule(y, rest, rule).map(|ny| Mono::node(*g, (**x).clone(), ny))
    }
}

fn nf_with(m: &Mono, rules: &[Rule]) -> Option<Mono> {
    let mut cur = m.clone();
    loop {
        let found = sites(&cur, rules);
        let Some((path, rule_idx)) = found.first() else {
            return Some(cur);
        };
        cur = apply_rule(&cur, path, &rules[*rule_idx])?;
    }
}

/// Arity bound for completion, normal-form counting, and the confluence
/// certificate.
pub const COMPLETION_ARITY: usize = 7;

fn complete(mut rules: Vec<Rule>, max_arity: usize) -> Vec<Rule> {
    let mut counter = 1usize;
    for arity in 4..=max_arity {
        let monomials = enumerate_monomials(arity);
        loop {
            let mut new_lhs: BTreeSet<Mono> = BTreeSet::new();
            let mut additions: Vec<Rule> = Vec::new();
            for m in &monomials {
                let found = sites(m, &rules);
                if found.len() < 2 {
                    continue;
                }
                let results: Vec<Option<Mono>> = found
                    .iter()
                    .map(|(path, idx)| {
                        apply_rule(m, path, &rules[*idx]).and_then(|x| nf_with(&x, &rules))
                    })
                    .collect();
                for i in 0..results.len() {
                    for j in i + 1..results.len() {
                        if results[i] == results[j] {
                            continue;
                        }
                        let (lhs, rhs) = orient(&results[i], &results[j]);
                        if new_lhs.insert(lhs.clone()) {
                            additions.push(Rule {
                                name: format!("c{counter}"),
                                lhs,
                                rhs,
                            });
                            counter += 1;
                        }
                    }
                }
            }
            if additions.is_empty() {
                break;
            }
            rules.extend(additions);
        }
    }
    rules
}

// orders a divergent pair of normal forms into a rule
fn orient(a: &Option<Mono>, b: &Option<Mono>) -> (Mono, Option<Mono>) {
    match (a, b) {
        (Some(x), None) => (x.clone(), None),
        (None, Some(y)) => (y.clone(), None),
        (Some(x), Some(y)) => match monomial_cmp(x, y) {
            Ordering::Greater => (x.clone(), Some(y.clone())),
            Ordering::Less => (y.clone(), Some(x.clone())),
            Ordering::Equal => unreachable!("distinct normal forms compare equal"),
        },
        (None, None) => unreachable!("equal results are not divergent"),
    }
}

/// The completed rules of a system, closed under overlaps up to
/// [`COMPLETION_ARITY`]. Computed once.
pub fn completed_rules(system: RuleSystem) -> &'static [Rule] {
    static BGDUAL: OnceLock<Vec<Rule>> = OnceLock::new();
    static BG: OnceLock<Vec<Rule>> = OnceLock::new();
    let cell = match system {
        RuleSystem::BgDual => &BGDUAL,
        RuleSystem::Bg => &BG,
    };
    cell.get_or_init(|| complete(quadratic_rules(system), COMPLETION_ARITY))
}

/// Fully rewrites a monomial with the leftmost-site strategy of the
/// completed system; `None` means it reduces to zero.
pub fn normal_form_mono(m: &Mono, system: RuleSystem) -> Option<Mono> {
    nf_with(m, completed_rules(system))
}

/// Rewrites every term to normal form.
pub fn normal_form(x: &OpComb, system: RuleSystem) -> OpComb {
    let mut out = OpComb::zero();
    for (m, k) in x.iter() {
        if let Some(nf) = normal_form_mono(m, system) {
            out.add_term(nf, k.clone());
        }
    }
    out
}

pub fn is_normal(m: &Mono, system: RuleSystem) -> bool {
    sites(m, completed_rules(system)).is_empty()
}

/// One rewriting run: each step records the rule fired and the state
/// after it (`None` once the term vanishes).
#[derive(Debug, Clone)]
pub struct Reduction {
    pub steps: Vec<(String, Option<Mono>)>,
}

impl Reduction {
    /// The end of the run: `None` when the term vanished.
    pub fn last(&self) -> Option<&Mono> {
        self.steps.last().and_then(|(_, m)| m.as_ref())
    }

    fn run(start: &Mono, first: &(Path, usize), rules: &[Rule]) -> Reduction {
        let mut steps = Vec::new();
        let mut cur = apply_rule(start, &first.0, &rules[first.1]);
        steps.push((rules[first.1].name.clone(), cur.clone()));
        while let Some(m) = &cur {
            let found = sites(m, rules);
            let Some((path, rule_idx)) = found.first() else {
                break;
            };
            let next = apply_rule(m, path, &rules[*rule_idx]);
            steps.push((rules[*rule_idx].name.clone(), next.clone()));
            cur = next;
        }
        Reduction { steps }
    }
}

/// A monomial on which two rule matches overlap, with both reduction
/// runs and the joinability verdict.
#[derive(Debug, Clone)]
pub struct CriticalPair {
    pub monomial: Mono,
    pub rule_names: (String, String),
    pub first: Reduction,
    pub second: Reduction,
    pub joinable: bool,
    /// Both overlapping rules are binomial seed rules; exactly eleven
    /// weight-3 monomials are of this kind.
    pub binomial_overlap: bool,
}

/// Enumerates every overlap of two rule matches on weight-3 monomials of
/// the completed system and reduces both ways.
pub fn critical_pairs(system: RuleSystem) -> Vec<CriticalPair> {
    let rules = completed_rules(system);
    let mut out = Vec::new();
    for m in enumerate_monomials(4) {
        let found = sites(&m, rules);
        for i in 0..found.len() {
            for j in i + 1..found.len() {
                let first = Reduction::run(&m, &found[i], rules);
                let second = Reduction::run(&m, &found[j], rules);
                let joinable = first.last() == second.last();
                let (ra, rb) = (&rules[found[i].1], &rules[found[j].1]);
                out.push(CriticalPair {
                    monomial: m.clone(),
                    rule_names: (ra.name.clone(), rb.name.clone()),
                    joinable,
                    binomial_overlap: ra.is_quadratic()
                        && rb.is_quadratic()
                        && ra.rhs.is_some()
                        && rb.rhs.is_some(),
                    first,
                    second,
                });
            }
        }
    }
    out
}

/// Local-confluence sweep: on every monomial of arity up to `max_arity`,
/// every one-step reduct normalizes to the same result. With termination
/// this certifies confluence on those arities.
pub fn confluence_certified(system: RuleSystem, max_arity: usize) -> bool {
    let rules = completed_rules(system);
    for arity in 2..=max_arity {
        for m in enumerate_monomials(arity) {
            let found = sites(&m, rules);
            if found.len() < 2 {
                continue;
            }
            let mut results = found.iter().map(|(path, idx)| {
                apply_rule(&m, path, &rules[*idx]).and_then(|x| nf_with(&x, rules))
            });
            let first = results.next().expect("nonempty");
            if results.any(|r| r != first) {
                return false;
            }
        }
    }
    true
}

/// All arity-`n` monomials (every shape, every labeling).
pub fn enumerate_monomials(n: usize) -> Vec<Mono> {
    if n == 1 {
        return vec![Mono::Leaf];
    }
    let mut out = Vec::new();
    for i in 1..n {
        for a in enumerate_monomials(i) {
            for b in enumerate_monomials(n - i) {
                for g in Gen::ALL {
                    out.push(Mono::node(g, a.clone(), b.clone()));
                }
            }
        }
    }
    out
}

/// Number of arity-`n` monomials in normal form, `n ≤` the completion
/// arity.
pub fn count_normal_forms(n: usize, system: RuleSystem) -> Result<usize> {
    if n == 0 || n > COMPLETION_ARITY {
        return Err(Error::bound(format!(
            "normal-form counting is bounded by arity {COMPLETION_ARITY}"
        )));
    }
    let rules = completed_rules(system);
    Ok(enumerate_monomials(n)
        .into_iter()
        .filter(|m| sites(m, rules).is_empty())
        .count())
}

/// The duality pairing on weight-2 composites: first-slot composites pair
/// diagonally with `+1`, second-slot composites with `−1`, everything
/// else with `0`.
pub fn weight3_pairing(x: &OpComb, y: &OpComb) -> Int {
    let sign = |m: &Mono| -> Int {
        match m {
            Mono::Node(_, a, b) => {
                assert_eq!(m.arity(), 3, "the pairing lives on arity-3 monomials");
                match (&**a, &**b) {
                    (Mono::Node(..), Mono::Leaf) => Int::one(),
                    (Mono::Leaf, Mono::Node(..)) => -Int::one(),
                    _ => unreachable!("arity 3"),
                }
            }
            Mono::Leaf => panic!("the pairing lives on arity-3 monomials"),
        }
    };
    let mut acc = Int::zero();
    for (m, a) in x.iter() {
        for (m2, b) in y.iter() {
            if m == m2 {
                acc += sign(m) * a * b;
            }
        }
    }
    acc
}

/// Result of [`annihilator_check`].
#[derive(Debug)]
pub struct AnnihilatorReport {
    /// Nonzero pairings `⟨rᵢ!, rⱼ⟩`, expected empty.
    pub failures: Vec<(String, String, Int)>,
    pub bg_span_dim: usize,
    pub bgdual_span_dim: usize,
    pub weight_space_dim: usize,
}

impl AnnihilatorReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty() && self.bg_span_dim + self.bgdual_span_dim == self.weight_space_dim
    }
}

/// Pairs every dual relation against every defining relation and tallies
/// the span dimensions.
pub fn annihilator_check() -> AnnihilatorReport {
    let mut failures = Vec::new();
    for i in 1..=12 {
        for j in 1..=6 {
            let v = weight3_pairing(&bgdual_relation(i), &bg_relation(j));
            if !v.is_zero() {
                failures.push((format!("r{i}!"), format!("r{j}"), v));
            }
        }
    }
    let basis = enumerate_monomials(3);
    let index: BTreeMap<&Mono, usize> = basis.iter().zip(0..).collect();
    let span_dim = |relations: Vec<OpComb>| -> usize {
        let mut m = IntMatrix::zeros(relations.len(), basis.len());
        for (i, rel) in relations.iter().enumerate() {
            for (mono, k) in rel.iter() {
                m.set(i, index[mono], k.clone());
            }
        }
        m.rank()
    };
    AnnihilatorReport {
        failures,
        bg_span_dim: span_dim((1..=6).map(bg_relation).collect()),
        bgdual_span_dim: span_dim((1..=12).map(bgdual_relation).collect()),
        weight_space_dim: basis.len(),
    }
}
