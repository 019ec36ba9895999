//! Subcommand dispatch. Exit codes: 0 success, 1 usage, 2 domain error,
//! 3 bound exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bigraft::error::{Error, Result};
use bigraft::forest::enumerate_forests;
use bigraft::homology::homology_dims;
use bigraft::hopf;
use bigraft::koszul::{self, RuleSystem};
use bigraft::lincomb::{int_to_json, Int};
use bigraft::series;
use bigraft::text::{forest_to_json, render};
use bigraft::LinComb;

use crate::expr::eval_str;

/// Exact algebra on planar rooted forests with l/r-decorated edges.
///
/// Forests are written in the grammar `o[l:o,r:o] o`; the empty forest is
/// `1`. Expressions combine literals with `+`, `-`, an integer
/// coefficient prefix, `*` (concatenation), `|>` (left graft), `<|`
/// (right graft), and composition `F @ (A1,...,An)`.
#[derive(Parser)]
#[command(name = "bigraft", version)]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum WhichCount {
    /// Trees and forests of the full basis.
    Bt,
    /// Trees and forests of the restricted dual basis.
    Dual,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SystemArg {
    /// The twelve-rule dual system.
    Bgdual,
    /// The six-rule orientation of the defining relations.
    Bg,
}

impl From<SystemArg> for RuleSystem {
    fn from(s: SystemArg) -> RuleSystem {
        match s {
            SystemArg::Bgdual => RuleSystem::BgDual,
            SystemArg::Bg => RuleSystem::Bg,
        }
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Evaluate an expression to a linear combination of forests.
    Eval { expr: String },
    /// Admissible-cut coproduct of an expression (or deconcatenation
    /// with --ass).
    Coproduct {
        expr: String,
        #[arg(long)]
        ass: bool,
    },
    /// Antipode of an expression.
    Antipode { expr: String },
    /// Mirror involution of an expression.
    Dagger { expr: String },
    /// Pairing of two expressions.
    Pair { f: String, g: String },
    /// Gram matrix of the pairing on the degree-n basis.
    Gram {
        #[arg(long)]
        degree: usize,
    },
    /// Operad composition F ∘ (A1, ..., An).
    Compose {
        f: String,
        #[arg(required = true)]
        args: Vec<String>,
    },
    /// Counting sequences up to a degree.
    Count {
        #[arg(long, value_enum)]
        which: WhichCount,
        #[arg(long)]
        upto: usize,
    },
    /// Verify the compositional-inverse and cubic series identities.
    SeriesCheck {
        #[arg(long)]
        order: usize,
    },
    /// Normal form of an operad monomial, e.g. `m(succ(1,2),3)`.
    Rewrite {
        expr: String,
        #[arg(long, value_enum, default_value = "bgdual")]
        system: SystemArg,
    },
    /// List every critical monomial with both reduction runs.
    Confluence,
    /// Count the arity-n monomials in normal form.
    NormalCount {
        #[arg(long)]
        arity: usize,
        #[arg(long, value_enum)]
        system: SystemArg,
    },
    /// Component dimensions, ranks, and homology at a weight.
    Homology {
        #[arg(long)]
        weight: usize,
    },
    /// List the degree-n basis forests.
    Enumerate {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        dual: bool,
    },
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } => 1,
        Error::Validity(_) | Error::Domain(_) | Error::ArityMismatch { .. } => 2,
        Error::BoundExceeded(_) => 3,
    }
}

fn dagger(x: &LinComb) -> LinComb {
    x.map_basis(|f| LinComb::basis(f.dagger()))
}

pub fn run(cli: Cli) -> Result<()> {
    let json = cli.json;
    match cli.command {
        Command::Eval { expr } => {
            let v = eval_str(&expr)?;
            emit(
                json,
                || println!("{v}"),
                || json!({ "result": v.to_json() }),
            );
        }
        Command::Coproduct { expr, ass } => {
            let v = eval_str(&expr)?;
            let t = if ass {
                hopf::coproduct_ass(&v)
            } else {
                hopf::coproduct(&v)
            };
            emit(
                json,
                || println!("{t}"),
                || json!({ "coproduct": t.to_json() }),
            );
        }
        Command::Antipode { expr } => {
            let v = hopf::antipode(&eval_str(&expr)?);
            emit(
                json,
                || println!("{v}"),
                || json!({ "antipode": v.to_json() }),
            );
        }
        Command::Dagger { expr } => {
            let v = dagger(&eval_str(&expr)?);
            emit(
                json,
                || println!("{v}"),
                || json!({ "dagger": v.to_json() }),
            );
        }
        Command::Pair { f, g } => {
            let value = hopf::Pairing::new().lincombs(&eval_str(&f)?, &eval_str(&g)?);
            emit(
                json,
                || println!("{value}"),
                || json!({ "pairing": int_to_json(&value) }),
            );
        }
        Command::Gram { degree } => {
            let basis = enumerate_forests(degree, false)?;
            let m = hopf::gram_matrix(degree)?;
            emit(
                json,
                || {
                    for i in 0..m.rows() {
                        let row: Vec<String> =
                            (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
                        println!("{}", row.join(" "));
                    }
                },
                || {
                    json!({
                        "degree": degree,
                        "basis": basis.iter().map(render).collect::<Vec<_>>(),
                        "matrix": m.to_json(),
                    })
                },
            );
        }
        Command::Compose { f, args } => {
            let f = bigraft::operad::OperadElt::new(eval_str(&f)?)?;
            let args = args
                .iter()
                .map(|a| bigraft::operad::OperadElt::new(eval_str(a)?))
                .collect::<Result<Vec<_>>>()?;
            let v = bigraft::operad::compose(&f, &args)?.value().clone();
            emit(
                json,
                || println!("{v}"),
                || json!({ "result": v.to_json() }),
            );
        }
        Command::Count { which, upto } => {
            let (trees, forests) = match which {
                WhichCount::Bt => (series::tree_counts(upto)?, series::forest_counts(upto)?),
                WhichCount::Dual => (
                    series::dual_tree_counts(upto)?,
                    series::dual_forest_counts(upto)?,
                ),
            };
            emit(
                json,
                || {
                    println!(
                        "{}",
                        forests
                            .iter()
                            .map(Int::to_string)
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                },
                || {
                    json!({
                        "trees": trees.iter().map(int_to_json).collect::<Vec<_>>(),
                        "forests": forests.iter().map(int_to_json).collect::<Vec<_>>(),
                    })
                },
            );
        }
        Command::SeriesCheck { order } => {
            let inverse = series::compose_identity_holds(order)?;
            let cubic = series::cubic_equation_holds(order)?;
            emit(
                json,
                || {
                    println!("inverse identity up to order {order}: {}", verdict(inverse));
                    println!("cubic equation up to order {order}: {}", verdict(cubic));
                },
                || json!({ "order": order, "inverse_identity": inverse, "cubic_equation": cubic }),
            );
            if !(inverse && cubic) {
                return Err(Error::domain("series identity violated"));
            }
        }
        Command::Rewrite { expr, system } => {
            let m = koszul::parse_monomial(&expr)?;
            let nf = koszul::normal_form(&koszul::OpComb::basis(m.clone()), system.into());
            emit(
                json,
                || println!("{nf}"),
                || {
                    json!({
                        "input": m.to_string(),
                        "normal_form": nf
                            .iter()
                            .map(|(mono, k)| json!([mono.to_string(), int_to_json(k)]))
                            .collect::<Vec<_>>(),
                    })
                },
            );
        }
        Command::Confluence => {
            let pairs = koszul::critical_pairs(RuleSystem::BgDual);
            let all_joinable = pairs.iter().all(|p| p.joinable);
            let binomial = pairs.iter().filter(|p| p.binomial_overlap).count();
            emit(
                json,
                || {
                    for p in &pairs {
                        println!(
                            "critical monomial {} (rules {}, {}){}",
                            p.monomial,
                            p.rule_names.0,
                            p.rule_names.1,
                            if p.binomial_overlap {
                                ""
                            } else {
                                " [monomial rule]"
                            }
                        );
                        println!("  first:  {}", chain(&p.first));
                        println!("  second: {}", chain(&p.second));
                        println!(
                            "  verdict: {}",
                            if p.joinable {
                                "joinable"
                            } else {
                                "NOT JOINABLE"
                            }
                        );
                    }
                    println!(
                        "{} critical monomials ({binomial} from binomial overlaps), all joinable: {}",
                        pairs.len(),
                        verdict(all_joinable)
                    );
                },
                || {
                    json!({
                        "critical_monomials": pairs
                            .iter()
                            .map(|p| {
                                json!({
                                    "monomial": p.monomial.to_string(),
                                    "rules": [p.rule_names.0, p.rule_names.1],
                                    "first": chain_json(&p.first),
                                    "second": chain_json(&p.second),
                                    "joinable": p.joinable,
                                    "binomial_overlap": p.binomial_overlap,
                                })
                            })
                            .collect::<Vec<_>>(),
                        "all_joinable": all_joinable,
                    })
                },
            );
            if !all_joinable {
                return Err(Error::domain("a critical monomial is not joinable"));
            }
        }
        Command::NormalCount { arity, system } => {
            let count = koszul::count_normal_forms(arity, system.into())?;
            emit(
                json,
                || println!("{count}"),
                || json!({ "arity": arity, "count": count }),
            );
        }
        Command::Homology { weight } => {
            let report = homology_dims(weight)?;
            emit(
                json,
                || {
                    for (k, dim, rank) in &report.components {
                        println!("arity {k}: dim {dim}, rank d = {rank}");
                    }
                    for (n, k, dim) in &report.homology {
                        println!("H_{n} (arity {k}): dim {dim}");
                    }
                },
                || {
                    json!({
                        "weight": report.weight,
                        "components": report.components
                            .iter()
                            .map(|(k, dim, rank)| json!({ "arity": k, "dim": dim, "rank": rank }))
                            .collect::<Vec<_>>(),
                        "homology": report.homology
                            .iter()
                            .map(|(n, k, dim)| json!({ "n": n, "arity": k, "dim": dim }))
                            .collect::<Vec<_>>(),
                    })
                },
            );
        }
        Command::Enumerate { degree, dual } => {
            let forests = enumerate_forests(degree, dual)?;
            emit(
                json,
                || {
                    for f in &forests {
                        println!("{}", render(f));
                    }
                },
                || Value::Array(forests.iter().map(forest_to_json).collect()),
            );
        }
    }
    Ok(())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

fn chain(r: &koszul::Reduction) -> String {
    r.steps
        .iter()
        .map(|(rule, m)| {
            let state = m.as_ref().map_or("0".to_string(), |m| m.to_string());
            format!("-[{rule}]-> {state}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn chain_json(r: &koszul::Reduction) -> Value {
    Value::Array(
        r.steps
            .iter()
            .map(|(rule, m)| json!([rule, m.as_ref().map_or("0".to_string(), |m| m.to_string())]))
            .collect(),
    )
}

fn emit(json: bool, text: impl FnOnce(), payload: impl FnOnce() -> Value) {
    if json {
        println!("{}", payload());
    } else {
        text();
    }
}
