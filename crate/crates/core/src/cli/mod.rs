//! Command-line driver. Every subcommand prints one JSON report with sorted
//! keys: `{"schema", "command", "inputs", "results", "conventions",
//! "warnings"}`. Exit codes: 0 success, 1 usage or input errors, 2 domain
//! errors.

pub mod input;
mod output;

use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dcritical::{
    clean_intersection_data, cocycle_check, embedding_quadform, maslov_consistency, polarization_model,
};
use crate::error::{Error, Result};
use crate::monodromy::{
    eigen_decompose, eigen_decompose_numeric, in_section, lattice_reduce, log_monodromy, rh_inverse, MonodromyData,
    DEFAULT_ORDER_BOUND,
};
use crate::parse::{parse_poly, parse_rational_literal};
use crate::poly::{Monomial, Poly};
use crate::scalar::Scalar;
use crate::symplectic::{back_and_forth_check, chain_composition_check, chain_map, maslov_form};
use crate::torsor::{QuadForm, TorsorElement};
use crate::vanishing::{
    milnor_algebra_with_bound, pq_element, pv_data, qh_weights, spectrum, stabilize, thom_sebastiani,
    thom_sebastiani_poly, twisted_dr_operator_at, vanishing_monodromy, OrderParam, DEFAULT_DEGREE_BOUND,
};
use input::MonodromyInput;
use output::{matrix_json, monodromy_json, rationals_json, scalar_json, torsor_json};

pub const SCHEMA: &str = "dtcalc/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Convention {
    /// `T = exp(-2πi r)`
    Standard,
    /// `T = exp(2πi r)`
    Conjugate,
}

#[derive(Parser, Debug)]
#[command(name = "dtcalc", version, about = "Exact local DT data: Maslov forms, torsors, monodromy, spectra")]
struct Cli {
    /// Monodromy sign convention used for every reported exponent.
    #[arg(long, global = true, value_enum, default_value_t = Convention::Standard)]
    convention: Convention,
    /// JSON array of argument lists, evaluated in parallel.
    #[arg(long, global = true)]
    batch: Option<String>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Milnor number and monomial basis of the local algebra.
    Milnor {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        bound: usize,
    },
    /// Spectrum by the weight formula and by the twisted de Rham operator.
    Spectrum {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "1/2")]
        lambda: String,
    },
    /// Vanishing monodromy, optionally with the PV sign twist.
    Monodromy {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        pv: bool,
    },
    /// Thom–Sebastiani sum of two potentials in disjoint variables.
    Ts {
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Stabilize by z₁² + … + z_k².
    Stabilize {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "1/2")]
        lambda: String,
    },
    /// Chain maps, Maslov forms and composition checks.
    Maslov {
        #[arg(long)]
        space: String,
        #[arg(long)]
        chain: String,
        /// Odd 1-based index for the split law.
        #[arg(long)]
        split: Option<usize>,
        /// 1-based index k for deleting L_{k-1}, L_k, L_{k-1}.
        #[arg(long)]
        back_forth: Option<usize>,
    },
    /// Riemann–Hilbert dictionary for a monodromy.
    Rh {
        #[arg(long)]
        monodromy: String,
        #[arg(long)]
        roundtrip: bool,
        /// Also report floating-point eigenvalues.
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = DEFAULT_ORDER_BOUND)]
        bound: u32,
    },
    /// Chart change through a generating function h(l, m).
    Chart {
        #[arg(long)]
        h: String,
        #[arg(long, value_delimiter = ',')]
        lvars: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        mvars: Vec<String>,
    },
    /// Determinant data of a clean intersection.
    Clean {
        #[arg(long)]
        data: String,
    },
    /// Sign of a loop of torsor transitions.
    Cocycle {
        #[arg(long = "loop")]
        loop_file: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Milnor { .. } => "milnor",
            Command::Spectrum { .. } => "spectrum",
            Command::Monodromy { .. } => "monodromy",
            Command::Ts { .. } => "ts",
            Command::Stabilize { .. } => "stabilize",
            Command::Maslov { .. } => "maslov",
            Command::Rh { .. } => "rh",
            Command::Chart { .. } => "chart",
            Command::Clean { .. } => "clean",
            Command::Cocycle { .. } => "cocycle",
        }
    }
}

/// Source of standard input for `--poly -`.
pub type StdinReader<'a> = &'a (dyn Fn() -> std::io::Result<String> + Sync);

struct Outcome {
    inputs: Value,
    results: Value,
    warnings: Vec<String>,
}

struct Ctx<'a> {
    convention: Convention,
    stdin: StdinReader<'a>,
}

impl Ctx<'_> {
    fn text(&self, arg: &str) -> Result<String> {
        if arg == "-" {
            let s = (self.stdin)().map_err(|e| input::schema("", format!("cannot read standard input: {e}")))?;
            Ok(s.trim().to_string())
        } else {
            Ok(arg.to_string())
        }
    }

    fn poly(&self, arg: &str) -> Result<(String, Poly)> {
        let text = self.text(arg)?;
        let p = parse_poly(&text, None)?;
        Ok((text, p))
    }

    fn monodromy(&self, m: &MonodromyData) -> Value {
        match self.convention {
            Convention::Standard => monodromy_json(m),
            Convention::Conjugate => monodromy_json(&m.conjugate()),
        }
    }
}

/// Run the CLI on `argv` (including the program name). Returns the exit code
/// and the text for standard output.
pub fn run(argv: &[String], stdin: StdinReader<'_>) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => (1, render(&usage_error(None, &e.to_string()))),
            };
        }
    };
    let ctx = Ctx { convention: cli.convention, stdin };
    match (cli.batch, cli.command) {
        (Some(path), None) => run_batch(&path, &ctx),
        (Some(_), Some(_)) => (1, render(&usage_error(None, "--batch cannot be combined with a subcommand"))),
        (None, Some(cmd)) => {
            let (code, v) = run_command(&cmd, &ctx);
            (code, render(&v))
        }
        (None, None) => (1, render(&usage_error(None, "no subcommand given; see --help"))),
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn usage_error(command: Option<&str>, message: &str) -> Value {
    json!({
        "schema": SCHEMA,
        "command": command,
        "error": {"code": "UsageError", "message": message.trim()},
    })
}

fn conventions(c: Convention) -> Value {
    json!({
        "monodromy": match c {
            Convention::Standard => "T = exp(-2*pi*i*r)",
            Convention::Conjugate => "T = exp(2*pi*i*r)",
        },
        "section": "-1 < Re r <= 0",
        "symplectic_form": "[[0,-I],[I,0]]",
        "tq_base_point": "1",
    })
}

fn run_command(cmd: &Command, ctx: &Ctx<'_>) -> (i32, Value) {
    match dispatch(cmd, ctx) {
        Ok(out) => (
            0,
            json!({
                "schema": SCHEMA,
                "command": cmd.name(),
                "inputs": out.inputs,
                "results": out.results,
                "conventions": conventions(ctx.convention),
                "warnings": out.warnings,
            }),
        ),
        Err(e) => {
            let mut error = json!({"code": e.code(), "message": e.to_string()});
            if let Error::Schema { pointer, .. } = &e {
                error["pointer"] = json!(pointer);
            }
            let code = if e.is_input_error() { 1 } else { 2 };
            (code, json!({"schema": SCHEMA, "command": cmd.name(), "error": error}))
        }
    }
}

fn run_batch(path: &str, ctx: &Ctx<'_>) -> (i32, String) {
    let entries = match input::read_data_file(path).and_then(|v| {
        input::array(&v, "")?.iter().enumerate().map(|(i, e)| input::strings(e, &format!("/{i}"))).collect::<Result<Vec<_>>>()
    }) {
        Ok(e) => e,
        Err(e) => {
            let v = json!({"schema": SCHEMA, "command": "batch", "error": {"code": e.code(), "message": e.to_string()}});
            return (1, render(&v));
        }
    };
    let outcomes: Vec<(i32, Value)> = entries
        .par_iter()
        .map(|args| {
            let argv: Vec<String> = std::iter::once("dtcalc".to_string()).chain(args.iter().cloned()).collect();
            match Cli::try_parse_from(&argv) {
                Ok(Cli { command: Some(cmd), batch: None, convention }) => {
                    run_command(&cmd, &Ctx { convention, stdin: ctx.stdin })
                }
                Ok(_) => (1, usage_error(None, "batch entries need a subcommand and no --batch")),
                Err(e) => (1, usage_error(None, &e.to_string())),
            }
        })
        .collect();
    let code = outcomes.iter().map(|(c, _)| *c).max().unwrap_or(0);
    let reports: Vec<Value> = outcomes.into_iter().map(|(_, v)| v).collect();
    (code, render(&json!({"schema": SCHEMA, "command": "batch", "results": reports})))
}

fn monomial_string(vars: &[String], m: &Monomial) -> String {
    Poly::monomial(vars, m.clone(), Scalar::one()).render()
}

fn rational_arg(text: &str) -> Result<crate::scalar::Rational> {
    parse_rational_literal(text)
}

fn dispatch(cmd: &Command, ctx: &Ctx<'_>) -> Result<Outcome> {
    match cmd {
        Command::Milnor { poly, bound } => {
            let (text, f) = ctx.poly(poly)?;
            let alg = milnor_algebra_with_bound(&f, *bound)?;
            let basis: Vec<String> = alg.basis().iter().map(|m| monomial_string(f.vars(), m)).collect();
            Ok(Outcome {
                inputs: json!({"poly": text, "bound": bound}),
                results: json!({"mu": alg.mu(), "basis": basis, "variables": f.vars()}),
                warnings: vec![],
            })
        }
        Command::Spectrum { poly, lambda } => {
            let (text, f) = ctx.poly(poly)?;
            let lam = rational_arg(lambda)?;
            let s = spectrum(&f)?;
            let d = twisted_dr_operator_at(&f, &lam)?;
            let shift = crate::scalar::rat(1, 2) - &lam;
            let triangular = (0..d.rows()).all(|i| (0..i).all(|j| d[(i, j)].is_zero()));
            let mut diag_r: Vec<_> = (0..d.rows()).filter_map(|i| d[(i, i)].as_rational().cloned()).collect();
            diag_r.sort();
            let expected: Vec<_> = s.values().iter().map(|a| a + &shift).collect();
            let weights = qh_weights(&f).unwrap_or_default();
            Ok(Outcome {
                inputs: json!({"poly": text, "lambda": crate::scalar::fmt_rational(&lam)}),
                results: json!({
                    "spectrum": s.to_strings(),
                    "mu": s.len(),
                    "weights": rationals_json(&weights),
                    "symmetric": s.is_symmetric(),
                    "twisted_dr_operator": matrix_json(&d),
                    "twisted_dr_eigenvalues": rationals_json(&diag_r),
                    "oracle_agrees": triangular && diag_r.len() == d.rows() && diag_r == expected,
                }),
                warnings: vec![],
            })
        }
        Command::Monodromy { poly, pv } => {
            let (text, f) = ctx.poly(poly)?;
            let t = vanishing_monodromy(&f)?;
            let mut results = json!({"monodromy": ctx.monodromy(&t), "ambient_dim": f.nvars()});
            if *pv {
                let data = pv_data(&f)?;
                results["pv_monodromy"] = ctx.monodromy(data.monodromy());
                results["twist_applied"] = json!(data.twist_applied());
            }
            Ok(Outcome { inputs: json!({"poly": text, "pv": pv}), results, warnings: vec![] })
        }
        Command::Ts { f, g } => {
            let (ft, fp) = ctx.poly(f)?;
            let (gt, gp) = ctx.poly(g)?;
            let h = thom_sebastiani_poly(&fp, &gp);
            let mu = |p: &Poly| milnor_algebra_with_bound(p, DEFAULT_DEGREE_BOUND).map(|a| a.mu());
            let (mf, mg, mh) = (mu(&fp)?, mu(&gp)?, mu(&h)?);
            let mut results = json!({
                "sum": h.render(),
                "mu": {"f": mf, "g": mg, "sum": mh},
                "mu_multiplicative": mf * mg == mh,
            });
            let mut warnings = vec![];
            match (pv_data(&fp), pv_data(&gp), pv_data(&h)) {
                (Ok(a), Ok(b), Ok(c)) => {
                    let (sa, sb, sc) = (a.spectrum().unwrap(), b.spectrum().unwrap(), c.spectrum().unwrap());
                    let combined = thom_sebastiani(&a, &b);
                    results["spectrum"] = json!({"f": sa.to_strings(), "g": sb.to_strings(), "sum": sc.to_strings()});
                    results["spectrum_additive"] = json!(&sa.minkowski(sb) == sc);
                    results["pv_monodromy"] = ctx.monodromy(c.monodromy());
                    results["monodromy_multiplicative"] = json!(combined.monodromy() == c.monodromy());
                }
                _ => warnings.push("spectra skipped: a potential is not quasi-homogeneous".to_string()),
            }
            Ok(Outcome { inputs: json!({"f": ft, "g": gt}), results, warnings })
        }
        Command::Stabilize { poly, rank, lambda } => {
            let (text, f) = ctx.poly(poly)?;
            let lam = OrderParam { lambda: rational_arg(lambda)? };
            let q = QuadForm::sum_of_squares(*rank);
            let data = pv_data(&f)?;
            let stab = stabilize(&data, &q, &lam)?;
            let zs: Vec<String> = (1..=*rank).map(|k| format!("z{k}")).collect();
            let q_poly = q.to_potential(&zs)?;
            let direct_poly = if *rank == 0 { f.clone() } else { thom_sebastiani_poly(&f, &q_poly) };
            let mut direct = pv_data(&direct_poly)?;
            if *rank > 0 {
                direct = direct.with_torsor(pq_element(&q)?);
            }
            let steps: Vec<Value> = stab
                .steps()
                .iter()
                .map(|s| json!({"rank": s.rank, "lambda": crate::scalar::fmt_rational(&s.lambda), "tq_scale": crate::scalar::fmt_rational(&s.tq_scale)}))
                .collect();
            let spectrum_stab = stab.spectrum().unwrap();
            Ok(Outcome {
                inputs: json!({"poly": text, "rank": rank, "lambda": crate::scalar::fmt_rational(&lam.lambda)}),
                results: json!({
                    "stabilized": direct_poly.render(),
                    "spectrum": data.spectrum().unwrap().to_strings(),
                    "stabilized_spectrum": spectrum_stab.to_strings(),
                    "direct_spectrum": direct.spectrum().unwrap().to_strings(),
                    "spectrum_matches_direct": Some(spectrum_stab) == direct.spectrum(),
                    "pv_monodromy": ctx.monodromy(data.monodromy()),
                    "stabilized_pv_monodromy": ctx.monodromy(stab.monodromy()),
                    "torsor": stab.torsor().map(torsor_json),
                    "steps": steps,
                    "invariant": stab.twisted_eq(&direct) && stab.monodromy() == data.monodromy(),
                }),
                warnings: vec![],
            })
        }
        Command::Maslov { space, chain, split, back_forth } => {
            let sv = input::read_data_file(space)?;
            let cv = input::read_data_file(chain)?;
            let sp = Arc::new(input::space(&sv, "")?);
            let ls = input::chain(&cv, &sp)?;
            let c = chain_map(&ls)?;
            let mut results = json!({
                "length": ls.len(),
                "chain_map": matrix_json(c.matrix()),
                "dual": c.dual_flag(),
            });
            if ls.len() == 3 {
                results["maslov_form"] = matrix_json(maslov_form(&ls[0], &ls[1], &ls[2])?.matrix());
            }
            if let Some(k) = split {
                results["split_law"] = json!({"index": k, "holds": chain_composition_check(&ls, *k)?});
            }
            if let Some(k) = back_forth {
                results["back_and_forth"] = json!({"index": k, "holds": back_and_forth_check(&ls, *k)?});
            }
            Ok(Outcome {
                inputs: json!({"space": sv, "chain": cv, "split": split, "back_forth": back_forth}),
                results,
                warnings: vec![],
            })
        }
        Command::Rh { monodromy, roundtrip, numeric, bound } => {
            let v = input::read_data_file(monodromy)?;
            let mut results = json!({});
            let mut warnings = vec![];
            let data = match input::monodromy(&v)? {
                MonodromyInput::Data(d) => d,
                MonodromyInput::Matrix(t) => {
                    if *numeric {
                        let eig = eigen_decompose_numeric(&t)?;
                        results["numeric_eigenvalues"] = eig
                            .iter()
                            .map(|e| {
                                json!({
                                    "value": format!("{:.12}{:+.12}i", e.value.re, e.value.im),
                                    "exponent": format!("{:.12}", e.exponent),
                                    "multiplicity": e.multiplicity,
                                    "on_unit_circle": e.on_unit_circle,
                                })
                            })
                            .collect();
                        warnings.push("numeric eigenvalues are floating point approximations".to_string());
                    }
                    let d = eigen_decompose(&t, *bound)?;
                    results["order"] = json!(d.order);
                    results["realization"] = matrix_json(&d.realization);
                    results["conjugator"] = matrix_json(&d.conjugator);
                    results["reconstructs"] = json!(d.reconstruct()? == t);
                    d.data
                }
            };
            let module = rh_inverse(&data);
            results["monodromy"] = ctx.monodromy(&data);
            results["log_monodromy"] = matrix_json(&log_monodromy(&data));
            results["exponents_in_section"] = json!(data.exponents().iter().all(in_section));
            if *roundtrip {
                let back = lattice_reduce(&module)?;
                results["roundtrip"] = json!({"monodromy": ctx.monodromy(&back), "equal": back == data});
            }
            Ok(Outcome { inputs: json!({"monodromy": v, "roundtrip": roundtrip, "numeric": numeric}), results, warnings })
        }
        Command::Chart { h, lvars, mvars } => {
            let all: Vec<String> = lvars.iter().chain(mvars).cloned().collect();
            let text = ctx.text(h)?;
            let hp = parse_poly(&text, Some(&all))?;
            let emb = embedding_quadform(&hp, lvars, mvars)?;
            let mut results = json!({
                "elimination": emb.elimination.iter().map(|p| p.render()).collect::<Vec<_>>(),
                "f": emb.f.render(),
                "q_xi": matrix_json(emb.q_xi.matrix()),
                "hessian": matrix_json(&emb.hessian),
            });
            let mut warnings = vec![
                "critical locus evaluated at the reduced origin only".to_string(),
                "orientation data of M∩L differs from that of L∩M by a sign; reported for L∩M".to_string(),
            ];
            if lvars.len() == mvars.len() {
                let triple = polarization_model(&hp, lvars, mvars)?;
                let q = maslov_form(&triple.t_m, &triple.t_pi1, &triple.t_pi2)?;
                results["maslov_form"] = matrix_json(q.matrix());
                results["maslov_consistency"] = json!(maslov_consistency(&hp, lvars, mvars, &triple)?);
            } else {
                warnings.push("maslov consistency needs as many l as m variables".to_string());
            }
            let q_poly = emb.q_xi.to_potential(mvars)?;
            match (spectrum(&emb.h), spectrum(&emb.f), spectrum(&q_poly)) {
                (Ok(sh), Ok(sf), Ok(sq)) => {
                    results["spectrum"] = json!({"h": sh.to_strings(), "f": sf.to_strings(), "q_xi": sq.to_strings()});
                    results["spectrum_consistent"] = json!(sh == sf.minkowski(&sq));
                }
                _ => warnings.push("spectra skipped: a potential is not quasi-homogeneous".to_string()),
            }
            Ok(Outcome {
                inputs: json!({"h": text, "lvars": lvars, "mvars": mvars}),
                results,
                warnings,
            })
        }
        Command::Clean { data } => {
            let v = input::read_data_file(data)?;
            let c = input::clean(&v)?;
            let s = clean_intersection_data(&c.tl, &c.tm, &c.intersection)?;
            let swapped = clean_intersection_data(&c.tm, &c.tl, &c.intersection)?;
            let torsor = TorsorElement::base_point(s.clone(), "Q");
            Ok(Outcome {
                inputs: json!({"data": v}),
                results: json!({
                    "scalar": scalar_json(&s),
                    "scalar_swapped": scalar_json(&swapped),
                    "torsor": torsor_json(&torsor),
                    "intersection_dim": c.intersection.rows(),
                }),
                warnings: vec!["scalar is reported for L∩M; scalar_swapped is the M∩L value".to_string()],
            })
        }
        Command::Cocycle { loop_file } => {
            let v = input::read_data_file(loop_file)?;
            let lp = input::chart_loop(&v)?;
            let sign = cocycle_check(&lp)?;
            let fibers: serde_json::Map<String, Value> = lp.fibers.iter().map(|(k, t)| (k.clone(), scalar_json(t))).collect();
            let transitions: Vec<Value> = lp
                .transitions
                .iter()
                .map(|t| json!({"from": t.from, "to": t.to, "factor": t.factor.to_string()}))
                .collect();
            Ok(Outcome {
                inputs: json!({"loop": v}),
                results: json!({"sign": sign, "consistent": sign == 1, "fibers": fibers, "transitions": transitions}),
                warnings: vec![],
            })
        }
    }
}
