//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the exit code with the text for stdout and stderr,
//! so the binary and the tests share one code path.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::autgrp::{WeylAut, ZAut};
use crate::checks::{run_suite, Suite};
use crate::expr::{self, ParseError};
use crate::gfq::FieldSpec;
use crate::resmap::{res, res_inverse};
use crate::ring::PolyRing;
use crate::theta::{theta, ThetaContext};
use crate::weyl::check_power_identity;

#[derive(Parser, Debug)]
#[command(name = "weylres", version, about = "Weyl algebra p-th powers, the map θ and the restriction map to the centre")]
pub struct Cli {
    /// Field, e.g. `p=3` or `p=2,n=2,mod=g^2+g+1`.
    #[arg(long, global = true, default_value = "p=2")]
    pub field: FieldSpec,
    /// Seed for `fuzz`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of cases for `fuzz`.
    #[arg(long, global = true, default_value_t = 100)]
    pub count: usize,
    /// Emit one JSON object instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check `(d + f)^p = d^p + f^(p-1) + f^p` by brute force; `f` in `x` (and `t`).
    PowCheck { f: String },
    /// `θ(f) = f^p + f^(p-1)`.
    Theta { f: String },
    /// The `f` with `θ(f) = g`, for `g` in `K[x^p]`.
    ThetaInv { g: String },
    /// Restriction of an automorphism of `A_1` to the centre.
    Res { aut: String },
    /// Automorphism of `A_1` restricting to a given Jacobian-one automorphism of `Z`.
    ResInv { aut: String },
    /// Factor an automorphism of `Z` into generators.
    Decompose { aut: String },
    /// Composition `a ∘ b` (on `A_1` if the input mentions `x` or `d`, else on `Z`).
    Compose { a: String, b: String },
    /// Jacobian of an endomorphism of `Z`.
    Jacobian { aut: String },
    /// Run a randomised suite: thm17, thm17-ring, cor22, theta-rt, res-rt,
    /// res2-affine, resn-affine, relations.
    Fuzz { suite: Suite },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    ok: bool,
    result: String,
    checks: Value,
}

impl Reply {
    fn ok(result: String) -> Self {
        Reply {
            ok: true,
            result,
            checks: json!({}),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok(reply) => {
            let stdout = if cli.json {
                let doc = json!({
                    "kind": kind(&cli.command),
                    "field": cli.field.to_string(),
                    "result": reply.result,
                    "checks": reply.checks,
                });
                format!("{doc}\n")
            } else {
                format!("{}\n", reply.result)
            };
            Outcome {
                code: if reply.ok { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(message) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
    }
}

fn kind(c: &Command) -> &'static str {
    match c {
        Command::PowCheck { .. } => "pow-check",
        Command::Theta { .. } => "theta",
        Command::ThetaInv { .. } => "theta-inv",
        Command::Res { .. } => "res",
        Command::ResInv { .. } => "res-inv",
        Command::Decompose { .. } => "decompose",
        Command::Compose { .. } => "compose",
        Command::Jacobian { .. } => "jacobian",
        Command::Fuzz { .. } => "fuzz",
    }
}

fn uses_ring_variable(text: &str) -> Result<bool, ParseError> {
    Ok(expr::parse_expr(text)?.symbols().iter().any(|s| s == "t"))
}

fn execute(cli: &Cli) -> Result<Reply, String> {
    let k = &cli.field;
    let err = |e: &dyn std::fmt::Display| e.to_string();
    match &cli.command {
        Command::PowCheck { f } => {
            let p = k.p();
            let (ok, lhs, rhs) = if uses_ring_variable(f).map_err(|e| err(&e))? {
                let r = PolyRing::new(k.clone());
                let poly = expr::parse_uni(&r, "x", f).map_err(|e| err(&e))?;
                let c = check_power_identity(&poly);
                (c.holds(), poly.to_text("x"), c.brute_force.to_text())
            } else {
                let poly = expr::parse_uni(k, "x", f).map_err(|e| err(&e))?;
                let c = check_power_identity(&poly);
                (c.holds(), poly.to_text("x"), c.brute_force.to_text())
            };
            let verdict = if ok { "OK" } else { "FAIL" };
            Ok(Reply {
                ok,
                result: format!("{verdict}: (d+{lhs})^{p} = {rhs}"),
                checks: json!({ "identity": ok }),
            })
        }
        Command::Theta { f } => {
            let text = if uses_ring_variable(f).map_err(|e| err(&e))? {
                let r = PolyRing::new(k.clone());
                theta(&expr::parse_uni(&r, "x", f).map_err(|e| err(&e))?).to_text("x")
            } else {
                theta(&expr::parse_uni(k, "x", f).map_err(|e| err(&e))?).to_text("x")
            };
            Ok(Reply::ok(text))
        }
        Command::ThetaInv { g } => {
            if uses_ring_variable(g).map_err(|e| err(&e))? {
                return Err("theta-inv needs a perfect coefficient field; K[t] is not one".into());
            }
            let poly = expr::parse_uni(k, "x", g).map_err(|e| err(&e))?;
            let ctx = ThetaContext::new(k.clone());
            let f = ctx.theta_inverse(&poly).map_err(|e| err(&e))?;
            let oracle = ctx.theta_inverse_oracle(&poly).map_err(|e| err(&e))?;
            let agree = oracle == f && theta(&f) == poly;
            Ok(Reply {
                ok: agree,
                result: f.to_text("x"),
                checks: json!({ "oracle_agrees": agree }),
            })
        }
        Command::Res { aut } => {
            let a = WeylAut::parse(k, aut).map_err(|e| err(&e))?;
            let r = res(&a).map_err(|e| err(&e))?;
            Ok(Reply {
                ok: true,
                result: r.image.to_string(),
                checks: json!({
                    "jacobian": k.wrap(r.jacobian_value).to_string(),
                    "degree_in": r.degree_in,
                    "degree_out": r.degree_out,
                }),
            })
        }
        Command::ResInv { aut } => {
            let g = ZAut::parse(k, aut).map_err(|e| err(&e))?;
            let (lift, word) = res_inverse(&g).map_err(|e| err(&e))?;
            let back = res(&lift).map_err(|e| err(&e))?.image == g;
            Ok(Reply {
                ok: back,
                result: format!("{lift}\n{word}"),
                checks: json!({ "restricts_back": back }),
            })
        }
        Command::Decompose { aut } => {
            let a = ZAut::parse(k, aut).map_err(|e| err(&e))?;
            let word = a.decompose().map_err(|e| err(&e))?;
            let back = ZAut::from_word(&word).map_err(|e| err(&e))? == a;
            Ok(Reply {
                ok: back,
                result: word.to_string(),
                checks: json!({ "realizes_input": back }),
            })
        }
        Command::Compose { a, b } => {
            let on_weyl = [a, b].iter().try_fold(false, |acc, text| {
                expr::parse_aut(text).map(|s| {
                    acc || s.symbols().iter().any(|v| v == "x" || v == "d")
                })
            });
            let text = if on_weyl.map_err(|e| err(&e))? {
                let x = WeylAut::parse(k, a).map_err(|e| err(&e))?;
                let y = WeylAut::parse(k, b).map_err(|e| err(&e))?;
                x.compose(&y).map_err(|e| err(&e))?.to_string()
            } else {
                let x = ZAut::parse(k, a).map_err(|e| err(&e))?;
                let y = ZAut::parse(k, b).map_err(|e| err(&e))?;
                x.compose(&y).map_err(|e| err(&e))?.to_string()
            };
            Ok(Reply::ok(text))
        }
        Command::Jacobian { aut } => {
            let a = ZAut::parse(k, aut).map_err(|e| err(&e))?;
            let j = a.jacobian();
            Ok(Reply {
                ok: true,
                result: j.to_text(),
                checks: json!({ "in_gamma": a.in_gamma() }),
            })
        }
        Command::Fuzz { suite } => {
            let report = run_suite(*suite, k, cli.count, cli.seed);
            Ok(Reply {
                ok: report.all_passed(),
                result: report.to_string(),
                checks: json!({
                    "suite": suite.name(),
                    "seed": cli.seed,
                    "total": report.total,
                    "passed": report.passed,
                }),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("weylres").chain(args.iter().copied()))
    }

    #[test]
    fn pow_check_line() {
        let o = out(&["pow-check", "--field", "p=2", "x"]);
        assert_eq!(o.stdout, "OK: (d+x)^2 = d^2+x^2+1\n");
        assert_eq!(o.code, 0);
    }

    #[test]
    fn symbol_errors_exit_two() {
        let o = out(&["theta", "X"]);
        assert_eq!(o.code, 2);
        assert_eq!(o.stderr, "error: X not valid in a K[x] expression\n");
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        assert_eq!(out(&["fuzz", "nope"]).code, 2);
    }

    #[test]
    fn json_shape() {
        let o = out(&["theta-inv", "--json", "x^2"]);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["kind"], "theta-inv");
        assert_eq!(v["field"], "p=2");
        assert_eq!(v["result"], "x+1");
        assert_eq!(v["checks"]["oracle_agrees"], true);
    }
}
