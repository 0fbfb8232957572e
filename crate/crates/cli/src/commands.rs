use serde_json::{json, Map, Value};
use treezeta_core::dyck::{enumerate_dyck, q_polynomial, QMethod};
use treezeta_core::special_values::{p_polynomials, p_polynomials_closed_form, zeta_neg_table, zeta_pos, NegMethod};
use treezeta_core::spectral::{
    heat_trace, xi, xi_sato_tate, zeta_line, zeta_numeric, zeta_sato_tate, zeta_sato_tate_quadrature,
    TreeKind, ZetaEval,
};
use treezeta_core::verify::{run_all, run_suite, CheckOutcome, Defect, RunOptions, Suite, Tolerances};
use treezeta_core::{BigInt, BigRational, Complex64};

use crate::args::{Command, DyckMethod, NegRoute, PolyMethod, VerifyTarget, ZetaArgs};
use crate::config::Settings;
use crate::report::{complex, fmt_complex, poly, rational, Output, Report, Status, Table};
use crate::Failure;

type Outcome = Result<Output, Failure>;

fn inputs(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

fn output(command: &str, inputs: Value, results: Value, status: Status, table: Table) -> Output {
    Output {
        report: Report {
            command: command.into(),
            inputs,
            results,
            status,
            timings: None,
        },
        table,
        latex: None,
    }
}

pub fn dispatch(cmd: &Command, settings: &Settings) -> Outcome {
    match cmd {
        Command::Poly { n, method } => poly_cmd(*n, *method),
        Command::Values { q, neg, pos, route } => values_cmd(*q, *neg, *pos, *route),
        Command::Zeta(args) => zeta_cmd(args, settings),
        Command::Heat { q, t } => heat_cmd(*q, *t, settings),
        Command::Dyck { n, list, method } => dyck_cmd(*n, *list, *method),
        Command::Verify {
            target,
            q,
            tol,
            n_max,
        } => verify_cmd(*target, *q, *tol, *n_max, settings),
    }
}

fn poly_cmd(n: usize, method: PolyMethod) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    let (name, table) = match method {
        PolyMethod::Recursion => ("recursion", p_polynomials(n)),
        PolyMethod::ClosedForm => ("closed-form", p_polynomials_closed_form(n)?),
    };
    let mut rows = Table::new(&["n", "P_n"]);
    let mut latex = Vec::new();
    let mut list = Vec::new();
    for (i, p) in table.iter().enumerate() {
        rows.push(vec![(i + 1).to_string(), p.display("q").to_string()]);
        latex.push(format!("{} & ${}$", i + 1, p.display_latex("q")));
        list.push(json!({ "n": i + 1, "coefficients": poly(p) }));
    }
    let mut out = output(
        "poly",
        inputs(vec![("n", json!(n)), ("method", json!(name))]),
        json!({ "P": list }),
        Status::Pass,
        rows,
    );
    out.latex = Some(latex);
    Ok(out)
}

fn neg_method(route: NegRoute) -> NegMethod {
    match route {
        NegRoute::Cjks => NegMethod::Cjks,
        NegRoute::Binomial => NegMethod::Binomial,
        NegRoute::Series => NegMethod::Series,
    }
}

fn approx(r: &BigRational) -> Value {
    use num_traits::ToPrimitive;
    r.to_f64().map(Value::from).unwrap_or(Value::Null)
}

fn values_cmd(q: Option<u64>, neg: usize, pos: usize, route: NegRoute) -> Outcome {
    let method = neg_method(route);
    let neg_table = zeta_neg_table(neg, method)?;
    let mut table = Table::new(&["s", "zeta(s)"]);
    let mut neg_out = Vec::new();
    let mut pos_out = Vec::new();
    match q {
        None => {
            for (m, p) in neg_table.iter().enumerate() {
                table.push(vec![(-(m as i64)).to_string(), p.display("q").to_string()]);
                neg_out.push(json!({ "m": m, "polynomial": poly(p) }));
            }
            for (i, p) in p_polynomials(pos).iter().enumerate() {
                let n = i + 1;
                table.push(vec![
                    n.to_string(),
                    format!("q*({})/((q-1)^{}*(q+1)^{})", p.display("q"), 2 * n - 1, n),
                ]);
                pos_out.push(json!({ "n": n, "P": poly(p) }));
            }
        }
        Some(q) => {
            if q == 0 {
                return Err(Failure::Usage("--q must be at least 1".into()));
            }
            if q == 1 && pos > 0 {
                return Err(Failure::Usage("positive values need q >= 2 (use --pos 0 for q = 1)".into()));
            }
            let qb = BigInt::from(q);
            for (m, p) in neg_table.iter().enumerate() {
                let v = BigRational::from_integer(p.eval_int(&qb));
                table.push(vec![(-(m as i64)).to_string(), v.to_string()]);
                neg_out.push(json!({ "m": m, "value": rational(&v), "approx": approx(&v) }));
            }
            for n in 1..=pos {
                let v = zeta_pos(&qb, n)?;
                table.push(vec![n.to_string(), v.to_string()]);
                pos_out.push(json!({ "n": n, "value": rational(&v), "approx": approx(&v) }));
            }
        }
    }
    Ok(output(
        "values",
        inputs(vec![
            ("q", q.map(Value::from).unwrap_or(Value::Null)),
            ("neg", json!(neg)),
            ("pos", json!(pos)),
            ("route", json!(method.name())),
        ]),
        json!({ "negative": neg_out, "positive": pos_out }),
        Status::Pass,
        table,
    ))
}

pub fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<f64>()
            .ok()
            .filter(|x| x.is_finite())
            .ok_or_else(|| Failure::Usage(format!("cannot parse {t:?} as a finite number")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(Failure::Usage(format!("expected RE,IM, got {s:?}"))),
    }
}

fn eval_json(e: &ZetaEval) -> Value {
    json!({
        "value": complex(e.value),
        "est_error": e.est_error,
        "nodes_used": e.nodes_used,
        "converged": e.converged,
    })
}

fn eval_status(e: &ZetaEval) -> Status {
    if e.converged {
        Status::Pass
    } else {
        Status::NonConverged
    }
}

fn zeta_cmd(args: &ZetaArgs, settings: &Settings) -> Outcome {
    let s = parse_complex(&args.s)?;
    let spec = &settings.quadrature;
    if args.quadrature && !args.sato_tate {
        return Err(Failure::Usage("--quadrature applies to --sato-tate only".into()));
    }
    let (tree, e) = if let Some(q) = args.q {
        let e = if args.xi { xi(q, s, spec)? } else { zeta_numeric(q, s, spec)? };
        (json!(q), e)
    } else if args.line {
        if args.xi {
            return Err(Failure::Usage("--xi is not defined for --line".into()));
        }
        (json!("line"), zeta_line(s)?)
    } else if args.xi {
        let e = ZetaEval {
            kind: TreeKind::SatoTate,
            s,
            value: xi_sato_tate(s)?,
            est_error: 0.0,
            nodes_used: 0,
            converged: true,
        };
        (json!("sato-tate"), e)
    } else if args.quadrature {
        (json!("sato-tate"), zeta_sato_tate_quadrature(s, spec)?)
    } else {
        (json!("sato-tate"), zeta_sato_tate(s)?)
    };
    let function = if args.xi { "xi" } else { "zeta" };
    let mut table = Table::new(&["s", function, "est_error", "nodes", "converged"]);
    table.push(vec![
        fmt_complex(s),
        fmt_complex(e.value),
        format!("{:e}", e.est_error),
        e.nodes_used.to_string(),
        e.converged.to_string(),
    ]);
    Ok(output(
        "zeta",
        inputs(vec![
            ("tree", tree),
            ("s", complex(s)),
            ("function", json!(function)),
            ("quadrature", json!({
                "abs_tol": spec.abs_tol,
                "rel_tol": spec.rel_tol,
                "max_nodes": spec.max_nodes,
            })),
        ]),
        eval_json(&e),
        eval_status(&e),
        table,
    ))
}

fn heat_cmd(q: u64, t: f64, settings: &Settings) -> Outcome {
    let spec = &settings.quadrature;
    let e = heat_trace(q, t, spec)?;
    let mut table = Table::new(&["t", "K_q(t)", "est_error", "converged"]);
    table.push(vec![
        t.to_string(),
        e.value.re.to_string(),
        format!("{:e}", e.est_error),
        e.converged.to_string(),
    ]);
    Ok(output(
        "heat",
        inputs(vec![("q", json!(q)), ("t", json!(t))]),
        json!({
            "value": e.value.re,
            "est_error": e.est_error,
            "nodes_used": e.nodes_used,
            "converged": e.converged,
        }),
        eval_status(&e),
        table,
    ))
}

fn dyck_cmd(n: usize, list: bool, method: DyckMethod) -> Outcome {
    let m = match method {
        DyckMethod::Bruteforce => QMethod::Bruteforce,
        DyckMethod::Dp => QMethod::Dp,
    };
    let q = q_polynomial(n, m)?;
    let count = q.eval_int(&BigInt::from(1));
    let mut results = Map::new();
    results.insert("Q".into(), poly(&q));
    results.insert("count".into(), Value::String(count.to_string()));
    let table = if list {
        let mut table = Table::new(&["word", "h", "r_B", "r_R"]);
        let mut words = Vec::new();
        for w in enumerate_dyck(n)? {
            let p = w.weight();
            let word = w.to_string();
            table.push(vec![word.clone(), p.h.to_string(), p.r_b.to_string(), p.r_r.to_string()]);
            words.push(json!({ "word": word, "h": p.h, "r_B": p.r_b, "r_R": p.r_r }));
        }
        results.insert("words".into(), Value::Array(words));
        table
    } else {
        let mut table = Table::new(&["n", "Q_n", "count"]);
        table.push(vec![n.to_string(), q.display("t").to_string(), count.to_string()]);
        table
    };
    let mut out = output(
        "dyck",
        inputs(vec![("n", json!(n)), ("method", json!(m.name())), ("list", json!(list))]),
        Value::Object(results),
        Status::Pass,
        table,
    );
    if !list {
        out.latex = Some(vec![format!("{n} & ${}$", q.display_latex("t"))]);
    }
    Ok(out)
}

fn suite_of(target: VerifyTarget) -> Option<Suite> {
    Some(match target {
        VerifyTarget::All => return None,
        VerifyTarget::Negvals => Suite::NegativeValues,
        VerifyTarget::Moments => Suite::Moments,
        VerifyTarget::Ppoly => Suite::PPolynomials,
        VerifyTarget::Twostep => Suite::TwoStep,
        VerifyTarget::Tquad => Suite::TQuadratic,
        VerifyTarget::Symmetry => Suite::Symmetry,
        VerifyTarget::Escript => Suite::ScriptE,
        VerifyTarget::Fe => Suite::FunctionalEquation,
        VerifyTarget::Integers => Suite::IntegerPoints,
        VerifyTarget::Laplace => Suite::Laplace,
        VerifyTarget::Boundary => Suite::Boundary,
        VerifyTarget::Dyck => Suite::Dyck,
    })
}

fn check_json(c: &CheckOutcome) -> Value {
    let defect = match &c.max_defect {
        Defect::Exact(r) => rational(r),
        Defect::Numeric(x) => json!(x),
    };
    json!({
        "name": c.name,
        "q": c.q,
        "points": c.points,
        "max_defect": defect,
        "tolerance": c.tolerance,
        "worst_at": c.worst_at,
        "passed": c.passed,
        "non_converged": c.non_converged,
    })
}

fn verify_cmd(
    target: VerifyTarget,
    q: Option<u64>,
    tol: Option<f64>,
    n_max: Option<usize>,
    settings: &Settings,
) -> Outcome {
    if let Some(t) = tol {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Failure::Usage(format!("--tol must be finite and nonnegative, got {t}")));
        }
    }
    let opts = RunOptions {
        qs: q.map(|q| vec![q]).unwrap_or_else(|| vec![2, 3, 5]),
        tolerances: tol.map(Tolerances::uniform).unwrap_or(settings.tolerances),
        quadrature: settings.quadrature,
        n_max,
    };
    let checks = match suite_of(target) {
        None => run_all(&opts)?,
        Some(s) => run_suite(s, &opts)?,
    };
    let status = if checks.iter().any(|c| c.non_converged) {
        Status::NonConverged
    } else if checks.iter().all(|c| c.passed) {
        Status::Pass
    } else {
        Status::Fail
    };
    let mut table = Table::new(&["check", "q", "points", "max_defect", "tolerance", "result"]);
    for c in &checks {
        table.push(vec![
            c.name.clone(),
            c.q.map(|q| q.to_string()).unwrap_or_else(|| "-".into()),
            c.points.to_string(),
            c.max_defect.to_string(),
            c.tolerance.map(|t| format!("{t:e}")).unwrap_or_else(|| "exact".into()),
            if c.non_converged {
                "non-converged".into()
            } else if c.passed {
                "pass".into()
            } else {
                format!("FAIL at {}", c.worst_at.as_deref().unwrap_or("?"))
            },
        ]);
    }
    let target_name = format!("{target:?}").to_lowercase();
    Ok(output(
        "verify",
        inputs(vec![
            ("target", json!(target_name)),
            ("q", json!(opts.qs)),
            ("tol", tol.map(Value::from).unwrap_or(Value::Null)),
            ("n_max", n_max.map(Value::from).unwrap_or(Value::Null)),
        ]),
        json!({ "checks": checks.iter().map(check_json).collect::<Vec<_>>() }),
        status,
        table,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_argument_parsing() {
        assert_eq!(parse_complex("0,0").unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(parse_complex("-2.5, 3").unwrap(), Complex64::new(-2.5, 3.0));
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("inf,0").is_err());
    }

    #[test]
    fn poly_latex_rows() {
        let out = poly_cmd(2, PolyMethod::Recursion).unwrap();
        let rows = out.latex.unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0], "1 & $1$");
        assert!(rows[1].contains("q^{2} + 1"));
    }
}
