//! `spaces`: list cases, print Ricci components and Einstein systems,
//! compute Gröbner bases, isolate real roots, run the certified solution
//! pipeline, sweep over the dimension parameter, and verify the published
//! transcriptions. Exit code 0 only if every requested certificate passes.

use clap::{Parser, Subcommand};
use einstein_spaces::catalog::{get_case, list_cases, verify_all_transcriptions};
use einstein_spaces::coeff::{rat_parse, Rat};
use einstein_spaces::error::{Error, Result};
use einstein_spaces::groebner::{
    buchberger, fglm, gb_report, saturate_chain, Ideal,
};
use einstein_spaces::homspace::{eval_ratio, ricci_components};
use einstein_spaces::json::{poly_from_json, poly_to_json, rat_to_decimal, rat_to_string};
use einstein_spaces::monomial::MonomialOrder;
use einstein_spaces::parse::parse_poly;
use einstein_spaces::pipeline::{
    expected_discrepancy, fixture_checks, run_case, run_report_json, sweep, sweep_all_passed,
    sweep_report_csv, sweep_report_json, BoxEntry, RunOptions,
};
use einstein_spaces::poly::{ctx, MultiPoly};
use einstein_spaces::realroots::{isolate_roots, root_report, to_unipoly};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "spaces", about = "exact Einstein-metric computations on homogeneous spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the registered cases.
    List,
    /// Print the Ricci components of a case's isotropy decomposition.
    Ricci {
        #[arg(long)]
        case: String,
        /// Dimension parameter, shorthand for --param n=N.
        #[arg(long)]
        n: Option<i64>,
        /// Extra case parameters, e.g. --param d1=6.
        #[arg(long = "param")]
        params: Vec<String>,
        /// Evaluate at a metric point, e.g. --at x2=1/2,x12=1,x13=1,x23=1.
        #[arg(long)]
        at: Option<String>,
    },
    /// Emit a case's normalized Einstein system as JSON.
    System {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long = "param")]
        params: Vec<String>,
        /// Additional normalization, e.g. --normalize x13=1.
        #[arg(long)]
        normalize: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduced Gröbner basis of a polynomial system read from JSON.
    Groebner {
        /// JSON file: an array of polynomials in the canonical format.
        #[arg(long = "in")]
        input: PathBuf,
        /// Target order: lex, grevlex, or elim1-grevlex.
        #[arg(long, default_value = "lex")]
        order: String,
        /// Variable order, outermost first, e.g. --vars x2,x12,x13.
        #[arg(long)]
        vars: Option<String>,
        /// Saturate by each comma-separated polynomial before the basis
        /// computation, e.g. --saturate "x2,x12,x13,x13-1".
        #[arg(long)]
        saturate: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Isolate the real roots of a univariate polynomial in (from, to).
    Roots {
        /// JSON file holding one polynomial in the canonical format.
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Refine every isolating interval below this width.
        #[arg(long)]
        width: Option<String>,
    },
    /// Solve a case end to end and report certified solution records.
    Run {
        #[arg(long)]
        case: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long = "param")]
        params: Vec<String>,
        /// Emit the full JSON report instead of the summary.
        #[arg(long)]
        json: bool,
    },
    /// Run a case over a range of the dimension parameter.
    Sweep {
        #[arg(long)]
        case: String,
        #[arg(long = "n-from")]
        n_from: i64,
        #[arg(long = "n-to")]
        n_to: i64,
        /// Report format: json or csv.
        #[arg(long, default_value = "json")]
        report: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify every transcription and sign-check fixture.
    VerifyPaper {
        /// Run the full battery (the default; accepted for compatibility).
        #[arg(long)]
        all: bool,
    },
}

fn parse_params(n: Option<i64>, params: &[String]) -> Result<Vec<(String, Rat)>> {
    let mut out = Vec::new();
    if let Some(n) = n {
        out.push(("n".to_string(), Rat::from_integer(n.into())));
    }
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{p}`")))?;
        let v = rat_parse(v.trim())
            .ok_or_else(|| Error::Parse(format!("bad rational `{v}`")))?;
        out.push((k.trim().to_string(), v));
    }
    if out.is_empty() {
        return Err(Error::BadCase("no parameters given".into()));
    }
    Ok(out)
}

fn parse_assignment(s: &str) -> Result<Vec<(String, Rat)>> {
    s.split(',')
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected var=value, got `{kv}`")))?;
            let v = rat_parse(v.trim())
                .ok_or_else(|| Error::Parse(format!("bad rational `{v}`")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(Into::into),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn cmd_ricci(case: &str, params: &[(String, Rat)], at: Option<&str>) -> Result<bool> {
    let borrowed: Vec<(&str, Rat)> = params.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    let rec = get_case(case, &borrowed)?;
    let d = rec.decomposition.ok_or_else(|| {
        Error::BadCase(format!(
            "case `{case}` registers a printed system without a stored decomposition"
        ))
    })?;
    let rs = ricci_components(&d)?;
    let names: Vec<String> = d.summands.iter().map(|s| s.var.clone()).collect();
    match at {
        Some(at) => {
            let assign = parse_assignment(at)?;
            let c = rs[0].num.ctx.clone();
            let mut values = Vec::new();
            for v in &c.vars {
                let val = assign
                    .iter()
                    .find(|(k, _)| k == v)
                    .map(|(_, x)| x.clone())
                    .ok_or_else(|| Error::MissingVariable(v.clone()))?;
                values.push(val);
            }
            for (name, r) in names.iter().zip(&rs) {
                let val = eval_ratio(r, &values)?;
                println!(
                    "r[{name}] = {} ~ {}",
                    rat_to_string(&val),
                    rat_to_decimal(&val, 12)
                );
            }
        }
        None => {
            for (name, r) in names.iter().zip(&rs) {
                println!("r[{name}] = ({}) / ({})", r.num, r.den);
            }
        }
    }
    Ok(true)
}

fn cmd_system(
    case: &str,
    params: &[(String, Rat)],
    normalize: Option<&str>,
    out: &Option<PathBuf>,
) -> Result<bool> {
    let borrowed: Vec<(&str, Rat)> = params.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    let rec = get_case(case, &borrowed)?;
    let mut eqs = rec.system.equations.clone();
    let mut normalization: Vec<(String, Rat)> = rec.system.normalization.clone();
    if let Some(spec) = normalize {
        for (v, val) in parse_assignment(spec)? {
            let c = eqs[0].ctx.clone();
            let bind = MultiPoly::constant(c, val.clone());
            eqs = eqs
                .iter()
                .map(|e| e.substitute_named(&[(v.as_str(), bind.clone())]))
                .collect::<Result<_>>()?;
            normalization.push((v, val));
        }
    }
    let report = json!({
        "case": rec.id,
        "params": rec.params.iter()
            .map(|(k, v)| (k.clone(), Value::String(rat_to_string(v))))
            .collect::<serde_json::Map<String, Value>>(),
        "unknowns": rec.unknowns,
        "normalization": normalization.iter()
            .map(|(k, v)| (k.clone(), Value::String(rat_to_string(v))))
            .collect::<serde_json::Map<String, Value>>(),
        "provenance": rec.system.provenance,
        "equations": eqs.iter().map(poly_to_json).collect::<Vec<_>>(),
    });
    emit(out, &serde_json::to_string_pretty(&report).unwrap())?;
    Ok(true)
}

fn cmd_groebner(
    input: &PathBuf,
    order: &str,
    vars: Option<&str>,
    saturate: Option<&str>,
    out: &Option<PathBuf>,
) -> Result<bool> {
    let text = std::fs::read_to_string(input)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a JSON array of polynomials".into()))?;
    let mut polys: Vec<MultiPoly<Rat>> = arr
        .iter()
        .map(poly_from_json::<Rat>)
        .collect::<Result<_>>()?;
    if polys.is_empty() {
        return Err(Error::ZeroInput("no polynomials in input".into()));
    }
    let target = MonomialOrder::parse(order)
        .ok_or_else(|| Error::Parse(format!("unknown order `{order}`")))?;
    let work = match vars {
        Some(spec) => {
            let names: Vec<&str> = spec.split(',').map(str::trim).collect();
            ctx(&names, MonomialOrder::GrevLex)
        }
        None => {
            let c = polys[0].ctx.clone();
            let names: Vec<&str> = c.vars.iter().map(String::as_str).collect();
            ctx(&names, MonomialOrder::GrevLex)
        }
    };
    polys = polys
        .iter()
        .map(|p| p.project(&work))
        .collect::<Result<_>>()?;
    if let Some(spec) = saturate {
        let factors: Vec<MultiPoly<Rat>> = spec
            .split(',')
            .map(|f| parse_poly::<Rat>(f.trim(), &work, &[]))
            .collect::<Result<_>>()?;
        polys = saturate_chain(&polys, &factors, "z")?;
    }
    // grevlex first, then change order: avoids lex coefficient swell on
    // zero-dimensional inputs; positive-dimensional lex requests fall back
    // to direct Buchberger.
    let gb = match target {
        MonomialOrder::Lex => {
            let grev = buchberger(&Ideal::new(polys.clone())?, MonomialOrder::GrevLex)?;
            match fglm(&grev, MonomialOrder::Lex) {
                Ok(gb) => gb,
                Err(Error::NotZeroDimensional(_)) => {
                    buchberger(&Ideal::new(polys)?, MonomialOrder::Lex)?
                }
                Err(e) => return Err(e),
            }
        }
        other => buchberger(&Ideal::new(polys)?, other)?,
    };
    emit(out, &serde_json::to_string_pretty(&gb_report(&gb)).unwrap())?;
    Ok(true)
}

fn cmd_roots(poly: &PathBuf, from: &str, to: &str, width: Option<&str>) -> Result<bool> {
    let text = std::fs::read_to_string(poly)?;
    let v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    let p = poly_from_json::<Rat>(&v)?;
    let (_, u) = to_unipoly(&p)?;
    let a = rat_parse(from).ok_or_else(|| Error::Parse(format!("bad rational `{from}`")))?;
    let b = rat_parse(to).ok_or_else(|| Error::Parse(format!("bad rational `{to}`")))?;
    let roots = isolate_roots(&u, &a, &b)?;
    let refined: Vec<Value> = roots
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let r = match width.and_then(rat_parse) {
                Some(w) => r.refine(&w),
                None => r.clone(),
            };
            root_report(&format!("root{}", k + 1), &r)
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&json!({ "count": roots.len(), "roots": refined })).unwrap()
    );
    Ok(true)
}

fn cmd_run(case: &str, params: &[(String, Rat)], as_json: bool) -> Result<bool> {
    let borrowed: Vec<(&str, Rat)> = params.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
    let run = run_case(case, &borrowed, &RunOptions::default())?;
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&run_report_json(&run)).unwrap()
        );
    } else {
        println!("case {} ({} records)", run.case_id, run.records.len());
        for r in &run.records {
            let vars: Vec<String> = r
                .variables
                .iter()
                .map(|(v, e)| match e {
                    BoxEntry::Exact(x) => format!("{v}={}", rat_to_string(x)),
                    BoxEntry::Isolated(iv) => {
                        format!("{v}~{}", rat_to_decimal(&iv.midpoint(), 12))
                    }
                })
                .collect();
            println!(
                "  [{}] {}  residual<= {}",
                r.classification.name(),
                vars.join(" "),
                rat_to_decimal(&r.residual_bound, 12)
            );
        }
    }
    Ok(run
        .records
        .iter()
        .all(|r| r.classification.name() != "unverified"))
}

fn cmd_sweep(
    case: &str,
    n_from: i64,
    n_to: i64,
    report: &str,
    out: &Option<PathBuf>,
) -> Result<bool> {
    let rep = sweep(case, n_from, n_to, &RunOptions::default())?;
    match report {
        "csv" => emit(out, sweep_report_csv(&rep).trim_end())?,
        "json" => emit(
            out,
            &serde_json::to_string_pretty(&sweep_report_json(&rep)).unwrap(),
        )?,
        other => return Err(Error::Parse(format!("unknown report format `{other}`"))),
    }
    Ok(sweep_all_passed(&rep))
}

fn cmd_verify_paper() -> Result<bool> {
    let mut ok = true;
    for r in verify_all_transcriptions()? {
        println!("case {}", r.case_id);
        for m in &r.matches {
            println!("  match: {m}");
        }
        for d in &r.discrepancies {
            if expected_discrepancy(&r.case_id, d) {
                println!("  documented misprint: {d}");
            } else {
                println!("  UNEXPECTED DISCREPANCY: {d}");
                ok = false;
            }
        }
    }
    for n in 7..=20 {
        let checks = fixture_checks(n)?;
        let bad: Vec<&str> = checks
            .iter()
            .filter(|(_, v)| !v)
            .map(|(k, _)| k.as_str())
            .collect();
        if bad.is_empty() {
            println!("fixtures n={n}: all {} checks pass", checks.len());
        } else {
            println!("fixtures n={n}: FAILED {bad:?}");
            ok = false;
        }
    }
    Ok(ok)
}

fn dispatch(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::List => {
            for (id, desc) in list_cases() {
                println!("{id:18} {desc}");
            }
            Ok(true)
        }
        Command::Ricci {
            case,
            n,
            params,
            at,
        } => cmd_ricci(&case, &parse_params(n, &params)?, at.as_deref()),
        Command::System {
            case,
            n,
            params,
            normalize,
            out,
        } => cmd_system(&case, &parse_params(n, &params)?, normalize.as_deref(), &out),
        Command::Groebner {
            input,
            order,
            vars,
            saturate,
            out,
        } => cmd_groebner(&input, &order, vars.as_deref(), saturate.as_deref(), &out),
        Command::Roots {
            poly,
            from,
            to,
            width,
        } => cmd_roots(&poly, &from, &to, width.as_deref()),
        Command::Run { case, n, params, json } => {
            cmd_run(&case, &parse_params(n, &params)?, json)
        }
        Command::Sweep {
            case,
            n_from,
            n_to,
            report,
            out,
        } => cmd_sweep(&case, n_from, n_to, &report, &out),
        Command::VerifyPaper { all: _ } => cmd_verify_paper(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("one or more certificates failed");
            ExitCode::FAILURE
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
