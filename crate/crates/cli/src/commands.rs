use std::fs::File;
use std::io::{self, BufWriter, Write};

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use powg::axioms::{check_eq26, check_p2_axioms, check_pow2_equiv};
use powg::bounds::{combine_upper, combine_upper_symbolic, upper_nu_nu, BoundReport, NuNuTerm};
use powg::certify::{
    best_single_certificate, check_certificate, dnb_table, lower_bound_formula, CertificateQuery, Exponent,
    LowerFormula, SymbolicPow, MAX_K,
};
use powg::exactsolve::{complexity_interval, ComplexityInterval, SolverConfig};
use powg::expr::Expr;
use powg::suites::{self, Suite, SuiteOptions, SuiteReport};
use powg::Natural;

use crate::{play, Cli, Command, Format, Status};

/// Largest input expanded from an expression.
const MAX_INPUT_BITS: u64 = 1 << 20;

/// Sweep cap when no `--challenge-bound` is given. The solver's own default,
/// `2 u^2`, makes an unsuccessful depth-two search take minutes already for
/// four-digit `u`.
const DEFAULT_SWEEP_CAP: u64 = 20_000;

pub fn run(cli: &Cli) -> Result<Status> {
    match &cli.command {
        Command::Solve {
            u,
            rounds,
            challenge_bound,
            node_budget,
        } => solve(cli, u, *rounds, *challenge_bound, *node_budget),
        Command::Table {
            from,
            to,
            out,
            rounds,
            challenge_bound,
        } => table(*from, *to, out.as_deref(), *rounds, *challenge_bound),
        Command::Certify { v, l, r, k } => certify(cli, *v, l, r, *k),
        Command::Dnb { v, kmax } => dnb(cli, *v, *kmax),
        Command::Bounds { u, v, l, r } => bounds(cli, u.as_deref(), *v, l.as_deref(), r.as_deref()),
        Command::Axioms {
            limit,
            eq26_limit,
            oddless_limit,
        } => axioms(cli, *limit, *eq26_limit, *oddless_limit),
        Command::VerifyPaper { suite, quick } => verify(cli, suite, *quick),
        Command::Play {
            role,
            u,
            max_rounds,
            transcript,
        } => {
            let u = parse_natural(u)?;
            let stdin = io::stdin();
            let mut out = io::stdout();
            play::run(
                *role,
                &u,
                *max_rounds,
                transcript.as_deref(),
                &mut stdin.lock(),
                &mut out,
            )
        }
    }
}

fn parse_natural(s: &str) -> Result<Natural> {
    let e: Expr = s.parse().with_context(|| format!("cannot parse '{s}'"))?;
    Ok(e.eval(MAX_INPUT_BITS)?)
}

fn parse_exponents(s: &str) -> Result<Vec<Exponent>> {
    s.split(',')
        .map(|part| {
            let e: Expr = part
                .trim()
                .parse()
                .with_context(|| format!("cannot parse '{part}'"))?;
            Ok(e.to_exponent(MAX_INPUT_BITS)?)
        })
        .collect()
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

pub(crate) fn solver_config(u: &Natural, challenge_bound: Option<u64>) -> SolverConfig {
    match challenge_bound {
        Some(b) => SolverConfig::with_bound(b),
        None if u * u * 2u32 > Natural::from(DEFAULT_SWEEP_CAP) => {
            SolverConfig::with_bound(DEFAULT_SWEEP_CAP)
        }
        None => SolverConfig::default(),
    }
}

const CSV_HEADER: [&str; 6] = ["u", "lower", "lower_method", "upper", "upper_method", "exact"];

fn csv_row(c: &ComplexityInterval) -> [String; 6] {
    [
        c.u.to_string(),
        c.lower.to_string(),
        c.lower_method.as_str().into(),
        c.upper.to_string(),
        c.upper_method.as_str().into(),
        c.exact.to_string(),
    ]
}

fn solve(cli: &Cli, u: &str, rounds: u32, bound: Option<u64>, node_budget: u64) -> Result<Status> {
    let u = parse_natural(u)?;
    if u == Natural::from(0u32) {
        bail!("u must be positive");
    }
    let mut cfg = solver_config(&u, bound);
    cfg.node_budget = node_budget;
    let c = complexity_interval(&u, &cfg, rounds)?;
    match cli.format {
        Format::Json => print_json(&c)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(CSV_HEADER)?;
            w.write_record(csv_row(&c))?;
            w.flush()?;
        }
        Format::Text => {
            let opening = c
                .witness_opening
                .as_ref()
                .map(|x| format!(", opening {x}"))
                .unwrap_or_default();
            println!(
                "c({}) in [{}, {}]  lower by {}, upper by {}{opening}",
                c.u,
                c.lower,
                c.upper,
                c.lower_method.as_str(),
                c.upper_method.as_str()
            );
        }
    }
    Ok(Status::Ok)
}

fn table(
    from: u64,
    to: u64,
    out: Option<&std::path::Path>,
    rounds: u32,
    bound: Option<u64>,
) -> Result<Status> {
    if from == 0 || from > to {
        bail!("need 1 <= from <= to");
    }
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot write {}", p.display()))?,
        )),
        None => Box::new(io::stdout()),
    };
    let rows: Vec<ComplexityInterval> = (from..=to)
        .into_par_iter()
        .map(|u| {
            let u = Natural::from(u);
            complexity_interval(&u, &solver_config(&u, bound), rounds)
        })
        .collect::<Result<_, _>>()?;
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(CSV_HEADER)?;
    for c in &rows {
        w.write_record(csv_row(c))?;
    }
    w.flush()?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct Conditions {
    /// Every `r_i` is a multiple of `D_k`.
    eq31: bool,
    /// The lattice condition on the `l_i`.
    eq32: bool,
}

#[derive(Serialize)]
struct CertifyOutput {
    v: String,
    l: Vec<Exponent>,
    r: Vec<Exponent>,
    k: usize,
    conditions: Conditions,
    certified_lower: Option<usize>,
}

fn certify(cli: &Cli, v: u64, l: &str, r: &str, k: Option<usize>) -> Result<Status> {
    let v = Natural::from(v);
    let l = parse_exponents(l)?;
    let r = parse_exponents(r)?;
    if l.len() != r.len() {
        bail!("--l and --r need the same number of entries");
    }
    let query = |k: usize| CertificateQuery {
        v: v.clone(),
        l: l.clone(),
        r: r.clone(),
        k,
    };
    let (k, res) = match k {
        Some(k) => (k, check_certificate(&query(k))?),
        None => {
            // largest k whose certificate holds, searching upward
            let mut best = (1, check_certificate(&query(1))?);
            if l.len() == 1 {
                let s = SymbolicPow::new(v.clone(), l[0].clone(), r[0].clone())?;
                let k = best_single_certificate(&s, MAX_K)?.max(1);
                best = (k, check_certificate(&query(k))?);
            } else {
                for k in 2..=MAX_K {
                    match check_certificate(&query(k)) {
                        Ok(res) if res.certified_lower.is_some() => best = (k, res),
                        _ => break,
                    }
                }
            }
            best
        }
    };
    let out = CertifyOutput {
        v: v.to_string(),
        l,
        r,
        k,
        conditions: Conditions {
            eq31: res.divisibility,
            eq32: res.lattice,
        },
        certified_lower: res.certified_lower,
    };
    match cli.format {
        Format::Text => match out.certified_lower {
            Some(k) => println!("certified: c >= {k}"),
            None => println!(
                "not certified for k = {} (divisibility {}, lattice {})",
                out.k, out.conditions.eq31, out.conditions.eq32
            ),
        },
        _ => print_json(&out)?,
    }
    Ok(Status::Ok)
}

fn dnb(cli: &Cli, v: u64, kmax: usize) -> Result<Status> {
    let t = dnb_table(&Natural::from(v), kmax)?;
    match cli.format {
        Format::Json => print_json(&t)?,
        Format::Csv | Format::Text => {
            let mut w = csv::Writer::from_writer(io::stdout());
            w.write_record(["k", "d", "n", "b", "bprime"])?;
            for row in &t.rows {
                let d = match &row.d.value {
                    Some(d) => d.to_string(),
                    None => format!(
                        "D_{} * L({})",
                        row.k - 1,
                        row.d.lcm_args.last().expect("k > 1 when unexpanded")
                    ),
                };
                w.write_record([
                    row.k.to_string(),
                    d,
                    row.n.to_string(),
                    row.b.to_string(),
                    row.bprime.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct BoundsOutput {
    input: String,
    upper: BoundReport,
    /// Minimizing raw term of the nested-valuation bound; its additive
    /// constant is unknown, so it never enters `upper`.
    #[serde(skip_serializing_if = "Option::is_none")]
    nu_nu: Option<NuNuTerm>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_formula: Option<LowerFormula>,
}

fn bounds(cli: &Cli, u: Option<&str>, v: Option<u64>, l: Option<&str>, r: Option<&str>) -> Result<Status> {
    let out = match (u, v, l, r) {
        (Some(u), ..) => {
            let u = parse_natural(u)?;
            if u == Natural::from(0u32) {
                bail!("u must be positive");
            }
            let lower_formula = SymbolicPow::from_natural(&u)
                .ok()
                .map(|s| lower_bound_formula(&s));
            BoundsOutput {
                input: u.to_string(),
                upper: combine_upper(&u, &[]),
                nu_nu: upper_nu_nu(&u),
                lower_formula,
            }
        }
        (None, Some(v), Some(l), Some(r)) => {
            let one = |s: &str| -> Result<Exponent> {
                let mut e = parse_exponents(s)?;
                if e.len() != 1 {
                    bail!("expected a single exponent, got '{s}'");
                }
                Ok(e.remove(0))
            };
            let s = SymbolicPow::new(Natural::from(v), one(l)?, one(r)?)?;
            BoundsOutput {
                input: s.to_string(),
                upper: combine_upper_symbolic(&s, &[]),
                nu_nu: None,
                lower_formula: Some(lower_bound_formula(&s)),
            }
        }
        _ => return Err(anyhow!("give --u, or all of --v, --l and --r")),
    };
    match cli.format {
        Format::Text => {
            println!("{}: upper {}", out.input, out.upper.best);
            for e in &out.upper.entries {
                match e.value {
                    Some(v) => println!("  {:<6} {v:>3}  ({})", e.name, e.witness),
                    None => println!("  {:<6}   -  ({})", e.name, e.reason.as_deref().unwrap_or("")),
                }
            }
            if let Some(f) = out.lower_formula.as_ref().and_then(|f| f.value) {
                println!("  lower formula {f}");
            }
        }
        _ => print_json(&out)?,
    }
    Ok(Status::Ok)
}

fn axioms(cli: &Cli, limit: u64, eq26_limit: u64, oddless_limit: u64) -> Result<Status> {
    if limit < 4 || eq26_limit < 2 || oddless_limit < 2 {
        bail!("limits must be at least 4, 2 and 2");
    }
    let p2 = check_p2_axioms(limit);
    let eq26 = check_eq26(eq26_limit);
    let oddless = check_pow2_equiv(oddless_limit);
    let verdict = |b: bool| if b { "pass" } else { "fail" };
    let mut entries: Vec<serde_json::Value> = p2
        .results
        .iter()
        .map(|r| {
            let mut v = json!({"axiom": r.axiom, "result": verdict(r.passed)});
            if let Some(c) = &r.counterexample {
                v["counterexample"] = json!(c);
            }
            v
        })
        .collect();
    let mut e26 = json!({"axiom": "eq26", "result": verdict(eq26.passed)});
    if let Some(x) = eq26.first_failure {
        e26["counterexample"] = json!([x]);
    }
    entries.push(e26);
    let mut odd = json!({"axiom": "oddless", "result": verdict(oddless.passed)});
    if let Some(u) = oddless.first_mismatch {
        odd["counterexample"] = json!([u]);
    }
    entries.push(odd);
    let passed = p2.passed() && eq26.passed && oddless.passed;
    match cli.format {
        Format::Text => {
            for e in &entries {
                println!(
                    "{} {}",
                    e["axiom"].as_str().unwrap_or(""),
                    e["result"].as_str().unwrap_or("")
                );
            }
        }
        _ => print_json(&json!({
            "limit": limit,
            "eq26_limit": eq26_limit,
            "oddless_limit": oddless_limit,
            "results": entries,
        }))?,
    }
    Ok(if passed { Status::Ok } else { Status::Failed })
}

fn verify(cli: &Cli, suite: &str, quick: bool) -> Result<Status> {
    let opts = SuiteOptions {
        seed: cli.seed,
        extended: !quick,
    };
    let reports: Vec<SuiteReport> = if suite == "all" {
        suites::run_all(&opts)
    } else {
        let s: Suite = suite.parse().map_err(|e: String| anyhow!(e))?;
        vec![suites::run(s, &opts)]
    };
    let passed = reports.iter().all(|r| r.passed);
    match cli.format {
        Format::Json => print_json(&json!({"seed": cli.seed, "passed": passed, "suites": reports}))?,
        _ => {
            println!("seed {}", cli.seed);
            for r in &reports {
                for c in &r.checks {
                    let mark = if c.passed { "PASS" } else { "FAIL" };
                    let detail = if c.detail.is_empty() || c.passed {
                        String::new()
                    } else {
                        format!(": {}", c.detail)
                    };
                    println!("{mark} {:<11} {}{detail}", r.suite.name(), c.name);
                }
            }
            println!(
                "{}",
                if passed {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
        }
    }
    Ok(if passed { Status::Ok } else { Status::Failed })
}
