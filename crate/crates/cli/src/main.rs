//! `fused-specht`: enumeration, computation and verification from the command line.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use fused_specht::blocks::{block_general, mobius_check, verify_symmetrizer, verify_tl, verify_valenced, BlockBasis, MobiusMap};
use fused_specht::bpz::{verify_bpz, BpzOptions};
use fused_specht::hecke::verify_simple_module_dims;
use fused_specht::specht::{fused_specht_combinatorial, fused_specht_limit, schur_bialternant, schur_ones, specht};
use fused_specht::tableaux::enumerate_tableaux;
use fused_specht::verify::{run_suite, SuiteConfig};
use fused_specht::virasoro::verify_singular;
use fused_specht::{Filling, Partition, TableauClass, Valences, Q};

#[derive(Parser)]
#[command(name = "fused-specht", version, about = "Fused Specht polynomials and c=1 conformal blocks")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run independent checks on all cores.
    #[arg(long, global = true)]
    parallel: bool,
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the tableaux of a shape, content and class.
    Enumerate {
        #[arg(long)]
        shape: Partition,
        /// Valences; defaults to 1^n.
        #[arg(long)]
        content: Option<Valences>,
        /// syt, rsyt, csyt or all.
        #[arg(long, default_value = "csyt")]
        class: TableauClass,
    },
    /// Specht polynomial of a numbering.
    Specht {
        #[arg(long)]
        filling: Filling,
    },
    /// Fused Specht polynomial of a filling.
    #[command(alias = "eval")]
    Fused {
        #[arg(long)]
        filling: Filling,
        /// Content of the filling; must agree with its entries.
        #[arg(long)]
        content: Option<Valences>,
        /// limit, combinatorial or both.
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Schur polynomial in `vars` variables and its value at all ones.
    Schur {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        vars: usize,
    },
    /// Conformal block functions for a valence vector.
    Block {
        #[arg(long, required_unless_present = "tableau")]
        content: Option<Valences>,
        /// 1-based position in the enumeration order.
        #[arg(long, conflicts_with = "tableau")]
        index: Option<usize>,
        /// Explicit column-strict tableau of shape (N,N).
        #[arg(long)]
        tableau: Option<Filling>,
    },
    /// Dimensions of the simple modules of the fused Hecke algebra.
    HeckeDims {
        #[arg(long)]
        content: Valences,
    },
    /// Applies the null-vector operators to the block functions.
    VerifyBpz {
        #[arg(long)]
        content: Valences,
        /// Only this 1-based point.
        #[arg(long)]
        point: Option<usize>,
        /// Only this 1-based block.
        #[arg(long)]
        block: Option<usize>,
        /// Print the residual even when it vanishes.
        #[arg(long)]
        emit_residual: bool,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Temperley-Lieb relations on 2N unit-valence points.
    VerifyTl {
        /// Number of points 2N.
        #[arg(long)]
        n: usize,
        /// Also check the symmetrizer of this valence vector (summing to 2N).
        #[arg(long)]
        symmetrizer: Option<Valences>,
        /// Also check the valenced algebra of this valence vector.
        #[arg(long)]
        valences: Option<Valences>,
    },
    /// Möbius covariance of the block functions.
    VerifyMobius {
        #[arg(long)]
        content: Valences,
        /// `translation:B`, `scaling:A`, `inversion` or `a,b,c,d`; defaults to one of each kind.
        #[arg(long)]
        map: Vec<String>,
        /// Rational chamber point; defaults to 1,2,4,7,...
        #[arg(long)]
        at: Option<String>,
    },
    /// Null vector at level `l` of the Verma module of weight (l-1)^2/4.
    VerifySingular {
        #[arg(long)]
        level: u32,
    },
    /// Runs every acceptance suite.
    VerifyAll {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    all_passed: bool,
    wall_time: Option<f64>,
}

struct Outcome {
    inputs: Value,
    results: Value,
    passed: bool,
    text: Vec<String>,
}

fn parse_map(s: &str) -> anyhow::Result<MobiusMap> {
    let q = |t: &str| t.trim().parse::<Q>().map_err(|e| anyhow::anyhow!("{e}"));
    Ok(match s.split_once(':') {
        Some(("translation", b)) => MobiusMap::translation(q(b)?),
        Some(("scaling", a)) => MobiusMap::scaling(q(a)?),
        None if s == "inversion" => MobiusMap::inversion(),
        _ => {
            let parts: Vec<Q> = s.split(',').map(q).collect::<anyhow::Result<_>>()?;
            let [a, b, c, d] = <[Q; 4]>::try_from(parts).map_err(|_| anyhow::anyhow!("a Möbius map needs four entries"))?;
            MobiusMap::new(a, b, c, d)?
        }
    })
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Enumerate { .. } => "enumerate",
        Command::Specht { .. } => "specht",
        Command::Fused { .. } => "fused",
        Command::Schur { .. } => "schur",
        Command::Block { .. } => "block",
        Command::HeckeDims { .. } => "hecke-dims",
        Command::VerifyBpz { .. } => "verify-bpz",
        Command::VerifyTl { .. } => "verify-tl",
        Command::VerifyMobius { .. } => "verify-mobius",
        Command::VerifySingular { .. } => "verify-singular",
        Command::VerifyAll { .. } => "verify-all",
    }
}

fn run(cmd: &Command, g: &Global) -> anyhow::Result<Outcome> {
    Ok(match cmd {
        Command::Enumerate { shape, content, class } => {
            let content = content.clone().unwrap_or_else(|| Valences::ones(shape.size()));
            let ts = enumerate_tableaux(shape, &content, *class)?;
            let list: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
            let mut text = vec![format!("{} tableaux", ts.len())];
            text.extend(list.iter().cloned());
            Outcome {
                inputs: json!({"shape": shape, "content": content, "class": format!("{class:?}")}),
                results: json!({"count": ts.len(), "tableaux": list}),
                passed: true,
                text,
            }
        }
        Command::Specht { filling } => {
            let p = specht(filling)?;
            Outcome { inputs: json!({"filling": filling.to_string()}), text: vec![p.to_canonical_string()], results: json!(p), passed: true }
        }
        Command::Fused { filling, content, method } => {
            let f = match content {
                Some(c) => Filling::with_content(filling.rows().to_vec(), c)?,
                None => filling.clone(),
            };
            let inputs = json!({"filling": f.to_string(), "content": f.content(), "method": method});
            match method.as_str() {
                "limit" | "combinatorial" => {
                    let p = if method == "limit" { fused_specht_limit(&f)? } else { fused_specht_combinatorial(&f) };
                    Outcome { inputs, text: vec![p.to_canonical_string()], results: json!({"polynomial": p}), passed: true }
                }
                "both" => {
                    let (a, b) = (fused_specht_limit(&f)?, fused_specht_combinatorial(&f));
                    let agree = a == b;
                    let mut text = vec![a.to_canonical_string()];
                    if !agree {
                        text.push(format!("combinatorial form differs: {}", b.to_canonical_string()));
                    }
                    Outcome { inputs, text, results: json!({"polynomial": a, "combinatorial": b, "agree": agree}), passed: agree }
                }
                other => bail!("unknown method `{other}`"),
            }
        }
        Command::Schur { shape, vars } => {
            let p = schur_bialternant(shape, *vars)?;
            let ones = schur_ones(shape, *vars)?;
            Outcome {
                inputs: json!({"shape": shape, "vars": vars}),
                text: vec![p.to_canonical_string(), format!("value at ones: {ones}")],
                results: json!({"polynomial": p, "at_ones": ones}),
                passed: true,
            }
        }
        Command::Block { content, index, tableau } => {
            let elements = if let Some(t) = tableau {
                vec![(None, block_general(t)?)]
            } else {
                let v = content.as_ref().context("--content is required")?;
                let basis = BlockBasis::new(v)?;
                let all: Vec<_> = basis.elements.into_iter().enumerate().map(|(k, b)| (Some(k + 1), b)).collect();
                match index {
                    Some(i) if *i == 0 || *i > all.len() => bail!("--index must be between 1 and {}", all.len()),
                    Some(i) => vec![all[i - 1].clone()],
                    None => all,
                }
            };
            let text = elements.iter().map(|(k, b)| {
                let label = b.label.as_ref().map(|l| l.to_string()).unwrap_or_default();
                match k {
                    Some(k) => format!("[{k}] {label}: {}", b.function),
                    None => format!("{label}: {}", b.function),
                }
            });
            let results: Vec<Value> = elements
                .iter()
                .map(|(k, b)| json!({"index": k, "tableau": b.label.as_ref().map(|l| l.to_string()), "function": b.function, "fused": b.fused}))
                .collect();
            Outcome {
                inputs: json!({"content": content, "index": index, "tableau": tableau.as_ref().map(|t| t.to_string())}),
                text: text.collect(),
                results: json!(results),
                passed: true,
            }
        }
        Command::HeckeDims { content } => {
            let r = verify_simple_module_dims(content)?;
            let mut text: Vec<String> = r
                .shapes
                .iter()
                .map(|s| format!("{}: dim {} |RSYT| {} w-rank {}{}", s.shape, s.dimension, s.row_strict_count, s.w_rank, if s.consistent() { "" } else { "  MISMATCH" }))
                .collect();
            text.push(format!("sum of squares {} = algebra dimension {}", r.sum_of_squares, r.hecke_dimension));
            Outcome { inputs: json!({"content": content}), text, passed: r.all_passed, results: json!(r) }
        }
        Command::VerifyBpz { content, point, block, emit_residual, seed } => {
            let opts = BpzOptions { block: *block, point: *point, seed: *seed, parallel: g.parallel, emit_residual: *emit_residual, ..BpzOptions::default() };
            let r = verify_bpz(content, &opts)?;
            let text = r
                .results
                .iter()
                .map(|x| {
                    let mut line = format!(
                        "block {} ({}) point {} order {}: {} (float residual {:.1e})",
                        x.block,
                        x.tableau,
                        x.point,
                        x.order,
                        if x.passed() { "zero" } else { "NONZERO" },
                        x.shadow_max
                    );
                    if let Some(res) = &x.residual {
                        line.push_str(&format!("\n  residual: {res}"));
                    }
                    line
                })
                .collect();
            Outcome {
                inputs: json!({"content": content, "point": point, "block": block, "seed": seed}),
                text,
                passed: r.all_passed,
                results: json!(r.results),
            }
        }
        Command::VerifyTl { n, symmetrizer, valences } => {
            let mut checks = verify_tl(*n)?;
            if let Some(s) = symmetrizer {
                if s.n() != *n {
                    bail!("symmetrizer valences must sum to {n}");
                }
                checks.extend(verify_symmetrizer(s)?);
            }
            if let Some(v) = valences {
                checks.extend(verify_valenced(v)?);
            }
            let passed = checks.iter().all(|c| c.lhs_minus_rhs_is_zero);
            let text = checks.iter().map(|c| format!("{} {}", if c.lhs_minus_rhs_is_zero { "ok  " } else { "FAIL" }, c.relation)).collect();
            Outcome { inputs: json!({"n": n, "symmetrizer": symmetrizer, "valences": valences}), text, passed, results: json!(checks) }
        }
        Command::VerifyMobius { content, map, at } => {
            let maps: Vec<MobiusMap> = if map.is_empty() {
                vec![MobiusMap::translation(Q::new(3, 2)), MobiusMap::scaling(Q::int(2)), MobiusMap::inversion()]
            } else {
                map.iter().map(|m| parse_map(m)).collect::<anyhow::Result<_>>()?
            };
            let d = content.len();
            let point: Vec<Q> = match at {
                Some(s) => s.split(',').map(|t| t.trim().parse::<Q>()).collect::<Result<_, _>>()?,
                None => (0..d as i64).map(|k| Q::int(1 + k * (k + 1) / 2)).collect(),
            };
            let basis = BlockBasis::new(content)?;
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for (k, b) in basis.elements.iter().enumerate() {
                for m in &maps {
                    let r = mobius_check(b, m, &point)?;
                    text.push(format!("block {} map ({}, {}, {}, {}): {}", k + 1, m.a, m.b, m.c, m.d, if r.holds() { "ok" } else { "FAIL" }));
                    rows.push(json!({"block": k + 1, "report": r}));
                }
            }
            let passed = rows.iter().all(|r| r["report"]["squares_equal"] == true && r["report"]["positive_before"] == true && r["report"]["positive_after"] == true);
            Outcome { inputs: json!({"content": content, "point": point}), text, passed, results: json!(rows) }
        }
        Command::VerifySingular { level } => {
            let r = verify_singular(*level);
            let text = vec![format!(
                "level {}: h = {}, L1 {} L2 {}, L0 eigenvalue {}: {}",
                r.level,
                r.weight,
                if r.l1_zero { "kills" } else { "does not kill" },
                if r.l2_zero { "kills" } else { "does not kill" },
                r.l0_eigenvalue.as_ref().map(|q| q.to_string()).unwrap_or_else(|| "none".into()),
                if r.passed { "pass" } else { "FAIL" }
            )];
            Outcome { inputs: json!({"level": level}), text, passed: r.passed, results: json!(r) }
        }
        Command::VerifyAll { max_n } => {
            let cfg = SuiteConfig { parallel: g.parallel, ..SuiteConfig::with_max_n(*max_n) };
            let r = run_suite(&cfg);
            let text = r
                .criteria
                .iter()
                .map(|c| {
                    let time = if g.timing { format!(" ({:.2}s)", c.elapsed.as_secs_f64()) } else { String::new() };
                    format!("{} [{:>2}] {}{time}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.name, c.detail)
                })
                .collect();
            Outcome { inputs: json!({"max_n": max_n}), text, passed: r.all_passed, results: json!(r) }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let outcome = match run(&cli.command, &cli.global) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let report = Report {
        command: name(&cli.command),
        inputs: outcome.inputs,
        results: outcome.results,
        all_passed: outcome.passed,
        wall_time: cli.global.timing.then(|| start.elapsed().as_secs_f64()),
    };
    let rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Some(path) = &cli.global.out {
        if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let mut out = std::io::stdout().lock();
    if cli.global.json {
        let _ = writeln!(out, "{rendered}");
    } else {
        for line in &outcome.text {
            let _ = writeln!(out, "{line}");
        }
        if let Some(t) = report.wall_time {
            let _ = writeln!(out, "wall time {t:.3}s");
        }
    }
    if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
