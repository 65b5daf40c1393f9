//! `oddcolor` command-line tool.
//!
//! Exit codes: 0 success, 1 negative finding (violation, failed coloring,
//! search without a witness), 2 usage, input or parameter errors.

mod args;

use std::fs;
use std::io::Read;
use std::ops::RangeInclusive;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use oddcolor::bounds::{bounds_table, to_csv, to_markdown};
use oddcolor::coloring::{
    find_coloring, layer_2_coloring, recursive_carve_coloring, CarveColoringOptions,
    CarveColoringOutcome, Coloring, FailureReport, DEFAULT_BUDGET,
};
use oddcolor::constructions::{
    cycle_graph, mycielski, random_graph, schrijver_graph, SchrijverParams, DEFAULT_SCHRIJVER_CAP,
};
use oddcolor::decomposition::carve_with;
use oddcolor::graph::{Graph, TwoColoring};
use oddcolor::io::{parse_dimacs, parse_edge_list, write_dimacs};
use oddcolor::oddgirth::{
    check_sphere_independence, odd_girth, OddCycleCertificate, SphereViolation,
};
use oddcolor::oracle::{exact_f, OracleConfig, OracleResult, OracleStatus, DEFAULT_V_CAP};
use serde::Serialize;
use serde_json::json;

use args::{
    BoundsArgs, CheckArgs, Cli, ColorArgs, ColorFormat, ColorMethod, Command, DecomposeArgs,
    GenArgs, GenKind, InputArgs, InputFormat, OracleArgs, TableFormat,
};

const SUCCESS: u8 = 0;
const NEGATIVE: u8 = 1;

/// Usage, input, or parameter error; reported on stderr with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    let result = match cli.command {
        Command::Bounds(a) => cmd_bounds(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Check(a) => cmd_check(a),
        Command::Color(a) => cmd_color(a),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Oracle(a) => cmd_oracle(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print_json(value: &impl Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// `"3"` or `"2..6"` (inclusive).
fn parse_range(text: &str, what: &str) -> Result<RangeInclusive<u64>, Failure> {
    let bad = || Failure(format!("invalid {what} range `{text}`"));
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok(parse(lo)?..=parse(hi)?)
        }
        None => {
            let v = parse(text)?;
            Ok(v..=v)
        }
    }
}

fn read_graph(input: &InputArgs) -> Result<Graph, Failure> {
    let path = &input.input;
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?
    };
    let dimacs = match input.input_format {
        InputFormat::Dimacs => true,
        InputFormat::Edges => false,
        InputFormat::Auto => path.extension().is_some_and(|e| e == "col"),
    };
    let parsed = if dimacs {
        parse_dimacs(&text)
    } else {
        parse_edge_list(&text)
    };
    parsed.map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn cmd_bounds(a: BoundsArgs) -> Outcome {
    let rows = bounds_table(parse_range(&a.n, "n")?, parse_range(&a.k, "k")?)?;
    match a.format {
        TableFormat::Csv => print!("{}", to_csv(&rows)),
        TableFormat::Markdown => print!("{}", to_markdown(&rows)),
        TableFormat::Json => print_json(&json!({ "command": "bounds", "rows": rows }))?,
    }
    Ok(SUCCESS)
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let (graph, comment) = match a.kind {
        GenKind::Schrijver { m, d, cap } => {
            let params = SchrijverParams::new(m, d)?;
            let sg = schrijver_graph(params, cap.unwrap_or(DEFAULT_SCHRIJVER_CAP))?;
            (sg.graph, format!("Schrijver graph SG({m}, {d})"))
        }
        GenKind::Cycle { len } => (cycle_graph(len)?, format!("cycle C{len}")),
        GenKind::Mycielski { input } => {
            let g = read_graph(&input)?;
            (
                mycielski(&g),
                format!("Mycielskian of {}", input.input.display()),
            )
        }
        GenKind::Random {
            vertices,
            density,
            seed,
        } => {
            if !(0.0..=1.0).contains(&density) {
                return Err(Failure(format!("density {density} is outside [0, 1]")));
            }
            (
                random_graph(vertices, density, seed),
                format!("random graph G({vertices}, {density}), seed {seed}"),
            )
        }
    };
    let text = write_dimacs(&graph, &[&comment]);
    match a.out {
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?
        }
        None => print!("{text}"),
    }
    Ok(SUCCESS)
}

#[derive(Serialize)]
struct ViolationReport {
    violation: SphereViolation,
    certificate: OddCycleCertificate,
}

fn cmd_check(a: CheckArgs) -> Outcome {
    if a.k < 2 {
        return Err(Failure(format!("k must be at least 2, got {}", a.k)));
    }
    let g = read_graph(&a.input)?;
    let result = check_sphere_independence(&g, a.k);
    let report = result.err().map(|violation| ViolationReport {
        violation,
        certificate: violation.to_certificate(&g),
    });
    let ok = report.is_none();
    print_json(&json!({
        "command": "check",
        "k": a.k,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "odd_girth": odd_girth(&g),
        "status": if ok { "ok" } else { "violation" },
        "violation": report,
    }))?;
    Ok(if ok { SUCCESS } else { NEGATIVE })
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
enum ColorResult {
    Colored { coloring: Coloring },
    Failed { report: FailureReport },
    NotColorable,
    BudgetExceeded { budget: u64 },
    OddCycle { certificate: OddCycleCertificate },
}

fn cmd_color(a: ColorArgs) -> Outcome {
    if a.n == 0 {
        return Err(Failure("n must be at least 1".into()));
    }
    let g = read_graph(&a.input)?;
    let result = match a.method {
        ColorMethod::Exact => {
            let budget = a.budget.unwrap_or(DEFAULT_BUDGET);
            match find_coloring(&g, a.n, budget) {
                Ok(Some(coloring)) => ColorResult::Colored { coloring },
                Ok(None) => ColorResult::NotColorable,
                Err(e) => ColorResult::BudgetExceeded { budget: e.budget },
            }
        }
        ColorMethod::Carve => {
            let opts = CarveColoringOptions {
                center_rule: a.rule.into(),
                variant: a.variant.into(),
            };
            match recursive_carve_coloring(&g, a.n, a.k, opts)? {
                CarveColoringOutcome::Colored { coloring } => ColorResult::Colored { coloring },
                CarveColoringOutcome::Failed { report } => ColorResult::Failed { report },
            }
        }
        ColorMethod::Layer => {
            if a.n < 2 && g.edge_count() > 0 {
                ColorResult::NotColorable
            } else {
                let c = layer_2_coloring(&g, a.center, a.k)?;
                ColorResult::Colored {
                    coloring: Coloring::new(c.assignment().to_vec(), a.n),
                }
            }
        }
        ColorMethod::Bipartite => match g.bipartite_2_coloring() {
            TwoColoring::Colored(c) if c.num_colors() <= a.n => ColorResult::Colored {
                coloring: Coloring::new(c.assignment().to_vec(), a.n),
            },
            TwoColoring::Colored(_) => ColorResult::NotColorable,
            TwoColoring::OddCycle(certificate) => ColorResult::OddCycle { certificate },
        },
    };
    let code = if matches!(result, ColorResult::Colored { .. }) {
        SUCCESS
    } else {
        NEGATIVE
    };
    match a.format {
        ColorFormat::Json => print_json(&json!({
            "command": "color",
            "method": a.method.to_possible_value_name(),
            "n": a.n,
            "k": a.k,
            "result": result,
        }))?,
        ColorFormat::Dimacs => match &result {
            ColorResult::Colored { coloring } => {
                println!(
                    "c {}-coloring, method {}",
                    a.n,
                    a.method.to_possible_value_name()
                );
                print!("{}", coloring.to_dimacs_lines());
            }
            _ => println!("c no coloring: {}", serde_json::to_string(&result)?),
        },
    }
    Ok(code)
}

trait ValueName {
    fn to_possible_value_name(&self) -> String;
}

impl<T: clap::ValueEnum> ValueName for T {
    fn to_possible_value_name(&self) -> String {
        self.to_possible_value()
            .map(|v| v.get_name().to_owned())
            .unwrap_or_default()
    }
}

fn cmd_decompose(a: DecomposeArgs) -> Outcome {
    let g = read_graph(&a.input)?;
    match carve_with(&g, a.k, a.rule.into(), a.variant.into()) {
        Ok(result) => {
            print_json(&json!({ "command": "decompose", "status": "ok", "result": result }))?;
            Ok(SUCCESS)
        }
        Err(oddcolor::decomposition::DecompositionError::SphereIndependence(violation)) => {
            print_json(&json!({
                "command": "decompose",
                "status": "violation",
                "violation": ViolationReport { violation, certificate: violation.to_certificate(&g) },
            }))?;
            Ok(NEGATIVE)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_oracle(a: OracleArgs) -> Outcome {
    let mut cfg = OracleConfig {
        v_cap: a.cap.unwrap_or(DEFAULT_V_CAP),
        ..OracleConfig::default()
    };
    if a.cap == Some(0) {
        return Err(Failure("cap must be positive".into()));
    }
    if a.no_prune {
        cfg = cfg.without_prunes();
    }
    cfg.prune_spheres = a.prune_spheres;
    let result: OracleResult = exact_f(a.n, a.k, a.vmax, cfg)?;
    let mut witness_path = None;
    if let (Some(path), Some(text)) = (&a.witness_out, result.witness_dimacs()) {
        fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        witness_path = Some(path.display().to_string());
    }
    print_json(&json!({
        "command": "oracle",
        "config": cfg,
        "result": result,
        "witness_dimacs": result.witness_dimacs(),
        "witness_path": witness_path,
    }))?;
    Ok(match result.status {
        OracleStatus::Exact => SUCCESS,
        OracleStatus::LowerBoundOnly => NEGATIVE,
    })
}
