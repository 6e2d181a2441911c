//! One function per subcommand; each returns both renderings of its result.

use std::fmt::Write;

use num_bigint::BigInt;
use qchar_core::character::{
    dimension_by_specialization, CharacterCache, DimensionError, DimensionSign, Route,
    DIMENSION_RANK_CAP,
};
use qchar_core::multiplicity::{block_closure, build_block, check_block, composition_factors};
use qchar_core::paths::{left_move_result, left_moves, left_paths, level, right_move};
use qchar_core::verify::{render_report, run_sweep, Suite, Sweep};
use qchar_core::weight::ModuleType;
use qchar_core::{Weight, WeightDiagram};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{CharacterKind, Cli, Command, RouteChoice};
use crate::output;

/// Rendered result of a command; `ok = false` reports a failed check (exit status 1).
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse weight `{0}`: expected comma-separated integers")]
    Parse(String),
    #[error("{0} is vanishing: a nonzero entry repeats")]
    Vanishing(Weight),
    #[error("{0} is not dominant")]
    NotDominant(Weight),
    #[error("rank {n} exceeds the dimension formula cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("{0}")]
    Sweep(String),
    #[error("dimension formula failed for {weight}: {detail}")]
    Dimension { weight: Weight, detail: String },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Sweep(_) => 2,
            _ => 1,
        }
    }
}

pub fn run(cli: Cli) -> Result<Report, CliError> {
    let cap = cli.level_cap;
    match cli.command {
        Command::Diagram(w) => diagram(&dominant(&w.weight)?),
        Command::Stats(w) => Ok(stats(&parse_weight(&w.weight)?)),
        Command::Moves(w) => Ok(moves(&dominant(&w.weight)?)),
        Command::Paths(w) => Ok(paths(&dominant(&w.weight)?)),
        Command::Factors { weight, block } => Ok(factors(&dominant(&weight.weight)?, block, cap)),
        Command::Character {
            weight,
            kind,
            route,
        } => Ok(character(&dominant(&weight.weight)?, kind, route, cap)),
        Command::Dimension { weight, route } => dimension(&dominant(&weight.weight)?, route),
        Command::Verify { sweep, route } => verify(&sweep, route),
    }
}

/// Parses `a,b,c` (optionally wrapped in parentheses) into a weight with at least one entry.
pub fn parse_weight(csv: &str) -> Result<Weight, CliError> {
    let body = csv.trim().trim_start_matches('(').trim_end_matches(')');
    let entries: Result<Vec<i64>, _> = body.split(',').map(|s| s.trim().parse::<i64>()).collect();
    match entries {
        Ok(v) if !v.is_empty() => Ok(Weight(v)),
        _ => Err(CliError::Parse(csv.to_string())),
    }
}

fn dominant(csv: &str) -> Result<Weight, CliError> {
    let w = parse_weight(csv)?;
    if !w.is_regular() {
        Err(CliError::Vanishing(w))
    } else if !w.is_dominant() {
        Err(CliError::NotDominant(w))
    } else {
        Ok(w)
    }
}

fn diagram(lambda: &Weight) -> Result<Report, CliError> {
    let d =
        WeightDiagram::from_weight(lambda).map_err(|_| CliError::NotDominant(lambda.clone()))?;
    let symbols: Vec<Value> = d
        .symbols
        .iter()
        .map(|(v, s)| json!([v, s.as_str()]))
        .collect();
    let crosses = d.crosses();
    let text = format!(
        "D{lambda}\n{}\ncrosses: {}\n",
        d.render().trim_end(),
        join(&crosses)
    );
    let json = json!({
        "weight": output::weight(lambda),
        "zeroCross": d.zero_cross,
        "bot": d.bot,
        "symbols": symbols,
        "crosses": crosses,
    });
    Ok(Report {
        text,
        json,
        ok: true,
    })
}

fn stats(w: &Weight) -> Report {
    let s = w.stats();
    let mut text = format!(
        "weight {w}\nz = {}\nzbar = {}\nh = {}\ndominant: {}\nregular: {}\n",
        s.z, s.zbar, s.h, s.dominant, s.regular
    );
    let module_type = match s.module_type {
        ModuleType::M => "M",
        ModuleType::Q => "Q",
    };
    let mut json = json!({
        "weight": output::weight(w),
        "z": s.z,
        "zbar": s.zbar,
        "h": s.h,
        "dominant": s.dominant,
        "regular": s.regular,
        "moduleType": module_type,
    });
    if s.dominant {
        let _ = writeln!(text, "type: {module_type}");
    }
    if let Some(a) = w.atypical_data() {
        let roots: Vec<(usize, usize)> = a.roots.iter().map(|&(m, n)| (m + 1, n + 1)).collect();
        let roots_text: Vec<String> = roots.iter().map(|(m, n)| format!("e{m}-e{n}")).collect();
        let _ = writeln!(text, "atypicality r = {}", a.degree());
        let _ = writeln!(text, "atypical roots: {}", roots_text.join(", "));
        let _ = writeln!(text, "atypical tuple: ({})", join(&a.atypical_tuple));
        let _ = writeln!(text, "typical tuple: ({})", join(&a.typical_tuple));
        let _ = writeln!(text, "frame: {}", a.frame);
        json["atypicality"] = json!(a.degree());
        json["roots"] = json!(roots);
        json["atypicalTuple"] = json!(a.atypical_tuple);
        json["typicalTuple"] = json!(a.typical_tuple);
        json["frame"] = output::weight(&a.frame);
    }
    if s.dominant {
        let lv = level(w);
        let _ = writeln!(text, "level: {lv}");
        json["level"] = json!(lv);
    }
    Report {
        text,
        json,
        ok: true,
    }
}

fn moves(lambda: &Weight) -> Report {
    let d = WeightDiagram::from_weight(lambda).expect("dominant");
    let xs = d.crosses();
    let mut text = format!("right moves of {lambda}\n");
    let mut right = Vec::new();
    for i in 1..=xs.len() {
        let m = right_move(lambda, i);
        let _ = writeln!(
            text,
            "  R_{i}: x at {} -> {} (k = {}) gives {}",
            xs[i - 1],
            m.target,
            m.k,
            m.result
        );
        right.push(json!({
            "i": i, "from": xs[i - 1], "target": m.target, "k": m.k,
            "result": output::weight(&m.result),
        }));
    }
    let _ = writeln!(text, "left moves of {lambda}");
    let mut left = Vec::new();
    for m in left_moves(lambda) {
        let result = left_move_result(lambda, m);
        let shown = result
            .as_ref()
            .map_or_else(|| "-".to_string(), |w| w.to_string());
        let _ = writeln!(
            text,
            "  L_({},{}): x at {} -> {} gives {shown}",
            m.i,
            m.j,
            xs[m.j - 1],
            m.target
        );
        left.push(json!({
            "i": m.i, "j": m.j, "from": xs[m.j - 1], "target": m.target,
            "result": result.as_ref().map(output::weight),
        }));
    }
    Report {
        text,
        json: json!({ "weight": output::weight(lambda), "right": right, "left": left }),
        ok: true,
    }
}

fn paths(lambda: &Weight) -> Report {
    let all = left_paths(lambda);
    let mut text = format!("{} left paths of {lambda}\n", all.len());
    let mut list = Vec::new();
    for (p, w) in &all {
        let _ = writeln!(text, "  {} -> {w}", p.token_with_targets());
        list.push(json!({
            "path": p.token(),
            "moves": p.moves.iter().map(|m| json!({"i": m.i, "j": m.j, "target": m.target})).collect::<Vec<_>>(),
            "weight": output::weight(w),
        }));
    }
    Report {
        text,
        json: json!({ "weight": output::weight(lambda), "count": all.len(), "paths": list }),
        ok: true,
    }
}

fn factors(lambda: &Weight, with_block: bool, cap: Option<i64>) -> Report {
    let fs = composition_factors(lambda);
    let mut text = format!("{} composition factors of E{lambda}\n", fs.len());
    let mut list = Vec::new();
    for (p, mu, a) in &fs {
        let _ = writeln!(text, "  [E{lambda} : L{mu}] = {a}   via {}", p.token());
        list.push(json!({ "weight": output::weight(mu), "multiplicity": output::big(a), "path": p.token() }));
    }
    let mut json = json!({ "weight": output::weight(lambda), "factors": list });
    let mut ok = true;
    if with_block {
        let block = build_block(block_closure(lambda, cap), cap);
        let check = check_block(&block);
        ok = check.is_ok();
        let _ = writeln!(
            text,
            "block of {} weights (largest first):",
            block.index.len()
        );
        for w in &block.index {
            let _ = writeln!(text, "  {w}");
        }
        let _ = write!(
            text,
            "A =\n{}B =\n{}",
            output::matrix_text(&block.a),
            output::matrix_text(&block.b)
        );
        let verdict = match &check {
            Ok(()) => "A·B = I, both upper unitriangular".to_string(),
            Err(f) => format!("inversion fails: {f:?}"),
        };
        let _ = writeln!(text, "{verdict}");
        json["block"] = json!({
            "index": block.index.iter().map(output::weight).collect::<Vec<_>>(),
            "a": output::matrix(&block.a),
            "b": output::matrix(&block.b),
            "inverse": ok,
        });
    }
    Report { text, json, ok }
}

fn route_name(r: Route) -> &'static str {
    match r {
        Route::Matrix => "matrix",
        Route::Closed => "closed",
        Route::Cone => "cone",
    }
}

fn routes(choice: RouteChoice) -> Vec<Route> {
    match choice {
        RouteChoice::Closed => vec![Route::Closed],
        RouteChoice::Cone => vec![Route::Cone],
        RouteChoice::Both => vec![Route::Closed, Route::Cone],
        RouteChoice::Matrix => vec![Route::Matrix],
    }
}

fn character(
    lambda: &Weight,
    kind: CharacterKind,
    choice: RouteChoice,
    cap: Option<i64>,
) -> Report {
    let mut cache = CharacterCache::new();
    if kind == CharacterKind::Euler {
        let ch = cache.euler_character(lambda);
        let text = format!("ch E{lambda} = {ch}\ndimension {}\n", ch.coefficient_sum());
        let json = json!({
            "weight": output::weight(lambda), "kind": "euler",
            "terms": output::character(&ch), "dimension": output::big(&ch.coefficient_sum()),
        });
        return Report {
            text,
            json,
            ok: true,
        };
    }
    let results: Vec<(Route, qchar_core::Laurent)> = routes(choice)
        .into_iter()
        .map(|r| (r, cache.simple_character(lambda, r, cap)))
        .collect();
    let mut text = String::new();
    let mut by_route = serde_json::Map::new();
    for (r, ch) in &results {
        let _ = writeln!(text, "ch L{lambda} [{}] = {ch}", route_name(*r));
        by_route.insert(route_name(*r).to_string(), output::character(ch));
    }
    let (_, first) = &results[0];
    let mismatch = results[1..]
        .iter()
        .find_map(|(r, ch)| first.first_difference(ch).map(|d| (*r, d)));
    let ok = mismatch.is_none();
    match &mismatch {
        None => {
            let _ = writeln!(text, "dimension {}", first.coefficient_sum());
        }
        Some((r, (e, a, b))) => {
            let _ = writeln!(
                text,
                "routes disagree: at x^{e:?} {} gives {a}, {} gives {b}",
                route_name(results[0].0),
                route_name(*r)
            );
        }
    }
    let json = json!({
        "weight": output::weight(lambda),
        "kind": "simple",
        "routes": by_route,
        "agree": ok,
        "terms": output::character(first),
        "dimension": output::big(&first.coefficient_sum()),
    });
    Report { text, json, ok }
}

fn dimension(lambda: &Weight, choice: RouteChoice) -> Result<Report, CliError> {
    if lambda.n() > DIMENSION_RANK_CAP {
        return Err(CliError::CapExceeded {
            n: lambda.n(),
            cap: DIMENSION_RANK_CAP,
        });
    }
    let mut cache = CharacterCache::new();
    let spec = dimension_by_specialization(lambda);
    let mut text = format!("dim L{lambda}\n");
    let mut json =
        json!({ "weight": output::weight(lambda), "specialization": output::big(&spec) });
    let mut ok = true;
    for r in routes(choice) {
        let d: BigInt = cache
            .dimension_by_route(lambda, r, DimensionSign::Corrected)
            .map_err(|e| CliError::Dimension {
                weight: lambda.clone(),
                detail: describe(&e),
            })?;
        ok &= d == spec;
        let _ = writeln!(text, "  {} formula: {d}", route_name(r));
        json[route_name(r)] = output::big(&d);
    }
    let _ = writeln!(text, "  specialization: {spec}");
    if !ok {
        let _ = writeln!(text, "dimension routes disagree");
    }
    json["agree"] = json!(ok);
    Ok(Report { text, json, ok })
}

fn describe(e: &DimensionError) -> String {
    match e {
        DimensionError::NotDominant => "weight is not dominant".to_string(),
        DimensionError::RankTooLarge { n, cap } => format!("rank {n} exceeds cap {cap}"),
        DimensionError::NotInteger(q) => format!("non-integer value {q}"),
        DimensionError::Negative(v) => format!("negative value {v}"),
    }
}

fn verify(spec: &str, choice: RouteChoice) -> Result<Report, CliError> {
    let sweep = Sweep::parse(spec).map_err(|e| CliError::Sweep(e.0))?;
    let suites: Vec<Suite> = Suite::ALL
        .into_iter()
        .filter(|s| match s {
            Suite::ClosedRoute => matches!(choice, RouteChoice::Closed | RouteChoice::Both),
            Suite::ConeRoute => matches!(choice, RouteChoice::Cone | RouteChoice::Both),
            _ => true,
        })
        .collect();
    let reports = run_sweep(&sweep, &suites);
    let ok = reports.iter().all(|r| r.passed());
    let mut text = format!(
        "sweep n<={},max={}: {} weights\n",
        sweep.max_n,
        sweep.bound,
        sweep.weights().len()
    );
    for r in &reports {
        let _ = writeln!(text, "{}", render_report(r));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(
        text,
        "{} of {} suites passed",
        reports.len() - failed,
        reports.len()
    );
    let json = json!({
        "sweep": { "maxN": sweep.max_n, "bound": sweep.bound },
        "suites": reports.iter().map(|r| json!({
            "suite": r.suite.name(),
            "checked": r.checked,
            "failed": r.failed,
            "firstFailure": r.first_failure,
        })).collect::<Vec<_>>(),
        "ok": ok,
    });
    Ok(Report { text, json, ok })
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
