//! Acceptance run: one PASS/FAIL line per criterion, each followed by indented details.
//!
//! Criteria are evaluated exactly as stated; a FAIL is reported, never softened. The
//! process exits 0 so that `cargo test` completes and the report stays readable; set
//! `ACCEPTANCE_STRICT=1` to turn any FAIL into a nonzero exit status.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use qchar_core::character::{
    clifford_factor, dimension_by_specialization, dimension_closed, CharacterCache, Route,
};
use qchar_core::diagram::Symbol;
use qchar_core::multiplicity::{
    act, b_zero_product, b_zero_product_with, block_closure, c_hat_diagram, s_lambda,
    ProductReading,
};
use qchar_core::paths::{left_paths, left_paths_to, level, right_path, right_target};
use qchar_core::verify::{
    check_c_relation, check_dual_route, check_grothendieck, check_inversion,
    check_reduction_invariance, check_sign_identity, Sweep,
};
use qchar_core::{dominant_weights, reduce, Frame, Laurent, Weight, WeightDiagram};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    details: Vec<String>,
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "golden q(16) weight: diagram, right moves, left paths, c-relation",
            golden,
        ),
        ("staircase path counts for r = 1..5", path_counts),
        ("A·B = I on every block with n ≤ 4, |λ_i| ≤ 3", inversion),
        (
            "right-path and left-path multiplicities agree; reduction invariance",
            dual_route,
        ),
        (
            "arithmetic c-relation equals the diagrammatic one for n ≤ 8, entries ≤ 6",
            c_relation,
        ),
        (
            "ch E(λ) = Σ a_λμ ch L(μ) for n ≤ 4, |λ_i| ≤ 3",
            grothendieck,
        ),
        (
            "closed and cone characters agree, nonnegative, top coefficient 2^⌊(h+1)/2⌋",
            routes,
        ),
        (
            "closed dimension formula equals specialization; anchored dimensions",
            dimensions,
        ),
        (
            "#Θ^λ_μ = #S^λ and the closed b^λ_0 product on reduced λ, r ≤ 3, entries ≤ 5",
            bijection,
        ),
        ("(−1)^|θ| = (−1)^|λ−μ| for every θ ∈ Θ^λ_μ", sign_identity),
    ];
    let mut failures = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        failures += usize::from(!outcome.pass);
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {}: {title} [{}]", k + 1, secs(elapsed));
        for d in &outcome.details {
            println!("    {d}");
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    if strict && failures > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn criterion_sweep() -> Vec<Weight> {
    Sweep { max_n: 4, bound: 3 }.weights()
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "MISMATCH"
    }
}

/// Runs `check` on every weight; returns the failure count and the first message.
fn count_failures(
    weights: &[Weight],
    mut check: impl FnMut(&Weight) -> Result<(), String>,
) -> (usize, Option<String>) {
    let mut failed = 0;
    let mut first = None;
    for w in weights {
        if let Err(e) = check(w) {
            failed += 1;
            first.get_or_insert(e);
        }
    }
    (failed, first)
}

fn summary(label: &str, total: usize, (failed, first): (usize, Option<String>)) -> String {
    match first {
        None => format!("{label}: {total}/{total} ok"),
        Some(msg) => format!("{label}: {failed}/{total} fail; first: {msg}"),
    }
}

fn golden() -> Outcome {
    let start = Instant::now();
    let lambda = Weight(vec![7, 5, 4, 2, 1, 0, 0, 0, 0, 0, -1, -2, -4, -7, -8, -10]);
    let d = WeightDiagram::from_weight(&lambda).expect("dominant");
    let mut details = Vec::new();

    let diagram_ok = d.crosses() == [0, 0, 1, 2, 4, 7]
        && d.bot
        && d.symbols.get(&5) == Some(&Symbol::Right)
        && d.symbols.get(&8) == Some(&Symbol::Left)
        && d.symbols.get(&10) == Some(&Symbol::Left)
        && d.symbols.len() == 7;
    details.push(format!(
        "diagram crosses {:?}, ⊥ {}: {}",
        d.crosses(),
        d.bot,
        mark(diagram_ok)
    ));

    let targets: Vec<i64> = (1..=6).map(|i| right_target(&d, i)).collect();
    let targets_ok = targets == [15, 13, 11, 3, 6, 9];
    details.push(format!(
        "right-move targets {targets:?}: {}",
        mark(targets_ok)
    ));

    let full = right_path(&lambda, &[1; 6]);
    let full_ok = full
        == Weight(vec![
            15, 13, 11, 9, 6, 5, 3, 0, -3, -6, -8, -9, -10, -11, -13, -15,
        ]);
    details.push(format!("R_(1,…,1) = {full}: {}", mark(full_ok)));

    let got: BTreeSet<String> = left_paths(&lambda).iter().map(|(p, _)| p.token()).collect();
    let expected: BTreeSet<String> = ["Lempty", "L(5,5)", "L(6,6)", "L(5,6)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let theta_ok = got == expected;
    details.push(format!(
        "Θ^λ = {{{}}}, expected {{{}}}: {}",
        got.iter().cloned().collect::<Vec<_>>().join(", "),
        expected.iter().cloned().collect::<Vec<_>>().join(", "),
        mark(theta_ok)
    ));
    if !theta_ok {
        let extra: Vec<&String> = got.difference(&expected).collect();
        details.push(format!(
            "extra paths {extra:?} are right-path preimages (composition factors)"
        ));
    }

    let chat = c_hat_diagram(&lambda);
    let chat_ok = (1..=6).all(|s| (s..=6).all(|t| chat.get(s, t) == (s <= 3 || s == t)));
    details.push(format!(
        "ĉ_st = 1 exactly for s ≤ 3 or s = t: {}",
        mark(chat_ok)
    ));

    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(1);
    details.push(format!("runtime {} < 1s: {}", secs(elapsed), mark(fast)));
    Outcome {
        pass: diagram_ok && targets_ok && full_ok && theta_ok && chat_ok && fast,
        details,
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn path_counts() -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut details = Vec::new();
    for r in 1..=5i64 {
        let odd: Vec<i64> = (1..=r)
            .rev()
            .map(|k| 2 * k - 1)
            .chain((1..=r).map(|k| 1 - 2 * k))
            .collect();
        let even: Vec<i64> = (1..=r)
            .rev()
            .map(|k| 2 * k)
            .chain([0])
            .chain((1..=r).map(|k| -2 * k))
            .collect();
        let (a, b) = (
            left_paths(&Weight(odd)).len() as u64,
            left_paths(&Weight(even)).len() as u64,
        );
        let (ea, eb) = (
            binom(2 * r as u64, r as u64),
            binom(2 * r as u64 + 2, r as u64 + 1) / 2,
        );
        pass &= a == ea && b == eb;
        details.push(format!("r={r}: odd {a} (want {ea}), even {b} (want {eb})"));
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(30);
    details.push(format!("runtime {} < 30s: {}", secs(elapsed), mark(fast)));
    Outcome {
        pass: pass && fast,
        details,
    }
}

fn inversion() -> Outcome {
    let start = Instant::now();
    let ws = criterion_sweep();
    let res = count_failures(&ws, check_inversion);
    let ok = res.0 == 0;
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(120);
    Outcome {
        pass: ok && fast,
        details: vec![
            summary("seeds", ws.len(), res),
            format!("runtime {} < 120s: {}", secs(elapsed), mark(fast)),
        ],
    }
}

fn dual_route() -> Outcome {
    let ws = criterion_sweep();
    let a = count_failures(&ws, check_dual_route);
    let b = count_failures(&ws, check_reduction_invariance);
    let pass = a.0 == 0 && b.0 == 0;
    Outcome {
        pass,
        details: vec![
            summary("right vs left paths", ws.len(), a),
            summary("reduction invariance", ws.len(), b),
        ],
    }
}

fn c_relation() -> Outcome {
    let ws: Vec<Weight> = (1..=8).flat_map(|n| dominant_weights(n, 6)).collect();
    let res = count_failures(&ws, check_c_relation);
    Outcome {
        pass: res.0 == 0,
        details: vec![summary("dominant weights", ws.len(), res)],
    }
}

fn grothendieck() -> Outcome {
    let start = Instant::now();
    let ws = criterion_sweep();
    let mut cache = CharacterCache::new();
    let res = count_failures(&ws, |w| check_grothendieck(&mut cache, w));
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(300);
    Outcome {
        pass: res.0 == 0 && fast,
        details: vec![
            summary("weights", ws.len(), res),
            format!("runtime {} < 300s: {}", secs(elapsed), mark(fast)),
        ],
    }
}

fn positive_with_top(lambda: &Weight, ch: &Laurent) -> bool {
    ch.all_nonnegative()
        && ch
            .terms()
            .next()
            .is_some_and(|(e, c)| *e == lambda.0 && *c == clifford_factor(lambda))
}

fn routes() -> Outcome {
    let ws = criterion_sweep();
    let mut cache = CharacterCache::new();
    let mut disagree = Vec::new();
    let mut bad_shape = Vec::new();
    let (mut closed_vs_ref, mut cone_vs_ref) = (0, 0);
    for w in &ws {
        let closed = cache.simple_character(w, Route::Closed, None);
        let cone = cache.simple_character(w, Route::Cone, None);
        let reference = cache.simple_character(w, Route::Matrix, None);
        if closed != cone {
            disagree.push(w.to_string());
        }
        if !positive_with_top(w, &closed) || !positive_with_top(w, &cone) {
            bad_shape.push(w.to_string());
        }
        closed_vs_ref += usize::from(closed != reference);
        cone_vs_ref += usize::from(cone != reference);
    }
    let pass = disagree.is_empty() && bad_shape.is_empty();
    let head = |v: &[String]| v.iter().take(4).cloned().collect::<Vec<_>>().join(" ");
    Outcome {
        pass,
        details: vec![
            format!("closed ≠ cone on {}/{} weights: {}", disagree.len(), ws.len(), head(&disagree)),
            format!("negative coefficient or wrong top term on {} weights: {}", bad_shape.len(), head(&bad_shape)),
            format!(
                "against Σ b_λμ ch E(μ): closed differs on {closed_vs_ref}, cone differs on {cone_vs_ref} (all with ⊥ for cone)"
            ),
        ],
    }
}

fn dimensions() -> Outcome {
    let ws = criterion_sweep();
    let res = count_failures(&ws, |w| {
        let spec = dimension_by_specialization(w);
        match dimension_closed(w, Route::Closed) {
            Ok(d) if d == spec => Ok(()),
            Ok(d) => Err(format!("{w}: closed {d}, specialization {spec}")),
            Err(e) => Err(format!("{w}: {e:?}")),
        }
    });
    let mut anchors_ok = true;
    let mut anchors = Vec::new();
    for n in 2..=4 {
        for (w, want) in [(Weight::zero(n), 1), (Weight::epsilon1(n), 2 * n as i64)] {
            let spec = dimension_by_specialization(&w);
            let closed = dimension_closed(&w, Route::Closed);
            let ok = spec == BigInt::from(want) && closed == Ok(BigInt::from(want));
            anchors_ok &= ok;
            anchors.push(format!(
                "dim L{w} = {spec}{}",
                if ok { "" } else { " (MISMATCH)" }
            ));
        }
    }
    Outcome {
        pass: res.0 == 0 && anchors_ok,
        details: vec![
            summary("closed = specialization", ws.len(), res),
            anchors.join(", "),
        ],
    }
}

/// Reduced dominant weights: `2r + z̄` entries, `r` crosses, no `<`/`>` vertices.
fn reduced_weights(max_r: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for r in 1..=max_r {
        for zbar in 0..=1 {
            for w in dominant_weights(2 * r + zbar, bound) {
                let d = WeightDiagram::from_weight(&w).expect("dominant");
                if d.degree() == r
                    && usize::from(d.bot) == zbar
                    && d.symbols.values().all(|s| *s == Symbol::Cross)
                {
                    out.push(w);
                }
            }
        }
    }
    out
}

fn bijection() -> Outcome {
    let lambdas = reduced_weights(3, 5);
    let (mut pairs, mut literal_bad, mut refined_bad, mut refined_plain_bad) =
        (0usize, 0usize, 0usize, 0usize);
    let mut first_literal = None;
    for lambda in &lambdas {
        let (frame, top) = Frame::of(lambda);
        let sigmas = s_lambda(lambda);
        let images: Vec<Vec<i64>> = sigmas.iter().map(|s| act(s, &top)).collect();
        for j in nondecreasing_below(&top) {
            let mu = frame.build(&j);
            if !mu.is_regular() || !mu.is_dominant() {
                continue;
            }
            pairs += 1;
            let theta = left_paths_to(lambda, &mu, None).len();
            if theta != sigmas.len() {
                literal_bad += 1;
                first_literal.get_or_insert(format!(
                    "λ={lambda}, μ={mu}: #Θ={theta}, #S={}",
                    sigmas.len()
                ));
            }
            let refined = images
                .iter()
                .filter(|img| {
                    (0..j.len()).all(|p| j[p] <= *img[p..].iter().min().expect("non-empty"))
                })
                .count();
            if theta != refined {
                refined_bad += 1;
                let d = WeightDiagram::from_weight(lambda).expect("dominant");
                refined_plain_bad += usize::from(!d.bot && d.zero_cross == 0);
            }
        }
    }
    let (mut product_bad, mut variant_total, mut variant_bad) = (0usize, 0usize, 0usize);
    let mut first_product = None;
    for lambda in &lambdas {
        let count = BigRational::from_integer(BigInt::from(
            left_paths_to(lambda, &Weight::zero(lambda.n()), None).len(),
        ));
        let printed = b_zero_product(lambda);
        if printed != count {
            product_bad += 1;
            first_product.get_or_insert(format!("λ={lambda}: product {printed}, #Θ^λ_0 = {count}"));
        }
        if WeightDiagram::from_weight(lambda)
            .expect("dominant")
            .zero_cross
            == 0
        {
            variant_total += 1;
            variant_bad +=
                usize::from(b_zero_product_with(lambda, ProductReading::RootIndexed) != count);
        }
    }
    Outcome {
        pass: literal_bad == 0 && product_bad == 0,
        details: vec![
            format!(
                "#Θ^λ_μ = #S^λ: {literal_bad}/{pairs} pairs fail over {} reduced λ; first: {}",
                lambdas.len(),
                first_literal.unwrap_or_else(|| "-".into())
            ),
            format!(
                "diagnostic: #Θ^λ_μ = #{{σ ∈ S^λ : μ ∈ P^(⪯σλ)}} fails on {refined_bad}/{pairs} pairs, \
                 {refined_plain_bad} of them with neither ⊥ nor vertex-0 crosses"
            ),
            format!(
                "closed b^λ_0 product = #Θ^λ_0: {product_bad}/{} fail; first: {}",
                lambdas.len(),
                first_product.unwrap_or_else(|| "-".into())
            ),
            format!(
                "diagnostic: root-indexed product with denominator r! fails on {variant_bad}/{variant_total} λ without vertex-0 crosses"
            ),
        ],
    }
}

/// Frame coordinates `0 ≤ j_1 ≤ ⋯ ≤ j_r` with `j_p ≤ top_p`.
fn nondecreasing_below(top: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &cap in top {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                let lo = prefix.last().copied().unwrap_or(0);
                (lo..=cap).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn sign_identity() -> Outcome {
    let ws = criterion_sweep();
    let res = count_failures(&ws, check_sign_identity);
    let with_bot = ws
        .iter()
        .filter(|w| w.zbar() == 1 && check_sign_identity(w).is_err())
        .count();
    let (mut reduced_bad_plain, mut reduced_bad_bot) = (0usize, 0usize);
    for w in &ws {
        let wr = reduce(w).expect("dominant");
        for mu in block_closure(w, None) {
            let gap = level(&wr) - level(&reduce(&mu).expect("dominant"));
            for theta in left_paths_to(w, &mu, None) {
                let size: i64 = theta.iter().map(|&t| i64::from(t)).sum();
                if (size - gap).rem_euclid(2) != 0 {
                    if w.zbar() == 1 {
                        reduced_bad_bot += 1;
                    } else {
                        reduced_bad_plain += 1;
                    }
                }
            }
        }
    }
    Outcome {
        pass: res.0 == 0,
        details: vec![
            summary("weights", ws.len(), res.clone()),
            format!("failing weights with ⊥: {with_bot}/{}", res.0),
            format!(
                "diagnostic: measured in reduced coordinates, parity fails for {reduced_bad_bot} θ with ⊥ and {reduced_bad_plain} without"
            ),
        ],
    }
}
