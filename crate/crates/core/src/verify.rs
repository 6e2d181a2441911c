//! Sweep checks shared by the CLI and the test suites.
//!
//! Every check runs on one dominant weight and either passes or returns a short,
//! human-readable description of the first failure.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::character::{
    clifford_factor, dimension_closed, verify_grothendieck, CharacterCache, Route,
};
use crate::diagram::{reduce, Symbol, WeightDiagram};
use crate::multiplicity::{
    a_mult_left, a_mult_right, block_closure, c_hat_diagram, c_hat_lemma, verify_inversion,
    InversionFailure,
};
use crate::paths::{left_paths_to, level};
use crate::weight::{dominant_weights, Weight};

/// A family of dominant weights: every rank `1..=max_n` with entries in `[-bound, bound]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Sweep {
    pub max_n: usize,
    pub bound: i64,
}

/// Rejected sweep specifications.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SweepParseError(pub String);

impl Sweep {
    /// Parses `n<=N,max=B`, e.g. `n<=3,max=2`.
    pub fn parse(spec: &str) -> Result<Sweep, SweepParseError> {
        let err = || SweepParseError(format!("expected `n<=N,max=B`, got `{spec}`"));
        let mut max_n = None;
        let mut bound = None;
        for part in spec.split(',') {
            let part = part.trim();
            if let Some(v) = part.strip_prefix("n<=") {
                max_n = Some(v.trim().parse::<usize>().map_err(|_| err())?);
            } else if let Some(v) = part.strip_prefix("max=") {
                bound = Some(v.trim().parse::<i64>().map_err(|_| err())?);
            } else {
                return Err(err());
            }
        }
        match (max_n, bound) {
            (Some(n), Some(b)) if n >= 1 && b >= 0 => Ok(Sweep { max_n: n, bound: b }),
            _ => Err(err()),
        }
    }

    /// All weights of the sweep, rank by rank, each rank in descending order.
    pub fn weights(&self) -> Vec<Weight> {
        (1..=self.max_n)
            .flat_map(|n| dominant_weights(n, self.bound))
            .collect()
    }
}

/// The property suites run by [`run_sweep`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    DiagramRoundTrip,
    Inversion,
    DualRouteMultiplicity,
    ReductionInvariance,
    CRelation,
    Grothendieck,
    CharacterProperties,
    ClosedRoute,
    ConeRoute,
    Dimension,
    SignIdentity,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::DiagramRoundTrip,
        Suite::Inversion,
        Suite::DualRouteMultiplicity,
        Suite::ReductionInvariance,
        Suite::CRelation,
        Suite::Grothendieck,
        Suite::CharacterProperties,
        Suite::ClosedRoute,
        Suite::ConeRoute,
        Suite::Dimension,
        Suite::SignIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DiagramRoundTrip => "diagram-roundtrip",
            Suite::Inversion => "inversion",
            Suite::DualRouteMultiplicity => "dual-route-multiplicity",
            Suite::ReductionInvariance => "reduction-invariance",
            Suite::CRelation => "c-relation",
            Suite::Grothendieck => "grothendieck",
            Suite::CharacterProperties => "character-properties",
            Suite::ClosedRoute => "closed-route",
            Suite::ConeRoute => "cone-route",
            Suite::Dimension => "dimension",
            Suite::SignIdentity => "sign-identity",
        }
    }

    /// Runs this suite on one dominant weight.
    pub fn check(self, cache: &mut CharacterCache, lambda: &Weight) -> Result<(), String> {
        match self {
            Suite::DiagramRoundTrip => check_diagram_roundtrip(lambda),
            Suite::Inversion => check_inversion(lambda),
            Suite::DualRouteMultiplicity => check_dual_route(lambda),
            Suite::ReductionInvariance => check_reduction_invariance(lambda),
            Suite::CRelation => check_c_relation(lambda),
            Suite::Grothendieck => check_grothendieck(cache, lambda),
            Suite::CharacterProperties => check_character_properties(cache, lambda),
            Suite::ClosedRoute => check_route(cache, lambda, Route::Closed),
            Suite::ConeRoute => check_route(cache, lambda, Route::Cone),
            Suite::Dimension => check_dimension(lambda),
            Suite::SignIdentity => check_sign_identity(lambda),
        }
    }
}

/// Outcome of one suite over a sweep.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckReport {
    pub suite: Suite,
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `suites` over every weight of `sweep`.
pub fn run_sweep(sweep: &Sweep, suites: &[Suite]) -> Vec<CheckReport> {
    let weights = sweep.weights();
    let mut cache = CharacterCache::new();
    suites
        .iter()
        .map(|&suite| {
            let mut report = CheckReport {
                suite,
                checked: 0,
                failed: 0,
                first_failure: None,
            };
            for lambda in &weights {
                report.checked += 1;
                if let Err(msg) = suite.check(&mut cache, lambda) {
                    report.failed += 1;
                    report.first_failure.get_or_insert(msg);
                }
            }
            report
        })
        .collect()
}

pub fn check_diagram_roundtrip(lambda: &Weight) -> Result<(), String> {
    let d = WeightDiagram::from_weight(lambda).map_err(|e| format!("{lambda}: {e:?}"))?;
    match d.to_weight(lambda.n()) {
        Ok(w) if w == *lambda => Ok(()),
        other => Err(format!("{lambda}: diagram decodes to {other:?}")),
    }
}

/// `A·B = I` with `A`, `B` upper unitriangular on the block generated by `λ`.
pub fn check_inversion(lambda: &Weight) -> Result<(), String> {
    verify_inversion(lambda, None)
        .map(|_| ())
        .map_err(|f| match f {
            InversionFailure::NotUpperTriangular { matrix, row, col } => {
                format!(
                    "{lambda}: {matrix} has a nonzero entry below the diagonal at ({row}, {col})"
                )
            }
            InversionFailure::DiagonalNotOne { matrix, at } => {
                format!("{lambda}: {matrix} has a diagonal entry ≠ 1 at {at}")
            }
            InversionFailure::ProductNotIdentity { row, col, value } => {
                format!("{lambda}: (A·B)[{row}, {col}] = {value}")
            }
        })
}

/// `a_λμ` by right paths equals `a_λμ` by left paths for every `μ` in the block.
pub fn check_dual_route(lambda: &Weight) -> Result<(), String> {
    for mu in block_closure(lambda, None) {
        let (r, l) = (a_mult_right(lambda, &mu), a_mult_left(lambda, &mu));
        if r != l {
            return Err(format!(
                "a({lambda}, {mu}): right paths {r}, left paths {l}"
            ));
        }
    }
    Ok(())
}

fn non_cross_symbols(lambda: &Weight) -> Vec<(i64, Symbol)> {
    WeightDiagram::from_weight(lambda)
        .expect("dominant")
        .symbols
        .into_iter()
        .filter(|(_, s)| *s != Symbol::Cross)
        .collect()
}

/// `a_λμ = a_{λ_red μ_red}` for every `μ` in the block of `λ`.
pub fn check_reduction_invariance(lambda: &Weight) -> Result<(), String> {
    let core = non_cross_symbols(lambda);
    let lr = reduce(lambda).map_err(|e| format!("{lambda}: {e:?}"))?;
    for mu in block_closure(lambda, None) {
        if non_cross_symbols(&mu) != core {
            return Err(format!("{mu} left the block of {lambda}"));
        }
        let mr = reduce(&mu).map_err(|e| format!("{mu}: {e:?}"))?;
        let (a, b) = (a_mult_left(lambda, &mu), a_mult_left(&lr, &mr));
        if a != b {
            return Err(format!("a({lambda}, {mu}) = {a} but a({lr}, {mr}) = {b}"));
        }
    }
    Ok(())
}

/// `ch E(λ) = Σ_μ a_λμ ch L(μ)` as Laurent polynomials.
pub fn check_grothendieck(cache: &mut CharacterCache, lambda: &Weight) -> Result<(), String> {
    verify_grothendieck(cache, lambda).map_err(|m| {
        format!(
            "{lambda}: at x^{:?} ch E has {} but Σ a ch L has {}",
            m.exponent, m.euler, m.factors
        )
    })
}

/// The arithmetic c-relation equals the diagrammatic one.
pub fn check_c_relation(lambda: &Weight) -> Result<(), String> {
    let (lemma, diagram) = (c_hat_lemma(lambda), c_hat_diagram(lambda));
    if lemma == diagram {
        return Ok(());
    }
    for s in 1..=diagram.r {
        for t in s..=diagram.r {
            if lemma.get(s, t) != diagram.get(s, t) {
                return Err(format!(
                    "{lambda}: ĉ_{s}{t} is {} arithmetically, {} from the diagram",
                    u8::from(lemma.get(s, t)),
                    u8::from(diagram.get(s, t))
                ));
            }
        }
    }
    unreachable!("tables differ in some entry")
}

/// `ch L(λ)` is symmetric with nonnegative coefficients, and its top monomial is `e^λ`
/// with coefficient `2^{⌊(h(λ)+1)/2⌋}`.
pub fn check_character_properties(
    cache: &mut CharacterCache,
    lambda: &Weight,
) -> Result<(), String> {
    let ch = cache.simple_character(lambda, Route::Matrix, None);
    if !ch.is_symmetric() {
        return Err(format!("{lambda}: ch L is not symmetric"));
    }
    if let Some((e, c)) = ch.terms().find(|(_, c)| c.is_negative()) {
        return Err(format!("{lambda}: coefficient {c} at x^{e:?}"));
    }
    let top = ch.terms().next().map(|(e, c)| (e.clone(), c.clone()));
    match top {
        Some((e, c)) if e == lambda.0 && c == clifford_factor(lambda) => Ok(()),
        Some((e, c)) => Err(format!(
            "{lambda}: top monomial x^{e:?} with coefficient {c}"
        )),
        None => Err(format!("{lambda}: ch L is zero")),
    }
}

/// `route` reproduces the reference character monomial by monomial.
pub fn check_route(
    cache: &mut CharacterCache,
    lambda: &Weight,
    route: Route,
) -> Result<(), String> {
    let reference = cache.simple_character(lambda, Route::Matrix, None);
    let got = cache.simple_character(lambda, route, None);
    match reference.first_difference(&got) {
        None => Ok(()),
        Some((e, want, have)) => Err(format!(
            "{lambda}: at x^{e:?} the {route:?} route gives {have}, the reference {want}"
        )),
    }
}

/// The closed dimension formula equals the coefficient sum of `ch L(λ)`.
pub fn check_dimension(lambda: &Weight) -> Result<(), String> {
    let mut cache = CharacterCache::new();
    let spec = cache
        .simple_character(lambda, Route::Matrix, None)
        .coefficient_sum();
    match dimension_closed(lambda, Route::Closed) {
        Ok(d) if d == spec => Ok(()),
        Ok(d) => Err(format!(
            "{lambda}: closed formula {d}, specialization {spec}"
        )),
        Err(e) => Err(format!(
            "{lambda}: closed formula failed: {e:?} (specialization {spec})"
        )),
    }
}

/// `(−1)^{|θ|} = (−1)^{|λ−μ|}` for every `θ ∈ Θ^λ_μ`, `μ` in the block of `λ`.
pub fn check_sign_identity(lambda: &Weight) -> Result<(), String> {
    let top = level(lambda);
    for mu in block_closure(lambda, None) {
        let gap = top - level(&mu);
        for theta in left_paths_to(lambda, &mu, None) {
            let size: u64 = theta.iter().map(|&t| u64::from(t)).sum();
            if (size % 2) as i64 != gap.rem_euclid(2) {
                return Err(format!(
                    "{lambda} from {mu}: |θ| = {size} for θ = {theta:?}, |λ−μ| = {gap}"
                ));
            }
        }
    }
    Ok(())
}

/// Renders a report line: `PASS name (checked)` or `FAIL name (failed/checked): first failure`.
pub fn render_report(report: &CheckReport) -> String {
    if report.passed() {
        format!("PASS {} ({} weights)", report.suite.name(), report.checked)
    } else {
        format!(
            "FAIL {} ({}/{} weights): {}",
            report.suite.name(),
            report.failed,
            report.checked,
            report
                .first_failure
                .clone()
                .unwrap_or_else(|| "no detail".to_string())
        )
    }
}
