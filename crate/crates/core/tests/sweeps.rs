//! Sweep parsing, the suites that hold everywhere, and pinned counterexamples for the
//! identities that break on weights with a `⊥` marker.

use qchar_core::character::{dimension_by_specialization, dimension_closed, CharacterCache, Route};
use qchar_core::paths::left_paths_to;
use qchar_core::verify::{check_route, check_sign_identity, run_sweep, Suite, Sweep};
use qchar_core::Weight;

#[test]
fn sweep_spec_parsing() {
    assert_eq!(Sweep::parse("n<=3,max=2"), Ok(Sweep { max_n: 3, bound: 2 }));
    assert_eq!(
        Sweep::parse(" max=1 , n<=2 "),
        Ok(Sweep { max_n: 2, bound: 1 })
    );
    assert!(Sweep::parse("n<=0,max=2").is_err());
    assert!(Sweep::parse("n<=3").is_err());
    assert!(Sweep::parse("n=1..3,bound=2").is_err());
}

#[test]
fn sweep_weights_are_dominant_and_counted() {
    let ws = Sweep { max_n: 2, bound: 1 }.weights();
    // rank 1: 1, 0, −1; rank 2: (1,0), (1,−1), (0,0), (0,−1)
    assert_eq!(ws.len(), 7);
    assert!(ws.iter().all(Weight::is_dominant));
}

#[test]
fn structural_suites_pass_on_a_small_sweep() {
    let suites = [
        Suite::DiagramRoundTrip,
        Suite::Inversion,
        Suite::DualRouteMultiplicity,
        Suite::ReductionInvariance,
        Suite::CRelation,
        Suite::Grothendieck,
        Suite::CharacterProperties,
    ];
    for report in run_sweep(&Sweep { max_n: 3, bound: 2 }, &suites) {
        assert!(report.passed(), "{:?}", report);
    }
}

#[test]
fn routes_agree_without_bottom_marker() {
    let mut cache = CharacterCache::new();
    for lambda in [
        Weight(vec![1, -1]),
        Weight(vec![2, 1, -1, -2]),
        Weight(vec![3, 1, -1, -3]),
    ] {
        assert_eq!(
            check_route(&mut cache, &lambda, Route::Closed),
            Ok(()),
            "{lambda}"
        );
        assert_eq!(
            check_route(&mut cache, &lambda, Route::Cone),
            Ok(()),
            "{lambda}"
        );
        assert_eq!(check_sign_identity(&lambda), Ok(()), "{lambda}");
    }
    // crosses at vertex 0 without ⊥: the cone route still agrees, the closed one does not
    let lambda = Weight(vec![2, 0, 0, -2]);
    assert_eq!(check_route(&mut cache, &lambda, Route::Cone), Ok(()));
    assert!(check_route(&mut cache, &lambda, Route::Closed).is_err());
}

#[test]
fn odd_zero_count_breaks_the_sign_parity() {
    // a vertex-0 cross next to ⊥ moves by an even step
    let lambda = Weight(vec![2, 0, -2]);
    assert_eq!(
        left_paths_to(&lambda, &Weight::zero(3), None),
        vec![vec![1]]
    );
    assert!(check_sign_identity(&lambda).is_err());
}

#[test]
fn closed_formula_differs_on_a_bottom_marker_weight() {
    let lambda = Weight(vec![2, 0, -2]);
    assert_eq!(dimension_by_specialization(&lambda), 110.into());
    assert_eq!(dimension_closed(&lambda, Route::Closed), Ok(114.into()));
    assert!(check_route(&mut CharacterCache::new(), &lambda, Route::Closed).is_err());
}
