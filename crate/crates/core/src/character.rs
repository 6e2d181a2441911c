//! Schur P-functions, Euler characters, simple characters and dimensions.
//!
//! Characters are accumulated as antisymmetrized numerators (linear combinations of
//! alternants `a_β = Σ_w sgn(w) x^{wβ}` with `β` strictly decreasing) and expanded into
//! Laurent polynomials by exact division by the Vandermonde product `Π_{i<j}(x_i − x_j)`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::laurent::Laurent;
use crate::multiplicity::{
    act, b_coeff, b_mult, block_closure, composition_factors, p_leq, permutations, pow2, s_lambda,
    truncated_cone, zero_gap,
};
use crate::paths::WeightKey;
use crate::weight::{Frame, Weight};

/// Which formula produces `ch L(λ)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    /// `Σ_μ b_λμ ch E(μ)` over the block generated by `λ`; the reference route.
    Matrix,
    /// The closed formula: a sum over `σ ∈ S^λ` and `μ ∈ P^{⪯σ(λ)}`.
    Closed,
    /// The cone formula: a sum over `μ ∈ TC(λ)` weighted by `b^λ_μ`.
    Cone,
}

/// Which sign convention to use inside the dimension of `P_μ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DimensionSign {
    /// `(α, μ − Σ_{β∈B} β + ρ₀)`, which is what the symmetrization actually produces.
    Corrected,
    /// `(α, μ + Σ_{β∈B} β + ρ₀)`.
    AsPrinted,
}

/// Largest rank accepted by the subset-sum dimension formula.
pub const DIMENSION_RANK_CAP: usize = 6;

/// Failures of the exact dimension routes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DimensionError {
    NotDominant,
    RankTooLarge { n: usize, cap: usize },
    NotInteger(BigRational),
    Negative(BigInt),
}

/// `Σ_β c_β a_β`, keyed by strictly decreasing `β`.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Alternant {
    n: usize,
    coeffs: BTreeMap<Vec<i64>, BigInt>,
}

impl Alternant {
    fn zero(n: usize) -> Self {
        Alternant {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    fn add_scaled(&mut self, other: &Alternant, c: &BigInt) {
        for (b, v) in &other.coeffs {
            let slot = self.coeffs.entry(b.clone()).or_insert_with(BigInt::zero);
            *slot += v * c;
            if slot.is_zero() {
                self.coeffs.remove(b);
            }
        }
    }

    /// Expands `Σ c_β a_β / Π_{i<j}(x_i − x_j)` into a Laurent polynomial.
    fn to_laurent(&self) -> Laurent {
        let n = self.n;
        let perms: Vec<(Vec<usize>, i64)> = permutations(n)
            .into_iter()
            .map(|p| {
                let s = sign(&p);
                (p, s)
            })
            .collect();
        let mut num = Laurent::zero(n);
        for (beta, c) in &self.coeffs {
            for (p, s) in &perms {
                let mut e = vec![0; n];
                for k in 0..n {
                    e[p[k]] = beta[k];
                }
                num.add_term(e, c * BigInt::from(*s));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                num = num
                    .div_difference(i, j)
                    .expect("an alternating numerator is divisible by x_i − x_j");
            }
        }
        num
    }
}

/// Sign of a permutation given as an image vector.
fn sign(p: &[usize]) -> i64 {
    let mut inv = 0usize;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `#S_μ`, the order of the stabilizer of `μ` in `S_n`.
pub fn stabilizer_order(mu: &Weight) -> BigInt {
    let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
    for &v in mu.entries() {
        *counts.entry(v).or_insert(0) += 1;
    }
    let mut out = BigInt::one();
    for &c in counts.values() {
        for k in 2..=c {
            out *= BigInt::from(k);
        }
    }
    out
}

/// `2^{⌊(h(μ)+1)/2⌋}`, the dimension of the top of `E(μ)`.
pub fn clifford_factor(mu: &Weight) -> BigInt {
    pow2(mu.h().div_ceil(2))
}

/// Numerator of `P_μ`: `Alt(x^μ Π_{pairs not both zero}(x_i + x_j) Π_{zero pairs}(x_i − x_j)) / #S_μ`.
fn schur_alternant(mu: &Weight) -> Alternant {
    let n = mu.n();
    if !mu.is_regular() {
        return Alternant::zero(n);
    }
    let e = mu.entries();
    let mut f = Laurent::monomial(e.to_vec(), BigInt::one());
    for i in 0..n {
        for j in i + 1..n {
            let s = if e[i] == 0 && e[j] == 0 { -1 } else { 1 };
            f = f.mul_binomial(i, j, s);
        }
    }
    let mut out = Alternant::zero(n);
    for (exp, c) in f.terms() {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| exp[b].cmp(&exp[a]));
        if order.windows(2).any(|w| exp[w[0]] == exp[w[1]]) {
            continue;
        }
        let beta: Vec<i64> = order.iter().map(|&k| exp[k]).collect();
        let v = c * BigInt::from(sign(&order));
        out.add_scaled(
            &Alternant {
                n,
                coeffs: BTreeMap::from([(beta, BigInt::one())]),
            },
            &v,
        );
    }
    let st = stabilizer_order(mu);
    for v in out.coeffs.values_mut() {
        let (q, r) = v.div_rem(&st);
        assert!(r.is_zero(), "alternant of P_{mu} is divisible by #S_μ");
        *v = q;
    }
    out
}

/// Memoizes Schur P numerators and dimensions across many character computations.
#[derive(Default)]
pub struct CharacterCache {
    schur: BTreeMap<Vec<i64>, Alternant>,
    dims: BTreeMap<(Vec<i64>, bool), BigRational>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    fn schur_alt(&mut self, mu: &Weight) -> &Alternant {
        self.schur
            .entry(mu.0.clone())
            .or_insert_with(|| schur_alternant(mu))
    }

    fn euler_alt(&mut self, mu: &Weight) -> Alternant {
        let mut out = Alternant::zero(mu.n());
        let c = clifford_factor(mu);
        out.add_scaled(self.schur_alt(mu), &c);
        out
    }

    /// `P_μ` for any integral `μ`; zero iff `μ` is vanishing.
    pub fn schur_p(&mut self, mu: &Weight) -> Laurent {
        self.schur_alt(mu).to_laurent()
    }

    /// `ch E(λ) = 2^{⌊(h(λ)+1)/2⌋} P_λ`.
    pub fn euler_character(&mut self, lambda: &Weight) -> Laurent {
        assert!(
            lambda.is_dominant(),
            "Euler characters need a dominant weight"
        );
        self.euler_alt(lambda).to_laurent()
    }

    /// `ch L(λ)` via the chosen route.
    pub fn simple_character(
        &mut self,
        lambda: &Weight,
        route: Route,
        level_cap: Option<i64>,
    ) -> Laurent {
        let mut acc = Alternant::zero(lambda.n());
        for (mu, c) in euler_expansion(lambda, route, level_cap) {
            let e = self.euler_alt(&mu);
            acc.add_scaled(&e, &c);
        }
        acc.to_laurent()
    }

    /// `dim P_μ = (1/#S_μ) Σ_{B ⊆ Φ₀⁺} (−1)^{|B ∩ Φ₀⁺(μ)|} Π_α (α, μ ∓ Σ_{β∈B}β + ρ₀)/(α, ρ₀)`.
    pub fn dimension_p(&mut self, mu: &Weight, sign: DimensionSign) -> BigRational {
        let key = (mu.0.clone(), sign == DimensionSign::Corrected);
        if let Some(v) = self.dims.get(&key) {
            return v.clone();
        }
        let v = dimension_p(mu, sign);
        self.dims.insert(key, v.clone());
        v
    }

    /// Dimension of `L(λ)` by summing `dim E(μ)` over the expansion of a route.
    pub fn dimension_by_route(
        &mut self,
        lambda: &Weight,
        route: Route,
        sign: DimensionSign,
    ) -> Result<BigInt, DimensionError> {
        if !lambda.is_dominant() {
            return Err(DimensionError::NotDominant);
        }
        if lambda.n() > DIMENSION_RANK_CAP {
            return Err(DimensionError::RankTooLarge {
                n: lambda.n(),
                cap: DIMENSION_RANK_CAP,
            });
        }
        let mut total = BigRational::zero();
        for (mu, c) in euler_expansion(lambda, route, None) {
            let d = self.dimension_p(&mu, sign);
            total += d * BigRational::from_integer(c * clifford_factor(&mu));
        }
        if !total.is_integer() {
            return Err(DimensionError::NotInteger(total));
        }
        let v = total.to_integer();
        if v.is_negative() {
            return Err(DimensionError::Negative(v));
        }
        Ok(v)
    }
}

/// Exact subset-sum dimension of `P_μ` (see [`CharacterCache::dimension_p`]).
pub fn dimension_p(mu: &Weight, sign: DimensionSign) -> BigRational {
    let n = mu.n();
    if !mu.is_regular() {
        return BigRational::zero();
    }
    let e = mu.entries();
    let roots: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let step: i64 = match sign {
        DimensionSign::Corrected => -1,
        DimensionSign::AsPrinted => 1,
    };
    // With (α, ρ₀) = j − i for α = ε_i − ε_j, each factor is ((v_i − v_j) + (j − i)) / (j − i).
    let mut numerator = BigInt::zero();
    let mut v = vec![0i64; n];
    for mask in 0u64..(1u64 << roots.len()) {
        v.copy_from_slice(e);
        let mut negative = false;
        for (k, &(i, j)) in roots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                v[i] += step;
                v[j] -= step;
                if e[i] == 0 && e[j] == 0 {
                    negative = !negative;
                }
            }
        }
        let mut prod: i128 = 1;
        for &(i, j) in &roots {
            prod *= (v[i] - v[j] + (j - i) as i64) as i128;
            if prod == 0 {
                break;
            }
        }
        if negative {
            numerator -= BigInt::from(prod);
        } else {
            numerator += BigInt::from(prod);
        }
    }
    let mut denominator = stabilizer_order(mu);
    for &(i, j) in &roots {
        denominator *= BigInt::from(j - i);
    }
    BigRational::new(numerator, denominator)
}

/// `ch L(λ) = Σ_μ c_μ ch E(μ)` for a route, with `ch E(μ) = 2^{⌊(h(μ)+1)/2⌋} P_μ` also for
/// non-dominant regular `μ`. Terms are merged and listed in descending order.
pub fn euler_expansion(
    lambda: &Weight,
    route: Route,
    level_cap: Option<i64>,
) -> Vec<(Weight, BigInt)> {
    assert!(
        lambda.is_dominant(),
        "simple characters need a dominant weight"
    );
    let mut acc: BTreeMap<WeightKey, BigInt> = BTreeMap::new();
    let mut push = |mu: Weight, c: BigInt| {
        let slot = acc.entry(WeightKey(mu)).or_insert_with(BigInt::zero);
        *slot += c;
    };
    match route {
        Route::Matrix => {
            for mu in block_closure(lambda, level_cap) {
                let b = b_mult(lambda, &mu, level_cap);
                push(mu, b);
            }
        }
        Route::Closed => {
            let (frame, top) = Frame::of(lambda);
            for sigma in s_lambda(lambda) {
                for j in p_leq(&act(&sigma, &top)) {
                    let mu = frame.build(&j);
                    if mu.is_regular() {
                        let c = frame_coefficient(lambda, &top, &mu, &j);
                        push(mu, c);
                    }
                }
            }
        }
        Route::Cone => {
            let (frame, tc) = truncated_cone(lambda);
            let (_, top) = Frame::of(lambda);
            for j in tc {
                let mu = frame.build(&j);
                if !mu.is_regular() {
                    continue;
                }
                let b = b_coeff(lambda, &j).expect("members of TC(λ) have a cone coefficient");
                if !b.is_zero() {
                    let c = frame_coefficient(lambda, &top, &mu, &j) * b;
                    push(mu, c);
                }
            }
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.0, c))
        .collect()
}

/// `(−1)^{|λ−μ|} 2^{(z(μ)−z(λ))/2}` for `μ` in the frame of `λ`.
fn frame_coefficient(lambda: &Weight, top: &[i64], mu: &Weight, j: &[i64]) -> BigInt {
    let level: i64 = top.iter().sum::<i64>() - j.iter().sum::<i64>();
    let gap = zero_gap(lambda, mu).expect("frame weights keep the zero parity of λ");
    let c = pow2(gap);
    if level % 2 == 0 {
        c
    } else {
        -c
    }
}

/// `P_μ` with a fresh cache.
pub fn schur_p(mu: &Weight) -> Laurent {
    CharacterCache::new().schur_p(mu)
}

/// `ch E(λ)` with a fresh cache.
pub fn euler_character(lambda: &Weight) -> Laurent {
    CharacterCache::new().euler_character(lambda)
}

/// `ch L(λ)` with a fresh cache.
pub fn simple_character(lambda: &Weight, route: Route) -> Laurent {
    CharacterCache::new().simple_character(lambda, route, None)
}

/// `dim L(λ)` by the closed subset-sum formula (corrected sign) along `route`.
pub fn dimension_closed(lambda: &Weight, route: Route) -> Result<BigInt, DimensionError> {
    CharacterCache::new().dimension_by_route(lambda, route, DimensionSign::Corrected)
}

/// `dim L(λ)` as the coefficient sum of the reference character.
pub fn dimension_by_specialization(lambda: &Weight) -> BigInt {
    simple_character(lambda, Route::Matrix).coefficient_sum()
}

/// First monomial where `ch E(λ) ≠ Σ_μ a_λμ ch L(μ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GrothendieckMismatch {
    pub exponent: Vec<i64>,
    pub euler: BigInt,
    pub factors: BigInt,
}

/// Checks `ch E(λ) = Σ_{μ ∈ Θ^λ} a_λμ ch L(μ)` as Laurent polynomials.
pub fn verify_grothendieck(
    cache: &mut CharacterCache,
    lambda: &Weight,
) -> Result<(), GrothendieckMismatch> {
    let lhs = cache.euler_character(lambda);
    let mut rhs = Laurent::zero(lambda.n());
    for (_, mu, a) in composition_factors(lambda) {
        rhs.add_scaled(&cache.simple_character(&mu, Route::Matrix, None), &a);
    }
    match lhs.first_difference(&rhs) {
        None => Ok(()),
        Some((exponent, euler, factors)) => Err(GrothendieckMismatch {
            exponent,
            euler,
            factors,
        }),
    }
}
