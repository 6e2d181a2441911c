//! Composition multiplicities `a_λμ`, the inverse coefficients `b_λμ`, the c-relation,
//! the permutation sets `S^λ`, cones, and the cone coefficients `b^λ_μ`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagram::WeightDiagram;
use crate::paths::{left_paths, left_paths_to, right_path, WeightKey};
use crate::weight::{compare_lex, dominant_roots, Frame, Weight};

/// `ĉ_{st}` for `1 ≤ s ≤ t ≤ r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CRelationTable {
    pub r: usize,
    rows: Vec<Vec<bool>>,
}

impl CRelationTable {
    fn from_distance(r: usize, d: impl Fn(usize, usize) -> i64) -> Self {
        let mut rows = alloc::vec![alloc::vec![false; r]; r];
        for s in 1..=r {
            let mut related = true;
            for t in s..=r {
                if t > s {
                    related = related && d(s, t) <= 0;
                }
                rows[s - 1][t - 1] = related;
            }
        }
        CRelationTable { r, rows }
    }

    /// `ĉ_{st}`, 1-based with `s ≤ t`.
    pub fn get(&self, s: usize, t: usize) -> bool {
        assert!(1 <= s && s <= t && t <= self.r, "ĉ index out of range");
        self.rows[s - 1][t - 1]
    }

    /// Whether `ĉ_{st} = 1` for some `s < t`, 0-based pair form.
    pub fn related0(&self, s: usize, t: usize) -> bool {
        s < t && self.rows[s][t]
    }
}

/// `ĉ(λ)` from the diagram: `d_{st} = 0` when both `×`'s sit at vertex 0 and
/// `d_{st} = ℓ(s, x_t)` otherwise; `ĉ_{st} = 1` iff `d_{sp} ≤ 0` for all `s ≤ p ≤ t`.
pub fn c_hat_diagram(lambda: &Weight) -> CRelationTable {
    let d = WeightDiagram::from_weight(lambda).expect("dominant weight");
    let xs = d.crosses();
    CRelationTable::from_distance(xs.len(), |s, t| {
        if xs[s - 1] == 0 && xs[t - 1] == 0 {
            0
        } else {
            d.length(s, xs[t - 1])
        }
    })
}

/// `ĉ(λ)` from the closed arithmetic form
/// `d_{sp} = λ_{m_p} − λ_{m_s} + m_p − m_s + n_s − n_p + 1 − d_s`, where `d_s = z̄` for the
/// vertex-0 roots `s ≤ ⌊z/2⌋` and `0` otherwise.
pub fn c_hat_lemma(lambda: &Weight) -> CRelationTable {
    let roots = dominant_roots(lambda);
    let z = lambda.z();
    let zbar = (z % 2) as i64;
    let e = lambda.entries();
    CRelationTable::from_distance(roots.len(), |s, p| {
        let (ms, ns) = roots[s - 1];
        let (mp, np) = roots[p - 1];
        let ds = if s <= z / 2 { zbar } else { 0 };
        e[mp] - e[ms] + mp as i64 - ms as i64 + ns as i64 - np as i64 + 1 - ds
    })
}

pub(crate) fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

pub(crate) fn zero_gap(lambda: &Weight, mu: &Weight) -> Option<usize> {
    let (zl, zm) = (lambda.z(), mu.z());
    if zm < zl || (zm - zl) % 2 == 1 {
        return None;
    }
    Some((zm - zl) / 2)
}

/// `a_λμ` by right paths: `2^{(z(μ)−z(λ))/2}` iff `λ = R_θ(μ)` for some `θ ∈ {0,1}^r`.
pub fn a_mult_right(lambda: &Weight, mu: &Weight) -> BigInt {
    if lambda.n() != mu.n() {
        return BigInt::zero();
    }
    let dm = WeightDiagram::from_weight(mu).expect("dominant weight");
    let dl = WeightDiagram::from_weight(lambda).expect("dominant weight");
    if dm.degree() != dl.degree() || dm.bot != dl.bot {
        return BigInt::zero();
    }
    let r = dm.degree();
    let mut theta = alloc::vec![0u8; r];
    for mask in 0u64..(1u64 << r) {
        for (i, t) in theta.iter_mut().enumerate() {
            *t = ((mask >> i) & 1) as u8;
        }
        if right_path(mu, &theta) == *lambda {
            return pow2(zero_gap(lambda, mu).expect("paths preserve z parity"));
        }
    }
    BigInt::zero()
}

/// `a_λμ` by left paths: `2^{(z(μ)−z(λ))/2}` iff `μ` is the result of a left path of `λ`.
pub fn a_mult_left(lambda: &Weight, mu: &Weight) -> BigInt {
    if lambda.n() != mu.n() {
        return BigInt::zero();
    }
    if left_paths(lambda).iter().any(|(_, w)| w == mu) {
        pow2(zero_gap(lambda, mu).expect("paths preserve z parity"))
    } else {
        BigInt::zero()
    }
}

/// Composition factors `[E(λ) : L(μ)]` as (path, μ, multiplicity).
pub fn composition_factors(lambda: &Weight) -> Vec<(crate::paths::LeftPath, Weight, BigInt)> {
    left_paths(lambda)
        .into_iter()
        .map(|(p, w)| {
            let m = pow2(zero_gap(lambda, &w).expect("paths preserve z parity"));
            (p, w, m)
        })
        .collect()
}

/// `b_λμ = 2^{(z(μ)−z(λ))/2} Σ_{θ ∈ Θ^λ_μ} (−1)^{|θ|}`.
pub fn b_mult(lambda: &Weight, mu: &Weight, level_cap: Option<i64>) -> BigInt {
    let thetas = left_paths_to(lambda, mu, level_cap);
    if thetas.is_empty() {
        return BigInt::zero();
    }
    let signed: i64 = thetas
        .iter()
        .map(|t| {
            if t.iter().map(|&x| x as u64).sum::<u64>() % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .sum();
    pow2(zero_gap(lambda, mu).expect("raising preserves z parity")) * BigInt::from(signed)
}

/// Downward closure of `seed` under left paths, in descending order (largest first).
/// Weights whose level drops more than `level_cap` below the seed are not expanded.
pub fn block_closure(seed: &Weight, level_cap: Option<i64>) -> Vec<Weight> {
    let top = crate::paths::level(seed);
    let mut seen: BTreeSet<WeightKey> = BTreeSet::new();
    seen.insert(WeightKey(seed.clone()));
    let mut stack = alloc::vec![seed.clone()];
    while let Some(w) = stack.pop() {
        for (_, mu) in left_paths(&w) {
            if let Some(cap) = level_cap {
                if top - crate::paths::level(&mu) > cap {
                    continue;
                }
            }
            if seen.insert(WeightKey(mu.clone())) {
                stack.push(mu);
            }
        }
    }
    seen.into_iter().map(|k| k.0).collect()
}

/// Square blocks of `a_λμ` and `b_λμ` over an ordered index set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplicityBlock {
    pub index: Vec<Weight>,
    pub a: Vec<Vec<BigInt>>,
    pub b: Vec<Vec<BigInt>>,
}

/// First cell where a block fails an inversion property.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InversionFailure {
    NotUpperTriangular {
        matrix: char,
        row: Weight,
        col: Weight,
    },
    DiagonalNotOne {
        matrix: char,
        at: Weight,
    },
    ProductNotIdentity {
        row: Weight,
        col: Weight,
        value: BigInt,
    },
}

pub fn build_block(index: Vec<Weight>, level_cap: Option<i64>) -> MultiplicityBlock {
    let m = index.len();
    let mut a = alloc::vec![alloc::vec![BigInt::zero(); m]; m];
    let mut b = alloc::vec![alloc::vec![BigInt::zero(); m]; m];
    let pos: BTreeMap<WeightKey, usize> = index
        .iter()
        .enumerate()
        .map(|(k, w)| (WeightKey(w.clone()), k))
        .collect();
    for (row, lambda) in index.iter().enumerate() {
        for (_, mu) in left_paths(lambda) {
            if let Some(&col) = pos.get(&WeightKey(mu.clone())) {
                a[row][col] = pow2(zero_gap(lambda, &mu).expect("z parity"));
            }
        }
        for (col, mu) in index.iter().enumerate() {
            b[row][col] = b_mult(lambda, mu, level_cap);
        }
    }
    MultiplicityBlock { index, a, b }
}

/// Builds the block generated by `seed` and checks that `A`, `B` are upper unitriangular
/// in descending order and that `A·B = I`.
pub fn verify_inversion(
    seed: &Weight,
    level_cap: Option<i64>,
) -> Result<MultiplicityBlock, InversionFailure> {
    let block = build_block(block_closure(seed, level_cap), level_cap);
    check_block(&block)?;
    Ok(block)
}

pub fn check_block(block: &MultiplicityBlock) -> Result<(), InversionFailure> {
    let idx = &block.index;
    let m = idx.len();
    for w in idx.windows(2) {
        debug_assert_eq!(compare_lex(&w[0], &w[1]), core::cmp::Ordering::Less);
    }
    for (name, mat) in [('A', &block.a), ('B', &block.b)] {
        for i in 0..m {
            if !mat[i][i].is_one() {
                return Err(InversionFailure::DiagonalNotOne {
                    matrix: name,
                    at: idx[i].clone(),
                });
            }
            for j in 0..i {
                if !mat[i][j].is_zero() {
                    return Err(InversionFailure::NotUpperTriangular {
                        matrix: name,
                        row: idx[i].clone(),
                        col: idx[j].clone(),
                    });
                }
            }
        }
    }
    for i in 0..m {
        for j in 0..m {
            let mut s = BigInt::zero();
            for k in 0..m {
                s += &block.a[i][k] * &block.b[k][j];
            }
            let expect = if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            };
            if s != expect {
                return Err(InversionFailure::ProductNotIdentity {
                    row: idx[i].clone(),
                    col: idx[j].clone(),
                    value: s,
                });
            }
        }
    }
    Ok(())
}

/// Permutations of `0..r` as image vectors `σ[p]`, in lexicographic order.
pub fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..r).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..r)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn inverse(sigma: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; sigma.len()];
    for (p, &s) in sigma.iter().enumerate() {
        inv[s] = p;
    }
    inv
}

/// `a^σ_μ`: 0 iff some strongly c-related `s < t` have `σ^{-1}(s) > σ^{-1}(t)`.
pub fn a_sigma(chat: &CRelationTable, sigma: &[usize]) -> bool {
    let inv = inverse(sigma);
    let r = chat.r;
    !(0..r).any(|s| (s + 1..r).any(|t| chat.related0(s, t) && inv[s] > inv[t]))
}

/// `S^μ` for a dominant `μ`, using the diagram c-relation.
pub fn s_lambda(mu: &Weight) -> Vec<Vec<usize>> {
    let chat = c_hat_diagram(mu);
    permutations(chat.r)
        .into_iter()
        .filter(|s| a_sigma(&chat, s))
        .collect()
}

/// The `S_r`-action on frame coordinates: the `p`-th coordinate of `σ(μ)` is `j_{σ^{-1}(p)}`.
pub fn act(sigma: &[usize], j: &[i64]) -> Vec<i64> {
    let inv = inverse(sigma);
    (0..j.len()).map(|p| j[inv[p]]).collect()
}

/// Normal cone `NC(λ)`: frame coordinates `0 ≤ j_p ≤ λ_{m_p}`, lexicographic by coordinate.
pub fn normal_cone(lambda: &Weight) -> (Frame, Vec<Vec<i64>>) {
    let (frame, top) = Frame::of(lambda);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(top.len());
    fn rec(top: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == top.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..=top[cur.len()] {
            cur.push(x);
            rec(top, cur, out);
            cur.pop();
        }
    }
    rec(&top, &mut cur, &mut out);
    (frame, out)
}

/// Truncated cone `TC(λ) ⊆ NC(λ)`: `j_s ≤ j_t` whenever `ĉ_{st}(λ) = 1`, `s < t`.
pub fn truncated_cone(lambda: &Weight) -> (Frame, Vec<Vec<i64>>) {
    let chat = c_hat_diagram(lambda);
    let (frame, nc) = normal_cone(lambda);
    let tc = nc.into_iter().filter(|j| in_truncated(&chat, j)).collect();
    (frame, tc)
}

fn in_truncated(chat: &CRelationTable, j: &[i64]) -> bool {
    let r = j.len();
    (0..r).all(|s| (s + 1..r).all(|t| !chat.related0(s, t) || j[s] <= j[t]))
}

/// `P^{⪯μ}` in frame coordinates: `0 ≤ j_1 ≤ m_1`, `j_{p−1} ≤ j_p ≤ m_p`, with
/// `m_p = min{μ_p, …, μ_r}` taken over the coordinates of `μ`.
pub fn p_leq(mu_j: &[i64]) -> Vec<Vec<i64>> {
    let r = mu_j.len();
    let caps: Vec<i64> = (0..r)
        .map(|p| *mu_j[p..].iter().min().expect("non-empty"))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(caps: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let p = cur.len();
        if p == caps.len() {
            out.push(cur.clone());
            return;
        }
        let lo = if p == 0 { 0 } else { cur[p - 1] };
        let mut x = lo;
        while x <= caps[p] {
            cur.push(x);
            rec(caps, cur, out);
            cur.pop();
            x += 1;
        }
    }
    rec(&caps, &mut cur, &mut out);
    out
}

/// Errors of the cone coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConeError {
    /// The coordinates do not describe a member of `TC(λ)`.
    OutsideTruncatedCone,
}

/// The reduced pair `(Λ_red, μ_red)` in `Z^{2r+z̄}`: root `p` sits at positions
/// `r−p+1` and `n−r+p` (1-based), and every vertex is relabeled past the deleted
/// `<`/`>` vertices of `λ`.
pub fn reduce_pair(lambda: &Weight, mu_j: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let (frame, top) = Frame::of(lambda);
    let typical: Vec<i64> = frame
        .base
        .entries()
        .iter()
        .filter(|&&v| v != 0)
        .map(|v| v.abs())
        .collect();
    let red = |x: i64| x - typical.iter().filter(|&&t| t < x).count() as i64;
    let r = top.len();
    let n = 2 * r + lambda.zbar();
    let build = |js: &[i64]| {
        let mut w = alloc::vec![0; n];
        for (p, &x) in js.iter().enumerate() {
            let pp = p + 1;
            w[r - pp] = red(x);
            w[n - r + pp - 1] = -red(x);
        }
        w
    };
    (build(&top), build(mu_j))
}

fn is_regular(v: &[i64]) -> bool {
    Weight(v.to_vec()).is_regular()
}

/// `b^λ_μ` for `μ = frame.build(mu_j) ∈ TC(λ)`.
///
/// Zero for non-regular `μ`; otherwise the pair is reduced and entries are stripped
/// (largest `i` with `μ_i > 0`, together with its partner `n+1−i`; the entries of `Λ`
/// outside the stripped pair move 2 closer to zero) until `μ = 0`, where
/// `b^Λ_0 = #Θ^Λ_0`.
pub fn b_coeff(lambda: &Weight, mu_j: &[i64]) -> Result<BigInt, ConeError> {
    let (frame, top) = Frame::of(lambda);
    let chat = c_hat_diagram(lambda);
    if mu_j.len() != top.len()
        || mu_j.iter().zip(&top).any(|(&j, &t)| j < 0 || j > t)
        || !in_truncated(&chat, mu_j)
    {
        return Err(ConeError::OutsideTruncatedCone);
    }
    if !frame.build(mu_j).is_regular() {
        return Ok(BigInt::zero());
    }
    let (big, small) = reduce_pair(lambda, mu_j);
    Ok(b_coeff_reduced(big, small))
}

fn b_coeff_reduced(big: Vec<i64>, small: Vec<i64>) -> BigInt {
    if !is_regular(&small) {
        return BigInt::zero();
    }
    let n = small.len();
    let Some(i) = (1..=n).rev().find(|&k| small[k - 1] > 0) else {
        let lam = Weight(big);
        assert!(
            lam.is_dominant(),
            "stripped vertex weight {lam} stays dominant"
        );
        return BigInt::from(left_paths_to(&lam, &Weight::zero(n), None).len());
    };
    let partner = n + 1 - i;
    let mut adjusted = big;
    for j in 1..i {
        adjusted[j - 1] -= 2;
        adjusted[n - j] += 2;
    }
    let keep = |v: &[i64]| -> Vec<i64> {
        (1..=n)
            .filter(|&k| k != i && k != partner)
            .map(|k| v[k - 1])
            .collect()
    };
    b_coeff_reduced(keep(&adjusted), keep(&small))
}

/// The closed product for `b^Λ_0` of a reduced `Λ` exactly as printed:
/// `#S^Λ / (r+z̄)! · Π_p d_{Λ_p+s_p, r−p+1}` with `Λ_p = Λ_{m_{r−p+1}}`,
/// `s_p = #{q < p : ĉ_{qp}(Λ) = 1}` and `d_{i,k} = min(⌊(i+1−z̄)/2⌋, k)`.
pub fn b_zero_product(lambda: &Weight) -> BigRational {
    b_zero_product_with(lambda, ProductReading::AsPrinted)
}

/// Which reading of the closed `b^Λ_0` product to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductReading {
    /// Denominator `(r+z̄)!`, `s_p` counted on the root index `p`.
    AsPrinted,
    /// Denominator `r!`, `s_p` counted on the root `R = r−p+1` whose entry is `Λ_p`.
    RootIndexed,
}

pub fn b_zero_product_with(lambda: &Weight, reading: ProductReading) -> BigRational {
    let (_, j) = Frame::of(lambda);
    let chat = c_hat_diagram(lambda);
    let r = j.len();
    let zbar = lambda.zbar() as i64;
    let s_count = BigInt::from(s_lambda(lambda).len());
    let denom_n = match reading {
        ProductReading::AsPrinted => r + zbar as usize,
        ProductReading::RootIndexed => r,
    };
    let mut fact = BigInt::one();
    for k in 2..=denom_n {
        fact *= BigInt::from(k);
    }
    let mut val = BigRational::new(s_count, fact);
    for p in 1..=r {
        let root = r - p + 1;
        let entry = j[root - 1];
        let counted = match reading {
            ProductReading::AsPrinted => p,
            ProductReading::RootIndexed => root,
        };
        let s = (1..counted).filter(|&q| chat.get(q, counted)).count() as i64;
        let k = (r - p + 1) as i64;
        let d = (entry + s + 1 - zbar).div_euclid(2).min(k);
        val *= BigRational::from_integer(BigInt::from(d));
    }
    val
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn golden() -> Weight {
        Weight(vec![7, 5, 4, 2, 1, 0, 0, 0, 0, 0, -1, -2, -4, -7, -8, -10])
    }

    #[test]
    fn golden_c_relation() {
        for table in [c_hat_diagram(&golden()), c_hat_lemma(&golden())] {
            for s in 1..=6 {
                for t in s..=6 {
                    let expect = s <= 3 || s == t;
                    assert_eq!(table.get(s, t), expect, "ĉ_{s}{t}");
                }
            }
        }
    }

    #[test]
    fn two_root_c_relation_agrees() {
        let l = Weight(vec![2, 1, -1, -2]);
        assert_eq!(c_hat_diagram(&l), c_hat_lemma(&l));
        assert!(c_hat_diagram(&l).get(1, 2));
    }

    #[test]
    fn small_multiplicities() {
        let top = Weight(vec![1, -1]);
        let zero = Weight::zero(2);
        assert_eq!(a_mult_right(&top, &zero), BigInt::from(2));
        assert_eq!(a_mult_left(&top, &zero), BigInt::from(2));
        assert_eq!(a_mult_right(&top, &top), BigInt::one());
        assert_eq!(b_mult(&top, &zero, None), BigInt::from(-2));
        assert_eq!(b_mult(&top, &top, None), BigInt::one());
        let typical = Weight(vec![3, 1]);
        assert_eq!(b_mult(&typical, &typical, None), BigInt::one());
        assert_eq!(b_mult(&typical, &Weight(vec![2, 1]), None), BigInt::zero());
    }

    #[test]
    fn q2_block() {
        let block = verify_inversion(&Weight(vec![1, -1]), None).unwrap();
        assert_eq!(block.index, vec![Weight(vec![1, -1]), Weight::zero(2)]);
        let i = |v: i64| BigInt::from(v);
        assert_eq!(block.a, vec![vec![i(1), i(2)], vec![i(0), i(1)]]);
        assert_eq!(block.b, vec![vec![i(1), i(-2)], vec![i(0), i(1)]]);
        let typ = verify_inversion(&Weight(vec![3, 1]), None).unwrap();
        assert_eq!(typ.index.len(), 1);
        verify_inversion(&Weight(vec![2, 1, -1, -2]), Some(4)).unwrap();
    }

    #[test]
    fn golden_factors_have_multiplicity_one() {
        let f = composition_factors(&golden());
        assert_eq!(f.len(), 5);
        assert!(f.iter().all(|(_, _, m)| m.is_one()));
    }

    #[test]
    fn permutation_sets() {
        assert_eq!(permutations(3).len(), 6);
        let all = CRelationTable::from_distance(3, |_, _| 0);
        let none = CRelationTable::from_distance(3, |_, _| 1);
        let count = |t: &CRelationTable| permutations(3).iter().filter(|s| a_sigma(t, s)).count();
        assert_eq!(count(&all), 1);
        assert_eq!(count(&none), 6);
        // roots 1, 2, 3 must precede every later root; roots 4, 5, 6 are free
        assert_eq!(s_lambda(&golden()).len(), 6);
    }

    #[test]
    fn cones_small() {
        let (_, nc) = normal_cone(&Weight(vec![3, 1]));
        assert_eq!(nc, vec![Vec::<i64>::new()]);
        let (_, nc) = normal_cone(&Weight(vec![1, -1]));
        assert_eq!(nc, vec![vec![0], vec![1]]);
        let (_, tc) = truncated_cone(&Weight(vec![1, -1]));
        assert_eq!(tc, vec![vec![0], vec![1]]);
        assert_eq!(p_leq(&[1]), vec![vec![0], vec![1]]);
        let l = Weight(vec![4, 2, -2, -4]);
        let (_, nc) = normal_cone(&l);
        assert_eq!(nc.len(), 15);
        let (_, tc) = truncated_cone(&l);
        assert!(tc.iter().all(|j| nc.contains(j)));
    }

    #[test]
    fn cone_coefficients() {
        let top = Weight(vec![1, -1]);
        assert_eq!(b_coeff(&top, &[1]), Ok(BigInt::one()));
        assert_eq!(b_coeff(&top, &[0]), Ok(BigInt::one()));
        assert_eq!(b_coeff(&top, &[2]), Err(ConeError::OutsideTruncatedCone));
        assert_eq!(b_coeff(&golden(), &[0, 0, 1, 2, 4, 7]), Ok(BigInt::one()));
    }

    #[test]
    fn closed_product_small() {
        let top = Weight(vec![1, -1]);
        assert_eq!(b_zero_product(&top), BigRational::one());
        assert_eq!(
            b_zero_product_with(&top, ProductReading::RootIndexed),
            BigRational::one()
        );
        // (2,1,−1,−2): both roots related, #S = 1, product d_{2+1,2}·d_{1,1} = 2·1 over 2!
        let l = Weight(vec![2, 1, -1, -2]);
        assert_eq!(
            b_zero_product_with(&l, ProductReading::RootIndexed),
            BigRational::one()
        );
        assert_eq!(
            BigInt::from(left_paths_to(&l, &Weight::zero(4), None).len()),
            BigInt::one()
        );
    }
}
