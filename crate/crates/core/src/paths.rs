//! Right moves and right paths (raising), the generalized raising operators `R'_θ`,
//! left moves and left paths (lowering), and the sets `Θ^λ_μ`.
//!
//! Every move of a right or left path is computed on the *original* diagram; the
//! moved `×`'s are then removed and re-placed simultaneously.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::{Symbol, WeightDiagram};
use crate::weight::{Frame, Weight};

/// First empty vertex `t > x_i` with `ℓ(i, t) = 0`, for a cross index `1 ≤ i ≤ r`.
pub fn right_target(d: &WeightDiagram, i: usize) -> i64 {
    let xs = d.crosses();
    let xi = xs[i - 1];
    let mut t = xi + 1;
    loop {
        if d.is_empty_vertex(t) && d.length(i, t) == 0 {
            return t;
        }
        t += 1;
    }
}

/// A single right move `R_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RightMove {
    pub target: i64,
    pub k: i64,
    pub result: Weight,
}

fn dominant_diagram(lambda: &Weight) -> WeightDiagram {
    WeightDiagram::from_weight(lambda).expect("weight must be dominant")
}

pub fn right_move(lambda: &Weight, i: usize) -> RightMove {
    let d = dominant_diagram(lambda);
    let target = right_target(&d, i);
    let k = target - d.crosses()[i - 1];
    let mut theta = alloc::vec![0u8; d.degree()];
    theta[i - 1] = 1;
    RightMove {
        target,
        k,
        result: right_path(lambda, &theta),
    }
}

/// `(k_1, …, k_r)` of a dominant weight: how far each `×` travels under its right move.
pub fn k_tuple_dominant(lambda: &Weight) -> Vec<i64> {
    let d = dominant_diagram(lambda);
    let xs = d.crosses();
    (1..=xs.len())
        .map(|i| right_target(&d, i) - xs[i - 1])
        .collect()
}

/// `R_θ(λ)` for `θ ∈ {0,1}^r`.
pub fn right_path(lambda: &Weight, theta: &[u8]) -> Weight {
    let d = dominant_diagram(lambda);
    let xs = d.crosses();
    assert_eq!(theta.len(), xs.len(), "θ must have length r");
    let targets: Vec<i64> = (0..xs.len())
        .filter(|&i| theta[i] != 0)
        .map(|i| right_target(&d, i + 1))
        .collect();
    let mut out = d.clone();
    for (i, &x) in xs.iter().enumerate() {
        if theta[i] != 0 {
            if x == 0 {
                out.zero_cross -= 1;
            } else {
                out.symbols.remove(&x);
            }
        }
    }
    for t in targets {
        let prev = out.symbols.insert(t, Symbol::Cross);
        assert!(prev.is_none(), "right-move targets never collide");
    }
    out.to_weight(lambda.n())
        .expect("right path keeps the rank")
}

/// Frame position of each root of a regular weight `μ = frame.build(j)` among the
/// `×`'s of `μ⁺` (0-based cross indices).
fn frame_cross_indices(frame: &Frame, j: &[i64], mu: &Weight, zero_cross: usize) -> Vec<usize> {
    let zeros: Vec<usize> = (0..mu.n()).filter(|&k| mu.0[k] == 0).collect();
    let z = zeros.len();
    let mut pos: Vec<i64> = j.iter().copied().filter(|&x| x > 0).collect();
    pos.sort_unstable();
    frame
        .roots
        .iter()
        .zip(j)
        .map(|(&(m, n), &x)| {
            if x > 0 {
                zero_cross + pos.iter().position(|&y| y == x).expect("present")
            } else {
                let a = zeros.iter().position(|&k| k == m).expect("zero entry");
                let b = zeros.iter().position(|&k| k == n).expect("zero entry");
                let (pa, pb) = if z % 2 == 1 {
                    let mid = (z - 1) / 2;
                    (mid - a, b - mid)
                } else {
                    (z / 2 - a, b + 1 - z / 2)
                };
                assert_eq!(pa, pb, "zero roots of a frame stay nested");
                pa - 1
            }
        })
        .collect()
}

/// `(k_1, …, k_r)` of the regular weight `frame.build(j)`, pulled back from its dominant
/// conjugate so that `k_p` belongs to the frame root `γ_p`.
pub fn frame_k_tuple(frame: &Frame, j: &[i64]) -> Option<Vec<i64>> {
    let mu = frame.build(j);
    let plus = mu.plus()?;
    let d = dominant_diagram(&plus);
    let ks = k_tuple_dominant(&plus);
    let idx = frame_cross_indices(frame, j, &mu, d.zero_cross);
    Some(idx.into_iter().map(|i| ks[i]).collect())
}

/// `(k_1, …, k_r)` of any regular weight, indexed like its transported atypical roots.
pub fn k_tuple(mu: &Weight) -> Option<Vec<i64>> {
    let data = mu.atypical_data()?;
    let plus = mu.plus()?;
    let ks = k_tuple_dominant(&plus);
    // Transported roots are listed in the order of the dominant conjugate's roots.
    debug_assert_eq!(ks.len(), data.roots.len());
    Some(ks)
}

/// `R'_θ(μ) = (R̄_1^{θ_1} ⋯ R̄_r^{θ_r}(μ))⁺` for `θ ∈ N^r`; `R̄_r` acts first.
pub fn raising_prime(mu: &Weight, theta: &[u32]) -> Option<Weight> {
    let (frame, mut j) = Frame::of(mu);
    assert_eq!(theta.len(), frame.degree(), "θ must have length r");
    for p in (0..theta.len()).rev() {
        for _ in 0..theta[p] {
            let ks = frame_k_tuple(&frame, &j)?;
            j[p] += ks[p];
        }
    }
    frame.build(&j).plus()
}

/// Sum of the vertices of all `×`'s.
pub fn level(lambda: &Weight) -> i64 {
    dominant_diagram(lambda).crosses().iter().sum()
}

/// `Θ^λ_μ = {θ ∈ N^r : R'_θ(μ) = λ}`, enumerated exhaustively.
///
/// Each application of `R̄_p` raises the level by `k_p ≥ 1`, so the total level gap
/// bounds the search; `level_cap` optionally tightens it further.
pub fn left_paths_to(lambda: &Weight, mu: &Weight, level_cap: Option<i64>) -> Vec<Vec<u32>> {
    let (frame, j0) = Frame::of(mu);
    let r = frame.degree();
    if dominant_diagram(lambda).degree() != r || lambda.n() != mu.n() {
        return Vec::new();
    }
    let mut budget = level(lambda) - level(mu);
    if let Some(cap) = level_cap {
        budget = budget.min(cap);
    }
    if budget < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut theta = alloc::vec![0u32; r];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        p: usize,
        j: Vec<i64>,
        used: i64,
        budget: i64,
        frame: &Frame,
        lambda: &Weight,
        theta: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if p == 0 {
            if frame.build(&j).plus().as_ref() == Some(lambda) {
                out.push(theta.clone());
            }
            return;
        }
        let q = p - 1;
        let mut cur = j;
        let mut used = used;
        let mut count = 0;
        loop {
            theta[q] = count;
            rec(q, cur.clone(), used, budget, frame, lambda, theta, out);
            let k = match frame_k_tuple(frame, &cur) {
                Some(ks) => ks[q],
                None => break,
            };
            if used + k > budget {
                break;
            }
            cur[q] += k;
            used += k;
            count += 1;
        }
        theta[q] = 0;
    }
    rec(r, j0, 0, budget, &frame, lambda, &mut theta, &mut out);
    out.sort();
    out
}

/// A single left move `L_{ij}`: the `j`-th `×` (1-based) moves to `target`
/// (`target = 0` places it at vertex 0).
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct LeftMove {
    pub i: usize,
    pub j: usize,
    pub target: i64,
}

/// All legal single left moves.
///
/// A `×` at `x_j > 0` may move to an empty `s > 0` with `d(s, x_j) = 0`, named `L_{ij}` with
/// `i = j − #{×'s strictly between s and x_j}`; it may move to vertex 0 (named `L_{0j}`) when
/// `ℓ(i, x_j) = 0` for some vertex-0 index `0 ≤ i ≤ ⌊z/2⌋`, i.e. when
/// `d(0, x_j) − z̄ ∈ {0, 2, …, 2⌊z/2⌋}`.
pub fn left_moves(lambda: &Weight) -> Vec<LeftMove> {
    let d = dominant_diagram(lambda);
    left_moves_of(&d)
}

fn left_moves_of(d: &WeightDiagram) -> Vec<LeftMove> {
    let xs = d.crosses();
    let mut moves = Vec::new();
    for (idx, &xj) in xs.iter().enumerate() {
        let j = idx + 1;
        if xj == 0 {
            continue;
        }
        for s in 1..xj {
            if d.is_empty_vertex(s) && d.distance(s, xj) == 0 {
                let between = d
                    .symbols
                    .range(s + 1..xj)
                    .filter(|(_, sym)| **sym == Symbol::Cross)
                    .count();
                moves.push(LeftMove {
                    i: j - between,
                    j,
                    target: s,
                });
            }
        }
        let e = d.distance(0, xj) - i64::from(d.bot);
        if e >= 0 && e % 2 == 0 && e <= 2 * d.zero_cross as i64 {
            moves.push(LeftMove { i: 0, j, target: 0 });
        }
    }
    moves
}

/// The weight obtained from `λ` by one left move.
pub fn left_move_result(lambda: &Weight, m: LeftMove) -> Option<Weight> {
    let d = dominant_diagram(lambda);
    apply_left_path(&d, &d.crosses(), &[m], lambda.n())
}

/// A left path: moves with strictly increasing `j`.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct LeftPath {
    pub moves: Vec<LeftMove>,
}

impl LeftPath {
    pub fn empty() -> Self {
        LeftPath { moves: Vec::new() }
    }

    /// `Lempty` or `L(i1,j1)(i2,j2)…`.
    pub fn token(&self) -> String {
        if self.moves.is_empty() {
            return String::from("Lempty");
        }
        let mut s = String::from("L");
        for m in &self.moves {
            s.push_str(&format!("({},{})", m.i, m.j));
        }
        s
    }

    /// Token with destinations, e.g. `L(5,6->3)`.
    pub fn token_with_targets(&self) -> String {
        if self.moves.is_empty() {
            return String::from("Lempty");
        }
        let mut s = String::from("L");
        for m in &self.moves {
            s.push_str(&format!("({},{}->{})", m.i, m.j, m.target));
        }
        s
    }
}

/// The two path conditions on a candidate (moves sorted by `j`):
/// (ii) for `a < b`, `i_b ≤ j_a` forces `i_b ≤ i_a`;
/// (iii) every real `×` index `p` with `max(i_b,1) ≤ p < j_b`, `x_p > 0` and
/// `ℓ(p, x_{j_b}) ≤ 0` already moves earlier in the path.
fn path_conditions_hold(d: &WeightDiagram, xs: &[i64], moves: &[LeftMove]) -> bool {
    for b in 0..moves.len() {
        let mb = moves[b];
        for ma in &moves[..b] {
            if mb.i <= ma.j && mb.i > ma.i {
                return false;
            }
        }
        for p in mb.i.max(1)..mb.j {
            if xs[p - 1] == 0 {
                continue;
            }
            if d.length(p, xs[mb.j - 1]) <= 0 && !moves[..b].iter().any(|ma| ma.j == p) {
                return false;
            }
        }
    }
    true
}

/// Result weight of a left path, or `None` when two moves land on the same vertex.
fn apply_left_path(d: &WeightDiagram, xs: &[i64], moves: &[LeftMove], n: usize) -> Option<Weight> {
    let mut out = d.clone();
    for m in moves {
        out.symbols.remove(&xs[m.j - 1]);
    }
    for m in moves {
        if m.target == 0 {
            out.zero_cross += 1;
        } else if out.symbols.insert(m.target, Symbol::Cross).is_some() {
            return None;
        }
    }
    Some(out.to_weight(n).expect("left path keeps the rank"))
}

/// `Θ^λ`: every left path together with its result weight, sorted by path.
pub fn left_paths(lambda: &Weight) -> Vec<(LeftPath, Weight)> {
    let d = dominant_diagram(lambda);
    let xs = d.crosses();
    let mut by_j: BTreeMap<usize, Vec<LeftMove>> = BTreeMap::new();
    for m in left_moves_of(&d) {
        by_j.entry(m.j).or_default().push(m);
    }
    let js: Vec<usize> = by_j.keys().copied().collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        idx: usize,
        js: &[usize],
        by_j: &BTreeMap<usize, Vec<LeftMove>>,
        chosen: &mut Vec<LeftMove>,
        d: &WeightDiagram,
        xs: &[i64],
        n: usize,
        out: &mut Vec<(LeftPath, Weight)>,
    ) {
        if !path_conditions_hold(d, xs, chosen) {
            return;
        }
        if idx == js.len() {
            if let Some(w) = apply_left_path(d, xs, chosen, n) {
                out.push((
                    LeftPath {
                        moves: chosen.clone(),
                    },
                    w,
                ));
            }
            return;
        }
        rec(idx + 1, js, by_j, chosen, d, xs, n, out);
        for m in &by_j[&js[idx]] {
            chosen.push(*m);
            rec(idx + 1, js, by_j, chosen, d, xs, n, out);
            chosen.pop();
        }
    }
    rec(0, &js, &by_j, &mut chosen, &d, &xs, lambda.n(), &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Dominant `μ` with `R_θ(μ) = λ` for some `θ ∈ {0,1}^r`, found by searching every
/// placement of `r` crosses below the top `×` of `λ` (right moves only go up).
pub fn right_preimages(lambda: &Weight) -> BTreeSet<WeightKey> {
    let d = dominant_diagram(lambda);
    let r = d.degree();
    let mut res = BTreeSet::new();
    if r == 0 {
        res.insert(WeightKey(lambda.clone()));
        return res;
    }
    let top = *d.crosses().last().expect("r > 0");
    let mut others = d.clone();
    others.symbols.retain(|_, s| *s != Symbol::Cross);
    others.zero_cross = 0;
    let free: Vec<i64> = (1..=top)
        .filter(|v| !others.symbols.contains_key(v))
        .collect();
    for at_zero in 0..=r {
        let need = r - at_zero;
        for subset in combinations(&free, need) {
            let mut cand = others.clone();
            cand.zero_cross = at_zero;
            for v in subset {
                cand.symbols.insert(v, Symbol::Cross);
            }
            let mu = cand.to_weight(lambda.n()).expect("same rank");
            if reaches_by_right_path(&mu, lambda, r) {
                res.insert(WeightKey(mu));
            }
        }
    }
    res
}

fn reaches_by_right_path(mu: &Weight, lambda: &Weight, r: usize) -> bool {
    let mut theta = alloc::vec![0u8; r];
    for mask in 0u64..(1u64 << r) {
        for (i, t) in theta.iter_mut().enumerate() {
            *t = ((mask >> i) & 1) as u8;
        }
        if right_path(mu, &theta) == *lambda {
            return true;
        }
    }
    false
}

fn combinations(items: &[i64], k: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[i64], k: usize, start: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in start..items.len() {
            if items.len() - s < k - cur.len() {
                break;
            }
            cur.push(items[s]);
            rec(items, k, s + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// A weight ordered by descending lexicographic order, for use as a set or map key.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct WeightKey(pub Weight);

impl PartialOrd for WeightKey {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeightKey {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        crate::weight::compare_lex(&self.0, &other.0).then_with(|| self.0.n().cmp(&other.0.n()))
    }
}
