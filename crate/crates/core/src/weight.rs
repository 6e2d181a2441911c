//! Integral weights of q(n): statistics, dominance, regularity, atypical roots,
//! atypical frames and the orderings used throughout the crate.
//!
//! A weight is an integer vector `λ = (λ_1, …, λ_n)`. It is *dominant* when its
//! entries weakly decrease and equal neighbours are zero, and *regular* when every
//! nonzero value occurs at most once (so that a permutation makes it dominant).

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// An integral weight in `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight(pub Vec<i64>);

/// Module type of the simple module with a given highest weight.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleType {
    /// Endomorphism algebra of dimension 1 (`h` even).
    M,
    /// Endomorphism algebra of dimension 2 (`h` odd).
    Q,
}

/// Cached statistics of a weight.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WeightStats {
    /// Number of zero entries.
    pub z: usize,
    /// Parity bit of `z`.
    pub zbar: usize,
    /// Number of nonzero entries.
    pub h: usize,
    pub dominant: bool,
    pub regular: bool,
    pub module_type: ModuleType,
}

/// Result of sorting a weight into dominant position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Conjugate {
    /// `weight = w⁺`; `perm[k]` is the original index of the entry at sorted position `k`.
    Regular { weight: Weight, perm: Vec<usize> },
    /// Some nonzero value repeats, so no permutation makes the weight dominant.
    Vanishing,
}

/// An atypical root `γ = ε_m − ε_n` stored as 0-based index pair `(m, n)`.
pub type Root = (usize, usize);

/// Atypicality data of a regular weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AtypicalData {
    /// Atypical roots `γ_1, …, γ_r`; `γ_1` is the innermost one.
    pub roots: Vec<Root>,
    /// `(λ_{m_r}, …, λ_{m_1})`.
    pub atypical_tuple: Vec<i64>,
    /// Entries not covered by any atypical root, in index order.
    pub typical_tuple: Vec<i64>,
    /// The weight with every atypical entry set to zero.
    pub frame: Weight,
}

impl AtypicalData {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(n: usize) -> Self {
        Weight(alloc::vec![0; n])
    }

    /// `ε_1` in `Z^n`.
    pub fn epsilon1(n: usize) -> Self {
        let mut e = alloc::vec![0; n];
        if n > 0 {
            e[0] = 1;
        }
        Weight(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn z(&self) -> usize {
        self.0.iter().filter(|&&v| v == 0).count()
    }

    pub fn zbar(&self) -> usize {
        self.z() % 2
    }

    pub fn h(&self) -> usize {
        self.n() - self.z()
    }

    pub fn is_dominant(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| w[0] > w[1] || (w[0] == w[1] && w[0] == 0))
    }

    pub fn is_regular(&self) -> bool {
        let mut nz: Vec<i64> = self.0.iter().copied().filter(|&v| v != 0).collect();
        nz.sort_unstable();
        nz.windows(2).all(|w| w[0] != w[1])
    }

    pub fn stats(&self) -> WeightStats {
        let z = self.z();
        let h = self.n() - z;
        WeightStats {
            z,
            zbar: z % 2,
            h,
            dominant: self.is_dominant(),
            regular: self.is_regular(),
            module_type: if h.is_multiple_of(2) {
                ModuleType::M
            } else {
                ModuleType::Q
            },
        }
    }

    /// Sorts the entries decreasingly (stable, so tied zeros keep index order).
    pub fn dominant_conjugate(&self) -> Conjugate {
        if !self.is_regular() {
            return Conjugate::Vanishing;
        }
        let mut perm: Vec<usize> = (0..self.n()).collect();
        perm.sort_by(|&a, &b| self.0[b].cmp(&self.0[a]));
        let weight = Weight(perm.iter().map(|&k| self.0[k]).collect());
        Conjugate::Regular { weight, perm }
    }

    /// The dominant conjugate `w⁺`, or `None` for a vanishing weight.
    pub fn plus(&self) -> Option<Weight> {
        match self.dominant_conjugate() {
            Conjugate::Regular { weight, .. } => Some(weight),
            Conjugate::Vanishing => None,
        }
    }

    /// Atypical roots and tuples. Non-dominant regular weights carry the roots of their
    /// dominant conjugate, transported back along the sorting permutation.
    pub fn atypical_data(&self) -> Option<AtypicalData> {
        let (roots, _) = match self.dominant_conjugate() {
            Conjugate::Vanishing => return None,
            Conjugate::Regular { weight, perm } => {
                let roots = dominant_roots(&weight)
                    .into_iter()
                    .map(|(m, n)| (perm[m], perm[n]))
                    .collect::<Vec<_>>();
                (roots, weight)
            }
        };
        let mut frame = self.0.clone();
        let mut covered = alloc::vec![false; self.n()];
        for &(m, n) in &roots {
            frame[m] = 0;
            frame[n] = 0;
            covered[m] = true;
            covered[n] = true;
        }
        let atypical_tuple = roots.iter().rev().map(|&(m, _)| self.0[m]).collect();
        let typical_tuple = (0..self.n())
            .filter(|&k| !covered[k])
            .map(|k| self.0[k])
            .collect();
        Some(AtypicalData {
            roots,
            atypical_tuple,
            typical_tuple,
            frame: Weight(frame),
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Atypical roots of a dominant weight, innermost first.
///
/// Zero entries pair up nested around the middle zero (odd count) or the middle gap
/// (even count); nonzero roots pair `λ_m = −λ_n` in increasing order of `λ_m`.
pub fn dominant_roots(lambda: &Weight) -> Vec<Root> {
    let e = &lambda.0;
    let zeros: Vec<usize> = (0..e.len()).filter(|&k| e[k] == 0).collect();
    let z = zeros.len();
    let mut roots = Vec::new();
    for p in 1..=z / 2 {
        let (a, b) = if z % 2 == 1 {
            let mid = (z - 1) / 2;
            (mid - p, mid + p)
        } else {
            (z / 2 - p, z / 2 - 1 + p)
        };
        roots.push((zeros[a], zeros[b]));
    }
    let mut pos: Vec<(i64, usize)> = (0..e.len())
        .filter(|&k| e[k] > 0)
        .map(|k| (e[k], k))
        .collect();
    pos.sort_unstable();
    for (v, m) in pos {
        if let Some(n) = (0..e.len()).find(|&k| e[k] == -v) {
            roots.push((m, n));
        }
    }
    roots
}

/// The descending lexicographic order: `a < b` iff at the first differing coordinate `p`, `b_p < a_p`.
pub fn compare_lex(a: &Weight, b: &Weight) -> Ordering {
    for (x, y) in a.0.iter().zip(b.0.iter()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// A fixed atypical frame `λ̄ + Σ j_p γ_p` shared by all weights of a block.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frame {
    pub base: Weight,
    pub roots: Vec<Root>,
}

impl Frame {
    /// The frame of a dominant weight together with its coordinates `j_p = λ_{m_p}`.
    pub fn of(lambda: &Weight) -> (Frame, Vec<i64>) {
        let roots = dominant_roots(lambda);
        let mut base = lambda.0.clone();
        let mut j = Vec::with_capacity(roots.len());
        for &(m, n) in &roots {
            j.push(lambda.0[m]);
            base[m] = 0;
            base[n] = 0;
        }
        (
            Frame {
                base: Weight(base),
                roots,
            },
            j,
        )
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// `λ̄ + Σ j_p γ_p`.
    pub fn build(&self, j: &[i64]) -> Weight {
        let mut w = self.base.0.clone();
        for (&(m, n), &x) in self.roots.iter().zip(j) {
            w[m] += x;
            w[n] -= x;
        }
        Weight(w)
    }

    /// Frame coordinates of `w`, if `w` lies in this frame.
    pub fn coordinates(&self, w: &Weight) -> Option<Vec<i64>> {
        if w.n() != self.base.n() {
            return None;
        }
        let j: Vec<i64> = self.roots.iter().map(|&(m, _)| w.0[m]).collect();
        if self.build(&j) == *w {
            Some(j)
        } else {
            None
        }
    }
}

/// `ν ⪯ μ` in a common frame: the atypical tuples compare entrywise.
pub fn partial_order_atypical(frame: &Frame, nu: &Weight, mu: &Weight) -> Option<bool> {
    let a = frame.coordinates(nu)?;
    let b = frame.coordinates(mu)?;
    Some(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// Relative level `|μ − ν| = Σ_p (j_p − ℓ_p)` in a common frame.
pub fn relative_level(frame: &Frame, mu: &Weight, nu: &Weight) -> Option<i64> {
    let a = frame.coordinates(mu)?;
    let b = frame.coordinates(nu)?;
    Some(a.iter().zip(&b).map(|(x, y)| x - y).sum())
}

/// All dominant weights of length `n` with entries in `[-bound, bound]`,
/// listed in descending order (largest first).
pub fn dominant_weights(n: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, bound: i64, prev: Option<i64>, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        let top = match prev {
            None => bound,
            Some(0) => 0,
            Some(p) => p - 1,
        };
        let mut v = top;
        while v >= -bound {
            cur.push(v);
            rec(n, bound, Some(v), cur, out);
            cur.pop();
            v -= 1;
        }
    }
    rec(n, bound, None, &mut cur, &mut out);
    out
}
