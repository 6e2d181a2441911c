//! Exact Laurent polynomials in `x_1, …, x_n` (writing `x_i = e^{ε_i}`) with
//! arbitrary-precision integer coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A finitely supported map `Z^n → Z` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent {
    n: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl Laurent {
    pub fn zero(n: usize) -> Self {
        Laurent {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(alloc::vec![0; n], BigInt::one())
    }

    pub fn monomial(exponent: Vec<i64>, coeff: BigInt) -> Self {
        let n = exponent.len();
        let mut p = Self::zero(n);
        p.add_term(exponent, coeff);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: &[i64]) -> BigInt {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending order: lexicographically largest exponent first.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, exponent: Vec<i64>, coeff: BigInt) {
        assert_eq!(exponent.len(), self.n, "exponent rank mismatch");
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Laurent, c: &BigInt) {
        assert_eq!(self.n, other.n, "rank mismatch");
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Laurent {
        let mut out = Laurent::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        assert_eq!(self.n, other.n, "rank mismatch");
        let mut out = Laurent::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by `x_i + s·x_j` for a sign `s = ±1`.
    pub fn mul_binomial(&self, i: usize, j: usize, s: i64) -> Laurent {
        let mut out = Laurent::zero(self.n);
        for (e, c) in &self.terms {
            let mut a = e.clone();
            a[i] += 1;
            out.add_term(a, c.clone());
            let mut b = e.clone();
            b[j] += 1;
            out.add_term(b, c * BigInt::from(s));
        }
        out
    }

    /// Exact quotient by `x_i − x_j`, or `None` when the division leaves a remainder.
    pub fn div_difference(&self, i: usize, j: usize) -> Option<Laurent> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let floor = self.terms.keys().map(|e| e[i]).min().expect("non-empty");
        let mut rem: BTreeMap<(i64, Vec<i64>), BigInt> = self
            .terms
            .iter()
            .map(|(e, c)| ((e[i], e.clone()), c.clone()))
            .collect();
        let mut quot = Laurent::zero(self.n);
        while let Some(((ei, e), c)) = rem.pop_last() {
            if ei <= floor {
                return None;
            }
            let mut q = e.clone();
            q[i] -= 1;
            let mut shifted = q.clone();
            shifted[j] += 1;
            quot.add_term(q, c.clone());
            let key = (shifted[i], shifted);
            let slot = rem.entry(key.clone()).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                rem.remove(&key);
            }
        }
        Some(quot)
    }

    /// Exact division of every coefficient by `d`, or `None` if some coefficient is not a
    /// multiple of `d`.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Option<Laurent> {
        let mut out = Laurent::zero(self.n);
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.add_term(e.clone(), q);
        }
        Some(out)
    }

    /// Applies a coordinate permutation: exponent entry `k` moves to position `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Laurent {
        let mut out = Laurent::zero(self.n);
        for (e, c) in &self.terms {
            let mut f = alloc::vec![0; self.n];
            for (k, &v) in e.iter().enumerate() {
                f[perm[k]] = v;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Invariance under all coordinate permutations (adjacent transpositions generate S_n).
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|k| {
            let mut perm: Vec<usize> = (0..self.n).collect();
            perm.swap(k, k + 1);
            self.permuted(&perm) == *self
        })
    }

    /// Value at `x_1 = ⋯ = x_n = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First exponent (descending order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Laurent) -> Option<(Vec<i64>, BigInt, BigInt)> {
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .rev()
            .map(|e| (e.clone(), self.coefficient(e), other.coefficient(e)))
            .find(|(_, a, b)| a != b)
    }

    /// `c * x1^a1*x2^a2 …` terms joined by ` + `; zero renders as `0`.
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if k == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                let _ = write!(s, " {sign} ");
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        alloc::format!("x{}", i + 1)
                    } else {
                        alloc::format!("x{}^{}", i + 1, a)
                    }
                })
                .collect();
            if vars.is_empty() {
                let _ = write!(s, "{mag}");
            } else if mag.is_one() {
                s.push_str(&vars.join("*"));
            } else {
                let _ = write!(s, "{mag}*{}", vars.join("*"));
            }
        }
        s
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn x(e: Vec<i64>, c: i64) -> Laurent {
        Laurent::monomial(e, BigInt::from(c))
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let mut p = x(vec![1, 0], 1);
        p.add_scaled(&x(vec![1, 0], 1), &BigInt::from(-1));
        assert!(p.is_zero());
        let q = x(vec![1, 0], 1).mul_binomial(0, 1, 1);
        assert_eq!(q.coefficient(&[2, 0]), BigInt::one());
        assert_eq!(q.coefficient(&[1, 1]), BigInt::one());
    }

    #[test]
    fn exact_difference_division() {
        // (x1+x2)(x1−x2) / (x1−x2) = x1 + x2
        let p = Laurent::one(2).mul_binomial(0, 1, 1).mul_binomial(0, 1, -1);
        let q = p.div_difference(0, 1).unwrap();
        let mut expect = x(vec![1, 0], 1);
        expect.add_term(vec![0, 1], BigInt::one());
        assert_eq!(q, expect);
        // Laurent exponents: (x1/x2 − x2/x1) / (x1 − x2) = (x1 + x2)/(x1 x2)
        let mut r = x(vec![1, -1], 1);
        r.add_term(vec![-1, 1], BigInt::from(-1));
        let q = r.div_difference(0, 1).unwrap();
        let mut expect = x(vec![0, -1], 1);
        expect.add_term(vec![-1, 0], BigInt::one());
        assert_eq!(q, expect);
        assert!(x(vec![1, 0], 1).div_difference(0, 1).is_none());
    }

    #[test]
    fn symmetry_and_text() {
        let mut p = x(vec![1, -1], 1);
        p.add_term(vec![-1, 1], BigInt::one());
        p.add_term(vec![0, 0], BigInt::from(2));
        assert!(p.is_symmetric());
        assert_eq!(p.coefficient_sum(), BigInt::from(4));
        assert_eq!(p.to_text(), "x1*x2^-1 + 2 + x1^-1*x2");
        assert!(!x(vec![1, 0], 1).is_symmetric());
        assert_eq!(x(vec![0, 0], -3).to_text(), "-3");
    }
}
