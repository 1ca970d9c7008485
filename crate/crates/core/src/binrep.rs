//! k-binomial representations and the functions read off them.
//!
//! Every `n >= 0` has exactly one expansion
//! `n = C(n_k, k) + C(n_{k-1}, k-1) + ... + C(n_1, 1)` with
//! `0 <= n_1 < n_2 < ... < n_k`. Positions whose term is zero always carry
//! `n_i = i - 1`, so the padded vector is canonical and every strictly
//! increasing coefficient vector is the representation of its own value.
//!
//! Coefficients are big integers: for `k = 1` the single coefficient is `n`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BinRepError {
    #[error("representation order must be at least 1")]
    ZeroOrder,
    #[error("coefficients must satisfy 0 <= n_1 < n_2 < ... < n_k, got [{}] (listed n_k first)", join(.0))]
    NotStrictlyIncreasing(Vec<BigUint>),
    #[error("extended coefficients must satisfy 0 <= a_0' = a_1' - 1 < a_1' < ... < a_k', got [{}]", join(.0))]
    InvalidExtended(Vec<BigUint>),
    #[error("0 has no extended representation")]
    ZeroHasNoExtended,
    #[error("pascal chain needs m > j, got m = {m}, j = {j}")]
    ChainDomain { m: u64, j: usize },
}

fn join(v: &[BigUint]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// `C(m, j)`, with `C(m, j) = 0` whenever `m < j` (negative `m` included).
pub fn binomial(m: i64, j: usize) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    binomial_big(&BigUint::from(m as u64), j)
}

pub(crate) fn binomial_u(m: u64, j: usize) -> BigUint {
    binomial_big(&BigUint::from(m), j)
}

/// `C(m, j)` for a big upper index; zero when `m < j`.
pub fn binomial_big(m: &BigUint, j: usize) -> BigUint {
    if *m < BigUint::from(j) {
        return BigUint::zero();
    }
    let j = match (m - j).to_usize() {
        Some(rest) => j.min(rest),
        None => j,
    };
    let mut acc = BigUint::one();
    // after step i, acc == C(m, i + 1), so each division is exact
    for i in 0..j {
        acc *= m - i;
        acc /= i + 1;
    }
    acc
}

/// `C(c - 1, i - 1)` under the `m < j => 0` convention (`c = 0` gives 0).
fn binomial_below(c: &BigUint, i: usize) -> BigUint {
    if c.is_zero() {
        return BigUint::zero();
    }
    binomial_big(&(c - 1u32), i - 1)
}

/// Short: `n_1 = 0`. Long: `n_1 >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Short,
    Long,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Short => f.write_str("short"),
            Parity::Long => f.write_str("long"),
        }
    }
}

fn to_big<T: Into<BigUint>>(v: Vec<T>) -> Vec<BigUint> {
    v.into_iter().map(Into::into).collect()
}

/// The coefficient vector `[n_k, ..., n_1]` of a k-binomial representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KBinomialRep {
    coeffs: Vec<BigUint>,
}

impl KBinomialRep {
    /// Validates a coefficient vector listed top-down (`n_k` first).
    pub fn new<T: Into<BigUint>>(coeffs: Vec<T>) -> Result<Self, BinRepError> {
        let coeffs = to_big(coeffs);
        if coeffs.is_empty() {
            return Err(BinRepError::ZeroOrder);
        }
        if coeffs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(BinRepError::NotStrictlyIncreasing(coeffs));
        }
        Ok(Self { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients listed top-down, `[n_k, ..., n_1]`.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `n_i` for `1 <= i <= k`.
    pub fn coeff(&self, i: usize) -> &BigUint {
        assert!(
            i >= 1 && i <= self.order(),
            "index {i} out of 1..={}",
            self.order()
        );
        &self.coeffs[self.order() - i]
    }

    /// `(i, n_i)` pairs from `i = k` down to `i = 1`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        let k = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(pos, c)| (k - pos, c))
    }

    /// Terms with `C(n_i, i) > 0`, top-down.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.terms().filter(|&(i, c)| *c >= BigUint::from(i))
    }

    /// Lowest index `v` with a nonzero term, with its coefficient.
    pub fn lowest_nonzero(&self) -> Option<(usize, &BigUint)> {
        self.nonzero_terms().last()
    }

    pub fn value(&self) -> BigUint {
        self.terms().map(|(i, c)| binomial_big(c, i)).sum()
    }

    pub fn parity(&self) -> Parity {
        if self.coeff(1).is_zero() {
            Parity::Short
        } else {
            Parity::Long
        }
    }

    /// `∂^k`: `Σ C(n_i - 1, i - 1)` over all k positions.
    pub fn kruskal_macaulay(&self) -> BigUint {
        self.terms().map(|(i, c)| binomial_below(c, i)).sum()
    }

    /// `∂_k`: `Σ C(n_i, i - 1)` over the nonzero terms only.
    pub fn kruskal_katona(&self) -> BigUint {
        self.nonzero_terms()
            .map(|(i, c)| binomial_big(c, i - 1))
            .sum()
    }
}

impl fmt::Display for KBinomialRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(i, c)| format!("C({c},{i})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Largest `m` with `C(m, i) <= rem`; never below `i - 1`.
fn largest_fitting(rem: &BigUint, i: usize) -> BigUint {
    let mut lo = BigUint::from(i - 1);
    let mut hi = BigUint::from(i);
    while binomial_big(&hi, i) <= *rem {
        lo = hi.clone();
        hi <<= 1;
    }
    // C(lo, i) <= rem < C(hi, i)
    while &hi - &lo > BigUint::one() {
        let mid = &lo + ((&hi - &lo) >> 1);
        if binomial_big(&mid, i) <= *rem {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy k-binomial representation of `n`.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn decompose(n: &BigUint, k: usize) -> KBinomialRep {
    assert!(k >= 1, "representation order must be at least 1");
    let mut rem = n.clone();
    let mut coeffs = Vec::with_capacity(k);
    for i in (1..=k).rev() {
        let c = largest_fitting(&rem, i);
        rem -= binomial_big(&c, i);
        coeffs.push(c);
    }
    debug_assert!(rem.is_zero());
    KBinomialRep { coeffs }
}

pub fn kruskal_macaulay(n: &BigUint, k: usize) -> BigUint {
    decompose(n, k).kruskal_macaulay()
}

pub fn kruskal_katona(n: &BigUint, k: usize) -> BigUint {
    decompose(n, k).kruskal_katona()
}

pub fn classify(n: &BigUint, k: usize) -> Parity {
    decompose(n, k).parity()
}

/// `n - ∂^k(n)`, the maximum number of translates of a rational simplex
/// on `k + 1` points among `n` points.
pub fn max_translates(n: &BigUint, k: usize) -> BigUint {
    n - kruskal_macaulay(n, k)
}

/// The coefficient vector `[a_k', ..., a_1', a_0']` of an extended
/// representation, where `a_0' = a_1' - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedRep {
    coeffs: Vec<BigUint>,
}

impl ExtendedRep {
    pub fn new<T: Into<BigUint>>(coeffs: Vec<T>) -> Result<Self, BinRepError> {
        let coeffs = to_big(coeffs);
        if coeffs.len() < 2 {
            return Err(BinRepError::ZeroOrder);
        }
        let n = coeffs.len();
        let strict = coeffs.windows(2).all(|w| w[0] > w[1]);
        if !strict || &coeffs[n - 1] + 1u32 != coeffs[n - 2] {
            return Err(BinRepError::InvalidExtended(coeffs));
        }
        Ok(Self { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `a_i'` for `0 <= i <= k`.
    pub fn coeff(&self, i: usize) -> &BigUint {
        assert!(i <= self.order());
        &self.coeffs[self.order() - i]
    }

    fn terms(&self) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        let k = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(pos, c)| (k - pos, c))
    }

    pub fn value(&self) -> BigUint {
        self.terms().map(|(i, c)| binomial_big(c, i)).sum()
    }

    /// `∂_e^k`: `Σ_{i=1..k} C(a_i' - 1, i - 1)`.
    pub fn kruskal_macaulay(&self) -> BigUint {
        self.terms()
            .filter(|&(i, _)| i >= 1)
            .map(|(i, c)| binomial_below(c, i))
            .sum()
    }
}

impl fmt::Display for ExtendedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(i, c)| format!("C({c},{i})")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Extended k-binomial representation of `a >= 1`, present exactly when the
/// lowest nonzero term `C(a_v, v)` has `a_v >= v + 1`.
///
/// The lowest term is split with the Pascal chain
/// `C(a_v, v) = C(a_v - 1, v) + C(a_v - 2, v - 1) + ... + C(a_v - v - 1, 0)`.
pub fn extended_decompose(a: &BigUint, k: usize) -> Result<Option<ExtendedRep>, BinRepError> {
    if a.is_zero() {
        return Err(BinRepError::ZeroHasNoExtended);
    }
    let rep = decompose(a, k);
    let (v, a_v) = rep.lowest_nonzero().expect("a >= 1 has a nonzero term");
    if *a_v <= BigUint::from(v) {
        return Ok(None);
    }
    let mut coeffs: Vec<BigUint> = rep
        .terms()
        .filter(|&(i, _)| i > v)
        .map(|(_, c)| c.clone())
        .collect();
    let base = a_v - (v + 1);
    coeffs.extend((0..=v).rev().map(|i| &base + i));
    Ok(Some(ExtendedRep { coeffs }))
}

/// `[C(m-1, j), C(m-2, j-1), ..., C(m-j-1, 0)]`, which sums to `C(m, j)`.
pub fn pascal_chain(m: u64, j: usize) -> Result<Vec<BigUint>, BinRepError> {
    if m <= j as u64 {
        return Err(BinRepError::ChainDomain { m, j });
    }
    Ok((0..=j)
        .map(|t| binomial_u(m - 1 - t as u64, j - t))
        .collect())
}
