//! Independent reference implementations used as test oracles.
//!
//! Everything here is deliberately naive: binomials by the multiplicative
//! formula in `u128`, representations by linear scans, lex prefixes by
//! sorting an explicit universe, shadows through hash sets. None of it calls
//! into the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

pub fn binom(m: i64, j: u32) -> u128 {
    if m < j as i64 {
        return 0;
    }
    let mut acc: u128 = 1;
    for t in 0..j as i64 {
        acc = acc * (m - t) as u128 / (t + 1) as u128;
    }
    acc
}

/// Greedy k-binomial representation `[n_k, ..., n_1]` by linear scan,
/// with exhausted positions padded as `n_i = i - 1`.
pub fn rep(n: u128, k: u32) -> Vec<i64> {
    let mut rest = n;
    let mut out = Vec::with_capacity(k as usize);
    for i in (1..=k).rev() {
        if rest == 0 {
            out.push(i as i64 - 1);
            continue;
        }
        let mut m = i as i64;
        while binom(m + 1, i) <= rest {
            m += 1;
        }
        rest -= binom(m, i);
        out.push(m);
    }
    assert_eq!(rest, 0);
    out
}

pub fn macaulay(n: u128, k: u32) -> u128 {
    rep(n, k)
        .iter()
        .zip((1..=k).rev())
        .map(|(&c, i)| binom(c - 1, i - 1))
        .sum()
}

pub fn katona(n: u128, k: u32) -> u128 {
    rep(n, k)
        .iter()
        .zip((1..=k).rev())
        .filter(|&(&c, i)| binom(c, i) > 0)
        .map(|(&c, i)| binom(c, i - 1))
        .sum()
}

pub fn is_short(n: u128, k: u32) -> bool {
    rep(n, k)[k as usize - 1] == 0
}

/// `table[n] = ∂^k(n)` for `n <= upto`.
pub fn macaulay_table(k: u32, upto: u128) -> Vec<u128> {
    (0..=upto).map(|n| macaulay(n, k)).collect()
}

/// Every nonincreasing (multiset) or strictly decreasing (set) sequence of
/// length `k` with entries in `1..=bound`.
pub fn universe(set: bool, k: usize, bound: u32) -> Vec<Vec<u32>> {
    fn go(set: bool, left: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in 1..=cap {
            let next = if set { x.saturating_sub(1) } else { x };
            if set && next == 0 && left > 1 {
                continue;
            }
            cur.push(x);
            go(set, left - 1, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(set, k, bound, &mut Vec::new(), &mut out);
    out
}

/// The first `n` sequences of `M_k` (or `S_k`) in lex order, taken from a
/// sorted universe large enough to contain them.
pub fn lex_prefix(set: bool, k: usize, n: usize) -> Vec<Vec<u32>> {
    let mut bound = k as u32;
    loop {
        let mut all = universe(set, k, bound);
        // Everything whose leading entry is at most `bound` precedes all
        // sequences with a larger leading entry.
        if all.len() >= n {
            all.sort();
            all.truncate(n);
            return all;
        }
        bound *= 2;
    }
}

pub fn drops(x: &[u32]) -> Vec<Vec<u32>> {
    (0..x.len())
        .map(|i| {
            let mut y = x.to_vec();
            y.remove(i);
            y
        })
        .collect()
}

pub fn shadow_of<'a>(family: impl IntoIterator<Item = &'a Vec<u32>>) -> HashSet<Vec<u32>> {
    family.into_iter().flat_map(|x| drops(x)).collect()
}

/// Sizes `|∂ FX_k(n)|` for `n = 0..=n_max`, growing the shadow one member
/// at a time.
pub fn prefix_shadow_sizes(set: bool, k: usize, n_max: usize) -> Vec<usize> {
    let prefix = lex_prefix(set, k, n_max);
    let mut seen = HashSet::new();
    let mut sizes = vec![0];
    for x in &prefix {
        seen.extend(drops(x));
        sizes.push(seen.len());
    }
    sizes
}

/// All values `a <= limit` admitting an extended representation for order
/// `k`, with their ∂_e value, found by enumerating coefficient tuples
/// `a_k' > ... > a_1' >= 1` directly.
pub fn extended_values(k: u32, limit: u128) -> Vec<Option<u128>> {
    fn go(
        i: u32,
        max_coeff: i64,
        partial: u128,
        de: u128,
        limit: u128,
        out: &mut Vec<Option<u128>>,
    ) {
        if i == 0 {
            let value = partial + 1;
            if value <= limit {
                assert!(
                    out[value as usize].is_none(),
                    "two extended forms for {value}"
                );
                out[value as usize] = Some(de);
            }
            return;
        }
        for c in i as i64..max_coeff {
            let v = partial + binom(c, i);
            if v + 1 > limit {
                break;
            }
            go(i - 1, c, v, de + binom(c - 1, i - 1), limit, out);
        }
    }
    let mut out = vec![None; limit as usize + 1];
    go(k, i64::MAX, 0, 0, limit, &mut out);
    out
}

/// Equality pairs `(n, a)` with `1 <= a < ∂^{k+1}(n)` and `n <= n_max`,
/// plus the total count of admissible pairs.
pub fn equality_pairs(k: u32, n_max: u128) -> (Vec<(u128, u128)>, u64) {
    let low = macaulay_table(k, n_max);
    let high = macaulay_table(k + 1, n_max);
    let mut pairs = Vec::new();
    let mut checked = 0;
    for n in 0..=n_max {
        let rhs = high[n as usize];
        for a in 1..rhs.min(n + 1) {
            checked += 1;
            let lhs = low[a as usize] + high[(n - a) as usize];
            assert!(
                lhs >= rhs,
                "oracle found a counterexample at k={k} n={n} a={a}"
            );
            if lhs == rhs {
                pairs.push((n, a));
            }
        }
    }
    (pairs, checked)
}

/// Violations of `max(∂_k(a), n - a) + ∂_{k+1}(n - a) >= ∂_{k+1}(n)`.
pub fn ew_violations(k: u32, n_max: u128) -> BTreeSet<(u128, u128)> {
    let mut out = BTreeSet::new();
    for n in 0..=n_max {
        for a in 0..=n {
            let lhs = katona(a, k).max(n - a) + katona(n - a, k + 1);
            if lhs < katona(n, k + 1) {
                out.insert((n, a));
            }
        }
    }
    out
}

pub type Members = Vec<Vec<u32>>;

/// Splits a multiset family over `M_{k+1}`: `A_11` and `A_12` are the
/// members ending in 1 with that entry removed, separated by whether the new
/// last entry is 1; `A_2` keeps the members whose last entry is at least 2.
pub fn split(family: &[Vec<u32>]) -> (Members, Members, Members) {
    let (mut a11, mut a12, mut a2) = (Vec::new(), Vec::new(), Vec::new());
    for x in family {
        let (&last, head) = x.split_last().unwrap();
        if last >= 2 {
            a2.push(x.clone());
        } else if head.last() == Some(&1) {
            a11.push(head.to_vec());
        } else {
            a12.push(head.to_vec());
        }
    }
    (a11, a12, a2)
}
