use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::check::{params, CheckReport};
use super::sweep::{fold_range, map_range, SweepOptions, Tally};
use super::VerifyError;
use crate::binrep::{binomial_u, decompose, kruskal_macaulay, KBinomialRep};
use crate::report::decimal;

/// `∂^k(x)` for every `x < upto`, as machine words (`∂^k(x) <= x`).
pub(crate) fn macaulay_table(
    k: usize,
    upto: u64,
    opts: &SweepOptions,
) -> Result<Vec<u64>, VerifyError> {
    map_range(opts, 0..upto, |x| {
        kruskal_macaulay(&BigUint::from(x), k)
            .to_u64()
            .expect("∂^k(x) <= x")
    })
}

/// `∂^k(a) + ∂^{k+1}(n - a) >= ∂^{k+1}(n)` for `0 <= a < ∂^{k+1}(n)`, `a <= n`.
pub fn check_theorem1(k: usize, n: &BigUint, a: &BigUint) -> Result<CheckReport, VerifyError> {
    if k == 0 {
        return Err(VerifyError::InvalidInput("k must be at least 1".into()));
    }
    let rhs = kruskal_macaulay(n, k + 1);
    if a > n || *a >= rhs {
        return Err(VerifyError::InvalidInput(format!(
            "need 0 <= a <= n and a < ∂^{}(n) = {rhs}; got n = {n}, a = {a}",
            k + 1
        )));
    }
    let lhs = kruskal_macaulay(a, k) + kruskal_macaulay(&(n - a), k + 1);
    Ok(CheckReport::ge(
        "theorem1",
        params([
            ("k", k.to_string()),
            ("n", n.to_string()),
            ("a", a.to_string()),
        ]),
        lhs,
        rhs,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EqualityPair {
    #[serde(with = "decimal")]
    pub n: u64,
    #[serde(with = "decimal")]
    pub a: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogStats {
    pub checked: u64,
    pub strict: u64,
    pub equal: u64,
}

/// Pairs `(n, a)` with `1 <= a < ∂^{k+1}(n)`, `n <= n_max`, attaining
/// equality, ascending by `n` then `a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EqualityCatalog {
    pub k: usize,
    #[serde(with = "decimal")]
    pub n_max: BigUint,
    pub pairs: Vec<EqualityPair>,
    pub stats: CatalogStats,
}

impl EqualityCatalog {
    /// CSV with header `k,n,a`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["k", "n", "a"]).expect("in-memory write");
        for p in &self.pairs {
            w.serialize((self.k, p.n, p.a)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }
}

/// Checks the inequality for all `0 <= n <= n_max`, `1 <= a < ∂^{k+1}(n)`
/// and catalogs the equality pairs. Any failure aborts with the least
/// failing `(n, a)`; so does an equality pair whose `n` is `C(N, k+1)`.
pub fn sweep_theorem1(
    k: usize,
    n_max: &BigUint,
    opts: &SweepOptions,
) -> Result<EqualityCatalog, VerifyError> {
    if k == 0 {
        return Err(VerifyError::InvalidInput("k must be at least 1".into()));
    }
    let top = opts.budget.range("n_max", n_max)?;
    let lower = macaulay_table(k, top + 1, opts)?;
    let upper = macaulay_table(k + 1, top + 1, opts)?;

    let (tally, pairs) = fold_range(
        opts,
        0..top + 1,
        || (Tally::default(), Vec::new()),
        |(tally, pairs), n| {
            let rhs = upper[n as usize];
            for a in 1..rhs {
                let lhs = lower[a as usize] + upper[(n - a) as usize];
                tally.observe(lhs >= rhs, lhs == rhs, || {
                    check_theorem1(k, &n.into(), &a.into()).expect("precondition holds")
                });
                if lhs == rhs {
                    pairs.push(EqualityPair { n, a });
                }
            }
        },
        |(t1, mut p1), (t2, mut p2)| {
            p1.append(&mut p2);
            (t1.merge(t2), p1)
        },
    )?;
    if let Some(failure) = tally.failure {
        return Err(VerifyError::Failed(Box::new(failure)));
    }

    let binomial_ns: BTreeSet<u64> = ((k as u64 + 1)..)
        .map(|big_n| binomial_u(big_n, k + 1))
        .take_while(|c| *c <= BigUint::from(top))
        .map(|c| c.to_u64().expect("bounded by n_max"))
        .collect();
    if let Some(p) = pairs.iter().find(|p| binomial_ns.contains(&p.n)) {
        let base = check_theorem1(k, &p.n.into(), &p.a.into())?;
        let report = CheckReport::ge(
            "theorem1_equality_clause",
            base.params,
            base.lhs,
            base.rhs + 1u32,
        )
        .with_note("n = C(N, k+1) admits equality only at a = 0");
        return Err(VerifyError::Failed(Box::new(report)));
    }

    Ok(EqualityCatalog {
        k,
        n_max: n_max.clone(),
        pairs,
        stats: CatalogStats {
            checked: tally.stats.checked,
            strict: tally.stats.strict,
            equal: tally.stats.equal,
        },
    })
}

/// `(n, a)` for the sharpness configuration at order `k + 1`: the lowest
/// coefficients are `n_3 = 4, n_2 = 2, n_1 = 1`, higher ones the least
/// valid completion `n_i = i + 1`, and `a = ∂^{k+1}(n)`.
pub fn sharpness_instance(k: usize) -> Result<(BigUint, BigUint), VerifyError> {
    if k < 2 {
        return Err(VerifyError::InvalidInput(format!(
            "sharpness needs k >= 2, got {k}"
        )));
    }
    let mut coeffs: Vec<u64> = (4..=k as u64 + 1).rev().map(|i| i + 1).collect();
    coeffs.extend([4, 2, 1]);
    let rep = KBinomialRep::new(coeffs)?;
    let n = rep.value();
    debug_assert_eq!(decompose(&n, k + 1), rep);
    let a = rep.kruskal_macaulay();
    Ok((n, a))
}

/// Shows `a < ∂^{k+1}(n)` cannot be relaxed: at `a = ∂^{k+1}(n)` the sum
/// falls exactly one short.
pub fn sharpness_witness(k: usize) -> Result<CheckReport, VerifyError> {
    let (n, a) = sharpness_instance(k)?;
    let lhs = kruskal_macaulay(&a, k) + kruskal_macaulay(&(&n - &a), k + 1);
    let rhs = kruskal_macaulay(&n, k + 1) - 1u32;
    Ok(CheckReport::eq(
        "sharpness",
        params([
            ("k", k.to_string()),
            ("n", n.to_string()),
            ("a", a.to_string()),
        ]),
        lhs,
        rhs,
    ))
}
