use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::check::{params, CheckReport};
use super::sweep::{fold_range, map_range, SweepOptions, Tally};
use super::theorem::macaulay_table;
use super::VerifyError;
use crate::binrep::{
    classify, decompose, extended_decompose, kruskal_katona, kruskal_macaulay, Parity,
};
use crate::report::decimal;

/// Coefficients of swept values are bounded by the value itself (plus k).
fn word(c: &BigUint) -> u64 {
    c.to_u64()
        .expect("coefficient of a swept value fits a word")
}

fn need_order(k: usize) -> Result<(), VerifyError> {
    if k == 0 {
        return Err(VerifyError::InvalidInput("k must be at least 1".into()));
    }
    Ok(())
}

fn finish(
    id: &str,
    run_params: std::collections::BTreeMap<String, String>,
    tally: Tally,
    last: Option<CheckReport>,
) -> CheckReport {
    let headline = last.unwrap_or_else(|| CheckReport::eq(id, run_params.clone(), 0u32, 0u32));
    CheckReport::summarize(id, run_params, tally.stats, tally.failure, headline)
}

fn merge_last(
    (t1, l1): (Tally, Option<CheckReport>),
    (t2, l2): (Tally, Option<CheckReport>),
) -> (Tally, Option<CheckReport>) {
    (t1.merge(t2), l2.or(l1))
}

/// Step property: `∂^k(a+1) = ∂^k(a) + 1` when `a` is k-short, else
/// `∂^k(a+1) = ∂^k(a)`, for all `0 <= a <= a_max`.
pub fn check_lemma_short(
    k: usize,
    a_max: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    let top = opts.budget.range("a_max", a_max)?;
    let table = macaulay_table(k, top + 2, opts)?;
    let (tally, last) = fold_range(
        opts,
        0..top + 1,
        || (Tally::default(), None),
        |(tally, last), a| {
            let short = classify(&a.into(), k) == Parity::Short;
            let report = CheckReport::eq(
                "lemma_short",
                params([("k", k), ("a", a as usize)]),
                table[a as usize + 1],
                table[a as usize] + short as u64,
            );
            tally.observe_report(report.clone());
            *last = Some(report);
        },
        merge_last,
    )?;
    Ok(finish(
        "lemma_short",
        params([("k", k.to_string()), ("a_max", a_max.to_string())]),
        tally,
        last,
    ))
}

fn extended_instance(k: usize, a: u64) -> CheckReport {
    let id = "lemma_extended";
    let big_a = BigUint::from(a);
    let rep = decompose(&big_a, k);
    let (v, a_v) = rep.lowest_nonzero().expect("a >= 1");
    let criterion = *a_v > BigUint::from(v);
    // independent route: a = C(a_0', 0) + rest, so a - 1 must be k-long
    let below = decompose(&(&big_a - 1u32), k);
    let via_predecessor = below.parity() == Parity::Long;
    let ext = extended_decompose(&big_a, k).expect("a >= 1");
    let p = params([("k", k as u64), ("a", a)]);

    let mut problems = Vec::new();
    if ext.is_some() != criterion {
        problems.push(format!(
            "exists = {}, a_v >= v+1 is {criterion}",
            ext.is_some()
        ));
    }
    if criterion != via_predecessor {
        problems.push(format!(
            "a_v >= v+1 is {criterion}, a-1 k-long is {via_predecessor}"
        ));
    }
    let (lhs, rhs) = match &ext {
        Some(e) => {
            if e.value() != big_a {
                problems.push(format!("extended value {} != a", e.value()));
            }
            if e.coeffs()[..k] != *below.coeffs() {
                problems.push("top coefficients differ from the representation of a-1".into());
            }
            (e.kruskal_macaulay(), rep.kruskal_macaulay())
        }
        None => (BigUint::zero(), BigUint::zero()),
    };
    if problems.is_empty() {
        CheckReport::eq(id, p, lhs, rhs)
    } else {
        CheckReport::chain(id, p, lhs, rhs, false, problems.join("; "))
    }
}

/// For `1 <= a <= a_max`: the extended representation exists iff the
/// lowest nonzero coefficient has `a_v >= v + 1`, and then `∂_e^k = ∂^k`.
pub fn check_lemma_extended(
    k: usize,
    a_max: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    let top = opts.budget.range("a_max", a_max)?;
    let (tally, last) = fold_range(
        opts,
        1..top + 1,
        || (Tally::default(), None),
        |(tally, last), a| {
            let report = extended_instance(k, a);
            tally.observe_report(report.clone());
            *last = Some(report);
        },
        merge_last,
    )?;
    Ok(finish(
        "lemma_extended",
        params([("k", k.to_string()), ("a_max", a_max.to_string())]),
        tally,
        last,
    ))
}

/// One instance of `a_k < n_{k+1} <= b_{k+1} + 1` with `b = n - a`, given
/// the three top coefficients.
fn comparison_report(k: usize, n: u64, a: u64, a_top: u64, n_top: u64, b_top: u64) -> CheckReport {
    let first = a_top < n_top;
    let second = n_top <= b_top + 1;
    let note = format!("a_k = {a_top}, n_(k+1) = {n_top}, b_(k+1) = {b_top}");
    let (lhs, rhs) = if first {
        (b_top + 1, n_top)
    } else {
        (n_top, a_top + 1)
    };
    CheckReport::chain(
        "lemma_comparisons",
        params([("k", k as u64), ("n", n), ("a", a)]),
        lhs,
        rhs,
        first && second,
        note,
    )
}

/// For every `0 <= a < ∂^{k+1}(n)`: `a_k < n_{k+1} <= b_{k+1} + 1`.
pub fn check_lemma_comparisons(
    k: usize,
    n: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    let n_word = opts.budget.range("n", n)?;
    let n_top = word(decompose(n, k + 1).coeff(k + 1));
    let limit = kruskal_macaulay(n, k + 1).to_u64().expect("∂ <= n");
    let mut tally = Tally::default();
    let mut last = None;
    for a in 0..limit {
        opts.budget.check()?;
        let a_top = word(decompose(&a.into(), k).coeff(k));
        let b_top = word(decompose(&(n - a), k + 1).coeff(k + 1));
        let report = comparison_report(k, n_word, a, a_top, n_top, b_top);
        tally.observe_report(report.clone());
        last = Some(report);
    }
    Ok(finish(
        "lemma_comparisons",
        params([("k", k.to_string()), ("n", n.to_string())]),
        tally,
        last,
    ))
}

/// [`check_lemma_comparisons`] for every `0 <= n <= n_max`.
pub fn sweep_lemma_comparisons(
    k: usize,
    n_max: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    let top = opts.budget.range("n_max", n_max)?;
    let top_k = map_range(opts, 0..top + 1, |a| word(decompose(&a.into(), k).coeff(k)))?;
    let top_k1 = map_range(opts, 0..top + 1, |x| {
        word(decompose(&x.into(), k + 1).coeff(k + 1))
    })?;
    let upper = macaulay_table(k + 1, top + 1, opts)?;
    let (tally, last) = fold_range(
        opts,
        0..top + 1,
        || (Tally::default(), None),
        |(tally, last), n| {
            let n_top = top_k1[n as usize];
            for a in 0..upper[n as usize] {
                let report =
                    comparison_report(k, n, a, top_k[a as usize], n_top, top_k1[(n - a) as usize]);
                tally.observe_report(report.clone());
                *last = Some(report);
            }
        },
        merge_last,
    )?;
    Ok(finish(
        "lemma_comparisons",
        params([("k", k.to_string()), ("n_max", n_max.to_string())]),
        tally,
        last,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BvVariant {
    /// `∂^k(Σ_{i<=r} n_i) <= Σ_{i<=r} max{n_{i+1}, ∂^{k-i}(n_i)}`, `r < k`.
    First,
    /// `∂^k(1 + Σ_{i<=k} n_i) <= 1 + Σ_{i<k} max{n_{i+1}, ∂^{k-i}(n_i)}`.
    Second,
}

/// Björner–Vrećica inequalities. The report is oriented so that `lhs` is
/// the sum of maxima and `rhs` the `∂^k` value (holds iff `lhs >= rhs`).
/// In the first variant the missing `n_{r+1}` is taken as 0.
pub fn check_bjorner_vrecica(
    k: usize,
    parts: &[BigUint],
    variant: BvVariant,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    let (terms, extra) = match variant {
        BvVariant::First if (1..=k).contains(&parts.len()) => (parts.len(), 0u32),
        BvVariant::Second if parts.len() == k + 1 => (k, 1u32),
        _ => {
            return Err(VerifyError::InvalidInput(format!(
                "{variant:?} variant with k = {k} takes {} parts, got {}",
                match variant {
                    BvVariant::First => format!("1..={k}"),
                    BvVariant::Second => (k + 1).to_string(),
                },
                parts.len()
            )))
        }
    };
    let zero = BigUint::zero();
    let bound: BigUint = (0..terms)
        .map(|i| {
            let next = parts.get(i + 1).unwrap_or(&zero);
            next.max(&kruskal_macaulay(&parts[i], k - i)).clone()
        })
        .sum::<BigUint>()
        + extra;
    let total: BigUint = parts.iter().sum::<BigUint>() + extra;
    let parts_text: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    Ok(CheckReport::ge(
        "bjorner_vrecica",
        params([
            ("k", k.to_string()),
            ("variant", format!("{variant:?}").to_lowercase()),
            ("parts", parts_text.join(",")),
        ]),
        bound,
        kruskal_macaulay(&total, k),
    ))
}

/// Reproducible random part vectors: for the first variant the length
/// `r + 1` is drawn from `1..=k`, for the second it is `k + 1`.
pub fn random_bv_parts(
    k: usize,
    variant: BvVariant,
    samples: usize,
    max_part: u64,
    seed: u64,
) -> Vec<Vec<BigUint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let len = match variant {
                BvVariant::First => rng.gen_range(1..=k),
                BvVariant::Second => k + 1,
            };
            (0..len)
                .map(|_| BigUint::from(rng.gen_range(0..=max_part)))
                .collect()
        })
        .collect()
}

pub fn sweep_bjorner_vrecica(
    k: usize,
    variant: BvVariant,
    samples: usize,
    max_part: u64,
    seed: u64,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    let vectors = random_bv_parts(k, variant, samples, max_part, seed);
    let (tally, last) = fold_range(
        opts,
        0..vectors.len() as u64,
        || (Tally::default(), None),
        |(tally, last), i| {
            let report =
                check_bjorner_vrecica(k, &vectors[i as usize], variant).expect("arity matches");
            tally.observe_report(report.clone());
            *last = Some(report);
        },
        merge_last,
    )?;
    Ok(finish(
        "bjorner_vrecica",
        params([
            ("k", k.to_string()),
            ("variant", format!("{variant:?}").to_lowercase()),
            ("samples", samples.to_string()),
            ("max_part", max_part.to_string()),
            ("seed", seed.to_string()),
        ]),
        tally,
        last,
    ))
}

/// `max(∂_k(a), n - a) + ∂_{k+1}(n - a) >= ∂_{k+1}(n)`, evaluated and
/// reported; a violation is an outcome, not an error.
pub fn check_eckhoff_wegner(
    k: usize,
    n: &BigUint,
    a: &BigUint,
) -> Result<CheckReport, VerifyError> {
    need_order(k)?;
    if a > n {
        return Err(VerifyError::InvalidInput(format!(
            "need a <= n, got n = {n}, a = {a}"
        )));
    }
    let b = n - a;
    let lhs = kruskal_katona(a, k).max(b.clone()) + kruskal_katona(&b, k + 1);
    Ok(CheckReport::ge(
        "eckhoff_wegner",
        params([
            ("k", k.to_string()),
            ("n", n.to_string()),
            ("a", a.to_string()),
        ]),
        lhs,
        kruskal_katona(n, k + 1),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EwViolation {
    #[serde(with = "decimal")]
    pub n: u64,
    #[serde(with = "decimal")]
    pub a: u64,
    #[serde(with = "decimal")]
    pub lhs: u64,
    #[serde(with = "decimal")]
    pub rhs: u64,
}

/// Every `(n, a)` with `0 <= a <= n <= n_max` where the Eckhoff–Wegner
/// inequality fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EwCatalog {
    pub k: usize,
    #[serde(with = "decimal")]
    pub n_max: BigUint,
    pub checked: u64,
    pub violations: Vec<EwViolation>,
}

impl EwCatalog {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["k", "n", "a", "lhs", "rhs"])
            .expect("in-memory write");
        for v in &self.violations {
            w.serialize((self.k, v.n, v.a, v.lhs, v.rhs))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
    }
}

pub fn sweep_eckhoff_wegner(
    k: usize,
    n_max: &BigUint,
    opts: &SweepOptions,
) -> Result<EwCatalog, VerifyError> {
    need_order(k)?;
    let top = opts.budget.range("n_max", n_max)?;
    let katona = |order: usize| {
        map_range(opts, 0..top + 1, move |x| {
            kruskal_katona(&x.into(), order)
                .to_u64()
                .expect("word-sized for swept n")
        })
    };
    let (lower, upper) = (katona(k)?, katona(k + 1)?);
    let (checked, violations) = fold_range(
        opts,
        0..top + 1,
        || (0u64, Vec::new()),
        |(checked, out), n| {
            for a in 0..=n {
                let b = n - a;
                let lhs = lower[a as usize].max(b) + upper[b as usize];
                let rhs = upper[n as usize];
                *checked += 1;
                if lhs < rhs {
                    out.push(EwViolation { n, a, lhs, rhs });
                }
            }
        },
        |(c1, mut v1), (c2, mut v2)| {
            v1.append(&mut v2);
            (c1 + c2, v1)
        },
    )?;
    Ok(EwCatalog {
        k,
        n_max: n_max.clone(),
        checked,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn opts() -> SweepOptions {
        SweepOptions::default()
    }

    #[test]
    fn lemma_short_examples() {
        // a = 3 is 2-short: ∂^2(4) - ∂^2(3) = 3 - 2
        assert_eq!(kruskal_macaulay(&big(4), 2), big(3));
        assert_eq!(kruskal_macaulay(&big(3), 2), big(2));
        let r = check_lemma_short(2, &big(3), &opts()).unwrap();
        assert!(r.holds);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(3), big(3)));
        // a = 4 is 2-long
        let r = check_lemma_short(2, &big(4), &opts()).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(3), big(3)));
        for k in 1..=4 {
            let r = check_lemma_short(k, &big(0), &opts()).unwrap();
            assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(1), big(1)));
        }
    }

    #[test]
    fn lemma_extended_examples() {
        let r = extended_instance(2, 5);
        assert!(r.holds);
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(3), big(3)));
        assert!(extended_instance(2, 1).holds);
        assert!(extended_instance(3, 1).holds);
        assert!(extended_decompose(&big(1), 3).unwrap().is_none());
        let r = check_lemma_extended(3, &big(500), &opts()).unwrap();
        assert!(r.holds);
        assert_eq!(r.stats.unwrap().checked, 500);
    }

    #[test]
    fn lemma_comparisons_examples() {
        let r = check_lemma_comparisons(1, &big(5), &opts()).unwrap();
        assert!(r.holds);
        assert_eq!(r.stats.unwrap().checked, 3);
        // a = 2: a_1 = 2 < n_2 = 3 <= b_2 + 1 = 4
        let inst = comparison_report(1, 5, 2, 2, 3, 3);
        assert!(inst.holds);
        let inst = comparison_report(1, 5, 0, 0, 3, 3);
        assert!(inst.holds);
        assert!(check_lemma_comparisons(2, &big(10), &opts()).unwrap().holds);
        let r = check_lemma_comparisons(2, &big(0), &opts()).unwrap();
        assert!(r.holds && r.stats.unwrap().checked == 0);
        let broken = comparison_report(1, 5, 2, 3, 3, 3);
        assert!(!broken.holds);
        assert!(broken.witness.unwrap().note.unwrap().contains("a_k = 3"));
    }

    #[test]
    fn bjorner_vrecica_examples() {
        let r = check_bjorner_vrecica(2, &[big(3), big(2)], BvVariant::First).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(3), big(3)));
        assert!(r.holds);
        let r = check_bjorner_vrecica(2, &[big(1), big(1), big(1)], BvVariant::Second).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(3), big(3)));
        for k in 1..=4 {
            let r = check_bjorner_vrecica(k, &vec![big(0); k], BvVariant::First).unwrap();
            assert!(r.holds && r.lhs.is_zero() && r.rhs.is_zero());
        }
        assert!(matches!(
            check_bjorner_vrecica(2, &[big(1), big(1), big(1)], BvVariant::First),
            Err(VerifyError::InvalidInput(_))
        ));
        assert!(matches!(
            check_bjorner_vrecica(2, &[big(1)], BvVariant::Second),
            Err(VerifyError::InvalidInput(_))
        ));
    }

    #[test]
    fn random_parts_are_reproducible() {
        let a = random_bv_parts(3, BvVariant::First, 50, 1000, 7);
        assert_eq!(a, random_bv_parts(3, BvVariant::First, 50, 1000, 7));
        assert!(a.iter().all(|p| (1..=3).contains(&p.len())));
        assert!(random_bv_parts(3, BvVariant::Second, 10, 5, 1)
            .iter()
            .all(|p| p.len() == 4));
    }

    #[test]
    fn eckhoff_wegner_examples() {
        let r = check_eckhoff_wegner(1, &big(5), &big(2)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(6), big(4)));
        assert!(r.holds);
        for n in 0..30 {
            assert!(check_eckhoff_wegner(1, &big(n), &big(0)).unwrap().holds);
        }
        let r = check_eckhoff_wegner(1, &big(1), &big(1)).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (big(1), big(2)));
        assert!(!r.holds && r.witness.is_some());
        assert!(check_eckhoff_wegner(1, &big(1), &big(2)).is_err());

        let cat = sweep_eckhoff_wegner(1, &big(2), &opts()).unwrap();
        assert_eq!(cat.checked, 6);
        assert_eq!(
            cat.violations[0],
            EwViolation {
                n: 1,
                a: 1,
                lhs: 1,
                rhs: 2
            }
        );
        assert!(cat.to_csv().starts_with("k,n,a,lhs,rhs\n1,1,1,1,2\n"));
    }
}
