use std::collections::BTreeMap;

use num_bigint::BigUint;

use super::check::{params, CheckReport};
use super::sweep::{fold_range, SweepOptions, Tally};
use super::VerifyError;
use crate::binrep::{kruskal_katona, kruskal_macaulay};
use crate::families::{enumerate_prefix, shadow, split_family, Family, Kind, Seq};

/// The lower bound on `|∂A|` for `|A| = size` members of length `k`.
fn shadow_bound(kind: Kind, k: usize, size: u64) -> BigUint {
    match kind {
        Kind::Multiset => kruskal_macaulay(&size.into(), k),
        Kind::Set => kruskal_katona(&size.into(), k),
    }
}

fn theorem_id(kind: Kind) -> &'static str {
    match kind {
        Kind::Multiset => "theorem_m",
        Kind::Set => "theorem_k",
    }
}

/// Shadow of each prefix member as a bitset over the shadow of the prefix.
struct ShadowBits {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl ShadowBits {
    fn new(prefix: &Family) -> Result<Self, VerifyError> {
        let universe: BTreeMap<Seq, usize> = shadow(prefix)?
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let words = universe.len().div_ceil(64).max(1);
        let mut rows = Vec::with_capacity(prefix.len());
        for member in prefix {
            let single = Family::new(prefix.kind(), prefix.k(), [member.clone()])?;
            let mut row = vec![0u64; words];
            for s in &shadow(&single)? {
                let bit = universe[s];
                row[bit / 64] |= 1 << (bit % 64);
            }
            rows.push(row);
        }
        Ok(ShadowBits { words, rows })
    }

    fn shadow_size(&self, mask: u64, scratch: &mut [u64]) -> u64 {
        scratch.fill(0);
        for (i, row) in self.rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (s, r) in scratch.iter_mut().zip(row) {
                    *s |= r;
                }
            }
        }
        scratch.iter().map(|w| w.count_ones() as u64).sum()
    }
}

/// Visits every subset `A` of the first `m` members of `M_{k+1}` (or
/// `S_{k+1}`) and checks `|∂A| >= ∂^{k+1}(|A|)` (or `∂_{k+1}(|A|)`). Also
/// requires every lex prefix to meet its bound with equality.
pub fn check_shadow_theorem(
    kind: Kind,
    k_plus_1: usize,
    m: u32,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    opts.budget.subset_bits(m)?;
    let prefix = enumerate_prefix(kind, k_plus_1, &m.into(), opts.budget.enumeration_cap)?;
    let bounds: Vec<u64> = (0..=m as u64)
        .map(|s| {
            shadow_bound(kind, k_plus_1, s)
                .try_into()
                .expect("bound <= size * k")
        })
        .collect();
    let bits = ShadowBits::new(&prefix)?;
    let id = theorem_id(kind);
    let run_params = params([
        ("kind", kind.to_string()),
        ("k1", k_plus_1.to_string()),
        ("m", m.to_string()),
    ]);

    let mut tally = fold_range(
        opts,
        0..1u64 << m,
        || (Tally::default(), vec![0u64; bits.words]),
        |(tally, scratch), mask| {
            let size = bits.shadow_size(mask, scratch);
            let bound = bounds[mask.count_ones() as usize];
            tally.observe(size >= bound, size == bound, || {
                let sub = prefix.subfamily(mask);
                CheckReport::ge(
                    id,
                    params([("mask", mask.to_string()), ("size", sub.len().to_string())]),
                    size,
                    bound,
                )
                .with_members(sub.iter().cloned().collect())
            });
        },
        |(t1, s), (t2, _)| (t1.merge(t2), s),
    )?
    .0;

    // Lex prefixes must attain the bound; use the direct shadow here.
    let mut headline = None;
    for s in 0..=m {
        let sub = prefix.subfamily((1u64 << s) - 1);
        let report = CheckReport::eq(
            &format!("{id}_prefix_equality"),
            params([("size", s.to_string())]),
            shadow(&sub)?.len() as u64,
            bounds[s as usize],
        );
        if !report.holds && tally.failure.is_none() {
            tally.stats.failed += 1;
            tally.failure = Some(report.clone());
        }
        headline = Some(report);
    }
    let mut headline = headline.expect("at least the empty prefix");
    headline.check_id = id.to_string();
    Ok(CheckReport::summarize(
        id,
        run_params,
        tally.stats,
        tally.failure,
        headline,
    ))
}

/// `|∂ FM_k(n)| = ∂^k(n)` or `|∂ FS_k(n)| = ∂_k(n)`.
pub fn check_shadow_identity(
    kind: Kind,
    k: usize,
    n: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    let prefix = enumerate_prefix(kind, k, n, opts.budget.enumeration_cap)?;
    let rhs = match kind {
        Kind::Multiset => kruskal_macaulay(n, k),
        Kind::Set => kruskal_katona(n, k),
    };
    Ok(CheckReport::eq(
        "shadow_identity",
        params([
            ("kind", kind.to_string()),
            ("k", k.to_string()),
            ("n", n.to_string()),
        ]),
        shadow(&prefix)?.len() as u64,
        rhs,
    ))
}

/// [`check_shadow_identity`] for every `0 <= n <= n_max`.
pub fn sweep_shadow_identity(
    kind: Kind,
    k: usize,
    n_max: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    let top = opts.budget.range("n_max", n_max)?;
    let (tally, last) = fold_range(
        opts,
        0..top + 1,
        || (Ok(Tally::default()), None),
        |(tally, last), n| {
            if let Ok(t) = tally {
                match check_shadow_identity(kind, k, &n.into(), opts) {
                    Ok(r) => {
                        t.observe_report(r.clone());
                        *last = Some(r);
                    }
                    Err(e) => *tally = Err(e),
                }
            }
        },
        |(t1, l1), (t2, l2)| {
            let merged = match (t1, t2) {
                (Ok(a), Ok(b)) => Ok(a.merge(b)),
                (Err(e), _) | (_, Err(e)) => Err(e),
            };
            (merged, l2.or(l1))
        },
    )?;
    let tally = tally?;
    let headline = last.expect("range is nonempty");
    Ok(CheckReport::summarize(
        "shadow_identity",
        params([
            ("kind", kind.to_string()),
            ("k", k.to_string()),
            ("n_max", n_max.to_string()),
        ]),
        tally.stats,
        tally.failure,
        headline,
    ))
}

/// `|∂A| = |∂A_2 ∪ A_12| + |∂(A_11 ∪ A_12)|` for `A ⊆ M_{k+1}`.
pub fn check_decomposition_identity(family: &Family) -> Result<CheckReport, VerifyError> {
    let (a11, a12, a2) = split_family(family)?;
    let first = shadow(&a2)?.union(&a12)?.len() as u64;
    let second = shadow(&a11.union(&a12)?)?.len() as u64;
    let report = CheckReport::eq(
        "decomposition_identity",
        params([
            ("k1", family.k().to_string()),
            ("size", family.len().to_string()),
        ]),
        shadow(family)?.len() as u64,
        first + second,
    );
    Ok(report.with_members(family.iter().cloned().collect()))
}

/// [`check_decomposition_identity`] on every subset of `FM_{k+1}(m)`.
pub fn sweep_decomposition_identity(
    k_plus_1: usize,
    m: u32,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    opts.budget.subset_bits(m)?;
    let prefix = enumerate_prefix(
        Kind::Multiset,
        k_plus_1,
        &m.into(),
        opts.budget.enumeration_cap,
    )?;
    let tally = fold_range(
        opts,
        0..1u64 << m,
        Tally::default,
        |tally, mask| {
            let report = check_decomposition_identity(&prefix.subfamily(mask))
                .expect("prefix subfamilies are valid multiset families");
            tally.observe_report(report);
        },
        Tally::merge,
    )?;
    let headline = check_decomposition_identity(&prefix)?;
    Ok(CheckReport::summarize(
        "decomposition_identity",
        params([("k1", k_plus_1.to_string()), ("m", m.to_string())]),
        tally.stats,
        tally.failure,
        headline,
    ))
}

fn corollary_report(a: &Family, b: &Family) -> Result<CheckReport, VerifyError> {
    let k = a.k();
    let total = (a.len() + b.len()) as u64;
    let lhs = (shadow(a)?.len() + shadow(b)?.len()) as u64;
    let mut members: Vec<Seq> = a.iter().cloned().collect();
    members.extend(b.iter().cloned());
    Ok(CheckReport::ge(
        "corollary_sets",
        params([
            ("k", k.to_string()),
            ("size_a", a.len().to_string()),
            ("size_b", b.len().to_string()),
        ]),
        lhs,
        kruskal_macaulay(&total.into(), k + 1),
    )
    .with_members(members))
}

fn check_corollary_shapes(a: &Family, b: &Family) -> Result<(), VerifyError> {
    if a.kind() != Kind::Multiset || b.kind() != Kind::Multiset {
        return Err(VerifyError::InvalidInput(
            "both families must be multiset families".into(),
        ));
    }
    if a.k() == 0 || b.k() != a.k() + 1 {
        return Err(VerifyError::InvalidInput(format!(
            "need A ⊆ M_k and B ⊆ M_(k+1) with k >= 1, got lengths {} and {}",
            a.k(),
            b.k()
        )));
    }
    Ok(())
}

/// For `A ⊆ M_k`, `B ⊆ M_{k+1}` with `|A| < |∂ FM_{k+1}(|A| + |B|)|`:
/// `|∂A| + |∂B| >= ∂^{k+1}(|A| + |B|)`.
pub fn check_corollary_sets(
    a: &Family,
    b: &Family,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    check_corollary_shapes(a, b)?;
    let total = BigUint::from(a.len() + b.len());
    let prefix = enumerate_prefix(Kind::Multiset, b.k(), &total, opts.budget.enumeration_cap)?;
    let hypothesis = shadow(&prefix)?.len();
    if a.len() >= hypothesis {
        return Err(VerifyError::InvalidInput(format!(
            "hypothesis |A| < |∂FM_{}({total})| fails: {} >= {hypothesis}",
            b.k(),
            a.len()
        )));
    }
    corollary_report(a, b)
}

/// [`check_corollary_sets`] over every pair of subsets of `FM_k(m)` and
/// `FM_{k+1}(m)` that satisfies the hypothesis.
pub fn sweep_corollary_sets(
    k: usize,
    m: u32,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    opts.budget.subset_bits(2 * m)?;
    let cap = opts.budget.enumeration_cap;
    let pa = enumerate_prefix(Kind::Multiset, k, &m.into(), cap)?;
    let pb = enumerate_prefix(Kind::Multiset, k + 1, &m.into(), cap)?;
    let hypothesis: Vec<usize> = (0..=2 * m as u64)
        .map(|t| Ok(shadow(&enumerate_prefix(Kind::Multiset, k + 1, &t.into(), cap)?)?.len()))
        .collect::<Result<_, VerifyError>>()?;
    let low = (1u64 << m) - 1;
    let tally = fold_range(
        opts,
        0..1u64 << (2 * m),
        Tally::default,
        |tally, x| {
            let (a, b) = (pa.subfamily(x >> m), pb.subfamily(x & low));
            if a.len() < hypothesis[a.len() + b.len()] {
                tally.observe_report(corollary_report(&a, &b).expect("valid shapes"));
            }
        },
        Tally::merge,
    )?;
    let headline = corollary_report(&Family::empty(Kind::Multiset, k), &pb)?;
    Ok(CheckReport::summarize(
        "corollary_sets",
        params([("k", k.to_string()), ("m", m.to_string())]),
        tally.stats,
        tally.failure,
        headline,
    ))
}
