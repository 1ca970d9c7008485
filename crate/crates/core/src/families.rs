//! Families of multisets (`M_k`: `x_1 >= ... >= x_k >= 1`) and sets
//! (`S_k`: `x_1 > ... > x_k >= 1`) written as sequences, their lexicographic
//! prefixes, and the shadow operator.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default cap on the number of members `enumerate_prefix` will generate.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("{seq} is not a member of {kind} family of length {k}")]
    InvalidMember { kind: Kind, k: usize, seq: Seq },
    #[error("families differ in kind or length")]
    Incompatible,
    #[error("operation needs members of length at least {0}")]
    TooShort(usize),
    #[error("operation is defined for multiset families only")]
    NotMultiset,
    #[error("cannot shift down: {0} has an entry equal to 1")]
    EntryIsOne(Seq),
    #[error("requested {requested} members, enumeration cap is {cap}")]
    BudgetExceeded { requested: String, cap: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Multiset,
    Set,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Multiset => f.write_str("multiset"),
            Kind::Set => f.write_str("set"),
        }
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "multiset" => Ok(Kind::Multiset),
            "set" => Ok(Kind::Set),
            other => Err(format!("unknown kind `{other}` (expected multiset or set)")),
        }
    }
}

/// A finite sequence of positive integers. Derived ordering is
/// lexicographic, which agrees with [`lex_compare`] on equal lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seq(Vec<u32>);

impl Seq {
    pub fn new(entries: Vec<u32>) -> Self {
        Seq(entries)
    }

    pub fn empty() -> Self {
        Seq(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn is_valid(&self, kind: Kind) -> bool {
        if self.0.contains(&0) {
            return false;
        }
        match kind {
            Kind::Multiset => self.0.windows(2).all(|w| w[0] >= w[1]),
            Kind::Set => self.0.windows(2).all(|w| w[0] > w[1]),
        }
    }

    /// All subsequences obtained by deleting one entry.
    fn drops(&self) -> impl Iterator<Item = Seq> + '_ {
        (0..self.0.len()).map(move |skip| {
            let mut v = Vec::with_capacity(self.0.len() - 1);
            v.extend_from_slice(&self.0[..skip]);
            v.extend_from_slice(&self.0[skip + 1..]);
            Seq(v)
        })
    }
}

impl From<Vec<u32>> for Seq {
    fn from(v: Vec<u32>) -> Self {
        Seq(v)
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// `x ≺ y` when they first differ at an index where `x` is smaller.
pub fn lex_compare(x: &Seq, y: &Seq) -> Result<Ordering, FamilyError> {
    if x.len() != y.len() {
        return Err(FamilyError::LengthMismatch(x.len(), y.len()));
    }
    for (a, b) in x.0.iter().zip(&y.0) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            ord => return Ok(ord),
        }
    }
    Ok(Ordering::Equal)
}

/// Appends an entry 1 (the `x * 1` operation).
pub fn concat_one(x: &Seq) -> Seq {
    let mut v = x.0.clone();
    v.push(1);
    Seq(v)
}

/// A duplicate-free family of same-length sequences, kept in lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    kind: Kind,
    k: usize,
    members: BTreeSet<Seq>,
}

impl Family {
    pub fn empty(kind: Kind, k: usize) -> Self {
        Family {
            kind,
            k,
            members: BTreeSet::new(),
        }
    }

    /// Builds a family, collapsing duplicates and rejecting invalid members.
    pub fn new<I>(kind: Kind, k: usize, members: I) -> Result<Self, FamilyError>
    where
        I: IntoIterator<Item = Seq>,
    {
        let mut out = Family::empty(kind, k);
        for seq in members {
            out.check_member(&seq)?;
            out.members.insert(seq);
        }
        Ok(out)
    }

    fn check_member(&self, seq: &Seq) -> Result<(), FamilyError> {
        if seq.len() != self.k || !seq.is_valid(self.kind) {
            return Err(FamilyError::InvalidMember {
                kind: self.kind,
                k: self.k,
                seq: seq.clone(),
            });
        }
        Ok(())
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Length of every member sequence.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, seq: &Seq) -> bool {
        self.members.contains(seq)
    }

    /// Members in lex order.
    pub fn iter(&self) -> impl Iterator<Item = &Seq> + '_ {
        self.members.iter()
    }

    pub fn union(&self, other: &Family) -> Result<Family, FamilyError> {
        if self.kind != other.kind || self.k != other.k {
            return Err(FamilyError::Incompatible);
        }
        let members = self.members.union(&other.members).cloned().collect();
        Ok(Family {
            kind: self.kind,
            k: self.k,
            members,
        })
    }

    /// Sub-family selected by a bitmask over the lex-ordered members.
    pub fn subfamily(&self, mask: u64) -> Family {
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|(i, _)| *i < 64 && mask >> i & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        Family {
            kind: self.kind,
            k: self.k,
            members,
        }
    }

    /// Text form: a `kind=<kind> k=<k>` header, then one member per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("kind={} k={}\n", self.kind, self.k);
        for seq in &self.members {
            let line: Vec<String> = seq.0.iter().map(u32::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// Parses the text form. Blank lines are skipped; duplicate members are
    /// rejected so that `|A|` is what the file lists.
    pub fn parse(text: &str) -> Result<Family, FamilyError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        let (kind, k) = loop {
            match lines.next() {
                None => {
                    return Err(FamilyError::Parse {
                        line: 1,
                        msg: "missing header".into(),
                    })
                }
                Some((_, "")) => continue,
                Some((no, header)) => break parse_header(no, header)?,
            }
        };
        let mut family = Family::empty(kind, k);
        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let entries = line
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    match tok.parse::<u32>() {
                        Ok(x) if x >= 1 => Ok(x),
                        _ => Err(FamilyError::Parse {
                            line: no,
                            msg: format!("`{tok}` is not a positive integer"),
                        }),
                    }
                })
                .collect::<Result<Vec<u32>, _>>()?;
            let seq = Seq(entries);
            family.check_member(&seq).map_err(|e| FamilyError::Parse {
                line: no,
                msg: e.to_string(),
            })?;
            if !family.members.insert(seq.clone()) {
                return Err(FamilyError::Parse {
                    line: no,
                    msg: format!("duplicate member {seq}"),
                });
            }
        }
        Ok(family)
    }
}

fn parse_header(no: usize, header: &str) -> Result<(Kind, usize), FamilyError> {
    let bad = |msg: String| FamilyError::Parse { line: no, msg };
    let mut kind = None;
    let mut k = None;
    for field in header.split_whitespace() {
        match field.split_once('=') {
            Some(("kind", v)) => kind = Some(v.parse::<Kind>().map_err(bad)?),
            Some(("k", v)) => {
                k = Some(
                    v.parse::<usize>()
                        .map_err(|_| bad(format!("bad k `{v}`")))?,
                )
            }
            _ => return Err(bad(format!("unexpected header field `{field}`"))),
        }
    }
    match (kind, k) {
        (Some(kind), Some(k)) if k >= 1 => Ok((kind, k)),
        (Some(_), Some(_)) => Err(bad("k must be at least 1".into())),
        _ => Err(bad("header must be `kind=<multiset|set> k=<int>`".into())),
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Seq;
    type IntoIter = std::collections::btree_set::Iter<'a, Seq>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Walks `M_k` or `S_k` in lex order with an odometer successor: bump the
/// rightmost entry that can grow, then reset the suffix to its least
/// completion.
#[derive(Debug, Clone)]
pub struct LexIter {
    kind: Kind,
    next: Option<Vec<u32>>,
}

impl LexIter {
    pub fn new(kind: Kind, k: usize) -> Self {
        let first = match kind {
            Kind::Multiset => vec![1; k],
            Kind::Set => (1..=k as u32).rev().collect(),
        };
        LexIter {
            kind,
            next: Some(first),
        }
    }

    fn successor(kind: Kind, x: &[u32]) -> Option<Vec<u32>> {
        let k = x.len();
        let pos = (0..k).rev().find(|&i| {
            i == 0
                || match kind {
                    Kind::Multiset => x[i] < x[i - 1],
                    Kind::Set => x[i] + 1 < x[i - 1],
                }
        })?;
        let mut y = x.to_vec();
        y[pos] += 1;
        for (j, slot) in y.iter_mut().enumerate().skip(pos + 1) {
            *slot = match kind {
                Kind::Multiset => 1,
                Kind::Set => (k - j) as u32,
            };
        }
        Some(y)
    }
}

impl Iterator for LexIter {
    type Item = Seq;

    fn next(&mut self) -> Option<Seq> {
        let cur = self.next.take()?;
        self.next = Self::successor(self.kind, &cur);
        Some(Seq(cur))
    }
}

/// `FM_k(n)` or `FS_k(n)`: the first `n` members of `M_k` / `S_k` in lex order.
pub fn enumerate_prefix(
    kind: Kind,
    k: usize,
    n: &BigUint,
    cap: usize,
) -> Result<Family, FamilyError> {
    if k == 0 {
        return Err(FamilyError::TooShort(1));
    }
    let count = n
        .to_usize()
        .filter(|&c| c <= cap)
        .ok_or_else(|| FamilyError::BudgetExceeded {
            requested: n.to_string(),
            cap,
        })?;
    Ok(Family {
        kind,
        k,
        members: LexIter::new(kind, k).take(count).collect(),
    })
}

/// All length-`(k-1)` subsequences of members. For `k = 1` a nonempty
/// family has the single-element shadow `{()}`.
pub fn shadow(family: &Family) -> Result<Family, FamilyError> {
    if family.k == 0 {
        return Err(FamilyError::TooShort(1));
    }
    let members = family.members.iter().flat_map(Seq::drops).collect();
    Ok(Family {
        kind: family.kind,
        k: family.k - 1,
        members,
    })
}

/// Splits `A ⊆ M_{k+1}` into `(A_11, A_12, A_2)`:
/// `A_11 = {x ∈ M_k : x_k = 1, x*1 ∈ A}`, `A_12 = {x ∈ M_k : x_k >= 2, x*1 ∈ A}`,
/// `A_2 = {x ∈ A : x_{k+1} >= 2}`.
pub fn split_family(family: &Family) -> Result<(Family, Family, Family), FamilyError> {
    if family.kind != Kind::Multiset {
        return Err(FamilyError::NotMultiset);
    }
    if family.k < 2 {
        return Err(FamilyError::TooShort(2));
    }
    let k = family.k - 1;
    let mut a11 = Family::empty(Kind::Multiset, k);
    let mut a12 = Family::empty(Kind::Multiset, k);
    let mut a2 = Family::empty(Kind::Multiset, k + 1);
    for y in &family.members {
        if y.last() == Some(1) {
            let x = Seq(y.0[..k].to_vec());
            if x.last() == Some(1) {
                a11.members.insert(x);
            } else {
                a12.members.insert(x);
            }
        } else {
            a2.members.insert(y.clone());
        }
    }
    Ok((a11, a12, a2))
}

/// Subtracts 1 from every entry of every member.
pub fn shift_down(family: &Family) -> Result<Family, FamilyError> {
    let mut members = BTreeSet::new();
    for seq in &family.members {
        if seq.0.contains(&1) {
            return Err(FamilyError::EntryIsOne(seq.clone()));
        }
        members.insert(Seq(seq.0.iter().map(|x| x - 1).collect()));
    }
    Ok(Family {
        kind: family.kind,
        k: family.k,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: &[u32]) -> Seq {
        Seq(v.to_vec())
    }

    fn fam(kind: Kind, k: usize, v: &[&[u32]]) -> Family {
        Family::new(kind, k, v.iter().map(|x| s(x))).unwrap()
    }

    fn members(f: &Family) -> Vec<Vec<u32>> {
        f.iter().map(|x| x.entries().to_vec()).collect()
    }

    fn prefix(kind: Kind, k: usize, n: usize) -> Family {
        enumerate_prefix(kind, k, &BigUint::from(n), DEFAULT_ENUMERATION_CAP).unwrap()
    }

    /// Brute force: filter all tuples with entries <= bound, sort, take n.
    fn brute_prefix(kind: Kind, k: usize, n: usize, bound: u32) -> Vec<Vec<u32>> {
        let mut all: Vec<Vec<u32>> = vec![vec![]];
        for _ in 0..k {
            all = all
                .into_iter()
                .flat_map(|v| {
                    (1..=bound).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        let mut valid: Vec<Vec<u32>> = all
            .into_iter()
            .filter(|v| Seq(v.clone()).is_valid(kind))
            .collect();
        valid.sort();
        valid.truncate(n);
        valid
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(lex_compare(&s(&[2, 1]), &s(&[2, 2])), Ok(Ordering::Less));
        assert_eq!(lex_compare(&s(&[3, 1]), &s(&[3, 1])), Ok(Ordering::Equal));
        assert_eq!(lex_compare(&s(&[3, 2]), &s(&[2, 2])), Ok(Ordering::Greater));
        assert_eq!(
            lex_compare(&s(&[3]), &s(&[2, 2])),
            Err(FamilyError::LengthMismatch(1, 2))
        );
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            members(&prefix(Kind::Multiset, 2, 5)),
            vec![vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1], vec![3, 2]]
        );
        assert_eq!(
            members(&prefix(Kind::Set, 2, 3)),
            vec![vec![2, 1], vec![3, 1], vec![3, 2]]
        );
        assert!(prefix(Kind::Multiset, 3, 0).is_empty());
        assert!(matches!(
            enumerate_prefix(Kind::Set, 2, &BigUint::from(11u32), 10),
            Err(FamilyError::BudgetExceeded { .. })
        ));
        assert_eq!(
            enumerate_prefix(Kind::Set, 0, &BigUint::from(1u32), 10),
            Err(FamilyError::TooShort(1))
        );
    }

    #[test]
    fn enumerate_matches_sorted_brute_force() {
        for kind in [Kind::Multiset, Kind::Set] {
            for k in 1..=4 {
                // the first 60 members have entries <= 12 once k >= 2
                let bound = if k == 1 { 60 } else { 12 };
                let want = brute_prefix(kind, k, 60, bound);
                assert_eq!(members(&prefix(kind, k, 60)), want, "{kind} k={k}");
            }
        }
    }

    #[test]
    fn lex_iter_order_is_strict() {
        for kind in [Kind::Multiset, Kind::Set] {
            let v: Vec<Seq> = LexIter::new(kind, 3).take(500).collect();
            for w in v.windows(2) {
                assert_eq!(lex_compare(&w[0], &w[1]), Ok(Ordering::Less));
                assert!(w[1].is_valid(kind));
            }
        }
    }

    #[test]
    fn shadow_examples() {
        let empty = Family::empty(Kind::Multiset, 2);
        assert!(shadow(&empty).unwrap().is_empty());
        let sh = shadow(&fam(Kind::Multiset, 2, &[&[2, 2], &[3, 1]])).unwrap();
        assert_eq!(members(&sh), vec![vec![1], vec![2], vec![3]]);
        let sh = shadow(&fam(Kind::Multiset, 3, &[&[1, 1, 1]])).unwrap();
        assert_eq!(members(&sh), vec![vec![1, 1]]);
        let sh = shadow(&fam(Kind::Set, 1, &[&[4], &[2]])).unwrap();
        assert_eq!(sh.len(), 1);
        assert!(sh.contains(&Seq::empty()));
        assert_eq!(
            shadow(&Family::empty(Kind::Set, 0)),
            Err(FamilyError::TooShort(1))
        );
    }

    #[test]
    fn concat_one_examples() {
        assert_eq!(concat_one(&s(&[3, 2])), s(&[3, 2, 1]));
        assert_eq!(concat_one(&Seq::empty()), s(&[1]));
        assert_eq!(concat_one(&s(&[1, 1])), s(&[1, 1, 1]));
    }

    #[test]
    fn split_examples() {
        let (a11, a12, a2) =
            split_family(&fam(Kind::Multiset, 2, &[&[1, 1], &[2, 1], &[2, 2]])).unwrap();
        assert_eq!(members(&a11), vec![vec![1]]);
        assert_eq!(members(&a12), vec![vec![2]]);
        assert_eq!(members(&a2), vec![vec![2, 2]]);

        let (a11, a12, a2) = split_family(&Family::empty(Kind::Multiset, 3)).unwrap();
        assert!(a11.is_empty() && a12.is_empty() && a2.is_empty());

        let (a11, a12, a2) = split_family(&fam(Kind::Multiset, 2, &[&[3, 2]])).unwrap();
        assert!(a11.is_empty() && a12.is_empty());
        assert_eq!(members(&a2), vec![vec![3, 2]]);

        assert_eq!(
            split_family(&fam(Kind::Set, 2, &[&[2, 1]])),
            Err(FamilyError::NotMultiset)
        );
        assert_eq!(
            split_family(&fam(Kind::Multiset, 1, &[&[2]])),
            Err(FamilyError::TooShort(2))
        );
    }

    #[test]
    fn shift_down_examples() {
        assert_eq!(
            members(&shift_down(&fam(Kind::Multiset, 2, &[&[3, 2]])).unwrap()),
            vec![vec![2, 1]]
        );
        assert!(shift_down(&Family::empty(Kind::Set, 2)).unwrap().is_empty());
        let a = fam(Kind::Multiset, 2, &[&[2, 2], &[4, 3]]);
        let b = shift_down(&a).unwrap();
        assert_eq!(members(&b), vec![vec![1, 1], vec![3, 2]]);
        assert_eq!(shadow(&a).unwrap().len(), shadow(&b).unwrap().len());
        assert!(matches!(
            shift_down(&fam(Kind::Multiset, 2, &[&[2, 1]])),
            Err(FamilyError::EntryIsOne(_))
        ));
    }

    #[test]
    fn family_rejects_invalid_members() {
        assert!(Family::new(Kind::Set, 2, [s(&[2, 2])]).is_err());
        assert!(Family::new(Kind::Multiset, 2, [s(&[1, 2])]).is_err());
        assert!(Family::new(Kind::Multiset, 2, [s(&[2])]).is_err());
        assert!(Family::new(Kind::Multiset, 1, [s(&[0])]).is_err());
        let a = fam(Kind::Multiset, 2, &[&[2, 2], &[2, 2]]);
        assert_eq!(a.len(), 1);
    }

    #[test]
    fn parse_round_trip_and_diagnostics() {
        let text = "kind=multiset k=2\n2,2\n3, 1\n\n";
        let f = Family::parse(text).unwrap();
        assert_eq!(members(&f), vec![vec![2, 2], vec![3, 1]]);
        assert_eq!(Family::parse(&f.to_text()).unwrap(), f);

        let empty = Family::parse("kind=set k=3\n").unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.kind(), Kind::Set);

        let err = |t: &str| match Family::parse(t) {
            Err(FamilyError::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err(""), 1);
        assert_eq!(err("kind=bag k=2\n"), 1);
        assert_eq!(err("kind=set k=0\n"), 1);
        assert_eq!(err("kind=set k=2\n2,1\n1,2\n"), 3);
        assert_eq!(err("kind=set k=2\n2,1\nx,1\n"), 3);
        assert_eq!(err("kind=multiset k=2\n2,1\n\n2,1\n"), 4);
        assert_eq!(err("kind=multiset k=2\n2,1,1\n"), 2);
        assert_eq!(err("kind=multiset k=2\n0,0\n"), 2);
    }

    fn arb_subfamily(kind: Kind, k: usize, m: usize) -> impl Strategy<Value = Family> {
        let base = prefix(kind, k, m);
        any::<u64>().prop_map(move |mask| base.subfamily(mask & ((1 << m) - 1)))
    }

    proptest! {
        #[test]
        fn shadow_distributes_over_union(
            a in arb_subfamily(Kind::Multiset, 3, 20),
            b in arb_subfamily(Kind::Multiset, 3, 20),
        ) {
            let lhs = shadow(&a.union(&b).unwrap()).unwrap();
            let rhs = shadow(&a).unwrap().union(&shadow(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn split_reassembles(a in arb_subfamily(Kind::Multiset, 3, 30)) {
            let (a11, a12, a2) = split_family(&a).unwrap();
            prop_assert!(a11.iter().all(|x| x.last() == Some(1)));
            prop_assert!(a12.iter().all(|x| x.last() >= Some(2)));
            prop_assert!(a2.iter().all(|x| x.last() >= Some(2)));
            let rebuilt = Family::new(
                Kind::Multiset,
                3,
                a11.iter().chain(a12.iter()).map(concat_one).chain(a2.iter().cloned()),
            ).unwrap();
            prop_assert_eq!(a11.len() + a12.len() + a2.len(), a.len());
            prop_assert_eq!(rebuilt, a);
        }

        #[test]
        fn shift_down_keeps_sizes(a in arb_subfamily(Kind::Set, 2, 25)) {
            let lifted = Family::new(
                Kind::Set,
                2,
                a.iter().map(|x| Seq::new(x.entries().iter().map(|e| e + 1).collect())),
            ).unwrap();
            let back = shift_down(&lifted).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(shadow(&lifted).unwrap().len(), shadow(&a).unwrap().len());
        }

        #[test]
        fn prefixes_nest(n in 0usize..200, k in 1usize..5) {
            for kind in [Kind::Multiset, Kind::Set] {
                let small = prefix(kind, k, n);
                let big = prefix(kind, k, n + 1);
                prop_assert_eq!(small.len(), n);
                prop_assert!(small.iter().all(|x| big.contains(x)));
            }
        }
    }
}
