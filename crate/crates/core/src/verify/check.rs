use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::families::Seq;
use crate::report::decimal;

/// How `lhs` and `rhs` of a report relate when the statement holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `lhs >= rhs`
    Ge,
    /// `lhs == rhs`
    Eq,
    /// A compound condition; `lhs`/`rhs` show one link of it (see witness note).
    Chain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Seq>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepStats {
    pub checked: u64,
    pub equal: u64,
    pub strict: u64,
    pub failed: u64,
}

/// Outcome of one verified statement, or of a whole sweep.
///
/// For a sweep, `lhs`/`rhs` belong to the least failing instance when there
/// is one, otherwise to a headline instance chosen by the sweep, and
/// `stats` carries the counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckReport {
    pub check_id: String,
    pub params: BTreeMap<String, String>,
    #[serde(with = "decimal")]
    pub lhs: BigUint,
    #[serde(with = "decimal")]
    pub rhs: BigUint,
    pub relation: Relation,
    pub holds: bool,
    pub equality: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<SweepStats>,
}

pub(crate) fn params<K: Display, V: Display>(
    pairs: impl IntoIterator<Item = (K, V)>,
) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

impl CheckReport {
    fn build(
        check_id: &str,
        params: BTreeMap<String, String>,
        lhs: BigUint,
        rhs: BigUint,
        relation: Relation,
        holds: bool,
    ) -> Self {
        let equality = holds && lhs == rhs;
        let witness = (!holds).then(|| Witness {
            params: params.clone(),
            members: None,
            note: None,
        });
        CheckReport {
            check_id: check_id.to_string(),
            params,
            lhs,
            rhs,
            relation,
            holds,
            equality,
            witness,
            stats: None,
        }
    }

    /// `lhs >= rhs`.
    pub fn ge(
        check_id: &str,
        params: BTreeMap<String, String>,
        lhs: impl Into<BigUint>,
        rhs: impl Into<BigUint>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let holds = lhs >= rhs;
        Self::build(check_id, params, lhs, rhs, Relation::Ge, holds)
    }

    /// `lhs == rhs`.
    pub fn eq(
        check_id: &str,
        params: BTreeMap<String, String>,
        lhs: impl Into<BigUint>,
        rhs: impl Into<BigUint>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let holds = lhs == rhs;
        Self::build(check_id, params, lhs, rhs, Relation::Eq, holds)
    }

    pub fn chain(
        check_id: &str,
        params: BTreeMap<String, String>,
        lhs: impl Into<BigUint>,
        rhs: impl Into<BigUint>,
        holds: bool,
        note: String,
    ) -> Self {
        let mut report = Self::build(
            check_id,
            params,
            lhs.into(),
            rhs.into(),
            Relation::Chain,
            holds,
        );
        report.equality = false;
        if let Some(w) = report.witness.as_mut() {
            w.note = Some(note);
        }
        report
    }

    pub(crate) fn with_members(mut self, members: Vec<Seq>) -> Self {
        if let Some(w) = self.witness.as_mut() {
            w.members = Some(members);
        }
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        if let Some(w) = self.witness.as_mut() {
            w.note = Some(note.into());
        }
        self
    }

    /// Wraps an instance (failing or headline) as the summary of a sweep.
    pub(crate) fn summarize(
        check_id: &str,
        params: BTreeMap<String, String>,
        stats: SweepStats,
        failure: Option<CheckReport>,
        headline: CheckReport,
    ) -> Self {
        let shown = failure.unwrap_or(headline);
        let holds = stats.failed == 0 && shown.holds;
        let witness = shown.witness.clone().or_else(|| {
            (!holds).then(|| Witness {
                params: shown.params.clone(),
                members: None,
                note: None,
            })
        });
        CheckReport {
            check_id: check_id.to_string(),
            params,
            lhs: shown.lhs,
            rhs: shown.rhs,
            relation: shown.relation,
            holds,
            equality: holds && shown.equality,
            witness,
            stats: Some(stats),
        }
    }
}
