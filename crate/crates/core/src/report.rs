//! Serialized report envelope shared by every CLI command.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::verify::{CheckReport, EqualityCatalog, EwCatalog};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Serde adapter that writes a value through `Display` and reads it back
/// through `FromStr`, so big integers cross the boundary as decimal text.
pub mod decimal {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDump {
    #[serde(with = "decimal")]
    pub n: num_bigint::BigUint,
    pub k: usize,
    /// `[n_k, ..., n_1]` as decimal strings.
    pub coefficients: Vec<String>,
    pub terms: String,
    #[serde(with = "decimal")]
    pub kruskal_macaulay: num_bigint::BigUint,
    #[serde(with = "decimal")]
    pub kruskal_katona: num_bigint::BigUint,
    pub parity: crate::Parity,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extended: Option<Vec<String>>,
    /// True when `--extended` was asked for but no extended form exists.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub extended_absent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranslatesDump {
    #[serde(with = "decimal")]
    pub n: num_bigint::BigUint,
    pub k: usize,
    pub coefficients: Vec<String>,
    #[serde(with = "decimal")]
    pub kruskal_macaulay: num_bigint::BigUint,
    #[serde(with = "decimal")]
    pub max_translates: num_bigint::BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShadowDump {
    pub kind: crate::Kind,
    pub k: usize,
    pub size: usize,
    pub shadow_size: usize,
    #[serde(with = "decimal")]
    pub bound: num_bigint::BigUint,
    pub equality: bool,
    pub shadow: Vec<crate::Seq>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDump {
    pub kind: crate::Kind,
    pub k: usize,
    pub members: Vec<crate::Seq>,
}

/// The `results` section of a document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Checks(Vec<CheckReport>),
    Catalog(EqualityCatalog),
    Violations(EwCatalog),
    Representation(RepDump),
    Translates(TranslatesDump),
    Shadow(ShadowDump),
    Family(FamilyDump),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub results: Payload,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn new(command: &str, params: BTreeMap<String, String>, results: Payload) -> Self {
        ReportDocument {
            version: TOOL_VERSION.to_string(),
            command: command.to_string(),
            params,
            timestamp: None,
            results,
            summary: Summary::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
