//! Exact k-binomial (Macaulay) representations, the Kruskal-Macaulay and
//! Kruskal-Katona functions, lexicographic prefix families with their
//! shadows, and exhaustive sweeps that check the classical shadow bounds
//! and the inequality `∂^k(a) + ∂^{k+1}(n - a) >= ∂^{k+1}(n)`.
//!
//! All represented values and binomial coefficients are [`BigUint`]s;
//! representation orders and coefficients are machine words.
//!
//! [`BigUint`]: num_bigint::BigUint

pub mod binrep;
pub mod cli;
pub mod families;
pub mod report;
pub mod verify;

pub use binrep::{
    binomial, classify, decompose, extended_decompose, kruskal_katona, kruskal_macaulay,
    max_translates, pascal_chain, BinRepError, ExtendedRep, KBinomialRep, Parity,
};
pub use families::{
    concat_one, enumerate_prefix, lex_compare, shadow, shift_down, split_family, Family,
    FamilyError, Kind, LexIter, Seq,
};
