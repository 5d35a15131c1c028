//! Decimal-string handling for arbitrary-precision integers.

use std::str::FromStr;

use num_bigint::BigUint;

use crate::{Error, Result};

/// Parses a non-empty string of ASCII digits. Signs, separators and
/// whitespace are rejected.
pub fn parse_biguint(s: &str) -> Result<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(s.to_string()));
    }
    BigUint::from_str(s).map_err(|_| Error::Parse(s.to_string()))
}

/// Serde adapter storing a `BigUint` as a JSON decimal string.
pub(crate) mod as_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_biguint(&s).map_err(serde::de::Error::custom)
    }
}
