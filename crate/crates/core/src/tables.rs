//! Serde adapters: maps are written as sorted `[key, value]` lists so that
//! tuple keys survive JSON, and duplicate keys are rejected on input.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub mod entries {
    use super::*;

    pub fn serialize<S, K, V>(map: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
        K: Serialize,
        V: Serialize,
    {
        s.collect_seq(map.iter())
    }

    pub fn deserialize<'de, D, K, V>(d: D) -> Result<BTreeMap<K, V>, D::Error>
    where
        D: Deserializer<'de>,
        K: Deserialize<'de> + Ord + Debug,
        V: Deserialize<'de>,
    {
        let list: Vec<(K, V)> = Vec::deserialize(d)?;
        let mut out = BTreeMap::new();
        for (k, v) in list {
            if out.contains_key(&k) {
                return Err(D::Error::custom(format!("duplicate-id {k:?}")));
            }
            out.insert(k, v);
        }
        Ok(out)
    }
}

pub mod unique_set {
    use super::*;

    pub fn serialize<S, K>(set: &BTreeSet<K>, s: S) -> Result<S::Ok, S::Error>
    where
        S: Serializer,
        K: Serialize,
    {
        s.collect_seq(set.iter())
    }

    pub fn deserialize<'de, D, K>(d: D) -> Result<BTreeSet<K>, D::Error>
    where
        D: Deserializer<'de>,
        K: Deserialize<'de> + Ord + Debug,
    {
        let list: Vec<K> = Vec::deserialize(d)?;
        let mut out = BTreeSet::new();
        for k in list {
            if out.contains(&k) {
                return Err(D::Error::custom(format!("duplicate-id {k:?}")));
            }
            out.insert(k);
        }
        Ok(out)
    }
}

pub(crate) type Pair = (String, String);
pub(crate) type Triple = (String, String, String);

pub(crate) fn p(a: &str, b: &str) -> Pair {
    (a.to_string(), b.to_string())
}

pub(crate) fn t(a: &str, b: &str, c: &str) -> Triple {
    (a.to_string(), b.to_string(), c.to_string())
}
