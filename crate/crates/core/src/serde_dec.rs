//! Serde adapters writing big integers as decimal strings.

use std::str::FromStr;

use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<T: ToString, S: Serializer>(xs: &[T], s: S) -> Result<S::Ok, S::Error> {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
}

pub fn deserialize<'de, T, D>(d: D) -> Result<Vec<T>, D::Error>
where
    T: FromStr,
    T::Err: std::fmt::Display,
    D: Deserializer<'de>,
{
    Vec::<String>::deserialize(d)?
        .iter()
        .map(|x| x.parse::<T>().map_err(D::Error::custom))
        .collect()
}
