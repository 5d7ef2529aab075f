//! JSON form of verification reports.
//!
//! ```text
//! {"id": "T5_QUAD", "variant": "printed", "n_from": 0, "n_to": 30,
//!  "checked": 31, "skipped": [],
//!  "failures": [{"n": 0, "lhs": ..., "rhs": ..., "delta": ...}]}
//! ```
//!
//! Scalars are decimal strings (`"-7"`, `"9360/49"`); octonions use the
//! `{"num": [...], "den": "..."}` shape; multi-part values are arrays.

use num_traits::One;
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::Serialize;

use super::{IdentityId, RangeReport, Value, Variant, VerificationReport};

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl Serialize for Variant {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Scalar(x) if x.denom().is_one() => {
                serializer.serialize_str(&x.numer().to_string())
            }
            Value::Scalar(x) => serializer.serialize_str(&format!("{}/{}", x.numer(), x.denom())),
            Value::Octonion(x) => x.serialize(serializer),
            Value::List(xs) => {
                let mut seq = serializer.serialize_seq(Some(xs.len()))?;
                for x in xs {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
        }
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(7))?;
        map.serialize_entry("id", &self.id)?;
        map.serialize_entry("variant", &self.variant)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("passed", &self.passed)?;
        map.serialize_entry("lhs", &self.lhs)?;
        map.serialize_entry("rhs", &self.rhs)?;
        map.serialize_entry("delta", &self.delta)?;
        map.end()
    }
}

struct Failure<'a>(&'a VerificationReport);

impl Serialize for Failure<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("n", &self.0.n)?;
        map.serialize_entry("lhs", &self.0.lhs)?;
        map.serialize_entry("rhs", &self.0.rhs)?;
        map.serialize_entry("delta", &self.0.delta)?;
        map.end()
    }
}

impl Serialize for RangeReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(7))?;
        map.serialize_entry("id", &self.id)?;
        map.serialize_entry("variant", &self.variant)?;
        map.serialize_entry("n_from", &self.n_from)?;
        map.serialize_entry("n_to", &self.n_to)?;
        map.serialize_entry("checked", &self.total_checked)?;
        map.serialize_entry("skipped", &self.skipped)?;
        let failures: Vec<Failure<'_>> = self.failures.iter().map(Failure).collect();
        map.serialize_entry("failures", &failures)?;
        map.end()
    }
}
