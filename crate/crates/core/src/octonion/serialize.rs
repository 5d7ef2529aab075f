//! JSON shape: an octonion is an array of eight decimal strings indexed by
//! basis unit; a scaled octonion is `{"num": [...], "den": "7"}`.

use num_bigint::BigInt;
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::{Octonion, ScaledOctonion};

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(8))?;
        for c in self.coefficients() {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

struct OctonionVisitor;

impl<'de> Visitor<'de> for OctonionVisitor {
    type Value = Octonion;

    fn expecting(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("an array of 8 decimal strings")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Octonion, A::Error> {
        let mut c: [BigInt; 8] = Default::default();
        for (s, slot) in c.iter_mut().enumerate() {
            let text: String = seq
                .next_element()?
                .ok_or_else(|| de::Error::invalid_length(s, &self))?;
            *slot = text
                .parse()
                .map_err(|_| de::Error::custom(format!("not a decimal integer: {text:?}")))?;
        }
        if seq.next_element::<de::IgnoredAny>()?.is_some() {
            return Err(de::Error::invalid_length(9, &self));
        }
        Ok(Octonion::new(c))
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_seq(OctonionVisitor)
    }
}

impl Serialize for ScaledOctonion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ScaledOctonion", 2)?;
        st.serialize_field("num", self.numerator())?;
        st.serialize_field("den", &self.denominator().to_string())?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScaled {
    num: Octonion,
    den: String,
}

impl<'de> Deserialize<'de> for ScaledOctonion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawScaled::deserialize(deserializer)?;
        let den: BigInt = raw
            .den
            .parse()
            .map_err(|_| de::Error::custom(format!("not a decimal integer: {:?}", raw.den)))?;
        if den <= BigInt::from(0) {
            return Err(de::Error::custom("denominator must be positive"));
        }
        Ok(ScaledOctonion::new(raw.num, den).expect("nonzero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_is_array_of_strings() {
        let o = Octonion::from([0, 1, 1, 2, 5, 9, 18, 37]);
        let s = serde_json::to_string(&o).unwrap();
        assert_eq!(s, r#"["0","1","1","2","5","9","18","37"]"#);
        assert_eq!(serde_json::from_str::<Octonion>(&s).unwrap(), o);
    }

    #[test]
    fn scaled_object() {
        let x =
            ScaledOctonion::new(Octonion::from([1, 0, 0, 0, 0, 0, 0, 3]), BigInt::from(7)).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"num":["1","0","0","0","0","0","0","3"],"den":"7"}"#);
        assert_eq!(serde_json::from_str::<ScaledOctonion>(&s).unwrap(), x);
    }

    #[test]
    fn rejects_malformed() {
        assert!(serde_json::from_str::<Octonion>(r#"["1","2"]"#).is_err());
        assert!(
            serde_json::from_str::<Octonion>(r#"["1","2","3","4","5","6","7","8","9"]"#).is_err()
        );
        assert!(serde_json::from_str::<Octonion>(r#"[1,2,3,4,5,6,7,8]"#).is_err());
        assert!(serde_json::from_str::<Octonion>(r#"["x","2","3","4","5","6","7","8"]"#).is_err());
        assert!(serde_json::from_str::<ScaledOctonion>(
            r#"{"num":["1","0","0","0","0","0","0","0"],"den":"0"}"#
        )
        .is_err());
    }

    #[test]
    fn big_values_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let o = Octonion::new(std::array::from_fn(|s| &big * (s as i64 - 3)));
        let back: Octonion = serde_json::from_str(&serde_json::to_string(&o).unwrap()).unwrap();
        assert_eq!(back, o);
    }
}
