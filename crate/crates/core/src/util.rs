//! Small numeric and serialization helpers shared across modules.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Rounds to 12 significant decimal digits.
///
/// Every floating-point field that can end up in an emitted document is
/// rounded through here at construction time, so re-deriving a document from
/// its recipe reproduces the value bit for bit.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Natural log of an arbitrary-precision nonnegative integer
/// (`-inf` for zero). Accurate to f64 precision via the top 53 bits.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 53 {
        return (x.to_u64().expect("fits in u64") as f64).ln();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_u64().expect("top 53 bits fit in u64");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Serde codec storing a `BigUint` as a decimal string, so counts survive
/// JSON round-trips without precision loss.
pub mod big_str {
    use num_bigint::BigUint;
    use num_traits::Num;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let raw = String::deserialize(d)?;
        BigUint::from_str_radix(&raw, 10)
            .map_err(|e| de::Error::custom(format!("invalid decimal integer {raw:?}: {e}")))
    }
}

/// Serde codec for a vector of decimal-string `BigUint`s.
pub mod big_str_vec {
    use num_bigint::BigUint;
    use num_traits::Num;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(|x| x.to_str_radix(10)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|r| {
                BigUint::from_str_radix(r, 10)
                    .map_err(|e| de::Error::custom(format!("invalid decimal integer {r:?}: {e}")))
            })
            .collect()
    }
}
