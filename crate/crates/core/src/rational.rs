//! Exact rational values, serialized as `"p/q"` strings.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational with i128 parts; counts in this crate stay far below
/// the overflow range (|G| ≤ 2·10⁴ gives counts ≤ 8·10¹²).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Frac(pub Ratio<i128>);

impl Frac {
    pub fn new(num: i128, den: i128) -> Frac {
        Frac(Ratio::new(num, den))
    }

    pub fn from_int(v: i128) -> Frac {
        Frac(Ratio::from_integer(v))
    }

    pub fn zero() -> Frac {
        Frac(Ratio::zero())
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Frac {
        Frac(Ratio::new(self.numer().abs(), self.denom()))
    }
}

impl std::ops::Add for Frac {
    type Output = Frac;
    fn add(self, rhs: Frac) -> Frac {
        Frac(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Frac {
    type Output = Frac;
    fn sub(self, rhs: Frac) -> Frac {
        Frac(self.0 - rhs.0)
    }
}

impl std::ops::Mul for Frac {
    type Output = Frac;
    fn mul(self, rhs: Frac) -> Frac {
        Frac(self.0 * rhs.0)
    }
}

impl std::ops::Div for Frac {
    type Output = Frac;
    fn div(self, rhs: Frac) -> Frac {
        Frac(self.0 / rhs.0)
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Frac {
    type Err = String;

    fn from_str(s: &str) -> Result<Frac, String> {
        let (num, den) = s.split_once('/').ok_or_else(|| format!("missing '/' in rational {s:?}"))?;
        let num: i128 = num.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
        let den: i128 = den.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
        if den == 0 {
            return Err("zero denominator".into());
        }
        Ok(Frac::new(num, den))
    }
}

impl Serialize for Frac {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Frac {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Frac, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        let f = Frac::new(6, 9);
        assert_eq!(f.to_string(), "2/3");
        assert_eq!("2/3".parse::<Frac>().unwrap(), f);
        assert_eq!(Frac::from_int(4).to_string(), "4/1");
    }

    #[test]
    fn arithmetic() {
        let a = Frac::new(1, 2);
        let b = Frac::new(1, 3);
        assert_eq!((a + b).to_string(), "5/6");
        assert_eq!((a * b).to_string(), "1/6");
        assert_eq!((a - b).to_string(), "1/6");
        assert_eq!((a / b).to_string(), "3/2");
    }
}
