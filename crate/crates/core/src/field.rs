use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Coefficient field for homology and ring-theoretic verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    /// `GF(p)`, `p` prime and below `2^31`.
    Prime(u32),
}

impl FieldSpec {
    pub const Q: FieldSpec = FieldSpec::Rationals;
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);
    pub const GF5: FieldSpec = FieldSpec::Prime(5);

    pub fn prime(p: u32) -> Result<Self, Error> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Short tag used on the command line: `q`, `f2`, `f3`, ...
    pub fn tag(self) -> String {
        match self {
            FieldSpec::Rationals => "q".into(),
            FieldSpec::Prime(p) => format!("f{p}"),
        }
    }

    /// The fields tried by default.
    pub fn defaults() -> Vec<FieldSpec> {
        vec![FieldSpec::Q, FieldSpec::GF2, FieldSpec::GF3, FieldSpec::GF5]
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `q`, `Q`, `rationals`, `f<p>`, `gf<p>`, `GF(<p>)`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_lowercase();
        if matches!(t.as_str(), "q" | "qq" | "rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("gf"))
            .or_else(|| t.strip_prefix('f'))
            .ok_or_else(|| Error::InvalidInput(format!("unknown field {s:?}")))?;
        let p: u32 = digits.parse().map_err(|_| Error::InvalidInput(format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

/// Parses a comma-separated field list such as `q,f2,f3`.
pub fn parse_field_list(s: &str) -> Result<Vec<FieldSpec>, Error> {
    let fields: Vec<FieldSpec> =
        s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_, _>>()?;
    if fields.is_empty() {
        return Err(Error::InvalidInput("empty field list".into()));
    }
    Ok(fields)
}
