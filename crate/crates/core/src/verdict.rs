//! Degrees of finiteness and three-valued verdicts shared by the engines.

use std::fmt;
use std::str::FromStr;

/// A finiteness degree `m ≥ 1` or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    Finite(u32),
    Infinite,
}

impl Degree {
    /// Caps `∞` at `cap` for criteria that stabilize.
    pub fn capped(self, cap: u32) -> u32 {
        match self {
            Degree::Finite(m) => m,
            Degree::Infinite => cap,
        }
    }

    /// Every degree `1..=self`, with `∞` listed last.
    pub fn up_to(self, cap: u32) -> Vec<Degree> {
        match self {
            Degree::Finite(m) => (1..=m).map(Degree::Finite).collect(),
            Degree::Infinite => (1..=cap).map(Degree::Finite).chain([Degree::Infinite]).collect(),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(m) => write!(f, "{m}"),
            Degree::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("degree must be a positive integer or 'inf', got '{0}'")]
pub struct DegreeParseError(pub String);

impl FromStr for Degree {
    type Err = DegreeParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") {
            return Ok(Degree::Infinite);
        }
        match t.parse::<u32>() {
            Ok(m) if m >= 1 => Ok(Degree::Finite(m)),
            _ => Err(DegreeParseError(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    In,
    Out,
    Inconclusive,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::In
        } else {
            Verdict::Out
        }
    }

    /// Conjunction: any `Out` wins, then any `Inconclusive`.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Out, _) | (_, Verdict::Out) => Verdict::Out,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::In,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::In => "IN",
            Verdict::Out => "OUT",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_degrees() {
        assert_eq!("inf".parse::<Degree>().unwrap(), Degree::Infinite);
        assert_eq!("3".parse::<Degree>().unwrap(), Degree::Finite(3));
        assert!("0".parse::<Degree>().is_err());
        assert!("x".parse::<Degree>().is_err());
        assert!(Degree::Finite(7) < Degree::Infinite);
    }

    #[test]
    fn verdict_conjunction() {
        assert_eq!(Verdict::In.and(Verdict::Inconclusive), Verdict::Inconclusive);
        assert_eq!(Verdict::Inconclusive.and(Verdict::Out), Verdict::Out);
        assert_eq!(Verdict::In.and(Verdict::In), Verdict::In);
    }
}
