use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// The four arithmetics, ordered by inclusion: `NA ≤ MA` and
/// `NA ≤ HA ≤ PA`. `MA` and `HA`/`PA` are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    NA,
    MA,
    HA,
    PA,
}

impl Theory {
    pub const ALL: [Theory; 4] = [Theory::NA, Theory::MA, Theory::HA, Theory::PA];

    /// Least upper bound, if one exists.
    pub fn join(self, other: Theory) -> Option<Theory> {
        use Theory::*;
        match (self, other) {
            (a, b) if a == b => Some(a),
            (NA, b) | (b, NA) => Some(b),
            (HA, PA) | (PA, HA) => Some(PA),
            _ => None,
        }
    }

    pub fn le(self, other: Theory) -> bool {
        self.partial_cmp(&other)
            .is_some_and(|o| o != Ordering::Greater)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Theory::NA => "NA",
            Theory::MA => "MA",
            Theory::HA => "HA",
            Theory::PA => "PA",
        }
    }
}

impl PartialOrd for Theory {
    fn partial_cmp(&self, other: &Theory) -> Option<Ordering> {
        use Theory::*;
        match (self, other) {
            (a, b) if a == b => Some(Ordering::Equal),
            (NA, _) => Some(Ordering::Less),
            (_, NA) => Some(Ordering::Greater),
            (HA, PA) => Some(Ordering::Less),
            (PA, HA) => Some(Ordering::Greater),
            _ => None,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theory {
    type Err = String;

    fn from_str(s: &str) -> Result<Theory, String> {
        match s {
            "NA" => Ok(Theory::NA),
            "MA" => Ok(Theory::MA),
            "HA" => Ok(Theory::HA),
            "PA" => Ok(Theory::PA),
            _ => Err(format!("unknown theory `{s}` (expected NA, MA, HA or PA)")),
        }
    }
}
