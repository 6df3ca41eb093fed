use serde::{Deserialize, Serialize};
use std::fmt;

/// Total degree, with the zero polynomial at `NegInf`.
///
/// Variant order makes the derived `Ord` put `NegInf` below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Degree {
    NegInf,
    Finite(u32),
}

impl Degree {
    pub fn is_neg_inf(self) -> bool {
        matches!(self, Degree::NegInf)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `self + k`; `NegInf` absorbs.
    pub fn plus(self, k: u32) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => Degree::Finite(d + k),
        }
    }

    /// Degree of a product.
    pub fn add(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }

    pub fn lt_int(self, k: u32) -> bool {
        self < Degree::Finite(k)
    }
}

impl From<u32> for Degree {
    fn from(d: u32) -> Self {
        Degree::Finite(d)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inf_absorbs_and_sits_below_zero() {
        assert_eq!(Degree::NegInf.plus(2), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(Degree::Finite(3).add(Degree::NegInf), Degree::NegInf);
        assert_eq!(Degree::Finite(3).plus(2), Degree::Finite(5));
    }
}
