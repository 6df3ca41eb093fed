//! Rule-based classification of multidegrees of tame automorphisms.

use crate::degree_estimates::semigroup_member;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Realizable,
    NotRealizable,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Realizable => "Realizable",
            Verdict::NotRealizable => "NotRealizable",
            Verdict::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub rule_id: String,
    pub citation: String,
    pub witness_hint: Option<String>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.verdict, self.rule_id, self.citation)?;
        if let Some(w) = &self.witness_hint {
            write!(f, "; witness: {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdegTriple {
    d1: u32,
    d2: u32,
    d3: u32,
}

impl MdegTriple {
    /// Sorts the entries. Panics on a zero degree.
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        assert!(a > 0 && b > 0 && c > 0, "degrees must be positive");
        let mut v = [a, b, c];
        v.sort_unstable();
        MdegTriple { d1: v[0], d2: v[1], d3: v[2] }
    }

    pub fn degrees(&self) -> (u32, u32, u32) {
        (self.d1, self.d2, self.d3)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

fn verdict_of(ok: bool) -> Verdict {
    if ok {
        Verdict::Realizable
    } else {
        Verdict::NotRealizable
    }
}

fn classification(verdict: Verdict, rule_id: &str, citation: String) -> Classification {
    Classification { verdict, rule_id: rule_id.to_string(), citation, witness_hint: None }
}

pub fn classify_dim2(a: u32, b: u32) -> Classification {
    let (d1, d2) = (a.min(b), a.max(b));
    let ok = d1 > 0 && d2 % d1 == 0;
    classification(
        verdict_of(ok),
        "JvdK",
        format!(
            "in dimension two (d1,d2) is a multidegree iff d1 | d2 or d2 | d1; here {d1} {} {d2}",
            if ok { "divides" } else { "does not divide" }
        ),
    )
}

type Rule = fn(u32, u32, u32) -> Option<Classification>;

fn r1(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    (d1 == 1).then(|| Classification {
        witness_hint: Some(format!("(x, y + x^{d2}, z + x^{d3}) composed with a coordinate permutation")),
        ..classification(
            Verdict::Realizable,
            "R1",
            "d1 = 1: a triangular map realizes every (1,d2,d3); constructed here, not quoted".into(),
        )
    })
}

fn r2(d1: u32, d2: u32, _d3: u32) -> Option<Classification> {
    (d1 == 2 && d2 >= 2).then(|| {
        classification(Verdict::Realizable, "R2", "every (2,d2,d3) with 2 <= d2 <= d3 is a tame multidegree".into())
    })
}

fn r3(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    (d1 > 2 && d1 < d2 && is_prime(d1) && is_prime(d2)).then(|| {
        let ok = semigroup_member(d1, d2, d3);
        classification(
            verdict_of(ok),
            "R3",
            format!(
                "for odd primes p1 < p2, (p1,p2,d3) is a tame multidegree iff d3 in p1N + p2N; {d3} {} <{d1},{d2}>",
                if ok { "is in" } else { "is not in" }
            ),
        )
    })
}

fn small_d1_rule(id: &str, k: u32, d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    (d1 == k && d2 >= k).then(|| {
        let divides = d2 % k == 0;
        let member = semigroup_member(k, d2, d3);
        let why = if divides {
            format!("{k} | {d2}")
        } else if member {
            format!("{d3} in {k}N + {d2}N")
        } else {
            format!("{k} does not divide {d2} and {d3} is not in {k}N + {d2}N")
        };
        classification(
            verdict_of(divides || member),
            id,
            format!("({k},d2,d3) is a tame multidegree iff {k} | d2 or d3 in {k}N + d2N; {why}"),
        )
    })
}

fn r4(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    small_d1_rule("R4", 3, d1, d2, d3)
}

fn r5(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    small_d1_rule("R5", 5, d1, d2, d3)
}

fn r6(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    (d1 == 4 && d2 % 2 == 0 && d3 % 2 == 0)
        .then(|| classification(Verdict::Realizable, "R6", "(4,d2,d3) with d2, d3 even is a tame multidegree".into()))
}

fn r7(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    (d1 == 4 && d2 % 2 == 1 && d3 % 2 == 1).then(|| {
        let ok = semigroup_member(4, d2, d3);
        classification(
            verdict_of(ok),
            "R7",
            format!(
                "(4,d2,d3) with d2, d3 odd is a tame multidegree iff d3 in 4N + d2N; {d3} {} <4,{d2}>",
                if ok { "is in" } else { "is not in" }
            ),
        )
    })
}

fn r8(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    ((d1, d2, d3) == (4, 5, 6)).then(|| {
        classification(
            Verdict::NotRealizable,
            "R8",
            "no tame automorphism of C^3 has multidegree (4,5,6); this crate's lemma verifier checks the argument"
                .into(),
        )
    })
}

fn r9(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    ((d1, d2, d3) == (3, 4, 5)).then(|| {
        classification(Verdict::NotRealizable, "R9", "(3,4,5) is not the multidegree of a tame automorphism".into())
    })
}

fn r10(d1: u32, d2: u32, d3: u32) -> Option<Classification> {
    ((d1, d2, d3) == (7, 8, 12)).then(|| {
        classification(
            Verdict::Unknown,
            "R10",
            "(7,8,12) is the known obstruction to a d1 = 7 characterization; unsettled".into(),
        )
    })
}

const RULES: [Rule; 10] = [r1, r2, r3, r4, r5, r6, r7, r8, r9, r10];

/// Every rule that matches, in priority order.
pub fn matching_rules(t: MdegTriple) -> Vec<Classification> {
    let (d1, d2, d3) = t.degrees();
    RULES.iter().filter_map(|r| r(d1, d2, d3)).collect()
}

pub fn classify_dim3(t: MdegTriple) -> Classification {
    matching_rules(t).into_iter().next().unwrap_or_else(|| {
        classification(
            Verdict::Unknown,
            "none",
            "no catalogued criterion covers this triple (e.g. the mixed-parity d1 = 4 region is open)".into(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(a: u32, b: u32, d: u32) -> Classification {
        classify_dim3(MdegTriple::new(a, b, d))
    }

    #[test]
    fn documented_examples() {
        assert_eq!((c(4, 5, 6).verdict, c(4, 5, 6).rule_id.as_str()), (Verdict::NotRealizable, "R8"));
        assert_eq!((c(3, 5, 7).verdict, c(3, 5, 7).rule_id.as_str()), (Verdict::NotRealizable, "R3"));
        assert_eq!((c(4, 6, 8).verdict, c(4, 6, 8).rule_id.as_str()), (Verdict::Realizable, "R6"));
        assert_eq!((c(1, 1, 1).verdict, c(1, 1, 1).rule_id.as_str()), (Verdict::Realizable, "R1"));
        assert_eq!((c(4, 5, 7).verdict, c(4, 5, 7).rule_id.as_str()), (Verdict::NotRealizable, "R7"));
        assert_eq!(c(4, 5, 8).verdict, Verdict::Unknown);
        assert_eq!(c(7, 8, 12).verdict, Verdict::Unknown);
    }

    #[test]
    fn triple_is_sorted() {
        assert_eq!(MdegTriple::new(6, 4, 5).degrees(), (4, 5, 6));
        assert_eq!(c(6, 5, 4).rule_id, "R8");
    }

    #[test]
    fn dim2() {
        assert_eq!(classify_dim2(2, 4).verdict, Verdict::Realizable);
        assert_eq!(classify_dim2(4, 6).verdict, Verdict::NotRealizable);
        assert_eq!(classify_dim2(9, 1).verdict, Verdict::Realizable);
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(13));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(15));
    }
}
