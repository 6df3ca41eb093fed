//! Solving `[H, P] = 0` for a squarefree homogeneous `H`.
//!
//! For homogeneous `P` the only solutions are `P = a H^k`, and `P = 0` when
//! `deg H` does not divide `deg P`. For general `P` this forces `P` into
//! `Q[H]`. Both facts are theorems, so a computation that disagrees is
//! reported as an internal inconsistency rather than absorbed.

use crate::poisson::bracket;
use crate::poly::{Division, PolyError, Polynomial, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionResult {
    MonomialInH {
        a: Rational,
        k: u32,
    },
    /// The target degree is not a multiple of `deg H`, so only `P = 0` commutes.
    ForcedZero,
    NotCommuting,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("H must be nonconstant")]
    ConstantH,
    #[error("H must be homogeneous")]
    HNotHomogeneous,
    #[error("H must be squarefree")]
    HNotSquarefree,
    #[error("P must be homogeneous")]
    PNotHomogeneous,
    #[error("P is not homogeneous of degree {0}")]
    WrongDegree(u32),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn check_h(h: &Polynomial) -> Result<(), ReductionError> {
    if h.is_constant() {
        return Err(ReductionError::ConstantH);
    }
    if !h.is_homogeneous() {
        return Err(ReductionError::HNotHomogeneous);
    }
    if !h.is_squarefree()? {
        return Err(ReductionError::HNotSquarefree);
    }
    Ok(())
}

pub fn reduce_homogeneous(h: &Polynomial, p: &Polynomial) -> Result<ReductionResult, ReductionError> {
    if h.nvars() != p.nvars() {
        return Err(PolyError::VariableCountMismatch(h.nvars(), p.nvars()).into());
    }
    check_h(h)?;
    if p.is_zero() {
        return Ok(ReductionResult::MonomialInH { a: Rational::zero(), k: 0 });
    }
    if !p.is_homogeneous() {
        return Err(ReductionError::PNotHomogeneous);
    }
    reduce_checked(h, p, p.degree_u32())
}

/// Like [`reduce_homogeneous`], for `P` known to live in degree `d`. This is
/// the form a proof step takes ("this element of degree 7 commutes with H"),
/// and the only way to observe [`ReductionResult::ForcedZero`].
pub fn reduce_in_degree(h: &Polynomial, p: &Polynomial, d: u32) -> Result<ReductionResult, ReductionError> {
    if h.nvars() != p.nvars() {
        return Err(PolyError::VariableCountMismatch(h.nvars(), p.nvars()).into());
    }
    check_h(h)?;
    if !p.is_zero() && (!p.is_homogeneous() || p.degree_u32() != d) {
        return Err(ReductionError::WrongDegree(d));
    }
    reduce_checked(h, p, d)
}

fn reduce_checked(h: &Polynomial, p: &Polynomial, d: u32) -> Result<ReductionResult, ReductionError> {
    if !bracket(h, p)?.is_zero() {
        return Ok(ReductionResult::NotCommuting);
    }
    let dh = h.degree_u32();
    if d % dh != 0 {
        if p.is_zero() {
            return Ok(ReductionResult::ForcedZero);
        }
        return Err(ReductionError::Inconsistent(format!(
            "nonzero P = {p} commutes with H = {h} but deg H does not divide {d}"
        )));
    }
    if p.is_zero() {
        return Ok(ReductionResult::MonomialInH { a: Rational::zero(), k: d / dh });
    }
    let k = d / dh;
    let q = match p.exact_divide(&h.pow(k))? {
        Division::Exact(q) => q,
        Division::Indivisible => {
            return Err(ReductionError::Inconsistent(format!(
                "P = {p} commutes with H = {h} but H^{k} does not divide it"
            )))
        }
    };
    match q.as_constant() {
        Some(a) => Ok(ReductionResult::MonomialInH { a, k }),
        None => Err(ReductionError::Inconsistent(format!("P / H^{k} = {q} is not a constant"))),
    }
}

/// Coefficients `[a0, .., ak]` with `P = sum a_l H^l`, or `None` when `[H, P] != 0`.
pub fn express_in_h(h: &Polynomial, p: &Polynomial) -> Result<Option<Vec<Rational>>, ReductionError> {
    if h.nvars() != p.nvars() {
        return Err(PolyError::VariableCountMismatch(h.nvars(), p.nvars()).into());
    }
    check_h(h)?;
    if !bracket(h, p)?.is_zero() {
        return Ok(None);
    }
    let dh = h.degree_u32();
    let mut coeffs: Vec<Rational> = Vec::new();
    for (d, part) in p.homogeneous_components() {
        // Brackets respect the grading, so each component commutes on its own.
        match reduce_checked(h, &part, d)? {
            ReductionResult::MonomialInH { a, k } => {
                if coeffs.len() <= k as usize {
                    coeffs.resize(k as usize + 1, Rational::zero());
                }
                coeffs[k as usize] = a;
            }
            other => {
                return Err(ReductionError::Inconsistent(format!(
                    "component of degree {d} (deg H = {dh}) of a commuting P reduced to {other:?}"
                )))
            }
        }
    }
    Ok(Some(coeffs))
}

/// Serializable view of a reduction outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum ReductionSummary {
    MonomialInH { a: String, k: u32 },
    ForcedZero,
    NotCommuting,
}

impl From<&ReductionResult> for ReductionSummary {
    fn from(r: &ReductionResult) -> Self {
        match r {
            ReductionResult::MonomialInH { a, k } => ReductionSummary::MonomialInH { a: a.to_string(), k: *k },
            ReductionResult::ForcedZero => ReductionSummary::ForcedZero,
            ReductionResult::NotCommuting => ReductionSummary::NotCommuting,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn documented_examples() {
        let h = p("x^2 + y*z");
        assert_eq!(reduce_homogeneous(&h, &h.pow(3)).unwrap(), ReductionResult::MonomialInH { a: int(1), k: 3 });
        assert_eq!(
            reduce_homogeneous(&h, &h.pow(2).scale(&int(2))).unwrap(),
            ReductionResult::MonomialInH { a: int(2), k: 2 }
        );
        assert_eq!(reduce_homogeneous(&h, &p("x")).unwrap(), ReductionResult::NotCommuting);
        assert_eq!(reduce_homogeneous(&h, &p("0")).unwrap(), ReductionResult::MonomialInH { a: int(0), k: 0 });
    }

    #[test]
    fn express_examples() {
        let h = p("x^2 + y*z");
        let target = &(&p("3") + &h) + &h.pow(2).scale(&int(2));
        assert_eq!(express_in_h(&h, &target).unwrap(), Some(vec![int(3), int(1), int(2)]));
        assert_eq!(express_in_h(&h, &p("0")).unwrap(), Some(vec![]));
        assert_eq!(express_in_h(&h, &(&p("x") + &h)).unwrap(), None);
        let gap = &h.pow(3).scale(&rat(-1, 2)) + &p("5");
        assert_eq!(express_in_h(&h, &gap).unwrap(), Some(vec![int(5), int(0), int(0), rat(-1, 2)]));
    }

    #[test]
    fn forced_zero_in_odd_degree() {
        let h = p("x^2 + y*z");
        assert_eq!(reduce_in_degree(&h, &p("0"), 7).unwrap(), ReductionResult::ForcedZero);
        assert_eq!(reduce_in_degree(&h, &p("0"), 6).unwrap(), ReductionResult::MonomialInH { a: int(0), k: 3 });
        assert!(matches!(reduce_in_degree(&h, &p("x^2"), 3), Err(ReductionError::WrongDegree(3))));
    }

    #[test]
    fn preconditions() {
        assert_eq!(reduce_homogeneous(&p("x^2"), &p("x")), Err(ReductionError::HNotSquarefree));
        assert_eq!(reduce_homogeneous(&p("x^2 + y"), &p("x")), Err(ReductionError::HNotHomogeneous));
        assert_eq!(reduce_homogeneous(&p("4"), &p("x")), Err(ReductionError::ConstantH));
        assert_eq!(reduce_homogeneous(&p("x*y"), &p("x + y^2")), Err(ReductionError::PNotHomogeneous));
    }

    #[test]
    fn linear_h_works_too() {
        let h = p("x - 2*z");
        assert_eq!(
            reduce_homogeneous(&h, &h.pow(5).scale(&rat(3, 7))).unwrap(),
            ReductionResult::MonomialInH { a: rat(3, 7), k: 5 }
        );
        assert_eq!(reduce_homogeneous(&h, &p("x*z")).unwrap(), ReductionResult::NotCommuting);
    }
}
