//! Factorization of a commuting top pair `(F4, G6)`.
//!
//! `[F4, G6] = 0` forces either `F4 = H^2, G6 = alpha H^3` with `H` a
//! squarefree quadratic, or `F4 = h^4, G6 = alpha h^6` with `h` linear, after
//! normalizing a scalar. Over `Q` that normalization may need a root of the
//! leading coefficient, reported as `NeedsFieldExtension`.

use super::VerifyError;
use crate::poisson::bracket;
use crate::poly::{Division, Polynomial, Rational, Root};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopPairDecomposition {
    Squarefree {
        h: Polynomial,
        alpha: Rational,
    },
    Power {
        h: Polynomial,
        alpha: Rational,
    },
    NotDependent,
    /// `F4 = c H^2` (or `c h^4`) with `c` not a rational square (fourth power).
    NeedsFieldExtension {
        scale: Rational,
        root: Polynomial,
        k: u32,
    },
}

/// Serializable view of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum DecompositionSummary {
    Squarefree { h: String, alpha: String },
    Power { h: String, alpha: String },
    NotDependent,
    NeedsFieldExtension { scale: String, root: String, k: u32 },
}

impl From<&TopPairDecomposition> for DecompositionSummary {
    fn from(d: &TopPairDecomposition) -> Self {
        match d {
            TopPairDecomposition::Squarefree { h, alpha } => {
                DecompositionSummary::Squarefree { h: h.to_string(), alpha: alpha.to_string() }
            }
            TopPairDecomposition::Power { h, alpha } => {
                DecompositionSummary::Power { h: h.to_string(), alpha: alpha.to_string() }
            }
            TopPairDecomposition::NotDependent => DecompositionSummary::NotDependent,
            TopPairDecomposition::NeedsFieldExtension { scale, root, k } => {
                DecompositionSummary::NeedsFieldExtension { scale: scale.to_string(), root: root.to_string(), k: *k }
            }
        }
    }
}

fn check_input(name: &str, p: &Polynomial, d: u32) -> Result<(), VerifyError> {
    if p.is_zero() || !p.is_homogeneous() || p.degree_u32() != d {
        return Err(VerifyError::Precondition(format!("{name} must be nonzero and homogeneous of degree {d}")));
    }
    Ok(())
}

/// `G6 / r^k` as a constant, or an inconsistency.
fn quotient_constant(g6: &Polynomial, r: &Polynomial, k: u32) -> Result<Rational, VerifyError> {
    match g6.exact_divide(&r.pow(k))? {
        Division::Exact(q) => q.as_constant().ok_or_else(|| {
            VerifyError::Inconsistent(format!("G6 / ({r})^{k} = {q} is not a constant although [F4, G6] = 0"))
        }),
        Division::Indivisible => {
            Err(VerifyError::Inconsistent(format!("({r})^{k} does not divide G6 although [F4, G6] = 0")))
        }
    }
}

pub fn decompose_top_pair(f4: &Polynomial, g6: &Polynomial) -> Result<TopPairDecomposition, VerifyError> {
    if f4.nvars() != g6.nvars() {
        return Err(crate::poly::PolyError::VariableCountMismatch(f4.nvars(), g6.nvars()).into());
    }
    check_input("F4", f4, 4)?;
    check_input("G6", g6, 6)?;
    if !bracket(f4, g6)?.is_zero() {
        return Ok(TopPairDecomposition::NotDependent);
    }

    if let Root::Exact(h) = f4.kth_root(2)? {
        if h.is_squarefree()? {
            let alpha = quotient_constant(g6, &h, 3)?;
            return Ok(TopPairDecomposition::Squarefree { h, alpha });
        }
        if let Root::Exact(l) = f4.kth_root(4)? {
            let alpha = quotient_constant(g6, &l, 6)?;
            return Ok(TopPairDecomposition::Power { h: l, alpha });
        }
    }

    let scale = f4.leading_coefficient().expect("nonzero").clone();
    let normalized = f4.scale(&scale.recip());
    for k in [2, 4] {
        if let Root::Exact(root) = normalized.kth_root(k)? {
            if k == 4 || root.is_squarefree()? {
                return Ok(TopPairDecomposition::NeedsFieldExtension { scale, root, k });
            }
        }
    }
    Err(VerifyError::Inconsistent(format!(
        "F4 = {f4} commutes with G6 = {g6} but is neither c H^2 with H squarefree nor c h^4"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn documented_examples() {
        let h = p("x^2 + y*z");
        assert_eq!(
            decompose_top_pair(&h.pow(2), &h.pow(3).scale(&int(2))).unwrap(),
            TopPairDecomposition::Squarefree { h: h.clone(), alpha: int(2) }
        );
        assert_eq!(
            decompose_top_pair(&p("x^4"), &p("5*x^6")).unwrap(),
            TopPairDecomposition::Power { h: p("x"), alpha: int(5) }
        );
        assert_eq!(decompose_top_pair(&p("x^4"), &p("y^6")).unwrap(), TopPairDecomposition::NotDependent);
    }

    #[test]
    fn sign_of_root_moves_into_alpha() {
        let h = p("-x^2 + y*z");
        let d = decompose_top_pair(&h.pow(2), &h.pow(3)).unwrap();
        assert_eq!(d, TopPairDecomposition::Squarefree { h: -h, alpha: int(-1) });
    }

    #[test]
    fn irrational_scale_is_reported() {
        let h = p("x^2 + y*z");
        let d = decompose_top_pair(&h.pow(2).scale(&int(2)), &h.pow(3)).unwrap();
        assert!(matches!(d, TopPairDecomposition::NeedsFieldExtension { k: 2, .. }));
        let d = decompose_top_pair(&p("4*x^4"), &p("x^6")).unwrap();
        assert!(matches!(d, TopPairDecomposition::NeedsFieldExtension { k: 4, .. }));
    }

    #[test]
    fn rejects_wrong_degrees() {
        assert!(matches!(decompose_top_pair(&p("x^3"), &p("x^6")), Err(VerifyError::Precondition(_))));
        assert!(matches!(decompose_top_pair(&p("x^4"), &p("0")), Err(VerifyError::Precondition(_))));
    }
}
