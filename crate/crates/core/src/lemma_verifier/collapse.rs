//! If `f = x_i + ...`, `g = x_j + ...` and `deg[f,g] = 2`, then `f` and `g`
//! only involve `x_i` and `x_j`.

use super::VerifyError;
use crate::poisson::bracket;
use crate::poly::{Monomial, Polynomial};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum CollapseReport {
    /// `deg[f,g] != 2`; nothing to check.
    HypothesisNotMet {
        bracket_degree: String,
    },
    Consistent {
        vars: (usize, usize),
    },
    /// `deg[f,g] = 2` yet a third variable occurs: a counterexample.
    Inconsistent {
        vars: (usize, usize),
        extra: Vec<usize>,
    },
}

/// Index of the variable `p`'s linear part equals, if it is exactly one variable.
fn linear_variable(p: &Polynomial) -> Option<usize> {
    let lin = p.homogeneous_part(1);
    let mut terms = lin.terms();
    let (m, c) = terms.next()?;
    if terms.next().is_some() || !num_traits::One::is_one(c) {
        return None;
    }
    (0..p.nvars()).find(|&i| *m == Monomial::var(p.nvars(), i))
}

pub fn check_poisson2_collapse(f: &Polynomial, g: &Polynomial) -> Result<CollapseReport, VerifyError> {
    let shape = |name: &str, p: &Polynomial| -> Result<usize, VerifyError> {
        if !p.homogeneous_part(0).is_zero() {
            return Err(VerifyError::Precondition(format!("{name} must have no constant term")));
        }
        linear_variable(p)
            .ok_or_else(|| VerifyError::Precondition(format!("the linear part of {name} must be a single variable")))
    };
    let i = shape("f", f)?;
    let j = shape("g", g)?;
    if i == j {
        return Err(VerifyError::Precondition("f and g must start with different variables".into()));
    }
    let b = bracket(f, g)?;
    if b.degree().finite() != Some(2) {
        return Ok(CollapseReport::HypothesisNotMet { bracket_degree: b.degree().to_string() });
    }
    let vars = (i.min(j), i.max(j));
    let extra: Vec<usize> =
        f.variables_used().union(&g.variables_used()).copied().filter(|&k| k != i && k != j).collect();
    if extra.is_empty() {
        Ok(CollapseReport::Consistent { vars })
    } else {
        Ok(CollapseReport::Inconsistent { vars, extra })
    }
}
