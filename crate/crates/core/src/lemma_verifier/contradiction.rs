//! The terminal contradictions: no pair of the forced shape reaches
//! `deg[F,G] < 4`.
//!
//! Each checker takes a level-5 scenario, builds `(F, G)`, and confirms the
//! concrete facts the argument rests on. A report is `confirmed` only when
//! every listed check holds.

use super::scenario::{Branch, PowerScenario, SquarefreeScenario};
use super::{trial_rng, VerifyError, NVARS};
use crate::h_reduction::{reduce_homogeneous, ReductionResult};
use crate::poisson::{bracket, FormalBracket};
use crate::poly::{int, rat, Division, Monomial, Polynomial, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContradictionReport {
    pub kind: String,
    pub checks: Vec<Check>,
    pub bracket_degree: String,
    pub confirmed: bool,
}

impl ContradictionReport {
    fn new(kind: &str) -> Self {
        ContradictionReport { kind: kind.into(), checks: Vec::new(), bracket_degree: String::new(), confirmed: false }
    }

    fn check(&mut self, name: &str, holds: bool, detail: String) {
        self.checks.push(Check { name: name.into(), holds, detail });
    }

    fn finish(mut self, b: &FormalBracket) -> Self {
        self.bracket_degree = b.degree().to_string();
        self.confirmed = self.checks.iter().all(|c| c.holds);
        self
    }
}

fn require_level5(level: u32) -> Result<(), VerifyError> {
    if level != 5 {
        return Err(VerifyError::Precondition(format!(
            "contradiction checks start from a level-5 scenario, got level {level}"
        )));
    }
    Ok(())
}

fn x() -> Polynomial {
    Polynomial::var(NVARS, 0)
}

fn z() -> Polynomial {
    Polynomial::var(NVARS, 2)
}

/// Squarefree branch: the degree-4 part of `[F,G]` is `[H, Q]` with
/// `Q = -3/4 alpha (d Ft1 / 8 - x)^2`, and `[H, Q] = 0` would need `Q = e H`.
pub fn check_contradiction_squarefree(s: &SquarefreeScenario) -> Result<ContradictionReport, VerifyError> {
    require_level5(s.level)?;
    let (f, g) = s.build()?;
    let ft1 = s.ftilde1()?;
    let h = &s.h;
    let lin = &ft1.scale(&(rat(1, 8) * &s.d)) - &x();
    let q = lin.pow(2).scale(&(rat(-3, 4) * &s.alpha));
    let b = bracket(&f, &g)?;
    let mut r = ContradictionReport::new("squarefree");

    r.check("quadratic is nonzero", !q.is_zero(), format!("Q = {q}"));
    let multiple = match q.exact_divide(h)? {
        Division::Exact(e) => e.as_constant(),
        Division::Indivisible => None,
    };
    r.check(
        "no e with Q = e H",
        multiple.is_none(),
        match &multiple {
            Some(e) => format!("Q = ({e}) * H"),
            None => format!("H = {h} does not divide Q to a constant"),
        },
    );
    let reduction = reduce_homogeneous(h, &q)?;
    r.check("[H, Q] != 0", reduction == ReductionResult::NotCommuting, format!("{reduction:?}"));
    let expected = bracket(h, &q)?;
    r.check("degree-4 part of [F,G] is [H, Q]", b.homogeneous_part(4) == expected, "compared componentwise".into());
    r.check("deg[F,G] = 4", b.degree().finite() == Some(4), format!("deg = {}", b.degree()));
    Ok(r.finish(&b))
}

/// Power branch, case 2 (`Fb1 = f h`): the degree-4 part is `[h, W]` and
/// `[h, W] = 0` forces `h | x`, which `h = (z - w x) / M` rules out.
fn check_case2(s: &PowerScenario) -> Result<ContradictionReport, VerifyError> {
    let (f, g) = s.build()?;
    let h = s.h()?;
    let b = bracket(&f, &g)?;
    let mut r = ContradictionReport::new("power case 2");

    let p = s.const_k() + s.const_l() * &s.f;
    let h2 = h.pow(2);
    let mut w = (&h2 * &z()).scale(&(int(3) * &s.b));
    w += &(&h2 * &x()).scale(&(int(2) * &s.f * s.const_a()));
    w += &(&h2 * &x()).scale(&(-int(3) * &p));
    w += &(&h * &x().pow(2)).scale(&(rat(-3, 2) * &s.alpha));

    r.check("h involves z", h.variables_used().contains(&2), format!("h = {h}"));
    let divides = x().exact_divide(&h)?.exact().is_some();
    r.check("h does not divide x", !divides, "no mu with h = mu x".into());
    let expected = bracket(&h, &w)?;
    r.check("degree-4 part of [F,G] is [h, W]", b.homogeneous_part(4) == expected, format!("W = {w}"));
    r.check("[h, W] != 0", !expected.is_zero(), String::new());
    r.check("deg[F,G] = 4", b.degree().finite() == Some(4), format!("deg = {}", b.degree()));
    Ok(r.finish(&b))
}

/// Coefficients of `x` and `z` in a linear form of `x, z`.
fn xz_coefficients(l: &Polynomial) -> (Rational, Rational) {
    (l.coefficient(&Monomial::var(NVARS, 0)), l.coefficient(&Monomial::var(NVARS, 2)))
}

/// The case-1 quadratic form in `(h, Fb1)`:
/// `(3bM - 2Bt - 3Kt R + S Lt) h^2 - 2 R Lt h Fb1 + 2 C Fb1^2` with
/// `Kt = K + 3/2 alpha S`, `Lt = L + 3/2 alpha R`, `Bt = B + A S`.
/// Requires `[h, Fb1] != 0`.
pub fn span_quadratic_form(
    s: &PowerScenario,
    h: &Polynomial,
    fbar1: &Polynomial,
    m: &Rational,
) -> Result<Polynomial, VerifyError> {
    if bracket(h, fbar1)?.is_zero() {
        return Err(VerifyError::Precondition("h and Fb1 must be algebraically independent ([h, Fb1] != 0)".into()));
    }
    let (rr, ss) = (s.case1_r(), s.case1_s());
    let kt = s.const_k() + rat(3, 2) * &s.alpha * &ss;
    let lt = s.const_l() + rat(3, 2) * &s.alpha * &rr;
    let bt = s.const_b() + s.const_a() * &ss;
    let c0 = int(3) * &s.b * m - int(2) * &bt - int(3) * &kt * &rr + &ss * &lt;
    let mut q = h.pow(2).scale(&c0);
    q += &(h * fbar1).scale(&(int(-2) * &rr * &lt));
    q += &fbar1.pow(2).scale(&(int(2) * s.const_c()));
    Ok(q)
}

/// Power branch, case 1: `x = R Fb1 + S h`, `z = M Fb1 + N h`, and the
/// degree-4 part is `Q [h, Fb1]` with `Q` a nonzero quadratic form.
fn check_case1(s: &PowerScenario) -> Result<ContradictionReport, VerifyError> {
    let (f, g) = s.build()?;
    let h = s.h()?;
    let fb1 = s.fbar1()?;
    let b = bracket(&f, &g)?;
    let mut r = ContradictionReport::new("power case 1");

    let x_expected = &fb1.scale(&s.case1_r()) + &h.scale(&s.case1_s());
    r.check("x = R Fb1 + S h", x_expected == x(), format!("R = {}, S = {}", s.case1_r(), s.case1_s()));

    let (fx, fz) = xz_coefficients(&fb1);
    let (hx, hz) = xz_coefficients(&h);
    let det = &fx * &hz - &fz * &hx;
    if det.is_zero() {
        return Err(VerifyError::Precondition("h and Fb1 do not span x and z".into()));
    }
    // Solve M Fb1 + N h = z.
    let m = -&hx / &det;
    let n = &fx / &det;
    let z_expected = &fb1.scale(&m) + &h.scale(&n);
    r.check("z = M Fb1 + N h", z_expected == z(), format!("M = {m}, N = {n}"));

    let q = span_quadratic_form(s, &h, &fb1, &m)?;
    let hf = bracket(&h, &fb1)?;
    r.check("[h, Fb1] != 0", !hf.is_zero(), String::new());
    r.check("C = 3/8 alpha != 0", !s.const_c().is_zero(), format!("C = {}", s.const_c()));
    r.check("quadratic form is nonzero", !q.is_zero(), format!("Q = {q}"));
    r.check(
        "degree-4 part of [F,G] is Q [h, Fb1]",
        b.homogeneous_part(4) == hf.scale_by_poly(&q)?,
        "compared componentwise".into(),
    );
    r.check("deg[F,G] = 4", b.degree().finite() == Some(4), format!("deg = {}", b.degree()));
    Ok(r.finish(&b))
}

pub fn check_contradiction_power(s: &PowerScenario) -> Result<ContradictionReport, VerifyError> {
    require_level5(s.level)?;
    match s.branch {
        Branch::Span => check_case1(s),
        Branch::Proportional => check_case2(s),
        other => Err(VerifyError::Precondition(format!("branch {other} is not a level-5 case"))),
    }
}

/// Runs the squarefree checker on `n` random level-5 scenarios.
pub fn sweep_squarefree(n: u64, seed: u64) -> Result<Vec<ContradictionReport>, VerifyError> {
    (0..n).map(|i| check_contradiction_squarefree(&SquarefreeScenario::random(&mut trial_rng(seed, i), 5))).collect()
}

/// Runs the power checker on `n` random level-5 scenarios of one case.
pub fn sweep_power(branch: Branch, n: u64, seed: u64) -> Result<Vec<ContradictionReport>, VerifyError> {
    (0..n).map(|i| check_contradiction_power(&PowerScenario::random(&mut trial_rng(seed, i), 5, branch))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn squarefree_examples() {
        for d in [0, 8] {
            let mut s = SquarefreeScenario::new(p("x^2 + y*z"), int(1), 5);
            s.c = int(4);
            s.d = int(d);
            let r = check_contradiction_squarefree(&s).unwrap();
            assert!(r.confirmed, "{r:?}");
            if d == 0 {
                assert!(r.checks[0].detail.ends_with("-3/4*x^2"), "{}", r.checks[0].detail);
            }
        }
    }

    #[test]
    fn power_case_two_example() {
        let mut s = PowerScenario::new(p("0"), int(1), 5, Branch::Proportional);
        s.e = int(4);
        assert!(check_contradiction_power(&s).unwrap().confirmed);
    }

    #[test]
    fn proportional_inputs_are_rejected_by_the_form() {
        let s = PowerScenario::new(p("x"), int(1), 5, Branch::Span);
        let err = span_quadratic_form(&s, &p("x"), &p("2*x"), &int(1)).unwrap_err();
        assert!(matches!(err, VerifyError::Precondition(_)));
    }

    #[test]
    fn wrong_level_is_rejected() {
        let s = SquarefreeScenario::new(p("x^2 + y*z"), int(1), 6);
        assert!(check_contradiction_squarefree(&s).is_err());
        let s = PowerScenario::new(p("x"), int(1), 6, Branch::Bar);
        assert!(check_contradiction_power(&s).is_err());
    }

    #[test]
    fn small_sweeps_confirm() {
        assert!(sweep_squarefree(5, 1).unwrap().iter().all(|r| r.confirmed));
        assert!(sweep_power(Branch::Span, 5, 2).unwrap().iter().all(|r| r.confirmed));
        assert!(sweep_power(Branch::Proportional, 5, 3).unwrap().iter().all(|r| r.confirmed));
    }
}
