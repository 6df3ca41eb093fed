//! Forced-form constructions of `F = x + F2 + F3 + F4`, `G = z + G2 + .. + G6`.
//!
//! A scenario at level `L` fills in every component that the hypothesis
//! `deg[F,G] < L` forces and takes the rest from its free parts, so the
//! built pair satisfies `deg[F,G] < L`. Derived constants are recomputed on
//! every access.

use super::{VerifyError, NVARS};
use crate::poisson::{bracket, FormalBracket};
use crate::poly::{int, random, rat, Polynomial, Rational};
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Components not forced at the scenario's level. Zero by default.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeParts {
    pub f2: Polynomial,
    pub f3: Polynomial,
    pub g2: Polynomial,
    pub g3: Polynomial,
    pub g4: Polynomial,
}

impl Default for FreeParts {
    fn default() -> Self {
        let z = Polynomial::zero(NVARS);
        FreeParts { f2: z.clone(), f3: z.clone(), g2: z.clone(), g3: z.clone(), g4: z }
    }
}

impl FreeParts {
    fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        FreeParts {
            f2: random::homogeneous(rng, NVARS, 2, 3, 0.6),
            f3: random::homogeneous(rng, NVARS, 3, 3, 0.5),
            g2: random::homogeneous(rng, NVARS, 2, 3, 0.6),
            g3: random::homogeneous(rng, NVARS, 3, 3, 0.5),
            g4: random::homogeneous(rng, NVARS, 4, 3, 0.4),
        }
    }

    fn check(&self) -> Result<(), VerifyError> {
        for (name, p, d) in
            [("F2", &self.f2, 2), ("F3", &self.f3, 3), ("G2", &self.g2, 2), ("G3", &self.g3, 3), ("G4", &self.g4, 4)]
        {
            check_form(name, p, d, true)?;
        }
        Ok(())
    }
}

fn precondition(msg: impl Into<String>) -> VerifyError {
    VerifyError::Precondition(msg.into())
}

fn check_form(name: &str, p: &Polynomial, d: u32, zero_ok: bool) -> Result<(), VerifyError> {
    if p.nvars() != NVARS {
        return Err(precondition(format!("{name} must be in {NVARS} variables")));
    }
    if p.is_zero() {
        return if zero_ok { Ok(()) } else { Err(precondition(format!("{name} must be nonzero"))) };
    }
    if !p.is_homogeneous() || p.degree_u32() != d {
        return Err(precondition(format!("{name} must be homogeneous of degree {d}")));
    }
    Ok(())
}

fn x() -> Polynomial {
    Polynomial::var(NVARS, 0)
}

fn z() -> Polynomial {
    Polynomial::var(NVARS, 2)
}

fn c(r: &Rational) -> Polynomial {
    Polynomial::constant(NVARS, r.clone())
}

fn check_level(level: u32, lo: u32) -> Result<(), VerifyError> {
    if !(lo..=9).contains(&level) {
        return Err(precondition(format!("level must be in {lo}..=9, got {level}")));
    }
    Ok(())
}

/// `[F, G]` of a built pair.
pub fn bracket_of(f: &Polynomial, g: &Polynomial) -> Result<FormalBracket, VerifyError> {
    Ok(bracket(f, g)?)
}

/// `F4 = H^2`, `G6 = alpha H^3` with `H` a squarefree quadratic form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeScenario {
    pub h: Polynomial,
    pub alpha: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    /// Used at levels 8..6; at level 5 it is determined by `z`.
    pub ftilde1: Polynomial,
    pub level: u32,
    pub free: FreeParts,
}

impl SquarefreeScenario {
    pub fn new(h: Polynomial, alpha: Rational, level: u32) -> Self {
        SquarefreeScenario {
            h,
            alpha,
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::zero(),
            ftilde1: Polynomial::zero(NVARS),
            level,
            free: FreeParts::default(),
        }
    }

    /// `A = 3/128 alpha d^2 + 1/4 b d + 1/2 c`.
    pub fn a(&self) -> Rational {
        rat(3, 128) * &self.alpha * &self.d * &self.d + rat(1, 4) * &self.b * &self.d + rat(1, 2) * &self.c
    }

    /// `M = -3/256 alpha d^2 + 1/4 c`.
    pub fn m(&self) -> Rational {
        rat(-3, 256) * &self.alpha * &self.d * &self.d + rat(1, 4) * &self.c
    }

    /// Coefficient of `x` in `z = M Ft1 + (3/16 alpha d + b) x`.
    pub fn x_coefficient(&self) -> Rational {
        rat(3, 16) * &self.alpha * &self.d + &self.b
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        check_level(self.level, 5)?;
        if self.alpha.is_zero() {
            return Err(precondition("alpha must be nonzero"));
        }
        check_form("H", &self.h, 2, false)?;
        if !self.h.is_squarefree()? {
            return Err(precondition("H must be squarefree"));
        }
        if self.level >= 6 {
            check_form("Ft1", &self.ftilde1, 1, true)?;
        } else if self.m().is_zero() {
            return Err(precondition("level 5 needs M = -3/256 alpha d^2 + c/4 to be nonzero"));
        }
        self.free.check()
    }

    /// `Ft1`, derived from `z` at level 5.
    pub fn ftilde1(&self) -> Result<Polynomial, VerifyError> {
        if self.level >= 6 {
            return Ok(self.ftilde1.clone());
        }
        let m = self.m();
        if m.is_zero() {
            return Err(precondition("M = 0"));
        }
        Ok((z() - x().scale(&self.x_coefficient())).scale(&m.recip()))
    }

    /// `(F, G)` with every component forced at this level filled in.
    pub fn build(&self) -> Result<(Polynomial, Polynomial), VerifyError> {
        self.validate()?;
        let (h, al, l) = (&self.h, c(&self.alpha), self.level);
        let ft1 = self.ftilde1()?;
        let q = |n, d| c(&rat(n, d));

        let f4 = h.pow(2);
        let g6 = &al * &h.pow(3);
        let f3 = if l <= 8 { h * &ft1 } else { self.free.f3.clone() };
        let g5 = &q(3, 2) * &(&al * &(h * &f3));
        let f2 = if l <= 6 { &q(1, 4) * &(&ft1.pow(2) + &h.scale(&self.d)) } else { self.free.f2.clone() };
        let g4 = if l <= 8 {
            &(&(&q(3, 8) * &al) * &(h * &ft1.pow(2))) + &(&(&(&q(3, 2) * &al) * &(h * &f2)) + &h.pow(2).scale(&self.b))
        } else {
            self.free.g4.clone()
        };
        let g3 = if l <= 7 {
            let mut g3 = &(&q(-1, 16) * &al) * &ft1.pow(3);
            g3 += &(h * &ft1).scale(&self.b);
            g3 += &(&(&q(3, 2) * &al) * &(h * &x()));
            g3 += &(&(&q(3, 4) * &al) * &(&ft1 * &f2));
            g3
        } else {
            self.free.g3.clone()
        };
        let g2 = if l <= 6 {
            let mut g2 = h.scale(&self.a());
            g2 += &ft1.pow(2).scale(&(rat(1, 4) * &self.b));
            g2 += &(&(&q(3, 4) * &al) * &(&x() * &ft1));
            g2
        } else {
            self.free.g2.clone()
        };
        let f = &(&(&x() + &f2) + &f3) + &f4;
        let g = &(&(&(&(&z() + &g2) + &g3) + &g4) + &g5) + &g6;
        Ok((f, g))
    }

    /// A valid scenario with random `H`, scalars and free parts.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, level: u32) -> Self {
        loop {
            let mut s =
                SquarefreeScenario::new(random::squarefree_quadratic(rng, NVARS), random::nonzero_rational(rng), level);
            s.b = random::small_rational(rng);
            s.c = random::small_rational(rng);
            s.d = random::small_rational(rng);
            s.ftilde1 = random::homogeneous(rng, NVARS, 1, 3, 0.8);
            s.free = FreeParts::random(rng);
            if s.validate().is_ok() {
                return s;
            }
        }
    }
}

/// Which forced form the power branch is in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    /// Levels 9..7, before the branch splits.
    Upper,
    /// Level 6 with `beta = 0`: `F2 = (Ft1^2 + h Fh1)/4`.
    Hat,
    /// Level 6: `Ft1 = b h`, `F2 = h Fb1`.
    Bar,
    /// Level 5, case 1: `h` and `Fb1` span `x` and `z`.
    Span,
    /// Level 5, case 2: `Fb1 = f h`.
    Proportional,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::Upper => "upper",
            Branch::Hat => "hat",
            Branch::Bar => "bar",
            Branch::Span => "span",
            Branch::Proportional => "proportional",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "upper" => Branch::Upper,
            "hat" => Branch::Hat,
            "bar" => Branch::Bar,
            "span" | "case1" => Branch::Span,
            "proportional" | "case2" => Branch::Proportional,
            other => return Err(format!("unknown branch {other:?}")),
        })
    }
}

impl Branch {
    pub fn allowed_at(self, level: u32) -> bool {
        matches!(
            (self, level),
            (Branch::Upper, 7..=9) | (Branch::Hat | Branch::Bar, 6) | (Branch::Span | Branch::Proportional, 5)
        )
    }

    fn barred(self) -> bool {
        matches!(self, Branch::Bar | Branch::Span | Branch::Proportional)
    }
}

/// `F4 = h^4`, `G6 = alpha h^6` with `h` a linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerScenario {
    /// Ignored at level 5, where `h` is determined by `x` and `z`.
    pub h: Polynomial,
    pub alpha: Rational,
    pub beta: Rational,
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub gamma: Rational,
    pub ftilde2: Polynomial,
    pub ftilde1: Polynomial,
    pub fhat1: Polynomial,
    pub fbar1: Polynomial,
    pub level: u32,
    pub branch: Branch,
    pub free: FreeParts,
}

impl PowerScenario {
    pub fn new(h: Polynomial, alpha: Rational, level: u32, branch: Branch) -> Self {
        let zero = Polynomial::zero(NVARS);
        PowerScenario {
            h,
            alpha,
            beta: Rational::zero(),
            a: Rational::zero(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::zero(),
            e: Rational::zero(),
            f: Rational::zero(),
            gamma: Rational::zero(),
            ftilde2: zero.clone(),
            ftilde1: zero.clone(),
            fhat1: zero.clone(),
            fbar1: zero,
            level,
            branch,
            free: FreeParts::default(),
        }
    }

    pub fn const_a(&self) -> Rational {
        rat(5, 4) * &self.beta + rat(3, 4) * &self.alpha * &self.b
    }

    pub fn const_b(&self) -> Rational {
        let b = &self.b;
        rat(-5, 128) * &self.beta * b * b * b
            + rat(3, 16) * &self.c * b
            + rat(3, 128) * &self.alpha * b * b * b * b
            + rat(1, 4) * &self.d
    }

    pub fn const_c(&self) -> Rational {
        rat(3, 8) * &self.alpha
    }

    pub fn const_d(&self) -> Rational {
        rat(1, 4) * &self.a + rat(5, 16) * &self.beta * &self.b - rat(3, 16) * &self.alpha * &self.b * &self.b
    }

    pub fn const_e(&self) -> Rational {
        rat(3, 8) * &self.alpha * &self.b * &self.b + rat(5, 4) * &self.beta * &self.b + rat(1, 4) * &self.a
    }

    pub fn const_k(&self) -> Rational {
        let b = &self.b;
        rat(5, 32) * &self.beta * b * b + rat(1, 4) * &self.a * b - rat(1, 16) * &self.alpha * b * b * b
            + rat(1, 4) * &self.c
    }

    pub fn const_l(&self) -> Rational {
        rat(5, 4) * &self.beta + rat(3, 4) * &self.alpha * &self.b
    }

    /// `rho = 3bC - L/2`, the coefficient of `Fb1` in the level-5 divisibility condition.
    pub fn rho(&self) -> Rational {
        int(3) * &self.b * self.const_c() - rat(1, 2) * self.const_l()
    }

    /// Case 2: `z = (E - 3/4 bA + 3/4 alpha f) x + M h` with
    /// `M = (3/4 K - 3/4 bD) f + e/4 - rho f^2 / 4`.
    pub fn case2_m(&self) -> Rational {
        (rat(3, 4) * self.const_k() - rat(3, 4) * &self.b * self.const_d()) * &self.f + rat(1, 4) * &self.e
            - rat(1, 4) * self.rho() * &self.f * &self.f
    }

    pub fn case2_x_coefficient(&self) -> Rational {
        self.const_e() - rat(3, 4) * &self.b * self.const_a() + rat(3, 4) * &self.alpha * &self.f
    }

    /// Case 1: coefficient of `Fb1` in `z`.
    pub fn case1_kappa(&self) -> Rational {
        rat(3, 4) * self.const_k() - rat(3, 4) * &self.b * self.const_d() - rat(1, 4) * &self.gamma
    }

    /// Case 1: `R = b/4 - 5 beta / (24 alpha)`.
    pub fn case1_r(&self) -> Rational {
        rat(1, 4) * &self.b - rat(5, 24) * &self.beta / &self.alpha
    }

    /// Case 1: `S = -gamma / (3 alpha)`.
    pub fn case1_s(&self) -> Rational {
        -(&self.gamma / (int(3) * &self.alpha))
    }

    /// Case 1: `h` is `(z - w x) / den` once `Fb1 = (3 alpha x + gamma h) / rho`
    /// is substituted in `z = (E - 3/4 bA) x + kappa Fb1 + e h / 4`.
    fn case1_h_parts(&self) -> Option<(Rational, Rational)> {
        let rho = self.rho();
        if rho.is_zero() {
            return None;
        }
        let kappa = self.case1_kappa();
        let w = self.const_e() - rat(3, 4) * &self.b * self.const_a() + int(3) * &self.alpha * &kappa / &rho;
        let den = &kappa * &self.gamma / &rho + rat(1, 4) * &self.e;
        (!den.is_zero()).then_some((w, den))
    }

    pub fn h(&self) -> Result<Polynomial, VerifyError> {
        match self.branch {
            Branch::Proportional => {
                let m = self.case2_m();
                if m.is_zero() {
                    return Err(precondition("case 2 needs M != 0"));
                }
                Ok((z() - x().scale(&self.case2_x_coefficient())).scale(&m.recip()))
            }
            Branch::Span => {
                let (w, den) = self
                    .case1_h_parts()
                    .ok_or_else(|| precondition("case 1 needs 3bC - L/2 != 0 and a nonzero coefficient of h in z"))?;
                Ok((z() - x().scale(&w)).scale(&den.recip()))
            }
            _ => Ok(self.h.clone()),
        }
    }

    pub fn fbar1(&self) -> Result<Polynomial, VerifyError> {
        match self.branch {
            Branch::Proportional => Ok(self.h()?.scale(&self.f)),
            Branch::Span => {
                Ok((&x().scale(&(int(3) * &self.alpha)) + &self.h()?.scale(&self.gamma)).scale(&self.rho().recip()))
            }
            _ => Ok(self.fbar1.clone()),
        }
    }

    pub fn ftilde1(&self) -> Result<Polynomial, VerifyError> {
        if self.branch.barred() {
            Ok(self.h()?.scale(&self.b))
        } else {
            Ok(self.ftilde1.clone())
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        check_level(self.level, 5)?;
        if !self.branch.allowed_at(self.level) {
            return Err(precondition(format!("branch {} is not used at level {}", self.branch, self.level)));
        }
        if self.alpha.is_zero() {
            return Err(precondition("alpha must be nonzero"));
        }
        if self.branch == Branch::Hat && !self.beta.is_zero() {
            return Err(precondition("the hat branch needs beta = 0"));
        }
        if self.level >= 6 {
            check_form("h", &self.h, 1, false)?;
        }
        check_form("Ft2", &self.ftilde2, 2, true)?;
        check_form("Ft1", &self.ftilde1, 1, true)?;
        check_form("Fh1", &self.fhat1, 1, true)?;
        check_form("Fb1", &self.fbar1, 1, true)?;
        self.free.check()?;
        self.h()?;
        Ok(())
    }

    pub fn build(&self) -> Result<(Polynomial, Polynomial), VerifyError> {
        self.validate()?;
        let h = self.h()?;
        let (al, be, l) = (c(&self.alpha), c(&self.beta), self.level);
        let q = |n, d| c(&rat(n, d));
        let ft1 = self.ftilde1()?;
        let fb1 = self.fbar1()?;
        let ft2 = if l <= 7 { &h * &ft1 } else { self.ftilde2.clone() };

        let f4 = h.pow(4);
        let g6 = &al * &h.pow(6);
        let f3 = if l <= 8 { &h * &ft2 } else { self.free.f3.clone() };
        let g5 = &(&(&q(3, 2) * &al) * &(&h.pow(2) * &f3)) + &(&be * &h.pow(5));
        let f2 = match self.branch {
            Branch::Hat => &q(1, 4) * &(&ft1.pow(2) + &(&h * &self.fhat1)),
            b if b.barred() => &h * &fb1,
            _ => self.free.f2.clone(),
        };
        let g4 = if l <= 8 {
            let mut g4 = &(&q(3, 8) * &al) * &ft2.pow(2);
            g4 += &(&(&q(5, 4) * &be) * &(&h.pow(2) * &ft2));
            g4 += &(&(&q(3, 2) * &al) * &(&h.pow(2) * &f2));
            g4 += &h.pow(4).scale(&(rat(1, 4) * &self.a));
            g4
        } else {
            self.free.g4.clone()
        };
        let g3 = if l <= 7 {
            let mut g3 = &(&q(5, 32) * &be) * &(&h * &ft1.pow(2));
            g3 += &(&h.pow(2) * &ft1).scale(&(rat(1, 4) * &self.a));
            g3 += &(&(&q(-1, 16) * &al) * &ft1.pow(3));
            g3 += &(&(&q(5, 4) * &be) * &(&h * &f2));
            g3 += &(&(&q(3, 2) * &al) * &(&h.pow(2) * &x()));
            g3 += &(&(&q(3, 4) * &al) * &(&f2 * &ft1));
            g3 += &h.pow(3).scale(&(rat(1, 4) * &self.c));
            g3
        } else {
            self.free.g3.clone()
        };
        let g2 = match self.branch {
            Branch::Hat => {
                let mut g2 = (&h * &ft1).scale(&(rat(3, 16) * &self.c));
                g2 += &(&(&q(3, 128) * &al) * &self.fhat1.pow(2));
                g2 += &(&ft1.pow(2) + &(&h * &self.fhat1)).scale(&(rat(1, 16) * &self.a));
                g2 += &(&(&q(3, 4) * &al) * &(&x() * &ft1));
                g2 += &h.pow(2).scale(&(rat(1, 4) * &self.d));
                g2
            }
            b if b.barred() => {
                let mut g2 = (&h * &x()).scale(&self.const_a());
                g2 += &h.pow(2).scale(&self.const_b());
                g2 += &fb1.pow(2).scale(&self.const_c());
                g2 += &(&h * &fb1).scale(&self.const_d());
                g2
            }
            _ => self.free.g2.clone(),
        };
        let f = &(&(&x() + &f2) + &f3) + &f4;
        let g = &(&(&(&(&z() + &g2) + &g3) + &g4) + &g5) + &g6;
        Ok((f, g))
    }

    /// A valid scenario for `branch` (which must be allowed at `level`).
    pub fn random<R: Rng + ?Sized>(rng: &mut R, level: u32, branch: Branch) -> Self {
        assert!(branch.allowed_at(level), "branch {branch} not used at level {level}");
        loop {
            let h = random::nonzero_homogeneous(rng, NVARS, 1, 3);
            let mut s = PowerScenario::new(h, random::nonzero_rational(rng), level, branch);
            if branch != Branch::Hat {
                s.beta = random::small_rational(rng);
            }
            for v in [&mut s.a, &mut s.b, &mut s.c, &mut s.d, &mut s.e, &mut s.f, &mut s.gamma] {
                *v = random::small_rational(rng);
            }
            s.ftilde2 = random::homogeneous(rng, NVARS, 2, 3, 0.6);
            s.ftilde1 = random::homogeneous(rng, NVARS, 1, 3, 0.8);
            s.fhat1 = random::homogeneous(rng, NVARS, 1, 3, 0.8);
            s.fbar1 = random::homogeneous(rng, NVARS, 1, 3, 0.8);
            s.free = FreeParts::random(rng);
            if s.validate().is_ok() {
                return s;
            }
        }
    }

    /// A random branch valid at `level`.
    pub fn random_branch<R: Rng + ?Sized>(rng: &mut R, level: u32) -> Branch {
        let choices: &[Branch] = match level {
            6 => &[Branch::Hat, Branch::Bar],
            5 => &[Branch::Span, Branch::Proportional],
            _ => &[Branch::Upper],
        };
        choices[rng.gen_range(0..choices.len())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Degree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    fn degree(f: &Polynomial, g: &Polynomial) -> Degree {
        bracket_of(f, g).unwrap().degree()
    }

    #[test]
    fn squarefree_level_six_example() {
        let mut s = SquarefreeScenario::new(p("x^2 + y*z"), int(1), 6);
        s.ftilde1 = p("y");
        let (f, g) = s.build().unwrap();
        assert_eq!(f.homogeneous_part(2), p("1/4*y^2"));
        assert!(degree(&f, &g).lt_int(6));
    }

    #[test]
    fn squarefree_level_five_reaches_four() {
        let mut s = SquarefreeScenario::new(p("x^2 + y*z"), int(1), 5);
        s.c = int(4);
        assert_eq!(s.m(), int(1));
        assert_eq!(s.ftilde1().unwrap(), p("z"));
        let (f, g) = s.build().unwrap();
        assert_eq!(degree(&f, &g), Degree::Finite(4));
    }

    #[test]
    fn squarefree_level_five_needs_m() {
        let s = SquarefreeScenario::new(p("x^2 + y*z"), int(1), 5);
        assert!(matches!(s.build(), Err(VerifyError::Precondition(_))));
    }

    #[test]
    fn squarefree_rejects_bad_inputs() {
        assert!(SquarefreeScenario::new(p("x^2"), int(1), 7).build().is_err());
        assert!(SquarefreeScenario::new(p("x^2 + y*z"), int(0), 7).build().is_err());
        assert!(SquarefreeScenario::new(p("x^2 + y*z"), int(1), 4).build().is_err());
        let mut s = SquarefreeScenario::new(p("x^2 + y*z"), int(1), 9);
        s.free.f3 = p("x^2");
        assert!(s.build().is_err());
    }

    #[test]
    fn power_level_six_hat_example() {
        let mut s = PowerScenario::new(p("x"), int(1), 6, Branch::Hat);
        s.ftilde1 = p("y");
        let (f, g) = s.build().unwrap();
        assert!(degree(&f, &g).lt_int(6));
    }

    #[test]
    fn power_case_two_reaches_four() {
        let mut s = PowerScenario::new(p("0"), int(1), 5, Branch::Proportional);
        s.e = int(4);
        assert_eq!(s.case2_m(), int(1));
        let h = s.h().unwrap();
        assert!(h.variables_used().contains(&2));
        let (f, g) = s.build().unwrap();
        assert_eq!(degree(&f, &g), Degree::Finite(4));
    }

    #[test]
    fn power_rejects_zero_alpha_and_wrong_branch() {
        assert!(PowerScenario::new(p("x"), int(0), 8, Branch::Upper).build().is_err());
        assert!(PowerScenario::new(p("x"), int(1), 8, Branch::Hat).build().is_err());
        let mut s = PowerScenario::new(p("x"), int(1), 6, Branch::Hat);
        s.beta = int(1);
        assert!(s.build().is_err());
    }

    #[test]
    fn random_scenarios_respect_their_level() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for level in 5..=9 {
            for _ in 0..3 {
                let (f, g) = SquarefreeScenario::random(&mut rng, level).build().unwrap();
                assert!(degree(&f, &g).lt_int(level), "squarefree level {level}");
                let branch = PowerScenario::random_branch(&mut rng, level);
                let (f, g) = PowerScenario::random(&mut rng, level, branch).build().unwrap();
                assert!(degree(&f, &g).lt_int(level), "power level {level} {branch}");
            }
        }
    }
}
