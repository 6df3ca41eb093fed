//! Expression trees over named slots, evaluated to exact polynomials.
//!
//! Scalars are slots bound to constant polynomials, so `alpha * H^2` and
//! `F3 * G5` are the same kind of node.

use super::VerifyError;
use crate::poisson::{bracket, FormalBracket};
use crate::poly::{rat, Polynomial, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Env = BTreeMap<String, Polynomial>;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Slot(String),
    Var(usize),
    Const(Rational),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
    /// Reciprocal of a nonzero constant.
    Recip(Box<Expr>),
}

pub fn slot(name: &str) -> Expr {
    Expr::Slot(name.to_string())
}

pub fn q(n: i64, d: i64) -> Expr {
    Expr::Const(rat(n, d))
}

pub fn var(i: usize) -> Expr {
    Expr::Var(i)
}

impl Expr {
    pub fn pow(self, k: u32) -> Expr {
        Expr::Pow(Box::new(self), k)
    }

    pub fn recip(self) -> Expr {
        Expr::Recip(Box::new(self))
    }

    pub fn eval(&self, env: &Env, nvars: usize) -> Result<Polynomial, VerifyError> {
        Ok(match self {
            Expr::Slot(name) => env.get(name).cloned().ok_or_else(|| VerifyError::Unbound(name.clone()))?,
            Expr::Var(i) => Polynomial::var(nvars, *i),
            Expr::Const(c) => Polynomial::constant(nvars, c.clone()),
            Expr::Sum(items) => {
                let mut acc = Polynomial::zero(nvars);
                for e in items {
                    acc += &e.eval(env, nvars)?;
                }
                acc
            }
            Expr::Product(items) => {
                let mut acc = Polynomial::one(nvars);
                for e in items {
                    acc = &acc * &e.eval(env, nvars)?;
                }
                acc
            }
            Expr::Pow(base, k) => base.eval(env, nvars)?.pow(*k),
            Expr::Recip(inner) => {
                let v = inner.eval(env, nvars)?;
                match v.as_constant() {
                    Some(c) if !c.is_zero() => Polynomial::constant(nvars, c.recip()),
                    _ => return Err(VerifyError::NotInvertible(inner.to_string())),
                }
            }
        })
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Sum(_) => 0,
            Expr::Product(_) => 1,
            Expr::Const(c) if !c.denom().is_one() => 1,
            Expr::Const(c) if c < &Rational::zero() => 0,
            _ => 2,
        }
    }
}

fn flatten_sum(a: Expr, b: Expr) -> Expr {
    let mut items = Vec::new();
    for e in [a, b] {
        match e {
            Expr::Sum(v) => items.extend(v),
            other => items.push(other),
        }
    }
    Expr::Sum(items)
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        flatten_sum(self, rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Const(c) => Expr::Const(-c),
            Expr::Product(mut v) if matches!(v.first(), Some(Expr::Const(_))) => {
                if let Expr::Const(c) = &mut v[0] {
                    *c = -c.clone();
                }
                Expr::Product(v)
            }
            other => Expr::Product(vec![q(-1, 1), other]),
        }
    }
}

/// Splits a leading negative constant off for printing.
fn sign_split(e: &Expr) -> (bool, Expr) {
    match e {
        Expr::Const(c) if c < &Rational::zero() => (true, Expr::Const(-c.clone())),
        Expr::Product(v) => match v.first() {
            Some(Expr::Const(c)) if c < &Rational::zero() => {
                let mut w = v.clone();
                w[0] = Expr::Const(-c.clone());
                (true, Expr::Product(w))
            }
            _ => (false, e.clone()),
        },
        _ => (false, e.clone()),
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + -rhs
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        let mut items = Vec::new();
        for e in [self, rhs] {
            match e {
                Expr::Product(v) => items.extend(v),
                other => items.push(other),
            }
        }
        Expr::Product(items)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Slot(s) => f.write_str(s),
            Expr::Var(i) => f.write_str(&Polynomial::var_name(3.max(*i + 1), *i)),
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Sum(items) => {
                for (k, e) in items.iter().enumerate() {
                    let (neg, abs) = sign_split(e);
                    match (k, neg) {
                        (0, true) => f.write_str("-")?,
                        (0, false) => {}
                        (_, true) => f.write_str(" - ")?,
                        (_, false) => f.write_str(" + ")?,
                    }
                    write!(f, "{abs}")?;
                }
                Ok(())
            }
            Expr::Product(items) => {
                let mut first = true;
                for (k, e) in items.iter().enumerate() {
                    if k == 0 && items.len() > 1 {
                        if let Expr::Const(c) = e {
                            if c.is_one() {
                                continue;
                            }
                            if *c == -Rational::one() {
                                f.write_str("-")?;
                                continue;
                            }
                        }
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if e.precedence() < 2 {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            Expr::Pow(b, k) => {
                if b.precedence() < 2 {
                    write!(f, "({b})^{k}")
                } else {
                    write!(f, "{b}^{k}")
                }
            }
            Expr::Recip(b) => write!(f, "1/({b})"),
        }
    }
}

/// A linear combination of brackets with polynomial coefficients.
#[derive(Clone, Debug, PartialEq)]
pub enum BracketExpr {
    Bracket(Expr, Expr),
    Sum(Vec<BracketExpr>),
    Scaled(Expr, Box<BracketExpr>),
}

pub fn br(a: Expr, b: Expr) -> BracketExpr {
    BracketExpr::Bracket(a, b)
}

impl BracketExpr {
    pub fn eval(&self, env: &Env, nvars: usize) -> Result<FormalBracket, VerifyError> {
        Ok(match self {
            BracketExpr::Bracket(a, b) => bracket(&a.eval(env, nvars)?, &b.eval(env, nvars)?)?,
            BracketExpr::Sum(items) => {
                let mut acc = FormalBracket::zero(nvars);
                for e in items {
                    acc = acc.checked_add(&e.eval(env, nvars)?)?;
                }
                acc
            }
            BracketExpr::Scaled(c, inner) => inner.eval(env, nvars)?.scale_by_poly(&c.eval(env, nvars)?)?,
        })
    }
}

impl Add for BracketExpr {
    type Output = BracketExpr;
    fn add(self, rhs: BracketExpr) -> BracketExpr {
        let mut items = Vec::new();
        for e in [self, rhs] {
            match e {
                BracketExpr::Sum(v) => items.extend(v),
                other => items.push(other),
            }
        }
        BracketExpr::Sum(items)
    }
}

impl Neg for BracketExpr {
    type Output = BracketExpr;
    fn neg(self) -> BracketExpr {
        BracketExpr::Scaled(q(-1, 1), Box::new(self))
    }
}

impl Sub for BracketExpr {
    type Output = BracketExpr;
    fn sub(self, rhs: BracketExpr) -> BracketExpr {
        self + -rhs
    }
}

impl Mul<BracketExpr> for Expr {
    type Output = BracketExpr;
    fn mul(self, rhs: BracketExpr) -> BracketExpr {
        BracketExpr::Scaled(self, Box::new(rhs))
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketExpr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            BracketExpr::Sum(items) => {
                for (k, e) in items.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
            BracketExpr::Scaled(c, inner) => match **inner {
                BracketExpr::Sum(_) => write!(f, "({c})*({inner})"),
                _ => write!(f, "({c})*{inner}"),
            },
        }
    }
}
