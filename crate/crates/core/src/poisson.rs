//! Formal Poisson bracket
//! `[f,g] = sum_{i<j} (f_i g_j - f_j g_i) [x_i, x_j]`, where each symbol
//! `[x_i, x_j]` has degree 2.

use crate::poly::{Degree, PolyError, Polynomial};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Only pairs `i < j` are stored, and only when nonzero, so equality is
/// structural and the zero bracket is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalBracket {
    nvars: usize,
    components: BTreeMap<(usize, usize), Polynomial>,
}

impl FormalBracket {
    pub fn zero(nvars: usize) -> Self {
        FormalBracket { nvars, components: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Coefficient of `[x_i, x_j]`; reading `(j, i)` gives the negation.
    pub fn component(&self, i: usize, j: usize) -> Polynomial {
        if i < j {
            self.components.get(&(i, j)).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
        } else if i > j {
            -self.component(j, i)
        } else {
            Polynomial::zero(self.nvars)
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&(usize, usize), &Polynomial)> {
        self.components.iter()
    }

    fn insert(&mut self, key: (usize, usize), p: Polynomial) {
        if p.is_zero() {
            self.components.remove(&key);
        } else {
            self.components.insert(key, p);
        }
    }

    pub fn degree(&self) -> Degree {
        self.components.values().map(Polynomial::total_degree).max().unwrap_or(Degree::NegInf).plus(2)
    }

    pub fn checked_add(&self, other: &FormalBracket) -> Result<FormalBracket, PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableCountMismatch(self.nvars, other.nvars));
        }
        let mut out = self.clone();
        for (k, v) in &other.components {
            let sum = &out.component(k.0, k.1) + v;
            out.insert(*k, sum);
        }
        Ok(out)
    }

    pub fn scale_by_poly(&self, p: &Polynomial) -> Result<FormalBracket, PolyError> {
        if self.nvars != p.nvars() {
            return Err(PolyError::VariableCountMismatch(p.nvars(), self.nvars));
        }
        let mut out = FormalBracket::zero(self.nvars);
        for (k, v) in &self.components {
            out.insert(*k, p * v);
        }
        Ok(out)
    }

    /// Part of bracket degree exactly `d`, i.e. components of degree `d - 2`.
    pub fn homogeneous_part(&self, d: u32) -> FormalBracket {
        let mut out = FormalBracket::zero(self.nvars);
        if d < 2 {
            return out;
        }
        for (k, v) in &self.components {
            out.insert(*k, v.homogeneous_part(d - 2));
        }
        out
    }
}

pub fn bracket(f: &Polynomial, g: &Polynomial) -> Result<FormalBracket, PolyError> {
    if f.nvars() != g.nvars() {
        return Err(PolyError::VariableCountMismatch(f.nvars(), g.nvars()));
    }
    let n = f.nvars();
    let df: Vec<Polynomial> = (0..n).map(|i| f.diff(i)).collect();
    let dg: Vec<Polynomial> = (0..n).map(|i| g.diff(i)).collect();
    let mut out = FormalBracket::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            let c = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
            out.insert((i, j), c);
        }
    }
    Ok(out)
}

/// `bracket` for operands already known to share a variable count.
pub fn br(f: &Polynomial, g: &Polynomial) -> FormalBracket {
    bracket(f, g).unwrap_or_else(|e| panic!("{e}"))
}

impl Add for &FormalBracket {
    type Output = FormalBracket;
    fn add(self, rhs: &FormalBracket) -> FormalBracket {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for FormalBracket {
    type Output = FormalBracket;
    fn add(self, rhs: FormalBracket) -> FormalBracket {
        &self + &rhs
    }
}

impl Neg for &FormalBracket {
    type Output = FormalBracket;
    fn neg(self) -> FormalBracket {
        FormalBracket { nvars: self.nvars, components: self.components.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl Sub for &FormalBracket {
    type Output = FormalBracket;
    fn sub(self, rhs: &FormalBracket) -> FormalBracket {
        self + &-rhs
    }
}

impl Sub for FormalBracket {
    type Output = FormalBracket;
    fn sub(self, rhs: FormalBracket) -> FormalBracket {
        &self - &rhs
    }
}

impl fmt::Display for FormalBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), p) in &self.components {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "[{},{}]: {}", Polynomial::var_name(self.nvars, *i), Polynomial::var_name(self.nvars, *j), p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FormalBracket{{{}}}", self.to_string().replace('\n', "; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn generators() {
        let b = br(&p("x"), &p("y"));
        assert_eq!(b.component(0, 1), p("1"));
        assert!(b.component(0, 2).is_zero() && b.component(1, 2).is_zero());
        assert_eq!(b.component(1, 0), p("-1"));
        assert_eq!(b.degree(), Degree::Finite(2));
    }

    #[test]
    fn self_bracket_vanishes() {
        let f = p("x^2*y + z - 3");
        let b = br(&f, &f);
        assert!(b.is_zero());
        assert_eq!(b.degree(), Degree::NegInf);
    }

    #[test]
    fn power_rule_example() {
        let b = br(&p("x^2"), &p("y"));
        assert_eq!(b.component(0, 1), p("2*x"));
        assert_eq!(b.degree(), Degree::Finite(3));
        assert_eq!(b.to_string(), "[x,y]: 2*x");
    }

    #[test]
    fn combinators() {
        assert!((br(&p("x"), &p("y")) + br(&p("y"), &p("x"))).is_zero());
        let b = br(&p("x*z"), &p("y^2"));
        assert_eq!(&b + &FormalBracket::zero(3), b);
        // [P, QR] = Q[P,R] + R[P,Q]
        let (pp, q, r) = (p("x^2 + y*z"), p("x - z"), p("y^2 + 1"));
        let lhs = br(&pp, &(&q * &r));
        let rhs = &br(&pp, &r).scale_by_poly(&q).unwrap() + &br(&pp, &q).scale_by_poly(&r).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(bracket(&Polynomial::var(3, 0), &Polynomial::var(2, 0)).is_err());
    }
}
