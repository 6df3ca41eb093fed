//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are indexed from zero. With three or fewer variables they print
//! as `x`, `y`, `z`; otherwise as `x1 .. xn`.

mod degree;
mod gcd;
mod linear;
mod monomial;
mod parse;
pub mod random;
mod root;

pub use degree::Degree;
pub use linear::LinearMap;
pub use monomial::Monomial;
pub use parse::ParseError;
pub use root::Root;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use thiserror::Error;

pub type Rational = BigRational;

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdOfZeros,
    #[error("squarefree test on a constant polynomial")]
    ConstantInput,
    #[error("root index must be positive")]
    ZeroRootIndex,
    #[error("singular linear change of variables")]
    SingularMatrix,
    #[error("matrix must be {0}x{0}")]
    MatrixShape(usize),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Outcome of exact division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Division {
    Exact(Polynomial),
    Indivisible,
}

impl Division {
    pub fn exact(self) -> Option<Polynomial> {
        match self {
            Division::Exact(q) => Some(q),
            Division::Indivisible => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars, "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable `x_i` (zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range");
        Polynomial::monomial(nvars, Monomial::var(nvars, i), Rational::one())
    }

    /// Builds from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Degree {
        match self.terms.keys().map(Monomial::degree).max() {
            Some(d) => Degree::Finite(d),
            None => Degree::NegInf,
        }
    }

    /// Degree as an integer; the zero polynomial panics.
    pub fn degree_u32(&self) -> u32 {
        self.total_degree().finite().expect("degree of zero polynomial")
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_insert_with(|| Polynomial::zero(self.nvars)).terms.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn variables_used(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for m in self.terms.keys() {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    out.insert(i);
                }
            }
        }
        out
    }

    /// Degree in the single variable `x_i`.
    pub fn degree_in(&self, i: usize) -> Degree {
        match self.terms.keys().map(|m| m.exponent(i)).max() {
            Some(d) => Degree::Finite(d),
            None => Degree::NegInf,
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::VariableCountMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.checked_mul(m2).ok_or(PolyError::ExponentOverflow)?;
                out.add_term(m, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial, PolyError> {
        if i >= self.nvars {
            return Err(PolyError::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(m.with_exponent(i, e - 1), c * Rational::from_integer(e.into()));
            }
        }
        Ok(out)
    }

    /// Partial derivative for an index already known to be in range.
    pub fn diff(&self, i: usize) -> Polynomial {
        self.partial_derivative(i).expect("derivative index in range")
    }

    /// Quotient `q` with `q * g == self`, or `Indivisible`.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Division, PolyError> {
        self.check_same(g)?;
        let (lm, lc) = match g.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut r = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((rm, rc)) = r.leading_term() {
            let Some(tm) = rm.divide(&lm) else {
                return Ok(Division::Indivisible);
            };
            let tc = rc / &lc;
            for (gm, gc) in &g.terms {
                r.add_term(tm.mul(gm), -(&tc * gc));
            }
            q.add_term(tm, tc);
        }
        Ok(Division::Exact(q))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Substitutes `x_i -> images[i]` for every variable.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::MatrixShape(self.nvars));
        }
        let target = images.first().map(|p| p.nvars).unwrap_or(self.nvars);
        for p in images {
            if p.nvars != target {
                return Err(PolyError::VariableCountMismatch(target, p.nvars));
            }
        }
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            out += &t;
        }
        Ok(out)
    }

    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        gcd::gcd(self, other)
    }

    pub fn is_squarefree(&self) -> Result<bool, PolyError> {
        if self.is_constant() {
            return Err(PolyError::ConstantInput);
        }
        let mut g = self.clone();
        for i in 0..self.nvars {
            let d = self.diff(i);
            if d.is_zero() {
                continue;
            }
            g = gcd::gcd(&g, &d)?;
            if g.is_constant() {
                return Ok(true);
            }
        }
        Ok(g.is_constant())
    }

    pub fn kth_root(&self, k: u32) -> Result<Root, PolyError> {
        root::kth_root(self, k)
    }

    pub fn apply_linear_change(&self, l: &LinearMap) -> Result<Polynomial, PolyError> {
        l.apply(self)
    }

    /// Evaluation at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point arity");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        acc
    }

    pub fn parse(text: &str, nvars: usize) -> Result<Polynomial, PolyError> {
        Ok(parse::parse(text, nvars)?)
    }

    pub fn var_name(nvars: usize, i: usize) -> String {
        if nvars <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(Polynomial::var_name(self.nvars, i)),
                    _ => factors.push(format!("{}^{}", Polynomial::var_name(self.nvars, i), e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", a, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn ring_examples() {
        assert!((p("x") + p("-x")).is_zero());
        assert_eq!(p("x + y") * p("x - y"), p("x^2 - y^2"));
        assert_eq!(p("2*x").scale(&rat(3, 2)), p("3*x"));
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x^2*y").diff(0), p("2*x*y"));
        assert!(p("z^3").diff(0).is_zero());
        assert_eq!(p("x^2 + y*z").diff(1), p("z"));
        assert!(matches!(p("x").partial_derivative(3), Err(PolyError::IndexOutOfRange { .. })));
    }

    #[test]
    fn components_and_degrees() {
        let c = p("x + y*z + x^3").homogeneous_components();
        assert_eq!(c.len(), 3);
        assert_eq!(c[&2], p("y*z"));
        assert!(p("0").homogeneous_components().is_empty());
        assert_eq!(p("x + x^4").total_degree(), Degree::Finite(4));
        assert_eq!(p("0").total_degree(), Degree::NegInf);
    }

    #[test]
    fn division() {
        assert_eq!(p("x^2 - y^2").exact_divide(&p("x - y")).unwrap(), Division::Exact(p("x + y")));
        assert_eq!(p("x^2").exact_divide(&p("y")).unwrap(), Division::Indivisible);
        assert_eq!(p("0").exact_divide(&p("x + z")).unwrap(), Division::Exact(p("0")));
        assert_eq!(p("x").exact_divide(&p("0")), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn variables() {
        assert_eq!(p("x + z^2").variables_used(), [0, 2].into_iter().collect());
        assert!(p("0").variables_used().is_empty());
        assert_eq!(p("y").variables_used(), [1].into_iter().collect());
    }

    #[test]
    fn mismatched_arity_is_an_error() {
        let a = Polynomial::var(3, 0);
        let b = Polynomial::var(4, 0);
        assert_eq!(a.checked_add(&b), Err(PolyError::VariableCountMismatch(3, 4)));
    }

    #[test]
    fn squarefree_examples() {
        assert!(p("x^2 + y*z").is_squarefree().unwrap());
        assert!(!p("x^2").is_squarefree().unwrap());
        assert!(!(p("x + y").pow(2) * p("z")).is_squarefree().unwrap());
        assert_eq!(p("3").is_squarefree(), Err(PolyError::ConstantInput));
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p("-z^3 + 3/2*x^2*y").to_string(), "3/2*x^2*y - z^3");
        assert_eq!(p("-x - 1").to_string(), "-x - 1");
        assert_eq!(p("y - 1 + x^2").to_string(), "x^2 + y - 1");
        assert_eq!(p("0").to_string(), "0");
    }
}
