//! Recursive primitive-PRS gcd over `Q[x1..xn]`.
//!
//! The main variable is the highest-indexed variable present; coefficients in
//! the remaining variables are handled by recursion through contents.

use super::{Degree, Monomial, PolyError, Polynomial};

pub(super) fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::GcdOfZeros);
    }
    Ok(gcd_rec(f, g))
}

fn gcd_rec(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let n = f.nvars();
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return Polynomial::one(n);
    }
    let fv = f.variables_used();
    let gv = g.variables_used();
    let v = *fv.union(&gv).max().expect("nonconstant input");
    if !fv.contains(&v) {
        return gcd_rec(f, &content(g, v));
    }
    if !gv.contains(&v) {
        return gcd_rec(&content(f, v), g);
    }

    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_rec(&cf, &cg);
    let mut a = exact(f, &cf);
    let mut b = exact(g, &cg);
    if deg_in(&a, v) < deg_in(&b, v) {
        std::mem::swap(&mut a, &mut b);
    }
    let last = loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            break primitive_part(&b, v);
        }
        if deg_in(&r, v) == 0 {
            break Polynomial::one(n);
        }
        a = b;
        b = primitive_part(&r, v);
    };
    (&c * &last).monic()
}

fn deg_in(p: &Polynomial, v: usize) -> u32 {
    match p.degree_in(v) {
        Degree::Finite(d) => d,
        Degree::NegInf => 0,
    }
}

fn exact(f: &Polynomial, g: &Polynomial) -> Polynomial {
    f.exact_divide(g).expect("same arity, nonzero divisor").exact().expect("content divides its polynomial")
}

/// Coefficients of `p` viewed as a polynomial in `x_v`, lowest power first.
fn coefficients_in(p: &Polynomial, v: usize) -> Vec<Polynomial> {
    let n = p.nvars();
    let mut out = vec![Polynomial::zero(n); deg_in(p, v) as usize + 1];
    for (m, c) in p.terms() {
        let e = m.exponent(v) as usize;
        out[e].add_term(m.with_exponent(v, 0), c.clone());
    }
    out
}

fn leading_coefficient_in(p: &Polynomial, v: usize) -> Polynomial {
    coefficients_in(p, v).pop().expect("nonzero polynomial")
}

fn content(p: &Polynomial, v: usize) -> Polynomial {
    let mut acc = Polynomial::zero(p.nvars());
    for c in coefficients_in(p, v).into_iter().rev() {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

fn primitive_part(p: &Polynomial, v: usize) -> Polynomial {
    exact(p, &content(p, v))
}

/// Pseudo-remainder of `a` by `b` in the variable `x_v`.
fn prem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let n = a.nvars();
    let db = deg_in(b, v);
    let lb = leading_coefficient_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && deg_in(&r, v) >= db {
        let dr = deg_in(&r, v);
        let lr = leading_coefficient_in(&r, v);
        let shift =
            Polynomial::monomial(n, Monomial::var(n, v).checked_pow(dr - db).expect("small exponent"), super::int(1));
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::Polynomial;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    #[test]
    fn documented_examples() {
        assert_eq!(p("x^2 - y^2").gcd(&p("x - y")).unwrap(), p("x - y"));
        assert_eq!(p("x").gcd(&p("z")).unwrap(), p("1"));
        let h = p("x^2 + y*z");
        let f = &h.pow(2) * &p("x");
        let g = &h * &p("z");
        let d = f.gcd(&g).unwrap();
        assert_eq!(d, h);
        assert!(f.exact_divide(&d).unwrap().exact().is_some());
        assert!(g.exact_divide(&d).unwrap().exact().is_some());
    }

    #[test]
    fn zero_cases() {
        assert!(p("0").gcd(&p("0")).is_err());
        assert_eq!(p("0").gcd(&p("2*x + 4*y")).unwrap(), p("x + 2*y"));
        assert_eq!(p("3").gcd(&p("x")).unwrap(), p("1"));
    }

    #[test]
    fn shared_factor_in_two_variables() {
        let a = p("x*y + z^2 - 1");
        let f = &a * &p("x - z");
        let g = &a * &p("y^2 + x");
        assert_eq!(f.gcd(&g).unwrap(), a.monic());
    }
}
