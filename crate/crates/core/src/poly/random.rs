//! Seeded generators for test and sweep inputs.

use super::{int, LinearMap, Monomial, Polynomial, Rational};
use num_traits::Zero;
use rand::Rng;

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Integer in `[-bound, bound]`.
pub fn small_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

/// Rational with numerator in `[-9, 9]` and denominator in `1..=4`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n = rng.gen_range(-9i64..=9);
    let d = rng.gen_range(1i64..=4);
    super::rat(n, d)
}

pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Homogeneous polynomial of degree `d`; each monomial is present with
/// probability `density` and carries an integer coefficient in `[-bound, bound]`.
pub fn homogeneous<R: Rng + ?Sized>(rng: &mut R, n: usize, d: u32, bound: i64, density: f64) -> Polynomial {
    let mut terms = Vec::new();
    for m in monomials_of_degree(n, d) {
        if rng.gen_bool(density) {
            terms.push((m, small_int(rng, bound)));
        }
    }
    Polynomial::from_terms(n, terms)
}

pub fn nonzero_homogeneous<R: Rng + ?Sized>(rng: &mut R, n: usize, d: u32, bound: i64) -> Polynomial {
    loop {
        let p = homogeneous(rng, n, d, bound, 0.7);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial of degree at most `max_deg` (possibly zero).
pub fn polynomial<R: Rng + ?Sized>(rng: &mut R, n: usize, max_deg: u32, bound: i64, density: f64) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for d in 0..=max_deg {
        p += &homogeneous(rng, n, d, bound, density);
    }
    p
}

/// Homogeneous quadratic that passes the squarefree test.
pub fn squarefree_quadratic<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Polynomial {
    loop {
        let h = homogeneous(rng, n, 2, 3, 0.6);
        if !h.is_zero() && h.is_squarefree().unwrap_or(false) {
            return h;
        }
    }
}

pub fn invertible_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> LinearMap {
    loop {
        let rows = (0..n).map(|_| (0..n).map(|_| small_int(rng, 3)).collect()).collect();
        let l = LinearMap::new(rows).expect("square");
        if !l.determinant().is_zero() {
            return l;
        }
    }
}
