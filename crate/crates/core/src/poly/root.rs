//! Exact k-th roots.
//!
//! Terms of the root are recovered one at a time in descending graded-lex
//! order: if `h = t0 + t1 + ...` then the leading term of `f - (t0+..+tj)^k`
//! is `k * t0^(k-1) * t(j+1)`. Every candidate is checked by exact
//! re-expansion, so a `Root::Exact` answer always satisfies `h^k == f`.

use super::{Monomial, PolyError, Polynomial, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Root {
    Exact(Polynomial),
    NotAPower,
}

impl Root {
    pub fn exact(self) -> Option<Polynomial> {
        match self {
            Root::Exact(h) => Some(h),
            Root::NotAPower => None,
        }
    }
}

fn int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return int_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Rational k-th root; for even `k` the positive one.
pub(crate) fn rational_root(c: &Rational, k: u32) -> Option<Rational> {
    let n = int_root(c.numer(), k)?;
    let d = int_root(c.denom(), k)?;
    Some(Rational::new(n, d))
}

pub(super) fn kth_root(f: &Polynomial, k: u32) -> Result<Root, PolyError> {
    if k == 0 {
        return Err(PolyError::ZeroRootIndex);
    }
    let n = f.nvars();
    if k == 1 || f.is_zero() {
        return Ok(Root::Exact(f.clone()));
    }
    let (lm, lc) = f.leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
    if lm.degree() % k != 0 {
        return Ok(Root::NotAPower);
    }
    let (Some(m0), Some(c0)) = (lm.root(k), rational_root(&lc, k)) else {
        return Ok(Root::NotAPower);
    };
    // Denominator of every subsequent term: k * t0^(k-1).
    let dm = m0.checked_pow(k - 1).ok_or(PolyError::ExponentOverflow)?;
    let dc = Rational::from_integer(k.into()) * num_traits::pow(c0.clone(), (k - 1) as usize);

    let mut h = Polynomial::monomial(n, m0.clone(), c0);
    let mut last: Monomial = m0;
    loop {
        let r = f - &h.pow(k);
        let Some((rm, rc)) = r.leading_term() else {
            return Ok(Root::Exact(h));
        };
        let Some(tm) = rm.divide(&dm) else {
            return Ok(Root::NotAPower);
        };
        if tm >= last {
            return Ok(Root::NotAPower);
        }
        let tc = rc / &dc;
        debug_assert!(!tc.is_zero());
        h += &Polynomial::monomial(n, tm.clone(), tc);
        last = tm;
    }
}
