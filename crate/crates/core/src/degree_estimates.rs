//! The Shestakov–Umirbaev lower bound and the elementary-reduction case
//! analysis built on it.
//!
//! For a p-reduced pair `(f, g)` with `deg f < deg g`, `p = deg f / gcd(deg f, deg g)`
//! and a two-variable `G` with `deg_y G = pq + r`, `0 <= r < p`:
//!
//! ```text
//! deg G(f, g) >= q (p deg g - deg g - deg f + deg[f,g]) + r deg g
//! ```

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("need deg f < deg g, got {0} and {1}")]
    DegreeOrder(u32, u32),
    #[error("degrees must be positive")]
    ZeroDegree,
    #[error("r = {r} must be below p = {p}")]
    RemainderTooLarge { r: u32, p: u32 },
    #[error("bracket degree must be at least 2, got {0}")]
    BracketTooSmall(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBoundQuery {
    pub deg_f: u32,
    pub deg_g: u32,
    pub deg_bracket: u32,
    pub q: u32,
    pub r: u32,
}

impl DegreeBoundQuery {
    pub fn p(&self) -> u32 {
        self.deg_f / self.deg_f.gcd(&self.deg_g)
    }
}

fn check_degrees(deg_f: u32, deg_g: u32, deg_bracket: u32) -> Result<(), BoundError> {
    if deg_f == 0 || deg_g == 0 {
        return Err(BoundError::ZeroDegree);
    }
    if deg_f >= deg_g {
        return Err(BoundError::DegreeOrder(deg_f, deg_g));
    }
    if deg_bracket < 2 {
        return Err(BoundError::BracketTooSmall(deg_bracket));
    }
    Ok(())
}

/// `q (p deg g - deg g - deg f + deg[f,g])`; may be negative when `p = 1`.
fn q_coefficient(deg_f: u32, deg_g: u32, deg_bracket: u32, p: u32) -> i64 {
    (p as i64) * (deg_g as i64) - deg_g as i64 - deg_f as i64 + deg_bracket as i64
}

pub fn su_lower_bound(query: &DegreeBoundQuery) -> Result<i64, BoundError> {
    check_degrees(query.deg_f, query.deg_g, query.deg_bracket)?;
    let p = query.p();
    if query.r >= p {
        return Err(BoundError::RemainderTooLarge { r: query.r, p });
    }
    Ok(query.q as i64 * q_coefficient(query.deg_f, query.deg_g, query.deg_bracket, p)
        + query.r as i64 * query.deg_g as i64)
}

/// Whether `n = s a + t b` for some `s, t >= 0`.
pub fn semigroup_member(a: u32, b: u32, n: u32) -> bool {
    assert!(a >= 1 && b >= 1, "generators must be positive");
    (0..=n / a).any(|s| (n - s * a) % b == 0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub q: u32,
    pub r: u32,
    pub y_degree: u32,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    /// Some shape with `q >= 1` survives: terms `g_t(f) g^t` with `t` differing
    /// by `p` share degrees and may cancel, so the bound excludes nothing more.
    CancellationPossible { shape: Shape },
    /// `q` is unbounded because the q-coefficient is not positive.
    UnboundedQuotient { coefficient: i64 },
    /// Only `q = 0` survives, so `deg g(f1,f2)` lies in the listed degree classes.
    Reachable { max_y_degree: u32, target_reachable: bool, witness: Option<(u32, u32)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub target: u32,
    pub deg_f: u32,
    pub deg_g: u32,
    pub min_bracket: u32,
    pub p: u32,
    pub surviving: Vec<Shape>,
    /// Shapes on the boundary of the survivors; every shape with larger `q`
    /// (same `r`) is excluded by monotonicity of the bound.
    pub excluded: Vec<Shape>,
    pub reason: Reason,
    pub assumption: String,
}

impl FeasibilityVerdict {
    /// Human-readable trace of the case analysis.
    pub fn explain(&self) -> Vec<String> {
        let mut out = vec![format!(
            "target {} over degrees ({}, {}), deg[f,g] >= {}, p = {}",
            self.target, self.deg_f, self.deg_g, self.min_bracket, self.p
        )];
        for s in &self.excluded {
            out.push(format!("  excluded q={} r={}: bound {} > {}", s.q, s.r, s.bound, self.target));
        }
        for s in &self.surviving {
            out.push(format!("  survives q={} r={}: bound {} <= {}", s.q, s.r, s.bound, self.target));
        }
        match &self.reason {
            Reason::CancellationPossible { shape } => out.push(format!(
                "  shape q={} r={} allows cancellation of top terms; the bound does not exclude a reduction",
                shape.q, shape.r
            )),
            Reason::UnboundedQuotient { coefficient } => {
                out.push(format!("  q-coefficient {coefficient} <= 0; q is unbounded"))
            }
            Reason::Reachable { max_y_degree, target_reachable, witness } => {
                let classes: Vec<String> = (0..=*max_y_degree)
                    .map(|t| {
                        if t == 0 {
                            format!("{}N", self.deg_f)
                        } else {
                            format!("{}+{}N", t * self.deg_g, self.deg_f)
                        }
                    })
                    .collect();
                out.push(format!("  deg g(f1,f2) lies in {}", classes.join(" U ")));
                match (target_reachable, witness) {
                    (true, Some((s, t))) => out
                        .push(format!("  {} = {}*{} + {}*{} is reachable", self.target, s, self.deg_f, t, self.deg_g)),
                    _ => out.push(format!("  {} is not in that set: contradiction", self.target)),
                }
            }
        }
        out.push(format!("  verdict: {}", if self.feasible { "feasible" } else { "infeasible" }));
        out
    }
}

/// Can an elementary reduction bring a coordinate to degree `target` through
/// `g(f1, f2)` with `deg f1 = deg_f < deg f2 = deg_g` and `deg[f1,f2] >= min_bracket`?
pub fn elementary_reduction_feasible(
    target: u32,
    deg_f: u32,
    deg_g: u32,
    min_bracket: u32,
) -> Result<FeasibilityVerdict, BoundError> {
    check_degrees(deg_f, deg_g, min_bracket)?;
    let p = deg_f / deg_f.gcd(&deg_g);
    let coef = q_coefficient(deg_f, deg_g, min_bracket, p);
    let bound = |q: u32, r: u32| q as i64 * coef + r as i64 * deg_g as i64;
    let shape = |q: u32, r: u32| Shape { q, r, y_degree: p * q + r, bound: bound(q, r) };
    let assumption = format!(
        "for y-degree below p = {p} the terms g_t(f1) f2^t have pairwise distinct degrees, so deg g(f1,f2) = s*{deg_f} + t*{deg_g}"
    );

    let mut verdict = FeasibilityVerdict {
        feasible: true,
        target,
        deg_f,
        deg_g,
        min_bracket,
        p,
        surviving: Vec::new(),
        excluded: Vec::new(),
        reason: Reason::UnboundedQuotient { coefficient: coef },
        assumption,
    };

    if coef <= 0 {
        verdict.surviving = (0..p).filter(|&r| bound(0, r) <= target as i64).map(|r| shape(0, r)).collect();
        return Ok(verdict);
    }

    for r in 0..p {
        let mut q = 0;
        while bound(q, r) <= target as i64 {
            verdict.surviving.push(shape(q, r));
            q += 1;
        }
        verdict.excluded.push(shape(q, r));
    }
    verdict.surviving.sort_by_key(|s| (s.q, s.r));
    verdict.excluded.sort_by_key(|s| (s.q, s.r));

    if let Some(s) = verdict.surviving.iter().find(|s| s.q >= 1) {
        verdict.reason = Reason::CancellationPossible { shape: s.clone() };
        return Ok(verdict);
    }
    let max_y = verdict.surviving.iter().map(|s| s.r).max().expect("q = r = 0 always survives");
    let witness = (0..=max_y).find_map(|t| {
        let rest = (target as i64) - (t * deg_g) as i64;
        (rest >= 0 && rest % deg_f as i64 == 0).then(|| ((rest / deg_f as i64) as u32, t))
    });
    verdict.feasible = witness.is_some();
    verdict.reason = Reason::Reachable { max_y_degree: max_y, target_reachable: witness.is_some(), witness };
    Ok(verdict)
}
