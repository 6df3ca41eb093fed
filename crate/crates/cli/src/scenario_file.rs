//! `key = value` scenario files.
//!
//! ```text
//! # squarefree chain at level 5
//! branch = squarefree
//! level = 5
//! H = x^2 + y*z
//! alpha = 1
//! c = 4
//! ```
//!
//! `branch` is `squarefree` or one of the power branches `upper`, `hat`,
//! `bar`, `span`, `proportional`. Scalars are rationals like `-3/4`;
//! polynomials use the usual grammar in `x, y, z`. Omitted values are zero.

use mdeg_core::lemma_verifier::scenario::FreeParts;
use mdeg_core::lemma_verifier::{Branch, PowerScenario, SquarefreeScenario, NVARS};
use mdeg_core::{Polynomial, Rational};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scenario {
    Squarefree(SquarefreeScenario),
    Power(PowerScenario),
}

const SCALARS_SQF: &[&str] = &["alpha", "b", "c", "d"];
const POLYS_SQF: &[&str] = &["H", "Ft1"];
const SCALARS_PWR: &[&str] = &["alpha", "beta", "a", "b", "c", "d", "e", "f", "gamma"];
const POLYS_PWR: &[&str] = &["h", "Ft2", "Ft1", "Fh1", "Fb1"];
const FREE: &[&str] = &["F2", "F3", "G2", "G3", "G4"];

fn parse_rational(key: &str, v: &str) -> Result<Rational, String> {
    let p = Polynomial::parse(v, NVARS).map_err(|e| format!("{key}: {e}"))?;
    p.as_constant().ok_or_else(|| format!("{key}: expected a rational, got {v:?}"))
}

fn parse_poly(key: &str, v: &str) -> Result<Polynomial, String> {
    Polynomial::parse(v, NVARS).map_err(|e| format!("{key}: {e}"))
}

fn free_parts(map: &BTreeMap<String, String>) -> Result<FreeParts, String> {
    let mut free = FreeParts::default();
    for (key, slot) in FREE.iter().zip([&mut free.f2, &mut free.f3, &mut free.g2, &mut free.g3, &mut free.g4]) {
        if let Some(v) = map.get(*key) {
            *slot = parse_poly(key, v)?;
        }
    }
    Ok(free)
}

pub fn parse(text: &str) -> Result<Scenario, String> {
    let mut map = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(format!("line {}: duplicate key {}", n + 1, k.trim()));
        }
    }
    let branch = map.remove("branch").ok_or("missing key: branch")?;
    let level: u32 = map.remove("level").ok_or("missing key: level")?.parse().map_err(|e| format!("level: {e}"))?;
    let scalar = |k: &str| map.get(k).map(|v| parse_rational(k, v)).transpose().map(|o| o.unwrap_or_default());
    let poly = |k: &str| {
        map.get(k).map(|v| parse_poly(k, v)).transpose().map(|o| o.unwrap_or_else(|| Polynomial::zero(NVARS)))
    };

    let (scalars, polys) = if branch == "squarefree" { (SCALARS_SQF, POLYS_SQF) } else { (SCALARS_PWR, POLYS_PWR) };
    if let Some(k) = map
        .keys()
        .find(|k| !scalars.contains(&k.as_str()) && !polys.contains(&k.as_str()) && !FREE.contains(&k.as_str()))
    {
        return Err(format!("unknown key {k:?} for branch {branch}"));
    }

    if branch == "squarefree" {
        let mut s = SquarefreeScenario::new(poly("H")?, scalar("alpha")?, level);
        s.b = scalar("b")?;
        s.c = scalar("c")?;
        s.d = scalar("d")?;
        s.ftilde1 = poly("Ft1")?;
        s.free = free_parts(&map)?;
        return Ok(Scenario::Squarefree(s));
    }
    let branch: Branch = branch.parse()?;
    let mut s = PowerScenario::new(poly("h")?, scalar("alpha")?, level, branch);
    s.beta = scalar("beta")?;
    s.a = scalar("a")?;
    s.b = scalar("b")?;
    s.c = scalar("c")?;
    s.d = scalar("d")?;
    s.e = scalar("e")?;
    s.f = scalar("f")?;
    s.gamma = scalar("gamma")?;
    s.ftilde2 = poly("Ft2")?;
    s.ftilde1 = poly("Ft1")?;
    s.fhat1 = poly("Fh1")?;
    s.fbar1 = poly("Fb1")?;
    s.free = free_parts(&map)?;
    Ok(Scenario::Power(s))
}
