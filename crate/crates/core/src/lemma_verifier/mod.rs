//! Mechanical checks of the lemma chain behind the (4,5,6) theorem.
//!
//! * [`catalog`]: the bracket identities each proof step collapses to,
//!   verified on seeded exact instantiations.
//! * [`scenario`]: forced-form constructions of `(F, G)` at each level.
//! * [`decompose`]: the factorization of the top pair `(F4, G6)`.
//! * [`contradiction`]: the two terminal contradiction arguments.
//! * [`collapse`]: the two-variable collapse when `deg[f,g] = 2`.

pub mod catalog;
pub mod collapse;
pub mod contradiction;
pub mod decompose;
pub mod expr;
pub mod scenario;

pub use catalog::{alternative_readings, catalog, supplementary, IdentityRecord, InputKind, Side};
pub use collapse::{check_poisson2_collapse, CollapseReport};
pub use contradiction::{
    check_contradiction_power, check_contradiction_squarefree, sweep_power, sweep_squarefree, ContradictionReport,
};
pub use decompose::{decompose_top_pair, TopPairDecomposition};
pub use scenario::{Branch, PowerScenario, SquarefreeScenario};

use crate::h_reduction::ReductionError;
use crate::poly::{random, PolyError, Polynomial};
use expr::Env;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Master seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 456;

/// Number of variables identities are instantiated in: `x, y, z`.
pub const NVARS: usize = 3;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("slot {0} is not bound")]
    Unbound(String),
    #[error("{0} does not evaluate to a nonzero constant")]
    NotInvertible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("identity sides differ in kind (bracket vs polynomial)")]
    SideMismatch,
    #[error("trials must be at least 1")]
    NoTrials,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: u64,
    /// Drawn inputs, rendered.
    pub inputs: Vec<(String, String)>,
    /// `lhs - rhs`, rendered.
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub summary: String,
    pub trials: u64,
    pub seed: u64,
    pub passed: u64,
    pub failures: Vec<TrialFailure>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.trials
    }
}

/// Per-trial generator: independent of scheduling, so reports are
/// reproducible under parallel execution.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn draw_inputs<R: Rng>(rec: &IdentityRecord, rng: &mut R) -> Env {
    let mut env = Env::new();
    for (name, kind) in &rec.inputs {
        let value = match kind {
            InputKind::Form(d) => random::homogeneous(rng, NVARS, *d, 5, 0.8),
            InputKind::Scalar => Polynomial::constant(NVARS, random::small_rational(rng)),
            InputKind::NonzeroScalar => Polynomial::constant(NVARS, random::nonzero_rational(rng)),
        };
        env.insert(name.clone(), value);
    }
    env
}

/// Evaluates `lhs - rhs` of `rec` on `env`; `None` when it vanishes.
pub fn residual(rec: &IdentityRecord, env: &Env) -> Result<Option<String>, VerifyError> {
    let mut env = env.clone();
    for (name, e) in &rec.definitions {
        let v = e.eval(&env, NVARS)?;
        env.insert(name.clone(), v);
    }
    match (&rec.lhs, &rec.rhs) {
        (Side::Bracket(l), Side::Bracket(r)) => {
            let d = l.eval(&env, NVARS)?.checked_add(&-&r.eval(&env, NVARS)?)?;
            Ok((!d.is_zero()).then(|| d.to_string().trim_end().replace('\n', "; ")))
        }
        (Side::Poly(l), Side::Poly(r)) => {
            let d = l.eval(&env, NVARS)?.checked_sub(&r.eval(&env, NVARS)?)?;
            Ok((!d.is_zero()).then(|| d.to_string()))
        }
        _ => Err(VerifyError::SideMismatch),
    }
}

/// Checks `rec` on `trials` seeded draws of its inputs.
pub fn verify_record(rec: &IdentityRecord, trials: u64, seed: u64) -> Result<IdentityReport, VerifyError> {
    if trials == 0 {
        return Err(VerifyError::NoTrials);
    }
    let outcomes: Vec<Result<Option<TrialFailure>, VerifyError>> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let env = draw_inputs(rec, &mut trial_rng(seed, trial));
            Ok(residual(rec, &env)?.map(|difference| TrialFailure {
                trial,
                inputs: rec.inputs.iter().map(|(n, _)| (n.clone(), env[n].to_string())).collect(),
                difference,
            }))
        })
        .collect();
    let mut failures = Vec::new();
    for o in outcomes {
        if let Some(f) = o? {
            failures.push(f);
        }
    }
    Ok(IdentityReport {
        id: rec.id.clone(),
        summary: rec.summary.clone(),
        trials,
        seed,
        passed: trials - failures.len() as u64,
        failures,
    })
}

pub fn verify_identity(id: &str, trials: u64, seed: u64) -> Result<IdentityReport, VerifyError> {
    let rec = catalog::find(id).ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))?;
    verify_record(&rec, trials, seed)
}

/// Reports for the main catalog followed by the supplementary identities.
pub fn verify_all(trials: u64, seed: u64) -> Result<Vec<IdentityReport>, VerifyError> {
    catalog().iter().chain(supplementary().iter()).map(|r| verify_record(r, trials, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::expr::{q, slot};
    use super::*;

    #[test]
    fn catalog_ids_are_the_twelve_steps() {
        let ids: Vec<String> = catalog().into_iter().map(|r| r.id).collect();
        assert_eq!(
            ids,
            [
                "SQF-9", "SQF-8", "SQF-7", "SQF-6", "SQF-5", "SQF-4", "PWR-9", "PWR-8", "PWR-7", "PWR-6", "PWR-5",
                "PWR-4"
            ]
        );
        let all = catalog::all_ids();
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn every_catalog_identity_holds() {
        for rec in catalog().iter().chain(supplementary().iter()) {
            let report = verify_record(rec, 10, 7).unwrap();
            assert!(report.ok(), "{}: {:?}", rec.id, report.failures.first());
        }
    }

    #[test]
    fn alternative_readings_split_as_expected() {
        let verdicts: Vec<(String, bool)> =
            alternative_readings().iter().map(|r| (r.id.clone(), verify_record(r, 10, 3).unwrap().ok())).collect();
        for (id, ok) in verdicts {
            let expected = !(id.ends_with("+2bHF2") || id.ends_with("E-3bA"));
            assert_eq!(ok, expected, "{id}");
        }
    }

    #[test]
    fn corrupted_record_fails_with_counterexample() {
        let mut rec = catalog::find("SQF-9").unwrap();
        // G6 = 2 alpha H^3 while the right side still assumes alpha H^3.
        rec.definitions.push(("G6".into(), q(2, 1) * slot("alpha") * slot("H").pow(3)));
        let report = verify_record(&rec, 5, 1).unwrap();
        assert!(!report.ok());
        assert!(!report.failures[0].difference.is_empty());
    }

    #[test]
    fn unknown_ids_and_zero_trials() {
        assert!(matches!(verify_identity("SQF-3", 1, 0), Err(VerifyError::UnknownIdentity(_))));
        assert!(matches!(verify_identity("SQF-9", 0, 0), Err(VerifyError::NoTrials)));
    }

    #[test]
    fn reports_do_not_depend_on_scheduling() {
        let a = verify_identity("PWR-8", 6, 99).unwrap();
        let b = verify_identity("PWR-8", 6, 99).unwrap();
        assert_eq!(a, b);
    }
}
