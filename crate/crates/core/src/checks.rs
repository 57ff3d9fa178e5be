//! Seeded property-check suites and their JSON reports.
//!
//! Every suite runs `trials` independent trials. Trial `t` draws its inputs
//! from [`Sampler::for_trial`]`(seed, t)`, so the report is the same whether
//! trials run on one thread or many.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::embedding::{is_scalar_by_contraction, lift_if_needed};
use crate::error::AlgebraError;
use crate::inverse::{conjugate, inverse, is_versor};
use crate::multivector::{rational, Multivector};
use crate::projection::{
    check_identities, conjugation_chain, ftopo_residual, idempotent_from_involution, is_idempotent,
    ProjectionKind, ProjectorSpec,
};
use crate::random::{Sampler, VersorFactors};
use crate::signature::{blade_mul, BasisBlade, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckName {
    Ftopo,
    Identities,
    Chain,
    Lemma,
    Nonversor,
    Idempotent,
}

impl CheckName {
    pub const ALL: [CheckName; 6] = [
        CheckName::Ftopo,
        CheckName::Identities,
        CheckName::Chain,
        CheckName::Lemma,
        CheckName::Nonversor,
        CheckName::Idempotent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Ftopo => "ftopo",
            CheckName::Identities => "identities",
            CheckName::Chain => "chain",
            CheckName::Lemma => "lemma",
            CheckName::Nonversor => "nonversor",
            CheckName::Idempotent => "idempotent",
        }
    }

    /// Kinds a suite can run under; empty for suites with no projector.
    pub fn allowed_kinds(self) -> &'static [ProjectionKind] {
        use ProjectionKind::*;
        match self {
            CheckName::Ftopo => &[Inverse, Reverse],
            CheckName::Identities | CheckName::Chain | CheckName::Nonversor => &[Inverse],
            CheckName::Idempotent => &[Reverse],
            CheckName::Lemma => &[],
        }
    }

    fn uses_versor_test(self) -> bool {
        matches!(
            self,
            CheckName::Identities | CheckName::Nonversor | CheckName::Lemma
        )
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("check `{check}` does not run under the {kind} kind")]
    KindNotApplicable {
        check: CheckName,
        kind: ProjectionKind,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub check: CheckName,
    pub sig: Signature,
    /// `None` selects the suite's natural kind.
    pub kind: Option<ProjectionKind>,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub trial: u64,
    pub inputs: Vec<NamedValue>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub algebra: Signature,
    pub kind: String,
    pub trials: u64,
    pub seed: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// How trials are scheduled.
/// The default is parallel when the `parallel` feature is on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

/// Runs `trial` for `0..trials` and returns the results in trial order.
pub fn run_trials<T, F>(exec: Execution, trials: u64, trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => (0..trials).map(trial).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..trials).into_par_iter().map(trial).collect()
        }
    }
}

pub fn run_check(config: &CheckConfig, exec: Execution) -> Result<CheckReport, CheckError> {
    if config.trials == 0 {
        return Err(CheckError::ZeroTrials);
    }
    let allowed = config.check.allowed_kinds();
    let kind = match config.kind {
        Some(k) if !allowed.contains(&k) => {
            return Err(CheckError::KindNotApplicable {
                check: config.check,
                kind: k,
            })
        }
        Some(k) => Some(k),
        None => allowed.first().copied(),
    };

    let sig = config.sig;
    let seed = config.seed;
    let check = config.check;
    let failures: Vec<Failure> = run_trials(exec, config.trials, |t| {
        let mut s = Sampler::for_trial(seed, t);
        let outcome = match check {
            CheckName::Ftopo => ftopo_trial(&mut s, sig, kind.expect("ftopo has a kind"), t),
            CheckName::Identities => identities_trial(&mut s, sig, t),
            CheckName::Chain => chain_trial(&mut s, sig),
            CheckName::Lemma => lemma_trial(&mut s, sig, t),
            CheckName::Nonversor => nonversor_trial(&mut s, sig, t),
            CheckName::Idempotent => idempotent_trial(&mut s, sig, t),
        };
        outcome
            .unwrap_or_else(|e| {
                vec![TrialFailure {
                    inputs: Vec::new(),
                    residual: format!("error: {e}"),
                }]
            })
            .into_iter()
            .map(|f| Failure {
                trial: t,
                inputs: f.inputs,
                residual: f.residual,
            })
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    let mut notes = Vec::new();
    if sig.is_degenerate() && check.uses_versor_test() {
        notes.push(format!(
            "versor and scalar tests on {sig} are evaluated in the lifted algebra Cl({},{},0) and taken as authoritative for the source element",
            sig.p() + sig.r(),
            sig.q() + sig.r()
        ));
    }

    Ok(CheckReport {
        check: check.to_string(),
        algebra: sig,
        kind: kind.map_or_else(|| "none".to_string(), |k| k.to_string()),
        trials: config.trials,
        seed,
        passed: failures.is_empty(),
        failures,
        notes,
    })
}

struct TrialFailure {
    inputs: Vec<NamedValue>,
    residual: String,
}

fn named(pairs: &[(&str, &Multivector)]) -> Vec<NamedValue> {
    pairs
        .iter()
        .map(|(n, v)| NamedValue {
            name: n.to_string(),
            value: v.to_string(),
        })
        .collect()
}

fn fail(pairs: &[(&str, &Multivector)], residual: impl fmt::Display) -> TrialFailure {
    TrialFailure {
        inputs: named(pairs),
        residual: residual.to_string(),
    }
}

type TrialResult = Result<Vec<TrialFailure>, AlgebraError>;

/// Basis blades (other than the scalar) squaring to +1.
fn unit_square_blades(sig: Signature) -> Vec<BasisBlade> {
    sig.blades()
        .skip(1)
        .filter(|&b| {
            let (_, s) = blade_mul(b, b, &sig);
            s == 1
        })
        .collect()
}

/// A random idempotent `(1 + R·u·R⁻¹)/2` with `u² = 1`; falls back to the
/// trivial idempotents 0 and 1 when the algebra has no such `u`.
pub fn random_idempotent(s: &mut Sampler, sig: Signature) -> Result<Multivector, AlgebraError> {
    let candidates = unit_square_blades(sig);
    if candidates.is_empty() || s.chance(0.1) {
        return Ok(if s.chance(0.5) {
            Multivector::zero(sig)
        } else {
            Multivector::one(sig)
        });
    }
    let u0 = Multivector::blade(sig, candidates[s.below(candidates.len())], rational(1, 1));
    let r = s.invertible(sig, 2)?;
    let u = &(&r * &u0) * &inverse(&r)?;
    let a = idempotent_from_involution(&u);
    debug_assert!(is_idempotent(&a));
    Ok(a)
}

fn scaled_versor(
    s: &mut Sampler,
    sig: Signature,
    max_factors: usize,
) -> Result<Multivector, AlgebraError> {
    let max_factors = if sig.p() + sig.q() == 0 {
        0
    } else {
        max_factors
    };
    let v = s.versor(sig, max_factors)?.product();
    Ok(v.scale(&s.nonzero_integer(3)))
}

fn ftopo_trial(s: &mut Sampler, sig: Signature, kind: ProjectionKind, t: u64) -> TrialResult {
    let (a, b) = match kind {
        ProjectionKind::Inverse => match t % 4 {
            0 => (s.invertible(sig, 2)?, s.invertible(sig, 2)?),
            1 => (scaled_versor(s, sig, 3)?, scaled_versor(s, sig, 3)?),
            2 => {
                let ga = s.below(sig.p() + sig.q() + 1);
                let gb = s.below(sig.p() + sig.q() + 1);
                (s.blade(sig, ga)?, s.blade(sig, gb)?)
            }
            _ => (s.invertible(sig, 2)?, scaled_versor(s, sig, 3)?),
        },
        ProjectionKind::Reverse => match t % 5 {
            0 => (Multivector::zero(sig), s.multivector(sig, 2)),
            1 => (random_idempotent(s, sig)?, random_idempotent(s, sig)?),
            2 => (s.multivector(sig, 2), Multivector::zero(sig)),
            3 => (random_idempotent(s, sig)?, s.multivector(sig, 2)),
            _ => (s.multivector(sig, 2), s.multivector(sig, 2)),
        },
    };
    let x = s.multivector(sig, 3);
    let pa = ProjectorSpec::new(a.clone(), kind)?;
    let pb = ProjectorSpec::new(b.clone(), kind)?;
    let residual = ftopo_residual(&pa, &pb, &x)?;
    Ok(if residual.is_zero() {
        vec![]
    } else {
        vec![fail(&[("A", &a), ("B", &b), ("X", &x)], &residual)]
    })
}

/// A pair of invertible blades built from a random orthogonal frame. Even
/// trials satisfy `AB = A∧B` (disjoint factor sets), odd trials `AB = A⌋B`
/// (B extends A by extra factors).
pub fn premise_pair(
    s: &mut Sampler,
    sig: Signature,
    contraction: bool,
) -> Result<(Multivector, Multivector), AlgebraError> {
    let invertible_dims = sig.p() + sig.q();
    let r = scaled_versor(s, sig, 3)?;
    let r_inv = inverse(&r)?;
    let frame: Vec<Multivector> = (0..invertible_dims)
        .map(|i| &(&r * &Multivector::basis_vector(sig, i)) * &r_inv)
        .collect();

    // Assign each frame vector to A, to B, or to neither.
    let mut a = Multivector::one(sig);
    let mut extra = Multivector::one(sig);
    for v in &frame {
        match s.below(3) {
            0 => a = &a * v,
            1 => extra = &extra * v,
            _ => {}
        }
    }
    let a = a.scale(&s.nonzero_integer(3));
    let b = if contraction { &a ^ &extra } else { extra };
    Ok((a, b.scale(&s.nonzero_integer(3))))
}

fn identities_trial(s: &mut Sampler, sig: Signature, t: u64) -> TrialResult {
    let contraction = t % 2 == 1;
    let (a, b) = premise_pair(s, sig, contraction)?;
    let mut samples: Vec<Multivector> = (0..sig.dim())
        .map(|i| Multivector::basis_vector(sig, i))
        .collect();
    samples.push(s.vector(sig));
    samples.push(s.vector(sig));

    let report = check_identities(&a, &b, &samples)?;
    let mut failures = Vec::new();
    let premise_ok = if contraction {
        report.premises.contraction
    } else {
        report.premises.outer
    };
    if !premise_ok {
        failures.push(fail(
            &[("A", &a), ("B", &b)],
            "constructed pair misses its premise",
        ));
    }
    for outcome in &report.outcomes {
        for (x, residual) in &outcome.counterexamples {
            failures.push(fail(
                &[("A", &a), ("B", &b), ("x", x)],
                format!("identity {}: {residual}", outcome.id),
            ));
        }
    }
    Ok(failures)
}

fn chain_trial(s: &mut Sampler, sig: Signature) -> TrialResult {
    let max = if sig.p() + sig.q() == 0 { 0 } else { 4 };
    let factors: VersorFactors = s.versor(sig, max)?;
    let x = s.vector(sig);
    let chain = conjugation_chain(&factors, &x)?;
    let a = factors.product();
    let expected = conjugate(&a, &inverse(&a)?, &x);

    let mut inputs: Vec<(String, &Multivector)> = factors
        .factors()
        .iter()
        .enumerate()
        .map(|(i, f)| (format!("a{}", i + 1), f))
        .collect();
    inputs.push(("x".to_string(), &x));
    let inputs: Vec<(&str, &Multivector)> = inputs.iter().map(|(n, v)| (n.as_str(), *v)).collect();

    let mut failures = Vec::new();
    for (i, xi) in chain.iter().enumerate() {
        if !xi.is_vector() {
            failures.push(fail(&inputs, format!("x{i} is not a vector: {xi}")));
        }
    }
    let last = chain.last().expect("chain is never empty");
    if last != &expected {
        failures.push(fail(&inputs, last - &expected));
    }
    Ok(failures)
}

fn lemma_trial(s: &mut Sampler, sig: Signature, t: u64) -> TrialResult {
    let a = if t.is_multiple_of(4) {
        Multivector::scalar(sig, s.integer(3))
    } else {
        s.sparse_multivector(sig, 2)
    };
    let mut failures = Vec::new();
    let by_contraction = is_scalar_by_contraction(&a);
    let by_inspection = a.is_scalar();
    if by_contraction != by_inspection {
        failures.push(fail(
            &[("A", &a)],
            format!("contraction test says {by_contraction}, coefficients say {by_inspection}"),
        ));
    }

    // rev(B)·(λB) is a scalar for every versor B.
    let b = scaled_versor(s, sig, 4)?;
    let w = b.scale(&s.nonzero_integer(5));
    let alpha = &b.reverse() * &w;
    if !is_scalar_by_contraction(&alpha) {
        failures.push(fail(&[("B", &b), ("W", &w)], &alpha));
    }
    Ok(failures)
}

fn nonversor_trial(s: &mut Sampler, sig: Signature, t: u64) -> TrialResult {
    let w = if t.is_multiple_of(3) {
        let count = 2 * s.below(3);
        let count = if sig.p() + sig.q() == 0 { 0 } else { count };
        s.versor_with(sig, count)?
            .product()
            .scale(&s.nonzero_integer(3))
    } else {
        &Multivector::one(sig) + &s.even_multivector(sig, 2)
    };
    if inverse(&w).is_err() {
        return Ok(vec![]);
    }
    let versor = is_versor(&w);

    let lifted = lift_if_needed(&w);
    let lsig = lifted.sig();
    let spec = ProjectorSpec::inverse_kind(lifted.clone())?;
    let w_inv = spec.dagger().clone();
    let mut off_vector = None;
    for i in 0..lsig.dim() {
        let e = Multivector::basis_vector(lsig, i);
        let p = spec.project(&e)?;
        if !p.is_vector() {
            off_vector = Some((e, p));
            break;
        }
    }

    let mut failures = Vec::new();
    match (versor, &off_vector) {
        (true, Some((e, p))) => failures.push(fail(
            &[("W", &w), ("e", e)],
            format!("classified as versor but projects to {p}"),
        )),
        (false, None) => failures.push(fail(
            &[("W", &w)],
            "classified as non-versor but every basis vector projects to a vector",
        )),
        _ => {}
    }

    let x = s.vector(lsig);
    let fx = conjugate(&lifted, &w_inv, &x);
    let x2 = &x * &x;
    // Holds for every invertible W.
    let reflected = -(&fx * &fx.grade_involution());
    if reflected != x2 {
        failures.push(fail(&[("W", &w), ("x", &x)], &reflected - &x2));
    }
    // Orthogonality needs conjugation to stay among vectors.
    if versor && &fx * &fx != x2 {
        failures.push(fail(&[("W", &w), ("x", &x)], &(&fx * &fx) - &x2));
    }
    Ok(failures)
}

fn idempotent_trial(s: &mut Sampler, sig: Signature, t: u64) -> TrialResult {
    let a = if t.is_multiple_of(7) {
        Multivector::zero(sig)
    } else {
        random_idempotent(s, sig)?
    };
    let x = s.multivector(sig, 3);
    let mut failures = Vec::new();
    if !is_idempotent(&a) {
        failures.push(fail(&[("A", &a)], &(&(&a * &a) - &a)));
        return Ok(failures);
    }
    let p = ProjectorSpec::reverse_kind(a.clone());
    let once = p.project(&x)?;
    let twice = p.project(&once)?;
    let residual = &twice - &once.scale(&rational(1, 2));
    if !residual.is_zero() {
        failures.push(fail(&[("A", &a), ("X", &x)], &residual));
    }
    Ok(failures)
}
