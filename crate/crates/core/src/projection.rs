//! Generalized projection operators `P_A(X) = ½(X − gi(A)·X·A†)`.
//!
//! The automorphism is always the grade involution. The anti-automorphism
//! `A†` is selected by [`ProjectionKind`]: the inverse (defined on invertible
//! generators) or the reverse (defined on every generator, zero included).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::AlgebraError;
use crate::inverse::{inverse, is_blade, is_versor};
use crate::multivector::{rational, Multivector, Rational};
use crate::random::VersorFactors;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectionKind {
    Inverse,
    Reverse,
}

impl fmt::Display for ProjectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProjectionKind::Inverse => "inverse",
            ProjectionKind::Reverse => "reverse",
        })
    }
}

impl FromStr for ProjectionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inverse" => Ok(ProjectionKind::Inverse),
            "reverse" => Ok(ProjectionKind::Reverse),
            other => Err(format!(
                "unknown projection kind `{other}` (expected inverse or reverse)"
            )),
        }
    }
}

fn half() -> Rational {
    rational(1, 2)
}

/// A generator together with the kind of its projector. The conjugating
/// factors are computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorSpec {
    generator: Multivector,
    kind: ProjectionKind,
    involuted: Multivector,
    dagger: Multivector,
}

impl ProjectorSpec {
    pub fn new(generator: Multivector, kind: ProjectionKind) -> Result<Self, AlgebraError> {
        let dagger = match kind {
            ProjectionKind::Inverse => inverse(&generator)?,
            ProjectionKind::Reverse => generator.reverse(),
        };
        Ok(ProjectorSpec {
            involuted: generator.grade_involution(),
            generator,
            kind,
            dagger,
        })
    }

    pub fn inverse_kind(generator: Multivector) -> Result<Self, AlgebraError> {
        Self::new(generator, ProjectionKind::Inverse)
    }

    pub fn reverse_kind(generator: Multivector) -> Self {
        Self::new(generator, ProjectionKind::Reverse).expect("reverse kind accepts every generator")
    }

    /// The familiar subspace-style projector: inverse kind restricted to
    /// invertible versors.
    pub fn familiar(generator: Multivector) -> Result<Self, AlgebraError> {
        if !is_versor(&generator) {
            return Err(AlgebraError::NotVersor);
        }
        Self::inverse_kind(generator)
    }

    pub fn generator(&self) -> &Multivector {
        &self.generator
    }

    pub fn kind(&self) -> ProjectionKind {
        self.kind
    }

    /// `A†` for this kind.
    pub fn dagger(&self) -> &Multivector {
        &self.dagger
    }

    /// The projector of the product generator `A·B`, same kind.
    pub fn compose(&self, other: &ProjectorSpec) -> Result<ProjectorSpec, AlgebraError> {
        if self.kind != other.kind {
            return Err(AlgebraError::KindMismatch);
        }
        ProjectorSpec::new(
            self.generator.geometric_product(&other.generator)?,
            self.kind,
        )
    }

    /// `gi(A)·x·A†`.
    pub fn conjugate(&self, x: &Multivector) -> Result<Multivector, AlgebraError> {
        self.involuted
            .geometric_product(x)?
            .geometric_product(&self.dagger)
    }

    pub fn project(&self, x: &Multivector) -> Result<Multivector, AlgebraError> {
        Ok((x - &self.conjugate(x)?).scale(&half()))
    }
}

pub fn project(spec: &ProjectorSpec, x: &Multivector) -> Result<Multivector, AlgebraError> {
    spec.project(x)
}

/// `2·P_A(P_B(X)) − P_A(X) − P_B(X) + P_{AB}(X)`, which vanishes for every
/// valid input.
pub fn ftopo_residual(
    a: &ProjectorSpec,
    b: &ProjectorSpec,
    x: &Multivector,
) -> Result<Multivector, AlgebraError> {
    let ab = a.compose(b)?;
    let pb = b.project(x)?;
    let two = Rational::from_integer(2.into());
    let lhs = a.project(&pb)?.scale(&two);
    Ok(&(&(&lhs - &a.project(x)?) - &pb) + &ab.project(x)?)
}

/// Which product premise a pair of blades satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Premises {
    /// `AB = A ∧ B`
    pub outer: bool,
    /// `AB = A ⌋ B`
    pub contraction: bool,
}

impl Premises {
    pub fn classify(a: &Multivector, b: &Multivector) -> Result<Self, AlgebraError> {
        let ab = a.geometric_product(b)?;
        Ok(Premises {
            outer: ab == a.outer_product(b)?,
            contraction: ab == a.left_contraction(b)?,
        })
    }
}

/// Result of one projection identity over a set of sample vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub id: u8,
    /// Whether the identity's premise held, so that it was asserted.
    pub applicable: bool,
    /// Sample vectors where it failed, with `lhs − rhs`.
    pub counterexamples: Vec<(Multivector, Multivector)>,
}

impl IdentityOutcome {
    pub fn holds(&self) -> bool {
        !self.applicable || self.counterexamples.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub premises: Premises,
    pub outcomes: Vec<IdentityOutcome>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(IdentityOutcome::holds)
    }

    /// Ids of the identities that were asserted.
    pub fn asserted(&self) -> Vec<u8> {
        self.outcomes
            .iter()
            .filter(|o| o.applicable)
            .map(|o| o.id)
            .collect()
    }
}

/// Evaluates the seven classic blade-projection identities on sample
/// vectors, under the inverse kind. Identities 1–3 need `AB = A∧B`, 4–6
/// need `AB = A⌋B`, and 7 (`P_A∘P_A = P_A`) is always asserted.
pub fn check_identities(
    a: &Multivector,
    b: &Multivector,
    samples: &[Multivector],
) -> Result<IdentityReport, AlgebraError> {
    if !is_blade(a) || !is_blade(b) {
        return Err(AlgebraError::NotBlade);
    }
    let premises = Premises::classify(a, b)?;
    let pa = ProjectorSpec::inverse_kind(a.clone())?;
    let pb = ProjectorSpec::inverse_kind(b.clone())?;
    let pab = pa.compose(&pb)?;

    let mut outcomes: Vec<IdentityOutcome> = (1..=7)
        .map(|id| IdentityOutcome {
            id,
            applicable: match id {
                1..=3 => premises.outer,
                4..=6 => premises.contraction,
                _ => true,
            },
            counterexamples: Vec::new(),
        })
        .collect();

    for x in samples {
        if x.sig() != a.sig() {
            return Err(AlgebraError::SignatureMismatch {
                left: x.sig(),
                right: a.sig(),
            });
        }
        if !x.is_vector() {
            return Err(AlgebraError::NotVector);
        }
        let a_x = pa.project(x)?;
        let b_x = pb.project(x)?;
        let ab_x = pab.project(x)?;
        let b_a_x = pb.project(&a_x)?;
        let a_b_x = pa.project(&b_x)?;
        let a_a_x = pa.project(&a_x)?;
        let residuals = [
            b_a_x.clone(),
            a_b_x.clone(),
            &ab_x - &(&b_x + &a_x),
            &ab_x - &(&b_x - &a_x),
            &a_b_x - &a_x,
            &b_a_x - &a_x,
            &a_a_x - &a_x,
        ];
        for (outcome, residual) in outcomes.iter_mut().zip(residuals) {
            if outcome.applicable && !residual.is_zero() {
                outcome.counterexamples.push((x.clone(), residual));
            }
        }
    }
    Ok(IdentityReport { premises, outcomes })
}

/// The chain `x_0 = x`, `x_{i+1} = (−a_{r−i})·x_i·a_{r−i}⁻¹` that peels a
/// versor `a_1⋯a_r` off one factor at a time, innermost first. Its last
/// element equals `gi(A)·x·A⁻¹`.
pub fn conjugation_chain(
    factors: &VersorFactors,
    x: &Multivector,
) -> Result<Vec<Multivector>, AlgebraError> {
    if x.sig() != factors.sig() {
        return Err(AlgebraError::SignatureMismatch {
            left: x.sig(),
            right: factors.sig(),
        });
    }
    if !x.is_vector() {
        return Err(AlgebraError::NotVector);
    }
    let mut chain = Vec::with_capacity(factors.len() + 1);
    chain.push(x.clone());
    for a in factors.factors().iter().rev() {
        let a_inv = inverse(a)?;
        let next = &(&(-a) * chain.last().unwrap()) * &a_inv;
        chain.push(next);
    }
    Ok(chain)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionEntry {
    /// `P_i(P_j(X))`
    pub composed: Multivector,
    /// `½(P_i + P_j − P_{ij})(X)`
    pub via_theorem: Multivector,
}

impl CompositionEntry {
    pub fn agrees(&self) -> bool {
        self.composed == self.via_theorem
    }
}

/// Every pairwise composition of the given projectors applied to `x`, each
/// paired with the value the composition theorem predicts.
pub fn projector_composition_table(
    specs: &[ProjectorSpec],
    x: &Multivector,
) -> Result<Vec<Vec<CompositionEntry>>, AlgebraError> {
    let singles = specs
        .iter()
        .map(|s| s.project(x))
        .collect::<Result<Vec<_>, _>>()?;
    specs
        .iter()
        .enumerate()
        .map(|(i, si)| {
            specs
                .iter()
                .enumerate()
                .map(|(j, sj)| {
                    let composed = si.project(&singles[j])?;
                    let pij = si.compose(sj)?.project(x)?;
                    let via_theorem = (&(&singles[i] + &singles[j]) - &pij).scale(&half());
                    Ok(CompositionEntry {
                        composed,
                        via_theorem,
                    })
                })
                .collect()
        })
        .collect()
}

/// `(1 + u)/2` is idempotent whenever `u² = 1`.
pub fn idempotent_from_involution(u: &Multivector) -> Multivector {
    (&Multivector::one(u.sig()) + u).scale(&half())
}

pub fn is_idempotent(a: &Multivector) -> bool {
    &(a * a) == a
}
