//! Seeded generation of test inputs.
//!
//! All coefficients are integers in `[-bound, bound]`. A [`Sampler`] is a
//! ChaCha stream; trial `i` of a seeded run reads stream `i`, so runs can be
//! split across threads without changing what any trial sees.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::AlgebraError;
use crate::inverse::inverse;
use crate::multivector::{Multivector, Rational};
use crate::signature::{BasisBlade, Signature};

/// Coefficient bound used for random vectors.
pub const VECTOR_BOUND: i64 = 3;

const MAX_ATTEMPTS: usize = 64;

/// Ordered vector factors `a_1 … a_r` of a versor. Empty means the scalar 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VersorFactors {
    sig: Signature,
    factors: Vec<Multivector>,
}

impl VersorFactors {
    pub fn new(sig: Signature, factors: Vec<Multivector>) -> Result<Self, AlgebraError> {
        for f in &factors {
            if f.sig() != sig {
                return Err(AlgebraError::SignatureMismatch {
                    left: f.sig(),
                    right: sig,
                });
            }
            if f.homogeneous_grade() != Some(1) {
                return Err(AlgebraError::NotVector);
            }
        }
        Ok(VersorFactors { sig, factors })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn factors(&self) -> &[Multivector] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The versor `a_1 a_2 … a_r`.
    pub fn product(&self) -> Multivector {
        self.factors
            .iter()
            .fold(Multivector::one(self.sig), |acc, f| &acc * f)
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::for_trial(seed, 0)
    }

    /// The independent stream for one trial of a seeded run.
    pub fn for_trial(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        Sampler { rng }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn integer(&mut self, bound: i64) -> Rational {
        Rational::from_integer(BigInt::from(self.rng.random_range(-bound..=bound)))
    }

    pub fn nonzero_integer(&mut self, bound: i64) -> Rational {
        let bound = bound.max(1);
        let magnitude = self.rng.random_range(1..=bound);
        let value = if self.rng.random_bool(0.5) {
            magnitude
        } else {
            -magnitude
        };
        Rational::from_integer(BigInt::from(value))
    }

    pub fn multivector(&mut self, sig: Signature, bound: i64) -> Multivector {
        let coeffs = (0..sig.blade_count())
            .map(|_| self.integer(bound))
            .collect();
        Multivector::from_coeffs(sig, coeffs)
    }

    /// A multivector restricted to a random subset of grades (possibly just
    /// the scalars, possibly nothing).
    pub fn sparse_multivector(&mut self, sig: Signature, bound: i64) -> Multivector {
        let keep: Vec<bool> = (0..=sig.dim()).map(|_| self.rng.random_bool(0.5)).collect();
        let coeffs = (0..sig.blade_count())
            .map(|m| {
                let value = self.integer(bound);
                if keep[BasisBlade(m as u32).grade()] {
                    value
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Multivector::from_coeffs(sig, coeffs)
    }

    /// A random element supported on even grades only.
    pub fn even_multivector(&mut self, sig: Signature, bound: i64) -> Multivector {
        self.multivector(sig, bound)
            .terms()
            .filter(|(b, _)| b.grade() % 2 == 0)
            .fold(Multivector::zero(sig), |acc, (b, c)| {
                &acc + &Multivector::blade(sig, b, c.clone())
            })
    }

    pub fn vector(&mut self, sig: Signature) -> Multivector {
        let coords: Vec<_> = (0..sig.dim()).map(|_| self.integer(VECTOR_BOUND)).collect();
        Multivector::vector(sig, &coords)
    }

    /// A random vector with nonzero square.
    pub fn invertible_vector(&mut self, sig: Signature) -> Result<Multivector, AlgebraError> {
        for _ in 0..MAX_ATTEMPTS {
            let v = self.vector(sig);
            if !v.square().scalar_part().is_zero() {
                return Ok(v);
            }
        }
        Err(AlgebraError::GenerationFailed {
            what: "invertible vector",
            attempts: MAX_ATTEMPTS,
        })
    }

    /// Product of between 0 and `max_factors` invertible random vectors.
    pub fn versor(
        &mut self,
        sig: Signature,
        max_factors: usize,
    ) -> Result<VersorFactors, AlgebraError> {
        let count = self.rng.random_range(0..=max_factors);
        self.versor_with(sig, count)
    }

    /// Product of exactly `count` invertible random vectors.
    pub fn versor_with(
        &mut self,
        sig: Signature,
        count: usize,
    ) -> Result<VersorFactors, AlgebraError> {
        let factors = (0..count)
            .map(|_| self.invertible_vector(sig))
            .collect::<Result<Vec<_>, _>>()?;
        VersorFactors::new(sig, factors)
    }

    /// An invertible blade of the given grade: the outer product of random
    /// vectors, redrawn until invertible.
    pub fn blade(&mut self, sig: Signature, grade: usize) -> Result<Multivector, AlgebraError> {
        if grade == 0 {
            return Ok(Multivector::scalar(sig, self.nonzero_integer(VECTOR_BOUND)));
        }
        if grade <= sig.dim() {
            for _ in 0..MAX_ATTEMPTS {
                let b = (0..grade).fold(Multivector::one(sig), |acc, _| &acc ^ &self.vector(sig));
                // For a blade, b·rev(b) is a scalar.
                if !(&b * &b.reverse()).scalar_part().is_zero() {
                    return Ok(b);
                }
            }
        }
        Err(AlgebraError::GenerationFailed {
            what: "invertible blade",
            attempts: MAX_ATTEMPTS,
        })
    }

    /// A general invertible element with coefficients in `[-bound, bound]`.
    pub fn invertible(&mut self, sig: Signature, bound: i64) -> Result<Multivector, AlgebraError> {
        for _ in 0..MAX_ATTEMPTS {
            let x = self.multivector(sig, bound);
            if inverse(&x).is_ok() {
                return Ok(x);
            }
        }
        Err(AlgebraError::GenerationFailed {
            what: "invertible element",
            attempts: MAX_ATTEMPTS,
        })
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }
}

pub fn random_multivector(sig: Signature, seed: u64, coeff_bound: i64) -> Multivector {
    Sampler::new(seed).multivector(sig, coeff_bound)
}

pub fn random_vector(sig: Signature, seed: u64) -> Multivector {
    Sampler::new(seed).vector(sig)
}

pub fn random_versor(
    sig: Signature,
    seed: u64,
    max_factors: usize,
) -> Result<VersorFactors, AlgebraError> {
    Sampler::new(seed).versor(sig, max_factors)
}

pub fn random_blade(sig: Signature, seed: u64, grade: usize) -> Result<Multivector, AlgebraError> {
    Sampler::new(seed).blade(sig, grade)
}
