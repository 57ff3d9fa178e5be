//! Inversion and the versor/blade classification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::embedding::lift_map;
use crate::error::AlgebraError;
use crate::multivector::{Multivector, Rational};
use crate::signature::blade_mul;

/// Two-sided inverse of `x`, or [`AlgebraError::NotInvertible`] when `x` is
/// zero or a zero divisor.
pub fn inverse(x: &Multivector) -> Result<Multivector, AlgebraError> {
    if x.is_zero() {
        return Err(AlgebraError::NotInvertible);
    }
    // Versors, blades and scalars: x·rev(x) is already a scalar.
    let rev = x.reverse();
    let norm = x * &rev;
    if norm.is_scalar() && !norm.scalar_part().is_zero() {
        return Ok(rev.scale(&norm.scalar_part().recip()));
    }
    inverse_by_solve(x)
}

/// Solves `x·y = 1` for `y` as a `2^n × 2^n` exact linear system in the
/// coefficients of `y`, then confirms `y·x = 1`.
///
/// The system is scaled to integers and reduced by fraction-free (Bareiss)
/// elimination, so no gcd work happens until back substitution.
pub fn inverse_by_solve(x: &Multivector) -> Result<Multivector, AlgebraError> {
    let sig = x.sig();
    let size = sig.blade_count();
    let scale = x.terms().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));

    // Column j holds the coefficients of x·e_j; the last column is the
    // right-hand side (the scalar 1).
    let mut rows = vec![vec![BigInt::zero(); size + 1]; size];
    for (i, c) in x.terms() {
        let c = c.numer() * (&scale / c.denom());
        for (j, blade) in sig.blades().enumerate() {
            let (k, s) = blade_mul(i, blade, &sig);
            match s {
                1 => rows[k.0 as usize][j] += &c,
                -1 => rows[k.0 as usize][j] -= &c,
                _ => {}
            }
        }
    }
    rows[0][size] = scale;

    let mut prev = BigInt::one();
    for k in 0..size {
        let pivot = (k..size)
            .find(|&r| !rows[r][k].is_zero())
            .ok_or(AlgebraError::NotInvertible)?;
        rows.swap(k, pivot);
        let (upper, lower) = rows.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..=size {
                let v = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = rows[k][k].clone();
    }

    let mut coeffs = vec![Rational::zero(); size];
    for i in (0..size).rev() {
        let mut acc = Rational::from_integer(rows[i][size].clone());
        for j in i + 1..size {
            if !rows[i][j].is_zero() && !coeffs[j].is_zero() {
                acc -= &coeffs[j] * &rows[i][j];
            }
        }
        coeffs[i] = acc / &rows[i][i];
    }

    let y = Multivector::from_coeffs(sig, coeffs);
    if &y * x == Multivector::one(sig) {
        Ok(y)
    } else {
        Err(AlgebraError::NotInvertible)
    }
}

pub fn is_invertible(x: &Multivector) -> bool {
    inverse(x).is_ok()
}

/// Conjugation `gi(w)·x·w⁻¹`, given the precomputed inverse of `w`.
pub fn conjugate(w: &Multivector, w_inv: &Multivector, x: &Multivector) -> Multivector {
    &(&w.grade_involution() * x) * w_inv
}

/// Whether `x` is a versor: invertible, and `gi(x)·v·x⁻¹` is a vector for
/// every basis vector `v`.
///
/// Degenerate (and trivial) algebras are first lifted into a nondegenerate
/// one and the test runs there, over every basis vector of the larger
/// algebra.
pub fn is_versor(x: &Multivector) -> bool {
    let sig = x.sig();
    if sig.is_degenerate() || sig.dim() == 0 {
        let lift = lift_map(sig);
        return conjugation_preserves_vectors(&lift.apply(x).expect("lift source signature"));
    }
    conjugation_preserves_vectors(x)
}

fn conjugation_preserves_vectors(x: &Multivector) -> bool {
    let Ok(x_inv) = inverse(x) else {
        return false;
    };
    let sig = x.sig();
    (0..sig.dim()).all(|i| conjugate(x, &x_inv, &Multivector::basis_vector(sig, i)).is_vector())
}

/// Whether `x` is an invertible blade: homogeneous and a versor.
pub fn is_blade(x: &Multivector) -> bool {
    x.grades().len() == 1 && is_versor(x)
}
