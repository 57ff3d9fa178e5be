//! Dense multivectors over exact rationals.

use std::fmt;
use std::ops::{Add, BitXor, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::signature::{blade_mul, BasisBlade, Signature};

pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// An element of a geometric algebra, one coefficient per basis blade.
///
/// The coefficient of blade `m` is stored at index `m`. Values are immutable
/// in practice: every operation returns a new multivector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![Rational::zero(); sig.blade_count()],
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, Rational::one())
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        Self::blade(sig, BasisBlade::SCALAR, value)
    }

    pub fn blade(sig: Signature, blade: BasisBlade, coeff: Rational) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[blade.0 as usize] = coeff;
        mv
    }

    /// Basis vector with 0-based index `index`.
    pub fn basis_vector(sig: Signature, index: usize) -> Self {
        assert!(
            index < sig.dim(),
            "basis index {index} out of range for {sig}"
        );
        Self::blade(sig, BasisBlade::vector(index), Rational::one())
    }

    /// Grade-1 element with the given coefficients on `e1..en`.
    pub fn vector(sig: Signature, coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), sig.dim());
        let mut mv = Self::zero(sig);
        for (i, c) in coords.iter().enumerate() {
            mv.coeffs[1 << i] = c.clone();
        }
        mv
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), sig.blade_count());
        Multivector { sig, coeffs }
    }

    pub fn from_terms<I>(sig: Signature, terms: I) -> Self
    where
        I: IntoIterator<Item = (BasisBlade, Rational)>,
    {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            mv.coeffs[b.0 as usize] += c;
        }
        mv
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: BasisBlade) -> &Rational {
        &self.coeffs[blade.0 as usize]
    }

    /// Nonzero terms in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (BasisBlade(m as u32), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when every non-scalar coefficient vanishes.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scalar_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    fn check_sig(&self, other: &Multivector) -> Result<(), AlgebraError> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(AlgebraError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            })
        }
    }

    fn bilinear<F>(&self, other: &Multivector, rule: F) -> Multivector
    where
        F: Fn(BasisBlade, BasisBlade) -> Option<(BasisBlade, i8)>,
    {
        let mut out = Multivector::zero(self.sig);
        let rhs: Vec<_> = other.terms().collect();
        for (a, ca) in self.terms() {
            for &(b, cb) in &rhs {
                let Some((m, s)) = rule(a, b) else { continue };
                let slot = &mut out.coeffs[m.0 as usize];
                match s {
                    1 => *slot += ca * cb,
                    -1 => *slot -= ca * cb,
                    _ => {}
                }
            }
        }
        out
    }

    pub fn geometric_product(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_sig(other)?;
        let sig = self.sig;
        Ok(self.bilinear(other, |a, b| Some(blade_mul(a, b, &sig))))
    }

    pub fn outer_product(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_sig(other)?;
        let sig = self.sig;
        Ok(self.bilinear(other, |a, b| {
            (a.0 & b.0 == 0).then(|| blade_mul(a, b, &sig))
        }))
    }

    /// Left contraction: for blades of grades `j ≤ k` the grade `k−j` part
    /// of the product, zero otherwise.
    pub fn left_contraction(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_sig(other)?;
        let sig = self.sig;
        Ok(self.bilinear(other, |a, b| {
            (a.0 & !b.0 == 0).then(|| blade_mul(a, b, &sig))
        }))
    }

    fn map_signs(&self, sign: impl Fn(BasisBlade) -> i8) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if sign(BasisBlade(m as u32)) < 0 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    pub fn grade_involution(&self) -> Multivector {
        self.map_signs(BasisBlade::involution_sign)
    }

    pub fn reverse(&self) -> Multivector {
        self.map_signs(BasisBlade::reverse_sign)
    }

    pub fn grade_part(&self, k: usize) -> Multivector {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                if (m as u32).count_ones() as usize == k {
                    c.clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    /// Grades carrying a nonzero coefficient, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut present = vec![false; self.sig.dim() + 1];
        for (b, _) in self.terms() {
            present[b.grade()] = true;
        }
        (0..present.len()).filter(|&k| present[k]).collect()
    }

    /// The single grade of a nonzero homogeneous element. Zero is
    /// homogeneous of every grade and reports `None`, as does mixed grade.
    pub fn homogeneous_grade(&self) -> Option<usize> {
        match self.grades().as_slice() {
            [k] => Some(*k),
            _ => None,
        }
    }

    pub fn is_vector(&self) -> bool {
        self.terms().all(|(b, _)| b.grade() == 1)
    }

    pub fn scale(&self, factor: &Rational) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn try_add(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_sig(other)?;
        Ok(Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.check_sig(other)?;
        Ok(Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Scalar `x·x` for an element treated as a vector (the full product is
    /// taken, so this is only a scalar when `self` is a vector).
    pub fn square(&self) -> Multivector {
        self * self
    }
}

// Operator forms panic on signature mismatch; use the `try_*` and
// `*_product` methods when operands come from different algebras.

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.try_add(rhs).expect("signature mismatch in +")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.try_sub(rhs).expect("signature mismatch in -")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.geometric_product(rhs)
            .expect("signature mismatch in *")
    }
}

impl BitXor for &Multivector {
    type Output = Multivector;
    fn bitxor(self, rhs: &Multivector) -> Multivector {
        self.outer_product(rhs).expect("signature mismatch in ^")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Multivector {
            type Output = Multivector;
            fn $m(self, rhs: Multivector) -> Multivector {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, BitXor bitxor);

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

/// Text of a blade: `e1^e3` for the factors `e1`, `e3`.
pub fn blade_name(blade: BasisBlade) -> String {
    if blade == BasisBlade::SCALAR {
        return "1".to_string();
    }
    blade
        .indices()
        .iter()
        .map(|i| format!("e{}", i + 1))
        .collect::<Vec<_>>()
        .join("^")
}

/// Canonical text: terms ordered by grade then by factor-index tuple,
/// unit coefficients dropped, the scalar as a bare rational, zero as `0`.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self
            .terms()
            .map(|(b, c)| (b.grade(), b.indices(), b, c))
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        terms.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        for (i, (_, _, blade, coeff)) in terms.into_iter().enumerate() {
            let negative = coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            if blade == BasisBlade::SCALAR {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&blade_name(blade))?;
            } else {
                write!(f, "{magnitude}*{}", blade_name(blade))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(p: usize, q: usize, r: usize) -> Signature {
        Signature::new(p, q, r).unwrap()
    }

    fn e(sig: Signature, indices: &[usize]) -> Multivector {
        let zero_based: Vec<_> = indices.iter().map(|i| i - 1).collect();
        Multivector::blade(sig, BasisBlade::from_indices(&zero_based), Rational::one())
    }

    fn s(sig: Signature, n: i64, d: i64) -> Multivector {
        Multivector::scalar(sig, rational(n, d))
    }

    #[test]
    fn zero_divisor_in_cl1() {
        let sig = cl(1, 0, 0);
        let one = Multivector::one(sig);
        let e1 = e(sig, &[1]);
        assert!(((&one + &e1) * (&one - &e1)).is_zero());
    }

    #[test]
    fn bivector_and_pseudoscalar_squares() {
        let e12 = e(cl(3, 0, 0), &[1, 2]);
        assert_eq!(&e12 * &e12, s(cl(3, 0, 0), -1, 1));
        let e1234 = e(cl(4, 0, 0), &[1, 2, 3, 4]);
        assert_eq!(&e1234 * &e1234, s(cl(4, 0, 0), 1, 1));
    }

    #[test]
    fn outer_product_examples() {
        let sig = cl(2, 0, 0);
        let (e1, e2) = (e(sig, &[1]), e(sig, &[2]));
        assert_eq!(&e1 ^ &e2, e(sig, &[1, 2]));
        assert!((&e1 ^ &e1).is_zero());
        let one = Multivector::one(sig);
        assert_eq!(&(&one + &e1) ^ &e2, &e2 + &e(sig, &[1, 2]));
    }

    #[test]
    fn left_contraction_examples() {
        let sig = cl(3, 0, 0);
        let e1 = e(sig, &[1]);
        let e12 = e(sig, &[1, 2]);
        assert_eq!(e1.left_contraction(&e12).unwrap(), e(sig, &[2]));
        assert!(e(sig, &[3]).left_contraction(&e12).unwrap().is_zero());
        let y = &Multivector::one(sig) + &e12;
        let lc = e1.left_contraction(&y).unwrap();
        assert_eq!(lc, e(sig, &[2]));
        let half = rational(1, 2);
        let alt = (&(&e1 * &y) - &(&y.grade_involution() * &e1)).scale(&half);
        assert_eq!(lc, alt);
    }

    #[test]
    fn involution_examples() {
        let sig = cl(3, 0, 0);
        let x = &(&(&s(sig, 2, 1) + &e(sig, &[1])) + &e(sig, &[1, 2])) + &e(sig, &[1, 2, 3]);
        let expected = &(&(&s(sig, 2, 1) - &e(sig, &[1])) + &e(sig, &[1, 2])) - &e(sig, &[1, 2, 3]);
        assert_eq!(x.grade_involution(), expected);
        assert_eq!(e(sig, &[1]).grade_involution(), -e(sig, &[1]));
        assert_eq!(e(sig, &[1, 2]).reverse(), -e(sig, &[1, 2]));
        assert_eq!(e(sig, &[1, 2, 3]).reverse(), -e(sig, &[1, 2, 3]));
        let e1234 = e(cl(4, 0, 0), &[1, 2, 3, 4]);
        assert_eq!(e1234.reverse(), e1234);
    }

    #[test]
    fn grade_part_examples() {
        let sig = cl(3, 0, 0);
        let x = &(&Multivector::one(sig) + &e(sig, &[1])) + &e(sig, &[1, 2]);
        assert_eq!(x.grade_part(1), e(sig, &[1]));
        assert!(e(sig, &[1, 2]).grade_part(0).is_zero());
        assert!(x.grade_part(7).is_zero());
        assert_eq!(x.grades(), vec![0, 1, 2]);
        assert_eq!(x.homogeneous_grade(), None);
        assert_eq!(e(sig, &[2, 3]).homogeneous_grade(), Some(2));
    }

    #[test]
    fn mismatched_signatures_error() {
        let a = Multivector::one(cl(2, 0, 0));
        let b = Multivector::one(cl(1, 1, 0));
        assert!(matches!(
            a.geometric_product(&b),
            Err(AlgebraError::SignatureMismatch { .. })
        ));
        assert!(a.outer_product(&b).is_err());
        assert!(a.left_contraction(&b).is_err());
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn display_examples() {
        let sig = cl(3, 0, 0);
        assert_eq!(e(sig, &[1]).to_string(), "e1");
        let x = &(&e(sig, &[1, 3]).scale(&rational(3, 2)) - &e(sig, &[2])) + &Multivector::one(sig);
        assert_eq!(x.to_string(), "1 - e2 + 3/2*e1^e3");
        assert_eq!(Multivector::zero(sig).to_string(), "0");
        assert_eq!((-e(sig, &[1, 2])).to_string(), "-e1^e2");
        assert_eq!(s(sig, -3, 2).to_string(), "-3/2");
    }

    #[test]
    fn display_orders_by_index_tuple_not_mask() {
        let sig = cl(4, 0, 0);
        let x = &e(sig, &[2, 3]) + &e(sig, &[1, 4]);
        assert_eq!(x.to_string(), "e1^e4 + e2^e3");
    }
}
