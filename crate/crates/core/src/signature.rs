//! Metric signatures and basis-blade multiplication.
//!
//! Basis vectors are numbered from 1. The first `p` square to +1, the next
//! `q` to −1 and the last `r` to 0. A basis blade is the bitmask of its
//! factors taken in ascending order, so bit `i` stands for `e{i+1}`.

use std::fmt;

use crate::error::AlgebraError;

/// Largest dimension accepted by [`Signature::new`]. Storage is dense, so an
/// algebra of dimension `n` holds `2^n` coefficients per element.
pub const MAX_DIM: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Signature {
    p: usize,
    q: usize,
    r: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize, r: usize) -> Result<Self, AlgebraError> {
        Self::with_max_dim(p, q, r, MAX_DIM)
    }

    /// Like [`Signature::new`] with a tighter dimension ceiling. Ceilings
    /// above [`MAX_DIM`] are clamped to it.
    pub fn with_max_dim(
        p: usize,
        q: usize,
        r: usize,
        max_dim: usize,
    ) -> Result<Self, AlgebraError> {
        let limit = max_dim.min(MAX_DIM);
        let n = p + q + r;
        if n > limit {
            return Err(AlgebraError::DimensionTooLarge { dim: n, limit });
        }
        Ok(Signature { p, q, r })
    }

    /// Euclidean signature `Cl(n,0,0)`.
    pub fn euclidean(n: usize) -> Result<Self, AlgebraError> {
        Self::new(n, 0, 0)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.p + self.q + self.r
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    pub fn is_degenerate(&self) -> bool {
        self.r > 0
    }

    /// Square of basis vector `index` (0-based): +1, −1 or 0.
    pub fn square(&self, index: usize) -> i8 {
        assert!(index < self.dim(), "basis index {index} out of range");
        if index < self.p {
            1
        } else if index < self.p + self.q {
            -1
        } else {
            0
        }
    }

    pub(crate) fn negative_mask(&self) -> u32 {
        ((1u32 << self.q) - 1) << self.p
    }

    pub(crate) fn null_mask(&self) -> u32 {
        ((1u32 << self.r) - 1) << (self.p + self.q)
    }

    /// All basis blades of the algebra, scalar first, in mask order.
    pub fn blades(&self) -> impl Iterator<Item = BasisBlade> {
        (0..self.blade_count() as u32).map(BasisBlade)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{},{})", self.p, self.q, self.r)
    }
}

/// A basis blade, stored as the set of its basis-vector factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisBlade(pub u32);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    /// The basis vector with 0-based index `index`.
    pub fn vector(index: usize) -> Self {
        BasisBlade(1 << index)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        BasisBlade(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 0-based factor indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    /// Sign of reversion on a blade of this grade.
    pub fn reverse_sign(self) -> i8 {
        let k = self.grade();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Sign of grade involution on a blade of this grade.
    pub fn involution_sign(self) -> i8 {
        if self.grade().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Sign produced by sorting the concatenated factor lists of `a` and `b`
/// into ascending order, ignoring the metric.
pub fn reorder_sign(a: u32, b: u32) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Geometric product of two basis blades: `a·b = sign · (a XOR b)`.
///
/// The sign is 0 exactly when a null basis vector appears in both factors.
pub fn blade_mul(a: BasisBlade, b: BasisBlade, sig: &Signature) -> (BasisBlade, i8) {
    let common = a.0 & b.0;
    let out = BasisBlade(a.0 ^ b.0);
    if common & sig.null_mask() != 0 {
        return (out, 0);
    }
    let mut sign = reorder_sign(a.0, b.0);
    if (common & sig.negative_mask()).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (out, sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(p: usize, q: usize, r: usize) -> Signature {
        Signature::new(p, q, r).unwrap()
    }

    #[test]
    fn squares_follow_block_layout() {
        let sig = cl(2, 1, 1);
        assert_eq!(
            (0..4).map(|i| sig.square(i)).collect::<Vec<_>>(),
            vec![1, 1, -1, 0]
        );
        assert_eq!(sig.negative_mask(), 0b0100);
        assert_eq!(sig.null_mask(), 0b1000);
    }

    #[test]
    fn dimension_ceiling() {
        assert!(Signature::new(16, 0, 0).is_ok());
        assert!(Signature::new(10, 4, 3).is_err());
        assert!(Signature::with_max_dim(3, 0, 0, 2).is_err());
        assert!(Signature::with_max_dim(3, 0, 0, 99).is_ok());
    }

    #[test]
    fn blade_mul_examples() {
        let e1 = BasisBlade::vector(0);
        let e2 = BasisBlade::vector(1);
        assert_eq!(blade_mul(e1, e1, &cl(2, 0, 0)), (BasisBlade::SCALAR, 1));
        assert_eq!(blade_mul(e2, e1, &cl(2, 0, 0)), (BasisBlade(0b11), -1));
        assert_eq!(blade_mul(e1, e1, &cl(0, 0, 1)), (BasisBlade::SCALAR, 0));
        assert_eq!(blade_mul(e1, e1, &cl(0, 1, 0)), (BasisBlade::SCALAR, -1));
    }

    // Sort the explicit factor word by adjacent transpositions, contracting
    // equal neighbours through the metric.
    fn brute_force(a: u32, b: u32, sig: &Signature) -> (u32, i8) {
        let mut word: Vec<usize> = BasisBlade(a).indices();
        word.extend(BasisBlade(b).indices());
        let mut sign = 1i8;
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < word.len() {
                if word[i] > word[i + 1] {
                    word.swap(i, i + 1);
                    sign = -sign;
                    changed = true;
                } else if word[i] == word[i + 1] {
                    sign *= sig.square(word[i]);
                    word.drain(i..i + 2);
                    changed = true;
                    continue;
                }
                i += 1;
            }
            if !changed {
                break;
            }
        }
        let mask = word.iter().fold(0, |m, &i| m | (1 << i));
        (mask, sign)
    }

    #[test]
    fn matches_brute_force_reordering() {
        for sig in [cl(4, 0, 0), cl(2, 1, 1), cl(1, 2, 1), cl(0, 0, 3)] {
            for a in sig.blades() {
                for b in sig.blades() {
                    let (m, s) = blade_mul(a, b, &sig);
                    assert_eq!(
                        (m.0, s),
                        brute_force(a.0, b.0, &sig),
                        "{a:?} {b:?} in {sig}"
                    );
                }
            }
        }
    }

    #[test]
    fn pseudoscalar_square_in_cl4() {
        let e1234 = BasisBlade(0b1111);
        assert_eq!(
            blade_mul(e1234, e1234, &cl(4, 0, 0)),
            (BasisBlade::SCALAR, 1)
        );
        let e12 = BasisBlade(0b11);
        assert_eq!(blade_mul(e12, e12, &cl(3, 0, 0)), (BasisBlade::SCALAR, -1));
    }

    #[test]
    fn reverse_and_involution_signs() {
        let signs: Vec<_> = (0..5u32)
            .map(|k| BasisBlade((1 << k) - 1).reverse_sign())
            .collect();
        assert_eq!(signs, vec![1, 1, -1, -1, 1]);
        assert_eq!(BasisBlade(0b111).involution_sign(), -1);
    }
}
