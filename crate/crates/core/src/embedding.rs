//! Outermorphism embeddings of degenerate or trivial algebras into
//! nondegenerate ones, and the contraction test for scalars.

use num_traits::One;

use crate::error::AlgebraError;
use crate::multivector::{Multivector, Rational};
use crate::signature::Signature;

/// Linear injective map on vectors, extended to the whole algebra as an
/// outermorphism: blades map to the outer product of their factor images and
/// scalars map to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outermorphism {
    source: Signature,
    target: Signature,
    images: Vec<Multivector>,
}

impl Outermorphism {
    /// Builds the map from the images of the source basis vectors. Each
    /// image must be a vector of `target`, and together they must be
    /// linearly independent.
    pub(crate) fn new(
        source: Signature,
        target: Signature,
        images: Vec<Multivector>,
    ) -> Result<Self, AlgebraError> {
        assert_eq!(
            images.len(),
            source.dim(),
            "one image per source basis vector"
        );
        let mut wedge = Multivector::one(target);
        for img in &images {
            if img.sig() != target {
                return Err(AlgebraError::SignatureMismatch {
                    left: img.sig(),
                    right: target,
                });
            }
            if !img.is_vector() {
                return Err(AlgebraError::NotVector);
            }
            wedge = &wedge ^ img;
        }
        // Independent vectors have a nonzero outer product.
        assert!(!wedge.is_zero(), "vector images are linearly dependent");
        Ok(Outermorphism {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> Signature {
        self.source
    }

    pub fn target(&self) -> Signature {
        self.target
    }

    pub fn vector_images(&self) -> &[Multivector] {
        &self.images
    }

    pub fn apply(&self, x: &Multivector) -> Result<Multivector, AlgebraError> {
        if x.sig() != self.source {
            return Err(AlgebraError::SignatureMismatch {
                left: x.sig(),
                right: self.source,
            });
        }
        let mut out = Multivector::zero(self.target);
        for (blade, c) in x.terms() {
            let image = blade
                .indices()
                .into_iter()
                .fold(Multivector::one(self.target), |acc, i| {
                    &acc ^ &self.images[i]
                });
            out = &out + &image.scale(c);
        }
        Ok(out)
    }
}

/// The embedding of `sig` into a nondegenerate, nontrivial algebra.
///
/// * `n = 0`: the scalars go into `Cl(1,0,0)`.
/// * `r = 0`: the identity.
/// * `r > 0`: the target is `Cl(p+r, q+r, 0)`. Nondegenerate basis vectors
///   keep their role; the i-th null vector maps to `a_i + b_i` where `a_i`
///   is a fresh positive vector placed after the source's positive block and
///   `b_i` a fresh negative vector placed after the source's negative block.
pub fn lift_map(sig: Signature) -> Outermorphism {
    let (p, q, r) = (sig.p(), sig.q(), sig.r());
    if sig.dim() == 0 {
        let target = Signature::new(1, 0, 0).expect("dimension 1");
        return Outermorphism::new(sig, target, Vec::new()).expect("empty lift");
    }
    if r == 0 {
        let images = (0..sig.dim())
            .map(|i| Multivector::basis_vector(sig, i))
            .collect();
        return Outermorphism::new(sig, sig, images).expect("identity lift");
    }
    let target = Signature::new(p + r, q + r, 0)
        .expect("lifted dimension exceeds the ceiling; use a smaller degenerate block");
    let pos = |i: usize| Multivector::basis_vector(target, i);
    let neg = |j: usize| Multivector::basis_vector(target, p + r + j);
    let mut images = Vec::with_capacity(sig.dim());
    images.extend((0..p).map(pos));
    images.extend((0..q).map(neg));
    images.extend((0..r).map(|i| &pos(p + i) + &neg(q + i)));
    Outermorphism::new(sig, target, images).expect("null lift")
}

/// Lifts `x` when its algebra is degenerate or trivial; otherwise returns it
/// unchanged.
pub fn lift_if_needed(x: &Multivector) -> Multivector {
    let sig = x.sig();
    if sig.is_degenerate() || sig.dim() == 0 {
        lift_map(sig).apply(x).expect("source signature")
    } else {
        x.clone()
    }
}

/// True iff `e_i ⌋ a = 0` for every basis vector of the (lifted) algebra.
pub fn is_scalar_by_contraction(a: &Multivector) -> bool {
    let a = lift_if_needed(a);
    let sig = a.sig();
    (0..sig.dim()).all(|i| {
        Multivector::basis_vector(sig, i)
            .left_contraction(&a)
            .expect("same signature")
            .is_zero()
    })
}

/// Symmetric inner product `½(uv + vu)` of two vectors, as a scalar.
pub fn vector_inner(u: &Multivector, v: &Multivector) -> Rational {
    let sym = &(u * v) + &(v * u);
    sym.scalar_part() / (Rational::one() + Rational::one())
}
