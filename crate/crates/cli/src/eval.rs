//! Evaluation of parsed expressions.
//!
//! Rational literals stay signature-free until they meet a multivector, so
//! `lift(e1) + 1` is well formed even though `lift` moves `e1` into a larger
//! algebra. Two multivectors from different algebras never combine.

use gproj::embedding::lift_map;
use gproj::inverse::inverse;
use gproj::{AlgebraError, Multivector, ProjectionKind, ProjectorSpec, Rational, Signature};
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::parser::{BinOp, Expr, Func};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("not invertible")]
    NotInvertible,
    #[error(
        "signature mismatch: {left} vs {right} (lifted values only combine with lifted values)"
    )]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("grade index must be a non-negative integer")]
    BadGrade,
    #[error("{0}")]
    Algebra(AlgebraError),
}

impl From<AlgebraError> for EvalError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotInvertible => EvalError::NotInvertible,
            AlgebraError::SignatureMismatch { left, right } => {
                EvalError::SignatureMismatch { left, right }
            }
            other => EvalError::Algebra(other),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Value {
    Scalar(Rational),
    Mv(Multivector),
}

impl Value {
    fn into_mv(self, sig: Signature) -> Multivector {
        match self {
            Value::Scalar(s) => Multivector::scalar(sig, s),
            Value::Mv(m) => m,
        }
    }
}

/// Brings two values into one algebra. Scalars adopt the other operand's
/// algebra; two scalars land in `home`.
fn unify(a: Value, b: Value, home: Signature) -> Result<(Multivector, Multivector), EvalError> {
    let sig = match (&a, &b) {
        (Value::Mv(x), _) => x.sig(),
        (_, Value::Mv(y)) => y.sig(),
        _ => home,
    };
    let (x, y) = (a.into_mv(sig), b.into_mv(sig));
    if x.sig() != y.sig() {
        return Err(EvalError::SignatureMismatch {
            left: x.sig(),
            right: y.sig(),
        });
    }
    Ok((x, y))
}

struct Evaluator {
    sig: Signature,
}

impl Evaluator {
    fn eval(&self, expr: &Expr) -> Result<Value, EvalError> {
        Ok(match expr {
            Expr::Rational(r) => Value::Scalar(r.clone()),
            Expr::Basis(i) => Value::Mv(Multivector::basis_vector(self.sig, *i)),
            Expr::Neg(e) => match self.eval(e)? {
                Value::Scalar(s) => Value::Scalar(-s),
                Value::Mv(m) => Value::Mv(-m),
            },
            Expr::Binary { .. } => {
                // Walk the left spine iteratively: long sums nest thousands deep.
                let mut spine = Vec::new();
                let mut node = expr;
                while let Expr::Binary { op, lhs, rhs } = node {
                    spine.push((*op, rhs));
                    node = lhs;
                }
                let mut acc = self.eval(node)?;
                for (op, rhs) in spine.into_iter().rev() {
                    acc = self.binary(op, acc, self.eval(rhs)?)?;
                }
                acc
            }
            Expr::Call { func, args } => self.call(*func, args)?,
        })
    }

    fn binary(&self, op: BinOp, l: Value, r: Value) -> Result<Value, EvalError> {
        if let (Value::Scalar(a), Value::Scalar(b)) = (&l, &r) {
            return Ok(Value::Scalar(match op {
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
                // All three products reduce to multiplication on scalars.
                _ => a * b,
            }));
        }
        let (x, y) = unify(l, r, self.sig)?;
        Ok(Value::Mv(match op {
            BinOp::Add => x.try_add(&y)?,
            BinOp::Sub => x.try_sub(&y)?,
            BinOp::Geometric => x.geometric_product(&y)?,
            BinOp::Outer => x.outer_product(&y)?,
            BinOp::Contraction => x.left_contraction(&y)?,
        }))
    }

    fn call(&self, func: Func, args: &[Expr]) -> Result<Value, EvalError> {
        let first = self.eval(&args[0])?;
        Ok(match func {
            Func::Rev | Func::Gi => match first {
                Value::Scalar(s) => Value::Scalar(s),
                Value::Mv(m) if func == Func::Rev => Value::Mv(m.reverse()),
                Value::Mv(m) => Value::Mv(m.grade_involution()),
            },
            Func::Inv => match first {
                Value::Scalar(s) if s.is_zero() => return Err(EvalError::NotInvertible),
                Value::Scalar(s) => Value::Scalar(s.recip()),
                Value::Mv(m) => Value::Mv(inverse(&m)?),
            },
            Func::Grade => {
                let k = match self.eval(&args[1])? {
                    Value::Scalar(s) => s,
                    Value::Mv(m) if m.is_scalar() => m.scalar_part().clone(),
                    Value::Mv(_) => return Err(EvalError::BadGrade),
                };
                if !k.is_integer() {
                    return Err(EvalError::BadGrade);
                }
                let k = k.to_integer().to_usize().ok_or(EvalError::BadGrade)?;
                match first {
                    Value::Scalar(s) => Value::Scalar(if k == 0 { s } else { Rational::zero() }),
                    Value::Mv(m) => Value::Mv(m.grade_part(k)),
                }
            }
            Func::Proj | Func::Projr => {
                let kind = if func == Func::Proj {
                    ProjectionKind::Inverse
                } else {
                    ProjectionKind::Reverse
                };
                let (a, x) = unify(first, self.eval(&args[1])?, self.sig)?;
                Value::Mv(ProjectorSpec::new(a, kind)?.project(&x)?)
            }
            Func::Lift => match first {
                Value::Scalar(s) => Value::Scalar(s),
                Value::Mv(m) => Value::Mv(lift_map(m.sig()).apply(&m)?),
            },
        })
    }
}

/// Evaluates `expr` with basis vectors drawn from `sig`. A purely scalar
/// result is returned in `sig`.
pub fn eval(expr: &Expr, sig: Signature) -> Result<Multivector, EvalError> {
    Ok(Evaluator { sig }.eval(expr)?.into_mv(sig))
}
