use super::classify::homomorphism_residual;
use super::{ClassificationOutcome, FrobeniusError, Stage, Witness, WitnessKind};
use crate::algebra::{AlgebraError, StructureTensor};
use crate::linalg::{self, Matrix, Tolerance};
use crate::quaternion::{structure_tensor_of, Label};
use crate::scalar::Scalar;

/// Odd-dimensional fast path.
///
/// Every left multiplication `L_d` of an odd-dimensional algebra has a real
/// eigenpair `(lambda, w)`, so `(d - lambda) w = 0`. Any basis element that
/// is not a multiple of 1 therefore yields zero divisors; if none exists the
/// algebra is `R`.
pub fn odd_dimension_shortcut<S: Scalar>(
    t: &StructureTensor<S>,
    tol: &Tolerance<S>,
) -> Result<ClassificationOutcome<S>, FrobeniusError> {
    let n = t.dim();
    if n.is_multiple_of(2) {
        return Err(FrobeniusError::EvenDimension(n));
    }
    let one = match t.find_unity(tol) {
        Ok(u) => u,
        Err(AlgebraError::NoUnity) => {
            return Ok(ClassificationOutcome::Failure(Witness {
                kind: WitnessKind::NoUnity,
                stage: Stage::Axioms,
                residual: S::zero(),
            }))
        }
        Err(e) => return Err(e.into()),
    };
    for m in 0..n {
        let d = t.basis(m);
        if t.scalar_part_test(&d, tol)?.is_some() {
            continue;
        }
        let l = t.left_mul_matrix(&d)?;
        let pairs = linalg::real_eigenpairs(&l, tol);
        let Some((lambda, w)) = pairs.first() else {
            return Ok(ClassificationOutcome::Failure(Witness {
                kind: WitnessKind::NotAlgebraicStep {
                    detail: format!("left multiplication by basis vector {m} has no real eigenvalue"),
                    pair: None,
                },
                stage: Stage::OddDimension,
                residual: S::zero(),
            }));
        };
        let a = d.axpy(-*lambda, &one).normalized();
        let b = crate::algebra::AlgebraElement::from(w.clone()).normalized();
        if let (Some(a), Some(b)) = (a, b) {
            let residual = t.mul(&a, &b).norm();
            return Ok(ClassificationOutcome::Failure(Witness {
                kind: WitnessKind::ZeroDivisor { a, b },
                stage: Stage::OddDimension,
                residual,
            }));
        }
    }
    if n != 1 {
        return Ok(ClassificationOutcome::Failure(Witness {
            kind: WitnessKind::NotAlgebraicStep {
                detail: format!("every basis vector is scalar in dimension {n}"),
                pair: None,
            },
            stage: Stage::OddDimension,
            residual: S::zero(),
        }));
    }
    let iso = Matrix::new(1, 1, vec![one[0].recip()]).map_err(AlgebraError::from)?;
    let residual = homomorphism_residual(t, &iso, &structure_tensor_of(Label::R));
    Ok(ClassificationOutcome::Success {
        label: Label::R,
        iso,
        residual,
    })
}
