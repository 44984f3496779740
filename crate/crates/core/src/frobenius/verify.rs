use super::{ClassificationOutcome, FrobeniusError};
use crate::algebra::StructureTensor;
use crate::linalg::{self, Tolerance};
use crate::quaternion::Quaternion;
use crate::scalar::Scalar;

/// Independent check of a success: `max |phi(e_a e_b) - phi(e_a) phi(e_b)|`
/// over basis pairs, with the target product computed by quaternion
/// arithmetic. A singular or misshapen `iso` yields infinity.
pub fn verify_isomorphism<S: Scalar>(
    t: &StructureTensor<S>,
    outcome: &ClassificationOutcome<S>,
    tol: &Tolerance<S>,
) -> Result<S, FrobeniusError> {
    let ClassificationOutcome::Success { label, iso, .. } = outcome else {
        return Err(FrobeniusError::NotASuccess);
    };
    let n = t.dim();
    if iso.rows() != n || iso.cols() != n || label.dim() != n || linalg::rank(iso, tol) < n {
        return Ok(S::infinity());
    }
    let phi = |coords: &[S]| {
        Quaternion::from_coords(
            &iso.mul_vec(&linalg::Vector::new(coords.to_vec()).expect("finite"))
                .into_vec(),
        )
    };
    let images: Vec<Quaternion<S>> = (0..n)
        .map(|a| Quaternion::from_coords(iso.column(a).as_slice()))
        .collect();
    let mut worst = S::zero();
    for a in 0..n {
        for b in 0..n {
            let ab: Vec<S> = (0..n).map(|k| t.c(a, b, k)).collect();
            worst = worst.max(phi(&ab).dist(images[a] * images[b]));
        }
    }
    Ok(worst)
}
