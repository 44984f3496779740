use super::project::{build_in, project_in, Projection, VSpace};
use super::{ClassificationOutcome, Frame, FrobeniusError, Stage, Witness, WitnessKind};
use crate::algebra::{AlgebraElement, StructureTensor};
use crate::linalg::{self, Matrix, Tolerance, Vector};
use crate::quaternion::{structure_tensor_of, Label};
use crate::scalar::Scalar;

/// Orthonormal `i`, `j` of `V` and `k = i j`, in the input tensor's
/// coordinates, with the largest defect of the nine quaternion relations.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionFrame<S> {
    pub i: AlgebraElement<S>,
    pub j: AlgebraElement<S>,
    pub k: AlgebraElement<S>,
    pub relation_residual: S,
}

/// Classifies `t` as `R`, `C` or `H`, or returns a witness that it is not an
/// associative division algebra.
pub fn classify<S: Scalar>(t: &StructureTensor<S>, tol: &Tolerance<S>) -> ClassificationOutcome<S> {
    let report = t.check_axioms(tol);
    if !report.has_unity {
        return ClassificationOutcome::Failure(Witness {
            kind: WitnessKind::NoUnity,
            stage: Stage::Axioms,
            residual: S::zero(),
        });
    }
    if let Some(triple) = report.witness_triple {
        return ClassificationOutcome::Failure(Witness {
            kind: WitnessKind::NonAssociative { triple },
            stage: Stage::Axioms,
            residual: report.worst_assoc_residual,
        });
    }
    let frame = match Frame::new(t, tol) {
        Ok(f) => f,
        Err(_) => {
            return ClassificationOutcome::Failure(Witness {
                kind: WitnessKind::NoUnity,
                stage: Stage::Axioms,
                residual: S::zero(),
            })
        }
    };
    match build_in(frame, tol) {
        Ok(space) => classify_from_v(&space, tol),
        Err(w) => ClassificationOutcome::Failure(w),
    }
}

/// Runs the branch on `dim V` for an already built subspace.
pub fn classify_from_v<S: Scalar>(space: &VSpace<S>, tol: &Tolerance<S>) -> ClassificationOutcome<S> {
    match branch(space, tol) {
        Ok(canonical) => success(space, canonical, tol),
        Err(w) => ClassificationOutcome::Failure(w),
    }
}

impl<S: Scalar> QuaternionFrame<S> {
    /// The frame `classify` would use, or `None` when `dim V < 2`.
    pub fn of(space: &VSpace<S>, tol: &Tolerance<S>) -> Option<Self> {
        let f = frame_of(space, tol)?.ok()?;
        Some(Self {
            i: space.frame.lift(&f.i),
            j: space.frame.lift(&f.j),
            k: space.frame.lift(&f.k),
            relation_residual: f.residual,
        })
    }

    /// Largest deviation of `-1/2 scalar(a o b)` from the Kronecker delta
    /// over `a, b` in `{i, j, k}`, computed on `t` (input coordinates).
    pub fn gram_residual(&self, t: &StructureTensor<S>, tol: &Tolerance<S>) -> Result<S, FrobeniusError> {
        let one = t.find_unity(tol)?;
        let oo = one.coords().dot(one.coords());
        let e = [&self.i, &self.j, &self.k];
        let mut worst = S::zero();
        for a in 0..3 {
            for b in 0..3 {
                let s = t.anticommutator(e[a], e[b])?;
                let lambda = s.coords().dot(one.coords()) / oo;
                let off = s.axpy(-lambda, &one).norm();
                let delta = if a == b { S::one() } else { S::zero() };
                worst = worst.max((-lambda * S::lit(0.5) - delta).abs()).max(off);
            }
        }
        Ok(worst)
    }
}

struct WorkFrame<S> {
    ci: Vector<S>,
    cj: Vector<S>,
    i: AlgebraElement<S>,
    j: AlgebraElement<S>,
    k: AlgebraElement<S>,
    residual: S,
    ok: bool,
}

fn frame_of<S: Scalar>(space: &VSpace<S>, tol: &Tolerance<S>) -> Option<Result<WorkFrame<S>, Witness<S>>> {
    let gram = space.gram.as_ref()?;
    let m = space.dim();
    if m < 2 {
        return None;
    }
    let t = &space.frame.work;
    let Some(first) = (0..m).find(|&a| gram[(a, a)] >= tol.eps()) else {
        return Some(Err(space.frame.not_algebraic(
            "no basis vector of V has positive length",
            None,
            S::zero(),
            Stage::InnerProduct,
        )));
    };
    let ci = Vector::unit(m, first).scale(gram[(first, first)].sqrt().recip());
    let cj = match linalg::orthonormal_complement_unit(std::slice::from_ref(&ci), gram, m, tol) {
        Ok(c) => c,
        Err(e) => {
            return Some(Err(space.frame.not_algebraic(
                format!("no unit vector of V orthogonal to i: {e}"),
                None,
                S::zero(),
                Stage::InnerProduct,
            )))
        }
    };
    let i = space.combine(&ci);
    let j = space.combine(&cj);
    let k = t.mul(&i, &j);
    let one = &space.unit;
    let neg_one = one.scale(-S::one());
    let checks: [(&AlgebraElement<S>, &AlgebraElement<S>, AlgebraElement<S>); 9] = [
        (&i, &i, neg_one.clone()),
        (&j, &j, neg_one.clone()),
        (&k, &k, neg_one),
        (&i, &j, k.clone()),
        (&j, &i, -&k),
        (&j, &k, i.clone()),
        (&k, &j, -&i),
        (&k, &i, j.clone()),
        (&i, &k, -&j),
    ];
    let mut residual = S::zero();
    let mut ok = true;
    for (a, b, target) in &checks {
        let r = (&t.mul(a, b) - target).norm();
        residual = residual.max(r);
        ok &= r <= tol.bound(t.product_scale(a.norm(), b.norm()));
    }
    let cols: Vec<Vector<S>> = [one, &i, &j, &k]
        .iter()
        .map(|x| x.coords().normalized().unwrap_or_else(|| x.coords().clone()))
        .collect();
    ok &= linalg::rank(&Matrix::from_columns(&cols).expect("nonempty"), tol) == 4;
    Some(Ok(WorkFrame {
        ci,
        cj,
        i,
        j,
        k,
        residual,
        ok,
    }))
}

/// Canonical basis `1, i, j, k` (truncated) in work coordinates.
fn branch<S: Scalar>(space: &VSpace<S>, tol: &Tolerance<S>) -> Result<(Label, Vec<AlgebraElement<S>>), Witness<S>> {
    let t = &space.frame.work;
    let one = space.unit.clone();
    match space.dim() {
        0 => Ok((Label::R, vec![one])),
        1 => {
            let g = space.gram.as_ref().expect("dim V = 1")[(0, 0)];
            let i = space.basis[0].scale(g.sqrt().recip());
            let r = (&t.mul(&i, &i) + &one).norm();
            if r > tol.bound(t.product_scale(i.norm(), i.norm())) {
                return Err(space.frame.not_algebraic(
                    "normalised generator does not square to -1",
                    Some((&i, &i)),
                    r,
                    Stage::QuaternionRelations,
                ));
            }
            Ok((Label::C, vec![one, i]))
        }
        m => {
            let f = frame_of(space, tol).expect("dim V >= 2")?;
            if !f.ok {
                return Err(relation_failure(space, &f, tol));
            }
            if m == 3 {
                return Ok((Label::H, vec![one, f.i, f.j, f.k]));
            }
            Err(beyond_quaternions(space, &f, tol))
        }
    }
}

/// A unit `e` of `V` orthogonal to `i`, `j`, `k` anticommutes with all three,
/// so `e k = e i j = i j e = k e`; together with `e o k = 0` this forces
/// `e k = 0`.
fn beyond_quaternions<S: Scalar>(space: &VSpace<S>, f: &WorkFrame<S>, tol: &Tolerance<S>) -> Witness<S> {
    let frame = &space.frame;
    let m = space.dim();
    let gram = space.gram.as_ref().expect("dim V > 3");
    let mut cols = vec![space.unit.coords().clone()];
    cols.extend(space.basis.iter().map(|b| b.coords().clone()));
    let a = Matrix::from_columns(&cols).expect("nonempty");
    let Some(x) = linalg::solve_linear(&a, f.k.coords(), tol) else {
        return frame.not_algebraic(
            "k = ij does not lie in R + V",
            Some((&f.i, &f.j)),
            S::zero(),
            Stage::BeyondQuaternions,
        );
    };
    let ck = Vector::new(x.as_slice()[1..].to_vec()).expect("finite");
    match linalg::orthonormal_complement_unit(&[f.ci.clone(), f.cj.clone(), ck], gram, m, tol) {
        Ok(ce) => {
            let e = space.combine(&ce);
            frame.zero_divisor(&e, &f.k, Stage::BeyondQuaternions)
        }
        Err(err) => frame.not_algebraic(
            format!("no unit vector of V orthogonal to i, j, k: {err}"),
            None,
            S::zero(),
            Stage::BeyondQuaternions,
        ),
    }
}

/// The relations for `i`, `j`, `k = ij` failed, which cannot happen in a
/// division algebra. `k = 0` gives `i j = 0` directly; otherwise `k` and a
/// few combinations are pushed through the projection, whose quadratic step
/// yields zero divisors when an element squares to a nonnegative scalar.
fn relation_failure<S: Scalar>(space: &VSpace<S>, f: &WorkFrame<S>, tol: &Tolerance<S>) -> Witness<S> {
    let frame = &space.frame;
    let t = &frame.work;
    if f.k.norm() <= tol.bound(t.product_scale(f.i.norm(), f.j.norm())) {
        return frame.zero_divisor(&f.i, &f.j, Stage::QuaternionRelations);
    }
    let candidates = [f.k.clone(), &f.i + &f.j, &f.i - &f.j, &f.i + &f.k, &f.j + &f.k];
    for z in &candidates {
        if let Ok(Projection::Witness(w)) = project_in(frame, z, tol) {
            if matches!(w.kind, WitnessKind::ZeroDivisor { .. }) {
                return Witness {
                    stage: Stage::QuaternionRelations,
                    ..w
                };
            }
        }
    }
    let detail = match span_coefficients(space, f) {
        Some([a, b, c]) => format!(
            "quaternion relations fail (defect {:e}); k = {a:e} + {b:e} i + {c:e} j",
            f.residual
        ),
        None => format!(
            "quaternion relations fail (defect {:e}); k is outside span(1, i, j)",
            f.residual
        ),
    };
    frame.not_algebraic(detail, Some((&f.i, &f.j)), f.residual, Stage::QuaternionRelations)
}

fn span_coefficients<S: Scalar>(space: &VSpace<S>, f: &WorkFrame<S>) -> Option<[S; 3]> {
    let a = Matrix::from_columns(&[space.unit.coords().clone(), f.i.coords().clone(), f.j.coords().clone()]).ok()?;
    let x = linalg::solve_linear(&a, f.k.coords(), &Tolerance::default())?;
    Some([x[0], x[1], x[2]])
}

fn success<S: Scalar>(
    space: &VSpace<S>,
    (label, canonical): (Label, Vec<AlgebraElement<S>>),
    tol: &Tolerance<S>,
) -> ClassificationOutcome<S> {
    let frame = &space.frame;
    let input = &frame.input;
    let n = input.dim();
    if canonical.len() != n {
        return ClassificationOutcome::Failure(frame.not_algebraic(
            format!("{} canonical vectors for a {n}-dimensional algebra", canonical.len()),
            None,
            S::zero(),
            Stage::Projection,
        ));
    }
    let cols: Vec<Vector<S>> = canonical.iter().map(|x| frame.lift(x).into_coords()).collect();
    let b = Matrix::from_columns(&cols).expect("nonempty");
    let iso = match linalg::inverse(&b, tol) {
        Ok(m) => m,
        Err(_) => {
            return ClassificationOutcome::Failure(frame.not_algebraic(
                "canonical basis is numerically dependent",
                None,
                S::zero(),
                Stage::QuaternionRelations,
            ))
        }
    };
    let residual = homomorphism_residual(input, &iso, &structure_tensor_of(label));
    ClassificationOutcome::Success { label, iso, residual }
}

/// `max |phi(e_a e_b) - phi(e_a) phi(e_b)|` with the target product taken
/// from a canonical tensor.
pub(crate) fn homomorphism_residual<S: Scalar>(
    t: &StructureTensor<S>,
    iso: &Matrix<S>,
    target: &StructureTensor<S>,
) -> S {
    let n = t.dim();
    let images: Vec<AlgebraElement<S>> = (0..n).map(|a| AlgebraElement::from(iso.column(a))).collect();
    let mut worst = S::zero();
    for a in 0..n {
        for b in 0..n {
            let lhs = iso.mul_vec(t.mul(&t.basis(a), &t.basis(b)).coords());
            let rhs = target.mul(&images[a], &images[b]);
            worst = worst.max(lhs.dist(rhs.coords()));
        }
    }
    worst
}
