use super::{AlgebraElement, AlgebraError, StructureTensor};
use crate::linalg::{self, Matrix, RealPolynomial, Tolerance, Vector};
use crate::scalar::Scalar;

/// Unity and associativity checks on a tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport<S> {
    pub has_unity: bool,
    pub unity: Option<AlgebraElement<S>>,
    pub associative: bool,
    /// Largest `|(e_i e_j) e_k - e_i (e_j e_k)|` over all basis triples.
    pub worst_assoc_residual: S,
    /// Arg-max of the residual, present iff not associative.
    pub witness_triple: Option<(usize, usize, usize)>,
}

impl<S: Scalar> StructureTensor<S> {
    /// Solves the stacked system `u e_j = e_j`, `e_j u = e_j` for `u`.
    pub fn find_unity(&self, tol: &Tolerance<S>) -> Result<AlgebraElement<S>, AlgebraError> {
        if let Some(u) = self.unity_index {
            return Ok(self.basis(u));
        }
        let n = self.dim;
        let mut m = Matrix::zeros(2 * n * n, n);
        let mut rhs = Vector::zeros(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let row = j * n + k;
                for i in 0..n {
                    m[(row, i)] = self.c(i, j, k);
                    m[(n * n + row, i)] = self.c(j, i, k);
                }
                if j == k {
                    rhs[row] = S::one();
                    rhs[n * n + row] = S::one();
                }
            }
        }
        let u = linalg::solve_linear(&m, &rhs, tol).ok_or(AlgebraError::NoUnity)?;
        let u = AlgebraElement::from(u);
        let bound = tol.bound(self.product_scale(u.norm(), S::one()));
        for i in 0..n {
            let e = self.basis(i);
            if (&self.mul(&u, &e) - &e).norm() > bound || (&self.mul(&e, &u) - &e).norm() > bound {
                return Err(AlgebraError::NoUnity);
            }
        }
        Ok(u)
    }

    /// Exhaustive associativity scan over all `n^3` basis triples plus the
    /// unity search.
    pub fn check_axioms(&self, tol: &Tolerance<S>) -> AxiomReport<S> {
        let n = self.dim;
        let mut worst = S::zero();
        let mut arg = (0, 0, 0);
        let mut lhs = vec![S::zero(); n];
        let mut rhs = vec![S::zero(); n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    lhs.iter_mut().for_each(|x| *x = S::zero());
                    rhs.iter_mut().for_each(|x| *x = S::zero());
                    for l in 0..n {
                        let a = self.c(i, j, l);
                        let b = self.c(j, k, l);
                        for m in 0..n {
                            lhs[m] += a * self.c(l, k, m);
                            rhs[m] += b * self.c(i, l, m);
                        }
                    }
                    let r = lhs
                        .iter()
                        .zip(&rhs)
                        .fold(S::zero(), |s, (&a, &b)| s + (a - b) * (a - b))
                        .sqrt();
                    if r > worst {
                        worst = r;
                        arg = (i, j, k);
                    }
                }
            }
        }
        let cmax = self.max_abs_constant();
        let associative = worst <= tol.bound(S::from_usize_lossy(n) * cmax * cmax);
        let unity = self.find_unity(tol).ok();
        AxiomReport {
            has_unity: unity.is_some(),
            unity,
            associative,
            worst_assoc_residual: worst,
            witness_triple: (!associative).then_some(arg),
        }
    }

    /// Associator residual `|(e_i e_j) e_k - e_i (e_j e_k)|` of one triple.
    pub fn associator_residual(&self, i: usize, j: usize, k: usize) -> S {
        let (ei, ej, ek) = (self.basis(i), self.basis(j), self.basis(k));
        let lhs = self.mul(&self.mul(&ei, &ej), &ek);
        let rhs = self.mul(&ei, &self.mul(&ej, &ek));
        (&lhs - &rhs).norm()
    }

    /// Monic annihilating polynomial of least degree.
    ///
    /// Powers `1, x, x^2, ...` are appended as columns (each scaled to unit
    /// length) until the power matrix acquires a kernel under the shared rank
    /// threshold; the kernel vector, rescaled to be monic, gives the
    /// coefficients.
    pub fn minimal_polynomial(
        &self,
        x: &AlgebraElement<S>,
        tol: &Tolerance<S>,
    ) -> Result<RealPolynomial<S>, AlgebraError> {
        self.check(x)?;
        let one = self.find_unity(tol)?;
        let n = self.dim;
        let mut powers = vec![one];
        for d in 1..=n {
            let next = self.mul(x, powers.last().unwrap());
            powers.push(next);
            let scales: Vec<S> = powers
                .iter()
                .map(|p| {
                    let s = p.norm();
                    if s > S::zero() {
                        s
                    } else {
                        S::one()
                    }
                })
                .collect();
            let cols: Vec<Vector<S>> = powers
                .iter()
                .zip(&scales)
                .map(|(p, &s)| p.coords().scale(s.recip()))
                .collect();
            let k = Matrix::from_columns(&cols)?;
            let kernel = linalg::kernel_basis(&k, tol);
            let Some(w) = kernel
                .iter()
                .max_by(|a, b| a[d].abs().partial_cmp(&b[d].abs()).unwrap())
            else {
                continue;
            };
            let lead = w[d] / scales[d];
            if lead.abs() <= tol.eps() {
                continue;
            }
            let coeffs: Vec<S> = (0..=d).map(|i| (w[i] / scales[i]) / lead).collect();
            let mut coeffs = coeffs;
            coeffs[d] = S::one();
            return Ok(RealPolynomial::new(coeffs)?);
        }
        // n + 1 powers in n dimensions are always dependent.
        unreachable!("no linear dependency among {} powers", n + 1)
    }

    /// `p(x)` by Horner's rule in the algebra.
    pub fn evaluate_polynomial(
        &self,
        p: &RealPolynomial<S>,
        x: &AlgebraElement<S>,
        tol: &Tolerance<S>,
    ) -> Result<AlgebraElement<S>, AlgebraError> {
        self.check(x)?;
        let one = self.find_unity(tol)?;
        let coeffs = p.coeffs();
        let mut acc = one.scale(*coeffs.last().unwrap());
        for &c in coeffs.iter().rev().skip(1) {
            acc = self.mul(&acc, x).axpy(c, &one);
        }
        Ok(acc)
    }

    /// `Some(lambda)` when `x = lambda 1` within `tol.bound(|x|)`, `None` when
    /// `x` is not scalar.
    pub fn scalar_part_test(&self, x: &AlgebraElement<S>, tol: &Tolerance<S>) -> Result<Option<S>, AlgebraError> {
        self.check(x)?;
        self.scalar_part_within(x, tol.bound(x.norm()), tol)
    }

    /// Scalar test against an explicit residual bound.
    pub fn scalar_part_within(
        &self,
        x: &AlgebraElement<S>,
        bound: S,
        tol: &Tolerance<S>,
    ) -> Result<Option<S>, AlgebraError> {
        let (lambda, residual) = match self.unity_index {
            Some(u) => {
                let off = (0..self.dim)
                    .filter(|&m| m != u)
                    .fold(S::zero(), |s, m| s + x[m] * x[m]);
                (x[u], off.sqrt())
            }
            None => {
                let one = self.find_unity(tol)?;
                let lambda = x.coords().dot(one.coords()) / one.coords().dot(one.coords());
                (lambda, x.axpy(-lambda, &one).norm())
            }
        };
        Ok((residual <= bound).then_some(lambda))
    }

    /// Same algebra with the identity on a basis slot.
    ///
    /// If the identity already is a basis vector its slot is recorded.
    /// Otherwise the basis `{1} + {e_j : j != p}` is adopted, with `p` the
    /// coordinate where the identity is largest, and the basis-change matrix
    /// is kept as provenance (see [`StructureTensor::unity_change`]).
    pub fn normalize_unity(&self, tol: &Tolerance<S>) -> Result<Self, AlgebraError> {
        if self.unity_index.is_some() {
            return Ok(self.clone());
        }
        let u = self.find_unity(tol)?;
        let n = self.dim;
        let p = (0..n)
            .max_by(|&a, &b| u[a].abs().partial_cmp(&u[b].abs()).unwrap().then(b.cmp(&a)))
            .expect("dim > 0");
        let off = (0..n).filter(|&m| m != p).fold(S::zero(), |s, m| s.max(u[m].abs()));
        if (u[p] - S::one()).abs() <= tol.eps() && off <= tol.eps() {
            let mut t = self.clone();
            if t.snap_unity(p, t.max_abs_constant(), tol) {
                return Ok(t);
            }
        }
        let mut cols = vec![u.coords().clone()];
        cols.extend((0..n).filter(|&m| m != p).map(|m| Vector::unit(n, m)));
        let q = Matrix::from_columns(&cols)?;
        let mut t = self.change_basis(&q, tol)?;
        // rounding in Q^-1 c(Qx, Qy) grows like |c| |Q|^2 |Q^-1|
        let qinv = linalg::inverse(&q, tol)?;
        let qn = q.frobenius_norm();
        let scale = t
            .max_abs_constant()
            .max(self.max_abs_constant() * qn * qn * qinv.frobenius_norm());
        t.basis_names[0] = "1".to_string();
        for (slot, m) in (0..n).filter(|&m| m != p).enumerate() {
            t.basis_names[slot + 1] = self.basis_names[m].clone();
        }
        if !t.snap_unity(0, scale, tol) {
            return Err(AlgebraError::NoUnity);
        }
        t.unity_change = Some(q);
        Ok(t)
    }
}
