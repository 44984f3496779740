use std::fmt;

use super::{LinalgError, Tolerance};
use crate::scalar::Scalar;

/// Iteration budget for peeling quadratic factors.
pub const QUADRATIC_ITERATION_BUDGET: usize = 10_000;

/// Real polynomial with coefficients in ascending degree.
///
/// The leading coefficient is nonzero; the zero polynomial is not
/// representable.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> RealPolynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Result<Self, LinalgError> {
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(LinalgError::NonFinite(i));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(LinalgError::DegeneratePolynomial);
        }
        Ok(Self { coeffs })
    }

    pub(crate) fn from_coeffs_unchecked(coeffs: Vec<S>) -> Self {
        debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
        Self { coeffs }
    }

    /// `(X - r)`.
    pub fn linear(r: S) -> Self {
        Self {
            coeffs: vec![-r, S::one()],
        }
    }

    /// Monic polynomial with the given real roots.
    pub fn from_roots(roots: &[S]) -> Self {
        roots
            .iter()
            .fold(Self { coeffs: vec![S::one()] }, |acc, &r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> S {
        *self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == S::one()
    }

    pub fn max_abs_coeff(&self) -> S {
        self.coeffs.iter().fold(S::zero(), |m, c| m.max(c.abs()))
    }

    pub fn monic(&self) -> Self {
        let lead = self.leading();
        let mut coeffs: Vec<S> = self.coeffs.iter().map(|&c| c / lead).collect();
        *coeffs.last_mut().unwrap() = S::one();
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: S) -> S {
        horner(&self.coeffs, x)
    }

    pub fn derivative(&self) -> Option<Self> {
        if self.degree() == 0 {
            return None;
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| c * S::from_usize_lossy(i + 1))
            .collect();
        Some(Self { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Long division; the remainder is returned as a raw coefficient list
    /// (possibly all zeros) of length `divisor.degree()`.
    pub fn div_rem(&self, divisor: &Self) -> (Option<Self>, Vec<S>) {
        let d = divisor.degree();
        if self.degree() < d {
            return (None, self.coeffs.clone());
        }
        let mut rem = self.coeffs.clone();
        let lead = divisor.leading();
        let mut quot = vec![S::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + d] / lead;
            quot[k] = q;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= q * c;
            }
        }
        rem.truncate(d);
        (Some(Self { coeffs: quot }), rem)
    }

    /// Cauchy bound: every root has modulus below this.
    pub fn cauchy_bound(&self) -> S {
        let lead = self.leading().abs();
        let m = self.coeffs[..self.degree()]
            .iter()
            .fold(S::zero(), |m, c| m.max(c.abs()));
        S::one() + m / lead
    }

    /// Discriminant of a quadratic, `None` for other degrees.
    pub fn discriminant(&self) -> Option<S> {
        if self.degree() != 2 {
            return None;
        }
        let (c, b, a) = (self.coeffs[0], self.coeffs[1], self.coeffs[2]);
        Some(b * b - S::lit(4.0) * a * c)
    }
}

impl<S: Scalar> fmt::Display for RealPolynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < S::zero();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = k == 0 || a != S::one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn horner<S: Scalar>(coeffs: &[S], x: S) -> S {
    coeffs.iter().rev().fold(S::zero(), |acc, &c| acc * x + c)
}

/// Distinct real roots in ascending order.
///
/// Roots of `p` are isolated between consecutive critical points (roots of
/// `p'`, found recursively) where `p` is monotone, then refined by sign-change
/// bisection on `[-B, B]` with `B` the Cauchy bound. A critical point where
/// `|p|` is within tolerance is reported as a root of even multiplicity and
/// the adjacent monotone pieces are not searched again.
pub fn real_roots<S: Scalar>(p: &RealPolynomial<S>, tol: &Tolerance<S>) -> Vec<S> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let threshold = tol.bound(p.max_abs_coeff());
    let mut roots = roots_rec(p, threshold, tol);
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    merge_clusters(p, roots, tol)
}

fn roots_rec<S: Scalar>(p: &RealPolynomial<S>, threshold: S, tol: &Tolerance<S>) -> Vec<S> {
    match p.degree() {
        0 => return Vec::new(),
        1 => return vec![-p.coeffs[0] / p.coeffs[1]],
        _ => {}
    }
    let bound = p.cauchy_bound();
    let dp = p.derivative().expect("degree >= 2");
    // Each level gets its own scale-aware threshold.
    let dthreshold = tol.bound(dp.max_abs_coeff());
    let mut crit = roots_rec(&dp, dthreshold, tol);
    crit.retain(|c| c.abs() < bound);
    crit.sort_by(|a, b| a.partial_cmp(b).unwrap());
    crit.dedup();

    let mut points = Vec::with_capacity(crit.len() + 2);
    points.push((-bound, false));
    let mut roots = Vec::new();
    for &c in &crit {
        let is_root = p.eval(c).abs() <= threshold;
        if is_root {
            roots.push(c);
        }
        points.push((c, is_root));
    }
    points.push((bound, false));

    for w in points.windows(2) {
        let ((a, a_root), (b, b_root)) = (w[0], w[1]);
        if a_root || b_root {
            continue;
        }
        let (fa, fb) = (p.eval(a), p.eval(b));
        if fa == S::zero() {
            roots.push(a);
        } else if (fa < S::zero()) != (fb < S::zero()) && fb != S::zero() {
            roots.push(bisect(p, a, b, fa));
        } else if fb == S::zero() {
            roots.push(b);
        }
    }
    roots
}

fn bisect<S: Scalar>(p: &RealPolynomial<S>, mut lo: S, mut hi: S, flo: S) -> S {
    let width = S::lit(1e-13);
    let half = S::lit(0.5);
    let lo_neg = flo < S::zero();
    for _ in 0..2000 {
        let mid = lo + (hi - lo) * half;
        if hi - lo <= width * S::one().max(mid.abs()) || mid == lo || mid == hi {
            return mid;
        }
        let fm = p.eval(mid);
        if fm == S::zero() {
            return mid;
        }
        if (fm < S::zero()) == lo_neg {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo + (hi - lo) * half
}

/// Collapses numerically indistinguishable roots, keeping the member of each
/// cluster with the smallest residual.
fn merge_clusters<S: Scalar>(p: &RealPolynomial<S>, sorted: Vec<S>, tol: &Tolerance<S>) -> Vec<S> {
    let radius = tol.eps().sqrt();
    let mut out: Vec<S> = Vec::with_capacity(sorted.len());
    for r in sorted {
        match out.last_mut() {
            Some(last) if (r - *last).abs() <= radius * (S::one() + r.abs()) => {
                if p.eval(r).abs() < p.eval(*last).abs() {
                    *last = r;
                }
            }
            _ => out.push(r),
        }
    }
    out
}

/// Splits `p` into monic linear factors and monic quadratic factors with
/// negative discriminant, so that `p = lead * prod(factors)`.
///
/// Real roots are divided out by synthetic division until the remainder has
/// none left; quadratic factors are then peeled from the remainder with
/// Bairstow's iteration on the coefficient pair of `X^2 - rX - s`.
pub fn factor_linear_quadratic<S: Scalar>(
    p: &RealPolynomial<S>,
    tol: &Tolerance<S>,
) -> Result<Vec<RealPolynomial<S>>, LinalgError> {
    if p.degree() == 0 {
        return Err(LinalgError::DegeneratePolynomial);
    }
    let mut rest = p.monic();
    let mut factors = Vec::new();

    // One pass removes each distinct root once; repeat for multiplicities.
    for _ in 0..=p.degree() {
        if rest.degree() == 0 {
            break;
        }
        let roots = real_roots(&rest, tol);
        if roots.is_empty() {
            break;
        }
        for r in roots {
            if rest.degree() == 0 {
                break;
            }
            rest = deflate_linear(&rest, r);
            factors.push(RealPolynomial::linear(r));
        }
    }

    let mut budget = QUADRATIC_ITERATION_BUDGET;
    while rest.degree() > 2 {
        let (quad, quot) = bairstow(&rest, &mut budget, tol)?;
        factors.extend(split_quadratic(quad));
        rest = quot;
    }
    match rest.degree() {
        0 => {}
        1 => factors.push(rest.monic()),
        _ => factors.extend(split_quadratic(rest)),
    }
    Ok(factors)
}

fn deflate_linear<S: Scalar>(p: &RealPolynomial<S>, r: S) -> RealPolynomial<S> {
    let n = p.degree();
    let mut q = vec![S::zero(); n];
    let mut acc = S::zero();
    for k in (0..n).rev() {
        acc = acc * r + p.coeffs[k + 1];
        q[k] = acc;
    }
    RealPolynomial::from_coeffs_unchecked(q)
}

/// A monic quadratic whose discriminant came out nonnegative is split into
/// linear factors so every returned quadratic is irreducible.
fn split_quadratic<S: Scalar>(q: RealPolynomial<S>) -> Vec<RealPolynomial<S>> {
    let disc = q.discriminant().expect("quadratic");
    if disc < S::zero() {
        return vec![q];
    }
    let b = q.coeffs[1];
    let s = disc.sqrt();
    let two = S::lit(2.0);
    // Stable pair: the larger-magnitude root first, the other via Vieta.
    let r1 = if b >= S::zero() { (-b - s) / two } else { (-b + s) / two };
    let r2 = if r1 != S::zero() { q.coeffs[0] / r1 } else { S::zero() };
    let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    vec![RealPolynomial::linear(lo), RealPolynomial::linear(hi)]
}

/// One quadratic factor of the monic `p` (degree >= 3) and the quotient.
fn bairstow<S: Scalar>(
    p: &RealPolynomial<S>,
    budget: &mut usize,
    tol: &Tolerance<S>,
) -> Result<(RealPolynomial<S>, RealPolynomial<S>), LinalgError> {
    let n = p.degree();
    let a = &p.coeffs;
    let scale = p.max_abs_coeff();
    // Deterministic restart seeds for (r, s) in X^2 - rX - s.
    let seeds: [(f64, f64); 6] = [
        (0.0, -1.0),
        (1.0, -1.0),
        (-1.0, -2.0),
        (0.5, -0.5),
        (2.0, -3.0),
        (-1.5, -0.75),
    ];
    let mut attempt = 0usize;
    while *budget > 0 {
        let (r0, s0) = seeds[attempt % seeds.len()];
        let grow = S::lit(1.0 + (attempt / seeds.len()) as f64);
        let mut r = S::lit(r0) * grow;
        let mut s = S::lit(s0) * grow;
        attempt += 1;
        let mut b = vec![S::zero(); n + 1];
        let mut c = vec![S::zero(); n + 1];
        for _ in 0..200 {
            if *budget == 0 {
                break;
            }
            *budget -= 1;
            b[n] = a[n];
            b[n - 1] = a[n - 1] + r * b[n];
            for k in (0..n - 1).rev() {
                b[k] = a[k] + r * b[k + 1] + s * b[k + 2];
            }
            c[n] = b[n];
            c[n - 1] = b[n - 1] + r * c[n];
            for k in (1..n - 1).rev() {
                c[k] = b[k] + r * c[k + 1] + s * c[k + 2];
            }
            let det = c[2] * c[2] - c[3] * c[1];
            if det == S::zero() || !det.is_finite() {
                break;
            }
            let dr = (-b[1] * c[2] + b[0] * c[3]) / det;
            let ds = (-b[0] * c[2] + b[1] * c[1]) / det;
            if !dr.is_finite() || !ds.is_finite() {
                break;
            }
            r += dr;
            s += ds;
            let step_small = dr.abs() <= S::epsilon() * S::lit(16.0) * (S::one() + r.abs())
                && ds.abs() <= S::epsilon() * S::lit(16.0) * (S::one() + s.abs());
            if step_small {
                break;
            }
        }
        let quad = RealPolynomial::from_coeffs_unchecked(vec![-s, -r, S::one()]);
        if !(r.is_finite() && s.is_finite()) {
            continue;
        }
        let (quot, rem) = p.div_rem(&quad);
        let rem_max = rem.iter().fold(S::zero(), |m, x| m.max(x.abs()));
        if rem_max <= tol.bound(scale) {
            return Ok((quad, quot.expect("degree >= 3")));
        }
    }
    Err(LinalgError::ConvergenceFailure(QUADRATIC_ITERATION_BUDGET))
}
