//! Cyclic Jacobi eigensolver for dense symmetric matrices, eigenpair
//! residual checks, and tolerance-aware comparison of spectra.
//!
//! The solver is the numerical oracle every closed-form spectrum is checked
//! against, so it is deliberately plain: no shifts, no deflation, just
//! sweeps of plane rotations over every off-diagonal pair until the
//! off-diagonal mass is negligible.

use thiserror::Error;

use crate::matrix::SymMatrix;

/// Relative off-diagonal norm at which the Jacobi iteration stops.
pub const DEFAULT_SOLVER_TOL: f64 = 1e-12;

/// Tolerance used when comparing spectra and checking eigenpairs.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-8;

/// Sweep budget before the solver gives up.
pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("solver tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e}); \
         the input may contain non-finite entries"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },
}

/// A multiset of eigenvalues, kept sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.values
    }
}

impl From<Vec<f64>> for Spectrum {
    fn from(values: Vec<f64>) -> Self {
        Self::new(values)
    }
}

impl FromIterator<f64> for Spectrum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

/// A full orthonormal eigendecomposition, sorted by non-increasing value.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenBasis {
    dim: usize,
    pairs: Vec<EigenPair>,
}

impl EigenBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pairs(&self) -> &[EigenPair] {
        &self.pairs
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.pairs.iter().map(|p| p.value)
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::new(self.values().collect())
    }
}

/// Full eigendecomposition of `m` by cyclic Jacobi rotations.
///
/// Sweeps run over all pairs `p < q`, each rotation zeroing entry `(p, q)`.
/// The iteration stops once the off-diagonal Frobenius norm is at most
/// `tol * (‖m‖_F + 1)`.
pub fn eig_symmetric(m: &SymMatrix, tol: f64) -> Result<EigenBasis, EigenError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(EigenError::BadTolerance(tol));
    }
    let n = m.dim();
    let mut a = m.to_rows();
    let mut v: Vec<Vec<f64>> = SymMatrix::identity(n).to_rows();
    let threshold = tol * (m.frobenius_norm() + 1.0);

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(EigenError::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut pairs: Vec<EigenPair> = (0..n)
        .map(|j| EigenPair {
            value: a[j][j],
            vector: (0..n).map(|i| v[i][j]).collect(),
        })
        .collect();
    // stable: ties keep solver order
    pairs.sort_by(|x, y| y.value.total_cmp(&x.value));
    Ok(EigenBasis { dim: n, pairs })
}

/// Eigenvalues only, with the default solver tolerance.
pub fn spectrum_of(m: &SymMatrix) -> Result<Spectrum, EigenError> {
    eig_symmetric(m, DEFAULT_SOLVER_TOL).map(|b| b.spectrum())
}

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

/// Applies the rotation that annihilates `a[p][q]`, i.e. `a <- Rᵀ a R`,
/// and accumulates `v <- v R`.
#[allow(clippy::needless_range_loop)]
fn rotate(a: &mut [Vec<f64>], v: &mut [Vec<f64>], p: usize, q: usize) {
    let apq = a[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    let n = a.len();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k][p];
        let akq = a[k][q];
        let new_p = c * akp - s * akq;
        let new_q = s * akp + c * akq;
        a[k][p] = new_p;
        a[p][k] = new_p;
        a[k][q] = new_q;
        a[q][k] = new_q;
    }
    a[p][p] -= t * apq;
    a[q][q] += t * apq;
    a[p][q] = 0.0;
    a[q][p] = 0.0;

    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

fn max_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

/// `‖M v − λ v‖_∞ / max(1, ‖v‖_∞)`.
///
/// # Panics
///
/// If `v.len() != m.dim()`.
pub fn eigenpair_residual(m: &SymMatrix, v: &[f64], lambda: f64) -> f64 {
    let mv = m.mul_vec(v);
    let r: Vec<f64> = mv.iter().zip(v).map(|(x, y)| x - lambda * y).collect();
    max_norm(&r) / max_norm(v).max(1.0)
}

/// Whether `(lambda, v)` is an eigenpair of `m` to within `tol`, measured
/// by [`eigenpair_residual`].
pub fn verify_eigenpair(m: &SymMatrix, v: &[f64], lambda: f64, tol: f64) -> bool {
    eigenpair_residual(m, v, lambda) <= tol
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonResult {
    pub equal: bool,
    /// Largest `|a_i - b_i|` over the sorted pairing; infinite when the
    /// sizes differ.
    pub max_deviation: f64,
    pub reason: Option<String>,
}

/// Multiset equality under tolerance: equal sizes and, after sorting both
/// non-increasing, `|a_i - b_i| <= tol` for all `i`.
pub fn compare_spectra(a: &Spectrum, b: &Spectrum, tol: f64) -> ComparisonResult {
    if a.len() != b.len() {
        return ComparisonResult {
            equal: false,
            max_deviation: f64::INFINITY,
            reason: Some(format!("size mismatch: {} vs {}", a.len(), b.len())),
        };
    }
    let mut worst = 0.0f64;
    let mut worst_at = None;
    for (i, (x, y)) in a.values().iter().zip(b.values()).enumerate() {
        let d = (x - y).abs();
        // NaN must not pass as a small deviation
        let d = if d.is_nan() { f64::INFINITY } else { d };
        if worst_at.is_none() || d > worst {
            worst = d;
            worst_at = Some(i);
        }
    }
    let equal = worst <= tol;
    let reason = (!equal).then(|| {
        let i = worst_at.unwrap_or(0);
        format!(
            "value {} differs: {} vs {} (deviation {:e} > {:e})",
            i,
            a.values()[i],
            b.values()[i],
            worst,
            tol
        )
    });
    ComparisonResult { equal, max_deviation: worst, reason }
}
