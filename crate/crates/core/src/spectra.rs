//! Closed-form spectra of blow-ups and their complements, and the explicit
//! eigenvectors that realise them.
//!
//! Every formula takes the spectrum of the base graph (plus its degree
//! sequence where needed) rather than a [`Graph`](crate::Graph), so callers
//! may feed it from the Jacobi oracle or from known closed forms.
//!
//! Vectors use the same copy-major layout as
//! [`Graph::blow_up`](crate::Graph::blow_up): entry `k * n + v` belongs to
//! copy `k` of vertex `v`.

use thiserror::Error;

use crate::eigen::Spectrum;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("blow-up order must be at least 1")]
    ZeroOrder,
    #[error("{what} has {found} entries, expected {expected}")]
    SizeMismatch { what: &'static str, expected: usize, found: usize },
    #[error("degree {degree} of vertex {vertex} exceeds n - 1 = {max}")]
    DegreeOutOfRange { vertex: usize, degree: usize, max: usize },
    #[error("Laplacian spectrum has no eigenvalue within {tol:e} of 0 (closest is {closest})")]
    NoZeroEigenvalue { closest: f64, tol: f64 },
}

/// A blow-up spectrum split into the `n` values inherited from the base
/// graph and the `n(t - 1)` values contributed by the copies.
#[derive(Debug, Clone, PartialEq)]
pub struct FormulaSpectrum {
    base_part: Vec<f64>,
    bulk_part: Vec<(f64, usize)>,
    t: usize,
}

impl FormulaSpectrum {
    fn new(base_part: Vec<f64>, bulk_part: Vec<(f64, usize)>, t: usize) -> Self {
        let bulk_part: Vec<_> = bulk_part.into_iter().filter(|&(_, m)| m > 0).collect();
        debug_assert_eq!(
            bulk_part.iter().map(|&(_, m)| m).sum::<usize>(),
            base_part.len() * (t - 1)
        );
        Self { base_part, bulk_part, t }
    }

    pub fn base_part(&self) -> &[f64] {
        &self.base_part
    }

    /// `(value, multiplicity)` pairs; empty when `t == 1`.
    pub fn bulk_part(&self) -> &[(f64, usize)] {
        &self.bulk_part
    }

    pub fn n(&self) -> usize {
        self.base_part.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Always `n * t`.
    pub fn len(&self) -> usize {
        self.base_part.len() + self.bulk_part.iter().map(|&(_, m)| m).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn flatten(&self) -> Spectrum {
        let bulk = self
            .bulk_part
            .iter()
            .flat_map(|&(x, m)| std::iter::repeat_n(x, m));
        self.base_part.iter().copied().chain(bulk).collect()
    }
}

fn check_order(t: usize) -> Result<(), SpectraError> {
    if t == 0 {
        Err(SpectraError::ZeroOrder)
    } else {
        Ok(())
    }
}

fn check_len(what: &'static str, found: usize, expected: usize) -> Result<(), SpectraError> {
    if found == expected {
        Ok(())
    } else {
        Err(SpectraError::SizeMismatch { what, expected, found })
    }
}

/// Adjacency spectrum of `G^(t)`: `t λ_i` for each base eigenvalue, plus
/// `n(t - 1)` zeros.
pub fn blowup_adjacency_spectrum(base: &Spectrum, n: usize, t: usize) -> Result<FormulaSpectrum, SpectraError> {
    check_order(t)?;
    check_len("adjacency spectrum", base.len(), n)?;
    let t_f = t as f64;
    let base_part = base.values().iter().map(|&l| t_f * l).collect();
    Ok(FormulaSpectrum::new(base_part, vec![(0.0, n * (t - 1))], t))
}

/// Adjacency spectrum of the complement of `G^(t)`, from the adjacency
/// spectrum of the complement of `G`: `t λ_i + t - 1`, plus `n(t - 1)`
/// copies of `-1`.
pub fn blowup_adjacency_complement_spectrum(
    base_complement: &Spectrum,
    n: usize,
    t: usize,
) -> Result<FormulaSpectrum, SpectraError> {
    check_order(t)?;
    check_len("complement adjacency spectrum", base_complement.len(), n)?;
    let (t_f, shift) = (t as f64, (t - 1) as f64);
    let base_part = base_complement.values().iter().map(|&l| t_f * l + shift).collect();
    Ok(FormulaSpectrum::new(base_part, vec![(-1.0, n * (t - 1))], t))
}

fn degree_bulk(degrees: &[usize], t: usize, value: impl Fn(usize) -> f64) -> Vec<(f64, usize)> {
    degrees.iter().map(|&d| (value(d), t - 1)).collect()
}

/// Laplacian spectrum of `G^(t)`: `t μ_i`, plus `t d_v` with multiplicity
/// `t - 1` for every vertex `v`.
pub fn blowup_laplacian_spectrum(
    base_mu: &Spectrum,
    degrees: &[usize],
    t: usize,
) -> Result<FormulaSpectrum, SpectraError> {
    check_order(t)?;
    check_len("Laplacian spectrum", base_mu.len(), degrees.len())?;
    let t_f = t as f64;
    let base_part = base_mu.values().iter().map(|&m| t_f * m).collect();
    let bulk = degree_bulk(degrees, t, |d| t_f * d as f64);
    Ok(FormulaSpectrum::new(base_part, bulk, t))
}

/// Signless Laplacian spectrum of `G^(t)`: `t q_i`, plus `t d_v` with
/// multiplicity `t - 1` for every vertex `v`.
pub fn blowup_signless_spectrum(
    base_q: &Spectrum,
    degrees: &[usize],
    t: usize,
) -> Result<FormulaSpectrum, SpectraError> {
    check_order(t)?;
    check_len("signless Laplacian spectrum", base_q.len(), degrees.len())?;
    let t_f = t as f64;
    let base_part = base_q.values().iter().map(|&q| t_f * q).collect();
    let bulk = degree_bulk(degrees, t, |d| t_f * d as f64);
    Ok(FormulaSpectrum::new(base_part, bulk, t))
}

/// Signless Laplacian spectrum of the complement of `G^(t)`.
///
/// `base_qbar` is the signless Laplacian spectrum of the complement of `G`
/// and `degrees` the degrees of `G` itself. The result is
/// `t q̄_i + 2(t - 1)`, plus `tn - t d_v - 2` with multiplicity `t - 1` for
/// every vertex `v`.
pub fn blowup_complement_signless_spectrum(
    base_qbar: &Spectrum,
    degrees: &[usize],
    n: usize,
    t: usize,
) -> Result<FormulaSpectrum, SpectraError> {
    check_order(t)?;
    check_len("complement signless Laplacian spectrum", base_qbar.len(), n)?;
    check_len("degree sequence", degrees.len(), n)?;
    if let Some((vertex, &degree)) = degrees.iter().enumerate().find(|&(_, &d)| d >= n) {
        return Err(SpectraError::DegreeOutOfRange { vertex, degree, max: n - 1 });
    }
    let (t_f, shift) = (t as f64, 2.0 * (t - 1) as f64);
    let base_part = base_qbar.values().iter().map(|&q| t_f * q + shift).collect();
    let bulk = degree_bulk(degrees, t, |d| (t * n - t * d) as f64 - 2.0);
    // d <= n - 1 gives tn - td - 2 >= t - 2
    debug_assert!(t == 1 || bulk.iter().all(|&(x, _)| x >= 0.0));
    Ok(FormulaSpectrum::new(base_part, bulk, t))
}

/// Laplacian spectrum of the complement of `G^(t)` from the Laplacian
/// spectrum of `G^(t)`.
///
/// With `N = nt`, one zero eigenvalue is dropped from `blowup_mu`, every
/// remaining `μ` becomes `N - μ`, and a zero is added back. The dropped
/// value is the one closest to zero and must lie within `tol` of it.
pub fn blowup_complement_laplacian_spectrum(
    blowup_mu: &Spectrum,
    n: usize,
    t: usize,
    tol: f64,
) -> Result<Spectrum, SpectraError> {
    check_order(t)?;
    let total = n * t;
    check_len("blow-up Laplacian spectrum", blowup_mu.len(), total)?;
    let values = blowup_mu.values();
    let (zero_at, &closest) = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
        .ok_or(SpectraError::NoZeroEigenvalue { closest: f64::NAN, tol })?;
    if closest.is_nan() || closest.abs() > tol {
        return Err(SpectraError::NoZeroEigenvalue { closest, tol });
    }
    let total_f = total as f64;
    Ok(values
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != zero_at)
        .map(|(_, &mu)| total_f - mu)
        .chain(std::iter::once(0.0))
        .collect())
}

/// `t` consecutive copies of `x`.
///
/// An eigenvector of `L(G)`, `Q(G)` or `Q` of the complement of `G` stacks
/// into an eigenvector of the corresponding blow-up matrix.
pub fn stacked_eigenvector(x: &[f64], t: usize) -> Vec<f64> {
    x.repeat(t)
}

/// The difference vector for vertex `i` between copies `k` and `k + 1`.
///
/// `k` is 1-based (`1 <= k <= t - 1`): the result has `+1` at
/// `(k - 1) n + i`, `-1` at `k n + i`, and zeros elsewhere. It is an
/// eigenvector of `L(G^(t))` and `Q(G^(t))` for `t d_i`, and of `Q` of the
/// complement of `G^(t)` for `tn - t d_i - 2`.
///
/// # Panics
///
/// If `i >= n` or `k` is outside `1..t`.
pub fn difference_eigenvector(i: usize, k: usize, n: usize, t: usize) -> Vec<f64> {
    assert!(i < n, "vertex {i} out of range for n = {n}");
    assert!((1..t).contains(&k), "copy index {k} out of range 1..{t}");
    let mut e = vec![0.0; n * t];
    e[(k - 1) * n + i] = 1.0;
    e[k * n + i] = -1.0;
    e
}
