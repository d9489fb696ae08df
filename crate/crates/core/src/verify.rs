//! End-to-end checks: build `G^(t)` and its complement explicitly, run the
//! Jacobi oracle on them, and compare with the closed forms.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eigen::{eig_symmetric, eigenpair_residual, compare_spectra, EigenBasis, Spectrum, DEFAULT_SOLVER_TOL};
use crate::graph::{BlowUpParams, Graph};
use crate::io::{FamilyRecord, VerificationReport};
use crate::matrix::{adjacency, laplacian, signless_laplacian, SymMatrix};
use crate::spectra::{
    blowup_adjacency_complement_spectrum, blowup_adjacency_spectrum, blowup_complement_laplacian_spectrum,
    blowup_complement_signless_spectrum, blowup_laplacian_spectrum, blowup_signless_spectrum,
    difference_eigenvector, stacked_eigenvector,
};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixFamily {
    Adjacency,
    Laplacian,
    Signless,
}

impl MatrixFamily {
    pub const ALL: [MatrixFamily; 3] = [Self::Adjacency, Self::Laplacian, Self::Signless];

    pub fn name(self) -> &'static str {
        match self {
            Self::Adjacency => "adjacency",
            Self::Laplacian => "laplacian",
            Self::Signless => "signless",
        }
    }

    pub fn matrix(self, g: &Graph) -> SymMatrix {
        match self {
            Self::Adjacency => adjacency(g),
            Self::Laplacian => laplacian(g),
            Self::Signless => signless_laplacian(g),
        }
    }

    /// Report label: `laplacian`, `signless_complement`, ...
    pub fn label(self, complement: bool) -> String {
        if complement {
            format!("{}_complement", self.name())
        } else {
            self.name().to_string()
        }
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown matrix family {s:?}"))
    }
}

/// The five families a verification report covers, as
/// `(family, complement)`.
pub const REPORT_FAMILIES: [(MatrixFamily, bool); 5] = [
    (MatrixFamily::Adjacency, false),
    (MatrixFamily::Adjacency, true),
    (MatrixFamily::Laplacian, false),
    (MatrixFamily::Signless, false),
    (MatrixFamily::Signless, true),
];

/// Oracle spectrum of the chosen matrix of `g` (or of its complement).
pub fn oracle_spectrum(g: &Graph, family: MatrixFamily, complement: bool) -> Result<Spectrum, Error> {
    let target = if complement { g.complement() } else { g.clone() };
    Ok(eig_symmetric(&family.matrix(&target), DEFAULT_SOLVER_TOL)?.spectrum())
}

/// Spectrum of the chosen matrix of `G^(t)` (or of its complement) from the
/// closed forms. Only the base graph goes through the eigensolver.
pub fn closed_form_spectrum(
    g: &Graph,
    t: usize,
    family: MatrixFamily,
    complement: bool,
    tol: f64,
) -> Result<Spectrum, Error> {
    let n = g.n();
    let degrees = g.degrees();
    let spectrum = match (family, complement) {
        (MatrixFamily::Adjacency, false) => {
            blowup_adjacency_spectrum(&oracle_spectrum(g, family, false)?, n, t)?.flatten()
        }
        (MatrixFamily::Adjacency, true) => {
            blowup_adjacency_complement_spectrum(&oracle_spectrum(g, family, true)?, n, t)?.flatten()
        }
        (MatrixFamily::Laplacian, false) => {
            blowup_laplacian_spectrum(&oracle_spectrum(g, family, false)?, degrees, t)?.flatten()
        }
        (MatrixFamily::Laplacian, true) => {
            let mu = blowup_laplacian_spectrum(&oracle_spectrum(g, family, false)?, degrees, t)?;
            blowup_complement_laplacian_spectrum(&mu.flatten(), n, t, tol)?
        }
        (MatrixFamily::Signless, false) => {
            blowup_signless_spectrum(&oracle_spectrum(g, family, false)?, degrees, t)?.flatten()
        }
        (MatrixFamily::Signless, true) => {
            blowup_complement_signless_spectrum(&oracle_spectrum(g, family, true)?, degrees, n, t)?.flatten()
        }
    };
    Ok(spectrum)
}

/// Largest relative residual over every eigenvector the closed forms
/// construct for `G^(t)`:
///
/// * stacked `y_i` from the bases of `L(G)`, `Q(G)` and `Q` of the
///   complement, against `t μ_i`, `t q_i` and `t q̄_i + 2(t - 1)`;
/// * difference vectors `E_i^k` against `t d_i` on `L` and `Q` of the
///   blow-up and `tn - t d_i - 2` on `Q` of its complement.
pub fn max_eigenvector_residual(g: &Graph, t: usize) -> Result<f64, Error> {
    let params = BlowUpParams::new(t)?;
    let (n, t_f) = (g.n(), t as f64);
    let big = g.blow_up(params);
    let big_l = laplacian(&big);
    let big_q = signless_laplacian(&big);
    let big_qc = signless_laplacian(&big.complement());

    let basis = |m: SymMatrix| -> Result<EigenBasis, Error> { Ok(eig_symmetric(&m, DEFAULT_SOLVER_TOL)?) };
    let stacked = [
        (basis(laplacian(g))?, &big_l, t_f, 0.0),
        (basis(signless_laplacian(g))?, &big_q, t_f, 0.0),
        (basis(signless_laplacian(&g.complement()))?, &big_qc, t_f, 2.0 * (t_f - 1.0)),
    ];

    let mut worst = 0.0f64;
    for (base, target, scale, shift) in &stacked {
        for p in base.pairs() {
            let y = stacked_eigenvector(&p.vector, t);
            worst = worst.max(eigenpair_residual(target, &y, scale * p.value + shift));
        }
    }
    for i in 0..n {
        let td = t_f * g.degree(i) as f64;
        let complement_value = (t * n) as f64 - td - 2.0;
        for k in 1..t {
            let e = difference_eigenvector(i, k, n, t);
            worst = worst
                .max(eigenpair_residual(&big_l, &e, td))
                .max(eigenpair_residual(&big_q, &e, td))
                .max(eigenpair_residual(&big_qc, &e, complement_value));
        }
    }
    Ok(worst)
}

/// Runs all five families for `G^(t)` and every constructed eigenvector,
/// at comparison tolerance `tol`.
pub fn verify_blowup(g: &Graph, graph_id: &str, t: usize, tol: f64) -> Result<VerificationReport, Error> {
    let big = g.blow_up(BlowUpParams::new(t)?);
    let big_c = big.complement();

    let mut families = Vec::with_capacity(REPORT_FAMILIES.len());
    for (family, complement) in REPORT_FAMILIES {
        let formula = closed_form_spectrum(g, t, family, complement, tol)?;
        let target = if complement { &big_c } else { &big };
        let oracle = eig_symmetric(&family.matrix(target), DEFAULT_SOLVER_TOL)?.spectrum();
        let cmp = compare_spectra(&formula, &oracle, tol);
        families.push(FamilyRecord {
            family: family.label(complement),
            formula: formula.into_vec(),
            oracle: oracle.into_vec(),
            max_deviation: cmp.max_deviation,
            pass: cmp.equal,
        });
    }
    let residual = max_eigenvector_residual(g, t)?;
    Ok(VerificationReport::new(graph_id, g.n(), t, tol, families, residual))
}

/// Edge probabilities used by the random suite.
pub const SUITE_EDGE_PROBABILITIES: [f64; 3] = [0.2, 0.5, 0.8];

#[derive(Debug, Clone)]
pub struct SuiteGraph {
    pub id: String,
    pub p: f64,
    pub graph: Graph,
}

/// `count` Erdős–Rényi graphs with `n` drawn from `2..=8` and `p` from
/// [`SUITE_EDGE_PROBABILITIES`], reproducible from `seed`.
pub fn random_suite(seed: u64, count: usize) -> Vec<SuiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.random_range(2..=8);
            let p = SUITE_EDGE_PROBABILITIES[rng.random_range(0..SUITE_EDGE_PROBABILITIES.len())];
            let graph = Graph::random_gnp(n, p, &mut rng).expect("n >= 2");
            SuiteGraph { id: format!("gnp-{seed}-{i}-n{n}-p{p}"), p, graph }
        })
        .collect()
}
