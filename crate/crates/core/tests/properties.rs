use blowup_core::io::{parse_graph6, write_graph6};
use blowup_core::spectra::{
    blowup_adjacency_complement_spectrum, blowup_adjacency_spectrum, blowup_complement_signless_spectrum,
    blowup_laplacian_spectrum, blowup_signless_spectrum, difference_eigenvector, stacked_eigenvector,
    FormulaSpectrum,
};
use blowup_core::{
    adjacency, compare_spectra, eig_symmetric, laplacian, signless_laplacian, spectrum_of, BlowUpParams, Graph,
    SymMatrix, DEFAULT_SOLVER_TOL,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1usize..=max_n, prop::sample::select(vec![0.2, 0.5, 0.8, 1.0, 0.0]), any::<u64>()).prop_map(
        |(n, p, seed)| Graph::random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap(),
    )
}

/// All five closed forms for `g`, paired with the explicit blow-up matrix
/// each one describes.
fn families(g: &Graph, t: usize) -> Vec<(&'static str, FormulaSpectrum, SymMatrix)> {
    let n = g.n();
    let gc = g.complement();
    let big = g.blow_up(BlowUpParams::new(t).unwrap());
    let big_c = big.complement();
    let d = g.degrees();
    vec![
        (
            "adjacency",
            blowup_adjacency_spectrum(&spectrum_of(&adjacency(g)).unwrap(), n, t).unwrap(),
            adjacency(&big),
        ),
        (
            "adjacency_complement",
            blowup_adjacency_complement_spectrum(&spectrum_of(&adjacency(&gc)).unwrap(), n, t).unwrap(),
            adjacency(&big_c),
        ),
        (
            "laplacian",
            blowup_laplacian_spectrum(&spectrum_of(&laplacian(g)).unwrap(), d, t).unwrap(),
            laplacian(&big),
        ),
        (
            "signless",
            blowup_signless_spectrum(&spectrum_of(&signless_laplacian(g)).unwrap(), d, t).unwrap(),
            signless_laplacian(&big),
        ),
        (
            "signless_complement",
            blowup_complement_signless_spectrum(&spectrum_of(&signless_laplacian(&gc)).unwrap(), d, n, t).unwrap(),
            signless_laplacian(&big_c),
        ),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_forms_match_the_oracle(g in arb_graph(8), t in 1usize..=4) {
        for (name, formula, matrix) in families(&g, t) {
            prop_assert_eq!(formula.len(), g.n() * t);
            prop_assert_eq!(formula.base_part().len(), g.n());
            prop_assert_eq!(formula.bulk_part().iter().map(|&(_, m)| m).sum::<usize>(), g.n() * (t - 1));
            let oracle = spectrum_of(&matrix).unwrap();
            let cmp = compare_spectra(&formula.flatten(), &oracle, 1e-8);
            prop_assert!(cmp.equal, "{}: {:?}", name, cmp.reason);
        }
    }

    #[test]
    fn order_one_reduces_to_base(g in arb_graph(8)) {
        for (name, formula, matrix) in families(&g, 1) {
            prop_assert!(formula.bulk_part().is_empty(), "{}", name);
            prop_assert_eq!(formula.flatten(), spectrum_of(&matrix).unwrap());
        }
    }

    #[test]
    fn trace_identities(g in arb_graph(8), t in 1usize..=4) {
        let (n, m) = (g.n() as f64, g.edge_count() as f64);
        let t_f = t as f64;
        let nt = n * t_f;
        let fam = families(&g, t);
        let sum = |name: &str| fam.iter().find(|f| f.0 == name).unwrap().1.flatten().sum();
        let bound = 1e-8 * nt;
        prop_assert!(sum("adjacency").abs() <= bound);
        prop_assert!((sum("laplacian") - 2.0 * t_f * t_f * m).abs() <= bound);
        prop_assert!((sum("signless") - 2.0 * t_f * t_f * m).abs() <= bound);
        prop_assert!((sum("signless_complement") - (nt * (nt - 1.0) - 2.0 * t_f * t_f * m)).abs() <= bound);
    }

    #[test]
    fn difference_vectors_are_independent_and_orthogonal_to_stacks(g in arb_graph(6), t in 2usize..=4) {
        let n = g.n();
        let basis = eig_symmetric(&laplacian(&g), DEFAULT_SOLVER_TOL).unwrap();
        for i in 0..n {
            let es: Vec<Vec<f64>> = (1..t).map(|k| difference_eigenvector(i, k, n, t)).collect();
            let gram = SymMatrix::from_upper_fn(t - 1, |a, b| dot(&es[a], &es[b]));
            let smallest = spectrum_of(&gram).unwrap().values().last().copied().unwrap();
            prop_assert!(smallest > 1e-8, "Gram matrix singular for vertex {}", i);
            for p in basis.pairs() {
                let y = stacked_eigenvector(&p.vector, t);
                for e in &es {
                    prop_assert_eq!(dot(&y, e), 0.0);
                }
            }
        }
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[test]
fn complement_bulk_is_non_negative() {
    for g in [Graph::empty(4).unwrap(), Graph::complete(4).unwrap(), Graph::star(4).unwrap()] {
        for t in 2..=4 {
            let (_, f, _) = families(&g, t).pop().unwrap();
            assert!(f.bulk_part().iter().all(|&(x, _)| x >= 0.0));
        }
    }
}
