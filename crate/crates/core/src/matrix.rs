//! Dense real symmetric matrices and the graph matrix builders.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("a matrix needs dimension at least 1")]
    Empty,
    #[error("row {row} has {len} entries, expected {dim}")]
    Ragged { row: usize, len: usize, dim: usize },
    #[error("entries ({i},{j}) and ({j},{i}) differ")]
    NotSymmetric { i: usize, j: usize },
}

/// A dense symmetric matrix stored row-major.
///
/// Every constructor mirrors entries, so `get(i, j) == get(j, i)` holds
/// bit-for-bit.
#[derive(Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds a matrix by evaluating `f(i, j)` on the upper triangle
    /// (`i <= j`) and mirroring.
    pub fn from_upper_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let x = f(i, j);
                data[i * dim + j] = x;
                data[j * dim + i] = x;
            }
        }
        Self { dim, data }
    }

    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, MatrixError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(MatrixError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::Ragged { row, len: r.len(), dim });
            }
        }
        for i in 0..dim {
            for j in i + 1..dim {
                if rows[i][j] != rows[j][i] {
                    return Err(MatrixError::NotSymmetric { i, j });
                }
            }
        }
        Ok(Self::from_upper_fn(dim, |i, j| rows[i][j]))
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_upper_fn(dim, |_, _| 0.0)
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_upper_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// The all-ones matrix `J`.
    pub fn ones(dim: usize) -> Self {
        Self::from_upper_fn(dim, |_, _| 1.0)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_upper_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim, "vector length does not match matrix dimension");
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        Self::from_upper_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        Self::from_upper_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, s: f64) -> SymMatrix {
        Self::from_upper_fn(self.dim, |i, j| s * self.get(i, j))
    }

    /// `P M Pᵀ` for the permutation sending index `i` to `perm[i]`, i.e. the
    /// result satisfies `out[perm[i]][perm[j]] = self[i][j]`.
    pub fn permuted(&self, perm: &[usize]) -> SymMatrix {
        assert_eq!(perm.len(), self.dim);
        let mut inverse = vec![usize::MAX; self.dim];
        for (i, &p) in perm.iter().enumerate() {
            assert!(p < self.dim && inverse[p] == usize::MAX, "not a permutation");
            inverse[p] = i;
        }
        Self::from_upper_fn(self.dim, |i, j| self.get(inverse[i], inverse[j]))
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymMatrix")
            .field("dim", &self.dim)
            .field("rows", &self.to_rows())
            .finish()
    }
}

/// Kronecker product: block `(i, j)` of the result is `a[i][j] * b`.
pub fn kronecker(a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
    let m = b.dim();
    SymMatrix::from_upper_fn(a.dim() * m, |r, c| {
        a.get(r / m, c / m) * b.get(r % m, c % m)
    })
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    SymMatrix::from_upper_fn(g.n(), |u, v| if g.has_edge(u, v) { 1.0 } else { 0.0 })
}

pub fn degree_matrix(g: &Graph) -> SymMatrix {
    let d: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    SymMatrix::diagonal(&d)
}

/// `L = D - A`.
pub fn laplacian(g: &Graph) -> SymMatrix {
    degree_matrix(g).sub(&adjacency(g))
}

/// `Q = D + A`.
pub fn signless_laplacian(g: &Graph) -> SymMatrix {
    degree_matrix(g).add(&adjacency(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BlowUpParams;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rows(m: &SymMatrix) -> Vec<Vec<f64>> {
        m.to_rows()
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(rows(&adjacency(&Graph::complete(2).unwrap())), vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(adjacency(&Graph::empty(3).unwrap()), SymMatrix::zeros(3));
        assert_eq!(
            rows(&adjacency(&Graph::path(3).unwrap())),
            vec![vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 0.0]]
        );
    }

    #[test]
    fn degree_matrix_examples() {
        assert_eq!(degree_matrix(&Graph::complete(2).unwrap()), SymMatrix::identity(2));
        assert_eq!(degree_matrix(&Graph::path(3).unwrap()), SymMatrix::diagonal(&[1.0, 2.0, 1.0]));
        assert_eq!(degree_matrix(&Graph::star(3).unwrap()), SymMatrix::diagonal(&[3.0, 1.0, 1.0, 1.0]));
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(rows(&laplacian(&Graph::complete(2).unwrap())), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        assert_eq!(
            rows(&laplacian(&Graph::path(3).unwrap())),
            vec![vec![1.0, -1.0, 0.0], vec![-1.0, 2.0, -1.0], vec![0.0, -1.0, 1.0]]
        );
        assert_eq!(laplacian(&Graph::empty(2).unwrap()), SymMatrix::zeros(2));
    }

    #[test]
    fn signless_examples() {
        assert_eq!(signless_laplacian(&Graph::complete(2).unwrap()), SymMatrix::ones(2));
        assert_eq!(
            rows(&signless_laplacian(&Graph::path(3).unwrap())),
            vec![vec![1.0, 1.0, 0.0], vec![1.0, 2.0, 1.0], vec![0.0, 1.0, 1.0]]
        );
        assert_eq!(signless_laplacian(&Graph::empty(4).unwrap()), SymMatrix::zeros(4));
    }

    #[test]
    fn kronecker_examples() {
        let k = kronecker(&adjacency(&Graph::complete(2).unwrap()), &SymMatrix::ones(2));
        assert_eq!(
            rows(&k),
            vec![
                vec![0.0, 0.0, 1.0, 1.0],
                vec![0.0, 0.0, 1.0, 1.0],
                vec![1.0, 1.0, 0.0, 0.0],
                vec![1.0, 1.0, 0.0, 0.0],
            ]
        );
        assert_eq!(kronecker(&SymMatrix::identity(2), &SymMatrix::identity(2)), SymMatrix::identity(4));
        let m = laplacian(&Graph::petersen());
        assert_eq!(kronecker(&SymMatrix::ones(1), &m), m);
    }

    #[test]
    fn from_rows_validates() {
        assert_eq!(SymMatrix::from_rows(&[]), Err(MatrixError::Empty));
        assert_eq!(
            SymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 1.0]]),
            Err(MatrixError::NotSymmetric { i: 0, j: 1 })
        );
        assert_eq!(
            SymMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0]]),
            Err(MatrixError::Ragged { row: 1, len: 1, dim: 2 })
        );
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| {
            Graph::random_gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
        })
    }

    proptest! {
        #[test]
        fn blow_up_adjacency_is_kronecker(g in arb_graph(6), t in 1usize..=3) {
            let n = g.n();
            let blown = adjacency(&g.blow_up(BlowUpParams::new(t).unwrap()));
            let copy_major = kronecker(&SymMatrix::ones(t), &adjacency(&g));
            prop_assert_eq!(&blown, &copy_major);

            // k*n + v  ->  v*t + k  turns J_t ⊗ A into A ⊗ J_t
            let perm: Vec<usize> = (0..n * t).map(|i| (i % n) * t + i / n).collect();
            let vertex_major = kronecker(&adjacency(&g), &SymMatrix::ones(t));
            prop_assert_eq!(blown.permuted(&perm), vertex_major);
        }

        #[test]
        fn laplacian_rows_sum_to_zero(g in arb_graph(8)) {
            let l = laplacian(&g);
            for i in 0..g.n() {
                prop_assert_eq!(l.row(i).iter().sum::<f64>(), 0.0);
            }
        }

        #[test]
        fn traces(g in arb_graph(8)) {
            let m = 2.0 * g.edge_count() as f64;
            prop_assert_eq!(adjacency(&g).trace(), 0.0);
            prop_assert_eq!(laplacian(&g).trace(), m);
            prop_assert_eq!(signless_laplacian(&g).trace(), m);
        }
    }
}
