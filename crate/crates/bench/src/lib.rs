//! Deterministic inputs for the benchmarks.

use galois_hull::{FieldElement, FieldSpec, LinearCode, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_matrix(field: &FieldSpec, rows: usize, cols: usize, seed: u64) -> Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..rows * cols)
        .map(|_| FieldElement(rng.gen_range(0..field.q())))
        .collect();
    Matrix::from_elements(field, rows, cols, data).expect("shape matches")
}

/// A `[n, k]` code; seeds are advanced until the random generator has full rank.
pub fn random_code(field: &FieldSpec, k: usize, n: usize, seed: u64) -> LinearCode {
    (seed..)
        .map(|s| random_matrix(field, k, n, s))
        .find(|g| g.rank() == k)
        .map(|g| LinearCode::from_rows(&g).expect("nonzero width"))
        .expect("full-rank matrices exist")
}
