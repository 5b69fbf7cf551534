#![allow(dead_code)]

use std::collections::BTreeSet;

use galois_hull::{FieldElement, FieldSpec, LinearCode, Matrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn field(p: u32, e: u32) -> FieldSpec {
    FieldSpec::new(p, e, None).unwrap()
}

pub fn random_element<R: Rng>(rng: &mut R, f: &FieldSpec) -> FieldElement {
    FieldElement(rng.gen_range(0..f.q()))
}

pub fn random_unit<R: Rng>(rng: &mut R, f: &FieldSpec) -> FieldElement {
    FieldElement(rng.gen_range(1..f.q()))
}

pub fn random_matrix<R: Rng>(rng: &mut R, f: &FieldSpec, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| random_element(rng, f)).collect();
    Matrix::from_elements(f, rows, cols, data).unwrap()
}

/// A `rows x cols` matrix of full row rank, by rejection.
pub fn random_full_rank<R: Rng>(rng: &mut R, f: &FieldSpec, rows: usize, cols: usize) -> Matrix {
    assert!(rows <= cols);
    loop {
        let m = random_matrix(rng, f, rows, cols);
        if m.rank() == rows {
            return m;
        }
    }
}

pub fn random_invertible<R: Rng>(rng: &mut R, f: &FieldSpec, k: usize) -> Matrix {
    random_full_rank(rng, f, k, k)
}

pub fn random_code<R: Rng>(rng: &mut R, f: &FieldSpec, k: usize, n: usize) -> (Matrix, LinearCode) {
    let g = random_full_rank(rng, f, k, n);
    let c = LinearCode::from_rows(&g).unwrap();
    (g, c)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    perm
}

/// All `sum_i c_i g_i` for coefficient vectors `c`, by plain odometer enumeration.
pub fn span(g: &Matrix) -> BTreeSet<Vec<u32>> {
    let f = g.field();
    let (k, n) = g.shape();
    let mut coeffs = vec![0u32; k];
    let mut out = BTreeSet::new();
    loop {
        let mut word = vec![FieldElement::ZERO; n];
        for (i, &c) in coeffs.iter().enumerate() {
            for (j, w) in word.iter_mut().enumerate() {
                *w = f.add(*w, f.mul(FieldElement(c), g.get(i, j)));
            }
        }
        out.insert(word.iter().map(|a| a.value()).collect());
        let mut pos = 0;
        loop {
            if pos == k {
                return out;
            }
            coeffs[pos] += 1;
            if coeffs[pos] < f.q() {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
    }
}

/// Hull by brute force: codewords `c` with `<g_j, c>_ell = 0` for every generator row `g_j`.
pub fn enumerated_hull(g: &Matrix, ell: u32) -> BTreeSet<Vec<u32>> {
    let f = g.field();
    span(g)
        .into_iter()
        .filter(|c| {
            let c: Vec<FieldElement> = c.iter().map(|&v| FieldElement(v)).collect();
            g.row_iter().all(|row| f.galois_inner(row, &c, ell).unwrap().is_zero())
        })
        .collect()
}

/// Random vector in the row space of `basis` (zero vector if `basis` has no rows).
fn random_combination(rng: &mut ChaCha8Rng, basis: &Matrix) -> Vec<FieldElement> {
    let f = basis.field();
    let mut v = vec![FieldElement::ZERO; basis.cols()];
    for row in basis.row_iter() {
        let c = random_element(rng, f);
        for (x, &b) in v.iter_mut().zip(row) {
            *x = f.add(*x, f.mul(c, b));
        }
    }
    v
}

/// Invertible `m x m` outer matrix whose `A sigma^ell(A^T)` is diagonal (or upper
/// triangular when `diagonal` is false), with every diagonal entry nonzero if `nonzero_diag`.
pub fn random_outer(
    rng: &mut ChaCha8Rng,
    f: &FieldSpec,
    m: usize,
    ell: u32,
    diagonal: bool,
    nonzero_diag: bool,
) -> Option<Matrix> {
    let e = f.e();
    'attempt: for _ in 0..200 {
        let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(m);
        for _ in 0..m {
            let mut constraints = Vec::new();
            for a in &rows {
                constraints.extend(a.iter().map(|&x| f.frobenius(x, ell)));
                if diagonal {
                    constraints.extend(a.iter().map(|&x| f.frobenius(x, e - ell)));
                }
            }
            let nc = constraints.len() / m;
            let candidates = if nc == 0 {
                Matrix::identity(f, m)
            } else {
                Matrix::from_elements(f, nc, m, constraints).unwrap().right_kernel()
            };
            let a = random_combination(rng, &candidates);
            if nonzero_diag && f.galois_inner(&a, &a, ell).unwrap().is_zero() {
                continue 'attempt;
            }
            rows.push(a);
        }
        let data = rows.into_iter().flatten().collect();
        let a = Matrix::from_elements(f, m, m, data).unwrap();
        if a.rank() == m {
            return Some(a);
        }
    }
    None
}

pub const SMALL_FIELDS: [(u32, u32); 5] = [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)];

pub fn order(pe: (u32, u32)) -> u32 {
    pe.0.pow(pe.1)
}
