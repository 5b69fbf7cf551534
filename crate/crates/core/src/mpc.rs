//! Matrix product codes `[C_1, ..., C_M] * A`.
//!
//! Codewords are rows: `[c_1, ..., c_M] * A = [c_1, ..., c_M] (A (x) I_n)`, so
//! coordinate block `j` of a codeword is `sum_i a_ij c_i`.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::Matrix;

#[derive(Debug, Clone)]
pub struct MatrixProductSpec {
    codes: Vec<LinearCode>,
    outer: Matrix,
}

impl MatrixProductSpec {
    /// `codes` must share a field and a length; `outer` is `M x N` with `M = codes.len()`.
    pub fn new(codes: Vec<LinearCode>, outer: Matrix) -> Result<Self> {
        let Some(first) = codes.first() else {
            return Err(Error::DimensionMismatch(
                "at least one constituent code is required".into(),
            ));
        };
        if codes.iter().any(|c| c.field() != first.field()) || outer.field() != first.field() {
            return Err(Error::FieldMismatch);
        }
        if let Some(c) = codes.iter().find(|c| c.n() != first.n()) {
            return Err(Error::DimensionMismatch(format!(
                "constituent lengths {} and {} differ",
                first.n(),
                c.n()
            )));
        }
        if outer.rows() != codes.len() {
            return Err(Error::DimensionMismatch(format!(
                "outer matrix has {} rows for {} codes",
                outer.rows(),
                codes.len()
            )));
        }
        Ok(MatrixProductSpec { codes, outer })
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    pub fn outer(&self) -> &Matrix {
        &self.outer
    }

    pub fn field(&self) -> &FieldSpec {
        self.outer.field()
    }

    /// Constituent length `n`.
    pub fn n(&self) -> usize {
        self.codes[0].n()
    }

    /// Length of the product code, `N n`.
    pub fn length(&self) -> usize {
        self.outer.cols() * self.n()
    }

    /// `A sigma^ell(A^T)`.
    pub fn outer_gram(&self, ell: u32) -> Result<Matrix> {
        self.outer.galois_gram(ell)
    }

    /// `(lambda_1, ..., lambda_M)` when `A sigma^ell(A^T)` is diagonal.
    pub fn lambda(&self, ell: u32) -> Result<Option<Vec<FieldElement>>> {
        let g = self.outer_gram(ell)?;
        Ok(g.is_diagonal().then(|| g.diagonal()))
    }

    fn check_right_nonsingular(&self) -> Result<()> {
        if self.outer.right_inverse().is_some() {
            Ok(())
        } else {
            Err(Error::NotRightNonsingular {
                rank: self.outer.rank(),
                rows: self.outer.rows(),
            })
        }
    }
}

/// Block generator with `(i, j)` block `a_ij G_i`, i.e. `diag(G_1, ..., G_M) (A (x) I_n)`.
pub fn mpc_generator(spec: &MatrixProductSpec) -> Result<Matrix> {
    spec.check_right_nonsingular()?;
    let f = spec.field();
    let n = spec.n();
    let total: usize = spec.codes.iter().map(LinearCode::k).sum();
    let mut g = Matrix::zeros(f, total, spec.length());
    let mut row0 = 0;
    for (i, code) in spec.codes.iter().enumerate() {
        let gi = code.generator();
        for j in 0..spec.outer.cols() {
            let a = spec.outer.get(i, j);
            if a.is_zero() {
                continue;
            }
            for r in 0..gi.rows() {
                for c in 0..n {
                    g.set(row0 + r, j * n + c, f.mul(a, gi.get(r, c)));
                }
            }
        }
        row0 += gi.rows();
    }
    Ok(g)
}

/// The product code itself. Its dimension is always `sum_i dim C_i`.
pub fn mpc_construct(spec: &MatrixProductSpec) -> Result<LinearCode> {
    let g = mpc_generator(spec)?;
    let code = LinearCode::from_rows(&g)?;
    assert_eq!(
        code.k(),
        g.rows(),
        "matrix product code lost dimension under a right non-singular A"
    );
    Ok(code)
}

/// The hull `[B_1, ..., B_M] * A` with `B_i = C_i` where `lambda_i = 0` and
/// `B_i = h_ell(C_i)` otherwise. Refuses unless `A sigma^ell(A^T)` is diagonal.
pub fn mpc_hull(spec: &MatrixProductSpec, ell: u32) -> Result<LinearCode> {
    let lambda = spec.lambda(ell)?.ok_or(Error::NonDiagonalGram)?;
    let parts = spec
        .codes
        .iter()
        .zip(&lambda)
        .map(|(c, l)| {
            if l.is_zero() {
                Ok(c.clone())
            } else {
                Ok(c.hull(ell)?.hull)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let hull_spec = MatrixProductSpec::new(parts, spec.outer.clone())?;
    let by_formula = mpc_construct(&hull_spec)?;
    let direct = mpc_construct(spec)?.hull(ell)?.hull;
    assert_eq!(
        by_formula, direct,
        "product-code hull formula disagrees with the direct hull"
    );
    Ok(by_formula)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HullDimBounds {
    pub lower: usize,
    pub upper: usize,
    /// `A sigma^ell(A^T)` is upper or lower triangular.
    pub triangular: bool,
}

/// Bounds on `dim h_ell([C_1, ..., C_M] * A)` read off from `A sigma^ell(A^T)`.
///
/// The refined upper bound `sum_i dim h_ell(C_i)` needs a triangular outer Gram
/// with a nonzero diagonal. A zero diagonal entry lets all of `C_i` fall into the
/// hull, and then only the trivial bound `sum_i k_i` is reported.
pub fn mpc_hull_dim_bounds(spec: &MatrixProductSpec, ell: u32) -> Result<HullDimBounds> {
    spec.check_right_nonsingular()?;
    let b = spec.outer_gram(ell)?;
    let triangular = b.is_upper_triangular() || b.is_lower_triangular();
    let total_k: usize = spec.codes.iter().map(LinearCode::k).sum();
    let nonzero_diag = b.diagonal().iter().all(|d| !d.is_zero());
    if !(triangular && nonzero_diag) {
        return Ok(HullDimBounds {
            lower: 0,
            upper: total_k,
            triangular,
        });
    }
    let hull_sum = spec.codes.iter().map(|c| Ok(c.hull(ell)?.h)).sum::<Result<usize>>()?;
    let lower = if b.is_diagonal() { hull_sum } else { 0 };
    Ok(HullDimBounds {
        lower,
        upper: hull_sum,
        triangular,
    })
}

/// `rank(full) >= sum_i rank(blocks_i)` for a block triangular `full` whose diagonal
/// blocks are `blocks`.
pub fn block_triangular_rank_bound(blocks: &[Matrix], full: &Matrix) -> Result<bool> {
    if blocks.iter().any(|b| !b.is_square()) {
        return Err(Error::BlockLayout("diagonal blocks must be square".into()));
    }
    let sizes: Vec<usize> = blocks.iter().map(Matrix::rows).collect();
    let total: usize = sizes.iter().sum();
    if !full.is_square() || full.rows() != total {
        return Err(Error::BlockLayout(format!(
            "blocks cover {total} rows but the matrix is {}x{}",
            full.rows(),
            full.cols()
        )));
    }
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let block =
        |i: usize, j: usize| full.submatrix(offsets[i]..offsets[i] + sizes[i], offsets[j]..offsets[j] + sizes[j]);
    let t = blocks.len();
    for (i, b) in blocks.iter().enumerate() {
        if block(i, i) != *b {
            return Err(Error::BlockLayout(format!("diagonal block {i} does not match")));
        }
    }
    let upper = (0..t).all(|i| (0..i).all(|j| block(i, j).is_zero()));
    let lower = (0..t).all(|i| (i + 1..t).all(|j| block(i, j).is_zero()));
    if !upper && !lower {
        return Err(Error::BlockLayout("matrix is not block triangular".into()));
    }
    let sum: usize = blocks.iter().map(Matrix::rank).sum();
    Ok(full.rank() >= sum)
}
