//! Linear codes, their ell-Galois duals and hulls.
//!
//! A [`LinearCode`] stores the RREF of its generator matrix, so two codes are
//! equal exactly when their stored generators are identical.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::Matrix;

/// Upper limit on `q^k` for full codeword enumeration.
pub const ENUMERATION_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

/// Everything known about the ell-Galois hull of a code.
#[derive(Debug, Clone)]
pub struct HullReport {
    pub ell: u32,
    pub hull: LinearCode,
    /// Hull dimension.
    pub h: usize,
    /// `k - h`, also the rank of `gram`.
    pub r: usize,
    /// `G sigma^ell(G^T)` for the canonical generator.
    pub gram: Matrix,
    /// Generator of the code whose first `h` rows span the hull.
    pub structured_gen: Matrix,
}

impl HullReport {
    /// Gram matrix of `structured_gen`; its first `h` columns vanish.
    pub fn structured_gram(&self) -> Matrix {
        self.structured_gen
            .galois_gram(self.ell)
            .expect("level already validated")
    }
}

/// `x -> (d_0 x_{perm[0]}, ..., d_{n-1} x_{perm[n-1]})`, a permutation followed by a
/// nonzero scaling of each coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTransform {
    perm: Vec<usize>,
    diag: Vec<FieldElement>,
}

impl MonomialTransform {
    pub fn new(perm: Vec<usize>, diag: Vec<FieldElement>) -> Result<Self> {
        let n = perm.len();
        if diag.len() != n {
            return Err(Error::InvalidTransform(format!(
                "permutation has {n} entries but diagonal has {}",
                diag.len()
            )));
        }
        let mut seen = vec![false; n];
        for &i in &perm {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidTransform(format!("{perm:?} is not a permutation")));
            }
        }
        if diag.iter().any(|d| d.is_zero()) {
            return Err(Error::InvalidTransform("zero diagonal entry".into()));
        }
        Ok(MonomialTransform { perm, diag })
    }

    pub fn identity(n: usize) -> Self {
        MonomialTransform {
            perm: (0..n).collect(),
            diag: vec![FieldElement::ONE; n],
        }
    }

    pub fn permutation(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![FieldElement::ONE; n])
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[FieldElement] {
        &self.diag
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn apply_vec(&self, field: &FieldSpec, x: &[FieldElement]) -> Vec<FieldElement> {
        self.perm
            .iter()
            .zip(&self.diag)
            .map(|(&i, &d)| field.mul(d, x[i]))
            .collect()
    }

    /// Applies the transform to every row of `m`.
    pub fn apply_matrix(&self, m: &Matrix) -> Result<Matrix> {
        if m.cols() != self.len() {
            return Err(Error::InvalidTransform(format!(
                "transform of size {} applied to length {}",
                self.len(),
                m.cols()
            )));
        }
        let f = m.field();
        let mut out = m.select_cols(&self.perm);
        for i in 0..out.rows() {
            for (j, &d) in self.diag.iter().enumerate() {
                out.set(i, j, f.mul(d, out.get(i, j)));
            }
        }
        Ok(out)
    }
}

/// A generator `(I_k | B)` after moving the pivot columns to the front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub b: Matrix,
    /// Column `j` of the standard-form generator is column `colperm[j]` of the code.
    pub colperm: Vec<usize>,
}

impl LinearCode {
    /// The code spanned by the rows of `rows`; dependent rows are dropped.
    pub fn from_rows(rows: &Matrix) -> Result<Self> {
        if rows.cols() == 0 {
            return Err(Error::EmptyWidth);
        }
        Ok(LinearCode {
            gen: rows.row_space_basis(),
        })
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_rows(&Matrix::zeros(field, 0, n))
    }

    pub fn full(field: &FieldSpec, n: usize) -> Result<Self> {
        Self::from_rows(&Matrix::identity(field, n))
    }

    pub fn field(&self) -> &FieldSpec {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical (RREF) generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn contains(&self, x: &[FieldElement]) -> bool {
        if x.len() != self.n() {
            return false;
        }
        let row = Matrix::from_elements(self.field(), 1, self.n(), x.to_vec()).expect("valid entries");
        self.gen.vstack(&row).expect("same width").rank() == self.k()
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n() == other.n()
            && self.field() == other.field()
            && other.gen.vstack(&self.gen).expect("same width").rank() == other.k()
    }

    /// `sigma^j(C)`, the code with `sigma^j` applied to every coordinate.
    pub fn frobenius_image(&self, j: u32) -> LinearCode {
        LinearCode {
            gen: self.gen.frobenius_map(j).row_space_basis(),
        }
    }

    /// Any matrix whose rows form a basis of the Euclidean dual.
    pub fn parity_check(&self) -> Matrix {
        self.gen.right_kernel()
    }

    /// `C^{perp_ell} = sigma^{e-ell}(C^{perp_0})`.
    pub fn dual_galois(&self, ell: u32) -> Result<LinearCode> {
        self.field().check_level(ell)?;
        let e = self.field().e();
        let kernel = self.parity_check();
        Ok(LinearCode {
            gen: kernel.frobenius_map((e - ell) % e).row_space_basis(),
        })
    }

    /// Intersection of row spaces via the left kernel of the stacked bases.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "lengths {} and {}",
                self.n(),
                other.n()
            )));
        }
        let stacked = self.gen.vstack(&other.gen)?;
        // (a, b) with a G + b D = 0 gives a G in both spaces.
        let left = stacked.transpose().right_kernel();
        let coeffs = left.submatrix(0..left.rows(), 0..self.k());
        let rows = coeffs.matmul(&self.gen)?;
        LinearCode::from_rows(&rows)
    }

    pub fn hull(&self, ell: u32) -> Result<HullReport> {
        let dual = self.dual_galois(ell)?;
        let hull = self.intersection(&dual)?;
        let gram = self.gen.galois_gram(ell)?;
        let h = hull.k();
        let r = gram.rank();
        assert_eq!(
            h + r,
            self.k(),
            "hull dimension {h} disagrees with k - rank(gram) = {} - {r}",
            self.k()
        );
        let structured_gen = extend_basis(hull.generator(), &self.gen);
        Ok(HullReport {
            ell,
            hull,
            h,
            r,
            gram,
            structured_gen,
        })
    }

    /// ell-Galois LCD: the Gram matrix of a generator is nonsingular.
    pub fn is_lcd(&self, ell: u32) -> Result<bool> {
        let gram = self.gen.galois_gram(ell)?;
        Ok(!gram.det()?.is_zero())
    }

    pub fn is_self_orthogonal(&self, ell: u32) -> Result<bool> {
        Ok(self.gen.galois_gram(ell)?.is_zero())
    }

    pub fn is_self_dual(&self, ell: u32) -> Result<bool> {
        let by_equality = *self == self.dual_galois(ell)?;
        let e = self.field().e();
        let h = self.parity_check();
        let parity_gram = h.matmul(&h.transpose().frobenius_map((e - ell) % e))?;
        let by_grams = self.is_self_orthogonal(ell)? && parity_gram.is_zero();
        assert_eq!(by_equality, by_grams, "self-duality criteria disagree");
        Ok(by_equality)
    }

    pub fn apply_monomial(&self, t: &MonomialTransform) -> Result<LinearCode> {
        LinearCode::from_rows(&t.apply_matrix(&self.gen)?)
    }

    pub fn standard_form(&self) -> Result<StandardForm> {
        if self.k() == 0 {
            return Err(Error::ZeroDimension);
        }
        let pivots = self.gen.rref().pivots;
        let rest: Vec<usize> = (0..self.n()).filter(|c| !pivots.contains(c)).collect();
        let b = self.gen.select_cols(&rest);
        let colperm = pivots.into_iter().chain(rest).collect();
        Ok(StandardForm { b, colperm })
    }

    /// Calls `visit` with every codeword exactly once.
    pub fn for_each_codeword<F: FnMut(&[FieldElement])>(&self, mut visit: F) -> Result<()> {
        let f = self.field();
        let q = f.q();
        let k = self.k();
        if (q as f64).powi(k as i32) > ENUMERATION_BUDGET as f64 {
            return Err(Error::EnumerationBudget { q, k });
        }
        let n = self.n();
        // partial[i] = sum_{j < i} coeff[j] * row_j
        let mut partial = vec![vec![FieldElement::ZERO; n]; k + 1];
        let mut coeff = vec![0u32; k];
        loop {
            visit(&partial[k]);
            // odometer, last coefficient fastest
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                coeff[i] += 1;
                if coeff[i] < q {
                    break;
                }
                coeff[i] = 0;
            }
            for j in i..k {
                let c = FieldElement(coeff[j]);
                let row = self.gen.row(j);
                let (lo, hi) = partial.split_at_mut(j + 1);
                for ((dst, &src), &g) in hi[0].iter_mut().zip(&lo[j]).zip(row) {
                    *dst = f.add(src, f.mul(c, g));
                }
            }
        }
    }

    /// `A_w` for `w = 0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.n() + 1];
        self.for_each_codeword(|c| {
            dist[c.iter().filter(|a| !a.is_zero()).count()] += 1;
        })?;
        Ok(dist)
    }
}

// RREF basis of the subspace first, then rows of `ambient` that raise the rank.
fn extend_basis(sub: &Matrix, ambient: &Matrix) -> Matrix {
    let target = ambient.rank();
    let mut basis = sub.clone();
    let mut rank = basis.rank();
    for i in 0..ambient.rows() {
        if rank == target {
            break;
        }
        let candidate = basis.vstack(&ambient.select_rows(&[i])).expect("same width");
        let r = candidate.rank();
        if r > rank {
            basis = candidate;
            rank = r;
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::prime(3).unwrap()
    }

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    fn f8() -> FieldSpec {
        FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap()
    }

    fn code(f: &FieldSpec, rows: &[&[u32]]) -> LinearCode {
        LinearCode::from_rows(&Matrix::from_rows(f, rows).unwrap()).unwrap()
    }

    fn f8_code() -> LinearCode {
        code(&f8(), &[&[1, 1, 3, 3], &[0, 5, 1, 0]])
    }

    fn elems(v: &[u32]) -> Vec<FieldElement> {
        v.iter().map(|&x| FieldElement(x)).collect()
    }

    #[test]
    fn construction() {
        let f = f3();
        let full = LinearCode::from_rows(&Matrix::identity(&f, 3)).unwrap();
        assert_eq!((full.n(), full.k()), (3, 3));
        assert_eq!((f8_code().n(), f8_code().k()), (4, 2));
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(code(&f2, &[&[1, 1, 1], &[1, 1, 1]]).k(), 1);
        assert_eq!(
            LinearCode::from_rows(&Matrix::zeros(&f, 2, 0)).unwrap_err(),
            Error::EmptyWidth
        );
        assert_eq!(LinearCode::zero(&f, 4).unwrap().k(), 0);
    }

    #[test]
    fn dual_examples() {
        let f = f3();
        let full = LinearCode::full(&f, 3).unwrap();
        assert_eq!(full.dual_galois(0).unwrap().k(), 0);
        let c = code(&f4(), &[&[1, 1]]);
        assert_eq!(c.dual_galois(1).unwrap(), c);
        assert!(c.dual_galois(2).is_err());
    }

    #[test]
    fn hull_of_the_f8_example() {
        let c = f8_code();
        let rep = c.hull(1).unwrap();
        assert_eq!((rep.h, rep.r), (1, 1));
        // Brute force: count codewords orthogonal to both generator rows.
        let f = c.field().clone();
        let g = Matrix::from_rows(&f, &[[1, 1, 3, 3], [0, 5, 1, 0]]).unwrap();
        let mut in_hull = 0;
        c.for_each_codeword(|w| {
            if g.row_iter().all(|r| f.galois_inner(r, w, 1).unwrap().is_zero()) {
                in_hull += 1;
            }
        })
        .unwrap();
        assert_eq!(in_hull, 8);
    }

    #[test]
    fn hulls_of_the_ternary_mpc_constituents() {
        let f = f3();
        let c1 = code(&f, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let c2 = code(&f, &[&[1, 1, 1, 1]]);
        // Every row of G_1 is orthogonal to G_1, while (1,1,1,1).(1,1,1,1) = 1.
        assert_eq!(c1.hull(0).unwrap().h, 2);
        assert!(c1.is_self_orthogonal(0).unwrap());
        assert!(!c1.is_lcd(0).unwrap());
        assert_eq!(c2.hull(0).unwrap().h, 0);
        assert!(c2.is_lcd(0).unwrap());
        assert!(!c2.is_self_orthogonal(0).unwrap());
    }

    #[test]
    fn predicates() {
        let c = code(&f4(), &[&[1, 1]]);
        assert!(!c.is_lcd(1).unwrap());
        assert!(c.is_self_orthogonal(1).unwrap());
        assert!(c.is_self_dual(1).unwrap());

        let zero = LinearCode::zero(&f3(), 3).unwrap();
        assert!(zero.is_lcd(0).unwrap());
        assert!(zero.is_self_orthogonal(0).unwrap());
        assert_eq!(zero.hull(0).unwrap().h, 0);

        let full = LinearCode::full(&f3(), 2).unwrap();
        assert!(!full.is_self_orthogonal(0).unwrap());
        assert!(!code(&f3(), &[&[1, 1]]).is_self_dual(0).unwrap());
        assert!(!code(&f3(), &[&[1, 1, 0]]).is_self_dual(0).unwrap());
    }

    #[test]
    fn structured_generator_blocks() {
        let rep = f8_code().hull(1).unwrap();
        let sg = rep.structured_gram();
        assert_eq!(sg.get(0, 0), FieldElement::ZERO);
        assert_eq!(sg.get(1, 0), FieldElement::ZERO);
        assert!(LinearCode::from_rows(&rep.structured_gen.select_rows(&[0])).unwrap() == rep.hull);
        // The upper-right block is allowed to be nonzero away from the Euclidean and Hermitian levels.
        assert!(!sg.get(0, 1).is_zero());
    }

    #[test]
    fn monomial_examples() {
        let c = f8_code();
        assert_eq!(c.apply_monomial(&MonomialTransform::identity(4)).unwrap(), c);

        let f = f4();
        let c = code(&f, &[&[1, 1]]);
        for a in f.nonzero_elements() {
            for b in f.nonzero_elements() {
                let t = MonomialTransform::new(vec![0, 1], vec![a, b]).unwrap();
                let ct = c.apply_monomial(&t).unwrap();
                let expected = LinearCode::from_rows(&Matrix::from_elements(&f, 1, 2, vec![a, b]).unwrap()).unwrap();
                assert_eq!(ct, expected);
                assert_eq!(ct.hull(1).unwrap().h, 1);
            }
        }
        assert!(MonomialTransform::new(vec![0, 0], elems(&[1, 1])).is_err());
        assert!(MonomialTransform::new(vec![0, 1], elems(&[1, 0])).is_err());
        assert!(c.apply_monomial(&MonomialTransform::identity(3)).is_err());
    }

    #[test]
    fn permutations_keep_hull_dimension_zero() {
        let f = f3();
        let c1 = code(&f, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let lcd = code(&f, &[&[1, 0, 1, 0], &[0, 1, 1, 2]]);
        assert_eq!(lcd.hull(0).unwrap().h, 0);
        for perm in [[1, 0, 2, 3], [3, 2, 1, 0], [2, 3, 0, 1], [1, 2, 3, 0]] {
            let t = MonomialTransform::permutation(perm.to_vec()).unwrap();
            assert_eq!(lcd.apply_monomial(&t).unwrap().hull(0).unwrap().h, 0);
            assert_eq!(c1.apply_monomial(&t).unwrap().hull(0).unwrap().h, 2);
        }
    }

    #[test]
    fn parity_check_examples() {
        let f = f3();
        assert_eq!(LinearCode::full(&f, 3).unwrap().parity_check().rows(), 0);
        let f2 = FieldSpec::prime(2).unwrap();
        let rep = code(&f2, &[&[1, 1, 1]]);
        let h = rep.parity_check();
        assert_eq!(h.shape(), (2, 3));
        // even-weight vectors of length 3
        let even = LinearCode::from_rows(&Matrix::from_rows(&f2, &[[1, 1, 0], [0, 1, 1]]).unwrap()).unwrap();
        assert_eq!(LinearCode::from_rows(&h).unwrap(), even);
        let c = f8_code();
        assert_eq!(c.generator().vstack(&c.parity_check()).unwrap().rank(), 4);
    }

    #[test]
    fn standard_form_examples() {
        let f = f3();
        let c = code(&f, &[&[1, 0, 2], &[0, 1, 1]]);
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.colperm, vec![0, 1, 2]);
        assert_eq!(sf.b, Matrix::from_rows(&f, &[[2], [1]]).unwrap());

        let c = f8_code();
        let sf = c.standard_form().unwrap();
        assert_eq!(sf.b.shape(), (2, 2));
        let k = c.k();
        let ib = Matrix::identity(c.field(), k).hstack(&sf.b).unwrap();
        let permuted = c
            .apply_monomial(&MonomialTransform::permutation(sf.colperm.clone()).unwrap())
            .unwrap();
        assert_eq!(LinearCode::from_rows(&ib).unwrap(), permuted);

        let sf = code(&f, &[&[0, 1]]).standard_form().unwrap();
        assert_eq!(sf.colperm, vec![1, 0]);
        assert_eq!(sf.b, Matrix::from_rows(&f, &[[0]]).unwrap());
        assert_eq!(
            LinearCode::zero(&f, 2).unwrap().standard_form().unwrap_err(),
            Error::ZeroDimension
        );
    }

    #[test]
    fn weight_distribution_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(
            LinearCode::zero(&f2, 3).unwrap().weight_distribution().unwrap(),
            vec![1, 0, 0, 0]
        );
        assert_eq!(
            code(&f2, &[&[1, 1, 1]]).weight_distribution().unwrap(),
            vec![1, 0, 0, 1]
        );
        let c = f8_code();
        let d = c.weight_distribution().unwrap();
        assert_eq!(d.iter().sum::<u64>(), 64);
        let big = LinearCode::full(&FieldSpec::new(2, 4, None).unwrap(), 6).unwrap();
        assert!(matches!(
            big.weight_distribution(),
            Err(Error::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn contains_and_intersection() {
        let c = f8_code();
        assert!(c.contains(&elems(&[1, 1, 3, 3])));
        assert!(!c.contains(&elems(&[1, 0, 0, 0])));
        let rep = c.hull(1).unwrap();
        assert!(rep.hull.is_subcode_of(&c));
        assert!(rep.hull.is_subcode_of(&c.dual_galois(1).unwrap()));
    }
}
