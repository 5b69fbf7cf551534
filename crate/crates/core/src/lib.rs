//! Exact ell-Galois duals and hulls of linear codes over GF(p^e).
//!
//! For `q = p^e` and `0 <= ell < e` the ell-Galois form on `F_q^n` is
//! `<x, y>_ell = sum_i x_i y_i^(p^ell)`; `ell = 0` is the Euclidean form and
//! `ell = e/2` the Hermitian one. The crate computes duals, hulls
//! `C ∩ C^{perp_ell}`, LCD certificates, monomially equivalent LCD codes and
//! hulls of matrix product codes, all in exact arithmetic.
//!
//! ```
//! use galois_hull::{FieldSpec, LinearCode, Matrix};
//!
//! let f8 = FieldSpec::new(2, 3, Some(&[1, 1, 0, 1])).unwrap();
//! let g = Matrix::from_rows(&f8, &[[1, 1, 3, 3], [0, 5, 1, 0]]).unwrap();
//! let report = LinearCode::from_rows(&g).unwrap().hull(1).unwrap();
//! assert_eq!(report.h, 1);
//! ```

pub mod code;
pub mod error;
pub mod field;
pub mod golden;
pub mod io;
pub mod lcd;
pub mod matrix;
pub mod mpc;

pub use code::{HullReport, LinearCode, MonomialTransform, StandardForm};
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use lcd::{f_eval, lcd_equivalent_search, verify_lcd_equivalence, LcdSearchConfig, LcdSearchResult, LcdWitness};
pub use matrix::{Matrix, Rref};
pub use mpc::{
    block_triangular_rank_bound, mpc_construct, mpc_generator, mpc_hull, mpc_hull_dim_bounds, HullDimBounds,
    MatrixProductSpec,
};
