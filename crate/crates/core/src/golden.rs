//! Built-in worked examples, checked end to end.

use crate::code::{LinearCode, MonomialTransform};
use crate::error::Result;
use crate::field::{FieldElement, FieldSpec};
use crate::lcd::{lcd_equivalent_search, LcdSearchConfig};
use crate::matrix::Matrix;
use crate::mpc::{mpc_construct, mpc_generator, mpc_hull, mpc_hull_dim_bounds, HullDimBounds, MatrixProductSpec};

#[derive(Debug, Clone)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, outcome: Result<(bool, String)>) -> GoldenCheck {
    match outcome {
        Ok((passed, detail)) => GoldenCheck { name, passed, detail },
        Err(e) => GoldenCheck {
            name,
            passed: false,
            detail: format!("error[{}]: {e}", e.code()),
        },
    }
}

/// GF(8) = GF(2)[w]/(w^3 + w + 1), G = ((1, 1, w+1, w+1), (0, w^2+1, 1, 0)), ell = 1.
pub fn f8_hull_example() -> Result<(bool, String)> {
    let f = FieldSpec::new(2, 3, Some(&[1, 1, 0, 1]))?;
    let g = Matrix::from_rows(&f, &[[1, 1, 3, 3], [0, 5, 1, 0]])?;
    let gram = g.galois_gram(1)?;
    let code = LinearCode::from_rows(&g)?;
    let rep = code.hull(1)?;
    let expected = Matrix::from_rows(&f, &[[0, 4], [0, 7]])?;
    let ok = gram == expected && rep.h == 1 && code.k() == 2;
    Ok((ok, format!("gram = {:?}, h = {}", gram.to_values(), rep.h)))
}

/// <(1, 1)> over GF(4) is Hermitian self-orthogonal and no monomial image of it is Hermitian LCD.
pub fn f4_hermitian_example() -> Result<(bool, String)> {
    let f = FieldSpec::new(2, 2, Some(&[1, 1, 1]))?;
    let code = LinearCode::from_rows(&Matrix::from_rows(&f, &[[1, 1]])?)?;
    let self_orth = code.is_self_orthogonal(1)? && !code.is_lcd(1)?;
    let mut all_scalings = true;
    for a in f.nonzero_elements() {
        for b in f.nonzero_elements() {
            let t = MonomialTransform::new(vec![0, 1], vec![a, b])?;
            all_scalings &= code.apply_monomial(&t)?.hull(1)?.h == 1;
        }
    }
    let res = lcd_equivalent_search(&code, 1, &LcdSearchConfig::ExhaustiveUnits)?;
    let ok = self_orth && all_scalings && !res.found() && res.exhausted && res.evaluations == 3;
    Ok((
        ok,
        format!(
            "self-orthogonal = {self_orth}, hull dim 1 under all 9 scalings = {all_scalings}, search found = {} exhausted = {} evaluations = {}",
            res.found(),
            res.exhausted,
            res.evaluations
        ),
    ))
}

/// The ternary [8, 3] matrix product code with A = [[1, 1], [-1, 1]].
pub fn ternary_mpc_example() -> Result<(bool, String)> {
    let f = FieldSpec::prime(3)?;
    let c1 = LinearCode::from_rows(&Matrix::from_rows(&f, &[[1, 0, 1, 1], [0, 1, 1, 2]])?)?;
    let c2 = LinearCode::from_rows(&Matrix::from_rows(&f, &[[1, 1, 1, 1]])?)?;
    let a = Matrix::from_rows(&f, &[[1, 1], [2, 1]])?;
    let spec = MatrixProductSpec::new(vec![c1.clone(), c2.clone()], a.clone())?;

    let g = mpc_generator(&spec)?;
    let expected_g = Matrix::from_rows(
        &f,
        &[
            [1, 0, 1, 1, 1, 0, 1, 1],
            [0, 1, 1, 2, 0, 1, 1, 2],
            [2, 2, 2, 2, 1, 1, 1, 1],
        ],
    )?;
    let gram = g.galois_gram(0)?;
    let expected_gram = Matrix::from_rows(&f, &[[0, 0, 0], [0, 0, 0], [0, 0, 2]])?;
    let aat = a.galois_gram(0)?;
    let minus_one = Matrix::diag(&f, &[FieldElement(2), FieldElement(2)]);
    let hull = mpc_hull(&spec, 0)?;
    let expected_hull = Matrix::from_rows(&f, &[[1, 0, 1, 1, 1, 0, 1, 1], [0, 1, 1, 2, 0, 1, 1, 2]])?;
    let constituent = (c1.hull(0)?.h, c2.hull(0)?.h);
    let bounds = mpc_hull_dim_bounds(&spec, 0)?;
    let code = mpc_construct(&spec)?;

    let ok = g.row_space_eq(&expected_g)
        && g == expected_g
        && gram == expected_gram
        && gram.rank() == 1
        && aat == minus_one
        && hull.generator().row_space_eq(&expected_hull)
        && code.hull(0)?.h == 2
        && constituent == (2, 0)
        && bounds
            == HullDimBounds {
                lower: 2,
                upper: 2,
                triangular: true,
            };
    Ok((
        ok,
        format!(
            "rank(GG^T) = {}, AA^T = {:?}, hull dim = {}, constituent hull dims = {:?}, bounds = ({}, {})",
            gram.rank(),
            aat.to_values(),
            hull.k(),
            constituent,
            bounds.lower,
            bounds.upper
        ),
    ))
}

pub fn verify_examples() -> Vec<GoldenCheck> {
    vec![
        check("f8-galois-hull", f8_hull_example()),
        check("f4-hermitian-counterexample", f4_hermitian_example()),
        check("ternary-matrix-product-hull", ternary_mpc_example()),
    ]
}
