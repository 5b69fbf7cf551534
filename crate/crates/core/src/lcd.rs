//! Searching for a monomially equivalent ell-Galois LCD code.
//!
//! With `C` in standard form `(I_k | B)` and `M = diag(x_1, ..., x_k, 1, ..., 1)`,
//! the code `C M` has Gram matrix `diag(x_i^{1+p^ell}) + B sigma^ell(B^T)`, so `C M`
//! is LCD exactly when
//!
//! ```text
//! f(x) = det(diag(x_1^{1+p^ell}, ..., x_k^{1+p^ell}) + B sigma^ell(B^T))
//! ```
//!
//! is nonzero. `f` has degree `1 + p^ell` in each variable, which guarantees a
//! nonvanishing point in `(F_q^*)^k` whenever `q > 4`. It is only ever evaluated
//! pointwise.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::code::{LinearCode, MonomialTransform};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcdSearchConfig {
    /// Every `x` in `(F_q^*)^k`, lexicographic in the integer encodings.
    ExhaustiveUnits,
    /// Every `x` in `(F_q \ F_{p^m})^k`, lexicographic. Needs `m | e` and `p^e - p^ell - p^m >= 2`.
    RestrictedSubfieldComplement { m: u32 },
    /// Up to `budget` uniform draws from `(F_q^*)^k`.
    SeededRandom { budget: u64, seed: u64 },
}

impl LcdSearchConfig {
    pub fn name(&self) -> &'static str {
        match self {
            LcdSearchConfig::ExhaustiveUnits => "exhaustive-units",
            LcdSearchConfig::RestrictedSubfieldComplement { .. } => "restricted-subfield-complement",
            LcdSearchConfig::SeededRandom { .. } => "seeded-random",
        }
    }
}

/// A successful search: the scalars, the monomial map and the LCD code it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcdWitness {
    pub x: Vec<FieldElement>,
    pub transform: MonomialTransform,
    pub code: LinearCode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcdSearchResult {
    pub witness: Option<LcdWitness>,
    pub evaluations: u64,
    /// The whole candidate domain was tried without success.
    pub exhausted: bool,
}

impl LcdSearchResult {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

/// `f` with `B sigma^ell(B^T)` precomputed.
struct LcdPolynomial {
    field: FieldSpec,
    base: Matrix,
    exponent: u64,
}

impl LcdPolynomial {
    fn new(b: &Matrix, ell: u32) -> Result<Self> {
        let field = b.field().clone();
        field.check_level(ell)?;
        let base = b.matmul(&b.transpose().frobenius_map(ell))?;
        let exponent = 1 + (field.p() as u64).pow(ell);
        Ok(LcdPolynomial { field, base, exponent })
    }

    fn eval(&self, x: &[FieldElement]) -> Result<FieldElement> {
        if x.len() != self.base.rows() {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, polynomial has {} variables",
                x.len(),
                self.base.rows()
            )));
        }
        let mut m = self.base.clone();
        for (i, &xi) in x.iter().enumerate() {
            let v = self.field.add(m.get(i, i), self.field.pow(xi, self.exponent));
            m.set(i, i, v);
        }
        m.det()
    }
}

/// Evaluates `det(diag(x_i^{1+p^ell}) + B sigma^ell(B^T))` at one point.
pub fn f_eval(b: &Matrix, x: &[FieldElement], ell: u32) -> Result<FieldElement> {
    LcdPolynomial::new(b, ell)?.eval(x)
}

fn validate(field: &FieldSpec, ell: u32, cfg: &LcdSearchConfig) -> Result<()> {
    field.check_level(ell)?;
    match *cfg {
        LcdSearchConfig::ExhaustiveUnits => Ok(()),
        LcdSearchConfig::SeededRandom { budget, .. } => {
            if budget == 0 {
                Err(Error::InvalidSearchConfig("budget must be positive".into()))
            } else {
                Ok(())
            }
        }
        LcdSearchConfig::RestrictedSubfieldComplement { m } => {
            let e = field.e();
            if m < 1 || m >= e || !e.is_multiple_of(m) {
                return Err(Error::InvalidSearchConfig(format!(
                    "subfield degree m = {m} must satisfy 1 <= m <= e - 1 and m | e (e = {e})"
                )));
            }
            let p = field.p() as i64;
            let slack = p.pow(e) - p.pow(ell) - p.pow(m);
            if slack < 2 {
                return Err(Error::InvalidSearchConfig(format!("p^e - p^ell - p^m = {slack} < 2")));
            }
            Ok(())
        }
    }
}

/// Lexicographic enumeration of `domain^k`, first coordinate most significant.
struct Odometer<'a> {
    domain: &'a [FieldElement],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Odometer<'a> {
    fn new(domain: &'a [FieldElement], k: usize) -> Self {
        Odometer {
            domain,
            idx: vec![0; k],
            done: domain.is_empty() && k > 0,
        }
    }
}

impl Iterator for Odometer<'_> {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = self.idx.iter().map(|&i| self.domain[i]).collect();
        self.done = true;
        for pos in (0..self.idx.len()).rev() {
            self.idx[pos] += 1;
            if self.idx[pos] < self.domain.len() {
                self.done = false;
                break;
            }
            self.idx[pos] = 0;
        }
        Some(item)
    }
}

/// Finds `x` making `C diag(x, 1, ..., 1)` (after the standard-form permutation) ell-Galois LCD.
///
/// Panics if the exhaustive strategy fails over a field with more than four
/// elements: a nonvanishing point always exists there.
pub fn lcd_equivalent_search(code: &LinearCode, ell: u32, cfg: &LcdSearchConfig) -> Result<LcdSearchResult> {
    let field = code.field().clone();
    validate(&field, ell, cfg)?;
    let sf = code.standard_form()?;
    let k = code.k();
    let q = field.q() as u64;
    let degree = 1 + (field.p() as u64).pow(ell);
    if q > 4 {
        assert!(degree <= q - 2, "1 + p^ell = {degree} exceeds q - 2 = {}", q - 2);
    }
    let f = LcdPolynomial::new(&sf.b, ell)?;

    let mut evaluations = 0u64;
    let mut hit = None;
    let exhausted;
    match *cfg {
        LcdSearchConfig::ExhaustiveUnits | LcdSearchConfig::RestrictedSubfieldComplement { .. } => {
            let domain: Vec<FieldElement> = match *cfg {
                LcdSearchConfig::RestrictedSubfieldComplement { m } => {
                    field.elements().filter(|&a| !field.in_subfield(a, m)).collect()
                }
                _ => field.nonzero_elements().collect(),
            };
            for x in Odometer::new(&domain, k) {
                evaluations += 1;
                if !f.eval(&x)?.is_zero() {
                    hit = Some(x);
                    break;
                }
            }
            exhausted = hit.is_none();
        }
        LcdSearchConfig::SeededRandom { budget, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..budget {
                let x: Vec<FieldElement> = (0..k).map(|_| FieldElement(rng.gen_range(1..field.q()))).collect();
                evaluations += 1;
                if !f.eval(&x)?.is_zero() {
                    hit = Some(x);
                    break;
                }
            }
            exhausted = false;
        }
    }

    if hit.is_none() && matches!(cfg, LcdSearchConfig::ExhaustiveUnits) && q > 4 {
        panic!("no nonvanishing point in (F_q^*)^k for q = {q}, ell = {ell}: the search is broken");
    }

    let witness = match hit {
        Some(x) => {
            let mut diag = x.clone();
            diag.resize(code.n(), FieldElement::ONE);
            let transform = MonomialTransform::new(sf.colperm.clone(), diag)?;
            let image = code.apply_monomial(&transform)?;
            assert!(image.is_lcd(ell)?, "f(x) != 0 but the transformed code is not LCD");
            Some(LcdWitness {
                x,
                transform,
                code: image,
            })
        }
        None => None,
    };
    Ok(LcdSearchResult {
        witness,
        evaluations,
        exhausted,
    })
}

/// Re-derives a search result: the transform maps `original` onto the reported
/// code, that code is ell-Galois LCD, and the weight distributions agree.
///
/// The weight comparison is skipped when `q^k` exceeds the enumeration budget;
/// equality of the codes under a monomial map already forces it.
pub fn verify_lcd_equivalence(result: &LcdSearchResult, original: &LinearCode, ell: u32) -> Result<bool> {
    let Some(w) = &result.witness else {
        return Ok(false);
    };
    if w.transform.len() != original.n() || original.apply_monomial(&w.transform)? != w.code {
        return Ok(false);
    }
    if !w.code.is_lcd(ell)? {
        return Ok(false);
    }
    match (original.weight_distribution(), w.code.weight_distribution()) {
        (Ok(a), Ok(b)) => Ok(a == b),
        (Err(Error::EnumerationBudget { .. }), _) => Ok(true),
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}
