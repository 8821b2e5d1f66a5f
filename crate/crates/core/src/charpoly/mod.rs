//! Exact characteristic polynomials.
//!
//! For a cubical r-tensor of order `n` the characteristic polynomial is the
//! resultant, as a polynomial in λ, of `λ x_k^{r-1} - F_k(x)` for
//! `k = 1..n`; it is monic of degree `n(r-1)^{n-1}`. It is computed here
//! only for `n <= 3`: the resultant is evaluated at rational nodes
//! `0, 1, -1, 2, -2, …` and interpolated exactly. 2-matrices of any order
//! go through an independent Faddeev–LeVerrier recurrence instead.

pub mod det;
pub mod poly;
pub mod resultant;

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use crate::tensor::{CubicalTensor, TensorError};
pub use poly::UniPoly;
use resultant::{shifted_forms, sylvester, Form, MacaulayLayout};

/// Largest order handled by [`charpoly_tensor`].
pub const MAX_ORDER: usize = 3;
/// Largest arity handled by [`charpoly_tensor`].
pub const MAX_ARITY: usize = 5;

#[derive(Debug, Error, PartialEq)]
pub enum CharpolyError {
    #[error("tensor entries must be exact rationals")]
    NotExact,
    #[error("operation requires r = 2, got r = {0}")]
    NotAMatrix(usize),
    #[error("characteristic polynomial supports n <= {MAX_ORDER} and r <= {MAX_ARITY}, got n = {n}, r = {r}")]
    OutOfContract { n: usize, r: usize },
    #[error("Macaulay denominator vanished at {0} nodes")]
    DegenerateMacaulay(usize),
    #[error("tensor is weakly irreducible; there is no product to verify")]
    WeaklyIrreducible,
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn rational_entries(a: &CubicalTensor) -> Result<Vec<(&[usize], &BigRational)>, CharpolyError> {
    a.entries()
        .map(|(t, v)| {
            v.as_rational()
                .map(|c| (t, c))
                .ok_or(CharpolyError::NotExact)
        })
        .collect()
}

/// `det(xI - A)` for an exact rational 2-matrix of any order.
pub fn charpoly_2matrix(a: &CubicalTensor) -> Result<UniPoly, CharpolyError> {
    if a.r() != 2 {
        return Err(CharpolyError::NotAMatrix(a.r()));
    }
    let n = a.n();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for (t, c) in rational_entries(a)? {
        m[t[0]][t[1]] = c.clone();
    }
    Ok(det::charpoly_matrix(&m))
}

/// `n(r-1)^{n-1}`, the number of eigenvalues with multiplicity.
pub fn eigenvalue_count(n: usize, r: usize) -> usize {
    n * (r - 1).pow(n as u32 - 1)
}

/// The forms `F_k(x) = Σ a_{k,i2..ir} x_{i2}⋯x_{ir}` as exponent maps.
fn eigen_forms(a: &CubicalTensor) -> Result<Vec<Form>, CharpolyError> {
    let n = a.n();
    let mut forms = vec![Form::new(); n];
    for (t, c) in rational_entries(a)? {
        let mut mono = vec![0u32; n];
        for &i in &t[1..] {
            mono[i] += 1;
        }
        *forms[t[0]].entry(mono).or_insert_with(BigRational::zero) += c;
    }
    for f in &mut forms {
        f.retain(|_, c| !c.is_zero());
    }
    Ok(forms)
}

/// Interpolation nodes `0, 1, -1, 2, -2, …`.
fn nodes() -> impl Iterator<Item = BigRational> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![q(0)]
        } else {
            vec![q(k), q(-k)]
        }
    })
}

/// Exact characteristic polynomial of a cubical tensor with `n <= 3`,
/// `r <= 5`, and exact rational entries. Monic, of degree `n(r-1)^{n-1}`.
pub fn charpoly_tensor(a: &CubicalTensor) -> Result<UniPoly, CharpolyError> {
    let (n, r) = (a.n(), a.r());
    if n > MAX_ORDER || r > MAX_ARITY {
        return Err(CharpolyError::OutOfContract { n, r });
    }
    let forms = eigen_forms(a)?;
    let d = (r - 1) as u32;
    let degree = eigenvalue_count(n, r);

    if n == 1 {
        // λ x^{r-1} - a x^{r-1}
        let c = forms[0]
            .values()
            .next()
            .cloned()
            .unwrap_or_else(BigRational::zero);
        return Ok(UniPoly::linear(c));
    }

    let layout = (n == 3).then(|| MacaulayLayout::new(3, d));
    let max_skips = layout.as_ref().map_or(0, |l| l.minor_size() + 1);
    let mut skipped = 0;
    let mut points = Vec::with_capacity(degree + 1);
    for lambda in nodes() {
        if points.len() == degree + 1 {
            break;
        }
        let shifted = shifted_forms(&forms, &lambda, d);
        let value = match &layout {
            None => sylvester(&shifted[0], &shifted[1], d),
            Some(layout) => {
                let (num, den) = layout.determinants(&shifted);
                if den.is_zero() {
                    skipped += 1;
                    if skipped > max_skips {
                        return Err(CharpolyError::DegenerateMacaulay(skipped));
                    }
                    continue;
                }
                num / den
            }
        };
        points.push((lambda, value));
    }
    let p = UniPoly::interpolate(&points);
    debug_assert_eq!(p.degree(), Some(degree), "resultant has the wrong degree");
    Ok(p.monic())
}

/// Characteristic polynomial by the route suited to the tensor: the matrix
/// recurrence for `r = 2`, the resultant otherwise.
pub fn charpoly(a: &CubicalTensor) -> Result<UniPoly, CharpolyError> {
    if a.r() == 2 {
        charpoly_2matrix(a)
    } else {
        charpoly_tensor(a)
    }
}

/// Roots closed under negation with multiplicity: `p(-x) = (-1)^{deg} p(x)`.
pub fn is_spectrum_symmetric_poly(p: &UniPoly) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(k, c)| (deg - k) % 2 == 0 || c.is_zero())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductFactor {
    /// Vertices of the component (0-based).
    pub vertices: Vec<usize>,
    pub charpoly: UniPoly,
    /// `(r-1)^{n - n_i}`.
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductReport {
    pub equal: bool,
    pub lhs: UniPoly,
    pub rhs: UniPoly,
    pub factors: Vec<ProductFactor>,
}

/// Checks `φ_A = ∏ φ_{A_i}^{(r-1)^{n-n_i}}` over the components `A_i` of a
/// weakly reducible symmetric tensor, computing both sides exactly.
pub fn verify_component_product(a: &CubicalTensor) -> Result<ProductReport, CharpolyError> {
    let (n, r) = (a.n(), a.r());
    if r > 2 && (n > MAX_ORDER || r > MAX_ARITY) {
        return Err(CharpolyError::OutOfContract { n, r });
    }
    let dec = a.components()?;
    if dec.parts.len() == 1 && dec.isolated.is_empty() {
        return Err(CharpolyError::WeaklyIrreducible);
    }
    let lhs = charpoly(a)?;
    let mut factors = Vec::new();
    for part in &dec.parts {
        factors.push(ProductFactor {
            vertices: part.vertices.clone(),
            charpoly: charpoly(&part.tensor)?,
            exponent: ((r - 1) as u64).pow((n - part.vertices.len()) as u32),
        });
    }
    for &v in &dec.isolated {
        factors.push(ProductFactor {
            vertices: vec![v],
            charpoly: UniPoly::monomial(1),
            exponent: ((r - 1) as u64).pow((n - 1) as u32),
        });
    }
    let rhs = factors.iter().fold(UniPoly::one(), |acc, f| {
        &acc * &f.charpoly.pow(f.exponent as u32)
    });
    Ok(ProductReport {
        equal: lhs == rhs,
        lhs,
        rhs,
        factors,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootMultiplicity {
    /// Monic square-free factor whose roots share this multiplicity.
    pub factor: UniPoly,
    pub before: usize,
    pub after: usize,
    /// `before·(r-1)`, from the component product formula.
    pub product_formula: usize,
    /// `before^{r-1}`.
    pub power_rule: usize,
}

/// What adding one isolated vertex does to the characteristic polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedVertexReport {
    pub r: usize,
    pub n: usize,
    pub before: UniPoly,
    pub after: UniPoly,
    pub zero_before: usize,
    pub zero_after: usize,
    /// `m0·(r-1) + (r-1)^n`.
    pub zero_product_formula: usize,
    /// `m0^{r-1} + (r-1)^n`.
    pub zero_power_rule: usize,
    pub nonzero: Vec<RootMultiplicity>,
    /// `after == x^{(r-1)^n} · before^{r-1}` exactly.
    pub product_formula_holds: bool,
    pub power_rule_holds: bool,
}

/// Compares the characteristic polynomials of `A` and of `A` with one
/// isolated vertex appended. Needs `n + 1 <= 3`.
pub fn isolated_vertex_multiplicity_check(
    a: &CubicalTensor,
) -> Result<IsolatedVertexReport, CharpolyError> {
    let (n, r) = (a.n(), a.r());
    if n + 1 > MAX_ORDER || r > MAX_ARITY {
        return Err(CharpolyError::OutOfContract { n: n + 1, r });
    }
    let extended = CubicalTensor::new(r, n + 1, a.entries().map(|(t, v)| (t.to_vec(), v.clone())))?;
    let before = charpoly(a)?;
    let after = charpoly(&extended)?;
    let e = r - 1;
    let pad = e.pow(n as u32);

    let zero_before = before.zero_multiplicity();
    let zero_after = after.zero_multiplicity();
    let after_rest = after.shift_down(zero_after);
    let dec_before = before.shift_down(zero_before).squarefree_decomposition();
    let dec_after = after_rest.squarefree_decomposition();

    let mut nonzero = Vec::new();
    for (factor, m) in &dec_before {
        // multiplicity of this factor's roots after the extension
        let after_m = dec_after
            .iter()
            .find(|(g, _)| !g.gcd(factor).degree().unwrap_or(0).is_zero())
            .map_or(0, |(_, k)| *k);
        nonzero.push(RootMultiplicity {
            factor: factor.clone(),
            before: *m,
            after: after_m,
            product_formula: m * e,
            power_rule: m.pow(e as u32),
        });
    }
    let predicted = &UniPoly::monomial(pad) * &before.pow(e as u32);
    let zero_power_rule = zero_before.pow(e as u32) + pad;
    let power_rule_holds =
        zero_after == zero_power_rule && nonzero.iter().all(|m| m.after == m.power_rule);
    Ok(IsolatedVertexReport {
        r,
        n,
        zero_before,
        zero_after,
        zero_product_formula: zero_before * e + pad,
        zero_power_rule,
        product_formula_holds: after == predicted,
        power_rule_holds,
        nonzero,
        before,
        after,
    })
}
