//! Perron pairs of nonnegative tensors and the maps that send an
//! eigenpair `(λ, x)` to `(-λ, D x)`.

use num::complex::Complex64;
use thiserror::Error;

use crate::parity::{
    self, Certificate, ColoringObstruction, ColoringOutcome, OddColoring, OddTransversal,
    ParityError,
};
use crate::scalar::Scalar;
use crate::tensor::{CubicalTensor, TensorError};

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("tensor has a negative entry")]
    Negative,
    #[error("tensor or vector is not real")]
    NotReal,
    #[error("tensor is not symmetric")]
    NotSymmetric,
    #[error("tensor is weakly reducible; split it with components() first")]
    WeaklyReducible,
    #[error("no convergence after {iterations} iterations: {lower} <= rho <= {upper}")]
    NotConverged {
        lower: f64,
        upper: f64,
        iterations: usize,
    },
    #[error("negation maps need an even arity, got r = {0}")]
    OddArity(usize),
    #[error("certificate does not verify for this tensor")]
    UnverifiedCertificate,
    #[error("entry {0} of the eigenvector is numerically zero")]
    ZeroEntry(usize),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Parity(#[from] ParityError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenKind {
    General,
    /// Real `λ` and real `x`.
    H,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair {
    pub lambda: Complex64,
    pub x: Vec<Complex64>,
    pub residual: f64,
    pub kind: EigenKind,
}

impl EigenPair {
    /// Computes the residual against `a` and classifies the pair.
    pub fn certify(
        a: &CubicalTensor,
        lambda: Complex64,
        x: Vec<Complex64>,
    ) -> Result<EigenPair, TensorError> {
        let residual = a.eigen_residual(lambda, &x)?;
        let real = lambda.im == 0.0 && x.iter().all(|c| c.im == 0.0);
        let kind = if real {
            EigenKind::H
        } else {
            EigenKind::General
        };
        Ok(EigenPair {
            lambda,
            x,
            residual,
            kind,
        })
    }

    pub fn from_real(a: &CubicalTensor, lambda: f64, x: &[f64]) -> Result<EigenPair, TensorError> {
        let x = x.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        EigenPair::certify(a, Complex64::new(lambda, 0.0), x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerOptions {
    /// Stop once `max_k F_k/x_k^{r-1} - min_k F_k/x_k^{r-1} <= tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Diagonal shift; `None` means `1 + max diagonal entry`.
    pub shift: Option<f64>,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tol: 1e-10,
            max_iter: 100_000,
            shift: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PerronResult {
    /// `(ρ, x)` with `x > 0` and `Σ x_k^r = 1`.
    pub pair: EigenPair,
    pub rho: f64,
    pub x: Vec<f64>,
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
}

fn check_nonnegative(a: &CubicalTensor) -> Result<(), SpectraError> {
    if !a.is_real() {
        return Err(SpectraError::NotReal);
    }
    if !a.is_nonnegative() {
        return Err(SpectraError::Negative);
    }
    Ok(())
}

fn bounds(f: &[f64], x: &[f64], e: i32) -> (f64, f64) {
    f.iter()
        .zip(x)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), (fk, xk)| {
            let q = fk / xk.powi(e);
            (lo.min(q), hi.max(q))
        })
}

fn normalize_r(x: &mut [f64], r: usize) {
    let norm = x
        .iter()
        .map(|v| v.abs().powi(r as i32))
        .sum::<f64>()
        .powf(1.0 / r as f64);
    for v in x {
        *v /= norm;
    }
}

/// Spectral radius of a weakly irreducible nonnegative tensor by the
/// shifted power iteration `x ← normalize((F(x) + s x^{[r-1]})^{1/(r-1)})`.
pub fn spectral_radius_power(
    a: &CubicalTensor,
    opts: &PowerOptions,
) -> Result<PerronResult, SpectraError> {
    check_nonnegative(a)?;
    if !a.is_weakly_irreducible() {
        return Err(SpectraError::WeaklyReducible);
    }
    let (r, n) = (a.r(), a.n());
    let e = (r - 1) as i32;
    let shift = opts.shift.unwrap_or_else(|| {
        let diag = (0..n)
            .filter_map(|k| a.get(&vec![k; r]))
            .map(|v| v.to_c64().re)
            .fold(0.0, f64::max);
        1.0 + diag
    });
    let mut x = vec![(n as f64).powf(-1.0 / r as f64); n];
    let (mut lower, mut upper) = (f64::NEG_INFINITY, f64::INFINITY);
    for it in 0..=opts.max_iter {
        let f = a.apply_real(&x)?;
        (lower, upper) = bounds(&f, &x, e);
        if upper - lower <= opts.tol {
            let rho = 0.5 * (lower + upper);
            let pair = EigenPair::from_real(a, rho, &x)?;
            return Ok(PerronResult {
                pair,
                rho,
                x,
                lower,
                upper,
                iterations: it,
            });
        }
        if it == opts.max_iter {
            break;
        }
        for (xk, fk) in x.iter_mut().zip(&f) {
            *xk = (fk + shift * xk.powi(e)).powf(1.0 / e as f64);
        }
        normalize_r(&mut x, r);
    }
    Err(SpectraError::NotConverged {
        lower,
        upper,
        iterations: opts.max_iter,
    })
}

/// Diagonal unitary `D` such that `(λ, x) ↦ (-λ, D x)` maps eigenpairs of
/// the tensor it was built for to eigenpairs.
#[derive(Clone, Debug, PartialEq)]
pub struct NegationMap {
    pub diag: Vec<Complex64>,
    pub source: Certificate,
}

impl NegationMap {
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        x.iter().zip(&self.diag).map(|(xk, dk)| xk * dk).collect()
    }

    /// The image pair, re-certified against `a`.
    pub fn map_pair(&self, a: &CubicalTensor, pair: &EigenPair) -> Result<EigenPair, TensorError> {
        EigenPair::certify(a, -pair.lambda, self.apply(&pair.x))
    }
}

/// `D = diag(e^{2πiφ(k)/r})`.
pub fn negation_map_from_coloring(
    a: &CubicalTensor,
    phi: &OddColoring,
) -> Result<NegationMap, SpectraError> {
    if a.r() % 2 == 1 {
        return Err(SpectraError::OddArity(a.r()));
    }
    if !parity::verify_coloring(a, phi)? {
        return Err(SpectraError::UnverifiedCertificate);
    }
    let r = a.r() as u64;
    let diag = phi
        .phi
        .iter()
        .map(|&p| Scalar::root_of_unity(p, r).to_c64())
        .collect();
    Ok(NegationMap {
        diag,
        source: Certificate::Coloring(phi.clone()),
    })
}

/// `D = diag(2 I_X(k) - 1)`: `+1` on `X`, `-1` off it.
pub fn negation_map_from_transversal(
    a: &CubicalTensor,
    x: &OddTransversal,
) -> Result<NegationMap, SpectraError> {
    if a.r() % 2 == 1 {
        return Err(SpectraError::OddArity(a.r()));
    }
    if !parity::verify_transversal(a, x)? {
        return Err(SpectraError::UnverifiedCertificate);
    }
    let diag = x
        .indicator(a.n())
        .into_iter()
        .map(|inside| Complex64::new(if inside { 1.0 } else { -1.0 }, 0.0))
        .collect();
    Ok(NegationMap {
        diag,
        source: Certificate::Transversal(x.clone()),
    })
}

/// Entries below this fraction of `‖x‖∞` have no meaningful sign.
pub const ZERO_ENTRY_THRESHOLD: f64 = 1e-8;

/// Indices of the negative entries of a real eigenvector.
pub fn extract_transversal_from_eigenvector(
    x: &[Complex64],
) -> Result<OddTransversal, SpectraError> {
    let inf = x.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if inf == 0.0 {
        return Err(TensorError::ZeroVector.into());
    }
    let floor = ZERO_ENTRY_THRESHOLD * inf;
    let mut members = Vec::new();
    for (k, c) in x.iter().enumerate() {
        if c.im.abs() >= floor {
            return Err(SpectraError::NotReal);
        }
        if c.re.abs() < floor {
            return Err(SpectraError::ZeroEntry(k));
        }
        if c.re < 0.0 {
            members.push(k);
        }
    }
    Ok(OddTransversal::new(members))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryBranch {
    OddR,
    Colorable,
    NotColorable,
}

impl SymmetryBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            SymmetryBranch::OddR => "odd-r",
            SymmetryBranch::Colorable => "colorable",
            SymmetryBranch::NotColorable => "not-colorable",
        }
    }
}

/// `(ρ_i, x)` of one component, padded with zeros, and its negation.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessPair {
    pub vertices: Vec<usize>,
    pub perron: EigenPair,
    pub negated: EigenPair,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub branch: SymmetryBranch,
    pub certificate: Option<OddColoring>,
    pub obstruction: Option<ColoringObstruction>,
    pub witness_pairs: Vec<WitnessPair>,
}

/// Decides whether the spectrum of a symmetric nonnegative tensor is
/// symmetric about 0. When it is, every component's Perron pair is mapped
/// to a certified eigenpair of `-ρ_i`.
pub fn check_symmetric_spectrum_certified(
    a: &CubicalTensor,
    opts: &PowerOptions,
) -> Result<SymmetryReport, SpectraError> {
    check_nonnegative(a)?;
    if !a.is_symmetric() {
        return Err(SpectraError::NotSymmetric);
    }
    if a.r() % 2 == 1 {
        return Ok(SymmetryReport {
            symmetric: a.is_zero(),
            branch: SymmetryBranch::OddR,
            certificate: None,
            obstruction: None,
            witness_pairs: Vec::new(),
        });
    }
    let phi = match parity::odd_coloring(a)? {
        ColoringOutcome::Infeasible(w) => {
            return Ok(SymmetryReport {
                symmetric: false,
                branch: SymmetryBranch::NotColorable,
                certificate: None,
                obstruction: Some(w),
                witness_pairs: Vec::new(),
            })
        }
        ColoringOutcome::Feasible(phi) => phi,
    };
    let map = negation_map_from_coloring(a, &phi)?;
    let n = a.n();
    let dec = a.components()?;
    let mut witness_pairs = Vec::new();
    let zero = Complex64::new(0.0, 0.0);
    for part in &dec.parts {
        let res = spectral_radius_power(&part.tensor, opts)?;
        let mut x = vec![zero; n];
        for (&v, &xv) in part.vertices.iter().zip(&res.x) {
            x[v] = Complex64::new(xv, 0.0);
        }
        let perron = EigenPair::certify(a, Complex64::new(res.rho, 0.0), x)?;
        let negated = map.map_pair(a, &perron)?;
        witness_pairs.push(WitnessPair {
            vertices: part.vertices.clone(),
            perron,
            negated,
        });
    }
    for &v in &dec.isolated {
        let mut x = vec![zero; n];
        x[v] = Complex64::new(1.0, 0.0);
        let perron = EigenPair::certify(a, zero, x)?;
        let negated = map.map_pair(a, &perron)?;
        witness_pairs.push(WitnessPair {
            vertices: vec![v],
            perron,
            negated,
        });
    }
    Ok(SymmetryReport {
        symmetric: true,
        branch: SymmetryBranch::Colorable,
        certificate: Some(phi),
        obstruction: None,
        witness_pairs,
    })
}
