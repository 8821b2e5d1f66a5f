//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::scalar::rational_to_f64;

/// Coefficients in ascending degree order, no trailing zeros. The zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigRational::zero(); k + 1];
        c[k] = BigRational::one();
        UniPoly { coeffs: c }
    }

    /// `x - root`.
    pub fn linear(root: BigRational) -> Self {
        UniPoly::new(vec![-root, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => UniPoly {
                coeffs: self.coeffs.iter().map(|c| c / lc).collect(),
            },
        }
    }

    pub fn scale(&self, s: &BigRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * x + rational_to_f64(c)
            })
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (UniPoly::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (quot, rem) = self.div_rem(d);
        rem.is_zero().then_some(quot)
    }

    /// Monic greatest common divisor (zero iff both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Multiplicity of 0 as a root.
    pub fn zero_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `x^k`.
    pub fn shift_down(&self, k: usize) -> UniPoly {
        UniPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Square-free decomposition `p = c·∏ f_i^i` (Yun), as `(f_i, i)` with
    /// every `f_i` monic and of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides f");
        let mut c = df.exact_div(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides b");
            c = d.exact_div(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Product of the distinct monic irreducible-free factors: `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides p").monic()
    }

    /// Numerical roots (with multiplicity collapsed): eigenvalues of the
    /// companion matrix of the square-free part, polished by Newton steps.
    pub fn approximate_roots(&self) -> Vec<Complex64> {
        let sf = self.squarefree_part();
        let Some(deg) = sf.degree().filter(|&d| d > 0) else {
            return Vec::new();
        };
        // Scale x = s·y with s a power of two near the Fujiwara bound so the
        // companion entries stay O(1).
        let coeffs: Vec<f64> = sf.coeffs.iter().map(rational_to_f64).collect();
        let bound = (0..deg)
            .map(|k| {
                let c = coeffs[k].abs();
                if c == 0.0 {
                    0.0
                } else {
                    c.powf(1.0 / (deg - k) as f64)
                }
            })
            .fold(0.0, f64::max);
        let s = if bound > 0.0 {
            2f64.powi(bound.log2().ceil() as i32)
        } else {
            1.0
        };
        let mut comp = DMatrix::<f64>::zeros(deg, deg);
        for k in 0..deg {
            // monic in y: y^deg + Σ c_k s^{k-deg} y^k
            comp[(k, deg - 1)] = -coeffs[k] * s.powi(k as i32 - deg as i32);
            if k + 1 < deg {
                comp[(k + 1, k)] = 1.0;
            }
        }
        let dsf = sf.derivative();
        let eps = f64::EPSILON;
        let max_niter = 200 * deg;
        let first = Schur::try_new(comp.clone(), eps, max_niter)
            .or_else(|| Schur::try_new(comp.transpose(), eps, max_niter))
            .map(|schur| schur.complex_eigenvalues().iter().map(|y| y * s).collect());
        // Francis steps can stall on companion matrices; Aberth iteration
        // does not need a good start.
        let start: Vec<Complex64> = first.unwrap_or_else(|| aberth(&sf, &dsf, s * 2.0));
        start
            .into_iter()
            .map(|z| newton_polish(&sf, &dsf, z))
            .collect()
    }

    /// Largest root modulus (numerical); 0 for constants.
    pub fn max_root_modulus(&self) -> f64 {
        self.approximate_roots()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Interpolating polynomial through `(x_i, y_i)` (distinct `x_i`), by
    /// Newton divided differences.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> UniPoly {
        let m = points.len();
        let xs: Vec<&BigRational> = points.iter().map(|p| &p.0).collect();
        let mut dd: Vec<BigRational> = points.iter().map(|p| p.1.clone()).collect();
        for level in 1..m {
            for i in (level..m).rev() {
                let num = &dd[i] - &dd[i - 1];
                let den = xs[i] - xs[i - level];
                dd[i] = num / den;
            }
        }
        // Horner on the Newton form
        let mut acc = UniPoly::zero();
        for i in (0..m).rev() {
            acc = &(&acc * &UniPoly::linear(xs[i].clone())) + &UniPoly::constant(dd[i].clone());
        }
        acc
    }

    /// Coefficients as strings, `"p/q"` or `"p"`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

fn newton_polish(p: &UniPoly, dp: &UniPoly, mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let dz = dp.eval_c64(z);
        if dz.norm() == 0.0 {
            break;
        }
        let step = p.eval_c64(z) / dz;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-16 * z.norm().max(1.0) {
            break;
        }
    }
    z
}

/// Aberth–Ehrlich simultaneous iteration for a square-free `p`, started on
/// a circle of the given radius.
fn aberth(p: &UniPoly, dp: &UniPoly, radius: f64) -> Vec<Complex64> {
    let deg = p.degree().unwrap_or(0);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            Complex64::from_polar(
                radius,
                std::f64::consts::TAU * (k as f64 + 0.25) / deg as f64,
            )
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..deg {
            let ratio = p.eval_c64(z[k]) / dp.eval_c64(z[k]);
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[k] -= step;
                moved = moved.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if moved <= 1e-15 {
            break;
        }
    }
    z
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
