//! Tensor entry values.
//!
//! Entries built from integers or rationals stay exact (Gaussian rationals);
//! anything that went through floating point is carried as `Complex64`.
//! Exactness is contagious only in one direction: mixing an exact value with
//! a float yields a float.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num::complex::Complex64;
use num::{BigInt, BigRational, Complex, One, Signed, ToPrimitive, Zero};

/// Exact complex number with rational real and imaginary parts.
pub type Gaussian = Complex<BigRational>;

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Gaussian),
    Float(Complex64),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(Gaussian::zero())
    }

    pub fn one() -> Self {
        Scalar::Exact(Gaussian::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn rational(v: BigRational) -> Self {
        Scalar::Exact(Complex::new(v, BigRational::zero()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::rational(BigRational::new(num.into(), den.into()))
    }

    pub fn float(re: f64, im: f64) -> Self {
        Scalar::Float(Complex64::new(re, im))
    }

    /// `exp(2πi·m/r)`, exact whenever the angle is a multiple of π/2.
    pub fn root_of_unity(m: u64, r: u64) -> Self {
        assert!(r > 0, "root of unity of order 0");
        let m = m % r;
        if (4 * m).is_multiple_of(r) {
            let (re, im) = match (4 * m) / r {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            Scalar::Exact(Complex::new(
                BigRational::from_integer(re.into()),
                BigRational::from_integer(im.into()),
            ))
        } else {
            let theta = 2.0 * std::f64::consts::PI * m as f64 / r as f64;
            Scalar::Float(Complex64::from_polar(1.0, theta))
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Float(c) => c.re == 0.0 && c.im == 0.0,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.im.is_zero(),
            Scalar::Float(c) => c.im == 0.0,
        }
    }

    /// Real and `>= 0`.
    pub fn is_nonnegative(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.im.is_zero() && !g.re.is_negative(),
            Scalar::Float(c) => c.im == 0.0 && c.re >= 0.0,
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        match self {
            Scalar::Exact(g) => Complex64::new(rational_to_f64(&g.re), rational_to_f64(&g.im)),
            Scalar::Float(c) => *c,
        }
    }

    pub fn as_exact(&self) -> Option<&Gaussian> {
        match self {
            Scalar::Exact(g) => Some(g),
            Scalar::Float(_) => None,
        }
    }

    /// The value as an exact rational, if it is exact and real.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(g) if g.im.is_zero() => Some(&g.re),
            _ => None,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Exact(g) => Scalar::Exact(Gaussian::one() / g.clone()),
            Scalar::Float(c) => Scalar::Float(c.inv()),
        })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(Scalar::one(), |acc, _| &acc * self)
    }

    pub fn modulus(&self) -> f64 {
        self.to_c64().norm()
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Fallback for values whose numerator or denominator overflow f64.
        let (n, d) = (q.numer(), q.denom());
        let shift = n.bits().max(d.bits()).saturating_sub(1000);
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => self.to_c64() == other.to_c64(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a * b),
            _ => Scalar::Float(self.to_c64() * rhs.to_c64()),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;

    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a + b),
            _ => Scalar::Float(self.to_c64() + rhs.to_c64()),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(a) => Scalar::Exact(-a.clone()),
            Scalar::Float(c) => Scalar::Float(-*c),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::int(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::rational(v)
    }
}

impl From<Complex64> for Scalar {
    fn from(v: Complex64) -> Self {
        Scalar::Float(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) if g.im.is_zero() => write!(f, "{}", g.re),
            Scalar::Exact(g) => write!(f, "{}+{}i", g.re, g.im),
            Scalar::Float(c) => write!(f, "{c}"),
        }
    }
}
