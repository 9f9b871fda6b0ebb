//! Exact univariate polynomials and rational functions over `Q`.
//!
//! `ExactPoly` is dense with ascending coefficients; the heavy algorithms
//! (gcd, elimination, root isolation) clear denominators and run over
//! [`IntPoly`].

mod gcd;
mod int;
mod matrix;
mod rational;
mod roots;

pub use gcd::poly_gcd;
pub use int::IntPoly;
pub use matrix::{determinant, fraction_free_solve, int_determinant, PolyMatrix};
pub use rational::{rf_reduce, series_coeffs, RationalFn};
pub use roots::{cauchy_bound, real_roots_in, real_roots_positive, RootBracket};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial with exact rational coefficients, `coeffs[i]` multiplying `x^i`.
///
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigRational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPoly::from_integers(&[1])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        ExactPoly::from_integers(&[0, 1])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_integers(cs: &[i64]) -> Self {
        ExactPoly::from_coeffs(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn monomial(c: BigRational, degree: usize) -> Self {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        ExactPoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        ExactPoly::monomial(c, 0)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i)
    }

    pub fn scale(&self, c: &BigRational) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> ExactPoly {
        match self.leading() {
            None => ExactPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    pub fn derivative(&self) -> ExactPoly {
        ExactPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Largest coefficient magnitude as a float.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .fold(0.0, f64::max)
    }

    /// Whether every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Writes `self = scale · p` with `p` a primitive integer polynomial with
    /// positive leading coefficient. Zero maps to `(0, 0)`.
    pub fn to_primitive(&self) -> (BigRational, IntPoly) {
        if self.is_zero() {
            return (BigRational::zero(), IntPoly::zero());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        let int = IntPoly::from_coeffs(ints);
        let prim = int.primitive();
        let factor = BigRational::new(int.leading().unwrap().clone(), lcm) / BigRational::from_integer(prim.leading().unwrap().clone());
        (factor, prim)
    }

    pub fn from_int(p: &IntPoly) -> ExactPoly {
        ExactPoly {
            coeffs: p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }

    /// Integer view, `None` if some coefficient is not an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(IntPoly::from_coeffs(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }

    /// Euclidean division over `Q`: `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &ExactPoly) -> (ExactPoly, ExactPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (ExactPoly::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let q = &rem[i + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (ExactPoly::from_coeffs(quot), ExactPoly::from_coeffs(rem))
    }

    pub fn pow(&self, e: u32) -> ExactPoly {
        let mut acc = ExactPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        ExactPoly::from_coeffs(coeffs)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $method(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

/// Renders as `1 - 2*x + 2*x^2 - x^4`: ascending degree, explicit signs,
/// unit coefficients dropped on non-constant terms.
impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

/// Renders a rational as `p/q`, or `p` when integral.
pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.trim().parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.trim().parse().ok()?)),
    }
}
