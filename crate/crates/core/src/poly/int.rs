//! Dense polynomials over the integers, the workhorse of the fraction-free
//! algorithms (Bareiss elimination, primitive remainder sequences, Sturm
//! chains).

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        self.div_scalar(&g)
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        }
    }

    /// Exact division by a polynomial known to divide `self`.
    ///
    /// Panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        self.try_div_exact(d).expect("polynomial division was not exact")
    }

    /// Exact division, `None` if `d` does not divide `self` over `Z[x]`.
    pub fn try_div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.degree().unwrap();
        if n < dd {
            return None;
        }
        if dd == 0 {
            let c = &d.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for a in &self.coeffs {
                let (q, r) = a.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(IntPoly { coeffs: out });
        }
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[i + j] -= &q * c;
                }
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-remainder by zero");
        let mut rem = self.clone();
        let lead = d.leading().unwrap().clone();
        let Some(n) = rem.degree() else {
            return rem;
        };
        if n < dd {
            return rem;
        }
        let mut steps = n - dd + 1;
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let top = rem.coeffs[rd].clone();
            let mut next = rem.scale(&lead);
            for (j, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    next.coeffs[rd - dd + j] -= &top * c;
                }
            }
            rem = IntPoly::from_coeffs(next.coeffs);
            steps -= 1;
        }
        if steps > 0 {
            rem = rem.scale(&num_traits::pow(lead, steps));
        }
        rem
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Sign of `self(num / den)` for `den > 0`, computed exactly from the
    /// homogenised form `Σ c_i num^i den^(d-i)`.
    pub fn sign_at(&self, num: &BigInt, den: &BigInt) -> Sign {
        let Some(d) = self.degree() else {
            return Sign::NoSign;
        };
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        acc.sign()
    }

    pub fn sign_at_rational(&self, x: &BigRational) -> Sign {
        self.sign_at(x.numer(), x.denom())
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
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
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_round_trips() {
        let a = IntPoly::from_i64s(&[1, -1, 0, -1]);
        let b = IntPoly::from_i64s(&[1, -2, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b), a);
        assert_eq!(prod.div_exact(&a), b);
        assert!(a.try_div_exact(&b).is_none());
    }

    #[test]
    fn pseudo_remainder_identity() {
        // lc(d)^(n-dd+1) a = q d + r with deg r < deg d
        let a = IntPoly::from_i64s(&[3, 0, 2, 5, 7]);
        let d = IntPoly::from_i64s(&[1, 2, 3]);
        let r = a.pseudo_rem(&d);
        assert!(r.degree().unwrap() < 2);
        let scaled = a.scale(&BigInt::from(27));
        let q = (&scaled - &r).div_exact(&d);
        assert_eq!(&(&q * &d) + &r, scaled);
    }

    #[test]
    fn exact_signs_at_rationals() {
        let p = IntPoly::from_i64s(&[1, -1, 0, -1]); // 1 - x - x^3
        assert_eq!(p.sign_at(&BigInt::from(1), &BigInt::from(2)), Sign::Plus);
        assert_eq!(p.sign_at(&BigInt::from(7), &BigInt::from(10)), Sign::Minus);
        assert_eq!(IntPoly::from_i64s(&[1, -1]).sign_at(&BigInt::from(1), &BigInt::from(1)), Sign::NoSign);
    }

    #[test]
    fn primitive_part_has_positive_lead() {
        let p = IntPoly::from_i64s(&[4, -6, -2]);
        assert_eq!(p.primitive(), IntPoly::from_i64s(&[-2, 3, 1]));
        assert_eq!(p.content(), BigInt::from(2));
    }
}
