use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gcd::int_gcd;
use super::ExactPoly;
use crate::error::{Error, Result};

/// A reduced ratio `num / den` of exact polynomials.
///
/// `gcd(num, den) = 1` and the lowest-order nonzero coefficient of `den` is
/// `+1`, so a denominator with nonzero constant term reads `1 - ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: ExactPoly,
    den: ExactPoly,
}

impl RationalFn {
    pub fn num(&self) -> &ExactPoly {
        &self.num
    }

    pub fn den(&self) -> &ExactPoly {
        &self.den
    }

    pub fn from_poly(p: ExactPoly) -> Self {
        RationalFn { num: p, den: ExactPoly::one() }
    }

    /// First `n_max + 1` Taylor coefficients at `0`.
    pub fn series(&self, n_max: usize) -> Result<Vec<BigRational>> {
        series_coeffs(self, n_max)
    }

    /// Taylor coefficients as integers; an error if one is not integral.
    pub fn series_integers(&self, n_max: usize) -> Result<Vec<BigInt>> {
        self.series(n_max)?
            .into_iter()
            .enumerate()
            .map(|(n, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegralSeries(n)) })
            .collect()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    pub fn add(&self, other: &RationalFn) -> Result<RationalFn> {
        rf_reduce(
            &(&(&self.num * &other.den) + &(&other.num * &self.den)),
            &(&self.den * &other.den),
        )
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Divides out `gcd(num, den)` and normalises the denominator.
pub fn rf_reduce(num: &ExactPoly, den: &ExactPoly) -> Result<RationalFn> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if num.is_zero() {
        return Ok(RationalFn { num: ExactPoly::zero(), den: ExactPoly::one() });
    }
    let (sn, pn) = num.to_primitive();
    let (sd, pd) = den.to_primitive();
    let g = int_gcd(&pn, &pd);
    let (pn, pd) = if g.degree() == Some(0) {
        (pn, pd)
    } else {
        (pn.div_exact(&g), pd.div_exact(&g))
    };
    let mut num = ExactPoly::from_int(&pn).scale(&sn);
    let mut den = ExactPoly::from_int(&pd).scale(&sd);
    let low = den.coeff(den.valuation().expect("nonzero denominator"));
    let inv = low.recip();
    num = num.scale(&inv);
    den = den.scale(&inv);
    Ok(RationalFn { num, den })
}

/// First `n_max + 1` Taylor coefficients of `f` at `0`, from the linear
/// recurrence `den_0 a_n = num_n - Σ_{j≥1} den_j a_{n-j}`.
pub fn series_coeffs(f: &RationalFn, n_max: usize) -> Result<Vec<BigRational>> {
    let den = f.den.coeffs();
    let d0 = den.first().filter(|c| !c.is_zero()).ok_or(Error::NonUnitConstantTerm)?;
    let d0_inv = d0.recip();
    let mut out: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = f.num.coeff(n);
        for (j, dj) in den.iter().enumerate().skip(1).take(n) {
            if !dj.is_zero() {
                acc -= dj * &out[n - j];
            }
        }
        out.push(acc * &d0_inv);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_integers(cs)
    }

    fn ints(v: &[BigRational]) -> Vec<i64> {
        v.iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn reduction_cases() {
        let f = rf_reduce(&p(&[0, 1, 1]), &p(&[1, -1])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[0, 1, 1]), &p(&[1, -1])));
        let g = rf_reduce(&(&p(&[1, -1]) * &p(&[0, 1])), &p(&[1, -1]).pow(2)).unwrap();
        assert_eq!((g.num(), g.den()), (&p(&[0, 1]), &p(&[1, -1])));
        // F_oo,oo for m = 1 plus one: (1 - x + x + x^2) / (1 - x)
        let a1 = rf_reduce(&(&p(&[1, -1]) + &p(&[0, 1, 1])), &p(&[1, -1])).unwrap();
        assert_eq!((a1.num(), a1.den()), (&p(&[1, 0, 1]), &p(&[1, -1])));
        assert_eq!(rf_reduce(&p(&[1]), &ExactPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn normalisation_uses_lowest_coefficient() {
        let f = rf_reduce(&p(&[2]), &p(&[-2, 4])).unwrap();
        assert_eq!(f.den().coeff(0), BigRational::one());
        assert_eq!(f.num(), &p(&[-1]));
    }

    #[test]
    fn series_examples() {
        let a1 = rf_reduce(&p(&[1, 0, 1]), &p(&[1, -1])).unwrap();
        assert_eq!(ints(&a1.series(5).unwrap()), vec![1, 1, 2, 2, 2, 2]);
        let a2 = rf_reduce(&p(&[1, -2, 2, 0, -1, 0, -1]), &(&p(&[1, -1]).pow(2) * &p(&[1, -1, 0, -1]))).unwrap();
        assert_eq!(ints(&a2.series(11).unwrap()), vec![1, 1, 2, 5, 8, 12, 18, 26, 37, 53, 76, 109]);
        let geo = rf_reduce(&p(&[0, 1]), &p(&[1, -1])).unwrap();
        assert_eq!(ints(&geo.series(3).unwrap()), vec![0, 1, 1, 1]);
    }

    #[test]
    fn series_needs_unit_constant_term() {
        let f = RationalFn { num: p(&[1]), den: p(&[0, 1]) };
        assert_eq!(series_coeffs(&f, 3), Err(Error::NonUnitConstantTerm));
    }
}
