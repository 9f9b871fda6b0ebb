use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::poly::RationalFn;

use super::generating_function;

/// `a_n = Σ_{j=1}^{order} c_j a_{n-j}` for every `n >= valid_from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub order: usize,
    /// `c_1, .., c_order`
    pub lag_coeffs: Vec<BigRational>,
    pub valid_from: usize,
}

impl Recurrence {
    /// Reads the recurrence off a reduced `num / den` with `den(0) = 1`.
    ///
    /// The identity `den · A = num` gives `a_n = Σ c_j a_{n-j}` once
    /// `n > deg num`, and every lag must point at a defined term, so the
    /// recurrence holds from `max(deg num + 1, order)`.
    pub fn from_rational(f: &RationalFn) -> Recurrence {
        let den = f.den();
        let order = den.degree().unwrap_or(0);
        let lag_coeffs = (1..=order).map(|j| -den.coeff(j)).collect();
        let num_deg = f.num().degree().map_or(0, |d| d + 1);
        Recurrence {
            order,
            lag_coeffs,
            valid_from: num_deg.max(order),
        }
    }

    /// Extends `prefix` (`a_0, ..`) to `len` terms. The prefix must cover
    /// `a_0 .. a_{valid_from - 1}`.
    pub fn extend(&self, prefix: &[BigInt], len: usize) -> Vec<BigRational> {
        assert!(prefix.len() >= self.valid_from, "prefix shorter than valid_from");
        let mut out: Vec<BigRational> = prefix.iter().cloned().map(BigRational::from_integer).collect();
        while out.len() < len {
            let n = out.len();
            let mut acc = BigRational::zero();
            for (j, c) in self.lag_coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc += c * &out[n - j - 1];
                }
            }
            out.push(acc);
        }
        out.truncate(len.max(prefix.len()));
        out
    }
}

/// Recurrence read off the reduced denominator of `A^(m)`.
pub fn recurrence(m: u32) -> Result<Recurrence> {
    Ok(Recurrence::from_rational(&generating_function(m)?))
}

/// Upper bound `d_m = m^2 + m(m-1)(m+2)/2 + 1` on the recurrence order; `1`
/// for `m = 1`.
pub fn recurrence_order_bound(m: u32) -> u64 {
    if m <= 1 {
        return 1;
    }
    let m = m as u64;
    m * m + m * (m - 1) * (m + 2) / 2 + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::dp_counts;

    fn ints(cs: &[BigRational]) -> Vec<i64> {
        cs.iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn m3_recurrence() {
        let r = recurrence(3).unwrap();
        assert_eq!(r.order, 13);
        assert_eq!(ints(&r.lag_coeffs), [2, 1, -1, -1, -2, -2, -2, 4, 2, -1, 2, 0, -1]);
        assert_eq!(r.valid_from, 13);
    }

    #[test]
    fn m1_recurrence() {
        let r = recurrence(1).unwrap();
        assert_eq!((r.order, ints(&r.lag_coeffs), r.valid_from), (1, vec![1], 3));
    }

    #[test]
    fn m2_recurrence() {
        // (1-x)^2 (1-x-x^3) = 1 - 3x + 3x^2 - 2x^3 + 2x^4 - x^5
        let r = recurrence(2).unwrap();
        assert_eq!(ints(&r.lag_coeffs), [3, -3, 2, -2, 1]);
    }

    #[test]
    fn replay_against_dp() {
        for m in 1..=4 {
            let r = recurrence(m).unwrap();
            let dp: Vec<BigInt> = dp_counts(m, r.valid_from + 60).unwrap().unrestricted().into_iter().map(BigInt::from).collect();
            let replay = r.extend(&dp[..r.valid_from], dp.len());
            let want: Vec<BigRational> = dp.into_iter().map(BigRational::from_integer).collect();
            assert_eq!(replay, want, "m={m}");
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(recurrence_order_bound(1), 1);
        assert_eq!(recurrence_order_bound(2), 9);
        assert_eq!(recurrence_order_bound(3), 25);
    }
}
