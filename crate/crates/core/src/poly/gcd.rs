//! Polynomial gcd over `Q` by a primitive remainder sequence.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{ExactPoly, IntPoly};
use crate::error::{Error, Result};

/// Monic greatest common divisor of `a` and `b` over `Q`.
pub fn poly_gcd(a: &ExactPoly, b: &ExactPoly) -> Result<ExactPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (_, pa) = a.to_primitive();
    let (_, pb) = b.to_primitive();
    Ok(ExactPoly::from_int(&int_gcd(&pa, &pb)).monic())
}

/// Primitive gcd (positive leading coefficient) of two integer polynomials.
///
/// Each remainder is reduced to its primitive part before the next step,
/// which keeps coefficient growth in check. A gcd modulo a large prime is
/// tried first: when it is constant the inputs are coprime over `Q`.
pub(crate) fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if coprime_mod_prime(a, b) {
        return IntPoly::one();
    }
    let (mut x, mut y) = if a.degree() >= b.degree() {
        (a.primitive(), b.primitive())
    } else {
        (b.primitive(), a.primitive())
    };
    while !y.is_zero() {
        let r = x.pseudo_rem(&y).primitive();
        x = y;
        y = r;
    }
    x
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

fn reduce(p: &IntPoly) -> Vec<u64> {
    let m = BigInt::from(PRIME);
    let mut v: Vec<u64> = p
        .coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &m) + &m) % &m;
            r.to_u64().unwrap()
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_mod(a: &mut Vec<u64>, b: &[u64]) {
    let db = b.len() - 1;
    let inv = powmod(b[db], PRIME - 2);
    while a.len() > db {
        let top = a.len() - 1;
        let q = mulmod(a[top], inv);
        if q != 0 {
            for (j, &c) in b.iter().enumerate() {
                let i = top - db + j;
                a[i] = (a[i] + PRIME - mulmod(q, c)) % PRIME;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// True when the images mod `PRIME` keep both degrees and have a constant gcd.
fn coprime_mod_prime(a: &IntPoly, b: &IntPoly) -> bool {
    let mut x = reduce(a);
    let mut y = reduce(b);
    if x.len() != a.coeffs().len() || y.len() != b.coeffs().len() || x.is_empty() || y.is_empty() {
        return false;
    }
    while !y.is_empty() {
        rem_mod(&mut x, &y);
        std::mem::swap(&mut x, &mut y);
    }
    x.len() == 1 && !x[0].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_integers(cs)
    }

    #[test]
    fn textbook_cases() {
        assert_eq!(poly_gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(poly_gcd(&p(&[3, 5, 7]), &ExactPoly::one()).unwrap(), ExactPoly::one());
        assert_eq!(poly_gcd(&ExactPoly::zero(), &p(&[2, 4])).unwrap(), p(&[1, 2]).monic());
        assert_eq!(poly_gcd(&ExactPoly::zero(), &ExactPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn shared_linear_factor() {
        // (1-x)^2 (1-x-x^3) and (1-x)(1+x) share exactly 1-x
        let a = &p(&[1, -1]).pow(2) * &p(&[1, -1, 0, -1]);
        let b = p(&[1, 0, -1]);
        assert_eq!(poly_gcd(&a, &b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn modular_shortcut_agrees_with_prs() {
        let a = IntPoly::from_i64s(&[1, -1, 0, -1]);
        let b = IntPoly::from_i64s(&[1, 0, -1]);
        assert!(coprime_mod_prime(&a, &b));
        let c = &a * &b;
        assert!(!coprime_mod_prime(&c, &b));
        assert_eq!(int_gcd(&c, &b), b.primitive());
    }
}
