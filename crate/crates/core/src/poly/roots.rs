//! Real root isolation by Sturm sequences and exact sign bisection.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::gcd::int_gcd;
use super::{ExactPoly, IntPoly};

/// An interval `[lo, hi]` with rational endpoints containing exactly one
/// real root. `lo == hi` when the root was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> f64 {
        (&self.hi - &self.lo).to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn midpoint_exact(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }
}

/// Divide by the positive content, keeping the sign pattern.
fn strip_content(p: IntPoly) -> IntPoly {
    let c = p.content();
    if c.is_zero() {
        p
    } else {
        p.div_scalar(&c)
    }
}

struct SturmChain {
    polys: Vec<IntPoly>,
}

impl SturmChain {
    fn new(q: &IntPoly) -> Self {
        let mut polys = vec![q.clone(), strip_content(q.derivative())];
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc(b)^(delta+1) · rem; the chain needs -rem up to a positive factor
            let flip = b.leading().unwrap().is_negative() && delta % 2 == 0;
            let next = if flip { r } else { -&r };
            polys.push(strip_content(next));
        }
        SturmChain { polys }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut changes = 0;
        let mut last = Sign::NoSign;
        for p in &self.polys {
            let s = p.sign_at(x.numer(), x.denom());
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }
}

fn half(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

/// Isolates every distinct real root of `p` in `(lo, hi]` and refines each
/// bracket to width below `tol`. Sorted ascending.
pub fn real_roots_in(p: &ExactPoly, lo: &BigRational, hi: &BigRational, tol: f64) -> Vec<RootBracket> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    assert!(tol > 0.0, "tolerance must be positive");
    let (_, int) = p.to_primitive();
    if int.degree() == Some(0) || lo >= hi {
        return Vec::new();
    }
    let g = int_gcd(&int, &int.derivative());
    let squarefree = if g.degree() == Some(0) { int } else { int.div_exact(&g).primitive() };
    let chain = SturmChain::new(&squarefree);

    let mut isolated = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), chain.variations(lo), chain.variations(hi))];
    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va.saturating_sub(vb);
        if count == 0 {
            continue;
        }
        if count == 1 {
            isolated.push((a, b));
            continue;
        }
        let mid = half(&a, &b);
        let vm = chain.variations(&mid);
        stack.push((mid.clone(), b, vm, vb));
        stack.push((a, mid, va, vm));
    }
    isolated.sort_by(|x, y| x.0.cmp(&y.0));

    let tol_q = BigRational::from_float(tol).expect("finite tolerance");
    isolated
        .into_iter()
        .map(|(a, b)| refine(&squarefree, a, b, &tol_q))
        .collect()
}

fn refine(q: &IntPoly, mut a: BigRational, mut b: BigRational, tol: &BigRational) -> RootBracket {
    let sb = q.sign_at_rational(&b);
    if sb == Sign::NoSign {
        return RootBracket { lo: b.clone(), hi: b };
    }
    while &b - &a >= *tol {
        let mid = half(&a, &b);
        match q.sign_at_rational(&mid) {
            Sign::NoSign => return RootBracket { lo: mid.clone(), hi: mid },
            s if s == sb => b = mid,
            _ => a = mid,
        }
    }
    RootBracket { lo: a, hi: b }
}

/// Distinct real roots of `p` in `(lo, hi]` with `lo` clamped to `0`, each
/// bracketed to width below `tol`.
pub fn real_roots_positive(p: &ExactPoly, lo: f64, hi: f64, tol: f64) -> Vec<RootBracket> {
    let lo = BigRational::from_float(lo.max(0.0)).expect("finite bound");
    let hi = BigRational::from_float(hi).expect("finite bound");
    real_roots_in(p, &lo, &hi, tol)
}

/// Cauchy bound: every complex root has modulus below the returned value.
pub fn cauchy_bound(p: &ExactPoly) -> BigRational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_integers(cs)
    }

    #[test]
    fn quartic_with_known_roots() {
        // (x - 1/2)(x - 1)(x - 3)(x + 2) scaled to integers
        let f = &(&p(&[-1, 2]) * &p(&[-1, 1])) * &(&p(&[-3, 1]) * &p(&[2, 1]));
        let roots = real_roots_positive(&f, 0.0, 10.0, 1e-12);
        let mids: Vec<f64> = roots.iter().map(RootBracket::midpoint).collect();
        assert_eq!(mids.len(), 3);
        for (m, want) in mids.iter().zip([0.5, 1.0, 3.0]) {
            assert!((m - want).abs() < 1e-11, "{m} vs {want}");
        }
    }

    #[test]
    fn repeated_roots_are_reported_once() {
        let f = &p(&[1, -1]).pow(3) * &p(&[-2, 1]);
        let roots = real_roots_positive(&f, 0.0, 4.0, 1e-9);
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn dominant_cubic_root() {
        let roots = real_roots_positive(&p(&[1, -1, 0, -1]), 0.0, 1.0, 1e-9);
        assert_eq!(roots.len(), 1);
        assert!((roots[0].midpoint() - 0.682).abs() < 5e-4);
        assert!(roots[0].width() < 1e-9);
    }

    #[test]
    fn quintic_root() {
        let roots = real_roots_positive(&p(&[1, -2, 1, -1, -1, 1]), 0.0, 1.0, 1e-9);
        assert_eq!(roots.len(), 1);
        assert!((roots[0].midpoint() - 0.547).abs() < 5e-4);
    }

    #[test]
    fn root_at_endpoint() {
        let roots = real_roots_positive(&p(&[1, -1]), 0.0, 2.0, 1e-9);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].midpoint(), 1.0);
    }

    #[test]
    fn no_roots() {
        assert!(real_roots_positive(&p(&[1, 0, 1]), 0.0, 5.0, 1e-6).is_empty());
        assert!(real_roots_positive(&p(&[3]), 0.0, 5.0, 1e-6).is_empty());
    }

    #[test]
    fn cauchy_bound_encloses_roots() {
        let f = p(&[-6, 1, 1]); // roots 2 and -3
        let b = cauchy_bound(&f).to_f64().unwrap();
        assert!(b > 3.0);
    }
}
