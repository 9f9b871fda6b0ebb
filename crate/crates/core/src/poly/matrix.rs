//! Fraction-free (Bareiss) elimination over polynomial rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::{ExactPoly, IntPoly};

/// Dense square matrix of exact polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: Vec<Vec<ExactPoly>>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> Self {
        PolyMatrix {
            rows: vec![vec![ExactPoly::zero(); n]; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n);
        for i in 0..n {
            m.rows[i][i] = ExactPoly::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `I - self`.
    pub fn identity_minus(&self) -> PolyMatrix {
        let mut out = PolyMatrix::identity(self.size());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out.rows[i][j] = &out.rows[i][j] - e;
            }
        }
        out
    }

    pub fn determinant(&self) -> ExactPoly {
        determinant(self)
    }
}

/// Determinant by Bareiss elimination after clearing row denominators.
pub fn determinant(m: &PolyMatrix) -> ExactPoly {
    let n = m.size();
    if n == 0 {
        return ExactPoly::one();
    }
    let mut scale = BigInt::one();
    let rows: Vec<Vec<IntPoly>> = m
        .rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .flat_map(|e| e.coeffs().iter())
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            scale *= &lcm;
            let l = BigRational::from_integer(lcm);
            row.iter()
                .map(|e| e.scale(&l).to_int().expect("denominators cleared"))
                .collect()
        })
        .collect();
    ExactPoly::from_int(&int_determinant(rows)).scale(&BigRational::from_integer(scale).recip())
}

/// Runs Bareiss forward elimination in place on the first `n` columns of an
/// `n × c` array (`c ≥ n`). Returns the row-swap sign, or `None` if singular.
fn bareiss_forward(a: &mut [Vec<IntPoly>]) -> Option<i32> {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = IntPoly::one();
    let mut sign = 1;
    for k in 0..n {
        if a[k][k].is_zero() {
            let pivot = (k + 1..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, pivot);
            sign = -sign;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..cols {
                let mut v = &pivot_row[k] * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&factor * &pivot_row[j]);
                }
                row[j] = if prev.degree() == Some(0) && prev.coeffs()[0].is_one() {
                    v
                } else {
                    v.div_exact(&prev)
                };
            }
        }
        prev = a[k][k].clone();
    }
    Some(sign)
}

/// Determinant of a square integer-polynomial matrix.
pub fn int_determinant(mut rows: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = rows.len();
    if n == 0 {
        return IntPoly::one();
    }
    match bareiss_forward(&mut rows) {
        None => IntPoly::zero(),
        Some(sign) => {
            let d = rows[n - 1][n - 1].clone();
            if sign < 0 {
                -&d
            } else {
                d
            }
        }
    }
}

/// Solves `a · y = b` over `Q(x)` without fractions.
///
/// Returns `(d, ys)` with `y_i = ys[i] / d`, where `d = ±det(a)` and every
/// `ys[i]` is a polynomial (Cramer numerators). `None` if `a` is singular.
pub fn fraction_free_solve(a: Vec<Vec<IntPoly>>, b: Vec<IntPoly>) -> Option<(IntPoly, Vec<IntPoly>)> {
    let n = a.len();
    assert_eq!(b.len(), n);
    if n == 0 {
        return Some((IntPoly::one(), Vec::new()));
    }
    let mut aug: Vec<Vec<IntPoly>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    bareiss_forward(&mut aug)?;
    let d = aug[n - 1][n - 1].clone();
    let mut ys = vec![IntPoly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &d * &aug[i][n];
        for j in i + 1..n {
            if !aug[i][j].is_zero() && !ys[j].is_zero() {
                acc = &acc - &(&aug[i][j] * &ys[j]);
            }
        }
        ys[i] = acc.div_exact(&aug[i][i]);
    }
    Some((d, ys))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    fn ep(cs: &[i64]) -> ExactPoly {
        ExactPoly::from_integers(cs)
    }

    /// Cofactor expansion along the first row.
    fn laplace(m: &[Vec<ExactPoly>]) -> ExactPoly {
        let n = m.len();
        if n == 0 {
            return ExactPoly::one();
        }
        let mut acc = ExactPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<ExactPoly>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, e)| e.clone()).collect())
                .collect();
            let term = &m[0][j] * &laplace(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let rows = vec![
            vec![ep(&[0]), ep(&[1, 2]), ep(&[0, 0, 3])],
            vec![ep(&[2, -1]), ep(&[0]), ep(&[5])],
            vec![ep(&[1]), ep(&[0, 1]), ep(&[-1, 1, 1])],
        ];
        let m = PolyMatrix { rows: rows.clone() };
        assert_eq!(determinant(&m), laplace(&rows));
    }

    #[test]
    fn rational_entries() {
        let half = ExactPoly::monomial(BigRational::new(1.into(), 2.into()), 1);
        let m = PolyMatrix {
            rows: vec![vec![ep(&[1]), half.clone()], vec![half, ep(&[1])]],
        };
        let det = determinant(&m);
        assert_eq!(det, ExactPoly::from_coeffs(vec![BigRational::one(), BigRational::from_integer(0.into()), BigRational::new((-1).into(), 4.into())]));
    }

    #[test]
    fn singular_matrix() {
        let rows = vec![vec![ip(&[1, 1]), ip(&[2, 2])], vec![ip(&[3]), ip(&[6])]];
        assert!(int_determinant(rows.clone()).is_zero());
        assert!(fraction_free_solve(rows, vec![ip(&[1]), ip(&[1])]).is_none());
    }

    #[test]
    fn solve_two_state_cycle() {
        // F1 = x + x F2, F2 = x + x F1  =>  F = x / (1 - x)
        let a = vec![vec![ip(&[1]), ip(&[0, -1])], vec![ip(&[0, -1]), ip(&[1])]];
        let (d, ys) = fraction_free_solve(a, vec![ip(&[0, 1]), ip(&[0, 1])]).unwrap();
        for y in ys {
            assert_eq!(&y * &ip(&[1, -1]), &d * &ip(&[0, 1]));
        }
    }
}
