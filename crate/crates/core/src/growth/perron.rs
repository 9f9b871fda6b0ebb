//! Perron spectral radius of a component matrix `W_C(x)` at real `x > 0`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::system::ComponentMatrix;

/// Iteration cap for a single power-iteration run.
const MAX_ITERATIONS: usize = 200_000;
/// Collatz–Wielandt gaps below this are at the floating-point floor.
const NOISE_FLOOR: f64 = 1e-14;

/// Sparse `W_C` with monomial entries, evaluable at any `x`.
#[derive(Clone, Debug)]
pub struct SparseComponent {
    n: usize,
    /// CSR row starts, length `n + 1`
    row_start: Vec<usize>,
    cols: Vec<usize>,
    ln_coeff: Vec<f64>,
    degree: Vec<i32>,
}

impl SparseComponent {
    pub fn new(cm: &ComponentMatrix) -> SparseComponent {
        let n = cm.size();
        let mut terms: Vec<_> = cm.terms.iter().collect();
        terms.sort_by_key(|t| (t.row, t.col));
        let mut row_start = vec![0; n + 1];
        for t in &terms {
            row_start[t.row + 1] += 1;
        }
        for i in 0..n {
            row_start[i + 1] += row_start[i];
        }
        SparseComponent {
            n,
            row_start,
            cols: terms.iter().map(|t| t.col).collect(),
            ln_coeff: terms.iter().map(|t| crate::combinatorics::ln_biguint(&t.coeff)).collect(),
            degree: terms.iter().map(|t| t.degree as i32).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.cols.len()
    }

    /// Entry values of `W_C(x)`, in CSR order.
    pub fn values_at(&self, x: f64) -> Vec<f64> {
        let lx = x.ln();
        self.ln_coeff
            .iter()
            .zip(&self.degree)
            .map(|(&lc, &d)| (lc + d as f64 * lx).exp())
            .collect()
    }
}

/// `W_C(x)` evaluated at one point, with the current Perron estimate.
#[derive(Clone, Debug)]
pub struct PerronState<'a> {
    pub x: f64,
    matrix: &'a SparseComponent,
    values: Vec<f64>,
    /// Collatz–Wielandt bracket on `spr(W_C(x))`.
    pub spr_lo: f64,
    pub spr_hi: f64,
    /// Positive right vector, max-normalised.
    pub right_vector: Vec<f64>,
}

impl<'a> PerronState<'a> {
    /// Starts at `x` from `start` (all ones when `None`).
    pub fn new(matrix: &'a SparseComponent, x: f64, start: Option<Vec<f64>>) -> Result<Self> {
        if x.is_nan() || x <= 0.0 || x.is_infinite() {
            return Err(Error::NonPositivePoint(x));
        }
        let v = start.filter(|v| v.len() == matrix.n).unwrap_or_else(|| vec![1.0; matrix.n]);
        let mut st = PerronState {
            x,
            matrix,
            values: matrix.values_at(x),
            spr_lo: 0.0,
            spr_hi: f64::INFINITY,
            right_vector: v,
        };
        st.step();
        Ok(st)
    }

    pub fn spr(&self) -> f64 {
        0.5 * (self.spr_lo + self.spr_hi)
    }

    /// One multiplication by `W_C(x) + I`, updating the bracket.
    fn step(&mut self) {
        let m = self.matrix;
        let v = &self.right_vector;
        let mut w = vec![0.0; m.n];
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for i in 0..m.n {
            let mut acc = v[i];
            for e in m.row_start[i]..m.row_start[i + 1] {
                acc += self.values[e] * v[m.cols[e]];
            }
            let r = acc / v[i];
            lo = lo.min(r);
            hi = hi.max(r);
            w[i] = acc;
        }
        let scale = w.iter().cloned().fold(0.0, f64::max);
        for wi in &mut w {
            *wi /= scale;
            // keep the vector strictly positive under underflow
            if *wi < f64::MIN_POSITIVE {
                *wi = f64::MIN_POSITIVE;
            }
        }
        self.right_vector = w;
        self.spr_lo = self.spr_lo.max(lo - 1.0);
        self.spr_hi = self.spr_hi.min(hi - 1.0);
    }

    /// Iterates until the bracket is narrower than `tol`.
    pub fn converge(&mut self, tol: f64) {
        let mut it = 0;
        while self.spr_hi - self.spr_lo >= tol && it < MAX_ITERATIONS {
            self.step();
            it += 1;
        }
    }

    /// Certified comparison of `spr(W_C(x))` with `1`; `Equal` when the
    /// bracket still straddles `1` at the floating-point floor.
    pub fn compare_to_one(&mut self) -> Ordering {
        let mut it = 0;
        loop {
            if self.spr_lo > 1.0 {
                return Ordering::Greater;
            }
            if self.spr_hi < 1.0 {
                return Ordering::Less;
            }
            if self.spr_hi - self.spr_lo <= NOISE_FLOOR || it >= MAX_ITERATIONS {
                return Ordering::Equal;
            }
            self.step();
            it += 1;
        }
    }
}

/// A certified enclosure `lo <= r <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn point(x: f64) -> Bracket {
        Bracket { lo: x, hi: x }
    }
}

/// `spr(W_C(x))` to within `tol`.
pub fn spectral_radius(matrix: &SparseComponent, x: f64, tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut st = PerronState::new(matrix, x, None)?;
    st.converge(tol);
    Ok(st.spr())
}

/// The unique `r` in `(0, 1]` with `spr(W_C(r)) = 1`, by bisection with
/// certified sign decisions. Perron vectors are carried between steps.
pub fn radius(matrix: &SparseComponent, tol: f64) -> Result<Bracket> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let mut top = PerronState::new(matrix, 1.0, None)?;
    match top.compare_to_one() {
        Ordering::Greater => {}
        // spr(W_C(1)) <= 1 forces r = 1
        _ => return Ok(Bracket::point(1.0)),
    }
    let mut warm = top.right_vector.clone();
    let mut lo = 0.25;
    loop {
        let mut st = PerronState::new(matrix, lo, Some(warm.clone()))?;
        match st.compare_to_one() {
            Ordering::Less => break,
            Ordering::Equal => return Ok(Bracket::point(lo)),
            Ordering::Greater => {
                warm = st.right_vector;
                lo *= 0.5;
            }
        }
    }
    let mut hi = 1.0;
    while hi - lo >= tol {
        let mid = 0.5 * (lo + hi);
        let mut st = PerronState::new(matrix, mid, Some(warm))?;
        let ord = st.compare_to_one();
        warm = st.right_vector;
        match ord {
            Ordering::Less => lo = mid,
            Ordering::Greater => hi = mid,
            Ordering::Equal => return Ok(Bracket::point(mid)),
        }
    }
    Ok(Bracket { lo, hi })
}
