//! Exact counts `T_{p,q}(n)` by the bottom-up recursion on the position of
//! the maximum entry.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::c_kp_table;
use crate::error::{Error, Result};
use crate::threshold::{StatePair, Threshold};

/// `T_{p,q}(n)` for every state and `1 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    m: u32,
    n_max: usize,
    /// `rows[n - 1][state index]`
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `T_s(n)`; `None` outside `1..=n_max`.
    pub fn get(&self, s: StatePair, n: usize) -> Option<&BigUint> {
        if n == 0 || n > self.n_max || !s.p.in_range(self.m) || !s.q.in_range(self.m) {
            return None;
        }
        Some(&self.rows[n - 1][s.index(self.m)])
    }

    /// `a_0, .., a_{n_max}` with `a_0 = 1` and `a_n = T_{∞,∞}(n)`.
    pub fn unrestricted(&self) -> Vec<BigUint> {
        let out = StatePair::OUTPUT.index(self.m);
        std::iter::once(BigUint::one())
            .chain(self.rows.iter().map(|r| r[out].clone()))
            .collect()
    }
}

/// Fills the count table for `1 <= n <= n_max`.
pub fn dp_counts(m: u32, n_max: usize) -> Result<CountTable> {
    if m == 0 {
        return Err(Error::InvalidBound);
    }
    let states = StatePair::all(m);
    let left = c_kp_table(m);
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max);
    if n_max >= 1 {
        rows.push(vec![BigUint::one(); states.len()]);
    }
    for n in 2..=n_max {
        let row: Vec<BigUint> = states
            .iter()
            .map(|s| {
                let mut acc = BigUint::zero();
                for k in 1..=(m as usize).min(n - 1) {
                    let c = &left[k - 1][s.p.index(m)];
                    if c.is_zero() {
                        continue;
                    }
                    if let Some(q) = s.q.lowered(k as u32) {
                        let src = StatePair::new(Threshold::Finite(m - k as u32), q).index(m);
                        acc += c * &rows[n - k - 1][src];
                    }
                }
                if let Some(p) = s.p.lowered(1) {
                    acc += &rows[n - 2][StatePair::new(p, Threshold::Finite(m - 1)).index(m)];
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    Ok(CountTable { m, n_max, rows })
}
