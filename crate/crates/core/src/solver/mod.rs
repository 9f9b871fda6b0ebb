//! Exact solution of `(I - W(x)) F = x·1` over `Q(x)`, the generating
//! function `A^(m) = 1 + F_{∞,∞}`, and the recurrence it implies.
//!
//! Components are solved in topological order. Every solved state is kept as
//! an integer-polynomial numerator over one running common denominator, the
//! product of the cyclic block determinants met so far. Acyclic singletons are
//! direct substitutions; each cyclic block is a fraction-free solve.

mod dp;
mod recurrence;

pub use dp::{dp_counts, CountTable};
pub use recurrence::{recurrence, recurrence_order_bound, Recurrence};

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{fraction_free_solve, rational_string, rf_reduce, ExactPoly, IntPoly, RationalFn};
use crate::system::{build_system, Edge, StateSystem};
use crate::threshold::StatePair;

fn edge_poly(e: &Edge) -> IntPoly {
    IntPoly::monomial(BigInt::from(e.coeff.clone()), e.weight as usize)
}

/// States from which `(∞, ∞)` is reachable, including itself.
fn ancestors_of_output(sys: &StateSystem) -> Vec<bool> {
    let mut seen = vec![false; sys.states().len()];
    let out = sys.output_state();
    seen[out] = true;
    let mut queue = VecDeque::from([out]);
    while let Some(v) = queue.pop_front() {
        for &e in sys.incoming(v) {
            let u = sys.edges()[e].source;
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Numerators over a shared denominator for the states marked `active`.
/// `active` must be closed under predecessors.
fn solve_active(sys: &StateSystem, active: &[bool]) -> Result<(Vec<Option<IntPoly>>, IntPoly)> {
    let x = IntPoly::monomial(BigInt::from(1), 1);
    let mut den = IntPoly::one();
    let mut num: Vec<Option<IntPoly>> = vec![None; sys.states().len()];
    let mut solved: Vec<usize> = Vec::new();

    // x·den + Σ W_{s,t} N_t over sources t outside `inside`
    let rhs = |s: usize, den: &IntPoly, num: &[Option<IntPoly>], inside: &dyn Fn(usize) -> bool| {
        let mut acc = &x * den;
        for &e in sys.incoming(s) {
            let e = &sys.edges()[e];
            if inside(e.source) {
                continue;
            }
            let n = num[e.source].as_ref().expect("sources are solved first");
            if !n.is_zero() {
                acc = &acc + &(&edge_poly(e) * n);
            }
        }
        acc
    };

    for c in sys.components() {
        if !active[c.members[0]] {
            continue;
        }
        if !c.cyclic {
            let s = c.members[0];
            num[s] = Some(rhs(s, &den, &num, &|_| false));
            solved.push(s);
            continue;
        }
        let local = |s: usize| c.members.binary_search(&s).ok();
        let k = c.members.len();
        let mut a = vec![vec![IntPoly::zero(); k]; k];
        for (i, &s) in c.members.iter().enumerate() {
            a[i][i] = IntPoly::one();
            for &e in sys.incoming(s) {
                let e = &sys.edges()[e];
                if let Some(j) = local(e.source) {
                    a[i][j] = &a[i][j] - &edge_poly(e);
                }
            }
        }
        let b: Vec<IntPoly> = c
            .members
            .iter()
            .map(|&s| rhs(s, &den, &num, &|t| local(t).is_some()))
            .collect();
        let (d, ys) = fraction_free_solve(a, b).ok_or(Error::SingularBlock(c.id))?;
        for &s in &solved {
            let n = num[s].take().expect("solved");
            num[s] = Some(&n * &d);
        }
        den = &den * &d;
        for (&s, y) in c.members.iter().zip(ys) {
            num[s] = Some(y);
            solved.push(s);
        }
    }
    Ok((num, den))
}

/// All `(m+1)^2` reduced state generating functions `F_{p,q}(x)`.
pub fn solve_system(sys: &StateSystem) -> Result<BTreeMap<StatePair, RationalFn>> {
    let active = vec![true; sys.states().len()];
    let (num, den) = solve_active(sys, &active)?;
    let den = ExactPoly::from_int(&den);
    sys.states()
        .iter()
        .zip(num)
        .map(|(&s, n)| Ok((s, rf_reduce(&ExactPoly::from_int(&n.expect("all states active")), &den)?)))
        .collect()
}

/// `F_{∞,∞}` only, solving just the states that reach the output.
pub fn solve_output(sys: &StateSystem) -> Result<RationalFn> {
    let active = ancestors_of_output(sys);
    let (mut num, den) = solve_active(sys, &active)?;
    let n = num[sys.output_state()].take().expect("output is active");
    rf_reduce(&ExactPoly::from_int(&n), &ExactPoly::from_int(&den))
}

/// The reduced generating function `A^(m)(x) = 1 + F_{∞,∞}(x)`.
pub fn generating_function(m: u32) -> Result<RationalFn> {
    let sys = build_system(m)?;
    generating_function_of(&sys)
}

pub fn generating_function_of(sys: &StateSystem) -> Result<RationalFn> {
    let f = solve_output(sys)?;
    rf_reduce(&(f.num() + f.den()), f.den())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceJson {
    pub order: usize,
    pub coeffs: Vec<String>,
    pub valid_from: usize,
}

/// Machine-readable summary of `A^(m)`; rationals are `"p/q"` strings in
/// ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfReport {
    pub m: u32,
    pub num: Vec<String>,
    pub den: Vec<String>,
    pub recurrence: RecurrenceJson,
    pub bound_d_m: u64,
}

impl GfReport {
    pub fn new(m: u32, gf: &RationalFn) -> GfReport {
        let strings = |p: &ExactPoly| p.coeffs().iter().map(rational_string).collect();
        let rec = Recurrence::from_rational(gf);
        GfReport {
            m,
            num: strings(gf.num()),
            den: strings(gf.den()),
            recurrence: RecurrenceJson {
                order: rec.order,
                coeffs: rec.lag_coeffs.iter().map(rational_string).collect(),
                valid_from: rec.valid_from,
            },
            bound_d_m: recurrence_order_bound(m),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }
}
