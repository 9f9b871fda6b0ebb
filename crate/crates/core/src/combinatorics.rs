//! Brute-force ground truth and the left-block coefficients `c_{k,p}`.
//!
//! Everything here works directly from the definitions: a permutation
//! generator with pruning, the Catalan numbers, the first-entry distribution
//! of 132-avoiders, and the block-construction lower bound.

use num_bigint::BigUint;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::threshold::Threshold;

/// Largest `n` the brute-force oracle accepts unless configured otherwise.
pub const DEFAULT_ORACLE_CAP: usize = 11;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Checks that `entries` is a bijection on `1..=n`.
    pub fn new(entries: Vec<u32>) -> Option<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let e = e as usize;
            if e == 0 || e > n || seen[e] {
                return None;
            }
            seen[e] = true;
        }
        Some(Permutation(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// True iff there are no `i < j < k` with `p_i < p_k < p_j`. Cubic scan.
pub fn is_132_avoiding(p: &Permutation) -> bool {
    let e = p.entries();
    let n = e.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if e[i] < e[k] && e[k] < e[j] {
                    return false;
                }
            }
        }
    }
    true
}

/// True iff every adjacent difference is at most `m` in absolute value.
pub fn is_m_bounded(p: &Permutation, m: u32) -> bool {
    p.entries().windows(2).all(|w| w[0].abs_diff(w[1]) <= m)
}

/// Whether appending `z` to `prefix` completes a 132 pattern ending at `z`.
fn closes_132(prefix: &[u32], z: u32) -> bool {
    let mut min_so_far = u32::MAX;
    for &y in prefix {
        if y > z && min_so_far < z {
            return true;
        }
        min_so_far = min_so_far.min(y);
    }
    false
}

struct Generator<'a, F> {
    n: u32,
    gap: Option<u32>,
    first: Threshold,
    used: Vec<bool>,
    prefix: Vec<u32>,
    visit: &'a mut F,
}

impl<F: FnMut(&[u32])> Generator<'_, F> {
    fn run(&mut self) {
        if self.prefix.len() == self.n as usize {
            (self.visit)(&self.prefix);
            return;
        }
        for z in 1..=self.n {
            if self.used[z as usize] {
                continue;
            }
            match self.prefix.last() {
                None => {
                    if !self.first.admits(self.n - z) {
                        continue;
                    }
                }
                Some(&last) => {
                    if self.gap.is_some_and(|g| last.abs_diff(z) > g) {
                        continue;
                    }
                }
            }
            if closes_132(&self.prefix, z) {
                continue;
            }
            self.used[z as usize] = true;
            self.prefix.push(z);
            self.run();
            self.prefix.pop();
            self.used[z as usize] = false;
        }
    }
}

/// Visits every 132-avoiding permutation of length `n` whose adjacent gaps are
/// at most `gap` (unbounded when `None`) and whose first entry satisfies
/// `n - π_1 <= first`.
///
/// Backtracking prunes a branch as soon as the gap condition fails or the
/// newest entry closes a 132 pattern, so only admissible prefixes are grown.
pub fn for_each_avoider<F: FnMut(&[u32])>(n: usize, gap: Option<u32>, first: Threshold, mut visit: F) {
    let mut generator = Generator {
        n: n as u32,
        gap,
        first,
        used: vec![false; n + 1],
        prefix: Vec::with_capacity(n),
        visit: &mut visit,
    };
    generator.run();
}

/// Counts length-`n` permutations that avoid 132, are `m`-bounded, and satisfy
/// `n - π_1 <= p` and `n - π_n <= q`.
///
/// For `n = 0` only the unrestricted count is defined (it is 1); finite
/// thresholds are rejected there.
pub fn brute_force_count(m: u32, n: usize, p: Threshold, q: Threshold, cap: usize) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::InvalidBound);
    }
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    if n == 0 {
        return if p.is_finite() || q.is_finite() {
            Err(Error::EmptyRestricted)
        } else {
            Ok(BigUint::one())
        };
    }
    let top = n as u32;
    let mut count = 0u64;
    for_each_avoider(n, Some(m), p, |perm| {
        if q.admits(top - perm[n - 1]) {
            count += 1;
        }
    });
    Ok(BigUint::from(count))
}

/// The Catalan number `C_k = binom(2k, k) / (k + 1)`.
pub fn catalan(k: u32) -> BigUint {
    let k = BigUint::from(k);
    binomial(BigUint::from(2u32) * &k, k.clone()) / (k + 1u32)
}

/// The number of left blocks of length `k - 1` compatible with first
/// threshold `p`: `1` for `k = 1`, otherwise the count of
/// `σ ∈ Av_{k-1}(132)` with `k - σ_1 <= p`.
///
/// Uses the Catalan-triangle distribution of the first entry,
/// `Σ_{d=1}^{min(p,k-1)} d/(k-1) · binom(2k-d-3, k-2)`.
pub fn c_kp(k: u32, p: Threshold) -> BigUint {
    assert!(k >= 1, "c_kp needs k >= 1");
    if k == 1 {
        return BigUint::one();
    }
    let top = match p {
        Threshold::Infinite => return catalan(k - 1),
        Threshold::Finite(u) if u >= k - 1 => return catalan(k - 1),
        Threshold::Finite(u) => u,
    };
    let mut sum = BigRational::zero();
    for d in 1..=top {
        let b = binomial(BigUint::from(2 * k - d - 3), BigUint::from(k - 2));
        sum += BigRational::new(BigUint::from(d).into(), BigUint::from(k - 1).into()) * BigRational::from_integer(b.into());
    }
    assert!(sum.is_integer());
    sum.to_integer().to_biguint().expect("nonnegative sum")
}

/// `c_{k,p}` for `1 <= k <= m` and every `p` in `B_m`, indexed
/// `[k - 1][p.index(m)]`. Same formula as [`c_kp`], with the binomials
/// stepped down one at a time and the sum accumulated over `p`.
pub fn c_kp_table(m: u32) -> Vec<Vec<BigUint>> {
    (1..=m)
        .map(|k| {
            let full = catalan(k - 1);
            if k == 1 {
                return vec![full; m as usize + 1];
            }
            // binom(2k - d - 3, k - 2), starting at d = 1
            let mut top = 2 * k - 4;
            let mut b = binomial(BigUint::from(top), BigUint::from(k - 2));
            let mut acc = BigUint::zero();
            let mut row = Vec::with_capacity(m as usize + 1);
            for p in 0..m {
                if p >= k - 1 {
                    row.push(full.clone());
                    continue;
                }
                if p >= 1 {
                    let d = p;
                    let term = BigUint::from(d) * &b;
                    debug_assert!((&term % (k - 1)).is_zero());
                    acc += term / (k - 1);
                    // binom(top - 1, r) = binom(top, r) (top - r) / top
                    b = b * (top - (k - 2)) / top;
                    top -= 1;
                }
                row.push(acc.clone());
            }
            row.push(full);
            row
        })
        .collect()
}

/// `c_{k,p}` by enumerating `Av_{k-1}(132)` directly.
pub fn c_kp_enumerated(k: u32, p: Threshold) -> BigUint {
    assert!(k >= 1, "c_kp needs k >= 1");
    if k == 1 {
        return BigUint::one();
    }
    let mut count = 0u64;
    for_each_avoider((k - 1) as usize, None, Threshold::Infinite, |sigma| {
        if p.admits(k - sigma[0]) {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// Size of the block-construction family, `C_{m-1}^{⌊n/(m+1)⌋}`, a lower
/// bound for the number of `m`-bounded 132-avoiders of length `n`.
pub fn block_construction_count(m: u32, n: usize) -> BigUint {
    let blocks = n / (m as usize + 1);
    num_traits::pow(catalan(m - 1), blocks)
}

/// Natural logarithm of a big integer, safe beyond the `f64` range.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let head = (x >> shift).to_f64().expect("64-bit head");
    head.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_closed_form() {
        let m = 14;
        let table = c_kp_table(m);
        for k in 1..=m {
            for p in Threshold::all(m) {
                assert_eq!(table[k as usize - 1][p.index(m)], c_kp(k, p), "k={k} p={p}");
            }
        }
    }

    fn perm(v: &[u32]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn all_perms(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn pattern_detection() {
        assert!(!is_132_avoiding(&perm(&[1, 3, 2])));
        assert!(is_132_avoiding(&perm(&[])));
        assert!(is_132_avoiding(&perm(&[1])));
        let avoiders = all_perms(4).into_iter().filter(|p| is_132_avoiding(&perm(p))).count();
        assert_eq!(avoiders, 14);
    }

    #[test]
    fn bounded_gaps() {
        assert!(is_m_bounded(&perm(&[3, 1, 2]), 2));
        assert!(!is_m_bounded(&perm(&[1, 4, 2, 3]), 2));
        assert!(is_m_bounded(&perm(&[1]), 1));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_none());
        assert!(Permutation::new(vec![0, 1]).is_none());
        assert!(Permutation::new(vec![2, 3]).is_none());
    }

    #[test]
    fn pruned_generator_matches_filtering_all_of_s_n() {
        for n in 0..=7u32 {
            for gap in [None, Some(1), Some(2), Some(3)] {
                let mut generated = Vec::new();
                for_each_avoider(n as usize, gap, Threshold::Infinite, |p| generated.push(p.to_vec()));
                let mut filtered: Vec<_> = all_perms(n)
                    .into_iter()
                    .filter(|p| {
                        let q = perm(p);
                        is_132_avoiding(&q) && gap.is_none_or(|g| is_m_bounded(&q, g))
                    })
                    .collect();
                generated.sort();
                filtered.sort();
                assert_eq!(generated, filtered, "n={n} gap={gap:?}");
            }
        }
    }

    #[test]
    fn brute_force_values() {
        let inf = Threshold::Infinite;
        let cap = DEFAULT_ORACLE_CAP;
        assert_eq!(brute_force_count(2, 4, inf, inf, cap).unwrap(), BigUint::from(8u32));
        assert_eq!(brute_force_count(3, 4, inf, inf, cap).unwrap(), BigUint::from(14u32));
        let zero = Threshold::Finite(0);
        assert_eq!(brute_force_count(2, 1, zero, zero, cap).unwrap(), BigUint::from(1u32));
        assert_eq!(brute_force_count(2, 5, inf, inf, cap).unwrap(), BigUint::from(12u32));
    }

    #[test]
    fn brute_force_edge_cases() {
        let inf = Threshold::Infinite;
        assert_eq!(brute_force_count(3, 0, inf, inf, 11).unwrap(), BigUint::one());
        assert_eq!(
            brute_force_count(3, 0, Threshold::Finite(1), inf, 11),
            Err(Error::EmptyRestricted)
        );
        assert_eq!(
            brute_force_count(3, 12, inf, inf, 11),
            Err(Error::OracleCapExceeded { n: 12, cap: 11 })
        );
        assert_eq!(brute_force_count(0, 3, inf, inf, 11), Err(Error::InvalidBound));
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), BigUint::one());
        assert_eq!(catalan(4), BigUint::from(14u32));
        // 18!/(9! 9!) / 10 = 48620 / 10
        assert_eq!(catalan(9), BigUint::from(4862u32));
    }

    #[test]
    fn left_block_coefficients() {
        for p in [Threshold::Finite(0), Threshold::Finite(3), Threshold::Infinite] {
            assert_eq!(c_kp(1, p), BigUint::one());
        }
        for k in 2..8 {
            assert!(c_kp(k, Threshold::Finite(0)).is_zero());
        }
        assert_eq!(c_kp(3, Threshold::Finite(1)), BigUint::from(1u32));
        assert_eq!(c_kp(3, Threshold::Finite(2)), BigUint::from(2u32));
        assert_eq!(c_kp(3, Threshold::Infinite), BigUint::from(2u32));
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for k in 1..=9 {
            let mut prev = BigUint::zero();
            for p in (0..=k).map(Threshold::Finite).chain([Threshold::Infinite]) {
                let c = c_kp(k, p);
                assert_eq!(c, c_kp_enumerated(k, p), "k={k} p={p}");
                assert!(c >= prev);
                prev = c;
            }
            assert_eq!(c_kp(k, Threshold::Finite(k - 1)), catalan(k - 1));
        }
    }

    #[test]
    fn block_construction() {
        assert_eq!(block_construction_count(3, 8), BigUint::from(4u32));
        assert_eq!(block_construction_count(2, 2), BigUint::one());
        assert_eq!(block_construction_count(5, 0), BigUint::one());
    }

    #[test]
    fn log_of_huge_integers() {
        let big = num_traits::pow(BigUint::from(10u32), 500);
        assert!((ln_biguint(&big) - 500.0 * 10f64.ln()).abs() < 1e-9);
        assert!((ln_biguint(&BigUint::from(14u32)) - 14f64.ln()).abs() < 1e-15);
    }
}
