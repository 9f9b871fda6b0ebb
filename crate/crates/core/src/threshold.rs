//! Endpoint thresholds and the state pairs they form.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// An upper bound on an endpoint deficiency `n - π_1` or `n - π_n`.
///
/// `Infinite` is the vacuous bound. The derived order puts every finite value
/// before `Infinite`, which is the canonical state order used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Threshold {
    Finite(u32),
    Infinite,
}

impl Threshold {
    /// Lowers the bound by `r`; `None` when a finite bound would go negative.
    /// `∞ - r = ∞`.
    pub fn lowered(self, r: u32) -> Option<Threshold> {
        match self {
            Threshold::Infinite => Some(Threshold::Infinite),
            Threshold::Finite(u) => u.checked_sub(r).map(Threshold::Finite),
        }
    }

    /// Whether a deficiency `d` satisfies this bound.
    pub fn admits(self, d: u32) -> bool {
        match self {
            Threshold::Infinite => true,
            Threshold::Finite(u) => d <= u,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Threshold::Finite(_))
    }

    /// The elements `0, 1, .., m-1, ∞` of `B_m` in canonical order.
    pub fn all(m: u32) -> impl Iterator<Item = Threshold> {
        (0..m).map(Threshold::Finite).chain(std::iter::once(Threshold::Infinite))
    }

    /// Position of this threshold in [`Threshold::all`].
    pub fn index(self, m: u32) -> usize {
        match self {
            Threshold::Finite(u) => u as usize,
            Threshold::Infinite => m as usize,
        }
    }

    pub fn in_range(self, m: u32) -> bool {
        match self {
            Threshold::Finite(u) => u < m,
            Threshold::Infinite => true,
        }
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Threshold::Finite(u) => write!(f, "{u}"),
            Threshold::Infinite => f.write_str("inf"),
        }
    }
}

/// A pair `(p, q)` of first and last endpoint thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StatePair {
    pub p: Threshold,
    pub q: Threshold,
}

impl StatePair {
    pub const OUTPUT: StatePair = StatePair {
        p: Threshold::Infinite,
        q: Threshold::Infinite,
    };

    pub fn new(p: Threshold, q: Threshold) -> Self {
        StatePair { p, q }
    }

    pub fn finite(p: u32, q: u32) -> Self {
        StatePair::new(Threshold::Finite(p), Threshold::Finite(q))
    }

    /// All `(m+1)^2` states in canonical (lexicographic) order.
    pub fn all(m: u32) -> Vec<StatePair> {
        Threshold::all(m)
            .flat_map(|p| Threshold::all(m).map(move |q| StatePair { p, q }))
            .collect()
    }

    /// Index of this state in [`StatePair::all`].
    pub fn index(self, m: u32) -> usize {
        self.p.index(m) * (m as usize + 1) + self.q.index(m)
    }
}

impl Ord for StatePair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.q).cmp(&(other.p, other.q))
    }
}

impl PartialOrd for StatePair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for StatePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowering_follows_the_infinity_convention() {
        assert_eq!(Threshold::Infinite.lowered(5), Some(Threshold::Infinite));
        assert_eq!(Threshold::Finite(2).lowered(2), Some(Threshold::Finite(0)));
        assert_eq!(Threshold::Finite(1).lowered(2), None);
    }

    #[test]
    fn canonical_order_puts_infinity_last() {
        let states = StatePair::all(2);
        assert_eq!(states.len(), 9);
        assert_eq!(states[0], StatePair::finite(0, 0));
        assert_eq!(states[8], StatePair::OUTPUT);
        for (i, s) in states.iter().enumerate() {
            assert_eq!(s.index(2), i);
        }
        let mut sorted = states.clone();
        sorted.sort();
        assert_eq!(sorted, states);
    }
}
