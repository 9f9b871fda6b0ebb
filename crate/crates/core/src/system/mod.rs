//! The endpoint-state system `F = x·1 + W(x) F`, its dependency graph, and
//! the strongly connected components that make it block triangular.
//!
//! States are pairs `(p, q)` of thresholds in `B_m = {0, .., m-1, ∞}`. The
//! equation for target `(p, q)` draws on
//!
//! * a `k`-split edge from `(m-k, q-k)` with monomial `c_{k,p} x^k`
//!   (maximum at position `k`, nonempty right block), for `1 <= k <= m`;
//! * an append edge from `(p-1, m-1)` with monomial `x` (maximum last).
//!
//! Sources with a negative finite threshold, and split edges with
//! `c_{k,p} = 0`, are dropped. Edges point from the source (right-hand side)
//! to the target (the state being computed).

mod dot;
mod scc;

pub use dot::to_dot;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::combinatorics::c_kp_table;
use crate::error::{Error, Result};
use crate::poly::{ExactPoly, PolyMatrix};
use crate::threshold::{StatePair, Threshold};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeKind {
    /// Maximum at position `k` with a nonempty right block.
    Split { k: u32 },
    /// Maximum appended at the end.
    Append,
}

/// A monomial entry `coeff · x^weight` of `W`, as the edge `source -> target`.
#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
    pub weight: u32,
    pub coeff: BigUint,
    pub coeff_f64: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ComponentTag {
    /// `{(p, ∞) : 0 <= p <= m-1}`
    U,
    /// finite pairs with `q < p`, plus `(p, m-1)` for `p <= m-2`
    V,
    /// the self-loop state `(∞, m-1)`
    I,
    AcyclicSingleton,
    /// cyclic component for `m = 1`, where the classification does not apply
    Untagged,
}

impl fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ComponentTag::U => "U",
            ComponentTag::V => "V",
            ComponentTag::I => "I",
            ComponentTag::AcyclicSingleton => "acyclic",
            ComponentTag::Untagged => "untagged",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentInfo {
    /// Position in topological order.
    pub id: usize,
    pub tag: ComponentTag,
    /// Member state indices, ascending (canonical order).
    pub members: Vec<usize>,
    pub cyclic: bool,
    /// `None` for acyclic components.
    pub weighted_period: Option<u64>,
}

impl ComponentInfo {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The full endpoint-state system for one `m`. Immutable once built.
#[derive(Clone, Debug)]
pub struct StateSystem {
    m: u32,
    states: Vec<StatePair>,
    edges: Vec<Edge>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    components: Vec<ComponentInfo>,
    component_of: Vec<usize>,
}

impl StateSystem {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn states(&self) -> &[StatePair] {
        &self.states
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Indices into [`StateSystem::edges`] whose target is `state`.
    pub fn incoming(&self, state: usize) -> &[usize] {
        &self.incoming[state]
    }

    pub fn outgoing(&self, state: usize) -> &[usize] {
        &self.outgoing[state]
    }

    /// Components in topological order: dependencies before dependents.
    pub fn components(&self) -> &[ComponentInfo] {
        &self.components
    }

    pub fn component_of(&self, state: usize) -> &ComponentInfo {
        &self.components[self.component_of[state]]
    }

    pub fn index_of(&self, s: StatePair) -> Option<usize> {
        (s.p.in_range(self.m) && s.q.in_range(self.m)).then(|| s.index(self.m))
    }

    /// Index of `(∞, ∞)`.
    pub fn output_state(&self) -> usize {
        StatePair::OUTPUT.index(self.m)
    }

    pub fn component_by_tag(&self, tag: ComponentTag) -> Option<&ComponentInfo> {
        self.components.iter().find(|c| c.tag == tag)
    }

    pub fn cyclic_components(&self) -> impl Iterator<Item = &ComponentInfo> {
        self.components.iter().filter(|c| c.cyclic)
    }

    /// The entry `W_{target, source}(x)`.
    pub fn entry(&self, target: usize, source: usize) -> ExactPoly {
        self.incoming[target]
            .iter()
            .map(|&e| &self.edges[e])
            .filter(|e| e.source == source)
            .fold(ExactPoly::zero(), |acc, e| &acc + &e.monomial())
    }

    /// `W(x)` as a dense matrix, rows = targets, columns = sources.
    pub fn w_matrix(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(self.states.len());
        for e in &self.edges {
            m.rows[e.target][e.source] = &m.rows[e.target][e.source] + &e.monomial();
        }
        m
    }
}

impl Edge {
    pub fn monomial(&self) -> ExactPoly {
        ExactPoly::monomial(BigRational::from_integer(self.coeff.clone().into()), self.weight as usize)
    }
}

/// Builds `W_m(x)` and its dependency graph and classifies the components.
pub fn build_system(m: u32) -> Result<StateSystem> {
    if m == 0 {
        return Err(Error::InvalidBound);
    }
    let states = StatePair::all(m);
    let n = states.len();
    let left = c_kp_table(m);

    let mut edges = Vec::new();
    for (target, s) in states.iter().enumerate() {
        for k in 1..=m {
            let coeff = &left[k as usize - 1][s.p.index(m)];
            if coeff.bits() == 0 {
                continue;
            }
            let Some(q) = s.q.lowered(k) else { continue };
            let source = StatePair::new(Threshold::Finite(m - k), q).index(m);
            edges.push(Edge {
                source,
                target,
                kind: EdgeKind::Split { k },
                weight: k,
                coeff: coeff.clone(),
                coeff_f64: coeff.to_f64().unwrap_or(f64::INFINITY),
            });
        }
        if let Some(p) = s.p.lowered(1) {
            let source = StatePair::new(p, Threshold::Finite(m - 1)).index(m);
            edges.push(Edge {
                source,
                target,
                kind: EdgeKind::Append,
                weight: 1,
                coeff: BigUint::from(1u32),
                coeff_f64: 1.0,
            });
        }
    }

    let mut incoming = vec![Vec::new(); n];
    let mut outgoing = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        incoming[e.target].push(i);
        outgoing[e.source].push(i);
    }

    let mut sys = StateSystem {
        m,
        states,
        edges,
        incoming,
        outgoing,
        components: Vec::new(),
        component_of: vec![0; n],
    };
    let components = scc_decompose(&sys)?;
    for c in &components {
        for &s in &c.members {
            sys.component_of[s] = c.id;
        }
    }
    sys.components = components;
    Ok(sys)
}

fn expected_members(m: u32, tag: ComponentTag) -> BTreeSet<StatePair> {
    let fin = Threshold::Finite;
    match tag {
        ComponentTag::U => (0..m).map(|p| StatePair::new(fin(p), Threshold::Infinite)).collect(),
        ComponentTag::V => {
            let mut v: BTreeSet<StatePair> = (0..m).flat_map(|p| (0..p).map(move |q| StatePair::finite(p, q))).collect();
            v.extend((0..m.saturating_sub(1)).map(|p| StatePair::finite(p, m - 1)));
            v
        }
        ComponentTag::I => BTreeSet::from([StatePair::new(Threshold::Infinite, fin(m - 1))]),
        _ => BTreeSet::new(),
    }
}

/// Expected size of `V_m`, `(m-1)(m+2)/2`.
pub fn v_size(m: u32) -> usize {
    ((m as usize - 1) * (m as usize + 2)) / 2
}

/// Strongly connected components in topological order, each classified as
/// `U`, `V`, `I` or an acyclic singleton (for `m >= 2`). A cyclic component
/// matching none of the three is reported as a classification error.
pub fn scc_decompose(sys: &StateSystem) -> Result<Vec<ComponentInfo>> {
    let n = sys.states.len();
    let succ: Vec<Vec<usize>> = (0..n)
        .map(|s| {
            let mut v: Vec<usize> = sys.outgoing[s].iter().map(|&e| sys.edges[e].target).collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    let raw = scc::components(n, &succ);

    let mut out = Vec::with_capacity(raw.len());
    for (id, members) in raw.into_iter().enumerate() {
        let cyclic = members.len() > 1 || succ[members[0]].contains(&members[0]);
        let tag = if !cyclic {
            ComponentTag::AcyclicSingleton
        } else if sys.m == 1 {
            ComponentTag::Untagged
        } else {
            let set: BTreeSet<StatePair> = members.iter().map(|&s| sys.states[s]).collect();
            [ComponentTag::U, ComponentTag::V, ComponentTag::I]
                .into_iter()
                .find(|&t| expected_members(sys.m, t) == set)
                .ok_or_else(|| {
                    let names: Vec<String> = set.iter().map(ToString::to_string).collect();
                    Error::Classification(format!("unexpected cyclic component {{{}}}", names.join(", ")))
                })?
        };
        let mut info = ComponentInfo {
            id,
            tag,
            members,
            cyclic,
            weighted_period: None,
        };
        if cyclic {
            info.weighted_period = Some(period_of(sys, &info));
        }
        out.push(info);
    }
    if sys.m >= 2 {
        let cyclic = out.iter().filter(|c| c.cyclic).count();
        if cyclic != 3 {
            return Err(Error::Classification(format!("expected 3 cyclic components, found {cyclic}")));
        }
    }
    Ok(out)
}

fn period_of(sys: &StateSystem, c: &ComponentInfo) -> u64 {
    let inside = |s: usize| c.members.binary_search(&s).is_ok();
    let root = c.members[0];
    let mut pot: Vec<Option<i64>> = vec![None; sys.states.len()];
    pot[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        let pu = pot[u].unwrap();
        for &e in &sys.outgoing[u] {
            let e = &sys.edges[e];
            if inside(e.target) && pot[e.target].is_none() {
                pot[e.target] = Some(pu + e.weight as i64);
                queue.push_back(e.target);
            }
        }
    }
    let mut g = 0u64;
    for &u in &c.members {
        for &e in &sys.outgoing[u] {
            let e = &sys.edges[e];
            if inside(e.target) {
                let slack = pot[u].unwrap() + e.weight as i64 - pot[e.target].unwrap();
                g = g.gcd(&slack.unsigned_abs());
            }
        }
    }
    g
}

/// gcd of the total weights of closed walks in a cyclic component, from
/// potentials along a BFS tree: `gcd |pot(u) + w - pot(v)|` over all edges.
pub fn weighted_period(sys: &StateSystem, c: &ComponentInfo) -> Result<u64> {
    if !c.cyclic {
        return Err(Error::AcyclicComponent(c.id));
    }
    Ok(period_of(sys, c))
}

/// Whether some member of `c` reaches `(∞, ∞)`.
pub fn output_accessible(sys: &StateSystem, c: &ComponentInfo) -> bool {
    let target = sys.output_state();
    let mut seen = vec![false; sys.states.len()];
    let mut queue: VecDeque<usize> = c.members.iter().copied().collect();
    for &s in &c.members {
        seen[s] = true;
    }
    while let Some(u) = queue.pop_front() {
        if u == target {
            return true;
        }
        for &e in &sys.outgoing[u] {
            let v = sys.edges[e].target;
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    false
}

/// One monomial of a component matrix, in local (row, column) coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub row: usize,
    pub col: usize,
    pub coeff: BigUint,
    pub coeff_f64: f64,
    pub degree: u32,
}

/// Principal submatrix `W_C(x)` of `W` on the members of a component, kept
/// as a list of monomials. Rows and columns follow the canonical member order.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentMatrix {
    pub members: Vec<StatePair>,
    pub terms: Vec<Term>,
}

impl ComponentMatrix {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(self.size());
        for t in &self.terms {
            let mono = ExactPoly::monomial(BigRational::from_integer(t.coeff.clone().into()), t.degree as usize);
            m.rows[t.row][t.col] = &m.rows[t.row][t.col] + &mono;
        }
        m
    }

    /// `det(I - W_C(x))`.
    pub fn characteristic_determinant(&self) -> ExactPoly {
        self.to_poly_matrix().identity_minus().determinant()
    }
}

pub fn component_matrix(sys: &StateSystem, c: &ComponentInfo) -> ComponentMatrix {
    let local = |s: usize| c.members.binary_search(&s).ok();
    let mut terms = Vec::new();
    for (row, &t) in c.members.iter().enumerate() {
        for &e in &sys.incoming[t] {
            let e = &sys.edges[e];
            if let Some(col) = local(e.source) {
                terms.push(Term {
                    row,
                    col,
                    coeff: e.coeff.clone(),
                    coeff_f64: e.coeff_f64,
                    degree: e.weight,
                });
            }
        }
    }
    ComponentMatrix {
        members: c.members.iter().map(|&s| sys.states[s]).collect(),
        terms,
    }
}
