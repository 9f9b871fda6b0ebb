use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};

/// Components of the graph on `0..n` with adjacency `succ`, listed so that
/// every component comes after all components with an edge into it. Members
/// are sorted.
pub fn components(n: usize, succ: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, succ.iter().map(Vec::len).sum());
    for _ in 0..n {
        g.add_node(());
    }
    for (u, vs) in succ.iter().enumerate() {
        for &v in vs {
            g.add_edge(NodeIndex::new(u), NodeIndex::new(v), ());
        }
    }
    // kosaraju_scc lists sinks first
    kosaraju_scc(&g)
        .into_iter()
        .rev()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(NodeIndex::index).collect();
            c.sort_unstable();
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_and_a_bridge() {
        // 0 <-> 1 -> 2 <-> 3, 4 isolated with a self loop
        let succ = vec![vec![1], vec![0, 2], vec![3], vec![2], vec![4]];
        let comps = components(5, &succ);
        assert_eq!(comps.len(), 3);
        let pos = |v: usize| comps.iter().position(|c| c.contains(&v)).unwrap();
        assert!(pos(0) < pos(2));
        assert_eq!(comps[pos(0)], vec![0, 1]);
        assert_eq!(comps[pos(3)], vec![2, 3]);
    }

    #[test]
    fn long_chain_does_not_recurse() {
        let n = 100_000;
        let succ: Vec<Vec<usize>> = (0..n).map(|i| if i + 1 < n { vec![i + 1] } else { vec![] }).collect();
        let comps = components(n, &succ);
        assert_eq!(comps.len(), n);
        assert_eq!(comps[0], vec![0]);
    }
}
