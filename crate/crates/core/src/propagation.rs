//! The monitored-set sequence `P^0 ⊆ P^1 ⊆ ...` of a seed set.
//!
//! `P^0 = N[S]`. In round `i`, every monitored vertex `v` with at most `k`
//! unmonitored vertices in `N[v]` monitors all of `N[v]`. Rounds are
//! synchronous: every qualifying vertex is judged against `P^i`. The
//! sequence stops at the first repeated set, `P^∞`.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Why a vertex is monitored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Cause {
    /// In `N[S]`.
    InitialDomination,
    /// First monitored in `steps[step]`, forced by `by ∈ steps[step - 1]`.
    Forced { by: usize, step: usize },
}

/// Full record of a propagation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropagationTrace {
    pub k: usize,
    pub seed: VertexSet,
    /// `steps[i] = P^i(S)`; the last two entries are equal unless there is
    /// only one.
    pub steps: Vec<VertexSet>,
    pub causes: BTreeMap<usize, Cause>,
}

impl PropagationTrace {
    pub fn fixpoint(&self) -> &VertexSet {
        self.steps.last().expect("a trace has at least one step")
    }

    /// Number of rounds that added vertices.
    pub fn rounds(&self) -> usize {
        self.steps.len().saturating_sub(2)
    }
}

/// Runs synchronous rounds to the fixed point, recording each step and the
/// least-id forcing vertex of every newly monitored vertex.
pub fn propagate(g: &Graph, k: usize, seed: &VertexSet) -> PropagationTrace {
    let mut current = g.closed_neighborhood_bits(seed);
    let mut causes: BTreeMap<usize, Cause> = current
        .ones()
        .map(|v| (v, Cause::InitialDomination))
        .collect();
    let mut steps = vec![VertexSet::from_bits(&current)];

    loop {
        let step = steps.len();
        let mut next = current.clone();
        for v in current.ones() {
            let closed = g.closed_bits(v);
            if closed.difference_count(&current) <= k {
                for w in closed.difference(&current) {
                    causes.entry(w).or_insert(Cause::Forced { by: v, step });
                }
                next.union_with(closed);
            }
        }
        let done = next == current;
        current = next;
        steps.push(VertexSet::from_bits(&current));
        if done {
            break;
        }
    }

    PropagationTrace {
        k,
        seed: seed.clone(),
        steps,
        causes,
    }
}

/// Closure of `start` under the propagation rule alone (no initial
/// domination step). With `start = N[S]` this is `P^∞(S)`.
pub fn closure_bits(g: &Graph, k: usize, start: FixedBitSet) -> FixedBitSet {
    let mut current = start;
    loop {
        let mut next = current.clone();
        for v in current.ones() {
            let closed = g.closed_bits(v);
            if closed.difference_count(&current) <= k {
                next.union_with(closed);
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// `P^∞(S)` as a bitset.
pub fn fixpoint_bits(g: &Graph, k: usize, seed: &VertexSet) -> FixedBitSet {
    closure_bits(g, k, g.closed_neighborhood_bits(seed))
}

/// `P^∞(S)`.
pub fn monitored_fixpoint(g: &Graph, k: usize, seed: &VertexSet) -> VertexSet {
    VertexSet::from_bits(&fixpoint_bits(g, k, seed))
}

/// True iff `seed` is a `k`-power dominating set of `g`.
pub fn is_kpds(g: &Graph, k: usize, seed: &VertexSet) -> bool {
    fixpoint_bits(g, k, seed).count_ones(..) == g.order()
}

/// One-force-at-a-time scheduler.
///
/// Starting from `N[S]`, repeatedly lets `pick` choose one vertex among the
/// currently qualifying forcers (ascending ids, each with between 1 and `k`
/// unmonitored closed neighbors) and monitors its closed neighborhood. Used
/// as a reference against the synchronous engine: the fixed point does not
/// depend on the order of forces.
pub fn propagate_sequential<F>(g: &Graph, k: usize, seed: &VertexSet, mut pick: F) -> VertexSet
where
    F: FnMut(&[usize]) -> usize,
{
    let mut monitored = g.closed_neighborhood_bits(seed);
    loop {
        let ready: Vec<usize> = monitored
            .ones()
            .filter(|&v| {
                let missing = g.closed_bits(v).difference_count(&monitored);
                (1..=k).contains(&missing)
            })
            .collect();
        if ready.is_empty() {
            return VertexSet::from_bits(&monitored);
        }
        let v = ready[pick(&ready) % ready.len()];
        monitored.union_with(g.closed_bits(v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn forced_chain_on_a_path() {
        let trace = propagate(&Graph::path(4), 1, &[0].into());
        assert_eq!(
            trace.steps,
            vec![
                VertexSet::from([0, 1]),
                [0, 1, 2].into(),
                [0, 1, 2, 3].into(),
                [0, 1, 2, 3].into()
            ]
        );
        assert_eq!(trace.causes[&2], Cause::Forced { by: 1, step: 1 });
        assert_eq!(trace.causes[&3], Cause::Forced { by: 2, step: 2 });
        assert_eq!(trace.causes[&0], Cause::InitialDomination);
        assert_eq!(trace.rounds(), 2);
    }

    #[test]
    fn complete_graph_is_fixed_immediately() {
        let trace = propagate(&Graph::complete(4), 1, &[0].into());
        assert_eq!(trace.steps.len(), 2);
        assert_eq!(trace.fixpoint().len(), 4);
    }

    #[test]
    fn causes_break_ties_by_least_forcer() {
        // Star with center 0 and leaves 1..3, and 1-4, 2-4; seed {4} monitors
        // {1,2,4}, then 1 and 2 both see only 0 missing (k=1).
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4)]).unwrap();
        let trace = propagate(&g, 1, &[4].into());
        assert_eq!(trace.causes[&0], Cause::Forced { by: 1, step: 1 });
    }

    #[test]
    fn fixpoint_projections() {
        let g = Graph::cycle(6);
        assert!(monitored_fixpoint(&g, 1, &VertexSet::new()).is_empty());
        assert_eq!(
            monitored_fixpoint(&g, 1, &g.all_vertices()),
            g.all_vertices()
        );
        assert!(is_kpds(&g, 1, &[3].into()));
        assert!(!is_kpds(&g, 0, &[3].into()));
        assert!(is_kpds(&g, 0, &g.all_vertices()));
    }

    #[test]
    fn k_zero_is_classical_power_domination_rule() {
        // k = 0 only lets a vertex spread if its whole closed neighborhood is
        // already monitored, which adds nothing.
        let g = Graph::path(5);
        assert_eq!(monitored_fixpoint(&g, 0, &[0].into()), [0, 1].into());
    }

    #[test]
    fn regular_connected_graph_with_degree_k_plus_one() {
        let c4 = Graph::cycle(4);
        for v in 0..4 {
            assert!(is_kpds(&c4, 1, &[v].into()));
        }
        let k5 = Graph::complete(5);
        assert!(is_kpds(&k5, 3, &[2].into()));
    }

    #[test]
    fn paired_block_ends_dominate_drq() {
        let d = families::gen_drq(4, 2).unwrap();
        let seed: VertexSet = ["x_1", "y_1", "x_2", "y_2"]
            .iter()
            .map(|l| d.id(l))
            .collect();
        assert!(is_kpds(&d.graph, 1, &seed));
    }

    #[test]
    fn no_three_vertices_suffice_for_drq() {
        let g = families::gen_drq(4, 2).unwrap().graph;
        let n = g.order();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    assert!(!is_kpds(&g, 1, &[a, b, c].into()));
                }
            }
        }
    }

    #[test]
    fn single_hub_cannot_finish_godd() {
        let lg = families::gen_godd(5, 1).unwrap();
        let hub = lg.id("u_1^1");
        let reached = monitored_fixpoint(&lg.graph, 1, &[hub].into());
        assert!(reached.len() < lg.graph.order());
        let missing = lg.graph.all_vertices().difference(&reached);
        let expected: VertexSet = ["a_0^1", "a_0^2", "b_1^1", "b_1^2"]
            .iter()
            .map(|l| lg.id(l))
            .collect();
        assert_eq!(missing, expected);
    }

    #[test]
    fn trace_serializes_with_fixed_field_names() {
        let trace = propagate(&Graph::path(3), 1, &[0].into());
        let json = serde_json::to_value(&trace).unwrap();
        assert_eq!(json["k"], 1);
        assert_eq!(json["seed"], serde_json::json!([0]));
        assert_eq!(json["steps"][0], serde_json::json!([0, 1]));
        assert_eq!(
            json["causes"]["2"],
            serde_json::json!({"type": "forced", "by": 1, "step": 1})
        );
        assert_eq!(
            json["causes"]["0"],
            serde_json::json!({"type": "initial_domination"})
        );
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                let m = n * (n - 1) / 2;
                proptest::collection::vec(proptest::bool::weighted(0.3), m).prop_map(move |bits| {
                    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                    let edges: Vec<_> = pairs
                        .zip(bits)
                        .filter(|(_, b)| *b)
                        .map(|(e, _)| e)
                        .collect();
                    Graph::new(n, &edges).unwrap()
                })
            })
        }

        fn arb_case() -> impl Strategy<Value = (Graph, usize, VertexSet, VertexSet)> {
            (arb_graph(12), 0usize..4).prop_flat_map(|(g, k)| {
                let n = g.order();
                (
                    Just(g),
                    Just(k),
                    proptest::collection::btree_set(0..n, 0..=3),
                    proptest::collection::btree_set(0..n, 0..=3),
                )
                    .prop_map(|(g, k, a, b)| {
                        let small: VertexSet = a.iter().copied().collect();
                        let big = small.union(&b.into_iter().collect());
                        (g, k, small, big)
                    })
            })
        }

        proptest! {
            #[test]
            fn trace_invariants((g, k, seed, _) in arb_case()) {
                let trace = propagate(&g, k, &seed);
                prop_assert_eq!(&trace.steps[0], &g.closed_neighborhood(&seed));
                let last = trace.steps.len() - 1;
                for i in 0..last {
                    prop_assert!(trace.steps[i].is_subset(&trace.steps[i + 1]));
                    if i + 1 < last {
                        prop_assert!(trace.steps[i] != trace.steps[i + 1]);
                    }
                    let before = trace.steps[i].to_bits(g.order());
                    for w in trace.steps[i + 1].difference(&trace.steps[i]).iter() {
                        match trace.causes[&w] {
                            Cause::Forced { by, step } => {
                                prop_assert_eq!(step, i + 1);
                                prop_assert!(before.contains(by));
                                prop_assert!(g.closed_bits(by).difference_count(&before) <= k);
                                prop_assert!(g.has_edge(by, w));
                            }
                            Cause::InitialDomination => prop_assert!(false, "forced vertex marked initial"),
                        }
                    }
                }
                if last > 0 {
                    prop_assert_eq!(&trace.steps[last], &trace.steps[last - 1]);
                }
                prop_assert_eq!(trace.fixpoint(), &monitored_fixpoint(&g, k, &seed));
            }

            #[test]
            fn monotone_in_seed_and_k((g, k, small, big) in arb_case()) {
                let p_small = monitored_fixpoint(&g, k, &small);
                prop_assert!(p_small.is_subset(&monitored_fixpoint(&g, k, &big)));
                prop_assert!(p_small.is_subset(&monitored_fixpoint(&g, k + 1, &small)));
            }

            #[test]
            fn fixpoint_is_stable((g, k, seed, _) in arb_case()) {
                let p = monitored_fixpoint(&g, k, &seed);
                let again = propagate(&g, k, &p);
                // N[P^∞] can exceed P^∞ only by vertices adjacent to it; the
                // stability statement is about the forcing closure.
                let closed = closure_bits(&g, k, p.to_bits(g.order()));
                prop_assert_eq!(VertexSet::from_bits(&closed), p.clone());
                prop_assert!(p.is_subset(again.fixpoint()));
            }

            #[test]
            fn sequential_order_does_not_matter((g, k, seed, _) in arb_case(), choices in proptest::collection::vec(any::<usize>(), 64)) {
                let mut it = choices.into_iter().cycle();
                let seq = propagate_sequential(&g, k, &seed, |_| it.next().unwrap());
                prop_assert_eq!(seq, monitored_fixpoint(&g, k, &seed));
            }
        }
    }
}
