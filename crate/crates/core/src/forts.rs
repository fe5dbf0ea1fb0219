//! `k`-forts and L-configurations.
//!
//! A `k`-fort is a nonempty set `F` such that every vertex of `N(F) \ F`
//! has at least `k + 1` neighbors in `F`. Propagation can never enter a fort
//! from outside, so every `k`-power dominating set meets `N[F]`.
//!
//! Equivalently, `F` is a fort iff `V \ F` is closed under the propagation
//! rule. That makes "largest fort inside `X`" a single closure computation,
//! which the minimal-fort search is built on.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::propagation::closure_bits;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FortError {
    #[error("a fort must be nonempty")]
    Empty,
    #[error(
        "boundary vertex {vertex} has {inside} neighbors in the set, needs at least {required}"
    )]
    Violation {
        vertex: usize,
        inside: usize,
        required: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FortCertificate {
    pub k: usize,
    pub fort: VertexSet,
    /// `N(F) \ F`.
    pub boundary: VertexSet,
}

impl FortCertificate {
    /// `N[F]`, the region every `k`-PDS must hit.
    pub fn closed_neighborhood(&self) -> VertexSet {
        self.fort.union(&self.boundary)
    }
}

pub fn verify_fort(g: &Graph, k: usize, f: &VertexSet) -> Result<FortCertificate, FortError> {
    if f.is_empty() {
        return Err(FortError::Empty);
    }
    let boundary = g.boundary(f);
    for v in boundary.iter() {
        let inside = g.neighbors(v).iter().filter(|&&w| f.contains(w)).count();
        if inside <= k {
            return Err(FortError::Violation {
                vertex: v,
                inside,
                required: k + 1,
            });
        }
    }
    Ok(FortCertificate {
        k,
        fort: f.clone(),
        boundary,
    })
}

/// Largest `k`-fort contained in `x` (the union of all of them), possibly
/// empty.
fn largest_fort_within(g: &Graph, k: usize, x: &FixedBitSet) -> FixedBitSet {
    let mut outside = x.clone();
    outside.toggle_range(..);
    let mut closed = closure_bits(g, k, outside);
    closed.toggle_range(..);
    closed
}

/// Shrinks a fort to an inclusion-minimal one, dropping vertices in
/// ascending order. If `keep` is given, removals that would lose it are
/// skipped in the first pass.
fn shrink(g: &Graph, k: usize, mut fort: FixedBitSet, keep: Option<usize>) -> FixedBitSet {
    let mut passes = vec![keep];
    if keep.is_some() {
        passes.push(None);
    }
    for keep in passes {
        loop {
            let mut changed = false;
            for v in fort.ones().collect::<Vec<_>>() {
                if Some(v) == keep || !fort.contains(v) {
                    continue;
                }
                let mut without = fort.clone();
                without.set(v, false);
                let inner = largest_fort_within(g, k, &without);
                let acceptable = match keep {
                    Some(u) => inner.contains(u),
                    None => !inner.is_clear(),
                };
                if acceptable {
                    fort = inner;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
    }
    fort
}

/// Up to `max_count` inclusion-minimal `k`-forts, sorted by member list.
///
/// For every vertex `v` the whole vertex set (always a fort) is shrunk
/// first while keeping `v` and then without restriction, giving one minimal
/// fort per start vertex; duplicates are merged.
pub fn find_minimal_forts(g: &Graph, k: usize, max_count: usize) -> Vec<FortCertificate> {
    let n = g.order();
    let mut found: Vec<VertexSet> = Vec::new();
    let mut full = FixedBitSet::with_capacity(n);
    full.insert_range(..);
    for v in 0..n {
        // Skip start vertices already inside a discovered fort; the shrink
        // would very likely rediscover it.
        if found.iter().any(|f| f.contains(v)) {
            continue;
        }
        let fort = shrink(g, k, full.clone(), Some(v));
        let fort = VertexSet::from_bits(&fort);
        if !found.contains(&fort) {
            found.push(fort);
        }
    }
    found.sort();
    found
        .into_iter()
        .take(max_count)
        .map(|f| verify_fort(g, k, &f).expect("shrink preserves the fort property"))
        .collect()
}

/// Indices of a maximum subfamily of `forts` whose closed neighborhoods are
/// pairwise disjoint (exact, by branch and bound). Ties go to the
/// lexicographically least index list.
pub fn disjoint_fort_family(g: &Graph, forts: &[FortCertificate]) -> Vec<usize> {
    let regions: Vec<FixedBitSet> = forts
        .iter()
        .map(|f| f.closed_neighborhood().to_bits(g.order()))
        .collect();
    let m = regions.len();
    let conflicts: Vec<Vec<bool>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| i != j && !regions[i].is_disjoint(&regions[j]))
                .collect()
        })
        .collect();

    fn search(
        conflicts: &[Vec<bool>],
        candidates: &[usize],
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if chosen.len() + candidates.len() <= best.len() {
            return;
        }
        for (pos, &i) in candidates.iter().enumerate() {
            if chosen.len() + candidates.len() - pos <= best.len() {
                return;
            }
            let rest: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&j| !conflicts[i][j])
                .collect();
            chosen.push(i);
            search(conflicts, &rest, chosen, best);
            chosen.pop();
        }
    }

    let mut best = Vec::new();
    let all: Vec<usize> = (0..m).collect();
    search(&conflicts, &all, &mut Vec::new(), &mut best);
    best
}

/// Lower bound on the `k`-power domination number: the largest number of
/// the given forts with pairwise disjoint closed neighborhoods.
pub fn fort_hitting_lower_bound(g: &Graph, forts: &[FortCertificate]) -> usize {
    disjoint_fort_family(g, forts).len()
}

/// A clique that is also a `k`-fort, together with `N[L]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LConfiguration {
    pub k: usize,
    pub l_set: VertexSet,
    pub span: VertexSet,
}

/// Result of an L-configuration search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LConfigSearch {
    /// One configuration per distinct span, keeping the lexicographically
    /// least `l_set`; sorted by `l_set`.
    pub configs: Vec<LConfiguration>,
    /// True if clique enumeration stopped at the cap, so the list may be
    /// incomplete.
    pub cap_hit: bool,
}

pub const DEFAULT_CLIQUE_CAP: usize = 1 << 20;

pub fn find_l_configurations(g: &Graph, k: usize) -> LConfigSearch {
    find_l_configurations_capped(g, k, DEFAULT_CLIQUE_CAP)
}

/// Enumerates every clique (each exactly once, from its least member,
/// extending only inside the common neighborhood) and keeps those of size
/// at least `k + 1` that are `k`-forts. At most `clique_cap` cliques are
/// examined.
pub fn find_l_configurations_capped(g: &Graph, k: usize, clique_cap: usize) -> LConfigSearch {
    struct State<'a> {
        g: &'a Graph,
        k: usize,
        budget: usize,
        cap_hit: bool,
        by_span: BTreeMap<VertexSet, VertexSet>,
    }

    fn extend(st: &mut State<'_>, clique: &mut Vec<usize>, candidates: &[usize]) {
        if st.budget == 0 {
            st.cap_hit = true;
            return;
        }
        st.budget -= 1;
        if clique.len() > st.k {
            let l_set = VertexSet::from(clique.clone());
            if verify_fort(st.g, st.k, &l_set).is_ok() {
                let span = st.g.closed_neighborhood(&l_set);
                st.by_span
                    .entry(span)
                    .and_modify(|best| {
                        if l_set < *best {
                            *best = l_set.clone();
                        }
                    })
                    .or_insert(l_set);
            }
        }
        for (pos, &v) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[pos + 1..]
                .iter()
                .copied()
                .filter(|&w| st.g.has_edge(v, w))
                .collect();
            clique.push(v);
            extend(st, clique, &next);
            clique.pop();
            if st.cap_hit {
                return;
            }
        }
    }

    let mut st = State {
        g,
        k,
        budget: clique_cap,
        cap_hit: false,
        by_span: BTreeMap::new(),
    };
    for v in 0..g.order() {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w > v).collect();
        extend(&mut st, &mut vec![v], &later);
        if st.cap_hit {
            break;
        }
    }

    let mut configs: Vec<LConfiguration> = st
        .by_span
        .into_iter()
        .map(|(span, l_set)| LConfiguration { k, l_set, span })
        .collect();
    configs.sort_by(|a, b| a.l_set.cmp(&b.l_set));
    LConfigSearch {
        configs,
        cap_hit: st.cap_hit,
    }
}

/// True iff, after merging configurations with equal spans, all spans are
/// pairwise disjoint.
pub fn configuration_span_disjointness(configs: &[LConfiguration]) -> bool {
    let mut spans: Vec<&VertexSet> = configs.iter().map(|c| &c.span).collect();
    spans.sort();
    spans.dedup();
    spans
        .iter()
        .enumerate()
        .all(|(i, a)| spans[i + 1..].iter().all(|b| a.is_disjoint(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn brute_force_forts(g: &Graph, k: usize) -> Vec<VertexSet> {
        let n = g.order();
        (1u32..1 << n)
            .map(|mask| {
                (0..n)
                    .filter(|&v| mask >> v & 1 == 1)
                    .collect::<VertexSet>()
            })
            .filter(|f| {
                (0..n)
                    .filter(|v| !f.contains(*v) && g.neighbors(*v).iter().any(|&w| f.contains(w)))
                    .all(|v| g.neighbors(v).iter().filter(|&&w| f.contains(w)).count() > k)
            })
            .collect()
    }

    #[test]
    fn drq_side_minus_x_is_a_fort() {
        let d = families::gen_drq(4, 2).unwrap();
        let f = d.ids(["X_1^2", "X_1^3", "X_1^4"]);
        let cert = verify_fort(&d.graph, 1, &f).unwrap();
        let y_side = d.ids(["y_1", "Y_1^2", "Y_1^3", "Y_1^4"]);
        assert_eq!(cert.boundary, y_side);
    }

    #[test]
    fn godd_last_a_block_is_a_fort() {
        let g = families::gen_godd(5, 1).unwrap();
        let f = g.ids(["a_1^1", "a_1^2"]);
        assert!(verify_fort(&g.graph, 1, &f).is_ok());
    }

    #[test]
    fn violations_name_a_boundary_vertex() {
        let err = verify_fort(&Graph::complete(4), 3, &[0].into()).unwrap_err();
        assert_eq!(
            err,
            FortError::Violation {
                vertex: 1,
                inside: 1,
                required: 4
            }
        );
        assert_eq!(
            verify_fort(&Graph::complete(4), 1, &VertexSet::new()),
            Err(FortError::Empty)
        );
    }

    #[test]
    fn minimal_forts_on_small_graphs() {
        let c4 = Graph::cycle(4);
        let forts = find_minimal_forts(&c4, 1, 10);
        let sets: Vec<_> = forts.iter().map(|f| f.fort.clone()).collect();
        assert_eq!(sets, vec![VertexSet::from([0, 2]), [1, 3].into()]);

        let k3 = Graph::complete(3);
        let forts = find_minimal_forts(&k3, 2, 10);
        assert_eq!(forts.len(), 1);
        assert_eq!(forts[0].fort, k3.all_vertices());
        assert!(forts[0].boundary.is_empty());
    }

    #[test]
    fn minimal_forts_are_minimal_against_brute_force() {
        let graphs = [
            Graph::cycle(5),
            Graph::path(5),
            families::gen_h0q(1).unwrap().graph,
            families::gen_aj(2, 2).unwrap().graph,
            families::gen_f0q(2).unwrap().graph,
        ];
        for g in &graphs {
            for k in 1..=2 {
                let all = brute_force_forts(g, k);
                let minimal: Vec<_> = all
                    .iter()
                    .filter(|f| !all.iter().any(|h| h != *f && h.is_subset(f)))
                    .collect();
                for cert in find_minimal_forts(g, k, usize::MAX) {
                    assert!(minimal.contains(&&cert.fort), "{:?} not minimal", cert.fort);
                }
                assert!(!minimal.is_empty());
            }
        }
    }

    #[test]
    fn every_copy_of_ckt_holds_a_fort() {
        let c = families::gen_ckt(2, 2, 2).unwrap();
        let forts = find_minimal_forts(&c.graph, 2, 64);
        for copy in 0..2 {
            let range: VertexSet = (copy * 6..copy * 6 + 6).collect();
            assert!(forts.iter().any(|f| f.fort.is_subset(&range)));
        }
    }

    #[test]
    fn hitting_bound() {
        let c = families::gen_ckt(3, 3, 2).unwrap();
        let per_copy: Vec<_> = [1, 2]
            .iter()
            .map(|i| {
                let o = c.ids(
                    (1..=4)
                        .map(|j| format!("o_{i}^{j}"))
                        .collect::<Vec<_>>()
                        .iter()
                        .map(String::as_str),
                );
                verify_fort(&c.graph, 3, &o).unwrap()
            })
            .collect();
        assert_eq!(fort_hitting_lower_bound(&c.graph, &per_copy), 2);
        assert_eq!(fort_hitting_lower_bound(&c.graph, &per_copy[..1]), 1);
        assert_eq!(fort_hitting_lower_bound(&c.graph, &[]), 0);

        let d = families::gen_drq(4, 2).unwrap();
        let forts = find_minimal_forts(&d.graph, 1, 64);
        assert!(fort_hitting_lower_bound(&d.graph, &forts) >= 2);
    }

    #[test]
    fn disjoint_family_is_exact_on_overlapping_regions() {
        // Path 0..8: 1-forts {0,2}? No; use explicit certificates of C_8.
        let g = Graph::cycle(8);
        let forts = find_minimal_forts(&g, 1, usize::MAX);
        let chosen = disjoint_fort_family(&g, &forts);
        for (i, &a) in chosen.iter().enumerate() {
            for &b in &chosen[i + 1..] {
                assert!(forts[a]
                    .closed_neighborhood()
                    .is_disjoint(&forts[b].closed_neighborhood()));
            }
        }
        // brute force over subfamilies
        let m = forts.len();
        let mut best = 0;
        for mask in 0u32..1 << m {
            let picked: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            let ok = picked.iter().enumerate().all(|(i, &a)| {
                picked[i + 1..].iter().all(|&b| {
                    forts[a]
                        .closed_neighborhood()
                        .is_disjoint(&forts[b].closed_neighborhood())
                })
            });
            if ok {
                best = best.max(picked.len());
            }
        }
        assert_eq!(chosen.len(), best);
    }

    #[test]
    fn l_configurations_of_aj() {
        let a = families::gen_aj(2, 2).unwrap();
        let search = find_l_configurations(&a.graph, 2);
        assert!(!search.cap_hit);
        assert_eq!(search.configs.len(), 1);
        let cfg = &search.configs[0];
        assert_eq!(cfg.l_set, a.ids(["apex", "o^1", "o^2", "o^3"]));
        assert!(verify_fort(&a.graph, 2, &a.ids(["o^1", "o^2", "o^3"])).is_ok());
        assert_eq!(cfg.span, a.graph.all_vertices());
    }

    #[test]
    fn no_l_configuration_in_c4() {
        assert!(find_l_configurations(&Graph::cycle(4), 1)
            .configs
            .is_empty());
    }

    #[test]
    fn complete_graph_is_its_own_configuration() {
        let search = find_l_configurations(&Graph::complete(8), 3);
        assert_eq!(search.configs.len(), 1);
        assert_eq!(search.configs[0].l_set, [0, 1, 2, 3].into());
        assert_eq!(search.configs[0].span.len(), 8);
    }

    #[test]
    fn span_disjointness() {
        let c = families::gen_ckt(2, 2, 2).unwrap();
        let search = find_l_configurations(&c.graph, 2);
        assert_eq!(search.configs.len(), 2);
        assert!(configuration_span_disjointness(&search.configs));

        assert!(configuration_span_disjointness(&search.configs[..1]));
        let dup = vec![search.configs[0].clone(), search.configs[0].clone()];
        assert!(configuration_span_disjointness(&dup));

        let overlapping = vec![
            LConfiguration {
                k: 1,
                l_set: [0].into(),
                span: [0, 1].into(),
            },
            LConfiguration {
                k: 1,
                l_set: [2].into(),
                span: [1, 2].into(),
            },
        ];
        assert!(!configuration_span_disjointness(&overlapping));
    }

    #[test]
    fn clique_cap_is_reported() {
        let search = find_l_configurations_capped(&Graph::complete(8), 3, 10);
        assert!(search.cap_hit);
    }
}
