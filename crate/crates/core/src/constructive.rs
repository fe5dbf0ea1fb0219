//! Constructive `k`-power dominating sets for claw-free regular graphs.
//!
//! A seed packing `S_0` is built from L-configurations and then extended
//! greedily to a maximal packing. After that, vertices are added one at a
//! time, each time the unmonitored vertex that enlarges the monitored set
//! the most. On connected claw-free `(k+l+1)`-regular graphs with
//! `l ∈ {2, 3}` and `k ≥ l`, every step gains at least `k + l + 2` vertices
//! and the seed closed neighborhoods are disjoint, so the result has at most
//! `n / (k + l + 2)` vertices. Such runs are reported as certified.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forts::find_l_configurations;
use crate::graph::{Graph, VertexSet};
use crate::propagation::fixpoint_bits;

/// A hypothesis of the size guarantee that the input fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Hypothesis {
    Disconnected,
    NotRegular,
    HasClaw {
        center: usize,
    },
    /// The regular degree is below `k + 1`.
    DegreeTooSmall {
        degree: usize,
    },
    /// `l = degree - k - 1` is not 2 or 3.
    LOutOfRange {
        l: usize,
    },
    KBelowL {
        k: usize,
        l: usize,
    },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Disconnected => f.write_str("graph is not connected"),
            Hypothesis::NotRegular => f.write_str("graph is not regular"),
            Hypothesis::HasClaw { center } => {
                write!(f, "graph has an induced claw centered at {center}")
            }
            Hypothesis::DegreeTooSmall { degree } => write!(f, "degree {degree} is below k+1"),
            Hypothesis::LOutOfRange { l } => write!(f, "l = {l} is not in {{2, 3}}"),
            Hypothesis::KBelowL { k, l } => write!(f, "k = {k} is below l = {l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("hypotheses violated: {}", .violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct HypothesisError {
    pub violations: Vec<Hypothesis>,
}

/// The `l` implied by the degree: `Δ - k - 1`, or 0 if `Δ ≤ k`.
pub fn inferred_l(g: &Graph, k: usize) -> usize {
    g.max_degree().saturating_sub(k + 1)
}

/// Every failed hypothesis of the size guarantee, in a fixed order.
pub fn hypothesis_violations(g: &Graph, k: usize) -> Vec<Hypothesis> {
    let mut out = Vec::new();
    if !g.is_connected() {
        out.push(Hypothesis::Disconnected);
    }
    match g.regular_degree() {
        None => out.push(Hypothesis::NotRegular),
        Some(degree) if degree < k + 1 => out.push(Hypothesis::DegreeTooSmall { degree }),
        Some(degree) => {
            let l = degree - k - 1;
            if !(2..=3).contains(&l) {
                out.push(Hypothesis::LOutOfRange { l });
            }
            if k < l {
                out.push(Hypothesis::KBelowL { k, l });
            }
        }
    }
    if let Some(claw) = g.claw_witness() {
        out.push(Hypothesis::HasClaw {
            center: claw.center,
        });
    }
    out
}

/// Monitored set and frontier data for one growth step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryContext {
    /// `M = P^∞(S_t)`.
    pub monitored: VertexSet,
    /// Monitored vertices with an unmonitored neighbor, ascending.
    pub frontier: Vec<FrontierVertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontierVertex {
    pub u: usize,
    /// `L_u = N(u) \ M`.
    pub l_u: VertexSet,
    /// `F_u = N(L_u) \ L_u`.
    pub f_u: VertexSet,
    /// `F'_u = F_u \ {u}`.
    pub f_prime_u: VertexSet,
}

impl BoundaryContext {
    pub fn new(g: &Graph, monitored: &FixedBitSet) -> Self {
        let frontier = monitored
            .ones()
            .filter_map(|u| {
                let l_u: VertexSet = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| !monitored.contains(w))
                    .collect();
                if l_u.is_empty() {
                    return None;
                }
                let f_u = g.boundary(&l_u);
                let f_prime_u = f_u.difference(&[u].into());
                Some(FrontierVertex {
                    u,
                    l_u,
                    f_u,
                    f_prime_u,
                })
            })
            .collect();
        BoundaryContext {
            monitored: VertexSet::from_bits(monitored),
            frontier,
        }
    }

    /// True iff every `L_u` induces a clique.
    pub fn frontier_sets_are_cliques(&self, g: &Graph) -> bool {
        self.frontier.iter().all(|fv| {
            let members = fv.l_u.as_slice();
            members
                .iter()
                .enumerate()
                .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
    }
}

/// Exact fraction `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub num: usize,
    pub den: usize,
}

impl Bound {
    pub fn floor(&self) -> usize {
        self.num / self.den
    }

    /// True iff `x ≤ num / den`.
    pub fn admits(&self, x: usize) -> bool {
        x * self.den <= self.num
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthStep {
    pub vertex: usize,
    pub gain: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifiedSolution {
    pub k: usize,
    pub l: usize,
    pub pds: VertexSet,
    pub sequence: Vec<GrowthStep>,
    pub initial_packing: VertexSet,
    /// `|P^∞(S_0)|`.
    pub initial_monitored: usize,
    pub certified: bool,
    /// `n / (k + l + 2)`.
    pub bound: Bound,
    /// Failed hypotheses; empty for conforming inputs.
    pub violations: Vec<Hypothesis>,
    /// True iff every `L_u` seen during growth induced a clique.
    pub frontier_cliques: bool,
}

/// Seed packing for a graph meeting all hypotheses of the size guarantee.
pub fn build_seed_packing(g: &Graph, k: usize) -> Result<VertexSet, HypothesisError> {
    let violations = hypothesis_violations(g, k);
    if !violations.is_empty() {
        return Err(HypothesisError { violations });
    }
    Ok(seed_packing(g, k))
}

/// Seed set without hypothesis checks: one least vertex from every
/// L-configuration not yet reached by propagation, then a greedy maximal
/// packing extension by ascending id. On non-conforming inputs the result
/// may fail to be a packing.
pub fn seed_packing(g: &Graph, k: usize) -> VertexSet {
    let configs = find_l_configurations(g, k).configs;
    let mut seed: Vec<usize> = Vec::new();
    loop {
        let monitored = fixpoint_bits(g, k, &VertexSet::from(seed.clone()));
        let next = configs
            .iter()
            .find(|c| c.l_set.iter().all(|v| !monitored.contains(v)));
        match next {
            Some(c) => seed.push(c.l_set.first().expect("cliques are nonempty")),
            None => break,
        }
    }
    let mut covered = g.closed_neighborhood_bits(&VertexSet::from(seed.clone()));
    for v in 0..g.order() {
        if seed.contains(&v) {
            continue;
        }
        // `v` is at distance ≥ 3 from every member iff `N[v]` misses every
        // member's closed neighborhood.
        if g.closed_bits(v).is_disjoint(&covered) {
            seed.push(v);
            covered.union_with(g.closed_bits(v));
        }
    }
    seed.into_iter().collect()
}

/// Grows `s0` by maximum-gain additions until everything is monitored.
/// `certified` here covers the saturation and per-step gain conditions only.
pub fn grow_sequence(g: &Graph, k: usize, l: usize, s0: &VertexSet) -> CertifiedSolution {
    let n = g.order();
    let target = k + l + 2;
    let mut pds: Vec<usize> = s0.as_slice().to_vec();
    let mut monitored = fixpoint_bits(g, k, s0);
    let initial_monitored = monitored.count_ones(..);
    let mut sequence = Vec::new();
    let mut frontier_cliques = true;
    while monitored.count_ones(..) < n {
        frontier_cliques &= BoundaryContext::new(g, &monitored).frontier_sets_are_cliques(g);
        let before = monitored.count_ones(..);
        let mut best: Option<(usize, FixedBitSet)> = None;
        for x in (0..n).filter(|&x| !monitored.contains(x)) {
            let mut trial = pds.clone();
            trial.push(x);
            let reached = fixpoint_bits(g, k, &trial.into_iter().collect());
            if best
                .as_ref()
                .map_or(true, |(_, b)| reached.count_ones(..) > b.count_ones(..))
            {
                best = Some((x, reached));
            }
        }
        let (x, reached) = best.expect("an unmonitored vertex exists");
        sequence.push(GrowthStep {
            vertex: x,
            gain: reached.count_ones(..) - before,
        });
        pds.push(x);
        monitored = reached;
    }
    let saturated = g.closed_neighborhood_bits(s0).count_ones(..) == target * s0.len();
    let certified = saturated && sequence.iter().all(|s| s.gain >= target);
    CertifiedSolution {
        k,
        l,
        pds: pds.into_iter().collect(),
        sequence,
        initial_packing: s0.clone(),
        initial_monitored,
        certified,
        bound: Bound {
            num: n,
            den: target,
        },
        violations: Vec::new(),
        frontier_cliques,
    }
}

/// Seed packing followed by growth. Inputs that fail a hypothesis still get
/// a valid `k`-PDS, reported as uncertified.
pub fn constructive_kpds(g: &Graph, k: usize) -> CertifiedSolution {
    let l = inferred_l(g, k);
    let violations = hypothesis_violations(g, k);
    let s0 = seed_packing(g, k);
    let mut sol = grow_sequence(g, k, l, &s0);
    sol.certified &= violations.is_empty();
    sol.violations = violations;
    sol
}
