//! Exact optimum computation for `γ_{p,k}`, `γ` and `γ_t`.
//!
//! All three parameters are solved by iterative deepening over set size,
//! enumerating candidate sets in lexicographic order. Each parameter comes
//! with a family of "hitting regions" that every feasible set must meet:
//! closed neighborhoods of forts for power domination, `N[v]` for
//! domination and `N(v)` for total domination. A partial selection is cut
//! as soon as some unmet region has no vertex left at or after the next
//! candidate, or when a precomputed pairwise-disjoint subfamily of regions
//! needs more picks than remain.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::forts::{disjoint_fort_family, find_minimal_forts};
use crate::graph::{Graph, VertexSet};
use crate::propagation::fixpoint_bits;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper limit on the number of minimal forts used for pruning.
const FORT_LIMIT: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exact,
    Constructive,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Exact => f.write_str("exact"),
            Method::Constructive => f.write_str("constructive"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    PowerDomination(usize),
    Domination,
    TotalDomination,
}

impl Param {
    /// Feasibility predicate for this parameter.
    pub fn is_feasible(&self, g: &Graph, s: &VertexSet) -> bool {
        feasible(g, *self, &s.to_bits(g.order()))
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::PowerDomination(k) => write!(f, "gamma_p,{k}"),
            Param::Domination => f.write_str("gamma"),
            Param::TotalDomination => f.write_str("gamma_t"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    /// Number of candidate sets whose feasibility was evaluated.
    pub explored: u64,
    /// Lower bound from disjoint hitting regions, summed over components.
    pub lower_bound_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("budget exhausted after {explored} evaluations; optimum lies in [{lower}, {upper}]")]
    BudgetExhausted {
        lower: usize,
        upper: usize,
        explored: u64,
    },
    #[error("vertex {0} is isolated, so no total dominating set exists")]
    IsolatedVertex(usize),
}

pub fn gamma_pk_exact(g: &Graph, k: usize, budget: u64) -> Result<SolveResult, SolveError> {
    solve_exact(g, Param::PowerDomination(k), budget)
}

pub fn gamma_exact(g: &Graph, budget: u64) -> Result<SolveResult, SolveError> {
    solve_exact(g, Param::Domination, budget)
}

pub fn gamma_t_exact(g: &Graph, budget: u64) -> Result<SolveResult, SolveError> {
    solve_exact(g, Param::TotalDomination, budget)
}

/// Solves each component separately and sums the optima.
pub fn solve_exact(g: &Graph, param: Param, budget: u64) -> Result<SolveResult, SolveError> {
    if param == Param::TotalDomination {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
            return Err(SolveError::IsolatedVertex(v));
        }
    }
    let components = g.components();
    let mut value = 0;
    let mut witness = Vec::new();
    let mut explored = 0u64;
    let mut lower_bound_used = 0;
    for (idx, comp) in components.iter().enumerate() {
        let sub = g.induced_subgraph(comp);
        match solve_connected(&sub, param, budget - explored) {
            Ok(part) => {
                value += part.value;
                explored += part.explored;
                lower_bound_used += part.lower_bound_used;
                witness.extend(part.witness.iter().map(|i| comp.as_slice()[i]));
            }
            Err(Exhausted {
                lower,
                upper,
                explored: spent,
            }) => {
                let rest = &components[idx + 1..];
                let rest_upper: usize = rest
                    .iter()
                    .map(|c| greedy_upper(&g.induced_subgraph(c), param))
                    .sum();
                return Err(SolveError::BudgetExhausted {
                    lower: value + lower + rest.len(),
                    upper: value + upper + rest_upper,
                    explored: explored + spent,
                });
            }
        }
    }
    Ok(SolveResult {
        value,
        witness: witness.into_iter().collect(),
        method: Method::Exact,
        explored,
        lower_bound_used,
    })
}

struct Exhausted {
    lower: usize,
    upper: usize,
    explored: u64,
}

fn feasible(g: &Graph, param: Param, s: &FixedBitSet) -> bool {
    let n = g.order();
    match param {
        Param::PowerDomination(k) => {
            let seed = VertexSet::from_bits(s);
            fixpoint_bits(g, k, &seed).count_ones(..) == n
        }
        Param::Domination => {
            let mut covered = FixedBitSet::with_capacity(n);
            for v in s.ones() {
                covered.union_with(g.closed_bits(v));
            }
            covered.count_ones(..) == n
        }
        Param::TotalDomination => {
            let mut covered = FixedBitSet::with_capacity(n);
            for v in s.ones() {
                for &w in g.neighbors(v) {
                    covered.insert(w);
                }
            }
            covered.count_ones(..) == n
        }
    }
}

/// Regions every feasible set must intersect.
fn hitting_regions(g: &Graph, param: Param) -> Vec<FixedBitSet> {
    let n = g.order();
    match param {
        Param::PowerDomination(k) => find_minimal_forts(g, k, FORT_LIMIT)
            .iter()
            .map(|f| f.closed_neighborhood().to_bits(n))
            .collect(),
        Param::Domination => (0..n).map(|v| g.closed_bits(v).clone()).collect(),
        Param::TotalDomination => (0..n)
            .map(|v| VertexSet::from(g.neighbors(v).to_vec()).to_bits(n))
            .collect(),
    }
}

/// Greedy feasible set size: repeatedly add the vertex that covers the most
/// new vertices (least id on ties).
fn greedy_upper(g: &Graph, param: Param) -> usize {
    let n = g.order();
    let mut chosen = FixedBitSet::with_capacity(n);
    let mut count = 0;
    while !feasible(g, param, &chosen) {
        let score = |v: usize| {
            let mut trial = chosen.clone();
            trial.insert(v);
            let set = VertexSet::from_bits(&trial);
            match param {
                Param::PowerDomination(k) => fixpoint_bits(g, k, &set).count_ones(..),
                Param::Domination => g.closed_neighborhood_bits(&set).count_ones(..),
                Param::TotalDomination => set
                    .iter()
                    .flat_map(|v| g.neighbors(v).iter().copied())
                    .collect::<VertexSet>()
                    .len(),
            }
        };
        let best = (0..n)
            .filter(|&v| !chosen.contains(v))
            .max_by_key(|&v| (score(v), std::cmp::Reverse(v)))
            .expect("the full vertex set is feasible");
        chosen.insert(best);
        count += 1;
    }
    count
}

struct Search<'a> {
    g: &'a Graph,
    param: Param,
    regions: Vec<FixedBitSet>,
    region_max: Vec<usize>,
    disjoint: Vec<usize>,
    budget: u64,
    explored: u64,
    chosen: Vec<usize>,
}

enum Outcome {
    Found,
    NotFound,
    OutOfBudget,
}

impl Search<'_> {
    fn hit(&self, region: usize) -> bool {
        self.chosen
            .iter()
            .any(|&v| self.regions[region].contains(v))
    }

    fn dfs(&mut self, next: usize, size: usize) -> Outcome {
        let n = self.g.order();
        let remaining = size - self.chosen.len();
        if (0..self.regions.len())
            .any(|r| !self.hit(r) && (remaining == 0 || self.region_max[r] < next))
        {
            return Outcome::NotFound;
        }
        if self.disjoint.iter().filter(|&&r| !self.hit(r)).count() > remaining {
            return Outcome::NotFound;
        }
        if remaining == 0 {
            if self.explored == self.budget {
                return Outcome::OutOfBudget;
            }
            self.explored += 1;
            let bits = VertexSet::from(self.chosen.clone()).to_bits(n);
            return if feasible(self.g, self.param, &bits) {
                Outcome::Found
            } else {
                Outcome::NotFound
            };
        }
        for v in next..=n - remaining {
            self.chosen.push(v);
            match self.dfs(v + 1, size) {
                Outcome::NotFound => {}
                other => return other,
            }
            self.chosen.pop();
        }
        Outcome::NotFound
    }
}

fn solve_connected(g: &Graph, param: Param, budget: u64) -> Result<SolveResult, Exhausted> {
    let n = g.order();
    let regions = hitting_regions(g, param);
    let region_max = regions
        .iter()
        .map(|r| r.ones().last().expect("hitting regions are nonempty"))
        .collect();
    let certificates: Vec<_> = regions
        .iter()
        .map(|r| crate::forts::FortCertificate {
            k: 0,
            fort: VertexSet::from_bits(r),
            boundary: VertexSet::new(),
        })
        .collect();
    let disjoint = disjoint_fort_family(g, &certificates);
    let lower = disjoint.len().max(1);
    let mut search = Search {
        g,
        param,
        regions,
        region_max,
        disjoint,
        budget,
        explored: 0,
        chosen: Vec::new(),
    };
    for size in lower..=n {
        match search.dfs(0, size) {
            Outcome::Found => {
                return Ok(SolveResult {
                    value: size,
                    witness: search.chosen.iter().copied().collect(),
                    method: Method::Exact,
                    explored: search.explored,
                    lower_bound_used: lower,
                })
            }
            Outcome::NotFound => {}
            Outcome::OutOfBudget => {
                return Err(Exhausted {
                    lower: size,
                    upper: greedy_upper(g, param).max(size),
                    explored: search.explored,
                })
            }
        }
    }
    unreachable!("the full vertex set of a graph without isolated vertices is feasible")
}
