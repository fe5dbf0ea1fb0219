//! Immutable simple undirected graphs and the structural predicates used
//! throughout the crate.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while building a graph or binding a vertex set to it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("vertex {v} is outside 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Sorted set of vertex ids.
///
/// Members are strictly increasing. A set is "bound" to a graph when every
/// member is a valid vertex of it; see [`Graph::vertex_set`].
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    /// Dense bitset over `0..n`. Panics if a member is `>= n`.
    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for v in self.iter() {
            bits.insert(v);
        }
        bits
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        Self(bits.ones().collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An induced `K_{1,3}`: a center and three pairwise non-adjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are sorted and symmetric. Closed neighborhoods are also
/// cached as bitsets since almost every algorithm in the crate works on them.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    closed: Vec<FixedBitSet>,
    edge_count: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adjacency == other.adjacency
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated pairs (in either
    /// orientation) and ids outside `0..n`.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let closed = adjacency
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut bits = FixedBitSet::with_capacity(n);
                bits.insert(v);
                for &w in list {
                    bits.insert(w);
                }
                bits
            })
            .collect();
        Ok(Self {
            adjacency,
            closed,
            edge_count: edges.len(),
        })
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges).expect("complete graph edges are valid")
    }

    /// Cycle `0-1-...-(n-1)-0`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle edges are valid")
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("path edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// `N[v]` as a bitset over `0..n`.
    pub fn closed_bits(&self, v: usize) -> &FixedBitSet {
        &self.closed[v]
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular (`None` for `n = 0`).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Binds a list of ids to this graph.
    pub fn vertex_set<I: IntoIterator<Item = usize>>(
        &self,
        ids: I,
    ) -> Result<VertexSet, GraphError> {
        let set: VertexSet = ids.into_iter().collect();
        let out_of_range = set.iter().find(|&v| v >= self.order());
        match out_of_range {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.order() }),
            None => Ok(set),
        }
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.order()).collect()
    }

    /// `N[S]` as a bitset.
    pub fn closed_neighborhood_bits(&self, s: &VertexSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.order());
        for v in s.iter() {
            out.union_with(&self.closed[v]);
        }
        out
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_bits(&self.closed_neighborhood_bits(s))
    }

    /// `N(S) \ S`, the outer boundary of `S`.
    pub fn boundary(&self, s: &VertexSet) -> VertexSet {
        let mut bits = self.closed_neighborhood_bits(s);
        for v in s.iter() {
            bits.set(v, false);
        }
        VertexSet::from_bits(&bits)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        self.adjacency.iter().all(|l| l.len() == r)
    }

    /// Least induced claw, ordered by center then sorted leaves.
    pub fn claw_witness(&self) -> Option<Claw> {
        for (center, nbrs) in self.adjacency.iter().enumerate() {
            for (i, &a) in nbrs.iter().enumerate() {
                for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &c in &nbrs[j + 1..] {
                        if !self.has_edge(a, c) && !self.has_edge(b, c) {
                            return Some(Claw {
                                center,
                                leaves: [a, b, c],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.claw_witness().is_none()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adjacency[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Hop distance between `u` and `v`, or `None` if they lie in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// True iff all members are pairwise at distance at least three, which
    /// is the same as their closed neighborhoods being pairwise disjoint.
    pub fn is_packing(&self, s: &VertexSet) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.order());
        for v in s.iter() {
            if !seen.is_disjoint(&self.closed[v]) {
                return false;
            }
            seen.union_with(&self.closed[v]);
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let members: VertexSet = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for v in members.iter() {
                seen[v] = true;
            }
            out.push(members);
        }
        out
    }

    /// Subgraph induced by `s`; vertex `i` of the result is the `i`-th member
    /// of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let index = |v: usize| s.as_slice().binary_search(&v).ok();
        let edges: Vec<_> = self
            .edges()
            .filter_map(|(u, v)| Some((index(u)?, index(v)?)))
            .collect();
        Graph::new(s.len(), &edges).expect("induced subgraph of a simple graph is simple")
    }
}
