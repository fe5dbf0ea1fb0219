//! Generators for the extremal graph families.
//!
//! Every generator returns a [`LabeledGraph`] whose label map names the
//! structurally important vertices. Subscripts are 1-based and superscripts
//! are written with `^`, so the vertex `a_0^2` is labeled `"a_0^2"`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{family}: {reason}")]
pub struct FamilyError {
    pub family: &'static str,
    pub reason: String,
}

fn domain(
    family: &'static str,
    ok: bool,
    reason: impl FnOnce() -> String,
) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError {
            family,
            reason: reason(),
        })
    }
}

/// A graph plus names for some of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: BTreeMap<String, usize>,
}

impl LabeledGraph {
    pub fn get(&self, label: &str) -> Option<usize> {
        self.labels.get(label).copied()
    }

    /// Id of a label. Panics on unknown labels; intended for tests and
    /// fixed layouts.
    pub fn id(&self, label: &str) -> usize {
        self.get(label)
            .unwrap_or_else(|| panic!("no vertex labeled {label:?}"))
    }

    pub fn ids<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> VertexSet {
        labels.into_iter().map(|l| self.id(l)).collect()
    }

    /// Labels sorted by name, one `name id` pair per line.
    pub fn label_text(&self) -> String {
        self.labels
            .iter()
            .map(|(name, id)| format!("{name} {id}\n"))
            .collect()
    }
}

/// Accumulates a labeled edge set; repeated pairs are merged.
struct Builder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: BTreeMap<String, usize>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
            labels: BTreeMap::new(),
        }
    }

    fn edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.edges.insert((u.min(v), u.max(v)));
    }

    fn clique(&mut self, members: &[usize]) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn label(&mut self, name: String, id: usize) {
        let previous = self.labels.insert(name, id);
        debug_assert!(previous.is_none());
    }

    fn finish(self) -> LabeledGraph {
        let edges: Vec<_> = self.edges.into_iter().collect();
        LabeledGraph {
            graph: Graph::new(self.n, &edges).expect("generator emits a simple graph"),
            labels: self.labels,
        }
    }
}

/// `D_{r,q}`: `q` copies of `K_{r,r} - x_i y_i` chained by `y_i x_{i+1}`
/// (indices mod `q`). `k = r - 3` gives optimum `2q`.
///
/// Block `i` occupies ids `2r(i-1)..2r i`: side `X_i` first, then `Y_i`.
/// `x_i`/`y_i` are the first vertex of each side; the others are labeled
/// `X_i^j`/`Y_i^j` for `j = 2..=r`.
pub fn gen_drq(r: usize, q: usize) -> Result<LabeledGraph, FamilyError> {
    domain("D_{r,q}", r >= 4, || format!("r must be >= 4, got {r}"))?;
    domain("D_{r,q}", q >= 2, || format!("q must be >= 2, got {q}"))?;
    let mut b = Builder::new(2 * q * r);
    let x = |i: usize, j: usize| 2 * r * (i - 1) + (j - 1);
    let y = |i: usize, j: usize| 2 * r * (i - 1) + r + (j - 1);
    for i in 1..=q {
        for a in 1..=r {
            for c in 1..=r {
                if (a, c) != (1, 1) {
                    b.edge(x(i, a), y(i, c));
                }
            }
        }
        b.edge(y(i, 1), x(i % q + 1, 1));
        b.label(format!("x_{i}"), x(i, 1));
        b.label(format!("y_{i}"), y(i, 1));
        for j in 2..=r {
            b.label(format!("X_{i}^{j}"), x(i, j));
            b.label(format!("Y_{i}^{j}"), y(i, j));
        }
    }
    Ok(b.finish())
}

/// `F_{0,q}`: cubic graph of order `4q` with total domination number `2q`.
///
/// Block `i` has vertices `z_i^1..z_i^4` (ids `4(i-1)..4i`) on the 4-cycle
/// `z^1 z^2 z^4 z^3`. Consecutive blocks are joined by `z_i^2 z_{i+1}^1` and
/// `z_i^3 z_{i+1}^4`; the free ends are capped by `z_1^1 z_1^4` and
/// `z_q^2 z_q^3`. `F_{0,1}` is `K_4`.
pub fn gen_f0q(q: usize) -> Result<LabeledGraph, FamilyError> {
    domain("F_{0,q}", q >= 1, || format!("q must be >= 1, got {q}"))?;
    let mut b = Builder::new(4 * q);
    let z = |i: usize, j: usize| 4 * (i - 1) + (j - 1);
    for i in 1..=q {
        for j in 1..=4 {
            b.label(format!("z_{i}^{j}"), z(i, j));
        }
    }
    if q == 1 {
        b.clique(&[0, 1, 2, 3]);
        return Ok(b.finish());
    }
    for i in 1..=q {
        b.edge(z(i, 1), z(i, 2));
        b.edge(z(i, 2), z(i, 4));
        b.edge(z(i, 4), z(i, 3));
        b.edge(z(i, 3), z(i, 1));
        if i < q {
            b.edge(z(i, 2), z(i + 1, 1));
            b.edge(z(i, 3), z(i + 1, 4));
        }
    }
    b.edge(z(1, 1), z(1, 4));
    b.edge(z(q, 2), z(q, 3));
    Ok(b.finish())
}

const H_EDGES: [(usize, usize); 8] = [
    (0, 2),
    (2, 5),
    (5, 1),
    (1, 4),
    (4, 3),
    (3, 0),
    (2, 3),
    (4, 5),
];

/// The 6-vertex graph `H`: `x = 0`, `y = 1`, `z^1..z^4 = 2..5`, with `x`
/// and `y` of degree 2.
pub fn gen_hbase() -> LabeledGraph {
    let mut b = Builder::new(6);
    for (u, v) in H_EDGES {
        b.edge(u, v);
    }
    b.label("x".into(), 0);
    b.label("y".into(), 1);
    for j in 1..=4 {
        b.label(format!("z^{j}"), j + 1);
    }
    b.finish()
}

/// `H_{0,q}`: `q` copies of `H` chained by `y_i x_{i+1}` (mod `q`). Copy `i`
/// uses ids `6(i-1)..6i` in the layout of [`gen_hbase`].
pub fn gen_h0q(q: usize) -> Result<LabeledGraph, FamilyError> {
    domain("H_{0,q}", q >= 1, || format!("q must be >= 1, got {q}"))?;
    let mut b = Builder::new(6 * q);
    for i in 1..=q {
        let base = 6 * (i - 1);
        for (u, v) in H_EDGES {
            b.edge(base + u, base + v);
        }
        b.edge(base + 1, 6 * (i % q));
        b.label(format!("x_{i}"), base);
        b.label(format!("y_{i}"), base + 1);
        for j in 1..=4 {
            b.label(format!("z_{i}^{j}"), base + j + 1);
        }
    }
    Ok(b.finish())
}

/// Edges of `A_j` with the apex at `base`, partners at `base+1..=base+j`
/// and the remaining `k+1` vertices after them.
fn aj_edges(b: &mut Builder, base: usize, k: usize, j: usize) {
    let n = k + j + 2;
    for u in 0..n {
        for v in u + 1..n {
            if u == 0 && v <= j {
                continue;
            }
            b.edge(base + u, base + v);
        }
    }
}

/// `A_j`: `K_{k+j+2}` minus the `j` edges from the apex (id 0) to its
/// partners `p^1..p^j` (ids `1..=j`). The other vertices are `o^1..o^{k+1}`.
pub fn gen_aj(k: usize, j: usize) -> Result<LabeledGraph, FamilyError> {
    domain("A_j", j >= 1 && j <= k, || {
        format!("need 1 <= j <= k, got k={k}, j={j}")
    })?;
    let mut b = Builder::new(k + j + 2);
    aj_edges(&mut b, 0, k, j);
    b.label("apex".into(), 0);
    for i in 1..=j {
        b.label(format!("p^{i}"), i);
    }
    for i in 1..=k + 1 {
        b.label(format!("o^{i}"), j + i);
    }
    Ok(b.finish())
}

/// Shared shape of the odd and even `G_{r,q}`: blocks `A_i`, `B_i` of size
/// `m` for `i = 0..=q` and hubs `U_i` of size `hub` for `i = 1..=q`.
/// Layout: `A_0`, `B_0`, then `U_i`, `A_i`, `B_i` for each `i`.
struct Blocks {
    m: usize,
    hub: usize,
}

impl Blocks {
    fn order(&self, q: usize) -> usize {
        2 * self.m + q * (2 * self.m + self.hub)
    }

    fn start(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            2 * self.m + (i - 1) * (2 * self.m + self.hub)
        }
    }

    fn u(&self, i: usize) -> Vec<usize> {
        let s = self.start(i);
        (s..s + self.hub).collect()
    }

    fn a(&self, i: usize) -> Vec<usize> {
        let s = self.start(i) + if i == 0 { 0 } else { self.hub };
        (s..s + self.m).collect()
    }

    fn b(&self, i: usize) -> Vec<usize> {
        let s = self.start(i) + if i == 0 { 0 } else { self.hub } + self.m;
        (s..s + self.m).collect()
    }

    fn build(&self, q: usize) -> Builder {
        let mut b = Builder::new(self.order(q));
        for i in 0..=q {
            b.clique(&[self.a(i), self.b(i)].concat());
            for (j, &v) in self.a(i).iter().enumerate() {
                b.label(format!("a_{i}^{}", j + 1), v);
            }
            for (j, &v) in self.b(i).iter().enumerate() {
                b.label(format!("b_{i}^{}", j + 1), v);
            }
        }
        for i in 0..q {
            b.clique(&[self.b(i), self.u(i + 1)].concat());
            b.clique(&[self.u(i + 1), self.a(i + 1)].concat());
        }
        b
    }
}

/// Odd `G_{r,q}`: blocks of size `(r-1)/2`, hubs `{u_i^1, u_i^2}`, closed by
/// `a_0^j b_q^j` and `a_0^j b_q^{j+1}` (superscripts cyclic).
pub fn gen_godd(r: usize, q: usize) -> Result<LabeledGraph, FamilyError> {
    domain("G_{r,q} (odd)", r >= 5 && r % 2 == 1, || {
        format!("r must be odd and >= 5, got {r}")
    })?;
    domain("G_{r,q} (odd)", q >= 1, || {
        format!("q must be >= 1, got {q}")
    })?;
    let blocks = Blocks {
        m: (r - 1) / 2,
        hub: 2,
    };
    let mut b = blocks.build(q);
    let (a0, bq) = (blocks.a(0), blocks.b(q));
    for j in 0..blocks.m {
        b.edge(a0[j], bq[j]);
        b.edge(a0[j], bq[(j + 1) % blocks.m]);
    }
    for i in 1..=q {
        let u = blocks.u(i);
        b.label(format!("u_{i}^1"), u[0]);
        b.label(format!("u_{i}^2"), u[1]);
    }
    Ok(b.finish())
}

/// Even `G_{r,q}`: blocks of size `r/2`, single hubs `u_i`, closed by the
/// matching `a_0^j b_q^j`.
pub fn gen_geven(r: usize, q: usize) -> Result<LabeledGraph, FamilyError> {
    domain("G_{r,q} (even)", r >= 4 && r % 2 == 0, || {
        format!("r must be even and >= 4, got {r}")
    })?;
    domain("G_{r,q} (even)", q >= 1, || {
        format!("q must be >= 1, got {q}")
    })?;
    let blocks = Blocks { m: r / 2, hub: 1 };
    let mut b = blocks.build(q);
    for (&a, &bb) in blocks.a(0).iter().zip(&blocks.b(q)) {
        b.edge(a, bb);
    }
    for i in 1..=q {
        b.label(format!("u_{i}"), blocks.u(i)[0]);
    }
    Ok(b.finish())
}

/// `C_{k,t}`: `t` copies of `A_l` in a cycle; the `l` partners of copy `i`
/// are joined to the apex of copy `i+1` (mod `t`).
///
/// Copy `i` uses ids `(i-1)(k+l+2)..i(k+l+2)` in the layout of [`gen_aj`],
/// labeled `apex_i`, `p_i^j`, `o_i^j`.
pub fn gen_ckt(k: usize, l: usize, t: usize) -> Result<LabeledGraph, FamilyError> {
    domain("C_{k,t}", l == 2 || l == 3, || {
        format!("l must be 2 or 3, got {l}")
    })?;
    domain("C_{k,t}", k >= l, || {
        format!("need k >= l, got k={k}, l={l}")
    })?;
    domain("C_{k,t}", t >= 2, || format!("t must be >= 2, got {t}"))?;
    let size = k + l + 2;
    let mut b = Builder::new(t * size);
    for i in 1..=t {
        let base = (i - 1) * size;
        let next_apex = (i % t) * size;
        aj_edges(&mut b, base, k, l);
        b.label(format!("apex_{i}"), base);
        for j in 1..=l {
            b.edge(base + j, next_apex);
            b.label(format!("p_{i}^{j}"), base + j);
        }
        for j in 1..=k + 1 {
            b.label(format!("o_{i}^{j}"), base + l + j);
        }
    }
    Ok(b.finish())
}

/// A named family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    Drq { r: usize, q: usize },
    F0q { q: usize },
    Hbase,
    H0q { q: usize },
    Aj { k: usize, j: usize },
    GoddRq { r: usize, q: usize },
    GevenRq { r: usize, q: usize },
    Ckt { k: usize, l: usize, t: usize },
}

impl FamilySpec {
    pub fn generate(&self) -> Result<LabeledGraph, FamilyError> {
        match *self {
            FamilySpec::Drq { r, q } => gen_drq(r, q),
            FamilySpec::F0q { q } => gen_f0q(q),
            FamilySpec::Hbase => Ok(gen_hbase()),
            FamilySpec::H0q { q } => gen_h0q(q),
            FamilySpec::Aj { k, j } => gen_aj(k, j),
            FamilySpec::GoddRq { r, q } => gen_godd(r, q),
            FamilySpec::GevenRq { r, q } => gen_geven(r, q),
            FamilySpec::Ckt { k, l, t } => gen_ckt(k, l, t),
        }
    }

    /// Order by closed form.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Drq { r, q } => 2 * q * r,
            FamilySpec::F0q { q } => 4 * q,
            FamilySpec::Hbase => 6,
            FamilySpec::H0q { q } => 6 * q,
            FamilySpec::Aj { k, j } => k + j + 2,
            FamilySpec::GoddRq { r, q } => (q + 1) * (r + 1) - 2,
            FamilySpec::GevenRq { r, q } => (q + 1) * (r + 1) - 1,
            FamilySpec::Ckt { k, l, t } => t * (k + l + 2),
        }
    }

    /// Claimed common degree, `None` for the non-regular members.
    pub fn degree(&self) -> Option<usize> {
        match *self {
            FamilySpec::Drq { r, .. }
            | FamilySpec::GoddRq { r, .. }
            | FamilySpec::GevenRq { r, .. } => Some(r),
            FamilySpec::F0q { .. } | FamilySpec::H0q { .. } => Some(3),
            FamilySpec::Hbase | FamilySpec::Aj { .. } => None,
            FamilySpec::Ckt { k, l, .. } => Some(k + l + 1),
        }
    }

    /// The power domination parameter `k` the family is built for, if any.
    pub fn natural_k(&self) -> Option<usize> {
        match *self {
            FamilySpec::Drq { r, .. } => Some(r - 3),
            FamilySpec::GoddRq { r, .. } => Some((r - 3) / 2),
            FamilySpec::GevenRq { r, .. } => Some((r - 2) / 2),
            FamilySpec::Aj { k, .. } | FamilySpec::Ckt { k, .. } => Some(k),
            FamilySpec::F0q { .. } | FamilySpec::Hbase | FamilySpec::H0q { .. } => None,
        }
    }

    /// Whether the construction is claimed connected.
    pub fn connected(&self) -> bool {
        true
    }

    /// Whether the construction is claimed claw-free.
    pub fn claw_free(&self) -> bool {
        matches!(
            self,
            FamilySpec::H0q { .. }
                | FamilySpec::GoddRq { .. }
                | FamilySpec::GevenRq { .. }
                | FamilySpec::Ckt { .. }
        )
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Drq { r, q } => write!(f, "D(r={r},q={q})"),
            FamilySpec::F0q { q } => write!(f, "F0(q={q})"),
            FamilySpec::Hbase => write!(f, "H"),
            FamilySpec::H0q { q } => write!(f, "H0(q={q})"),
            FamilySpec::Aj { k, j } => write!(f, "A(k={k},j={j})"),
            FamilySpec::GoddRq { r, q } | FamilySpec::GevenRq { r, q } => {
                write!(f, "G(r={r},q={q})")
            }
            FamilySpec::Ckt { k, l, t } => write!(f, "C(k={k},l={l},t={t})"),
        }
    }
}

/// Every valid family instance of order at most `max_n` within small
/// parameter ranges, in a fixed order.
pub fn sweep(max_n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for r in 4..=12 {
        for q in 2..=6 {
            out.push(FamilySpec::Drq { r, q });
        }
    }
    for q in 1..=8 {
        out.push(FamilySpec::F0q { q });
        out.push(FamilySpec::H0q { q });
    }
    out.push(FamilySpec::Hbase);
    for k in 1..=8 {
        for j in 1..=k {
            out.push(FamilySpec::Aj { k, j });
        }
    }
    for r in 4..=12 {
        for q in 1..=6 {
            out.push(if r % 2 == 1 {
                FamilySpec::GoddRq { r, q }
            } else {
                FamilySpec::GevenRq { r, q }
            });
        }
    }
    for l in 2..=3 {
        for k in l..=8 {
            for t in 2..=6 {
                out.push(FamilySpec::Ckt { k, l, t });
            }
        }
    }
    out.retain(|s| s.order() <= max_n && s.generate().is_ok());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drq_shape() {
        let d = gen_drq(4, 2).unwrap();
        assert_eq!(d.graph.order(), 16);
        assert!(d.graph.is_regular(4));
        assert!(d.graph.is_connected());
        assert!(!d.graph.is_claw_free());
        assert!(d.graph.has_edge(d.id("y_1"), d.id("x_2")));
        assert!(d.graph.has_edge(d.id("y_2"), d.id("x_1")));
        assert!(!d.graph.has_edge(d.id("x_1"), d.id("y_1")));
        let d5 = gen_drq(5, 2).unwrap();
        assert_eq!(d5.graph.order(), 20);
        assert!(d5.graph.is_regular(5));
        assert!(gen_drq(4, 1).is_err());
        assert!(gen_drq(3, 2).is_err());
    }

    #[test]
    fn f0q_shape() {
        assert_eq!(gen_f0q(1).unwrap().graph, Graph::complete(4));
        for q in 2..=5 {
            let g = gen_f0q(q).unwrap().graph;
            assert_eq!(g.order(), 4 * q);
            assert!(g.is_regular(3));
            assert!(g.is_connected());
        }
        assert!(gen_f0q(0).is_err());
    }

    #[test]
    fn h_shape() {
        let h = gen_hbase();
        assert_eq!(h.graph.degrees(), vec![2, 2, 3, 3, 3, 3]);
        let h1 = gen_h0q(1).unwrap();
        assert_eq!(h1.graph.order(), 6);
        assert!(h1.graph.is_regular(3));
        assert!(h1.graph.is_claw_free());
        assert!(h1.graph.has_edge(h1.id("x_1"), h1.id("y_1")));
        let h3 = gen_h0q(3).unwrap();
        assert!(h3.graph.is_regular(3) && h3.graph.is_connected() && h3.graph.is_claw_free());
    }

    #[test]
    fn aj_degree_profile() {
        for (k, j) in [(2, 2), (3, 3), (3, 1), (4, 2)] {
            let a = gen_aj(k, j).unwrap();
            let mut degrees = a.graph.degrees();
            degrees.sort_unstable();
            let mut expected = vec![k + 1];
            expected.extend(std::iter::repeat(k + j).take(j));
            expected.extend(std::iter::repeat(k + j + 1).take(k + 1));
            expected.sort_unstable();
            assert_eq!(degrees, expected, "A_{j} with k={k}");
            assert_eq!(a.graph.degree(a.id("apex")), k + 1);
        }
        assert_eq!(gen_aj(2, 2).unwrap().graph.order(), 6);
        assert_eq!(gen_aj(3, 3).unwrap().graph.order(), 8);
        assert!(gen_aj(2, 3).is_err());
        assert!(gen_aj(2, 0).is_err());
    }

    #[test]
    fn godd_shape() {
        for (r, q, n) in [(5, 1, 10), (5, 2, 16), (7, 1, 14)] {
            let g = gen_godd(r, q).unwrap().graph;
            assert_eq!(g.order(), n);
            assert!(g.is_regular(r));
            assert!(g.is_connected());
            assert!(g.is_claw_free());
        }
        let g = gen_godd(5, 1).unwrap();
        // a_0^2 b_1^1 closes the cyclic superscript.
        assert!(g.graph.has_edge(g.id("a_0^2"), g.id("b_1^1")));
        assert!(gen_godd(6, 1).is_err());
        assert!(gen_godd(3, 1).is_err());
    }

    #[test]
    fn geven_shape() {
        for (r, q, n) in [(4, 1, 9), (4, 2, 14), (6, 1, 13)] {
            let g = gen_geven(r, q).unwrap().graph;
            assert_eq!(g.order(), n);
            assert!(g.is_regular(r));
            assert!(g.is_connected());
            assert!(g.is_claw_free());
        }
        assert!(gen_geven(5, 1).is_err());
    }

    #[test]
    fn ckt_shape() {
        let c = gen_ckt(3, 3, 2).unwrap();
        assert_eq!(c.graph.order(), 16);
        assert!(c.graph.is_regular(7));
        assert!(c.graph.is_claw_free());
        assert!(c.graph.is_connected());
        let c = gen_ckt(2, 2, 2).unwrap();
        assert_eq!(c.graph.order(), 12);
        assert!(c.graph.is_regular(5));
        assert!(gen_ckt(2, 3, 2).is_err());
        assert!(gen_ckt(4, 4, 2).is_err());
        assert!(gen_ckt(2, 2, 1).is_err());
    }

    #[test]
    fn labels_are_injective_and_in_range() {
        for spec in sweep(30) {
            let lg = spec.generate().unwrap();
            let ids: BTreeSet<_> = lg.labels.values().collect();
            assert_eq!(ids.len(), lg.labels.len(), "{spec}");
            assert!(ids.iter().all(|&&v| v < lg.graph.order()));
        }
    }

    #[test]
    fn generators_are_deterministic() {
        for spec in sweep(24) {
            let a = crate::edgelist::write(&spec.generate().unwrap().graph);
            let b = crate::edgelist::write(&spec.generate().unwrap().graph);
            assert_eq!(a, b);
        }
    }
}
