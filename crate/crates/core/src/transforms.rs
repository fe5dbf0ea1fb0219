//! Blow-ups that replace every vertex by a fixed-size independent set or
//! clique and every edge by a complete join.
//!
//! Source vertex `i` becomes ids `i*s..(i+1)*s` where `s` is the blow-up
//! size, labeled `v_{i+1}^1..v_{i+1}^s`.

use thiserror::Error;

use crate::families::LabeledGraph;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("input graph is not regular")]
    NotRegular,
    #[error("input graph has an induced claw centered at {0}")]
    NotClawFree(usize),
}

fn blowup(g: &Graph, size: usize, clique: bool) -> LabeledGraph {
    let mut edges = Vec::new();
    for v in 0..g.order() {
        if clique {
            for a in 0..size {
                for b in a + 1..size {
                    edges.push((v * size + a, v * size + b));
                }
            }
        }
    }
    for (u, v) in g.edges() {
        for a in 0..size {
            for b in 0..size {
                edges.push((u * size + a, v * size + b));
            }
        }
    }
    let labels = (0..g.order())
        .flat_map(|v| (0..size).map(move |s| (format!("v_{}^{}", v + 1, s + 1), v * size + s)))
        .collect();
    LabeledGraph {
        graph: Graph::new(g.order() * size, &edges).expect("blow-up of a simple graph is simple"),
        labels,
    }
}

/// Independent-set blow-up with parts of size `k + 2`. For a connected
/// `r`-regular input the result is `(k+2)r`-regular, and its
/// `k`-power domination number equals the total domination number of `g`.
pub fn blowup_independent(g: &Graph, k: usize) -> Result<LabeledGraph, TransformError> {
    if k == 0 {
        return Err(TransformError::ZeroK);
    }
    if g.order() > 0 && g.regular_degree().is_none() {
        return Err(TransformError::NotRegular);
    }
    Ok(blowup(g, k + 2, false))
}

/// Clique blow-up with parts of size `k + 1`. For a connected claw-free
/// `r`-regular input the result is claw-free and `(kr+r+k)`-regular, and its
/// `k`-power domination number equals the domination number of `g`.
pub fn blowup_clique(g: &Graph, k: usize) -> Result<LabeledGraph, TransformError> {
    if k == 0 {
        return Err(TransformError::ZeroK);
    }
    if g.order() > 0 && g.regular_degree().is_none() {
        return Err(TransformError::NotRegular);
    }
    if let Some(claw) = g.claw_witness() {
        return Err(TransformError::NotClawFree(claw.center));
    }
    Ok(blowup(g, k + 1, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn independent_blowup_of_k4() {
        let b = blowup_independent(&Graph::complete(4), 1).unwrap();
        assert_eq!(b.graph.order(), 12);
        assert!(b.graph.is_regular(9));
        assert!(!b.graph.has_edge(b.id("v_1^1"), b.id("v_1^2")));
        assert!(b.graph.has_edge(b.id("v_1^1"), b.id("v_4^3")));
    }

    #[test]
    fn independent_blowup_of_c4() {
        let b = blowup_independent(&Graph::cycle(4), 1).unwrap();
        assert_eq!(b.graph.order(), 12);
        assert!(b.graph.is_regular(6));
        assert!(b.graph.is_connected());
    }

    #[test]
    fn clique_blowup_of_h01() {
        let h = families::gen_h0q(1).unwrap().graph;
        let b = blowup_clique(&h, 1).unwrap();
        assert_eq!(b.graph.order(), 12);
        assert!(b.graph.is_regular(7));
        assert!(b.graph.is_claw_free());
    }

    #[test]
    fn clique_blowup_of_triangle_is_k6() {
        let b = blowup_clique(&Graph::complete(3), 1).unwrap();
        assert_eq!(b.graph, Graph::complete(6));
    }

    #[test]
    fn preconditions_are_enforced() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(blowup_clique(&star, 1), Err(TransformError::NotRegular));
        let claw_regular = families::gen_drq(4, 2).unwrap().graph;
        assert!(matches!(
            blowup_clique(&claw_regular, 1),
            Err(TransformError::NotClawFree(_))
        ));
        assert_eq!(
            blowup_independent(&Graph::complete(4), 0),
            Err(TransformError::ZeroK)
        );
        assert_eq!(
            blowup_independent(&Graph::path(3), 1),
            Err(TransformError::NotRegular)
        );
    }

    #[test]
    fn order_and_degree_formulas() {
        for spec in families::sweep(12) {
            let g = spec.generate().unwrap().graph;
            let Some(r) = g.regular_degree() else {
                continue;
            };
            for k in 1..=2 {
                let b = blowup_independent(&g, k).unwrap();
                assert_eq!(b.graph.order(), (k + 2) * g.order());
                assert!(b.graph.is_regular((k + 2) * r));
                if g.is_claw_free() {
                    let c = blowup_clique(&g, k).unwrap();
                    assert_eq!(c.graph.order(), (k + 1) * g.order());
                    assert!(c.graph.is_regular(k * r + r + k));
                    assert!(c.graph.is_claw_free());
                }
            }
        }
    }
}
