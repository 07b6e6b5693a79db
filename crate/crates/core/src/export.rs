//! DOT and JSON renderings of graphs, always in canonical vertex order.

use serde::{Deserialize, Serialize};

use crate::graph::{DprimeGraph, GeneralDivisorGraph, Graph};

pub fn to_dot<G: Graph + ?Sized>(g: &G, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for u in 0..g.order() {
        out.push_str(&format!("  v{u} [label=\"{}\"];\n", g.label(u)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  v{u} -- v{v};\n"));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaVertex {
    pub subset: Vec<usize>,
    pub omega: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDocument {
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
    pub vertices: Vec<GammaVertex>,
    pub edges: Vec<[usize; 2]>,
}

impl GammaDocument {
    pub fn new(g: &DprimeGraph) -> Self {
        Self {
            k: g.k(),
            primes: g.basis().map(|b| b.primes().to_vec()),
            vertices: g
                .vertices()
                .iter()
                .map(|d| GammaVertex {
                    subset: d.subset(),
                    omega: d.omega(),
                    value: d.value().map(|v| v.to_string()),
                })
                .collect(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorGraphDocument {
    pub n: u64,
    /// `(prime, exponent)` pairs, ascending by prime.
    pub factorization: Vec<(u64, u32)>,
    pub vertices: Vec<u64>,
    pub edges: Vec<[usize; 2]>,
}

impl DivisorGraphDocument {
    pub fn new(g: &GeneralDivisorGraph) -> Self {
        Self {
            n: g.n(),
            factorization: g.factorization().to_vec(),
            vertices: g.divisors().to_vec(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gamma, build_general, PrimeBasis};

    #[test]
    fn dot_for_single_vertex() {
        let g = build_gamma(0, None).unwrap();
        assert_eq!(
            to_dot(&g, "gamma0"),
            "graph gamma0 {\n  v0 [label=\"1\"];\n}\n"
        );
    }

    #[test]
    fn dot_uses_concrete_values() {
        let g = build_gamma(3, Some(PrimeBasis::new(vec![2, 3, 5]).unwrap())).unwrap();
        let dot = to_dot(&g, "gamma3");
        let labels: Vec<&str> = dot
            .lines()
            .filter_map(|l| l.split("label=\"").nth(1))
            .map(|l| l.trim_end_matches("\"];"))
            .collect();
        assert_eq!(labels, ["1", "2", "3", "5", "6", "10", "15", "30"]);
        assert_eq!(dot.matches(" -- ").count(), 19);
    }

    #[test]
    fn gamma_json_shape() {
        let g = build_gamma(1, None).unwrap();
        let json = serde_json::to_string(&GammaDocument::new(&g)).unwrap();
        assert_eq!(
            json,
            r#"{"k":1,"vertices":[{"subset":[],"omega":0},{"subset":[1],"omega":1}],"edges":[[0,1]]}"#
        );
    }

    #[test]
    fn divisor_json_shape() {
        let g = build_general(12).unwrap();
        let doc = DivisorGraphDocument::new(&g);
        assert_eq!(doc.vertices, vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(doc.factorization, vec![(2, 2), (3, 1)]);
        assert_eq!(doc.edges.len(), 12);
    }
}
