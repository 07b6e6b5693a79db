//! Topological indices evaluated straight from their definitions.
//!
//! Everything here works on an [`IndexContext`]: the degree sequence, the
//! canonical edge list and a distance matrix of one graph. Pair sums run over
//! unordered vertex pairs `u < v`; edge sums over the canonical edge list.
//! Terms that only depend on small integers (degrees, distances,
//! transmissions) are grouped and counted before the exact arithmetic, which
//! keeps big-number work proportional to the number of distinct terms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::{inv_sqrt, IndexValue, RadicalSum};
use crate::graph::{DprimeGraph, Graph};
use crate::metric::{
    distance_matrix_bfs, distance_matrix_fast, mostar_counts, DistanceMatrix, MetricError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexId {
    Wiener,
    HyperWiener,
    Harary,
    Zagreb1,
    Zagreb2,
    DegreeDistance,
    Gutman,
    Balaban,
    Harmonic,
    Randic,
    R1,
    R2,
    R3,
    Mostar,
}

impl IndexId {
    pub const ALL: [IndexId; 14] = [
        IndexId::Wiener,
        IndexId::HyperWiener,
        IndexId::Harary,
        IndexId::Zagreb1,
        IndexId::Zagreb2,
        IndexId::DegreeDistance,
        IndexId::Gutman,
        IndexId::Balaban,
        IndexId::Harmonic,
        IndexId::Randic,
        IndexId::R1,
        IndexId::R2,
        IndexId::R3,
        IndexId::Mostar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IndexId::Wiener => "wiener",
            IndexId::HyperWiener => "hyper_wiener",
            IndexId::Harary => "harary",
            IndexId::Zagreb1 => "zagreb1",
            IndexId::Zagreb2 => "zagreb2",
            IndexId::DegreeDistance => "degree_distance",
            IndexId::Gutman => "gutman",
            IndexId::Balaban => "balaban",
            IndexId::Harmonic => "harmonic",
            IndexId::Randic => "randic",
            IndexId::R1 => "r1",
            IndexId::R2 => "r2",
            IndexId::R3 => "r3",
            IndexId::Mostar => "mostar",
        }
    }

    pub fn valid_names() -> String {
        Self::ALL.map(IndexId::name).join(", ")
    }
}

impl fmt::Display for IndexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown index {0:?}; valid names: {names}", names = IndexId::valid_names())]
pub struct UnknownIndex(pub String);

impl FromStr for IndexId {
    type Err = UnknownIndex;

    fn from_str(s: &str) -> Result<Self, UnknownIndex> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| UnknownIndex(s.to_string()))
    }
}

/// Parses `"all"` or a comma-separated list of index names.
pub fn parse_selection(spec: &str) -> Result<Vec<IndexId>, UnknownIndex> {
    if spec.trim() == "all" {
        return Ok(IndexId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let id = part.parse()?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

/// Degrees, edges and distances of one graph.
#[derive(Debug, Clone)]
pub struct IndexContext {
    degrees: Vec<u64>,
    edges: Vec<(usize, usize)>,
    distances: DistanceMatrix,
}

impl IndexContext {
    /// Distances by breadth-first search.
    pub fn new<G: Graph + ?Sized>(g: &G) -> Result<Self, MetricError> {
        let distances = distance_matrix_bfs(g)?;
        Ok(Self::with_distances(g, distances))
    }

    /// Γ_k with distances from the direct 0/1/2 rule.
    pub fn gamma_fast(g: &DprimeGraph) -> Self {
        Self::with_distances(g, distance_matrix_fast(g))
    }

    pub fn with_distances<G: Graph + ?Sized>(g: &G, distances: DistanceMatrix) -> Self {
        assert_eq!(g.order(), distances.order());
        let edges = g.edges();
        let mut degrees = vec![0u64; g.order()];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Self {
            degrees,
            edges,
            distances,
        }
    }

    pub fn order(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v, self.distances.get(u, v) as u64)))
    }
}

fn int(n: u128) -> IndexValue {
    IndexValue::Integer(BigInt::from(n))
}

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn wiener(ctx: &IndexContext) -> IndexValue {
    int(ctx.pairs().map(|(_, _, d)| d as u128).sum())
}

pub fn hyper_wiener(ctx: &IndexContext) -> IndexValue {
    let twice: u128 = ctx.pairs().map(|(_, _, d)| (d + d * d) as u128).sum();
    IndexValue::from_rational(ratio(twice, 2))
}

pub fn harary(ctx: &IndexContext) -> IndexValue {
    let mut by_distance: BTreeMap<u64, u64> = BTreeMap::new();
    for (_, _, d) in ctx.pairs() {
        *by_distance.entry(d).or_default() += 1;
    }
    let total = by_distance
        .into_iter()
        .fold(BigRational::zero(), |acc, (d, count)| acc + ratio(count, d));
    IndexValue::from_rational(total)
}

pub fn zagreb1(ctx: &IndexContext) -> IndexValue {
    int(ctx.degrees.iter().map(|&d| (d * d) as u128).sum())
}

pub fn zagreb2(ctx: &IndexContext) -> IndexValue {
    let deg = &ctx.degrees;
    int(ctx
        .edges
        .iter()
        .map(|&(u, v)| (deg[u] * deg[v]) as u128)
        .sum())
}

pub fn degree_distance(ctx: &IndexContext) -> IndexValue {
    let deg = &ctx.degrees;
    int(ctx
        .pairs()
        .map(|(u, v, d)| ((deg[u] + deg[v]) * d) as u128)
        .sum())
}

pub fn gutman(ctx: &IndexContext) -> IndexValue {
    let deg = &ctx.degrees;
    int(ctx
        .pairs()
        .map(|(u, v, d)| deg[u] as u128 * deg[v] as u128 * d as u128)
        .sum())
}

/// Σ_{terms} count · 1/√key, for keys grouped ahead of time.
fn inv_sqrt_sum(groups: BTreeMap<u64, u64>) -> RadicalSum {
    let mut acc = RadicalSum::zero();
    for (key, count) in groups {
        let term = inv_sqrt(&ratio(key, 1)).expect("positive key fits in 64 bits");
        acc += &term.scale(&ratio(count, 1));
    }
    acc
}

/// J = m/(μ+1) · Σ_{uv∈E} (D_u·D_v)^(-1/2) with μ = m − n + 1 and D the
/// transmission.
pub fn balaban(ctx: &IndexContext) -> IndexValue {
    let m = ctx.edges.len() as i64;
    if m == 0 {
        return IndexValue::zero();
    }
    let mu = m - ctx.order() as i64 + 1;
    let trans = ctx.distances.transmissions();
    let mut groups = BTreeMap::new();
    for &(u, v) in &ctx.edges {
        *groups.entry(trans[u] * trans[v]).or_default() += 1;
    }
    let prefactor = ratio(m, mu + 1);
    IndexValue::from_radical(inv_sqrt_sum(groups).scale(&prefactor))
}

pub fn harmonic(ctx: &IndexContext) -> IndexValue {
    let deg = &ctx.degrees;
    let mut groups: BTreeMap<u64, u64> = BTreeMap::new();
    for &(u, v) in &ctx.edges {
        *groups.entry(deg[u] + deg[v]).or_default() += 1;
    }
    let total = groups
        .into_iter()
        .fold(BigRational::zero(), |acc, (s, count)| {
            acc + ratio(2 * count, s)
        });
    IndexValue::from_rational(total)
}

pub fn randic(ctx: &IndexContext) -> IndexValue {
    let deg = &ctx.degrees;
    let mut groups = BTreeMap::new();
    for &(u, v) in &ctx.edges {
        *groups.entry(deg[u] * deg[v]).or_default() += 1;
    }
    IndexValue::from_radical(inv_sqrt_sum(groups))
}

/// Sum degree, multiplication degree and their sum for one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RDegree {
    pub sum_degree: BigInt,
    pub product_degree: BigInt,
}

impl RDegree {
    pub fn r(&self) -> BigInt {
        &self.sum_degree + &self.product_degree
    }
}

/// R-degrees keyed by vertex degree; both parts depend on `deg v` only.
///
/// The multiplication degree is the product of all other degrees, which is
/// `∏ deg / deg v` whenever `deg v ≠ 0` and the empty product 1 for Γ_0.
fn r_degrees_by_degree(ctx: &IndexContext) -> HashMap<u64, RDegree> {
    let total: u64 = ctx.degrees.iter().sum();
    let zeros = ctx.degrees.iter().filter(|&&d| d == 0).count();
    let nonzero_product = ctx
        .degrees
        .iter()
        .filter(|&&d| d != 0)
        .fold(BigInt::one(), |acc, &d| acc * d);
    let mut out = HashMap::new();
    for &d in &ctx.degrees {
        out.entry(d).or_insert_with(|| {
            let product_degree = match (d, zeros) {
                (0, 1) => nonzero_product.clone(),
                (0, _) => BigInt::zero(),
                (_, 0) => &nonzero_product / d,
                _ => BigInt::zero(),
            };
            RDegree {
                sum_degree: BigInt::from(total - d),
                product_degree,
            }
        });
    }
    out
}

pub fn r_degree(ctx: &IndexContext, v: usize) -> RDegree {
    r_degrees_by_degree(ctx)
        .remove(&ctx.degrees[v])
        .expect("degree present")
}

fn r_values(ctx: &IndexContext) -> HashMap<u64, BigInt> {
    r_degrees_by_degree(ctx)
        .into_iter()
        .map(|(d, rd)| (d, rd.r()))
        .collect()
}

fn edge_degree_pairs(ctx: &IndexContext) -> BTreeMap<(u64, u64), u64> {
    let deg = &ctx.degrees;
    let mut groups = BTreeMap::new();
    for &(u, v) in &ctx.edges {
        let key = (deg[u].min(deg[v]), deg[u].max(deg[v]));
        *groups.entry(key).or_default() += 1;
    }
    groups
}

pub fn r1(ctx: &IndexContext) -> IndexValue {
    let r = r_values(ctx);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in &ctx.degrees {
        *counts.entry(d).or_default() += 1;
    }
    let total = counts
        .into_iter()
        .fold(BigInt::zero(), |acc, (d, c)| acc + &r[&d] * &r[&d] * c);
    IndexValue::Integer(total)
}

pub fn r2(ctx: &IndexContext) -> IndexValue {
    let r = r_values(ctx);
    let total = edge_degree_pairs(ctx)
        .into_iter()
        .fold(BigInt::zero(), |acc, ((a, b), c)| acc + &r[&a] * &r[&b] * c);
    IndexValue::Integer(total)
}

pub fn r3(ctx: &IndexContext) -> IndexValue {
    let r = r_values(ctx);
    let total = edge_degree_pairs(ctx)
        .into_iter()
        .fold(BigInt::zero(), |acc, ((a, b), c)| {
            acc + (&r[&a] + &r[&b]) * c
        });
    IndexValue::Integer(total)
}

pub fn mostar(ctx: &IndexContext) -> IndexValue {
    int(ctx
        .edges
        .iter()
        .map(|&(u, v)| mostar_counts(&ctx.distances, u, v).imbalance() as u128)
        .sum())
}

pub fn compute(ctx: &IndexContext, id: IndexId) -> IndexValue {
    match id {
        IndexId::Wiener => wiener(ctx),
        IndexId::HyperWiener => hyper_wiener(ctx),
        IndexId::Harary => harary(ctx),
        IndexId::Zagreb1 => zagreb1(ctx),
        IndexId::Zagreb2 => zagreb2(ctx),
        IndexId::DegreeDistance => degree_distance(ctx),
        IndexId::Gutman => gutman(ctx),
        IndexId::Balaban => balaban(ctx),
        IndexId::Harmonic => harmonic(ctx),
        IndexId::Randic => randic(ctx),
        IndexId::R1 => r1(ctx),
        IndexId::R2 => r2(ctx),
        IndexId::R3 => r3(ctx),
        IndexId::Mostar => mostar(ctx),
    }
}

/// Which graph a report describes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum GraphDescriptor {
    Gamma { k: usize },
    Divisor { n: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub graph: GraphDescriptor,
    pub indices: BTreeMap<IndexId, IndexValue>,
}

impl IndexReport {
    pub fn build(graph: GraphDescriptor, ctx: &IndexContext, ids: &[IndexId]) -> Self {
        Self {
            graph,
            indices: ids.iter().map(|&id| (id, compute(ctx, id))).collect(),
        }
    }

    pub fn get(&self, id: IndexId) -> Option<&IndexValue> {
        self.indices.get(&id)
    }
}
