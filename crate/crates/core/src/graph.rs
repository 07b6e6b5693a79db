//! Divisor function graphs.
//!
//! A vertex of Γ_k is a divisor of `n = p₁p₂…p_k`, stored as the bitmask of
//! the primes it contains (bit `i - 1` for `pᵢ`). Divisibility between two
//! such divisors is subset inclusion, so adjacency never needs the concrete
//! primes.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Largest `k` accepted by [`build_gamma`].
pub const MAX_K: usize = 24;

/// Default bound on the number of divisors of a general `n`.
pub const DEFAULT_DIVISOR_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} appears more than once in the basis")]
    DuplicatePrime(u64),
    #[error("basis has {got} primes but k = {expected}")]
    BasisLength { expected: usize, got: usize },
    #[error("k = {k} exceeds the supported maximum {max}")]
    KTooLarge { k: usize, max: usize },
    #[error("n must be at least 1")]
    ZeroN,
    #[error("{n} has {count} divisors, above the cap of {cap}")]
    TooManyDivisors { n: u64, count: usize, cap: usize },
}

/// Read-only view shared by every graph family.
///
/// Vertices are `0..order()` in the family's canonical order.
pub trait Graph: Sync {
    fn order(&self) -> usize;

    fn adjacent(&self, u: usize, v: usize) -> bool;

    fn label(&self, u: usize) -> String;

    fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.adjacent(u, v)).collect()
    }

    fn degree(&self, u: usize) -> usize {
        (0..self.order()).filter(|&v| self.adjacent(u, v)).count()
    }

    /// Each edge once, as `(lower, higher)`, lexicographically sorted.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn degree_sequence(&self) -> Vec<usize> {
        (0..self.order()).map(|u| self.degree(u)).collect()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Ordered list of distinct primes `p₁…p_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeBasis {
    primes: Vec<u64>,
}

impl PrimeBasis {
    pub fn new(primes: Vec<u64>) -> Result<Self, GraphError> {
        for (i, &p) in primes.iter().enumerate() {
            if !is_prime(p) {
                return Err(GraphError::NotPrime(p));
            }
            if primes[..i].contains(&p) {
                return Err(GraphError::DuplicatePrime(p));
            }
        }
        Ok(Self { primes })
    }

    /// The `k` smallest primes that are at least `start`.
    pub fn consecutive_from(start: u64, k: usize) -> Self {
        let primes = (start.max(2)..).filter(|&p| is_prime(p)).take(k).collect();
        Self { primes }
    }

    pub fn first(k: usize) -> Self {
        Self::consecutive_from(2, k)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// A divisor of `p₁…p_k`: the set of prime indices it contains.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Divisor {
    mask: u32,
    value: Option<BigUint>,
}

impl Divisor {
    pub fn mask(&self) -> u32 {
        self.mask
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// 1-based prime indices, ascending.
    pub fn subset(&self) -> Vec<usize> {
        (0..32)
            .filter(|i| self.mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    pub fn value(&self) -> Option<&BigUint> {
        self.value.as_ref()
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Divisor) -> bool {
        self.mask & other.mask == self.mask
    }

    /// Concrete value when known, else `p1p2`-style symbol (`1` for the empty set).
    pub fn label(&self) -> String {
        if let Some(v) = &self.value {
            return v.to_string();
        }
        if self.mask == 0 {
            return "1".to_string();
        }
        self.subset().iter().map(|i| format!("p{i}")).collect()
    }
}

/// Γ_k with vertices in canonical order: by ω ascending, then by bitmask.
#[derive(Debug, Clone)]
pub struct DprimeGraph {
    k: usize,
    basis: Option<PrimeBasis>,
    vertices: Vec<Divisor>,
    position: Vec<usize>,
}

pub fn canonical_masks(k: usize) -> Vec<u32> {
    let mut masks: Vec<u32> = (0..1u32 << k).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    masks
}

pub fn build_gamma(k: usize, basis: Option<PrimeBasis>) -> Result<DprimeGraph, GraphError> {
    if k > MAX_K {
        return Err(GraphError::KTooLarge { k, max: MAX_K });
    }
    if let Some(b) = &basis {
        if b.len() != k {
            return Err(GraphError::BasisLength {
                expected: k,
                got: b.len(),
            });
        }
    }
    let masks = canonical_masks(k);
    let mut position = vec![0usize; masks.len()];
    let vertices = masks
        .iter()
        .enumerate()
        .map(|(i, &mask)| {
            position[mask as usize] = i;
            let value = basis.as_ref().map(|b| {
                b.primes()
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .fold(BigUint::one(), |acc, (_, &p)| acc * p)
            });
            Divisor { mask, value }
        })
        .collect();
    Ok(DprimeGraph {
        k,
        basis,
        vertices,
        position,
    })
}

impl DprimeGraph {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> Option<&PrimeBasis> {
        self.basis.as_ref()
    }

    pub fn vertices(&self) -> &[Divisor] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Divisor {
        &self.vertices[i]
    }

    /// Canonical index of the divisor with the given prime mask.
    pub fn index_of_mask(&self, mask: u32) -> Option<usize> {
        self.position.get(mask as usize).copied()
    }

    /// Canonical index of the divisor made of the given 1-based prime indices.
    pub fn index_of(&self, subset: &[usize]) -> Option<usize> {
        let mut mask = 0u32;
        for &i in subset {
            if i == 0 || i > self.k {
                return None;
            }
            mask |= 1 << (i - 1);
        }
        self.index_of_mask(mask)
    }

    /// Adjacency on divisors: distinct and one contains the other.
    pub fn adjacent_divisors(&self, u: &Divisor, v: &Divisor) -> bool {
        u.mask != v.mask && (u.divides(v) || v.divides(u))
    }

    pub fn omega(&self, u: usize) -> usize {
        self.vertices[u].omega()
    }
}

impl Graph for DprimeGraph {
    fn order(&self) -> usize {
        self.vertices.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacent_divisors(&self.vertices[u], &self.vertices[v])
    }

    fn label(&self, u: usize) -> String {
        self.vertices[u].label()
    }
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while (p as u128) * (p as u128) <= n as u128 {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// G_D(n): all divisors of `n`, ascending, adjacent under divisibility.
#[derive(Debug, Clone)]
pub struct GeneralDivisorGraph {
    n: u64,
    factorization: Vec<(u64, u32)>,
    divisors: Vec<u64>,
}

pub fn build_general(n: u64) -> Result<GeneralDivisorGraph, GraphError> {
    build_general_capped(n, DEFAULT_DIVISOR_CAP)
}

pub fn build_general_capped(n: u64, cap: usize) -> Result<GeneralDivisorGraph, GraphError> {
    if n == 0 {
        return Err(GraphError::ZeroN);
    }
    let factorization = factorize(n);
    let count: usize = factorization.iter().map(|&(_, e)| e as usize + 1).product();
    if count > cap {
        return Err(GraphError::TooManyDivisors { n, count, cap });
    }
    let mut divisors = vec![1u64];
    for &(p, e) in &factorization {
        let base = divisors.clone();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            divisors.extend(base.iter().map(|d| d * power));
        }
    }
    divisors.sort_unstable();
    Ok(GeneralDivisorGraph {
        n,
        factorization,
        divisors,
    })
}

impl GeneralDivisorGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn is_squarefree(&self) -> bool {
        self.factorization.iter().all(|&(_, e)| e == 1)
    }

    /// Number of distinct prime factors of `n`.
    pub fn omega(&self) -> usize {
        self.factorization.len()
    }

    /// For squarefree `n`, maps each canonical Γ_ω(n) position to the index of
    /// the matching divisor here (primes taken in ascending order).
    pub fn gamma_alignment(&self) -> Option<Vec<usize>> {
        if !self.is_squarefree() {
            return None;
        }
        let index: HashMap<u64, usize> = self
            .divisors
            .iter()
            .enumerate()
            .map(|(i, &d)| (d, i))
            .collect();
        let primes: Vec<u64> = self.factorization.iter().map(|&(p, _)| p).collect();
        let aligned = canonical_masks(primes.len())
            .into_iter()
            .map(|mask| {
                let value: u64 = primes
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &p)| p)
                    .product();
                index[&value]
            })
            .collect();
        Some(aligned)
    }
}

impl Graph for GeneralDivisorGraph {
    fn order(&self) -> usize {
        self.divisors.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.divisors[u], self.divisors[v]);
        a != b && (b % a == 0 || a % b == 0)
    }

    fn label(&self, u: usize) -> String {
        self.divisors[u].to_string()
    }
}

/// Arbitrary undirected simple graph given by an edge list.
#[derive(Debug, Clone)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Self-loops and duplicate edges are ignored; out-of-range endpoints panic.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in edges {
            assert!(u < order && v < order, "edge ({u}, {v}) out of range");
            if u != v && !adjacency[u].contains(&v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { adjacency }
    }

    /// Materializes any graph; useful when adjacency tests are expensive.
    pub fn from_graph<G: Graph + ?Sized>(g: &G) -> Self {
        Self {
            adjacency: (0..g.order()).map(|u| g.neighbors(u)).collect(),
        }
    }
}

impl Graph for SimpleGraph {
    fn order(&self) -> usize {
        self.adjacency.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    fn label(&self, u: usize) -> String {
        u.to_string()
    }

    fn neighbors(&self, u: usize) -> Vec<usize> {
        self.adjacency[u].clone()
    }

    fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{degree_formula, size_formula};

    fn binomial(n: usize, k: usize) -> usize {
        // Pascal triangle, independent of the closed-form module
        let mut row = vec![1usize];
        for _ in 0..n {
            let mut next = vec![1usize; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row[k]
    }

    #[test]
    fn gamma_examples() {
        let g3 = build_gamma(3, None).unwrap();
        assert_eq!((g3.order(), g3.edges().len()), (8, 19));
        let g0 = build_gamma(0, None).unwrap();
        assert_eq!((g0.order(), g0.edges().len()), (1, 0));
        let g5 = build_gamma(5, None).unwrap();
        assert_eq!((g5.order(), g5.edges().len()), (32, 211));
        assert_eq!(build_gamma(4, None).unwrap().edges().len(), 65);
        assert_eq!(build_gamma(1, None).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(build_gamma(2, None).unwrap().edges().len(), 5);
    }

    #[test]
    fn canonical_order_matches_matrix_indexing() {
        let g = build_gamma(3, None).unwrap();
        let labels: Vec<_> = (0..8).map(|i| g.label(i)).collect();
        assert_eq!(
            labels,
            ["1", "p1", "p2", "p3", "p1p2", "p1p3", "p2p3", "p1p2p3"]
        );
        let g = build_gamma(3, Some(PrimeBasis::new(vec![2, 3, 5]).unwrap())).unwrap();
        let labels: Vec<_> = (0..8).map(|i| g.label(i)).collect();
        assert_eq!(labels, ["1", "2", "3", "5", "6", "10", "15", "30"]);
    }

    #[test]
    fn adjacency_examples() {
        let g = build_gamma(3, None).unwrap();
        let one = g.index_of(&[]).unwrap();
        let n = g.index_of(&[1, 2, 3]).unwrap();
        let p1 = g.index_of(&[1]).unwrap();
        let p2 = g.index_of(&[2]).unwrap();
        assert!(g.adjacent(one, n));
        assert!(!g.adjacent(p1, p2));
        assert!(!g.adjacent(p1, p1));
        assert!(g.adjacent_divisors(g.vertex(p1), g.vertex(n)));
    }

    #[test]
    fn degree_examples() {
        let g3 = build_gamma(3, None).unwrap();
        assert_eq!(g3.degree_sequence(), vec![7, 4, 4, 4, 4, 4, 4, 7]);
        let g4 = build_gamma(4, None).unwrap();
        assert_eq!(
            g4.degree_sequence(),
            vec![15, 8, 8, 8, 8, 6, 6, 6, 6, 6, 6, 8, 8, 8, 8, 15]
        );
        let g5 = build_gamma(5, None).unwrap();
        let seq = g5.degree_sequence();
        assert_eq!(seq[0], 31);
        assert!((1..=5).all(|i| seq[i] == 16));
        assert!((6..16).all(|i| seq[i] == 10));
    }

    #[test]
    fn structural_sweep() {
        for k in 0..=8 {
            let g = build_gamma(k, None).unwrap();
            let seq = g.degree_sequence();
            assert_eq!(g.order(), 1 << k);
            assert_eq!(g.edges().len() as u64, size_formula(k as u32));
            assert_eq!(seq.iter().sum::<usize>(), 2 * g.edges().len());
            for (u, &d) in seq.iter().enumerate() {
                assert_eq!(d as u64, degree_formula(k as u32, g.omega(u) as u32));
            }
            for j in 0..=k {
                let count = (0..g.order()).filter(|&u| g.omega(u) == j).count();
                assert_eq!(count, binomial(k, j));
            }
        }
    }

    #[test]
    fn label_invariance_of_adjacency() {
        for k in 0..=6 {
            let a = build_gamma(k, Some(PrimeBasis::first(k))).unwrap();
            let b = build_gamma(k, Some(PrimeBasis::consecutive_from(101, k))).unwrap();
            assert_eq!(a.edges(), b.edges());
        }
    }

    #[test]
    fn basis_validation() {
        assert_eq!(PrimeBasis::new(vec![2, 4]), Err(GraphError::NotPrime(4)));
        assert_eq!(
            PrimeBasis::new(vec![3, 3]),
            Err(GraphError::DuplicatePrime(3))
        );
        assert_eq!(PrimeBasis::new(vec![1]), Err(GraphError::NotPrime(1)));
        assert!(matches!(
            build_gamma(3, Some(PrimeBasis::first(2))),
            Err(GraphError::BasisLength {
                expected: 3,
                got: 2
            })
        ));
        assert!(matches!(
            build_gamma(MAX_K + 1, None),
            Err(GraphError::KTooLarge { .. })
        ));
        assert_eq!(
            PrimeBasis::consecutive_from(101, 3).primes(),
            &[101, 103, 107]
        );
    }

    #[test]
    fn general_examples() {
        let g6 = build_general(6).unwrap();
        assert_eq!(g6.divisors(), &[1, 2, 3, 6]);
        assert_eq!(g6.edges().len(), 5);
        let g1 = build_general(1).unwrap();
        assert_eq!((g1.order(), g1.edges().len()), (1, 0));
        let g12 = build_general(12).unwrap();
        assert_eq!((g12.order(), g12.edges().len()), (6, 12));
        assert_eq!(build_general(0).unwrap_err(), GraphError::ZeroN);
        assert!(matches!(
            build_general_capped(720720, 100),
            Err(GraphError::TooManyDivisors { count: 240, .. })
        ));
    }

    #[test]
    fn divisor_pair_count_brute_force() {
        for n in 1..=300u64 {
            let divs: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            let mut pairs = 0;
            for (i, &a) in divs.iter().enumerate() {
                for &b in &divs[i + 1..] {
                    if b % a == 0 {
                        pairs += 1;
                    }
                }
            }
            let g = build_general(n).unwrap();
            assert_eq!(g.divisors(), divs.as_slice());
            assert_eq!(g.edges().len(), pairs, "n = {n}");
        }
    }

    #[test]
    fn squarefree_general_matches_gamma() {
        for n in [1u64, 2, 6, 30, 210, 2310] {
            let g = build_general(n).unwrap();
            let gamma = build_gamma(g.omega(), None).unwrap();
            let map = g.gamma_alignment().unwrap();
            for u in 0..gamma.order() {
                for v in 0..gamma.order() {
                    assert_eq!(gamma.adjacent(u, v), g.adjacent(map[u], map[v]));
                }
            }
        }
        assert!(build_general(12).unwrap().gamma_alignment().is_none());
    }

    #[test]
    fn simple_graph_dedups() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 0), (2, 2)]);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.degree(2), 0);
    }
}
