//! Closed forms in `k` for Γ_k, and a sweep that checks each against the
//! definition-level computation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::pow;
use serde::{Deserialize, Serialize};

use crate::exact::IndexValue;
use crate::graph::{build_gamma, Graph, GraphError};
use crate::indices::{self, IndexContext};
use crate::metric::MetricError;

/// Largest `k` for which the integer formulas below stay inside `u64`.
pub const MAX_FORMULA_K: u32 = 40;

pub fn order_formula(k: u32) -> u64 {
    1u64 << k
}

pub fn size_formula(k: u32) -> u64 {
    3u64.pow(k) - 2u64.pow(k)
}

pub fn count_by_omega(k: u32, j: u32) -> u64 {
    if j > k {
        return 0;
    }
    let j = j.min(k - j) as u64;
    let k = k as u64;
    (0..j).fold(1u64, |acc, i| acc * (k - i) / (i + 1))
}

pub fn degree_formula(k: u32, omega: u32) -> u64 {
    assert!(omega <= k, "omega {omega} exceeds k {k}");
    if omega == 0 || omega == k {
        (1u64 << k) - 1
    } else {
        (1u64 << omega) + (1u64 << (k - omega)) - 2
    }
}

/// Edge count built up one prime at a time: each divisor `v` of Γ_{k-1}
/// contributes `deg(v) + 1` edges through `v·p_k`.
pub fn size_recursive(k: u32) -> u64 {
    let mut size = 0u64;
    for prev in 0..k {
        let added: u64 = (0..=prev)
            .map(|j| count_by_omega(prev, j) * (degree_formula(prev, j) + 1))
            .sum();
        size += added;
    }
    size
}

fn two_pow(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow(BigInt::from(2), e as usize))
    } else {
        BigRational::new(BigInt::from(1), pow(BigInt::from(2), (-e) as usize))
    }
}

fn three_pow(k: u32) -> BigRational {
    BigRational::from_integer(pow(BigInt::from(3), k as usize))
}

pub fn wiener_formula(k: u32) -> IndexValue {
    IndexValue::from_rational(two_pow(2 * k as i64) - three_pow(k))
}

pub fn hyper_wiener_formula(k: u32) -> IndexValue {
    let k = k as i64;
    let one = BigRational::from_integer(BigInt::from(1));
    let two = BigRational::from_integer(BigInt::from(2));
    let value = two_pow(k - 1) * (two_pow(k + 1) + two_pow(k) + one) - two * three_pow(k as u32);
    IndexValue::from_rational(value)
}

pub fn harary_formula(k: u32) -> IndexValue {
    let ki = k as i64;
    let three = BigRational::from_integer(BigInt::from(3));
    let value = (two_pow(ki - 1) * (two_pow(ki) - three) + three_pow(k)) / two_pow(1);
    IndexValue::from_rational(value)
}

pub fn zagreb1_formula(k: u32) -> IndexValue {
    let square = |x: u64| BigInt::from(x) * BigInt::from(x);
    let mut total = BigInt::from(2) * square((1u64 << k) - 1);
    for j in 1..k {
        total += BigInt::from(count_by_omega(k, j)) * square(degree_formula(k, j));
    }
    IndexValue::Integer(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaId {
    Order,
    Degree,
    Size,
    SizeRecursive,
    CountByOmega,
    Wiener,
    HyperWiener,
    Harary,
    Zagreb1,
}

impl FormulaId {
    pub const ALL: [FormulaId; 9] = [
        FormulaId::Order,
        FormulaId::Degree,
        FormulaId::Size,
        FormulaId::SizeRecursive,
        FormulaId::CountByOmega,
        FormulaId::Wiener,
        FormulaId::HyperWiener,
        FormulaId::Harary,
        FormulaId::Zagreb1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::Order => "order",
            FormulaId::Degree => "degree",
            FormulaId::Size => "size",
            FormulaId::SizeRecursive => "size_recursive",
            FormulaId::CountByOmega => "count_by_omega",
            FormulaId::Wiener => "wiener",
            FormulaId::HyperWiener => "hyper_wiener",
            FormulaId::Harary => "harary",
            FormulaId::Zagreb1 => "zagreb1",
        }
    }
}

/// One formula evaluated at one `k`, next to the value obtained by
/// enumerating the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub formula: FormulaId,
    pub k: u32,
    pub formula_value: String,
    pub oracle_value: String,
    pub pass: bool,
}

impl fmt::Display for FormulaCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (status, rel) = if self.pass {
            ("PASS", "==")
        } else {
            ("FAIL", "!=")
        };
        write!(
            f,
            "[{status}] k={} {}: formula {} {rel} oracle {}",
            self.k,
            self.formula.name(),
            self.formula_value,
            self.oracle_value,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Metric(#[from] MetricError),
}

fn check<T: PartialEq + fmt::Display>(formula: FormulaId, k: u32, f: T, o: T) -> FormulaCheck {
    FormulaCheck {
        formula,
        k,
        pass: f == o,
        formula_value: f.to_string(),
        oracle_value: o.to_string(),
    }
}

/// Renders a degree multiset as `7×2 4×6`, ordered by first appearance.
fn multiset(seq: &[u64]) -> String {
    let mut seen: Vec<(u64, usize)> = Vec::new();
    for &d in seq {
        match seen.iter_mut().find(|(v, _)| *v == d) {
            Some((_, c)) => *c += 1,
            None => seen.push((d, 1)),
        }
    }
    seen.iter()
        .map(|(v, c)| format!("{v}×{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn list(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(","))
}

/// Every formula at `k` against adjacency enumeration and BFS distances.
pub fn verify_k(k: u32) -> Result<Vec<FormulaCheck>, VerifyError> {
    let g = build_gamma(k as usize, None)?;
    let ctx = IndexContext::new(&g)?;
    let edge_count = ctx.edges().len() as u64;

    let counted_degrees: Vec<u64> = (0..g.order()).map(|u| g.degree(u) as u64).collect();
    let formula_degrees: Vec<u64> = (0..g.order())
        .map(|u| degree_formula(k, g.omega(u) as u32))
        .collect();
    let degree_check = FormulaCheck {
        formula: FormulaId::Degree,
        k,
        pass: counted_degrees == formula_degrees,
        formula_value: multiset(&formula_degrees),
        oracle_value: multiset(&counted_degrees),
    };

    let mut by_omega = vec![0u64; k as usize + 1];
    for v in g.vertices() {
        by_omega[v.omega()] += 1;
    }
    let formula_by_omega: Vec<u64> = (0..=k).map(|j| count_by_omega(k, j)).collect();

    Ok(vec![
        check(FormulaId::Order, k, order_formula(k), g.order() as u64),
        degree_check,
        check(FormulaId::Size, k, size_formula(k), edge_count),
        check(FormulaId::SizeRecursive, k, size_recursive(k), edge_count),
        FormulaCheck {
            formula: FormulaId::CountByOmega,
            k,
            pass: formula_by_omega == by_omega,
            formula_value: list(&formula_by_omega),
            oracle_value: list(&by_omega),
        },
        check(
            FormulaId::Wiener,
            k,
            wiener_formula(k),
            indices::wiener(&ctx),
        ),
        check(
            FormulaId::HyperWiener,
            k,
            hyper_wiener_formula(k),
            indices::hyper_wiener(&ctx),
        ),
        check(
            FormulaId::Harary,
            k,
            harary_formula(k),
            indices::harary(&ctx),
        ),
        check(
            FormulaId::Zagreb1,
            k,
            zagreb1_formula(k),
            indices::zagreb1(&ctx),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_subsets_of_size(k: u32, j: u32) -> u64 {
        (0..1u32 << k).filter(|m| m.count_ones() == j).count() as u64
    }

    #[test]
    fn counting_examples() {
        assert_eq!(size_formula(3), 19);
        assert_eq!(order_formula(0), 1);
        assert_eq!(count_by_omega(5, 2), 10);
        assert_eq!(count_by_omega(5, 2), brute_subsets_of_size(5, 2));
        for k in 0..=12 {
            for j in 0..=k {
                assert_eq!(count_by_omega(k, j), brute_subsets_of_size(k, j));
            }
        }
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degree_formula(4, 2), 6);
        assert_eq!(degree_formula(3, 0), 7);
        for k in 0..=10 {
            assert_eq!(degree_formula(k, 0), degree_formula(k, k));
        }
    }

    #[test]
    fn recursive_size() {
        assert_eq!(size_recursive(1), 1);
        assert_eq!(size_recursive(3), 19);
        assert_eq!(size_recursive(10), 58025);
        for k in 1..=12 {
            assert_eq!(size_recursive(k), size_formula(k));
        }
    }

    #[test]
    fn index_formulas_at_three() {
        assert_eq!(wiener_formula(3), IndexValue::from(37u64));
        assert_eq!(hyper_wiener_formula(3), IndexValue::from(46u64));
        assert_eq!(
            harary_formula(3),
            IndexValue::from_rational(BigRational::new(47.into(), 2.into()))
        );
        assert_eq!(zagreb1_formula(3), IndexValue::from(194u64));
        assert_eq!(zagreb1_formula(4), IndexValue::from(1178u64));
    }

    #[test]
    fn index_formulas_vanish_at_zero() {
        for v in [
            wiener_formula(0),
            hyper_wiener_formula(0),
            harary_formula(0),
            zagreb1_formula(0),
        ] {
            assert_eq!(v, IndexValue::zero());
        }
    }

    #[test]
    fn verify_small_k() {
        for k in 0..=6 {
            let checks = verify_k(k).unwrap();
            assert_eq!(checks.len(), FormulaId::ALL.len());
            assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        }
        let line = verify_k(3)
            .unwrap()
            .into_iter()
            .find(|c| c.formula == FormulaId::Wiener)
            .unwrap()
            .to_string();
        assert!(line.contains("wiener: formula 37 == oracle 37"), "{line}");
    }
}
