//! Criterion benchmarks for graphlab; see `benches/`.
