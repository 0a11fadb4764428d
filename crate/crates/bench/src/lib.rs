//! Criterion benchmarks for divlab live in `benches/`.
