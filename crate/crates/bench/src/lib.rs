//! Criterion benchmarks for the `nakayama` crate live in `benches/`.
