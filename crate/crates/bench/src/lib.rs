//! Criterion benchmarks for `zetalab-core`; see `benches/`.
