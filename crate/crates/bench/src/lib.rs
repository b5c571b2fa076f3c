//! Criterion benchmarks for `gapsum-core`; see `benches/`.
