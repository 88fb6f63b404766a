//! Criterion benchmarks for `vacuumpair`; see `benches/`.
