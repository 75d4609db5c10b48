//! Criterion benchmarks for partgal live under `benches/`; run them with
//! `cargo bench -p partgal-bench`.
