//! Benchmark-only crate; see `benches/treeshift.rs`.
