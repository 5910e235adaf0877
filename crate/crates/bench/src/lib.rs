//! Benchmark helpers; see `benches/solvers.rs`.
