//! Benchmark-only crate; see `benches/planes.rs` for the criterion
//! benchmarks covering plane construction, exact determinants, exhaustive
//! enumeration, and the frame-based magic construction.
