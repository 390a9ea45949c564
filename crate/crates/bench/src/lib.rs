//! Benchmarks for `lcreg-core`; see `benches/`.
