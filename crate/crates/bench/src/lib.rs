//! Criterion benchmarks for the exact kernels of `tsi-core`; see `benches/`.
