//! Benchmarks for `tmrec`; see `benches/`.
