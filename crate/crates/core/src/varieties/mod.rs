//! Exact point counting for power-sum varieties.
