/// Enumeration and memory caps. Exceeding a cap yields [`Error::Capacity`],
/// never a silently truncated result.
///
/// [`Error::Capacity`]: crate::error::Error::Capacity
#[derive(Debug, Clone, Copy)]
pub struct Budgets {
    /// Maximum number of DP states (the partial-syndrome space Q^(k-1)).
    pub max_dp_states: u64,
    /// Above this many states the DP table switches from a dense array to a
    /// sparse map.
    pub dense_states: u64,
    /// Maximum DP work (vars x states x field order) before the extension
    /// counter dispatches to a closed form, or errors if none applies.
    pub max_dp_cost: u128,
    /// Maximum node count for explicit enumerations: subsets, codewords,
    /// short-vector multisets.
    pub max_enum: u64,
    /// Maximum entries of a take/skip table kept for witness reconstruction.
    pub max_table_entries: u64,
    /// Maximum affine representatives visited by a smoothness scan.
    pub max_scan: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_dp_states: 100_000_000,
            dense_states: 1_000_000,
            max_dp_cost: 200_000_000,
            max_enum: 10_000_000,
            max_table_entries: 50_000_000,
            max_scan: 100_000_000,
        }
    }
}
