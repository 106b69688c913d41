//! Shared inputs for the criterion benches.

use howe_core::partitions::Partition;

/// `(n-1, n-2, ..., 0)`, truncated to width `k`.
pub fn staircase(n: usize, k: usize) -> Partition {
    let parts = (0..n).map(|i| ((n - 1 - i) as i64).min(k as i64)).collect();
    Partition::new(parts).expect("staircase is a partition")
}
