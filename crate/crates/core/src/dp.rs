//! Bounded-window unbounded knapsack DP with traceback.
//!
//! `profit[k]` is the maximum profit of any multiset of the given types
//! with total weight at most `k` (the zero-initialized array gives exactly
//! this monotone "<= k" semantics, which the combination step relies on).
//! `trace[k]` records the 1-based index of the last type added at `k`,
//! with 0 meaning no selection.

use crate::model::ItemType;

/// Deterministic work counters for a table build. `visits` counts inner
/// loop iterations and `writes` counts accepted improvements; both depend
/// only on the type list and the window, never on the capacity.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DpStats {
    pub visits: u64,
    pub writes: u64,
}

/// A filled DP table over `0..=window` for a fixed type list.
#[derive(Debug, Clone)]
pub struct DpTable {
    types: Vec<ItemType>,
    profit: Vec<u64>,
    trace: Vec<u32>,
    stats: DpStats,
}

impl DpTable {
    pub fn window(&self) -> usize {
        self.profit.len() - 1
    }

    /// Number of allocated cells, `window + 1`.
    pub fn cells(&self) -> u64 {
        self.profit.len() as u64
    }

    pub fn profit(&self, k: usize) -> u64 {
        self.profit[k]
    }

    pub fn profits(&self) -> &[u64] {
        &self.profit
    }

    pub fn types(&self) -> &[ItemType] {
        &self.types
    }

    pub fn stats(&self) -> DpStats {
        self.stats
    }
}

/// Builds the table in time proportional to `types.len() * window` and
/// space proportional to `window`. An empty type list yields the all-zero
/// table.
pub fn build_table(types: &[ItemType], window: usize) -> DpTable {
    let mut profit = vec![0u64; window + 1];
    let mut trace = vec![0u32; window + 1];
    let mut stats = DpStats::default();

    for (j, t) in types.iter().enumerate() {
        let w = t.weight as usize;
        let p = u64::from(t.profit);
        if w > window {
            continue;
        }
        stats.visits += (window - w + 1) as u64;
        for k in w..=window {
            let candidate = profit[k - w] + p;
            // Strict improvement only, so the lowest type index among
            // equal-profit derivations is retained by iteration order.
            if candidate > profit[k] {
                profit[k] = candidate;
                trace[k] = (j + 1) as u32;
                stats.writes += 1;
            }
        }
    }

    DpTable {
        types: types.to_vec(),
        profit,
        trace,
        stats,
    }
}

/// Recovers per-type counts achieving `profit[k]` with total weight at most
/// `k`. Walks the trace until it reaches an index with no recorded
/// selection (`trace[t] = 0`, where the profit is 0).
pub fn traceback(table: &DpTable, k: usize) -> Vec<u64> {
    assert!(k <= table.window());
    let mut counts = vec![0u64; table.types.len()];
    let mut t = k;
    loop {
        let j = table.trace[t];
        if j == 0 {
            break;
        }
        let idx = (j - 1) as usize;
        counts[idx] += 1;
        let w = table.types[idx].weight as usize;
        debug_assert!(t >= w, "trace points below zero");
        debug_assert_eq!(
            table.profit[t],
            table.profit[t - w] + u64::from(table.types[idx].profit)
        );
        t -= w;
    }
    counts
}
