//! The capacity-independent exact solver.
//!
//! Pipeline: normalize and partition, build `DP1` over the lower-density
//! types (window `min(R^3, C)`), build the equal-density plan (`DP2`,
//! window `2R^2 + 2R`), then scan `t` over the `DP1` window maximizing
//! `DP1[t] + best_n1(C - t)` and merge the two tracebacks.
//!
//! The scan groups `t` positions into runs with a constant block
//! multiplier, so only a handful of arbitrary-precision operations happen
//! per solve regardless of how many digits the capacity has; everything
//! else stays on machine words.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::time::{Duration, Instant};

use crate::bounds::{bound_report, n2_weight_cap, BoundReport};
use crate::dp::{build_table, traceback, DpTable};
use crate::error::Result;
use crate::frobenius::{best_n1_for_budget, build_n1_plan, N1Plan};
use crate::model::{evaluate, Instance, ItemType, Solution};
use crate::preprocess::{partition, NormalizedInstance};

/// Deterministic work counters for one solve. Every field depends only on
/// the coefficient bound and the (normalized) type list whenever the
/// capacity is at least `R^3`; none depends on the magnitude of `C` beyond
/// the window clamp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Cells allocated by `DP1`: `min(R^3, C) + 1`.
    pub dp1_cells: u64,
    /// Cells allocated by `DP2`: `2R^2 + 2R + 1`.
    pub dp2_cells: u64,
    pub dp1_visits: u64,
    pub dp1_writes: u64,
    pub dp2_visits: u64,
    pub dp2_writes: u64,
    /// Scan positions examined: `min(R^3, C) + 1`.
    pub scan_iters: u64,
}

impl SolveStats {
    /// Total DP inner-loop iterations (the headline update counter).
    pub fn dp_updates(&self) -> u64 {
        self.dp1_visits + self.dp2_visits
    }

    /// Total table cells allocated.
    pub fn table_cells(&self) -> u64 {
        self.dp1_cells + self.dp2_cells
    }
}

/// Wall-clock time per phase.
#[derive(Debug, Clone, Copy, Default)]
pub struct PhaseTimings {
    pub preprocess: Duration,
    pub dp1: Duration,
    pub plan: Duration,
    pub scan: Duration,
    pub extract: Duration,
    pub total: Duration,
}

/// Solution plus bounds, counters, and timings.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub solution: Solution,
    pub bounds: BoundReport,
    pub stats: SolveStats,
    pub timings: PhaseTimings,
}

/// Solves the instance exactly. The returned solution is feasible and its
/// objective equals the optimum; counts follow the original type order.
pub fn solve(inst: &Instance) -> Solution {
    solve_with_report(inst).solution
}

/// As [`solve`], returning bounds, work counters, and per-phase timings.
pub fn solve_with_report(inst: &Instance) -> SolveOutcome {
    let start = Instant::now();
    let norm = NormalizedInstance::new(inst);
    let part = partition(&norm);
    let bounds = bound_report(&norm, &part);
    let r = norm.coefficient_bound();
    let preprocess = start.elapsed();

    // DP1: lower-density types over window min(R^3, C).
    let phase = Instant::now();
    let r_cubed = n2_weight_cap(r);
    let window = match norm.capacity().to_u64() {
        Some(c) if c < r_cubed => c as usize,
        _ => r_cubed as usize,
    };
    let n2_types: Vec<ItemType> = part.n2_indices.iter().map(|&j| norm.types()[j]).collect();
    let dp1 = build_table(&n2_types, window);
    let dp1_time = phase.elapsed();

    // DP2 and the repeating block for the equal-density types.
    let phase = Instant::now();
    let n1_types: Vec<ItemType> = part.n1_indices.iter().map(|&j| norm.types()[j]).collect();
    let plan = build_n1_plan(&n1_types, part.gcd_w1, part.t_prime, r);
    let plan_time = phase.elapsed();

    let phase = Instant::now();
    let k = scan_argmax(&dp1, &plan, norm.capacity(), window);
    let scan_time = phase.elapsed();

    // Merge the two tracebacks and verify against a fresh evaluation.
    let phase = Instant::now();
    let budget = norm.capacity() - k;
    let (n1_profit, n1_counts) = best_n1_for_budget(&plan, &budget);
    let n2_counts = traceback(&dp1, k);

    let mut counts = vec![BigUint::zero(); norm.original_len()];
    for (slot, &j) in part.n2_indices.iter().enumerate() {
        counts[norm.source_index()[j]] = BigUint::from(n2_counts[slot]);
    }
    for (slot, &j) in part.n1_indices.iter().enumerate() {
        counts[norm.source_index()[j]] = n1_counts[slot].clone();
    }

    let objective = BigUint::from(dp1.profit(k)) + &n1_profit;
    let solution = evaluate(inst, &counts).expect("solver output must be feasible");
    assert_eq!(
        solution.objective, objective,
        "merged counts disagree with the scanned objective"
    );
    let extract = phase.elapsed();

    let stats = SolveStats {
        dp1_cells: dp1.cells(),
        dp2_cells: plan.dp2().cells(),
        dp1_visits: dp1.stats().visits,
        dp1_writes: dp1.stats().writes,
        dp2_visits: plan.dp2().stats().visits,
        dp2_writes: plan.dp2().stats().writes,
        scan_iters: (window + 1) as u64,
    };

    SolveOutcome {
        solution,
        bounds,
        stats,
        timings: PhaseTimings {
            preprocess,
            dp1: dp1_time,
            plan: plan_time,
            scan: scan_time,
            extract,
            total: start.elapsed(),
        },
    }
}

/// Validates raw parts and solves; convenience for callers holding a file.
pub fn solve_checked(
    coefficient_bound: u32,
    types: Vec<ItemType>,
    capacity: BigUint,
) -> Result<Solution> {
    let inst = Instance::new(coefficient_bound, types, capacity)?;
    Ok(solve(&inst))
}

/// Argmax of `DP1[t] + best_n1(C - t)` over `0 <= t <= window`, smallest
/// `t` on ties.
///
/// Budgets above the `DP2` window are answered by the block combination
/// `DP2[t' + m] + (q - 1) * block_profit` with `q = floor((C - t) / t')`.
/// Positions sharing one `q` form a contiguous run in which the remainder
/// `m` decreases by one per step, so each run is scanned entirely on
/// machine words and contributes a single arbitrary-precision candidate.
fn scan_argmax(dp1: &DpTable, plan: &N1Plan, capacity: &BigUint, window: usize) -> usize {
    let small_window = plan.window();
    let t_prime = plan.t_prime();
    let block_profit = plan.x_prime_profit();

    // Positions t < n_big have budgets C - t exceeding the DP2 window.
    let n_big: usize = if *capacity <= BigUint::from(small_window) {
        0
    } else {
        match (capacity - small_window).to_u64() {
            Some(d) if d <= window as u64 => d as usize,
            _ => window + 1,
        }
    };

    let mut best: Option<(BigUint, usize)> = None;

    if n_big > 0 {
        let (q0, m0) = capacity.div_rem(&BigUint::from(t_prime));
        let mut q = q0;
        let mut run_start: usize = 0;
        let mut run_m: u64 = m0.to_u64().expect("remainder below t'");
        while run_start < n_big {
            let run_len = ((run_m + 1) as usize).min(n_big - run_start);
            let mut run_best: u64 = 0;
            let mut run_best_t: usize = run_start;
            for offset in 0..run_len {
                let t = run_start + offset;
                let m = run_m - offset as u64;
                let value = dp1.profit(t) + plan.dp2().profit((t_prime + m) as usize);
                if (offset == 0) || value > run_best {
                    run_best = value;
                    run_best_t = t;
                }
            }
            // q >= 2 whenever the budget exceeds the DP2 window >= 2t'.
            let candidate = BigUint::from(run_best) + (&q - 1u32) * block_profit;
            match &best {
                Some((value, _)) if *value >= candidate => {}
                _ => best = Some((candidate, run_best_t)),
            }
            run_start += run_len;
            run_m = t_prime - 1;
            q -= 1u32;
        }
    }

    if n_big <= window {
        // Small budgets: direct DP2 lookups, all on machine words.
        let mut budget = (capacity - n_big)
            .to_u64()
            .expect("small-mode budgets fit a machine word");
        let mut run_best: u64 = 0;
        let mut run_best_t: usize = n_big;
        for t in n_big..=window {
            let value = dp1.profit(t) + plan.dp2().profit(budget as usize);
            if t == n_big || value > run_best {
                run_best = value;
                run_best_t = t;
            }
            budget -= 1;
        }
        let candidate = BigUint::from(run_best);
        match &best {
            Some((value, _)) if *value >= candidate => {}
            _ => best = Some((candidate, run_best_t)),
        }
    }

    best.expect("scan covers at least t = 0").1
}
