//! Equal-density (`N1`) machinery: an exact-weight block witness, a bounded
//! DP window, and a scaled combination that answers arbitrarily large
//! budgets with machine-sized table lookups plus a handful of
//! arbitrary-precision operations.
//!
//! All `N1` types share the break density `p_1/w_1`, so profit is
//! proportional to weight and maximizing profit within a budget means
//! reaching the largest representable multiple of `g = gcd(W_1)` below it.
//! Every multiple of `g` at or above `(min W_1 - 1)(max W_1 - 1)` is
//! representable, and `t'` sits above that threshold by construction, so a
//! block of weight exactly `t'` always exists and can be repeated.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::dp::{build_table, traceback, DpTable};
use crate::model::ItemType;

/// The `N1` solving plan: the repeating block `x'` of weight exactly `t'`
/// and a DP table whose window `2R^2 + 2R` covers every remainder lookup
/// `t'' = t' + (budget mod t') < 2t'`.
#[derive(Debug, Clone)]
pub struct N1Plan {
    types: Vec<ItemType>,
    t_prime: u64,
    x_prime: Vec<u64>,
    x_prime_profit: u64,
    dp2: DpTable,
}

impl N1Plan {
    pub fn types(&self) -> &[ItemType] {
        &self.types
    }

    pub fn t_prime(&self) -> u64 {
        self.t_prime
    }

    pub fn x_prime(&self) -> &[u64] {
        &self.x_prime
    }

    pub fn x_prime_profit(&self) -> u64 {
        self.x_prime_profit
    }

    pub fn dp2(&self) -> &DpTable {
        &self.dp2
    }

    /// Direct window threshold: budgets at most this value are answered by
    /// a single table lookup.
    pub fn window(&self) -> u64 {
        self.dp2.window() as u64
    }
}

/// Builds the plan: DP over window `2R^2 + 2R`, then traceback at `t'` for
/// the block witness. The traceback weight must equal `t'` exactly; a
/// shortfall would falsify the representability guarantee.
pub fn build_n1_plan(n1_types: &[ItemType], g: u32, t_prime: u64, r: u32) -> N1Plan {
    debug_assert!(!n1_types.is_empty());
    debug_assert!(t_prime % u64::from(g) == 0);
    let window = 2 * u64::from(r) * u64::from(r) + 2 * u64::from(r);
    debug_assert!(t_prime <= window);

    let dp2 = build_table(n1_types, window as usize);
    let x_prime = traceback(&dp2, t_prime as usize);
    let x_weight: u64 = x_prime
        .iter()
        .zip(n1_types)
        .map(|(c, t)| c * u64::from(t.weight))
        .sum();
    assert_eq!(
        x_weight, t_prime,
        "no exact-weight block at t'={t_prime} for weights {:?} (gcd {g})",
        n1_types.iter().map(|t| t.weight).collect::<Vec<_>>()
    );
    let x_prime_profit = dp2.profit(t_prime as usize);

    N1Plan {
        types: n1_types.to_vec(),
        t_prime,
        x_prime,
        x_prime_profit,
        dp2,
    }
}

/// Sufficient representability condition: `target` is a nonnegative
/// integer combination of `weights` whenever `g | target` and
/// `target >= (min - 1) * (max - 1)`. Sufficient, not necessary.
pub fn frobenius_guaranteed(target: u64, weights: &[u32], g: u32) -> bool {
    debug_assert!(!weights.is_empty());
    let min = u64::from(*weights.iter().min().unwrap());
    let max = u64::from(*weights.iter().max().unwrap());
    target % u64::from(g) == 0 && target >= (min - 1) * (max - 1)
}

/// Best equal-density fill for an arbitrary-precision budget.
///
/// Budgets within the DP window are answered directly. Beyond it, with
/// `m = budget mod t'`, `t'' = t' + m` and `q = floor(budget / t')`, the
/// answer is the remainder fill at `t''` plus `q - 1` copies of the block;
/// the combined weight is the largest representable multiple of `g` not
/// exceeding the budget.
pub fn best_n1_for_budget(plan: &N1Plan, budget: &BigUint) -> (BigUint, Vec<BigUint>) {
    if let Some(small) = budget.to_u64().filter(|&b| b <= plan.window()) {
        let profit = plan.dp2.profit(small as usize);
        let counts = traceback(&plan.dp2, small as usize)
            .into_iter()
            .map(BigUint::from)
            .collect();
        return (BigUint::from(profit), counts);
    }

    let t_prime = BigUint::from(plan.t_prime);
    let (q, m) = budget.div_rem(&t_prime);
    let m = m.to_u64().expect("remainder below t'");
    let t_second = (plan.t_prime + m) as usize;
    debug_assert!(t_second <= plan.dp2.window());
    // budget > window >= 2 t', so q >= 2 and the multiplier is positive.
    let multiplier = q - 1u32;

    let profit = BigUint::from(plan.dp2.profit(t_second)) + &multiplier * plan.x_prime_profit;
    let counts = traceback(&plan.dp2, t_second)
        .into_iter()
        .zip(&plan.x_prime)
        .map(|(base, block)| BigUint::from(base) + &multiplier * *block)
        .collect();
    (profit, counts)
}

/// Profit-only variant of [`best_n1_for_budget`].
pub fn best_n1_profit(plan: &N1Plan, budget: &BigUint) -> BigUint {
    best_n1_for_budget(plan, budget).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::{find_t_prime, gcd_list};

    fn ty(p: u32, w: u32) -> ItemType {
        ItemType::new(p, w)
    }

    fn weight_of(counts: &[BigUint], types: &[ItemType]) -> BigUint {
        counts
            .iter()
            .zip(types)
            .map(|(c, t)| c * t.weight)
            .fold(BigUint::zero(), |a, b| a + b)
    }

    fn profit_of(counts: &[BigUint], types: &[ItemType]) -> BigUint {
        counts
            .iter()
            .zip(types)
            .map(|(c, t)| c * t.profit)
            .fold(BigUint::zero(), |a, b| a + b)
    }

    #[test]
    fn plan_block_has_exact_weight() {
        let types = [ty(2, 4), ty(3, 6)];
        let plan = build_n1_plan(&types, 2, 38, 6);
        let weight: u64 = plan
            .x_prime()
            .iter()
            .zip(&types)
            .map(|(c, t)| c * u64::from(t.weight))
            .sum();
        assert_eq!(weight, 38);
        assert_eq!(plan.x_prime_profit(), 19);
    }

    #[test]
    fn plan_single_unit_type() {
        let plan = build_n1_plan(&[ty(1, 1)], 1, 2, 1);
        assert_eq!(plan.x_prime(), &[2]);
    }

    #[test]
    fn plan_single_weight_three() {
        let plan = build_n1_plan(&[ty(3, 3)], 3, 12, 3);
        assert_eq!(plan.x_prime(), &[4]);
    }

    #[test]
    fn frobenius_guarantee_examples() {
        assert!(frobenius_guaranteed(38, &[4, 6], 2));
        assert!(!frobenius_guaranteed(2, &[4, 6], 2)); // below threshold
        assert!(!frobenius_guaranteed(13, &[4, 6], 2)); // parity
        // 2 is indeed unrepresentable over {4, 6}.
        let table = build_table(&[ty(2, 4), ty(3, 6)], 2);
        assert_eq!(table.profit(2), 0);
    }

    #[test]
    fn exactness_at_t_prime_across_gcd_grid() {
        // Equal-density families: weights are the multiples of g up to R,
        // profits equal to weights (density 1), so gcd(W1) = g.
        for r in 1u32..=12 {
            for g in 1..=r {
                let types: Vec<ItemType> = (1..=r / g).map(|k| ty(k * g, k * g)).collect();
                let gcd = gcd_list(&types.iter().map(|t| u64::from(t.weight)).collect::<Vec<_>>());
                assert_eq!(gcd, u64::from(g));
                let t_prime = find_t_prime(g, r);
                let plan = build_n1_plan(&types, g, t_prime, r);
                let weight: u64 = plan
                    .x_prime()
                    .iter()
                    .zip(&types)
                    .map(|(c, t)| c * u64::from(t.weight))
                    .sum();
                assert_eq!(weight, t_prime, "g={g} r={r}");
            }
        }
    }

    #[test]
    fn budget_example_matches_full_dp() {
        let types = [ty(2, 4), ty(3, 6)];
        let plan = build_n1_plan(&types, 2, 38, 6);
        let budget = BigUint::from(1000u32);
        let (profit, counts) = best_n1_for_budget(&plan, &budget);
        // Independent full-capacity DP over the same types.
        let oracle = build_table(&types, 1000);
        assert_eq!(oracle.profit(1000), 500);
        assert_eq!(profit, BigUint::from(500u32));
        assert!(weight_of(&counts, &types) <= budget);
        assert_eq!(profit_of(&counts, &types), profit);
    }

    #[test]
    fn budget_zero() {
        let plan = build_n1_plan(&[ty(2, 4), ty(3, 6)], 2, 38, 6);
        let (profit, counts) = best_n1_for_budget(&plan, &BigUint::zero());
        assert!(profit.is_zero());
        assert!(counts.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn unit_weight_budget_ten_to_eighteen() {
        let plan = build_n1_plan(&[ty(1, 1)], 1, 2, 1);
        let budget = BigUint::from(10u32).pow(18);
        let (profit, counts) = best_n1_for_budget(&plan, &budget);
        assert_eq!(profit, budget);
        assert_eq!(counts[0], budget);
    }

    #[test]
    fn budget_sweep_matches_full_dp_oracle() {
        // Exhaustive consistency: equal-density sets with weights <= 8,
        // budgets to 5000, against a full-capacity DP.
        let families: Vec<Vec<ItemType>> = vec![
            vec![ty(1, 1)],
            vec![ty(3, 3)],
            vec![ty(2, 4), ty(3, 6)],
            vec![ty(2, 4), ty(4, 8)],
            vec![ty(3, 6), ty(4, 8)],
            vec![ty(1, 2), ty(3, 6), ty(4, 8)],
            vec![ty(5, 5), ty(7, 7)],
            vec![ty(2, 6), ty(1, 3)],
        ];
        for types in families {
            let weights: Vec<u64> = types.iter().map(|t| u64::from(t.weight)).collect();
            let g = gcd_list(&weights) as u32;
            let r = types
                .iter()
                .map(|t| t.profit.max(t.weight))
                .max()
                .unwrap();
            let t_prime = find_t_prime(g, r);
            let plan = build_n1_plan(&types, g, t_prime, r);
            let oracle = build_table(&types, 5000);
            let mut last = BigUint::zero();
            for budget in 0u64..=5000 {
                let b = BigUint::from(budget);
                let (profit, counts) = best_n1_for_budget(&plan, &b);
                assert_eq!(
                    profit,
                    BigUint::from(oracle.profit(budget as usize)),
                    "types {types:?} budget {budget}"
                );
                assert!(weight_of(&counts, &types) <= b);
                assert_eq!(profit_of(&counts, &types), profit);
                // Monotone in the budget.
                assert!(profit >= last);
                last = profit;
                // Closed form beyond R^2: profit * w1 = p1 * floor(B/g) * g.
                let r_sq = u64::from(r) * u64::from(r);
                if budget >= r_sq {
                    let reachable = budget / u64::from(g) * u64::from(g);
                    assert_eq!(
                        &profit * types[0].weight,
                        BigUint::from(reachable) * types[0].profit
                    );
                }
            }
        }
    }

    #[test]
    fn huge_budget_closed_form() {
        let types = [ty(2, 4), ty(3, 6)];
        let plan = build_n1_plan(&types, 2, 38, 6);
        // 10^40 + 3: largest even weight below it is 10^40 + 2.
        let budget = BigUint::from(10u32).pow(40) + 3u32;
        let (profit, counts) = best_n1_for_budget(&plan, &budget);
        let reachable = BigUint::from(10u32).pow(40) + 2u32;
        assert_eq!(&profit * 2u32, reachable); // density 1/2
        assert_eq!(weight_of(&counts, &types), reachable);
        assert!(weight_of(&counts, &types) <= budget);
    }
}
