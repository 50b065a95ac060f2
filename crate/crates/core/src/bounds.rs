//! Lower/upper bounds and the selection caps that keep the DP windows
//! polynomial in the coefficient bound.

use num_bigint::BigUint;

use crate::model::ItemType;
use crate::preprocess::{NormalizedInstance, Partition};

/// Bounds and caps serialized into solver reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub greedy_lower: BigUint,
    pub dantzig_upper: BigUint,
    /// For each `N2` type (in partition order), the smallest `i >= 1` at
    /// which the determinant test stops holding. Diagnostic only.
    pub per_type_i_bound: Vec<u64>,
    /// The `N2` DP window cap, `R^3`.
    pub n2_weight_cap: u64,
}

/// Profit of the greedy fill: `floor(C / w_1)` copies of the break type,
/// then the residual filled greedily over the remaining types in density
/// order. A valid lower bound on the optimum.
pub fn greedy_lower_bound(inst: &NormalizedInstance, part: &Partition) -> BigUint {
    let types = inst.types();
    let b = types[part.break_index];
    let copies = inst.capacity() / b.weight;
    let mut profit = copies * b.profit;

    let mut residual = part.residual;
    for t in &types[1..] {
        let take = residual / t.weight;
        if take > 0 {
            profit += u64::from(take) * u64::from(t.profit);
            residual -= take * t.weight;
        }
    }
    profit
}

/// The linear-relaxation upper bound
/// `U = floor(C / w_1) * p_1 + floor(r * p_2 / w_2)`, degenerating to the
/// first term when only one type exists.
pub fn dantzig_upper_bound(inst: &NormalizedInstance, part: &Partition) -> BigUint {
    let types = inst.types();
    let b = types[part.break_index];
    let mut upper = (inst.capacity() / b.weight) * b.profit;
    if let Some(second) = types.get(1) {
        upper += u64::from(part.residual) * u64::from(second.profit) / u64::from(second.weight);
    }
    upper
}

/// The determinant test deciding membership of a lower-density type `j` in
/// the cap set for a given `i`: true iff
/// `det [[p_j, w_j - r/i], [p_b, w_b]] > 0`, evaluated exactly after
/// clearing the denominator as `i * (p_j*w_b - p_b*w_j) + p_b*r > 0`.
pub fn determinant_test(j: ItemType, b: ItemType, residual: u32, i: u64) -> bool {
    debug_assert!(i >= 1);
    let cross = i128::from(j.profit) * i128::from(b.weight)
        - i128::from(b.profit) * i128::from(j.weight);
    i128::from(i) * cross + i128::from(b.profit) * i128::from(residual) > 0
}

/// Smallest `i >= 1` at which [`determinant_test`] fails for type `j`; by
/// antitonicity the test holds exactly for `1 <= i <` this value.
pub fn critical_i(j: ItemType, b: ItemType, residual: u32) -> u64 {
    let gap = u64::from(b.profit) * u64::from(j.weight) - u64::from(j.profit) * u64::from(b.weight);
    debug_assert!(gap >= 1, "critical_i requires a strictly lower-density type");
    let num = u64::from(b.profit) * u64::from(residual);
    num.div_ceil(gap).max(1)
}

/// Per-type selection cap: each lower-density type may be assumed selected
/// at most `selection_bound(R) - 1 = R^2 - 1` times in some optimal
/// solution.
pub fn selection_bound(r: u32) -> u64 {
    u64::from(r) * u64::from(r)
}

/// Aggregate weight cap for the lower-density types, `R^3`; this is the
/// `DP1` window size.
pub fn n2_weight_cap(r: u32) -> u64 {
    u64::from(r).pow(3)
}

/// The sharper classical per-type cap `w_b - 1` (swap `w_b` copies of a
/// lower-density type for `w_j` copies of the break type). Exposed as a
/// diagnostic; the DP windows use the uniform caps above.
pub fn classical_selection_cap(break_type: ItemType) -> u64 {
    u64::from(break_type.weight).saturating_sub(1)
}

/// Assembles the report for a normalized, partitioned instance.
pub fn bound_report(inst: &NormalizedInstance, part: &Partition) -> BoundReport {
    let b = inst.types()[part.break_index];
    BoundReport {
        greedy_lower: greedy_lower_bound(inst, part),
        dantzig_upper: dantzig_upper_bound(inst, part),
        per_type_i_bound: part
            .n2_indices
            .iter()
            .map(|&j| critical_i(inst.types()[j], b, part.residual))
            .collect(),
        n2_weight_cap: n2_weight_cap(inst.coefficient_bound()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{evaluate, Instance};
    use crate::preprocess::{partition, NormalizedInstance};
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;

    fn ty(p: u32, w: u32) -> ItemType {
        ItemType::new(p, w)
    }

    fn prepared(r: u32, types: Vec<ItemType>, c: u64) -> (NormalizedInstance, Partition) {
        let inst = Instance::new(r, types, BigUint::from(c)).unwrap();
        let norm = NormalizedInstance::new(&inst);
        let part = partition(&norm);
        (norm, part)
    }

    /// Brute-force optimum over count vectors, for tiny instances.
    fn exhaustive_optimum(types: &[ItemType], capacity: u64) -> u64 {
        fn recurse(types: &[ItemType], idx: usize, left: u64, profit: u64, best: &mut u64) {
            if idx == types.len() {
                *best = (*best).max(profit);
                return;
            }
            let w = u64::from(types[idx].weight);
            let p = u64::from(types[idx].profit);
            let mut c = 0u64;
            while c * w <= left {
                recurse(types, idx + 1, left - c * w, profit + c * p, best);
                c += 1;
            }
        }
        let mut best = 0;
        recurse(types, 0, capacity, 0, &mut best);
        best
    }

    #[test]
    fn greedy_examples() {
        let (norm, part) = prepared(5, vec![ty(5, 3), ty(3, 2)], 100);
        assert_eq!(greedy_lower_bound(&norm, &part), BigUint::from(165u32));
        let (norm, part) = prepared(3, vec![ty(3, 2)], 7);
        assert_eq!(greedy_lower_bound(&norm, &part), BigUint::from(9u32));
    }

    #[test]
    fn dantzig_examples() {
        let (norm, part) = prepared(5, vec![ty(5, 3), ty(3, 2)], 100);
        assert_eq!(dantzig_upper_bound(&norm, &part), BigUint::from(166u32));
        let (norm, part) = prepared(3, vec![ty(3, 2)], 7);
        assert_eq!(dantzig_upper_bound(&norm, &part), BigUint::from(9u32));
    }

    #[test]
    fn sandwich_on_random_tiny_instances() {
        let mut s = 0xabcdu64;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            (s >> 33) as u32
        };
        for _ in 0..2000 {
            let r = next() % 6 + 1;
            let n = next() % 4 + 1;
            let types: Vec<ItemType> = (0..n).map(|_| ty(next() % r + 1, next() % r + 1)).collect();
            let c = u64::from(next() % 201);
            let (norm, part) = prepared(r, types, c);
            let optimum = exhaustive_optimum(norm.types(), c);
            let lower = greedy_lower_bound(&norm, &part).to_u64().unwrap();
            let upper = dantzig_upper_bound(&norm, &part).to_u64().unwrap();
            assert!(
                lower <= optimum && optimum <= upper,
                "types {:?} C={c}: {lower} <= {optimum} <= {upper}",
                norm.types()
            );
        }
    }

    #[test]
    fn determinant_examples() {
        let j = ty(3, 2);
        let b = ty(5, 3);
        assert!(determinant_test(j, b, 1, 4)); // 4*(9-10) + 5*1 = 1 > 0
        assert!(!determinant_test(j, b, 1, 5)); // 5*(-1) + 5 = 0
        for i in 1..=10 {
            assert!(!determinant_test(j, b, 0, i)); // r = 0: always false
        }
    }

    #[test]
    fn determinant_is_antitone_in_i() {
        let b = ty(5, 3);
        for pj in 1..=5u32 {
            for wj in 1..=5u32 {
                let j = ty(pj, wj);
                if !(i64::from(b.profit) * i64::from(wj) - i64::from(pj) * i64::from(b.weight) >= 1)
                {
                    continue; // not strictly lower density
                }
                for r in 0..3u32 {
                    let mut seen_false = false;
                    for i in 1..=30u64 {
                        let holds = determinant_test(j, b, r, i);
                        if seen_false {
                            assert!(!holds, "test became true again at i={i}");
                        }
                        if !holds {
                            seen_false = true;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn critical_i_matches_determinant_flip() {
        let b = ty(5, 3);
        for pj in 1..=5u32 {
            for wj in 1..=5u32 {
                let j = ty(pj, wj);
                let gap = i64::from(b.profit) * i64::from(wj) - i64::from(pj) * i64::from(b.weight);
                if gap < 1 {
                    continue;
                }
                for r in 0..=2u32 {
                    let crit = critical_i(j, b, r);
                    assert!(!determinant_test(j, b, r, crit));
                    for i in 1..crit {
                        assert!(determinant_test(j, b, r, i));
                    }
                    // Any i satisfying the test stays below p_b * w_b.
                    assert!(crit <= u64::from(b.profit) * u64::from(b.weight) + 1);
                }
            }
        }
    }

    #[test]
    fn cap_values() {
        assert_eq!(selection_bound(5), 25);
        assert_eq!(selection_bound(1), 1);
        assert_eq!(n2_weight_cap(5), 125);
        assert_eq!(n2_weight_cap(1), 1);
        assert_eq!(classical_selection_cap(ty(5, 3)), 2);
    }

    #[test]
    fn caps_admit_an_optimal_solution_on_tiny_instances() {
        // For R <= 4, C <= 300 samples: some optimal solution selects each
        // lower-density type at most R^2 - 1 times with N2 weight <= R^3.
        let mut s = 0x77aau64;
        let mut next = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            (s >> 33) as u32
        };
        for _ in 0..300 {
            let r = next() % 4 + 1;
            let n = next() % 4 + 1;
            let types: Vec<ItemType> = (0..n).map(|_| ty(next() % r + 1, next() % r + 1)).collect();
            let c = u64::from(next() % 301);
            let inst = Instance::new(r, types, BigUint::from(c)).unwrap();
            let norm = NormalizedInstance::new(&inst);
            let part = partition(&norm);
            let optimum = exhaustive_optimum(norm.types(), c);

            let cap = selection_bound(r) - 1;
            let weight_cap = n2_weight_cap(r).min(c);
            let best_capped = best_with_caps(&norm, &part, cap, weight_cap, c);
            assert_eq!(
                best_capped, optimum,
                "caps exclude every optimal solution for {:?} C={c}",
                norm.types()
            );
        }
    }

    /// Max profit when each N2 count is at most `cap` and N2 weight at most
    /// `weight_cap`; N1 types are unrestricted. Exhaustive over N2 vectors.
    fn best_with_caps(
        norm: &NormalizedInstance,
        part: &Partition,
        cap: u64,
        weight_cap: u64,
        c: u64,
    ) -> u64 {
        let types = norm.types();
        let n1: Vec<ItemType> = part.n1_indices.iter().map(|&j| types[j]).collect();
        let n2: Vec<ItemType> = part.n2_indices.iter().map(|&j| types[j]).collect();
        let n1_best = crate::dp::build_table(&n1, c as usize);

        fn recurse(
            n2: &[ItemType],
            idx: usize,
            weight: u64,
            profit: u64,
            cap: u64,
            weight_cap: u64,
            c: u64,
            n1_best: &crate::dp::DpTable,
            best: &mut u64,
        ) {
            if idx == n2.len() {
                let rest = n1_best.profit((c - weight) as usize);
                *best = (*best).max(profit + rest);
                return;
            }
            let w = u64::from(n2[idx].weight);
            let p = u64::from(n2[idx].profit);
            let mut k = 0u64;
            while k <= cap && weight + k * w <= weight_cap.min(c) {
                recurse(
                    n2,
                    idx + 1,
                    weight + k * w,
                    profit + k * p,
                    cap,
                    weight_cap,
                    c,
                    n1_best,
                    best,
                );
                k += 1;
            }
        }
        let mut best = 0;
        recurse(&n2, 0, 0, 0, cap, weight_cap, c, &n1_best, &mut best);
        best
    }

    #[test]
    fn report_collects_everything() {
        let (norm, part) = prepared(5, vec![ty(5, 3), ty(3, 2), ty(4, 5)], 100);
        let report = bound_report(&norm, &part);
        assert_eq!(report.greedy_lower, BigUint::from(165u32));
        assert_eq!(report.dantzig_upper, BigUint::from(166u32));
        assert_eq!(report.n2_weight_cap, 125);
        assert_eq!(report.per_type_i_bound.len(), part.n2_indices.len());
        assert!(report.greedy_lower <= report.dantzig_upper);
        // evaluate() on the known optimum sits inside the sandwich.
        let inst = Instance::new(
            5,
            vec![ty(5, 3), ty(3, 2), ty(4, 5)],
            BigUint::from(100u32),
        )
        .unwrap();
        let sol = evaluate(
            &inst,
            &[BigUint::from(32u32), BigUint::from(2u32), BigUint::from(0u32)],
        )
        .unwrap();
        assert!(report.greedy_lower <= sol.objective && sol.objective <= report.dantzig_upper);
    }
}
