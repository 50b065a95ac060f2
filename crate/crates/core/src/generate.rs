//! Seeded benchmark instance generation.
//!
//! Weights are uniform on `[1, R]`; profits follow the family rule. The
//! families mirror standard knapsack benchmark conventions. Generation is
//! deterministic for a given seed: the same arguments always produce
//! byte-identical instance files.

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{parse_capacity, Instance, ItemType};

/// Profit rule applied to a drawn weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Profit uniform on `[1, R]`, independent of the weight.
    Uncorrelated,
    /// Profit uniform on `[max(1, w - R/10), min(R, w + R/10)]`
    /// (`R/10` rounded up).
    WeaklyCorrelated,
    /// Profit `min(R, w + ceil(R/10))`.
    StronglyCorrelated,
    /// Profit equal to the weight.
    SubsetSum,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Uncorrelated,
        Family::WeaklyCorrelated,
        Family::StronglyCorrelated,
        Family::SubsetSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Uncorrelated => "uncorrelated",
            Family::WeaklyCorrelated => "weakly-correlated",
            Family::StronglyCorrelated => "strongly-correlated",
            Family::SubsetSum => "subset-sum",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Parses a capacity spec: either a decimal string or the `10^k` shorthand.
pub fn parse_capacity_spec(spec: &str) -> Result<BigUint> {
    if let Some(exp) = spec.strip_prefix("10^") {
        let k: u32 = exp
            .parse()
            .map_err(|_| Error::MalformedCapacitySpec(spec.to_string()))?;
        return Ok(BigUint::from(10u32).pow(k));
    }
    parse_capacity(spec).map_err(|_| Error::MalformedCapacitySpec(spec.to_string()))
}

/// Generates one instance. `index` distinguishes instances within a batch;
/// `(seed, index)` fully determines the output.
pub fn generate_instance(
    family: Family,
    r: u32,
    capacity: &BigUint,
    seed: u64,
    index: u64,
) -> Instance {
    assert!(r >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let n_types = rng.random_range(1..=r);
    let spread = r.div_ceil(10);
    let types: Vec<ItemType> = (0..n_types)
        .map(|_| {
            let w = rng.random_range(1..=r);
            let p = match family {
                Family::Uncorrelated => rng.random_range(1..=r),
                Family::WeaklyCorrelated => {
                    let lo = w.saturating_sub(spread).max(1);
                    let hi = (w + spread).min(r);
                    rng.random_range(lo..=hi)
                }
                Family::StronglyCorrelated => (w + spread).min(r),
                Family::SubsetSum => w,
            };
            ItemType::new(p, w)
        })
        .collect();
    Instance::new(r, types, capacity.clone()).expect("generated coefficients are in range")
}

/// Generates `count` instances as `(file name, file body)` pairs.
pub fn generate_batch(
    family: Family,
    r: u32,
    count: u64,
    capacity_spec: &str,
    seed: u64,
) -> Result<Vec<(String, String)>> {
    let capacity = parse_capacity_spec(capacity_spec)?;
    Ok((0..count)
        .map(|index| {
            let inst = generate_instance(family, r, &capacity, seed, index);
            let name = format!("{}-R{}-s{}-{:03}.json", family.name(), r, seed, index);
            (name, inst.to_json())
        })
        .collect())
}
