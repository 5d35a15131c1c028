//! Collatz trajectories, step counts and odd branches.
//!
//! The walk works on odd values only: from an odd `v` the next odd value is
//! `(3v + 1) / 2^m` with `m` the number of trailing zero bits, which accounts
//! for one odd step and `m` even steps at once. Values that fit in `u128` are
//! iterated natively; larger values use [`BigUint`] and drop back to the
//! native path as soon as they shrink.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::{Error, Result};

/// Default bound on the number of Collatz steps taken for one N.
pub const DEFAULT_STEP_BUDGET: u64 = 10_000_000;

/// Largest odd value whose successor `3v + 1` still fits in a `u128`.
const SMALL_LIMIT: u128 = (u128::MAX - 1) / 3;

/// Total, odd and even step counts (D, O, E) of one starting value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct StepCounts {
    pub total: u64,
    pub odd: u64,
    pub even: u64,
}

impl StepCounts {
    pub fn new(total: u64, odd: u64, even: u64) -> Result<Self> {
        if odd.checked_add(even) != Some(total) {
            return Err(Error::InconsistentCounts { total, odd, even });
        }
        Ok(StepCounts { total, odd, even })
    }

    fn from_parts(odd: u64, even: u64) -> Self {
        StepCounts {
            total: odd + even,
            odd,
            even,
        }
    }

    /// Counts of `2^s * n` given the counts of `n`.
    pub fn with_even_prefix(self, s: u64) -> Self {
        StepCounts::from_parts(self.odd, self.even + s)
    }
}

/// The odd values `N_1 -> ... -> N_i` visited before reaching 1, together
/// with the number of halvings `m_j` that follow each of them.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OddBranch {
    values: Vec<BigUint>,
    divisions: Vec<u32>,
}

impl OddBranch {
    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn divisions(&self) -> &[u32] {
        &self.divisions
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Rebuilds the branch from its first value and the division counts via
    /// `N_{j+1} = (3 N_j + 1) / 2^{m_j}`. `None` if a division is not exact.
    pub fn replay(first: &BigUint, divisions: &[u32]) -> Option<OddBranch> {
        let mut values = Vec::with_capacity(divisions.len());
        let mut v = first.clone();
        for (j, &m) in divisions.iter().enumerate() {
            values.push(v.clone());
            let t: BigUint = &v * 3u32 + 1u32;
            if t.trailing_zeros() != Some(u64::from(m)) {
                return None;
            }
            v = t >> m;
            if j + 1 == divisions.len() && !v.is_one() {
                return None;
            }
        }
        Some(OddBranch {
            values,
            divisions: divisions.to_vec(),
        })
    }
}

/// One application of the Collatz map.
pub fn collatz_step(n: &BigUint) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if n.bit(0) {
        Ok(n * 3u32 + 1u32)
    } else {
        Ok(n >> 1u32)
    }
}

/// Splits `n = 2^s * n_odd` with `n_odd` odd.
pub fn odd_part(n: &BigUint) -> Result<(u64, BigUint)> {
    let s = n.trailing_zeros().ok_or(Error::ZeroInput)?;
    Ok((s, n >> s))
}

/// An odd value seen during a walk, in whichever representation the walker
/// currently uses.
#[derive(Debug, Clone, Copy)]
pub enum OddValue<'a> {
    Small(u128),
    Big(&'a BigUint),
}

impl OddValue<'_> {
    pub fn to_biguint(self) -> BigUint {
        match self {
            OddValue::Small(v) => BigUint::from(v),
            OddValue::Big(v) => v.clone(),
        }
    }
}

/// Precomputed (D, O) for every odd value below a limit. Built once and
/// shared read-only between scan workers.
#[derive(Debug, Clone)]
pub struct OddStatsTable {
    limit: u64,
    // entry for odd k is at index k / 2
    table: Vec<(u32, u32)>,
}

impl OddStatsTable {
    /// Builds the table for all odd values `< limit`.
    pub fn build(limit: u64, budget: u64) -> Result<Self> {
        let len = usize::try_from(limit.div_ceil(2))
            .map_err(|_| Error::InvalidConfig(format!("stats cache limit {limit} too large")))?;
        let mut table = OddStatsTable {
            limit: 0,
            table: Vec::with_capacity(len),
        };
        if len > 0 {
            // k = 1
            table.table.push((0, 0));
        }
        let mut k: u64 = 3;
        while k < limit {
            table.limit = k;
            let n = BigUint::from(k);
            let counts = walk_from_odd(&n, k.into(), budget, 0, Some(&table), |_, _| {})?;
            let d = u32::try_from(counts.total).expect("step count fits u32 below cache limit");
            let o = u32::try_from(counts.odd).expect("step count fits u32 below cache limit");
            table.table.push((d, o));
            k += 2;
        }
        table.limit = limit;
        Ok(table)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn get(&self, odd: u128) -> Option<StepCounts> {
        if odd >= u128::from(self.limit) {
            return None;
        }
        let &(d, o) = self.table.get((odd / 2) as usize)?;
        Some(StepCounts::from_parts(o.into(), u64::from(d - o)))
    }
}

/// Walks from the odd value `start` down to 1, calling `visit` once per odd
/// value other than 1 with the halving count that follows it.
///
/// `prefix` is the number of even steps already taken before `start` and is
/// charged against `budget`. `origin` is only used for error reports. The
/// returned counts exclude the prefix.
fn walk_from_odd<F>(
    start: &BigUint,
    origin: BigUint,
    budget: u64,
    prefix: u64,
    cache: Option<&OddStatsTable>,
    mut visit: F,
) -> Result<StepCounts>
where
    F: FnMut(OddValue<'_>, u32),
{
    debug_assert!(start.bit(0));
    let mut odd = 0u64;
    let mut even = 0u64;
    let mut big: Option<BigUint> = None;
    let mut small: u128 = match start.to_u128() {
        Some(v) if v <= SMALL_LIMIT => v,
        _ => {
            big = Some(start.clone());
            0
        }
    };

    let over_budget = |odd: u64, even: u64| prefix.saturating_add(odd).saturating_add(even) > budget;

    loop {
        if let Some(v) = big.as_ref() {
            if v.is_one() {
                break;
            }
            let t: BigUint = v * 3u32 + 1u32;
            let m = t.trailing_zeros().expect("3v+1 is nonzero");
            visit(OddValue::Big(v), m as u32);
            odd += 1;
            even += m;
            let next = t >> m;
            if over_budget(odd, even) {
                return Err(Error::BudgetExceeded {
                    n: origin,
                    last: next,
                    budget,
                });
            }
            match next.to_u128() {
                Some(s) if s <= SMALL_LIMIT => {
                    small = s;
                    big = None;
                }
                _ => big = Some(next),
            }
        } else {
            if small == 1 {
                break;
            }
            if let Some(c) = cache.and_then(|c| c.get(small)) {
                odd += c.odd;
                even += c.even;
                if over_budget(odd, even) {
                    return Err(Error::BudgetExceeded {
                        n: origin,
                        last: BigUint::from(small),
                        budget,
                    });
                }
                break;
            }
            let t = 3 * small + 1;
            let m = t.trailing_zeros();
            visit(OddValue::Small(small), m);
            odd += 1;
            even += u64::from(m);
            let next = t >> m;
            if over_budget(odd, even) {
                return Err(Error::BudgetExceeded {
                    n: origin,
                    last: BigUint::from(next),
                    budget,
                });
            }
            if next > SMALL_LIMIT {
                big = Some(BigUint::from(next));
            } else {
                small = next;
            }
        }
    }
    Ok(StepCounts::from_parts(odd, even))
}

/// Step counts (D, O, E) of `n`; `(0, 0, 0)` for `n = 1`.
pub fn trajectory_stats(n: &BigUint, step_budget: u64) -> Result<StepCounts> {
    trajectory_stats_cached(n, step_budget, None)
}

/// [`trajectory_stats`] with an optional table of precomputed small values.
pub fn trajectory_stats_cached(
    n: &BigUint,
    step_budget: u64,
    cache: Option<&OddStatsTable>,
) -> Result<StepCounts> {
    let (s, n_odd) = odd_part(n)?;
    if s > step_budget {
        return Err(Error::BudgetExceeded {
            n: n.clone(),
            last: n >> step_budget,
            budget: step_budget,
        });
    }
    let odd_counts = walk_from_odd(&n_odd, n.clone(), step_budget, s, cache, |_, _| {})?;
    Ok(odd_counts.with_even_prefix(s))
}

/// Step counts of an odd `n_odd`, streaming each odd value and its halving
/// count to `visit`. Used by checks that need the branch without storing it.
pub fn walk_odd_branch<F>(n_odd: &BigUint, step_budget: u64, visit: F) -> Result<StepCounts>
where
    F: FnMut(OddValue<'_>, u32),
{
    if n_odd.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !n_odd.bit(0) {
        return Err(Error::NonCanonical(n_odd.clone()));
    }
    walk_from_odd(n_odd, n_odd.clone(), step_budget, 0, None, visit)
}

/// The odd branch of `n`: every odd value except 1 visited from `n`, in
/// order, starting at the odd part of `n`.
pub fn odd_branch(n: &BigUint, step_budget: u64) -> Result<OddBranch> {
    let (s, n_odd) = odd_part(n)?;
    if s > step_budget {
        return Err(Error::BudgetExceeded {
            n: n.clone(),
            last: n >> step_budget,
            budget: step_budget,
        });
    }
    let mut branch = OddBranch::default();
    walk_from_odd(&n_odd, n.clone(), step_budget, s, None, |v, m| {
        branch.values.push(v.to_biguint());
        branch.divisions.push(m);
    })?;
    Ok(branch)
}
