//! Independent ground-truth deciders: exhaustive bitmask search and
//! pseudo-polynomial dynamic programming over offset sums. Both handle
//! negative values and both exclude the empty subset. The harness measures
//! the candidate solver against these.

use crate::numerics::{Int, Scalar};
use crate::solver::{verify_solution, Instance, Solution};
use num_traits::Signed;
use std::fmt;

/// Largest sum(|a_i|) the DP oracle will table.
pub const DP_SUM_GUARD: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Instance exceeds the oracle's capacity guard.
    CapacityExceeded { detail: String },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CapacityExceeded { detail } => {
                write!(f, "oracle capacity exceeded: {detail}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Ground-truth answer; `satisfiable` implies a verified witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub satisfiable: bool,
    pub witness: Option<Solution>,
}

impl OracleVerdict {
    fn no() -> Self {
        OracleVerdict {
            satisfiable: false,
            witness: None,
        }
    }

    fn yes(inst: &Instance, indices: Vec<usize>) -> Self {
        let values: Vec<Int> = indices.iter().map(|&i| inst.elements[i].clone()).collect();
        let sum = values.iter().cloned().sum();
        let sol = Solution {
            indices,
            values,
            sum,
        };
        debug_assert!(verify_solution(inst, &sol));
        OracleVerdict {
            satisfiable: true,
            witness: Some(sol),
        }
    }
}

fn exhaustive_scan<S: Scalar>(values: &[S], c: &S) -> Option<Vec<usize>> {
    let n = values.len();
    // Exclusive prefix sums let each mask increment update the running sum in
    // O(1): mask+1 clears the trailing ones (bits 0..k) and sets bit k.
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(S::zero());
    for v in values {
        let last = prefix.last().unwrap().clone();
        prefix.push(last + v.clone());
    }
    let mut sum = S::zero();
    for mask in 1u64..(1u64 << n) {
        let k = mask.trailing_zeros() as usize;
        sum = sum + values[k].clone() - prefix[k].clone();
        if sum == *c {
            return Some((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    None
}

/// Scans all nonempty subsets in ascending mask order (bit i selects element
/// i) and reports the first hit.
pub fn exhaustive_decide(inst: &Instance, max_n: usize) -> Result<OracleVerdict, OracleError> {
    let n = inst.len();
    if n > max_n || n >= 63 {
        return Err(OracleError::CapacityExceeded {
            detail: format!("n = {n} exceeds exhaustive limit {max_n}"),
        });
    }
    if n == 0 {
        return Ok(OracleVerdict::no());
    }
    let fits = inst
        .elements
        .iter()
        .map(i128::from_bigint)
        .collect::<Option<Vec<i128>>>()
        // sums of up to 63 values stay far inside i128 when each fits i64
        .filter(|vals| vals.iter().all(|v| i64::try_from(*v).is_ok()));
    let hit = match (fits, i128::from_bigint(&inst.target)) {
        (Some(vals), Some(c)) => exhaustive_scan(&vals, &c),
        _ => exhaustive_scan(&inst.elements, &inst.target),
    };
    Ok(match hit {
        Some(indices) => OracleVerdict::yes(inst, indices),
        None => OracleVerdict::no(),
    })
}

/// Reachability DP over offset sums in [-sum|a|, sum|a|], tracking which
/// element first reached each offset for witness reconstruction. Offsets a
/// chain visits strictly decrease in element index, so reconstructed
/// witnesses are duplicate-free.
pub fn dp_decide(inst: &Instance) -> Result<OracleVerdict, OracleError> {
    let total_abs: Int = inst.elements.iter().map(|v| v.abs()).sum();
    let Ok(total) = u64::try_from(&total_abs) else {
        return Err(OracleError::CapacityExceeded {
            detail: "sum of absolute values does not fit u64".to_string(),
        });
    };
    if total > DP_SUM_GUARD {
        return Err(OracleError::CapacityExceeded {
            detail: format!("sum of absolute values {total} exceeds guard {DP_SUM_GUARD}"),
        });
    }

    // Targets outside the reachable band are unsatisfiable outright.
    if inst.target.abs() > total_abs || inst.is_empty() {
        return Ok(OracleVerdict::no());
    }
    let target = i64::try_from(&inst.target).expect("inside the reachable band");
    let values: Vec<i64> = inst
        .elements
        .iter()
        .map(|v| i64::try_from(v).expect("bounded by the guard"))
        .collect();

    let width = 2 * total as usize + 1;
    let offset = total as i64;
    const UNREACHED: i32 = -1;
    const START: i64 = i64::MIN;
    // step[s]: element index that first reached offset s; prev[s]: offset it
    // extended from, or START for a singleton.
    let mut step = vec![UNREACHED; width];
    let mut prev = vec![START; width];

    for (i, &v) in values.iter().enumerate() {
        let singleton = (v + offset) as usize;
        if step[singleton] == UNREACHED {
            step[singleton] = i as i32;
        }
        for s in 0..width as i64 {
            // extend only from offsets reached before this element
            if step[s as usize] != UNREACHED && (step[s as usize] as usize) < i {
                let to = s + v;
                if (0..width as i64).contains(&to) && step[to as usize] == UNREACHED {
                    step[to as usize] = i as i32;
                    prev[to as usize] = s;
                }
            }
        }
    }

    let goal = (target + offset) as usize;
    if step[goal] == UNREACHED {
        return Ok(OracleVerdict::no());
    }
    let mut indices = Vec::new();
    let mut s = goal as i64;
    loop {
        indices.push(step[s as usize] as usize);
        if prev[s as usize] == START {
            break;
        }
        s = prev[s as usize];
    }
    indices.sort_unstable();
    Ok(OracleVerdict::yes(inst, indices))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(vals: &[i64], c: i64) -> Instance {
        Instance::new(vals.iter().map(|&v| Int::from(v)).collect(), Int::from(c))
    }

    #[test]
    fn exhaustive_basics() {
        let v = exhaustive_decide(&inst(&[1, 2, 3], 6), 30).unwrap();
        assert!(v.satisfiable);
        assert_eq!(v.witness.unwrap().indices, vec![0, 1, 2]);

        assert!(!exhaustive_decide(&inst(&[2, 4], 7), 30).unwrap().satisfiable);

        let v = exhaustive_decide(&inst(&[-3, 1, 2], 0), 30).unwrap();
        assert!(v.satisfiable);
        assert_eq!(v.witness.unwrap().indices, vec![0, 1, 2]);
    }

    #[test]
    fn exhaustive_reports_first_witness_in_mask_order() {
        // both {0,1} (mask 3) and {2} (mask 4) sum to 3; mask order prefers {0,1}
        let v = exhaustive_decide(&inst(&[1, 2, 3], 3), 30).unwrap();
        assert_eq!(v.witness.unwrap().indices, vec![0, 1]);
    }

    #[test]
    fn exhaustive_capacity_guard() {
        let i = inst(&vec![1; 31], 5);
        assert!(matches!(
            exhaustive_decide(&i, 30),
            Err(OracleError::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn exhaustive_excludes_empty_subset() {
        assert!(!exhaustive_decide(&inst(&[1, 2], 0), 30).unwrap().satisfiable);
        assert!(!exhaustive_decide(&inst(&[], 0), 30).unwrap().satisfiable);
    }

    #[test]
    fn dp_basics() {
        assert!(dp_decide(&inst(&[1, 2, 3], 6)).unwrap().satisfiable);
        assert!(!dp_decide(&inst(&[2, 4, 6], 5)).unwrap().satisfiable);
        assert!(!dp_decide(&inst(&[1, 2], 0)).unwrap().satisfiable);
        let v = dp_decide(&inst(&[-3, 1, 2], 0)).unwrap();
        assert!(v.satisfiable);

        // target outside the reachable band
        assert!(!dp_decide(&inst(&[1, 2], 100)).unwrap().satisfiable);
    }

    #[test]
    fn dp_handles_duplicate_values_without_reuse() {
        // 6 requires both 3s; a single element may not be used twice
        assert!(dp_decide(&inst(&[3, 3], 6)).unwrap().satisfiable);
        assert!(!dp_decide(&inst(&[3, 1], 6)).unwrap().satisfiable);
        assert!(!dp_decide(&inst(&[3], 6)).unwrap().satisfiable);
    }

    #[test]
    fn dp_capacity_guard() {
        let i = Instance::new(vec![Int::from(DP_SUM_GUARD + 1)], Int::from(1));
        assert!(matches!(
            dp_decide(&i),
            Err(OracleError::CapacityExceeded { .. })
        ));
    }
}
