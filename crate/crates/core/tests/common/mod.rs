//! Shared fixtures: planted-instance constructors and an independent
//! rational-arithmetic reimplementation of the TEST acceptance rule.
//!
//! Each integration-test binary compiles this module separately and uses a
//! different subset of it.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use ssplab_core::linsys::{contribution_table, Arrangement, Assignment, LinsysError};
use ssplab_core::numerics::{in_unit_interval, Int, Rat};
use ssplab_core::solver::Instance;

/// Instance whose first four positions form a planted subset summing to the
/// target (the length-4 constructive case). Returns the instance; the
/// arrangement is the instance order itself.
pub fn plant_case1(rng: &mut impl Rng, n: usize) -> Instance {
    assert!(n >= 5);
    let mut vals: Vec<i64> = Vec::new();
    while vals.len() < n {
        vals.push(rng.gen_range(-200..=200));
    }
    // balance pair must differ for the system to be nondegenerate
    while vals[0] == vals[1] {
        vals[1] = rng.gen_range(-200..=200);
    }
    let c: i64 = vals[..4].iter().sum();
    Instance::new(vals.into_iter().map(Int::from).collect(), Int::from(c))
}

/// Instance with a planted 5-element subset: four members in the window and
/// the fifth at the first free position, so the scan meets its D3 = 0 column
/// first. Keeps the fifth value distinct from both balance values and
/// nonzero so no short-circuit or degeneracy interferes.
pub fn plant_case2(rng: &mut impl Rng, n: usize) -> Instance {
    assert!(n >= 5);
    let mut vals: Vec<i64> = Vec::new();
    while vals.len() < n {
        vals.push(rng.gen_range(-200..=200));
    }
    while vals[0] == vals[1] {
        vals[1] = rng.gen_range(-200..=200);
    }
    while vals[4] == 0 || vals[4] == vals[0] || vals[4] == vals[1] {
        vals[4] = rng.gen_range(-200..=200);
    }
    let c: i64 = vals[..5].iter().sum();
    Instance::new(vals.into_iter().map(Int::from).collect(), Int::from(c))
}

/// Planted trivial-class instance: the target is the sum of a subset of the
/// stated size.
pub fn plant_trivial_class(rng: &mut impl Rng, n: usize, class: &str) -> Instance {
    let bound = 2 * (n * n) as i64;
    let vals: Vec<i64> = (0..n).map(|_| rng.gen_range(-bound..=bound)).collect();
    let total: i64 = vals.iter().sum();
    let j = rng.gen_range(0..n);
    let k = (j + 1 + rng.gen_range(0..n - 1)) % n;
    let c = match class {
        "1" => vals[j],
        "2" => vals[j] + vals[k],
        "n-1" => total - vals[j],
        "n" => total,
        other => panic!("unknown class {other}"),
    };
    Instance::new(vals.into_iter().map(Int::from).collect(), Int::from(c))
}

/// Rational-arithmetic reference for the TEST acceptance rule, built on the
/// public contribution table. Returns the accepted positions (window flags
/// first, then scanned columns) or `None`.
pub fn reference_test(
    arr: &Arrangement<Int>,
    c: &Int,
    asg: &Assignment<Int>,
    lower_inclusive: bool,
) -> Option<Vec<usize>> {
    let flags = [asg.t1, asg.t2, asg.v_r, asg.v_s];
    let window: Vec<usize> = (0..4).filter(|&i| flags[i]).collect();
    let window_sum: Int = window.iter().map(|&i| arr.elements()[i].clone()).sum();
    if !window.is_empty() && window_sum == *c {
        return Some(window);
    }

    let table = match contribution_table(arr, asg, c) {
        Ok(t) => t,
        Err(LinsysError::DegenerateWindow | LinsysError::DegenerateTargets) => return None,
        Err(e) => panic!("unexpected error {e}"),
    };
    let mut top = Rat::zero();
    let mut bottom = Rat::zero();
    let mut picked = window;
    for i in 0..table.d3.len() {
        if in_unit_interval(&table.d3[i], lower_inclusive) {
            picked.push(4 + i);
            top = top + table.d1[i].clone();
            bottom = bottom + table.d2[i].clone();
            if top.is_one() && bottom.is_one() {
                return Some(picked);
            }
        }
    }
    None
}

/// Brute-force satisfiability of an instance over every nonempty subset;
/// only for small n.
pub fn brute_force_satisfiable(inst: &Instance) -> bool {
    let n = inst.len();
    assert!(n <= 24);
    (1u64..1 << n).any(|mask| {
        let sum: Int = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| inst.elements[i].clone())
            .sum();
        sum == inst.target
    })
}

/// All canonical 3-literal clauses over `vars` variables: sorted triples of
/// nonzero literals, duplicates allowed (enumeration up to literal order).
pub fn canonical_clauses(vars: usize) -> Vec<[i64; 3]> {
    let mut lits: Vec<i64> = Vec::new();
    for v in 1..=vars as i64 {
        lits.push(v);
        lits.push(-v);
    }
    lits.sort_unstable();
    let mut out = Vec::new();
    for i in 0..lits.len() {
        for j in i..lits.len() {
            for k in j..lits.len() {
                out.push([lits[i], lits[j], lits[k]]);
            }
        }
    }
    out
}
