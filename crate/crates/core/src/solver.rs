//! The candidate subset-sum procedure stack: TEST, BALANCE, CONSTRAIN,
//! PARTIALSUBSETSUM, SUBSETSUM, plus the rotation-only approximation.
//!
//! The full solver appends a fabricated sentinel, sorts by descending
//! absolute value, and rotates through the set; each pass scans trivial
//! subset shapes (singletons, prefixes, all-but-one, pairs), then enumerates
//! window configurations from index-disjoint pairs and probes each window's
//! solution space through the contribution-table acceptance rule.
//!
//! Soundness is unconditional: a candidate is accepted only when its exact
//! sum equals the target, so every returned [`Solution`] verifies. The
//! acceptance rule's completeness is exactly what the experiment harness
//! measures.
//!
//! The column scan works on integer numerators over the fixed per-call
//! denominators delta1 and delta2 (sum-of-ratios equality against 1 becomes
//! numerator-sum equality against the denominator), which keeps the hot loop
//! free of rational normalization while computing the same exact values as
//! [`crate::linsys::contribution_table`].

use crate::linsys::{self, Arrangement, Assignment, NO_ORIGIN};
use crate::numerics::{Int, Scalar};
use num_traits::Signed;

/// A subset-sum instance: the multiset of elements and the target sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub elements: Vec<Int>,
    pub target: Int,
}

impl Instance {
    pub fn new(elements: Vec<Int>, target: Int) -> Self {
        Instance { elements, target }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Reference configuration for all experiment and acceptance runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    /// Admit columns with D3 = 0 into the scan (lower bound inclusive).
    /// The strict variant of the written procedure is available for fidelity
    /// experiments, but the inclusive bound is the one consistent with the
    /// length-5 constructive case, which needs its D3 = 0 column.
    pub d3_lower_inclusive: bool,
    /// Append the fabricated sentinel before solving.
    pub enable_fabrication: bool,
    /// Capacity guard for the exhaustive oracle.
    pub max_exhaustive_n: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            d3_lower_inclusive: true,
            enable_fabrication: true,
            max_exhaustive_n: 30,
        }
    }
}

/// A verified subset: original indices (ascending), their values, and the sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub indices: Vec<usize>,
    pub values: Vec<Int>,
    pub sum: Int,
}

/// Per-call instrumentation counters, returned with results rather than
/// shared, so concurrent solves never contend.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub constrain_calls: u64,
    pub test_calls: u64,
    /// Total contribution columns evaluated across all TEST scans.
    pub column_evals: u64,
    /// Configurations skipped because beta, delta1, or delta2 vanished.
    pub degenerate_skips: u64,
    /// Largest number of columns any single TEST call evaluated.
    pub max_columns_per_test: u64,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.constrain_calls += other.constrain_calls;
        self.test_calls += other.test_calls;
        self.column_evals += other.column_evals;
        self.degenerate_skips += other.degenerate_skips;
        self.max_columns_per_test = self.max_columns_per_test.max(other.max_columns_per_test);
    }
}

/// Result of a solve: the verified subset if one was found, plus counters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub solution: Option<Solution>,
    pub stats: SolveStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum WindowMode {
    /// All window configurations from index-disjoint pairs.
    Exhaustive,
    /// Only the window already occupying the first four positions.
    RotationOnly,
}

/// The fabricated sentinel value M = sum(|a_i|) + |c| + 1. Any subset
/// containing M has absolute sum at least M - sum(|a_i|) = |c| + 1, so it can
/// never sum to c and the exact acceptance checks exclude it automatically.
pub fn fabricate_sentinel(inst: &Instance) -> Int {
    let mut m: Int = inst.elements.iter().map(|v| v.abs()).sum();
    m += inst.target.abs();
    m += 1;
    m
}

/// True iff the solution is well-formed for the instance: nonempty, strictly
/// ascending in-range indices, values matching the instance, and exact sum
/// equal to the target. Indices address the original instance, so a
/// fabricated sentinel (which has no index) can never appear.
pub fn verify_solution(inst: &Instance, sol: &Solution) -> bool {
    if sol.indices.is_empty() || sol.indices.len() != sol.values.len() {
        return false;
    }
    if !sol.indices.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    if *sol.indices.last().unwrap() >= inst.len() {
        return false;
    }
    for (&i, v) in sol.indices.iter().zip(&sol.values) {
        if inst.elements[i] != *v {
            return false;
        }
    }
    let total: Int = sol.values.iter().cloned().sum();
    total == sol.sum && total == inst.target
}

/// Subset members carried through the search: (origin tag, value).
type Members<S> = Vec<(u32, S)>;

fn members_at<S: Scalar>(arr: &Arrangement<S>, positions: impl IntoIterator<Item = usize>) -> Members<S> {
    positions
        .into_iter()
        .map(|p| (arr.origin()[p], arr.elements()[p].clone()))
        .collect()
}

fn solution_from_members<S: Scalar>(members: &Members<S>) -> Solution {
    let mut rows: Vec<(u32, Int)> = members
        .iter()
        .map(|(o, v)| {
            assert_ne!(*o, NO_ORIGIN, "fabricated sentinel in an accepted subset");
            (*o, v.to_bigint())
        })
        .collect();
    rows.sort_by_key(|(o, _)| *o);
    debug_assert!(rows.windows(2).all(|w| w[0].0 < w[1].0));
    let sum = rows.iter().map(|(_, v)| v.clone()).sum();
    Solution {
        indices: rows.iter().map(|(o, _)| *o as usize).collect(),
        values: rows.into_iter().map(|(_, v)| v).collect(),
        sum,
    }
}

/// Single-element, prefix, all-but-one, and pair scans, in that order.
fn scan_trivial<S: Scalar>(arr: &Arrangement<S>, c: &S) -> Option<Members<S>> {
    let el = arr.elements();
    let len = el.len();

    let mut running = S::zero();
    for x in 0..len {
        if el[x] == *c {
            return Some(members_at(arr, [x]));
        }
        running = running + el[x].clone();
        if running == *c {
            return Some(members_at(arr, 0..=x));
        }
    }

    // `running` is now the full sum.
    if len >= 2 {
        for x in 0..len {
            if running.clone() - el[x].clone() == *c {
                return Some(members_at(arr, (0..len).filter(|&y| y != x)));
            }
        }
    }

    for i in 0..len {
        for j in i + 1..len {
            if el[i].clone() + el[j].clone() == *c {
                return Some(members_at(arr, [i, j]));
            }
        }
    }

    None
}

/// All index pairs i < j whose values differ, in scan order.
pub fn enumerate_pairs<S: Scalar>(values: &[S]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] != values[j] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// All windows formed from two index-disjoint pairs, in scan order.
pub fn enumerate_windows(pairs: &[(usize, usize)]) -> Vec<[usize; 4]> {
    let mut windows = Vec::new();
    for i in 0..pairs.len() {
        let (a, b) = pairs[i];
        for &(x, y) in &pairs[i + 1..] {
            if x != a && x != b && y != a && y != b {
                windows.push([a, b, x, y]);
            }
        }
    }
    windows
}

const FLAG_ORDER: [(bool, bool); 4] = [(true, true), (false, false), (true, false), (false, true)];

#[allow(clippy::too_many_arguments)]
fn test_core<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    t: i64,
    t1: bool,
    t2: bool,
    v_r: bool,
    v_s: bool,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
    scratch: &mut Vec<usize>,
) -> Option<Members<S>> {
    stats.test_calls += 1;
    let el = arr.elements();
    let len = el.len();
    debug_assert!(len >= 5);

    // Window membership implied by the assignment; accepted outright when it
    // already sums to the target. The all-flags-zero case with c = 0 would
    // name the empty subset, which is not a valid answer, so the scan
    // continues instead.
    let flags = [t1, t2, v_r, v_s];
    let mut window_sum = S::zero();
    for (i, &on) in flags.iter().enumerate() {
        if on {
            window_sum = window_sum + el[i].clone();
        }
    }
    if flags.iter().any(|&b| b) && window_sum == *c {
        return Some(members_at(arr, (0..4).filter(|&i| flags[i])));
    }

    let asg = Assignment::<S> {
        t: S::from_i64(t),
        t1,
        t2,
        v_r,
        v_s,
    };
    let (beta, delta1, delta2) = linsys::window_deltas(arr, &asg, c);
    if beta.is_zero() || delta1.is_zero() || delta2.is_zero() {
        stats.degenerate_skips += 1;
        return None;
    }

    let a1 = el[0].clone();
    let a2 = el[1].clone();
    let dd_abs = (delta1.clone() * delta2.clone()).abs();
    let mut sum_top = S::zero();
    let mut sum_bottom = S::zero();
    let tmp = scratch;
    tmp.clear();
    let mut cols: u64 = 0;

    for (off, ax) in el[4..].iter().enumerate() {
        cols += 1;
        // D1 = n1/delta1, D2 = n2/delta2, D3 = |n1 delta2 - n2 delta1| / |delta1 delta2|
        let n1 = a2.clone() - ax.clone();
        let n2 = ax.clone() - a1.clone();
        let d3_num = (n1.clone() * delta2.clone() - n2.clone() * delta1.clone()).abs();
        let in_interval = d3_num < dd_abs && (cfg.d3_lower_inclusive || !d3_num.is_zero());
        if in_interval {
            tmp.push(4 + off);
            sum_top = sum_top + n1;
            sum_bottom = sum_bottom + n2;
            // sum of D1 over tmp equals 1 exactly iff the numerators sum to
            // the shared denominator; likewise for D2
            if sum_top == delta1 && sum_bottom == delta2 {
                stats.column_evals += cols;
                stats.max_columns_per_test = stats.max_columns_per_test.max(cols);
                let mut members = members_at(arr, (0..4).filter(|&i| flags[i]));
                members.extend(members_at(arr, tmp.iter().copied()));
                return Some(members);
            }
        }
    }

    stats.column_evals += cols;
    stats.max_columns_per_test = stats.max_columns_per_test.max(cols);
    None
}

#[allow(clippy::too_many_arguments)]
fn balance_core<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    t: i64,
    v_r: bool,
    v_s: bool,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
    scratch: &mut Vec<usize>,
) -> Option<Members<S>> {
    FLAG_ORDER
        .iter()
        .find_map(|&(t1, t2)| test_core(arr, c, t, t1, t2, v_r, v_s, cfg, stats, scratch))
}

fn constrain_core<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    t: i64,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
    scratch: &mut Vec<usize>,
) -> Option<Members<S>> {
    stats.constrain_calls += 1;
    FLAG_ORDER
        .iter()
        .find_map(|&(v_r, v_s)| balance_core(arr, c, t, v_r, v_s, cfg, stats, scratch))
}

/// Probes one window arrangement: the t sweep over both element orders
/// (as placed, then with positions 2 and 3 swapped).
fn probe_window<S: Scalar>(
    window_arr: &mut Arrangement<S>,
    c: &S,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
    scratch: &mut Vec<usize>,
) -> Option<Members<S>> {
    let len = window_arr.len() as i64;
    for pass in 0..2 {
        for t in 3..=len - 1 {
            if let Some(found) = constrain_core(window_arr, c, t, cfg, stats, scratch) {
                return Some(found);
            }
        }
        if pass == 0 {
            window_arr.swap(1, 2);
        }
    }
    None
}

fn partial_core<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    cfg: &SolverConfig,
    mode: WindowMode,
    stats: &mut SolveStats,
) -> Option<Members<S>> {
    if let Some(found) = scan_trivial(arr, c) {
        return Some(found);
    }
    if arr.len() < 5 {
        return None;
    }
    let mut scratch = Vec::with_capacity(arr.len());
    match mode {
        WindowMode::Exhaustive => {
            let pairs = enumerate_pairs(arr.elements());
            for window in enumerate_windows(&pairs) {
                let mut window_arr = arr.with_window_front(window);
                if let Some(found) = probe_window(&mut window_arr, c, cfg, stats, &mut scratch) {
                    return Some(found);
                }
            }
            None
        }
        WindowMode::RotationOnly => {
            let mut window_arr = arr.clone();
            probe_window(&mut window_arr, c, cfg, stats, &mut scratch)
        }
    }
}

/// Working arrangement seeded from an instance, in instance order, with the
/// sentinel appended when fabrication is enabled.
fn working_arrangement<S: Scalar>(inst: &Instance, values: Vec<S>, cfg: &SolverConfig) -> Arrangement<S> {
    let mut arr = Arrangement::with_origin(values, (0..inst.len() as u32).collect());
    if cfg.enable_fabrication {
        let m = fabricate_sentinel(inst);
        arr.push(
            S::from_bigint(&m).expect("sentinel fits the selected scalar lane"),
            NO_ORIGIN,
        );
    }
    arr
}

fn solve_full<S: Scalar>(
    inst: &Instance,
    values: Vec<S>,
    c: S,
    cfg: &SolverConfig,
    mode: WindowMode,
) -> SolveOutcome {
    let mut stats = SolveStats::default();
    let mut work = working_arrangement(inst, values, cfg);
    work.sort_desc_abs();
    for _ in 0..work.len() {
        if let Some(members) = partial_core(&work, &c, cfg, mode, &mut stats) {
            let sol = solution_from_members(&members);
            assert!(
                verify_solution(inst, &sol),
                "accepted subset failed verification (defect): {sol:?}"
            );
            return SolveOutcome {
                solution: Some(sol),
                stats,
            };
        }
        work.rotate_left();
    }
    SolveOutcome {
        solution: None,
        stats,
    }
}

/// Scalar lane selection. Every intermediate the solver forms is at most a
/// product of two factors bounded by (n + 5) * M where M is the sentinel
/// magnitude, so a bound of 2^20 keeps all products under 2^46 (safe in i64)
/// and a bound of 2^40 keeps them under 2^86 (safe in i128); anything larger
/// takes the arbitrary-precision lane. Overflow checks stay on in release as
/// a backstop, and all lanes compute identical values.
fn magnitude_gate(inst: &Instance) -> Int {
    fabricate_sentinel(inst) * Int::from(inst.len() as u64 + 5)
}

fn fits_fast_lane(inst: &Instance) -> bool {
    magnitude_gate(inst) < Int::from(1u64 << 40)
}

fn dispatch(inst: &Instance, cfg: &SolverConfig, mode: WindowMode) -> SolveOutcome {
    let gate = magnitude_gate(inst);
    if gate < Int::from(1u64 << 20) {
        let values: Option<Vec<i64>> = inst.elements.iter().map(i64::from_bigint).collect();
        if let (Some(values), Some(c)) = (values, i64::from_bigint(&inst.target)) {
            return solve_full::<i64>(inst, values, c, cfg, mode);
        }
    }
    if gate < Int::from(1u64 << 40) {
        let values: Option<Vec<i128>> = inst.elements.iter().map(i128::from_bigint).collect();
        if let (Some(values), Some(c)) = (values, i128::from_bigint(&inst.target)) {
            return solve_full::<i128>(inst, values, c, cfg, mode);
        }
    }
    solve_full::<Int>(inst, inst.elements.clone(), inst.target.clone(), cfg, mode)
}

/// The full procedure: sentinel, descending-|.| sort, and one pass of
/// [`partial_subset_sum`]'s machinery per rotation of the working set.
pub fn subset_sum(inst: &Instance, cfg: &SolverConfig) -> SolveOutcome {
    dispatch(inst, cfg, WindowMode::Exhaustive)
}

/// Runs the full procedure in one specific scalar lane, bypassing the
/// dispatcher. `None` when the instance or its sentinel does not fit the
/// lane. Every lane computes the same outcome; this exists so tests can hold
/// them to that.
pub fn subset_sum_in<S: Scalar>(inst: &Instance, cfg: &SolverConfig) -> Option<SolveOutcome> {
    if cfg.enable_fabrication && S::from_bigint(&fabricate_sentinel(inst)).is_none() {
        return None;
    }
    let values: Vec<S> = inst
        .elements
        .iter()
        .map(S::from_bigint)
        .collect::<Option<_>>()?;
    let c = S::from_bigint(&inst.target)?;
    Some(solve_full(inst, values, c, cfg, WindowMode::Exhaustive))
}

/// Rotation-only approximation: identical outer loop, but each pass probes
/// only the window already in the first four positions instead of the full
/// pair-disjoint enumeration. Trivial scans are retained.
pub fn subset_sum_approx(inst: &Instance, cfg: &SolverConfig) -> SolveOutcome {
    dispatch(inst, cfg, WindowMode::RotationOnly)
}

/// One pass over the instance in its given order: trivial scans, then (for
/// five or more elements) the full window enumeration. No sentinel, sort,
/// or rotation.
pub fn partial_subset_sum(inst: &Instance, cfg: &SolverConfig) -> SolveOutcome {
    let mut stats = SolveStats::default();
    let solution = if fits_fast_lane(inst) && i128::from_bigint(&inst.target).is_some() {
        let values: Vec<i128> = inst
            .elements
            .iter()
            .map(|v| i128::from_bigint(v).expect("gated by fits_fast_lane"))
            .collect();
        let c = i128::from_bigint(&inst.target).unwrap();
        let arr = Arrangement::with_origin(values, (0..inst.len() as u32).collect());
        partial_core(&arr, &c, cfg, WindowMode::Exhaustive, &mut stats)
            .map(|m| solution_from_members(&m))
    } else {
        let arr = Arrangement::with_origin(
            inst.elements.clone(),
            (0..inst.len() as u32).collect(),
        );
        partial_core(&arr, &inst.target, cfg, WindowMode::Exhaustive, &mut stats)
            .map(|m| solution_from_members(&m))
    };
    if let Some(sol) = &solution {
        assert!(
            verify_solution(inst, sol),
            "accepted subset failed verification (defect): {sol:?}"
        );
    }
    SolveOutcome { solution, stats }
}

/// First detected trivial-shape subset (singleton, prefix, all-but-one,
/// pair) in the instance's current order.
pub fn trivial_scans(inst: &Instance) -> Option<Solution> {
    let arr = Arrangement::new(inst.elements.clone());
    scan_trivial(&arr, &inst.target).map(|m| solution_from_members(&m))
}

/// One acceptance probe of a single window configuration and assignment:
/// the window short-circuit, then the contribution-column scan.
pub fn test_op<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    asg: &Assignment<S>,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
) -> Option<Solution> {
    assert!(arr.len() >= 5, "test requires at least five elements");
    let t = i64::try_from(asg.t.to_bigint()).expect("subset size fits i64");
    let mut scratch = Vec::new();
    test_core(arr, c, t, asg.t1, asg.t2, asg.v_r, asg.v_s, cfg, stats, &mut scratch)
        .map(|m| solution_from_members(&m))
}

/// Runs [`test_op`] over the four balance-target pairs in procedure order.
pub fn balance_op<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    t: i64,
    v_r: bool,
    v_s: bool,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
) -> Option<Solution> {
    assert!(arr.len() >= 5, "balance requires at least five elements");
    balance_core(arr, c, t, v_r, v_s, cfg, stats, &mut Vec::new()).map(|m| solution_from_members(&m))
}

/// Runs [`balance_op`] over the four pivot-membership pairs in procedure order.
pub fn constrain_op<S: Scalar>(
    arr: &Arrangement<S>,
    c: &S,
    t: i64,
    cfg: &SolverConfig,
    stats: &mut SolveStats,
) -> Option<Solution> {
    assert!(arr.len() >= 5, "constrain requires at least five elements");
    constrain_core(arr, c, t, cfg, stats, &mut Vec::new()).map(|m| solution_from_members(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;
    use num_traits::Zero;

    fn inst(vals: &[i64], c: i64) -> Instance {
        Instance::new(vals.iter().map(|&v| Int::from(v)).collect(), Int::from(c))
    }

    fn arr(vals: &[i64]) -> Arrangement<Int> {
        Arrangement::new(vals.iter().map(|&v| Int::from(v)).collect())
    }

    #[test]
    fn sentinel_formula() {
        assert_eq!(fabricate_sentinel(&inst(&[1, 2, 3], 6)), Int::from(13));
        assert_eq!(fabricate_sentinel(&inst(&[-5, 5], 0)), Int::from(11));
        assert_eq!(fabricate_sentinel(&inst(&[], 4)), Int::from(5));
    }

    #[test]
    fn trivial_scan_order() {
        let s = trivial_scans(&inst(&[4, 1, 2], 4)).unwrap();
        assert_eq!(s.indices, vec![0]);

        let s = trivial_scans(&inst(&[1, 2, 3], 6)).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2]);

        // all but the first element
        let s = trivial_scans(&inst(&[1, 2, 3, 4], 9)).unwrap();
        assert_eq!(s.indices, vec![1, 2, 3]);

        // pair found by scan even in a 4-element instance
        let s = trivial_scans(&inst(&[5, 2, 3, 9], 8)).unwrap();
        assert_eq!(s.indices, vec![0, 2]);

        assert!(trivial_scans(&inst(&[2, 4, 6], 5)).is_none());
    }

    #[test]
    fn pair_enumeration_skips_equal_values() {
        let vals: Vec<Int> = [1i64, 2, 3].iter().map(|&v| Int::from(v)).collect();
        assert_eq!(enumerate_pairs(&vals), vec![(0, 1), (0, 2), (1, 2)]);

        let vals: Vec<Int> = [2i64, 2].iter().map(|&v| Int::from(v)).collect();
        assert!(enumerate_pairs(&vals).is_empty());

        let vals: Vec<Int> = [1i64, 1, 2].iter().map(|&v| Int::from(v)).collect();
        assert_eq!(enumerate_pairs(&vals), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn window_enumeration_requires_disjoint_pairs() {
        let vals: Vec<Int> = [1i64, 2, 3, 4].iter().map(|&v| Int::from(v)).collect();
        let pairs = enumerate_pairs(&vals);
        assert_eq!(pairs.len(), 6);
        let windows = enumerate_windows(&pairs);
        assert_eq!(
            windows,
            vec![[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]]
        );

        assert!(enumerate_windows(&[]).is_empty());
        let vals: Vec<Int> = [1i64, 2, 3].iter().map(|&v| Int::from(v)).collect();
        assert!(enumerate_windows(&enumerate_pairs(&vals)).is_empty());
    }

    #[test]
    fn test_op_accepts_the_planted_length_five_subset() {
        let a = arr(&[5, 3, 2, 1, 7, 9]);
        let asg = Assignment::new(5, true, true, true, true);
        let cfg = SolverConfig::default();
        let mut stats = SolveStats::default();
        let s = test_op(&a, &Int::from(18), &asg, &cfg, &mut stats).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2, 3, 4]);
        assert_eq!(s.sum, Int::from(18));
        assert!(stats.max_columns_per_test <= 2);
    }

    #[test]
    fn test_op_strict_bound_drops_the_zero_column() {
        let a = arr(&[5, 3, 2, 1, 7, 9]);
        let asg = Assignment::new(5, true, true, true, true);
        let cfg = SolverConfig {
            d3_lower_inclusive: false,
            ..SolverConfig::default()
        };
        let mut stats = SolveStats::default();
        assert!(test_op(&a, &Int::from(18), &asg, &cfg, &mut stats).is_none());
    }

    #[test]
    fn test_op_window_sum_short_circuit() {
        let a = arr(&[5, 3, 2, 1, 7, 9]);
        let asg = Assignment::new(4, true, true, true, true);
        let cfg = SolverConfig::default();
        let mut stats = SolveStats::default();
        let s = test_op(&a, &Int::from(11), &asg, &cfg, &mut stats).unwrap();
        assert_eq!(s.indices, vec![0, 1, 2, 3]);
        // short-circuit happens before any column work
        assert_eq!(stats.column_evals, 0);
    }

    #[test]
    fn degenerate_window_is_skipped_not_fatal() {
        let a = arr(&[4, 4, 2, 1, 7, 9]);
        let asg = Assignment::new(5, true, true, true, true);
        let cfg = SolverConfig::default();
        let mut stats = SolveStats::default();
        assert!(test_op(&a, &Int::from(100), &asg, &cfg, &mut stats).is_none());
        assert_eq!(stats.degenerate_skips, 1);
    }

    #[test]
    fn solver_finds_known_satisfiable_instances() {
        let cfg = SolverConfig::default();
        for (vals, c) in [
            (&[1i64, 2, 3][..], 6i64),
            (&[5, 3, 2, 1, 7, 9][..], 18),
            (&[4][..], 4),
            (&[-3, 1, 2][..], 0),
        ] {
            let i = inst(vals, c);
            let out = subset_sum(&i, &cfg);
            let sol = out.solution.expect("solution expected");
            assert!(verify_solution(&i, &sol));
        }
    }

    #[test]
    fn solver_rejects_unsatisfiable_instances() {
        let cfg = SolverConfig::default();
        assert!(subset_sum(&inst(&[2, 4, 6], 5), &cfg).solution.is_none());
        assert!(subset_sum(&inst(&[], 4), &cfg).solution.is_none());
        assert!(subset_sum_approx(&inst(&[2, 4, 6], 5), &cfg).solution.is_none());
    }

    #[test]
    fn partial_subset_sum_respects_given_order() {
        let cfg = SolverConfig::default();
        let out = partial_subset_sum(&inst(&[5, 3, 2, 1, 7, 9], 18), &cfg);
        let sol = out.solution.unwrap();
        assert!(verify_solution(&inst(&[5, 3, 2, 1, 7, 9], 18), &sol));

        assert!(partial_subset_sum(&inst(&[2, 4, 6], 5), &cfg).solution.is_none());
        let out = partial_subset_sum(&inst(&[4], 4), &cfg);
        assert_eq!(out.solution.unwrap().indices, vec![0]);
    }

    #[test]
    fn approx_answers_match_oracle_on_small_instances() {
        let cfg = SolverConfig::default();
        for (vals, c) in [
            (&[1i64, 2, 3][..], 6i64),
            (&[2, 4, 6][..], 5),
            (&[5, 3, 2, 1, 7, 9][..], 18),
        ] {
            let i = inst(vals, c);
            let out = subset_sum_approx(&i, &cfg);
            if let Some(sol) = &out.solution {
                assert!(verify_solution(&i, sol));
            }
            let oracle = oracles::exhaustive_decide(&i, 30).unwrap();
            if out.solution.is_some() {
                assert!(oracle.satisfiable);
            }
        }
    }

    #[test]
    fn fast_lane_and_reference_lane_agree() {
        let cfg = SolverConfig::default();
        let i = inst(&[5, 3, 2, 1, 7, 9], 18);
        let fast = dispatch(&i, &cfg, WindowMode::Exhaustive);
        let big = solve_full::<Int>(
            &i,
            i.elements.clone(),
            i.target.clone(),
            &cfg,
            WindowMode::Exhaustive,
        );
        assert_eq!(fast, big);
    }

    #[test]
    fn huge_values_fall_back_to_the_reference_lane() {
        let big: Int = Int::from(10).pow(50);
        let elements = vec![big.clone(), -big.clone(), Int::from(7)];
        let i = Instance::new(elements, Int::zero());
        assert!(!fits_fast_lane(&i));
        let out = subset_sum(&i, &SolverConfig::default());
        let sol = out.solution.unwrap();
        assert!(verify_solution(&i, &sol));
        assert_eq!(sol.indices, vec![0, 1]);
    }

    #[test]
    fn verify_solution_contract() {
        let i = inst(&[1, 2, 3], 6);
        let good = Solution {
            indices: vec![0, 1, 2],
            values: vec![Int::from(1), Int::from(2), Int::from(3)],
            sum: Int::from(6),
        };
        assert!(verify_solution(&i, &good));

        let short = Solution {
            indices: vec![0, 1],
            values: vec![Int::from(1), Int::from(2)],
            sum: Int::from(3),
        };
        assert!(!verify_solution(&i, &short));

        let empty = Solution {
            indices: vec![],
            values: vec![],
            sum: Int::zero(),
        };
        assert!(!verify_solution(&i, &empty));

        let out_of_range = Solution {
            indices: vec![0, 7],
            values: vec![Int::from(1), Int::from(5)],
            sum: Int::from(6),
        };
        assert!(!verify_solution(&i, &out_of_range));
    }
}
