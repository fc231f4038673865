//! Construction and solution of the 4-row membership system.
//!
//! For an arranged set A' and membership parameters (t, v_r, v_s) the system
//! constrains a candidate membership vector m' by four equations: the weighted
//! sum equals the target, the entry sum equals t, and the two pivot entries
//! (positions 3 and 4, 1-based) are fixed to v_r and v_s. Two independent
//! routes produce the solution space:
//!
//! * [`eliminate`] — textbook Gauss-Jordan reduction of the 4 x (n+1)
//!   augmented matrix, free variables zeroed for the particular solution and
//!   set to one each for the null-space columns;
//! * [`closed_form`] — the direct algebraic expressions for b1, b2, k1, k2.
//!
//! The two must agree exactly on every nondegenerate configuration; the test
//! suites and the `check-closed-forms` sweep hold them to that.
//!
//! Positions are 1-based in documentation to match the convention above
//! (window = positions 1..4, balance pair first, pivot pair second); all code
//! indexes from zero.

use crate::numerics::{Int, Scalar};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Failure modes of system construction and solving. Degenerate variants are
/// skip signals for enumeration callers, not panics: the enumeration must
/// step over configurations whose denominators vanish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinsysError {
    /// Fewer than five elements: no free column exists under the convention.
    InstanceTooSmall { n: usize },
    /// The balance elements are equal (beta = a'1 - a'2 = 0); the leading
    /// block is singular and the solution convention is undefined.
    DegenerateWindow,
    /// A balance target coincides with its balance value (delta1 or delta2
    /// is zero), so the contribution ratios are undefined.
    DegenerateTargets,
}

impl fmt::Display for LinsysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinsysError::InstanceTooSmall { n } => {
                write!(f, "instance too small for a window system: n = {n} < 5")
            }
            LinsysError::DegenerateWindow => write!(f, "degenerate window: a'1 = a'2"),
            LinsysError::DegenerateTargets => {
                write!(f, "degenerate balance targets: delta1 or delta2 is zero")
            }
        }
    }
}

impl std::error::Error for LinsysError {}

/// Origin tag for an element with no position in the original instance
/// (the solver's fabricated sentinel).
pub const NO_ORIGIN: u32 = u32::MAX;

/// A permutation A' of an instance's elements together with the map from
/// current position back to original index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement<S = Int> {
    elements: Vec<S>,
    origin: Vec<u32>,
}

impl<S: Scalar> Arrangement<S> {
    /// Arrangement in given order with identity origins.
    pub fn new(elements: Vec<S>) -> Self {
        let origin = (0..elements.len() as u32).collect();
        Arrangement { elements, origin }
    }

    pub fn with_origin(elements: Vec<S>, origin: Vec<u32>) -> Self {
        assert_eq!(elements.len(), origin.len());
        Arrangement { elements, origin }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[S] {
        &self.elements
    }

    pub fn origin(&self) -> &[u32] {
        &self.origin
    }

    pub fn push(&mut self, value: S, origin: u32) {
        self.elements.push(value);
        self.origin.push(origin);
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        self.elements.swap(i, j);
        self.origin.swap(i, j);
    }

    /// Left rotation by one, wrapping the leftmost element to the end.
    pub fn rotate_left(&mut self) {
        if !self.elements.is_empty() {
            self.elements.rotate_left(1);
            self.origin.rotate_left(1);
        }
    }

    /// Stable sort by descending absolute value.
    pub fn sort_desc_abs(&mut self) {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&i, &j| self.elements[j].abs().cmp(&self.elements[i].abs()));
        self.elements = order.iter().map(|&i| self.elements[i].clone()).collect();
        self.origin = order.iter().map(|&i| self.origin[i]).collect();
    }

    /// New arrangement with the four given positions swapped into the window
    /// (positions 1..4), each displaced element landing where its replacement
    /// came from.
    pub fn with_window_front(&self, window: [usize; 4]) -> Self {
        let mut arr = self.clone();
        let mut pos = window;
        for k in 0..4 {
            let p = pos[k];
            arr.swap(k, p);
            for q in pos.iter_mut().skip(k + 1) {
                if *q == k {
                    *q = p;
                }
            }
        }
        arr
    }
}

/// Membership parameters: subset size t plus the four 0/1 window assignments
/// (balance targets t1, t2 and pivot memberships v_r, v_s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment<S = Int> {
    pub t: S,
    pub t1: bool,
    pub t2: bool,
    pub v_r: bool,
    pub v_s: bool,
}

impl<S: Scalar> Assignment<S> {
    pub fn new(t: i64, t1: bool, t2: bool, v_r: bool, v_s: bool) -> Self {
        Assignment { t: S::from_i64(t), t1, t2, v_r, v_s }
    }
}

fn flag<S: Scalar>(b: bool) -> S {
    if b {
        S::one()
    } else {
        S::zero()
    }
}

/// The explicit 4 x n system: row 1 carries A', row 2 is all ones, rows 3
/// and 4 are unit selectors of positions 3 and 4; right-hand side
/// (c, t, v_r, v_s).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem<S = Int> {
    rows: [Vec<S>; 4],
    rhs: [S; 4],
}

impl<S: Scalar> LinearSystem<S> {
    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn rows(&self) -> &[Vec<S>; 4] {
        &self.rows
    }

    pub fn rhs(&self) -> &[S; 4] {
        &self.rhs
    }
}

/// Builds the system for an arrangement, assignment, and target.
pub fn build_system<S: Scalar>(
    arr: &Arrangement<S>,
    asg: &Assignment<S>,
    c: &S,
) -> Result<LinearSystem<S>, LinsysError> {
    let n = arr.len();
    if n < 5 {
        return Err(LinsysError::InstanceTooSmall { n });
    }
    let mut unit_r = vec![S::zero(); n];
    unit_r[2] = S::one();
    let mut unit_s = vec![S::zero(); n];
    unit_s[3] = S::one();
    Ok(LinearSystem {
        rows: [
            arr.elements().to_vec(),
            vec![S::one(); n],
            unit_r,
            unit_s,
        ],
        rhs: [c.clone(), asg.t.clone(), flag(asg.v_r), flag(asg.v_s)],
    })
}

/// Particular solution under the convention: free variables zero, so only
/// the balance values b1, b2 and the fixed pivot entries are nonzero.
#[derive(Debug, Clone)]
pub struct ParticularSolution<S = Int> {
    pub b1: Ratio<S>,
    pub b2: Ratio<S>,
    pub v_r: bool,
    pub v_s: bool,
    /// Total length n of the membership vector this expands to.
    pub len: usize,
}

impl<S: Scalar> PartialEq for ParticularSolution<S> {
    fn eq(&self, other: &Self) -> bool {
        self.b1 == other.b1
            && self.b2 == other.b2
            && self.v_r == other.v_r
            && self.v_s == other.v_s
            && self.len == other.len
    }
}

impl<S: Scalar> Eq for ParticularSolution<S> {}

impl<S: Scalar> ParticularSolution<S> {
    pub fn to_membership(&self) -> MembershipVector<S> {
        let mut entries = vec![Ratio::zero(); self.len];
        entries[0] = self.b1.clone();
        entries[1] = self.b2.clone();
        entries[2] = Ratio::from_integer(flag(self.v_r));
        entries[3] = Ratio::from_integer(flag(self.v_s));
        MembershipVector { entries }
    }
}

/// One special solution of the homogeneous system: entry 1 at its free
/// position, zeros at the other free positions and at the pivots, balance
/// entries k1, k2.
#[derive(Debug, Clone)]
pub struct BasisColumn<S = Int> {
    pub k1: Ratio<S>,
    pub k2: Ratio<S>,
}

impl<S: Scalar> PartialEq for BasisColumn<S> {
    fn eq(&self, other: &Self) -> bool {
        self.k1 == other.k1 && self.k2 == other.k2
    }
}

impl<S: Scalar> Eq for BasisColumn<S> {}

/// The n-4 special solutions, one per free position (position i+4 for
/// column index i).
#[derive(Debug, Clone)]
pub struct NullBasis<S = Int> {
    pub columns: Vec<BasisColumn<S>>,
}

impl<S: Scalar> PartialEq for NullBasis<S> {
    fn eq(&self, other: &Self) -> bool {
        self.columns == other.columns
    }
}

impl<S: Scalar> Eq for NullBasis<S> {}

/// Directional contribution table: per-column ratios measuring how much each
/// special solution moves the balance values toward the targets t1, t2, with
/// the scaled distances delta1, delta2 kept alongside so callers can recover
/// k-values without re-elimination.
#[derive(Debug, Clone)]
pub struct ContributionTable<S = Int> {
    pub delta1: Ratio<S>,
    pub delta2: Ratio<S>,
    pub d1: Vec<Ratio<S>>,
    pub d2: Vec<Ratio<S>>,
    pub d3: Vec<Ratio<S>>,
}

impl<S: Scalar> PartialEq for ContributionTable<S> {
    fn eq(&self, other: &Self) -> bool {
        self.delta1 == other.delta1
            && self.delta2 == other.delta2
            && self.d1 == other.d1
            && self.d2 == other.d2
            && self.d3 == other.d3
    }
}

impl<S: Scalar> Eq for ContributionTable<S> {}

/// Ordered set of free-column indices (0-based into the null basis) chosen
/// for combination into a membership vector.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SelectionSet {
    indices: Vec<usize>,
}

impl SelectionSet {
    pub fn new(indices: Vec<usize>) -> Self {
        let mut seen = indices.clone();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), indices.len(), "selection indices must be distinct");
        SelectionSet { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn cardinality(&self) -> usize {
        self.indices.len()
    }
}

/// Candidate membership vector; entries are exact rationals and encode a
/// subset only when every entry is 0 or 1.
#[derive(Debug, Clone)]
pub struct MembershipVector<S = Int> {
    entries: Vec<Ratio<S>>,
}

impl<S: Scalar> PartialEq for MembershipVector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl<S: Scalar> Eq for MembershipVector<S> {}

impl<S: Scalar> MembershipVector<S> {
    pub fn entries(&self) -> &[Ratio<S>] {
        &self.entries
    }

    /// Exact check of all four equations of the generating system.
    pub fn satisfies(&self, sys: &LinearSystem<S>) -> bool {
        if self.entries.len() != sys.width() {
            return false;
        }
        sys.rows.iter().zip(sys.rhs.iter()).all(|(row, want)| {
            let mut acc: Ratio<S> = Ratio::zero();
            for (a, m) in row.iter().zip(&self.entries) {
                acc = acc + Ratio::from_integer(a.clone()) * m.clone();
            }
            acc == Ratio::from_integer(want.clone())
        })
    }

    /// True when every entry is 0 or 1, i.e. the vector encodes a subset.
    pub fn is_binary(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_zero() || e.is_one())
    }

    /// Positions (0-based) whose entry equals one.
    pub fn selected_positions(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_one())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Solves the system by forward elimination with back-substitution
/// (Gauss-Jordan on the augmented matrix), free variables zeroed for the
/// particular solution, one free variable set to 1 per null-basis column.
///
/// This route is deliberately generic row reduction so it can serve as an
/// independent check of [`closed_form`].
pub fn eliminate<S: Scalar>(
    sys: &LinearSystem<S>,
) -> Result<(ParticularSolution<S>, NullBasis<S>), LinsysError> {
    let n = sys.width();
    if n < 5 {
        return Err(LinsysError::InstanceTooSmall { n });
    }

    // Augmented matrix over exact rationals: n coefficient columns + rhs.
    let mut m: Vec<Vec<Ratio<S>>> = sys
        .rows
        .iter()
        .zip(sys.rhs.iter())
        .map(|(row, b)| {
            row.iter()
                .map(|v| Ratio::from_integer(v.clone()))
                .chain(std::iter::once(Ratio::from_integer(b.clone())))
                .collect()
        })
        .collect();

    // The convention pivots on columns 1..4; if any pivot vanishes there the
    // window is degenerate (the leading 4x4 block has determinant beta).
    for col in 0..4 {
        let pivot_row = (col..4).find(|&r| !m[r][col].is_zero());
        let Some(pivot_row) = pivot_row else {
            return Err(LinsysError::DegenerateWindow);
        };
        m.swap(col, pivot_row);
        let inv = m[col][col].clone();
        for x in col..=n {
            m[col][x] = m[col][x].clone() / inv.clone();
        }
        for r in 0..4 {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for x in col..=n {
                    m[r][x] = m[r][x].clone() - factor.clone() * m[col][x].clone();
                }
            }
        }
    }

    let particular = ParticularSolution {
        b1: m[0][n].clone(),
        b2: m[1][n].clone(),
        v_r: m[2][n].is_one(),
        v_s: m[3][n].is_one(),
        len: n,
    };

    let columns = (4..n)
        .map(|free| {
            // Unit rows never involve free columns, so each special solution
            // has zeros at the pivot positions and only k1, k2 to record.
            debug_assert!(m[2][free].is_zero() && m[3][free].is_zero());
            BasisColumn {
                k1: -m[0][free].clone(),
                k2: -m[1][free].clone(),
            }
        })
        .collect();

    Ok((particular, NullBasis { columns }))
}

fn window_values<S: Scalar>(arr: &Arrangement<S>) -> (S, S, S, S) {
    let el = arr.elements();
    (el[0].clone(), el[1].clone(), el[2].clone(), el[3].clone())
}

/// beta = a'1 - a'2, the determinant of the leading block and the shared
/// denominator of the closed forms.
pub fn beta<S: Scalar>(arr: &Arrangement<S>) -> S {
    arr.elements()[0].clone() - arr.elements()[1].clone()
}

/// Closed forms for the particular solution and null basis; must match
/// [`eliminate`] exactly wherever both are defined.
pub fn closed_form<S: Scalar>(
    arr: &Arrangement<S>,
    asg: &Assignment<S>,
    c: &S,
) -> Result<(ParticularSolution<S>, NullBasis<S>), LinsysError> {
    let n = arr.len();
    if n < 5 {
        return Err(LinsysError::InstanceTooSmall { n });
    }
    let (a1, a2, ar, a_s) = window_values(arr);
    let b = beta(arr);
    if b.is_zero() {
        return Err(LinsysError::DegenerateWindow);
    }
    let vr: S = flag(asg.v_r);
    let vs: S = flag(asg.v_s);
    let spare = asg.t.clone() - vr.clone() - vs.clone();

    let b1_num =
        c.clone() - vs.clone() * a_s.clone() - vr.clone() * ar.clone() - a2.clone() * spare.clone();
    let b2_num = a1.clone() * spare + vs * a_s + vr * ar - c.clone();

    let particular = ParticularSolution {
        b1: Ratio::new(b1_num, b.clone()),
        b2: Ratio::new(b2_num, b.clone()),
        v_r: asg.v_r,
        v_s: asg.v_s,
        len: n,
    };

    let columns = arr.elements()[4..]
        .iter()
        .map(|ai| BasisColumn {
            k1: Ratio::new(a2.clone() - ai.clone(), b.clone()),
            k2: Ratio::new(ai.clone() - a1.clone(), b.clone()),
        })
        .collect();

    Ok((particular, NullBasis { columns }))
}

/// delta1 in expanded form: t1 (a1 - a2) + v_s (a_s - a2) + v_r (a_r - a2) + a2 t - c.
pub fn delta1_expanded<S: Scalar>(arr: &Arrangement<S>, asg: &Assignment<S>, c: &S) -> S {
    let (a1, a2, ar, a_s) = window_values(arr);
    let t1: S = flag(asg.t1);
    let vr: S = flag(asg.v_r);
    let vs: S = flag(asg.v_s);
    t1 * (a1 - a2.clone()) + vs * (a_s - a2.clone()) + vr * (ar - a2.clone()) + a2 * asg.t.clone()
        - c.clone()
}

/// delta1 with the a2 terms grouped: a2 (t - t1 - v_r - v_s) - (c - t1 a1 - v_r a_r - v_s a_s).
/// Algebraically identical to [`delta1_expanded`]; kept as a separate route
/// for the equivalence sweeps.
pub fn delta1_grouped<S: Scalar>(arr: &Arrangement<S>, asg: &Assignment<S>, c: &S) -> S {
    let (a1, a2, ar, a_s) = window_values(arr);
    let t1: S = flag(asg.t1);
    let vr: S = flag(asg.v_r);
    let vs: S = flag(asg.v_s);
    a2 * (asg.t.clone() - t1.clone() - vr.clone() - vs.clone())
        - (c.clone() - t1 * a1 - vr * ar - vs * a_s)
}

/// delta2 in expanded form: t2 (a1 - a2) - v_s (a_s - a1) - v_r (a_r - a1) - a1 t + c.
pub fn delta2_expanded<S: Scalar>(arr: &Arrangement<S>, asg: &Assignment<S>, c: &S) -> S {
    let (a1, a2, ar, a_s) = window_values(arr);
    let t2: S = flag(asg.t2);
    let vr: S = flag(asg.v_r);
    let vs: S = flag(asg.v_s);
    t2 * (a1.clone() - a2) - vs * (a_s - a1.clone()) - vr * (ar - a1.clone())
        - a1 * asg.t.clone()
        + c.clone()
}

/// delta2 with the a1 terms grouped: (c - t2 a2 - v_r a_r - v_s a_s) - a1 (t - t2 - v_r - v_s).
pub fn delta2_grouped<S: Scalar>(arr: &Arrangement<S>, asg: &Assignment<S>, c: &S) -> S {
    let (a1, a2, ar, a_s) = window_values(arr);
    let t2: S = flag(asg.t2);
    let vr: S = flag(asg.v_r);
    let vs: S = flag(asg.v_s);
    (c.clone() - t2.clone() * a2 - vr.clone() * ar - vs.clone() * a_s)
        - a1 * (asg.t.clone() - t2 - vr - vs)
}

/// Integer scalars of a window configuration: (beta, delta1, delta2).
/// This is the solver's streaming entry point; the full table divides the
/// same quantities through.
pub fn window_deltas<S: Scalar>(arr: &Arrangement<S>, asg: &Assignment<S>, c: &S) -> (S, S, S) {
    (
        beta(arr),
        delta1_expanded(arr, asg, c),
        delta2_expanded(arr, asg, c),
    )
}

/// Builds the directional contribution table for a configuration.
pub fn contribution_table<S: Scalar>(
    arr: &Arrangement<S>,
    asg: &Assignment<S>,
    c: &S,
) -> Result<ContributionTable<S>, LinsysError> {
    let n = arr.len();
    if n < 5 {
        return Err(LinsysError::InstanceTooSmall { n });
    }
    if beta(arr).is_zero() {
        return Err(LinsysError::DegenerateWindow);
    }
    let d1den = delta1_expanded(arr, asg, c);
    let d2den = delta2_expanded(arr, asg, c);
    if d1den.is_zero() || d2den.is_zero() {
        return Err(LinsysError::DegenerateTargets);
    }
    let (a1, a2, _, _) = window_values(arr);
    let dd = d1den.clone() * d2den.clone();

    let mut d1 = Vec::with_capacity(n - 4);
    let mut d2 = Vec::with_capacity(n - 4);
    let mut d3 = Vec::with_capacity(n - 4);
    for ai in &arr.elements()[4..] {
        d1.push(Ratio::new(a2.clone() - ai.clone(), d1den.clone()));
        d2.push(Ratio::new(ai.clone() - a1.clone(), d2den.clone()));
        let num = d1den.clone() * a1.clone() + d2den.clone() * a2.clone()
            - ai.clone() * (d1den.clone() + d2den.clone());
        d3.push(Ratio::new(num, dd.clone()).abs());
    }

    Ok(ContributionTable {
        delta1: Ratio::from_integer(d1den),
        delta2: Ratio::from_integer(d2den),
        d1,
        d2,
        d3,
    })
}

/// Entrywise sum of the particular solution and the selected basis columns.
pub fn assemble_membership<S: Scalar>(
    p: &ParticularSolution<S>,
    basis: &NullBasis<S>,
    sel: &SelectionSet,
) -> MembershipVector<S> {
    let mut m = p.to_membership();
    for &i in sel.indices() {
        let col = &basis.columns[i];
        m.entries[0] = m.entries[0].clone() + col.k1.clone();
        m.entries[1] = m.entries[1].clone() + col.k2.clone();
        m.entries[4 + i] = Ratio::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rat;
    use num_traits::{One, Zero};

    fn ints(vals: &[i64]) -> Vec<Int> {
        vals.iter().map(|&v| Int::from(v)).collect()
    }

    fn rat(n: i64, d: i64) -> Rat {
        Ratio::new(Int::from(n), Int::from(d))
    }

    fn spec_arrangement() -> Arrangement {
        Arrangement::new(ints(&[5, 3, 2, 1, 7, 9]))
    }

    #[test]
    fn build_system_lays_out_rows_and_rhs() {
        let arr = Arrangement::new(ints(&[5, 3, 2, 1, 7]));
        let asg = Assignment::new(4, false, false, true, true);
        let sys = build_system(&arr, &asg, &Int::from(11)).unwrap();
        assert_eq!(sys.rows()[0], ints(&[5, 3, 2, 1, 7]));
        assert_eq!(sys.rows()[1], ints(&[1, 1, 1, 1, 1]));
        assert_eq!(sys.rows()[2], ints(&[0, 0, 1, 0, 0]));
        assert_eq!(sys.rows()[3], ints(&[0, 0, 0, 1, 0]));
        assert_eq!(sys.rhs(), &[Int::from(11), Int::from(4), Int::one(), Int::one()]);

        let asg = Assignment::new(3, false, false, false, true);
        let sys = build_system(&Arrangement::new(ints(&[1, 2, 3, 4, 5])), &asg, &Int::zero())
            .unwrap();
        assert_eq!(sys.rhs(), &[Int::zero(), Int::from(3), Int::zero(), Int::one()]);
    }

    #[test]
    fn build_system_rejects_small_instances() {
        let arr = Arrangement::new(ints(&[1, 2, 3, 4]));
        let asg = Assignment::new(3, false, false, true, true);
        assert_eq!(
            build_system(&arr, &asg, &Int::zero()),
            Err(LinsysError::InstanceTooSmall { n: 4 })
        );
    }

    #[test]
    fn eliminate_window_summing_configuration_forces_unit_balances() {
        // window 5+3+2+1 = 11 = c with both pivots in: b1 = b2 = 1
        let asg = Assignment::new(4, true, true, true, true);
        let sys = build_system(&spec_arrangement(), &asg, &Int::from(11)).unwrap();
        let (p, _) = eliminate(&sys).unwrap();
        assert_eq!(p.b1, Rat::one());
        assert_eq!(p.b2, Rat::one());
    }

    #[test]
    fn eliminate_matches_hand_reduction() {
        let asg = Assignment::new(5, true, true, true, true);
        let sys = build_system(&spec_arrangement(), &asg, &Int::from(18)).unwrap();
        let (p, basis) = eliminate(&sys).unwrap();
        assert_eq!(p.b1, rat(3, 1));
        assert_eq!(p.b2, Rat::zero());
        assert_eq!(basis.columns.len(), 2);
        assert_eq!(basis.columns[0].k1, rat(-2, 1));
        assert_eq!(basis.columns[0].k2, rat(1, 1));
    }

    #[test]
    fn eliminate_detects_degenerate_window() {
        let arr = Arrangement::new(ints(&[4, 4, 2, 1, 7, 9]));
        let asg = Assignment::new(4, true, true, true, true);
        let sys = build_system(&arr, &asg, &Int::from(11)).unwrap();
        assert_eq!(eliminate(&sys).unwrap_err(), LinsysError::DegenerateWindow);
    }

    #[test]
    fn eliminate_handles_zero_leading_balance_element() {
        // a'1 = 0 forces a row swap in the reduction but beta = -3 != 0.
        let arr = Arrangement::new(ints(&[0, 3, 2, 1, 7, 9]));
        let asg = Assignment::new(4, true, true, true, true);
        let c = Int::from(10);
        let sys = build_system(&arr, &asg, &c).unwrap();
        let (p, basis) = eliminate(&sys).unwrap();
        let (p2, basis2) = closed_form(&arr, &asg, &c).unwrap();
        assert_eq!(p, p2);
        assert_eq!(basis, basis2);
    }

    #[test]
    fn closed_form_matches_spec_example() {
        let asg = Assignment::new(5, true, true, true, true);
        let (p, basis) = closed_form(&spec_arrangement(), &asg, &Int::from(18)).unwrap();
        assert_eq!(p.b1, rat(3, 1));
        assert_eq!(p.b2, Rat::zero());
        assert_eq!(basis.columns[0].k1, rat(-2, 1));
        assert_eq!(basis.columns[0].k2, rat(1, 1));
        // homogeneous row 2 forces k1 + k2 = -1 in every column
        for col in &basis.columns {
            assert_eq!(col.k1.clone() + col.k2.clone(), rat(-1, 1));
        }
    }

    #[test]
    fn contribution_table_matches_spec_example() {
        let asg = Assignment::new(5, true, true, true, true);
        let table = contribution_table(&spec_arrangement(), &asg, &Int::from(18)).unwrap();
        assert_eq!(table.delta1, rat(-4, 1));
        assert_eq!(table.delta2, rat(2, 1));
        assert_eq!(table.d1[0], Rat::one());
        assert_eq!(table.d2[0], Rat::one());
        assert_eq!(table.d3[0], Rat::zero());
        assert_eq!(table.d1[1], rat(3, 2));
        assert_eq!(table.d2[1], rat(2, 1));
        assert_eq!(table.d3[1], rat(1, 2));
        // row-3 identity
        for i in 0..2 {
            assert_eq!(
                table.d3[i],
                (table.d1[i].clone() - table.d2[i].clone()).abs()
            );
        }
    }

    #[test]
    fn contribution_table_rejects_degenerate_targets() {
        // delta1 = (a1-a2) + (a4-a2) + (a3-a2) + 3 a2 - c = 9 - c, so c = 9
        // hits the degenerate target exactly.
        let arr = Arrangement::new(ints(&[2, 1, 3, 4, 5]));
        let asg = Assignment::new(3, true, false, true, true);
        assert_eq!(
            contribution_table(&arr, &asg, &Int::from(9)).unwrap_err(),
            LinsysError::DegenerateTargets
        );
    }

    #[test]
    fn assemble_membership_spec_example() {
        let asg = Assignment::new(5, true, true, true, true);
        let c = Int::from(18);
        let (p, basis) = closed_form(&spec_arrangement(), &asg, &c).unwrap();

        // empty selection is the particular solution itself
        let m0 = assemble_membership(&p, &basis, &SelectionSet::default());
        assert_eq!(m0, p.to_membership());

        let m = assemble_membership(&p, &basis, &SelectionSet::new(vec![0]));
        let want: Vec<Rat> = [1, 1, 1, 1, 1, 0]
            .iter()
            .map(|&v| Rat::from_integer(Int::from(v)))
            .collect();
        assert_eq!(m.entries(), &want[..]);
        assert!(m.is_binary());

        let sys = build_system(&spec_arrangement(), &asg, &c).unwrap();
        assert!(m.satisfies(&sys));
        assert!(m0.satisfies(&sys));
    }

    #[test]
    fn delta_identities_on_spec_example() {
        let arr = spec_arrangement();
        let asg = Assignment::new(5, true, true, true, true);
        let c = Int::from(18);
        let (p, _) = closed_form(&arr, &asg, &c).unwrap();
        let b = Rat::from_integer(beta(&arr));
        let d1 = Rat::from_integer(delta1_expanded(&arr, &asg, &c));
        let d2 = Rat::from_integer(delta2_expanded(&arr, &asg, &c));
        assert_eq!(d1, (Rat::one() - p.b1) * b.clone());
        assert_eq!(d2, (Rat::one() - p.b2) * b);
        assert_eq!(delta1_expanded(&arr, &asg, &c), delta1_grouped(&arr, &asg, &c));
        assert_eq!(delta2_expanded(&arr, &asg, &c), delta2_grouped(&arr, &asg, &c));
    }

    #[test]
    fn window_front_swaps_track_displaced_elements() {
        let arr = Arrangement::new(ints(&[10, 11, 12, 13, 14, 15]));
        let w = arr.with_window_front([5, 0, 2, 1]);
        assert_eq!(w.elements(), &ints(&[15, 10, 12, 11, 14, 13])[..]);
        // origin follows the values
        assert_eq!(w.origin(), &[5, 0, 2, 1, 4, 3]);
    }
}
