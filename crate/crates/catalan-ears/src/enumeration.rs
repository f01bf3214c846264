//! Exhaustive dissection enumeration and the ear-statistic tables
//! `u[n,k]` (triangles with two polygon sides) and `v[n,k]` (triangles with
//! two non-base sides), computed three independent ways: brute force over
//! all dissections, the convolution recurrences, and the closed forms.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{binomial, catalan, exact_div, pow2, ArithError, Nat};
use crate::dissection::{ring_to_label, Dissection};

/// Largest `n` the exhaustive enumerator accepts (`C_14` = 2,674,440
/// dissections, still desk-scale with streaming).
pub const MAX_ENUM_N: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("n={n} outside supported enumeration range 1..={max}")]
    NOutOfRange { n: usize, max: usize },
    #[error("recurrence needs v rows through {needed}, table stops at {have}")]
    MissingDependencyRows { needed: usize, have: usize },
    #[error("expected a {expected}-statistic table")]
    WrongKind { expected: StatKind },
    #[error("closed-form routes disagree at (n={n}, k={k}): two-term {two_term} vs fraction {fraction}")]
    ClosedFormMismatch {
        n: usize,
        k: i64,
        two_term: Nat,
        fraction: Nat,
    },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// One triangle decision in the derivation: the sub-polygon on ring arc
/// `lo..hi` chose `apex`, and `pending` snapshots the arcs that still awaited
/// processing at that moment (needed to rewind the derivation).
struct Frame {
    lo: usize,
    hi: usize,
    apex: usize,
    pending: Vec<(usize, usize)>,
}

/// Streams every dissection of the `(n + 2)`-gon exactly once.
///
/// Order: the apex of the base triangle ascends; within one apex the left
/// sub-polygon's choices vary lexicographically, then the right's. The walk
/// is a backtracking odometer over the derivation stack, so memory stays
/// `O(n^2)` regardless of the Catalan-sized output.
pub struct DissectionIter {
    n: usize,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

/// All dissections of size `n`, in deterministic order.
pub fn dissections(n: usize) -> Result<DissectionIter, EnumerationError> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(EnumerationError::NOutOfRange { n, max: MAX_ENUM_N });
    }
    Ok(DissectionIter {
        n,
        frames: Vec::new(),
        started: false,
        done: false,
    })
}

impl DissectionIter {
    /// Processes every arc on the worklist, always choosing the smallest
    /// apex. Arcs are only pushed when they still need a triangle
    /// (`hi - lo >= 2`).
    fn expand_min(&mut self, mut worklist: Vec<(usize, usize)>) {
        while let Some((lo, hi)) = worklist.pop() {
            let pending = worklist.clone();
            if hi - (lo + 1) >= 2 {
                worklist.push((lo + 1, hi));
            }
            self.frames.push(Frame {
                lo,
                hi,
                apex: lo + 1,
                pending,
            });
        }
    }

    fn current(&self) -> Dissection {
        let mut diagonals = Vec::with_capacity(self.n - 1);
        for f in &self.frames {
            if f.apex - f.lo >= 2 {
                diagonals.push(label_pair(f.lo, f.apex, self.n));
            }
            if f.hi - f.apex >= 2 {
                diagonals.push(label_pair(f.apex, f.hi, self.n));
            }
        }
        diagonals.sort_unstable();
        Dissection::from_sorted_unchecked(self.n, diagonals)
    }
}

fn label_pair(lo: usize, hi: usize, n: usize) -> (i32, i32) {
    let (a, b) = (ring_to_label(lo, n), ring_to_label(hi, n));
    (a.min(b), a.max(b))
}

impl Iterator for DissectionIter {
    type Item = Dissection;

    fn next(&mut self) -> Option<Dissection> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.expand_min(vec![(0, self.n + 1)]);
            return Some(self.current());
        }
        loop {
            let Some(top) = self.frames.last() else {
                self.done = true;
                return None;
            };
            if top.apex + 1 < top.hi {
                let idx = self.frames.len() - 1;
                self.frames[idx].apex += 1;
                let f = &self.frames[idx];
                let (lo, hi, apex) = (f.lo, f.hi, f.apex);
                let mut worklist = f.pending.clone();
                if hi - apex >= 2 {
                    worklist.push((apex, hi));
                }
                if apex - lo >= 2 {
                    worklist.push((lo, apex));
                }
                self.expand_min(worklist);
                return Some(self.current());
            }
            self.frames.pop();
        }
    }
}

// ---------------------------------------------------------------------------
// Statistic tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatKind {
    U,
    V,
}

impl std::fmt::Display for StatKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StatKind::U => "u",
            StatKind::V => "v",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Brute,
    Recurrence,
    Closed,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::Brute => "brute",
            Provenance::Recurrence => "recurrence",
            Provenance::Closed => "closed",
        })
    }
}

/// Exact values of one ear statistic, indexed by `(n, k)`. Only nonzero
/// entries are stored; absent means zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    kind: StatKind,
    provenance: Provenance,
    nmax: usize,
    entries: BTreeMap<(usize, usize), Nat>,
}

impl StatTable {
    fn new(kind: StatKind, provenance: Provenance, nmax: usize) -> Self {
        StatTable {
            kind,
            provenance,
            nmax,
            entries: BTreeMap::new(),
        }
    }

    pub fn kind(&self) -> StatKind {
        self.kind
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    fn insert_nonzero(&mut self, n: usize, k: usize, value: Nat) {
        if !value.is_zero() {
            self.entries.insert((n, k), value);
        }
    }

    /// The entry at `(n, k)`, zero when absent.
    pub fn get(&self, n: usize, k: usize) -> Nat {
        self.entries.get(&(n, k)).cloned().unwrap_or_else(Nat::zero)
    }

    /// Nonzero entries in `(n, k)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Nat)> {
        self.entries.iter().map(|(&(n, k), v)| (n, k, v))
    }

    /// Nonzero entries of row `n`, ascending `k`.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (usize, &Nat)> {
        self.entries
            .range((n, 0)..=(n, usize::MAX))
            .map(|(&(_, k), v)| (k, v))
    }

    pub fn row_sum(&self, n: usize) -> Nat {
        self.row(n).map(|(_, v)| v).sum()
    }

    /// CSV export: header `n,k,value`, rows sorted by `(n, k)`, decimal
    /// values.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, k, v) in self.iter() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
        out
    }
}

/// Tallies both ear statistics over one enumeration pass per size.
pub fn brute_tables(nmax: usize) -> Result<(StatTable, StatTable), EnumerationError> {
    let mut u = StatTable::new(StatKind::U, Provenance::Brute, nmax);
    let mut v = StatTable::new(StatKind::V, Provenance::Brute, nmax);
    for n in 1..=nmax {
        let mut u_counts: BTreeMap<usize, u64> = BTreeMap::new();
        let mut v_counts: BTreeMap<usize, u64> = BTreeMap::new();
        for d in dissections(n)? {
            let (ears, black_ears) = d.ear_statistics();
            *u_counts.entry(ears).or_insert(0) += 1;
            *v_counts.entry(black_ears).or_insert(0) += 1;
        }
        for (k, c) in u_counts {
            u.insert_nonzero(n, k, Nat::from(c));
        }
        for (k, c) in v_counts {
            v.insert_nonzero(n, k, Nat::from(c));
        }
    }
    Ok((u, v))
}

pub fn brute_table(kind: StatKind, nmax: usize) -> Result<StatTable, EnumerationError> {
    let (u, v) = brute_tables(nmax)?;
    Ok(match kind {
        StatKind::U => u,
        StatKind::V => v,
    })
}

/// The common double sum of both recurrences:
/// sum over `2 <= r <= n-1` of `v[r-1][j] * v[n-r][k-j]`, all `j`
/// (absent entries are zero, which makes the paper-side index bounds
/// automatic).
fn double_sum(v: &StatTable, n: usize, k: usize) -> Nat {
    let mut sum = Nat::zero();
    for r in 2..=n - 1 {
        for (j, val) in v.row(r - 1) {
            if j > k {
                break;
            }
            if let Some(w) = v.entries.get(&(n - r, k - j)) {
                sum += val * w;
            }
        }
    }
    sum
}

/// `v[n,k] = 2 v[n-1,k] + double_sum` for `n >= 4`; rows `n <= 3` are seeded
/// from brute force.
pub fn v_recurrence(nmax: usize) -> Result<StatTable, EnumerationError> {
    let seed_max = nmax.min(3);
    let (_, seed) = brute_tables(seed_max)?;
    let mut v = StatTable::new(StatKind::V, Provenance::Recurrence, nmax);
    v.entries = seed.entries;
    for n in 4..=nmax {
        for k in 1..=(n + 1) / 2 {
            let value = Nat::from(2u32) * v.get(n - 1, k) + double_sum(&v, n, k);
            v.insert_nonzero(n, k, value);
        }
    }
    Ok(v)
}

/// `u[n,k] = 2 v[n-1,k-1] + double_sum` for `n >= 4`, with the small cases
/// `u[1,1] = 1`, `u[2,2] = 2`, `u[3,2] = 5` seeded directly.
pub fn u_recurrence(nmax: usize, v: &StatTable) -> Result<StatTable, EnumerationError> {
    if v.kind != StatKind::V {
        return Err(EnumerationError::WrongKind {
            expected: StatKind::V,
        });
    }
    if nmax >= 4 && v.nmax < nmax - 1 {
        return Err(EnumerationError::MissingDependencyRows {
            needed: nmax - 1,
            have: v.nmax,
        });
    }
    let mut u = StatTable::new(StatKind::U, Provenance::Recurrence, nmax);
    for (n, k, value) in [(1, 1, 1u32), (2, 2, 2), (3, 2, 5)] {
        if n <= nmax {
            u.insert_nonzero(n, k, Nat::from(value));
        }
    }
    for n in 4..=nmax {
        for k in 2..=(n + 2) / 2 {
            let value = Nat::from(2u32) * v.get(n - 1, k - 1) + double_sum(v, n, k);
            u.insert_nonzero(n, k, value);
        }
    }
    Ok(u)
}

/// Closed form `v[n,k] = 2^(n+1-2k) * binom(n-1, 2k-2) * C_(k-1)`.
/// Out-of-support `k` gives zero through the binomial convention.
pub fn v_closed(n: usize, k: i64) -> Nat {
    let b = binomial(n as u64 - 1, 2 * k - 2);
    if b.is_zero() {
        return Nat::zero();
    }
    // Nonzero binomial forces 2k <= n + 1, so the exponent is nonnegative.
    let exp = (n as i64 + 1 - 2 * k) as u64;
    pow2(exp) * b * catalan(k as u64 - 1)
}

/// Closed form for `u[n,k]`, evaluated along both published routes:
///
/// * two-term: `2^(n+1-2k) * (binom(n-2,2k-3) C_(k-1) + 4 binom(n-2,2k-4) C_(k-2))`
/// * fraction: `2^(n-2(k-1)) * binom(n,2(k-1)) * C_(k-1) * (k-1)(n+2) / (n(n-1))`
///
/// with the division exact by construction. The two values must agree;
/// disagreement signals a transcription bug and is returned as an error.
pub fn u_closed(n: usize, k: i64) -> Result<Nat, EnumerationError> {
    if n < 2 || k < 2 || 2 * k > n as i64 + 2 {
        return Ok(Nat::zero());
    }
    let two_term = closed_term(n as i64 + 1 - 2 * k, n as u64 - 2, 2 * k - 3, k - 1)
        + closed_term(n as i64 + 3 - 2 * k, n as u64 - 2, 2 * k - 4, k - 2);

    let kk = (k - 1) as u64;
    let numerator = pow2(n as u64 - 2 * kk)
        * binomial(n as u64, 2 * kk as i64)
        * catalan(kk)
        * Nat::from(kk)
        * Nat::from(n as u64 + 2);
    let fraction = exact_div(&numerator, &Nat::from(n as u64 * (n as u64 - 1)))?;

    if two_term != fraction {
        return Err(EnumerationError::ClosedFormMismatch {
            n,
            k,
            two_term,
            fraction,
        });
    }
    Ok(fraction)
}

/// One summand `2^exp * binom(top, pick) * C_c`, zero when the binomial
/// vanishes (which is exactly when `exp` could go negative).
fn closed_term(exp: i64, top: u64, pick: i64, c: i64) -> Nat {
    let b = binomial(top, pick);
    if b.is_zero() {
        return Nat::zero();
    }
    pow2(exp as u64) * b * catalan(c as u64)
}

/// Full table from the closed forms. The u-statistic formula starts at
/// `n = 2`; the `n = 1` base value `u[1,1] = 1` is seeded like the
/// recurrence does.
pub fn closed_table(kind: StatKind, nmax: usize) -> Result<StatTable, EnumerationError> {
    let mut t = StatTable::new(kind, Provenance::Closed, nmax);
    match kind {
        StatKind::U => {
            if nmax >= 1 {
                t.insert_nonzero(1, 1, Nat::from(1u32));
            }
            for n in 2..=nmax {
                for k in 2..=(n + 2) / 2 {
                    t.insert_nonzero(n, k, u_closed(n, k as i64)?);
                }
            }
        }
        StatKind::V => {
            for n in 1..=nmax {
                for k in 1..=(n + 1) / 2 {
                    t.insert_nonzero(n, k, v_closed(n, k as i64));
                }
            }
        }
    }
    Ok(t)
}

/// Builds the table for one statistic by the requested route.
pub fn table(
    kind: StatKind,
    provenance: Provenance,
    nmax: usize,
) -> Result<StatTable, EnumerationError> {
    match provenance {
        Provenance::Brute => brute_table(kind, nmax),
        Provenance::Recurrence => match kind {
            StatKind::V => v_recurrence(nmax),
            StatKind::U => {
                let v = v_recurrence(nmax.saturating_sub(1).max(1))?;
                u_recurrence(nmax, &v)
            }
        },
        Provenance::Closed => closed_table(kind, nmax),
    }
}

// ---------------------------------------------------------------------------
// The u/v relation
// ---------------------------------------------------------------------------

/// One failing `(n, k)` of the relation, with both sides rearranged to stay
/// in nonnegative integers: `lhs = u[n,k] + 2 v[n-1,k]`,
/// `rhs = v[n,k] + 2 v[n-1,k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationViolation {
    pub n: usize,
    pub k: usize,
    pub lhs: Nat,
    pub rhs: Nat,
}

/// Outcome of checking `u[n,k] = v[n,k] + 2 v[n-1,k-1] - 2 v[n-1,k]`
/// entrywise. Violations are report content, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub nmax: usize,
    pub checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the relation for all `1 <= n <= nmax` and every `k` up to one past
/// either statistic's support, treating absent entries (including the whole
/// `n = 0` row) as zero.
pub fn relation_check(u: &StatTable, v: &StatTable, nmax: usize) -> RelationReport {
    let mut report = RelationReport {
        nmax,
        checked: 0,
        violations: Vec::new(),
    };
    for n in 1..=nmax {
        for k in 0..=(n + 2) / 2 + 1 {
            let lhs = u.get(n, k) + Nat::from(2u32) * v_at(v, n.checked_sub(1), k);
            let rhs = v.get(n, k)
                + Nat::from(2u32) * k.checked_sub(1).map_or_else(Nat::zero, |km1| v_at(v, Some(n - 1), km1));
            report.checked += 1;
            if lhs != rhs {
                report.violations.push(RelationViolation { n, k, lhs, rhs });
            }
        }
    }
    report
}

fn v_at(v: &StatTable, n: Option<usize>, k: usize) -> Nat {
    match n {
        Some(n) if n >= 1 => v.get(n, k),
        _ => Nat::zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::nat;
    use num_traits::ToPrimitive;

    #[test]
    fn enumeration_counts_are_catalan() {
        for n in 1..=8usize {
            let count = dissections(n).unwrap().count();
            assert_eq!(count, catalan(n as u64).to_usize().unwrap(), "n={n}");
        }
    }

    #[test]
    fn enumeration_rejects_out_of_range() {
        assert!(matches!(
            dissections(0),
            Err(EnumerationError::NOutOfRange { .. })
        ));
        assert!(matches!(
            dissections(MAX_ENUM_N + 1),
            Err(EnumerationError::NOutOfRange { .. })
        ));
    }

    #[test]
    fn enumeration_is_deterministic_and_distinct() {
        let first: Vec<String> = dissections(5).unwrap().map(|d| d.to_json()).collect();
        let second: Vec<String> = dissections(5).unwrap().map(|d| d.to_json()).collect();
        assert_eq!(first, second);
        let mut sorted = first.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), first.len());
    }

    #[test]
    fn enumeration_order_starts_with_the_fan() {
        let all: Vec<Dissection> = dissections(3).unwrap().collect();
        assert_eq!(all.len(), 5);
        assert_eq!(all[0].to_json(), r#"{"n":3,"diagonals":[[-1,1],[-1,2]]}"#);
        assert_eq!(all[1].to_json(), r#"{"n":3,"diagonals":[[-1,1],[1,3]]}"#);
    }

    #[test]
    fn ear_count_range_at_n4() {
        for d in dissections(4).unwrap() {
            let ears = d.ear_count();
            assert!(ears == 2 || ears == 3, "{}", d.to_json());
        }
    }

    #[test]
    fn brute_row_values_match_published_counts() {
        let (u, v) = brute_tables(5).unwrap();
        assert_eq!(u.get(5, 2), nat(28));
        assert_eq!(u.get(5, 3), nat(14));
        assert_eq!(u.row(5).count(), 2);
        assert_eq!(v.get(2, 1), nat(2));
        assert_eq!(v.get(3, 1), nat(4));
        assert_eq!(v.get(3, 2), nat(1));
        assert_eq!(v.row(3).count(), 2);
    }

    #[test]
    fn brute_row_sums_are_catalan() {
        let (u, v) = brute_tables(8).unwrap();
        for n in 1..=8 {
            assert_eq!(u.row_sum(n), catalan(n as u64), "u row {n}");
            assert_eq!(v.row_sum(n), catalan(n as u64), "v row {n}");
        }
    }

    #[test]
    fn support_bounds() {
        let (u, v) = brute_tables(9).unwrap();
        for (n, k, _) in u.iter() {
            if n >= 2 {
                assert!(2 <= k && k <= (n + 2) / 2, "u support at ({n},{k})");
            } else {
                assert_eq!((n, k), (1, 1));
            }
        }
        for (n, k, _) in v.iter() {
            assert!(1 <= k && k <= (n + 1) / 2, "v support at ({n},{k})");
        }
    }

    #[test]
    fn v_recurrence_matches_brute() {
        let rec = v_recurrence(6).unwrap();
        let (_, brute) = brute_tables(6).unwrap();
        assert_eq!(rec.get(4, 1), brute.get(4, 1));
        assert_eq!(rec.get(6, 2), brute.get(6, 2));
        for n in 1..=6 {
            for k in 0..=4 {
                assert_eq!(rec.get(n, k), brute.get(n, k), "v at ({n},{k})");
            }
        }
    }

    #[test]
    fn v_recurrence_matches_closed_at_12() {
        let rec = v_recurrence(12).unwrap();
        for k in 0..=7i64 {
            assert_eq!(rec.get(12, k as usize), v_closed(12, k), "k={k}");
        }
    }

    #[test]
    fn u_recurrence_matches_table_and_brute() {
        let v = v_recurrence(9).unwrap();
        let u = u_recurrence(9, &v).unwrap();
        assert_eq!(u.get(4, 3), nat(2));
        assert_eq!(u.get(7, 4), nat(45));
        let (brute, _) = brute_tables(9).unwrap();
        for k in 0..=6 {
            assert_eq!(u.get(9, k), brute.get(9, k), "u at (9,{k})");
        }
    }

    #[test]
    fn u_recurrence_requires_v_rows() {
        let v = v_recurrence(5).unwrap();
        assert!(matches!(
            u_recurrence(9, &v),
            Err(EnumerationError::MissingDependencyRows { needed: 8, have: 5 })
        ));
        let (u_table, _) = brute_tables(3).unwrap();
        assert!(matches!(
            u_recurrence(3, &u_table),
            Err(EnumerationError::WrongKind { .. })
        ));
    }

    #[test]
    fn v_closed_values() {
        assert_eq!(v_closed(1, 1), nat(1));
        assert_eq!(v_closed(2, 1), nat(2));
        assert_eq!(v_closed(9, 3), nat(2240));
        assert_eq!(v_closed(4, 3), nat(0));
        assert_eq!(v_closed(5, 0), nat(0));
        assert_eq!(v_closed(5, -2), nat(0));
    }

    #[test]
    fn u_closed_values() {
        assert_eq!(u_closed(4, 3).unwrap(), nat(2));
        assert_eq!(u_closed(5, 3).unwrap(), nat(14));
        assert_eq!(u_closed(8, 5).unwrap(), nat(10));
        assert_eq!(u_closed(8, 6).unwrap(), nat(0));
        assert_eq!(u_closed(8, 1).unwrap(), nat(0));
        assert_eq!(u_closed(1, 2).unwrap(), nat(0));
    }

    #[test]
    fn closed_tables_match_brute_small() {
        let (bu, bv) = brute_tables(7).unwrap();
        let cu = closed_table(StatKind::U, 7).unwrap();
        let cv = closed_table(StatKind::V, 7).unwrap();
        for n in 1..=7 {
            for k in 0..=5 {
                assert_eq!(cu.get(n, k), bu.get(n, k), "u at ({n},{k})");
                assert_eq!(cv.get(n, k), bv.get(n, k), "v at ({n},{k})");
            }
        }
    }

    #[test]
    fn relation_holds_on_closed_tables() {
        let u = closed_table(StatKind::U, 12).unwrap();
        let v = closed_table(StatKind::V, 12).unwrap();
        let report = relation_check(&u, &v, 12);
        assert!(report.pass(), "violations: {:?}", report.violations);
        assert!(report.checked > 0);
    }

    #[test]
    fn relation_spot_value() {
        // u[4,3] = v[4,3] + 2 v[3,2] - 2 v[3,3] = 0 + 2 - 0 = 2.
        assert_eq!(v_closed(4, 3), nat(0));
        assert_eq!(v_closed(3, 2), nat(1));
        assert_eq!(v_closed(3, 3), nat(0));
        assert_eq!(u_closed(4, 3).unwrap(), nat(2));
    }

    #[test]
    fn relation_reports_tampered_table() {
        let u = closed_table(StatKind::U, 5).unwrap();
        let mut v = closed_table(StatKind::V, 5).unwrap();
        v.entries.insert((5, 1), nat(99));
        let report = relation_check(&u, &v, 5);
        assert!(!report.pass());
        assert!(report.violations.iter().any(|viol| viol.n == 5));
    }

    #[test]
    fn csv_export_shape() {
        let (u, _) = brute_tables(3).unwrap();
        assert_eq!(u.to_csv(), "n,k,value\n1,1,1\n2,2,2\n3,2,5\n");
    }
}
