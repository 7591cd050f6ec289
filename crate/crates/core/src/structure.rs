//! Submeanders as common intervals of the visit permutation.
//!
//! Up to equivalence with respect to the ambient meander, a submeander is
//! determined by the set of intersection points it contains, and those sets
//! are exactly the runs of l-positions that are also visited in consecutive
//! steps of `m`. This module enumerates them, cuts them out or collapses them,
//! and builds the tree of strong intervals.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::meander::{MeanderCode, PointType};
use crate::operad::{touch_alignment, Alignment};

/// Run `lo..=hi` of l-positions. `hi < lo` encodes the empty submeander.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub const EMPTY: Interval = Interval { lo: 1, hi: 0 };

    pub fn new(lo: usize, hi: usize) -> Self {
        Interval { lo, hi }
    }

    pub fn point(p: usize) -> Self {
        Interval { lo: p, hi: p }
    }

    pub fn full(code: &MeanderCode) -> Self {
        Interval { lo: 1, hi: code.len() }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.lo <= p && p <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        other.is_empty() || (self.lo <= other.lo && other.hi <= self.hi)
    }

    /// Intersect without either containing the other.
    pub fn overlaps(&self, other: &Interval) -> bool {
        (self.lo < other.lo && other.lo <= self.hi && self.hi < other.hi)
            || (other.lo < self.lo && self.lo <= other.hi && other.hi < self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("[]")
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// Whether `iv` is a nonempty common interval of `code`.
pub fn is_common(code: &MeanderCode, iv: Interval) -> bool {
    if iv.is_empty() || iv.hi > code.len() || iv.lo == 0 {
        return false;
    }
    let times = code.visit_times();
    let (min, max) = times[iv.lo - 1..iv.hi]
        .iter()
        .fold((usize::MAX, 0), |(lo, hi), &t| (lo.min(t), hi.max(t)));
    max - min == iv.hi - iv.lo
}

/// All common intervals, the empty one first, then by `(lo, hi)`.
/// The count equals the number of pairwise non-equivalent submeanders.
pub fn common_intervals(code: &MeanderCode) -> Vec<Interval> {
    let mut out = vec![Interval::EMPTY];
    let times = code.visit_times();
    let n = code.len();
    for lo in 1..=n {
        let (mut min, mut max) = (usize::MAX, 0);
        for hi in lo..=n {
            let t = times[hi - 1];
            min = min.min(t);
            max = max.max(t);
            if max - min == hi - lo {
                out.push(Interval::new(lo, hi));
            }
        }
    }
    out
}

/// Number of common intervals including the empty one, without allocating.
pub fn common_interval_count(code: &MeanderCode) -> usize {
    let times = code.visit_times();
    let n = code.len();
    let mut count = 1;
    for lo in 0..n {
        let (mut min, mut max) = (usize::MAX, 0);
        for hi in lo..n {
            min = min.min(times[hi]);
            max = max.max(times[hi]);
            if max - min == hi - lo {
                count += 1;
            }
        }
    }
    count
}

fn require_common(code: &MeanderCode, iv: Interval) -> Result<()> {
    if is_common(code, iv) {
        Ok(())
    } else {
        Err(Error::NotCommonInterval { lo: iv.lo, hi: iv.hi })
    }
}

/// The block as seen from inside, positions relabeled and temporal order kept.
fn extract_raw(code: &MeanderCode, iv: Interval) -> MeanderCode {
    let types = code.types()[iv.lo - 1..iv.hi].to_vec();
    let visit = code
        .visit()
        .iter()
        .filter(|&&p| iv.contains(p))
        .map(|&p| p - iv.lo + 1)
        .collect();
    MeanderCode::from_parts_unchecked(types, visit)
}

/// Cuts out the submeander on `iv`.
///
/// Blocks with an odd transverse count keep the l-order of `code`. Blocks
/// with an even transverse count sit at a touch of the contracted meander and
/// are mirrored whenever that touch is entered along its right strand, so the
/// result is always a canonical code and insertion puts it back unchanged.
pub fn extract(code: &MeanderCode, iv: Interval) -> Result<MeanderCode> {
    require_common(code, iv)?;
    Ok(extract_oriented(code, iv).0)
}

/// Canonical block plus whether it had to be mirrored.
pub(crate) fn extract_oriented(code: &MeanderCode, iv: Interval) -> (MeanderCode, bool) {
    let raw = extract_raw(code, iv);
    if raw.order().n % 2 == 1 {
        return (raw, false);
    }
    let host = contract_unchecked(code, iv);
    match touch_alignment(&host, iv.lo) {
        Alignment::Aligned => (raw, false),
        Alignment::Flipped => (raw.horizontal_flip(), true),
    }
}

/// Type of the point a block collapses to: parity of its crossings.
pub fn block_type(code: &MeanderCode, iv: Interval) -> PointType {
    let crossings = code.types()[iv.lo - 1..iv.hi]
        .iter()
        .filter(|&&t| t == PointType::Cross)
        .count();
    if crossings % 2 == 1 {
        PointType::Cross
    } else {
        PointType::Touch
    }
}

fn contract_unchecked(code: &MeanderCode, iv: Interval) -> MeanderCode {
    let shrink = iv.hi - iv.lo;
    let mut types = Vec::with_capacity(code.len() - shrink);
    types.extend_from_slice(&code.types()[..iv.lo - 1]);
    types.push(block_type(code, iv));
    types.extend_from_slice(&code.types()[iv.hi..]);

    let mut visit = Vec::with_capacity(types.len());
    let mut emitted = false;
    for &p in code.visit() {
        if iv.contains(p) {
            if !emitted {
                visit.push(iv.lo);
                emitted = true;
            }
        } else if p > iv.hi {
            visit.push(p - shrink);
        } else {
            visit.push(p);
        }
    }
    MeanderCode::from_parts_unchecked(types, visit)
}

/// Collapses the submeander on `iv` to a single point.
pub fn contract(code: &MeanderCode, iv: Interval) -> Result<MeanderCode> {
    require_common(code, iv)?;
    Ok(contract_unchecked(code, iv))
}

/// Collapses several pairwise disjoint common intervals at once.
pub fn contract_many(code: &MeanderCode, intervals: &[Interval]) -> Result<MeanderCode> {
    let mut sorted: Vec<Interval> = intervals.iter().copied().filter(|iv| !iv.is_empty()).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].hi >= w[1].lo {
            return Err(Error::NotCommonInterval { lo: w[1].lo, hi: w[1].hi });
        }
    }
    for iv in &sorted {
        require_common(code, *iv)?;
    }
    // Right to left keeps the remaining intervals' coordinates intact.
    Ok(sorted
        .iter()
        .rev()
        .fold(code.clone(), |acc, iv| contract_unchecked(&acc, *iv)))
}

pub fn is_snake(code: &MeanderCode) -> bool {
    !code.is_empty() && code.is_monotone()
}

/// Only trivial submeanders. Total order two is excluded: every such meander
/// is a snake.
pub fn is_irreducible(code: &MeanderCode) -> bool {
    code.len() >= 3 && common_interval_count(code) == code.len() + 2
}

pub fn is_iterated_snake(code: &MeanderCode) -> bool {
    match strong_intervals(code) {
        Ok(tree) => tree.root.all_linear(),
        Err(_) => false,
    }
}

/// Kind of an internal node of the strong-interval tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeKind {
    /// Quotient is monotone.
    Linear,
    /// Quotient has only trivial common intervals.
    Prime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeNode {
    Leaf {
        position: usize,
        point: PointType,
    },
    Internal {
        interval: Interval,
        kind: NodeKind,
        quotient: MeanderCode,
        children: Vec<TreeNode>,
    },
}

impl TreeNode {
    pub fn interval(&self) -> Interval {
        match self {
            TreeNode::Leaf { position, .. } => Interval::point(*position),
            TreeNode::Internal { interval, .. } => *interval,
        }
    }

    pub fn all_linear(&self) -> bool {
        match self {
            TreeNode::Leaf { .. } => true,
            TreeNode::Internal { kind, children, .. } => {
                *kind == NodeKind::Linear && children.iter().all(TreeNode::all_linear)
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            TreeNode::Leaf { position, point } => json!({
                "kind": "Leaf",
                "interval": [position, position],
                "quotient": match point {
                    PointType::Cross => "C|1",
                    PointType::Touch => "T|1",
                },
                "children": [],
            }),
            TreeNode::Internal {
                interval,
                kind,
                quotient,
                children,
            } => json!({
                "kind": kind,
                "interval": [interval.lo, interval.hi],
                "quotient": quotient.to_string(),
                "children": children.iter().map(TreeNode::to_json).collect::<Vec<_>>(),
            }),
        }
    }
}

/// Substitution decomposition of a meander.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongIntervalTree {
    pub root: TreeNode,
}

impl StrongIntervalTree {
    pub fn to_json(&self) -> serde_json::Value {
        self.root.to_json()
    }
}

/// Table of common and strong intervals, indexed `[lo - 1][hi - 1]`.
struct IntervalTable {
    strong: Vec<Vec<bool>>,
}

impl IntervalTable {
    fn new(code: &MeanderCode) -> Self {
        let n = code.len();
        let common: Vec<Interval> = common_intervals(code).into_iter().skip(1).collect();
        let mut strong = vec![vec![false; n]; n];
        for iv in &common {
            if !common.iter().any(|other| iv.overlaps(other)) {
                strong[iv.lo - 1][iv.hi - 1] = true;
            }
        }
        IntervalTable { strong }
    }

    fn is_strong(&self, iv: Interval) -> bool {
        self.strong[iv.lo - 1][iv.hi - 1]
    }

    /// Maximal strong proper subintervals; they partition `iv`.
    fn children(&self, iv: Interval) -> Vec<Interval> {
        let mut out = Vec::new();
        let mut lo = iv.lo;
        while lo <= iv.hi {
            let hi = (lo..=iv.hi)
                .rev()
                .find(|&hi| Interval::new(lo, hi) != iv && self.is_strong(Interval::new(lo, hi)))
                .expect("singletons are strong");
            out.push(Interval::new(lo, hi));
            lo = hi + 1;
        }
        out
    }
}

/// Builds the tree of strong common intervals.
pub fn strong_intervals(code: &MeanderCode) -> Result<StrongIntervalTree> {
    if code.is_empty() {
        return Err(Error::EmptyMeander);
    }
    let table = IntervalTable::new(code);
    Ok(StrongIntervalTree {
        root: build_node(code, &table, Interval::full(code)),
    })
}

fn build_node(code: &MeanderCode, table: &IntervalTable, iv: Interval) -> TreeNode {
    if iv.len() == 1 {
        return TreeNode::Leaf {
            position: iv.lo,
            point: code.point_type(iv.lo),
        };
    }
    let child_intervals = table.children(iv);
    let (block, flipped) = extract_oriented(code, iv);
    let len = iv.len();
    let local: Vec<Interval> = child_intervals
        .iter()
        .map(|c| {
            let (lo, hi) = (c.lo - iv.lo + 1, c.hi - iv.lo + 1);
            if flipped {
                Interval::new(len + 1 - hi, len + 1 - lo)
            } else {
                Interval::new(lo, hi)
            }
        })
        .collect();
    let quotient = contract_many(&block, &local).expect("children are disjoint common intervals");
    let kind = if quotient.is_monotone() {
        NodeKind::Linear
    } else {
        NodeKind::Prime
    };
    let children = child_intervals
        .into_iter()
        .map(|c| build_node(code, table, c))
        .collect();
    TreeNode::Internal {
        interval: iv,
        kind,
        quotient,
        children,
    }
}
