//! Exhaustive census of singular meanders.
//!
//! The path is grown by backtracking from each possible first position,
//! choosing the type of every point as it is reached. Every new arc is tested
//! against the arcs already drawn on its side and dead prefixes are cut
//! immediately. Listings are sorted by `(types, visit)` with `C < T`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::meander::{MeanderCode, PointType};
use crate::series::BiSeries;
use crate::structure::{common_interval_count, is_iterated_snake};

/// Largest total order the census supports.
pub const MAX_TOTAL_ORDER: usize = 20;

/// Classification of a single meander.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    Empty,
    Snake,
    /// Iterated snake that is not itself a snake.
    IteratedSnake,
    Irreducible,
    Composite,
}

impl Class {
    pub fn of(code: &MeanderCode) -> Class {
        let n = code.len();
        if n == 0 {
            Class::Empty
        } else if code.is_monotone() {
            Class::Snake
        } else if n >= 3 && common_interval_count(code) == n + 2 {
            Class::Irreducible
        } else if is_iterated_snake(code) {
            Class::IteratedSnake
        } else {
            Class::Composite
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Class::Empty => "empty",
            Class::Snake => "snake",
            Class::IteratedSnake => "iterated-snake",
            Class::Irreducible => "irreducible",
            Class::Composite => "composite",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which meanders an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassFilter {
    All,
    Snake,
    /// Snakes included.
    IteratedSnake,
    Irreducible,
    Composite,
}

impl ClassFilter {
    pub fn admits(self, class: Class) -> bool {
        match self {
            ClassFilter::All => true,
            ClassFilter::Snake => class == Class::Snake,
            ClassFilter::IteratedSnake => matches!(class, Class::Snake | Class::IteratedSnake),
            ClassFilter::Irreducible => class == Class::Irreducible,
            ClassFilter::Composite => class == Class::Composite,
        }
    }

    pub fn matches(self, code: &MeanderCode) -> bool {
        self == ClassFilter::All || self.admits(Class::of(code))
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassFilter::All => "all",
            ClassFilter::Snake => "snake",
            ClassFilter::IteratedSnake => "iterated-snake",
            ClassFilter::Irreducible => "irreducible",
            ClassFilter::Composite => "composite",
        }
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => ClassFilter::All,
            "snake" => ClassFilter::Snake,
            "iterated-snake" => ClassFilter::IteratedSnake,
            "irreducible" => ClassFilter::Irreducible,
            "composite" => ClassFilter::Composite,
            _ => {
                return Err(Error::Syntax {
                    at: 0,
                    msg: format!("unknown class {s:?}"),
                })
            }
        })
    }
}

/// One of `count` disjoint parts of the search space, split by the first
/// visited position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(Error::InvalidShard { index, count });
        }
        Ok(Shard { index, count })
    }

    fn owns_first(&self, first: usize) -> bool {
        (first - 1) % self.count == self.index
    }

    fn owns_empty(&self) -> bool {
        self.index == 0
    }
}

impl FromStr for Shard {
    type Err = Error;

    /// `i/N`.
    fn from_str(s: &str) -> Result<Shard> {
        let bad = || Error::Syntax {
            at: 0,
            msg: format!("expected shard i/N, got {s:?}"),
        };
        let (i, n) = s.split_once('/').ok_or_else(bad)?;
        let index = i.trim().parse().map_err(|_| bad())?;
        let count = n.trim().parse().map_err(|_| bad())?;
        Shard::new(index, count)
    }
}

/// The faces of one half-plane cut out by the arcs drawn so far, each as the
/// bitmask of positions on its boundary. Arc endpoints lie on two faces.
struct HalfPlane {
    faces: Vec<u32>,
}

impl HalfPlane {
    fn face_of(&self, q: u32) -> usize {
        self.faces
            .iter()
            .position(|f| f >> q & 1 == 1)
            .expect("every position lies on a face")
    }

    fn face_with(&self, a: u32, b: u32) -> usize {
        let m = 1 << a | 1 << b;
        self.faces
            .iter()
            .position(|f| f & m == m)
            .expect("arc endpoints share a face")
    }

    /// Cuts face `fi` along the arc `(a, b)`; pushes the inner part and
    /// returns the old mask for [`HalfPlane::unsplit`].
    fn split(&mut self, fi: usize, a: u32, b: u32) -> u32 {
        let old = self.faces[fi];
        let span = ((2u32 << b) - 1) & !((1u32 << a) - 1);
        let open = span & !(1 << a | 1 << b);
        self.faces[fi] = old & !open;
        self.faces.push(old & span);
        old
    }

    fn unsplit(&mut self, fi: usize, old: u32) {
        self.faces.pop();
        self.faces[fi] = old;
    }
}

/// Backtracking state. The path is grown one point at a time and the type of
/// each point is chosen when it is reached, so prefixes are shared by every
/// type sequence that agrees on the visited points.
///
/// An arc may join two points only if they lie on a common face of its half
/// plane, which is exactly the no-strict-crossing condition. A prefix is
/// abandoned as soon as some unvisited point or the right anchor can no
/// longer be reached through faces linked by unvisited points.
struct Search {
    n: u32,
    visited: u32,
    halves: [HalfPlane; 2],
    types: Vec<PointType>,
    visit: Vec<usize>,
    /// Allowed second positions.
    second: u32,
    /// Whether the visit prefix of each length holds a proper common interval.
    windowed: Vec<bool>,
}

const UP: usize = 0;

impl Search {
    fn new(n: usize) -> Self {
        let all = (4u32 << n) - 1;
        Search {
            n: n as u32,
            visited: 1,
            halves: [HalfPlane { faces: vec![all] }, HalfPlane { faces: vec![all & !1] }],
            types: vec![PointType::Cross; n],
            visit: Vec::with_capacity(n),
            second: !0,
            windowed: Vec::with_capacity(n),
        }
    }

    /// Whether the visit times ending at the newest one contain a window of
    /// length `2..n` whose positions are contiguous.
    fn window_ends_here(&self) -> bool {
        let v = &self.visit;
        let j = v.len() - 1;
        let n = self.n as usize;
        let (mut lo, mut hi) = (v[j], v[j]);
        for i in (0..j).rev() {
            lo = lo.min(v[i]);
            hi = hi.max(v[i]);
            if hi - lo == j - i {
                return j - i + 1 < n;
            }
        }
        false
    }

    fn reaches_all(&self, start: u32, free: u32, end: u32) -> bool {
        let need = free | end;
        let mut reached = start;
        loop {
            if reached & need == need {
                return true;
            }
            let before = reached;
            for half in &self.halves {
                for &f in &half.faces {
                    if f & reached & free != 0 {
                        reached |= f;
                    }
                }
            }
            if reached == before {
                return false;
            }
        }
    }

    /// Every free point needs two neighbours on the remaining path: other free
    /// points, the current point or the right anchor, each sharing a face.
    fn degrees_ok(&self, start: u32, free: u32, end: u32) -> bool {
        let mut m = free;
        while m != 0 {
            let q = m.trailing_zeros();
            m &= m - 1;
            let around = self.halves[0].faces[self.halves[0].face_of(q)] | self.halves[1].faces[self.halves[1].face_of(q)];
            let degree = (around & free & !(1 << q)).count_ones()
                + (start >> q & 1)
                + u32::from(around & end != 0);
            if degree < 2 {
                return false;
            }
        }
        true
    }

    /// Emits the codes that end by joining `next` to the last free point `q`.
    /// `faces` are the face of `next` across from `side` and its two faces on
    /// `side`. An arc ending at `q` never separates `q` from the right anchor
    /// on its own half, so only face membership needs checking.
    fn finish<F: FnMut(&mut [PointType], &[usize], [bool; 2], bool)>(
        &mut self,
        next: u32,
        q: u32,
        side: usize,
        faces: [u32; 3],
        emit: &mut F,
    ) {
        let end = 1u32 << (self.n + 1);
        let [across, outer, inner] = faces;
        let on_side = if outer >> q & 1 == 1 { outer } else { inner };
        let slot = next as usize - 1;
        self.visit.push(q as usize);
        let windowed = self.windowed.last().copied().unwrap_or(false) || self.window_ends_here();
        for (ty, half, face) in [(PointType::Cross, 1 - side, across), (PointType::Touch, side, on_side)] {
            if face >> q & 1 == 0 {
                continue;
            }
            self.types[slot] = ty;
            let far = &self.halves[1 - half];
            let ok = [far.faces[far.face_of(q)] & end != 0, face & end != 0];
            if ok[0] || ok[1] {
                emit(&mut self.types, &self.visit, ok, windowed);
            }
        }
        self.visit.pop();
    }

    /// Draws the arc from `cur` to `next` in half `side` and continues.
    /// `emit` receives the types (last entry unset), the visit, and which
    /// types the last point may take as `[cross_ok, touch_ok]`.
    fn step<F: FnMut(&mut [PointType], &[usize], [bool; 2], bool)>(&mut self, cur: u32, next: u32, side: usize, emit: &mut F) {
        let (a, b) = (cur.min(next), cur.max(next));
        let fi = self.halves[side].face_with(a, b);
        let old = self.halves[side].split(fi, a, b);
        self.visited |= 1 << next;
        self.visit.push(next as usize);
        let windowed = self.windowed.last().copied().unwrap_or(false) || self.window_ends_here();
        self.windowed.push(windowed);

        let n = self.n;
        let end = 1u32 << (n + 1);
        let free = !self.visited & (end - 1);
        let other = 1 - side;
        let inner = *self.halves[side].faces.last().expect("just pushed");
        let touch_vis = self.halves[side].faces[fi] | inner;
        let cross_vis = self.halves[other].faces[self.halves[other].face_of(next)];
        if free == 0 {
            let ok = [cross_vis & end != 0, touch_vis & end != 0];
            if ok[0] || ok[1] {
                emit(&mut self.types, &self.visit, ok, windowed);
            }
        } else if free & (free - 1) == 0 {
            if self.visit.len() > 1 || free & self.second != 0 {
                self.finish(next, free.trailing_zeros(), side, [cross_vis, self.halves[side].faces[fi], inner], emit);
            }
        } else if self.reaches_all(touch_vis | cross_vis, free, end) && self.degrees_ok(touch_vis | cross_vis, free, end) {
            let free = if self.visit.len() == 1 { free & self.second } else { free };
            let slot = next as usize - 1;
            self.types[slot] = PointType::Cross;
            let mut m = cross_vis & free;
            while m != 0 {
                let p = m.trailing_zeros();
                m &= m - 1;
                self.step(next, p, other, emit);
            }
            self.types[slot] = PointType::Touch;
            let mut m = touch_vis & free;
            while m != 0 {
                let p = m.trailing_zeros();
                m &= m - 1;
                self.step(next, p, side, emit);
            }
        }

        self.visit.pop();
        self.windowed.pop();
        self.visited &= !(1 << next);
        self.halves[side].unsplit(fi, old);
    }
}

/// Codes of total order `n >= 1` whose first visited position is `first`.
fn for_each_from_paired<F: FnMut(&mut [PointType], &[usize], [bool; 2], bool)>(n: usize, first: usize, emit: &mut F) {
    Search::new(n).step(0, first as u32, UP, emit);
}

/// As [`for_each_from_paired`], restricted to codes visiting `second` right
/// after `first` (or to the single-point code when `n == 1`).
fn for_each_prefix<F: FnMut(&mut [PointType], &[usize], [bool; 2], bool)>(n: usize, first: usize, second: usize, emit: &mut F) {
    let mut search = Search::new(n);
    search.second = 1 << second;
    search.step(0, first as u32, UP, emit);
}

fn for_each_from<F: FnMut(&[PointType], &[usize])>(n: usize, first: usize, emit: &mut F) {
    for_each_from_paired(n, first, &mut |types, visit, ok, _| {
        let last = visit[n - 1] - 1;
        for (ty, allowed) in [(PointType::Cross, ok[0]), (PointType::Touch, ok[1])] {
            if allowed {
                types[last] = ty;
                emit(types, visit);
            }
        }
    });
}

/// Calls `emit` with every valid code of total order `n` owned by `shard`.
/// Codes are grouped by first visited position; the order within a group is
/// unspecified.
pub fn for_each_raw<F: FnMut(&[PointType], &[usize])>(n: usize, shard: Shard, mut emit: F) {
    assert!(n <= MAX_TOTAL_ORDER, "total order {n} exceeds {MAX_TOTAL_ORDER}");
    if n == 0 {
        if shard.owns_empty() {
            emit(&[], &[]);
        }
        return;
    }
    for first in (1..=n).filter(|&f| shard.owns_first(f)) {
        for_each_from(n, first, &mut emit);
    }
}

/// Every valid code of total order `n` accepted by `filter`, in lexicographic order.
pub fn enumerate_meanders(n: usize, filter: ClassFilter) -> Vec<MeanderCode> {
    enumerate_shard(n, filter, Shard::WHOLE)
}

pub fn enumerate_shard(n: usize, filter: ClassFilter, shard: Shard) -> Vec<MeanderCode> {
    let mut out = Vec::new();
    for_each_raw(n, shard, |types, visit| {
        if filter.admits(classify_visit(visit)) {
            out.push(MeanderCode::from_parts_unchecked(types.to_vec(), visit.to_vec()));
        }
    });
    out.sort_unstable_by(|a, b| (a.types(), a.visit()).cmp(&(b.types(), b.visit())));
    out
}

/// All valid codes with total order `0..=max_total`.
pub fn all_meanders_up_to(max_total: usize) -> Vec<MeanderCode> {
    (0..=max_total)
        .flat_map(|n| enumerate_meanders(n, ClassFilter::All))
        .collect()
}

/// Counts indexed by order `(n, k)` with `n + k <= max_total`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub class: String,
    pub max_total: usize,
    #[serde(with = "count_entries")]
    pub counts: BTreeMap<(usize, usize), u64>,
}

mod count_entries {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        n: usize,
        k: usize,
        count: u64,
    }

    pub fn serialize<S: Serializer>(map: &BTreeMap<(usize, usize), u64>, s: S) -> Result<S::Ok, S::Error> {
        map.iter()
            .map(|(&(n, k), &count)| Entry { n, k, count })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, usize), u64>, D::Error> {
        Ok(Vec::<Entry>::deserialize(d)?
            .into_iter()
            .map(|e| ((e.n, e.k), e.count))
            .collect())
    }
}

impl CountTable {
    /// Table with every entry present and zero.
    pub fn zeros(class: &str, max_total: usize) -> Self {
        let counts = (0..=max_total)
            .flat_map(|d| (0..=d).map(move |k| ((d - k, k), 0)))
            .collect();
        CountTable {
            class: class.to_string(),
            max_total,
            counts,
        }
    }

    /// Entries with `n + k <= max_total` only.
    pub fn truncated(&self, max_total: usize) -> CountTable {
        CountTable {
            class: self.class.clone(),
            max_total,
            counts: self
                .counts
                .iter()
                .filter(|(&(n, k), _)| n + k <= max_total)
                .map(|(&key, &c)| (key, c))
                .collect(),
        }
    }

    pub fn get(&self, n: usize, k: usize) -> u64 {
        self.counts.get(&(n, k)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, n: usize, k: usize, count: u64) {
        *self.counts.entry((n, k)).or_insert(0) += count;
    }

    /// Sum of all entries of total order `total`.
    pub fn total_of_order(&self, total: usize) -> u64 {
        (0..=total).map(|k| self.get(total - k, k)).sum()
    }

    /// Entrywise sum; used to merge shards.
    pub fn merge(&mut self, other: &CountTable) {
        for (&(n, k), &c) in &other.counts {
            self.add(n, k, c);
        }
    }

    /// CSV rows `n,k,class,count`, without header.
    pub fn csv_rows(&self) -> String {
        self.counts
            .iter()
            .map(|(&(n, k), &c)| format!("{n},{k},{},{c}\n", self.class))
            .collect()
    }
}

/// One count table per class, all from a single enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub max_total: usize,
    pub all: CountTable,
    pub snake: CountTable,
    pub iterated_snake: CountTable,
    pub irreducible: CountTable,
}

impl Census {
    fn zeros(max_total: usize) -> Self {
        Census {
            max_total,
            all: CountTable::zeros("all", max_total),
            snake: CountTable::zeros("snake", max_total),
            iterated_snake: CountTable::zeros("iterated-snake", max_total),
            irreducible: CountTable::zeros("irreducible", max_total),
        }
    }

    /// Restriction to total orders `0..=max_total`.
    pub fn truncated(&self, max_total: usize) -> Census {
        Census {
            max_total,
            all: self.all.truncated(max_total),
            snake: self.snake.truncated(max_total),
            iterated_snake: self.iterated_snake.truncated(max_total),
            irreducible: self.irreducible.truncated(max_total),
        }
    }

    pub fn merge(&mut self, other: &Census) {
        self.all.merge(&other.all);
        self.snake.merge(&other.snake);
        self.iterated_snake.merge(&other.iterated_snake);
        self.irreducible.merge(&other.irreducible);
    }

    pub fn tables(&self) -> [&CountTable; 4] {
        [&self.all, &self.snake, &self.iterated_snake, &self.irreducible]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,class,count\n");
        for t in self.tables() {
            out.push_str(&t.csv_rows());
        }
        out
    }
}

/// Full census of total orders `0..=max_total`, classified.
pub fn count_tables(max_total: usize) -> Census {
    count_tables_shard(max_total, Shard::WHOLE)
}

/// Counts for one shard. Shards of the same `count` merge into the full census.
pub fn count_tables_shard(max_total: usize, shard: Shard) -> Census {
    let mut census = Census::zeros(max_total);
    if shard.owns_empty() {
        census.all.add(0, 0, 1);
    }
    for n in 1..=max_total {
        let prefixes: Vec<(usize, usize)> = (1..=n)
            .filter(|&f| shard.owns_first(f))
            .flat_map(|f| (1..=n).filter(move |&s| s != f || n == 1).map(move |s| (f, s)))
            .collect();
        // Per prefix: `[all, snake, iterated snake, irreducible]` by touch count.
        let parts: Vec<Vec<[u64; 4]>> = prefixes
            .into_par_iter()
            .map(|(first, second)| {
                let mut part = vec![[0u64; 4]; n + 1];
                for_each_prefix(n, first, second, &mut |types, visit, ok, windowed| {
                    let last = visit[n - 1] - 1;
                    let touches = types
                        .iter()
                        .enumerate()
                        .filter(|&(i, &t)| i != last && t == PointType::Touch)
                        .count();
                    let column = match classify_leaf(visit, windowed) {
                        Class::Snake => [1, 1, 1, 0],
                        Class::IteratedSnake => [1, 0, 1, 0],
                        Class::Irreducible => [1, 0, 0, 1],
                        Class::Empty | Class::Composite => [1, 0, 0, 0],
                    };
                    for (extra, allowed) in [(0, ok[0]), (1, ok[1])] {
                        if allowed {
                            let row = &mut part[touches + extra];
                            for (cell, add) in row.iter_mut().zip(column) {
                                *cell += add;
                            }
                        }
                    }
                });
                part
            })
            .collect();
        for part in &parts {
            for (k, row) in part.iter().enumerate() {
                let tables = [&mut census.all, &mut census.snake, &mut census.iterated_snake, &mut census.irreducible];
                for (table, &count) in tables.into_iter().zip(row) {
                    if count > 0 {
                        table.add(n - k, k, count);
                    }
                }
            }
        }
    }
    census
}

/// Class of a valid code from its visit permutation alone.
///
/// Equivalent to [`Class::of`] but without building interval tables: a window
/// of visit times is a common interval iff its positions span exactly its
/// length, and a meander is an iterated snake iff its visit sequence reduces
/// to a single block by repeatedly merging adjacent contiguous blocks.
pub fn classify_visit(visit: &[usize]) -> Class {
    if visit.is_empty() {
        return Class::Empty;
    }
    classify_leaf(visit, has_proper_window(visit))
}

/// [`classify_visit`] with the proper-window test already done.
fn classify_leaf(visit: &[usize], windowed: bool) -> Class {
    let n = visit.len();
    if visit.windows(2).all(|w| w[0] < w[1]) || visit.windows(2).all(|w| w[0] > w[1]) {
        return Class::Snake;
    }
    if n >= 3 && !windowed {
        return Class::Irreducible;
    }
    if reduces_to_one_block(visit) {
        Class::IteratedSnake
    } else {
        Class::Composite
    }
}

fn has_proper_window(visit: &[usize]) -> bool {
    let n = visit.len();
    (0..n).any(|i| {
        let (mut lo, mut hi) = (visit[i], visit[i]);
        (i + 1..n).any(|j| {
            lo = lo.min(visit[j]);
            hi = hi.max(visit[j]);
            let len = j - i + 1;
            len < n && hi - lo + 1 == len
        })
    })
}

fn reduces_to_one_block(visit: &[usize]) -> bool {
    let mut stack = [(0usize, 0usize); MAX_TOTAL_ORDER];
    let mut len = 0;
    for &v in visit {
        let mut top = (v, v);
        while len > 0 {
            let (lo, hi) = stack[len - 1];
            if hi + 1 == top.0 || top.1 + 1 == lo {
                len -= 1;
                top = (lo.min(top.0), hi.max(top.1));
            } else {
                break;
            }
        }
        stack[len] = top;
        len += 1;
    }
    len == 1
}

/// Exact transfer of a table into a power series truncated at its `max_total`.
pub fn series_from_table(table: &CountTable) -> BiSeries {
    let mut s = BiSeries::zero(table.max_total);
    for (&(n, k), &c) in &table.counts {
        if n + k <= table.max_total {
            s.set(n, k, c.into());
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[MeanderCode]) -> Vec<String> {
        v.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn small_orders() {
        assert_eq!(strings(&enumerate_meanders(0, ClassFilter::All)), vec![""]);
        assert_eq!(strings(&enumerate_meanders(1, ClassFilter::All)), vec!["C|1", "T|1"]);
        assert_eq!(
            strings(&enumerate_meanders(2, ClassFilter::All)),
            vec!["CC|1,2", "CT|1,2", "CT|2,1", "TC|1,2", "TC|2,1", "TT|1,2"]
        );
    }

    #[test]
    fn small_count_anchors() {
        let c = count_tables(3);
        assert_eq!(c.all.get(0, 0), 1);
        assert_eq!(c.all.get(1, 0), 1);
        assert_eq!(c.all.get(0, 1), 1);
        assert_eq!(c.all.get(2, 0), 1);
        assert_eq!(c.all.get(1, 1), 4);
        assert_eq!(c.all.get(0, 2), 1);
        assert_eq!(c.all.get(3, 0), 2);
        assert_eq!(c.snake.get(1, 1), 4);
        assert_eq!(c.snake.get(0, 0), 0);
    }

    #[test]
    fn shards_merge_to_whole() {
        let whole = count_tables(6);
        let mut merged = count_tables_shard(6, Shard::new(0, 3).unwrap());
        for i in 1..3 {
            merged.merge(&count_tables_shard(6, Shard::new(i, 3).unwrap()));
        }
        assert_eq!(merged, whole);
    }

    #[test]
    fn fast_classifier_agrees() {
        for n in 0..=8 {
            for_each_raw(n, Shard::WHOLE, |types, visit| {
                let code = MeanderCode::new(types.to_vec(), visit.to_vec()).unwrap();
                assert_eq!(classify_visit(visit), Class::of(&code), "{code}");
            });
        }
    }

    #[test]
    fn shard_parse() {
        assert_eq!("1/4".parse::<Shard>().unwrap(), Shard { index: 1, count: 4 });
        assert!("4/4".parse::<Shard>().is_err());
        assert!("0/0".parse::<Shard>().is_err());
        assert!("x".parse::<Shard>().is_err());
    }

    #[test]
    fn table_to_series() {
        let empty = CountTable {
            class: "all".into(),
            max_total: 3,
            counts: BTreeMap::new(),
        };
        assert!(series_from_table(&empty).is_zero());
        let c = count_tables(2);
        let s = series_from_table(&c.all);
        assert_eq!(s.to_string(), "1 + x + t + x^2 + 4*x*t + t^2");
    }

    #[test]
    fn csv_format() {
        let c = count_tables(1);
        assert_eq!(
            c.to_csv().lines().take(4).collect::<Vec<_>>(),
            vec!["n,k,class,count", "0,0,all,1", "0,1,all,1", "1,0,all,1"]
        );
    }
}
