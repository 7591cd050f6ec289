//! Combinatorial encoding of singular meanders.
//!
//! A meander of total order `N` is stored as the type of each intersection
//! point along the line `l` (positions `1..=N`, left to right) together with
//! the order in which the curve `m` visits those positions. The curve always
//! starts on the upper side of `l`; the side it travels on flips after every
//! crossing and is kept after every touch. Positions `0` and `N + 1` are
//! virtual anchors standing for the entry and exit boundary points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Kind of an intersection point of `m` and `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointType {
    /// Transverse point: `m` passes to the other side of `l`.
    Cross,
    /// Non-transverse point: `m` touches `l` and stays on the same side.
    Touch,
}

impl PointType {
    pub fn as_char(self) -> char {
        match self {
            PointType::Cross => 'C',
            PointType::Touch => 'T',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'C' => Some(PointType::Cross),
            'T' => Some(PointType::Touch),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Up,
    Down,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Up => Side::Down,
            Side::Down => Side::Up,
        }
    }

    /// Side after passing a point of the given type.
    pub fn after(self, ty: PointType) -> Side {
        match ty {
            PointType::Cross => self.flip(),
            PointType::Touch => self,
        }
    }
}

/// Order `(n, k)`: number of transverse and non-transverse points.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Order {
    pub n: usize,
    pub k: usize,
}

impl Order {
    pub fn new(n: usize, k: usize) -> Self {
        Order { n, k }
    }

    pub fn total(self) -> usize {
        self.n + self.k
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.k)
    }
}

/// A half-disk arc of `m` on one side of `l`, between two l-coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    pub side: Side,
}

impl Arc {
    /// Arc between two coordinates, in either order.
    pub fn between(a: usize, b: usize, side: Side) -> Arc {
        debug_assert_ne!(a, b);
        Arc {
            left: a.min(b),
            right: a.max(b),
            side,
        }
    }

    /// Strict crossing of two arcs on the same side. Shared endpoints never cross.
    pub fn crosses(&self, other: &Arc) -> bool {
        if self.side != other.side {
            return false;
        }
        let (a, b, c, d) = (self.left, self.right, other.left, other.right);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Up => 'U',
            Side::Down => 'D',
        };
        write!(f, "({},{}){}", self.left, self.right, s)
    }
}

/// Outcome of the planarity test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub valid: bool,
    /// First crossing pair found, in traversal order of the later arc.
    pub violation: Option<(Arc, Arc)>,
}

/// Canonical code of a singular meander: point types along `l` plus the
/// visit permutation of `m`. Structurally well formed by construction; use
/// [`MeanderCode::validate`] for planarity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MeanderCode {
    types: Vec<PointType>,
    visit: Vec<usize>,
}

impl MeanderCode {
    /// Builds a code, checking lengths and that `visit` is a bijection on `1..=N`.
    pub fn new(types: Vec<PointType>, visit: Vec<usize>) -> Result<Self> {
        if types.len() != visit.len() {
            return Err(Error::LengthMismatch {
                types: types.len(),
                visit: visit.len(),
            });
        }
        let len = visit.len();
        let mut seen = vec![false; len + 1];
        for &p in &visit {
            if p == 0 || p > len {
                return Err(Error::NotBijective {
                    len,
                    detail: format!("entry {p} out of range"),
                });
            }
            if seen[p] {
                return Err(Error::NotBijective {
                    len,
                    detail: format!("position {p} visited twice"),
                });
            }
            seen[p] = true;
        }
        Ok(MeanderCode { types, visit })
    }

    pub(crate) fn from_parts_unchecked(types: Vec<PointType>, visit: Vec<usize>) -> Self {
        debug_assert!(MeanderCode::new(types.clone(), visit.clone()).is_ok());
        MeanderCode { types, visit }
    }

    /// The meander with no intersection points.
    pub fn empty() -> Self {
        MeanderCode::default()
    }

    /// Single transverse point, the unit for crossing slots.
    pub fn unit_cross() -> Self {
        MeanderCode::from_parts_unchecked(vec![PointType::Cross], vec![1])
    }

    /// Single touch point, the unit for touch slots.
    pub fn unit_touch() -> Self {
        MeanderCode::from_parts_unchecked(vec![PointType::Touch], vec![1])
    }

    /// Total order `N`.
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Point types indexed by l-position minus one.
    pub fn types(&self) -> &[PointType] {
        &self.types
    }

    /// Visit permutation: `visit()[j]` is the l-position of the `j`-th point along `m`.
    pub fn visit(&self) -> &[usize] {
        &self.visit
    }

    /// Type at l-position `pos` (1-based).
    pub fn point_type(&self, pos: usize) -> PointType {
        self.types[pos - 1]
    }

    /// Inverse permutation: `visit_times()[pos - 1]` is the 0-based step at which `pos` is visited.
    pub fn visit_times(&self) -> Vec<usize> {
        let mut times = vec![0; self.len()];
        for (j, &p) in self.visit.iter().enumerate() {
            times[p - 1] = j;
        }
        times
    }

    pub fn order(&self) -> Order {
        let n = self.types.iter().filter(|&&t| t == PointType::Cross).count();
        Order::new(n, self.len() - n)
    }

    /// Side of `m` on the arc leaving the `j`-th visited point (`j` in `0..=N`,
    /// where `j = 0` is the entry arc).
    pub fn sides(&self) -> Vec<Side> {
        let mut sides = Vec::with_capacity(self.len() + 1);
        let mut side = Side::Up;
        sides.push(side);
        for &p in &self.visit {
            side = side.after(self.point_type(p));
            sides.push(side);
        }
        sides
    }

    /// Side of the exit arc.
    pub fn exit_side(&self) -> Side {
        if self.order().n.is_multiple_of(2) {
            Side::Up
        } else {
            Side::Down
        }
    }

    /// All `N + 1` arcs of `m` in traversal order, entry arc first.
    pub fn arcs(&self) -> Vec<Arc> {
        let n = self.len();
        let sides = self.sides();
        let mut prev = 0;
        let mut arcs = Vec::with_capacity(n + 1);
        for (j, &p) in self.visit.iter().enumerate() {
            arcs.push(Arc::between(prev, p, sides[j]));
            prev = p;
        }
        arcs.push(Arc::between(prev, n + 1, sides[n]));
        arcs
    }

    /// Planarity check of the arc system.
    pub fn validate(&self) -> ValidityReport {
        let arcs = self.arcs();
        for (i, later) in arcs.iter().enumerate() {
            if let Some(earlier) = arcs[..i].iter().find(|a| a.crosses(later)) {
                return ValidityReport {
                    valid: false,
                    violation: Some((*earlier, *later)),
                };
            }
        }
        ValidityReport {
            valid: true,
            violation: None,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    /// Returns an error carrying the first violation when the code is not planar.
    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate().violation {
            None => Ok(()),
            Some((first, second)) => Err(Error::InvalidMeander { first, second }),
        }
    }

    pub fn labels(&self) -> Labels {
        Labels::new(self)
    }

    /// Mirror image along `l`: positions complemented, visit order kept.
    /// For codes with an even transverse count the result starts at the right
    /// anchor and is only meaningful as a splice datum.
    pub fn horizontal_flip(&self) -> MeanderCode {
        let n = self.len();
        let types = self.types.iter().rev().copied().collect();
        let visit = self.visit.iter().map(|&p| n + 1 - p).collect();
        MeanderCode { types, visit }
    }

    /// Visit permutation is `1..N` or `N..1`.
    pub fn is_monotone(&self) -> bool {
        let inc = self.visit.windows(2).all(|w| w[1] == w[0] + 1);
        let dec = self.visit.windows(2).all(|w| w[0] == w[1] + 1);
        inc || dec
    }

    /// Parses the text form or the JSON object form.
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("code serializes")
    }
}

/// Labels of intersection points counted along `l` from its left end,
/// separately for crossings and touches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    label: Vec<usize>,
    kinds: Vec<PointType>,
    crossings: Vec<usize>,
    touches: Vec<usize>,
}

impl Labels {
    fn new(code: &MeanderCode) -> Self {
        let mut label = Vec::with_capacity(code.len());
        let mut crossings = Vec::new();
        let mut touches = Vec::new();
        for (i, &ty) in code.types().iter().enumerate() {
            let list = match ty {
                PointType::Cross => &mut crossings,
                PointType::Touch => &mut touches,
            };
            list.push(i + 1);
            label.push(list.len());
        }
        Labels {
            label,
            kinds: code.types().to_vec(),
            crossings,
            touches,
        }
    }

    /// Label of `pos` within its own kind.
    pub fn label_of(&self, pos: usize) -> (PointType, usize) {
        (self.kinds[pos - 1], self.label[pos - 1])
    }

    pub fn crossing_label(&self, pos: usize) -> Option<usize> {
        match self.label_of(pos) {
            (PointType::Cross, l) => Some(l),
            _ => None,
        }
    }

    pub fn touch_label(&self, pos: usize) -> Option<usize> {
        match self.label_of(pos) {
            (PointType::Touch, l) => Some(l),
            _ => None,
        }
    }

    pub fn crossing_position(&self, label: usize) -> Option<usize> {
        label.checked_sub(1).and_then(|i| self.crossings.get(i).copied())
    }

    pub fn touch_position(&self, label: usize) -> Option<usize> {
        label.checked_sub(1).and_then(|i| self.touches.get(i).copied())
    }

    /// Positions of crossings in label order.
    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    /// Positions of touches in label order.
    pub fn touches(&self) -> &[usize] {
        &self.touches
    }
}

impl fmt::Display for MeanderCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return Ok(());
        }
        for t in &self.types {
            write!(f, "{}", t.as_char())?;
        }
        f.write_str("|")?;
        for (i, p) in self.visit.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for MeanderCode {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            return Ok(serde_json::from_str(trimmed)?);
        }
        if trimmed.is_empty() || trimmed == "|" {
            return Ok(MeanderCode::empty());
        }
        let offset = text.len() - text.trim_start().len();
        let bar = trimmed.find('|').ok_or_else(|| Error::Syntax {
            at: offset,
            msg: "expected `<types>|<visit>`".into(),
        })?;
        let types = parse_types(&trimmed[..bar], offset)?;
        let visit = parse_visit(&trimmed[bar + 1..], offset + bar + 1)?;
        MeanderCode::new(types, visit)
    }
}

fn parse_types(s: &str, offset: usize) -> Result<Vec<PointType>> {
    s.char_indices()
        .map(|(i, c)| {
            PointType::from_char(c).ok_or_else(|| Error::Syntax {
                at: offset + i,
                msg: format!("unexpected point type {c:?}"),
            })
        })
        .collect()
}

fn parse_visit(s: &str, offset: usize) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut at = offset;
    let mut out = Vec::new();
    for field in s.split(',') {
        let value = field.trim().parse::<usize>().map_err(|_| Error::Syntax {
            at,
            msg: format!("bad visit entry {:?}", field.trim()),
        })?;
        out.push(value);
        at += field.len() + 1;
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct RawCode {
    types: String,
    visit: Vec<usize>,
}

impl Serialize for MeanderCode {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawCode {
            types: self.types.iter().map(|t| t.as_char()).collect(),
            visit: self.visit.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MeanderCode {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCode::deserialize(deserializer)?;
        let types = parse_types(&raw.types, 0).map_err(serde::de::Error::custom)?;
        MeanderCode::new(types, raw.visit).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> MeanderCode {
        s.parse().unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(code("CCC|1,2,3").is_valid());
        assert!(code("CCC|3,2,1").is_valid());
        assert!(code("CC|1,2").is_valid());
        assert!(code("TC|2,1").is_valid());
        assert!(code("").is_valid());

        let report = code("CC|2,1").validate();
        assert!(!report.valid);
        let (a, b) = report.violation.unwrap();
        assert_eq!((a.left, a.right, a.side), (0, 2, Side::Up));
        assert_eq!((b.left, b.right, b.side), (1, 3, Side::Up));
    }

    #[test]
    fn arcs_of_inverse_snake() {
        let arcs = code("CCC|3,2,1").arcs();
        let expect = [
            Arc::between(0, 3, Side::Up),
            Arc::between(3, 2, Side::Down),
            Arc::between(2, 1, Side::Up),
            Arc::between(1, 4, Side::Down),
        ];
        assert_eq!(arcs, expect);
    }

    #[test]
    fn order_and_labels() {
        assert_eq!(code("CCC|1,2,3").order(), Order::new(3, 0));
        assert_eq!(code("CT|1,2").order(), Order::new(1, 1));
        assert_eq!(code("").order(), Order::new(0, 0));

        let l = code("CTC|1,2,3").labels();
        assert_eq!(l.crossing_label(1), Some(1));
        assert_eq!(l.crossing_label(3), Some(2));
        assert_eq!(l.touch_label(2), Some(1));
        assert_eq!(l.crossing_label(2), None);
        assert_eq!(l.crossing_position(2), Some(3));
        assert_eq!(l.touch_position(2), None);

        let l = code("TT|1,2").labels();
        assert_eq!(l.touches(), &[1, 2]);
        assert!(l.crossings().is_empty());
    }

    #[test]
    fn flip_examples() {
        assert_eq!(code("CC|1,2").horizontal_flip(), code("CC|2,1"));
        assert_eq!(code("CT|1,2").horizontal_flip(), code("TC|2,1"));
        assert_eq!(code("").horizontal_flip(), code(""));
    }

    #[test]
    fn text_format() {
        let c = MeanderCode::new(vec![PointType::Cross, PointType::Touch], vec![2, 1]).unwrap();
        assert_eq!(c.to_string(), "CT|2,1");
        assert_eq!(code("CT|2,1"), c);
        assert_eq!(code(" CT| 2, 1 "), c);
        assert_eq!(code("|"), MeanderCode::empty());
        assert_eq!(MeanderCode::empty().to_string(), "");
    }

    #[test]
    fn json_format() {
        let c = code("CT|2,1");
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"types":"CT","visit":[2,1]}"#);
        assert_eq!(code(&j), c);
        assert!(matches!(
            MeanderCode::parse(r#"{"types":"CT","visit":[1,1]}"#),
            Err(Error::Json(_))
        ));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(code_err("CT|2,2"), Error::NotBijective { .. }));
        assert!(matches!(code_err("CT|1,3"), Error::NotBijective { .. }));
        assert!(matches!(code_err("CT|1"), Error::LengthMismatch { types: 2, visit: 1 }));
        assert!(matches!(code_err("CX|1,2"), Error::Syntax { at: 1, .. }));
        assert!(matches!(code_err("CT|1,a"), Error::Syntax { .. }));
        assert!(matches!(code_err("CT"), Error::Syntax { .. }));
    }

    fn code_err(s: &str) -> Error {
        MeanderCode::parse(s).unwrap_err()
    }

    #[test]
    fn exit_side_matches_side_sequence() {
        for s in ["C|1", "T|1", "CT|2,1", "CCC|3,2,1", "CCCC|1,4,3,2"] {
            let c = code(s);
            assert_eq!(*c.sides().last().unwrap(), c.exit_side(), "{s}");
        }
    }
}
