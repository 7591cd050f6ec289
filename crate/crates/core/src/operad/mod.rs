//! The two colored insertion operations.
//!
//! `insert_at_crossing` replaces the `i`-th transverse point of a host by a
//! whole meander with an odd transverse count, `insert_at_touch` replaces the
//! `i`-th touch by a meander with an even transverse count. Both splice the
//! piece's block into the host's position and visit sequences; at a touch the
//! piece is mirrored first when the host's curve arrives along the right
//! strand of the tangency.

mod axioms;
mod expr;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::meander::{MeanderCode, Order, PointType};

pub use axioms::{check_operad_axioms, Counterexample, OperadReport};
pub use expr::OpExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SlotKind {
    Crossing,
    Touch,
}

impl SlotKind {
    pub fn of(ty: PointType) -> SlotKind {
        match ty {
            PointType::Cross => SlotKind::Crossing,
            PointType::Touch => SlotKind::Touch,
        }
    }

    /// Whether a piece with `transverse` crossings may be plugged in.
    pub fn accepts(self, transverse: usize) -> bool {
        match self {
            SlotKind::Crossing => transverse % 2 == 1,
            SlotKind::Touch => transverse.is_multiple_of(2),
        }
    }
}

impl fmt::Display for SlotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SlotKind::Crossing => "crossing",
            SlotKind::Touch => "touch",
        })
    }
}

/// An intersection point of a host, addressed by its label within its kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slot {
    pub kind: SlotKind,
    pub label: usize,
}

impl Slot {
    pub fn crossing(label: usize) -> Slot {
        Slot {
            kind: SlotKind::Crossing,
            label,
        }
    }

    pub fn touch(label: usize) -> Slot {
        Slot {
            kind: SlotKind::Touch,
            label,
        }
    }

    /// Slot occupied by the point at l-position `pos`.
    pub fn at_position(code: &MeanderCode, pos: usize) -> Slot {
        let (ty, label) = code.labels().label_of(pos);
        Slot {
            kind: SlotKind::of(ty),
            label,
        }
    }

    /// l-position of the slot in `code`.
    pub fn position(&self, code: &MeanderCode) -> Result<usize> {
        let labels = code.labels();
        let (found, max) = match self.kind {
            SlotKind::Crossing => (labels.crossing_position(self.label), labels.crossings().len()),
            SlotKind::Touch => (labels.touch_position(self.label), labels.touches().len()),
        };
        found.ok_or(Error::LabelOutOfRange {
            kind: self.kind,
            label: self.label,
            max,
        })
    }

    /// All slots of a code, left to right.
    pub fn all(code: &MeanderCode) -> Vec<Slot> {
        (1..=code.len()).map(|p| Slot::at_position(code, p)).collect()
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            SlotKind::Crossing => 'C',
            SlotKind::Touch => 'T',
        };
        write!(f, "{c}{}", self.label)
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slot> {
        let s = s.trim();
        let kind = match s.chars().next() {
            Some('C') => SlotKind::Crossing,
            Some('T') => SlotKind::Touch,
            _ => {
                return Err(Error::Syntax {
                    at: 0,
                    msg: format!("expected slot C<i> or T<i>, got {s:?}"),
                })
            }
        };
        let label = s[1..].parse().map_err(|_| Error::Syntax {
            at: 1,
            msg: format!("bad slot label in {s:?}"),
        })?;
        Ok(Slot { kind, label })
    }
}

/// Orientation of a piece plugged into a touch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alignment {
    Aligned,
    Flipped,
}

/// Orientation for a piece inserted at the point `pos` of `host`.
///
/// The arrival arc comes from `u` (previous point, or the entry anchor 0) and
/// the departure arc goes to `v` (next point, or the exit anchor `N + 1`).
/// The piece is mirrored iff the arrival arc is the right strand of the
/// tangency: when both arcs go right it is the inner one, when both go left
/// the outer one, and otherwise it is the one going right.
pub fn touch_alignment(host: &MeanderCode, pos: usize) -> Alignment {
    let times = host.visit_times();
    let j = times[pos - 1];
    let visit = host.visit();
    let u = if j == 0 { 0 } else { visit[j - 1] };
    let v = visit.get(j + 1).copied().unwrap_or(host.len() + 1);
    let span = |q: usize| q.abs_diff(pos);
    let flipped = match (u > pos, v > pos) {
        (true, true) => span(u) < span(v),
        (false, false) => span(u) > span(v),
        (arrival_right, _) => arrival_right,
    };
    if flipped {
        Alignment::Flipped
    } else {
        Alignment::Aligned
    }
}

/// Replaces the point at `pos` with `block`, keeping the block's own
/// l-order and visit order.
pub(crate) fn splice(host: &MeanderCode, pos: usize, block: &MeanderCode) -> MeanderCode {
    let width = block.len();
    let shift = |q: usize| if q > pos { q + width - 1 } else { q };
    let mut types = Vec::with_capacity(host.len() + width);
    types.extend_from_slice(&host.types()[..pos - 1]);
    types.extend_from_slice(block.types());
    types.extend_from_slice(&host.types()[pos..]);

    let j = host.visit_times()[pos - 1];
    let mut visit = Vec::with_capacity(types.len());
    visit.extend(host.visit()[..j].iter().map(|&q| shift(q)));
    visit.extend(block.visit().iter().map(|&q| q + pos - 1));
    visit.extend(host.visit()[j + 1..].iter().map(|&q| shift(q)));
    MeanderCode::from_parts_unchecked(types, visit)
}

fn check_color(kind: SlotKind, piece: &MeanderCode) -> Result<()> {
    let transverse = piece.order().n;
    if kind.accepts(transverse) {
        Ok(())
    } else {
        Err(Error::ColorMismatch {
            kind,
            expected: match kind {
                SlotKind::Crossing => "odd",
                SlotKind::Touch => "even",
            },
            transverse,
        })
    }
}

/// Order of the result of inserting `piece` at a slot of `kind` in `host`.
pub fn composed_order(host: Order, kind: SlotKind, piece: Order) -> Order {
    match kind {
        SlotKind::Crossing => Order::new(host.n + piece.n - 1, host.k + piece.k),
        SlotKind::Touch => Order::new(host.n + piece.n, host.k + piece.k - 1),
    }
}

/// `host ∘ᵢ piece`: insertion at the crossing with label `label`.
pub fn insert_at_crossing(host: &MeanderCode, label: usize, piece: &MeanderCode) -> Result<MeanderCode> {
    insert(host, Slot::crossing(label), piece)
}

/// `host •ᵢ piece`: insertion at the touch with label `label`.
pub fn insert_at_touch(host: &MeanderCode, label: usize, piece: &MeanderCode) -> Result<MeanderCode> {
    insert(host, Slot::touch(label), piece)
}

/// Insertion at either kind of slot.
pub fn insert(host: &MeanderCode, slot: Slot, piece: &MeanderCode) -> Result<MeanderCode> {
    let pos = slot.position(host)?;
    check_color(slot.kind, piece)?;
    host.ensure_valid()?;
    piece.ensure_valid()?;
    let (result, _) = insert_unchecked(host, slot.kind, pos, piece);
    debug_assert!(result.is_valid(), "{host} {slot} {piece} -> {result}");
    debug_assert_eq!(
        result.order(),
        composed_order(host.order(), slot.kind, piece.order())
    );
    Ok(result)
}

/// Insertion without input checks; also reports the orientation used.
pub(crate) fn insert_unchecked(
    host: &MeanderCode,
    kind: SlotKind,
    pos: usize,
    piece: &MeanderCode,
) -> (MeanderCode, Alignment) {
    let alignment = match kind {
        SlotKind::Crossing => Alignment::Aligned,
        SlotKind::Touch => touch_alignment(host, pos),
    };
    let result = match alignment {
        Alignment::Aligned => splice(host, pos, piece),
        Alignment::Flipped => splice(host, pos, &piece.horizontal_flip()),
    };
    (result, alignment)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Host,
    Piece,
}

/// Where a slot of an insertion result came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotMapEntry {
    pub result: Slot,
    pub origin: Origin,
    pub original: Slot,
    /// The slot lies inside a mirrored copy of the piece.
    pub reversed: bool,
}

/// Slot bookkeeping for one insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotMap {
    pub result: MeanderCode,
    pub entries: Vec<SlotMapEntry>,
}

impl SlotMap {
    /// Image of a host or piece slot in the result.
    pub fn image(&self, origin: Origin, original: Slot) -> Option<&SlotMapEntry> {
        self.entries
            .iter()
            .find(|e| e.origin == origin && e.original == original)
    }
}

/// Maps every slot of `insert(host, slot, piece)` back to the host or piece
/// slot it came from.
pub fn slot_map(host: &MeanderCode, slot: Slot, piece: &MeanderCode) -> Result<SlotMap> {
    let result = insert(host, slot, piece)?;
    let pos = slot.position(host)?;
    let (_, alignment) = insert_unchecked(host, slot.kind, pos, piece);
    let width = piece.len();
    let reversed = alignment == Alignment::Flipped;
    let entries = (1..=result.len())
        .map(|q| {
            let (origin, original) = if q < pos {
                (Origin::Host, Slot::at_position(host, q))
            } else if q < pos + width {
                let local = q - pos + 1;
                let local = if reversed { width + 1 - local } else { local };
                (Origin::Piece, Slot::at_position(piece, local))
            } else {
                (Origin::Host, Slot::at_position(host, q + 1 - width))
            };
            SlotMapEntry {
                result: Slot::at_position(&result, q),
                origin,
                original,
                reversed: origin == Origin::Piece && reversed,
            }
        })
        .collect();
    Ok(SlotMap { result, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> MeanderCode {
        s.parse().unwrap()
    }

    #[test]
    fn crossing_insertion_examples() {
        let host = code("CT|2,1");
        let out = insert_at_crossing(&host, 1, &code("CCC|1,2,3")).unwrap();
        assert_eq!(out, code("CCCT|4,1,2,3"));
        assert_eq!(out.order(), Order::new(3, 1));
        assert_eq!(insert_at_crossing(&host, 1, &MeanderCode::unit_cross()).unwrap(), host);
    }

    #[test]
    fn touch_insertion_examples() {
        assert_eq!(
            insert_at_touch(&code("T|1"), 1, &code("CC|1,2")).unwrap(),
            code("CC|1,2")
        );
        let host = code("CCT|1,3,2");
        assert_eq!(touch_alignment(&host, 3), Alignment::Flipped);
        assert_eq!(
            insert_at_touch(&host, 1, &code("CC|1,2")).unwrap(),
            code("CCCC|1,4,3,2")
        );
        // The unmirrored splice would not be planar.
        assert!(!splice(&host, 3, &code("CC|1,2")).is_valid());
        assert_eq!(insert_at_touch(&host, 1, &MeanderCode::unit_touch()).unwrap(), host);
    }

    #[test]
    fn empty_piece_removes_touch() {
        let out = insert_at_touch(&code("CT|2,1"), 1, &MeanderCode::empty()).unwrap();
        assert_eq!(out, code("C|1"));
    }

    #[test]
    fn insertion_errors() {
        let host = code("CT|2,1");
        assert!(matches!(
            insert_at_crossing(&host, 2, &MeanderCode::unit_cross()),
            Err(Error::LabelOutOfRange { kind: SlotKind::Crossing, label: 2, max: 1 })
        ));
        assert!(matches!(
            insert_at_crossing(&host, 1, &code("CC|1,2")),
            Err(Error::ColorMismatch { kind: SlotKind::Crossing, transverse: 2, .. })
        ));
        assert!(matches!(
            insert_at_touch(&host, 1, &code("C|1")),
            Err(Error::ColorMismatch { kind: SlotKind::Touch, .. })
        ));
        assert!(matches!(
            insert_at_crossing(&code("CC|2,1"), 1, &MeanderCode::unit_cross()),
            Err(Error::InvalidMeander { .. })
        ));
        assert!(matches!(
            insert_at_touch(&host, 0, &MeanderCode::unit_touch()),
            Err(Error::LabelOutOfRange { .. })
        ));
    }

    #[test]
    fn first_visited_touch_from_far_left_is_aligned() {
        for s in ["T|1", "TC|1,2", "TT|1,2"] {
            assert_eq!(touch_alignment(&code(s), 1), Alignment::Aligned, "{s}");
        }
    }

    #[test]
    fn slot_map_examples() {
        let host = code("CT|2,1");
        let map = slot_map(&host, Slot::crossing(1), &MeanderCode::unit_cross()).unwrap();
        for e in &map.entries {
            let expected = if e.result == Slot::crossing(1) { Origin::Piece } else { Origin::Host };
            assert_eq!(e.origin, expected);
            assert_eq!(e.result, e.original);
        }

        let map = slot_map(&host, Slot::crossing(1), &code("CCC|1,2,3")).unwrap();
        let from_piece: Vec<_> = map
            .entries
            .iter()
            .filter(|e| e.result.kind == SlotKind::Crossing)
            .map(|e| (e.result.label, e.origin, e.original.label))
            .collect();
        assert_eq!(
            from_piece,
            vec![(1, Origin::Piece, 1), (2, Origin::Piece, 2), (3, Origin::Piece, 3)]
        );

        let map = slot_map(&code("TT|1,2"), Slot::touch(1), &MeanderCode::unit_touch()).unwrap();
        assert_eq!(
            map.image(Origin::Piece, Slot::touch(1)).unwrap().result,
            Slot::touch(1)
        );
        assert_eq!(
            map.image(Origin::Host, Slot::touch(2)).unwrap().result,
            Slot::touch(2)
        );
    }

    #[test]
    fn slot_map_tracks_mirrored_piece() {
        let host = code("TC|2,1");
        let map = slot_map(&host, Slot::touch(1), &code("CC|1,2")).unwrap();
        assert_eq!(map.result, code("CCC|3,2,1"));
        let e = map.image(Origin::Piece, Slot::crossing(1)).unwrap();
        assert_eq!(e.result, Slot::crossing(2));
        assert!(e.reversed);
        assert_eq!(
            map.image(Origin::Host, Slot::crossing(1)).unwrap().result,
            Slot::crossing(3)
        );
    }

    #[test]
    fn slot_text() {
        assert_eq!("C3".parse::<Slot>().unwrap(), Slot::crossing(3));
        assert_eq!(Slot::touch(2).to_string(), "T2");
        assert!("X1".parse::<Slot>().is_err());
        assert!("C".parse::<Slot>().is_err());
    }
}
