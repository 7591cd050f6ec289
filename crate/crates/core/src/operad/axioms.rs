//! Mechanized check of the operad laws on concrete meanders.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{composed_order, insert, slot_map, Origin, Slot, SlotKind};
use crate::enumerate::all_meanders_up_to;
use crate::meander::MeanderCode;

/// Largest total order of hosts and pieces drawn for sampled laws.
const SAMPLE_POOL_ORDER: usize = 5;
/// Ranges for the exhaustive part of the associativity check.
const EXHAUSTIVE_HOST_ORDER: usize = 3;
const EXHAUSTIVE_INNER_ORDER: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub law: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperadReport {
    pub max_total_order: usize,
    pub sample_count: usize,
    pub seed: u64,
    pub unit_checks: usize,
    pub associativity_checks: usize,
    pub commutation_checks: usize,
    /// Insertions whose result was checked for planarity and order arithmetic.
    pub insertions_checked: usize,
    /// Sequential compositions through a mirrored touch insertion, where the
    /// inner odd piece has to be mirrored too.
    pub mirrored_compositions: usize,
    /// How many of those would fail if the inner piece were not mirrored.
    pub unmirrored_mismatches: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl OperadReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

struct Checker {
    report: OperadReport,
}

impl Checker {
    fn fail(&mut self, law: &str, detail: String) {
        if self.report.counterexamples.len() < 50 {
            self.report.counterexamples.push(Counterexample {
                law: law.to_string(),
                detail,
            });
        }
    }

    /// Insertion plus closure and order-arithmetic checks.
    fn insert(&mut self, host: &MeanderCode, slot: Slot, piece: &MeanderCode) -> Option<MeanderCode> {
        self.report.insertions_checked += 1;
        match insert(host, slot, piece) {
            Ok(out) => {
                if !out.is_valid() {
                    self.fail("closure", format!("{host} {slot} {piece} -> {out} is not planar"));
                }
                let expect = composed_order(host.order(), slot.kind, piece.order());
                if out.order() != expect {
                    self.fail(
                        "order",
                        format!("{host} {slot} {piece}: order {} != {}", out.order(), expect),
                    );
                }
                Some(out)
            }
            Err(e) => {
                self.fail("closure", format!("{host} {slot} {piece}: {e}"));
                None
            }
        }
    }

    fn units(&mut self, m: &MeanderCode) {
        let cross = MeanderCode::unit_cross();
        let touch = MeanderCode::unit_touch();
        for slot in Slot::all(m) {
            let unit = match slot.kind {
                SlotKind::Crossing => &cross,
                SlotKind::Touch => &touch,
            };
            self.report.unit_checks += 1;
            if let Some(out) = self.insert(m, slot, unit) {
                if &out != m {
                    self.fail("right unit", format!("{m} {slot} unit -> {out}"));
                }
            }
        }
        let (host, slot) = if m.order().n % 2 == 1 {
            (&cross, Slot::crossing(1))
        } else {
            (&touch, Slot::touch(1))
        };
        self.report.unit_checks += 1;
        if let Some(out) = self.insert(host, slot, m) {
            if &out != m {
                self.fail("left unit", format!("{host} {slot} {m} -> {out}"));
            }
        }
    }

    /// `(m ∘ₛ a) ∘_{σ(x)} b = m ∘ₛ (a ∘ₓ b)`, with `b` mirrored when `x` is a
    /// crossing inside a mirrored copy of `a`.
    fn associativity(&mut self, m: &MeanderCode, s: Slot, a: &MeanderCode, x: Slot, b: &MeanderCode) {
        self.report.associativity_checks += 1;
        let Ok(map) = slot_map(m, s, a) else {
            self.fail("associativity", format!("slot map of {m} {s} {a} failed"));
            return;
        };
        let Some(image) = map.image(Origin::Piece, x).copied() else {
            self.fail("associativity", format!("{x} of {a} has no image in {}", map.result));
            return;
        };
        let mirrored = image.reversed && x.kind == SlotKind::Crossing;
        let inner = if mirrored { b.horizontal_flip() } else { b.clone() };
        let (Some(lhs), Some(ab)) = (self.insert(&map.result, image.result, &inner), self.insert(a, x, b)) else {
            return;
        };
        let Some(rhs) = self.insert(m, s, &ab) else {
            return;
        };
        if lhs != rhs {
            self.fail(
                "associativity",
                format!("({m} {s} {a}) {} {inner} = {lhs} but {m} {s} ({a} {x} {b}) = {rhs}", image.result),
            );
        }
        if mirrored {
            self.report.mirrored_compositions += 1;
            if insert(&map.result, image.result, b).ok().as_ref() != Some(&rhs) {
                self.report.unmirrored_mismatches += 1;
            }
        }
    }

    /// Insertions at two distinct slots of `m` commute.
    fn commutation(&mut self, m: &MeanderCode, s1: Slot, a: &MeanderCode, s2: Slot, b: &MeanderCode) {
        self.report.commutation_checks += 1;
        let (Ok(map_a), Ok(map_b)) = (slot_map(m, s1, a), slot_map(m, s2, b)) else {
            self.fail("commutation", format!("slot map of {m} at {s1}/{s2} failed"));
            return;
        };
        let (Some(s2_after), Some(s1_after)) =
            (map_a.image(Origin::Host, s2), map_b.image(Origin::Host, s1))
        else {
            self.fail("commutation", format!("{m}: host slots lost"));
            return;
        };
        let lhs = self.insert(&map_a.result, s2_after.result, b);
        let rhs = self.insert(&map_b.result, s1_after.result, a);
        if lhs != rhs {
            self.fail(
                "commutation",
                format!("{m} with {a} at {s1} and {b} at {s2}: {lhs:?} vs {rhs:?}"),
            );
        }
    }
}

fn pieces_for(pool: &[MeanderCode], kind: SlotKind) -> Vec<&MeanderCode> {
    pool.iter().filter(|p| kind.accepts(p.order().n)).collect()
}

/// Unit laws on every meander up to `max_total_order`, associativity on all
/// small triples, then `sample_count` seeded random associativity and
/// commutation instances each.
pub fn check_operad_axioms(max_total_order: usize, sample_count: usize, seed: u64) -> OperadReport {
    let mut checker = Checker {
        report: OperadReport {
            max_total_order,
            sample_count,
            seed,
            ..OperadReport::default()
        },
    };

    for m in all_meanders_up_to(max_total_order) {
        checker.units(&m);
    }

    let small = all_meanders_up_to(EXHAUSTIVE_HOST_ORDER);
    let inner = all_meanders_up_to(EXHAUSTIVE_INNER_ORDER);
    for m in &small {
        for s in Slot::all(m) {
            for a in pieces_for(&small, s.kind) {
                for x in Slot::all(a) {
                    for b in pieces_for(&inner, x.kind) {
                        checker.associativity(m, s, a, x, b);
                    }
                }
            }
        }
    }
    for m in &small {
        let slots = Slot::all(m);
        for (i, &s1) in slots.iter().enumerate() {
            for &s2 in &slots[i + 1..] {
                for a in pieces_for(&inner, s1.kind) {
                    for b in pieces_for(&inner, s2.kind) {
                        checker.commutation(m, s1, a, s2, b);
                    }
                }
            }
        }
    }

    let pool = all_meanders_up_to(SAMPLE_POOL_ORDER);
    let hosts: Vec<&MeanderCode> = pool.iter().filter(|m| !m.is_empty()).collect();
    let multi: Vec<&MeanderCode> = pool.iter().filter(|m| m.len() >= 2).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_count {
        let m = *hosts.choose(&mut rng).expect("pool is nonempty");
        let s = *Slot::all(m).choose(&mut rng).expect("host has a slot");
        let candidates: Vec<&MeanderCode> = pieces_for(&pool, s.kind).into_iter().filter(|a| !a.is_empty()).collect();
        let a = *candidates.choose(&mut rng).expect("a piece of each parity");
        let x = *Slot::all(a).choose(&mut rng).expect("piece has a slot");
        let b = *pieces_for(&pool, x.kind).choose(&mut rng).expect("a piece of each parity");
        checker.associativity(m, s, a, x, b);

        let m = *multi.choose(&mut rng).expect("pool has multi-slot hosts");
        let slots = Slot::all(m);
        let mut picked: Vec<Slot> = slots.choose_multiple(&mut rng, 2).copied().collect();
        picked.sort();
        let a = *pieces_for(&pool, picked[0].kind).choose(&mut rng).expect("parity piece");
        let b = *pieces_for(&pool, picked[1].kind).choose(&mut rng).expect("parity piece");
        checker.commutation(m, picked[0], a, picked[1], b);
    }

    checker.report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_check_passes() {
        let r = check_operad_axioms(3, 50, 7);
        assert!(r.passed(), "{:#?}", r.counterexamples);
        assert!(r.unit_checks > 0);
        assert_eq!(r.seed, 7);
    }
}
