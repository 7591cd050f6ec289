//! Independent reference implementations for the integration tests. Nothing
//! here calls into the search or the structure module.
#![allow(dead_code)]

use std::collections::BTreeMap;

use meander_core::{MeanderCode, PointType};

/// Arc `(lo, hi, up)` on one side of the line.
type RawArc = (usize, usize, bool);

fn interleave(a: RawArc, b: RawArc) -> bool {
    a.2 == b.2 && ((a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1))
}

fn raw_arc(p: usize, q: usize, up: bool) -> RawArc {
    (p.min(q), p.max(q), up)
}

/// Planarity straight from the definition: draw every arc and compare all
/// pairs on the same side.
pub fn naive_valid(types: &[PointType], visit: &[usize]) -> bool {
    let n = visit.len();
    let mut arcs = Vec::with_capacity(n + 1);
    let (mut prev, mut up) = (0, true);
    for &p in visit {
        arcs.push(raw_arc(prev, p, up));
        if types[p - 1] == PointType::Cross {
            up = !up;
        }
        prev = p;
    }
    arcs.push(raw_arc(prev, n + 1, up));
    arcs.iter()
        .enumerate()
        .all(|(i, &a)| arcs[i + 1..].iter().all(|&b| !interleave(a, b)))
}

/// Every valid code of total order `n`, by depth-first search with the naive
/// crossing test at each step.
pub fn brute_force(n: usize) -> Vec<MeanderCode> {
    fn go(
        n: usize,
        prev: usize,
        up: bool,
        arcs: &mut Vec<RawArc>,
        types: &mut Vec<PointType>,
        visit: &mut Vec<usize>,
        out: &mut Vec<MeanderCode>,
    ) {
        if visit.len() == n {
            let last = raw_arc(prev, n + 1, up);
            if arcs.iter().all(|&a| !interleave(a, last)) {
                out.push(MeanderCode::new(types.clone(), visit.clone()).unwrap());
            }
            return;
        }
        for p in 1..=n {
            if visit.contains(&p) {
                continue;
            }
            let arc = raw_arc(prev, p, up);
            if arcs.iter().any(|&a| interleave(a, arc)) {
                continue;
            }
            arcs.push(arc);
            visit.push(p);
            for ty in [PointType::Cross, PointType::Touch] {
                types[p - 1] = ty;
                go(n, p, up ^ (ty == PointType::Cross), arcs, types, visit, out);
            }
            visit.pop();
            arcs.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, true, &mut Vec::new(), &mut vec![PointType::Cross; n], &mut Vec::new(), &mut out);
    out.sort_by(|a, b| (a.types(), a.visit()).cmp(&(b.types(), b.visit())));
    out
}

pub fn is_monotone(visit: &[usize]) -> bool {
    visit.windows(2).all(|w| w[0] < w[1]) || visit.windows(2).all(|w| w[0] > w[1])
}

/// Separable permutations are exactly those avoiding 2413 and 3142.
pub fn is_separable(visit: &[usize]) -> bool {
    let n = visit.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let (w, x, y, z) = (visit[a], visit[b], visit[c], visit[d]);
                    if (y < w && w < z && z < x) || (x < z && z < w && w < y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// No window of length `2..n` holds a contiguous range of values.
pub fn is_simple(visit: &[usize]) -> bool {
    let n = visit.len();
    n >= 3
        && (0..n).all(|i| {
            (i + 2..=n).all(|j| {
                let w = &visit[i..j];
                j - i == n || w.iter().max().unwrap() - w.iter().min().unwrap() != j - i - 1
            })
        })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleCounts {
    pub all: BTreeMap<(usize, usize), u64>,
    pub snake: BTreeMap<(usize, usize), u64>,
    pub iterated_snake: BTreeMap<(usize, usize), u64>,
    pub irreducible: BTreeMap<(usize, usize), u64>,
}

impl OracleCounts {
    pub fn get(map: &BTreeMap<(usize, usize), u64>, n: usize, k: usize) -> u64 {
        map.get(&(n, k)).copied().unwrap_or(0)
    }
}

/// Brute-force census of total orders `1..=max_total`.
pub fn oracle_counts(max_total: usize) -> OracleCounts {
    let mut c = OracleCounts::default();
    for total in 1..=max_total {
        for m in brute_force(total) {
            let key = (m.order().n, m.order().k);
            let v = m.visit();
            *c.all.entry(key).or_default() += 1;
            if is_monotone(v) {
                *c.snake.entry(key).or_default() += 1;
            }
            if is_separable(v) {
                *c.iterated_snake.entry(key).or_default() += 1;
            }
            if is_simple(v) {
                *c.irreducible.entry(key).or_default() += 1;
            }
        }
    }
    c
}

/// Valid codes with only crossings, via permutations of `1..=n`.
pub fn crossing_only(n: usize) -> Vec<Vec<usize>> {
    let types = vec![PointType::Cross; n];
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        if naive_valid(&types, &perm) {
            out.push(perm.clone());
        }
        // Next permutation in lexicographic order.
        let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
