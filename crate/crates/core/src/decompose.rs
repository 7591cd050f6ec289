//! Canonical decomposition into irreducible meanders and iterated snakes.
//!
//! The strong-interval tree is read top down. A prime node becomes an
//! irreducible factor whose slots carry the decompositions of its children.
//! A maximal connected region of linear nodes becomes one iterated-snake
//! factor: its skeleton is obtained by collapsing every prime subtree hanging
//! off the region, and only those subtrees appear as its non-point children.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::meander::{MeanderCode, PointType};
use crate::operad::{insert, Slot, SlotKind};
use crate::structure::{
    contract_many, extract, is_irreducible, is_iterated_snake, strong_intervals, Interval, NodeKind, TreeNode,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorKind {
    IteratedSnake,
    Irreducible,
    Point,
}

impl FactorKind {
    pub fn name(self) -> &'static str {
        match self {
            FactorKind::IteratedSnake => "iterated-snake",
            FactorKind::Irreducible => "irreducible",
            FactorKind::Point => "point",
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Child {
    pub slot: Slot,
    pub node: DecompTree,
}

/// A factor plus the decompositions plugged into each of its slots, in
/// l-order. Point nodes are single intersection points and have no children.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompTree {
    pub kind: FactorKind,
    pub skeleton: MeanderCode,
    pub children: Vec<Child>,
}

impl DecompTree {
    fn point(ty: PointType) -> Self {
        DecompTree {
            kind: FactorKind::Point,
            skeleton: match ty {
                PointType::Cross => MeanderCode::unit_cross(),
                PointType::Touch => MeanderCode::unit_touch(),
            },
            children: Vec::new(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "kind": self.kind,
            "skeleton": self.skeleton.to_string(),
            "children": self.children.iter().map(|c| json!({
                "slot": c.slot,
                "node": c.node.to_json(),
            })).collect::<Vec<_>>(),
        })
    }

    /// Indented text, one factor per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0, None);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize, slot: Option<Slot>) {
        let indent = "  ".repeat(depth);
        let prefix = slot.map(|s| format!("{s}: ")).unwrap_or_default();
        out.push_str(&format!("{indent}{prefix}{} {}\n", self.kind, self.skeleton));
        for c in &self.children {
            if c.node.kind != FactorKind::Point {
                c.node.write_text(out, depth + 1, Some(c.slot));
            }
        }
    }

    /// Pre-order walk over all nodes.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a DecompTree, Option<&'a DecompTree>)) {
        fn go<'a>(
            node: &'a DecompTree,
            parent: Option<&'a DecompTree>,
            f: &mut impl FnMut(&'a DecompTree, Option<&'a DecompTree>),
        ) {
            f(node, parent);
            for c in &node.children {
                go(&c.node, Some(node), f);
            }
        }
        go(self, None, f);
    }

    /// Checks factor kinds, slot parities and iterated-snake maximality.
    pub fn check_soundness(&self) -> std::result::Result<(), String> {
        let mut problem = None;
        self.walk(&mut |node, parent| {
            if problem.is_some() {
                return;
            }
            let ok = match node.kind {
                FactorKind::Irreducible => is_irreducible(&node.skeleton),
                FactorKind::IteratedSnake => is_iterated_snake(&node.skeleton),
                FactorKind::Point => node.skeleton.len() == 1,
            };
            if !ok {
                problem = Some(format!("{} factor {} fails its class test", node.kind, node.skeleton));
            } else if node.kind == FactorKind::IteratedSnake
                && parent.is_some_and(|p| p.kind == FactorKind::IteratedSnake)
            {
                problem = Some(format!("iterated snake {} sits under another iterated snake", node.skeleton));
            } else if node.kind != FactorKind::Point && node.children.len() != node.skeleton.len() {
                problem = Some(format!("factor {} does not fill every slot", node.skeleton));
            }
            for c in &node.children {
                if !c.slot.kind.accepts(c.node.order_n()) {
                    problem = Some(format!("parity mismatch at {} of {}", c.slot, node.skeleton));
                }
            }
        });
        problem.map_or(Ok(()), Err)
    }

    /// Transverse count of the meander this node reconstructs to.
    fn order_n(&self) -> usize {
        if self.kind == FactorKind::Point {
            self.skeleton.order().n
        } else {
            self.children.iter().map(|c| c.node.order_n()).sum()
        }
    }
}

/// Decomposes a nonempty meander into prime factors.
pub fn decompose(code: &MeanderCode) -> Result<DecompTree> {
    code.ensure_valid()?;
    decompose_valid(code)
}

fn decompose_valid(code: &MeanderCode) -> Result<DecompTree> {
    let tree = strong_intervals(code)?;
    let (kind, frontier) = match &tree.root {
        TreeNode::Leaf { point, .. } => return Ok(DecompTree::point(*point)),
        TreeNode::Internal {
            kind: NodeKind::Prime,
            children,
            ..
        } => (
            FactorKind::Irreducible,
            children.iter().map(TreeNode::interval).collect(),
        ),
        linear @ TreeNode::Internal { .. } => {
            let mut frontier = Vec::new();
            linear_frontier(linear, &mut frontier);
            (FactorKind::IteratedSnake, frontier)
        }
    };
    let skeleton = contract_many(code, &frontier)?;
    let children = frontier
        .iter()
        .enumerate()
        .map(|(i, iv)| {
            let slot = Slot::at_position(&skeleton, i + 1);
            let node = if iv.len() == 1 {
                DecompTree::point(code.point_type(iv.lo))
            } else {
                decompose_valid(&extract(code, *iv)?)?
            };
            Ok(Child { slot, node })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompTree {
        kind,
        skeleton,
        children,
    })
}

/// Leaves and prime nodes reachable from `node` through linear nodes.
fn linear_frontier(node: &TreeNode, out: &mut Vec<Interval>) {
    match node {
        TreeNode::Internal {
            kind: NodeKind::Linear,
            children,
            ..
        } => children.iter().for_each(|c| linear_frontier(c, out)),
        other => out.push(other.interval()),
    }
}

/// Rebuilds a meander by inserting every child into its slot.
pub fn reconstruct(tree: &DecompTree) -> Result<MeanderCode> {
    if tree.kind == FactorKind::Point {
        return Ok(tree.skeleton.clone());
    }
    let mut children: Vec<(usize, &Child)> = tree
        .children
        .iter()
        .map(|c| Ok((c.slot.position(&tree.skeleton)?, c)))
        .collect::<Result<_>>()?;
    // Right to left so that labels of the remaining slots stay put.
    children.sort_by_key(|c| std::cmp::Reverse(c.0));
    let mut code = tree.skeleton.clone();
    for (_, child) in children {
        let piece = reconstruct(&child.node)?;
        if !child.slot.kind.accepts(piece.order().n) {
            return Err(Error::ColorMismatch {
                kind: child.slot.kind,
                expected: match child.slot.kind {
                    SlotKind::Crossing => "odd",
                    SlotKind::Touch => "even",
                },
                transverse: piece.order().n,
            });
        }
        if child.node.kind != FactorKind::Point {
            code = insert(&code, child.slot, &piece)?;
        }
    }
    Ok(code)
}

/// Skeletons of all non-point factors, pre-order.
pub fn prime_factors(code: &MeanderCode) -> Result<Vec<(FactorKind, MeanderCode)>> {
    let tree = decompose(code)?;
    let mut out = Vec::new();
    tree.walk(&mut |node, _| {
        if node.kind != FactorKind::Point {
            out.push((node.kind, node.skeleton.clone()));
        }
    });
    Ok(out)
}
