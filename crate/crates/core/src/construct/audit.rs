//! Which commutator nodes of a tree vanish, and where.
//!
//! A commutator tree whose leaves solve `g_1..g_m` solves `g_1 or ... or g_m`
//! exactly when no internal node vanishes at a removal where that disjunction
//! hangs. Collapses at removals where the target already falls are harmless
//! and reported separately.

use alloc::vec::Vec;
use core::fmt;

use crate::spec::{subsets_by_size, Spec, SpecError};
use crate::word::{Expr, NailSet, Word};

/// Largest universe the audit enumerates.
pub const MAX_AUDIT_NAILS: u8 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    Left,
    Right,
}

/// Route from the root to an internal node.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct NodePath(pub Vec<Branch>);

impl NodePath {
    pub fn root() -> NodePath {
        NodePath(Vec::new())
    }

    pub fn parse(s: &str) -> Option<NodePath> {
        if s == "root" {
            return Some(NodePath::root());
        }
        s.chars()
            .map(|c| match c {
                'L' => Some(Branch::Left),
                'R' => Some(Branch::Right),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(NodePath)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for b in &self.0 {
            f.write_str(match b {
                Branch::Left => "L",
                Branch::Right => "R",
            })?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeEvent {
    pub path: NodePath,
    pub removed: NailSet,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Audit {
    /// Internal nodes that vanish at a removal where the puzzle hangs.
    pub vanishing: Vec<NodeEvent>,
    /// Nodes that collapse (both arguments nonzero, commutator zero) at a
    /// removal where the puzzle falls anyway.
    pub harmless: Vec<NodeEvent>,
}

impl Audit {
    pub fn is_clean(&self) -> bool {
        self.vanishing.is_empty()
    }
}

struct Node {
    path: NodePath,
    word: Word,
    left: Word,
    right: Word,
}

fn collect(e: &Expr, path: &mut Vec<Branch>, out: &mut Vec<Node>) {
    if let Expr::Comm(a, b) = e {
        out.push(Node {
            path: NodePath(path.clone()),
            word: e.word(),
            left: a.word(),
            right: b.word(),
        });
        path.push(Branch::Left);
        collect(a, path, out);
        path.pop();
        path.push(Branch::Right);
        collect(b, path, out);
        path.pop();
    }
}

/// Audits every removal set of the puzzle's universe. Internal nodes are the
/// commutators reachable from the root through commutators; anything else is
/// a leaf.
pub fn node_vanish_audit(tree: &Expr, spec: &Spec) -> Result<Audit, SpecError> {
    if spec.n() > MAX_AUDIT_NAILS {
        return Err(SpecError::UniverseTooLarge {
            n: spec.n(),
            max: MAX_AUDIT_NAILS,
        });
    }
    let mut nodes = Vec::new();
    collect(tree, &mut Vec::new(), &mut nodes);
    let mut audit = Audit::default();
    for s in subsets_by_size(spec.n()) {
        let falls = spec.falls(s);
        for node in &nodes {
            if !node.word.vanishes_under(s) {
                continue;
            }
            let event = || NodeEvent {
                path: node.path.clone(),
                removed: s,
            };
            if !falls {
                audit.vanishing.push(event());
            } else if !node.left.vanishes_under(s) && !node.right.vanishes_under(s) {
                audit.harmless.push(event());
            }
        }
    }
    Ok(audit)
}
