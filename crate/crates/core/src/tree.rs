//! Increasing trees with prescribed child slots.
//!
//! An arity vector `t = (t_1, ..., t_m)` fixes, for each vertex label
//! `v`, the number `t_v` of ordered child slots the vertex offers. A tree
//! on these vertices attaches every vertex `v >= 2` to a free slot of a
//! vertex with a smaller label, so vertex 1 is always the root and labels
//! increase away from it. The binary case is `t = (2, ..., 2)` with slot 1
//! the left child and slot 2 the right child.

use alloc::vec::Vec;

use crate::{Error, Result};

/// A validated increasing tree. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IncreasingTree {
    arity: Vec<usize>,
    /// `edges[v - 2]` is the `(parent, slot)` pair of vertex `v`.
    edges: Vec<(usize, usize)>,
}

impl IncreasingTree {
    /// Builds a tree from its arity vector and, for every vertex
    /// `2 ..= m` in order, the slot it occupies.
    pub fn new(arity: Vec<usize>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let m = arity.len();
        if edges.len() != m.saturating_sub(1) {
            return Err(Error::EdgeCountMismatch {
                expected: m.saturating_sub(1),
                got: edges.len(),
            });
        }
        let mut taken = alloc::vec::Vec::new();
        for (i, &(parent, slot)) in edges.iter().enumerate() {
            let child = i + 2;
            if parent == 0 || parent >= child {
                return Err(Error::ParentNotSmaller { child, parent });
            }
            if slot == 0 || slot > arity[parent - 1] {
                return Err(Error::SlotOutOfRange { parent, slot, arity: arity[parent - 1] });
            }
            if taken.contains(&(parent, slot)) {
                return Err(Error::SlotTaken { parent, slot });
            }
            taken.push((parent, slot));
        }
        Ok(IncreasingTree { arity, edges })
    }

    /// The one-vertex tree whose root offers `arity` slots.
    pub fn singleton(arity: usize) -> Self {
        IncreasingTree { arity: alloc::vec![arity], edges: Vec::new() }
    }

    pub fn vertices(&self) -> usize {
        self.arity.len()
    }

    pub fn arity(&self) -> &[usize] {
        &self.arity
    }

    /// `(parent, slot)` of vertex `v`, or `None` for the root.
    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        if v >= 2 && v <= self.vertices() {
            Some(self.edges[v - 2])
        } else {
            None
        }
    }

    /// Edges as `(child, parent, slot)` triples, children ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().enumerate().map(|(i, &(p, s))| (i + 2, p, s))
    }

    /// The child of vertex `u` in the given slot, if any.
    pub fn child(&self, u: usize, slot: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&e| e == (u, slot))
            .map(|i| i + 2)
    }

    /// Number of children of vertex `u`.
    pub fn child_count(&self, u: usize) -> usize {
        self.edges.iter().filter(|&&(p, _)| p == u).count()
    }

    /// Slots of vertex `u` that hold a child.
    pub fn occupied_slots(&self, u: usize) -> Vec<usize> {
        let mut slots: Vec<usize> =
            self.edges.iter().filter(|&&(p, _)| p == u).map(|&(_, s)| s).collect();
        slots.sort_unstable();
        slots
    }

    pub fn is_binary(&self) -> bool {
        self.arity.iter().all(|&t| t == 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// The 6-vertex binary tree with 1(left 5, right 2), 2(right 3),
    /// 3(left 4), 4(left 6).
    pub(crate) fn running_example() -> IncreasingTree {
        IncreasingTree::new(
            vec![2; 6],
            vec![(1, 2), (2, 2), (3, 1), (1, 1), (4, 1)],
        )
        .unwrap()
    }

    #[test]
    fn children_and_parents() {
        let t = running_example();
        assert_eq!(t.child(1, 1), Some(5));
        assert_eq!(t.child(1, 2), Some(2));
        assert_eq!(t.child(2, 1), None);
        assert_eq!(t.child(2, 2), Some(3));
        assert_eq!(t.child_count(4), 1);
        assert_eq!(t.child_count(6), 0);
        assert_eq!(t.parent(6), Some((4, 1)));
        assert_eq!(t.parent(1), None);
        assert!(t.is_binary());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            IncreasingTree::new(vec![2, 2], vec![(2, 1)]).unwrap_err(),
            Error::ParentNotSmaller { child: 2, parent: 2 }
        );
        assert_eq!(
            IncreasingTree::new(vec![1, 1], vec![(1, 2)]).unwrap_err(),
            Error::SlotOutOfRange { parent: 1, slot: 2, arity: 1 }
        );
        assert_eq!(
            IncreasingTree::new(vec![1, 1, 1], vec![(1, 1), (1, 1)]).unwrap_err(),
            Error::SlotTaken { parent: 1, slot: 1 }
        );
        assert_eq!(
            IncreasingTree::new(vec![2, 2], vec![]).unwrap_err(),
            Error::EdgeCountMismatch { expected: 1, got: 0 }
        );
    }

    #[test]
    fn singleton_and_empty() {
        let single = IncreasingTree::singleton(2);
        assert_eq!(single.vertices(), 1);
        assert_eq!(single.child_count(1), 0);
        let empty = IncreasingTree::new(vec![], vec![]).unwrap();
        assert_eq!(empty.vertices(), 0);
    }

    #[test]
    fn ternary_slots() {
        let t = IncreasingTree::new(vec![3, 3], vec![(1, 2)]).unwrap();
        assert_eq!(t.occupied_slots(1), vec![2]);
        assert!(!t.is_binary());
    }
}
