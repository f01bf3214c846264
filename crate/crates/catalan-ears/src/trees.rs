//! Binary trees and ordered (plane) trees, the intermediate shapes between
//! dissections and Dyck paths.

/// A node of a binary tree; either child may be absent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinaryNode {
    pub left: Option<Box<BinaryNode>>,
    pub right: Option<Box<BinaryNode>>,
}

/// A binary tree on `n >= 0` nodes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BinaryTree {
    pub root: Option<Box<BinaryNode>>,
}

impl BinaryNode {
    pub fn leaf() -> Box<BinaryNode> {
        Box::new(BinaryNode::default())
    }

    pub fn node_count(&self) -> usize {
        1 + self.left.as_deref().map_or(0, BinaryNode::node_count)
            + self.right.as_deref().map_or(0, BinaryNode::node_count)
    }
}

impl BinaryTree {
    pub fn node_count(&self) -> usize {
        self.root.as_deref().map_or(0, BinaryNode::node_count)
    }
}

/// An ordered tree: a root with a sequence of subtrees. Children order is
/// significant. A node is itself a tree, so the type is recursive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderedTree {
    pub children: Vec<OrderedTree>,
}

impl OrderedTree {
    pub fn edge_count(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.edge_count())
            .sum()
    }
}
