//! Exact combinatorics of triangle dissections of a based convex polygon.
//!
//! A convex polygon with `n + 2` sides and one distinguished side (the base)
//! can be cut into `n` triangles by `n - 1` noncrossing diagonals in
//! Catalan-many ways. This crate enumerates those dissections, tabulates two
//! ear statistics (triangles with two polygon sides, and triangles with two
//! non-base polygon sides) by brute force, by recurrence, and by closed form,
//! maps dissections to Dyck paths through a three-stage bijection whose DDU
//! statistic tracks the second ear count, and verifies the associated
//! Catalan-number identities in exact integer arithmetic.
//!
//! Everything is exact: counts and identity values live in arbitrary-precision
//! nonnegative integers, and every division asserts zero remainder.

pub mod arith;
pub mod bijections;
pub mod dissection;
pub mod dyck;
pub mod enumeration;
pub mod identities;
pub mod oeis;
pub mod trees;

pub use arith::Nat;
pub use dissection::{Dissection, Triangle};
pub use dyck::DyckPath;
pub use trees::{BinaryNode, BinaryTree, OrderedTree};
