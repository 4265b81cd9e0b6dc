//! Exact evaluation of trivalent string diagrams over Q(d).

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod diagram;
pub mod gram;
pub mod liealg;
pub mod rewrite;
pub mod scalar;
pub mod tl;
pub mod verify;
