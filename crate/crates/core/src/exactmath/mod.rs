//! Exact rational arithmetic and linear algebra over F2.

mod f2;
mod rational;

pub use f2::{BitVec, F2Matrix, Span};
pub use rational::{q, Rational};
