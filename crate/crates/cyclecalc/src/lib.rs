//! Exact-arithmetic operator calculus for tautological curve cycles on the
//! Jacobian of a curve.
//!
//! The crate models the ring spanned by the graphs of the multiplication
//! maps on a `g`-dimensional abelian variety, its orthogonal projectors, the
//! weight grading they induce on curve classes, and the relations that a
//! degree-`d` pencil on the curve imposes on those weights. All coefficients
//! are exact rationals; every identity the crate exposes is checked by
//! exhaustive desk-scale computation, never by approximation.
//!
//! Start with the runnable examples (`cargo run --example ring_basics`) or
//! the expression DSL (`cyclecalc eval "pi(2*g-2) @ C" --genus 3`).

pub mod binom;
pub mod cycles;
pub mod gonal;
mod linalg;
pub mod rational;
mod render;
pub mod ring;

pub use cycles::{
    apply_operator, decompose_w, gross_schoen, unit_curve, CurveClass, EquivalenceLevel,
    GradedCycle, WDecomposition,
};
pub use rational::{frac, rat, Rational};
pub use ring::{gamma, log_gamma1, pi, IdealMask, RingElement};
