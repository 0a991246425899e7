//! Dense-tensor numeric core with reverse-mode automatic differentiation.
//!
//! A [`Graph`] is a define-by-run tape: every operation appends a node holding
//! its forward value and enough information to run the backward pass in
//! strict reverse append order. Graphs are rebuilt per forward pass; model
//! parameters live in a [`ParamStore`] between passes and are bound into a
//! graph as leaves at the start of each pass.

pub mod adamw;
pub mod check;
pub mod graph;
pub mod param;

pub use adamw::{adamw_step, AdamWState};
pub use graph::{Activation, Graph, NumError, TensorId};
pub use param::{Binding, Param, ParamId, ParamStore};

/// Element type of all tensors. 64-bit by default; the `f32` feature trades
/// gradient-check headroom for speed.
#[cfg(not(feature = "f32"))]
pub type Scalar = f64;
#[cfg(feature = "f32")]
pub type Scalar = f32;

pub type Result<T> = std::result::Result<T, NumError>;
