#![no_std]

extern crate alloc;

pub mod calculus;
pub mod error;
pub mod functions;
pub mod optimize;
pub mod registry;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use functions::{evaluate, evaluate_batch, EvalContext, NoisePolicy, Params};
pub use registry::{lookup, FunctionId, FunctionSpec};
