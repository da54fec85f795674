#![allow(dead_code, unused_imports)]

pub mod invariants;
mod strategies;

pub use strategies::*;
