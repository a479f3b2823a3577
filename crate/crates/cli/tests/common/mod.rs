#![allow(dead_code)]

mod golden_cases;
pub mod suite;

pub use golden_cases::*;
