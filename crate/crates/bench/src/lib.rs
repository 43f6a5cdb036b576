//! Fixtures shared by the benchmarks.

use grpfact_core::catalog::Catalog;
use grpfact_core::{Group, Shape};

pub fn group(id: &str) -> Group {
    Catalog::builtin().build(id).expect("catalog group")
}

pub fn shape(s: &str) -> Shape {
    s.parse().expect("shape")
}
