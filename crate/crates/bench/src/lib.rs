//! Shared fixtures for the benchmarks.

use odcodes::codes::{c_a_code, EvaluationCode};
use odcodes::varieties::{affine_points, hermitian_presentation};
use odcodes::{Limits, PointSet, Presentation};

pub fn limits() -> Limits {
    Limits::default()
}

/// Verified Hermitian presentation and its affine points.
pub fn hermitian(r: u32, q: u32) -> (Presentation, PointSet) {
    let l = limits();
    let p = hermitian_presentation(r, q, &l).expect("hermitian presentation");
    let pts = affine_points(p.ring(), p.ideal(), &l).expect("hermitian points");
    (p, pts)
}

/// `C_1` on the Hermitian chart.
pub fn hermitian_c1(r: u32, q: u32) -> EvaluationCode {
    let (p, pts) = hermitian(r, q);
    c_a_code(&p, &pts, 1, &limits()).expect("C_1 code")
}
