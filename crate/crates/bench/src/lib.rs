//! Benchmark helpers: canonical instances shared by the benchmark targets.

use locvol::{rat, BoundaryEntry, LogPair, PlaneCurve, Rat, Result};

/// The cusp family pair used as a medium-size optimizer workload.
pub fn cusp_pair(k: u32) -> Result<LogPair> {
    let eps = rat(1, 4);
    locvol::dk_pair(k, &eps)
}

/// A three-curve mixed boundary exercising initial form refinement.
pub fn mixed_pair() -> Result<LogPair> {
    let f = PlaneCurve::parse("x^2 - y^3")?;
    let g = PlaneCurve::parse("y")?;
    let h = PlaneCurve::parse("x^3 + x*y^2 - y^4")?;
    LogPair::smooth(vec![
        BoundaryEntry::new(rat(1, 2), f),
        BoundaryEntry::new(rat(1, 3), g),
        BoundaryEntry::new(rat(1, 5), h),
    ])
}

/// Coefficient set reused by enumeration benchmarks.
pub fn half_set() -> Vec<Rat> {
    vec![rat(1, 2)]
}
