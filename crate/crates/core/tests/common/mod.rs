//! Shared test oracles: independent reference computations used to check the
//! library from first principles. Everything here works directly from curve
//! terms or generator lists and never calls the code paths under test.

#![allow(dead_code)]

use locvol::{int, rat, BoundaryEntry, LogPair, PlaneCurve, Rat};
use num_traits::{One, Signed, Zero};

/// Builds a smooth-plane pair from (numerator, denominator, polynomial)
/// triples.
pub fn pair(entries: &[(i64, i64, &str)]) -> LogPair {
    let boundary = entries
        .iter()
        .map(|&(n, d, poly)| BoundaryEntry::new(rat(n, d), PlaneCurve::parse(poly).unwrap()))
        .collect();
    LogPair::smooth(boundary).unwrap()
}

/// Normalized volume of a smooth-plane pair at weights (w1, w2), straight
/// from the definitions: A = w1 + w2 - sum a_i * min over terms of
/// (p*w1 + q*w2), value = A^2 / (w1*w2). None when A is not positive.
pub fn direct_nvol(pair: &LogPair, w1: &Rat, w2: &Rat) -> Option<Rat> {
    let mut a = w1 + w2;
    for e in pair.boundary() {
        let order = e
            .curve
            .support()
            .map(|&(p, q)| Rat::from_integer(p.into()) * w1 + Rat::from_integer(q.into()) * w2)
            .min()
            .unwrap();
        a -= &e.coeff * order;
    }
    if !a.is_positive() {
        return None;
    }
    Some(&a * &a / (w1 * w2))
}

/// Minimum of the normalized volume over all weight pairs (i, j) with
/// 1 <= i, j <= bound, ignoring rays where the pair is not klt.
pub fn grid_min_nvol(pair: &LogPair, bound: u64) -> Rat {
    let mut best: Option<Rat> = None;
    for i in 1..=bound {
        for j in 1..=bound {
            let w1 = Rat::from_integer(i.into());
            let w2 = Rat::from_integer(j.into());
            if let Some(v) = direct_nvol(pair, &w1, &w2) {
                if best.as_ref().map_or(true, |b| v < *b) {
                    best = Some(v);
                }
            }
        }
    }
    best.expect("some grid ray is klt")
}

/// Minimum of A(w) / (ideal order at w) over the same weight grid: an upper
/// bound witness for log canonical thresholds of monomial ideals.
pub fn grid_lct_ideal(pair: &LogPair, gens: &[(u32, u32)], bound: u64) -> Rat {
    let mut best: Option<Rat> = None;
    for i in 1..=bound {
        for j in 1..=bound {
            let w1 = Rat::from_integer(i.into());
            let w2 = Rat::from_integer(j.into());
            let mut a = &w1 + &w2;
            for e in pair.boundary() {
                let order = e
                    .curve
                    .support()
                    .map(|&(p, q)| {
                        Rat::from_integer(p.into()) * &w1 + Rat::from_integer(q.into()) * &w2
                    })
                    .min()
                    .unwrap();
                a -= &e.coeff * order;
            }
            if !a.is_positive() {
                continue;
            }
            let phi = gens
                .iter()
                .map(|&(p, q)| {
                    Rat::from_integer(p.into()) * &w1 + Rat::from_integer(q.into()) * &w2
                })
                .min()
                .unwrap();
            let s = a / phi;
            if best.as_ref().map_or(true, |b| s < *b) {
                best = Some(s);
            }
        }
    }
    best.expect("some grid ray is klt")
}

/// True when (x, y) lies in the scaled Newton polyhedron
/// scale * (conv(gens) + positive quadrant), decided by segment domination:
/// some point of a segment between two scaled generators is coordinatewise
/// at most (x, y).
fn in_scaled_polyhedron(gens: &[(u32, u32)], scale: i64, x: i64, y: i64) -> bool {
    for (i, &(a1, a2)) in gens.iter().enumerate() {
        for &(b1, b2) in &gens[i..] {
            let a = (scale * a1 as i64, scale * a2 as i64);
            let b = (scale * b1 as i64, scale * b2 as i64);
            let mut lo = Rat::zero();
            let mut hi = Rat::one();
            let mut feasible = true;
            for (c, d) in [(a.0 - b.0, x - b.0), (a.1 - b.1, y - b.1)] {
                if c > 0 {
                    let r = rat(d, c);
                    if r < hi {
                        hi = r;
                    }
                } else if c < 0 {
                    let r = rat(d, c);
                    if r > lo {
                        lo = r;
                    }
                } else if d < 0 {
                    feasible = false;
                }
            }
            if feasible && lo <= hi {
                return true;
            }
        }
    }
    false
}

/// Hilbert-Samuel multiplicity of an m-primary monomial ideal by lattice
/// point counting: the number N(m) of monomials outside the m-th scaled
/// Newton polyhedron is a quadratic polynomial in m whose second difference
/// is twice the leading coefficient, which is the multiplicity.
pub fn oracle_multiplicity(gens: &[(u32, u32)]) -> i64 {
    let p_max = gens.iter().map(|g| g.0).max().unwrap() as i64;
    let q_max = gens.iter().map(|g| g.1).max().unwrap() as i64;
    let count = |m: i64| -> i64 {
        let mut n = 0;
        for x in 0..m * p_max {
            for y in 0..m * q_max {
                if !in_scaled_polyhedron(gens, m, x, y) {
                    n += 1;
                }
            }
        }
        n
    };
    count(3) - 2 * count(2) + count(1)
}

/// Number of monomials with w1*p + w2*q strictly below m: the colength of
/// the valuation ideal at level m for integer weights.
pub fn oracle_colength(w1: u64, w2: u64, m: u64) -> u64 {
    let mut n = 0;
    let mut p = 0;
    while w1 * p < m {
        let mut q = 0;
        while w1 * p + w2 * q < m {
            n += 1;
            q += 1;
        }
        p += 1;
    }
    n
}

/// Threshold-multiplicity datum s_m = lct(a_m)^2 * e(a_m) computed entirely
/// from the closed forms for integer weights (w1, w2) on the empty pair:
/// the valuation ideal generators come from the staircase, the threshold
/// from the grid sweep, and the multiplicity from lattice counting.
pub fn oracle_s_m(w1: u64, w2: u64, m: u64, grid: u64) -> Rat {
    let mut gens: Vec<(u32, u32)> = Vec::new();
    let mut q = 0u64;
    loop {
        let rest = m.saturating_sub(w2 * q);
        let p = rest.div_ceil(w1);
        if gens.last().map_or(true, |&(lp, _)| (p as u32) < lp) {
            gens.push((p as u32, q as u32));
        }
        if p == 0 {
            break;
        }
        q += 1;
    }
    let lct = grid_lct_ideal(&LogPair::empty(), &gens, grid);
    let e = oracle_multiplicity(&gens);
    &lct * &lct * int(e)
}

/// Exact distance between two rationals.
pub fn gap(a: &Rat, b: &Rat) -> Rat {
    (a - b).abs()
}
