//! Monomial ideals of the local ring at the origin: primality to the maximal
//! ideal, Hilbert-Samuel multiplicity, valuation ideals of monomial
//! valuations, and log canonical thresholds of monomial ideals with respect
//! to monomial-boundary pairs.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::newton::{self, Facet};
use crate::pair::LogPair;
use crate::rat::Rat;
use crate::valuation::MonomialValuation;

/// Monomial ideal, stored as the antichain of minimal generators sorted with
/// increasing x-exponent. The generator (0, 0) is rejected: unit ideals are
/// out of scope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<(u32, u32)>,
}

impl MonomialIdeal {
    /// Builds an ideal from any generating set, reducing to the minimal one.
    pub fn new(gens: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let pts: Vec<(u32, u32)> = gens.into_iter().collect();
        if pts.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let mut chain = newton::antichain(&pts);
        if chain == [(0, 0)] {
            return Err(Error::UnitIdeal);
        }
        chain.reverse();
        Ok(MonomialIdeal { gens: chain })
    }

    /// The maximal ideal (x, y).
    pub fn maximal() -> Self {
        MonomialIdeal {
            gens: vec![(0, 1), (1, 0)],
        }
    }

    /// Minimal generators, sorted with increasing x-exponent.
    pub fn gens(&self) -> &[(u32, u32)] {
        &self.gens
    }

    /// Whether the ideal contains a power of x and a power of y.
    pub fn is_m_primary(&self) -> bool {
        self.gens.first().map_or(false, |&(p, _)| p == 0)
            && self.gens.last().map_or(false, |&(_, q)| q == 0)
    }

    /// Membership of a monomial: some generator divides it.
    pub fn contains(&self, p: u32, q: u32) -> bool {
        self.gens.iter().any(|&(a, b)| a <= p && b <= q)
    }

    fn hull(&self) -> Vec<(u32, u32)> {
        let mut chain = self.gens.clone();
        chain.reverse();
        newton::lower_hull(&chain)
    }

    fn facets(&self) -> Vec<Facet> {
        let hull = self.hull();
        hull.windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                let dp = (a.0 - b.0) as u64;
                let dq = (b.1 - a.1) as u64;
                let g = num_integer::gcd(dp, dq);
                let (u, v) = (dq / g, dp / g);
                Facet {
                    normal: (u, v),
                    value: u * a.0 as u64 + v * a.1 as u64,
                }
            })
            .collect()
    }

    /// Hilbert-Samuel multiplicity: twice the area between the axes and the
    /// lower hull of the generators (the covolume of the Newton polyhedron,
    /// which computes the multiplicity of a plane monomial ideal).
    pub fn multiplicity(&self) -> Result<Rat> {
        if !self.is_m_primary() {
            return Err(Error::NotPrimary);
        }
        let hull = self.hull();
        let mut twice_area: i128 = 0;
        for w in hull.windows(2) {
            let (a, b) = (w[0], w[1]);
            twice_area += a.0 as i128 * b.1 as i128 - b.0 as i128 * a.1 as i128;
        }
        Ok(Rat::from_integer(twice_area.abs().into()))
    }

    /// Sum of two ideals: union of the generators, minimized.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.gens.iter().chain(other.gens.iter()).copied())
            .expect("sum of proper monomial ideals")
    }
}

/// Valuation ideal of the monomial valuation v at level p: the monomials with
/// v-value at least p, with p positive.
pub fn valuation_ideal(v: &MonomialValuation, p: &Rat) -> Result<MonomialIdeal> {
    if !p.is_positive() {
        return Err(Error::InvalidArgument("level must be positive".into()));
    }
    let (w1, w2) = v.weights();
    let mut gens: Vec<(u32, u32)> = Vec::new();
    let mut beta: u32 = 0;
    let mut prev_alpha: Option<u32> = None;
    loop {
        let need = p - w2 * Rat::from_integer(beta.into());
        let alpha: u32 = if need.is_positive() {
            let a = (need / w1).ceil().to_integer();
            u32::try_from(&a).map_err(|_| {
                Error::InvalidArgument("valuation ideal generator exponent overflow".into())
            })?
        } else {
            0
        };
        if prev_alpha.map_or(true, |pa| alpha < pa) {
            gens.push((alpha, beta));
            prev_alpha = Some(alpha);
        }
        if alpha == 0 {
            break;
        }
        beta += 1;
    }
    MonomialIdeal::new(gens)
}

/// The affine coefficients (alpha, beta) of the ray log discrepancy
/// A(t) = alpha + beta*t of a monomial-boundary pair: alpha = 1 - sum a_i*p_i
/// and beta = 1 - sum a_i*q_i over boundary monomials x^(p_i)*y^(q_i).
fn monomial_boundary_affine(pair: &LogPair) -> Result<(Rat, Rat)> {
    let mut alpha = Rat::one();
    let mut beta = Rat::one();
    for entry in pair.boundary() {
        let (p, q) = entry
            .curve
            .the_monomial()
            .ok_or(Error::NonMonomialBoundary)?;
        alpha -= &entry.coeff * Rat::from_integer(p.into());
        beta -= &entry.coeff * Rat::from_integer(q.into());
    }
    Ok((alpha, beta))
}

/// Log canonical threshold of a monomial ideal with respect to a pair whose
/// boundary consists of monomial curves on the smooth plane.
///
/// The threshold is the minimum over monomial rays of A(t) / phi(t) where
/// phi is the weighted order of the ideal at weights (1, t); the minimum is
/// attained at a facet ray of the ideal or in the limit toward an axis.
pub fn lct_ideal(pair: &LogPair, ideal: &MonomialIdeal) -> Result<Rat> {
    if !pair.is_smooth_ambient() {
        return Err(Error::InvalidArgument(
            "ideal thresholds are computed on the smooth plane".into(),
        ));
    }
    let (alpha, beta) = monomial_boundary_affine(pair)?;
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::NotKlt);
    }
    let hull = ideal.hull();
    let mut candidates: Vec<Rat> = Vec::new();
    for f in ideal.facets() {
        let t = Rat::new(f.normal.1.into(), f.normal.0.into());
        let phi = hull
            .iter()
            .map(|&(p, q)| Rat::from_integer(p.into()) + &t * Rat::from_integer(q.into()))
            .min()
            .unwrap();
        candidates.push((&alpha + &beta * &t) / phi);
    }
    let (p_min, _) = *hull.last().unwrap();
    if p_min > 0 {
        candidates.push(&alpha / Rat::from_integer(p_min.into()));
    }
    let (_, q_min) = *hull.first().unwrap();
    if q_min > 0 {
        candidates.push(&beta / Rat::from_integer(q_min.into()));
    }
    candidates
        .into_iter()
        .min()
        .ok_or_else(|| Error::InternalInconsistency("no threshold candidates".into()))
}

/// Subadditivity check for thresholds of ideal sums:
/// lct(a + b) <= lct(a) + lct(b). Returns (lhs, rhs, lhs <= rhs).
pub fn lct_sum_check(
    pair: &LogPair,
    a: &MonomialIdeal,
    b: &MonomialIdeal,
) -> Result<(Rat, Rat, bool)> {
    let lhs = lct_ideal(pair, &a.sum(b))?;
    let rhs = lct_ideal(pair, a)? + lct_ideal(pair, b)?;
    let ok = lhs <= rhs;
    Ok((lhs, rhs, ok))
}
