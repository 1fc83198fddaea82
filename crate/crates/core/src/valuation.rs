//! Monomial valuations with positive rational weights, their log
//! discrepancies with respect to a pair, volumes, and normalized volumes,
//! together with the order comparison and boundary-removal estimates.
//!
//! For weights w = (w1, w2) the valuation of a germ is the minimum of
//! p*w1 + q*w2 over the support. Its volume is 1/(w1*w2), the log
//! discrepancy of the pair (plane, sum a_i div(f_i)) is
//! w1 + w2 - sum a_i * v(f_i), and the normalized volume is the square of
//! the log discrepancy times the volume.

use num_integer::Integer;

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::pair::LogPair;
use crate::rat::{int, Rat};

/// Monomial valuation with positive rational weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialValuation {
    w1: Rat,
    w2: Rat,
}

impl MonomialValuation {
    pub fn new(w1: Rat, w2: Rat) -> Result<Self> {
        let zero = Rat::from_integer(0.into());
        if w1 <= zero || w2 <= zero {
            return Err(Error::InvalidArgument("weights must be positive".into()));
        }
        Ok(MonomialValuation { w1, w2 })
    }

    pub fn from_integers(m1: u64, m2: u64) -> Result<Self> {
        MonomialValuation::new(Rat::from_integer(m1.into()), Rat::from_integer(m2.into()))
    }

    pub fn weights(&self) -> (&Rat, &Rat) {
        (&self.w1, &self.w2)
    }

    /// The coprime integer weights spanning the same ray.
    pub fn coprime_integer_weights(&self) -> (num_bigint::BigInt, num_bigint::BigInt) {
        let d = self.w1.denom().lcm(self.w2.denom());
        let n1 = (&self.w1 * Rat::from_integer(d.clone())).to_integer();
        let n2 = (&self.w2 * Rat::from_integer(d)).to_integer();
        let g = n1.gcd(&n2);
        (n1 / &g, n2 / g)
    }

    /// Value on a curve germ.
    pub fn value_on(&self, curve: &PlaneCurve) -> Rat {
        curve.weighted_order(&self.w1, &self.w2)
    }

    /// Value on a monomial ideal: the minimum over the generators.
    pub fn value_on_ideal(&self, ideal: &MonomialIdeal) -> Rat {
        ideal
            .gens()
            .iter()
            .map(|&(p, q)| {
                &self.w1 * Rat::from_integer(p.into()) + &self.w2 * Rat::from_integer(q.into())
            })
            .min()
            .expect("ideal has generators")
    }

    /// Value on the maximal ideal: the smaller weight.
    pub fn m_value(&self) -> Rat {
        self.w1.clone().min(self.w2.clone())
    }

    /// Volume: 1/(w1*w2).
    pub fn volume(&self) -> Rat {
        (&self.w1 * &self.w2).recip()
    }
}

/// Log discrepancy of the pair at the valuation:
/// w1 + w2 - sum a_i * v(f_i). For a quotient pair this is the log
/// discrepancy computed on the smooth cover, where monomial valuations live.
pub fn log_discrepancy(pair: &LogPair, v: &MonomialValuation) -> Rat {
    let mut a = &v.w1 + &v.w2;
    for e in pair.boundary() {
        a -= &e.coeff * v.value_on(&e.curve);
    }
    a
}

/// Log discrepancy of the ambient plane: w1 + w2.
pub fn ambient_log_discrepancy(v: &MonomialValuation) -> Rat {
    &v.w1 + &v.w2
}

/// Exact valuation data of a pair at one monomial valuation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationReport {
    pub logdisc: Rat,
    pub ambient_logdisc: Rat,
    pub vol: Rat,
    pub nvol: Rat,
}

/// Computes log discrepancy, volume, and normalized volume
/// A^2 * vol at one monomial valuation of a smooth-plane pair.
pub fn nvol_of(pair: &LogPair, v: &MonomialValuation) -> Result<ValuationReport> {
    let logdisc = log_discrepancy(pair, v);
    if !num_traits::Signed::is_positive(&logdisc) {
        return Err(Error::NonPositiveDiscrepancy);
    }
    let vol = v.volume();
    let nvol = &logdisc * &logdisc * &vol;
    Ok(ValuationReport {
        logdisc,
        ambient_logdisc: ambient_log_discrepancy(v),
        vol,
        nvol,
    })
}

/// Order comparison at a monomial valuation: checks
/// v(m)*ord(f) <= v(f) <= c2 * A(v) * ord(f), where ord is the order at the
/// origin and A the log discrepancy of the pair. The left inequality always
/// holds; c2 = 1 is sharp for empty boundary.
pub fn izumi_check(pair: &LogPair, v: &MonomialValuation, curve: &PlaneCurve, c2: &Rat) -> bool {
    let ord = int(curve.order_at_origin() as i64);
    let val = v.value_on(curve);
    let a = log_discrepancy(pair, v);
    let lower = v.m_value() * &ord;
    let upper = c2 * a * ord;
    lower <= val && val <= upper
}

/// Boundary-removal comparison at a monomial valuation: checks
/// A_pair >= gamma/(1+gamma) * A_ambient and the squared version
/// nvol_pair >= (gamma/(1+gamma))^2 * nvol_ambient, valid whenever the pair
/// with boundary scaled by 1+gamma still has nonnegative log discrepancy at v.
pub fn kill_boundary_check(pair: &LogPair, gamma: &Rat, v: &MonomialValuation) -> bool {
    let a_pair = log_discrepancy(pair, v);
    let a_amb = ambient_log_discrepancy(v);
    let factor = gamma / (gamma + int(1));
    if !num_traits::Signed::is_positive(&a_pair) {
        return false;
    }
    let linear = &a_pair >= &(&factor * &a_amb);
    let vol = v.volume();
    let nv_pair = &a_pair * &a_pair * &vol;
    let nv_amb = &a_amb * &a_amb * vol;
    let squared = nv_pair >= &factor * &factor * nv_amb;
    linear && squared
}

/// Properness witness: A(v) * v(m) / (w1*w2), the ratio between the
/// normalized volume and A(v) / v(m). For empty boundary it lies in (1, 2].
pub fn properness_ratio(pair: &LogPair, v: &MonomialValuation) -> Result<Rat> {
    let a = log_discrepancy(pair, v);
    if !num_traits::Signed::is_positive(&a) {
        return Err(Error::NonPositiveDiscrepancy);
    }
    Ok(a * v.m_value() * v.volume())
}
