//! Cyclic quotient surface singularities (1/r)(1, a) and their local
//! volumes.
//!
//! The group Z/r acts on the plane by (x, y) -> (zeta*x, zeta^a*y). Monomial
//! valuations are insensitive to the action, so the normalized volume of a
//! quotient pair is the cover value divided by the group order r. The smooth
//! point (r = 1) and the A_m points (1/(m+1))(1, m) are special cases.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::kollar::{minimize_nvol, NvolCertificate};
use crate::pair::{BoundaryEntry, LogPair};
use crate::rat::{int, Rat};

/// The cyclic quotient singularity of type (1/r)(1, a).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CyclicQuotient {
    r: u64,
    a: u64,
}

impl CyclicQuotient {
    /// Requires r >= 1 and, for r > 1, 1 <= a < r with gcd(a, r) = 1;
    /// the smooth point is (r, a) = (1, 0).
    pub fn new(r: u64, a: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("group order must be positive".into()));
        }
        if r == 1 {
            if a != 0 {
                return Err(Error::InvalidArgument(
                    "the trivial group has weight 0".into(),
                ));
            }
        } else {
            if a == 0 || a >= r {
                return Err(Error::InvalidArgument(format!(
                    "weight {a} must lie in 1..{r}"
                )));
            }
            if a.gcd(&r) != 1 {
                return Err(Error::InvalidArgument(format!(
                    "weight {a} is not coprime to the order {r}"
                )));
            }
        }
        Ok(CyclicQuotient { r, a })
    }

    /// The smooth point, as the trivial quotient.
    pub fn smooth() -> Self {
        CyclicQuotient { r: 1, a: 0 }
    }

    /// The A_m singularity (1/(m+1))(1, m); m = 0 is the smooth point.
    pub fn a_m(m: u64) -> Self {
        if m == 0 {
            CyclicQuotient::smooth()
        } else {
            CyclicQuotient { r: m + 1, a: m }
        }
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn label(&self) -> String {
        format!("Q({},{})", self.r, self.a)
    }

    /// Parses the label form `Q(r,a)`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix("Q(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected Q(r,a), got {s:?}")))?;
        let (rs, as_) = body
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected Q(r,a), got {s:?}")))?;
        let r: u64 = rs
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad group order in {s:?}")))?;
        let a: u64 = as_
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad weight in {s:?}")))?;
        CyclicQuotient::new(r, a)
    }

    /// Whether a curve is invariant: all support terms share the same
    /// character p + a*q mod r.
    pub fn is_invariant(&self, curve: &crate::curve::PlaneCurve) -> bool {
        if self.r == 1 {
            return true;
        }
        let mut character: Option<u64> = None;
        for &(p, q) in curve.support() {
            let r = self.r as u128;
            let c = ((p as u128 % r + self.a as u128 * (q as u128 % r) % r) % r) as u64;
            match &character {
                None => character = Some(c),
                Some(prev) => {
                    if *prev != c {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Normalized volume certificate of a quotient pair: the monomial minimum of
/// the cover pair divided by the group order. The minimizer and component
/// data describe the cover; only the value is scaled.
pub fn quotient_nvol(q: &CyclicQuotient, boundary: &[BoundaryEntry]) -> Result<NvolCertificate> {
    for e in boundary {
        if !q.is_invariant(&e.curve) {
            return Err(Error::NotInvariant);
        }
    }
    let cover = LogPair::smooth(boundary.to_vec())?;
    let mut cert = minimize_nvol(&cover)?;
    cert.value = cert.value / Rat::from_integer(q.r.into());
    Ok(cert)
}

/// Largest group order compatible with local volume at least eps: the
/// greatest integer strictly below 4/eps. Requires 0 < eps <= 4.
pub fn group_order_bound(eps: &Rat) -> Result<u64> {
    use num_traits::Signed;
    if !eps.is_positive() || eps > &int(4) {
        return Err(Error::InvalidArgument(
            "threshold must lie in (0, 4]".into(),
        ));
    }
    let q = int(4) / eps;
    let bound = q.ceil().to_integer() - 1;
    u64::try_from(&bound)
        .map_err(|_| Error::InvalidArgument("threshold too small".into()))
}

/// All cyclic quotients (including the smooth point) with empty-boundary
/// local volume strictly above eps, with their exact volumes 4/r, ordered by
/// (r, a).
pub fn enumerate_quotients_with_nvol_above(eps: &Rat) -> Result<Vec<(CyclicQuotient, Rat)>> {
    let bound = group_order_bound(eps)?;
    let mut out = Vec::new();
    for r in 1..=bound {
        let weights: Vec<u64> = if r == 1 {
            vec![0]
        } else {
            (1..r).filter(|a| a.gcd(&r) == 1).collect()
        };
        for a in weights {
            let q = CyclicQuotient::new(r, a)?;
            let cert = quotient_nvol(&q, &[])?;
            let expected = Rat::new(4.into(), r.into());
            if cert.value != expected {
                return Err(Error::InternalInconsistency(format!(
                    "empty-boundary volume of {} is {}, expected {}",
                    q.label(),
                    cert.value,
                    expected
                )));
            }
            if &cert.value > eps {
                out.push((q, cert.value));
            }
        }
    }
    Ok(out)
}
