//! Log pairs: an ambient germ (the smooth plane, or a cyclic quotient of it)
//! together with a boundary divisor sum a_i * div(f_i) with rational
//! coefficients strictly between zero and one and pairwise coprime curves.

use sha2::{Digest, Sha256};

use crate::curve::{curves_coprime, PlaneCurve};
use crate::error::{Error, Result};
use crate::quotient::CyclicQuotient;
use crate::rat::{rat_str, Rat};

/// The ambient surface germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ambient {
    /// The origin of the plane.
    SmoothPlane,
    /// The cyclic quotient singularity of type (1/r)(1, a).
    Quotient(CyclicQuotient),
}

impl Ambient {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Ambient::SmoothPlane)
    }

    pub fn label(&self) -> String {
        match self {
            Ambient::SmoothPlane => "A2".to_string(),
            Ambient::Quotient(q) => q.label(),
        }
    }
}

/// One boundary summand: coeff * div(curve).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryEntry {
    pub coeff: Rat,
    pub curve: PlaneCurve,
}

impl BoundaryEntry {
    pub fn new(coeff: Rat, curve: PlaneCurve) -> Self {
        BoundaryEntry { coeff, curve }
    }
}

/// A log pair (ambient, boundary).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogPair {
    ambient: Ambient,
    boundary: Vec<BoundaryEntry>,
}

impl LogPair {
    /// Validates and builds a pair: coefficients strictly in (0, 1), curves
    /// pairwise coprime, and curves invariant when the ambient is a quotient.
    pub fn new(ambient: Ambient, boundary: Vec<BoundaryEntry>) -> Result<Self> {
        let zero = Rat::from_integer(0.into());
        let one = Rat::from_integer(1.into());
        for e in &boundary {
            if e.coeff <= zero || e.coeff >= one {
                return Err(Error::CoefficientRange);
            }
        }
        for i in 0..boundary.len() {
            for j in (i + 1)..boundary.len() {
                if !curves_coprime(&boundary[i].curve, &boundary[j].curve) {
                    return Err(Error::NotCoprime);
                }
            }
        }
        if let Ambient::Quotient(q) = &ambient {
            for e in &boundary {
                if !q.is_invariant(&e.curve) {
                    return Err(Error::NotInvariant);
                }
            }
        }
        Ok(LogPair { ambient, boundary })
    }

    /// A pair on the smooth plane.
    pub fn smooth(boundary: Vec<BoundaryEntry>) -> Result<Self> {
        LogPair::new(Ambient::SmoothPlane, boundary)
    }

    /// The smooth plane with empty boundary.
    pub fn empty() -> Self {
        LogPair {
            ambient: Ambient::SmoothPlane,
            boundary: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn is_smooth_ambient(&self) -> bool {
        self.ambient.is_smooth()
    }

    pub fn boundary(&self) -> &[BoundaryEntry] {
        &self.boundary
    }

    /// The same boundary over the smooth plane (the cover of a quotient pair).
    pub fn cover(&self) -> LogPair {
        LogPair {
            ambient: Ambient::SmoothPlane,
            boundary: self.boundary.clone(),
        }
    }

    /// The pair with one coefficient replaced, revalidated.
    pub fn with_coeff(&self, index: usize, coeff: Rat) -> Result<LogPair> {
        let mut boundary = self.boundary.clone();
        boundary
            .get_mut(index)
            .ok_or_else(|| Error::InvalidArgument("boundary index out of range".into()))?
            .coeff = coeff;
        LogPair::new(self.ambient.clone(), boundary)
    }

    /// Short hex digest of the canonical text form, for report records.
    pub fn digest(&self) -> String {
        let mut text = self.ambient.label();
        for e in &self.boundary {
            text.push(';');
            text.push_str(&rat_str(&e.coeff));
            text.push('*');
            text.push_str(&e.curve.to_string());
        }
        let mut hasher = Sha256::new();
        hasher.update(text.as_bytes());
        let out = hasher.finalize();
        out[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}
