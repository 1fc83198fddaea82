//! Newton diagrams of plane curve germs and the initial forms of curves
//! along a monomial ray.
//!
//! The diagram of a germ is the lower-left boundary of the convex hull of
//! support + (nonnegative quadrant). Its vertices are stored with strictly
//! decreasing x-exponent; each facet carries a primitive inward normal
//! (u, v), so the facet lies on u*p + v*q = value. The ray parameter t of a
//! facet is v/u: the monomial valuation with weights (1, t) computes its
//! minimum exactly on that facet.
//!
//! The initial form of a germ at coprime integer weights (m1, m2) is the sum
//! of the support terms minimizing p*m1 + q*m2. After pulling off the powers
//! of the two axis coordinates it becomes a one-variable polynomial P of
//! degree equal to the lattice length of the contact edge, with P(0) nonzero;
//! its squarefree factors name the branch classes the curve cuts on the
//! exceptional line of the (m1, m2)-weighted blow-up.

use num_integer::Integer;

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::poly::{self, UniPoly};
use crate::rat::Rat;

/// One facet of a Newton diagram: points (p, q) with u*p + v*q = value,
/// where (u, v) is the primitive inward normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: (u64, u64),
    pub value: u64,
}

/// Newton diagram: hull vertices with strictly decreasing x-exponent and the
/// facets joining consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonDiagram {
    vertices: Vec<(u32, u32)>,
    facets: Vec<Facet>,
}

/// Keeps the minimal points of the product partial order, sorted with
/// strictly decreasing p (hence strictly increasing q).
pub(crate) fn antichain(points: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut sorted: Vec<(u32, u32)> = points.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut best_q: Option<u32> = None;
    let mut keep: Vec<(u32, u32)> = Vec::new();
    let mut idx = 0usize;
    while idx < sorted.len() {
        let p = sorted[idx].0;
        let qmin = sorted[idx].1;
        if best_q.map_or(true, |b| qmin < b) {
            keep.push((p, qmin));
            best_q = Some(qmin);
        }
        while idx < sorted.len() && sorted[idx].0 == p {
            idx += 1;
        }
    }
    keep.reverse();
    keep
}

/// Lower-left convex hull of an antichain sorted with decreasing p.
pub(crate) fn lower_hull(chain: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut hull: Vec<(u32, u32)> = Vec::new();
    for &pt in chain {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let dp1 = (a.0 - b.0) as u64;
            let dq1 = (b.1 - a.1) as u64;
            let dp2 = (b.0 - pt.0) as u64;
            let dq2 = (pt.1 - b.1) as u64;
            if dp1 * dq2 <= dp2 * dq1 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

fn facets_of_hull(hull: &[(u32, u32)]) -> Vec<Facet> {
    hull.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let dp = (a.0 - b.0) as u64;
            let dq = (b.1 - a.1) as u64;
            let g = dp.gcd(&dq);
            let (u, v) = (dq / g, dp / g);
            Facet {
                normal: (u, v),
                value: u * a.0 as u64 + v * a.1 as u64,
            }
        })
        .collect()
}

/// Builds the Newton diagram of a germ.
pub fn newton_diagram(curve: &PlaneCurve) -> NewtonDiagram {
    let pts: Vec<(u32, u32)> = curve.support().copied().collect();
    let chain = antichain(&pts);
    let vertices = lower_hull(&chain);
    let facets = facets_of_hull(&vertices);
    NewtonDiagram { vertices, facets }
}

impl NewtonDiagram {
    pub fn vertices(&self) -> &[(u32, u32)] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// min over the diagram of p*w1 + q*w2; equals the weighted order of the
    /// underlying germ.
    pub fn weighted_order(&self, w1: &Rat, w2: &Rat) -> Rat {
        self.vertices
            .iter()
            .map(|&(p, q)| w1 * Rat::from_integer(p.into()) + w2 * Rat::from_integer(q.into()))
            .min()
            .expect("diagram has at least one vertex")
    }

    /// Facet ray parameters t = v/u in increasing order.
    pub fn breakpoints(&self) -> Vec<Rat> {
        let mut t: Vec<Rat> = self
            .facets
            .iter()
            .map(|f| Rat::new(f.normal.1.into(), f.normal.0.into()))
            .collect();
        t.reverse();
        t
    }

    /// The vertex minimizing p + q*t; among ties, the one with largest p.
    pub fn active_vertex(&self, t: &Rat) -> (u32, u32) {
        let mut best = self.vertices[0];
        let mut best_val =
            Rat::from_integer(best.0.into()) + t * Rat::from_integer(best.1.into());
        for &(p, q) in &self.vertices[1..] {
            let val = Rat::from_integer(p.into()) + t * Rat::from_integer(q.into());
            if val < best_val {
                best = (p, q);
                best_val = val;
            }
        }
        best
    }

    /// Smallest x-exponent on the diagram.
    pub fn min_p(&self) -> u32 {
        self.vertices.last().expect("nonempty").0
    }

    /// Smallest y-exponent on the diagram.
    pub fn min_q(&self) -> u32 {
        self.vertices.first().expect("nonempty").1
    }
}

/// One branch class cut by a curve on the exceptional line: a monic
/// squarefree factor of the dehomogenized initial form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialFactor {
    /// Degree of the factor: the number of exceptional points in the class.
    pub degree: u32,
    /// Multiplicity of the factor in the initial form.
    pub multiplicity: u32,
    /// The factor itself, shared across curves after refinement.
    pub id: UniPoly,
}

/// Initial form data of one germ at coprime weights (m1, m2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialFormFactorization {
    /// Multiplicity of the x = 0 axis in the initial form.
    pub axis_x_mult: u32,
    /// Multiplicity of the y = 0 axis in the initial form.
    pub axis_y_mult: u32,
    /// Branch classes away from the torus-fixed points.
    pub factors: Vec<InitialFactor>,
}

impl InitialFormFactorization {
    /// Lattice length of the contact edge: sum of degree * multiplicity.
    pub fn edge_length(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.degree as u64 * f.multiplicity as u64)
            .sum()
    }
}

/// A pairwise coprime branch class shared by a family of germs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorClass {
    pub degree: u32,
    pub id: UniPoly,
    /// Multiplicity of the class in each germ of the family.
    pub multiplicities: Vec<u32>,
}

/// Initial form data of a family of germs at shared weights, with the branch
/// classes refined to a common pairwise coprime basis.
#[derive(Clone, Debug)]
pub struct RefinedInitialForms {
    pub per_curve: Vec<InitialFormFactorization>,
    pub classes: Vec<FactorClass>,
}

fn check_weights(m1: u64, m2: u64) -> Result<()> {
    if m1 == 0 || m2 == 0 {
        return Err(Error::InvalidArgument("weights must be positive".into()));
    }
    if m1.gcd(&m2) != 1 {
        return Err(Error::InvalidArgument(format!(
            "weights ({m1}, {m2}) are not coprime"
        )));
    }
    Ok(())
}

/// Axis multiplicities and dehomogenized initial form of a germ at (m1, m2).
fn initial_parts(curve: &PlaneCurve, m1: u64, m2: u64) -> (u32, u32, UniPoly) {
    let mu = curve.integer_weighted_order(m1, m2);
    let edge: Vec<((u32, u32), Rat)> = curve
        .terms()
        .filter(|(&(p, q), _)| p as u128 * m1 as u128 + q as u128 * m2 as u128 == mu)
        .map(|(e, c)| (*e, c.clone()))
        .collect();
    let p_min = edge.iter().map(|&((p, _), _)| p).min().unwrap();
    let q_min = edge.iter().map(|&((_, q), _)| q).min().unwrap();
    let p_max = edge.iter().map(|&((p, _), _)| p).max().unwrap();
    debug_assert_eq!((p_max - p_min) as u64 % m2, 0);
    let len = ((p_max - p_min) as u64 / m2) as usize;
    let mut coeffs = vec![Rat::from_integer(0.into()); len + 1];
    for ((p, _), c) in edge {
        let j = ((p - p_min) as u64 / m2) as usize;
        coeffs[j] = c;
    }
    (p_min, q_min, UniPoly::from_coeffs(coeffs))
}

/// Computes the initial form factorization of one germ at coprime weights.
pub fn initial_form_factorization(
    curve: &PlaneCurve,
    weights: (u64, u64),
) -> Result<InitialFormFactorization> {
    let (m1, m2) = weights;
    check_weights(m1, m2)?;
    let (axis_x_mult, axis_y_mult, p) = initial_parts(curve, m1, m2);
    let factors = poly::squarefree_decomposition(&p)
        .into_iter()
        .map(|(g, e)| InitialFactor {
            degree: g.degree() as u32,
            multiplicity: e,
            id: g,
        })
        .collect();
    let out = InitialFormFactorization {
        axis_x_mult,
        axis_y_mult,
        factors,
    };
    if out.edge_length() != p.degree() as u64 {
        return Err(Error::InternalInconsistency(
            "squarefree factor degrees do not sum to the edge length".into(),
        ));
    }
    Ok(out)
}

/// Computes initial forms for a family of germs at shared weights and refines
/// all branch classes to one pairwise coprime basis, so equal classes of
/// different germs carry the same id.
pub fn refined_initial_forms(
    curves: &[&PlaneCurve],
    weights: (u64, u64),
) -> Result<RefinedInitialForms> {
    let (m1, m2) = weights;
    check_weights(m1, m2)?;
    let mut axes: Vec<(u32, u32)> = Vec::with_capacity(curves.len());
    let mut decomps: Vec<Vec<(UniPoly, u32)>> = Vec::with_capacity(curves.len());
    let mut edge_lengths: Vec<u64> = Vec::with_capacity(curves.len());
    for c in curves {
        let (px, qy, p) = initial_parts(c, m1, m2);
        axes.push((px, qy));
        edge_lengths.push(p.degree() as u64);
        decomps.push(poly::squarefree_decomposition(&p));
    }
    let basis = poly::gcd_free_refine(&decomps);
    let classes: Vec<FactorClass> = basis
        .into_iter()
        .map(|rf| FactorClass {
            degree: rf.poly.degree() as u32,
            id: rf.poly,
            multiplicities: rf.mults,
        })
        .collect();
    let per_curve: Vec<InitialFormFactorization> = (0..curves.len())
        .map(|i| InitialFormFactorization {
            axis_x_mult: axes[i].0,
            axis_y_mult: axes[i].1,
            factors: classes
                .iter()
                .filter(|cl| cl.multiplicities[i] > 0)
                .map(|cl| InitialFactor {
                    degree: cl.degree,
                    multiplicity: cl.multiplicities[i],
                    id: cl.id.clone(),
                })
                .collect(),
        })
        .collect();
    for (i, f) in per_curve.iter().enumerate() {
        if f.edge_length() != edge_lengths[i] {
            return Err(Error::InternalInconsistency(
                "refined factor degrees do not sum to the edge length".into(),
            ));
        }
    }
    Ok(RefinedInitialForms { per_curve, classes })
}
