//! Kollar components from weighted blow-ups, K-semistability of the induced
//! divisor on the exceptional line, the exact minimizer of the normalized
//! volume over monomial valuations, and certified log canonical thresholds
//! of boundaries.
//!
//! The (m1, m2)-weighted blow-up of the plane at coprime positive integer
//! weights extracts one exceptional line E. Restricting the pair to E leaves
//! a divisor on P^1 supported on the two torus-fixed points and the branch
//! classes of the boundary curves:
//!
//!   d_1 = (m1 - 1 + sum_i a_i * r_(1,i)) / m1       at the point fixed by x,
//!   d_2 = (m2 - 1 + sum_i a_i * r_(2,i)) / m2       at the point fixed by y,
//!   d_class = sum_i e_(class,i) * a_i               at each branch class,
//!
//! where r_(1,i), r_(2,i) are the axis multiplicities of the initial form of
//! f_i and e_(class,i) its multiplicity along the class. The log discrepancy
//! satisfies the identity A = m1*m2*(2 - sum count*d), which is checked on
//! every call.
//!
//! Along the ray of weights (1, t) the log discrepancy A(t) of a klt pair is
//! a positive concave piecewise affine function and the normalized volume is
//! A(t)^2 / t; its exact minimum over all monomial valuations is attained at
//! a facet ray of some boundary Newton diagram or at a stationary point
//! t = alpha/beta of one affine piece A = alpha + beta*t, with value
//! 4*alpha*beta there. Minimizers are certified global among all valuations
//! exactly when the induced divisor on the exceptional line is
//! K-semistable.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::newton::{self, NewtonDiagram};
use crate::pair::{BoundaryEntry, LogPair};
use crate::rat::{int, to_u64, Rat};
use crate::valuation::MonomialValuation;

/// A class of points on the exceptional line sharing one coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    /// Number of points in the class.
    pub count: u32,
    /// Coefficient of the divisor at each point of the class.
    pub d: Rat,
}

/// The exceptional divisor of a weighted blow-up together with its different.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KollarComponent {
    weights: (u64, u64),
    different: Vec<PointClass>,
    ambient_a: Rat,
}

impl KollarComponent {
    pub fn weights(&self) -> (u64, u64) {
        self.weights
    }

    /// Classes of the different divisor on the exceptional line, all with
    /// coefficient strictly between zero and one.
    pub fn different(&self) -> &[PointClass] {
        &self.different
    }

    /// Log discrepancy of the pair at the blow-up valuation.
    pub fn log_discrepancy(&self) -> &Rat {
        &self.ambient_a
    }
}

/// A divisor on P^1 with coefficients strictly between zero and one,
/// grouped into point classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P1Divisor {
    classes: Vec<PointClass>,
}

impl P1Divisor {
    pub fn new(classes: Vec<PointClass>) -> Result<Self> {
        for c in &classes {
            if c.count == 0 {
                return Err(Error::InvalidArgument("empty point class".into()));
            }
            if !c.d.is_positive() || c.d >= Rat::one() {
                return Err(Error::CoefficientRange);
            }
        }
        Ok(P1Divisor { classes })
    }

    pub fn classes(&self) -> &[PointClass] {
        &self.classes
    }

    /// Total degree: sum of count * d.
    pub fn total_degree(&self) -> Rat {
        self.classes
            .iter()
            .map(|c| Rat::from_integer(c.count.into()) * &c.d)
            .fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Certificate returned by the normalized volume minimizer.
#[derive(Clone, Debug)]
pub struct NvolCertificate {
    /// The minimizing monomial valuation, with coprime integer weights.
    pub minimizer: MonomialValuation,
    /// The minimum of the normalized volume over monomial valuations
    /// (divided by the group order for quotient pairs).
    pub value: Rat,
    /// The Kollar component at the minimizer, when the blow-up is plt.
    pub kollar: Option<KollarComponent>,
    /// Whether the induced divisor on the exceptional line is K-semistable.
    pub kss: bool,
    /// Whether the minimum is certified global over all valuations.
    pub certified: bool,
}

/// Raw different data of a boundary at given weights, with no coefficient or
/// plt validation; used both by the public constructor and by the threshold
/// certifier, which feeds scaled coefficients.
fn different_classes(
    boundary: &[BoundaryEntry],
    m1: u64,
    m2: u64,
) -> Result<(Vec<PointClass>, Rat)> {
    let curves: Vec<&crate::curve::PlaneCurve> = boundary.iter().map(|e| &e.curve).collect();
    let refined = newton::refined_initial_forms(&curves, (m1, m2))?;
    let rm1 = Rat::from_integer(m1.into());
    let rm2 = Rat::from_integer(m2.into());
    let mut sum_axis_x = Rat::zero();
    let mut sum_axis_y = Rat::zero();
    for (i, e) in boundary.iter().enumerate() {
        sum_axis_x += &e.coeff * Rat::from_integer(refined.per_curve[i].axis_x_mult.into());
        sum_axis_y += &e.coeff * Rat::from_integer(refined.per_curve[i].axis_y_mult.into());
    }
    let d1 = (&rm1 - Rat::one() + sum_axis_y) / &rm1;
    let d2 = (&rm2 - Rat::one() + sum_axis_x) / &rm2;
    let mut classes: Vec<PointClass> = Vec::new();
    if d1.is_positive() {
        classes.push(PointClass { count: 1, d: d1 });
    }
    if d2.is_positive() {
        classes.push(PointClass { count: 1, d: d2 });
    }
    for cl in &refined.classes {
        let mut d = Rat::zero();
        for (i, e) in boundary.iter().enumerate() {
            d += &e.coeff * Rat::from_integer(cl.multiplicities[i].into());
        }
        if d.is_positive() {
            classes.push(PointClass {
                count: cl.degree,
                d,
            });
        }
    }
    let mut ambient_a = &rm1 + &rm2;
    for e in boundary {
        ambient_a -= &e.coeff * Rat::from_integer(e.curve.integer_weighted_order(m1, m2).into());
    }
    let total: Rat = classes
        .iter()
        .map(|c| Rat::from_integer(c.count.into()) * &c.d)
        .fold(Rat::zero(), |acc, x| acc + x);
    let expected = &rm1 * &rm2 * (int(2) - total);
    if ambient_a != expected {
        return Err(Error::InternalInconsistency(format!(
            "log discrepancy {ambient_a} does not match degree identity {expected}"
        )));
    }
    Ok((classes, ambient_a))
}

/// Computes the different divisor of the (m1, m2)-weighted blow-up of a
/// smooth-plane pair. Errors with NotPlt when some coefficient reaches one.
pub fn different_divisor(pair: &LogPair, weights: (u64, u64)) -> Result<KollarComponent> {
    if !pair.is_smooth_ambient() {
        return Err(Error::InvalidArgument(
            "weighted blow-ups are taken on the smooth plane".into(),
        ));
    }
    let (m1, m2) = weights;
    let (classes, ambient_a) = different_classes(pair.boundary(), m1, m2)?;
    if classes.iter().any(|c| c.d >= Rat::one()) {
        return Err(Error::NotPlt);
    }
    Ok(KollarComponent {
        weights,
        different: classes,
        ambient_a,
    })
}

/// Normalized volume of the pair at the blow-up valuation of the component:
/// A^2 / (m1 * m2).
pub fn nvol_of_kollar(kc: &KollarComponent) -> Rat {
    let (m1, m2) = kc.weights;
    &kc.ambient_a * &kc.ambient_a
        / (Rat::from_integer(m1.into()) * Rat::from_integer(m2.into()))
}

/// K-semistability of (P^1, divisor): every point coefficient d must satisfy
/// d <= (total degree) - d. Errors with NotLogFano when the total degree
/// reaches 2.
pub fn is_kss(divisor: &P1Divisor) -> Result<bool> {
    let total = divisor.total_degree();
    if total >= int(2) {
        return Err(Error::NotLogFano);
    }
    let ok = divisor.classes().iter().all(|c| {
        let spare = &total - &c.d;
        c.d <= spare
    });
    Ok(ok)
}

/// How far the component is from losing plt: min over classes of 1 - d,
/// equal to 1 for empty different.
pub fn delta_plt_grade(kc: &KollarComponent) -> Rat {
    kc.different
        .iter()
        .map(|c| Rat::one() - &c.d)
        .min()
        .unwrap_or_else(Rat::one)
}

/// Piecewise data of a pair along the monomial rays (1, t).
pub(crate) struct RayData {
    diagrams: Vec<NewtonDiagram>,
    coeffs: Vec<Rat>,
}

impl RayData {
    pub(crate) fn new(pair: &LogPair) -> Self {
        let diagrams = pair
            .boundary()
            .iter()
            .map(|e| newton::newton_diagram(&e.curve))
            .collect();
        let coeffs = pair.boundary().iter().map(|e| e.coeff.clone()).collect();
        RayData { diagrams, coeffs }
    }

    /// Union of facet ray parameters of all boundary diagrams, increasing.
    pub(crate) fn breakpoints(&self) -> Vec<Rat> {
        let mut t: Vec<Rat> = self
            .diagrams
            .iter()
            .flat_map(|d| d.breakpoints())
            .collect();
        t.sort();
        t.dedup();
        t
    }

    /// A(t) = 1 + t - sum a_i * phi_i(t).
    pub(crate) fn a_at(&self, t: &Rat) -> Rat {
        let mut a = Rat::one() + t;
        for (d, c) in self.diagrams.iter().zip(&self.coeffs) {
            a -= c * d.weighted_order(&Rat::one(), t);
        }
        a
    }

    /// sum a_i * phi_i(t): the boundary part of the ray log discrepancy.
    pub(crate) fn psi_at(&self, t: &Rat) -> Rat {
        let mut s = Rat::zero();
        for (d, c) in self.diagrams.iter().zip(&self.coeffs) {
            s += c * d.weighted_order(&Rat::one(), t);
        }
        s
    }

    /// Affine coefficients (alpha, beta) with A = alpha + beta*t on the piece
    /// containing the sample ray (which must avoid breakpoints).
    pub(crate) fn affine_at(&self, sample: &Rat) -> (Rat, Rat) {
        let mut alpha = Rat::one();
        let mut beta = Rat::one();
        for (d, c) in self.diagrams.iter().zip(&self.coeffs) {
            let (p, q) = d.active_vertex(sample);
            alpha -= c * Rat::from_integer(p.into());
            beta -= c * Rat::from_integer(q.into());
        }
        (alpha, beta)
    }

    /// Limit coefficient of A toward the y-axis ray: 1 - sum a_i * min_p_i.
    pub(crate) fn alpha_end(&self) -> Rat {
        let mut a = Rat::one();
        for (d, c) in self.diagrams.iter().zip(&self.coeffs) {
            a -= c * Rat::from_integer(d.min_p().into());
        }
        a
    }

    /// Limit slope of A toward the x-axis ray: 1 - sum a_i * min_q_i.
    pub(crate) fn beta_end(&self) -> Rat {
        let mut b = Rat::one();
        for (d, c) in self.diagrams.iter().zip(&self.coeffs) {
            b -= c * Rat::from_integer(d.min_q().into());
        }
        b
    }

    /// Boundary multiplicity along div(x): sum a_i * min_p_i.
    pub(crate) fn psi_alpha_end(&self) -> Rat {
        Rat::one() - self.alpha_end()
    }

    /// Boundary multiplicity along div(y): sum a_i * min_q_i.
    pub(crate) fn psi_beta_end(&self) -> Rat {
        Rat::one() - self.beta_end()
    }

    /// Sample rays, one in the interior of each affine piece.
    pub(crate) fn piece_samples(&self, breaks: &[Rat]) -> Vec<Rat> {
        if breaks.is_empty() {
            return vec![Rat::one()];
        }
        let mut samples = Vec::with_capacity(breaks.len() + 1);
        samples.push(&breaks[0] / int(2));
        for w in breaks.windows(2) {
            samples.push((&w[0] + &w[1]) / int(2));
        }
        samples.push(breaks.last().unwrap() + Rat::one());
        samples
    }

    /// Rejects pairs that fail the klt screen on the monomial rays: the end
    /// coefficients must be positive and A must be positive at every
    /// breakpoint.
    pub(crate) fn klt_screen(&self) -> Result<()> {
        if !self.alpha_end().is_positive() || !self.beta_end().is_positive() {
            return Err(Error::NotKltOnMonomialRays);
        }
        for t in self.breakpoints() {
            if !self.a_at(&t).is_positive() {
                return Err(Error::NotKltOnMonomialRays);
            }
        }
        Ok(())
    }
}

/// Converts a ray parameter t = m2/m1 in lowest terms to the coprime integer
/// weight pair (m1, m2).
fn ray_to_weights(t: &Rat) -> Result<(u64, u64)> {
    Ok((to_u64(t.denom())?, to_u64(t.numer())?))
}

/// Exact minimizer of the normalized volume over the monomial valuations of
/// a smooth-plane pair.
///
/// Ties between minimizing rays are broken by smallest m1 + m2, then
/// smallest m1. The certificate carries the Kollar component at the
/// minimizer when its blow-up is plt, the K-semistability of its different,
/// and certified = kss: the minimum is global over all valuations exactly
/// when the different is K-semistable.
pub fn minimize_nvol(pair: &LogPair) -> Result<NvolCertificate> {
    if !pair.is_smooth_ambient() {
        return Err(Error::InvalidArgument(
            "monomial minimization runs on the smooth plane; quotient pairs go through quotient_nvol".into(),
        ));
    }
    let rd = RayData::new(pair);
    rd.klt_screen()?;
    let breaks = rd.breakpoints();
    let mut candidates: Vec<(Rat, Rat)> = Vec::new();
    for t in &breaks {
        let a = rd.a_at(t);
        candidates.push((t.clone(), &a * &a / t));
    }
    let samples = rd.piece_samples(&breaks);
    for (i, sample) in samples.iter().enumerate() {
        let (alpha, beta) = rd.affine_at(sample);
        if alpha.is_positive() && beta.is_positive() {
            let t_star = &alpha / &beta;
            let lo_ok = if i == 0 {
                true
            } else {
                t_star > breaks[i - 1]
            };
            let hi_ok = if i == breaks.len() {
                true
            } else {
                t_star < breaks[i]
            };
            if lo_ok && hi_ok {
                candidates.push((t_star, int(4) * alpha * beta));
            }
        }
    }
    let best_value = candidates
        .iter()
        .map(|(_, v)| v.clone())
        .min()
        .ok_or_else(|| Error::InternalInconsistency("no candidate rays".into()))?;
    let mut best: Option<(u64, u64)> = None;
    for (t, v) in &candidates {
        if *v != best_value {
            continue;
        }
        let (m1, m2) = ray_to_weights(t)?;
        let better = match best {
            None => true,
            Some((b1, b2)) => (m1 + m2, m1) < (b1 + b2, b1),
        };
        if better {
            best = Some((m1, m2));
        }
    }
    let (m1, m2) = best.expect("at least one candidate");
    let minimizer = MonomialValuation::from_integers(m1, m2)?;
    let (kollar, kss) = match different_divisor(pair, (m1, m2)) {
        Ok(kc) => {
            let check = nvol_of_kollar(&kc);
            if check != best_value {
                return Err(Error::InternalInconsistency(format!(
                    "component value {check} does not match ray minimum {best_value}"
                )));
            }
            let kss = is_kss(&P1Divisor::new(kc.different().to_vec())?)?;
            (Some(kc), kss)
        }
        Err(Error::NotPlt) => (None, false),
        Err(e) => return Err(e),
    };
    Ok(NvolCertificate {
        minimizer,
        value: best_value,
        kollar,
        kss,
        certified: kss,
    })
}

/// Certified log canonical threshold of the boundary of a smooth-plane pair:
/// the largest s with (plane, boundary + s * boundary-divisor) log canonical,
/// computed as the minimum over monomial rays and axis limits of
/// A_pair(t) / psi(t).
///
/// The result is certified when either the minimum is attained at an interior
/// ray whose (1+s)-scaled different has every coefficient at most one (so
/// adjunction propagates log canonicity from the exceptional line), or the
/// minimum is attained only in the axis limits and the whole boundary is
/// monomial (the toric case). Otherwise the returned threshold is an upper
/// bound and certified is false.
pub fn certified_lct_of_boundary(pair: &LogPair) -> Result<(Rat, bool)> {
    if !pair.is_smooth_ambient() {
        return Err(Error::InvalidArgument(
            "boundary thresholds are computed on the smooth plane".into(),
        ));
    }
    if pair.boundary().is_empty() {
        return Err(Error::InvalidArgument(
            "threshold of an empty boundary is undefined".into(),
        ));
    }
    let rd = RayData::new(pair);
    rd.klt_screen()?;
    let mut interior: Vec<(Rat, Rat)> = Vec::new();
    for t in rd.breakpoints() {
        let s = rd.a_at(&t) / rd.psi_at(&t);
        interior.push((t, s));
    }
    let mut end_values: Vec<Rat> = Vec::new();
    let psi_a = rd.psi_alpha_end();
    if psi_a.is_positive() {
        end_values.push(rd.alpha_end() / psi_a);
    }
    let psi_b = rd.psi_beta_end();
    if psi_b.is_positive() {
        end_values.push(rd.beta_end() / psi_b);
    }
    let s_min = interior
        .iter()
        .map(|(_, s)| s.clone())
        .chain(end_values.iter().cloned())
        .min()
        .ok_or(Error::NotKlt)?;
    let all_monomial = pair.boundary().iter().all(|e| e.curve.is_monomial());
    let mut certified = all_monomial;
    if !certified {
        let attained: Vec<&Rat> = interior
            .iter()
            .filter(|(_, s)| *s == s_min)
            .map(|(t, _)| t)
            .collect();
        if let Some(t) = attained.first() {
            let (m1, m2) = ray_to_weights(t)?;
            let scale = Rat::one() + &s_min;
            let scaled: Vec<BoundaryEntry> = pair
                .boundary()
                .iter()
                .map(|e| BoundaryEntry::new(&e.coeff * &scale, e.curve.clone()))
                .collect();
            let (classes, ambient_a) = different_classes(&scaled, m1, m2)?;
            if !ambient_a.is_zero() {
                return Err(Error::InternalInconsistency(
                    "scaled pair has nonzero log discrepancy at the attaining ray".into(),
                ));
            }
            certified = classes.iter().all(|c| c.d <= Rat::one());
        }
    }
    Ok((s_min, certified))
}

/// Normalized volume of the orbifold cone over (P^1, divisor) with a
/// polarization of rational index r: (2 - total degree) / r, defined when
/// the base divisor is K-semistable.
pub fn cone_nvol(base: &P1Divisor, r: &Rat) -> Result<Rat> {
    if !r.is_positive() {
        return Err(Error::InvalidArgument(
            "polarization index must be positive".into(),
        ));
    }
    if !is_kss(base)? {
        return Err(Error::NotKss);
    }
    Ok((int(2) - base.total_degree()) / r)
}
