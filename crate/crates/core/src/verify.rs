//! Theorem-level verification suites: batch checks over deterministic
//! instance corpora with machine-readable reports.
//!
//! Every check consumes exact data and produces a TheoremReport: one record
//! per checked comparison (digest of the inputs, both sides, outcome) plus a
//! summary with pass/fail/skip counts and a worst observed margin where the
//! check has a natural extremal witness.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::ideal::{lct_ideal, valuation_ideal, MonomialIdeal};
use crate::kollar::{certified_lct_of_boundary, delta_plt_grade, minimize_nvol};
use crate::pair::{Ambient, BoundaryEntry, LogPair};
use crate::quotient::{quotient_nvol, CyclicQuotient};
use crate::rat::{int, rat, Rat};
use crate::valuation::{nvol_of, MonomialValuation};

/// Shape of the generated boundaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusShape {
    /// Boundaries of single monomial curves only.
    MonomialOnly,
    /// Monomials and binomial curves, possibly combined.
    Mixed,
    /// One curve per instance: a binomial plus higher-order tail terms.
    SingleCurveWithTails,
}

/// Generator parameters; a corpus regenerates deterministically from these.
#[derive(Clone, Debug)]
pub struct CorpusParams {
    pub count: usize,
    pub seed: u64,
    pub box_bound: u32,
    pub coeff_pool: Vec<Rat>,
    pub shape: CorpusShape,
}

impl CorpusParams {
    pub fn new(shape: CorpusShape, count: usize, seed: u64) -> Self {
        CorpusParams {
            count,
            seed,
            box_bound: 4,
            coeff_pool: vec![
                rat(1, 2),
                rat(1, 3),
                rat(2, 3),
                rat(1, 4),
                rat(3, 4),
                rat(5, 8),
                rat(1, 6),
                rat(5, 6),
                rat(3, 8),
            ],
            shape,
        }
    }
}

/// A deterministic list of certifiable instances with its provenance.
#[derive(Clone, Debug)]
pub struct InstanceCorpus {
    pub instances: Vec<LogPair>,
    pub params: CorpusParams,
}

/// One checked comparison.
#[derive(Clone, Debug)]
pub struct InstanceRecord {
    pub digest: String,
    pub lhs: Rat,
    pub rhs: Rat,
    pub ok: bool,
    pub skipped: bool,
}

impl InstanceRecord {
    fn checked(digest: String, lhs: Rat, rhs: Rat, ok: bool) -> Self {
        InstanceRecord {
            digest,
            lhs,
            rhs,
            ok,
            skipped: false,
        }
    }

    fn skip(digest: String) -> Self {
        InstanceRecord {
            digest,
            lhs: Rat::zero(),
            rhs: Rat::zero(),
            ok: true,
            skipped: true,
        }
    }
}

/// Pass/fail/skip counts and the extremal witness of a report.
#[derive(Clone, Debug)]
pub struct ReportSummary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub worst_margin: Option<Rat>,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub records: Vec<InstanceRecord>,
    pub summary: ReportSummary,
}

impl TheoremReport {
    pub fn new(theorem_id: &str, records: Vec<InstanceRecord>, worst_margin: Option<Rat>) -> Self {
        let passed = records.iter().filter(|r| !r.skipped && r.ok).count();
        let failed = records.iter().filter(|r| !r.skipped && !r.ok).count();
        let skipped = records.iter().filter(|r| r.skipped).count();
        TheoremReport {
            theorem_id: theorem_id.to_string(),
            records,
            summary: ReportSummary {
                passed,
                failed,
                skipped,
                worst_margin,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

fn pool_coeff(rng: &mut ChaCha8Rng, pool: &[Rat]) -> Rat {
    pool[rng.random_range(0..pool.len())].clone()
}

fn monomial_boundary(rng: &mut ChaCha8Rng, params: &CorpusParams) -> Option<Vec<PlaneCurve>> {
    let bx = params.box_bound.max(1);
    match rng.random_range(0..4u32) {
        0 => Some(vec![PlaneCurve::monomial(rng.random_range(1..=bx), 0).ok()?]),
        1 => Some(vec![PlaneCurve::monomial(0, rng.random_range(1..=bx)).ok()?]),
        2 => Some(vec![
            PlaneCurve::monomial(rng.random_range(1..=bx), 0).ok()?,
            PlaneCurve::monomial(0, rng.random_range(1..=bx)).ok()?,
        ]),
        _ => Some(vec![PlaneCurve::monomial(
            rng.random_range(1..=bx),
            rng.random_range(1..=bx),
        )
        .ok()?]),
    }
}

fn binomial_curve(rng: &mut ChaCha8Rng, params: &CorpusParams) -> Option<PlaneCurve> {
    let bx = params.box_bound.max(2);
    if rng.random_range(0..10u32) < 7 {
        let u = rng.random_range(2..=bx + 1);
        let v = rng.random_range(2..=bx + 1);
        let c = match rng.random_range(0..4u32) {
            0 => int(1),
            1 => int(-1),
            2 => int(2),
            _ => rat(-1, 2),
        };
        PlaneCurve::new([((u, 0), Rat::one()), ((0, v), c)]).ok()
    } else {
        let e1 = (rng.random_range(0..=bx + 1), rng.random_range(0..=bx + 1));
        let e2 = (rng.random_range(0..=bx + 1), rng.random_range(0..=bx + 1));
        if e1 == e2 {
            return None;
        }
        PlaneCurve::new([(e1, Rat::one()), (e2, int(if rng.random_range(0..2u32) == 0 { 1 } else { -1 }))]).ok()
    }
}

fn tail_curve(rng: &mut ChaCha8Rng) -> Option<PlaneCurve> {
    let u = rng.random_range(2..=4u32);
    let v = rng.random_range(2..=5u32);
    let mut terms: Vec<((u32, u32), Rat)> = vec![((u, 0), Rat::one()), ((0, v), int(-1))];
    let base = u.max(v);
    let tails = rng.random_range(1..=3u32);
    for _ in 0..tails {
        let total = rng.random_range(base + 1..=base + 6);
        let p = rng.random_range(0..=total);
        let q = total - p;
        let c = match rng.random_range(0..6u32) {
            0 => int(1),
            1 => int(-1),
            2 => int(2),
            3 => int(-2),
            4 => rat(1, 2),
            _ => int(3),
        };
        terms.push(((p, q), c));
    }
    PlaneCurve::new(terms).ok()
}

fn draw_boundary(rng: &mut ChaCha8Rng, params: &CorpusParams) -> Option<Vec<PlaneCurve>> {
    match params.shape {
        CorpusShape::MonomialOnly => monomial_boundary(rng, params),
        CorpusShape::SingleCurveWithTails => Some(vec![tail_curve(rng)?]),
        CorpusShape::Mixed => match rng.random_range(0..6u32) {
            0 | 1 => monomial_boundary(rng, params),
            2 | 3 => Some(vec![binomial_curve(rng, params)?]),
            4 => {
                let b = binomial_curve(rng, params)?;
                let m = if rng.random_range(0..2u32) == 0 {
                    PlaneCurve::monomial(rng.random_range(1..=2u32), 0).ok()?
                } else {
                    PlaneCurve::monomial(0, rng.random_range(1..=2u32)).ok()?
                };
                Some(vec![b, m])
            }
            _ => Some(vec![binomial_curve(rng, params)?]),
        },
    }
}

fn certifiable(pair: &LogPair) -> Result<bool> {
    let cert = match minimize_nvol(pair) {
        Ok(c) => c,
        Err(Error::InternalInconsistency(msg)) => {
            return Err(Error::InternalInconsistency(msg))
        }
        Err(_) => return Ok(false),
    };
    if !cert.certified {
        return Ok(false);
    }
    if pair.boundary().is_empty() {
        return Ok(true);
    }
    match certified_lct_of_boundary(pair) {
        Ok((_, certified)) => Ok(certified),
        Err(Error::InternalInconsistency(msg)) => Err(Error::InternalInconsistency(msg)),
        Err(_) => Ok(false),
    }
}

/// Draws instances until `count` certifiable ones are found.
///
/// Certifiability is decided by the optimizer and threshold certifier, never
/// by the checks the corpus will feed, so rejection cannot mask a defect.
pub fn certifiable_corpus(params: CorpusParams) -> Result<InstanceCorpus> {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut instances: Vec<LogPair> = Vec::with_capacity(params.count);
    let mut attempts = 0usize;
    let cap = 4000 * (params.count + 10);
    while instances.len() < params.count {
        attempts += 1;
        if attempts > cap {
            return Err(Error::InternalInconsistency(format!(
                "corpus generator rejected too many candidates ({attempts})"
            )));
        }
        let Some(curves) = draw_boundary(&mut rng, &params) else {
            continue;
        };
        let entries: Vec<BoundaryEntry> = curves
            .into_iter()
            .map(|c| BoundaryEntry::new(pool_coeff(&mut rng, &params.coeff_pool), c))
            .collect();
        let Ok(pair) = LogPair::smooth(entries) else {
            continue;
        };
        if certifiable(&pair)? {
            instances.push(pair);
        }
    }
    Ok(InstanceCorpus { instances, params })
}

/// The cusp family pair: coefficient (1-eps)*(2k-1)/(k*(k-1)) on the curve
/// x^(k-1) - y^k.
pub fn dk_pair(k: u32, eps: &Rat) -> Result<LogPair> {
    if k < 2 {
        return Err(Error::InvalidArgument("family needs k >= 2".into()));
    }
    let curve = PlaneCurve::new([((k - 1, 0), Rat::one()), ((0, k), int(-1))])?;
    let coeff = (Rat::one() - eps) * int(2 * k as i64 - 1)
        / (int(k as i64) * int(k as i64 - 1));
    LogPair::smooth(vec![BoundaryEntry::new(coeff, curve)])
}

/// Checks 8*lct >= nvol on every instance: records lhs = nvol, rhs = 8*lct.
/// The worst margin is the largest observed ratio nvol/lct.
pub fn check_surface_lct_bound(corpus: &InstanceCorpus) -> TheoremReport {
    let results: Vec<(InstanceRecord, Option<Rat>)> = corpus
        .instances
        .par_iter()
        .map(|pair| {
            let digest = pair.digest();
            if pair.boundary().is_empty() {
                return (InstanceRecord::skip(digest), None);
            }
            let cert = match minimize_nvol(pair) {
                Ok(c) if c.certified => c,
                _ => return (InstanceRecord::skip(digest), None),
            };
            let (lct, lct_certified) = match certified_lct_of_boundary(pair) {
                Ok(x) => x,
                Err(_) => return (InstanceRecord::skip(digest), None),
            };
            if !lct_certified {
                return (InstanceRecord::skip(digest), None);
            }
            let rhs = int(8) * &lct;
            let ratio = &cert.value / &lct;
            let ok = cert.value <= rhs;
            (
                InstanceRecord::checked(digest, cert.value, rhs, ok),
                Some(ratio),
            )
        })
        .collect();
    let worst = results.iter().filter_map(|(_, r)| r.clone()).max();
    let records = results.into_iter().map(|(r, _)| r).collect();
    TheoremReport::new("surface-lct-bound", records, worst)
}

/// Checks the volume change of one pair under coefficient perturbations:
/// |nvol(perturbed) - nvol(pair)| <= c * sum |t_i| for each perturbation
/// vector, plus one-sided monotonicity when a vector has a uniform sign.
/// Perturbation vectors must keep every coefficient in (0, 1) and satisfy
/// |t_i| <= iota.
pub fn check_lipschitz(
    pair: &LogPair,
    perturbations: &[Vec<Rat>],
    c: &Rat,
    iota: &Rat,
) -> Result<TheoremReport> {
    let base = minimize_nvol(pair)?.value;
    let n = pair.boundary().len();
    let mut records = Vec::new();
    let mut worst: Option<Rat> = None;
    for t in perturbations {
        if t.len() != n {
            return Err(Error::InvalidArgument(
                "perturbation length does not match the boundary".into(),
            ));
        }
        if t.iter().any(|ti| ti.abs() > *iota) {
            return Err(Error::InvalidArgument(
                "perturbation exceeds the stated radius".into(),
            ));
        }
        let entries: Vec<BoundaryEntry> = pair
            .boundary()
            .iter()
            .zip(t)
            .map(|(e, ti)| BoundaryEntry::new(&e.coeff + ti, e.curve.clone()))
            .collect();
        let perturbed = LogPair::smooth(entries)?;
        let value = minimize_nvol(&perturbed)?.value;
        let diff = (&value - &base).abs();
        let sum_t: Rat = t.iter().map(|ti| ti.abs()).fold(Rat::zero(), |a, b| a + b);
        let bound = c * &sum_t;
        let mono = if t.iter().all(|ti| !ti.is_positive()) {
            value >= base
        } else if t.iter().all(|ti| !ti.is_negative()) {
            value <= base
        } else {
            true
        };
        let ok = diff <= bound && mono;
        if sum_t.is_positive() {
            let ratio = &diff / &sum_t;
            if worst.as_ref().map_or(true, |w| ratio > *w) {
                worst = Some(ratio);
            }
        }
        records.push(InstanceRecord::checked(perturbed.digest(), diff, bound, ok));
    }
    Ok(TheoremReport::new("lipschitz", records, worst))
}

/// Sweeps every coefficient of every instance down to near zero and up toward
/// one in `steps` steps, asserting exact monotonicity of the volume along
/// each sweep; reports the empirical two-sided ratio
/// max |nvol difference| / |coefficient change| as the worst margin.
pub fn lipschitz_sweep_report(corpus: &InstanceCorpus, steps: u32) -> Result<TheoremReport> {
    if steps == 0 {
        return Err(Error::InvalidArgument("need at least one step".into()));
    }
    let per_instance: Vec<(Vec<InstanceRecord>, Option<Rat>)> = corpus
        .instances
        .par_iter()
        .map(|pair| -> Result<(Vec<InstanceRecord>, Option<Rat>)> {
            let mut records = Vec::new();
            let mut worst: Option<Rat> = None;
            if pair.boundary().is_empty() {
                records.push(InstanceRecord::skip(pair.digest()));
                return Ok((records, None));
            }
            let base = minimize_nvol(pair)?.value;
            for idx in 0..pair.boundary().len() {
                let a = pair.boundary()[idx].coeff.clone();
                let down_step = &a / int(steps as i64 + 1);
                let up_step = (Rat::one() - &a) / int(2 * (steps as i64 + 1));
                for (dir, step) in [(-1i64, down_step), (1i64, up_step)] {
                    let mut values = vec![base.clone()];
                    for j in 1..=steps {
                        let coeff = &a + int(dir) * int(j as i64) * &step;
                        let moved = pair.with_coeff(idx, coeff)?;
                        match minimize_nvol(&moved) {
                            Ok(cert) => values.push(cert.value),
                            Err(Error::NotKltOnMonomialRays) => break,
                            Err(e) => return Err(e),
                        }
                        let diff = (values.last().unwrap() - &base).abs();
                        let delta = int(j as i64) * &step;
                        let ratio = diff / delta;
                        if worst.as_ref().map_or(true, |w| ratio > *w) {
                            worst = Some(ratio);
                        }
                    }
                    let monotone = values.windows(2).all(|w| {
                        if dir < 0 {
                            w[0] <= w[1]
                        } else {
                            w[0] >= w[1]
                        }
                    });
                    records.push(InstanceRecord::checked(
                        format!("{}:coeff{}:{}", pair.digest(), idx, if dir < 0 { "down" } else { "up" }),
                        values.first().unwrap().clone(),
                        values.last().unwrap().clone(),
                        monotone,
                    ));
                }
            }
            Ok((records, worst))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut records = Vec::new();
    let mut worst: Option<Rat> = None;
    for (rs, w) in per_instance {
        records.extend(rs);
        if let Some(w) = w {
            if worst.as_ref().map_or(true, |cur| w > *cur) {
                worst = Some(w);
            }
        }
    }
    Ok(TheoremReport::new("lipschitz", records, worst))
}

/// Truncation guard of one certified pair: k0 = 1 + max_i floor(v(f_i)/v(m))
/// at the minimizer. For every k in k0..k0+5, replacing each boundary curve
/// by its terms of degree < k must reproduce the exact minimum value and the
/// exact minimizer weights. The worst margin reports k0.
pub fn check_truncation(pair: &LogPair) -> Result<TheoremReport> {
    if pair.boundary().is_empty() {
        return Ok(TheoremReport::new(
            "truncation",
            vec![InstanceRecord::skip(pair.digest())],
            None,
        ));
    }
    let cert = minimize_nvol(pair)?;
    let (m1, m2) = {
        let (a, b) = cert.minimizer.coprime_integer_weights();
        (
            crate::rat::to_u64(&a)?,
            crate::rat::to_u64(&b)?,
        )
    };
    let vm = m1.min(m2) as u128;
    let k0 = 1 + pair
        .boundary()
        .iter()
        .map(|e| e.curve.integer_weighted_order(m1, m2) / vm)
        .max()
        .unwrap() as u32;
    let mut records = Vec::new();
    for k in k0..k0 + 6 {
        let entries: Vec<BoundaryEntry> = pair
            .boundary()
            .iter()
            .map(|e| Ok(BoundaryEntry::new(e.coeff.clone(), e.curve.truncate(k)?)))
            .collect::<Result<Vec<_>>>()?;
        let truncated = LogPair::new(pair.ambient().clone(), entries)?;
        let tcert = minimize_nvol(&truncated)?;
        let ok = tcert.value == cert.value && tcert.minimizer == cert.minimizer;
        records.push(InstanceRecord::checked(
            format!("{}:k{}", pair.digest(), k),
            tcert.value,
            cert.value.clone(),
            ok,
        ));
    }
    Ok(TheoremReport::new(
        "truncation",
        records,
        Some(int(k0 as i64)),
    ))
}

/// Runs the truncation check over a corpus; the worst margin is the largest
/// guard k0 seen.
pub fn truncation_report(corpus: &InstanceCorpus) -> Result<TheoremReport> {
    let reports: Vec<TheoremReport> = corpus
        .instances
        .par_iter()
        .map(check_truncation)
        .collect::<Result<Vec<_>>>()?;
    let mut records = Vec::new();
    let mut worst: Option<Rat> = None;
    for r in reports {
        records.extend(r.records);
        if let Some(w) = r.summary.worst_margin {
            if worst.as_ref().map_or(true, |cur| w > *cur) {
                worst = Some(w);
            }
        }
    }
    Ok(TheoremReport::new("truncation", records, worst))
}

/// Enumerates the certified volumes above eps of all boundaries built from at
/// most three pairwise coprime monomial curves with exponents in the box and
/// coefficients drawn from the given set; the empty boundary is included.
/// The result is sorted, duplicate-free, and deterministic.
pub fn enumerate_acc(coeff_set: &[Rat], box_bound: u32, eps: &Rat) -> Result<Vec<Rat>> {
    for c in coeff_set {
        if !c.is_positive() || *c >= Rat::one() {
            return Err(Error::CoefficientRange);
        }
    }
    let mut values: std::collections::BTreeSet<Rat> = std::collections::BTreeSet::new();
    let empty_value = minimize_nvol(&LogPair::empty())?.value;
    if &empty_value > eps {
        values.insert(empty_value);
    }
    if coeff_set.is_empty() {
        return Ok(values.into_iter().collect());
    }
    let mut monomials: Vec<(u32, u32)> = Vec::new();
    for p in 0..=box_bound {
        for q in 0..=box_bound {
            if p + q > 0 {
                monomials.push((p, q));
            }
        }
    }
    let coprime = |a: (u32, u32), b: (u32, u32)| a.0.min(b.0) == 0 && a.1.min(b.1) == 0;
    let mut subsets: Vec<Vec<(u32, u32)>> = Vec::new();
    for i in 0..monomials.len() {
        subsets.push(vec![monomials[i]]);
        for j in (i + 1)..monomials.len() {
            if !coprime(monomials[i], monomials[j]) {
                continue;
            }
            subsets.push(vec![monomials[i], monomials[j]]);
            for k in (j + 1)..monomials.len() {
                if coprime(monomials[i], monomials[k]) && coprime(monomials[j], monomials[k]) {
                    subsets.push(vec![monomials[i], monomials[j], monomials[k]]);
                }
            }
        }
    }
    for subset in &subsets {
        let mut assignment = vec![0usize; subset.len()];
        loop {
            let entries: Vec<BoundaryEntry> = subset
                .iter()
                .zip(&assignment)
                .map(|(&(p, q), &ci)| {
                    Ok(BoundaryEntry::new(
                        coeff_set[ci].clone(),
                        PlaneCurve::monomial(p, q)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            if let Ok(pair) = LogPair::smooth(entries) {
                match minimize_nvol(&pair) {
                    Ok(cert) => {
                        if !cert.certified {
                            return Err(Error::InternalInconsistency(
                                "a monomial boundary produced an uncertified minimum".into(),
                            ));
                        }
                        if &cert.value > eps {
                            values.insert(cert.value);
                        }
                    }
                    Err(Error::NotKltOnMonomialRays) => {}
                    Err(e) => return Err(e),
                }
            }
            let mut pos = 0usize;
            loop {
                if pos == assignment.len() {
                    break;
                }
                assignment[pos] += 1;
                if assignment[pos] < coeff_set.len() {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == assignment.len() {
                break;
            }
        }
    }
    Ok(values.into_iter().collect())
}

/// Convergence of the threshold-multiplicity sequence along the valuation
/// ideals of v: s_m = lct(a_m)^2 * e(a_m) satisfies
/// s_m >= (local volume of the point) for every m, and |s_(m_max) - nvol(v)|
/// is at most the tolerance. The lower bound is the infimum of the normalized
/// volume over all valuations, which the sequence can touch below nvol(v) at
/// small m. The worst margin reports the final gap |s_(m_max) - nvol(v)|.
pub fn check_lct_mult_convergence(
    v: &MonomialValuation,
    pair: &LogPair,
    m_max: u32,
    tol: &Rat,
) -> Result<TheoremReport> {
    if m_max == 0 {
        return Err(Error::InvalidArgument("need at least one level".into()));
    }
    let target = nvol_of(pair, v)?.nvol;
    let point_volume = minimize_nvol(pair)?.value;
    let digest = pair.digest();
    let mut records = Vec::new();
    let mut last: Option<Rat> = None;
    for m in 1..=m_max {
        let ideal = valuation_ideal(v, &int(m as i64))?;
        let lct = lct_ideal(pair, &ideal)?;
        let e = ideal.multiplicity()?;
        let s = &lct * &lct * e;
        let ok = s >= point_volume;
        records.push(InstanceRecord::checked(
            format!("{digest}:m{m}"),
            s.clone(),
            point_volume.clone(),
            ok,
        ));
        last = Some(s);
    }
    let gap = (last.unwrap() - &target).abs();
    let ok = gap <= *tol;
    records.push(InstanceRecord::checked(
        format!("{digest}:limit"),
        gap.clone(),
        tol.clone(),
        ok,
    ));
    Ok(TheoremReport::new(
        "lct-mult",
        records,
        Some(gap),
    ))
}

/// Order bounds on monomial-boundary instances: the threshold of the maximal
/// ideal is at most 2, and each boundary curve with coefficient c on a
/// klt-screened singleton pair has order at the origin strictly below 2/c.
pub fn check_order_bounds(corpus: &InstanceCorpus) -> TheoremReport {
    let per_instance: Vec<Vec<InstanceRecord>> = corpus
        .instances
        .par_iter()
        .map(|pair| {
            let digest = pair.digest();
            let mut records = Vec::new();
            match lct_ideal(pair, &MonomialIdeal::maximal()) {
                Ok(lct) => {
                    let ok = lct <= int(2);
                    records.push(InstanceRecord::checked(
                        format!("{digest}:maximal"),
                        lct,
                        int(2),
                        ok,
                    ));
                }
                Err(_) => records.push(InstanceRecord::skip(format!("{digest}:maximal"))),
            }
            for (i, e) in pair.boundary().iter().enumerate() {
                let singleton = LogPair::smooth(vec![e.clone()]);
                let klt = matches!(singleton.as_ref().map(minimize_nvol), Ok(Ok(_)));
                if !klt {
                    records.push(InstanceRecord::skip(format!("{digest}:entry{i}")));
                    continue;
                }
                let ord = int(e.curve.order_at_origin() as i64);
                let bound = int(2) / &e.coeff;
                let ok = ord < bound;
                records.push(InstanceRecord::checked(
                    format!("{digest}:entry{i}"),
                    ord,
                    bound,
                    ok,
                ));
            }
            records
        })
        .collect();
    let records: Vec<InstanceRecord> = per_instance.into_iter().flatten().collect();
    TheoremReport::new("order-bounds", records, None)
}

/// Existence of components of controlled grade: on every certifiable
/// instance with volume above eps, the minimizer's component exists and its
/// plt grade lies in (0, 1]. Records lhs = volume, rhs = grade; instances at
/// or below eps are skipped. The worst margin is the smallest grade seen.
pub fn check_delta_plt_existence(corpus: &InstanceCorpus, eps: &Rat) -> TheoremReport {
    let results: Vec<(InstanceRecord, Option<Rat>)> = corpus
        .instances
        .par_iter()
        .map(|pair| {
            let digest = pair.digest();
            let cert = match minimize_nvol(pair) {
                Ok(c) if c.certified => c,
                _ => return (InstanceRecord::skip(digest), None),
            };
            if &cert.value <= eps {
                return (InstanceRecord::skip(digest), None);
            }
            let Some(kc) = cert.kollar.as_ref() else {
                return (
                    InstanceRecord::checked(digest, cert.value, Rat::zero(), false),
                    None,
                );
            };
            let grade = delta_plt_grade(kc);
            let ok = grade.is_positive() && grade <= Rat::one();
            (
                InstanceRecord::checked(digest, cert.value.clone(), grade.clone(), ok),
                Some(grade),
            )
        })
        .collect();
    let worst = results.iter().filter_map(|(_, g)| g.clone()).min();
    let records = results.into_iter().map(|(r, _)| r).collect();
    TheoremReport::new("delta-plt", records, worst)
}

/// Deterministic sweep of invariant-boundary quotient pairs, checking the
/// finite degree identity r * quotient volume = cover volume exactly.
pub fn quotient_degree_sweep(count: usize, seed: u64) -> Result<TheoremReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::new();
    let mut produced = 0usize;
    let mut attempts = 0usize;
    while produced < count {
        attempts += 1;
        if attempts > 4000 * (count + 10) {
            return Err(Error::InternalInconsistency(
                "quotient sweep rejected too many candidates".into(),
            ));
        }
        let r = rng.random_range(1..=8u64);
        let choices: Vec<u64> = if r == 1 {
            vec![0]
        } else {
            (1..r).filter(|a| num_integer::gcd(*a, r) == 1).collect()
        };
        let a = choices[rng.random_range(0..choices.len())];
        let q = CyclicQuotient::new(r, a)?;
        let n_curves = rng.random_range(0..=2u32);
        let mut curves: Vec<PlaneCurve> = Vec::new();
        let mut valid = true;
        for _ in 0..n_curves {
            if rng.random_range(0..2u32) == 0 {
                let Ok(m) = PlaneCurve::monomial(rng.random_range(0..=3u32), rng.random_range(0..=3u32))
                else {
                    valid = false;
                    break;
                };
                curves.push(m);
            } else {
                let p1 = rng.random_range(1..=3u32);
                let q1 = rng.random_range(0..=2u32);
                let q2 = rng.random_range(0..=3u32);
                let residue =
                    (p1 as u64 + a * q1 as u64 % r + (r - a % r) * q2 as u64 % r) % r;
                let p2 = residue as u32 + r as u32 * rng.random_range(0..2u32);
                if (p2, q2) == (p1, q1) {
                    valid = false;
                    break;
                }
                let Ok(c) = PlaneCurve::new([
                    ((p1, q1), Rat::one()),
                    ((p2, q2), int(-1)),
                ]) else {
                    valid = false;
                    break;
                };
                curves.push(c);
            }
        }
        if !valid {
            continue;
        }
        let entries: Vec<BoundaryEntry> = curves
            .into_iter()
            .map(|c| {
                BoundaryEntry::new(
                    [rat(1, 2), rat(1, 3), rat(1, 4), rat(1, 6)]
                        [rng.random_range(0..4usize)]
                    .clone(),
                    c,
                )
            })
            .collect();
        if entries.iter().any(|e| !q.is_invariant(&e.curve)) {
            continue;
        }
        let Ok(pair) = LogPair::new(Ambient::Quotient(q), entries.clone()) else {
            continue;
        };
        let Ok(qcert) = quotient_nvol(&q, pair.boundary()) else {
            continue;
        };
        let Ok(cover_cert) = minimize_nvol(&pair.cover()) else {
            continue;
        };
        let lhs = Rat::from_integer(r.into()) * &qcert.value;
        let ok = lhs == cover_cert.value;
        records.push(InstanceRecord::checked(
            pair.digest(),
            lhs,
            cover_cert.value,
            ok,
        ));
        produced += 1;
    }
    Ok(TheoremReport::new("finite-degree", records, None))
}

/// A grid of P1 divisors with up to `max_points` points and coefficients
/// i/denominator, checking the semistability criterion d_max <= total - d_max
/// against its direct multiset form. Used as a brute-force gate.
pub fn kss_grid_report(denominator: u32, max_points: u32) -> Result<TheoremReport> {
    use crate::kollar::{is_kss, P1Divisor, PointClass};
    let mut records = Vec::new();
    let coeffs: Vec<Rat> = (1..denominator as i64)
        .map(|i| rat(i, denominator as i64))
        .collect();
    let mut stack: Vec<Vec<Rat>> = vec![Vec::new()];
    while let Some(current) = stack.pop() {
        if current.len() < max_points as usize {
            let start = &current;
            for c in &coeffs {
                if start.last().map_or(true, |l| c >= l) {
                    let mut next = current.clone();
                    next.push(c.clone());
                    stack.push(next);
                }
            }
        }
        if current.is_empty() {
            continue;
        }
        let total: Rat = current.iter().fold(Rat::zero(), |a, b| a + b);
        if total >= int(2) {
            continue;
        }
        let classes: Vec<PointClass> = current
            .iter()
            .map(|d| PointClass {
                count: 1,
                d: d.clone(),
            })
            .collect();
        let got = is_kss(&P1Divisor::new(classes)?)?;
        let dmax = current.iter().max().unwrap().clone();
        let expected = &dmax <= &(&total - &dmax);
        let digest: Vec<String> = current.iter().map(|c| c.to_string()).collect();
        records.push(InstanceRecord::checked(
            format!("kss:{}", digest.join(",")),
            int(if got { 1 } else { 0 }),
            int(if expected { 1 } else { 0 }),
            got == expected,
        ));
    }
    Ok(TheoremReport::new("kss-grid", records, None))
}
