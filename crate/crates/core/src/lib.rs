//! Exact local volume computations for two-dimensional log pairs.
//!
//! The library works over the germ of a smooth surface point or a cyclic
//! quotient singularity, with a boundary divisor given by plane curves with
//! rational coefficients in (0, 1). All arithmetic is exact rational
//! arithmetic; no floating point enters any computation.
//!
//! The main pipeline evaluates monomial valuations v with weights (w1, w2):
//! the log discrepancy is A(v) = w1 + w2 - sum a_i * v(f_i), the volume is
//! vol(v) = 1/(w1*w2), and the normalized volume is A(v)^2 * vol(v). The
//! minimum over the monomial rays is found exactly by piecewise analysis of
//! A on the rays (1, t), and each minimizer is decorated with the divisor
//! data of its weighted blow-up: the different on the exceptional line, the
//! induced semistability verdict, and a certificate flag that is set only
//! when the monomial minimum is provably the global minimum.
//!
//! Companion routines compute log canonical thresholds of monomial ideals
//! and boundaries, Hilbert-Samuel multiplicities, valuation ideals,
//! truncation guards, quotient volumes, and batch verification suites over
//! deterministic instance corpora.

pub mod curve;
pub mod error;
pub mod ideal;
pub mod kollar;
pub mod newton;
pub mod pair;
pub mod poly;
pub mod quotient;
pub mod rat;
pub mod report;
pub mod valuation;
pub mod verify;

pub use curve::{curves_coprime, PlaneCurve};
pub use error::{Error, Result};
pub use ideal::{lct_ideal, lct_sum_check, valuation_ideal, MonomialIdeal};
pub use kollar::{
    certified_lct_of_boundary, cone_nvol, delta_plt_grade, different_divisor, is_kss,
    minimize_nvol, nvol_of_kollar, KollarComponent, NvolCertificate, P1Divisor, PointClass,
};
pub use newton::{
    initial_form_factorization, newton_diagram, refined_initial_forms, Facet, NewtonDiagram,
};
pub use pair::{Ambient, BoundaryEntry, LogPair};
pub use quotient::{
    enumerate_quotients_with_nvol_above, group_order_bound, quotient_nvol, CyclicQuotient,
};
pub use rat::{int, parse_rat, rat, rat_str, Rat};
pub use valuation::{
    ambient_log_discrepancy, izumi_check, kill_boundary_check, log_discrepancy, nvol_of,
    properness_ratio, MonomialValuation, ValuationReport,
};
pub use verify::{
    certifiable_corpus, check_delta_plt_existence, check_lct_mult_convergence, check_lipschitz,
    check_order_bounds, check_surface_lct_bound, check_truncation, dk_pair, enumerate_acc,
    kss_grid_report, lipschitz_sweep_report, quotient_degree_sweep, truncation_report,
    CorpusParams, CorpusShape, InstanceCorpus, InstanceRecord, ReportSummary, TheoremReport,
};
