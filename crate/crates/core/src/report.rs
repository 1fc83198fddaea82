//! JSON wire formats for inputs and reports.
//!
//! Input files describe a pair as an ambient label plus a boundary list of
//! coefficient and polynomial strings. Report structs serialize in fixed
//! field order with all rational values printed exactly as num/den strings.

use serde::{Deserialize, Serialize};

use crate::curve::PlaneCurve;
use crate::error::{Error, Result};
use crate::kollar::NvolCertificate;
use crate::pair::{Ambient, BoundaryEntry, LogPair};
use crate::quotient::CyclicQuotient;
use crate::rat::{parse_rat, rat_str, to_u64, Rat};
use crate::verify::TheoremReport;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum AmbientWire {
    Name(String),
    Quotient { quotient: QuotientParams },
}

#[derive(Serialize, Deserialize)]
struct QuotientParams {
    r: u64,
    a: u64,
}

#[derive(Serialize, Deserialize)]
struct BoundaryWire {
    coeff: String,
    poly: String,
}

#[derive(Serialize, Deserialize)]
struct PairWire {
    ambient: AmbientWire,
    boundary: Vec<BoundaryWire>,
}

/// Parses an input JSON document into a pair.
pub fn pair_from_json(text: &str) -> Result<LogPair> {
    let wire: PairWire =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("input json: {e}")))?;
    let ambient = match wire.ambient {
        AmbientWire::Name(name) if name == "A2" => Ambient::SmoothPlane,
        AmbientWire::Name(name) => {
            return Err(Error::Parse(format!("unknown ambient label {name}")))
        }
        AmbientWire::Quotient { quotient } => {
            Ambient::Quotient(CyclicQuotient::new(quotient.r, quotient.a)?)
        }
    };
    let boundary = wire
        .boundary
        .into_iter()
        .map(|b| {
            Ok(BoundaryEntry::new(
                parse_rat(&b.coeff)?,
                PlaneCurve::parse(&b.poly)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    LogPair::new(ambient, boundary)
}

/// Serializes a pair back to the input JSON layout.
pub fn pair_to_json(pair: &LogPair) -> String {
    let ambient = match pair.ambient() {
        Ambient::SmoothPlane => AmbientWire::Name("A2".to_string()),
        Ambient::Quotient(q) => AmbientWire::Quotient {
            quotient: QuotientParams { r: q.r(), a: q.a() },
        },
    };
    let wire = PairWire {
        ambient,
        boundary: pair
            .boundary()
            .iter()
            .map(|e| BoundaryWire {
                coeff: rat_str(&e.coeff),
                poly: e.curve.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&wire).expect("pair wire serializes")
}

/// One divisor class on the wire.
#[derive(Serialize, Deserialize)]
pub struct ClassWire {
    pub count: u32,
    pub d: String,
}

/// Volume certificate on the wire.
#[derive(Serialize, Deserialize)]
pub struct CertificateWire {
    pub weights: [u64; 2],
    pub value: String,
    pub different: Vec<ClassWire>,
    pub kss: bool,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CertificateWire {
    pub fn from_certificate(cert: &NvolCertificate) -> crate::error::Result<Self> {
        let (w1, w2) = cert.minimizer.coprime_integer_weights();
        let (m1, m2) = (to_u64(&w1)?, to_u64(&w2)?);
        let different = cert
            .kollar
            .as_ref()
            .map(|k| {
                k.different()
                    .iter()
                    .map(|c| ClassWire {
                        count: c.count,
                        d: rat_str(&c.d),
                    })
                    .collect()
            })
            .unwrap_or_default();
        Ok(CertificateWire {
            weights: [m1, m2],
            value: rat_str(&cert.value),
            different,
            kss: cert.kss,
            certified: cert.certified,
            note: if cert.certified {
                None
            } else {
                Some(
                    "minimum over monomial valuations only; a coordinate substitution may \
                     realize a smaller value"
                        .to_string(),
                )
            },
        })
    }
}

/// Threshold result on the wire.
#[derive(Serialize, Deserialize)]
pub struct LctWire {
    pub lct: String,
    pub certified: bool,
}

/// Multiplicity result on the wire.
#[derive(Serialize, Deserialize)]
pub struct MultiplicityWire {
    pub m_primary: bool,
    pub multiplicity: Option<u64>,
}

/// Semistability verdict on the wire.
#[derive(Serialize, Deserialize)]
pub struct KssWire {
    pub kss: bool,
}

/// Quotient certificate on the wire.
#[derive(Serialize, Deserialize)]
pub struct QuotientWire {
    pub group: String,
    pub weights: [u64; 2],
    pub value: String,
    pub kss: bool,
    pub certified: bool,
}

impl QuotientWire {
    pub fn from_certificate(group: &CyclicQuotient, cert: &NvolCertificate) -> crate::error::Result<Self> {
        let (m1, m2) = cert.minimizer.coprime_integer_weights();
        Ok(QuotientWire {
            group: group.label(),
            weights: [to_u64(&m1)?, to_u64(&m2)?],
            value: rat_str(&cert.value),
            kss: cert.kss,
            certified: cert.certified,
        })
    }
}

/// One quotient census row on the wire.
#[derive(Serialize, Deserialize)]
pub struct CensusRowWire {
    pub group: String,
    pub value: String,
}

/// One record of a theorem report on the wire.
#[derive(Serialize, Deserialize)]
pub struct RecordWire {
    pub digest: String,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
    pub skipped: bool,
}

/// Report summary on the wire.
#[derive(Serialize, Deserialize)]
pub struct SummaryWire {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub worst_margin: Option<String>,
}

/// Full theorem report on the wire.
#[derive(Serialize, Deserialize)]
pub struct ReportWire {
    pub theorem: String,
    pub summary: SummaryWire,
    pub records: Vec<RecordWire>,
}

impl ReportWire {
    pub fn from_report(report: &TheoremReport) -> Self {
        ReportWire {
            theorem: report.theorem_id.clone(),
            summary: SummaryWire {
                passed: report.summary.passed,
                failed: report.summary.failed,
                skipped: report.summary.skipped,
                worst_margin: report.summary.worst_margin.as_ref().map(rat_str),
            },
            records: report
                .records
                .iter()
                .map(|r| RecordWire {
                    digest: r.digest.clone(),
                    lhs: rat_str(&r.lhs),
                    rhs: rat_str(&r.rhs),
                    ok: r.ok,
                    skipped: r.skipped,
                })
                .collect(),
        }
    }
}

/// Enumerated volume list on the wire.
#[derive(Serialize, Deserialize)]
pub struct EnumerationWire {
    pub epsilon: String,
    pub box_bound: u32,
    pub values: Vec<String>,
}

/// Truncation response on the wire: the truncated pair plus the guard level.
#[derive(Serialize, Deserialize)]
pub struct TruncationWire {
    pub k: u32,
    pub guard: u32,
    pub pair: serde_json::Value,
}

/// Pretty-prints any serializable wire value.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("wire value serializes")
}

/// Renders a list of rationals as exact strings.
pub fn rat_list(values: &[Rat]) -> Vec<String> {
    values.iter().map(rat_str).collect()
}
