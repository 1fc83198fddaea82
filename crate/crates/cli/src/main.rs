//! Command line interface for exact local volume computations on surface
//! pairs: normalized volumes with certificates, thresholds, multiplicities,
//! blow-up components, semistability checks, quotient censuses, and the
//! verification reports, all in exact rational arithmetic.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use locvol::report::{
    pair_from_json, pair_to_json, to_pretty_json, CensusRowWire, CertificateWire,
    EnumerationWire, KssWire, LctWire, MultiplicityWire, QuotientWire, ReportWire,
    TruncationWire,
};
use locvol::rat::to_u64;
use locvol::{
    certifiable_corpus, certified_lct_of_boundary, check_delta_plt_existence,
    check_lct_mult_convergence, check_order_bounds, check_surface_lct_bound, delta_plt_grade,
    different_divisor, enumerate_acc, enumerate_quotients_with_nvol_above, is_kss,
    kss_grid_report, lct_ideal, lipschitz_sweep_report, minimize_nvol, nvol_of_kollar,
    parse_rat, quotient_degree_sweep, quotient_nvol, rat_str, truncation_report, Ambient,
    BoundaryEntry, CorpusParams, CorpusShape, CyclicQuotient, Error, LogPair, MonomialIdeal,
    MonomialValuation, P1Divisor, PointClass, Rat, Result, TheoremReport,
};

#[derive(Parser)]
#[command(
    name = "locvol",
    version,
    about = "Exact local volumes, thresholds, and semistability for surface pairs"
)]
struct Cli {
    /// Input JSON file describing a pair; "-" reads standard input.
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Output file; JSON by default, CSV for tabular reports when the path
    /// ends with .csv.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Seed for generated instance corpora.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Worker threads for corpus checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimize the normalized volume of the pair and print the certificate.
    Nvol,

    /// Certified log canonical threshold of the boundary, or of a monomial
    /// ideal against the pair when --ideal is given.
    Lct {
        /// Monomial ideal as a JSON list of exponent pairs, e.g. [[3,0],[0,2]].
        #[arg(long)]
        ideal: Option<String>,
    },

    /// Hilbert-Samuel multiplicity of a monomial ideal.
    Mult {
        /// Monomial ideal as a JSON list of exponent pairs.
        #[arg(long)]
        ideal: String,
    },

    /// Different divisor of one weighted blow-up of the pair.
    Kollar {
        /// Blow-up weights, e.g. 2,3.
        #[arg(long)]
        weights: String,
    },

    /// K-semistability of a divisor on the exceptional line.
    Kss {
        /// Divisor as a JSON list of [count, "coefficient"] classes.
        #[arg(long)]
        divisor: String,
    },

    /// Normalized volume of a cyclic quotient, with optional invariant
    /// boundary taken from --input.
    Quotient {
        /// Group label Q(r,a).
        #[arg(long)]
        group: String,
    },

    /// All cyclic quotients with local volume above a threshold.
    Census {
        /// Volume threshold, e.g. 1/10.
        #[arg(long)]
        above: String,
    },

    /// Truncate the boundary curves at degree k and report the safe guard
    /// level.
    Truncate {
        /// Truncation degree: terms of degree below k survive.
        #[arg(long)]
        k: u32,
    },

    /// Enumerate certified volumes of monomial boundaries with coefficients
    /// from a finite set.
    EnumerateAcc {
        /// Comma-separated coefficient set, e.g. 1/2,2/3.
        #[arg(long)]
        coeffs: String,

        /// Exponent box bound.
        #[arg(long = "box", value_name = "BOUND")]
        box_size: u32,

        /// Keep only volumes strictly above this threshold.
        #[arg(long, default_value = "1/100")]
        epsilon: String,
    },

    /// Run one verification report; exits 1 if any record fails.
    Verify {
        /// One of: lct-bound, lipschitz, truncation, finite-degree,
        /// kss-grid, order-bounds, delta-plt, lct-mult.
        theorem: String,

        /// Number of corpus instances.
        #[arg(long, default_value_t = 50)]
        count: usize,

        /// Sweep steps for lipschitz.
        #[arg(long, default_value_t = 10)]
        steps: u32,

        /// Volume threshold for delta-plt.
        #[arg(long, default_value = "1/100")]
        epsilon: String,

        /// Valuation weights for lct-mult, e.g. 2,3.
        #[arg(long, default_value = "2,3")]
        weights: String,

        /// Ideal levels for lct-mult.
        #[arg(long, default_value_t = 30)]
        levels: u32,

        /// Final gap tolerance for lct-mult.
        #[arg(long, default_value = "1/10")]
        tolerance: String,

        /// Coefficient denominator for kss-grid.
        #[arg(long, default_value_t = 10)]
        denominator: u32,

        /// Maximum points for kss-grid.
        #[arg(long, default_value_t = 3)]
        points: u32,
    },
}

fn read_input(input: &Option<PathBuf>) -> Result<String> {
    let Some(path) = input else {
        return Err(Error::InvalidArgument(
            "this command needs --input (a pair JSON file, or - for stdin)".into(),
        ));
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::InvalidArgument(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("reading {}: {e}", path.display())))
    }
}

fn input_pair(input: &Option<PathBuf>) -> Result<LogPair> {
    pair_from_json(&read_input(input)?)
}

fn parse_weights(text: &str) -> Result<(u64, u64)> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected m1,m2, got {text:?}")))?;
    let m1 = a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad weight {a:?}")))?;
    let m2 = b
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad weight {b:?}")))?;
    Ok((m1, m2))
}

fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let gens: Vec<(u32, u32)> = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("ideal generators: {e}")))?;
    MonomialIdeal::new(gens)
}

fn parse_divisor(text: &str) -> Result<P1Divisor> {
    let classes: Vec<(u32, String)> = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("divisor classes: {e}")))?;
    let classes = classes
        .into_iter()
        .map(|(count, d)| {
            Ok(PointClass {
                count,
                d: parse_rat(&d)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    P1Divisor::new(classes)
}

fn parse_coeff_set(text: &str) -> Result<Vec<Rat>> {
    text.split(',').map(|c| parse_rat(c.trim())).collect()
}

/// Writes a rendered document to --output or stdout; `csv` carries the
/// tabular form used when the output path ends with .csv.
fn emit(output: &Option<PathBuf>, json: String, csv: Option<String>) -> Result<()> {
    match output {
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{json}") {
                Ok(()) => Ok(()),
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                Err(e) => Err(Error::InvalidArgument(format!("writing stdout: {e}"))),
            }
        }
        Some(path) => {
            let text = if path.extension().is_some_and(|e| e == "csv") {
                csv.ok_or_else(|| {
                    Error::InvalidArgument(
                        "csv output is only available for tabular reports".into(),
                    )
                })?
            } else {
                json
            };
            std::fs::write(path, text)
                .map_err(|e| Error::InvalidArgument(format!("writing {}: {e}", path.display())))
        }
    }
}

fn report_csv(report: &TheoremReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["digest", "lhs", "rhs", "ok", "skipped"])
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    for r in &report.records {
        w.write_record([
            r.digest.as_str(),
            &rat_str(&r.lhs),
            &rat_str(&r.rhs),
            &r.ok.to_string(),
            &r.skipped.to_string(),
        ])
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(format!("csv: {e}")))
}

fn census_csv(rows: &[CensusRowWire]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["group", "value"])
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    for r in rows {
        w.write_record([r.group.as_str(), r.value.as_str()])
            .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(format!("csv: {e}")))
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Nvol => {
            let pair = input_pair(&cli.input)?;
            let json = match pair.ambient() {
                Ambient::SmoothPlane => {
                    let cert = minimize_nvol(&pair)?;
                    to_pretty_json(&CertificateWire::from_certificate(&cert)?)
                }
                Ambient::Quotient(q) => {
                    let cert = quotient_nvol(q, pair.boundary())?;
                    to_pretty_json(&QuotientWire::from_certificate(q, &cert)?)
                }
            };
            emit(&cli.output, json, None)?;
            Ok(0)
        }
        Cmd::Lct { ideal } => {
            let json = match ideal {
                Some(text) => {
                    let ideal = parse_ideal(&text)?;
                    let pair = match &cli.input {
                        Some(_) => input_pair(&cli.input)?,
                        None => LogPair::empty(),
                    };
                    let lct = lct_ideal(&pair, &ideal)?;
                    to_pretty_json(&LctWire {
                        lct: rat_str(&lct),
                        certified: true,
                    })
                }
                None => {
                    let pair = input_pair(&cli.input)?;
                    let (lct, certified) = certified_lct_of_boundary(&pair)?;
                    to_pretty_json(&LctWire {
                        lct: rat_str(&lct),
                        certified,
                    })
                }
            };
            emit(&cli.output, json, None)?;
            Ok(0)
        }
        Cmd::Mult { ideal } => {
            let ideal = parse_ideal(&ideal)?;
            let wire = if ideal.is_m_primary() {
                MultiplicityWire {
                    m_primary: true,
                    multiplicity: Some(to_u64(ideal.multiplicity()?.numer())?),
                }
            } else {
                MultiplicityWire {
                    m_primary: false,
                    multiplicity: None,
                }
            };
            emit(&cli.output, to_pretty_json(&wire), None)?;
            Ok(0)
        }
        Cmd::Kollar { weights } => {
            let pair = input_pair(&cli.input)?;
            let weights = parse_weights(&weights)?;
            let kc = different_divisor(&pair, weights)?;
            let kss = is_kss(&P1Divisor::new(kc.different().to_vec())?)?;
            let different: Vec<serde_json::Value> = kc
                .different()
                .iter()
                .map(|c| serde_json::json!({"count": c.count, "d": rat_str(&c.d)}))
                .collect();
            let doc = serde_json::json!({
                "weights": [weights.0, weights.1],
                "log_discrepancy": rat_str(kc.log_discrepancy()),
                "nvol": rat_str(&nvol_of_kollar(&kc)),
                "different": different,
                "plt_grade": rat_str(&delta_plt_grade(&kc)),
                "kss": kss,
            });
            emit(
                &cli.output,
                serde_json::to_string_pretty(&doc).expect("component document serializes"),
                None,
            )?;
            Ok(0)
        }
        Cmd::Kss { divisor } => {
            let divisor = parse_divisor(&divisor)?;
            let wire = KssWire {
                kss: is_kss(&divisor)?,
            };
            emit(&cli.output, to_pretty_json(&wire), None)?;
            Ok(0)
        }
        Cmd::Quotient { group } => {
            let q = CyclicQuotient::parse(&group)?;
            let boundary: Vec<BoundaryEntry> = match &cli.input {
                Some(_) => input_pair(&cli.input)?.boundary().to_vec(),
                None => Vec::new(),
            };
            let cert = quotient_nvol(&q, &boundary)?;
            emit(
                &cli.output,
                to_pretty_json(&QuotientWire::from_certificate(&q, &cert)?),
                None,
            )?;
            Ok(0)
        }
        Cmd::Census { above } => {
            let eps = parse_rat(&above)?;
            let rows: Vec<CensusRowWire> = enumerate_quotients_with_nvol_above(&eps)?
                .into_iter()
                .map(|(q, v)| CensusRowWire {
                    group: q.label(),
                    value: rat_str(&v),
                })
                .collect();
            let csv = census_csv(&rows)?;
            emit(&cli.output, to_pretty_json(&rows), Some(csv))?;
            Ok(0)
        }
        Cmd::Truncate { k } => {
            let pair = input_pair(&cli.input)?;
            let cert = minimize_nvol(&pair)?;
            let (m1, m2) = cert.minimizer.coprime_integer_weights();
            let (m1, m2) = (to_u64(&m1)?, to_u64(&m2)?);
            let guard = 1 + pair
                .boundary()
                .iter()
                .map(|e| e.curve.integer_weighted_order(m1, m2) / m1.min(m2) as u128)
                .max()
                .unwrap_or(0) as u32;
            let entries = pair
                .boundary()
                .iter()
                .map(|e| Ok(BoundaryEntry::new(e.coeff.clone(), e.curve.truncate(k)?)))
                .collect::<Result<Vec<_>>>()?;
            let truncated = LogPair::new(pair.ambient().clone(), entries)?;
            let wire = TruncationWire {
                k,
                guard,
                pair: serde_json::from_str(&pair_to_json(&truncated))
                    .expect("pair document round trips"),
            };
            emit(&cli.output, to_pretty_json(&wire), None)?;
            Ok(0)
        }
        Cmd::EnumerateAcc {
            coeffs,
            box_size,
            epsilon,
        } => {
            let coeff_set = parse_coeff_set(&coeffs)?;
            let eps = parse_rat(&epsilon)?;
            let values = enumerate_acc(&coeff_set, box_size, &eps)?;
            let wire = EnumerationWire {
                epsilon: rat_str(&eps),
                box_bound: box_size,
                values: values.iter().map(|v| rat_str(v)).collect(),
            };
            emit(&cli.output, to_pretty_json(&wire), None)?;
            Ok(0)
        }
        Cmd::Verify {
            theorem,
            count,
            steps,
            epsilon,
            weights,
            levels,
            tolerance,
            denominator,
            points,
        } => {
            let report = match theorem.as_str() {
                "lct-bound" => {
                    let corpus =
                        certifiable_corpus(CorpusParams::new(CorpusShape::Mixed, count, cli.seed))?;
                    check_surface_lct_bound(&corpus)
                }
                "lipschitz" => {
                    let corpus =
                        certifiable_corpus(CorpusParams::new(CorpusShape::Mixed, count, cli.seed))?;
                    lipschitz_sweep_report(&corpus, steps)?
                }
                "truncation" => {
                    let corpus = certifiable_corpus(CorpusParams::new(
                        CorpusShape::SingleCurveWithTails,
                        count,
                        cli.seed,
                    ))?;
                    truncation_report(&corpus)?
                }
                "finite-degree" => quotient_degree_sweep(count, cli.seed)?,
                "kss-grid" => kss_grid_report(denominator, points)?,
                "order-bounds" => {
                    let corpus = certifiable_corpus(CorpusParams::new(
                        CorpusShape::MonomialOnly,
                        count,
                        cli.seed,
                    ))?;
                    check_order_bounds(&corpus)
                }
                "delta-plt" => {
                    let corpus =
                        certifiable_corpus(CorpusParams::new(CorpusShape::Mixed, count, cli.seed))?;
                    check_delta_plt_existence(&corpus, &parse_rat(&epsilon)?)
                }
                "lct-mult" => {
                    let (m1, m2) = parse_weights(&weights)?;
                    let v = MonomialValuation::from_integers(m1, m2)?;
                    let pair = match &cli.input {
                        Some(_) => input_pair(&cli.input)?,
                        None => LogPair::empty(),
                    };
                    check_lct_mult_convergence(&v, &pair, levels, &parse_rat(&tolerance)?)?
                }
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown theorem id {other:?}; expected one of lct-bound, lipschitz, \
                         truncation, finite-degree, kss-grid, order-bounds, delta-plt, lct-mult"
                    )))
                }
            };
            let csv = report_csv(&report)?;
            emit(
                &cli.output,
                to_pretty_json(&ReportWire::from_report(&report)),
                Some(csv),
            )?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
