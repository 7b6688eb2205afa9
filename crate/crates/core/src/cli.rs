//! Batch command-line front end: counting, oracles, verification suites,
//! section/lift plumbing, configuration inspection, and the 2-block census.
//!
//! All semantics live here rather than in the binary so the whole surface is
//! testable in-process: build an [`Invocation`], call [`run`] with any
//! writer, and check the exit code and emitted document. Exit codes are
//! 0 = success, 1 = verification failure (a disagreement or counterexample,
//! reported in the emitted JSON), 2 = usage or scale error (reported on
//! stderr).

use crate::compressor::{FiveCompressor, SectionFrame};
use crate::desargues::{pair_label, parse_pair_label, triple_label, ConfigDocument};
use crate::enumeration::{count_report, oracle_report, Quantity, ScaleLimits, QUANTITIES};
use crate::error::{Error, Result};
use crate::field::{prime_power, Field, FieldSpec};
use crate::geometry::ProjectiveSpace;
use crate::twoblock::classify_two_blocks;
use crate::verify::{
    blockline_injectivity_suite, desargues_theorem_suite, identities_suite,
    lift_uniqueness_suite, sc_bounds_suite, Suite,
};
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

/// Fixed default for `--seed`; ten points, ten lines.
pub const DEFAULT_SEED: u64 = 1010;

/// Default sample count for the randomized suite.
pub const DEFAULT_SAMPLES: u64 = 10_000;

/// Flags shared by every subcommand.
#[derive(Debug, Clone)]
pub struct CommonOpts {
    pub seed: u64,
    /// Worker threads for the scans; 0 keeps the library default.
    pub jobs: usize,
    /// Drop elapsed-time fields so output is byte-reproducible.
    pub no_timing: bool,
    /// Field modulus override, e.g. "3^2/1,0,1".
    pub field_poly: Option<String>,
    /// key=value overrides for the scan envelopes.
    pub limits_file: Option<PathBuf>,
}

impl Default for CommonOpts {
    fn default() -> Self {
        CommonOpts {
            seed: DEFAULT_SEED,
            jobs: 0,
            no_timing: false,
            field_poly: None,
            limits_file: None,
        }
    }
}

/// One parsed command line. Enum fields stay as raw strings where the
/// parsing rules (quantity tags, suite names, point syntax) belong to this
/// module's usage-error handling.
#[derive(Debug, Clone)]
pub enum Invocation {
    /// Closed forms: one quantity or all, at one q or across all prime
    /// powers up to a bound.
    Count {
        quantity: Option<String>,
        q: Option<u64>,
        q_max: Option<u64>,
        format: String,
    },
    /// Run the exhaustive oracle for a quantity and compare.
    Oracle {
        quantity: String,
        q: u64,
        through_point: Option<String>,
    },
    /// Run a named verification suite.
    Verify { suite: String, q: u64, samples: u64 },
    /// Section a 5-compressor by a hyperplane.
    Section {
        q: u64,
        compressor: Vec<String>,
        hyperplane: String,
    },
    /// Lift a configuration document through an apex pair.
    Lift {
        config: PathBuf,
        vertex: String,
        apex: Option<Vec<String>>,
    },
    /// Summarize a configuration document.
    Inspect { config: PathBuf },
    /// Classify all tangential 2-blocks of PG(3,2).
    TwoBlock,
}

#[derive(Serialize)]
struct InspectReport {
    q: u64,
    n: usize,
    spatial: bool,
    self_conjugate: Vec<String>,
    max_blockline_points: usize,
    blockline_structure: BTreeMap<String, Vec<String>>,
}

/// Execute an invocation, writing the emitted document to `out`.
/// Returns the process exit code.
pub fn run(inv: Invocation, common: &CommonOpts, out: &mut dyn Write) -> i32 {
    let inner = || -> Result<i32> {
        let mut limits = ScaleLimits::default();
        if let Some(path) = &common.limits_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read limits file: {e}")))?;
            limits.apply_overrides(&text)?;
        }
        if common.jobs > 0 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(common.jobs)
                .build()
                .map_err(|e| Error::Parse(format!("cannot build worker pool: {e}")))?;
            // buffer inside the pool: the caller's writer need not be Send
            let mut buf = Vec::new();
            let code = pool.install(|| dispatch(inv, common, &limits, &mut buf));
            out.write_all(&buf)
                .map_err(|e| Error::Parse(format!("write failed: {e}")))?;
            code
        } else {
            dispatch(inv, common, &limits, out)
        }
    };
    match inner() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("reports serialize");
    writeln!(out, "{text}").map_err(|e| Error::Parse(format!("write failed: {e}")))
}

fn build_field(q: u64, poly: &Option<String>) -> Result<Arc<Field>> {
    let field = match poly {
        None => Field::of_order(q)?,
        Some(text) => {
            let spec: FieldSpec = text.parse()?;
            if spec.order() != q {
                return Err(Error::Parse(format!(
                    "--field-poly describes GF({}) but --q is {q}",
                    spec.order()
                )));
            }
            Field::new(spec)?
        }
    };
    Ok(Arc::new(field))
}

fn dispatch(
    inv: Invocation,
    common: &CommonOpts,
    limits: &ScaleLimits,
    out: &mut dyn Write,
) -> Result<i32> {
    match inv {
        Invocation::Count { quantity, q, q_max, format } => {
            run_count(quantity, q, q_max, &format, common, out)
        }
        Invocation::Oracle { quantity, q, through_point } => {
            let quantity: Quantity = quantity.parse()?;
            let field = build_field(q, &common.field_poly)?;
            let mut report = oracle_report(&field, quantity, through_point.as_deref(), limits)?;
            if common.no_timing {
                report.elapsed_ms = None;
            }
            emit(out, &report)?;
            Ok(if report.agree == Some(false) { 1 } else { 0 })
        }
        Invocation::Verify { suite, q, samples } => {
            let suite: Suite = suite.parse()?;
            let mut report = match suite {
                Suite::Identities => identities_suite(q),
                Suite::DesarguesTheorem => {
                    desargues_theorem_suite(&build_field(q, &common.field_poly)?, samples, common.seed)?
                }
                Suite::LiftUniqueness => {
                    lift_uniqueness_suite(&build_field(q, &common.field_poly)?, limits)?
                }
                Suite::BlocklineInjectivity => {
                    blockline_injectivity_suite(&build_field(q, &common.field_poly)?, limits)?
                }
                Suite::ScBounds => sc_bounds_suite(&build_field(q, &common.field_poly)?, limits)?,
            };
            if common.no_timing {
                report.elapsed_ms = None;
            }
            emit(out, &report)?;
            Ok(if report.pass { 0 } else { 1 })
        }
        Invocation::Section { q, compressor, hyperplane } => {
            if compressor.len() != 5 {
                return Err(Error::Parse(format!(
                    "--compressor takes exactly 5 points, got {}",
                    compressor.len()
                )));
            }
            let field = build_field(q, &common.field_poly)?;
            let width = compressor[0].split(',').count();
            if width < 1 || width > 5 {
                return Err(Error::Parse(format!(
                    "cannot infer an ambient space from point {:?}",
                    compressor[0]
                )));
            }
            let space = Arc::new(ProjectiveSpace::new(field, width - 1)?);
            let points: Vec<_> = compressor
                .iter()
                .map(|s| space.point_from_str(s))
                .collect::<Result<_>>()?;
            let comp = FiveCompressor::new(
                &space,
                points.try_into().expect("length checked above"),
            )?;
            let pi = space.subspace_from_str(&hyperplane)?;
            let frame = SectionFrame::new(space, pi)?;
            let config = frame.section(&comp)?;
            emit(out, &config.to_document())?;
            Ok(0)
        }
        Invocation::Lift { config, vertex, apex } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Parse(format!("cannot read configuration file: {e}")))?;
            let doc: ConfigDocument = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad configuration document: {e}")))?;
            let config = doc.restore()?;
            let rank = parse_pair_label(&vertex)?;
            let frame =
                SectionFrame::lifting(config.space().field().clone(), config.space().n())?;
            let (p1, p2) = match apex {
                Some(points) => {
                    if points.len() != 2 {
                        return Err(Error::Parse(format!(
                            "--apex takes exactly 2 points, got {}",
                            points.len()
                        )));
                    }
                    (
                        frame.host().point_from_str(&points[0])?,
                        frame.host().point_from_str(&points[1])?,
                    )
                }
                None => frame.default_apex(&config, rank)?,
            };
            let (s1, s2) = frame.lift(&config, rank, &p1, &p2)?;
            emit(out, &[s1.to_document(), s2.to_document()])?;
            Ok(0)
        }
        Invocation::Inspect { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Error::Parse(format!("cannot read configuration file: {e}")))?;
            let doc: ConfigDocument = serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("bad configuration document: {e}")))?;
            let config = doc.restore()?;
            let structure = config.blockline_structure();
            let report = InspectReport {
                q: config.space().q() as u64,
                n: config.space().n(),
                spatial: config.spatial(),
                self_conjugate: config
                    .self_conjugate_points()
                    .into_iter()
                    .map(pair_label)
                    .collect(),
                max_blockline_points: structure
                    .subsets
                    .iter()
                    .map(Vec::len)
                    .max()
                    .expect("ten blocklines"),
                blockline_structure: structure
                    .subsets
                    .iter()
                    .enumerate()
                    .map(|(t, subset)| {
                        (triple_label(t), subset.iter().map(|&r| pair_label(r)).collect())
                    })
                    .collect(),
            };
            emit(out, &report)?;
            Ok(0)
        }
        Invocation::TwoBlock => {
            let classification = classify_two_blocks()?;
            emit(out, &classification.report)?;
            Ok(if classification.report.other > 0 { 1 } else { 0 })
        }
    }
}

fn run_count(
    quantity: Option<String>,
    q: Option<u64>,
    q_max: Option<u64>,
    format: &str,
    common: &CommonOpts,
    out: &mut dyn Write,
) -> Result<i32> {
    let quantities: Vec<Quantity> = match quantity {
        Some(tag) => vec![tag.parse()?],
        None => QUANTITIES.to_vec(),
    };
    let orders: Vec<u64> = match (q, q_max) {
        (Some(q), None) => vec![q],
        (None, Some(max)) => (2..=max).filter(|&v| prime_power(v).is_some()).collect(),
        (Some(_), Some(_)) => {
            return Err(Error::Parse("--q and --q-max are mutually exclusive".into()))
        }
        (None, None) => return Err(Error::Parse("count needs --q or --q-max".into())),
    };
    let mut reports = Vec::new();
    for &q in &orders {
        for &quantity in &quantities {
            let mut report = count_report(quantity, q)?;
            if common.no_timing {
                report.elapsed_ms = None;
            }
            reports.push(report);
        }
    }
    match format {
        "json" => {
            if reports.len() == 1 {
                emit(out, &reports[0])?;
            } else {
                emit(out, &reports)?;
            }
        }
        "tsv" => {
            let mut text = String::from("quantity\tq\tclosed_form\n");
            for report in &reports {
                text.push_str(&format!(
                    "{}\t{}\t{}\n",
                    report.quantity, report.q, report.closed_form
                ));
            }
            write!(out, "{text}").map_err(|e| Error::Parse(format!("write failed: {e}")))?;
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown format {other:?}; expected json or tsv"
            )))
        }
    }
    Ok(0)
}
