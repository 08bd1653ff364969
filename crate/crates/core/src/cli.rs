//! Command-line front end. `run` does everything `main` does but writes to
//! the given streams and returns the exit code.
//!
//! Exit codes: 0 affirmative, 1 negative verdict or failed check, 2 usage or
//! input error, 3 undetermined verdict.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::ci::{ci_verdict, exceptional_filter, CIReport, Rule, Verdict};
use crate::dynkin::{enumerate_markings, parse_marking};
use crate::euler::{verify_lemma, EulerPoly};
use crate::oracle::{self, Algebra, MatrixPoint};
use crate::orbits::{richardson_dim_in, OrbitDescriptor};
use crate::rootsys::{build_root_system, weyl_order, LieType};
use crate::{Error, Result};

/// Highest rank covered by the validated representation tables.
pub const VALIDATED_MAX_RANK: usize = 8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDETERMINED: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleSuite {
    Molien,
    Cones,
    Jacobian,
    Weights,
    All,
}

/// Verifies which nilpotent orbit closures are complete intersections.
#[derive(Debug, Parser)]
#[command(name = "orbitci", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fundamental degrees and the degree identity of the nilpotent cone.
    Degrees {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Verdict on the Richardson orbit closure of a marked diagram, e.g. A4:0101.
    CiCheck {
        marking: String,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Sweeps every proper marking of every simple type up to a rank.
    Verify {
        #[arg(long, default_value_t = VALIDATED_MAX_RANK)]
        max_rank: usize,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
        #[arg(long)]
        allow_unvalidated_tables: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Euler characteristics of a complete intersection in P^m.
    Euler {
        #[arg(long)]
        m: u32,
        #[arg(long = "deg", value_delimiter = ',')]
        degrees: Vec<u32>,
        /// A twist `t` or an inclusive range `lo..hi`.
        #[arg(long = "t", default_value = "0", allow_hyphen_values = true)]
        twists: TwistRange,
        /// Also check the vanishing statements.
        #[arg(long)]
        lemma: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Small-rank ground truth checks.
    Oracle {
        #[arg(value_enum, default_value_t = OracleSuite::All)]
        suite: OracleSuite,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Overrides ORBITCI_SEED.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Dimension filter for any orbit of an exceptional algebra.
    Exceptional {
        #[arg(long = "type")]
        lie_type: String,
        #[arg(long)]
        dim_orbit: i64,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for TwistRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad twist {x:?}: {e}"))
        };
        match s.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (parse(lo)?, parse(hi)?);
                if lo > hi {
                    return Err(format!("empty range {s}"));
                }
                Ok(TwistRange { lo, hi })
            }
            None => {
                let t = parse(s)?;
                Ok(TwistRange { lo: t, hi: t })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreesReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub degrees: Vec<u64>,
    pub dim_g: usize,
    pub dim_nilpotent_cone: usize,
    pub degree_sum: u64,
    pub n: usize,
    pub r: usize,
    pub identity_holds: bool,
    pub weyl_order: String,
    pub degree_product: String,
}

pub fn cmd_degrees(t: LieType) -> DegreesReport {
    let rs = build_root_system(t);
    let degree_sum: u64 = rs.fundamental_degrees.iter().sum();
    let n = rs.dim_nilpotent_cone() / 2;
    let r = rs.rank;
    DegreesReport {
        lie_type: t.to_string(),
        rank: r,
        degrees: rs.fundamental_degrees.clone(),
        dim_g: rs.dim_g,
        dim_nilpotent_cone: rs.dim_nilpotent_cone(),
        degree_sum,
        n,
        r,
        identity_holds: degree_sum as usize == n + r,
        weyl_order: weyl_order(&rs).to_string(),
        degree_product: crate::rootsys::degree_product(&rs.fundamental_degrees).to_string(),
    }
}

pub fn cmd_ci_check(marking: &str) -> Result<CIReport> {
    ci_verdict(&parse_marking(marking)?)
}

pub fn cmd_exceptional(t: LieType, dim_orbit: i64) -> Result<CIReport> {
    exceptional_filter(t, &OrbitDescriptor::supplied(t, dim_orbit)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub rank: usize,
    pub marking: String,
    pub dim_orbit: i64,
    pub codim: i64,
    pub verdict: Verdict,
    pub first_rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub max_rank: usize,
    pub types: usize,
    pub markings: usize,
    pub nilpotent_cones: usize,
    pub violations: Vec<String>,
    pub undetermined: Vec<String>,
    /// Markings whose verdict was settled by each rule.
    pub rule_counts: BTreeMap<String, usize>,
    pub rows: Vec<VerifyRow>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.undetermined.is_empty()
    }
}

fn verify_row(d: &crate::dynkin::MarkedDiagram) -> Result<(VerifyRow, bool)> {
    let rs = build_root_system(d.lie_type());
    let o = richardson_dim_in(&rs, d)?;
    let report = ci_verdict(d)?;
    let expected = if d.is_borel() {
        Verdict::IsNilpotentCone
    } else {
        Verdict::NotCompleteIntersection
    };
    let row = VerifyRow {
        lie_type: report.subject.lie_type.clone(),
        rank: report.subject.rank,
        marking: report.subject.marking.clone(),
        dim_orbit: o.dim_orbit,
        codim: o.codim,
        verdict: report.verdict,
        first_rule: report
            .first_rule()
            .map_or(String::new(), |r| r.id().to_string()),
    };
    Ok((row, report.verdict == expected))
}

/// Exhaustive sweep. Rows come back in type-then-marking order whatever
/// the thread count.
pub fn cmd_verify_all(max_rank: usize, parallelism: usize) -> Result<VerifySummary> {
    let types = LieType::all_up_to(max_rank);
    let diagrams: Vec<_> = types.iter().flat_map(|&t| enumerate_markings(t)).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .map_err(|e| Error::OutOfRange(format!("thread pool: {e}")))?;
    let results: Vec<Result<(VerifyRow, bool)>> =
        pool.install(|| diagrams.par_iter().map(verify_row).collect());

    let mut summary = VerifySummary {
        max_rank,
        types: types.len(),
        markings: diagrams.len(),
        nilpotent_cones: 0,
        violations: Vec::new(),
        undetermined: Vec::new(),
        rule_counts: Rule::ALL.iter().map(|r| (r.id().to_string(), 0)).collect(),
        rows: Vec::with_capacity(diagrams.len()),
    };
    for res in results {
        let (row, ok) = res?;
        if row.verdict == Verdict::IsNilpotentCone {
            summary.nilpotent_cones += 1;
        }
        if row.verdict == Verdict::Undetermined {
            summary.undetermined.push(row.marking.clone());
        } else if !ok {
            summary.violations.push(row.marking.clone());
        }
        *summary
            .rule_counts
            .entry(row.first_rule.clone())
            .or_insert(0) += 1;
        summary.rows.push(row);
    }
    Ok(summary)
}

pub fn cmd_euler(m: u32, degrees: &[u32], twists: TwistRange) -> Result<Vec<(i64, String)>> {
    let p = EulerPoly::new(m, degrees.to_vec())?;
    Ok(p.table(twists.lo..=twists.hi)
        .into_iter()
        .map(|(t, v)| (t, v.to_string()))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleLine {
    pub check: String,
    pub subject: String,
    pub detail: String,
    pub ok: bool,
}

const MOLIEN_TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

pub fn cmd_oracle(suite: OracleSuite, samples: usize, seed: u64) -> Result<Vec<OracleLine>> {
    let mut out = Vec::new();
    let all = suite == OracleSuite::All;
    if all || suite == OracleSuite::Molien {
        for name in MOLIEN_TYPES {
            let t: LieType = name.parse()?;
            let molien = oracle::weyl_molien_degrees(t)?;
            let table = build_root_system(t).fundamental_degrees;
            out.push(OracleLine {
                check: "molien".into(),
                subject: name.into(),
                detail: format!("molien {molien:?} table {table:?}"),
                ok: molien == table,
            });
        }
    }
    if all || suite == OracleSuite::Cones {
        for a in Algebra::ALL {
            let c = oracle::check_cone(a, samples, seed);
            out.push(OracleLine {
                check: "cones".into(),
                subject: a.to_string(),
                detail: format!(
                    "samples {} nilpotent {} mismatches {} seed {seed}",
                    c.samples, c.nilpotent, c.mismatches
                ),
                ok: c.mismatches == 0,
            });
        }
    }
    if all || suite == OracleSuite::Jacobian {
        for a in Algebra::ALL {
            let rank = oracle::jacobian_rank_at(&MatrixPoint::regular_nilpotent(a));
            out.push(OracleLine {
                check: "jacobian".into(),
                subject: a.to_string(),
                detail: format!(
                    "rank at regular nilpotent {rank}, algebra rank {}",
                    a.rank()
                ),
                ok: rank == a.rank(),
            });
        }
    }
    if all || suite == OracleSuite::Weights {
        out.push(OracleLine {
            check: "weights".into(),
            subject: "A1".into(),
            detail: format!(
                "wt(w) = {:?} for (n,r,a) = (1,1,[2]); {:?} for the smooth plane",
                oracle::form_weight(1, 1, &[2]),
                oracle::form_weight(1, 0, &[])
            ),
            ok: oracle::weight_check_A1(),
        });
    }
    Ok(out)
}

fn report_table(r: &CIReport) -> String {
    let mut s = format!("{}  {}\n", r.subject.marking, r.verdict);
    for (i, reason) in r.reasons.iter().enumerate() {
        s.push_str(&format!(
            "  {}. {}  {}\n",
            i + 1,
            reason.rule,
            reason.witness
        ));
        s.push_str(&format!("     {}\n", reason.citation));
    }
    s
}

fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::IsNilpotentCone => EXIT_OK,
        Verdict::NotCompleteIntersection => EXIT_NEGATIVE,
        Verdict::Undetermined => EXIT_UNDETERMINED,
    }
}

fn emit_report(r: &CIReport, format: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => writeln!(out, "{}", r.to_json()),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["type", "rank", "marking", "verdict", "first_rule"])?;
            w.write_record([
                r.subject.lie_type.clone(),
                r.subject.rank.to_string(),
                r.subject.marking.clone(),
                r.verdict.to_string(),
                r.first_rule().map_or(String::new(), |x| x.id().to_string()),
            ])?;
            w.flush()
        }
        OutputFormat::Table => write!(out, "{}", report_table(r)),
    }
}

fn emit_verify(
    s: &VerifySummary,
    format: OutputFormat,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(s).expect("summary serializes")
        ),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in &s.rows {
                w.serialize(row)?;
            }
            w.flush()
        }
        OutputFormat::Table => {
            writeln!(out, "{:<5} {:>9} {:>8}", "type", "markings", "NotCI")?;
            let mut per_type: BTreeMap<(usize, String), (usize, usize)> = BTreeMap::new();
            for row in &s.rows {
                let e = per_type
                    .entry((row.rank, row.lie_type.clone()))
                    .or_default();
                e.0 += 1;
                e.1 += (row.verdict == Verdict::NotCompleteIntersection) as usize;
            }
            for ((_, t), (count, neg)) in &per_type {
                writeln!(out, "{t:<5} {count:>9} {neg:>8}")?;
            }
            writeln!(out)?;
            writeln!(out, "rule usage (settling rule per marking):")?;
            for (rule, count) in &s.rule_counts {
                writeln!(out, "  {rule:<24} {count}")?;
            }
            writeln!(out)?;
            writeln!(
                out,
                "types {}  markings {}  nilpotent cones {}  violations {}  undetermined {}",
                s.types,
                s.markings,
                s.nilpotent_cones,
                s.violations.len(),
                s.undetermined.len()
            )?;
            for m in s.violations.iter().chain(&s.undetermined) {
                writeln!(out, "  FAILED {m}")?;
            }
            Ok(())
        }
    }
}

fn dispatch(cfg: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::OutOfRange(format!("write failed: {e}"));
    match cfg.command {
        Command::Degrees { lie_type, format } => {
            let r = cmd_degrees(lie_type.parse()?);
            match format {
                OutputFormat::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&r).expect("serializes")
                )
                .map_err(io)?,
                _ => {
                    let mark = if r.identity_holds { "ok" } else { "FAILED" };
                    writeln!(out, "type {}  rank {}", r.lie_type, r.rank).map_err(io)?;
                    writeln!(out, "degrees {:?}", r.degrees).map_err(io)?;
                    writeln!(out, "dim g {}  dim N {}", r.dim_g, r.dim_nilpotent_cone)
                        .map_err(io)?;
                    writeln!(
                        out,
                        "sum {} = n + r = {} + {}  {mark}",
                        r.degree_sum, r.n, r.r
                    )
                    .map_err(io)?;
                    writeln!(
                        out,
                        "|W| {}  product of degrees {}",
                        r.weyl_order, r.degree_product
                    )
                    .map_err(io)?;
                }
            }
            Ok(if r.identity_holds {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::CiCheck { marking, format } => {
            let r = cmd_ci_check(&marking)?;
            emit_report(&r, format, out).map_err(io)?;
            Ok(verdict_exit(r.verdict))
        }
        Command::Exceptional {
            lie_type,
            dim_orbit,
            format,
        } => {
            let r = cmd_exceptional(lie_type.parse()?, dim_orbit)?;
            emit_report(&r, format, out).map_err(io)?;
            Ok(verdict_exit(r.verdict))
        }
        Command::Verify {
            max_rank,
            parallelism,
            allow_unvalidated_tables,
            format,
        } => {
            if max_rank > VALIDATED_MAX_RANK {
                if !allow_unvalidated_tables {
                    return Err(Error::OutOfRange(format!(
                        "--max-rank {max_rank} exceeds the validated range {VALIDATED_MAX_RANK}; \
                         pass --allow-unvalidated-tables to proceed"
                    )));
                }
                writeln!(
                    err,
                    "warning: ranks above {VALIDATED_MAX_RANK} use representation data that has not been validated"
                )
                .map_err(io)?;
            }
            let start = Instant::now();
            let s = cmd_verify_all(max_rank, parallelism)?;
            emit_verify(&s, format, out).map_err(io)?;
            writeln!(
                err,
                "verify: {} markings in {:.2?}",
                s.markings,
                start.elapsed()
            )
            .map_err(io)?;
            Ok(if s.passed() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Euler {
            m,
            degrees,
            twists,
            lemma,
            format,
        } => {
            let rows = cmd_euler(m, &degrees, twists)?;
            let lemma_result = if lemma {
                Some(verify_lemma(m, &degrees)?)
            } else {
                None
            };
            match format {
                OutputFormat::Json => {
                    let values: BTreeMap<i64, &str> =
                        rows.iter().map(|(t, v)| (*t, v.as_str())).collect();
                    let v = serde_json::json!({ "m": m, "degrees": degrees, "values": values, "lemma": lemma_result });
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&v).expect("serializes")
                    )
                    .map_err(io)?;
                }
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["t", "chi"])
                        .map_err(|e| Error::OutOfRange(e.to_string()))?;
                    for (t, v) in &rows {
                        w.write_record([t.to_string(), v.clone()])
                            .map_err(|e| Error::OutOfRange(e.to_string()))?;
                    }
                    w.flush().map_err(io)?;
                }
                OutputFormat::Table => {
                    if rows.len() == 1 {
                        writeln!(out, "{}", rows[0].1).map_err(io)?;
                    } else {
                        for (t, v) in &rows {
                            writeln!(out, "{t:>6} {v}").map_err(io)?;
                        }
                    }
                    if let Some(ok) = lemma_result {
                        writeln!(out, "lemma {}", if ok { "holds" } else { "FAILS" })
                            .map_err(io)?;
                    }
                }
            }
            Ok(if lemma_result == Some(false) {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            })
        }
        Command::Oracle {
            suite,
            samples,
            seed,
        } => {
            let seed = seed.unwrap_or_else(oracle::seed_from_env);
            let lines = cmd_oracle(suite, samples, seed)?;
            for l in &lines {
                let status = if l.ok { "ok" } else { "MISMATCH" };
                writeln!(
                    out,
                    "{:<9} {:<6} {:<9} {}",
                    l.check, l.subject, status, l.detail
                )
                .map_err(io)?;
            }
            let bad = lines.iter().filter(|l| !l.ok).count();
            writeln!(out, "{} checks, {bad} mismatches", lines.len()).map_err(io)?;
            Ok(if bad == 0 { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cfg, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
