//! The `residue-lab` command line.
//!
//! Exit codes: 0 when everything checked passes, 1 on operational errors
//! (bad arguments, unreadable files, exceeded step budget), 2 when a check
//! fails or a numeric bound is inconclusive.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use crate::analysis::{self, PrecisionConfig};
use crate::exact::{self, FORMULA_NAMES};
use crate::scanner::{self, Check, ScanConfig, ScanReport, DEFAULT_CHUNK_SIZE};
use crate::trajectory::{self, DEFAULT_STEP_BUDGET};
use crate::{parse_biguint, CheckOutcome, Error, Result, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

/// Default caps for `bounds` when no check is selected.
const DEFAULT_LEMMA4_MAX: u64 = 10_000;
const DEFAULT_LEMMA5_MAX: u64 = 1_000;

#[derive(Debug, Parser)]
#[command(name = "residue-lab", version, about = "Exact Collatz residue and step-count verifier")]
pub struct Cli {
    /// Structured JSON output instead of tables.
    #[arg(long, global = true)]
    pub json: bool,

    /// Maximum Collatz steps per trajectory.
    #[arg(long, global = true, env = "RESIDUE_LAB_BUDGET", default_value_t = DEFAULT_STEP_BUDGET)]
    pub budget: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Step counts D, O, E and the six formula predictions.
    Stats {
        #[arg(value_parser = parse_n)]
        n: BigUint,
    },
    /// Exact residue 2^E/(3^O*N) with the per-N bound checks.
    Residue {
        #[arg(value_parser = parse_n)]
        n: BigUint,
        /// Fractional digits of the truncated decimal.
        #[arg(long, default_value_t = 12)]
        digits: u32,
    },
    /// Odd values of the trajectory and the halvings after each.
    Branch {
        #[arg(value_parser = parse_n)]
        n: BigUint,
    },
    /// Check every N in a range.
    Verify(VerifyArgs),
    /// Numeric harmonic-sum and constant bounds.
    Bounds(BoundsArgs),
    /// The N with the largest residue in a range.
    MaxResidue(RangeArgs),
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long, value_parser = parse_biguint_arg)]
    pub from: BigUint,
    #[arg(long, value_parser = parse_biguint_arg)]
    pub to: BigUint,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE)]
    pub chunk_size: u64,
    /// Share precomputed stats of odd values below this limit.
    #[arg(long)]
    pub stats_cache: Option<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    /// Comma-separated subset of lower,wrc,formulas,theorem2,product_form, or all.
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// JSON-lines checkpoint; completed chunks in it are skipped.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Write N,D,O,E,residue rows to this CSV file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Stop after this many newly computed chunks.
    #[arg(long)]
    pub max_chunks: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// Check the harmonic-number bound for n in 1..=MAX.
    #[arg(long)]
    pub lemma4_max: Option<u64>,
    /// Check the eligible reciprocal-sum bound for m in 1..=MAX.
    #[arg(long)]
    pub lemma5_max: Option<u64>,
    /// Check the ninth-power claim for t in 20..=1252.
    #[arg(long)]
    pub theorem2_claim: bool,
    /// Check the constant 0.999467... and the O <= 19 bound.
    #[arg(long)]
    pub constants: bool,
    /// Working precision in decimal digits.
    #[arg(long, default_value_t = 50)]
    pub digits: u32,
    /// Verdict margin 10^-EXP.
    #[arg(long, default_value_t = 20)]
    pub margin_exp: u32,
}

fn parse_biguint_arg(s: &str) -> std::result::Result<BigUint, String> {
    parse_biguint(s).map_err(|e| e.to_string())
}

fn parse_n(s: &str) -> std::result::Result<BigUint, String> {
    let n = parse_biguint_arg(s)?;
    if n == BigUint::from(0u32) {
        return Err("N must be at least 1".into());
    }
    Ok(n)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn exit_for(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Pass | Verdict::NotApplicable => EXIT_OK,
        Verdict::Fail | Verdict::Inconclusive => EXIT_VIOLATION,
    }
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Error::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Stats { n } => cmd_stats(cli, n, out),
        Command::Residue { n, digits } => cmd_residue(cli, n, *digits, out),
        Command::Branch { n } => cmd_branch(cli, n, out),
        Command::Verify(args) => cmd_verify(cli, args, out),
        Command::Bounds(args) => cmd_bounds(cli, args, out),
        Command::MaxResidue(args) => cmd_max_residue(cli, args, out),
    }
}

fn cmd_stats(cli: &Cli, n: &BigUint, out: &mut dyn Write) -> Result<i32> {
    let counts = trajectory::trajectory_stats(n, cli.budget)?;
    let fc = exact::predict_all(n, counts)?;
    let expected = fc.expected();
    if cli.json {
        let formulas: Vec<_> = (0..6)
            .map(|i| {
                json!({
                    "formula": FORMULA_NAMES[i],
                    "predicted": fc.predicted[i],
                    "actual": expected[i],
                    "match": fc.matches[i],
                })
            })
            .collect();
        print_json(
            out,
            &json!({
                "n": n.to_string(),
                "total": counts.total,
                "odd": counts.odd,
                "even": counts.even,
                "formulas": formulas,
                "all_match": fc.all_match(),
            }),
        )?;
    } else {
        writeln!(out, "N = {n}")?;
        writeln!(out, "D={} O={} E={}", counts.total, counts.odd, counts.even)?;
        for ((name, predicted), ok) in FORMULA_NAMES.iter().zip(fc.predicted).zip(fc.matches) {
            let mark = if ok { "ok" } else { "MISMATCH" };
            writeln!(out, "  {name:<22} {predicted:>8}  {mark}")?;
        }
    }
    Ok(if fc.all_match() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_residue(cli: &Cli, n: &BigUint, digits: u32, out: &mut dyn Write) -> Result<i32> {
    let r = exact::residue_of(n, cli.budget)?;
    let den = r.denominator();
    let checks = [
        exact::lower_outcome(n, &r, &den),
        exact::wrc_outcome(n, &r, &den),
        exact::theorem2_outcome(n, &r, &den),
    ];
    let verdict = checks.iter().fold(Verdict::NotApplicable, |v, c| v.and(c.verdict));
    let decimal = r.decimal(digits);
    if cli.json {
        print_json(
            out,
            &json!({
                "n": n.to_string(),
                "e": r.e(),
                "o": r.o(),
                "n_odd": r.n_odd().to_string(),
                "decimal": decimal,
                "checks": checks,
            }),
        )?;
    } else {
        writeln!(out, "N = {n}")?;
        writeln!(out, "Res = {r} = {decimal}")?;
        for c in &checks {
            writeln!(out, "  {c}")?;
        }
    }
    Ok(exit_for(verdict))
}

fn cmd_branch(cli: &Cli, n: &BigUint, out: &mut dyn Write) -> Result<i32> {
    let branch = trajectory::odd_branch(n, cli.budget)?;
    if cli.json {
        let values: Vec<String> = branch.values().iter().map(|v| v.to_string()).collect();
        print_json(
            out,
            &json!({
                "n": n.to_string(),
                "values": values,
                "divisions": branch.divisions(),
            }),
        )?;
    } else {
        writeln!(out, "N = {n}, {} odd values", branch.len())?;
        for (v, d) in branch.values().iter().zip(branch.divisions()) {
            writeln!(out, "  {v}  /2^{d}")?;
        }
    }
    Ok(EXIT_OK)
}

fn scan_config(cli: &Cli, range: &RangeArgs) -> ScanConfig {
    let mut cfg = ScanConfig::new(range.from.clone(), range.to.clone());
    cfg.workers = range.workers;
    cfg.chunk_size = range.chunk_size;
    cfg.step_budget = cli.budget;
    cfg.stats_cache_limit = range.stats_cache;
    cfg
}

fn write_extremum(out: &mut dyn Write, label: &str, e: &Option<scanner::Extremum>) -> io::Result<()> {
    match e {
        Some(e) => writeln!(out, "{label:<14} N={}  {}  {}", e.n, e.residue, e.residue.decimal(12)),
        None => writeln!(out, "{label:<14} none"),
    }
}

fn write_report(out: &mut dyn Write, report: &ScanReport) -> io::Result<()> {
    let ranges: Vec<String> = report.ranges.iter().map(|(a, b)| format!("[{a}, {b}]")).collect();
    writeln!(out, "{:<14} {}", "range", ranges.join(" "))?;
    writeln!(out, "{:<14} {}", "checked", report.count_checked)?;
    write_extremum(out, "max residue", &report.max)?;
    write_extremum(out, "min residue", &report.min)?;
    let band = if report.residues_in_band() { "yes" } else { "no" };
    writeln!(out, "{:<14} {band}", "in [1, 1.26)")?;
    writeln!(out, "{:<14} {}", "violations", report.violations.len())?;
    for (check, count) in report.violation_totals() {
        writeln!(out, "  {check:<12} {count}")?;
    }
    for v in &report.violations {
        writeln!(out, "  N={} {}: {}", v.n, v.check, v.detail)?;
    }
    writeln!(out, "{:<14} {:.3} s", "elapsed", report.duration.as_secs_f64())
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let mut cfg = scan_config(cli, &args.range);
    cfg.checks = Check::parse_set(&args.checks)?;
    cfg.checkpoint_path = args.checkpoint.clone();
    cfg.report_path = args.report.clone();
    cfg.validate()?;

    let progress = scanner::run_scan_limited(&cfg, args.max_chunks)?;
    if let Some(path) = &cfg.report_path {
        let mut w = io::BufWriter::new(std::fs::File::create(path)?);
        scanner::write_csv_report(&cfg, &mut w)?;
        w.flush()?;
    }
    let report = &progress.report;
    if cli.json {
        let mut v = report.to_json(true);
        v["chunks_total"] = json!(progress.chunks_total);
        v["chunks_resumed"] = json!(progress.chunks_resumed);
        v["chunks_computed"] = json!(progress.chunks_computed);
        v["complete"] = json!(progress.is_complete());
        print_json(out, &v)?;
    } else {
        write_report(out, report)?;
        writeln!(
            out,
            "{:<14} {} of {} ({} resumed)",
            "chunks",
            progress.chunks_resumed + progress.chunks_computed,
            progress.chunks_total,
            progress.chunks_resumed
        )?;
        if !progress.is_complete() {
            writeln!(out, "scan incomplete; rerun with the same checkpoint to continue")?;
        }
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_max_residue(cli: &Cli, args: &RangeArgs, out: &mut dyn Write) -> Result<i32> {
    let mut cfg = scan_config(cli, args);
    cfg.checks = [Check::Lower].into_iter().collect();
    let (n, r, decimal) = scanner::find_max_residue(&cfg)?;
    if cli.json {
        print_json(
            out,
            &json!({
                "n": n.to_string(),
                "e": r.e(),
                "o": r.o(),
                "n_odd": r.n_odd().to_string(),
                "decimal": decimal,
            }),
        )?;
    } else {
        writeln!(out, "N = {n}")?;
        writeln!(out, "Res = {r} = {decimal}")?;
    }
    Ok(EXIT_OK)
}

/// Summary of one family of bound checks.
struct BoundGroup {
    name: &'static str,
    outcomes: Vec<CheckOutcome>,
}

impl BoundGroup {
    fn count(&self, v: Verdict) -> usize {
        self.outcomes.iter().filter(|o| o.verdict == v).count()
    }

    fn verdict(&self) -> Verdict {
        self.outcomes.iter().fold(Verdict::NotApplicable, |v, o| v.and(o.verdict))
    }

    /// Outcomes worth printing individually.
    fn notable(&self) -> impl Iterator<Item = &CheckOutcome> {
        let single = self.outcomes.len() == 1;
        self.outcomes
            .iter()
            .filter(move |o| single || matches!(o.verdict, Verdict::Fail | Verdict::Inconclusive))
    }

    fn to_json(&self) -> serde_json::Value {
        let notable: Vec<_> = self.notable().collect();
        json!({
            "check": self.name,
            "verdict": self.verdict(),
            "count": self.outcomes.len(),
            "pass": self.count(Verdict::Pass),
            "inconclusive": self.count(Verdict::Inconclusive),
            "fail": self.count(Verdict::Fail),
            "not_applicable": self.count(Verdict::NotApplicable),
            "outcomes": notable,
        })
    }
}

fn cmd_bounds(cli: &Cli, args: &BoundsArgs, out: &mut dyn Write) -> Result<i32> {
    let prec = PrecisionConfig::with_margin_exponent(args.digits, args.margin_exp)?;
    let any = args.lemma4_max.is_some() || args.lemma5_max.is_some() || args.theorem2_claim || args.constants;
    let lemma4 = if any { args.lemma4_max } else { Some(DEFAULT_LEMMA4_MAX) };
    let lemma5 = if any { args.lemma5_max } else { Some(DEFAULT_LEMMA5_MAX) };
    let claim = !any || args.theorem2_claim;
    let constants = !any || args.constants;

    let mut groups = Vec::new();
    if let Some(max) = lemma4 {
        groups.push(BoundGroup {
            name: "lemma4",
            outcomes: analysis::lemma4_range(max, &prec)?,
        });
    }
    if let Some(max) = lemma5 {
        groups.push(BoundGroup {
            name: "lemma5",
            outcomes: analysis::lemma5_range(max, &prec)?,
        });
    }
    if claim {
        groups.push(BoundGroup {
            name: "theorem2_claim",
            outcomes: analysis::theorem2_claim_range(&prec),
        });
    }
    if constants {
        groups.push(BoundGroup {
            name: "theorem2_const",
            outcomes: vec![analysis::theorem2_constant_check(&prec)],
        });
        groups.push(BoundGroup {
            name: "corollary",
            outcomes: vec![analysis::corollary_bound_check(&prec)?],
        });
    }

    let verdict = groups.iter().fold(Verdict::NotApplicable, |v, g| v.and(g.verdict()));
    if cli.json {
        let list: Vec<_> = groups.iter().map(BoundGroup::to_json).collect();
        print_json(
            out,
            &json!({
                "digits": args.digits,
                "margin_exp": args.margin_exp,
                "verdict": verdict,
                "checks": list,
            }),
        )?;
    } else {
        writeln!(out, "digits {}, margin 1e-{}", args.digits, args.margin_exp)?;
        writeln!(
            out,
            "{:<16} {:>6} {:>6} {:>6} {:>6}  verdict",
            "check", "count", "pass", "incon", "fail"
        )?;
        for g in &groups {
            writeln!(
                out,
                "{:<16} {:>6} {:>6} {:>6} {:>6}  {}",
                g.name,
                g.outcomes.len(),
                g.count(Verdict::Pass),
                g.count(Verdict::Inconclusive),
                g.count(Verdict::Fail),
                g.verdict()
            )?;
            for o in g.notable() {
                writeln!(out, "  {o}")?;
            }
        }
    }
    Ok(exit_for(verdict))
}
