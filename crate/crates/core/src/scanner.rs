//! Chunked, resumable range scans.
//!
//! A range `[start, end]` is cut into fixed-size chunks. Worker threads pull
//! chunk indices from a shared counter, run every enabled check on each N of
//! a chunk and send the [`ChunkResult`] to the calling thread, which is the
//! only writer of the checkpoint file. Results are merged in chunk order,
//! and the merge itself is order-independent, so the final [`ScanReport`]
//! does not depend on the worker count or completion order.
//!
//! The checkpoint is JSON lines, one [`ChunkResult`] per completed chunk in
//! completion order. On restart, chunks already present are loaded instead
//! of recomputed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::mpsc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::exact::{self, ResidueTriple};
use crate::trajectory::{self, OddStatsTable, DEFAULT_STEP_BUDGET};
use crate::{Error, Result, Verdict};

pub const DEFAULT_CHUNK_SIZE: u64 = 4096;

/// Upper residue bound of the interval experiments, `1.26 = 63/50`.
pub const BAND_UPPER: (u64, u64) = (63, 50);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Lower,
    Wrc,
    Formulas,
    Theorem2,
    ProductForm,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Lower,
        Check::Wrc,
        Check::Formulas,
        Check::Theorem2,
        Check::ProductForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lower => "lower",
            Check::Wrc => "wrc",
            Check::Formulas => "formulas",
            Check::Theorem2 => "theorem2",
            Check::ProductForm => "product_form",
        }
    }

    /// Parses a comma-separated list, or `all`.
    pub fn parse_set(s: &str) -> Result<BTreeSet<Check>> {
        let mut set = BTreeSet::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                set.extend(Check::ALL);
            } else {
                set.insert(part.parse()?);
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidConfig("no checks selected".into()));
        }
        Ok(set)
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check {s:?}")))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Check name used for N whose trajectory exceeded the step budget.
pub const BUDGET_VIOLATION: &str = "budget";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub start: BigUint,
    pub end: BigUint,
    pub chunk_size: u64,
    pub workers: usize,
    pub checks: BTreeSet<Check>,
    pub step_budget: u64,
    pub checkpoint_path: Option<PathBuf>,
    pub report_path: Option<PathBuf>,
    /// Precompute stats of odd values below this limit and share them
    /// between workers.
    pub stats_cache_limit: Option<u64>,
}

impl ScanConfig {
    /// All checks, one worker, default chunk size and budget.
    pub fn new(start: BigUint, end: BigUint) -> Self {
        ScanConfig {
            start,
            end,
            chunk_size: DEFAULT_CHUNK_SIZE,
            workers: 1,
            checks: Check::ALL.into_iter().collect(),
            step_budget: DEFAULT_STEP_BUDGET,
            checkpoint_path: None,
            report_path: None,
            stats_cache_limit: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.start.is_zero() {
            return Err(Error::InvalidConfig("range start must be >= 1".into()));
        }
        if self.end < self.start {
            return Err(Error::InvalidConfig(format!(
                "range end {} is below start {}",
                self.end, self.start
            )));
        }
        if self.chunk_size == 0 {
            return Err(Error::InvalidConfig("chunk size must be positive".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("worker count must be positive".into()));
        }
        if self.step_budget == 0 {
            return Err(Error::InvalidConfig("step budget must be positive".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidConfig("no checks selected".into()));
        }
        Ok(())
    }

    fn chunk_count(&self) -> Result<usize> {
        let span = (&self.end - &self.start) / self.chunk_size + 1u32;
        span.to_usize()
            .ok_or_else(|| Error::InvalidConfig(format!("{span} chunks is too many; raise the chunk size")))
    }

    fn chunk_bounds(&self, index: usize) -> (BigUint, BigUint) {
        let lo = &self.start + BigUint::from(index) * self.chunk_size;
        let hi = (&lo + self.chunk_size - 1u32).min(self.end.clone());
        (lo, hi)
    }
}

/// One failed check on one N.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    #[serde(with = "crate::decimal::as_string")]
    pub n: BigUint,
    pub check: String,
    pub detail: String,
}

/// A residue together with the N attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremum {
    pub residue: ResidueTriple,
    #[serde(with = "crate::decimal::as_string")]
    pub n: BigUint,
}

impl Extremum {
    fn pick_max(a: Extremum, b: Extremum) -> Extremum {
        match exact::residue_compare(&a.residue, &b.residue) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => if a.n <= b.n { a } else { b },
        }
    }

    fn pick_min(a: Extremum, b: Extremum) -> Extremum {
        match exact::residue_compare(&a.residue, &b.residue) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Equal => if a.n <= b.n { a } else { b },
        }
    }
}

fn merge_opt(a: Option<Extremum>, b: Option<Extremum>, pick: fn(Extremum, Extremum) -> Extremum) -> Option<Extremum> {
    match (a, b) {
        (Some(a), Some(b)) => Some(pick(a, b)),
        (a, b) => a.or(b),
    }
}

/// Outcome of one chunk; this is also the checkpoint record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkResult {
    #[serde(rename = "start", with = "crate::decimal::as_string")]
    pub chunk_start: BigUint,
    #[serde(rename = "end", with = "crate::decimal::as_string")]
    pub chunk_end: BigUint,
    pub max_res: Option<ResidueTriple>,
    #[serde(with = "opt_biguint")]
    pub argmax: Option<BigUint>,
    pub min_res: Option<ResidueTriple>,
    #[serde(with = "opt_biguint")]
    pub argmin: Option<BigUint>,
    pub violations: Vec<Violation>,
    #[serde(rename = "count")]
    pub count_checked: u64,
}

mod opt_biguint {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| crate::decimal::parse_biguint(&s).map_err(serde::de::Error::custom))
            .transpose()
    }
}

impl ChunkResult {
    fn max(&self) -> Option<Extremum> {
        Some(Extremum {
            residue: self.max_res.clone()?,
            n: self.argmax.clone()?,
        })
    }

    fn min(&self) -> Option<Extremum> {
        Some(Extremum {
            residue: self.min_res.clone()?,
            n: self.argmin.clone()?,
        })
    }

    fn validate(&self) -> std::result::Result<(), String> {
        if self.chunk_end < self.chunk_start {
            return Err("end below start".into());
        }
        let width = &self.chunk_end - &self.chunk_start + 1u32;
        if width != BigUint::from(self.count_checked) {
            return Err(format!("count {} does not match range width {width}", self.count_checked));
        }
        if self.max_res.is_some() != self.argmax.is_some() || self.min_res.is_some() != self.argmin.is_some() {
            return Err("extremum without its argument".into());
        }
        Ok(())
    }
}

/// Per-worker state that outlives a single chunk.
#[derive(Default)]
struct ChunkContext<'a> {
    cache: Option<&'a OddStatsTable>,
}

/// Runs every enabled check on every N in `[lo, hi]`.
pub fn scan_chunk(lo: &BigUint, hi: &BigUint, checks: &BTreeSet<Check>, step_budget: u64) -> Result<ChunkResult> {
    scan_chunk_with(lo, hi, checks, step_budget, &ChunkContext::default())
}

fn scan_chunk_with(
    lo: &BigUint,
    hi: &BigUint,
    checks: &BTreeSet<Check>,
    step_budget: u64,
    ctx: &ChunkContext<'_>,
) -> Result<ChunkResult> {
    if lo.is_zero() {
        return Err(Error::ZeroInput);
    }
    if hi < lo {
        return Err(Error::InvalidConfig(format!("chunk end {hi} below start {lo}")));
    }
    let mut violations = Vec::new();
    let mut max: Option<(Extremum, BigUint)> = None;
    let mut min: Option<(Extremum, BigUint)> = None;
    let mut count = 0u64;

    let mut n = lo.clone();
    while &n <= hi {
        count += 1;
        match check_one(&n, checks, step_budget, ctx, &mut violations) {
            Ok(Some((r, den))) => {
                let replace_max = match &max {
                    None => true,
                    Some((m, m_den)) => {
                        exact::compare_with_denominators(&r, &den, &m.residue, m_den).is_gt()
                    }
                };
                if replace_max {
                    max = Some((Extremum { residue: r.clone(), n: n.clone() }, den.clone()));
                }
                let replace_min = match &min {
                    None => true,
                    Some((m, m_den)) => {
                        exact::compare_with_denominators(&r, &den, &m.residue, m_den).is_lt()
                    }
                };
                if replace_min {
                    min = Some((Extremum { residue: r, n: n.clone() }, den));
                }
            }
            Ok(None) => {}
            Err(e) => return Err(e),
        }
        n += 1u32;
    }
    violations.sort();
    let (max_res, argmax) = max.map(|(e, _)| (e.residue, e.n)).unzip();
    let (min_res, argmin) = min.map(|(e, _)| (e.residue, e.n)).unzip();
    Ok(ChunkResult {
        chunk_start: lo.clone(),
        chunk_end: hi.clone(),
        max_res,
        argmax,
        min_res,
        argmin,
        violations,
        count_checked: count,
    })
}

/// Checks one N. Returns its residue and residue denominator, or `None` when
/// the step budget was exceeded (recorded as a violation).
fn check_one(
    n: &BigUint,
    checks: &BTreeSet<Check>,
    step_budget: u64,
    ctx: &ChunkContext<'_>,
    violations: &mut Vec<Violation>,
) -> Result<Option<(ResidueTriple, BigUint)>> {
    let mut record = |check: &str, detail: String| {
        violations.push(Violation {
            n: n.clone(),
            check: check.to_string(),
            detail,
        })
    };

    let counts = match trajectory::trajectory_stats_cached(n, step_budget, ctx.cache) {
        Ok(c) => c,
        Err(e @ Error::BudgetExceeded { .. }) => {
            record(BUDGET_VIOLATION, e.to_string());
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    let (s, n_odd) = trajectory::odd_part(n)?;
    let odd_counts = trajectory::StepCounts::new(counts.total - s, counts.odd, counts.even - s)?;
    let r = exact::residue_from_counts(n_odd, odd_counts);
    let den = r.denominator();

    for &check in checks {
        match check {
            Check::Lower => {
                let out = exact::lower_outcome(n, &r, &den);
                let pow2 = r.n_odd().is_one() && r.o() == 0;
                if out.verdict == Verdict::Fail {
                    record(check.name(), out.detail);
                } else if out.tight != pow2 {
                    record(check.name(), format!("equality={} but power of two={pow2}", out.tight));
                }
            }
            Check::Wrc => {
                let out = exact::wrc_outcome(n, &r, &den);
                if out.verdict == Verdict::Fail {
                    record(check.name(), out.detail);
                }
            }
            Check::Formulas => {
                let out = exact::predict_all(n, counts)?.outcome();
                if out.verdict == Verdict::Fail {
                    record(check.name(), out.detail);
                }
            }
            Check::Theorem2 => {
                let out = exact::theorem2_outcome(n, &r, &den);
                if out.verdict == Verdict::Fail {
                    record(check.name(), out.detail);
                }
            }
            Check::ProductForm => match exact::residue_product_parts(r.n_odd(), step_budget) {
                Ok((num, prod_den, walked)) => {
                    // num/prod_den == 2^E/den
                    if walked != odd_counts {
                        record(check.name(), format!("branch walk gave {walked:?}, expected {odd_counts:?}"));
                    } else if num * &den != prod_den << r.e() {
                        record(check.name(), format!("branch product differs from {r}"));
                    }
                }
                Err(e @ Error::BudgetExceeded { .. }) => record(BUDGET_VIOLATION, e.to_string()),
                Err(e) => return Err(e),
            },
        }
    }
    Ok(Some((r, den)))
}

/// Merged outcome over a set of disjoint ranges.
#[derive(Debug, Clone)]
pub struct ScanReport {
    /// Covered ranges, sorted, with adjacent ranges coalesced.
    pub ranges: Vec<(BigUint, BigUint)>,
    pub count_checked: u64,
    pub max: Option<Extremum>,
    pub min: Option<Extremum>,
    /// Sorted by N, then check name.
    pub violations: Vec<Violation>,
    /// Wall-clock time; excluded from equality.
    pub duration: Duration,
}

impl PartialEq for ScanReport {
    fn eq(&self, other: &Self) -> bool {
        self.ranges == other.ranges
            && self.count_checked == other.count_checked
            && self.max == other.max
            && self.min == other.min
            && self.violations == other.violations
    }
}

impl Eq for ScanReport {}

impl Default for ScanReport {
    fn default() -> Self {
        ScanReport::empty()
    }
}

impl From<ChunkResult> for ScanReport {
    fn from(c: ChunkResult) -> Self {
        let max = c.max();
        let min = c.min();
        let mut violations = c.violations;
        violations.sort();
        ScanReport {
            ranges: vec![(c.chunk_start, c.chunk_end)],
            count_checked: c.count_checked,
            max,
            min,
            violations,
            duration: Duration::ZERO,
        }
    }
}

impl ScanReport {
    /// Identity element of [`merge`].
    pub fn empty() -> Self {
        ScanReport {
            ranges: Vec::new(),
            count_checked: 0,
            max: None,
            min: None,
            violations: Vec::new(),
            duration: Duration::ZERO,
        }
    }

    /// Combines two reports over disjoint ranges. Associative and
    /// commutative; ties in the extremal residues go to the smaller N.
    pub fn merge(self, other: ScanReport) -> Result<ScanReport> {
        for (lo, hi) in &other.ranges {
            if let Some((a, b)) = self.ranges.iter().find(|(a, b)| a <= hi && lo <= b) {
                return Err(Error::OverlappingRanges(format!("{a}, {b}"), format!("{lo}, {hi}")));
            }
        }
        let mut ranges = self.ranges;
        ranges.extend(other.ranges);
        ranges.sort();
        let mut coalesced: Vec<(BigUint, BigUint)> = Vec::with_capacity(ranges.len());
        for (lo, hi) in ranges {
            match coalesced.last_mut() {
                Some((_, last_hi)) if &*last_hi + 1u32 == lo => *last_hi = hi,
                _ => coalesced.push((lo, hi)),
            }
        }
        let mut violations = self.violations;
        violations.extend(other.violations);
        violations.sort();
        Ok(ScanReport {
            ranges: coalesced,
            count_checked: self.count_checked + other.count_checked,
            max: merge_opt(self.max, other.max, Extremum::pick_max),
            min: merge_opt(self.min, other.min, Extremum::pick_min),
            violations,
            duration: self.duration.max(other.duration),
        })
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violation counts per check name.
    pub fn violation_totals(&self) -> BTreeMap<String, u64> {
        let mut totals = BTreeMap::new();
        for v in &self.violations {
            *totals.entry(v.check.clone()).or_insert(0) += 1;
        }
        totals
    }

    /// Whether every residue in the scanned ranges lies in `[1, 63/50)`.
    pub fn residues_in_band(&self) -> bool {
        let (num, den) = BAND_UPPER;
        let min_ok = self
            .min
            .as_ref()
            .is_some_and(|m| exact::residue_compare(&m.residue, &ResidueTriple::one()).is_ge());
        let max_ok = self.max.as_ref().is_some_and(|m| {
            exact::residue_below(&m.residue, &m.residue.denominator(), num, den)
        });
        min_ok && max_ok
    }

    /// Structured form; `include_timing = false` gives a byte-stable
    /// rendering for comparisons.
    pub fn to_json(&self, include_timing: bool) -> serde_json::Value {
        let extremum = |e: &Option<Extremum>| match e {
            Some(e) => json!({
                "n": e.n.to_string(),
                "e": e.residue.e(),
                "o": e.residue.o(),
                "n_odd": e.residue.n_odd().to_string(),
                "decimal": e.residue.decimal(12),
            }),
            None => serde_json::Value::Null,
        };
        let ranges: Vec<_> = self
            .ranges
            .iter()
            .map(|(a, b)| json!([a.to_string(), b.to_string()]))
            .collect();
        let mut v = json!({
            "ranges": ranges,
            "count_checked": self.count_checked,
            "max": extremum(&self.max),
            "min": extremum(&self.min),
            "residues_in_band": self.residues_in_band(),
            "violation_totals": self.violation_totals(),
            "violations": self.violations,
        });
        if include_timing {
            v["duration_ms"] = json!(self.duration.as_millis() as u64);
        }
        v
    }
}

/// Functional form of [`ScanReport::merge`].
pub fn merge(a: ScanReport, b: ChunkResult) -> Result<ScanReport> {
    a.merge(ScanReport::from(b))
}

/// Result of a possibly interrupted scan.
#[derive(Debug, Clone)]
pub struct ScanProgress {
    pub report: ScanReport,
    pub chunks_total: usize,
    pub chunks_resumed: usize,
    pub chunks_computed: usize,
}

impl ScanProgress {
    pub fn is_complete(&self) -> bool {
        self.chunks_resumed + self.chunks_computed == self.chunks_total
    }
}

fn load_checkpoint(cfg: &ScanConfig, total: usize) -> Result<BTreeMap<usize, ChunkResult>> {
    let mut done = BTreeMap::new();
    let Some(path) = &cfg.checkpoint_path else {
        return Ok(done);
    };
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(done),
        Err(e) => return Err(e.into()),
    };
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let bad = |reason: String| Error::Checkpoint {
            line: line_no,
            reason,
        };
        let rec: ChunkResult = serde_json::from_str(&line).map_err(|e| bad(e.to_string()))?;
        rec.validate().map_err(&bad)?;
        if rec.chunk_start < cfg.start || rec.chunk_end > cfg.end {
            return Err(bad(format!(
                "chunk [{}, {}] outside scan range",
                rec.chunk_start, rec.chunk_end
            )));
        }
        let offset = &rec.chunk_start - &cfg.start;
        let index = (&offset / cfg.chunk_size)
            .to_usize()
            .filter(|&i| i < total && (&offset % cfg.chunk_size).is_zero())
            .ok_or_else(|| bad("chunk does not align with the configured chunk size".into()))?;
        if cfg.chunk_bounds(index) != (rec.chunk_start.clone(), rec.chunk_end.clone()) {
            return Err(bad("chunk does not align with the configured chunk size".into()));
        }
        if done.insert(index, rec).is_some() {
            return Err(bad("duplicate chunk record".into()));
        }
    }
    Ok(done)
}

/// Runs the scan, computing at most `max_new_chunks` chunks that are not
/// already in the checkpoint.
pub fn run_scan_limited(cfg: &ScanConfig, max_new_chunks: Option<usize>) -> Result<ScanProgress> {
    cfg.validate()?;
    let started = Instant::now();
    let total = cfg.chunk_count()?;
    let mut results: BTreeMap<usize, ChunkResult> = load_checkpoint(cfg, total)?;
    let resumed = results.len();

    let pending: Vec<usize> = (0..total).filter(|i| !results.contains_key(i)).collect();
    let todo = max_new_chunks.map_or(pending.len(), |m| m.min(pending.len()));

    let cache = match cfg.stats_cache_limit {
        Some(limit) if todo > 0 => Some(OddStatsTable::build(limit, cfg.step_budget)?),
        _ => None,
    };

    let mut log = match &cfg.checkpoint_path {
        Some(path) if todo > 0 => Some(OpenOptions::new().create(true).append(true).open(path)?),
        _ => None,
    };

    let next = AtomicUsize::new(0);
    let mut computed = 0usize;
    let outcome: Result<()> = std::thread::scope(|scope| {
        let (tx, rx) = mpsc::channel::<(usize, Result<ChunkResult>)>();
        for _ in 0..cfg.workers.min(todo.max(1)) {
            let tx = tx.clone();
            let (next, pending, cache) = (&next, &pending, cache.as_ref());
            scope.spawn(move || {
                let ctx = ChunkContext { cache };
                loop {
                    let slot = next.fetch_add(1, AtomicOrdering::Relaxed);
                    if slot >= todo {
                        break;
                    }
                    let index = pending[slot];
                    let (lo, hi) = cfg.chunk_bounds(index);
                    let res = scan_chunk_with(&lo, &hi, &cfg.checks, cfg.step_budget, &ctx);
                    let failed = res.is_err();
                    if tx.send((index, res)).is_err() || failed {
                        break;
                    }
                }
            });
        }
        drop(tx);
        for (index, res) in rx {
            let chunk = match res {
                Ok(c) => c,
                Err(e) => {
                    // stop handing out work
                    next.store(todo, AtomicOrdering::Relaxed);
                    return Err(e);
                }
            };
            if let Some(file) = log.as_mut() {
                let mut line = serde_json::to_string(&chunk).expect("chunk serializes");
                line.push('\n');
                file.write_all(line.as_bytes())?;
                file.flush()?;
            }
            results.insert(index, chunk);
            computed += 1;
        }
        Ok(())
    });
    outcome?;

    let mut report = ScanReport::empty();
    for (_, chunk) in results {
        report = merge(report, chunk)?;
    }
    report.duration = started.elapsed();
    Ok(ScanProgress {
        report,
        chunks_total: total,
        chunks_resumed: resumed,
        chunks_computed: computed,
    })
}

/// Scans the whole configured range, resuming from the checkpoint if one
/// exists.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    Ok(run_scan_limited(cfg, None)?.report)
}

/// The N with the largest residue in the range (smallest N on ties), its
/// residue and the residue truncated to 12 decimals.
pub fn find_max_residue(cfg: &ScanConfig) -> Result<(BigUint, ResidueTriple, String)> {
    let report = run_scan(cfg)?;
    let max = report
        .max
        .ok_or_else(|| Error::InvalidConfig("no residue computed in range".into()))?;
    let decimal = max.residue.decimal(12);
    Ok((max.n, max.residue, decimal))
}

/// Writes `N,D,O,E,residue` rows for every N in the configured range, with
/// the residue truncated to 12 decimals. Rows for N over the step budget
/// carry empty counts and `budget_exceeded`.
pub fn write_csv_report<W: Write>(cfg: &ScanConfig, out: &mut W) -> Result<()> {
    cfg.validate()?;
    writeln!(out, "N,D,O,E,residue")?;
    let mut n = cfg.start.clone();
    while n <= cfg.end {
        match exact::residue_of(&n, cfg.step_budget) {
            Ok(r) => {
                let s = n.trailing_zeros().unwrap_or(0);
                writeln!(
                    out,
                    "{n},{},{},{},{}",
                    r.e() + r.o() + s,
                    r.o(),
                    r.e() + s,
                    r.decimal(12)
                )?;
            }
            Err(Error::BudgetExceeded { .. }) => writeln!(out, "{n},,,,budget_exceeded")?,
            Err(e) => return Err(e),
        }
        n += 1u32;
    }
    Ok(())
}
