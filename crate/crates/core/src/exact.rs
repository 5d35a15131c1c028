//! Exact residue arithmetic and integer-only verdicts.
//!
//! `Res(N) = 2^E / (3^O * N)` is kept as a [`ResidueTriple`] `(E, O, N_odd)`.
//! Because `N = 2^s * N_odd` adds exactly `s` even steps, the triple of `N`
//! and of its odd part coincide, so only the odd part is ever stored.
//!
//! Every check in this module reduces to comparing two big integers. The
//! only floating point is the starting guess of the logarithm searches in
//! [`floor_log_ratio`] and [`ceil_log_ratio`], which the exact bracketing
//! loop then corrects.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::trajectory::{self, StepCounts};
use crate::{CheckOutcome, Error, Result, Verdict};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Canonical exact residue `2^e / (3^o * n_odd)` with `n_odd` odd.
///
/// Equality is structural. Two different triples can denote the same value
/// (`(e, 1, 3)` and `(e, 2, 1)`), so order by value with [`residue_compare`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct ResidueTriple {
    e: u64,
    o: u64,
    #[serde(with = "crate::decimal::as_string")]
    n_odd: BigUint,
}

#[derive(Deserialize)]
struct RawTriple {
    e: u64,
    o: u64,
    #[serde(with = "crate::decimal::as_string")]
    n_odd: BigUint,
}

impl TryFrom<RawTriple> for ResidueTriple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        ResidueTriple::new(raw.e, raw.o, raw.n_odd)
    }
}

impl ResidueTriple {
    pub fn new(e: u64, o: u64, n_odd: BigUint) -> Result<Self> {
        if n_odd.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !n_odd.bit(0) {
            return Err(Error::NonCanonical(n_odd));
        }
        Ok(ResidueTriple { e, o, n_odd })
    }

    /// The residue 1 of every power of two.
    pub fn one() -> Self {
        ResidueTriple {
            e: 0,
            o: 0,
            n_odd: BigUint::one(),
        }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn o(&self) -> u64 {
        self.o
    }

    pub fn n_odd(&self) -> &BigUint {
        &self.n_odd
    }

    /// `2^e`
    pub fn numerator(&self) -> BigUint {
        BigUint::one() << self.e
    }

    /// `3^o * n_odd`
    pub fn denominator(&self) -> BigUint {
        pow3(self.o) * &self.n_odd
    }

    pub fn to_rational(&self) -> ExactRational {
        BigRational::new(
            BigInt::from(self.numerator()),
            BigInt::from(self.denominator()),
        )
    }

    pub fn decimal(&self, digits: u32) -> String {
        residue_decimal(self, digits)
    }
}

impl fmt::Display for ResidueTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{}/(3^{}*{})", self.e, self.o, self.n_odd)
    }
}

const POW3_CACHE_MAX: u64 = 4096;

thread_local! {
    static POW3: RefCell<Vec<BigUint>> = RefCell::new(vec![BigUint::one()]);
}

/// `3^k`, served from a per-thread table for small exponents.
pub(crate) fn pow3(k: u64) -> BigUint {
    if k > POW3_CACHE_MAX {
        return BigUint::from(3u32).pow(k as u32);
    }
    POW3.with(|cell| {
        let mut table = cell.borrow_mut();
        while table.len() as u64 <= k {
            let next = table.last().expect("table starts with 3^0") * 3u32;
            table.push(next);
        }
        table[k as usize].clone()
    })
}

fn pow_base(base: u32, k: u64) -> BigUint {
    match base {
        2 => BigUint::one() << k,
        3 => pow3(k),
        6 => pow3(k) << k,
        _ => BigUint::from(base).pow(u32::try_from(k).expect("exponent fits u32")),
    }
}

/// Residue of `n`, as the triple of its odd part.
pub fn residue_of(n: &BigUint, step_budget: u64) -> Result<ResidueTriple> {
    let (_, n_odd) = trajectory::odd_part(n)?;
    let counts = trajectory::trajectory_stats(&n_odd, step_budget)?;
    Ok(residue_from_counts(n_odd, counts))
}

/// Triple from the odd part of N and the step counts of that odd part.
pub fn residue_from_counts(n_odd: BigUint, odd_counts: StepCounts) -> ResidueTriple {
    debug_assert!(n_odd.bit(0));
    ResidueTriple {
        e: odd_counts.even,
        o: odd_counts.odd,
        n_odd,
    }
}

/// Orders two residues by exact value via
/// `2^{a.e} * 3^{b.o} * b.n_odd` vs `2^{b.e} * 3^{a.o} * a.n_odd`.
pub fn residue_compare(a: &ResidueTriple, b: &ResidueTriple) -> Ordering {
    compare_with_denominators(a, &a.denominator(), b, &b.denominator())
}

/// [`residue_compare`] when both denominators are already known.
pub(crate) fn compare_with_denominators(
    a: &ResidueTriple,
    a_den: &BigUint,
    b: &ResidueTriple,
    b_den: &BigUint,
) -> Ordering {
    if a.e == b.e && a.o == b.o && a.n_odd == b.n_odd {
        return Ordering::Equal;
    }
    // Cancel the common power of two before multiplying out.
    let common = a.e.min(b.e);
    let lhs = b_den << (a.e - common);
    let rhs = a_den << (b.e - common);
    lhs.cmp(&rhs)
}

/// Truncated (not rounded) decimal expansion with exactly `digits`
/// fractional digits.
pub fn residue_decimal(r: &ResidueTriple, digits: u32) -> String {
    let scaled = (r.numerator() * BigUint::from(10u32).pow(digits)) / r.denominator();
    let mut s = scaled.to_string();
    let width = digits as usize + 1;
    if s.len() < width {
        s = format!("{}{}", "0".repeat(width - s.len()), s);
    }
    if digits > 0 {
        s.insert(s.len() - digits as usize, '.');
    }
    s
}

/// Exact product of `(1 + 1/(3 N_j))` over the odd branch of `n_odd`.
pub fn residue_product(n_odd: &BigUint, step_budget: u64) -> Result<ExactRational> {
    let (num, den, _) = residue_product_parts(n_odd, step_budget)?;
    Ok(BigRational::new(num.into(), den.into()))
}

/// Unreduced numerator `prod(3 N_j + 1)` and denominator `prod(3 N_j)` of
/// the branch product, plus the step counts of `n_odd`.
pub fn residue_product_parts(
    n_odd: &BigUint,
    step_budget: u64,
) -> Result<(BigUint, BigUint, StepCounts)> {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let counts = trajectory::walk_odd_branch(n_odd, step_budget, |v, _| match v {
        trajectory::OddValue::Small(v) => {
            // 3v + 1 fits: the walker keeps v <= (u128::MAX - 1) / 3.
            num *= BigUint::from(3 * v + 1);
            den *= BigUint::from(3 * v);
        }
        trajectory::OddValue::Big(v) => {
            let t = v * 3u32;
            num *= &t + 1u32;
            den *= t;
        }
    })?;
    Ok((num, den, counts))
}

/// Lower bound `Res(N) >= 1`: passes iff `3^O * n_odd <= 2^E`, tight
/// exactly at powers of two.
pub fn check_lower(n: &BigUint, step_budget: u64) -> Result<CheckOutcome> {
    let r = residue_of(n, step_budget)?;
    Ok(lower_outcome(n, &r, &r.denominator()))
}

pub(crate) fn lower_outcome(n: &BigUint, r: &ResidueTriple, den: &BigUint) -> CheckOutcome {
    let ord = compare_power_of_two(r.e, den);
    let verdict = if ord == Ordering::Less {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    let out = CheckOutcome::new("lower", n.to_string(), verdict).tight(ord == Ordering::Equal);
    if verdict == Verdict::Fail {
        out.with_detail(format!("2^E < 3^O*n_odd for {r}"))
    } else {
        out
    }
}

/// Weak residue bound `Res(N) <= 2`: passes iff `2^E <= 2 * 3^O * n_odd`.
pub fn check_wrc(n: &BigUint, step_budget: u64) -> Result<CheckOutcome> {
    let r = residue_of(n, step_budget)?;
    Ok(wrc_outcome(n, &r, &r.denominator()))
}

pub(crate) fn wrc_outcome(n: &BigUint, r: &ResidueTriple, den: &BigUint) -> CheckOutcome {
    // 2^E <= 2*den  <=>  2^(E-1) <= den, trivially true for E = 0
    let holds = r.e == 0 || compare_power_of_two(r.e - 1, den) != Ordering::Greater;
    if holds {
        CheckOutcome::new("wrc", n.to_string(), Verdict::Pass)
    } else {
        CheckOutcome::new("wrc", n.to_string(), Verdict::Fail)
            .with_detail(format!("residue {} > 2", r.decimal(12)))
    }
}

/// Residue upper bound `Res(N) < O^(1/9)` for `O >= 20`, decided as
/// `2^(9E) < O * (3^O * n_odd)^9`.
pub fn check_theorem2(n: &BigUint, step_budget: u64) -> Result<CheckOutcome> {
    let r = residue_of(n, step_budget)?;
    Ok(theorem2_outcome(n, &r, &r.denominator()))
}

/// Smallest odd-step count the `O^(1/9)` bound applies to.
pub const THEOREM2_MIN_ODD: u64 = 20;

pub(crate) fn theorem2_outcome(n: &BigUint, r: &ResidueTriple, den: &BigUint) -> CheckOutcome {
    if r.o < THEOREM2_MIN_ODD {
        return CheckOutcome::new("theorem2", n.to_string(), Verdict::NotApplicable)
            .with_detail(format!("O={} < {THEOREM2_MIN_ODD}", r.o));
    }
    let rhs = den.pow(9) * r.o;
    let lhs_bits = 9 * r.e + 1;
    let holds = match lhs_bits.cmp(&rhs.bits()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => (BigUint::one() << (9 * r.e)) < rhs,
    };
    let verdict = if holds { Verdict::Pass } else { Verdict::Fail };
    CheckOutcome::new("theorem2", n.to_string(), verdict).with_detail(format!("O={}", r.o))
}

/// `2^k` compared against `x`.
fn compare_power_of_two(k: u64, x: &BigUint) -> Ordering {
    let bits = x.bits();
    // 2^k has k + 1 bits.
    match (k + 1).cmp(&bits) {
        Ordering::Equal => {
            if x.trailing_zeros() == Some(k) {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
        other => other,
    }
}

/// `Res < num/den` test used for band reports: `2^E * den < num * 3^O * n_odd`
/// (strict) as integers.
pub(crate) fn residue_below(r: &ResidueTriple, r_den: &BigUint, num: u64, den: u64) -> bool {
    (BigUint::from(den) << r.e) < r_den * num
}

/// Floor of `log_base(num/den)` for any positive ratio; also reports whether
/// `base^k * den == num` exactly.
///
/// A float estimate picks the starting `k`; exact comparisons of
/// `base^k * den` against `num` then walk it to the bracket
/// `base^k * den <= num < base^(k+1) * den`.
fn floor_log(base: u32, num: &BigUint, den: &BigUint) -> (i64, bool) {
    assert!(base >= 2, "log base must be at least 2");
    assert!(!num.is_zero() && !den.is_zero(), "log ratio of zero");

    let cmp_at = |k: i64| -> Ordering {
        if k >= 0 {
            (pow_base(base, k as u64) * den).cmp(num)
        } else {
            den.cmp(&(pow_base(base, k.unsigned_abs()) * num))
        }
    };

    let estimate = (approx_log2(num) - approx_log2(den)) / f64::from(base).log2();
    let mut k = estimate.floor() as i64;
    loop {
        match cmp_at(k) {
            Ordering::Greater => k -= 1,
            Ordering::Equal => return (k, true),
            Ordering::Less => match cmp_at(k + 1) {
                Ordering::Greater => return (k, false),
                Ordering::Equal => return (k + 1, true),
                Ordering::Less => k += 1,
            },
        }
    }
}

fn approx_log2(x: &BigUint) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_u64().expect("fits in 64 bits") as f64;
    top.log2() + shift as f64
}

/// Largest `k >= 0` with `base^k * den <= num`.
pub fn floor_log_ratio(base: u32, num: &BigUint, den: &BigUint) -> Result<u64> {
    check_log_args(base, num, den)?;
    let (k, _) = floor_log(base, num, den);
    Ok(k as u64)
}

/// Smallest `k >= 0` with `base^k * den >= num`.
pub fn ceil_log_ratio(base: u32, num: &BigUint, den: &BigUint) -> Result<u64> {
    check_log_args(base, num, den)?;
    Ok(ceil_log(base, num, den) as u64)
}

fn check_log_args(base: u32, num: &BigUint, den: &BigUint) -> Result<()> {
    if base < 2 {
        return Err(Error::InvalidConfig(format!("log base {base} < 2")));
    }
    if den.is_zero() || num < den {
        return Err(Error::RatioBelowOne);
    }
    Ok(())
}

fn ceil_log(base: u32, num: &BigUint, den: &BigUint) -> i64 {
    let (k, exact) = floor_log(base, num, den);
    if exact {
        k
    } else {
        k + 1
    }
}

/// Names of the six step-count formulas, in prediction order.
pub const FORMULA_NAMES: [&str; 6] = [
    "O=floor(log6(2^D/N))",
    "E=ceil(log6(3^D*N))",
    "D=ceil(log2(6^O*N))",
    "E=ceil(log2(3^O*N))",
    "D=floor(log3(6^E/N))",
    "O=floor(log3(2^E/N))",
];

/// The six step-count predictions for one N against its true counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaCheck {
    #[serde(serialize_with = "crate::decimal::as_string::serialize")]
    pub n: BigUint,
    pub counts: StepCounts,
    pub predicted: [i64; 6],
    pub matches: [bool; 6],
}

impl FormulaCheck {
    pub fn all_match(&self) -> bool {
        self.matches.iter().all(|&m| m)
    }

    /// The true count each prediction is compared against.
    pub fn expected(&self) -> [u64; 6] {
        let c = self.counts;
        [c.odd, c.even, c.total, c.even, c.total, c.odd]
    }

    pub fn outcome(&self) -> CheckOutcome {
        let subject = self.n.to_string();
        if self.all_match() {
            return CheckOutcome::new("formulas", subject, Verdict::Pass);
        }
        let expected = self.expected();
        let misses: Vec<String> = (0..6)
            .filter(|&i| !self.matches[i])
            .map(|i| format!("{} predicted {} actual {}", FORMULA_NAMES[i], self.predicted[i], expected[i]))
            .collect();
        CheckOutcome::new("formulas", subject, Verdict::Fail).with_detail(misses.join("; "))
    }
}

/// Evaluates all six step-count formulas exactly for `n` and compares each
/// against `counts`.
///
/// Predictions are signed: if a residue bound were ever violated a ratio
/// could drop below one, and the prediction is still reported rather than
/// rejected.
pub fn predict_all(n: &BigUint, counts: StepCounts) -> Result<FormulaCheck> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    StepCounts::new(counts.total, counts.odd, counts.even)?;
    let StepCounts {
        total: d,
        odd: o,
        even: e,
    } = counts;
    let one = BigUint::one();

    let pow2_d = &one << d;
    let pow3_d_n = pow3(d) * n;
    let pow3_o_n = pow3(o) * n;
    let pow6_o_n = &pow3_o_n << o;
    let pow2_e = &one << e;
    let pow6_e = pow3(e) << e;

    let predicted = [
        floor_log(6, &pow2_d, n).0,
        ceil_log(6, &pow3_d_n, &one),
        ceil_log(2, &pow6_o_n, &one),
        ceil_log(2, &pow3_o_n, &one),
        floor_log(3, &pow6_e, n).0,
        floor_log(3, &pow2_e, n).0,
    ];
    let mut check = FormulaCheck {
        n: n.clone(),
        counts,
        predicted,
        matches: [false; 6],
    };
    let expected = check.expected();
    for i in 0..6 {
        check.matches[i] = i64::try_from(expected[i]) == Ok(predicted[i]);
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trajectory::DEFAULT_STEP_BUDGET;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn triple(e: u64, o: u64, n: u64) -> ResidueTriple {
        ResidueTriple::new(e, o, big(n)).unwrap()
    }

    /// Linear-search oracle: largest k with base^k * den <= num.
    fn floor_log_oracle(base: u32, num: &BigUint, den: &BigUint) -> u64 {
        let mut k = 0;
        let mut p = den.clone();
        loop {
            p *= base;
            if &p > num {
                return k;
            }
            k += 1;
        }
    }

    #[test]
    fn residue_examples() {
        let r7 = residue_of(&big(7), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(r7, triple(11, 5, 7));
        assert_eq!(r7.to_rational(), BigRational::new(2048.into(), 1701.into()));
        assert_eq!(residue_of(&big(16), DEFAULT_STEP_BUDGET).unwrap(), ResidueTriple::one());
        assert_eq!(ResidueTriple::one().to_rational(), BigRational::one());
        assert_eq!(residue_of(&big(14), DEFAULT_STEP_BUDGET).unwrap(), r7);
    }

    #[test]
    fn canonical_form_is_enforced() {
        assert!(matches!(ResidueTriple::new(10, 0, big(64)), Err(Error::NonCanonical(_))));
        assert!(matches!(ResidueTriple::new(1, 0, big(0)), Err(Error::ZeroInput)));
        let raw = r#"{"e":10,"o":0,"n_odd":"64"}"#;
        assert!(serde_json::from_str::<ResidueTriple>(raw).is_err());
        let ok: ResidueTriple = serde_json::from_str(r#"{"e":11,"o":5,"n_odd":"7"}"#).unwrap();
        assert_eq!(ok, triple(11, 5, 7));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(residue_compare(&triple(11, 5, 7), &triple(0, 0, 1)), Ordering::Greater);
        assert_eq!(residue_compare(&triple(0, 0, 1), &triple(11, 5, 7)), Ordering::Less);
        // (4, 0, 1) denotes 16, not 1
        assert_eq!(residue_compare(&triple(11, 5, 7), &triple(4, 0, 1)), Ordering::Less);
        assert_eq!(residue_compare(&triple(11, 5, 7), &triple(11, 5, 7)), Ordering::Equal);
        // same value, different triples
        assert_eq!(residue_compare(&triple(7, 1, 3), &triple(7, 2, 1)), Ordering::Equal);
        assert_eq!(residue_compare(&triple(9, 2, 1), &triple(7, 0, 1)), Ordering::Less);
    }

    #[test]
    fn decimal_examples() {
        let r993 = residue_of(&big(993), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(residue_decimal(&r993, 9), "1.253142144");
        let r27 = residue_of(&big(27), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(residue_decimal(&r27, 4), "1.1988");
        assert_eq!(residue_decimal(&triple(0, 0, 1), 3), "1.000");
        assert_eq!(residue_decimal(&triple(4, 0, 1), 3), "16.000");
        assert_eq!(residue_decimal(&triple(0, 1, 1), 3), "0.333");
        assert_eq!(residue_decimal(&triple(3, 0, 1), 0), "8");
        // 2/3 truncates, does not round
        assert_eq!(residue_decimal(&triple(1, 1, 1), 2), "0.66");
    }

    #[test]
    fn product_examples() {
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(residue_product(&big(7), DEFAULT_STEP_BUDGET).unwrap(), r(2048, 1701));
        // oracle: multiply the factors over the branch (7, 11, 17, 13, 5)
        let oracle = [7i64, 11, 17, 13, 5]
            .iter()
            .fold(r(1, 1), |acc, &v| acc * r(3 * v + 1, 3 * v));
        assert_eq!(oracle, r(2048, 1701));
        assert_eq!(residue_product(&big(1), DEFAULT_STEP_BUDGET).unwrap(), r(1, 1));
        assert_eq!(residue_product(&big(5), DEFAULT_STEP_BUDGET).unwrap(), r(16, 15));
        assert!(residue_product(&big(6), DEFAULT_STEP_BUDGET).is_err());
    }

    #[test]
    fn lower_examples() {
        let o = check_lower(&big(7), DEFAULT_STEP_BUDGET).unwrap();
        assert!(o.verdict.is_pass() && !o.tight);
        let o = check_lower(&big(64), DEFAULT_STEP_BUDGET).unwrap();
        assert!(o.verdict.is_pass() && o.tight);
        let o = check_lower(&big(27), DEFAULT_STEP_BUDGET).unwrap();
        assert!(o.verdict.is_pass() && !o.tight);
        // integer oracle for 27
        assert!(BigUint::from(3u32).pow(41) * 27u32 < BigUint::one() << 70u32);
    }

    #[test]
    fn lower_fails_on_a_fabricated_triple() {
        let r = triple(1, 1, 1); // 2/3
        let out = lower_outcome(&big(1), &r, &r.denominator());
        assert_eq!(out.verdict, Verdict::Fail);
    }

    #[test]
    fn wrc_examples() {
        for n in [993u64, 27, 1, 2, 1 << 40] {
            assert!(check_wrc(&big(n), DEFAULT_STEP_BUDGET).unwrap().verdict.is_pass());
        }
        let r = triple(5, 0, 15); // 32/15 > 2
        assert_eq!(wrc_outcome(&big(15), &r, &r.denominator()).verdict, Verdict::Fail);
        let r = triple(2, 0, 1); // exactly 4 > 2
        assert_eq!(wrc_outcome(&big(1), &r, &r.denominator()).verdict, Verdict::Fail);
        let r = triple(1, 0, 1); // exactly 2
        assert_eq!(wrc_outcome(&big(1), &r, &r.denominator()).verdict, Verdict::Pass);
    }

    #[test]
    fn theorem2_examples() {
        let o = check_theorem2(&big(27), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(o.verdict, Verdict::Pass);
        let o = check_theorem2(&big(7), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(o.verdict, Verdict::NotApplicable);
        let o = check_theorem2(&big(993), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(o.verdict, Verdict::Pass);
        // direct oracle for 993: (E, O) = (61, 32)
        let lhs = BigUint::one() << (9 * 61u32);
        let rhs = BigUint::from(3u32).pow(9 * 32) * big(993).pow(9) * 32u32;
        assert!(lhs < rhs);
        // 2^(9*20)/(3^(9*20)) * ... fabricated: residue 2 with O = 20 must fail (2^9 > 20)
        let den = pow3(20);
        let e = den.bits(); // 2^e > den, residue in (1, 2]
        let r = ResidueTriple::new(e + 3, 20, big(1)).unwrap();
        assert_eq!(theorem2_outcome(&big(1), &r, &r.denominator()).verdict, Verdict::Fail);
    }

    #[test]
    fn floor_log_examples() {
        assert_eq!(floor_log_ratio(6, &(BigUint::one() << 16u32), &big(7)).unwrap(), 5);
        assert_eq!(floor_log_ratio(3, &big(1), &big(1)).unwrap(), 0);
        assert_eq!(floor_log_ratio(2, &big(1024), &big(1)).unwrap(), 10);
        assert!(matches!(floor_log_ratio(2, &big(1), &big(2)), Err(Error::RatioBelowOne)));
        // 6^5*7 = 54432 <= 65536 < 326592 = 6^6*7
        assert!(big(54432) <= big(65536) && big(65536) < big(326592));
    }

    #[test]
    fn ceil_log_examples() {
        let num = BigUint::from(3u32).pow(16) * 7u32;
        assert_eq!(ceil_log_ratio(6, &num, &big(1)).unwrap(), 11);
        assert_eq!(ceil_log_ratio(2, &big(1024), &big(1)).unwrap(), 10);
        assert_eq!(ceil_log_ratio(2, &big(1025), &big(1)).unwrap(), 11);
        assert!(ceil_log_ratio(2, &big(3), &big(4)).is_err());
    }

    #[test]
    fn log_ratio_matches_linear_oracle() {
        for base in [2u32, 3, 5, 6, 10] {
            for num in 1..400u64 {
                for den in 1..=num.min(40) {
                    let (n, d) = (big(num), big(den));
                    let f = floor_log_ratio(base, &n, &d).unwrap();
                    assert_eq!(f, floor_log_oracle(base, &n, &d), "b={base} {num}/{den}");
                    let exact = BigUint::from(base).pow(f as u32) * &d == n;
                    let c = ceil_log_ratio(base, &n, &d).unwrap();
                    assert_eq!(c, if exact { f } else { f + 1 });
                }
            }
        }
    }

    #[test]
    fn log_ratio_on_huge_operands() {
        let num = BigUint::from(6u32).pow(3000) * 11u32;
        assert_eq!(floor_log_ratio(6, &num, &big(11)).unwrap(), 3000);
        assert_eq!(ceil_log_ratio(6, &num, &big(11)).unwrap(), 3000);
        assert_eq!(floor_log_ratio(6, &(&num - 1u32), &big(11)).unwrap(), 2999);
        assert_eq!(ceil_log_ratio(6, &(&num + 1u32), &big(11)).unwrap(), 3001);
        // negative logs are handled internally
        assert_eq!(floor_log(3, &big(1), &big(10)), (-3, false));
        assert_eq!(floor_log(3, &big(1), &big(9)), (-2, true));
    }

    #[test]
    fn predict_all_examples() {
        let c7 = StepCounts::new(16, 5, 11).unwrap();
        let f = predict_all(&big(7), c7).unwrap();
        assert_eq!(f.predicted, [5, 11, 16, 11, 16, 5]);
        assert!(f.all_match());

        for k in 0..64u64 {
            let c = StepCounts::new(k, 0, k).unwrap();
            let f = predict_all(&(BigUint::one() << k), c).unwrap();
            assert!(f.all_match(), "2^{k}: {:?}", f.predicted);
        }

        let f = predict_all(&big(27), StepCounts::new(111, 41, 70).unwrap()).unwrap();
        assert_eq!(f.predicted, [41, 70, 111, 70, 111, 41]);
        assert!(f.all_match());

        assert!(predict_all(&big(7), StepCounts { total: 17, odd: 5, even: 11 }).is_err());
    }

    #[test]
    fn predict_all_reports_mismatches() {
        let wrong = StepCounts::new(20, 5, 15).unwrap();
        let f = predict_all(&big(7), wrong).unwrap();
        assert!(!f.all_match());
        let o = f.outcome();
        assert_eq!(o.verdict, Verdict::Fail);
        assert!(o.detail.contains("predicted"));
    }
}
