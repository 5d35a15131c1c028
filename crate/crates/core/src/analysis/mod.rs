//! Numeric checks of the auxiliary bounds behind the residue upper bound.
//!
//! Left-hand sides (harmonic sums, sums and products over the eligible odd
//! integers) are exact rationals. Right-hand sides involving `ln`, `exp` or
//! Euler's constant are evaluated in fixed point at
//! [`PrecisionConfig::working_digits`], and a comparison only passes when
//! the gap exceeds [`PrecisionConfig::margin`]; a smaller gap is reported as
//! [`Verdict::Inconclusive`].

pub mod precise;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::{self, ExactRational};
use crate::trajectory;
use crate::{CheckOutcome, Error, Result, Verdict};

pub use precise::{Fixed, Precise};

/// Largest `n` accepted by [`harmonic_exact`].
pub const HARMONIC_CAP: u64 = 1_000_000;

/// Domain of [`theorem2_numeric_claim`].
pub const THEOREM2_CLAIM_RANGE: (u64, u64) = (20, 1252);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecisionConfig {
    pub working_digits: u32,
    pub margin: BigRational,
}

impl PrecisionConfig {
    pub fn new(working_digits: u32, margin: BigRational) -> Result<Self> {
        if !(30..=precise::MAX_WORKING_DIGITS).contains(&working_digits) {
            return Err(Error::InvalidConfig(format!(
                "working digits {working_digits} outside 30..={}",
                precise::MAX_WORKING_DIGITS
            )));
        }
        if margin <= BigRational::zero() {
            return Err(Error::InvalidConfig("margin must be positive".into()));
        }
        precise::validate_gamma()?;
        Ok(PrecisionConfig {
            working_digits,
            margin,
        })
    }

    /// `margin = 10^-exp`
    pub fn with_margin_exponent(working_digits: u32, exp: u32) -> Result<Self> {
        let margin = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(exp));
        PrecisionConfig::new(working_digits, margin)
    }

    fn context(&self) -> Precise {
        Precise::new(self.working_digits).expect("validated in PrecisionConfig::new")
    }
}

impl Default for PrecisionConfig {
    /// 50 digits, margin `10^-20`.
    fn default() -> Self {
        PrecisionConfig::with_margin_exponent(50, 20).expect("default precision is valid")
    }
}

/// A context plus margin, built once per batch of checks.
struct Evaluator {
    ctx: Precise,
    margin: Fixed,
}

impl Evaluator {
    fn new(prec: &PrecisionConfig) -> Self {
        let ctx = prec.context();
        let margin = ctx.from_rational(&prec.margin);
        Evaluator { ctx, margin }
    }

    /// Verdict for a claimed `gap > 0`.
    fn judge(&self, gap: &Fixed) -> Verdict {
        if gap > &self.margin {
            Verdict::Pass
        } else if gap < &-self.margin.clone() {
            Verdict::Fail
        } else {
            Verdict::Inconclusive
        }
    }

    fn show(&self, x: &Fixed) -> String {
        self.ctx.to_decimal(x, 30)
    }
}

/// Running sum of reciprocals `num / den`, with `den` the lcm of the added
/// denominators so no big gcd is needed per term.
#[derive(Debug, Clone)]
pub struct ReciprocalSum {
    num: BigUint,
    den: BigUint,
}

impl Default for ReciprocalSum {
    fn default() -> Self {
        ReciprocalSum {
            num: BigUint::zero(),
            den: BigUint::one(),
        }
    }
}

impl ReciprocalSum {
    pub fn add_reciprocal(&mut self, k: &BigUint) {
        assert!(!k.is_zero(), "reciprocal of zero");
        let g = self.den.gcd(k);
        let f = k / &g;
        // num/den + 1/k = (num*f + den/g) / (den*f)
        self.num = &self.num * &f + &self.den / &g;
        self.den *= f;
    }

    pub fn add_reciprocal_u64(&mut self, k: u64) {
        self.add_reciprocal(&BigUint::from(k));
    }

    pub fn numer(&self) -> &BigUint {
        &self.num
    }

    pub fn denom(&self) -> &BigUint {
        &self.den
    }

    pub fn to_rational(&self) -> ExactRational {
        BigRational::new(self.num.clone().into(), self.den.clone().into())
    }
}

/// `H_n = 1 + 1/2 + ... + 1/n`, reduced.
pub fn harmonic_exact(n: u64) -> Result<ExactRational> {
    if n == 0 || n > HARMONIC_CAP {
        return Err(Error::OutOfRange {
            value: n,
            min: 1,
            max: HARMONIC_CAP,
        });
    }
    let mut sum = ReciprocalSum::default();
    for k in 1..=n {
        sum.add_reciprocal_u64(k);
    }
    Ok(sum.to_rational())
}

fn lemma4_verdict(ev: &Evaluator, n: u64, h: &Fixed) -> CheckOutcome {
    let ctx = &ev.ctx;
    let lower = &ctx.ln_u64(n) + ctx.gamma();
    let upper = &lower + &ctx.from_rational(&BigRational::new(1.into(), (2 * n).into()));
    let gap_low = h - &lower;
    let gap_high = &upper - h;
    let verdict = ev.judge(&gap_low).and(ev.judge(&gap_high));
    CheckOutcome::new("lemma4", format!("n={n}"), verdict).with_detail(format!(
        "H_n-(ln n+g)={} (ln n+g+1/2n)-H_n={}",
        ev.show(&gap_low),
        ev.show(&gap_high)
    ))
}

/// `ln n + gamma < H_n < ln n + gamma + 1/(2n)`.
pub fn lemma4_check(n: u64, prec: &PrecisionConfig) -> Result<CheckOutcome> {
    let h = harmonic_exact(n)?;
    let ev = Evaluator::new(prec);
    Ok(lemma4_verdict(&ev, n, &ev.ctx.from_rational(&h)))
}

/// [`lemma4_check`] for every `n` in `1..=max`, sharing the running sum.
pub fn lemma4_range(max: u64, prec: &PrecisionConfig) -> Result<Vec<CheckOutcome>> {
    if max == 0 || max > HARMONIC_CAP {
        return Err(Error::OutOfRange {
            value: max,
            min: 1,
            max: HARMONIC_CAP,
        });
    }
    let ev = Evaluator::new(prec);
    let mut sum = ReciprocalSum::default();
    let mut out = Vec::with_capacity(max as usize);
    for n in 1..=max {
        sum.add_reciprocal_u64(n);
        let h = ev.ctx.from_ratio(sum.numer(), sum.denom());
        out.push(lemma4_verdict(&ev, n, &h));
    }
    Ok(out)
}

/// Odd integers `k >= 5` not divisible by 3: 5, 7, 11, 13, 17, 19, ...
pub fn eligible() -> impl Iterator<Item = u64> {
    (1u64..).flat_map(|j| [6 * j - 1, 6 * j + 1])
}

/// The first `t` eligible integers.
pub fn eligible_sequence(t: usize) -> Vec<u64> {
    eligible().take(t).collect()
}

/// Exact sum of `1/k` over the first `t` eligible integers.
pub fn eligible_reciprocal_sum(t: usize) -> ExactRational {
    let mut sum = ReciprocalSum::default();
    for k in eligible().take(t) {
        sum.add_reciprocal_u64(k);
    }
    sum.to_rational()
}

/// Exact product of `1 + 1/(3k)` over the first `t` eligible integers.
pub fn eligible_product(t: usize) -> ExactRational {
    eligible()
        .take(t)
        .fold(BigRational::one(), |acc, k| acc * product_factor(k))
}

fn product_factor(k: u64) -> BigRational {
    BigRational::new((3 * k + 1).into(), (3 * k).into())
}

fn lemma5_rhs(ctx: &Precise, m: u64) -> Fixed {
    // (1/2) ln 3 + (2/3) ln 2 + gamma/3 - 1 + (1/3) ln m + 5/(6m)
    let ln3_half = ctx.div_int(ctx.ln3(), 2);
    let ln2_two_thirds = ctx.div_int(&(ctx.ln2() + ctx.ln2()), 3);
    let gamma_third = ctx.div_int(ctx.gamma(), 3);
    let ln_m_third = ctx.div_int(&ctx.ln_u64(m), 3);
    let tail = ctx.from_rational(&BigRational::new(5.into(), (6 * m).into()));
    let mut acc = &ln3_half + &ln2_two_thirds;
    acc = &acc + &gamma_third;
    acc = &acc - &ctx.from_int(1);
    acc = &acc + &ln_m_third;
    &acc + &tail
}

fn lemma5_verdict(ev: &Evaluator, m: u64, lhs: &Fixed) -> CheckOutcome {
    let rhs = lemma5_rhs(&ev.ctx, m);
    let gap = &rhs - lhs;
    CheckOutcome::new("lemma5", format!("m={m}"), ev.judge(&gap))
        .with_detail(format!("lhs={} gap={}", ev.show(lhs), ev.show(&gap)))
}

/// Sum of `1/k` over the eligible `k <= 6m+3` (the first `2m` of them)
/// against `ln(3^(1/2) 2^(2/3)) + gamma/3 - 1 + (1/3) ln m + 5/(6m)`.
pub fn lemma5_check(m: u64, prec: &PrecisionConfig) -> Result<CheckOutcome> {
    if m == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    let ev = Evaluator::new(prec);
    let lhs = ev.ctx.from_rational(&eligible_reciprocal_sum(2 * m as usize));
    Ok(lemma5_verdict(&ev, m, &lhs))
}

/// [`lemma5_check`] for every `m` in `1..=max`, sharing the running sum.
pub fn lemma5_range(max: u64, prec: &PrecisionConfig) -> Result<Vec<CheckOutcome>> {
    if max == 0 {
        return Err(Error::OutOfRange {
            value: 0,
            min: 1,
            max: u64::MAX,
        });
    }
    let ev = Evaluator::new(prec);
    let mut sum = ReciprocalSum::default();
    let mut terms = eligible();
    let mut out = Vec::with_capacity(max as usize);
    for m in 1..=max {
        for k in terms.by_ref().take(2) {
            sum.add_reciprocal_u64(k);
        }
        let lhs = ev.ctx.from_ratio(sum.numer(), sum.denom());
        out.push(lemma5_verdict(&ev, m, &lhs));
    }
    Ok(out)
}

fn theorem2_claim_verdict(ev: &Evaluator, t: u64, product: &BigRational) -> CheckOutcome {
    // Integer form: ((118/117) * P)^9 < t
    let scaled = product * BigRational::new(118.into(), 117.into());
    let lhs = scaled.numer().pow(9u32);
    let rhs = scaled.denom().pow(9u32) * BigInt::from(t);
    let exact = if lhs < rhs {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    // Transcendental cross-check: t^(1/9) - (118/117) P > margin
    let ctx = &ev.ctx;
    let root = ctx.exp(&ctx.div_int(&ctx.ln_u64(t), 9));
    let value = ctx.from_rational(&scaled);
    let gap = &root - &value;
    let numeric = ev.judge(&gap);

    let verdict = match (exact, numeric) {
        (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
        (Verdict::Fail, _) => Verdict::Fail,
        // the two routes disagree
        (_, Verdict::Fail) => Verdict::Fail,
        _ => Verdict::Inconclusive,
    };
    CheckOutcome::new("theorem2_claim", format!("t={t}"), verdict).with_detail(format!(
        "ninth-power form {exact}, t^(1/9)-(118/117)P={}",
        ev.show(&gap)
    ))
}

/// `(1 + 1/117) * prod(1 + 1/(3j)) < t^(1/9)` over the first `t` eligible
/// `j`, decided by the integer ninth-power form and cross-checked in fixed
/// point.
pub fn theorem2_numeric_claim(t: u64, prec: &PrecisionConfig) -> Result<CheckOutcome> {
    let (lo, hi) = THEOREM2_CLAIM_RANGE;
    if !(lo..=hi).contains(&t) {
        return Err(Error::OutOfRange {
            value: t,
            min: lo,
            max: hi,
        });
    }
    let ev = Evaluator::new(prec);
    Ok(theorem2_claim_verdict(&ev, t, &eligible_product(t as usize)))
}

/// [`theorem2_numeric_claim`] for every `t` in `20..=1252`.
pub fn theorem2_claim_range(prec: &PrecisionConfig) -> Vec<CheckOutcome> {
    let (lo, hi) = THEOREM2_CLAIM_RANGE;
    let ev = Evaluator::new(prec);
    let mut product = BigRational::one();
    let mut out = Vec::new();
    for (t, k) in (1..=hi).zip(eligible()) {
        product *= product_factor(k);
        if t >= lo {
            out.push(theorem2_claim_verdict(&ev, t, &product));
        }
    }
    out
}

/// `3^(1/6) * 2^(1/9) * e^(gamma/9 - 38/117)`.
pub fn theorem2_constant(ctx: &Precise) -> Fixed {
    let mut x = ctx.div_int(ctx.ln3(), 6);
    x = &x + &ctx.div_int(ctx.ln2(), 9);
    x = &x + &ctx.div_int(ctx.gamma(), 9);
    x = &x - &ctx.from_rational(&BigRational::new(38.into(), 117.into()));
    ctx.exp(&x)
}

/// The constant lies in `[0.999467, 0.999468)`, and the brackets
/// `0.999467 < C e^{5/(9*1043)} < 0.99999981` and
/// `0.999467 < C e^{2/(3*1252)} < 0.99999964` hold.
pub fn theorem2_constant_check(prec: &PrecisionConfig) -> CheckOutcome {
    let ev = Evaluator::new(prec);
    let ctx = &ev.ctx;
    let c = theorem2_constant(ctx);
    let lo = ctx.parse_decimal("0.999467");
    let hi = ctx.parse_decimal("0.999468");

    let even_case = ctx.mul(
        &c,
        &ctx.exp(&ctx.from_rational(&BigRational::new(5.into(), (9 * 1043).into()))),
    );
    let odd_case = ctx.mul(
        &c,
        &ctx.exp(&ctx.from_rational(&BigRational::new(2.into(), (3 * 1252).into()))),
    );

    let verdict = ev
        .judge(&(&c - &lo))
        .and(ev.judge(&(&hi - &c)))
        .and(ev.judge(&(&even_case - &lo)))
        .and(ev.judge(&(&ctx.parse_decimal("0.99999981") - &even_case)))
        .and(ev.judge(&(&odd_case - &lo)))
        .and(ev.judge(&(&ctx.parse_decimal("0.99999964") - &odd_case)));
    CheckOutcome::new("theorem2_const", "C", verdict).with_detail(format!(
        "C={} C*e^(5/9387)={} C*e^(2/3756)={}",
        ctx.to_decimal(&c, 12),
        ctx.to_decimal(&even_case, 12),
        ctx.to_decimal(&odd_case, 12)
    ))
}

/// Odd starting values whose branches are used for the instance form of
/// `Res(N) < e^{a/3}` in [`corollary_bound_check`].
pub const LEMMA3_SAMPLE_MAX: u64 = 999;

/// `ln Res(n) < (1/3) sum 1/N_j` over the odd branch of an odd `n > 1`.
pub fn lemma3_instance(n: u64, prec: &PrecisionConfig) -> Result<CheckOutcome> {
    let ev = Evaluator::new(prec);
    lemma3_verdict(&ev, n)
}

fn lemma3_verdict(ev: &Evaluator, n: u64) -> Result<CheckOutcome> {
    let n_big = BigUint::from(n);
    let mut sum = ReciprocalSum::default();
    let branch = trajectory::odd_branch(&n_big, trajectory::DEFAULT_STEP_BUDGET)?;
    for v in branch.values() {
        sum.add_reciprocal(v);
    }
    let r = exact::residue_of(&n_big, trajectory::DEFAULT_STEP_BUDGET)?;
    let ctx = &ev.ctx;
    let ln_res = ctx.ln_ratio(&r.numerator(), &r.denominator());
    let bound = ctx.div_int(&ctx.from_ratio(sum.numer(), sum.denom()), 3);
    let gap = &bound - &ln_res;
    Ok(CheckOutcome::new("lemma3", format!("n={n}"), ev.judge(&gap))
        .with_detail(format!("gap={}", ev.show(&gap))))
}

/// The all-cases bound for `O(N) <= 19`:
/// `sum_{first 19 eligible} 1/k + 1/3 = 1.3046... < 1.3047` (exact) and
/// `e^{1.3047/3} < 1.55`, plus instance checks of `Res < e^{a/3}` on odd
/// `n` in `3..=999`.
pub fn corollary_bound_check(prec: &PrecisionConfig) -> Result<CheckOutcome> {
    let ev = Evaluator::new(prec);
    let ctx = &ev.ctx;

    let sum = eligible_reciprocal_sum(19) + BigRational::new(1.into(), 3.into());
    let cap = BigRational::new(13047.into(), 10000.into());
    let floor4 = (sum.numer() * BigInt::from(10000)).div_floor(sum.denom());
    let sum_ok = sum < cap && floor4 == BigInt::from(13046);
    let mut verdict = if sum_ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    let e_bound = ctx.exp(&ctx.div_int(&ctx.parse_decimal("1.3047"), 3));
    verdict = verdict.and(ev.judge(&(&ctx.parse_decimal("1.55") - &e_bound)));

    let mut lemma3_worst = Verdict::Pass;
    for n in (3..=LEMMA3_SAMPLE_MAX).step_by(2) {
        lemma3_worst = lemma3_worst.and(lemma3_verdict(&ev, n)?.verdict);
    }
    verdict = verdict.and(lemma3_worst);

    let sum_fixed = ctx.from_rational(&sum);
    Ok(
        CheckOutcome::new("corollary", "O<=19", verdict).with_detail(format!(
            "sum+1/3={} e^(1.3047/3)={} lemma3 instances {}",
            ctx.to_decimal(&sum_fixed, 10),
            ctx.to_decimal(&e_bound, 10),
            lemma3_worst
        )),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    /// Enumeration oracle for the eligible set.
    fn eligible_oracle(t: usize) -> Vec<u64> {
        (1u64..).filter(|k| k % 2 == 1 && *k >= 5 && k % 3 != 0).take(t).collect()
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_exact(1).unwrap(), r(1, 1));
        assert_eq!(harmonic_exact(2).unwrap(), r(3, 2));
        assert_eq!(harmonic_exact(4).unwrap(), r(25, 12));
        assert!(harmonic_exact(0).is_err());
        assert!(harmonic_exact(HARMONIC_CAP + 1).is_err());
    }

    #[test]
    fn harmonic_differences() {
        let mut prev = BigRational::zero();
        for n in 1..=200u64 {
            let h = harmonic_exact(n).unwrap();
            assert_eq!(&h - &prev, r(1, n as i64));
            prev = h;
        }
    }

    #[test]
    fn eligible_examples() {
        assert_eq!(eligible_sequence(2), [5, 7]);
        assert_eq!(eligible_sequence(6), [5, 7, 11, 13, 17, 19]);
        assert_eq!(eligible_sequence(1), [5]);
        assert_eq!(eligible_sequence(500), eligible_oracle(500));
        for m in 1..200usize {
            let seq = eligible_sequence(2 * m);
            assert_eq!(*seq.last().unwrap(), 6 * m as u64 + 1);
        }
    }

    #[test]
    fn reciprocal_sum_examples() {
        assert_eq!(eligible_reciprocal_sum(2), r(12, 35));
        assert_eq!(eligible_reciprocal_sum(1), r(1, 5));
        let s = eligible_reciprocal_sum(19) + r(1, 3);
        let oracle = eligible_oracle(19)
            .into_iter()
            .fold(r(1, 3), |acc, k| acc + r(1, k as i64));
        assert_eq!(s, oracle);
        let digits = (s.numer() * BigInt::from(10000)).div_floor(s.denom());
        assert_eq!(digits, BigInt::from(13046));
    }

    #[test]
    fn product_examples() {
        assert_eq!(eligible_product(1), r(16, 15));
        assert_eq!(eligible_product(2), r(352, 315));
        let oracle = [5i64, 7, 11, 13, 17]
            .iter()
            .fold(r(1, 1), |acc, &k| acc * r(3 * k + 1, 3 * k));
        assert_eq!(eligible_product(5), oracle);
    }

    #[test]
    fn lemma4_examples() {
        let prec = PrecisionConfig::default();
        for n in [1, 2, 100, 10_000] {
            assert_eq!(lemma4_check(n, &prec).unwrap().verdict, Verdict::Pass, "n={n}");
        }
        let range = lemma4_range(50, &prec).unwrap();
        assert!(range.iter().all(|o| o.verdict.is_pass()));
    }

    #[test]
    fn lemma4_gap_matches_oracle_at_one() {
        // H_1 - (ln 1 + gamma) = 1 - gamma
        let prec = PrecisionConfig::default();
        let o = lemma4_check(1, &prec).unwrap();
        assert!(o.detail.starts_with("H_n-(ln n+g)=0.422784335098467139393487909917"), "{}", o.detail);
    }

    #[test]
    fn lemma5_examples() {
        let prec = PrecisionConfig::default();
        let o = lemma5_check(1, &prec).unwrap();
        assert_eq!(o.verdict, Verdict::Pass);
        // lhs 12/35, rhs 1.03717...; mpmath gap 0.694285676817386481701757586603
        assert!(o.detail.contains("gap=0.694285676817386481701757586603"), "{}", o.detail);
        for m in [10, 100] {
            assert_eq!(lemma5_check(m, &prec).unwrap().verdict, Verdict::Pass);
        }
        let range = lemma5_range(100, &prec).unwrap();
        assert_eq!(range.len(), 100);
        assert!(range.iter().all(|o| o.verdict.is_pass()));
        assert_eq!(range[9].detail, lemma5_check(10, &prec).unwrap().detail);
    }

    #[test]
    fn theorem2_claim_examples() {
        let prec = PrecisionConfig::default();
        for t in [20, 512, 1252] {
            assert_eq!(theorem2_numeric_claim(t, &prec).unwrap().verdict, Verdict::Pass, "t={t}");
        }
        assert!(theorem2_numeric_claim(19, &prec).is_err());
        assert!(theorem2_numeric_claim(1253, &prec).is_err());
    }

    #[test]
    fn theorem2_claim_fails_below_its_domain() {
        // The claim is false for t = 19: (118/117) P(19) = 1.3873 > 19^(1/9) = 1.3870
        let prec = PrecisionConfig::default();
        let ev = Evaluator::new(&prec);
        let o = theorem2_claim_verdict(&ev, 19, &eligible_product(19));
        assert_eq!(o.verdict, Verdict::Fail);
    }

    #[test]
    fn constant_check() {
        let prec = PrecisionConfig::default();
        let o = theorem2_constant_check(&prec);
        assert_eq!(o.verdict, Verdict::Pass, "{}", o.detail);
        assert!(o.detail.starts_with("C=0.999467292537"), "{}", o.detail);
        let ctx = Precise::new(50).unwrap();
        // mpmath: 0.999467292537554901237179569149854606643912422413
        assert_eq!(
            ctx.to_decimal(&theorem2_constant(&ctx), 40),
            "0.9994672925375549012371795691498546066439"
        );
    }

    #[test]
    fn corollary_check() {
        let prec = PrecisionConfig::default();
        let o = corollary_bound_check(&prec).unwrap();
        assert_eq!(o.verdict, Verdict::Pass, "{}", o.detail);
        assert!(o.detail.contains("sum+1/3=1.3046250041"), "{}", o.detail);
        assert!(o.detail.contains("e^(1.3047/3)=1.5448085703"), "{}", o.detail);
    }

    #[test]
    fn lemma3_instance_for_seven() {
        let prec = PrecisionConfig::default();
        let o = lemma3_instance(7, &prec).unwrap();
        assert_eq!(o.verdict, Verdict::Pass);
    }

    #[test]
    fn tiny_margin_never_fails_a_pass() {
        let wide = PrecisionConfig::with_margin_exponent(50, 5).unwrap();
        let narrow = PrecisionConfig::with_margin_exponent(50, 40).unwrap();
        for n in [1, 7, 1000, 10_000] {
            let a = lemma4_check(n, &wide).unwrap().verdict;
            let b = lemma4_check(n, &narrow).unwrap().verdict;
            if a == Verdict::Pass {
                assert_eq!(b, Verdict::Pass);
            }
        }
        // a huge margin makes the tight lemma4 upper gap inconclusive, not failed
        let o = lemma4_check(10_000, &wide).unwrap();
        assert_eq!(o.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn precision_config_validation() {
        assert!(PrecisionConfig::with_margin_exponent(29, 20).is_err());
        assert!(PrecisionConfig::new(50, BigRational::zero()).is_err());
        assert!(PrecisionConfig::new(50, r(-1, 10)).is_err());
        assert!(PrecisionConfig::with_margin_exponent(100, 20).is_ok());
    }
}
