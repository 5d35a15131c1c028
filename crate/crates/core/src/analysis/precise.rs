//! Binary fixed-point arithmetic for the few transcendental values the bound
//! checks need: `ln`, `exp` and Euler's constant.
//!
//! A [`Fixed`] is an integer `raw` standing for `raw / 2^bits`. Every
//! operation truncates, so each result is within a few units of `2^-bits`
//! of the true value; `bits` carries 64 guard bits above the requested
//! decimal precision.

use std::cmp::Ordering;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Euler's constant to 100 decimal places.
pub const EULER_GAMMA_DIGITS: &str = "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495";

/// Highest precision the stored constant supports.
pub const MAX_WORKING_DIGITS: u32 = 100;

const GUARD_BITS: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    raw: BigInt,
}

impl Fixed {
    pub fn is_negative(&self) -> bool {
        self.raw.is_negative()
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fixed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.raw.cmp(&other.raw)
    }
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        Fixed {
            raw: &self.raw + &rhs.raw,
        }
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        Fixed {
            raw: &self.raw - &rhs.raw,
        }
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed { raw: -self.raw }
    }
}

/// Evaluation context at a fixed binary precision, holding `ln 2`, `ln 3`
/// and Euler's constant at that precision.
#[derive(Debug, Clone)]
pub struct Precise {
    digits: u32,
    bits: u64,
    ln2: Fixed,
    ln3: Fixed,
    gamma: Fixed,
}

impl Precise {
    pub fn new(digits: u32) -> Result<Self> {
        if !(1..=MAX_WORKING_DIGITS).contains(&digits) {
            return Err(Error::InvalidConfig(format!(
                "working digits {digits} outside 1..={MAX_WORKING_DIGITS}"
            )));
        }
        let bits = u64::from(digits) * 3322 / 1000 + 1 + GUARD_BITS;
        let mut ctx = Precise {
            digits,
            bits,
            ln2: Fixed { raw: BigInt::zero() },
            ln3: Fixed { raw: BigInt::zero() },
            gamma: Fixed { raw: BigInt::zero() },
        };
        // ln 2 = 2 atanh(1/3), ln 3 = ln 2 + 2 atanh(1/5)
        ctx.ln2 = Fixed {
            raw: ctx.atanh_inv(3).raw << 1u32,
        };
        ctx.ln3 = &ctx.ln2
            + &Fixed {
                raw: ctx.atanh_inv(5).raw << 1u32,
            };
        ctx.gamma = ctx.parse_decimal(EULER_GAMMA_DIGITS);
        Ok(ctx)
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn ln2(&self) -> &Fixed {
        &self.ln2
    }

    pub fn ln3(&self) -> &Fixed {
        &self.ln3
    }

    pub fn gamma(&self) -> &Fixed {
        &self.gamma
    }

    fn unit(&self) -> BigInt {
        BigInt::one() << self.bits
    }

    pub fn from_int(&self, v: i64) -> Fixed {
        Fixed {
            raw: BigInt::from(v) << self.bits,
        }
    }

    /// Floor of `q * 2^bits`.
    pub fn from_rational(&self, q: &BigRational) -> Fixed {
        Fixed {
            raw: (q.numer() << self.bits).div_floor(q.denom()),
        }
    }

    pub fn from_ratio(&self, num: &BigUint, den: &BigUint) -> Fixed {
        Fixed {
            raw: BigInt::from((num << self.bits) / den),
        }
    }

    /// Parses a plain decimal literal such as `0.999467` or `1.55`.
    pub fn parse_decimal(&self, s: &str) -> Fixed {
        let (int, frac) = s.split_once('.').unwrap_or((s, ""));
        let digits: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        Fixed {
            raw: (digits << self.bits).div_floor(&scale),
        }
    }

    pub fn mul(&self, a: &Fixed, b: &Fixed) -> Fixed {
        Fixed {
            raw: (&a.raw * &b.raw) >> self.bits,
        }
    }

    pub fn div(&self, a: &Fixed, b: &Fixed) -> Fixed {
        Fixed {
            raw: (&a.raw << self.bits).div_floor(&b.raw),
        }
    }

    pub fn div_int(&self, a: &Fixed, d: i64) -> Fixed {
        Fixed {
            raw: a.raw.div_floor(&BigInt::from(d)),
        }
    }

    /// `atanh(1/q)` for an integer `q >= 2`.
    fn atanh_inv(&self, q: u64) -> Fixed {
        let q = BigInt::from(q);
        let q2 = &q * &q;
        let mut term = self.unit() / &q;
        let mut sum = BigInt::zero();
        let mut k = 1u64;
        while !term.is_zero() {
            sum += &term / k;
            term /= &q2;
            k += 2;
        }
        Fixed { raw: sum }
    }

    /// `atanh(z)` for a fixed-point `|z| <= 1/3`.
    fn atanh(&self, z: &Fixed) -> Fixed {
        let z2 = self.mul(z, z);
        let mut term = z.raw.clone();
        let mut sum = BigInt::zero();
        let mut k = 1u64;
        while !term.is_zero() {
            sum += &term / k;
            // truncate toward zero so negative terms also vanish
            term = (&term * &z2.raw) / self.unit();
            k += 2;
        }
        Fixed { raw: sum }
    }

    /// Natural log of a positive rational `num / den`.
    pub fn ln_ratio(&self, num: &BigUint, den: &BigUint) -> Fixed {
        assert!(!num.is_zero() && !den.is_zero(), "ln of a non-positive value");
        // num/den = 2^k * y with y in (1/2, 2)
        let k = num.bits() as i64 - den.bits() as i64;
        let (n, d) = if k >= 0 {
            (num.clone(), den << k as u64)
        } else {
            (num << k.unsigned_abs(), den.clone())
        };
        // ln y = 2 atanh((y - 1) / (y + 1)), |(y-1)/(y+1)| < 1/3
        let n = BigInt::from(n);
        let d = BigInt::from(d);
        let z = Fixed {
            raw: ((&n - &d) << self.bits).div_floor(&(&n + &d)),
        };
        let mut r = self.atanh(&z);
        r.raw <<= 1u32;
        &r + &Fixed {
            raw: &self.ln2.raw * k,
        }
    }

    pub fn ln_u64(&self, n: u64) -> Fixed {
        self.ln_ratio(&BigUint::from(n), &BigUint::one())
    }

    pub fn ln_rational(&self, q: &BigRational) -> Fixed {
        assert!(q.is_positive(), "ln of a non-positive value");
        let num = q.numer().magnitude();
        let den = q.denom().magnitude();
        self.ln_ratio(num, den)
    }

    /// `e^x`.
    pub fn exp(&self, x: &Fixed) -> Fixed {
        // x = k ln2 + r, |r| <= ln2 / 2
        let half_ln2 = &self.ln2.raw >> 1u32;
        let k = (&x.raw + &half_ln2).div_floor(&self.ln2.raw);
        let r = &x.raw - &k * &self.ln2.raw;
        const SQUARINGS: u32 = 12;
        let r = r >> SQUARINGS;
        let mut sum = self.unit();
        let mut term = self.unit();
        let mut i = 1u64;
        loop {
            term = (&term * &r) / self.unit() / i;
            if term.is_zero() {
                break;
            }
            sum += &term;
            i += 1;
        }
        let mut v = Fixed { raw: sum };
        for _ in 0..SQUARINGS {
            v = self.mul(&v, &v);
        }
        let k: i64 = k.try_into().expect("exponent in range");
        if k >= 0 {
            v.raw <<= k as u64;
        } else {
            v.raw >>= k.unsigned_abs();
        }
        v
    }

    /// Truncated decimal rendering with `digits` fractional digits.
    pub fn to_decimal(&self, x: &Fixed, digits: u32) -> String {
        let scaled = (x.raw.abs() * BigInt::from(10u32).pow(digits)) >> self.bits;
        let mut s = scaled.to_string();
        let width = digits as usize + 1;
        if s.len() < width {
            s = format!("{}{}", "0".repeat(width - s.len()), s);
        }
        if digits > 0 {
            s.insert(s.len() - digits as usize, '.');
        }
        if x.raw.sign() == Sign::Minus {
            s.insert(0, '-');
        }
        s
    }

    /// Euler's constant by the Brent-McMillan series
    /// `gamma ~ U/V - ln n` with `U = sum A_k`, `V = sum B_k`,
    /// `B_k = (n^k / k!)^2`, `A_k = B_k (H_k - ln n)`; error below `e^{-4n}`.
    pub fn gamma_brent_mcmillan(&self, n: u64) -> Fixed {
        let n2 = BigInt::from(n) * n;
        let ln_n = self.ln_u64(n);
        let mut a = -ln_n.raw.clone();
        let mut b = self.unit();
        let mut u = a.clone();
        let mut v = b.clone();
        let mut k = 1u64;
        while !(a.is_zero() && b.is_zero()) {
            let kk = BigInt::from(k);
            b = &b * &n2 / (&kk * &kk);
            a = (&a * &n2 / &kk + &b) / &kk;
            u += &a;
            v += &b;
            k += 1;
        }
        Fixed {
            raw: (u << self.bits).div_floor(&v),
        }
    }
}

static GAMMA_CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();

/// Confirms the stored Euler constant against an independent Brent-McMillan
/// evaluation to 30 decimal places. Runs once per process.
pub fn validate_gamma() -> Result<()> {
    GAMMA_CHECK
        .get_or_init(|| {
            let ctx = Precise::new(45).map_err(|e| e.to_string())?;
            // e^{-4*21} < 1e-36
            let series = ctx.gamma_brent_mcmillan(21);
            let diff = (&series - ctx.gamma()).raw.abs();
            let tol = ctx.parse_decimal(&format!("0.{}1", "0".repeat(29))).raw;
            if diff < tol {
                Ok(())
            } else {
                Err(format!(
                    "stored Euler constant disagrees with series value {}",
                    ctx.to_decimal(&series, 40)
                ))
            }
        })
        .clone()
        .map_err(Error::InvalidConfig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Precise {
        Precise::new(50).unwrap()
    }

    #[test]
    fn constants() {
        let c = ctx();
        assert_eq!(
            c.to_decimal(c.ln2(), 40),
            "0.6931471805599453094172321214581765680755"
        );
        assert_eq!(
            c.to_decimal(c.ln3(), 40),
            "1.0986122886681096913952452369225257046474"
        );
        assert_eq!(
            c.to_decimal(c.gamma(), 40),
            "0.5772156649015328606065120900824024310421"
        );
    }

    #[test]
    fn gamma_series_agrees_with_stored_digits() {
        validate_gamma().unwrap();
        let c = Precise::new(60).unwrap();
        let g = c.gamma_brent_mcmillan(40);
        assert_eq!(
            c.to_decimal(&g, 50),
            "0.57721566490153286060651209008240243104215933593992"
        );
    }

    #[test]
    fn ln_and_exp() {
        let c = ctx();
        assert_eq!(c.to_decimal(&c.ln_u64(10), 30), "2.302585092994045684017991454684");
        assert_eq!(c.to_decimal(&c.ln_u64(1), 30), "0.000000000000000000000000000000");
        let e = c.exp(&c.from_int(1));
        assert_eq!(c.to_decimal(&e, 30), "2.718281828459045235360287471352");
        let inv_e = c.exp(&c.from_int(-1));
        assert_eq!(c.to_decimal(&inv_e, 30), "0.367879441171442321595523770161");
        // exp(ln x) round trip
        let x = c.exp(&c.ln_u64(12345));
        let err = (&x - &c.from_int(12345)).raw.abs();
        assert!(err < c.parse_decimal("0.0000000000000000000000000000000000000001").raw);
        let ln_half = c.ln_ratio(&BigUint::from(1u32), &BigUint::from(2u32));
        assert_eq!(c.to_decimal(&ln_half, 20), "-0.69314718055994530941");
    }

    #[test]
    fn precision_bounds() {
        assert!(Precise::new(0).is_err());
        assert!(Precise::new(MAX_WORKING_DIGITS + 1).is_err());
        assert!(Precise::new(MAX_WORKING_DIGITS).is_ok());
    }
}
