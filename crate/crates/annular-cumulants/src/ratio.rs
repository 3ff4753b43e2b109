//! Exact rational arithmetic helpers.
//!
//! All combinatorial values in this crate are arbitrary-precision rationals
//! ([`Rat`]); `f64` appears only in the Monte Carlo lab. Display and parsing
//! use the plain fraction syntax `"p/q"` (or `"p"` for integers).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// The rational `n/1`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// The rational `p/q`; panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(Int::from(p), Int::from(q))
}

/// Integer power `base^exp` for possibly negative `exp`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp >= 0 {
        num::pow::pow(base.clone(), exp as usize)
    } else {
        num::pow::pow(base.clone(), (-exp) as usize).recip()
    }
}

/// `n!` as a big integer; `n < 0` is a bug.
pub fn factorial(n: i64) -> Int {
    assert!(n >= 0, "factorial of negative argument");
    let mut acc = Int::one();
    for k in 2..=n {
        acc *= Int::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` (zero outside `0 <= k <= n`).
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Catalan number `C_n = binom(2n, n)/(n+1)`.
pub fn catalan(n: i64) -> Int {
    assert!(n >= 0, "Catalan number of negative index");
    binomial(2 * n, n) / Int::from(n + 1)
}

/// Parse `"p/q"` or `"p"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    t.parse::<Rat>()
        .map_err(|_| Error::BadInput(format!("cannot parse rational {t:?}")))
}

/// Render a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// Convert to `f64` (Monte Carlo / reporting only).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Sign of a rational: -1, 0, or 1.
pub fn rat_signum(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(binomial(7, 3), Int::from(35));
        assert_eq!(binomial(4, 5), Int::from(0));
        assert_eq!(binomial(4, -1), Int::from(0));
    }

    #[test]
    fn catalan_numbers() {
        let want = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan(n as i64), Int::from(*w));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rat("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(rat_string(&ratio(6, 4)), "3/2");
        assert_eq!(rat_string(&rat(5)), "5");
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn pow_and_f64() {
        assert_eq!(rat_pow(&rat(2), 10), rat(1024));
        assert_eq!(rat_pow(&rat(2), -2), ratio(1, 4));
        assert!((rat_to_f64(&ratio(1, 3)) - 1.0 / 3.0).abs() < 1e-12);
        let big = rat_pow(&rat(10), 40) + ratio(1, 3);
        let approx = rat_to_f64(&big);
        assert!((approx / 1e40 - 1.0).abs() < 1e-9);
    }
}
