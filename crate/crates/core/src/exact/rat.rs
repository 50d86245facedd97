//! Arbitrary-precision rationals and the integer combinatorics built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn factorial_rat(n: u32) -> Rat {
    Rat::from_integer(factorial(n))
}

/// Generalized binomial coefficient `top choose m` for rational `top`.
pub fn binom_rat(top: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= top - rat(i as i64);
    }
    acc / factorial_rat(m)
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`.
pub fn pochhammer(a: &Rat, m: u32) -> Rat {
    let mut acc = Rat::one();
    for i in 0..m {
        acc *= a + rat(i as i64);
    }
    acc
}

pub fn pow(base: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Parses `"p"`, `"-p/q"` or `" p / q "`. Decimal points and exponents are rejected.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |x: &str| {
        let digits = x.strip_prefix('-').or_else(|| x.strip_prefix('+')).unwrap_or(x);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.trim_start_matches('+').parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Parses a comma-separated list of rationals.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rat).collect()
}

/// Canonical `"p/q"` (or `"p"` for integers) text form.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn as_integer(r: &Rat) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}

pub fn as_i64(r: &Rat) -> Option<i64> {
    as_integer(r).and_then(|n| n.to_i64())
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &Rat) -> BigInt {
    let (q, rem) = r.numer().div_rem(r.denom());
    if rem.is_positive() {
        q + 1
    } else {
        q
    }
}

pub(crate) mod serde_rat {
    //! Rationals as decimal `"p/q"` strings in JSON.
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod serde_rat_vec {
    use super::*;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&rat_to_string(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rat>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
