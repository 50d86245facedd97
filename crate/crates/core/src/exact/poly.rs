//! Dense univariate polynomials over [`Rat`].
//!
//! One type serves both the discrete index `n` ([`NPoly`]) and the continuous
//! variable `x` ([`XPoly`]); a zero-sized marker keeps the two from mixing.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rat::{parse_rat, rat, rat_to_string, Rat};
use super::ring::{det, Ring};
use crate::error::{Error, Result};

pub trait Variable: Copy + Clone + fmt::Debug + PartialEq + Eq + Default + Send + Sync + 'static {
    const SYMBOL: &'static str;
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub struct NVar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub struct XVar;

impl Variable for NVar {
    const SYMBOL: &'static str = "n";
}

impl Variable for XVar {
    const SYMBOL: &'static str = "x";
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<V: Variable> {
    coeffs: Vec<Rat>,
    _var: PhantomData<V>,
}

/// Polynomial in the discrete index `n`.
pub type NPoly = Poly<NVar>;
/// Polynomial in the continuous variable `x`.
pub type XPoly = Poly<XVar>;

impl<V: Variable> Poly<V> {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, _var: PhantomData }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rat, d: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    /// `var + c`.
    pub fn linear(c: Rat) -> Self {
        Self::new(vec![c, Rat::one()])
    }

    /// `binom(var + a, m)` expanded as `prod_{i<m} (var + a - i) / m!`; valid for
    /// every value of the variable, including negative integers.
    pub fn binom(a: &Rat, m: u32) -> Self {
        let mut p = Self::one();
        for i in 0..m {
            p = p * Self::linear(a - rat(i as i64));
        }
        p.scale(&(Rat::one() / super::rat::factorial_rat(m)))
    }

    /// Rising factorial `(var + a)_m`.
    pub fn pochhammer(a: &Rat, m: u32) -> Self {
        let mut p = Self::one();
        for i in 0..m {
            p = p * Self::linear(a + rat(i as i64));
        }
        p
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * v + c)
    }

    pub fn eval_int(&self, v: i64) -> Rat {
        self.eval(&rat(v))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, j: usize) -> Self {
        if j >= self.coeffs.len() {
            return Self::zero();
        }
        // coefficient of var^(i-j) is c_i * i!/(i-j)!
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(j)
                .map(|(i, c)| {
                    let falling = ((i - j + 1)..=i).fold(Rat::one(), |acc, t| acc * rat(t as i64));
                    c * falling
                })
                .collect(),
        )
    }

    /// `p(var + c)`.
    pub fn shift(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let lin = Self::linear(c.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, a| acc * lin.clone() + Self::constant(a.clone()))
    }

    pub fn shift_int(&self, c: i64) -> Self {
        self.shift(&rat(c))
    }

    /// Euclidean division over the rationals: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&(Rat::one() / lc)),
            None => Self::zero(),
        }
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let (ds, dd) = (self.degree().unwrap_or(0), d.degree().unwrap());
        let e = (ds + 1).saturating_sub(dd) as u32;
        let factor = super::rat::pow(d.leading().unwrap(), e);
        self.scale(&factor).div_rem(d).1
    }

    /// Monic greatest common divisor via the subresultant remainder sequence.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = if a.degree() >= b.degree() {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if b.is_zero() {
            return a.monic();
        }
        let mut g = Rat::one();
        let mut h = Rat::one();
        loop {
            let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.monic();
            }
            if r.degree() == Some(0) {
                return Self::one();
            }
            let divisor = &g * super::rat::pow(&h, delta);
            a = b;
            b = r.scale(&(Rat::one() / divisor));
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                super::rat::pow(&g, delta) / super::rat::pow(&h, delta - 1)
            };
        }
    }

    /// Lagrange interpolation through distinct abscissae.
    pub fn interpolate(points: &[(Rat, Rat)]) -> Self {
        let mut acc = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = Self::one();
            let mut denom = Rat::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis * Self::linear(-xj.clone());
                    denom *= xi - xj;
                }
            }
            acc = acc + basis.scale(&(yi / denom));
        }
        acc
    }

    /// The unique `H` with `H(v) - H(v-1) = self(v)` and `H(0) = 0`.
    pub fn indefinite_sum(&self) -> Self {
        let d = self.degree().map_or(0, |d| d + 1);
        let mut points = Vec::with_capacity(d + 1);
        let mut running = Rat::zero();
        points.push((Rat::zero(), Rat::zero()));
        for s in 1..=d as i64 {
            running += self.eval_int(s);
            points.push((rat(s), running.clone()));
        }
        Self::interpolate(&points)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Sylvester matrix with the rows of `p` first, coefficients in descending order.
    pub fn sylvester(p: &Self, q: &Self) -> Vec<Vec<Rat>> {
        let (m, l) = (p.degree().unwrap_or(0), q.degree().unwrap_or(0));
        let size = m + l;
        let mut rows = Vec::with_capacity(size);
        for (poly, deg, count) in [(p, m, l), (q, l, m)] {
            for i in 0..count {
                let mut row = vec![Rat::zero(); size];
                for t in 0..=deg {
                    row[i + t] = poly.coeff(deg - t);
                }
                rows.push(row);
            }
        }
        rows
    }

    /// `Res(p, q) = det Sylvester(p, q) = lc(p)^deg(q) * prod q(roots of p)`.
    pub fn resultant(p: &Self, q: &Self) -> Result<Rat> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        Ok(det(&Self::sylvester(p, q)))
    }

    /// Maps the coefficients into a polynomial in another variable.
    pub fn rename<W: Variable>(&self) -> Poly<W> {
        Poly::new(self.coeffs.clone())
    }
}

impl<V: Variable> Zero for Poly<V> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new(), _var: PhantomData }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<V: Variable> One for Poly<V> {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl<V: Variable> Ring for Poly<V> {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

impl<'a, V: Variable> Add<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, V: Variable> Sub<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, V: Variable> Mul<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<V: Variable> $tr for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: Poly<V>) -> Poly<V> { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<V: Variable> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<V: Variable> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -self.clone()
    }
}

impl<V: Variable> fmt::Display for Poly<V> {
    /// Canonical text form, descending degree: `3/2*n^2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => V::SYMBOL.to_string(),
                _ => format!("{}^{}", V::SYMBOL, i),
            };
            if i == 0 {
                write!(f, "{}", rat_to_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{}*{var}", rat_to_string(&mag))?;
            }
        }
        Ok(())
    }
}

impl<V: Variable> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<V: Variable> FromStr for Poly<V> {
    type Err = Error;

    /// Parses the canonical text form (and mild variations such as `2*n^2+n-1/3`).
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = Self::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-Rat::one(), &term[1..]),
                b'+' => (Rat::one(), &term[1..]),
                _ => (Rat::one(), term),
            };
            let bad = || Error::Parse(format!("bad term {term:?} in {s:?}"));
            let (coef, power) = match body.find(V::SYMBOL) {
                None => (parse_rat(body)?, 0usize),
                Some(pos) => {
                    let head = body[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() { Rat::one() } else { parse_rat(head)? };
                    let tail = &body[pos + V::SYMBOL.len()..];
                    let power = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                    };
                    (coef, power)
                }
            };
            acc = acc + Self::monomial(sign * coef, power);
        }
        Ok(acc)
    }
}

impl<V: Variable> Serialize for Poly<V> {
    /// Ascending coefficient list of `"p/q"` strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::rat::serde_rat_vec::serialize(&self.coeffs, s)
    }
}

impl<'de, V: Variable> Deserialize<'de> for Poly<V> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        super::rat::serde_rat_vec::deserialize(d).map(Poly::new)
    }
}

/// `binom(var + a, m)` with integer offset.
pub fn binom_poly<V: Variable>(a: i64, m: u32) -> Poly<V> {
    Poly::binom(&rat(a), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratio;

    fn np(c: &[i64]) -> NPoly {
        NPoly::from_ints(c)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(np(&[-1, 0, 1]).eval_int(1), rat(0));
        assert_eq!(NPoly::one().eval(&ratio(7, 3)), rat(1));
        // tau = beta0 + binom(n+1, 1) = n + 2 for alpha = 1, beta0 = 1
        let tau = NPoly::constant(rat(1)) + binom_poly(1, 1);
        assert_eq!(tau.eval_int(-1), rat(1));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(NPoly::zero().degree(), None);
        assert_eq!(np(&[3]).degree(), Some(0));
        assert_eq!(np(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(NPoly::resultant(&np(&[-1, 1]), &np(&[1, 1])).unwrap(), rat(2));
        assert_eq!(NPoly::resultant(&np(&[0, 0, 1]), &np(&[-3, 1])).unwrap(), rat(9));
        assert_eq!(
            NPoly::resultant(&NPoly::zero(), &np(&[1])),
            Err(Error::UndefinedResultant)
        );
        assert_eq!(NPoly::resultant(&np(&[5]), &np(&[1, 2, 3])).unwrap(), rat(25));
    }

    #[test]
    fn det_over_polys() {
        // [[n,1],[1,n]] -> n^2 - 1
        let m = vec![vec![np(&[0, 1]), np(&[1])], vec![np(&[1]), np(&[0, 1])]];
        assert_eq!(det(&m), np(&[-1, 0, 1]));
        assert_eq!(det(&[vec![np(&[2, 3])]]), np(&[2, 3]));
    }

    #[test]
    fn shift_and_sum() {
        let p = np(&[1, 2, 3]);
        assert_eq!(p.shift_int(1).eval_int(4), p.eval_int(5));
        let s = p.indefinite_sum();
        for n in -3..6 {
            assert_eq!(s.eval_int(n) - s.eval_int(n - 1), p.eval_int(n));
        }
        assert_eq!(s.eval_int(0), rat(0));
    }

    #[test]
    fn gcd_monic() {
        let a = np(&[-1, 0, 1]) * np(&[2, 1]);
        let b = np(&[-1, 1]) * np(&[3, 0, 1]);
        assert_eq!(NPoly::gcd(&a, &b), np(&[-1, 1]));
        assert_eq!(NPoly::gcd(&a.scale(&rat(6)), &a), a.monic());
        assert!(NPoly::gcd(&np(&[1, 1]), &np(&[2, 1])).is_one());
    }

    #[test]
    fn text_round_trip() {
        let p = NPoly::new(vec![rat(-1), rat(0), ratio(3, 2)]);
        assert_eq!(p.to_string(), "3/2*n^2 - 1");
        assert_eq!(p.to_string().parse::<NPoly>().unwrap(), p);
        assert_eq!("x - 2".parse::<XPoly>().unwrap(), XPoly::from_ints(&[-2, 1]));
        assert_eq!("-n".parse::<NPoly>().unwrap(), np(&[0, -1]));
        assert_eq!(NPoly::zero().to_string(), "0");
        assert!("n^".parse::<NPoly>().is_err());
    }

    #[test]
    fn nth_derivative_matches_iterated() {
        let p = np(&[3, -1, 4, 1, -5, 9]);
        let mut q = p.clone();
        for j in 0..7 {
            assert_eq!(p.nth_derivative(j), q);
            q = q.derivative();
        }
    }
}
