//! Sparse multivariate polynomials over [`Rat`], used to carry the Darboux
//! parameters symbolically (optionally together with the index `n` as one more
//! variable).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::{NPoly, Poly, Variable};
use super::rat::{rat, rat_to_string, Rat};
use super::ring::{det, Ring};
use crate::error::{Error, Result};

/// Exponent vector with trailing zeros trimmed, so that the derived `Ord` on
/// `Vec<u32>` is the lexicographic monomial order (variable 0 most significant).
type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect())
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.clone();
    for (i, e) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(*e)?;
    }
    Some(trim(out))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl ParamPoly {
    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        ParamPoly { terms }
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(m, Rat::one());
        ParamPoly { terms }
    }

    /// Lifts a univariate polynomial into variable `i`.
    pub fn from_univariate<V: Variable>(p: &Poly<V>, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0; i + 1];
                m[i] = e as u32;
                terms.insert(trim(m), c.clone());
            }
        }
        ParamPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// Total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0))
            .max()
    }

    /// Full evaluation; missing values count as zero.
    pub fn eval(&self, values: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.iter().enumerate() {
                if *e > 0 {
                    let v = values.get(i).cloned().unwrap_or_else(Rat::zero);
                    t *= super::rat::pow(&v, *e);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `var -> value`, keeping every other variable.
    pub fn specialize(&self, var: usize, value: &Rat) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            out.add_term(trim(rest), c * super::rat::pow(value, e));
        }
        out
    }

    /// Substitutes `var -> var + c`.
    pub fn shift_var(&self, var: usize, c: &Rat) -> Self {
        let lin = Self::var(var) + Self::constant(c.clone());
        let mut out = Self::zero();
        for (m, coef) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0);
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            let base = ParamPoly {
                terms: BTreeMap::from([(trim(rest), coef.clone())]),
            };
            out = out + base * lin.pow(e);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Coefficients with respect to `var`, ascending; each is free of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<ParamPoly> {
        let d = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Self::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0) as usize;
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            out[e].add_term(trim(rest), c.clone());
        }
        out
    }

    /// Converts to a univariate polynomial when only `var` occurs.
    pub fn to_univariate<V: Variable>(&self, var: usize) -> Option<Poly<V>> {
        let cs = self.coeffs_in(var);
        let mut out = Vec::with_capacity(cs.len());
        for c in cs {
            if c.is_zero() {
                out.push(Rat::zero());
            } else if c.terms.len() == 1 && c.terms.contains_key(&Vec::new()) {
                out.push(c.terms[&Vec::new()].clone());
            } else {
                return None;
            }
        }
        Some(Poly::new(out))
    }

    /// Resultant with respect to `var` (Sylvester determinant, rows of `p` first).
    pub fn resultant_in(p: &Self, q: &Self, var: usize) -> Result<Self> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        let (pc, qc) = (p.coeffs_in(var), q.coeffs_in(var));
        let (m, l) = (pc.len() - 1, qc.len() - 1);
        let size = m + l;
        let mut rows = Vec::with_capacity(size);
        for (cs, deg, count) in [(&pc, m, l), (&qc, l, m)] {
            for i in 0..count {
                let mut row = vec![Self::zero(); size];
                for t in 0..=deg {
                    row[i + t] = cs[deg - t].clone();
                }
                rows.push(row);
            }
        }
        Ok(det(&rows))
    }

    fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Renders with the given variable names (extra variables fall back to `v<i>`).
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    let name = names.get(i).map_or_else(|| format!("v{i}"), |n| n.to_string());
                    if *e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                s.push_str(&rat_to_string(&mag));
            } else if mag.is_one() {
                s.push_str(&vars.join("*"));
            } else {
                s.push_str(&format!("{}*{}", rat_to_string(&mag), vars.join("*")));
            }
        }
        s
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        Self::constant(Rat::one())
    }
}

impl Ring for ParamPoly {
    /// Multivariate division in lex order; `None` when the division is not exact.
    fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = mono_div(rm, &dm)?;
            let qc = rc / &dc;
            let t = ParamPoly {
                terms: BTreeMap::from([(qm.clone(), qc.clone())]),
            };
            rem = rem - t * d.clone();
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(mono_mul(a, b), ca * cb);
            }
        }
        out
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({})", self.display_with(&[]))
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&[]))
    }
}

/// Lifts an `NPoly` into variable `var` of a `ParamPoly`.
pub fn lift_npoly(p: &NPoly, var: usize) -> ParamPoly {
    ParamPoly::from_univariate(p, var)
}

/// Integer constant as a `ParamPoly`.
pub fn pconst(c: i64) -> ParamPoly {
    ParamPoly::constant(rat(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratio;

    #[test]
    fn arithmetic_and_eval() {
        let (a, b) = (ParamPoly::var(0), ParamPoly::var(1));
        let p = (a.clone() + b.clone()) * (a.clone() - b.clone());
        assert_eq!(p, a.clone() * a.clone() - b.clone() * b.clone());
        assert_eq!(p.eval(&[rat(3), rat(2)]), rat(5));
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.display_with(&["b0", "b1"]), "b0^2 - b1^2");
    }

    #[test]
    fn exact_division() {
        let (a, b) = (ParamPoly::var(0), ParamPoly::var(1));
        let f = a.clone() * a.clone() * b.clone() + b.clone() * pconst(3) + a.clone();
        let g = a.clone() - b.clone() + pconst(2);
        assert_eq!((f.clone() * g.clone()).exact_div(&g), Some(f.clone()));
        assert_eq!(f.exact_div(&(a.clone() + pconst(1))), None);
    }

    #[test]
    fn shift_and_coeffs() {
        let n = ParamPoly::var(1);
        let p = n.clone() * n.clone() * ParamPoly::var(0) + pconst(1);
        let s = p.shift_var(1, &rat(-1));
        assert_eq!(s.eval(&[rat(2), rat(5)]), p.eval(&[rat(2), rat(4)]));
        let cs = p.coeffs_in(1);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[2], ParamPoly::var(0));
        assert_eq!(cs[0], pconst(1));
        assert_eq!(p.specialize(0, &ratio(1, 2)).to_univariate::<crate::exact::NVar>(1).unwrap(),
            NPoly::new(vec![rat(1), rat(0), ratio(1, 2)]));
    }

    #[test]
    fn symbolic_resultant_specializes() {
        // Res_n(n^2 - b, n - 3) = 9 - b
        let n = ParamPoly::var(1);
        let p = n.clone() * n.clone() - ParamPoly::var(0);
        let q = n - pconst(3);
        let r = ParamPoly::resultant_in(&p, &q, 1).unwrap();
        assert_eq!(r, pconst(9) - ParamPoly::var(0));
    }
}
