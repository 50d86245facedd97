//! Ordinary differential operators `sum_j b_j(x) D^j` with polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{NPoly, XPoly};
use super::rat::{rat, Rat};

/// Operator in coefficient-times-derivative normal form. Zero coefficients are
/// never stored, so structural equality is operator equality.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "BTreeMap<usize, XPoly>", into = "BTreeMap<usize, XPoly>")]
pub struct DiffOp {
    terms: BTreeMap<usize, XPoly>,
}

impl From<BTreeMap<usize, XPoly>> for DiffOp {
    fn from(terms: BTreeMap<usize, XPoly>) -> Self {
        DiffOp::from_terms(terms)
    }
}

impl From<DiffOp> for BTreeMap<usize, XPoly> {
    fn from(op: DiffOp) -> Self {
        op.terms
    }
}

fn binom_usize(n: usize, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = acc * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    acc
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        Self::multiplication(XPoly::one())
    }

    pub fn scalar(c: Rat) -> Self {
        Self::multiplication(XPoly::constant(c))
    }

    /// Multiplication by `p(x)`.
    pub fn multiplication(p: XPoly) -> Self {
        Self::term(0, p)
    }

    /// `d/dx`.
    pub fn d() -> Self {
        Self::term(1, XPoly::one())
    }

    /// `b(x) D^j`.
    pub fn term(j: usize, b: XPoly) -> Self {
        Self::from_terms(BTreeMap::from([(j, b)]))
    }

    pub fn from_terms(mut terms: BTreeMap<usize, XPoly>) -> Self {
        terms.retain(|_, b| !b.is_zero());
        DiffOp { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order, `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn coeff(&self, j: usize) -> XPoly {
        self.terms.get(&j).cloned().unwrap_or_else(XPoly::zero)
    }

    pub fn terms(&self) -> &BTreeMap<usize, XPoly> {
        &self.terms
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (j, b) in &other.terms {
            let e = terms.entry(*j).or_insert_with(XPoly::zero);
            *e = &*e + b;
        }
        Self::from_terms(terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(j, b)| (*j, b.scale(c))).collect())
    }

    /// `self ∘ other`, normalized via the Leibniz rule
    /// `D^i ∘ b = sum_t binom(i, t) b^(t) D^(i-t)`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<usize, XPoly> = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                for t in 0..=*i {
                    let bt = b.nth_derivative(t);
                    if bt.is_zero() {
                        break;
                    }
                    let c = a * &bt.scale(&binom_usize(*i, t));
                    let e = terms.entry(i - t + j).or_insert_with(XPoly::zero);
                    *e = &*e + &c;
                }
            }
        }
        Self::from_terms(terms)
    }

    /// `self ∘ self ∘ ... ` (`e` factors); `e = 0` gives the identity.
    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// `self(f) = sum_j b_j(x) f^(j)(x)`.
    pub fn apply(&self, f: &XPoly) -> XPoly {
        let mut acc = XPoly::zero();
        for (j, b) in &self.terms {
            let fj = f.nth_derivative(*j);
            if !fj.is_zero() {
                acc = acc + b * &fj;
            }
        }
        acc
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Whether every coefficient `b_j` has degree at most `j`.
    pub fn has_bounded_coefficients(&self) -> bool {
        self.terms.iter().all(|(j, b)| b.degree().is_none_or(|d| d <= *j))
    }
}

/// `h(base + shift)`, powers of `base` by composition (Horner form).
pub fn op_substitute(h: &NPoly, base: &DiffOp, shift: i64) -> DiffOp {
    let h = h.shift_int(shift);
    h.coeffs().iter().rev().fold(DiffOp::zero(), |acc, c| {
        acc.compose(base).add(&DiffOp::scalar(c.clone()))
    })
}

impl fmt::Display for DiffOp {
    /// Canonical form, descending order: `(x^2 - 1)*D^2 + (3)*D^0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(j, b)| format!("({b})*D^{j}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(c: &[i64]) -> XPoly {
        XPoly::from_ints(c)
    }

    /// `x D^2 - x D`.
    fn d2() -> DiffOp {
        DiffOp::term(2, xp(&[0, 1])).add(&DiffOp::term(1, xp(&[0, -1])))
    }

    #[test]
    fn weyl_relation() {
        let d1 = DiffOp::d();
        let lhs = d1.commutator(&d2());
        let rhs = d1.compose(&d1).sub(&d1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn apply_basics() {
        assert_eq!(DiffOp::d().apply(&xp(&[0, 0, 1])), xp(&[0, 2]));
        assert!(DiffOp::zero().apply(&xp(&[1, 2, 3])).is_zero());
        let a = d2();
        assert_eq!(DiffOp::identity().compose(&a), a);
        assert_eq!(a.compose(&DiffOp::identity()), a);
    }

    #[test]
    fn substitute_powers() {
        let base = d2();
        assert_eq!(op_substitute(&NPoly::var(), &base, 0), base);
        assert_eq!(
            op_substitute(&NPoly::from_ints(&[0, 0, 1]), &base, 0),
            base.compose(&base)
        );
        // (n+1) at shift 0 equals n at shift 1
        assert_eq!(
            op_substitute(&NPoly::from_ints(&[1, 1]), &base, 0),
            op_substitute(&NPoly::var(), &base, 1)
        );
    }

    #[test]
    fn display_and_json() {
        let op = DiffOp::term(2, xp(&[-1, 0, 1])).add(&DiffOp::scalar(rat(3)));
        assert_eq!(op.to_string(), "(x^2 - 1)*D^2 + (3)*D^0");
        let json = serde_json::to_string(&op).unwrap();
        let back: DiffOp = serde_json::from_str(&json).unwrap();
        assert_eq!(back, op);
        assert_eq!(op.order(), Some(2));
        assert_eq!(DiffOp::zero().order(), None);
    }
}
