//! Exact integer-root search for rational polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::NPoly;
use super::rat::{ceil_int, Rat};

struct Sturm {
    chain: Vec<NPoly>,
}

impl Sturm {
    fn new(p: &NPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let k = chain.len();
            if chain[k - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[k - 2].div_rem(&chain[k - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(-r);
        }
        Sturm { chain }
    }

    fn variations(&self, t: &Rat) -> usize {
        let signs: Vec<bool> = self
            .chain
            .iter()
            .map(|q| q.eval(t))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Cauchy bound: every real root `r` satisfies `|r| < 1 + max |a_i / a_d|`.
fn cauchy_bound(p: &NPoly) -> BigInt {
    let lc = p.leading().expect("nonzero polynomial");
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(Rat::zero);
    ceil_int(&(m + Rat::one()))
}

/// All integer roots `r >= lower` of a nonzero polynomial, ascending.
pub fn integer_roots_at_least(p: &NPoly, lower: i64) -> Vec<BigInt> {
    assert!(!p.is_zero(), "integer roots of the zero polynomial");
    if p.degree() == Some(0) {
        return Vec::new();
    }
    let square_free = p.div_rem(&NPoly::gcd(p, &p.derivative())).0;
    let sturm = Sturm::new(&square_free);
    // Non-integer abscissa just above integer m that is not a root.
    let endpoint = |m: &BigInt| -> Rat {
        (2i64..)
            .find_map(|d| {
                let t = Rat::from_integer(m.clone()) + Rat::new(BigInt::one(), BigInt::from(d));
                (!square_free.eval(&t).is_zero()).then_some(t)
            })
            .unwrap()
    };
    let lo = BigInt::from(lower) - 1;
    let hi = cauchy_bound(&square_free);
    let mut roots = Vec::new();
    if hi < BigInt::from(lower) {
        return roots;
    }
    // (integer interval (m1, m2], variations at both ends)
    let (v_lo, v_hi) = (sturm.variations(&endpoint(&lo)), sturm.variations(&endpoint(&hi)));
    let mut stack = vec![(lo, hi, v_lo, v_hi)];
    while let Some((m1, m2, v1, v2)) = stack.pop() {
        if v1 <= v2 {
            continue;
        }
        if &m2 - &m1 == BigInt::one() {
            if square_free.eval(&Rat::from_integer(m2.clone())).is_zero() {
                roots.push(m2);
            }
            continue;
        }
        let mid: BigInt = (&m1 + &m2) / 2;
        let vm = sturm.variations(&endpoint(&mid));
        stack.push((m1, mid.clone(), v1, vm));
        stack.push((mid, m2, vm, v2));
    }
    roots.sort();
    roots
}
