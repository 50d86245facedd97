//! Commutative-ring abstraction and determinants over it.

use std::fmt::Debug;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use super::rat::Rat;

/// An exact commutative ring with (partial) exact division.
pub trait Ring: Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {
    /// `self / d` when `d` divides `self` exactly.
    fn exact_div(&self, d: &Self) -> Option<Self>;
}

impl Ring for Rat {
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

/// Size up to which determinants use cofactor expansion.
const COFACTOR_LIMIT: usize = 4;

/// Determinant of a square matrix. Cofactor expansion up to 4x4, fraction-free
/// (Bareiss) elimination above.
pub fn det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "det: matrix must be square");
    if n <= COFACTOR_LIMIT {
        cofactor_det(m)
    } else {
        bareiss_det(m)
    }
}

pub fn cofactor_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone(),
        _ => {
            let mut acc = R::zero();
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = entry.clone() * cofactor_det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

pub fn bareiss_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            a[i][k] = R::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn small_dets() {
        assert_eq!(det::<Rat>(&[]), rat(1));
        assert_eq!(det(&m(&[&[5]])), rat(5));
        assert_eq!(det(&m(&[&[1, 2], &[3, 4]])), rat(-2));
        assert_eq!(det(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])), rat(0));
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = vec![
            vec![rat(2), ratio(1, 3), rat(0), rat(5), rat(-1)],
            vec![rat(0), rat(0), rat(4), rat(1), rat(2)],
            vec![rat(1), rat(-2), rat(3), rat(0), ratio(7, 2)],
            vec![rat(3), rat(1), rat(1), rat(1), rat(1)],
            vec![rat(0), rat(6), rat(-5), rat(2), rat(0)],
        ];
        assert_eq!(bareiss_det(&a), cofactor_det(&a));
        let mut swapped = a.clone();
        swapped.swap(0, 1);
        assert_eq!(bareiss_det(&swapped), -cofactor_det(&a));
    }
}
