//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};
use serde::Serialize;

use super::rat::Rat;

/// Dense system `matrix * v = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinSystem {
    pub matrix: Vec<Vec<Rat>>,
    pub rhs: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Solution {
    Unique(#[serde(with = "super::rat::serde_rat_vec")] Vec<Rat>),
    /// Affine family of dimension `dim`; `particular` has every free variable at zero.
    Affine {
        dim: usize,
        #[serde(with = "super::rat::serde_rat_vec")]
        particular: Vec<Rat>,
    },
    Infeasible,
}

impl LinSystem {
    pub fn new(matrix: Vec<Vec<Rat>>, rhs: Vec<Rat>) -> Self {
        assert_eq!(matrix.len(), rhs.len(), "row count must match rhs length");
        if let Some(first) = matrix.first() {
            assert!(matrix.iter().all(|r| r.len() == first.len()), "ragged matrix");
        }
        LinSystem { matrix, rhs }
    }

    pub fn ncols(&self) -> usize {
        self.matrix.first().map_or(0, Vec::len)
    }

    pub fn solve(&self) -> Solution {
        let mut ech = Echelon::new(self.ncols());
        for (row, b) in self.matrix.iter().zip(&self.rhs) {
            ech.push(row.clone(), b.clone());
        }
        ech.solution()
    }
}

pub fn linsolve(sys: &LinSystem) -> Solution {
    sys.solve()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOutcome {
    NewPivot,
    Redundant,
    Inconsistent,
}

/// Row-echelon form built one equation at a time. Each stored row has a unit
/// pivot and vanishes at the pivots of all rows stored before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<Rat>, Rat)>,
    inconsistent: bool,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), inconsistent: false }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn push(&mut self, mut row: Vec<Rat>, mut rhs: Rat) -> RowOutcome {
        debug_assert_eq!(row.len(), self.ncols);
        for (p, prow, prhs) in &self.rows {
            if row[*p].is_zero() {
                continue;
            }
            let f = row[*p].clone();
            for (c, v) in prow.iter().enumerate() {
                if !v.is_zero() {
                    row[c] -= &f * v;
                }
            }
            rhs -= &f * prhs;
        }
        match row.iter().position(|v| !v.is_zero()) {
            Some(p) => {
                let inv = Rat::one() / &row[p];
                for v in row.iter_mut() {
                    if !v.is_zero() {
                        *v *= &inv;
                    }
                }
                rhs *= &inv;
                self.rows.push((p, row, rhs));
                RowOutcome::NewPivot
            }
            None if rhs.is_zero() => RowOutcome::Redundant,
            None => {
                self.inconsistent = true;
                RowOutcome::Inconsistent
            }
        }
    }

    fn pivot_cols(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.ncols];
        for (i, (p, _, _)) in self.rows.iter().enumerate() {
            owner[*p] = Some(i);
        }
        owner
    }

    fn back_substitute(&self, x: &mut [Rat], homogeneous: bool) {
        for (p, row, rhs) in self.rows.iter().rev() {
            let mut v = if homogeneous { Rat::zero() } else { rhs.clone() };
            for (c, a) in row.iter().enumerate() {
                if c != *p && !a.is_zero() && !x[c].is_zero() {
                    v -= a * &x[c];
                }
            }
            x[*p] = v;
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        self.pivot_cols()
            .iter()
            .enumerate()
            .filter(|(_, o)| o.is_none())
            .map(|(c, _)| c)
            .collect()
    }

    /// Solution with all free variables set to zero.
    pub fn particular(&self) -> Option<Vec<Rat>> {
        if self.inconsistent {
            return None;
        }
        let mut x = vec![Rat::zero(); self.ncols];
        self.back_substitute(&mut x, false);
        Some(x)
    }

    /// Basis of the homogeneous solution space, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut x = vec![Rat::zero(); self.ncols];
                x[f] = Rat::one();
                self.back_substitute(&mut x, true);
                x
            })
            .collect()
    }

    pub fn solution(&self) -> Solution {
        match self.particular() {
            None => Solution::Infeasible,
            Some(x) if self.is_full_rank() => Solution::Unique(x),
            Some(x) => Solution::Affine { dim: self.ncols - self.rank(), particular: x },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, ratio};

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn identity_unique() {
        let sys = LinSystem::new(vec![r(&[1, 0]), r(&[0, 1])], r(&[1, 0]));
        assert_eq!(linsolve(&sys), Solution::Unique(r(&[1, 0])));
    }

    #[test]
    fn underdetermined_affine() {
        let sys = LinSystem::new(vec![r(&[1, 1])], r(&[0]));
        assert_eq!(linsolve(&sys), Solution::Affine { dim: 1, particular: r(&[0, 0]) });
    }

    #[test]
    fn infeasible() {
        let sys = LinSystem::new(vec![r(&[1, 1]), r(&[2, 2])], r(&[1, 3]));
        assert_eq!(linsolve(&sys), Solution::Infeasible);
    }

    #[test]
    fn residual_zero_and_nullspace() {
        let a = vec![r(&[2, 1, -1, 3]), r(&[4, 2, 0, 1]), r(&[6, 3, -1, 4])];
        let b = vec![ratio(1, 2), rat(3), ratio(7, 2)];
        let mut ech = Echelon::new(4);
        for (row, rhs) in a.iter().zip(&b) {
            ech.push(row.clone(), rhs.clone());
        }
        let x = ech.particular().unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            let lhs: Rat = row.iter().zip(&x).map(|(p, q)| p * q).sum();
            assert_eq!(&lhs, rhs);
        }
        let ns = ech.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let lhs: Rat = row.iter().zip(&v).map(|(p, q)| p * q).sum();
                assert!(lhs.is_zero());
            }
        }
    }
}
