//! Darboux-transformed Laguerre systems.
//!
//! A [`KernelBasis`] is a list of polynomial sequences `ψ^(0..k)` in the index
//! `n`. From it come the Casorati determinants `τ(n)` and `ρ(n)`, the lower
//! triangular operator `Q f_n = Wr_n(ψ^(0), …, ψ^(k-1), f_n)`, and the generalized
//! polynomials `L̂_n = Q L_n`. A [`SystemSpec`] is the kernel basis selected by
//! the parameters `(α, β_0..β_{k-1})`.
//!
//! Casorati orientation: functions are columns, row `r` holds the values at
//! `n - r`. The Laguerre column uses `L_m = 0` for `m < 0`; the `ψ` columns are
//! evaluated by polynomial extension.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exact::rat::{factorial_rat, pochhammer, pow, rat, rat_to_string, Rat};
use crate::exact::roots::integer_roots_at_least;
use crate::exact::{det, linsolve, LinSystem, NPoly, Solution, XPoly};
use crate::laguerre::{classical_jacobi_row, gamma_integral, laguerre_deriv_at_zero, laguerre_poly};

/// `φ^{1,j}_n = (-1)^j / (1-α)_j · binom(n+j, j)` and
/// `φ^{2,j}_n = (-1)^j / j! · binom(n+α+j, α+j)`.
pub fn phi(alpha: u32, i: u32, j: u32) -> Result<NPoly> {
    let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
    match i {
        1 => {
            let p = pochhammer(&rat(1 - alpha as i64), j);
            if p.is_zero() {
                return Err(Error::PhiUndefined { alpha, j });
            }
            Ok(NPoly::binom(&rat(j as i64), j).scale(&(sign / p)))
        }
        2 => Ok(NPoly::binom(&rat((alpha + j) as i64), alpha + j).scale(&(sign / factorial_rat(j)))),
        _ => Err(Error::InvalidSpec(format!("phi family index must be 1 or 2, got {i}"))),
    }
}

/// `ψ^(j)_n = sum_{l=0}^{j} β_{j-l} φ^{1,l}_n + φ^{2,j}_n`.
pub fn psi(alpha: u32, beta: &[Rat], j: usize) -> Result<NPoly> {
    let mut acc = phi(alpha, 2, j as u32)?;
    for l in 0..=j {
        acc = acc + phi(alpha, 1, l as u32)?.scale(&beta[j - l]);
    }
    Ok(acc)
}

/// Casorati matrix of polynomial columns with rows at the given shifts.
fn casorati_rows(cols: &[NPoly], shifts: &[i64]) -> Vec<Vec<NPoly>> {
    shifts
        .iter()
        .map(|&s| cols.iter().map(|p| p.shift_int(-s)).collect())
        .collect()
}

/// Discrete Wronskian `Wr_n(f^(1), …, f^(m)) = det(f^(i)_{n-j+1})` as a polynomial in `n`.
pub fn casorati(cols: &[NPoly]) -> NPoly {
    let shifts: Vec<i64> = (0..cols.len() as i64).collect();
    det(&casorati_rows(cols, &shifts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Admissibility {
    pub admissible: bool,
    /// Smallest integer `n >= -1` with `τ(n) = 0`.
    pub witness: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiRow {
    pub n: i64,
    #[serde(with = "crate::exact::rat::serde_rat")]
    pub a_hat: Rat,
    #[serde(with = "crate::exact::rat::serde_rat")]
    pub b_hat: Rat,
    #[serde(with = "crate::exact::rat::serde_rat")]
    pub c_hat: Rat,
}

/// Kernel of `Q`, with its derived determinants.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelBasis {
    alpha: u32,
    psis: Vec<NPoly>,
    tau: NPoly,
    rho: NPoly,
}

impl KernelBasis {
    pub fn new(alpha: u32, psis: Vec<NPoly>) -> Self {
        let tau = casorati(&psis);
        let rho = if psis.is_empty() {
            NPoly::zero()
        } else {
            let mut shifts = vec![0i64];
            shifts.extend(2..=psis.len() as i64);
            det(&casorati_rows(&psis, &shifts))
        };
        KernelBasis { alpha, psis, tau, rho }
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn k(&self) -> usize {
        self.psis.len()
    }

    pub fn psis(&self) -> &[NPoly] {
        &self.psis
    }

    /// `τ(n) = Wr_n(ψ^(0), …, ψ^(k-1))`.
    pub fn tau(&self) -> &NPoly {
        &self.tau
    }

    /// Determinant of the `ψ` rows at `n, n-2, n-3, …, n-k`.
    pub fn rho(&self) -> &NPoly {
        &self.rho
    }

    fn alpha_rat(&self) -> Rat {
        rat(self.alpha as i64)
    }

    /// Row `n` of `Q`: `q[i] = q_{n,n-i}` for `i = 0..=k`, the signed cofactors of
    /// the Laguerre column.
    pub fn q_row(&self, n: i64) -> Vec<Rat> {
        let k = self.k();
        let values: Vec<Vec<Rat>> = (0..=k as i64)
            .map(|r| self.psis.iter().map(|p| p.eval_int(n - r)).collect())
            .collect();
        (0..=k)
            .map(|r| {
                let minor: Vec<Vec<Rat>> = values
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != r)
                    .map(|(_, row)| row.clone())
                    .collect();
                let c = det(&minor);
                if (r + k) % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect()
    }

    /// Applies `Q` to a sequence given by `f(m)`, with `f(m) = 0` for `m < 0`.
    pub fn apply_q(&self, n: i64, f: impl Fn(i64) -> XPoly) -> XPoly {
        self.q_row(n)
            .iter()
            .enumerate()
            .filter(|(i, q)| n - *i as i64 >= 0 && !q.is_zero())
            .fold(XPoly::zero(), |acc, (i, q)| acc + f(n - i as i64).scale(q))
    }

    /// `L̂_n(x) = Wr_n(ψ^(0), …, ψ^(k-1), L_n(x))`, expanded along the Laguerre column.
    pub fn hat_laguerre(&self, n: i64) -> XPoly {
        if n < 0 {
            return XPoly::zero();
        }
        let a = self.alpha_rat();
        self.apply_q(n, |m| laguerre_poly(&a, m))
    }

    /// `[L̂_0, …, L̂_N]`, sharing the classical polynomials between rows.
    pub fn hat_laguerre_range(&self, n_max: i64) -> Vec<XPoly> {
        let a = self.alpha_rat();
        let classical: Vec<XPoly> = (0..=n_max).map(|m| laguerre_poly(&a, m)).collect();
        (0..=n_max)
            .map(|n| self.apply_q(n, |m| classical[m as usize].clone()))
            .collect()
    }

    /// Same polynomial computed as a full determinant over `Q[x]`.
    pub fn hat_laguerre_det(&self, n: i64) -> XPoly {
        let a = self.alpha_rat();
        let rows: Vec<Vec<XPoly>> = (0..=self.k() as i64)
            .map(|r| {
                let mut row: Vec<XPoly> = self
                    .psis
                    .iter()
                    .map(|p| XPoly::constant(p.eval_int(n - r)))
                    .collect();
                row.push(laguerre_poly(&a, n - r));
                row
            })
            .collect();
        det(&rows)
    }

    /// `d^j L̂_n / dx^j (0)` as a polynomial in `n`.
    pub fn hat_deriv_at_zero(&self, j: u32) -> NPoly {
        let mut cols = self.psis.clone();
        cols.push(laguerre_deriv_at_zero(self.alpha, j));
        casorati(&cols)
    }

    /// `τ(n) != 0` for every integer `n >= -1`.
    pub fn admissibility(&self) -> Admissibility {
        if self.tau.is_zero() {
            return Admissibility { admissible: false, witness: Some(-1) };
        }
        let roots = integer_roots_at_least(&self.tau, -1);
        let sweep = (-1..=self.tau.degree().unwrap_or(0) as i64 + 1).find(|&n| self.tau.eval_int(n).is_zero());
        let witness = roots
            .first()
            .map(|r| i64::try_from(r).unwrap_or(i64::MAX))
            .or(sweep);
        debug_assert!(sweep.is_none() || witness.is_some_and(|w| w <= sweep.unwrap()));
        Admissibility { admissible: witness.is_none(), witness }
    }

    pub fn require_admissible(&self) -> Result<()> {
        match self.admissibility().witness {
            None => Ok(()),
            Some(w) => Err(Error::Inadmissible { witness: w }),
        }
    }

    /// Entries of the transformed Jacobi matrix at row `n`.
    pub fn jacobi_row(&self, n: i64) -> JacobiRow {
        let k = self.k() as i64;
        let alpha = self.alpha_rat();
        let nn = rat(n);
        let (t_prev, t_cur) = (self.tau.eval_int(n - 1), self.tau.eval_int(n));
        let a_hat = -(&t_prev / &t_cur) * (&nn + Rat::one());
        let mut b_hat = rat(2) * &nn + &alpha + Rat::one() - self.rho.eval_int(n + 1) / &t_cur * (&nn + Rat::one());
        if n != 0 {
            b_hat += self.rho.eval_int(n) / &t_prev * &nn;
        }
        let c_hat = -(&t_cur / &t_prev) * (&nn + &alpha - rat(k));
        JacobiRow { n, a_hat, b_hat, c_hat }
    }

    /// `ĉ_n L̂_{n-1} + b̂_n L̂_n + â_n L̂_{n+1} = x L̂_n` for `n = 0..=N`.
    pub fn recurrence_check(&self, n_max: i64) -> Certificate {
        let hats = self.hat_laguerre_range(n_max + 1);
        Certificate::over("three-term recurrence of the transformed polynomials", 0, n_max, |n| {
            let row = self.jacobi_row(n);
            let i = n as usize;
            let mut lhs = &hats[i].scale(&row.b_hat) + &hats[i + 1].scale(&row.a_hat);
            if n > 0 {
                lhs = &lhs + &hats[i - 1].scale(&row.c_hat);
            }
            let rhs = hats[i].shift_up(1);
            (lhs != rhs).then(|| format!("coefficients differ: lhs {lhs} vs x*Lhat {rhs}"))
        })
    }

    /// `Ĵ Q = Q J` applied to the Laguerre sequence: `(Ĵ L̂)_n = Q (J L)_n`.
    pub fn intertwining_check(&self, n_max: i64) -> Certificate {
        let alpha = self.alpha_rat();
        let j_applied = |m: i64| -> XPoly {
            let (a, b, c) = classical_jacobi_row(&alpha, m);
            &(&laguerre_poly(&alpha, m - 1).scale(&c) + &laguerre_poly(&alpha, m).scale(&b))
                + &laguerre_poly(&alpha, m + 1).scale(&a)
        };
        Certificate::over("intertwining J-hat Q = Q J on the Laguerre sequence", 0, n_max, |n| {
            let row = self.jacobi_row(n);
            let mut lhs = &self.hat_laguerre(n).scale(&row.b_hat) + &self.hat_laguerre(n + 1).scale(&row.a_hat);
            if n > 0 {
                lhs = &lhs + &self.hat_laguerre(n - 1).scale(&row.c_hat);
            }
            let rhs = self.apply_q(n, j_applied);
            (lhs != rhs).then(|| format!("J-hat Lhat {lhs} vs Q J L {rhs}"))
        })
    }

    /// `hat_deriv_at_zero` agrees with differentiating `L̂_n` at `x = 0`.
    pub fn deriv_at_zero_check(&self, j_max: u32, n_max: i64) -> Certificate {
        let polys: Vec<NPoly> = (0..=j_max).map(|j| self.hat_deriv_at_zero(j)).collect();
        Certificate::over("derivatives of Lhat_n at 0 from the Casorati formula", 0, n_max, |n| {
            let hat = self.hat_laguerre(n);
            (0..=j_max).find_map(|j| {
                let direct = hat.nth_derivative(j as usize).eval(&Rat::zero());
                let formula = polys[j as usize].eval_int(n);
                (direct != formula).then(|| format!("j={j}: {} vs {}", rat_to_string(&direct), rat_to_string(&formula)))
            })
        })
    }
}

/// The Darboux system selected by `(α, k, β)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SystemSpec {
    pub alpha: u32,
    pub beta: Vec<Rat>,
    basis: KernelBasis,
}

impl SystemSpec {
    /// Requires `k <= α`. `k = 0` is the untransformed classical system.
    /// Admissibility is not enforced here; see [`SystemSpec::admissibility`].
    pub fn new(alpha: u32, beta: Vec<Rat>) -> Result<Self> {
        let k = beta.len();
        if k > alpha as usize {
            return Err(Error::InvalidSpec(format!("need k <= alpha, got k={k}, alpha={alpha}")));
        }
        let psis = (0..k).map(|j| psi(alpha, &beta, j)).collect::<Result<Vec<_>>>()?;
        Ok(SystemSpec { alpha, beta, basis: KernelBasis::new(alpha, psis) })
    }

    /// Like [`SystemSpec::new`] but rejects inadmissible parameters.
    pub fn admissible(alpha: u32, beta: Vec<Rat>) -> Result<Self> {
        let spec = Self::new(alpha, beta)?;
        spec.basis.require_admissible()?;
        Ok(spec)
    }

    pub fn k(&self) -> usize {
        self.beta.len()
    }

    pub fn basis(&self) -> &KernelBasis {
        &self.basis
    }

    pub fn tau(&self) -> &NPoly {
        self.basis.tau()
    }

    pub fn admissibility(&self) -> Admissibility {
        self.basis.admissibility()
    }

    pub fn hat_laguerre(&self, n: i64) -> XPoly {
        self.basis.hat_laguerre(n)
    }

    pub fn jacobi_row(&self, n: i64) -> JacobiRow {
        self.basis.jacobi_row(n)
    }

    /// Weight parameters: closed forms for `k <= 2`, linear solve otherwise.
    pub fn moment_functional(&self) -> Result<MomentFunctional> {
        u_from_beta(self)
    }
}

impl std::ops::Deref for SystemSpec {
    type Target = KernelBasis;
    fn deref(&self) -> &KernelBasis {
        &self.basis
    }
}

/// `τ(-1) = (-1)^{binom(k,2)} β_0^k / prod_{j=1}^{k-1} (α-j)^{k-j}`.
pub fn tau_minus_one_closed_form(alpha: u32, k: u32, beta0: &Rat) -> Rat {
    let sign = if (k * k.saturating_sub(1) / 2) % 2 == 0 { Rat::one() } else { -Rat::one() };
    let denom = (1..k).fold(Rat::one(), |acc, j| acc * pow(&rat(alpha as i64 - j as i64), k - j));
    sign * pow(beta0, k) / denom
}

/// `ℳ(f) = (1/(α-k)!) ∫ f x^{α-k} e^{-x} dx + sum_j u_j f^(j)(0)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentFunctional {
    pub alpha_eff: u32,
    #[serde(with = "crate::exact::rat::serde_rat_vec")]
    pub u: Vec<Rat>,
}

impl MomentFunctional {
    pub fn apply(&self, f: &XPoly) -> Rat {
        let integral = gamma_integral(f, self.alpha_eff) / factorial_rat(self.alpha_eff);
        let boundary: Rat = self
            .u
            .iter()
            .enumerate()
            .map(|(j, u)| u * f.coeff(j) * factorial_rat(j as u32))
            .sum();
        integral + boundary
    }
}

/// Closed forms: `k=1: u_0 = 1/β_0`; `k=2: u_0 = -(α-1)(β_0+β_1)/β_0^2, u_1 = (α-1)/β_0`.
/// Larger `k` goes through [`u_by_linear_solve`].
pub fn u_from_beta(spec: &SystemSpec) -> Result<MomentFunctional> {
    spec.basis.require_admissible()?;
    let alpha_eff = spec.alpha - spec.k() as u32;
    let b = &spec.beta;
    let u = match spec.k() {
        0 => Vec::new(),
        1 => vec![Rat::one() / &b[0]],
        2 => {
            let am1 = rat(spec.alpha as i64 - 1);
            vec![-(&am1 * (&b[0] + &b[1])) / (&b[0] * &b[0]), am1 / &b[0]]
        }
        _ => return u_by_linear_solve(spec.basis()),
    };
    Ok(MomentFunctional { alpha_eff, u })
}

/// Solves `ℳ(L̂_n) = 0` for `n = 1..=k` (orthogonality against the constant `L̂_0`).
pub fn u_by_linear_solve(basis: &KernelBasis) -> Result<MomentFunctional> {
    let k = basis.k();
    let alpha_eff = basis.alpha() - k as u32;
    let base = MomentFunctional { alpha_eff, u: Vec::new() };
    let mut matrix = Vec::with_capacity(k);
    let mut rhs = Vec::with_capacity(k);
    for n in 1..=k as i64 {
        let hat = basis.hat_laguerre(n);
        matrix.push((0..k).map(|j| hat.coeff(j) * factorial_rat(j as u32)).collect());
        rhs.push(-base.apply(&hat));
    }
    match linsolve(&LinSystem::new(matrix, rhs)) {
        Solution::Unique(u) => Ok(MomentFunctional { alpha_eff, u }),
        _ => Err(Error::UParametersNotDetermined),
    }
}

/// `ℳ(L̂_n L̂_m) = 0` for `0 <= m < n <= N` and `ℳ(L̂_n^2) != 0`.
pub fn orthogonality_check(basis: &KernelBasis, m: &MomentFunctional, n_max: i64) -> Certificate {
    let hats = basis.hat_laguerre_range(n_max);
    Certificate::over("orthogonality of Lhat_n under the Krall moment functional", 0, n_max, |n| {
        let hn = &hats[n as usize];
        if m.apply(&(hn * hn)).is_zero() {
            return Some("vanishing squared norm".into());
        }
        (0..n).find_map(|j| {
            let v = m.apply(&(hn * &hats[j as usize]));
            (!v.is_zero()).then(|| format!("M(Lhat_n Lhat_{j}) = {}", rat_to_string(&v)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratio;

    fn spec(alpha: u32, beta: &[Rat]) -> SystemSpec {
        SystemSpec::new(alpha, beta.to_vec()).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(4, 1, 0).unwrap(), NPoly::one());
        assert_eq!(phi(2, 2, 0).unwrap(), NPoly::binom(&rat(2), 2));
        assert_eq!(phi(3, 1, 1).unwrap(), NPoly::new(vec![ratio(1, 2), ratio(1, 2)]));
        assert_eq!(phi(2, 1, 2), Err(Error::PhiUndefined { alpha: 2, j: 2 }));
    }

    #[test]
    fn psi_examples() {
        let b0 = ratio(3, 7);
        let s = spec(3, &[b0.clone()]);
        assert_eq!(s.psis()[0], NPoly::constant(b0.clone()) + NPoly::binom(&rat(3), 3));
        let b1 = ratio(-2, 5);
        let s2 = spec(3, &[b0.clone(), b1.clone()]);
        let expected = &(&NPoly::constant(b1) + &NPoly::linear(rat(1)).scale(&(&b0 / rat(2))))
            - &NPoly::binom(&rat(4), 4);
        assert_eq!(s2.psis()[1], expected);
        let s3 = spec(2, &[rat(1), rat(0)]);
        assert_eq!(s3.psis()[1].eval_int(0), rat(0));
    }

    #[test]
    fn tau_rho_k1() {
        let s = spec(1, &[rat(1)]);
        assert_eq!(s.tau(), &NPoly::from_ints(&[2, 1]));
        assert_eq!(s.rho(), s.tau());
        assert_eq!(s.tau().eval_int(-1), tau_minus_one_closed_form(1, 1, &rat(1)));
    }

    #[test]
    fn admissibility_examples() {
        assert!(spec(1, &[rat(1)]).admissibility().admissible);
        assert_eq!(
            spec(1, &[rat(-1)]).admissibility(),
            Admissibility { admissible: false, witness: Some(0) }
        );
        assert_eq!(spec(3, &[rat(0)]).admissibility().witness, Some(-1));
        assert_eq!(spec(2, &[rat(0), rat(1)]).admissibility().witness, Some(-1));
        assert!(matches!(
            SystemSpec::admissible(1, vec![rat(-1)]),
            Err(Error::Inadmissible { witness: 0 })
        ));
        // beta0 = -binom(5+2, 2) = -21 kills n = 5
        assert_eq!(spec(2, &[rat(-21)]).admissibility().witness, Some(5));
    }

    #[test]
    fn jacobi_row_examples() {
        let s = spec(1, &[rat(1)]);
        let r0 = s.jacobi_row(0);
        assert_eq!(r0.a_hat, ratio(-1, 2));
        assert_eq!(s.jacobi_row(1).c_hat, ratio(-3, 2));
    }

    #[test]
    fn k_zero_is_classical() {
        let s = spec(3, &[]);
        for n in 0..6 {
            let row = s.jacobi_row(n);
            let (a, b, c) = classical_jacobi_row(&rat(3), n);
            assert_eq!((row.a_hat, row.b_hat, row.c_hat), (a, b, c));
            assert_eq!(s.hat_laguerre(n), laguerre_poly(&rat(3), n));
        }
        assert!(s.recurrence_check(8).pass);
    }

    #[test]
    fn k1_hat_laguerre_golden() {
        // k=1: Lhat_n = psi_n L_{n-1} - psi_{n-1} L_n
        let s = spec(1, &[rat(1)]);
        let a = rat(1);
        for n in 0..6 {
            let psi = &s.psis()[0];
            let expected = &laguerre_poly(&a, n - 1).scale(&psi.eval_int(n))
                - &laguerre_poly(&a, n).scale(&psi.eval_int(n - 1));
            assert_eq!(s.hat_laguerre(n), expected);
            assert_eq!(s.hat_laguerre_det(n), expected);
        }
        // Lhat_0 = -tau(-1) L_0 = -1
        assert_eq!(s.hat_laguerre(0), XPoly::from_ints(&[-1]));
        // Lhat_n(0) = -beta0 binom(n+alpha-1, alpha-1)
        for alpha in 1..=4u32 {
            let b0 = ratio(5, 3);
            let s = spec(alpha, &[b0.clone()]);
            let formula = NPoly::binom(&rat(alpha as i64 - 1), alpha - 1).scale(&-b0);
            assert_eq!(s.hat_deriv_at_zero(0), formula);
        }
        assert_eq!(s.hat_deriv_at_zero(0).eval_int(0), rat(-1));
    }

    #[test]
    fn k2_hat_at_zero_closed_form() {
        for alpha in 2..=4u32 {
            let (b0, b1) = (ratio(2, 3), ratio(-5, 4));
            let s = spec(alpha, &[b0.clone(), b1]);
            // -b0/(α-1)! (n+1)_{α-2} [binom(n+α-1, α) + b0]
            let formula = (NPoly::pochhammer(&rat(1), alpha - 2)
                * (NPoly::binom(&rat(alpha as i64 - 1), alpha) + NPoly::constant(b0.clone())))
            .scale(&(-b0 / factorial_rat(alpha - 1)));
            assert_eq!(s.hat_deriv_at_zero(0), formula);
            assert_eq!(s.tau().degree(), Some(2 * alpha as usize));
        }
    }

    #[test]
    fn det_expansion_agrees() {
        let s = spec(4, &[ratio(1, 2), rat(3), ratio(-1, 5)]);
        for n in 0..7 {
            assert_eq!(s.hat_laguerre(n), s.hat_laguerre_det(n));
        }
        assert!(s.deriv_at_zero_check(3, 10).pass);
    }

    #[test]
    fn recurrence_and_orthogonality_small() {
        let s = spec(1, &[rat(1)]);
        assert!(s.recurrence_check(15).pass);
        assert!(s.intertwining_check(10).pass);
        let m = s.moment_functional().unwrap();
        assert!(orthogonality_check(s.basis(), &m, 12).pass);
        let s2 = spec(3, &[rat(1), ratio(1, 2)]);
        assert!(s2.recurrence_check(12).pass);
        let m2 = s2.moment_functional().unwrap();
        assert!(orthogonality_check(s2.basis(), &m2, 10).pass);
    }

    #[test]
    fn u_closed_forms() {
        let s = spec(3, &[rat(2)]);
        assert_eq!(s.moment_functional().unwrap().u, vec![ratio(1, 2)]);
        let s2 = spec(2, &[rat(1), rat(1)]);
        assert_eq!(s2.moment_functional().unwrap().u, vec![rat(-2), rat(1)]);
        assert_eq!(u_by_linear_solve(s2.basis()).unwrap().u, vec![rat(-2), rat(1)]);
    }

    #[test]
    fn u_k3_by_solve() {
        let s = spec(3, &[rat(1), ratio(1, 3), rat(2)]);
        assert!(s.admissibility().admissible);
        let m = s.moment_functional().unwrap();
        assert_eq!(m.u.len(), 3);
        assert!(orthogonality_check(s.basis(), &m, 10).pass);
        assert!(s.recurrence_check(10).pass);
    }

    #[test]
    fn moment_normalization() {
        let m = MomentFunctional { alpha_eff: 2, u: vec![ratio(1, 3)] };
        assert_eq!(m.apply(&XPoly::one()), ratio(4, 3));
    }
}
