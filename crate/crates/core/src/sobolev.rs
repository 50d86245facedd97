//! Two-dimensional kernels beyond the moment-functional case: Sobolev-type
//! orthogonality and the pentadiagonal factorization of `J²`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::certificate::Certificate;
use crate::darboux::{phi, KernelBasis, SystemSpec};
use crate::error::{Error, Result};
use crate::exact::rat::{factorial_rat, rat, rat_to_string, Rat};
use crate::exact::{NPoly, XPoly};
use crate::laguerre::{classical_jacobi_row, gamma_integral, laguerre_poly};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SobolevParams {
    /// `ψ^(0) = β_0 + l_0 (n+1)/(α-1) + binom(n+α, α)`,
    /// `ψ^(1) = β_1 + l_1 (n+1)/(α-1) - binom(n+α+1, α+1)`.
    General {
        #[serde(with = "crate::exact::rat::serde_rat")]
        beta0: Rat,
        #[serde(with = "crate::exact::rat::serde_rat")]
        beta1: Rat,
        #[serde(with = "crate::exact::rat::serde_rat")]
        l0: Rat,
        #[serde(with = "crate::exact::rat::serde_rat")]
        l1: Rat,
    },
    /// `ψ^(0) = n + 1`, `ψ^(1) = binom(n+α+1, α+1) - binom(n+α, α) - (α-1)/v_0`.
    Singular {
        #[serde(with = "crate::exact::rat::serde_rat")]
        v0: Rat,
    },
}

impl std::fmt::Display for SobolevParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SobolevParams::General { beta0, beta1, l0, l1 } => write!(
                f,
                "beta0 = {}, beta1 = {}, l0 = {}, l1 = {}",
                rat_to_string(beta0),
                rat_to_string(beta1),
                rat_to_string(l0),
                rat_to_string(l1)
            ),
            SobolevParams::Singular { v0 } => write!(f, "singular A, v0 = {}", rat_to_string(v0)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SobolevSpec {
    pub alpha: u32,
    pub params: SobolevParams,
    basis: KernelBasis,
}

impl SobolevSpec {
    pub fn new(alpha: u32, params: SobolevParams) -> Result<Self> {
        if alpha < 2 {
            return Err(Error::InvalidSpec(format!("Sobolev construction needs alpha >= 2, got {alpha}")));
        }
        let psis = sobolev_psis(alpha, &params)?;
        Ok(SobolevSpec { alpha, params, basis: KernelBasis::new(alpha, psis.to_vec()) })
    }

    pub fn general(alpha: u32, beta0: Rat, beta1: Rat, l0: Rat, l1: Rat) -> Result<Self> {
        Self::new(alpha, SobolevParams::General { beta0, beta1, l0, l1 })
    }

    pub fn basis(&self) -> &KernelBasis {
        &self.basis
    }

    pub fn hat_laguerre(&self, n: i64) -> XPoly {
        self.basis.hat_laguerre(n)
    }
}

pub fn sobolev_psis(alpha: u32, params: &SobolevParams) -> Result<[NPoly; 2]> {
    let a = rat(alpha as i64);
    match params {
        SobolevParams::General { beta0, beta1, l0, l1 } => {
            let (p10, p11) = (phi(alpha, 1, 0)?, phi(alpha, 1, 1)?);
            let psi0 = &(&p10.scale(beta0) + &p11.scale(l0)) + &phi(alpha, 2, 0)?;
            let psi1 = &(&p10.scale(beta1) + &p11.scale(l1)) + &phi(alpha, 2, 1)?;
            Ok([psi0, psi1])
        }
        SobolevParams::Singular { v0 } => {
            if v0.is_zero() {
                return Err(Error::UnsupportedSingularA);
            }
            let psi1 = &(&NPoly::binom(&(&a + Rat::one()), alpha + 1) - &NPoly::binom(&a, alpha))
                - &NPoly::constant((&a - Rat::one()) / v0);
            Ok([NPoly::linear(Rat::one()), psi1])
        }
    }
}

/// `⟨F, G⟩ = (1/(α-2)!) ∫ F G x^{α-2} e^{-x} dx + [F(0), F'(0)] A [G(0), G'(0)]^T`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SobolevInnerProduct {
    pub alpha: u32,
    #[serde(serialize_with = "serialize_matrix")]
    pub a: [[Rat; 2]; 2],
}

fn serialize_matrix<S: serde::Serializer>(a: &[[Rat; 2]; 2], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    for row in a {
        seq.serialize_element(&[rat_to_string(&row[0]), rat_to_string(&row[1])])?;
    }
    seq.end()
}

impl SobolevInnerProduct {
    /// `A = [[u0, u1], [u1, v0]]`.
    pub fn new(alpha: u32, u0: Rat, u1: Rat, v0: Rat) -> Self {
        SobolevInnerProduct { alpha, a: [[u0, u1.clone()], [u1, v0]] }
    }

    pub fn det(&self) -> Rat {
        &self.a[0][0] * &self.a[1][1] - &self.a[0][1] * &self.a[1][0]
    }

    pub fn inner(&self, f: &XPoly, g: &XPoly) -> Rat {
        let alpha_eff = self.alpha - 2;
        let integral = gamma_integral(&(f * g), alpha_eff) / factorial_rat(alpha_eff);
        let fv = [f.coeff(0), f.coeff(1)];
        let gv = [g.coeff(0), g.coeff(1)];
        let boundary: Rat = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| &fv[i] * &self.a[i][j] * &gv[j])
            .sum();
        integral + boundary
    }
}

pub fn sobolev_inner(f: &XPoly, g: &XPoly, ip: &SobolevInnerProduct) -> Rat {
    ip.inner(f, g)
}

/// `det A != 0`: `β_0 = -(α-1)u_1/det`, `β_1 = (α-1)(u_0+u_1)/det`, `l_0 = (α-1)v_0/det`,
/// `l_1 = -(α-1)(u_1+v_0)/det`. `A = diag(0, v_0)`, `v_0 != 0`: the singular basis.
pub fn params_from_a(ip: &SobolevInnerProduct) -> Result<SobolevSpec> {
    if ip.a[0][1] != ip.a[1][0] {
        return Err(Error::InvalidSpec("A must be symmetric".into()));
    }
    let (u0, u1, v0) = (&ip.a[0][0], &ip.a[0][1], &ip.a[1][1]);
    let det = ip.det();
    let am1 = rat(ip.alpha as i64 - 1);
    if !det.is_zero() {
        let s = &am1 / &det;
        return SobolevSpec::general(
            ip.alpha,
            -(&s * u1),
            &s * (u0 + u1),
            &s * v0,
            -(&s * (u1 + v0)),
        );
    }
    if u0.is_zero() && u1.is_zero() && !v0.is_zero() {
        return SobolevSpec::new(ip.alpha, SobolevParams::Singular { v0: v0.clone() });
    }
    Err(Error::UnsupportedSingularA)
}

/// `⟨L̂_n, L̂_m⟩ = 0` for `m < n <= N`, `⟨L̂_n, L̂_n⟩ != 0`, plus the four seed
/// conditions `⟨L̂_n, 1⟩ = 0` (`n = 1, 2`) and `⟨L̂_n, x⟩ = 0` (`n = 2, 3`).
pub fn sobolev_orthogonality_check(spec: &SobolevSpec, ip: &SobolevInnerProduct, n_max: i64) -> Certificate {
    let hats = spec.basis.hat_laguerre_range(n_max.max(3));
    let mut cert = Certificate::over("orthogonality of Lhat_n under the Sobolev inner product", 0, n_max, |n| {
        let hn = &hats[n as usize];
        if ip.inner(hn, hn).is_zero() {
            return Some("vanishing squared norm".into());
        }
        (0..n).find_map(|m| {
            let v = ip.inner(hn, &hats[m as usize]);
            (!v.is_zero()).then(|| format!("<Lhat_n, Lhat_{m}> = {}", rat_to_string(&v)))
        })
    });
    let (one, x) = (XPoly::one(), XPoly::var());
    for (n, f, name) in [(1usize, &one, "1"), (2, &one, "1"), (2, &x, "x"), (3, &x, "x")] {
        let v = ip.inner(&hats[n], f);
        cert.check(v.is_zero(), || format!("seed <Lhat_{n}, {name}> = {}", rat_to_string(&v)));
    }
    cert
}

/// `(⟨x, x⟩, ⟨x², 1⟩)`; they differ exactly when `v_0 != 0`.
pub fn moment_functional_witness(ip: &SobolevInnerProduct) -> (Rat, Rat) {
    let x = XPoly::var();
    (ip.inner(&x, &x), ip.inner(&x.pow(2), &XPoly::one()))
}

/// Entries `(J²)_{n, n+d}` for `d = -2..=2` of the classical Jacobi matrix.
fn j_squared(alpha: &Rat, n: i64, d: i64) -> Rat {
    let j = |r: i64, c: i64| -> Rat {
        if r < 0 || c < 0 {
            return Rat::zero();
        }
        let (a, b, cc) = classical_jacobi_row(alpha, r);
        match c - r {
            1 => a,
            0 => b,
            -1 => cc,
            _ => Rat::zero(),
        }
    };
    let m = n + d;
    (n - 1..=n + 1).map(|t| j(n, t) * j(t, m)).sum()
}

/// Banded factors of `J² = P Q` and `Ĵ = Q P` on rows `0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    /// `q[n][i] = q_{n, n-i}`, `i = 0..=2`.
    pub q: Vec<Vec<Rat>>,
    /// `p[n][i] = p_{n, n+i}`, `i = 0..=2`.
    pub p: Vec<[Rat; 3]>,
}

impl Factorization {
    /// `Ĵ_{n, n+d}` for `d = -2..=2`.
    pub fn j_hat(&self, n: i64, d: i64) -> Rat {
        let m = n + d;
        (n - 2..=n)
            .filter(|&t| t >= 0 && m >= t && m - t <= 2)
            .map(|t| &self.q[n as usize][(n - t) as usize] * &self.p[t as usize][(m - t) as usize])
            .sum()
    }
}

/// Solves the three upper columns of `J² = P Q` for row `n` of `P`.
fn solve_p_row(alpha: &Rat, q: &[Vec<Rat>], n: usize) -> Option<[Rat; 3]> {
    let qq = |t: usize, i: usize| q[t][i].clone();
    let ni = n as i64;
    if qq(n + 2, 0).is_zero() || qq(n + 1, 0).is_zero() || qq(n, 0).is_zero() {
        return None;
    }
    let p2 = j_squared(alpha, ni, 2) / qq(n + 2, 0);
    let p1 = (j_squared(alpha, ni, 1) - &p2 * qq(n + 2, 1)) / qq(n + 1, 0);
    let p0 = (j_squared(alpha, ni, 0) - &p1 * qq(n + 1, 1) - &p2 * qq(n + 2, 2)) / qq(n, 0);
    Some([p0, p1, p2])
}

pub fn factorize(basis: &KernelBasis, n_max: i64) -> std::result::Result<Factorization, i64> {
    let alpha = rat(basis.alpha() as i64);
    let q: Vec<Vec<Rat>> = (0..=n_max + 2).map(|n| basis.q_row(n)).collect();
    let p = (0..=n_max as usize)
        .map(|n| solve_p_row(&alpha, &q, n).ok_or(n as i64))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Factorization { q, p })
}

/// `J² = P Q` (including the two lower consistency columns), `p_{n,n+2} != 0`,
/// `P L̂_n = x² L_n`, `Ĵ = Q P` has bandwidth 2 and `Ĵ L̂ = x² L̂`.
pub fn pentadiagonal_factorization_check(basis: &KernelBasis, n_max: i64) -> Certificate {
    let claim = "pentadiagonal Darboux factorization of the squared Jacobi matrix";
    let f = match factorize(basis, n_max + 2) {
        Ok(f) => f,
        Err(row) => {
            let mut c = Certificate::new(claim, 0, n_max);
            c.fail(format!("n={row}: zero diagonal entry of Q"));
            return c;
        }
    };
    let alpha = rat(basis.alpha() as i64);
    let hats = basis.hat_laguerre_range(n_max + 4);
    Certificate::over(claim, 0, n_max, |n| {
        let i = n as usize;
        for d in [-1i64, -2] {
            if n + d < 0 {
                continue;
            }
            let pq: Rat = (0..=2)
                .filter(|&s| s - d <= 2)
                .map(|s| &f.p[i][s as usize] * &f.q[i + s as usize][(s - d) as usize])
                .sum();
            if pq != j_squared(&alpha, n, d) {
                return Some(format!("(PQ)_(n,n{d}) = {} differs from J^2", rat_to_string(&pq)));
            }
        }
        if f.p[i][2].is_zero() {
            return Some("p_(n,n+2) = 0".into());
        }
        let p_hat = (0..=2).fold(XPoly::zero(), |acc, s| &acc + &hats[i + s].scale(&f.p[i][s]));
        if p_hat != laguerre_poly(&alpha, n).shift_up(2) {
            return Some(format!("P Lhat_n = {p_hat}"));
        }
        let j_hat_l = (-2..=2i64)
            .filter(|d| n + d >= 0)
            .fold(XPoly::zero(), |acc, d| &acc + &hats[(n + d) as usize].scale(&f.j_hat(n, d)));
        (j_hat_l != hats[i].shift_up(2)).then(|| format!("J-hat Lhat_n = {j_hat_l}"))
    })
    .with_note("bandwidth of Q P is 2 by construction: Q has two subdiagonals, P two superdiagonals")
}

/// With `l_0 = 0`, `l_1 = β_0`, `Q P` equals the square of the tridiagonal transformed matrix.
pub fn reduction_square_check(spec: &SystemSpec, n_max: i64) -> Certificate {
    let claim = "Q P equals the square of the tridiagonal transformed Jacobi matrix";
    let f = match factorize(spec.basis(), n_max + 2) {
        Ok(f) => f,
        Err(row) => {
            let mut c = Certificate::new(claim, 0, n_max);
            c.fail(format!("n={row}: zero diagonal entry of Q"));
            return c;
        }
    };
    let t = |r: i64, c: i64| -> Rat {
        if r < 0 || c < 0 {
            return Rat::zero();
        }
        let row = spec.jacobi_row(r);
        match c - r {
            1 => row.a_hat,
            0 => row.b_hat,
            -1 => row.c_hat,
            _ => Rat::zero(),
        }
    };
    Certificate::over(claim, 0, n_max, |n| {
        (-2..=2i64).filter(|d| n + d >= 0).find_map(|d| {
            let sq: Rat = (n - 1..=n + 1).map(|s| t(n, s) * t(s, n + d)).sum();
            let jh = f.j_hat(n, d);
            (sq != jh).then(|| format!("d={d}: {} vs {}", rat_to_string(&jh), rat_to_string(&sq)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratio;

    fn example_ip() -> SobolevInnerProduct {
        SobolevInnerProduct::new(3, rat(1), rat(1), rat(2))
    }

    #[test]
    fn params_example() {
        let spec = params_from_a(&example_ip()).unwrap();
        assert_eq!(
            spec.params,
            SobolevParams::General { beta0: rat(-2), beta1: rat(4), l0: rat(4), l1: rat(-6) }
        );
    }

    #[test]
    fn v0_zero_is_moment_case() {
        let ip = SobolevInnerProduct::new(2, rat(3), rat(-1), rat(0));
        let spec = params_from_a(&ip).unwrap();
        let SobolevParams::General { beta0, l0, l1, .. } = &spec.params else { panic!() };
        assert!(l0.is_zero());
        assert_eq!(l1, beta0);
    }

    #[test]
    fn singular_patterns() {
        let ip = SobolevInnerProduct::new(2, rat(0), rat(0), rat(1));
        let spec = params_from_a(&ip).unwrap();
        assert_eq!(spec.params, SobolevParams::Singular { v0: rat(1) });
        let [p0, p1] = sobolev_psis(2, &spec.params).unwrap();
        assert_eq!(p0.eval_int(-1), rat(0));
        // binom(n+3, 3) - binom(n+2, 2) - 1
        assert_eq!(p1.eval_int(0), rat(-1));
        assert_eq!(spec.basis().tau().degree(), Some(3));
        let bad = SobolevInnerProduct::new(2, rat(1), rat(1), rat(1));
        assert_eq!(params_from_a(&bad), Err(Error::UnsupportedSingularA));
    }

    #[test]
    fn reduces_to_two_steps() {
        let (b0, b1) = (ratio(2, 3), ratio(-1, 4));
        let sob = SobolevSpec::general(3, b0.clone(), b1.clone(), rat(0), b0.clone()).unwrap();
        let sys = SystemSpec::new(3, vec![b0, b1]).unwrap();
        assert_eq!(sob.basis().psis(), sys.basis().psis());
        for n in 0..6 {
            assert_eq!(sob.hat_laguerre(n), sys.hat_laguerre(n));
        }
    }

    #[test]
    fn inner_product_values() {
        let ip = example_ip();
        assert_eq!(ip.inner(&XPoly::one(), &XPoly::one()), rat(2));
        assert_eq!(ip.inner(&XPoly::var(), &XPoly::one()), rat(2) + rat(1));
        let zero = SobolevInnerProduct::new(3, rat(0), rat(0), rat(0));
        assert_eq!(zero.inner(&XPoly::var(), &XPoly::var()), rat(6));
        let (xx, x2) = moment_functional_witness(&ip);
        assert_ne!(xx, x2);
    }

    #[test]
    fn orthogonality_and_factorization() {
        let ip = example_ip();
        let spec = params_from_a(&ip).unwrap();
        assert!(spec.basis().admissibility().admissible);
        assert!(sobolev_orthogonality_check(&spec, &ip, 12).pass);
        assert!(pentadiagonal_factorization_check(spec.basis(), 10).pass);
        let f = factorize(spec.basis(), 6).unwrap();
        for n in 0..6 {
            assert!(f.j_hat(n, 3).is_zero() && f.j_hat(n + 3, -3).is_zero());
        }
    }

    #[test]
    fn reduction_square() {
        let sys = SystemSpec::new(2, vec![rat(1), rat(1)]).unwrap();
        assert!(reduction_square_check(&sys, 10).pass);
        assert!(pentadiagonal_factorization_check(sys.basis(), 10).pass);
    }
}
