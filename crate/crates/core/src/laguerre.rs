//! Classical Laguerre polynomials `L_n^α(x)` and their bispectral identities.

use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exact::rat::{factorial_rat, rat, rat_to_string, Rat};
use crate::exact::{DiffOp, NPoly, XPoly};

/// The classical family for a fixed parameter `α > -1`.
///
/// Rational `α` is accepted here for the classical identities; the Darboux
/// constructions downstream take a positive integer `α`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaguerreFamily {
    pub alpha: Rat,
}

impl LaguerreFamily {
    pub fn new(alpha: Rat) -> Result<Self> {
        if alpha <= rat(-1) {
            return Err(Error::InvalidSpec(format!(
                "alpha must exceed -1, got {}",
                rat_to_string(&alpha)
            )));
        }
        Ok(LaguerreFamily { alpha })
    }

    pub fn integer(alpha: u32) -> Self {
        LaguerreFamily { alpha: rat(alpha as i64) }
    }

    pub fn poly(&self, n: i64) -> XPoly {
        laguerre_poly(&self.alpha, n)
    }

    /// The second-order operator with `B L_n = n L_n`.
    pub fn operator(&self) -> DiffOp {
        laguerre_operator(&self.alpha)
    }
}

/// `L_n^α(x)`; zero for `n < 0`. The coefficient of `x^i` is
/// `(-1)^i / i! * binom(n + α, n - i)`.
pub fn laguerre_poly(alpha: &Rat, n: i64) -> XPoly {
    if n < 0 {
        return XPoly::zero();
    }
    // c_0 = binom(n+α, n); c_{i+1} / c_i = -(n-i) / ((i+1)(α+i+1))
    let mut c = (1..=n).fold(Rat::one(), |acc, t| acc * (alpha + rat(t))) / factorial_rat(n as u32);
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for i in 0..=n {
        let next = -(&c * rat(n - i)) / (rat(i + 1) * (alpha + rat(i + 1)));
        coeffs.push(std::mem::replace(&mut c, next));
    }
    XPoly::new(coeffs)
}

/// `B = -x D^2 - (α + 1 - x) D`.
pub fn laguerre_operator(alpha: &Rat) -> DiffOp {
    DiffOp::term(2, XPoly::from_ints(&[0, -1]))
        .add(&DiffOp::term(1, XPoly::new(vec![-(alpha + Rat::one()), Rat::one()])))
}

/// Generator `D_1 = d/dx`.
pub fn weyl_d1() -> DiffOp {
    DiffOp::d()
}

/// Generator `D_2 = x D^2 - x D`.
pub fn weyl_d2() -> DiffOp {
    DiffOp::term(2, XPoly::from_ints(&[0, 1])).add(&DiffOp::term(1, XPoly::from_ints(&[0, -1])))
}

/// Classical Jacobi matrix entries `(a_n, b_n, c_n)`.
pub fn classical_jacobi_row(alpha: &Rat, n: i64) -> (Rat, Rat, Rat) {
    let n = rat(n);
    (
        -(&n + Rat::one()),
        rat(2) * &n + alpha + Rat::one(),
        -(&n + alpha),
    )
}

/// `-(n+1) L_{n+1} + (2n+α+1) L_n - (n+α) L_{n-1} = x L_n` for `n = 0..=N`.
pub fn laguerre_recurrence_check(alpha: &Rat, n_max: i64) -> Certificate {
    Certificate::over("three-term recurrence of L_n^alpha", 0, n_max, |n| {
        let (a, b, c) = classical_jacobi_row(alpha, n);
        let lhs = &(&laguerre_poly(alpha, n + 1).scale(&a) + &laguerre_poly(alpha, n).scale(&b))
            + &laguerre_poly(alpha, n - 1).scale(&c);
        let rhs = laguerre_poly(alpha, n).shift_up(1);
        (lhs != rhs).then(|| format!("lhs {lhs} != rhs {rhs}"))
    })
}

/// `B L_n = n L_n` for `n = 0..=N`.
pub fn laguerre_diffeq_check(alpha: &Rat, n_max: i64) -> Certificate {
    let b = laguerre_operator(alpha);
    let decomposition = weyl_d2().scale(&-Rat::one()).sub(&weyl_d1().scale(&(alpha + Rat::one())));
    let mut cert = Certificate::over("B L_n = n L_n", 0, n_max, |n| {
        let l = laguerre_poly(alpha, n);
        let lhs = b.apply(&l);
        (lhs != l.scale(&rat(n))).then(|| format!("B L_n = {lhs}"))
    })
    .with_note("B = -D2 - (alpha+1) D1 with D1 = d/dx, D2 = x d^2/dx^2 - x d/dx");
    cert.check(decomposition == b, || "B differs from -D2 - (alpha+1) D1".into());
    cert
}

/// `d/dx [L_n - L_{n-1}] = -L_{n-1}` for `n = 0..=N`.
pub fn laguerre_derivative_relation_check(alpha: &Rat, n_max: i64) -> Certificate {
    Certificate::over("d/dx [L_n - L_(n-1)] = -L_(n-1)", 0, n_max, |n| {
        let prev = laguerre_poly(alpha, n - 1);
        let lhs = (&laguerre_poly(alpha, n) - &prev).derivative();
        (lhs != -&prev).then(|| format!("lhs {lhs}"))
    })
}

/// `d^j L_n / dx^j (0) = (-1)^j binom(n + α, α + j)` as a polynomial in `n`.
pub fn laguerre_deriv_at_zero(alpha: u32, j: u32) -> NPoly {
    let p = NPoly::binom(&rat(alpha as i64), alpha + j);
    if j % 2 == 0 {
        p
    } else {
        -p
    }
}

/// `∫_0^∞ x^m x^a e^{-x} dx = (m + a)!`.
pub fn gamma_moment(alpha_eff: i64, m: i64) -> Result<Rat> {
    if alpha_eff < 0 || m < 0 {
        return Err(Error::NegativeMoment);
    }
    Ok(factorial_rat((alpha_eff + m) as u32))
}

/// `∫_0^∞ f(x) x^a e^{-x} dx`, assembled from moments.
pub fn gamma_integral(f: &XPoly, alpha_eff: u32) -> Rat {
    f.coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| c * factorial_rat(alpha_eff + m as u32))
        .sum()
}

/// `∫ (L_n^α)^2 x^α e^{-x} dx = (α+n)!/n!` and `∫ L_n L_m x^α e^{-x} dx = 0`.
pub fn laguerre_norm_check(alpha: u32, n_max: i64) -> Certificate {
    let a = rat(alpha as i64);
    Certificate::over("gamma-weight orthogonality and norms of L_n^alpha", 0, n_max, |n| {
        let ln = laguerre_poly(&a, n);
        let norm = gamma_integral(&(&ln * &ln), alpha);
        let expected = factorial_rat(alpha + n as u32) / factorial_rat(n as u32);
        if norm != expected {
            return Some(format!("norm {} != {}", rat_to_string(&norm), rat_to_string(&expected)));
        }
        (0..n).find_map(|m| {
            let ip = gamma_integral(&(&ln * &laguerre_poly(&a, m)), alpha);
            (!ip.is_zero()).then(|| format!("<L_n, L_{m}> = {}", rat_to_string(&ip)))
        })
    })
}
