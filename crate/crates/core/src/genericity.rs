//! The resultant criterion `ℜ(β) = Res_n(τ(n), L̂_n(0))` and the probe for
//! eigenvalues outside `𝒜`.
//!
//! Resultants use the Sylvester matrix with the rows of the first argument on
//! top, so `Res(p, q) = lc(p)^{deg q} prod_{p(r)=0} q(r)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::darboux::{casorati, phi, KernelBasis, SystemSpec};
use crate::eigen::{algebra_membership, n_build, N_EXTRA};
use crate::error::{Error, Result};
use crate::exact::param_poly::lift_npoly;
use crate::exact::rat::{binom_rat, factorial_rat, pow, rat, rat_to_string, Rat};
use crate::exact::{det, DiffOp, Echelon, NPoly, ParamPoly, XPoly};

/// `ℜ(β)` for concrete parameters.
pub fn resultant_r(basis: &KernelBasis) -> Result<Rat> {
    NPoly::resultant(basis.tau(), &basis.hat_deriv_at_zero(0))
}

/// `τ(n)` and `L̂_n(0)` with symbolic `β_0..β_{k-1}` (variables `0..k`) and `n` as variable `k`.
pub fn symbolic_tau_and_hat0(alpha: u32, k: usize) -> Result<(ParamPoly, ParamPoly)> {
    let mut psis = Vec::with_capacity(k);
    for j in 0..k {
        let mut acc = lift_npoly(&phi(alpha, 2, j as u32)?, k);
        for l in 0..=j {
            acc = acc + ParamPoly::var(j - l) * lift_npoly(&phi(alpha, 1, l as u32)?, k);
        }
        psis.push(acc);
    }
    let deriv_col = lift_npoly(&crate::laguerre::laguerre_deriv_at_zero(alpha, 0), k);
    let wr = |cols: &[ParamPoly]| -> ParamPoly {
        let rows: Vec<Vec<ParamPoly>> = (0..cols.len())
            .map(|r| cols.iter().map(|c| c.shift_var(k, &rat(-(r as i64)))).collect())
            .collect();
        det(&rows)
    };
    let tau = wr(&psis);
    let mut with_l = psis;
    with_l.push(deriv_col);
    Ok((tau, wr(&with_l)))
}

/// `ℜ` as a polynomial in `β_0..β_{k-1}`.
pub fn resultant_symbolic(alpha: u32, k: usize) -> Result<ParamPoly> {
    if k == 0 || k > 2 || k > alpha as usize {
        return Err(Error::InvalidSpec(format!("symbolic resultant supports 1 <= k <= min(2, alpha), got k={k}")));
    }
    let (tau, hat0) = symbolic_tau_and_hat0(alpha, k)?;
    ParamPoly::resultant_in(&tau, &hat0, k)
}

/// `(-1)^α β_0^{2α-1} / [(α-1)!]^α`.
pub fn closed_form_k1(alpha: u32, beta0: &Rat) -> Rat {
    let sign = if alpha % 2 == 0 { Rat::one() } else { -Rat::one() };
    sign * pow(beta0, 2 * alpha - 1) / pow(&factorial_rat(alpha - 1), alpha)
}

/// `2^α β_0^{5α-5} / ((α-1)^{2α-2} (α+1)^α [(α-1)!]^{4α}) · [β_0^α binom(x, α) + β_0^{α+1}]`
/// with `x = (α-1)/2 - β_1 (α²-1) / (2 β_0 α)`. Requires `β_0 != 0`.
pub fn closed_form_k2(alpha: u32, beta0: &Rat, beta1: &Rat) -> Rat {
    let a = rat(alpha as i64);
    let x = (&a - Rat::one()) / rat(2) - beta1 * (&a * &a - Rat::one()) / (rat(2) * beta0 * &a);
    let bracket = pow(beta0, alpha) * binom_rat(&x, alpha) + pow(beta0, alpha + 1);
    let prefactor = pow(&rat(2), alpha) * pow(beta0, 5 * alpha - 5)
        / (pow(&(&a - Rat::one()), 2 * alpha - 2) * pow(&(&a + Rat::one()), alpha) * pow(&factorial_rat(alpha - 1), 4 * alpha));
    prefactor * bracket
}

/// `(2α)^α α! β_0^{α+1} + prod_{j=0}^{α-1} [(α² - α - 2αj) β_0 - (α² - 1) β_1]`;
/// zero exactly on the non-generic locus (for `β_0 != 0`).
pub fn k2_genericity_equation(alpha: u32, beta0: &Rat, beta1: &Rat) -> Rat {
    let a = alpha as i64;
    let product: Rat = (0..a)
        .map(|j| rat(a * a - a - 2 * a * j) * beta0 - rat(a * a - 1) * beta1)
        .product();
    pow(&rat(2 * a), alpha) * factorial_rat(alpha) * pow(beta0, alpha + 1) + product
}

/// `9u_0² + 18u_0u_1 + 5u_1² + 32u_1` (the `α = 2` locus in weight coordinates).
pub fn k2_alpha2_u_form(u0: &Rat, u1: &Rat) -> Rat {
    rat(9) * u0 * u0 + rat(18) * u0 * u1 + rat(5) * u1 * u1 + rat(32) * u1
}

/// Rational points of `32β_0³ - 4β_0² + 9β_1² = 0`: `β_0 = (4 - s²)/32`, `β_1 = β_0 s / 3`.
pub fn alpha2_nongeneric_point(s: &Rat) -> (Rat, Rat) {
    let b0 = (rat(4) - s * s) / rat(32);
    let b1 = &b0 * s / rat(3);
    (b0, b1)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub alpha: u32,
    pub k: usize,
    #[serde(with = "crate::exact::rat::serde_rat_vec")]
    pub beta: Vec<Rat>,
    pub admissible: bool,
    #[serde(with = "crate::exact::rat::serde_rat")]
    pub resultant: Rat,
    pub generic: bool,
    /// `Some` for `k <= 2`, where a closed form is available.
    pub closed_form_match: Option<bool>,
}

pub fn genericity_report(spec: &SystemSpec) -> Result<GenericityReport> {
    let resultant = resultant_r(spec.basis())?;
    let b = &spec.beta;
    let closed = match spec.k() {
        1 => Some(closed_form_k1(spec.alpha, &b[0])),
        2 if !b[0].is_zero() => Some(closed_form_k2(spec.alpha, &b[0], &b[1])),
        _ => None,
    };
    let admissible = spec.admissibility().admissible;
    Ok(GenericityReport {
        alpha: spec.alpha,
        k: spec.k(),
        beta: b.clone(),
        admissible,
        generic: admissible && !resultant.is_zero(),
        closed_form_match: closed.map(|c| c == resultant),
        resultant,
    })
}

/// Symbolic comparison with `(-1)^α β_0^{2α-1} / [(α-1)!]^α` for each `α`.
pub fn k1_closed_form_check(alphas: impl IntoIterator<Item = u32>) -> Certificate {
    let alphas: Vec<u32> = alphas.into_iter().collect();
    let (lo, hi) = (*alphas.iter().min().unwrap_or(&1) as i64, *alphas.iter().max().unwrap_or(&1) as i64);
    let mut cert = Certificate::new("symbolic resultant for one Darboux step matches its closed form", lo, hi);
    for &alpha in &alphas {
        let computed = match resultant_symbolic(alpha, 1) {
            Ok(r) => r,
            Err(e) => {
                cert.fail(format!("alpha={alpha}: {e}"));
                continue;
            }
        };
        let expected = ParamPoly::var(0).pow(2 * alpha - 1).scale(&closed_form_k1(alpha, &Rat::one()));
        cert.check(computed == expected, || {
            format!("alpha={alpha}: computed {} vs closed form {}", computed.display_with(&["b0"]), expected.display_with(&["b0"]))
        });
    }
    cert
}

/// `ℜ(β) / closed_form_k2(β)` over sample points with nonzero closed form; the
/// ratio must be one constant. Returns the certificate and the constant.
pub fn k2_closed_form_check(alpha: u32, samples: &[(Rat, Rat)]) -> (Certificate, Option<Rat>) {
    let mut cert = Certificate::new(
        format!("two-step resultant matches its closed form (alpha = {alpha})"),
        0,
        samples.len() as i64 - 1,
    );
    let mut constant: Option<Rat> = None;
    for (i, (b0, b1)) in samples.iter().enumerate() {
        let closed = closed_form_k2(alpha, b0, b1);
        let spec = match SystemSpec::new(alpha, vec![b0.clone(), b1.clone()]) {
            Ok(s) => s,
            Err(e) => {
                cert.fail(format!("sample {i}: {e}"));
                break;
            }
        };
        let computed = match resultant_r(spec.basis()) {
            Ok(r) => r,
            Err(e) => {
                cert.fail(format!("sample {i}: {e}"));
                break;
            }
        };
        if closed.is_zero() {
            cert.check(computed.is_zero(), || format!("sample {i}: closed form vanishes but resultant does not"));
            continue;
        }
        let ratio = &computed / &closed;
        match &constant {
            None => constant = Some(ratio),
            Some(c) => cert.check(*c == ratio, || {
                format!("sample {i}: ratio {} differs from {}", rat_to_string(&ratio), rat_to_string(c))
            }),
        }
    }
    if let Some(c) = &constant {
        cert.note(format!("resultant / closed form = {}", rat_to_string(c)));
    }
    (cert, constant)
}

/// `Res(τ(n-1), L̂_{n-1}(0) L̂_n(0)) = ℜ(β)²`.
pub fn squared_resultant_check(basis: &KernelBasis) -> Certificate {
    let mut cert = Certificate::new("resultant against consecutive values at zero equals the square", 0, 0);
    let hat0 = basis.hat_deriv_at_zero(0);
    let lhs = NPoly::resultant(&basis.tau().shift_int(-1), &(&hat0.shift_int(-1) * &hat0));
    let r = resultant_r(basis);
    match (lhs, r) {
        (Ok(l), Ok(r)) => cert.check(l == &r * &r, || {
            format!("{} vs {}^2", rat_to_string(&l), rat_to_string(&r))
        }),
        (l, r) => cert.fail(format!("undefined resultant: {l:?}, {r:?}")),
    }
    cert
}

fn shifted(fs: &[NPoly], by: i64) -> Vec<NPoly> {
    fs.iter().map(|f| f.shift_int(by)).collect()
}

/// `Wr(f1..f_{m+2}) Wr(f2..f_{m+1})(n-1) = Wr(f2..f_{m+2})(n-1) Wr(f1..f_{m+1}) - Wr(f2..f_{m+2}) Wr(f1..f_{m+1})(n-1)`
/// as a polynomial identity, where `(n-1)` means every function is shifted.
pub fn desnanot_jacobi_identity(f: &[NPoly]) -> bool {
    let m2 = f.len();
    assert!(m2 >= 3, "needs m + 2 >= 3 functions");
    let prev = shifted(f, -1);
    let lhs = &casorati(f) * &casorati(&prev[1..m2 - 1]);
    let rhs = &(&casorati(&prev[1..]) * &casorati(&f[..m2 - 1])) - &(&casorati(&f[1..]) * &casorati(&prev[..m2 - 1]));
    lhs == rhs
}

/// `Res(G_m(n), G_{m+1}(n)) = Res(G_m(n-1), G_{m+1}(n))` with `G_j = Wr(f1..fj)`.
/// Undefined resultants compare equal to each other.
pub fn resultant_shift_identity(f: &[NPoly]) -> bool {
    let m = f.len() - 1;
    let (gm, gm1) = (casorati(&f[..m]), casorati(f));
    NPoly::resultant(&gm, &gm1) == NPoly::resultant(&gm.shift_int(-1), &gm1)
}

/// The `m = 1` case with `G = Wr(f1, f2)`: `Res(f1(n-1), G) = Res(f1, G)` and
/// `Res(f1, G) lc(f1)^{deg f1 + deg f2 - deg G} = Res(f1(n-1), f1) Res(f1, f2)`.
/// The leading-coefficient power is 1 for monic `f1`; otherwise it is needed.
pub fn resultant_shift_product_m1(f1: &NPoly, f2: &NPoly) -> bool {
    let g2 = casorati(&[f1.clone(), f2.clone()]);
    let (Some(d1), Some(d2), Some(dg), Some(lc)) = (f1.degree(), f2.degree(), g2.degree(), f1.leading()) else {
        return false;
    };
    let (Ok(lhs), Ok(shifted), Ok(a), Ok(b)) = (
        NPoly::resultant(f1, &g2),
        NPoly::resultant(&f1.shift_int(-1), &g2),
        NPoly::resultant(&f1.shift_int(-1), f1),
        NPoly::resultant(f1, f2),
    ) else {
        return false;
    };
    let e = d1 as i64 + d2 as i64 - dg as i64;
    let scale = if e >= 0 { pow(lc, e as u32) } else { Rat::one() / pow(lc, (-e) as u32) };
    lhs == shifted && lhs * scale == a * b
}

/// Candidate eigenvalue spaces whose dimension exceeds this are not probed.
pub const PROBE_DIM_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeFilter {
    /// Candidates must satisfy the necessary divisibility by `τ(n-1)/gcd(τ(n-1), L̂_{n-1}(0) L̂_n(0))`.
    Divisibility,
    /// Every `h` with `h(0) = 0` and `deg h <= d`.
    Unfiltered,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeDegree {
    pub degree: usize,
    pub candidate_dim: usize,
    /// `dim` of eigenvalues with `h(0) = 0`, `deg h <= d` realized by an operator, or `None` if not probed.
    pub abar_dim: Option<usize>,
    /// `dim` of members of `𝒜` with `h(0) = 0`, `deg h <= d`.
    pub a_dim: usize,
    /// An eigenvalue of exact degree `d` outside `𝒜`, when one exists.
    pub witness: Option<NPoly>,
    pub witness_operator: Option<DiffOp>,
    /// Indices `0..=verified_through` were checked.
    pub verified_through: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub filter: ProbeFilter,
    pub divisor: NPoly,
    pub degrees: Vec<ProbeDegree>,
}

impl ProbeReport {
    /// Smallest probed degree with a nonconstant eigenvalue.
    pub fn min_abar_degree(&self) -> Option<usize> {
        self.degrees.iter().find(|d| d.abar_dim.is_some_and(|a| a > 0)).map(|d| d.degree)
    }

    /// Whether some probed degree exhibits an eigenvalue outside `𝒜`.
    pub fn strictly_larger(&self) -> bool {
        self.degrees.iter().any(|d| d.abar_dim.is_some_and(|a| a > d.a_dim))
    }
}

/// `τ(n-1) / gcd(τ(n-1), L̂_{n-1}(0) L̂_n(0))`.
pub fn necessary_divisor(basis: &KernelBasis) -> NPoly {
    let tau_prev = basis.tau().shift_int(-1);
    let hat0 = basis.hat_deriv_at_zero(0);
    let prod = &hat0.shift_int(-1) * &hat0;
    let g = NPoly::gcd(&tau_prev, &prod);
    tau_prev.div_rem(&g).0.monic()
}

/// Basis of `{h : h(0) = 0, deg h <= d, divisor | h(n) - h(n-1)}`.
fn candidate_space(d: usize, divisor: &NPoly) -> Vec<NPoly> {
    let monomials: Vec<NPoly> = (1..=d).map(|i| NPoly::monomial(Rat::one(), i)).collect();
    let remainders: Vec<NPoly> = monomials
        .iter()
        .map(|m| (m - &m.shift_int(-1)).div_rem(divisor).1)
        .collect();
    let rows = divisor.degree().unwrap_or(0);
    let mut ech = Echelon::new(d);
    for t in 0..rows {
        ech.push(remainders.iter().map(|r| r.coeff(t)).collect(), Rat::zero());
    }
    ech.nullspace()
        .into_iter()
        .map(|v| {
            v.iter()
                .zip(&monomials)
                .fold(NPoly::zero(), |acc, (c, m)| &acc + &m.scale(c))
        })
        .collect()
}

/// Equations `[x^m] (B̂ L̂_n) - sum_l t_l v_l(n) [x^m] L̂_n = 0`; operator unknowns
/// first (`x^i D^j`, `i <= j <= order`), then the `t_l`.
fn push_probe_rows(ech: &mut Echelon, order: usize, cands: &[NPoly], hat: &XPoly, n: i64) {
    let n_ops = (order + 1) * (order + 2) / 2;
    let deg = hat.degree().unwrap_or(0);
    let vals: Vec<Rat> = cands.iter().map(|v| v.eval_int(n)).collect();
    for m in 0..=deg {
        let mut row = vec![Rat::zero(); n_ops + cands.len()];
        for j in 0..=order {
            for i in 0..=j.min(m) {
                let t = m - i;
                let c = hat.coeff(t + j);
                if !c.is_zero() {
                    row[j * (j + 1) / 2 + i] = c * factorial_rat((t + j) as u32) / factorial_rat(t as u32);
                }
            }
        }
        let hm = hat.coeff(m);
        for (l, v) in vals.iter().enumerate() {
            row[n_ops + l] = -(v * &hm);
        }
        ech.push(row, Rat::zero());
    }
}

fn split_vector(order: usize, cands: &[NPoly], v: &[Rat]) -> (DiffOp, NPoly) {
    let n_ops = (order + 1) * (order + 2) / 2;
    let op = DiffOp::from_terms(
        (0..=order)
            .map(|j| (j, XPoly::new((0..=j).map(|i| v[j * (j + 1) / 2 + i].clone()).collect())))
            .collect(),
    );
    let h = cands
        .iter()
        .zip(&v[n_ops..])
        .fold(NPoly::zero(), |acc, (c, t)| &acc + &c.scale(t));
    (op, h)
}

fn probe_degree(basis: &KernelBasis, d: usize, cands: &[NPoly], hats: &[XPoly], last: i64) -> ProbeDegree {
    let tau_deg = basis.tau().degree().unwrap_or(0);
    let a_dim = d.saturating_sub(tau_deg);
    let mut report = ProbeDegree {
        degree: d,
        candidate_dim: cands.len(),
        abar_dim: None,
        a_dim,
        witness: None,
        witness_operator: None,
        verified_through: last,
    };
    if cands.len() > PROBE_DIM_CAP {
        return report;
    }
    let order = 2 * d;
    let n_ops = (order + 1) * (order + 2) / 2;
    let mut ech = Echelon::new(n_ops + cands.len());
    let initial = (order + cands.len() + tau_deg) as i64;
    for n in 0..=initial.min(last) {
        push_probe_rows(&mut ech, order, cands, &hats[n as usize], n);
    }
    let mut null: Vec<(DiffOp, NPoly)> = ech.nullspace().iter().map(|v| split_vector(order, cands, v)).collect();
    for n in initial + 1..=last {
        let hat = &hats[n as usize];
        let fails = null.iter().any(|(op, h)| op.apply(hat) != hat.scale(&h.eval_int(n)));
        if fails {
            push_probe_rows(&mut ech, order, cands, hat, n);
            null = ech.nullspace().iter().map(|v| split_vector(order, cands, v)).collect();
        }
    }
    report.abar_dim = Some(null.len());
    if let Some((op, h)) = null
        .into_iter()
        .find(|(_, h)| h.degree() == Some(d) && algebra_membership(h, basis).is_err())
    {
        let lc = h.leading().cloned().unwrap_or_else(Rat::one);
        let inv = Rat::one() / lc;
        report.witness = Some(h.scale(&inv));
        report.witness_operator = Some(op.scale(&inv));
    }
    report
}

/// Eigenvalues `h` with `h(0) = 0` and `deg h <= d` admitting an operator of
/// order `2d`, for `d = 1..=max_deg`. Default `max_deg = deg τ + 1`, never above
/// `2 deg τ + 1`. Evidence only: each degree is checked on `n <= N_build(2d) + N_EXTRA`.
pub fn abar_probe(basis: &KernelBasis, max_deg: Option<usize>, filter: ProbeFilter) -> ProbeReport {
    let tau_deg = basis.tau().degree().unwrap_or(0);
    let max_deg = max_deg.unwrap_or(tau_deg + 1).min(2 * tau_deg + 1);
    let divisor = match filter {
        ProbeFilter::Divisibility => necessary_divisor(basis),
        ProbeFilter::Unfiltered => NPoly::one(),
    };
    let last = n_build(2 * max_deg, basis) + N_EXTRA;
    let hats = basis.hat_laguerre_range(last);
    let degrees = (1..=max_deg)
        .map(|d| {
            let cands = candidate_space(d, &divisor);
            probe_degree(basis, d, &cands, &hats, n_build(2 * d, basis) + N_EXTRA)
        })
        .collect();
    ProbeReport { filter, divisor, degrees }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratio;

    fn spec(alpha: u32, beta: &[Rat]) -> SystemSpec {
        SystemSpec::new(alpha, beta.to_vec()).unwrap()
    }

    #[test]
    fn k1_values() {
        assert_eq!(resultant_r(spec(2, &[rat(1)]).basis()).unwrap(), rat(1));
        for alpha in 1..=4u32 {
            let b0 = ratio(-3, 5);
            assert_eq!(resultant_r(spec(alpha, &[b0.clone()]).basis()).unwrap(), closed_form_k1(alpha, &b0));
        }
        assert!(k1_closed_form_check(1..=4).pass);
    }

    #[test]
    fn k2_nongeneric_point() {
        let s = spec(2, &[ratio(1, 8), rat(0)]);
        assert!(s.admissibility().admissible);
        assert_eq!(resultant_r(s.basis()).unwrap(), rat(0));
        assert_eq!(k2_genericity_equation(2, &ratio(1, 8), &rat(0)), rat(0));
        let report = genericity_report(&s).unwrap();
        assert!(!report.generic);
        assert_eq!(report.closed_form_match, Some(true));
    }

    #[test]
    fn k2_equation_values() {
        // (2α)^α α! = 32 at α = 2, and the product is (2b0 - 3b1)(-2b0 - 3b1)
        assert_eq!(k2_genericity_equation(2, &rat(1), &rat(1)), rat(32 - 4 + 9) * rat(1));
        for (b0, b1) in [(ratio(1, 3), ratio(2, 7)), (rat(-2), ratio(5, 3))] {
            let curve = rat(32) * pow(&b0, 3) - rat(4) * &b0 * &b0 + rat(9) * &b1 * &b1;
            assert_eq!(k2_genericity_equation(2, &b0, &b1), curve.clone());
            let (u0, u1) = (-(&b0 + &b1) / (&b0 * &b0), Rat::one() / &b0);
            assert_eq!(k2_alpha2_u_form(&u0, &u1) * pow(&b0, 4), curve);
        }
    }

    #[test]
    fn two_step_equation_is_scaled_bracket() {
        for alpha in 2..=4u32 {
            let (b0, b1) = (ratio(2, 9), ratio(-1, 4));
            let a = rat(alpha as i64);
            let x = (&a - Rat::one()) / rat(2) - &b1 * (&a * &a - Rat::one()) / (rat(2) * &b0 * &a);
            let bracket = pow(&b0, alpha) * binom_rat(&x, alpha) + pow(&b0, alpha + 1);
            let scale = pow(&(rat(2) * &a), alpha) * factorial_rat(alpha);
            assert_eq!(bracket * scale, k2_genericity_equation(alpha, &b0, &b1));
        }
    }

    #[test]
    fn nongeneric_parametrization() {
        for s in [rat(0), rat(1), ratio(1, 2), rat(-3)] {
            let (b0, b1) = alpha2_nongeneric_point(&s);
            assert_eq!(k2_genericity_equation(2, &b0, &b1), rat(0));
        }
    }

    #[test]
    fn product_form_needs_leading_coefficient() {
        // f1 = -n^2, f2 = 1 - 2n: Wr has degree 2, so Res(f1, Wr) carries lc(f1)^2 not lc(f1)^3
        let (f1, f2) = (NPoly::from_ints(&[0, 0, -1]), NPoly::from_ints(&[1, -2]));
        let g = casorati(&[f1.clone(), f2.clone()]);
        assert_eq!(g.degree(), Some(2));
        let lhs = NPoly::resultant(&f1, &g).unwrap();
        let naive = NPoly::resultant(&f1.shift_int(-1), &f1).unwrap() * NPoly::resultant(&f1, &f2).unwrap();
        assert_eq!(-lhs, naive);
        assert!(resultant_shift_product_m1(&f1, &f2));
    }

    #[test]
    fn squared_resultant() {
        assert!(squared_resultant_check(spec(2, &[ratio(1, 3)]).basis()).pass);
        assert!(squared_resultant_check(spec(2, &[rat(1), rat(1)]).basis()).pass);
    }

    #[test]
    fn desnanot_jacobi_small() {
        let f = vec![NPoly::from_ints(&[1, 2]), NPoly::from_ints(&[0, 0, 1]), NPoly::from_ints(&[3, -1, 0, 1])];
        assert!(desnanot_jacobi_identity(&f));
        let same = vec![f[0].clone(), f[0].clone(), f[1].clone()];
        assert!(desnanot_jacobi_identity(&same));
        assert!(casorati(&same).is_zero());
    }

    #[test]
    fn resultant_shift_small() {
        let f1 = NPoly::from_ints(&[1, 2, 1]);
        let f2 = NPoly::from_ints(&[-3, 0, 1]);
        assert!(resultant_shift_identity(&[f1.clone(), f2.clone()]));
        assert!(resultant_shift_product_m1(&f1, &f2));
        assert!(resultant_shift_identity(&[NPoly::from_ints(&[2]), NPoly::from_ints(&[5])]));
    }

    #[test]
    fn probe_generic_k1() {
        let s = spec(1, &[rat(1)]);
        let report = abar_probe(s.basis(), Some(3), ProbeFilter::Divisibility);
        assert_eq!(report.min_abar_degree(), Some(2));
        assert!(!report.strictly_larger());
    }
}
