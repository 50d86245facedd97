//! The eigenvalue algebra `𝒜` and differential operators realizing it.
//!
//! `h ∈ 𝒜` iff `τ(n-1)` divides `h(n) - h(n-1)`. Each such `h` has an operator
//! `B̂_h = sum_j b_j(x) D^j` with `deg b_j <= j` and `B̂_h L̂_n = h(n) L̂_n`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::certificate::Certificate;
use crate::darboux::{KernelBasis, SystemSpec};
use crate::error::{Error, Result};
use crate::exact::rat::{factorial_rat, rat, rat_to_string, Rat};
use crate::exact::{det, op_substitute, DiffOp, Echelon, NPoly, XPoly};
use crate::laguerre::{laguerre_operator, laguerre_poly};

/// `h ∈ 𝒜` with its certified quotient `g(n) = (h(n) - h(n-1)) / τ(n-1)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenPoly {
    pub h: NPoly,
    pub g: NPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NotMember {
    pub remainder: NPoly,
}

impl std::fmt::Display for NotMember {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "tau(n-1) does not divide h(n) - h(n-1); remainder {}", self.remainder)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    ClosedFormK1,
    ReachAssembly,
    LinearSolve,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenOperator {
    pub op: DiffOp,
    pub h: NPoly,
    /// Present when `h` was certified as a member of `𝒜`.
    pub g: Option<NPoly>,
    pub construction: Construction,
    /// Dimension of the space of operators annihilating every `L̂_n` that the
    /// solve could not rule out; always 0 outside [`Construction::LinearSolve`].
    pub annihilator_dim: usize,
}

impl EigenOperator {
    pub fn order(&self) -> Option<usize> {
        self.op.order()
    }
}

pub fn algebra_membership(h: &NPoly, basis: &KernelBasis) -> std::result::Result<EigenPoly, NotMember> {
    let diff = h - &h.shift_int(-1);
    let (g, remainder) = diff.div_rem(&basis.tau().shift_int(-1));
    if remainder.is_zero() {
        Ok(EigenPoly { h: h.clone(), g })
    } else {
        Err(NotMember { remainder })
    }
}

/// `∫_m^n f dμ`: `sum_{s=m+1}^{n} f(s)` for `n > m`, 0 for `n = m`,
/// `-sum_{s=n+1}^{m} f(s)` for `n < m`.
pub fn discrete_sum(f: impl Fn(i64) -> Rat, m: i64, n: i64) -> Rat {
    if n >= m {
        (m + 1..=n).map(&f).sum()
    } else {
        -(n + 1..=m).map(&f).sum::<Rat>()
    }
}

pub fn discrete_integral(f: &NPoly, m: i64, n: i64) -> Rat {
    discrete_sum(|s| f.eval_int(s), m, n)
}

/// The constant `1` followed by `h = ∫_0^n s^{d - deg τ - 1} τ(s-1) dμ` for each
/// degree `d` in `deg τ + 1 ..= max_deg`.
pub fn algebra_basis(basis: &KernelBasis, max_deg: usize) -> Vec<EigenPoly> {
    let tau_deg = basis.tau().degree().unwrap_or(0);
    let tau_prev = basis.tau().shift_int(-1);
    let mut out = vec![EigenPoly { h: NPoly::one(), g: NPoly::zero() }];
    for d in tau_deg + 1..=max_deg {
        let g = NPoly::monomial(Rat::one(), d - tau_deg - 1);
        let h = (&g * &tau_prev).indefinite_sum();
        let member = algebra_membership(&h, basis).expect("discrete integral of g tau(n-1) lies in the algebra");
        debug_assert_eq!(member.g, g);
        out.push(member);
    }
    out
}

/// `h^(j)(n) = β_0 binom(n+α+j, j+1) + binom(α+j, α) binom(n+α+j, α+j+1)` for `j = 0..=α`.
pub fn k1_generators(alpha: u32, beta0: &Rat) -> Result<Vec<EigenPoly>> {
    let spec = SystemSpec::new(alpha, vec![beta0.clone()])?;
    (0..=alpha)
        .map(|j| {
            let top = rat((alpha + j) as i64);
            let h = NPoly::binom(&top, j + 1).scale(beta0)
                + NPoly::binom(&top, alpha + j + 1).scale(&crate::exact::rat::binom_rat(&top, alpha));
            algebra_membership(&h, spec.basis())
                .map_err(|e| Error::InvalidSpec(format!("generator {j} not in the algebra: {e}")))
        })
        .collect()
}

fn wr_at(cols: &[&NPoly], s: i64) -> Rat {
    let m: Vec<Vec<Rat>> = (0..cols.len() as i64)
        .map(|r| cols.iter().map(|p| p.eval_int(s - r)).collect())
        .collect();
    det(&m)
}

/// `F_n = sum_{j=1}^{k+1} (-1)^{k+1+j} f^(j)_n ∫_{n_j}^n f^(0)_s Wr_s(f^(1..k+1) without f^(j)) dμ`.
fn reach_f(f: &[NPoly], base: &[i64], n: i64) -> Rat {
    let k = f.len() - 2;
    (1..=k + 1)
        .map(|j| {
            let others: Vec<&NPoly> = (1..=k + 1).filter(|&i| i != j).map(|i| &f[i]).collect();
            let integral = discrete_sum(|s| f[0].eval_int(s) * wr_at(&others, s), base[j - 1], n);
            let sign = if (k + 1 + j) % 2 == 0 { Rat::one() } else { -Rat::one() };
            sign * f[j].eval_int(n) * integral
        })
        .sum()
}

/// `Wr_n(f^(1), …, f^(k), F_n) = ∫_{n_{k+1}}^{n-1} f^(0) Wr(f^(1..k)) dμ · Wr_n(f^(1), …, f^(k+1))`
/// on the window, for two choices of base points. The two left-hand sides must
/// differ by a constant multiple of `Wr_n(f^(1), …, f^(k+1))`.
pub fn reach_identity_check(f: &[NPoly], base: &[i64], alt_base: &[i64], lo: i64, hi: i64) -> Certificate {
    assert!(f.len() >= 2 && base.len() == f.len() - 1 && alt_base.len() == base.len());
    let k = f.len() - 2;
    let inner: Vec<&NPoly> = f[1..=k].iter().collect();
    let full: Vec<&NPoly> = f[1..].iter().collect();
    let x_integrand = |s: i64| f[0].eval_int(s) * wr_at(&inner, s);
    let lhs = |b: &[i64], n: i64| -> Rat {
        let m: Vec<Vec<Rat>> = (0..=k as i64)
            .map(|r| {
                let mut row: Vec<Rat> = inner.iter().map(|p| p.eval_int(n - r)).collect();
                row.push(reach_f(f, b, n - r));
                row
            })
            .collect();
        det(&m)
    };
    let shift = discrete_sum(x_integrand, alt_base[k], base[k]);
    Certificate::over(format!("discrete Reach identity, k = {k}"), lo, hi, |n| {
        let w = wr_at(&full, n);
        let (l1, l2) = (lhs(base, n), lhs(alt_base, n));
        let r1 = discrete_sum(x_integrand, base[k], n - 1) * &w;
        let r2 = discrete_sum(x_integrand, alt_base[k], n - 1) * &w;
        if l1 != r1 {
            return Some(format!("lhs {} vs rhs {}", rat_to_string(&l1), rat_to_string(&r1)));
        }
        if l2 != r2 {
            return Some(format!("alternate base points: lhs {} vs rhs {}", rat_to_string(&l2), rat_to_string(&r2)));
        }
        (l2 - l1 != shift.clone() * &w).then(|| "base-point change is not a constant multiple of the Wronskian".into())
    })
}

/// `B̄ = [r1(B)(1 - D) - r2(B+1) D] r0(B)`.
pub fn reach_operator(r0: &NPoly, r1: &NPoly, r2: &NPoly, alpha: &Rat) -> DiffOp {
    let b = laguerre_operator(alpha);
    let d = DiffOp::d();
    let left = op_substitute(r1, &b, 0)
        .compose(&DiffOp::identity().sub(&d))
        .sub(&op_substitute(r2, &b, 1).compose(&d));
    left.compose(&op_substitute(r0, &b, 0))
}

/// `r0(n) ∫_{-1}^n [r1(s) L_s + r2(s) L_{s-1}] dμ = B̄ L_n` for `n = 0..=N`.
pub fn reach_operator_check(r0: &NPoly, r1: &NPoly, r2: &NPoly, alpha: &Rat, n_max: i64) -> Certificate {
    let op = reach_operator(r0, r1, r2, alpha);
    let mut partial = XPoly::zero();
    Certificate::over("operator form of the discrete integral of Laguerre polynomials", 0, n_max, |n| {
        partial = &partial
            + &(&laguerre_poly(alpha, n).scale(&r1.eval_int(n)) + &laguerre_poly(alpha, n - 1).scale(&r2.eval_int(n)));
        let lhs = partial.scale(&r0.eval_int(n));
        let rhs = op.apply(&laguerre_poly(alpha, n));
        (lhs != rhs).then(|| format!("sum side {lhs} vs operator side {rhs}"))
    })
}

fn check_order(op: &DiffOp, h: &NPoly) -> Result<()> {
    let expected = 2 * h.degree().unwrap_or(0);
    let found = op.order();
    if found.unwrap_or(0) != expected {
        return Err(Error::OrderMismatch { expected, found });
    }
    Ok(())
}

fn require_k1(basis: &KernelBasis) -> Result<()> {
    if basis.k() != 1 {
        return Err(Error::InvalidSpec(format!("closed form needs k = 1, got k = {}", basis.k())));
    }
    Ok(())
}

/// `B̂_h = g(B+1)(D - 1) τ(B) + h(B+1)` for `k = 1`.
pub fn bhat_closed_form_k1(h: &EigenPoly, basis: &KernelBasis) -> Result<EigenOperator> {
    require_k1(basis)?;
    let b = laguerre_operator(&rat(basis.alpha() as i64));
    let op = op_substitute(&h.g, &b, 1)
        .compose(&DiffOp::d().sub(&DiffOp::identity()))
        .compose(&op_substitute(basis.tau(), &b, 0))
        .add(&op_substitute(&h.h, &b, 1));
    check_order(&op, &h.h)?;
    Ok(EigenOperator {
        op,
        h: h.h.clone(),
        g: Some(h.g.clone()),
        construction: Construction::ClosedFormK1,
        annihilator_dim: 0,
    })
}

/// `k = 1` operator assembled from the Reach decomposition with `f^(0)_n = g(n+1)`,
/// `f^(1) = ψ`, `f^(2)_n = L_n` and base points `-1`: the first term goes through
/// [`reach_operator`] with `r0 = -τ`, `r1 = g(s+1)`, `r2 = 0`, the second is
/// `P(B)` with `P(n) = ∫_{-1}^n g(s+1) τ(s) dμ`, and `h(0)` fixes the constant.
pub fn bhat_reach_k1(h: &EigenPoly, basis: &KernelBasis) -> Result<EigenOperator> {
    require_k1(basis)?;
    let alpha = rat(basis.alpha() as i64);
    let tau = basis.tau();
    let g_next = h.g.shift_int(1);
    let bbar = reach_operator(&-tau, &g_next, &NPoly::zero(), &alpha);
    let integrand = &g_next * tau;
    // ∫_{-1}^n f = H(n) - H(-1) with H(n) - H(n-1) = f(n)
    let antider = integrand.indefinite_sum();
    let p = &antider - &NPoly::constant(antider.eval_int(-1));
    let op = bbar
        .add(&op_substitute(&p, &laguerre_operator(&alpha), 0))
        .add(&DiffOp::scalar(h.h.eval_int(0)));
    check_order(&op, &h.h)?;
    Ok(EigenOperator {
        op,
        h: h.h.clone(),
        g: Some(h.g.clone()),
        construction: Construction::ReachAssembly,
        annihilator_dim: 0,
    })
}

/// Rows imposed are `n = 0..=N_build` with
/// `N_build = (cap+1)(cap+2)/2 + deg τ + 5`; the result is then re-verified on
/// `N_EXTRA` further indices.
pub const N_EXTRA: i64 = 15;

pub fn n_build(order_cap: usize, basis: &KernelBasis) -> i64 {
    ((order_cap + 1) * (order_cap + 2) / 2 + basis.tau().degree().unwrap_or(0) + 5) as i64
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SolveOutcome {
    Found(EigenOperator),
    /// No operator of the given order cap; `failed_at` is the first index whose
    /// equations could not be met.
    NoOperator { order_cap: usize, failed_at: i64 },
}

impl SolveOutcome {
    pub fn operator(&self) -> Option<&EigenOperator> {
        match self {
            SolveOutcome::Found(op) => Some(op),
            SolveOutcome::NoOperator { .. } => None,
        }
    }
}

/// Unknown index of the coefficient of `x^i D^j`, `i <= j`.
fn unknown(j: usize, i: usize) -> usize {
    j * (j + 1) / 2 + i
}

/// Equations `[x^m] (B̂ L̂_n) = h(n) [x^m] L̂_n` in the unknowns `c_{j,i}`.
fn push_rows(ech: &mut Echelon, cap: usize, hat: &XPoly, hn: &Rat) -> bool {
    let deg = hat.degree().unwrap_or(0);
    // falling[t][j] = [x^t] D^j L̂_n = p_{t+j} (t+j)! / t!
    for m in 0..=deg {
        let mut row = vec![Rat::zero(); ech.ncols()];
        for j in 0..=cap {
            for i in 0..=j.min(m) {
                let t = m - i;
                let c = hat.coeff(t + j);
                if !c.is_zero() {
                    row[unknown(j, i)] = c * factorial_rat((t + j) as u32) / factorial_rat(t as u32);
                }
            }
        }
        ech.push(row, hn * hat.coeff(m));
        if ech.is_inconsistent() {
            return false;
        }
    }
    true
}

fn op_from_solution(cap: usize, sol: &[Rat]) -> DiffOp {
    DiffOp::from_terms(
        (0..=cap)
            .map(|j| (j, XPoly::new((0..=j).map(|i| sol[unknown(j, i)].clone()).collect())))
            .collect(),
    )
}

/// Finds `B̂ = sum_{j<=cap} b_j(x) D^j`, `deg b_j <= j`, with `B̂ L̂_n = h(n) L̂_n`.
///
/// Rows are imposed until the system has full rank; every remaining index up to
/// `N_build + N_EXTRA` is checked by applying the operator.
pub fn bhat_linear_solve(h: &NPoly, basis: &KernelBasis, order_cap: Option<usize>) -> Result<SolveOutcome> {
    let cap = order_cap.unwrap_or(2 * h.degree().unwrap_or(0));
    if cap % 2 != 0 {
        return Err(Error::InvalidSpec(format!("order cap must be even, got {cap}")));
    }
    let nb = n_build(cap, basis);
    let last = nb + N_EXTRA;
    let hats = basis.hat_laguerre_range(last);
    let mut ech = Echelon::new(unknown(cap, cap) + 1);
    let mut determined_at = nb;
    for n in 0..=nb {
        if !push_rows(&mut ech, cap, &hats[n as usize], &h.eval_int(n)) {
            return Ok(SolveOutcome::NoOperator { order_cap: cap, failed_at: n });
        }
        if ech.is_full_rank() {
            determined_at = n;
            break;
        }
    }
    let particular = ech.particular().expect("consistent system has a particular solution");
    let annihilator_dim = ech.nullspace().len();
    let op = op_from_solution(cap, &particular);
    for n in determined_at + 1..=last {
        let hat = &hats[n as usize];
        if op.apply(hat) != hat.scale(&h.eval_int(n)) {
            return Ok(SolveOutcome::NoOperator { order_cap: cap, failed_at: n });
        }
    }
    let g = algebra_membership(h, basis).ok().map(|e| e.g);
    Ok(SolveOutcome::Found(EigenOperator {
        op,
        h: h.clone(),
        g,
        construction: Construction::LinearSolve,
        annihilator_dim,
    }))
}

/// `B L̂_n = h(n) L̂_n` for `n = 0..=N`.
pub fn eigen_verify(op: &DiffOp, h: &NPoly, basis: &KernelBasis, n_max: i64) -> Certificate {
    let hats = basis.hat_laguerre_range(n_max);
    let psi_deg: usize = basis.psis().iter().map(|p| p.degree().unwrap_or(0)).sum();
    let bound = psi_deg + basis.alpha() as usize + op.order().unwrap_or(0).max(h.degree().unwrap_or(0));
    Certificate::over("B Lhat_n = h(n) Lhat_n", 0, n_max, |n| {
        let hat = &hats[n as usize];
        let lhs = op.apply(hat);
        let rhs = hat.scale(&h.eval_int(n));
        (lhs != rhs).then(|| format!("B Lhat_n = {lhs}, h(n) Lhat_n = {rhs}"))
    })
    .with_note(format!(
        "x^m coefficients of both sides are polynomials in n of degree at most m + {bound}"
    ))
}

/// Pairwise `[B_1, B_2] = 0` in normal form.
pub fn commutativity_check(ops: &[EigenOperator]) -> Certificate {
    let mut cert = Certificate::new("pairwise commutativity of the operators", 0, ops.len() as i64 - 1);
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate().skip(i + 1) {
            let c = a.op.commutator(&b.op);
            cert.check(c.is_zero(), || format!("[B_{i}, B_{j}] = {c}"));
        }
    }
    cert
}

/// `(B_1 B_2) L̂_n = h_1(n) h_2(n) L̂_n` for `n = 0..=N`, and
/// `order(B_1 B_2) = 2 (deg h_1 + deg h_2)`.
pub fn product_check(a: &EigenOperator, b: &EigenOperator, basis: &KernelBasis, n_max: i64) -> Certificate {
    let prod = a.op.compose(&b.op);
    let h = &a.h * &b.h;
    let mut cert = eigen_verify(&prod, &h, basis, n_max);
    cert.claim = "product operator has eigenvalue h1(n) h2(n)".into();
    let expected = 2 * (a.h.degree().unwrap_or(0) + b.h.degree().unwrap_or(0));
    cert.check(prod.order().unwrap_or(0) == expected, || {
        format!("order {:?} of the product, expected {expected}", prod.order())
    });
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::ratio;

    fn op_poly_compose(p: &NPoly, h: &NPoly) -> NPoly {
        p.coeffs().iter().rev().fold(NPoly::zero(), |acc, c| &(&acc * h) + &NPoly::constant(c.clone()))
    }

    fn k1(alpha: u32, b0: Rat) -> SystemSpec {
        SystemSpec::new(alpha, vec![b0]).unwrap()
    }

    #[test]
    fn membership_examples() {
        let s = k1(1, rat(1));
        let c = algebra_membership(&NPoly::from_ints(&[7]), s.basis()).unwrap();
        assert!(c.g.is_zero());
        let err = algebra_membership(&NPoly::var(), s.basis()).unwrap_err();
        assert_eq!(err.remainder, NPoly::one());
    }

    #[test]
    fn discrete_integral_cases() {
        assert_eq!(discrete_integral(&NPoly::one(), 0, 5), rat(5));
        assert_eq!(discrete_integral(&NPoly::var(), 4, 4), rat(0));
        assert_eq!(discrete_integral(&NPoly::var(), 3, 0), rat(-6));
        let f = NPoly::from_ints(&[1, -2, 3]);
        for (m, n) in [(-3, 4), (5, -2), (0, 0), (2, 7)] {
            assert_eq!(discrete_integral(&f, m, n), f.eval_int(n) + discrete_integral(&f, m, n - 1));
        }
    }

    #[test]
    fn basis_example() {
        let s = k1(1, rat(1));
        let b = algebra_basis(s.basis(), 3);
        assert_eq!(b.len(), 3);
        assert_eq!(b[0].h, NPoly::one());
        // sum_{s=1}^n (s+1) = n(n+3)/2
        assert_eq!(b[1].h, NPoly::new(vec![rat(0), ratio(3, 2), ratio(1, 2)]));
        assert_eq!(b[2].h.degree(), Some(3));
    }

    #[test]
    fn generators_k1() {
        let gens = k1_generators(1, &rat(1)).unwrap();
        assert_eq!(gens[0].h.eval_int(1), rat(3));
        for alpha in 1..=3u32 {
            let gens = k1_generators(alpha, &ratio(-2, 3)).unwrap();
            assert_eq!(gens.len(), alpha as usize + 1);
            for (j, e) in gens.iter().enumerate() {
                assert_eq!(e.h.degree(), Some(alpha as usize + j + 1));
                assert_eq!(e.g, NPoly::binom(&rat(alpha as i64 + j as i64 - 1), j as u32));
            }
        }
    }

    #[test]
    fn reach_small() {
        let f = vec![
            NPoly::from_ints(&[1, 2]),
            NPoly::from_ints(&[3, -1]),
            NPoly::from_ints(&[0, 1, 1]),
        ];
        assert!(reach_identity_check(&f, &[0, 1], &[-2, 3], -3, 6).pass);
        let degenerate = vec![f[0].clone(), f[1].clone(), NPoly::zero()];
        assert!(reach_identity_check(&degenerate, &[0, 0], &[1, 2], 0, 4).pass);
    }

    #[test]
    fn reach_operator_examples() {
        let one = NPoly::one();
        let zero = NPoly::zero();
        let a = rat(1);
        let op = reach_operator(&one, &one, &zero, &a);
        assert_eq!(op, DiffOp::identity().sub(&DiffOp::d()));
        assert!(reach_operator_check(&one, &one, &zero, &a, 8).pass);
        assert!(reach_operator_check(&one, &zero, &one, &a, 8).pass);
        let s = k1(2, ratio(1, 3));
        let r0 = s.tau().shift_int(-1);
        assert!(reach_operator_check(&r0, &NPoly::from_ints(&[1, 1]), &NPoly::from_ints(&[2, 0, -1]), &rat(2), 8).pass);
    }

    #[test]
    fn closed_form_and_assembly_agree() {
        for alpha in 1..=2u32 {
            let s = k1(alpha, ratio(3, 2));
            for gen in k1_generators(alpha, &ratio(3, 2)).unwrap().iter().take(2) {
                let a = bhat_closed_form_k1(gen, s.basis()).unwrap();
                let b = bhat_reach_k1(gen, s.basis()).unwrap();
                assert_eq!(a.op, b.op);
                assert!(eigen_verify(&a.op, &gen.h, s.basis(), 20).pass);
            }
        }
    }

    #[test]
    fn closed_form_order_and_constant() {
        let s = k1(1, rat(1));
        let gens = k1_generators(1, &rat(1)).unwrap();
        let b0 = bhat_closed_form_k1(&gens[0], s.basis()).unwrap();
        assert_eq!(b0.order(), Some(4));
        assert!(b0.op.has_bounded_coefficients());
        let one = EigenPoly { h: NPoly::one(), g: NPoly::zero() };
        let id = bhat_closed_form_k1(&one, s.basis()).unwrap();
        assert_eq!(id.op, DiffOp::identity());
    }

    #[test]
    fn linear_solve_matches_closed_form() {
        let s = k1(2, rat(1));
        let gens = k1_generators(2, &rat(1)).unwrap();
        let closed = bhat_closed_form_k1(&gens[1], s.basis()).unwrap();
        let solved = bhat_linear_solve(&gens[1].h, s.basis(), None).unwrap();
        let solved = solved.operator().unwrap();
        assert_eq!(solved.op, closed.op);
        assert_eq!(solved.annihilator_dim, 0);
        assert_eq!(solved.g.as_ref(), Some(&gens[1].g));
    }

    #[test]
    fn linear_solve_rejects_non_member() {
        let s = k1(1, rat(1));
        let out = bhat_linear_solve(&NPoly::var(), s.basis(), Some(2)).unwrap();
        assert!(matches!(out, SolveOutcome::NoOperator { order_cap: 2, .. }));
        assert!(bhat_linear_solve(&NPoly::var(), s.basis(), Some(3)).is_err());
    }

    #[test]
    fn verify_detects_mutation() {
        let s = k1(1, rat(1));
        let gens = k1_generators(1, &rat(1)).unwrap();
        let b = bhat_closed_form_k1(&gens[0], s.basis()).unwrap();
        assert!(eigen_verify(&b.op, &gens[0].h, s.basis(), 25).pass);
        let bad = b.op.add(&DiffOp::scalar(rat(1)));
        let cert = eigen_verify(&bad, &gens[0].h, s.basis(), 25);
        assert!(!cert.pass);
        assert!(cert.witness.unwrap().starts_with("n=0:"));
        assert!(eigen_verify(&DiffOp::zero(), &NPoly::zero(), s.basis(), 5).pass);
    }

    #[test]
    fn generators_commute() {
        let s = k1(2, ratio(-1, 2));
        let gens = k1_generators(2, &ratio(-1, 2)).unwrap();
        let ops: Vec<EigenOperator> = gens[..2]
            .iter()
            .map(|g| bhat_closed_form_k1(g, s.basis()).unwrap())
            .collect();
        assert!(commutativity_check(&ops).pass);
        let p = NPoly::from_ints(&[1, 0, 3]);
        let poly_in_b0 = EigenOperator {
            op: op_substitute(&p, &ops[0].op, 0),
            h: op_poly_compose(&p, &ops[0].h),
            g: None,
            construction: Construction::LinearSolve,
            annihilator_dim: 0,
        };
        assert!(eigen_verify(&poly_in_b0.op, &poly_in_b0.h, s.basis(), 8).pass);
        assert!(commutativity_check(&[poly_in_b0, ops[1].clone()]).pass);
        // the classical operator does not commute with the transformed ones
        let b = laguerre_operator(&rat(2));
        assert!(!b.commutator(&ops[0].op).is_zero());
        assert!(product_check(&ops[0], &ops[1], s.basis(), 10).pass);
    }
}
