//! The nine acceptance criteria as exact certificate runs.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::certificate::Certificate;
use crate::darboux::{orthogonality_check, tau_minus_one_closed_form, u_by_linear_solve, u_from_beta, SystemSpec};
use crate::eigen::{
    algebra_basis, algebra_membership, bhat_closed_form_k1, bhat_linear_solve, commutativity_check, eigen_verify,
    k1_generators, reach_identity_check, EigenOperator,
};
use crate::exact::rat::{rat, ratio, rat_to_string, Rat};
use crate::exact::NPoly;
use crate::genericity::{
    abar_probe, k1_closed_form_check, k2_closed_form_check, k2_genericity_equation, resultant_shift_identity,
    resultant_symbolic, desnanot_jacobi_identity, ProbeFilter,
};
use crate::laguerre::{
    laguerre_derivative_relation_check, laguerre_diffeq_check, laguerre_norm_check, laguerre_recurrence_check,
};
use crate::sobolev::{
    params_from_a, pentadiagonal_factorization_check, sobolev_orthogonality_check, SobolevInnerProduct, SobolevParams,
    SobolevSpec,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const CRITERIA: usize = 9;

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: usize,
    pub title: String,
    pub pass: bool,
    pub certificates: Vec<Certificate>,
}

impl Criterion {
    fn new(id: usize, title: &str, certificates: Vec<Certificate>) -> Self {
        Criterion { id, title: title.into(), pass: Certificate::all(&certificates), certificates }
    }

    pub fn first_failure(&self) -> Option<&Certificate> {
        self.certificates.iter().find(|c| !c.pass)
    }
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} criterion {}: {}", self.id, self.title)?;
        if let Some(c) = self.first_failure() {
            write!(f, " -- {}: {}", c.claim, c.witness.as_deref().unwrap_or("no witness"))?;
        }
        Ok(())
    }
}

/// The `(α, β)` grid: `k ∈ {1, 2}`, `α ∈ k..=4`, three parameter vectors per cell.
pub fn darboux_grid() -> Vec<SystemSpec> {
    let k1 = [rat(1), ratio(1, 2), ratio(7, 3)];
    let k2 = [(rat(1), rat(1)), (rat(2), ratio(1, 3)), (ratio(1, 2), ratio(-1, 5))];
    let mut out = Vec::new();
    for alpha in 1..=4u32 {
        out.extend(k1.iter().map(|b| SystemSpec::new(alpha, vec![b.clone()]).expect("k <= alpha")));
    }
    for alpha in 2..=4u32 {
        out.extend(k2.iter().map(|(a, b)| SystemSpec::new(alpha, vec![a.clone(), b.clone()]).expect("k <= alpha")));
    }
    out
}

fn label(spec: &SystemSpec) -> String {
    let b: Vec<String> = spec.beta.iter().map(rat_to_string).collect();
    format!("alpha={} beta=({})", spec.alpha, b.join(","))
}

fn labelled(mut c: Certificate, spec: &SystemSpec) -> Certificate {
    c.claim = format!("{} [{}]", c.claim, label(spec));
    c
}

pub fn criterion_1() -> Criterion {
    let certs = (1..=4u32)
        .flat_map(|a| {
            let alpha = rat(a as i64);
            [
                laguerre_recurrence_check(&alpha, 12),
                laguerre_diffeq_check(&alpha, 12),
                laguerre_derivative_relation_check(&alpha, 12),
                laguerre_norm_check(a, 12),
            ]
        })
        .collect();
    Criterion::new(1, "classical Laguerre identities and norms", certs)
}

pub fn criterion_2() -> Criterion {
    let mut certs = Vec::new();
    for spec in darboux_grid() {
        let mut c = labelled(spec.recurrence_check(15), &spec);
        let adm = spec.admissibility();
        c.check(adm.admissible, || format!("inadmissible, tau({:?}) = 0", adm.witness));
        let closed = tau_minus_one_closed_form(spec.alpha, spec.k() as u32, &spec.beta[0]);
        let direct = spec.tau().eval_int(-1);
        c.check(closed == direct, || {
            format!("tau(-1) = {} vs closed form {}", rat_to_string(&direct), rat_to_string(&closed))
        });
        certs.push(c);
    }
    let mut w = Certificate::new("admissibility witnesses for beta_0 in {0, -1}", 1, 4);
    for alpha in 1..=4u32 {
        let zero = SystemSpec::new(alpha, vec![Rat::zero()]).expect("k = 1").admissibility();
        w.check(!zero.admissible && zero.witness == Some(-1), || format!("alpha={alpha}, beta_0=0: {zero:?}"));
    }
    let neg = SystemSpec::new(1, vec![rat(-1)]).expect("k = 1").admissibility();
    w.check(!neg.admissible && neg.witness == Some(0), || format!("alpha=1, beta_0=-1: {neg:?}"));
    certs.push(w);
    Criterion::new(2, "Darboux recurrence, tau(-1) and admissibility", certs)
}

pub fn criterion_3() -> Criterion {
    let certs = darboux_grid()
        .iter()
        .map(|spec| {
            let m = match u_from_beta(spec) {
                Ok(m) => m,
                Err(e) => {
                    let mut c = Certificate::new(format!("weight parameters [{}]", label(spec)), 0, 12);
                    c.fail(e.to_string());
                    return c;
                }
            };
            let mut c = labelled(orthogonality_check(spec.basis(), &m, 12), spec);
            let solved = u_by_linear_solve(spec.basis());
            c.check(solved.as_ref() == Ok(&m), || format!("linear-solve weights {solved:?} vs closed form {m:?}"));
            c
        })
        .collect();
    Criterion::new(3, "orthogonality under the Krall moment functional", certs)
}

/// `k = 1` generator operators for `α = 1..=3`, two values of `β_0`.
/// Computed once per process; criteria 4 and 5 share it.
fn generator_operators() -> &'static (Vec<Certificate>, Vec<EigenOperator>) {
    static CACHE: OnceLock<(Vec<Certificate>, Vec<EigenOperator>)> = OnceLock::new();
    CACHE.get_or_init(build_generator_operators)
}

fn build_generator_operators() -> (Vec<Certificate>, Vec<EigenOperator>) {
    let mut certs = Vec::new();
    let mut ops = Vec::new();
    for alpha in 1..=3u32 {
        for b0 in [rat(1), ratio(2, 3)] {
            let spec = SystemSpec::new(alpha, vec![b0.clone()]).expect("k = 1");
            let gens = k1_generators(alpha, &b0).expect("generators lie in the algebra");
            let mut c = Certificate::new(format!("closed form and linear solve agree [{}]", label(&spec)), 0, alpha as i64);
            let mut cell = Vec::new();
            for (j, h) in gens.iter().enumerate() {
                let closed = match bhat_closed_form_k1(h, spec.basis()) {
                    Ok(op) => op,
                    Err(e) => {
                        c.fail(format!("j={j}: {e}"));
                        continue;
                    }
                };
                let expected = 2 * alpha as usize + 2 + 2 * j;
                c.check(closed.order() == Some(expected), || format!("j={j}: order {:?}, expected {expected}", closed.order()));
                match bhat_linear_solve(&h.h, spec.basis(), None).map(|o| o.operator().cloned()) {
                    Ok(Some(solved)) => c.check(solved.op == closed.op, || format!("j={j}: operators differ")),
                    other => c.fail(format!("j={j}: linear solve gave {other:?}")),
                }
                certs.push(labelled(eigen_verify(&closed.op, &h.h, spec.basis(), 40), &spec));
                cell.push(closed);
            }
            certs.push(c);
            certs.push(labelled(commutativity_check(&cell), &spec));
            ops.extend(cell);
        }
    }
    (certs, ops)
}

pub fn criterion_4() -> Criterion {
    Criterion::new(4, "eigen operators for one Darboux step", generator_operators().0.clone())
}

/// Order law on the `k = 1` generators and on linear-solve operators for `k = 2`.
pub fn criterion_5() -> Criterion {
    let mut ops = generator_operators().1.clone();
    let mut certs = Vec::new();
    for (alpha, beta) in [(2u32, vec![rat(1), rat(1)]), (3, vec![rat(2), ratio(1, 3)])] {
        let spec = SystemSpec::new(alpha, beta).expect("k <= alpha");
        let deg = spec.tau().degree().unwrap_or(0) + 1;
        for h in algebra_basis(spec.basis(), deg).into_iter().skip(1) {
            match bhat_linear_solve(&h.h, spec.basis(), None) {
                Ok(out) => match out.operator() {
                    Some(op) => {
                        certs.push(labelled(eigen_verify(&op.op, &h.h, spec.basis(), 30), &spec));
                        ops.push(op.clone());
                    }
                    None => {
                        let mut c = Certificate::new(format!("operator for {} [{}]", h.h, label(&spec)), 0, 0);
                        c.fail(format!("{out:?}"));
                        certs.push(c);
                    }
                },
                Err(e) => {
                    let mut c = Certificate::new(format!("operator for {} [{}]", h.h, label(&spec)), 0, 0);
                    c.fail(e.to_string());
                    certs.push(c);
                }
            }
        }
    }
    let mut law = Certificate::new("order equals twice the eigenvalue degree", 0, ops.len() as i64 - 1);
    for (i, op) in ops.iter().enumerate() {
        let expected = 2 * op.h.degree().unwrap_or(0);
        law.check(op.order() == Some(expected), || format!("operator {i}: order {:?}, 2 deg h = {expected}", op.order()));
    }
    certs.push(law);
    Criterion::new(5, "order law", certs)
}

/// Sample points for the two-step closed form.
pub fn k2_samples() -> Vec<(Rat, Rat)> {
    (1..=5i64)
        .flat_map(|i| (1..=5i64).map(move |j| (ratio(i, 3), ratio(2 * j - 5, 7))))
        .collect()
}

pub fn criterion_6() -> Criterion {
    let mut certs = vec![k1_closed_form_check(1..=4)];
    let samples = k2_samples();
    for alpha in [2u32, 3] {
        let (mut c, constant) = k2_closed_form_check(alpha, &samples);
        c.check(constant.as_ref().is_some_and(One::is_one), || format!("convention constant {constant:?}"));
        match resultant_symbolic(alpha, 2) {
            Ok(sym) => {
                for (i, (b0, b1)) in samples.iter().enumerate() {
                    let v = sym.eval(&[b0.clone(), b1.clone()]);
                    let cf = crate::genericity::closed_form_k2(alpha, b0, b1);
                    c.check(v == cf, || format!("symbolic resultant at sample {i}: {} vs {}", rat_to_string(&v), rat_to_string(&cf)));
                }
            }
            Err(e) => c.fail(format!("symbolic resultant: {e}")),
        }
        certs.push(c);
    }
    Criterion::new(6, "resultant closed forms", certs)
}

/// `n⁴ + 2n³ + 5/2 n² + 3/2 n`, the degree-4 eigenvalue at `β = (1/8, 0)`, `α = 2`.
pub fn nongeneric_eigenvalue() -> NPoly {
    NPoly::new(vec![rat(0), ratio(3, 2), ratio(5, 2), rat(2), rat(1)])
}

pub fn criterion_7() -> Criterion {
    let spec = SystemSpec::new(2, vec![ratio(1, 8), rat(0)]).expect("k <= alpha");
    let mut c = Certificate::new("non-generic point (1/8, 0) at alpha = 2", 0, 0);
    c.check(k2_genericity_equation(2, &ratio(1, 8), &rat(0)).is_zero(), || "genericity equation nonzero".into());
    let adm = spec.admissibility();
    c.check(adm.admissible, || format!("{adm:?}"));
    let h = nongeneric_eigenvalue();
    c.check(algebra_membership(&h, spec.basis()).is_err(), || "h lies in the explicit algebra".into());
    let mut certs = vec![c];
    match bhat_linear_solve(&h, spec.basis(), Some(8)) {
        Ok(out) => match out.operator() {
            Some(op) => {
                let mut v = eigen_verify(&op.op, &h, spec.basis(), 40);
                v.check(op.order() == Some(8), || format!("order {:?}", op.order()));
                certs.push(v);
            }
            None => {
                let mut v = Certificate::new("order-8 operator for the degree-4 eigenvalue", 0, 0);
                v.fail(format!("{out:?}"));
                certs.push(v);
            }
        },
        Err(e) => {
            let mut v = Certificate::new("order-8 operator for the degree-4 eigenvalue", 0, 0);
            v.fail(e.to_string());
            certs.push(v);
        }
    }
    let generic = SystemSpec::new(2, vec![rat(1), rat(1)]).expect("k <= alpha");
    let report = abar_probe(generic.basis(), Some(4), ProbeFilter::Unfiltered);
    let through = report.degrees.iter().map(|d| d.verified_through).max().unwrap_or(0);
    let mut p = Certificate::new("no eigenvalue of degree below 5 at the generic point (1, 1)", 0, through);
    p.check(report.degrees.len() == 4, || format!("probed {} degrees", report.degrees.len()));
    p.check(report.min_abar_degree().is_none(), || format!("eigenvalue of degree {:?}", report.min_abar_degree()));
    certs.push(p);
    Criterion::new(7, "non-generic regime", certs)
}

pub fn criterion_8() -> Criterion {
    let ip = SobolevInnerProduct::new(3, rat(1), rat(1), rat(2));
    let mut certs = Vec::new();
    match params_from_a(&ip) {
        Ok(spec) => {
            let mut p = Certificate::new("parameters from A", 0, 0);
            let expected = SobolevParams::General { beta0: rat(-2), beta1: rat(4), l0: rat(4), l1: rat(-6) };
            p.check(spec.params == expected, || format!("{:?}", spec.params));
            certs.push(p);
            certs.push(sobolev_orthogonality_check(&spec, &ip, 12));
            certs.push(pentadiagonal_factorization_check(spec.basis(), 10));
        }
        Err(e) => {
            let mut p = Certificate::new("parameters from A", 0, 0);
            p.fail(e.to_string());
            certs.push(p);
        }
    }
    certs.push(singular_min_order(2));
    Criterion::new(8, "Sobolev orthogonality and pentadiagonal factorization", certs)
}

/// For `A = diag(0, 1)`: the smallest operator order is `2α + 4`.
pub fn singular_min_order(alpha: u32) -> Certificate {
    let expected = 2 * alpha as usize + 4;
    let mut c = Certificate::new(format!("minimal operator order {expected} for A = diag(0, 1)"), 0, 0);
    let spec = match SobolevSpec::new(alpha, SobolevParams::Singular { v0: rat(1) }) {
        Ok(s) => s,
        Err(e) => {
            c.fail(e.to_string());
            return c;
        }
    };
    let report = abar_probe(spec.basis(), Some(alpha as usize + 2), ProbeFilter::Unfiltered);
    c.range[1] = report.degrees.iter().map(|d| d.verified_through).max().unwrap_or(0);
    let min = report.min_abar_degree().map(|d| 2 * d);
    c.check(min == Some(expected), || format!("minimal order {min:?}"));
    c
}

fn random_npoly(rng: &mut ChaCha8Rng, deg: usize) -> NPoly {
    let mut coeffs: Vec<Rat> = (0..=deg).map(|_| rat(rng.gen_range(-5..=5))).collect();
    if coeffs[deg].is_zero() {
        coeffs[deg] = rat(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    NPoly::new(coeffs)
}

/// Polynomials of pairwise distinct degrees, so every Casorati minor is nonzero.
fn random_family(rng: &mut ChaCha8Rng, count: usize) -> Vec<NPoly> {
    let mut degs: Vec<usize> = (0..count + 2).collect();
    for i in (1..degs.len()).rev() {
        degs.swap(i, rng.gen_range(0..=i));
    }
    degs.into_iter().take(count).map(|d| random_npoly(rng, d)).collect()
}

pub const LEMMA_INSTANCES: usize = 50;

pub fn criterion_9(seed: u64) -> Criterion {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reach = Certificate::new("reach identity on random instances", 0, LEMMA_INSTANCES as i64 - 1);
    for i in 0..LEMMA_INSTANCES {
        let k = 1 + i % 3;
        let d0 = rng.gen_range(0..=2);
        let mut f = vec![random_npoly(&mut rng, d0)];
        f.extend(random_family(&mut rng, k + 1));
        let base: Vec<i64> = (0..=k).map(|_| rng.gen_range(-3..=3)).collect();
        let alt: Vec<i64> = (0..=k).map(|_| rng.gen_range(-3..=3)).collect();
        let c = reach_identity_check(&f, &base, &alt, -4, 8);
        reach.check(c.pass, || format!("instance {i}: {}", c.witness.unwrap_or_default()));
    }
    let mut dj = Certificate::new("Desnanot-Jacobi identity on random instances", 0, LEMMA_INSTANCES as i64 - 1);
    for i in 0..LEMMA_INSTANCES {
        let f = random_family(&mut rng, 3 + i % 3);
        dj.check(desnanot_jacobi_identity(&f), || format!("instance {i}"));
    }
    let mut shift = Certificate::new("resultant shift identity on random instances", 0, LEMMA_INSTANCES as i64 - 1);
    for i in 0..LEMMA_INSTANCES {
        let f = random_family(&mut rng, 2 + i % 3);
        shift.check(resultant_shift_identity(&f), || format!("instance {i}"));
    }
    let certs = [reach, dj, shift].into_iter().map(|c| c.with_note(format!("seed {seed}"))).collect();
    Criterion::new(9, "lemma property suites", certs)
}

pub fn run_criterion(id: usize, seed: u64) -> Option<Criterion> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(seed),
        _ => return None,
    })
}

pub fn run_all(seed: u64) -> Vec<Criterion> {
    (1..=CRITERIA).filter_map(|id| run_criterion(id, seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let grid = darboux_grid();
        assert_eq!(grid.len(), 12 + 9);
        assert!(grid.iter().all(|s| s.admissibility().admissible));
    }

    #[test]
    fn lemma_suites_are_seeded() {
        let a = criterion_9(7);
        assert!(a.pass, "{a}");
        let mut r1 = ChaCha8Rng::seed_from_u64(3);
        let mut r2 = ChaCha8Rng::seed_from_u64(3);
        assert_eq!(random_family(&mut r1, 3), random_family(&mut r2, 3));
    }

    #[test]
    fn unknown_criterion() {
        assert!(run_criterion(0, DEFAULT_SEED).is_none());
    }
}
