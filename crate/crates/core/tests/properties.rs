use krall_laguerre::darboux::{casorati, orthogonality_check, SystemSpec};
use krall_laguerre::eigen::{
    algebra_basis, algebra_membership, bhat_closed_form_k1, bhat_linear_solve, eigen_verify, k1_generators,
    product_check, reach_identity_check,
};
use krall_laguerre::exact::rat::{rat, ratio, Rat};
use krall_laguerre::exact::NPoly;
use krall_laguerre::genericity::{
    closed_form_k1, desnanot_jacobi_identity, genericity_report, resultant_r, resultant_shift_identity,
    resultant_shift_product_m1,
};
use krall_laguerre::laguerre::{laguerre_diffeq_check, laguerre_recurrence_check};
use krall_laguerre::sobolev::{params_from_a, SobolevInnerProduct, SobolevParams};
use num_traits::Zero;
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn positive_rat() -> impl Strategy<Value = Rat> {
    (1i64..=15, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

/// Polynomial of exact degree `deg` with small integer coefficients.
fn poly_of_degree(deg: usize) -> impl Strategy<Value = NPoly> {
    (prop::collection::vec(-5i64..=5, deg), prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(|(mut c, lead)| {
        c.push(lead);
        NPoly::from_ints(&c)
    })
}

/// `count` polynomials of pairwise distinct degrees below `count + 2`.
fn distinct_family(count: usize) -> impl Strategy<Value = Vec<NPoly>> {
    Just((0..count + 2).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_flat_map(move |degs| degs.into_iter().take(count).map(poly_of_degree).collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn reach_identity(
        f in (1usize..=3).prop_flat_map(|k| (poly_of_degree(1), distinct_family(k + 1))),
        shifts in prop::collection::vec(-3i64..=3, 8),
    ) {
        let (f0, rest) = f;
        let k = rest.len() - 1;
        let fs: Vec<NPoly> = std::iter::once(f0).chain(rest).collect();
        let cert = reach_identity_check(&fs, &shifts[..=k], &shifts[4..=4 + k], -4, 6);
        prop_assert!(cert.pass, "{}", cert);
    }

    #[test]
    fn desnanot_jacobi(f in (3usize..=5).prop_flat_map(distinct_family)) {
        prop_assert!(desnanot_jacobi_identity(&f));
    }

    #[test]
    fn resultant_shift(f in (2usize..=4).prop_flat_map(distinct_family)) {
        prop_assert!(resultant_shift_identity(&f));
    }

    #[test]
    fn resultant_shift_m1(f in distinct_family(2)) {
        prop_assume!(f[0].degree().unwrap_or(0) > 0);
        prop_assert!(resultant_shift_product_m1(&f[0], &f[1]));
    }

    #[test]
    fn casorati_of_distinct_degrees_is_nonzero(f in (1usize..=4).prop_flat_map(distinct_family)) {
        prop_assert!(!casorati(&f).is_zero());
    }

    /// Generic iff the resultant is nonzero iff `τ(n-1)` and `L̂_{n-1}(0) L̂_n(0)` are coprime.
    #[test]
    fn genericity_definitions_agree(alpha in 1u32..=4, b0 in nonzero_rat(), b1 in small_rat(), two in any::<bool>()) {
        let beta = if two && alpha >= 2 { vec![b0, b1] } else { vec![b0] };
        let spec = SystemSpec::new(alpha, beta).unwrap();
        prop_assume!(spec.admissibility().admissible);
        let rep = genericity_report(&spec).unwrap();
        let tau_prev = spec.tau().shift_int(-1);
        let hat0 = spec.hat_deriv_at_zero(0);
        let coprime = NPoly::gcd(&tau_prev, &(&hat0.shift_int(-1) * &hat0)).degree() == Some(0);
        prop_assert_eq!(rep.generic, coprime);
        prop_assert_eq!(rep.closed_form_match, Some(true));
    }

    /// Every admissible one-step system is generic.
    #[test]
    fn one_step_always_generic(alpha in 1u32..=4, b0 in positive_rat()) {
        let spec = SystemSpec::admissible(alpha, vec![b0.clone()]).unwrap();
        let r = resultant_r(spec.basis()).unwrap();
        prop_assert_eq!(&r, &closed_form_k1(alpha, &b0));
        prop_assert!(!r.is_zero());
    }

    #[test]
    fn classical_identities_rational_alpha(a in (-5i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
        .prop_filter("alpha > -1", |a| *a > rat(-1))) {
        prop_assert!(laguerre_recurrence_check(&a, 8).pass);
        prop_assert!(laguerre_diffeq_check(&a, 8).pass);
    }

    #[test]
    fn darboux_recurrence_and_orthogonality(alpha in 2u32..=4, b0 in nonzero_rat(), b1 in small_rat()) {
        let spec = SystemSpec::new(alpha, vec![b0, b1]).unwrap();
        prop_assume!(spec.admissibility().admissible);
        prop_assert!(spec.recurrence_check(10).pass);
        prop_assert!(spec.intertwining_check(8).pass);
        let m = spec.moment_functional().unwrap();
        prop_assert!(orthogonality_check(spec.basis(), &m, 8).pass);
    }

    /// `det A != 0` gives `deg τ = 2α`; `v_0 = 0` reduces to two Darboux steps.
    #[test]
    fn sobolev_parameters(alpha in 2u32..=4, u0 in small_rat(), u1 in small_rat(), v0 in small_rat()) {
        let ip = SobolevInnerProduct::new(alpha, u0, u1, v0.clone());
        prop_assume!(!ip.det().is_zero());
        let spec = params_from_a(&ip).unwrap();
        prop_assert_eq!(spec.basis().tau().degree(), Some(2 * alpha as usize));
        if v0.is_zero() {
            let SobolevParams::General { beta0, l0, l1, .. } = &spec.params else { unreachable!() };
            prop_assert!(l0.is_zero());
            prop_assert_eq!(l1, beta0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Closed form and linear solve agree for `α <= 3`, generators `j <= 2`.
    #[test]
    fn closed_form_matches_linear_solve(alpha in 1u32..=3, b0 in positive_rat(), j in 0usize..=2) {
        prop_assume!(j <= alpha as usize);
        let spec = SystemSpec::admissible(alpha, vec![b0.clone()]).unwrap();
        let h = &k1_generators(alpha, &b0).unwrap()[j];
        let closed = bhat_closed_form_k1(h, spec.basis()).unwrap();
        let solved = bhat_linear_solve(&h.h, spec.basis(), None).unwrap();
        prop_assert_eq!(solved.operator().map(|o| &o.op), Some(&closed.op));
    }

    /// Operators for the algebra basis are eigenoperators and multiply like their eigenvalues.
    #[test]
    fn algebra_basis_operators(alpha in 1u32..=2, b0 in positive_rat()) {
        let spec = SystemSpec::admissible(alpha, vec![b0]).unwrap();
        let deg = spec.tau().degree().unwrap() + 2;
        let ops: Vec<_> = algebra_basis(spec.basis(), deg)
            .iter()
            .skip(1)
            .map(|h| {
                prop_assert!(algebra_membership(&h.h, spec.basis()).is_ok());
                let op = bhat_closed_form_k1(h, spec.basis()).unwrap();
                let cert = eigen_verify(&op.op, &h.h, spec.basis(), 40);
                prop_assert!(cert.pass, "{}", cert);
                Ok(op)
            })
            .collect::<Result<_, TestCaseError>>()?;
        let cert = product_check(&ops[0], &ops[1], spec.basis(), 15);
        prop_assert!(cert.pass, "{}", cert);
    }
}
