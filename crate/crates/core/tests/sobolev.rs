use krall_laguerre::acceptance::singular_min_order;
use krall_laguerre::darboux::SystemSpec;
use krall_laguerre::exact::rat::{rat, ratio};
use krall_laguerre::sobolev::{
    moment_functional_witness, params_from_a, pentadiagonal_factorization_check, reduction_square_check,
    sobolev_orthogonality_check, SobolevInnerProduct, SobolevParams,
};

#[test]
fn singular_a_has_tau_degree_alpha_plus_one() {
    for alpha in 2..=4u32 {
        let ip = SobolevInnerProduct::new(alpha, rat(0), rat(0), ratio(3, 2));
        let spec = params_from_a(&ip).unwrap();
        assert_eq!(spec.params, SobolevParams::Singular { v0: ratio(3, 2) });
        assert_eq!(spec.basis().tau().degree(), Some(alpha as usize + 1));
        assert!(spec.basis().admissibility().admissible);
        assert!(sobolev_orthogonality_check(&spec, &ip, 10).pass);
        assert!(pentadiagonal_factorization_check(spec.basis(), 8).pass);
        let (xx, x2) = moment_functional_witness(&ip);
        assert_ne!(xx, x2);
    }
}

#[test]
fn singular_minimal_order() {
    for alpha in [2u32, 3] {
        let c = singular_min_order(alpha);
        assert!(c.pass, "{c}");
    }
}

#[test]
fn v0_zero_reduces_to_tridiagonal_square() {
    let ip = SobolevInnerProduct::new(2, rat(2), ratio(-1, 3), rat(0));
    let spec = params_from_a(&ip).unwrap();
    let SobolevParams::General { beta0, beta1, .. } = spec.params.clone() else { panic!() };
    let sys = SystemSpec::admissible(2, vec![beta0, beta1]).unwrap();
    assert_eq!(sys.basis().psis(), spec.basis().psis());
    let (xx, x2) = moment_functional_witness(&ip);
    assert_eq!(xx, x2);
    assert!(sobolev_orthogonality_check(&spec, &ip, 10).pass);
    assert!(reduction_square_check(&sys, 10).pass);
}

#[test]
fn general_a_orthogonality() {
    for (alpha, u0, u1, v0) in [(2u32, rat(1), rat(0), rat(1)), (3, rat(2), ratio(1, 2), rat(3)), (4, rat(2), rat(1), rat(1))] {
        let ip = SobolevInnerProduct::new(alpha, u0, u1, v0);
        let spec = params_from_a(&ip).unwrap();
        assert_eq!(spec.basis().tau().degree(), Some(2 * alpha as usize));
        assert!(spec.basis().admissibility().admissible, "alpha={alpha}");
        assert!(sobolev_orthogonality_check(&spec, &ip, 10).pass, "alpha={alpha}");
        assert!(pentadiagonal_factorization_check(spec.basis(), 8).pass, "alpha={alpha}");
    }
}
