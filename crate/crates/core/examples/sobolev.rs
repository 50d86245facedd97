// Sobolev-type orthogonality with boundary matrix `A`, and the pentadiagonal
// recurrence from the factorization `J^2 = P Q`.

use krall_laguerre::exact::rat::rat;
use krall_laguerre::genericity::{abar_probe, ProbeFilter};
use krall_laguerre::sobolev::{
    moment_functional_witness, params_from_a, pentadiagonal_factorization_check, sobolev_orthogonality_check,
    SobolevInnerProduct,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ip = SobolevInnerProduct::new(3, rat(1), rat(1), rat(2));
    let spec = params_from_a(&ip)?;
    println!("A = [[1,1],[1,2]], alpha = 3: {}", spec.params);
    println!("tau(n) = {}", spec.basis().tau());
    let (xx, x2) = moment_functional_witness(&ip);
    println!("<x,x> = {xx}, <x^2,1> = {x2}: no moment functional");

    for cert in [sobolev_orthogonality_check(&spec, &ip, 12), pentadiagonal_factorization_check(spec.basis(), 10)] {
        println!("{cert}");
        assert!(cert.pass);
    }

    let singular = params_from_a(&SobolevInnerProduct::new(2, rat(0), rat(0), rat(1)))?;
    let report = abar_probe(singular.basis(), Some(4), ProbeFilter::Unfiltered);
    let order = report.min_abar_degree().map(|d| 2 * d);
    println!("A = diag(0,1), alpha = 2: minimal operator order {order:?}");
    assert_eq!(order, Some(8));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
