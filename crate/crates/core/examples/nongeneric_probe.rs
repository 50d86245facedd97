// Where the resultant vanishes the eigenvalue algebra grows: at
// `alpha = 2, beta = (1/8, 0)` a degree-4 eigenvalue outside the explicit algebra
// carries an order-8 operator. At the generic point `(1, 1)` nothing below degree 5.

use krall_laguerre::darboux::SystemSpec;
use krall_laguerre::eigen::{algebra_membership, bhat_linear_solve, eigen_verify};
use krall_laguerre::exact::rat::{rat, ratio};
use krall_laguerre::exact::NPoly;
use krall_laguerre::genericity::{abar_probe, ProbeFilter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SystemSpec::admissible(2, vec![ratio(1, 8), rat(0)])?;
    let report = abar_probe(spec.basis(), Some(4), ProbeFilter::Divisibility);
    let h = report.degrees[3].witness.clone().expect("degree-4 eigenvalue");
    println!("non-generic: h(n) = {h}");
    assert_eq!(h, NPoly::new(vec![rat(0), ratio(3, 2), ratio(5, 2), rat(2), rat(1)]));
    assert!(algebra_membership(&h, spec.basis()).is_err());

    let out = bhat_linear_solve(&h, spec.basis(), Some(8))?;
    let op = out.operator().expect("order-8 operator");
    println!("order {:?}: {}", op.order(), op.op);
    let cert = eigen_verify(&op.op, &h, spec.basis(), 40);
    println!("{cert}");
    assert!(cert.pass && op.order() == Some(8));

    let generic = SystemSpec::admissible(2, vec![rat(1), rat(1)])?;
    let report = abar_probe(generic.basis(), Some(4), ProbeFilter::Unfiltered);
    println!("generic: smallest eigenvalue degree up to 4: {:?}", report.min_abar_degree());
    assert_eq!(report.min_abar_degree(), None);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
