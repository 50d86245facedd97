// The eigenvalue algebra for one Darboux step: generators, their operators in
// closed form and by linear solve, commutativity and the order law.

use krall_laguerre::darboux::SystemSpec;
use krall_laguerre::eigen::{
    bhat_closed_form_k1, bhat_reach_k1, bhat_linear_solve, commutativity_check, eigen_verify, k1_generators,
    product_check,
};
use krall_laguerre::exact::rat::rat;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alpha = 2;
    let spec = SystemSpec::admissible(alpha, vec![rat(1)])?;
    let gens = k1_generators(alpha, &rat(1))?;
    let mut ops = Vec::new();
    for (j, h) in gens.iter().enumerate() {
        let op = bhat_closed_form_k1(h, spec.basis())?;
        println!("h^({j})(n) = {}  ->  order {:?}", h.h, op.order());
        assert_eq!(op.order(), Some(2 * alpha as usize + 2 + 2 * j));

        let assembled = bhat_reach_k1(h, spec.basis())?;
        assert_eq!(assembled.op, op.op);
        let solved = bhat_linear_solve(&h.h, spec.basis(), None)?;
        assert_eq!(solved.operator().map(|o| &o.op), Some(&op.op));

        let cert = eigen_verify(&op.op, &h.h, spec.basis(), 40);
        assert!(cert.pass, "{cert}");
        ops.push(op);
    }
    println!("B for h^(0): {}", ops[0].op);

    let comm = commutativity_check(&ops);
    println!("{comm}");
    assert!(comm.pass);
    let prod = product_check(&ops[0], &ops[1], spec.basis(), 20);
    println!("{prod}");
    assert!(prod.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
