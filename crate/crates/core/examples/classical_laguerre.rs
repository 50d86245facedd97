// Classical Laguerre polynomials: the recurrence, the differential equation,
// the derivative relation and the gamma-weight norms, all exact.

use krall_laguerre::exact::rat::ratio;
use krall_laguerre::laguerre::{
    laguerre_derivative_relation_check, laguerre_diffeq_check, laguerre_norm_check, laguerre_recurrence_check,
    LaguerreFamily,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fam = LaguerreFamily::integer(2);
    for n in 0..4 {
        println!("L_{n}^(2)(x) = {}", fam.poly(n));
    }
    println!("B = {}", fam.operator());

    for cert in [
        laguerre_recurrence_check(&fam.alpha, 12),
        laguerre_diffeq_check(&fam.alpha, 12),
        laguerre_derivative_relation_check(&fam.alpha, 12),
        laguerre_norm_check(2, 12),
    ] {
        println!("{cert}");
        assert!(cert.pass);
    }

    // non-integer alpha: the identities hold, only the norm needs an integer
    let half = LaguerreFamily::new(ratio(1, 2))?;
    let cert = laguerre_recurrence_check(&half.alpha, 8);
    println!("{cert}");
    assert!(cert.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
