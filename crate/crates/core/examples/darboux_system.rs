// One and two Darboux steps: tau, admissibility, the transformed Jacobi matrix
// and orthogonality under the Krall moment functional.

use krall_laguerre::darboux::{orthogonality_check, SystemSpec};
use krall_laguerre::exact::rat::{rat, rat_to_string, ratio};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let one = SystemSpec::admissible(1, vec![rat(1)])?;
    println!("alpha=1, beta=(1): tau(n) = {}", one.tau());
    for n in 0..3 {
        let row = one.jacobi_row(n);
        println!(
            "  row {n}: a = {}, b = {}, c = {}",
            rat_to_string(&row.a_hat),
            rat_to_string(&row.b_hat),
            rat_to_string(&row.c_hat)
        );
    }

    let two = SystemSpec::admissible(3, vec![ratio(2, 3), ratio(-1, 4)])?;
    println!("alpha=3, beta=(2/3,-1/4): tau(n) = {}", two.tau());
    println!("  Lhat_2(x) = {}", two.hat_laguerre(2));
    let m = two.moment_functional()?;
    let u: Vec<String> = m.u.iter().map(rat_to_string).collect();
    println!("  weight: x^{} e^-x plus point masses u = [{}]", m.alpha_eff, u.join(", "));

    for cert in [two.recurrence_check(15), orthogonality_check(two.basis(), &m, 12)] {
        println!("{cert}");
        assert!(cert.pass);
    }

    // beta_0 = -1 at alpha = 1 makes tau vanish at n = 0
    let bad = SystemSpec::new(1, vec![rat(-1)])?.admissibility();
    println!("alpha=1, beta=(-1): admissible = {}, witness = {:?}", bad.admissible, bad.witness);
    assert_eq!(bad.witness, Some(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
