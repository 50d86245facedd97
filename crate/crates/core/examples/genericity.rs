// The genericity resultant: numeric values, symbolic closed forms and the
// square identity against consecutive values at zero.

use krall_laguerre::darboux::SystemSpec;
use krall_laguerre::exact::rat::{rat, rat_to_string, ratio};
use krall_laguerre::genericity::{
    alpha2_nongeneric_point, genericity_report, k1_closed_form_check, k2_closed_form_check, resultant_symbolic,
    squared_resultant_check,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sym = resultant_symbolic(2, 2)?;
    println!("alpha=2, k=2: R(b0, b1) = {}", sym.display_with(&["b0", "b1"]));

    let k1 = k1_closed_form_check(1..=4);
    println!("{k1}");
    assert!(k1.pass);
    let samples: Vec<_> = (1..=5).map(|i| (ratio(i, 2), ratio(1 - i, 3))).collect();
    let (k2, constant) = k2_closed_form_check(3, &samples);
    println!("{k2}");
    assert!(k2.pass && constant == Some(rat(1)));

    for beta in [vec![rat(1), rat(1)], vec![ratio(1, 8), rat(0)]] {
        let spec = SystemSpec::admissible(2, beta)?;
        let rep = genericity_report(&spec)?;
        println!("beta = {:?}: R = {}, generic = {}", rep.beta.iter().map(rat_to_string).collect::<Vec<_>>(), rat_to_string(&rep.resultant), rep.generic);
        assert!(squared_resultant_check(spec.basis()).pass);
    }

    // the whole non-generic curve at alpha = 2 is rational in s
    let (b0, b1) = alpha2_nongeneric_point(&ratio(1, 3));
    let spec = SystemSpec::new(2, vec![b0, b1])?;
    assert_eq!(genericity_report(&spec)?.resultant, rat(0));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
