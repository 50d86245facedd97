// The `krall` command surface driven in-process: text and JSON reports and
// the exit codes for bad input.

use krall_laguerre::cli::run_args;

fn krall(args: &[&str]) -> krall_laguerre::cli::Outcome {
    run_args(std::iter::once("krall").chain(args.iter().copied()))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let o = krall(&["system", "--alpha", "1", "--k", "1", "--beta", "1", "--n", "3"]);
    print!("{}", o.stdout);
    assert_eq!(o.code, 0);

    let o = krall(&["operator", "--alpha", "1", "--beta", "1", "--generator", "0", "--emit", "json"]);
    let op: krall_laguerre::exact::DiffOp = serde_json::from_str(o.stdout.trim())?;
    println!("operator round-trips through JSON, order {:?}", op.order());

    let o = krall(&["selftest", "--criterion", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout)?;
    println!("selftest criterion 1 pass = {}", v["pass"]);
    assert_eq!(o.code, 0);

    for (args, code) in [
        (&["classical", "--alpha", "0.5"][..], 2),
        (&["system", "--alpha", "1", "--beta", "0"][..], 3),
        (&["operator", "--alpha", "2", "--beta", "1", "--h", "0,1"][..], 4),
        (&["sobolev", "--alpha", "2", "--a", "1,0,0"][..], 5),
    ] {
        let o = krall(args);
        print!("exit {}: {}", o.code, o.stderr);
        assert_eq!(o.code, code);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
