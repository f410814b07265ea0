// Every named check at a small degree, as a table of reports.
//
// cargo run --release --example verify_all

use coxsort::harness::{run_check, Check};

fn main() -> coxsort::Result<()> {
    let mut failed = 0;
    for check in Check::ALL {
        let n = 4;
        let r = run_check(check, n, 2)?;
        println!(
            "{:<22} n={n} {:>6} elements  {}",
            check.name(),
            r.elements_checked,
            if r.passed { "ok" } else { "FAILED" }
        );
        if let Some(c) = r.counterexample {
            println!("    {c}");
            failed += 1;
        }
    }
    assert_eq!(failed, 0);
    Ok(())
}
