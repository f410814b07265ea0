//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! fails. `cargo test --test acceptance -- --full` adds the B_7 run.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use coxsort::harness::{run_check, Check};
use coxsort::perm_a::{self, CodeA, Permutation};
use coxsort::perm_b::{self, CodeB, SignedPermutation};
use coxsort::perm_d::{self, CodeD, DElement};

type Outcome = Result<String, String>;

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `check` at each degree; the first failure is returned as the error.
fn sweep(check: Check, degrees: impl IntoIterator<Item = usize>, workers: usize) -> Outcome {
    let mut total = 0;
    let mut last = 0;
    for n in degrees {
        let r = run_check(check, n, workers).map_err(|e| format!("{check} n={n}: {e}"))?;
        if !r.passed {
            return Err(format!(
                "{check} n={n}: {} residual={:?}",
                r.counterexample.unwrap_or_default(),
                r.residual
            ));
        }
        total += r.elements_checked;
        last = n;
    }
    Ok(format!("{check} up to n={last}, {total} elements"))
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut notes = Vec::new();
    for p in parts {
        notes.push(p?);
    }
    Ok(notes.join("; "))
}

fn expect<T: PartialEq + std::fmt::Debug>(
    what: &str,
    actual: T,
    expected: T,
) -> Result<(), String> {
    if actual == expected {
        Ok(())
    } else {
        Err(format!("{what}: got {actual:?}, expected {expected:?}"))
    }
}

fn sp(v: &[i32]) -> SignedPermutation {
    SignedPermutation::new(v.to_vec()).unwrap()
}

fn golden() -> Outcome {
    let p = Permutation::new(vec![2, 4, 5, 1, 3]).unwrap();
    expect(
        "B-code(2 4 5 1 3)",
        perm_a::bcode_encode(&p),
        CodeA::new(vec![1, 1, 3, 2, 3]).unwrap(),
    )?;

    let s = sp(&[5, -4, -3, 1, -2]);
    expect("sor_B(5 -4 -3 1 -2)", s.sor_b(), 16)?;
    expect(
        "factorization of 5 -4 -3 1 -2",
        s.selection_sort_factorization().to_string(),
        "(-1,2)(-3,3)(-2,4)(1,5)".to_string(),
    )?;

    expect(
        "B-code_B(3 -1 -6 -5 4 2)",
        perm_b::bcode_b_encode(&sp(&[3, -1, -6, -5, 4, 2]))
            .entries()
            .to_vec(),
        vec![1, -1, 1, -4, -4, -3],
    )?;

    let s = sp(&[5, -7, 1, -4, 9, -2, -6, 3, 8]);
    let leh = perm_b::lehmer_b_encode(&s);
    expect(
        "Leh_B",
        leh.entries().to_vec(),
        vec![1, -2, 1, -2, 5, -2, -5, 3, 8],
    )?;
    expect("Rmil_B Leh", leh.rmil_b().to_vec(), vec![1, 3, 8])?;
    expect("Rmil_B", s.rmil_b().to_vec(), vec![1, 3, 8])?;
    expect("Max Leh", leh.max_set().to_vec(), vec![1, 5])?;
    expect("Lmap_B", s.lmap_b().to_vec(), vec![1, 5])?;

    let code = vec![1, 1, -3, -2, 3];
    expect(
        "A-code_B decode (1,1,-3,-2,3)",
        perm_b::acode_b_decode(&CodeB::new(code.clone()).unwrap()),
        sp(&[2, -4, 5, 1, -3]),
    )?;

    let d = DElement::new(sp(&[2, -4, 5, 1, -3])).unwrap();
    expect(
        "E-code(2 -4 5 1 -3)",
        perm_d::ecode_encode(&d),
        CodeD::new(code.clone()).unwrap(),
    )?;

    let d = DElement::new(sp(&[-2, -4, 5, -1, -3])).unwrap();
    expect(
        "F-code(-2 -4 5 -1 -3)",
        perm_d::fcode_encode(&d),
        CodeD::new(code).unwrap(),
    )?;
    expect(
        "cosort factorization of -2 -4 5 -1 -3",
        d.cosort_factorization().to_string(),
        "t(1,2)t(-3,3)t(-2,4)t(3,5)".to_string(),
    )?;
    expect("sor'_D(-2 -4 5 -1 -3)", d.sor_d_prime(), 11)?;
    Ok("all worked examples reproduced".to_string())
}

fn d_bivariate() -> Outcome {
    let anchor = run_check(Check::TypeDBivariate, 2, 1).map_err(|e| e.to_string())?;
    let text = anchor.polynomial.map(|p| p.to_string()).unwrap_or_default();
    expect("D_2 anchor", text.as_str(), "1 + 2*q*t + q^2*t")?;
    sweep(Check::TypeDBivariate, 2..=6, workers())
}

struct Criterion {
    id: usize,
    title: &'static str,
    limit: Duration,
    run: Box<dyn Fn() -> Outcome>,
}

fn criteria(full: bool) -> Vec<Criterion> {
    let w = workers();
    let secs = Duration::from_secs;
    let b_max = if full { 7 } else { 6 };
    vec![
        Criterion {
            id: 1,
            title: "type A generating function, n = 1..8",
            limit: secs(5),
            run: Box::new(move || sweep(Check::TypeAGf, 1..=8, w)),
        },
        Criterion {
            id: 2,
            title: "phi transports (inv, rl-min, Lmap) to (sor, cyc, Lmap), n = 1..7",
            limit: secs(5),
            run: Box::new(move || sweep(Check::TypeATransport, 1..=7, w)),
        },
        Criterion {
            id: 3,
            title: "six set-valued pairs over S_n, n = 1..6",
            limit: secs(10),
            run: Box::new(move || sweep(Check::TypeASetPairs, 1..=6, w)),
        },
        Criterion {
            id: 4,
            title: if full {
                "type B generating function, n = 1..7"
            } else {
                "type B generating function, n = 1..6"
            },
            limit: if full { secs(300) } else { secs(30) },
            run: Box::new(move || sweep(Check::TypeBGf, 1..=b_max, w)),
        },
        Criterion {
            id: 5,
            title: "psi transports (inv_B, Lmap_B, Rmil_B) to (sor_B, Lmap_B, Cyc_B), n = 1..5",
            limit: secs(10),
            run: Box::new(move || sweep(Check::TypeBTransport, 1..=5, w)),
        },
        Criterion {
            id: 6,
            title: "six set-valued pairs over B_n, n = 1..5",
            limit: secs(30),
            run: Box::new(move || sweep(Check::TypeBSetPairs, 1..=5, w)),
        },
        Criterion {
            id: 7,
            title: "four type B pairs share one distribution, n = 1..6",
            limit: secs(30),
            run: Box::new(move || sweep(Check::TypeBFourPairs, 1..=6, w)),
        },
        Criterion {
            id: 8,
            title: "sor_D = sor'_D pointwise, n = 2..7",
            limit: secs(120),
            run: Box::new(move || sweep(Check::TypeDSorCosort, 2..=7, w)),
        },
        Criterion {
            id: 9,
            title: "type D bivariate generating function, n = 2..6",
            limit: secs(60),
            run: Box::new(d_bivariate),
        },
        Criterion {
            id: 10,
            title: "type D Mahonian specialization, n = 2..7",
            limit: secs(120),
            run: Box::new(move || sweep(Check::TypeDMahonian, 2..=7, w)),
        },
        Criterion {
            id: 11,
            title: "rho transports (inv_D, nmin_D) to (sor_D, reflection length), n = 2..6",
            limit: secs(60),
            run: Box::new(move || sweep(Check::TypeDTransport, 2..=6, w)),
        },
        Criterion {
            id: 12,
            title: "reflection lengths agree with Cayley BFS, B_n and D_n, n <= 5",
            limit: secs(30),
            run: Box::new(move || {
                all(vec![
                    sweep(Check::TypeBCayley, 1..=5, w),
                    sweep(Check::TypeDCayley, 2..=5, w),
                ])
            }),
        },
        Criterion {
            id: 13,
            title: "all code encode/decode pairs are mutually inverse",
            limit: secs(60),
            run: Box::new(move || {
                all(vec![
                    sweep(Check::TypeARoundtrip, 1..=6, w),
                    sweep(Check::TypeBRoundtrip, 1..=5, w),
                    sweep(Check::TypeDRoundtrip, 2..=5, w),
                ])
            }),
        },
        Criterion {
            id: 14,
            title: "worked examples",
            limit: secs(1),
            run: Box::new(golden),
        },
    ]
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let full = args.iter().any(|a| a == "--full");
    // `cargo test` forwards libtest flags such as `--list`; only run the
    // suite proper.
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let mut failures = 0;
    for c in criteria(full) {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (status, note) = match result {
            Ok(note) if elapsed <= c.limit => ("PASS", note),
            Ok(note) => ("FAIL", format!("{note}; took longer than {:?}", c.limit)),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "{status} [{:>2}] {} ({:.2?}, limit {:?}): {note}",
            c.id, c.title, elapsed, c.limit
        );
    }
    println!("{} of 14 criteria passed", 14 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
