//! Acceptance criteria, one line each. Runs without the libtest harness so
//! every line is printed; exits nonzero if any criterion fails.

use std::process::ExitCode;

use knotlie::alexander::{characteristic_polynomial, LaurentPolynomial};
use knotlie::knots::{catalog, is_symplectic, parse_braid, wirtinger_exponents, wirtinger_from_braid, CATALOG};
use knotlie_cli::oracle::{seifert_alexander, seifert_catalog};
use knotlie_cli::selftest::{run_suite, suites, Context, SuiteReport};

const SEED: u64 = 20240917;

type Criterion = (u32, &'static str, fn() -> Verdict);

struct Verdict {
    passed: bool,
    detail: String,
}

fn suite(name: &str) -> SuiteReport {
    let all = suites();
    let s = all.iter().find(|s| s.name == name).expect("suite exists");
    run_suite(s, SEED, &Context::default())
}

/// Suites must pass with at least `min` cases each.
fn suites_verdict(required: &[(&str, usize)]) -> Verdict {
    let mut passed = true;
    let mut parts = Vec::new();
    for &(name, min) in required {
        let r = suite(name);
        let ok = r.passed() && r.cases >= min;
        passed &= ok;
        let mut part = format!("{name} {}/{} ok", r.cases - r.failures, r.cases);
        if r.cases < min {
            part.push_str(&format!(" (needs {min} cases)"));
        }
        if let Some(c) = r.counterexample {
            part.push_str(&format!(" [first counterexample: {c}]"));
        }
        parts.push(part);
    }
    Verdict {
        passed,
        detail: parts.join("; "),
    }
}

fn lie_axioms() -> Verdict {
    suites_verdict(&[("antisymmetry", 1000), ("jacobi", 400)])
}

fn anchors() -> Verdict {
    suites_verdict(&[("anchors", 601)])
}

fn homological() -> Verdict {
    suites_verdict(&[("homology-projection", 400)])
}

fn alexander_oracle() -> Verdict {
    let mut passed = true;
    let mut parts = Vec::new();
    for (name, braid, v) in seifert_catalog() {
        let oracle = LaurentPolynomial::from_i64s(0, &seifert_alexander(&v));
        let fox = (|| {
            let p = wirtinger_from_braid(&parse_braid(braid, None)?)?;
            knotlie::alexander::alexander_polynomial(&knotlie::alexander::alexander_matrix(&p, &wirtinger_exponents(&p))?)
        })();
        let ok = match &fox {
            Ok(d) => {
                let one = d.value_at_one();
                d.associates(&oracle)
                    && (one == 1.into() || one == (-1).into())
                    && d.associates(&d.reciprocal())
            }
            Err(_) => false,
        };
        passed &= ok;
        parts.push(match fox {
            Ok(d) => format!("{name}: Fox {d}, Seifert {oracle}"),
            Err(e) => format!("{name}: {e}"),
        });
    }
    let expected = ["t^2-t+1", "t^2-3t+1", "t^4-t^3+t^2-t+1"];
    for ((name, _, v), e) in seifert_catalog().iter().zip(expected) {
        let ok = LaurentPolynomial::from_i64s(0, &seifert_alexander(v)).to_string() == e;
        passed &= ok;
        if !ok {
            parts.push(format!("{name}: oracle differs from {e}"));
        }
    }
    Verdict {
        passed,
        detail: parts.join("; "),
    }
}

fn fibered_consistency() -> Verdict {
    let mut passed = true;
    let mut parts = Vec::new();
    for name in CATALOG {
        let m = catalog(name).expect("catalog validates");
        let h = m.homology_matrix();
        let chi = characteristic_polynomial(&h);
        let ok = is_symplectic(&h) && chi.associates(m.alexander_reference());
        passed &= ok;
        parts.push(format!("{name}: det(tI-M) = {}, symplectic {}", chi.normalized(), is_symplectic(&h)));
    }
    passed &= suite("fibered-consistency").passed();
    Verdict {
        passed,
        detail: parts.join("; "),
    }
}

fn naturality() -> Verdict {
    suites_verdict(&[("naturality-width-2", 100)])
}

fn equivariance() -> Verdict {
    suites_verdict(&[
        ("t-equivariance-fiber", 200),
        ("t-equivariance-orbits", 200),
        ("t-equivariance-homology", 200),
    ])
}

fn quotient() -> Verdict {
    suites_verdict(&[("quotient-independent-shifts", 100)])
}

fn cover_round_trip() -> Verdict {
    suites_verdict(&[("schreier-round-trip", 101)])
}

fn determinism() -> Verdict {
    fn args(jobs: &'static str) -> [&'static str; 8] {
        ["knotlie", "selftest", "--format", "json", "--seed", "7", "--jobs", jobs]
    }
    let first = knotlie_cli::run(args("0"));
    let second = knotlie_cli::run(args("0"));
    let serial = knotlie_cli::run(args("1"));
    let identical = first.stdout == second.stdout && first.stdout == serial.stdout;
    Verdict {
        passed: identical && first.code == 0 && !first.stdout.is_empty(),
        detail: format!(
            "{} bytes, repeat identical {}, serial identical {}, exit {}",
            first.stdout.len(),
            first.stdout == second.stdout,
            first.stdout == serial.stdout,
            first.code
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "Lie axioms", lie_axioms),
        (2, "Goldman anchor values", anchors),
        (3, "homological homomorphism", homological),
        (4, "Alexander oracle", alexander_oracle),
        (5, "fibered consistency", fibered_consistency),
        (6, "naturality scaling (width-2 window)", naturality),
        (7, "t-equivariance", equivariance),
        (8, "quotient well-definedness", quotient),
        (9, "cover round trip", cover_round_trip),
        (10, "determinism", determinism),
    ];
    let mut failed = 0;
    for (n, name, check) in criteria {
        let v = check();
        if !v.passed {
            failed += 1;
        }
        println!("{} criterion {n:>2} {name}: {}", if v.passed { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
