//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use kronlab::characters::{character_table, degree};
use kronlab::classify::{self, natural_square, natural_times_near_square, natural_times_rectangle, printed_product};
use kronlab::cli::run_with;
use kronlab::kronecker::kron_decompose;
use kronlab::lr::skew_syt_count;
use kronlab::par::{set_default_threads, Execution};
use kronlab::{Method, Partition, SkewShape, VirtualCharacter};
use num_traits::ToPrimitive;

use common::Oracle;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["kronlab", "--n-limit", "20"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

fn cli_verify(theorem: &str, n_max: usize, extra: &[&str]) -> Outcome {
    let n = n_max.to_string();
    let mut args = extra.to_vec();
    args.extend_from_slice(&["verify", "--theorem", theorem, "--n-max", &n]);
    let (code, out, err) = cli(&args);
    let first = out.lines().next().unwrap_or("").to_string();
    if code == 0 {
        Ok(first)
    } else {
        Err(format!("exit {code}: {out}{err}"))
    }
}

fn report(r: kronlab::Result<classify::VerificationReport>) -> Outcome {
    let r = r.map_err(|e| e.to_string())?;
    let line = format!("{} n<={} checks={}", r.theorem, r.n_max, r.checked);
    if r.pass {
        Ok(line)
    } else {
        let first = r.counterexamples.first().map(|c| format!("{}: {}", c.case, c.message));
        Err(format!("{line} counterexamples={} first={first:?}", r.counterexample_count))
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut lines = Vec::new();
    for p in parts {
        lines.push(p?);
    }
    Ok(lines.join("; "))
}

fn oracle_product(oracle: &Oracle, mu: &Partition, nu: &Partition) -> VirtualCharacter {
    let terms = oracle
        .kronecker_product(mu.parts(), nu.parts())
        .into_iter()
        .map(|(l, c)| (Partition::of(&l), c));
    VirtualCharacter::from_terms(mu.size(), terms).unwrap()
}

fn expect_equal(what: &str, got: Option<VirtualCharacter>, want: &VirtualCharacter) -> Result<(), String> {
    match got {
        Some(g) if g.render() == want.render() => Ok(()),
        Some(g) => Err(format!("{what}: formula {g}, oracle {want}")),
        None => Err(format!("{what}: no formula")),
    }
}

fn ac1() -> Outcome {
    let line = cli_verify("34c", 10, &["--threads", "1"])?;
    let mut three = Vec::new();
    let mut four = 0;
    for n in 2..=10 {
        for e in classify::sweep_with(n, Execution::auto()).map_err(|e| e.to_string())? {
            if e.c == 3 {
                three.push(format!("{}*{}", e.mu, e.nu));
            }
            if e.c == 4 {
                four += 1;
                let product = kron_decompose(&e.mu, &e.nu, Method::Brute).map_err(|e| e.to_string())?;
                expect_equal(&format!("{}*{}", e.mu, e.nu), printed_product(&e.mu, &e.nu), &product)?;
            }
        }
    }
    if three != ["[2,1]*[2,1]", "[2^2]*[2^2]"] {
        return Err(format!("c=3 pairs: {three:?}"));
    }
    Ok(format!("{line}; c=3 pairs {three:?}; {four} c=4 pairs match the closed forms"))
}

fn ac2() -> Outcome {
    cli_verify("extcomp", 9, &[])
}

fn ac3() -> Outcome {
    all(vec![
        report(classify::verify_dvir_oracle(8)),
        report(classify::verify_dvir_random(10, 10_000, 2024)),
    ])
}

fn ac4() -> Outcome {
    let mut checks = 0u64;
    for n in 1..=10 {
        let table = character_table(n).map_err(|e| e.to_string())?;
        let k = table.labels().len();
        let sizes: Vec<i128> = table.class_sizes().iter().map(|s| s.to_i128().unwrap()).collect();
        let order: i128 = sizes.iter().sum();
        for i in 0..k {
            for j in 0..k {
                let (a, b) = (table.row_values(i), table.row_values(j));
                let rows: i128 = (0..k).map(|c| sizes[c] * (a[c] * b[c]) as i128).sum();
                if rows != if i == j { order } else { 0 } {
                    return Err(format!("row orthogonality fails at n={n}, rows {i},{j}"));
                }
                // column relation: Σ_λ χ(ρ_i)χ(ρ_j) = δ_ij·n!/|C_i|
                let cols: i128 = (0..k)
                    .map(|l| (table.row_values(l)[i] * table.row_values(l)[j]) as i128)
                    .sum();
                if cols != if i == j { order / sizes[i] } else { 0 } {
                    return Err(format!("column orthogonality fails at n={n}, classes {i},{j}"));
                }
                checks += 2;
            }
            let lambda = &table.labels()[i];
            let id = table.row_values(i)[k - 1] as u128;
            let hooks = degree(lambda).to_u128().unwrap();
            let tableaux = skew_syt_count(&SkewShape::straight(lambda.clone()));
            if id != hooks || id != tableaux {
                return Err(format!("degree of {lambda}: table {id}, hooks {hooks}, tableaux {tableaux}"));
            }
            checks += 1;
        }
    }
    Ok(format!("n<=10, {checks} checks"))
}

fn ac5() -> Outcome {
    let oracles: BTreeMap<usize, Oracle> = (1..=12).map(|n| (n, Oracle::new(n))).collect();
    let oracle = |n: usize| &oracles[&n];
    let p = |s: &str| s.parse::<Partition>().unwrap();
    let mut count = 0;
    for a in 2..=6usize {
        for b in 2..=6usize {
            let n = a * b;
            if n > 12 {
                continue;
            }
            let (mu, nu) = (Partition::of(&[n - 1, 1]), Partition::rectangle(a, b));
            let want = oracle_product(oracle(n), &mu, &nu);
            expect_equal(&format!("{mu}*{nu}"), natural_times_rectangle(a as i64, b as i64), &want)?;
            count += 1;
        }
    }
    for n in 1..=12usize {
        let row = Partition::row(n);
        let want = oracle_product(oracle(n), &row, &row);
        expect_equal(&format!("{row}^2"), printed_product(&row, &row), &want)?;
        if n >= 4 {
            let nat = Partition::of(&[n - 1, 1]);
            let want = oracle_product(oracle(n), &nat, &nat);
            expect_equal(&format!("{nat}^2"), natural_square(n as i64), &want)?;
        }
        count += 2;
    }
    for s in ["2,1", "2^2", "3^2", "2^3"] {
        let l = p(s);
        let want = oracle_product(oracle(l.size()), &l, &l);
        expect_equal(&format!("{l}^2"), printed_product(&l, &l), &want)?;
        count += 1;
    }
    for k in 2..=5usize {
        let (mu, nu) = (Partition::of(&[2 * k, 1]), Partition::of(&[k + 1, k]));
        let want = oracle_product(oracle(2 * k + 1), &mu, &nu);
        expect_equal(&format!("{mu}*{nu}"), natural_times_near_square(k as i64), &want)?;
        count += 1;
    }
    for (a, b) in [("3^2", "2^3"), ("3^2", "4,2")] {
        let want = oracle_product(oracle(6), &p(a), &p(b));
        expect_equal(&format!("{a}*{b}"), printed_product(&p(a), &p(b)), &want)?;
        count += 1;
    }
    Ok(format!(
        "{count} closed forms equal the independent oracle; [3^2]*[4,2] ends in [2^2,1^2] (a [2^2,1] term would have the wrong size)"
    ))
}

fn ac6() -> Outcome {
    report(classify::verify_almost_width(8))
}

fn ac7() -> Outcome {
    all(vec![
        report(classify::skew_two_component_census(8)),
        report(classify::verify_skew_lemmas(8)),
        report(classify::verify_skew_products(6)),
    ])
}

fn ac8() -> Outcome {
    all(vec![
        report(classify::verify_section_lemmas(9)),
        report(classify::verify_rectangle_case(12)),
        report(classify::verify_hook_bound(9)),
    ])
}

fn ac9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let one = dir.path().join("one.jsonl");
    let max = dir.path().join("max.jsonl");
    let threads = std::thread::available_parallelism().map_or(2, |n| n.get().max(2)).to_string();
    for (t, path) in [("1", &one), (threads.as_str(), &max)] {
        let (code, out, err) = cli(&["--threads", t, "sweep", "--n", "8", "--out", path.to_str().unwrap()]);
        if code != 0 {
            return Err(format!("sweep with {t} threads: exit {code}: {out}{err}"));
        }
    }
    let (a, b) = (std::fs::read(&one).unwrap(), std::fs::read(&max).unwrap());
    if a != b || a.is_empty() {
        return Err("catalogs differ".into());
    }
    let lines = a.iter().filter(|&&c| c == b'\n').count();
    Ok(format!("1 vs {threads} threads: {lines} identical lines"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "three and four components", ac1),
        ("AC2", "extreme-component classification", ac2),
        ("AC3", "recursion agrees with character table", ac3),
        ("AC4", "character-table soundness", ac4),
        ("AC5", "closed-form decompositions", ac5),
        ("AC6", "width m-1 constituents from chi", ac6),
        ("AC7", "skew characters with two components", ac7),
        ("AC8", "non-special pair lemmas", ac8),
        ("AC9", "sweep determinism", ac9),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let started = Instant::now();
        let outcome = f();
        set_default_threads(0);
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("{id} PASS {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {name} ({secs:.2}s): {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
