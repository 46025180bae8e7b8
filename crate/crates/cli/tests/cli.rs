use dualroots_cli::{exit_code, execute, Execution, EXIT_CONFIG, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS};
use dualroots_core::polycore::rational::parse_rational;
use dualroots_core::veritas::Verdict;
use serde_json::Value;

fn run(args: &str) -> Execution {
    execute(std::iter::once("dualroots").chain(args.split_whitespace()))
}

fn run_json(args: &str) -> Value {
    let e = run(args);
    assert_eq!(e.code, EXIT_PASS, "{args}: {}", e.stderr);
    serde_json::from_str(&e.stdout).unwrap()
}

#[test]
fn exit_codes_follow_verdicts() {
    assert_eq!(exit_code(Verdict::Pass), EXIT_PASS);
    assert_eq!(exit_code(Verdict::Fail), EXIT_FAIL);
    assert_eq!(exit_code(Verdict::Inconclusive), EXIT_INCONCLUSIVE);
    assert_eq!((EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_CONFIG), (0, 1, 2, 3));
}

#[test]
fn gen_laguerre_two() {
    let v = run_json("gen --family laguerre --n 2 --format json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["text"], "(1/2)*x^2 + (-2 + -1*z)*x + (1 + 3/2*z + 1/2*z^2)");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 6);
}

#[test]
fn gen_specialized_matches_roots_poly() {
    let g = run_json("gen --family gegenbauer --n 3 --at-x 1/2 --format json");
    let r = run_json("roots --family gegenbauer --n 3 --at-x 1/2 --format json");
    assert_eq!(r["degree"], 3);
    assert_eq!(r["nonreal_deficit"], 0);
    assert!(g.to_string().contains(r["poly"].as_str().unwrap()));
}

#[test]
fn roots_enclosures_recheck() {
    let v = run_json("roots --family laguerre --n 5 --at-x 2 --tol 1e-40 --format json");
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 5);
    let mut prev = None;
    for r in roots {
        let e = &r["enclosure"];
        let lo = parse_rational(e["lo"].as_str().unwrap()).unwrap();
        let hi = parse_rational(e["hi"].as_str().unwrap()).unwrap();
        assert!(lo <= hi);
        assert!(&hi - &lo <= parse_rational("1e-40").unwrap());
        if let Some(p) = prev {
            assert!(p < lo);
        }
        prev = Some(hi);
    }
}

#[test]
fn verify_single_theorems() {
    for args in [
        "verify --theorem thm-laguerreD --n 4 --z 0",
        "verify --theorem thm-gegenbauerD --n 3 --z 1/2",
        "verify --theorem cor-laguerrez --n 6",
        "verify --theorem thm-dualinterlG --n 5 --x0 -1/2",
        "verify --theorem lem-laguerre-ineq --n 3 --x0 1 --grid -1,0,7/2",
        "verify --theorem thm-charlier-orth --n 1 --m 1 --x0 1 --tol 1e-20",
    ] {
        let e = run(&format!("{args} --format json"));
        assert_eq!(e.code, EXIT_PASS, "{args}: {}{}", e.stdout, e.stderr);
        let v: Value = serde_json::from_str(&e.stdout).unwrap();
        assert_eq!(v["verdict"], "pass", "{args}");
    }
}

#[test]
fn config_errors_exit_three() {
    for args in [
        "trace --n 4 --to 0",
        "trace --n 4 --to 1/2",
        "verify --theorem thm-laguerreD --n 4 --z -1",
        "verify --theorem thm-nope --n 2",
        "verify --theorem thm-gegenbauerz --n 6 --grid 3",
        "gen --family nope --n 2",
        "gen --family laguerre",
        "scan --grid dyadic:[0,1):0",
        "bogus",
    ] {
        let e = run(args);
        assert_eq!(e.code, EXIT_CONFIG, "{args}: {}", e.stdout);
        assert!(!e.stderr.is_empty(), "{args}");
    }
    assert_eq!(run("--help").code, 0);
}

#[test]
fn large_degree_needs_opt_in() {
    assert_eq!(run("gen --family laguerre --n 30").code, EXIT_CONFIG);
    assert_eq!(run("gen --family laguerre --n 30 --allow-large").code, EXIT_PASS);
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [
        "scan --family gegenbauer --n 1..=8",
        "verify --theorem thm-dualinterlG --n 4",
        "verify --theorem thm-monoroots --n 4",
    ] {
        let one = run(&format!("{args} --jobs 1 --format json"));
        let four = run(&format!("{args} --jobs 4 --format json"));
        assert_eq!(one.code, EXIT_PASS, "{args}");
        assert_eq!(one, four, "{args}");
    }
}

#[test]
fn scan_outside_support_finds_deficits() {
    let v = run_json("scan --family gegenbauer --n 1..=6 --format json");
    let first = &v["first_positive_deficit"];
    assert_eq!(first["n"], 4);
    assert_eq!(first["x"], "5/4");
}

#[test]
fn scan_inside_support_finds_none() {
    for args in [
        "scan --family laguerre --n 1..=10 --grid 0,1/2,1,2,5",
        "scan --family gegenbauer --n 1..=10 --grid 1,-1,1/2",
    ] {
        let v = run_json(&format!("{args} --format json"));
        assert!(v["first_positive_deficit"].is_null(), "{args}");
        for p in v["points"].as_array().unwrap() {
            assert_eq!(p["nonreal_deficit"], 0, "{args}: {p}");
        }
        let text = run(&format!("{args} --format text")).stdout;
        assert!(text.contains("none found at this scale"), "{args}");
    }
}

#[test]
fn trace_csv_is_rfc4180() {
    let e = run("trace --n 4 --to -1/4 --steps 8");
    assert_eq!(e.code, EXIT_PASS);
    let lines: Vec<&str> = e.stdout.split_terminator("\r\n").collect();
    assert_eq!(lines[0], "x,i,gamma,residual,step");
    // 9 samples, two γ's each
    assert_eq!(lines.len(), 1 + 9 * 2);
    assert!(lines.iter().all(|l| !l.contains('\n')));
    assert!(lines[1].starts_with("-1.0000") && lines[1].contains(",1,-0.5000"));
    assert!(lines[2].contains(",2,-1.5000"));
}

#[test]
fn trace_n_two_endpoint() {
    let e = run("trace --n 2 --to -1/8 --steps 32");
    let last = e.stdout.split_terminator("\r\n").last().unwrap();
    let gamma: f64 = last.split(',').nth(2).unwrap().parse().unwrap();
    assert!((gamma - 31.0).abs() < 1e-12);
}

#[test]
fn verify_csv_quotes_fields() {
    let e = run("verify --theorem lem-laguerre-ineq --n 3 --x0 1 --grid 0,1 --format csv");
    assert_eq!(e.code, EXIT_PASS);
    let mut rdr = csv::Reader::from_reader(e.stdout.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, ["path", "theorem_id", "verdict", "detail", "inputs", "witnesses"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().any(|r| r[4].contains("grid=0,1")));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("dualroots-out-{}.json", std::process::id()));
    let e = run(&format!("gen --family charlier --n 2 --x0 1 --format json -o {}", path.display()));
    assert_eq!(e.code, EXIT_PASS);
    assert!(e.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["family"], "charlier");
    std::fs::remove_file(path).unwrap();
}
