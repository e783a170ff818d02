mod common;

use common::{data_dir, npp, npp_in};
use npp_cli::Workspace;
use proptest::prelude::*;

const DATA: [&str; 7] = ["ae.alg", "ae1.alg", "zero.r", "e2e2.r", "e1e2.r", "omega.form", "t.map"];

#[test]
fn coherent_example_passes() {
    let r = npp(&["check", "algebra", "ae.alg", "--level", "coherent"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.value("check.algebra"), Some("pass"));
}

#[test]
fn zero_tensor_solves_everything() {
    let r = npp(&["check", "ybe", "ae1.alg", "zero.r"]);
    assert_eq!(r.code, 0);
    for t in ["D", "S", "D1", "D2", "D3", "S1"] {
        assert_eq!(r.value(&format!("tensor.{t}")), Some("0"), "{t}");
    }
}

#[test]
fn symmetric_search_finds_e3e3() {
    let r = npp(&["search", "ybe", "ae1.alg", "--coeffs", "-1,0,1", "--symmetric"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.value("solutions"), Some("27"));
    assert!(npp_cli::report::machine_section(&r.stdout).iter().any(|(k, v)| k.starts_with("solution.") && *v == "e3⊗e3"));
}

#[test]
fn verified_search_agrees_with_plain_search() {
    let plain = npp(&["search", "ybe", "ae.alg"]);
    let verified = npp(&["search", "ybe", "ae.alg", "--verify", "--jobs", "2"]);
    assert_eq!(verified.code, 0);
    assert_eq!(verified.value("check.characterizations"), Some("pass"));
    assert_eq!(verified.value("sweep.candidates"), Some("81"));
    let sols = |r: &common::Run| -> Vec<String> {
        npp_cli::report::machine_section(&r.stdout).into_iter().filter(|(k, _)| k.starts_with("solution.")).map(|(_, v)| v.to_string()).collect()
    };
    assert_eq!(sols(&plain), sols(&verified));
}

#[test]
fn overflowing_coefficients_fall_back_to_big_rationals() {
    let r = npp(&["search", "ybe", "ae.alg", "--coeffs", "0,4611686018427387903/7", "--verify"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stderr.is_empty(), "{}", r.stderr);
    assert_eq!(r.value("sweep.candidates"), Some("16"));
}

#[test]
fn failing_checks_exit_one_with_witnesses() {
    let r = npp(&["check", "ybe", "ae1.alg", "e2e2.r"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.value("witness.1.identity"), Some("D"));
    assert_eq!(r.value("characterizations"), Some("agree"));
}

#[test]
fn expectations_flag_discrepancies() {
    let r = npp(&["check", "ybe", "ae1.alg", "e2e2.r", "--expect", "pass"]);
    assert_eq!((r.code, r.value("discrepancy")), (1, Some("true")));
    let r = npp(&["check", "ybe", "ae1.alg", "e2e2.r", "--expect", "fail", "--strict"]);
    assert_eq!((r.code, r.value("discrepancy")), (0, Some("false")));
    let r = npp(&["check", "ybe", "ae1.alg", "zero.r", "--expect", "fail", "--strict"]);
    assert_eq!(r.code, 1);
}

#[test]
fn usage_and_input_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["frobnicate"],
        &["check", "algebra", "missing.alg"],
        &["check", "algebra", "ae.alg", "--level", "sideways"],
        &["check", "algebra", "ae.alg", "--alg", "nope"],
        &["check", "algebra", "ae.alg", "ae1.alg"],
        &["check", "ybe", "ae.alg", "zero.r"],
        &["check", "operator", "ae1.alg", "--weight", "1"],
    ];
    for args in cases {
        let r = npp(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stdout);
        assert!(r.stderr.starts_with("error") || r.stderr.contains("error:"), "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.alg"), "algebra a\ndim 2\n\nsucc 1 2 3 1\nend\n").unwrap();
    let r = npp_in(dir.path(), &["check", "algebra", "bad.alg"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("bad.alg:4:"), "{}", r.stderr);
    std::fs::write(dir.path().join("bad.alg"), "algebra a\ndim 3\nsucc 1 2 3 1/0\nend\n").unwrap();
    let r = npp_in(dir.path(), &["check", "algebra", "bad.alg"]);
    assert!(r.stderr.contains("bad.alg:3: malformed rational"), "{}", r.stderr);
}

#[test]
fn help_exits_zero() {
    let r = npp(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("search"));
}

#[test]
fn output_is_deterministic() {
    let args = ["construct", "lift", "ae.alg", "t.map", "--compare", "lift_table.co"];
    assert_eq!(npp(&args).stdout, npp(&args).stdout);
}

#[test]
fn emit_round_trips_the_data_files() {
    let mut args = vec!["emit"];
    args.extend(DATA);
    let first = npp(&args);
    assert_eq!(first.code, 0, "{}", first.stderr);
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("all.txt"), &first.stdout).unwrap();
    let second = npp_in(dir.path(), &["emit", "all.txt"]);
    assert_eq!(first.stdout, second.stdout);

    let mut original = Workspace::default();
    for f in DATA {
        original.load_file(&data_dir().join(f)).unwrap();
    }
    let mut reparsed = Workspace::default();
    reparsed.load_str("emitted", &first.stdout).unwrap();
    assert_eq!(original, reparsed);
}

#[test]
fn constructed_objects_feed_later_commands() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("s.r"), "tensor s on ae\nentry 2 2 1\nend\n").unwrap();
    std::fs::copy(data_dir().join("ae.alg"), dir.path().join("ae.alg")).unwrap();
    let r = npp_in(dir.path(), &["construct", "double", "ae.alg", "s.r", "--out", "double.txt"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.value("skew_map_is_block"), Some("true"));
    let r = npp_in(dir.path(), &["classify", "double.txt"]);
    assert_eq!(r.value("class"), Some("quasi-triangular-factorizable"));
    let r = npp_in(dir.path(), &["convert", "fact-to-rb", "double.txt", "--out", "rb.txt"]);
    assert_eq!(r.code, 0);
    let r = npp_in(dir.path(), &["convert", "rb-to-fact", "rb.txt"]);
    assert_eq!(r.value("r"), Some("e1⊗e3 + e2⊗e4"));
    let r = npp_in(dir.path(), &["check", "manin", "rb.txt", "--split", "1,2"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = npp_in(dir.path(), &["factorize", "double.txt", "--vector", "1,2,-1,3"]);
    assert_eq!((r.value("x1"), r.value("x2")), (Some("0,0,-1,3"), Some("-1,-2,0,0")));
}

#[test]
fn quadratic_example_passes() {
    let r = npp(&["check", "form", "ae.alg", "omega.form"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.value("r_omega.invariant"), Some("pass"));
    let r = npp(&["construct", "phase-space", "ae.alg"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.value("check.symplectic"), Some("pass"));
}

#[test]
fn regular_dual_representation_is_full() {
    for alg in ["ae.alg", "ae1.alg"] {
        let r = npp(&["check", "rep", alg, "--rep", "regular.dual"]);
        assert_eq!(r.code, 0, "{alg}");
    }
}

#[test]
fn operator_check_on_the_lift_example() {
    let r = npp(&["check", "operator", "ae.alg", "t.map"]);
    assert_eq!(r.code, 0);
    let r = npp(&["check", "operator", "ae.alg", "t.map", "--weight", "1"]);
    assert_eq!(r.value("weight"), Some("1"));
}

fn algebra_lines() -> impl Strategy<Value = Vec<String>> {
    prop::collection::btree_map((0usize..3, 1usize..=3, 1usize..=3, 1usize..=3), (-4i64..=4, 1i64..=3), 0..12).prop_map(|m| {
        m.into_iter().map(|((op, i, j, k), (n, d))| format!("{} {i} {j} {k} {n}/{d}", ["succ", "prec", "ast"][op])).collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn emission_is_a_fixed_point(lines in algebra_lines()) {
        let text = format!("algebra a\ndim 3\n{}\nend\ntensor t on a\nentry 1 2 -2/4\nentry 3 3 5\nend\n", lines.join("\n"));
        let mut ws = Workspace::default();
        ws.load_str("gen", &text).unwrap();
        let emitted = ws.emit();
        let mut again = Workspace::default();
        again.load_str("emitted", &emitted).unwrap();
        prop_assert_eq!(&again, &ws);
        prop_assert_eq!(again.emit(), emitted);
    }

    #[test]
    fn line_order_does_not_matter(lines in algebra_lines(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = lines.clone();
        shuffled.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let load = |ls: &[String]| {
            let mut ws = Workspace::default();
            ws.load_str("gen", &format!("algebra a\ndim 3\n{}\nend\n", ls.join("\n"))).unwrap();
            ws
        };
        prop_assert_eq!(load(&lines).emit(), load(&shuffled).emit());
    }
}
