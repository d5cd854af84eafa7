mod common;

use std::path::PathBuf;

use common::fixture;
use sigmakit::cli::{run, Outcome};

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

fn sigmakit(args: &[&str]) -> Outcome {
    run(std::iter::once("sigmakit").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> String {
    let p: PathBuf = std::env::temp_dir().join(format!("sigmakit-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

fn line<'a>(out: &'a Outcome, key: &str) -> &'a str {
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no '{key}' line in:\n{}", out.stdout))
}

fn error_code(out: &Outcome) -> &str {
    out.stderr
        .lines()
        .next()
        .and_then(|l| l.strip_prefix("error: "))
        .expect("error line")
}

#[test]
fn bredon_raag_star_is_out() {
    let out = sigmakit(&[
        "bredon",
        "--group",
        &path("raag_star.def"),
        "--char",
        &path("raag_star_generic.def"),
        "--m",
        "1",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("group: raagext\n"));
    assert_eq!(line(&out, "class[1].index"), "INFINITE");
    assert!(line(&out, "class[1].cond1").starts_with("fail"));
    assert_eq!(line(&out, "verdict"), "OUT");
}

#[test]
fn bredon_swap_pairs_dense_is_in() {
    let out = sigmakit(&[
        "bredon",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_dense.def"),
        "--m",
        "inf",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "class[1].K"), "<t>");
    assert_eq!(line(&out, "class[1].N_G(K)"), "<b0*b1, b2*b3, t>");
    assert_eq!(line(&out, "class[1].index"), "4");
    assert_eq!(line(&out, "verdict"), "IN");
}

#[test]
fn hexagon_fails_on_image_zero() {
    let out = sigmakit(&[
        "bredon",
        "--group",
        &path("hexflip.def"),
        "--char",
        &path("hexflip_any.def"),
        "--m",
        "1",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("cond2: chi(N_G(K)) = 0"));
    assert_eq!(line(&out, "verdict"), "OUT");
}

#[test]
fn thompson_extension_only_nu() {
    let g = path("thompson_flip.def");
    let inside = sigmakit(&[
        "bredon",
        "--group",
        &g,
        "--char",
        &path("thompson_nu.def"),
        "--m",
        "inf",
    ]);
    let outside = sigmakit(&[
        "bredon",
        "--group",
        &g,
        "--char",
        &path("thompson_minus_nu.def"),
        "--m",
        "1",
    ]);
    assert_eq!(line(&inside, "verdict"), "IN");
    assert_eq!(line(&outside, "verdict"), "OUT");
}

#[test]
fn sigma_of_f_by_pair() {
    let g = path("thompson_flip.def");
    let neg = sigmakit(&["sigma", "--group", &g, "--fchar", "-1,-2", "--m", "inf"]);
    assert_eq!(neg.code, 0, "{}", neg.stderr);
    assert_eq!(line(&neg, "verdict"), "OUT");
    let mixed = sigmakit(&["sigma", "--group", &g, "--fchar", "1,-2", "--m", "inf"]);
    assert_eq!(line(&mixed, "verdict"), "IN");
    let axis = sigmakit(&["sigma", "--group", &g, "--fchar", "-1,0", "--m", "1"]);
    assert_eq!(line(&axis, "verdict"), "OUT");
}

#[test]
fn openness_reports_indices() {
    let out = sigmakit(&["open", "--group", &path("swap_pairs.def")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "verdict"), "IN");
    assert!(out.stdout.contains("4"));
    let out = sigmakit(&["open", "--group", &path("raag_star.def")]);
    assert!(out.stdout.contains("INFINITE"));
    assert_eq!(line(&out, "verdict"), "OUT");
}

#[test]
fn subsphere_examples() {
    let out = sigmakit(&[
        "subsphere",
        "--group",
        &path("swap_pairs.def"),
        "--H",
        "t, b0*b1^-1, b2*b3^-1",
        "--m",
        "inf",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "verdict"), "IN");
    let torsion = sigmakit(&[
        "subsphere",
        "--group",
        &path("swap_pairs.def"),
        "--H",
        "t, b0^2, b1, b2, b3",
        "--m",
        "1",
    ]);
    assert_eq!(torsion.code, 5);
    assert_eq!(error_code(&torsion), "HYPOTHESIS_VIOLATED");
}

#[test]
fn monoidlab_discrete_is_transitive() {
    let out = sigmakit(&[
        "monoidlab",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_discrete.def"),
        "--K",
        "t",
        "--H",
        "t",
        "--height",
        "4",
        "--norm",
        "2",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("transitive"), "{}", out.stdout);
    assert_eq!(line(&out, "agreement"), "true");
}

#[test]
fn validate_reports_structure() {
    let out = sigmakit(&[
        "validate",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_dense.def"),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(line(&out, "free_rank"), "2");
    assert_eq!(line(&out, "valid"), "true");
}

#[test]
fn output_is_deterministic() {
    let args = [
        "bredon",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_dense.def"),
        "--m",
        "2",
    ];
    let a = sigmakit(&args);
    let b = sigmakit(&args);
    assert_eq!(a, b);
    let args = [
        "monoidlab",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_discrete.def"),
        "--K",
        "t",
        "--norm",
        "2",
    ];
    assert_eq!(sigmakit(&args), sigmakit(&args));
}

#[test]
fn io_and_usage_errors_exit_two() {
    let out = sigmakit(&["validate", "--group", "/nonexistent/group.def"]);
    assert_eq!((out.code, error_code(&out)), (2, "IO"));
    let out = sigmakit(&[
        "bredon",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_dense.def"),
        "--m",
        "0",
    ]);
    assert_eq!((out.code, error_code(&out)), (2, "USAGE"));
    let out = sigmakit(&["frobnicate"]);
    assert_eq!(out.code, 2);
}

#[test]
fn parse_errors_carry_line_numbers() {
    let g = scratch("bad.def", "[group]\nfamily finbyab\n");
    let out = sigmakit(&["validate", "--group", &g]);
    assert_eq!((out.code, error_code(&out)), (2, "PARSE"));
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
}

#[test]
fn unsupported_requests_exit_three() {
    let out = sigmakit(&[
        "monoidlab",
        "--group",
        &path("raag_star.def"),
        "--char",
        &path("raag_star_generic.def"),
    ]);
    assert_eq!((out.code, error_code(&out)), (3, "UNSUPPORTED"));
    let out = sigmakit(&[
        "sigma",
        "--group",
        &path("swap_pairs.def"),
        "--fchar",
        "1,1",
        "--m",
        "1",
    ]);
    assert_eq!((out.code, error_code(&out)), (3, "UNSUPPORTED"));
}

#[test]
fn incomplete_search_is_inconclusive() {
    let out = sigmakit(&[
        "bredon",
        "--group",
        &path("swap_pairs.def"),
        "--char",
        &path("swap_pairs_dense.def"),
        "--m",
        "inf",
        "--bound",
        "0",
    ]);
    assert_eq!(out.code, 4);
    assert_eq!(line(&out, "verdict"), "INCONCLUSIVE");
    assert!(out.stdout.contains("(incomplete)"));
}

#[test]
fn precondition_failures_exit_five() {
    let g = path("swap_pairs.def");
    let zero = scratch("zero.def", "b0 = 0\nb1 = 0\nb2 = 0\nb3 = 0\n");
    let out = sigmakit(&["bredon", "--group", &g, "--char", &zero, "--m", "1"]);
    assert_eq!((out.code, error_code(&out)), (5, "ZERO_CHARACTER"));
    let bad = scratch("notchar.def", "b0 = 1\nb1 = 2\nb2 = 0\nb3 = 0\n");
    let out = sigmakit(&["bredon", "--group", &g, "--char", &bad, "--m", "1"]);
    assert_eq!((out.code, error_code(&out)), (5, "NOT_A_CHARACTER"));
    let partial = scratch("partial.def", "b0 = 1\n");
    let out = sigmakit(&["bredon", "--group", &g, "--char", &partial, "--m", "1"]);
    assert_eq!((out.code, error_code(&out)), (5, "MISSING_GENERATOR"));
    let out = sigmakit(&[
        "monoidlab",
        "--group",
        &g,
        "--char",
        &path("swap_pairs_discrete.def"),
        "--K",
        "b0",
    ]);
    assert_eq!((out.code, error_code(&out)), (5, "SUBGROUP_NOT_FINITE"));
}
