//! End-to-end runs of the command line against the files in `tests/golden`.

use std::fs;

use lambda_cli::run;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lambdak(args: &[&str]) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("lambdak").chain(args.iter().copied()), &mut out, &mut err);
    Output { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn golden(name: &str) -> String {
    fs::read_to_string(format!("tests/golden/{}", name)).unwrap()
}

#[test]
fn universal_polynomials_print_canonically() {
    assert_eq!(lambdak(&["upoly", "P", "2"]).stdout, "e1^2*f2 + e2*f1^2 - 2*e2*f2\n");
    assert_eq!(lambdak(&["upoly", "PKL", "2", "2"]).stdout, "e1*e3 - e4\n");
    let zero = lambdak(&["upoly", "P", "0"]);
    assert_eq!(zero.code, 2);
    assert!(zero.stdout.is_empty());
    assert!(zero.stderr.contains("[lambda]"), "{}", zero.stderr);
}

#[test]
fn wrong_index_count_is_a_usage_error() {
    assert_eq!(lambdak(&["upoly", "PKL", "2"]).code, 2);
}

#[test]
fn verify_accepts_a_group_ring() {
    let r = lambdak(&["verify", "tests/golden/z3.ring", "--samples", "10"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, golden("z3.verify.out"));
}

#[test]
fn verify_rejects_a_misdefined_exterior_square() {
    // λ^2(e) = 2 forces λ^2(λ^2(e)) = C(2, 2) = 1, while P_{2,2} = e1*e3 - e4 vanishes at e.
    let r = lambdak(&["verify", "tests/golden/corrupted.ring", "--samples", "0"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout, golden("corrupted.verify.out"));
    assert!(r.stdout.contains("x = e, k = 2, l = 2"));
}

#[test]
fn missing_files_exit_with_usage_code() {
    let r = lambdak(&["verify", "tests/golden/absent.ring"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("absent.ring"));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.ring");
    fs::write(&path, "carrier group\ngroup torsion=2\nsample s1 + * 2\n").unwrap();
    let r = lambdak(&["verify", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains(&format!("{}:3:", path.display())), "{}", r.stderr);
}

#[test]
fn gamma_filtration_of_the_sign_representation() {
    let r = lambdak(&["gamma-filtration", "tests/golden/r_z2.ring", "--mmax", "4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, golden("r_z2.gamma.out"));
    // F^1 = ... = F^4 is spanned by s1 - 1.
    for m in 1..=4 {
        assert!(r.stdout.lines().any(|l| l.split_whitespace().take(2).eq([m.to_string().as_str(), "1"])), "F^{}", m);
    }
}

#[test]
fn absolute_cohomology_lists_each_slot() {
    let r = lambdak(&["abs-cohomology", "tests/golden/r_z2.ring", "--mmax", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, golden("r_z2.abs.out"));
}

#[test]
fn derived_square_matches_the_binomial() {
    let r = lambdak(&["derived-lambda", "tests/golden/k.cplx", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, golden("k.lambda2.out"));
    // χ(K) = -2 + 2 - 1 = -1 and C(-1, 2) = 1.
    assert!(r.stdout.contains("chi(K) = -1\n"));
    assert!(r.stdout.contains("C(chi(K), 2) = 1\n"));
}

#[test]
fn a_small_level_budget_is_reported() {
    let r = lambdak(&["derived-lambda", "tests/golden/k.cplx", "2", "--levels", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("[dold-kan]"), "{}", r.stderr);
}

#[test]
fn cone_check_on_two_categories() {
    let r = lambdak(&["cone-check", "tests/golden/a.cat", "tests/golden/b.cat", "--levels", "4"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, golden("a_b.cone.out"));
}

#[test]
fn components_of_a_category() {
    let r = lambdak(&["pi0", "tests/golden/a.cat"]);
    assert_eq!(r.stdout, "components = 1\n{0, 1}\n");
}

#[test]
fn flag_exterior_basis() {
    let r = lambdak(&["flag-exterior", "1", "3"]);
    assert_eq!(r.stdout, "rank = 2\ne1^e2\ne1^e3\n");
}

#[test]
fn cold_and_warm_cache_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["--cache-dir", cache, "witt", "--samples", "5"];
    let cold = lambdak(&args);
    let warm = lambdak(&args);
    let memory = lambdak(&args[2..]);
    assert_eq!(cold.code, 0);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, memory.stdout);
    assert!(dir.path().join("index").join("P2-3-2").exists());
}

#[test]
fn the_seed_is_logged_and_changes_samples() {
    let a = lambdak(&["--seed", "7", "dk-roundtrip", "--count", "3", "--two-sided", "3"]);
    assert!(a.stdout.starts_with("# dk-roundtrip count=3 two-sided=3 top=4 seed=7\n"));
    assert_eq!(a.stdout, lambdak(&["--seed", "7", "dk-roundtrip", "--count", "3", "--two-sided", "3"]).stdout);
}

#[test]
fn acceptance_suites_are_selected_by_name_or_number() {
    let by_number = lambdak(&["acceptance", "--suite", "5"]);
    let by_name = lambdak(&["acceptance", "--suite", "gamma-filtration"]);
    assert_eq!(by_number.code, 0);
    assert_eq!(by_number.stdout, by_name.stdout.replace("suite=gamma-filtration", "suite=5"));
    assert_eq!(lambdak(&["acceptance", "--suite", "nope"]).code, 2);
}

#[test]
fn help_goes_to_standard_output() {
    let r = lambdak(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("abs-cohomology"));
    assert_eq!(lambdak(&["no-such-command"]).code, 2);
}
