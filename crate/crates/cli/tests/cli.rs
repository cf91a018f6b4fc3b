use eala_twist::liealg::{Degree, Gen, Kind};
use eala_twist::scalars::{rat, Laurent};
use eala_twist::uea::UElt;
use eala_twist_cli::expr::parse_elt;
use eala_twist_cli::run;
use proptest::prelude::*;

fn cli(args: &[&str]) -> eala_twist_cli::Output {
    run(std::iter::once("eala-twist").chain(args.iter().copied()))
}

#[test]
fn bracket_of_opposite_degrees() {
    let out = cli(&["bracket", "e[1,2]", "f[-1,-2]"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "q^-2*d\n");
}

#[test]
fn coproduct_of_e_for_the_e_case() {
    let out = cli(&["delta", "--case", "e", "--n", "0,1", "--x", "0,1", "--order", "2", "e[0,1]"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "e[0,1]⊗1 + 1⊗e[0,1] - (e[0,1]⊗e[0,1]) t\n");
}

#[test]
fn usage_errors_exit_with_two() {
    let truncated = cli(&["nf", "e[1,"]);
    assert_eq!(truncated.code, 2);
    assert!(truncated.stderr.contains("at byte 4"), "{}", truncated.stderr);
    assert!(truncated.stderr.contains("expected integer or `-`"));

    let unnormalized = cli(&["delta", "--case", "g", "--n", "1,1", "--x", "1,1", "d"]);
    assert_eq!(unnormalized.code, 2);
    assert!(unnormalized.stderr.contains("x1*n1 + x2*n2 = 2"), "{}", unnormalized.stderr);

    let x_with_d = cli(&["delta", "--case", "d", "--n", "1,1", "--x", "1,0", "d"]);
    assert_eq!(x_with_d.code, 2);

    let zero_g = cli(&["nf", "g[0,0]"]);
    assert_eq!(zero_g.code, 2);
    assert!(zero_g.stderr.contains("no degree-zero element"));

    assert_eq!(cli(&["check", "--suite", "no-such-suite"]).code, 2);
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["delta", "--n", "1,1", "d"]).code, 2);
}

#[test]
fn help_is_not_an_error() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("delta"));
}

#[test]
fn check_runs_a_suite_and_reports() {
    let out = cli(&["check", "--suite", "cocycle", "--suite", "closed-form-d", "--grid", "quick", "--order", "2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("cocycle"));
    assert!(out.stdout.contains("printed-formula discrepancies"));

    let json = cli(&["--format", "json", "check", "--suite", "noncocommutative", "--grid", "quick"]);
    assert_eq!(json.code, 0);
    let lines: Vec<serde_json::Value> = json.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let (last, results) = lines.split_last().unwrap();
    assert_eq!(last["summary"]["fail"], 0);
    assert_eq!(results.len(), 12);
    assert!(results.iter().all(|r| r["verdict"] == "pass" && r["suite"] == "noncocommutative"));

    let listing = cli(&["check", "--list"]);
    assert_eq!(listing.stdout.lines().count(), 24);
}

fn golden(name: &str, args: &[&str]) {
    let path = format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let want = std::fs::read_to_string(&path).unwrap();
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = cli(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, want, "{name} drifted from {path}");
}

#[test]
fn json_output_matches_golden_files() {
    golden("delta_e", &["delta", "--case", "e", "--n", "0,1", "--x", "0,1", "--order", "2", "e[0,1]"]);
    golden("antipode_g", &["antipode", "--case", "g", "--n", "1,1", "--order", "2", "f[1,0]"]);
    golden("nf", &["nf", "f[0,1]*e[0,-1]"]);
    golden("bracket", &["bracket", "e[1,2]", "f[-1,-2]"]);
    golden("twist_df", &["twist", "--case", "df", "--n", "0,1", "--order", "2"]);
}

#[test]
fn rendered_series_coefficients_parse_back() {
    let out = cli(&["--format", "json", "antipode", "--case", "f", "--n", "2,-1", "--order", "2", "e[1,1]"]);
    let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    for c in v["series"]["coefficients"].as_array().unwrap() {
        let text = c["text"].as_str().unwrap();
        assert_eq!(parse_elt(text).unwrap().to_string(), text);
    }
}

fn gen() -> impl Strategy<Value = Gen> {
    let graded = (0usize..4, -3i64..=3, -3i64..=3).prop_filter_map("no g_0, h_0", |(k, a, b)| {
        Gen::try_new([Kind::E, Kind::F, Kind::G, Kind::H][k], Degree(a, b))
    });
    prop_oneof![Just(Gen::D), Just(Gen::D1), Just(Gen::D2), graded]
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i64..=4, 1i64..=3, -3i64..=3), 1..3).prop_map(|terms| {
        terms.into_iter().fold(Laurent::zero(), |acc, (p, d, k)| &acc + &Laurent::monomial(rat(p, d), k))
    })
}

fn elt() -> impl Strategy<Value = UElt> {
    prop::collection::vec((laurent(), prop::collection::vec(gen(), 0..4)), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(UElt::zero(), |acc, (c, gens)| &acc + &gens.into_iter().fold(UElt::scalar(c), |x, g| x.mul_gen(g)))
    })
}

proptest! {
    #[test]
    fn parse_inverts_render(x in elt()) {
        let text = x.to_string();
        let back = parse_elt(&text).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn commutator_is_antisymmetric(a in gen(), b in gen()) {
        let ab = cli(&["bracket", &a.to_string(), &b.to_string()]).stdout;
        let ba = cli(&["bracket", &b.to_string(), &a.to_string()]).stdout;
        let lhs = parse_elt(ab.trim()).unwrap();
        let rhs = parse_elt(ba.trim()).unwrap();
        prop_assert_eq!(&lhs + &rhs, UElt::zero());
    }
}
