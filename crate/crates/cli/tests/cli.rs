use gapsum_cli::{parse_poly, run, EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE};
use gapsum_core::{membership, rat, MembershipReport, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gapsum").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn random_poly(rng: &mut ChaCha8Rng) -> Polynomial {
    let degree = rng.gen_range(0..=8);
    let coeffs = (0..=degree)
        .map(|_| rat(rng.gen_range(-40..=40), rng.gen_range(1..=9)))
        .collect();
    Polynomial::from_coeffs(coeffs)
}

#[test]
fn print_then_parse_is_a_fixed_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a70);
    for _ in 0..100 {
        let p = random_poly(&mut rng);
        let printed = p.to_string();
        let reparsed = parse_poly(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
        assert_eq!(reparsed, p, "{printed}");
        assert_eq!(reparsed.to_string(), printed);
    }
}

#[test]
fn factored_output_parses_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..40 {
        let p = random_poly(&mut rng);
        let text = p.to_string();
        let (code, out, _) = call(&["--factored", "decompose", "-d", "1", "-P", &text]);
        assert_eq!(code, EXIT_OK);
        let q_line = out.lines().find(|l| l.starts_with("Q = ")).unwrap();
        assert_eq!(parse_poly(&q_line[4..]).unwrap(), p, "{q_line}");
    }
}

#[test]
fn json_membership_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..30 {
        let p = random_poly(&mut rng);
        let d = rng.gen_range(1..=4u32);
        let text = p.to_string();
        let ds = d.to_string();
        let (code, out, _) = call(&["--json", "member", "-d", &ds, "-P", &text]);
        let expected = membership(&p, d).unwrap();
        assert_eq!(
            code,
            if expected.member {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            }
        );
        let decoded: MembershipReport = serde_json::from_str(&out).unwrap();
        assert_eq!(decoded, expected);
    }
}

#[test]
fn classic_examples_through_the_cli() {
    let (code, out, _) = call(&["member", "-d", "2", "-P", "X^2", "--witness"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("member=true"));
    assert!(out.contains("S = 1/6*X^3 + 1/2*X^2 + 1/3*X"));
    assert!(out.contains("coordinates = [-2/3, 1/3]"));

    let (code, out, _) = call(&["member", "-d", "2", "-P", "X"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("member=false"));

    let (code, out, _) = call(&["sum", "-d", "2", "-n", "5", "-P", "X"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "9");

    let (code, out, _) = call(&["decompose", "-d", "2", "-P", "X^3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("R = 1/4"));

    let (code, out, _) = call(&["--factored", "banna", "-d", "3", "-P", "3*X^2+3*X+2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("alpha = (X + 1)*(X + 2)"), "{out}");

    let (code, out, _) = call(&["basis", "-d", "2", "-k", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("e_2 = 4*X^3 + 9*X^2 + 10*X + 4"));

    let (code, out, _) = call(&["verify", "-d", "3", "-P", "X^3 + X", "-n", "90"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("OK"));
}

#[test]
fn general_membership() {
    let (code, out, _) = call(&["member", "--general", "-D", "1+X", "-P", "X^2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("quotient = X"));
    let (code, out, _) = call(&["member", "--general", "-D", "1+X", "-P", "X"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert!(out.contains("remainder = "));
    let (code, _, err) = call(&["member", "--general", "-D", "1-X", "-P", "X"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("D must not vanish at 1"));
}

#[test]
fn usage_and_parse_errors() {
    let (code, _, err) = call(&["member", "-d", "2", "-P", "2X"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
    assert_eq!(call(&["member", "-d", "2", "-P", "X^-1"]).0, EXIT_USAGE);
    assert_eq!(call(&["member", "-d", "2", "-P", "X^(1/2)"]).0, EXIT_USAGE);
    assert_eq!(call(&["member", "-d", "0", "-P", "X"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["member", "-P", "X"]).0, EXIT_USAGE);
    assert_eq!(call(&["banna", "-d", "2", "-P", "X"]).0, EXIT_NEGATIVE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn exit_codes_are_distinct() {
    let codes = [EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL];
    assert_eq!(codes, [0, 1, 2, 3]);
}

#[test]
fn tables() {
    let (code, out, _) = call(&["genocchi", "-n", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("G_8 = 17"), "{out}");
    let (code, out, _) = call(&["--json", "bernoulli", "-n", "4"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["first_index"], 0);
    assert_eq!(v.as_object().unwrap().len(), 2);
}
