mod common;

use common::*;
use hopfkit::cli::{builtin, run_args, Outcome, EXIT_CERTIFICATE, EXIT_INPUT, EXIT_OK};
use hopfkit::format::{parse, parse_file_struct, parse_str, serialize, AlgebraFile};
use hopfkit::hopf::{group_algebra, Group};
use hopfkit::Error;
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_args(std::iter::once("hopfkit").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn file_format_round_trip() {
    for h in builtins() {
        let text = serialize(&h);
        let back = parse_str(&text).unwrap();
        assert_eq!(&back, h.as_ref(), "{}", h.name());
        assert_eq!(serialize(&back), text);
        assert_eq!(AlgebraFile::from_algebra(&back).digest(), AlgebraFile::from_algebra(&h).digest());
    }
}

#[test]
fn shipped_files_match_builtins() {
    for (file, spec) in [("sweedler_h4.json", "sweedler"), ("group_algebra_s3.json", "group-algebra:S3"), ("taft3.json", "taft:n=3")] {
        let h = parse(std::path::Path::new(&data(file))).unwrap();
        assert_eq!(h, builtin(spec).unwrap(), "{file}");
    }
}

#[test]
fn parse_errors_carry_locations() {
    let base = AlgebraFile::from_algebra(&group_algebra(&Group::cyclic(2).unwrap(), &q()));

    let mut f = base.clone();
    f.mult.push((0, 5, 1, "1".into()));
    match f.to_algebra() {
        Err(Error::IndexOutOfRange { what, index: 5, dim: 2 }) => assert_eq!(what, format!("mult[{}]", f.mult.len() - 1)),
        other => panic!("{other:?}"),
    }
    let mut f = base.clone();
    f.comult[0].3 = "1/".into();
    match f.to_algebra() {
        Err(Error::Parse { location, .. }) => assert_eq!(location, "comult[0]"),
        other => panic!("{other:?}"),
    }
    let mut f = base.clone();
    f.unit.pop();
    assert!(matches!(f.to_algebra(), Err(Error::Parse { location, .. }) if location == "unit"));
    let mut f = base.clone();
    f.field = "R".into();
    assert!(matches!(f.to_algebra(), Err(Error::Parse { location, .. }) if location == "field"));

    match parse_file_struct("{\n  \"field\": \"Q\",\n  \"dim\": ,\n}") {
        Err(Error::Parse { location, .. }) => assert_eq!(location, "line 3 column 10"),
        other => panic!("{other:?}"),
    }
    assert!(parse_file_struct(r#"{"field":"Q","dim":1,"unit":["1"],"counit":["1"],"extra":1}"#).is_err());
}

#[test]
fn exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();

    assert_eq!(run(&["verify", "--file", &data("sweedler_h4.json")]).code, EXIT_OK);

    let mut f = AlgebraFile::from_algebra(&group_algebra(&Group::cyclic(3).unwrap(), &q()));
    f.antipode = (0..3).map(|i| (i, i, "1".into())).collect();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, f.to_json()).unwrap();
    let out = run(&["verify", "--file", bad.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_CERTIFICATE);
    assert!(out.stdout.contains("FAIL antipode at [1]"), "{}", out.stdout);
    // later stages are skipped when the axioms fail
    let out = run(&["hopf-center", "--file", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.code, EXIT_CERTIFICATE);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["results"].as_object().unwrap().is_empty());

    let malformed = dir.path().join("malformed.json");
    std::fs::write(&malformed, "[1, 2").unwrap();
    let out = run(&["verify", "--file", malformed.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT);
    assert!(out.stderr.contains("line 1"), "{}", out.stderr);

    assert_eq!(run(&["verify", "--file", "/nonexistent/file.json"]).code, EXIT_INPUT);
    assert_eq!(run(&["verify"]).code, EXIT_INPUT);
    assert_eq!(run(&["verify", "--builtin", "taft"]).code, EXIT_INPUT);
    assert_eq!(run(&["verify", "--builtin", "taft:n=3,colour=red"]).code, EXIT_INPUT);
    assert_eq!(run(&["verify", "--builtin", "group-algebra:A5"]).code, EXIT_INPUT);
    assert_eq!(run(&["frobnicate"]).code, EXIT_INPUT);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
    assert_eq!(run(&["--version"]).code, EXIT_OK);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["sequence", "--kind", "central", "--builtin", "group-algebra:D4", "--format", "json"],
        vec!["cocenter", "--builtin", "function-algebra:Q8", "--format", "json"],
        vec!["verify", "--builtin", "sweedler", "--seed", "42", "--format", "json"],
        vec!["hopf-center", "--builtin", "taft:n=3", "--format", "json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a, b);
        assert_eq!(a.code, EXIT_OK);
    }
    let a = run(&["verify", "--builtin", "sweedler", "--seed", "1", "--format", "json"]);
    let b = run(&["verify", "--builtin", "sweedler", "--seed", "2", "--format", "json"]);
    assert_ne!(a.stdout, b.stdout);
    let text = run(&["verify", "--builtin", "sweedler"]).stdout;
    assert!(text.lines().last().unwrap().starts_with("elapsed "));
}

#[test]
fn command_results() {
    let v = json(&["hopf-center", "--builtin", "group-algebra:Q8"]);
    assert_eq!(v["results"]["hopf_center"]["dim"], 2);
    assert_eq!(v["results"]["center_dim"], 5);
    assert_eq!(v["input"]["dim"], 8);

    let v = json(&["cocenter", "--builtin", "sweedler"]);
    assert_eq!(v["results"]["cocenter_dim"], 1);
    assert_eq!(v["results"]["kernel"]["dim"], 3);

    let v = json(&["center", "--builtin", "group-algebra:S3"]);
    assert_eq!(v["results"]["center"]["dim"], 3);

    let v = json(&["sequence", "--builtin", "group-algebra:Q8"]);
    assert_eq!(v["results"]["dims"], serde_json::json!({"C": 2, "A": 8, "B": 4}));
    assert_eq!(v["results"]["freeness"]["rank"], 4);

    let v = json(&["sequence", "--kind", "cocentral", "--builtin", "function-algebra:D4"]);
    assert_eq!(v["results"]["dims"], serde_json::json!({"C": 4, "A": 8, "B": 2}));
    assert_eq!(v["results"]["d_equals_hopf_kernel"], true);

    let v = json(&["dual", "--builtin", "group-algebra:S3"]);
    let dual: AlgebraFile = serde_json::from_value(v["results"]["algebra"].clone()).unwrap();
    assert!(dual.to_algebra().unwrap().is_commutative());

    let v = json(&["twist", "--builtin", "sweedler", "--u", "1,0,1,0"]);
    assert_eq!(v["passed"], true);
    let tw: AlgebraFile = serde_json::from_value(v["results"]["algebra"].clone()).unwrap();
    assert_eq!(tw.to_algebra().unwrap(), builtin("sweedler-twist").unwrap());
    assert_eq!(run(&["twist", "--builtin", "sweedler", "--u", "1,0"]).code, EXIT_INPUT);

    let v = json(&["freeness", "--over", "hopf-kernel", "--builtin", "function-algebra:Q8"]);
    assert_eq!(v["results"]["freeness"]["rank"], 2);
    let out = run(&["freeness", "--builtin", "group-algebra:D4", "--budget", "1", "--format", "json"]);
    assert_eq!(out.code, EXIT_CERTIFICATE);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["results"]["freeness"]["status"], "budget");
}

#[test]
fn builtin_names() {
    for spec in [
        "trivial",
        "group-algebra:Z4",
        "group-algebra:group=S3,field=F_7",
        "function-algebra:Klein",
        "h4",
        "sweedler:field=Q(zeta_4)",
        "sweedler-twist",
        "taft:n=4,k=3",
        "uq-sl2:p=3",
    ] {
        let h = builtin(spec).unwrap_or_else(|e| panic!("{spec}: {e}"));
        assert!(hopfkit::hopf::verify_axioms(&h).all_passed(), "{spec}");
    }
    assert_eq!(builtin("group-algebra:group=S3,field=F_7").unwrap().field().to_string(), "F_7");
}
