use std::process::Command;

use lpm_cli::run;

fn lpm(args: &[&str]) -> lpm_cli::Output {
    run(std::iter::once("lpm").chain(args.iter().copied()))
}

const WORKED: &str = "P=EEEEENNNNENEN\nQ=NNNNNEEENEEEE\n";

#[test]
fn info_first_line() {
    let out = lpm(&["info", "EENN/NNEE"]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout.lines().next(),
        Some("m=2 r=2 square-width=2 bases=6")
    );
    let inline = lpm(&["info", "--p", "EENN", "--q", "NNEE"]);
    assert_eq!(inline, out);
}

#[test]
fn pull_prints_both_halves() {
    let out = lpm(&["pull", "--at", "7", WORKED]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(
        out.stdout
            .contains("# top\nP=EEENNENEN\nQ=NNNENEEEE\noffset=5\n"),
        "{}",
        out.stdout
    );
}

#[test]
fn pull_then_glue_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("input.txt");
    let text = "P=EENENNEN\nQ=NNEENENE\noffset=3\n";
    std::fs::write(&input, text).unwrap();
    let input = input.to_str().unwrap();
    let canon = lpm(&["squares", "--json", input]);
    let v: serde_json::Value = serde_json::from_str(&canon.stdout).unwrap();
    let list = v["squares"].as_array().unwrap();
    assert!(!list.is_empty());
    for s in list {
        let (i, k) = (s["i"].to_string(), s["k"].to_string());
        let bottom = dir.path().join(format!("b{i}.txt"));
        let top = dir.path().join(format!("t{i}.txt"));
        let (b, t) = (bottom.to_str().unwrap(), top.to_str().unwrap());
        let out = lpm(&["pull", "--at", &i, input, "--bottom", b, "--top", t]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "");
        let glued = lpm(&["glue", "--k", &k, b, t]);
        assert_eq!(glued.code, 0, "{}", glued.stderr);
        assert_eq!(glued.stdout, text);
    }
}

#[test]
fn branch_width_of_u24() {
    let out = lpm(&[
        "branch-width",
        r#"{"n":4,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#,
    ]);
    assert_eq!(out.stdout, "3\n");
}

#[test]
fn gen_round_trips_through_branch_width() {
    let gen = lpm(&["gen", "--family", "F", "--n", "4"]);
    assert_eq!(gen.code, 0);
    assert!(gen.stdout.starts_with(r#"{"n":6,"#));
    let bw = lpm(&["branch-width", gen.stdout.trim()]);
    assert_eq!(bw.code, 0, "{}", bw.stderr);
    assert_eq!(lpm(&["gen", "--family", "F", "--n", "3"]).code, 1);
    assert_eq!(lpm(&["gen", "--family", "X", "--n", "3"]).code, 2);
}

#[test]
fn minor_search_and_edits() {
    assert_eq!(lpm(&["is-minor", "ENN/NNE", "EENN/NNEE"]).stdout, "D 1\n");
    assert_eq!(lpm(&["is-minor", "EENN/NNEE", "ENN/NNE"]).stdout, "none\n");
    assert_eq!(
        lpm(&["delete", "--x", "2", "EENN/NNEE"]).stdout,
        "P=ENN\nQ=NNE\n"
    );
    assert_eq!(
        lpm(&["contract", "--x", "2", "EENN/NNEE"]).stdout,
        "P=EEN\nQ=NEE\n"
    );
    assert_eq!(
        lpm(&["apply", "--witness", "D 2;C 1", "EENN/NNEE"]).stdout,
        "P=EN\nQ=NE\n"
    );
    assert_eq!(lpm(&["dual", "EEN/NEE"]).stdout, "P=ENN\nQ=NNE\n");
    assert_eq!(lpm(&["sum", "EN/NE", "E/E"]).stdout, "P=ENE\nQ=NEE\n");
    assert_eq!(lpm(&["delete", "--x", "9", "EENN/NNEE"]).code, 1);
}

#[test]
fn uniform_minor_lands_on_the_square() {
    let out = lpm(&["--json", "uniform-minor", "--k", "3", WORKED]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["lower"], "EEENNN");
    assert_eq!(v["result"]["upper"], "NNNEEE");
    assert_eq!(v["witness"].as_array().unwrap().len(), 7);
    assert_eq!(lpm(&["uniform-minor", "--k", "6", WORKED]).code, 1);
}

#[test]
fn bases_listing() {
    let out = lpm(&["bases", "--cap", "2", "EEENNN/ENENEN"]);
    assert_eq!(out.stdout, "count=5\n2 4 6\n2 5 6\n");
}

#[test]
fn antichain_report() {
    let out = lpm(&["antichain", "EN/EN", "ENE/ENE", "EENE/ENEE"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("longest-chain\t3\t1 2 3\n"));
    assert!(out.stdout.contains("max-antichain\t1\t"));
}

#[test]
fn evidence_is_stable() {
    let a = lpm(&[
        "evidence",
        "--samples",
        "2",
        "--sample-size",
        "10",
        "--seed",
        "7",
    ]);
    let b = lpm(&[
        "evidence",
        "--samples",
        "2",
        "--sample-size",
        "10",
        "--seed",
        "7",
    ]);
    assert_eq!(a.code, 0);
    assert_eq!(a, b);
    assert_eq!(
        a.stdout.lines().next(),
        Some("sample\tsize\tsquare-width\tmax-antichain\tlongest-chain")
    );
}

#[test]
fn render_draws_both_paths() {
    let out = lpm(&["render", "EN/EN"]);
    assert_eq!(out.stdout, ". +\n  #\n+#+\n");
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(lpm(&["frobnicate"]).code, 2);
    assert_eq!(lpm(&["info"]).code, 2);
    assert_eq!(lpm(&["info", "EXN/NNE"]).code, 2);
    let dom = lpm(&["info", "NE/EN"]);
    assert_eq!(dom.code, 1);
    assert!(dom.stderr.contains("dominance"));
    assert_eq!(lpm(&["glue", "--k", "1", "EN/EN", "EN/EN"]).code, 1);
    assert_eq!(lpm(&["pull", "--at", "1", "EN/EN"]).code, 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lpm");
    let ok = Command::new(bin)
        .args(["info", "EENN/NNEE"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("m=2 r=2 square-width=2 bases=6\n"));
    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    assert!(!usage.stderr.is_empty());
    let domain = Command::new(bin)
        .args(["pull", "--at", "1", "EN/EN"])
        .output()
        .unwrap();
    assert_eq!(domain.status.code(), Some(1));
}
