use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn cpfs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpfs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn solve_bundled(extra: &[&str]) -> Output {
    let input = data("case_study.json");
    let mut args = vec!["solve", "--input", input.to_str().unwrap()];
    args.extend_from_slice(extra);
    cpfs(&args)
}

fn line<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key))
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{out}"))
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn solve_cpwa_q_ranking() {
    let o = solve_bundled(&[]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(line(&out, "operator: "), "cpwa_q");
    assert_eq!(line(&out, "ranking: "), "A1 < A4 < A3 < A2 < A5");
    assert_eq!(line(&out, "best: "), "A5");
}

#[test]
fn solve_geometric_best_alternative() {
    let o = solve_bundled(&["--operator", "cpwg_p"]);
    assert!(o.status.success());
    assert_eq!(line(&stdout(&o), "best: "), "A2");

    let o = solve_bundled(&["--operator", "cpwg_q"]);
    assert!(o.status.success());
    let expected = library_best(cpfs::Operator::CPWG_Q);
    assert_eq!(line(&stdout(&o), "best: "), expected);
}

fn library_best(op: cpfs::Operator) -> String {
    let doc: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(data("case_study.json")).unwrap()).unwrap();
    let strings = |key: &str| -> Vec<String> {
        doc[key]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_owned())
            .collect()
    };
    let weights = doc["weights"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    let experts = doc["experts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| {
            m.as_array()
                .unwrap()
                .iter()
                .map(|row| {
                    row.as_array()
                        .unwrap()
                        .iter()
                        .map(|c| {
                            cpfs::Pfv::new(c[0].as_f64().unwrap(), c[1].as_f64().unwrap()).unwrap()
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let problem = cpfs::DecisionProblem::new(
        strings("alternatives"),
        strings("criteria"),
        strings("polarity")
            .iter()
            .map(|p| p.parse().unwrap())
            .collect(),
        cpfs::WeightVector::new(weights).unwrap(),
        experts,
    )
    .unwrap();
    let solution = cpfs::mcdm::solve(&problem, &op.aggregator()).unwrap();
    solution.ranking.best().unwrap().label.clone()
}

#[test]
fn solve_writes_every_table() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("tables");
    let o = solve_bundled(&["--out-dir", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let read = |name: &str| fs::read_to_string(out.join(name)).unwrap();
    let headers = [
        ("normalized.csv", "expert,alternative,criterion,mu,nu"),
        ("centers.csv", "alternative,criterion,mu,nu"),
        ("radii.csv", "alternative,C1,C2,C3,C4,C5"),
        ("circular.csv", "alternative,criterion,mu,nu,r"),
        ("aggregated.csv", "alternative,mu,nu,r"),
        ("similarity.csv", "alternative,score,rank,tied"),
    ];
    for (name, header) in headers {
        assert_eq!(read(name).lines().next(), Some(header), "{name}");
    }
    assert_eq!(read("normalized.csv").lines().count(), 1 + 3 * 5 * 5);
    // cost criterion C1 is complemented: E1 rated A1 ⟨0.8, 0.4⟩
    assert!(read("normalized.csv").contains("E1,A1,C1,0.40,0.80\n"));
    assert!(read("circular.csv").contains("A1,C1,0.45,0.83,0.16\n"));
    assert!(read("aggregated.csv").contains("A2,0.78,0.32,0.00\n"));
    assert_eq!(read("ranking.txt"), "A1 < A4 < A3 < A2 < A5\n");

    let doc: serde_json::Value = serde_json::from_str(&read("result.json")).unwrap();
    assert_eq!(doc["operator"], "cpwa_q");
    assert_eq!(doc["best"], "A5");
    assert_eq!(doc["circular"].as_array().unwrap().len(), 5);

    // the normalized problem is itself a valid input
    let o = cpfs(&[
        "validate",
        "--input",
        out.join("normalized.json").to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
}

#[test]
fn normalizing_twice_restores_the_input() {
    let dir = TempDir::new().unwrap();
    let once = dir.path().join("once");
    let twice = dir.path().join("twice");
    assert!(solve_bundled(&["--out-dir", once.to_str().unwrap()])
        .status
        .success());
    let o = cpfs(&[
        "solve",
        "--input",
        once.join("normalized.json").to_str().unwrap(),
        "--out-dir",
        twice.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let original: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(data("case_study.json")).unwrap()).unwrap();
    let restored: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(twice.join("normalized.json")).unwrap()).unwrap();
    assert_eq!(original, restored);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for d in [&a, &b] {
        assert!(
            solve_bundled(&["--operator", "cpwg_p", "--out-dir", d.to_str().unwrap()])
                .status
                .success()
        );
    }
    let mut names: Vec<_> = fs::read_dir(&a)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    assert_eq!(names.len(), 9);
    for name in names {
        assert_eq!(
            fs::read(a.join(&name)).unwrap(),
            fs::read(b.join(&name)).unwrap(),
            "{name:?}"
        );
    }
}

#[test]
fn config_and_flag_precedence() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "cfg.json",
        r#"{"operator": "cpwg_p", "precision": 3}"#,
    );
    let o = solve_bundled(&["--config", cfg.to_str().unwrap()]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(line(&out, "operator: "), "cpwg_p");
    assert_eq!(line(&out, "A2: ").len(), "0.527".len());

    let o = solve_bundled(&[
        "--config",
        cfg.to_str().unwrap(),
        "--operator",
        "cpwa_p",
        "--precision",
        "1",
    ]);
    let out = stdout(&o);
    assert_eq!(line(&out, "operator: "), "cpwa_p");
    assert_eq!(line(&out, "A5: "), "0.6");

    let o = solve_bundled(&["--config", data("config.json").to_str().unwrap()]);
    assert_eq!(line(&stdout(&o), "operator: "), "cpwa_q");
}

#[test]
fn bad_weights_name_the_field() {
    let dir = TempDir::new().unwrap();
    let text = fs::read_to_string(data("case_study.json"))
        .unwrap()
        .replace("[0.2, 0.4, 0.1, 0.1, 0.2]", "[0.2, 0.3, 0.1, 0.1, 0.2]");
    let input = write(&dir, "bad.json", &text);
    for cmd in ["solve", "validate"] {
        let o = cpfs(&[cmd, "--input", input.to_str().unwrap()]);
        assert!(!o.status.success());
        let err = stderr(&o);
        assert!(err.contains("weights:"), "{err}");
        assert!(err.contains("bad.json"), "{err}");
    }
}

#[test]
fn invalid_cell_names_its_position() {
    let dir = TempDir::new().unwrap();
    let text = fs::read_to_string(data("case_study.json"))
        .unwrap()
        .replacen("[0.5, 0.7]", "[0.9, 0.7]", 1);
    let input = write(&dir, "cell.json", &text);
    let o = cpfs(&["validate", "--input", input.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("experts[0][1][0]"), "{}", stderr(&o));
}

#[test]
fn syntax_errors_report_line_and_column() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "broken.json",
        "{\n  \"alternatives\": [\"A1\",\n  oops\n}\n",
    );
    let o = cpfs(&["solve", "--input", input.to_str().unwrap()]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("line 3 column"), "{err}");
}

#[test]
fn bad_config_is_rejected() {
    let dir = TempDir::new().unwrap();
    let cfg = write(
        &dir,
        "cfg.json",
        r#"{"operator": "cpwa_q", "radius_generator": "algebraic_p"}"#,
    );
    let o = solve_bundled(&["--config", cfg.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("radius_generator"), "{}", stderr(&o));
    assert!(!solve_bundled(&["--operator", "owa"]).status.success());
}

#[test]
fn validate_bundled_input() {
    let o = cpfs(&[
        "validate",
        "--input",
        data("case_study.json").to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ok: 5 alternatives, 5 criteria, 3 experts\n");
}

#[test]
fn fuse_example_collections() {
    let o = cpfs(&[
        "fuse",
        "--input",
        data("collections.json").to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o),
        "collection,mu,nu,r\n1,0.41,0.73,0.13\n2,0.16,0.46,0.17\n3,0.80,0.32,0.20\n"
    );
}

#[test]
fn fuse_edge_cases() {
    let dir = TempDir::new().unwrap();
    let single = write(&dir, "single.json", "[[[0.35, 0.72]]]");
    let o = cpfs(&["fuse", "--input", single.to_str().unwrap()]);
    assert_eq!(stdout(&o), "collection,mu,nu,r\n1,0.35,0.72,0.00\n");

    let empty = write(&dir, "empty.json", "[[[0.3, 0.4]], []]");
    let o = cpfs(&["fuse", "--input", empty.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(
        stderr(&o).contains("[1]: empty collection"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn complexity_counts() {
    let count = |args: &[&str]| {
        let mut all = vec!["complexity"];
        all.extend_from_slice(args);
        let o = cpfs(&all);
        assert!(o.status.success(), "{}", stderr(&o));
        stdout(&o).trim().to_owned()
    };
    assert_eq!(count(&["5", "5", "3"]), "1380");
    assert_eq!(count(&["5", "5", "3", "--operator", "cpwg_p"]), "1440");
    assert_eq!(count(&["2", "2", "1"]), "156");

    let o = cpfs(&["complexity", "1", "5", "3"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("at least 2 criteria"), "{}", stderr(&o));
}

#[test]
fn complexity_sweep_grid() {
    let o = cpfs(&["complexity", "10", "10", "3", "--sweep"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,n,m,count"));
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 9 * 9 * 3);
    assert_eq!(rows[0], vec![2, 2, 1, 156]);
    assert!(rows.iter().all(|r| r[3] >= 156));
}
