use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sortlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sortlab"))
        .args(args)
        .output()
        .expect("spawn sortlab")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_one_file_per_case() {
    let dir = tempfile::tempdir().unwrap();
    let out = sortlab(&[
        "gen",
        "--sizes",
        "500",
        "--seed",
        "42",
        "--cases",
        "average,best,worst",
        "--out-dir",
        path(dir.path()),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 3);
    for case in ["average", "best", "worst"] {
        let text = fs::read_to_string(dir.path().join(format!("{case}-500.txt"))).unwrap();
        assert_eq!(
            text.lines().next().unwrap(),
            format!("# rahmani-dataset v1 case={case} size=500 seed=42 range=2147483647")
        );
        assert_eq!(text.lines().count(), 501);
    }
}

#[test]
fn gen_size_zero_and_bad_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = sortlab(&[
        "gen",
        "--sizes",
        "0",
        "--cases",
        "half_sorted",
        "--out-dir",
        path(dir.path()),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(dir.path().join("half_sorted-0.txt")).unwrap();
    assert_eq!(
        text,
        "# rahmani-dataset v1 case=half_sorted size=0 seed=42 range=2147483647\n"
    );

    assert_eq!(code(&sortlab(&["gen", "--sizes", "-5"])), 2);
    assert_eq!(code(&sortlab(&["gen", "--seed", "x"])), 2);
    assert_eq!(
        code(&sortlab(&[
            "gen",
            "--range",
            "0",
            "--sizes",
            "1",
            "--out-dir",
            path(dir.path())
        ])),
        2
    );
    assert_eq!(code(&sortlab(&["gen", "--bogus"])), 2);
}

#[test]
fn gen_defaults_to_protocol_sizes() {
    let help = stdout(&sortlab(&["gen", "--help"]));
    assert!(
        help.contains("[default: 500 2500 5000 50000 100000 625000 1250000 2500000]"),
        "{help}"
    );
}

#[test]
fn bench_then_plot() {
    let dir = tempfile::tempdir().unwrap();
    let out = sortlab(&[
        "bench",
        "--sizes",
        "300",
        "--trials",
        "10",
        "--algorithms",
        "rahmani-faithful",
        "--cases",
        "worst",
        "--out-dir",
        path(dir.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let raw = fs::read_to_string(dir.path().join("raw.csv")).unwrap();
    assert_eq!(raw.lines().count(), 11);
    assert!(raw.starts_with(
        "algorithm,case,size,trial,elapsed_ns,key_comparisons,element_moves,isearch_calls,isearch_probes,early_continues\n"
    ));
    let summary = dir.path().join("summary.csv");
    assert!(fs::read_to_string(&summary)
        .unwrap()
        .starts_with("algorithm,case,size,min_ns,median_ns,mean_ns,max_ns\n"));
    let config = fs::read_to_string(dir.path().join("config.txt")).unwrap();
    assert!(config.contains("warmups=2"));

    let svg_path = dir.path().join("worst.svg");
    let out = sortlab(&[
        "plot",
        "--summary",
        path(&summary),
        "--case",
        "worst",
        "--out",
        path(&svg_path),
    ]);
    assert_eq!(code(&out), 0);
    let svg = fs::read_to_string(&svg_path).unwrap();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("polyline")).count(), 1);
    assert!(!svg.contains("href"));

    let out = sortlab(&[
        "plot",
        "--summary",
        path(&summary),
        "--case",
        "best",
        "--out",
        path(&svg_path),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn plot_rejects_empty_summary() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("s.csv");
    fs::write(&summary, "algorithm,case,size,min_ns,median_ns,mean_ns,max_ns\n").unwrap();
    let out = sortlab(&[
        "plot",
        "--summary",
        path(&summary),
        "--case",
        "average",
        "--out",
        path(&dir.path().join("x.svg")),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bench_usage_errors() {
    assert_eq!(code(&sortlab(&["bench", "--algorithms", "heap"])), 2);
    assert_eq!(code(&sortlab(&["bench", "--trials", "0"])), 2);
    assert_eq!(code(&sortlab(&["bench", "--paper-exact", "--trials", "3"])), 2);
}

#[test]
fn paper_exact_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let out = sortlab(&[
        "bench",
        "--paper-exact",
        "--algorithms",
        "quick",
        "--cases",
        "best",
        "--out-dir",
        path(dir.path()),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(dir.path().join("config.txt")).unwrap();
    assert!(text.contains("trials=10\n"));
    assert!(text.contains("warmups=0\n"));
    assert!(text.contains("paper_exact=true\n"));
    assert!(text.contains("sizes=500,2500,5000,50000,100000,625000,1250000,2500000\n"));
    let raw = fs::read_to_string(dir.path().join("raw.csv")).unwrap();
    assert_eq!(raw.lines().count(), 1 + 8 * 10);
}

#[test]
fn verify_outcomes() {
    let out = sortlab(&["verify", "--samples", "100", "--max-size", "300"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rahmani-faithful: not stable"));
    assert!(!text.contains("FAIL"));

    let out = sortlab(&["verify", "--samples", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS faithful-witness"));

    let out = sortlab(&["verify", "--samples", "20", "--max-size", "50", "--inject-fault"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("counterexample: bubble"));
}

#[test]
fn model_rows() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("model.csv");
    let out = sortlab(&[
        "model",
        "--sizes",
        "100,1",
        "--cases",
        "worst,best",
        "--out",
        path(&csv),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.contains("rahmani-faithful,worst,100,S10,shifts,4950,4950,exact"));
    assert!(text.contains("rahmani-faithful,best,100,S12,placements,0,0,exact"));
    assert!(text.contains("insertion,worst,100,S5,shifts,4950,4950,exact"));
    for line in text.lines().filter(|l| l.contains(",1,S")) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!((cols[5], cols[6]), ("0", "0"), "{line}");
    }
    assert_eq!(code(&sortlab(&["model", "--cases", "typical"])), 2);
}
