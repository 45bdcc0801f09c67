use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eigclust::generate::{gen_circles, gen_squares};
use eigclust::{
    cluster_delaunay, cluster_naive, ArithmeticMode, DelaunayOptions, DsuKind, Spectrum64,
};
use tempfile::TempDir;

fn eigclust(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigclust"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn labels(o: &Output) -> Vec<usize> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect()
}

const EXAMPLE: &str = "1,0\n1.25,0\n2,0\n2.25,0\n";

#[test]
fn worked_example_every_algorithm() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "a.csv", EXAMPLE);
    for algorithm in ["naive", "real", "delaunay"] {
        let o = eigclust(&[
            "cluster",
            s(&input),
            "--delta",
            "0.25",
            "--algorithm",
            algorithm,
        ]);
        assert_eq!(code(&o), 0, "{algorithm}");
        assert_eq!(labels(&o), vec![1, 1, 2, 2]);
        assert_eq!(String::from_utf8_lossy(&o.stderr).trim(), "2");
    }
}

#[test]
fn single_point_is_one_cluster() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "one.csv", "0.5,-0.5\n");
    let o = eigclust(&["cluster", s(&input)]);
    assert_eq!(code(&o), 0);
    assert_eq!(labels(&o), vec![1]);
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "a.csv", EXAMPLE);
    for (lab, expected) in [
        ("1\n1\n2\n2\n", 0),
        ("1\n1\n1\n1\n", 1),
        ("1\n2\n3\n4\n", 4),
        ("1\n1\n", 2),
    ] {
        let l = write(&dir, "l.txt", lab);
        let o = eigclust(&["check", s(&pts), s(&l), "--delta", "0.25"]);
        assert_eq!(code(&o), expected, "{lab:?}");
    }
    let l = write(&dir, "l.txt", "1\n2\n3\n4\n");
    let o = eigclust(&["check", s(&pts), s(&l), "--delta", "0.25"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("lines 1 and 2"));
}

#[test]
fn malformed_input_and_bad_flags() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.csv", "1,0\n1;0\n");
    let o = eigclust(&["cluster", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains(":2:"));

    let complex = write(&dir, "c.csv", "1,0\n1,0.5\n");
    let o = eigclust(&["cluster", s(&complex), "--algorithm", "real"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = eigclust(&["cluster", s(&complex), "--algorithm", "naive", "--perturb"]);
    assert_eq!(code(&o), 3);

    let dup = write(&dir, "d.csv", "0,0\n0,0\n");
    assert_eq!(code(&eigclust(&["cluster", s(&dup), "--no-dedup"])), 3);
    let o = eigclust(&["cluster", s(&dup), "--no-dedup", "--perturb", "1e-9"]);
    assert_eq!(code(&o), 0);
    assert_eq!(labels(&o), vec![1, 1]);

    assert_eq!(code(&eigclust(&["cluster", "/nonexistent/file.csv"])), 2);
    assert_eq!(code(&eigclust(&["cluster", s(&dup), "--delta", "-1"])), 2);
}

#[test]
fn conjugate_pairs_share_labels() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "c.csv", "0,0.04\n0,-0.04\n3,1\n3,-1\n");
    let o = eigclust(&["cluster", s(&input), "--conjugate-pairs"]);
    assert_eq!(code(&o), 0);
    assert_eq!(labels(&o), vec![1, 1, 2, 2]);
}

#[test]
fn outputs_match_the_library() {
    let dir = TempDir::new().unwrap();
    let spectrum = gen_circles(600, 5, 0.2, 100, 9).unwrap();
    let path = dir.path().join("circles.csv");
    let o = eigclust(&[
        "generate",
        "--dist",
        "circles",
        "--n",
        "600",
        "--origin",
        "100",
        "--seed",
        "9",
        s(&path),
    ]);
    assert_eq!(code(&o), 0);
    let raw: Vec<_> = fs::read_to_string(&path)
        .unwrap()
        .lines()
        .map(|l| {
            let (a, b) = l.split_once(',').unwrap();
            eigclust::PlanePoint::new(a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    assert_eq!(raw, spectrum.raw_points());
    let s64 = Spectrum64::from_points(raw).unwrap();

    for (flags, expected) in [
        (
            vec!["--algorithm", "naive", "--dsu", "labels"],
            cluster_naive(&s64, 0.1, DsuKind::LabelVector).unwrap(),
        ),
        (
            vec!["--mode", "exact", "--seed", "4"],
            cluster_delaunay(
                &s64,
                0.1,
                &DelaunayOptions {
                    seed: 4,
                    mode: ArithmeticMode::Exact,
                    ..Default::default()
                },
            )
            .unwrap(),
        ),
    ] {
        let mut args = vec!["cluster", s(&path)];
        args.extend(flags);
        let o = eigclust(&args);
        assert_eq!(code(&o), 0);
        assert_eq!(labels(&o), expected.labels());
    }
}

#[test]
fn generate_is_deterministic_and_validates() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for p in [&a, &b] {
        assert_eq!(
            code(&eigclust(&[
                "generate",
                "--dist",
                "circles",
                "--n",
                "1000",
                "--seed",
                "5",
                s(p)
            ])),
            0
        );
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(text.lines().count(), 1000);

    assert_eq!(
        code(&eigclust(&["generate", "--dist", "squares", "--n", "0"])),
        2
    );
    assert_eq!(
        code(&eigclust(&[
            "generate", "--dist", "circles", "--n", "5", "--side", "0.1"
        ])),
        3
    );
    assert_eq!(
        code(&eigclust(&[
            "generate", "--dist", "squares", "--n", "5", "--side", "-1"
        ])),
        2
    );
}

#[test]
fn round_trip_generate_cluster_check() {
    let dir = TempDir::new().unwrap();
    let squares = gen_squares(10, 0.02, 0.15, 4, 0).unwrap();
    assert_eq!(squares.len(), 10);
    for (dist, algorithms) in [
        ("squares", &["naive", "delaunay"][..]),
        ("circles", &["naive", "delaunay"][..]),
        ("real", &["naive", "real", "delaunay"][..]),
    ] {
        let pts = dir.path().join(format!("{dist}.csv"));
        assert_eq!(
            code(&eigclust(&[
                "generate",
                "--dist",
                dist,
                "--n",
                "700",
                "--seed",
                "2",
                s(&pts)
            ])),
            0
        );
        for algorithm in algorithms {
            let lab = dir.path().join(format!("{dist}-{algorithm}.txt"));
            let o = eigclust(&["cluster", s(&pts), "--algorithm", algorithm, "-o", s(&lab)]);
            assert_eq!(code(&o), 0, "{dist} {algorithm}");
            let o = eigclust(&["check", s(&pts), s(&lab)]);
            assert_eq!(
                code(&o),
                0,
                "{dist} {algorithm}: {}",
                String::from_utf8_lossy(&o.stdout)
            );
        }
    }
}

#[test]
fn bench_plans_and_censoring() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("bench.csv");
    let plan = write(
        &dir,
        "plan.toml",
        r#"
        [[case]]
        algorithm = "delaunay"
        distribution = "squares:0.02"
        sizes = [256, 512]
        repetitions = 2
        seed = 3
        "#,
    );
    let o = eigclust(&["bench", "--plan", s(&plan), s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(&out).unwrap();
    let mut rows = csv.lines();
    assert_eq!(
        rows.next(),
        Some("algorithm,mode,distribution,n,seed,rep,seconds,k,censored")
    );
    assert_eq!(rows.count(), 4);

    assert_eq!(
        code(&eigclust(&["bench", "--plan", "/nonexistent/plan.toml"])),
        2
    );
    let broken = write(&dir, "broken.toml", "[[case]]\nalgorithm = 3\n");
    assert_eq!(code(&eigclust(&["bench", "--plan", s(&broken)])), 2);

    let o = eigclust(&[
        "bench",
        "--algorithm",
        "naive/labels",
        "--dist",
        "uniform",
        "--sizes",
        "1000,1048576",
        "--timeout",
        "1",
        s(&out),
    ]);
    assert_eq!(code(&o), 0);
    let csv = fs::read_to_string(&out).unwrap();
    assert!(csv
        .lines()
        .any(|l| l.starts_with("naive/labels,float,uniform,1048576,") && l.ends_with(",,,true")));
    assert!(csv
        .lines()
        .any(|l| l.contains(",1000,") && l.ends_with(",false")));
}

#[test]
fn help_and_version() {
    let o = eigclust(&["--version"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("eigclust "));
    for sub in ["cluster", "generate", "bench", "check"] {
        assert_eq!(code(&eigclust(&[sub, "--help"])), 0);
    }
}

#[test]
fn dump_triangulation_lists_input_lines() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "sq.csv", "0,0\n1,0\n1,1\n0,1\n0,0\n");
    let dump = dir.path().join("edges.txt");
    let o = eigclust(&["cluster", s(&input), "--dump-triangulation", s(&dump)]);
    assert_eq!(code(&o), 0);
    let edges: Vec<(usize, usize)> = fs::read_to_string(&dump)
        .unwrap()
        .lines()
        .map(|l| {
            let (a, b) = l.split_once(' ').unwrap();
            (a.parse().unwrap(), b.parse().unwrap())
        })
        .collect();
    // four sides and one diagonal over lines 1..4; the repeat on line 5 is merged
    assert_eq!(edges.len(), 5);
    assert!(edges
        .iter()
        .all(|&(a, b)| (1..=4).contains(&a) && (1..=4).contains(&b)));
}
