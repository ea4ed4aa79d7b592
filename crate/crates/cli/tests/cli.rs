use std::fs;
use std::path::Path;
use std::process::Command;

use sphere_search::{build_inspection_tour, inspection_tour_length, PolylineCurve};
use sphere_search_cli::{run, CurveFile};

fn invoke(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sphere-search").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key:?} in\n{report}"))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tour_in_the_plane_has_length_eight() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let (code, report, _) = invoke(&["tour", "--dim", "2", "--out", path_str(&out)]);
    assert_eq!(code, 0);
    assert_eq!(field(&report, "length").parse::<f64>().unwrap(), 8.0);
    let curve = CurveFile::read(&out).unwrap();
    assert_eq!(curve.vertices().len(), 4);
    assert!(curve.is_closed());
}

#[test]
fn tour_in_three_dimensions_matches_six_root_six() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let (code, report, _) = invoke(&["tour", "--dim", "3", "--out", path_str(&out)]);
    assert_eq!(code, 0);
    let length: f64 = field(&report, "length").parse().unwrap();
    assert!((length - 6.0 * 6f64.sqrt()).abs() <= 1e-12);
    let diff: f64 = field(&report, "difference").parse().unwrap();
    assert!(diff.abs() <= 1e-12);
}

#[test]
fn tour_file_round_trips_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    for d in [2, 5, 11] {
        let out = dir.path().join(format!("t{d}.json"));
        assert_eq!(
            invoke(&["tour", "--dim", &d.to_string(), "--out", path_str(&out)]).0,
            0
        );
        let read: PolylineCurve = CurveFile::read(&out).unwrap();
        assert_eq!(read, build_inspection_tour(d).unwrap());
    }
}

#[test]
fn bad_dimensions_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.json");
    let (code, _, err) = invoke(&["tour", "--dim", "1", "--out", path_str(&out)]);
    assert_eq!(code, 2);
    assert!(err.contains("--dim"));
    assert!(!out.exists());
    assert_eq!(invoke(&["cover", "--dim", "0"]).0, 2);
    assert_eq!(
        invoke(&["search", "--dim", "1", "--normal", "1", "--rho", "1"]).0,
        2
    );
    assert_eq!(
        invoke(&[
            "tour",
            "--dim",
            "3",
            "--scale",
            "-1",
            "--out",
            path_str(&out)
        ])
        .0,
        2
    );
    assert_eq!(invoke(&["frobnicate"]).0, 2);
}

#[test]
fn verify_accepts_the_tour_and_rejects_the_shrunk_tour() {
    let dir = tempfile::tempdir().unwrap();
    let tour = dir.path().join("tour.json");
    let shrunk = dir.path().join("shrunk.json");
    invoke(&["tour", "--dim", "4", "--out", path_str(&tour)]);
    CurveFile::from_curve(&build_inspection_tour(4).unwrap().scaled(0.99))
        .write(&shrunk)
        .unwrap();

    let (code, report, _) = invoke(&["verify", "--curve", path_str(&tour), "--samples", "100000"]);
    assert_eq!(code, 0, "{report}");
    assert_eq!(field(&report, "agree"), "true");
    assert!(!report.contains("witness"));

    let (code, report, _) = invoke(&[
        "verify",
        "--curve",
        path_str(&shrunk),
        "--samples",
        "100000",
    ]);
    assert_eq!(code, 1, "{report}");
    assert_eq!(field(&report, "agree"), "true");
    let w: Vec<f64> = field(&report, "witness")
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    assert_eq!(w.len(), 4);
    let curve = build_inspection_tour(4).unwrap().scaled(0.99);
    let u = sphere_search::UnitDirection::from_coords(w).unwrap();
    assert!(!sphere_search::curve_sees(&curve, &u).unwrap());
}

#[test]
fn malformed_curve_files_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let tour = dir.path().join("tour.json");
    invoke(&["tour", "--dim", "3", "--out", path_str(&tour)]);
    let text = fs::read_to_string(&tour).unwrap();
    let cases = [
        ("truncated.json", text[..text.len() / 2].to_string()),
        (
            "ragged.json",
            r#"{"dim":2,"closed":true,"vertices":[[1,0],[0]]}"#.to_string(),
        ),
        (
            "single.json",
            r#"{"dim":2,"closed":true,"vertices":[[1,0]]}"#.to_string(),
        ),
        (
            "extra.json",
            r#"{"dim":1,"closed":true,"vertices":[[1],[2]],"x":0}"#.to_string(),
        ),
    ];
    for (name, body) in cases {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        let (code, _, err) = invoke(&["verify", "--curve", path_str(&p)]);
        assert_eq!(code, 2, "{name}: {err}");
    }
    let missing = dir.path().join("missing.json");
    assert_eq!(invoke(&["verify", "--curve", path_str(&missing)]).0, 2);
}

#[test]
fn sweep_passes_the_envelope_in_the_plane() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let args = [
        "sweep",
        "--dim",
        "2",
        "--trials",
        "10000",
        "--rho-min",
        "0.1",
        "--rho-max",
        "100",
        "--seed",
        "9",
        "--out",
        path_str(&csv),
    ];
    let (code, report, _) = invoke(&args);
    assert_eq!(code, 0);
    assert_eq!(field(&report, "envelope"), "PASS");
    let l = inspection_tour_length(2);
    let max_ratio: f64 = field(&report, "max ratio").parse().unwrap();
    assert!(max_ratio <= 12.0 * l + 3.0 * l / 0.1);

    let mut reader = csv::Reader::from_path(&csv).unwrap();
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        [
            "dim",
            "seed",
            "rho",
            "direction_hash",
            "traversed_length",
            "phase",
            "ratio",
            "envelope_ok"
        ]
    );
    let mut rows = 0;
    let mut observed_max: f64 = 0.0;
    for rec in reader.records() {
        let rec = rec.unwrap();
        let rho: f64 = rec[2].parse().unwrap();
        let traversed: f64 = rec[4].parse().unwrap();
        let ratio: f64 = rec[6].parse().unwrap();
        assert!((0.1..=100.0).contains(&rho));
        assert!((ratio - traversed / rho).abs() <= 1e-12 * ratio);
        assert_eq!(&rec[7] == "true", traversed <= 12.0 * l * rho + 3.0 * l);
        assert_eq!(rec[3].len(), 16);
        observed_max = observed_max.max(ratio);
        rows += 1;
    }
    assert_eq!(rows, 10_000);
    assert_eq!(observed_max, max_ratio);
}

#[test]
fn sweep_rejects_bad_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let p = path_str(&csv);
    assert_eq!(
        invoke(&["sweep", "--dim", "2", "--trials", "0", "--out", p]).0,
        2
    );
    for (a, b) in [("0", "1"), ("2", "1"), ("-1", "1"), ("1", "inf")] {
        let args = [
            "sweep",
            "--dim",
            "2",
            "--trials",
            "5",
            "--rho-min",
            a,
            "--rho-max",
            b,
            "--out",
            p,
        ];
        assert_eq!(invoke(&args).0, 2, "[{a}, {b}]");
    }
}

#[test]
fn cover_reports_three_half_circles() {
    let (code, report, _) = invoke(&["cover", "--dim", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report.lines().filter(|l| l.starts_with("pole ")).count(), 3);
    assert_eq!(field(&report, "coverage"), "PASS");
}

#[test]
fn cover_refutes_coordinate_poles() {
    let dir = tempfile::tempdir().unwrap();
    for d in [2usize, 5, 9] {
        let p = dir.path().join(format!("axes{d}.json"));
        let poles: Vec<Vec<f64>> = (0..d)
            .map(|i| (0..d).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        fs::write(
            &p,
            serde_json::json!({ "dim": d, "poles": poles }).to_string(),
        )
        .unwrap();
        let (code, report, _) =
            invoke(&["cover", "--dim", &d.to_string(), "--refute", path_str(&p)]);
        assert_eq!(code, 0, "{report}");
        let w: Vec<f64> = field(&report, "witness")
            .split(',')
            .map(|c| c.parse().unwrap())
            .collect();
        assert!(w.iter().all(|&c| c <= 1e-7));
        assert!(field(&report, "max dot").parse::<f64>().unwrap() <= 1e-7);
    }
}

#[test]
fn cover_accepts_unrefutable_sets() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("simplex.json");
    let h = 0.75f64.sqrt();
    let body = format!(r#"{{"dim":2,"poles":[[1,0],[-0.5,{h}],[-0.5,-{h}]]}}"#);
    fs::write(&p, body).unwrap();
    let (code, report, _) = invoke(&["cover", "--dim", "2", "--refute", path_str(&p)]);
    assert_eq!(code, 0);
    assert!(report.contains("no witness found (expected for a covering set)"));
    assert_eq!(
        invoke(&["cover", "--dim", "3", "--refute", path_str(&p)]).0,
        2
    );
}

#[test]
fn search_hits_the_requested_plane() {
    let (code, report, _) = invoke(&[
        "search", "--dim", "3", "--normal", "-1,2,0.5", "--rho", "7.5",
    ]);
    assert_eq!(code, 0);
    let hit: Vec<f64> = field(&report, "hit point")
        .split(',')
        .map(|c| c.parse().unwrap())
        .collect();
    let n = [-1.0, 2.0, 0.5];
    let norm = n.iter().map(|x: &f64| x * x).sum::<f64>().sqrt();
    let dot: f64 = hit.iter().zip(n).map(|(h, c)| h * c / norm).sum();
    assert!((dot - 7.5).abs() <= 1e-9);
    assert_eq!(field(&report, "envelope"), "PASS");
    assert_eq!(
        invoke(&["search", "--dim", "3", "--normal", "1,2", "--rho", "1"]).0,
        2
    );
    assert_eq!(
        invoke(&["search", "--dim", "2", "--normal", "0,0", "--rho", "1"]).0,
        2
    );
    assert_eq!(
        invoke(&["search", "--dim", "2", "--normal", "1,0", "--rho", "-1"]).0,
        2
    );
}

#[test]
fn binary_exit_codes_and_thread_cap() {
    let bin = env!("CARGO_BIN_EXE_sphere-search");
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let sweep = |out: &Path, threads: &str| {
        Command::new(bin)
            .env("SPHERE_SEARCH_THREADS", threads)
            .args([
                "sweep", "--dim", "3", "--trials", "2000", "--seed", "4", "--out",
            ])
            .arg(out)
            .output()
            .unwrap()
            .status
    };
    assert!(sweep(&a, "1").success());
    assert!(sweep(&b, "4").success());
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(sweep(&a, "zero").code(), Some(2));
    let status = Command::new(bin)
        .args(["tour", "--dim", "1", "--out"])
        .arg(&a)
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(2));
}
