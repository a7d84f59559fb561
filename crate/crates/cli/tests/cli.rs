use std::path::Path;
use std::process::{Command, Output};

use dpseq::{generate_window, kappa, liouville, pack_bits, running_sums, SeqKind, SpfSieve};

fn dpseq_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dpseq"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_of(args: &[&str]) -> String {
    let out = dpseq_bin(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("output should be UTF-8")
}

fn exit_code(args: &[&str]) -> i32 {
    dpseq_bin(args).status.code().expect("no exit code")
}

#[test]
fn table_is_reproduced_from_library_calls() {
    let sieve = SpfSieve::build(16).unwrap();
    let sums = running_sums(16).unwrap();
    let mut expected = String::from("n,v,d,delta,kappa,lambda,S\n");
    for n in 1..=16u64 {
        let f = sieve.factorize(n).unwrap();
        expected.push_str(&format!(
            "{n},{},{},{},{},{},{}\n",
            f.valency(),
            f.divisor_count(),
            f.divisor_pairs(),
            kappa(n).unwrap(),
            liouville(n).unwrap(),
            sums.sum_at(n).unwrap(),
        ));
    }
    expected.push_str("# v(1)=0 computed; reference table prints 1\n");
    expected.push_str("# S(16)=-2 computed; reference table prints 0\n");
    assert_eq!(stdout_of(&["table", "--to", "16"]), expected);
}

#[test]
fn table_omits_the_sum_comment_for_short_ranges() {
    let out = stdout_of(&["table", "--to", "10"]);
    assert!(out.contains("# v(1)=0 computed"));
    assert!(!out.contains("S(16)"));
}

#[test]
fn series_examples() {
    let s_rows = stdout_of(&["series", "--kind", "S", "--from", "1", "--to", "10"]);
    let lines: Vec<&str> = s_rows.lines().collect();
    assert_eq!(lines[0], "n,S");
    assert_eq!(lines.len(), 11);
    assert_eq!(*lines.last().unwrap(), "10,0");

    let delta_rows = stdout_of(&["series", "--kind", "delta", "--from", "1", "--to", "999"]);
    let lines: Vec<&str> = delta_rows.lines().collect();
    assert_eq!(lines[0], "n,delta");
    assert_eq!(lines.len(), 1000);
    assert_eq!(lines[720], "720,15");

    let kappa_row = stdout_of(&["series", "--kind", "kappa", "--to", "1"]);
    assert_eq!(kappa_row, "n,kappa\n1,-1\n");

    // lowercase alias for the running-sum kind
    assert_eq!(
        stdout_of(&["series", "--kind", "s", "--to", "1"]),
        "n,S\n1,-1\n"
    );
}

#[test]
fn series_matches_window_values() {
    let out = stdout_of(&["series", "--kind", "lambda", "--from", "50", "--to", "90"]);
    let window = generate_window(SeqKind::Lambda, 50, 90, None).unwrap();
    for (line, (i, &x)) in out.lines().skip(1).zip(window.values().iter().enumerate()) {
        assert_eq!(line, format!("{},{}", 50 + i as u64, x));
    }
}

#[test]
fn autocorr_shape_and_values() {
    let out = stdout_of(&[
        "autocorr",
        "--kind",
        "kappa",
        "--n",
        "200",
        "--max-lag",
        "10",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "lag,value");
    assert_eq!(lines[1], "0,1.000000");
    assert_eq!(lines.len(), 13); // header + 11 lags + metadata comment

    let window = generate_window(SeqKind::Kappa, 1, 210, None).unwrap();
    let report = dpseq::autocorrelation(&window, 10, dpseq::LagMode::Extended).unwrap();
    for (k, &value) in report.values.iter().enumerate() {
        assert_eq!(lines[k + 1], format!("{k},{value:.6}"));
    }
    let comment = lines[12];
    assert!(comment.starts_with("# mu="));
    assert!(comment.contains("mu_squared="));
    assert!(comment.contains("mode=extended"));
}

#[test]
fn autocorr_centered_is_flagged() {
    let out = stdout_of(&[
        "autocorr",
        "--n",
        "16",
        "--max-lag",
        "5",
        "--mode",
        "circular",
        "--centered",
    ]);
    let comment = out.lines().last().unwrap();
    assert!(comment.contains("mode=circular"));
    assert!(comment.contains("centered=true"));
    // S(16) = -2, so the mean is -0.125 and centering pulls C(0) to 1 - mu^2
    assert_eq!(out.lines().nth(1).unwrap(), "0,0.984375");
}

#[test]
fn period_scan_rows() {
    let out = stdout_of(&["period-scan", "--window", "16", "--max-period", "1"]);
    assert_eq!(out, "k,refuted_at\n1,3\n");
}

#[test]
fn witness_row() {
    let out = stdout_of(&["witness", "--k", "1"]);
    assert_eq!(
        out,
        "k,p,semiprime,p1,p2,kappa_p,kappa_semiprime\n1,3,4,2,2,-1,1\n"
    );
}

#[test]
fn compare_rows() {
    let out = stdout_of(&["compare", "--limit", "16"]);
    assert_eq!(out, "n,kappa,lambda\n1,-1,1\n8,1,-1\n16,-1,1\n");
}

#[test]
fn largely_composite_rows() {
    let out = stdout_of(&["largely-composite", "--limit", "12"]);
    assert_eq!(out, "n,d\n1,1\n2,2\n3,2\n4,3\n6,4\n8,4\n10,4\n12,6\n");
}

#[test]
fn bound_check_row() {
    let out = stdout_of(&["bound-check", "--n", "4", "--s", "1"]);
    assert_eq!(
        out,
        "n,s,lhs,rhs,holds_nonstrict,holds_strict\n4,1.000000,1.750000,1.750000,true,false\n"
    );
}

#[test]
fn pair_check_row() {
    let out = stdout_of(&["pair-check", "--n1", "3", "--n2", "5"]);
    assert_eq!(
        out,
        "n1,n2,coprime,d_product_relation,delta_bound_holds_nonstrict,delta_bound_holds_strict,equality_case\n\
         3,5,true,equal,true,false,true\n"
    );
}

#[test]
fn json_rows_are_objects() {
    let out = stdout_of(&["bound-check", "--n", "6", "--s", "1", "--format", "json"]);
    assert_eq!(
        out,
        "{\"n\":6,\"s\":1.000000,\"lhs\":2.000000,\"rhs\":2.083333,\
         \"holds_nonstrict\":true,\"holds_strict\":true}\n"
    );

    let table = stdout_of(&["table", "--to", "2", "--format", "json"]);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(
        lines[0],
        "{\"n\":1,\"v\":0,\"d\":1,\"delta\":1,\"kappa\":-1,\"lambda\":1,\"S\":-1}"
    );
    assert_eq!(
        lines[2],
        "{\"comment\":\"v(1)=0 computed; reference table prints 1\"}"
    );

    let scan = stdout_of(&[
        "period-scan",
        "--window",
        "16",
        "--max-period",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(scan, "{\"k\":1,\"refuted_at\":3}\n");
}

#[test]
fn bits_ascii_lines_wrap_at_64() {
    let out = stdout_of(&["bits", "--to", "16"]);
    assert_eq!(out, "0001010111000110\n");
    let long = stdout_of(&["bits", "--to", "100"]);
    let lines: Vec<&str> = long.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0].len(), 64);
    assert_eq!(lines[1].len(), 36);
    let window = generate_window(SeqKind::Kappa, 1, 100, None).unwrap();
    assert_eq!(lines.join(""), window.to_bits());
}

#[test]
fn bits_packed_bytes() {
    let out = dpseq_bin(&["bits", "--to", "16", "--packed"]);
    assert!(out.status.success());
    assert_eq!(out.stdout, vec![0x15, 0xC6]);
    let window = generate_window(SeqKind::Kappa, 1, 1000, None).unwrap();
    let expected = pack_bits(&window.to_bits()).unwrap();
    let out = dpseq_bin(&["bits", "--to", "1000", "--packed"]);
    assert_eq!(out.stdout, expected);
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = std::env::temp_dir().join("dpseq-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let by_stdout = stdout_of(&["table", "--to", "32"]);
    let out = dpseq_bin(&["table", "--to", "32", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), by_stdout);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn output_is_deterministic_across_runs() {
    for args in [
        vec!["table", "--to", "100"],
        vec!["autocorr", "--n", "500", "--max-lag", "50"],
        vec![
            "series", "--kind", "kappa", "--to", "200", "--format", "json",
        ],
    ] {
        assert_eq!(stdout_of(&args), stdout_of(&args), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exit_code(&["bad-flag"]), 2);
    assert_eq!(exit_code(&["table", "--to", "0"]), 2);
    assert_eq!(exit_code(&["table", "--unknown"]), 2);
    assert_eq!(exit_code(&["series", "--kind", "mobius", "--to", "5"]), 2);
    assert_eq!(
        exit_code(&["series", "--kind", "S", "--from", "9", "--to", "5"]),
        2
    );
    assert_eq!(exit_code(&["autocorr", "--n", "10", "--max-lag", "10"]), 2);
    assert_eq!(
        exit_code(&["period-scan", "--window", "8", "--max-period", "8"]),
        2
    );
    assert_eq!(exit_code(&["bound-check", "--n", "6", "--s", "0"]), 2);
    assert_eq!(exit_code(&["bound-check", "--n", "1", "--s", "1"]), 2);
    assert_eq!(exit_code(&[]), 2);
    let err = dpseq_bin(&["bad-flag"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("Usage"));
}

#[test]
fn runtime_failures_exit_1() {
    assert_eq!(exit_code(&["witness", "--k", "1", "--bound", "2"]), 1);
    let err = dpseq_bin(&["witness", "--k", "1", "--bound", "2"]);
    assert!(String::from_utf8_lossy(&err.stderr).contains("no witness found"));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
    let help = stdout_of(&["--help"]);
    for sub in [
        "table",
        "series",
        "autocorr",
        "period-scan",
        "witness",
        "compare",
        "bits",
        "largely-composite",
        "bound-check",
        "pair-check",
    ] {
        assert!(help.contains(sub), "help lists {sub}");
    }
    assert!(Path::new(env!("CARGO_BIN_EXE_dpseq")).exists());
}
