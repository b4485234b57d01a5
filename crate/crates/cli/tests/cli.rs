//! End-to-end behaviour of the `grpn` command line.

use std::path::PathBuf;
use std::process::Command;

use grpn_cli::json::{
    matrix_to_json, mp_from_json, mp_to_json, rational_from_json, rational_to_json, reduce_matrix_mod, table_from_json,
    table_set_from_json, table_set_to_json, table_to_json,
};
use grpn_cli::{run_args, CliError};
use grpn_core::combin::Multipartition;
use grpn_core::decomp::{assemble_matrix, d_product, AssembleOptions, DecompTable, TableSet};
use grpn_core::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["grpn"];
    full.extend_from_slice(args);
    let (code, text) = run_args(full);
    (code, serde_json::from_str(&text).expect("output is JSON"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("grpn-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_json(name: &str, v: &Value) -> String {
    let path = scratch(name);
    std::fs::write(&path, serde_json::to_string(v).unwrap()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn semisimple_table_is_the_identity() {
    let (code, v) = run(&["semisimple-tables", "--s", "1", "--m", "2"]);
    assert_eq!(code, 0);
    let t = table_from_json(&v).unwrap();
    let labels = Multipartition::all(1, 2);
    assert_eq!(t.rows().len(), labels.len());
    assert_eq!(t.entries(), (0..labels.len()).map(|i| (i, i, 1)).collect::<Vec<_>>());
    assert!(t.is_semisimple());
}

#[test]
fn splittable_with_trivial_orbit_echoes_the_block_product() {
    let tables = TableSet::random_unitriangular(2, 1, 3, 11, 4).unwrap();
    let path = write_json("random-tables.json", &table_set_to_json(&tables));
    for (lam, mu) in [("[[2],[1]]", "[[2],[1]]"), ("[[2],[1]]", "[[1,1],[1]]"), ("[[3],[]]", "[[2,1],[]]")] {
        let (code, v) = run(&["splittable", "--p", "2", "--lambda", lam, "--mu", mu, "--tables", &path]);
        assert_eq!(code, 0, "{}", v);
        let l = mp_from_json(&serde_json::from_str(lam).unwrap()).unwrap();
        let m = mp_from_json(&serde_json::from_str(mu).unwrap()).unwrap();
        let want = d_product(&l, &m, 2, &tables).unwrap();
        assert_eq!(v["value"], json!(want));
        assert_eq!(v["l"], json!(1));
    }
}

#[test]
fn splittable_delta_and_residues() {
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let (is, js) = (i.to_string(), j.to_string());
        let (code, v) = run(&[
            "splittable", "--p", "2", "--lambda", "[[1],[1]]", "--mu", "[[1],[1]]", "--i", &is, "--j", &js, "--char", "5",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["value"], json!(u8::from(i == j)));
        assert_eq!(v["residue"], json!(u8::from(i == j)));
    }
}

#[test]
fn verify_commands_pass() {
    let (code, v) = run(&["verify", "pleftmult", "--p", "2", "--d", "1", "--n", "3", "--b", "[2,1]"]);
    assert_eq!((code, &v["passed"]), (0, &json!(true)));
    let (code, v) = run(&["verify", "changing", "--p", "2", "--b", "2,1", "--j", "1"]);
    assert_eq!((code, &v["passed"]), (0, &json!(true)));
    let (code, v) = run(&["verify", "trace-vbtb", "--p", "2", "--b", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["closed"], v["expansion"]);
    let (code, v) = run(&["verify", "comparison", "--p", "2", "--b", "2,1", "--mode", "symbolic"]);
    assert_eq!((code, &v["checked"]), (0, &json!(2)));
    let (code, v) = run(&["verify", "factorization", "--p", "2", "--lambda", "[[2],[2]]"]);
    assert_eq!((code, &v["p_lambda"]), (0, &json!(2)));
}

#[test]
fn enumerate_counts() {
    let (code, v) = run(&["enumerate", "--p", "2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], json!(5));
    let (_, v) = run(&["enumerate", "--p", "2", "--b", "[1,1]"]);
    assert_eq!(v["count"], json!(1));
    assert_eq!(v["multipartitions"][0]["p_lambda"], json!(2));
    assert_eq!(v["multipartitions"][0]["dim_t"], json!("1"));
}

#[test]
fn seminormal_check_passes() {
    let (code, v) = run(&["seminormal-check", "--p", "2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"].as_array().unwrap().len(), 5);
    assert_eq!(v["mode"]["kind"], json!("symbolic"));
    let (code, v) = run(&["seminormal-check", "--p", "3", "--lambda", "[[1],[1],[]]", "--mode", "specialize", "--trials", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["reports"][0]["failures"], json!([]));
}

#[test]
fn scalar_values() {
    let (code, v) = run(&["scalar", "schur", "--p", "2", "--lambda", "[[1],[1]]"]);
    assert_eq!(code, 0);
    assert!(v["value"].is_string());
    let (code, v) = run(&["scalar", "f", "--p", "2", "--lambda", "[[1],[1]]", "--point", "3,5"]);
    assert_eq!(code, 0);
    // f = ε Q² (εq − 1)² at ε = −1, q = 3, Q = 5: −25 · 16
    assert_eq!(v["at_point"], json!("-400"));
}

#[test]
fn exit_codes_and_error_documents() {
    let (code, v) = run(&["fixtures", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], json!("validation"));
    let (code, _) = run(&["scalar", "g", "--p", "2"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    // a ratio that is not a root of unity times a rational: inconsistent input
    let (code, v) = run(&["splittable", "--p", "2", "--lambda", "[[2],[2]]", "--mu", "[[1,1],[1,1]]"]);
    assert_eq!(code, 4, "{}", v);
    assert_eq!(v["error"]["kind"], json!("input-data"));
    assert_eq!(CliError::from(Error::Verification("x".into())).exit_code(), 3);
    assert_eq!(CliError::from(Error::InputData("x".into())).exit_code(), 4);
    assert_eq!(CliError::from(Error::ShapeMismatch("x".into())).exit_code(), 2);
}

#[test]
fn reduce_mod_examples() {
    let tables = TableSet::semisimple(2, 1, 2).unwrap();
    let m = assemble_matrix(2, 1, 2, &tables, &Multipartition::all(2, 2), &AssembleOptions::default()).unwrap();
    let doc = matrix_to_json(&m);
    assert_eq!(reduce_matrix_mod(&doc, 3).unwrap()["entries"], doc["entries"]);
    let path = write_json("matrix.json", &doc);
    let (code, v) = run(&["reduce-mod", "--input", &path, "--char", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["entries"], doc["entries"]);
    let five = json!({"entries": [[0, 0, 5], [1, 0, 4]]});
    assert_eq!(reduce_matrix_mod(&five, 2).unwrap()["entries"], json!([[0, 0, 1]]));
    let half = write_json("half.json", &json!({"entries": [[0, 0, "1/2"]]}));
    let (code, v) = run(&["reduce-mod", "--input", &half, "--char", "2"]);
    assert_eq!(code, 4);
    assert_eq!(v["error"]["kind"], json!("input-data"));
}

#[test]
fn assemble_semisimple_and_random() {
    let (code, v) = run(&["assemble", "--p", "3", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["unitriangular"], json!(true));
    let rows = v["rows"].as_array().unwrap().len();
    assert_eq!(v["entries"].as_array().unwrap().len(), rows);
    let tables = TableSet::random_unitriangular(2, 1, 3, 3, 2).unwrap();
    let path = write_json("assemble-tables.json", &table_set_to_json(&tables));
    let klesh = write_json("klesh.json", &Value::Array(Multipartition::all(2, 3).iter().map(mp_to_json).collect()));
    let args = ["assemble", "--p", "2", "--n", "3", "--tables", &path, "--klesh", &klesh];
    let (code, a) = run(&args);
    assert_eq!(code, 0, "{}", a);
    assert_eq!(a["unitriangular"], json!(true));
}

#[test]
fn output_is_deterministic() {
    let args = ["grpn", "seminormal-check", "--p", "2", "--n", "3", "--seed", "7"];
    assert_eq!(run_args(args), run_args(args));
    let bin = env!("CARGO_BIN_EXE_grpn");
    let a = Command::new(bin).args(&args[1..]).output().unwrap();
    let b = Command::new(bin).args(&args[1..]).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn binary_reports_exit_status_and_writes_files() {
    let bin = env!("CARGO_BIN_EXE_grpn");
    let bad = Command::new(bin).args(["fixtures", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&bad.stdout).unwrap();
    assert!(v["error"]["message"].as_str().unwrap().contains("nope"));
    let out = scratch("table-out.json");
    let ok = Command::new(bin)
        .args(["semisimple-tables", "--s", "2", "--m", "1", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(table_from_json(&v).unwrap(), DecompTable::semisimple(2, 1, 0));
}

#[test]
fn quick_fixtures_pass() {
    let (code, v) = run(&["fixtures", "quick"]);
    assert_eq!(code, 0, "{}", v);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 9);
}

#[test]
fn table_sets_round_trip() {
    let set = TableSet::random_unitriangular(3, 1, 3, 5, 3).unwrap();
    let back = table_set_from_json(&table_set_to_json(&set), 3, 1).unwrap();
    assert_eq!(back.tables(), set.tables());
    assert!(table_set_from_json(&table_set_to_json(&set), 2, 1).is_err());
    let bare = Value::Array(set.tables().iter().map(table_to_json).collect());
    assert_eq!(table_set_from_json(&bare, 3, 1).unwrap().tables(), set.tables());
}

#[test]
fn malformed_inputs_are_input_data_errors() {
    assert!(matches!(mp_from_json(&json!([[1, 2]])), Err(CliError::InputData(_))));
    assert!(matches!(mp_from_json(&json!("x")), Err(CliError::InputData(_))));
    assert!(matches!(table_from_json(&json!({"s": 1})), Err(CliError::InputData(_))));
    assert!(matches!(rational_from_json(&json!("1/0")), Err(CliError::InputData(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tables_round_trip(s in 1usize..3, m in 0usize..4, t in -3i64..4, seed in any::<u64>(), max in 0u64..5) {
        let table = DecompTable::random_unitriangular(s, m, t, seed, max);
        let v = table_to_json(&table);
        let text = serde_json::to_string(&v).unwrap();
        let reparsed: Value = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&reparsed, &v);
        prop_assert_eq!(table_from_json(&reparsed).unwrap(), table);
    }

    #[test]
    fn rationals_round_trip(a in -10_000i64..10_000, b in 1i64..500) {
        let r = BigRational::new(BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(rational_from_json(&rational_to_json(&r)).unwrap(), r);
    }

    #[test]
    fn multipartitions_round_trip(idx in 0usize..200) {
        let all = Multipartition::all(3, 4);
        let l = &all[idx % all.len()];
        prop_assert_eq!(&mp_from_json(&mp_to_json(l)).unwrap(), l);
    }
}
