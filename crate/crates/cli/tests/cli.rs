use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use boxq_core::field::{parse_ratfunc, RatFunc};
use boxq_core::linalg::FieldMatrix;
use boxq_core::modules::is_isomorphic;
use boxq_core::presentations::{verify_relations, AlgebraId, Representation};
use serde_json::Value;
use tempfile::TempDir;

fn boxq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxq")).args(args).output().unwrap()
}

fn boxq_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boxq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json(out: &Output) -> Value {
    assert_eq!(code(out), 0, "stderr: {}", stderr(out));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

fn as_rf(v: &Value) -> RatFunc {
    serde_json::from_value(v.clone()).unwrap()
}

fn load(path: &Path) -> Representation {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    /// Runs `boxq` with `@name` arguments replaced by paths in the dir.
    fn run(&self, args: &[&str]) -> Output {
        let owned: Vec<String> = args
            .iter()
            .map(|a| match a.strip_prefix('@') {
                Some(name) => self.path(name).display().to_string(),
                None => a.to_string(),
            })
            .collect();
        boxq(&owned.iter().map(String::as_str).collect::<Vec<_>>())
    }

    fn eval(&self, a: &str, coords: &str, name: &str) {
        let out = self.run(&[
            "eval-module",
            "--a",
            a,
            "--coords",
            coords,
            "--out",
            &format!("@{name}"),
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
    }

    fn read(&self, name: &str) -> Vec<u8> {
        std::fs::read(self.path(name)).unwrap()
    }
}

fn m2(entries: [&str; 4]) -> FieldMatrix {
    FieldMatrix::from_rows(vec![
        vec![rf(entries[0]), rf(entries[1])],
        vec![rf(entries[2]), rf(entries[3])],
    ])
    .unwrap()
}

#[test]
fn eval_module_writes_equitable_matrices() {
    let d = Dir::new();
    d.eval("q^3", "equitable", "v.json");
    let rep = load(&d.path("v.json"));
    assert_eq!(rep.algebra(), AlgebraId::UqLoopEquitable);
    let c = "(q - 1/q)";
    let expected = [
        ("X01", m2(["1/q", &format!("{c}/q^3"), "0", "q"])),
        ("X12", m2(["q", &format!("-{c}"), "0", "1/q"])),
        ("X23", m2(["q", "0", c, "1/q"])),
        ("X30", m2(["1/q", "0", &format!("-{c}*q^3"), "q"])),
        ("X13", m2(["q", "0", "0", "1/q"])),
        ("X31", m2(["1/q", "0", "0", "q"])),
    ];
    for (name, m) in expected {
        assert_eq!(rep.gen(name), &m, "{name}");
    }
    assert!(verify_relations(&rep).passed());
}

#[test]
fn eval_module_rejects_zero_and_bad_literals() {
    let zero = boxq(&["eval-module", "--a", "0"]);
    assert_eq!(code(&zero), 3);
    assert!(stderr(&zero).contains("nonzero"));
    assert_eq!(code(&boxq(&["eval-module", "--a", "q^("])), 2);
    assert_eq!(code(&boxq(&["eval-module", "--a", "q", "--coords", "sideways"])), 2);
    assert_eq!(code(&boxq(&["no-such-command"])), 2);
}

#[test]
fn eval_module_warns_at_one() {
    let out = boxq(&["eval-module", "--a", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("reducible"));
    let rep: Representation = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep.dim(), 2);
}

#[test]
fn tensor_of_two_diameter_one_modules() {
    let d = Dir::new();
    d.eval("q^3", "chevalley", "a.json");
    d.eval("1/q^3", "chevalley", "b.json");
    let out = d.run(&["tensor", "@a.json", "@b.json", "--out", "@t.json"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("relations: 22/22 hold"));
    let t = load(&d.path("t.json"));
    assert_eq!((t.algebra(), t.dim()), (AlgebraId::UqLoop, 4));
    assert!(verify_relations(&t).passed());
}

#[test]
fn tensor_rejects_box_factor() {
    let d = Dir::new();
    d.eval("q^3", "chevalley", "a.json");
    d.eval("q^3", "box", "bx.json");
    assert_eq!(code(&d.run(&["tensor", "@a.json", "@bx.json"])), 3);
    assert_eq!(code(&d.run(&["tensor", "@a.json", "@missing.json"])), 2);
    assert_eq!(code(&d.run(&["tensor", "-", "-"])), 2);
}

#[test]
fn tensor_is_associative_up_to_isomorphism() {
    let d = Dir::new();
    d.eval("q^3", "chevalley", "a.json");
    d.eval("1/q^3", "chevalley", "b.json");
    d.eval("q^7", "chevalley", "c.json");
    for args in [
        ["tensor", "@a.json", "@b.json", "--out", "@ab.json"],
        ["tensor", "@ab.json", "@c.json", "--out", "@ab_c.json"],
        ["tensor", "@b.json", "@c.json", "--out", "@bc.json"],
        ["tensor", "@a.json", "@bc.json", "--out", "@a_bc.json"],
    ] {
        assert_eq!(code(&d.run(&args)), 0);
    }
    let left = load(&d.path("ab_c.json"));
    let right = load(&d.path("a_bc.json"));
    assert_eq!(left.dim(), 8);
    assert!(is_isomorphic(&left, &right).unwrap().is_some());
}

#[test]
fn analyze_box_views() {
    let d = Dir::new();
    d.eval("q^3", "box", "bx.json");
    let v = json(&d.run(&["analyze", "@bx.json", "--as", "box"]));
    assert_eq!(v["diameter"], 1);
    assert_eq!(v["shape"], serde_json::json!([1, 1]));
    assert_eq!(as_rf(&v["type"]), rf("1"));
    assert_eq!(v["decompositions"].as_object().unwrap().len(), 8);

    d.eval("q^3", "chevalley", "a.json");
    d.eval("1/q^3", "chevalley", "b.json");
    assert_eq!(code(&d.run(&["tensor", "@a.json", "@b.json", "--out", "@t.json"])), 0);
    let v = json(&d.run(&["analyze", "@t.json", "--as", "box"]));
    assert_eq!(v["diameter"], 2);
    assert_eq!(v["shape"], serde_json::json!([1, 2, 1]));

    let v = json(&d.run(&["analyze", "@t.json", "--as", "uq"]));
    assert_eq!(v["shape"], serde_json::json!([1, 2, 1]));
}

#[test]
fn analyze_tridiagonal_pair() {
    let d = Dir::new();
    d.eval("q^3", "chevalley", "a.json");
    d.eval("1/q^3", "chevalley", "b.json");
    assert_eq!(code(&d.run(&["tensor", "@a.json", "@b.json", "--out", "@t.json"])), 0);
    for pair in ["0", "1", "2", "3"] {
        let v = json(&d.run(&["analyze", "@t.json", "--as", "td", "--pair", pair]));
        assert_eq!(v["axioms"], "pass");
        assert_eq!(as_rf(&v["base"]), rf("q^2 + q^-2"));
        assert_eq!(v["q_geometric"], true);
    }
    assert_eq!(code(&d.run(&["analyze", "@t.json", "--as", "td", "--pair", "4"])), 2);
}

#[test]
fn analyze_reducible_pair_fails() {
    let d = Dir::new();
    d.eval("1", "box", "v11.json");
    let out = d.run(&["analyze", "@v11.json", "--as", "td"]);
    assert_eq!(code(&out), 1);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["violation"]["axiom"], "irreducible");
}

/// Coefficients of `∏ (1 − r z)`, constant first.
fn expand(roots: &[&str]) -> Vec<RatFunc> {
    let mut c = vec![rf("1")];
    for r in roots {
        let r = rf(r);
        let mut next = c.clone();
        next.push(rf("0"));
        for (k, x) in c.iter().enumerate() {
            next[k + 1] = &next[k + 1] - &(&r * x);
        }
        c = next;
    }
    c
}

fn coeffs(v: &Value) -> Vec<RatFunc> {
    v["coeffs"].as_array().unwrap().iter().map(as_rf).collect()
}

#[test]
fn drinfeld_of_box_module() {
    let d = Dir::new();
    d.eval("q^3", "box", "bx.json");
    let v = json(&d.run(&["drinfeld", "@bx.json"]));
    assert_eq!(coeffs(&v["p"]), expand(&["q^3"]));
    assert_eq!(coeffs(&v["q"]), expand(&["q^-3"]));
    assert_eq!(v["partners"], true);
}

#[test]
fn drinfeld_of_trivial_module() {
    let one = FieldMatrix::identity(1);
    let rep = Representation::from_ordered(AlgebraId::BoxQ, vec![one.clone(), one.clone(), one.clone(), one]).unwrap();
    let out = boxq_stdin(&["drinfeld", "-"], serde_json::to_string(&rep).unwrap().as_bytes());
    let v = json(&out);
    assert_eq!(coeffs(&v["p"]), vec![rf("1")]);
    assert_eq!(coeffs(&v["q"]), vec![rf("1")]);
}

#[test]
fn drinfeld_of_tensor_module_is_a_product() {
    let d = Dir::new();
    d.eval("q^5", "chevalley", "a.json");
    d.eval("1/q", "chevalley", "b.json");
    assert_eq!(code(&d.run(&["tensor", "@a.json", "@b.json", "--out", "@t.json"])), 0);
    let v = json(&d.run(&["--q0", "2", "drinfeld", "@t.json"]));
    assert_eq!(coeffs(&v["p"]), expand(&["q^5", "1/q"]));
    assert_eq!(coeffs(&v["q"]), expand(&["q^-5", "q"]));
    // 1 − (32 + 1/2) z + 16 z² at q = 2.
    assert_eq!(v["at_q0"]["p"], serde_json::json!(["1", "-65/2", "16"]));
}

#[test]
fn rho_four_times_is_byte_identical() {
    let d = Dir::new();
    d.eval("q^3", "box", "v0.json");
    for k in 0..4 {
        let (src, dst) = (format!("@v{k}.json"), format!("@v{}.json", k + 1));
        assert_eq!(code(&d.run(&["twist", &src, "--auto", "rho", "--out", &dst])), 0);
    }
    assert_ne!(d.read("v1.json"), d.read("v0.json"));
    assert_eq!(d.read("v4.json"), d.read("v0.json"));
}

#[test]
fn tet_rho_four_times_is_byte_identical() {
    let d = Dir::new();
    d.eval("q^3", "tet", "t0.json");
    assert_eq!(
        code(&d.run(&["twist", "@t0.json", "--auto", "rho", "--out", "@t1.json"])),
        0
    );
    assert_eq!(
        code(&d.run(&["twist", "@t1.json", "--auto", "rho3", "--out", "@t4.json"])),
        0
    );
    assert_eq!(d.read("t4.json"), d.read("t0.json"));
}

#[test]
fn scale_and_inverse_scale_cancel() {
    let d = Dir::new();
    d.eval("2", "box", "v.json");
    assert_eq!(
        code(&d.run(&["twist", "@v.json", "--auto", "scale:q", "--out", "@s.json"])),
        0
    );
    assert_ne!(d.read("s.json"), d.read("v.json"));
    assert_eq!(
        code(&d.run(&["twist", "@s.json", "--auto", "scale:1/q", "--out", "@back.json"])),
        0
    );
    assert_eq!(d.read("back.json"), d.read("v.json"));
    assert_eq!(code(&d.run(&["twist", "@v.json", "--auto", "scale:0"])), 3);
    assert_eq!(code(&d.run(&["twist", "@v.json", "--auto", "flip"])), 2);
}

#[test]
fn twist_rejects_loop_algebra() {
    let d = Dir::new();
    d.eval("q^3", "chevalley", "a.json");
    assert_eq!(code(&d.run(&["twist", "@a.json", "--auto", "rho"])), 3);
}

#[test]
fn rho2_twist_is_isomorphic() {
    let d = Dir::new();
    d.eval("q^3", "box", "v.json");
    assert_eq!(
        code(&d.run(&["twist", "@v.json", "--auto", "rho2", "--out", "@w.json"])),
        0
    );
    let v = json(&d.run(&["--q0", "3/2", "check-theorem", "iso-rho2", "@w.json"]));
    assert_eq!(v["holds"], true);
    assert!(v["intertwiner"].is_object());
    assert_eq!(v["at_q0"]["intertwines"], true);
}

#[test]
fn partners_on_box_module() {
    let d = Dir::new();
    d.eval("q^3", "box", "v.json");
    let v = json(&d.run(&["check-theorem", "partners", "@v.json"]));
    assert_eq!(v["holds"], true);
    assert_eq!(coeffs(&v["p_twist"]), expand(&["q^-3"]));
}

#[test]
fn six_table_and_star_on_diameter_two() {
    let d = Dir::new();
    d.eval("q^3", "chevalley", "a.json");
    d.eval("1/q^3", "chevalley", "b.json");
    assert_eq!(code(&d.run(&["tensor", "@a.json", "@b.json", "--out", "@t.json"])), 0);
    assert_eq!(
        code(&d.run(&["convert", "@t.json", "--to", "box", "--out", "@tb.json"])),
        0
    );
    let v = json(&d.run(&["--q0", "2", "check-theorem", "six-table", "@tb.json"]));
    assert_eq!(v["holds"], true);
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 2);
    assert!(groups.iter().all(|g| g["entries"].as_array().unwrap().len() == 6));
    let v = json(&d.run(&["check-theorem", "star", "@tb.json"]));
    assert_eq!(v["pairs"].as_array().unwrap().len(), 4);
}

#[test]
fn star_needs_diameter_two_and_irreducibility() {
    let d = Dir::new();
    d.eval("q^3", "box", "v.json");
    assert_eq!(code(&d.run(&["check-theorem", "star", "@v.json"])), 3);
    d.eval("1", "box", "v11.json");
    assert_eq!(code(&d.run(&["check-theorem", "star", "@v11.json"])), 1);
}

#[test]
fn traces_of_equitable_module() {
    let d = Dir::new();
    d.eval("q^3", "equitable", "v.json");
    let v = json(&d.run(&["check-theorem", "traces", "@v.json"]));
    assert_eq!(as_rf(&v["tr_x01_x23"]), rf("2 + (q - q^-1)^2 * q^-3"));
    assert_eq!(as_rf(&v["tr_x12_x30"]), rf("2 + (q - q^-1)^2 * q^3"));
}

#[test]
fn q0_flag_validation() {
    let d = Dir::new();
    assert_eq!(code(&d.run(&["--q0", "abc", "eval-module", "--a", "q"])), 2);
    // K0 has the entry 1/q, which has a pole at 0.
    assert_eq!(code(&d.run(&["--q0", "0", "eval-module", "--a", "q"])), 2);
    let out = d.run(&["--q0", "5/3", "eval-module", "--a", "q", "--coords", "equitable"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("relations vanish"));
}

#[test]
fn emitted_json_is_canonical() {
    let d = Dir::new();
    d.eval("(q^2 + 1)/(3*q)", "box", "v.json");
    let bytes = d.read("v.json");
    let rep: Representation = serde_json::from_slice(&bytes).unwrap();
    let mut again = serde_json::to_value(&rep).unwrap().to_string();
    again.push('\n');
    assert_eq!(again.as_bytes(), bytes.as_slice());
    let piped = boxq_stdin(&["convert", "-", "--to", "box"], &bytes);
    assert_eq!(piped.stdout, bytes);
}

#[test]
fn suite_passes() {
    let v = json(&boxq(&["suite", "--json"]));
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() > 50);
    assert!(rows.iter().all(|r| r["pass"] == true));
}
