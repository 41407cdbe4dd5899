//! Runs the `burling` binary in a scratch directory, and the round-trip
//! corpus shared by the CLI tests and the acceptance suite.
#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use burling_core::burling::{generate_capped, BurlingVariant, DEFAULT_VERTEX_CAP};
use burling_core::format::{parse_map, parse_marked_graph, write_graph, write_map, write_marked_graph};
use burling_core::region::{self, AnyCertificate, RegionModel};
use burling_core::{covers, invariants, Graph};

pub struct Out {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A temporary working directory; file arguments are relative to it.
pub struct Cli {
    dir: tempfile::TempDir,
}

impl Cli {
    pub fn new() -> Self {
        Cli {
            dir: tempfile::tempdir().expect("temporary directory"),
        }
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    pub fn run(&self, args: &[&str]) -> Out {
        let out = Command::new(env!("CARGO_BIN_EXE_burling"))
            .args(args)
            .current_dir(self.dir.path())
            .output()
            .expect("spawn burling");
        Out {
            code: out.status.code().unwrap_or(-1),
            stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
            stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
        }
    }

    /// Runs and requires exit code 0.
    pub fn ok(&self, args: &[&str]) -> Result<String, String> {
        let o = self.run(args);
        if o.code == 0 {
            Ok(o.stdout)
        } else {
            Err(format!("`burling {}` exited {}: {}", args.join(" "), o.code, o.stderr.trim()))
        }
    }

    pub fn write(&self, name: &str, text: &str) {
        fs::write(self.path(name), text).expect("write input file");
    }

    pub fn read(&self, name: &str) -> Result<String, String> {
        fs::read_to_string(self.path(name)).map_err(|e| format!("{name}: {e}"))
    }
}

fn same(what: &str, a: &str, b: &str) -> Result<(), String> {
    if a == b {
        Ok(())
    } else {
        Err(format!("{what}: re-emission differs"))
    }
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn graph_inputs(cli: &Cli) -> Result<Vec<&'static str>, String> {
    let plain = [
        ("c5.graph", Graph::cycle(5)),
        ("c6.graph", Graph::cycle(6)),
        ("petersen.graph", Graph::petersen()),
        ("k4.graph", Graph::complete(4)),
        ("k6.graph", Graph::complete(6)),
        ("k33.graph", Graph::complete_bipartite(3, 3)),
    ];
    for (name, g) in &plain {
        let text = write_graph(g);
        cli.write(name, &text);
        let back = burling_core::format::parse_graph(&text).map_err(|e| e.to_string())?;
        expect(&back == g, || format!("{name}: parsed graph differs"))?;
        same(name, &write_graph(&back), &text)?;
    }
    cli.ok(&["generate", "--variant", "b", "--k", "4", "--out", "b4.graph"])?;
    Ok(plain.iter().map(|(n, _)| *n).chain(["b4.graph"]).collect())
}

/// Every file kind the CLI emits: parse, compare, re-emit, re-check.
/// Returns the number of files checked.
pub fn round_trip_corpus(cli: &Cli) -> Result<usize, String> {
    let mut files = 0;
    let b = ("b", BurlingVariant::Original);
    let p = ("bprime", BurlingVariant::Prime);
    let d = ("bddot", BurlingVariant::Ddot);
    let gens = [(b, 1..=5), (p, 1..=4), (d, 1..=6)];
    for ((flag, variant), ks) in gens {
        for k in ks {
            let name = format!("{flag}{k}.graph");
            let ks = k.to_string();
            cli.ok(&["generate", "--variant", flag, "--k", &ks, "--out", &name])?;
            let text = cli.read(&name)?;
            let parsed = parse_marked_graph(&text).map_err(|e| format!("{name}: {e}"))?;
            let want = generate_capped(variant, k, DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
            expect(parsed == want, || format!("{name}: parsed graph differs from the construction"))?;
            same(&name, &write_marked_graph(&parsed), &text)?;
            let stdout = cli.ok(&["generate", "--variant", flag, "--k", &ks])?;
            same(&format!("{name} on stdout"), &stdout, &text)?;
            files += 1;
        }
    }

    let inputs = graph_inputs(cli)?;
    files += inputs.len();
    for input in &inputs {
        for inv in ["chi", "omega", "beta", "gamma"] {
            let cert = format!("{input}.{inv}.cert");
            cli.ok(&["invariant", inv, "--input", input, "--cert", &cert])?;
            files += check_invariant_cert(cli, input, &cert)?;
        }
    }
    for (input, k) in [("c5.graph", "2"), ("petersen.graph", "2"), ("k6.graph", "4"), ("b4.graph", "3")] {
        let cert = format!("{input}.decide.cert");
        cli.ok(&["decide", "--input", input, "--k", k, "--cert", &cert])?;
        files += check_invariant_cert(cli, input, &cert)?;
    }

    cli.ok(&["generate", "--variant", "b", "--k", "2", "--out", "g.mg"])?;
    cli.ok(&["generate", "--variant", "bprime", "--k", "2", "--out", "h.mg"])?;
    cli.ok(&["generate", "--variant", "b", "--k", "1", "--out", "inner.mg"])?;
    let lemmas: [(&str, &[&str]); 12] = [
        ("3.1", &["--k", "2"]),
        ("3.1", &["--k", "3"]),
        ("3.2", &["--g", "g.mg", "--h", "h.mg"]),
        ("3.3", &["--inner", "h.mg"]),
        ("3.4", &["--g", "g.mg", "--h", "inner.mg", "--inner", "g.mg"]),
        ("3.5", &["--m", "1", "--n", "1"]),
        ("3.6", &["--m", "1", "--n", "2"]),
        ("3.7iii", &["--k", "3"]),
        ("3.7iv", &["--k", "3"]),
        ("2.1i", &["--k", "2"]),
        ("2.1ii", &["--k", "2"]),
        ("2.1ii", &["--k", "1"]),
    ];
    for (i, (id, extra)) in lemmas.iter().enumerate() {
        let (map, pat, host) = (format!("l{i}.map"), format!("l{i}.pattern"), format!("l{i}.host"));
        let mut args = vec!["lemma", id];
        args.extend_from_slice(extra);
        args.extend(["--out", &map, "--pattern-out", &pat, "--host-out", &host]);
        let out = cli.ok(&args)?;
        expect(out.starts_with(&format!("lemma {id}: pass")), || format!("lemma {id}: {out}"))?;
        for f in [&pat, &host] {
            let text = cli.read(f)?;
            let g = parse_marked_graph(&text).map_err(|e| format!("{f}: {e}"))?;
            same(f, &write_marked_graph(&g), &text)?;
        }
        let text = cli.read(&map)?;
        let m = parse_map(&text, true).map_err(|e| format!("{map}: {e}"))?;
        same(&map, &write_map(&m), &text)?;
        cli.ok(&["check", "map", "--pattern", &pat, "--host", &host, "--map", &map])?;
        files += 3;
    }

    let families: [(&str, &[&str]); 8] = [
        ("path", &["--n", "40"]),
        ("cycle", &["--n", "25"]),
        ("grid", &["--w", "8"]),
        ("grid3", &["--w", "4"]),
        ("tree", &["--n", "60", "--seed", "3"]),
        ("tree-regions", &["--n", "50", "--seed", "4"]),
        ("planted", &["--t", "4", "--seed", "5"]),
        ("planted", &["--t", "3", "--seed", "6"]),
    ];
    for (i, (family, extra)) in families.iter().enumerate() {
        let model = format!("m{i}.region");
        let mut args = vec!["region", "generate", "--family", family];
        args.extend_from_slice(extra);
        args.extend(["--out", &model]);
        cli.ok(&args)?;
        let text = cli.read(&model)?;
        let rm = region::parse_region_model(&text).map_err(|e| format!("{model}: {e}"))?;
        same(&model, &region::write_region_model(&rm), &text)?;
        let want = match *family {
            "path" => Some(RegionModel::identity(Graph::path(40))),
            "grid" => Some(RegionModel::identity(Graph::grid(8, 8))),
            _ => None,
        };
        if let Some(want) = want {
            expect(rm == want, || format!("{model}: parsed model differs"))?;
        }
        cli.ok(&["region", "validate", "--input", &model])?;
        files += 1;
        for (t, gamma, delta) in [("3", "1", "1"), ("4", "2", "1"), ("5", "1", "1")] {
            let cert = format!("{model}.t{t}g{gamma}.cert");
            cli.ok(&[
                "region", "partition", "--input", &model, "--gamma", gamma, "--delta", delta, "--t", t, "--out", &cert,
            ])?;
            files += check_region_cert(cli, &model, &cert)?;
        }
        for (t, delta) in [("3", "1"), ("5", "2")] {
            let cert = format!("{model}.asdim{t}.cert");
            cli.ok(&["region", "asdim", "--input", &model, "--delta", delta, "--t", t, "--out", &cert])?;
            files += check_region_cert(cli, &model, &cert)?;
        }
    }

    for (input, sel) in [("b4.graph", "max-chi-n2"), ("petersen.graph", "min-id"), ("b5.graph", "min-id")] {
        let mc = format!("{input}.{sel}.mc");
        cli.ok(&["covers", "extract", "--input", input, "--len", "3", "--selector", sel, "--out", &mc])?;
        let text = cli.read(&mc)?;
        let parsed = covers::parse_multicover(&text).map_err(|e| format!("{mc}: {e}"))?;
        same(&mc, &covers::write_multicover(&parsed), &text)?;
        cli.ok(&["covers", "check", "--input", input, "--multicover", &mc])?;
        files += 1;
    }

    cli.ok(&["bench", "--suite", "path", "--sizes", "100,200", "--out", "bench.csv"])?;
    let csv = cli.read("bench.csv")?;
    let lines: Vec<&str> = csv.lines().collect();
    expect(lines.len() == 3 && lines[0] == "suite,n,t,gamma,delta,millis,classes", || format!("bench.csv: {csv}"))?;
    files += 1;
    Ok(files)
}

fn check_invariant_cert(cli: &Cli, input: &str, cert: &str) -> Result<usize, String> {
    let Ok(text) = cli.read(cert) else {
        // reports without a certificate (e.g. the empty graph) write nothing
        return Ok(0);
    };
    let (value, c) = invariants::parse_certificate(&text).map_err(|e| format!("{cert}: {e}"))?;
    same(cert, &invariants::write_certificate(value, &c), &text)?;
    let out = cli.ok(&["check", "cert", "--input", input, "--cert", cert])?;
    expect(out.trim() == "certificate: pass", || format!("{cert}: {out}"))?;
    Ok(1)
}

fn check_region_cert(cli: &Cli, model: &str, cert: &str) -> Result<usize, String> {
    let text = cli.read(cert)?;
    let c = region::parse_certificate(&text).map_err(|e| format!("{cert}: {e}"))?;
    let again = match &c {
        AnyCertificate::Partition(p) => region::write_partition(p),
        AnyCertificate::Disjoint(p) => region::write_disjoint_partition(p),
        AnyCertificate::Model(m) => region::write_t_model(m),
    };
    same(cert, &again, &text)?;
    cli.ok(&["region", "check-cert", "--input", model, "--cert", cert])?;
    Ok(1)
}
