//! `burling`: generation, invariants, lemma witnesses, decisions, region
//! partitions and certificate checks from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
//! exhausted.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use burling_core::burling::{self, BurlingVariant, LemmaId, LemmaParams, DEFAULT_VERTEX_CAP, DEFAULT_WITNESS_CAP};
use burling_core::covers::{self, Selector};
use burling_core::embed::{verify_embedding, DEFAULT_SEARCH_BUDGET};
use burling_core::format::{parse_map, parse_marked_graph, write_map, write_marked_graph};
use burling_core::invariants::{self, Budget, Decision, Exactness, InvariantReport};
use burling_core::region::{self, generate as rgen, AnyCertificate, AsdimOutcome, Outcome, RegionModel};
use burling_core::{Error, Graph, MarkedGraph};

#[derive(Parser)]
#[command(name = "burling", version, about = "Burling graphs, witness invariants and region partitions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a member of one of the three sequences as a marked graph.
    Generate {
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        k: usize,
        /// Refuse constructions with more vertices than this.
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: u128,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute χ, ω, β or γ of a graph.
    Invariant {
        #[arg(value_enum)]
        name: InvariantName,
        #[arg(long)]
        input: PathBuf,
        /// Largest Burling index tried by β and γ.
        #[arg(long, default_value_t = invariants::DEFAULT_KMAX)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        /// Write the certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Build and verify the explicit witness map of a containment lemma.
    Lemma(LemmaArgs),
    /// Look for a (k+1)-clique or an induced B_{k+1}.
    Decide {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Region intersection models and their partitions.
    Region {
        #[command(subcommand)]
        cmd: RegionCmd,
    },
    /// Multicover extraction and validation.
    Covers {
        #[command(subcommand)]
        cmd: CoversCmd,
    },
    /// Re-check certificates and witness maps.
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// Time the partition algorithm on identity models and write a CSV.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Comma-separated g-vertex counts; empty gives a header-only table.
        #[arg(long, default_value = "")]
        sizes: String,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, default_value_t = 1)]
        gamma: usize,
        #[arg(long, default_value_t = 1)]
        delta: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    B,
    Bprime,
    Bddot,
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantName {
    Chi,
    Omega,
    Beta,
    Gamma,
}

#[derive(Args)]
struct LemmaArgs {
    /// `3.1`, `3.2`, `3.3`, `3.4`, `3.5`, `3.6`, `3.7iii`, `3.7iv`, `2.1i` or `2.1ii`.
    id: String,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Marked-graph files for graph-valued lemmas.
    #[arg(long)]
    g: Option<PathBuf>,
    #[arg(long)]
    h: Option<PathBuf>,
    #[arg(long)]
    inner: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_WITNESS_CAP)]
    cap: u128,
    /// Write the witness map here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    pattern_out: Option<PathBuf>,
    #[arg(long)]
    host_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum RegionCmd {
    /// Write a seeded region model.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Vertex count for path, cycle, tree and tree-regions.
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Side length for grid and grid3.
        #[arg(long, default_value_t = 10)]
        w: usize,
        /// Clique size for planted.
        #[arg(long, default_value_t = 4)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that every region is connected and the graph is the
    /// intersection graph.
    Validate {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the partition-or-model search with S = V.
    Partition {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        gamma: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// δ-disjoint families of bounded radius, or a minor model.
    Asdim {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a partition, disjoint-partition or model certificate.
    CheckCert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Grid,
    Grid3,
    Tree,
    TreeRegions,
    Planted,
}

#[derive(Subcommand)]
enum CoversCmd {
    /// Greedy multicover extraction.
    Extract {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        len: usize,
        #[arg(long, value_enum, default_value_t = SelectorArg::MaxChiN2)]
        selector: SelectorArg,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a multicover, optionally with a skewer.
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        multicover: PathBuf,
        #[arg(long)]
        independent: bool,
        #[arg(long)]
        skewer: Option<PathBuf>,
    },
    /// Validate an s-clique-multicover and classify its index pairs.
    CheckClique {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long, default_value_t = covers::DEFAULT_SKEW_SUBSET_CAP)]
        subset_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SelectorArg {
    MaxChiN2,
    MinId,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// An invariant or decision certificate against a graph.
    Cert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// A witness map between two marked graphs.
    Map {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// Check an induced embedding of the underlying graphs only.
        #[arg(long)]
        ignore_marks: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Path,
    Grid,
    Tree,
}

enum Failure {
    /// A certificate or witness did not verify.
    Verify(String),
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::HostNotMinorFree(_) => Failure::Verify(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Res = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_marked(path: &Path) -> Result<MarkedGraph, Failure> {
    parse_marked_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Graph files may carry marks; the invariants ignore them.
fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(read_marked(path)?.into_graph())
}

fn read_model(path: &Path) -> Result<RegionModel, Failure> {
    region::parse_region_model(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Res {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Writes to `out`, or to standard output when no path is given.
fn emit(out: Option<&Path>, text: &str) -> Res {
    match out {
        Some(p) => write_file(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Generate { variant, k, cap, out } => cmd_generate(variant, k, cap, out.as_deref()),
        Cmd::Invariant {
            name,
            input,
            kmax,
            budget,
            cert,
        } => cmd_invariant(name, &input, kmax, Budget(budget), cert.as_deref()),
        Cmd::Lemma(args) => cmd_lemma(&args),
        Cmd::Decide { input, k, budget, cert } => cmd_decide(&input, k, Budget(budget), cert.as_deref()),
        Cmd::Region { cmd } => cmd_region(cmd),
        Cmd::Covers { cmd } => cmd_covers(cmd),
        Cmd::Check { cmd } => cmd_check(cmd),
        Cmd::Bench {
            suite,
            sizes,
            t,
            gamma,
            delta,
            out,
        } => parse_sizes(&sizes).and_then(|sizes| cmd_bench(suite, &sizes, t, gamma, delta, out.as_deref())),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("budget exhausted: {msg}");
            ExitCode::from(3)
        }
    }
}

fn cmd_generate(variant: Variant, k: usize, cap: u128, out: Option<&Path>) -> Res {
    let (v, name) = match variant {
        Variant::B => (BurlingVariant::Original, "B"),
        Variant::Bprime => (BurlingVariant::Prime, "B'"),
        Variant::Bddot => (BurlingVariant::Ddot, "B''"),
    };
    let g = burling::generate_capped(v, k, cap)?;
    emit(out, &write_marked_graph(&g))?;
    if out.is_some() {
        println!("{name}_{k}: {} vertices, {} edges, {} marked", g.n(), g.graph().m(), g.num_marked());
    }
    Ok(())
}

fn report_line(name: &str, r: &InvariantReport) -> String {
    match r.exactness {
        Exactness::BudgetExhausted if r.lower_bound != r.value => {
            format!("{name}={} {} lower={}", r.value, r.exactness.label(), r.lower_bound)
        }
        _ => format!("{name}={} {}", r.value, r.exactness.label()),
    }
}

fn cmd_invariant(name: InvariantName, input: &Path, kmax: usize, budget: Budget, cert: Option<&Path>) -> Res {
    let g = read_graph(input)?;
    let (label, report) = match name {
        InvariantName::Chi => ("chi", invariants::chromatic_number(&g, budget)),
        InvariantName::Omega => ("omega", invariants::clique_number(&g, budget)),
        InvariantName::Beta => ("beta", invariants::beta(&g, kmax, budget)?),
        InvariantName::Gamma => ("gamma", invariants::gamma(&g, kmax, budget)?),
    };
    if !invariants::validate_report(&g, &report)? {
        return Err(Failure::Verify(format!("{label} certificate does not re-validate")));
    }
    println!("{}", report_line(label, &report));
    if let (Some(path), Some(c)) = (cert, &report.certificate) {
        write_file(path, &invariants::write_certificate(report.value, c))?;
    }
    if report.exactness == Exactness::BudgetExhausted {
        return Err(Failure::Budget(format!("{label} is not exact")));
    }
    Ok(())
}

fn cmd_lemma(a: &LemmaArgs) -> Res {
    let id = LemmaId::parse(&a.id)?;
    let load = |p: &Option<PathBuf>| p.as_deref().map(read_marked).transpose();
    let params = LemmaParams {
        k: a.k,
        m: a.m,
        n: a.n,
        g: load(&a.g)?,
        h: load(&a.h)?,
        inner: load(&a.inner)?,
        cap: Some(a.cap),
    };
    let w = burling::witness_lemma(id, &params)?;
    let verdict = verify_embedding(&w.pattern, &w.host, &w.map);
    if let Some(p) = &a.out {
        write_file(p, &write_map(&w.map))?;
    }
    if let Some(p) = &a.pattern_out {
        write_file(p, &write_marked_graph(&w.pattern))?;
    }
    if let Some(p) = &a.host_out {
        write_file(p, &write_marked_graph(&w.host))?;
    }
    match verdict {
        Ok(()) => {
            println!(
                "lemma {}: pass (pattern {} vertices, host {} vertices)",
                a.id,
                w.pattern.n(),
                w.host.n()
            );
            Ok(())
        }
        Err(e) => {
            println!("lemma {}: fail", a.id);
            Err(Failure::Verify(e.to_string()))
        }
    }
}

fn cmd_decide(input: &Path, k: usize, budget: Budget, cert: Option<&Path>) -> Res {
    let g = read_graph(input)?;
    let d = invariants::promise_color_decide(&g, k, budget)?;
    if !invariants::validate_decision(&g, k, &d)? {
        return Err(Failure::Verify("decision certificate does not re-validate".into()));
    }
    match &d {
        Decision::Clique(_) => println!("witness: clique {}", k + 1),
        Decision::Burling(_) => println!("witness: burling {}", k + 1),
        Decision::NoWitness => println!("no-witness"),
        Decision::BudgetExhausted => {
            println!("budget-exhausted");
            return Err(Failure::Budget("no witness found within budget".into()));
        }
    }
    if let (Some(path), Some((value, c))) = (cert, invariants::decision_certificate(k, &d)) {
        write_file(path, &invariants::write_certificate(value, &c))?;
    }
    Ok(())
}

fn generate_model(family: Family, n: usize, w: usize, t: usize, seed: u64) -> Result<RegionModel, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(Failure::Input(what.into())) };
    Ok(match family {
        Family::Path => RegionModel::identity(Graph::path(n)),
        Family::Cycle => {
            need(n >= 3, "a cycle needs at least 3 vertices")?;
            RegionModel::identity(Graph::cycle(n))
        }
        Family::Grid => RegionModel::identity(Graph::grid(w, w)),
        Family::Grid3 => RegionModel::identity(rgen::grid3(w, w, w)),
        Family::Tree => RegionModel::identity(rgen::random_tree(&mut rng, n)),
        Family::TreeRegions => {
            need(n >= 1, "tree-regions needs at least 1 vertex")?;
            let h = rgen::random_tree(&mut rng, n);
            rgen::random_regions(&mut rng, h, n, 5)
        }
        Family::Planted => {
            need(t >= 1, "planted needs t >= 1")?;
            let (h, _) = rgen::planted_minor_host(&mut rng, t, 3);
            rgen::covering_regions(&mut rng, h, t, 4)
        }
    })
}

fn cmd_region(cmd: RegionCmd) -> Res {
    match cmd {
        RegionCmd::Generate {
            family,
            n,
            w,
            t,
            seed,
            out,
        } => {
            let rm = generate_model(family, n, w, t, seed)?;
            emit(out.as_deref(), &region::write_region_model(&rm))?;
            if out.is_some() {
                println!("model: g {} vertices, host {} vertices, size {}", rm.g.n(), rm.h.n(), rm.size());
            }
            Ok(())
        }
        RegionCmd::Validate { input } => {
            let rm = read_model(&input)?;
            region::validate_region_model(&rm).map_err(|e| Failure::Verify(e.to_string()))?;
            println!(
                "valid: g {} vertices {} edges, host {} vertices, size {}",
                rm.g.n(),
                rm.g.m(),
                rm.h.n(),
                rm.size()
            );
            Ok(())
        }
        RegionCmd::Partition {
            input,
            gamma,
            delta,
            t,
            out,
        } => {
            let rm = read_model(&input)?;
            let all: Vec<usize> = (0..rm.g.n()).collect();
            match region::partition_or_model(&rm, &all, gamma, delta, t)? {
                Outcome::Partition(p) => {
                    region::validate_partition(&rm.g, &p).map_err(|e| Failure::Verify(e.to_string()))?;
                    println!("partition: {} classes (bound {}), rho {}", p.classes.len(), p.max_classes, p.rho);
                    if let Some(o) = out {
                        write_file(&o, &region::write_partition(&p))?;
                    }
                }
                Outcome::Model(m) => {
                    println!("model: K_{} minor anchored at {:?}", m.t, model_anchors(&m));
                    if let Some(o) = out {
                        write_file(&o, &region::write_t_model(&m))?;
                    }
                }
            }
            Ok(())
        }
        RegionCmd::Asdim { input, delta, t, out } => {
            let rm = read_model(&input)?;
            match region::asdim_partition(&rm, delta, t)? {
                AsdimOutcome::Partition(p) => {
                    region::validate_disjoint_partition(&rm.g, &p).map_err(|e| Failure::Verify(e.to_string()))?;
                    let sets: usize = p.families.iter().map(Vec::len).sum();
                    println!(
                        "partition: {} families (bound {}), {} sets, radius {}",
                        p.families.len(),
                        p.max_families,
                        sets,
                        p.radius
                    );
                    if let Some(o) = out {
                        write_file(&o, &region::write_disjoint_partition(&p))?;
                    }
                }
                AsdimOutcome::Model(m) => {
                    println!("model: K_{} minor anchored at {:?}", m.t, model_anchors(&m));
                    if let Some(o) = out {
                        write_file(&o, &region::write_t_model(&m))?;
                    }
                }
            }
            Ok(())
        }
        RegionCmd::CheckCert { input, cert } => {
            let rm = read_model(&input)?;
            let c = region::parse_certificate(&read(&cert)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", cert.display())))?;
            let (kind, verdict) = match &c {
                AnyCertificate::Partition(p) => ("partition", region::validate_partition(&rm.g, p).map_err(|e| e.to_string())),
                AnyCertificate::Disjoint(p) => (
                    "disjoint-partition",
                    region::validate_disjoint_partition(&rm.g, p).map_err(|e| e.to_string()),
                ),
                AnyCertificate::Model(m) => ("model", region::validate_t_model(&rm, m).map_err(|e| e.to_string())),
            };
            verdict.map_err(Failure::Verify)?;
            println!("{kind}: pass");
            Ok(())
        }
    }
}

fn model_anchors(m: &region::TModelCertificate) -> Vec<usize> {
    m.pairs.iter().map(|(x, _)| *x).collect()
}

fn cmd_covers(cmd: CoversCmd) -> Res {
    match cmd {
        CoversCmd::Extract {
            input,
            len,
            selector,
            budget,
            out,
        } => {
            let g = read_graph(&input)?;
            let sel = match selector {
                SelectorArg::MaxChiN2 => Selector::MaxChiN2,
                SelectorArg::MinId => Selector::MinId,
            };
            let mc = covers::extract_multicover(&g, len, sel, Budget(budget));
            covers::validate_multicover(&g, &mc, false).map_err(|e| Failure::Verify(e.to_string()))?;
            emit(out.as_deref(), &covers::write_multicover(&mc))?;
            if out.is_some() {
                println!("multicover: length {}, |C| = {}", mc.len(), mc.c.len());
            }
            Ok(())
        }
        CoversCmd::Check {
            input,
            multicover,
            independent,
            skewer,
        } => {
            let g = read_graph(&input)?;
            let mc = covers::parse_multicover(&read(&multicover)?)?;
            covers::validate_multicover(&g, &mc, independent).map_err(|e| Failure::Verify(e.to_string()))?;
            if let Some(path) = skewer {
                let sk = covers::parse_skewer(&read(&path)?, &mc)?;
                covers::validate_skewer(&g, &mc, &sk).map_err(|e| Failure::Verify(format!("skewer: {e}")))?;
                println!("multicover: pass, skewer: pass");
            } else {
                println!("multicover: pass");
            }
            Ok(())
        }
        CoversCmd::CheckClique {
            input,
            cert,
            subset_cap,
        } => {
            let g = read_graph(&input)?;
            let cm = covers::parse_clique_multicover(&read(&cert)?)?;
            let report =
                covers::validate_clique_multicover(&g, &cm, subset_cap).map_err(|e| Failure::Verify(e.to_string()))?;
            println!("clique-multicover: pass, tidy={}", report.tidy);
            for p in &report.pairs {
                println!("pair {} {}: {}", p.i, p.j, p.label());
            }
            if report.skew_subsets_truncated {
                println!("skew subsets: {} (truncated)", report.skew_subsets.len());
            } else {
                println!("skew subsets: {}", report.skew_subsets.len());
            }
            Ok(())
        }
    }
}

fn cmd_check(cmd: CheckCmd) -> Res {
    match cmd {
        CheckCmd::Cert { input, cert } => {
            let g = read_graph(&input)?;
            let (value, c) = invariants::parse_certificate(&read(&cert)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", cert.display())))?;
            if !invariants::check_certificate(&g, value, &c)? {
                return Err(Failure::Verify(format!("certificate for value {value} is invalid")));
            }
            println!("certificate: pass");
            Ok(())
        }
        CheckCmd::Map {
            pattern,
            host,
            map,
            ignore_marks,
        } => {
            let p = read_marked(&pattern)?;
            let h = read_marked(&host)?;
            let m = parse_map(&read(&map)?, !ignore_marks)?;
            verify_embedding(&p, &h, &m).map_err(|e| Failure::Verify(e.to_string()))?;
            println!("map: pass");
            Ok(())
        }
    }
}

fn parse_sizes(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Input(format!("bad size `{t}`"))))
        .collect()
}

fn cmd_bench(suite: Suite, sizes: &[usize], t: usize, gamma: usize, delta: usize, out: Option<&Path>) -> Res {
    let mut csv = String::from("suite,n,t,gamma,delta,millis,classes\n");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for &n in sizes {
        let (name, rm) = match suite {
            Suite::Path => ("path", RegionModel::identity(Graph::path(n))),
            Suite::Grid => {
                let w = (n as f64).sqrt() as usize;
                ("grid", RegionModel::identity(Graph::grid(w, w)))
            }
            Suite::Tree => ("tree", RegionModel::identity(rgen::random_tree(&mut rng, n))),
        };
        let all: Vec<usize> = (0..rm.g.n()).collect();
        let start = Instant::now();
        let outcome = region::partition_or_model(&rm, &all, gamma, delta, t)?;
        let millis = start.elapsed().as_secs_f64() * 1e3;
        // a model outcome is recorded with zero classes
        let classes = match outcome {
            Outcome::Partition(p) => p.classes.len(),
            Outcome::Model(_) => 0,
        };
        writeln!(csv, "{name},{},{t},{gamma},{delta},{millis:.3},{classes}", rm.g.n()).unwrap();
    }
    emit(out, &csv)
}
