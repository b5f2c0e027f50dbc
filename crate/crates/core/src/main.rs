use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lie_orbits::chevalley::ChevalleyAlgebra;
use lie_orbits::curated;
use lie_orbits::dynkin::{self, Exclusion, PairingVerdict, WeightedDiagram};
use lie_orbits::linalg::Q;
use lie_orbits::matmodel;
use lie_orbits::partitions::{enumerate_orbits, ClassicalType, JordanOrbit, OrbitPoset};
use lie_orbits::report::{all_ok, witness_entry, Witness};
use lie_orbits::rootsys::{CartanType, Family, RootSystem};
use lie_orbits::suites::{self, Config};
use lie_orbits::Error;

#[derive(Parser)]
#[command(name = "lie-orbits", version, about = "Exact computations on simple Lie algebras and nilpotent orbits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots.
    Roots {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long)]
        json: bool,
    },
    /// Dimension data of the Chevalley algebra.
    Algebra {
        #[arg(long = "type")]
        ty: CartanType,
        /// Print the algebra dimension.
        #[arg(long)]
        dim: bool,
        /// Print the dimension of the minimal nilpotent orbit.
        #[arg(long)]
        orbit_dim_min: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run one criterion on one diagram, or validate the shared-orbit table.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Nilpotent orbits of a classical algebra (or G2, F4).
    #[command(subcommand)]
    Orbit(OrbitCommand),
    /// Matrix models.
    #[command(subcommand)]
    Model(ModelCommand),
    /// Run the verification suites.
    Verify {
        /// Restrict to the named suite (repeatable).
        #[arg(long)]
        only: Vec<String>,
        #[arg(long, default_value_t = suites::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Record per-check runtimes (output is then not reproducible).
        #[arg(long)]
        timing: bool,
        /// List suite names and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long = "type")]
    ty: CartanType,
    /// Labels in Bourbaki order, e.g. `0,2`.
    #[arg(long)]
    diagram: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Centralizers of the generic element and of root vectors of n.
    KeyLemma(DiagramArgs),
    /// Whether `[N, Q] != 0` for all nonzero N in g(2), Q in g(-2).
    Pairing {
        #[command(flatten)]
        d: DiagramArgs,
        #[arg(long, default_value_t = dynkin::DEFAULT_PAIRING_SEED)]
        seed: u64,
        #[arg(long, default_value_t = dynkin::DEFAULT_PAIRING_SAMPLES)]
        samples: usize,
    },
    /// E-type or F4 exclusion by an explicit commuting pair.
    Exclusion(DiagramArgs),
    /// Validate a shared-orbit table file.
    Table {
        /// Defaults to `$LIE_ORBITS_DATA/shared_orbits.tsv` or the built-in table.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum OrbitCommand {
    List {
        #[arg(long = "type")]
        ty: CartanType,
        /// Also print the covering relations of the closure order.
        #[arg(long)]
        poset: bool,
        #[arg(long)]
        json: bool,
    },
    Info {
        #[arg(long = "type")]
        ty: CartanType,
        /// Jordan type, e.g. `3,1,1` or `2,2,2,2 II`.
        #[arg(long)]
        partition: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ModelCommand {
    /// The moment map of sp(2n).
    Sp {
        #[arg(long)]
        n: usize,
        /// Print mu(v), its Jordan type, fiber and Kostant-Kirillov rank.
        #[arg(long)]
        demo: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Outcome of a command: printable output plus whether its checks passed.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

fn ok(text: String, json: Value) -> Outcome {
    Outcome { text, json, ok: true }
}

fn witness_json(w: &Witness) -> Value {
    serde_json::to_value(w).unwrap_or(Value::Null)
}

fn roots(ty: CartanType) -> Result<Outcome, Error> {
    let rs = RootSystem::new(ty)?;
    let mut text = format!("{ty}: {} positive roots\n", rs.num_positive());
    let mut list = Vec::new();
    for r in rs.positive_roots() {
        let long = !rs.has_two_lengths() || rs.is_long(r);
        text += &format!("{r}\theight {}\t{}\n", r.height(), if long { "long" } else { "short" });
        list.push(json!({"root": r.coords(), "height": r.height(), "long": long}));
    }
    Ok(ok(
        text,
        json!({"type": ty, "cartan_matrix": rs.cartan_matrix(), "positive_roots": list}),
    ))
}

fn algebra_info(ty: CartanType, dim: bool, orbit_dim_min: bool) -> Result<Outcome, Error> {
    let g = ChevalleyAlgebra::from_type(ty)?;
    let all = !dim && !orbit_dim_min;
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    obj.insert("type".into(), json!(ty));
    if dim || all {
        text += &format!("dim {ty} = {}\n", g.dim());
        obj.insert("dim".into(), json!(g.dim()));
        obj.insert("rank".into(), json!(g.rank()));
    }
    if orbit_dim_min || all {
        let d = g.orbit_dimension(&g.highest_root_vector())?;
        text += &format!("minimal orbit: dim {d}, projective dim {}\n", d - 1);
        obj.insert("min_orbit_dim".into(), json!(d));
        obj.insert("min_orbit_projective_dim".into(), json!(d - 1));
        obj.insert("min_orbit_diagram".into(), json!(dynkin::minimal_orbit_diagram(&g).labels()));
    }
    Ok(ok(text, Value::Object(obj)))
}

fn setup(d: &DiagramArgs) -> Result<(ChevalleyAlgebra, WeightedDiagram, dynkin::Grading), Error> {
    let g = ChevalleyAlgebra::from_type(d.ty)?;
    let wd = WeightedDiagram::parse(d.ty, &d.diagram)?;
    let gr = dynkin::grading_from_diagram(&g, &wd)?;
    Ok((g, wd, gr))
}

fn key_lemma(d: &DiagramArgs) -> Result<Outcome, Error> {
    let (g, wd, gr) = setup(d)?;
    let mut candidates = Vec::new();
    match dynkin::generic_element(&g, &gr) {
        Ok(t) => candidates.push(("generic element of g(2)".to_string(), t.n0)),
        Err(Error::NoTriple) => {}
        Err(e) => return Err(e),
    }
    for k in gr.n() {
        candidates.push((g.basis_label(k), g.basis(k)));
    }
    let mut text = format!("{wd}: dim g(i) = {:?}\n", dims(&gr));
    for (name, n) in &candidates {
        if let Some(z) = dynkin::key_lemma_violation(&g, &gr, n)? {
            let mut w = Witness::new();
            w.insert("N".into(), witness_entry(&g, n));
            w.insert("Z".into(), witness_entry(&g, &z));
            text += &format!("FAIL: the centralizer of {name} leaves n_perp\n  N = {:?}\n  Z = {:?}\n", w["N"], w["Z"]);
            return Ok(Outcome {
                text,
                json: json!({"diagram": wd, "holds": false, "element": name, "witness": witness_json(&w)}),
                ok: false,
            });
        }
    }
    text += &format!("PASS: {} tested elements have centralizers inside n_perp\n", candidates.len());
    Ok(ok(text, json!({"diagram": wd, "holds": true, "tested": candidates.len()})))
}

fn dims(gr: &dynkin::Grading) -> Vec<(i64, usize)> {
    gr.pieces().iter().map(|(i, v)| (*i, v.len())).collect()
}

fn pairing(d: &DiagramArgs, seed: u64, samples: usize) -> Result<Outcome, Error> {
    let (g, wd, gr) = setup(d)?;
    let v = dynkin::pairing_criterion_with(&g, &gr, seed, samples)?;
    let head = format!("{wd}: dim g(2) = {}, dim g(-2) = {}\n", gr.dim_piece(2), gr.dim_piece(-2));
    Ok(match v {
        PairingVerdict::Holds => ok(head + "PASS: holds (exact)\n", json!({"diagram": wd, "status": "pass"})),
        PairingVerdict::ProbabilisticHolds { samples, seed } => ok(
            head + &format!("PROB: no witness among {samples} samples (seed {seed})\n"),
            json!({"diagram": wd, "status": "probabilistic", "samples": samples, "seed": seed}),
        ),
        PairingVerdict::FailsWithWitness { n, q } => {
            let mut w = Witness::new();
            w.insert("N".into(), witness_entry(&g, &n));
            w.insert("Q".into(), witness_entry(&g, &q));
            Outcome {
                text: head + &format!("FAIL: [N, Q] = 0\n  N = {:?}\n  Q = {:?}\n", w["N"], w["Q"]),
                json: json!({"diagram": wd, "status": "fail", "witness": witness_json(&w)}),
                ok: false,
            }
        }
    })
}

fn exclusion(d: &DiagramArgs) -> Result<Outcome, Error> {
    let (g, wd, _) = setup(d)?;
    let v = match d.ty.family {
        Family::E => dynkin::etype_exclusion(&g, &wd)?,
        Family::F => dynkin::f4_exclusion(&g, &wd)?,
        _ => {
            return Err(Error::WrongType {
                op: "exclusion",
                expected: "E6, E7, E8 or F4",
                got: d.ty,
            })
        }
    };
    Ok(match v {
        Exclusion::Excluded { n, z, roots, witness_root } => {
            let mut w = Witness::new();
            w.insert("N".into(), witness_entry(&g, &n));
            w.insert("Z".into(), witness_entry(&g, &z));
            let roots: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
            Outcome {
                text: format!(
                    "{wd}: EXCLUDED\n  N = sum of X over {roots:?}\n  Z = X{witness_root} commutes with N and lies outside n_perp\n"
                ),
                json: json!({"diagram": wd, "verdict": "excluded", "witness": witness_json(&w)}),
                ok: false,
            }
        }
        Exclusion::InDegreeTwo { n } => ok(
            format!("{wd}: element in g(2); decided by the pairing criterion\n  N = {:?}\n", witness_entry(&g, &n)),
            json!({"diagram": wd, "verdict": "degree-two", "n": witness_entry(&g, &n)}),
        ),
        Exclusion::NotExcluded => ok(format!("{wd}: not excluded\n"), json!({"diagram": wd, "verdict": "not-excluded"})),
    })
}

fn check_table(file: Option<PathBuf>) -> Result<Outcome, Error> {
    let tables = match file {
        Some(p) => curated::load_tables(&p)?,
        None => curated::load_default()?,
    };
    let report = curated::validate_tables(&tables)?;
    let mut text = format!(
        "{} rows, {} exceptional records, {} checks\n",
        tables.shared.len(),
        tables.exceptional.len(),
        report.checks.len()
    );
    for c in &report.checks {
        text += &format!(
            "{} {}: {} ({})\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.row,
            c.check,
            c.detail
        );
    }
    Ok(Outcome {
        text,
        ok: report.passed(),
        json: json!({"rows": tables.shared, "exceptional": tables.exceptional, "checks": report.checks}),
    })
}

fn orbit_list(ty: CartanType, poset: bool) -> Result<Outcome, Error> {
    if ty.family.is_classical() {
        let ct = ClassicalType::new(ty)?;
        let orbits = enumerate_orbits(ct);
        let mut text = format!("{ty}: {} nilpotent orbits\n", orbits.len());
        let mut list = Vec::new();
        for o in &orbits {
            let wd = o.weighted_diagram();
            text += &format!("{o}\tdim {}\tdiagram {:?}\tpi1 {}\n", o.orbit_dim(), wd.labels(), o.pi1_order());
            list.push(json!({"partition": o.parts(), "label": o.label(), "dim": o.orbit_dim(), "diagram": wd.labels(), "pi1_order": o.pi1_order()}));
        }
        let mut obj = json!({"type": ty, "orbits": list});
        if poset {
            let p = OrbitPoset::new(ct);
            let edges = p.edges();
            text += "closure order (lower < upper):\n";
            for &(i, j) in &edges {
                text += &format!("{} < {}\n", p.orbits()[i], p.orbits()[j]);
            }
            obj["covers"] = json!(edges);
        }
        return Ok(ok(text, obj));
    }
    if !matches!(ty.family, Family::G | Family::F) {
        return Err(Error::WrongType {
            op: "orbit list",
            expected: "a classical type, G2 or F4",
            got: ty,
        });
    }
    if poset {
        return Err(Error::WrongType {
            op: "orbit list --poset",
            expected: "a classical type",
            got: ty,
        });
    }
    let g = ChevalleyAlgebra::from_type(ty)?;
    let mut text = format!("{ty}: orbit diagrams found by sl2 completion\n0\tdim 0\n");
    let mut list = vec![json!({"diagram": vec![0; g.rank()], "dim": 0})];
    for wd in suites::orbit_diagrams(&g)? {
        let gr = dynkin::grading_from_diagram(&g, &wd)?;
        let d = g.orbit_dimension(&dynkin::generic_element(&g, &gr)?.n0)?;
        text += &format!("{:?}\tdim {d}\n", wd.labels());
        list.push(json!({"diagram": wd.labels(), "dim": d}));
    }
    Ok(ok(text, json!({"type": ty, "orbits": list})))
}

fn orbit_info(ty: CartanType, partition: &str) -> Result<Outcome, Error> {
    let ct = ClassicalType::new(ty)?;
    let o = JordanOrbit::parse(ct, partition)?;
    let poset = OrbitPoset::new(ct);
    let wd = o.weighted_diagram();
    let below: Vec<String> = poset.covered_by(&o).iter().map(|x| x.to_string()).collect();
    let codim = poset.boundary_codim(&o);
    let text = format!(
        "{ty} orbit {o}\n  dim {}\n  weighted diagram {:?}\n  pi1 order {}\n  orbits directly below: {}\n  smallest boundary codimension: {}\n",
        o.orbit_dim(),
        wd.labels(),
        o.pi1_order(),
        if below.is_empty() { "none".to_string() } else { below.join(", ") },
        codim.map_or("none".to_string(), |c| c.to_string()),
    );
    Ok(ok(
        text,
        json!({"type": ty, "partition": o.parts(), "label": o.label(), "dim": o.orbit_dim(), "diagram": wd.labels(), "pi1_order": o.pi1_order(), "covers": below, "boundary_codim": codim}),
    ))
}

fn fmt_vec(v: &[Q]) -> String {
    let s: Vec<String> = v.iter().map(Q::to_string).collect();
    format!("({})", s.join(", "))
}

fn model_sp(n: usize, demo: bool) -> Result<Outcome, Error> {
    let space = matmodel::SymplecticSpace::new(n)?;
    let mut text = format!(
        "sp({}): V = Q^{}, omega(u, w) = u^T J w with J = [[0, I], [-I, 0]]; mu(v) = v v^T J\n",
        2 * n,
        2 * n
    );
    if !demo {
        return Ok(ok(text, json!({"n": n})));
    }
    let v = matmodel::sample_vector(0, n);
    let x = matmodel::mu(&space, &v)?.matrix;
    let fiber = matmodel::fiber(&space, &x)?;
    let jt = matmodel::jordan_type(&x);
    let kk = matmodel::kk_rank_at(&space, &v)?;
    text += &format!("v = {}\nmu(v) =\n", fmt_vec(&v));
    let dense = x.to_dense();
    for row in &dense {
        text += &format!("  {}\n", fmt_vec(row));
    }
    text += &format!(
        "in sp: {}, mu(v)^2 = 0: {}\nJordan type {:?}\nfiber: {}\nKostant-Kirillov rank {kk} (orbit dimension {})\n",
        space.is_in_sp(&x),
        x.mul(&x).is_zero(),
        jt,
        fiber.iter().map(|w| fmt_vec(w)).collect::<Vec<_>>().join(", "),
        2 * n
    );
    let passed = fiber.len() == 2 && kk == 2 * n;
    let dense_s: Vec<Vec<String>> = dense.iter().map(|r| r.iter().map(Q::to_string).collect()).collect();
    Ok(Outcome {
        text,
        ok: passed,
        json: json!({
            "n": n,
            "v": v.iter().map(Q::to_string).collect::<Vec<_>>(),
            "mu": dense_s,
            "jordan_type": jt,
            "fiber": fiber.iter().map(|w| w.iter().map(Q::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "kk_rank": kk,
        }),
    })
}

fn verify(only: Vec<String>, seed: u64, jobs: usize, timing: bool, list: bool) -> Result<Outcome, Error> {
    if list {
        let text: String = suites::SUITES.iter().map(|(n, d, _)| format!("{n}\t{d}\n")).collect();
        return Ok(ok(text, json!(suites::suite_names())));
    }
    let reports = suites::run(&Config { seed, timing }, &only, jobs)?;
    let passed = all_ok(&reports);
    let failed = reports.iter().filter(|r| !r.status.is_ok()).count();
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    text += &format!("{} checks, {} failed\n", reports.len(), failed);
    Ok(Outcome {
        text,
        ok: passed,
        json: json!({"seed": seed, "passed": passed, "reports": reports}),
    })
}

fn dispatch(cli: Cli) -> Result<(Outcome, bool), Error> {
    Ok(match cli.command {
        Command::Roots { ty, json } => (roots(ty)?, json),
        Command::Algebra { ty, dim, orbit_dim_min, json } => (algebra_info(ty, dim, orbit_dim_min)?, json),
        Command::Check(c) => match c {
            CheckCommand::KeyLemma(d) => (key_lemma(&d)?, d.json),
            CheckCommand::Pairing { d, seed, samples } => (pairing(&d, seed, samples)?, d.json),
            CheckCommand::Exclusion(d) => (exclusion(&d)?, d.json),
            CheckCommand::Table { file, json } => (check_table(file)?, json),
        },
        Command::Orbit(o) => match o {
            OrbitCommand::List { ty, poset, json } => (orbit_list(ty, poset)?, json),
            OrbitCommand::Info { ty, partition, json } => (orbit_info(ty, &partition)?, json),
        },
        Command::Model(ModelCommand::Sp { n, demo, json }) => (model_sp(n, demo)?, json),
        Command::Verify { only, seed, jobs, timing, list, json } => (verify(only, seed, jobs, timing, list)?, json),
    })
}

/// Exit code 2 for bad input, 1 for failed computations.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::InvalidRank { .. }
        | Error::ParseType(_)
        | Error::WrongType { .. }
        | Error::DiagramLength { .. }
        | Error::DiagramLabel(_)
        | Error::InvalidPartition { .. }
        | Error::TableParse { .. }
        | Error::Io(_)
        | Error::Json(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok((out, as_json)) => {
            if as_json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
