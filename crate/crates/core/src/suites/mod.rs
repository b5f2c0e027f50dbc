//! Verification suites replaying the orbit-by-orbit computations.
//!
//! Each suite returns its verdicts in a fixed order; [`run`] executes the
//! selected suites on a rayon pool and reports them in declaration order,
//! so output is byte-identical for a fixed seed whatever the job count.

pub mod fixtures;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chevalley::ChevalleyAlgebra;
use crate::curated;
use crate::dynkin::{self, Exclusion, PairingVerdict, WeightedDiagram};
use crate::linalg::{q, q_frac, Q};
use crate::matmodel;
use crate::partitions::{self, ClassicalType, OrbitPoset};
use crate::report::{witness_entry, Status, VerdictReport, Witness};
use crate::rootsys::{e_type_sigma_facts, CartanType, Family, Root};
use crate::Error;

pub const DEFAULT_SEED: u64 = 20_260_101;

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    /// Record per-check wall-clock time (makes output nondeterministic).
    pub timing: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            timing: false,
        }
    }
}

type SuiteFn = fn(&Config) -> Vec<VerdictReport>;

/// `(name, description, runner)` in declaration order.
pub const SUITES: &[(&str, &str, SuiteFn)] = &[
    ("exceptional-dims", "projective dimensions of exceptional minimal orbits", exceptional_dims),
    ("classical-dims", "classical minimal orbits: partition formula against centralizers", classical_dims),
    ("orbit-posets", "closure order: unique minimal nonzero orbit, boundary codimension", orbit_posets),
    ("nilpotency", "three characterizations of nilpotent elements agree", nilpotency),
    ("g2-classification", "pairing criterion on the orbits of G2", g2_classification),
    ("short-root-diagrams", "short-root orbit diagrams and theta(H) = 2", short_root_diagrams),
    ("centralizer-test", "centralizers of elements of n inside n_perp", centralizer_test),
    ("f4-exclusion", "F4 diagrams excluded by an explicit commuting pair", f4_exclusion),
    ("e-type", "sum of simple roots in E6, E7, E8 and the E8 orthogonal pair", e_type),
    ("table", "shared-orbit table against partitions and Lie computations", table),
    ("sp-model", "moment map of the symplectic minimal orbit", sp_model),
    ("properties", "Jacobi, invariance, grading and omega-kernel on random fixtures", properties),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Runs the named suites (all when `only` is empty) on `jobs` threads.
pub fn run(config: &Config, only: &[String], jobs: usize) -> Result<Vec<VerdictReport>, Error> {
    for name in only {
        if !SUITES.iter().any(|s| s.0 == name) {
            return Err(Error::ParseType(format!(
                "unknown suite `{name}` (known: {})",
                suite_names().join(", ")
            )));
        }
    }
    let selected: Vec<&(&str, &str, SuiteFn)> = SUITES
        .iter()
        .filter(|s| only.is_empty() || only.iter().any(|o| o == s.0))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Inconsistent(format!("thread pool: {e}")))?;
    let results: Vec<Vec<VerdictReport>> =
        pool.install(|| selected.par_iter().map(|s| (s.2)(config)).collect());
    Ok(results.into_iter().flatten().collect())
}

/// Collects verdicts for one suite, timing each when requested.
struct Suite<'a> {
    name: &'static str,
    location: &'static str,
    config: &'a Config,
    out: Vec<VerdictReport>,
}

impl<'a> Suite<'a> {
    fn new(name: &'static str, location: &'static str, config: &'a Config) -> Self {
        Self {
            name,
            location,
            config,
            out: Vec::new(),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        let salt = self.name.bytes().fold(0u64, |h, b| h.wrapping_mul(131).wrapping_add(b as u64));
        ChaCha8Rng::seed_from_u64(self.config.seed ^ salt)
    }

    /// Runs `f`, turning errors into failing verdicts.
    fn check(
        &mut self,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(bool, String, Option<Witness>), Error>,
    ) {
        let name = name.into();
        let start = Instant::now();
        let mut r = match f() {
            Ok((passed, detail, witness)) => {
                let r = VerdictReport::new(self.name, name, self.location, passed, detail);
                match witness {
                    Some(w) => r.with_witness(w),
                    None => r,
                }
            }
            Err(e) => VerdictReport::error(self.name, name, self.location, &e),
        };
        if self.config.timing {
            r.runtime_ms = Some(start.elapsed().as_millis() as u64);
        }
        self.out.push(r);
    }

    fn push(&mut self, r: VerdictReport) {
        self.out.push(r);
    }

    fn finish(self) -> Vec<VerdictReport> {
        self.out
    }
}

fn algebra(s: &str) -> Result<ChevalleyAlgebra, Error> {
    ChevalleyAlgebra::from_type(s.parse()?)
}

fn classical(s: &str) -> Result<ClassicalType, Error> {
    ClassicalType::new(s.parse()?)
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> (bool, String, Option<Witness>) {
    let ok = got == want;
    let detail = if ok {
        format!("{got:?}")
    } else {
        format!("expected {want:?}, got {got:?}")
    };
    (ok, detail, None)
}

/// Exceptional minimal orbits, from the centralizer of `X_theta`.
pub const EXCEPTIONAL_PROJECTIVE_DIMS: [(&str, usize); 5] =
    [("G2", 5), ("F4", 15), ("E6", 21), ("E7", 33), ("E8", 57)];

fn exceptional_dims(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("exceptional-dims", "minimal orbit dimensions", config);
    for (t, want) in EXCEPTIONAL_PROJECTIVE_DIMS {
        s.check(format!("dim P(O_min) in {t}"), || {
            let g = algebra(t)?;
            let d = g.projective_orbit_dimension(&g.highest_root_vector())?;
            // Second route: dim g - dim g(0) - dim g(1) on the minimal diagram.
            let gr = dynkin::grading_from_diagram(&g, &dynkin::minimal_orbit_diagram(&g))?;
            let graded = g.dim() - gr.dim_piece(0) - gr.dim_piece(1) - 1;
            Ok((
                d == want && graded == want,
                format!("centralizer {d}, grading {graded}, expected {want}"),
                None,
            ))
        });
    }
    s.finish()
}

const CLASSICAL_TYPES: [&str; 14] = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "C5", "C6",
];

fn classical_dims(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("classical-dims", "minimal orbit dimensions", config);
    for t in CLASSICAL_TYPES {
        s.check(format!("minimal orbit of {t}"), || {
            let g = algebra(t)?;
            let ct = classical(t)?;
            let formula = partitions::minimal_orbit(ct).orbit_dim();
            let centralizer = g.orbit_dimension(&g.highest_root_vector())?;
            let mut ok = formula == centralizer;
            let mut detail = format!("partition formula {formula}, centralizer {centralizer}");
            if t.starts_with('C') {
                let l = ct.rank();
                ok &= centralizer - 1 == 2 * l - 1;
                detail += &format!(", projective {} = 2l-1", centralizer - 1);
            }
            Ok((ok, detail, None))
        });
    }
    s.finish()
}

const POSET_TYPES: [&str; 5] = ["A3", "C2", "C3", "B3", "D4"];

fn orbit_posets(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("orbit-posets", "closure order", config);
    for t in POSET_TYPES {
        s.check(format!("closure order of {t}"), || {
            let ct = classical(t)?;
            let poset = OrbitPoset::new(ct);
            let orbits = poset.orbits();
            let zero = orbits.iter().find(|o| o.is_zero()).unwrap();
            let minimal_nonzero: Vec<String> = orbits
                .iter()
                .filter(|o| !o.is_zero())
                .filter(|o| {
                    !orbits
                        .iter()
                        .any(|p| !p.is_zero() && p != *o && p.closure_leq(o))
                })
                .map(|o| o.to_string())
                .collect();
            let min = partitions::minimal_orbit(ct);
            let below_all = orbits.iter().all(|o| o.is_zero() || min.closure_leq(o));
            let small_codim: Vec<String> = poset
                .edges()
                .into_iter()
                .filter(|&(i, j)| orbits[j].orbit_dim() - orbits[i].orbit_dim() < 2)
                .map(|(i, j)| format!("{} < {}", orbits[i], orbits[j]))
                .collect();
            let covers_zero = poset.covered_by(zero).is_empty();
            let ok = minimal_nonzero == [min.to_string()]
                && below_all
                && small_codim.is_empty()
                && covers_zero;
            Ok((
                ok,
                format!(
                    "{} orbits, minimal nonzero {:?}, edges of codimension < 2: {:?}",
                    orbits.len(),
                    minimal_nonzero,
                    small_codim
                ),
                None,
            ))
        });
    }
    s.finish()
}

/// Algebras of rank at most 3 used for the nilpotency fixtures.
pub const SMALL_TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"];
pub const NILPOTENCY_FIXTURES: usize = 50;

fn nilpotency(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("nilpotency", "nilpotency characterizations", config);
    let mut rng = s.rng();
    let algebras: Result<Vec<ChevalleyAlgebra>, Error> = SMALL_TYPES.iter().map(|t| algebra(t)).collect();
    let algebras = match algebras {
        Ok(a) => a,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "build algebras", s.location, &e));
            return s.finish();
        }
    };
    for (kind, want) in [("nilpotent", true), ("semisimple", false)] {
        s.check(format!("{NILPOTENCY_FIXTURES} {kind} fixtures"), || {
            for i in 0..NILPOTENCY_FIXTURES {
                let g = &algebras[i % algebras.len()];
                let x = if want {
                    fixtures::nilpotent_fixture(g, &mut rng)?
                } else {
                    fixtures::semisimple_fixture(g, &mut rng)?
                };
                let r = dynkin::nilpotency_report(g, &x)?;
                if r.is_nilpotent() != want {
                    let mut w = Witness::new();
                    w.insert("element".into(), witness_entry(g, &x));
                    return Ok((false, format!("fixture {i} in {} misclassified", g.cartan_type()), Some(w)));
                }
            }
            Ok((true, "all three tests agree on every fixture".into(), None))
        });
    }
    s.finish()
}

/// All weighted diagrams of orbits in `g`, found by completing a generic
/// element of `g(2)` to an sl2-triple (exhaustive over `{0,1,2}^rank`).
pub fn orbit_diagrams(g: &ChevalleyAlgebra) -> Result<Vec<WeightedDiagram>, Error> {
    let l = g.rank();
    let mut out = Vec::new();
    for code in 1..3usize.pow(l as u32) {
        let labels: Vec<i64> = (0..l).map(|i| ((code / 3usize.pow(i as u32)) % 3) as i64).collect();
        let wd = WeightedDiagram::new(g.cartan_type(), labels)?;
        if dynkin::is_orbit_diagram(g, &wd)? {
            out.push(wd);
        }
    }
    Ok(out)
}

fn g2_classification(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("g2-classification", "pairing criterion", config);
    let g = match algebra("G2") {
        Ok(g) => g,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "build G2", s.location, &e));
            return s.finish();
        }
    };
    let diagrams = match orbit_diagrams(&g) {
        Ok(d) => d,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "enumerate diagrams", s.location, &e));
            return s.finish();
        }
    };
    s.check("nonzero orbit diagrams of G2", || {
        let labels: Vec<Vec<i64>> = diagrams.iter().map(|d| d.labels().to_vec()).collect();
        Ok(expect_eq(labels, vec![vec![1, 0], vec![0, 1], vec![0, 2], vec![2, 2]]))
    });
    let names = [
        (vec![0, 1], "minimal", 6),
        (vec![1, 0], "short", 8),
        (vec![0, 2], "subregular", 10),
        (vec![2, 2], "regular", 12),
    ];
    let mut holds = BTreeSet::new();
    for wd in &diagrams {
        let (name, dim) = names
            .iter()
            .find(|(l, _, _)| l == wd.labels())
            .map(|(_, n, d)| (*n, *d))
            .unwrap_or(("unnamed", 0));
        s.check(format!("dimension of the {name} orbit {wd}"), || {
            let gr = dynkin::grading_from_diagram(&g, wd)?;
            let t = dynkin::generic_element(&g, &gr)?;
            Ok(expect_eq(g.orbit_dimension(&t.n0)?, dim))
        });
        let verdict = dynkin::grading_from_diagram(&g, wd).and_then(|gr| dynkin::pairing_criterion(&g, &gr));
        let r = match verdict {
            Err(e) => VerdictReport::error(s.name, format!("pairing on {wd}"), s.location, &e),
            Ok(PairingVerdict::Holds) => {
                holds.insert(wd.labels().to_vec());
                VerdictReport::new(s.name, format!("pairing on the {name} orbit {wd}"), s.location, true, "holds (exact)")
            }
            Ok(PairingVerdict::ProbabilisticHolds { samples, seed }) => {
                holds.insert(wd.labels().to_vec());
                VerdictReport::new(
                    s.name,
                    format!("pairing on the {name} orbit {wd}"),
                    s.location,
                    true,
                    format!("no witness in {samples} samples (seed {seed})"),
                )
                .with_status(Status::Probabilistic)
            }
            Ok(PairingVerdict::FailsWithWitness { n, q }) => {
                let ok = g.bracket(&n, &q).map(|b| b.is_zero()).unwrap_or(false);
                let mut w = Witness::new();
                w.insert("N".into(), witness_entry(&g, &n));
                w.insert("Q".into(), witness_entry(&g, &q));
                VerdictReport::new(
                    s.name,
                    format!("pairing on the {name} orbit {wd}"),
                    s.location,
                    ok,
                    "fails: [N, Q] = 0 with N in g(2), Q in g(-2)",
                )
                .with_witness(w)
            }
        };
        s.push(r);
    }
    s.check("pairing holds exactly on minimal and short", || {
        Ok(expect_eq(
            holds.into_iter().collect::<Vec<_>>(),
            vec![vec![0, 1], vec![1, 0]],
        ))
    });
    s.finish()
}

fn short_root_diagrams(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("short-root-diagrams", "short root orbits", config);
    for t in ["B3", "B4", "C2", "C3", "F4"] {
        s.check(format!("short root orbit of {t}"), || {
            let g = algebra(t)?;
            let d = dynkin::diagram_of_root_vector_orbit(&g, &g.root_system().highest_short_root())?;
            Ok((
                dynkin::matches_short_root_display(&d),
                format!("{d} against {:?}", dynkin::short_root_displays(g.rank())),
                None,
            ))
        });
    }
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4", "E6"] {
        s.check(format!("minimal diagram of {t}"), || {
            let g = algebra(t)?;
            let d = dynkin::minimal_orbit_diagram(&g);
            let theta = dynkin::theta_value(&g, &d);
            let mut ok = theta == 2;
            let mut detail = format!("{d}, theta(H) = {theta}");
            if let Ok(ct) = ClassicalType::new(g.cartan_type()) {
                let from_partition = partitions::minimal_orbit(ct).weighted_diagram();
                ok &= from_partition == d;
                detail += &format!(", partition route {from_partition}");
            }
            Ok((ok, detail, None))
        });
    }
    s.finish()
}

fn centralizer_test(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("centralizer-test", "centralizer test", config);
    s.check("G2 subregular: X_{3a1+a2} is centralized outside n_perp", || {
        let g = algebra("G2")?;
        let gr = dynkin::grading_from_diagram(&g, &WeightedDiagram::new(g.cartan_type(), vec![0, 2])?)?;
        let n = g.x_root(&Root(vec![3, 1])).unwrap();
        match dynkin::key_lemma_violation(&g, &gr, &n)? {
            Some(z) => {
                let mut w = Witness::new();
                w.insert("N".into(), witness_entry(&g, &n));
                w.insert("Z".into(), witness_entry(&g, &z));
                let ok = g.bracket(&n, &z)?.is_zero() && !gr.in_n_perp(&z);
                Ok((ok, "violation found as expected".into(), Some(w)))
            }
            None => Ok((false, "expected a centralizing vector outside n_perp".into(), None)),
        }
    });
    for t in ["G2", "B3", "C3", "A3"] {
        s.check(format!("generic elements of every orbit of {t}"), || {
            let g = algebra(t)?;
            let mut bad = Vec::new();
            let diagrams = orbit_diagrams(&g)?;
            for wd in &diagrams {
                let gr = dynkin::grading_from_diagram(&g, wd)?;
                let tr = dynkin::generic_element(&g, &gr)?;
                if !dynkin::key_lemma_check(&g, &gr, &tr.n0)? {
                    bad.push(wd.to_string());
                }
            }
            Ok((bad.is_empty(), format!("{} diagrams, failures {bad:?}", diagrams.len()), None))
        });
    }
    s.finish()
}

fn f4_exclusion(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("f4-exclusion", "F4 exclusion", config);
    let g = match algebra("F4") {
        Ok(g) => g,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "build F4", s.location, &e));
            return s.finish();
        }
    };
    s.check("[X_a + X_b, X_-c] = 0", || {
        let a = g.x_root(&Root(dynkin::F4_ALPHA.to_vec())).ok_or(Error::NotInSubspace("roots"))?;
        let b = g.x_root(&Root(dynkin::F4_BETA.to_vec())).ok_or(Error::NotInSubspace("roots"))?;
        let c = g
            .x_root(&Root(dynkin::F4_GAMMA.to_vec()).neg())
            .ok_or(Error::NotInSubspace("roots"))?;
        let n = &a + &b;
        let z = g.bracket(&n, &c)?;
        let mut w = Witness::new();
        w.insert("N".into(), witness_entry(&g, &n));
        w.insert("Z".into(), witness_entry(&g, &c));
        Ok((z.is_zero(), format!("bracket = {:?}", witness_entry(&g, &z)), Some(w)))
    });
    s.check("all 81 diagrams", || {
        let mut excluded = 0;
        let mut wrong = Vec::new();
        for code in 0..81usize {
            let labels: Vec<i64> = (0..4).map(|i| ((code / 3usize.pow(i)) % 3) as i64).collect();
            let wd = WeightedDiagram::new(g.cartan_type(), labels.clone())?;
            let fires = dynkin::f4_exclusion(&g, &wd)?.is_excluded();
            excluded += fires as usize;
            if fires != (labels[0] + labels[1] + labels[2] >= 2) {
                wrong.push(wd.to_string());
            }
        }
        Ok((wrong.is_empty(), format!("{excluded} excluded, mismatches {wrong:?}"), None))
    });
    s.finish()
}

/// The E8 diagram with label 1 on the two end nodes of the long arms.
pub const E8_DIAGRAM: [i64; 8] = [1, 0, 0, 0, 0, 0, 0, 1];

/// `lambda = (1/2) sum e_i`, `mu = e8 - e7` in epsilon coordinates.
pub fn e8_pair() -> (Vec<Q>, Vec<Q>) {
    let lambda = vec![q_frac(1, 2); 8];
    let mut mu = vec![q(0); 8];
    mu[7] = q(1);
    mu[6] = q(-1);
    (lambda, mu)
}

fn e_type(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("e-type", "E-type root facts", config);
    for t in ["E6", "E7", "E8"] {
        s.check(format!("sigma facts in {t}"), || {
            let rs = crate::rootsys::RootSystem::new(t.parse()?)?;
            let f = e_type_sigma_facts(&rs)?;
            let orth = f.orthogonal.iter().all(|(_, o)| *o);
            Ok((
                f.all_roots() && orth,
                format!(
                    "sigma root: {}, sigma - ends roots: {:?}, pairwise orthogonal: {orth}",
                    f.sigma_is_root, f.sigma_minus_end_is_root
                ),
                None,
            ))
        });
    }
    s.check("E8 diagram: orthogonal lambda, mu in degree 2", || {
        let g = algebra("E8")?;
        let wd = WeightedDiagram::new(g.cartan_type(), E8_DIAGRAM.to_vec())?;
        let (lambda, mu) = e8_pair();
        let p = dynkin::orthogonal_pair_in_degree_two(&g, &wd, &lambda, &mu)?;
        let verdict = dynkin::etype_exclusion(&g, &wd)?;
        Ok((
            p.both_in_degree_two() && p.orthogonal,
            format!(
                "lambda(H) = {}, mu(H) = {}, orthogonal {}, commuting {}, exclusion {}",
                p.lambda_value,
                p.mu_value,
                p.orthogonal,
                p.commuting,
                if verdict == Exclusion::NotExcluded { "not applicable" } else { "applies" }
            ),
            None,
        ))
    });
    s.check("E6 exclusion certificates on all diagrams", || {
        let g = algebra("E6")?;
        let (mut excluded, mut degree_two, mut open) = (0, 0, 0);
        for code in 0..729usize {
            let labels: Vec<i64> = (0..6).map(|i| ((code / 3usize.pow(i)) % 3) as i64).collect();
            let wd = WeightedDiagram::new(g.cartan_type(), labels)?;
            match dynkin::etype_exclusion(&g, &wd)? {
                Exclusion::Excluded { .. } => excluded += 1,
                Exclusion::InDegreeTwo { .. } => degree_two += 1,
                Exclusion::NotExcluded => open += 1,
            }
        }
        Ok((
            excluded + degree_two + open == 729,
            format!("{excluded} excluded, {degree_two} in degree two, {open} not excluded"),
            None,
        ))
    });
    s.finish()
}

fn table(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("table", "shared-orbit table", config);
    let tables = match curated::load_default() {
        Ok(t) => t,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "load tables", s.location, &e));
            return s.finish();
        }
    };
    s.check("rows loaded", || Ok(expect_eq(tables.shared.len(), 9)));
    let report = match curated::validate_tables(&tables) {
        Ok(r) => r,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "validate", s.location, &e));
            return s.finish();
        }
    };
    let mut groups: Vec<String> = tables.shared.iter().map(|r| r.to_string()).collect();
    groups.extend(tables.exceptional.iter().map(|r| format!("{} {}", r.g, r.name)));
    for key in groups {
        s.check(format!("row {key}"), || {
            let checks: Vec<&curated::Check> =
                report.checks.iter().filter(|c| c.row.starts_with(&key)).collect();
            let failed: Vec<String> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{}: {} ({})", c.row, c.check, c.detail))
                .collect();
            let ok = !checks.is_empty() && failed.is_empty();
            let detail = if failed.is_empty() {
                format!("{} checks passed", checks.len())
            } else {
                failed.join("; ")
            };
            Ok((ok, detail, None))
        });
    }
    s.finish()
}

fn sp_model(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("sp-model", "symplectic moment map", config);
    for n in 1..=3usize {
        s.check(format!("sp({}) at a sample vector", 2 * n), || {
            let space = matmodel::SymplecticSpace::new(n)?;
            let v = matmodel::sample_vector(0, n);
            let x = matmodel::mu(&space, &v)?.matrix;
            let fiber = matmodel::fiber(&space, &x)?;
            let jt = matmodel::jordan_type(&x);
            let kk = matmodel::kk_rank_at(&space, &v)?;
            // Minimal orbit of sp(2n): Jordan type (2, 1^{2n-2}), dimension 2n.
            let mut want_parts = vec![2u32];
            want_parts.extend(std::iter::repeat(1).take(2 * n - 2));
            let mut ok = space.is_in_sp(&x)
                && fiber.len() == 2
                && jt.as_deref() == Some(want_parts.as_slice())
                && kk == 2 * n;
            if n >= 2 {
                let min = partitions::minimal_orbit(ClassicalType::new(CartanType::new(Family::C, n)?)?);
                ok &= min.parts() == want_parts.as_slice() && min.orbit_dim() == kk;
            }
            Ok((
                ok,
                format!("fiber size {}, Jordan type {jt:?}, Kostant-Kirillov rank {kk}", fiber.len()),
                None,
            ))
        });
    }
    for n_list in [vec![1], vec![1, 1], vec![1, 2, 1]] {
        s.check(format!("product covering for n = {n_list:?}"), || {
            let c = matmodel::product_cover_degree(&n_list)?;
            let want = 1usize << (n_list.len() - 1);
            Ok((
                c.degree == want,
                format!("degree {} (expected {want}) onto P^{}", c.degree, c.ambient_dim),
                None,
            ))
        });
    }
    s.finish()
}

pub const PROPERTY_FIXTURES: usize = 100;
const PROPERTY_TYPES: [&str; 7] = ["A2", "B2", "C3", "G2", "A3", "B3", "D4"];

fn properties(config: &Config) -> Vec<VerdictReport> {
    let mut s = Suite::new("properties", "algebraic identities", config);
    let mut rng = s.rng();
    let algebras: Result<Vec<ChevalleyAlgebra>, Error> = PROPERTY_TYPES.iter().map(|t| algebra(t)).collect();
    let algebras = match algebras {
        Ok(a) => a,
        Err(e) => {
            s.push(VerdictReport::error(s.name, "build algebras", s.location, &e));
            return s.finish();
        }
    };
    let pick = |i: usize| &algebras[i % algebras.len()];
    s.check(format!("Jacobi identity on {PROPERTY_FIXTURES} random triples"), || {
        for i in 0..PROPERTY_FIXTURES {
            let g = pick(i);
            let (a, b, c) = (
                fixtures::random_element(g, &mut rng),
                fixtures::random_element(g, &mut rng),
                fixtures::random_element(g, &mut rng),
            );
            let t1 = g.bracket(&a, &g.bracket(&b, &c)?)?;
            let t2 = g.bracket(&b, &g.bracket(&c, &a)?)?;
            let t3 = g.bracket(&c, &g.bracket(&a, &b)?)?;
            if !(&(&t1 + &t2) + &t3).is_zero() {
                return Ok((false, format!("fixture {i} in {}", g.cartan_type()), None));
            }
        }
        Ok((true, "zero residual on every triple".into(), None))
    });
    s.check(format!("Killing invariance on {PROPERTY_FIXTURES} random triples"), || {
        for i in 0..PROPERTY_FIXTURES {
            let g = pick(i);
            let (a, b, c) = (
                fixtures::random_element(g, &mut rng),
                fixtures::random_element(g, &mut rng),
                fixtures::random_element(g, &mut rng),
            );
            if g.killing(&g.bracket(&a, &b)?, &c) != g.killing(&a, &g.bracket(&b, &c)?) {
                return Ok((false, format!("fixture {i} in {}", g.cartan_type()), None));
            }
        }
        Ok((true, "kappa([a,b],c) = kappa(a,[b,c]) on every triple".into(), None))
    });
    s.check(format!("grading compatibility on {PROPERTY_FIXTURES} random pairs"), || {
        use rand::Rng;
        for i in 0..PROPERTY_FIXTURES {
            let g = pick(i);
            let labels: Vec<i64> = (0..g.rank()).map(|_| rng.gen_range(0..=2)).collect();
            let wd = WeightedDiagram::new(g.cartan_type(), labels)?;
            let gr = dynkin::grading_from_diagram(g, &wd)?;
            let degrees: Vec<i64> = gr.pieces().keys().copied().collect();
            let di = degrees[rng.gen_range(0..degrees.len())];
            let dj = degrees[rng.gen_range(0..degrees.len())];
            let x = fixtures::random_combination(g, gr.piece(di), 0.5, &mut rng);
            let y = fixtures::random_combination(g, gr.piece(dj), 0.5, &mut rng);
            let z = g.bracket(&x, &y)?;
            if !gr.in_piece(&z, di + dj) {
                return Ok((false, format!("fixture {i}: [g({di}), g({dj})] not in g({})", di + dj), None));
            }
            // The grading element acts by the degree.
            if g.bracket(gr.h(), &x)? != x.scale(&q(di)) {
                return Ok((false, format!("fixture {i}: ad H is not {di} on g({di})"), None));
            }
        }
        Ok((true, "[g(i), g(j)] in g(i+j) on every pair".into(), None))
    });
    s.check(format!("omega kernel on {PROPERTY_FIXTURES} open-orbit elements"), || {
        let mut diagrams = Vec::new();
        for g in &algebras {
            for wd in orbit_diagrams(g)? {
                diagrams.push((g, wd));
            }
        }
        for i in 0..PROPERTY_FIXTURES {
            let (g, wd) = &diagrams[(i * 7) % diagrams.len()];
            let gr = dynkin::grading_from_diagram(g, wd)?;
            let n = fixtures::open_orbit_element(g, &gr, 16, &mut rng)?
                .ok_or_else(|| Error::Inconsistent(format!("no open-orbit element for {wd}")))?;
            let k = dynkin::omega_kernel_dim(g, &gr, &n)?;
            if k != 0 {
                let mut w = Witness::new();
                w.insert("N".into(), witness_entry(g, &n));
                return Ok((false, format!("fixture {i} on {wd}: kernel exceeds p by {k}"), Some(w)));
            }
        }
        Ok((true, format!("kernel equals p on every fixture ({} diagrams)", diagrams.len()), None))
    });
    s.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run(&Config::default(), &["nope".into()], 1).is_err());
    }

    #[test]
    fn suite_names_unique() {
        let names = suite_names();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
    }

    #[test]
    fn g2_suite_passes() {
        let reports = run(&Config::default(), &["g2-classification".into()], 1).unwrap();
        assert!(reports.iter().all(|r| r.status.is_ok()), "{reports:#?}");
    }
}
