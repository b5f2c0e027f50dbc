//! Curated tables: pairs of algebras sharing a projectivized orbit closure
//! up to a finite covering, and metadata for named G2 and F4 orbits.
//!
//! The shared-orbit table is a TSV with header `g g_prime orbit degree`.
//! Types are written `B4` or with a generic rank `B_l`, `D_l+1`, `A_2l-1`;
//! orbits are `(3,2,2,1)`, `(3,1,...)` (padded with ones), `short` or
//! `sub`. The exceptional metadata is a JSON array described by
//! `data/exceptional_orbits.schema.json`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chevalley::ChevalleyAlgebra;
use crate::dynkin::{diagram_of_root_vector_orbit, generic_element, grading_from_diagram, WeightedDiagram};
use crate::partitions::{ClassicalType, JordanOrbit};
use crate::rootsys::{CartanType, Family};
use crate::Error;

pub const DEFAULT_TABLE: &str = include_str!("../data/shared_orbits.tsv");
pub const DEFAULT_EXCEPTIONAL: &str = include_str!("../data/exceptional_orbits.json");
pub const TABLE_FILE: &str = "shared_orbits.tsv";
pub const EXCEPTIONAL_FILE: &str = "exceptional_orbits.json";
/// Directory overriding the embedded data files.
pub const DATA_ENV: &str = "LIE_ORBITS_DATA";

/// Generic ranks substituted for `l` during validation, per family of `g`.
pub const GENERIC_RANKS: std::ops::RangeInclusive<usize> = 2..=6;

/// Rank written as a number or as `a*l + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RankSpec {
    Fixed(usize),
    Generic { mul: usize, add: i64 },
}

impl RankSpec {
    pub fn at(self, l: usize) -> Option<usize> {
        match self {
            RankSpec::Fixed(n) => Some(n),
            RankSpec::Generic { mul, add } => usize::try_from((mul * l) as i64 + add).ok(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeSpec {
    pub family: Family,
    pub rank: RankSpec,
}

impl TypeSpec {
    pub fn is_generic(&self) -> bool {
        matches!(self.rank, RankSpec::Generic { .. })
    }

    pub fn at(&self, l: usize) -> Option<CartanType> {
        CartanType::new(self.family, self.rank.at(l)?).ok()
    }
}

impl FromStr for TypeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| format!("unknown family in `{s}`"))?;
        let rest = chars.as_str();
        if let Ok(n) = rest.parse::<usize>() {
            return Ok(TypeSpec {
                family,
                rank: RankSpec::Fixed(n),
            });
        }
        let expr = rest
            .strip_prefix('_')
            .ok_or_else(|| format!("bad rank in `{s}`"))?;
        let (head, add) = match expr.find(['+', '-']) {
            Some(i) => {
                let add: i64 = expr[i..]
                    .trim_start_matches('+')
                    .parse()
                    .map_err(|_| format!("bad offset in `{s}`"))?;
                (&expr[..i], add)
            }
            None => (expr, 0),
        };
        let mul = match head.strip_suffix('l') {
            Some("") => 1,
            Some(m) => m.parse().map_err(|_| format!("bad multiplier in `{s}`"))?,
            None => return Err(format!("rank of `{s}` must mention l")),
        };
        Ok(TypeSpec {
            family,
            rank: RankSpec::Generic { mul, add },
        })
    }
}

impl fmt::Display for TypeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.letter())?;
        match self.rank {
            RankSpec::Fixed(n) => write!(f, "{n}"),
            RankSpec::Generic { mul, add } => {
                write!(f, "_")?;
                if mul != 1 {
                    write!(f, "{mul}")?;
                }
                write!(f, "l")?;
                if add > 0 {
                    write!(f, "+{add}")
                } else if add < 0 {
                    write!(f, "{add}")
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Orbit column of the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrbitSpec {
    /// Jordan type; `padded` means the parts continue with as many ones as
    /// the matrix size requires (possibly none).
    Partition { parts: Vec<u32>, padded: bool },
    Short,
    Subregular,
}

impl OrbitSpec {
    /// The orbit in `ty`, for partition specs.
    pub fn jordan(&self, ty: ClassicalType) -> Option<Result<JordanOrbit, Error>> {
        match self {
            OrbitSpec::Partition { parts, padded } => {
                let mut p = parts.clone();
                if *padded {
                    // Written ones before `...` belong to the padding, which may be empty.
                    while p.len() > 1 && p.last() == Some(&1) {
                        p.pop();
                    }
                    let sum: usize = p.iter().map(|&x| x as usize).sum();
                    p.extend(std::iter::repeat(1).take(ty.matrix_size().saturating_sub(sum)));
                }
                Some(JordanOrbit::new(ty, p, None))
            }
            _ => None,
        }
    }

    /// Name used in the exceptional metadata.
    pub fn metadata_name(&self) -> Option<&'static str> {
        match self {
            OrbitSpec::Short => Some("short"),
            OrbitSpec::Subregular => Some("subregular"),
            OrbitSpec::Partition { .. } => None,
        }
    }
}

impl FromStr for OrbitSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "short" => return Ok(OrbitSpec::Short),
            "sub" => return Ok(OrbitSpec::Subregular),
            _ => {}
        }
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| format!("orbit `{s}` is not short, sub or a parenthesized partition"))?;
        let (body, padded) = match body.strip_suffix("...") {
            Some(b) => (b.trim_end_matches(','), true),
            None => (body, false),
        };
        let parts = body
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| format!("bad partition `{s}`"))?;
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("partition `{s}` must be positive and weakly decreasing"));
        }
        Ok(OrbitSpec::Partition { parts, padded })
    }
}

impl fmt::Display for OrbitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSpec::Short => write!(f, "short"),
            OrbitSpec::Subregular => write!(f, "sub"),
            OrbitSpec::Partition { parts, padded } => {
                let s: Vec<String> = parts.iter().map(u32::to_string).collect();
                if *padded {
                    write!(f, "({},...)", s.join(","))
                } else {
                    write!(f, "({})", s.join(","))
                }
            }
        }
    }
}

/// One row of the shared-orbit table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedOrbitRecord {
    pub g: TypeSpec,
    pub g_prime: TypeSpec,
    pub orbit: OrbitSpec,
    pub degree: u32,
}

impl fmt::Display for SharedOrbitRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.g, self.g_prime, self.orbit, self.degree)
    }
}

/// Named orbit of G2 or F4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExceptionalOrbitRecord {
    pub g: CartanType,
    pub name: String,
    pub labels: Vec<i64>,
    pub dimension: usize,
    pub pi1_order: u64,
    pub closure_normal: Option<bool>,
    pub citation: String,
}

impl ExceptionalOrbitRecord {
    pub fn diagram(&self) -> Result<WeightedDiagram, Error> {
        WeightedDiagram::new(self.g, self.labels.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    pub shared: Vec<SharedOrbitRecord>,
    pub exceptional: Vec<ExceptionalOrbitRecord>,
}

impl Tables {
    pub fn exceptional(&self, g: CartanType, name: &str) -> Option<&ExceptionalOrbitRecord> {
        self.exceptional.iter().find(|r| r.g == g && r.name == name)
    }
}

const HEADER: [&str; 4] = ["g", "g_prime", "orbit", "degree"];

/// Parses the shared-orbit TSV; errors carry 1-based line numbers.
pub fn parse_shared_table(text: &str) -> Result<Vec<SharedOrbitRecord>, Error> {
    let err = |line: usize, msg: String| Error::TableParse { line, msg };
    let mut lines = text.lines().enumerate();
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| err(1, "empty file".into()))?
        .1
        .split('\t')
        .map(str::trim)
        .collect();
    if header != HEADER {
        return Err(err(1, format!("header must be {}", HEADER.join("\\t"))));
    }
    let mut out = Vec::new();
    for (i, raw) in lines {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = raw.split('\t').collect();
        if cols.len() != 4 {
            return Err(err(line, format!("expected 4 tab-separated columns, got {}", cols.len())));
        }
        let degree: u32 = cols[3]
            .trim()
            .parse()
            .map_err(|_| err(line, format!("degree `{}` is not a positive integer", cols[3])))?;
        if degree == 0 {
            return Err(err(line, "degree must be at least 1".into()));
        }
        out.push(SharedOrbitRecord {
            g: cols[0].parse().map_err(|m| err(line, m))?,
            g_prime: cols[1].parse().map_err(|m| err(line, m))?,
            orbit: cols[2].parse().map_err(|m| err(line, m))?,
            degree,
        });
    }
    Ok(out)
}

/// Writes records in the format read by [`parse_shared_table`].
pub fn serialize_shared_table(records: &[SharedOrbitRecord]) -> String {
    let mut s = HEADER.join("\t");
    s.push('\n');
    for r in records {
        s.push_str(&format!("{}\t{}\t{}\t{}\n", r.g, r.g_prime, r.orbit, r.degree));
    }
    s
}

pub fn parse_exceptional(text: &str) -> Result<Vec<ExceptionalOrbitRecord>, Error> {
    Ok(serde_json::from_str(text)?)
}

pub fn serialize_exceptional(records: &[ExceptionalOrbitRecord]) -> Result<String, Error> {
    Ok(serde_json::to_string_pretty(records)? + "\n")
}

/// Loads the table at `path` and the exceptional metadata next to it
/// (embedded defaults when the sibling file is absent).
pub fn load_tables(path: &Path) -> Result<Tables, Error> {
    let shared = parse_shared_table(&std::fs::read_to_string(path)?)?;
    let sibling = path.with_file_name(EXCEPTIONAL_FILE);
    let exceptional = if sibling.exists() {
        parse_exceptional(&std::fs::read_to_string(sibling)?)?
    } else {
        parse_exceptional(DEFAULT_EXCEPTIONAL)?
    };
    Ok(Tables { shared, exceptional })
}

/// Tables from `$LIE_ORBITS_DATA` when set, else the embedded copies.
pub fn load_default() -> Result<Tables, Error> {
    match std::env::var_os(DATA_ENV) {
        Some(dir) => load_tables(&PathBuf::from(dir).join(TABLE_FILE)),
        None => Ok(Tables {
            shared: parse_shared_table(DEFAULT_TABLE)?,
            exceptional: parse_exceptional(DEFAULT_EXCEPTIONAL)?,
        }),
    }
}

/// One cross-check on one row.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub row: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, row: impl fmt::Display, check: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            row: row.to_string(),
            check: check.into(),
            passed,
            detail,
        });
    }
}

/// Instantiations `(l, g, g')` of a row; generic rows range over
/// [`GENERIC_RANKS`] (type D from rank 4).
pub fn instances(r: &SharedOrbitRecord) -> Vec<(usize, CartanType, CartanType)> {
    let ls: Vec<usize> = if r.g.is_generic() || r.g_prime.is_generic() {
        GENERIC_RANKS.collect()
    } else {
        vec![0]
    };
    ls.into_iter()
        .filter_map(|l| {
            let g = r.g.at(l)?;
            if g.family == Family::D && g.rank < 4 {
                return None;
            }
            Some((l, g, r.g_prime.at(l)?))
        })
        .collect()
}

fn validate_exceptional(rec: &ExceptionalOrbitRecord, alg: &ChevalleyAlgebra, report: &mut ValidationReport) {
    let row = format!("{} {}", rec.g, rec.name);
    let wd = match rec.diagram() {
        Ok(wd) => wd,
        Err(e) => return report.push(&row, "diagram labels", false, e.to_string()),
    };
    report.push(&row, "diagram labels", true, wd.to_string());
    report.push(
        &row,
        "dimension even and positive",
        rec.dimension > 0 && rec.dimension % 2 == 0,
        rec.dimension.to_string(),
    );
    let computed = grading_from_diagram(alg, &wd)
        .and_then(|gr| generic_element(alg, &gr))
        .and_then(|t| alg.orbit_dimension(&t.n0));
    match computed {
        Ok(d) => report.push(
            &row,
            "dimension of generic element",
            d == rec.dimension,
            format!("computed {d}, recorded {}", rec.dimension),
        ),
        Err(e) => report.push(&row, "dimension of generic element", false, e.to_string()),
    }
    let rs = alg.root_system();
    let named_root = match rec.name.as_str() {
        "minimal" => Some(rs.highest_root()),
        "short" => Some(rs.highest_short_root()),
        _ => None,
    };
    if let Some(root) = named_root {
        let check = format!("diagram of {} root vector orbit", rec.name);
        match diagram_of_root_vector_orbit(alg, &root) {
            Ok(d) => report.push(&row, &check, d == wd, format!("computed {d}, recorded {wd}")),
            Err(e) => report.push(&row, &check, false, e.to_string()),
        }
    }
}

/// Cross-checks every row against the partition calculus and the Lie
/// algebra computations.
pub fn validate_tables(tables: &Tables) -> Result<ValidationReport, Error> {
    let mut report = ValidationReport::default();
    let mut algebras: Vec<ChevalleyAlgebra> = Vec::new();
    let mut algebra = |t: CartanType| -> Result<usize, Error> {
        if let Some(i) = algebras.iter().position(|a| a.cartan_type() == t) {
            return Ok(i);
        }
        algebras.push(ChevalleyAlgebra::from_type(t)?);
        Ok(algebras.len() - 1)
    };
    let mut exceptional_idx = Vec::new();
    for rec in &tables.exceptional {
        exceptional_idx.push(algebra(rec.g)?);
    }
    for r in &tables.shared {
        let inst = instances(r);
        if inst.is_empty() {
            report.push(r, "instantiation", false, "no valid ranks".into());
        }
        for (l, g, g_prime) in inst {
            let at = if r.g.is_generic() {
                format!("{r} at l={l}: {g}, {g_prime}")
            } else {
                r.to_string()
            };
            match &r.orbit {
                OrbitSpec::Partition { .. } => {
                    let ct = match ClassicalType::new(g) {
                        Ok(ct) => ct,
                        Err(e) => {
                            report.push(&at, "classical type", false, e.to_string());
                            continue;
                        }
                    };
                    match r.orbit.jordan(ct).unwrap() {
                        Ok(o) => {
                            report.push(&at, "orbit valid", true, o.to_string());
                            let p = o.pi1_order();
                            report.push(
                                &at,
                                "pi1 order equals degree",
                                p as u32 == r.degree,
                                format!("pi1 order {p}, degree {}", r.degree),
                            );
                        }
                        Err(e) => report.push(&at, "orbit valid", false, e.to_string()),
                    }
                }
                named => {
                    let name = named.metadata_name().unwrap();
                    match tables.exceptional(g, name) {
                        Some(meta) => {
                            report.push(&at, "metadata present", true, format!("{g} {name}"));
                            report.push(
                                &at,
                                "pi1 order equals degree",
                                meta.pi1_order == r.degree as u64,
                                format!("pi1 order {}, degree {}", meta.pi1_order, r.degree),
                            );
                        }
                        None => report.push(&at, "metadata present", false, format!("{g} {name}")),
                    }
                }
            }
        }
    }
    for (rec, &i) in tables.exceptional.iter().zip(&exceptional_idx) {
        validate_exceptional(rec, &algebras[i], &mut report);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_spec_round_trip() {
        for s in ["B4", "B_l", "D_l+1", "A_2l-1", "E6"] {
            let t: TypeSpec = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        let t: TypeSpec = "A_2l-1".parse().unwrap();
        assert_eq!(t.at(3), Some("A5".parse().unwrap()));
        assert!("Q4".parse::<TypeSpec>().is_err());
        assert!("B_k".parse::<TypeSpec>().is_err());
    }

    #[test]
    fn orbit_spec_round_trip() {
        for s in ["(3)", "(3,1,...)", "(2,2,2,2,1)", "short", "sub"] {
            let o: OrbitSpec = s.parse().unwrap();
            assert_eq!(o.to_string(), s);
        }
        assert!("(1,3)".parse::<OrbitSpec>().is_err());
        assert!("regular".parse::<OrbitSpec>().is_err());
    }

    #[test]
    fn default_table_has_nine_rows_and_round_trips() {
        let rows = parse_shared_table(DEFAULT_TABLE).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!(serialize_shared_table(&rows), DEFAULT_TABLE);
        let ex = parse_exceptional(DEFAULT_EXCEPTIONAL).unwrap();
        assert_eq!(parse_exceptional(&serialize_exceptional(&ex).unwrap()).unwrap(), ex);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = "g\tg_prime\torbit\tdegree\nA2\tG2\t(3)\t3\nB4\tF4\t(2,2\t2\n";
        match parse_shared_table(bad) {
            Err(Error::TableParse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        match parse_shared_table("g\tg_prime\torbit\tdegree\nA2\tG2\t(3)\t0\n") {
            Err(Error::TableParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_shared_table("a\tb\n"),
            Err(Error::TableParse { line: 1, .. })
        ));
    }

    #[test]
    fn generic_rows_instantiate() {
        let rows = parse_shared_table(DEFAULT_TABLE).unwrap();
        let c = rows.iter().find(|r| r.g.family == Family::C).unwrap();
        let inst = instances(c);
        assert_eq!(inst.len(), 5);
        assert_eq!(inst[0].2, "A3".parse().unwrap());
        let d = rows.iter().find(|r| r.g.to_string() == "D_l").unwrap();
        assert_eq!(instances(d).len(), 3);
    }

    #[test]
    fn default_tables_validate() {
        let report = validate_tables(&load_default().unwrap()).unwrap();
        let failures: Vec<_> = report.failures().collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(report.checks.len() > 30);
    }
}
