//! Nilpotent orbits of the classical algebras as Jordan types.
//!
//! `sl(n)` orbits are partitions of `n`; `so(2l+1)` and `so(2l)` orbits are
//! partitions whose even parts occur with even multiplicity; `sp(2l)`
//! orbits are partitions whose odd parts occur with even multiplicity.
//! A very even partition of `2l` (all parts even, each with even
//! multiplicity) labels two orbits of `so(2l)`, told apart by a label.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::dynkin::WeightedDiagram;
use crate::rootsys::{CartanType, Family};
use crate::Error;

/// A classical Cartan type, viewed through its defining representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassicalType(CartanType);

impl ClassicalType {
    pub fn new(t: CartanType) -> Result<Self, Error> {
        if !t.family.is_classical() {
            return Err(Error::WrongType {
                op: "partition calculus",
                expected: "a classical type",
                got: t,
            });
        }
        Ok(Self(t))
    }

    pub fn cartan_type(self) -> CartanType {
        self.0
    }

    pub fn family(self) -> Family {
        self.0.family
    }

    pub fn rank(self) -> usize {
        self.0.rank
    }

    /// Size of the defining matrices.
    pub fn matrix_size(self) -> usize {
        let l = self.rank();
        match self.family() {
            Family::A => l + 1,
            Family::B => 2 * l + 1,
            _ => 2 * l,
        }
    }

    /// Parity of the parts that must occur with even multiplicity.
    fn paired_parity(self) -> Option<u32> {
        match self.family() {
            Family::A => None,
            Family::B | Family::D => Some(0),
            _ => Some(1),
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The two orbits sharing a very even partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEvenLabel {
    I,
    II,
}

/// A nilpotent orbit given by its Jordan type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct JordanOrbit {
    ty: ClassicalType,
    /// Weakly decreasing, no zeros.
    parts: Vec<u32>,
    label: Option<VeryEvenLabel>,
}

fn multiplicities(parts: &[u32]) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

fn is_very_even(parts: &[u32]) -> bool {
    multiplicities(parts)
        .iter()
        .all(|(&p, &m)| p % 2 == 0 && m % 2 == 0)
}

impl JordanOrbit {
    /// Validates the partition; `label` is required exactly for very even
    /// partitions in type D.
    pub fn new(
        ty: ClassicalType,
        mut parts: Vec<u32>,
        label: Option<VeryEvenLabel>,
    ) -> Result<Self, Error> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let bad = |reason: String| Error::InvalidPartition {
            ty: ty.to_string(),
            partition: parts.clone(),
            reason,
        };
        let total: usize = parts.iter().map(|&p| p as usize).sum();
        if total != ty.matrix_size() {
            return Err(bad(format!("parts sum to {total}, expected {}", ty.matrix_size())));
        }
        if let Some(par) = ty.paired_parity() {
            for (p, m) in multiplicities(&parts) {
                if p % 2 == par && m % 2 == 1 {
                    return Err(bad(format!("part {p} has odd multiplicity {m}")));
                }
            }
        }
        let needs_label = ty.family() == Family::D && is_very_even(&parts);
        match (needs_label, label) {
            (true, None) => return Err(bad("very even partition needs label I or II".into())),
            (false, Some(_)) => return Err(bad("only very even partitions take a label".into())),
            _ => {}
        }
        Ok(Self { ty, parts, label })
    }

    /// Parses `"3,1,1"`, optionally followed by `I` or `II` (`"2,2,2,2 II"`).
    pub fn parse(ty: ClassicalType, s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches('(').trim_end();
        let (body, label) = if let Some(b) = s.strip_suffix("II") {
            (b, Some(VeryEvenLabel::II))
        } else if let Some(b) = s.strip_suffix('I') {
            (b, Some(VeryEvenLabel::I))
        } else {
            (s, None)
        };
        let body = body.trim().trim_end_matches(')');
        let parts = body
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseType(format!("partition `{s}`")))?;
        Self::new(ty, parts, label)
    }

    pub fn classical_type(&self) -> ClassicalType {
        self.ty
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn label(&self) -> Option<VeryEvenLabel> {
        self.label
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn is_very_even(&self) -> bool {
        self.label.is_some()
    }

    /// Dual partition: `dual[i] = #{j : parts[j] > i}`.
    pub fn dual_parts(&self) -> Vec<u32> {
        let top = self.parts.first().copied().unwrap_or(0);
        (0..top)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32)
            .collect()
    }

    /// Complex dimension of the orbit.
    pub fn orbit_dim(&self) -> usize {
        let s2: i64 = self.dual_parts().iter().map(|&s| (s as i64).pow(2)).sum();
        let odd: i64 = self.parts.iter().filter(|&&p| p % 2 == 1).count() as i64;
        let l = self.ty.rank() as i64;
        let n = self.ty.matrix_size() as i64;
        let d = match self.ty.family() {
            Family::A => n * n - s2,
            Family::B => 2 * l * l + l - (s2 - odd) / 2,
            Family::C => 2 * l * l + l - (s2 + odd) / 2,
            _ => 2 * l * l - l - (s2 - odd) / 2,
        };
        d as usize
    }

    /// `ad H` weights on the defining representation, largest first.
    fn h_weights(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self
            .parts
            .iter()
            .flat_map(|&d| (0..d).map(move |k| d as i64 - 1 - 2 * k as i64))
            .collect();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w
    }

    /// Weighted Dynkin diagram (Bourbaki numbering).
    pub fn weighted_diagram(&self) -> WeightedDiagram {
        let w = self.h_weights();
        let l = self.ty.rank();
        let h = &w[..l.max(1).min(w.len())];
        let mut labels: Vec<i64> = match self.ty.family() {
            Family::A => (0..l).map(|i| w[i] - w[i + 1]).collect(),
            fam => {
                let mut v: Vec<i64> = (0..l - 1).map(|i| h[i] - h[i + 1]).collect();
                v.push(match fam {
                    Family::B => h[l - 1],
                    Family::C => 2 * h[l - 1],
                    _ => h[l - 2] + h[l - 1],
                });
                v
            }
        };
        if self.label == Some(VeryEvenLabel::II) {
            labels.swap(l - 2, l - 1);
        }
        WeightedDiagram::new(self.ty.cartan_type(), labels).expect("labels lie in {0,1,2}")
    }

    /// Order of the component group of the centralizer in the simply
    /// connected group.
    pub fn pi1_order(&self) -> u64 {
        let m = multiplicities(&self.parts);
        match self.ty.family() {
            Family::A => self.parts.iter().fold(0u32, |g, &p| g.gcd(&p)) as u64,
            Family::C => 1 << m.keys().filter(|&&p| p % 2 == 0).count(),
            _ => {
                let odd: Vec<usize> = m
                    .iter()
                    .filter(|(&p, _)| p % 2 == 1)
                    .map(|(_, &k)| k)
                    .collect();
                let a = odd.len();
                let base = 1u64 << a.saturating_sub(1);
                if odd.iter().all(|&k| k == 1) {
                    2 * base
                } else {
                    base
                }
            }
        }
    }

    /// Dominance order, with the two very even orbits incomparable.
    pub fn closure_leq(&self, other: &JordanOrbit) -> bool {
        if self.ty != other.ty {
            return false;
        }
        if self.parts == other.parts {
            return self.label == other.label;
        }
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for JordanOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))?;
        match self.label {
            Some(VeryEvenLabel::I) => write!(f, " I"),
            Some(VeryEvenLabel::II) => write!(f, " II"),
            None => Ok(()),
        }
    }
}

/// Partitions of `n` in reverse lexicographic order.
fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All nilpotent orbits, largest partition first.
pub fn enumerate_orbits(ty: ClassicalType) -> Vec<JordanOrbit> {
    let mut out = Vec::new();
    for p in partitions_of(ty.matrix_size() as u32) {
        if ty.family() == Family::D && is_very_even(&p) {
            for lab in [VeryEvenLabel::I, VeryEvenLabel::II] {
                out.extend(JordanOrbit::new(ty, p.clone(), Some(lab)));
            }
        } else {
            out.extend(JordanOrbit::new(ty, p, None));
        }
    }
    out
}

/// The minimal nonzero orbit.
pub fn minimal_orbit(ty: ClassicalType) -> JordanOrbit {
    let n = ty.matrix_size() as u32;
    let parts = match ty.family() {
        Family::A | Family::C => {
            let mut v = vec![2];
            v.extend(std::iter::repeat(1).take(n as usize - 2));
            v
        }
        _ => {
            let mut v = vec![2, 2];
            v.extend(std::iter::repeat(1).take(n as usize - 4));
            v
        }
    };
    JordanOrbit::new(ty, parts, None).expect("minimal partition is valid")
}

/// Closure order on all orbits of one type.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    orbits: Vec<JordanOrbit>,
    /// `covers[i]` lists the orbits directly below orbit `i`.
    covers: Vec<Vec<usize>>,
}

impl OrbitPoset {
    pub fn new(ty: ClassicalType) -> Self {
        let orbits = enumerate_orbits(ty);
        let n = orbits.len();
        let below = |i: usize, j: usize| i != j && orbits[i].closure_leq(&orbits[j]);
        let covers = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&i| below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)))
                    .collect()
            })
            .collect();
        Self { orbits, covers }
    }

    pub fn orbits(&self) -> &[JordanOrbit] {
        &self.orbits
    }

    pub fn index_of(&self, o: &JordanOrbit) -> Option<usize> {
        self.orbits.iter().position(|x| x == o)
    }

    /// Orbits directly below `o` in the closure order.
    pub fn covered_by(&self, o: &JordanOrbit) -> Vec<&JordanOrbit> {
        self.index_of(o)
            .map(|i| self.covers[i].iter().map(|&k| &self.orbits[k]).collect())
            .unwrap_or_default()
    }

    /// Hasse diagram edges `(lower, upper)` as indices into [`Self::orbits`].
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |&i| (i, j)))
            .collect()
    }

    /// Smallest codimension of an orbit in the boundary of `o`; `None` for
    /// the zero orbit.
    pub fn boundary_codim(&self, o: &JordanOrbit) -> Option<usize> {
        let d = o.orbit_dim();
        self.covered_by(o)
            .iter()
            .map(|x| d - x.orbit_dim())
            .min()
    }
}
