//! Z_m-gradings of simple Lie algebras from single nodes of affine and
//! twisted Kac diagrams, and the invariants derived from them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dual_degrees::ChowModel;
use crate::error::{Error, Result};
use crate::root_systems::{build_root_system, root_census, Family, LengthClass, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Self {
        SimpleType { family, rank }
    }

    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::E => match n {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// Rewrites the low-rank coincidences B1 = C1 = A1, C2 = B2, D2 = A1 x A1,
    /// D3 = A3 so that types compare canonically.
    pub fn normalize(self) -> Vec<SimpleType> {
        let t = |f, r| SimpleType::new(f, r);
        match (self.family, self.rank) {
            (_, 0) => vec![],
            (Family::B | Family::C, 1) => vec![t(Family::A, 1)],
            (Family::C, 2) => vec![t(Family::B, 2)],
            (Family::D, 1) => vec![],
            (Family::D, 2) => vec![t(Family::A, 1), t(Family::A, 1)],
            (Family::D, 3) => vec![t(Family::A, 3)],
            _ => vec![self],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Sorted, normalized product of simple types.
pub fn normalize_types(ts: &[SimpleType]) -> Vec<SimpleType> {
    let mut out: Vec<SimpleType> = ts.iter().flat_map(|t| t.normalize()).collect();
    out.sort();
    out
}

pub fn types_label(ts: &[SimpleType]) -> String {
    if ts.is_empty() {
        return "0".into();
    }
    ts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x")
}

/// Parses labels such as "D4xB4" or "A2xA2xA2".
pub fn parse_types(s: &str) -> Result<Vec<SimpleType>> {
    s.split(['x', '×'])
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let p = p.trim();
            let family: Family = p[..1].parse()?;
            let rank: usize = p[1..]
                .parse()
                .map_err(|_| Error::Precondition(format!("bad type label '{p}'")))?;
            Ok(SimpleType::new(family, rank))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KacDiagram {
    pub family: Family,
    pub rank: usize,
    pub twist: u32,
    /// Marks by node; node 0 is the extra node.
    pub marks: Vec<u32>,
    /// Generalized Cartan matrix; a row holding -2 or -3 belongs to the
    /// shorter node of that bond.
    pub cartan: Vec<Vec<i64>>,
}

impl KacDiagram {
    pub fn name(&self) -> String {
        format!("{}{}^{}", self.family, self.rank, self.twist)
    }

    pub fn node_count(&self) -> usize {
        self.marks.len()
    }

    pub fn g_type(&self) -> SimpleType {
        SimpleType::new(self.family, self.rank)
    }
}

/// Parses "E8^1", "A2^2", "D4^3"; a missing twist means 1.
pub fn parse_diagram(s: &str) -> Result<(Family, usize, u32)> {
    let (base, twist) = match s.split_once('^') {
        Some((b, t)) => (
            b,
            t.trim_matches(|c| c == '(' || c == ')')
                .parse::<u32>()
                .map_err(|_| Error::Precondition(format!("bad twist in '{s}'")))?,
        ),
        None => (s, 1),
    };
    if base.len() < 2 {
        return Err(Error::Precondition(format!("bad diagram '{s}'")));
    }
    let family: Family = base[..1].parse()?;
    let rank: usize = base[1..]
        .parse()
        .map_err(|_| Error::Precondition(format!("bad rank in '{s}'")))?;
    Ok((family, rank, twist))
}

impl FromStr for KacDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (f, r, t) = parse_diagram(s)?;
        kac_diagram(f, r, t)
    }
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

pub fn kac_diagram(family: Family, rank: usize, twist: u32) -> Result<KacDiagram> {
    let unsupported = || {
        Error::Unsupported(format!(
            "no Kac diagram {}{}^{} in the catalog",
            family, rank, twist
        ))
    };
    match twist {
        1 => {
            let rs = build_root_system(family, rank)?;
            let mut marks = vec![1u32];
            marks.extend(rs.highest_root_coordinates().iter().map(|&c| c as u32));
            let theta = &rs.highest_root().coordinates;
            let mut vecs: Vec<Vec<Q>> = vec![theta.iter().map(|x| -x).collect()];
            vecs.extend(rs.simple_roots.iter().map(|r| r.coordinates.clone()));
            let cartan = vecs
                .iter()
                .map(|ai| {
                    vecs.iter()
                        .map(|aj| {
                            crate::root_systems::cartan_pairing(aj, ai)
                                .expect("nonzero")
                                .to_integer()
                        })
                        .collect()
                })
                .collect();
            Ok(KacDiagram {
                family,
                rank,
                twist,
                marks,
                cartan,
            })
        }
        2 => {
            let (marks, cartan) = match family {
                Family::A if rank == 2 => (vec![4, 2], vec![vec![2, -4], vec![-1, 2]]),
                Family::A if rank >= 4 && rank % 2 == 0 => {
                    let l = rank / 2;
                    let mut a = chain(l + 1);
                    a[0][1] = -2;
                    a[l - 1][l] = -2;
                    let mut marks = vec![4; l + 1];
                    marks[l] = 2;
                    (marks, a)
                }
                Family::A if rank >= 5 && rank % 2 == 1 => {
                    let l = (rank + 1) / 2;
                    // nodes 0 and 1 both attach to node 2
                    let mut a = vec![vec![0i64; l + 1]; l + 1];
                    for (i, row) in a.iter_mut().enumerate() {
                        row[i] = 2;
                    }
                    for (i, j) in [(0, 2), (1, 2)] {
                        a[i][j] = -1;
                        a[j][i] = -1;
                    }
                    for i in 2..l {
                        a[i][i + 1] = -1;
                        a[i + 1][i] = -1;
                    }
                    a[l - 1][l] = -2;
                    let mut marks = vec![4; l + 1];
                    marks[0] = 2;
                    marks[1] = 2;
                    marks[l] = 2;
                    (marks, a)
                }
                Family::D if rank >= 3 => {
                    let l = rank - 1;
                    let mut a = chain(l + 1);
                    a[0][1] = -2;
                    a[l][l - 1] = -2;
                    (vec![2; l + 1], a)
                }
                Family::E if rank == 6 => {
                    let mut a = chain(5);
                    a[2][3] = -2;
                    (vec![2, 4, 6, 4, 2], a)
                }
                _ => return Err(unsupported()),
            };
            Ok(KacDiagram {
                family,
                rank,
                twist,
                marks,
                cartan,
            })
        }
        3 if family == Family::D && rank == 4 => {
            let mut a = chain(3);
            a[1][2] = -3;
            Ok(KacDiagram {
                family,
                rank,
                twist,
                marks: vec![3, 6, 3],
                cartan: a,
            })
        }
        _ => Err(unsupported()),
    }
}

/// Classifies a connected finite-type Cartan matrix.
pub fn classify_connected(a: &[Vec<i64>]) -> Result<SimpleType> {
    let n = a.len();
    let fail = || Error::Unsupported(format!("not a finite connected Cartan matrix: {a:?}"));
    if n == 1 {
        return Ok(SimpleType::new(Family::A, 1));
    }
    let mut deg = vec![0usize; n];
    let mut bonds = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a[i][j] != 0 || a[j][i] != 0 {
                deg[i] += 1;
                deg[j] += 1;
                bonds.push((i, j, a[i][j] * a[j][i]));
            }
        }
    }
    if bonds.len() != n - 1 || bonds.iter().any(|b| b.2 > 3) {
        return Err(fail());
    }
    if bonds.iter().any(|b| b.2 == 3) {
        return if n == 2 {
            Ok(SimpleType::new(Family::G, 2))
        } else {
            Err(fail())
        };
    }
    let doubles: Vec<_> = bonds.iter().filter(|b| b.2 == 2).collect();
    let max_deg = *deg.iter().max().expect("n >= 2");
    if doubles.len() > 1 {
        return Err(fail());
    }
    if let Some(&&(i, j, _)) = doubles.first() {
        if max_deg > 2 {
            return Err(fail());
        }
        if n == 2 {
            return Ok(SimpleType::new(Family::B, 2));
        }
        let (end, other) = if deg[i] == 1 {
            (i, j)
        } else if deg[j] == 1 {
            (j, i)
        } else {
            return if n == 4 {
                Ok(SimpleType::new(Family::F, 4))
            } else {
                Err(fail())
            };
        };
        let end_is_short = a[end][other] == -2;
        let fam = if end_is_short { Family::B } else { Family::C };
        return Ok(SimpleType::new(fam, n));
    }
    if max_deg <= 2 {
        return Ok(SimpleType::new(Family::A, n));
    }
    let branches: Vec<usize> = (0..n).filter(|&i| deg[i] == 3).collect();
    if branches.len() != 1 || max_deg > 3 {
        return Err(fail());
    }
    let b = branches[0];
    let mut arms: Vec<usize> = (0..n)
        .filter(|&j| j != b && (a[b][j] != 0))
        .map(|start| {
            let mut len = 1;
            let (mut prev, mut cur) = (b, start);
            loop {
                let next = (0..n).find(|&k| k != prev && k != cur && a[cur][k] != 0);
                match next {
                    Some(nx) => {
                        len += 1;
                        prev = cur;
                        cur = nx;
                    }
                    None => break,
                }
            }
            len
        })
        .collect();
    arms.sort();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, k) => Ok(SimpleType::new(Family::D, k + 3)),
        (1, 2, 2) => Ok(SimpleType::new(Family::E, 6)),
        (1, 2, 3) => Ok(SimpleType::new(Family::E, 7)),
        (1, 2, 4) => Ok(SimpleType::new(Family::E, 8)),
        _ => Err(fail()),
    }
}

/// Connected components of the diagram with `node` removed.
pub fn delete_node(d: &KacDiagram, node: usize) -> Result<Vec<SimpleType>> {
    let n = d.node_count();
    let rest: Vec<usize> = (0..n).filter(|&i| i != node).collect();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for &s in &rest {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in &rest {
                if !seen[j] && d.cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| d.cartan[i][j]).collect())
            .collect();
        out.push(classify_connected(&sub)?);
    }
    Ok(normalize_types(&out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum Corank {
    Known(usize),
    /// Proven positive by a necessary condition, exact value not in catalog.
    Positive,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionClass {
    pub class: LengthClass,
    pub order: u32,
    pub reflections: u64,
    pub hyperplanes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub class: LengthClass,
    pub degree: u64,
}

/// A row of the reference classification, kept verbatim for comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub g0_type: String,
    pub g1: String,
    pub g1_dim: usize,
    pub m: u32,
    pub little_weyl: String,
    pub reflections: (u32, u64),
    pub orbit: String,
    pub codegree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingReport {
    pub diagram: String,
    pub chosen_node: usize,
    pub m: u32,
    pub g_type: SimpleType,
    pub g0_type: String,
    /// Dimension of the center of g_0.
    pub g0_center: usize,
    pub g1_description: Option<String>,
    pub dims: Option<Vec<usize>>,
    pub theta_rank: Option<usize>,
    pub theta_corank: Corank,
    pub little_weyl_name: Option<String>,
    pub reflection_profile: Option<Vec<ReflectionClass>>,
    #[serde(rename = "degD")]
    pub deg_d: Vec<DegreeEntry>,
    pub closed_orbit_label: Option<String>,
    pub codegree: Option<u64>,
    pub reference: Option<ReferenceRow>,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub orbit_model: Option<ChowModel>,
}

fn dims_from_roots(family: Family, rank: usize, node: usize, m: u32) -> Result<Vec<usize>> {
    let rs = build_root_system(family, rank)?;
    let mut dims = vec![0usize; m as usize];
    dims[0] = rank;
    for c in &rs.simple_coordinates {
        let n = if node == 0 {
            0
        } else {
            c[node - 1]
        };
        dims[n.rem_euclid(m as i64) as usize] += 1;
    }
    Ok(dims)
}

/// (g0 dim, g1 dim) of the twisted gradings in the catalog, keyed by node.
fn twisted_dims(d: &KacDiagram, node: usize) -> Option<Vec<usize>> {
    let g = d.g_type().dim();
    let dims = match (d.family, d.twist) {
        (Family::A, 2) => {
            let n = d.rank + 1;
            let l = d.node_count() - 1;
            if node == l {
                let g0 = n * (n - 1) / 2;
                vec![g0, g - g0]
            } else if d.rank % 2 == 1 && node <= 1 {
                let g0 = n * (n + 1) / 2;
                vec![g0, g - g0]
            } else {
                return None;
            }
        }
        (Family::D, 2) => {
            let l = d.node_count() - 1;
            let (p, q) = (node, l - node);
            let g0 = p * (2 * p + 1) + q * (2 * q + 1);
            vec![g0, (2 * p + 1) * (2 * q + 1)]
        }
        (Family::E, 2) => match node {
            0 => vec![52, 26],
            4 => vec![36, 42],
            _ => return None,
        },
        (Family::D, 3) => match node {
            0 => vec![14, 7, 7],
            2 => vec![8, 10, 10],
            _ => return None,
        },
        _ => return None,
    };
    Some(dims)
}

/// Basic fields of the grading attached to one node.
pub fn grading_from_node(d: &KacDiagram, node: usize) -> Result<GradingReport> {
    if node >= d.node_count() {
        return Err(Error::Precondition(format!(
            "{} has nodes 0..{}",
            d.name(),
            d.node_count() - 1
        )));
    }
    let m = d.marks[node];
    let g0 = delete_node(d, node)?;
    let g0_ss: usize = g0.iter().map(|t| t.dim()).sum();
    let mut warnings = Vec::new();
    let dims = if d.twist == 1 {
        Some(dims_from_roots(d.family, d.rank, node, m)?)
    } else {
        let td = twisted_dims(d, node);
        if let Some(ref v) = td {
            let total: usize = v.iter().sum();
            if total != d.g_type().dim() {
                return Err(Error::CrossCheck(format!(
                    "{} node {node}: graded dims sum to {total}, not {}",
                    d.name(),
                    d.g_type().dim()
                )));
            }
            if v[0] != g0_ss {
                return Err(Error::CrossCheck(format!(
                    "{} node {node}: catalog dim g0 {} differs from {} of the deleted diagram",
                    d.name(),
                    v[0],
                    g0_ss
                )));
            }
        } else {
            warnings.push(format!("graded dimensions of {} node {node} are not in the catalog", d.name()));
        }
        td
    };
    let full_dims = dims.map(|v| {
        if m == 1 {
            return v;
        }
        if v.len() == m as usize {
            v
        } else {
            // catalog lists g0, g1, ..., up to the middle; fill by symmetry
            let mut out = vec![0; m as usize];
            for (i, x) in v.iter().enumerate() {
                out[i] = *x;
                out[(m as usize - i) % m as usize] = *x;
            }
            out
        }
    });
    let g0_center = full_dims
        .as_ref()
        .map(|v| v[0].saturating_sub(g0_ss))
        .unwrap_or(0);
    Ok(GradingReport {
        diagram: d.name(),
        chosen_node: node,
        m,
        g_type: d.g_type(),
        g0_type: types_label(&g0),
        g0_center,
        g1_description: full_dims
            .as_ref()
            .and_then(|v| v.get(1).map(|x| format!("dim {x}"))),
        dims: full_dims,
        theta_rank: None,
        theta_corank: Corank::Unknown,
        little_weyl_name: None,
        reflection_profile: None,
        deg_d: Vec::new(),
        closed_orbit_label: None,
        codegree: None,
        reference: None,
        warnings,
        orbit_model: None,
    })
}

fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|&k| num_integer::gcd(k, m) == 1).count()
}

fn is_prime(m: u32) -> bool {
    m >= 2 && (2..m).all(|k| m % k != 0)
}

/// Symmetric-pair theta-ranks for m = 2 and the catalogued exceptional ranks.
fn catalog_theta_rank(d: &KacDiagram, node: usize) -> Option<usize> {
    let l = d.rank;
    let j = node;
    match (d.family, d.twist, d.marks[node]) {
        (Family::B, 1, 2) => Some((2 * j).min(2 * (l - j) + 1)),
        (Family::C, 1, 2) => Some(j.min(l - j)),
        (Family::D, 1, 2) => Some((2 * j).min(2 * (l - j))),
        (Family::A, 2, 2) => {
            let last = d.node_count() - 1;
            if node == last {
                Some(l)
            } else {
                Some((l + 1) / 2 - 1)
            }
        }
        (Family::D, 2, 2) => {
            let q = d.node_count() - 1 - j;
            Some((2 * j + 1).min(2 * q + 1))
        }
        (Family::E, 1, _) => match (l, j) {
            (6, 2 | 3 | 5) => Some(4),
            (6, 4) => Some(3),
            (7, 1 | 6) => Some(4),
            (7, 2) => Some(7),
            (8, 1) => Some(8),
            (8, 8) => Some(4),
            (8, 2) => Some(4),
            (8, 5) => Some(2),
            _ => None,
        },
        (Family::F, 1, _) => match j {
            1 => Some(4),
            4 => Some(1),
            2 => Some(2),
            _ => None,
        },
        (Family::G, 1, 2) => Some(2),
        (Family::E, 2, 2) => match j {
            0 => Some(2),
            4 => Some(6),
            _ => None,
        },
        (Family::D, 3, 3) if j == 2 => Some(2),
        _ => None,
    }
}

/// Fills theta_rank and theta_corank.
pub fn theta_rank_and_corank(report: &mut GradingReport, d: &KacDiagram) -> (Option<usize>, Corank) {
    let rank = d.rank;
    let m = report.m;
    let phi = euler_phi(m);
    let (r1, corank) = if m == 1 {
        (Some(rank), Corank::Known(0))
    } else if let Some(r1) = catalog_theta_rank(d, report.chosen_node) {
        (Some(r1), Corank::Known(rank - r1 * phi))
    } else if rank % phi != 0 {
        (None, Corank::Positive)
    } else if let (true, Some(dims)) = (is_prime(m), &report.dims) {
        // At corank 0 and prime m, dim g0 = |R|/m and dim g_i = dim g0 + rank/phi(m).
        let n_roots = d.g_type().dim() - rank;
        let r1 = rank / phi;
        let holds = n_roots % m as usize == 0
            && dims[0] == n_roots / m as usize
            && dims[1..].iter().all(|&x| x == dims[0] + r1);
        if holds {
            (None, Corank::Unknown)
        } else {
            (None, Corank::Positive)
        }
    } else {
        (None, Corank::Unknown)
    };
    report.theta_rank = r1;
    report.theta_corank = corank;
    (r1, corank)
}

/// Weyl groups and the exceptional Shephard-Todd groups that occur.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionGroupData {
    pub name: String,
    pub rank: usize,
    pub reflection_order: u32,
    pub reflections: u64,
    pub degrees: Vec<u64>,
}

impl ReflectionGroupData {
    pub fn order(&self) -> u64 {
        self.degrees.iter().product()
    }
}

pub fn shephard_todd(number: u32) -> Option<ReflectionGroupData> {
    let (rank, order, degrees): (usize, u32, Vec<u64>) = match number {
        4 => (2, 3, vec![4, 6]),
        5 => (2, 3, vec![6, 12]),
        16 => (2, 5, vec![20, 30]),
        25 => (3, 3, vec![6, 9, 12]),
        32 => (4, 3, vec![12, 18, 24, 30]),
        _ => return None,
    };
    let reflections = degrees.iter().map(|d| d - 1).sum::<u64>();
    Some(ReflectionGroupData {
        name: ordinal(number),
        rank,
        reflection_order: order,
        reflections,
        degrees,
    })
}

fn ordinal(n: u32) -> String {
    let suffix = match (n % 10, n % 100) {
        (1, 11) | (2, 12) | (3, 13) => "th",
        (1, _) => "st",
        (2, _) => "nd",
        (3, _) => "rd",
        _ => "th",
    };
    format!("{n}{suffix}")
}

pub fn weyl_group_data(t: SimpleType) -> ReflectionGroupData {
    let n = t.rank as u64;
    let degrees: Vec<u64> = match t.family {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
            d.push(n);
            d.sort();
            d
        }
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    };
    ReflectionGroupData {
        name: format!("W({}{})", t.family, t.rank),
        rank: t.rank,
        reflection_order: 2,
        reflections: degrees.iter().map(|d| d - 1).sum(),
        degrees,
    }
}

/// Reflection census from (g, m) at corank 0: one class per root length,
/// |R_class|/m reflections of order m fixing |R_class|/(m(m-1)) hyperplanes.
pub fn reflection_profile_for(g: SimpleType, m: u32) -> Result<Vec<ReflectionClass>> {
    let (long, short) = root_census(g.family, g.rank)?;
    let mut out = Vec::new();
    for (class, count) in [(LengthClass::Long, long), (LengthClass::Short, short)] {
        if count == 0 {
            continue;
        }
        let mm = m as usize;
        if count % mm != 0 || count % (mm * (mm - 1)) != 0 {
            return Err(Error::CrossCheck(format!(
                "{count} {class} roots of {g} are not divisible by m(m-1) = {}",
                mm * (mm - 1)
            )));
        }
        out.push(ReflectionClass {
            class,
            order: m,
            reflections: (count / mm) as u64,
            hyperplanes: (count / (mm * (mm - 1))) as u64,
        });
    }
    Ok(out)
}

pub fn reflection_profile(report: &GradingReport) -> Result<Vec<ReflectionClass>> {
    if ![2, 3, 5].contains(&report.m) {
        return Err(Error::Precondition(format!(
            "order m = {} is not 2, 3 or 5",
            report.m
        )));
    }
    if report.theta_corank != Corank::Known(0) {
        return Err(Error::Precondition(format!(
            "theta-corank is {:?}, not 0",
            report.theta_corank
        )));
    }
    if report.g0_center != 0 {
        return Err(Error::Precondition(
            "rho_1(G_0) is not semisimple (g_0 has a center)".into(),
        ));
    }
    reflection_profile_for(report.g_type, report.m)
}

/// deg D = #roots(class)/(m - 1).
pub fn deg_discriminant_for(g: SimpleType, m: u32, class: LengthClass) -> Result<u64> {
    let (long, short) = root_census(g.family, g.rank)?;
    let count = match class {
        LengthClass::Long => long,
        LengthClass::Short => short,
    };
    if count == 0 && !(class == LengthClass::Long && long == 0 && short == 0) {
        return Err(Error::Precondition(format!("{g} has no {class} roots")));
    }
    Ok((count / (m as usize - 1)) as u64)
}

pub fn deg_discriminant(report: &GradingReport, class: LengthClass) -> Result<u64> {
    let profile = reflection_profile(report)?;
    let c = profile
        .iter()
        .find(|c| c.class == class)
        .ok_or_else(|| Error::Precondition(format!("no {class} reflection class")))?;
    Ok(c.hyperplanes * report.m as u64)
}

/// Little Weyl group identified by (rank, reflection order, number of
/// reflections) among Weyl groups and the exceptional groups that occur.
pub fn identify_little_weyl(report: &GradingReport) -> Option<String> {
    let r1 = report.theta_rank?;
    let profile = reflection_profile(report).ok()?;
    let total: u64 = profile.iter().map(|c| c.reflections).sum();
    if report.m == 2 {
        let w = weyl_group_data(report.g_type);
        return (w.rank == r1 && w.reflections == total).then_some(w.name);
    }
    let candidates: Vec<ReflectionGroupData> = [4, 5, 16, 25, 32]
        .iter()
        .filter_map(|&n| shephard_todd(n))
        .filter(|g| g.rank == r1 && g.reflection_order == report.m && g.reflections == total)
        .collect();
    (candidates.len() == 1).then(|| candidates[0].name.clone())
}

pub fn little_weyl_data(name: &str) -> Option<ReflectionGroupData> {
    if let Some(inner) = name.strip_prefix("W(").and_then(|s| s.strip_suffix(')')) {
        let t = parse_types(inner).ok()?;
        return (t.len() == 1).then(|| weyl_group_data(t[0]));
    }
    let digits: String = name.chars().take_while(|c| c.is_ascii_digit()).collect();
    shephard_todd(digits.parse().ok()?)
}

struct CatalogRow {
    diagram: &'static str,
    node: usize,
    g0: &'static str,
    g1: &'static str,
    g1_dim: usize,
    m: u32,
    weyl: &'static str,
    refl: (u32, u64),
    orbit: &'static str,
    codegree: u64,
}

const EXCEPTIONAL_ROWS: &[CatalogRow] = &[
    CatalogRow { diagram: "E6^1", node: 4, g0: "A2xA2xA2", g1: "C^3 (x) C^3 (x) C^3", g1_dim: 27, m: 3, weyl: "25th", refl: (3, 24), orbit: "P^2 x P^2 x P^2", codegree: 36 },
    CatalogRow { diagram: "E7^1", node: 2, g0: "A7", g1: "wedge^4 C^8", g1_dim: 70, m: 2, weyl: "W(E7)", refl: (2, 63), orbit: "G(4,8)", codegree: 126 },
    CatalogRow { diagram: "E8^1", node: 1, g0: "D8", g1: "S^+_16", g1_dim: 128, m: 2, weyl: "W(E8)", refl: (2, 120), orbit: "OG(8,16)_+", codegree: 240 },
    CatalogRow { diagram: "E8^1", node: 2, g0: "A8", g1: "wedge^3 C^9", g1_dim: 84, m: 3, weyl: "32nd", refl: (3, 80), orbit: "G(3,9)", codegree: 120 },
    CatalogRow { diagram: "E8^1", node: 5, g0: "A4xA4", g1: "C^5 (x) wedge^2 C^5", g1_dim: 50, m: 5, weyl: "16th", refl: (5, 48), orbit: "P^4 x G(2,5)", codegree: 60 },
    CatalogRow { diagram: "F4^1", node: 1, g0: "B3xA1", g1: "S_7 (x) C^2", g1_dim: 16, m: 2, weyl: "W(F4)", refl: (2, 24), orbit: "OG(3,7) x P^1", codegree: 24 },
    CatalogRow { diagram: "F4^1", node: 2, g0: "A2xA2", g1: "Sym^2(C^3) (x) C^3", g1_dim: 18, m: 3, weyl: "5th", refl: (3, 16), orbit: "v_2(P^2) x P^2", codegree: 12 },
    CatalogRow { diagram: "G2^1", node: 2, g0: "A1xA1", g1: "Sym^3(C^2) (x) C^2", g1_dim: 8, m: 2, weyl: "W(G2)", refl: (2, 6), orbit: "v_3(P^1) x P^1", codegree: 6 },
    CatalogRow { diagram: "E6^2", node: 4, g0: "C4", g1: "wedge^<4> C^8", g1_dim: 42, m: 2, weyl: "W(E6)", refl: (2, 36), orbit: "LG(4,8)", codegree: 72 },
    CatalogRow { diagram: "D4^3", node: 2, g0: "A2", g1: "Sym^3(C^3)", g1_dim: 10, m: 3, weyl: "4th", refl: (3, 8), orbit: "v_3(P^2)", codegree: 12 },
];

fn exceptional_model(diagram: &str, node: usize) -> Option<ChowModel> {
    use ChowModel as M;
    let p = M::projective;
    Some(match (diagram, node) {
        ("E6^1", 4) => M::product(vec![p(2), p(2), p(2)]),
        ("E7^1", 2) => M::Grassmannian { k: 4, n: 8 },
        ("E8^1", 1) => M::Spinor { n: 8 },
        ("E8^1", 2) => M::Grassmannian { k: 3, n: 9 },
        ("E8^1", 5) => M::product(vec![p(4), M::Grassmannian { k: 2, n: 5 }]),
        ("F4^1", 1) => M::product(vec![M::Lagrangian { n: 3 }, p(1)]),
        ("F4^1", 2) => M::product(vec![M::Projective { n: 2, veronese: 2 }, p(2)]),
        ("G2^1", 2) => M::product(vec![M::Projective { n: 1, veronese: 3 }, p(1)]),
        ("E6^2", 4) => M::Lagrangian { n: 4 },
        ("D4^3", 2) => M::Projective { n: 2, veronese: 3 },
        _ => return None,
    })
}

/// Reference data of the parametric classical rows, instantiated.
fn classical_reference(d: &KacDiagram, node: usize) -> Option<(ReferenceRow, ChowModel)> {
    let q = ChowModel::quadric;
    let l = d.rank;
    let row = |g0: String, g1: String, g1_dim: usize, weyl: String, count: u64, orbit: String, codegree: u64| ReferenceRow {
        g0_type: g0,
        g1,
        g1_dim,
        m: 2,
        little_weyl: weyl,
        reflections: (2, count),
        orbit,
        codegree,
    };
    match (d.family, d.twist) {
        (Family::B, 1) if l % 2 == 0 && node == l / 2 && l >= 4 => {
            let p = l / 2;
            let pu = p as u64;
            Some((
                row(
                    format!("D{p}xB{p}"),
                    format!("C^{} (x) C^{}", 2 * p, 2 * p + 1),
                    2 * p * (2 * p + 1),
                    format!("W(B{})", 2 * p),
                    4 * pu * pu,
                    format!("Q^{} x Q^{}", 2 * p - 2, 2 * p - 1),
                    4 * pu * (2 * pu - 1),
                ),
                ChowModel::product(vec![q(2 * p - 2), q(2 * p - 1)]),
            ))
        }
        (Family::B, 1) if l % 2 == 1 && node == (l + 1) / 2 && l >= 3 => {
            let p = (l + 1) / 2;
            let pu = p as u64;
            Some((
                row(
                    format!("D{p}xB{}", p - 1),
                    format!("C^{} (x) C^{}", 2 * p, 2 * p - 1),
                    2 * p * (2 * p - 1),
                    format!("W(B{})", 2 * p - 1),
                    4 * pu * pu - 4 * pu + 1,
                    format!("Q^{} x Q^{}", 2 * p - 2, 2 * p - 3),
                    4 * (pu - 1) * (2 * pu - 1),
                ),
                ChowModel::product(vec![q(2 * p - 2), q(2 * p - 3)]),
            ))
        }
        (Family::D, 1) if l % 2 == 0 && node == l / 2 && l >= 4 => {
            let p = l / 2;
            let pu = p as u64;
            Some((
                row(
                    format!("D{p}xD{p}"),
                    format!("C^{} (x) C^{}", 2 * p, 2 * p),
                    4 * p * p,
                    format!("W(D{})", 2 * p),
                    4 * pu * pu - 2 * pu,
                    format!("Q^{} x Q^{}", 2 * p - 2, 2 * p - 2),
                    4 * pu * (2 * pu - 1),
                ),
                ChowModel::product(vec![q(2 * p - 2), q(2 * p - 2)]),
            ))
        }
        (Family::A, 2) if l % 2 == 0 && node == d.node_count() - 1 => {
            let n = l / 2 + 1;
            let nu = n as u64;
            let big = 2 * n - 1;
            Some((
                row(
                    format!("B{}", n - 1),
                    format!("S^<2> C^{big}"),
                    big * (big + 1) / 2 - 1,
                    format!("W(A{})", 2 * n - 2),
                    2 * nu * nu - 3 * nu + 1,
                    format!("v_2(Q^{})", 2 * n - 3),
                    2 * (nu - 1) * (2 * nu - 1),
                ),
                ChowModel::Quadric { dim: 2 * n - 3, veronese: 2 },
            ))
        }
        (Family::A, 2) if l % 2 == 1 && node == d.node_count() - 1 => {
            let n = (l + 3) / 2;
            let nu = n as u64;
            let big = 2 * n - 2;
            Some((
                row(
                    format!("D{}", n - 1),
                    format!("S^<2> C^{big}"),
                    big * (big + 1) / 2 - 1,
                    format!("W(A{})", 2 * n - 3),
                    2 * nu * nu - 5 * nu + 3,
                    format!("v_2(Q^{})", 2 * n - 4),
                    2 * (nu - 1) * (2 * nu - 3),
                ),
                ChowModel::Quadric { dim: 2 * n - 4, veronese: 2 },
            ))
        }
        (Family::D, 2) if l % 2 == 1 && node == (l - 1) / 2 => {
            let p = (l - 1) / 2;
            let pu = p as u64;
            Some((
                row(
                    format!("B{p}xB{p}"),
                    format!("C^{} (x) C^{}", 2 * p + 1, 2 * p + 1),
                    (2 * p + 1) * (2 * p + 1),
                    format!("W(D{})", 2 * p + 1),
                    4 * pu * pu + 2 * pu,
                    format!("Q^{} x Q^{}", 2 * p - 1, 2 * p - 1),
                    4 * pu * (2 * pu + 1),
                ),
                ChowModel::product(vec![q(2 * p - 1), q(2 * p - 1)]),
            ))
        }
        _ => None,
    }
}

fn reference_row(d: &KacDiagram, node: usize) -> Option<(ReferenceRow, Option<ChowModel>)> {
    let name = d.name();
    if let Some(r) = EXCEPTIONAL_ROWS
        .iter()
        .find(|r| r.diagram == name && r.node == node)
    {
        return Some((
            ReferenceRow {
                g0_type: r.g0.into(),
                g1: r.g1.into(),
                g1_dim: r.g1_dim,
                m: r.m,
                little_weyl: r.weyl.into(),
                reflections: r.refl,
                orbit: r.orbit.into(),
                codegree: r.codegree,
            },
            exceptional_model(r.diagram, r.node),
        ));
    }
    classical_reference(d, node).map(|(r, m)| (r, Some(m)))
}

/// Closed-orbit label and codegree (= deg D for the long class).
pub fn closed_orbit_and_codegree(report: &GradingReport) -> Result<(String, u64)> {
    let label = report
        .reference
        .as_ref()
        .map(|p| p.orbit.clone())
        .ok_or_else(|| Error::Unsupported(format!("unknown orbit for {} node {}", report.diagram, report.chosen_node)))?;
    let deg = deg_discriminant(report, LengthClass::Long)?;
    Ok((label, deg))
}

/// Builds the full report for one node.
pub fn full_report(d: &KacDiagram, node: usize) -> Result<GradingReport> {
    let mut r = grading_from_node(d, node)?;
    theta_rank_and_corank(&mut r, d);
    if let Some((reference, model)) = reference_row(d, node) {
        r.g1_description = Some(format!("{} (dim {})", reference.g1, reference.g1_dim));
        r.orbit_model = model;
        r.reference = Some(reference);
    }
    if let Ok(profile) = reflection_profile(&r) {
        r.deg_d = profile
            .iter()
            .map(|c| DegreeEntry {
                class: c.class,
                degree: c.hyperplanes * r.m as u64,
            })
            .collect();
        r.reflection_profile = Some(profile);
        r.little_weyl_name = identify_little_weyl(&r);
    }
    if let Ok((label, deg)) = closed_orbit_and_codegree(&r) {
        r.closed_orbit_label = Some(label);
        r.codegree = Some(deg);
    }
    compare_with_reference(&mut r);
    Ok(r)
}

fn compare_with_reference(r: &mut GradingReport) {
    let Some(p) = r.reference.clone() else { return };
    let reference_g0 = parse_types(&p.g0_type).map(|t| normalize_types(&t));
    let computed_g0 = parse_types(&r.g0_type).map(|t| normalize_types(&t));
    if reference_g0 != computed_g0 {
        let g1 = r.dims.as_ref().map(|d| d[1]).unwrap_or(0);
        r.warnings.push(format!(
            "reference g0 = {} with g1 = {} (dim {}) but deleting node {} of {} gives g0 = {} with dim g1 = {}; dim g0 + dim g1 for the reference row is {} + {} != {}",
            p.g0_type,
            p.g1,
            p.g1_dim,
            r.chosen_node,
            r.diagram,
            r.g0_type,
            g1,
            normalize_types(&parse_types(&p.g0_type).unwrap_or_default())
                .iter()
                .map(|t| t.dim())
                .sum::<usize>(),
            p.g1_dim,
            r.g_type.dim()
        ));
    } else if let Some(d) = &r.dims {
        if d[1] != p.g1_dim {
            r.warnings.push(format!("dim g1 = {} but reference {} has dim {}", d[1], p.g1, p.g1_dim));
        }
    }
}

/// The diagrams scanned for the classification, up to `max_rank`.
pub fn diagrams_up_to(max_rank: usize) -> Vec<KacDiagram> {
    let mut out = Vec::new();
    for (f, lo) in [(Family::B, 2), (Family::C, 3), (Family::D, 4)] {
        for r in lo..=max_rank {
            out.push(kac_diagram(f, r, 1).expect("valid"));
        }
    }
    for (f, r) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
        out.push(kac_diagram(f, r, 1).expect("valid"));
    }
    for r in 2..=max_rank {
        if let Ok(d) = kac_diagram(Family::A, r, 2) {
            out.push(d);
        }
    }
    for r in 3..=max_rank {
        out.push(kac_diagram(Family::D, r, 2).expect("valid"));
    }
    out.push(kac_diagram(Family::E, 6, 2).expect("valid"));
    out.push(kac_diagram(Family::D, 4, 3).expect("valid"));
    out
}

/// All single-node gradings of prime order 2, 3 or 5 with theta-corank 0 and
/// semisimple g_0, over the diagrams up to `max_rank`.
pub fn scan_classification(max_rank: usize) -> Result<Vec<GradingReport>> {
    let diagrams = diagrams_up_to(max_rank);
    let jobs: Vec<(KacDiagram, usize)> = diagrams
        .iter()
        .flat_map(|d| {
            (0..d.node_count())
                .filter(|&i| [2, 3, 5].contains(&d.marks[i]))
                .map(move |i| (d.clone(), i))
        })
        .collect();
    let reports: Vec<Result<Option<GradingReport>>> = jobs
        .par_iter()
        .map(|(d, i)| {
            let r = full_report(d, *i)?;
            Ok((r.theta_corank == Corank::Known(0) && r.g0_center == 0).then_some(r))
        })
        .collect();
    let mut out = Vec::new();
    for r in reports {
        if let Some(r) = r? {
            out.push(r);
        }
    }
    Ok(out)
}

pub fn is_exceptional_row(r: &GradingReport) -> bool {
    EXCEPTIONAL_ROWS
        .iter()
        .any(|c| c.diagram == r.diagram && c.node == r.chosen_node)
}

/// One reference entry of the degree table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTableEntry {
    pub group: String,
    pub class: String,
    pub parameter: Option<u64>,
    pub reference: u64,
    pub computed: u64,
}

/// Parametric degree formulas at the given parameter values, next to the
/// values recomputed from root counts of the Weyl-group type.
pub fn degree_table(params: std::ops::RangeInclusive<u64>) -> Result<Vec<DegreeTableEntry>> {
    type Formula = fn(i64) -> i64;
    let fam: &[(&str, Family, fn(i64) -> i64, LengthClass, Formula)] = &[
        ("W(A_{2n-2})", Family::A, |n| 2 * n - 2, LengthClass::Long, |n| (2 * n - 1) * (2 * n - 2)),
        ("W(A_{2n-3})", Family::A, |n| 2 * n - 3, LengthClass::Long, |n| (2 * n - 2) * (2 * n - 3)),
        ("W(B_{2p})", Family::B, |p| 2 * p, LengthClass::Long, |p| 4 * p * (2 * p - 1)),
        ("W(B_{2p})", Family::B, |p| 2 * p, LengthClass::Short, |p| 4 * p),
        ("W(B_{2p-1})", Family::B, |p| 2 * p - 1, LengthClass::Long, |p| 4 * (p - 1) * (2 * p - 1)),
        ("W(B_{2p-1})", Family::B, |p| 2 * p - 1, LengthClass::Short, |p| 4 * p - 2),
        ("W(D_{2p})", Family::D, |p| 2 * p, LengthClass::Long, |p| 4 * p * (2 * p - 1)),
        ("W(D_{2p+1})", Family::D, |p| 2 * p + 1, LengthClass::Long, |p| 4 * p * (2 * p + 1)),
    ];
    let mut out = Vec::new();
    for &(group, family, rank_of, class, formula) in fam {
        for p in params.clone() {
            let rank = rank_of(p as i64);
            let reference = formula(p as i64);
            let computed = if rank <= 0 {
                0
            } else {
                let (long, short) = root_census(family, rank as usize)?;
                match class {
                    LengthClass::Long => long,
                    LengthClass::Short => short,
                }
            };
            out.push(DegreeTableEntry {
                group: group.into(),
                class: class_label(class, family),
                parameter: Some(p),
                reference: reference.max(0) as u64,
                computed: computed as u64,
            });
        }
    }
    // Constant rows come from the classification reports themselves.
    let constants: &[(&str, &str, LengthClass, u64)] = &[
        ("W(E6)", "E6^2", LengthClass::Long, 72),
        ("32nd", "E8^1", LengthClass::Long, 120),
        ("W(E7)", "E7^1", LengthClass::Long, 126),
        ("16th", "E8^1", LengthClass::Long, 60),
        ("25th", "E6^1", LengthClass::Long, 36),
        ("W(E8)", "E8^1", LengthClass::Long, 240),
        ("4th", "D4^3", LengthClass::Long, 12),
        ("W(G2)", "G2^1", LengthClass::Long, 6),
        ("W(G2)", "G2^1", LengthClass::Short, 6),
        ("5th", "F4^1", LengthClass::Long, 12),
        ("5th", "F4^1", LengthClass::Short, 12),
        ("W(F4)", "F4^1", LengthClass::Long, 24),
        ("W(F4)", "F4^1", LengthClass::Short, 24),
    ];
    let rows = scan_classification(4)?;
    for &(group, diagram, class, reference) in constants {
        let r = rows
            .iter()
            .find(|r| r.diagram == diagram && r.little_weyl_name.as_deref() == Some(group))
            .ok_or_else(|| Error::CrossCheck(format!("no classification row with group {group}")))?;
        let computed = deg_discriminant(r, class)?;
        let family = r.g_type.family;
        out.push(DegreeTableEntry {
            group: group.into(),
            class: class_label(class, family),
            parameter: None,
            reference,
            computed,
        });
    }
    Ok(out)
}

fn class_label(class: LengthClass, family: Family) -> String {
    if family.is_simply_laced() {
        "alpha".into()
    } else {
        match class {
            LengthClass::Long => "alpha_l".into(),
            LengthClass::Short => "alpha_s".into(),
        }
    }
}

/// Count of the classical rows in a scan, by family label.
pub fn family_counts(rows: &[GradingReport]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for r in rows {
        *out.entry(r.diagram.clone()).or_insert(0) += 1;
    }
    out
}

/// Root counts of g by length (long, short).
pub fn root_classes(g: SimpleType) -> Result<(usize, usize)> {
    root_census(g.family, g.rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> KacDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn reference_marks() {
        assert_eq!(d("E8^1").marks, vec![1, 2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(d("A2^2").marks, vec![4, 2]);
        assert_eq!(d("D4^3").marks, vec![3, 6, 3]);
        assert_eq!(d("E6^1").marks, vec![1, 1, 2, 2, 3, 2, 1]);
        assert_eq!(d("E7^1").marks, vec![1, 2, 2, 3, 4, 3, 2, 1]);
        assert_eq!(d("F4^1").marks, vec![1, 2, 3, 4, 2]);
        // G2: affine node, then alpha1 (short, mark 3), alpha2 (long, mark 2)
        assert_eq!(d("G2^1").marks, vec![1, 3, 2]);
        assert_eq!(d("E6^2").marks, vec![2, 4, 6, 4, 2]);
        assert!(kac_diagram(Family::B, 3, 3).is_err());
    }

    #[test]
    fn marks_span_the_null_space() {
        for dg in diagrams_up_to(8) {
            let tw = dg.twist as i64;
            for row in &dg.cartan {
                let s: i64 = row.iter().zip(&dg.marks).map(|(a, m)| a * (*m as i64) / tw).sum();
                assert_eq!(s, 0, "{}", dg.name());
            }
        }
    }

    #[test]
    fn node_gradings() {
        let e7 = grading_from_node(&d("E7^1"), 2).unwrap();
        assert_eq!((e7.m, e7.g0_type.as_str()), (2, "A7"));
        assert_eq!(e7.dims, Some(vec![63, 70]));
        let e8 = grading_from_node(&d("E8^1"), 2).unwrap();
        assert_eq!(e8.dims, Some(vec![80, 84, 84]));
        let a = grading_from_node(&d("A6^2"), 3).unwrap();
        assert_eq!((a.m, a.g0_type.as_str()), (2, "B3"));
        let f4 = grading_from_node(&d("F4^1"), 1).unwrap();
        assert_eq!(f4.g0_type, "A1xC3");
        assert_eq!(f4.dims, Some(vec![24, 28]));
        let g2 = grading_from_node(&d("D4^3"), 0).unwrap();
        assert_eq!(g2.g0_type, "G2");
        let e62 = grading_from_node(&d("E6^2"), 0).unwrap();
        assert_eq!(e62.g0_type, "F4");
    }

    #[test]
    fn theta_ranks() {
        for l in 3..=8 {
            let dg = kac_diagram(Family::C, l, 1).unwrap();
            for node in 1..l {
                let mut r = full_report(&dg, node).unwrap();
                let (_, c) = theta_rank_and_corank(&mut r, &dg);
                assert_ne!(c, Corank::Known(0));
            }
        }
        let r = full_report(&d("E8^1"), 5).unwrap();
        assert_eq!((r.theta_rank, r.theta_corank), (Some(2), Corank::Known(0)));
        let r = full_report(&d("A8^2"), 4).unwrap();
        assert_eq!((r.theta_rank, r.theta_corank), (Some(8), Corank::Known(0)));
        let r = full_report(&d("E8^1"), 7).unwrap();
        assert_eq!(r.theta_corank, Corank::Positive);
    }

    #[test]
    fn reflection_counts() {
        let r = full_report(&d("E7^1"), 2).unwrap();
        let p = r.reflection_profile.clone().unwrap();
        assert_eq!(p.iter().map(|c| c.reflections).sum::<u64>(), 63);
        let r = full_report(&d("E8^1"), 5).unwrap();
        let p = r.reflection_profile.clone().unwrap();
        assert_eq!((p[0].reflections, p[0].hyperplanes), (48, 12));
        let r = full_report(&d("F4^1"), 2).unwrap();
        let p = r.reflection_profile.clone().unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|c| c.hyperplanes == 4 && c.reflections == 8));
        assert_eq!(r.little_weyl_name.as_deref(), Some("5th"));
    }

    #[test]
    fn degrees_and_orbits() {
        let e7 = full_report(&d("E7^1"), 2).unwrap();
        assert_eq!(deg_discriminant(&e7, LengthClass::Long).unwrap(), 126);
        assert!(deg_discriminant(&e7, LengthClass::Short).is_err());
        let e8 = full_report(&d("E8^1"), 2).unwrap();
        assert_eq!(deg_discriminant(&e8, LengthClass::Long).unwrap(), 120);
        let b = full_report(&d("B6^1"), 3).unwrap();
        assert_eq!(deg_discriminant(&b, LengthClass::Short).unwrap(), 12);
        let r = full_report(&d("E8^1"), 1).unwrap();
        assert_eq!(closed_orbit_and_codegree(&r).unwrap(), ("OG(8,16)_+".into(), 240));
        let r = full_report(&d("D4^3"), 2).unwrap();
        assert_eq!(closed_orbit_and_codegree(&r).unwrap(), ("v_3(P^2)".into(), 12));
    }

    #[test]
    fn reflection_group_constants() {
        for n in [4, 5, 16, 25, 32] {
            let g = shephard_todd(n).unwrap();
            assert_eq!(g.degrees.len(), g.rank);
        }
        assert_eq!(shephard_todd(32).unwrap().order(), 155_520);
        assert_eq!(weyl_group_data(SimpleType::new(Family::E, 8)).reflections, 120);
    }
}
