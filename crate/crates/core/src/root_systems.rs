//! Finite root systems of simple Lie algebras in their standard orthonormal
//! models, with exact rational coordinates and Bourbaki numbering.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Family::from_letter(c)
                .ok_or_else(|| Error::Precondition(format!("unknown family '{s}'"))),
            _ => Err(Error::Precondition(format!("unknown family '{s}'"))),
        }
    }
}

/// Checks the Bourbaki constraints on (family, rank).
pub fn validate_type(family: Family, rank: usize) -> Result<()> {
    let bad = |reason: &str| Error::InvalidType {
        family: family.letter(),
        rank,
        reason: reason.to_string(),
    };
    match family {
        Family::A if rank < 1 => Err(bad("type A needs rank >= 1")),
        Family::B if rank < 2 => Err(bad("type B needs rank >= 2")),
        Family::C if rank < 3 => Err(bad("type C needs rank >= 3 (C2 is B2)")),
        Family::D if rank < 4 => Err(bad("type D needs rank >= 4 (D3 is A3)")),
        Family::E if !(6..=8).contains(&rank) => Err(bad("type E needs rank 6, 7 or 8")),
        Family::F if rank != 4 => Err(bad("type F needs rank 4")),
        Family::G if rank != 2 => Err(bad("type G needs rank 2")),
        _ => Ok(()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LengthClass::Long => "long",
            LengthClass::Short => "short",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector {
    pub coordinates: Vec<Q>,
    pub squared_length: Q,
}

impl RootVector {
    pub fn new(coordinates: Vec<Q>) -> Self {
        let squared_length = dot(&coordinates, &coordinates);
        RootVector {
            coordinates,
            squared_length,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    pub roots: Vec<RootVector>,
    pub simple_roots: Vec<RootVector>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub length_class: Vec<LengthClass>,
    /// n^alpha_i for every root, in the order of `roots`.
    pub simple_coordinates: Vec<Vec<i64>>,
    #[serde(skip)]
    gram_inverse: Vec<Vec<Q>>,
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn half(n: i64) -> Q {
    Q::new(n, 2)
}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = q(1);
    v[j] = q(-1);
    v
}

fn simple_roots_of(family: Family, rank: usize) -> Vec<Vec<Q>> {
    let n = rank;
    match family {
        Family::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        Family::B => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            s.push(unit(n, n - 1));
            s
        }
        Family::C => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![Q::zero(); n];
            last[n - 1] = q(2);
            s.push(last);
            s
        }
        Family::D => {
            let mut s: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut last = vec![Q::zero(); n];
            last[n - 2] = q(1);
            last[n - 1] = q(1);
            s.push(last);
            s
        }
        Family::E => {
            // E8 in R^8; E6 and E7 use the first rank simple roots.
            let mut a1 = vec![half(-1); 8];
            a1[0] = half(1);
            a1[7] = half(1);
            let mut a2 = vec![Q::zero(); 8];
            a2[0] = q(1);
            a2[1] = q(1);
            let mut s = vec![a1, a2];
            for i in 0..6 {
                s.push(diff(8, i + 1, i));
            }
            s.truncate(n);
            s
        }
        Family::F => {
            let a4 = vec![half(1), half(-1), half(-1), half(-1)];
            vec![diff(4, 1, 2), diff(4, 2, 3), unit(4, 3), a4]
        }
        Family::G => vec![
            vec![q(1), q(-1), q(0)],
            vec![q(-2), q(1), q(1)],
        ],
    }
}

/// Inner-product-free pairing <beta, alpha> = 2 (beta, alpha) / (alpha, alpha).
pub fn cartan_pairing(beta: &[Q], alpha: &[Q]) -> Result<Q> {
    let aa = dot(alpha, alpha);
    if aa.is_zero() {
        return Err(Error::Precondition("cartan pairing against the zero vector".into()));
    }
    Ok(q(2) * dot(beta, alpha) / aa)
}

/// s_alpha(v) = v - <v, alpha> alpha.
pub fn weyl_reflect(alpha: &[Q], v: &[Q]) -> Vec<Q> {
    let c = q(2) * dot(v, alpha) / dot(alpha, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
}

fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn long_squared_length(family: Family) -> Q {
    match family {
        Family::C => q(4),
        Family::G => q(6),
        _ => q(2),
    }
}

// Every root is W-conjugate to a simple root, so closing the simple roots
// under simple reflections yields the whole system.
fn close_under_reflections(simple: &[Vec<Q>]) -> BTreeSet<Vec<Q>> {
    let mut seen: BTreeSet<Vec<Q>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<Q>> = simple.iter().cloned().collect();
    while let Some(v) = queue.pop_front() {
        for a in simple {
            let w = weyl_reflect(a, &v);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen
}

/// (long, short) root counts, also for the degenerate classical ranks that
/// parametric families reach at small parameters: A0, B1, C1, C2, D2, D3.
pub fn root_census(family: Family, rank: usize) -> Result<(usize, usize)> {
    let degenerate = match family {
        Family::A => rank == 0,
        Family::B => rank == 1,
        Family::C => (1..=2).contains(&rank),
        Family::D => (2..=3).contains(&rank),
        _ => false,
    };
    if !degenerate {
        let rs = build_root_system(family, rank)?;
        return Ok(root_counts_by_length(&rs));
    }
    if rank == 0 {
        return Ok((0, 0));
    }
    let simple = simple_roots_of(family, rank);
    let long = long_squared_length(family);
    let roots = close_under_reflections(&simple);
    let n_long = roots.iter().filter(|r| dot(r, r) == long).count();
    Ok((n_long, roots.len() - n_long))
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    validate_type(family, rank)?;
    let simple = simple_roots_of(family, rank);

    let seen = close_under_reflections(&simple);
    let roots: Vec<RootVector> = seen.into_iter().map(RootVector::new).collect();
    let simple_roots: Vec<RootVector> = simple.iter().cloned().map(RootVector::new).collect();

    let cartan_matrix = simple
        .iter()
        .map(|ai| {
            simple
                .iter()
                .map(|aj| {
                    let c = cartan_pairing(aj, ai).expect("simple roots are nonzero");
                    c.to_integer()
                })
                .collect()
        })
        .collect();

    let long = long_squared_length(family);
    let length_class = roots
        .iter()
        .map(|r| {
            if r.squared_length == long {
                LengthClass::Long
            } else {
                LengthClass::Short
            }
        })
        .collect();

    let gram: Vec<Vec<Q>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| dot(a, b)).collect())
        .collect();
    let gram_inverse = invert(&gram).expect("simple roots are linearly independent");

    let mut rs = RootSystem {
        family,
        rank,
        roots,
        simple_roots,
        cartan_matrix,
        length_class,
        simple_coordinates: Vec::new(),
        gram_inverse,
    };
    let coords = rs
        .roots
        .iter()
        .map(|r| rs.solve_simple_coordinates(&r.coordinates))
        .collect::<Result<Vec<_>>>()?;
    rs.simple_coordinates = coords;
    Ok(rs)
}

impl RootSystem {
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn ambient_dim(&self) -> usize {
        self.simple_roots[0].coordinates.len()
    }

    /// dim g = |R| + rank.
    pub fn lie_algebra_dim(&self) -> usize {
        self.roots.len() + self.rank
    }

    pub fn index_of(&self, v: &[Q]) -> Option<usize> {
        self.roots
            .binary_search_by(|r| r.coordinates.as_slice().cmp(v))
            .ok()
    }

    fn solve_simple_coordinates(&self, v: &[Q]) -> Result<Vec<i64>> {
        let b: Vec<Q> = self
            .simple_roots
            .iter()
            .map(|a| dot(v, &a.coordinates))
            .collect();
        let n: Vec<Q> = self
            .gram_inverse
            .iter()
            .map(|row| dot(row, &b))
            .collect();
        if n.iter().any(|x| !x.is_integer()) {
            return Err(Error::NotARoot(format!("{v:?} is not in the root lattice")));
        }
        let mut recon = vec![Q::zero(); v.len()];
        for (c, a) in n.iter().zip(&self.simple_roots) {
            for (r, x) in recon.iter_mut().zip(&a.coordinates) {
                *r += c * x;
            }
        }
        if recon != v {
            return Err(Error::NotARoot(format!("{v:?} is outside the span of the simple roots")));
        }
        Ok(n.iter().map(|x| x.to_integer()).collect())
    }

    pub fn highest_root(&self) -> &RootVector {
        let idx = (0..self.roots.len())
            .max_by_key(|&i| self.simple_coordinates[i].iter().sum::<i64>())
            .expect("nonempty");
        &self.roots[idx]
    }

    pub fn highest_root_coordinates(&self) -> Vec<i64> {
        let h = self.highest_root();
        simple_root_coordinates(self, &h.coordinates).expect("highest root is a root")
    }

    pub fn roots_of_class(&self, class: LengthClass) -> usize {
        self.length_class.iter().filter(|&&c| c == class).count()
    }
}

pub fn root_counts_by_length(rs: &RootSystem) -> (usize, usize) {
    (
        rs.roots_of_class(LengthClass::Long),
        rs.roots_of_class(LengthClass::Short),
    )
}

pub fn simple_root_coordinates(rs: &RootSystem, alpha: &[Q]) -> Result<Vec<i64>> {
    match rs.index_of(alpha) {
        Some(i) => Ok(rs.simple_coordinates[i].clone()),
        None => Err(Error::NotARoot(format!("{alpha:?} is not a root of {}", rs.name()))),
    }
}

/// Orbit of `v` under the Weyl group, sorted lexicographically.
pub fn weyl_orbit(rs: &RootSystem, v: &[Q]) -> Vec<Vec<Q>> {
    let mut seen: BTreeSet<Vec<Q>> = BTreeSet::new();
    seen.insert(v.to_vec());
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for a in &rs.simple_roots {
            let y = weyl_reflect(&a.coordinates, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Classical closed-form root counts, used as an independent check.
pub fn expected_root_count(family: Family, rank: usize) -> usize {
    let n = rank;
    match family {
        Family::A => n * (n + 1),
        Family::B | Family::C => 2 * n * n,
        Family::D => 2 * n * (n - 1),
        Family::E => match n {
            6 => 72,
            7 => 126,
            _ => 240,
        },
        Family::F => 48,
        Family::G => 12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn a2_has_six_long_roots() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert_eq!(rs.roots.len(), 6);
        assert_eq!(root_counts_by_length(&rs), (6, 0));
    }

    #[test]
    fn e7_root_count() {
        assert_eq!(build_root_system(Family::E, 7).unwrap().roots.len(), 126);
    }

    #[test]
    fn b3_splits_into_pm_ei_pm_ej_and_pm_ei() {
        let rs = build_root_system(Family::B, 3).unwrap();
        let long: BTreeSet<Vec<Q>> = rs
            .roots
            .iter()
            .zip(&rs.length_class)
            .filter(|(_, c)| **c == LengthClass::Long)
            .map(|(r, _)| r.coordinates.clone())
            .collect();
        let mut oracle = BTreeSet::new();
        for i in 0..3 {
            for j in i + 1..3 {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut v = vec![0; 3];
                    v[i] = si;
                    v[j] = sj;
                    oracle.insert(qs(&v));
                }
            }
        }
        assert_eq!(long, oracle);
        assert_eq!(root_counts_by_length(&rs), (12, 6));
    }

    #[test]
    fn length_profiles() {
        let f4 = build_root_system(Family::F, 4).unwrap();
        assert_eq!(root_counts_by_length(&f4), (24, 24));
        let g2 = build_root_system(Family::G, 2).unwrap();
        assert_eq!(root_counts_by_length(&g2), (6, 6));
        for n in 1..8 {
            let a = build_root_system(Family::A, n).unwrap();
            assert_eq!(root_counts_by_length(&a), (n * (n + 1), 0));
        }
    }

    #[test]
    fn pairings() {
        let a2 = build_root_system(Family::A, 2).unwrap();
        let a = &a2.simple_roots[0].coordinates;
        let b = &a2.simple_roots[1].coordinates;
        assert_eq!(cartan_pairing(a, a).unwrap(), q(2));
        assert_eq!(cartan_pairing(b, a).unwrap(), q(-1));
        assert!(cartan_pairing(a, &qs(&[0, 0, 0])).is_err());
        assert_eq!(a2.cartan_matrix, vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn equal_length_pairings_are_small() {
        for (f, n) in [(Family::B, 3), (Family::F, 4), (Family::E, 6), (Family::G, 2)] {
            let rs = build_root_system(f, n).unwrap();
            for (i, b) in rs.roots.iter().enumerate() {
                for (j, a) in rs.roots.iter().enumerate() {
                    if rs.length_class[i] != rs.length_class[j] {
                        continue;
                    }
                    let neg: Vec<Q> = a.coordinates.iter().map(|x| -x).collect();
                    if b.coordinates == a.coordinates || b.coordinates == neg {
                        continue;
                    }
                    let c = cartan_pairing(&b.coordinates, &a.coordinates).unwrap();
                    assert!(c.abs() <= Q::one(), "{f}{n}: {c}");
                }
            }
        }
    }

    #[test]
    fn reflections() {
        let b2 = build_root_system(Family::B, 2).unwrap();
        let a = b2.simple_roots[0].coordinates.clone();
        let neg: Vec<Q> = a.iter().map(|x| -x).collect();
        assert_eq!(weyl_reflect(&a, &a), neg);
        let orbit = weyl_orbit(&b2, &a);
        assert_eq!(orbit.len(), 4);
        assert!(orbit.iter().all(|v| dot(v, v) == q(2)));
        let a2 = build_root_system(Family::A, 2).unwrap();
        let o = weyl_orbit(&a2, &a2.roots[0].coordinates);
        assert_eq!(o.len(), 6);
    }

    #[test]
    fn highest_roots() {
        let f4 = build_root_system(Family::F, 4).unwrap();
        assert_eq!(f4.highest_root_coordinates(), vec![2, 3, 4, 2]);
        let e8 = build_root_system(Family::E, 8).unwrap();
        assert_eq!(e8.highest_root_coordinates(), vec![2, 3, 4, 6, 5, 4, 3, 2]);
        let e6 = build_root_system(Family::E, 6).unwrap();
        assert_eq!(e6.highest_root_coordinates(), vec![1, 2, 2, 3, 2, 1]);
        let g2 = build_root_system(Family::G, 2).unwrap();
        assert_eq!(g2.highest_root_coordinates(), vec![3, 2]);
    }

    #[test]
    fn simple_roots_are_unit_vectors() {
        let rs = build_root_system(Family::E, 6).unwrap();
        for (i, a) in rs.simple_roots.iter().enumerate() {
            let c = simple_root_coordinates(&rs, &a.coordinates).unwrap();
            let mut e = vec![0; 6];
            e[i] = 1;
            assert_eq!(c, e);
        }
        assert!(simple_root_coordinates(&rs, &[q(1); 8]).is_err());
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(build_root_system(Family::E, 9).is_err());
        assert!(build_root_system(Family::D, 3).is_err());
        assert!(build_root_system(Family::C, 2).is_err());
        assert!(build_root_system(Family::G, 3).is_err());
        let err = build_root_system(Family::F, 5).unwrap_err().to_string();
        assert!(err.contains("rank 4"));
    }

    #[test]
    fn degenerate_census() {
        assert_eq!(root_census(Family::A, 0).unwrap(), (0, 0));
        assert_eq!(root_census(Family::B, 1).unwrap(), (0, 2));
        assert_eq!(root_census(Family::D, 2).unwrap(), (4, 0));
        assert_eq!(root_census(Family::D, 3).unwrap(), (12, 0));
        assert_eq!(root_census(Family::C, 2).unwrap(), (4, 4));
        assert_eq!(root_census(Family::B, 4).unwrap(), (24, 8));
    }

    #[test]
    fn closed_form_counts_up_to_rank_12() {
        for n in 1..=12 {
            for f in [Family::A, Family::B, Family::C, Family::D] {
                if validate_type(f, n).is_ok() {
                    let rs = build_root_system(f, n).unwrap();
                    assert_eq!(rs.roots.len(), expected_root_count(f, n), "{f}{n}");
                }
            }
        }
        for (f, n) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
            assert_eq!(build_root_system(f, n).unwrap().roots.len(), expected_root_count(f, n));
        }
    }
}
