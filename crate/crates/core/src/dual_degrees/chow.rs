//! Finite presentations of intersection rings: projective spaces, quadrics,
//! Grassmannians, the Lagrangian and spinor varieties inside G(n,2n), and
//! finite products of these.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symmetric_functions::{
    expand_alt_square, expand_sym_square, horizontal_strips, lr_coefficients,
    tensor_chern_schur, Partition,
};

pub type Key = Vec<u32>;

/// A class as a sparse rational combination of basis keys.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Class(pub BTreeMap<Key, BigRational>);

impl Class {
    pub fn zero() -> Self {
        Class(BTreeMap::new())
    }

    pub fn basis(key: Key) -> Self {
        Class::term(key, BigRational::one())
    }

    pub fn term(key: Key, c: BigRational) -> Self {
        let mut m = Class::zero();
        m.add_term(key, c);
        m
    }

    pub fn add_term(&mut self, key: Key, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let v = self.0.remove(&key).unwrap_or_else(BigRational::zero) + c;
        if !v.is_zero() {
            self.0.insert(key, v);
        }
    }

    pub fn add_assign(&mut self, other: &Class) {
        for (k, v) in &other.0 {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn scaled(&self, c: &BigRational) -> Class {
        let mut out = Class::zero();
        for (k, v) in &self.0 {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat_big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// Varieties with a supported intersection ring. `veronese` multiplies the
/// hyperplane class of the natural embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChowModel {
    Projective { n: usize, veronese: u32 },
    Quadric { dim: usize, veronese: u32 },
    Grassmannian { k: usize, n: usize },
    /// LG(n, 2n) inside G(n, 2n), of class sigma_{delta(n)}.
    Lagrangian { n: usize },
    /// One component of OG(n, 2n) inside G(n, 2n), of class
    /// 2^{n-1} sigma_{delta(n+1)}, with the half-spin polarization.
    Spinor { n: usize },
    Product { factors: Vec<ChowModel> },
}

impl fmt::Display for ChowModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChowModel::Projective { n, veronese: 1 } => write!(f, "P^{n}"),
            ChowModel::Projective { n, veronese } => write!(f, "v_{veronese}(P^{n})"),
            ChowModel::Quadric { dim, veronese: 1 } => write!(f, "Q^{dim}"),
            ChowModel::Quadric { dim, veronese } => write!(f, "v_{veronese}(Q^{dim})"),
            ChowModel::Grassmannian { k, n } => write!(f, "G({k},{n})"),
            ChowModel::Lagrangian { n } => write!(f, "LG({n},{})", 2 * n),
            ChowModel::Spinor { n } => write!(f, "OG({n},{})_+", 2 * n),
            ChowModel::Product { factors } => {
                let parts: Vec<String> = factors.iter().map(|m| m.to_string()).collect();
                f.write_str(&parts.join(" x "))
            }
        }
    }
}

impl FromStr for ChowModel {
    type Err = Error;

    /// Parses the display form: `P^2`, `Q^3`, `v_3(P^2)`, `G(2,5)`, `LG(3,6)`,
    /// `OG(5,10)_+`, and products joined by ` x `.
    fn from_str(s: &str) -> Result<ChowModel> {
        let bad = || Error::Precondition(format!("cannot parse variety '{s}'"));
        let factors: Vec<&str> = s.split(" x ").map(str::trim).collect();
        if factors.len() > 1 {
            let parsed = factors
                .iter()
                .map(|f| f.parse())
                .collect::<Result<Vec<ChowModel>>>()?;
            return Ok(ChowModel::product(parsed));
        }
        let t = s.trim();
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
        let pair = |x: &str| -> Result<(usize, usize)> {
            let inner = x.strip_prefix('(').and_then(|y| y.split(')').next()).ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let model = if let Some(rest) = t.strip_prefix("v_") {
            let (d, inner) = rest.split_once('(').ok_or_else(bad)?;
            let inner = inner.strip_suffix(')').ok_or_else(bad)?;
            let veronese = d.parse::<u32>().map_err(|_| bad())?;
            match inner.parse()? {
                ChowModel::Projective { n, veronese: 1 } => ChowModel::Projective { n, veronese },
                ChowModel::Quadric { dim, veronese: 1 } => ChowModel::Quadric { dim, veronese },
                _ => return Err(bad()),
            }
        } else if let Some(rest) = t.strip_prefix("P^") {
            ChowModel::projective(num(rest)?)
        } else if let Some(rest) = t.strip_prefix("Q^") {
            ChowModel::quadric(num(rest)?)
        } else if let Some(rest) = t.strip_prefix("LG") {
            let (n, m) = pair(rest)?;
            if m != 2 * n {
                return Err(bad());
            }
            ChowModel::Lagrangian { n }
        } else if let Some(rest) = t.strip_prefix("OG") {
            let (n, m) = pair(rest)?;
            if m != 2 * n || !(rest.ends_with("_+") || rest.ends_with('+')) {
                return Err(bad());
            }
            ChowModel::Spinor { n }
        } else if let Some(rest) = t.strip_prefix('G') {
            let (k, n) = pair(rest)?;
            ChowModel::Grassmannian { k, n }
        } else {
            return Err(bad());
        };
        model.validate()?;
        Ok(model)
    }
}

impl ChowModel {
    pub fn projective(n: usize) -> Self {
        ChowModel::Projective { n, veronese: 1 }
    }

    pub fn quadric(dim: usize) -> Self {
        ChowModel::Quadric { dim, veronese: 1 }
    }

    pub fn product(factors: Vec<ChowModel>) -> Self {
        ChowModel::Product { factors }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::Precondition(s));
        match self {
            ChowModel::Projective { veronese: 0, .. } | ChowModel::Quadric { veronese: 0, .. } => {
                bad("veronese degree must be positive".into())
            }
            ChowModel::Quadric { dim: 0, .. } => bad("quadrics need dimension >= 1".into()),
            ChowModel::Grassmannian { k, n } if *k == 0 || k >= n => {
                bad(format!("G({k},{n}) needs 1 <= k <= n-1"))
            }
            ChowModel::Lagrangian { n } | ChowModel::Spinor { n } if *n == 0 => {
                bad("rank must be positive".into())
            }
            ChowModel::Product { factors } if factors.is_empty() => bad("empty product".into()),
            ChowModel::Product { factors } => factors.iter().try_for_each(|m| m.validate()),
            _ => Ok(()),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ChowModel::Projective { n, .. } => *n,
            ChowModel::Quadric { dim, .. } => *dim,
            ChowModel::Grassmannian { k, n } => k * (n - k),
            ChowModel::Lagrangian { n } => n * (n + 1) / 2,
            ChowModel::Spinor { n } => n * (n - 1) / 2,
            ChowModel::Product { factors } => factors.iter().map(|m| m.dim()).sum(),
        }
    }

    fn key_len(&self) -> usize {
        match self {
            ChowModel::Projective { .. } => 1,
            ChowModel::Quadric { .. } => 2,
            ChowModel::Grassmannian { k, .. } => *k,
            ChowModel::Lagrangian { n } | ChowModel::Spinor { n } => *n,
            ChowModel::Product { factors } => factors.iter().map(|m| m.key_len()).sum(),
        }
    }

    pub fn degree_of(&self, key: &[u32]) -> usize {
        match self {
            ChowModel::Projective { .. } | ChowModel::Quadric { .. } => key[0] as usize,
            ChowModel::Grassmannian { .. }
            | ChowModel::Lagrangian { .. }
            | ChowModel::Spinor { .. } => key.iter().map(|&x| x as usize).sum(),
            ChowModel::Product { factors } => {
                let mut off = 0;
                let mut d = 0;
                for m in factors {
                    let l = m.key_len();
                    d += m.degree_of(&key[off..off + l]);
                    off += l;
                }
                d
            }
        }
    }

    /// Partitions indexing Schubert classes that survive on this variety.
    fn schubert_bound(&self) -> Option<(usize, u32, Partition)> {
        match self {
            ChowModel::Grassmannian { k, n } => {
                let full = Partition::new(vec![(n - k) as u32; *k]).expect("rectangle");
                Some((*k, (n - k) as u32, full))
            }
            // Classes not contained in the complement of [X] integrate to zero
            // against everything, and they span an ideal by LR positivity.
            ChowModel::Lagrangian { n } => Some((*n, *n as u32, Partition::delta(n + 1))),
            ChowModel::Spinor { n } => Some((*n, *n as u32, Partition::delta(*n))),
            _ => None,
        }
    }

    /// Basis keys of the ring, sorted.
    pub fn basis(&self) -> Vec<Key> {
        match self {
            ChowModel::Projective { n, .. } => (0..=*n as u32).map(|i| vec![i]).collect(),
            ChowModel::Quadric { dim, .. } => quadric_basis(*dim),
            ChowModel::Product { factors } => {
                let mut keys: Vec<Key> = vec![Vec::new()];
                for m in factors {
                    let b = m.basis();
                    keys = keys
                        .iter()
                        .flat_map(|k| {
                            b.iter().map(move |x| {
                                let mut v = k.clone();
                                v.extend_from_slice(x);
                                v
                            })
                        })
                        .collect();
                }
                keys
            }
            _ => {
                let (rows, _, bound) = self.schubert_bound().expect("schubert model");
                bound
                    .subpartitions()
                    .into_iter()
                    .map(|p| pad(&p, rows))
                    .collect()
            }
        }
    }

    pub fn one(&self) -> Class {
        Class::basis(vec![0; self.key_len()])
    }

    /// The polarization class.
    pub fn lambda(&self) -> Class {
        match self {
            ChowModel::Projective { n, veronese } => {
                if *n == 0 {
                    Class::zero()
                } else {
                    Class::term(vec![1], rat(*veronese as i64))
                }
            }
            ChowModel::Quadric { dim, veronese } => {
                quadric_h_power(*dim, 1).scaled(&rat(*veronese as i64))
            }
            ChowModel::Grassmannian { k, .. } | ChowModel::Lagrangian { n: k } => {
                Class::basis(pad(&Partition::single_row(1), *k))
            }
            ChowModel::Spinor { n } => {
                Class::term(pad(&Partition::single_row(1), *n), BigRational::new(1.into(), 2.into()))
            }
            ChowModel::Product { factors } => {
                let mut out = Class::zero();
                for i in 0..factors.len() {
                    let parts: Vec<Class> = factors
                        .iter()
                        .enumerate()
                        .map(|(j, m)| if i == j { m.lambda() } else { m.one() })
                        .collect();
                    out.add_assign(&tensor(&parts));
                }
                out
            }
        }
    }

    /// Total Chern class of the cotangent bundle.
    pub fn cotangent_chern(&self) -> Class {
        match self {
            ChowModel::Projective { n, .. } => {
                let mut out = Class::zero();
                for i in 0..=*n {
                    let c = binomial(BigInt::from(n + 1), BigInt::from(i));
                    let c = if i % 2 == 0 { c } else { -c };
                    out.add_term(vec![i as u32], rat_big(c));
                }
                out
            }
            ChowModel::Quadric { dim, .. } => {
                // (1 - h)^{d+2} / (1 - 2h)
                let d = *dim;
                let mut out = Class::zero();
                for i in 0..=d {
                    let mut c = BigInt::zero();
                    for j in 0..=i {
                        let b = binomial(BigInt::from(d + 2), BigInt::from(j));
                        let t = b * (BigInt::one() << (i - j));
                        if j % 2 == 0 {
                            c += t;
                        } else {
                            c -= t;
                        }
                    }
                    out.add_assign(&quadric_h_power(d, i).scaled(&rat_big(c)));
                }
                out
            }
            ChowModel::Grassmannian { k, n } => grassmannian_cotangent(self, *k, *n),
            ChowModel::Lagrangian { n } => {
                let a = expand_sym_square(*n).expect("n >= 1");
                signed_schur_class(&a.terms, *n)
            }
            ChowModel::Spinor { n } => {
                let b = expand_alt_square(*n).expect("n >= 1");
                signed_schur_class(&b.terms, *n)
            }
            ChowModel::Product { factors } => {
                let parts: Vec<Class> = factors.iter().map(|m| m.cotangent_chern()).collect();
                tensor(&parts)
            }
        }
    }

    /// Degree of a class (only its top-degree part contributes).
    pub fn integrate(&self, x: &Class) -> BigRational {
        let mut total = BigRational::zero();
        for (k, v) in &x.0 {
            total += self.integrate_basis(k) * v;
        }
        total
    }

    pub fn integrate_basis(&self, key: &[u32]) -> BigRational {
        match self {
            ChowModel::Projective { n, .. } => {
                if key[0] as usize == *n {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }
            ChowModel::Quadric { dim, .. } => {
                if key[0] as usize == *dim {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }
            ChowModel::Product { factors } => {
                let mut off = 0;
                let mut v = BigRational::one();
                for m in factors {
                    let l = m.key_len();
                    v *= m.integrate_basis(&key[off..off + l]);
                    if v.is_zero() {
                        return v;
                    }
                    off += l;
                }
                v
            }
            _ => {
                let (rows, _, bound) = self.schubert_bound().expect("schubert model");
                if key != pad(&bound, rows).as_slice() {
                    return BigRational::zero();
                }
                match self {
                    ChowModel::Spinor { n } => rat_big(BigInt::one() << (n - 1)),
                    _ => BigRational::one(),
                }
            }
        }
    }

    pub fn mul(&self, a: &Class, b: &Class) -> Class {
        let mut cache = HashMap::new();
        self.mul_cached(a, b, &mut cache)
    }

    fn mul_cached(&self, a: &Class, b: &Class, cache: &mut HashMap<(Key, Key), Class>) -> Class {
        let mut out = Class::zero();
        for (ka, va) in &a.0 {
            for (kb, vb) in &b.0 {
                let key = if ka <= kb {
                    (ka.clone(), kb.clone())
                } else {
                    (kb.clone(), ka.clone())
                };
                let prod = cache
                    .entry(key)
                    .or_insert_with(|| self.mul_basis(ka, kb))
                    .clone();
                let c = va * vb;
                for (k, v) in prod.0 {
                    out.add_term(k, v * &c);
                }
            }
        }
        out
    }

    pub fn mul_basis(&self, a: &[u32], b: &[u32]) -> Class {
        match self {
            ChowModel::Projective { n, .. } => {
                let d = a[0] + b[0];
                if d as usize > *n {
                    Class::zero()
                } else {
                    Class::basis(vec![d])
                }
            }
            ChowModel::Quadric { dim, .. } => quadric_mul(*dim, a, b),
            ChowModel::Product { factors } => {
                let mut off = 0;
                let mut parts = Vec::with_capacity(factors.len());
                for m in factors {
                    let l = m.key_len();
                    let p = m.mul_basis(&a[off..off + l], &b[off..off + l]);
                    if p.is_zero() {
                        return Class::zero();
                    }
                    parts.push(p);
                    off += l;
                }
                tensor(&parts)
            }
            _ => {
                let (rows, cols, bound) = self.schubert_bound().expect("schubert model");
                let pa = unpad(a);
                let pb = unpad(b);
                let mut out = Class::zero();
                if pb.weight() == 1 {
                    for nu in horizontal_strips(&pa, 1, Some((rows, cols))) {
                        if bound.contains(&nu) {
                            out.add_term(pad(&nu, rows), BigRational::one());
                        }
                    }
                    return out;
                }
                for (nu, c) in lr_coefficients(&pa, &pb, Some((rows, cols))) {
                    if bound.contains(&nu) {
                        out.add_term(pad(&nu, rows), rat(c as i64));
                    }
                }
                out
            }
        }
    }

    /// Degree-`d` part of a class.
    pub fn graded_part(&self, x: &Class, d: usize) -> Class {
        Class(
            x.0.iter()
                .filter(|(k, _)| self.degree_of(k) == d)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        )
    }
}

fn pad(p: &Partition, rows: usize) -> Key {
    (0..rows).map(|i| p.part(i)).collect()
}

fn unpad(k: &[u32]) -> Partition {
    Partition::new(k.to_vec()).expect("keys are partitions")
}

fn tensor(parts: &[Class]) -> Class {
    let mut acc = Class::basis(Vec::new());
    for p in parts {
        let mut next = Class::zero();
        for (ka, va) in &acc.0 {
            for (kb, vb) in &p.0 {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                next.add_term(k, va * vb);
            }
        }
        acc = next;
    }
    acc
}

fn signed_schur_class(terms: &BTreeMap<Partition, BigInt>, rows: usize) -> Class {
    let mut out = Class::zero();
    for (mu, c) in terms {
        let c = if mu.weight() % 2 == 0 { c.clone() } else { -c.clone() };
        out.add_term(pad(mu, rows), rat_big(c));
    }
    out
}

/// c(Omega) on G(k,n) from c(T) = c(S* (x) Q), with s_mu(S*) = sigma_mu and
/// s_rho(Q) = sigma_{rho'}; then c_i(Omega) = (-1)^i c_i(T).
fn grassmannian_cotangent(model: &ChowModel, k: usize, n: usize) -> Class {
    let l = n - k;
    let mut cache = HashMap::new();
    let mut out = Class::zero();
    for ((mu, rho), c) in tensor_chern_schur(k, l) {
        let rho_t = rho.conjugate();
        if !rho_t.fits_box(k, l as u32) {
            continue;
        }
        let a = Class::basis(pad(&mu, k));
        let b = Class::basis(pad(&rho_t, k));
        let prod = model.mul_cached(&a, &b, &mut cache);
        let deg = mu.weight() + rho.weight();
        let sign = if deg % 2 == 0 { rat_big(c) } else { -rat_big(c) };
        out.add_assign(&prod.scaled(&sign));
    }
    out
}

/// Quadric basis: h^i below the middle, two classes A and B in the middle
/// for even dimension, and linear-space classes l_i above it.
fn quadric_basis(d: usize) -> Vec<Key> {
    let mut out = Vec::new();
    for i in 0..=d as u32 {
        if 2 * i as usize == d {
            out.push(vec![i, 1]);
            out.push(vec![i, 2]);
        } else {
            out.push(vec![i, 0]);
        }
    }
    out
}

fn quadric_h_power(d: usize, i: usize) -> Class {
    if i > d {
        return Class::zero();
    }
    let i32_ = i as u32;
    if 2 * i < d {
        Class::basis(vec![i32_, 0])
    } else if 2 * i == d {
        let mut c = Class::basis(vec![i32_, 1]);
        c.add_term(vec![i32_, 2], BigRational::one());
        c
    } else {
        Class::term(vec![i32_, 0], rat(2))
    }
}

fn quadric_mul(d: usize, a: &[u32], b: &[u32]) -> Class {
    let (ia, ib) = (a[0] as usize, b[0] as usize);
    let t = ia + ib;
    if t > d {
        return Class::zero();
    }
    let below = |i: usize| 2 * i < d;
    let middle = |i: usize| 2 * i == d;
    match (below(ia), below(ib)) {
        (true, true) => quadric_h_power(d, t),
        (true, false) | (false, true) => {
            let (h, other) = if below(ia) { (ia, b) } else { (ib, a) };
            if h == 0 {
                return Class::basis(other.to_vec());
            }
            // h^i times a middle or linear class is a linear class.
            Class::basis(vec![(other[0] as usize + h) as u32, 0])
        }
        (false, false) => {
            if middle(ia) && middle(ib) {
                let same = a[1] == b[1];
                let self_meet = d % 4 == 0;
                if same == self_meet {
                    Class::basis(vec![d as u32, 0])
                } else {
                    Class::zero()
                }
            } else {
                Class::zero()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_round_trip() {
        for t in ["P^2", "Q^3", "v_3(P^2)", "v_2(Q^4)", "G(2,5)", "LG(3,6)", "OG(5,10)_+", "P^4 x G(2,5)"] {
            let m: ChowModel = t.parse().unwrap();
            assert_eq!(m.to_string(), t);
        }
        assert!("LG(3,7)".parse::<ChowModel>().is_err());
        assert!("G(5,5)".parse::<ChowModel>().is_err());
        assert!("X^2".parse::<ChowModel>().is_err());
    }

    fn top_lambda(m: &ChowModel) -> BigRational {
        let l = m.lambda();
        let mut x = m.one();
        for _ in 0..m.dim() {
            x = m.mul(&x, &l);
        }
        m.integrate(&x)
    }

    #[test]
    fn embedding_degrees() {
        assert_eq!(top_lambda(&ChowModel::quadric(5)), rat(2));
        assert_eq!(top_lambda(&ChowModel::quadric(4)), rat(2));
        assert_eq!(top_lambda(&ChowModel::quadric(1)), rat(2));
        // Pluecker degree of G(2,5) is 5, of G(2,6) is 14.
        assert_eq!(top_lambda(&ChowModel::Grassmannian { k: 2, n: 5 }), rat(5));
        assert_eq!(top_lambda(&ChowModel::Grassmannian { k: 2, n: 6 }), rat(14));
        assert_eq!(top_lambda(&ChowModel::Projective { n: 2, veronese: 3 }), rat(9));
        // LG(2,4) is a 3-dimensional quadric.
        assert_eq!(top_lambda(&ChowModel::Lagrangian { n: 2 }), rat(2));
        // OG(4,8)_+ is a 6-dimensional quadric under the half-spin embedding.
        assert_eq!(top_lambda(&ChowModel::Spinor { n: 4 }), rat(2));
        // OG(3,6)_+ is P^3.
        assert_eq!(top_lambda(&ChowModel::Spinor { n: 3 }), rat(1));
        let p = ChowModel::product(vec![ChowModel::projective(1), ChowModel::projective(2)]);
        assert_eq!(top_lambda(&p), rat(3));
    }

    #[test]
    fn quadric_pairing_is_unimodular() {
        for d in 1..=8 {
            let m = ChowModel::quadric(d);
            let basis = m.basis();
            for i in 0..=d {
                let lo: Vec<&Key> = basis.iter().filter(|k| k[0] as usize == i).collect();
                let hi: Vec<&Key> = basis.iter().filter(|k| k[0] as usize == d - i).collect();
                assert_eq!(lo.len(), hi.len());
                let mat: Vec<Vec<BigRational>> = lo
                    .iter()
                    .map(|a| {
                        hi.iter()
                            .map(|b| m.integrate(&m.mul_basis(a, b)))
                            .collect()
                    })
                    .collect();
                let det = crate::symmetric_functions::det_rational(mat);
                assert!(det == rat(1) || det == rat(-1), "d={d} i={i} det={det}");
            }
        }
    }

    #[test]
    fn grassmannian_first_chern_class() {
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let m = ChowModel::Grassmannian { k, n };
            let c = m.cotangent_chern();
            let c1 = m.graded_part(&c, 1);
            assert_eq!(c1, m.lambda().scaled(&rat(-(n as i64))));
            // top Chern class integrates to the Euler characteristic C(n,k)
            let top = m.graded_part(&c, m.dim());
            let sign = if m.dim() % 2 == 0 { 1 } else { -1 };
            let chi = binomial(n as i64, k as i64) * sign;
            assert_eq!(m.integrate(&top), rat(chi));
        }
    }

    #[test]
    fn euler_characteristics_of_sub_grassmannians() {
        // chi(LG(n,2n)) = chi(OG(n,2n)_+) = 2^n and 2^{n-1}.
        for n in 2..=5 {
            let lg = ChowModel::Lagrangian { n };
            let top = lg.graded_part(&lg.cotangent_chern(), lg.dim());
            let sign = if lg.dim() % 2 == 0 { 1 } else { -1 };
            assert_eq!(lg.integrate(&top), rat(sign * (1 << n)));
            let s = ChowModel::Spinor { n };
            let top = s.graded_part(&s.cotangent_chern(), s.dim());
            let sign = if s.dim() % 2 == 0 { 1 } else { -1 };
            assert_eq!(s.integrate(&top), rat(sign * (1 << (n - 1))));
        }
    }
}
