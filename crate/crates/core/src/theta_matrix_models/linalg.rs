//! Exact linear algebra over a cyclotomic field.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};

use super::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

pub type K = CyclotomicNumber;
pub type Rows = Vec<Vec<K>>;

/// Square matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub n: usize,
    pub a: Vec<K>,
}

impl Mat {
    pub fn zero(n: usize, order: u32) -> Mat {
        Mat {
            n,
            a: vec![K::zero(order); n * n],
        }
    }

    pub fn identity(n: usize, order: u32) -> Mat {
        let mut m = Mat::zero(n, order);
        for i in 0..n {
            m.a[i * n + i] = K::one(order);
        }
        m
    }

    /// E_ij.
    pub fn unit(n: usize, i: usize, j: usize, order: u32) -> Mat {
        let mut m = Mat::zero(n, order);
        m.a[i * n + j] = K::one(order);
        m
    }

    pub fn diag(d: Vec<K>) -> Mat {
        let n = d.len();
        let order = d[0].order();
        let mut m = Mat::zero(n, order);
        for (i, x) in d.into_iter().enumerate() {
            m.a[i * n + i] = x;
        }
        m
    }

    pub fn order(&self) -> u32 {
        self.a[0].order()
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: K) {
        self.a[i * self.n + j] = x;
    }

    pub fn add(&self, o: &Mat) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            n: self.n,
            a: self.a.iter().map(|x| -x).collect(),
        }
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n, self.order());
        for i in 0..n {
            for k in 0..n {
                let x = &self.a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = &o.a[k * n + j];
                    if !y.is_zero() {
                        out.a[i * n + j] = &out.a[i * n + j] + &(x * y);
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, o: &Mat) -> Mat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> K {
        (0..self.n).fold(K::zero(self.order()), |acc, i| &acc + &self.a[i * self.n + i])
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n, self.order());
        for i in 0..n {
            for j in 0..n {
                out.a[j * n + i] = self.a[i * n + j].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|x| x.is_zero())
    }

    pub fn rows(&self) -> Rows {
        self.a.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn from_rows(rows: &Rows) -> Mat {
        let n = rows.len();
        Mat {
            n,
            a: rows.iter().flat_map(|r| r.iter().cloned()).collect(),
        }
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n).fold(K::zero(self.order()), |acc, j| {
                    let x = &self.a[i * n + j];
                    if x.is_zero() || v[j].is_zero() {
                        acc
                    } else {
                        &acc + &(x * &v[j])
                    }
                })
            })
            .collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        let mut p = self.clone();
        for _ in 1..self.n {
            p = p.mul(self);
        }
        p.is_zero()
    }

    /// Scalar c with self = c * other, if one exists (other nonzero).
    pub fn ratio_to(&self, other: &Mat) -> Option<K> {
        let idx = other.a.iter().position(|x| !x.is_zero())?;
        let c = &self.a[idx] * &other.a[idx].inv()?;
        (other.scale(&c) == *self).then_some(c)
    }
}

pub fn zero_vec(n: usize, order: u32) -> Vec<K> {
    vec![K::zero(order); n]
}

pub fn dot(a: &[K], b: &[K]) -> K {
    let order = a[0].order();
    a.iter().zip(b).fold(K::zero(order), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            &acc + &(x * y)
        }
    })
}

pub fn lin_comb(coeffs: &[K], vecs: &[Vec<K>]) -> Vec<K> {
    let order = vecs[0][0].order();
    let mut out = zero_vec(vecs[0].len(), order);
    for (c, v) in coeffs.iter().zip(vecs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = &*o + &(c * x);
            }
        }
    }
    out
}

pub fn mat_comb(coeffs: &[K], mats: &[Mat]) -> Mat {
    let flat: Vec<Vec<K>> = mats.iter().map(|m| m.a.clone()).collect();
    Mat {
        n: mats[0].n,
        a: lin_comb(coeffs, &flat),
    }
}

/// Reduced row echelon form in place; drops zero rows and returns pivots.
pub fn rref(rows: &mut Rows) -> Vec<usize> {
    rref_with(rows, &mut None)
}

fn rref_with(rows: &mut Rows, track: &mut Option<&mut Rows>) -> Vec<usize> {
    if rows.is_empty() {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(t) = track.as_deref_mut() {
            t.swap(r, p);
        }
        let inv = rows[r][col].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        if let Some(t) = track.as_deref_mut() {
            t[r] = t[r].iter().map(|x| x * &inv).collect();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let (pr, row_i) = if i < r {
                    let (lo, hi) = rows.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = rows.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in row_i.iter_mut().zip(pr) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
                if let Some(t) = track.as_deref_mut() {
                    let tr = t[r].clone();
                    for (x, y) in t[i].iter_mut().zip(&tr) {
                        if !y.is_zero() {
                            *x = &*x - &(&f * y);
                        }
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    if let Some(t) = track.as_deref_mut() {
        t.truncate(r);
    }
    pivots
}

pub fn rank(rows: &[Vec<K>]) -> usize {
    let mut r = rows.to_vec();
    rref(&mut r).len()
}

/// Basis of {x : A x = 0} for A given by rows with `ncols` columns.
pub fn nullspace(rows: &[Vec<K>], ncols: usize, order: u32) -> Rows {
    let mut r = rows.to_vec();
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(ncols, order);
            v[f] = K::one(order);
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Echelon data for a list of vectors, answering membership and coordinate
/// queries against the original list.
#[derive(Clone, Debug)]
pub struct SpanCoords {
    rows: Rows,
    pivots: Vec<usize>,
    transform: Rows,
    count: usize,
}

impl SpanCoords {
    pub fn new(vectors: &[Vec<K>]) -> SpanCoords {
        let count = vectors.len();
        if count == 0 {
            return SpanCoords {
                rows: vec![],
                pivots: vec![],
                transform: vec![],
                count,
            };
        }
        let order = vectors[0][0].order();
        let mut rows = vectors.to_vec();
        let mut transform: Rows = (0..count)
            .map(|i| {
                let mut e = zero_vec(count, order);
                e[i] = K::one(order);
                e
            })
            .collect();
        let pivots = rref_with(&mut rows, &mut Some(&mut transform));
        SpanCoords {
            rows,
            pivots,
            transform,
            count,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Rows {
        &self.rows
    }

    fn reduced_coords(&self, v: &[K]) -> Option<Vec<K>> {
        let c: Vec<K> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.rows.is_empty() {
            return v.iter().all(|x| x.is_zero()).then_some(c);
        }
        let recon = lin_comb(&c, &self.rows);
        (recon.as_slice() == v).then_some(c)
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.reduced_coords(v).is_some()
    }

    /// Coefficients expressing v in the original vectors.
    pub fn coords(&self, v: &[K]) -> Option<Vec<K>> {
        let c = self.reduced_coords(v)?;
        if self.count == 0 {
            return Some(vec![]);
        }
        if c.is_empty() {
            return Some(zero_vec(self.count, v[0].order()));
        }
        Some(lin_comb(&c, &self.transform))
    }
}

/// Inverse of a square matrix given by rows.
pub fn inverse(rows: &Rows) -> Option<Rows> {
    let n = rows.len();
    let order = rows[0][0].order();
    let mut r = rows.clone();
    let mut t: Rows = (0..n)
        .map(|i| {
            let mut e = zero_vec(n, order);
            e[i] = K::one(order);
            e
        })
        .collect();
    let piv = rref_with(&mut r, &mut Some(&mut t));
    (piv.len() == n).then_some(t)
}

pub fn mat_mul_rows(a: &Rows, b: &Rows) -> Rows {
    let order = a[0][0].order();
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| {
                    (0..m).fold(K::zero(order), |acc, k| {
                        if a[i][k].is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[i][k] * &b[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

// Polynomials over K, lowest degree first, no trailing zeros.

pub fn poly_trim(mut p: Vec<K>) -> Vec<K> {
    while p.len() > 1 && p.last().map(|x| x.is_zero()).unwrap_or(false) {
        p.pop();
    }
    p
}

pub fn poly_eval(p: &[K], x: &K) -> K {
    let order = x.order();
    p.iter()
        .rev()
        .fold(K::zero(order), |acc, c| &(&acc * x) + c)
}

pub fn poly_derivative(p: &[K]) -> Vec<K> {
    let order = p[0].order();
    if p.len() <= 1 {
        return vec![K::zero(order)];
    }
    poly_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale_int(&BigInt::from(i)))
            .collect(),
    )
}

fn poly_is_zero(p: &[K]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn poly_rem(a: &[K], b: &[K]) -> Vec<K> {
    let b = poly_trim(b.to_vec());
    let lead_inv = b.last().expect("nonempty").inv().expect("nonzero divisor");
    let mut r = poly_trim(a.to_vec());
    while r.len() >= b.len() && !poly_is_zero(&r) {
        let shift = r.len() - b.len();
        let f = r.last().expect("nonempty") * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&f * bc);
        }
        r.pop();
        r = poly_trim(r);
    }
    r
}

pub fn poly_monic(p: &[K]) -> Vec<K> {
    let inv = p.last().expect("nonempty").inv().expect("nonzero");
    p.iter().map(|c| c * &inv).collect()
}

pub fn poly_gcd(a: &[K], b: &[K]) -> Vec<K> {
    let (mut x, mut y) = (poly_trim(a.to_vec()), poly_trim(b.to_vec()));
    while !poly_is_zero(&y) {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    poly_monic(&x)
}

/// Minimal polynomial (monic) of a square matrix.
pub fn min_poly(m: &Mat) -> Vec<K> {
    let order = m.order();
    let mut powers = vec![Mat::identity(m.n, order).a];
    let mut cur = Mat::identity(m.n, order);
    loop {
        cur = cur.mul(m);
        let span = SpanCoords::new(&powers);
        if let Some(c) = span.coords(&cur.a) {
            let mut p: Vec<K> = c.into_iter().map(|x| -x).collect();
            p.push(K::one(order));
            return p;
        }
        powers.push(cur.a.clone());
    }
}

pub fn is_semisimple(m: &Mat) -> bool {
    let p = min_poly(m);
    poly_gcd(&p, &poly_derivative(&p)).len() == 1
}

fn complex_inverse(a: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let mut m: Vec<Vec<Complex64>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| Complex64::new((i == j) as u8 as f64, 0.0)));
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .max_by(|&x, &y| m[x][col].norm().total_cmp(&m[y][col].norm()))
            .expect("nonempty");
        m.swap(col, p);
        let inv = m[col][col].inv();
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col {
                let f = m[r][col];
                let pr = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pr) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

const BOX_CAP: f64 = 4.0e6;

/// Roots in Z[zeta] of a monic polynomial with integral coefficients whose
/// roots have absolute value at most `radius[j]` under the j-th embedding.
/// Candidates are proposed numerically and each is confirmed exactly.
fn integral_roots(p: &[K], radius: &[f64]) -> Result<Vec<K>> {
    let order = p[0].order();
    let phi = p[0].degree();
    let emb = K::embeddings(order);
    let vand: Vec<Vec<Complex64>> = emb
        .iter()
        .map(|&j| (0..phi).map(|k| K::zeta_pow(order, k as i64).embed(j)).collect())
        .collect();
    let vinv = complex_inverse(&vand);
    let bounds: Vec<i64> = (0..phi)
        .map(|k| {
            let b: f64 = (0..phi).map(|j| vinv[k][j].norm() * radius[j]).sum();
            (b + 1e-6).floor() as i64
        })
        .collect();
    let size: f64 = bounds.iter().map(|&b| (2 * b + 1) as f64).product();
    if size > BOX_CAP {
        return Err(Error::SearchFailed(format!(
            "eigenvalue search box of {size:.0} points exceeds the cap"
        )));
    }
    let pe: Vec<Vec<Complex64>> = emb.iter().map(|&j| p.iter().map(|c| c.embed(j)).collect()).collect();
    let deg = p.len() - 1;
    let mut roots = Vec::new();
    let mut c: Vec<i64> = bounds.iter().map(|b| -b).collect();
    'outer: loop {
        let mut ok = true;
        for (j, row) in vand.iter().enumerate() {
            let z: Complex64 = row.iter().zip(&c).map(|(v, &ck)| v * ck as f64).sum();
            let val = pe[j].iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a);
            let scale: f64 = pe[j]
                .iter()
                .enumerate()
                .map(|(i, a)| a.norm() * z.norm().max(1.0).powi(i as i32))
                .sum();
            if val.norm() > 1e-7 * scale.max(1.0) {
                ok = false;
                break;
            }
        }
        if ok {
            let lam = K::from_coeffs(
                order,
                c.iter()
                    .map(|&x| num_rational::BigRational::from_integer(BigInt::from(x)))
                    .collect(),
            );
            if poly_eval(p, &lam).is_zero() && !roots.contains(&lam) {
                roots.push(lam);
                if roots.len() == deg {
                    break 'outer;
                }
            }
        }
        let mut k = 0;
        loop {
            if k == phi {
                break 'outer;
            }
            c[k] += 1;
            if c[k] > bounds[k] {
                c[k] = -bounds[k];
                k += 1;
            } else {
                break;
            }
        }
    }
    Ok(roots)
}

/// Distinct eigenvalues of a matrix that is semisimple with all eigenvalues
/// in the field; errors otherwise.
pub fn eigenvalues(m: &Mat) -> Result<Vec<K>> {
    let order = m.order();
    let den = m.a.iter().fold(BigInt::one(), |acc, x| {
        num_integer::Integer::lcm(&acc, &x.denominator())
    });
    let scaled = Mat {
        n: m.n,
        a: m.a.iter().map(|x| x.scale_int(&den)).collect(),
    };
    let p = min_poly(&scaled);
    if poly_gcd(&p, &poly_derivative(&p)).len() != 1 {
        return Err(Error::Precondition("matrix is not semisimple".into()));
    }
    let radius: Vec<f64> = K::embeddings(order)
        .iter()
        .map(|&j| {
            (0..m.n)
                .map(|i| (0..m.n).map(|k| scaled.get(i, k).embed(j).norm()).sum::<f64>())
                .fold(0.0, f64::max)
        })
        .collect();
    let roots = integral_roots(&p, &radius)?;
    if roots.len() != p.len() - 1 {
        return Err(Error::Precondition(format!(
            "eigenvalues do not all lie in Q(zeta_{order})"
        )));
    }
    let inv = num_rational::BigRational::new(BigInt::one(), den);
    Ok(roots.iter().map(|r| r.scale(&inv)).collect())
}

/// Simultaneous eigenspaces of commuting diagonalizable operators on K^n.
/// Each entry is (eigenvalue per operator, basis of the joint eigenspace).
pub fn joint_eigenspaces(ops: &[Mat]) -> Result<Vec<(Vec<K>, Rows)>> {
    let n = ops[0].n;
    let order = ops[0].order();
    let ident: Rows = Mat::identity(n, order).rows();
    let mut spaces: Vec<(Vec<K>, Rows)> = vec![(vec![], ident)];
    for op in ops {
        let eig = eigenvalues(op)?;
        let mut next = Vec::new();
        for (w, basis) in spaces {
            let mut total = 0;
            for lam in &eig {
                let shifted = op.sub(&Mat::identity(n, order).scale(lam));
                // columns: (op - lam) b for b in basis
                let images: Rows = basis.iter().map(|b| shifted.apply(b)).collect();
                let system: Rows = (0..n)
                    .map(|i| images.iter().map(|im| im[i].clone()).collect())
                    .collect();
                let ker = nullspace(&system, basis.len(), order);
                if ker.is_empty() {
                    continue;
                }
                total += ker.len();
                let sub: Rows = ker.iter().map(|y| lin_comb(y, &basis)).collect();
                let mut w2 = w.clone();
                w2.push(lam.clone());
                next.push((w2, sub));
            }
            if total != basis.len() {
                return Err(Error::Precondition(
                    "operators are not simultaneously diagonalizable".into(),
                ));
            }
        }
        spaces = next;
    }
    Ok(spaces)
}

pub fn to_i64(x: &K) -> Option<i64> {
    let q = x.to_rational()?;
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}
