//! Partitions, Schur expansions and the tableau combinatorics used by the
//! Schubert calculus in `dual_degrees`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Internal constructor for vectors already known to be decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// The staircase (n-1, ..., 1, 0).
    pub fn delta(n: usize) -> Self {
        Partition::from_sorted((0..n).rev().map(|i| i as u32).collect())
    }

    pub fn single_row(k: u32) -> Self {
        Partition::from_sorted(vec![k])
    }

    pub fn column(k: usize) -> Self {
        Partition::from_sorted(vec![1; k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part i (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0) as usize;
        let parts = (0..w)
            .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Complement inside the rows x cols box, read in reverse.
    pub fn complement(&self, rows: usize, cols: u32) -> Partition {
        debug_assert!(self.fits_box(rows, cols));
        Partition::from_sorted((0..rows).rev().map(|i| cols - self.part(i)).collect())
    }

    /// Shapes obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let p = self.part(i);
            if i == 0 || self.part(i - 1) > p {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }

    /// Shapes obtained by removing one corner box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut v = self.0.clone();
                v[i] -= 1;
                out.push(Partition::from_sorted(v));
            }
        }
        out
    }

    /// Every partition contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        sub_rec(&self.0, u32::MAX, &mut cur, &mut out);
        out.sort();
        out
    }
}

fn sub_rec(bound: &[u32], prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    let i = cur.len();
    if i == bound.len() {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    for p in 0..=bound[i].min(prev) {
        cur.push(p);
        sub_rec(bound, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `w` with at most `rows` parts, each at most `cols`.
pub fn partitions_in_box(w: u32, rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(rem: u32, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if cur.len() == rows {
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(w, rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Every partition inside the rows x cols box, sorted.
pub fn box_partitions(rows: usize, cols: u32) -> Vec<Partition> {
    Partition::from_sorted(vec![cols; rows]).subpartitions()
}

/// A finite Z-linear combination of Schur functions in a bounded number of
/// variables.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SchurExpansion {
    pub n_vars: Option<usize>,
    pub terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new(n_vars: Option<usize>) -> Self {
        SchurExpansion {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(mu: Partition, n_vars: Option<usize>) -> Self {
        let mut e = SchurExpansion::new(n_vars);
        e.add(mu, BigInt::one());
        e
    }

    pub fn add(&mut self, mu: Partition, c: BigInt) {
        if c.is_zero() || self.n_vars.is_some_and(|n| mu.len() > n) {
            return;
        }
        let v = self.terms.remove(&mu).unwrap_or_default() + c;
        if !v.is_zero() {
            self.terms.insert(mu, v);
        }
    }

    pub fn coeff(&self, mu: &Partition) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Sparse polynomial in a fixed number of variables with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub n_vars: usize,
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        Poly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n_vars: usize) -> Self {
        let mut p = Poly::zero(n_vars);
        p.terms.insert(vec![0; n_vars], BigInt::one());
        p
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        let mut p = Poly::zero(n_vars);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly::zero(self.n_vars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.n_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n_vars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, i + 1);
                self.terms.get(&f) == Some(c)
            })
        })
    }

    /// Elementary symmetric polynomial e_k.
    pub fn elementary(n_vars: usize, k: usize) -> Poly {
        let mut p = Poly::zero(n_vars);
        if k > n_vars {
            return p;
        }
        for subset in itertools::Itertools::combinations(0..n_vars, k) {
            let mut e = vec![0; n_vars];
            for i in subset {
                e[i] = 1;
            }
            p.terms.insert(e, BigInt::one());
        }
        p
    }

    /// Power sum p_k.
    pub fn power_sum(n_vars: usize, k: u32) -> Poly {
        let mut p = Poly::zero(n_vars);
        for i in 0..n_vars {
            let mut e = vec![0; n_vars];
            e[i] = k;
            p.terms.insert(e, BigInt::one());
        }
        p
    }

    /// Monomial symmetric polynomial m_mu.
    pub fn monomial_symmetric(n_vars: usize, mu: &Partition) -> Poly {
        let mut p = Poly::zero(n_vars);
        if mu.len() > n_vars {
            return p;
        }
        let mut base: Vec<u32> = (0..n_vars).map(|i| mu.part(i)).collect();
        base.sort();
        loop {
            p.terms.insert(base.clone(), BigInt::one());
            if !next_permutation(&mut base) {
                break;
            }
        }
        p
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Schur polynomial s_mu(x_1..x_n) by enumerating semistandard tableaux.
pub fn schur_polynomial(mu: &Partition, n_vars: usize) -> Poly {
    let mut p = Poly::zero(n_vars);
    if mu.len() > n_vars {
        return p;
    }
    let shape: Vec<usize> = mu.parts().iter().map(|&x| x as usize).collect();
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut fill: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut content = vec![0u32; n_vars];
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        fill: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        n: u32,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            out.add_term(content.clone(), BigInt::one());
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            fill[r][c] = v;
            content[(v - 1) as usize] += 1;
            rec(idx + 1, cells, fill, content, n, out);
            content[(v - 1) as usize] -= 1;
        }
    }
    rec(0, &cells, &mut fill, &mut content, n_vars as u32, &mut p);
    p
}

/// Decomposes a symmetric polynomial into Schur polynomials by repeatedly
/// subtracting the Schur polynomial of the lexicographically leading term.
pub fn schur_decompose(poly: &Poly) -> Result<SchurExpansion> {
    if !poly.is_symmetric() {
        return Err(Error::Precondition("polynomial is not symmetric".into()));
    }
    let n = poly.n_vars;
    let mut rest = poly.clone();
    let mut out = SchurExpansion::new(Some(n));
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        // The lex-leading exponent of a symmetric polynomial is decreasing.
        let mu = Partition::new(lead).map_err(|_| {
            Error::Precondition("leading exponent is not a partition".into())
        })?;
        let s = schur_polynomial(&mu, n);
        rest = rest.add(&s.scale(&(-&c)));
        out.add(mu, c);
    }
    Ok(out)
}

/// Expands a Schur combination back to a polynomial in its variable bound.
pub fn schur_expand(e: &SchurExpansion, n_vars: usize) -> Poly {
    let mut p = Poly::zero(n_vars);
    for (mu, c) in &e.terms {
        p = p.add(&schur_polynomial(mu, n_vars).scale(c));
    }
    p
}

fn binom_i(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// Exact determinant by fraction-free Bareiss elimination.
pub fn det_bigint(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

fn check_n(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Precondition("number of variables must be at least 1".into()));
    }
    Ok(())
}

/// Coefficients a_mu of c(S^2 E) = prod_{i<=j} (1 + x_i + x_j) for rank n.
///
/// Uses (x_i - x_j)(1 + x_i + x_j) = y_i - y_j with y = x + x^2, so the product
/// times the Vandermonde is an alternant whose column j is
/// x^{n-j} (1+x)^{n-j} (1+2x).
pub fn expand_sym_square(n: usize) -> Result<SchurExpansion> {
    check_n(n)?;
    Ok(square_expansion(n, true))
}

/// Coefficients b_mu of c(wedge^2 E) = prod_{i<j} (1 + x_i + x_j) for rank n.
pub fn expand_alt_square(n: usize) -> Result<SchurExpansion> {
    check_n(n)?;
    Ok(square_expansion(n, false))
}

fn square_expansion(n: usize, sym: bool) -> SchurExpansion {
    let bound = if sym {
        Partition::delta(n + 1)
    } else {
        Partition::delta(n)
    };
    let mut out = SchurExpansion::new(Some(n));
    for mu in bound.subpartitions() {
        let c = square_coefficient(n, &mu, sym);
        out.add(mu, c);
    }
    out
}

fn square_coefficient(n: usize, mu: &Partition, sym: bool) -> BigInt {
    let m: Vec<Vec<BigInt>> = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let top = (n - j) as i64;
                    let k = mu.part(i - 1) as i64 - i as i64 + j as i64;
                    let mut v = binom_i(top, k);
                    if sym {
                        v += BigInt::from(2) * binom_i(top, k - 1);
                    }
                    v
                })
                .collect()
        })
        .collect();
    det_bigint(&m)
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Number of standard tableaux of skew shape nu/mu, via the Aitken
/// determinant f = N! det[1 / (nu_i - mu_j - i + j)!].
///
/// This is the coefficient in lambda^k sigma_mu = sum f^{nu/mu} sigma_nu, which
/// is sometimes loosely called a Kostka-Foulkes coefficient.
pub fn skew_syt_count(mu: &Partition, nu: &Partition) -> BigInt {
    if !nu.contains(mu) {
        return BigInt::zero();
    }
    let l = nu.len();
    if l == 0 {
        return BigInt::one();
    }
    let size = (nu.weight() - mu.weight()) as u64;
    let m: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let e = nu.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                    if e < 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(BigInt::one(), factorial(e as u64))
                    }
                })
                .collect()
        })
        .collect();
    let d = det_rational(m);
    let v = d * BigRational::from_integer(factorial(size));
    debug_assert!(v.is_integer());
    v.to_integer()
}

pub(crate) fn det_rational(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    det
}

/// Skew SYT count by removing corners one at a time.
pub fn skew_syt_count_recursive(mu: &Partition, nu: &Partition) -> BigInt {
    fn rec(mu: &Partition, nu: &Partition, memo: &mut HashMap<Partition, BigInt>) -> BigInt {
        if nu == mu {
            return BigInt::one();
        }
        if let Some(v) = memo.get(nu) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for smaller in nu.remove_box() {
            if smaller.contains(mu) {
                total += rec(mu, &smaller, memo);
            }
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    if !nu.contains(mu) {
        return BigInt::zero();
    }
    rec(mu, nu, &mut HashMap::new())
}

/// Optional rows x cols truncation for products.
pub type BoxBound = Option<(usize, u32)>;

fn in_bound(p: &Partition, bound: BoxBound) -> bool {
    bound.map_or(true, |(r, c)| p.fits_box(r, c))
}

/// Multiplies every term by h_k (Pieri rule: add a horizontal strip of k boxes).
pub fn pieri_h(e: &SchurExpansion, k: u32, bound: BoxBound) -> SchurExpansion {
    let mut out = SchurExpansion::new(e.n_vars);
    for (mu, c) in &e.terms {
        for nu in horizontal_strips(mu, k, bound) {
            out.add(nu, c.clone());
        }
    }
    out
}

/// Shapes nu containing mu with nu/mu a horizontal strip of size k.
pub fn horizontal_strips(mu: &Partition, k: u32, bound: BoxBound) -> Vec<Partition> {
    let rows = mu.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(
        mu: &Partition,
        i: usize,
        rows: usize,
        rem: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == rows {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let base = mu.part(i);
        // nu_i <= mu_{i-1} keeps the strip horizontal.
        let cap = if i == 0 { base + rem } else { mu.part(i - 1) };
        let max_add = cap.saturating_sub(base).min(rem);
        for a in 0..=max_add {
            cur.push(base + a);
            rec(mu, i + 1, rows, rem - a, cur, out);
            cur.pop();
        }
    }
    rec(mu, 0, rows, k, &mut cur, &mut out);
    out.retain(|p| in_bound(p, bound));
    out
}

/// s_mu * s_nu by the Littlewood-Richardson rule. Row r of nu is added as a
/// horizontal strip labelled r, subject to the lattice-word condition.
pub fn lr_product(mu: &Partition, nu: &Partition, bound: BoxBound) -> SchurExpansion {
    let mut out = SchurExpansion::new(None);
    for (lam, c) in lr_coefficients(mu, nu, bound) {
        out.add(lam, BigInt::from(c));
    }
    out
}

/// LR coefficients c^lambda_{mu,nu} as a map.
pub fn lr_coefficients(mu: &Partition, nu: &Partition, bound: BoxBound) -> BTreeMap<Partition, u64> {
    let (a, b) = if mu.weight() >= nu.weight() { (mu, nu) } else { (nu, mu) };
    let mut out = BTreeMap::new();
    if let Some((r, c)) = bound {
        if !a.fits_box(r, c) || !b.fits_box(r, c) {
            return out;
        }
    }
    let rows = a.len() + b.len();
    let shape: Vec<u32> = (0..rows).map(|i| a.part(i)).collect();
    let prev_counts = vec![u32::MAX; rows];
    lr_rec(b, 0, shape, prev_counts, bound, &mut out);
    out
}

fn lr_rec(
    nu: &Partition,
    r: usize,
    shape: Vec<u32>,
    prev: Vec<u32>,
    bound: BoxBound,
    out: &mut BTreeMap<Partition, u64>,
) {
    if r == nu.len() {
        *out.entry(Partition::from_sorted(shape)).or_insert(0) += 1;
        return;
    }
    let rows = shape.len();
    let mut counts = vec![0u32; rows];
    let mut new_shape = shape.clone();
    place_strip(nu, r, 0, nu.part(r), &shape, &prev, &mut counts, &mut new_shape, 0, bound, out);
}

#[allow(clippy::too_many_arguments)]
fn place_strip(
    nu: &Partition,
    r: usize,
    row: usize,
    rem: u32,
    shape: &[u32],
    prev: &[u32],
    counts: &mut Vec<u32>,
    new_shape: &mut Vec<u32>,
    placed_above: u32,
    bound: BoxBound,
    out: &mut BTreeMap<Partition, u64>,
) {
    let rows = shape.len();
    if rem == 0 {
        if bound.map_or(true, |(br, bc)| {
            new_shape.iter().filter(|&&x| x > 0).count() <= br && new_shape[0] <= bc
        }) {
            lr_rec(nu, r + 1, new_shape.clone(), counts.clone(), bound, out);
        }
        return;
    }
    if row == rows {
        return;
    }
    // Labels r may only appear from row r onwards.
    let cap_strip = if row == 0 { u32::MAX } else { shape[row - 1] };
    let max_by_strip = cap_strip.saturating_sub(shape[row]);
    // Lattice: labels r in rows <= row cannot exceed labels r-1 in rows < row.
    let max_by_lattice = if r == 0 {
        u32::MAX
    } else {
        let before: u32 = prev[..row].iter().sum();
        before.saturating_sub(placed_above)
    };
    let max_here = rem.min(max_by_strip).min(max_by_lattice);
    for a in (0..=max_here).rev() {
        counts[row] = a;
        new_shape[row] = shape[row] + a;
        place_strip(
            nu,
            r,
            row + 1,
            rem - a,
            shape,
            prev,
            counts,
            new_shape,
            placed_above + a,
            bound,
            out,
        );
    }
    counts[row] = 0;
    new_shape[row] = shape[row];
}

/// Coefficients d_{nu,rho} with s_nu(1 + y_1, ..., 1 + y_l) = sum d s_rho(y).
pub fn shifted_schur_coefficients(nu: &Partition, l: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new(Some(l));
    if nu.len() > l {
        return out;
    }
    for rho in nu.subpartitions() {
        let m: Vec<Vec<BigInt>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        binom_i(
                            nu.part(j) as i64 + (l - 1 - j) as i64,
                            rho.part(i) as i64 + (l - 1 - i) as i64,
                        )
                    })
                    .collect()
            })
            .collect();
        out.add(rho, det_bigint(&m));
    }
    out
}

/// c(E (x) F) = prod_{i<=k, j<=l} (1 + x_i + y_j) as sum c s_mu(x) s_rho(y).
///
/// Dual Cauchy gives prod (x_i + z_j) = sum_{mu in k x l} s_mu(x) s_{mu~'}(z)
/// with mu~ the complement of mu in the box; then z = 1 + y.
pub fn tensor_chern_schur(k: usize, l: usize) -> BTreeMap<(Partition, Partition), BigInt> {
    let mut out: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
    for mu in box_partitions(k, l as u32) {
        let comp = mu.complement(k, l as u32).conjugate();
        for (rho, d) in shifted_schur_coefficients(&comp, l).terms {
            let e = out.entry((mu.clone(), rho)).or_insert_with(BigInt::zero);
            *e += d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Polynomial in e_1(x)..e_k(x), e_1(y)..e_l(y); keys are exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementaryPoly {
    pub k: usize,
    pub l: usize,
    pub terms: BTreeMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl ElementaryPoly {
    /// Terms of total Chern degree `d` (e_i has degree i).
    pub fn degree_part(&self, d: u32) -> BTreeMap<(Vec<u32>, Vec<u32>), BigInt> {
        self.terms
            .iter()
            .filter(|((a, b), _)| weighted_degree(a) + weighted_degree(b) == d)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect()
    }

    /// Substitutes e_i(x) -> ex[i-1], e_j(y) -> ey[j-1] in a polynomial ring.
    pub fn evaluate(&self, ex: &[Poly], ey: &[Poly], n_vars: usize) -> Poly {
        let mut out = Poly::zero(n_vars);
        for ((a, b), c) in &self.terms {
            let mut t = Poly::one(n_vars);
            for (i, &p) in a.iter().enumerate() {
                for _ in 0..p {
                    t = t.mul(&ex[i]);
                }
            }
            for (j, &p) in b.iter().enumerate() {
                for _ in 0..p {
                    t = t.mul(&ey[j]);
                }
            }
            out = out.add(&t.scale(c));
        }
        out
    }
}

fn weighted_degree(e: &[u32]) -> u32 {
    e.iter().enumerate().map(|(i, &p)| (i as u32 + 1) * p).sum()
}

/// s_mu in `rank` variables written in elementary symmetric functions via the
/// dual Jacobi-Trudi determinant det[e_{mu'_i - i + j}].
pub fn schur_in_elementary(mu: &Partition, rank: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let conj = mu.conjugate();
    let n = conj.len();
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    if n == 0 {
        out.insert(vec![0; rank], BigInt::one());
        return out;
    }
    // Leibniz expansion; n is small here.
    let perms = itertools::Itertools::permutations(0..n, n);
    for p in perms {
        let mut exp = vec![0u32; rank];
        let mut ok = true;
        for (i, &j) in p.iter().enumerate() {
            let idx = conj.part(i) as i64 - i as i64 + j as i64;
            if idx < 0 || idx as usize > rank {
                ok = false;
                break;
            }
            if idx > 0 {
                exp[idx as usize - 1] += 1;
            }
        }
        if !ok {
            continue;
        }
        let sign = permutation_sign(&p);
        let e = out.entry(exp).or_insert_with(BigInt::zero);
        *e += BigInt::from(sign);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// c(E (x) F) for ranks k and l as a polynomial in the elementary symmetric
/// functions of the two Chern root sets, truncated at `max_degree` if given.
pub fn tensor_chern(k: usize, l: usize, max_degree: Option<u32>) -> Result<ElementaryPoly> {
    if k == 0 || l == 0 {
        return Err(Error::Precondition("tensor_chern needs k, l >= 1".into()));
    }
    let mut terms: BTreeMap<(Vec<u32>, Vec<u32>), BigInt> = BTreeMap::new();
    for ((mu, rho), c) in tensor_chern_schur(k, l) {
        if max_degree.is_some_and(|d| mu.weight() + rho.weight() > d) {
            continue;
        }
        let sx = schur_in_elementary(&mu, k);
        let sy = schur_in_elementary(&rho, l);
        for (a, ca) in &sx {
            for (b, cb) in &sy {
                let e = terms.entry((a.clone(), b.clone())).or_insert_with(BigInt::zero);
                *e += &c * ca * cb;
            }
        }
    }
    terms.retain(|_, v| !v.is_zero());
    Ok(ElementaryPoly { k, l, terms })
}
