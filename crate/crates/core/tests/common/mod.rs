//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use codegree_core::symmetric_functions::{partitions_in_box, Poly};
use codegree_core::Partition;
use itertools::Itertools;
use num_bigint::BigInt;

pub type MPoly = BTreeMap<Vec<u32>, i64>;

fn add_into(acc: &mut MPoly, p: &MPoly, c: i64) {
    for (e, v) in p {
        let x = acc.entry(e.clone()).or_insert(0);
        *x += c * v;
        if *x == 0 {
            acc.remove(e);
        }
    }
}

pub fn mul(a: &MPoly, b: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let x = out.entry(e.clone()).or_insert(0);
            *x += ca * cb;
            if *x == 0 {
                out.remove(&e);
            }
        }
    }
    out
}

/// Complete homogeneous h_k in n variables: every monomial of degree k.
pub fn complete(n: usize, k: i64) -> MPoly {
    let mut out = MPoly::new();
    if k < 0 {
        return out;
    }
    for combo in (0..n).combinations_with_replacement(k as usize) {
        let mut e = vec![0u32; n];
        for i in combo {
            e[i] += 1;
        }
        out.insert(e, 1);
    }
    out
}

/// s_lambda = det[h_{lambda_i - i + j}], expanded over permutations.
pub fn jacobi_trudi(lambda: &[u32], n: usize) -> MPoly {
    let l = lambda.len();
    let mut out = MPoly::new();
    if l == 0 {
        out.insert(vec![0; n], 1);
        return out;
    }
    for perm in (0..l).permutations(l) {
        let inversions = (0..l)
            .flat_map(|i| (i + 1..l).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term: MPoly = [(vec![0; n], 1)].into_iter().collect();
        for (i, &j) in perm.iter().enumerate() {
            term = mul(&term, &complete(n, lambda[i] as i64 - i as i64 + j as i64));
            if term.is_empty() {
                break;
            }
        }
        add_into(&mut out, &term, if inversions % 2 == 0 { 1 } else { -1 });
    }
    out
}

pub fn from_poly(p: &Poly) -> MPoly {
    p.terms
        .iter()
        .map(|(e, c)| (e.clone(), i64::try_from(c).expect("small coefficient")))
        .collect()
}

pub fn partitions_up_to(max_weight: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_weight)
        .flat_map(|w| partitions_in_box(w, max_len, w.max(1)))
        .collect()
}

/// Hook length formula for straight shapes.
pub fn hook_count(nu: &Partition) -> BigInt {
    let conj = nu.conjugate();
    let n = nu.weight() as u64;
    let mut num: BigInt = (1..=n).map(BigInt::from).product();
    let mut den = BigInt::from(1);
    for (i, &row) in nu.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            den *= BigInt::from(arm + leg + 1);
        }
    }
    num /= den;
    num
}

/// Schur polynomials against Jacobi-Trudi, and Schur decomposition round trips.
pub fn check_schur_round_trips() -> Result<usize, String> {
    use codegree_core::symmetric_functions::{schur_decompose, schur_expand, schur_polynomial};
    use codegree_core::SchurExpansion;
    let mut checked = 0;
    for n in 1..=4 {
        let shapes = partitions_up_to(6, n);
        for mu in &shapes {
            let p = schur_polynomial(mu, n);
            if from_poly(&p) != jacobi_trudi(mu.parts(), n) {
                return Err(format!("s_{mu} in {n} variables differs from Jacobi-Trudi"));
            }
            let back = schur_decompose(&p).map_err(|e| e.to_string())?;
            if back.terms != SchurExpansion::single(mu.clone(), Some(n)).terms {
                return Err(format!("decomposing s_{mu} in {n} variables gives {:?}", back.terms));
            }
            checked += 1;
        }
        // mixed combinations of equal weight
        for w in 2..=5u32 {
            let mut e = SchurExpansion::new(Some(n));
            for (i, mu) in shapes.iter().filter(|m| m.weight() == w).enumerate() {
                e.add(mu.clone(), BigInt::from(i as i64 * 3 - 4));
            }
            let back = schur_decompose(&schur_expand(&e, n)).map_err(|e| e.to_string())?;
            if back.terms != e.terms {
                return Err(format!("round trip of a weight-{w} combination in {n} variables"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Littlewood-Richardson products against monomial expansion in 4 variables.
pub fn check_lr_brute_force() -> Result<usize, String> {
    use codegree_core::symmetric_functions::lr_coefficients;
    use std::collections::HashMap;
    let n = 4;
    let shapes = partitions_up_to(5, n);
    let mut cache: HashMap<Partition, MPoly> = HashMap::new();
    let mut jt = |p: &Partition| {
        cache
            .entry(p.clone())
            .or_insert_with(|| jacobi_trudi(p.parts(), n))
            .clone()
    };
    let mut checked = 0;
    for mu in &shapes {
        for nu in &shapes {
            let lhs = mul(&jt(mu), &jt(nu));
            let mut rhs = MPoly::new();
            for (lam, c) in lr_coefficients(mu, nu, None) {
                if lam.len() <= n {
                    add_into(&mut rhs, &jt(&lam), c as i64);
                }
            }
            if lhs != rhs {
                return Err(format!("s_{mu} s_{nu} disagrees with its LR expansion"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Aitken determinant against corner removal for every mu inside nu, |nu| <= max,
/// and against the hook length formula for straight shapes.
pub fn check_skew_counts(max: u32) -> Result<usize, String> {
    use codegree_core::symmetric_functions::{skew_syt_count, skew_syt_count_recursive};
    let mut checked = 0;
    for nu in partitions_up_to(max, max as usize) {
        for mu in nu.subpartitions() {
            let d = skew_syt_count(&mu, &nu);
            let r = skew_syt_count_recursive(&mu, &nu);
            if d != r {
                return Err(format!("f^({nu}/{mu}): determinant {d}, recursion {r}"));
            }
            checked += 1;
        }
        let h = hook_count(&nu);
        if skew_syt_count(&Partition::empty(), &nu) != h {
            return Err(format!("f^{nu} differs from the hook length count {h}"));
        }
    }
    Ok(checked)
}
