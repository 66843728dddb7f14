//! Degrees of projective duals: the Katz-Kleiman integral over explicit Chow
//! models, closed formulas for Grassmannians, Lagrangian and spinor
//! varieties, and the quadric-product generating function.

pub mod chow;

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use chow::{ChowModel, Class};

use crate::error::{Error, Result};
use crate::kac_gradings::GradingReport;
use crate::symmetric_functions::{expand_alt_square, expand_sym_square, skew_syt_count, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    KatzKleiman,
    Sum,
    ClosedForm,
    GeneratingFunction,
    ReflectionCount,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::KatzKleiman => "katz-kleiman",
            Method::Sum => "sum",
            Method::ClosedForm => "closed-form",
            Method::GeneratingFunction => "generating-function",
            Method::ReflectionCount => "reflection-count",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub method: String,
    pub value: String,
    /// None for values reported for information only.
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodegreeResult {
    pub variety: String,
    pub embedding: String,
    pub method: Method,
    pub value: u64,
    pub is_hypersurface: bool,
    pub cross_checks: Vec<CrossCheck>,
}

impl CodegreeResult {
    fn new(variety: String, embedding: String, method: Method, value: u64) -> Self {
        CodegreeResult {
            variety,
            embedding,
            method,
            value,
            is_hypersurface: value > 0,
            cross_checks: Vec::new(),
        }
    }

    /// Records another route's value; disagreement is an error.
    pub fn check_against(&mut self, method: Method, value: u64) -> Result<()> {
        let agrees = value == self.value;
        self.cross_checks.push(CrossCheck {
            method: method.to_string(),
            value: value.to_string(),
            agrees: Some(agrees),
        });
        if agrees {
            Ok(())
        } else {
            Err(Error::CrossCheck(format!(
                "{}: {} gives {} but {} gives {}",
                self.variety, self.method, self.value, method, value
            )))
        }
    }

    pub fn note(&mut self, method: &str, value: String) {
        self.cross_checks.push(CrossCheck {
            method: method.to_string(),
            value,
            agrees: None,
        });
    }
}

fn to_degree(v: &BigRational, what: &str) -> Result<u64> {
    if !v.is_integer() {
        return Err(Error::Model(format!("{what}: non-integral value {v}")));
    }
    if v.is_negative() {
        return Err(Error::Model(format!("{what}: negative value {v}")));
    }
    v.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Model(format!("{what}: value {v} overflows")))
}

fn embedding_label(model: &ChowModel) -> String {
    match model {
        ChowModel::Projective { veronese, .. } | ChowModel::Quadric { veronese, .. } => {
            if *veronese == 1 {
                "O(1)".into()
            } else {
                format!("O({veronese})")
            }
        }
        ChowModel::Grassmannian { .. } | ChowModel::Lagrangian { .. } => "Pluecker".into(),
        ChowModel::Spinor { .. } => "half-spin".into(),
        ChowModel::Product { factors } => {
            let parts: Vec<String> = factors.iter().map(embedding_label).collect();
            format!("Segre({})", parts.join(", "))
        }
    }
}

/// Moments M(a) = int lambda^a c_{d-a}(Omega) for a = 0..d.
pub fn moments(model: &ChowModel) -> Result<Vec<BigRational>> {
    model.validate()?;
    let d = model.dim();
    let c = model.cotangent_chern();
    let lambda = model.lambda();
    let out: Vec<BigRational> = (0..=d)
        .into_par_iter()
        .map(|a| {
            let mut x = model.graded_part(&c, d - a);
            for _ in 0..a {
                x = model.mul(&x, &lambda);
            }
            model.integrate(&x)
        })
        .collect();
    Ok(out)
}

/// int c(Omega) lambda^k / (1 - lambda)^{k+2}, times (k+1), from moments.
fn weighted_moment_sum(m: &[BigRational], k: usize) -> BigRational {
    let mut total = BigRational::zero();
    for (a, v) in m.iter().enumerate() {
        if a < k {
            continue;
        }
        let b = binomial(BigInt::from(a + 1), BigInt::from(k + 1));
        total += v * BigRational::from_integer(b);
    }
    total * BigRational::from_integer(BigInt::from(k + 1))
}

/// deg X^vee = int c(Omega_X) / (1 - lambda)^2, zero when the dual is not a
/// hypersurface.
pub fn katz_kleiman(model: &ChowModel) -> Result<CodegreeResult> {
    let m = moments(model)?;
    let v = weighted_moment_sum(&m, 0);
    let value = to_degree(&v, &model.to_string())?;
    Ok(CodegreeResult::new(
        model.to_string(),
        embedding_label(model),
        Method::KatzKleiman,
        value,
    ))
}

/// Codegree of X x P^k in the Segre embedding:
/// (k+1) int lambda^k c(Omega_X) / (1 - lambda)^{k+2}.
pub fn codegree_product_with_pk(model: &ChowModel, k: usize) -> Result<CodegreeResult> {
    let m = moments(model)?;
    let v = weighted_moment_sum(&m, k);
    let label = format!("{model} x P^{k}");
    let value = to_degree(&v, &label)?;
    let mut r = CodegreeResult::new(
        label,
        format!("Segre({}, O(1))", embedding_label(model)),
        Method::KatzKleiman,
        value,
    );
    if k <= 3 {
        // Independent route through the product model.
        let prod = ChowModel::product(vec![model.clone(), ChowModel::projective(k)]);
        let direct = katz_kleiman(&prod)?;
        r.check_against(Method::KatzKleiman, direct.value)?;
    }
    Ok(r)
}

fn check_grassmannian(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!("G({k},{n}) needs 1 <= k <= n-1")));
    }
    Ok(())
}

/// Returns (calibrated sum, unweighted sum).
///
/// Over k-subsets S of {1..n} with l(S) the sum of the elements,
/// P(S) = prod_{i in S, j not in S} (l(S) + j - i) / (i - j).
/// The value 2k/(n+1) sum P(S) does not reproduce known codegrees (it gives
/// 8/5 for G(2,4)); weighting each term by l(S) instead,
/// 2/(k(n+1)) sum l(S) P(S), matches every Katz-Kleiman value.
pub fn grassmannian_sum_values(k: usize, n: usize) -> Result<(BigRational, BigRational)> {
    check_grassmannian(k, n)?;
    let subsets: Vec<Vec<i64>> = itertools::Itertools::combinations(1..=n as i64, k).collect();
    let (weighted, plain) = subsets
        .par_iter()
        .map(|s| {
            let ell: i64 = s.iter().sum();
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for &i in s {
                for j in 1..=n as i64 {
                    if s.contains(&j) {
                        continue;
                    }
                    num *= BigInt::from(ell + j - i);
                    den *= BigInt::from(i - j);
                }
            }
            let p = BigRational::new(num, den);
            (&p * BigRational::from_integer(BigInt::from(ell)), p)
        })
        .reduce(
            || (BigRational::zero(), BigRational::zero()),
            |a, b| (a.0 + b.0, a.1 + b.1),
        );
    let kn = BigInt::from(k) * BigInt::from(n + 1);
    let calibrated = weighted * BigRational::new(BigInt::from(2), kn);
    let unweighted = plain * BigRational::new(BigInt::from(2 * k), BigInt::from(n + 1));
    Ok((calibrated, unweighted))
}

pub fn codegree_grassmannian_sum(k: usize, n: usize) -> Result<CodegreeResult> {
    let (cal, unweighted) = grassmannian_sum_values(k, n)?;
    let label = format!("G({k},{n})");
    let value = to_degree(&cal, &label).map_err(|_| {
        Error::Model(format!("{label}: sum formula gives non-degree value {cal}"))
    })?;
    let mut r = CodegreeResult::new(label, "Pluecker".into(), Method::Sum, value);
    r.note("unweighted-sum", unweighted.to_string());
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrassmannianMethod {
    Sum,
    KatzKleiman,
    Both,
}

pub fn codegree_grassmannian(k: usize, n: usize, method: GrassmannianMethod) -> Result<CodegreeResult> {
    check_grassmannian(k, n)?;
    let model = ChowModel::Grassmannian { k, n };
    match method {
        GrassmannianMethod::Sum => codegree_grassmannian_sum(k, n),
        GrassmannianMethod::KatzKleiman => katz_kleiman(&model),
        GrassmannianMethod::Both => {
            let mut r = codegree_grassmannian_sum(k, n)?;
            let kk = katz_kleiman(&model)?;
            r.check_against(Method::KatzKleiman, kk.value)?;
            Ok(r)
        }
    }
}

fn sign(w: u32) -> BigInt {
    if w % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed form for LG(n,2n):
/// sum over mu in delta(n+1) of (-1)^|mu| (C(n+1,2) - |mu| + 1) a_mu K_{mu,delta(n+1)}.
pub fn lagrangian_closed_form(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Precondition("LG(n,2n) needs n >= 2".into()));
    }
    let a = expand_sym_square(n)?;
    let top = Partition::delta(n + 1);
    let d = (n * (n + 1) / 2) as i64;
    let mut total = BigInt::zero();
    for (mu, c) in &a.terms {
        let k = skew_syt_count(mu, &top);
        total += sign(mu.weight()) * BigInt::from(d - mu.weight() as i64 + 1) * c * k;
    }
    Ok(total)
}

pub fn codegree_lagrangian(n: usize) -> Result<CodegreeResult> {
    let v = lagrangian_closed_form(n)?;
    let label = format!("LG({n},{})", 2 * n);
    let value = to_degree(&BigRational::from_integer(v), &label)?;
    let mut r = CodegreeResult::new(label, "Pluecker".into(), Method::ClosedForm, value);
    let kk = katz_kleiman(&ChowModel::Lagrangian { n })?;
    r.check_against(Method::KatzKleiman, kk.value)?;
    Ok(r)
}

/// Returns (value with prefactor 2^{-(n-1)(n-2)/2}, value with 2^{-n(n-3)/2}).
///
/// The inner sum is sum over mu in delta(n) of
/// (-1)^|mu| (C(n,2) - |mu| + 1) 2^|mu| b_mu K_{mu,delta(n)}. One component
/// of OG(n,2n) has class 2^{n-1} sigma_{delta(n+1)}, which gives the first
/// prefactor; the second is what the class 2^n sigma_{delta(n+1)} of both
/// components together would give.
pub fn spinor_closed_form_values(n: usize) -> Result<(BigRational, BigRational)> {
    if n < 3 {
        return Err(Error::Precondition("the spinor variety needs n >= 3".into()));
    }
    let b = expand_alt_square(n)?;
    let top = Partition::delta(n);
    let d = (n * (n - 1) / 2) as i64;
    let mut total = BigInt::zero();
    for (mu, c) in &b.terms {
        let k = skew_syt_count(mu, &top);
        total += sign(mu.weight())
            * BigInt::from(d - mu.weight() as i64 + 1)
            * (BigInt::one() << mu.weight())
            * c
            * k;
    }
    let one_component = BigRational::new(total.clone(), BigInt::one() << ((n - 1) * (n - 2) / 2));
    // n(n-3)/2 is negative at n = 2 only, excluded above.
    let both = BigRational::new(total, BigInt::one() << (n * (n - 3) / 2));
    Ok((one_component, both))
}

pub fn codegree_spinor(n: usize) -> Result<CodegreeResult> {
    let (value, both) = spinor_closed_form_values(n)?;
    let label = format!("OG({n},{})_+", 2 * n);
    let value = to_degree(&value, &label)?;
    let mut r = CodegreeResult::new(label, "half-spin".into(), Method::ClosedForm, value);
    r.note("prefactor-2^(-n(n-3)/2)", both.to_string());
    let kk = katz_kleiman(&ChowModel::Spinor { n })?;
    r.check_against(Method::KatzKleiman, kk.value)?;
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreQuadricsResult {
    pub a: usize,
    pub b: usize,
    pub result: CodegreeResult,
    pub conjectured: u64,
    pub conjecture_holds: bool,
}

/// Coefficient of x^p y^q in (1-x)^r (1-y)^s / ((1-2x)(1-x-y)^2(1-2y)).
pub fn quadric_series_coefficient(p: usize, q: usize, r: usize, s: usize) -> BigInt {
    let big = |n: usize| BigInt::from(n);
    // (1-x)^r / (1-2x) up to x^p
    let fx: Vec<BigInt> = (0..=p)
        .map(|i| {
            (0..=i.min(r))
                .map(|j| sign(j as u32) * binomial(big(r), big(j)) * (BigInt::one() << (i - j)))
                .sum()
        })
        .collect();
    let fy: Vec<BigInt> = (0..=q)
        .map(|i| {
            (0..=i.min(s))
                .map(|j| sign(j as u32) * binomial(big(s), big(j)) * (BigInt::one() << (i - j)))
                .sum()
        })
        .collect();
    // 1/(1-x-y)^2 has coefficient (i+j+1) C(i+j, i) at x^i y^j.
    let mut total = BigInt::zero();
    for i in 0..=p {
        for j in 0..=q {
            let g = big(i + j + 1) * binomial(big(i + j), big(i));
            total += &fx[p - i] * &fy[q - j] * g;
        }
    }
    total
}

/// Closed orbit Q^{a-2} x Q^{b-2} of SO_a x SO_b on C^a (x) C^b.
///
/// Four times the coefficient of x^{a-2} y^{b-2} in
/// (1-x)^a (1-y)^b / ((1-2x)(1-x-y)^2(1-2y)); the same expression at
/// x^a y^b with exponents a+2, b+2 is the codegree of Q^a x Q^b.
pub fn codegree_segre_quadrics(a: usize, b: usize) -> Result<SegreQuadricsResult> {
    if a < 3 || b < 3 {
        return Err(Error::Precondition("quadric products need a, b >= 3".into()));
    }
    let v = BigInt::from(4) * quadric_series_coefficient(a - 2, b - 2, a, b);
    let label = format!("Q^{} x Q^{}", a - 2, b - 2);
    let value = to_degree(&BigRational::from_integer(v), &label)?;
    let mut r = CodegreeResult::new(label, "Segre(O(1), O(1))".into(), Method::GeneratingFunction, value);
    let model = ChowModel::product(vec![ChowModel::quadric(a - 2), ChowModel::quadric(b - 2)]);
    let kk = katz_kleiman(&model)?;
    r.check_against(Method::KatzKleiman, kk.value)?;
    let unshifted = BigInt::from(4) * quadric_series_coefficient(a, b, a + 2, b + 2);
    r.note(&format!("coefficient-at-x^{a}y^{b} (Q^{a} x Q^{b})"), unshifted.to_string());
    let m = a.min(b) as u64;
    let conjectured = 4 * m * (m - 1) / 2;
    Ok(SegreQuadricsResult {
        a,
        b,
        conjecture_holds: conjectured == r.value,
        conjectured,
        result: r,
    })
}

/// Katz-Kleiman on a product of projective spaces; the dual is a hypersurface
/// exactly when the largest factor dimension is at most the sum of the others.
pub fn segre_product(dims: &[usize]) -> Result<CodegreeResult> {
    let model = ChowModel::product(dims.iter().map(|&n| ChowModel::projective(n)).collect());
    katz_kleiman(&model)
}

/// Agreement between the reflection-count codegree of a closed orbit and the
/// Katz-Kleiman value of its Chow model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCheck {
    pub diagram: String,
    pub node: usize,
    pub orbit: String,
    pub model: String,
    pub reflection_count: u64,
    pub katz_kleiman: u64,
    pub agrees: bool,
}

pub fn orbit_crosscheck(rows: &[GradingReport]) -> Result<Vec<OrbitCheck>> {
    rows.par_iter()
        .filter(|r| r.orbit_model.is_some())
        .map(|r| {
            let model = r.orbit_model.as_ref().expect("filtered");
            let reflection_count = r.codegree.ok_or_else(|| {
                Error::Precondition(format!("{} node {} has no codegree", r.diagram, r.chosen_node))
            })?;
            let kk = katz_kleiman(model)?.value;
            Ok(OrbitCheck {
                diagram: r.diagram.clone(),
                node: r.chosen_node,
                orbit: r.closed_orbit_label.clone().unwrap_or_default(),
                model: model.to_string(),
                reflection_count,
                katz_kleiman: kk,
                agrees: kk == reflection_count,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_katz_kleiman() {
        assert_eq!(katz_kleiman(&ChowModel::projective(3)).unwrap().value, 0);
        for d in 1..=6 {
            assert_eq!(katz_kleiman(&ChowModel::quadric(d)).unwrap().value, 2);
        }
        let g24 = katz_kleiman(&ChowModel::Grassmannian { k: 2, n: 4 }).unwrap();
        assert_eq!(g24.value, 2);
        assert!(!katz_kleiman(&ChowModel::projective(2)).unwrap().is_hypersurface);
    }

    #[test]
    fn veronese_values() {
        // Classical discriminant degrees (n+1)(d-1)^n.
        for (n, d, v) in [(1, 2, 2), (1, 3, 4), (2, 2, 3), (2, 3, 12), (3, 2, 4)] {
            let m = ChowModel::Projective { n, veronese: d };
            assert_eq!(katz_kleiman(&m).unwrap().value, v, "n={n} d={d}");
        }
        let v3p1 = ChowModel::Projective { n: 1, veronese: 3 };
        assert_eq!(codegree_product_with_pk(&v3p1, 1).unwrap().value, 6);
    }

    #[test]
    fn grassmannian_anchors() {
        assert_eq!(codegree_grassmannian_sum(3, 9).unwrap().value, 120);
        assert_eq!(codegree_grassmannian_sum(4, 8).unwrap().value, 126);
        assert_eq!(codegree_grassmannian_sum(2, 4).unwrap().value, 2);
        let (_, unweighted) = grassmannian_sum_values(2, 4).unwrap();
        assert_eq!(unweighted, BigRational::new(8.into(), 5.into()));
    }

    #[test]
    fn sum_formula_on_projective_spaces() {
        // G(1,n) is P^{n-1}, whose dual is a point.
        for n in 2..=6 {
            assert_eq!(codegree_grassmannian_sum(1, n).unwrap().value, 0);
        }
    }

    #[test]
    fn lagrangian_values() {
        assert_eq!(codegree_lagrangian(2).unwrap().value, 2);
        assert_eq!(codegree_lagrangian(3).unwrap().value, 4);
        assert_eq!(codegree_lagrangian(4).unwrap().value, 72);
        assert!(codegree_lagrangian(1).is_err());
    }

    #[test]
    fn spinor_values() {
        assert_eq!(codegree_spinor(4).unwrap().value, 2);
        assert_eq!(codegree_spinor(5).unwrap().value, 0);
        assert_eq!(codegree_spinor(3).unwrap().value, 0);
        let (_, both) = spinor_closed_form_values(4).unwrap();
        assert_eq!(both, BigRational::from_integer(BigInt::from(4)));
    }

    #[test]
    fn quadric_products() {
        let r = codegree_segre_quadrics(4, 4).unwrap();
        assert_eq!(r.result.value, 24);
        assert!(r.conjecture_holds);
        assert_eq!(codegree_segre_quadrics(4, 5).unwrap().result.value, 24);
        assert_eq!(codegree_segre_quadrics(3, 3).unwrap().result.value, 12);
        let r = codegree_segre_quadrics(3, 7).unwrap();
        assert_eq!(r.conjectured, 12);
    }

    #[test]
    fn hyperdeterminant_and_counterexample() {
        let q2 = ChowModel::quadric(2);
        assert_eq!(codegree_product_with_pk(&q2, 1).unwrap().value, 4);
        assert_eq!(segre_product(&[1, 2, 5]).unwrap().value, 0);
        assert_eq!(segre_product(&[1, 1, 1]).unwrap().value, 4);
        let q3 = ChowModel::quadric(3);
        let direct = codegree_product_with_pk(&q3, 0).unwrap().value;
        assert_eq!(direct, katz_kleiman(&q3).unwrap().value);
    }
}
