//! Exact arithmetic in Q(zeta_n), stored in the power basis of zeta and
//! reduced modulo the n-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer coefficients of Phi_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cache").get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_polynomial(d);
            p = exact_div(&p, &q);
        }
    }
    let p = Arc::new(p);
    cache.lock().expect("cache").insert(n, p.clone());
    p
}

fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= c * bj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

#[derive(Clone)]
pub struct CyclotomicNumber {
    order: u32,
    modulus: Arc<Vec<i64>>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl Hash for CyclotomicNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{k}"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        CyclotomicNumber {
            order,
            modulus,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = q;
        z
    }

    pub fn from_int(order: u32, k: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// zeta^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(order, raw)
    }

    pub fn from_coeffs(order: u32, raw: Vec<BigRational>) -> Self {
        Self::reduce(order, raw)
    }

    fn reduce(order: u32, mut raw: Vec<BigRational>) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        for top in (phi..raw.len()).rev() {
            let c = std::mem::take(&mut raw[top]);
            if c.is_zero() {
                continue;
            }
            for (j, m) in modulus.iter().enumerate().take(phi) {
                if *m != 0 {
                    let idx = top - phi + j;
                    raw[idx] -= &c * BigRational::from_integer(BigInt::from(*m));
                }
            }
        }
        raw.resize(phi, BigRational::zero());
        CyclotomicNumber {
            order,
            modulus,
            coeffs: raw,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a rational number, if it lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(|c| c.is_zero())
            .then(|| self.coeffs[0].clone())
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        })
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        let q = BigRational::from_integer(k.clone());
        self.scale(&q)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixed cyclotomic fields");
    }

    /// Multiplicative inverse; None for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = self.degree();
        if phi == 1 {
            return Some(Self::from_rational(self.order, self.coeffs[0].recip()));
        }
        // Solve (mult-by-self) y = 1 over Q.
        let cols: Vec<Vec<BigRational>> = (0..phi)
            .map(|k| (self * &Self::zeta_pow(self.order, k as i64)).coeffs)
            .collect();
        let mut rows: Vec<Vec<BigRational>> = (0..phi)
            .map(|i| {
                let mut r: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
                r.push(if i == 0 { BigRational::one() } else { BigRational::zero() });
                r
            })
            .collect();
        for col in 0..phi {
            let p = (col..phi).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, p);
            let inv = rows[col][col].recip();
            for x in rows[col].iter_mut() {
                *x *= &inv;
            }
            for r in 0..phi {
                if r != col && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in 0..=phi {
                        let t = &rows[col][c] * &f;
                        rows[r][c] -= t;
                    }
                }
            }
        }
        Some(Self::reduce(
            self.order,
            rows.into_iter().map(|r| r[phi].clone()).collect(),
        ))
    }

    /// Image under zeta -> exp(2 pi i j / order).
    pub fn embed(&self, j: u32) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * (j as f64) * (k as f64) / (self.order as f64);
            z += Complex64::from_polar(1.0, angle) * c.to_f64().unwrap_or(f64::NAN);
        }
        z
    }

    /// Exponents j coprime to the order, one per complex embedding.
    pub fn embeddings(order: u32) -> Vec<u32> {
        (1..=order.max(1))
            .filter(|&j| num_integer::gcd(j, order) == 1)
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn max_abs_coeff(&self) -> BigRational {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero)
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(o);
        CyclotomicNumber {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(o);
        CyclotomicNumber {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, o: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(o);
        let phi = self.degree();
        if phi == 1 {
            return CyclotomicNumber {
                order: self.order,
                modulus: self.modulus.clone(),
                coeffs: vec![&self.coeffs[0] * &o.coeffs[0]],
            };
        }
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        CyclotomicNumber::reduce(self.order, raw)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $f(self, o: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $f(self, o: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$f(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}
