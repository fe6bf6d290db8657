//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(z_n)` is stored as its coefficient vector in the power
//! basis `1, z, ..., z^(phi(n)-1)`, reduced modulo the cyclotomic polynomial.
//! Operands with different conductors are lifted to the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::CycloError;

fn cache() -> &'static Mutex<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    let p = Arc::new(num);
    cache().lock().unwrap().insert(n, p.clone());
    p
}

fn int_poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    while r.len() > 1 && r.last().unwrap().is_zero() {
        r.pop();
    }
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    if r.len() <= db {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    q
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduce a dense polynomial in z modulo Phi_n; the result has length phi(n).
fn reduce(mut p: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    if p.len() > d {
        for i in (d..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut p[i], BigRational::zero());
            let shift = i - d;
            for (j, pj) in phi.iter().enumerate().take(d) {
                if !pj.is_zero() {
                    p[shift + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
    }
    p.resize(d, BigRational::zero());
    p
}

/// Exact element of the cyclotomic field Q(z_n), z_n = exp(2 pi i / n).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u32,
    c: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let d = euler_phi(n) as usize;
        Cyclotomic {
            n,
            c: vec![BigRational::zero(); d],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, BigRational::one())
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, rat(v))
    }

    pub fn from_rational(n: u32, v: BigRational) -> Self {
        let mut z = Self::zero(n);
        z.c[0] = v;
        z
    }

    /// Build from a dense polynomial in z_n (any length).
    pub fn from_poly(n: u32, p: Vec<BigRational>) -> Self {
        Cyclotomic { n, c: reduce(p, n) }
    }

    /// exp(2 pi i k / n).
    pub fn root_of_unity(n: u32, k: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        let k = k.rem_euclid(n as i64) as usize;
        let mut p = vec![BigRational::zero(); k + 1];
        p[k] = BigRational::one();
        Ok(Self::from_poly(n, p))
    }

    /// Shorthand for `root_of_unity` when `n > 0` is known.
    pub fn zeta(n: u32, k: i64) -> Self {
        Self::root_of_unity(n, k).expect("positive conductor")
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Re-express in Q(z_m); `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        if m == self.n {
            return self.clone();
        }
        assert!(m % self.n == 0, "cannot lift conductor {} to {}", self.n, m);
        let step = (m / self.n) as usize;
        let mut p = vec![BigRational::zero(); (self.c.len().max(1) - 1) * step + 1];
        for (k, ck) in self.c.iter().enumerate() {
            p[k * step] = ck.clone();
        }
        Self::from_poly(m, p)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    /// Complex conjugation, z -> z^-1.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut p = vec![BigRational::zero(); n.max(1)];
        for (k, ck) in self.c.iter().enumerate() {
            let j = (n - k) % n;
            p[j] += ck;
        }
        Self::from_poly(self.n, p)
    }

    /// Galois action z -> z^k, gcd(k, n) = 1.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        let mut p = vec![BigRational::zero(); self.n as usize];
        for (j, cj) in self.c.iter().enumerate() {
            let e = ((j as i64) * k).rem_euclid(n) as usize;
            p[e] += cj;
        }
        Self::from_poly(self.n, p)
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.n, r.recip()));
        }
        let phi: Vec<BigRational> = cyclotomic_poly(self.n)
            .iter()
            .map(|x| BigRational::from_integer(x.clone()))
            .collect();
        // s*a + t*phi = g, g a nonzero constant since Phi_n is irreducible
        let (g, s) = poly_ext_gcd(self.c.clone(), phi);
        debug_assert_eq!(g.len(), 1);
        let scale = g[0].recip();
        let s: Vec<BigRational> = s.into_iter().map(|x| x * &scale).collect();
        Ok(Self::from_poly(self.n, s))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let v = ck.to_f64().unwrap_or(f64::NAN);
            let th = 2.0 * std::f64::consts::PI * k as f64 / n;
            acc += Complex64::new(v * th.cos(), v * th.sin());
        }
        acc
    }

    /// `Some(k)` with self = z_n^k, smallest k.
    pub fn root_exponent(&self) -> Option<u32> {
        (0..self.n).find(|&k| *self == Self::zeta(self.n, k as i64))
    }

    /// Exact display string with w = exp(2 pi i / n) for the element's own conductor.
    pub fn render(&self) -> String {
        if let Some(r) = self.as_rational() {
            return render_rational(&r);
        }
        let mut signed = None;
        for k in 1..self.n {
            let t = self * &Self::zeta(self.n, -(k as i64));
            if let Some(r) = t.as_rational() {
                if r.is_positive() {
                    return render_term(&r, k as usize, true);
                }
                signed.get_or_insert((r, k));
            }
        }
        if let Some((r, k)) = signed {
            return render_term(&r, k as usize, true);
        }
        let mut out = String::new();
        for (k, ck) in self.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let s = render_term(ck, k, out.is_empty());
            out.push_str(&s);
        }
        out
    }

    /// Parse the `render` format, interpreting `w` as exp(2 pi i / n).
    pub fn parse(s: &str, n: u32) -> Result<Self, CycloError> {
        let bad = || CycloError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        let mut acc = Self::zero(n);
        let bytes: Vec<char> = t.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
                i += 1;
            }
            let term: String = bytes[start..i].iter().collect();
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, k) = match term.find('w') {
                None => (parse_rational(&term).ok_or_else(bad)?, 0i64),
                Some(pos) => {
                    let head = term[..pos].trim_end_matches('*');
                    let coef = if head.is_empty() {
                        BigRational::one()
                    } else {
                        parse_rational(head).ok_or_else(bad)?
                    };
                    let tail = &term[pos + 1..];
                    let k = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|e| e.parse::<i64>().ok())
                            .ok_or_else(bad)?
                    };
                    (coef, k)
                }
            };
            acc = &acc + &Self::zeta(n, k).scale(&(coef * rat(sign)));
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().ok()?;
            let b: BigInt = b.parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(BigRational::new(a, b))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn render_term(c: &BigRational, k: usize, first: bool) -> String {
    let neg = c.is_negative();
    let a = c.abs();
    let sign = match (neg, first) {
        (true, _) => "-",
        (false, true) => "",
        (false, false) => "+",
    };
    let w = match k {
        0 => String::new(),
        1 => "w".to_string(),
        _ => format!("w^{k}"),
    };
    if k == 0 {
        format!("{sign}{}", render_rational(&a))
    } else if a.is_one() {
        format!("{sign}{w}")
    } else {
        format!("{sign}{}*{w}", render_rational(&a))
    }
}

fn trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    if r.len() <= db {
        return (vec![BigRational::zero()], r);
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn is_zero_poly(p: &[BigRational]) -> bool {
    p.iter().all(|x| x.is_zero())
}

/// Returns (g, s) with s*a = g (mod b), g = gcd(a, b).
fn poly_ext_gcd(a: Vec<BigRational>, b: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (a, b);
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRational::one()], vec![BigRational::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        let (a, b) = Self::common(self, other);
        a.c == b.c
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n != rhs.n {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a + &b;
        }
        Cyclotomic {
            n: self.n,
            c: self.c.iter().zip(&rhs.c).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n != rhs.n {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a - &b;
        }
        Cyclotomic {
            n: self.n,
            c: self.c.iter().zip(&rhs.c).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.n != rhs.n {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(&r);
        }
        Cyclotomic::from_poly(self.n, poly_mul(&self.c, &rhs.c))
    }
}

impl<'a> Div<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.n == rhs.n {
            for (x, y) in self.c.iter_mut().zip(&rhs.c) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    n: u32,
    coeffs: Vec<[String; 2]>,
    #[serde(default, skip_deserializing)]
    approx: [f64; 2],
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let z = self.to_complex();
        CycloJson {
            n: self.n,
            coeffs: self
                .c
                .iter()
                .map(|r| [r.numer().to_string(), r.denom().to_string()])
                .collect(),
            approx: [clean(z.re), clean(z.im)],
        }
        .serialize(s)
    }
}

fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = CycloJson::deserialize(d)?;
        if j.n == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut p = Vec::with_capacity(j.coeffs.len());
        for [a, b] in &j.coeffs {
            let a: BigInt = a.parse().map_err(D::Error::custom)?;
            let b: BigInt = b.parse().map_err(D::Error::custom)?;
            if b.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            p.push(BigRational::new(a, b));
        }
        if p.is_empty() {
            p.push(BigRational::zero());
        }
        Ok(Cyclotomic::from_poly(j.n, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Cyclotomic {
        Cyclotomic::zeta(6, 1)
    }

    #[test]
    fn phi_polys() {
        let p12: Vec<i64> = cyclotomic_poly(12).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(p12, vec![1, 0, -1, 0, 1]);
        let p6: Vec<i64> = cyclotomic_poly(6).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(p6, vec![1, -1, 1]);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn omega_basics() {
        let om = Cyclotomic::zeta(12, 2);
        assert_eq!(om.pow(6), Cyclotomic::one(12));
        assert_eq!(om.pow(3), Cyclotomic::from_int(12, -1));
        assert_eq!(&w() * &Cyclotomic::zeta(6, 5), Cyclotomic::one(6));
        assert_eq!(Cyclotomic::zeta(6, 2).conj(), Cyclotomic::zeta(6, 4));
        let s = &(&Cyclotomic::zeta(3, 0) + &Cyclotomic::zeta(3, 1)) + &Cyclotomic::zeta(3, 2);
        assert!(s.is_zero());
        let two = Cyclotomic::from_int(6, 2);
        let t = &(&two + &(&two * &Cyclotomic::zeta(6, 2))) + &(&two * &Cyclotomic::zeta(6, 4));
        assert!(t.is_zero());
        assert_eq!(Cyclotomic::root_of_unity(1, 0).unwrap(), Cyclotomic::one(1));
        assert!(Cyclotomic::root_of_unity(0, 1).is_err());
    }

    #[test]
    fn mixed_conductors() {
        assert_eq!(Cyclotomic::zeta(6, 2), Cyclotomic::zeta(3, 1));
        assert_eq!(Cyclotomic::zeta(12, 2), w());
        let s = &Cyclotomic::zeta(4, 1) + &Cyclotomic::zeta(3, 1);
        assert_eq!(s.conductor(), 12);
    }

    #[test]
    fn inverse_and_division() {
        let a = &Cyclotomic::from_int(12, 3) + &Cyclotomic::zeta(12, 5);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert!(Cyclotomic::zero(5).inv().is_err());
    }

    #[test]
    fn complex_embedding() {
        let z = w().to_complex();
        assert!((z.re - 0.5).abs() < 1e-12 && (z.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!((Cyclotomic::from_int(6, -1).to_complex().re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn render_and_parse() {
        for k in 0..6 {
            let z = Cyclotomic::zeta(6, k);
            let s = z.render();
            assert_eq!(Cyclotomic::parse(&s, 6).unwrap(), z, "{s}");
        }
        assert_eq!(Cyclotomic::zeta(6, 2).render(), "w^2");
        assert_eq!(Cyclotomic::from_int(6, -1).render(), "-1");
        assert_eq!(Cyclotomic::zeta(6, 3).render(), "-1");
        let x = &Cyclotomic::from_int(6, 3) * &Cyclotomic::zeta(6, 4);
        assert_eq!(x.render(), "3*w^4");
        let y = &Cyclotomic::from_int(12, 1) + &Cyclotomic::zeta(12, 1);
        assert_eq!(Cyclotomic::parse(&y.render(), 12).unwrap(), y);
        assert!(Cyclotomic::parse("w^", 6).is_err());
        assert!(Cyclotomic::parse("", 6).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let x = &Cyclotomic::zeta(12, 1) + &Cyclotomic::from_rational(12, BigRational::new(1.into(), 3.into()));
        let s = serde_json::to_string(&x).unwrap();
        let y: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn root_orders() {
        for n in [1u32, 2, 5, 6, 8, 12] {
            for k in 0..n as i64 {
                let z = Cyclotomic::zeta(n, k);
                let ord = n / n.gcd(&(k as u32).max(0)).max(1);
                let ord = if k == 0 { 1 } else { ord };
                assert!(z.pow(ord).is_one());
                for j in 1..ord {
                    assert!(!z.pow(j).is_one());
                }
            }
        }
    }
}
