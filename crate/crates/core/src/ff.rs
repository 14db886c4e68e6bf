//! Arithmetic in GF(p^n) for small p^n.
//!
//! Elements are polynomials in `t` of degree < n with coefficients mod p,
//! reduced modulo a fixed monic irreducible. Besides the checked
//! [`FieldElement`] API, every element has an integer *code*
//! `c_0 + c_1 p + ... + c_{n-1} p^{n-1}`; the group kernel works on codes
//! through table-driven arithmetic.

use std::fmt;

use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 4;
const TABLE_LIMIT: u64 = 256;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u32,
    n: u32,
    /// Monic modulus, constant term first, length `n + 1`.
    modulus: Vec<u32>,
    q: u32,
    add_table: Vec<u32>,
    mul_table: Vec<u32>,
    inv_table: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FieldElement {
    p: u32,
    n: u32,
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.n)
    }
}

impl FiniteField {
    /// Builds GF(p^n) with the lexicographically smallest monic irreducible
    /// modulus (constant coefficient most significant in the scan).
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange(n));
        }
        let q = p.checked_pow(n).filter(|&q| q <= u32::MAX as u64);
        let q = q.ok_or_else(|| Error::InvalidParameter(format!("field {p}^{n} too large")))?;
        let p = p as u32;
        let modulus = smallest_irreducible(p, n);
        let mut field = FiniteField {
            p,
            n,
            modulus,
            q: q as u32,
            add_table: Vec::new(),
            mul_table: Vec::new(),
            inv_table: Vec::new(),
        };
        if q <= TABLE_LIMIT {
            field.build_tables();
        }
        Ok(field)
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, n) = crate::arith::prime_power_decompose(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::new(p, n)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        self.add_table = vec![0; q * q];
        self.mul_table = vec![0; q * q];
        self.inv_table = vec![0; q];
        for a in 0..q {
            for b in 0..q {
                self.add_table[a * q + b] = self.add_slow(a as u32, b as u32);
                self.mul_table[a * q + b] = self.mul_slow(a as u32, b as u32);
            }
        }
        for a in 1..q {
            for b in 1..q {
                if self.mul_table[a * q + b] == 1 {
                    self.inv_table[a] = b as u32;
                    break;
                }
            }
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    // ---- checked element API ----

    pub fn element(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.n as usize {
            return Err(Error::FieldMismatch);
        }
        let mut c: Vec<u32> = coeffs.iter().map(|&x| x % self.p).collect();
        c.resize(self.n as usize, 0);
        Ok(FieldElement { p: self.p, n: self.n, coeffs: c })
    }

    pub fn zero(&self) -> FieldElement {
        self.from_code(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_code(1)
    }

    /// The class of `t` (equal to the integer `1` in a prime field).
    pub fn generator_t(&self) -> FieldElement {
        self.from_code(if self.n == 1 { 1 } else { self.p })
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |c| self.from_code(c))
    }

    pub fn from_code(&self, mut code: u32) -> FieldElement {
        let mut coeffs = Vec::with_capacity(self.n as usize);
        for _ in 0..self.n {
            coeffs.push(code % self.p);
            code /= self.p;
        }
        FieldElement { p: self.p, n: self.n, coeffs }
    }

    pub fn code(&self, a: &FieldElement) -> Result<u32> {
        self.check(a)?;
        Ok(self.encode(&a.coeffs))
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn check(&self, a: &FieldElement) -> Result<()> {
        if a.p != self.p || a.n != self.n || a.coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.from_code(self.add_code(self.code(a)?, self.code(b)?)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.from_code(self.sub_code(self.code(a)?, self.code(b)?)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.from_code(self.mul_code(self.code(a)?, self.code(b)?)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        Ok(self.from_code(self.neg_code(self.code(a)?)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        Ok(self.from_code(self.inv_code(self.code(a)?)?))
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> Result<FieldElement> {
        Ok(self.from_code(self.pow_code(self.code(a)?, e)))
    }

    // ---- code-level arithmetic ----

    pub fn add_code(&self, a: u32, b: u32) -> u32 {
        if self.add_table.is_empty() {
            self.add_slow(a, b)
        } else {
            self.add_table[(a * self.q + b) as usize]
        }
    }

    pub fn mul_code(&self, a: u32, b: u32) -> u32 {
        if self.mul_table.is_empty() {
            self.mul_slow(a, b)
        } else {
            self.mul_table[(a * self.q + b) as usize]
        }
    }

    pub fn neg_code(&self, a: u32) -> u32 {
        let c: Vec<u32> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&c)
    }

    pub fn sub_code(&self, a: u32, b: u32) -> u32 {
        self.add_code(a, self.neg_code(b))
    }

    pub fn inv_code(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.inv_table.is_empty() {
            Ok(self.pow_code(a, self.q as u64 - 2))
        } else {
            Ok(self.inv_table[a as usize])
        }
    }

    pub fn pow_code(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_code(acc, base);
            }
            base = self.mul_code(base, base);
            e >>= 1;
        }
        acc
    }

    /// A generator of the multiplicative group (smallest code).
    pub fn primitive_element(&self) -> u32 {
        let m = self.q as u64 - 1;
        let primes = crate::arith::prime_divisors(m);
        (1..self.q)
            .find(|&a| primes.iter().all(|&r| self.pow_code(a, m / r) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    pub fn format_code(&self, a: u32) -> String {
        format_poly(&self.digits(a))
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut c = vec![0; self.n as usize];
        for x in c.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        c
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.digits(a), self.digits(b));
        let c: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&c)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let n = self.n as usize;
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
            }
        }
        // reduce using t^n = -(m_0 + ... + m_{n-1} t^{n-1})
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[k - n + i] = (prod[k - n + i] + (p - c) * m) % p;
            }
        }
        let c: Vec<u32> = prod[..n].iter().map(|&x| x as u32).collect();
        self.encode(&c)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(&self.coeffs))
    }
}

fn format_poly(coeffs: &[u32]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "t".to_string(),
            (1, c) => format!("{c}*t"),
            (k, 1) => format!("t^{k}"),
            (k, c) => format!("{c}*t^{k}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Remainder of `a` modulo monic `b` over GF(p); both constant term first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
    let p = p as u64;
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - lead) * bc as u64) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|x| x as u32).collect()
}

/// Monic polynomials of degree `d` over GF(p), constant term first, in the
/// scan order used for the modulus choice.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d);
    (0..count).map(move |mut idx| {
        // constant coefficient is the most significant digit of the scan
        let mut c = vec![0u32; d as usize + 1];
        for i in (0..d as usize).rev() {
            c[i] = (idx % p as u64) as u32;
            idx /= p as u64;
        }
        c[d as usize] = 1;
        c
    })
}

pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let n = (poly.len() - 1) as u32;
    if n <= 1 {
        return n == 1;
    }
    for d in 1..=n / 2 {
        for f in monic_polys(p, d) {
            if poly_rem(poly, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
    monic_polys(p, n)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
