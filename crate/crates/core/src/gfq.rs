//! Finite fields `F_{p^n}` in a polynomial basis over `F_p`.
//!
//! A [`FieldSpec`] is a cheap, shareable handle (an `Arc`) holding the
//! prime, the defining modulus and log/exp tables. Elements are stored as
//! [`Gf`], a packed vector of base-`p` digits (one nibble per digit); the
//! user-facing [`FieldElement`] pairs a `Gf` with the spec it belongs to so
//! that mixing fields is caught.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported characteristic.
pub const MAX_PRIME: u32 = 13;
/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a supported prime (2 <= p <= 13)")]
    UnsupportedPrime(u32),
    #[error("extension degree {0} is outside 1..=4")]
    UnsupportedDegree(usize),
    #[error("modulus must be monic of degree {0}")]
    BadModulus(usize),
    #[error("modulus {0} is reducible over F_{1}")]
    Reducible(String, u32),
    #[error("field mismatch: {0} vs {1}")]
    Mismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field specification: {0}")]
    Syntax(String),
}

/// Packed field element: digit `k` (coefficient of `g^k`) lives in bits `4k..4k+4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gf(pub(crate) u16);

impl Gf {
    pub const ZERO: Gf = Gf(0);
    pub const ONE: Gf = Gf(1);

    #[inline]
    fn digit(self, k: usize) -> u16 {
        (self.0 >> (4 * k)) & 0xf
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Inner {
    p: u32,
    n: usize,
    /// Ascending coefficients, length `n + 1`, last entry 1.
    modulus: Vec<u32>,
    q: u32,
    exp: Vec<Gf>,
    /// Indexed by the packed value; `u32::MAX` marks zero / unused slots.
    log: Vec<u32>,
}

/// Shared description of `F_{p^n}`.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

// ---- dense polynomial helpers over F_p (ascending coefficient vectors) ----

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2)
    let mut r = 1u32;
    for _ in 0..p - 2 {
        r = r * a % p;
    }
    r
}

/// Remainder of `a` modulo `b` over F_p (`b` nonzero).
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (k, &bk) in b.iter().enumerate() {
            let idx = dr - db + k;
            r[idx] = (r[idx] + p - c * bk % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let n = modulus.len() - 1;
    for d in 1..=n / 2 {
        // every monic polynomial of degree d
        for code in 0..p.pow(d as u32) {
            let mut cand: Vec<u32> = (0..d).map(|k| code / p.pow(k as u32) % p).collect();
            cand.push(1);
            if poly_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn modulus_text(modulus: &[u32]) -> String {
    let mut parts = Vec::new();
    for (k, &c) in modulus.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        };
        parts.push(match (c, mono.is_empty()) {
            (_, true) => c.to_string(),
            (1, false) => mono,
            (_, false) => format!("{c}*{mono}"),
        });
    }
    parts.join("+")
}

fn pack(digits: &[u32]) -> Gf {
    Gf(digits
        .iter()
        .enumerate()
        .fold(0u16, |acc, (k, &d)| acc | ((d as u16) << (4 * k))))
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, &[0, 1])
    }

    /// `F_{p^n}` with the first irreducible monic modulus in the order of
    /// the base-`p` code of its lower coefficients.
    pub fn extension(p: u32, n: usize) -> Result<Self, FieldError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(FieldError::UnsupportedPrime(p));
        }
        if n == 0 || n > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(n));
        }
        if n == 1 {
            return Self::prime(p);
        }
        for code in 0..p.pow(n as u32) {
            let mut m: Vec<u32> = (0..n).map(|k| code / p.pow(k as u32) % p).collect();
            m.push(1);
            if is_irreducible(&m, p) {
                return Self::new(p, &m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Builds `F_p[g]/(modulus)`; `modulus` is given by ascending coefficients.
    pub fn new(p: u32, modulus: &[u32]) -> Result<Self, FieldError> {
        if !is_prime(p) || p > MAX_PRIME {
            return Err(FieldError::UnsupportedPrime(p));
        }
        let mut modulus: Vec<u32> = modulus.iter().map(|c| c % p).collect();
        trim(&mut modulus);
        let n = modulus.len().saturating_sub(1);
        if n == 0 || n > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(n));
        }
        if modulus[n] != 1 {
            return Err(FieldError::BadModulus(n));
        }
        if !is_irreducible(&modulus, p) {
            return Err(FieldError::Reducible(modulus_text(&modulus), p));
        }
        let q = p.pow(n as u32);
        let mut inner = Inner {
            p,
            n,
            modulus,
            q,
            exp: Vec::new(),
            log: vec![u32::MAX; 1 << (4 * n)],
        };
        let generator = (1..q)
            .map(|code| {
                let digits: Vec<u32> = (0..n).map(|k| code / p.pow(k as u32) % p).collect();
                pack(&digits)
            })
            .find(|&c| multiplicative_order(&inner, c) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        let mut acc = Gf::ONE;
        for k in 0..q - 1 {
            inner.exp.push(acc);
            inner.log[acc.0 as usize] = k;
            acc = slow_mul(&inner, acc, generator);
        }
        Ok(FieldSpec(Arc::new(inner)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    /// Extension degree `n`.
    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// Field size `p^n`.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Ascending coefficients of the defining modulus.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        self.wrap(Gf::ZERO)
    }

    pub fn one(&self) -> FieldElement {
        self.wrap(Gf::ONE)
    }

    /// The class of `g`; equals a prime-field constant when `n = 1`.
    pub fn generator(&self) -> FieldElement {
        if self.0.n == 1 {
            let root = (self.0.p - self.0.modulus[0]) % self.0.p;
            return self.wrap(self.raw_from_int(root as i64));
        }
        self.wrap(Gf(1 << 4))
    }

    pub fn from_int(&self, v: i64) -> FieldElement {
        self.wrap(self.raw_from_int(v))
    }

    /// Element from ascending digits; entries are reduced mod `p`, extra
    /// digits beyond `n` are reduced by the modulus.
    pub fn element(&self, digits: &[u32]) -> FieldElement {
        let p = self.0.p;
        let reduced = poly_rem(
            &digits.iter().map(|d| d % p).collect::<Vec<_>>(),
            &self.0.modulus,
            p,
        );
        self.wrap(pack(&reduced))
    }

    /// All `p^n` elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |code| self.wrap(self.wrap_index(code)))
    }

    /// The element whose base-`p` digits spell `code` (`code < p^n`);
    /// `0` and `1` map to zero and one.
    pub fn wrap_index(&self, code: u32) -> Gf {
        let (n, p) = (self.0.n, self.0.p);
        let digits: Vec<u32> = (0..n).map(|k| code / p.pow(k as u32) % p).collect();
        pack(&digits)
    }

    pub fn wrap(&self, raw: Gf) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            raw,
        }
    }

    // ---- raw arithmetic on packed digits ----

    pub(crate) fn raw_from_int(&self, v: i64) -> Gf {
        Gf(v.rem_euclid(self.0.p as i64) as u16)
    }

    #[inline]
    pub(crate) fn raw_add(&self, a: Gf, b: Gf) -> Gf {
        let p = self.0.p as u16;
        let mut out = 0u16;
        for k in 0..self.0.n {
            let mut s = a.digit(k) + b.digit(k);
            if s >= p {
                s -= p;
            }
            out |= s << (4 * k);
        }
        Gf(out)
    }

    #[inline]
    pub(crate) fn raw_neg(&self, a: Gf) -> Gf {
        let p = self.0.p as u16;
        let mut out = 0u16;
        for k in 0..self.0.n {
            let d = a.digit(k);
            if d != 0 {
                out |= (p - d) << (4 * k);
            }
        }
        Gf(out)
    }

    #[inline]
    pub(crate) fn raw_sub(&self, a: Gf, b: Gf) -> Gf {
        self.raw_add(a, self.raw_neg(b))
    }

    #[inline]
    pub(crate) fn raw_mul(&self, a: Gf, b: Gf) -> Gf {
        if a.is_zero() || b.is_zero() {
            return Gf::ZERO;
        }
        let inner = &*self.0;
        let la = inner.log[a.0 as usize];
        let lb = inner.log[b.0 as usize];
        inner.exp[((la + lb) % (inner.q - 1)) as usize]
    }

    pub(crate) fn raw_inv(&self, a: Gf) -> Option<Gf> {
        if a.is_zero() {
            return None;
        }
        let inner = &*self.0;
        let la = inner.log[a.0 as usize];
        Some(inner.exp[((inner.q - 1 - la) % (inner.q - 1)) as usize])
    }

    /// Square-and-multiply.
    pub(crate) fn raw_pow(&self, a: Gf, mut e: u64) -> Gf {
        let mut base = a;
        let mut acc = Gf::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(acc, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn raw_frobenius(&self, a: Gf) -> Gf {
        self.raw_pow(a, self.0.p as u64)
    }

    /// `a^{p^{n-1}}`, the unique p-th root since `a^{p^n} = a`.
    pub(crate) fn raw_inv_frobenius(&self, a: Gf) -> Gf {
        self.raw_pow(a, (self.0.p as u64).pow(self.0.n as u32 - 1))
    }

    /// Schoolbook multiplication modulo the defining polynomial. Used to
    /// build the tables and as an independent check of them.
    pub fn reference_mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.wrap(slow_mul(&self.0, a.raw, b.raw))
    }

    pub(crate) fn digits(&self, a: Gf) -> Vec<u32> {
        (0..self.0.n).map(|k| a.digit(k) as u32).collect()
    }

    /// Canonical text: ascending powers of `g`, bare integers for `F_p`.
    pub(crate) fn format_raw(&self, a: Gf) -> String {
        let parts: Vec<String> = self
            .digits(a)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let mono = match k {
                    0 => return c.to_string(),
                    1 => "g".to_string(),
                    _ => format!("g^{k}"),
                };
                if c == 1 {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

fn slow_mul(inner: &Inner, a: Gf, b: Gf) -> Gf {
    let p = inner.p;
    let n = inner.n;
    let mut prod = vec![0u32; 2 * n];
    for i in 0..n {
        for j in 0..n {
            prod[i + j] = (prod[i + j] + a.digit(i) as u32 * b.digit(j) as u32) % p;
        }
    }
    pack(&poly_rem(&prod, &inner.modulus, p))
}

fn multiplicative_order(inner: &Inner, a: Gf) -> u32 {
    let mut acc = a;
    let mut k = 1;
    while acc != Gf::ONE {
        acc = slow_mul(inner, acc, a);
        k += 1;
        if k > inner.q {
            return 0;
        }
    }
    k
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.n == 1 {
            write!(f, "p={}", self.0.p)
        } else {
            write!(
                f,
                "p={},n={},mod={}",
                self.0.p,
                self.0.n,
                modulus_text(&self.0.modulus)
            )
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    /// `p=<int>[,n=<int>,mod=<poly in g>]`. With `n > 1` and no `mod`, the
    /// default modulus of [`FieldSpec::extension`] is used.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = None;
        let mut n = None;
        let mut modulus = None;
        for part in s.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| FieldError::Syntax(format!("expected key=value, got '{part}'")))?;
            let value = value.trim();
            match key.trim() {
                "p" => {
                    p = Some(value.parse::<u32>().map_err(|_| {
                        FieldError::Syntax(format!("p must be an integer, got '{value}'"))
                    })?)
                }
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|_| {
                        FieldError::Syntax(format!("n must be an integer, got '{value}'"))
                    })?)
                }
                "mod" => modulus = Some(value.to_string()),
                other => return Err(FieldError::Syntax(format!("unknown key '{other}'"))),
            }
        }
        let p = p.ok_or_else(|| FieldError::Syntax("missing p".into()))?;
        if !is_prime(p) || p > MAX_PRIME {
            return Err(FieldError::UnsupportedPrime(p));
        }
        match modulus {
            None => FieldSpec::extension(p, n.unwrap_or(1)),
            Some(text) => {
                let coeffs = crate::expr::parse_integer_poly_in_g(&text, p)
                    .map_err(|e| FieldError::Syntax(e.to_string()))?;
                let spec = FieldSpec::new(p, &coeffs)?;
                match n {
                    Some(n) if n != spec.degree() => Err(FieldError::Syntax(format!(
                        "n={n} but the modulus has degree {}",
                        spec.degree()
                    ))),
                    _ => Ok(spec),
                }
            }
        }
    }
}

/// An element of `F_{p^n}` together with its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    spec: FieldSpec,
    raw: Gf,
}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn raw(&self) -> Gf {
        self.raw
    }

    /// Coordinates in the basis `1, g, ..., g^{n-1}`.
    pub fn coeffs(&self) -> Vec<u32> {
        self.spec.digits(self.raw)
    }

    pub fn is_zero(&self) -> bool {
        self.raw.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.raw == Gf::ONE
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::Mismatch(
                self.spec.to_string(),
                other.spec.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.spec.wrap(self.spec.raw_add(self.raw, other.raw)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.spec.wrap(self.spec.raw_sub(self.raw, other.raw)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.spec.wrap(self.spec.raw_mul(self.raw, other.raw)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        self.spec
            .raw_inv(self.raw)
            .map(|r| self.spec.wrap(r))
            .ok_or(FieldError::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.spec.wrap(self.spec.raw_pow(self.raw, e))
    }

    /// `a^p`.
    pub fn frobenius(&self) -> Self {
        self.spec.wrap(self.spec.raw_frobenius(self.raw))
    }

    /// The unique `b` with `b^p = a`.
    pub fn inv_frobenius(&self) -> Self {
        self.spec.wrap(self.spec.raw_inv_frobenius(self.raw))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec.format_raw(self.raw))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.spec)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for &FieldElement {
            type Output = FieldElement;
            /// Panics when the operands live in different fields.
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.spec.wrap(self.spec.raw_neg(self.raw))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
