//! Normal-form arithmetic in the Weyl algebras `A_1` and `A_2` of prime
//! characteristic, brute-force powers and the centre.
//!
//! Monomials are stored in normal order, all `x`'s to the left of all
//! `d`'s (`d` stands for the derivation generator). Products use the
//! commutation formula
//! `d^j x^k = sum_m binomial(j, m) k(k-1)...(k-m+1) x^{k-m} d^{j-m}`,
//! whose terms with `m >= p` vanish because they contain `p` consecutive
//! integer factors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::poly::{binomial_mod, falling_factorial_mod, format_term, join_terms, power_text};
use crate::poly::{BiPoly, UniPoly};
use crate::ring::CoeffRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("Weyl algebras of different rank: A_{0} vs A_{1}")]
    ArityMismatch(usize, usize),
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("only A_1 and A_2 are supported (got n = {0})")]
    UnsupportedRank(usize),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
    #[error("element is not central: term {0}")]
    NotCentral(String),
    #[error("element involves derivations; expected a polynomial in the x generators")]
    NotXOnly,
    #[error("expected {expected} generator images, got {got}")]
    BadImages { expected: usize, got: usize },
}

/// Exponents of `x_1^{x[0]} x_2^{x[1]} d_1^{d[0]} d_2^{d[1]}`.
///
/// The derived order compares `d` exponents first; printing walks it in
/// descending order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub d: [u32; 2],
    pub x: [u32; 2],
}

impl Mono {
    pub fn total_degree(&self) -> u32 {
        self.d.iter().chain(&self.x).sum()
    }
}

/// An element of `A_n` (`n` = 1 or 2) in normal form.
#[derive(Clone, PartialEq)]
pub struct WeylElement<R: CoeffRing> {
    ring: R,
    n: usize,
    terms: BTreeMap<Mono, R::Elem>,
}

impl<R: CoeffRing> WeylElement<R> {
    pub fn zero(ring: &R, n: usize) -> Self {
        assert!(n == 1 || n == 2, "{}", WeylError::UnsupportedRank(n));
        WeylElement {
            ring: ring.clone(),
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &R, n: usize) -> Self {
        Self::constant(ring, n, ring.one())
    }

    pub fn constant(ring: &R, n: usize, c: R::Elem) -> Self {
        Self::monomial(ring, n, Mono::default(), c)
    }

    pub fn monomial(ring: &R, n: usize, mono: Mono, c: R::Elem) -> Self {
        let mut out = Self::zero(ring, n);
        out.add_term(mono, &c);
        out
    }

    /// The generator `x_i` (1-based).
    pub fn x(ring: &R, n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "{}", WeylError::BadIndex(i));
        let mut m = Mono::default();
        m.x[i - 1] = 1;
        Self::monomial(ring, n, m, ring.one())
    }

    /// The generator `d_i` (1-based).
    pub fn d(ring: &R, n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "{}", WeylError::BadIndex(i));
        let mut m = Mono::default();
        m.d[i - 1] = 1;
        Self::monomial(ring, n, m, ring.one())
    }

    /// `f(x_i)` for a univariate `f`.
    pub fn from_uni(f: &UniPoly<R>, n: usize, i: usize) -> Self {
        let mut out = Self::zero(f.ring(), n);
        for (e, c) in f.terms() {
            let mut m = Mono::default();
            m.x[i - 1] = e;
            out.add_term(m, c);
        }
        out
    }

    /// Embeds a central polynomial: `X -> x^p`, `Y -> d^p` (rank 1).
    pub fn from_center(z: &BiPoly<R>) -> Self {
        let p = z.ring().characteristic();
        let mut out = Self::zero(z.ring(), 1);
        for ((i, j), c) in z.terms() {
            out.add_term(
                Mono {
                    x: [i * p, 0],
                    d: [j * p, 0],
                },
                c,
            );
        }
        out
    }

    pub fn from_terms(ring: &R, n: usize, terms: impl IntoIterator<Item = (Mono, R::Elem)>) -> Self {
        let mut out = Self::zero(ring, n);
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    fn add_term(&mut self, m: Mono, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.ring.add(old, c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &R::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Mono) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Mono::total_degree).max()
    }

    /// The constant value if the element lies in the coefficient ring.
    pub fn as_constant(&self) -> Option<R::Elem> {
        match self.degree() {
            None => Some(self.ring.zero()),
            Some(0) => Some(self.coeff(&Mono::default())),
            _ => None,
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), WeylError> {
        if self.n != other.n {
            return Err(WeylError::ArityMismatch(self.n, other.n));
        }
        if self.ring != other.ring {
            return Err(WeylError::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, WeylError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, WeylError> {
        self.try_add(&-other)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Self::from_terms(
            &self.ring,
            self.n,
            self.terms.iter().map(|(m, a)| (*m, self.ring.mul(a, c))),
        )
    }

    /// Normal-form product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, WeylError> {
        self.compatible(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring, self.n));
        }
        let ring = &self.ring;
        let p = ring.characteristic() as u64;
        let mut bound = [0usize; 4];
        for slot in 0..2 {
            let max = |e: &Self, f: &dyn Fn(&Mono) -> u32| e.terms.keys().map(f).max().unwrap_or(0);
            bound[slot] = (max(self, &|m| m.x[slot]) + max(other, &|m| m.x[slot])) as usize + 1;
            bound[2 + slot] = (max(self, &|m| m.d[slot]) + max(other, &|m| m.d[slot])) as usize + 1;
        }
        let size: usize = bound.iter().product();
        let mut acc = Accumulator::new(ring, bound, size);

        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let ab = ring.mul(ca, cb);
                if ring.is_zero(&ab) {
                    continue;
                }
                // d_i^{ma.d[i]} x_i^{mb.x[i]} expansions per slot: (m, integer coefficient)
                let exp0 = expansion(ma.d[0] as u64, mb.x[0] as u64, p);
                let exp1 = expansion(ma.d[1] as u64, mb.x[1] as u64, p);
                for &(m0, k0) in exp0.iter() {
                    for &(m1, k1) in exp1.iter() {
                        let m0 = m0 as u32;
                        let m1 = m1 as u32;
                        let mono = Mono {
                            x: [ma.x[0] + mb.x[0] - m0, ma.x[1] + mb.x[1] - m1],
                            d: [ma.d[0] - m0 + mb.d[0], ma.d[1] - m1 + mb.d[1]],
                        };
                        let k = k0 * k1 % p;
                        let c = if k == 1 { ab.clone() } else { ring.mul_int(&ab, k) };
                        acc.add(mono, &c);
                    }
                }
            }
        }
        Ok(WeylElement {
            ring: ring.clone(),
            n: self.n,
            terms: acc.finish(),
        })
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring, self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Result<Self, WeylError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn generators(&self) -> Vec<Self> {
        let mut out: Vec<Self> = (1..=self.n).map(|i| Self::x(&self.ring, self.n, i)).collect();
        out.extend((1..=self.n).map(|i| Self::d(&self.ring, self.n, i)));
        out
    }

    /// Centrality via commutators with every generator.
    pub fn is_central_by_commutators(&self) -> bool {
        self.generators()
            .iter()
            .all(|g| self.commutator(g).map(|c| c.is_zero()).unwrap_or(false))
    }

    /// Centrality via support: every exponent divisible by `p`.
    pub fn is_central_by_support(&self) -> bool {
        let p = self.ring.characteristic();
        self.terms
            .keys()
            .all(|m| m.x.iter().chain(&m.d).all(|e| e % p == 0))
    }

    /// Runs both criteria; they must agree.
    pub fn is_central(&self) -> bool {
        let by_support = self.is_central_by_support();
        let by_commutators = self.is_central_by_commutators();
        assert_eq!(
            by_support, by_commutators,
            "centrality criteria disagree on {self}"
        );
        by_support
    }

    fn first_noncentral(&self) -> Option<String> {
        let p = self.ring.characteristic();
        self.terms
            .iter()
            .find(|(m, _)| m.x.iter().chain(&m.d).any(|e| e % p != 0))
            .map(|(m, c)| format_term(&self.ring, c, &self.mono_text(m)))
    }

    /// Coordinates in `Z = K[X, Y]`, `X = x^p`, `Y = d^p` (rank 1).
    pub fn to_center(&self) -> Result<BiPoly<R>, WeylError> {
        if self.n != 1 {
            return Err(WeylError::UnsupportedRank(self.n));
        }
        if let Some(t) = self.first_noncentral() {
            return Err(WeylError::NotCentral(t));
        }
        let p = self.ring.characteristic();
        Ok(BiPoly::from_terms(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| ((m.x[0] / p, m.d[0] / p), c.clone())),
        ))
    }

    /// Central element as a polynomial in `X_1, .., X_n, Y_1, .., Y_n`
    /// (`X_i = x_i^p`, `Y_i = d_i^p`), keyed by the divided exponents.
    pub fn center_coordinates(&self) -> Result<Vec<(Mono, R::Elem)>, WeylError> {
        if let Some(t) = self.first_noncentral() {
            return Err(WeylError::NotCentral(t));
        }
        let p = self.ring.characteristic();
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    Mono {
                        x: [m.x[0] / p, m.x[1] / p],
                        d: [m.d[0] / p, m.d[1] / p],
                    },
                    c.clone(),
                )
            })
            .collect())
    }

    /// Applies the algebra endomorphism sending `x_i -> images[i-1]` and
    /// `d_i -> images[n+i-1]`.
    pub fn substitute(&self, images: &[Self]) -> Result<Self, WeylError> {
        if images.len() != 2 * self.n {
            return Err(WeylError::BadImages {
                expected: 2 * self.n,
                got: images.len(),
            });
        }
        for img in images {
            self.compatible(img)?;
        }
        let n = self.n;
        let mut max = [0u32; 4];
        for m in self.terms.keys() {
            for i in 0..n {
                max[i] = max[i].max(m.x[i]);
                max[n + i] = max[n + i].max(m.d[i]);
            }
        }
        let pows: Vec<Vec<Self>> = (0..2 * n).map(|k| powers(&images[k], max[k])).collect();
        // group terms by x-part: sum_I X^I * (sum_J c_IJ D^J)
        let mut groups: BTreeMap<[u32; 2], Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut dpart = pows[n][m.d[0] as usize].clone();
            if n == 2 {
                dpart = &dpart * &pows[3][m.d[1] as usize];
            }
            let entry = groups
                .entry(m.x)
                .or_insert_with(|| Self::zero(&self.ring, n));
            *entry = &*entry + &dpart.scale(c);
        }
        let mut out = Self::zero(&self.ring, n);
        for (x, inner) in groups {
            let mut xpart = pows[0][x[0] as usize].clone();
            if n == 2 {
                xpart = &xpart * &pows[1][x[1] as usize];
            }
            out = &out + &(&xpart * &inner);
        }
        Ok(out)
    }

    /// `k`-th partial derivative in `x_i` of an element without derivations.
    pub fn partial_x(&self, i: usize, k: u32) -> Result<Self, WeylError> {
        if i == 0 || i > self.n {
            return Err(WeylError::BadIndex(i));
        }
        if self.terms.keys().any(|m| m.d != [0, 0]) {
            return Err(WeylError::NotXOnly);
        }
        let p = self.ring.characteristic();
        Ok(Self::from_terms(
            &self.ring,
            self.n,
            self.terms
                .iter()
                .filter(|(m, _)| m.x[i - 1] >= k)
                .map(|(m, c)| {
                    let f = falling_factorial_mod(m.x[i - 1] as u64, k as u64, p);
                    let mut m2 = *m;
                    m2.x[i - 1] -= k;
                    (m2, self.ring.mul_int(c, f))
                }),
        ))
    }

    fn mono_text(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        if self.n == 1 {
            parts.push(power_text("x", m.x[0]));
            parts.push(power_text("d", m.d[0]));
        } else {
            parts.push(power_text("x1", m.x[0]));
            parts.push(power_text("x2", m.x[1]));
            parts.push(power_text("d1", m.d[0]));
            parts.push(power_text("d2", m.d[1]));
        }
        parts.retain(|s| !s.is_empty());
        parts.join("*")
    }

    /// Canonical text: normal-ordered monomials, `d`-exponents compared first,
    /// descending.
    pub fn to_text(&self) -> String {
        join_terms(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| format_term(&self.ring, c, &self.mono_text(m)))
                .collect(),
        )
    }
}

/// Nonzero terms of `d^j x^k = sum_m C(j,m) k!/(k-m)! x^{k-m} d^{j-m}` mod p.
fn expansion(j: u64, k: u64, p: u64) -> Vec<(u64, u64)> {
    let top = j.min(k).min(p - 1);
    (0..=top)
        .filter_map(|m| {
            let c = binomial_mod(j, m, p as u32) * falling_factorial_mod(k, m, p as u32) % p;
            (c != 0).then_some((m, c))
        })
        .collect()
}

fn powers<R: CoeffRing>(base: &WeylElement<R>, max: u32) -> Vec<WeylElement<R>> {
    let mut out = vec![WeylElement::one(&base.ring, base.n)];
    for k in 1..=max as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

const DENSE_LIMIT: usize = 1 << 22;

/// Collects product terms, densely when the exponent box is small enough.
enum Accumulator<'a, R: CoeffRing> {
    Dense {
        ring: &'a R,
        bound: [usize; 4],
        cells: Vec<Option<R::Elem>>,
    },
    Sparse {
        ring: &'a R,
        map: BTreeMap<Mono, R::Elem>,
    },
}

impl<'a, R: CoeffRing> Accumulator<'a, R> {
    fn new(ring: &'a R, bound: [usize; 4], size: usize) -> Self {
        if size <= DENSE_LIMIT {
            Accumulator::Dense {
                ring,
                bound,
                cells: vec![None; size],
            }
        } else {
            Accumulator::Sparse {
                ring,
                map: BTreeMap::new(),
            }
        }
    }

    #[inline]
    fn add(&mut self, m: Mono, c: &R::Elem) {
        match self {
            Accumulator::Dense { ring, bound, cells } => {
                let idx = ((m.x[0] as usize * bound[1] + m.x[1] as usize) * bound[2]
                    + m.d[0] as usize)
                    * bound[3]
                    + m.d[1] as usize;
                match &mut cells[idx] {
                    Some(old) => *old = ring.add(old, c),
                    slot => *slot = Some(c.clone()),
                }
            }
            Accumulator::Sparse { ring, map } => match map.get_mut(&m) {
                Some(old) => *old = ring.add(old, c),
                None => {
                    map.insert(m, c.clone());
                }
            },
        }
    }

    fn finish(self) -> BTreeMap<Mono, R::Elem> {
        match self {
            Accumulator::Dense { ring, bound, cells } => {
                let mut out = BTreeMap::new();
                for (idx, cell) in cells.into_iter().enumerate() {
                    let Some(c) = cell else { continue };
                    if ring.is_zero(&c) {
                        continue;
                    }
                    let d1 = idx % bound[3];
                    let rest = idx / bound[3];
                    let d0 = rest % bound[2];
                    let rest = rest / bound[2];
                    let x1 = rest % bound[1];
                    let x0 = rest / bound[1];
                    out.insert(
                        Mono {
                            x: [x0 as u32, x1 as u32],
                            d: [d0 as u32, d1 as u32],
                        },
                        c,
                    );
                }
                out
            }
            Accumulator::Sparse { ring, mut map } => {
                map.retain(|_, c| !ring.is_zero(c));
                map
            }
        }
    }
}

impl<R: CoeffRing> fmt::Display for WeylElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<R: CoeffRing> fmt::Debug for WeylElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement(A_{}: {self})", self.n)
    }
}

macro_rules! weyl_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<R: CoeffRing> $trait for &WeylElement<R> {
            type Output = WeylElement<R>;
            /// Panics on rank or ring mismatch.
            fn $method(self, rhs: &WeylElement<R>) -> WeylElement<R> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<R: CoeffRing> $trait for WeylElement<R> {
            type Output = WeylElement<R>;
            fn $method(self, rhs: WeylElement<R>) -> WeylElement<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

weyl_binop!(Add, add, try_add);
weyl_binop!(Sub, sub, try_sub);
weyl_binop!(Mul, mul, try_mul);

impl<R: CoeffRing> Neg for &WeylElement<R> {
    type Output = WeylElement<R>;
    fn neg(self) -> WeylElement<R> {
        WeylElement {
            ring: self.ring.clone(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, self.ring.neg(c)))
                .collect(),
        }
    }
}

impl<R: CoeffRing> Neg for WeylElement<R> {
    type Output = WeylElement<R>;
    fn neg(self) -> WeylElement<R> {
        -&self
    }
}

/// Both sides of `(d + f)^p = d^p + f^{(p-1)} + f^p`, plus the variant
/// `d^p - a_{p-1}(x^p) + f^p` with `a_{p-1}` the last component of the
/// decomposition `f = sum_i a_i(x^p) x^i`.
#[derive(Clone, Debug)]
pub struct PowerIdentityCheck<R: CoeffRing> {
    /// `(d + f)^p` by repeated multiplication.
    pub brute_force: WeylElement<R>,
    /// `d^p + f^{(p-1)} + f^p`.
    pub formula: WeylElement<R>,
    /// `d^p - a_{p-1}(x^p) + f^p`.
    pub remark_form: WeylElement<R>,
    /// `f^{(p-1)} = -a_{p-1}(x^p)` as polynomials.
    pub derivative_matches_component: bool,
}

impl<R: CoeffRing> PowerIdentityCheck<R> {
    pub fn holds(&self) -> bool {
        self.brute_force == self.formula
            && self.brute_force == self.remark_form
            && self.derivative_matches_component
    }
}

/// Brute-force check of the p-th power identity in `A_1` for `f` in `R[x]`.
pub fn check_power_identity<R: CoeffRing>(f: &UniPoly<R>) -> PowerIdentityCheck<R> {
    let ring = f.ring();
    let p = ring.characteristic();
    let d = WeylElement::d(ring, 1, 1);
    let fx = WeylElement::from_uni(f, 1, 1);
    let brute_force = (&d + &fx).pow(p);

    let derivative = f.derivative(p - 1);
    let f_pow = f.pow(p);
    let d_pow = d.pow(p);
    let formula = &(&d_pow + &WeylElement::from_uni(&derivative, 1, 1))
        + &WeylElement::from_uni(&f_pow, 1, 1);

    let last = f.p_decompose().pop().expect("p >= 2 components");
    let last_in_x = last.expand_exponents(p);
    let remark_form = &(&d_pow - &WeylElement::from_uni(&last_in_x, 1, 1))
        + &WeylElement::from_uni(&f_pow, 1, 1);

    PowerIdentityCheck {
        brute_force,
        formula,
        remark_form,
        derivative_matches_component: derivative == -&last_in_x,
    }
}

/// Both sides of `(d_i + f)^p = d_i^p + d^{p-1} f / d x_i^{p-1} + f^p` in `A_2`.
#[derive(Clone, Debug)]
pub struct PartialPowerCheck<R: CoeffRing> {
    pub brute_force: WeylElement<R>,
    pub formula: WeylElement<R>,
}

impl<R: CoeffRing> PartialPowerCheck<R> {
    pub fn holds(&self) -> bool {
        self.brute_force == self.formula
    }
}

/// `f` must be a polynomial in `x_1, x_2` only, `i` in `{1, 2}`.
pub fn check_partial_power_identity<R: CoeffRing>(
    f: &WeylElement<R>,
    i: usize,
) -> Result<PartialPowerCheck<R>, WeylError> {
    if f.n != 2 {
        return Err(WeylError::UnsupportedRank(f.n));
    }
    let ring = f.ring();
    let p = ring.characteristic();
    let derivative = f.partial_x(i, p - 1)?;
    let di = WeylElement::d(ring, 2, i);
    let brute_force = (&di + f).pow(p);
    let formula = &(&di.pow(p) + &derivative) + &f.pow(p);
    Ok(PartialPowerCheck {
        brute_force,
        formula,
    })
}
