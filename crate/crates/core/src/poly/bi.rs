use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{falling_factorial_mod, format_term, join_terms, power_text, PolyError, UniPoly};
use crate::ring::CoeffRing;

/// Sparse polynomial in the commuting variables `X`, `Y`.
#[derive(Clone, PartialEq)]
pub struct BiPoly<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<(u32, u32), R::Elem>,
}

impl<R: CoeffRing> BiPoly<R> {
    pub fn zero(ring: &R) -> Self {
        BiPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: &R, c: R::Elem) -> Self {
        Self::monomial(ring, c, 0, 0)
    }

    pub fn monomial(ring: &R, c: R::Elem, i: u32, j: u32) -> Self {
        let mut out = Self::zero(ring);
        out.add_term((i, j), &c);
        out
    }

    pub fn x(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 1, 0)
    }

    pub fn y(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 0, 1)
    }

    pub fn from_terms(ring: &R, terms: impl IntoIterator<Item = ((u32, u32), R::Elem)>) -> Self {
        let mut out = Self::zero(ring);
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    /// `f(X)` for a univariate `f`.
    pub fn from_uni_in_x(f: &UniPoly<R>) -> Self {
        Self::from_terms(f.ring(), f.terms().map(|(e, c)| ((e, 0), c.clone())))
    }

    pub(crate) fn add_term(&mut self, e: (u32, u32), c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = self.ring.add(old, c);
                if self.ring.is_zero(&s) {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Nonzero terms in ascending lexicographic order of `(i, j)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = ((u32, u32), &R::Elem)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> R::Elem {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<R::Elem> {
        match self.total_degree() {
            None => Some(self.ring.zero()),
            Some(0) => Some(self.coeff(0, 0)),
            _ => None,
        }
    }

    /// Homogeneous component of top total degree.
    pub fn top_form(&self) -> Self {
        let d = self.total_degree();
        Self::from_terms(
            &self.ring,
            self.terms
                .iter()
                .filter(|(&(i, j), _)| Some(i + j) == d)
                .map(|(&e, c)| (e, c.clone())),
        )
    }

    fn same_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term((i1 + i2, j1 + j2), &self.ring.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(&e, a)| (e, self.ring.mul(a, c))),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at `X = image_x`, `Y = image_y`: the ring homomorphism
    /// determined by the two images.
    pub fn substitute(&self, image_x: &Self, image_y: &Self) -> Result<Self, PolyError> {
        self.same_ring(image_x)?;
        self.same_ring(image_y)?;
        let max_i = self.terms.keys().map(|e| e.0).max().unwrap_or(0);
        let max_j = self.terms.keys().map(|e| e.1).max().unwrap_or(0);
        let xs = powers(image_x, max_i);
        let ys = powers(image_y, max_j);
        // group by the X-exponent: sum_i X'^i * (sum_j c_ij Y'^j)
        let mut out = Self::zero(&self.ring);
        let mut i_prev = None;
        let mut inner = Self::zero(&self.ring);
        for (&(i, j), c) in &self.terms {
            if let Some(prev) = i_prev.filter(|&prev| prev != i) {
                out = &out + &(&xs[prev as usize] * &inner);
                inner = Self::zero(&self.ring);
            }
            i_prev = Some(i);
            inner = &inner + &ys[j as usize].scale(c);
        }
        if let Some(i) = i_prev {
            out = &out + &(&xs[i as usize] * &inner);
        }
        Ok(out)
    }

    /// `k`-th partial derivative in `X`.
    pub fn partial_x(&self, k: u32) -> Self {
        let p = self.ring.characteristic();
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(e, _)| e.0 >= k).map(|(&(i, j), c)| {
                let f = falling_factorial_mod(i as u64, k as u64, p);
                ((i - k, j), self.ring.mul_int(c, f))
            }),
        )
    }

    /// `k`-th partial derivative in `Y`.
    pub fn partial_y(&self, k: u32) -> Self {
        let p = self.ring.characteristic();
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(e, _)| e.1 >= k).map(|(&(i, j), c)| {
                let f = falling_factorial_mod(j as u64, k as u64, p);
                ((i, j - k), self.ring.mul_int(c, f))
            }),
        )
    }

    /// Canonical text, descending lexicographic order of `(i, j)`.
    pub fn to_text(&self) -> String {
        join_terms(
            self.terms
                .iter()
                .rev()
                .map(|(&(i, j), c)| {
                    let mono = [power_text("X", i), power_text("Y", j)]
                        .into_iter()
                        .filter(|s| !s.is_empty())
                        .collect::<Vec<_>>()
                        .join("*");
                    format_term(&self.ring, c, &mono)
                })
                .collect(),
        )
    }
}

fn powers<R: CoeffRing>(base: &BiPoly<R>, max: u32) -> Vec<BiPoly<R>> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BiPoly::one(&base.ring));
    for k in 1..=max as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

/// `dP/dX * dQ/dY - dP/dY * dQ/dX`.
pub fn jacobian<R: CoeffRing>(p: &BiPoly<R>, q: &BiPoly<R>) -> Result<BiPoly<R>, PolyError> {
    p.same_ring(q)?;
    Ok(&(&p.partial_x(1) * &q.partial_y(1)) - &(&p.partial_y(1) * &q.partial_x(1)))
}

impl<R: CoeffRing> fmt::Display for BiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<R: CoeffRing> fmt::Debug for BiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

macro_rules! bi_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<R: CoeffRing> $trait for &BiPoly<R> {
            type Output = BiPoly<R>;
            /// Panics when the coefficient rings differ.
            fn $method(self, rhs: &BiPoly<R>) -> BiPoly<R> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<R: CoeffRing> $trait for BiPoly<R> {
            type Output = BiPoly<R>;
            fn $method(self, rhs: BiPoly<R>) -> BiPoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

bi_binop!(Add, add, try_add);
bi_binop!(Sub, sub, try_sub);
bi_binop!(Mul, mul, try_mul);

impl<R: CoeffRing> Neg for &BiPoly<R> {
    type Output = BiPoly<R>;
    fn neg(self) -> BiPoly<R> {
        BiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, self.ring.neg(c)))
                .collect(),
        }
    }
}

impl<R: CoeffRing> Neg for BiPoly<R> {
    type Output = BiPoly<R>;
    fn neg(self) -> BiPoly<R> {
        -&self
    }
}
