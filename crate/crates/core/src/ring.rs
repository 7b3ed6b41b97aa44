//! Coefficient rings for the polynomial and Weyl-algebra types.
//!
//! Two instances exist: a finite field ([`FieldSpec`], elements [`Gf`]) and
//! the polynomial ring `R[t]` over any coefficient ring ([`PolyRing`]),
//! which supplies a reduced but non-perfect coefficient ring.

use std::fmt::Debug;

use crate::gfq::{FieldSpec, Gf};
use crate::poly::UniPoly;

/// A commutative ring of prime characteristic acting as coefficients.
///
/// Elements do not carry their ring; every operation goes through the
/// ring value, which polynomial types keep alongside their terms.
pub trait CoeffRing: Clone + PartialEq + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn characteristic(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn mul_int(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        self.mul(a, &self.from_int((k % self.characteristic() as u64) as i64))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a^p`, a ring endomorphism in characteristic `p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;

    /// Canonical text of an element.
    fn format(&self, a: &Self::Elem) -> String;

    /// Whether `format(a)` can be used as a factor without parentheses.
    fn is_atomic(&self, a: &Self::Elem) -> bool {
        !self.format(a).contains('+')
    }
}

/// A perfect field: inverses and p-th roots exist.
pub trait PerfectField: CoeffRing {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn inv_frobenius(&self, a: &Self::Elem) -> Self::Elem;
}

impl CoeffRing for FieldSpec {
    type Elem = Gf;

    fn characteristic(&self) -> u32 {
        self.p()
    }
    fn zero(&self) -> Gf {
        Gf::ZERO
    }
    fn one(&self) -> Gf {
        Gf::ONE
    }
    fn from_int(&self, v: i64) -> Gf {
        self.raw_from_int(v)
    }
    #[inline]
    fn is_zero(&self, a: &Gf) -> bool {
        a.is_zero()
    }
    #[inline]
    fn add(&self, a: &Gf, b: &Gf) -> Gf {
        self.raw_add(*a, *b)
    }
    #[inline]
    fn neg(&self, a: &Gf) -> Gf {
        self.raw_neg(*a)
    }
    #[inline]
    fn sub(&self, a: &Gf, b: &Gf) -> Gf {
        self.raw_sub(*a, *b)
    }
    #[inline]
    fn mul(&self, a: &Gf, b: &Gf) -> Gf {
        self.raw_mul(*a, *b)
    }
    fn frobenius(&self, a: &Gf) -> Gf {
        self.raw_frobenius(*a)
    }
    fn format(&self, a: &Gf) -> String {
        self.format_raw(*a)
    }
}

impl PerfectField for FieldSpec {
    fn inv(&self, a: &Gf) -> Option<Gf> {
        self.raw_inv(*a)
    }
    fn inv_frobenius(&self, a: &Gf) -> Gf {
        self.raw_inv_frobenius(*a)
    }
}

/// `R[t]`: polynomials in the ring variable `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<R: CoeffRing> {
    base: R,
}

impl<R: CoeffRing> PolyRing<R> {
    pub fn new(base: R) -> Self {
        PolyRing { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// The variable `t`.
    pub fn t(&self) -> UniPoly<R> {
        UniPoly::var(&self.base)
    }
}

impl<R: CoeffRing> CoeffRing for PolyRing<R> {
    type Elem = UniPoly<R>;

    fn characteristic(&self) -> u32 {
        self.base.characteristic()
    }
    fn zero(&self) -> UniPoly<R> {
        UniPoly::zero(&self.base)
    }
    fn one(&self) -> UniPoly<R> {
        UniPoly::one(&self.base)
    }
    fn from_int(&self, v: i64) -> UniPoly<R> {
        UniPoly::constant(&self.base, self.base.from_int(v))
    }
    fn is_zero(&self, a: &UniPoly<R>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a + b
    }
    fn neg(&self, a: &UniPoly<R>) -> UniPoly<R> {
        -a
    }
    fn sub(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a - b
    }
    fn mul(&self, a: &UniPoly<R>, b: &UniPoly<R>) -> UniPoly<R> {
        a * b
    }
    fn mul_int(&self, a: &UniPoly<R>, k: u64) -> UniPoly<R> {
        a.scale(&self.base.from_int((k % self.characteristic() as u64) as i64))
    }
    fn frobenius(&self, a: &UniPoly<R>) -> UniPoly<R> {
        a.pow(self.characteristic())
    }
    fn format(&self, a: &UniPoly<R>) -> String {
        a.to_text("t")
    }
}
