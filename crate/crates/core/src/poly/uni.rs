use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{binomial_mod, falling_factorial_mod, format_term, join_terms, power_text, PolyError};
use crate::ring::{CoeffRing, PerfectField};

/// Sparse univariate polynomial; zero coefficients are never stored.
///
/// The same type serves `K[x]`, `K[x^p]` and `K[x^{p^2}]`: subring
/// membership is a support condition checked where it matters.
#[derive(Clone, PartialEq)]
pub struct UniPoly<R: CoeffRing> {
    ring: R,
    terms: BTreeMap<u32, R::Elem>,
}

impl<R: CoeffRing> UniPoly<R> {
    pub fn zero(ring: &R) -> Self {
        UniPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: &R, c: R::Elem) -> Self {
        Self::monomial(ring, c, 0)
    }

    pub fn monomial(ring: &R, c: R::Elem, exponent: u32) -> Self {
        let mut out = Self::zero(ring);
        if !ring.is_zero(&c) {
            out.terms.insert(exponent, c);
        }
        out
    }

    /// The variable itself.
    pub fn var(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 1)
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms(ring: &R, terms: impl IntoIterator<Item = (u32, R::Elem)>) -> Self {
        let mut out = Self::zero(ring);
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, e: u32, c: &R::Elem) {
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

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &R::Elem)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: u32) -> R::Elem {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }

    /// Highest-exponent monomial as `(degree, coefficient)`.
    pub fn leading_term(&self) -> Result<(u32, R::Elem), PolyError> {
        self.terms
            .iter()
            .next_back()
            .map(|(&e, c)| (e, c.clone()))
            .ok_or(PolyError::ZeroPolynomial)
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
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, &self.ring.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.map_coeffs(|a| self.ring.mul(a, c))
    }

    /// Repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every coefficient, dropping the ones that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    /// Maps `x^e` to `x^{k e}`.
    pub fn expand_exponents(&self, k: u32) -> Self {
        UniPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Maps `x^{k e}` to `x^e`; fails unless every exponent is divisible by `k`.
    pub fn contract_exponents(&self, k: u32) -> Result<Self, PolyError> {
        self.check_support(k)?;
        Ok(UniPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(&e, c)| (e / k, c.clone())).collect(),
        })
    }

    /// Succeeds iff every exponent is a multiple of `step`.
    pub fn check_support(&self, step: u32) -> Result<(), PolyError> {
        match self.terms.keys().find(|&&e| e % step != 0) {
            Some(&exponent) => Err(PolyError::NotInSubring { step, exponent }),
            None => Ok(()),
        }
    }

    /// `k`-th formal derivative.
    pub fn derivative(&self, k: u32) -> Self {
        let p = self.ring.characteristic();
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(&e, _)| e >= k).map(|(&e, c)| {
                let f = falling_factorial_mod(e as u64, k as u64, p);
                (e - k, self.ring.mul_int(c, f))
            }),
        )
    }

    /// Divided power `d^k / k!`: `x^m` goes to `binomial(m, k) x^{m-k}`.
    pub fn divided_power(&self, k: u32) -> Self {
        let p = self.ring.characteristic();
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(&e, _)| e >= k).map(|(&e, c)| {
                let b = binomial_mod(e as u64, k as u64, p);
                (e - k, self.ring.mul_int(c, b))
            }),
        )
    }

    /// Splits `f = sum_i a_i(x^p) x^i` for `i = 0..p`; each `a_i` is returned
    /// as a polynomial in a variable standing for `x^p`.
    pub fn p_decompose(&self) -> Vec<Self> {
        let p = self.ring.characteristic();
        let mut parts = vec![Self::zero(&self.ring); p as usize];
        for (&e, c) in &self.terms {
            parts[(e % p) as usize].terms.insert(e / p, c.clone());
        }
        parts
    }

    /// Inverse of [`UniPoly::p_decompose`].
    pub fn p_recompose(ring: &R, parts: &[Self]) -> Self {
        let p = ring.characteristic();
        let mut out = Self::zero(ring);
        for (i, part) in parts.iter().enumerate() {
            for (&e, c) in &part.terms {
                out.add_term(e * p + i as u32, c);
            }
        }
        out
    }

    /// `F(f) = f^p`, computed coefficientwise.
    pub fn frobenius(&self) -> Self {
        let p = self.ring.characteristic();
        UniPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * p, self.ring.frobenius(c)))
                .collect(),
        }
    }

    /// Canonical text in the variable `var`, descending exponents.
    pub fn to_text(&self, var: &str) -> String {
        join_terms(
            self.terms
                .iter()
                .rev()
                .map(|(&e, c)| format_term(&self.ring, c, &power_text(var, e)))
                .collect(),
        )
    }
}

impl<K: PerfectField> UniPoly<K> {
    /// `F^{-1}`: requires every exponent divisible by `p`; takes p-th roots
    /// of the coefficients and divides exponents by `p`.
    pub fn inv_frobenius(&self) -> Result<Self, PolyError> {
        let p = self.ring.characteristic();
        self.check_support(p)?;
        Ok(UniPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e / p, self.ring.inv_frobenius(c)))
                .collect(),
        })
    }
}

impl<R: CoeffRing> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl<R: CoeffRing> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

macro_rules! uni_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<R: CoeffRing> $trait for &UniPoly<R> {
            type Output = UniPoly<R>;
            /// Panics when the coefficient rings differ.
            fn $method(self, rhs: &UniPoly<R>) -> UniPoly<R> {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<R: CoeffRing> $trait for UniPoly<R> {
            type Output = UniPoly<R>;
            fn $method(self, rhs: UniPoly<R>) -> UniPoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

uni_binop!(Add, add, try_add);
uni_binop!(Sub, sub, try_sub);
uni_binop!(Mul, mul, try_mul);

impl<R: CoeffRing> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        UniPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e, self.ring.neg(c)))
                .collect(),
        }
    }
}

impl<R: CoeffRing> Neg for UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::{FieldSpec, Gf};
    use crate::ring::PolyRing;

    fn fp(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn poly(spec: &FieldSpec, coeffs: &[(u32, i64)]) -> UniPoly<FieldSpec> {
        UniPoly::from_terms(spec, coeffs.iter().map(|&(e, c)| (e, spec.raw_from_int(c))))
    }

    #[test]
    fn freshmans_dream_over_f2() {
        let f2 = fp(2);
        let f = poly(&f2, &[(1, 1), (0, 1)]);
        assert_eq!(f.pow(2).to_string(), "x^2+1");
    }

    #[test]
    fn derivative_examples() {
        let f3 = fp(3);
        assert_eq!(poly(&f3, &[(2, 1)]).derivative(2).to_string(), "2");
        let f2 = fp(2);
        assert_eq!(poly(&f2, &[(1, 1)]).derivative(1).to_string(), "1");
        let f5 = fp(5);
        assert_eq!(poly(&f5, &[(4, 1)]).derivative(4).to_string(), "4");
    }

    #[test]
    fn divided_power_examples() {
        let f2 = fp(2);
        assert_eq!(poly(&f2, &[(2, 1)]).divided_power(2).to_string(), "1");
        assert_eq!(poly(&f2, &[(3, 1)]).divided_power(2).to_string(), "x");
        let f3 = fp(3);
        assert_eq!(poly(&f3, &[(3, 1)]).divided_power(3).to_string(), "1");
    }

    #[test]
    fn p_decompose_examples() {
        let f2 = fp(2);
        let parts = poly(&f2, &[(3, 1), (2, 1)]).p_decompose();
        assert_eq!(parts[0].to_text("u"), "u");
        assert_eq!(parts[1].to_text("u"), "u");
        let f3 = fp(3);
        let parts = UniPoly::one(&f3).p_decompose();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].to_string(), "1");
        assert!(parts[1].is_zero() && parts[2].is_zero());
        let parts = poly(&f2, &[(4, 1), (1, 1)]).p_decompose();
        assert_eq!(parts[0].to_text("u"), "u^2");
        assert_eq!(parts[1].to_text("u"), "1");
    }

    #[test]
    fn leading_terms() {
        let f5 = fp(5);
        assert_eq!(
            poly(&f5, &[(2, 1), (1, 1)]).leading_term().unwrap(),
            (2, f5.raw_from_int(1))
        );
        assert_eq!(
            poly(&f5, &[(5, 3)]).leading_term().unwrap(),
            (5, f5.raw_from_int(3))
        );
        assert_eq!(
            UniPoly::zero(&f5).leading_term(),
            Err(PolyError::ZeroPolynomial)
        );
        // 5x^5 vanishes mod 5
        assert!(poly(&f5, &[(5, 5)]).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = UniPoly::var(&fp(3));
        let b = UniPoly::var(&fp(5));
        assert_eq!(a.try_add(&b), Err(PolyError::RingMismatch));
        assert_eq!(a.try_mul(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn support_checks() {
        let f3 = fp(3);
        let f = poly(&f3, &[(9, 1), (3, 2)]);
        assert_eq!(f.contract_exponents(3).unwrap().to_string(), "x^3+2*x");
        assert_eq!(
            f.contract_exponents(9),
            Err(PolyError::NotInSubring { step: 9, exponent: 3 })
        );
        assert!(poly(&f3, &[(1, 1)]).inv_frobenius().is_err());
    }

    #[test]
    fn printing_over_extension_and_ring_coefficients() {
        let f4 = FieldSpec::extension(2, 2).unwrap();
        let g = f4.generator().raw();
        let gp1 = f4.element(&[1, 1]).raw();
        let f = UniPoly::from_terms(&f4, [(2, g), (1, gp1), (0, Gf::ONE)]);
        assert_eq!(f.to_string(), "g*x^2+(1+g)*x+1");

        let rt = PolyRing::new(fp(3));
        let t = rt.t();
        let c = &t + &UniPoly::one(&fp(3));
        let f = UniPoly::from_terms(&rt, [(2, c), (0, t.clone()), (1, rt.one())]);
        assert_eq!(f.to_string(), "(t+1)*x^2+x+t");
    }
}
