//! The bijection `θ(f) = f^p + f^{(p-1)}` from `K[x]` onto `K[x^p]`, its
//! closed-form inverse, and the projections `π_i` and the operator `Δ`
//! the inverse is built from.
//!
//! Polynomials "in `x^p`" or "in `x^{p^2}`" are ordinary [`UniPoly`] values
//! whose exponents are multiples of `p` or `p^2`; the support is checked
//! on entry.

use thiserror::Error;

use crate::poly::{PolyError, UniPoly};
use crate::ring::{CoeffRing, PerfectField};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThetaError {
    #[error("projection index {index} out of range for p = {p}")]
    IndexOutOfRange { index: u32, p: u32 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `θ(f) = f^p + d^{p-1}f/dx^{p-1}`. Defined over any coefficient ring.
pub fn theta<R: CoeffRing>(f: &UniPoly<R>) -> UniPoly<R> {
    let p = f.ring().characteristic();
    f.frobenius() + f.derivative(p - 1)
}

/// `θ` together with its inverse over a perfect field `K`.
#[derive(Clone, Debug)]
pub struct ThetaContext<K: PerfectField> {
    field: K,
    p: u32,
}

impl<K: PerfectField> ThetaContext<K> {
    pub fn new(field: K) -> Self {
        let p = field.characteristic();
        ThetaContext { field, p }
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    fn check_ring(&self, f: &UniPoly<K>) -> Result<(), ThetaError> {
        if f.ring() != &self.field {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(())
    }

    pub fn theta(&self, f: &UniPoly<K>) -> Result<UniPoly<K>, ThetaError> {
        self.check_ring(f)?;
        Ok(theta(f))
    }

    /// Component `a_i ∈ K[x^{p^2}]` of `g = Σ_i a_i x^{pi}`.
    pub fn pi(&self, i: u32, g: &UniPoly<K>) -> Result<UniPoly<K>, ThetaError> {
        let p = self.p;
        if i >= p {
            return Err(ThetaError::IndexOutOfRange { index: i, p });
        }
        self.check_ring(g)?;
        g.check_support(p)?;
        Ok(UniPoly::from_terms(
            &self.field,
            g.terms()
                .filter(|&(e, _)| (e / p) % p == i)
                .map(|(e, c)| (e - p * i, c.clone())),
        ))
    }

    /// `Δ(Σ a_i x^{p^2 i}) = Σ a_{p-1+pi}^{1/p} x^{p^2 i}`.
    pub fn delta(&self, g: &UniPoly<K>) -> Result<UniPoly<K>, ThetaError> {
        let p = self.p;
        let pp = p * p;
        self.check_ring(g)?;
        g.check_support(pp)?;
        Ok(UniPoly::from_terms(
            &self.field,
            g.terms()
                .map(|(e, c)| (e / pp, c))
                .filter(|&(k, _)| k % p == p - 1)
                .map(|(k, c)| ((k - (p - 1)) / p * pp, self.field.inv_frobenius(c))),
        ))
    }

    /// `Σ_{j≥0} Δ^j(g)`, summed until an iterate vanishes.
    pub fn delta_geometric(&self, g: &UniPoly<K>) -> Result<UniPoly<K>, ThetaError> {
        let mut sum = UniPoly::zero(&self.field);
        let mut term = g.clone();
        let mut nonzero = 0u32;
        while !term.is_zero() {
            nonzero += 1;
            let next = self.delta(&term)?;
            sum = sum + term;
            term = next;
        }
        // Δ sends index k (exponent p^2 k) to (k+1)/p - 1, so at most
        // 1 + log_p(k+1) iterates are nonzero.
        if let Some(deg) = g.degree() {
            let k = deg / (self.p * self.p);
            assert!(nonzero <= 1 + (k + 1).ilog(self.p), "Δ is not nilpotent fast enough");
        }
        Ok(sum)
    }

    /// The unique `f` with `θ(f) = g`, from the closed formulas for the
    /// components `λ_i` of `f = Σ λ_i(x^p) x^i`.
    pub fn theta_inverse(&self, g: &UniPoly<K>) -> Result<UniPoly<K>, ThetaError> {
        let p = self.p;
        self.check_ring(g)?;
        g.check_support(p)?;
        let mu: Vec<UniPoly<K>> = (0..p).map(|i| self.pi(i, g)).collect::<Result<_, _>>()?;
        let top = &mu[p as usize - 1];
        let series = self.delta_geometric(top)?;
        let root = series.inv_frobenius()?;

        let mut f = UniPoly::zero(&self.field);
        let mut last = (&series - top) * UniPoly::monomial(&self.field, self.field.one(), p * (p - 1));
        for i in 0..p - 1 {
            let part = self.pi(i, &root)?;
            let lambda = mu[i as usize].inv_frobenius()? + part.inv_frobenius()?;
            f = f + lambda * UniPoly::monomial(&self.field, self.field.one(), i);
            last = last + part * UniPoly::monomial(&self.field, self.field.one(), p * i);
        }
        Ok(f + last * UniPoly::monomial(&self.field, self.field.one(), p - 1))
    }

    /// Solves `θ(f) = g` from the top degree down: the leading term of `f`
    /// is the p-th root of the leading term of what remains.
    pub fn theta_inverse_oracle(&self, g: &UniPoly<K>) -> Result<UniPoly<K>, ThetaError> {
        self.check_ring(g)?;
        g.check_support(self.p)?;
        let mut rest = g.clone();
        let mut f = UniPoly::zero(&self.field);
        while !rest.is_zero() {
            let (e, c) = rest.leading_term()?;
            let m = UniPoly::monomial(&self.field, self.field.inv_frobenius(&c), e / self.p);
            rest = rest - theta(&m);
            f = f + m;
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfq::FieldSpec;
    use crate::ring::PolyRing;

    fn field(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn poly(k: &FieldSpec, terms: &[(u32, i64)]) -> UniPoly<FieldSpec> {
        UniPoly::from_terms(k, terms.iter().map(|&(e, c)| (e, k.from_int(c).raw())))
    }

    #[test]
    fn theta_examples() {
        let k2 = field(2);
        assert_eq!(theta(&UniPoly::var(&k2)), poly(&k2, &[(2, 1), (0, 1)]));
        let k3 = field(3);
        assert_eq!(theta(&UniPoly::var(&k3)), poly(&k3, &[(3, 1)]));
        assert_eq!(theta(&UniPoly::one(&k3)), UniPoly::one(&k3));
    }

    #[test]
    fn theta_over_polynomial_ring() {
        let r = PolyRing::new(field(2));
        let f = UniPoly::constant(&r, r.t()) * UniPoly::var(&r);
        // (t x)^2 + t
        assert_eq!(theta(&f).to_text("x"), "t^2*x^2+t");
    }

    #[test]
    fn projections() {
        let k2 = field(2);
        let ctx = ThetaContext::new(k2.clone());
        let g = poly(&k2, &[(4, 1), (2, 1)]);
        assert_eq!(ctx.pi(0, &g).unwrap(), poly(&k2, &[(4, 1)]));
        assert_eq!(ctx.pi(1, &g).unwrap(), UniPoly::one(&k2));

        let k3 = field(3);
        let ctx = ThetaContext::new(k3.clone());
        let g = poly(&k3, &[(9, 1), (3, 2)]);
        assert_eq!(ctx.pi(0, &g).unwrap(), poly(&k3, &[(9, 1)]));
        assert_eq!(ctx.pi(1, &g).unwrap(), poly(&k3, &[(0, 2)]));
        assert!(ctx.pi(2, &g).unwrap().is_zero());
        for i in 0..3 {
            assert!(ctx.pi(i, &UniPoly::zero(&k3)).unwrap().is_zero());
        }
        assert_eq!(
            ctx.pi(3, &g),
            Err(ThetaError::IndexOutOfRange { index: 3, p: 3 })
        );
        assert!(matches!(
            ctx.pi(0, &UniPoly::var(&k3)),
            Err(ThetaError::Poly(PolyError::NotInSubring { .. }))
        ));
    }

    #[test]
    fn delta_examples() {
        let k2 = field(2);
        let ctx = ThetaContext::new(k2.clone());
        assert_eq!(ctx.delta(&poly(&k2, &[(4, 1)])).unwrap(), UniPoly::one(&k2));
        assert_eq!(ctx.delta(&poly(&k2, &[(12, 1)])).unwrap(), poly(&k2, &[(4, 1)]));
        assert!(ctx.delta(&UniPoly::one(&k2)).unwrap().is_zero());
        assert!(ctx.delta(&poly(&k2, &[(2, 1)])).is_err());

        assert_eq!(
            ctx.delta_geometric(&poly(&k2, &[(4, 1)])).unwrap(),
            poly(&k2, &[(4, 1), (0, 1)])
        );
        assert_eq!(ctx.delta_geometric(&UniPoly::one(&k2)).unwrap(), UniPoly::one(&k2));
        assert!(ctx.delta_geometric(&UniPoly::zero(&k2)).unwrap().is_zero());
    }

    #[test]
    fn inverse_examples() {
        let k2 = field(2);
        let ctx = ThetaContext::new(k2.clone());
        let cases2 = [
            (poly(&k2, &[(2, 1)]), poly(&k2, &[(1, 1), (0, 1)])),
            (poly(&k2, &[(4, 1)]), poly(&k2, &[(2, 1)])),
            (UniPoly::zero(&k2), UniPoly::zero(&k2)),
        ];
        for (g, f) in &cases2 {
            assert_eq!(&ctx.theta_inverse(g).unwrap(), f);
            assert_eq!(&ctx.theta_inverse_oracle(g).unwrap(), f);
        }
        let k3 = field(3);
        let ctx = ThetaContext::new(k3.clone());
        let g = poly(&k3, &[(3, 1)]);
        assert_eq!(ctx.theta_inverse(&g).unwrap(), UniPoly::var(&k3));
        assert_eq!(ctx.theta_inverse_oracle(&g).unwrap(), UniPoly::var(&k3));

        // constants: θ(c) = c^p
        let k9 = FieldSpec::extension(3, 2).unwrap();
        let ctx = ThetaContext::new(k9.clone());
        let c = k9.generator();
        let g = UniPoly::constant(&k9, c.pow(3).raw());
        assert_eq!(ctx.theta_inverse(&g).unwrap(), UniPoly::constant(&k9, c.raw()));

        assert!(ctx.theta_inverse(&UniPoly::var(&k9)).is_err());
    }

    #[test]
    fn inverse_matches_oracle_on_all_small_inputs() {
        for p in [2u32, 3] {
            let k = field(p);
            let ctx = ThetaContext::new(k.clone());
            // every g in K[x^p] of degree <= p * (p^2 + 1) with coefficients in {0, 1}
            let slots = p * p + 2;
            for mask in 0u32..(1 << slots) {
                let g = UniPoly::from_terms(
                    &k,
                    (0..slots).filter(|b| mask >> b & 1 == 1).map(|b| (b * p, k.one().raw())),
                );
                let f = ctx.theta_inverse(&g).unwrap();
                assert_eq!(f, ctx.theta_inverse_oracle(&g).unwrap());
                assert_eq!(theta(&f), g);
            }
        }
    }
}
