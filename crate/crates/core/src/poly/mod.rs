//! Sparse polynomials: univariate ([`UniPoly`]) and in the two commuting
//! variables `X`, `Y` of the centre ([`BiPoly`]).

mod bi;
mod uni;

pub use bi::{jacobian, BiPoly};
pub use uni::UniPoly;

use thiserror::Error;

use crate::ring::CoeffRing;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("coefficient rings differ")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("exponent {exponent} is not divisible by {step}: polynomial is not in the required subring")]
    NotInSubring { step: u32, exponent: u32 },
}

/// `binomial(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod(mut n: u64, mut k: u64, p: u32) -> u64 {
    let p = p as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        // small binomial with digits < p
        let mut c = 1u64;
        for m in 0..ki {
            c = c * (ni - m) / (m + 1);
        }
        acc = acc * (c % p) % p;
        n /= p;
        k /= p;
    }
    acc
}

/// `n (n-1) ... (n-k+1) mod p`, reduced after every factor.
pub fn falling_factorial_mod(n: u64, k: u64, p: u32) -> u64 {
    if k > n {
        return 0;
    }
    let p = p as u64;
    let mut acc = 1 % p;
    for m in 0..k {
        acc = acc * ((n - m) % p) % p;
        if acc == 0 {
            break;
        }
    }
    acc
}

/// `c * mono` in canonical form; `mono` is empty for the constant monomial.
pub(crate) fn format_term<R: CoeffRing>(ring: &R, c: &R::Elem, mono: &str) -> String {
    if mono.is_empty() {
        return ring.format(c);
    }
    if ring.is_one(c) {
        return mono.to_string();
    }
    if ring.is_atomic(c) {
        format!("{}*{mono}", ring.format(c))
    } else {
        format!("({})*{mono}", ring.format(c))
    }
}

pub(crate) fn power_text(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

pub(crate) fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial_exact(n: u64, k: u64) -> u128 {
        (0..k).fold(1u128, |acc, m| acc * (n - m) as u128 / (m + 1) as u128)
    }

    #[test]
    fn lucas_matches_exact_binomials() {
        for p in [2, 3, 5, 7] {
            for n in 0..40u64 {
                for k in 0..=n {
                    assert_eq!(
                        binomial_mod(n, k, p) as u128,
                        binomial_exact(n, k) % p as u128,
                        "C({n},{k}) mod {p}"
                    );
                }
            }
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial_mod(4, 4, 5), 4);
        assert_eq!(falling_factorial_mod(7, 3, 7), 0);
        assert_eq!(falling_factorial_mod(2, 3, 3), 0);
        assert_eq!(falling_factorial_mod(9, 0, 2), 1);
    }
}
