//! Seeded random inputs for the fuzz suites and property tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::autgrp::{AutWord, Generator, Target};
use crate::gfq::{FieldSpec, Gf};
use crate::poly::UniPoly;
use crate::resmap::AffineMap;
use crate::ring::{CoeffRing, PerfectField, PolyRing};
use crate::weyl::{Mono, WeylElement};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn element<G: Rng>(rng: &mut G, k: &FieldSpec) -> Gf {
    k.wrap_index(rng.gen_range(0..k.order()))
}

pub fn nonzero<G: Rng>(rng: &mut G, k: &FieldSpec) -> Gf {
    k.wrap_index(rng.gen_range(1..k.order()))
}

/// Dense random polynomial of degree at most `max_deg` over `k`.
pub fn poly<G: Rng>(rng: &mut G, k: &FieldSpec, max_deg: u32) -> UniPoly<FieldSpec> {
    let deg = rng.gen_range(0..=max_deg);
    UniPoly::from_terms(k, (0..=deg).map(|e| (e, element(rng, k))))
}

/// Random polynomial over `K[t]` with `x`-degree at most `max_deg` and
/// coefficients of `t`-degree at most `max_t_deg`.
pub fn poly_over_ring<G: Rng>(
    rng: &mut G,
    r: &PolyRing<FieldSpec>,
    max_deg: u32,
    max_t_deg: u32,
) -> UniPoly<PolyRing<FieldSpec>> {
    let deg = rng.gen_range(0..=max_deg);
    let terms: Vec<_> = (0..=deg).map(|e| (e, poly(rng, r.base(), max_t_deg))).collect();
    UniPoly::from_terms(r, terms)
}

/// Random element of `K[x^p]` of degree at most `max_deg`.
pub fn poly_in_xp<G: Rng>(rng: &mut G, k: &FieldSpec, max_deg: u32) -> UniPoly<FieldSpec> {
    poly(rng, k, max_deg / k.p()).expand_exponents(k.p())
}

/// Random polynomial in `x_1, x_2` (inside `A_2`) of total degree at most
/// `max_deg`.
pub fn poly_in_a2<G: Rng>(rng: &mut G, k: &FieldSpec, max_deg: u32) -> WeylElement<FieldSpec> {
    let deg = rng.gen_range(0..=max_deg);
    let mut terms = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            if rng.gen_bool(0.5) {
                terms.push((Mono { x: [a, b], d: [0, 0] }, element(rng, k)));
            }
        }
    }
    WeylElement::from_terms(k, 2, terms)
}

/// Random word of at most `max_len` letters drawn from `s`, `t[μ]`,
/// `phi[f]` with `deg f <= max_deg`, plus `gamma[μ]` when `with_gamma`.
pub fn word<G: Rng>(
    rng: &mut G,
    target: Target,
    k: &FieldSpec,
    max_len: usize,
    max_deg: u32,
    with_gamma: bool,
) -> AutWord {
    let len = rng.gen_range(0..=max_len);
    let kinds = if with_gamma { 4 } else { 3 };
    let gens = (0..len)
        .map(|_| match rng.gen_range(0..kinds) {
            0 => Generator::S,
            1 => Generator::T(nonzero(rng, k)),
            2 => Generator::Phi(poly(rng, k, max_deg)),
            _ => Generator::Gamma(nonzero(rng, k)),
        })
        .collect();
    AutWord::new(target, k, gens).expect("valid letters")
}

/// Random `2 x 2` matrix of determinant 1 (row-major) and translation.
pub fn sl2_affine<G: Rng>(rng: &mut G, k: &FieldSpec) -> ([Gf; 4], [Gf; 2]) {
    loop {
        let m = [element(rng, k), element(rng, k), element(rng, k), element(rng, k)];
        let det = k.sub(&k.mul(&m[0], &m[3]), &k.mul(&m[1], &m[2]));
        if let Some(inv) = k.inv(&det) {
            let m = [k.mul(&m[0], &inv), k.mul(&m[1], &inv), m[2], m[3]];
            return (m, [element(rng, k), element(rng, k)]);
        }
    }
}

/// Random symplectic affine map of `A_n` as a product of the block
/// generators `[[I, S], [0, I]]`, `[[I, 0], [S, I]]` (`S` symmetric) and
/// `[[M, 0], [0, M^{-T}]]`.
pub fn symplectic_affine<G: Rng>(rng: &mut G, k: &FieldSpec, n: usize) -> AffineMap {
    let size = 2 * n;
    let mut acc = identity(size);
    for _ in 0..rng.gen_range(1..=4) {
        let factor = match rng.gen_range(0..3) {
            0 | 1 => {
                let upper = rng.gen_bool(0.5);
                let mut f = identity(size);
                let mut s = vec![Gf::ZERO; n * n];
                for i in 0..n {
                    for j in i..n {
                        let c = element(rng, k);
                        s[i * n + j] = c;
                        s[j * n + i] = c;
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        if upper {
                            f[i * size + n + j] = s[i * n + j];
                        } else {
                            f[(n + i) * size + j] = s[i * n + j];
                        }
                    }
                }
                f
            }
            _ => {
                let (m, inv_t) = invertible_with_inverse_transpose(rng, k, n);
                let mut f = vec![Gf::ZERO; size * size];
                for i in 0..n {
                    for j in 0..n {
                        f[i * size + j] = m[i * n + j];
                        f[(n + i) * size + n + j] = inv_t[i * n + j];
                    }
                }
                f
            }
        };
        acc = mat_mul(k, size, &acc, &factor);
    }
    let v = (0..size).map(|_| element(rng, k)).collect();
    AffineMap::symplectic(k, n, acc, v).expect("product of symplectic blocks")
}

fn identity(size: usize) -> Vec<Gf> {
    let mut m = vec![Gf::ZERO; size * size];
    for i in 0..size {
        m[i * size + i] = Gf::ONE;
    }
    m
}

fn mat_mul(k: &FieldSpec, size: usize, a: &[Gf], b: &[Gf]) -> Vec<Gf> {
    let mut out = vec![Gf::ZERO; size * size];
    for i in 0..size {
        for j in 0..size {
            let mut acc = Gf::ZERO;
            for l in 0..size {
                acc = k.add(&acc, &k.mul(&a[i * size + l], &b[l * size + j]));
            }
            out[i * size + j] = acc;
        }
    }
    out
}

/// Random invertible `n x n` matrix (`n <= 2`) and its inverse transpose.
fn invertible_with_inverse_transpose<G: Rng>(rng: &mut G, k: &FieldSpec, n: usize) -> (Vec<Gf>, Vec<Gf>) {
    loop {
        let m: Vec<Gf> = (0..n * n).map(|_| element(rng, k)).collect();
        if n == 1 {
            if let Some(inv) = k.inv(&m[0]) {
                return (m, vec![inv]);
            }
            continue;
        }
        let det = k.sub(&k.mul(&m[0], &m[3]), &k.mul(&m[1], &m[2]));
        if let Some(di) = k.inv(&det) {
            // inverse = di [[m3, -m1], [-m2, m0]]; its transpose:
            let inv_t = vec![
                k.mul(&m[3], &di),
                k.neg(&k.mul(&m[2], &di)),
                k.neg(&k.mul(&m[1], &di)),
                k.mul(&m[0], &di),
            ];
            return (m, inv_t);
        }
    }
}
