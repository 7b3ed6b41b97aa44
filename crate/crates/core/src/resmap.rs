//! Restriction of automorphisms of `A_1` (and affine automorphisms of `A_n`)
//! to the centre.
//!
//! The primary path always raises the images to the p-th power in the Weyl
//! algebra and reads the result in centre coordinates; the closed forms for
//! affine maps are kept alongside as independent computations.

use std::fmt;

use thiserror::Error;

use crate::autgrp::{AutError, AutWord, Generator, Target, WeylAut, ZAut};
use crate::gfq::{FieldSpec, Gf};
use crate::poly::BiPoly;
use crate::ring::{CoeffRing, PerfectField};
use crate::theta::{ThetaContext, ThetaError};
use crate::weyl::{Mono, WeylElement, WeylError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResError {
    #[error("p-th power is not central: {0}")]
    NotCentral(WeylError),
    #[error("restriction has Jacobian {0}, expected 1")]
    JacobianNotOne(String),
    #[error("restriction changed the degree from {from} to {to}")]
    DegreeChanged { from: u32, to: u32 },
    #[error("not in the Jacobian-one subgroup: Jacobian is {0}")]
    NotInGamma(String),
    #[error("affine matrix must have determinant 1, got {0}")]
    DeterminantNotOne(String),
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("unsupported shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}

/// Outcome of [`res`], with the checks it performed.
#[derive(Clone, Debug, PartialEq)]
pub struct ResResult {
    pub image: ZAut,
    pub jacobian_value: Gf,
    pub degree_in: u32,
    pub degree_out: u32,
}

fn central_image(e: &WeylElement<FieldSpec>) -> Result<BiPoly<FieldSpec>, ResError> {
    let p = e.ring().characteristic();
    let power = e.pow(p);
    if !power.is_central() {
        return Err(ResError::NotCentral(
            power.to_center().err().unwrap_or(WeylError::NotCentral(power.to_text())),
        ));
    }
    power.to_center().map_err(ResError::NotCentral)
}

/// Restriction to the centre: `X ↦ σ(x)^p`, `Y ↦ σ(d)^p`, computed by
/// brute-force powers. Checks that the Jacobian is 1 and the degree is kept.
pub fn res(a: &WeylAut) -> Result<ResResult, ResError> {
    let image = ZAut::new(central_image(a.image_x())?, central_image(a.image_d())?)?;
    let k = a.field();
    let jac = image.jacobian();
    let jacobian_value = match jac.as_constant() {
        Some(c) if c == Gf::ONE => c,
        _ => return Err(ResError::JacobianNotOne(jac.to_text())),
    };
    let (degree_in, degree_out) = (a.degree(), image.degree());
    if degree_in != degree_out {
        return Err(ResError::DegreeChanged {
            from: degree_in,
            to: degree_out,
        });
    }
    debug_assert_eq!(image.field(), k);
    Ok(ResResult {
        image,
        jacobian_value,
        degree_in,
        degree_out,
    })
}

/// Closed form for the restriction of the affine map
/// `(x, d) ↦ (m0 x + m1 d + v0, m2 x + m3 d + v1)` with `det = 1`.
///
/// For `p > 2` every entry is raised to the p-th power; for `p = 2` the
/// translation picks up the products `m0 m1` and `m2 m3`.
pub fn res_affine(field: &FieldSpec, m: [Gf; 4], v: [Gf; 2]) -> Result<ZAut, ResError> {
    let k = field;
    let det = k.sub(&k.mul(&m[0], &m[3]), &k.mul(&m[1], &m[2]));
    if det != Gf::ONE {
        return Err(ResError::DeterminantNotOne(k.format(&det)));
    }
    let fr = |a: &Gf| k.frobenius(a);
    let mp = m.map(|a| fr(&a));
    let mut vp = v.map(|a| fr(&a));
    if k.p() == 2 {
        vp[0] = k.add(&vp[0], &k.mul(&m[0], &m[1]));
        vp[1] = k.add(&vp[1], &k.mul(&m[2], &m[3]));
    }
    Ok(ZAut::generator(k, &Generator::Affine { m: mp, v: vp }))
}

/// Preimage under [`res`] of an element of the Jacobian-one subgroup.
///
/// The element is decomposed as `t[ν] phi[f_1] s … phi[f_n]` and mapped to
/// `t[ν^{1/p}] phi[θ⁻¹(f_1)] s … phi[θ⁻¹(f_n)]`; the word is returned too.
pub fn res_inverse(g: &ZAut) -> Result<(WeylAut, AutWord), ResError> {
    let k = g.field();
    if !g.in_gamma() {
        return Err(ResError::NotInGamma(g.jacobian().to_text()));
    }
    let ctx = ThetaContext::new(k.clone());
    let word = g.decompose()?;
    let mut gens = Vec::with_capacity(word.len());
    for letter in word.gens() {
        gens.push(match letter {
            Generator::S => Generator::S,
            Generator::T(nu) => Generator::T(k.inv_frobenius(nu)),
            Generator::Phi(f) => Generator::Phi(ctx.theta_inverse(&f.expand_exponents(k.p()))?),
            other => {
                return Err(ResError::Shape(format!(
                    "unexpected letter {} in a decomposition",
                    AutWord::new(Target::Z, k, vec![other.clone()])?
                )))
            }
        });
    }
    let lifted = AutWord::new(Target::A1, k, gens)?;
    Ok((WeylAut::from_word(&lifted)?, lifted))
}

/// An affine map of `A_n` (`n` = 1 or 2) on the generators ordered
/// `x_1, …, x_n, d_1, …, d_n`: generator `i` goes to
/// `Σ_j m[i][j] y_j + v[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap {
    field: FieldSpec,
    n: usize,
    m: Vec<Gf>,
    v: Vec<Gf>,
}

impl AffineMap {
    /// Checks shape and that the linear part preserves the commutation
    /// relations, i.e. `M J Mᵀ = J` for `J = [[0, I], [-I, 0]]`.
    pub fn symplectic(field: &FieldSpec, n: usize, m: Vec<Gf>, v: Vec<Gf>) -> Result<Self, ResError> {
        if !(1..=2).contains(&n) || m.len() != 4 * n * n || v.len() != 2 * n {
            return Err(ResError::Shape(format!(
                "need n in 1..=2, a {0}x{0} matrix and {0} translations",
                2 * n
            )));
        }
        let a = AffineMap {
            field: field.clone(),
            n,
            m,
            v,
        };
        if !a.is_symplectic() {
            return Err(ResError::NotSymplectic);
        }
        Ok(a)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Gf {
        self.m[i * 2 * self.n + j]
    }

    pub fn matrix(&self) -> &[Gf] {
        &self.m
    }

    pub fn translation(&self) -> &[Gf] {
        &self.v
    }

    fn form(&self, i: usize, j: usize) -> Gf {
        let (n, k) = (self.n, &self.field);
        if j == i + n {
            Gf::ONE
        } else if i == j + n {
            k.neg(&Gf::ONE)
        } else {
            Gf::ZERO
        }
    }

    fn is_symplectic(&self) -> bool {
        let (size, k) = (2 * self.n, &self.field);
        for a in 0..size {
            for b in 0..size {
                let mut acc = Gf::ZERO;
                for j in 0..size {
                    for l in 0..size {
                        let w = self.form(j, l);
                        if !w.is_zero() {
                            let t = k.mul(&k.mul(&self.entry(a, j), &w), &self.entry(b, l));
                            acc = k.add(&acc, &t);
                        }
                    }
                }
                if acc != self.form(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Images of the generators in `A_n`.
    pub fn weyl_images(&self) -> Vec<WeylElement<FieldSpec>> {
        let (n, k) = (self.n, &self.field);
        let gens: Vec<WeylElement<FieldSpec>> = (1..=n)
            .map(|i| WeylElement::x(k, n, i))
            .chain((1..=n).map(|i| WeylElement::d(k, n, i)))
            .collect();
        (0..2 * n)
            .map(|i| {
                let mut acc = WeylElement::constant(k, n, self.v[i]);
                for (j, g) in gens.iter().enumerate() {
                    acc = acc + g.scale(&self.entry(i, j));
                }
                acc
            })
            .collect()
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.weyl_images().iter().map(|e| e.to_text()).collect();
        write!(f, "({})", images.join(" ; "))
    }
}

/// Closed form for the restriction of a symplectic affine map: entrywise
/// p-th powers, plus for `p = 2` the correction `Σ_j m_ij m_{i,n+j}` in the
/// translation.
pub fn res_n_affine(a: &AffineMap) -> AffineMap {
    let (n, k) = (a.n, &a.field);
    let m: Vec<Gf> = a.m.iter().map(|c| k.frobenius(c)).collect();
    let mut v: Vec<Gf> = a.v.iter().map(|c| k.frobenius(c)).collect();
    if k.p() == 2 {
        for (i, vi) in v.iter_mut().enumerate() {
            for j in 0..n {
                *vi = k.add(vi, &k.mul(&a.entry(i, j), &a.entry(i, n + j)));
            }
        }
    }
    AffineMap {
        field: k.clone(),
        n,
        m,
        v,
    }
}

/// Restriction of a symplectic affine map by raising each image to the
/// p-th power in `A_n`.
pub fn res_n_brute_force(a: &AffineMap) -> Result<AffineMap, ResError> {
    let (n, k) = (a.n, &a.field);
    let p = k.p();
    let mut m = vec![Gf::ZERO; 4 * n * n];
    let mut v = vec![Gf::ZERO; 2 * n];
    for (i, img) in a.weyl_images().iter().enumerate() {
        let coords = img.pow(p).center_coordinates().map_err(ResError::NotCentral)?;
        for (mono, c) in coords {
            if mono == Mono::default() {
                v[i] = c;
                continue;
            }
            let slot = (0..n)
                .find(|&j| mono == unit(j, false))
                .or_else(|| (0..n).find(|&j| mono == unit(j, true)).map(|j| n + j))
                .ok_or_else(|| ResError::Shape("restriction is not affine".into()))?;
            m[i * 2 * n + slot] = c;
        }
    }
    Ok(AffineMap {
        field: k.clone(),
        n,
        m,
        v,
    })
}

fn unit(j: usize, derivation: bool) -> Mono {
    let mut mono = Mono::default();
    if derivation {
        mono.d[j] = 1;
    } else {
        mono.x[j] = 1;
    }
    mono
}
