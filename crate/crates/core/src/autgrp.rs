//! Automorphisms of the centre `Z = K[X, Y]` and of the Weyl algebra `A_1`,
//! as generator words and as image pairs.
//!
//! Composition follows `(στ)(v) = σ(τ(v))`: a word `g_1 g_2 … g_k` acts by
//! applying `g_k` first. The generators are
//!
//! | letter       | `X ↦`        | `Y ↦`         |
//! |--------------|--------------|---------------|
//! | `s`          | `Y`          | `-X`          |
//! | `t[μ]`       | `μX`         | `μ⁻¹Y`        |
//! | `gamma[μ]`   | `μX`         | `Y`           |
//! | `phi[f]`     | `X`          | `Y + f(X)`    |
//! | `aff[a,b;c,d;e,f]` | `aX+bY+e` | `cX+dY+f` |
//!
//! and the same with `x`, `d` on `A_1`, where `gamma` is not available and
//! affine letters need determinant 1.

use std::fmt;

use thiserror::Error;

use crate::expr::{self, AutSyntax, CoeffInterp, GenSyntax, ParseError, UniInterp};
use crate::gfq::{FieldSpec, Gf};
use crate::poly::{jacobian, BiPoly, UniPoly};
use crate::ring::{CoeffRing, PerfectField};
use crate::weyl::WeylElement;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("scalar payload must be nonzero")]
    ZeroScalar,
    #[error("affine matrix is singular")]
    SingularMatrix,
    #[error("affine automorphisms of A_1 need determinant 1, got {0}")]
    DeterminantNotOne(String),
    #[error("gamma is not an automorphism of A_1")]
    GammaOnWeyl,
    #[error("fields differ")]
    FieldMismatch,
    #[error("expected an automorphism of {expected}, got one of {got}")]
    TargetMismatch { expected: Target, got: Target },
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("malformed automorphism: {0}")]
    Malformed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// The algebra an automorphism acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    A1,
    Z,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::A1 => "A_1",
            Target::Z => "Z",
        })
    }
}

impl Target {
    /// Variable used for `phi` payloads.
    pub fn payload_var(self) -> &'static str {
        match self {
            Target::A1 => "x",
            Target::Z => "X",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    S,
    T(Gf),
    Gamma(Gf),
    Phi(UniPoly<FieldSpec>),
    /// `(X, Y) ↦ (m0 X + m1 Y + v0, m2 X + m3 Y + v1)`.
    Affine { m: [Gf; 4], v: [Gf; 2] },
}

impl Generator {
    fn is_identity(&self) -> bool {
        match self {
            Generator::S => false,
            Generator::T(mu) | Generator::Gamma(mu) => *mu == Gf::ONE,
            Generator::Phi(f) => f.is_zero(),
            Generator::Affine { m, v } => {
                *m == [Gf::ONE, Gf::ZERO, Gf::ZERO, Gf::ONE] && *v == [Gf::ZERO; 2]
            }
        }
    }

    /// Linear part and translation, `None` for `phi`.
    fn affine_parts(&self, k: &FieldSpec) -> Option<([Gf; 4], [Gf; 2])> {
        let (o, z) = (Gf::ONE, Gf::ZERO);
        match self {
            Generator::S => Some(([z, o, k.neg(&o), z], [z, z])),
            Generator::T(mu) => Some(([*mu, z, z, k.inv(mu)?], [z, z])),
            Generator::Gamma(mu) => Some(([*mu, z, z, o], [z, z])),
            Generator::Affine { m, v } => Some((*m, *v)),
            Generator::Phi(_) => None,
        }
    }

    fn inverse(&self, k: &FieldSpec) -> Vec<Generator> {
        match self {
            Generator::S => vec![Generator::T(k.neg(&Gf::ONE)), Generator::S],
            Generator::T(mu) => vec![Generator::T(k.inv(mu).expect("nonzero"))],
            Generator::Gamma(mu) => vec![Generator::Gamma(k.inv(mu).expect("nonzero"))],
            Generator::Phi(f) => vec![Generator::Phi(-f)],
            Generator::Affine { m, v } => {
                let det = k.sub(&k.mul(&m[0], &m[3]), &k.mul(&m[1], &m[2]));
                let di = k.inv(&det).expect("invertible");
                let inv = [
                    k.mul(&m[3], &di),
                    k.neg(&k.mul(&m[1], &di)),
                    k.neg(&k.mul(&m[2], &di)),
                    k.mul(&m[0], &di),
                ];
                let w = [
                    k.neg(&k.add(&k.mul(&inv[0], &v[0]), &k.mul(&inv[1], &v[1]))),
                    k.neg(&k.add(&k.mul(&inv[2], &v[0]), &k.mul(&inv[3], &v[1]))),
                ];
                vec![Generator::Affine { m: inv, v: w }]
            }
        }
    }

    fn validate(&self, k: &FieldSpec, target: Target) -> Result<(), AutError> {
        match self {
            Generator::S => Ok(()),
            Generator::T(mu) if mu.is_zero() => Err(AutError::ZeroScalar),
            Generator::T(_) => Ok(()),
            Generator::Gamma(_) if target == Target::A1 => Err(AutError::GammaOnWeyl),
            Generator::Gamma(mu) if mu.is_zero() => Err(AutError::ZeroScalar),
            Generator::Gamma(_) => Ok(()),
            Generator::Phi(f) if f.ring() != k => Err(AutError::FieldMismatch),
            Generator::Phi(_) => Ok(()),
            Generator::Affine { m, .. } => {
                let det = k.sub(&k.mul(&m[0], &m[3]), &k.mul(&m[1], &m[2]));
                if det.is_zero() {
                    Err(AutError::SingularMatrix)
                } else if target == Target::A1 && det != Gf::ONE {
                    Err(AutError::DeterminantNotOne(k.format(&det)))
                } else {
                    Ok(())
                }
            }
        }
    }

    fn to_text(&self, k: &FieldSpec, target: Target) -> String {
        match self {
            Generator::S => "s".into(),
            Generator::T(mu) => format!("t[{}]", k.format(mu)),
            Generator::Gamma(mu) => format!("gamma[{}]", k.format(mu)),
            Generator::Phi(f) => format!("phi[{}]", f.to_text(target.payload_var())),
            Generator::Affine { m, v } => {
                let e: Vec<String> = m.iter().chain(v).map(|c| k.format(c)).collect();
                format!("aff[{},{};{},{};{},{}]", e[0], e[1], e[2], e[3], e[4], e[5])
            }
        }
    }
}

/// A word in the generators; several words can name the same automorphism.
#[derive(Clone, Debug, PartialEq)]
pub struct AutWord {
    target: Target,
    field: FieldSpec,
    gens: Vec<Generator>,
}

impl AutWord {
    pub fn new(target: Target, field: &FieldSpec, gens: Vec<Generator>) -> Result<Self, AutError> {
        for g in &gens {
            g.validate(field, target)?;
        }
        Ok(AutWord {
            target,
            field: field.clone(),
            gens,
        })
    }

    pub fn identity(target: Target, field: &FieldSpec) -> Self {
        AutWord {
            target,
            field: field.clone(),
            gens: Vec::new(),
        }
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The same letters read as a word on another algebra.
    pub fn with_target(&self, target: Target) -> Result<Self, AutError> {
        AutWord::new(target, &self.field, self.gens.clone())
    }

    /// Concatenation, i.e. composition.
    pub fn then(&self, other: &AutWord) -> Result<Self, AutError> {
        if other.target != self.target {
            return Err(AutError::TargetMismatch {
                expected: self.target,
                got: other.target,
            });
        }
        if other.field != self.field {
            return Err(AutError::FieldMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(AutWord { gens, ..self.clone() })
    }

    /// Letter-by-letter inverse, using `s⁻¹ = t[-1] s`.
    pub fn inverse(&self) -> Self {
        let gens = self
            .gens
            .iter()
            .rev()
            .flat_map(|g| g.inverse(&self.field))
            .collect();
        AutWord { gens, ..self.clone() }
    }

    /// Rewrites to the shape `gamma t phi s phi … s phi` by moving `gamma`
    /// and `t` to the left, merging neighbours and dropping trivial letters.
    /// Affine letters are left in place and block rewriting across them.
    pub fn normalize(&self) -> Self {
        let k = &self.field;
        let mut gens = self.gens.clone();
        loop {
            gens.retain(|g| !g.is_identity());
            let Some((i, replacement)) = (0..gens.len().saturating_sub(1))
                .find_map(|i| rewrite_pair(k, &gens[i], &gens[i + 1]).map(|r| (i, r)))
            else {
                break;
            };
            gens.splice(i..i + 2, replacement);
        }
        AutWord { gens, ..self.clone() }
    }
}

/// Scales the coefficient of `X^i` in `f` by `mu^{-(i + shift)}`.
fn twist(k: &FieldSpec, f: &UniPoly<FieldSpec>, mu: Gf, shift: u32) -> UniPoly<FieldSpec> {
    let inv = k.inv(&mu).expect("nonzero");
    UniPoly::from_terms(
        k,
        f.terms()
            .map(|(i, c)| (i, k.mul(c, &k.raw_pow(inv, (i + shift) as u64)))),
    )
}

fn rewrite_pair(k: &FieldSpec, a: &Generator, b: &Generator) -> Option<Vec<Generator>> {
    use Generator::*;
    Some(match (a, b) {
        (S, S) => vec![T(k.neg(&Gf::ONE))],
        (S, T(mu)) => vec![T(k.inv(mu)?), S],
        (S, Gamma(mu)) => vec![Gamma(*mu), T(k.inv(mu)?), S],
        (Phi(f), T(mu)) => vec![T(*mu), Phi(twist(k, f, *mu, 1))],
        (Phi(f), Gamma(mu)) => vec![Gamma(*mu), Phi(twist(k, f, *mu, 0))],
        (T(a), Gamma(b)) => vec![Gamma(*b), T(*a)],
        (T(a), T(b)) => vec![T(k.mul(a, b))],
        (Gamma(a), Gamma(b)) => vec![Gamma(k.mul(a, b))],
        (Phi(f), Phi(g)) => vec![Phi(f + g)],
        _ => return None,
    })
}

impl fmt::Display for AutWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("t[1]");
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.to_text(&self.field, self.target))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses a word such as `gamma[2] t[g] phi[X^2] s`.
pub fn parse_word(target: Target, field: &FieldSpec, text: &str) -> Result<AutWord, AutError> {
    match expr::parse_aut(text)? {
        AutSyntax::Word(gens) => word_from_syntax(target, field, &gens),
        AutSyntax::Images(..) => Err(AutError::Malformed("expected a word, got an image pair".into())),
    }
}

fn word_from_syntax(target: Target, field: &FieldSpec, gens: &[GenSyntax]) -> Result<AutWord, AutError> {
    let scalar = |e: &expr::Expr| expr::eval(&CoeffInterp(field), e);
    let mut out = Vec::new();
    for g in gens {
        out.push(match g {
            GenSyntax::S => Generator::S,
            GenSyntax::T(e) => Generator::T(scalar(e)?),
            GenSyntax::Gamma(e) => Generator::Gamma(scalar(e)?),
            GenSyntax::Phi(e) => Generator::Phi(expr::eval(
                &UniInterp {
                    ring: field,
                    var: target.payload_var(),
                },
                e,
            )?),
            GenSyntax::Affine(m, v) => Generator::Affine {
                m: [scalar(&m[0])?, scalar(&m[1])?, scalar(&m[2])?, scalar(&m[3])?],
                v: [scalar(&v[0])?, scalar(&v[1])?],
            },
        });
    }
    AutWord::new(target, field, out)
}

/// An endomorphism of `Z = K[X, Y]` given by the images of `X` and `Y`.
///
/// Construction only checks that both images live over the same field;
/// [`ZAut::decompose`] decides whether the map is invertible.
#[derive(Clone, Debug, PartialEq)]
pub struct ZAut {
    x: BiPoly<FieldSpec>,
    y: BiPoly<FieldSpec>,
}

impl ZAut {
    pub fn new(x: BiPoly<FieldSpec>, y: BiPoly<FieldSpec>) -> Result<Self, AutError> {
        if x.ring() != y.ring() {
            return Err(AutError::Malformed("images over different fields".into()));
        }
        Ok(ZAut { x, y })
    }

    pub fn identity(field: &FieldSpec) -> Self {
        ZAut {
            x: BiPoly::x(field),
            y: BiPoly::y(field),
        }
    }

    pub fn generator(field: &FieldSpec, g: &Generator) -> Self {
        let (x, y) = (BiPoly::x(field), BiPoly::y(field));
        if let Generator::Phi(f) = g {
            return ZAut {
                x,
                y: y + BiPoly::from_uni_in_x(f),
            };
        }
        let (m, v) = g.affine_parts(field).expect("validated generator");
        let lin = |a: Gf, b: Gf, c: Gf| x.scale(&a) + y.scale(&b) + BiPoly::constant(field, c);
        ZAut {
            x: lin(m[0], m[1], v[0]),
            y: lin(m[2], m[3], v[1]),
        }
    }

    pub fn from_word(w: &AutWord) -> Result<Self, AutError> {
        if w.target != Target::Z {
            return Err(AutError::TargetMismatch {
                expected: Target::Z,
                got: w.target,
            });
        }
        let mut acc = ZAut::identity(&w.field);
        for g in w.gens.iter().rev() {
            acc = ZAut::generator(&w.field, g).compose(&acc)?;
        }
        Ok(acc)
    }

    /// Parses an image pair `(P ; Q)` or a word.
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Self, AutError> {
        match expr::parse_aut(text)? {
            AutSyntax::Images(a, b) => ZAut::new(
                expr::eval(&expr::BiInterp(field), &a)?,
                expr::eval(&expr::BiInterp(field), &b)?,
            ),
            AutSyntax::Word(gens) => ZAut::from_word(&word_from_syntax(Target::Z, field, &gens)?),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        self.x.ring()
    }

    pub fn image_x(&self) -> &BiPoly<FieldSpec> {
        &self.x
    }

    pub fn image_y(&self) -> &BiPoly<FieldSpec> {
        &self.y
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ZAut) -> Result<ZAut, AutError> {
        Ok(ZAut {
            x: self.apply(&other.x)?,
            y: self.apply(&other.y)?,
        })
    }

    pub fn apply(&self, z: &BiPoly<FieldSpec>) -> Result<BiPoly<FieldSpec>, AutError> {
        z.substitute(&self.x, &self.y)
            .map_err(|_| AutError::FieldMismatch)
    }

    /// Larger total degree of the two images.
    pub fn degree(&self) -> u32 {
        self.x
            .total_degree()
            .unwrap_or(0)
            .max(self.y.total_degree().unwrap_or(0))
    }

    pub fn jacobian(&self) -> BiPoly<FieldSpec> {
        jacobian(&self.x, &self.y).expect("images share a field")
    }

    /// The Jacobian when it is a constant.
    pub fn jacobian_constant(&self) -> Option<Gf> {
        self.jacobian().as_constant()
    }

    /// Membership in the Jacobian-one subgroup.
    pub fn in_gamma(&self) -> bool {
        self.jacobian_constant() == Some(Gf::ONE)
    }

    /// Factors the map as `gamma t phi s phi … s phi`; `gamma` is absent
    /// when the Jacobian is 1. Fails with [`AutError::NotAutomorphism`]
    /// when the map is not invertible.
    pub fn decompose(&self) -> Result<AutWord, AutError> {
        let k = self.field().clone();
        let mut p = self.x.clone();
        let mut q = self.y.clone();
        // accumulated right factors: self ∘ r_1 ∘ … ∘ r_m = (p, q)
        let mut right: Vec<Generator> = Vec::new();
        let mut push = |g: Generator, p: &mut BiPoly<FieldSpec>, q: &mut BiPoly<FieldSpec>| {
            let img = ZAut::generator(&k, &g);
            let np = img.x.substitute(p, q).expect("same field");
            let nq = img.y.substitute(p, q).expect("same field");
            *p = np;
            *q = nq;
            right.push(g);
        };
        let not_aut = |why: &str| Err::<AutWord, _>(AutError::NotAutomorphism(why.into()));

        loop {
            let (Some(mut dp), Some(mut dq)) = (p.total_degree(), q.total_degree()) else {
                return not_aut("an image is zero");
            };
            if dp.max(dq) <= 1 {
                break;
            }
            if dp >= dq {
                push(Generator::S, &mut p, &mut q);
                std::mem::swap(&mut dp, &mut dq);
            }
            if dp == 0 {
                return not_aut("an image is constant");
            }
            if dq % dp != 0 {
                return not_aut(&format!("degrees {dp} and {dq} do not divide"));
            }
            let e = dq / dp;
            let top_p = p.top_form().pow(e);
            let top_q = q.top_form();
            let ((i, j), lead_q) = top_q.terms().next_back().map(|(m, c)| (m, *c)).expect("nonzero");
            let lead_p = top_p.coeff(i, j);
            if lead_p.is_zero() {
                return not_aut("leading forms are not proportional");
            }
            let c = k.mul(&lead_q, &k.inv(&lead_p).expect("nonzero"));
            if top_q != top_p.scale(&c) {
                return not_aut("leading forms are not proportional");
            }
            let f = UniPoly::monomial(&k, k.neg(&c), e);
            push(Generator::Phi(f), &mut p, &mut q);
        }

        let lin = |f: &BiPoly<FieldSpec>| (f.coeff(1, 0), f.coeff(0, 1), f.coeff(0, 0));
        let (a, b, _) = lin(&p);
        let (c, d, _) = lin(&q);
        if k.sub(&k.mul(&a, &d), &k.mul(&b, &c)).is_zero() {
            return not_aut("linear part is singular");
        }
        if a.is_zero() {
            push(Generator::S, &mut p, &mut q);
        }
        // clear X and the constant from Q with one phi
        let (a, _, e) = lin(&p);
        let (c, _, f) = lin(&q);
        let kappa = k.neg(&k.mul(&c, &k.inv(&a).expect("nonzero")));
        let lambda = k.neg(&k.add(&f, &k.mul(&kappa, &e)));
        let clear = UniPoly::from_terms(&k, [(1, kappa), (0, lambda)]);
        push(Generator::Phi(clear), &mut p, &mut q);
        // then Y and the constant from P, conjugating a phi by s
        let (_, b, e) = lin(&p);
        let (_, d, _) = lin(&q);
        if !b.is_zero() || !e.is_zero() {
            let kappa = k.mul(&b, &k.inv(&d).expect("nonzero"));
            let clear = UniPoly::from_terms(&k, [(1, kappa), (0, e)]);
            push(Generator::S, &mut p, &mut q);
            push(Generator::Phi(clear), &mut p, &mut q);
            push(Generator::S, &mut p, &mut q);
        }
        let (alpha, _, _) = lin(&p);
        let (_, delta, _) = lin(&q);
        push(Generator::T(delta), &mut p, &mut q);
        let ad = k.mul(&alpha, &delta);
        push(Generator::Gamma(k.inv(&ad).expect("nonzero")), &mut p, &mut q);
        assert!(
            p == BiPoly::x(&k) && q == BiPoly::y(&k),
            "decomposition did not reach the identity"
        );

        // self = r_m⁻¹ ∘ … ∘ r_1⁻¹
        let gens = right.iter().rev().flat_map(|g| g.inverse(&k)).collect();
        Ok(AutWord::new(Target::Z, &k, gens)?.normalize())
    }

    /// Inverse map, through [`ZAut::decompose`].
    pub fn inverse(&self) -> Result<ZAut, AutError> {
        ZAut::from_word(&self.decompose()?.inverse())
    }
}

impl fmt::Display for ZAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.x.to_text(), self.y.to_text())
    }
}

/// An endomorphism of `A_1` given by the images of `x` and `d`; the images
/// must satisfy `[σ(d), σ(x)] = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylAut {
    x: WeylElement<FieldSpec>,
    d: WeylElement<FieldSpec>,
}

impl WeylAut {
    pub fn new(x: WeylElement<FieldSpec>, d: WeylElement<FieldSpec>) -> Result<Self, AutError> {
        if x.rank() != 1 || d.rank() != 1 {
            return Err(AutError::Malformed("images must lie in A_1".into()));
        }
        if x.ring() != d.ring() {
            return Err(AutError::Malformed("images over different fields".into()));
        }
        let one = WeylElement::one(x.ring(), 1);
        if d.commutator(&x).ok() != Some(one) {
            return Err(AutError::Malformed(
                "images do not satisfy [d, x] = 1".into(),
            ));
        }
        Ok(WeylAut { x, d })
    }

    pub fn identity(field: &FieldSpec) -> Self {
        WeylAut {
            x: WeylElement::x(field, 1, 1),
            d: WeylElement::d(field, 1, 1),
        }
    }

    pub fn generator(field: &FieldSpec, g: &Generator) -> Self {
        let (x, d) = (WeylElement::x(field, 1, 1), WeylElement::d(field, 1, 1));
        if let Generator::Phi(f) = g {
            return WeylAut {
                x,
                d: d + WeylElement::from_uni(f, 1, 1),
            };
        }
        let (m, v) = g.affine_parts(field).expect("validated generator");
        let lin = |a: Gf, b: Gf, c: Gf| x.scale(&a) + d.scale(&b) + WeylElement::constant(field, 1, c);
        WeylAut {
            x: lin(m[0], m[1], v[0]),
            d: lin(m[2], m[3], v[1]),
        }
    }

    pub fn from_word(w: &AutWord) -> Result<Self, AutError> {
        if w.target != Target::A1 {
            return Err(AutError::TargetMismatch {
                expected: Target::A1,
                got: w.target,
            });
        }
        let mut acc = WeylAut::identity(&w.field);
        for g in w.gens.iter().rev() {
            acc = WeylAut::generator(&w.field, g).compose(&acc)?;
        }
        Ok(acc)
    }

    /// Parses an image pair `(P ; Q)` or a word.
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Self, AutError> {
        match expr::parse_aut(text)? {
            AutSyntax::Images(a, b) => {
                let interp = expr::WeylInterp { ring: field, n: 1 };
                WeylAut::new(expr::eval(&interp, &a)?, expr::eval(&interp, &b)?)
            }
            AutSyntax::Word(gens) => {
                WeylAut::from_word(&word_from_syntax(Target::A1, field, &gens)?)
            }
        }
    }

    pub fn field(&self) -> &FieldSpec {
        self.x.ring()
    }

    pub fn image_x(&self) -> &WeylElement<FieldSpec> {
        &self.x
    }

    pub fn image_d(&self) -> &WeylElement<FieldSpec> {
        &self.d
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylAut) -> Result<WeylAut, AutError> {
        Ok(WeylAut {
            x: self.apply(&other.x)?,
            d: self.apply(&other.d)?,
        })
    }

    pub fn apply(&self, z: &WeylElement<FieldSpec>) -> Result<WeylElement<FieldSpec>, AutError> {
        z.substitute(&[self.x.clone(), self.d.clone()])
            .map_err(|e| AutError::Malformed(e.to_string()))
    }

    pub fn degree(&self) -> u32 {
        self.x.degree().unwrap_or(0).max(self.d.degree().unwrap_or(0))
    }
}

impl fmt::Display for WeylAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.x.to_text(), self.d.to_text())
    }
}
