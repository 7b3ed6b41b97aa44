//! Exact computations in the first Weyl algebra `A_1 = K<x, d>/(dx - xd - 1)`
//! over finite fields `F_{p^n}` (`p <= 13`, `n <= 4`).
//!
//! * [`gfq`]: finite fields with table arithmetic and Frobenius.
//! * [`poly`]: sparse polynomials in `x`, and in `X, Y` for the centre.
//! * [`weyl`]: normal-form arithmetic in `A_1` and `A_2`, p-th powers, the centre.
//! * [`theta`]: `θ(f) = f^p + f^{(p-1)}` and its inverse.
//! * [`autgrp`]: automorphisms as words and images, tame decomposition.
//! * [`resmap`]: restriction of automorphisms to the centre and its inverse.
//! * [`checks`], [`random`]: seeded verification suites.
//! * [`cli`]: the `weylres` command.
//!
//! ```
//! use weylres::expr::parse_uni;
//! use weylres::gfq::FieldSpec;
//! use weylres::theta::ThetaContext;
//!
//! let k = FieldSpec::prime(2).unwrap();
//! let ctx = ThetaContext::new(k.clone());
//! let g = parse_uni(&k, "x", "x^2").unwrap();
//! assert_eq!(ctx.theta_inverse(&g).unwrap().to_string(), "x+1");
//! ```

pub mod autgrp;
pub mod checks;
pub mod cli;
pub mod expr;
pub mod gfq;
pub mod poly;
pub mod random;
pub mod resmap;
pub mod ring;
pub mod theta;
pub mod weyl;

pub use autgrp::{AutWord, Generator, Target, WeylAut, ZAut};
pub use gfq::{FieldElement, FieldSpec, Gf};
pub use poly::{BiPoly, UniPoly};
pub use ring::{CoeffRing, PerfectField, PolyRing};
pub use weyl::WeylElement;
