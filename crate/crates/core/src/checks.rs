//! Randomised verification suites behind `weylres fuzz`.
//!
//! Case `i` of a run draws its inputs from a ChaCha stream selected by `i`,
//! so reports do not depend on how cases are spread over threads.

use std::fmt;
use std::panic::{self, AssertUnwindSafe};
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::autgrp::{AutWord, Generator, Target, WeylAut, ZAut};
use crate::gfq::{FieldSpec, Gf};
use crate::poly::UniPoly;
use crate::random;
use crate::resmap::{res, res_affine, res_inverse, res_n_affine, res_n_brute_force};
use crate::ring::{CoeffRing, PerfectField, PolyRing};
use crate::theta::{theta, ThetaContext};
use crate::weyl::{check_partial_power_identity, check_power_identity};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `(d + f)^p` against the closed form, `f` of degree `<= 3p`.
    Thm17,
    /// The same identity over `K[t]`.
    Thm17Ring,
    /// `(d_i + f)^p` in `A_2` for `f` in `x_1, x_2` of degree `<= 6`.
    Cor22,
    /// `θ⁻¹ ∘ θ`, `θ ∘ θ⁻¹`, the oracle and the leading-term law.
    ThetaRt,
    /// Restriction of random words: Jacobian, degree, inverse, homomorphism.
    ResRt,
    /// Closed-form restriction of plane affine maps against brute force.
    Res2Affine,
    /// Closed-form restriction of symplectic affine maps of `A_2`.
    ResnAffine,
    /// The commutation relations between `s`, `t`, `gamma` and `phi`.
    Relations,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Thm17,
        Suite::Thm17Ring,
        Suite::Cor22,
        Suite::ThetaRt,
        Suite::ResRt,
        Suite::Res2Affine,
        Suite::ResnAffine,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm17 => "thm17",
            Suite::Thm17Ring => "thm17-ring",
            Suite::Cor22 => "cor22",
            Suite::ThetaRt => "theta-rt",
            Suite::ResRt => "res-rt",
            Suite::Res2Affine => "res2-affine",
            Suite::ResnAffine => "resn-affine",
            Suite::Relations => "relations",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Counts for one run; `first_failure` holds the failing input as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub total: usize,
    pub passed: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(f, "{}/{} OK", self.passed, self.total),
            Some(input) => write!(
                f,
                "{}/{} OK, {} FAILED\nfirst failure: {input}",
                self.passed,
                self.total,
                self.total - self.passed
            ),
        }
    }
}

/// Runs `count` cases of `suite` over `k`.
pub fn run_suite(suite: Suite, k: &FieldSpec, count: usize, seed: u64) -> SuiteReport {
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .clamp(1, count.max(1));
    let mut results: Vec<(usize, Result<(), String>)> = std::thread::scope(|scope| {
        let workers: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    (t..count)
                        .step_by(threads)
                        .map(|i| (i, run_case(suite, k, seed, i)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        workers
            .into_iter()
            .flat_map(|w| w.join().expect("fuzz worker"))
            .collect()
    });
    results.sort_by_key(|(i, _)| *i);
    let passed = results.iter().filter(|(_, r)| r.is_ok()).count();
    let first_failure = results.into_iter().find_map(|(_, r)| r.err());
    SuiteReport {
        suite,
        total: count,
        passed,
        first_failure,
    }
}

/// Runs case `index` alone; `Err` carries the input text.
pub fn run_case(suite: Suite, k: &FieldSpec, seed: u64, index: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut input = String::new();
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| case(suite, k, &mut rng, &mut input)));
    match outcome {
        Ok(true) => Ok(()),
        Ok(false) => Err(input),
        Err(_) => Err(format!("{input} (panicked)")),
    }
}

fn case(suite: Suite, k: &FieldSpec, rng: &mut ChaCha8Rng, input: &mut String) -> bool {
    let p = k.p();
    match suite {
        Suite::Thm17 => {
            let f = random::poly(rng, k, 3 * p);
            *input = f.to_text("x");
            check_power_identity(&f).holds()
        }
        Suite::Thm17Ring => {
            let r = PolyRing::new(k.clone());
            let f = random::poly_over_ring(rng, &r, 3 * p, 3);
            *input = f.to_text("x");
            check_power_identity(&f).holds()
        }
        Suite::Cor22 => {
            let f = random::poly_in_a2(rng, k, 6);
            let i = if rand::Rng::gen_bool(rng, 0.5) { 1 } else { 2 };
            *input = format!("d{i}+{}", f.to_text());
            check_partial_power_identity(&f, i).map(|c| c.holds()).unwrap_or(false)
        }
        Suite::ThetaRt => {
            let ctx = ThetaContext::new(k.clone());
            let f = random::poly(rng, k, 3 * p * p);
            let g = random::poly_in_xp(rng, k, 3 * p * p);
            *input = format!("{} ; {}", f.to_text("x"), g.to_text("x"));
            theta_round_trip(&ctx, &f, &g)
        }
        Suite::ResRt => {
            let w = random::word(rng, Target::A1, k, 6, 4, false);
            let g = random::word(rng, Target::Z, k, 6, 4, false);
            let a = random::word(rng, Target::A1, k, 3, 4, false);
            let b = random::word(rng, Target::A1, k, 3, 4, false);
            *input = format!("{w} ; {g} ; {a} ; {b}");
            restriction_round_trip(&w, &g, &a, &b).unwrap_or(false)
        }
        Suite::Res2Affine => {
            let (m, v) = random::sl2_affine(rng, k);
            let a = WeylAut::generator(k, &Generator::Affine { m, v });
            *input = AutWord::new(Target::A1, k, vec![Generator::Affine { m, v }])
                .map(|w| w.to_string())
                .unwrap_or_default();
            match (res_affine(k, m, v), res(&a)) {
                (Ok(closed), Ok(brute)) => closed == brute.image,
                _ => false,
            }
        }
        Suite::ResnAffine => {
            let a = random::symplectic_affine(rng, k, 2);
            *input = a.to_string();
            res_n_brute_force(&a).map(|b| b == res_n_affine(&a)).unwrap_or(false)
        }
        Suite::Relations => {
            let mu = random::nonzero(rng, k);
            let lambda = random::element(rng, k);
            let i = rand::Rng::gen_range(rng, 0..=6u32);
            *input = format!(
                "mu={} lambda={} i={i}",
                k.format(&mu),
                k.format(&lambda)
            );
            relations_hold(k, mu, lambda, i)
        }
    }
}

fn theta_round_trip(ctx: &ThetaContext<FieldSpec>, f: &UniPoly<FieldSpec>, g: &UniPoly<FieldSpec>) -> bool {
    let k = ctx.field();
    let tf = theta(f);
    let lead_law = match (f.leading_term(), tf.leading_term()) {
        (Ok((e, c)), Ok(lead)) => lead == (e * ctx.p(), k.frobenius(&c)),
        (Err(_), Err(_)) => true,
        _ => false,
    };
    let Ok(back) = ctx.theta_inverse(&tf) else {
        return false;
    };
    let oracle_f = ctx.theta_inverse_oracle(&tf).ok();
    let Ok(lifted) = ctx.theta_inverse(g) else {
        return false;
    };
    lead_law
        && back == *f
        && oracle_f.as_ref() == Some(&back)
        && ctx.theta_inverse_oracle(g).ok().as_ref() == Some(&lifted)
        && theta(&lifted) == *g
}

fn restriction_round_trip(w: &AutWord, g: &AutWord, a: &AutWord, b: &AutWord) -> Option<bool> {
    let sigma = WeylAut::from_word(w).ok()?;
    let r = res(&sigma).ok()?;
    let mut ok = r.jacobian_value == Gf::ONE && r.degree_in == r.degree_out;
    ok &= r.image.in_gamma() && r.image.degree() == sigma.degree();
    ok &= res_inverse(&r.image).ok()?.0 == sigma;

    let gamma = ZAut::from_word(g).ok()?;
    ok &= res(&res_inverse(&gamma).ok()?.0).ok()?.image == gamma;

    let (wa, wb) = (WeylAut::from_word(a).ok()?, WeylAut::from_word(b).ok()?);
    let lhs = res(&wa.compose(&wb).ok()?).ok()?.image;
    let rhs = res(&wa).ok()?.image.compose(&res(&wb).ok()?.image).ok()?;
    Some(ok && lhs == rhs)
}

/// Checks the five relations at the level of images.
pub fn relations_hold(k: &FieldSpec, mu: Gf, lambda: Gf, i: u32) -> bool {
    use Generator::{Gamma, Phi, S, T};
    let realize = |gens: Vec<Generator>| {
        ZAut::from_word(&AutWord::new(Target::Z, k, gens).expect("valid letters")).expect("Z word")
    };
    let inv = k.inv(&mu).expect("nonzero");
    let phi = |c: Gf| Phi(UniPoly::monomial(k, c, i));
    let scaled = |shift: u32| k.mul(&lambda, &k.raw_pow(inv, (i + shift) as u64));
    let pairs = [
        (vec![S, T(mu)], vec![T(inv), S]),
        (vec![S, Gamma(mu)], vec![Gamma(mu), T(inv), S]),
        (vec![phi(lambda), T(mu)], vec![T(mu), phi(scaled(1))]),
        (vec![phi(lambda), Gamma(mu)], vec![Gamma(mu), phi(scaled(0))]),
        (vec![S, S], vec![T(k.neg(&Gf::ONE))]),
    ];
    pairs.into_iter().all(|(a, b)| realize(a) == realize(b))
}
