//! Acceptance criteria. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line; exits non-zero on failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use weylres::autgrp::{AutError, Target, WeylAut, ZAut};
use weylres::checks::{run_suite, Suite};
use weylres::gfq::FieldSpec;
use weylres::random;
use weylres::resmap::{res, res_inverse, res_n_affine, res_n_brute_force, AffineMap};
use weylres::ring::{CoeffRing, PerfectField};
use weylres::theta::ThetaContext;
use weylres::UniPoly;

const SEED: u64 = 20240717;

fn prime(p: u32) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn square(p: u32) -> FieldSpec {
    FieldSpec::extension(p, 2).unwrap()
}

/// Runs `suite` on each field; returns a failure description if any case fails.
fn suites(suite: Suite, fields: &[FieldSpec], count: usize) -> Result<String, String> {
    let mut total = 0;
    for k in fields {
        let r = run_suite(suite, k, count, SEED);
        if !r.all_passed() {
            return Err(format!("{suite} over {k}: {r}"));
        }
        total += r.total;
    }
    Ok(format!("{total} cases"))
}

fn criterion_1() -> Result<String, String> {
    let fields: Vec<FieldSpec> = [2, 3, 5, 7].into_iter().flat_map(|p| [prime(p), square(p)]).collect();
    suites(Suite::Thm17, &fields, 200)
}

fn criterion_2() -> Result<String, String> {
    suites(Suite::Thm17Ring, &[prime(2), prime(3)], 50)
}

fn criterion_3() -> Result<String, String> {
    suites(Suite::ThetaRt, &[prime(2), prime(3), prime(5)], 200)
}

/// `∂^{[pi]} Π_{j≠i} (x^p ∂^{[p]} - j) / (i - j)` applied to `g`.
fn pi_by_operators(k: &FieldSpec, i: u32, g: &UniPoly<FieldSpec>) -> UniPoly<FieldSpec> {
    let p = k.p();
    let xp = UniPoly::monomial(k, k.one().raw(), p);
    let mut h = g.clone();
    for j in (0..p).filter(|&j| j != i) {
        let euler = &xp * &h.divided_power(p);
        let shifted = euler - h.scale(&k.from_int(j as i64).raw());
        let denom = k.from_int(i as i64 - j as i64).inv().unwrap();
        h = shifted.scale(&denom.raw());
    }
    h.divided_power(p * i)
}

/// `Δ^n(Σ a_i x^{p² i}) = Σ a_{p^n - 1 + p^n i}^{p^{-n}} x^{p² i}`.
fn delta_power_closed_form(k: &FieldSpec, n: u32, g: &UniPoly<FieldSpec>) -> UniPoly<FieldSpec> {
    let p = k.p();
    let pn = p.pow(n);
    UniPoly::from_terms(
        k,
        g.terms()
            .map(|(e, c)| (e / (p * p), *c))
            .filter(|&(idx, _)| (idx + 1) % pn == 0)
            .map(|(idx, c)| {
                let mut root = c;
                for _ in 0..n {
                    root = k.inv_frobenius(&root);
                }
                (((idx + 1) / pn - 1) * p * p, root)
            }),
    )
}

fn criterion_4() -> Result<String, String> {
    let mut checked = 0;
    for p in [2u32, 3, 5] {
        let k = prime(p);
        let ctx = ThetaContext::new(k.clone());
        let mut rng = random::rng(SEED + p as u64);
        for _ in 0..100 {
            let g = random::poly_in_xp(&mut rng, &k, 4 * p * p * p);
            for i in 0..p {
                if ctx.pi(i, &g).unwrap() != pi_by_operators(&k, i, &g) {
                    return Err(format!("pi_{i} over {k} at g = {g}"));
                }
            }
            let h = random::poly(&mut rng, &k, p.pow(4)).expand_exponents(p * p);
            let mut iterate = h.clone();
            for n in 1..=3 {
                iterate = ctx.delta(&iterate).unwrap();
                if iterate != delta_power_closed_form(&k, n, &h) {
                    return Err(format!("delta^{n} over {k} at g = {h}"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} inputs, p in {{2,3,5}}"))
}

fn criterion_5() -> Result<String, String> {
    suites(Suite::Res2Affine, &[prime(2), square(2), prime(3), prime(5)], 100)
}

/// The A_1 word corpus for criteria 6 and 7.
fn corpus(p: u32) -> Vec<WeylAut> {
    let k = prime(p);
    let mut rng = random::rng(SEED ^ (p as u64) << 8);
    (0..100)
        .map(|_| WeylAut::from_word(&random::word(&mut rng, Target::A1, &k, 6, 4, false)).unwrap())
        .collect()
}

fn criterion_6() -> Result<String, String> {
    for p in [2u32, 3] {
        let words = corpus(p);
        for a in &words {
            let r = res(a).map_err(|e| format!("res failed on {a}: {e}"))?;
            if !r.image.in_gamma() || r.image.degree() != a.degree() {
                return Err(format!("Jacobian or degree wrong for {a}"));
            }
        }
        for pair in 0..50 {
            let (a, b) = (&words[pair], &words[pair + 50]);
            let lhs = res(&a.compose(b).unwrap()).map_err(|e| e.to_string())?.image;
            let rhs = res(a).unwrap().image.compose(&res(b).unwrap().image).unwrap();
            if lhs != rhs {
                return Err(format!("res not multiplicative on {a} and {b}"));
            }
        }
    }
    Ok("200 words, 100 pairs".into())
}

fn criterion_7() -> Result<String, String> {
    for p in [2u32, 3] {
        let k = prime(p);
        for a in corpus(p) {
            let image = res(&a).unwrap().image;
            let (lift, _) = res_inverse(&image).map_err(|e| format!("{image}: {e}"))?;
            if lift != a {
                return Err(format!("res_inverse(res({a})) = {lift}"));
            }
        }
        let mut rng = random::rng(SEED + 7 * p as u64);
        for _ in 0..100 {
            let g = ZAut::from_word(&random::word(&mut rng, Target::Z, &k, 6, 4, false)).unwrap();
            let (lift, _) = res_inverse(&g).map_err(|e| format!("{g}: {e}"))?;
            if res(&lift).unwrap().image != g {
                return Err(format!("res(res_inverse({g})) differs"));
            }
        }
    }
    Ok("400 round trips".into())
}

fn criterion_8() -> Result<String, String> {
    let mut rng = random::rng(SEED + 8);
    for i in 0..100 {
        let k = if i % 2 == 0 { prime(3) } else { square(2) };
        let a = ZAut::from_word(&random::word(&mut rng, Target::Z, &k, 6, 4, false)).unwrap();
        let w = a.decompose().map_err(|e| format!("{a}: {e}"))?;
        if ZAut::from_word(&w).unwrap() != a {
            return Err(format!("decomposition {w} does not realize {a}"));
        }
    }
    let rejected = [
        (2, "(X^2 ; Y)"),
        (2, "(X+X^2 ; Y)"),
        (3, "(X+X^3 ; Y)"),
        (3, "(X ; 0)"),
        (3, "(1 ; Y)"),
        (3, "(X+Y ; 2*X+2*Y)"),
        (5, "(X*Y ; Y)"),
        (5, "(X^2+Y ; X^3)"),
        (5, "(X^2 ; Y^2)"),
        (7, "(X ; Y+X*Y)"),
    ];
    for (p, text) in rejected {
        let a = ZAut::parse(&prime(p), text).unwrap();
        match a.decompose() {
            Err(AutError::NotAutomorphism(_)) => {}
            other => return Err(format!("{text} over F_{p}: {other:?}")),
        }
    }
    Ok("100 round trips, 10 rejections".into())
}

fn criterion_9() -> Result<String, String> {
    suites(Suite::Relations, &[prime(2), prime(5), square(3), square(7)], 50)
}

fn correction_nonzero(a: &AffineMap) -> bool {
    let k = a.field();
    let n = a.rank();
    (0..2 * n).any(|i| {
        let mut acc = k.zero().raw();
        for j in 0..n {
            acc = k.add(&acc, &k.mul(&a.entry(i, j), &a.entry(i, n + j)));
        }
        !k.is_zero(&acc)
    })
}

fn criterion_10() -> Result<String, String> {
    suites(Suite::Cor22, &[prime(2), prime(3)], 50)?;
    let mut with_correction = 0;
    for p in [2u32, 3] {
        let k = prime(p);
        let mut rng = random::rng(SEED + 10 * p as u64);
        let mut tested = 0;
        while tested < 50 {
            let a = random::symplectic_affine(&mut rng, &k, 2);
            let corrected = p == 2 && correction_nonzero(&a);
            // keep the last slots for maps with a nonzero correction term
            if p == 2 && !corrected && tested >= 40 && with_correction < 10 {
                continue;
            }
            if res_n_brute_force(&a).map_err(|e| e.to_string())? != res_n_affine(&a) {
                return Err(format!("symplectic map {a} over {k}"));
            }
            with_correction += corrected as usize;
            tested += 1;
        }
    }
    if with_correction < 10 {
        return Err(format!("only {with_correction} maps with a p=2 correction"));
    }
    Ok(format!("100 A_2 powers, 100 symplectic maps ({with_correction} corrected)"))
}

fn criterion_11() -> Result<String, String> {
    let failures: Vec<String> = common::GOLDEN.iter().filter_map(common::check).collect();
    if failures.is_empty() {
        Ok(format!("{} command lines", common::GOLDEN.len()))
    } else {
        Err(failures.join("; "))
    }
}

type Criterion = fn() -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("(d+f)^p closed form over F_p and F_p^2", criterion_1),
        ("(d+f)^p closed form over F_p[t]", criterion_2),
        ("theta inverse round trip, oracle, leading terms", criterion_3),
        ("pi_i operator form and Delta^n closed form", criterion_4),
        ("affine restriction closed form vs brute force", criterion_5),
        ("restriction: Jacobian 1, degree, homomorphism", criterion_6),
        ("restriction inverse round trips", criterion_7),
        ("tame decomposition and rejections", criterion_8),
        ("generator relations", criterion_9),
        ("A_2 powers and symplectic restriction", criterion_10),
        ("CLI golden outputs", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
