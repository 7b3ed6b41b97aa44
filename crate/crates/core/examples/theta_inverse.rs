//! `θ(f) = f^p + f^(p-1)` is a bijection `K[x] -> K[x^p]` over a perfect field.
//! Invert it by the closed form and compare with the top-down reduction.

use weylres::expr::parse_uni;
use weylres::theta::{theta, ThetaContext};
use weylres::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, n, text) in [(2, 1, "x^6+x^2"), (3, 1, "x^9+2*x^3+1"), (2, 2, "g*x^4+x^2")] {
        let k = FieldSpec::extension(p, n)?;
        let ctx = ThetaContext::new(k.clone());
        let g = parse_uni(&k, "x", text)?;
        let f = ctx.theta_inverse(&g)?;
        let oracle = ctx.theta_inverse_oracle(&g)?;
        println!("{k}: theta^-1({g}) = {f}; theta of it = {}; oracle agrees: {}", theta(&f), oracle == f);
    }
    Ok(())
}
