//! The p-th power of `d + f` in the first Weyl algebra is central and equals
//! `d^p + f^(p-1) + f^p`, where `f^(p-1)` is the (p-1)-st derivative.

use weylres::expr::parse_uni;
use weylres::weyl::check_power_identity;
use weylres::{FieldSpec, PolyRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, text) in [(2, "x^3+x"), (3, "x^4+2*x^2"), (5, "x^6+3*x^4+x")] {
        let k = FieldSpec::prime(p)?;
        let f = parse_uni(&k, "x", text)?;
        let check = check_power_identity(&f);
        println!("p={p}: (d+{text})^{p} = {}  [{}]", check.brute_force, if check.holds() { "ok" } else { "MISMATCH" });
    }
    // the same identity with coefficients in F_3[t]
    let r = PolyRing::new(FieldSpec::prime(3)?);
    let f = parse_uni(&r, "x", "t*x^2+x")?;
    let check = check_power_identity(&f);
    println!("over F_3[t]: (d+t*x^2+x)^3 = {}  [{}]", check.brute_force, if check.holds() { "ok" } else { "MISMATCH" });
    Ok(())
}
