//! Restrict automorphisms of A_1 to the centre `K[x^p, d^p] = K[X, Y]`, then
//! lift the image back with the explicit inverse.

use weylres::resmap::{res, res_inverse};
use weylres::{FieldSpec, WeylAut};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldSpec::prime(3)?;
    for text in ["phi[x^2]", "s phi[x] t[2]", "(x+1 ; d)", "phi[x^4+x] s phi[2*x^2]"] {
        let a = WeylAut::parse(&k, text)?;
        let r = res(&a)?;
        let (lift, word) = res_inverse(&r.image)?;
        println!("{text}");
        println!("  images     {a}");
        println!("  restricted {} (Jacobian {}, degree {} -> {})", r.image, k.wrap(r.jacobian_value), r.degree_in, r.degree_out);
        println!("  lifted     {lift} = {word}; same map: {}", lift == a);
    }
    Ok(())
}
