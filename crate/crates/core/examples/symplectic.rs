//! Affine symplectic maps of the second Weyl algebra A_2 and their
//! restriction to the centre, computed in closed form and by brute force.

use weylres::random;
use weylres::resmap::{res_n_affine, res_n_brute_force};
use weylres::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = random::rng(3);
    for p in [2, 3] {
        let k = FieldSpec::prime(p)?;
        for _ in 0..2 {
            let a = random::symplectic_affine(&mut rng, &k, 2);
            let closed = res_n_affine(&a);
            println!("{k}: {a}");
            println!("  restricts to {closed}; brute force agrees: {}", closed == res_n_brute_force(&a)?);
        }
    }
    Ok(())
}
