//! Arithmetic in GF(9) = F_3[g]/(g^2+1) through the checked element API.

use weylres::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldSpec::new(3, &[1, 0, 1])?;
    let g = k.generator();
    let a = g.checked_add(&k.one())?;
    println!("field {k}, order {}", k.order());
    println!("a = {a}, a^2 = {}, 1/a = {}", a.pow(2), a.inv()?);
    println!("frobenius(a) = {}, its root = {}", a.frobenius(), a.frobenius().inv_frobenius());
    let nonzero = k.elements().filter(|e| !e.is_zero()).count();
    println!("{nonzero} units, each with a^{nonzero} = 1: {}", k.elements().filter(|e| !e.is_zero()).all(|e| e.pow(nonzero as u64).is_one()));
    Ok(())
}
