//! On affine maps of A_1 the restriction is a closed form: p-th powers of the
//! entries, with a correction to the translation when p = 2.

use weylres::random;
use weylres::resmap::{res, res_affine};
use weylres::{AutWord, FieldSpec, Generator, Target, WeylAut};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = random::rng(5);
    for (p, n) in [(2, 1), (2, 2), (3, 1), (7, 1)] {
        let k = FieldSpec::extension(p, n)?;
        let (m, v) = random::sl2_affine(&mut rng, &k);
        let word = AutWord::new(Target::A1, &k, vec![Generator::Affine { m, v }])?;
        let a = WeylAut::from_word(&word)?;
        let closed = res_affine(&k, m, v)?;
        let brute = res(&a)?.image;
        println!("{k}: {word}");
        println!("  closed form {closed}; brute force agrees: {}", closed == brute);
    }
    Ok(())
}
