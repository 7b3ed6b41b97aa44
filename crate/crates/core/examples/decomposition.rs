//! Factor automorphisms of `K[X, Y]` into `s`, `t[μ]`, `gamma[μ]` and `phi[f]`,
//! and reject endomorphisms that are not invertible.

use weylres::{FieldSpec, ZAut};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k = FieldSpec::prime(5)?;
    for text in ["(Y ; 4*X)", "(X+Y^2 ; Y)", "(2*X+Y^3+1 ; 3*Y+2*(2*X+Y^3+1)^2)", "(X^2 ; Y)", "(X*Y ; Y)"] {
        let a = ZAut::parse(&k, text)?;
        match a.decompose() {
            Ok(word) => println!("{text} = {word} (realizes input: {})", ZAut::from_word(&word)? == a),
            Err(e) => println!("{text}: {e}"),
        }
    }
    Ok(())
}
