//! Filtrations with coefficients in a module V.
//!
//! Run with `cargo run --release --example twisted`.

use pbwgate::lie::{InclusionPair, LieAlgebra};
use pbwgate::pbw::twisted_verdict;

fn main() -> pbwgate::Result<()> {
    let borel = InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1])?;
    let diagonal = InclusionPair::diagonal(&LieAlgebra::sl2())?;
    let cases = [
        ("Borel, V = n", &borel, borel.quotient_module()),
        ("Borel, V = trivial", &borel, borel.trivial(1)),
        ("diagonal, V = adjoint", &diagonal, diagonal.h_adjoint()),
    ];
    for (name, pair, v) in cases {
        let t = twisted_verdict(pair, &v, 3)?;
        println!(
            "{name}: α trivial {}, α_V trivial {}, F⊗V splits {}, R⊗V splits {}, consistent {}",
            t.alpha_trivial, t.alpha_v_trivial, t.f_split, t.r_split, t.consistent
        );
    }
    Ok(())
}
