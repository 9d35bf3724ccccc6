//! The brute-force section oracle against the obstruction class, level by
//! level, and the comparison of the pushout with F̃².
//!
//! Run with `cargo run --release --example section_oracle`.

use pbwgate::lie::{InclusionPair, LieAlgebra};
use pbwgate::pbw::{equivalence_check, f2_class_check};

fn main() -> pbwgate::Result<()> {
    let cases = [
        ("sl2 Borel", InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1])?),
        ("diagonal heisenberg", InclusionPair::diagonal(&LieAlgebra::heisenberg())?),
    ];
    for (name, pair) in cases {
        let r = equivalence_check(&pair, 3)?;
        println!("{name}: α trivial {}", r.alpha_trivial);
        for l in &r.levels {
            println!("  {:?} level {}: oracle splits {}, predicted {}", l.side, l.degree, l.oracle_split, l.predicted_split);
        }
        let f2 = f2_class_check(&pair)?;
        println!("  Q ≅ F̃²: {}, Q splits {}, F̃² splits {}", f2.isomorphism, f2.q_split, f2.f2_split);
    }
    Ok(())
}
