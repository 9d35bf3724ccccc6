//! Extension data ρ: g → End(E) and the pushout sequence.
//!
//! Run with `cargo run --example extension_datum`.

use pbwgate::cohomology::{find_extension, pushout_module, shifted_complement};
use pbwgate::lie::{InclusionPair, LieAlgebra};
use pbwgate::pbw::section_oracle;

fn main() -> pbwgate::Result<()> {
    let diagonal = InclusionPair::diagonal(&LieAlgebra::sl2())?;
    // The echelon complement of the diagonal is an ideal, so ρ = 0 there;
    // a shifted complement gives a non-zero extension datum.
    let cases = [
        ("diagonal sl2, shifted complement", shifted_complement(&diagonal)?),
        ("diagonal sl2", diagonal),
        ("sl2 Borel", InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1])?),
    ];
    for (name, pair) in cases {
        let n = pair.quotient_module();
        match find_extension(&pair, &n)? {
            Some(datum) => {
                println!("{name}: ρ exists");
                for (c, l) in pair.n_labels().iter().enumerate() {
                    println!("  ρ({l}) = {:?}", datum.rho_n(c));
                }
            }
            None => println!("{name}: no equivariant extension of the n-action"),
        }
        let po = pushout_module(&pair, &n)?;
        let split = section_oracle(&po.inclusion, &po.projection)?.is_some();
        println!("  pushout 0 → n → Q → n⊗n → 0 (dim Q = {}) splits: {split}", po.module.dim());
    }
    Ok(())
}
