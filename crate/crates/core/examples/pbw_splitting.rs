//! Splittings s_k of the free filtration and the PBW sections I_k for the
//! diagonal sl2 ⊂ sl2 ⊕ sl2.
//!
//! Run with `cargo run --release --example pbw_splitting`.

use pbwgate::cohomology::find_extension;
use pbwgate::lie::{InclusionPair, LieAlgebra};
use pbwgate::pbw::{closed_form_mismatches, pbw_splitting_i, splitting_s};

fn main() -> pbwgate::Result<()> {
    let pair = InclusionPair::diagonal(&LieAlgebra::sl2())?;
    let datum = find_extension(&pair, &pair.quotient_module())?.expect("α vanishes for a diagonal");
    for k in 1..=3 {
        let s = splitting_s(&pair, &datum, k)?;
        println!(
            "s_{k}: n^⊗{k} → F^{k} is {}x{}, equivariant {}, section {}",
            s.map.matrix.rows(),
            s.map.matrix.cols(),
            s.equivariant,
            s.section
        );
    }
    for i in pbw_splitting_i(&pair, &datum, 3)? {
        println!(
            "I_{}: S^{} n → R^{} is {}x{}, equivariant {}, section {}",
            i.degree,
            i.degree,
            i.degree,
            i.map.matrix.rows(),
            i.map.matrix.cols(),
            i.equivariant,
            i.section
        );
    }
    let (checked, bad) = closed_form_mismatches(&datum)?;
    println!("closed forms of s₂, s₃: {checked} tensors, {} mismatches", bad.len());
    Ok(())
}
