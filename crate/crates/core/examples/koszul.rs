//! The quadratic algebra qA = T(g)/(qR): Braverman–Gaitsgory conditions,
//! graded dimensions and Koszul complex slices.
//!
//! Run with `cargo run --release --example koszul`.

use pbwgate::koszul::{bg_conditions, koszul_acyclicity, qa_graded_dimension};
use pbwgate::lie::{InclusionPair, LieAlgebra};

fn main() -> pbwgate::Result<()> {
    let pair = InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1])?;
    let bg = bg_conditions(&pair);
    println!("dim qR = {}, conditions {:?}", bg.relation_dim, bg.conditions());
    for k in 0..=4 {
        let d = qa_graded_dimension(&pair, k);
        println!("dim qA_{k} = {} (closed form {})", d.computed, d.closed_form);
    }
    let report = koszul_acyclicity(&pair, 4);
    for s in &report.slices {
        println!("degree {}: dims {:?}, homology {:?}", s.internal_degree, s.dims, s.homology);
    }
    println!("exact at interior positions: {}", report.passed());
    Ok(())
}
