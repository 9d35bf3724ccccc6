//! The obstruction class for the Borel subalgebra of sl2.
//!
//! Run with `cargo run --example borel_obstruction`.

use pbwgate::cohomology::{alpha, complement_independent, connecting_cocycle, h1_dimension, is_trivial};
use pbwgate::lie::{hom_module, tensor_module, InclusionPair, LieAlgebra};
use pbwgate::linalg::scalar::format_scalar;

fn main() -> pbwgate::Result<()> {
    let pair = InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1])?;
    let (h, n) = (pair.h_labels(), pair.n_labels());
    println!("h = {h:?}, n = {n:?}");

    let c = connecting_cocycle(&pair);
    for (a, la) in h.iter().enumerate() {
        let v = c.value(a);
        let terms: Vec<String> = h.iter().enumerate().map(|(j, lj)| format!("{}·{lj}", format_scalar(&v[j]))).collect();
        println!("c({la})({}) = {}", n[0], terms.join(" + "));
    }

    let a = alpha(&pair);
    for (z, lz) in h.iter().enumerate() {
        println!("a({lz})({0}⊗{0}) = {1}·{0}", n[0], format_scalar(&a.value(z)[0]));
    }
    println!("cocycles: c {}, a {}", c.is_cocycle(), a.is_cocycle());

    let nmod = pair.quotient_module();
    let hom = hom_module(&tensor_module(&nmod, &nmod)?, &nmod)?;
    println!("dim H¹(h, Hom(n⊗n, n)) = {}", h1_dimension(&hom));
    match is_trivial(&a)? {
        Some(_) => println!("α is trivial"),
        None => println!("α is non-trivial"),
    }
    println!("class independent of the complement: {}", complement_independent(&pair)?);
    Ok(())
}
