//! Normal forms and the degree filtrations F (free) and R (enveloping).
//!
//! Run with `cargo run --example filtrations`.

use pbwgate::lie::{InclusionPair, LieAlgebra};
use pbwgate::linalg::scalar::format_scalar;
use pbwgate::pbw::{build_filtration, gr_check, straighten_g, Side};

fn main() -> pbwgate::Result<()> {
    let pair = InclusionPair::from_indices(LieAlgebra::sl2(), &[0, 1])?;
    for side in [Side::F, Side::R] {
        let f = build_filtration(&pair, side, 4, None)?;
        let dims: Vec<usize> = (0..=4).map(|k| f.level_dim(k)).collect();
        println!("{side:?}: dims {dims:?}, match closed form {}", f.dimensions_match());
        for k in 1..=3 {
            let gr = gr_check(&pair, &f, k)?;
            println!("  gr_{k}: onto {}, kernel {} (as predicted {})", gr.surjective, gr.kernel_dim, gr.kernel_as_predicted);
        }
    }
    // e·f·f = f·e·f + h·f ≡ -2f modulo U(g)h.
    let n = pair.n_labels();
    for (w, c) in straighten_g(&pair, &[0, 2, 2]).iter() {
        let word: Vec<&str> = w.iter().map(|&i| n[i].as_str()).collect();
        println!("e f f ≡ {} · {}", format_scalar(c), word.join(" "));
    }
    Ok(())
}
