//! Supercharacters: the eps-coefficient ring, evaluation, and the parity
//! automorphism between ch and sch.
//!
//! ```bash
//! cargo run -p superkac --example supercharacters
//! ```

use superkac::algebra::zoo;
use superkac::characters::{super_to_ordinary, verma_character};
use superkac::rat::*;
use superkac::weights::Weight;

fn main() -> superkac::Result<()> {
    let alg = zoo::osp12();
    let lam = Weight::new(vec![qr(1, 5)]);
    let ch_eps = verma_character(&alg, &lam, 6, true)?;
    println!("ch_eps M(lambda) for osp(1|2) (eps marks odd weight spaces):");
    for (off, c) in ch_eps.terms.iter().rev() {
        println!(
            "  offset {:?}: {}+{}eps",
            off.iter().map(fmt_rat).collect::<Vec<_>>(),
            c.c0,
            c.c1
        );
    }

    let ch = ch_eps.eval_eps(1);
    let sch = ch_eps.eval_eps(-1);
    println!(
        "\nch coefficients:  {:?}",
        ch.terms.values().rev().map(|c| c.c0).collect::<Vec<_>>()
    );
    println!(
        "sch coefficients: {:?}",
        sch.terms.values().rev().map(|c| c.c0).collect::<Vec<_>>()
    );

    // the parity automorphism recovers ch from sch (up to the sign
    // convention at the anchor)
    let recovered = super_to_ordinary(&alg, &sch)?;
    println!(
        "\nparity automorphism applied to sch equals ch: {}",
        recovered.agrees_with(&alg, &ch)?
    );
    Ok(())
}
