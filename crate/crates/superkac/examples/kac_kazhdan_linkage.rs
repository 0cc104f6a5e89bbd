//! Kac-Kazhdan pairs and the bounded linkage closure.
//!
//! ```bash
//! cargo run -p superkac --example kac_kazhdan_linkage
//! ```

use superkac::algebra::zoo;
use superkac::rat::*;
use superkac::weights::{kk_pairs, linkage_closure, Weight};

fn main() -> superkac::Result<()> {
    let alg = zoo::osp14();
    let lam = Weight::new(vec![q(2), q(1)]);
    println!("Kac-Kazhdan pairs for osp(1|4), lambda pairings (2, 1), heights <= 14:");
    for p in kk_pairs(&alg, &lam, 14)? {
        println!(
            "  alpha = {:?}, m = {}, target pairings {:?}",
            p.alpha.coords,
            p.m,
            p.target.pairings.iter().map(fmt_rat).collect::<Vec<_>>()
        );
    }

    let sl2 = zoo::sl2();
    let lam = Weight::new(vec![q(3)]);
    for nu in [Weight::new(vec![q(-5)]), Weight::new(vec![q(1)])] {
        println!(
            "sl2: pairing 3 linked to {:?}? {:?}",
            nu.pairings.iter().map(fmt_rat).collect::<Vec<_>>(),
            linkage_closure(&sl2, &lam, &nu, 6, 12)?
        );
    }
    Ok(())
}
