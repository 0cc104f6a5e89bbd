//! Bounded root generation, principal roots, and Weyl orbits.
//!
//! ```bash
//! cargo run -p superkac --example roots_and_orbits
//! ```

use superkac::algebra::zoo;
use superkac::roots::{generate_roots, weyl_orbit};

fn main() -> superkac::Result<()> {
    let alg = zoo::osp12_affine();
    println!("{} roots with |height| <= 6:", alg.name.clone().unwrap());
    let table = generate_roots(&alg, 6)?;
    for r in table.iter().filter(|r| r.is_positive()) {
        println!(
            "  {:?}  parity {:?}  {:?}  mult {:?}{}",
            r.coords,
            r.parity,
            r.kind,
            r.mult,
            if r.isotropic { "  isotropic" } else { "" }
        );
    }

    println!("\nprincipal roots and their coroots:");
    for p in &alg.principal {
        println!("  {:?}  coroot {:?}", p.coords, p.coroot);
    }

    // the affine Weyl orbit of alpha1 in A1^(1), with witness words
    let aff = zoo::sl2_affine();
    println!("\nA1^(1) orbit of alpha1 up to word length 3:");
    for (point, word) in weyl_orbit(&aff, &[0, 1], 3)? {
        println!("  {:?}  via generators {:?}", point, word.0);
    }
    Ok(())
}
