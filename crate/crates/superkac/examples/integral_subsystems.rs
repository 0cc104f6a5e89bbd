//! The integral root subsystem of a weight, its base, and friendly words,
//! on the osp(9|2) worked example.
//!
//! ```bash
//! cargo run -p superkac --example integral_subsystems
//! ```

use superkac::algebra::zoo;
use superkac::rat::{q, qr};
use superkac::subsystems::{
    friendly_word_to_pr, integral_subsystem, is_friendly, subsystem_base, IntegralVariant,
};
use superkac::weights::Weight;

fn main() -> superkac::Result<()> {
    let alg = zoo::osp9_2();
    // lambda = (1/3)(eps1 + eps3) in the distinguished-base pairings
    let lam = Weight::new(vec![qr(1, 3), qr(1, 3), qr(-1, 3), qr(1, 3), q(0)]);

    let slice = integral_subsystem(&alg, &lam, 24, IntegralVariant::Plain)?;
    println!("Delta(lambda)+ for lambda = (1/3)(eps1 + eps3) on osp(9|2):");
    for r in &slice.positive_roots {
        println!("  {:?}", r.coords);
    }

    let base = subsystem_base(&alg, &slice)?;
    println!("\nPi(lambda) (all certified: {}):", base.all_certified());
    for e in &base.elements {
        println!("  {:?}", e.root.coords);
    }

    // transport eps1 - eps3 into the principal base by a friendly word
    let beta = base
        .elements
        .iter()
        .find(|e| e.root.coords == vec![0, 1, 1, 0, 0])
        .expect("eps1 - eps3 in the base");
    let fw = friendly_word_to_pr(&alg, &lam, &beta.root)?;
    println!(
        "\nfriendly word for eps1 - eps3: reflect through {:?}, image {:?}",
        fw.word
            .iter()
            .map(|&g| alg.principal[g].coords.clone())
            .collect::<Vec<_>>(),
        fw.image
    );
    println!(
        "word avoids Delta(lambda): {}",
        is_friendly(&alg, &lam, &fw.word)?
    );
    Ok(())
}
