//! Character-level Enright transforms: rank-one constituents, the
//! half-density transform on Verma characters, and numerator transport.
//!
//! ```bash
//! cargo run -p superkac --example enright_transforms
//! ```

use superkac::algebra::zoo;
use superkac::characters::{
    enright_halfdensity_transform, enright_numerator_transform, rank1_enright_verma,
    verma_character, verma_numerator, Rank1Decomposition, Rank1Flavor,
};
use superkac::rat::*;
use superkac::roots::{generate_roots, WeylWord};
use superkac::weights::Weight;

fn main() -> superkac::Result<()> {
    // constituents of localized rank-one Verma modules
    for (flavor, a, b) in [
        (Rank1Flavor::Sl2, q(0), q(3)),
        (Rank1Flavor::Sl2, qr(1, 2), qr(1, 2)),
        (Rank1Flavor::Osp12, qr(1, 3), qr(1, 3)),
        (Rank1Flavor::Sl2, qr(1, 3), qr(1, 2)),
    ] {
        let d = rank1_enright_verma(flavor, &a, &b);
        print!("{:?}, a = {}, b = {}: ", flavor, fmt_rat(&a), fmt_rat(&b));
        match d {
            Rank1Decomposition::Simple => println!("simple"),
            Rank1Decomposition::Sequence { sub, quotient, .. } => println!(
                "0 -> {}M({}) -> D_a(M(b)) -> {}M#({}) -> 0",
                if sub.parity_shift { "Pi " } else { "" },
                fmt_rat(&sub.highest_weight),
                if quotient.parity_shift { "Pi " } else { "" },
                fmt_rat(&quotient.highest_weight),
            ),
        }
    }

    // the half-density transform sends ch M(b) to ch M(-b-2) for sl2
    let alg = zoo::sl2();
    let b = qr(1, 2);
    let ch = verma_character(&alg, &Weight::new(vec![b.clone()]), 10, false)?;
    let table = generate_roots(&alg, 4)?;
    let alpha = table.get(&[1]).unwrap().clone();
    let image = enright_halfdensity_transform(&alg, &ch, &alpha, Rank1Flavor::Sl2, &qr(1, 2))?;
    let expect = verma_character(&alg, &Weight::new(vec![-&b - q(2)]), 10, false)?;
    println!(
        "\nsl2 half-density transform: ch M(1/2) maps to ch M(-5/2): {}",
        image.agrees_with(&alg, &expect)?
    );

    // numerator transport is the exponent action of the word
    let e = verma_numerator(&alg, &Weight::new(vec![qr(1, 2)]));
    let moved = enright_numerator_transform(&alg, &e, &WeylWord(vec![0]))?;
    println!(
        "numerator e^lambda moved by r_alpha: offsets {:?}",
        moved
            .terms
            .keys()
            .map(|k| k.iter().map(fmt_rat).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
    Ok(())
}
