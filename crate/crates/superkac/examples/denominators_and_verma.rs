//! Weyl denominators and Verma characters in the truncated character ring.
//!
//! ```bash
//! cargo run -p superkac --example denominators_and_verma
//! ```

use superkac::algebra::zoo;
use superkac::characters::{verma_character, verma_numerator, weyl_denominator, DenominatorPart};
use superkac::rat::*;
use superkac::weights::Weight;

fn show(s: &superkac::series::TruncatedSeries, max: usize) {
    for (off, c) in s.terms.iter().rev().take(max) {
        let coeff = match (c.c0, c.c1) {
            (a, 0) => a.to_string(),
            (0, b) => format!("{b}*eps"),
            (a, b) => format!("{a}+{b}*eps"),
        };
        println!(
            "    {:>8}  at offset {:?}",
            coeff,
            off.iter().map(fmt_rat).collect::<Vec<_>>()
        );
    }
}

fn main() -> superkac::Result<()> {
    // osp(1|2): R = (1 - e^{-2beta})/(1 + e^{-beta}) telescopes to 1 - e^{-beta}
    let alg = zoo::osp12();
    let r = weyl_denominator(&alg, 8, DenominatorPart::Full, false)?;
    println!("osp(1|2) denominator R (depth 8, {} terms):", r.terms.len());
    show(&r, 4);

    // the super variant keeps eps on the odd factors
    let r_super = weyl_denominator(&alg, 4, DenominatorPart::Full, true)?;
    println!("\nsuper variant R_eps (depth 4):");
    show(&r_super, 6);

    // Verma character and the identity R ch M(lambda) = e^lambda
    let lam = Weight::new(vec![qr(1, 5)]);
    let ch = verma_character(&alg, &lam, 8, true)?;
    println!("\nch_eps M(lambda) for lambda(beta^vee) = 1/5 (alternating eps):");
    show(&ch, 4);
    let product = r_super.mul(&ch);
    let identity = product.agrees_with(&alg, &verma_numerator(&alg, &lam))?;
    println!("\nR_eps * ch_eps M(lambda) = e^lambda within the window: {identity}");

    // same identity on the affine osp(1|2) with imaginary root factors
    let aff = zoo::osp12_affine();
    let lam = Weight::new(vec![qr(3, 7), qr(-2, 5)]);
    let r = weyl_denominator(&aff, 9, DenominatorPart::Full, false)?;
    let ch = verma_character(&aff, &lam, 9, false)?;
    let ok = r.mul(&ch).agrees_with(&aff, &verma_numerator(&aff, &lam))?;
    println!("osp(1|2)^(1) Verma identity at depth 9: {ok}");
    Ok(())
}
