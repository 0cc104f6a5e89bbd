//! Snowflake numerators and characters: the denominator identity, finite
//! dimensions, and skew invariance.
//!
//! ```bash
//! cargo run -p superkac --example snowflake_characters
//! ```

use superkac::algebra::zoo;
use superkac::characters::{
    skew_invariance_check, snowflake_character, snowflake_numerator, weyl_denominator_rho,
};
use superkac::rat::q;
use superkac::roots::generate_roots_real_only;
use superkac::subsystems::{integral_subsystem_in, subsystem_base, IntegralVariant};
use superkac::weights::Weight;

fn main() -> superkac::Result<()> {
    // the denominator identity: numerator at lambda = 0 equals R e^rho
    for alg in [zoo::sp4(), zoo::osp14(), zoo::osp12_affine()] {
        let num = snowflake_numerator(&alg, &Weight::zero(alg.rank()), 12)?;
        let re_rho = weyl_denominator_rho(&alg, 12, false)?;
        println!(
            "{:<13} numerator(0) = R e^rho within depth 12: {}",
            alg.name.clone().unwrap_or_default(),
            num.agrees_with(&alg, &re_rho)?
        );
    }

    // a finite-dimensional character of sp4 and its dimension
    let alg = zoo::sp4();
    let lam = Weight::new(vec![q(1), q(1)]);
    let ch = snowflake_character(&alg, &lam, 24)?;
    println!(
        "\nsp4, lambda = (1,1): ch L(lambda) has {} weights, total dimension {}",
        ch.terms.iter().filter(|(_, c)| !c.is_zero()).count(),
        ch.coefficient_sum()
    );

    // numerators are skew-invariant under the base of the integral subsystem
    let lam = Weight::new(vec![q(2), q(0)]);
    let num = snowflake_numerator(&alg, &lam, 14)?;
    let table = generate_roots_real_only(&alg, 14)?;
    let slice = integral_subsystem_in(&alg, &table, &lam, 14, IntegralVariant::Plain)?;
    let base = subsystem_base(&alg, &slice)?;
    let roots: Vec<_> = base.elements.iter().map(|e| e.root.clone()).collect();
    for rep in skew_invariance_check(&alg, &num, &roots)? {
        println!(
            "skew-invariant under r at {:?}: {}",
            rep.root, rep.skew_invariant
        );
    }
    Ok(())
}
