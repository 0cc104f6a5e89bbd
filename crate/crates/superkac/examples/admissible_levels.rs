//! Admissible levels and the bounded enumeration of snowflake weights at a
//! fixed level, for affine sl2.
//!
//! ```bash
//! cargo run -p superkac --example admissible_levels
//! ```

use superkac::algebra::zoo;
use superkac::rat::*;
use superkac::roots::generate_roots_real_only;
use superkac::subsystems::{integral_subsystem_in, IntegralVariant};
use superkac::weights::{admissible_level, enumerate_snowflake_weights, k_lambda0, Weight};

fn main() -> superkac::Result<()> {
    let alg = zoo::sl2_affine();
    for k in [qr(-1, 2), q(-3), q(0), q(1), qr(-4, 3)] {
        let v = admissible_level(&alg, &k, 24)?;
        println!(
            "k = {:>5}: admissible = {:<5} (rank full: {}, base values {:?})",
            fmt_rat(&k),
            v.admissible,
            v.rank_full,
            v.snowflake
                .values
                .iter()
                .map(|(_, x)| fmt_rat(x))
                .collect::<Vec<_>>()
        );
    }

    // all snowflake weights of level -1/2 with the same integral subsystem
    // as -1/2 Lambda0, modulo delta shifts
    let k = qr(-1, 2);
    let lam0 = k_lambda0(&alg, &k)?;
    let table = generate_roots_real_only(&alg, 24)?;
    let slice = integral_subsystem_in(&alg, &table, &lam0, 24, IntegralVariant::Plain)?;
    let found = enumerate_snowflake_weights(&alg, &k, &slice, 24)?;
    println!("\nS(-1/2; Delta(-1/2 Lambda0)) modulo delta shifts:");
    let rho = Weight::rho(&alg);
    for w in &found {
        println!(
            "  pairings {:?}, (lambda+rho) values on the base {:?}",
            w.pairings.iter().map(fmt_rat).collect::<Vec<_>>(),
            slice
                .positive_roots
                .iter()
                .take(2)
                .map(|r| fmt_rat(&w.add(&rho).pair_coroot(&r.coroot)))
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
