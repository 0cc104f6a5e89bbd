//! The finite-dimensional isotropic-type criterion: when the restriction of
//! L(lambda) to the even part is a snowflake module.
//!
//! ```bash
//! cargo run -p superkac --example restricted_snowflake
//! ```

use superkac::algebra::zoo;
use superkac::rat::*;
use superkac::weights::{restricted_snowflake_findim, Weight};

fn main() -> superkac::Result<()> {
    let alg = zoo::sl21();
    // rho = 0; the single test value is (lambda+rho)((alpha1+alpha2)^vee)
    for pairings in [
        vec![q(1), q(1)],     // value 2
        vec![q(1), q(-1)],    // value 0
        vec![q(0), q(-1)],    // value -1
        vec![qr(1, 2), q(1)], // non-integral pairing: the factor subsystem is empty
    ] {
        let lam = Weight::new(pairings.clone());
        let report = restricted_snowflake_findim(&alg, &lam, 8)?;
        println!(
            "sl(2|1), lambda = {:?}: restriction snowflake = {} (type {}, factor values {:?})",
            pairings.iter().map(fmt_rat).collect::<Vec<_>>(),
            report.holds,
            if report.type_ii { "II" } else { "I" },
            report
                .factors
                .iter()
                .flat_map(|f| f.values.iter().map(|(_, v)| fmt_rat(v)))
                .collect::<Vec<_>>()
        );
    }
    Ok(())
}
