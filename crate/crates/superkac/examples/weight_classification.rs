//! Levels, criticality, typicality and the snowflake test.
//!
//! ```bash
//! cargo run -p superkac --example weight_classification
//! ```

use superkac::algebra::zoo;
use superkac::rat::*;
use superkac::weights::{
    is_critical_module, is_snowflake_hw, is_typical, k_lambda0, level, Weight,
};

fn main() -> superkac::Result<()> {
    // levels and criticality on affine sl2 (h^vee = 2)
    let aff = zoo::sl2_affine();
    for k in [q(-2), qr(-1, 2), q(1)] {
        let lam = k_lambda0(&aff, &k)?;
        println!(
            "A1^(1), k = {:>4}: level {}, L(k Lambda0) critical: {}",
            fmt_rat(&k),
            fmt_rat(&level(&aff, &lam)?),
            is_critical_module(&aff, &lam)?
        );
    }

    // typicality on sl(2|1): rho = 0, the isotropic coroot pairings decide
    let sl21 = zoo::sl21();
    for pair in [vec![qr(1, 3), qr(1, 5)], vec![q(0), qr(1, 5)]] {
        let lam = Weight::new(pair.clone());
        println!(
            "sl(2|1), lambda = {:?}: {:?}",
            pair.iter().map(fmt_rat).collect::<Vec<_>>(),
            is_typical(&sl21, &lam, 10)?
        );
    }

    // snowflake positivity over the base of the integral subsystem
    let sl2 = zoo::sl2();
    for n in [q(3), q(-3), qr(1, 2)] {
        let v = is_snowflake_hw(&sl2, &Weight::new(vec![n.clone()]), 10)?;
        println!(
            "sl2, lambda(alpha^vee) = {:>4}: snowflake = {} (values {:?})",
            fmt_rat(&n),
            v.is_snowflake,
            v.values.iter().map(|(_, x)| fmt_rat(x)).collect::<Vec<_>>()
        );
    }
    Ok(())
}
