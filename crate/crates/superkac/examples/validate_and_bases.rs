//! Supermatrix validation and odd-reflection base enumeration.
//!
//! ```bash
//! cargo run -p superkac --example validate_and_bases
//! ```

use superkac::cartan::{enumerate_bases, validate_supermatrix, Parity};
use superkac::rat::q;

fn main() -> superkac::Result<()> {
    // sl(2|1): both simple roots isotropic, three bases in total
    let a = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
    let p = vec![Parity::Odd, Parity::Odd];
    let report = validate_supermatrix(a.clone(), p.clone(), 100)?;
    println!(
        "sl(2|1): valid = {}, closure explored {} bases",
        report.valid, report.bases_seen
    );

    let sm = superkac::cartan::CartanSupermatrix::new(a, p)?;
    let bases = enumerate_bases(&sm, 100)?;
    println!("bases ({}, closed = {}):", bases.bases.len(), bases.closed);
    for b in &bases.bases {
        println!(
            "  simple roots {:?}, parities {:?}, rho' - rho = {:?}",
            b.simple_roots, b.parity, b.rho_offset
        );
    }

    // an invalid pair: zero entries must be symmetric
    let bad = validate_supermatrix(
        vec![vec![q(2), q(-1)], vec![q(0), q(2)]],
        vec![Parity::Even, Parity::Even],
        100,
    )?;
    println!("\n[[2,-1],[0,2]]: valid = {}", bad.valid);
    for v in &bad.violations {
        println!("  violates ({}) at a[{}][{}]", v.axiom, v.row, v.col);
    }
    Ok(())
}
