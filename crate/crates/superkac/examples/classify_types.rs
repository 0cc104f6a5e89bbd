//! Isotropy and growth classification across the bundled algebras.
//!
//! ```bash
//! cargo run -p superkac --example classify_types
//! ```

use superkac::algebra::zoo;
use superkac::rat::fmt_rat;

fn main() {
    let algebras = [
        zoo::sl2(),
        zoo::osp12(),
        zoo::gl11(),
        zoo::sl21(),
        zoo::sp4(),
        zoo::osp14(),
        zoo::osp9_2(),
        zoo::osp2_4_twisted(),
        zoo::sl2_affine(),
        zoo::osp12_affine(),
        zoo::osp14_affine(),
    ];
    println!(
        "{:<14} {:>12} {:>7} {:>6}  affine data",
        "algebra", "isotropy", "growth", "|B|"
    );
    for alg in algebras {
        let name = alg.name.clone().unwrap_or_default();
        let growth = alg
            .growth()
            .map(|g| g.to_string())
            .unwrap_or_else(|| "mixed".into());
        let affine = match &alg.affine {
            Some(aff) => format!(
                "delta = {:?}, h^vee = {}",
                aff.delta,
                fmt_rat(&aff.dual_coxeter)
            ),
            None => String::new(),
        };
        println!(
            "{:<14} {:>12} {:>7} {:>6}  {}",
            name,
            format!("{:?}", alg.isotropy()),
            growth,
            alg.bases.bases.len(),
            affine
        );
    }
}
