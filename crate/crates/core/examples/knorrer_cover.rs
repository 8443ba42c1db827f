//! The double branched cover (φ, ψ) ↦ [[zI, φ], [ψ, -zI]] over f + z²,
//! module by module, and the comparison of Kolmogorov posets.
//!
//! ```text
//! cargo run --example knorrer_cover
//! ```

use mcmtop::catalog::catalog_a_zero;
use mcmtop::matfac::ModulePoint;
use mcmtop::spaces::FiniteAlexandrovSpace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let base = catalog_a_zero(3)?;
    let covers: Vec<ModulePoint> =
        base.iter().map(|p| p.mf().knorrer_cover("z").map(ModulePoint::new)).collect::<Result<_, _>>()?;
    println!("f = {}, cover f + z^2 = {}", base[0].ctx().potential(), covers[0].ctx().potential());
    for (b, c) in base.iter().zip(&covers) {
        println!("  {:<4} {:<8} {:<6} {}", b.label(), b.annihilator().to_string(), c.label(), c.annihilator());
    }
    println!("cover of M_1: phi = {}", covers[1].mf().phi());
    let base = FiniteAlexandrovSpace::new(base)?.kolmogorov_poset();
    let cover = FiniteAlexandrovSpace::new(covers)?.kolmogorov_poset();
    match base.isomorphism(&cover) {
        Some(map) => {
            for (c, d) in map.iter().enumerate() {
                println!("  {} -> {}", base.ideal(c), cover.ideal(*d));
            }
        }
        None => println!("posets differ"),
    }
    Ok(())
}
