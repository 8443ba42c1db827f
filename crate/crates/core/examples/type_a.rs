//! The A_n catalog in one variable: the annihilators (y^k) of the modules
//! R/(y^{i+1}), the resulting chain, and where the minimum is attained.
//!
//! ```text
//! cargo run --example type_a -- 6
//! ```

use mcmtop::catalog::{catalog_a_curve, catalog_a_zero};
use mcmtop::spaces::FiniteAlexandrovSpace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args().nth(1).map_or(Ok(6), |s| s.parse())?;
    let space = FiniteAlexandrovSpace::new(catalog_a_zero(n)?)?;
    println!("A_{n}, f = y^{}", n + 1);
    for i in 0..space.len() {
        println!("  {:<4} {}", space.label(i), space.annihilator(i));
    }
    let kolmogorov = space.kolmogorov_poset();
    println!("{} classes, chain: {}", kolmogorov.len(), kolmogorov.is_chain());
    let c = space.is_compact()?;
    let witnesses: Vec<&str> = c.witnesses.iter().map(|&i| space.label(i)).collect();
    println!("minimum ideal {} at {}", c.minimum_ideal, witnesses.join(", "));

    let curve = FiniteAlexandrovSpace::new(catalog_a_curve(n)?)?;
    let same = kolmogorov.isomorphism(&curve.kolmogorov_poset()).is_some();
    println!("x^2 + y^{} gives the same poset: {same}", n + 1);
    Ok(())
}
