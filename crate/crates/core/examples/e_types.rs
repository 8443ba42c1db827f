//! The E_6, E_7 and E_8 catalogs: annihilator classes, chains, and the
//! isomorphism between the E_7 and D_5 closed-set lattices.
//!
//! ```text
//! cargo run --example e_types
//! ```

use mcmtop::catalog::{catalog_d_odd, catalog_e, EType};
use mcmtop::spaces::FiniteAlexandrovSpace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for which in [EType::E6, EType::E7, EType::E8] {
        let space = FiniteAlexandrovSpace::new(catalog_e(which)?)?;
        let k = space.kolmogorov_poset();
        println!("{which:?}: {} modules, {} classes, chain: {}", space.len(), k.len(), k.is_chain());
        for (c, members) in k.classes().iter().enumerate() {
            println!("  {:<18} {}", k.ideal(c).to_string(), members.iter().map(|&i| space.label(i)).collect::<Vec<_>>().join(", "));
        }
        println!("  closed sets: {}", space.enumerate_closed_sets()?.len());
    }
    let e7 = FiniteAlexandrovSpace::new(catalog_e(EType::E7)?)?.enumerate_closed_sets()?;
    let d5 = FiniteAlexandrovSpace::new(catalog_d_odd(5)?)?.enumerate_closed_sets()?;
    match e7.as_poset().isomorphism(&d5.as_poset()) {
        Some(map) => {
            println!("E7 lattice ≅ D5 lattice:");
            for (i, j) in map.iter().enumerate() {
                println!("  {} -> {}", e7.node_labels()[i], d5.node_labels()[*j]);
            }
        }
        None => println!("E7 and D5 lattices differ"),
    }
    Ok(())
}
