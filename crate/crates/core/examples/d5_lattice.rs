//! The D_5 space: annihilator table, point closures, the closed-set lattice
//! with its covering relations, and a DOT rendering of the lattice.
//!
//! ```text
//! cargo run --example d5_lattice > d5.dot
//! ```

use mcmtop::catalog::catalog_d_odd;
use mcmtop::spaces::FiniteAlexandrovSpace;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = FiniteAlexandrovSpace::new(catalog_d_odd(5)?)?;
    for i in 0..space.len() {
        let closure = space.labels_of(space.point_closure(i)?);
        eprintln!("  {:<4} {:<16} cl = {{{}}}", space.label(i), space.annihilator(i).to_string(), closure.join(", "));
    }
    let lattice = space.enumerate_closed_sets()?;
    for (k, label) in lattice.node_labels().iter().enumerate() {
        eprintln!("  {:>2}  {label}", k + 1);
    }
    let covers: Vec<String> = lattice.hasse_edges().iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
    eprintln!("covers: {}", covers.join(" "));
    print!("{}", lattice.to_dot("d5"));
    Ok(())
}
