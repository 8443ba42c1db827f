//! The cl_n operator on D_7: for n = 2 the relation "L ∈ cl_2(M)" is not
//! transitive, and the family it generates is much coarser than the
//! Alexandrov topology.
//!
//! ```text
//! cargo run --example d7_cln
//! ```

use mcmtop::catalog::catalog_d_odd;
use mcmtop::spaces::{FiniteAlexandrovSpace, PointSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let space = FiniteAlexandrovSpace::new(catalog_d_odd(7)?)?;
    let n = 2;
    for i in 0..space.len() {
        let cl = space.cl_n_of(i, n)?;
        let closed = space.smallest_cln_closed_containing(PointSet::singleton(i), n)?;
        println!("{:<4} cl_2 = {{{}}}", space.label(i), space.labels_of(cl).join(", "));
        if closed != cl {
            println!("     smallest closed = {{{}}}", space.labels_of(closed).join(", "));
        }
    }
    let family = space.cln_closed_sets(n)?;
    println!("generated family: {} sets (the Alexandrov lattice has {})", family.len(), space.enumerate_closed_sets()?.len());
    let failures = space.find_cln_transitivity_failures(n)?;
    println!("{} triples (N, M, L) with M ∈ cl_2(N), L ∈ cl_2(M), L ∉ cl_2(N), e.g.", failures.len());
    for &(a, b, c) in failures.iter().take(3) {
        println!("  N = {} {}, M = {} {}, L = {} {}", space.label(a), space.annihilator(a), space.label(b), space.annihilator(b), space.label(c), space.annihilator(c));
    }
    Ok(())
}
